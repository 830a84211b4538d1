import math

import pytest

from fhspectrum.cli import (
    ConfigError,
    RunConfig,
    TableRow,
    emit_csv,
    emit_config,
    parse_config,
    run,
)

EIGEN_ARGS = [
    "eigenvalues", "--natural", "--V0", "-3", "--V2", "10",
    "--kind", "screened-kratzer", "--alpha", "0.1", "--n", "0..2", "--no-figure",
]


def test_eigenvalues_reference_output(capsys):
    assert run(EIGEN_ARGS) == 0
    out = capsys.readouterr().out
    lines = out.splitlines()
    assert lines[0] == "molecule,alpha,n,P_analytic,P_oracle,valid,branch"
    assert lines[1] == "custom,0.1,0,-0.06125,,true,-"
    assert lines[2] == "custom,0.1,1,-0.02,,true,-"
    assert lines[3] == "custom,0.1,2,-0.00308673469,,true,-"
    assert out.endswith("\n")


def test_eigenvalues_output_is_deterministic(capsys):
    assert run(EIGEN_ARGS) == 0
    first = capsys.readouterr().out
    assert run(EIGEN_ARGS) == 0
    assert capsys.readouterr().out == first


def test_eigenvalues_oracle_column(capsys):
    args = EIGEN_ARGS + ["--oracle", "--grid-points", "2000"]
    assert run(args) == 0
    rows = [line.split(",") for line in capsys.readouterr().out.splitlines()[1:]]
    for cells in rows:
        assert cells[6] == "-"
        analytic, oracle = float(cells[3]), float(cells[4])
        assert abs(analytic - oracle) < 1e-5 * abs(analytic)


def test_eigenvalues_past_branch_flip(capsys):
    # n = 3 sits on the other branch: kept in the listing, excluded from oracle
    args = [a if a != "0..2" else "0..3" for a in EIGEN_ARGS]
    assert run(args) == 0
    last = capsys.readouterr().out.splitlines()[-1].split(",")
    assert last[2] == "3"
    assert last[6] == "+"
    assert last[4] == ""


def test_molecule_rows(capsys):
    assert run(["eigenvalues", "--molecule", "h2", "--n", "0..1", "--no-figure"]) == 0
    lines = capsys.readouterr().out.splitlines()
    assert len(lines) == 3
    cells = lines[1].split(",")
    assert cells[0] == "H2"
    assert cells[1] == "0"
    assert cells[6] == "-"
    assert float(cells[3]) < 0.0


def test_molecule_conflicts_with_kind(capsys):
    rc = run(["eigenvalues", "--molecule", "H2", "--kind", "coulomb", "--no-figure"])
    assert rc == 1
    assert "usage error" in capsys.readouterr().err


def test_missing_rate_is_usage_error(capsys):
    rc = run(["eigenvalues", "--V0", "-3", "--no-figure"])
    assert rc == 1
    assert "alpha" in capsys.readouterr().err


def test_spectral_condition_maps_to_exit_2(capsys):
    rc = run(["eigenvalues", "--V0", "-1", "--V2", "-5", "--alpha", "0.1", "--no-figure"])
    assert rc == 2
    assert "numerical error" in capsys.readouterr().err


def test_unknown_command_is_usage_error(capsys):
    assert run(["spectrumify"]) == 1
    assert run([]) == 1


def test_config_round_trip():
    cfg = RunConfig(units="natural", V0=-3.0, V2=10.0, kind="screened-kratzer",
                    alphas=(0.1,), n_lo=0, n_hi=2, grid_points=2500, tolerance=1e-6)
    assert parse_config(emit_config(cfg)) == cfg
    assert parse_config(emit_config(RunConfig())) == RunConfig()


def test_config_parsing(tmp_path, capsys):
    text = "\n".join([
        "# comment",
        "units = natural",
        "V0 = -3",
        "V2 = 10",
        "kind = screened-kratzer",
        "alpha = 0.1",
        "n = 0..2",
        "",
    ])
    cfg = parse_config(text)
    assert cfg.V0 == -3.0 and cfg.V2 == 10.0
    assert cfg.alphas == (0.1,)
    assert (cfg.n_lo, cfg.n_hi) == (0, 2)

    path = tmp_path / "run.cfg"
    path.write_text(text)
    assert run(["eigenvalues", "--config", str(path), "--no-figure"]) == 0
    assert capsys.readouterr().out.splitlines()[1] == "custom,0.1,0,-0.06125,,true,-"


def test_config_cli_precedence(tmp_path, capsys):
    path = tmp_path / "run.cfg"
    path.write_text("V0 = -3\nV2 = 10\nkind = screened-kratzer\nalpha = 0.1\nn = 1..1\n")
    assert run(["eigenvalues", "--config", str(path), "--V0", "-4", "--no-figure"]) == 0
    row = capsys.readouterr().out.splitlines()[1].split(",")
    # the command-line strength wins over the file
    assert row[3] != "-0.02"


def test_config_errors():
    with pytest.raises(ConfigError, match="line 2"):
        parse_config("V0 = -3\nV0 = oops\n")
    with pytest.raises(ConfigError, match="line 1"):
        parse_config("what even is this\n")
    with pytest.raises(ConfigError, match="unknown key"):
        parse_config("V9 = 1\n")
    with pytest.raises(ConfigError, match="units"):
        parse_config("units = imperial\n")
    with pytest.raises(ConfigError, match="kind"):
        parse_config("kind = morse\n")


def test_missing_config_file(capsys):
    assert run(["eigenvalues", "--config", "/no/such/file.cfg", "--no-figure"]) == 1
    assert "usage error" in capsys.readouterr().err


def test_csv_formatting():
    rows = [
        TableRow("H2", 0.1, 0, -0.061250000001, None, True, "-"),
        TableRow("H2", 0.1, 1, -1.0 / 3.0, -0.5, False, "+", 2e-12),
    ]
    text = emit_csv(rows, with_delta=True)
    lines = text.splitlines()
    assert lines[0].endswith(",delta_vs_paper")
    assert lines[1].split(",")[4] == ""
    assert lines[2].split(",")[3] == "-0.333333333"  # 9 significant digits
    assert lines[2].split(",")[5] == "false"
    assert lines[2].split(",")[7] == "2e-12"


def test_wavefunction_files(tmp_path):
    out = tmp_path / "wf2.csv"
    args = ["wavefunction", "--natural", "--V0", "-3", "--V2", "10",
            "--kind", "screened-kratzer", "--alpha", "0.1", "--n", "2",
            "--output", str(out)]
    assert run(args) == 0
    lines = out.read_text().splitlines()
    assert lines[0] == "t,psi"
    assert len(lines) == 401
    assert (tmp_path / "wf2.png").exists()

    raw = tmp_path / "raw.csv"
    assert run(args[:-1] + [str(raw), "--raw", "--no-figure"]) == 0
    assert not (tmp_path / "raw.png").exists()
    scaled = float(lines[200].split(",")[1])
    unscaled = float(raw.read_text().splitlines()[200].split(",")[1])
    assert scaled != unscaled


def test_wavefunction_level_must_be_single(capsys):
    rc = run(["wavefunction", "--V0", "-3", "--V2", "10", "--kind", "screened-kratzer",
              "--alpha", "0.1", "--n", "0..2", "--no-figure"])
    assert rc == 1


def test_potential_curve(tmp_path):
    out = tmp_path / "pot.csv"
    base = ["potential-curve", "--natural", "--V0", "-3", "--V2", "10",
            "--kind", "screened-kratzer", "--alpha", "0.1",
            "--t-min", "0.5", "--t-max", "20", "--output", str(out)]
    assert run(base) == 0
    lines = out.read_text().splitlines()
    assert lines[0] == "t,V"
    assert (tmp_path / "pot.png").exists()
    t1, v1 = (float(x) for x in lines[1].split(","))
    assert v1 > 0.0  # repulsive core dominates near the origin

    approx = tmp_path / "approx.csv"
    assert run(base[:-1] + [str(approx), "--approx", "--no-figure"]) == 0
    v1_approx = float(approx.read_text().splitlines()[1].split(",")[1])
    assert v1_approx != v1


def test_table_structure(tmp_path):
    out = tmp_path / "skp.csv"
    assert run(["table", "--which", "skp", "--output", str(out)]) == 0
    lines = out.read_text().splitlines()
    assert lines[0] == "molecule,alpha,n,P_analytic,P_oracle,valid,branch,delta_vs_paper"
    assert len(lines) == 81  # 5 molecules x 4 rates x 4 levels
    assert (tmp_path / "skp.png").exists()
    molecules = {line.split(",")[0] for line in lines[1:]}
    assert molecules == {"TiH", "ScN", "H2", "CuLi", "I2"}
    # every caption-parameter momentum is negative, and deltas are attached
    for line in lines[1:]:
        cells = line.split(",")
        assert float(cells[3]) < 0.0
        assert cells[7] != ""


def test_table_without_reference(capsys):
    assert run(["table", "--which", "hellmann", "--no-reference", "--no-figure",
                "--molecules", "H2", "--alphas", "0.1"]) == 0
    lines = capsys.readouterr().out.splitlines()
    assert lines[0] == "molecule,alpha,n,P_analytic,P_oracle,valid,branch"
    assert len(lines) == 5


def test_table_usage_errors(capsys):
    assert run(["table", "--which", "kratzer", "--no-figure"]) == 1
    assert "molecule" in capsys.readouterr().err
    assert run(["table", "--which", "hellmann", "--params", "molecule", "--no-figure"]) == 1
    capsys.readouterr()


def test_kratzer_table_by_molecule(capsys):
    assert run(["table", "--which", "kratzer", "--params", "molecule", "--no-figure"]) == 0
    lines = capsys.readouterr().out.splitlines()
    assert len(lines) == 21  # 5 molecules x 1 rate x 4 levels
    assert all(line.split(",")[1] == "0" for line in lines[1:])


def test_verify_passes(capsys):
    assert run(["verify", "--seed", "7", "--cases", "3", "--levels", "2"]) == 0
    out = capsys.readouterr().out
    assert "ok" in out.lower() or "pass" in out.lower()
