import pytest

from sylvester import __version__
from sylvester.cli import EXIT_INTERNAL, EXIT_OK, EXIT_USAGE, main

QUICK = ["--sieve-limit", "4000", "--c-terms", "1000", "--threads", "2"]


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_inverse(capsys):
    assert run(capsys, "inverse", "--f", "sylvester", "--p", "2", "--k", "3") == (EXIT_OK, "0\n", "")
    code, out, _ = run(capsys, "inverse", "--f", "sylvester", "--p", "5", "--k", "2", "--oracle")
    assert (code, out) == (EXIT_OK, "4/9\n")


def test_convolve(capsys):
    code, out, _ = run(capsys, "convolve", "--f", "phibar", "--g", "sylvester", "--p", "2", "--k", "4")
    assert (code, out) == (EXIT_OK, "3\n")
    code, out, _ = run(capsys, "convolve", "--f", "phibar", "--g", "sylvester", "--p", "3", "--k", "1")
    assert out == "8/3\n"


def test_units(capsys):
    code, out, _ = run(capsys, "units", "--primes", "3,5", "--n", "3")
    assert (code, out) == (EXIT_OK, "lhs=6 rhs=6 equal=true\n")
    code, out, _ = run(capsys, "units", "--primes", "3,5,7", "--n", "105", "--brute")
    assert out == "lhs=48 rhs=48 equal=true brute=48\n"


def test_comet_rows(capsys):
    code, out, _ = run(capsys, *QUICK, "comet", "--min", "3", "--max", "1000", "--out", "-")
    assert code == EXIT_OK
    lines = out.splitlines()
    comments = [line for line in lines if line.startswith("#")]
    assert comments[0] == f"# sylvester {__version__}"
    assert "# sieve_limit=4000" in comments
    assert "# c_terms=1000" in comments
    assert "# threads=2" in comments
    assert any(line.startswith("# c=0.66") for line in comments)
    body = [line for line in lines if not line.startswith("#")]
    assert body[0] == "n,g,sylvester,G"
    assert len(body) - 1 == 998
    assert body[1].startswith("3,1,2,")


def test_comet_phi_bar_to_file(capsys, tmp_path):
    path = tmp_path / "comet.csv"
    code, out, _ = run(
        capsys, *QUICK, "comet", "--min", "3", "--max", "100", "--stride", "10", "--phi-bar", "--out", str(path)
    )
    assert (code, out) == (EXIT_OK, "")
    body = [line for line in path.read_text().splitlines() if not line.startswith("#")]
    assert body[0] == "n,g,sylvester,G,phi_bar"
    assert [int(line.split(",")[0]) for line in body[1:]] == list(range(3, 101, 10))


def test_comet_is_byte_identical(capsys):
    first = run(capsys, *QUICK, "comet", "--min", "3", "--max", "1500")
    second = run(capsys, *QUICK, "comet", "--min", "3", "--max", "1500")
    assert first == second


def test_crossover_single_point(capsys):
    code, out, err = run(capsys, *QUICK, "crossover", "--min", "3", "--max", "3")
    assert code == EXIT_OK
    lines = [line for line in out.splitlines() if not line.startswith("#")]
    assert len(lines) == 2
    assert lines[0] == "n,sylvester,G,near_tie"
    assert lines[1].startswith("3,2,")
    assert err.splitlines()[-1] == "violations=1 max_violation_n=3"


def test_crossover_summary_on_stdout_when_writing_a_file(capsys, tmp_path):
    path = tmp_path / "violations.csv"
    code, out, _ = run(capsys, *QUICK, "crossover", "--min", "3", "--max", "3", "--out", str(path))
    assert (code, out) == (EXIT_OK, "violations=1 max_violation_n=3\n")
    body = [line for line in path.read_text().splitlines() if not line.startswith("#")]
    assert len(body) == 2


def test_crossover_verify_claim_fails_on_small_n(capsys):
    code, out, err = run(capsys, *QUICK, "crossover", "--min", "3", "--max", "100", "--verify-claim")
    assert code == EXIT_INTERNAL
    assert "violations=" in err
    assert "error:" in err
    assert "violations=" not in out


@pytest.mark.parametrize(
    "bounds",
    [
        ["--min", "50", "--max", "10"],
        ["--min", "3", "--max", "100", "--stride", "0"],
    ],
)
def test_comet_usage_error_writes_nothing(capsys, tmp_path, bounds):
    code, out, err = run(capsys, *QUICK, "comet", *bounds, "--out", "-")
    assert (code, out) == (EXIT_USAGE, "")
    assert "error:" in err

    path = tmp_path / "comet.csv"
    code, _, _ = run(capsys, *QUICK, "comet", *bounds, "--out", str(path))
    assert code == EXIT_USAGE
    assert not path.exists()


def test_constant(capsys):
    code, out, _ = run(capsys, "constant", "--terms", "2")
    assert code == EXIT_OK
    assert out.startswith("c=0.703125 terms=2 last_prime=5 ")


def test_primorial(capsys):
    code, out, _ = run(capsys, "--sieve-limit", "1000", "primorial", "--check", "phi", "--n", "3")
    assert (code, out) == (EXIT_OK, "check=phi n=3 P=30 exhaustive checked=29 passed=true\n")
    code, out, _ = run(capsys, "--sieve-limit", "1000", "primorial", "--check", "limits", "--n", "3")
    lines = out.splitlines()
    assert lines[:3] == ["n,phi_bar,sylvester", "1,0.5,1", "2,0.33333333333333331,2"]
    index, phi, s = lines[3].split(",")
    assert (index, float(phi), float(s)) == ("3", pytest.approx(4 / 15), pytest.approx(8 / 3))


def test_fiber(capsys):
    code, out, _ = run(capsys, "--sieve-limit", "1000", "fiber", "--f", "sylvester", "--m", "5", "--count", "3")
    assert (code, out) == (EXIT_OK, "value=4/3 witnesses=5,10,20\n")


@pytest.mark.parametrize(
    "argv",
    [
        QUICK + ["comet", "--min", "2", "--max", "10"],
        QUICK + ["comet", "--min", "3", "--max", "2001"],
        ["inverse", "--f", "sylvester", "--p", "4", "--k", "2"],
        ["convolve", "--f", "mobius", "--g", "sylvester", "--p", "3", "--k", "1"],
        ["--sieve-limit", "1000", "primorial", "--check", "sylvester", "--n", "8"],
        ["--sieve-limit", "1000", "fiber", "--f", "phibar", "--m", "7", "--count", "10"],
        ["--chunk-size", "0", "constant", "--terms", "2"],
    ],
)
def test_usage_errors_exit_two(capsys, argv):
    code, out, err = run(capsys, *argv)
    assert code == EXIT_USAGE
    assert "error:" in err


def test_argparse_errors_exit_two(capsys):
    with pytest.raises(SystemExit) as excinfo:
        main(["comet", "--min", "3"])
    assert excinfo.value.code == 2


def test_version(capsys):
    with pytest.raises(SystemExit) as excinfo:
        main(["--version"])
    assert excinfo.value.code == 0
    assert __version__ in capsys.readouterr().out


def test_environment_override(capsys, monkeypatch):
    monkeypatch.setenv("SYLVESTER_SIEVE_LIMIT", "3000")
    code, out, _ = run(capsys, "--c-terms", "1000", "comet", "--min", "3", "--max", "10")
    assert code == EXIT_OK
    assert "# sieve_limit=3000" in out.splitlines()
