import subprocess
import sys

from kuwork.cli import run


def test_check_example_table_fails_with_witness(fixtures):
    status, text = run(["check", str(fixtures / "example_a5.ku")])
    assert status == 1
    assert "KU1: FAIL (0,4,2)" in text
    assert "loop clause (y*x)*x fails at (1,1)" in text


def test_check_genuine_algebra_passes(fixtures):
    status, text = run(["check", str(fixtures / "chain3.ku")])
    assert status == 0
    assert "ku-axioms [algebra n=3]: pass" in text


def test_check_broken_table(fixtures):
    status, text = run(["check", str(fixtures / "broken_n2.ku")])
    assert status == 1
    assert "KU1: FAIL (0,0,1)" in text


def test_fuzzy_both_on_second_fixture(fixtures):
    status, text = run(["fuzzy", "--kind", "both", str(fixtures / "example_b5.ku")])
    assert status == 1
    assert "left: ok" in text and "right: FAIL (0,1,4)" in text


def test_records_format(fixtures):
    status, text = run(["fuzzy", "--kind", "left", "--format", "records", str(fixtures / "example_b5.ku")])
    assert status == 0
    assert text.splitlines()[0].split("\t")[2] == "pass"


def test_derive_enumerate(fixtures):
    status, text = run(["derive", "--enumerate", str(fixtures / "example_a5.ku")])
    assert status == 0
    assert "3 both derivation(s)" in text


def test_usage_errors(fixtures, tmp_path):
    assert run(["check", str(tmp_path / "missing.ku")])[0] == 2
    bad = tmp_path / "bad.ku"
    bad.write_text("n 2\n0 5\n0 0\n")
    status, text = run(["check", str(bad)])
    assert status == 2 and "line 2, column 3" in text
    assert run(["enumerate", "--size", "5"])[0] == 2
    assert run(["sweep", "--suite", "nonsense", "--size", "2"])[0] == 2
    assert run(["bogus"])[0] == 2


def test_enumerate_output_is_parseable():
    status, text = run(["enumerate", "--size", "3"])
    assert status == 0
    from kuwork.textio import parse_bundle
    assert len(parse_bundle(text).algebras()) == 3


def test_product_command(fixtures):
    status, text = run(["product", str(fixtures / "chain3.ku")])
    assert status in (0, 1)
    assert "n 9" in text


def test_sweep_deterministic():
    argv = ["sweep", "--suite", "regularity,derivation-props,meet-left", "--size", "3", "--format", "records"]
    first, second = run(argv), run(argv)
    assert first == second
    assert first[0] == 0


def test_sweep_reports_failures():
    status, text = run(["sweep", "--suite", "lemmas-left", "--size", "2", "--format", "records"])
    assert status == 1
    assert any(line.split("\t")[2] == "fail" for line in text.splitlines() if not line.startswith("#"))


def test_output_file(fixtures, tmp_path):
    out = tmp_path / "report.txt"
    status, text = run(["check", "--output", str(out), str(fixtures / "chain3.ku")])
    assert status == 0 and text == ""
    assert "pass" in out.read_text()


def test_console_entry_point(fixtures):
    proc = subprocess.run([sys.executable, "-m", "kuwork", "check", str(fixtures / "broken_n2.ku")],
                          capture_output=True, text=True)
    assert proc.returncode == 1
    assert "KU1: FAIL" in proc.stdout
