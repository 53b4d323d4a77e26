import json

from click.testing import CliRunner

from brauer_decomp.cli import cli


def invoke(*args):
    return CliRunner().invoke(cli, list(args))


def test_counts_run_and_verify(tmp_path):
    r = invoke("run", "--stages", "counts", "--out", str(tmp_path), "--verify")
    assert r.exit_code == 0, r.output
    for n in ("35840", "26880", "8960", "277760"):
        assert n in r.output
    r = invoke("verify", str(tmp_path / "counts-000.json"))
    assert r.exit_code == 0 and "pass" in r.output


def test_mt3_run_bit_flip_and_seed_independence(tmp_path):
    r = invoke("run", "--stages", "mt3,tignol", "--seed", "3", "--out", str(tmp_path / "a"))
    assert r.exit_code == 0, r.output
    path = tmp_path / "a" / "mt3-000.json"
    doc = json.loads(path.read_text())
    inv = doc["expressions"]["over_L"]["invariants"]
    inv[0][1] = inv[0][1] % inv[0][2] + 1 if inv[0][1] + 1 < inv[0][2] else 1
    bad = tmp_path / "bad.json"
    bad.write_text(json.dumps(doc))
    r = invoke("verify", str(bad))
    assert r.exit_code == 1 and "over_L" in r.output
    # verification does not depend on the seed that produced the certificate
    r = invoke("run", "--stages", "mt3", "--seed", "8", "--out", str(tmp_path / "b"))
    r = invoke("verify", str(path), str(tmp_path / "b" / "mt3-000.json"))
    assert r.exit_code == 0, r.output


def test_oracle_tables():
    r = invoke("oracle", "(t,2)_3")
    assert r.exit_code == 0
    assert "(t): 2/3" in r.output and "inf: 1/3" in r.output and "exponent: 3" in r.output
    assert "(empty table)" in invoke("oracle", "(t,1-t)_3").output
    body = lambda out: out.split("\n", 1)[1]  # noqa: E731
    assert body(invoke("oracle", "3*(t,2)_9").output) == body(invoke("oracle", "(t,2)_3").output)


def test_oracle_from_file(tmp_path):
    f = tmp_path / "e.txt"
    f.write_text("(t,2)_3 - (t,2)_3\n")
    r = invoke("oracle", "--file", str(f))
    assert r.exit_code == 0 and "(empty table)" in r.output


def test_usage_errors_exit_2():
    assert invoke("run", "--q", "17").exit_code == 2
    assert invoke("run", "--stages", "bogus").exit_code == 2
    r = invoke("oracle", "(t,2")
    assert r.exit_code == 2 and "position 4" in r.output
    assert invoke("run", "--specializations", "x").exit_code == 2


def test_unreadable_certificate_fails(tmp_path):
    f = tmp_path / "x.json"
    f.write_text("[1, 2]")
    assert invoke("verify", str(f)).exit_code == 1
