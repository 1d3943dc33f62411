import json

import pytest

from fanog2 import cli


def _run(args):
    return cli.main(args)


def _read(path):
    with open(path) as fh:
        return fh.read()


def test_verify_single_suite(tmp_path):
    out = tmp_path / "report.txt"
    assert _run(["verify", "fano", "--out", str(out)]) == 0
    text = _read(out)
    assert "overall PASS" in text
    assert "AC1.size" in text


def test_verify_json_structure(tmp_path):
    out = tmp_path / "report.json"
    assert _run(["verify", "radon", "--json", "--out", str(out)]) == 0
    data = json.loads(_read(out))
    assert data["pass"] is True
    suite = data["suites"][0]
    assert suite["suite"] == "radon"
    for check in suite["checks"]:
        assert check["pass"] is True
        assert check["claim"].startswith("AC")
        assert check["description"]


def test_verify_all_deterministic_with_cache(tmp_path):
    cache = tmp_path / "cache"
    a = tmp_path / "a.json"
    b = tmp_path / "b.json"
    assert _run(["verify", "lifting", "--json", "--cache-dir", str(cache),
                 "--out", str(a)]) == 0
    assert (cache / "aug-group.json").exists()
    assert _run(["verify", "lifting", "--json", "--cache-dir", str(cache),
                 "--out", str(b)]) == 0
    assert _read(a) == _read(b)


def test_enumerate_counts(tmp_path):
    expected = {"aut": 168, "comp-factors": 16, "oriented-maps": 8}
    for target, count in expected.items():
        out = tmp_path / (target + ".jsonl")
        assert _run(["enumerate", target, "--out", str(out)]) == 0
        lines = _read(out).strip().splitlines()
        assert len(lines) == count
        for line in lines:
            json.loads(line)


def test_enumerate_aug_aut(tmp_path):
    out = tmp_path / "aug.jsonl"
    cache = tmp_path / "cache"
    assert _run(["enumerate", "aug-aut", "--cache-dir", str(cache),
                 "--out", str(out)]) == 0
    lines = _read(out).strip().splitlines()
    assert len(lines) == 1344
    rec = json.loads(lines[0])
    assert set(rec) == {"perm", "sign_mask", "order"}


def test_tables(tmp_path):
    out = tmp_path / "oct.txt"
    assert _run(["table", "octonion", "--out", str(out)]) == 0
    assert "e1" in _read(out)
    assert _run(["table", "brackets", "--json", "--out", str(out)]) == 0
    json.loads(_read(out))


def test_diagrams(tmp_path):
    out = tmp_path / "d.txt"
    assert _run(["diagram", "delta-star", "--format", "dot",
                 "--out", str(out)]) == 0
    assert _read(out).count("graph ") == 8
    assert _run(["diagram", "delta", "--format", "text",
                 "--out", str(out)]) == 0
    assert len(_read(out).strip().splitlines()) == 64
    assert _run(["diagram", "delta", "--format", "dot",
                 "--out", str(out)]) == 0
    assert _read(out).count("graph ") == 64


def test_usage_errors():
    with pytest.raises(SystemExit) as exc:
        _run(["verify", "nonsense"])
    assert exc.value.code == 2
    with pytest.raises(SystemExit) as exc:
        _run(["frobnicate"])
    assert exc.value.code == 2
    assert _run([]) == 2


def test_field_descriptor_gate():
    assert _run(["verify", "fano", "--field", "zzz", "--out", "/dev/null"]) == 2
    assert _run(["verify", "fano", "--field", "fp:11",
                 "--out", "/dev/null"]) == 0
