import io
import json
import subprocess
import sys

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from coxhecke import affine as aff
from coxhecke.cli import main, parse_affine, parse_word


def run(*argv):
    out = io.StringIO()
    status = main(list(argv), out=out)
    return status, out.getvalue()


def test_reduce_example():
    assert run("reduce", "--preset", "A2", "--", "1", "0", "1", "1", "0") == (0, "1\n")
    assert run("reduce", "--preset", "A2", "--", "0", "0") == (0, "e\n")
    status, text = run("reduce", "--preset", "A2", "--format", "json", "--", "1", "0", "1")
    assert status == 0 and json.loads(text) == {"word": [0, 1, 0], "length": 3}


def test_bound_example():
    assert run("bound", "--n", "2") == (0, "f(z) = 2z - 4\n")
    assert run("bound", "--n", "3") == (0, "f(z) = z - 9\n")
    assert run("bound", "--n", "4", "--corrected") == (0, "f(z) = 2/3 z - 16\n")


def test_support_example():
    status, text = run("support", "--preset", "A2", "--", "x", "0 1", "y", "1 0")
    assert status == 0
    rows = [line.split("\t") for line in text.splitlines()]
    assert [int(r[0]) for r in rows] == [0, 1, 3]
    assert [r[1] for r in rows] == ["e", "0", "0 1 0"]


def test_hecke_mult_formats():
    status, text = run("hecke-mult", "--preset", "A2", "--", "x", "0 1", "y", "1 0")
    assert status == 0
    assert text.splitlines() == ["0\te\t1", "1\t0\tv - v^-1", "3\t0 1 0\tv - v^-1"]
    status, text = run("hecke-mult", "--preset", "A2", "--format", "json", "--", "x", "0 1", "y", "1 0")
    data = json.loads(text)
    assert data[1] == {"word": [0], "length": 1, "coeff": {"1": 1, "-1": -1}}


def test_hecke_weights():
    status, text = run("hecke-mult", "--preset", "B2", "--weights", "1,2", "--", "x", "1", "y", "1")
    assert status == 0 and "v^2 - v^-2" in text


def test_support_upper():
    status, text = run("support-upper", "--preset", "A2", "--", "x", "0", "y", "0")
    assert (status, text) == (0, "0\te\n1\t0\n")


def test_length_and_inversions():
    assert run("length", "--preset", "affine-A1", "--", "0 1 0 1 0 1") == (0, "6\n")
    assert run("length", "w:3,0") == (0, "2\n")
    assert run("length", "--n", "3", "s:0 1 2") == (0, "3\n")
    status, text = run("inversions", "--preset", "A2", "--", "0", "1")
    assert status == 0 and sorted(line.split("\t")[1] for line in text.splitlines()) == ["e0 + e1", "e1"]


def test_system_file(tmp_path):
    path = tmp_path / "g.json"
    path.write_text(json.dumps({"rank": 2, "matrix": [[1, 0], [0, 1]]}))
    assert run("length", "--system", str(path), "--", "0 1 0 1") == (0, "4\n")
    assert run("length", "--system", str(path), "--preset", "A2", "--", "0")[0] == 1


def test_affine_commands():
    assert run("twist", "--n", "3", "--m", "1", "s:0") == (0, "1\t2,1,3\t1\n")
    assert run("translate-length", "l:1,0,-1") == (0, "4\n")
    assert run("sk", "--m", "2", "l:2,0,1") == (0, "1\t4\t2\n2\t4\t1\n")
    status, text = run("enumerate", "--n", "3", "--radius", "2")
    assert status == 0 and len(text.splitlines()) == 10
    status, text = run("small-twist", "--n", "2", "--m", "1", "3")
    assert text.splitlines() == ["0\t1,2\te", "1\t0,3\t0", "1\t2,1\t1"]
    assert run("candidates", "--n", "2", "--m", "1", "s:0 1") == (0, "1\t0,3\t0\n")
    status, text = run("candidates", "--n", "2", "--m", "1", "--format", "json", "w:1,2")
    assert json.loads(text) == [{"length": 0, "window": "1,2", "word": "e"}]


@pytest.mark.parametrize("argv, fragment", [
    (["length", "--preset", "Q7", "--", "0"], "preset"),
    (["length", "--preset", "A2", "--", "0", "x"], "malformed"),
    (["twist", "--n", "4", "--m", "2", "s:0"], "coprime"),
    (["candidates", "--n", "2", "--m", "1", "w:2,3"], "W_a"),
    (["small-twist", "--n", "2", "--m", "1", "0"], "positive"),
    (["sk", "l:1"], "n >= 2"),
    (["length", "w:1,1"], "residues"),
    (["support", "--preset", "A2", "--", "0", "1"], "x <word> y <word>"),
])
def test_domain_errors(argv, fragment, capsys):
    status, text = run(*argv)
    err = capsys.readouterr().err
    assert status == 1 and text == ""
    assert len(err.strip().splitlines()) == 1 and fragment in err


def test_usage_errors():
    for argv in (["nope"], [], ["bound", "--n", "x"], ["reduce", "--format", "xml"]):
        with pytest.raises(SystemExit) as info:
            main(argv)
        assert info.value.code == 2


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "coxhecke", "bound", "--n", "3"], capture_output=True, text=True)
    assert proc.returncode == 0 and proc.stdout == "f(z) = z - 9\n"
    proc = subprocess.run([sys.executable, "-m", "coxhecke", "frobnicate"], capture_output=True, text=True)
    assert proc.returncode == 2


def test_verify_deterministic():
    argv = ["verify", "--preset", "A2", "--radius", "3", "--samples", "20", "--seed", "7", "--no-timing"]
    first, second = run(*argv), run(*argv)
    assert first == second and first[0] == 0
    assert first[1].startswith("# seed=7")


@settings(max_examples=100)
@given(n=st.integers(2, 5), data=st.data())
def test_element_syntax_roundtrip(n, data):
    word = data.draw(st.lists(st.integers(0, n - 1), max_size=10))
    v = aff.from_word(n, word)
    assert parse_affine([f"w:{','.join(map(str, v.window))}"]) == v
    assert parse_affine([f"s:{' '.join(map(str, v.word))}"], n) == v
    lam = data.draw(st.lists(st.integers(-5, 5), min_size=n, max_size=n))
    assert parse_affine([f"l:{','.join(map(str, lam))}"]) == aff.translation(lam)


@settings(max_examples=50)
@given(word=st.lists(st.integers(0, 2), max_size=8))
def test_word_syntax_roundtrip(word):
    assert parse_word(["s:" + " ".join(map(str, word))]) == word
    assert parse_word([" ".join(map(str, word)) or "e"]) == word
