import random

import pytest

from quiverpurity.cli import main
from quiverpurity.exactlin import GF
from quiverpurity.fileio import write_rep, write_sequence
from quiverpurity.kronecker import R, elem, make
from quiverpurity.quiver import kronecker
from quiverpurity.randgen import random_ses

HEAD = "field gf 5\nquiver kronecker\n"


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


@pytest.fixture
def files(tmp_path):
    f = GF(5)
    (tmp_path / "r21.rep").write_text(write_rep(make(R(elem(2)), f)))
    (tmp_path / "h.am").write_text(HEAD + "matrix 1 1\na+2*b\n")
    (tmp_path / "split.ses").write_text(write_sequence(random_ses(kronecker(), f, random.Random(0), 4, split=True)))
    return tmp_path


def test_classify_round_trip(capsys, files):
    code, out, _ = run(capsys, "classify", "--input", str(files / "r21.rep"))
    assert code == 0 and out.splitlines()[0] == "R[2,1]"


def test_split_sequence_is_pure(capsys, files):
    code, out, _ = run(capsys, "is-pure", "--seq", str(files / "split.ses"),
                       "--matrices", str(files / "h.am"), "--method", "all", "--format", "machine")
    assert code == 0 and "verdict=pure" in out.splitlines()


def test_example_exits_zero(capsys):
    code, out, _ = run(capsys, "example-4-3", "--n", "1", "--field", "gf5", "--format", "machine")
    assert code == 0
    assert "all_claims=true" in out.splitlines()
    assert "iv.gen_rad_right_projective=2" in out.splitlines()


def test_construct_and_decompose(capsys, files):
    out_rep = files / "l.rep"
    code, _, _ = run(capsys, "construct-l", "--input", str(files / "h.am"), "--output", str(out_rep))
    assert code == 0
    code, out, _ = run(capsys, "decompose", "--input", str(out_rep), "--format", "machine")
    assert code == 0
    lines = out.splitlines()
    assert {"summand.1=R[2,1]", "summand.2=P0", "verified=true"} <= set(lines)


def test_transpose_translate_and_gen_rel(capsys, files):
    code, out, _ = run(capsys, "translate", "--input", str(files / "r21.rep"))
    assert code == 0 and out.startswith("# seed=")
    tau = files / "tau.rep"
    tau.write_text(out)
    code, out, _ = run(capsys, "classify", "--input", str(tau))
    assert out.splitlines()[0] == "R[2,1]"
    code, out, _ = run(capsys, "gen-rel", "--input", str(files / "r21.rep"), "--format", "machine")
    assert "gen=1" in out.splitlines() and "rel=2" in out.splitlines()


def test_compare_purity(capsys):
    code, out, _ = run(capsys, "compare-purity", "shape=1,1", "shape=aleph0,1", "--format", "machine")
    lines = out.splitlines()
    assert code == 0
    assert "t_implies_s=false" in lines and "witness_s_not_t=I0" in lines and "equivalent=false" in lines


def test_class_commands(capsys):
    code, out, _ = run(capsys, "closure", "--descriptor", "I*>=0", "--format", "machine")
    assert code == 0 and "closure=generic I*>=0 prufer[*]" in out.splitlines()
    code, out, _ = run(capsys, "definable", "--descriptor", "tube[0]>=1", "--format", "machine")
    assert code == 0 and "definable=false" in out.splitlines()
    code, out, _ = run(capsys, "generic-status", "--descriptor", "tube[0]>=1")
    assert code == 1
    code, out, _ = run(capsys, "ind-of-shape", "--shape", "1,1", "--format", "machine")
    assert "class=P0 P1 R*<=1" in out.splitlines() and "count=8" in out.splitlines()


def test_machine_output_is_stable(capsys):
    argv = ["verify", "--suite", "closure", "--seed", "3", "--format", "machine"]
    first = run(capsys, *argv)
    second = run(capsys, *argv)
    assert first == second
    assert first[1].startswith("seed=3\n")


def test_input_errors_exit_two(capsys, files):
    bad = files / "bad.rep"
    bad.write_text(HEAD + "dims 1 1\narrow a\nz\narrow b\n1\n")
    code, _, err = run(capsys, "classify", "--input", str(bad))
    assert code == 2 and "line 5" in err
    assert run(capsys, "classify", "--input", str(files / "missing.rep"))[0] == 2
    assert run(capsys, "classify")[0] == 2
    assert run(capsys, "nope")[0] == 2
    assert run(capsys, "verify", "--suite", "nope")[0] == 2
    assert run(capsys, "is-pure", "--seq", str(files / "split.ses"), "--matrices", str(files / "h.am"),
               "--method", "bogus")[0] == 2
    assert run(capsys, "classify", "--input", str(files / "r21.rep"), "--field", "gf7")[0] == 2


def test_decomposable_input_to_classify_exits_one(capsys, files):
    m = files / "l.rep"
    run(capsys, "construct-l", "--input", str(files / "h.am"), "--output", str(m))
    code, out, _ = run(capsys, "classify", "--input", str(m), "--format", "machine")
    assert code == 1 and "indecomposable=false" in out.splitlines()
