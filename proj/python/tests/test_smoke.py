import pytest

import derangebij as db

P = db.Permutation.parse


def test_phi_examples():
    t = db.phi("001322")
    assert t.perm == P("21543")
    assert t.perm == P("(2,1)(5,3)(4)")
    assert t.summand == "reduced"
    assert db.phi([0, 1, 0, 2, 2, 3, 0]).perm.one_line() == [2, 5, 7, 4, 3, 6, 1]
    assert db.phi_cyclic("0102230") == db.phi("0102230")
    assert str(db.phi_inverse(t)) == "001322"


def test_trace_rows():
    rows = db.phi_trace("001322")
    assert [r["k"] for r in rows] == [1, 2, 3, 4, 5, 6]
    assert [r["w"] for r in rows] == [None, "R", 1, 3, 3, "R"]
    assert rows[4]["sigma"] == P("21543")


def test_codec_and_ext():
    assert db.encode_word("0102230") == "112R31"
    assert str(db.decode_word("R133R")) == "001322"
    assert len(db.avoiders(4)) == 19
    assert db.ext(1, "010223") == P("2574361")
    a, e = db.ext_inverse(P("2574361"))
    assert (a, str(e)) == (1, "010223")


def test_recurrence_maps():
    s = db.varphi(P("(1,2,3)(4)"))
    assert (s.label, s.perm) == (2, P("(2)(1,3)"))
    assert db.varphi_inverse(s) == P("(1,2,3)(4)")
    assert db.varphi_alt_inverse(db.varphi_alt(P("(1,2)(3)(4)"))) == P("(1,2)(3)(4)")
    m = db.theta(P("(1,2)(3,5,6,4)(7)"))
    assert m == db.MarkedPermutation.parse("(*1)(2,5)(3,6,4)(7)")
    assert db.theta_inverse(m) == P("(1,2)(3,5,6,4)(7)")
    d = db.derangement_split(P("(1,2)(3,4)"))
    assert db.derangement_split_inverse(d) == P("(1,2)(3,4)")


def test_counts_are_exact_ints():
    assert [db.count_inv000(n) for n in range(1, 8)] == [1, 2, 5, 19, 91, 531, 3641]
    assert db.count_non_derangements(7, "enumerate") == 3186
    assert db.count_derangements(30) == 97581073836835777732377428235481


def test_verification():
    for name in ["phi", "varphi", "varphi-alt", "split", "theta", "ext"]:
        report = db.verify_bijection(name, 6, jobs=2)
        assert report["passed"], report
    assert db.verify_identity("eq6", 9)["passed"]


def test_errors():
    with pytest.raises(db.ParseError):
        P("(1,2")
    with pytest.raises(ValueError):
        db.phi("0001")
    with pytest.raises(ValueError):
        db.theta(P("2143"))
