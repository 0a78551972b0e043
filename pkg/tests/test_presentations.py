import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from test_utils import element, elements, polynomials, root_system, schubert_sums, za

from eqschubert.polynomial import DoublePolynomial, linear_t, linear_x
from eqschubert.presentations.borel import BorelClass, dd_borel
from eqschubert.presentations.convert import (
    NonReducedWord,
    borel_to_gkm,
    borel_to_schubert,
    convert,
    dd_word,
    gkm_to_borel,
    gkm_to_schubert,
    presentation_of,
    schubert_to_borel,
    schubert_to_gkm,
    weyl_act,
)
from eqschubert.presentations.gkm import (
    GKMClass,
    GKMConditionError,
    InsufficientCutoff,
    dd_gkm,
    gkm_violations,
    multiply_gkm,
    weyl_act_gkm,
)
from eqschubert.presentations.schubert import (
    SchubertSum,
    chevalley_multiply,
    dd_schubert,
    unit,
    weyl_act_schubert,
)
from eqschubert.roots import RootSystemMismatch, fundamental_weight
from eqschubert.weyl import reduced_word, simple_reflection


def _table(type_text, entries):
    rs = root_system(type_text)
    return GKMClass(rs, rs.num_positive_roots, {element(type_text, w): za(type_text, f) for w, f in entries.items()})


# the worked SU(3) example, in zA coordinates

F = "t1*x1*x2"

H_TABLE = {
    "e": "t1^2*t2",
    "1": "t1^2*t2",
    "2": "t1^2*t3",
    "1,2": "t1*t2*t3",
    "2,1": "t1^2*t3",
    "1,2,1": "t1*t2*t3",
}

DELTA2_H_TABLE = {
    "e": "t1^2",
    "1": "t1*t2",
    "2": "t1^2",
    "1,2": "t1*t2",
    "2,1": "t1*t3",
    "1,2,1": "t1*t3",
}

X_S2_TABLE = {"e": "0", "1": "0", "2": "t3 - t2", "1,2": "t3 - t1", "2,1": "t3 - t2", "1,2,1": "t3 - t1"}

X_S1S2_TABLE = {"e": "0", "1": "0", "2": "0", "1,2": "(t2 - t1)*(t3 - t1)", "2,1": "0", "1,2,1": "(t3 - t1)*(t2 - t1)"}


def _f():
    return BorelClass(root_system("A2"), za("A2", F))


def test_borel_to_gkm_worked_example():
    assert borel_to_gkm(_f(), 3) == _table("A2", H_TABLE)


def test_gkm_divided_differences_worked_example():
    h = _table("A2", H_TABLE)
    assert dd_gkm(2, h) == _table("A2", DELTA2_H_TABLE)
    assert dd_gkm(1, dd_gkm(2, h)) == _table("A2", {w: "t1" for w in H_TABLE})
    assert dd_gkm(1, h).is_zero


def test_gkm_to_schubert_worked_example():
    expected = SchubertSum.from_terms(
        root_system("A2"),
        [
            (element("A2", "e"), za("A2", "t1^2*t2")),
            (element("A2", "2"), za("A2", "t1^2")),
            (element("A2", "1,2"), za("A2", "t1")),
        ],
    )
    assert gkm_to_schubert(_table("A2", H_TABLE)) == expected
    assert borel_to_schubert(_f()) == expected


def test_localization_tables_worked_example():
    rs = root_system("A2")
    assert schubert_to_gkm(SchubertSum.basis(element("A2", "2")), 3) == _table("A2", X_S2_TABLE)
    assert schubert_to_gkm(SchubertSum.basis(element("A2", "1,2")), 3) == _table("A2", X_S1S2_TABLE)
    constant = SchubertSum.basis(element("A2", "e"), za("A2", "t1^2*t2"))
    assert schubert_to_gkm(constant, 3) == GKMClass.constant(rs, 3, za("A2", "t1^2*t2"))


def test_schubert_expansion_reassembles_the_class():
    expansion = borel_to_schubert(_f())
    assert schubert_to_gkm(expansion, 3) == borel_to_gkm(_f(), 3)
    assert borel_to_gkm(schubert_to_borel(expansion), 3) == borel_to_gkm(_f(), 3)


# structural properties


def test_chevalley_formula():
    rs = root_system("A2")
    omega1 = fundamental_weight(rs, 1)
    e, s1 = element("A2", "e"), element("A2", "1")
    expected = SchubertSum.from_terms(rs, [(e, DoublePolynomial.t(2, 1)), (s1, -1)])
    assert chevalley_multiply(omega1, unit(rs)) == expected


@pytest.mark.parametrize("type_text", ["A2", "C2", "G2"])
def test_chevalley_matches_localization(type_text):
    rs = root_system(type_text)
    n = rs.num_positive_roots
    for i in range(1, rs.n + 1):
        omega = fundamental_weight(rs, i)
        omega_gkm = borel_to_gkm(BorelClass(rs, linear_x(rs, omega)), n)
        for w in elements(rs):
            s = SchubertSum.basis(w)
            assert schubert_to_gkm(chevalley_multiply(omega, s), n) == omega_gkm * schubert_to_gkm(s, n)


@pytest.mark.parametrize("type_text", ["A2", "C2", "G2"])
def test_conversions_commute_with_divided_differences(type_text):
    rs = root_system(type_text)
    n = rs.num_positive_roots
    for w in elements(rs):
        s = SchubertSum.basis(w, linear_t(rs, rs.positive_roots[-1]))
        h = schubert_to_gkm(s, n)
        for i in range(1, rs.n + 1):
            assert schubert_to_gkm(dd_schubert(i, s), n) == dd_gkm(i, h)


@pytest.mark.parametrize("type_text", ["A2", "C2", "G2"])
def test_weyl_action_agrees_across_presentations(type_text):
    rs = root_system(type_text)
    n = rs.num_positive_roots
    for w in elements(rs):
        s = SchubertSum.basis(w)
        h = schubert_to_gkm(s, n)
        for i in range(1, rs.n + 1):
            si = simple_reflection(rs, i)
            assert schubert_to_gkm(weyl_act_schubert(i, s), n) == weyl_act_gkm(si, h)


@pytest.mark.parametrize("type_text", ["A2", "C2"])
def test_weyl_action_on_borel_matches_gkm(type_text):
    rs = root_system(type_text)
    n = rs.num_positive_roots
    f = BorelClass(rs, linear_x(rs, rs.positive_roots[-1]) ** 2 + linear_t(rs, rs.positive_roots[0]))
    for w in elements(rs):
        assert borel_to_gkm(weyl_act(f, w), n) == weyl_act(borel_to_gkm(f, n), w)
        assert schubert_to_gkm(weyl_act(borel_to_schubert(f), w), n) == weyl_act(borel_to_gkm(f, n), w)
        assert weyl_act(f, reduced_word(w)) == weyl_act(f, w)


@pytest.mark.parametrize("type_text", ["A2", "C2"])
def test_round_trips_on_the_schubert_basis(type_text):
    rs = root_system(type_text)
    n = rs.num_positive_roots
    for w in elements(rs):
        s = SchubertSum.basis(w)
        assert gkm_to_schubert(schubert_to_gkm(s, n)) == s
        assert borel_to_schubert(schubert_to_borel(s)) == s
        assert gkm_to_borel(schubert_to_gkm(s, n)) == schubert_to_borel(s)


@pytest.mark.parametrize("type_text", ["A2", "C2"])
def test_gkm_classes_satisfy_the_edge_condition(type_text):
    rs = root_system(type_text)
    n = rs.num_positive_roots
    for w in elements(rs):
        h = schubert_to_gkm(SchubertSum.basis(w), n)
        assert gkm_violations(h) == []
        h.validate()


def test_edge_condition_violation_is_reported():
    rs = root_system("A2")
    values = {v: DoublePolynomial.zero(2) for v in elements(rs)}
    values[element("A2", "1")] = DoublePolynomial.t(2, 1)
    h = GKMClass(rs, 3, values)
    assert gkm_violations(h)
    with pytest.raises(GKMConditionError):
        h.validate()
    with pytest.raises(GKMConditionError):
        dd_gkm(1, h)


@settings(max_examples=25, deadline=None)
@given(polynomials(3, max_degree=3))
def test_random_a3_borel_classes(f):
    rs = root_system("A3")
    h = borel_to_gkm(BorelClass(rs, f), 6)
    assert gkm_violations(h) == []
    assert gkm_to_schubert(h) == borel_to_schubert(BorelClass(rs, f))


@settings(max_examples=10, deadline=None)
@given(polynomials(2, max_degree=3))
def test_random_g2_borel_classes(f):
    rs = root_system("G2")
    h = borel_to_gkm(BorelClass(rs, f), 6)
    assert gkm_violations(h) == []
    assert schubert_to_gkm(borel_to_schubert(BorelClass(rs, f)), 6) == h


BRAID_PAIRS = [((1, 2, 1), (2, 1, 2)), ((1, 3, 2), (3, 1, 2)), ((2, 3, 2), (3, 2, 3)), ((1, 2, 3, 2), (1, 3, 2, 3))]


@settings(max_examples=100, deadline=None)
@pytest.mark.slow
@given(schubert_sums(root_system("A3"), max_length=4))
def test_divided_differences_do_not_depend_on_the_reduced_word(s):
    h = schubert_to_gkm(s, 6)
    f = schubert_to_borel(s)
    for a, b in BRAID_PAIRS:
        assert dd_word(s, a) == dd_word(s, b)
        assert dd_word(h, a) == dd_word(h, b)
        assert dd_word(f, a) == dd_word(f, b)


@settings(max_examples=50, deadline=None)
@pytest.mark.slow
@given(schubert_sums(root_system("A3"), max_length=4, max_coefficient_degree=2))
def test_random_a3_round_trips(s):
    h = schubert_to_gkm(s, 6)
    assert gkm_to_schubert(h) == s
    assert borel_to_schubert(schubert_to_borel(s)) == s
    assert convert(convert(s, "borel"), "gkm") == h


@settings(max_examples=50, deadline=None)
@given(
    st.sampled_from(["A2", "C2"]).flatmap(
        lambda t: st.tuples(schubert_sums(root_system(t), max_length=3, max_coefficient_degree=2), st.integers(1, 2))
    )
)
def test_simple_reflections_act_as_involutions(case):
    s, i = case
    assert weyl_act_schubert(i, weyl_act_schubert(i, s)) == s


def test_divided_difference_on_borel():
    f = _f()
    assert dd_borel(2, f).rep == za("A2", "t1*x1")
    assert dd_borel(1, f).rep.is_zero
    assert dd_word(f, (1, 2)).rep == za("A2", "t1")
    with pytest.raises(NonReducedWord):
        dd_word(f, (1, 1))


def test_truncated_classes():
    rs = root_system("E8")
    s2 = SchubertSum.basis(element("E8", "2"))
    h = schubert_to_gkm(s2, 2)
    assert not h.complete
    assert h.cutoff == 2
    assert dd_gkm(2, h).cutoff == 1
    assert gkm_to_schubert(h) == s2
    with pytest.raises(InsufficientCutoff):
        s42 = SchubertSum.basis(element("E8", "4,2"), linear_t(rs, rs.positive_roots[0]))
        gkm_to_schubert(schubert_to_gkm(s42, 2))
    with pytest.raises(InsufficientCutoff):
        weyl_act_gkm(element("E8", "1,3,4"), h)
    with pytest.raises(InsufficientCutoff):
        h.restrict(3)


def test_gkm_arithmetic():
    rs = root_system("A2")
    f = _f()
    g = BorelClass(rs, za("A2", "x1 - t2"))
    assert multiply_gkm(borel_to_gkm(f, 3), borel_to_gkm(g, 3)) == borel_to_gkm(f * g, 3)
    assert borel_to_gkm(f, 3) + borel_to_gkm(g, 3) == borel_to_gkm(f + g, 3)
    assert borel_to_gkm(f, 3) - borel_to_gkm(f, 3) == GKMClass.constant(rs, 3, DoublePolynomial.zero(2))


def test_schubert_arithmetic():
    rs = root_system("A2")
    a = SchubertSum.basis(element("A2", "1"), 2)
    b = SchubertSum.basis(element("A2", "1"), DoublePolynomial.t(2, 1))
    assert (a + b).coefficient(element("A2", "1")) == DoublePolynomial.t(2, 1) + 2
    assert (a - a).is_zero
    assert a.scale(DoublePolynomial.t(2, 2)).degree == 2
    with pytest.raises(ValueError):
        SchubertSum.basis(element("A2", "1"), DoublePolynomial.x(2, 1))
    with pytest.raises(RootSystemMismatch):
        a + SchubertSum.basis(element("C2", "1"))


def test_convert_dispatch():
    f = _f()
    s = borel_to_schubert(f)
    assert convert(s, "schubert") is s
    assert presentation_of(convert(s, "gkm")) == "gkm"
    assert convert(convert(s, "gkm"), "schubert") == s
    assert convert(f, "gkm", cutoff=1).cutoff == 1
    with pytest.raises(ValueError):
        convert(s, "bogus")
    with pytest.raises(TypeError):
        presentation_of(3)
