import pytest
from test_utils import element, elements, root_system, za

from eqschubert.presentations.convert import borel_to_schubert
from eqschubert.presentations.double_schubert import (
    double_schubert,
    double_schubert_from_top,
    double_schubert_polynomial,
    factor_decompositions,
    required_sigma,
)
from eqschubert.presentations.schubert import SchubertSum
from eqschubert.presentations.sigma import sigma_bgg
from eqschubert.store import DiskStore, current_store
from eqschubert.weyl import from_word, identity, longest_element


TYPES_AND_METHODS = [(t, m) for t in ("A2", "C2", "G2") for m in ("linear-system", "bgg")] + [("A2", "ls")]


def _decs(type_text, words):
    rs = root_system(type_text)
    return {tuple(from_word(rs, w) for w in dec) for dec in words}


def test_factor_decompositions_of_the_a2_top():
    w0 = element("A2", "1,2,1")
    assert factor_decompositions(w0, 1) == {(w0,)}
    pairs = [((1,), (2, 1)), ((2,), (1, 2)), ((1, 2), (1,)), ((2, 1), (2,))]
    assert factor_decompositions(w0, 2) == _decs("A2", pairs)
    assert factor_decompositions(w0, 3) == _decs("A2", [((1,), (2,), (1,)), ((2,), (1,), (2,))])
    assert factor_decompositions(w0, 4) == frozenset()
    assert required_sigma(w0) == set(elements(w0.rs)) - {identity(w0.rs)}


def test_factor_decompositions_of_the_identity():
    e = identity(root_system("C2"))
    assert factor_decompositions(e, 0) == {()}
    assert factor_decompositions(e, 1) == frozenset()
    assert required_sigma(e) == set()


def test_small_a2_polynomials():
    assert double_schubert_polynomial(element("A2", "1")).rep == za("A2", "x1 - t1")
    assert double_schubert_polynomial(element("A2", "2")).rep == za("A2", "x1 + x2 - t1 - t2")
    assert double_schubert_polynomial(identity(root_system("A2"))).rep == za("A2", "1")


@pytest.mark.parametrize("type_text,method", TYPES_AND_METHODS)
def test_double_schubert_polynomials_expand_to_the_basis(type_text, method):
    rs = root_system(type_text)
    for w in elements(rs):
        s = double_schubert_polynomial(w, method)
        assert s.rep.x_degree <= w.length
        assert all(sum(m) == w.length for m, _ in s.rep.terms())
        assert borel_to_schubert(s) == SchubertSum.basis(w)


@pytest.mark.parametrize("method", ["ls", "linear-system"])
def test_a3_polynomials_expand_to_the_basis(method):
    rs = root_system("A3")
    for w in elements(rs, 3):
        assert borel_to_schubert(double_schubert_polynomial(w, method)) == SchubertSum.basis(w)


@pytest.mark.parametrize("type_text", ["A2", "B2", "G2"])
def test_divided_differences_of_the_top_agree(type_text):
    rs = root_system(type_text)
    for w in elements(rs):
        assert double_schubert_from_top(w) == double_schubert_polynomial(w, "bgg")
        assert double_schubert_from_top(w) == double_schubert_polynomial(w, "linear-system")


def test_top_class_is_built_from_the_full_bgg_table():
    rs = root_system("A2")
    w0 = longest_element(rs)
    assert double_schubert(w0, sigma_bgg(rs)).rep == double_schubert_from_top(w0).rep


def test_double_schubert_is_cached(tmp_path):
    w = element("B3", "3,2,1")
    disk = DiskStore(str(tmp_path))
    with current_store(disk):
        first = double_schubert_polynomial(w)
        assert disk.misses > 0
        hits = disk.hits
        second = double_schubert_polynomial(w)
    assert disk.hits == hits + 1
    assert first.rep == second.rep


def test_a2_polynomials_are_the_classical_ones():
    assert double_schubert_polynomial(element("A2", "1,2,1")).rep == za("A2", "(x1 - t1)*(x1 - t2)*(x2 - t1)")
    assert double_schubert_polynomial(element("A2", "1,2")).rep == za("A2", "(x1 - t1)*(x2 - t1)")
    assert double_schubert_polynomial(element("A2", "2,1")).rep == za("A2", "(x1 - t1)*(x1 - t2)")

    s2 = double_schubert_polynomial(element("A2", "2")).rep
    s12 = double_schubert_polynomial(element("A2", "1,2")).rep
    assert s2 * za("A2", "t1^2") + s12 * za("A2", "t1") + za("A2", "t1^2*t2") == za("A2", "t1*x1*x2")


def test_a3_top_is_the_classical_product():
    w0 = longest_element(root_system("A3"))
    expected = za("A3", "(x1 - t1)*(x1 - t2)*(x1 - t3)*(x2 - t1)*(x2 - t2)*(x3 - t1)")
    assert double_schubert_polynomial(w0).rep == expected
    assert double_schubert_polynomial(w0, "ls").rep == expected


@pytest.mark.parametrize("method", ["linear-system", "bgg"])
def test_other_sigma_methods_agree_modulo_the_ideal(method):
    rs = root_system("A2")
    for w in elements(rs):
        assert double_schubert_polynomial(w, method) == double_schubert_polynomial(w, "ls")


def test_ls_is_type_a_only():
    with pytest.raises(ValueError):
        double_schubert_polynomial(element("C2", "1"), "ls")
