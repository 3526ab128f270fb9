from fractions import Fraction

import pytest

import catkit

CUBES = catkit.form(2, 3, {(3, 0): 1, (0, 3): 1})


def test_hankel_catalecticant():
    # Divided coefficients of x1^3 + x2^3 are 6 and 6.
    assert catkit.catalecticant(CUBES, 1) == [[6, 0, 0], [0, 0, 6]]
    assert catkit.cat_rank(CUBES, 1) == 2


def test_hilbert_and_membership():
    f = catkit.form(2, 5, {(2, 3): 1})
    assert catkit.hilbert_sequence(f) == [1, 2, 3, 3, 2, 1]
    assert catkit.hilbert_sequence(f) == catkit.t2s_sequence(5, 3)
    assert catkit.member(f, "gor", 3)
    assert not catkit.member(f, "gor", 2)


def test_decompose_sum_of_cubes():
    dec = catkit.decompose(CUBES)
    assert dec["kind"] == "waring"
    assert dec["verified"]
    assert dec["apolar_form"] == "y1*y2"
    assert len(dec["components"]) == 2


def test_classify_tangent_line():
    f = catkit.form(3, 4, {(1, 3, 0): 1})
    assert catkit.classify_ps2(f)["tag"] == "tangent_line"


def test_tangent_dimensions():
    f = catkit.sample("ps(2)", 3, 4, seed=5)
    assert catkit.tangent_dim_vr(f, 1, 2) == 7
    assert catkit.tangent_dim_gor(f) == 6
    assert catkit.singular_test(f, "ps2")["tangent_dim"] == 6


def test_minors_export():
    assert catkit.minors(2, 2, 1, 2) == "# catkit generators n=2 d=2 i=1 r=2\nZ[2,0]*Z[0,2] - Z[1,1]^2\n"


def test_sampling_is_deterministic():
    assert catkit.sample("gor(2)", 3, 5, seed=11) == catkit.sample("gor(2)", 3, 5, seed=11)


def test_formulas():
    assert catkit.dim_vr(2, 4, 3) == 7
    assert catkit.en_alternating_sum(9, 3) == 1


def test_rational_coefficients_survive():
    f = catkit.form(1, 2, {(2,): Fraction(1, 3)})
    assert catkit.normalize(f)["terms"][0]["coeff"] == "2/3"


def test_errors_become_exceptions():
    with pytest.raises(catkit.CatkitError):
        catkit.hilbert_sequence(catkit.form(2, 3, {}))
    with pytest.raises(ValueError):
        catkit.catalecticant(CUBES, 5)
    with pytest.raises(ValueError):
        catkit.run_suite("no-such-suite")


def test_suite_from_python():
    rep = catkit.run_suite("eagon-northcott")
    assert rep["passed"]
    assert "binary-gad" in catkit.suite_names()
