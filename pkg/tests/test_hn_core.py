from fractions import Fraction

import pytest
from hypothesis import given

from bundles.errors import (
    InvariantViolation,
    PreconditionError,
    ZeroBundleError,
    ZeroDenominatorError,
)
from bundles.hn_core import (
    ZERO,
    Bundle,
    HNVector,
    bundle_from_factors,
    deg_at_least,
    deg_nonneg,
    degree,
    direct_sum,
    dual,
    hn_vectors,
    interval_slopes,
    is_integral,
    is_semistable,
    mu,
    mu_max,
    mu_min,
    rank,
    slice_bundle,
    slope_new,
    slope_on_interval,
    slope_set,
    stable,
    stretch,
    tensor,
    trivial,
    twist,
    vertex_set,
)
from conftest import B, bundles


# ===== Construção =====


@pytest.mark.parametrize(
    "num, den, expected",
    [(2, 4, Fraction(1, 2)), (1, -2, Fraction(-1, 2)), (0, 7, Fraction(0))],
)
def test_slope_new_normalizes(num, den, expected):
    slope = slope_new(num, den)
    assert slope == expected
    assert slope.denominator > 0


def test_slope_new_zero_denominator():
    with pytest.raises(ZeroDenominatorError):
        slope_new(3, 0)


def test_bundle_from_factors_merges_and_sorts():
    bundle = bundle_from_factors([(Fraction(1, 2), 1), (Fraction(1, 2), 2), (-1, 1)])
    assert bundle.factors == ((Fraction(1, 2), 3), (Fraction(-1), 1))
    assert str(bundle) == "O(1/2)^3 + O(-1)"


def test_bundle_from_factors_edge_cases():
    assert bundle_from_factors([]) == ZERO
    assert str(bundle_from_factors([(0, 1), (1, 1)])) == "O(1) + O(0)"
    assert bundle_from_factors([(2, 0)]) == ZERO


def test_bundle_from_factors_rejects_negative_multiplicity():
    with pytest.raises(PreconditionError):
        bundle_from_factors([(1, -1)])


def test_constructor_rejects_non_canonical_factors():
    with pytest.raises(PreconditionError):
        Bundle(((Fraction(0), 1), (Fraction(1), 1)))
    with pytest.raises(PreconditionError):
        Bundle(((Fraction(0), 0),))


def test_stable_and_trivial():
    assert stable(Fraction(5, 6)).rank == 6
    assert trivial(3) == B("O(0)^3")
    assert trivial(0) == ZERO
    with pytest.raises(PreconditionError):
        trivial(-1)


# ===== Invariantes numéricos =====


def test_rank_and_degree():
    bundle = B("O(1/2)^3 + O(-1)")
    assert rank(bundle) == 7
    assert degree(bundle) == 2
    assert rank(ZERO) == 0
    assert degree(ZERO) == 0


def test_mu():
    assert mu(stable(Fraction(5, 6))) == Fraction(5, 6)
    assert mu(B("O(1) + O(-1)")) == 0
    with pytest.raises(ZeroBundleError):
        mu(ZERO)


def test_extreme_slopes():
    bundle = B("O(2) + O(-1)")
    assert mu_max(bundle) == 2
    assert mu_min(bundle) == -1
    assert mu_min(B("O(3) + O(0) + O(-5)")) == -5
    with pytest.raises(ZeroBundleError):
        mu_max(ZERO)
    with pytest.raises(ZeroBundleError):
        mu_min(ZERO)


def test_hn_vectors():
    assert hn_vectors(B("O(1/2)^3 + O(-1)")) == (HNVector(6, 3), HNVector(1, -1))
    assert hn_vectors(ZERO) == ()
    assert hn_vectors(B("O(1)^2")) == (HNVector(2, 2),)
    assert HNVector(6, 3).slope == Fraction(1, 2)


def test_is_integral_and_slope_set():
    assert is_integral(B("O(2) + O(-1)"))
    assert not is_integral(B("O(1/2)"))
    assert is_integral(ZERO)
    assert slope_set(B("O(1) + O(-1)"), B("O(0) + O(-1)")) == [-1, 0, 1]


# ===== Operações =====


def test_dual():
    assert dual(B("O(1/2)^3 + O(-1)")) == B("O(1) + O(-1/2)^3")
    assert dual(ZERO) == ZERO


def test_direct_sum():
    assert direct_sum(B("O(1)"), B("O(1)")) == B("O(1)^2")
    bundle = B("O(2) + O(-1/3)")
    assert direct_sum(bundle, ZERO) == bundle
    assert str(direct_sum(B("O(1) + O(-1)"), B("O(0)"))) == "O(1) + O(0) + O(-1)"


def test_tensor_of_stable_bundles():
    product = tensor(B("O(1/2)"), B("O(1/3)"))
    assert product == B("O(5/6)")
    assert (product.rank, product.degree) == (6, 5)
    square = tensor(B("O(1/2)"), B("O(1/2)"))
    assert square == B("O(1)^4")


def test_tensor_unit_and_zero():
    bundle = B("O(2) + O(-1)")
    assert tensor(bundle, trivial(1)) == bundle
    assert tensor(bundle, ZERO) == ZERO


def test_twist():
    assert twist(B("O(1) + O(-1)"), -1) == B("O(0) + O(-2)")
    bundle = B("O(3/2) + O(0)^2")
    assert twist(bundle, 0) == bundle
    # rank 4, degree 4: the same bundle as the tensor square of O(1/2)
    assert twist(B("O(1/2)"), Fraction(1, 2)) == B("O(1)^4")


def test_stretch():
    assert stretch(B("O(1/2) + O(-1)"), 2) == B("O(1)^2 + O(-2)")
    assert stretch(B("O(1/3)"), 3) == B("O(1)^3")
    bundle = B("O(2/3) + O(-1)^2")
    assert stretch(bundle, 1) == bundle
    with pytest.raises(PreconditionError):
        stretch(bundle, 0)


def test_stretch_rejects_broken_vectors():
    bundle = B("O(1)")
    # aresta com x fracionário: o denominador de C·λ não divide x
    bundle.__dict__["hn_vectors"] = (HNVector(Fraction(3, 2), 1),)
    with pytest.raises(InvariantViolation, match="remainder"):
        stretch(bundle, 1)


def test_slice():
    bundle = B("O(2) + O(1/2)^2 + O(-1)")
    assert slice_bundle(bundle, Fraction(1, 2), ">=") == B("O(2) + O(1/2)^2")
    assert slice_bundle(bundle, Fraction(1, 2), ">") == B("O(2)")
    assert slice_bundle(bundle, Fraction(1, 2), "≤") == B("O(1/2)^2 + O(-1)")
    assert slice_bundle(bundle, Fraction(1, 2), "<") == B("O(-1)")
    assert slice_bundle(ZERO, 3, "<=") == ZERO
    with pytest.raises(PreconditionError):
        slice_bundle(bundle, 0, "==")


def test_degree_thresholds():
    bundle = B("O(2) + O(1/2)^2 + O(-1)")
    assert deg_at_least(bundle, Fraction(1, 2)) == 4
    assert deg_nonneg(bundle) == 4
    assert deg_nonneg(B("O(-1)^3")) == 0


# ===== Consultas no polígono =====


def test_slope_on_interval():
    bundle = B("O(1) + O(-1/2)")
    assert [slope_on_interval(bundle, i) for i in (1, 2, 3)] == [
        1,
        Fraction(-1, 2),
        Fraction(-1, 2),
    ]
    assert all(slope_on_interval(B("O(1/3)"), i) == Fraction(1, 3) for i in (1, 2, 3))
    assert slope_on_interval(B("O(2)^2"), 2) == 2
    with pytest.raises(PreconditionError):
        slope_on_interval(bundle, 4)
    with pytest.raises(PreconditionError):
        slope_on_interval(bundle, 0)


def test_interval_slopes():
    assert interval_slopes(B("O(1) + O(-1/2)")) == [1, Fraction(-1, 2), Fraction(-1, 2)]
    assert interval_slopes(ZERO) == []


def test_semistability_and_vertices():
    assert is_semistable(B("O(1/2)^5"))
    assert not is_semistable(B("O(1) + O(0)"))
    assert is_semistable(ZERO)
    assert vertex_set(B("O(1)^2 + O(-1)")) == frozenset({0, 2, 3})
    assert vertex_set(ZERO) == frozenset({0})


# ===== Leis =====


@given(bundles)
def test_canonical_form_is_idempotent(bundle):
    assert bundle_from_factors(bundle.factors) == bundle


@given(bundles)
def test_dual_is_an_involution(bundle):
    assert dual(dual(bundle)) == bundle
    assert dual(bundle).degree == -bundle.degree
    assert dual(bundle).rank == bundle.rank


@given(bundles, bundles)
def test_tensor_rank_and_degree(a, b):
    product = tensor(a, b)
    assert product.rank == a.rank * b.rank
    assert product.degree == a.degree * b.rank + b.degree * a.rank
    assert product == tensor(b, a)


@given(bundles)
def test_stretch_scales_degree(bundle):
    assert stretch(bundle, 3).rank == bundle.rank
    assert stretch(bundle, 3).degree == 3 * bundle.degree
    assert stretch(stretch(bundle, 2), 3) == stretch(bundle, 6)
