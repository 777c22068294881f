from fractions import Fraction

import pytest
from hypothesis import given

from bundles.errors import PreconditionError, ZeroBundleError
from bundles.hn_core import ZERO, HNVector, mu_max, mu_min, stretch, twist
from bundles.pairing import (
    CohomologyVanishing,
    PairingValue,
    cohomology_vanishing,
    cross,
    deg_pair,
    deg_pair_nonneg,
    ext1_vanishes_sufficient,
    hom_is_zero,
    hom_moduli_dim,
    pairing_value,
    preceq,
)
from conftest import B, bundles, nonzero_bundles
from verify.oracles import oracle_deg_pair_nonneg


def test_cross():
    assert cross(HNVector(1, 1), HNVector(1, -1)) == -2
    assert cross(HNVector(3, 2), HNVector(3, 2)) == 0
    assert cross(HNVector(2, -2), HNVector(2, 2)) == 8


def test_preceq():
    assert preceq(HNVector(1, 0), HNVector(2, 2))
    assert not preceq(HNVector(1, 1), HNVector(1, -1))
    assert preceq(HNVector(2, 1), HNVector(4, 2))
    with pytest.raises(PreconditionError):
        preceq(HNVector(0, 1), HNVector(1, 1))


def test_deg_pair():
    assert deg_pair(B("O(1)"), B("O(-1)")) == -2
    assert deg_pair(B("O(1) + O(-1)"), B("O(1) + O(-1)")) == 0
    assert deg_pair(ZERO, B("O(3/2)")) == 0


def test_deg_pair_nonneg():
    both = B("O(1) + O(-1)")
    assert deg_pair_nonneg(both, both) == 2
    assert deg_pair_nonneg(B("O(1)"), B("O(0)")) == 0
    assert deg_pair_nonneg(B("O(0)"), B("O(1)")) == 1
    assert deg_pair_nonneg(B("O(2/3)^2"), B("O(2/3)^2")) == 0


def test_pairing_value():
    value = pairing_value(B("O(1) + O(-1)"), B("O(1) + O(-1)"))
    assert value == PairingValue(total_degree=0, nonneg_degree=2)


def test_hom_is_zero():
    assert hom_is_zero(B("O(1)"), B("O(0)"))
    assert not hom_is_zero(B("O(0)"), B("O(0)"))
    assert not hom_is_zero(B("O(1/2)"), B("O(1/2)"))
    assert hom_is_zero(ZERO, B("O(-4)"))


def test_hom_moduli_dim():
    assert hom_moduli_dim(B("O(0)"), B("O(1)")) == 1
    # mu_min(V) = mu_max(W): the dimension vanishes although Hom does not
    assert hom_moduli_dim(B("O(0)"), B("O(0)")) == 0
    assert not hom_is_zero(B("O(0)"), B("O(0)"))
    assert hom_moduli_dim(B("O(1)^2 + O(-1)^2"), B("O(1)^2")) == 8


@pytest.mark.parametrize(
    "slope, expected",
    [
        (-1, CohomologyVanishing(True, False)),
        (0, CohomologyVanishing(False, True)),
        (Fraction(1, 2), CohomologyVanishing(False, True)),
    ],
)
def test_cohomology_vanishing(slope, expected):
    assert cohomology_vanishing(slope) == expected


def test_ext1_vanishes_sufficient():
    assert ext1_vanishes_sufficient(B("O(-1)"), B("O(1)"))
    assert not ext1_vanishes_sufficient(B("O(1)"), B("O(-1)"))
    assert ext1_vanishes_sufficient(B("O(1/3)^2"), B("O(1/3)^2"))
    with pytest.raises(ZeroBundleError):
        ext1_vanishes_sufficient(ZERO, B("O(1)"))


def test_oracle_examples():
    both = B("O(1) + O(-1)")
    assert oracle_deg_pair_nonneg(both, both) == 2
    assert oracle_deg_pair_nonneg(B("O(1/2)"), B("O(1/2)")) == 0
    assert oracle_deg_pair_nonneg(B("O(0)"), B("O(1)")) == 1


@given(bundles, bundles)
def test_cross_product_sum_matches_oracle(v, w):
    assert deg_pair_nonneg(v, w) == oracle_deg_pair_nonneg(v, w)
    assert deg_pair_nonneg(v, w) >= 0


@given(bundles, bundles)
def test_deg_pair_is_antisymmetric(v, w):
    assert deg_pair(v, w) == -deg_pair(w, v)


@given(bundles, bundles)
def test_shear_and_stretch_scaling(v, w):
    base = deg_pair_nonneg(v, w)
    assert deg_pair_nonneg(twist(v, Fraction(1, 2)), twist(w, Fraction(1, 2))) == 4 * base
    assert deg_pair_nonneg(twist(v, -1), twist(w, -1)) == base
    assert deg_pair_nonneg(stretch(v, 2), stretch(w, 2)) == 2 * base


@given(nonzero_bundles, nonzero_bundles)
def test_zero_dimension_law(v, w):
    assert (hom_moduli_dim(v, w) == 0) == (mu_min(v) >= mu_max(w))
