import pytest
from hypothesis import assume, given
from hypothesis import strategies as st

from bundles.errors import PreconditionError, ZeroBundleError
from bundles.hn_core import (
    ZERO,
    bundle_from_factors,
    direct_sum,
    mu_min,
    stable,
    trivial,
    twist,
)
from bundles.pairing import deg_pair_nonneg
from conftest import B, integral_bundles
from criteria.classify import is_quotient
from criteria.reduction import (
    HYPOTHESIS_TAGS,
    KeyInequalityReport,
    c_value,
    cut_down,
    key_inequality_check,
    key_inequality_hypotheses,
    max_slope_reduction,
    min_slope_reduction,
    slope_reduction_sequence,
    strict_drop_condition,
)

E_EXAMPLE = "O(1)^2 + O(-1)^2"
F_EXAMPLE = "O(1)^2"
Q_EXAMPLE = "O(1) + O(0)"


# ===== c_{E,F}(Q) =====


def test_c_value_pinned_example():
    assert c_value(trivial(3), trivial(2), trivial(1)) == 0


def test_c_value_vanishes_when_q_is_f():
    e, f = B("O(2) + O(-1/2)^2"), B("O(1/3) + O(-2)")
    assert c_value(e, f, f) == 0


def test_c_value_by_cross_products():
    e, f, q = B(E_EXAMPLE), B(F_EXAMPLE), B(Q_EXAMPLE)
    assert deg_pair_nonneg(e, f) == 8
    assert deg_pair_nonneg(q, q) == 1
    assert deg_pair_nonneg(e, q) == 6
    assert deg_pair_nonneg(q, f) == 2
    assert c_value(e, f, q) == 1


# ===== Desigualdade chave =====


def test_key_inequality_holds_on_example():
    report = key_inequality_check(B(E_EXAMPLE), B(F_EXAMPLE), B(Q_EXAMPLE))
    assert report.hypotheses_ok
    assert report.c == 1
    assert report.equality_consistent
    assert report.conclusion_holds
    assert report.violated_hypothesis is None


def test_key_inequality_minimal_slope_hypothesis_is_needed():
    report = key_inequality_check(trivial(3), trivial(2), trivial(1))
    assert not report.hypotheses_ok
    assert report.hypotheses == (True, True, True, False)
    assert report.violated_hypothesis == "iv"
    assert report.c == 0
    assert not report.equality_consistent


def test_key_inequality_equal_pair():
    e, f = B("O(1) + O(-1)"), B("O(1)")
    report = key_inequality_check(e, f, f)
    assert report.hypotheses[0] and report.hypotheses[3]
    assert report.c == 0
    assert report.equality_consistent


def test_hypotheses_with_zero_bundles():
    assert key_inequality_hypotheses(ZERO, B("O(1)"), ZERO)[3] is False
    assert key_inequality_check(ZERO, ZERO, ZERO).c == 0


def test_report_tags():
    report = KeyInequalityReport(
        c=-1, hypotheses=(True, False, True, True), equality_consistent=True
    )
    assert HYPOTHESIS_TAGS == ("i", "ii", "iii", "iv")
    assert report.violated_hypothesis == "ii"
    assert not report.conclusion_holds


def test_report_inequality_is_separate_from_equality():
    report = KeyInequalityReport(
        c=0, hypotheses=(True, True, True, True), equality_consistent=False
    )
    assert report.inequality_holds
    assert not report.conclusion_holds


@pytest.mark.parametrize(
    "e, f, q",
    [
        ("O(1) + O(0)", "O(1)", "O(0)"),
        ("O(2) + O(1)", "O(2)", "O(1)"),
        ("O(1)^2 + O(0)", "O(1)^2", "O(0)"),
        ("O(2)^2 + O(1)", "O(2)^2", "O(1)"),
    ],
)
def test_key_inequality_equality_clause_gap(e, f, q):
    # E = F ⊕ Q: todas as hipóteses valem, c = 0 e mesmo assim F != Q
    report = key_inequality_check(B(e), B(f), B(q))
    assert report.hypotheses_ok
    assert report.c == 0
    assert B(f) != B(q)
    assert report.inequality_holds
    assert not report.equality_consistent


@st.composite
def hypothesis_triples(draw, equal_rank=False, tight=False):
    """
    Triplas com (i)-(iv) garantidas: F e Q somandos de E, F acima de Q.

    Com tight=True, E = F ⊕ Q sem mais nada e μ_min(F) > μ_min(Q).
    """
    q_slopes = draw(st.lists(st.integers(-2, 2), min_size=1, max_size=3))
    low = 1 if tight else 0
    bumps = draw(st.lists(st.integers(low, 2), min_size=len(q_slopes), max_size=len(q_slopes)))
    q = bundle_from_factors((k, 1) for k in q_slopes)
    f = bundle_from_factors((k + d, 1) for k, d in zip(q_slopes, bumps))
    if tight:
        if not equal_rank:
            extra = draw(st.lists(st.integers(min(q_slopes) + 1, 4), max_size=2))
            f = direct_sum(f, bundle_from_factors((k, 1) for k in extra))
        return direct_sum(f, q), f, q
    if not equal_rank:
        f = direct_sum(f, draw(integral_bundles))
    e = direct_sum(f, q, draw(integral_bundles), stable(-3))
    return e, f, q


@given(hypothesis_triples())
def test_key_inequality(triple):
    report = key_inequality_check(*triple)
    assert report.hypotheses_ok
    assert report.c >= 0
    if triple[1] == triple[2]:
        assert report.c == 0


@given(hypothesis_triples(tight=True))
def test_key_inequality_on_tight_triples(triple):
    report = key_inequality_check(*triple)
    assert report.hypotheses_ok
    assert report.inequality_holds


# ===== Redução maximal =====


def test_max_slope_reduction():
    assert max_slope_reduction(B("O(3) + O(1)"), B("O(1) + O(0)")) == B("O(1)^2")
    assert max_slope_reduction(B("O(2)^2"), B("O(0)^2")) == B("O(0)^2")
    v = B("O(1) + O(-2)")
    assert max_slope_reduction(v, B("O(1) + O(-3)")) == v


def test_max_slope_reduction_rejections():
    with pytest.raises(ZeroBundleError):
        max_slope_reduction(ZERO, B("O(1)"))
    with pytest.raises(PreconditionError):
        max_slope_reduction(B("O(1/2)"), B("O(0)"))
    with pytest.raises(PreconditionError):
        max_slope_reduction(B("O(0)"), B("O(1)"))


# ===== Sequência de redução =====


def test_reduction_sequence_example():
    trace = slope_reduction_sequence(B(E_EXAMPLE), B(F_EXAMPLE), B(Q_EXAMPLE))
    assert trace.terminated
    assert trace.c_values == [1, 0]
    assert trace.steps[0].common_u == B("O(1)")
    assert trace.steps[1].f == B(Q_EXAMPLE)
    assert trace.final == B(Q_EXAMPLE)


def test_reduction_sequence_immediate():
    f = B("O(1) + O(0)")
    trace = slope_reduction_sequence(B("O(1) + O(-1)^2"), f, f)
    assert len(trace.steps) == 1
    assert trace.c_values == [0]


def test_reduction_sequence_reaches_q():
    trace = slope_reduction_sequence(B("O(0)^2 + O(-1)"), B("O(2) + O(0)"), B("O(0)^2"))
    assert len(trace.steps) <= 3
    assert trace.final == B("O(0)^2")


def test_reduction_sequence_rejections():
    with pytest.raises(ZeroBundleError):
        slope_reduction_sequence(B("O(0)"), ZERO, B("O(0)"))
    with pytest.raises(PreconditionError):
        slope_reduction_sequence(B("O(0)"), B("O(1)^2"), B("O(0)"))
    with pytest.raises(PreconditionError):
        slope_reduction_sequence(B("O(0)"), B("O(1/2)"), B("O(0)^2"))
    with pytest.raises(PreconditionError):
        slope_reduction_sequence(B("O(0)"), B("O(0)^2"), B("O(1)^2"))


def test_strict_drop_condition():
    assert strict_drop_condition(B("O(2) + O(1) + O(-1)"), B("O(2)"), B("O(1)"))
    assert strict_drop_condition(B(E_EXAMPLE), B(F_EXAMPLE), B(Q_EXAMPLE))
    # rk(E^{≤0}) = rk(Q^{≤0}) = 1 mas F^{≤0} = 0
    assert not strict_drop_condition(B("O(1) + O(0)"), B("O(1)"), B("O(0)"))
    assert not strict_drop_condition(B("O(2) + O(1)"), B("O(2)"), B("O(1)"))


def test_first_step_drops_when_forced():
    e, f, q = B("O(2) + O(1) + O(-1)"), B("O(2)"), B("O(1)")
    trace = slope_reduction_sequence(e, f, q)
    assert trace.steps[0].common_u == ZERO
    assert trace.c_values == [1, 0]
    assert c_value(e, max_slope_reduction(f, q), q) < c_value(e, f, q)


@pytest.mark.parametrize(
    "e, f, q",
    [
        ("O(1) + O(0)", "O(1)", "O(0)"),
        ("O(2) + O(1)", "O(2)", "O(1)"),
    ],
)
def test_first_step_may_stall_without_condition(e, f, q):
    trace = slope_reduction_sequence(B(e), B(f), B(q))
    assert trace.steps[0].common_u == ZERO
    assert trace.c_values == [0, 0]
    assert trace.final == B(q)


def _check_reduction(e, f, q):
    trace = slope_reduction_sequence(e, f, q)
    assert trace.terminated
    assert trace.final == q
    assert len(trace.steps) <= q.rank + 1
    values = trace.c_values
    assert all(a >= b for a, b in zip(values, values[1:]))
    assert values[-1] == 0
    forced = len(values) > 1 and trace.steps[0].common_u.is_zero
    if forced and strict_drop_condition(e, f, q):
        assert values[0] > values[1]


@given(hypothesis_triples(equal_rank=True))
def test_reduction_is_monotone(triple):
    _check_reduction(*triple)


@given(hypothesis_triples(equal_rank=True, tight=True))
def test_reduction_is_monotone_on_tight_triples(triple):
    _check_reduction(*triple)


# ===== Reduções auxiliares =====


def test_min_slope_reduction():
    e, f = B("O(1) + O(0) + O(-1)"), B("O(1) + O(-1)")
    assert is_quotient(e, f).answer
    split = min_slope_reduction(e, f)
    assert split.common == B("O(-1)")
    assert split.e_rest == B("O(1) + O(0)")
    assert split.f_rest == B("O(1)")
    assert direct_sum(split.common, split.e_rest) == e
    assert is_quotient(split.e_rest, split.f_rest).answer
    assert mu_min(split.f_rest) > mu_min(split.e_rest)


def test_min_slope_reduction_with_common_tail():
    split = min_slope_reduction(B("O(2) + O(0)"), B("O(0)"))
    assert split.common == B("O(0)")
    assert split.e_rest == B("O(2)")
    assert split.f_rest == ZERO

    split = min_slope_reduction(B("O(1) + O(-1)^2"), B("O(1) + O(-1)"))
    assert (split.common, split.e_rest, split.f_rest) == (
        B("O(-1)"),
        B("O(1) + O(-1)"),
        B("O(1)"),
    )


def test_cut_down():
    assert cut_down(B("O(2) + O(0)^2")) == B("O(2) + O(0)")
    assert cut_down(B("O(1)")) == ZERO
    with pytest.raises(ZeroBundleError):
        cut_down(ZERO)
    with pytest.raises(PreconditionError):
        cut_down(B("O(1) + O(1/2)"))


def test_cut_down_drop_is_measured_below_lowest_slope():
    e, f, q = B("O(1)^2 + O(0) + O(-1)"), B("O(1)^2"), B("O(0)")
    assert key_inequality_check(e, f, q).hypotheses_ok
    assert (c_value(e, f, q), c_value(e, cut_down(f), q)) == (3, 1)
    # E e Q coincidem abaixo de μ_min(F) = 1: o corte não baixa c
    e = B("O(1)^2 + O(0)")
    assert key_inequality_check(e, f, q).hypotheses_ok
    assert (c_value(e, f, q), c_value(e, cut_down(f), q)) == (0, 0)


@given(integral_bundles, integral_bundles, integral_bundles)
def test_cut_down_identity(e, f, q):
    assume(not f.is_zero)
    lowest = stable(mu_min(f))
    expected = (
        c_value(e, cut_down(f), q)
        + deg_pair_nonneg(e, lowest)
        - deg_pair_nonneg(q, lowest)
    )
    assert c_value(e, f, q) == expected


@given(integral_bundles, integral_bundles, integral_bundles)
def test_c_value_is_shear_invariant(e, f, q):
    assert c_value(twist(e, -1), twist(f, -1), twist(q, -1)) == c_value(e, f, q)
