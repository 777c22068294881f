#!/usr/bin/env python3
"""
Property Registry
-----------------
Todas as leis verificadas pela suíte exaustiva, registradas por nome.

Cada entrada define:
    - module: módulo cuja lei é verificada
    - domain: "once", "singles", "pairs", "small_triples", "triples" ou "key_triples"
    - applies: (opcional) filtro; só instâncias aceitas contam como checadas
    - check: devolve None quando a lei vale, ou a descrição da falha
"""

from fractions import Fraction
from functools import lru_cache
from typing import Optional

from bundles.dominance import (
    common_factor_decompose,
    dominates_via_ranks,
    equal_rank_duality_holds,
    slopewise_dominates,
)
from bundles.hn_core import (
    Bundle,
    bundle_from_factors,
    deg_at_least,
    deg_nonneg,
    direct_sum,
    dual,
    interval_slopes,
    is_semistable,
    mu_max,
    mu_min,
    slice_bundle,
    slope_on_interval,
    slope_set,
    stable,
    stretch,
    tensor,
    trivial,
    twist,
    vertex_set,
)
from bundles.pairing import (
    deg_pair,
    deg_pair_nonneg,
    ext1_vanishes_sufficient,
    hom_is_zero,
    hom_moduli_dim,
)
from criteria.classify import (
    is_globally_generated,
    is_quotient,
    is_quotient_polygonal,
    quotient_rank_condition,
    subbundle_necessary,
    subbundle_sufficient,
)
from criteria.reduction import (
    c_value,
    cut_down,
    key_inequality_check,
    key_inequality_hypotheses,
    max_slope_reduction,
    min_slope_reduction,
    slope_reduction_sequence,
    strict_drop_condition,
)

from .config import EnumBounds
from .enumeration import bundle_domain
from .oracles import oracle_deg_pair_nonneg, oracle_dominates, oracle_integer_bundle_count

SHEAR_SLOPES = (
    Fraction(-2),
    Fraction(-1),
    Fraction(0),
    Fraction(1),
    Fraction(1, 2),
    Fraction(2, 3),
    Fraction(-2, 3),
)
STRETCH_FACTORS = (1, 2, 3)
MAX_SECTIONS = 4


# ===== Relações memorizadas (por processo) =====


@lru_cache(maxsize=None)
def _quotient(e_bundle: Bundle, f_bundle: Bundle) -> bool:
    return is_quotient(e_bundle, f_bundle).answer


@lru_cache(maxsize=None)
def _rank_condition(e_bundle: Bundle, f_bundle: Bundle) -> bool:
    return quotient_rank_condition(e_bundle, f_bundle)


@lru_cache(maxsize=None)
def _dominates(v_bundle: Bundle, w_bundle: Bundle) -> bool:
    return slopewise_dominates(v_bundle, w_bundle)


# ===== hn_core =====


def check_enumeration(bounds: EnumBounds) -> Optional[str]:
    domain = bundle_domain(bounds)
    if len(set(domain)) != len(domain):
        return f"duplicates: {len(domain) - len(set(domain))}"
    for bundle in domain:
        if bundle.rank > bounds.max_rank or abs(bundle.degree) > bounds.max_abs_degree:
            return f"{bundle} exceeds rank/degree bounds"
        for factor in bundle.factors:
            if factor.slope.denominator > bounds.max_denominator:
                return f"{bundle} exceeds the denominator bound"
    if bounds.include_zero != any(b.is_zero for b in domain):
        return "include_zero not honored"
    if bounds.max_denominator == 1 and oracle_integer_bundle_count(bounds) != len(domain):
        return f"count {len(domain)} != combinatorial count {oracle_integer_bundle_count(bounds)}"
    return None


def check_canonical_form(bundle: Bundle) -> Optional[str]:
    if bundle_from_factors(bundle.factors) != bundle:
        return "canonicalization is not idempotent"
    vectors = bundle.hn_vectors
    if sum(v.x for v in vectors) != bundle.rank or sum(v.y for v in vectors) != bundle.degree:
        return "HN vectors do not sum to (rank, degree)"
    slopes = interval_slopes(bundle)
    if any(left < right for left, right in zip(slopes, slopes[1:])):
        return "interval slopes increase"
    if any(slope_on_interval(bundle, i) != s for i, s in enumerate(slopes, start=1)):
        return "slope_on_interval disagrees with the expanded slopes"
    if is_semistable(bundle) != (len(vertex_set(bundle)) <= 2):
        return "semistability disagrees with the vertex count"
    return None


def check_dual_laws(bundle: Bundle) -> Optional[str]:
    dualized = dual(bundle)
    if dual(dualized) != bundle:
        return "dual is not an involution"
    if dualized.rank != bundle.rank or dualized.degree != -bundle.degree:
        return "dual changes rank or fails to negate degree"
    for mu in slope_set(bundle) + [Fraction(0)]:
        if slice_bundle(dualized, -mu, "<=") != dual(slice_bundle(bundle, mu, ">=")):
            return f"slice duality fails at mu={mu}"
    return None


def check_stretch_laws(bundle: Bundle) -> Optional[str]:
    for first in STRETCH_FACTORS:
        once = stretch(bundle, first)
        if once.rank != bundle.rank or once.degree != first * bundle.degree:
            return f"stretch by {first} breaks rank/degree"
        for second in STRETCH_FACTORS:
            if stretch(once, second) != stretch(bundle, first * second):
                return f"stretch by {first} then {second} is not multiplicative"
    return None


def check_tensor_laws(a_bundle: Bundle, b_bundle: Bundle) -> Optional[str]:
    product = tensor(a_bundle, b_bundle)
    if product.rank != a_bundle.rank * b_bundle.rank:
        return "rank is not multiplicative"
    expected = a_bundle.rank * b_bundle.degree + b_bundle.rank * a_bundle.degree
    if product.degree != expected:
        return f"degree {product.degree} != {expected}"
    if product != tensor(b_bundle, a_bundle):
        return "tensor is not commutative"
    if tensor(a_bundle, trivial(1)) != a_bundle:
        return "O is not a unit"
    return None


def check_tensor_algebra(a: Bundle, b: Bundle, c: Bundle) -> Optional[str]:
    if tensor(a, direct_sum(b, c)) != direct_sum(tensor(a, b), tensor(a, c)):
        return "tensor does not distribute over direct sums"
    if tensor(tensor(a, b), c) != tensor(a, tensor(b, c)):
        return "tensor is not associative"
    return None


# ===== pairing =====


def check_oracle_agreement(v_bundle: Bundle, w_bundle: Bundle) -> Optional[str]:
    fast = deg_pair_nonneg(v_bundle, w_bundle)
    slow = oracle_deg_pair_nonneg(v_bundle, w_bundle)
    if fast != slow:
        return f"deg_pair_nonneg={fast} but expansion gives {slow}"
    expansion = tensor(dual(v_bundle), w_bundle)
    if deg_pair(v_bundle, w_bundle) != expansion.degree:
        return f"deg_pair={deg_pair(v_bundle, w_bundle)} but degree={expansion.degree}"
    if fast != deg_nonneg(expansion):
        return f"deg_pair_nonneg={fast} but deg_nonneg of tensor={deg_nonneg(expansion)}"
    return None


def check_shear_identity(v_bundle: Bundle, w_bundle: Bundle) -> Optional[str]:
    base = deg_pair_nonneg(v_bundle, w_bundle)
    for slope in SHEAR_SLOPES:
        sheared = deg_pair_nonneg(twist(v_bundle, slope), twist(w_bundle, slope))
        if sheared != slope.denominator ** 2 * base:
            return f"twist by {slope}: {sheared} != {slope.denominator ** 2} * {base}"
    return None


def check_stretch_identity(v_bundle: Bundle, w_bundle: Bundle) -> Optional[str]:
    base = deg_pair_nonneg(v_bundle, w_bundle)
    for factor in STRETCH_FACTORS:
        stretched = deg_pair_nonneg(stretch(v_bundle, factor), stretch(w_bundle, factor))
        if stretched != factor * base:
            return f"stretch by {factor}: {stretched} != {factor} * {base}"
    return None


def both_nonzero(v_bundle: Bundle, w_bundle: Bundle) -> bool:
    return not v_bundle.is_zero and not w_bundle.is_zero


def check_zero_dimension_law(v_bundle: Bundle, w_bundle: Bundle) -> Optional[str]:
    dim = hom_moduli_dim(v_bundle, w_bundle)
    if (dim == 0) != (mu_min(v_bundle) >= mu_max(w_bundle)):
        return f"dimension {dim} disagrees with the slope comparison"
    if hom_is_zero(v_bundle, w_bundle) and dim != 0:
        return "Hom vanishes but the moduli dimension is positive"
    nonneg = mu_min(tensor(dual(v_bundle), w_bundle)) >= 0
    if ext1_vanishes_sufficient(v_bundle, w_bundle) != nonneg:
        return "Ext1 criterion disagrees with the tensor slopes"
    return None


# ===== dominance =====


def check_dominance_characterization(v_bundle: Bundle, w_bundle: Bundle) -> Optional[str]:
    walked = slopewise_dominates(v_bundle, w_bundle)
    if walked != dominates_via_ranks(v_bundle, w_bundle):
        return f"interval form says {walked}, rank form disagrees"
    if walked != oracle_dominates(v_bundle, w_bundle):
        return f"interval form says {walked}, expanded comparison disagrees"
    return None


def check_decomposition(v_bundle: Bundle, w_bundle: Bundle) -> Optional[str]:
    split = common_factor_decompose(v_bundle, w_bundle)
    if split.reassemble() != (v_bundle, w_bundle):
        return "decomposition does not reassemble"
    return None


def equal_rank(v_bundle: Bundle, w_bundle: Bundle) -> bool:
    return v_bundle.rank == w_bundle.rank


def check_equal_rank_duality(v_bundle: Bundle, w_bundle: Bundle) -> Optional[str]:
    equal_rank_duality_holds(v_bundle, w_bundle)
    return None


def check_nonneg_monotonicity(v_bundle: Bundle, w_bundle: Bundle) -> Optional[str]:
    if deg_nonneg(v_bundle) < deg_nonneg(w_bundle):
        return f"deg_nonneg {deg_nonneg(v_bundle)} < {deg_nonneg(w_bundle)}"
    for mu in slope_set(v_bundle, w_bundle):
        if mu > 0 and deg_at_least(v_bundle, mu) < deg_at_least(w_bundle, mu):
            return f"degree above {mu} is not monotone"
    return None


def check_dominance_order(a: Bundle, b: Bundle, c: Bundle) -> Optional[str]:
    if not _dominates(a, a):
        return "dominance is not reflexive"
    if _dominates(a, b) and _dominates(b, c) and not _dominates(a, c):
        return "dominance is not transitive"
    return None


def check_total_degree_counterexample(_: EnumBounds) -> Optional[str]:
    v_bundle = bundle_from_factors([(1, 4), (-1, 4)])
    w_bundle = stable(Fraction(1, 3))
    if not slopewise_dominates(v_bundle, w_bundle):
        return "expected dominance of O(1)^4 + O(-1)^4 over O(1/3)"
    if not v_bundle.degree < w_bundle.degree:
        return "total degree was expected to drop"
    if deg_nonneg(v_bundle) < deg_nonneg(w_bundle):
        return "nonnegative degree must still be monotone"
    return None


# ===== classify =====


def check_quotient_characterization(e_bundle: Bundle, f_bundle: Bundle) -> Optional[str]:
    by_ranks = is_quotient(e_bundle, f_bundle)
    by_polygon = is_quotient_polygonal(e_bundle, f_bundle)
    if by_ranks.answer != by_polygon.answer:
        return f"rank form {by_ranks.explain()}; polygon form {by_polygon.explain()}"
    return None


def check_duality_bridge(e_bundle: Bundle, f_bundle: Bundle) -> Optional[str]:
    if quotient_rank_condition(e_bundle, f_bundle) != slopewise_dominates(
        dual(e_bundle), dual(f_bundle)
    ):
        return "rank condition disagrees with dominance of duals"
    return None


def check_global_generation(f_bundle: Bundle) -> Optional[str]:
    for n in range(1, MAX_SECTIONS + 1):
        if is_globally_generated(f_bundle, n) != is_quotient(trivial(n), f_bundle).answer:
            return f"globally generated by {n} sections disagrees with quotient of O^{n}"
    return None


def check_subbundle_duality(e_bundle: Bundle, d_bundle: Bundle) -> Optional[str]:
    sufficient = subbundle_sufficient(e_bundle, d_bundle).answer
    if sufficient != is_quotient(dual(e_bundle), dual(d_bundle)).answer:
        return "sufficient subbundle test disagrees with the dual quotient test"
    if sufficient and not subbundle_necessary(e_bundle, d_bundle):
        return "sufficient condition holds but the necessary one fails"
    return None


def check_quotient_order(a: Bundle, b: Bundle, c: Bundle) -> Optional[str]:
    if not _quotient(a, a):
        return "quotients are not reflexive"
    if _quotient(a, b) and _quotient(b, c) and not _quotient(a, c):
        return "quotients do not compose"
    return None


def check_min_slope_reduction(e_bundle: Bundle, f_bundle: Bundle) -> Optional[str]:
    red = min_slope_reduction(e_bundle, f_bundle)
    if direct_sum(red.common, red.e_rest) != e_bundle:
        return "E does not reassemble"
    if direct_sum(red.common, red.f_rest) != f_bundle:
        return "F does not reassemble"
    if not is_quotient(red.e_rest, red.f_rest).answer:
        return f"{red.f_rest} is not a quotient of {red.e_rest}"
    if not red.f_rest.is_zero and not mu_min(red.f_rest) > mu_min(red.e_rest):
        return "minimal slopes were not separated"
    return None


# ===== reduction =====


def key_hypotheses_hold(e_bundle: Bundle, f_bundle: Bundle, q_bundle: Bundle) -> bool:
    return (
        _quotient(e_bundle, f_bundle)
        and _quotient(e_bundle, q_bundle)
        and _dominates(f_bundle, q_bundle)
        and mu_min(e_bundle) < mu_min(f_bundle)
    )


def check_key_inequality(e_bundle: Bundle, f_bundle: Bundle, q_bundle: Bundle) -> Optional[str]:
    report = key_inequality_check(e_bundle, f_bundle, q_bundle)
    if not report.hypotheses_ok:
        return f"hypothesis ({report.violated_hypothesis}) reported violated"
    if not report.inequality_holds:
        return f"c={report.c} is negative"
    if f_bundle == q_bundle and report.c != 0:
        return f"c={report.c} although F = Q"
    return None


def single_step_hypotheses(e_bundle: Bundle, f_bundle: Bundle, q_bundle: Bundle) -> bool:
    return (
        not q_bundle.is_zero
        and f_bundle.rank == q_bundle.rank
        and _rank_condition(e_bundle, f_bundle)
        and _quotient(e_bundle, q_bundle)
        and _dominates(f_bundle, q_bundle)
    )


def check_reduction_sequence(e_bundle: Bundle, f_bundle: Bundle, q_bundle: Bundle) -> Optional[str]:
    trace = slope_reduction_sequence(e_bundle, f_bundle, q_bundle)
    if not trace.terminated or trace.final != q_bundle:
        return "sequence did not end at Q"
    if len(trace.steps) > q_bundle.rank + 1:
        return f"{len(trace.steps)} steps exceed rank(Q) + 1"
    ranks = [step.common_u.rank for step in trace.steps]
    if any(left >= right for left, right in zip(ranks, ranks[1:])):
        return f"common ranks {ranks} are not strictly increasing"
    values = trace.c_values
    if any(left < right for left, right in zip(values, values[1:])):
        return f"c values {values} increase"
    # sem fator comum inicial o primeiro passo é a redução maximal de F para Q
    first_is_maximal = len(values) > 1 and trace.steps[0].common_u.is_zero
    if first_is_maximal and strict_drop_condition(e_bundle, f_bundle, q_bundle):
        if not values[0] > values[1]:
            return f"c values {values} do not drop on the first step"
    for step in trace.steps:
        if not (_rank_condition(e_bundle, step.f) and _dominates(step.f, q_bundle)):
            return f"hypotheses lost at F_n = {step.f}"
    return None


def check_max_reduction_step(e_bundle: Bundle, f_bundle: Bundle, q_bundle: Bundle) -> Optional[str]:
    reduced = max_slope_reduction(f_bundle, q_bundle)
    if reduced.rank != f_bundle.rank or mu_max(reduced) != mu_max(q_bundle):
        return f"reduction {reduced} changed rank or missed mu_max(Q)"
    before = c_value(e_bundle, f_bundle, q_bundle)
    after = c_value(e_bundle, reduced, q_bundle)
    if before < after:
        return "c increased after maximal slope reduction"
    strict = mu_max(f_bundle) != mu_max(q_bundle)
    if strict and strict_drop_condition(e_bundle, f_bundle, q_bundle) and before == after:
        return f"c stayed at {before} although mu_max(F) != mu_max(Q)"
    if not (_rank_condition(e_bundle, reduced) and _dominates(reduced, q_bundle)):
        return f"hypotheses lost for {reduced}"
    return None


def cut_down_applies(e_bundle: Bundle, f_bundle: Bundle, q_bundle: Bundle) -> bool:
    return f_bundle.rank > q_bundle.rank and key_hypotheses_hold(e_bundle, f_bundle, q_bundle)


def check_cut_down(e_bundle: Bundle, f_bundle: Bundle, q_bundle: Bundle) -> Optional[str]:
    smaller = cut_down(f_bundle)
    before = c_value(e_bundle, f_bundle, q_bundle)
    after = c_value(e_bundle, smaller, q_bundle)
    if not before >= after:
        return f"c grew from {before} to {after} after cutting down"
    # a queda é dp(E, O(λ)) − dp(Q, O(λ)) com λ = μ_min(F), nula só se E^{<λ} = Q^{<λ}
    lowest = mu_min(f_bundle)
    strict = slice_bundle(e_bundle, lowest, "<") != slice_bundle(q_bundle, lowest, "<")
    if (before > after) != strict:
        relation = "differ" if strict else "agree"
        return f"c went from {before} to {after} but E and Q below {lowest} {relation}"
    if not smaller.is_zero and not all(key_inequality_hypotheses(e_bundle, smaller, q_bundle)):
        return f"hypotheses lost for {smaller}"
    return None


def check_c_identities(e_bundle: Bundle, f_bundle: Bundle, q_bundle: Bundle) -> Optional[str]:
    base = c_value(e_bundle, f_bundle, q_bundle)
    for factor in STRETCH_FACTORS:
        stretched = c_value(*(stretch(b, factor) for b in (e_bundle, f_bundle, q_bundle)))
        if stretched != factor * base:
            return f"stretch by {factor}: c={stretched} != {factor} * {base}"
    for slope in (-1, 1, 2):
        if c_value(*(twist(b, -slope) for b in (e_bundle, f_bundle, q_bundle))) != base:
            return f"c is not invariant under twisting by {-slope}"
    if c_value(e_bundle, q_bundle, q_bundle) != 0:
        return "c(E, Q, Q) is not zero"
    if not f_bundle.is_zero:
        lowest = stable(mu_min(f_bundle))
        expected = (
            c_value(e_bundle, cut_down(f_bundle), q_bundle)
            + deg_pair_nonneg(e_bundle, lowest)
            - deg_pair_nonneg(q_bundle, lowest)
        )
        if base != expected:
            return f"cut-down identity fails: {base} != {expected}"
    return None


def check_pinned_example(_: EnumBounds) -> Optional[str]:
    report = key_inequality_check(trivial(3), trivial(2), trivial(1))
    if report.c != 0:
        return f"c(O^3, O^2, O) = {report.c}, expected 0"
    if report.violated_hypothesis != "iv":
        return f"expected hypothesis (iv) violated, got {report.violated_hypothesis}"
    return None


def check_equality_gap(_: EnumBounds) -> Optional[str]:
    triples = [
        (bundle_from_factors([(1, 1), (0, 1)]), stable(1), trivial(1)),
        (bundle_from_factors([(1, 2), (0, 1)]), bundle_from_factors([(1, 2)]), trivial(1)),
    ]
    for e_bundle, f_bundle, q_bundle in triples:
        name = f"[{e_bundle}; {f_bundle}; {q_bundle}]"
        report = key_inequality_check(e_bundle, f_bundle, q_bundle)
        if not report.hypotheses_ok:
            return f"hypothesis ({report.violated_hypothesis}) fails for {name}"
        if report.c != 0 or report.equality_consistent:
            return f"expected c = 0 with F != Q for {name}, got c={report.c}"
        if strict_drop_condition(e_bundle, f_bundle, q_bundle):
            return f"strict drop condition unexpectedly holds for {name}"
    return None


PROPERTIES = {
    "enumeration_soundness": {
        "module": "verify",
        "domain": "once",
        "check": check_enumeration,
        "description": (
            "Enumeration respects its bounds, has no duplicates and matches an independent count"
        ),
    },
    "canonical_form": {
        "module": "hn_core",
        "domain": "singles",
        "check": check_canonical_form,
        "description": "Canonicalization is idempotent and polygon queries agree",
    },
    "dual_laws": {
        "module": "hn_core",
        "domain": "singles",
        "check": check_dual_laws,
        "description": "Dual is an involution, negates degree and swaps slices",
    },
    "stretch_laws": {
        "module": "hn_core",
        "domain": "singles",
        "check": check_stretch_laws,
        "description": "Stretch is multiplicative and scales degree",
    },
    "tensor_laws": {
        "module": "hn_core",
        "domain": "pairs",
        "check": check_tensor_laws,
        "description": "Tensor rank/degree formulas, commutativity and unit",
    },
    "tensor_algebra": {
        "module": "hn_core",
        "domain": "small_triples",
        "check": check_tensor_algebra,
        "description": "Tensor distributes over direct sums and is associative",
    },
    "oracle_agreement": {
        "module": "pairing",
        "domain": "pairs",
        "check": check_oracle_agreement,
        "description": "Cross-product pairings agree with full tensor expansion",
    },
    "shear_identity": {
        "module": "pairing",
        "domain": "pairs",
        "check": check_shear_identity,
        "description": "Twisting both bundles scales the pairing by rank(O(lambda))^2",
    },
    "stretch_identity": {
        "module": "pairing",
        "domain": "pairs",
        "check": check_stretch_identity,
        "description": "Stretching both bundles scales the pairing by C",
    },
    "zero_dimension_law": {
        "module": "pairing",
        "domain": "pairs",
        "applies": both_nonzero,
        "check": check_zero_dimension_law,
        "description": "Moduli dimension vanishes exactly when mu_min(V) >= mu_max(W)",
    },
    "dominance_characterization": {
        "module": "dominance",
        "domain": "pairs",
        "check": check_dominance_characterization,
        "description": "Interval, rank and expanded forms of dominance agree",
    },
    "decomposition_soundness": {
        "module": "dominance",
        "domain": "pairs",
        "applies": _dominates,
        "check": check_decomposition,
        "description": "Common factor decompositions reassemble and satisfy their invariants",
    },
    "equal_rank_duality": {
        "module": "dominance",
        "domain": "pairs",
        "applies": equal_rank,
        "check": check_equal_rank_duality,
        "description": "V dominates W iff dual W dominates dual V at equal rank",
    },
    "nonneg_degree_monotonicity": {
        "module": "dominance",
        "domain": "pairs",
        "applies": _dominates,
        "check": check_nonneg_monotonicity,
        "description": "Dominance bounds the degree of every part of slope >= mu > 0 and >= 0",
    },
    "dominance_order": {
        "module": "dominance",
        "domain": "triples",
        "check": check_dominance_order,
        "description": "Dominance is reflexive and transitive",
    },
    "total_degree_counterexample": {
        "module": "dominance",
        "domain": "once",
        "check": check_total_degree_counterexample,
        "description": "Total degree is not monotone under dominance",
    },
    "quotient_characterization": {
        "module": "classify",
        "domain": "pairs",
        "check": check_quotient_characterization,
        "description": "Rank and polygon quotient criteria agree",
    },
    "duality_bridge": {
        "module": "classify",
        "domain": "pairs",
        "check": check_duality_bridge,
        "description": "Quotient rank condition equals dominance of duals",
    },
    "global_generation": {
        "module": "classify",
        "domain": "singles",
        "check": check_global_generation,
        "description": "Globally generated by n sections iff quotient of O^n",
    },
    "subbundle_duality": {
        "module": "classify",
        "domain": "pairs",
        "check": check_subbundle_duality,
        "description": "Sufficient subbundle test equals the dual quotient test",
    },
    "quotient_order": {
        "module": "classify",
        "domain": "triples",
        "check": check_quotient_order,
        "description": "Quotients are reflexive and compose",
    },
    "min_slope_reduction": {
        "module": "reduction",
        "domain": "pairs",
        "applies": _quotient,
        "check": check_min_slope_reduction,
        "description": "Splitting the common tail keeps the quotient and separates minimal slopes",
    },
    "pinned_example": {
        "module": "reduction",
        "domain": "once",
        "check": check_pinned_example,
        "description": "c(O^3, O^2, O) = 0 with the minimal slope hypothesis violated",
    },
    "equality_gap": {
        "module": "reduction",
        "domain": "once",
        "check": check_equality_gap,
        "description": "c = 0 with F != Q although all four key hypotheses hold",
    },
    "key_inequality": {
        "module": "reduction",
        "domain": "key_triples",
        "applies": key_hypotheses_hold,
        "check": check_key_inequality,
        "description": "c >= 0, and c = 0 when F = Q",
    },
    "reduction_sequence": {
        "module": "reduction",
        "domain": "key_triples",
        "applies": single_step_hypotheses,
        "check": check_reduction_sequence,
        "description": (
            "Slope reduction terminates at Q with nonincreasing c, "
            "strictly on the first step when forced"
        ),
    },
    "max_reduction_step": {
        "module": "reduction",
        "domain": "key_triples",
        "applies": single_step_hypotheses,
        "check": check_max_reduction_step,
        "description": "Maximal slope reduction does not increase c and lowers it when forced",
    },
    "cut_down": {
        "module": "reduction",
        "domain": "key_triples",
        "applies": cut_down_applies,
        "check": check_cut_down,
        "description": (
            "Removing O(mu_min F) keeps the hypotheses and lowers c "
            "unless E and Q agree below mu_min F"
        ),
    },
    "c_identities": {
        "module": "reduction",
        "domain": "small_triples",
        "check": check_c_identities,
        "description": "Stretch scaling, shear invariance and the cut-down identity for c",
    },
}
