"""Self-contained cross-verification of the whole artifact.

Every identity ties two independently implemented routes together: class
sizes from the breadth-first enumerator against the closed forms, parameter
censuses from the classifier against the refined counts, and power-series
coefficients against the summation formulas.  No network, no external data.
"""

from __future__ import annotations

from collections import Counter
from fractions import Fraction
from functools import partial

from quivercount import counting
from quivercount.classify import classify, is_symmetric
from quivercount.mutation_class import enumerate_class, seed_cycle, seed_dynkin_d
from quivercount.series import (
    TruncatedSeries,
    atilde_series,
    b_series,
    b_series_at_unit,
    log_one_over_one_minus,
    solve_a_point,
)


def _class_sizes(get_class, r, s):
    mc = get_class(r, s)
    expected = counting.a_tilde(r, s)
    assert mc.size == expected, f"enumerated {mc.size}, formula says {expected}"


def _dynkin_size(n):
    mc = enumerate_class(seed_dynkin_d(n))
    expected = counting.d_n_count(n)
    assert mc.size == expected, f"enumerated {mc.size}, formula says {expected}"


def _census(mc):
    """Classifier sweep over a class: parameter, symmetry and realization data."""
    params = Counter()
    realizations = Counter()
    symmetric = 0
    for q in mc.representatives():
        st = classify(q)
        assert st is not None, "class member fell outside the annular family"
        params[st.realization_1.as_tuple()] += 1
        realizations[st.realization_1.as_tuple()] += 1
        if is_symmetric(st):
            symmetric += 1
        else:
            realizations[st.realization_2.as_tuple()] += 1
    return params, realizations, symmetric


def _parameter_census(get_class, r, s):
    mc = get_class(r, s)
    params, realizations, symmetric = _census(mc)

    splits = set()
    for r1, r2 in counting.parameter_splits(r):
        for t1, t2 in counting.parameter_splits(s):
            splits.add(counting.normalize_parameters(r1, r2, t1, t2))
    assert set(params) <= splits, f"unexpected parameters {set(params) - splits}"
    for split in sorted(splits):
        expected = counting.derived_class_count(*split)
        got = params.get(split, 0)
        assert got == expected, f"split {split}: census {got}, formula {expected}"
    assert sum(params.values()) == counting.a_tilde(r, s)

    # every realization census cell must match the refined count
    for (r1, r2, t1, t2), got in sorted(realizations.items()):
        expected = counting.refined_realization_count(
            r1 + 2 * r2, r2, t1 + 2 * t2, t2
        )
        assert got == expected, (
            f"realizations {(r1, r2, t1, t2)}: census {got}, formula {expected}"
        )
    total = sum(realizations.values())
    if r == s:
        expected_total = counting.realization_count(r, r)
    else:
        expected_total = counting.realization_count(r, s) + counting.realization_count(s, r)
    assert total == expected_total, (
        f"realization total {total}, formula {expected_total}"
    )


def _symmetric_census(get_class, r):
    mc = get_class(r, r)
    _, _, symmetric = _census(mc)
    expected = counting.symmetric_count(r)
    assert symmetric == expected, f"census {symmetric}, formula {expected}"


def _marginalization(r, s):
    total = 0
    for r2 in range(r // 2 + 1):
        for s2 in range(s // 2 + 1):
            total += counting.refined_realization_count(r, r2, s, s2)
    expected = counting.realization_count(r, s)
    assert total == expected, f"sum {total}, realization count {expected}"


def _partition(r, s):
    splits = set()
    for r1, r2 in counting.parameter_splits(r):
        for t1, t2 in counting.parameter_splits(s):
            splits.add(counting.normalize_parameters(r1, r2, t1, t2))
    total = sum(counting.derived_class_count(*split) for split in splits)
    expected = counting.a_tilde(r, s)
    assert total == expected, f"partition sum {total}, class count {expected}"


def _series_quadratic(degree):
    variables = ("z", "t")
    a = solve_a_point(degree, variables)
    one = TruncatedSeries.constant(variables, degree, 1)
    z = TruncatedSeries.monomial(variables, degree, z=1)
    z2t = TruncatedSeries.monomial(variables, degree, z=2, t=1)
    rhs = one + 2 * (z * a) + z2t * (a * a)
    assert a == rhs, "quadratic functional equation fails"


def _series_catalan(degree):
    a = solve_a_point(degree, ("z", "t"))
    a1 = a.specialize_one("t")
    # z^d is complete once d + d//2 fits under the truncation
    dmax = 0
    while dmax + 1 + (dmax + 1) // 2 <= degree:
        dmax += 1
    for d in range(dmax + 1):
        expected = Fraction(counting.binomial(2 * d + 2, d + 1), d + 2)
        got = a1.coefficient(z=d)
        assert got == expected, f"z^{d}: {got} != {expected}"


def _series_substitution(degree):
    variables = ("p", "q", "x", "y")
    lhs = b_series(degree, variables)
    base = b_series_at_unit(degree, variables)
    p = TruncatedSeries.monomial(variables, degree, p=1)
    p2 = TruncatedSeries.monomial(variables, degree, p=2)
    p2x = TruncatedSeries.monomial(variables, degree, p=2, x=1)
    q = TruncatedSeries.monomial(variables, degree, q=1)
    q2 = TruncatedSeries.monomial(variables, degree, q=2)
    q2y = TruncatedSeries.monomial(variables, degree, q=2, y=1)
    rhs = base.substitute("p", p + p2x - p2).substitute("q", q + q2y - q2)
    assert lhs == rhs, "marker substitution identity fails"


def _series_derivative(degree):
    variables = ("t", "p", "q")
    b2 = b_series_at_unit(degree, ("p", "q"))
    marked = b2.mark_total_degree(variables, "t")
    lhs = log_one_over_one_minus(marked)
    t = TruncatedSeries.monomial(variables, degree, t=1)
    left = 1 + 2 * (t * lhs.derivative("t"))
    tp = TruncatedSeries.monomial(variables, degree, t=1, p=1)
    tq = TruncatedSeries.monomial(variables, degree, t=1, q=1)
    one = TruncatedSeries.constant(variables, degree, 1)
    # squared form keeps everything polynomial
    assert left * left * (one - 4 * tp) * (one - 4 * tq) == one, (
        "derivative identity (squared) fails"
    )


def _series_grid(degree):
    at = atilde_series(degree)
    for r in range(1, degree):
        for s in range(1, degree - r + 1):
            for r2 in range(r // 2 + 1):
                for s2 in range(s // 2 + 1):
                    if r + s + r2 + s2 > degree:
                        continue
                    got = at.coefficient(p=r, q=s, x=r2, y=s2)
                    expected = counting.refined_realization_count(r, r2, s, s2)
                    assert got == expected, (
                        f"[p^{r} q^{s} x^{r2} y^{s2}] = {got}, formula {expected}"
                    )
    # all-clockwise cycles specialize to the type D count; the marker
    # marginal is complete only while n + n//2 fits under the truncation
    for n in range(3, degree + 1):
        if n + n // 2 > degree:
            break
        got = sum(
            at.coefficient(q=n, y=s2) for s2 in range(n // 2 + 1)
        )
        expected = counting.a_tilde(0, n)
        assert got == expected, f"[q^{n}] total {got}, formula {expected}"


def iter_checks(n_max: int = 8, degree: int = 10):
    """Yield (name, thunk) pairs; thunks raise AssertionError on failure."""
    cache: dict[tuple[int, int], object] = {}

    def get_class(r, s):
        if (r, s) not in cache:
            cache[r, s] = enumerate_class(seed_cycle(r, s))
        return cache[r, s]

    for total in range(2, n_max + 1):
        for r in range(1, total // 2 + 1):
            s = total - r
            yield f"class-size-atilde-{r}-{s}", partial(_class_sizes, get_class, r, s)
    for n in range(4, min(8, n_max) + 1):
        yield f"class-size-dynkin-d-{n}", partial(_dynkin_size, n)
    for total in range(2, min(8, n_max) + 1):
        for r in range(1, total // 2 + 1):
            yield f"parameter-census-{r}-{total - r}", partial(
                _parameter_census, get_class, r, total - r
            )
    for r in range(1, min(4, n_max // 2) + 1):
        yield f"symmetric-census-{r}", partial(_symmetric_census, get_class, r)
    for r in range(1, 7):
        for s in range(r, 7):
            yield f"marginalization-{r}-{s}", partial(_marginalization, r, s)
    for total in range(2, 9):
        for r in range(1, total // 2 + 1):
            yield f"partition-{r}-{total - r}", partial(_partition, r, total - r)
    yield "series-quadratic-identity", partial(_series_quadratic, degree)
    yield "series-catalan-specialization", partial(_series_catalan, degree)
    yield "series-substitution-identity", partial(_series_substitution, degree)
    yield "series-derivative-identity", partial(_series_derivative, degree)
    yield "series-coefficient-grid", partial(_series_grid, degree)


def run_verification(n_max: int = 8, degree: int = 10, log=print):
    """Run all checks; return the name of the first failure, or None."""
    for name, thunk in iter_checks(n_max, degree):
        try:
            thunk()
        except AssertionError as exc:
            log(f"FAIL {name}: {exc}")
            return name
        log(f"ok {name}")
    return None
