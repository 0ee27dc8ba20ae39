import itertools
from fractions import Fraction

import pytest

from oracles import necklace_count
from quivercount import counting
from quivercount.canonical import canonical_key
from quivercount.classify import parse_rooted_type_a
from quivercount.quiver import ExchangeQuiver, underlying_graph_connected
from quivercount.series import (
    TruncatedSeries,
    atilde_series,
    b_series,
    b_series_at_unit,
    log_one_over_one_minus,
    solve_a_point,
    solve_catalan_shifted,
)

VARS = ("p", "q")


def mono(deg, **exps):
    return TruncatedSeries.monomial(VARS, deg, **exps)


# -- ring arithmetic -----------------------------------------------------------


def test_product_of_conjugates():
    one = TruncatedSeries.constant(VARS, 8, 1)
    z = mono(8, p=1)
    assert (one + z) * (one - z) == one - z * z


def test_additive_identity_and_truncation():
    f = mono(3, p=2) + mono(3, q=1) * 5
    assert f + TruncatedSeries.zero(VARS, 3) == f
    assert (mono(3, p=2) * mono(3, q=2)).coeffs == {}


def test_mismatched_operands_rejected():
    with pytest.raises(ValueError):
        mono(3, p=1) + mono(4, p=1)
    with pytest.raises(ValueError):
        mono(3, p=1) * TruncatedSeries.monomial(("p", "t"), 3, p=1)


def test_power_and_scalar():
    f = (1 + mono(6, p=1)) ** 3
    assert f.coefficient(p=2) == 3
    assert (Fraction(1, 2) * mono(6, p=1)).coefficient(p=1) == Fraction(1, 2)


def test_substitute_square():
    geom = TruncatedSeries(VARS, 8, {(n, 0): 1 for n in range(9)})
    squared = geom.substitute("p", mono(8, p=2))
    assert squared == TruncatedSeries(VARS, 8, {(2 * n, 0): 1 for n in range(5)})
    with pytest.raises(ValueError):
        geom.substitute("p", TruncatedSeries.constant(VARS, 8, 1))


def test_derivative():
    f = mono(6, p=3, q=1) * 2
    assert f.derivative("p") == mono(6, p=2, q=1) * 6
    assert f.derivative("q").coefficient(p=3) == 2


# -- logarithm ------------------------------------------------------------------


def test_log_of_geometric_variable():
    lg = log_one_over_one_minus(mono(8, p=1))
    for m in range(1, 9):
        assert lg.coefficient(p=m) == Fraction(1, m)
    with pytest.raises(ValueError):
        log_one_over_one_minus(TruncatedSeries.constant(VARS, 8, 1))


def test_log_of_block_alphabet_matches_binomial_form():
    # the unmarked coefficients are binomial products over twice the rank
    deg = 10
    lg = log_one_over_one_minus(b_series_at_unit(deg, VARS))
    for r in range(0, deg + 1):
        for s in range(0, deg + 1 - r):
            if r + s == 0:
                continue
            got = lg.coefficient(p=r, q=s)
            want = Fraction(
                counting.binomial(2 * r, r) * counting.binomial(2 * s, s),
                2 * (r + s),
            )
            assert got == want, (r, s)


def test_log_of_marked_alphabet_matches_summation():
    deg = 9
    lg = log_one_over_one_minus(b_series(deg))
    for r in range(1, deg):
        for s in range(1, deg - r + 1):
            for r2 in range(r // 2 + 1):
                for s2 in range(s // 2 + 1):
                    if r + s + r2 + s2 > deg:
                        continue
                    got = lg.coefficient(p=r, q=s, x=r2, y=s2)
                    assert got == counting.cycle_log_coefficient(r, r2, s, s2)


# -- rooted type A generating function -------------------------------------------


def test_a_point_base_coefficients():
    a = solve_a_point(12)
    assert a.coefficient() == 1
    assert a.coefficient(z=2, t=1) == 1
    assert a.coefficient(z=2) == 4
    assert a.coefficient(z=3) == 8
    assert a.coefficient(z=3, t=1) == 6


def test_a_point_quadratic_identity():
    deg = 12
    a = solve_a_point(deg)
    one = TruncatedSeries.constant(("z", "t"), deg, 1)
    z = TruncatedSeries.monomial(("z", "t"), deg, z=1)
    z2t = TruncatedSeries.monomial(("z", "t"), deg, z=2, t=1)
    assert a == one + 2 * (z * a) + z2t * (a * a)


def test_a_point_catalan_specialization():
    a1 = solve_a_point(12).specialize_one("t")
    assert [a1.coefficient(z=d) for d in range(5)] == [1, 2, 5, 14, 42]
    direct = solve_catalan_shifted(12)
    for d in range(8):
        assert a1.coefficient(z=d) == direct.coefficient(z=d)


def _rooted_type_a_census(nverts):
    """Brute-force census of rooted type A quivers by 3-cycle count.

    Enumerates all single-arrow digraphs on nverts labelled vertices with
    root 0, keeps the connected ones the structural parser accepts, and
    deduplicates up to root-preserving isomorphism.
    """
    pairs = list(itertools.combinations(range(nverts), 2))
    census = {}
    seen = set()
    for assignment in itertools.product((0, 1, -1), repeat=len(pairs)):
        b = [[0] * nverts for _ in range(nverts)]
        for (i, j), v in zip(pairs, assignment):
            b[i][j] = v
            b[j][i] = -v
        q = ExchangeQuiver.from_matrix(b)
        if not underlying_graph_connected(q):
            continue
        parsed = parse_rooted_type_a(q, 0)
        if parsed is None:
            continue
        key = canonical_key(q, colors=[0] + [1] * (nverts - 1))
        if key in seen:
            continue
        seen.add(key)
        census[parsed] = census.get(parsed, 0) + 1
    return census


@pytest.mark.parametrize("nverts", [1, 2, 3, 4])
def test_a_point_against_brute_force_enumeration(nverts):
    a = solve_a_point(12)
    census = _rooted_type_a_census(nverts)
    total = 0
    for (plain, cycles), count in census.items():
        assert plain + 2 * cycles == nverts - 1
        assert a.coefficient(z=nverts - 1, t=cycles) == count
        total += count
    # and nothing else contributes at this weight
    tmax = (nverts - 1) // 2
    assert total == sum(
        a.coefficient(z=nverts - 1, t=c) for c in range(tmax + 1)
    )


# -- block alphabet identities ---------------------------------------------------


def test_block_alphabet_substitution_identity():
    deg = 12
    variables = ("p", "q", "x", "y")
    lhs = b_series(deg, variables)
    base = b_series_at_unit(deg, variables)
    p = TruncatedSeries.monomial(variables, deg, p=1)
    p2 = TruncatedSeries.monomial(variables, deg, p=2)
    p2x = TruncatedSeries.monomial(variables, deg, p=2, x=1)
    q = TruncatedSeries.monomial(variables, deg, q=1)
    q2 = TruncatedSeries.monomial(variables, deg, q=2)
    q2y = TruncatedSeries.monomial(variables, deg, q=2, y=1)
    rhs = base.substitute("p", p + p2x - p2).substitute("q", q + q2y - q2)
    assert lhs == rhs


def test_derivative_identity_squared_form():
    deg = 12
    variables = ("t", "p", "q")
    marked = b_series_at_unit(deg, ("p", "q")).mark_total_degree(variables, "t")
    lg = log_one_over_one_minus(marked)
    t = TruncatedSeries.monomial(variables, deg, t=1)
    left = 1 + 2 * (t * lg.derivative("t"))
    tp = TruncatedSeries.monomial(variables, deg, t=1, p=1)
    tq = TruncatedSeries.monomial(variables, deg, t=1, q=1)
    one = TruncatedSeries.constant(variables, deg, 1)
    assert left * left * (one - 4 * tp) * (one - 4 * tq) == one


# -- the cycle construction -------------------------------------------------------


def test_cycle_construction_reproduces_necklace_counts():
    deg = 8
    atoms = mono(deg, p=1) + mono(deg, q=1)
    total = TruncatedSeries.zero(VARS, deg)
    for k in range(1, deg + 1):
        ak = atoms.raise_exponents(k)
        if not ak.coeffs:
            break
        total = total + log_one_over_one_minus(ak) * Fraction(
            counting.euler_phi(k), k
        )
    for length in range(1, deg + 1):
        for ones in range(length + 1):
            got = total.coefficient(p=ones, q=length - ones)
            assert got == necklace_count(length, ones), (length, ones)


def test_annular_series_basic_coefficients():
    at = atilde_series(10)
    assert at.coefficient(p=1, q=1) == 1
    marginal = sum(
        at.coefficient(p=2, q=2, x=r2, y=s2)
        for r2 in range(2)
        for s2 in range(2)
    )
    assert marginal == counting.realization_count(2, 2) == 5


def test_annular_series_matches_refined_counts():
    deg = 10
    at = atilde_series(deg)
    for r in range(1, deg):
        for s in range(1, deg - r + 1):
            for r2 in range(r // 2 + 1):
                for s2 in range(s // 2 + 1):
                    if r + s + r2 + s2 > deg:
                        continue
                    assert at.coefficient(
                        p=r, q=s, x=r2, y=s2
                    ) == counting.refined_realization_count(r, r2, s, s2)


def test_annular_series_marker_support():
    at = atilde_series(10)
    for (er, es, ex, ey), c in at.coeffs.items():
        assert c > 0
        assert 2 * ex <= er and 2 * ey <= es


def test_annular_series_oriented_specialization():
    # the marginal over the 3-cycle marker needs every cell under the
    # truncation, so only weights with n + n//2 <= degree are complete
    deg = 10
    at = atilde_series(deg)
    for n in range(3, deg + 1):
        if n + n // 2 > deg:
            continue
        got = sum(at.coefficient(q=n, y=s2) for s2 in range(n // 2 + 1))
        assert got == counting.a_tilde(0, n)
