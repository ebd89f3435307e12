import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from latpoly.errors import ArityError, ContractViolationError, MonotonicityError, UnsupportedLatticeError
from latpoly.lattice import make_chain, med
from latpoly.poly import (
    CoefMap,
    FuzzyMeasure,
    alpha_from_oracle,
    alpha_star,
    beta_from_oracle,
    beta_star,
    cnf_table,
    decompose,
    dnf_interval,
    dnf_table,
    eval_cnf,
    eval_dnf,
    eval_simplex,
    extend_boolean,
    is_unique_cnf,
    is_unique_dnf,
    measure_from_poly,
    members,
    simplex_forms,
    sugeno_eval,
)
from latpoly.table import FunctionTable

from conftest import brute_polynomials


def raw_dnf(alpha, x):
    """max over I of min(alpha(I), x_i for i in I), straight from the definition."""
    n = len(x)
    return max(min([alpha[mask]] + [x[i] for i in range(n) if mask >> i & 1]) for mask in range(1 << n))


def cm(L, *vals):
    n = (len(vals) - 1).bit_length()
    return CoefMap(L, n, tuple(vals))


# -- eval_dnf / eval_cnf -----------------------------------------------------------


def test_eval_dnf_hand_examples(c3):
    a = cm(c3, 0, 1, 0, 2)
    assert eval_dnf(a, (2, 2)) == 2
    assert eval_dnf(a, (2, 0)) == 1


def test_eval_dnf_at_bottom_is_alpha_empty(c3):
    for vals in itertools.product(range(3), repeat=4):
        assert eval_dnf(cm(c3, *vals), (0, 0)) == vals[0]


def test_eval_dnf_matches_raw_definition(c3):
    for vals in itertools.product(range(3), repeat=4):
        a = cm(c3, *vals)
        for x in itertools.product(range(3), repeat=2):
            assert eval_dnf(a, x) == raw_dnf(vals, x)


def test_eval_dnf_arity_mismatch(c3):
    with pytest.raises(ArityError):
        eval_dnf(cm(c3, 0, 1, 0, 2), (1,))


def test_eval_cnf_examples(c3):
    b = cm(c3, 2, 1, 0, 0)
    assert eval_cnf(b, (2, 1)) == 1
    for vals in itertools.product(range(3), repeat=4):
        assert eval_cnf(cm(c3, *vals), (2, 2)) == vals[0]


def test_cnf_of_beta_reproduces_polynomials(polys3):
    for f in polys3:
        b = beta_from_oracle(f)
        assert cnf_table(b).values == f.values
        assert dnf_table(alpha_from_oracle(f)).values == f.values


# -- alpha / beta ------------------------------------------------------------------


def test_alpha_of_projection(c3):
    f = FunctionTable.from_function(c3, 2, lambda x1, x2: x1)
    assert alpha_from_oracle(f).values == (0, 2, 0, 2)


def test_alpha_of_median_with_constant(c3):
    # med(0,1,0) = 0, so the empty-set coefficient is bottom
    f = FunctionTable.from_function(c3, 2, lambda x1, x2: med(c3, [x1, 1, x2]))
    assert alpha_from_oracle(f).values == (0, 1, 1, 2)


def test_beta_is_alpha_of_complement(c3):
    for vals in list(itertools.product(range(3), repeat=9))[::997]:
        f = FunctionTable(c3, 2, vals)
        a, b = alpha_from_oracle(f), beta_from_oracle(f)
        assert all(b[m] == a[3 ^ m] for m in range(4))


def test_alpha_star_examples(c3):
    assert alpha_star(cm(c3, 0, 1, 1, 1)).values == (0, 1, 1, 0)
    assert alpha_star(cm(c3, 0, 1, 1, 2)).values == (0, 1, 1, 2)
    for c in (1, 2):
        assert alpha_star(cm(c3, c, c, c, c)).values == (c, 0, 0, 0)


def test_beta_star_examples(c3):
    assert beta_star(cm(c3, 2, 1, 1, 1)).values == (2, 1, 1, 2)
    for c in (0, 1):
        assert beta_star(cm(c3, c, c, c, c)).values == (c, 2, 2, 2)
    assert beta_star(cm(c3, 2, 1, 1, 0)).values == (2, 1, 1, 0)


def test_star_rejects_table_lattice(dia):
    with pytest.raises(UnsupportedLatticeError):
        alpha_star(CoefMap(dia, 1, (0, 3)))


def test_uniqueness_examples(c2):
    meet = FunctionTable.from_function(c2, 2, min)
    lo, hi = dnf_interval(meet)
    assert lo.values == hi.values == (0, 0, 0, 1)
    assert is_unique_dnf(meet)
    join = FunctionTable.from_function(c2, 2, max)
    lo, hi = dnf_interval(join)
    assert (lo.values, hi.values) == ((0, 1, 1, 0), (0, 1, 1, 1))
    assert not is_unique_dnf(join)
    assert dnf_table(lo).values == dnf_table(hi).values == join.values


def test_uniqueness_rejects_non_polynomial(c3):
    f = FunctionTable(c3, 1, (0, 0, 2))
    with pytest.raises(ContractViolationError):
        dnf_interval(f)


def _box(lo, hi):
    return itertools.product(*[range(a, b + 1) for a, b in zip(lo.values, hi.values)])


def test_dnf_box_represents_f(polys3, c3):
    for f in polys3:
        lo, hi = dnf_interval(f)
        box = set(_box(lo, hi))
        for gamma in itertools.product(range(3), repeat=4):
            same = all(raw_dnf(gamma, x) == v for x, v in f.points())
            assert same == (gamma in box)
        assert is_unique_dnf(f) == (len(box) == 1)


def test_cnf_box_represents_f(polys3, c3):
    for f in polys3:
        b = beta_from_oracle(f)
        bs = beta_star(b)
        box = set(_box(b, bs))
        for gamma in itertools.product(range(3), repeat=4):
            same = cnf_table(CoefMap(c3, 2, gamma)).values == f.values
            assert same == (gamma in box)
        assert is_unique_cnf(f) == (len(box) == 1)


# -- Boolean extension -------------------------------------------------------------


def test_extend_boolean_example(c3):
    g = {(0, 0): 0, (1, 0): 1, (0, 1): 1, (1, 1): 2}
    assert extend_boolean(c3, g)(2, 0) == 1


def test_extend_boolean_constant(c3):
    p = extend_boolean(c3, {e: 1 for e in itertools.product((0, 1), repeat=2)})
    assert set(p.table().values) == {1}


def test_extend_boolean_rejects_decreasing(c3):
    g = {(0, 0): 1, (1, 0): 0, (0, 1): 1, (1, 1): 2}
    with pytest.raises(MonotonicityError) as exc:
        extend_boolean(c3, g)
    assert (exc.value.lower, exc.value.upper) == ((0, 0), (1, 0))


def test_goodstein_determinacy(c4):
    for vals in brute_polynomials(4, 2):
        f = FunctionTable(c4, 2, vals)
        assert dnf_table(alpha_from_oracle(f)).values == vals


@settings(max_examples=60, deadline=None)
@given(st.lists(st.integers(0, 2), min_size=8, max_size=8))
def test_goodstein_determinacy_arity3(vals):
    L = make_chain(3)
    f = dnf_table(CoefMap(L, 3, tuple(vals)))
    a = alpha_from_oracle(f)
    assert dnf_table(a).values == f.values
    assert a.is_isotone()
    assert dnf_table(alpha_star(a)).values == f.values
    assert alpha_from_oracle(dnf_table(a)) == a


@given(st.lists(st.integers(0, 3), min_size=4, max_size=4), st.data())
def test_dnf_monotone_in_x_and_alpha(vals, data):
    L = make_chain(4)
    a = cm(L, *vals)
    x = data.draw(st.tuples(st.integers(0, 3), st.integers(0, 3)))
    y = tuple(max(p, data.draw(st.integers(0, 3))) for p in x)
    assert eval_dnf(a, x) <= eval_dnf(a, y)
    bigger = cm(L, *[max(v, data.draw(st.integers(0, 3))) for v in vals])
    assert eval_dnf(a, x) <= eval_dnf(bigger, x)


# -- simplex forms ---------------------------------------------------------------


def test_simplex_equals_dnf_on_all_polynomials(polys3):
    for f in polys3:
        a = alpha_from_oracle(f)
        for x, v in f.points():
            assert eval_simplex(a, x) == eval_dnf(a, x) == v


def test_simplex_all_sorting_orders_agree(polys3):
    for f in polys3:
        a = alpha_from_oracle(f)
        for x, v in f.points():
            for s in itertools.permutations(range(2)):
                if x[s[0]] <= x[s[1]]:
                    assert simplex_forms(a, x, s) == (v, v, v)


def test_simplex_constant_tuple_clamps(polys3):
    for f in polys3:
        a = alpha_from_oracle(f)
        for c in range(3):
            assert eval_simplex(a, (c, c)) == sorted([f.at_bottom(), c, f.at_top()])[1]


def test_simplex_unary(c4):
    for lo in range(4):
        for hi in range(lo, 4):
            for x in range(4):
                assert eval_simplex(cm(c4, lo, hi), (x,)) == sorted([lo, x, hi])[1]


def test_decompose_stable_ties(c3):
    d = decompose(c3, (1, 0, 1))
    assert d.sigma == (1, 0, 2)
    assert d.up_sets[-1] == 0 and d.down_sets[0] == 0
    full = (1 << 3) - 1
    for i in range(1, 4):
        assert d.down_sets[i - 1] == full ^ d.up_sets[i - 1]


def test_simplex_rejects_table_lattice(dia):
    with pytest.raises(UnsupportedLatticeError):
        eval_simplex(CoefMap(dia, 1, (0, 3)), (1,))


# -- Sugeno ----------------------------------------------------------------------


def test_sugeno_hand_example(c3):
    mu = FuzzyMeasure(c3, 2, (0, 2, 1, 2))
    assert sugeno_eval(mu, (1, 2)) == 1


def test_sugeno_idempotent_and_indicator(c3):
    for m1, m2 in itertools.product(range(3), repeat=2):
        mu = FuzzyMeasure(c3, 2, (0, m1, m2, 2))
        for c in range(3):
            assert sugeno_eval(mu, (c, c)) == c
        for mask in range(4):
            e = tuple(2 if mask >> i & 1 else 0 for i in range(2))
            assert sugeno_eval(mu, e) == mu[mask]


def test_sugeno_unanimity(c3):
    mu = FuzzyMeasure(c3, 2, (0, 0, 0, 2))
    for x in itertools.product(range(3), repeat=2):
        assert sugeno_eval(mu, x) == min(x)


def test_fuzzy_measure_validation(c3):
    with pytest.raises(ContractViolationError):
        FuzzyMeasure(c3, 2, (1, 1, 1, 2))
    with pytest.raises(ContractViolationError):
        FuzzyMeasure(c3, 2, (0, 1, 1, 1))
    with pytest.raises(ContractViolationError):
        FuzzyMeasure(c3, 2, (0, 2, 0, 1))


def test_measure_from_poly_clamps_back(polys3, c3):
    for f in polys3:
        mu = measure_from_poly(f)
        a = alpha_from_oracle(f)
        assert mu.values[1:-1] == a.values[1:-1]
        for x, v in f.points():
            assert sorted([f.at_bottom(), sugeno_eval(mu, x), f.at_top()])[1] == v


def test_measure_from_poly_on_sugeno_is_alpha(c3):
    f = dnf_table(FuzzyMeasure(c3, 2, (0, 1, 2, 2)))
    assert measure_from_poly(f).values == (0, 1, 2, 2)


def test_measure_from_poly_constant(c3):
    f = FunctionTable(c3, 2, (1,) * 9)
    mu = measure_from_poly(f)
    assert (mu[0], mu[3]) == (0, 2)
    assert all(sorted([1, sugeno_eval(mu, x), 1])[1] == 1 for x, _ in f.points())


def test_measure_from_poly_rejects_non_polynomial(c3):
    with pytest.raises(ContractViolationError):
        measure_from_poly(FunctionTable(c3, 1, (0, 0, 2)))


def test_members():
    assert members(0b101, 3) == (0, 2)
