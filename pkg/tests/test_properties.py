from hypothesis import assume, given, settings
from hypothesis import strategies as st

from ducci import coeffs
from ducci.closure import canonical_beta, classify_fast, rotation_matches
from ducci.core import (RingParams, TupleZ, abs_ducci_step, add, apply_power,
                        basic_info, basic_tuple, basis_decompose, cycle_info,
                        ducci_step, iterate, scale, shift, zero_tuple)
from ducci.graph import preimages


@st.composite
def ring_tuples(draw, max_n=8, max_m=12):
    n = draw(st.integers(1, max_n))
    m = draw(st.integers(2, max_m))
    params = RingParams(n, m)
    entries = tuple(draw(st.integers(0, m - 1)) for _ in range(n))
    return TupleZ(params, entries)


@given(ring_tuples(), st.integers(-20, 20))
def test_step_commutes_with_rotation(u, beta):
    assert shift(ducci_step(u), beta) == ducci_step(shift(u, beta))


@given(ring_tuples())
def test_step_is_identity_plus_rotation(u):
    assert ducci_step(u) == add(u, shift(u, 1))


@given(ring_tuples(), st.integers(0, 50))
def test_step_respects_scaling(u, c):
    assert ducci_step(scale(c, u)) == scale(c, ducci_step(u))


@given(ring_tuples(), st.data())
def test_step_respects_addition(u, data):
    v_entries = tuple(
        data.draw(st.integers(0, u.params.m - 1)) for _ in range(u.params.n))
    v = TupleZ(u.params, v_entries)
    assert ducci_step(add(u, v)) == add(ducci_step(u), ducci_step(v))


@given(ring_tuples(), st.integers(0, 80))
def test_power_route_matches_stepping(u, r):
    assert apply_power(u, r) == iterate(u, r)


@given(ring_tuples())
def test_basis_reconstruction(u):
    acc = zero_tuple(u.params)
    e = basic_tuple(u.params)
    for coeff, s in basis_decompose(u):
        acc = add(acc, scale(coeff, shift(e, s)))
    assert acc == u


@settings(deadline=None, max_examples=40)
@given(ring_tuples(max_n=6, max_m=10))
def test_orbit_bounded_by_basic_orbit(u):
    info = cycle_info(u)
    basic = basic_info(u.params)
    assert info.length <= basic.length
    assert basic.period % info.period == 0


@settings(deadline=None, max_examples=30)
@given(st.sampled_from([1, 2, 4, 8]), st.sampled_from([2, 4, 8]), st.data())
def test_power_of_two_spaces_collapse_to_zero(n, m, data):
    params = RingParams(n, m)
    entries = tuple(data.draw(st.integers(0, m - 1)) for _ in range(n))
    info = cycle_info(TupleZ(params, entries))
    assert info.base == zero_tuple(params)
    assert info.period == 1


@settings(max_examples=60)
@given(ring_tuples(max_n=4, max_m=4))
def test_preimages_match_brute_force(v):
    params = v.params
    brute = set()
    for i in range(params.state_count()):
        entries = []
        s = i
        for _ in range(params.n):
            entries.append(s % params.m)
            s //= params.m
        x = TupleZ(params, tuple(entries))
        if ducci_step(x) == v:
            brute.add(x)
    assert preimages(v) == brute


@given(ring_tuples(), st.integers(-8, 8))
def test_rotation_matches_finds_planted_rotation(u, beta):
    matches = rotation_matches(u, shift(u, beta))
    assert beta % u.params.n in matches
    for b in matches:
        assert shift(u, b) == shift(u, beta)


@given(st.integers(-100, 100), st.integers(1, 64))
def test_canonical_beta_is_congruent_and_minimal(beta, n):
    c = canonical_beta(beta, n)
    assert (c - beta) % n == 0
    assert -(n - 1) <= c <= n - 1
    assert abs(c) == min(abs(beta % n), abs(beta % n - n))


@given(st.integers(2, 60), st.data())
def test_binomial_split_identity(r, data):
    t = data.draw(st.integers(1, r - 1))
    n = data.draw(st.integers(1, 12))
    s = data.draw(st.integers(1, n))
    m = data.draw(st.integers(2, 12))
    assert coeffs.lemma_sum_check(r, t, s, n, m)


@given(st.integers(0, 10**9), st.integers(2, 997))
def test_triple_doubling_matches_poly_squaring(r, m):
    assert coeffs.triple_fast(r, m).as_tuple() == coeffs.row_polypow(r, 3, m).values


@given(st.integers(0, 120), st.integers(1, 10), st.integers(2, 12))
def test_row_routes_agree(r, n, m):
    it = coeffs.row_iterative(r, n, m).values
    pp = coeffs.row_polypow(r, n, m).values
    ex = tuple(v % m for v in coeffs.row_binomial_exact(r, n).values)
    assert it == pp == ex


@given(st.integers(1, 100))
def test_exact_triples_sum_and_pattern(r):
    a, b, c = coeffs.triple_exact(r).as_tuple()
    assert a + b + c == 2**r
    assert coeffs.mod6_pattern_check(r)


@settings(max_examples=30)
@given(st.lists(st.integers(0, 30), min_size=2, max_size=6))
def test_abs_variant_cycle_is_binary_valued(values):
    x = tuple(values)
    seen = {}
    k = 0
    while x not in seen:
        seen[x] = k
        x = abs_ducci_step(x)
        k += 1
    start = x
    cycle_values = set()
    while True:
        cycle_values.update(x)
        x = abs_ducci_step(x)
        if x == start:
            break
    assert len(cycle_values - {0}) <= 1


@settings(deadline=None, max_examples=25)
@given(st.integers(1, 6), st.integers(2, 10))
def test_first_hit_alpha_divides_period(n, m):
    rep = classify_fast(RingParams(n, m))
    if rep.alpha is not None:
        assert rep.P % rep.alpha == 0
        assert 1 <= rep.alpha <= rep.P
        assert all(0 <= b < n for b in rep.betas_raw)


@settings(deadline=None, max_examples=25)
@given(st.integers(1, 5), st.integers(2, 8), st.data())
def test_found_relation_transfers_to_random_tuples(n, m, data):
    params = RingParams(n, m)
    rep = classify_fast(params)
    assume(rep.alpha is not None)
    L, alpha, beta = rep.L, rep.alpha, rep.beta_canonical
    entries = tuple(data.draw(st.integers(0, m - 1)) for _ in range(n))
    u = TupleZ(params, entries)
    lhs = iterate(u, L + alpha)
    rhs = shift(iterate(u, L), beta)
    assert lhs == rhs
