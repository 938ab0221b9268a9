"""Coefficient rows of powers of the step map.

D = I + H on Z_m^n, so D^r acts entrywise through a circulant row
(a_{r,1}, ..., a_{r,n}): entry i of D^r(x) is sum_s a_{r,s} x_{s+i-1} with
indices wrapped into 1..n.  Three independent routes compute the row:

* :func:`row_iterative` -- r applications of the cyclic Pascal recurrence
  a_{r,s} = a_{r-1,s} + a_{r-1,s-1};
* :func:`row_binomial_exact` -- a_{r,s} = sum of C(r, j) over j congruent
  to s-1 mod n, as exact integers;
* :func:`row_polypow` -- binary exponentiation of 1+x in the ring of
  polynomials mod (x^n - 1, m).

For n = 3 the row is written as the triple (a_r, b_r, c_r), which also
composes multiplicatively (:func:`triple_fast`), sums to 2^r, and follows a
fixed +-1 pattern depending on r mod 6.
"""

from dataclasses import dataclass
from math import comb

from ducci.ntheory import is_prime

EXACT_POWER_BUDGET = 10_000


@dataclass(frozen=True)
class CoeffRow:
    """The row (a_{r,1}, ..., a_{r,n}); m is None for exact integer rows."""

    r: int
    n: int
    m: int | None
    values: tuple[int, ...]


@dataclass(frozen=True)
class CoeffTriple:
    """The n = 3 row as (a_r, b_r, c_r); m is None for exact triples."""

    r: int
    m: int | None
    a: int
    b: int
    c: int

    def as_tuple(self) -> tuple[int, int, int]:
        return (self.a, self.b, self.c)


def _check_r(r: int) -> None:
    if not isinstance(r, int) or r < 0:
        raise ValueError(f"exponent r must be a non-negative integer, got {r!r}")


def _check_nm(n: int, m: int | None) -> None:
    if not isinstance(n, int) or n < 1:
        raise ValueError(f"row length n must be a positive integer, got {n!r}")
    if m is not None and (not isinstance(m, int) or m < 2):
        raise ValueError(f"modulus m must be an integer >= 2 or None, got {m!r}")


def row_iterative(r: int, n: int, m: int) -> CoeffRow:
    """Row of D^r by r cyclic Pascal steps from the identity row; O(rn)."""
    _check_r(r)
    _check_nm(n, m)
    row = [0] * n
    row[0] = 1 % m
    for _ in range(r):
        row = [(row[j] + row[j - 1]) % m for j in range(n)]
    return CoeffRow(r, n, m, tuple(row))


def row_binomial_exact(r: int, n: int, *, budget: int = EXACT_POWER_BUDGET) -> CoeffRow:
    """Exact row: a_{r,s} = sum of C(r, j) over 0 <= j <= r, j = s-1 mod n."""
    _check_r(r)
    _check_nm(n, None)
    if r > budget:
        raise ValueError(
            f"exact row for r={r} exceeds the exact-arithmetic budget {budget}")
    values = [0] * n
    for j in range(r + 1):
        values[j % n] += comb(r, j)
    return CoeffRow(r, n, None, tuple(values))


def _poly_mul(a: list[int], b: list[int], n: int, m: int) -> list[int]:
    out = [0] * n
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                k = i + j
                if k >= n:
                    k -= n
                out[k] = (out[k] + ai * bj) % m
    return out


def _polypow_values(r: int, n: int, m: int) -> list[int]:
    result = [0] * n
    result[0] = 1 % m
    base = [0] * n
    base[0] = (base[0] + 1) % m
    base[1 % n] = (base[1 % n] + 1) % m
    while r:
        if r & 1:
            result = _poly_mul(result, base, n, m)
        base = _poly_mul(base, base, n, m)
        r >>= 1
    return result


def row_polypow(r: int, n: int, m: int) -> CoeffRow:
    """Row of D^r by squaring 1+x mod (x^n - 1, m); O(n^2 log r)."""
    _check_r(r)
    _check_nm(n, m)
    return CoeffRow(r, n, m, tuple(_polypow_values(r, n, m)))


def _wrap_index(s: int, n: int) -> int:
    """Reduce a 1-based coefficient index into 1..n (n when divisible by n)."""
    s = s % n
    return n if s == 0 else s


def lemma_sum_check(r: int, t: int, s: int, n: int, m: int) -> bool:
    """Check a_{r,s} = sum_{i=0..t} C(t,i) a_{r-t,s-i} (mod m)."""
    if not r > t > 0:
        raise ValueError(f"need r > t > 0, got r={r}, t={t}")
    if not 1 <= s <= n:
        raise ValueError(f"need 1 <= s <= n, got s={s}, n={n}")
    _check_nm(n, m)
    lhs = row_iterative(r, n, m).values[s - 1]
    low = row_iterative(r - t, n, m).values
    rhs = 0
    for i in range(t + 1):
        rhs += comb(t, i) * low[_wrap_index(s - i, n) - 1]
    return lhs == rhs % m


def triple_exact(r: int, *, budget: int = EXACT_POWER_BUDGET) -> CoeffTriple:
    row = row_binomial_exact(r, 3, budget=budget)
    return CoeffTriple(r, None, *row.values)


def triple_fast(r: int, m: int) -> CoeffTriple:
    """(a_r, b_r, c_r) mod m in O(log r) triple compositions.

    Uses the composition rule a_{r+t} = a_t a_r + b_t c_r + c_t b_r (and its
    b/c companions), doubling on the binary decomposition of r.
    """
    _check_r(r)
    _check_nm(3, m)

    def compose(x, y):
        xa, xb, xc = x
        ya, yb, yc = y
        return ((xa * ya + xb * yc + xc * yb) % m,
                (xa * yb + xb * ya + xc * yc) % m,
                (xa * yc + xb * yb + xc * ya) % m)

    result = (1 % m, 0, 0)
    base = (1 % m, 1 % m, 0)
    k = r
    while k:
        if k & 1:
            result = compose(result, base)
        base = compose(base, base)
        k >>= 1
    return CoeffTriple(r, m, *result)


def product_split_check(r: int, t: int, m: int | None = None) -> bool:
    """Check the three n=3 composition formulas for (a,b,c)_{r+t}."""
    if not r > t > 0:
        raise ValueError(f"need r > t > 0, got r={r}, t={t}")
    if m is None:
        ar, br, cr = triple_exact(r).as_tuple()
        at, bt, ct = triple_exact(t).as_tuple()
        ts = triple_exact(r + t).as_tuple()
    else:
        _check_nm(3, m)
        ar, br, cr = row_iterative(r, 3, m).values
        at, bt, ct = row_iterative(t, 3, m).values
        ts = row_iterative(r + t, 3, m).values
    expected = (at * ar + bt * cr + ct * br,
                at * br + bt * ar + ct * cr,
                at * cr + bt * br + ct * ar)
    if m is not None:
        expected = tuple(v % m for v in expected)
    return tuple(ts) == expected


def mod6_pattern_check(r: int) -> bool:
    """Check the exact +-1 relation among (a_r, b_r, c_r) given r mod 6."""
    if not isinstance(r, int) or r < 1:
        raise ValueError(f"need r >= 1, got {r!r}")
    a, b, c = triple_exact(r).as_tuple()
    k = r % 6
    if k == 0:
        return a == b + 1 == c + 1
    if k == 1:
        return c == a - 1 == b - 1
    if k == 2:
        return b == a + 1 == c + 1
    if k == 3:
        return a == b - 1 == c - 1
    if k == 4:
        return c == a + 1 == b + 1
    return b == a - 1 == c - 1


def binom_vanishing_check(n: int, m: int) -> bool:
    """Check C(m, i) = 0 mod m for 0 < i < m, and C(m,0) = C(m,m) = 1.

    Preconditions: n even, m prime, m = -1 mod n (so delta = (m+1)/n is an
    integer).  Computed by tracking the exponent of m in the running
    binomial and the unit part mod m, so the check stays honest for large m
    without exact big-integer rows.
    """
    if n % 2 != 0:
        raise ValueError(f"n must be even, got {n}")
    if not is_prime(m):
        raise ValueError(f"m must be prime, got {m}")
    if (m + 1) % n != 0:
        raise ValueError(f"need m = -1 mod n, got m={m}, n={n}")

    exp = 0       # exponent of m in C(m, i)
    unit = 1      # remaining factor mod m
    if not (comb(m, 0) == 1):
        return False
    for i in range(1, m + 1):
        num, den = m - i + 1, i
        while num % m == 0:
            exp += 1
            num //= m
        while den % m == 0:
            exp -= 1
            den //= m
        unit = unit * (num % m) % m
        unit = unit * pow(den % m, m - 2, m) % m
        value = 0 if exp > 0 else unit
        if i < m and value != 0:
            return False
        if i == m and value != 1:
            return False
    return True


def row_to_json(row: CoeffRow) -> dict:
    """Wire form {r, n, m|'exact', values} with decimal strings when exact."""
    if row.m is None:
        return {"r": row.r, "n": row.n, "m": "exact",
                "values": [str(v) for v in row.values]}
    return {"r": row.r, "n": row.n, "m": row.m, "values": list(row.values)}
