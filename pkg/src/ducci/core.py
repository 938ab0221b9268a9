"""Exact arithmetic on Z_m^n tuples and the adjacent-sum dynamics.

The central objects: the step map D(x_1,...,x_n) = (x_1+x_2, ..., x_n+x_1)
mod m, the cyclic rotation H(x_1,...,x_n) = (x_2,...,x_n,x_1), orbit
iteration, and minimal (tail, period) detection on the finite orbit.
Everything is a pure function over immutable values.

All operations accept and return :class:`TupleZ`; heavy iteration is
delegated to the kernel backend (compiled or pure, see
:mod:`ducci.backend`).
"""

from dataclasses import dataclass

from ducci import backend
from ducci.errors import ResourceLimitError

DEFAULT_MAX_STEPS = 100_000_000
MAX_MODULUS = 2**32 - 1


@dataclass(frozen=True)
class RingParams:
    """Shape of the space: tuples of length n over residues mod m."""

    n: int
    m: int

    def __post_init__(self):
        if not isinstance(self.n, int) or self.n < 1:
            raise ValueError(f"tuple length n must be a positive integer, got {self.n!r}")
        if not isinstance(self.m, int) or self.m < 2:
            raise ValueError(f"modulus m must be an integer >= 2, got {self.m!r}")
        if self.m > MAX_MODULUS:
            raise ValueError(f"modulus m={self.m} exceeds the supported maximum {MAX_MODULUS}")

    def state_count(self) -> int:
        return self.m**self.n


@dataclass(frozen=True)
class TupleZ:
    """An element of Z_m^n: n residues in [0, m)."""

    params: RingParams
    entries: tuple[int, ...]

    def __post_init__(self):
        n, m = self.params.n, self.params.m
        if len(self.entries) != n:
            raise ValueError(f"expected {n} entries, got {len(self.entries)}")
        for e in self.entries:
            if not isinstance(e, int) or not 0 <= e < m:
                raise ValueError(f"entry {e!r} is not a residue in [0, {m})")

    def is_zero(self) -> bool:
        return all(e == 0 for e in self.entries)

    def text(self) -> str:
        return format_tuple(self)


def make_tuple(params: RingParams, entries) -> TupleZ:
    return TupleZ(params, tuple(int(e) % params.m for e in entries))


def zero_tuple(params: RingParams) -> TupleZ:
    return TupleZ(params, (0,) * params.n)


def basic_tuple(params: RingParams) -> TupleZ:
    """The distinguished start tuple (0, ..., 0, 1)."""
    return TupleZ(params, (0,) * (params.n - 1) + (1,))


def parse_tuple(text: str, params: RingParams) -> TupleZ:
    """Parse the comma format 'x1,x2,...,xn'; entries must already be reduced."""
    parts = text.split(",")
    if len(parts) != params.n:
        raise ValueError(f"expected {params.n} comma-separated entries, got {len(parts)}")
    entries = []
    for p in parts:
        try:
            v = int(p, 10)
        except ValueError:
            raise ValueError(f"entry {p!r} is not a decimal integer") from None
        if not 0 <= v < params.m:
            raise ValueError(f"entry {v} out of range [0, {params.m})")
        entries.append(v)
    return TupleZ(params, tuple(entries))


def format_tuple(u: TupleZ) -> str:
    return ",".join(str(e) for e in u.entries)


@dataclass(frozen=True)
class CycleInfo:
    """Minimal orbit shape of a tuple under the step map.

    ``length`` is the tail (number of steps before the orbit enters its
    cycle), ``period`` the cycle length, and ``base`` the cycle entry point
    D^length(u).
    """

    length: int
    period: int
    base: TupleZ


def _check_same_params(u: TupleZ, v: TupleZ) -> None:
    if u.params != v.params:
        raise ValueError(f"mismatched ring parameters: {u.params} vs {v.params}")


def ducci_step(u: TupleZ) -> TupleZ:
    """One application of D: adjacent sums with cyclic wrap, reduced mod m."""
    n, m = u.params.n, u.params.m
    x = u.entries
    out = tuple((x[i] + x[(i + 1) % n]) % m for i in range(n))
    return TupleZ(u.params, out)


def shift(u: TupleZ, beta: int) -> TupleZ:
    """The rotation H^beta; H moves entry 2 to position 1, H^n is the identity."""
    n = u.params.n
    b = beta % n
    x = u.entries
    return TupleZ(u.params, tuple(x[(i + b) % n] for i in range(n)))


def add(u: TupleZ, v: TupleZ) -> TupleZ:
    _check_same_params(u, v)
    m = u.params.m
    return TupleZ(u.params, tuple((a + b) % m for a, b in zip(u.entries, v.entries)))


def scale(c: int, u: TupleZ) -> TupleZ:
    m = u.params.m
    c = c % m
    return TupleZ(u.params, tuple((c * a) % m for a in u.entries))


def iterate(u: TupleZ, k: int, *, max_steps: int = DEFAULT_MAX_STEPS) -> TupleZ:
    """D^k(u) by k honest step applications; k = 0 returns u unchanged."""
    if k < 0:
        raise ValueError("iteration count must be non-negative")
    if k == 0:
        return u
    kern = backend.active()
    out = kern.iterate_steps(u.entries, u.params.n, u.params.m, k, max_steps)
    return TupleZ(u.params, out)


def apply_power(u: TupleZ, r: int) -> TupleZ:
    """D^r(u) via the coefficient row of D^r (O(n^2 log r), no stepping).

    Independent of :func:`iterate`; the two cross-check each other in the
    test suite.
    """
    from ducci import coeffs

    if r < 0:
        raise ValueError("power must be non-negative")
    n, m = u.params.n, u.params.m
    row = coeffs.row_polypow(r, n, m).values
    x = u.entries
    out = []
    for i in range(n):
        acc = 0
        for s in range(n):
            acc += row[s] * x[(i + s) % n]
        out.append(acc % m)
    return TupleZ(u.params, tuple(out))


def cycle_info(u: TupleZ, *, max_steps: int = DEFAULT_MAX_STEPS) -> CycleInfo:
    """Minimal (tail, period, cycle base) of u's orbit via Brent's method."""
    kern = backend.active()
    length, period, base, _steps = kern.brent_cycle(
        u.entries, u.params.n, u.params.m, max_steps)
    return CycleInfo(length, period, TupleZ(u.params, base))


def basic_info(params: RingParams, *, max_steps: int = DEFAULT_MAX_STEPS) -> CycleInfo:
    """Orbit shape of the basic tuple (0,...,0,1); bounds every other orbit."""
    return cycle_info(basic_tuple(params), max_steps=max_steps)


def basis_decompose(u: TupleZ) -> list[tuple[int, int]]:
    """Write u as a combination of rotated basic tuples.

    Returns [(x_s, -s) for s = 1..n]: summing scale(x_s, shift(e, -s)) over
    the list reconstructs u exactly, where e is the basic tuple.
    """
    return [(u.entries[s - 1], -s) for s in range(1, u.params.n + 1)]


def abs_ducci_step(values) -> tuple[int, ...]:
    """One step of the absolute-difference variant on plain integers."""
    vals = tuple(values)
    n = len(vals)
    for v in vals:
        if not isinstance(v, int) or v < 0:
            raise ValueError(f"entries must be non-negative integers, got {v!r}")
    return tuple(abs(vals[i] - vals[(i + 1) % n]) for i in range(n))
