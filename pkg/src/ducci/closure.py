"""Rotation-closure classification of Z_m^n under the step map.

A space is *rotation-closed* ("h-closed") when every orbit's transition
component is invariant under every cyclic rotation H^beta, and *weakly*
closed when invariance holds for at least one beta not divisible by n.
Two independent engines decide this:

* :func:`classify_fast` walks the basic orbit (0,...,0,1): after the tail,
  the first exponent alpha with D^alpha(w) equal to a rotation of the cycle
  base w pins down the minimal relation D^alpha(v) = H^beta(v) on the cycle
  kernel, which transfers to every tuple by linearity.
* :func:`classify_oracle` enumerates the full state space, union-finds the
  transition components, and tests rotation invariance literally.

Degenerate rotations are excluded in both: a beta with H^beta(w) = w fixes
the whole cycle kernel pointwise (the kernel is spanned by rotations of w),
so it witnesses nothing.  Concretely, the rotation walk always returns to w
itself at alpha = P, matching exactly the stabilizer betas; only an earlier
hit counts.
"""

from dataclasses import dataclass
from math import gcd

from ducci import backend
from ducci.coeffs import triple_fast
from ducci.core import (DEFAULT_MAX_STEPS, CycleInfo, RingParams, TupleZ,
                        apply_power, basic_info, basic_tuple, iterate, shift)
from ducci.errors import ResourceLimitError
from ducci.ntheory import euler_phi, is_prime, primes_upto

H_CLOSED = "h-closed"
H_CLOSED_TRIVIAL = "h-closed-trivial"
WEAKLY_H_CLOSED = "weakly-h-closed"
NOT_WEAKLY_H_CLOSED = "not-weakly-h-closed"

CLASSIFICATIONS = (H_CLOSED, H_CLOSED_TRIVIAL, WEAKLY_H_CLOSED,
                   NOT_WEAKLY_H_CLOSED)

DEFAULT_MAX_STATES = 2_000_000

ANOMALY_STABILIZER = "nontrivial-rotation-stabilizer"


@dataclass(frozen=True)
class HClosureReport:
    """Result of the basic-orbit classification walk."""

    params: RingParams
    L: int
    P: int
    classification: str
    alpha: int | None
    betas_raw: tuple[int, ...]
    beta_canonical: int | None
    gamma: int | None
    anomalies: tuple[str, ...]
    steps: int


@dataclass(frozen=True)
class OracleReport:
    """Result of the exhaustive full-state-space classification."""

    params: RingParams
    component_count: int
    universal_betas: tuple[int, ...]
    classification: str
    states_visited: int
    weakly_per_state: bool
    degenerate_betas: tuple[int, ...]


def rotation_matches(w: TupleZ, x: TupleZ) -> set[int]:
    """All beta in 0..n-1 with x == H^beta(w); empty if x is no rotation of w."""
    if w.params != x.params:
        raise ValueError("tuples live in different rings")
    n = w.params.n
    out = set()
    for beta in range(n):
        if all(x.entries[i] == w.entries[(i + beta) % n] for i in range(n)):
            out.add(beta)
    return out


def canonical_beta(beta: int, n: int) -> int:
    """Representative of beta mod n in [-(n-1), n-1] with minimal absolute
    value; ties resolve positive."""
    b = beta % n
    return min((b, b - n), key=lambda v: (abs(v), -v))


def classify_fast(params: RingParams, *,
                  max_steps: int = DEFAULT_MAX_STEPS) -> HClosureReport:
    """Classify Z_m^n from the basic orbit walk.

    Finds (L, P) by cycle detection, then walks D^alpha of the cycle base w
    for alpha = 1..P.  The first alpha where a rotation of w reappears gives
    the minimal relation; alpha = P means only w itself returned, i.e. no
    genuine rotation relation exists.
    """
    kern = backend.active()
    e = basic_tuple(params)
    n, m = params.n, params.m
    L, P, base_entries, steps_cycle = kern.brent_cycle(e.entries, n, m, max_steps)
    w = TupleZ(params, base_entries)

    if w.is_zero():
        return HClosureReport(params, L, P, H_CLOSED_TRIVIAL, None, (), None,
                              None, (), steps_cycle)

    anomalies = []
    if rotation_matches(w, w) != {0}:
        anomalies.append(ANOMALY_STABILIZER)

    alpha, betas, steps_walk = kern.walk_to_rotation(
        base_entries, n, m, P, max_steps - steps_cycle)
    steps = steps_cycle + steps_walk

    if alpha == P:
        return HClosureReport(params, L, P, NOT_WEAKLY_H_CLOSED, None, (),
                              None, None, tuple(anomalies), steps)

    if P % alpha != 0:
        raise RuntimeError(
            f"first rotation hit alpha={alpha} does not divide the period {P}")
    classification = (H_CLOSED if any(gcd(b, n) == 1 for b in betas)
                      else WEAKLY_H_CLOSED)
    beta_canonical = min((canonical_beta(b, n) for b in betas),
                         key=lambda v: (abs(v), -v))
    return HClosureReport(params, L, P, classification, alpha,
                          tuple(sorted(betas)), beta_canonical, P // alpha,
                          tuple(anomalies), steps)


def classify_oracle(params: RingParams, *,
                    state_cap: int = DEFAULT_MAX_STATES,
                    max_steps: int = DEFAULT_MAX_STEPS) -> OracleReport:
    """Classify by exhaustive enumeration of all m^n states.

    Components of the transition graph come from union-find over the
    forward edges; ``universal_betas`` holds every beta under which each
    state stays in its own component.  Betas whose rotation fixes the cycle
    kernel pointwise (the rotation stabilizer of the basic cycle base) are
    degenerate and never witness weak closure on their own; the per-state
    definitional check is still recorded in ``weakly_per_state``.
    """
    total = params.state_count()
    if total > state_cap:
        raise ResourceLimitError(
            f"state space of size {total} exceeds the cap of {state_cap}",
            states=total)
    kern = backend.active()
    _roots, ncomp, universal, weak_all = kern.oracle_scan(params.n, params.m)

    info = basic_info(params, max_steps=max_steps)
    w = info.base
    if w.is_zero():
        return OracleReport(params, ncomp, universal, H_CLOSED_TRIVIAL, total,
                            weak_all, tuple(range(params.n)))

    stab = rotation_matches(w, w)
    effective = [b for b in universal if b != 0 and b not in stab]
    if not effective:
        classification = NOT_WEAKLY_H_CLOSED
    elif len(universal) == params.n:
        classification = H_CLOSED
    else:
        classification = WEAKLY_H_CLOSED
    return OracleReport(params, ncomp, universal, classification, total,
                        weak_all, tuple(sorted(stab)))


def oracle_component_roots(params: RingParams, *,
                           state_cap: int = DEFAULT_MAX_STATES):
    """Component representative per state index (little-endian base-m)."""
    total = params.state_count()
    if total > state_cap:
        raise ResourceLimitError(
            f"state space of size {total} exceeds the cap of {state_cap}",
            states=total)
    roots, _, _, _ = backend.active().oracle_scan(params.n, params.m)
    return roots


def state_index(u: TupleZ) -> int:
    """Index of u in the little-endian base-m enumeration used by the oracle."""
    idx = 0
    for v in reversed(u.entries):
        idx = idx * u.params.m + v
    return idx


def state_from_index(params: RingParams, idx: int) -> TupleZ:
    entries = []
    for _ in range(params.n):
        entries.append(idx % params.m)
        idx //= params.m
    return TupleZ(params, tuple(entries))


def verify_relation(params: RingParams, alpha: int, beta: int, *,
                    max_steps: int = DEFAULT_MAX_STEPS) -> bool:
    """True iff D^(L+alpha)(e) == H^beta(D^L(e)) for the basic tuple e."""
    if alpha < 1:
        raise ValueError("alpha must be >= 1")
    info = basic_info(params, max_steps=max_steps)
    w = info.base
    return apply_power(w, alpha) == shift(w, beta)


@dataclass(frozen=True)
class VerificationCheck:
    label: str
    expected: object
    observed: object
    passed: bool
    gating: bool = True


@dataclass(frozen=True)
class VerificationRecord:
    name: str
    params: dict
    checks: tuple[VerificationCheck, ...]
    passed: bool


def _record(name: str, params: dict, checks) -> VerificationRecord:
    checks = tuple(checks)
    return VerificationRecord(
        name, params, checks, all(c.passed for c in checks if c.gating))


def verify_pow2_rotation(l: int, *,
                         max_steps: int = DEFAULT_MAX_STEPS) -> VerificationRecord:
    """n=3, m=2^l: the cycle tail has length l and D^2 acts as H on the cycle."""
    if l < 1:
        raise ValueError("l must be >= 1")
    m = 2**l
    params = RingParams(3, m)
    info = basic_info(params, max_steps=max_steps)
    rel = verify_relation(params, 2, 1, max_steps=max_steps)
    return _record("1.1", {"l": l, "m": m}, [
        VerificationCheck("tail length equals l", l, info.length,
                          info.length == l),
        VerificationCheck("D^2 acts as H on the cycle", True, rel, rel),
    ])


def verify_prime_rotation(m: int, *,
                          max_steps: int = DEFAULT_MAX_STEPS) -> VerificationRecord:
    """n=3, m prime = 5 mod 6: D^(m-1) equals H^2 as a map on the whole space."""
    if not is_prime(m) or m % 6 != 5:
        raise ValueError(f"m must be a prime congruent to 5 mod 6, got {m}")
    triple = triple_fast(m - 1, m).as_tuple()
    return _record("1.2", {"m": m}, [
        VerificationCheck("coefficient triple of D^(m-1) is (0,0,1)",
                          [0, 0, 1], list(triple), triple == (0, 0, 1)),
    ])


def verify_mixed_rotation(l: int, p: int, *,
                          max_steps: int = DEFAULT_MAX_STEPS) -> VerificationRecord:
    """n=3, m = 2^l * p with p prime = 5 mod 6.

    Gating check: D^(p-1) acts as H^2 on the cycle.  The non-gating check
    records whether D^(p-1) is the identity on the cycle, which is a
    strictly stronger claim that fails already for (l, p) = (1, 5).
    """
    if l < 1:
        raise ValueError("l must be >= 1")
    if not is_prime(p) or p % 6 != 5:
        raise ValueError(f"p must be a prime congruent to 5 mod 6, got {p}")
    m = 2**l * p
    params = RingParams(3, m)
    info = basic_info(params, max_steps=max_steps)
    rel = verify_relation(params, p - 1, 2, max_steps=max_steps)
    ident = iterate(info.base, p - 1, max_steps=max_steps) == info.base
    return _record("1.3", {"l": l, "p": p, "m": m}, [
        VerificationCheck("D^(p-1) acts as H^2 on the cycle", True, rel, rel),
        VerificationCheck("D^(p-1) acts as identity on the cycle", True,
                          ident, ident, gating=False),
    ])


def verify_even_prime_rotation(n: int, m: int, *,
                               max_steps: int = DEFAULT_MAX_STEPS) -> VerificationRecord:
    """n even, m prime = -1 mod n: tail 1, D^m(e) = (1,0,...,0,1), and
    D^(m-1) acts as H^-1 on the cycle."""
    if n % 2 != 0:
        raise ValueError(f"n must be even, got {n}")
    if not is_prime(m):
        raise ValueError(f"m must be prime, got {m}")
    if (m + 1) % n != 0:
        raise ValueError(f"need m = -1 mod n, got m={m}, n={n}")
    params = RingParams(n, m)
    info = basic_info(params, max_steps=max_steps)
    e = basic_tuple(params)
    target = TupleZ(params, (1,) + (0,) * (n - 2) + (1,))
    image = iterate(e, m, max_steps=max_steps)
    rel = verify_relation(params, m - 1, -1, max_steps=max_steps)
    return _record("2", {"n": n, "m": m}, [
        VerificationCheck("tail length equals 1", 1, info.length,
                          info.length == 1),
        VerificationCheck("D^m maps e to (1,0,...,0,1)", target.text(),
                          image.text(), image == target),
        VerificationCheck("D^(m-1) acts as H^-1 on the cycle", True, rel, rel),
    ])


# --- conjecture scans -------------------------------------------------------

FAMILY_EVEN_PRIME_POWER = "even-prime-power"
FAMILY_POW2_TIMES_PRIME = "pow2-times-prime"
FAMILY_POW2_TWO_PRIMES = "pow2-two-primes"
FAMILY_N4_TWO_PRIMES = "n4-two-primes"

SCAN_FAMILIES = (FAMILY_EVEN_PRIME_POWER, FAMILY_POW2_TIMES_PRIME,
                 FAMILY_POW2_TWO_PRIMES, FAMILY_N4_TWO_PRIMES)


@dataclass(frozen=True)
class ScanRow:
    """One (n, m) probed by a conjecture scan; never a hard failure."""

    n: int
    m: int
    predicted_alpha: int | None
    predicted_beta: int | None
    predicted_classes: tuple[str, ...]
    classification: str | None
    alpha: int | None
    beta_canonical: int | None
    relation_holds: bool | None
    agree: bool | None
    error: str | None


def _is_pow2(n: int) -> bool:
    return n >= 2 and (n & (n - 1)) == 0


def _scan_targets(family: str, ns, p_max: int, l_max: int, l2_max: int,
                  m_max: int):
    targets = []
    if family == FAMILY_EVEN_PRIME_POWER:
        for n in ns:
            if n % 2 != 0:
                continue
            for p in primes_upto(p_max):
                if (p + 1) % n != 0:
                    continue
                for l in range(1, l_max + 1):
                    m = p**l
                    if m > m_max:
                        break
                    targets.append((n, m, euler_phi(m), (-1)**l, (H_CLOSED,)))
    elif family == FAMILY_POW2_TIMES_PRIME:
        for n in ns:
            if not _is_pow2(n):
                continue
            for p in primes_upto(p_max):
                if (p + 1) % n != 0:
                    continue
                for l2 in range(0, l2_max + 1):
                    m = 2**l2 * p
                    if m > m_max:
                        break
                    targets.append((n, m, p - 1, (-1)**l2, (H_CLOSED,)))
    elif family == FAMILY_POW2_TWO_PRIMES:
        for n in ns:
            if not _is_pow2(n):
                continue
            ps = [p for p in primes_upto(p_max) if (p + 1) % n == 0]
            for i, p1 in enumerate(ps):
                for p2 in ps[i + 1:]:
                    for l1 in range(1, l_max + 1):
                        for l2 in range(1, l_max + 1):
                            m = p1**l1 * p2**l2
                            if m <= m_max:
                                targets.append((n, m, None, None,
                                                (H_CLOSED, WEAKLY_H_CLOSED)))
    elif family == FAMILY_N4_TWO_PRIMES:
        n = 4
        ps = [p for p in primes_upto(p_max) if p % 4 == 3 and p != 3]
        for i, p1 in enumerate(ps):
            for p2 in ps[i + 1:]:
                for l1 in range(1, l_max + 1):
                    for l2 in range(1, l_max + 1):
                        m = p1**l1 * p2**l2
                        if m <= m_max:
                            targets.append((n, m, euler_phi(m), 2,
                                            (WEAKLY_H_CLOSED,)))
    else:
        raise ValueError(f"unknown scan family {family!r}; "
                         f"known: {', '.join(SCAN_FAMILIES)}")

    seen = set()
    out = []
    for t in sorted(targets, key=lambda t: (t[0], t[1])):
        if (t[0], t[1]) not in seen:
            seen.add((t[0], t[1]))
            out.append(t)
    return out


def scan_conjectures(family: str, *, ns=(4, 6, 8), p_max: int = 30,
                     l_max: int = 3, l2_max: int = 3, m_max: int = 100_000,
                     max_steps: int = DEFAULT_MAX_STEPS) -> list[ScanRow]:
    """Probe one conjectured family and report agreement per (n, m).

    Scanners only report; a disagreeing row is data, not a failure.
    Resource errors are recorded on the row and do not abort the scan.
    """
    rows = []
    for (n, m, pa, pb, classes) in _scan_targets(family, ns, p_max, l_max,
                                                 l2_max, m_max):
        params = RingParams(n, m)
        try:
            rep = classify_fast(params, max_steps=max_steps)
        except ResourceLimitError as exc:
            rows.append(ScanRow(n, m, pa, pb, classes, None, None, None,
                                None, None, str(exc)))
            continue
        relation = None
        agree = rep.classification in classes
        if pa is not None:
            try:
                relation = verify_relation(params, pa, pb,
                                           max_steps=max_steps)
            except ResourceLimitError:
                relation = None
            agree = (agree and rep.alpha == pa
                     and rep.beta_canonical == canonical_beta(pb, n))
        rows.append(ScanRow(n, m, pa, pb, classes, rep.classification,
                            rep.alpha, rep.beta_canonical, relation, agree,
                            None))
    return rows


# --- wire formats -----------------------------------------------------------

def report_to_json(report: HClosureReport) -> dict:
    return {
        "n": report.params.n,
        "m": report.params.m,
        "L": report.L,
        "P": report.P,
        "classification": report.classification,
        "alpha": report.alpha,
        "betas_raw": list(report.betas_raw),
        "beta_canonical": report.beta_canonical,
        "gamma": report.gamma,
        "anomalies": list(report.anomalies),
        "steps": report.steps,
    }


def oracle_report_to_json(report: OracleReport) -> dict:
    return {
        "n": report.params.n,
        "m": report.params.m,
        "component_count": report.component_count,
        "universal_betas": list(report.universal_betas),
        "classification": report.classification,
        "states_visited": report.states_visited,
        "weakly_per_state": report.weakly_per_state,
        "degenerate_betas": list(report.degenerate_betas),
    }


def record_to_json(record: VerificationRecord) -> dict:
    return {
        "name": record.name,
        "params": record.params,
        "passed": record.passed,
        "checks": [
            {"label": c.label, "expected": c.expected, "observed": c.observed,
             "passed": c.passed, "gating": c.gating}
            for c in record.checks
        ],
    }


def scan_row_to_json(row: ScanRow) -> dict:
    return {
        "n": row.n,
        "m": row.m,
        "predicted_alpha": row.predicted_alpha,
        "predicted_beta": row.predicted_beta,
        "predicted_classes": list(row.predicted_classes),
        "classification": row.classification,
        "alpha": row.alpha,
        "beta_canonical": row.beta_canonical,
        "relation_holds": row.relation_holds,
        "agree": row.agree,
        "error": row.error,
    }
