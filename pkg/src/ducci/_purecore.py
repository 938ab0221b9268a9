"""Pure-Python kernels for the hot loops.

Same call surface as the compiled ``ducci._fastcore`` extension; the
:mod:`ducci.backend` module picks whichever is available at import time.
States are plain tuples of ints reduced mod ``m``.  Full state spaces are
indexed little-endian base ``m``: ``index = sum(x[i] * m**i)``.
"""

from array import array

from ducci.errors import ResourceLimitError

BACKEND_NAME = "pure"


def step_tuple(x, n, m):
    """One application of the mod-m adjacent-sum map."""
    return tuple((x[i] + x[(i + 1) % n]) % m for i in range(n))


def iterate_steps(x, n, m, k, max_steps):
    """Apply the step map k times by honest stepping."""
    if k > max_steps:
        raise ResourceLimitError(
            f"iterating {k} steps exceeds the budget of {max_steps}", steps=0)
    x = tuple(x)
    last = n - 1
    for _ in range(k):
        x = tuple((x[i] + x[i + 1]) % m for i in range(last)) + ((x[last] + x[0]) % m,)
    return x


def brent_cycle(x0, n, m, max_steps):
    """Minimal (tail length, period, cycle entry point) of the step orbit.

    Brent's algorithm followed by the standard tail/period pin-down walks;
    O(tail + period) steps, O(n) memory.  Returns the step count actually
    spent so callers can account against their budget.
    """
    x0 = tuple(x0)
    steps = 0

    def step(x):
        nonlocal steps
        steps += 1
        if steps > max_steps:
            raise ResourceLimitError(
                f"cycle search exceeded the budget of {max_steps} steps",
                steps=steps)
        return step_tuple(x, n, m)

    power = lam = 1
    tortoise = x0
    hare = step(x0)
    while tortoise != hare:
        if power == lam:
            tortoise = hare
            power *= 2
            lam = 0
        hare = step(hare)
        lam += 1

    hare = x0
    for _ in range(lam):
        hare = step(hare)
    tortoise = x0
    mu = 0
    while tortoise != hare:
        tortoise = step(tortoise)
        hare = step(hare)
        mu += 1
    return mu, lam, tortoise, steps


def walk_to_rotation(w, n, m, limit, max_steps):
    """Walk the orbit of w until some rotation of w reappears.

    Returns (alpha, betas, steps) for the smallest alpha in 1..limit with
    step^alpha(w) equal to a rotation of w; betas lists every matching
    rotation amount.  With limit equal to the orbit period a hit is
    guaranteed (at worst alpha == limit, matching w itself).
    """
    w = tuple(w)
    rotations: dict[tuple, list[int]] = {}
    for beta in range(n):
        rot = tuple(w[(i + beta) % n] for i in range(n))
        rotations.setdefault(rot, []).append(beta)

    x = w
    last = n - 1
    for alpha in range(1, limit + 1):
        if alpha > max_steps:
            raise ResourceLimitError(
                f"rotation walk exceeded the budget of {max_steps} steps",
                steps=alpha - 1)
        x = tuple((x[i] + x[i + 1]) % m for i in range(last)) + ((x[last] + x[0]) % m,)
        betas = rotations.get(x)
        if betas is not None:
            return alpha, tuple(betas), alpha
    raise RuntimeError("no rotation of the start tuple within the walk limit")


def encode_state(x, m):
    idx = 0
    for v in reversed(x):
        idx = idx * m + v
    return idx


def decode_state(idx, n, m):
    out = []
    for _ in range(n):
        out.append(idx % m)
        idx //= m
    return tuple(out)


def oracle_scan(n, m):
    """Exhaustive scan of the full transition graph on m**n states.

    Union-find over the forward edges, then rotation analysis.  Returns
    (roots, component_count, universal_betas, weak_all) where roots[i] is
    the component representative of state i, universal_betas lists the
    rotation amounts under which every state stays in its own component,
    and weak_all says whether every state has some nonzero rotation amount
    keeping it in its component.
    """
    total = m ** n
    parent = array("q", range(total))

    def find(a):
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    for i in range(total):
        x = decode_state(i, n, m)
        j = encode_state(step_tuple(x, n, m), m)
        ri, rj = find(i), find(j)
        if ri != rj:
            parent[ri] = rj

    roots = array("q", (find(i) for i in range(total)))
    component_count = sum(1 for i in range(total) if roots[i] == i)

    mpow = m ** (n - 1)
    rot1 = array("q", (i // m + (i % m) * mpow for i in range(total)))

    universal = [0]
    weak = bytearray(total)
    rb = rot1
    for beta in range(1, n):
        ok = True
        for i in range(total):
            if roots[i] == roots[rb[i]]:
                weak[i] = 1
            else:
                ok = False
        if ok:
            universal.append(beta)
        if beta + 1 < n:
            rb = array("q", (rot1[v] for v in rb))

    weak_all = n > 1 and all(weak)
    return roots, component_count, tuple(universal), weak_all
