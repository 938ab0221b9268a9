"""Connected components of the transition graph, and DOT export.

The transition graph has one out-edge u -> D(u) per tuple, so every weak
component is a cycle with in-trees hanging off it.  Components are
extracted without enumerating the space: find the cycle, then reverse-BFS
through exact preimage solving.
"""

from dataclasses import dataclass
from math import gcd

from ducci.core import (DEFAULT_MAX_STEPS, RingParams, TupleZ, cycle_info,
                        ducci_step, format_tuple)
from ducci.errors import ResourceLimitError

DEFAULT_MAX_NODES = 2_000_000


@dataclass(frozen=True)
class ComponentGraph:
    """One weak component: every node carries its unique out-edge."""

    params: RingParams
    nodes: frozenset[TupleZ]
    edges: frozenset[tuple[TupleZ, TupleZ]]
    cycle_nodes: tuple[TupleZ, ...]
    tail_depth: int


def _solve_double(rhs: int, m: int) -> list[int]:
    """All t in [0, m) with 2t = rhs (mod m)."""
    g = gcd(2, m)
    if rhs % g != 0:
        return []
    mg = m // g
    t0 = (rhs // g) * pow(2 // g, -1, mg) % mg
    return [t0 + k * mg for k in range(g)]


def preimages(v: TupleZ) -> set[TupleZ]:
    """The exact set {x : D(x) = v}, solved in closed form.

    Fixing x_1 = t forces x_{i+1} = v_i - x_i; the wrap entry leaves a
    consistency condition: for even n a condition on the alternating sum of
    v (all m choices of t work when it holds), for odd n the congruence
    2t = c (mod m) with gcd(2, m) solutions when solvable.
    """
    n, m = v.params.n, v.params.m
    vv = v.entries

    # c[i] = value of x_{i+1} when t = 0; x_{i+1} = c[i] + (-1)^(i+1) t
    c = [0] * n
    for i in range(n - 1):
        c[i + 1] = (vv[i] - c[i]) % m

    out = set()
    if n % 2 == 0:
        # x_n = c[n-1] - t, so the wrap condition x_n + x_1 = v_n reads
        # c[n-1] = v_n independent of t
        if c[n - 1] != vv[n - 1]:
            return out
        ts = range(m)
    else:
        ts = _solve_double((vv[n - 1] - c[n - 1]) % m, m)

    for t in ts:
        entries = [(c[i] + (t if i % 2 == 0 else -t)) % m for i in range(n)]
        out.add(TupleZ(v.params, tuple(entries)))
    return out


def component(u: TupleZ, *, node_cap: int = DEFAULT_MAX_NODES,
              max_steps: int = DEFAULT_MAX_STEPS) -> ComponentGraph:
    """The full weak component of u: its cycle plus all ancestors."""
    info = cycle_info(u, max_steps=max_steps)
    cycle = [info.base]
    x = ducci_step(info.base)
    while x != info.base:
        cycle.append(x)
        x = ducci_step(x)

    nodes = set(cycle)
    frontier = list(cycle)
    depth = 0
    while frontier:
        nxt = []
        for v in frontier:
            for p in preimages(v):
                if p in nodes:
                    continue
                nodes.add(p)
                nxt.append(p)
                if len(nodes) > node_cap:
                    raise ResourceLimitError(
                        f"component exceeds the node cap of {node_cap}",
                        states=len(nodes))
        if nxt:
            depth += 1
        frontier = nxt

    edges = frozenset((x, ducci_step(x)) for x in nodes)
    return ComponentGraph(u.params, frozenset(nodes), edges, tuple(cycle),
                          depth)


def component_equal(u: TupleZ, v: TupleZ, *,
                    max_steps: int = DEFAULT_MAX_STEPS) -> bool:
    """True iff u and v share a transition component (same cycle)."""
    if u.params != v.params:
        raise ValueError("tuples live in different rings")
    iu = cycle_info(u, max_steps=max_steps)
    iv = cycle_info(v, max_steps=max_steps)
    if iu.period != iv.period:
        return False
    x = iu.base
    for _ in range(iu.period):
        if x == iv.base:
            return True
        x = ducci_step(x)
    return False


def to_dot(g: ComponentGraph) -> str:
    """Deterministic DOT text: sorted node lines, then sorted edge lines."""
    lines = ["digraph ducci {"]
    for nd in sorted(g.nodes, key=lambda t: t.entries):
        lines.append(f'  "{format_tuple(nd)}";')
    for a, b in sorted(g.edges, key=lambda e: (e[0].entries, e[1].entries)):
        lines.append(f'  "{format_tuple(a)}" -> "{format_tuple(b)}";')
    lines.append("}")
    return "\n".join(lines) + "\n"
