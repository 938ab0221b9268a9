# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels for the hot loops.

Mirrors the call surface of ``ducci._purecore``; see that module for the
semantics.  Entries are held in C uint64 buffers (moduli are capped at
2**32-1, so adjacent sums never overflow).
"""

from array import array as _pyarray

from libc.stdlib cimport malloc, free

from ducci.errors import ResourceLimitError

BACKEND_NAME = "compiled"

ctypedef unsigned long long u64
ctypedef long long i64


cdef inline void _dstep(u64 *x, int n, u64 m) noexcept:
    cdef u64 x0 = x[0]
    cdef int i
    for i in range(n - 1):
        x[i] = (x[i] + x[i + 1]) % m
    x[n - 1] = (x[n - 1] + x0) % m


cdef u64 *_load(entries, int n) except NULL:
    cdef u64 *buf = <u64 *> malloc(n * sizeof(u64))
    if buf == NULL:
        raise MemoryError()
    cdef int i
    for i in range(n):
        buf[i] = entries[i]
    return buf


cdef tuple _unload(u64 *buf, int n):
    cdef int i
    return tuple([buf[i] for i in range(n)])


def step_tuple(entries, int n, u64 m):
    cdef u64 *x = _load(entries, n)
    try:
        _dstep(x, n, m)
        return _unload(x, n)
    finally:
        free(x)


def iterate_steps(entries, int n, u64 m, long long k, long long max_steps):
    if k > max_steps:
        raise ResourceLimitError(
            f"iterating {k} steps exceeds the budget of {max_steps}", steps=0)
    cdef u64 *x = _load(entries, n)
    cdef long long it
    try:
        for it in range(k):
            _dstep(x, n, m)
        return _unload(x, n)
    finally:
        free(x)


def brent_cycle(entries, int n, u64 m, long long max_steps):
    cdef u64 *tortoise = _load(entries, n)
    cdef u64 *hare = NULL
    cdef long long steps = 0, power = 1, lam = 1, mu = 0, it
    cdef int i
    cdef bint same
    try:
        hare = _load(entries, n)
        _dstep(hare, n, m)
        steps += 1
        while True:
            same = True
            for i in range(n):
                if tortoise[i] != hare[i]:
                    same = False
                    break
            if same:
                break
            if power == lam:
                for i in range(n):
                    tortoise[i] = hare[i]
                power <<= 1
                lam = 0
            _dstep(hare, n, m)
            lam += 1
            steps += 1
            if steps > max_steps:
                raise ResourceLimitError(
                    f"cycle search exceeded the budget of {max_steps} steps",
                    steps=steps)

        for i in range(n):
            hare[i] = entries[i]
            tortoise[i] = entries[i]
        for it in range(lam):
            _dstep(hare, n, m)
        steps += lam
        if steps > max_steps:
            raise ResourceLimitError(
                f"cycle search exceeded the budget of {max_steps} steps",
                steps=steps)
        while True:
            same = True
            for i in range(n):
                if tortoise[i] != hare[i]:
                    same = False
                    break
            if same:
                break
            _dstep(tortoise, n, m)
            _dstep(hare, n, m)
            mu += 1
            steps += 2
            if steps > max_steps:
                raise ResourceLimitError(
                    f"cycle search exceeded the budget of {max_steps} steps",
                    steps=steps)
        return mu, lam, _unload(tortoise, n), steps
    finally:
        free(tortoise)
        free(hare)


def walk_to_rotation(w, int n, u64 m, long long limit, long long max_steps):
    cdef u64 *rots = <u64 *> malloc(n * n * sizeof(u64))
    if rots == NULL:
        raise MemoryError()
    cdef u64 *x = NULL
    cdef long long alpha
    cdef int b, i
    cdef bint hit
    betas = []
    try:
        x = _load(w, n)
        for b in range(n):
            for i in range(n):
                rots[b * n + i] = w[(i + b) % n]
        for alpha in range(1, limit + 1):
            if alpha > max_steps:
                raise ResourceLimitError(
                    f"rotation walk exceeded the budget of {max_steps} steps",
                    steps=alpha - 1)
            _dstep(x, n, m)
            for b in range(n):
                hit = True
                for i in range(n):
                    if x[i] != rots[b * n + i]:
                        hit = False
                        break
                if hit:
                    betas.append(b)
            if betas:
                return alpha, tuple(betas), alpha
        raise RuntimeError("no rotation of the start tuple within the walk limit")
    finally:
        free(rots)
        free(x)


def encode_state(x, u64 m):
    cdef u64 idx = 0
    for v in reversed(x):
        idx = idx * m + <u64> v
    return idx


def decode_state(u64 idx, int n, u64 m):
    out = []
    cdef int i
    for i in range(n):
        out.append(idx % m)
        idx //= m
    return tuple(out)


cdef inline i64 _find(i64 *parent, i64 a) noexcept:
    while parent[a] != a:
        parent[a] = parent[parent[a]]
        a = parent[a]
    return a


def oracle_scan(int n, u64 m):
    total_py = int(m) ** n
    if total_py >= 1 << 62:
        raise ValueError("state space too large to index")
    cdef i64 total = total_py
    cdef i64 mm = <i64> m
    cdef i64 *parent = NULL
    cdef i64 *rot1 = NULL
    cdef i64 *rb = NULL
    cdef u64 *xbuf = NULL
    cdef unsigned char *weak = NULL
    cdef i64[::1] roots
    cdef i64 i, j, ri, rj, mpow, rest, component_count
    cdef int d, beta
    cdef bint ok

    roots_py = _pyarray("q", bytes(8 * total_py))
    roots = roots_py

    parent = <i64 *> malloc(total * sizeof(i64))
    rot1 = <i64 *> malloc(total * sizeof(i64))
    rb = <i64 *> malloc(total * sizeof(i64))
    xbuf = <u64 *> malloc(n * sizeof(u64))
    weak = <unsigned char *> malloc(total)
    if parent == NULL or rot1 == NULL or rb == NULL or xbuf == NULL or weak == NULL:
        free(parent); free(rot1); free(rb); free(xbuf); free(weak)
        raise MemoryError()

    try:
        mpow = 1
        for d in range(n - 1):
            mpow *= mm
        for i in range(total):
            parent[i] = i
            weak[i] = 0

        for i in range(total):
            rest = i
            for d in range(n):
                xbuf[d] = <u64> (rest % mm)
                rest //= mm
            _dstep(xbuf, n, m)
            j = 0
            for d in range(n - 1, -1, -1):
                j = j * mm + <i64> xbuf[d]
            ri = _find(parent, i)
            rj = _find(parent, j)
            if ri != rj:
                parent[ri] = rj

        component_count = 0
        for i in range(total):
            roots[i] = _find(parent, i)
            if roots[i] == i:
                component_count += 1

        for i in range(total):
            rot1[i] = i // mm + (i % mm) * mpow
            rb[i] = rot1[i]

        universal = [0]
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
                for i in range(total):
                    rb[i] = rot1[rb[i]]

        ok = n > 1
        if ok:
            for i in range(total):
                if not weak[i]:
                    ok = False
                    break
        return roots_py, int(component_count), tuple(universal), bool(ok)
    finally:
        free(parent)
        free(rot1)
        free(rb)
        free(xbuf)
        free(weak)
