"""Integer inner loops for transitive orientation.

Each kernel is written once in plain Python over numpy arrays.  With numba
available they are compiled with ``@njit``; set ``REPEXT_NUMBA=0`` to run the
interpreted path instead (same source, same results).

Edge directions are stored per edge id as int8: ``+1`` means ``eu[e] -> ev[e]``
(lower index to higher), ``-1`` the reverse, ``0`` unoriented.
"""

from __future__ import annotations

import os

import numpy as np

USE_NUMBA = os.environ.get("REPEXT_NUMBA", "1").strip().lower() not in ("0", "false", "no", "off")

if USE_NUMBA:
    try:
        from numba import njit
    except ImportError:  # pragma: no cover - numba is a declared dependency
        USE_NUMBA = False

if not USE_NUMBA:

    def njit(*args, **kwargs):
        if len(args) == 1 and callable(args[0]) and not kwargs:
            return args[0]
        return lambda fn: fn


# status codes returned by orient_run / propagate_queue
OK = 0
CONFLICT = 1
PRESET_VIOLATED = 2

FREE_CHOICE = -1
PRESET = -2


@njit(cache=True)
def _arc_sign(eu, e, tail):
    return 1 if eu[e] == tail else -1


@njit(cache=True)
def propagate_queue(indptr, indices, eid, eu, ev, orient, cause, queue, head, tail):
    """Close the oriented edges under the transitivity and Gamma forcing rules.

    Processes ``queue[head:tail]`` (and everything it forces).  Returns
    ``(status, edge, direction, forced_by, tail)``; on conflict ``edge`` is the
    edge that would have to be reoriented to ``direction`` because of
    ``forced_by``.
    """
    while head < tail:
        e = queue[head]
        head += 1
        if orient[e] > 0:
            a = eu[e]
            b = ev[e]
        else:
            a = ev[e]
            b = eu[e]
        # arcs leaving or entering the head b
        for k in range(indptr[b], indptr[b + 1]):
            w = indices[k]
            if w == a:
                continue
            f = eid[b, w]
            g = eid[a, w]
            if g < 0:
                # a->b, bw in E, aw not in E  =>  w->b
                x = f
                d = _arc_sign(eu, f, w)
            elif orient[f] == _arc_sign(eu, f, b):
                # a->b->w  =>  a->w
                x = g
                d = _arc_sign(eu, g, a)
            else:
                continue
            if orient[x] == 0:
                orient[x] = d
                cause[x] = e
                queue[tail] = x
                tail += 1
            elif orient[x] != d:
                return CONFLICT, x, d, e, tail
        # arcs at the tail a
        for k in range(indptr[a], indptr[a + 1]):
            w = indices[k]
            if w == b:
                continue
            f = eid[a, w]
            g = eid[b, w]
            if g < 0:
                # a->b, aw in E, bw not in E  =>  a->w
                x = f
                d = _arc_sign(eu, f, a)
            elif orient[f] == _arc_sign(eu, f, w):
                # w->a->b  =>  w->b
                x = g
                d = _arc_sign(eu, g, w)
            else:
                continue
            if orient[x] == 0:
                orient[x] = d
                cause[x] = e
                queue[tail] = x
                tail += 1
            elif orient[x] != d:
                return CONFLICT, x, d, e, tail
    return OK, -1, 0, -1, tail


@njit(cache=True)
def orient_run(indptr, indices, eid, eu, ev, order, preset, orient, cause, queue):
    """Orient every edge following ``order``; ``preset[i]`` fixes ``order[i]``.

    Free edges (``preset == 0``) get ``+1`` (lower index to higher) when the
    scan reaches them unoriented.  Returns ``(status, edge, direction, by)``.
    """
    tail = 0
    for i in range(order.shape[0]):
        e = order[i]
        d = preset[i]
        if d != 0:
            if orient[e] == 0:
                orient[e] = d
                cause[e] = PRESET
            elif orient[e] != d:
                return PRESET_VIOLATED, e, d, cause[e]
            else:
                continue
        elif orient[e] == 0:
            orient[e] = 1
            cause[e] = FREE_CHOICE
        else:
            continue
        queue[tail] = e
        status, x, xd, by, tail = propagate_queue(indptr, indices, eid, eu, ev, orient, cause, queue, tail, tail + 1)
        if status != OK:
            return status, x, xd, by
    return OK, -1, 0, -1


@njit(cache=True)
def transitivity_violation(indptr, indices, arcs):
    """Return a middle vertex ``v`` of a violating ``u->v->w`` pattern, or -1.

    ``indptr``/``indices`` list out-neighbours; ``arcs`` is the dense arc matrix.
    """
    n = indptr.shape[0] - 1
    for u in range(n):
        for k in range(indptr[u], indptr[u + 1]):
            v = indices[k]
            for j in range(indptr[v], indptr[v + 1]):
                w = indices[j]
                if not arcs[u, w]:
                    return v
    return -1


def edge_arrays(n: int, edges) -> tuple[np.ndarray, ...]:
    """CSR adjacency, dense edge-id matrix and endpoint arrays for ``edges``."""
    m = len(edges)
    eu = np.empty(m, dtype=np.int64)
    ev = np.empty(m, dtype=np.int64)
    eid = np.full((n, n), -1, dtype=np.int64)
    deg = np.zeros(n, dtype=np.int64)
    for i, (u, v) in enumerate(edges):
        eu[i] = u
        ev[i] = v
        eid[u, v] = eid[v, u] = i
        deg[u] += 1
        deg[v] += 1
    indptr = np.zeros(n + 1, dtype=np.int64)
    np.cumsum(deg, out=indptr[1:])
    indices = np.empty(2 * m, dtype=np.int64)
    fill = indptr[:-1].copy()
    for u, v in edges:
        indices[fill[u]] = v
        fill[u] += 1
        indices[fill[v]] = u
        fill[v] += 1
    return indptr, indices, eid, eu, ev
