"""Compiled kernels for the empty-convex-chain dynamic programs.

Every empty convex polygon is counted once, from its lowest vertex ``p``
(lexicographic in ``(y, x)``). The remaining vertices are the points above
``p`` in CCW angular order around ``p``; the polygon is empty iff every fan
triangle ``p u_j u_l`` is empty, and convex iff every interior turn is a
left turn.
"""

import numpy as np
from numba import njit


@njit(cache=True)
def _cross(xs, ys, a, b, c):
    return (xs[b] - xs[a]) * (ys[c] - ys[a]) - (ys[b] - ys[a]) * (xs[c] - xs[a])


@njit(cache=True)
def _points_above(xs, ys, p):
    n = xs.shape[0]
    idx = np.empty(n, np.int64)
    m = 0
    for q in range(n):
        if ys[q] > ys[p] or (ys[q] == ys[p] and xs[q] > xs[p]):
            idx[m] = q
            m += 1
    idx = idx[:m]
    ang = np.empty(m, np.float64)
    for t in range(m):
        ang[t] = np.arctan2(float(ys[idx[t]] - ys[p]), float(xs[idx[t]] - xs[p]))
    idx = idx[np.argsort(ang)]
    # float presort is nearly right; finish with exact insertion sort
    for t in range(1, m):
        s = t
        while s > 0 and _cross(xs, ys, p, idx[s - 1], idx[s]) < 0:
            tmp = idx[s - 1]
            idx[s - 1] = idx[s]
            idx[s] = tmp
            s -= 1
    return idx


@njit(cache=True)
def _fan_empty(xs, ys, u):
    """empty[j, l] for j < l: no point of ``u`` inside triangle (anchor, u_j, u_l).

    Only points with angular index strictly between j and l can be inside, and
    triangle (anchor, u_j, u_l) is empty iff u_l is CCW, seen from u_j, of every
    such u_t. Scanning l upward while tracking the most-CCW direction so far
    makes this O(m^2).
    """
    m = u.shape[0]
    empty = np.zeros((m, m), np.bool_)
    for j in range(m):
        best = -1
        for l in range(j + 1, m):
            if best == -1 or _cross(xs, ys, u[j], u[best], u[l]) > 0:
                empty[j, l] = True
                best = l
    return empty


@njit(cache=True)
def _incoming(empty):
    m = empty.shape[0]
    start = np.zeros(m + 1, np.int64)
    for j in range(m):
        c = 0
        for i in range(j):
            if empty[i, j]:
                c += 1
        start[j + 1] = start[j] + c
    src = np.empty(start[m], np.int64)
    for j in range(m):
        w = start[j]
        for i in range(j):
            if empty[i, j]:
                src[w] = i
                w += 1
    return start, src


@njit(cache=True)
def hole_counts(xs, ys, rmax):
    """counts[r] = number of empty convex r-gons, for 3 <= r <= rmax."""
    n = xs.shape[0]
    counts = np.zeros(rmax + 1, np.int64)
    for p in range(n):
        u = _points_above(xs, ys, p)
        m = u.shape[0]
        if m < 2:
            continue
        empty = _fan_empty(xs, ys, u)
        start, src = _incoming(empty)
        width = min(rmax, m + 1) + 1
        f = np.zeros((m, m, width), np.int64)
        for j in range(m):
            for l in range(j + 1, m):
                if not empty[j, l]:
                    continue
                f[j, l, 3] = 1
                for w in range(start[j], start[j + 1]):
                    i = src[w]
                    if _cross(xs, ys, u[i], u[j], u[l]) > 0:
                        for r in range(3, width - 1):
                            f[j, l, r + 1] += f[i, j, r]
                for r in range(3, width):
                    counts[r] += f[j, l, r]
    return counts


@njit(cache=True)
def largest_chain(xs, ys):
    """Vertices of one empty convex polygon of maximum size.

    Ties: the first maximum found scanning anchors by increasing index, then
    chain end edges (j, l) in increasing angular order, keeping the predecessor
    with the smallest angular index among equals.
    """
    n = xs.shape[0]
    best = 0
    best_vertices = np.empty(0, np.int64)
    for p in range(n):
        u = _points_above(xs, ys, p)
        m = u.shape[0]
        if m < 2 or m + 1 <= best:
            continue
        empty = _fan_empty(xs, ys, u)
        start, src = _incoming(empty)
        size = np.zeros((m, m), np.int64)
        pred = np.full((m, m), -1, np.int64)
        here = 0
        hj = -1
        hl = -1
        for j in range(m):
            for l in range(j + 1, m):
                if not empty[j, l]:
                    continue
                v = 3
                pr = -1
                for w in range(start[j], start[j + 1]):
                    i = src[w]
                    if size[i, j] + 1 > v and _cross(xs, ys, u[i], u[j], u[l]) > 0:
                        v = size[i, j] + 1
                        pr = i
                size[j, l] = v
                pred[j, l] = pr
                if v > here:
                    here = v
                    hj = j
                    hl = l
        if here > best:
            best = here
            verts = np.empty(here, np.int64)
            verts[0] = p
            k = here - 1
            a = hj
            b = hl
            while True:
                verts[k] = u[b]
                k -= 1
                prev = pred[a, b]
                if prev == -1:
                    verts[k] = u[a]
                    break
                b = a
                a = prev
            best_vertices = verts
    return best_vertices
