"""Inner loops for realization search and state enumeration.

Both hot paths are written as plain array code so the same source can
run compiled (numba, when importable) or interpreted.  The interpreted
twins are kept importable under ``*_py`` names so tests can compare the
two paths bit for bit.

End encoding used by the realization search: pass times are 0-based,
t in [0, 2n).  The strand leaves the crossing of pass t through the
out-end ``2t`` and arrives at the crossing of pass t+1 through the
in-end ``2(t+1) + 1``.  The edge pairing (``mate``) is therefore fixed
once per code, while the cyclic order at each crossing (``sigma``)
depends on the per-crossing orientation bit being searched.

Faces of a rotation system are the orbits of ``e -> sigma[mate[e]]``.
A candidate bit assignment embeds the diagram in the sphere exactly
when the face count hits n + 2.

State enumeration uses the diagram's own end ids (4 * crossing + slot).
A smoothing replaces each crossing by one of two pairings of its four
ends; the circles of the smoothed diagram are the orbits of
``e -> rho[mate[e]]``, and since ``rho`` and ``mate`` are both
involutions every circle is traced twice, once per direction, so the
orbit count is exactly twice the number of circles.
"""

from __future__ import annotations

import numpy as np

try:
    from numba import njit

    HAVE_NUMBA = True
except ImportError:  # pragma: no cover - exercised only without numba
    HAVE_NUMBA = False

    def njit(*args, **kwargs):
        def wrap(fn):
            return fn

        if len(args) == 1 and callable(args[0]):
            return args[0]
        return wrap


def _realize_search_impl(n, under_t, over_t):
    """Return the first orientation mask embedding the code, or -1.

    Bit 0 of the lexicographic word (crossing 0) is pinned to 0, which
    selects one diagram out of each mirror pair.  The mask packs bits
    for crossings 1..n-1 with crossing 1 most significant.
    """
    two_n = 2 * n
    n_ends = 4 * n
    mate = np.empty(n_ends, np.int64)
    for t in range(two_n):
        nxt = t + 1
        if nxt == two_n:
            nxt = 0
        mate[2 * t] = 2 * nxt + 1
        mate[2 * nxt + 1] = 2 * t
    sigma = np.empty(n_ends, np.int64)
    stamp = np.zeros(n_ends, np.int64)
    target = n + 2
    total = 1 << (n - 1)
    for mask in range(total):
        for i in range(n):
            u = under_t[i]
            o = over_t[i]
            if i == 0:
                b = 0
            else:
                b = (mask >> (n - 1 - i)) & 1
            s0 = 2 * u + 1
            s2 = 2 * u
            if b == 0:
                s1 = 2 * o + 1
                s3 = 2 * o
            else:
                s1 = 2 * o
                s3 = 2 * o + 1
            sigma[s0] = s1
            sigma[s1] = s2
            sigma[s2] = s3
            sigma[s3] = s0
        marker = mask + 1
        faces = 0
        for e0 in range(n_ends):
            if stamp[e0] != marker:
                faces += 1
                e = e0
                while stamp[e] != marker:
                    stamp[e] = marker
                    e = sigma[mate[e]]
        if faces == target:
            return mask
    return -1


def _state_matrix_impl(n, cr_ends, mate):
    """Count states by (number of A smoothings, circle count).

    Returns an (n+1) x (n+2) int64 matrix M with M[a, c] the number of
    states having a A-smoothings and c circles.  State bit i set means
    crossing i takes the B smoothing.  An empty matrix signals a
    structural impossibility (circle count out of range), which cannot
    happen for a connected diagram.
    """
    n_ends = 4 * n
    rho = np.empty(n_ends, np.int64)
    stamp = np.zeros(n_ends, np.int64)
    counts = np.zeros((n + 1, n + 2), np.int64)
    total = 1 << n
    for state in range(total):
        acount = 0
        for i in range(n):
            e0 = cr_ends[i, 0]
            e1 = cr_ends[i, 1]
            e2 = cr_ends[i, 2]
            e3 = cr_ends[i, 3]
            if (state >> i) & 1 == 0:
                acount += 1
                rho[e0] = e1
                rho[e1] = e0
                rho[e2] = e3
                rho[e3] = e2
            else:
                rho[e0] = e3
                rho[e3] = e0
                rho[e1] = e2
                rho[e2] = e1
        marker = state + 1
        orbits = 0
        for s0 in range(n_ends):
            if stamp[s0] != marker:
                orbits += 1
                e = s0
                while stamp[e] != marker:
                    stamp[e] = marker
                    e = rho[mate[e]]
        if orbits & 1:
            return counts[:0, :0]
        loops = orbits // 2
        if loops > n + 1:
            return counts[:0, :0]
        counts[acount, loops] += 1
    return counts


realize_search_py = _realize_search_impl
state_matrix_py = _state_matrix_impl

if HAVE_NUMBA:
    realize_search = njit(cache=True, nogil=True)(_realize_search_impl)
    state_matrix = njit(cache=True, nogil=True)(_state_matrix_impl)
else:  # pragma: no cover
    realize_search = realize_search_py
    state_matrix = state_matrix_py
