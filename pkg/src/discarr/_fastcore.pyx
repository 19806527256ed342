# cython: boundscheck=False, wraparound=False, cdivision=True
# cython: language_level=3
"""Compiled kernels: all-pairs BFS, Hamming audits, median-triple scans,
and seeded subset sampling.  Pure-Python twins live in _purecore; the two
must agree bit for bit (same loop orders, same random streams)."""

import numpy as np

cimport cython
from libc.stdint cimport int16_t, int64_t, uint32_t, uint64_t

cdef extern from *:
    """
    #include <stdint.h>

    static inline int da_popcount64(uint64_t x) {
        return __builtin_popcountll(x);
    }

    /* SplitMix64: must stay bit-identical to discarr.rng.SplitMix64. */
    static inline uint64_t da_next64(uint64_t *s) {
        uint64_t z = (*s += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    static inline uint64_t da_randbelow(uint64_t *s, uint64_t bound) {
        uint64_t mask, v;
        int bits;
        if (bound <= 1) return 0;
        bits = 64 - __builtin_clzll(bound - 1);
        mask = (bits >= 64) ? ~0ULL : ((1ULL << bits) - 1ULL);
        for (;;) {
            v = da_next64(s) & mask;
            if (v < bound) return v;
        }
    }
    """
    int da_popcount64(uint64_t x) nogil
    uint64_t da_next64(uint64_t *s) nogil
    uint64_t da_randbelow(uint64_t *s, uint64_t bound) nogil


def all_pairs_bfs_csr(uint32_t[::1] indptr, uint32_t[::1] indices, int v):
    out_arr = np.full((v, v), -1, dtype=np.int16)
    queue_arr = np.empty(v, dtype=np.int32)
    cdef int16_t[:, ::1] dist = out_arr
    cdef int[::1] queue = queue_arr
    cdef int s, head, tail, x, y
    cdef int16_t nd
    cdef uint32_t p
    with nogil:
        for s in range(v):
            dist[s, s] = 0
            queue[0] = s
            head = 0
            tail = 1
            while head < tail:
                x = queue[head]
                head += 1
                nd = dist[s, x] + 1
                for p in range(indptr[x], indptr[x + 1]):
                    y = <int>indices[p]
                    if dist[s, y] < 0:
                        dist[s, y] = nd
                        queue[tail] = y
                        tail += 1
    return out_arr


def hamming_audit(uint64_t[::1] labels, int16_t[:, ::1] dist, int max_examples=10):
    cdef int v = labels.shape[0]
    ex_arr = np.empty((max_examples, 4), dtype=np.int64)
    cdef int64_t[:, ::1] ex = ex_arr
    cdef int64_t checked = 0, violations = 0
    cdef int i, j, d, h, nex = 0
    cdef uint64_t li
    with nogil:
        for i in range(v):
            li = labels[i]
            for j in range(i + 1, v):
                checked += 1
                d = dist[i, j]
                h = da_popcount64(li ^ labels[j])
                if d != h:
                    violations += 1
                    if nex < max_examples:
                        ex[nex, 0] = i
                        ex[nex, 1] = j
                        ex[nex, 2] = d
                        ex[nex, 3] = h
                        nex += 1
    examples = []
    for row in ex_arr[:nex]:
        examples.append((int(row[0]), int(row[1]), int(row[2]), int(row[3])))
    return int(checked), int(violations), examples


def median_defects(int16_t[:, ::1] dist, int max_examples=10):
    cdef int64_t v = dist.shape[0]
    cdef int64_t w64 = (v + 63) >> 6
    cdef int64_t npairs = v * (v - 1) // 2
    ivl_arr = np.zeros(npairs * w64, dtype=np.uint64)
    ex_arr = np.empty((max_examples, 4), dtype=np.int64)
    cdef uint64_t[::1] ivl = ivl_arr
    cdef int64_t[:, ::1] ex = ex_arr
    cdef int64_t u, w, x, i, base_u, base_w, off_uw, off_ux, off_wx
    cdef int64_t checked = 0, defects = 0
    cdef int cnt, nex = 0
    cdef int16_t duw
    with nogil:
        # interval bitset of the pair (u, w), u < w, lives at row base(u) + w
        for u in range(v):
            base_u = u * v - (u * (u + 1)) // 2 - u - 1
            for w in range(u + 1, v):
                off_uw = (base_u + w) * w64
                duw = dist[u, w]
                for x in range(v):
                    if dist[u, x] + dist[x, w] == duw:
                        ivl[off_uw + (x >> 6)] |= (<uint64_t>1) << (x & 63)
        for u in range(v - 2):
            base_u = u * v - (u * (u + 1)) // 2 - u - 1
            for w in range(u + 1, v - 1):
                off_uw = (base_u + w) * w64
                base_w = w * v - (w * (w + 1)) // 2 - w - 1
                for x in range(w + 1, v):
                    off_ux = (base_u + x) * w64
                    off_wx = (base_w + x) * w64
                    cnt = 0
                    for i in range(w64):
                        cnt += da_popcount64(
                            ivl[off_uw + i] & ivl[off_ux + i] & ivl[off_wx + i]
                        )
                        if cnt > 1:
                            break
                    checked += 1
                    if cnt != 1:
                        defects += 1
                        if nex < max_examples:
                            ex[nex, 0] = u
                            ex[nex, 1] = w
                            ex[nex, 2] = x
                            ex[nex, 3] = cnt
                            nex += 1
    examples = []
    for row in ex_arr[:nex]:
        examples.append((int(row[0]), int(row[1]), int(row[2]), int(row[3])))
    return int(checked), int(defects), examples


def sample_overlaps(int64_t n, int64_t r, int64_t trials, unsigned long long seed):
    t_arr = np.empty(trials, dtype=np.int64)
    d_arr = np.empty(trials, dtype=np.int64)
    pval_arr = np.zeros(n, dtype=np.int64)
    pep_arr = np.zeros(n, dtype=np.int64)
    markf_arr = np.zeros(n, dtype=np.int64)
    markg_arr = np.zeros(n, dtype=np.int64)
    fbuf_arr = np.empty(max(r, 1), dtype=np.int64)
    gbuf_arr = np.empty(max(r, 1), dtype=np.int64)
    cdef int64_t[::1] ts = t_arr
    cdef int64_t[::1] ds = d_arr
    cdef int64_t[::1] pval = pval_arr
    cdef int64_t[::1] pep = pep_arr
    cdef int64_t[::1] markf = markf_arr
    cdef int64_t[::1] markg = markg_arr
    cdef int64_t[::1] fbuf = fbuf_arr
    cdef int64_t[::1] gbuf = gbuf_arr
    cdef int64_t t, j, u, vu, vj, tcount, dcount, ep, stamp
    cdef uint64_t s
    with nogil:
        for t in range(trials):
            s = seed ^ (<uint64_t>t)
            stamp = t + 1
            # draw F on epoch 2t+1, then G on epoch 2t+2, one RNG stream
            ep = 2 * t + 1
            for j in range(r):
                u = j + <int64_t>da_randbelow(&s, <uint64_t>(n - j))
                vu = pval[u] if pep[u] == ep else u
                vj = pval[j] if pep[j] == ep else j
                pval[u] = vj
                pep[u] = ep
                fbuf[j] = vu
                markf[vu] = stamp
            ep = 2 * t + 2
            tcount = 0
            for j in range(r):
                u = j + <int64_t>da_randbelow(&s, <uint64_t>(n - j))
                vu = pval[u] if pep[u] == ep else u
                vj = pval[j] if pep[j] == ep else j
                pval[u] = vj
                pep[u] = ep
                gbuf[j] = vu
                markg[vu] = stamp
                if markf[vu] == stamp:
                    tcount += 1
            dcount = 0
            for j in range(r):
                if markg[fbuf[j]] != stamp:
                    dcount += 1
                if markf[gbuf[j]] != stamp:
                    dcount += 1
            ts[t] = tcount
            ds[t] = dcount
    return t_arr, d_arr
