# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled versions of the hot loops in :mod:`stacklab._pykernels`."""

from libc.stdlib cimport malloc, free


def prom_table(entries, int r, int c):
    cdef int n = r * c
    cdef int *g = <int *> malloc(n * sizeof(int))
    cdef int *out = <int *> malloc((r if r > 1 else 1) * n * sizeof(int))
    cdef int step, i, j, idx, v, k
    if g == NULL or out == NULL:
        free(g)
        free(out)
        raise MemoryError()
    try:
        for k in range(n):
            g[k] = entries[k]
        for step in range(n):
            i = 0
            j = 0
            idx = 0
            while True:
                if j + 1 < c and (i + 1 >= r or g[idx + 1] < g[idx + c]):
                    g[idx] = g[idx + 1]
                    j += 1
                    idx += 1
                elif i + 1 < r:
                    v = g[idx + c]
                    g[idx] = v
                    out[i * n + step] = (v - 1) % n + 1
                    i += 1
                    idx += c
                else:
                    break
            g[idx] = n + step + 1
        return [[out[i * n + k] for k in range(n)] for i in range(r - 1)]
    finally:
        free(g)
        free(out)


def crossing_nesting(partner):
    cdef int m = len(partner)
    cdef int *p = <int *> malloc((m + 1) * sizeof(int))
    cdef int *closers = <int *> malloc((m + 1) * sizeof(int))
    cdef int *up = <int *> malloc((m + 1) * sizeof(int))
    cdef int *down = <int *> malloc((m + 1) * sizeof(int))
    cdef int cut, a, k, t, cnt, best_cross = 0, best_nest = 0
    if p == NULL or closers == NULL or up == NULL or down == NULL:
        free(p)
        free(closers)
        free(up)
        free(down)
        raise MemoryError()
    try:
        for a in range(m):
            p[a + 1] = partner[a]
        for cut in range(1, m):
            cnt = 0
            for a in range(1, cut + 1):
                if p[a] > cut:
                    closers[cnt] = p[a]
                    cnt += 1
            # quadratic LIS/LDS; cnt never exceeds half the ground set
            for k in range(cnt):
                up[k] = 1
                down[k] = 1
                for t in range(k):
                    if closers[t] < closers[k] and up[t] + 1 > up[k]:
                        up[k] = up[t] + 1
                    if closers[t] > closers[k] and down[t] + 1 > down[k]:
                        down[k] = down[t] + 1
                if up[k] > best_cross:
                    best_cross = up[k]
                if down[k] > best_nest:
                    best_nest = down[k]
        return best_cross, best_nest
    finally:
        free(p)
        free(closers)
        free(up)
        free(down)
