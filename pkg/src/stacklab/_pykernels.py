"""Pure-Python versions of the hot loops; the compiled module mirrors these signatures."""

from bisect import bisect_left


def prom_table(entries, r, c):
    """Promotion permutations of a rectangular standard tableau.

    ``entries`` is the row-major flattening of an ``r x c`` standard tableau.
    Returns ``r - 1`` lists; list ``i - 1`` is the one-line form of ``prom_i``.
    """
    n = r * c
    g = list(entries)
    out = [[0] * n for _ in range(r - 1)]
    for step in range(n):
        i = j = 0
        idx = 0
        while True:
            has_right = j + 1 < c
            has_down = i + 1 < r
            if has_right and (not has_down or g[idx + 1] < g[idx + c]):
                g[idx] = g[idx + 1]
                j += 1
                idx += 1
            elif has_down:
                v = g[idx + c]
                g[idx] = v
                out[i][step] = (v - 1) % n + 1
                i += 1
                idx += c
            else:
                break
        g[idx] = n + step + 1
    return out


def _lis(seq):
    tails = []
    for v in seq:
        k = bisect_left(tails, v)
        if k == len(tails):
            tails.append(v)
        else:
            tails[k] = v
    return len(tails)


def crossing_nesting(partner):
    """Crossing and nesting numbers of a perfect matching.

    ``partner[a - 1]`` is the element matched with ``a``.  A k-crossing or
    k-nesting always has every opener before every closer, so it lives among
    the chords spanning some cut; there it is an increasing (crossing) or
    decreasing (nesting) run of closers taken in opener order.
    """
    m = len(partner)
    best_cross = best_nest = 0
    for cut in range(1, m):
        closers = [partner[a - 1] for a in range(1, cut + 1) if partner[a - 1] > cut]
        if not closers:
            continue
        best_cross = max(best_cross, _lis(closers))
        best_nest = max(best_nest, _lis([-v for v in closers]))
    return best_cross, best_nest
