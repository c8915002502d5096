"""Compare the compiled kernels with the pure-Python fallback.

    python benchmarks/bench_kernels.py [--repeat N] [--json]

Times promotion tables over every stacked 3x3 pair, crossing/nesting over
every bipartite involution at n = 8, and a full ``main`` sweep of one shape
under each backend.
"""

import argparse
import json
import os
import random
import subprocess
import sys
import timeit
from itertools import permutations

from stacklab import _pykernels
from stacklab.matchings import bipartite_involution
from stacklab.tableau import enumerate_syt, rectangle, stack

try:
    from stacklab import _ckernels
except ImportError:
    _ckernels = None


def stacked_inputs(r, c):
    tabs = enumerate_syt(rectangle(r, c))
    return [[v for row in stack(P, Q).rows for v in row] for P in tabs for Q in tabs]


def bench(label, fn, repeat):
    best = min(timeit.repeat(fn, number=1, repeat=repeat))
    return {"case": label, "seconds": best}


def sweep_time(pure: bool) -> float:
    env = dict(os.environ)
    if pure:
        env["STACKLAB_PURE_PYTHON"] = "1"
    else:
        env.pop("STACKLAB_PURE_PYTHON", None)
    code = "from stacklab.verify import verify_thm_main as v; import sys; r = v(3, 3); print(r.elapsed)"
    out = subprocess.run([sys.executable, "-c", code], env=env, capture_output=True, text=True, check=True)
    return float(out.stdout)


def main() -> None:
    ap = argparse.ArgumentParser()
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--json", action="store_true")
    args = ap.parse_args()

    tables = stacked_inputs(3, 3)
    involutions = [list(bipartite_involution(p)) for p in permutations(range(1, 9))]
    random.Random(0).shuffle(involutions)

    backends = [("python", _pykernels)]
    if _ckernels is not None:
        backends.append(("cython", _ckernels))

    rows = []
    for name, mod in backends:
        rows.append({"backend": name, **bench("prom_table 6x3 stacks (1764)", lambda m=mod: [m.prom_table(e, 6, 3) for e in tables], args.repeat)})
        rows.append({"backend": name, **bench("crossing_nesting n=8 (40320)", lambda m=mod: [m.crossing_nesting(p) for p in involutions], args.repeat)})
        rows.append({"backend": name, "case": "verify main 3x3 sweep", "seconds": sweep_time(pure=name == "python")})

    if args.json:
        print(json.dumps(rows, indent=2))
        return
    width = max(len(r["case"]) for r in rows)
    for case in dict.fromkeys(r["case"] for r in rows):
        times = {r["backend"]: r["seconds"] for r in rows if r["case"] == case}
        line = f"{case:<{width}}  python {times['python']:8.4f}s"
        if "cython" in times:
            line += f"  cython {times['cython']:8.4f}s  speedup {times['python'] / times['cython']:5.1f}x"
        print(line)


if __name__ == "__main__":
    main()
