"""Compare the compiled and pure-Python lattice kernels.

Workloads are the scans behind volume estimates and orders of vanishing:
counting and minimising over the lattice points of ``p P_D`` for divisors on
the shipped two- and three-dimensional toric models.

    python3 benchmarks/bench_lattice.py [--repeat N] [--quick]
"""

import argparse
import timeit

from baseloci._kernels import _pylattice
from baseloci.catalog import BlowupClass
from baseloci.models import load_fixture
from baseloci.toric import section_polytope

try:
    from baseloci._kernels import _lattice
except ImportError:
    _lattice = None


def workload(model, coeffs, p):
    x = load_fixture(model)
    P = section_polytope(x, [p * c for c in coeffs])
    lo, hi = P.bounding_box()
    A = [list(r) for r in x.rays]
    b = [int(c) for c in P.constants]
    w = list(x.rays[x.ray_labels.index("E1")])
    return "%s p=%d" % (model, p), (A, b, list(lo), list(hi)), w


def cases(quick):
    ps2 = (20, 80) if quick else (20, 80, 320)
    ps3 = (5, 10) if quick else (5, 10, 20)
    out = [workload("blowup2", BlowupClass(2, 3, 1, 1).coefficients(), p) for p in ps2]
    out += [workload("blowup3", BlowupClass(3, 3, 1, 1).coefficients(), p) for p in ps3]
    return out


def bench(fn, repeat):
    number = 1
    while True:
        t = timeit.timeit(fn, number=number)
        if t > 0.05 or number >= 1 << 16:
            break
        number *= 4
    return min(timeit.repeat(fn, number=number, repeat=repeat)) / number


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--quick", action="store_true", help="smaller scale factors")
    args = ap.parse_args(argv)
    if _lattice is None:
        print("compiled extension not built; only the Python backend is available")
    print("%-18s %-12s %12s %12s %9s" % ("workload", "kernel", "python (s)", "compiled (s)", "speedup"))
    for name, (A, b, lo, hi), w in cases(args.quick):
        for kernel, call in (("count_points", lambda m: m.count_points(A, b, lo, hi)),
                             ("min_dot", lambda m: m.min_dot(A, b, lo, hi, w))):
            ref = call(_pylattice)
            tp = bench(lambda: call(_pylattice), args.repeat)
            if _lattice is None:
                print("%-18s %-12s %12.6f %12s %9s" % (name, kernel, tp, "-", "-"))
                continue
            if call(_lattice) != ref:
                raise SystemExit("backends disagree on %s %s" % (name, kernel))
            tc = bench(lambda: call(_lattice), args.repeat)
            print("%-18s %-12s %12.6f %12.6f %8.1fx" % (name, kernel, tp, tc, tp / tc))


if __name__ == "__main__":
    main()
