"""Property suites run by ``baseloci verify``.

Each suite yields ``(check, passed, detail)`` triples.  Sampling is seeded so
the output is reproducible.
"""

import random
from fractions import Fraction
from math import inf

from . import surface as S
from . import toric as T
from .catalog import (cutkosky_ceiling_estimate, cutkosky_function, cutkosky_ord_asym,
                      cutkosky_ord_bruteforce, cutkosky_point, cutkosky_sigma, excludes_polynomial)
from .convex_core import extend_continuously
from .errors import BaselociError
from .graded import check_inclusion, find_refinement_and_d, verify_product_identity
from .ratgeom.linalg import dot, is_negative_definite
from .surds import QuadraticSurd


def random_big_surface_class(m, rng, size=6):
    """A random big class: an ample witness multiple plus random catalog curves."""
    while True:
        d = [rng.randint(1, 3) * a for a in m.ample]
        for c in m.curves:
            k = rng.randint(0, size)
            d = [x + k * y for x, y in zip(d, c.cls)]
        d = [x + Fraction(rng.randint(-2, 2), rng.randint(1, 3)) for x in d]
        if S.is_big(m, d):
            return tuple(d)


def surface_suite(m, samples=50, seed=0):
    rng = random.Random(seed)
    bad = {"P nef": 0, "P.C = 0 on Supp N": 0, "coefficients >= 0": 0,
           "support negative definite": 0, "catalog order independence": 0,
           "asym_ord equals N coefficient": 0, "additivity within a chamber": 0}
    done = 0
    seen = []
    for _ in range(samples):
        d = random_big_surface_class(m, rng)
        z = S.zariski_decompose(m, d)
        done += 1
        if not m.is_nef(z.positive):
            bad["P nef"] += 1
        if any(m.intersect(z.positive, m.curve(c).cls) != 0 for c in z.negative):
            bad["P.C = 0 on Supp N"] += 1
        if any(a < 0 for a in z.negative.values()):
            bad["coefficients >= 0"] += 1
        if z.negative and not is_negative_definite(S._gram(m, sorted(z.negative))):
            bad["support negative definite"] += 1
        shuffled = list(m.curves)
        rng.shuffle(shuffled)
        m2 = S.SurfaceModel(m.labels, m.form, [S.Curve(c.name, c.cls) for c in shuffled], m.ample)
        z2 = S.zariski_decompose(m2, d)
        if z2.positive != z.positive or z2.negative != z.negative:
            bad["catalog order independence"] += 1
        if any(S.asym_ord(m, d, c.name) != z.negative.get(c.name, 0) for c in m.curves):
            bad["asym_ord equals N coefficient"] += 1
        for d0, z0 in seen:
            if z0.support != z.support:
                continue
            zs = S.zariski_decompose(m, tuple(a + b for a, b in zip(d, d0)))
            names = z.support | zs.support
            if any(zs.negative.get(k, 0) != z.negative.get(k, 0) + z0.negative.get(k, 0) for k in names):
                bad["additivity within a chamber"] += 1
        seen.append((d, z))
    for check, n in bad.items():
        yield check, n == 0, "%d/%d samples failed" % (n, done) if n else "%d samples" % done


def cutkosky_suite(k=380):
    a = cutkosky_ord_asym(0)
    yield ("exact value at t=0", a == QuadraticSurd(Fraction(27, 38), Fraction(3, 38), 5),
           "%s ~ %s" % (a, a.decimal(7)))
    s = cutkosky_sigma(0)
    yield "sigma(0) root of 9x^2-9x+1", 9 * s * s - 9 * s + 1 == 0, str(s)
    b = cutkosky_ord_bruteforce(k, 0)
    c = cutkosky_ceiling_estimate(k, 0)
    err = abs(Fraction(b, k) - a)
    lo, hi = (a - Fraction(2, k)).rational_bounds(Fraction(1, 10 ** 9))[0], \
        (a + Fraction(2, k)).rational_bounds(Fraction(1, 10 ** 9))[1]
    yield ("brute force within 2/k at k=%d" % k, err <= Fraction(2, k),
           "ord_E(|kD_0|) = %d, ceiling estimate %d, ratio %s in [%.7f, %.7f]"
           % (b, c, Fraction(b, k), float(lo), float(hi)))
    yield "brute force within 1 of ceiling", abs(b - c) <= 1, "%d vs %d" % (b, c)
    ts = [Fraction(i, 10) for i in range(6)]
    vals = [cutkosky_ord_asym(t) for t in ts]
    yield ("no polynomial of degree <= 3 through 5 values", excludes_polynomial(ts[:5], vals[:5]),
           "t = 0, 1/10, ..., 2/5")
    yield ("no polynomial of degree <= 4 through 6 values", excludes_polynomial(ts, vals),
           "t = 0, 1/10, ..., 1/2")
    f = cutkosky_function()

    def stream():
        j = 1
        while True:
            yield cutkosky_point(Fraction(1, 10 ** j)), Fraction(1, 10 ** j)
            j += 1

    iv = extend_continuously(f, stream(), Fraction(1, 1000))
    yield ("certified interval contains the surd", iv.contains(a),
           "[%.7f, %.7f] width %.2e" % (float(iv.lo), float(iv.hi), float(iv.width)))


def random_big_toric_class(x, rng, size=4, denominators=(1, 2, 3)):
    A = T.ample_divisor(x)
    while True:
        d = [Fraction(rng.randint(-size, size), rng.choice(denominators)) for _ in range(x.nrays)]
        d = [a + b for a, b in zip(d, A)]
        if T.is_big(x, d):
            return tuple(d)


def toric_suite(x, samples=20, seed=0, pmax=20):
    rng = random.Random(seed)
    fails = {}

    def note(check, ok):
        fails.setdefault(check, [0, 0])
        fails[check][1] += 1
        if not ok:
            fails[check][0] += 1

    for _ in range(samples):
        d = random_big_toric_class(x, rng, denominators=(1,))
        for i, w in enumerate(x.rays):
            a = T.asym_order(x, d, w)
            note("polytope order equals effective-divisor LP", a == T.asym_order_via_effective_lp(x, d, i))
            orders = [None] + [T.base_order(x, [p * t for t in d], w) for p in range(1, pmax + 1)]
            note("p * asym <= order of |pD|", all(orders[p] == inf or p * a <= orders[p]
                                                  for p in range(1, pmax + 1)))
            p0 = T.clearing_multiple(x, d)
            if p0 <= pmax:
                note("equality at clearing multiple", orders[p0] == p0 * a)
            note("order subadditive in p", all(
                orders[p + q] <= orders[p] + orders[q]
                for p in range(1, pmax) for q in range(1, pmax - p + 1)))
        bm = T.restricted_base_locus(x, d)
        for c in x.faces():
            positive = T.asym_order(x, d, x.orbit_valuation(c)) > 0
            inside = any(set(b) <= set(c) for b in bm)
            note("positive order iff orbit in B-", positive == inside)
        B, Bp = T.stable_base_locus(x, d), T.augmented_base_locus(x, d)

        def covered(small, big):
            return all(any(set(b) <= set(s) for b in big) for s in small)

        note("B- in B in B+", covered(bm, B) and covered(B, Bp))
    if x.basis and len(x.basis) <= 3:
        cf = T.chamber_fan(x)
        for k, cone in enumerate(cf.cones):
            p = cf.interior_point(k)
            pts = [p] + [tuple(a + b for a, b in zip(p, r)) for r in cone.rays]
            for label, w in cf.valuations:
                g = cf.functions[label].functionals[k]
                ok = all(T.asym_order(x, x.combination(cf.basis, q), w) == dot(g, q) for q in pts)
                note("asymptotic order linear on each chamber", ok)
    for check in sorted(fails):
        bad, total = fails[check]
        yield check, bad == 0, ("%d/%d failed" % (bad, total)) if bad else "%d checks" % total


def graded_suite(s, bound=8):
    try:
        fan, d = find_refinement_and_d(s, bound)
    except BaselociError as e:
        yield "find d and smooth fan", False, str(e)
        return
    yield "find d and smooth fan", fan.is_smooth, "d = %d, %d rays, %d cones" % (d, len(fan.rays), len(fan.cones))
    exp = getattr(s, "expected", {}).get("d")
    if exp is not None:
        yield "d matches fixture", d == exp, "expected %d" % exp
    ok = all(verify_product_identity(s, d, fan.cone(c), bound)[0] for c in fan.cones)
    yield "closure identity to degree %d" % bound, ok, "%d cones" % len(fan.cones)
    ds = sorted({1, 2, d})
    inc = all(check_inclusion(s, dd, fan.cone(c), bound)[0] for c in fan.cones for dd in ds)
    yield "product inclusion", inc, "d in {%s}" % ", ".join(map(str, ds))
