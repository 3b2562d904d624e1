"""Command line: ``baseloci <command> <model> [options]``.

Exit status is 0 on success, 1 when a verification fails and 2 on bad input.
"""

import argparse
import csv
import io
import json
import sys
from fractions import Fraction
from pathlib import Path

from . import surface as S
from . import toric as T
from .errors import BaselociError, IncompleteCatalogError, InputError, VerificationError
from .graded import GradedMonomialSystem, find_refinement_and_d
from .models import fixture_names, load_model
from .ratgeom.linalg import as_fraction
from .surds import QuadraticSurd
from .surface import SurfaceModel
from .toric import ToricModel

COMMANDS = ("zariski", "baseloci", "asym-order", "chambers", "volume", "fan-refine", "verify",
            "slice-plot")


def parse_vector(text):
    try:
        return tuple(as_fraction(t.strip()) for t in text.split(",") if t.strip())
    except (TypeError, ValueError, ZeroDivisionError):
        raise InputError("cannot parse rational vector %r" % text) from None


def _fmt(v):
    if isinstance(v, Fraction):
        return str(v)
    if isinstance(v, QuadraticSurd):
        return str(v)
    if isinstance(v, (list, tuple)):
        return "(" + ",".join(_fmt(t) for t in v) + ")"
    if isinstance(v, (set, frozenset)):
        return "{" + ",".join(sorted(_fmt(t) for t in v)) + "}"
    if isinstance(v, bool):
        return "yes" if v else "no"
    if v is None:
        return ""
    return str(v)


def _jsonable(v):
    if isinstance(v, (Fraction, QuadraticSurd)):
        return str(v)
    if isinstance(v, (list, tuple)):
        return [_jsonable(t) for t in v]
    if isinstance(v, (set, frozenset)):
        return sorted(_jsonable(t) for t in v)
    if isinstance(v, dict):
        return {k: _jsonable(t) for k, t in v.items()}
    return v


class Table:
    """Rows with a fixed column order.  Surd-valued cells get a companion
    ``<column>_decimal`` column."""

    def __init__(self, title, columns, places=6):
        self.title = title
        self.columns = list(columns)
        self.rows = []
        self.places = places
        self.notes = {}

    def add(self, **row):
        for k, v in list(row.items()):
            if isinstance(v, QuadraticSurd) and not v.is_rational:
                dec = k + "_decimal"
                if dec not in self.columns:
                    self.columns.insert(self.columns.index(k) + 1, dec)
                row[dec] = v.decimal(self.places)
        self.rows.append(row)

    def render(self, fmt):
        if fmt == "json":
            doc = {"table": self.title, "columns": self.columns,
                   "rows": [{c: _jsonable(r.get(c)) for c in self.columns} for r in self.rows]}
            if self.notes:
                doc["notes"] = _jsonable(self.notes)
            return json.dumps(doc, indent=2, ensure_ascii=False) + "\n"
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(self.columns)
        for r in self.rows:
            w.writerow([_fmt(r.get(c)) for c in self.columns])
        for k in sorted(self.notes):
            buf.write("# %s: %s\n" % (k, _fmt(self.notes[k])))
        return buf.getvalue()


def _classes(args, model):
    if not args.cls:
        raise InputError("--class is required for this command")
    out = [parse_vector(c) for c in args.cls]
    if isinstance(model, ToricModel):
        return [_toric_divisor(model, c) for c in out]
    return [model.divisor(c) for c in out]


def _toric_divisor(x, v):
    if x.basis and len(v) == len(x.basis):
        return x.combination(x.basis, v)
    if len(v) == x.nrays:
        return x.divisor(v)
    raise InputError("class needs %s coordinates (basis %s) or %d ray coefficients"
                     % (len(x.basis or []), ",".join(x.basis or []), x.nrays))


def _require(model, *kinds):
    if not isinstance(model, kinds):
        names = {SurfaceModel: "surface", ToricModel: "toric", GradedMonomialSystem: "graded"}
        raise InputError("this command needs a %s model" % " or ".join(names[k] for k in kinds))


def _labels(x, locus):
    if locus == frozenset([()]):
        return frozenset(["X"])
    return frozenset(T.locus_labels(x, locus))


def cmd_zariski(args, model):
    _require(model, SurfaceModel)
    t = Table("zariski", ["class", "P", "N", "P_coordinates", "P^2", "support"], args.places)
    for d in _classes(args, model):
        z = S.zariski_decompose(model, d)
        N = " + ".join(("%s%s" % ("" if a == 1 else a, n)) for n, a in z.negative.items()) or "0"
        t.add(**{"class": model.format_class(d), "P": model.format_class(z.positive), "N": N,
                 "P_coordinates": z.positive, "P^2": model.intersect(z.positive, z.positive),
                 "support": z.support})
    return t, 0


def cmd_baseloci(args, model):
    _require(model, SurfaceModel, ToricModel)
    if isinstance(model, SurfaceModel):
        t = Table("baseloci", ["class", "B-", "B+", "stable"], args.places)
        for d in _classes(args, model):
            bm, bp = S.restricted_base_locus(model, d), S.augmented_base_locus(model, d)
            t.add(**{"class": model.format_class(d), "B-": bm, "B+": bp, "stable": bm == bp})
        return t, 0
    t = Table("baseloci", ["class", "B-", "B", "B+", "stable"], args.places)
    for d in _classes(args, model):
        bm = _labels(model, T.restricted_base_locus(model, d))
        b = _labels(model, T.stable_base_locus(model, d))
        bp = _labels(model, T.augmented_base_locus(model, d))
        t.add(**{"class": d, "B-": bm, "B": b, "B+": bp, "stable": bm == bp})
    return t, 0


def cmd_asym_order(args, model):
    _require(model, SurfaceModel, ToricModel)
    if isinstance(model, SurfaceModel):
        t = Table("asym-order", ["class", "curve", "ord"], args.places)
        for d in _classes(args, model):
            z = S.zariski_decompose(model, d)
            for c in model.curves:
                t.add(**{"class": model.format_class(d), "curve": c.name,
                         "ord": z.negative.get(c.name, Fraction(0))})
        return t, 0
    t = Table("asym-order", ["class", "orbit", "valuation", "ord", "ord_via_lp"], args.places)
    for d in _classes(args, model):
        if args.valuation:
            vals = [("w", tuple(int(v) for v in parse_vector(w))) for w in args.valuation]
        else:
            vals = [(model.orbit_label(c), model.orbit_valuation(c)) for c in model.faces()]
        for label, w in vals:
            lp = T.asym_order_via_effective_lp(model, d, w) if model.fan.cone_containing(w) else None
            t.add(**{"class": d, "orbit": label, "valuation": w, "ord": T.asym_order(model, d, w),
                     "ord_via_lp": lp})
    return t, 0


def cmd_chambers(args, model):
    _require(model, SurfaceModel, ToricModel)
    if isinstance(model, SurfaceModel):
        if not model.curves:
            raise InputError("the catalog is empty: no polyhedral effective cone to decompose")
        region = S.effective_cone(model)
        chambers = S.stable_chambers(model, region)
        cols = ["chamber", "generators", "support"] + ["ord_" + c.name for c in model.curves]
        t = Table("chambers", cols, args.places)
        for k, ch in enumerate(sorted(chambers, key=lambda c: sorted(c.cone.rays))):
            row = {"chamber": k + 1, "generators": sorted(ch.cone.rays), "support": ch.support}
            for c in model.curves:
                row["ord_" + c.name] = ch.functionals[c.name]
            t.add(**row)
        t.notes["basis"] = ",".join(model.labels)
        return t, 0
    basis = args.basis.split(",") if args.basis else None
    cf = T.chamber_fan(model, basis)
    labels = [label for label, _ in cf.valuations]
    t = Table("chambers", ["chamber", "generators", "stable_locus"] + ["ord_" + l for l in labels],
              args.places)
    for k, cone in enumerate(cf.cones):
        p = cf.interior_point(k)
        row = {"chamber": k + 1, "generators": sorted(cone.rays),
               "stable_locus": _labels(model, T.stable_base_locus(model, model.combination(cf.basis, p)))}
        for l in labels:
            row["ord_" + l] = cf.functions[l].functionals[k]
        t.add(**row)
    t.notes["basis"] = ",".join(cf.basis)
    t.notes["rays"] = cf.rays()
    return t, 0


def cmd_volume(args, model):
    _require(model, SurfaceModel, ToricModel)
    if isinstance(model, SurfaceModel):
        t = Table("volume", ["class", "volume"], args.places)
        for d in _classes(args, model):
            z = S.zariski_decompose(model, d)
            t.add(**{"class": model.format_class(d), "volume": model.intersect(z.positive, z.positive)})
        return t, 0
    p = args.bound or 20
    t = Table("volume", ["class", "volume", "lattice_estimate", "p"], args.places)
    for d in _classes(args, model):
        t.add(**{"class": d, "volume": T.volume(model, d),
                 "lattice_estimate": T.lattice_volume_estimate(model, d, p), "p": p})
    return t, 0


def cmd_fan_refine(args, model):
    _require(model, GradedMonomialSystem)
    bound = args.bound or 8
    fan, d = find_refinement_and_d(model, bound)
    t = Table("fan-refine", ["cone", "rays"], args.places)
    for k, c in enumerate(fan.cones):
        t.add(cone=k + 1, rays=[fan.rays[i] for i in c])
    t.notes["d"] = d
    t.notes["verified_to_degree"] = bound
    return t, 0


def cmd_verify(args, model):
    from . import suites
    t = Table("verify", ["check", "result", "detail"], args.places)
    if isinstance(model, SurfaceModel):
        rows = list(suites.surface_suite(model, samples=args.bound or 50, seed=args.seed))
        if model.name == "cutkosky":
            rows += list(suites.cutkosky_suite(args.k or 380))
    elif isinstance(model, ToricModel):
        rows = list(suites.toric_suite(model, samples=args.bound or 10, seed=args.seed))
    else:
        rows = list(suites.graded_suite(model, bound=args.bound or 8))
    for check, ok, detail in rows:
        t.add(check=check, result="PASS" if ok else "FAIL", detail=detail)
    failed = sum(1 for _, ok, _ in rows if not ok)
    t.notes["summary"] = "PASS" if not failed else "FAIL (%d of %d checks)" % (failed, len(rows))
    return t, 1 if failed else 0


def cmd_slice_plot(args, model):
    """Values on ``origin + (i/N) u + (j/N) v`` for ``0 <= i, j <= N``."""
    _require(model, SurfaceModel, ToricModel)
    if not args.cls or len(args.cls) != 1:
        raise InputError("slice-plot takes one --class (the origin)")
    if not args.dirs:
        raise InputError("slice-plot needs --dirs 'u1,u2,..;v1,v2,..'")
    dirs = [parse_vector(p) for p in args.dirs.split(";")]
    origin = parse_vector(args.cls[0])
    if len(dirs) != 2 or any(len(u) != len(origin) for u in dirs):
        raise InputError("--dirs must give two vectors of the same length as --class")
    N = args.grid
    if N <= 0:
        raise InputError("--grid must be positive")
    if isinstance(model, SurfaceModel):
        names = [c.name for c in model.curves]
    else:
        faces = model.faces()
        names = [model.orbit_label(c) for c in faces]
    t = Table("slice-plot", ["i", "j", "point", "big"] + ["ord_" + n for n in names], args.places)
    for i in range(N + 1):
        for j in range(N + 1):
            pt = tuple(o + Fraction(i, N) * a + Fraction(j, N) * b
                       for o, a, b in zip(origin, dirs[0], dirs[1]))
            row = {"i": i, "j": j, "point": pt}
            if isinstance(model, SurfaceModel):
                big = S.is_big(model, pt)
                if big:
                    z = S.zariski_decompose(model, pt)
                    for n in names:
                        row["ord_" + n] = z.negative.get(n, Fraction(0))
            else:
                d = _toric_divisor(model, pt)
                big = T.is_big(model, d)
                if big:
                    for c, n in zip(faces, names):
                        row["ord_" + n] = T.asym_order(model, d, model.orbit_valuation(c))
            row["big"] = big
            t.add(**row)
    return t, 0


HANDLERS = {"zariski": cmd_zariski, "baseloci": cmd_baseloci, "asym-order": cmd_asym_order,
            "chambers": cmd_chambers, "volume": cmd_volume, "fan-refine": cmd_fan_refine,
            "verify": cmd_verify, "slice-plot": cmd_slice_plot}


def positive_int(text):
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError("expected an integer, got %r" % text)
    if v <= 0:
        raise argparse.ArgumentTypeError("expected a positive integer, got %d" % v)
    return v


def build_parser():
    p = argparse.ArgumentParser(prog="baseloci", description=__doc__.splitlines()[0])
    p.add_argument("command", choices=COMMANDS)
    p.add_argument("target", nargs="?", help="fixture name or model file (see --list)")
    p.add_argument("--model", help="model file or fixture name (overrides target)")
    p.add_argument("--class", dest="cls", action="append",
                   help="class as comma-separated rationals; repeatable")
    p.add_argument("--valuation", action="append", help="integer vector for asym-order on toric models")
    p.add_argument("--basis", help="comma-separated divisor names for toric chambers")
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    p.add_argument("--bound", type=positive_int, help="degree bound, sample count or lattice scale")
    p.add_argument("--k", type=positive_int, help="multiple used by the brute-force Cutkosky check")
    p.add_argument("--places", type=positive_int, default=6, help="decimal places for surds")
    p.add_argument("--dirs", help="two directions 'u;v' for slice-plot")
    p.add_argument("--grid", type=int, default=10, help="grid subdivisions for slice-plot")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out", help="directory to write <command>.<format> into")
    return p


def main(argv=None):
    parser = build_parser()
    if argv is None:
        argv = sys.argv[1:]
    if argv and argv[0] in ("--list", "list"):
        print("\n".join(fixture_names()))
        return 0
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return 2 if e.code else 0
    target = args.model or args.target
    try:
        if not target:
            raise InputError("no model given; pass a fixture name or --model PATH")
        model = load_model(target)
        table, status = HANDLERS[args.command](args, model)
    except IncompleteCatalogError as e:
        print("error: %s" % e, file=sys.stderr)
        return 2
    except VerificationError as e:
        print("verification failed: %s" % e, file=sys.stderr)
        if e.witness is not None:
            print("witness: %s" % (e.witness,), file=sys.stderr)
        return 1
    except BaselociError as e:
        print("error: %s" % e, file=sys.stderr)
        return 2
    text = table.render(args.format)
    if args.out:
        out = Path(args.out)
        out.mkdir(parents=True, exist_ok=True)
        (out / ("%s.%s" % (args.command, args.format))).write_text(text)
    else:
        sys.stdout.write(text)
    return status


if __name__ == "__main__":
    sys.exit(main())
