"""Loading models from JSON files and from the shipped fixtures."""

import json
from importlib import resources
from pathlib import Path

import jsonschema

from .errors import InputError
from .graded import GradedMonomialSystem
from .ratgeom.cones import Cone
from .ratgeom.linalg import as_fraction
from .surface import Curve, SurfaceModel
from .toric import ToricModel, base_ideal

_SCHEMAS = {}


def _schema(kind):
    if kind not in _SCHEMAS:
        text = resources.files("baseloci").joinpath("schemas", kind + ".json").read_text()
        _SCHEMAS[kind] = json.loads(text)
    return _SCHEMAS[kind]


def fixture_names():
    folder = resources.files("baseloci").joinpath("fixtures")
    return sorted(p.name[:-5] for p in folder.iterdir() if p.name.endswith(".json"))


def _parse_json(text, source):
    try:
        return json.loads(text)
    except json.JSONDecodeError as e:
        raise InputError(e.msg, e.lineno, e.colno, source) from None


def _rational(x, source, where):
    try:
        return as_fraction(x)
    except (TypeError, ValueError) as e:
        raise InputError("%s: %s" % (where, e), source=source) from None


def _validate(data, source):
    if not isinstance(data, dict) or "kind" not in data:
        raise InputError("model must be an object with a 'kind' field", source=source)
    kind = data["kind"]
    if kind not in ("surface", "toric", "graded"):
        raise InputError("unknown model kind %r" % (kind,), source=source)
    validator = jsonschema.Draft202012Validator(_schema(kind))
    errors = sorted(validator.iter_errors(data), key=lambda e: list(e.absolute_path))
    if errors:
        e = errors[0]
        path = "/".join(str(p) for p in e.absolute_path) or "(top level)"
        raise InputError("at %s: %s" % (path, e.message), source=source)
    return kind


def build_surface(data, source=None):
    form = [[_rational(x, source, "intersection_matrix") for x in row]
            for row in data["intersection_matrix"]]
    curves = [Curve(c["name"], c["class"]) for c in data["curves"]]
    ample = [_rational(x, source, "ample") for x in data["ample"]]
    return SurfaceModel(data["basis"], form, curves, ample, name=data["name"])


def build_toric(data, source=None):
    n = len(data["rays"])
    for c in data["cones"]:
        if any(i >= n for i in c):
            raise InputError("cone %s refers to a missing ray" % (c,), source=source)
    divisors = {k: [_rational(x, source, "divisor " + k) for x in v]
                for k, v in data.get("divisors", {}).items()}
    labels = {tuple(o["cone"]): o["label"] for o in data.get("orbit_labels", [])}
    return ToricModel(data["rays"], data["cones"], ray_labels=data.get("ray_labels"),
                      orbit_labels=labels, divisors=divisors, basis=data.get("basis"),
                      name=data["name"])


def _rule(spec, nvars, source):
    name = spec["name"]
    if name == "maximal_power":
        from .monomial import MonomialIdeal
        c = spec.get("c", 1)
        return lambda m: MonomialIdeal.maximal_power(nvars, c * m[0])
    if name == "toric_base_ideal":
        for key in ("model", "class", "orbit"):
            if key not in spec:
                raise InputError("rule toric_base_ideal needs %r" % key, source=source)
        x = load_model(spec["model"])
        if not isinstance(x, ToricModel):
            raise InputError("rule model %r is not toric" % spec["model"], source=source)
        d = x.divisor([_rational(t, source, "rule class") for t in spec["class"]])
        cone = x.cone_index(spec["orbit"])
        if len(cone) != nvars:
            raise InputError("orbit %r has codimension %d, not %d"
                             % (spec["orbit"], len(cone), nvars), source=source)
        return lambda m: base_ideal(x, [m[0] * t for t in d], cone)
    raise InputError("unknown rule %r" % name, source=source)


def build_graded(data, source=None):
    nvars = data["variables"]
    S = Cone(data["semigroup"])
    if "table" in data:
        rees = [(row["degree"], g) for row in data["table"] for g in row["generators"]]
        s = GradedMonomialSystem(S, nvars, rees=rees, name=data["name"])
    else:
        if S.ambient_dim != 1:
            raise InputError("rule-based systems are graded by the natural numbers", source=source)
        s = GradedMonomialSystem(S, nvars, rule=_rule(data["rule"], nvars, source), name=data["name"])
    s.expected = data.get("expected", {})
    return s


_BUILDERS = {"surface": build_surface, "toric": build_toric, "graded": build_graded}


def load_text(text, source="<string>"):
    data = _parse_json(text, source)
    kind = _validate(data, source)
    return _BUILDERS[kind](data, source)


def load_path(path):
    path = Path(path)
    try:
        text = path.read_text()
    except OSError as e:
        raise InputError("cannot read model file: %s" % e.strerror, source=str(path)) from None
    return load_text(text, str(path))


def load_fixture(name):
    if name not in fixture_names():
        raise InputError("unknown fixture %r (known: %s)" % (name, ", ".join(fixture_names())))
    text = resources.files("baseloci").joinpath("fixtures", name + ".json").read_text()
    return load_text(text, name)


def load_model(target):
    """A fixture name or a path to a model file."""
    if Path(target).suffix == ".json" or Path(target).exists():
        return load_path(target)
    return load_fixture(target)
