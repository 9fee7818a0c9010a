"""JSON and CSV interchange for fields, curves, specs, and matrices.

Field elements serialize as a plain int over prime fields and as a coefficient
array over extensions; CSV always uses the integer encoding sum c_i p^i.
"""

from __future__ import annotations

from .code import CodeSpec, Divisor, LocalData
from .curve import CurvePoint, curve_make
from .errors import InputError
from .field import field_make
from .matrix import FqMatrix
from .series import TruncatedSeries
from .taylor import TaylorElement


def element_to_json(e):
    if e.field.m == 1:
        return e.coeffs[0]
    return list(e.coeffs)


def element_from_json(F, v):
    if isinstance(v, int):
        return F.element(v)
    return F.element(list(v))


def field_to_json(F):
    out = {"p": F.p, "m": F.m}
    if F.m > 1:
        out["modulus"] = list(F.modulus)
    return out


def field_from_json(obj):
    try:
        p = obj["p"]
    except (TypeError, KeyError):
        raise InputError("field description needs a characteristic 'p'")
    return field_make(p, obj.get("m", 1), obj.get("modulus"))


def curve_to_json(curve):
    if curve.kind == "p1":
        return {"kind": "p1"}
    return {"kind": "elliptic",
            "A": element_to_json(curve.A),
            "B": element_to_json(curve.B)}


def curve_from_json(F, obj):
    kind = obj.get("kind")
    if kind == "p1":
        return curve_make(F, "p1")
    if kind == "elliptic":
        return curve_make(F, "elliptic", obj.get("A", 0), obj.get("B", 0))
    raise InputError(f"unknown curve kind {kind!r}", kind=kind)


def point_to_json(p):
    if p.at_infinity:
        return "inf"
    if p.beta is None:
        return [element_to_json(p.alpha)]
    return [element_to_json(p.alpha), element_to_json(p.beta)]


def point_from_json(F, v):
    if v == "inf":
        return CurvePoint.infinity()
    if isinstance(v, list) and len(v) == 1:
        return CurvePoint.affine(element_from_json(F, v[0]))
    if isinstance(v, list) and len(v) == 2:
        return CurvePoint.affine(element_from_json(F, v[0]),
                                 element_from_json(F, v[1]))
    raise InputError(f"unrecognized point {v!r}")


def series_to_json(ts):
    return {"val": 0, "coeffs": [element_to_json(c) for c in ts.coeffs]}


def series_from_json(F, obj):
    if isinstance(obj, dict):
        coeffs = obj.get("coeffs", [])
    else:
        coeffs = obj
    return TruncatedSeries(F, [element_from_json(F, c) for c in coeffs])


def spec_to_json(spec):
    out = {
        "field": field_to_json(spec.field),
        "curve": curve_to_json(spec.curve),
        "k": spec.k,
        "divisor": [{"point": point_to_json(p), "mult": n}
                    for p, n in spec.divisor.points],
        "local": [{"unit": [element_to_json(c) for c in loc.unit.coeffs],
                   "reparam": [element_to_json(c) for c in loc.reparam.coeffs]}
                  for loc in spec.local_data()],
    }
    if spec.gamma is not None:
        out["gamma"] = matrix_to_json(spec.gamma)["rows"]
    return out


def spec_from_json(obj):
    if not isinstance(obj, dict):
        raise InputError("spec must be a JSON object")
    F = field_from_json(obj.get("field", {}))
    curve = curve_from_json(F, obj.get("curve", {"kind": "p1"}))
    try:
        k = int(obj["k"])
        div_items = obj["divisor"]
    except KeyError as missing:
        raise InputError(f"spec is missing {missing}")
    points = []
    for item in div_items:
        points.append((point_from_json(F, item["point"]), int(item["mult"])))
    divisor = Divisor(tuple(points))
    local = ()
    if obj.get("local"):
        if len(obj["local"]) != len(points):
            raise InputError("one local datum required per divisor point")
        built = []
        for item, (_, n_i) in zip(obj["local"], points):
            unit = series_from_json(F, item.get("unit", [1] + [0] * (max(n_i, 2) - 1)))
            rep = item.get("reparam")
            if rep is None:
                reparam = TruncatedSeries.identity(F, max(n_i, 2))
            else:
                reparam = series_from_json(F, rep)
            built.append(LocalData(unit.pad(max(n_i, 2)), reparam.pad(max(n_i, 2))))
        local = tuple(built)
    gamma = None
    if obj.get("gamma") is not None:
        gamma = matrix_from_json(F, {"rows": obj["gamma"]})
    return CodeSpec(F, curve, k, divisor, local, gamma)


def matrix_to_json(M):
    return {"field": field_to_json(M.field),
            "rows": [[element_to_json(e) for e in M.row(r)] for r in range(M.rows)],
            "cols": M.cols}


def matrix_from_json(F, obj):
    if F is None:
        F = field_from_json(obj.get("field", {}))
    rows = obj.get("rows")
    if rows is None:
        raise InputError("matrix object needs 'rows'")
    if not rows:
        return FqMatrix(F, 0, obj.get("cols", 0), [])
    return FqMatrix.from_rows(F, [[element_from_json(F, v) for v in row]
                                  for row in rows])


def matrix_to_csv(M):
    lines = []
    for r in range(M.rows):
        lines.append(",".join(str(e.to_index()) for e in M.row(r)))
    return "\n".join(lines) + "\n"


def matrix_to_pretty(M, block_sizes=None):
    lines = []
    for r in range(M.rows):
        cells = [str(e.to_index()) for e in M.row(r)]
        if block_sizes:
            grouped = []
            i = 0
            for n in block_sizes:
                grouped.append(" ".join(cells[i:i + n]))
                i += n
            lines.append(" | ".join(grouped))
        else:
            lines.append(" ".join(cells))
    return "\n".join(lines) + "\n"


def taylor_to_json(g):
    return {"a": [element_to_json(c) for c in g.a.coeffs],
            "sigma": [element_to_json(c) for c in g.sigma.coeffs]}


def taylor_from_json(F, obj):
    a = series_from_json(F, obj.get("a"))
    sigma = series_from_json(F, obj.get("sigma"))
    return TaylorElement(a, sigma)
