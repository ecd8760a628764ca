"""JSON input schemas and report serialization.

Field:    {"p": 2, "modulus": [1, 1, 1], "name": "F4"}      (ascending; p = 0 for Q; "prime" is accepted for "p")
Auto:     "id" | {"frobenius": e} | {"image": [coords of the generator image]} ("generator_image" also accepted)
Algebra:  {"type": "petit", "field": Field,
           "ring": {"sigma": Auto, "gamma": Auto?, "c": coords?},
           "f": {"m": 2, "d": coords}}
          (for a cyclic D, "d" is a list of n coordinate lists)
Tower:    {"type": "tower", "base": Algebra, "b": [[D coords] per t^i], "k": coords, "m": 2, "rho": "id"}
Table:    {"p": 2, "dim": N, "constants": [[[...]]], "subring_basis": [[...]], "t": [...]}

Scalars are integers or "p/q" strings.
"""

from __future__ import annotations

import json

from .coeffalg import AssocElement, cyclic_algebra, field_algebra
from .errors import NacxError
from .fields import FieldAutomorphism, FieldElement, frobenius, identity_automorphism, make_finite_field, make_number_field
from .petit import PetitAlgebra, PetitElement, petit_algebra
from .recognize import RingTable, TableElement
from .scalars import base_field

SCHEMA = "nacx-report/1"


class SchemaError(NacxError):
    """Malformed input; the message names the offending field."""


def load_json(path: str):
    try:
        with open(path, encoding="utf-8") as fh:
            return json.load(fh)
    except json.JSONDecodeError as exc:
        raise SchemaError(f"{path}: line {exc.lineno}, column {exc.colno}: {exc.msg}") from None
    except OSError as exc:
        raise SchemaError(f"{path}: {exc.strerror}") from None


def _get(obj, key, path, kind=None, default=...):
    if not isinstance(obj, dict):
        raise SchemaError(f"{path}: expected an object")
    if key not in obj:
        if default is not ...:
            return default
        raise SchemaError(f"{path}.{key}: missing")
    val = obj[key]
    if kind is not None and not isinstance(val, kind):
        raise SchemaError(f"{path}.{key}: expected {getattr(kind, '__name__', kind)}")
    return val


def _scalar_list(val, path):
    if not isinstance(val, list) or not all(isinstance(c, (int, str)) and not isinstance(c, bool) for c in val):
        raise SchemaError(f"{path}: expected a list of integers or 'p/q' strings")
    return val


def parse_field(obj, path="field"):
    key = "prime" if isinstance(obj, dict) and "prime" in obj else "p"
    p = _get(obj, key, path, int)
    modulus = _scalar_list(_get(obj, "modulus", path), f"{path}.modulus")
    name = _get(obj, "name", path, str, default=None)
    if p < 0:
        raise SchemaError(f"{path}.p: must be 0 or a prime")
    if p == 0:
        return make_number_field(modulus, name)
    return make_finite_field(p, [base_field(p)(c) for c in modulus], name)


def parse_auto(K, obj, path) -> FieldAutomorphism:
    if obj is None or obj == "id":
        return identity_automorphism(K)
    if isinstance(obj, dict) and "frobenius" in obj:
        return frobenius(K, _get(obj, "frobenius", path, int))
    for key in ("image", "generator_image"):
        if isinstance(obj, dict) and key in obj:
            return FieldAutomorphism(K, K(_scalar_list(obj[key], f"{path}.{key}")))
    raise SchemaError(f"{path}: expected \"id\", {{\"frobenius\": e}} or {{\"image\": [...]}}")


def parse_coeff(K, ring, path="ring"):
    sigma = parse_auto(K, _get(ring, "sigma", path, default="id"), f"{path}.sigma")
    if "gamma" in ring:
        gamma = parse_auto(K, ring["gamma"], f"{path}.gamma")
        c = _scalar_list(_get(ring, "c", path), f"{path}.c")
        return cyclic_algebra(K, gamma, K(c), sigma)
    return field_algebra(K, sigma)


def parse_D_element(D, val, path):
    if D.n == 1:
        return D.embed(D.K(_scalar_list(val, path)))
    if not isinstance(val, list) or len(val) != D.n:
        raise SchemaError(f"{path}: expected {D.n} coordinate lists")
    return D([D.K(_scalar_list(v, f"{path}[{i}]")) for i, v in enumerate(val)])


def parse_algebra(obj, path="spec") -> PetitAlgebra:
    kind = _get(obj, "type", path, str, default="petit")
    if kind != "petit":
        raise SchemaError(f"{path}.type: expected \"petit\", got {kind!r}")
    K = parse_field(_get(obj, "field", path, dict), f"{path}.field")
    D = parse_coeff(K, _get(obj, "ring", path, dict, default={}), f"{path}.ring")
    f = _get(obj, "f", path, dict)
    m = _get(f, "m", f"{path}.f", int)
    if m < 1:
        raise SchemaError(f"{path}.f.m: must be >= 1")
    d = parse_D_element(D, _get(f, "d", f"{path}.f"), f"{path}.f.d")
    return petit_algebra(D, m, d, name=_get(obj, "name", path, str, default=None))


def parse_tower(obj, path="spec"):
    from .tower import tower_spec

    kind = _get(obj, "type", path, str, default="tower")
    if kind != "tower":
        raise SchemaError(f"{path}.type: expected \"tower\"")
    A = parse_algebra(_get(obj, "base", path, dict), f"{path}.base")
    b_raw = _get(obj, "b", path, list)
    if len(b_raw) > A.m:
        raise SchemaError(f"{path}.b: at most {A.m} coefficients")
    b = A.elem([parse_D_element(A.D, v, f"{path}.b[{i}]") for i, v in enumerate(b_raw)])
    k = A.D.K(_scalar_list(_get(obj, "k", path), f"{path}.k"))
    m = _get(obj, "m", path, int)
    rho = _get(obj, "rho", path, default="id")
    if rho != "id":
        raise SchemaError(f"{path}.rho: only \"id\" is supported from JSON")
    return tower_spec(A, b, k, m)


def parse_table(obj, path="table") -> RingTable:
    p = _get(obj, "p", path, int)
    N = _get(obj, "dim", path, int)
    consts = _get(obj, "constants", path, list)
    if len(consts) != N or any(not isinstance(r, list) or len(r) != N for r in consts):
        raise SchemaError(f"{path}.constants: expected an {N}x{N} array of vectors")
    for i, row in enumerate(consts):
        for j, v in enumerate(row):
            if len(_scalar_list(v, f"{path}.constants[{i}][{j}]")) != N:
                raise SchemaError(f"{path}.constants[{i}][{j}]: expected {N} entries")
    sub = _get(obj, "subring_basis", path, list)
    for i, v in enumerate(sub):
        if len(_scalar_list(v, f"{path}.subring_basis[{i}]")) != N:
            raise SchemaError(f"{path}.subring_basis[{i}]: expected {N} entries")
    t = _scalar_list(_get(obj, "t", path), f"{path}.t")
    if len(t) != N:
        raise SchemaError(f"{path}.t: expected {N} entries")
    return RingTable(p, N, consts, sub, tuple(t))


def table_to_json(tb: RingTable) -> dict:
    fmt = lambda c: c if isinstance(c, int) else str(c)
    return {
        "p": tb.p,
        "dim": tb.dim,
        "constants": [[[fmt(c) for c in v] for v in row] for row in tb.constants],
        "subring_basis": [[fmt(c) for c in v] for v in tb.subring_basis],
        "t": [fmt(c) for c in tb.t],
    }


def algebra_to_json(A: PetitAlgebra) -> dict:
    """Spec JSON for a Petit algebra over a CoeffAlgebra."""
    D = A.D
    K = D.K
    fmt = K.base.format
    ring = {"sigma": {"image": [fmt(c) for c in D.sigma_K.generator_image.coords]}}
    if D.kind == "cyclic":
        ring["gamma"] = {"image": [fmt(c) for c in D.gamma.generator_image.coords]}
        ring["c"] = [fmt(c) for c in D.c.coords]
    return {
        "type": "petit",
        "field": {"p": K.p, "modulus": [fmt(c) for c in K.modulus], "name": K.name},
        "ring": ring,
        "f": {"m": A.m, "d": D.format(A.d)},
    }


def jsonable(x):
    """Coordinates (as strings) for package elements; recursion for containers."""
    if isinstance(x, FieldElement):
        return [x.owner.base.format(c) for c in x.coords]
    if isinstance(x, AssocElement):
        return x.owner.format(x)
    if isinstance(x, PetitElement):
        return [jsonable(c) for c in x.coeffs]
    if isinstance(x, TableElement):
        return [x.owner.base.format(c) for c in x.vec]
    if isinstance(x, (list, tuple)):
        return [jsonable(v) for v in x]
    if isinstance(x, dict):
        return {str(k): jsonable(v) for k, v in x.items()}
    if x is None or isinstance(x, (bool, int, str)):
        return x
    if hasattr(x, "coeffs") and hasattr(x, "ring"):
        return [jsonable(c) for c in x.coeffs]
    return repr(x)


def scalar_label(x: FieldElement):
    """Prime-field elements as a signed integer string (e.g. "-1"), others as coordinates."""
    K = x.owner
    if not any(x.coords[1:]):
        c = x.coords[0]
        if K.p:
            c = int(c)
            return str(c - K.p if c > K.p // 2 else c)
        return K.base.format(c)
    return jsonable(x)


def dumps(report: dict) -> str:
    report = dict(report)
    report.setdefault("schema", SCHEMA)
    return json.dumps(jsonable(report), sort_keys=True, indent=2, ensure_ascii=False) + "\n"
