"""Regenerate the JSON samples in data/."""

import json
import os

from nacx import io
from nacx.coeffalg import field_algebra
from nacx.fields import frobenius, make_finite_field
from nacx.petit import PetitAlgebra, petit_algebra
from nacx.recognize import table_from_algebra
from nacx.skewpoly import SkewPolyRing

OUT = os.path.join(os.path.dirname(__file__), "..", "data")


def field(p, modulus, name):
    return {"p": p, "modulus": modulus, "name": name}


def petit(fld, sigma, m, d):
    return {"type": "petit", "field": fld, "ring": {"sigma": sigma}, "f": {"m": m, "d": d}}


F4 = field(2, [1, 1, 1], "F4")
F8 = field(2, [1, 1, 0, 1], "F8")
F9 = field(3, [1, 0, 1], "F9")
F25 = field(5, [2, 0, 1], "F25")
F64 = field(2, [1, 1, 0, 0, 0, 0, 1], "F64")

SPECS = {
    "field_f4.json": F4,
    "field_bad.json": field(2, [1, 0, 1], "notafield"),
    "f4_alpha.json": petit(F4, {"frobenius": 1}, 2, [0, 1]),
    "f4_one.json": petit(F4, {"frobenius": 1}, 2, [1, 0]),
    "f8_d.json": petit(F8, {"frobenius": 1}, 3, [0, 1, 0]),
    "f9_d.json": petit(F9, {"frobenius": 1}, 2, [0, 1]),
    "f64_d.json": petit(F64, {"frobenius": 2}, 3, [0, 1, 0, 0, 0, 0]),
    "tower_f25.json": {
        "type": "tower",
        "base": petit(F25, {"frobenius": 1}, 2, [2, 0]),
        "b": [[0, 0], [1, 0]],
        "k": [2, 0],
        "m": 2,
        "rho": "id",
    },
}


def tables():
    K = make_finite_field(2, [1, 1, 1], "F4")
    D = field_algebra(K, frobenius(K))
    yield "table_f4_alpha.json", table_from_algebra(petit_algebra(D, 2, K.gen))
    K9 = make_finite_field(3, [1, 0, 1], "F9")
    yield "table_f9_d.json", table_from_algebra(petit_algebra(field_algebra(K9, frobenius(K9)), 2, K9.gen))
    # t^2 = 1 + t: not a binomial
    R = SkewPolyRing(D, D.sigma)
    f = R.poly([D.one, D.one, D.one])
    yield "bad.json", table_from_algebra(PetitAlgebra(R, f))


def main():
    os.makedirs(OUT, exist_ok=True)
    for name, obj in SPECS.items():
        with open(os.path.join(OUT, name), "w") as fh:
            json.dump(obj, fh, indent=1)
            fh.write("\n")
    for name, tb in tables():
        with open(os.path.join(OUT, name), "w") as fh:
            json.dump(io.table_to_json(tb), fh)
            fh.write("\n")
    print("wrote", len(SPECS) + 3, "files to", os.path.normpath(OUT))


if __name__ == "__main__":
    main()
