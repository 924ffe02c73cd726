"""JSON and CSV encodings for scalars, Fock vectors, matrices and results.

Every ``*_to_obj`` has a matching ``*_from_obj`` and the pair is an exact
round trip.  Rational coefficients are written as decimal strings ("-3/4").
"""

from __future__ import annotations

import csv
import io
import json
from fractions import Fraction

from .fock import FockVector
from .linalg import ScalarMatrix
from .partitions import Partition, from_multiplicities
from .scalars import Scalar

__all__ = [
    "scalar_to_obj",
    "scalar_from_obj",
    "fock_to_obj",
    "fock_from_obj",
    "partition_to_obj",
    "partition_from_obj",
    "matrix_to_obj",
    "matrix_from_obj",
    "singular_to_obj",
    "singular_from_obj",
    "kac_table_csv",
    "matrix_csv",
    "dumps",
    "loads",
]


def _poly_obj(terms: dict) -> list:
    # descending graded order on (a, b)
    items = sorted(terms.items(), key=lambda kv: (-(kv[0][0] + kv[0][1]), -kv[0][0], -kv[0][1]))
    return [[str(c), a, b] for (a, b), c in items]


def _poly_from(obj) -> dict:
    return {(int(a), int(b)): Fraction(c) for c, a, b in obj}


def scalar_to_obj(x: Scalar) -> dict:
    rn, rd = x.real_fraction()
    inum, iden = x.imag_fraction()
    return {
        "re": {"num": _poly_obj(rn), "den": _poly_obj(rd)},
        "im": {"num": _poly_obj(inum), "den": _poly_obj(iden)},
    }


def scalar_from_obj(obj) -> Scalar:
    return Scalar.from_terms(
        _poly_from(obj["re"]["num"]),
        _poly_from(obj["re"]["den"]),
        _poly_from(obj["im"]["num"]),
        _poly_from(obj["im"]["den"]),
    )


def partition_to_obj(p) -> list:
    return list(p)


def partition_from_obj(obj) -> Partition:
    return Partition(obj)


def fock_to_obj(v: FockVector) -> dict:
    return {
        "terms": [
            {"phi": [[n, kn] for n, kn in sorted(k.multiplicities().items())], "coeff": scalar_to_obj(c)}
            for k, c in v.items()
        ]
    }


def fock_from_obj(obj) -> FockVector:
    terms = {}
    for t in obj["terms"]:
        k = from_multiplicities({int(n): int(kn) for n, kn in t["phi"]})
        terms[k] = scalar_from_obj(t["coeff"])
    return FockVector(terms)


def matrix_to_obj(m: ScalarMatrix) -> dict:
    return {
        "rows": [list(p) for p in m.row_index],
        "cols": [list(p) for p in m.col_index],
        "entries": [[scalar_to_obj(x) for x in row] for row in m.entries],
    }


def matrix_from_obj(obj) -> ScalarMatrix:
    return ScalarMatrix(
        [Partition(p) for p in obj["rows"]],
        [Partition(p) for p in obj["cols"]],
        [[scalar_from_obj(x) for x in row] for row in obj["entries"]],
    )


def singular_to_obj(res) -> dict:
    return {
        "r": res.r,
        "s": res.s,
        "sigma": [{"nu": list(nu), "coeff": scalar_to_obj(c)} for nu, c in res.sigma.items()],
        "realized_at_dual": fock_to_obj(res.realized_at_dual),
        "realized_at_kac": fock_to_obj(res.realized_at_kac),
    }


def singular_from_obj(obj):
    from .structure import SingularVectorResult

    return SingularVectorResult(
        r=int(obj["r"]),
        s=int(obj["s"]),
        sigma={Partition(t["nu"]): scalar_from_obj(t["coeff"]) for t in obj["sigma"]},
        realized_at_dual=fock_from_obj(obj["realized_at_dual"]),
        realized_at_kac=fock_from_obj(obj["realized_at_kac"]),
    )


def _csv(rows) -> str:
    buf = io.StringIO()
    csv.writer(buf, lineterminator="\n").writerows(rows)
    return buf.getvalue()


def kac_table_csv(factors) -> str:
    """CSV of (r, s, exponent) rows of a Kac product."""
    return _csv([("r", "s", "exponent"), *factors])


def matrix_csv(m: ScalarMatrix) -> str:
    head = [""] + [",".join(map(str, p)) or "()" for p in m.col_index]
    body = [[",".join(map(str, p)) or "()"] + [str(x) for x in row] for p, row in zip(m.row_index, m.entries)]
    return _csv([head, *body])


def dumps(obj, pretty: bool = False) -> str:
    return json.dumps(obj, indent=2 if pretty else None, sort_keys=True)


def loads(text: str):
    return json.loads(text)
