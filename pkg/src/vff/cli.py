"""Command-line interface: ``vff <command> [options]``.

Exit codes: 0 success, 1 a verification failed, 2 usage error.
"""

from __future__ import annotations

import argparse
import os
import sys
from fractions import Fraction

from . import polerec, serialize, structure
from .errors import VffError
from .fock import FockVector, monomial
from .partitions import (
    Partition,
    distance_to_minimal,
    enumerate_level,
    maximal,
    minimal,
    moves,
    partition_count,
    poset_dot,
    preceq,
    tau,
)
from .scalars import ALPHA, GAMMA, Scalar, central_charge, kac_alpha, reflect
from .sugawara import (
    apply_L,
    closed_form_L,
    commutator_defect,
    descendant,
    hermiticity_defect,
    highest_weight_check,
)


class UsageError(Exception):
    pass


# -- argument parsing helpers ------------------------------------------------------


def _ints(text: str) -> tuple[int, ...]:
    try:
        vals = tuple(int(x) for x in text.split(",") if x.strip())
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from None
    if any(v < 1 for v in vals):
        raise argparse.ArgumentTypeError("entries must be positive")
    return vals


def _pair(text: str) -> tuple[int, int]:
    vals = _ints(text)
    if len(vals) != 2:
        raise argparse.ArgumentTypeError(f"expected r,s got {text!r}")
    return vals


def _gamma(text: str):
    if text == "symbolic":
        return None
    try:
        g = Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"gamma must be 'symbolic' or p/q, got {text!r}") from None
    if not 0 < g < 2:
        raise argparse.ArgumentTypeError("gamma must lie in (0, 2)")
    return g


def _alpha(text: str) -> Scalar:
    if text == "symbolic":
        return ALPHA
    if text.startswith("kac:"):
        r, s = _pair(text[4:])
        return kac_alpha(r, s)
    try:
        return Scalar.coerce(Fraction(text))
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"alpha must be 'symbolic', a rational or kac:r,s; got {text!r}") from None


def _base(text: str):
    if text == "empty":
        return polerec.EmptyOnly()
    if text.startswith("rect:"):
        r, s = _pair(text[5:])
        return polerec.Rectangle(r, s)
    raise argparse.ArgumentTypeError(f"base must be 'empty' or rect:r,s; got {text!r}")


def _level(n: int) -> int:
    if n < 1:
        raise UsageError("level must be >= 1")
    cap = os.environ.get("VFF_MAX_LEVEL")
    if cap:
        try:
            cap_n = int(cap)
        except ValueError:
            raise UsageError(f"VFF_MAX_LEVEL must be an integer, got {cap!r}") from None
        if n > cap_n:
            raise UsageError(f"level {n} exceeds VFF_MAX_LEVEL={cap_n}")
    return n


# -- output ------------------------------------------------------------------------


def _at_gamma(x: Scalar, gamma) -> Scalar:
    return x if gamma is None else x.subs(gamma=Scalar.coerce(gamma))


class _Out:
    def __init__(self, args):
        self.fmt = args.format
        self.gamma = args.gamma
        self.stream = sys.stdout

    def scalar(self, x):
        return serialize.scalar_to_obj(_at_gamma(x, self.gamma))

    def vector(self, v: FockVector) -> FockVector:
        if self.gamma is None:
            return v
        return v.map_coefficients(lambda c: _at_gamma(c, self.gamma))

    def fock(self, v: FockVector):
        return serialize.fock_to_obj(self.vector(v))

    def matrix(self, m):
        if self.gamma is not None:
            m = m.map(lambda c: _at_gamma(c, self.gamma))
        return m

    def emit(self, obj, pretty=None, csv=None, dot=None):
        if self.fmt == "json":
            text = serialize.dumps(obj) + "\n"
        elif self.fmt == "pretty":
            text = pretty if pretty is not None else serialize.dumps(obj, pretty=True) + "\n"
        elif self.fmt == "csv":
            if csv is None:
                raise UsageError("csv output is not available for this command")
            text = csv
        else:
            if dot is None:
                raise UsageError("dot output is not available for this command")
            text = dot
        self.stream.write(text)


def _p(v) -> str:
    return ",".join(map(str, v)) or "()"


# -- commands ----------------------------------------------------------------------


def cmd_descendant(args, out: _Out) -> int:
    nu = Partition.sorted(args.nu)
    _level(nu.level)
    v = out.vector(descendant(args.alpha, nu))
    obj = {"nu": list(nu), "alpha": out.scalar(args.alpha), "vector": serialize.fock_to_obj(v)}
    out.emit(obj, pretty=f"Q[{_p(nu)}] = {v}\n")
    return 0


def _matrix_obj(m):
    return serialize.matrix_to_obj(m)


def _matrix_pretty(title, m) -> str:
    lines = [title]
    for p, row in zip(m.row_index, m.entries):
        lines.append(f"  {_p(p)}: " + " | ".join(str(x) for x in row))
    return "\n".join(lines) + "\n"


def cmd_matrix(args, out: _Out) -> int:
    n = _level(args.level)
    alpha = reflect(args.alpha) if args.dual else args.alpha
    m = out.matrix(structure.descendant_matrix(n, alpha, args.basis))
    obj = {"level": n, "alpha": out.scalar(alpha), "basis": args.basis, "matrix": _matrix_obj(m)}
    out.emit(obj, pretty=_matrix_pretty(f"descendant matrix, level {n}, alpha = {alpha}", m), csv=serialize.matrix_csv(m))
    return 0


def cmd_shapovalov(args, out: _Out) -> int:
    n = _level(args.level)
    m = structure.shapovalov_matrix(n, args.alpha)
    ok = m.is_symmetric()
    m = out.matrix(m)
    obj = {"level": n, "symmetric": ok, "matrix": _matrix_obj(m)}
    out.emit(obj, pretty=_matrix_pretty(f"Shapovalov matrix, level {n}", m), csv=serialize.matrix_csv(m))
    return 0 if ok else 1


def cmd_kac_det(args, out: _Out) -> int:
    n = _level(args.level)
    factors = structure.kac_factors(n, args.p0)
    try:
        ratio = structure.kac_determinant_check(n, args.p0)
        status = "OK"
    except structure.FactorizationMismatch:
        ratio, status = None, "MISMATCH"
    obj = {
        "level": n,
        "p0": args.p0,
        "factors": [list(f) for f in factors],
        "ratio": out.scalar(ratio) if ratio is not None else None,
        "status": status,
    }
    pretty = f"level {n}: det S / Kac product = {ratio}  [{status}]\n"
    out.emit(obj, pretty=pretty, csv=serialize.kac_table_csv(factors))
    return 0 if status == "OK" else 1


def cmd_projection(args, out: _Out) -> int:
    n = _level(args.level)
    if args.at_kac:
        m = structure.projection_matrix(n, at_kac=args.at_kac)
    else:
        m = structure.projection_matrix(n, args.alpha)
    m = out.matrix(m)
    rank = m.rank()
    obj = {"level": n, "at_kac": list(args.at_kac) if args.at_kac else None, "rank": rank, "matrix": _matrix_obj(m)}
    out.emit(obj, pretty=_matrix_pretty(f"projection, level {n}, rank {rank}", m), csv=serialize.matrix_csv(m))
    return 0


def cmd_kernel(args, out: _Out) -> int:
    n = _level(args.level)
    labels = enumerate_level(n)
    expected = partition_count(n - args.r * args.s, args.p0)
    if args.gamma is None:
        basis = structure.kernel_basis(args.r, args.s, n)
    else:
        d = structure.descendant_matrix(n, kac_alpha(args.r, args.s))
        basis = out.matrix(d).left_nullspace()
    obj = {
        "r": args.r,
        "s": args.s,
        "level": n,
        "labels": [list(p) for p in labels],
        "dimension": len(basis),
        "expected": expected,
        "basis": [[out.scalar(x) for x in vec] for vec in basis],
    }
    pretty = f"dim ker = {len(basis)} (p(N - rs) = {expected})\n" + "".join(
        "  " + " | ".join(f"{_p(p)}: {x}" for p, x in zip(labels, vec) if not x.is_zero()) + "\n" for vec in basis
    )
    out.emit(obj, pretty=pretty)
    return 0


def cmd_singular_vector(args, out: _Out) -> int:
    _level(args.r * args.s)
    res = structure.singular_vector(args.r, args.s)
    if out.gamma is not None:
        obj = serialize.singular_to_obj(res)
        obj["sigma"] = [{"nu": t["nu"], "coeff": out.scalar(res.sigma[Partition(t["nu"])])} for t in obj["sigma"]]
        obj["realized_at_dual"] = out.fock(res.realized_at_dual)
        obj["realized_at_kac"] = out.fock(res.realized_at_kac)
    else:
        obj = serialize.singular_to_obj(res)
    lines = [f"singular vector ({args.r},{args.s}), level {res.level}"]
    lines += [f"  sigma[{_p(nu)}] = {_at_gamma(c, out.gamma)}" for nu, c in res.sigma.items()]
    lines.append(f"  realized at dual weight: {out.vector(res.realized_at_dual)}")
    lines.append(f"  realized at Kac weight: {res.realized_at_kac}")
    out.emit(obj, pretty="\n".join(lines) + "\n")
    return 0


def cmd_classify(args, out: _Out) -> int:
    if args.branch == "not-kac":
        point = structure.NotKac()
    else:
        if args.r is None or args.s is None:
            raise UsageError("--r and --s are required for Kac branches")
        cls = structure.KacMinus if args.branch == "kac-minus" else structure.KacPlus
        point = cls(args.r, args.s)
    verdict = structure.classify(point, args.gamma)
    obj = {
        "branch": args.branch,
        "r": args.r,
        "s": args.s,
        "gamma": "symbolic" if args.gamma is None else str(args.gamma),
        "verdict": verdict.value,
    }
    out.emit(obj, pretty=verdict.value + "\n")
    return 0


def cmd_partitions(args, out: _Out) -> int:
    n = _level(args.level)
    parts = enumerate_level(n)
    obj = {"level": n, "count": len(parts), "partitions": [list(p) for p in parts]}
    if args.poset:
        obj["edges"] = [
            {"from": list(p), "to": list(tau(j, p)), "move": j}
            for p in parts
            for j in range(1, len(p) + 1)
            if tau(j, p) != p
        ]
        pretty = poset_dot(n)
    else:
        pretty = "\n".join(_p(p) for p in parts) + "\n"
    out.emit(obj, pretty=pretty, csv="".join(_p(p).replace(",", " ") + "\n" for p in parts), dot=poset_dot(n))
    return 0


def cmd_pole_tree(args, out: _Out) -> int:
    t = polerec.IntegralType(Partition.sorted(args.type))
    _level(max(t.level, 1))
    tree = polerec.reduction_tree(t, args.base)
    cands = sorted(polerec.pole_candidates(t, args.base))
    obj = {"tree": polerec.tree_to_obj(tree), "pole_candidates": [list(c) for c in cands]}
    pretty = polerec.tree_to_dot(tree) + "// candidates: " + " ".join(f"({r},{s})" for r, s in cands) + "\n"
    out.emit(obj, pretty=pretty, dot=polerec.tree_to_dot(tree))
    return 0


# -- verification suites -------------------------------------------------------------


def _suite_virasoro(m: int):
    mono = [p for n in range(0, m + 1) for p in enumerate_level(n)]
    nmax = min(4, m)
    yield "virasoro.commutators", all(
        commutator_defect(a, b, ALPHA, monomial(k)).is_zero()
        for k in mono
        for a in range(-nmax, nmax + 1)
        for b in range(-nmax, nmax + 1)
    )
    yield "virasoro.central_charge", central_charge() == 1 + 6 * (GAMMA / 2 + 2 / GAMMA) ** 2
    yield "virasoro.closed_form", all(
        apply_L(n, ALPHA, monomial(k)) == closed_form_L(n, ALPHA, monomial(k))
        for k in mono
        for n in range(-min(5, m), min(5, m) + 1)
    )
    small = [p for p in mono if p.level <= min(4, m)]
    yield "virasoro.hermiticity", all(
        hermiticity_defect(n, ALPHA, monomial(u), monomial(v)).is_zero()
        for n in range(-3, 4)
        for u in small
        for v in small
        if u.level - n == v.level
    )
    yield "virasoro.highest_weight", highest_weight_check(ALPHA, m)


def _suite_kac(m: int):
    for n in range(1, min(m, 5) + 1):
        try:
            ratio = structure.kac_determinant_check(n)
            ok = n != 2 or ratio == Scalar.coerce(32)
        except structure.FactorizationMismatch:
            ok = False
        yield f"kac.determinant.N{n}", ok
    for r in range(1, 7):
        for s in range(1, 7):
            if r * s > min(m, 6):
                continue
            try:
                res = structure.singular_vector(r, s)
                dual = reflect(kac_alpha(r, s))
                ok = (
                    res.sigma[minimal(r * s)] == Scalar.coerce(1)
                    and res.realized_at_kac.is_zero()
                    and not res.realized_at_dual.is_zero()
                    and structure.annihilated_up_to(res.realized_at_dual, dual, r * s)
                )
            except VffError:
                ok = False
            yield f"kac.singular_vector.{r}_{s}", ok
    for r in range(1, 5):
        for s in range(1, 5):
            if r * s > 4:
                continue
            for n in range(1, min(r * s + 2, m) + 1):
                dim_ok = len(structure.kernel_basis(r, s, n)) == partition_count(n - r * s)
                full = structure.descendant_matrix(n, reflect(kac_alpha(r, s))).rank() == partition_count(n)
                yield f"kac.kernel.{r}_{s}.N{n}", dim_ok and full
                yield f"kac.irreducible.{r}_{s}.N{n}", structure.irreducibility_check(r, s, n)


def _suite_poset(m: int):
    for n in range(1, m + 1):
        parts = enumerate_level(n)
        ok = len(parts) == partition_count(n) and len(set(parts)) == len(parts)
        ok = ok and all(q.level == n for p in parts for q in moves(p))
        mins = [p for p in parts if not moves(p)]
        maxs = [p for p in parts if not any(p in moves(q) for q in parts)]
        ok = ok and mins == [minimal(n)] and maxs == [maximal(n)]
        ok = ok and all(preceq(minimal(n), p) and preceq(p, maximal(n)) for p in parts)
        ok = ok and all(
            not (a != b and preceq(a, b) and preceq(b, a)) for a in parts for b in parts
        )
        ok = ok and all(distance_to_minimal(p) >= 0 for p in parts)
        yield f"poset.N{n}", ok


def _suite_poles(m: int):
    for r in range(1, min(m, 5) + 1):
        yield f"poles.all_ones.{r}", polerec.pole_candidates((1,) * r) == {(k, 1) for k in range(1, r + 1)}
    ok_kac = ok_edge = True
    for n in range(1, m + 1):
        for p in enumerate_level(n):
            t = polerec.IntegralType(p)
            ok_kac &= all(a >= 1 and b >= 1 for a, b in polerec.pole_candidates(t))
            for _, c in polerec.reduce(t).edges:
                ok_edge &= polerec.measure(c) < polerec.measure(t)
    yield "poles.in_kac_table", ok_kac
    yield "poles.edges_decrease", ok_edge
    for r in range(1, m + 1):
        for s in range(1, m // r + 1):
            yield f"poles.regular.{r}_{s}", polerec.verify_regularity(r, s)


_SUITES = {
    "virasoro": _suite_virasoro,
    "kac": _suite_kac,
    "poset": _suite_poset,
    "poles": _suite_poles,
}


def cmd_verify(args, out: _Out) -> int:
    m = _level(args.max_level)
    names = list(_SUITES) if args.suite == "all" else [args.suite]
    results = [(name, bool(ok)) for s in names for name, ok in _SUITES[s](m)]
    passed = all(ok for _, ok in results)
    obj = {"suite": args.suite, "max_level": m, "passed": passed, "checks": [{"name": n, "ok": ok} for n, ok in results]}
    pretty = "".join(f"{'PASS' if ok else 'FAIL'} {n}\n" for n, ok in results)
    pretty += f"{'OK' if passed else 'FAILED'}: {sum(ok for _, ok in results)}/{len(results)} checks passed\n"
    csv = "check,ok\n" + "".join(f"{n},{int(ok)}\n" for n, ok in results)
    out.emit(obj, pretty=pretty, csv=csv)
    return 0 if passed else 1


# -- parser ------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "csv", "pretty", "dot"), default="pretty")
    common.add_argument("--gamma", type=_gamma, default=None, help="'symbolic' (default) or a rational in (0, 2)")
    common.add_argument("--p0", choices=("one", "zero"), default="one")
    common.add_argument("--output", "-o", default=None, help="write to a file instead of stdout")

    parser = argparse.ArgumentParser(prog="vff", description="Free-field Virasoro representations, exactly.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("descendant", parents=[common], help="Q_{alpha,nu} in the phi basis")
    p.add_argument("--nu", type=_ints, required=True)
    p.add_argument("--alpha", type=_alpha, default=ALPHA)
    p.set_defaults(func=cmd_descendant)

    p = sub.add_parser("matrix", parents=[common], help="descendant matrix at level N")
    p.add_argument("--level", type=int, required=True)
    p.add_argument("--alpha", type=_alpha, default=ALPHA)
    p.add_argument("--dual", action="store_true", help="use 2Q - alpha")
    p.add_argument("--basis", choices=("phi", "pi"), default="phi")
    p.set_defaults(func=cmd_matrix)

    p = sub.add_parser("shapovalov", parents=[common], help="Shapovalov matrix at level N")
    p.add_argument("--level", type=int, required=True)
    p.add_argument("--alpha", type=_alpha, default=ALPHA)
    p.set_defaults(func=cmd_shapovalov)

    p = sub.add_parser("kac-det", parents=[common], help="det S_N against the Kac product")
    p.add_argument("--level", type=int, required=True)
    p.set_defaults(func=cmd_kac_det)

    p = sub.add_parser("projection", parents=[common], help="matrix of the canonical projection")
    p.add_argument("--level", type=int, required=True)
    p.add_argument("--alpha", type=_alpha, default=ALPHA)
    p.add_argument("--at-kac", type=_pair, default=None, metavar="R,S")
    p.set_defaults(func=cmd_projection)

    p = sub.add_parser("kernel", parents=[common], help="kernel of the projection at alpha_{r,s}")
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--s", type=int, required=True)
    p.add_argument("--level", type=int, required=True)
    p.set_defaults(func=cmd_kernel)

    p = sub.add_parser("singular-vector", parents=[common], help="singular vector at level rs")
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--s", type=int, required=True)
    p.set_defaults(func=cmd_singular_vector)

    p = sub.add_parser("classify", parents=[common], help="structure of the module at a weight")
    p.add_argument("--branch", choices=("not-kac", "kac-minus", "kac-plus"), required=True)
    p.add_argument("--r", type=int, default=None)
    p.add_argument("--s", type=int, default=None)
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("partitions", parents=[common], help="partitions of N and the move poset")
    p.add_argument("--level", type=int, required=True)
    p.add_argument("--poset", action="store_true")
    p.set_defaults(func=cmd_partitions)

    p = sub.add_parser("pole-tree", parents=[common], help="reduction tree of a singular type")
    p.add_argument("--type", type=_ints, required=True)
    p.add_argument("--base", type=_base, default=polerec.EmptyOnly(), help="'empty' or rect:r,s")
    p.set_defaults(func=cmd_pole_tree)

    p = sub.add_parser("verify", parents=[common], help="run a verification suite")
    p.add_argument("--suite", choices=("all", *_SUITES), default="all")
    p.add_argument("--max-level", type=int, default=4)
    p.set_defaults(func=cmd_verify)
    return parser


def run(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    out = _Out(args)
    fh = None
    if args.output:
        fh = open(args.output, "w", encoding="utf-8", newline="")
        out.stream = fh
    try:
        return args.func(args, out)
    except (UsageError, ValueError) as exc:
        print(f"vff {args.command}: error: {exc}", file=sys.stderr)
        return 2
    except VffError as exc:
        print(f"vff {args.command}: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 1
    finally:
        if fh is not None:
            fh.close()


def main(argv=None) -> None:
    sys.exit(run(argv))


if __name__ == "__main__":
    main()
