"""fmpz_mpoly kernel (compiled)."""

import flint

NAME = "flint"

_ctx = flint.fmpz_mpoly_ctx.get(("g", "a"), "deglex")
GAMMA, ALPHA = _ctx.gens()
ZERO = _ctx.from_dict({})
ONE = _ctx.from_dict({(0, 0): 1})


def const(n):
    return _ctx.from_dict({(0, 0): int(n)}) if n else ZERO


def from_terms(terms):
    return _ctx.from_dict({tuple(m): int(c) for m, c in terms.items() if c})


def terms(p):
    """Terms in descending graded-lex order as ((a, b), int)."""
    return [((int(m[0]), int(m[1])), int(c)) for m, c in p.terms()]


def gcd(p, q):
    return p.gcd(q)


def exquo(p, q):
    return p / q


def lc(p):
    return int(p.leading_coefficient())


def content(p):
    return int(p.content())


def is_zero(p):
    return p.is_zero()


def degrees(p):
    if p.is_zero():
        return (0, 0)
    return tuple(int(d) for d in p.degrees())
