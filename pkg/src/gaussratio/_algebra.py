"""Truncated power series and exact polynomial/rational-function arithmetic.

All routines are generic over the coefficient field: floats, Fractions and
complex all work, and exactness is preserved when the inputs are rational.
Polynomials are dense coefficient lists in ascending degree.
"""
from __future__ import annotations

from fractions import Fraction


def hyp_series(a, b, c, n: int) -> list:
    """First n coefficients of 2F1(a, b; c; t)."""
    from numbers import Rational

    if all(isinstance(x, Rational) for x in (a, b, c)):
        one = Fraction(1)
        a, b, c = Fraction(a), Fraction(b), Fraction(c)
    else:
        one = a * 0 + 1.0
    out = [one]
    coeff = one
    for k in range(n - 1):
        den = (c + k) * (k + 1)
        if den == 0:
            raise ZeroDivisionError(f"lower parameter pole at step {k}: c={c}")
        coeff = coeff * (a + k) * (b + k) / den
        out.append(coeff)
    return out


def series_mul(u: list, v: list, n: int) -> list:
    out = [u[0] * v[0] * 0] * n
    for i, ui in enumerate(u[:n]):
        if ui == 0:
            continue
        for j, vj in enumerate(v[: n - i]):
            out[i + j] += ui * vj
    return out


def series_div(u: list, v: list, n: int) -> list:
    """u/v as a power series; v[0] must be nonzero."""
    if v[0] == 0:
        raise ZeroDivisionError("series division by a series vanishing at 0")
    out = []
    for k in range(n):
        acc = u[k] if k < len(u) else u[0] * 0
        for j in range(1, k + 1):
            if j < len(v):
                acc = acc - v[j] * out[k - j]
        out.append(acc / v[0])
    return out


def binomial_one_minus_t(p: int) -> list:
    """(1 - t)^p as integer coefficients, p >= 0."""
    out = [1]
    for _ in range(p):
        nxt = [0] * (len(out) + 1)
        for i, ci in enumerate(out):
            nxt[i] += ci
            nxt[i + 1] -= ci
        out = nxt
    return out


# ---------------------------------------------------------------------------
# Dense polynomials over an exact field (Fractions), for the contiguous ladder.

def ptrim(p: list) -> list:
    while p and p[-1] == 0:
        p = p[:-1]
    return p


def padd(p: list, q: list) -> list:
    n = max(len(p), len(q))
    return ptrim([(p[i] if i < len(p) else 0) + (q[i] if i < len(q) else 0)
                  for i in range(n)])


def psub(p: list, q: list) -> list:
    return padd(p, [-x for x in q])


def pmul(p: list, q: list) -> list:
    if not p or not q:
        return []
    out = [Fraction(0)] * (len(p) + len(q) - 1)
    for i, pi in enumerate(p):
        if pi == 0:
            continue
        for j, qj in enumerate(q):
            out[i + j] += pi * qj
    return ptrim(out)


def pscale(p: list, s) -> list:
    if s == 0:
        return []
    return [x * s for x in p]


def pderiv(p: list) -> list:
    return ptrim([p[i] * i for i in range(1, len(p))])


def pdivmod(p: list, q: list) -> tuple[list, list]:
    q = ptrim(q)
    if not q:
        raise ZeroDivisionError("polynomial division by zero")
    rem = list(p)
    quo = [Fraction(0)] * max(len(p) - len(q) + 1, 0)
    lead = q[-1]
    while len(ptrim(rem)) >= len(q):
        rem = ptrim(rem)
        shift = len(rem) - len(q)
        factor = rem[-1] / lead
        quo[shift] = factor
        for i, qi in enumerate(q):
            rem[shift + i] -= factor * qi
        rem = rem[:-1]
    return ptrim(quo), ptrim(rem)


def pgcd(p: list, q: list) -> list:
    p, q = ptrim(p), ptrim(q)
    while q:
        _, rem = pdivmod(p, q)
        p, q = q, rem
    if not p:
        return []
    return [x / p[-1] for x in p]  # monic


def peval(p: list, z):
    acc = 0 * z
    for c in reversed(p):
        acc = acc * z + c
    return acc


class RatFn:
    """Rational function num/den over Fractions, kept reduced."""

    __slots__ = ("num", "den")

    def __init__(self, num, den=None):
        if den is None:
            den = [Fraction(1)]
        num, den = ptrim(list(num)), ptrim(list(den))
        if not den:
            raise ZeroDivisionError("rational function with zero denominator")
        if num:
            g = pgcd(num, den)
            if len(g) > 1:
                num, _ = pdivmod(num, g)
                den, _ = pdivmod(den, g)
            lead = den[-1]
            num = [x / lead for x in num]
            den = [x / lead for x in den]
        else:
            den = [Fraction(1)]
        self.num = num
        self.den = den

    @classmethod
    def const(cls, x) -> "RatFn":
        return cls([Fraction(x)])

    def __add__(self, other: "RatFn") -> "RatFn":
        return RatFn(padd(pmul(self.num, other.den), pmul(other.num, self.den)),
                     pmul(self.den, other.den))

    def __sub__(self, other: "RatFn") -> "RatFn":
        return RatFn(psub(pmul(self.num, other.den), pmul(other.num, self.den)),
                     pmul(self.den, other.den))

    def __mul__(self, other: "RatFn") -> "RatFn":
        return RatFn(pmul(self.num, other.num), pmul(self.den, other.den))

    def __truediv__(self, other: "RatFn") -> "RatFn":
        if not other.num:
            raise ZeroDivisionError("division by zero rational function")
        return RatFn(pmul(self.num, other.den), pmul(self.den, other.num))

    def deriv(self) -> "RatFn":
        num = psub(pmul(pderiv(self.num), self.den), pmul(self.num, pderiv(self.den)))
        return RatFn(num, pmul(self.den, self.den))

    def is_zero(self) -> bool:
        return not self.num
