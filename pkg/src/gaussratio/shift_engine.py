"""Machinery indexed by the integer shift triple (n1, n2, m).

Covers the derived shift quantities, the boundary constant B, the real
polynomial P_r governing the branch-cut density (computed two independent
ways: truncated-series products and the explicit double-sum with
terminating 4F3 factors), the signed density Im R(x +- i0) itself, Taylor
data of the ratio at 0 and its value at 1, and the contiguous-relation
ladder expressing any shifted function through the (0,1,1) basis.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from ._algebra import (
    RatFn,
    binomial_one_minus_t,
    hyp_series,
    pdivmod,
    peval,
    pgcd,
    pmul,
    ptrim,
    series_div,
    series_mul,
)
from .errors import (
    DegenerateParams,
    DenominatorZero,
    LadderDegeneracy,
    PoleError,
    SeriesTruncationError,
    UndefinedB,
)
from .hyp2f1_core import (
    Params,
    abs2_on_cut,
    gamma_sign,
    hyp2f1,
    is_nonpos_int,
    pochhammer,
)

GUARD_TOL = 1e-9
_DENOM_FLOOR = 1e-280


@dataclass(frozen=True)
class Shifts:
    """Integer shift triple with the derived quantities.

    p - l = m - n1 - n2 always; r = -1 only for the trivial triple (0,0,0).
    """

    n1: int
    n2: int
    m: int
    n_min: int
    n_max: int
    p: int
    l: int
    r: int


def derive_shifts(n1: int, n2: int, m: int) -> Shifts:
    p = max(m - n1 - n2, 0)
    l = max(n1 + n2 - m, 0)
    n_min = min(n1, n2)
    n_max = max(n1, n2)
    r = l + max(m, 0) - n_min - 1
    return Shifts(n1=n1, n2=n2, m=m, n_min=n_min, n_max=n_max, p=p, l=l, r=r)


@dataclass(frozen=True)
class RealPoly:
    """Dense real polynomial, ascending coefficients, trailing zeros trimmed."""

    coeffs: tuple[float, ...]

    @classmethod
    def from_seq(cls, seq) -> "RealPoly":
        c = [float(x) for x in seq]
        while c and c[-1] == 0.0:
            c.pop()
        return cls(tuple(c))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __call__(self, x):
        acc = 0.0 * x
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def scaled(self, s: float) -> "RealPoly":
        return RealPoly.from_seq([s * c for c in self.coeffs])

    def is_zero(self) -> bool:
        return not self.coeffs


ZERO_POLY = RealPoly(())


@dataclass(frozen=True)
class BoundaryDensity:
    """Data of the closed branch-cut density formula for one (params, shifts)."""

    params: Params
    shifts: Shifts
    B: float
    P_r: RealPoly


def compute_B(p: Params, s: Shifts) -> float:
    """Boundary constant -G(c)G(c+m) / (G(a)G(b)G(c-a+m-n1)G(c-b+m-n2)).

    Poles of the denominator gammas give B = 0; poles of the numerator
    gammas make B undefined.
    """
    a, b, c = p.as_floats()
    num_args = (c, c + s.m)
    den_args = (a, b, c - a + s.m - s.n1, c - b + s.m - s.n2)
    if any(is_nonpos_int(x) for x in num_args):
        raise UndefinedB(f"Gamma pole in numerator of B at {num_args}")
    if any(is_nonpos_int(x) for x in den_args):
        return 0.0
    num = gamma_sign(num_args[0]) * gamma_sign(num_args[1])
    den = gamma_sign(den_args[0])
    for x in den_args[1:]:
        den = den * gamma_sign(x)
    ratio = num / den
    return -ratio.value()


def _default_substitution(a, b, c):
    # alpha = a, beta = 1-c+a, gamma = 1-b+a
    return a, 1 - c + a, 1 - b + a


def _hyp_factor_ok(c1, terms: int) -> bool:
    """Lower parameter of a 2F1 series factor stays off its poles: the
    coefficient recurrence divides by c1 + k for k = 0 .. terms-2."""
    cf = float(c1)
    if abs(cf - round(cf)) > 1e-9:
        return True
    k = round(cf)
    return not (-(terms - 2) <= k <= 0)


def _poch_ok(z, r: int) -> bool:
    if r >= 0:
        return True
    zf = float(z)
    for i in range(1, -r + 1):
        if abs(zf - i) <= 1e-12:
            return False
    return True


def compute_Pr_taylor(p: Params, s: Shifts, alpha_beta_gamma=None) -> RealPoly:
    """P_r by series products: multiply out the two-product identity,
    normalize by t^{-n_min} (1-t)^p and read the first r+1 coefficients.

    Guard coefficients past degree r must vanish below GUARD_TOL (relative);
    a violation raises SeriesTruncationError.
    """
    if s.r < 0:
        return ZERO_POLY
    a, b, c = p.a, p.b, p.c
    if alpha_beta_gamma is None:
        al, be, ga = _default_substitution(a, b, c)
    else:
        al, be, ga = alpha_beta_gamma
    n1, n2, m = s.n1, s.n2, s.m
    L = s.r + abs(s.n_max) + abs(s.n_min) + s.p + 4
    nterms = L + 1

    zero = 0.0 if not isinstance(a, Fraction) else Fraction(0)
    total = [zero] * nterms
    guard_limit = nterms

    term_specs = [
        # (start offset, prefactor pochhammers, series factor params)
        (n1 - s.n_min,
         ((ga - al, -n2), (ga - be, m - n2)), (ga - 1, n1 - n2 + 1),
         (1 - ga + al, 1 - ga + be, 2 - ga),
         (ga - al - n2, ga - be + m - n2, ga + n1 - n2)),
        (n2 - s.n_min,
         ((1 - al, -n1), (1 - be, m - n1)), (1 - ga, n2 - n1 + 1),
         (al, be, ga),
         (1 - al - n1, 1 - be + m - n1, 2 - ga + n2 - n1)),
    ]
    for start, poch_num, poch_den, f_first, f_second in term_specs:
        needed = nterms - start
        if needed <= 0:
            continue
        ok = (all(_poch_ok(z, r_) for z, r_ in poch_num)
              and _poch_ok(*poch_den)
              and pochhammer(float(poch_den[0]), poch_den[1]) != 0
              and _hyp_factor_ok(f_first[2], needed)
              and _hyp_factor_ok(f_second[2], needed))
        if not ok:
            if start > s.r:
                # the degenerate factor only feeds guard coefficients
                guard_limit = min(guard_limit, start)
                continue
            raise DegenerateParams(
                f"pole in polynomial identity prefactors at shifts "
                f"({n1},{n2},{m}) with substitution ({al},{be},{ga})")
        pref = pochhammer(poch_num[0][0], poch_num[0][1])
        pref = pref * pochhammer(poch_num[1][0], poch_num[1][1])
        pref = pref / pochhammer(poch_den[0], poch_den[1])
        u = hyp_series(f_first[0], f_first[1], f_first[2], needed)
        v = hyp_series(f_second[0], f_second[1], f_second[2], needed)
        prod = series_mul(u, v, needed)
        for i, x in enumerate(prod):
            total[start + i] += pref * x
    # multiply by (1-t)^p
    binom = binomial_one_minus_t(s.p)
    total = series_mul(total, binom, nterms)

    scale = max(abs(float(x)) for x in total[: s.r + 1]) or 1.0
    for i in range(s.r + 1, guard_limit):
        if abs(float(total[i])) > GUARD_TOL * scale:
            raise SeriesTruncationError(
                f"guard coefficient t^{i} = {float(total[i]):.3e} "
                f"exceeds {GUARD_TOL:.1e} x scale {scale:.3e}")
    return RealPoly.from_seq(total[: s.r + 1])


def _4f3_terminating(n_top: int, a2, a3, a4, b1, b2, b3):
    """4F3(-n_top, a2, a3, a4; b1, b2, b3; 1), a finite sum of n_top+1 terms."""
    term = 1.0
    acc = 1.0
    for i in range(n_top):
        den = (b1 + i) * (b2 + i) * (b3 + i) * (i + 1)
        if den == 0:
            raise DegenerateParams("4F3 lower-parameter pole")
        term = term * ((-n_top + i) * (a2 + i) * (a3 + i) * (a4 + i)) / den
        acc += term
    return acc


def compute_Pr_closed(p: Params, s: Shifts) -> RealPoly:
    """P_r by the explicit double sum over terminating 4F3(1) values.

    Cross-check path for compute_Pr_taylor; same normalization.
    """
    if s.r < 0:
        return ZERO_POLY
    a, b, c = p.as_floats()
    al, be, ga = _default_substitution(a, b, c)
    n1, n2, m = s.n1, s.n2, s.m
    n_bar = s.n_max

    def k_coefficient(j: int) -> float:
        acc = 0.0
        try:
            if j + n1 >= 0:
                den = pochhammer(1 - ga, n2 + j + 1)
                if den == 0:
                    raise DegenerateParams("(1-gamma) Pochhammer vanishes")
                pref = (pochhammer(1 - al, j) * pochhammer(1 - be, m + j)
                        / (den * math.factorial(j + n1)))
                f = _4f3_terminating(j + n1, al, be, ga - 1 - n2 - j,
                                     al - j, be - m - j, ga)
                acc += pref * f
            if j + n2 >= 0:
                den = pochhammer(ga - 1, n1 + j + 1)
                if den == 0:
                    raise DegenerateParams("(gamma-1) Pochhammer vanishes")
                pref = (pochhammer(ga - al, j) * pochhammer(ga - be, m + j)
                        / (den * math.factorial(j + n2)))
                f = _4f3_terminating(j + n2, 1 - ga + al, 1 - ga + be,
                                     1 - ga - n1 - j,
                                     1 - ga + al - j, 1 - ga + be - m - j, 2 - ga)
                acc += pref * f
        except (PoleError, ZeroDivisionError) as exc:
            raise DegenerateParams(f"Pochhammer pole in closed form: {exc}") from exc
        return acc

    coeffs = []
    sign_nbar = (-1.0) ** n_bar
    for k in range(s.r + 1):
        j_lo = max(k - s.p, 0) - n_bar
        j_hi = k - n_bar
        inner = 0.0
        for j in range(j_lo, j_hi + 1):
            inner += (-1.0) ** j * math.comb(s.p, k - n_bar - j) * k_coefficient(j)
        coeffs.append(sign_nbar * (-1.0) ** k * inner)
    return RealPoly.from_seq(coeffs)


def pr_polynomial(p: Params, s: Shifts) -> RealPoly:
    """P_r with a symmetric parameter-perturbation fallback at the removable
    integer degeneracies of the identity (e.g. a - b integer)."""
    if s.r < 0:
        return ZERO_POLY
    try:
        return compute_Pr_taylor(p, s)
    except DegenerateParams:
        pass
    h = 3e-6
    acc = None
    for sgn in (+1.0, -1.0):
        q = Params(float(p.a) + sgn * h, float(p.b), float(p.c) + sgn * 0.61803 * h)
        poly = compute_Pr_taylor(q, s)
        vals = list(poly.coeffs) + [0.0] * (s.r + 1 - len(poly.coeffs))
        acc = vals if acc is None else [x + y for x, y in zip(acc, vals)]
    return RealPoly.from_seq([x / 2.0 for x in acc])


def boundary_density(p: Params, s: Shifts) -> BoundaryDensity:
    return BoundaryDensity(params=p, shifts=s, B=compute_B(p, s),
                           P_r=pr_polynomial(p, s))


def boundary_im(p: Params, s: Shifts, x: float, bank: str = "upper",
                tol: float = 1e-10) -> float:
    """Im[R_{n1,n2,m}(x +- i0)] for x > 1 via the closed density formula."""
    if x <= 1.0:
        raise ValueError("boundary_im requires x > 1")
    if bank not in ("upper", "lower"):
        raise ValueError("bank must be 'upper' or 'lower'")
    a, b, c = p.as_floats()
    dens = boundary_density(p, s)
    denom = abs2_on_cut(p, x, tol)
    if not (denom > _DENOM_FLOOR):
        raise DenominatorZero(f"|2F1(a,b;c;{x})|^2 = {denom}")
    sign = 1.0 if bank == "upper" else -1.0
    power = x ** (s.l - s.n_min - c) * (x - 1.0) ** (c - a - b - s.l)
    return sign * math.pi * dens.B * power * dens.P_r(1.0 / x) / denom


def ratio_series(p: Params, s: Shifts, count: int) -> list:
    """Taylor coefficients of R at 0 by formal division of the two series."""
    num_params = p.shifted(s.n1, s.n2, s.m)  # validates c+m
    u = hyp_series(num_params.a, num_params.b, num_params.c, count)
    v = hyp_series(p.a, p.b, p.c, count)
    return series_div(u, v, count)


def ratio_taylor(p: Params, s: Shifts, count: int) -> list:
    if count < 1:
        raise ValueError("count must be >= 1")
    return ratio_series(p, s, count)


def ratio_first_coeff_closed(p: Params, s: Shifts):
    """Closed form of R'(0): ((a n2 + b n1 + n1 n2) c - a b m) / (c (c+m))."""
    a, b, c = p.a, p.b, p.c
    return ((a * s.n2 + b * s.n1 + s.n1 * s.n2) * c - a * b * s.m) / (c * (c + s.m))


def ratio_at_one(p: Params, s: Shifts) -> float:
    """R(1) = (c)_m (c-a-b)_{m-n1-n2} / ((c-a)_{m-n1} (c-b)_{m-n2})."""
    a, b, c = p.as_floats()
    num = pochhammer(c, s.m) * pochhammer(c - a - b, s.m - s.n1 - s.n2)
    den = pochhammer(c - a, s.m - s.n1) * pochhammer(c - b, s.m - s.n2)
    if den == 0:
        raise PoleError("ratio_at_one denominator Pochhammer vanishes")
    return num / den


def ratio_value(p: Params, s: Shifts, z: complex, tol: float = 1e-13) -> complex:
    """R(z) = 2F1(a+n1, b+n2; c+m; z) / 2F1(a, b; c; z) for z off [1, oo)."""
    den = hyp2f1(p, z, tol)
    if abs(den) < _DENOM_FLOOR:
        raise DenominatorZero(f"denominator 2F1 vanishes at z={z}")
    num = hyp2f1(p.shifted(s.n1, s.n2, s.m), z, tol)
    return num / den


# ---------------------------------------------------------------------------
# Contiguous ladder: p(z) F(a+n1,b+n2;c+m;z) = q(z) F(a,b+1;c+1;z) + r(z) F(a,b;c;z)

def _ladder_step(state, which: str, params, ode):
    """One unit shift applied to G = u F + v F' (F the unshifted function)."""
    u, v = state
    a_cur, b_cur, c_cur = params
    q0, q1 = ode

    def deriv(u_, v_):
        return u_.deriv() + v_ * q0, u_ + v_.deriv() + v_ * q1

    du, dv = deriv(u, v)
    z = RatFn([Fraction(0), Fraction(1)])
    one = RatFn.const(1)
    if which == "a+":
        if a_cur == 0:
            raise LadderDegeneracy("a-raising relation degenerates at a = 0")
        k = RatFn.const(a_cur)
        return ((k * u + z * du) / k, (k * v + z * dv) / k), (a_cur + 1, b_cur, c_cur)
    if which == "b+":
        if b_cur == 0:
            raise LadderDegeneracy("b-raising relation degenerates at b = 0")
        k = RatFn.const(b_cur)
        return ((k * u + z * du) / k, (k * v + z * dv) / k), (a_cur, b_cur + 1, c_cur)
    if which == "c-":
        if c_cur == 1:
            raise LadderDegeneracy("c-lowering relation degenerates at c = 1")
        k = RatFn.const(c_cur - 1)
        return ((k * u + z * du) / k, (k * v + z * dv) / k), (a_cur, b_cur, c_cur - 1)
    if which == "a-":
        if c_cur == a_cur:
            raise LadderDegeneracy("a-lowering relation degenerates at c = a")
        k = RatFn.const(c_cur - a_cur)
        lin = RatFn([Fraction(c_cur - a_cur), Fraction(-b_cur)])
        zz = z * (one - z)
        return ((lin * u + zz * du) / k, (lin * v + zz * dv) / k), (a_cur - 1, b_cur, c_cur)
    if which == "b-":
        if c_cur == b_cur:
            raise LadderDegeneracy("b-lowering relation degenerates at c = b")
        k = RatFn.const(c_cur - b_cur)
        lin = RatFn([Fraction(c_cur - b_cur), Fraction(-a_cur)])
        zz = z * (one - z)
        return ((lin * u + zz * du) / k, (lin * v + zz * dv) / k), (a_cur, b_cur - 1, c_cur)
    if which == "c+":
        den = (c_cur - a_cur) * (c_cur - b_cur)
        if den == 0:
            raise LadderDegeneracy("c-raising relation degenerates at c = a or c = b")
        k = RatFn.const(den)
        lin = RatFn.const(c_cur * (c_cur - a_cur - b_cur))
        cz = RatFn.const(c_cur) * (one - z)
        return ((lin * u + cz * du) / k, (lin * v + cz * dv) / k), (a_cur, b_cur, c_cur + 1)
    raise ValueError(which)


def _walk(state, params, ode, which: str, steps: int):
    move = which + ("+" if steps > 0 else "-")
    for _ in range(abs(steps)):
        state, params = _ladder_step(state, move, params, ode)
    return state, params


def contiguous_ladder(p: Params, s: Shifts) -> tuple[RealPoly, RealPoly, RealPoly]:
    """Coprime polynomials (p, q, r) with
    p(z) F(a+n1,b+n2;c+m;z) = q(z) F(a,b+1;c+1;z) + r(z) F(a,b;c;z),
    built by composing unit contiguous shifts (c first, then a, then b).

    The computation is exact over rationals of the parameter values; float
    inputs are lifted to their exact binary rationals first.
    """
    a = Fraction(p.a)
    b = Fraction(p.b)
    c = Fraction(p.c)
    # F'' = q0 F + q1 F' from the hypergeometric ODE of the base function
    zden = [Fraction(0), Fraction(1), Fraction(-1)]  # z(1-z)
    q0 = RatFn([a * b], zden)
    q1 = RatFn([-c, a + b + 1], zden)
    ode = (q0, q1)

    one = RatFn.const(1)
    zero = RatFn.const(0)

    def walk_all(steps: dict, orders) -> tuple:
        # any step order yields the same function; retry on degenerate paths
        first_err = None
        for order in orders:
            state, params = (one, zero), (a, b, c)
            try:
                for axis in order:
                    state, params = _walk(state, params, ode, axis, steps[axis])
                return state
            except LadderDegeneracy as exc:
                first_err = first_err or exc
        raise first_err

    u, v = walk_all({"c": s.m, "a": s.n1, "b": s.n2},
                    orders=("cab", "cba", "abc", "bac", "acb", "bca"))
    # basis anchor F(a, b+1; c+1) = e F + f F'
    e, f = walk_all({"c": 1, "a": 0, "b": 1}, orders=("bca", "cab"))
    if f.is_zero():
        raise LadderDegeneracy("basis anchor has no derivative component")

    beta = v / f
    alpha = u - beta * e
    # clear denominators: p * G = q * F011 + r * F
    den = pmul(alpha.den, beta.den)
    qpoly = pmul(beta.num, alpha.den)
    rpoly = pmul(alpha.num, beta.den)
    g = pgcd(pgcd(den, qpoly), rpoly) if (qpoly or rpoly) else [Fraction(1)]
    if len(g) > 1:
        den, _ = pdivmod(den, g)
        if qpoly:
            qpoly, _ = pdivmod(qpoly, g)
        if rpoly:
            rpoly, _ = pdivmod(rpoly, g)
    lead = den[-1]
    den = [x / lead for x in den]
    qpoly = [x / lead for x in qpoly]
    rpoly = [x / lead for x in rpoly]
    return (RealPoly.from_seq(den), RealPoly.from_seq(qpoly), RealPoly.from_seq(rpoly))
