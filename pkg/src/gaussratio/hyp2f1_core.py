"""Gauss hypergeometric function over the cut plane and on the branch cut.

Evaluates 2F1(a, b; c; z) for real parameters and complex argument
z outside [1, oo) by a transformation ladder (direct series, Pfaff map,
connection formulas at z=1 and z=oo, including the logarithmic series for
the integer-degenerate cases), plus the one-sided limits 2F1(a,b;c;x +- i0)
on the banks of the branch cut x > 1 and |2F1|^2 there.

All series use IEEE doubles with compensated summation.  Doubly degenerate
parameter corners (a-b and c-a both integers in the |z|>1 regime) and the
hexagonal corner region |z| ~ |1-z| ~ 1 are delegated to mpmath.
"""
from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational

from scipy.special import digamma as _scipy_digamma

from .errors import (
    DegenerateExtrapolation,
    NonConvergence,
    ParameterPole,
    PoleError,
)

INT_TOL = 1e-9
MAX_TERMS = 4000

# Transformation-region boundaries (mapped-modulus thresholds).
_DIRECT_RADIUS = 0.5
_PFAFF_RADIUS = 0.75
_CONN1_RADIUS = 0.75
_CORNER_RADIUS = 0.85

# delta-ladder for boundary values when a-b is an integer
_DELTA_LADDER = tuple(10.0 ** (-3 - k) for k in range(6))


def nearest_int(x: float) -> int:
    return int(math.floor(x + 0.5))


def is_int(x, tol: float = INT_TOL) -> bool:
    if isinstance(x, Rational):
        return Fraction(x).denominator == 1
    return abs(x - nearest_int(float(x))) <= tol


def is_nonpos_int(x, tol: float = INT_TOL) -> bool:
    return is_int(x, tol) and round(float(x)) <= 0


def is_nonneg_int(x, tol: float = INT_TOL) -> bool:
    return is_int(x, tol) and round(float(x)) >= 0


@dataclass(frozen=True)
class Params:
    """Real parameter triple (a, b, c) of 2F1.

    Fields may also be `fractions.Fraction` for the exact-arithmetic code
    paths; c must not be zero or a negative integer.
    """

    a: float
    b: float
    c: float

    def __post_init__(self):
        if is_nonpos_int(self.c):
            raise ParameterPole(f"c = {self.c} is a non-positive integer")

    def as_floats(self) -> tuple[float, float, float]:
        return float(self.a), float(self.b), float(self.c)

    def shifted(self, n1: int, n2: int, m: int) -> "Params":
        return Params(self.a + n1, self.b + n2, self.c + m)


@dataclass(frozen=True)
class GammaSign:
    """Gamma function split as sign * exp(log_abs); sign in {-1, +1}."""

    log_abs: float
    sign: int

    def value(self) -> float:
        return self.sign * math.exp(self.log_abs)

    def __mul__(self, other: "GammaSign") -> "GammaSign":
        return GammaSign(self.log_abs + other.log_abs, self.sign * other.sign)

    def __truediv__(self, other: "GammaSign") -> "GammaSign":
        return GammaSign(self.log_abs - other.log_abs, self.sign * other.sign)


def gamma_sign(x) -> GammaSign:
    """Gamma(x) as a GammaSign; raises PoleError at non-positive integers."""
    x = float(x)
    if is_nonpos_int(x):
        raise PoleError(f"Gamma pole at {x}")
    if x > 0:
        sign = 1
    else:
        # Gamma alternates sign on (-k-1, -k): negative on (-1,0), positive on (-2,-1), ...
        k = int(math.floor(-x))
        sign = -1 if k % 2 == 0 else 1
    return GammaSign(math.lgamma(x), sign)


def recip_gamma(x) -> float:
    """1/Gamma(x); zero at the poles of Gamma."""
    x = float(x)
    if is_nonpos_int(x):
        return 0.0
    g = gamma_sign(x)
    return g.sign * math.exp(-g.log_abs)


def digamma(x) -> float:
    if is_nonpos_int(x):
        raise PoleError(f"digamma pole at {x}")
    return float(_scipy_digamma(float(x)))


def pochhammer(z, r: int):
    """Pochhammer symbol (z)_r = Gamma(z+r)/Gamma(z) for integer r.

    Implemented as a finite product, which extends the Gamma ratio to its
    removable points; (z)_0 = 1.  For negative r the reflection
    (z)_{-k} = 1/((z-1)...(z-k)) is used and a vanishing factor raises
    PoleError (a true pole of the ratio).
    """
    if r == 0:
        return z ** 0  # 1 in the arithmetic of z
    if r > 0:
        out = z ** 0
        for i in range(r):
            out = out * (z + i)
        return out
    den = z ** 0
    for i in range(1, -r + 1):
        f = z - i
        if f == 0:
            raise PoleError(f"Pochhammer pole: ({z})_{r}")
        den = den * f
    return 1 / den


def _kahan_add(total, comp, term):
    y = term - comp
    t = total + y
    comp = (t - total) - y
    return t, comp


def _series_2f1(a: float, b: float, c: float, z: complex, tol: float,
                max_terms: int = MAX_TERMS) -> complex:
    """Direct power series with compensated summation."""
    term = 1.0 + 0.0j
    total = term
    comp = 0.0 + 0.0j
    small = 0
    for n in range(max_terms):
        term = term * ((a + n) * (b + n) / ((c + n) * (n + 1.0))) * z
        total, comp = _kahan_add(total, comp, term)
        if abs(term) <= tol * max(abs(total), 1e-290):
            small += 1
            if small >= 3:
                return total
        else:
            small = 0
    raise NonConvergence(
        f"2F1 series did not converge: a={a}, b={b}, c={c}, z={z}")


def _series_terminating(a: float, b: float, c: float, z: complex) -> complex:
    """Finite sum when a or b is a non-positive integer (valid for all z)."""
    stops = [int(round(-x)) for x in (a, b) if is_nonpos_int(x)]
    n_terms = min(stops)
    term = 1.0 + 0.0j
    total = term
    comp = 0.0 + 0.0j
    for n in range(n_terms):
        term = term * ((a + n) * (b + n) / ((c + n) * (n + 1.0))) * z
        total, comp = _kahan_add(total, comp, term)
    return total


def _mpmath_2f1(a: float, b: float, c: float, z: complex) -> complex:
    import mpmath as mp

    with mp.workdps(30):
        v = mp.hyp2f1(a, b, c, mp.mpc(z))
    return complex(v)


def _conn_one(a: float, b: float, c: float, w: complex, tol: float) -> complex:
    """Connection at z=1 in powers of w = 1-z, including the log cases."""
    eta = c - a - b
    if not is_int(eta):
        g1 = (gamma_sign(c) * gamma_sign(eta)) / (gamma_sign(c - a) * gamma_sign(c - b))
        g2 = (gamma_sign(c) * gamma_sign(-eta)) / (gamma_sign(a) * gamma_sign(b))
        t1 = g1.value() * _series_2f1(a, b, 1.0 - eta, w, tol)
        t2 = g2.value() * w ** eta * _series_2f1(c - a, c - b, 1.0 + eta, w, tol)
        return t1 + t2
    s = nearest_int(eta)
    if s >= 0:
        return _conn_one_log_pos(a, b, c, s, w, tol)
    return _conn_one_log_neg(a, b, c, -s, w, tol)


def _conn_one_log_pos(a: float, b: float, c: float, s: int, w: complex,
                      tol: float) -> complex:
    # c - a - b = s in N_0; a, b not non-positive integers (handled earlier)
    total = 0.0 + 0.0j
    if s >= 1:
        g = (gamma_sign(c) * gamma_sign(float(s))) / (gamma_sign(c - a) * gamma_sign(c - b))
        pref = g.value()
        term = 1.0 + 0.0j
        acc = term
        for n in range(1, s):
            term = term * ((a + n - 1) * (b + n - 1) / ((1.0 - s + n - 1) * n)) * w
            acc += term
        total += pref * acc
    sign = (-1.0) ** s
    g2 = gamma_sign(c) / (gamma_sign(a) * gamma_sign(b))
    pref2 = sign * g2.value() / math.factorial(s)
    # sum_{n>=0} (c-a)_n (c-b)_n / ((1+s)_n n!) * H_n * w^n, H_n as in the
    # logarithmic connection series
    coeff = 1.0
    acc_h = 0.0 + 0.0j
    comp = 0.0 + 0.0j
    logw = cmath.log(w)
    f_log = _series_2f1(c - a, c - b, 1.0 + s, w, tol)
    small = 0
    for n in range(MAX_TERMS):
        h_n = (digamma(n + 1.0) + digamma(n + s + 1.0)
               - digamma(a + n + s) - digamma(b + n + s))
        term = coeff * h_n * w ** n
        acc_h, comp = _kahan_add(acc_h, comp, term)
        scale = max(abs(acc_h), abs(f_log * logw), 1.0)
        if abs(term) <= tol * scale:
            small += 1
            if small >= 3:
                break
        else:
            small = 0
        coeff = coeff * ((c - a + n) * (c - b + n) / ((1.0 + s + n) * (n + 1.0)))
    else:
        raise NonConvergence("logarithmic connection series at z=1 (eta >= 0)")
    total += pref2 * w ** s * (acc_h - logw * f_log)
    return total


def _conn_one_log_neg(a: float, b: float, c: float, s: int, w: complex,
                      tol: float) -> complex:
    # c - a - b = -s with s in N
    eta = float(-s)
    g1 = (gamma_sign(c) * gamma_sign(a + b - c)) / (gamma_sign(a) * gamma_sign(b))
    term = 1.0 + 0.0j
    acc = term
    for n in range(1, s):
        term = term * ((c - a + n - 1) * (c - b + n - 1) / ((1.0 + eta + n - 1) * n)) * w
        acc += term
    total = g1.value() * w ** eta * acc
    sign = (-1.0) ** s
    g2 = gamma_sign(c) / (gamma_sign(c - a) * gamma_sign(c - b))
    pref2 = sign * g2.value() / math.factorial(s)
    coeff = 1.0
    acc_h = 0.0 + 0.0j
    comp = 0.0 + 0.0j
    logw = cmath.log(w)
    f_log = _series_2f1(a, b, 1.0 + s, w, tol)
    small = 0
    for n in range(MAX_TERMS):
        h_n = (digamma(n + 1.0) + digamma(n + s + 1.0)
               - digamma(a + n) - digamma(b + n))
        term = coeff * h_n * w ** n
        acc_h, comp = _kahan_add(acc_h, comp, term)
        scale = max(abs(acc_h), abs(f_log * logw), 1.0)
        if abs(term) <= tol * scale:
            small += 1
            if small >= 3:
                break
        else:
            small = 0
        coeff = coeff * ((a + n) * (b + n) / ((1.0 + s + n) * (n + 1.0)))
    else:
        raise NonConvergence("logarithmic connection series at z=1 (eta < 0)")
    total += pref2 * (acc_h - logw * f_log)
    return total


def _conn_inf(a: float, b: float, c: float, z: complex, tol: float) -> complex:
    """Connection at z=oo in powers of 1/z, including the log case."""
    if is_int(b - a):
        if a > b:
            a, b = b, a
        if is_int(c - a):
            # joint degeneracy: psi poles collide with coefficient zeros
            return _mpmath_2f1(a, b, c, z)
        return _conn_inf_log(a, b, c, nearest_int(b - a), z, tol)
    w = 1.0 / z
    neg_z = -z
    g1 = (gamma_sign(c) * gamma_sign(b - a)) / (gamma_sign(b) * gamma_sign(c - a))
    g2 = (gamma_sign(c) * gamma_sign(a - b)) / (gamma_sign(a) * gamma_sign(c - b))
    t1 = g1.value() * neg_z ** (-a) * _series_2f1(a, 1.0 - c + a, 1.0 - b + a, w, tol)
    t2 = g2.value() * neg_z ** (-b) * _series_2f1(b, 1.0 - c + b, 1.0 - a + b, w, tol)
    return t1 + t2


def _conn_inf_log(a: float, b: float, c: float, m: int, z: complex,
                  tol: float) -> complex:
    """DLMF 15.8.8-type expansion for b - a = m in N_0, c - a not integer."""
    w = 1.0 / z
    neg_z = -z
    logz = cmath.log(neg_z)
    total = 0.0 + 0.0j
    gc = gamma_sign(c)
    if m >= 1:
        pref = (gc / gamma_sign(a + m)).value() * neg_z ** (-a)
        acc = 0.0 + 0.0j
        poch_a = 1.0
        for k in range(m):
            coeff = poch_a * math.factorial(m - k - 1) / math.factorial(k)
            coeff *= recip_gamma(c - a - k)
            acc += coeff * w ** k
            poch_a *= (a + k)
        total += pref * acc
    pref2 = (gc / gamma_sign(a)).value() * neg_z ** (-a - m)
    acc2 = 0.0 + 0.0j
    comp = 0.0 + 0.0j
    coeff = (-1.0) ** m
    small = 0
    for k in range(MAX_TERMS):
        bracket = (logz + digamma(k + 1.0) + digamma(k + m + 1.0)
                   - digamma(a + k + m) - digamma(c - a - k - m))
        term = coeff * recip_gamma(c - a - m - k) / (
            math.factorial(k) * math.factorial(k + m)) * bracket * w ** k
        acc2, comp = _kahan_add(acc2, comp, term)
        if abs(term) <= tol * max(abs(acc2), 1e-290):
            small += 1
            if small >= 3:
                break
        else:
            small = 0
        coeff = -coeff * (a + m + k)
    else:
        raise NonConvergence("logarithmic connection series at z=oo")
    total += pref2 * acc2
    return total


def _on_real_cut(z: complex) -> bool:
    return z.imag == 0.0 and z.real >= 1.0


def hyp2f1(p: Params, z: complex, tol: float = 1e-13) -> complex:
    """2F1(a, b; c; z) for z in the cut plane C \\ [1, oo)."""
    a, b, c = p.as_floats()
    z = complex(z)
    if _on_real_cut(z):
        raise ValueError("z lies on [1, oo); use hyp2f1_on_cut")
    if tol <= 0:
        raise ValueError("tol must be positive")
    if z == 0:
        return 1.0 + 0.0j
    if is_nonpos_int(a) or is_nonpos_int(b):
        return _series_terminating(a, b, c, z)
    if is_nonpos_int(c - a) or is_nonpos_int(c - b):
        # Euler transform reduces to a polynomial times a power of 1-z
        eta = c - a - b
        return (1.0 - z) ** eta * _series_terminating(c - a, c - b, c, z)

    m_direct = abs(z)
    m_pfaff = abs(z / (z - 1.0))
    m_one = abs(1.0 - z)
    m_inf = abs(1.0 / z)
    candidates = []
    if m_direct <= _DIRECT_RADIUS:
        candidates.append((m_direct, "direct"))
    if m_pfaff <= _PFAFF_RADIUS:
        candidates.append((m_pfaff, "pfaff"))
    if m_one <= _CONN1_RADIUS:
        candidates.append((m_one, "one"))
    if candidates:
        _, route = min(candidates)
    elif m_inf <= _CORNER_RADIUS:
        route = "inf"
    else:
        # hexagonal corner region: no map shrinks the argument
        return _mpmath_2f1(a, b, c, z)

    if route == "direct":
        return _series_2f1(a, b, c, z, tol)
    if route == "pfaff":
        w = z / (z - 1.0)
        return (1.0 - z) ** (-a) * _series_2f1(a, c - b, c, w, tol)
    if route == "one":
        return _conn_one(a, b, c, 1.0 - z, tol)
    return _conn_inf(a, b, c, z, tol)


def _cut_poly_value(a: float, b: float, c: float, x: float) -> complex:
    return complex(_series_terminating(a, b, c, complex(x)).real, 0.0)


def _on_cut_nondegenerate(a: float, b: float, c: float, x: float, upper: bool,
                          tol: float, xm1: float | None = None) -> complex:
    w = 1.0 / x
    omw = (x - 1.0) / x if xm1 is None else xm1 / (1.0 + xm1)
    sgn = 1.0 if upper else -1.0
    g1 = (gamma_sign(c) * gamma_sign(b - a)) / (gamma_sign(b) * gamma_sign(c - a))
    g2 = (gamma_sign(c) * gamma_sign(a - b)) / (gamma_sign(a) * gamma_sign(c - b))
    f_a = _f_real_unit_arg(a, 1.0 - c + a, 1.0 - b + a, w, omw, tol)
    f_b = _f_real_unit_arg(b, 1.0 - c + b, 1.0 - a + b, w, omw, tol)
    t1 = g1.value() * x ** (-a) * cmath.exp(sgn * 1j * math.pi * a) * f_a
    t2 = g2.value() * x ** (-b) * cmath.exp(sgn * 1j * math.pi * b) * f_b
    return t1 + t2


def _f_real_unit_arg(a: float, b: float, c: float, w: float, omw: float,
                     tol: float) -> float:
    """2F1(a, b; c; w) for real w in (0, 1], with 1 - w = omw supplied so the
    connection at 1 stays accurate when w sits within rounding of 1."""
    if is_nonpos_int(a) or is_nonpos_int(b):
        return _series_terminating(a, b, c, complex(w)).real
    if is_nonpos_int(c - a) or is_nonpos_int(c - b):
        return omw ** (c - a - b) * _series_terminating(c - a, c - b, c, complex(w)).real
    if omw < 0.35:
        return _conn_one(a, b, c, complex(omw), tol).real
    if w <= _DIRECT_RADIUS:
        return _series_2f1(a, b, c, complex(w), tol).real
    return hyp2f1(Params(a, b, c), complex(w), tol).real


def _richardson_limit(values: list[complex], ratio: float, order: int) -> tuple[complex, float]:
    """Richardson extrapolation of f(delta_k) with delta_{k+1} = delta_k/ratio.

    Returns (limit, stagnation estimate from the last column's differences).
    """
    table = [list(values)]
    for j in range(1, order + 1):
        prev = table[-1]
        col = []
        fac = ratio ** j
        for k in range(1, len(prev)):
            col.append((fac * prev[k] - prev[k - 1]) / (fac - 1.0))
        table.append(col)
    last = table[-1]
    if len(last) >= 2:
        est = abs(last[-1] - last[-2])
    else:
        est = abs(table[0][-1] - table[0][0])
    return last[-1], est


def hyp2f1_on_cut(p: Params, x: float, bank: str = "upper",
                  tol: float = 1e-12) -> complex:
    """Boundary value 2F1(a, b; c; x +- i0) for x > 1.

    Uses the two-term 1/x expansion with e^{+-i pi a}, e^{+-i pi b} phase
    factors when a - b is not an integer; otherwise approaches the bank along
    x(1 +- i delta) with Richardson extrapolation in delta.
    """
    if x <= 1.0:
        raise ValueError("hyp2f1_on_cut requires x > 1")
    if bank not in ("upper", "lower"):
        raise ValueError("bank must be 'upper' or 'lower'")
    a, b, c = p.as_floats()
    upper = bank == "upper"
    if is_nonpos_int(a) or is_nonpos_int(b):
        return _cut_poly_value(a, b, c, x)
    if is_nonpos_int(c - a) or is_nonpos_int(c - b):
        eta = c - a - b
        phase = cmath.exp((-1j if upper else 1j) * math.pi * eta)
        mag = (x - 1.0) ** eta
        return mag * phase * _cut_poly_value(c - a, c - b, c, x)
    if not is_int(a - b):
        return _on_cut_nondegenerate(a, b, c, x, upper, tol)
    sgn = 1.0 if upper else -1.0
    # keep the ladder inside the delta-disc of analyticity around the bank
    scale = min(1.0, (x - 1.0) / (2.0 * x))
    vals = [hyp2f1(p, complex(x, sgn * x * d * scale), min(tol, 1e-13))
            for d in _DELTA_LADDER]
    limit, est = _richardson_limit(vals, ratio=10.0, order=2)
    if est > max(tol, 1e-11) * max(abs(limit), 1.0):
        raise DegenerateExtrapolation(
            f"delta-ladder stagnated at estimate {est:.3e} for x={x}")
    return limit


def abs2_on_cut(p: Params, x: float, tol: float = 1e-12,
                x_minus_1: float | None = None) -> float:
    """|2F1(a, b; c; x)|^2 on the branch cut x > 1 (equal on both banks).

    For a - b and c - a - b both non-integer this uses the explicit
    two-squares formula; degenerate cases square the boundary value.
    x_minus_1 may be supplied to evaluate stably when x sits within
    rounding distance of 1.
    """
    xm1 = x - 1.0 if x_minus_1 is None else x_minus_1
    if not xm1 > 0.0:
        raise ValueError("abs2_on_cut requires x > 1")
    a, b, c = p.as_floats()
    eta = c - a - b
    degenerate = (is_int(a - b) or is_int(eta)
                  or is_nonpos_int(a) or is_nonpos_int(b)
                  or is_nonpos_int(c - a) or is_nonpos_int(c - b))
    if degenerate:
        # the delta-ladder needs x - 1 resolvable in doubles; nodes closer to
        # 1 than that carry negligible quadrature weight, so clamping is safe
        x_eval = max(x, 1.0 + max(xm1, 1e-12))
        val = hyp2f1_on_cut(p, x_eval, "upper", tol)
        return abs(val) ** 2
    if xm1 > 1.0:
        # away from x=1 the two-term bank formula is stable (and avoids the
        # overflowing (x-1)^eta split of the two-squares form)
        return abs(_on_cut_nondegenerate(a, b, c, x, True, tol, xm1=xm1)) ** 2
    # G2 carries the jump across the cut, G1 the common real part.
    f_jump = hyp2f1(Params(c - a, c - b, eta + 1.0), complex(-xm1), tol).real
    g2 = xm1 ** eta * recip_gamma(eta + 1.0) * f_jump
    w = 1.0 / x
    omw = xm1 / (1.0 + xm1)
    f_a = _f_real_unit_arg(a, 1.0 - c + a, 1.0 - b + a, w, omw, tol)
    f_b = _f_real_unit_arg(b, 1.0 - c + b, 1.0 - a + b, w, omw, tol)
    ga = (gamma_sign(b - a) * gamma_sign(a)) / gamma_sign(c - a)
    gb = (gamma_sign(a - b) * gamma_sign(b)) / gamma_sign(c - b)
    g1 = (ga.value() * x ** (-a) * math.cos(math.pi * a) * f_a
          + gb.value() * x ** (-b) * math.cos(math.pi * b) * f_b) / math.pi
    gc = gamma_sign(c) / (gamma_sign(a) * gamma_sign(b))
    pref = (math.pi * gc.value()) ** 2
    return pref * (g1 * g1 + g2 * g2)
