"""Regular C-fractions: Gauss coefficient generators, numerical evaluation,
Hankel determinants, series-to-fraction conversion, and J-fraction contraction.

Two arithmetic backends share one interface: exact rationals whenever all
inputs are rational (ints or Fractions), floating point otherwise.  The
Hankel path defaults to rationals because floating Hankel determinants are
exponentially ill-conditioned.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from numbers import Rational
from typing import Callable, Optional

from .errors import (
    IllConditioned,
    MalformedFraction,
    NoConvergence,
)
from .hyp2f1_core import Params, is_nonneg_int

_LENTZ_TINY = 1e-30
_FLOAT_DET_TOL = 1e-12


class CFrac:
    """Coefficients alpha_0, alpha_1, ... of a regular C-fraction
    alpha_0 / (1 - alpha_1 z / (1 - alpha_2 z / (1 - ...))).

    Either a finite terminating vector (last stored entry is the vanishing
    coefficient) or backed by a pure generator function.  Immutable after
    construction; generator values are memoised.
    """

    def __init__(self, coeffs=None, generator: Optional[Callable[[int], float]] = None,
                 terminating: bool = False, tail_positive_from: Optional[int] = None):
        if (coeffs is None) == (generator is None):
            raise MalformedFraction("exactly one of coeffs/generator required")
        if coeffs is not None:
            coeffs = tuple(coeffs)
            if terminating:
                if not coeffs or coeffs[-1] != 0:
                    raise MalformedFraction(
                        "terminating fraction must end with its vanishing coefficient")
                if any(x == 0 for x in coeffs[:-1]):
                    raise MalformedFraction(
                        "coefficients before the terminator must be nonzero")
        self._coeffs = coeffs
        self._gen = generator
        self._memo: dict[int, float] = {}
        self.terminating = terminating
        self.tail_positive_from = tail_positive_from

    @property
    def terminal_index(self) -> Optional[int]:
        """Index of the vanishing coefficient for terminating fractions."""
        if not self.terminating:
            return None
        return len(self._coeffs) - 1

    def __getitem__(self, i: int):
        if i < 0:
            raise IndexError(i)
        if self._coeffs is not None:
            if i < len(self._coeffs):
                return self._coeffs[i]
            if self.terminating:
                return 0 * self._coeffs[0]
            raise IndexError(f"coefficient {i} beyond stored prefix")
        if i not in self._memo:
            self._memo[i] = self._gen(i)
        return self._memo[i]

    def prefix(self, n: int) -> list:
        return [self[i] for i in range(n)]

    def is_rational_arithmetic(self) -> bool:
        probe = self[0]
        return isinstance(probe, Rational)


@dataclass(frozen=True)
class JFrac:
    """Contracted J-fraction data: evaluation reads
    -a_prods[0] / (z - b_sums[0] - a_prods[1] / (z - b_sums[1] - ...)).
    """

    a_prods: tuple
    b_sums: tuple

    def __post_init__(self):
        if len(self.a_prods) != len(self.b_sums):
            raise MalformedFraction("J-fraction vectors must have equal length")


def _gauss_terminal_011(a, b, c) -> Optional[int]:
    """Index of the first vanishing coefficient of the (0,1,1) fraction."""
    cands = []
    for x in (-a, b - c):
        if is_nonneg_int(x):
            cands.append(2 * round(float(x)) + 1)
    for x in (-b, a - c):
        if is_nonneg_int(x) and round(float(x)) >= 1:
            cands.append(2 * round(float(x)))
    return min(cands) if cands else None


def gauss_cfrac_011(p: Params) -> CFrac:
    """Gauss continued fraction of 2F1(a,b+1;c+1;z)/2F1(a,b;c;z):
    alpha_0 = 1, alpha_{2n+1} = (a+n)(c-b+n)/((c+2n)(c+2n+1)),
    alpha_{2n+2} = (b+n+1)(c-a+n+1)/((c+2n+1)(c+2n+2)).
    """
    a, b, c = p.a, p.b, p.c
    one = Fraction(1) if isinstance(a, Rational) and isinstance(b, Rational) \
        and isinstance(c, Rational) else 1.0

    def alpha(i: int):
        if i == 0:
            return one
        if i % 2 == 1:
            n = (i - 1) // 2
            return one * (a + n) * (c - b + n) / ((c + 2 * n) * (c + 2 * n + 1))
        n = (i - 2) // 2
        return one * (b + n + 1) * (c - a + n + 1) / ((c + 2 * n + 1) * (c + 2 * n + 2))

    term = _gauss_terminal_011(a, b, c)
    if term is not None:
        return CFrac(coeffs=[alpha(i) for i in range(term)] + [0 * one],
                     terminating=True,
                     tail_positive_from=None)
    return CFrac(generator=alpha, tail_positive_from=_tail_positive_index_011(a, b, c))


def _tail_positive_index_011(a, b, c) -> int:
    """Smallest index T with alpha_j > 0 for all j >= T (analytic certificate)."""
    a, b, c = float(a), float(b), float(c)
    n0 = max(-a, b - c, -b - 1, a - c - 1, (1 - c) / 2, -c / 2, 0.0)
    n_star = int(math.floor(n0)) + 1
    return 2 * n_star + 1


def _gauss_terminal_010(a, b, c) -> Optional[int]:
    cands = []
    if is_nonneg_int(-a):
        # alpha_1 = 0 at a = 0; alpha_{2k+1} = 0 at a = -k, k >= 1
        cands.append(2 * round(float(-a)) + 1)
    if is_nonneg_int(b - c):
        # c - b + k - 1 = 0 at k = b - c + 1 >= 1
        cands.append(2 * (round(float(b - c)) + 1) + 1)
    if is_nonneg_int(-b) and round(float(-b)) >= 1:
        cands.append(2 * round(float(-b)))
    if is_nonneg_int(1 - (c - a)) and round(float(1 - (c - a))) >= 1:
        cands.append(2 * round(float(1 - (c - a))))
    return min(cands) if cands else None


def gauss_cfrac_010(p: Params) -> CFrac:
    """C-fraction of 2F1(a,b+1;c;z)/2F1(a,b;c;z): alpha_1 = a/c and, for k >= 1,
    alpha_{2k} = (b+k)(c-a+k-1)/((c+2k-2)(c+2k-1)),
    alpha_{2k+1} = (a+k)(c-b+k-1)/((c+2k-1)(c+2k)).
    """
    a, b, c = p.a, p.b, p.c
    one = Fraction(1) if isinstance(a, Rational) and isinstance(b, Rational) \
        and isinstance(c, Rational) else 1.0

    def alpha(i: int):
        if i == 0:
            return one
        if i == 1:
            return one * a / c
        if i % 2 == 0:
            k = i // 2
            return one * (b + k) * (c - a + k - 1) / ((c + 2 * k - 2) * (c + 2 * k - 1))
        k = (i - 1) // 2
        return one * (a + k) * (c - b + k - 1) / ((c + 2 * k - 1) * (c + 2 * k))

    term = _gauss_terminal_010(a, b, c)
    if term is not None:
        return CFrac(coeffs=[alpha(i) for i in range(term)] + [0 * one],
                     terminating=True)
    af, bf, cf = float(a), float(b), float(c)
    n0 = max(-af, bf - cf + 1, -bf, cf - af - 1 + 2, (2 - cf) / 2, (1 - cf) / 2, 0.0)
    tail = 2 * (int(math.floor(n0)) + 1) + 1
    return CFrac(generator=alpha, tail_positive_from=tail)


def eval_cfrac(f: CFrac, z: complex, tol: float = 1e-12, max_depth: int = 20000,
               diagnostics: Optional[dict] = None) -> complex:
    """Value of the fraction at z.

    Terminating fractions are evaluated exactly by backward recurrence;
    otherwise the modified Lentz forward algorithm runs until two successive
    convergents agree to tol.
    """
    z = complex(z)
    if f.terminating:
        k = f.terminal_index
        acc = 0.0 + 0.0j
        for j in range(k - 1, 0, -1):
            den = 1.0 - acc
            if den == 0:
                den = _LENTZ_TINY
                if diagnostics is not None:
                    diagnostics.setdefault("warnings", []).append(
                        f"zero pivot at backward level {j}")
            acc = complex(f[j]) * z / den
        den = 1.0 - acc
        if den == 0:
            den = _LENTZ_TINY
        return complex(f[0]) / den

    # modified Lentz with b_j = 1, a_1 = alpha_0, a_{j+1} = -alpha_j z
    fv = _LENTZ_TINY
    c_val = fv
    d_val = 0.0 + 0.0j
    pivots = 0
    for j in range(1, max_depth + 1):
        a_j = complex(f[0]) if j == 1 else -complex(f[j - 1]) * z
        d_val = 1.0 + a_j * d_val
        if d_val == 0:
            d_val = _LENTZ_TINY
            pivots += 1
        c_val = 1.0 + a_j / c_val
        if c_val == 0:
            c_val = _LENTZ_TINY
            pivots += 1
        d_val = 1.0 / d_val
        delta = c_val * d_val
        fv *= delta
        if abs(delta - 1.0) < tol:
            if diagnostics is not None:
                diagnostics["depth"] = j
                if pivots:
                    diagnostics.setdefault("warnings", []).append(
                        f"{pivots} zero pivots replaced by tiny values")
            return fv
    raise NoConvergence(f"continued fraction did not converge in {max_depth} levels")


def _exact_entries(values) -> bool:
    return all(isinstance(v, Rational) for v in values)


def _det_exact(mat: list[list[Fraction]]) -> Fraction:
    """Fraction-exact determinant by Gaussian elimination with pivoting."""
    n = len(mat)
    m = [row[:] for row in mat]
    sign = 1
    det = Fraction(1)
    for k in range(n):
        piv = next((i for i in range(k, n) if m[i][k] != 0), None)
        if piv is None:
            return Fraction(0)
        if piv != k:
            m[k], m[piv] = m[piv], m[k]
            sign = -sign
        det *= m[k][k]
        inv = m[k][k]
        for i in range(k + 1, n):
            factor = m[i][k] / inv
            if factor == 0:
                continue
            for j in range(k, n):
                m[i][j] -= factor * m[k][j]
    return sign * det


def _det_bareiss_float(mat: list[list[float]]) -> float:
    """Fraction-free (Bareiss) elimination with partial pivoting, in floats."""
    n = len(mat)
    m = [[float(x) for x in row] for row in mat]
    sign = 1.0
    prev = 1.0
    for k in range(n - 1):
        piv = max(range(k, n), key=lambda i: abs(m[i][k]))
        if m[piv][k] == 0.0:
            return 0.0
        if piv != k:
            m[k], m[piv] = m[piv], m[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev
            m[i][k] = 0.0
        prev = m[k][k]
    return sign * m[n - 1][n - 1]


def hankel_dets(c: list, n: int, p: int) -> list:
    """Determinants D_k^{(p)} = det(c_{i+j+p})_{i,j<k} for k = 1..n.

    Exact rational arithmetic when all inputs are rational, fraction-free
    floating elimination otherwise.  Needs len(c) >= 2n - 2 + p.
    """
    if p not in (0, 1):
        raise ValueError("p must be 0 or 1")
    if len(c) < 2 * n - 2 + p + 1:
        raise ValueError(f"need at least {2 * n - 2 + p + 1} coefficients, got {len(c)}")
    exact = _exact_entries(c)
    out = []
    for k in range(1, n + 1):
        if exact:
            mat = [[Fraction(c[i + j + p]) for j in range(k)] for i in range(k)]
            out.append(_det_exact(mat))
        else:
            mat = [[float(c[i + j + p]) for j in range(k)] for i in range(k)]
            out.append(_det_bareiss_float(mat))
    return out


def series_to_cfrac(c: list, n: int) -> CFrac:
    """Recover alpha_0..alpha_n of the C-fraction corresponding to the series.

    alpha_{2k-1} = D0_{k-1} D1_k / (D0_k D1_{k-1}),
    alpha_{2k}   = D0_{k+1} D1_{k-1} / (D0_k D1_k); termination is detected
    from vanishing determinants (exactly in rational mode, thresholded in
    floating mode).
    """
    if n < 0:
        raise ValueError("n must be >= 0")
    if not c:
        raise ValueError("empty coefficient sequence")
    exact = _exact_entries(c)
    zero = Fraction(0) if exact else 0.0
    if c[0] == 0:
        return CFrac(coeffs=[zero], terminating=True)
    one = Fraction(1) if exact else 1.0
    k0 = min(n // 2 + 2, (len(c) + 1) // 2)
    k1 = min(n // 2 + 2, len(c) // 2)
    d0 = [one] + hankel_dets(c, k0, 0)
    d1 = [one] + (hankel_dets(c, k1, 1) if k1 else [])

    def is_zero(val, k):
        if exact:
            return val == 0
        scale = max(abs(float(x)) for x in c[: 2 * k + 2]) or 1.0
        return abs(float(val)) < _FLOAT_DET_TOL * scale ** k

    alphas = [c[0]]
    for i in range(1, n + 1):
        if i % 2 == 1:
            k = (i + 1) // 2
            if k >= len(d0) or k >= len(d1):
                raise ValueError(f"not enough series coefficients for alpha_{i}")
            num = d0[k - 1] * d1[k]
            den = d0[k] * d1[k - 1]
        else:
            k = i // 2
            if k + 1 >= len(d0) or k >= len(d1):
                raise ValueError(f"not enough series coefficients for alpha_{i}")
            num = d0[k + 1] * d1[k - 1]
            den = d0[k] * d1[k]
        if is_zero(num, k):
            alphas.append(zero)
            return CFrac(coeffs=alphas, terminating=True)
        if is_zero(den, k):
            if exact:
                raise IllConditioned(
                    "zero Hankel determinant mid-sequence: series has no regular C-fraction")
            raise IllConditioned(
                "floating Hankel determinants lost all significance; use rational inputs")
        alphas.append(num / den)
    return CFrac(coeffs=alphas, terminating=False)


def contract_to_jfrac(f: CFrac, count: int) -> JFrac:
    """Contraction to J-fraction data: b_sums = (alpha_1, alpha_2+alpha_3, ...),
    a_prods = (alpha_0, alpha_1 alpha_2, alpha_3 alpha_4, ...)."""
    if count < 1:
        raise ValueError("count must be >= 1")
    need = 2 * count - 1

    def get(i):
        if f.terminating and i > f.terminal_index:
            return 0 * f[0]
        return f[i]

    a_prods = [get(0)]
    b_sums = [get(1)]
    for j in range(1, count):
        a_prods.append(get(2 * j - 1) * get(2 * j))
        b_sums.append(get(2 * j) + get(2 * j + 1))
    return JFrac(a_prods=tuple(a_prods), b_sums=tuple(b_sums))


def eval_jfrac(j: JFrac, z: complex) -> complex:
    """-a_0/(z - b_0 - a_1/(z - b_1 - ...)) by backward recurrence."""
    z = complex(z)
    acc = 0.0 + 0.0j
    n = len(j.a_prods)
    for i in range(n - 1, 0, -1):
        den = z - complex(j.b_sums[i]) - acc
        if den == 0:
            den = _LENTZ_TINY
        acc = complex(j.a_prods[i]) / den
    den = z - complex(j.b_sums[0]) - acc
    if den == 0:
        den = _LENTZ_TINY
    return -complex(j.a_prods[0]) / den
