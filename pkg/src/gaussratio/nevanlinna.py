"""Generalized Nevanlinna classification and zero-free-region checks.

Implements the five Runckel parameter regimes guaranteeing 2F1 is zero-free
off the cut, the sign-sequence index computation for the Gauss ratio and for
terminating/non-terminating C-fractions, the B*P_r sign criterion on (0,1),
and a brute-force Pick-matrix oracle counting negative eigenvalues.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

import numpy as np

from .cfrac_engine import CFrac
from .errors import (
    DegeneratePoints,
    MalformedFraction,
    ParameterPole,
    TailUndecided,
)
from .hyp2f1_core import Params, gamma_sign, is_nonpos_int, is_nonneg_int, is_int
from .shift_engine import RealPoly, Shifts, compute_B, pr_polynomial

_EIG_TOL = 1e-10


@dataclass(frozen=True)
class NevanlinnaClass:
    """Classification record: epsilon * f in N_kappa^lambda.

    For rational f, degree = deg f and z_degree = deg(z f); kappa <= degree
    and lam <= z_degree then hold.
    """

    epsilon: int
    kappa: int
    lam: int
    is_rational: bool
    degree: int = 0
    z_degree: int = 0


@dataclass(frozen=True)
class NotInSUnion:
    """Marker result: neither +f nor -f lies in any N_kappa^lambda.

    heuristic is True when only a finite numeric probe (no analytic tail
    certificate) supports the conclusion.
    """

    heuristic: bool
    detail: str = ""


class RunckelCondition(Enum):
    I = "I"
    II = "II"
    III = "III"
    IV = "IV"
    V = "V"
    NONE = "none"


@dataclass(frozen=True)
class RunckelReport:
    satisfied: bool
    which_condition: RunckelCondition
    details: str


def runckel_check(p: Params) -> RunckelReport:
    """Zero-free criteria for 2F1(a,b;c;.) in the cut plane; the first
    matching condition I..V is reported."""
    a, b, c = p.as_floats()
    lo, hi = min(a, b), max(a, b)
    if -1 < lo <= c <= hi <= 0:
        return RunckelReport(True, RunckelCondition.I,
                             f"-1 < {lo} <= c={c} <= {hi} <= 0")
    if -1 < lo <= 0 <= hi <= c:
        return RunckelReport(True, RunckelCondition.II,
                             f"-1 < {lo} <= 0 <= {hi} <= c={c}")
    if -1 < c <= lo <= 0 <= hi < c + 1:
        return RunckelReport(True, RunckelCondition.III,
                             f"-1 < c={c} <= {lo} <= 0 <= {hi} < c+1")
    if 0 <= lo <= c and 0 <= hi < c + 1:
        return RunckelReport(True, RunckelCondition.IV,
                             f"0 <= {lo} <= c={c}, {hi} < c+1")
    vals = (a, b, c, c - a, c - b)
    if all(v < 0 and not is_int(v) for v in vals):
        xi = sorted((a, b, c - a, c - b))
        floors = [math.floor(v) for v in xi]
        if floors[0] + 1 == floors[3] and floors[1] == floors[2]:
            return RunckelReport(True, RunckelCondition.V,
                                 f"sorted xi={xi}, floors={floors}")
    return RunckelReport(False, RunckelCondition.NONE, "no condition matched")


class BPSign(Enum):
    NONNEG = "nonneg"
    NONPOS = "nonpos"
    SIGN_CHANGING = "sign_changing"
    IDENTICALLY_ZERO = "identically_zero"


def bp_sign_on_unit_interval(p: Params, s: Shifts) -> BPSign:
    """Sign of B * P_r(t) on (0,1): root isolation of P_r via companion-matrix
    eigenvalues plus sign evaluation between consecutive real roots."""
    B = compute_B(p, s)
    poly = pr_polynomial(p, s)
    if poly.is_zero() or B == 0.0:
        return BPSign.IDENTICALLY_ZERO
    cuts = [0.0, 1.0]
    if poly.degree >= 1:
        roots = np.roots(poly.coeffs[::-1])
        for r in roots:
            if abs(r.imag) < 1e-9 and 1e-12 < r.real < 1.0 - 1e-12:
                cuts.append(float(r.real))
    cuts = sorted(set(cuts))
    signs = set()
    scale = max(abs(c) for c in poly.coeffs)
    for left, right in zip(cuts[:-1], cuts[1:]):
        mid = 0.5 * (left + right)
        v = B * poly(mid)
        if abs(v) > 1e-12 * abs(B) * scale:
            signs.add(1 if v > 0 else -1)
    if not signs:
        return BPSign.IDENTICALLY_ZERO
    if signs == {1}:
        return BPSign.NONNEG
    if signs == {-1}:
        return BPSign.NONPOS
    return BPSign.SIGN_CHANGING


def _sign_gamma_product(factors: list) -> int:
    sign = 1
    for kind, x in factors:
        if kind == "gamma":
            sign *= gamma_sign(x).sign
        else:
            if x == 0:
                raise ParameterPole(f"vanishing linear factor {x}")
            sign *= 1 if x > 0 else -1
    return sign


def classify_gauss_ratio(p: Params) -> NevanlinnaClass:
    """Nevanlinna indices of the Gauss ratio 2F1(a,b+1;c+1;z)/2F1(a,b;c;z).

    Non-rational branch: epsilon = theta_0 and (lam, kappa) count negative
    entries of the theta/eta sign sequences, which are eventually positive.
    Rational branches (s = 2 s1 or s = 2 s2 - 1): the epsilon_j Pochhammer
    sign sequences of the terminating fraction.
    """
    a, b, c = p.as_floats()

    s1 = min((round(-a) if is_nonneg_int(-a) else math.inf),
             (round(b - c) if is_nonneg_int(b - c) else math.inf))
    s2_cands = []
    if is_nonneg_int(-b) and round(-b) >= 1:
        s2_cands.append(round(-b))
    if is_nonneg_int(a - c) and round(a - c) >= 1:
        s2_cands.append(round(a - c))
    s2 = min(s2_cands) if s2_cands else math.inf

    if s1 is math.inf and s2 is math.inf:
        # non-rational: finitely many negative entries, tail all-positive
        j_star = int(max(0.0, -a, b - c, -b, a - c, (1 - c) / 2, -c / 2)) + 2
        lam = kappa = 0
        eps = 0
        for j in range(j_star + 1):
            theta = _sign_gamma_product([
                ("lin", c + 2 * j), ("gamma", a + j), ("gamma", c - b + j),
                ("gamma", b + j + 1), ("gamma", c - a + j + 1)])
            if j == 0:
                eps = theta
            if theta < 0:
                lam += 1
            if j >= 1:
                eta = _sign_gamma_product([
                    ("lin", c + 2 * j - 1), ("gamma", a + j), ("gamma", c - b + j),
                    ("gamma", b + j), ("gamma", c - a + j)])
                if eta < 0:
                    kappa += 1
        return NevanlinnaClass(epsilon=eps, kappa=kappa, lam=lam,
                               is_rational=False)

    s = int(min(2 * s1, 2 * s2 - 1))
    K = (s + 1) // 2
    Lam = (s + 2) // 2
    if s == 2 * s1:
        if s1 == 0:
            return NevanlinnaClass(epsilon=1, kappa=0, lam=0, is_rational=True,
                                   degree=K, z_degree=Lam)
        eps_seq = {}
        for j in range(int(s1)):
            for delta in (0, 1):
                val = (_poch_sign(a + j + delta, int(s1) - j - delta)
                       * _poch_sign(c - b + j + delta, int(s1) - j - delta)
                       * _poch_sign(b + j + 1, int(s1) - j)
                       * _poch_sign(c - a + j + 1, int(s1) - j)
                       * _lin_sign(c + 2 * j + delta) * _lin_sign(c + 2 * s1))
                eps_seq[2 * j + 1 + delta] = val
        lam = sum(1 for i in range(1, 2 * int(s1), 2) if eps_seq[i] < 0)
        kappa = sum(1 for i in range(2, 2 * int(s1) + 1, 2) if eps_seq[i] < 0)
        return NevanlinnaClass(epsilon=eps_seq[1], kappa=kappa, lam=lam,
                               is_rational=True, degree=K, z_degree=Lam)
    # s = 2 s2 - 1
    s2 = int(s2)
    eps_seq = {}
    for j in range(s2):
        for delta in (0, 1):
            if j + delta == 0:
                continue
            val = (_poch_sign(a + j, s2 - j) * _poch_sign(c - b + j, s2 - j)
                   * _poch_sign(b + j + delta, s2 - j - delta)
                   * _poch_sign(c - a + j + delta, s2 - j - delta)
                   * _lin_sign(c + 2 * j - 1 + delta) * _lin_sign(c + 2 * s2 - 1))
            eps_seq[2 * j + delta] = val
    if s2 == 1:
        eps = eps_seq[1]
        return NevanlinnaClass(epsilon=eps, kappa=0, lam=(1 - eps) // 2,
                               is_rational=True, degree=K, z_degree=Lam)
    lam = sum(1 for i in range(1, 2 * s2, 2) if eps_seq[i] < 0)
    kappa = sum(1 for i in range(2, 2 * s2 - 1, 2) if eps_seq[i] < 0)
    return NevanlinnaClass(epsilon=eps_seq[1], kappa=kappa, lam=lam,
                           is_rational=True, degree=K, z_degree=Lam)


def _poch_sign(z: float, r: int) -> int:
    val = 1.0
    for i in range(r):
        val *= z + i
    if val == 0:
        raise ParameterPole(f"vanishing Pochhammer ({z})_{r}")
    return 1 if val > 0 else -1


def _lin_sign(x: float) -> int:
    if x == 0:
        raise ParameterPole("vanishing linear factor")
    return 1 if x > 0 else -1


def classify_terminating_cfrac(f: CFrac) -> NevanlinnaClass:
    """Indices of a terminating C-fraction with nonzero coefficients
    alpha_0..alpha_k: epsilon_j = sign prod_{l=j..k} alpha_l, lam/kappa count
    negative epsilon_j at odd/even j, K = floor((k+1)/2), Lambda = floor((k+2)/2)."""
    if not f.terminating:
        raise MalformedFraction("fraction is not terminating")
    k = f.terminal_index - 1
    alphas = [float(f[i]) for i in range(k + 1)]
    if any(x == 0 for x in alphas):
        raise MalformedFraction("zero coefficient before the terminator")
    eps = [0] * (k + 1)
    running = 1
    for j in range(k, -1, -1):
        running *= 1 if alphas[j] > 0 else -1
        eps[j] = running
    lam = sum(1 for j in range(1, k + 1, 2) if eps[j] < 0)
    kappa = sum(1 for j in range(2, k + 1, 2) if eps[j] < 0)
    return NevanlinnaClass(epsilon=eps[0], kappa=kappa, lam=lam,
                           is_rational=True, degree=(k + 1) // 2,
                           z_degree=(k + 2) // 2)


def classify_nonterminating_cfrac(f: CFrac, m_bound: int = 64):
    """Indices of a non-terminating C-fraction with eventually positive
    coefficients; returns NotInSUnion when negative coefficients persist
    beyond every m <= m_bound (heuristic unless a tail certificate exists)."""
    if f.terminating:
        raise MalformedFraction("fraction terminates; use classify_terminating_cfrac")
    certified_from = f.tail_positive_from
    horizon = max(2 * m_bound + 64, (certified_from or 0) + 1)
    try:
        alphas = [float(f[i]) for i in range(horizon + 1)]
    except IndexError as exc:
        raise TailUndecided(f"coefficient prefix exhausted: {exc}") from exc
    if certified_from is not None:
        last_neg = max((i for i in range(min(certified_from, horizon + 1))
                        if alphas[i] < 0), default=0)
    else:
        last_neg = max((i for i in range(horizon + 1) if alphas[i] < 0), default=0)
        if last_neg > 2 * m_bound:
            return NotInSUnion(heuristic=True,
                               detail=f"negative coefficient at index {last_neg} "
                                      f"beyond probe bound {2 * m_bound}")
        if any(alphas[i] < 0 for i in range(2 * m_bound, horizon + 1)):
            return NotInSUnion(heuristic=True,
                               detail="negative coefficients persist to the probe horizon")
    m = (last_neg + 1) // 2
    if certified_from is None and m > m_bound:
        return NotInSUnion(heuristic=True,
                           detail=f"required m={m} exceeds bound {m_bound}")
    # epsilon_j = prod_{l=j..2m} sign(alpha_l)
    eps = [0] * (2 * m + 1)
    running = 1
    for j in range(2 * m, -1, -1):
        running *= 1 if alphas[j] > 0 else -1
        eps[j] = running
    lam = sum(1 for j in range(1, 2 * m, 2) if eps[j] < 0)
    kappa = sum(1 for j in range(2, 2 * m + 1, 2) if eps[j] < 0)
    epsilon = eps[0] if m > 0 else 1
    return NevanlinnaClass(epsilon=epsilon, kappa=kappa, lam=lam,
                           is_rational=False)


def pick_matrix(values: list[tuple[complex, complex]]) -> np.ndarray:
    """Hermitian Pick matrix H[k,j] = (f(z_k) - conj f(z_j))/(z_k - conj z_j)."""
    pts = [complex(z) for z, _ in values]
    fv = [complex(w) for _, w in values]
    n = len(pts)
    if n == 0:
        raise DegeneratePoints("empty point set")
    if any(z.imag <= 0 for z in pts):
        raise DegeneratePoints("points must lie strictly in the upper half-plane")
    for i in range(n):
        for j in range(i + 1, n):
            if abs(pts[i] - pts[j]) < 1e-14 * max(1.0, abs(pts[i])):
                raise DegeneratePoints(f"repeated points {pts[i]}, {pts[j]}")
    if any(not (math.isfinite(w.real) and math.isfinite(w.imag)) for w in fv):
        raise DegeneratePoints("function values must be finite")
    h = np.empty((n, n), dtype=complex)
    for k in range(n):
        for j in range(n):
            h[k, j] = (fv[k] - fv[j].conjugate()) / (pts[k] - pts[j].conjugate())
    return h


def pick_negative_count(values: list[tuple[complex, complex]]) -> int:
    """Number of eigenvalues of the Pick matrix below -tol * ||H||."""
    h = pick_matrix(values)
    eig = np.linalg.eigvalsh(h)
    scale = max(np.max(np.abs(eig)), 1e-300)
    return int(np.sum(eig < -_EIG_TOL * scale))
