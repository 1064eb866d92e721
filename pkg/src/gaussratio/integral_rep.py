"""Integral representations of the shifted ratio and their verification.

Assembles R(z) = Q(z) + sum_{k<N} R^(k)(0)/k! z^k + z^N B I(z) with
I(z) = int_0^1 t^{a+b+n_min+N-1} (1-t)^{c-a-b-l} P_r(t)
       / (|2F1(a,b;c;1/t)|^2 (1-zt)) dt,
evaluates it by Gauss-Jacobi quadrature matched to the beta weight with a
tanh-sinh fallback, checks the z=0 / z=1 moment identities, and verifies the
fifteen worked shift triples against the direct series-ratio oracle.
"""
from __future__ import annotations

import cmath
import math
from dataclasses import dataclass, field
from functools import lru_cache

import numpy as np
from scipy.special import roots_jacobi

from .asymptotics import classify_at_infinity, classify_at_one
from .errors import (
    InapplicableParameters,
    NearCutPole,
    PreconditionFailed,
    QuadratureStall,
)
from .hyp2f1_core import Params, abs2_on_cut
from .nevanlinna import runckel_check
from .shift_engine import (
    BoundaryDensity,
    RealPoly,
    Shifts,
    boundary_density,
    ratio_at_one,
    ratio_taylor,
    ratio_value,
)
from .worked_examples import EXAMPLES, WorkedExample

_GJ_LADDER = (32, 64, 128, 256, 512)
_TS_MAX_LEVEL = 9
_TS_T_FLOOR = 1e-120
_NEAR_CUT_IM = 1e-3


@dataclass(frozen=True)
class QuadratureResult:
    value: complex
    abs_error_estimate: float
    nodes_used: int


@dataclass
class Representation:
    """Assembled integral representation for one (params, shifts) pair."""

    params: Params
    shifts: Shifts
    N: int
    Q: RealPoly
    taylor_head: tuple[float, ...]
    density: BoundaryDensity
    _core_cache: dict = field(default_factory=dict, repr=False)

    @property
    def beta_exponent(self) -> float:
        a, b, _ = self.params.as_floats()
        return a + b + self.shifts.n_min + self.N - 1.0

    @property
    def alpha_exponent(self) -> float:
        a, b, c = self.params.as_floats()
        return c - a - b - self.shifts.l

    def density_core(self, t: float, one_minus_t: float) -> float:
        """P_r(t) / |2F1(a,b;c;1/t)|^2, cached per node."""
        val = self._core_cache.get(t)
        if val is None:
            xm1 = one_minus_t / t
            try:
                denom = abs2_on_cut(self.params, 1.0 / t, 1e-10, x_minus_1=xm1)
            except OverflowError:
                denom = math.inf  # |2F1|^2 beyond float range: density is 0
            if not math.isfinite(denom) or denom == 0.0:
                val = 0.0
            else:
                val = self.density.P_r(t) / denom
                if not math.isfinite(val):
                    val = 0.0
            self._core_cache[t] = val
        return val


def build_representation(p: Params, s: Shifts, n_override: int | None = None) -> Representation:
    """Checked assembly: Runckel condition, nu > -1, (N, Q) from the
    classification at infinity, Taylor head, boundary density.

    n_override forces a larger representation order; Q keeps only its part
    of degree >= N (the dropped head is replaced by true Taylor data).
    """
    report = runckel_check(p)
    if not report.satisfied:
        raise PreconditionFailed("runckel", "no Runckel zero-free condition holds")
    at_one = classify_at_one(p, s)
    if not at_one.integrable:
        raise PreconditionFailed("nu > -1", f"nu = {at_one.nu} at z = 1")
    at_inf = classify_at_infinity(p, s)
    n_rep, q_poly = at_inf.N, at_inf.Q
    if n_override is not None:
        if n_override < n_rep:
            raise PreconditionFailed("N", f"N must be >= {n_rep}")
        q_poly = RealPoly.from_seq(
            [0.0] * n_override + list(q_poly.coeffs[n_override:]))
        n_rep = n_override
    head = tuple(float(x) for x in ratio_taylor(p, s, n_rep + 1)[:n_rep]) if n_rep \
        else ()
    rep = Representation(params=p, shifts=s, N=n_rep, Q=q_poly,
                         taylor_head=head, density=boundary_density(p, s))
    if not rep.alpha_exponent > -1.0:
        raise PreconditionFailed(
            "integrand exponent at t=1",
            f"c-a-b-l = {rep.alpha_exponent} <= -1")
    if not rep.beta_exponent > -1.0:
        raise PreconditionFailed(
            "integrand exponent at t=0",
            f"a+b+n_min+N-1 = {rep.beta_exponent} <= -1")
    return rep


@lru_cache(maxsize=64)
def _gj_nodes(n: int, alpha: float, beta: float):
    x, w = roots_jacobi(n, alpha, beta)
    t = 0.5 * (x + 1.0)
    return t, w


def _ts_nodes(level: int):
    """Tanh-sinh abscissas for step h = 2^-level: (u, t, 1-t, dt/du).

    Level k adds only the odd multiples of h (trapezoid refinement), except
    level 0 which holds the full coarse grid.
    """
    h = 2.0 ** (-level)
    out = []
    j = 0
    while True:
        u = j * h
        if level > 0 and j % 2 == 0:
            j += 1
            continue
        w = 0.5 * math.pi * math.sinh(u)
        for su, sw in (((u, w),) if j == 0 else ((u, w), (-u, -w))):
            ew = math.exp(-2.0 * sw)
            t = 1.0 / (1.0 + ew)
            omt = ew / (1.0 + ew)
            jac = 0.5 * math.pi * math.cosh(su) / (math.cosh(sw) ** 2 * 2.0)
            out.append((t, omt, jac * h))
        if u > 0 and (min(out[-1][0], out[-1][1]) < _TS_T_FLOOR or u > 6.5):
            break
        j += 1
        if j > 4096:
            break
    return out


def _integrand_factory(rep: Representation, d_beta: float, d_alpha: float,
                       z: complex | None):
    be = rep.beta_exponent + d_beta
    al = rep.alpha_exponent + d_alpha

    def full(t: float, omt: float) -> complex:
        core = rep.density_core(t, omt)
        if core == 0.0:
            return 0.0
        val = t ** be * omt ** al * core
        if z is not None:
            den = 1.0 - z * t
            if abs(den) < 1e-12:
                raise NearCutPole(f"kernel pole at node t={t}")
            val = val / den
        return val

    def smooth(t: float, omt: float) -> complex:
        # Gauss-Jacobi absorbs the beta weight; only the smooth rest here
        core = rep.density_core(t, omt)
        if z is not None:
            den = 1.0 - z * t
            if abs(den) < 1e-12:
                raise NearCutPole(f"kernel pole at node t={t}")
            return core / den
        return core

    return full, smooth, al, be


def _tanh_sinh(f, tol: float) -> tuple[complex, float, int]:
    total = None
    nodes = 0
    prev = None
    err = math.inf
    for level in range(_TS_MAX_LEVEL + 1):
        contrib = 0.0 + 0.0j
        for t, omt, w in _ts_nodes(level):
            contrib += w * f(t, omt)
            nodes += 1
        if level == 0:
            total = contrib
        else:
            # refinement: halving h keeps old nodes at half weight and adds
            # the odd multiples, whose weights already carry the new h
            total = 0.5 * total + contrib
        if prev is not None:
            err = abs(total - prev)
            if err <= tol * max(abs(total), 1e-300) and level >= 3:
                return total, err, nodes
        prev = total
    if err > math.sqrt(tol) * max(abs(total), 1e-300):
        raise QuadratureStall(
            f"tanh-sinh stalled at error {err:.3e} after level {_TS_MAX_LEVEL}")
    return total, err, nodes


def _weighted_integral(rep: Representation, z: complex | None, tol: float,
                       d_beta: float = 0.0, d_alpha: float = 0.0
                       ) -> tuple[complex, float, int]:
    """int_0^1 t^{be}(1-t)^{al} P_r(t)/(|2F1|^2 (1-zt)) dt by the Gauss-Jacobi
    ladder with node doubling, falling back to tanh-sinh."""
    full, smooth, al, be = _integrand_factory(rep, d_beta, d_alpha, z)
    if al > -1.0 and be > -1.0 and not (z is not None and _near_cut(z)):
        scale = 2.0 ** (-(al + be + 1.0))
        prev = None
        prev_err = None
        nodes_used = 0
        for n in _GJ_LADDER:
            t_nodes, weights = _gj_nodes(n, al, be)
            acc = 0.0 + 0.0j
            for t, w in zip(t_nodes, weights):
                acc += w * smooth(float(t), float(1.0 - t))
            val = scale * acc
            nodes_used += n
            if prev is not None:
                err = abs(val - prev)
                if err <= 0.5 * tol * max(abs(val), 1e-300):
                    return val, err, nodes_used
                if prev_err is not None and n >= 128 and err > 0.2 * prev_err:
                    break  # algebraic decay: the smooth-remainder premise fails
                prev_err = err
            prev = val
    if z is not None and _near_cut(z):
        return _near_cut_integral(rep, z, tol, d_beta, d_alpha)
    return _tanh_sinh(full, tol)


def _near_cut(z: complex) -> bool:
    if z == 0:
        return False
    w = 1.0 / z
    return abs(w.imag) < _NEAR_CUT_IM and 0.0 < w.real < 1.0


def _near_cut_integral(rep: Representation, z: complex, tol: float,
                       d_beta: float, d_alpha: float):
    """Cauchy kernel with its pole close to (0,1): subtract the kernel's
    closed-form integral against the density frozen at the pole location."""
    full, _, al, be = _integrand_factory(rep, d_beta, d_alpha, None)
    t0 = (1.0 / z).real
    rho0 = full(t0, 1.0 - t0)

    def subtracted(t: float, omt: float) -> complex:
        den = 1.0 - z * t
        if abs(den) < 1e-13:
            raise NearCutPole(f"kernel pole at node t={t}")
        return (full(t, omt) - rho0) / den

    val, err, nodes = _tanh_sinh(subtracted, tol)
    kernel_int = -cmath.log(1.0 - z) / z
    return val + rho0 * kernel_int, err, nodes


def eval_representation(rep: Representation, z: complex, tol: float = 1e-8
                        ) -> QuadratureResult:
    """Q(z) + Taylor head + z^N B I(z)."""
    z = complex(z)
    if z.imag == 0.0 and z.real >= 1.0:
        raise ValueError("z lies on [1, oo)")
    if tol <= 0:
        raise ValueError("tol must be positive")
    b_const = rep.density.B
    if b_const == 0.0 or rep.density.P_r.is_zero():
        head = sum(h * z ** k for k, h in enumerate(rep.taylor_head))
        return QuadratureResult(value=rep.Q(z) + head, abs_error_estimate=0.0,
                                nodes_used=0)
    pref = abs(b_const) * max(abs(z) ** rep.N, 1e-8)
    integral, err, nodes = _weighted_integral(rep, z, tol / max(pref, 1e-8))
    value = rep.Q(z) + sum(h * z ** k for k, h in enumerate(rep.taylor_head))
    value = value + z ** rep.N * b_const * integral
    return QuadratureResult(value=value,
                            abs_error_estimate=abs(b_const * z ** rep.N) * err,
                            nodes_used=nodes)


def moment_identity_check(rep: Representation, which: str = "z0"
                          ) -> tuple[float, float]:
    """Left and right sides of the z=0 / z=1 moment identities.

    z0:  int t^be (1-t)^al  P/|F|^2 = (R^(N)(0)/N! - Q_N)/B
    z1:  int t^be (1-t)^(al-1) P/|F|^2 = (R(1)-Q(1))/B - head_sum/B
    z01: int t^(be+1) (1-t)^(al-1) P/|F|^2 = (R(1)-Q(1)+Q_N)/B - head_sum_N/B
    """
    if which not in ("z0", "z1", "z01"):
        raise ValueError("which must be one of z0, z1, z01")
    b_const = rep.density.B
    if b_const == 0.0 or rep.density.P_r.is_zero():
        return 0.0, 0.0
    p, s, n_rep = rep.params, rep.shifts, rep.N
    if which in ("z1", "z01") and not rep.alpha_exponent > 0.0:
        raise PreconditionFailed("integrability at t=1",
                                 f"c-a-b-l = {rep.alpha_exponent} <= 0")
    taylor = [float(x) for x in ratio_taylor(p, s, n_rep + 1)]
    q_coeffs = list(rep.Q.coeffs) + [0.0] * (n_rep + 1 - len(rep.Q.coeffs))
    q_n = q_coeffs[n_rep]
    if which == "z0":
        lhs, _, _ = _weighted_integral(rep, None, 1e-10)
        rhs = (taylor[n_rep] - q_n) / b_const
    elif which == "z1":
        lhs, _, _ = _weighted_integral(rep, None, 1e-10, d_alpha=-1.0)
        rhs = (ratio_at_one(p, s) - rep.Q(1.0)) / b_const \
            - sum(taylor[:n_rep]) / b_const
    else:
        lhs, _, _ = _weighted_integral(rep, None, 1e-10, d_beta=1.0, d_alpha=-1.0)
        rhs = (ratio_at_one(p, s) - rep.Q(1.0) + q_n) / b_const \
            - sum(taylor[: n_rep + 1]) / b_const
    return float(lhs.real), float(rhs)


# ---------------------------------------------------------------------------
# Worked-example verification

@dataclass(frozen=True)
class ExampleReport:
    idx: int
    params: tuple[float, float, float]
    shifts: tuple[int, int, int]
    n_used: int
    z_grid: tuple[complex, ...]
    rel_errors: tuple[float, ...]
    max_rel_error: float
    bp_rel_error: float | None
    notes: tuple[str, ...]
    passed: bool


DEFAULT_Z_GRID = (-2.0, -0.5, 0.3, 0.5 + 0.2j, -5.0 + 1.0j, 0.1 - 0.6j)


def verify_example(idx: int, p: Params | None = None,
                   z_grid=None, tol: float = 1e-8,
                   n_override: int | None = None) -> ExampleReport:
    """Compare the example's integral representation against the direct
    series-ratio oracle on a z grid, and its B*P_r product against the
    tabulated closed form."""
    if idx not in EXAMPLES:
        raise KeyError(f"example index {idx} not in 1..15")
    ex: WorkedExample = EXAMPLES[idx]
    params = p if p is not None else Params(*ex.default_params)
    s = ex.shifts()
    z_grid = tuple(complex(z) for z in (z_grid or DEFAULT_Z_GRID))
    notes = list(ex.notes)

    try:
        rep = build_representation(params, s, n_override=n_override)
    except PreconditionFailed as exc:
        raise InapplicableParameters(exc.condition, str(exc)) from exc
    rel = []
    for z in z_grid:
        got = eval_representation(rep, z, tol).value
        want = ratio_value(params, s, z)
        rel.append(abs(got - want) / max(abs(want), 1e-300))
    bp_err = None
    if ex.bp_closed is not None:
        a, b, c = params.as_floats()
        want_coeffs = ex.bp_closed(a, b, c)
        got_coeffs = [rep.density.B * x for x in rep.density.P_r.coeffs]
        got_coeffs += [0.0] * (len(want_coeffs) - len(got_coeffs))
        scale = max(abs(w) for w in want_coeffs)
        bp_err = max(abs(g - w) for g, w in zip(got_coeffs, want_coeffs)) / scale
    passed = max(rel) < 1e-6 and (bp_err is None or bp_err < 1e-10)
    return ExampleReport(idx=idx, params=params.as_floats(),
                         shifts=(s.n1, s.n2, s.m), n_used=rep.N,
                         z_grid=z_grid, rel_errors=tuple(rel),
                         max_rel_error=max(rel), bp_rel_error=bp_err,
                         notes=tuple(notes), passed=passed)


def example12_identity(z: float) -> tuple[float, float]:
    """Both sides of z/log(1+z) = 1 + z * int_1^oo dx/((log^2(x-1)+pi^2)(x+z)).

    The integral is computed with the closed-form density via x = 1+e^s,
    splitting off the exact 1/(s^2+pi^2) tail; returns (lhs, rhs).
    """
    if z <= -1 or z == 0.0:
        raise ValueError("identity requires z > -1, z != 0")
    lhs = z / math.log1p(z)
    s_max = 45.0
    xg, wg = np.polynomial.legendre.leggauss(80)
    acc = 0.0
    panels = [-45.0, -20.0, -6.0, 0.0, 6.0, 20.0, s_max]
    for lo, hi in zip(panels[:-1], panels[1:]):
        mid, half = 0.5 * (lo + hi), 0.5 * (hi - lo)
        for xi, wi in zip(xg, wg):
            s = mid + half * xi
            es = math.exp(s)
            acc += wi * half * es / ((s * s + math.pi ** 2) * (1.0 + z + es))
    tail = (0.5 * math.pi - math.atan(s_max / math.pi)) / math.pi
    rhs = 1.0 + z * (acc + tail)
    return lhs, rhs
