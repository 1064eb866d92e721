"""Asymptotic classification of the shifted ratio at z = 1 and z = infinity.

At z = 1 the ratio behaves like M (1-z)^nu log(1-z)^eps; nu > -1 is the
integrability gate for the integral representation.  At infinity the
classification yields the leading exponent, log flags, and a concrete
(N, Q) pair with R(z) - Q(z) = o(z^N); the fifteen worked shift triples
carry tight tabulated Q's, everything else falls back to Q = 0 with
N = ceil((alpha-gamma)_+) + 1.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

from .errors import UnclassifiedAsymptotics
from .hyp2f1_core import Params, is_int, is_nonpos_int
from .shift_engine import RealPoly, Shifts


class DegenerateCase(Enum):
    NONE = "none"
    A_OR_B_NONPOS_INT_NUM = "a_or_b_nonpos_int_num"
    A_OR_B_NONPOS_INT_DEN = "a_or_b_nonpos_int_den"
    EULER_REDUCED_NUM = "euler_reduced_num"
    EULER_REDUCED_DEN = "euler_reduced_den"


@dataclass(frozen=True)
class AsymptoticAtOne:
    nu: float
    log_flag: int  # exponent of log(1-z) in {-1, 0, +1}
    degenerate_case: DegenerateCase
    integrable: bool  # nu > -1


@dataclass(frozen=True)
class AsymptoticAtInfinity:
    leading_exponent: float  # alpha - gamma
    has_log: bool
    A_ratio_defined: bool
    Q: RealPoly
    N: int


def _neg_part(x: float) -> float:
    return min(x, 0.0)


def classify_at_one(p: Params, s: Shifts) -> AsymptoticAtOne:
    """Exponent nu and log flag of R near z=1, with the degenerate-case
    modifications when numerator or denominator reduces to a polynomial
    (possibly times a power of 1-z)."""
    a, b, c = p.as_floats()
    eta = c - a - b
    q = s.m - s.n1 - s.n2
    a_num, b_num = a + s.n1, b + s.n2
    c_num = c + s.m

    case = DegenerateCase.NONE
    # numerator exponent/log of (1-z) at z -> 1
    if is_nonpos_int(a_num) or is_nonpos_int(b_num):
        num_exp, num_log = 0.0, 0
        case = DegenerateCase.A_OR_B_NONPOS_INT_NUM
    elif is_nonpos_int(c_num - a_num) or is_nonpos_int(c_num - b_num):
        num_exp, num_log = eta + q, 0
        case = DegenerateCase.EULER_REDUCED_NUM
    else:
        num_exp = _neg_part(eta + q)
        num_log = 1 if (is_int(eta + q) and round(eta + q) == 0) else 0

    if is_nonpos_int(a) or is_nonpos_int(b):
        den_exp, den_log = 0.0, 0
        if case is DegenerateCase.NONE:
            case = DegenerateCase.A_OR_B_NONPOS_INT_DEN
    elif is_nonpos_int(c - a) or is_nonpos_int(c - b):
        den_exp, den_log = eta, 0
        if case is DegenerateCase.NONE:
            case = DegenerateCase.EULER_REDUCED_DEN
    else:
        den_exp = _neg_part(eta)
        den_log = 1 if (is_int(eta) and round(eta) == 0) else 0

    nu = num_exp - den_exp
    log_flag = num_log - den_log
    return AsymptoticAtOne(nu=nu, log_flag=log_flag, degenerate_case=case,
                           integrable=nu > -1.0)


def _leading_at_infinity(x1: float, x2: float, x3: float):
    """(exponent, has_leading_log, reduced) of 2F1(x1,x2;x3;-z) as z -> oo.

    exponent gamma means F ~ const * z^gamma (times log z when flagged).
    """
    # A(x1,x2,x3) = 0 iff x1-x3 in N_0 or -x2 in N_0 (and symmetrically)
    if is_nonpos_int(x1) or is_nonpos_int(x2):
        # polynomial of degree min over terminating indices
        stops = [round(-x) for x in (x1, x2) if is_nonpos_int(x)]
        return float(min(stops)), False, True
    a_first_zero = is_nonpos_int(x3 - x1)   # x1 - x3 in N_0
    a_second_zero = is_nonpos_int(x3 - x2)
    if a_first_zero and a_second_zero:
        raise UnclassifiedAsymptotics(
            f"doubly Euler-reduced 2F1({x1},{x2};{x3}) at infinity")
    if a_first_zero:
        return -x2, False, True
    if a_second_zero:
        return -x1, False, True
    if is_int(x1 - x2):
        return -min(x1, x2), round(abs(x1 - x2)) == 0, False
    return -min(x1, x2), False, False


def _q_zero() -> RealPoly:
    return RealPoly(())


def _example12_beta(a, b, c):
    return (b - a) / (c - b)


def _example13_B(x, y, c):
    return (x - 1) / (y - c)


def _example13_A(x, y, c):
    return (x - 1) * (2 * y - c) / ((c - y) * (1 + y - x))


def _example14_B(a, b, c):
    return (b - a) * (b - a + 1) / (b * (a - c))


def _example14_C(a, b, c):
    return ((b - a) * (b - a + 1) * (c * (a + b - 1) - 2 * a * b)
            / (b * (c - a) * (a - b - 1) * (a - b + 1)))


def _example15_gamma(x, y, c):
    return (x - 2) * (x - 1) / ((c - y) * (c - y + 1))


def _example15_beta(x, y, c):
    return 2 * (x - 2) * (x - 1) * (c + 1 - 2 * y) / ((c - y) * (c - y + 1) * (y - x + 1))


def _example15_alpha(x, y, c):
    g = _example15_gamma(x, y, c)
    num = (c * (c + 1) * (x - 1) + 2 * y * y * (x + 4 * c - 3 * y)
           - 2 * x * y * (c + 2) - y * (3 * c * c - c - 6))
    return g * num / ((x - y - 2) * (x - y - 1) ** 2)


def _tabulated_nq(p: Params, s: Shifts):
    """Tight (N, Q) for the fifteen worked shift triples, or None."""
    a, b, c = p.as_floats()
    key = (s.n1, s.n2, s.m)
    const_tables = {
        (0, 1, 1): lambda: 0.0 if b <= a else c * (b - a) / (b * (c - a)),
        (0, 1, 0): lambda: 0.0 if b <= a else (b - a) / b,
        (1, 1, 1): lambda: 0.0,
        (1, 1, 2): lambda: 0.0,
        (0, 2, 2): lambda: 0.0 if b <= a else (c * (c + 1) * (b - a) * (b - a + 1)
                                               / (b * (b + 1) * (c - a) * (c - a + 1))),
        (0, 2, 0): lambda: 0.0 if b <= a else (b - a) * (b - a + 1) / (b * (b + 1)),
        (1, 1, 0): lambda: 0.0,
        (0, 0, 1): lambda: c / (c - b) if b <= a else c / (c - a),
        (0, 0, -1): lambda: (c - b - 1) / (c - 1) if b <= a else (c - a - 1) / (c - 1),
        (0, 0, 2): lambda: (c * (c + 1) / ((c - b) * (c - b + 1)) if b <= a
                            else c * (c + 1) / ((c - a) * (c - a + 1))),
        (0, 1, 2): lambda: 0.0 if b <= a else (c * (c + 1) * (b - a)
                                               / (b * (c - a) * (c - a + 1))),
    }
    if key in const_tables:
        return 0, RealPoly.from_seq([const_tables[key]()])
    if key == (0, -1, 0):
        A = _example12_beta(a, b, c)
        if abs(a - b) > 1:
            if a > b + 1:
                B = (b * (b + 1) - 2 * a * b + c * (a - 1)) / ((c - b) * (a - b - 1))
                return 0, RealPoly.from_seq([B, A])
            C = (b - 1) / (b - a - 1)
            return 0, RealPoly.from_seq([C])
        beta = A if b < a else 0.0
        return 1, RealPoly.from_seq([0.0, beta])
    if key == (-1, -1, 0):
        if abs(a - b) > 1:
            if a > b + 1:
                return 0, RealPoly.from_seq([_example13_A(a, b, c), _example13_B(a, b, c)])
            return 0, RealPoly.from_seq([_example13_A(b, a, c), _example13_B(b, a, c)])
        beta = _example13_B(a, b, c) if a >= b else _example13_B(b, a, c)
        return 1, RealPoly.from_seq([0.0, beta])
    if key == (-1, 1, 0):
        if abs(a - b) > 1:
            if a > b + 1:
                return 0, RealPoly.from_seq([0.0])
            return 0, RealPoly.from_seq([_example14_C(a, b, c), _example14_B(a, b, c)])
        beta = 0.0 if a >= b else _example14_B(a, b, c)
        return 1, RealPoly.from_seq([0.0, beta])
    if key == (-2, -2, 0):
        if abs(a - b) > 2:
            x, y = (a, b) if a > b + 2 else (b, a)
            return 0, RealPoly.from_seq([_example15_alpha(x, y, c),
                                         _example15_beta(x, y, c),
                                         _example15_gamma(x, y, c)])
        if abs(a - b) > 1:
            x, y = (a, b) if a > b + 1 else (b, a)
            return 1, RealPoly.from_seq([0.0, _example15_beta(x, y, c),
                                         _example15_gamma(x, y, c)])
        gamma = _example15_gamma(a, b, c) if a >= b else _example15_gamma(b, a, c)
        return 2, RealPoly.from_seq([0.0, 0.0, gamma])
    return None


def classify_at_infinity(p: Params, s: Shifts) -> AsymptoticAtInfinity:
    """Leading exponent alpha - gamma, log flags, and the (N, Q) pair used by
    the integral representation."""
    a, b, c = p.as_floats()
    num_exp, num_log, num_reduced = _leading_at_infinity(a + s.n1, b + s.n2, c + s.m)
    den_exp, den_log, den_reduced = _leading_at_infinity(a, b, c)
    lead = num_exp - den_exp
    has_log = num_log or den_log
    ratio_defined = not (num_log or den_log)

    tab = _tabulated_nq(p, s)
    if tab is not None:
        n_rep, q_poly = tab
    else:
        n_rep = max(0, math.ceil(lead)) + 1
        q_poly = _q_zero()
    return AsymptoticAtInfinity(leading_exponent=lead, has_log=bool(has_log),
                                A_ratio_defined=bool(ratio_defined),
                                Q=q_poly, N=n_rep)
