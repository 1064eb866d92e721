"""Corpus of the fifteen worked shift triples.

Each entry carries the shift triple, one admissible parameter set used by
the acceptance suite (chosen to satisfy a Runckel condition, nu > -1, and to
avoid the integer-degenerate parameter families), and the closed form of the
product B * P_r as a coefficient list in ascending degree.

Two closed forms are normalized against the independent epsilon-offset
boundary oracle, which fixes the constants the displayed formulas must
carry; see the test suite for the cross-checks.
"""
from __future__ import annotations

from dataclasses import dataclass
from math import gamma as G
from typing import Callable, Optional

from .shift_engine import Shifts, derive_shifts


@dataclass(frozen=True)
class WorkedExample:
    idx: int
    n1: int
    n2: int
    m: int
    default_params: tuple[float, float, float]
    bp_closed: Optional[Callable[[float, float, float], list[float]]]
    notes: tuple[str, ...] = ()

    def shifts(self) -> Shifts:
        return derive_shifts(self.n1, self.n2, self.m)


def _bp1(a, b, c):  # (0,1,1)
    k = G(c) * G(c + 1) / (G(a) * G(b + 1) * G(c - a + 1) * G(c - b))
    return [k]


def _bp2(a, b, c):  # (0,1,0)
    k = G(c) ** 2 / (G(a) * G(b + 1) * G(c - a) * G(c - b))
    return [k]


def _bp3(a, b, c):  # (1,1,1)
    k = G(c) * G(c + 1) / (G(a + 1) * G(b + 1) * G(c - a) * G(c - b))
    return [k]


def _bp4(a, b, c):  # (1,1,2)
    k = G(c + 1) * G(c + 2) / (G(a + 1) * G(b + 1) * G(c - a + 1) * G(c - b + 1))
    return [k]


def _bp5(a, b, c):  # (0,2,2): k (b-a+1 + c t); constant fixed by the boundary oracle
    k = G(c) * G(c + 2) / (G(a) * G(b + 2) * G(c - a + 2) * G(c - b))
    return [k * (b - a + 1), k * c]


def _bp6(a, b, c):  # (0,2,0)
    k = G(c) ** 2 / (G(a) * G(b + 2) * G(c - a) * G(c - b))
    return [k * (b + 1 - a), k * (c - 2 * b - 2)]


def _bp7(a, b, c):  # (1,1,0); sign fixed by the boundary oracle
    k = G(c) ** 2 * (c - a - b - 1) / (G(a + 1) * G(b + 1) * G(c - a) * G(c - b))
    return [k]


def _bp8(a, b, c):  # (0,0,1)
    k = -G(c) * G(c + 1) / (G(a) * G(b) * G(c - a + 1) * G(c - b + 1))
    return [k]


def _bp9(a, b, c):  # (0,0,-1)
    k = G(c) * G(c - 1) / (G(a) * G(b) * G(c - a) * G(c - b))
    return [k]


def _bp10(a, b, c):  # (0,0,2)
    k = G(c) * G(c + 2) / (G(a) * G(b) * G(c - a + 2) * G(c - b + 2))
    return [k * (a + b - 2 * c - 1), k * c]


def _bp11(a, b, c):  # (0,1,2)
    k = -G(c) * G(c + 2) / (G(a) * G(b + 1) * G(c - a + 2) * G(c - b + 1))
    return [k * (b - c), k * c]


def _bp12(a, b, c):  # (0,-1,0)
    k = -G(c) ** 2 / (G(a) * G(b) * G(c - a) * G(c - b + 1))
    return [k]


def _bp13(a, b, c):  # (-1,-1,0)
    k = -G(c) ** 2 * (c - a - b + 1) / (G(a) * G(b) * G(c - a + 1) * G(c - b + 1))
    return [k]


def _bp14(a, b, c):  # (-1,1,0)
    k = G(c) ** 2 * (a - b - 1) / (G(a) * G(b + 1) * G(c - a + 1) * G(c - b))
    return [k]


def _bp15(a, b, c):  # (-2,-2,0)
    rho0 = a * a + b * b - (c + 2) * (a + b) + 3 * c + 1
    rho1 = c * (c - a - b + 1) + 2 * (a * b - a - b + 1)
    k = -G(c) ** 2 * (c - a - b + 2) / (G(a) * G(b) * G(c - a + 2) * G(c - b + 2))
    return [k * rho0, k * rho1]


EXAMPLES: dict[int, WorkedExample] = {
    1: WorkedExample(1, 0, 1, 1, (0.4, 0.7, 1.3), _bp1),
    2: WorkedExample(2, 0, 1, 0, (0.4, 0.7, 1.3), _bp2,
                     ("needs c > a + b",)),
    3: WorkedExample(3, 1, 1, 1, (0.3, 0.5, 2.1), _bp3,
                     ("needs c > a + b; moment identities at t=1 need c > a+b+1",)),
    4: WorkedExample(4, 1, 1, 2, (0.4, 0.7, 1.3), _bp4),
    5: WorkedExample(5, 0, 2, 2, (0.3, 0.7, 1.9), _bp5,
                     ("B*P normalized against the boundary oracle",)),
    6: WorkedExample(6, 0, 2, 0, (0.3, 0.7, 2.2), _bp6,
                     ("needs c > a + b + 1",)),
    7: WorkedExample(7, 1, 1, 0, (0.3, 0.7, 2.2), _bp7,
                     ("needs c > a + b + 1",
                      "B*P sign fixed by the boundary oracle",)),
    8: WorkedExample(8, 0, 0, 1, (0.4, 0.7, 1.3), _bp8),
    9: WorkedExample(9, 0, 0, -1, (0.4, 0.7, 1.8), _bp9,
                     ("needs c > a + b",)),
    10: WorkedExample(10, 0, 0, 2, (0.4, 0.7, 1.3), _bp10),
    11: WorkedExample(11, 0, 1, 2, (0.4, 0.7, 1.3), _bp11),
    12: WorkedExample(12, 0, -1, 0, (1.7, 0.45, 2.3), _bp12,
                     ("|a-b| > 1 gives the tight constant-Q variant",)),
    13: WorkedExample(13, -1, -1, 0, (1.7, 0.45, 2.3), _bp13,
                      ("|a-b| > 1 gives the tight linear-Q variant",)),
    14: WorkedExample(14, -1, 1, 0, (1.7, 0.45, 2.3), _bp14,
                      ("|a-b| > 1 gives the tight variant",)),
    15: WorkedExample(15, -2, -2, 0, (2.9, 0.4, 3.6), _bp15,
                      ("|a-b| > 2 gives the tight quadratic-Q variant",)),
}
