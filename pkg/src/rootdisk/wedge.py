"""Argument wedges |arg a_j - beta| <= alpha <= pi/2 and the related majorant."""

from __future__ import annotations

import math
from dataclasses import dataclass

from .core import Polynomial

ANGLE_TOL = 1e-12
HALF_PI = math.pi / 2


def normalize_angle(theta: float) -> float:
    """Map an angle into (-pi, pi]."""
    t = math.remainder(theta, 2 * math.pi)
    if t <= -math.pi:
        t += 2 * math.pi
    return t


def angular_distance(a: float, b: float) -> float:
    return abs(normalize_angle(a - b))


@dataclass(frozen=True)
class Wedge:
    beta: float
    alpha: float

    def __post_init__(self):
        if not (0 <= self.alpha <= HALF_PI + ANGLE_TOL):
            raise ValueError(f"wedge half-angle must lie in [0, pi/2], got {self.alpha}")
        object.__setattr__(self, "beta", normalize_angle(self.beta))
        object.__setattr__(self, "alpha", min(float(self.alpha), HALF_PI))

    def covers(self, z: complex, tol: float = ANGLE_TOL) -> bool:
        if z == 0:
            return True
        return angular_distance(math.atan2(z.imag, z.real), self.beta) <= self.alpha + tol


def fit_wedge(p: Polynomial | list) -> Wedge | None:
    """
    Smallest wedge holding the arguments of every nonzero coefficient.

    The covering arc is the complement of the largest circular gap between
    sorted arguments; the axis is its midpoint. Returns None when the
    minimal half-angle exceeds pi/2.
    """
    coeffs = p.coeffs if isinstance(p, Polynomial) else [complex(c) for c in p]
    args = sorted(math.atan2(c.imag, c.real) for c in coeffs if c != 0)
    if not args:
        raise ValueError("all coefficients are zero")
    m = len(args)
    best = None
    for i in range(m):
        # gap running counter-clockwise from args[i] to the next argument
        nxt = args[(i + 1) % m] + (2 * math.pi if i == m - 1 else 0.0)
        gap = nxt - args[i]
        # arc starts at the gap's far end and runs ccw to its near end
        start = args[(i + 1) % m]
        width = 2 * math.pi - gap
        beta = normalize_angle(start + width / 2)
        key = (-round(gap, 12), abs(beta))
        if best is None or key < best[0]:
            best = (key, beta, width / 2)
    _, beta, alpha = best
    if alpha > HALF_PI + ANGLE_TOL:
        return None
    if alpha < ANGLE_TOL:
        alpha = 0.0
    if abs(beta) < ANGLE_TOL:
        beta = 0.0
    return Wedge(beta, min(alpha, HALF_PI))


def lemma21_rhs(t1: float, t2: float, m_j: float, m_jm1: float, m_jm2: float, alpha: float) -> float:
    """
    Majorant for |t1 t2 a_j + (t1 - t2) a_{j-1} - a_{j-2}| given only the
    moduli of the three coefficients and a common wedge of half-angle alpha.
    """
    if not t1 > t2 >= 0:
        raise ValueError("need t1 > t2 >= 0")
    if min(m_j, m_jm1, m_jm2) < 0:
        raise ValueError("moduli must be nonnegative")
    if not 0 <= alpha <= HALF_PI + ANGLE_TOL:
        raise ValueError("alpha must lie in [0, pi/2]")
    lin = t1 * t2 * m_j + (t1 - t2) * m_jm1
    return abs(lin - m_jm2) * math.cos(alpha) + (lin + m_jm2) * math.sin(alpha)
