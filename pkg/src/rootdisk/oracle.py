"""
Independent root finder used to check every containment disk.

Simultaneous iteration (Aberth-Ehrlich by default, plain Weierstrass /
Durand-Kerner on request) with Jacobi-style sweeps: each sweep updates all
approximations from the previous sweep's values.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy.optimize import linear_sum_assignment

from .core import Disk, Polynomial, cauchy_bound


@dataclass(frozen=True)
class RootSet:
    roots: tuple[complex, ...]
    residuals: tuple[float, ...]
    converged: bool
    iterations: int = 0

    def __len__(self):
        return len(self.roots)

    def as_array(self) -> np.ndarray:
        return np.array(self.roots, dtype=complex)

    @property
    def max_modulus(self) -> float:
        return max((abs(z) for z in self.roots), default=0.0)

    def to_json(self) -> dict:
        return {
            "roots": [[z.real, z.imag] for z in self.roots],
            "residuals": list(self.residuals),
            "converged": self.converged,
        }


class UnconvergedRoots(RuntimeError):
    pass


def scaled_residuals(coeffs: np.ndarray, z: np.ndarray) -> np.ndarray:
    """|p(z)| / sum_j |a_j| |z|^j  (backward error of each approximation)."""
    val = np.zeros_like(z)
    mag = np.zeros(z.shape, dtype=float)
    az = np.abs(z)
    for c in coeffs[::-1]:
        val = val * z + c
        mag = mag * az + abs(c)
    with np.errstate(invalid="ignore", divide="ignore"):
        res = np.abs(val) / mag
    return np.where(mag == 0, 0.0, res)


def _sweep(coeffs: np.ndarray, z: np.ndarray, active: np.ndarray, method: str) -> np.ndarray:
    n = z.size
    diff = z[:, None] - z[None, :]
    np.fill_diagonal(diff, 1.0)
    if method == "weierstrass":
        val = np.polyval(coeffs[::-1], z)
        denom = coeffs[-1] * np.prod(np.where(np.eye(n, dtype=bool), 1.0, diff), axis=1)
        step = val / denom
    else:
        p = np.zeros_like(z)
        dp = np.zeros_like(z)
        for c in coeffs[::-1]:
            dp = dp * z + p
            p = p * z + c
        inv = 1.0 / diff
        np.fill_diagonal(inv, 0.0)
        with np.errstate(invalid="ignore", divide="ignore", over="ignore"):
            w = p / dp
            step = w / (1.0 - w * inv.sum(axis=1))
        step = np.where(np.isfinite(step), step, 0.0)
    return np.where(active, z - step, z)


def roots(p: Polynomial, tol: float = 1e-12, max_iter: int = 500, method: str = "aberth") -> RootSet:
    """All n zeros of ``p``, sorted by (modulus, argument)."""
    if p.degree < 1:
        raise ValueError("root finding needs degree >= 1")
    if method not in ("aberth", "weierstrass"):
        raise ValueError(f"unknown method {method!r}")
    a = p.as_array()
    if not np.all(np.isfinite(a)):
        raise ValueError("coefficients must be finite")

    # zero roots are exact
    nz = int(np.argmax(a != 0))
    zeros = [0j] * nz
    a = a[nz:]
    a = a / np.max(np.abs(a))
    m = a.size - 1

    found = np.zeros(0, dtype=complex)
    converged, it = True, 0
    if m == 1:
        found = np.array([-a[0] / a[1]])
    elif m > 1:
        r0 = (abs(a[0]) / abs(a[-1])) ** (1.0 / m)
        if not r0 > 0 or not math.isfinite(r0):
            r0 = 0.5 * cauchy_bound(Polynomial(a))
        z = r0 * np.exp(1j * (2 * np.pi * np.arange(m) / m + 0.4))
        active = np.ones(m, dtype=bool)
        converged = False
        for it in range(1, max_iter + 1):
            z = _sweep(a, z, active, method)
            res = scaled_residuals(a, z)
            active = res > tol
            if not active.any():
                converged = True
                break
        if converged:
            # one cubic step past the tolerance reaches working precision
            polished = _sweep(a, z, np.ones(m, dtype=bool), method)
            better = scaled_residuals(a, polished) <= res
            z = np.where(better, polished, z)
        found = z

    allz = np.concatenate([np.array(zeros, dtype=complex), found])
    res = scaled_residuals(p.as_array() / np.max(np.abs(p.as_array())), allz)
    order = sorted(range(allz.size), key=lambda i: (abs(allz[i]), math.atan2(allz[i].imag, allz[i].real)))
    converged = converged and bool(np.all(res <= tol))
    return RootSet(
        roots=tuple(complex(allz[i]) for i in order),
        residuals=tuple(float(res[i]) for i in order),
        converged=converged,
        iterations=it,
    )


def verify_containment(rs: RootSet, d: Disk, tol: float = 0.0) -> tuple[bool, float]:
    """(all roots within ``tol`` of the disk, max_i |z_i - c| - r)."""
    if not rs.converged:
        raise UnconvergedRoots("root set did not converge; refusing to certify containment")
    if not rs.roots:
        return True, -d.radius
    worst = max(abs(z - d.center) - d.radius for z in rs.roots)
    return worst <= tol, float(worst)


def tightness(rs: RootSet, d: Disk) -> float:
    """Largest root modulus over the enclosing radius of ``d``."""
    if not rs.converged:
        raise UnconvergedRoots("root set did not converge")
    enc = d.enclosing
    top = rs.max_modulus
    if enc == 0:
        if top == 0:
            return 0.0
        raise ValueError("zero enclosing radius with nonzero roots")
    return top / enc


def match_roots(a, b) -> float:
    """Largest distance under the optimal one-to-one pairing of two root multisets."""
    a = np.asarray(list(a), dtype=complex)
    b = np.asarray(list(b), dtype=complex)
    if a.size != b.size:
        raise ValueError("root multisets differ in size")
    cost = np.abs(a[:, None] - b[None, :])
    rows, cols = linear_sum_assignment(cost)
    return float(cost[rows, cols].max()) if a.size else 0.0
