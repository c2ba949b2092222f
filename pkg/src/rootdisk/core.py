"""
Polynomials with complex coefficients, containment disks, and the
quadratic-factor construction used to derive the bounds.

Coefficients are stored in ascending order: ``coeffs[j]`` multiplies ``z**j``.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from pathlib import Path
from typing import Iterable, Sequence

import numpy as np


class RootDiskError(Exception):
    """Base class for errors raised by this package."""


class HypothesisError(RootDiskError, ValueError):
    """A theorem's coefficient conditions do not hold for the given input."""

    def __init__(self, message: str, report=None):
        super().__init__(message)
        self.report = report


class RadiusAnomaly(RootDiskError):
    """
    A bound produced a negative radius although its hypotheses hold.

    This would contradict the theorem, so it is never clamped to zero.
    The offending inputs are carried on the exception.
    """

    def __init__(self, message: str, **inputs):
        super().__init__(message)
        self.inputs = inputs


@dataclass(frozen=True)
class Polynomial:
    """P(z) = sum_j coeffs[j] * z**j with a nonzero leading coefficient."""

    coeffs: tuple[complex, ...]

    def __init__(self, coeffs: Iterable, zero_threshold: float = 0.0):
        cs = tuple(complex(c) for c in coeffs)
        if not cs:
            raise ValueError("polynomial needs at least one coefficient")
        if not all(math.isfinite(c.real) and math.isfinite(c.imag) for c in cs):
            raise ValueError("coefficients must be finite")
        scale = max(abs(c) for c in cs)
        if abs(cs[-1]) <= zero_threshold * scale or cs[-1] == 0:
            raise ValueError("leading coefficient must be nonzero")
        object.__setattr__(self, "coeffs", cs)

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    n = degree

    def __len__(self) -> int:
        return len(self.coeffs)

    def __getitem__(self, j: int) -> complex:
        # out-of-range indices follow the a_{-1} = a_{n+1} = 0 convention
        if 0 <= j < len(self.coeffs):
            return self.coeffs[j]
        return 0j

    def as_array(self) -> np.ndarray:
        return np.array(self.coeffs, dtype=complex)

    @property
    def moduli(self) -> np.ndarray:
        return np.abs(self.as_array())

    @property
    def real_parts(self) -> np.ndarray:
        return self.as_array().real.copy()

    @property
    def imag_parts(self) -> np.ndarray:
        return self.as_array().imag.copy()

    @property
    def is_real(self) -> bool:
        return all(c.imag == 0 for c in self.coeffs)

    def scaled(self, factor: complex) -> "Polynomial":
        return Polynomial([factor * c for c in self.coeffs])

    # serialization

    def to_json(self) -> dict:
        return {"coeffs": [[c.real, c.imag] for c in self.coeffs]}

    @classmethod
    def from_json(cls, obj: dict, zero_threshold: float = 0.0) -> "Polynomial":
        try:
            raw = obj["coeffs"]
        except (KeyError, TypeError):
            raise ValueError('polynomial JSON needs a "coeffs" list') from None
        if not isinstance(raw, list):
            raise ValueError('"coeffs" must be a list')
        coeffs = []
        for item in raw:
            if isinstance(item, (int, float)) and not isinstance(item, bool):
                coeffs.append(complex(item))
            elif (
                isinstance(item, list)
                and len(item) == 2
                and all(isinstance(x, (int, float)) and not isinstance(x, bool) for x in item)
            ):
                coeffs.append(complex(item[0], item[1]))
            else:
                raise ValueError(f"bad coefficient entry: {item!r}")
        return cls(coeffs, zero_threshold=zero_threshold)

    @classmethod
    def load(cls, path: str | Path) -> "Polynomial":
        with open(path) as fh:
            return cls.from_json(json.load(fh))

    def __repr__(self) -> str:
        return f"Polynomial({list(self.coeffs)!r})"


@dataclass(frozen=True)
class Disk:
    """Closed disk |z - center| <= radius."""

    center: complex
    radius: float

    def __post_init__(self):
        object.__setattr__(self, "center", complex(self.center))
        object.__setattr__(self, "radius", float(self.radius))
        if not self.radius >= 0:
            raise ValueError(f"disk radius must be nonnegative, got {self.radius}")

    @property
    def enclosing(self) -> float:
        return enclosing_radius(self)

    def contains(self, z: complex, tol: float = 0.0) -> bool:
        return abs(complex(z) - self.center) <= self.radius + tol


def enclosing_radius(d: Disk) -> float:
    """Radius of the smallest origin-centred disk containing ``d``."""
    return abs(d.center) + d.radius


def eval_poly(p: Polynomial | Sequence[complex], z):
    """
    Horner evaluation of sum_j a_j z**j.

    ``z`` may be a scalar or a numpy array.
    """
    coeffs = p.coeffs if isinstance(p, Polynomial) else tuple(p)
    acc = 0j * z if isinstance(z, np.ndarray) else 0j
    for c in reversed(coeffs):
        acc = acc * z + c
    return acc


def cauchy_bound(p: Polynomial) -> float:
    """Cauchy's radius 1 + max_{j<n} |a_j / a_n|."""
    if p.degree < 1:
        raise ValueError("Cauchy bound needs degree >= 1")
    lead = abs(p.coeffs[-1])
    return 1.0 + max(abs(c) for c in p.coeffs[:-1]) / lead


def multiply_enestrom_factors(p: Polynomial, t1: float, t2: float) -> Polynomial:
    """
    Coefficients of F(z) = (t1 - z)(t2 + z) P(z).

    The z**nu coefficient for nu <= n is a_nu t1 t2 + a_{nu-1}(t1 - t2) - a_{nu-2};
    the top two are a_n (t1 - t2) - a_{n-1} and -a_n.
    """
    if not t1 > 0:
        raise ValueError("t1 must be positive")
    if not t2 >= 0:
        raise ValueError("t2 must be nonnegative")
    n = p.degree
    u, v = t1 * t2, t1 - t2
    out = [u * p[nu] + v * p[nu - 1] - p[nu - 2] for nu in range(n + 1)]
    out.append(p[n] * v - p[n - 1])
    out.append(-p[n])
    return Polynomial(out)
