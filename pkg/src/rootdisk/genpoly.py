"""
Seeded random polynomials that satisfy a theorem's hypotheses by construction.

The t2 = 0 families are built directly from unimodal scaled sequences
t1**j * c_j; t2 > 0 instances are drawn from the same family and kept only
when the condition sequence still splits. Every instance is re-checked with
the corresponding checker before it is returned.
"""

from __future__ import annotations

import math
from dataclasses import asdict, dataclass

import numpy as np

from . import hypotheses as hyp
from .core import Polynomial, RootDiskError

RATIO_RANGE = (1.05, 3.0)
MAX_TRIES = 100


class GenerationError(RootDiskError):
    def __init__(self, message, spec=None):
        super().__init__(message)
        self.spec = spec


@dataclass(frozen=True)
class GenSpec:
    n: int
    k: int
    m: int | None = None
    t1: float = 1.0
    t2: float = 0.0
    alpha: float = 0.0
    seed: int = 0
    ratio_range: tuple[float, float] = RATIO_RANGE

    def to_json(self) -> dict:
        d = asdict(self)
        d["ratio_range"] = list(self.ratio_range)
        return d


def _unimodal(rng: np.random.Generator, n: int, peak: int, t: float, lo: float, hi: float) -> np.ndarray:
    """c_0..c_n with t**j c_j strictly increasing up to ``peak`` and strictly decreasing after."""
    scaled = np.empty(n + 1)
    scaled[peak] = 1.0
    for j in range(peak - 1, -1, -1):
        scaled[j] = scaled[j + 1] / rng.uniform(lo, hi)
    for j in range(peak + 1, n + 1):
        scaled[j] = scaled[j - 1] / rng.uniform(lo, hi)
    c = scaled / t ** np.arange(n + 1)
    return c / c.max()


def _margin_ok(c, t1, t2, k_range, tol) -> bool:
    # the entries bracketing the split must clear the tolerance
    s = hyp.condition_seq(c, t1, t2).values
    k = k_range[0]
    if abs(s[k]) < tol:
        return False
    return k + 1 >= len(s) or abs(s[k + 1]) >= tol


def _rng(spec: GenSpec) -> np.random.Generator:
    return np.random.default_rng(np.uint64(spec.seed % 2**64))


def gen_thm17_instance(spec: GenSpec) -> Polynomial:
    if spec.n < 3 or not 0 <= spec.k <= spec.n - 3:
        raise GenerationError("need n >= 3 and 0 <= k <= n-3", spec)
    if not spec.t1 > 0 or not spec.t1 >= spec.t2 >= 0:
        raise GenerationError("need t1 > 0 and t1 >= t2 >= 0", spec)
    if not 0 <= spec.alpha <= math.pi / 2:
        raise GenerationError("alpha must lie in [0, pi/2]", spec)
    rng = _rng(spec)
    lo, hi = spec.ratio_range
    for _ in range(MAX_TRIES):
        mod = _unimodal(rng, spec.n, spec.k, spec.t1, lo, hi)
        # a zero-width wedge stays on the positive real axis
        axis = rng.uniform(-math.pi, math.pi) if spec.alpha > 0 else 0.0
        args = axis + rng.uniform(-spec.alpha, spec.alpha, spec.n + 1)
        p = Polynomial(mod * np.exp(1j * args))
        rep = hyp.check_thm17(p, spec.t1, spec.t2)
        if not rep.ok or rep.k > spec.k:
            continue
        if not _margin_ok(p.moduli, spec.t1, spec.t2, rep.k_range, hyp.default_tol(p)):
            continue
        return p
    raise GenerationError("resampling budget exhausted", spec)


def gen_thm110_instance(spec: GenSpec) -> Polynomial:
    """
    Real parts unimodal after scaling by t1**j with peak k, imaginary parts
    likewise with peak m (nonnegative). ``m=None`` gives real coefficients.
    """
    n = spec.n
    if n < 1 or not 0 <= spec.k <= n - 1:
        raise GenerationError("need n >= 1 and 0 <= k <= n-1", spec)
    if spec.m is not None and not 0 <= spec.m <= n - 1:
        raise GenerationError("need 0 <= m <= n-1", spec)
    if not spec.t1 > 0 or not spec.t1 >= spec.t2 >= 0:
        raise GenerationError("need t1 > 0 and t1 >= t2 >= 0", spec)
    rng = _rng(spec)
    lo, hi = spec.ratio_range
    for _ in range(MAX_TRIES):
        re = _unimodal(rng, n, spec.k, spec.t1, lo, hi)
        if spec.m is None:
            im = np.zeros(n + 1)
        else:
            im = _unimodal(rng, n, spec.m, spec.t1, lo, hi) * rng.uniform(0.1, 2.0)
        p = Polynomial(re + 1j * im)
        rep = hyp.check_thm110(p, spec.t1, spec.t2)
        if not rep.ok or rep.k > spec.k:
            continue
        if spec.m is not None and rep.m > spec.m:
            continue
        tol = hyp.default_tol(p)
        if not _margin_ok(p.real_parts, spec.t1, spec.t2, rep.k_range, tol):
            continue
        if spec.m is not None and not _margin_ok(p.imag_parts, spec.t1, spec.t2, rep.m_range, tol):
            continue
        return p
    raise GenerationError("resampling budget exhausted", spec)


def gen_ek_instance(n: int, seed: int, tie_prob: float = 0.2) -> Polynomial:
    """Real a_n >= ... >= a_0 > 0, with occasional equal neighbours."""
    if n < 1:
        raise GenerationError("need n >= 1")
    rng = np.random.default_rng(seed)
    a = [rng.uniform(0.1, 1.0)]
    for _ in range(n):
        step = 1.0 if rng.random() < tie_prob else rng.uniform(1.0, 2.0)
        a.append(a[-1] * step)
    p = Polynomial(a)
    assert hyp.check_ek(p)
    return p


def random_spec(rng: np.random.Generator, checker: str, n_range=(3, 10), t2_prob: float = 0.25,
                alpha_max: float = math.pi / 2) -> GenSpec:
    """Draw a GenSpec within the checker's gates (used for corpora)."""
    lo = max(n_range[0], 3 if checker == "thm17" else 1)
    n = int(rng.integers(lo, n_range[1] + 1))
    kmax = n - 3 if checker == "thm17" else n - 1
    k = int(rng.integers(0, kmax + 1))
    m = int(rng.integers(0, n)) if checker == "thm110" else None
    t1 = float(np.exp(rng.uniform(math.log(0.5), math.log(2.0))))
    t2 = float(rng.uniform(0, 0.3) * t1) if rng.random() < t2_prob else 0.0
    alpha = float(rng.uniform(0, alpha_max)) if checker == "thm17" else 0.0
    seed = int(rng.integers(0, 2**63))
    return GenSpec(n=n, k=k, m=m, t1=t1, t2=t2, alpha=alpha, seed=seed)


def generate(spec: GenSpec, checker: str) -> Polynomial:
    if checker == "thm17":
        return gen_thm17_instance(spec)
    if checker == "thm110":
        return gen_thm110_instance(spec)
    raise ValueError(f"unknown checker {checker!r}")
