"""
Coefficient conditions for each containment theorem.

Every theorem's hypothesis is reduced to the sign pattern of

    s_r = t1*t2*c_r + (t1 - t2)*c_{r-1} - c_{r-2},   r = 1..n+1,

(with c_{-1} = c_{n+1} = 0) built from the moduli, real parts or imaginary
parts of the coefficients: nonnegative for r <= k+1, nonpositive afterwards.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field
from typing import Sequence

import numpy as np

from .core import Polynomial
from .wedge import Wedge, fit_wedge


class Theorem(enum.Enum):
    EK = "ek"
    AZIZ_REAL = "aziz_real"
    GOVIL_RAHMAN = "govil_rahman"
    AZIZ_T = "aziz_t"
    RSM_COMPLEX = "rsm_complex"
    RSM_PARTS = "rsm_parts"
    THM17 = "thm17"
    COR19 = "cor19"
    THM110 = "thm110"
    COR112 = "cor112"

    @property
    def order(self) -> int:
        return list(Theorem).index(self)

    @classmethod
    def parse(cls, name: str) -> "Theorem":
        key = name.strip().lower().replace("-", "_")
        for th in cls:
            if th.value == key or th.name.lower() == key:
                return th
        raise ValueError(f"unknown theorem {name!r}")


@dataclass(frozen=True)
class ConditionSeq:
    """s_1..s_{n+1} for a coefficient sequence c_0..c_n (zero padded at both ends)."""

    values: tuple[float, ...]
    t1: float
    t2: float

    def __len__(self):
        return len(self.values)

    def __getitem__(self, r: int) -> float:
        """1-based access matching the index r of s_r."""
        if not 1 <= r <= len(self.values):
            raise IndexError(r)
        return self.values[r - 1]


@dataclass(frozen=True)
class SplitIndices:
    k: int
    feasible: tuple[int, ...]
    m: int | None = None
    feasible_m: tuple[int, ...] = ()


@dataclass
class HypothesisReport:
    theorem: Theorem
    ok: bool
    t1: float | None = None
    t2: float | None = None
    k: int | None = None
    m: int | None = None
    wedge: Wedge | None = None
    violations: list[str] = field(default_factory=list)
    k_range: tuple[int, ...] = ()
    m_range: tuple[int, ...] = ()
    notes: list[str] = field(default_factory=list)

    def to_json(self) -> dict:
        return {
            "theorem": self.theorem.value,
            "ok": self.ok,
            "t1": self.t1,
            "t2": self.t2,
            "k": self.k,
            "m": self.m,
            "alpha": None if self.wedge is None else self.wedge.alpha,
            "beta": None if self.wedge is None else self.wedge.beta,
            "violations": list(self.violations),
        }


def default_tol(p: Polynomial) -> float:
    return 1e-10 * max(abs(c) for c in p.coeffs)


def condition_seq(c: Sequence[float], t1: float, t2: float) -> ConditionSeq:
    c = [float(x) for x in c]
    if not c:
        raise ValueError("empty coefficient sequence")
    if not t1 > 0:
        raise ValueError("t1 must be positive")
    if not t1 >= t2 >= 0:
        raise ValueError("need t1 >= t2 >= 0")
    n = len(c) - 1

    def at(j):
        return c[j] if 0 <= j <= n else 0.0

    u, v = t1 * t2, t1 - t2
    vals = tuple(u * at(r) + v * at(r - 1) - at(r - 2) for r in range(1, n + 2))
    return ConditionSeq(vals, float(t1), float(t2))


def condition_matrix(c: Sequence[float], u: np.ndarray, v: np.ndarray) -> np.ndarray:
    """
    Vectorized s_r over many parameter points, in the linear coordinates
    u = t1*t2, v = t1 - t2. Row i holds s_1..s_{n+1} for (u[i], v[i]).
    """
    c = np.asarray(c, dtype=float)
    n = c.size - 1
    pad = np.concatenate([[0.0, 0.0], c, [0.0]])
    # pad[r + 2] == c_r for r in -2..n+1
    r = np.arange(1, n + 2)
    cur, prev, prev2 = pad[r + 2], pad[r + 1], pad[r]
    u = np.asarray(u, dtype=float)[..., None]
    v = np.asarray(v, dtype=float)[..., None]
    return u * cur + v * prev - prev2


def split_masks(s: np.ndarray, tol: float) -> np.ndarray:
    """
    feasible[..., k] for k = 0..n, given s[..., r-1] = s_r (r = 1..n+1):
    s_r >= -tol for r <= k+1 and s_r <= tol for r >= k+2.
    """
    nonneg = s >= -tol
    nonpos = s <= tol
    prefix = np.logical_and.accumulate(nonneg, axis=-1)
    suffix = np.logical_and.accumulate(nonpos[..., ::-1], axis=-1)[..., ::-1]
    # suffix starting at r = k+2 is column k+1; for k = n the suffix is empty
    tail = np.concatenate([suffix[..., 1:], np.ones(s.shape[:-1] + (1,), dtype=bool)], axis=-1)
    return prefix & tail


def split_index(s: ConditionSeq | Sequence[float], tol: float = 0.0) -> SplitIndices | None:
    """Smallest k with the nonnegative/nonpositive split at k, or None."""
    vals = list(s.values if isinstance(s, ConditionSeq) else s)
    if tol < 0:
        raise ValueError("tol must be nonnegative")
    n = len(vals) - 1
    feasible = []
    for k in range(n + 1):
        head = vals[: k + 1]
        tail = vals[k + 1 :]
        if all(x >= -tol for x in head) and all(x <= tol for x in tail):
            feasible.append(k)
    if not feasible:
        return None
    return SplitIndices(k=feasible[0], feasible=tuple(feasible))


def _params_ok(report: HypothesisReport, t1, t2, strict: bool) -> bool:
    good = True
    if t1 is None or not math.isfinite(t1) or t1 == 0:
        report.violations.append("t1 != 0 required")
        good = False
    if t2 is None or not math.isfinite(t2) or t2 < 0:
        report.violations.append("t2 >= 0 required")
        good = False
    if good:
        if strict and not t1 > t2:
            report.violations.append("t1 > t2 required")
            good = False
        elif not t1 >= t2:
            report.violations.append("t1 >= t2 required")
            good = False
    return good


def _split_into(report, c, t1, t2, tol, kmax, label, attr):
    split = split_index(condition_seq(c, t1, t2), tol)
    rng = () if split is None else tuple(k for k in split.feasible if k <= kmax)
    if not rng:
        sym = "k" if attr == "k" else "m"
        report.violations.append(f"no split index {sym} <= {kmax} for the {label} sequence")
        return ()
    setattr(report, attr, rng[0])
    setattr(report, f"{attr}_range", rng)
    return rng


def _finish(report: HypothesisReport) -> HypothesisReport:
    report.ok = not report.violations
    return report


def _tol(p, tol):
    return default_tol(p) if tol is None else tol


def _fit_into(report: HypothesisReport, p: Polynomial) -> Wedge | None:
    w = fit_wedge(p)
    if w is None:
        report.violations.append("coefficient arguments do not fit a wedge of half-angle <= pi/2")
    report.wedge = w
    return w


def check_ek(p: Polynomial, tol: float | None = None) -> bool:
    """Real coefficients with a_n >= ... >= a_1 >= a_0 > 0."""
    tol = _tol(p, tol)
    if not p.is_real:
        return False
    a = [c.real for c in p.coeffs]
    if not a[0] > 0:
        return False
    return all(a[j] >= a[j - 1] - tol for j in range(1, len(a)))


def check_ek_report(p: Polynomial, tol: float | None = None) -> HypothesisReport:
    rep = HypothesisReport(Theorem.EK, False)
    if not check_ek(p, tol):
        rep.violations.append("need real coefficients with a_n >= ... >= a_0 > 0")
    return _finish(rep)


def check_govil_rahman(p: Polynomial, tol: float | None = None) -> tuple[Wedge | None, bool]:
    """Fitted wedge and whether |a_n| >= ... >= |a_0| holds."""
    tol = _tol(p, tol)
    w = fit_wedge(p)
    mod = p.moduli
    chain = bool(np.all(mod[1:] >= mod[:-1] - tol))
    return w, chain


def check_govil_rahman_report(p: Polynomial, tol: float | None = None) -> HypothesisReport:
    w, chain = check_govil_rahman(p, tol)
    rep = HypothesisReport(Theorem.GOVIL_RAHMAN, False, wedge=w)
    if w is None:
        rep.violations.append("coefficient arguments do not fit a wedge of half-angle <= pi/2")
    if not chain:
        rep.violations.append("need |a_n| >= |a_{n-1}| >= ... >= |a_0|")
    return _finish(rep)


def check_monotone_t(p: Polynomial, t: float, tol: float | None = None) -> SplitIndices | None:
    """
    Peaks k of the scaled moduli t**j |a_j|: nondecreasing from j = 0 up to k,
    nonincreasing from k to n, with |a_0| > 0.

    With t2 = 0 the chain is exactly the sign split of condition_seq(|a|, t, 0).
    """
    if not t > 0:
        raise ValueError("t must be positive")
    tol = _tol(p, tol)
    if p.moduli[0] == 0:
        return None
    return split_index(condition_seq(p.moduli, t, 0.0), tol)


def check_aziz_t(p: Polynomial, t: float, tol: float | None = None, theorem=Theorem.AZIZ_T) -> HypothesisReport:
    rep = HypothesisReport(theorem, False, t1=t, t2=0.0)
    _fit_into(rep, p)
    kmax = p.degree if theorem is Theorem.AZIZ_T else p.degree - 3
    if theorem is Theorem.COR19 and p.degree < 3:
        rep.violations.append("n ≥ 3 required")
        return _finish(rep)
    if t is None or not t > 0:
        rep.violations.append("t > 0 required")
        return _finish(rep)
    if p.moduli[0] == 0:
        rep.violations.append("|a_0| > 0 required")
        return _finish(rep)
    split = check_monotone_t(p, t, tol)
    rng = () if split is None else tuple(k for k in split.feasible if k <= kmax)
    if not rng:
        rep.violations.append(f"t^j|a_j| is not unimodal with a peak k <= {kmax}")
    else:
        rep.k, rep.k_range = rng[0], rng
    return _finish(rep)


def check_cor19(p: Polynomial, t: float, tol: float | None = None) -> HypothesisReport:
    return check_aziz_t(p, t, tol, theorem=Theorem.COR19)


def check_aziz_real(p: Polynomial, t1: float, t2: float, tol: float | None = None) -> HypothesisReport:
    """Real coefficients with every s_r >= 0 (no sign split)."""
    tol = _tol(p, tol)
    rep = HypothesisReport(Theorem.AZIZ_REAL, False, t1=t1, t2=t2)
    if not p.is_real:
        rep.violations.append("real coefficients required")
    if _params_ok(rep, t1, t2, strict=True) and p.is_real:
        s = condition_seq(p.real_parts, t1, t2)
        bad = [r for r in range(1, len(s) + 1) if s[r] < -tol]
        if bad:
            rep.violations.append(f"s_r < 0 for r in {bad}")
    return _finish(rep)


def check_rsm_complex(p: Polynomial, t1: float, t2: float, tol: float | None = None) -> HypothesisReport:
    tol = _tol(p, tol)
    rep = HypothesisReport(Theorem.RSM_COMPLEX, False, t1=t1, t2=t2)
    _fit_into(rep, p)
    if _params_ok(rep, t1, t2, strict=True):
        _split_into(rep, p.moduli, t1, t2, tol, p.degree, "modulus", "k")
    return _finish(rep)


def check_thm17(p: Polynomial, t1: float, t2: float, tol: float | None = None) -> HypothesisReport:
    tol = _tol(p, tol)
    rep = HypothesisReport(Theorem.THM17, False, t1=t1, t2=t2)
    if p.degree < 3:
        rep.violations.append("n ≥ 3 required")
        return _finish(rep)
    _fit_into(rep, p)
    if _params_ok(rep, t1, t2, strict=False):
        _split_into(rep, p.moduli, t1, t2, tol, p.degree - 3, "modulus", "k")
    if rep.t1 is not None and rep.t2 is not None and rep.t1 == rep.t2:
        rep.notes.append("t1 == t2: lemma majorant taken by continuity")
    return _finish(rep)


def _check_parts(theorem, p, t1, t2, tol, strict, cap):
    tol = _tol(p, tol)
    rep = HypothesisReport(theorem, False, t1=t1, t2=t2)
    if not p.coeffs[-1].real > 0:
        rep.violations.append("α_n > 0 required")
    if _params_ok(rep, t1, t2, strict=strict):
        _split_into(rep, p.real_parts, t1, t2, tol, cap, "real-part", "k")
        _split_into(rep, p.imag_parts, t1, t2, tol, cap, "imaginary-part", "m")
    return _finish(rep)


def check_rsm_parts(p: Polynomial, t1: float, t2: float, tol: float | None = None) -> HypothesisReport:
    return _check_parts(Theorem.RSM_PARTS, p, t1, t2, tol, strict=True, cap=p.degree)


def check_thm110(p: Polynomial, t1: float, t2: float, tol: float | None = None) -> HypothesisReport:
    rep = _check_parts(Theorem.THM110, p, t1, t2, tol, strict=False, cap=p.degree - 1)
    rep.notes.append("m gate applied as 0 <= m <= n-1")
    return rep


def check_cor112(p: Polynomial, t1: float, t2: float, tol: float | None = None) -> HypothesisReport:
    tol = _tol(p, tol)
    rep = HypothesisReport(Theorem.COR112, False, t1=t1, t2=t2)
    if not (p.is_real and all(c.real > 0 for c in p.coeffs)):
        rep.violations.append("real positive coefficients required")
    elif _params_ok(rep, t1, t2, strict=False):
        _split_into(rep, p.real_parts, t1, t2, tol, p.degree - 1, "coefficient", "k")
    return _finish(rep)


def check(theorem: Theorem, p: Polynomial, t1=None, t2=None, tol=None) -> HypothesisReport:
    """Dispatch to the checker for ``theorem``. ``t1`` doubles as t for aziz_t and cor19."""
    if theorem is Theorem.EK:
        return check_ek_report(p, tol)
    if theorem is Theorem.GOVIL_RAHMAN:
        return check_govil_rahman_report(p, tol)
    if theorem is Theorem.AZIZ_T:
        return check_aziz_t(p, t1, tol)
    if theorem is Theorem.COR19:
        return check_cor19(p, t1, tol)
    fn = {
        Theorem.AZIZ_REAL: check_aziz_real,
        Theorem.RSM_COMPLEX: check_rsm_complex,
        Theorem.RSM_PARTS: check_rsm_parts,
        Theorem.THM17: check_thm17,
        Theorem.THM110: check_thm110,
        Theorem.COR112: check_cor112,
    }[theorem]
    return fn(p, t1, t2, tol)
