"""
Containment disks for the zeros of a polynomial.

Each ``bound_*`` function checks its theorem's hypotheses, evaluates the disk
and returns a :class:`BoundReport`. Split indices ``k`` / ``m`` may be given
explicitly; when omitted, every admissible value is tried and the one with
the smallest enclosing radius is kept.

The ``*_radius`` helpers evaluate the bare formulas. They broadcast over
numpy arrays of ``t1`` / ``t2`` so the parameter search can reuse them.
"""

from __future__ import annotations

import itertools
import logging
import math
from dataclasses import dataclass, field

import numpy as np

from . import hypotheses as hyp
from .core import Disk, HypothesisError, Polynomial, RadiusAnomaly
from .hypotheses import HypothesisReport, Theorem
from .wedge import Wedge

log = logging.getLogger(__name__)


# ---------------------------------------------------------------------------
# formula helpers


def _scaled(x, t, e):
    """x / t**e, switching to log-magnitude form if t**e leaves the float range."""
    x = np.asarray(x, dtype=float)
    t = np.asarray(t, dtype=float)
    with np.errstate(over="ignore", under="ignore", divide="ignore", invalid="ignore"):
        denom = np.power(t, e)
        out = x / denom
        bad = ~np.isfinite(denom) | (denom == 0)
        if np.any(bad & (x != 0)):
            logq = np.log(np.abs(np.where(x == 0, 1.0, x))) - e * np.log(t)
            out = np.where(bad, np.sign(x) * np.exp(logq), out)
    return out if out.ndim else float(out)


def _sin_cos(alpha: float) -> tuple[float, float]:
    if alpha == 0:
        return 0.0, 1.0
    return math.sin(alpha), math.cos(alpha)


def _mod(p: Polynomial, j: int) -> float:
    return abs(p[j])


def _tail_sum(p: Polynomial, t1, upto: int):
    """sum_{j=0..upto} |a_j| / t1**(n-j-1)."""
    if upto < 0:
        return 0.0
    n = p.degree
    j = np.arange(upto + 1)
    t = np.asarray(t1, dtype=float)
    terms = _scaled(p.moduli[: upto + 1], t[..., None], n - j - 1)
    out = np.sum(terms, axis=-1)
    return out if out.ndim else float(out)


def govil_rahman_radius(p: Polynomial, alpha: float) -> float:
    sa, ca = _sin_cos(alpha)
    return (ca + sa) + 2 * sa / _mod(p, p.degree) * float(np.sum(p.moduli))


def aziz_t_radius(p: Polynomial, t, k: int, alpha: float):
    n = p.degree
    sa, ca = _sin_cos(alpha)
    an = _mod(p, n)
    peak = 2 * _scaled(_mod(p, k), t, n - k) / an
    return t * ((peak - 1) * ca + sa) + 2 * sa * _tail_sum(p, t, n) / an


def rsm_complex_radius(p: Polynomial, t1, t2, k: int, alpha: float):
    n = p.degree
    sa, ca = _sin_cos(alpha)
    an = _mod(p, n)
    lead = _scaled(2 * _mod(p, k) + 2 * t2 * _mod(p, k + 1), t1, n - k) / an
    return t1 * ((lead - 1) * ca + sa) + 2 * sa / an * _tail_sum(p, t1, n - 1)


def rsm_parts_radius(p: Polynomial, t1, t2, k: int, m: int):
    n = p.degree
    re, im = p.real_parts, p.imag_parts
    at = lambda x, j: x[j] if 0 <= j <= n else 0.0  # noqa: E731
    an = _mod(p, n)
    kterm = 2 * _scaled(at(re, k) + t2 * at(re, k + 1), t1, n - k)
    mterm = 2 * _scaled(at(im, m) + t2 * at(im, m + 1), t1, n - m)
    return t1 / an * (kterm + mterm - (re[n] + im[n]))


def thm17_center(p: Polynomial, t1, t2):
    n = p.degree
    return (t1 - t2) - p[n - 1] / p[n]


def thm17_radius(p: Polynomial, t1, t2, k: int, alpha: float):
    n = p.degree
    sa, ca = _sin_cos(alpha)
    an = _mod(p, n)
    peak = _scaled(2 * t2 * _mod(p, k + 1) + 2 * _mod(p, k), t1, n - k - 1) / an
    return (
        peak * ca
        + 2 * sa / an * _tail_sum(p, t1, n - 2)
        + (t2 + _mod(p, n - 1) / an) * (sa - ca)
    )


def thm110_center(p: Polynomial, t1, t2):
    n = p.degree
    re = p.real_parts
    return -(re[n - 1] - (t1 - t2) * re[n]) / p[n]


def thm110_radius(p: Polynomial, t1, t2, k: int, m: int):
    n = p.degree
    re, im = p.real_parts, p.imag_parts
    an = _mod(p, n)
    kterm = 2 * _scaled(re[k + 1] * t2 + re[k], t1, n - k - 1) / an
    mterm = 2 * _scaled(im[m + 1] * t2 + im[m], t1, n - m - 1) / an
    return kterm + mterm - (t2 * re[n] + t1 * im[n] + re[n - 1]) / an


def cor112_radius(p: Polynomial, t1, t2, k: int):
    n = p.degree
    a = p.real_parts
    return t2 + a[n - 1] / a[n] + _scaled(2 * t2 * a[k + 1] + 2 * a[k], t1, n - k - 1) / a[n]


# ---------------------------------------------------------------------------
# reports


@dataclass
class BoundReport:
    theorem: Theorem
    disk: Disk
    hypothesis: HypothesisReport
    t1: float | None = None
    t2: float | None = None
    k: int | None = None
    m: int | None = None
    alpha: float | None = None
    beta: float | None = None
    flags: list[str] = field(default_factory=list)

    @property
    def enclosing(self) -> float:
        return self.disk.enclosing

    @property
    def ok(self) -> bool:
        return self.hypothesis.ok

    @property
    def center(self) -> complex:
        return self.disk.center

    @property
    def radius(self) -> float:
        return self.disk.radius

    def to_json(self) -> dict:
        c = self.disk.center
        return {
            "theorem": self.theorem.value,
            "t1": self.t1,
            "t2": self.t2,
            "k": self.k,
            "m": self.m,
            "alpha": self.alpha,
            "beta": self.beta,
            "center": [c.real, c.imag],
            "radius": self.disk.radius,
            "enclosing": self.enclosing,
            "ok": self.ok,
        }


def _require(rep: HypothesisReport) -> None:
    if not rep.ok:
        raise HypothesisError(
            f"{rep.theorem.value}: hypotheses fail: " + "; ".join(rep.violations), rep
        )


def _wedge_for(p: Polynomial, rep: HypothesisReport, wedge: Wedge | None) -> Wedge:
    if wedge is None:
        return rep.wedge
    if not all(wedge.covers(c) for c in p.coeffs):
        raise HypothesisError(f"{rep.theorem.value}: supplied wedge does not cover every coefficient", rep)
    return wedge


def _make_disk(theorem, center, radius, **inputs) -> Disk:
    radius = float(radius)
    if not math.isfinite(radius) or radius < 0:
        raise RadiusAnomaly(
            f"{theorem.value}: radius {radius!r} under satisfied hypotheses",
            theorem=theorem.value, center=center, radius=radius, **inputs,
        )
    return Disk(complex(center), radius)


def _pick(candidates, given, what, rep):
    if given is None:
        return list(candidates)
    if given not in candidates:
        raise HypothesisError(
            f"{rep.theorem.value}: {what} = {given} is not admissible (feasible: {list(candidates)})", rep
        )
    return [given]


def _best(reports: list[BoundReport]) -> BoundReport:
    return min(reports, key=lambda r: (r.enclosing, r.k if r.k is not None else -1, r.m if r.m is not None else -1))


def bound_ek(p: Polynomial, tol: float | None = None) -> BoundReport:
    rep = hyp.check_ek_report(p, tol)
    _require(rep)
    return BoundReport(Theorem.EK, Disk(0, 1.0), rep)


def bound_aziz_real(p: Polynomial, t1: float, t2: float, tol: float | None = None) -> BoundReport:
    rep = hyp.check_aziz_real(p, t1, t2, tol)
    _require(rep)
    return BoundReport(Theorem.AZIZ_REAL, Disk(0, float(t1)), rep, t1=float(t1), t2=float(t2))


def bound_govil_rahman(p: Polynomial, tol: float | None = None, wedge: Wedge | None = None) -> BoundReport:
    rep = hyp.check_govil_rahman_report(p, tol)
    _require(rep)
    w = _wedge_for(p, rep, wedge)
    disk = _make_disk(Theorem.GOVIL_RAHMAN, 0, govil_rahman_radius(p, w.alpha), p=p)
    return BoundReport(Theorem.GOVIL_RAHMAN, disk, rep, alpha=w.alpha, beta=w.beta)


def bound_aziz_t(p: Polynomial, t: float, k: int | None = None, tol: float | None = None,
                 wedge: Wedge | None = None) -> BoundReport:
    rep = hyp.check_aziz_t(p, t, tol)
    _require(rep)
    w = _wedge_for(p, rep, wedge)
    out = []
    for kk in _pick(rep.k_range, k, "k", rep):
        disk = _make_disk(Theorem.AZIZ_T, 0, aziz_t_radius(p, t, kk, w.alpha), p=p, t=t, k=kk)
        out.append(BoundReport(Theorem.AZIZ_T, disk, rep, t1=float(t), t2=0.0, k=kk, alpha=w.alpha, beta=w.beta))
    return _best(out)


def bound_rsm_complex(p: Polynomial, t1: float, t2: float, k: int | None = None, tol: float | None = None,
                      wedge: Wedge | None = None) -> BoundReport:
    rep = hyp.check_rsm_complex(p, t1, t2, tol)
    _require(rep)
    w = _wedge_for(p, rep, wedge)
    out = []
    for kk in _pick(rep.k_range, k, "k", rep):
        r = rsm_complex_radius(p, t1, t2, kk, w.alpha)
        disk = _make_disk(Theorem.RSM_COMPLEX, 0, r, p=p, t1=t1, t2=t2, k=kk)
        br = BoundReport(Theorem.RSM_COMPLEX, disk, rep, t1=float(t1), t2=float(t2), k=kk,
                         alpha=w.alpha, beta=w.beta)
        if kk >= p.degree - 1:
            br.flags.append("edge-index")
        out.append(br)
    return _best(out)


def bound_rsm_parts(p: Polynomial, t1: float, t2: float, k: int | None = None, m: int | None = None,
                    tol: float | None = None) -> BoundReport:
    rep = hyp.check_rsm_parts(p, t1, t2, tol)
    _require(rep)
    out = []
    for kk, mm in itertools.product(_pick(rep.k_range, k, "k", rep), _pick(rep.m_range, m, "m", rep)):
        r = rsm_parts_radius(p, t1, t2, kk, mm)
        disk = _make_disk(Theorem.RSM_PARTS, 0, r, p=p, t1=t1, t2=t2, k=kk, m=mm)
        out.append(BoundReport(Theorem.RSM_PARTS, disk, rep, t1=float(t1), t2=float(t2), k=kk, m=mm))
    return _best(out)


def _thm17_reports(theorem, rep, p, t1, t2, k, wedge):
    w = _wedge_for(p, rep, wedge)
    center = thm17_center(p, t1, t2)
    out = []
    for kk in _pick(rep.k_range, k, "k", rep):
        r = thm17_radius(p, t1, t2, kk, w.alpha)
        disk = _make_disk(theorem, center, r, p=p, t1=t1, t2=t2, k=kk)
        out.append(BoundReport(theorem, disk, rep, t1=float(t1), t2=float(t2), k=kk, alpha=w.alpha, beta=w.beta))
    return _best(out)


def bound_thm17(p: Polynomial, t1: float, t2: float, k: int | None = None, tol: float | None = None,
                wedge: Wedge | None = None) -> BoundReport:
    rep = hyp.check_thm17(p, t1, t2, tol)
    _require(rep)
    return _thm17_reports(Theorem.THM17, rep, p, t1, t2, k, wedge)


def bound_cor19(p: Polynomial, t: float, k: int | None = None, tol: float | None = None,
                wedge: Wedge | None = None) -> BoundReport:
    """The t2 = 0 case of :func:`bound_thm17`, under the unimodal-chain hypothesis."""
    rep = hyp.check_cor19(p, t, tol)
    _require(rep)
    return _thm17_reports(Theorem.COR19, rep, p, t, 0.0, k, wedge)


def bound_thm110(p: Polynomial, t1: float, t2: float, k: int | None = None, m: int | None = None,
                 tol: float | None = None) -> BoundReport:
    rep = hyp.check_thm110(p, t1, t2, tol)
    _require(rep)
    center = thm110_center(p, t1, t2)
    out = []
    for kk, mm in itertools.product(_pick(rep.k_range, k, "k", rep), _pick(rep.m_range, m, "m", rep)):
        r = thm110_radius(p, t1, t2, kk, mm)
        disk = _make_disk(Theorem.THM110, center, r, p=p, t1=t1, t2=t2, k=kk, m=mm)
        out.append(BoundReport(Theorem.THM110, disk, rep, t1=float(t1), t2=float(t2), k=kk, m=mm))
    return _best(out)


def bound_cor112(p: Polynomial, t1: float, t2: float, k: int | None = None, tol: float | None = None) -> BoundReport:
    rep = hyp.check_cor112(p, t1, t2, tol)
    _require(rep)
    center = thm17_center(p, t1, t2)
    out = []
    for kk in _pick(rep.k_range, k, "k", rep):
        r = cor112_radius(p, t1, t2, kk)
        # this radius exceeds the thm110 radius by 2(t2 + a_{n-1}/a_n)
        log.debug("cor112 k=%d: radius %.17g vs thm110 %.17g", kk, r, thm110_radius(p, t1, t2, kk, 0))
        disk = _make_disk(Theorem.COR112, center, r, p=p, t1=t1, t2=t2, k=kk)
        out.append(BoundReport(Theorem.COR112, disk, rep, t1=float(t1), t2=float(t2), k=kk))
    return _best(out)


def bound(theorem: Theorem, p: Polynomial, t1=None, t2=None, k=None, m=None, tol=None) -> BoundReport:
    """Dispatch by theorem. For aziz_t and cor19, ``t1`` is the single parameter t."""
    if theorem is Theorem.EK:
        return bound_ek(p, tol)
    if theorem is Theorem.GOVIL_RAHMAN:
        return bound_govil_rahman(p, tol)
    if theorem is Theorem.AZIZ_REAL:
        return bound_aziz_real(p, t1, t2, tol)
    if theorem is Theorem.AZIZ_T:
        return bound_aziz_t(p, t1, k, tol)
    if theorem is Theorem.COR19:
        return bound_cor19(p, t1, k, tol)
    if theorem is Theorem.RSM_COMPLEX:
        return bound_rsm_complex(p, t1, t2, k, tol)
    if theorem is Theorem.THM17:
        return bound_thm17(p, t1, t2, k, tol)
    if theorem is Theorem.COR112:
        return bound_cor112(p, t1, t2, k, tol)
    if theorem is Theorem.RSM_PARTS:
        return bound_rsm_parts(p, t1, t2, k, m, tol)
    if theorem is Theorem.THM110:
        return bound_thm110(p, t1, t2, k, m, tol)
    raise ValueError(theorem)


def best_bound(p: Polynomial, reports: list[BoundReport]) -> BoundReport:
    """Report with the smallest enclosing radius; ties go to the earlier theorem."""
    if not reports:
        raise ValueError("no reports to choose from")
    if not all(r.ok for r in reports):
        raise ValueError("every report must have satisfied hypotheses")
    return min(reports, key=lambda r: (r.enclosing, r.theorem.order))
