"""
Grid search over the free parameters (t1, t2) of a theorem.

Points are laid out as t1 on [eps, t1_max_factor * cauchy_bound] and
t2 = lam * t1 with lam on [0, 1]. Feasibility is tested in the coordinates
u = t1*t2, v = t1 - t2, where every condition s_r is linear, so a whole grid
is one matrix product. The incumbent is then refined by repeated 2-D
subdivision, followed by a finer 1-D subdivision along t1 that can settle
on the feasibility boundary.
"""

from __future__ import annotations

import json
import os
from dataclasses import dataclass, field, fields
from pathlib import Path

import numpy as np

from . import bounds as bd
from . import hypotheses as hyp
from .core import Polynomial, RadiusAnomaly, cauchy_bound
from .hypotheses import Theorem
from .wedge import fit_wedge

PARAMETERIZED = (
    Theorem.AZIZ_REAL,
    Theorem.AZIZ_T,
    Theorem.RSM_COMPLEX,
    Theorem.RSM_PARTS,
    Theorem.THM17,
    Theorem.COR19,
    Theorem.THM110,
    Theorem.COR112,
)
_T_ONLY = (Theorem.AZIZ_T, Theorem.COR19)
_STRICT = (Theorem.AZIZ_REAL, Theorem.RSM_COMPLEX, Theorem.RSM_PARTS)

REFINE_FACTOR = 8
POLISH_POINTS = 65
POLISH_SHRINK = 16
POLISH_ROUNDS = 13
EPS_FACTOR = 1e-6


@dataclass(frozen=True)
class SearchConfig:
    t1_max_factor: float = 2.0
    grid_points: int = 64
    refine_iterations: int = 3
    # exact by default: the polish step walks onto the feasibility edge, and a
    # positive tolerance would let it step slightly outside the hypotheses
    tol: float = 0.0

    def __post_init__(self):
        if self.grid_points < 2:
            raise ValueError("grid_points must be >= 2")
        if self.refine_iterations < 0:
            raise ValueError("refine_iterations must be >= 0")
        if not self.t1_max_factor > 0:
            raise ValueError("t1_max_factor must be positive")
        if self.tol is None or self.tol < 0:
            raise ValueError("tol must be nonnegative")

    @classmethod
    def from_json(cls, obj: dict) -> "SearchConfig":
        known = {f.name for f in fields(cls)}
        extra = set(obj) - known
        if extra:
            raise ValueError(f"unknown config keys: {sorted(extra)}")
        return cls(**obj)

    @classmethod
    def load(cls, path: str | os.PathLike | None = None, **overrides) -> "SearchConfig":
        """Read a JSON config (default: $ROOTDISK_CONFIG if set); keyword overrides win."""
        path = path or os.environ.get("ROOTDISK_CONFIG")
        base = {}
        if path:
            base = json.loads(Path(path).read_text())
            if not isinstance(base, dict):
                raise ValueError("config file must hold a JSON object")
        base.update({k: v for k, v in overrides.items() if v is not None})
        return cls.from_json(base)


@dataclass
class SearchResult:
    best: bd.BoundReport | None
    evaluations: int
    feasible_fraction: float
    visited: list[tuple[float, float, float]] = field(default_factory=list, repr=False)

    @property
    def infeasible(self) -> bool:
        return self.best is None

    def to_json(self) -> dict:
        return {
            "best": None if self.best is None else self.best.to_json(),
            "infeasible": self.infeasible,
            "evaluations": self.evaluations,
            "feasible_fraction": self.feasible_fraction,
        }


class _Evaluator:
    """Vectorized feasibility and enclosing radius for one (polynomial, theorem)."""

    def __init__(self, p: Polynomial, theorem: Theorem, tol: float):
        self.p, self.theorem, self.tol = p, theorem, tol
        self.n = p.degree
        self.wedge = fit_wedge(p)
        self.dead = self._gate()

    def _gate(self) -> bool:
        p, th, n = self.p, self.theorem, self.n
        if th in (Theorem.THM17, Theorem.COR19) and n < 3:
            return True
        if th in (Theorem.AZIZ_T, Theorem.COR19, Theorem.RSM_COMPLEX, Theorem.THM17) and self.wedge is None:
            return True
        if th in _T_ONLY and p.moduli[0] == 0:
            return True
        if th is Theorem.AZIZ_REAL and not p.is_real:
            return True
        if th in (Theorem.RSM_PARTS, Theorem.THM110) and not p.coeffs[-1].real > 0:
            return True
        if th is Theorem.COR112 and not (p.is_real and all(c.real > 0 for c in p.coeffs)):
            return True
        return False

    def _masks(self, c, u, v, cap):
        s = hyp.condition_matrix(c, u, v)
        return hyp.split_masks(s, self.tol)[:, : cap + 1]

    @staticmethod
    def _min_over(masks, values):
        """Per row: min of values[:, j] over columns with masks[:, j], and the first argmin."""
        vals = np.where(masks, values, np.inf)
        idx = np.argmin(vals, axis=1)
        return vals[np.arange(vals.shape[0]), idx], idx

    def __call__(self, t1: np.ndarray, t2: np.ndarray):
        """Return (enclosing, k, m); enclosing is inf where the hypotheses fail."""
        t1 = np.asarray(t1, dtype=float)
        t2 = np.asarray(t2, dtype=float)
        size = t1.size
        inf = np.full(size, np.inf)
        none = np.full(size, -1)
        if self.dead:
            return inf, none, none
        p, th, n = self.p, self.theorem, self.n
        u, v = t1 * t2, t1 - t2
        ok = (t1 > t2) if th in _STRICT else (t1 >= t2)
        ok &= (t1 > 0) & (t2 >= 0)
        alpha = self.wedge.alpha if self.wedge is not None else 0.0

        if th is Theorem.AZIZ_REAL:
            s = hyp.condition_matrix(p.real_parts, u, v)
            ok &= np.all(s >= -self.tol, axis=1)
            return np.where(ok, t1, np.inf), none, none

        if th in (Theorem.AZIZ_T, Theorem.RSM_COMPLEX, Theorem.THM17, Theorem.COR19, Theorem.COR112):
            if th is Theorem.COR112:
                c, cap = p.real_parts, n - 1
            else:
                c = p.moduli
                cap = n - 3 if th in (Theorem.THM17, Theorem.COR19) else n
            masks = self._masks(c, u, v, cap) & ok[:, None]
            cols = []
            for k in range(cap + 1):
                if not masks[:, k].any():
                    cols.append(np.full(size, np.inf))
                    continue
                if th is Theorem.AZIZ_T:
                    r = bd.aziz_t_radius(p, t1, k, alpha)
                elif th is Theorem.RSM_COMPLEX:
                    r = bd.rsm_complex_radius(p, t1, t2, k, alpha)
                elif th is Theorem.COR112:
                    r = bd.cor112_radius(p, t1, t2, k)
                else:
                    r = bd.thm17_radius(p, t1, t2, k, alpha)
                cols.append(np.broadcast_to(r, (size,)))
            radius = np.stack(cols, axis=1)
            self._anomaly(masks, radius, t1, t2)
            best_r, k = self._min_over(masks, radius)
            if th in (Theorem.THM17, Theorem.COR19, Theorem.COR112):
                best_r = best_r + np.abs(bd.thm17_center(p, t1, t2))
            feasible = np.isfinite(best_r)
            return np.where(feasible, best_r, np.inf), np.where(feasible, k, -1), none

        # real/imaginary-part theorems: the radius separates into a k-term and an m-term
        cap = n if th is Theorem.RSM_PARTS else n - 1
        kmask = self._masks(p.real_parts, u, v, cap) & ok[:, None]
        mmask = self._masks(p.imag_parts, u, v, cap) & ok[:, None]
        re, im = p.real_parts, p.imag_parts
        at = lambda x, j: x[j] if j <= n else 0.0  # noqa: E731
        shift = 0 if th is Theorem.RSM_PARTS else 1

        def terms(x, mask):
            cols = [np.full(size, np.inf)] * (cap + 1)
            for j in np.flatnonzero(mask.any(axis=0)):
                col = bd._scaled(at(x, j) + t2 * at(x, j + 1), t1, n - j - shift)
                cols[j] = np.broadcast_to(col, (size,))
            return np.stack(cols, axis=1)

        kt, mt = terms(re, kmask), terms(im, mmask)
        kbest, k = self._min_over(kmask, kt)
        mbest, m = self._min_over(mmask, mt)
        feasible = np.isfinite(kbest) & np.isfinite(mbest)
        an = abs(p.coeffs[-1])
        with np.errstate(invalid="ignore"):
            if th is Theorem.RSM_PARTS:
                r = t1 / an * (2 * kbest + 2 * mbest - (re[n] + im[n]))
                c = 0.0
            else:
                r = (2 * kbest + 2 * mbest - (t2 * re[n] + t1 * im[n] + re[n - 1])) / an
                c = np.abs(bd.thm110_center(p, t1, t2))
        bad = feasible & ~(r >= 0)
        if bad.any():
            i = int(np.flatnonzero(bad)[0])
            raise RadiusAnomaly(f"{th.value}: negative radius at a feasible point",
                                p=p, t1=float(t1[i]), t2=float(t2[i]), k=int(k[i]), m=int(m[i]))
        enc = np.where(feasible, c + r, np.inf)
        return enc, np.where(feasible, k, -1), np.where(feasible, m, -1)

    def _anomaly(self, masks, radius, t1, t2):
        bad = masks & ~(radius >= 0)
        if bad.any():
            i, k = np.argwhere(bad)[0]
            raise RadiusAnomaly(f"{self.theorem.value}: negative radius at a feasible point",
                                p=self.p, t1=float(t1[i]), t2=float(t2[i]), k=int(k), radius=float(radius[i, k]))


def _grid(lo, hi, count):
    return np.linspace(lo, hi, count)


def _initial_axes(p: Polynomial, theorem: Theorem, cfg: SearchConfig):
    cb = cauchy_bound(p)
    eps = EPS_FACTOR * cb
    t1_axis = _grid(eps, cfg.t1_max_factor * cb, cfg.grid_points)
    lam_axis = np.array([0.0]) if theorem in _T_ONLY else _grid(0.0, 1.0, cfg.grid_points)
    return eps, cfg.t1_max_factor * cb, t1_axis, lam_axis


def _mesh(t1_axis, lam_axis):
    T1, L = np.meshgrid(t1_axis, lam_axis, indexing="ij")
    t1 = T1.ravel()
    return t1, L.ravel() * t1


def _argbest(enc, t1, t2):
    """Index of the minimal enclosing radius; ties to smallest t1, then smallest t2."""
    if not np.any(np.isfinite(enc)):
        return None
    order = np.lexsort((t2, t1, enc))
    return int(order[0])


def _tol_for(p, cfg):
    return cfg.tol


def feasible_region_sample(p: Polynomial, theorem: Theorem, cfg: SearchConfig | None = None):
    """Initial-grid points where the hypotheses hold, as (t1, t2, k, m) with canonical indices."""
    cfg = cfg or SearchConfig()
    if theorem not in PARAMETERIZED:
        raise ValueError(f"{theorem.value} has no free parameters")
    if theorem in (Theorem.THM17, Theorem.COR19) and p.degree < 3:
        return []
    ev = _Evaluator(p, theorem, _tol_for(p, cfg))
    _, _, t1_axis, lam_axis = _initial_axes(p, theorem, cfg)
    t1, t2 = _mesh(t1_axis, lam_axis)
    enc, _, _ = ev(t1, t2)
    out = []
    for i in np.flatnonzero(np.isfinite(enc)):
        rep = hyp.check(theorem, p, float(t1[i]), float(t2[i]), ev.tol)
        out.append((float(t1[i]), float(t2[i]), rep.k, rep.m))
    return out


def optimize_params(p: Polynomial, theorem: Theorem, cfg: SearchConfig | None = None) -> SearchResult:
    """Minimize the enclosing radius of ``theorem``'s disk over its feasible parameters."""
    cfg = cfg or SearchConfig()
    tol = _tol_for(p, cfg)
    if theorem is Theorem.EK or theorem is Theorem.GOVIL_RAHMAN:
        rep = hyp.check(theorem, p, tol=tol)
        best = bd.bound(theorem, p, tol=tol) if rep.ok else None
        return SearchResult(best, 1, 1.0 if rep.ok else 0.0)

    ev = _Evaluator(p, theorem, tol)
    eps, t1_max, t1_axis, lam_axis = _initial_axes(p, theorem, cfg)
    t1, t2 = _mesh(t1_axis, lam_axis)
    enc, ks, ms = ev(t1, t2)
    evaluations = t1.size
    feasible_fraction = float(np.mean(np.isfinite(enc)))
    visited = [(float(a), float(b), float(e)) for a, b, e in zip(t1, t2, enc) if np.isfinite(e)]

    i = _argbest(enc, t1, t2)
    if i is None:
        return SearchResult(None, evaluations, feasible_fraction, visited)
    best = (float(enc[i]), float(t1[i]), float(t2[i]), int(ks[i]), int(ms[i]))
    lam = 0.0 if t1[i] == 0 else float(t2[i] / t1[i])

    h1 = t1_axis[1] - t1_axis[0]
    hl = lam_axis[1] - lam_axis[0] if lam_axis.size > 1 else 0.0
    for _ in range(cfg.refine_iterations):
        half = REFINE_FACTOR
        ax1 = np.clip(best[1] + h1 * np.arange(-half, half + 1) / half, eps, t1_max)
        axl = np.clip(lam + hl * np.arange(-half, half + 1) / half, 0.0, 1.0) if hl else np.array([0.0])
        t1, t2 = _mesh(np.unique(ax1), np.unique(axl))
        enc, ks, ms = ev(t1, t2)
        evaluations += t1.size
        j = _argbest(enc, t1, t2)
        cand = (float(enc[j]), float(t1[j]), float(t2[j]), int(ks[j]), int(ms[j]))
        if cand[:3] < best[:3]:
            best = cand
            lam = 0.0 if cand[1] == 0 else cand[2] / cand[1]
        h1, hl = h1 / REFINE_FACTOR, hl / REFINE_FACTOR

    # final 1-D subdivision along t1 at a fixed t2/t1 ratio; each window spans
    # two grid spacings either side of the incumbent, so a feasibility edge
    # inside the window stays inside the next one
    h = h1
    for _ in range(POLISH_ROUNDS):
        if h <= 1e-15 * best[1]:
            break
        ax = np.unique(np.clip(best[1] + h * np.linspace(-1.0, 1.0, POLISH_POINTS), eps, t1_max))
        enc, ks, ms = ev(ax, lam * ax)
        evaluations += ax.size
        j = _argbest(enc, ax, lam * ax)
        if j is not None:
            cand = (float(enc[j]), float(ax[j]), float(lam * ax[j]), int(ks[j]), int(ms[j]))
            if cand[:3] < best[:3]:
                best = cand
        h /= POLISH_SHRINK

    _, bt1, bt2, bk, bm = best
    k = None if bk < 0 else bk
    m = None if bm < 0 else bm
    report = bd.bound(theorem, p, bt1, bt2, k=k, m=m, tol=tol)
    return SearchResult(report, evaluations, feasible_fraction, visited)
