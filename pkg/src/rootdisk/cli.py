"""
Command-line front end.

Usage:
    rootdisk bound   --theorem thm17 --t1 1 --t2 0 poly.json
    rootdisk check   --theorem thm110 --t1 2 --t2 0 --coeffs "4;1;1;1"
    rootdisk search  --theorem aziz_real --config search.json poly.json
    rootdisk verify  --theorem ek --coeffs "1;2;3"
    rootdisk compare --format csv poly.json
    rootdisk gen     --checker thm17 --n 6 --k 2 --seed 7 --out inst.json

Exit codes: 0 success, 1 hypotheses fail, 2 parse/config error,
3 anomaly (negative radius or a root outside a disk).
"""

from __future__ import annotations

import csv
import io
import json
import sys
from pathlib import Path

import click

from . import bounds as bd
from . import hypotheses as hyp
from . import oracle
from .core import HypothesisError, Polynomial, RadiusAnomaly, cauchy_bound
from .genpoly import GenerationError, GenSpec, generate
from .hypotheses import Theorem
from .search import PARAMETERIZED, SearchConfig, optimize_params

EXIT_OK, EXIT_INFEASIBLE, EXIT_PARSE, EXIT_ANOMALY = 0, 1, 2, 3

CSV_COLUMNS = [
    "theorem", "t1", "t2", "k", "m", "alpha", "beta",
    "center_re", "center_im", "radius", "enclosing", "tightness", "contained",
]
THEOREM_NAMES = [t.value for t in Theorem]


def parse_inline(text: str) -> Polynomial:
    """``"re,im;re,im;..."`` (ascending); an entry without a comma is real."""
    coeffs = []
    for entry in text.split(";"):
        entry = entry.strip()
        if not entry:
            continue
        parts = [x.strip() for x in entry.split(",")]
        if len(parts) == 1:
            coeffs.append(complex(float(parts[0]), 0.0))
        elif len(parts) == 2:
            coeffs.append(complex(float(parts[0]), float(parts[1])))
        else:
            raise ValueError(f"bad coefficient entry {entry!r}")
    return Polynomial(coeffs)


def _fail(code: int, msg: str):
    click.echo(f"error: {msg}", err=True)
    sys.exit(code)


def _load_poly(path, coeffs) -> Polynomial:
    if (path is None) == (coeffs is None):
        _fail(EXIT_PARSE, "give exactly one of INPUT or --coeffs")
    try:
        if coeffs is not None:
            return parse_inline(coeffs)
        return Polynomial.load(path)
    except (OSError, ValueError) as exc:
        _fail(EXIT_PARSE, str(exc))


def _load_config(path, **overrides) -> SearchConfig:
    try:
        return SearchConfig.load(path, **overrides)
    except (OSError, ValueError, TypeError) as exc:
        _fail(EXIT_PARSE, f"config: {exc}")


def _row(report: bd.BoundReport | None, theorem: Theorem, tight=None, contained=None) -> dict:
    if report is None:
        return {"theorem": theorem.value, **{c: None for c in CSV_COLUMNS[1:]}}
    c = report.disk.center
    return {
        "theorem": report.theorem.value,
        "t1": report.t1, "t2": report.t2, "k": report.k, "m": report.m,
        "alpha": report.alpha, "beta": report.beta,
        "center_re": c.real, "center_im": c.imag,
        "radius": report.disk.radius, "enclosing": report.enclosing,
        "tightness": tight, "contained": contained,
    }


def _cell(v) -> str:
    if v is None:
        return ""
    if isinstance(v, bool):
        return "true" if v else "false"
    if isinstance(v, float):
        return repr(v)
    return str(v)


def _emit_rows(rows: list[dict], fmt: str, columns=CSV_COLUMNS, extra: dict | None = None):
    if fmt == "json":
        payload = rows if extra is None else {**extra, "rows": rows}
        click.echo(json.dumps(payload, indent=2))
    elif fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(columns)
        for r in rows:
            w.writerow([_cell(r.get(c)) for c in columns])
        click.echo(buf.getvalue(), nl=False)
    else:
        for r in rows:
            click.echo("  ".join(f"{c}={_cell(r.get(c))}" for c in columns if r.get(c) is not None))


def _emit_obj(obj: dict, fmt: str):
    if fmt == "text":
        for k, v in obj.items():
            click.echo(f"{k}: {v}")
    elif fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(list(obj))
        w.writerow([_cell(v) if not isinstance(v, (list, dict)) else json.dumps(v) for v in obj.values()])
        click.echo(buf.getvalue(), nl=False)
    else:
        click.echo(json.dumps(obj, indent=2))


def _theorem(ctx, param, value):
    return None if value is None else Theorem.parse(value)


input_arg = click.argument("input", required=False, type=click.Path(dir_okay=False))
coeffs_opt = click.option("--coeffs", help='Inline coefficients "re,im;re,im;..." in ascending order.')
theorem_opt = click.option("--theorem", "theorem", required=True, type=click.Choice(THEOREM_NAMES, case_sensitive=False),
                           callback=_theorem)
format_opt = click.option("--format", "fmt", type=click.Choice(["json", "csv", "text"]), default="json", show_default=True)
tol_opt = click.option("--tol", type=float, default=None, help="Condition tolerance (checks default to 1e-10 * max|a_j|, search to 0).")


def _params(f):
    f = click.option("--t1", type=float, default=None, help="t1 (or t for aziz_t / cor19).")(f)
    f = click.option("--t2", type=float, default=None)(f)
    f = click.option("--k", "k", type=int, default=None)(f)
    f = click.option("--m", "m", type=int, default=None)(f)
    return f


def _search_opts(f):
    f = click.option("--config", type=click.Path(dir_okay=False), default=None,
                     help="JSON search config (default $ROOTDISK_CONFIG).")(f)
    f = click.option("--grid-points", type=int, default=None)(f)
    f = click.option("--refine-iterations", type=int, default=None)(f)
    f = click.option("--t1-max-factor", type=float, default=None)(f)
    return f


def _needs_params(theorem: Theorem) -> bool:
    return theorem in PARAMETERIZED


def _resolve(p, theorem, t1, t2, k, m, tol, cfg_kwargs) -> bd.BoundReport | None:
    """Bound at explicit parameters, or via search when they are omitted."""
    if _needs_params(theorem) and t1 is None:
        cfg = _load_config(**cfg_kwargs, tol=tol)
        return optimize_params(p, theorem, cfg).best
    if t2 is None:
        t2 = 0.0
    return bd.bound(theorem, p, t1, t2, k=k, m=m, tol=tol)


@click.group()
def cli():
    """Zero-containment disks for complex polynomials."""


@cli.command()
@input_arg
@coeffs_opt
@theorem_opt
@_params
@tol_opt
@format_opt
def bound(input, coeffs, theorem, t1, t2, k, m, tol, fmt):
    """Evaluate one theorem's disk at given parameters."""
    p = _load_poly(input, coeffs)
    if _needs_params(theorem) and t1 is None:
        _fail(EXIT_PARSE, f"{theorem.value} needs --t1 (use `search` to find parameters)")
    try:
        rep = bd.bound(theorem, p, t1, 0.0 if t2 is None else t2, k=k, m=m, tol=tol)
    except HypothesisError as exc:
        click.echo(f"infeasible: {exc}", err=True)
        sys.exit(EXIT_INFEASIBLE)
    except RadiusAnomaly as exc:
        _fail(EXIT_ANOMALY, str(exc))
    if fmt == "json":
        click.echo(json.dumps(rep.to_json(), indent=2))
    else:
        _emit_rows([_row(rep, theorem)], fmt)


@cli.command()
@input_arg
@coeffs_opt
@theorem_opt
@_params
@tol_opt
@format_opt
def check(input, coeffs, theorem, t1, t2, k, m, tol, fmt):
    """Report whether a theorem's hypotheses hold."""
    p = _load_poly(input, coeffs)
    rep = hyp.check(theorem, p, t1, 0.0 if t2 is None else t2, tol)
    _emit_obj(rep.to_json(), fmt)
    sys.exit(EXIT_OK if rep.ok else EXIT_INFEASIBLE)


@cli.command()
@input_arg
@coeffs_opt
@theorem_opt
@_search_opts
@tol_opt
@format_opt
def search(input, coeffs, theorem, config, grid_points, refine_iterations, t1_max_factor, tol, fmt):
    """Minimize the enclosing radius over feasible (t1, t2)."""
    p = _load_poly(input, coeffs)
    cfg = _load_config(config, grid_points=grid_points, refine_iterations=refine_iterations,
                       t1_max_factor=t1_max_factor, tol=tol)
    try:
        res = optimize_params(p, theorem, cfg)
    except RadiusAnomaly as exc:
        _fail(EXIT_ANOMALY, str(exc))
    if fmt == "json":
        click.echo(json.dumps(res.to_json(), indent=2))
    else:
        _emit_rows([_row(res.best, theorem)], fmt)
    sys.exit(EXIT_INFEASIBLE if res.infeasible else EXIT_OK)


def _verdict(p: Polynomial, rep: bd.BoundReport, rs: oracle.RootSet):
    tol = 1e-8 * max(1.0, cauchy_bound(p))
    contained, worst = oracle.verify_containment(rs, rep.disk, tol)
    return contained, worst, oracle.tightness(rs, rep.disk)


@cli.command()
@input_arg
@coeffs_opt
@theorem_opt
@_params
@_search_opts
@tol_opt
@format_opt
def verify(input, coeffs, theorem, t1, t2, k, m, config, grid_points, refine_iterations, t1_max_factor, tol, fmt):
    """Compute a disk and check it against numerically computed roots."""
    p = _load_poly(input, coeffs)
    cfg_kwargs = dict(path=config, grid_points=grid_points, refine_iterations=refine_iterations,
                      t1_max_factor=t1_max_factor)
    try:
        rep = _resolve(p, theorem, t1, t2, k, m, tol, cfg_kwargs)
    except HypothesisError as exc:
        click.echo(f"infeasible: {exc}", err=True)
        sys.exit(EXIT_INFEASIBLE)
    except RadiusAnomaly as exc:
        _fail(EXIT_ANOMALY, str(exc))
    if rep is None:
        click.echo(f"infeasible: no feasible parameters found for {theorem.value}", err=True)
        sys.exit(EXIT_INFEASIBLE)
    rs = oracle.roots(p)
    if not rs.converged:
        _fail(EXIT_ANOMALY, "root finder did not converge")
    contained, worst, tight = _verdict(p, rep, rs)
    if fmt == "json":
        out = rep.to_json()
        out.update(contained=contained, max_violation=worst, tightness=tight, roots=rs.to_json()["roots"])
        click.echo(json.dumps(out, indent=2))
    else:
        _emit_rows([_row(rep, theorem, tight, contained)], fmt)
    sys.exit(EXIT_OK if contained else EXIT_ANOMALY)


@cli.command()
@input_arg
@coeffs_opt
@_params
@_search_opts
@tol_opt
@format_opt
def compare(input, coeffs, t1, t2, k, m, config, grid_points, refine_iterations, t1_max_factor, tol, fmt):
    """Every applicable theorem side by side, with oracle tightness.

    The extra ``nested`` column is set on thm17 / thm110 rows: whether the
    disk's enclosing radius stays within the rsm_complex / rsm_parts radius
    at the same parameters.
    """
    p = _load_poly(input, coeffs)
    cfg_kwargs = dict(path=config, grid_points=grid_points, refine_iterations=refine_iterations,
                      t1_max_factor=t1_max_factor)
    rs = oracle.roots(p)
    if not rs.converged:
        _fail(EXIT_ANOMALY, "root finder did not converge")
    rows, anomaly = [], False
    for theorem in Theorem:
        try:
            rep = _resolve(p, theorem, t1, t2, None if theorem in (Theorem.EK, Theorem.GOVIL_RAHMAN) else k,
                           m, tol, cfg_kwargs)
        except HypothesisError:
            continue
        except RadiusAnomaly as exc:
            click.echo(f"anomaly: {exc}", err=True)
            anomaly = True
            continue
        if rep is None:
            continue
        contained, _, tight = _verdict(p, rep, rs)
        anomaly |= not contained
        row = _row(rep, theorem, tight, contained)
        row["nested"] = _nested_flag(p, rep)
        rows.append(row)
    _emit_rows(rows, fmt, columns=CSV_COLUMNS + ["nested"],
               extra={"max_root_modulus": rs.max_modulus} if fmt == "json" else None)
    if anomaly:
        sys.exit(EXIT_ANOMALY)
    sys.exit(EXIT_OK if rows else EXIT_INFEASIBLE)


def _nested_flag(p: Polynomial, rep: bd.BoundReport):
    if rep.t1 is None or rep.t1 <= rep.t2:
        return None
    scale = max(1.0, cauchy_bound(p))
    if rep.theorem is Theorem.THM17:
        outer = bd.rsm_complex_radius(p, rep.t1, rep.t2, rep.k, rep.alpha)
    elif rep.theorem is Theorem.THM110:
        outer = bd.rsm_parts_radius(p, rep.t1, rep.t2, rep.k, rep.m)
    else:
        return None
    return bool(rep.enclosing <= outer + 1e-10 * scale)


@cli.command()
@click.option("--checker", type=click.Choice(["thm17", "thm110"]), required=True)
@click.option("--n", "n", type=int, required=True)
@click.option("--k", "k", type=int, required=True)
@click.option("--m", "m", type=int, default=None)
@click.option("--t1", type=float, default=1.0, show_default=True)
@click.option("--t2", type=float, default=0.0, show_default=True)
@click.option("--alpha", type=float, default=0.0, show_default=True)
@click.option("--seed", type=int, default=0, show_default=True)
@click.option("--out", type=click.Path(dir_okay=False), default=None,
              help="Write the polynomial here and the sidecar next to it (*.meta.json).")
def gen(checker, n, k, m, t1, t2, alpha, seed, out):
    """Generate an instance that satisfies a theorem's hypotheses."""
    spec = GenSpec(n=n, k=k, m=m, t1=t1, t2=t2, alpha=alpha, seed=seed)
    try:
        p = generate(spec, checker)
    except GenerationError as exc:
        _fail(EXIT_INFEASIBLE, str(exc))
    sidecar = {"spec": spec.to_json(), "checker": checker, "ok": True}
    if out is None:
        click.echo(json.dumps(p.to_json()))
        click.echo(json.dumps(sidecar))
        return
    path = Path(out)
    path.write_text(json.dumps(p.to_json(), indent=2) + "\n")
    meta = path.with_name(path.stem + ".meta.json")
    meta.write_text(json.dumps(sidecar, indent=2) + "\n")
    click.echo(f"wrote {path} and {meta}")


def main():
    cli()


if __name__ == "__main__":
    main()
