"""Batch verification over seeded random corpora."""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from typing import Iterable

from .analysis import CHECKS, PASS, analyze
from .config import DEFAULT, Tolerances
from .document import PolygonDocument
from .generator import PRNG_NAME, GenSpec, derive_seed, generate

SCHEMA = 1

RESIDUALS = {
    "density_identity_residual": ("density_identity", "residual"),
    "density_identity_rearranged": ("density_identity", "rearranged_residual"),
    "gauss_bonnet_residual": ("gauss_bonnet", "residual"),
    "defect_area_residual": ("defect_area", "max_residual"),
    "right_angle_error": ("defect_area", "max_right_angle_error"),
}


def polygon_seed(seed: int, n: int, k: int) -> int:
    return derive_seed(seed, n, k)


def check_one(task) -> dict:
    """Generate and analyze polygon ``k`` of size ``n``; return a compact record."""
    n, k, seed, tol, flip_edge = task
    spec = GenSpec(n, polygon_seed(seed, n, k))
    P, stats = generate(spec, tol)
    rep = analyze(P, tol, flip_edge=flip_edge)
    checks = rep["checks"]
    rec = {
        "n": n,
        "k": k,
        "seed": spec.seed,
        "stats": stats.to_dict(),
        "status": {c: checks[c]["status"] for c in CHECKS},
        "N": rep["aggregates"].get("N"),
        "den_evolute": rep["aggregates"].get("den_evolute"),
        "passed": rep["passed"],
    }
    for key, (check, field) in RESIDUALS.items():
        rec[key] = checks[check].get(field)
    if not rep["passed"]:
        rec["document"] = PolygonDocument.from_polygon(P, metadata={"spec": spec.to_dict(), "prng": PRNG_NAME}).to_dict()
    return rec


def _tasks(count: int, n_values: Iterable[int], seed: int, tol: Tolerances, flip_edge):
    for n in n_values:
        for k in range(count):
            yield (n, k, seed, tol, flip_edge)


def run(count: int, n_min: int, n_max: int, seed: int, tol: Tolerances = DEFAULT,
        jobs: int = 1, flip_edge: int | None = None) -> dict:
    """Verify every check on ``count`` polygons for each ``n`` in ``[n_min, n_max]``.

    Results are ordered by ``(n, k)`` whatever the completion order, so the
    summary depends only on the arguments.
    """
    if n_min < 4:
        raise ValueError("verification needs n >= 4 (the four-vertex theorem's hypothesis)")
    if n_max < n_min or count < 1:
        raise ValueError("empty verification range")
    tasks = list(_tasks(count, range(n_min, n_max + 1), seed, tol, flip_edge))
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            records = list(pool.map(check_one, tasks, chunksize=max(1, len(tasks) // (8 * jobs))))
    else:
        records = [check_one(t) for t in tasks]
    return summarize(records, count, n_min, n_max, seed, tol)


def summarize(records: list[dict], count: int, n_min: int, n_max: int, seed: int, tol: Tolerances) -> dict:
    per_n = []
    first_failure = None
    for n in range(n_min, n_max + 1):
        rows = [r for r in records if r["n"] == n]
        checks = {c: {"pass": 0, "fail": 0} for c in CHECKS}
        hist: dict[str, int] = {}
        worst = {key: 0.0 for key in RESIDUALS}
        stats = {}
        max_den_e = None
        for r in rows:
            for c in CHECKS:
                checks[c]["pass" if r["status"][c] == PASS else "fail"] += 1
            if r["N"] is not None:
                hist[str(r["N"])] = hist.get(str(r["N"]), 0) + 1
            for key in RESIDUALS:
                if r[key] is not None:
                    worst[key] = max(worst[key], r[key])
            if r["den_evolute"] is not None:
                max_den_e = r["den_evolute"] if max_den_e is None else max(max_den_e, r["den_evolute"])
            for key, v in r["stats"].items():
                stats[key] = stats.get(key, 0) + v
            if not r["passed"] and first_failure is None:
                first_failure = {
                    "n": r["n"],
                    "k": r["k"],
                    "seed": r["seed"],
                    "failed": [c for c in CHECKS if r["status"][c] != PASS],
                    "document": r["document"],
                }
        per_n.append({
            "n": n,
            "polygons": len(rows),
            "passed": sum(r["passed"] for r in rows),
            "checks": checks,
            "max_residuals": worst,
            "max_den_evolute": max_den_e,
            "N_histogram": dict(sorted(hist.items(), key=lambda kv: int(kv[0]))),
            "generation": stats,
        })
    return {
        "schema": SCHEMA,
        "prng": PRNG_NAME,
        "seed": seed,
        "count": count,
        "n_range": [n_min, n_max],
        "tolerances": tol.to_dict(),
        "per_n": per_n,
        "all_pass": first_failure is None,
        "first_failure": first_failure,
    }


def format_table(summary: dict) -> str:
    short = {"compare_oracle": "CMP", "graph_balance": "BAL", "cusp_extremal": "CUSP",
             "evolute_density_bound": "DENE", "density_identity": "IDENT", "four_vertex": "FOUR",
             "gauss_bonnet": "GB", "defect_area": "DA"}
    head = f"{'n':>3} {'count':>6} " + " ".join(f"{short[c]:>6}" for c in CHECKS)
    head += f" {'max id res':>11} {'max den(E)':>11}  N histogram"
    lines = [head]
    for row in summary["per_n"]:
        cells = " ".join(f"{row['checks'][c]['pass']:>6}" for c in CHECKS)
        den = row["max_den_evolute"]
        den_s = f"{den:>11.6f}" if den is not None else f"{'-':>11}"
        hist = " ".join(f"{k}:{v}" for k, v in row["N_histogram"].items())
        lines.append(f"{row['n']:>3} {row['polygons']:>6} {cells} "
                     f"{row['max_residuals']['density_identity_residual']:>11.3e} {den_s}  {hist}")
    lines.append("ALL PASS" if summary["all_pass"] else
                 f"FAILURE: n={summary['first_failure']['n']} seed={summary['first_failure']['seed']} "
                 f"checks={summary['first_failure']['failed']}")
    return "\n".join(lines)
