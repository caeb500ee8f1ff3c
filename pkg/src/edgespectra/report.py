"""Run reports: checker batteries over one graph or a whole sweep."""

from __future__ import annotations

import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Any, Iterable

from . import __version__
from .graph import Graph
from .graph6 import parse_graph6, to_graph6
from .poly import IntPoly, format_poly, integer_spectrum
from .theorems import CHECKERS, charpoly, edge_matrices

SCHEMA = 1


@dataclass
class RunReport:
    input: str
    checkers: list[str]
    verdicts: list[dict[str, Any]] = field(default_factory=list)
    collisions: list[dict[str, Any]] | None = None

    @property
    def summary(self) -> dict[str, int]:
        counts = {"passed": 0, "failed": 0, "not_applicable": 0}
        for v in self.verdicts:
            counts[v["status"]] += 1
        return counts

    @property
    def failures(self) -> list[dict[str, Any]]:
        return [
            {"graph6": v["graph6"], "checker": v["checker"], "orientation": "canonical"}
            for v in self.verdicts
            if v["status"] == "failed"
        ]

    @property
    def ok(self) -> bool:
        return self.summary["failed"] == 0

    def to_json(self) -> dict[str, Any]:
        out: dict[str, Any] = {
            "schema": SCHEMA,
            "tool": "edgespectra",
            "version": __version__,
            "input": self.input,
            "checkers": self.checkers,
            "summary": self.summary,
            "failures": self.failures,
            "verdicts": self.verdicts,
        }
        if self.collisions is not None:
            out["collisions"] = self.collisions
        return out

    def to_text(self) -> str:
        lines = []
        for v in self.verdicts:
            status = {"passed": "PASS", "failed": "FAIL", "not_applicable": "N/A "}[v["status"]]
            note = f"  ({v['reason']})" if v["reason"] else ""
            lines.append(f"{status}  {v['checker']:<19} {v['graph6']:<12} {v['timing_ms']:9.2f} ms{note}")
        s = self.summary
        lines.append(f"passed={s['passed']} failed={s['failed']} not_applicable={s['not_applicable']}")
        for c in self.collisions or ():
            spec = c.get("integer_spectrum")
            if spec is not None:
                shown = "{" + ", ".join(f"{r}:{k}" for r, k in spec.items()) + "}"
            else:
                shown = format_poly(IntPoly.from_json(c["charpoly"]))
            lines.append(f"cospectral: {' '.join(c['graphs'])}  spectrum {shown}")
        return "\n".join(lines)


def run_checkers(g: Graph, names: list[str], graph6: str | None = None) -> list[dict[str, Any]]:
    key = graph6 if graph6 is not None else to_graph6(g)
    out = []
    for name in names:
        t0 = time.perf_counter()
        verdict = CHECKERS[name](g)
        ms = (time.perf_counter() - t0) * 1000.0
        entry = verdict.to_json(key)
        entry["status"] = verdict.status
        entry["timing_ms"] = round(ms, 3)
        out.append(entry)
    return out


def _sweep_task(args: tuple[str, tuple[str, ...]]) -> tuple[str, list[dict[str, Any]], tuple[int, ...]]:
    g6, names = args
    g = parse_graph6(g6)
    verdicts = run_checkers(g, list(names), g6)
    return g6, verdicts, charpoly(edge_matrices(g).N).coeffs


def _collisions(polys: dict[str, tuple[int, ...]]) -> list[dict[str, Any]]:
    groups: dict[tuple[int, ...], list[str]] = {}
    for g6, coeffs in polys.items():
        groups.setdefault(coeffs, []).append(g6)
    out = []
    for coeffs, members in groups.items():
        if len(members) < 2:
            continue
        p = IntPoly(coeffs)
        spec = integer_spectrum(p)
        out.append(
            {
                "graphs": sorted(members),
                "charpoly": p.to_json(),
                "integer_spectrum": None if spec is None else {str(r): k for r, k in spec.items()},
            }
        )
    return sorted(out, key=lambda c: c["graphs"])


def sweep(
    graphs: Iterable[Graph],
    names: list[str],
    *,
    jobs: int = 1,
    input_descriptor: str = "",
    collisions: bool = False,
) -> RunReport:
    """Run ``names`` on every graph; ordering is by graph6 key whatever ``jobs`` is."""
    keys = sorted({to_graph6(g) for g in graphs})
    tasks = [(k, tuple(names)) for k in keys]
    if jobs <= 1:
        results = [_sweep_task(t) for t in tasks]
    else:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(_sweep_task, tasks, chunksize=max(1, len(tasks) // (8 * jobs))))
    results.sort(key=lambda r: r[0])
    report = RunReport(input=input_descriptor, checkers=list(names))
    for _, verdicts, _ in results:
        report.verdicts.extend(verdicts)
    if collisions:
        report.collisions = _collisions({g6: coeffs for g6, _, coeffs in results})
    return report
