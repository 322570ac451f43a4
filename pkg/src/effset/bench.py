"""Timing harness comparing the search against brute-force enumeration.

Instances are drawn per (criteria, constraints, variables) group over a
run of seeds. The brute-force pass is optional in the sense that it may
refuse oversized boxes; a refused pass counts as a solver win, since the
search returned an answer the enumerator could not.
"""
from __future__ import annotations

import csv
import statistics
import time
from dataclasses import dataclass
from typing import Mapping, Sequence

from . import branch_cut, oracle
from .errors import EnumerationBudgetExceeded
from .generator import GeneratorConfig, generate

SUMMARY_COLUMNS = (
    "r",
    "m",
    "n",
    "cpu_mean",
    "cpu_max",
    "cpu_min",
    "nodes_mean",
    "nodes_max",
    "nodes_min",
    "mu",
)

DETAIL_COLUMNS = (
    "r",
    "m",
    "n",
    "seed",
    "cpu",
    "nodes",
    "solutions",
    "oracle_cpu",
    "oracle_feasible",
    "oracle_efficient",
    "agreed",
    "win",
)


@dataclass(frozen=True)
class BenchRecord:
    r: int
    m: int
    n: int
    seed: int
    cpu: float
    nodes: int
    solutions: int
    oracle_cpu: float | None
    oracle_feasible: int | None
    oracle_efficient: int | None
    agreed: bool | None
    win: bool


def run_benchmark(
    groups: Sequence[tuple[int, int, int]],
    seeds: int = 10,
    base_seed: int = 0,
    oracle_budget: int = oracle.DEFAULT_BUDGET,
    generator_overrides: Mapping | None = None,
    compare: bool = True,
) -> list[BenchRecord]:
    """Each group is (criteria, constraints, variables). Returns one record
    per group and seed. compare=False skips the brute-force pass entirely."""
    overrides = dict(generator_overrides or {})
    records = []
    for r, m, n in groups:
        for offset in range(seeds):
            cfg = GeneratorConfig(
                num_vars=n,
                num_constraints=m,
                num_criteria=r,
                seed=base_seed + offset,
                **overrides,
            )
            inst = generate(cfg)

            start = time.perf_counter()
            report = branch_cut.run(inst, validate=False)
            cpu = time.perf_counter() - start

            oracle_cpu = feasible = efficient = agreed = None
            if compare:
                start = time.perf_counter()
                try:
                    points = oracle.enumerate_feasible(inst, oracle_budget)
                    x_e = oracle.maximal_points(inst, points, inst.criteria)
                    x_ep = oracle.maximal_points(inst, points, inst.utilities)
                except EnumerationBudgetExceeded:
                    pass
                else:
                    oracle_cpu = time.perf_counter() - start
                    feasible = len(points)
                    efficient = len(x_e)
                    agreed = report.solution_points() == set(x_e) & set(x_ep)

            win = oracle_cpu is None or cpu < oracle_cpu
            records.append(
                BenchRecord(
                    r,
                    m,
                    n,
                    cfg.seed,
                    cpu,
                    report.nodes_processed,
                    len(report.solutions),
                    oracle_cpu,
                    feasible,
                    efficient,
                    agreed,
                    win,
                )
            )
    return records


def summarize(records: Sequence[BenchRecord]) -> list[dict]:
    """One row per (r, m, n) group, in first-seen order. mu is the mean
    count of criteria-efficient points over the seeds whose brute-force
    pass ran; it is None when every pass was refused."""
    order: list[tuple[int, int, int]] = []
    grouped: dict[tuple[int, int, int], list[BenchRecord]] = {}
    for rec in records:
        key = (rec.r, rec.m, rec.n)
        if key not in grouped:
            grouped[key] = []
            order.append(key)
        grouped[key].append(rec)

    rows = []
    for key in order:
        batch = grouped[key]
        cpus = [rec.cpu for rec in batch]
        nodes = [rec.nodes for rec in batch]
        mus = [rec.oracle_efficient for rec in batch if rec.oracle_efficient is not None]
        rows.append(
            {
                "r": key[0],
                "m": key[1],
                "n": key[2],
                "cpu_mean": statistics.fmean(cpus),
                "cpu_max": max(cpus),
                "cpu_min": min(cpus),
                "nodes_mean": statistics.fmean(nodes),
                "nodes_max": max(nodes),
                "nodes_min": min(nodes),
                "mu": statistics.fmean(mus) if mus else None,
            }
        )
    return rows


def _cell(value) -> str:
    if value is None:
        return ""
    if isinstance(value, bool):
        return "yes" if value else "no"
    if isinstance(value, float):
        return f"{value:.6f}"
    return str(value)


def write_summary_csv(records: Sequence[BenchRecord], stream) -> None:
    writer = csv.writer(stream)
    writer.writerow(SUMMARY_COLUMNS)
    for row in summarize(records):
        writer.writerow(_cell(row[col]) for col in SUMMARY_COLUMNS)


def write_detail_csv(records: Sequence[BenchRecord], stream) -> None:
    writer = csv.writer(stream)
    writer.writerow(DETAIL_COLUMNS)
    for rec in records:
        writer.writerow(_cell(getattr(rec, col)) for col in DETAIL_COLUMNS)
