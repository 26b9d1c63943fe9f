"""Replay harness: run arrival scripts against the walk engine and
measure revision work, with CSV output and log-log exponent fits.

A replay seeds one RNG stream, builds the store on the empty graph,
then for each scripted edge does add_edge followed by on_edge_arrival,
bucketing that arrival's reroutes under the edge's row label (-1 for
unlabeled/top edges).  Identical (script, R, epsilon, seed) replays are
bit-identical.
"""

from __future__ import annotations

import csv
import math
import time
from dataclasses import dataclass, field
from typing import IO, Iterable, Sequence

import numpy as np

from .adversary import (ArrivalScript, build_binary, build_dary,
                        predicted_row_updates, random_order)
from .graph import DynGraph
from .walks import init_store, make_rng, on_edge_arrival

CSV_HEADER = ("family,d,N,n,m,R,epsilon,seed,order,reroutes_total,"
              "reroutes_toprow,steps_regenerated,row_counts,wall_ms")

ORDER_MODES = ("adversarial", "random")


@dataclass
class RunRecord:
    """One replay's identity and work counters.

    row_counts buckets all reroute events by edge row label, so its
    values sum to reroutes_total; row_counts_toprow restricts to walks
    sourced in the top row (in-memory only, not serialized to CSV).
    """

    family: str
    d: int
    N: int
    n: int
    m: int
    R: int
    epsilon: float
    seed: int
    order: str
    reroutes_total: int
    reroutes_toprow: int
    steps_regenerated: int
    row_counts: dict[int, int]
    wall_ms: float
    row_counts_toprow: dict[int, int] = field(default_factory=dict)


def _order_rng(seed: int) -> np.random.Generator:
    # distinct stream from the replay rng seeded with the bare seed
    return np.random.default_rng((seed, 0x5EED))


def replay(script: ArrivalScript, R: int, epsilon: float, seed: int,
           order: str = "adversarial") -> RunRecord:
    """Run one full arrival sequence and collect work counters."""
    if order not in ORDER_MODES:
        raise ValueError(f"order must be one of {ORDER_MODES}, got {order!r}")
    start = time.perf_counter()
    rng = make_rng(seed)
    g = DynGraph(script.n)
    store = init_store(g, R, epsilon, rng)
    tracked = script.top_range()
    row_counts: dict[int, int] = {}
    row_counts_top: dict[int, int] = {}
    total = 0
    total_top = 0
    regenerated = 0
    for (u, v), row in zip(script.edges, script.rows):
        g.add_edge(u, v)
        delta = on_edge_arrival(store, g, u, v, rng, tracked)
        if delta.reroute_events:
            row_counts[row] = row_counts.get(row, 0) + delta.reroute_events
            total += delta.reroute_events
            regenerated += delta.steps_regenerated
        if delta.tracked_reroutes:
            row_counts_top[row] = (row_counts_top.get(row, 0)
                                    + delta.tracked_reroutes)
            total_top += delta.tracked_reroutes
    wall_ms = (time.perf_counter() - start) * 1e3
    return RunRecord(
        family=script.family or "adhoc", d=script.d, N=script.N,
        n=script.n, m=script.m, R=R, epsilon=epsilon, seed=seed,
        order=order, reroutes_total=total, reroutes_toprow=total_top,
        steps_regenerated=regenerated, row_counts=row_counts,
        wall_ms=wall_ms, row_counts_toprow=row_counts_top)


def build_family(family: str, N: int, d: int = 2) -> ArrivalScript:
    if family == "binary":
        return build_binary(N)
    if family == "dary":
        return build_dary(N, d)
    raise ValueError(f"unknown family {family!r}")


def sweep(family: str, N_values: Sequence[int], R: int, epsilon: float,
          seeds: Sequence[int], d: int = 2,
          orders: Sequence[str] = ORDER_MODES) -> list[RunRecord]:
    """Replay every (N, seed, order) combination; adversarial order uses
    the script as built, random order shuffles it with a permutation
    stream derived from the seed."""
    distinct = sorted(set(N_values))
    if len(distinct) < 3 or distinct[-1] < 4 * distinct[0]:
        raise ValueError("sweep needs >= 3 distinct N spanning >= 2 octaves")
    records = []
    for N in N_values:
        script = build_family(family, N, d)
        for order in orders:
            for seed in seeds:
                if order == "random":
                    run_script = random_order(script, _order_rng(seed))
                else:
                    run_script = script
                records.append(replay(run_script, R, epsilon, seed, order))
    return records


# -- CSV --------------------------------------------------------------------


def _encode_rows(row_counts: dict[int, int]) -> str:
    return ";".join(f"{r}:{c}" for r, c in sorted(row_counts.items()))


def _decode_rows(text: str) -> dict[int, int]:
    if not text:
        return {}
    out = {}
    for item in text.split(";"):
        r, _, c = item.partition(":")
        out[int(r)] = int(c)
    return out


def write_csv(records: Iterable[RunRecord], fh: IO[str]) -> None:
    fh.write(CSV_HEADER + "\n")
    writer = csv.writer(fh, lineterminator="\n")
    for rec in records:
        writer.writerow([
            rec.family, rec.d, rec.N, rec.n, rec.m, rec.R,
            f"{rec.epsilon:.10g}", rec.seed, rec.order, rec.reroutes_total,
            rec.reroutes_toprow, rec.steps_regenerated,
            _encode_rows(rec.row_counts), f"{rec.wall_ms:.3f}"])


def read_csv(fh: IO[str]) -> list[RunRecord]:
    reader = csv.reader(fh)
    header = next(reader)
    if ",".join(header) != CSV_HEADER:
        raise ValueError(f"unexpected CSV header: {header}")
    records = []
    for row in reader:
        if not row:
            continue
        records.append(RunRecord(
            family=row[0], d=int(row[1]), N=int(row[2]), n=int(row[3]),
            m=int(row[4]), R=int(row[5]), epsilon=float(row[6]),
            seed=int(row[7]), order=row[8], reroutes_total=int(row[9]),
            reroutes_toprow=int(row[10]), steps_regenerated=int(row[11]),
            row_counts=_decode_rows(row[12]), wall_ms=float(row[13])))
    return records


# -- analysis ---------------------------------------------------------------


@dataclass(frozen=True)
class ExponentFit:
    """Least-squares slope of log(work per walk) against log(m)."""

    slope: float
    intercept: float
    r_squared: float
    points: int


def fit_exponent(records: Sequence[RunRecord],
                 order: str = "adversarial") -> ExponentFit:
    """Fit log(mean reroutes_total / (R * N)) = slope * log m + b.

    Seed replicates are averaged arithmetically per m before taking
    logs.  Needs at least 3 distinct m values.
    """
    groups: dict[int, list[float]] = {}
    for rec in records:
        if rec.order != order:
            continue
        groups.setdefault(rec.m, []).append(
            rec.reroutes_total / (rec.R * rec.N))
    if len(groups) < 3:
        raise ValueError(
            f"need >= 3 distinct m values for a fit, got {len(groups)}")
    ms = sorted(groups)
    x = np.log([float(m) for m in ms])
    y = np.log([float(np.mean(groups[m])) for m in ms])
    slope, intercept = np.polyfit(x, y, 1)
    resid = y - (slope * x + intercept)
    ss_tot = float(((y - y.mean()) ** 2).sum())
    r2 = 1.0 - float((resid ** 2).sum()) / ss_tot if ss_tot > 0 else 1.0
    return ExponentFit(float(slope), float(intercept), r2, len(ms))


@dataclass(frozen=True)
class RowCheck:
    row: int
    observed_mean: float
    predicted: float

    @property
    def ratio(self) -> float:
        return self.observed_mean / self.predicted


def verify_rows(family: str, N: int, R: int, epsilon: float,
                seeds: Sequence[int], d: int = 2,
                max_row: int | None = None) -> list[RowCheck]:
    """Replay the adversarial order over seeds and compare mean
    top-sourced reroutes per row against predicted_row_updates."""
    script = build_family(family, N, d)
    tree_row_count = max((r for r in script.rows if r >= 0), default=-1) + 1
    rows = range(tree_row_count if max_row is None
                 else min(max_row + 1, tree_row_count))
    sums = {r: 0 for r in rows}
    for seed in seeds:
        rec = replay(script, R, epsilon, seed)
        for r in rows:
            sums[r] += rec.row_counts_toprow.get(r, 0)
    return [RowCheck(r, sums[r] / len(seeds),
                     predicted_row_updates(R, N, epsilon, script.d or d, r))
            for r in rows]
