"""Microbenchmark for the sign algorithms.

The workload is a fixed-seed stream of random 64-bit mask pairs, so
every run times the same inputs; only the timings themselves vary.
ns/op includes the Python call overhead, which is the honest number
for this kind of kernel.

The quadratic factor-list algorithm is orders of magnitude slower
than the bit tricks on 64-bit masks; budget minutes for the default
million-pair run, or pass a smaller ``pairs``.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass
from typing import List, Tuple

from . import kernel

__all__ = ["BenchResult", "format_report", "make_workload", "run_bench"]

DEFAULT_PAIRS = 1_000_000
_SEED = 0x7715F  # fixed so the workload is reproducible

MASK64 = (1 << 64) - 1


def make_workload(pairs: int, seed: int = _SEED) -> Tuple[List[int], List[int]]:
    """Deterministic list of ``pairs`` random 64-bit (p, q) inputs."""
    if pairs < 1:
        raise ValueError("need at least one pair")
    rng = random.Random(seed)
    ps = [rng.getrandbits(64) for _ in range(pairs)]
    qs = [rng.getrandbits(64) for _ in range(pairs)]
    return ps, qs


@dataclass(frozen=True)
class BenchResult:
    name: str
    pairs: int
    ns_per_op: float


def _time_one(func, ps, qs, mu) -> float:
    t0 = time.perf_counter()
    for p, q in zip(ps, qs):
        func(p, q, mu)
    return time.perf_counter() - t0


def run_bench(pairs: int = DEFAULT_PAIRS, mu: int = -1,
              algorithms=None) -> List[BenchResult]:
    if algorithms is None:
        algorithms = kernel.ALGORITHMS
    ps, qs = make_workload(pairs)
    results = []
    for name, func in algorithms.items():
        elapsed = _time_one(func, ps, qs, mu)
        results.append(BenchResult(name, pairs, elapsed * 1e9 / pairs))
    return results


def format_report(results: List[BenchResult]) -> str:
    """One labeled throughput line per algorithm."""
    return "".join(
        f"{r.name:<10} {r.ns_per_op:12.1f} ns/op  ({r.pairs} pairs)\n"
        for r in results
    )
