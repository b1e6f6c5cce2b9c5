"""Bound-tightness sweep: sample seeded random graphs, certify them exactly,
and compare the sparsest accepted graphs against the edge lower bounds.

For each robustness target r and each node count n in {2r-1, 2r}, graphs are
drawn from G(n, p) for every configured p until the requested number of
samples certifies at exactly r_max = r (the ceiling for those node counts)
or the attempt budget runs out.  Every attempt becomes one record; the
summary row per (r, n) reports the minimum accepted edge count against the
theoretical bound.

Per-attempt seeds derive from the master seed through a stable hash, so a
config replays to byte-identical CSV artifacts regardless of platform or
execution order.
"""

from __future__ import annotations

import hashlib
from dataclasses import dataclass
from typing import Optional

from .construct import erdos_renyi
from .robustness import edge_lower_bound, max_robustness

DEFAULT_R_VALUES = (1, 2, 3, 4, 5, 6)
DEFAULT_P_VALUES = (0.7, 0.75, 0.8, 0.85, 0.9)
NODE_OFFSET_CHOICES = ("2r-1", "2r")
DEFAULT_MAX_N = 16

RECORD_COLUMNS = ("r", "n", "p", "seed", "edge_count", "r_max", "accepted")
SUMMARY_COLUMNS = ("r", "n", "min_edges_found", "bound", "gap", "accepted", "requested", "shortfall")


def derive_seed(master_seed: int, r: int, n: int, p: float, attempt: int) -> int:
    """Stable per-attempt seed: the first 8 bytes, big-endian, of
    sha256("{master_seed}:{r}:{n}:{p!r}:{attempt}")."""
    key = f"{master_seed}:{r}:{n}:{p!r}:{attempt}".encode("ascii")
    return int.from_bytes(hashlib.sha256(key).digest()[:8], "big")


@dataclass(frozen=True)
class ExperimentConfig:
    r_values: tuple[int, ...] = DEFAULT_R_VALUES
    samples_per_p: int = 10
    p_values: tuple[float, ...] = DEFAULT_P_VALUES
    node_offsets: tuple[str, ...] = NODE_OFFSET_CHOICES
    master_seed: int = 0
    max_attempts: int = 5000
    output_dir: str = "."

    def validate(self, max_n: int = DEFAULT_MAX_N) -> None:
        if not self.r_values:
            raise ValueError("at least one robustness target is required")
        for r in self.r_values:
            if not isinstance(r, int) or r < 1:
                raise ValueError(f"robustness targets must be positive integers, got {r!r}")
            if 2 * r > max_n:
                raise ValueError(
                    f"r={r} needs certification at n={2 * r}, beyond the capability limit {max_n}"
                )
        if not isinstance(self.samples_per_p, int) or self.samples_per_p < 1:
            raise ValueError(f"samples_per_p must be a positive integer, got {self.samples_per_p!r}")
        if not self.p_values:
            raise ValueError("at least one edge probability is required")
        for p in self.p_values:
            if not 0.0 < p <= 1.0:
                raise ValueError(f"edge probabilities must lie in (0, 1], got {p!r}")
        if not self.node_offsets:
            raise ValueError("at least one node offset is required")
        for offset in self.node_offsets:
            if offset not in NODE_OFFSET_CHOICES:
                raise ValueError(f"node offsets must be among {NODE_OFFSET_CHOICES}, got {offset!r}")
        if not isinstance(self.max_attempts, int) or self.max_attempts < 1:
            raise ValueError(f"max_attempts must be a positive integer, got {self.max_attempts!r}")

    def to_json_dict(self) -> dict:
        return {
            "r_values": list(self.r_values),
            "samples_per_p": self.samples_per_p,
            "p_values": list(self.p_values),
            "node_offsets": list(self.node_offsets),
            "master_seed": self.master_seed,
            "max_attempts": self.max_attempts,
            "output_dir": self.output_dir,
        }

    @classmethod
    def from_json_dict(cls, data: dict) -> "ExperimentConfig":
        if not isinstance(data, dict):
            raise ValueError("experiment config must be a JSON object")
        known = {f for f in cls.__dataclass_fields__}
        unknown = set(data) - known
        if unknown:
            raise ValueError(f"unknown experiment config fields: {sorted(unknown)}")
        kwargs = dict(data)
        for key in ("r_values", "p_values", "node_offsets"):
            if key in kwargs:
                kwargs[key] = tuple(kwargs[key])
        return cls(**kwargs)


@dataclass(frozen=True)
class ExperimentRecord:
    r: int
    n: int
    p: float
    seed: int
    edge_count: int
    r_max: int
    accepted: bool


@dataclass(frozen=True)
class SummaryRow:
    r: int
    n: int
    min_edges_found: Optional[int]
    bound: int
    gap: Optional[int]
    accepted: int
    requested: int

    @property
    def shortfall(self) -> bool:
        return self.accepted < self.requested


def run_experiment(
    config: ExperimentConfig, max_n: int = DEFAULT_MAX_N
) -> tuple[list[ExperimentRecord], list[SummaryRow]]:
    """Run the sweep; returns (per-attempt records, per-(r, n) summary rows).

    Output ordering is canonical: ascending (r, n, p, attempt), independent
    of how the config lists its values.  Attempt budgets that run out leave
    a shortfall flag on the summary row rather than looping forever.
    """
    config.validate(max_n)
    records: list[ExperimentRecord] = []
    summary: list[SummaryRow] = []
    offsets = [o for o in NODE_OFFSET_CHOICES if o in config.node_offsets]
    for r in sorted(set(config.r_values)):
        for offset in offsets:
            n = 2 * r - 1 if offset == "2r-1" else 2 * r
            bound = edge_lower_bound(n, r).bound
            accepted_total = 0
            min_edges: Optional[int] = None
            for p in sorted(set(config.p_values)):
                accepted = 0
                attempt = 0
                while accepted < config.samples_per_p and attempt < config.max_attempts:
                    seed = derive_seed(config.master_seed, r, n, p, attempt)
                    g = erdos_renyi(n, p, seed)
                    cert = max_robustness(g)
                    ok = cert.r_max == r
                    records.append(
                        ExperimentRecord(
                            r=r, n=n, p=p, seed=seed,
                            edge_count=g.edge_count, r_max=cert.r_max, accepted=ok,
                        )
                    )
                    if ok:
                        accepted += 1
                        if min_edges is None or g.edge_count < min_edges:
                            min_edges = g.edge_count
                    attempt += 1
                accepted_total += accepted
            summary.append(
                SummaryRow(
                    r=r,
                    n=n,
                    min_edges_found=min_edges,
                    bound=bound,
                    gap=None if min_edges is None else min_edges - bound,
                    accepted=accepted_total,
                    requested=config.samples_per_p * len(set(config.p_values)),
                )
            )
    return records, summary


def records_to_csv_text(records: list[ExperimentRecord]) -> str:
    lines = [",".join(RECORD_COLUMNS)]
    for rec in records:
        lines.append(
            f"{rec.r},{rec.n},{rec.p!r},{rec.seed},{rec.edge_count},{rec.r_max},"
            f"{'true' if rec.accepted else 'false'}"
        )
    return "\n".join(lines) + "\n"


def summary_to_csv_text(rows: list[SummaryRow]) -> str:
    lines = [",".join(SUMMARY_COLUMNS)]
    for row in rows:
        min_edges = "" if row.min_edges_found is None else str(row.min_edges_found)
        gap = "" if row.gap is None else str(row.gap)
        lines.append(
            f"{row.r},{row.n},{min_edges},{row.bound},{gap},{row.accepted},{row.requested},"
            f"{'true' if row.shortfall else 'false'}"
        )
    return "\n".join(lines) + "\n"
