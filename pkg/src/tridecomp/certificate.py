"""Re-verification of the 7-vertex certificate: PSD check plus 1044 inequalities."""

from __future__ import annotations

import json
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from typing import IO, Iterable

from . import exactlin
from .cliquelp import FormulationMismatch, decomposition_lp, fmt, max_fractional_triangle_packing, pi3
from .flags import KERNEL_VECTOR, CertificateMatrix, coefficient_cu, quadratic_form_density
from .graphs import Graph, enumerate_graphs, parse_graph6, write_graph6

DEFAULT_THRESHOLD = Fraction(21)


@dataclass
class GraphRow:
    g6: str
    edges: int
    nu_f: Fraction
    pi3f: Fraction
    pi3: int
    c_u: Fraction
    slack: Fraction

    def to_json(self) -> dict:
        return {"g6": self.g6, "edges": self.edges, "nu_f": fmt(self.nu_f),
                "pi3f": fmt(self.pi3f), "pi3": fmt(self.pi3), "c_u": fmt(self.c_u),
                "slack": fmt(self.slack)}


@dataclass
class CertificateReport:
    psd_ok: bool
    rank: int
    kernel_ok: bool
    matrix_hash: str
    threshold: Fraction = DEFAULT_THRESHOLD
    witness: list[Fraction] | None = None
    rows: list[GraphRow] = field(default_factory=list)

    @property
    def min_slack(self) -> Fraction | None:
        return min((r.slack for r in self.rows), default=None)

    @property
    def tight_set(self) -> list[str]:
        return [r.g6 for r in self.rows if r.slack == 0]

    @property
    def violations(self) -> list[str]:
        return [r.g6 for r in self.rows if r.slack < 0]

    @property
    def max_nonfractional(self) -> Fraction | None:
        return max((r.pi3 + r.c_u for r in self.rows), default=None)

    @property
    def verified(self) -> bool:
        return self.psd_ok and self.kernel_ok and bool(self.rows) and not self.violations

    def header(self) -> dict:
        head = {"psd": self.psd_ok, "rank": self.rank, "kernel": self.kernel_ok,
                "matrix_hash": self.matrix_hash, "threshold": fmt(self.threshold)}
        if self.witness is not None:
            head["witness"] = [fmt(x) for x in self.witness]
        return head

    def summary(self) -> dict:
        opt = lambda q: None if q is None else fmt(q)  # noqa: E731
        return {"min_slack": opt(self.min_slack), "tight": self.tight_set,
                "max_nonfractional": opt(self.max_nonfractional),
                "violations": self.violations, "verified": self.verified}

    def write_jsonl(self, fh: IO[str]) -> None:
        fh.write(json.dumps(self.header()) + "\n")
        for row in self.rows:
            fh.write(json.dumps(row.to_json()) + "\n")
        fh.write(json.dumps(self.summary()) + "\n")


def default_jobs() -> int:
    env = os.environ.get("TRIDECOMP_JOBS")
    if env:
        return max(1, int(env))
    return len(os.sched_getaffinity(0)) if hasattr(os, "sched_getaffinity") else (os.cpu_count() or 1)


def graph_row(g: Graph, matrix: CertificateMatrix, threshold: Fraction = DEFAULT_THRESHOLD) -> GraphRow:
    nu_f = max_fractional_triangle_packing(g).value
    e = g.num_edges()
    value = 2 * e - 3 * nu_f
    direct, _ = decomposition_lp(g)
    if direct != value:
        raise FormulationMismatch(f"covering LP gives {direct}, packing LP gives {value} on {g!r}")
    integral, _ = pi3(g)
    c = coefficient_cu(g, matrix)
    return GraphRow(write_graph6(g).decode(), e, nu_f, value, integral, c, threshold - value - c)


def _row_task(args):
    g6, den, nums, threshold = args
    return graph_row(parse_graph6(g6), CertificateMatrix(den, nums), threshold)


def check_matrix(matrix: CertificateMatrix) -> tuple[bool, int, bool, list[Fraction] | None]:
    entries = matrix.entries()
    fact = exactlin.ldlt(entries)
    kernel = exactlin.kernel_check(entries, KERNEL_VECTOR)
    return fact.psd, fact.rank, kernel, fact.witness


def verify_lemma(
    matrix: CertificateMatrix | None = None,
    threshold: Fraction | int = DEFAULT_THRESHOLD,
    jobs: int | None = None,
    graphs: Iterable[Graph] | None = None,
) -> CertificateReport:
    """Check the matrix, then every 7-vertex graph against ``threshold``.

    A matrix that is not PSD ends the run before any graph is evaluated.
    """
    matrix = matrix or CertificateMatrix.builtin()
    threshold = Fraction(threshold)
    psd, rank, kernel, witness = check_matrix(matrix)
    report = CertificateReport(psd, rank, kernel, matrix.sha256(), threshold, witness)
    if not psd:
        return report
    if graphs is None:
        graphs = [c.graph for c in enumerate_graphs(7)]
    graphs = list(graphs)
    jobs = jobs or default_jobs()
    if jobs > 1 and len(graphs) > 1:
        tasks = [(write_graph6(g), matrix.denominator, matrix.numerators, threshold) for g in graphs]
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            report.rows = list(pool.map(_row_task, tasks, chunksize=max(1, len(tasks) // (4 * jobs))))
    else:
        report.rows = [graph_row(g, matrix, threshold) for g in graphs]
    return report


def quadratic_form_sweep(g: Graph, matrix: CertificateMatrix | None = None) -> Fraction:
    """Minimum over root choices of the flag-density quadratic form."""
    return min(quadratic_form_density(g, v, matrix) for v in range(g.n))
