"""Instance reports: one record per solved instance, emitted as JSON or TSV.

Bound values are exact fractions; the report renders them as "num/den"
(authoritative) next to a 6-decimal reading for human scanning. Both
emission formats are produced from the same flat dict, so shared fields
always agree.
"""
from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from fractions import Fraction

from .errors import VerificationError

_TIME_STAGES = ("gen", "parse", "greedy", "bounds", "exact", "verify")


def fraction_str(value: Fraction) -> str:
    return f"{value.numerator}/{value.denominator}"


def fraction_decimal(value: Fraction) -> str:
    return f"{value.numerator / value.denominator:.6f}"


@dataclass
class InstanceReport:
    """Heuristic value, bound values and optional exact optimum for one instance."""

    instance: str
    n: int
    m: int
    greedy_size: int | None = None
    greedy_tie_rule: str | None = None
    greedy_seed: int | None = None
    caro_wei: Fraction | None = None
    turan_acyclic_lower: Fraction | None = None
    turan_fvs_upper: Fraction | None = None
    exact_tau0: int | None = None
    stripped_self_loops: int = 0
    duplicates_dropped: int = 0
    times_ms: dict[str, float] = field(default_factory=dict)

    @property
    def caro_wei_ceiling(self) -> int | None:
        return None if self.caro_wei is None else math.ceil(self.caro_wei)

    @property
    def max_acyclic_exact(self) -> int | None:
        return None if self.exact_tau0 is None else self.n - self.exact_tau0

    def verify(self) -> None:
        """Cross-field invariants; raises VerificationError on breach."""
        if self.greedy_size is not None and self.caro_wei is not None:
            if self.greedy_size < self.caro_wei_ceiling:
                raise VerificationError(
                    f"{self.instance}: greedy found {self.greedy_size} vertices, below "
                    f"the degree-sum bound ceiling {self.caro_wei_ceiling}"
                )
        if self.greedy_size is not None and self.exact_tau0 is not None:
            if self.greedy_size > self.n - self.exact_tau0:
                raise VerificationError(
                    f"{self.instance}: greedy value {self.greedy_size} exceeds the "
                    f"exact maximum acyclic set size {self.n - self.exact_tau0}"
                )
        if self.caro_wei is not None and self.turan_acyclic_lower is not None:
            if self.caro_wei < self.turan_acyclic_lower:
                raise VerificationError(
                    f"{self.instance}: degree-sum bound {self.caro_wei} fell below "
                    f"the average-degree bound {self.turan_acyclic_lower}"
                )

    def to_flat_dict(self) -> dict[str, object]:
        """One ordered mapping feeding both JSON and TSV emission."""
        row: dict[str, object] = {
            "instance": self.instance,
            "n": self.n,
            "m": self.m,
            "greedy_size": self.greedy_size,
            "greedy_tie_rule": self.greedy_tie_rule,
            "greedy_seed": self.greedy_seed,
        }
        for name, value in (
            ("caro_wei", self.caro_wei),
            ("turan_acyclic_lower", self.turan_acyclic_lower),
            ("turan_fvs_upper", self.turan_fvs_upper),
        ):
            row[name] = None if value is None else fraction_str(value)
            row[name + "_decimal"] = None if value is None else fraction_decimal(value)
        row["caro_wei_ceiling"] = self.caro_wei_ceiling
        row["exact_tau0"] = self.exact_tau0
        row["max_acyclic_exact"] = self.max_acyclic_exact
        row["stripped_self_loops"] = self.stripped_self_loops
        row["duplicates_dropped"] = self.duplicates_dropped
        for stage in _TIME_STAGES:
            value = self.times_ms.get(stage)
            row[f"time_{stage}_ms"] = None if value is None else round(value, 3)
        return row


def to_json(row: dict[str, object]) -> str:
    return json.dumps(row, indent=2)


def rows_to_json(rows: list[dict[str, object]], summary: dict | None = None) -> str:
    doc: dict[str, object] = {"rows": rows}
    if summary is not None:
        doc["summary"] = summary
    return json.dumps(doc, indent=2)


def _cell(value: object) -> str:
    return "" if value is None else str(value)


def rows_to_tsv(rows: list[dict[str, object]], summary: dict | None = None) -> str:
    if not rows:
        return ""
    header = list(rows[0].keys())
    lines = ["\t".join(header)]
    for row in rows:
        lines.append("\t".join(_cell(row.get(k)) for k in header))
    if summary is not None:
        for k, v in summary.items():
            lines.append(f"# {k}\t{json.dumps(v) if isinstance(v, dict) else v}")
    return "\n".join(lines) + "\n"
