"""Serialisation of experiment summaries and sign tables."""
from __future__ import annotations

import csv
import io
import json

from .pencil.count import ExperimentSummary
from .sign_calculus import CountMode, Sign, TableCell

CSV_FIELDS = ("trialSeed", "signedCount", "complexCount", "pass")


def summary_json(summary: ExperimentSummary) -> str:
    return json.dumps(summary.to_json(), indent=2) + "\n"


def summary_csv(summary: ExperimentSummary) -> str:
    buf = io.StringIO()
    writer = csv.DictWriter(buf, fieldnames=CSV_FIELDS, lineterminator="\n")
    writer.writeheader()
    for row in summary.csv_rows():
        writer.writerow({**row, "pass": str(row["pass"]).lower()})
    return buf.getvalue()


def summary_text(summary: ExperimentSummary) -> str:
    lines = [f"r={summary.r} c={summary.c} base seed={summary.base_seed}"]
    for t in summary.trials:
        lines.append(f"  seed {t.seed:>6}  signed count {t.signed_count:>3}  "
                     f"members {t.complex_member_count:>2}  real {len(t.real_members):>2}  resamples {t.resamples}")
    verdict = f"common value {summary.common_value}" if summary.passed else f"DISAGREEMENT {summary.disagreement}"
    lines.append(f"{'PASS' if summary.passed else 'FAIL'}: {verdict}")
    return "\n".join(lines) + "\n"


def table_text(cells: list[TableCell]) -> str:
    """Render the comparison table as a two-block grid, rows dim L mod 4 and columns k mod 4."""
    grid = {(c.mode, c.n_mod4, c.k_mod4): c.sign for c in cells}
    block = " | ".join(f"k = {k}" for k in range(4))
    width = len(block)
    rule = "=" * (len("dim(L) || ") + 2 * (width + 4) - 1)
    lines = [
        rule,
        f"{'':<6} || {'A counts':^{width}} || {'B counts':^{width}} ||",
        f"{'dim(L)':<6} || {block} || {block} ||",
        rule,
    ]
    for n in range(4):
        parts = [" | ".join(f"{str(grid[mode, n, k]):^5}" for k in range(4)) for mode in CountMode]
        lines.append(f"{n:<6} || {parts[0]} || {parts[1]} ||")
    lines.append(rule)
    return "\n".join(lines) + "\n"


def table_json(cells: list[TableCell]) -> str:
    def enc(s: Sign):
        return None if s is Sign.UNDEFINED else s.value

    records = [{
        "dimL_mod4": c.n_mod4,
        "k_mod4": c.k_mod4,
        "mode": c.mode.value,
        "sign": enc(c.sign),
        "reference": enc(c.reference),
        "verifiedByDerivation": c.verified,
        "nonGeometric": c.non_geometric,
    } for c in cells]
    return json.dumps(records, indent=2) + "\n"
