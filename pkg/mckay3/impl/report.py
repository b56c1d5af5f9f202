"""Report assembly for the CLI: one payload, three renderings.

JSON is the machine interface and its field names are stable. CSV is a
flattened view of the same data, and text renders rich tables.
"""
import csv
import io
import json
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional, Sequence, Tuple
import typer
from rich.console import Console
from rich.table import Table
from rich.text import Text
from mckay3.impl.config import OutputFormat
from mckay3.impl.quiver import ChamberSurvey
from mckay3.impl.types.eta import EtaTable
from mckay3.impl.types.mckay import MckayMatrix
from mckay3.impl.types.moment import SolveResult, Solved
from mckay3.impl.types.quiver import FixedPoint, StabilityParam
from mckay3.impl.types.reports import IntersectionPrediction, VerificationReport

stdout = Console(highlight=False, soft_wrap=True)


@dataclass
class Section:
    title: str
    columns: List[str]
    rows: List[List[Any]]
    caption: Optional[str] = None

    def table(self) -> Table:
        t = Table(title=self.title, caption=self.caption)
        for c in self.columns:
            t.add_column(c)
        for row in self.rows:
            t.add_row(*(Text("" if v is None else str(v)) for v in row))
        return t


@dataclass
class Report:
    payload: Dict[str, Any]
    columns: List[str]
    rows: List[List[Any]]
    sections: List[Section] = field(default_factory=list)
    ok: bool = True

    def to_json(self) -> str:
        return json.dumps(self.payload, indent=2)

    def to_csv(self) -> str:
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(self.columns)
        writer.writerows(["" if v is None else v for v in row] for row in self.rows)
        return buf.getvalue().rstrip("\n")


def emit(report: Report, fmt: OutputFormat) -> None:
    if fmt == OutputFormat.json:
        typer.echo(report.to_json())
    elif fmt == OutputFormat.csv:
        typer.echo(report.to_csv())
    else:
        for section in report.sections:
            stdout.print(section.table())


def _grid(title: str, labels: Sequence[int], cells: List[List[str]], caption: Optional[str] = None) -> Section:
    return Section(title=title, columns=[""] + [str(v) for v in labels],
                   rows=[[str(label)] + row for label, row in zip(labels, cells)], caption=caption)


def _flatten(name: str, labels: Sequence[int], cells: List[List[str]]) -> List[List[Any]]:
    return [[name, rho, sigma, cells[i][j]]
            for i, rho in enumerate(labels) for j, sigma in enumerate(labels)]


def cartan_report(cm: MckayMatrix, presentations: Sequence[Tuple[int, int, int]] = ()) -> Report:
    """`presentations` lists other weight triples for the same subgroup; reported, never applied."""
    payload = cm.serialize()
    payload["equivalent_presentations"] = [list(p) for p in presentations]
    full, reduced, inverse = payload["full"], payload["reduced"], payload["inverse"]
    return Report(
        payload=payload,
        columns=["matrix", "row", "col", "value"],
        rows=(_flatten("full", cm.full_labels, full)
              + _flatten("reduced", cm.labels, reduced)
              + _flatten("inverse", cm.labels, inverse)),
        sections=[
            _grid(f"C~ for {cm.group}", cm.full_labels, full),
            _grid("C (trivial irrep removed)", cm.labels, reduced, caption=f"det C = {cm.determinant}"),
            _grid("C^-1", cm.labels, inverse),
            Section("equivalent presentations", ["weights"], [[f"({a},{b},{c})"] for a, b, c in presentations]),
        ],
    )


def eta_report(table: EtaTable) -> Report:
    payload = table.serialize()
    rows = [[d, v] for d, v in payload["eta"].items()]
    return Report(payload=payload, columns=["d", "eta"], rows=rows,
                  sections=[Section(f"eta invariants for {table.group}", ["d", "eta_d"], rows)])


def verify_report(report: VerificationReport) -> Report:
    rows = [[c.name, "pass" if c.passed else "FAIL", c.lhs, c.rhs,
             ";".join(f"{k}={v}" for k, v in (c.witness or {}).items())]
            for c in report.checks]
    return Report(
        payload=report.serialize(),
        columns=["check", "result", "lhs", "rhs", "witness"],
        rows=rows,
        sections=[Section(f"identity chain for {report.group}", ["check", "result", "lhs", "rhs", "witness"],
                          rows, caption="all checks pass" if report.overall else
                          f"{len(report.failures)} check(s) failed")],
        ok=report.overall,
    )


def intersection_report(prediction: IntersectionPrediction) -> Report:
    payload = prediction.serialize()
    cells = payload["matrix"]
    return Report(
        payload=payload,
        columns=["rho", "sigma", "value"],
        rows=[row[1:] for row in _flatten("", prediction.labels, cells)],
        sections=[_grid(f"-C^-1 for {prediction.group}", prediction.labels, cells,
                        caption=payload["interpretation"]["triple_pairing"])],
    )


def _key_value(payload: Dict[str, Any]) -> List[List[Any]]:
    rows = []
    for key, value in payload.items():
        if isinstance(value, (list, dict)):
            value = json.dumps(value)
        rows.append([key, value])
    return rows


def stability_report(payload: Dict[str, Any]) -> Report:
    rows = _key_value(payload)
    return Report(payload=payload, columns=["field", "value"], rows=rows,
                  sections=[Section(f"stability on {payload['group']}", ["field", "value"], rows)])


def solve_report(group: str, theta: StabilityParam, seed: int, result: SolveResult,
                 with_history: bool = False) -> Report:
    payload = {"group": group, "theta": theta.serialize(), "seed": seed, **result.serialize(with_history)}
    rows = _key_value(payload)
    caption = (f"mu = theta to {result.residual:.3e}" if isinstance(result, Solved)
               else f"destabilized by {sorted(result.certificate)}")
    return Report(payload=payload, columns=["field", "value"], rows=rows,
                  sections=[Section("Kempf-Ness solve", ["field", "value"], rows, caption=caption)])


def fixed_points_report(group: str, theta: StabilityParam, points: List[FixedPoint]) -> Report:
    payload = {
        "group": group,
        "theta": theta.serialize(),
        "count": len(points),
        "fixed_points": [p.serialize() for p in points],
    }
    rows = [[i, k, alpha] for i, p in enumerate(points) for k, alpha in p.sorted_arrows()]
    text_rows = [[i, " ".join(f"{k}:{alpha}" for k, alpha in p.sorted_arrows())] for i, p in enumerate(points)]
    return Report(payload=payload, columns=["fixed_point", "k", "alpha"], rows=rows,
                  sections=[Section(f"torus-fixed points for {group}, theta = {theta.literal()}",
                                    ["#", "arrow support (k:alpha)"], text_rows,
                                    caption=f"{len(points)} fixed point(s)")])


def chambers_report(survey: ChamberSurvey) -> Report:
    payload = survey.serialize()
    rows = [[i, c["count"], c["fixed_points"], ",".join(c["example_theta"])]
            for i, c in enumerate(payload["classes"])]
    return Report(
        payload=payload,
        columns=["class", "count", "fixed_points", "example_theta"],
        rows=rows,
        sections=[Section(f"chamber survey for {survey.group}", ["class", "samples", "fixed points", "example theta"],
                          rows, caption=f"{survey.generic}/{survey.samples} generic")],
    )
