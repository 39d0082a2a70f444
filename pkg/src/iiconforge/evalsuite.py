"""Six-criterion quality assessment and Content/Structure/Overall aggregation.

CR1, CR4 and CR6 are ingested as given constants. CR2, CR3 and CR5 can be
computed here. Aggregation::

    content   = (cr1 + cr2) / 2
    structure = (1*cr3 + 0.6*cr4 + 0.6*cr5 + 0.8*cr6) / 3
    overall   = (content + structure) / 2

The divisor 3 is the weight sum 1 + 0.6 + 0.6 + 0.8.
"""

from __future__ import annotations

import csv
import io
from dataclasses import dataclass, fields
from pathlib import Path
from typing import Iterable, Mapping, Sequence

from .errors import MalformedRow, MismatchedArtworkSets, NoSubjects
from .model import Recognition

STRUCTURE_WEIGHTS = {"cr3": 1.0, "cr4": 0.6, "cr5": 0.6, "cr6": 0.8}
TABLE1_SCORES = Path(__file__).parent / "data" / "table1_scores.csv"


@dataclass(frozen=True)
class CriterionScores:
    cr1: float
    cr2: float
    cr3: float
    cr4: float
    cr5: float
    cr6: float
    computed: frozenset = frozenset({"cr2", "cr3", "cr5"})

    def __post_init__(self):
        for name in ("cr1", "cr2", "cr3", "cr4", "cr5", "cr6"):
            v = getattr(self, name)
            if not 0.0 <= v <= 1.0:
                raise ValueError(f"{name}={v} outside [0, 1]")


@dataclass(frozen=True)
class CapabilityManifest:
    actions: bool = False
    preiconographical_elements: bool = False
    stories: bool = False
    allegories: bool = False
    iconographical_subjects: bool = False
    symbols: bool = False
    iconological_subjects: bool = False
    cultural_phenomena: bool = False
    taxonomy_combination: bool = False

    @classmethod
    def full(cls) -> "CapabilityManifest":
        return cls(**{f.name: True for f in fields(cls)})

    @classmethod
    def of(cls, *names: str) -> "CapabilityManifest":
        return cls(**{n: True for n in names})

    def count(self) -> int:
        return sum(getattr(self, f.name) for f in fields(self))


@dataclass(frozen=True)
class AnnotationSheet:
    annotator: str
    scores: Mapping[str, float]

    def __post_init__(self):
        for art, v in self.scores.items():
            if not 0.0 <= v <= 1.0:
                raise ValueError(f"score {v} for {art} outside [0, 1]")


def score_cr2(sheets: Sequence[AnnotationSheet]) -> float:
    """Mean over annotators of each annotator's mean completeness score."""
    if not sheets:
        raise MismatchedArtworkSets("at least one annotator is required")
    arts = set(sheets[0].scores)
    if not arts:
        raise MismatchedArtworkSets("annotation sheet has no artworks")
    for s in sheets[1:]:
        if set(s.scores) != arts:
            raise MismatchedArtworkSets(f"{s.annotator} scored a different artwork set")
    means = [sum(s.scores.values()) / len(s.scores) for s in sheets]
    return sum(means) / len(means)


def score_cr3(manifest: CapabilityManifest) -> float:
    return manifest.count() / len(fields(CapabilityManifest))


def score_cr5(subject_links: Mapping[str, Iterable[str]]) -> float:
    """Share of subjects linked to two or more artworks."""
    if not subject_links:
        raise NoSubjects("no subjects to score")
    linked = sum(1 for arts in subject_links.values() if len(set(arts)) >= 2)
    return linked / len(subject_links)


def subject_links(recognitions: Iterable[Recognition]) -> dict[str, set]:
    links: dict[str, set] = {}
    for r in recognitions:
        links.setdefault(r.element, set()).add(r.artwork)
    return links


def aggregate(s: CriterionScores) -> tuple[float, float, float]:
    content = (s.cr1 + s.cr2) / 2
    structure = sum(w * getattr(s, k) for k, w in STRUCTURE_WEIGHTS.items()) / 3
    return content, structure, (content + structure) / 2


def _dense_rank(values: Sequence[float]) -> list[int]:
    # rounding guards against float noise turning ties into ranks
    keys = [round(v, 9) for v in values]
    order = sorted(set(keys), reverse=True)
    return [order.index(k) + 1 for k in keys]


@dataclass(frozen=True)
class ReportRow:
    name: str
    scores: CriterionScores
    content: float
    structure: float
    overall: float
    rank_content: int
    rank_structure: int
    rank_overall: int


@dataclass(frozen=True)
class EvaluationReport:
    rows: tuple

    def row(self, name: str) -> ReportRow:
        return next(r for r in self.rows if r.name == name)

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(
            ["kg_name", "cr1", "cr2", "cr3", "cr4", "cr5", "cr6", "content", "rank_content",
             "structure", "rank_structure", "overall", "rank_overall"]
        )
        for r in self.rows:
            s = r.scores
            w.writerow(
                [r.name] + [f"{getattr(s, c):.4f}" for c in ("cr1", "cr2", "cr3", "cr4", "cr5", "cr6")]
                + [f"{r.content:.4f}", r.rank_content, f"{r.structure:.4f}", r.rank_structure,
                   f"{r.overall:.4f}", r.rank_overall]
            )
        return buf.getvalue()

    def to_text(self) -> str:
        head = ("KG", "CR1", "CR2", "CR3", "CR4", "CR5", "CR6", "Content", "Rk", "Structure", "Rk", "Overall", "Rk")
        body = []
        for r in self.rows:
            s = r.scores
            body.append(
                (r.name, *(f"{getattr(s, c):.4f}" for c in ("cr1", "cr2", "cr3", "cr4", "cr5", "cr6")),
                 f"{r.content:.4f}", str(r.rank_content), f"{r.structure:.4f}", str(r.rank_structure),
                 f"{r.overall:.4f}", str(r.rank_overall))
            )
        widths = [max(len(str(x)) for x in col) for col in zip(head, *body)]
        lines = []
        for row in (head, *body):
            cells = [str(c).ljust(w) if i == 0 else str(c).rjust(w) for i, (c, w) in enumerate(zip(row, widths))]
            lines.append("  ".join(cells).rstrip())
        return "\n".join(lines) + "\n"


def build_report(rows: Sequence[tuple[str, CriterionScores]]) -> EvaluationReport:
    if not rows:
        raise ValueError("at least one row is required")
    aggs = [aggregate(s) for _, s in rows]
    ranks = [_dense_rank([a[i] for a in aggs]) for i in range(3)]
    return EvaluationReport(
        tuple(
            ReportRow(name, s, *aggs[i], ranks[0][i], ranks[1][i], ranks[2][i])
            for i, (name, s) in enumerate(rows)
        )
    )


def load_scores(path=None) -> list[tuple[str, CriterionScores]]:
    """``kg_name, cr1..cr6, computed_flags`` CSV; flags are ``|``-separated criterion names."""
    out = []
    with open(path or TABLE1_SCORES, encoding="utf-8", newline="") as fh:
        reader = csv.DictReader((l for l in fh if not l.startswith("#")), skipinitialspace=True)
        for rowno, rec in enumerate(reader, start=2):
            try:
                vals = {c: float(rec[c]) for c in ("cr1", "cr2", "cr3", "cr4", "cr5", "cr6")}
                flags = frozenset(f.strip() for f in (rec.get("computed_flags") or "").split("|") if f.strip())
                out.append((rec["kg_name"].strip(), CriterionScores(**vals, computed=flags)))
            except (KeyError, TypeError, ValueError) as exc:
                raise MalformedRow(rowno, f"bad scores row: {exc}") from None
    return out


def load_annotations(path) -> list[AnnotationSheet]:
    """``annotator, artwork_iri, score`` CSV into one sheet per annotator."""
    per: dict[str, dict] = {}
    with open(path, encoding="utf-8", newline="") as fh:
        for rowno, rec in enumerate(csv.DictReader(fh, skipinitialspace=True), start=2):
            try:
                per.setdefault(rec["annotator"], {})[rec["artwork_iri"]] = float(rec["score"])
            except (KeyError, TypeError, ValueError) as exc:
                raise MalformedRow(rowno, f"bad annotation row: {exc}") from None
    return [AnnotationSheet(a, s) for a, s in sorted(per.items())]
