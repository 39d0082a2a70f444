"""Type -> ICON class alignment and construction of leveled recognitions."""

from __future__ import annotations

import csv
from collections import Counter, defaultdict
from dataclasses import dataclass, field, replace
from enum import Enum
from pathlib import Path
from types import MappingProxyType
from typing import Iterable, Mapping, NamedTuple, Optional

from .errors import DuplicateType, MalformedRow, PriorityClash, UnknownIconClass
from .harvester import DepictsStatement
from .model import (
    InterpretationLevel,
    Level,
    Provenance,
    QualifierKind,
    Recognition,
    Subclass,
    dedupe_recognitions,
    is_iri,
)

STARTER_ALIGNMENT = Path(__file__).parent / "data" / "alignment_starter.csv"
ALIGNMENT_COLUMNS = ("type_iri", "icon_level", "icon_subclass", "priority")

ATTRIBUTE = InterpretationLevel(Level.ICONOGRAPHIC, Subclass.ATTRIBUTE)
EXPRESSION = InterpretationLevel(Level.PRE_ICONOGRAPHIC, Subclass.EXPRESSION)


class AlignmentRow(NamedTuple):
    level: InterpretationLevel
    priority: int


@dataclass(frozen=True)
class AlignmentTable:
    rows: Mapping[str, AlignmentRow]
    coverage_note: str = ""

    def __len__(self):
        return len(self.rows)

    def __contains__(self, type_iri):
        return type_iri in self.rows

    @classmethod
    def from_rows(cls, rows: Iterable[tuple[str, InterpretationLevel, int]], note: str = ""):
        """Build and validate a table from (type, level, priority) triples."""
        table: dict[str, AlignmentRow] = {}
        for type_iri, level, prio in rows:
            prev = table.get(type_iri)
            if prev is not None:
                if prev.level != level:
                    raise DuplicateType(type_iri)
                prio = min(prio, prev.priority)
            table[type_iri] = AlignmentRow(level, prio)
        by_prio = defaultdict(set)
        for row in table.values():
            by_prio[row.priority].add(row.level.tag)
        for prio, tags in by_prio.items():
            if len(tags) > 1:
                raise PriorityClash(prio, tags)
        return cls(MappingProxyType(table), note or f"{len(table)} aligned types")


def _parse_level(level_s: str, sub_s: str) -> InterpretationLevel:
    level_s, sub_s = level_s.strip(), sub_s.strip()
    level = next(l for l in Level if l.value.lower() == level_s.lower())
    sub = next(s for s in Subclass if s.value.lower() == sub_s.lower()) if sub_s else None
    if sub is None:
        raise ValueError("subclass required")
    return InterpretationLevel(level, sub)


def load_alignment(path) -> AlignmentTable:
    """Read ``type_iri, icon_level, icon_subclass, priority`` rows.

    Lines starting with ``#`` are comments; extra columns (e.g. a label) are
    ignored.
    """
    with open(path, encoding="utf-8", newline="") as fh:
        lines = [l for l in fh if not l.lstrip().startswith("#")]
    reader = csv.DictReader(lines, skipinitialspace=True)
    missing = set(ALIGNMENT_COLUMNS) - set(reader.fieldnames or ())
    if missing:
        raise MalformedRow(1, f"alignment header lacks {sorted(missing)}")
    rows = []
    for rowno, rec in enumerate(reader, start=1):
        try:
            level = _parse_level(rec["icon_level"] or "", rec["icon_subclass"] or "")
        except (StopIteration, ValueError):
            raise UnknownIconClass(rowno, f"{rec['icon_level']}/{rec['icon_subclass']}") from None
        try:
            prio = int(rec["priority"])
        except (TypeError, ValueError):
            raise MalformedRow(rowno, f"bad priority {rec['priority']!r}") from None
        rows.append((rec["type_iri"].strip(), level, prio))
    return AlignmentTable.from_rows(rows, note=f"{len(rows)} rows from {Path(path).name}")


class Status(Enum):
    ASSIGNED = "Assigned"
    UNASSIGNED = "Unassigned"
    CONFLICT = "Conflict"


@dataclass(frozen=True)
class AssignmentOutcome:
    element: str
    assigned: Optional[InterpretationLevel]
    matched_type: Optional[str]
    status: Status


def assign_icon_class(stmt: DepictsStatement, table: AlignmentTable) -> AssignmentOutcome:
    """Pick the ICON class of the element's best-priority aligned type.

    Lower priority numbers win. Two hits at the winning priority that map to
    different classes give ``Conflict``; a validated table cannot produce that.
    """
    hits = [(table.rows[t].priority, t) for t in stmt.element_types if t in table.rows]
    if not hits:
        return AssignmentOutcome(stmt.element, None, None, Status.UNASSIGNED)
    best = min(p for p, _ in hits)
    winners = sorted(t for p, t in hits if p == best)
    levels = {table.rows[t].level for t in winners}
    if len(levels) > 1:
        return AssignmentOutcome(stmt.element, None, None, Status.CONFLICT)
    return AssignmentOutcome(stmt.element, levels.pop(), winners[0], Status.ASSIGNED)


@dataclass
class UnassignedReport:
    """Statements whose element got no ICON class, aggregated per element."""

    counts: Counter = field(default_factory=Counter)
    labels: dict = field(default_factory=lambda: defaultdict(set))
    types: dict = field(default_factory=lambda: defaultdict(set))
    conflicts: int = 0
    assigned: int = 0

    @property
    def unassigned(self) -> int:
        return sum(self.counts.values())

    @property
    def total(self) -> int:
        return self.assigned + self.unassigned

    @property
    def coverage(self) -> float:
        return self.assigned / self.total if self.total else 1.0

    def add(self, stmt: DepictsStatement, conflict: bool = False):
        self.counts[stmt.element] += 1
        if stmt.element_label:
            self.labels[stmt.element].add(stmt.element_label)
        self.types[stmt.element].update(stmt.element_types)
        self.conflicts += conflict

    def rows(self):
        for el, n in sorted(self.counts.items(), key=lambda kv: (-kv[1], kv[0])):
            yield el, "|".join(sorted(self.labels.get(el, ()))), "|".join(sorted(self.types.get(el, ()))), n

    def write_tsv(self, path):
        with open(path, "w", encoding="utf-8", newline="\n") as fh:
            fh.write("element_iri\tlabels\ttype_iris\toccurrence_count\n")
            for row in self.rows():
                fh.write("\t".join(map(str, row)) + "\n")


def build_recognitions(
    stmts: Iterable[DepictsStatement], table: AlignmentTable
) -> tuple[list[Recognition], UnassignedReport]:
    """Recognitions for every statement whose element the table can classify.

    Every other statement ends up in the report, so
    ``report.assigned + report.unassigned`` equals the number of inputs.
    A worn item becomes an Attribute recognition when it, or one of its types
    seen anywhere in the stream, is in the table.
    """
    report = UnassignedReport()
    recs: list[Recognition] = []
    labels: dict[str, str] = {}
    types: dict[str, set] = defaultdict(set)
    worn: list[tuple[str, str]] = []
    for stmt in stmts:
        if stmt.element_label:
            labels.setdefault(stmt.element, stmt.element_label)
        types[stmt.element].update(stmt.element_types)
        outcome = assign_icon_class(stmt, table)
        if outcome.status is not Status.ASSIGNED:
            report.add(stmt, conflict=outcome.status is Status.CONFLICT)
            continue
        report.assigned += 1
        for kind, value in stmt.qualifiers:
            if kind is QualifierKind.WEARS:
                worn.append((stmt.artwork, value))
            elif kind is QualifierKind.EXPRESSION_GESTURE_OR_POSE and is_iri(value):
                recs.append(Recognition(stmt.artwork, value, EXPRESSION, provenance=Provenance.SOURCE_KG))
        recs.append(
            Recognition(
                stmt.artwork,
                stmt.element,
                outcome.assigned,
                qualifiers=stmt.qualifiers,
                provenance=Provenance.MANUAL_MAPPING,
                element_label=stmt.element_label,
            )
        )
    for artwork, value in worn:
        if not is_iri(value):
            continue
        if value in table.rows or any(t in table.rows for t in types.get(value, ())):
            recs.append(Recognition(artwork, value, ATTRIBUTE, provenance=Provenance.SOURCE_KG))
    recs = [
        r if r.element_label or r.element not in labels else replace(r, element_label=labels[r.element])
        for r in recs
    ]
    return dedupe_recognitions(recs), report
