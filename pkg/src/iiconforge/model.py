"""Shared domain vocabulary: IRIs, interpretation levels, artworks, recognitions."""

from __future__ import annotations

import json
import re
from dataclasses import dataclass, field, replace
from enum import Enum
from typing import Iterable, Optional

_SCHEME = re.compile(r"^[A-Za-z][A-Za-z0-9+.\-]*:")
# characters N-Triples forbids inside IRIREF, plus whitespace
_FORBIDDEN = re.compile(r'[\s<>"{}|^`\\]')


def is_iri(value: str) -> bool:
    return bool(value) and bool(_SCHEME.match(value)) and not _FORBIDDEN.search(value)


class Iri(str):
    """An absolute IRI. Validated on construction, otherwise a plain ``str``."""

    __slots__ = ()

    def __new__(cls, value: str):
        if isinstance(value, Iri):
            return value
        if not isinstance(value, str) or not is_iri(value):
            raise ValueError(f"not an absolute IRI: {value!r}")
        return super().__new__(cls, value)


class Level(Enum):
    PRE_ICONOGRAPHIC = "PreIconographic"
    ICONOGRAPHIC = "Iconographic"
    ICONOLOGICAL = "Iconological"


class Subclass(Enum):
    NATURAL_ELEMENT = "NaturalElement"
    ACTION = "Action"
    EXPRESSION = "Expression"
    CHARACTER = "Character"
    EVENT = "Event"
    # allegories are folded in here; see Recognition.annotation
    STORY = "Story"
    ATTRIBUTE = "Attribute"
    PLACE = "Place"
    MEANING = "Meaning"
    CULTURAL_PHENOMENON = "CulturalPhenomenon"


SUBCLASSES: dict[Level, frozenset[Subclass]] = {
    Level.PRE_ICONOGRAPHIC: frozenset(
        {Subclass.NATURAL_ELEMENT, Subclass.ACTION, Subclass.EXPRESSION}
    ),
    Level.ICONOGRAPHIC: frozenset(
        {
            Subclass.CHARACTER,
            Subclass.EVENT,
            Subclass.STORY,
            Subclass.ATTRIBUTE,
            Subclass.PLACE,
        }
    ),
    Level.ICONOLOGICAL: frozenset({Subclass.MEANING, Subclass.CULTURAL_PHENOMENON}),
}


@dataclass(frozen=True)
class InterpretationLevel:
    """A level plus (optionally) its ICON subclass.

    ``subclass`` may be ``None`` for macro-level recognitions, which is what
    the free-text path produces: it can tell the level apart but not the class.
    """

    level: Level
    subclass: Optional[Subclass] = None

    def __post_init__(self):
        if self.subclass is not None and self.subclass not in SUBCLASSES[self.level]:
            raise ValueError(
                f"{self.subclass.value} is not a subclass of {self.level.value}"
            )

    @property
    def tag(self) -> str:
        if self.subclass is None:
            return self.level.value
        return f"{self.level.value}/{self.subclass.value}"

    @classmethod
    def from_tag(cls, tag: str) -> "InterpretationLevel":
        level_s, _, sub_s = tag.strip().partition("/")
        try:
            level = Level(level_s)
            sub = Subclass(sub_s) if sub_s else None
        except ValueError:
            raise ValueError(f"unknown interpretation level tag {tag!r}") from None
        return cls(level, sub)

    def __str__(self) -> str:
        return self.tag

    # ordering by tag; Enum members themselves do not order
    def __lt__(self, other):
        return self.tag < other.tag

    def __le__(self, other):
        return self.tag <= other.tag

    def __gt__(self, other):
        return self.tag > other.tag

    def __ge__(self, other):
        return self.tag >= other.tag


class Source(Enum):
    WIKIDATA_LIKE = "WikidataLike"
    ARCO_LIKE = "ArCoLike"


@dataclass(frozen=True)
class Artwork:
    id: Iri
    label: str = ""
    source: Source = Source.WIKIDATA_LIKE


@dataclass(frozen=True)
class DepictedElement:
    id: str
    label: str
    type_ids: frozenset = frozenset()

    def __post_init__(self):
        if not self.label.strip():
            raise ValueError("depicted element label must be non-empty")


class QualifierKind(Enum):
    WEARS = "Wears"
    EXPRESSION_GESTURE_OR_POSE = "ExpressionGestureOrPose"
    SYMBOLIZES = "Symbolizes"
    OTHER = "Other"


class Provenance(Enum):
    SOURCE_KG = "SourceKG"
    PARSER_HEURISTIC = "ParserHeuristic"
    MANUAL_MAPPING = "ManualMapping"


TRUST = {
    Provenance.PARSER_HEURISTIC: 0,
    Provenance.SOURCE_KG: 1,
    Provenance.MANUAL_MAPPING: 2,
}

Qualifier = tuple  # (QualifierKind, target: str)


def _qualifier_key(q):
    return (q[0].value, q[1])


@dataclass(frozen=True)
class Recognition:
    """One leveled interpretation statement about an element of an artwork.

    ``element_label`` and ``annotation`` ride along for linking and display;
    neither is part of the identity key used by :func:`dedupe_recognitions`.
    """

    artwork: str
    element: str
    level: InterpretationLevel
    qualifiers: tuple = ()
    provenance: Provenance = Provenance.SOURCE_KG
    element_label: str = field(default="", compare=False)
    annotation: Optional[str] = field(default=None, compare=False)

    def __post_init__(self):
        quals = tuple(sorted(set(self.qualifiers), key=_qualifier_key))
        object.__setattr__(self, "qualifiers", quals)
        if quals and self.level.level is Level.ICONOLOGICAL:
            raise ValueError("iconological recognitions carry no qualifiers")

    @property
    def key(self) -> tuple[str, str, str]:
        return (self.artwork, self.element, self.level.tag)


def dedupe_recognitions(recs: Iterable[Recognition]) -> list[Recognition]:
    """Collapse recognitions sharing (artwork, element, level).

    Qualifiers of the duplicates are unioned and the most trusted provenance
    wins. The result is sorted by key so equal inputs give equal outputs.
    """
    merged: dict[tuple, Recognition] = {}
    for rec in recs:
        prev = merged.get(rec.key)
        if prev is None:
            merged[rec.key] = rec
            continue
        prov = max(prev.provenance, rec.provenance, key=TRUST.__getitem__)
        merged[rec.key] = replace(
            prev,
            qualifiers=prev.qualifiers + rec.qualifiers,
            provenance=prov,
            element_label=prev.element_label or rec.element_label,
            annotation=prev.annotation or rec.annotation,
        )
    return [merged[k] for k in sorted(merged)]


def recognition_to_json(rec: Recognition) -> str:
    return json.dumps(
        {
            "artwork": rec.artwork,
            "element": rec.element,
            "level": rec.level.tag,
            "qualifiers": [[k.value, v] for k, v in rec.qualifiers],
            "provenance": rec.provenance.value,
            "element_label": rec.element_label,
            "annotation": rec.annotation,
        },
        ensure_ascii=False,
        separators=(",", ":"),
    )


def recognition_from_json(line: str) -> Recognition:
    d = json.loads(line)
    return Recognition(
        artwork=d["artwork"],
        element=d["element"],
        level=InterpretationLevel.from_tag(d["level"]),
        qualifiers=tuple((QualifierKind(k), v) for k, v in d.get("qualifiers", ())),
        provenance=Provenance(d.get("provenance", Provenance.SOURCE_KG.value)),
        element_label=d.get("element_label", ""),
        annotation=d.get("annotation"),
    )
