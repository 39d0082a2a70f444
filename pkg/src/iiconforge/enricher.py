"""Symbolic enrichment: join recognized elements with the symbolism KB."""

from __future__ import annotations

import csv
import json
from collections import Counter
from dataclasses import dataclass, field
from typing import Iterable, Mapping, NamedTuple, Optional

from .model import Recognition
from .symbolkb import SymbolKB, match_label, meanings_of

AUTOMATIC_ENRICHMENT = "AutomaticEnrichment"


class SymbolicInterpretation(NamedTuple):
    artwork: str
    element: str
    symbol: str
    meaning: str
    context: str
    level: str = ""

    @property
    def key(self):
        return (self.artwork, self.symbol, self.meaning, self.context)

    provenance = AUTOMATIC_ENRICHMENT

    def to_json(self) -> str:
        return json.dumps(self._asdict(), ensure_ascii=False, separators=(",", ":"))

    @classmethod
    def from_json(cls, line: str) -> "SymbolicInterpretation":
        return cls(**json.loads(line))


@dataclass
class LinkResult:
    links: dict = field(default_factory=dict)
    unmatched: Counter = field(default_factory=Counter)
    via_iri: int = 0
    via_label: int = 0

    def write_unmatched(self, path, labels: Optional[Mapping[str, str]] = None):
        labels = labels or {}
        with open(path, "w", encoding="utf-8", newline="\n") as fh:
            fh.write("element\tlabel\toccurrence_count\n")
            for el, n in sorted(self.unmatched.items(), key=lambda kv: (-kv[1], kv[0])):
                fh.write(f"{el}\t{labels.get(el, '')}\t{n}\n")


def load_id_alignment(path) -> dict[str, str]:
    """``element_iri, symbol_iri`` CSV."""
    with open(path, encoding="utf-8", newline="") as fh:
        rows = csv.DictReader((l for l in fh if not l.startswith("#")), skipinitialspace=True)
        return {r["element_iri"].strip(): r["symbol_iri"].strip() for r in rows if r.get("element_iri")}


def link_elements(
    recognitions: Iterable[Recognition],
    kb: SymbolKB,
    id_alignment: Optional[Mapping[str, str]] = None,
) -> LinkResult:
    """Element -> symbol map; IRI alignment first, then exact label match.

    ``unmatched`` counts, per element, the recognitions that could not be linked.
    """
    id_alignment = id_alignment or {}
    res = LinkResult()
    misses: set[str] = set()
    for rec in recognitions:
        el = rec.element
        if el in res.links:
            continue
        if el in misses:
            res.unmatched[el] += 1
            continue
        sym = id_alignment.get(el)
        if sym is not None:
            res.via_iri += 1
        elif rec.element_label:
            sym = match_label(rec.element_label, kb)
            res.via_label += sym is not None
        if sym is None:
            misses.add(el)
            res.unmatched[el] += 1
        else:
            res.links[el] = sym
    return res


@dataclass
class EnrichmentRun:
    interpretations: list
    links: LinkResult
    # per-element count before collapsing the same symbol depicted twice
    per_element_count: int = 0
    audit: list = field(default_factory=list)

    @property
    def mean_per_artwork(self) -> float:
        arts = {i.artwork for i in self.interpretations}
        return len(self.interpretations) / len(arts) if arts else 0.0


def enrich_with_report(
    recognitions: Iterable[Recognition],
    kb: SymbolKB,
    id_alignment: Optional[Mapping[str, str]] = None,
) -> EnrichmentRun:
    recs = sorted(recognitions, key=lambda r: r.key)
    links = link_elements(recs, kb, id_alignment)
    best: dict[tuple, SymbolicInterpretation] = {}
    audit = []
    seen_elem = set()
    for rec in recs:
        sym = links.links.get(rec.element)
        if sym is None:
            continue
        for meaning, context in sorted(meanings_of(sym, kb)):
            interp = SymbolicInterpretation(rec.artwork, rec.element, sym, meaning, context, rec.level.tag)
            ekey = (rec.artwork, rec.element, sym, meaning, context)
            if ekey in seen_elem:
                continue
            seen_elem.add(ekey)
            audit.append(interp)
            # recs are key-sorted, so the first element reaching a key is the smallest
            best.setdefault(interp.key, interp)
    interps = [best[k] for k in sorted(best)]
    return EnrichmentRun(interps, links, per_element_count=len(seen_elem), audit=audit)


def enrich(
    recognitions: Iterable[Recognition],
    kb: SymbolKB,
    id_alignment: Optional[Mapping[str, str]] = None,
) -> list[SymbolicInterpretation]:
    """All (artwork, element, symbol, meaning, context) justified by one
    recognition plus one simulation, unique per (artwork, symbol, meaning, context)."""
    return enrich_with_report(recognitions, kb, id_alignment).interpretations
