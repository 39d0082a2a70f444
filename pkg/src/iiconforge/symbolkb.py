"""Symbolism knowledge base: simulations indexed by symbol and by meaning.

A simulation ties a symbol (the simulacrum) to a meaning (its reality
counterpart) inside one cultural context. The loader accepts the TSV layout::

    symbol_iri <TAB> meaning_iri <TAB> context_tag

or an N-Triples dump in which each simulation node carries one
symbol/meaning/context triple (predicates configurable, see
:class:`TriplePredicates`). Labels come from a ``label <TAB> symbol_iri``
table or, for triple dumps, from label triples on the symbol.
"""

from __future__ import annotations

import io
import os
import unicodedata
from collections import defaultdict
from dataclasses import dataclass, field
from pathlib import Path
from types import MappingProxyType
from typing import Iterable, Mapping, NamedTuple, Optional, Union

from .errors import EmptyKB, MalformedRecord
from .model import Iri
from .rdf import RDFS_LABEL, Literal, parse_ntriples, term_value

SIM_HEADER = ("symbol_iri", "meaning_iri", "context_tag")
LABEL_HEADER = ("label", "symbol_iri")

Source = Union[str, os.PathLike, Iterable[str]]


class Simulation(NamedTuple):
    symbol: str
    meaning: str
    context: str


@dataclass(frozen=True)
class TriplePredicates:
    """Predicate IRIs for triple-form dumps.

    The defaults are placeholders in the simulation ontology namespace; set
    them to whatever the dump actually uses.
    """

    simulacrum: str = "https://w3id.org/simulation/ontology/hasSimulacrum"
    reality_counterpart: str = "https://w3id.org/simulation/ontology/hasRealityCounterpart"
    context: str = "https://w3id.org/simulation/ontology/hasContext"
    label: str = str(RDFS_LABEL)


@dataclass(frozen=True)
class LoadSummary:
    records: int
    duplicates: int
    labels: int
    label_conflicts: int = 0


def normalize_label(label: str) -> str:
    return " ".join(unicodedata.normalize("NFC", label).lower().split())


@dataclass(frozen=True, eq=True)
class SymbolKB:
    simulations: frozenset
    by_symbol: Mapping[str, frozenset]
    by_meaning: Mapping[str, frozenset]
    labels: Mapping[str, str] = field(default_factory=dict)

    @classmethod
    def build(cls, simulations: Iterable[Simulation], labels: Mapping[str, str] = None):
        sims = frozenset(Simulation(*s) for s in simulations)
        by_symbol, by_meaning = defaultdict(set), defaultdict(set)
        for s in sims:
            by_symbol[s.symbol].add((s.meaning, s.context))
            by_meaning[s.meaning].add((s.symbol, s.context))
        return cls(
            simulations=sims,
            by_symbol=MappingProxyType({k: frozenset(v) for k, v in by_symbol.items()}),
            by_meaning=MappingProxyType({k: frozenset(v) for k, v in by_meaning.items()}),
            labels=MappingProxyType(dict(labels or {})),
        )

    def __len__(self):
        return len(self.simulations)


def _lines(source: Source) -> Iterable[str]:
    if isinstance(source, (str, os.PathLike)) and not (isinstance(source, str) and "\n" in source):
        with open(source, encoding="utf-8", newline="") as fh:
            yield from fh
    elif isinstance(source, str):
        yield from io.StringIO(source, newline="")
    else:
        yield from source


def _tsv_rows(source: Source, header: tuple[str, ...]):
    """Yield (lineno, columns) for data rows, after checking the header row."""
    it = iter(_lines(source))
    first = next(it, None)
    if first is None:
        return
    cols = [c.strip() for c in first.rstrip("\r\n").split("\t")]
    if tuple(cols[: len(header)]) != header:
        raise MalformedRecord(1, f"expected header {' / '.join(header)}")
    for lineno, line in enumerate(it, start=2):
        line = line.rstrip("\r\n")
        if not line.strip():
            continue
        yield lineno, line.split("\t")


def _add_label(labels: dict, conflicts: list, label: str, symbol: str):
    key = normalize_label(label)
    if not key:
        return
    prev = labels.get(key)
    if prev is not None and prev != symbol:
        conflicts.append(key)
        # smallest IRI wins so the result does not depend on row order
        symbol = min(prev, symbol)
    labels[key] = symbol


def load_kb(
    simulations: Source,
    labels: Optional[Source] = None,
    *,
    fmt: str = "tsv",
    predicates: TriplePredicates = TriplePredicates(),
) -> tuple[SymbolKB, LoadSummary]:
    """Load simulations (and optional label rows) into a frozen :class:`SymbolKB`."""
    sims: set[Simulation] = set()
    label_map: dict[str, str] = {}
    conflicts: list[str] = []
    n_records = 0

    if fmt == "tsv":
        for lineno, cols in _tsv_rows(simulations, SIM_HEADER):
            if len(cols) < 3 or not all(c.strip() for c in cols[:3]):
                raise MalformedRecord(lineno)
            try:
                sym, meaning = Iri(cols[0].strip()), Iri(cols[1].strip())
            except ValueError as exc:
                raise MalformedRecord(lineno, str(exc)) from None
            n_records += 1
            sims.add(Simulation(sym, meaning, cols[2].strip()))
    elif fmt in ("nt", "ntriples"):
        nodes: dict[str, dict[str, str]] = defaultdict(dict)
        first_line: dict[str, int] = {}
        role = {
            predicates.simulacrum: "symbol",
            predicates.reality_counterpart: "meaning",
            predicates.context: "context",
        }
        for lineno, line in enumerate(_lines(simulations), start=1):
            for t in parse_ntriples([line]):
                p = str(t.predicate)
                if p in role:
                    nodes[str(t.subject)][role[p]] = term_value(t.object)
                    first_line.setdefault(str(t.subject), lineno)
                elif p == predicates.label and isinstance(t.object, Literal):
                    _add_label(label_map, conflicts, t.object.value, str(t.subject))
        for node, parts in nodes.items():
            if len(parts) != 3:
                raise MalformedRecord(first_line[node], f"simulation {node} lacks {sorted({'symbol', 'meaning', 'context'} - parts.keys())}")
            n_records += 1
            sims.add(Simulation(Iri(parts["symbol"]), Iri(parts["meaning"]), parts["context"]))
    else:
        raise ValueError(f"unknown KB format {fmt!r}")

    if labels is not None:
        for lineno, cols in _tsv_rows(labels, LABEL_HEADER):
            if len(cols) < 2 or not cols[0].strip() or not cols[1].strip():
                raise MalformedRecord(lineno)
            _add_label(label_map, conflicts, cols[0], cols[1].strip())

    if not sims:
        raise EmptyKB()
    kb = SymbolKB.build(sims, label_map)
    summary = LoadSummary(
        records=n_records,
        duplicates=n_records - len(sims),
        labels=len(label_map),
        label_conflicts=len(conflicts),
    )
    return kb, summary


def match_label(label: str, kb: SymbolKB) -> Optional[str]:
    """Exact match on the normalized label. No fuzzy matching."""
    return kb.labels.get(normalize_label(label))


def meanings_of(symbol: str, kb: SymbolKB) -> frozenset:
    return kb.by_symbol.get(symbol, frozenset())


def symbols_of(meaning: str, kb: SymbolKB) -> frozenset:
    return kb.by_meaning.get(meaning, frozenset())


def write_kb_tsv(kb: SymbolKB, path: Union[str, Path]) -> None:
    rows = sorted(kb.simulations)
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write("\t".join(SIM_HEADER) + "\n")
        for s in rows:
            fh.write(f"{s.symbol}\t{s.meaning}\t{s.context}\n")
