"""Depiction data acquisition: paginated SPARQL client and offline dump readers."""

from __future__ import annotations

import hashlib
import logging
import os
import re
import string
import time
from dataclasses import dataclass
from pathlib import Path
from typing import Callable, Iterable, Iterator, Optional, Union

import requests

from .errors import (
    EndpointUnreachable,
    MalformedResponse,
    MalformedRow,
    QueryRejected,
    UnknownFormat,
)
from .model import Iri, QualifierKind, is_iri
from .rdf import RDFS_LABEL, Literal, Triple, canonical_ntriples, parse_ntriples, term, term_value

log = logging.getLogger(__name__)

ENDPOINT_ENV = "IICONFORGE_ENDPOINT"
RETRYABLE_STATUS = frozenset({408, 429, 500, 502, 503, 504})

WD = "http://www.wikidata.org/entity/"
WDT = "http://www.wikidata.org/prop/direct/"
P = "http://www.wikidata.org/prop/"
PS = "http://www.wikidata.org/prop/statement/"
PQ = "http://www.wikidata.org/prop/qualifier/"

DEPICTS = "P180"
INSTANCE_OF = "P31"
SUBCLASS_OF = "P279"
QUALIFIER_PROPS = {
    QualifierKind.WEARS: "P3828",
    QualifierKind.EXPRESSION_GESTURE_OR_POSE: "P6022",
    QualifierKind.SYMBOLIZES: "P4878",
}
_KIND_BY_TOKEN = {
    "wears": QualifierKind.WEARS,
    "p3828": QualifierKind.WEARS,
    "expression": QualifierKind.EXPRESSION_GESTURE_OR_POSE,
    "gesture": QualifierKind.EXPRESSION_GESTURE_OR_POSE,
    "pose": QualifierKind.EXPRESSION_GESTURE_OR_POSE,
    "expression, gesture, or body pose": QualifierKind.EXPRESSION_GESTURE_OR_POSE,
    "p6022": QualifierKind.EXPRESSION_GESTURE_OR_POSE,
    "symbolizes": QualifierKind.SYMBOLIZES,
    "p4878": QualifierKind.SYMBOLIZES,
}

TSV_COLUMNS = (
    "artwork_iri",
    "artwork_label",
    "element_iri",
    "element_label",
    "type_iris",
    "qualifier_kind",
    "qualifier_value",
)


def qualifier_kind(tag: str) -> QualifierKind:
    """Map a qualifier tag, property id or property IRI onto a kind."""
    t = tag.strip()
    for k in QualifierKind:
        if t == k.value:
            return k
    low = t.lower()
    if low.startswith("http"):
        low = low.rstrip("/").rsplit("/", 1)[-1]
    return _KIND_BY_TOKEN.get(low, QualifierKind.OTHER)


@dataclass(frozen=True)
class DepictsStatement:
    artwork: str
    artwork_label: str
    element: str
    element_label: str
    element_types: frozenset = frozenset()
    qualifiers: tuple = ()

    def __post_init__(self):
        Iri(self.artwork)
        Iri(self.element)
        object.__setattr__(self, "element_types", frozenset(self.element_types))
        quals = tuple(sorted(set(self.qualifiers), key=lambda q: (q[0].value, q[1])))
        object.__setattr__(self, "qualifiers", quals)

    @property
    def key(self):
        return (self.artwork, self.element, self.qualifiers)


@dataclass(frozen=True)
class EndpointConfig:
    endpoint_url: str
    page_size: int = 1000
    max_retries: int = 3
    request_timeout: float = 60.0
    user_agent: str = "iiconforge/0.1 (batch harvester)"
    backoff_base: float = 0.5

    def __post_init__(self):
        if self.page_size < 1:
            raise ValueError("page_size must be >= 1")
        if self.request_timeout <= 0:
            raise ValueError("request_timeout must be > 0")
        if self.max_retries < 0:
            raise ValueError("max_retries must be >= 0")

    @classmethod
    def from_env(cls, default_url: str, **kw) -> "EndpointConfig":
        return cls(os.environ.get(ENDPOINT_ENV) or default_url, **kw)


DEFAULT_QUERY = (Path(__file__).parent / "data" / "depicts_query.rq")


_PLACEHOLDER = {name: re.compile(rf"\$(?:{name}\b|\{{{name}\}})") for name in ("limit", "offset")}


def render_query(template: str, limit: int, offset: int) -> str:
    if not all(rx.search(template) for rx in _PLACEHOLDER.values()):
        raise ValueError("query template needs $limit and $offset placeholders")
    return string.Template(template).safe_substitute(limit=limit, offset=offset)


def _binding(b: dict, *names: str) -> str:
    for n in names:
        if n in b:
            return b[n]["value"]
    return ""


def statement_from_binding(b: dict) -> DepictsStatement:
    """Turn one SPARQL JSON binding into a statement.

    Expected variables: artwork, artworkLabel, element, elementLabel, types
    (``|``-joined), qualifierKind, qualifierValue. Label and qualifier
    variables are optional.
    """
    types = _binding(b, "types")
    kind = _binding(b, "qualifierKind", "qualifier")
    value = _binding(b, "qualifierValue")
    quals = ((qualifier_kind(kind), value),) if kind and value else ()
    return DepictsStatement(
        artwork=_binding(b, "artwork"),
        artwork_label=_binding(b, "artworkLabel"),
        element=_binding(b, "element"),
        element_label=_binding(b, "elementLabel"),
        element_types=frozenset(t for t in types.split("|") if t),
        qualifiers=quals,
    )


def _get_page(session, cfg: EndpointConfig, query: str, page: int, sleep) -> list:
    headers = {"User-Agent": cfg.user_agent, "Accept": "application/sparql-results+json"}
    last = None
    for attempt in range(cfg.max_retries + 1):
        if attempt:
            delay = cfg.backoff_base * 2 ** (attempt - 1)
            log.warning("retry %d/%d for page %d in %.2fs (%s)", attempt, cfg.max_retries, page, delay, last)
            sleep(delay)
        try:
            resp = session.get(
                cfg.endpoint_url,
                params={"query": query},
                headers=headers,
                timeout=cfg.request_timeout,
            )
        except (requests.ConnectionError, requests.Timeout) as exc:
            last = exc
            continue
        if resp.status_code in RETRYABLE_STATUS:
            last = f"HTTP {resp.status_code}"
            continue
        if not 200 <= resp.status_code < 300:
            raise QueryRejected(resp.status_code, resp.text)
        try:
            return resp.json()["results"]["bindings"]
        except (ValueError, KeyError, TypeError) as exc:
            raise MalformedResponse(page, str(exc)) from None
    raise EndpointUnreachable(f"{cfg.endpoint_url}: gave up after {cfg.max_retries} retries ({last})")


def fetch_depicts(
    cfg: EndpointConfig,
    query_template: str,
    *,
    session: Optional[requests.Session] = None,
    sleep: Callable[[float], None] = time.sleep,
) -> Iterator[DepictsStatement]:
    """Page through the endpoint with LIMIT/OFFSET until a short page.

    Duplicate (artwork, element, qualifier set) rows are yielded once.
    """
    session = session or requests.Session()
    seen = set()
    offset, page = 0, 0
    while True:
        query = render_query(query_template, cfg.page_size, offset)
        rows = _get_page(session, cfg, query, page, sleep)
        for b in rows:
            try:
                stmt = statement_from_binding(b)
            except (ValueError, KeyError, TypeError) as exc:
                raise MalformedResponse(page, str(exc)) from None
            if stmt.key not in seen:
                seen.add(stmt.key)
                yield stmt
        if len(rows) < cfg.page_size:
            return
        offset += cfg.page_size
        page += 1


# -- offline dumps -----------------------------------------------------------


def _open_lines(path) -> Iterator[str]:
    with open(path, encoding="utf-8", newline="") as fh:
        yield from fh


def _read_tsv(lines: Iterable[str]) -> Iterator[DepictsStatement]:
    it = iter(lines)
    header = next(it, None)
    if header is None:
        return
    cols = tuple(c.strip() for c in header.rstrip("\r\n").split("\t"))
    if cols != TSV_COLUMNS:
        raise MalformedRow(1, "unexpected header")
    current, cur_quals = None, []
    for lineno, raw in enumerate(it, start=2):
        line = raw.rstrip("\r\n")
        if not line.strip():
            continue
        parts = line.split("\t")
        if len(parts) != len(TSV_COLUMNS):
            raise MalformedRow(lineno, f"expected {len(TSV_COLUMNS)} columns, got {len(parts)}")
        art, art_label, el, el_label, types, qkind, qvalue = parts
        if not el.strip():
            raise MalformedRow(lineno, "empty element IRI")
        if not art.strip():
            raise MalformedRow(lineno, "empty artwork IRI")
        if not (is_iri(art) and is_iri(el)):
            raise MalformedRow(lineno, "invalid IRI")
        if bool(qkind) != bool(qvalue):
            raise MalformedRow(lineno, "qualifier kind and value must both be set")
        key = (art, el)
        if current is not None and current[0] != key:
            yield _finish(current, cur_quals)
            current = None
        if current is None:
            current, cur_quals = (key, art_label, el_label, types), []
        if qkind:
            cur_quals.append((qualifier_kind(qkind), qvalue))
    if current is not None:
        yield _finish(current, cur_quals)


def _finish(current, quals) -> DepictsStatement:
    (art, el), art_label, el_label, types = current
    return DepictsStatement(
        artwork=art,
        artwork_label=art_label,
        element=el,
        element_label=el_label,
        element_types=frozenset(t for t in types.split("|") if t),
        qualifiers=tuple(quals),
    )


def _read_ntriples(lines: Iterable[str]) -> Iterator[DepictsStatement]:
    """Wikidata-shaped statement nodes: ``artwork p:P180 node``, ``node ps:P180 element``.

    Types (wdt:P31/P279) and labels (rdfs:label) are collected first, so this
    reader materializes the file.
    """
    labels, types = {}, {}
    order, stmts = [], {}
    qual_kind = {PQ + pid: kind for kind, pid in QUALIFIER_PROPS.items()}
    for t in parse_ntriples(lines):
        s, p, o = str(t.subject), str(t.predicate), t.object
        if p == str(RDFS_LABEL) and isinstance(o, Literal):
            labels[s] = o.value
        elif p in (WDT + INSTANCE_OF, WDT + SUBCLASS_OF):
            types.setdefault(s, set()).add(term_value(o))
        elif p == P + DEPICTS:
            node = stmts.setdefault(term_value(o), {"quals": []})
            node["artwork"] = s
            if term_value(o) not in order:
                order.append(term_value(o))
        elif p == PS + DEPICTS:
            node = stmts.setdefault(s, {"quals": []})
            node["element"] = term_value(o)
            if s not in order:
                order.append(s)
        elif p.startswith(PQ):
            node = stmts.setdefault(s, {"quals": []})
            kind = qual_kind.get(p, QualifierKind.OTHER)
            node["quals"].append((kind, term_value(o)))
    for node_id in order:
        node = stmts[node_id]
        if "artwork" not in node or "element" not in node:
            raise MalformedRow(0, f"statement node {node_id} lacks artwork or element")
        yield DepictsStatement(
            artwork=node["artwork"],
            artwork_label=labels.get(node["artwork"], ""),
            element=node["element"],
            element_label=labels.get(node["element"], ""),
            element_types=frozenset(types.get(node["element"], ())),
            qualifiers=tuple(node["quals"]),
        )


def read_depicts_dump(path: Union[str, os.PathLike], fmt: str = "tsv") -> Iterator[DepictsStatement]:
    """Lazily read a depicts dump in ``tsv`` or ``nt`` (N-Triples subset) form."""
    fmt = fmt.lower()
    if fmt == "tsv":
        return _read_tsv(_open_lines(path))
    if fmt in ("nt", "ntriples"):
        return _read_ntriples(_open_lines(path))
    raise UnknownFormat(f"unknown depicts dump format {fmt!r}")


def write_depicts_tsv(stmts: Iterable[DepictsStatement], path) -> int:
    """Write statements as the depicts TSV. Qualifier rows repeat the key columns."""
    n = 0
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write("\t".join(TSV_COLUMNS) + "\n")
        for s in stmts:
            base = [s.artwork, s.artwork_label, s.element, s.element_label, "|".join(sorted(s.element_types))]
            for field_ in (s.artwork_label, s.element_label):
                if "\t" in field_ or "\n" in field_:
                    raise ValueError("labels may not contain tabs or newlines")
            quals = s.qualifiers or ((None, ""),)
            for kind, value in quals:
                fh.write("\t".join(base + [kind.value if kind else "", value]) + "\n")
            n += 1
    return n


def depicts_to_triples(stmts: Iterable[DepictsStatement]) -> list[Triple]:
    """Encode statements as Wikidata-shaped triples (inverse of the N-Triples reader)."""
    out: list[Triple] = []
    for s in stmts:
        digest = hashlib.sha1("\x1f".join([s.artwork, s.element, repr(s.qualifiers)]).encode()).hexdigest()[:16]
        node = Iri(f"{WD}statement/{digest}")
        out.append(Triple(Iri(s.artwork), Iri(P + DEPICTS), node))
        out.append(Triple(node, Iri(PS + DEPICTS), Iri(s.element)))
        if s.artwork_label:
            out.append(Triple(Iri(s.artwork), RDFS_LABEL, Literal(s.artwork_label)))
        if s.element_label:
            out.append(Triple(Iri(s.element), RDFS_LABEL, Literal(s.element_label)))
        for t in s.element_types:
            out.append(Triple(Iri(s.element), Iri(WDT + INSTANCE_OF), Iri(t)))
        for kind, value in s.qualifiers:
            pid = QUALIFIER_PROPS.get(kind, "P0")
            out.append(Triple(node, Iri(PQ + pid), term(value)))
    return out


def write_depicts_nt(stmts: Iterable[DepictsStatement], path) -> int:
    lines = canonical_ntriples(depicts_to_triples(stmts))
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.writelines(line + "\n" for line in lines)
    return len(lines)


def load_query_template(path=None) -> str:
    return Path(path or DEFAULT_QUERY).read_text(encoding="utf-8")
