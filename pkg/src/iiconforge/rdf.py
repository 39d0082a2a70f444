"""Minimal RDF term model with an N-Triples reader and canonical writers.

Only what the pipeline needs: IRIs (:class:`~iiconforge.model.Iri`), literals
with an optional datatype or language tag, and no blank nodes.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Iterator, NamedTuple, Optional, Union

from .errors import MalformedRecord
from .model import Iri, is_iri

XSD = "http://www.w3.org/2001/XMLSchema#"
RDF_TYPE = Iri("http://www.w3.org/1999/02/22-rdf-syntax-ns#type")
RDFS_LABEL = Iri("http://www.w3.org/2000/01/rdf-schema#label")


@dataclass(frozen=True)
class Literal:
    value: str
    datatype: Optional[str] = None
    lang: Optional[str] = None

    def __post_init__(self):
        if self.datatype and self.lang:
            raise ValueError("a literal has a datatype or a language tag, not both")


Term = Union[Iri, Literal]


class Triple(NamedTuple):
    subject: Iri
    predicate: Iri
    object: Term

    def to_nt(self) -> str:
        return f"{format_term(self.subject)} {format_term(self.predicate)} {format_term(self.object)} ."


def term(value: str) -> Term:
    """IRI when ``value`` is an absolute IRI, plain literal otherwise."""
    return Iri(value) if is_iri(value) else Literal(value)


def term_value(t: Term) -> str:
    return t.value if isinstance(t, Literal) else str(t)


_ESCAPES = {
    "\\": "\\\\", '"': '\\"', "\n": "\\n", "\r": "\\r", "\t": "\\t", "\b": "\\b", "\f": "\\f",
}
_ESC_RE = re.compile(r'[\\"\x00-\x1f\x7f]')


def _escape(s: str) -> str:
    return _ESC_RE.sub(lambda m: _ESCAPES.get(m.group()) or f"\\u{ord(m.group()):04X}", s)


def format_term(t: Term) -> str:
    if isinstance(t, Literal):
        out = f'"{_escape(t.value)}"'
        if t.lang:
            return f"{out}@{t.lang}"
        if t.datatype:
            return f"{out}^^<{t.datatype}>"
        return out
    return f"<{t}>"


_IRI_TOK = r"<([^<>\"{}|^`\\\s]*)>"
_LIT_TOK = r'"((?:[^"\\]|\\.)*)"(?:@([A-Za-z]+(?:-[A-Za-z0-9]+)*)|\^\^<([^<>\s]*)>)?'
_LINE_RE = re.compile(
    rf"^\s*{_IRI_TOK}\s*{_IRI_TOK}\s*(?:{_IRI_TOK}|{_LIT_TOK})\s*\.\s*(?:#.*)?$"
)
_UNESC_RE = re.compile(r'\\(u[0-9A-Fa-f]{4}|U[0-9A-Fa-f]{8}|[tbnrf"\'\\])')
_SIMPLE_UNESC = {"t": "\t", "b": "\b", "n": "\n", "r": "\r", "f": "\f", '"': '"', "'": "'", "\\": "\\"}


def _unescape(s: str) -> str:
    def sub(m):
        code = m.group(1)
        if code[0] in "uU":
            return chr(int(code[1:], 16))
        return _SIMPLE_UNESC[code]

    return _UNESC_RE.sub(sub, s)


def parse_line(line: str, lineno: int = 0) -> Optional[Triple]:
    """Parse one N-Triples line; ``None`` for blank and comment lines."""
    stripped = line.strip()
    if not stripped or stripped.startswith("#"):
        return None
    m = _LINE_RE.match(stripped)
    if m is None:
        raise MalformedRecord(lineno, "not a supported N-Triples statement")
    s, p, o_iri, lit, lang, dtype = m.groups()
    try:
        subj, pred = Iri(_unescape(s)), Iri(_unescape(p))
        obj: Term = Iri(_unescape(o_iri)) if o_iri is not None else Literal(
            _unescape(lit), datatype=dtype or None, lang=lang or None
        )
    except ValueError as exc:
        raise MalformedRecord(lineno, str(exc)) from None
    return Triple(subj, pred, obj)


def parse_ntriples(lines: Iterable[str]) -> Iterator[Triple]:
    for i, line in enumerate(lines, start=1):
        t = parse_line(line, i)
        if t is not None:
            yield t


def canonical_ntriples(triples: Iterable[Triple]) -> list[str]:
    """Distinct triples as sorted N-Triples lines (code-point order == UTF-8 byte order)."""
    return sorted({t.to_nt() for t in triples})


_PN_LOCAL = re.compile(r"^[A-Za-z_][A-Za-z0-9_\-]*$")


def turtle_lines(triples: Iterable[Triple], prefixes: dict[str, str]) -> list[str]:
    """Turtle with the given prefixes, one statement per line, canonical order."""
    ordered = sorted(prefixes.items(), key=lambda kv: -len(kv[1]))

    def fmt(t: Term) -> str:
        if isinstance(t, Literal):
            return format_term(t)
        for name, ns in ordered:
            if t.startswith(ns) and _PN_LOCAL.match(t[len(ns):]):
                return f"{name}:{t[len(ns):]}"
        return format_term(t)

    head = [f"@prefix {name}: <{ns}> ." for name, ns in sorted(prefixes.items())]
    body = sorted({f"{fmt(t.subject)} {'a' if t.predicate == RDF_TYPE else fmt(t.predicate)} {fmt(t.object)} ." for t in triples})
    return head + ([""] if head else []) + body
