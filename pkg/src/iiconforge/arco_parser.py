"""Rule-based parsing of free-text iconographic readings.

A conforming description contains a reading marker followed by categories::

    ... Iconographic Reading: Subject: woman, Flowers;
    Product category/type of event: promotion of tourism.

Grammar of the reading (the tokenizer lives in :func:`split_chunks`):

* the reading is cut into chunks at ``;`` and at ``.`` followed by whitespace
  or end of text;
* a chunk of the form ``Header: content`` opens a category;
* a header-less chunk after ``;`` continues the open category as a further
  phrase;
* chunks between two ``.`` separators form a sentence, which must start with
  a header; headers must be non-empty, a chunk holds at most one ``:`` and
  every category needs some content;
* a malformed first sentence discards the reading; a malformed later
  sentence becomes a warning.

Element tokens come from the subject categories and are leveled by the
capital-letter rule; meaning phrases come from the iconological category.
"""

from __future__ import annotations

import json
import re
import unicodedata
from dataclasses import dataclass, field
from enum import Enum
from typing import Callable, Iterable, Iterator, Optional

from .errors import EmptyPhrase, MalformedRow, UnknownFormat
from .model import InterpretationLevel, Iri, Level, Provenance, Recognition, Subclass, is_iri
from .rdf import Literal, parse_line

IIG = "https://w3id.org/iicongraph/data/"


def identity(text: str) -> str:
    return text


@dataclass(frozen=True)
class ParserConfig:
    reading_markers: tuple = ("Iconographic Reading:", "Lettura Iconografica:")
    iconological_category: tuple = (
        "Product category/type of event",
        "Categoria Merceologica/tipo di evento",
    )
    subject_categories: tuple = ("Subject", "Subjects", "Soggetto", "Soggetti")
    ambiguous_categories: tuple = ()
    separator_pattern: str = r";|\.(?=\s|$)"
    translate: Callable[[str], str] = field(default=identity, compare=False)

    @classmethod
    def from_mapping(cls, cfg: dict) -> "ParserConfig":
        """Build from flat config keys; list values are ``|``-separated strings."""

        def tup(key, default):
            val = cfg.get(key)
            if val is None:
                return default
            if isinstance(val, str):
                return tuple(v.strip() for v in val.split("|") if v.strip())
            return tuple(val)

        base = cls()
        return cls(
            reading_markers=tup("reading_marker", base.reading_markers),
            iconological_category=tup("iconological_category", base.iconological_category),
            subject_categories=tup("subject_categories", base.subject_categories),
            ambiguous_categories=tup("ambiguous_categories", base.ambiguous_categories),
        )


DEFAULT_CONFIG = ParserConfig()


class Reason(Enum):
    NO_READING_MARKER = "NoReadingMarker"
    NO_CATEGORY_HEADER = "NoCategoryHeader"
    EMPTY_CATEGORY = "EmptyCategory"
    UNBALANCED_HEADER = "UnbalancedHeader"


@dataclass(frozen=True)
class RawDescription:
    artwork: str
    text: str

    def __post_init__(self):
        if not self.text.strip():
            raise ValueError("description text must be non-empty")


@dataclass(frozen=True)
class Segmentation:
    segments: tuple = ()
    reason: Optional[Reason] = None
    warnings: tuple = ()

    @property
    def discarded(self) -> bool:
        return self.reason is not None


@dataclass(frozen=True)
class ParsedDescription:
    artwork: str
    segments: tuple = ()
    pre_iconographic: tuple = ()
    iconographic: tuple = ()
    iconological: tuple = ()
    reason: Optional[Reason] = None
    warnings: tuple = ()

    @property
    def status(self) -> str:
        return "Conforming" if self.reason is None else "Discarded"

    @property
    def conforming(self) -> bool:
        return self.reason is None

    def to_json(self) -> str:
        rec = {
            "artwork": self.artwork,
            "status": self.status,
            "reason": self.reason.value if self.reason else None,
            "segments": [list(s) for s in self.segments],
            "pre_iconographic": list(self.pre_iconographic),
            "iconographic": list(self.iconographic),
            "iconological": list(self.iconological),
            "warnings": list(self.warnings),
        }
        return json.dumps(rec, ensure_ascii=False, separators=(",", ":"))

    @classmethod
    def from_json(cls, line: str) -> "ParsedDescription":
        rec = json.loads(line)
        return cls(
            artwork=rec["artwork"],
            segments=tuple(tuple(s) for s in rec["segments"]),
            pre_iconographic=tuple(rec["pre_iconographic"]),
            iconographic=tuple(rec["iconographic"]),
            iconological=tuple(rec["iconological"]),
            reason=Reason(rec["reason"]) if rec["reason"] else None,
            warnings=tuple(rec["warnings"]),
        )


def _norm_category(name: str) -> str:
    return " ".join(name.lower().split())


def extract_reading(desc: RawDescription, config: ParserConfig = DEFAULT_CONFIG) -> Optional[str]:
    """Text after the earliest reading marker, trimmed; ``None`` if absent or empty."""
    pattern = "|".join(re.escape(m) for m in config.reading_markers)
    m = re.search(pattern, desc.text, flags=re.IGNORECASE)
    if m is None:
        return None
    rest = desc.text[m.end():].strip()
    return rest or None


def split_chunks(reading: str, config: ParserConfig = DEFAULT_CONFIG) -> list[tuple[str, str]]:
    """Cut a reading into ``(chunk, separator_before)`` pairs, dropping blank chunks.

    When blank chunks are dropped, a ``.`` anywhere in the collapsed run of
    separators wins, so a sentence end is never lost.
    """
    out: list[tuple[str, str]] = []
    pending, pos = "", 0
    for m in re.finditer(config.separator_pattern, reading):
        piece = reading[pos:m.start()].strip()
        if piece:
            out.append((piece, pending))
            pending = m.group()
        elif "." in (pending, m.group()):
            pending = "."
        else:
            pending = m.group()
        pos = m.end()
    tail = reading[pos:].strip()
    if tail:
        out.append((tail, pending))
    return out


def _sentences(chunks: list[tuple[str, str]]) -> list[list[str]]:
    """Group chunks into sentences: a ``.`` separator starts a new one."""
    out: list[list[str]] = []
    for chunk, sep in chunks:
        if not out or sep != ";":
            out.append([])
        out[-1].append(chunk)
    return out


def _segment_sentence(sentence: list[str]) -> tuple[Optional[Reason], list]:
    segments: list[list] = []
    for chunk in sentence:
        if chunk.count(":") > 1:
            return Reason.UNBALANCED_HEADER, []
        if ":" in chunk:
            header, content = (p.strip() for p in chunk.split(":", 1))
            if not header:
                return Reason.UNBALANCED_HEADER, []
            segments.append([header, [content] if content else []])
        elif not segments:
            return Reason.NO_CATEGORY_HEADER, []
        else:
            segments[-1][1].append(chunk)
    if any(not parts for _, parts in segments):
        return Reason.EMPTY_CATEGORY, []
    return None, [(h, "; ".join(parts)) for h, parts in segments]


def segment_categories(reading: str, config: ParserConfig = DEFAULT_CONFIG) -> Segmentation:
    """Apply the category grammar sentence by sentence.

    The first sentence must be well formed, otherwise the whole reading is
    discarded. A later malformed sentence is kept verbatim as a warning, so
    trailing noise never changes what the earlier categories yield.
    """
    sentences = _sentences(split_chunks(reading, config))
    if not sentences:
        return Segmentation(reason=Reason.NO_CATEGORY_HEADER)
    segments: list[tuple[str, str]] = []
    warnings: list[str] = []
    for i, sentence in enumerate(sentences):
        reason, segs = _segment_sentence(sentence)
        if reason is None:
            segments.extend(segs)
        elif i == 0:
            return Segmentation(reason=reason)
        else:
            warnings.append("; ".join(sentence))
    return Segmentation(segments=tuple(segments), warnings=tuple(warnings))


def _split_elements(content: str) -> list[str]:
    return [t.strip() for t in re.split(r",|\band\b", content) if t.strip()]


def classify_tokens(content: str) -> tuple[list[str], list[str]]:
    """Split an element list and level each token by its first letter's case."""
    pre, icon = [], []
    for tok in _split_elements(content):
        first = next((ch for ch in tok if ch.isalpha()), "")
        (icon if first.isupper() else pre).append(tok)
    return pre, icon


def extract_iconological(segments, config: ParserConfig = DEFAULT_CONFIG) -> list[str]:
    wanted = {_norm_category(c) for c in config.iconological_category}
    blocked = {_norm_category(c) for c in config.ambiguous_categories}
    phrases = []
    for category, content in segments:
        cat = _norm_category(category)
        if cat in blocked or cat not in wanted:
            continue
        phrases.extend(p.strip() for p in content.split(";") if p.strip())
    return phrases


def mint_meaning_id(phrase: str) -> str:
    """camelCase local name: ``"promotion of tourism"`` -> ``promotionOfTourism``."""
    ascii_ = unicodedata.normalize("NFKD", phrase).encode("ascii", "ignore").decode()
    words = [w for w in re.split(r"[^A-Za-z0-9]+", ascii_.lower()) if w]
    if not words:
        raise EmptyPhrase(f"nothing to mint from {phrase!r}")
    return words[0] + "".join(w.capitalize() for w in words[1:])


def _dedupe(seq):
    return tuple(dict.fromkeys(seq))


def parse_description(desc: RawDescription, config: ParserConfig = DEFAULT_CONFIG) -> ParsedDescription:
    reading = extract_reading(desc, config)
    if reading is None:
        return ParsedDescription(desc.artwork, reason=Reason.NO_READING_MARKER)
    seg = segment_categories(config.translate(reading), config)
    if seg.discarded:
        return ParsedDescription(desc.artwork, reason=seg.reason)
    subjects = {_norm_category(c) for c in config.subject_categories}
    blocked = {_norm_category(c) for c in config.ambiguous_categories}
    pre, icon = [], []
    for category, content in seg.segments:
        cat = _norm_category(category)
        if cat in subjects and cat not in blocked:
            for part in content.split(";"):
                p, i = classify_tokens(part)
                pre += p
                icon += i
    return ParsedDescription(
        artwork=desc.artwork,
        segments=seg.segments,
        pre_iconographic=_dedupe(pre),
        iconographic=_dedupe(icon),
        iconological=_dedupe(extract_iconological(seg.segments, config)),
        warnings=seg.warnings,
    )


DC_DESCRIPTION = "http://purl.org/dc/elements/1.1/description"


def read_descriptions(path, fmt: str = "tsv", predicate: str = DC_DESCRIPTION) -> Iterator[RawDescription]:
    """Read descriptions from a TSV file or an N-Triples dump.

    TSV rows are ``artwork_iri <TAB> description_text`` with an optional
    header; tabs, newlines and backslashes inside the text are
    backslash-escaped. In a triple dump every literal object of ``predicate``
    is one description, in file order.
    """
    fmt = fmt.lower()
    if fmt in ("nt", "ntriples"):
        return _read_description_triples(path, predicate)
    if fmt != "tsv":
        raise UnknownFormat(f"unknown description format {fmt!r}")
    return _read_description_tsv(path)


def _read_description_triples(path, predicate: str) -> Iterator[RawDescription]:
    with open(path, encoding="utf-8", newline="") as fh:
        for lineno, line in enumerate(fh, start=1):
            t = parse_line(line, lineno)
            if t is None or str(t.predicate) != predicate:
                continue
            if not isinstance(t.object, Literal):
                raise MalformedRow(lineno, "description object must be a literal")
            if t.object.value.strip():
                yield RawDescription(str(t.subject), t.object.value)


def _read_description_tsv(path) -> Iterator[RawDescription]:
    with open(path, encoding="utf-8", newline="") as fh:
        for lineno, raw in enumerate(fh, start=1):
            line = raw.rstrip("\r\n")
            if not line.strip():
                continue
            art, sep, text = line.partition("\t")
            if lineno == 1 and art == "artwork_iri":
                continue
            if not sep or not is_iri(art):
                raise MalformedRow(lineno, "expected artwork_iri<TAB>description_text")
            text = _unescape_field(text)
            if not text.strip():
                raise MalformedRow(lineno, "empty description")
            yield RawDescription(art, text)


def _unescape_field(s: str) -> str:
    return re.sub(r"\\([tn\\])", lambda m: {"t": "\t", "n": "\n", "\\": "\\"}[m.group(1)], s)


def write_discards(parsed: Iterable[ParsedDescription], path) -> int:
    n = 0
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write("artwork_iri\treason\n")
        for p in parsed:
            if not p.conforming:
                fh.write(f"{p.artwork}\t{p.reason.value}\n")
                n += 1
    return n


def element_id(label: str, namespace: str = IIG) -> Iri:
    """Deterministic id of a text-only element: same normalized label, same id."""
    return Iri(f"{namespace}element/{mint_meaning_id(label)}")


def meaning_id(phrase: str, namespace: str = IIG) -> Iri:
    return Iri(namespace + mint_meaning_id(phrase))


PRE = InterpretationLevel(Level.PRE_ICONOGRAPHIC)
ICON = InterpretationLevel(Level.ICONOGRAPHIC)
MEANING = InterpretationLevel(Level.ICONOLOGICAL, Subclass.MEANING)


def to_recognitions(parsed: ParsedDescription, namespace: str = IIG) -> list[Recognition]:
    """Macro-level recognitions for a conforming description; none otherwise."""
    if not parsed.conforming:
        return []
    out = []
    for labels, level in ((parsed.pre_iconographic, PRE), (parsed.iconographic, ICON)):
        for label in labels:
            try:
                el = element_id(label, namespace)
            except EmptyPhrase:
                continue
            out.append(Recognition(parsed.artwork, el, level, provenance=Provenance.PARSER_HEURISTIC, element_label=label))
    for phrase in parsed.iconological:
        try:
            mid = meaning_id(phrase, namespace)
        except EmptyPhrase:
            continue
        out.append(Recognition(parsed.artwork, mid, MEANING, provenance=Provenance.PARSER_HEURISTIC, element_label=phrase))
    return out
