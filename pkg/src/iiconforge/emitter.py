"""ICON-shaped triple emission, canonical serialization and the DCAT catalogue.

Two emission profiles:

* shortcut: ``artwork --<level shortcut>--> element`` plus ``element a <class>``;
* full: one skolemized recognition node per recognition, typed by its level
  class and linked to artwork, element and qualifier targets.

Both emit symbolic interpretations the same way, as a node with
:data:`INTERPRETATION_FOOTPRINT` triples. No blank nodes are produced.
"""

from __future__ import annotations

import configparser
import hashlib
from dataclasses import dataclass, field
from pathlib import Path
from types import MappingProxyType
from typing import Iterable, Iterator, Mapping, Optional

from .enricher import SymbolicInterpretation
from .errors import IncompleteProfile, IoFailure
from .model import InterpretationLevel, Iri, Level, QualifierKind, Recognition
from .rdf import (
    RDF_TYPE,
    RDFS_LABEL,
    XSD,
    Literal,
    Triple,
    canonical_ntriples,
    term,
    term_value,
    turtle_lines,
)

IIG = "https://w3id.org/iicongraph/data/"
DEFAULT_PROFILE = Path(__file__).parent / "data" / "profile.cfg"

SHORTCUT_BY_LEVEL = {
    Level.PRE_ICONOGRAPHIC: "preiconographic-depicts",
    Level.ICONOGRAPHIC: "iconographic-depicts",
    Level.ICONOLOGICAL: "iconological-represents",
}
INTERPRETATION_TAGS = (
    "has-interpretation",
    "interpretation-symbol",
    "interpretation-meaning",
    "interpretation-context",
)
INTERPRETATION_FOOTPRINT = len(INTERPRETATION_TAGS)
FULL_TAGS = ("recognition-artwork", "recognition-element")


@dataclass(frozen=True)
class VocabularyProfile:
    """Logical relation tags mapped to IRIs.

    Keys: the shortcut trio, ``recognition-artwork``/``recognition-element``,
    ``qualifier.<Kind>``, ``class.<level tag>`` (element classes),
    ``recognition-class.<level tag>`` (recognition node classes) and the
    interpretation tags.
    """

    namespace: str = IIG
    prefix: str = "iig"
    iris: Mapping[str, str] = field(default_factory=dict)
    prefixes: Mapping[str, str] = field(default_factory=dict)

    def iri(self, tag: str) -> Iri:
        try:
            return Iri(self.iris[tag])
        except KeyError:
            raise IncompleteProfile(tag) from None

    def class_iri(self, kind: str, level: InterpretationLevel) -> Iri:
        # fall back from the subclass to the bare level
        for tag in (f"{kind}.{level.tag}", f"{kind}.{level.level.value}"):
            if tag in self.iris:
                return Iri(self.iris[tag])
        raise IncompleteProfile(f"{kind}.{level.tag}")

    def mint(self, kind: str, *parts: str) -> Iri:
        digest = hashlib.sha1("\x1f".join(parts).encode("utf-8")).hexdigest()[:20]
        return Iri(f"{self.namespace}{kind}/{digest}")


def load_profile(path=None) -> VocabularyProfile:
    """Read a profile file: ``[profile]`` holds namespace/prefix, ``[iris]`` the map."""
    cp = configparser.ConfigParser(interpolation=None, delimiters=("=",))
    cp.optionxform = str
    with open(path or DEFAULT_PROFILE, encoding="utf-8") as fh:
        cp.read_file(fh)
    prof = cp["profile"] if cp.has_section("profile") else {}
    iris = dict(cp["iris"]) if cp.has_section("iris") else {}
    prefixes = dict(cp["prefixes"]) if cp.has_section("prefixes") else {}
    return VocabularyProfile(
        namespace=prof.get("namespace", IIG),
        prefix=prof.get("prefix", "iig"),
        iris=MappingProxyType(iris),
        prefixes=MappingProxyType(prefixes),
    )


def _interpretation_triples(interps, profile: VocabularyProfile) -> Iterator[Triple]:
    has, sym, mean, ctx = (profile.iri(t) for t in INTERPRETATION_TAGS)
    for i in interps:
        node = profile.mint("interpretation", i.artwork, i.symbol, i.meaning, i.context)
        yield Triple(Iri(i.artwork), has, node)
        yield Triple(node, sym, Iri(i.symbol))
        yield Triple(node, mean, Iri(i.meaning))
        yield Triple(node, ctx, term(i.context))


def _sorted(triples: Iterable[Triple]) -> list[Triple]:
    return sorted(set(triples), key=Triple.to_nt)


def emit_shortcut(
    recs: Iterable[Recognition],
    interps: Iterable[SymbolicInterpretation],
    profile: VocabularyProfile,
) -> list[Triple]:
    out = []
    for r in recs:
        pred = profile.iri(SHORTCUT_BY_LEVEL[r.level.level])
        el = Iri(r.element)
        out.append(Triple(Iri(r.artwork), pred, el))
        out.append(Triple(el, RDF_TYPE, profile.class_iri("class", r.level)))
    out.extend(_interpretation_triples(interps, profile))
    return _sorted(out)


def emit_full(
    recs: Iterable[Recognition],
    interps: Iterable[SymbolicInterpretation],
    profile: VocabularyProfile,
) -> list[Triple]:
    about, elem = (profile.iri(t) for t in FULL_TAGS)
    out = []
    for r in recs:
        node = profile.mint("recognition", *r.key)
        out.append(Triple(node, RDF_TYPE, profile.class_iri("recognition-class", r.level)))
        out.append(Triple(node, about, Iri(r.artwork)))
        out.append(Triple(node, elem, term(r.element)))
        for kind, target in r.qualifiers:
            out.append(Triple(node, profile.iri(f"qualifier.{kind.value}"), term(target)))
    out.extend(_interpretation_triples(interps, profile))
    return _sorted(out)


# -- reading back --------------------------------------------------------------


def _reverse(profile: VocabularyProfile, prefix: str) -> dict[str, InterpretationLevel]:
    out = {}
    for key, iri in profile.iris.items():
        if key.startswith(prefix + "."):
            out[iri] = InterpretationLevel.from_tag(key[len(prefix) + 1:])
    return out


def read_full(triples: Iterable[Triple], profile: VocabularyProfile) -> set:
    """Logical recognitions ``(artwork, element, level tag, qualifiers)`` of a full-profile graph."""
    about, elem = (str(profile.iri(t)) for t in FULL_TAGS)
    classes = _reverse(profile, "recognition-class")
    qual_kinds = {
        profile.iris[f"qualifier.{k.value}"]: k
        for k in QualifierKind
        if f"qualifier.{k.value}" in profile.iris
    }
    nodes: dict[str, dict] = {}
    for s, p, o in triples:
        if not str(s).startswith(profile.namespace + "recognition/"):
            continue
        n = nodes.setdefault(str(s), {"quals": []})
        if p == RDF_TYPE and str(o) in classes:
            n["level"] = classes[str(o)].tag
        elif str(p) == about:
            n["artwork"] = str(o)
        elif str(p) == elem:
            n["element"] = term_value(o)
        elif str(p) in qual_kinds:
            n["quals"].append((qual_kinds[str(p)], term_value(o)))
    return {
        (n["artwork"], n["element"], n["level"], tuple(sorted(n["quals"], key=lambda q: (q[0].value, q[1]))))
        for n in nodes.values()
    }


def read_shortcut(triples: Iterable[Triple], profile: VocabularyProfile) -> set:
    """Logical ``(artwork, element, level tag)`` recognitions of a shortcut graph."""
    triples = list(triples)
    shortcut = {str(profile.iri(tag)): lvl for lvl, tag in SHORTCUT_BY_LEVEL.items()}
    classes = _reverse(profile, "class")
    types: dict[str, set] = {}
    for s, p, o in triples:
        if p == RDF_TYPE and str(o) in classes:
            types.setdefault(str(s), set()).add(classes[str(o)])
    out = set()
    for s, p, o in triples:
        lvl = shortcut.get(str(p))
        if lvl is None:
            continue
        for il in types.get(str(o), ()):
            if il.level is lvl:
                out.add((str(s), str(o), il.tag))
    return out


def read_interpretations(triples: Iterable[Triple], profile: VocabularyProfile) -> set:
    has, sym, mean, ctx = (str(profile.iri(t)) for t in INTERPRETATION_TAGS)
    nodes: dict[str, dict] = {}
    for s, p, o in triples:
        if str(p) == has:
            nodes.setdefault(str(o), {})["artwork"] = str(s)
        elif str(p) in (sym, mean, ctx):
            nodes.setdefault(str(s), {})[str(p)] = term_value(o)
    return {(n["artwork"], n[sym], n[mean], n[ctx]) for n in nodes.values()}


# -- serialization ---------------------------------------------------------------


@dataclass(frozen=True)
class FileSummary:
    path: str
    triple_count: int
    byte_count: int


def serialize(
    triples: Iterable[Triple],
    fmt: str,
    path,
    profile: Optional[VocabularyProfile] = None,
) -> FileSummary:
    """Write distinct triples as canonical N-Triples (``nt``) or Turtle (``ttl``)."""
    profile = profile or VocabularyProfile()
    triples = set(triples)
    if fmt.lower() in ("nt", "ntriples"):
        lines = canonical_ntriples(triples)
    elif fmt.lower() in ("ttl", "turtle"):
        prefixes = {profile.prefix: profile.namespace, **profile.prefixes}
        lines = turtle_lines(triples, prefixes)
    else:
        raise ValueError(f"unknown serialization format {fmt!r}")
    data = "".join(line + "\n" for line in lines).encode("utf-8")
    try:
        Path(path).write_bytes(data)
    except OSError as exc:
        raise IoFailure(path, exc) from None
    return FileSummary(str(path), len(triples), len(data))


# -- catalogue ---------------------------------------------------------------------

DCAT = "http://www.w3.org/ns/dcat#"
DCT = "http://purl.org/dc/terms/"
PROV = "http://www.w3.org/ns/prov#"
CC_BY_4 = "https://creativecommons.org/licenses/by/4.0/"


@dataclass(frozen=True)
class CatalogueConfig:
    title: str = "Leveled artwork depictions with symbolic interpretations"
    license: str = CC_BY_4
    # (name, location) of each input
    sources: tuple = ()
    # (name, relative path, media type) of each output file
    distributions: tuple = ()
    created: str = "1970-01-01T00:00:00Z"
    namespace: str = IIG


def emit_catalogue(cfg: CatalogueConfig) -> list[Triple]:
    ns = cfg.namespace
    ds = Iri(ns + "catalogue/dataset")
    out = [
        Triple(ds, RDF_TYPE, Iri(DCAT + "Dataset")),
        Triple(ds, Iri(DCT + "title"), Literal(cfg.title, lang="en")),
        Triple(ds, Iri(DCT + "license"), Iri(cfg.license)),
        Triple(ds, Iri(DCT + "created"), Literal(cfg.created, datatype=XSD + "dateTime")),
    ]
    for name, location in cfg.sources:
        src = Iri(f"{ns}catalogue/source/{_slug(name)}")
        out += [
            Triple(ds, Iri(PROV + "wasDerivedFrom"), src),
            Triple(src, RDF_TYPE, Iri(PROV + "Entity")),
            Triple(src, RDFS_LABEL, Literal(name)),
            Triple(src, Iri(DCT + "identifier"), Literal(str(location))),
        ]
    for name, rel_path, media in cfg.distributions:
        dist = Iri(f"{ns}catalogue/distribution/{_slug(name)}")
        out += [
            Triple(ds, Iri(DCAT + "distribution"), dist),
            Triple(dist, RDF_TYPE, Iri(DCAT + "Distribution")),
            Triple(dist, Iri(DCAT + "downloadURL"), Literal(str(rel_path))),
            Triple(dist, Iri(DCAT + "mediaType"), Literal(media)),
        ]
    return _sorted(out)


def _slug(name: str) -> str:
    return "".join(ch if ch.isalnum() or ch in "-_" else "-" for ch in name) or "x"
