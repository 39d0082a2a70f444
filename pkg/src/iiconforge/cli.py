"""Command-line orchestration of the conversion, enrichment and reporting stages.

Configuration is a flat ``key = value`` file; relative paths resolve against
the directory of that file. Every artifact is written below ``out`` with
sorted, timing-free content, so reruns on the same inputs are byte-identical.

Exit codes: 0 success, 1 configuration error, 2 input error, 3 internal
invariant violation.
"""

from __future__ import annotations

import argparse
import configparser
import hashlib
import json
import logging
import os
import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field, fields
from datetime import datetime, timezone
from pathlib import Path
from typing import Callable, Optional

from . import __version__
from .analytics import (
    DEFAULT_PAIR_CAP,
    build_meaning_index,
    count_serendipity,
    level_distribution,
    meaning_frequency,
    rank_symbolic,
    write_json,
    write_tsv,
)
from .arco_parser import (
    ParsedDescription,
    ParserConfig,
    parse_description,
    read_descriptions,
    to_recognitions,
)
from .emitter import (
    CatalogueConfig,
    emit_catalogue,
    emit_full,
    emit_shortcut,
    load_profile,
    read_interpretations,
    serialize,
)
from .enricher import (
    EnrichmentRun,
    SymbolicInterpretation,
    enrich_with_report,
    load_id_alignment,
)
from .errors import ConfigError, IiconforgeError, InputError, InvariantViolation
from .evalsuite import build_report, load_annotations, load_scores, score_cr2, score_cr5, subject_links
from .harvester import EndpointConfig, fetch_depicts, load_query_template, read_depicts_dump, write_depicts_tsv
from .model import recognition_from_json, recognition_to_json
from .symbolkb import load_kb
from .wd_reengineer import build_recognitions, load_alignment

log = logging.getLogger("iiconforge")

WIKIDATA_SPARQL = "https://query.wikidata.org/sparql"
SOURCES = ("wikidata", "arco")

EXIT_OK, EXIT_CONFIG, EXIT_INPUT, EXIT_INVARIANT = 0, 1, 2, 3

# config keys holding file paths
_PATH_KEYS = (
    "depicts",
    "alignment",
    "descriptions",
    "kb_simulations",
    "kb_labels",
    "id_alignment",
    "profile",
    "scores",
    "annotations",
    "query_template",
)
_PARSER_KEYS = ("reading_marker", "iconological_category", "subject_categories", "ambiguous_categories")


@dataclass
class RunConfig:
    out: Path = Path("out")
    depicts: Optional[Path] = None
    depicts_format: str = "tsv"
    alignment: Optional[Path] = None
    descriptions: Optional[Path] = None
    descriptions_format: str = "tsv"
    kb_simulations: Optional[Path] = None
    kb_labels: Optional[Path] = None
    kb_format: str = "tsv"
    id_alignment: Optional[Path] = None
    profile: Optional[Path] = None
    scores: Optional[Path] = None
    annotations: Optional[Path] = None
    query_template: Optional[Path] = None
    endpoint: str = WIKIDATA_SPARQL
    page_size: int = 1000
    max_retries: int = 3
    request_timeout: float = 60.0
    top_k: int = 10
    same_context: bool = False
    pair_cap: int = DEFAULT_PAIR_CAP
    list_pairs: bool = False
    created: Optional[str] = None
    title: str = CatalogueConfig.title
    seed: int = 0
    jobs: int = 1
    parser: dict = field(default_factory=dict)

    @classmethod
    def from_mapping(cls, raw: dict, base_dir: Path = Path(".")) -> "RunConfig":
        known = {f.name for f in fields(cls)} - {"parser"}
        kw: dict = {}
        parser = {}
        for key, value in raw.items():
            value = value.strip()
            if key in _PARSER_KEYS:
                parser[key] = value
                continue
            if key not in known:
                raise ConfigError(f"unknown config key {key!r}")
            if value == "":
                continue
            try:
                kw[key] = _coerce(key, value, base_dir)
            except ValueError as exc:
                raise ConfigError(f"bad value for {key!r}: {exc}") from None
        cfg = cls(**kw, parser=parser)
        cfg.out = cfg.out if cfg.out.is_absolute() else base_dir / cfg.out
        return cfg

    @classmethod
    def from_file(cls, path) -> "RunConfig":
        path = Path(path)
        cp = configparser.ConfigParser(interpolation=None, delimiters=("=",), comment_prefixes=("#", ";"))
        cp.optionxform = str
        try:
            text = path.read_text(encoding="utf-8")
        except OSError as exc:
            raise ConfigError(f"cannot read config {path}: {exc.strerror}") from None
        try:
            cp.read_string("[run]\n" + text, source=str(path))
        except configparser.Error as exc:
            raise ConfigError(f"unparseable config {path}: {exc}") from None
        return cls.from_mapping(dict(cp["run"]), base_dir=path.resolve().parent)

    def parser_config(self) -> ParserConfig:
        return ParserConfig.from_mapping(self.parser)

    def require(self, *keys: str) -> None:
        """Check that each key is set and names an existing file."""
        for key in keys:
            value = getattr(self, key)
            if value is None:
                raise ConfigError(f"config key {key!r} is required for this command")
            if key in _PATH_KEYS and not Path(value).is_file():
                raise ConfigError(f"{key}: no such file {value}")

    def check_optional(self) -> None:
        for key in _PATH_KEYS:
            value = getattr(self, key)
            if value is not None and not Path(value).is_file():
                raise ConfigError(f"{key}: no such file {value}")

    def check_out_writable(self) -> None:
        probe = Path(self.out)
        while not probe.exists():
            probe = probe.parent
        if not probe.is_dir() or not os.access(probe, os.W_OK):
            raise ConfigError(f"output directory {self.out} is not writable")


def _coerce(key: str, value: str, base_dir: Path):
    if key in _PATH_KEYS or key == "out":
        p = Path(value).expanduser()
        return p if p.is_absolute() else base_dir / p
    if key in ("page_size", "max_retries", "top_k", "pair_cap", "seed", "jobs"):
        return int(value)
    if key == "request_timeout":
        return float(value)
    if key in ("same_context", "list_pairs"):
        low = value.lower()
        if low in ("1", "true", "yes", "on"):
            return True
        if low in ("0", "false", "no", "off"):
            return False
        raise ValueError(f"expected a boolean, got {value!r}")
    return value


class Artifacts:
    """Writes files below the output directory, or only records them on dry runs."""

    def __init__(self, out: Path, dry_run: bool = False):
        self.out = Path(out)
        self.dry_run = dry_run
        self.written: list[str] = []

    def path(self, rel: str) -> Path:
        return self.out / rel

    def write(self, rel: str, writer: Callable[[Path], object]) -> None:
        self.written.append(rel)
        if self.dry_run:
            log.info("dry run: would write %s", rel)
            return
        target = self.path(rel)
        target.parent.mkdir(parents=True, exist_ok=True)
        writer(target)

    def text(self, rel: str, content: str) -> None:
        self.write(rel, lambda p: p.write_text(content, encoding="utf-8", newline="\n"))

    def lines(self, rel: str, lines) -> None:
        self.text(rel, "".join(line + "\n" for line in lines))

    def json(self, rel: str, obj) -> None:
        self.write(rel, lambda p: write_json(p, obj))


# -- stages --------------------------------------------------------------------


@dataclass
class SourceState:
    """In-memory outputs of one source, passed between pipeline stages."""

    recognitions: list = field(default_factory=list)
    interpretations: Optional[list] = None
    parsed: Optional[list] = None


def cmd_harvest(cfg: RunConfig, art: Artifacts, session=None) -> dict:
    endpoint = EndpointConfig.from_env(
        cfg.endpoint, page_size=cfg.page_size, max_retries=cfg.max_retries, request_timeout=cfg.request_timeout
    )
    template = load_query_template(cfg.query_template)
    if art.dry_run:
        log.info("dry run: would query %s", endpoint.endpoint_url)
        return {"endpoint": endpoint.endpoint_url}
    stmts = list(fetch_depicts(endpoint, template, session=session))
    art.write("harvest/depicts.tsv", lambda p: write_depicts_tsv(stmts, p))
    summary = {"statements": len(stmts), "artworks": len({s.artwork for s in stmts})}
    art.json("harvest/summary.json", summary)
    return summary


def cmd_convert_wikidata(cfg: RunConfig, art: Artifacts, state: dict) -> dict:
    cfg.require("depicts", "alignment")
    table = load_alignment(cfg.alignment)
    stmts = list(read_depicts_dump(cfg.depicts, cfg.depicts_format))
    recs, report = build_recognitions(stmts, table)
    if report.total != len(stmts):
        raise InvariantViolation(f"{report.total} statements accounted for, {len(stmts)} read")
    profile = load_profile(cfg.profile)
    triples = emit_full(recs, (), profile)
    state["wikidata"] = SourceState(recognitions=recs)

    art.lines("wikidata/recognitions.jsonl", (recognition_to_json(r) for r in recs))
    art.write("wikidata/unassigned.tsv", report.write_tsv)
    art.write("wikidata/triples.nt", lambda p: serialize(triples, "nt", p, profile))
    summary = {
        "statements": len(stmts),
        "artworks": len({s.artwork for s in stmts}),
        "assigned": report.assigned,
        "unassigned": report.unassigned,
        "conflicts": report.conflicts,
        "coverage_percent": round(100.0 * report.coverage, 4),
        "recognitions": len(recs),
        "triples": len(triples),
        "alignment_rows": len(table),
    }
    art.json("wikidata/summary.json", summary)
    return summary


def _parse_all(descs, parser_cfg: ParserConfig, jobs: int) -> list[ParsedDescription]:
    if jobs <= 1 or len(descs) < 2:
        return [parse_description(d, parser_cfg) for d in descs]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        # map keeps input order, so output does not depend on scheduling
        return list(pool.map(parse_description, descs, [parser_cfg] * len(descs), chunksize=64))


def cmd_convert_arco(cfg: RunConfig, art: Artifacts, state: dict) -> dict:
    cfg.require("descriptions")
    parser_cfg = cfg.parser_config()
    try:
        descs = list(read_descriptions(cfg.descriptions, cfg.descriptions_format))
    except ValueError as exc:
        raise InputError(str(exc)) from None
    parsed = _parse_all(descs, parser_cfg, cfg.jobs)
    recs = sorted({r.key: r for p in parsed for r in to_recognitions(p)}.values(), key=lambda r: r.key)
    profile = load_profile(cfg.profile)
    triples = emit_shortcut(recs, (), profile)
    state["arco"] = SourceState(recognitions=recs, parsed=parsed)

    art.lines("arco/parsed.jsonl", (p.to_json() for p in parsed))
    discards = [p for p in parsed if not p.conforming]
    art.lines(
        "arco/discards.tsv",
        ["artwork_iri\treason"] + [f"{p.artwork}\t{p.reason.value}" for p in discards],
    )
    art.lines("arco/recognitions.jsonl", (recognition_to_json(r) for r in recs))
    art.write("arco/triples.nt", lambda p: serialize(triples, "nt", p, profile))
    reasons: dict = {}
    for p in discards:
        reasons[p.reason.value] = reasons.get(p.reason.value, 0) + 1
    summary = {
        "descriptions": len(parsed),
        "conforming": len(parsed) - len(discards),
        "discarded": len(discards),
        "discard_reasons": reasons,
        "minted_meanings": len({r.element for r in recs if r.level.level.value == "Iconological"}),
        "recognitions": len(recs),
        "triples": len(triples),
        "warnings": sum(len(p.warnings) for p in parsed),
    }
    art.json("arco/summary.json", summary)
    return summary


def _load_recognitions(cfg: RunConfig, source: str) -> Optional[list]:
    path = Path(cfg.out) / source / "recognitions.jsonl"
    if not path.is_file():
        return None
    with open(path, encoding="utf-8") as fh:
        return [recognition_from_json(line) for line in fh if line.strip()]


def _load_interpretations(cfg: RunConfig, source: str) -> Optional[list]:
    path = Path(cfg.out) / source / "interpretations.jsonl"
    if not path.is_file():
        return None
    with open(path, encoding="utf-8") as fh:
        return [SymbolicInterpretation.from_json(line) for line in fh if line.strip()]


def _load_parsed(cfg: RunConfig) -> Optional[list]:
    path = Path(cfg.out) / "arco" / "parsed.jsonl"
    if not path.is_file():
        return None
    with open(path, encoding="utf-8") as fh:
        return [ParsedDescription.from_json(line) for line in fh if line.strip()]


class PipelineState(dict):
    """Stage outputs of one pipeline run; never topped up from earlier runs on disk."""

    from_disk = False


def _states(cfg: RunConfig, state: dict) -> dict:
    """Sources with recognitions, from memory if present, else from ``out``."""
    for source in SOURCES:
        if source in state or not getattr(state, "from_disk", True):
            continue
        recs = _load_recognitions(cfg, source)
        if recs is not None:
            state[source] = SourceState(
                recognitions=recs,
                interpretations=_load_interpretations(cfg, source),
                parsed=_load_parsed(cfg) if source == "arco" else None,
            )
    return {s: state[s] for s in SOURCES if s in state}


def cmd_enrich(cfg: RunConfig, art: Artifacts, state: dict) -> dict:
    cfg.require("kb_simulations")
    kb, kb_summary = load_kb(cfg.kb_simulations, cfg.kb_labels, fmt=cfg.kb_format)
    id_alignment = load_id_alignment(cfg.id_alignment) if cfg.id_alignment else {}
    sources = _states(cfg, state)
    if not sources and not art.dry_run:
        raise InputError(f"no recognitions under {cfg.out}; run a convert command first")
    summary: dict = {"kb": {"simulations": len(kb), "labels": kb_summary.labels,
                            "duplicates": kb_summary.duplicates, "label_conflicts": kb_summary.label_conflicts}}
    for source, st in sources.items():
        run: EnrichmentRun = enrich_with_report(st.recognitions, kb, id_alignment)
        st.interpretations = run.interpretations
        labels = {r.element: r.element_label for r in st.recognitions if r.element_label}
        art.lines(f"{source}/interpretations.jsonl", (i.to_json() for i in run.interpretations))
        art.write(f"{source}/unmatched.tsv", lambda p, run=run, labels=labels: run.links.write_unmatched(p, labels))
        summary[source] = {
            "interpretations": len(run.interpretations),
            "per_element_interpretations": run.per_element_count,
            "artworks_with_interpretations": len({i.artwork for i in run.interpretations}),
            "mean_per_artwork": round(run.mean_per_artwork, 6),
            "linked_elements": len(run.links.links),
            "linked_via_iri": run.links.via_iri,
            "linked_via_label": run.links.via_label,
            "unmatched_elements": len(run.links.unmatched),
        }
    art.json("enrichment_summary.json", summary)
    return summary


def _created(cfg: RunConfig) -> str:
    if cfg.created:
        return cfg.created
    epoch = os.environ.get("SOURCE_DATE_EPOCH")
    if epoch is None:
        inputs = [Path(getattr(cfg, k)) for k in _PATH_KEYS if getattr(cfg, k) is not None]
        epoch = max((int(p.stat().st_mtime) for p in inputs if p.is_file()), default=0)
    return datetime.fromtimestamp(int(epoch), tz=timezone.utc).strftime("%Y-%m-%dT%H:%M:%SZ")


def cmd_emit(cfg: RunConfig, art: Artifacts, state: dict) -> dict:
    profile = load_profile(cfg.profile)
    sources = _states(cfg, state)
    if not sources and not art.dry_run:
        raise InputError(f"no recognitions under {cfg.out}; run a convert command first")
    summary: dict = {}
    distributions = []
    for source, st in sources.items():
        interps = st.interpretations or []
        emit = emit_full if source == "wikidata" else emit_shortcut
        triples = emit(st.recognitions, interps, profile)
        back = read_interpretations(triples, profile)
        if back != {i.key for i in interps}:
            raise InvariantViolation(f"{source}: emitted interpretations do not read back")
        for fmt, media in (("nt", "application/n-triples"), ("ttl", "text/turtle")):
            rel = f"{source}/iicongraph.{fmt}"
            art.write(rel, lambda p, t=triples, f=fmt: serialize(t, f, p, profile))
            distributions.append((f"{source}-{fmt}", rel, media))
        summary[source] = {
            "profile": "full" if source == "wikidata" else "shortcut",
            "recognitions": len(st.recognitions),
            "interpretations": len(interps),
            "triples": len(triples),
        }
    inputs = []
    if "wikidata" in sources:
        inputs.append(("wikidata-depicts", "https://www.wikidata.org/"))
    if "arco" in sources:
        inputs.append(("arco-descriptions", "https://dati.cultura.gov.it/"))
    if cfg.kb_simulations is not None:
        inputs.append(("symbolism-kb", Path(cfg.kb_simulations).name))
    cat = CatalogueConfig(
        title=cfg.title,
        sources=tuple(inputs),
        distributions=tuple(distributions),
        created=_created(cfg),
        namespace=profile.namespace,
    )
    cat_triples = emit_catalogue(cat)
    art.write("catalogue.ttl", lambda p: serialize(cat_triples, "ttl", p, profile))
    summary["catalogue_triples"] = len(cat_triples)
    art.json("emit_summary.json", summary)
    return summary


def cmd_analyze(cfg: RunConfig, art: Artifacts, state: dict) -> dict:
    if cfg.top_k < 1:
        raise ConfigError("top_k must be >= 1")
    sources = _states(cfg, state)
    summary: dict = {}
    for source, st in sources.items():
        entry: dict = {}
        dist = level_distribution(st.recognitions)
        entry["levels"] = dist.to_dict()
        art.write(
            f"analytics/{source}_levels.tsv",
            lambda p, d=dist: write_tsv(p, ("level", "subclass", "total", "unique"), d.rows),
        )
        if st.interpretations is not None:
            index = build_meaning_index(st.interpretations, same_context=cfg.same_context)
            ser = count_serendipity(index, pair_cap=cfg.pair_cap, list_pairs=cfg.list_pairs)
            entry["serendipity"] = ser.to_dict()
            top = rank_symbolic(st.interpretations, cfg.top_k) if st.interpretations else []
            entry["top_symbolic"] = [[a, n] for a, n in top]
            art.write(
                f"analytics/{source}_top_symbolic.tsv",
                lambda p, t=top: write_tsv(p, ("artwork_iri", "simulations"), t),
            )
        if st.parsed is not None:
            freq = meaning_frequency(st.parsed)
            entry["meaning_frequency"] = [[m, n] for m, n in freq[: cfg.top_k]]
            art.write(
                f"analytics/{source}_meanings.tsv",
                lambda p, f=freq: write_tsv(p, ("meaning_id", "artworks"), f),
            )
        summary[source] = entry
    art.json("analytics/summary.json", summary)
    return summary


def cmd_evaluate(cfg: RunConfig, art: Artifacts, state: dict) -> dict:
    cfg.check_optional()
    rows = load_scores(cfg.scores)
    report = build_report(rows)
    computed: dict = {}
    if cfg.annotations is not None:
        computed["cr2"] = score_cr2(load_annotations(cfg.annotations))
    for source, st in _states(cfg, state).items():
        links = subject_links(r for r in st.recognitions if r.level.level.value != "Iconological")
        if links:
            computed[f"cr5_{source}"] = score_cr5(links)
    art.text("evaluation/report.csv", report.to_csv())
    art.text("evaluation/report.txt", report.to_text())
    art.json("evaluation/computed.json", computed)
    return {
        "rows": len(report.rows),
        "overall_ranks": {r.name: r.rank_overall for r in report.rows},
        "computed": computed,
    }


def _sha256(path: Path) -> str:
    h = hashlib.sha256()
    with open(path, "rb") as fh:
        for block in iter(lambda: fh.read(1 << 16), b""):
            h.update(block)
    return h.hexdigest()


def write_manifest(art: Artifacts, extra: dict) -> None:
    entries = []
    for rel in sorted(set(art.written)):
        p = art.path(rel)
        if p.is_file():
            entries.append({"path": rel, "bytes": p.stat().st_size, "sha256": _sha256(p)})
    art.json("manifest.json", {"version": __version__, "artifacts": entries, **extra})


def cmd_pipeline(cfg: RunConfig, art: Artifacts, state: dict) -> dict:
    if cfg.depicts is None and cfg.descriptions is None:
        raise ConfigError("pipeline needs at least one of 'depicts' or 'descriptions'")
    cfg.check_optional()
    state = PipelineState(state)
    summary: dict = {}
    if cfg.depicts is not None:
        summary["convert-wikidata"] = cmd_convert_wikidata(cfg, art, state)
    if cfg.descriptions is not None:
        summary["convert-arco"] = cmd_convert_arco(cfg, art, state)
    if cfg.kb_simulations is not None:
        summary["enrich"] = cmd_enrich(cfg, art, state)
    summary["emit"] = cmd_emit(cfg, art, state)
    summary["analyze"] = cmd_analyze(cfg, art, state)
    summary["evaluate"] = cmd_evaluate(cfg, art, state)
    write_manifest(art, {"seed": cfg.seed, "stages": sorted(summary)})
    return summary


COMMANDS = {
    "convert-wikidata": cmd_convert_wikidata,
    "convert-arco": cmd_convert_arco,
    "enrich": cmd_enrich,
    "emit": cmd_emit,
    "analyze": cmd_analyze,
    "evaluate": cmd_evaluate,
    "pipeline": cmd_pipeline,
}


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="iiconforge", description=__doc__.splitlines()[0])
    ap.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--config", type=Path, help="flat key = value configuration file")
    common.add_argument("--out", type=Path, help="output directory (overrides the config)")
    common.add_argument("--jobs", type=int, help="worker processes for parallel stages")
    common.add_argument("--dry-run", action="store_true", help="validate config and inputs, write nothing")
    common.add_argument("--seed", type=int, help="seed recorded for randomized fixtures")
    common.add_argument("-v", "--verbose", action="count", default=0)
    sub = ap.add_subparsers(dest="command", required=True)
    sub.add_parser("harvest", parents=[common], help="page depicts statements out of a SPARQL endpoint")
    sub.add_parser("convert-wikidata", parents=[common], help="align depicts statements to ICON levels")
    sub.add_parser("convert-arco", parents=[common], help="parse free-text iconographic readings")
    sub.add_parser("enrich", parents=[common], help="join recognitions with the symbolism KB")
    sub.add_parser("emit", parents=[common], help="serialize final graphs and the catalogue")
    an = sub.add_parser("analyze", parents=[common], help="serendipity, ranking and level reports")
    an.add_argument("--top-k", type=int)
    an.add_argument("--same-context", action="store_true", default=None)
    an.add_argument("--pair-cap", type=int)
    sub.add_parser("evaluate", parents=[common], help="aggregate CR1-CR6 into the comparison report")
    sub.add_parser("pipeline", parents=[common], help="convert, enrich, emit, analyze and evaluate")
    return ap


def _resolve_config(args) -> RunConfig:
    cfg = RunConfig.from_file(args.config) if args.config else RunConfig()
    overrides = {
        "out": args.out,
        "jobs": args.jobs,
        "seed": args.seed,
        "top_k": getattr(args, "top_k", None),
        "same_context": getattr(args, "same_context", None),
        "pair_cap": getattr(args, "pair_cap", None),
    }
    for key, value in overrides.items():
        if value is not None:
            setattr(cfg, key, value)
    if cfg.jobs < 1:
        raise ConfigError("jobs must be >= 1")
    cfg.check_out_writable()
    return cfg


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(
        level=logging.WARNING - 10 * min(args.verbose, 2),
        format="%(levelname)s %(name)s: %(message)s",
    )
    try:
        cfg = _resolve_config(args)
        art = Artifacts(cfg.out, dry_run=args.dry_run)
        if args.command == "harvest":
            summary = cmd_harvest(cfg, art)
        else:
            summary = COMMANDS[args.command](cfg, art, {})
    except ConfigError as exc:
        log.error("config error: %s", exc)
        return EXIT_CONFIG
    except InvariantViolation as exc:
        log.error("invariant violated: %s", exc)
        return EXIT_INVARIANT
    except (InputError, OSError, ValueError) as exc:
        log.error("input error: %s", exc)
        return EXIT_INPUT
    except IiconforgeError as exc:
        log.error("%s", exc)
        return EXIT_INPUT
    except Exception:  # noqa: BLE001 - anything else is a bug in this package
        log.exception("internal error")
        return EXIT_INVARIANT
    json.dump(summary, sys.stdout, indent=2, sort_keys=True)
    sys.stdout.write("\n")
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
