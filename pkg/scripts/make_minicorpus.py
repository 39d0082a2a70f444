#!/usr/bin/env python3
"""Generate the bundled 50-artwork mini-corpus used by the end-to-end tests.

Every element carries at least one type from the alignment, so conversion
coverage is 100%. Entity IRIs live under an example.org namespace: they are
synthetic, not real Wikidata items. Type IRIs are real Wikidata classes from
the starter alignment.

    python scripts/make_minicorpus.py --seed 7 --out data/minicorpus
"""

from __future__ import annotations

import argparse
import csv
import random
from pathlib import Path

from iiconforge.harvester import DepictsStatement, write_depicts_tsv
from iiconforge.model import QualifierKind
from iiconforge.wd_reengineer import STARTER_ALIGNMENT

WD = "http://www.wikidata.org/entity/"
MC = "https://example.org/minicorpus/"

# label, aligned type ids, extra unaligned type ids
ELEMENTS = [
    ("dog", ["Q729"], ["Q35120"]),
    ("cat", ["Q729"], []),
    ("lion", ["Q729"], []),
    ("lamb", ["Q729"], []),
    ("dove", ["Q729"], ["Q35120"]),
    ("rose", ["Q506", "Q756"], []),
    ("lily", ["Q506"], []),
    ("apple", ["Q1364"], []),
    ("oak", ["Q10884"], []),
    ("skull", ["Q39546"], []),
    ("sword", ["Q728"], []),
    ("crown", ["Q11460"], []),
    ("halo", ["Q11460"], []),
    ("cloak", ["Q11460"], []),
    ("ship", ["Q11446"], []),
    ("moon", ["Q405"], []),
    ("sun", ["Q525"], []),
    ("mountain", ["Q8502"], []),
    ("river", ["Q4022"], []),
    ("church", ["Q16970", "Q41176"], []),
    ("Venus", ["Q178885"], ["Q35120"]),
    ("Mary Magdalene", ["Q20643955", "Q5"], []),
    ("Saint Jerome", ["Q43115", "Q5"], []),
    ("Noah", ["Q20643955"], []),
    ("Cupid", ["Q178885", "Q4271324"], []),
    ("angel", ["Q235113"], []),
    ("Last Supper", ["Q1656682"], []),
    ("Flood", ["Q13418847"], []),
    ("battle", ["Q178561"], []),
    ("weeping", ["Q9415"], []),
    ("blessing", ["Q371174"], []),
    ("praying", ["Q4026292"], []),
    ("reading", ["Q1914636"], []),
]

WORN = ["crown", "halo", "cloak"]
GESTURES = ["weeping", "blessing"]

# symbol label -> [(meaning, context)]
SYMBOLS = {
    "dog": [("fidelity", "Western"), ("vigilance", "Western")],
    "cat": [("divinity", "Egyptian"), ("laziness", "Western")],
    "lion": [("strength", "Western"), ("resurrection", "Christian")],
    "lamb": [("sacrifice", "Christian"), ("innocence", "Western")],
    "dove": [("peace", "Western"), ("holy spirit", "Christian")],
    "rose": [("love", "Western"), ("martyrdom", "Christian")],
    "lily": [("purity", "Christian")],
    "apple": [("temptation", "Christian"), ("love", "Greek")],
    "skull": [("mortality", "Western")],
    "sword": [("justice", "Western"), ("martyrdom", "Christian")],
    "crown": [("sovereignty", "Western")],
    "halo": [("holiness", "Christian")],
    "moon": [("chastity", "Greek")],
    "sun": [("divinity", "Egyptian"), ("truth", "Western")],
    "heart": [("love", "Western")],
    "oak": [("strength", "Germanic")],
    "ship": [("salvation", "Christian")],
    "mountain": [("elevation", "Western")],
}
# extra surface forms resolving to a symbol
ALIASES = {"red rose": "rose", "hound": "dog", "kitten": "cat"}

SUBJECT_WORDS = ["woman", "man", "flowers", "dog", "cat", "rose", "lion", "apple", "skull", "dove", "landscape", "sea"]
NAMED = ["Venus", "Cupid", "Saint George", "Mary Magdalene", "Noah", "Rome", "Venice"]
PHRASES = [
    "promotion of tourism",
    "promotion of exhibitions",
    "promotion of sport",
    "promotion of trade",
    "promotion of agriculture",
    "promotion of cultural events",
]


def _slug(label: str) -> str:
    return label.lower().replace(" ", "-")


def element_iri(label: str) -> str:
    return f"{MC}entity/{_slug(label)}"


def symbol_iri(label: str) -> str:
    return f"{MC}symbol/{_slug(label)}"


def meaning_iri(label: str) -> str:
    return f"{MC}meaning/{_slug(label)}"


def make_depicts(rng: random.Random, n_artworks: int) -> list[DepictsStatement]:
    info = {lab: (aligned, extra) for lab, aligned, extra in ELEMENTS}
    pool = [lab for lab, _, _ in ELEMENTS]
    stmts = []
    for i in range(1, n_artworks + 1):
        art = f"{MC}artwork/a{i:03d}"
        for lab in sorted(rng.sample(pool, rng.randint(2, 6))):
            quals = []
            aligned, extra = info[lab]
            if aligned[0] in ("Q5", "Q20643955", "Q43115", "Q178885") and rng.random() < 0.4:
                quals.append((QualifierKind.WEARS, element_iri(rng.choice(WORN))))
            if aligned[0] in ("Q5", "Q20643955", "Q43115") and rng.random() < 0.3:
                quals.append((QualifierKind.EXPRESSION_GESTURE_OR_POSE, element_iri(rng.choice(GESTURES))))
            stmts.append(
                DepictsStatement(
                    artwork=art,
                    artwork_label=f"Painting {i}",
                    element=element_iri(lab),
                    element_label=lab,
                    element_types=tuple(sorted(WD + t for t in aligned + extra)),
                    qualifiers=tuple(quals),
                )
            )
    return stmts


def make_descriptions(rng: random.Random, n: int) -> list[tuple[str, str]]:
    out = []
    for i in range(1, n + 1):
        art = f"{MC}arco/d{i:03d}"
        subj = rng.sample(SUBJECT_WORDS, rng.randint(1, 4)) + rng.sample(NAMED, rng.randint(0, 2))
        rng.shuffle(subj)
        parts = [f"Subject: {', '.join(subj)}"]
        if rng.random() < 0.8:
            parts.append(f"Product category/type of event: {rng.choice(PHRASES)}")
        text = f"Poster, colour print. Iconographic Reading: {'; '.join(parts)}."
        out.append((art, text))
    # three malformed readings, one per discard reason the grammar can reach
    out.append((f"{MC}arco/d{n + 1:03d}", "Poster, colour print, no reading recorded."))
    out.append((f"{MC}arco/d{n + 2:03d}", "Iconographic Reading: woman with umbrella; Subject: rain."))
    out.append((f"{MC}arco/d{n + 3:03d}", "Iconographic Reading: Subject: ; Product category/type of event: promotion of trade."))
    return out


def write_corpus(out: Path, seed: int, n_artworks: int = 50, n_descriptions: int = 27) -> None:
    rng = random.Random(seed)
    out.mkdir(parents=True, exist_ok=True)
    stmts = make_depicts(rng, n_artworks)
    write_depicts_tsv(stmts, out / "depicts.tsv")

    used = {t for s in stmts for t in s.element_types}
    with open(STARTER_ALIGNMENT, encoding="utf-8", newline="") as src, open(
        out / "alignment.csv", "w", encoding="utf-8", newline=""
    ) as dst:
        rows = [l for l in src if not l.startswith("#")]
        reader = csv.DictReader(rows)
        writer = csv.DictWriter(dst, reader.fieldnames, lineterminator="\n")
        writer.writeheader()
        for row in reader:
            if row["type_iri"] in used:
                writer.writerow(row)

    with open(out / "descriptions.tsv", "w", encoding="utf-8", newline="\n") as fh:
        fh.write("artwork_iri\tdescription_text\n")
        for art, text in make_descriptions(rng, n_descriptions):
            fh.write(f"{art}\t{text}\n")

    with open(out / "simulations.tsv", "w", encoding="utf-8", newline="\n") as fh:
        fh.write("symbol_iri\tmeaning_iri\tcontext_tag\n")
        for sym, pairs in sorted(SYMBOLS.items()):
            for meaning, ctx in pairs:
                fh.write(f"{symbol_iri(sym)}\t{meaning_iri(meaning)}\t{ctx}\n")

    with open(out / "labels.tsv", "w", encoding="utf-8", newline="\n") as fh:
        fh.write("label\tsymbol_iri\n")
        for sym in sorted(SYMBOLS):
            fh.write(f"{sym}\t{symbol_iri(sym)}\n")
        for alias, sym in sorted(ALIASES.items()):
            fh.write(f"{alias}\t{symbol_iri(sym)}\n")

    # a few elements linked by IRI rather than by label
    with open(out / "id_alignment.csv", "w", encoding="utf-8", newline="\n") as fh:
        fh.write("element_iri,symbol_iri\n")
        for lab in ("dog", "rose", "sword", "halo"):
            fh.write(f"{element_iri(lab)},{symbol_iri(lab)}\n")

    (out / "pipeline.cfg").write_text(
        "# Mini-corpus run; paths are relative to this file.\n"
        "depicts = depicts.tsv\n"
        "alignment = alignment.csv\n"
        "descriptions = descriptions.tsv\n"
        "kb_simulations = simulations.tsv\n"
        "kb_labels = labels.tsv\n"
        "id_alignment = id_alignment.csv\n"
        "created = 2024-01-01T00:00:00Z\n"
        "top_k = 10\n"
        f"seed = {seed}\n"
        "out = out\n",
        encoding="utf-8",
    )


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--seed", type=int, default=7)
    ap.add_argument("--out", type=Path, default=Path(__file__).resolve().parents[1] / "data" / "minicorpus")
    ap.add_argument("--artworks", type=int, default=50)
    args = ap.parse_args(argv)
    write_corpus(args.out, args.seed, args.artworks)
    print(f"wrote mini-corpus to {args.out}")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
