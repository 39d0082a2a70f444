"""Corpus analytics: serendipitous connections, symbolic ranking, level
distribution and iconological meaning frequency.

Serendipity counting never materializes artwork pairs. For one meaning m,
let k artworks convey it and q_s of them convey it through exactly the single
symbol s. A pair fails to be serendipitous only when both sides are the same
singleton {s}, hence

    connections(m) = C(k, 2) - sum_s C(q_s, 2)
"""

from __future__ import annotations

import json
from collections import Counter, defaultdict
from dataclasses import asdict, dataclass, field
from itertools import combinations
from math import comb
from typing import Iterable, Mapping, Optional

from .arco_parser import ParsedDescription, mint_meaning_id
from .enricher import SymbolicInterpretation
from .errors import EmptyPhrase
from .model import Level, Recognition

DEFAULT_PAIR_CAP = 10**6

# meaning key -> artwork -> frozenset of symbols
MeaningIndex = Mapping[object, Mapping[str, frozenset]]


def build_meaning_index(
    interps: Iterable[SymbolicInterpretation], same_context: bool = False
) -> dict:
    """Group interpretations by meaning (or (meaning, context)), then by artwork."""
    groups: dict = defaultdict(lambda: defaultdict(set))
    for i in interps:
        key = (i.meaning, i.context) if same_context else i.meaning
        groups[key][i.artwork].add(i.symbol)
    return {
        m: {a: frozenset(s) for a, s in sorted(arts.items())}
        for m, arts in sorted(groups.items())
    }


@dataclass
class SerendipityResult:
    pair_meaning_count: int
    # None when the instance exceeds the pair cap
    distinct_pair_count: Optional[int]
    pair_cap: int
    pairs: Optional[list] = None

    def to_dict(self) -> dict:
        d = asdict(self)
        if self.pairs is None:
            d.pop("pairs")
        return d


def _serendipitous_pairs(arts: Mapping[str, frozenset]):
    items = sorted(arts.items())
    for (a, sa), (b, sb) in combinations(items, 2):
        if not (len(sa) == 1 and sa == sb):
            yield (a, b)


def count_serendipity(
    index: MeaningIndex, pair_cap: int = DEFAULT_PAIR_CAP, list_pairs: bool = False
) -> SerendipityResult:
    total = 0
    upper_bound = 0
    for arts in index.values():
        k = len(arts)
        singles = Counter(next(iter(s)) for s in arts.values() if len(s) == 1)
        total += comb(k, 2) - sum(comb(q, 2) for q in singles.values())
        upper_bound += comb(k, 2)

    distinct = None
    pairs = None
    if upper_bound <= pair_cap:
        seen = set()
        for arts in index.values():
            seen.update(_serendipitous_pairs(arts))
        distinct = len(seen)
        if list_pairs:
            pairs = sorted(seen)
    return SerendipityResult(total, distinct, pair_cap, pairs)


def rank_symbolic(interps: Iterable[SymbolicInterpretation], top_k: int = 10) -> list[tuple[str, int]]:
    """Artworks by number of distinct simulations, descending; ties by IRI."""
    if top_k < 1:
        raise ValueError("top_k must be >= 1")
    sims = defaultdict(set)
    for i in interps:
        sims[i.artwork].add((i.symbol, i.meaning, i.context))
    ranked = sorted(((a, len(s)) for a, s in sims.items()), key=lambda x: (-x[1], x[0]))
    return ranked[:top_k]


@dataclass
class LevelDistribution:
    # (level, subclass or "", total recognitions, unique elements)
    rows: list = field(default_factory=list)
    level_totals: dict = field(default_factory=dict)
    level_uniques: dict = field(default_factory=dict)

    @property
    def pre_iconographic_share(self) -> float:
        pre = self.level_totals.get(Level.PRE_ICONOGRAPHIC.value, 0)
        icon = self.level_totals.get(Level.ICONOGRAPHIC.value, 0)
        return pre / (pre + icon) if pre + icon else 0.0

    def row(self, level: str, subclass: str = "") -> tuple[int, int]:
        for lv, sub, total, unique in self.rows:
            if lv == level and sub == subclass:
                return total, unique
        return 0, 0

    def to_dict(self) -> dict:
        return {
            "rows": [
                {"level": lv, "subclass": sub, "total": t, "unique": u}
                for lv, sub, t, u in self.rows
            ],
            "level_totals": self.level_totals,
            "level_uniques": self.level_uniques,
            "pre_iconographic_share": self.pre_iconographic_share,
        }


def level_distribution(recognitions: Iterable[Recognition]) -> LevelDistribution:
    totals: Counter = Counter()
    uniques: dict = defaultdict(set)
    lvl_totals: Counter = Counter()
    lvl_uniques: dict = defaultdict(set)
    for r in recognitions:
        key = (r.level.level.value, r.level.subclass.value if r.level.subclass else "")
        totals[key] += 1
        uniques[key].add(r.element)
        lvl_totals[key[0]] += 1
        lvl_uniques[key[0]].add(r.element)
    rows = [(lv, sub, totals[(lv, sub)], len(uniques[(lv, sub)])) for lv, sub in sorted(totals)]
    return LevelDistribution(
        rows=rows,
        level_totals=dict(sorted(lvl_totals.items())),
        level_uniques={k: len(v) for k, v in sorted(lvl_uniques.items())},
    )


def meaning_frequency(parsed: Iterable[ParsedDescription]) -> list[tuple[str, int]]:
    """Distinct artworks per minted iconological meaning, descending; ties by id."""
    arts = defaultdict(set)
    for p in parsed:
        if not p.conforming:
            continue
        for phrase in p.iconological:
            try:
                arts[mint_meaning_id(phrase)].add(p.artwork)
            except EmptyPhrase:
                continue
    return sorted(((m, len(a)) for m, a in arts.items()), key=lambda x: (-x[1], x[0]))


def write_tsv(path, header: Iterable[str], rows: Iterable[Iterable]) -> None:
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write("\t".join(header) + "\n")
        for row in rows:
            fh.write("\t".join(str(c) for c in row) + "\n")


def write_json(path, obj) -> None:
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        json.dump(obj, fh, indent=2, sort_keys=True, ensure_ascii=False)
        fh.write("\n")
