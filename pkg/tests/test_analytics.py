import random
from collections import defaultdict

import pytest
from hypothesis import given
from hypothesis import strategies as st

from iiconforge.analytics import (
    build_meaning_index,
    count_serendipity,
    level_distribution,
    meaning_frequency,
    rank_symbolic,
)
from iiconforge.arco_parser import ParsedDescription, Reason
from iiconforge.enricher import SymbolicInterpretation
from iiconforge.model import InterpretationLevel, Level, Recognition, Subclass
from instances import LEVELS, serendipity_instance
from oracles import brute_serendipity, count_simulations, group_levels
from published import (
    PRE_SHARE_PERCENT,
    TABLE3_LEVELS,
    TABLE3_ROWS,
    TOP_MEANINGS,
    TOP_PAINTINGS,
    WD,
    table3_recognitions,
    top_meanings_descriptions,
    top_paintings_interpretations,
)

EX = "http://example.org/"


def si(art, sym, meaning, ctx="Western"):
    return SymbolicInterpretation(EX + art, EX + "el/" + sym, EX + sym, EX + meaning, ctx)


# -- meaning index -----------------------------------------------------------------


def test_index_single():
    assert build_meaning_index([si("A", "heart", "love")]) == {EX + "love": {EX + "A": frozenset({EX + "heart"})}}


def test_index_heart_rose():
    idx = build_meaning_index([si("A", "heart", "love"), si("C", "rose", "love")])
    assert idx == {EX + "love": {EX + "A": frozenset({EX + "heart"}), EX + "C": frozenset({EX + "rose"})}}


def test_index_matches_group_by(rng):
    for _ in range(20):
        interps = serendipity_instance(rng, max_artworks=30)
        expect = defaultdict(lambda: defaultdict(set))
        for i in interps:
            expect[i.meaning][i.artwork].add(i.symbol)
        got = build_meaning_index(interps)
        assert {m: {a: set(s) for a, s in arts.items()} for m, arts in got.items()} == {
            m: dict(arts) for m, arts in expect.items()
        }


def test_index_same_context_keys():
    idx = build_meaning_index([si("A", "cat", "div", "Egyptian"), si("B", "sun", "div", "Greek")], same_context=True)
    assert set(idx) == {(EX + "div", "Egyptian"), (EX + "div", "Greek")}


# -- serendipity ---------------------------------------------------------------------


def _count(interps, same_context=False, **kw):
    return count_serendipity(build_meaning_index(interps, same_context), **kw)


def test_same_symbol_is_not_serendipitous():
    r = _count([si("A", "heart", "love"), si("B", "heart", "love")])
    assert (r.pair_meaning_count, r.distinct_pair_count) == (0, 0)


def test_different_symbols_are_serendipitous():
    r = _count([si("A", "heart", "love"), si("C", "rose", "love")])
    assert (r.pair_meaning_count, r.distinct_pair_count) == (1, 1)


def test_one_global_symbol_per_meaning_gives_zero(rng):
    interps = [si(f"a{a}", f"s{m}", f"m{m}") for a in range(30) for m in range(5) if rng.random() < 0.6]
    assert _count(interps).pair_meaning_count == 0


def test_shared_and_differing_symbol_still_counts():
    # A has {heart, rose}, B has {heart}: heart/rose differ, so the pair counts
    r = _count([si("A", "heart", "love"), si("A", "rose", "love"), si("B", "heart", "love")])
    assert r.pair_meaning_count == 1


def test_distinct_pairs_collapse_meanings():
    interps = [si("A", "heart", "love"), si("B", "rose", "love"), si("A", "lion", "strength"), si("B", "oak", "strength")]
    r = _count(interps)
    assert (r.pair_meaning_count, r.distinct_pair_count) == (2, 1)


def test_context_filter_is_stricter():
    interps = [si("A", "cat", "div", "Egyptian"), si("B", "sun", "div", "Greek")]
    assert _count(interps).pair_meaning_count == 1
    assert _count(interps, same_context=True).pair_meaning_count == 0


def test_pair_cap_reports_unavailable():
    interps = [si(f"a{i}", f"s{i}", "love") for i in range(10)]
    r = _count(interps, pair_cap=44)
    assert r.pair_meaning_count == 45 and r.distinct_pair_count is None
    assert "pairs" not in r.to_dict() and r.to_dict()["pair_cap"] == 44
    listed = _count(interps, pair_cap=45, list_pairs=True)
    assert listed.distinct_pair_count == 45 and len(listed.pairs) == 45


def test_empty_index():
    r = count_serendipity({})
    assert (r.pair_meaning_count, r.distinct_pair_count) == (0, 0)


@pytest.mark.parametrize("same_context", [False, True])
def test_closed_form_matches_brute_force(rng, same_context):
    for _ in range(40):
        interps = serendipity_instance(rng, max_artworks=60, same_context=same_context)
        r = _count(interps, same_context)
        assert (r.pair_meaning_count, r.distinct_pair_count) == brute_serendipity(interps, same_context)
        assert r.distinct_pair_count <= r.pair_meaning_count


small_interp = st.builds(
    si,
    st.sampled_from([f"a{i}" for i in range(8)]),
    st.sampled_from([f"s{i}" for i in range(4)]),
    st.sampled_from([f"m{i}" for i in range(3)]),
    st.sampled_from(["Western", "Greek"]),
)


@given(st.lists(small_interp, max_size=40), st.booleans())
def test_closed_form_property(interps, same_context):
    r = _count(interps, same_context)
    assert (r.pair_meaning_count, r.distinct_pair_count) == brute_serendipity(interps, same_context)


@given(st.lists(small_interp, max_size=30))
def test_duplicating_artworks_keeps_equivalence(interps):
    doubled = interps + [i._replace(artwork=i.artwork + "/copy") for i in interps]
    r = _count(doubled)
    assert (r.pair_meaning_count, r.distinct_pair_count) == brute_serendipity(doubled)


# -- symbolic ranking ---------------------------------------------------------------


def test_rank_top_paintings_fixture():
    ranked = rank_symbolic(top_paintings_interpretations(), top_k=3)
    assert ranked == [(WD + qid, n) for qid, _, n in TOP_PAINTINGS]
    labels = {WD + qid: label for qid, label, _ in TOP_PAINTINGS}
    assert labels[ranked[0][0]] == "Entrance into the Ark"


def test_rank_single_artwork():
    assert rank_symbolic([si("A", "heart", "love")], top_k=5) == [(EX + "A", 1)]


def test_rank_rejects_bad_k():
    with pytest.raises(ValueError):
        rank_symbolic([], top_k=0)


def test_rank_ties_by_iri():
    interps = [si("B", "heart", "love"), si("A", "rose", "love")]
    assert [a for a, _ in rank_symbolic(interps)] == [EX + "A", EX + "B"]


def test_rank_matches_sort_oracle(rng):
    for _ in range(20):
        interps = serendipity_instance(rng, max_artworks=40)
        k = rng.randint(1, 15)
        counts = count_simulations(interps)
        expect = sorted(counts.items(), key=lambda x: (-x[1], x[0]))[:k]
        got = rank_symbolic(interps, k)
        assert got == expect and len(got) == min(k, len(counts))
        assert all(a[1] >= b[1] for a, b in zip(got, got[1:]))


# -- level distribution -------------------------------------------------------------


def test_table3_share_and_characters_row():
    dist = level_distribution(table3_recognitions())
    pre, icon = Level.PRE_ICONOGRAPHIC.value, Level.ICONOGRAPHIC.value
    assert dist.level_totals[pre] == TABLE3_LEVELS[Level.PRE_ICONOGRAPHIC][0]
    assert dist.level_totals[icon] == TABLE3_LEVELS[Level.ICONOGRAPHIC][0]
    assert abs(100 * dist.pre_iconographic_share - PRE_SHARE_PERCENT) <= 0.01
    assert dist.row(icon, "Character") == TABLE3_ROWS[Subclass.CHARACTER]


def test_only_pre_iconographic_share():
    recs = [Recognition(EX + "A", EX + "cat", InterpretationLevel(Level.PRE_ICONOGRAPHIC, Subclass.NATURAL_ELEMENT))]
    assert level_distribution(recs).pre_iconographic_share == 1.0
    assert level_distribution([]).pre_iconographic_share == 0.0


recognitions = st.lists(
    st.builds(
        Recognition,
        st.sampled_from([EX + f"a{i}" for i in range(6)]),
        st.sampled_from([EX + f"e{i}" for i in range(6)]),
        st.sampled_from(LEVELS),
    ),
    max_size=40,
)


@given(recognitions)
def test_distribution_matches_group_by(recs):
    dist = level_distribution(recs)
    assert {(lv, sub): (t, u) for lv, sub, t, u in dist.rows} == group_levels(recs)


@given(recognitions, recognitions)
def test_totals_additive_over_disjoint_artworks(left, right):
    right = [Recognition(r.artwork + "/other", r.element, r.level) for r in right]
    a, b, both = level_distribution(left), level_distribution(right), level_distribution(left + right)
    for lv in both.level_totals:
        assert both.level_totals[lv] == a.level_totals.get(lv, 0) + b.level_totals.get(lv, 0)


# -- meaning frequency --------------------------------------------------------------


def test_meaning_frequency_top3():
    freq = meaning_frequency(top_meanings_descriptions(3))
    assert freq == [(local, n) for _, local, n in TOP_MEANINGS[:3]]


def test_meaning_frequency_empty_and_discarded():
    assert meaning_frequency([ParsedDescription(EX + "a", pre_iconographic=("dog",))]) == []
    bad = ParsedDescription(EX + "a", iconological=("promotion of trade",), reason=Reason.NO_READING_MARKER)
    assert meaning_frequency([bad]) == []


def test_meaning_frequency_counts_distinct_artworks():
    ds = [
        ParsedDescription(EX + "a", iconological=("promotion of trade", "Promotion  of trade")),
        ParsedDescription(EX + "b", iconological=("promotion of trade",)),
        ParsedDescription(EX + "a", iconological=("promotion of sport",)),
    ]
    assert meaning_frequency(ds) == [("promotionOfTrade", 2), ("promotionOfSport", 1)]


def test_meaning_frequency_matches_count_oracle(rng):
    phrases = [p for p, _, _ in TOP_MEANINGS]
    ds = [
        ParsedDescription(f"{EX}a{rng.randrange(40)}", iconological=tuple(rng.sample(phrases, rng.randint(0, 3))))
        for _ in range(200)
    ]
    local = {p: l for p, l, _ in TOP_MEANINGS}
    seen = defaultdict(set)
    for d in ds:
        for p in d.iconological:
            seen[local[p]].add(d.artwork)
    assert meaning_frequency(ds) == sorted(((m, len(a)) for m, a in seen.items()), key=lambda x: (-x[1], x[0]))
