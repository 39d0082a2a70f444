import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from iiconforge.errors import EmptyKB, MalformedRecord
from iiconforge.symbolkb import (
    SymbolKB,
    TriplePredicates,
    load_kb,
    match_label,
    meanings_of,
    normalize_label,
    symbols_of,
    write_kb_tsv,
)
from oracles import scan_meanings

HR = "http://www.hyperreal.org/entity/"
HEADER = "symbol_iri\tmeaning_iri\tcontext_tag\n"
CAT_ROW = f"{HR}cat\t{HR}divinity\tEgyptian\n"


def test_cat_divinity_fixture(fixtures):
    kb, summary = load_kb(fixtures / "kb" / "cat.tsv", fixtures / "kb" / "labels.tsv")
    assert len(kb) == 1
    assert kb.by_symbol[f"{HR}cat"] == {(f"{HR}divinity", "Egyptian")}
    assert meanings_of(f"{HR}cat", kb) == {(f"{HR}divinity", "Egyptian")}
    assert summary.records == 1 and summary.duplicates == 0


def test_duplicate_rows_collapse():
    kb, summary = load_kb(HEADER + CAT_ROW + CAT_ROW)
    assert len(kb) == 1
    assert summary.duplicates == 1


def test_label_matching(fixtures):
    kb, _ = load_kb(fixtures / "kb" / "cat.tsv", fixtures / "kb" / "labels.tsv")
    assert match_label("Cat", kb) == f"{HR}cat"
    assert match_label("zzzz-nonexistent", kb) is None
    assert match_label(" red  Rose ", kb) == f"{HR}rose"
    # exact matching only, no stemming or fuzzy fallback
    assert match_label("cats", kb) is None


def test_unknown_symbol_has_no_meanings():
    kb, _ = load_kb(HEADER + CAT_ROW)
    assert meanings_of(f"{HR}unicorn", kb) == frozenset()
    assert symbols_of(f"{HR}divinity", kb) == {(f"{HR}cat", "Egyptian")}


def test_missing_column_reports_line():
    with pytest.raises(MalformedRecord) as exc:
        load_kb(HEADER + CAT_ROW + f"{HR}dog\t{HR}fidelity\n")
    assert exc.value.line == 3


def test_header_required():
    with pytest.raises(MalformedRecord):
        load_kb(CAT_ROW + CAT_ROW)


def test_empty_kb():
    with pytest.raises(EmptyKB):
        load_kb(HEADER)


def test_triple_form_input():
    pred = TriplePredicates()
    nt = "\n".join(
        [
            f"<{HR}sim1> <{pred.simulacrum}> <{HR}cat> .",
            f"<{HR}sim1> <{pred.reality_counterpart}> <{HR}divinity> .",
            f'<{HR}sim1> <{pred.context}> "Egyptian" .',
            f'<{HR}cat> <{pred.label}> "Cat"@en .',
        ]
    ) + "\n"
    kb, summary = load_kb(nt, fmt="nt")
    assert kb.simulations == {(f"{HR}cat", f"{HR}divinity", "Egyptian")}
    assert match_label("cat", kb) == f"{HR}cat"


def test_incomplete_triple_record():
    pred = TriplePredicates()
    nt = f"<{HR}sim1> <{pred.simulacrum}> <{HR}cat> .\n"
    with pytest.raises(MalformedRecord):
        load_kb(nt, fmt="nt")


def test_label_conflict_is_order_independent():
    a = "label\tsymbol_iri\nlion\thttp://x.org/b\nlion\thttp://x.org/a\n"
    b = "label\tsymbol_iri\nlion\thttp://x.org/a\nlion\thttp://x.org/b\n"
    kb_a, sa = load_kb(HEADER + CAT_ROW, a)
    kb_b, _ = load_kb(HEADER + CAT_ROW, b)
    assert match_label("lion", kb_a) == match_label("lion", kb_b) == "http://x.org/a"
    assert sa.label_conflicts == 1


def test_tsv_round_trip(tmp_path):
    kb, _ = load_kb(HEADER + CAT_ROW + f"{HR}dog\t{HR}fidelity\tWestern\n")
    write_kb_tsv(kb, tmp_path / "kb.tsv")
    again, _ = load_kb(tmp_path / "kb.tsv")
    assert again.simulations == kb.simulations


def _random_rows(rng, n):
    syms = [f"{HR}s{i}" for i in range(40)]
    means = [f"{HR}m{i}" for i in range(40)]
    ctxs = ["Egyptian", "Greek", "Christian", "Western", "Hindu"]
    return [(rng.choice(syms), rng.choice(means), rng.choice(ctxs)) for _ in range(n)]


def test_thousand_random_rows_indexes_inverse(rng):
    rows = _random_rows(rng, 1000)
    kb, summary = load_kb(HEADER + "".join("\t".join(r) + "\n" for r in rows))
    sims = set(rows)
    assert kb.simulations == sims
    assert summary.duplicates == 1000 - len(sims)
    for s, pairs in kb.by_symbol.items():
        for m, c in pairs:
            assert (s, c) in kb.by_meaning[m]
            assert (s, m, c) in sims
    for m, pairs in kb.by_meaning.items():
        for s, c in pairs:
            assert (m, c) in kb.by_symbol[s]
    for s, m, c in sims:
        assert (m, c) in kb.by_symbol[s] and (s, c) in kb.by_meaning[m]
    for s in {r[0] for r in rows}:
        assert meanings_of(s, kb) == scan_meanings(s, rows)


rows_st = st.lists(
    st.tuples(
        st.sampled_from([f"{HR}s{i}" for i in range(6)]),
        st.sampled_from([f"{HR}m{i}" for i in range(6)]),
        st.sampled_from(["Egyptian", "Greek", "Christian"]),
    ),
    min_size=1,
    max_size=40,
)


@given(rows_st, st.randoms(use_true_random=False))
def test_load_is_order_independent_and_sums_match(rows, r):
    text = HEADER + "".join("\t".join(x) + "\n" for x in rows)
    shuffled = rows[:]
    r.shuffle(shuffled)
    kb1, _ = load_kb(text)
    kb2, _ = load_kb(HEADER + "".join("\t".join(x) + "\n" for x in shuffled))
    assert kb1 == kb2
    total = len(kb1.simulations)
    assert sum(len(v) for v in kb1.by_symbol.values()) == total
    assert sum(len(v) for v in kb1.by_meaning.values()) == total


@given(st.text(min_size=1, max_size=20))
def test_match_label_case_insensitive(label):
    kb = SymbolKB.build([(f"{HR}cat", f"{HR}divinity", "Egyptian")], {normalize_label("Cat"): f"{HR}cat"})
    assert match_label(label, kb) == match_label(label.lower(), kb)
