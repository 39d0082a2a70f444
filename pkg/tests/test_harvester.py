import logging

import pytest
import rdflib
from hypothesis import given
from hypothesis import strategies as st

from iiconforge.errors import (
    EndpointUnreachable,
    MalformedResponse,
    MalformedRow,
    QueryRejected,
    UnknownFormat,
)
from iiconforge.harvester import (
    PQ,
    PS,
    P,
    TSV_COLUMNS,
    WDT,
    DepictsStatement,
    EndpointConfig,
    fetch_depicts,
    load_query_template,
    qualifier_kind,
    read_depicts_dump,
    render_query,
    write_depicts_nt,
    write_depicts_tsv,
)
from iiconforge.model import QualifierKind
from mock_sparql import binding

WD = "http://www.wikidata.org/entity/"
TEMPLATE = "SELECT * WHERE { ?s ?p ?o } LIMIT $limit OFFSET $offset"


def cfg(url, **kw):
    kw.setdefault("page_size", 2)
    kw.setdefault("request_timeout", 5.0)
    return EndpointConfig(url, **kw)


def test_pages_until_short_page(endpoint):
    endpoint.rows = [binding(i) for i in range(7)]
    stmts = list(fetch_depicts(cfg(endpoint.url), TEMPLATE, sleep=lambda d: None))
    assert [s.artwork for s in stmts] == [f"{WD}Q{1000 + i}" for i in range(7)]
    assert len(endpoint.requests) == 4
    assert all(ua.startswith("iiconforge/") for _, ua in endpoint.requests)
    assert stmts[0].element_types == {f"{WD}Q729", f"{WD}Q5"}


def test_empty_result(endpoint):
    assert list(fetch_depicts(cfg(endpoint.url), TEMPLATE, sleep=lambda d: None)) == []


def test_retries_then_succeeds(endpoint, caplog):
    endpoint.rows = [binding(i) for i in range(3)]
    endpoint.fail_first = 2
    delays = []
    with caplog.at_level(logging.WARNING, logger="iiconforge.harvester"):
        stmts = list(fetch_depicts(cfg(endpoint.url, max_retries=3), TEMPLATE, sleep=delays.append))
    assert len(stmts) == 3
    retries = [r for r in caplog.records if "retry" in r.getMessage()]
    assert len(retries) == 2
    assert delays == [0.5, 1.0]


def test_gives_up_after_retries(endpoint):
    endpoint.fail_first = 10
    with pytest.raises(EndpointUnreachable):
        list(fetch_depicts(cfg(endpoint.url, max_retries=2), TEMPLATE, sleep=lambda d: None))
    assert len(endpoint.requests) == 3


def test_connection_refused_is_unreachable():
    with pytest.raises(EndpointUnreachable):
        list(fetch_depicts(cfg("http://127.0.0.1:9/sparql", max_retries=1), TEMPLATE, sleep=lambda d: None))


def test_non_retryable_status(endpoint):
    endpoint.status = 400
    endpoint.body = "syntax error"
    with pytest.raises(QueryRejected) as exc:
        list(fetch_depicts(cfg(endpoint.url), TEMPLATE, sleep=lambda d: None))
    assert exc.value.status == 400


def test_malformed_payload_names_page(endpoint):
    endpoint.body = "<html>not json</html>"
    with pytest.raises(MalformedResponse) as exc:
        list(fetch_depicts(cfg(endpoint.url), TEMPLATE, sleep=lambda d: None))
    assert exc.value.page == 0


def test_duplicates_dropped(endpoint):
    wear = ("P3828", f"{WD}Q9")
    endpoint.rows = [binding(1), binding(1), binding(2, wear), binding(2, wear), binding(2)]
    stmts = list(fetch_depicts(cfg(endpoint.url, page_size=10), TEMPLATE, sleep=lambda d: None))
    keys = [s.key for s in stmts]
    assert len(keys) == len(set(keys)) == 3
    assert stmts[1].qualifiers == ((QualifierKind.WEARS, f"{WD}Q9"),)


def test_endpoint_config_validation(monkeypatch):
    with pytest.raises(ValueError):
        EndpointConfig("http://x", page_size=0)
    with pytest.raises(ValueError):
        EndpointConfig("http://x", request_timeout=0)
    monkeypatch.setenv("IICONFORGE_ENDPOINT", "http://override/sparql")
    assert EndpointConfig.from_env("http://default").endpoint_url == "http://override/sparql"


def test_render_query_needs_placeholders():
    assert "LIMIT 5 OFFSET 10" in render_query(TEMPLATE, 5, 10)
    with pytest.raises(ValueError):
        render_query("SELECT * WHERE {}", 5, 10)
    rendered = render_query(load_query_template(), 100, 200)
    assert "LIMIT 100" in rendered and "OFFSET 200" in rendered


def test_qualifier_kind_tokens():
    assert qualifier_kind("P3828") is QualifierKind.WEARS
    assert qualifier_kind("http://www.wikidata.org/prop/qualifier/P4878") is QualifierKind.SYMBOLIZES
    assert qualifier_kind("ExpressionGestureOrPose") is QualifierKind.EXPRESSION_GESTURE_OR_POSE
    assert qualifier_kind("P1234") is QualifierKind.OTHER


# -- offline dumps ---------------------------------------------------------------

HEADER = "\t".join(TSV_COLUMNS) + "\n"


def test_two_row_tsv(tmp_path):
    p = tmp_path / "d.tsv"
    p.write_text(
        HEADER
        + f"{WD}Q1\tMona Lisa\t{WD}Q467\twoman\t{WD}Q5\t\t\n"
        + f"{WD}Q2\tNight Watch\t{WD}Q728\tweapon\t{WD}Q728|{WD}Q39546\tP3828\t{WD}Q3\n",
        encoding="utf-8",
    )
    a, b = read_depicts_dump(p)
    assert (a.artwork, a.artwork_label, a.element, a.element_label) == (f"{WD}Q1", "Mona Lisa", f"{WD}Q467", "woman")
    assert a.element_types == {f"{WD}Q5"} and a.qualifiers == ()
    assert b.element_types == {f"{WD}Q728", f"{WD}Q39546"}
    assert b.qualifiers == ((QualifierKind.WEARS, f"{WD}Q3"),)


def test_empty_element_iri_line_number(tmp_path):
    p = tmp_path / "d.tsv"
    p.write_text(HEADER + f"{WD}Q1\tx\t{WD}Q2\ty\t\t\t\n" + f"{WD}Q1\tx\t\ty\t\t\t\n", encoding="utf-8")
    with pytest.raises(MalformedRow) as exc:
        list(read_depicts_dump(p))
    assert exc.value.line == 3


def test_unknown_format(tmp_path):
    with pytest.raises(UnknownFormat):
        read_depicts_dump(tmp_path / "x", "xml")


def test_reader_is_lazy(tmp_path):
    # a bad row far down the file is not reached when only the head is read
    p = tmp_path / "d.tsv"
    rows = "".join(f"{WD}Q{i}\tp\t{WD}Q{i + 1}\te\t\t\t\n" for i in range(1, 11))
    p.write_text(HEADER + rows + "garbage\n", encoding="utf-8")
    it = read_depicts_dump(p)
    head = [next(it) for _ in range(3)]
    assert [s.artwork for s in head] == [f"{WD}Q1", f"{WD}Q2", f"{WD}Q3"]
    with pytest.raises(MalformedRow):
        list(it)


def fifty_statements():
    out = []
    for i in range(50):
        quals = []
        if i % 5 == 0:
            quals.append((QualifierKind.WEARS, f"{WD}Q{9000 + i}"))
        if i % 7 == 0:
            quals.append((QualifierKind.SYMBOLIZES, f"{WD}Q{8000 + i}"))
        out.append(
            DepictsStatement(
                artwork=f"{WD}Q{100 + i // 3}",
                artwork_label=f"Painting {i // 3}",
                element=f"{WD}Q{500 + i}",
                element_label=f"element {i}",
                element_types=frozenset({f"{WD}Q{700 + i % 4}"}),
                qualifiers=tuple(quals),
            )
        )
    return out


def _rdflib_encode(stmts, path):
    """Independent encoder: Wikidata statement-node shape built with rdflib."""
    g = rdflib.Graph()
    pids = {QualifierKind.WEARS: "P3828", QualifierKind.SYMBOLIZES: "P4878"}
    for n, s in enumerate(stmts):
        node = rdflib.URIRef(f"{WD}statement/s{n}")
        g.add((rdflib.URIRef(s.artwork), rdflib.URIRef(P + "P180"), node))
        g.add((node, rdflib.URIRef(PS + "P180"), rdflib.URIRef(s.element)))
        g.add((rdflib.URIRef(s.artwork), rdflib.RDFS.label, rdflib.Literal(s.artwork_label)))
        g.add((rdflib.URIRef(s.element), rdflib.RDFS.label, rdflib.Literal(s.element_label)))
        for t in s.element_types:
            g.add((rdflib.URIRef(s.element), rdflib.URIRef(WDT + "P31"), rdflib.URIRef(t)))
        for kind, value in s.qualifiers:
            g.add((node, rdflib.URIRef(PQ + pids[kind]), rdflib.URIRef(value)))
    g.serialize(destination=str(path), format="nt", encoding="utf-8")


def _plain_tsv(stmts, path):
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(HEADER)
        for s in stmts:
            base = f"{s.artwork}\t{s.artwork_label}\t{s.element}\t{s.element_label}\t{'|'.join(sorted(s.element_types))}"
            for kind, value in s.qualifiers or [(None, "")]:
                fh.write(f"{base}\t{kind.value if kind else ''}\t{value}\n")


def test_tsv_and_ntriples_encodings_agree(tmp_path):
    stmts = fifty_statements()
    _plain_tsv(stmts, tmp_path / "d.tsv")
    _rdflib_encode(stmts, tmp_path / "d.nt")
    from_tsv = set(read_depicts_dump(tmp_path / "d.tsv", "tsv"))
    from_nt = set(read_depicts_dump(tmp_path / "d.nt", "nt"))
    assert from_tsv == from_nt == set(stmts)


def test_nt_writer_round_trip(tmp_path):
    stmts = fifty_statements()
    write_depicts_nt(stmts, tmp_path / "d.nt")
    assert set(read_depicts_dump(tmp_path / "d.nt", "nt")) == set(stmts)


label = st.text(st.characters(blacklist_categories=("Cc", "Cs"), blacklist_characters="\t\n\r"), max_size=8)
qual = st.tuples(st.sampled_from(list(QualifierKind)), st.sampled_from([f"{WD}Q1", f"{WD}Q2", "plain text"]))


@st.composite
def statement_sets(draw):
    keys = draw(st.lists(st.tuples(st.integers(1, 6), st.integers(1, 6)), unique=True, max_size=12))
    return [
        DepictsStatement(
            artwork=f"{WD}Q{a}",
            artwork_label=draw(label),
            element=f"{WD}Q{100 + e}",
            element_label=draw(label),
            element_types=frozenset(draw(st.sets(st.sampled_from([f"{WD}Q5", f"{WD}Q729", f"{WD}Q506"]), max_size=2))),
            qualifiers=tuple(draw(st.lists(qual, max_size=3))),
        )
        for a, e in keys
    ]


@given(statement_sets())
def test_tsv_round_trip(tmp_path_factory, stmts):
    path = tmp_path_factory.mktemp("rt") / "d.tsv"
    write_depicts_tsv(stmts, path)
    assert list(read_depicts_dump(path)) == stmts
