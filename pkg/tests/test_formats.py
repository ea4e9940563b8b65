from __future__ import annotations

import networkx as nx
import pytest

from oddcolour.catalog import catalog, catalog_entry
from oddcolour.embedding import trace_faces
from oddcolour.errors import EmbeddingError, ParseError
from oddcolour.formats import (
    GRAPH6_HEADER,
    GraphDocument,
    detect_format,
    dump_edge_list,
    dump_embedding,
    parse_document,
    parse_edge_list,
    parse_embedding_doc,
    parse_graph6,
    to_graph6,
)
from oddcolour.generate import gen_random_planar
from oddcolour.graph import build_graph
from oracles import decode_graph6_bits, load_corpus

CORPUS = load_corpus()


def test_single_vertex():
    g = parse_graph6("@")
    assert g.order == 1 and g.size == 0


@pytest.mark.parametrize("s", CORPUS)
def test_decoders_agree(s):
    g = parse_graph6(s)
    n, edges = decode_graph6_bits(s)
    assert g.order == n and set(g.edges()) == edges
    h = nx.from_graph6_bytes(s.encode())
    assert {tuple(sorted(e)) for e in h.edges()} == edges


@pytest.mark.parametrize("s", CORPUS)
def test_round_trip(s):
    assert to_graph6(parse_graph6(s)) == s


def test_matches_networkx_on_large_order():
    # orders of 63 and above use the four-byte header
    g, _ = gen_random_planar(70, 2)
    s = to_graph6(g)
    h = nx.from_graph6_bytes(s.encode())
    assert h.number_of_nodes() == 70
    assert {tuple(sorted(e)) for e in h.edges()} == set(g.edges())
    assert nx.to_graph6_bytes(h, header=False).decode().strip() == s


def test_header_and_newline_accepted():
    assert parse_graph6(GRAPH6_HEADER + "Bw\n") == parse_graph6("Bw")


def test_compacts_before_encoding():
    g = build_graph(4, [(0, 1), (1, 2), (2, 3)]).remove_vertex(0)
    assert to_graph6(g) == to_graph6(build_graph(3, [(0, 1), (1, 2)]))


@pytest.mark.parametrize(
    "s,offset",
    [
        ("D?{x", 3),       # n=5 needs two data bytes; the third is extra
        ("C~~", 2),        # n=4 needs one data byte
        ("E?", 2),         # n=6 needs three data bytes
        ("B\x20", 1),      # below the printable range
        ("Bx", 1),         # padding bits set
        ("~?", 2),         # truncated 8-byte header
        ("~@", 2),         # truncated 4-byte header
        ("", 0),
    ],
)
def test_error_offsets(s, offset):
    with pytest.raises(ParseError) as exc:
        parse_graph6(s)
    assert exc.value.offset == offset


def test_error_offset_counts_header():
    with pytest.raises(ParseError) as exc:
        parse_graph6(GRAPH6_HEADER + "C~~")
    assert exc.value.offset == len(GRAPH6_HEADER) + 2


def test_embedding_doc_octahedron():
    doc = catalog("octahedron")
    g, rot, name = parse_embedding_doc(doc.payload)
    assert name == "octahedron"
    assert [f.size for f in trace_faces(g, rot)] == [3] * 8


def test_embedding_doc_c5_round_trip():
    g, rot = catalog_entry("C5")
    text = dump_embedding(g, rot, "C5")
    h, rot2, name = parse_embedding_doc(text)
    assert h == g and name == "C5"
    assert [f.size for f in trace_faces(h, rot2)] == [5, 5]
    assert dump_embedding(h, rot2, name) == text


def test_embedding_doc_asymmetric_names_vertex():
    text = "embedding v1\norder 3\n0: 1 2\n1: 2 0\n2: 1\n"
    with pytest.raises(EmbeddingError) as exc:
        parse_embedding_doc(text)
    assert exc.value.vertex in (0, 2)


def test_embedding_doc_out_of_range_names_vertex():
    with pytest.raises(EmbeddingError) as exc:
        parse_embedding_doc("embedding v1\norder 2\n0: 1\n1: 0 7\n")
    assert exc.value.vertex == 1


def test_embedding_doc_duplicate_line():
    with pytest.raises(EmbeddingError) as exc:
        parse_embedding_doc("embedding v1\norder 2\n0: 1\n0: 1\n1: 0\n")
    assert exc.value.vertex == 0


def test_embedding_doc_non_planar_rotation():
    g, _ = catalog_entry("K5")
    lines = "".join(f"{v}: {' '.join(str(w) for w in sorted(g.neighbours(v)))}\n" for v in range(5))
    text = "embedding v1\norder 5\n" + lines
    with pytest.raises(EmbeddingError):
        parse_embedding_doc(text)
    h, _, _ = parse_embedding_doc(text, require_planar=False)
    assert h.size == 10


def test_embedding_doc_bad_line_reports_line_number():
    with pytest.raises(ParseError) as exc:
        parse_embedding_doc("embedding v1\norder 2\n0 1\n")
    assert exc.value.offset == 3


def test_edge_list_round_trip():
    g, _ = gen_random_planar(12, 5)
    text = dump_edge_list(g, "t")
    h, name = parse_edge_list(text)
    assert h == g and name == "t" and dump_edge_list(h, name) == text


def test_edge_list_comments_and_errors():
    g, name = parse_edge_list("# a path\nedge-list v1\norder 3\n0 1\n1 2\n")
    assert name is None and g.size == 2
    with pytest.raises(ParseError):
        parse_edge_list("edge-list v1\norder 3\n0 1 2\n")
    with pytest.raises(ParseError):
        parse_edge_list("edge-list v1\norder 2\n0 0\n")
    with pytest.raises(ParseError):
        parse_edge_list("edge-list v1\n0 1\n")


def test_detect_and_parse_document():
    assert detect_format("Bw") == "graph6"
    assert detect_format("edge-list v1\norder 1\n") == "edge-list"
    assert detect_format("\nembedding v1\norder 1\n0:\n") == "embedding-doc"
    doc = parse_document("edge-list v1\nname P2\norder 2\n0 1\n")
    assert doc.format == "edge-list" and doc.name == "P2"
    assert doc.graph().size == 1 and doc.embedding() is None


def test_document_load_embedding():
    doc = catalog("K4")
    assert isinstance(doc, GraphDocument) and doc.format == "embedding-doc"
    g, rot = doc.load()
    assert g.size == 6 and rot is not None
