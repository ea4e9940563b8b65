"""Property-based checks over random small graphs and plane triangulations."""

from __future__ import annotations

from hypothesis import given, settings
from hypothesis import strategies as st

from oddcolour.colouring import Colouring, is_odd_colouring, solve_odd_k
from oddcolour.discharging import TOTAL_QUARTERS, discharge
from oddcolour.embedding import trace_faces
from oddcolour.formats import parse_graph6, to_graph6
from oddcolour.generate import gen_near_triangulation, gen_random_planar
from oddcolour.graph import Graph, build_graph
from oddcolour.pipeline import PALETTE, ReductionTrace, odd_colour_planar_8
from oracles import brute_force_is_odd, brute_force_solvable


@st.composite
def graphs(draw, max_n: int = 7) -> Graph:
    n = draw(st.integers(1, max_n))
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True) if pairs else st.just([]))
    return build_graph(n, chosen)


planar_seeds = st.tuples(st.integers(3, 45), st.integers(0, 10_000))


@given(graphs(max_n=12))
def test_graph6_round_trip(g):
    assert parse_graph6(to_graph6(g)) == g


@settings(max_examples=60, deadline=None)
@given(graphs(max_n=6), st.integers(1, 5))
def test_solver_agrees_with_enumeration(g, k):
    c = solve_odd_k(g, k)
    assert (c is not None) == brute_force_solvable(g, k)
    if c is not None:
        assert brute_force_is_odd(g, dict(c.colours))


@given(graphs(max_n=8), st.data())
def test_odd_check_agrees_with_oracle(g, data):
    values = data.draw(st.lists(st.integers(0, 3), min_size=g.order, max_size=g.order))
    c = Colouring.from_list(4, values)
    assert is_odd_colouring(g, c) == brute_force_is_odd(g, dict(c.colours))


@settings(max_examples=40, deadline=None)
@given(planar_seeds)
def test_planar_graphs_get_eight_colours(params):
    n, seed = params
    g, _ = gen_random_planar(n, seed)
    trace = ReductionTrace()
    c = odd_colour_planar_8(g, trace)
    assert len(c.used()) <= PALETTE and brute_force_is_odd(g, dict(c.colours))
    assert trace.unwind(trace.reduce(g)) == g


@settings(max_examples=60, deadline=None)
@given(planar_seeds, st.integers(0, 15))
def test_charge_is_conserved(params, removals):
    n, seed = params
    g, rot = gen_near_triangulation(n, seed, removals)
    res = discharge(g, rot)
    assert res.before.total() == res.after.total() == TOTAL_QUARTERS
    assert res.claim3 == []
    assert sum(f.size for f in trace_faces(g, rot)) == 2 * g.size
