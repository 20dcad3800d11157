import pytest
from hypothesis import given, settings

from conftest import terms
from lambdamu.analysis import (
    NotSN,
    StronglyNormalizing,
    Unknown,
    explore_sn,
    graph_to_dot,
    longest_reduction,
    reduction_graph,
)
from lambdamu.reduction import one_step_reducts
from lambdamu.syntax import parse_term
from lambdamu.terms import canonical, term_size, var
from oracles import brute_eta, brute_longest_path

OMEGA = parse_term("(\\x. x x) (\\x. x x)")


def test_graph_single_node():
    g = reduction_graph(var("y"), 10)
    assert len(g.nodes) == 1 and not g.edges and g.complete


def test_graph_three_nodes():
    g = reduction_graph(parse_term("(\\x. x) ((\\x. x) y)"), 100)
    assert len(g.nodes) == 3 and g.complete
    assert len(g.edges) == 2


def test_graph_omega_self_loop():
    g = reduction_graph(OMEGA, 10)
    assert len(g.nodes) == 1 and g.complete
    (edge,) = g.edges
    assert edge[0] == edge[1]


def test_explore_normal_form():
    assert explore_sn(parse_term("\\x. x"), 10) == StronglyNormalizing(0, 1)


def test_explore_omega_cycle_within_fuel_10():
    st = explore_sn(OMEGA, 10)
    assert isinstance(st, NotSN) and len(st.cycle) == 1


def test_explore_two_step():
    st = explore_sn(parse_term("(\\x:bot. x) ((\\x:bot. x) y)"), 100)
    assert st == StronglyNormalizing(2, 3)


def test_eta_examples():
    assert longest_reduction(var("y"), 10) == 0
    assert longest_reduction(parse_term("(\\x. x) y"), 10) == 1
    t = parse_term("(mu x:(bot->bot). (x (\\w:bot. w))) v")
    assert longest_reduction(t, 1000) == 3


def test_eta_forwards_not_sn():
    assert isinstance(longest_reduction(OMEGA, 10), NotSN)


def test_unknown_on_grower():
    grower = parse_term("(\\a. a a z) (\\a. a a z)")
    st = explore_sn(grower, 100000)
    assert isinstance(st, Unknown)
    assert st.nodes_visited >= 1


def test_fuel_exhaustion_is_unknown():
    # a term with a large graph and tiny fuel
    t = parse_term("(\\x:bot. x) ((\\x:bot. x) ((\\x:bot. x) y))")
    st = explore_sn(t, 2)
    assert isinstance(st, Unknown)


def test_explore_alpha_stable():
    a = parse_term("(\\x. x x) (\\y. y y)")
    b = parse_term("(\\u. u u) (\\v. v v)")
    assert explore_sn(a, 50) == explore_sn(b, 50)


def test_verdicts_pure_in_term_and_fuel():
    t = parse_term("(\\x:bot. x) ((\\x:bot. x) ((\\x:bot. x) y))")
    assert explore_sn(t, 100) == explore_sn(t, 100)
    # a small fuel still reports Unknown even after a decided big-fuel run
    assert isinstance(explore_sn(t, 2), Unknown)


def test_cycle_witness_is_a_reduction_cycle():
    t = parse_term("x ((\\a. a a) (\\a. a a))")
    st = explore_sn(t, 100)
    assert isinstance(st, NotSN)
    cycle = st.cycle
    for cur, nxt in zip(cycle, cycle[1:] + cycle[:1]):
        assert canonical(nxt) in one_step_reducts(cur)


@given(terms)
@settings(max_examples=40, deadline=None)
def test_eta_matches_brute_force_on_small_terms(t):
    if term_size(t) > 7:
        return
    st = explore_sn(t, 10000)
    if isinstance(st, StronglyNormalizing):
        assert st.eta == brute_eta(t)


@given(terms)
@settings(max_examples=40, deadline=None)
def test_eta_step_property(t):
    st = explore_sn(t, 10000)
    if not isinstance(st, StronglyNormalizing):
        return
    reducts = one_step_reducts(t)
    if not reducts:
        assert st.eta == 0
        return
    etas = []
    for r in reducts:
        sr = explore_sn(r, 10000)
        assert isinstance(sr, StronglyNormalizing)
        etas.append(sr.eta)
    assert all(e <= st.eta - 1 for e in etas)
    assert max(etas) == st.eta - 1


def test_longest_path_matches_graph_oracle():
    t = parse_term("(mu x:(bot->bot). (x (\\w:bot. w))) v")
    g = reduction_graph(t, 1000)
    assert g.complete
    assert brute_longest_path(g) == longest_reduction(t, 1000)


def test_dot_output():
    g = reduction_graph(parse_term("(\\x:bot. x) y"), 10)
    dot = graph_to_dot(g)
    assert dot.splitlines()[0] == "digraph reduction {"
    assert '"(\\\\x0:bot. x0) y" [root=true];' in dot
    assert '"(\\\\x0:bot. x0) y" -> "y";' in dot
    assert dot.rstrip().endswith("}")
    # deterministic: node lines sorted lexicographically
    assert dot == graph_to_dot(reduction_graph(parse_term("(\\x:bot. x) y"), 10))


def test_fuel_must_be_positive():
    with pytest.raises(ValueError):
        explore_sn(var("x"), 0)
    with pytest.raises(ValueError):
        reduction_graph(var("x"), 0)
