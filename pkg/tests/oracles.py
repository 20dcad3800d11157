"""Independent oracles the implementation is checked against.

These deliberately avoid the production code paths they validate:
brute_eta does an explicit path search with no memoization, and
all_annotated_trees generates every tree and filters by the type
checker instead of enumerating goal-directed.
"""

from __future__ import annotations

from lambdamu.corpus import enumerate_types
from lambdamu.reduction import one_step_reducts
from lambdamu.terms import APP, LAM, MU, VAR
from lambdamu.typecheck import TypeCheckError, infer


def brute_eta(term) -> int:
    """Longest reduction length by explicit path search (no memo); only
    call on terms known to normalize."""
    best = 0
    for reduct in one_step_reducts(term):
        length = 1 + brute_eta(reduct)
        if length > best:
            best = length
    return best


def brute_longest_path(graph) -> int:
    """Longest path from the root of an acyclic reduction graph, by
    explicit enumeration of all paths."""
    succ: dict = {}
    for a, b in graph.edges:
        succ.setdefault(a, []).append(b)

    def longest(node) -> int:
        return max((1 + longest(n) for n in succ.get(node, ())), default=0)

    return longest(graph.root)


def all_annotated_trees(ctx_names: tuple[str, ...], size: int, lgt_bound: int):
    """Every annotated term tree with exactly `size` nodes, binder names
    canonical by depth, annotations drawn from the type universe."""
    universe = enumerate_types(lgt_bound)

    def gen(n: int, depth: int, env: tuple[str, ...]):
        if n == 1:
            for x in env:
                yield (VAR, x)
            return
        b = f"x{depth}"
        for annot in universe:
            for body in gen(n - 1, depth + 1, env + (b,)):
                yield (LAM, b, annot, body)
                yield (MU, b, annot, body)
        for n1 in range(1, n - 1):
            for fun in gen(n1, depth, env):
                for arg in gen(n - 1 - n1, depth, env):
                    yield (APP, fun, arg)

    yield from gen(size, 0, ctx_names)


def generate_and_filter(ctx: dict, goal, max_cxty: int, lgt_bound: int):
    """The generate-all-trees-then-filter-by-infer enumeration oracle."""
    out = []
    for n in range(1, max_cxty + 1):
        for tree in all_annotated_trees(tuple(sorted(ctx)), n, lgt_bound):
            try:
                if infer(ctx, tree) == goal:
                    out.append(tree)
            except TypeCheckError:
                pass
    return out
