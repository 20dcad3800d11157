import pytest
from hypothesis import given

from conftest import terms
from lambdamu.syntax import parse_term, parse_type
from lambdamu.terms import arrow, free_vars
from lambdamu.typecheck import (
    TypeCheckError,
    check_subject_reduction,
    connective_count,
    derivation_lines,
    infer,
)


def test_connective_count():
    assert connective_count(parse_type("bot")) == 0
    assert connective_count(parse_type("bot->bot")) == 1
    assert connective_count(parse_type("(bot->bot)->bot")) == 2
    # the negation encoding costs exactly one connective
    for t in ("bot", "bot->bot", "(bot->bot)->bot"):
        a = parse_type(t)
        assert connective_count(arrow(a, "bot")) == 1 + connective_count(a)


def test_infer_identity():
    assert infer({}, parse_term("\\x:bot. x")) == parse_type("bot->bot")


def test_infer_double_negation_elimination():
    # hand derivation: x applied to y under x:(bot->bot)->bot, y:bot->bot
    t = parse_term("\\x:((bot->bot)->bot). mu y:bot. (x y)")
    assert infer({}, t) == parse_type("((bot->bot)->bot)->bot")


def test_infer_mu_application():
    t = parse_term("(mu x:(bot->bot). (x (\\w:bot. w))) v")
    assert infer({"v": "bot"}, t) == "bot"


def test_error_kinds():
    cases = [
        ("\\x. x", {}, "unannotated-binder"),
        ("x", {}, "unbound-variable"),
        ("x y", {"x": parse_type("bot"), "y": parse_type("bot")}, "not-an-arrow"),
        ("x y", {"x": parse_type("(bot->bot)->bot"), "y": parse_type("bot")}, "argument-mismatch"),
        ("mu x:bot. x", {}, "mu-body-not-bot"),
    ]
    for text, ctx, kind in cases:
        with pytest.raises(TypeCheckError) as err:
            infer(ctx, parse_term(text))
        assert err.value.kind == kind, text


def test_shadowing():
    t = parse_term("\\x:bot. \\x:(bot->bot). x")
    assert infer({}, t) == parse_type("bot->(bot->bot)->bot->bot")


@given(terms)
def test_weakening(t):
    try:
        ty = infer({"v": "bot"}, t)
    except TypeCheckError:
        return
    if "fresh_w" in free_vars(t):
        return
    wider = {"v": "bot", "fresh_w": parse_type("bot->bot")}
    assert infer(wider, t) == ty


def test_derivation_rule_names():
    lines = derivation_lines({"v": "bot"}, parse_term("(mu x:(bot->bot). (x (\\w:bot. w))) v"))
    rules = [line.strip().split()[0] for line in lines]
    assert rules == ["->e", "bot_c", "->e", "ax", "->i", "ax", "ax"]
    assert lines[0].startswith("->e  v:bot |- ")


def test_subject_reduction_normal_form():
    report = check_subject_reduction({}, parse_term("\\x:bot. x"), 10)
    assert report.edges_checked == 0 and report.ok and report.complete


def test_subject_reduction_beta():
    report = check_subject_reduction({"y": "bot"}, parse_term("(\\x:bot. x) y"), 10)
    assert report.edges_checked == 1 and report.ok
    assert report.root_type == "bot"


def test_subject_reduction_mu_graph():
    t = parse_term("(mu x:(bot->bot). (x (\\w:bot. w))) v")
    report = check_subject_reduction({"v": "bot"}, t, 100)
    assert report.ok and report.complete
    assert report.root_type == "bot"
    assert report.edges_checked >= 3


def test_subject_reduction_requires_typed_root():
    with pytest.raises(TypeCheckError):
        check_subject_reduction({}, parse_term("\\x. x"), 5)
