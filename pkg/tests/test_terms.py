import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from mvmlab import (CANCELLATIVITY, Equation, QuasiEquation, catalog, cn_delta,
                    evaluate, ln_plus, parse, satisfies, satisfies_all,
                    satisfies_quasi, to_text)
from mvmlab.errors import MissingAssignment, TermSyntaxError
from mvmlab.terms import (BinOp, Const, Var, const, odot, oplus, power, scalar,
                          var, variables)


# ---------------------------------------------------------------------------
# construction and interning

def test_terms_are_interned():
    assert var(0) is var(0)
    assert const("zero") is const("zero")
    assert oplus(var(0), var(1)) is oplus(var(0), var(1))
    assert oplus(var(0), var(1)) is not oplus(var(1), var(0))


def test_scalar_and_power():
    x = var(0)
    assert scalar(0, x) is const("zero")
    assert scalar(1, x) is x
    assert to_text(scalar(3, x)) == "((x + x) + x)"
    assert power(x, 0) is const("one")
    assert to_text(power(x, 2)) == "(x * x)"


# ---------------------------------------------------------------------------
# parsing

def test_parse_terms():
    assert parse("x") is var(0)
    assert parse("y") is var(1)
    assert parse("x5") is var(5)
    assert parse("0") is const("zero")
    assert parse("1") is const("one")
    assert parse("x + y") is oplus(var(0), var(1))
    assert parse("3x") is scalar(3, var(0))
    assert parse("x^2") is power(var(0), 2)
    assert parse("2(x + y)") is scalar(2, oplus(var(0), var(1)))


def test_parse_precedence():
    # v < ^^ < + < * < scalar < power
    assert parse("x v y ^^ z") is parse("x v (y ^^ z)")
    assert parse("x ^^ y + z") is parse("x ^^ (y + z)")
    assert parse("x + y * z") is parse("x + (y * z)")
    assert parse("2x * y") is parse("(2x) * y")
    assert parse("2x^3") is parse("2(x^3)")
    # same-level operators associate to the left
    assert parse("x + y + z") is oplus(oplus(var(0), var(1)), var(2))


def test_parse_equation():
    e = parse("x + x ≈ x")
    assert isinstance(e, Equation)
    assert e.lhs is oplus(var(0), var(0)) and e.rhs is var(0)
    assert parse("4x ≈ 3x") == Equation(scalar(4, var(0)), scalar(3, var(0)))
    assert parse("x = y").lhs is var(0)  # plain '=' works too


def test_parse_quasi_equation():
    q = parse("x + z ≈ y + z & x * z ≈ y * z => x ≈ y")
    assert isinstance(q, QuasiEquation)
    assert len(q.premises) == 2
    assert q.conclusion.lhs is var(0) and q.conclusion.rhs is var(1)


def test_parse_rejects_garbage():
    for text in ["x ≈", "≈ x", "x +", "2", "x y", "x ≈ y ≈ z", "(x", "w"]:
        with pytest.raises(TermSyntaxError):
            parse(text)


def test_syntax_error_reports_position():
    with pytest.raises(TermSyntaxError) as exc:
        parse("x + $")
    assert exc.value.position == 4


_term_strategy = st.recursive(
    st.sampled_from([var(0), var(1), var(2), const("zero"), const("one")]),
    lambda sub: st.builds(
        lambda op, l, r: {"+": oplus, "*": odot}.get(op, oplus)(l, r),
        st.sampled_from(["+", "*"]), sub, sub)
    | st.builds(lambda l, r: parse(f"({to_text(l)}) v ({to_text(r)})"),
                sub, sub),
    max_leaves=12)


@settings(max_examples=150, deadline=None)
@given(_term_strategy)
def test_print_parse_round_trip(t):
    assert parse(to_text(t)) is t


# ---------------------------------------------------------------------------
# evaluation

def test_evaluate_basics():
    A = ln_plus(2)
    assert evaluate(parse("x + y"), A, {"x": 1, "y": 1}) == 2
    assert evaluate(parse("x * y"), A, {"x": 1, "y": 1}) == 0
    assert evaluate(parse("x v 0"), A, {"x": 1}) == 1
    assert evaluate(parse("1 ^^ x"), A, {0: 1}) == 1
    assert evaluate(parse("0"), A) == 0


def test_evaluate_missing_assignment():
    with pytest.raises(MissingAssignment):
        evaluate(parse("x + y"), ln_plus(2), {"x": 1})
    with pytest.raises(MissingAssignment):
        evaluate(parse("x"), ln_plus(2), {"q": 1})


def test_variables_and_dag_sharing():
    assert variables(parse("x + (y * x3)")) == {0, 1, 3}
    # deep shared ladder: linear-time only if the DAG is walked as a DAG
    t = var(0)
    for _ in range(200):
        t = oplus(odot(t, t), var(1))
    assert variables(t) == {0, 1}


# ---------------------------------------------------------------------------
# satisfaction

def test_satisfies_reports_least_witness():
    res = satisfies(cn_delta(3), parse("x + x ≈ x"))
    assert not res
    assert res.witness == (1,)  # epsilon + epsilon = 2 epsilon
    assert res.witness_named() == {"x": 1}


def test_satisfies_passes():
    res = satisfies(ln_plus(3), parse("x + y ≈ y + x"))
    assert res and res.witness is None


def test_satisfies_all_matches_individual_checks():
    eqs = [parse("x + x ≈ x"), parse("x v y ≈ y v x"), parse("x * x ≈ x")]
    for A in (ln_plus(2), cn_delta(3), catalog("L2")):
        combined = satisfies_all(A, eqs)
        singles = [satisfies(A, e) for e in eqs]
        assert bool(combined) == all(singles)
        if not combined:
            first_bad = next(i for i, r in enumerate(singles) if not r)
            assert combined.equation is eqs[first_bad]
            assert combined.witness == singles[first_bad].witness


def test_cancellativity_quasi_equation():
    assert satisfies_quasi(ln_plus(4), CANCELLATIVITY)
    res = satisfies_quasi(cn_delta(2), CANCELLATIVITY)
    assert not res
    # epsilon + epsilon = epsilon and 0 * epsilon = epsilon * epsilon = 0
    assert res.witness == (0, 1, 1)


@settings(max_examples=60, deadline=None)
@given(st.sampled_from(["L1+", "L2+", "L3+", "C2d", "C3n", "L2"]),
       _term_strategy, _term_strategy)
def test_satisfies_agrees_with_exhaustive_evaluation(name, lhs, rhs):
    import itertools
    A = catalog(name)
    e = Equation(lhs, rhs)
    nv = max(variables(lhs) | variables(rhs), default=-1) + 1
    holds = all(
        evaluate(lhs, A, dict(enumerate(env))) ==
        evaluate(rhs, A, dict(enumerate(env)))
        for env in itertools.product(range(A.size), repeat=nv))
    assert bool(satisfies(A, e)) == holds
