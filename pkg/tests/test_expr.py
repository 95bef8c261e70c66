import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from stronga.errors import DegenerateRingError
from stronga.expr import (
    DSum,
    Dup,
    ElaborationError,
    ExprSyntaxError,
    Free,
    IdealLit,
    Idealize,
    IdealMod,
    IntLit,
    PairLit,
    PolyQuot,
    Product,
    Quot,
    QuotMod,
    VecLit,
    Zmod,
    build_element,
    build_ring,
    parse_element,
    parse_ring_expr,
    pretty,
)
from stronga.ideals import all_ideals
from stronga.ring import zmod


def test_parse_examples():
    assert parse_ring_expr("dup(Z/4, ideal(2))") == Dup(Zmod(4), IdealLit((IntLit(2),)))
    assert parse_ring_expr("idealize(Z/2, free(1))") == Idealize(Zmod(2), Free(1))


def test_missing_comma_is_positioned_syntax_error():
    with pytest.raises(ExprSyntaxError) as err:
        parse_ring_expr("product(Z/2 Z/2)")
    assert "line 1, column 13" in str(err.value)


def test_syntax_error_line_and_column_on_later_line():
    with pytest.raises(ExprSyntaxError) as err:
        parse_ring_expr("product(Z/2,\n   quot(Z/4 ideal(2)))")
    assert "line 2" in str(err.value)


@pytest.mark.parametrize("text", ["", "Z/", "Z/4)", "prod(Z/2, Z/2)", "quot(Z/4, 2)", "polyquot(Z/2, 1)", "ideal(2)"])
def test_malformed_expressions(text):
    with pytest.raises(ExprSyntaxError):
        parse_ring_expr(text)


def test_whitespace_insensitive():
    a = parse_ring_expr("  product( Z/2 ,Z/3 ) ")
    assert pretty(a) == "product(Z/2, Z/3)"


def test_elaboration_errors_point_at_literal():
    with pytest.raises(ElaborationError) as err:
        build_ring("quot(product(Z/2, Z/2), ideal(1))")
    assert "column 31" in str(err.value)
    # integer literals are residues: 9 is 1 in Z/4
    assert build_ring("quot(Z/4, ideal(9))").descriptor == "quot(Z/4, ideal(1))"
    with pytest.raises(ElaborationError):
        build_ring("polyquot(Z/4, [1, 2])")
    with pytest.raises(ElaborationError):
        build_ring("idealize(Z/4, free(0))")
    with pytest.raises(DegenerateRingError):
        build_ring("product(Z/1, Z/2)")


def test_descriptor_is_canonical_text():
    for text in [
        "Z/12",
        "product(Z/2, Z/3)",
        "quot(Z/12, ideal(4))",
        "polyquot(Z/2, [1, 1, 1])",
        "idealize(Z/4, quotmod(ideal(2)))",
        "idealize(Z/6, dsum(quotmod(ideal(2)), quotmod(ideal(3))))",
        "dup(product(Z/2, Z/2), ideal((1, 0)))",
        "idealize(Z/4, idealmod(ideal(2)))",
        "dup(polyquot(Z/2, [0, 0, 1]), ideal([0, 1]))",
    ]:
        R = build_ring(text)
        assert R.descriptor == text
        assert build_ring(R.descriptor).size == R.size


def test_corpus_descriptors_rebuild(corpus64):
    for R in corpus64:
        S = build_ring(R.descriptor)
        assert (S.add_table == R.add_table).all() and (S.mul_table == R.mul_table).all()


def test_elements():
    R = build_ring("idealize(product(Z/2, Z/3), free(2))")
    x = build_element(R, "((1, 2), [(0, 1), (1, 0)])")
    assert R.format(x) == "((1, 2), [(0, 1), (1, 0)])"
    assert parse_element("[1, 0, 1]") == VecLit((IntLit(1), IntLit(0), IntLit(1)))
    with pytest.raises(ElaborationError):
        build_element(zmod(4), "(1, 2)")


# -- round trips ---------------------------------------------------------------------

ints = st.integers(min_value=0, max_value=40)
elems = st.recursive(
    ints.map(IntLit),
    lambda inner: st.one_of(
        st.tuples(inner, inner).map(lambda t: PairLit(*t)),
        st.lists(ints.map(IntLit), min_size=1, max_size=3).map(lambda xs: VecLit(tuple(xs))),
    ),
    max_leaves=4,
)
ideal_lits = st.lists(elems, min_size=1, max_size=3).map(lambda xs: IdealLit(tuple(xs)))
modules = st.recursive(
    st.one_of(
        st.integers(min_value=1, max_value=3).map(Free),
        ideal_lits.map(QuotMod),
        ideal_lits.map(IdealMod),
    ),
    lambda inner: st.lists(inner, min_size=1, max_size=3).map(lambda ms: DSum(tuple(ms))),
    max_leaves=4,
)
coeffs = st.lists(ints.map(IntLit), min_size=1, max_size=4).map(lambda xs: VecLit(tuple(xs)))
rings = st.recursive(
    st.integers(min_value=1, max_value=50).map(Zmod),
    lambda inner: st.one_of(
        st.tuples(inner, inner).map(lambda t: Product(*t)),
        st.tuples(inner, ideal_lits).map(lambda t: Quot(*t)),
        st.tuples(inner, ideal_lits).map(lambda t: Dup(*t)),
        st.tuples(inner, coeffs).map(lambda t: PolyQuot(*t)),
        st.tuples(inner, modules).map(lambda t: Idealize(*t)),
    ),
    max_leaves=6,
)


@settings(max_examples=200, deadline=None)
@given(rings)
def test_parse_of_pretty_is_identity(tree):
    assert parse_ring_expr(pretty(tree)) == tree


@settings(max_examples=200, deadline=None)
@given(rings, st.randoms())
def test_pretty_of_parse_ignores_whitespace(tree, rnd):
    text = pretty(tree)
    noisy = "".join(ch + (" " * rnd.randint(0, 2) if ch in "(),[" else "") for ch in text)
    assert pretty(parse_ring_expr(noisy)) == text


@settings(max_examples=100, deadline=None)
@given(elems)
def test_element_round_trip(lit):
    assert parse_element(pretty(lit)) == lit


def test_ideal_literals_generate_expected_members():
    R = build_ring("product(Z/4, Z/2)")
    S = build_ring("quot(product(Z/4, Z/2), ideal((2, 0)))")
    assert S.size == 4
    assert len(all_ideals(R)) >= 5
