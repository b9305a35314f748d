import pytest
from hypothesis import given
from hypothesis import strategies as st

from vtstruct.ordinals import OMEGA, ONE, ZERO, NotationError, Ordinal, as_ordinal, ord_compare


def below_w2(a, b):
    """w*a + b, built from terms so it doesn't depend on the parser."""
    terms = []
    if a:
        terms.append((ONE, a))
    if b:
        terms.append((ZERO, b))
    return Ordinal(tuple(terms))


@pytest.mark.parametrize("text", ["0", "1", "7", "w", "w*3", "w + 4", "w^2*3 + w + 4", "w^w", "w^(w+1)*2 + 1"])
def test_parse_str_roundtrip(text):
    o = Ordinal.parse(text)
    assert Ordinal.parse(str(o)) == o


def test_parse_normalises_and_rejects():
    assert Ordinal.parse("ω") == OMEGA
    assert Ordinal.parse("w*2+3") == below_w2(2, 3)
    for bad in ("", "w +", "x", "w^", "(w"):
        with pytest.raises(NotationError):
            Ordinal.parse(bad)
    with pytest.raises(NotationError):
        Ordinal(((ZERO, 1), (ONE, 1)))
    with pytest.raises(NotationError):
        Ordinal.of(-1)


small = st.tuples(st.integers(0, 5), st.integers(0, 5))


@given(small, small)
def test_comparison_matches_pair_model(p, q):
    # below w^2, w*a + b compares like (a, b) lexicographically
    a, b = below_w2(*p), below_w2(*q)
    want = (p > q) - (p < q)
    assert ord_compare(a, b) == want
    assert (a < b) == (p < q)
    assert (a == b) == (p == q)


@given(small, small)
def test_addition_matches_pair_model(p, q):
    # (w*a + b) + (w*c + d) = w*(a + c) + d when c > 0, else w*a + (b + d)
    (a, b), (c, d) = p, q
    want = below_w2(a + c, d) if c else below_w2(a, b + d)
    assert below_w2(a, b) + below_w2(c, d) == want


def test_absorption():
    assert 1 + OMEGA == OMEGA
    assert OMEGA + 1 != OMEGA
    assert Ordinal.parse("w + 3") + Ordinal.parse("w^2") == Ordinal.parse("w^2")


def test_structure():
    o = Ordinal.parse("w*2 + 3")
    assert o.is_successor() and not o.is_limit()
    assert o.predecessor() == Ordinal.parse("w*2 + 2")
    assert o.limit_part() == Ordinal.parse("w*2")
    assert Ordinal.parse("w^2").is_limit()
    assert Ordinal.of(5).finite_value() == 5
    with pytest.raises(NotationError):
        OMEGA.finite_value()
    with pytest.raises(NotationError):
        OMEGA.predecessor()


def test_drop_one():
    for text in ("1", "5", "w", "w + 1", "w^2*3 + 2"):
        o = Ordinal.parse(text)
        g = o.drop_one()
        assert 1 + g == o
    assert Ordinal.parse("w + 1").drop_one() == Ordinal.parse("w + 1")
    with pytest.raises(NotationError):
        ZERO.drop_one()


ordinals = st.recursive(
    st.integers(0, 4).map(Ordinal.of),
    lambda inner: st.lists(st.tuples(inner, st.integers(1, 3)), max_size=3).map(
        lambda ts: sum((Ordinal.omega_power(e, c) for e, c in ts), ZERO)),
    max_leaves=6,
)


@given(ordinals)
def test_code_roundtrip(o):
    assert Ordinal.from_code(o.code()) == o


def test_codes_are_injective_on_a_range():
    seen = {}
    for n in range(3000):
        o = Ordinal.from_code(n)
        if o is not None:
            assert o not in seen
            seen[o] = n
            assert o.code() == n
    assert len(seen) > 10


def test_as_ordinal():
    assert as_ordinal(3) == Ordinal.of(3)
    assert as_ordinal("w") == OMEGA
    with pytest.raises(TypeError):
        as_ordinal(1.5)
