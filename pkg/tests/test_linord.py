import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from vtstruct.linord import (
    Fin,
    InconclusiveSample,
    IntCode,
    One,
    Prod,
    Q,
    RationalCode,
    UnsupportedTerm,
    Z,
    ZElement,
    ZPow,
    classify_vt,
    code_compare_with_symbolic,
    condensation_steps,
    condense,
    density_report,
    discreteness_report,
    is_condensation_fixed_point,
    order_code,
    parse_order,
    sample_zelement,
    windowed_condensation,
    z_compare,
    z_power_code,
)
from vtstruct.ordinals import OMEGA, ONE, ZERO, Ordinal

W = OMEGA


def el(**kw):
    # el(p0=1, p1=-2) -> {0: 1, 1: -2}
    return ZElement.of({int(k[1:]): v for k, v in kw.items()})


def test_z_compare_examples():
    assert z_compare(1, el(p0=-1), el(p0=2)) == -1
    assert z_compare(2, el(p0=100), el(p1=1)) == -1  # higher coordinate wins
    assert z_compare(2, el(p0=5, p1=-1), ZElement()) == -1
    assert z_compare(2, el(p0=3, p1=1), el(p0=3, p1=1)) == 0
    # Z^w: position 5 dominates any finite mix below it
    a = ZElement.of({Ordinal.of(5): 1})
    b = ZElement.of({Ordinal.of(k): 9 for k in range(5)})
    assert z_compare(W, b, a) == -1
    with pytest.raises(ValueError):
        z_compare(1, el(p1=1), ZElement())
    with pytest.raises(ValueError):
        ZElement(((ZERO, 0),))


elems = st.dictionaries(st.integers(0, 3), st.integers(-3, 3).filter(bool), max_size=4).map(
    lambda d: ZElement.of(d))


@given(elems, elems, elems)
def test_z_compare_is_a_linear_order(s, t, u):
    a = 4
    assert z_compare(a, s, t) == -z_compare(a, t, s)
    assert (z_compare(a, s, t) == 0) == (s == t)
    if z_compare(a, s, t) < 0 and z_compare(a, t, u) < 0:
        assert z_compare(a, s, u) < 0


@given(elems, elems)
def test_negation_reverses(s, t):
    assert z_compare(4, s.negate(), t.negate()) == z_compare(4, t, s)


def test_parse_order():
    assert parse_order("Z") == Z
    assert parse_order("Prod(ZPow(w+1), Q)") == Prod(ZPow(Ordinal.parse("w+1")), Q())
    assert parse_order("Fin(3)") == Fin(3)
    with pytest.raises(UnsupportedTerm):
        parse_order("R")


def test_condense_examples():
    assert condense(Z) == One()
    assert condense(ZPow(3)) == ZPow(2)
    assert condense(Prod(Z, Q())) == Q()
    assert condense(Prod(ZPow(2), Q())) == Prod(Z, Q())
    assert condense(Q()) == Q()
    assert condense(ZPow(W)) == ZPow(W)
    assert condense(ZPow(Ordinal.parse("w+2"))) == ZPow(Ordinal.parse("w+2"))
    assert condense(Prod(Z, Z)) == Z


def test_condensation_steps():
    assert condensation_steps(ZPow(5)) == 5
    assert condensation_steps(Prod(ZPow(2), Q())) == 2
    assert condensation_steps(Q()) == 0
    assert is_condensation_fixed_point(One())
    with pytest.raises(UnsupportedTerm):
        condensation_steps(ZPow(W))


def test_classify():
    c = classify_vt(Prod(Prod(Z, ZPow(2)), Q()))
    assert c.vertex_transitive and c.alpha == Ordinal.of(3) and c.tail == "Q"
    c = classify_vt(ZPow(W))
    assert (c.alpha, c.tail) == (W, "One")
    assert classify_vt(Prod(Fin(2), Z)) == classify_vt(Z)
    assert not classify_vt(Fin(3)).vertex_transitive
    assert not classify_vt(Prod(Z, Fin(2))).vertex_transitive
    assert not classify_vt(Prod(Fin(2), Q())).vertex_transitive
    assert "not vertex-transitive" in str(classify_vt(Fin(2)))


def test_unsupported_condensation():
    with pytest.raises(UnsupportedTerm):
        condense(Prod(Fin(2), Q()))


def test_int_code_discrete():
    r = discreteness_report(z_power_code(1), sample_size=40)
    assert r["discrete"], r["failures"]


def test_rationals_dense():
    r = density_report(RationalCode(), sample_size=30)
    assert r["dense"], r


def test_windowed_condensation_of_z2():
    code = z_power_code(2)
    # two Z-blocks, three consecutive points each
    sample = [code.encode(ZElement.of({0: a, 1: b})) for b in (0, 3) for a in (-1, 0, 1)]
    classes = windowed_condensation(code, sample, window=400)
    assert len(classes) == 2
    assert all(len(c) == 3 for c in classes)


def test_limit_code_halves():
    code = z_power_code(W)
    right = [code.encode(ZElement.of({k: 1})) for k in range(4)]
    left = [code.encode(ZElement.of({k: -1})) for k in range(4)]
    for a, b in zip(right, right[1:]):
        assert code.less(a, b)
    for a, b in zip(left, left[1:]):
        assert code.less(b, a)
    assert code.less(left[0], 0) and code.less(0, right[0])


@pytest.mark.parametrize("alpha", ["0", "1", "2", "w", "w+1", "w*2", "w^2"])
def test_encode_decode_roundtrip(alpha):
    code = z_power_code(alpha)
    rng = random.Random(7)
    for _ in range(60):
        s = sample_zelement(alpha, rng)
        n = code.encode(s)
        assert n is not None and code.contains(n)
        assert code.decode(n) == s


@pytest.mark.parametrize("alpha", ["0", "1", "3", "w", "w+2", "w*2+1", "w^2"])
def test_codes_realise_their_order(alpha):
    assert code_compare_with_symbolic(alpha, z_power_code(alpha), sample_size=80, seed=1)


def test_code_compare_rejects_wrong_rank():
    assert not code_compare_with_symbolic(2, z_power_code(1), sample_size=50)
    assert not code_compare_with_symbolic(1, z_power_code(2), sample_size=50)
    assert not code_compare_with_symbolic(W, z_power_code("w+1"), sample_size=80)


class SwappedInt(IntCode):
    """Z with the order of 3 and 4 exchanged."""

    def less(self, n, m):
        swap = {_u(3): _u(4), _u(4): _u(3)}
        return super().less(swap.get(n, n), swap.get(m, m))


def _u(v):
    return 2 * v if v >= 0 else -2 * v - 1


def test_mutated_comparator_detected():
    assert code_compare_with_symbolic(1, IntCode(), sample_size=50)
    assert not code_compare_with_symbolic(1, SwappedInt(), sample_size=50)


class Sparse(IntCode):
    def contains(self, n):
        return n == 10 ** 9


def test_inconclusive_sample():
    with pytest.raises(InconclusiveSample):
        code_compare_with_symbolic(1, Sparse(), sample_size=20, scan_limit=1000)


def test_order_code_for_terms():
    assert order_code(Q()).describe()["kind"] == "rational"
    d = order_code(Prod(Z, Q())).describe()
    assert d == {"kind": "product", "parameters": {
        "inner": {"kind": "int", "parameters": {"enumeration": "zigzag"}},
        "outer": {"kind": "rational", "parameters": {"enumeration": "dyadic"}}}}
    assert z_power_code(W).describe() == {"kind": "limit", "parameters": {"lambda": "w"}}
    with pytest.raises(UnsupportedTerm):
        order_code(Fin(3))
