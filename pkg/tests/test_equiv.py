import pytest
from hypothesis import given
from hypothesis import strategies as st

from vtstruct.equiv import OneSidedWord, UnresolvedTail, e0_equivalent, e0_verdict, e_z_equivalent
from vtstruct.tournament import BitWindow


def test_constant_tails():
    a = OneSidedWord.constant((1, 0, 1), 0)
    b = OneSidedWord.constant((0,), 0)
    assert e0_equivalent(a, b)
    assert e0_verdict(a, b).last_disagreement == 2
    assert not e0_equivalent(a, OneSidedWord.constant((1, 0, 1), 1))


def test_periodic_tails():
    a = OneSidedWord((), (0, 1))
    b = OneSidedWord((1,), (1, 0))  # 1 1 0 1 0 ... agrees with 0 1 0 1 from index 1
    assert e0_equivalent(a, b)
    assert not e0_equivalent(a, OneSidedWord((), (1, 0)))
    # different tail lengths that agree: 01 repeated vs 0101 repeated
    assert e0_equivalent(OneSidedWord((), (0, 1)), OneSidedWord((1, 1, 1), (1, 0, 1, 0)))


def test_window_limited():
    a, b = OneSidedWord((1, 0, 0)), OneSidedWord((0, 1, 0))
    with pytest.raises(UnresolvedTail):
        e0_verdict(a, b)
    v = e0_verdict(a, b, exact=False)
    assert v.equivalent and v.window_limited
    assert not e0_equivalent(OneSidedWord((0, 1)), OneSidedWord((0, 0)), exact=False)
    with pytest.raises(UnresolvedTail):
        OneSidedWord((1,))(3)


def test_json():
    for w in (OneSidedWord((1,), (0,)), OneSidedWord((), (0, 1, 1)), OneSidedWord((1, 1))):
        assert OneSidedWord.from_json(w.to_json()) == w
    assert OneSidedWord((1,), (0,)).to_json() == {"prefix": [1], "tail": {"kind": "constant", "bit": 0}}
    with pytest.raises(ValueError):
        OneSidedWord.from_json({"prefix": [], "tail": {"kind": "odd"}})
    with pytest.raises(ValueError):
        OneSidedWord((2,))


bits = st.lists(st.integers(0, 1), max_size=5).map(tuple)
tails = st.lists(st.integers(0, 1), min_size=1, max_size=4).map(tuple)


@given(bits, bits, tails)
def test_e0_matches_long_comparison(p, q, t):
    # same tail after different prefixes: always equivalent; check against a long finite scan
    a, b = OneSidedWord(p, t), OneSidedWord(q, t)
    far = max(len(p), len(q)) + 24
    agree_far = all(a(n) == b(n) for n in range(far - 12, far))
    assert e0_equivalent(a, b) == agree_far


@given(bits, tails, tails)
def test_e0_is_symmetric(p, s, t):
    a, b = OneSidedWord(p, s), OneSidedWord((), t)
    assert e0_equivalent(a, b) == e0_equivalent(b, a)


def test_ez_is_shift_equivalence():
    assert e_z_equivalent(BitWindow.periodic("011"), BitWindow.periodic("110"))
    assert not e_z_equivalent(BitWindow.periodic("011"), BitWindow.periodic("001"))
