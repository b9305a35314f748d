"""Tournaments coding binary words, and reading the word back from bare arcs."""
import random

from vtstruct.equiv import OneSidedWord, e0_equivalent
from vtstruct.tournament import (
    BitWindow, build_tournament, check_genericity, check_window_genericity, decode_column,
    phi_isomorphism_check, shift_equivalent,
)

# %% Period-7 word; every periodic word fails condition (i) at multiples of its period,
# so we screen the word below that bound and check the finite window directly.
x = BitWindow.periodic("0001011")
print("generic up to 6:", check_genericity(x, 6).ok)
print("window fully witnessed:", not check_window_genericity(x, -3, 5, 0, 6))

t = build_tournament(x, -3, 5, 0, 6)
print(len(t.digraph), "vertices,", len(t.digraph.arcs), "arcs")

# %% Scramble the labels and decode from arcs alone.
names = [f"v{i}" for i in range(len(t.digraph))]
random.Random(0).shuffle(names)
rename = dict(zip(t.digraph.vertices, names))
bare = t.digraph.relabel(rename)
word = decode_column(bare, rename[t.label_of(0, 3)]).representative
print("decoded:", word, " shift-equivalent to x:", shift_equivalent(word.as_periodic(7), x))

# %% Shearing by phi(m, n) = (m, n + k m) turns T_x into T_x shifted by k.
print("phi check for k = 3:", phi_isomorphism_check(x, 3, -2, 2, -3, 3))

# %% Eventual equality of one-sided words
print(e0_equivalent(OneSidedWord((1, 1, 0), (0, 1)), OneSidedWord((), (1, 0))))
