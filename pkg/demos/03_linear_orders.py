"""Ordinals, the orders Z^alpha, condensation, and codes on the natural numbers."""
from vtstruct.linord import (
    Prod, Q, ZElement, ZPow, classify_vt, code_compare_with_symbolic, condense, parse_order,
    z_compare, z_power_code,
)
from vtstruct.ordinals import Ordinal

# %% Cantor normal form arithmetic
a, b = Ordinal.parse("w*2 + 3"), Ordinal.parse("w^2")
print(a, "+", b, "=", a + b)
print(b, "+", a, "=", b + a)

# %% Elements of Z^alpha are finitely supported; the highest differing position decides.
s = ZElement.of({0: 100, 1: -1})
t = ZElement.of({1: 1})
print(s, "<", t, ":", z_compare(2, s, t) < 0)

# %% Condensation glues points at finite distance.
for term in ("ZPow(3)", "Prod(ZPow(2), Q)", "ZPow(w+2)"):
    print(term, "->", condense(parse_order(term)))
print("Prod(Fin(2), Q):", classify_vt(parse_order("Prod(Fin(2), Q)")))
print("Prod(Prod(Z, ZPow(w)), Q):", classify_vt(Prod(Prod(ZPow(1), ZPow(Ordinal.parse("w"))), Q())))

# %% A comparator on codes realising Z^(w+1), checked by back-and-forth on a sample.
code = z_power_code("w+1")
print(code.describe())
print("matches Z^(w+1):", code_compare_with_symbolic("w+1", code, sample_size=100))
print("matches Z^w:    ", code_compare_with_symbolic("w", code, sample_size=100))
