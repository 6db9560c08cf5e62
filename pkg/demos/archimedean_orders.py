"""Archimedean orders and their real values.

A single level with rationally independent entries orders Z^n with no
infinitesimals, and the level itself embeds the group into the reals.  A
lexicographic stack does have infinitesimals, and its first level has a
rational kernel.
"""
from pogroups import (
    FormalReal,
    GroupPresentation,
    OrderStack,
    compare_orders,
    holder_map,
    is_archimedean,
    zajceva_stack,
)

for n in range(1, 5):
    S = zajceva_stack(n)
    G = GroupPresentation.integer_lattice(n)
    print(f"n={n}: {S!r} archimedean={is_archimedean(G, S)}")

G = GroupPresentation.integer_lattice(2)
lex = OrderStack([[1, 0], [0, 1]])
print(f"\nlex archimedean={is_archimedean(G, lex)}")

h = holder_map(G, zajceva_stack(2))
print("\nvalues under (1, sqrt2):")
for g in [(1, -1), (2, 1), (-7, 5), (41, -29)]:
    v = h(g)
    print(f"  {g}: {v} ~ {v.to_decimal(40)}  ({h.sign(g)})")

# Two slopes give different orders; the comparison returns a point they disagree on.
res = compare_orders(G, OrderStack([[1, FormalReal.sqrt(2)]]), OrderStack([[1, FormalReal.sqrt(3)]]))
print(f"\n(1, sqrt2) vs (1, sqrt3): equal={res.equal}, witness={tuple(int(a) for a in res.witness)}")
scaled = OrderStack([[3, FormalReal.sqrt(2, 3)]])
print(f"(1, sqrt2) vs (3, 3*sqrt2): equal={compare_orders(G, zajceva_stack(2), scaled).equal}")
