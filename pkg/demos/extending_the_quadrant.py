"""Linear extensions of the product order on Z^2.

The quadrant cone orders Z^2 coordinatewise.  Every linear order that
contains it is a stack of functionals positive on both unit vectors, and
any point outside the quadrant is negative in at least one of them.
"""
from pogroups import (
    ConeSpec,
    GroupPresentation,
    check_hyperplane_condition,
    intersection_harness,
    is_extension,
    random_extension,
    separating_extension,
    stack_sign,
)

G = GroupPresentation.integer_lattice(2)
Q = ConeSpec(2, [(1, 0), (0, 1)])

# A few sampled extensions.  Each is checked two ways: generator signs, and
# the level-by-level face condition.
print("random extensions:")
for seed in range(4):
    S = random_extension(G, Q, seed)
    print(f"  seed {seed}: {S!r}  extension={bool(is_extension(S, Q, G))}"
          f"  faces ok={check_hyperplane_condition(S, Q)}")

# Points outside the quadrant get an extension of their own that makes them negative.
print("\nseparating extensions:")
for p in [(-1, 5), (3, -7), (-2, -2)]:
    S = separating_extension(G, Q, p)
    print(f"  {p}: {S!r} signs it {stack_sign(S, p)}")

# The quadrant is exactly what every extension agrees is non-negative.
rep = intersection_harness(G, Q, [(1, 1), (4, 0), (-1, 5), (3, -7), (0, 0)], 6, seed=1)
print(f"\nharness over a pool of {rep.pool_size} extensions, passed={rep.passed}")
for pt in rep.points:
    print(f"  {tuple(int(a) for a in pt.point)}: member={pt.member} neg in {pt.neg_count}")
