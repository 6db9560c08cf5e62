"""Semiclosed closure in a group denser than Z^2.

H is generated by Z^2 and (1/2, 1/2).  The cone spanned by (2, 0) and
(0, 1) misses (1, 0) as a monoid, but 2*(1, 0) lies in it, so the
semiclosed closure contains (1, 0).  Points of the rational cone that are
not in H stay out.
"""
from fractions import Fraction as F

from pogroups import ConeSpec, GroupPresentation, closure_contains, cone_member, validate_cone

H = GroupPresentation(2, [(1, 0), (0, 1), (F(1, 2), F(1, 2))])
C = ConeSpec(2, [(2, 0), (0, 1)])

rep = validate_cone(H, C)
print(f"pure={rep.pure} directed={rep.directed} witness={rep.pointed_witness}")

for p in [(1, 0), (F(1, 2), F(1, 2)), (F(1, 2), 0), (-1, 0), (F(3, 2), F(5, 2))]:
    lam = cone_member(C, p)
    shown = tuple(str(a) for a in p)
    print(f"{shown}: in H={H.contains(p)}, coefficients={lam and tuple(str(a) for a in lam)},"
          f" closure={closure_contains(H, C, p)}")
