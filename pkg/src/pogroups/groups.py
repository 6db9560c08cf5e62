"""Torsion-free abelian groups presented inside Q^n, and their canonical embeddings.

A :class:`GroupPresentation` is a finitely generated subgroup of Q^n that
contains Z^n.  The unit vectors then form a maximal independent set, and the
embedding into the rational (or real) vector space over that set is the
identity on coordinates.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Optional, Sequence

from .errors import DomainError, InputError
from .exact import (
    QVec,
    denominator_lcm,
    hermite_normal_form,
    is_integral,
    qvec,
    rank,
    solve_with_hnf,
    unit,
)


@dataclass(frozen=True)
class CanonicalRep:
    """Least ``q > 0`` with ``q*g`` integral, and ``p = q*g``."""

    q: int
    p: tuple


def canonical_rep(g: Sequence) -> CanonicalRep:
    g = qvec(g)
    q = denominator_lcm(g)
    return CanonicalRep(q, tuple(int(a * q) for a in g))


@dataclass(frozen=True)
class GroupPresentation:
    dim: int
    generators: tuple

    def __init__(self, dim: int, generators: Sequence[Sequence] = ()):
        gens = tuple(qvec(g) for g in generators)
        if dim < 1:
            raise InputError("group dimension must be at least 1")
        for g in gens:
            if len(g) != dim:
                raise InputError(f"generator {g} does not have {dim} coordinates")
        object.__setattr__(self, "dim", dim)
        object.__setattr__(self, "generators", gens)
        if rank(list(gens), dim) < dim:
            raise InputError("generators do not span Q^n; unit vectors would not be maximal independent")
        for i in range(dim):
            if not self.contains(unit(dim, i)):
                raise InputError(f"group does not contain unit vector e{i + 1}")

    @classmethod
    def integer_lattice(cls, dim: int) -> "GroupPresentation":
        return cls(dim, [unit(dim, i) for i in range(dim)])

    @cached_property
    def _lattice(self):
        scale = denominator_lcm(a for g in self.generators for a in g)
        rows = [[int(a * scale) for a in g] for g in self.generators]
        H, U, pivots = hermite_normal_form(rows)
        return scale, H, U, pivots

    def express(self, v: Sequence) -> Optional[tuple]:
        """Integer coefficients expressing ``v`` in the generators, or ``None``."""
        v = qvec(v)
        if len(v) != self.dim:
            raise InputError(f"expected {self.dim} coordinates, got {len(v)}")
        scale, H, U, pivots = self._lattice
        t = tuple(a * scale for a in v)
        if not is_integral(t):
            return None
        return solve_with_hnf(H, U, pivots, t)

    def contains(self, v: Sequence) -> bool:
        return self.express(v) is not None

    @cached_property
    def exponent(self) -> int:
        """Least ``m`` with ``m*G`` contained in Z^n."""
        return denominator_lcm(a for g in self.generators for a in g)

    def __contains__(self, v):
        return self.contains(v)


def group_contains(G: GroupPresentation, v: Sequence) -> bool:
    return G.contains(v)


def phi(g: Sequence, group: Optional[GroupPresentation] = None) -> QVec:
    """Embed a group element into Q^n; ``p/q`` from its canonical representation."""
    g = qvec(g)
    if group is not None and not group.contains(g):
        raise DomainError(f"{g} is not an element of the group")
    rep = canonical_rep(g)
    return tuple(Fraction(a, rep.q) for a in rep.p)


def psi(r: Sequence) -> QVec:
    """Integer coefficient vector over E, viewed as the group element sum r(a)*a."""
    r = qvec(r)
    if not is_integral(r):
        raise InputError(f"psi expects integer coordinates, got {r}")
    return r
