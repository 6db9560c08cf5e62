"""Finitely generated positive cones, their semiclosed closure and validity checks.

A :class:`ConeSpec` lists group elements ``g_1..g_m``; the partial order it
presents has the monoid they generate as positive cone.  The semiclosed
closure of that order has positive set ``L+(g_1..g_m) ∩ G``: the rational
conic hull intersected with the group.  Membership in the hull is one exact
LP; the real convex hull is never built, because for group elements the
rational hull gives the same answers.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence, Union

from .errors import DomainError, InputError
from .exact import QVec, is_zero, lp_feasible, qvec, rank, transpose
from .groups import GroupPresentation


@dataclass(frozen=True)
class ConeSpec:
    dim: int
    generators: tuple

    def __init__(self, dim: int, generators: Sequence[Sequence] = ()):
        gens = []
        for g in generators:
            g = qvec(g)
            if len(g) != dim:
                raise InputError(f"generator {g} does not have {dim} coordinates")
            if not is_zero(g) and g not in gens:
                gens.append(g)
        object.__setattr__(self, "dim", dim)
        object.__setattr__(self, "generators", tuple(gens))


def cone_member(C: ConeSpec, v: Sequence) -> Optional[QVec]:
    """Nonnegative ``lam`` with ``sum lam_i gen_i = v``, or ``None``."""
    v = qvec(v)
    if len(v) != C.dim:
        raise InputError(f"expected {C.dim} coordinates, got {len(v)}")
    if not C.generators:
        return () if is_zero(v) else None
    A_eq = transpose(list(C.generators))
    res = lp_feasible([], [], A_eq, v, n=len(C.generators))
    return res.witness if res.feasible else None


def separating_functional(generators: Sequence[QVec], dim: int) -> Optional[QVec]:
    """Rational ``f`` with ``f . g >= 1`` for every generator, if one exists."""
    # f = f_plus - f_minus with both parts nonnegative
    rows = [tuple(g) + tuple(-a for a in g) for g in generators]
    res = lp_feasible(rows, [1] * len(rows), n=2 * dim)
    if not res.feasible:
        return None
    w = res.witness
    return tuple(w[i] - w[dim + i] for i in range(dim))


@dataclass(frozen=True)
class ConeReport:
    pure: bool
    pointed_witness: Optional[QVec]
    directed: bool


def check_generators(G: GroupPresentation, C: ConeSpec):
    if G.dim != C.dim:
        raise InputError(f"group has dimension {G.dim}, cone has dimension {C.dim}")
    for g in C.generators:
        if not G.contains(g):
            raise DomainError(f"cone generator {g} is not a group element")


def validate_cone(G: GroupPresentation, C: ConeSpec) -> ConeReport:
    """Purity via a separating functional; directedness via full-rank span."""
    check_generators(G, C)
    f = separating_functional(C.generators, C.dim)
    directed = rank(list(C.generators), C.dim) == C.dim
    return ConeReport(pure=f is not None, pointed_witness=f, directed=directed)


def closure_contains(G: GroupPresentation, C: ConeSpec, g: Sequence) -> bool:
    g = qvec(g)
    if len(g) != C.dim or G.dim != C.dim:
        raise InputError("dimension mismatch")
    return G.contains(g) and cone_member(C, g) is not None


@dataclass(frozen=True)
class ClosureCone:
    """Semiclosed closure of the order presented by ``cone`` on ``group``."""

    group: GroupPresentation
    cone: ConeSpec

    @property
    def dim(self) -> int:
        return self.cone.dim

    @property
    def generators(self) -> tuple:
        return self.cone.generators

    def contains(self, g: Sequence) -> bool:
        return closure_contains(self.group, self.cone, g)

    def __contains__(self, g):
        return self.contains(g)


def closure_cone(G: GroupPresentation, C: Union[ConeSpec, ClosureCone]) -> ClosureCone:
    """Closure semantics for ``C``; applying it to a closure is the identity."""
    if isinstance(C, ClosureCone):
        if C.group != G:
            raise InputError("closure belongs to a different group")
        return C
    check_generators(G, C)
    return ClosureCone(G, C)
