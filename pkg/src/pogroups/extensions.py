"""Linear extensions of a cone order: testing, construction, and the product order."""
from __future__ import annotations

import random
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from math import ceil, floor
from typing import Optional, Sequence, Union

from .cones import (
    ClosureCone,
    ConeSpec,
    check_generators,
    closure_cone,
    cone_member,
    separating_functional,
)
from .errors import DomainError, InputError
from .exact import QVec, dot, is_zero, lp_feasible, primitive, qvec
from .formal import FormalReal, fr_dot, fr_sign, functional, symbol_rows
from .groups import GroupPresentation
from .stacks import OrderStack, Sign, complete_stack, radical_basis, stack_sign

AnyCone = Union[ConeSpec, ClosureCone]


def _cone(C: AnyCone) -> ConeSpec:
    return C.cone if isinstance(C, ClosureCone) else C


@dataclass(frozen=True)
class ExtensionReport:
    is_extension: bool
    violating_generator: Optional[QVec] = None
    face_chain: tuple = ()  # (level index, generators vanishing on levels 1..k)

    def __bool__(self):
        return self.is_extension


def _require_linear(S: OrderStack):
    if not S.linear:
        raise DomainError("stack does not define a linear order: its rational kernel is nonzero")


def _face_chain(S: OrderStack, gens) -> tuple:
    chain = []
    face = list(gens)
    for k, f in enumerate(S.levels, start=1):
        face = [g for g in face if fr_dot(f, g).is_zero()]
        chain.append((k, tuple(face)))
        if not face:
            break
    return tuple(chain)


def is_extension(S: OrderStack, C: AnyCone, G: Optional[GroupPresentation] = None) -> ExtensionReport:
    """Every cone generator must be strictly positive under ``S``."""
    C = _cone(C)
    if S.dim != C.dim or (G is not None and G.dim != C.dim):
        raise InputError("dimension mismatch")
    _require_linear(S)
    for g in C.generators:
        if stack_sign(S, g) != Sign.POS:
            return ExtensionReport(False, g, _face_chain(S, C.generators))
    return ExtensionReport(True, None, _face_chain(S, C.generators))


def check_hyperplane_condition(S: OrderStack, C: AnyCone) -> bool:
    """Level-by-level face test, independent of :func:`is_extension`.

    At each level the current face must meet the level's hyperplane only
    inside a face of itself and lie on its positive side; the next face is
    what stays inside the hyperplane's rational trace.
    """
    C = _cone(C)
    if S.dim != C.dim:
        raise InputError("dimension mismatch")
    _require_linear(S)
    face = list(C.generators)
    rows = []
    for f in S.levels:
        if not face:
            return True
        rows = rows + symbol_rows(f)
        on = [g for g in face if all(dot(r, g) == 0 for r in rows)]
        off = [g for g in face if g not in on]
        if off and _cuts_through(face, off, rows):
            return False
        if any(fr_sign(fr_dot(f, g)) <= 0 for g in off):
            return False
        face = on
    return not face


def _cuts_through(face, off, rows) -> bool:
    """Is there a conic combination with weight on ``off`` lying in the rational trace?"""
    m = len(face)
    A_eq = [tuple(dot(r, g) for g in face) for r in rows]
    weight = tuple(Fraction(1) if g in off else Fraction(0) for g in face)
    res = lp_feasible([weight], [1], A_eq, [0] * len(A_eq), n=m)
    return res.feasible


# -- construction --------------------------------------------------------------


def _require_pointed(C: ConeSpec):
    if separating_functional(C.generators, C.dim) is None:
        raise DomainError("cone is not pointed; it has no linear extension")


def _farkas(gens, target: QVec, n: int) -> QVec:
    """Primitive rational ``f`` with ``f.g >= 0`` on ``gens`` and ``f.target <= -1``."""
    rows = [tuple(g) + tuple(-a for a in g) for g in gens]
    rows.append(tuple(-a for a in target) + tuple(target))
    res = lp_feasible(rows, [0] * len(gens) + [1], n=2 * n)
    if not res.feasible:
        raise AssertionError("Farkas separation failed for a point outside the cone")
    w = res.witness
    return primitive(tuple(w[i] - w[n + i] for i in range(n)))


def _finish_stack(C: ConeSpec, f1, rng: Optional[random.Random]) -> OrderStack:
    """Stack ``f1``, then a pointing level for the face ``f1`` leaves, then a completion."""
    n = C.dim
    levels = [f1]
    face = [g for g in C.generators if fr_dot(functional(f1), g).is_zero()]
    if face:
        f2 = separating_functional(face, n)
        if f2 is None:
            raise AssertionError("face of a pointed cone is not pointed")
        levels.append(primitive(f2))
    return complete_stack(OrderStack(levels, n), rng)


def _separate(C: ConeSpec, target: QVec, rng: Optional[random.Random]) -> OrderStack:
    return _finish_stack(C, _farkas(C.generators, target, C.dim), rng)


def separating_extension(
    G: GroupPresentation, C: AnyCone, g: Sequence, seed: Optional[int] = None
) -> OrderStack:
    """Linear extension of the closure of ``C`` under which ``g`` is negative."""
    C = _cone(C)
    check_generators(G, C)
    g = qvec(g)
    if len(g) != G.dim:
        raise InputError(f"expected {G.dim} coordinates, got {len(g)}")
    if not G.contains(g):
        raise DomainError(f"{g} is not a group element")
    _require_pointed(C)
    if closure_contains_cone(C, g):
        raise DomainError("not separable: point lies in the closure's positive set")
    rng = random.Random(seed) if seed is not None else None
    S = _separate(C, g, rng)
    if not (is_extension(S, C).is_extension and stack_sign(S, g) == Sign.NEG):
        raise AssertionError("separating extension failed its own post-check")
    return S


def closure_contains_cone(C: ConeSpec, g: QVec) -> bool:
    return cone_member(C, g) is not None


def random_extension(G: GroupPresentation, C: AnyCone, seed) -> OrderStack:
    """A linear extension with a randomized top level; deterministic per seed.

    The top level is a positive combination of Farkas functionals for random
    integer directions, with weights that are sometimes irrational.
    """
    C = _cone(C)
    check_generators(G, C)
    _require_pointed(C)
    rng = random.Random(seed)
    n = C.dim
    duals = []
    for _ in range(rng.randint(1, 3)):
        while True:
            w = tuple(Fraction(rng.randint(-5, 5)) for _ in range(n))
            if not is_zero(w):
                break
        if closure_contains_cone(C, w):
            w = tuple(-a for a in w)
        duals.append(_farkas(C.generators, w, n))
    rads = radical_basis(len(duals)) if rng.random() < 0.5 else [1] * len(duals)
    weights = [FormalReal.sqrt(d, Fraction(rng.randint(1, 9), rng.randint(1, 9))) for d in rads]
    f1 = tuple(sum((wt.scale(f[i]) for wt, f in zip(weights, duals)), FormalReal()) for i in range(n))
    if all(e.is_zero() for e in f1):
        f1 = duals[0]
    if all(e.is_rational() for e in f1):
        f1 = primitive(tuple(e.rational_part() for e in f1))
    S = _finish_stack(C, f1, rng)
    if not is_extension(S, C).is_extension:
        raise AssertionError("random extension failed its own post-check")
    return S


# -- intersection harness ------------------------------------------------------


@dataclass(frozen=True)
class PointReport:
    point: QVec
    member: bool
    nonneg_count: int
    neg_count: int
    separated: bool


@dataclass
class HarnessReport:
    points: list = field(default_factory=list)
    pool_size: int = 0
    closure_applied: bool = False
    violations: list = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.violations


def _subseed(seed, tag, i):
    return f"{seed}:{tag}:{i}"


def intersection_harness(
    G: GroupPresentation,
    C: AnyCone,
    sample_points: Sequence[Sequence],
    k_extensions: int,
    seed,
    workers: int = 1,
) -> HarnessReport:
    """Closure members are non-negative in every extension; non-members get separated.

    Each point draws from its own sub-seed, so ``workers > 1`` (threads) gives
    the same report as a sequential run.
    """
    closure_applied = not isinstance(C, ClosureCone)
    closure = closure_cone(G, C)
    cone = closure.cone
    _require_pointed(cone)
    points = [qvec(p) for p in sample_points]
    member = [closure.contains(p) for p in points]
    outside = [i for i, m in enumerate(member) if not m]

    def separate(i):
        try:
            return separating_extension(G, cone, points[i], seed=_subseed(seed, "point", i))
        except DomainError as exc:
            return exc

    def draw(i):
        return random_extension(G, cone, _subseed(seed, "pool", i))

    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as ex:
            pool = list(ex.map(draw, range(k_extensions)))
            results = list(ex.map(separate, outside))
    else:
        pool = [draw(i) for i in range(k_extensions)]
        results = [separate(i) for i in outside]
    report = HarnessReport(closure_applied=closure_applied)
    separated = set()
    for i, S in zip(outside, results):
        if isinstance(S, DomainError):
            report.violations.append(f"point {i}: separation failed: {S}")
        else:
            separated.add(i)
            pool.append(S)
    for S in pool:
        if not is_extension(S, cone).is_extension:
            report.violations.append(f"pool stack {S!r} is not an extension")
    for i, (p, m) in enumerate(zip(points, member)):
        neg = sum(stack_sign(S, p) == Sign.NEG for S in pool)
        if m and neg:
            report.violations.append(f"point {i}: closure member is negative in {neg} extensions")
        report.points.append(PointReport(p, m, len(pool) - neg, neg, i in separated))
    report.pool_size = len(pool)
    return report


# -- product order -------------------------------------------------------------


class Comparison(Enum):
    LE = "le"
    GE = "ge"
    EQ = "eq"
    INCOMPARABLE = "incomparable"

    def __str__(self):
        return self.value


def product_leq(a: Sequence, b: Sequence) -> Comparison:
    a, b = qvec(a), qvec(b)
    if len(a) != len(b):
        raise InputError("dimension mismatch")
    le = all(x <= y for x, y in zip(a, b))
    ge = all(x >= y for x, y in zip(a, b))
    if le and ge:
        return Comparison.EQ
    if le:
        return Comparison.LE
    if ge:
        return Comparison.GE
    return Comparison.INCOMPARABLE


def directed_join(a: Sequence, b: Sequence) -> QVec:
    """Least integer vector above both arguments in the product order."""
    a, b = qvec(a), qvec(b)
    if len(a) != len(b):
        raise InputError("dimension mismatch")
    return tuple(Fraction(ceil(max(x, y))) for x, y in zip(a, b))


def archimedean_witness(a: Sequence, b: Sequence) -> int:
    """Least ``n >= 1`` with ``n*a`` not below ``b`` in the product order."""
    a, b = qvec(a), qvec(b)
    if len(a) != len(b):
        raise InputError("dimension mismatch")
    if any(x < 0 for x in a + b) or is_zero(a) or is_zero(b):
        raise DomainError("both arguments must be strictly positive in the product order")
    # n*a(e) > b(e) first holds at floor(b(e)/a(e)) + 1
    return min(floor(y / x) + 1 for x, y in zip(a, b) if x > 0)
