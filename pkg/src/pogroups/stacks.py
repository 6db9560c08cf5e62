"""Linear orders as lexicographic stacks of functionals.

An :class:`OrderStack` holds functionals ``f_1, ..., f_L`` with formal-real
entries.  A vector's sign is the sign of the first nonzero ``f_k . v``.  The
subspace where ``f_1..f_k`` all vanish is the boundary hyperplane one level
down; only its rational points matter for orders on groups, so everything
here works with rational kernels:

    K_k = {x in Q^n : f_i . x = 0 for i <= k}

which are computable exactly because ``f . x = 0`` splits into one rational
equation per square-root symbol.
"""
from __future__ import annotations

import random
from dataclasses import dataclass
from enum import IntEnum
from fractions import Fraction
from functools import cached_property
from typing import Optional, Sequence

from .errors import DomainError, InputError
from .exact import (
    QVec,
    complement_in,
    extend_to_basis,
    gauss_kernel,
    in_span,
    inverse,
    primitive,
    qvec,
    same_span,
    transpose,
    unit,
    vadd,
    vscale,
)
from .formal import FormalReal, Functional, fr_dot, fr_sign, functional, primes, symbol_rows
from .groups import GroupPresentation


class Sign(IntEnum):
    NEG = -1
    ZERO = 0
    POS = 1

    def __str__(self):
        return self.name.lower()


class OrderStack:
    """Ordered levels of functionals; level 0 is the most significant."""

    def __init__(self, levels: Sequence[Sequence], dim: Optional[int] = None):
        levels = tuple(functional(f) for f in levels)
        if not levels:
            raise InputError("an order stack needs at least one level")
        if dim is None:
            dim = len(levels[0])
        for k, f in enumerate(levels):
            if len(f) != dim:
                raise InputError(f"level {k + 1} has {len(f)} entries, expected {dim}")
            if all(e.is_zero() for e in f):
                raise InputError(f"level {k + 1} is the zero functional")
        self.levels = levels
        self.dim = dim

    def __len__(self):
        return len(self.levels)

    def __iter__(self):
        return iter(self.levels)

    def __eq__(self, other):
        return isinstance(other, OrderStack) and self.levels == other.levels

    def __hash__(self):
        return hash(self.levels)

    def __repr__(self):
        body = "; ".join(" ".join(map(str, f)) for f in self.levels)
        return f"OrderStack([{body}])"

    @cached_property
    def kernel_chain(self) -> list:
        """``[K_0, K_1, ..., K_L]`` as lists of basis vectors; ``K_0`` is Q^n."""
        n = self.dim
        chain = [[unit(n, i) for i in range(n)]]
        rows = []
        for f in self.levels:
            rows.extend(symbol_rows(f))
            chain.append(gauss_kernel(rows, n)[1])
        return chain

    @property
    def linear(self) -> bool:
        return not self.kernel_chain[-1]

    def sign(self, v: Sequence) -> Sign:
        return stack_sign(self, v)

    def with_levels(self, levels) -> "OrderStack":
        return OrderStack(levels, self.dim)


def stack_sign(S: OrderStack, v: Sequence) -> Sign:
    if len(v) != S.dim:
        raise InputError(f"expected {S.dim} coordinates, got {len(v)}")
    v = qvec(v)
    for f in S.levels:
        s = fr_sign(fr_dot(f, v))
        if s:
            return Sign(s)
    return Sign.ZERO


def leq(S: OrderStack, u: Sequence, v: Sequence) -> bool:
    """``u <= v`` in the order presented by ``S``."""
    return stack_sign(S, tuple(b - a for a, b in zip(qvec(u), qvec(v)))) != Sign.NEG


def rational_kernel(S: OrderStack, k: Optional[int] = None) -> list:
    """Basis of the rational vectors annihilated by levels ``1..k`` (default: all)."""
    if k is None:
        k = len(S)
    if not 0 <= k <= len(S):
        raise InputError(f"level count {k} outside 0..{len(S)}")
    return list(S.kernel_chain[k])


def _check_dims(G: GroupPresentation, S: OrderStack):
    if G.dim != S.dim:
        raise InputError(f"group has dimension {G.dim}, stack has dimension {S.dim}")


def is_linear_on(G: GroupPresentation, S: OrderStack) -> bool:
    # G spans Q^n, so trichotomy on G is the same as on Q^n
    _check_dims(G, S)
    return S.linear


def _require_linear(G, S):
    if not is_linear_on(G, S):
        raise DomainError("stack does not define a linear order: its rational kernel is nonzero")


def is_archimedean(G: GroupPresentation, S: OrderStack) -> bool:
    _require_linear(G, S)
    return not S.kernel_chain[1]


def clarify(S: OrderStack) -> OrderStack:
    """Drop rationally passive levels; ``.linear`` on the result flags a nonzero residual kernel."""
    chain = S.kernel_chain
    keep = [f for k, f in enumerate(S.levels) if len(chain[k + 1]) < len(chain[k])]
    return S.with_levels(keep)


def is_clarified(S: OrderStack) -> bool:
    chain = S.kernel_chain
    return all(len(chain[k + 1]) < len(chain[k]) for k in range(len(S)))


# -- order equality ------------------------------------------------------------


@dataclass(frozen=True)
class OrderComparison:
    equal: bool
    witness: Optional[QVec] = None  # opposite strict signs under the two stacks
    level: Optional[int] = None  # 1-based clarified level where they part


def _proportional(a: Sequence[FormalReal], b: Sequence[FormalReal]) -> bool:
    """Exact test for ``b = lam * a`` with ``lam > 0``; entries of both are nonzero."""
    if any(fr_sign(x) != fr_sign(y) for x, y in zip(a, b)):
        return False
    for i in range(len(a)):
        for j in range(i + 1, len(a)):
            if not (a[i] * b[j] - a[j] * b[i]).is_zero():
                return False
    return True


def _kernel_witness(A: OrderStack, B: OrderStack, k: int, x: QVec, y0: QVec) -> QVec:
    """``x`` vanishes on level ``k`` of A but not of B; ``y0`` is active at level ``k`` of A."""
    sigma = fr_sign(fr_dot(B.levels[k], x))
    if stack_sign(A, x) != sigma:
        return x
    y = y0 if fr_sign(fr_dot(A.levels[k], y0)) == -sigma else vscale(-1, y0)
    # under A, x is infinitesimal against y; under B, large multiples of x dominate y
    N = 1
    while True:
        w = vadd(vscale(N, x), y)
        if fr_sign(fr_dot(B.levels[k], w)) == sigma:
            return w
        N *= 2


def _functional_witness(a, b, basis, bits=4) -> QVec:
    """Rational combination of ``basis`` with positive ``a``-value and negative ``b``-value."""
    d = len(a)
    pair = next(
        (i, j)
        for i in range(d)
        for j in range(i + 1, d)
        if not (a[i] * b[j] - a[j] * b[i]).is_zero()
    )
    i, j = pair
    while True:
        ai, aj, bi, bj = (x.approx(bits) for x in (a[i], a[j], b[i], b[j]))
        det = ai * bj - aj * bi
        if det != 0:
            mu_i = (bj + aj) / det
            mu_j = (-bi - ai) / det
            fa = a[i].scale(mu_i) + a[j].scale(mu_j)
            fb = b[i].scale(mu_i) + b[j].scale(mu_j)
            if fr_sign(fa) > 0 and fr_sign(fb) < 0:
                return vadd(vscale(mu_i, basis[i]), vscale(mu_j, basis[j]))
        bits *= 2


def compare_orders(G: GroupPresentation, S1: OrderStack, S2: OrderStack) -> OrderComparison:
    _require_linear(G, S1)
    _require_linear(G, S2)
    A, B = clarify(S1), clarify(S2)
    KA, KB = A.kernel_chain, B.kernel_chain
    n = G.dim
    for k in range(min(len(A), len(B))):
        prev = KA[k]  # equal to KB[k] by the previous iteration
        if not same_span(KA[k + 1], KB[k + 1], n):
            x = next((v for v in KA[k + 1] if not in_span(KB[k + 1], v)), None)
            if x is not None:
                y0 = complement_in(prev, KA[k + 1], n)[0]
                w = _kernel_witness(A, B, k, x, y0)
            else:
                x = next(v for v in KB[k + 1] if not in_span(KA[k + 1], v))
                y0 = complement_in(prev, KB[k + 1], n)[0]
                w = _kernel_witness(B, A, k, x, y0)
            return _finish(A, B, w, k)
        comp = complement_in(prev, KA[k + 1], n)
        a = [fr_dot(A.levels[k], c) for c in comp]
        b = [fr_dot(B.levels[k], c) for c in comp]
        if not _proportional(a, b):
            flipped = next((c for c, x, y in zip(comp, a, b) if fr_sign(x) != fr_sign(y)), None)
            w = flipped if flipped is not None else _functional_witness(a, b, comp)
            return _finish(A, B, w, k)
    # both chains reach {0} together once every level matched
    return OrderComparison(True)


def _finish(A, B, w, k) -> OrderComparison:
    w = primitive(w)
    sa, sb = stack_sign(A, w), stack_sign(B, w)
    assert sa != Sign.ZERO and sa == -sb, "witness does not separate the orders"
    return OrderComparison(False, w, k + 1)


def orders_equal(G: GroupPresentation, S1: OrderStack, S2: OrderStack) -> bool:
    return compare_orders(G, S1, S2).equal


# -- archimedean orders --------------------------------------------------------


@dataclass(frozen=True)
class HolderEmbedding:
    """Order embedding of an archimedean group into the reals, ``g -> f_1 . g``."""

    functional: Functional

    def __call__(self, g: Sequence) -> FormalReal:
        return fr_dot(self.functional, qvec(g))

    def sign(self, g: Sequence) -> Sign:
        return Sign(fr_sign(self(g)))


def holder_map(G: GroupPresentation, S: OrderStack) -> HolderEmbedding:
    if not is_archimedean(G, S):
        raise DomainError("order is not archimedean")
    return HolderEmbedding(S.levels[0])


def radical_basis(count: int) -> list:
    """``[1, 2, 3, 5, 7, ...]``: 1 followed by the primes, as radicands."""
    out = [1]
    gen = primes()
    while len(out) < count:
        out.append(next(gen))
    return out[:count]


def zajceva_stack(n: int) -> OrderStack:
    """Single level ``(1, sqrt2, sqrt3, sqrt5, ...)``: archimedean on every group of rank n."""
    if n < 1:
        raise InputError("dimension must be at least 1")
    return OrderStack([[FormalReal.sqrt(d) for d in radical_basis(n)]])


def kernel_completion(basis: Sequence[QVec], n: int, rng: Optional[random.Random] = None) -> Functional:
    """Functional injective on the rational points of span(basis), zero on a rational complement.

    Basis vector ``j`` is sent to ``r_j * sqrt(p_j)`` with ``p = 1, 2, 3, 5, ...``
    and ``r_j = 1`` (or a random positive rational when ``rng`` is given).
    """
    basis = list(basis)
    k = len(basis)
    full = basis + extend_to_basis(basis, n)
    inv = inverse(transpose(full))  # rows: coordinates w.r.t. the basis
    alphas = []
    for d in radical_basis(k):
        r = Fraction(rng.randint(1, 9), rng.randint(1, 9)) if rng else Fraction(1)
        alphas.append(FormalReal.sqrt(d, r))
    return tuple(
        sum((alphas[j].scale(inv[j][i]) for j in range(k)), FormalReal()) for i in range(n)
    )


def complete_stack(S: OrderStack, rng: Optional[random.Random] = None) -> OrderStack:
    """Append one level making ``S`` linear if its rational kernel is nonzero."""
    K = S.kernel_chain[-1]
    if not K:
        return S
    return S.with_levels(S.levels + (kernel_completion(K, S.dim, rng),))
