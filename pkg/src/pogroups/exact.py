"""Exact rational linear algebra: elimination, Hermite normal form, LP feasibility.

Vectors are tuples of :class:`fractions.Fraction` (``QVec``); matrices are
lists of such tuples (``QMatrix``).  ``Fraction`` keeps every coordinate in
lowest terms with a positive denominator, so tuple equality is canonical.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd, lcm
from typing import Iterable, Optional, Sequence

from .errors import InputError

QVec = tuple  # tuple[Fraction, ...]
QMatrix = list  # list[QVec]


def to_fraction(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, bool):
        raise InputError(f"not a rational: {x!r}")
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        try:
            return Fraction(x.strip())
        except (ValueError, ZeroDivisionError) as exc:
            raise InputError(f"not a rational: {x!r}") from exc
    raise InputError(f"not a rational: {x!r}")


def qvec(coords: Iterable) -> QVec:
    return tuple(to_fraction(c) for c in coords)


def qmatrix(rows: Iterable[Iterable]) -> QMatrix:
    out = [qvec(r) for r in rows]
    if out and len({len(r) for r in out}) != 1:
        raise InputError("matrix rows differ in length")
    return out


def zero(n: int) -> QVec:
    return (Fraction(0),) * n


def unit(n: int, i: int) -> QVec:
    return tuple(Fraction(int(j == i)) for j in range(n))


def dot(u: Sequence, v: Sequence) -> Fraction:
    return sum((a * b for a, b in zip(u, v)), Fraction(0))


def vadd(u: QVec, v: QVec) -> QVec:
    return tuple(a + b for a, b in zip(u, v))


def vsub(u: QVec, v: QVec) -> QVec:
    return tuple(a - b for a, b in zip(u, v))


def vscale(q, v: QVec) -> QVec:
    q = to_fraction(q)
    return tuple(q * a for a in v)


def is_zero(v: Sequence) -> bool:
    return all(a == 0 for a in v)


def is_integral(v: Sequence) -> bool:
    return all(Fraction(a).denominator == 1 for a in v)


def denominator_lcm(v: Iterable) -> int:
    d = 1
    for a in v:
        d = lcm(d, Fraction(a).denominator)
    return d


def primitive(v: QVec) -> QVec:
    """Positive multiple of ``v`` with coprime integer coordinates."""
    if is_zero(v):
        return tuple(v)
    d = denominator_lcm(v)
    ints = [int(a * d) for a in v]
    g = 0
    for a in ints:
        g = gcd(g, a)
    return tuple(Fraction(a // g) for a in ints)


def transpose(M: QMatrix, ncols: Optional[int] = None) -> QMatrix:
    if not M:
        return [()] * (ncols or 0)
    return [tuple(col) for col in zip(*M)]


# -- Gaussian elimination ----------------------------------------------------


def rref(M: QMatrix, ncols: Optional[int] = None):
    """Reduced row echelon form.  Returns ``(rows, pivot_columns)``."""
    if ncols is None:
        if not M:
            raise InputError("column count required for an empty matrix")
        ncols = len(M[0])
    R = [list(map(to_fraction, row)) for row in M]
    if any(len(row) != ncols for row in R):
        raise InputError("matrix is not rectangular")
    pivots = []
    r = 0
    for j in range(ncols):
        p = next((i for i in range(r, len(R)) if R[i][j] != 0), None)
        if p is None:
            continue
        R[r], R[p] = R[p], R[r]
        piv = R[r][j]
        R[r] = [a / piv for a in R[r]]
        for i in range(len(R)):
            if i != r and R[i][j] != 0:
                f = R[i][j]
                R[i] = [a - f * b for a, b in zip(R[i], R[r])]
        pivots.append(j)
        r += 1
        if r == len(R):
            break
    return [tuple(row) for row in R[:r]], pivots


def gauss_kernel(M: QMatrix, ncols: Optional[int] = None):
    """Rank of ``M`` and a basis of ``{x : M x = 0}``."""
    if ncols is None:
        if not M:
            raise InputError("column count required for an empty matrix")
        ncols = len(M[0])
    R, pivots = rref(M, ncols)
    free = [j for j in range(ncols) if j not in pivots]
    basis = []
    for f in free:
        x = [Fraction(0)] * ncols
        x[f] = Fraction(1)
        for row, p in zip(R, pivots):
            x[p] = -row[f]
        basis.append(tuple(x))
    return len(pivots), basis


def rank(M: QMatrix, ncols: Optional[int] = None) -> int:
    if not M:
        return 0
    return len(rref(M, ncols)[1])


def in_span(basis: Sequence[QVec], v: QVec) -> bool:
    if is_zero(v):
        return True
    if not basis:
        return False
    return rank(list(basis) + [tuple(v)]) == rank(list(basis))


def same_span(A: Sequence[QVec], B: Sequence[QVec], n: int) -> bool:
    ra, rb = rank(list(A), n), rank(list(B), n)
    return ra == rb and rank(list(A) + list(B), n) == ra


def extend_to_basis(basis: Sequence[QVec], n: int) -> list:
    """Unit vectors completing the independent set ``basis`` to a basis of Q^n."""
    current = list(basis)
    r = rank(current, n)
    extra = []
    for i in range(n):
        if r == n:
            break
        e = unit(n, i)
        if rank(current + [e], n) > r:
            current.append(e)
            extra.append(e)
            r += 1
    return extra


def complement_in(big: Sequence[QVec], small: Sequence[QVec], n: int) -> list:
    """Vectors of ``big`` extending a basis of span(small) to one of span(big)."""
    current = list(small)
    r = rank(current, n)
    out = []
    for v in big:
        if rank(current + [tuple(v)], n) > r:
            current.append(tuple(v))
            out.append(tuple(v))
            r += 1
    return out


def inverse(M: QMatrix) -> QMatrix:
    n = len(M)
    aug = [tuple(row) + unit(n, i) for i, row in enumerate(M)]
    R, pivots = rref(aug, 2 * n)
    if pivots[:n] != list(range(n)) or len(R) < n:
        raise InputError("matrix is singular")
    return [row[n:] for row in R[:n]]


# -- Hermite normal form -----------------------------------------------------


def _xgcd(a: int, b: int):
    x0, x1, y0, y1 = 1, 0, 0, 1
    while b:
        q, a, b = a // b, b, a % b
        x0, x1 = x1, x0 - q * x1
        y0, y1 = y1, y0 - q * y1
    return a, x0, y0


def _as_int_rows(L) -> list:
    rows = []
    for row in L:
        out = []
        for a in row:
            a = to_fraction(a)
            if a.denominator != 1:
                raise InputError(f"non-integer entry {a}")
            out.append(int(a))
        rows.append(out)
    return rows


def hermite_normal_form(L):
    """Row-style HNF of an integer matrix.

    Returns ``(H, U, pivots)`` with ``U`` unimodular and ``U L = H``; the
    nonzero rows of ``H`` come first, pivot entries are positive and entries
    above a pivot are reduced modulo it.
    """
    H = _as_int_rows(L)
    m = len(H)
    ncols = len(H[0]) if H else 0
    U = [[int(i == j) for j in range(m)] for i in range(m)]
    pivots = []
    r = 0
    for j in range(ncols):
        if r == m:
            break
        for i in range(r + 1, m):
            if H[i][j] == 0:
                continue
            a, b = H[r][j], H[i][j]
            g, s, t = _xgcd(a, b)
            ag, bg = a // g, b // g
            H[r], H[i] = (
                [s * x + t * y for x, y in zip(H[r], H[i])],
                [-bg * x + ag * y for x, y in zip(H[r], H[i])],
            )
            U[r], U[i] = (
                [s * x + t * y for x, y in zip(U[r], U[i])],
                [-bg * x + ag * y for x, y in zip(U[r], U[i])],
            )
        if H[r][j] == 0:
            continue
        if H[r][j] < 0:
            H[r] = [-x for x in H[r]]
            U[r] = [-x for x in U[r]]
        p = H[r][j]
        for k in range(r):
            q = H[k][j] // p
            if q:
                H[k] = [x - q * y for x, y in zip(H[k], H[r])]
                U[k] = [x - q * y for x, y in zip(U[k], U[r])]
        pivots.append(j)
        r += 1
    return H, U, pivots


def solve_with_hnf(H, U, pivots, t) -> Optional[tuple]:
    resid = list(_as_int_rows([t])[0]) if t else []
    y = [0] * len(H)
    for r, p in enumerate(pivots):
        if resid[p] % H[r][p]:
            return None
        y[r] = resid[p] // H[r][p]
        if y[r]:
            resid = [a - y[r] * b for a, b in zip(resid, H[r])]
    if any(resid):
        return None
    m = len(U)
    x = [sum(y[r] * U[r][i] for r in range(m)) for i in range(m)]
    return tuple(Fraction(a) for a in x)


def hnf_solve(L, t) -> Optional[tuple]:
    """Integer ``x`` with ``x^T L = t``, or ``None`` if no integer solution exists."""
    t_int = _as_int_rows([t])[0]
    if not L:
        return () if not any(t_int) else None
    if len(L[0]) != len(t_int):
        raise InputError("target length does not match column count")
    H, U, pivots = hermite_normal_form(L)
    return solve_with_hnf(H, U, pivots, t_int)


# -- LP feasibility ----------------------------------------------------------


@dataclass(frozen=True)
class LPResult:
    """Outcome of :func:`lp_feasible`.

    ``witness`` is set when the system is feasible.  Otherwise
    ``certificate = (y_geq, y_eq)`` satisfies ``y_geq >= 0``,
    ``y_geq^T A_geq + y_eq^T A_eq <= 0`` and ``y_geq^T b + y_eq^T c > 0``.
    """

    feasible: bool
    witness: Optional[QVec] = None
    certificate: Optional[QVec] = None

    @property
    def status(self) -> str:
        return "feasible" if self.feasible else "infeasible"


def _check_dims(A_geq, b, A_eq, c, n):
    if n is None:
        if A_geq:
            n = len(A_geq[0])
        elif A_eq:
            n = len(A_eq[0])
        else:
            raise InputError("variable count required when there are no constraints")
    if any(len(row) != n for row in list(A_geq) + list(A_eq)):
        raise InputError("constraint rows differ in length")
    if len(b) != len(A_geq) or len(c) != len(A_eq):
        raise InputError("right-hand side length mismatch")
    return n


def satisfies(A_geq, b, A_eq, c, x) -> bool:
    if any(xi < 0 for xi in x):
        return False
    if any(dot(row, x) < bi for row, bi in zip(A_geq, b)):
        return False
    return all(dot(row, x) == ci for row, ci in zip(A_eq, c))


def is_farkas_certificate(A_geq, b, A_eq, c, y) -> bool:
    p = len(A_geq)
    y_geq, y_eq = y[:p], y[p:]
    if any(v < 0 for v in y_geq):
        return False
    n = len(A_geq[0]) if A_geq else (len(A_eq[0]) if A_eq else 0)
    for j in range(n):
        col = sum((yi * row[j] for yi, row in zip(y_geq, A_geq)), Fraction(0))
        col += sum((yi * row[j] for yi, row in zip(y_eq, A_eq)), Fraction(0))
        if col > 0:
            return False
    return dot(y_geq, b) + dot(y_eq, c) > 0


def lp_feasible(A_geq, b, A_eq=(), c=(), n: Optional[int] = None) -> LPResult:
    """Decide ``{x >= 0 : A_geq x >= b, A_eq x = c}`` exactly.

    Phase-one simplex with Bland's rule on a dense Fraction tableau.  The
    Farkas certificate is read off the artificial columns at the optimum.
    """
    A_geq = [qvec(r) for r in A_geq]
    A_eq = [qvec(r) for r in A_eq]
    b, c = qvec(b), qvec(c)
    n = _check_dims(A_geq, b, A_eq, c, n)
    p, q = len(A_geq), len(A_eq)
    m = p + q
    ncol = n + p + m  # x, surplus, artificial
    rows = []
    signs = []
    for i in range(m):
        if i < p:
            coeffs = list(A_geq[i]) + [Fraction(-int(k == i)) for k in range(p)]
            rhs = b[i]
        else:
            coeffs = list(A_eq[i - p]) + [Fraction(0)] * p
            rhs = c[i - p]
        s = -1 if rhs < 0 else 1
        signs.append(s)
        coeffs = [s * a for a in coeffs] + [Fraction(int(k == i)) for k in range(m)]
        rows.append(coeffs + [s * rhs])
    basis = [n + p + i for i in range(m)]
    cost = [Fraction(0)] * (n + p) + [Fraction(1)] * m
    # reduced costs and objective, kept as an extra row
    red = [cost[j] - sum((rows[i][j] for i in range(m)), Fraction(0)) for j in range(ncol)]
    red.append(-sum((rows[i][-1] for i in range(m)), Fraction(0)))

    while True:
        enter = next((j for j in range(ncol) if red[j] < 0), None)
        if enter is None:
            break
        leave = None
        best = None
        for i in range(m):
            a = rows[i][enter]
            if a > 0:
                ratio = rows[i][-1] / a
                if best is None or ratio < best or (ratio == best and basis[i] < basis[leave]):
                    best, leave = ratio, i
        if leave is None:  # phase one is bounded below by zero
            raise AssertionError("unbounded phase-one problem")
        piv = rows[leave][enter]
        rows[leave] = [a / piv for a in rows[leave]]
        prow = rows[leave]
        for i in range(m):
            if i != leave and rows[i][enter] != 0:
                f = rows[i][enter]
                rows[i] = [a - f * b_ for a, b_ in zip(rows[i], prow)]
        f = red[enter]
        red = [a - f * b_ for a, b_ in zip(red, prow)]
        basis[leave] = enter

    value = -red[-1]
    if value == 0:
        x = [Fraction(0)] * n
        for i, var in enumerate(basis):
            if var < n:
                x[var] = rows[i][-1]
        x = tuple(x)
        assert satisfies(A_geq, b, A_eq, c, x)
        return LPResult(True, witness=x)
    # simplex multipliers: pi_i = 1 - reduced cost of artificial i
    y = tuple(signs[i] * (1 - red[n + p + i]) for i in range(m))
    assert is_farkas_certificate(A_geq, b, A_eq, c, y)
    return LPResult(False, certificate=y)
