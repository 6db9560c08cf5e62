"""Shared hypothesis strategies and small independent oracles for the tests."""
from fractions import Fraction
from itertools import combinations, permutations

from hypothesis import strategies as st

from pogroups import ConeSpec, FormalReal, GroupPresentation, OrderStack

small_int = st.integers(-10, 10)
rational = st.builds(Fraction, st.integers(-50, 50), st.integers(1, 12))
pos_rational = st.builds(Fraction, st.integers(1, 50), st.integers(1, 12))
RADICANDS = [1, 2, 3, 5, 6, 7]


def vectors(n, elements=rational):
    return st.tuples(*[elements] * n)


def nonzero_vectors(n, elements=rational):
    return vectors(n, elements).filter(lambda v: any(v))


@st.composite
def formal_reals(draw, max_terms=4, height=1000):
    k = draw(st.integers(0, max_terms))
    rads = draw(st.lists(st.sampled_from([1, 2, 3, 5, 6, 7, 10, 11, 13]), min_size=k, max_size=k, unique=True))
    return FormalReal(
        {d: Fraction(draw(st.integers(-height, height)), draw(st.integers(1, 30))) for d in rads}
    )


@st.composite
def functionals(draw, n, rational_only=False):
    """Functional with small integer coefficients on few radicands; never zero."""
    rads = [1] if rational_only else RADICANDS[:3]
    coef = st.integers(-6, 6)
    terms = [draw(st.dictionaries(st.sampled_from(rads), coef, max_size=2)) for _ in range(n)]
    i = draw(st.integers(0, n - 1))
    d = draw(st.sampled_from(rads))
    terms[i][d] = draw(st.integers(1, 6)) * draw(st.sampled_from([1, -1]))
    return tuple(FormalReal(t) for t in terms)


@st.composite
def linear_stacks(draw, n):
    """Random stack padded with a completion level until linear."""
    from pogroups import complete_stack

    levels = draw(st.lists(functionals(n), min_size=1, max_size=n))
    return complete_stack(OrderStack(levels, n))


def quadrant(n):
    return ConeSpec(n, [tuple(int(i == j) for j in range(n)) for i in range(n)])


def lattice(n):
    return GroupPresentation.integer_lattice(n)


@st.composite
def pointed_cones(draw, max_dim=4, max_gens=5, height=5):
    n = draw(st.integers(1, max_dim))
    f = draw(st.tuples(*[st.integers(-3, 3)] * n).filter(any))
    gens = []
    for _ in range(draw(st.integers(1, max_gens))):
        g = draw(st.tuples(*[st.integers(-height, height)] * n))
        s = sum(a * b for a, b in zip(f, g))
        if s > 0:
            gens.append(g)
        elif s < 0:
            gens.append(tuple(-a for a in g))
    if not gens:
        gens.append(tuple(f))
    return ConeSpec(n, gens)


# -- oracles -------------------------------------------------------------------


def det(M):
    """Leibniz determinant over Fractions."""
    n = len(M)
    total = Fraction(0)
    for perm in permutations(range(n)):
        inv = sum(1 for i in range(n) for j in range(i + 1, n) if perm[i] > perm[j])
        term = Fraction(-1 if inv % 2 else 1)
        for i in range(n):
            term *= M[i][perm[i]]
        total += term
    return total


def cramer_cone_member(gens, v):
    """Carathéodory oracle: v is a nonnegative combination of some independent subset.

    Each independent subset is solved by Cramer's rule on a square minor.
    """
    n = len(v)
    if not any(v):
        return True
    for r in range(1, min(n, len(gens)) + 1):
        for sub in combinations(gens, r):
            for rows in combinations(range(n), r):
                M = [[sub[j][i] for j in range(r)] for i in rows]
                D = det(M)
                if D == 0:
                    continue
                lam = []
                for j in range(r):
                    Mj = [row[:j] + [v[i]] + row[j + 1:] for row, i in zip(M, rows)]
                    lam.append(det(Mj) / D)
                if all(x >= 0 for x in lam) and all(
                    sum(lam[j] * sub[j][i] for j in range(r)) == v[i] for i in range(n)
                ):
                    return True
    return False
