"""Shared hypothesis strategies and deterministic random generators."""

import random

from hypothesis import strategies as st

from cherncalc import KClass, PolyRing
from cherncalc.chern_roots import LineElement


# -- hypothesis strategies ----------------------------------------------------


def partitions(max_part: int = 5, max_len: int = 5):
    """Partitions as weakly decreasing tuples of positive integers."""
    return st.lists(st.integers(1, max_part), max_size=max_len).map(
        lambda xs: tuple(sorted(xs, reverse=True))
    )


def polys(ring: PolyRing, max_terms: int = 5, coeff_bound: int = 9):
    """Sparse integer polynomials in the given ring (truncation applies)."""
    n = len(ring.variables)
    exps = st.tuples(*(st.integers(0, ring.trunc) for _ in range(n)))
    term = st.tuples(exps, st.integers(-coeff_bound, coeff_bound))

    def build(ts):
        acc = ring.zero
        for e, c in ts:
            acc = acc + ring.monomial(e, c)
        return acc

    return st.lists(term, max_size=max_terms).map(build)


def line_vectors(roots: int = 3, coeff_bound: int = 2):
    return st.lists(
        st.integers(-coeff_bound, coeff_bound), min_size=roots, max_size=roots
    )


def line_elements(roots: int = 3, coeff_bound: int = 2):
    return line_vectors(roots, coeff_bound).map(LineElement.from_vector)


def kclasses(roots: int = 3, max_pos: int = 3, max_neg: int = 2, coeff_bound: int = 2):
    lines = line_elements(roots, coeff_bound)
    return st.builds(
        lambda pos, neg: KClass(tuple(pos), tuple(neg)),
        st.lists(lines, max_size=max_pos),
        st.lists(lines, max_size=max_neg),
    )


def effective_kclasses(roots: int = 3, max_pos: int = 3, coeff_bound: int = 2):
    return kclasses(roots, max_pos=max_pos, max_neg=0, coeff_bound=coeff_bound)


# -- seeded random builders (shared with the acceptance suite) ----------------


def random_line(rng: random.Random, roots: int, coeff_bound: int = 2) -> LineElement:
    vec = [rng.randint(-coeff_bound, coeff_bound) for _ in range(roots)]
    return LineElement.from_vector(vec)


def random_effective(
    rng: random.Random, roots: int, max_lines: int, coeff_bound: int = 2
) -> KClass:
    pos = tuple(random_line(rng, roots, coeff_bound) for _ in range(rng.randint(1, max_lines)))
    return KClass(pos, ())


def random_class(
    rng: random.Random,
    roots: int,
    max_pos: int = 3,
    max_neg: int = 2,
    coeff_bound: int = 2,
) -> KClass:
    pos = tuple(random_line(rng, roots, coeff_bound) for _ in range(rng.randint(0, max_pos)))
    neg = tuple(random_line(rng, roots, coeff_bound) for _ in range(rng.randint(0, max_neg)))
    return KClass(pos, neg)
