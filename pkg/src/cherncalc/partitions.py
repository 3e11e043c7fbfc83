"""Integer partitions, Littlewood-Richardson coefficients and Schur
polynomials via semistandard tableau enumeration.

Partitions are canonical tuples of weakly decreasing positive ints; the
empty partition is ``()``.  Text form is ``[2,1]``; the CLI accepts
comma-separated parts.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Iterable, Iterator, Sequence

from .bigpoly import GradedPoly, PolyRing, Variable

Partition = tuple[int, ...]


def as_partition(parts: Iterable[int]) -> Partition:
    """Canonicalize ``parts``: strip trailing zeros, validate weak decrease."""
    p = tuple(int(x) for x in parts)
    while p and p[-1] == 0:
        p = p[:-1]
    if any(x <= 0 for x in p):
        raise ValueError(f"partition parts must be positive: {p}")
    if any(p[i] < p[i + 1] for i in range(len(p) - 1)):
        raise ValueError(f"partition parts must be weakly decreasing: {p}")
    return p


def parse_partition(text: str) -> Partition:
    """Parse ``"2,1"`` (optionally bracketed, possibly empty) to a partition."""
    body = text.strip()
    if body.startswith("[") and body.endswith("]"):
        body = body[1:-1]
    if not body:
        return ()
    try:
        parts = [int(x) for x in body.split(",")]
    except ValueError:
        raise ValueError(f"cannot parse partition from {text!r}") from None
    return as_partition(parts)


def format_partition(p: Partition) -> str:
    return "[" + ",".join(str(x) for x in p) + "]"


def weight(p: Partition) -> int:
    return sum(p)


def contains(outer: Partition, inner: Partition) -> bool:
    """Containment of Young diagrams, part by part."""
    if len(inner) > len(outer):
        return False
    return all(outer[i] >= inner[i] for i in range(len(inner)))


def conjugate(p: Partition) -> Partition:
    if not p:
        return ()
    return tuple(sum(1 for x in p if x > c) for c in range(p[0]))


def partitions_of_weight(n: int, max_part: int | None = None) -> list[Partition]:
    """All partitions of n with parts bounded by max_part, in descending
    lexicographic order."""
    if n < 0:
        return []
    bound = n if max_part is None else min(max_part, n)
    out: list[Partition] = []

    def rec(remaining: int, cap: int, prefix: list[int]) -> None:
        if remaining == 0:
            out.append(tuple(prefix))
            return
        for part in range(min(cap, remaining), 0, -1):
            prefix.append(part)
            rec(remaining - part, part, prefix)
            prefix.pop()

    rec(n, bound, [])
    return out


def partitions_in_box(rows: int, cols: int) -> list[Partition]:
    """Partitions with at most ``rows`` parts, each at most ``cols``, ordered
    by weight and then descending lexicographically.  There are
    binomial(rows+cols, rows) of them."""
    if rows < 0 or cols < 0:
        raise ValueError("box dimensions must be nonnegative")
    out: list[Partition] = []

    def rec(row: int, cap: int, prefix: list[int]) -> None:
        out.append(tuple(prefix))
        if row == rows:
            return
        for part in range(cap, 0, -1):
            prefix.append(part)
            rec(row + 1, part, prefix)
            prefix.pop()

    rec(0, cols, [])
    out.sort(key=lambda p: (sum(p), tuple(-x for x in p)))
    return out


@lru_cache(maxsize=None)
def lr_coefficient(mu: Partition, eps: Partition, nu: Partition) -> int:
    """Littlewood-Richardson coefficient: the multiplicity of s_mu in
    s_eps * s_nu, counted as the number of LR skew tableaux of shape
    mu/eps and content nu (column-strict, row-weak fillings whose reverse
    reading word is a lattice word)."""
    mu = as_partition(mu)
    eps = as_partition(eps)
    nu = as_partition(nu)
    if weight(eps) + weight(nu) != weight(mu) or not contains(mu, eps):
        return 0
    if not nu:
        return 1  # mu == eps by the weight check
    rows = len(mu)
    eps_pad = tuple(eps) + (0,) * (rows - len(eps))
    # Cells in reading order: rows top to bottom, right to left within a row.
    cells = [(r, c) for r in range(rows) for c in range(mu[r] - 1, eps_pad[r] - 1, -1)]
    nvals = len(nu)
    grid = [[0] * mu[r] for r in range(rows)]
    counts = [0] * (nvals + 1)
    total = 0

    def fill(idx: int) -> None:
        nonlocal total
        if idx == len(cells):
            total += 1
            return
        r, c = cells[idx]
        hi = nvals
        if c + 1 < mu[r]:  # right neighbor already placed; row weakly increasing
            hi = grid[r][c + 1]
        lo = 1
        if r > 0 and c >= eps_pad[r - 1]:  # cell above is in the skew shape
            lo = grid[r - 1][c] + 1
        for v in range(lo, hi + 1):
            if counts[v] >= nu[v - 1]:
                continue
            if v > 1 and counts[v - 1] <= counts[v]:  # lattice word condition
                continue
            grid[r][c] = v
            counts[v] += 1
            fill(idx + 1)
            counts[v] -= 1
        grid[r][c] = 0

    fill(0)
    return total


def _row_fillings(length: int, lower: Sequence[int], kmax: int) -> Iterator[tuple[int, ...]]:
    """Weakly increasing rows of given length with entries <= kmax and
    row[j] >= lower[j] (pointwise strict-column lower bounds)."""
    row = [0] * length

    def rec(j: int) -> Iterator[tuple[int, ...]]:
        if j == length:
            yield tuple(row)
            return
        start = lower[j]
        if j > 0 and row[j - 1] > start:
            start = row[j - 1]
        for v in range(start, kmax + 1):
            row[j] = v
            yield from rec(j + 1)

    yield from rec(0)


def schur_in_variables(mu: Partition, k: int, ring: PolyRing | None = None) -> GradedPoly:
    """Schur polynomial s_mu(x_1..x_k) by summing x^content over all
    semistandard Young tableaux of shape mu with entries in 1..k."""
    mu = as_partition(mu)
    if k < 1:
        raise ValueError("need at least one variable")
    if ring is None:
        ring = PolyRing([Variable(f"x{i+1}") for i in range(k)], max(weight(mu), 1))
    else:
        if len(ring.variables) != k:
            raise ValueError("ring must have exactly k variables")
        if weight(mu) > ring.trunc:
            raise ValueError("ring truncation too small to hold the Schur polynomial")
    if not mu:
        return ring.one
    if len(mu) > k:
        return ring.zero
    terms: dict[tuple[int, ...], int] = {}
    content = [0] * k

    def rec(r: int, above: tuple[int, ...]) -> None:
        if r == len(mu):
            key = tuple(content)
            terms[key] = terms.get(key, 0) + 1
            return
        length = mu[r]
        lower = [above[j] + 1 if j < len(above) else 1 for j in range(length)]
        for row in _row_fillings(length, lower, k):
            for v in row:
                content[v - 1] += 1
            rec(r + 1, row)
            for v in row:
                content[v - 1] -= 1

    rec(0, ())
    return GradedPoly(ring, terms)
