"""Schur-basis model of the graded ring of a Grassmannian.

Gr(m, n) carries a tautological rank-m subbundle S and rank-(n-m) quotient
Q; its graded ring has a free Z-basis of Schur classes s_mu indexed by the
partitions fitting in a box with n-m rows and m columns, multiplied through
Littlewood-Richardson coefficients with everything leaving the box set to
zero.  In that basis c_k(Q) = s_{(1^k)} and c_k(S) = (-1)^k s_{(k)}.

The presentation side uses free polynomial generators c_1..c_r with
r = max(m, n-m) — the Chern classes of Q when m <= n-m, else of S — and
relations given by the coefficients of t^{n-r+1}..t^n in the inverse of
1 + c_1 t + ... + c_r t^r (the total Chern series of the complementary
bundle must stop at degree n-r).  ``verify_presentation`` checks the two
descriptions against each other.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import comb

from .bigpoly import GradedPoly, PolyRing, TotalChern, Variable
from .errors import ContextError, DomainError
from .partitions import (
    Partition,
    as_partition,
    lr_coefficient,
    partitions_in_box,
    partitions_of_weight,
    weight,
)

Box = tuple[int, int]


def _fits(p: Partition, box: Box) -> bool:
    rows, cols = box
    return len(p) <= rows and (not p or p[0] <= cols)


def _basis_key(p: Partition) -> tuple[int, tuple[int, ...]]:
    return (weight(p), tuple(-x for x in p))


@lru_cache(maxsize=None)
def _basis_product(box: Box, eps: Partition, nu: Partition) -> tuple[tuple[Partition, int], ...]:
    rows, cols = box
    out = []
    for mu in partitions_of_weight(weight(eps) + weight(nu), cols):
        if len(mu) > rows:
            continue
        c = lr_coefficient(mu, eps, nu)
        if c:
            out.append((mu, c))
    return tuple(sorted(out, key=lambda item: _basis_key(item[0])))


@dataclass(frozen=True)
class BoxedSchurElement:
    """Integer combination of Schur classes inside a fixed box."""

    box: Box
    coeffs: tuple[tuple[Partition, int], ...] = ()

    def __post_init__(self) -> None:
        rows, cols = self.box
        if rows < 0 or cols < 0:
            raise DomainError(f"box dimensions must be nonnegative, got {self.box}")
        acc: dict[Partition, int] = {}
        for p, c in self.coeffs:
            p = as_partition(p)
            if not _fits(p, self.box):
                raise DomainError(f"partition {p} does not fit in box {self.box}")
            acc[p] = acc.get(p, 0) + int(c)
        cleaned = tuple(
            sorted(((p, c) for p, c in acc.items() if c), key=lambda item: _basis_key(item[0]))
        )
        object.__setattr__(self, "coeffs", cleaned)

    # -- constructors --------------------------------------------------------

    @staticmethod
    def zero(box: Box) -> "BoxedSchurElement":
        return BoxedSchurElement(box, ())

    @staticmethod
    def one(box: Box) -> "BoxedSchurElement":
        return BoxedSchurElement(box, (((), 1),))

    @staticmethod
    def basis(box: Box, mu: Partition) -> "BoxedSchurElement":
        return BoxedSchurElement(box, ((as_partition(mu), 1),))

    # -- queries ---------------------------------------------------------------

    def coeff(self, mu: Partition) -> int:
        mu = as_partition(mu)
        for p, c in self.coeffs:
            if p == mu:
                return c
        return 0

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    # -- arithmetic --------------------------------------------------------------

    def _check_box(self, other: "BoxedSchurElement") -> None:
        if self.box != other.box:
            raise ContextError(f"box mismatch: {self.box} vs {other.box}")

    def __add__(self, other: "BoxedSchurElement") -> "BoxedSchurElement":
        self._check_box(other)
        return BoxedSchurElement(self.box, self.coeffs + other.coeffs)

    def __neg__(self) -> "BoxedSchurElement":
        return BoxedSchurElement(self.box, tuple((p, -c) for p, c in self.coeffs))

    def __sub__(self, other: "BoxedSchurElement") -> "BoxedSchurElement":
        return self + (-other)

    def __mul__(self, other: "BoxedSchurElement | int") -> "BoxedSchurElement":
        if isinstance(other, int):
            return BoxedSchurElement(
                self.box, tuple((p, c * other) for p, c in self.coeffs)
            )
        self._check_box(other)
        acc: dict[Partition, int] = {}
        for p1, c1 in self.coeffs:
            for p2, c2 in other.coeffs:
                for mu, c in _basis_product(self.box, p1, p2):
                    acc[mu] = acc.get(mu, 0) + c1 * c2 * c
        return BoxedSchurElement(self.box, tuple(acc.items()))

    __rmul__ = __mul__

    def to_text(self) -> str:
        if not self.coeffs:
            return "0"
        pieces = []
        for k, (p, c) in enumerate(self.coeffs):
            body = f"s{list(p)}" if abs(c) == 1 else f"{abs(c)}*s{list(p)}"
            if k == 0:
                pieces.append(body if c > 0 else f"-{body}")
            else:
                pieces.append(f"+ {body}" if c > 0 else f"- {body}")
        return " ".join(pieces)

    def __repr__(self) -> str:
        return f"<BoxedSchur {self.box} {self.to_text()}>"


def schur_multiply(a: BoxedSchurElement, b: BoxedSchurElement) -> BoxedSchurElement:
    """Product in the boxed Schur basis (LR expansion, box truncation)."""
    return a * b


def _validate_grassmannian(m: int, n: int) -> None:
    if not 1 <= m < n:
        raise DomainError(f"need 1 <= m < n, got m={m}, n={n}")


def _presentation_ring(m: int, n: int) -> PolyRing:
    r = max(m, n - m)
    return PolyRing([Variable(f"c{k}", k) for k in range(1, r + 1)], trunc=n)


def _generator_series(ring: PolyRing) -> TotalChern:
    return TotalChern(
        ring, [ring.one] + [ring.var(v.name) for v in ring.variables]
    )


def chern_relations(m: int, n: int) -> list[GradedPoly]:
    """Relation polynomials f_{n-r+1}..f_n in c_1..c_r (r = max(m, n-m)):
    coefficients of the inverse of 1 + c_1 t + ... + c_r t^r, which express
    that the complementary tautological bundle has rank n - r."""
    _validate_grassmannian(m, n)
    ring = _presentation_ring(m, n)
    inv = _generator_series(ring).invert()
    r = len(ring.variables)
    return [inv.coefficient(j) for j in range(n - r + 1, n + 1)]


def boxed_rank(m: int, n: int) -> int:
    """Z-rank of the boxed Schur model of Gr(m, n)."""
    _validate_grassmannian(m, n)
    return len(partitions_in_box(n - m, m))


def verify_presentation(m: int, n: int) -> dict:
    """Check the polynomial presentation against the Schur-basis model.

    (a) every relation evaluates to zero under c_k -> c_k(Q) or c_k(S);
    (b) the model rank equals binom(n, m);
    (c) the total Chern series of the generators times that of the
        complementary bundle (read off the inverse series) is exactly 1
        in the model, through degree n.
    """
    _validate_grassmannian(m, n)
    rows, cols = n - m, m
    box: Box = (rows, cols)
    ring = _presentation_ring(m, n)
    r = len(ring.variables)
    use_sub = m > n - m

    def generator_image(k: int) -> BoxedSchurElement:
        if use_sub:
            el = BoxedSchurElement.basis(box, (k,))
            return -el if k % 2 else el
        return BoxedSchurElement.basis(box, (1,) * k)

    one = BoxedSchurElement.one(box)
    assignment = {f"c{k}": generator_image(k) for k in range(1, r + 1)}
    relations = chern_relations(m, n)
    relations_vanish = all(
        f.evaluate(assignment, one).is_zero() for f in relations
    )

    rank = boxed_rank(m, n)
    rank_matches = rank == comb(n, m)

    inv = _generator_series(ring).invert()
    comp_rank = n - r
    gen_classes = [one] + [generator_image(k) for k in range(1, r + 1)]
    comp_classes = [
        inv.coefficient(b).evaluate(assignment, one) for b in range(comp_rank + 1)
    ]
    series_inverse = True
    for j in range(1, n + 1):
        acc = BoxedSchurElement.zero(box)
        for a in range(max(0, j - comp_rank), min(j, r) + 1):
            acc = acc + gen_classes[a] * comp_classes[j - a]
        if not acc.is_zero():
            series_inverse = False
            break

    return {
        "generators": [v.name for v in ring.variables],
        "relations": [f.to_json() for f in relations],
        "rank": rank,
        "checks": {
            "relations_vanish": relations_vanish,
            "rank_matches": rank_matches,
            "series_inverse": series_inverse,
        },
    }
