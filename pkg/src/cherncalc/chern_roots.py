"""Formal bundle classes under the splitting principle.

A class is a formal difference of multisets of *line elements*; each line
element is a Z-linear combination of degree-1 root variables u_1, u_2, ...
(the empty combination is the trivial line).  Tensoring lines adds their
root combinations, duals negate them, and the total Chern series of a class
is the product of (1 + c_1(L) t) over the positive lines divided by the
same product over the negative lines, truncated at a configured degree.

Lambda operations are subset sums on effective classes and extend to
virtual classes through the series quotient; Schur operations are the
lambda determinants det(lambda^{mu_i + j - i}).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache, reduce

from .bigpoly import GradedPoly, PolyRing, TotalChern, Variable, elementary_symmetric_reduce
from .errors import DomainError
from .partitions import Partition, as_partition, lr_coefficient, partitions_of_weight, weight


def u_ring(n: int, trunc: int = 8) -> PolyRing:
    """Polynomial ring on root variables u1..un, each of degree 1."""
    return PolyRing([Variable(f"u{i+1}") for i in range(n)], trunc)


@dataclass(frozen=True)
class LineElement:
    """A line: formal Z-combination of root variables (empty = trivial)."""

    coeffs: tuple[tuple[int, int], ...] = ()

    def __post_init__(self) -> None:
        cleaned = tuple(sorted((i, c) for i, c in self.coeffs if c))
        if any(i < 0 for i, _ in cleaned):
            raise ValueError("root indices must be nonnegative")
        object.__setattr__(self, "coeffs", cleaned)

    @staticmethod
    def trivial() -> "LineElement":
        return LineElement(())

    @staticmethod
    def primitive(i: int) -> "LineElement":
        return LineElement(((i, 1),))

    @staticmethod
    def from_vector(vec: "list[int] | tuple[int, ...]") -> "LineElement":
        return LineElement(tuple((i, c) for i, c in enumerate(vec) if c))

    def tensor(self, other: "LineElement") -> "LineElement":
        acc = dict(self.coeffs)
        for i, c in other.coeffs:
            acc[i] = acc.get(i, 0) + c
        return LineElement(tuple(acc.items()))

    def inverse(self) -> "LineElement":
        return LineElement(tuple((i, -c) for i, c in self.coeffs))

    def span(self) -> int:
        return self.coeffs[-1][0] + 1 if self.coeffs else 0

    def to_vector(self, n: int) -> list[int]:
        vec = [0] * n
        for i, c in self.coeffs:
            vec[i] = c
        return vec

    def c1(self, ring: PolyRing) -> GradedPoly:
        """First Chern class: the degree-1 combination of root variables."""
        acc = ring.zero
        for i, c in self.coeffs:
            acc = acc + c * ring.var(f"u{i+1}")
        return acc


def line(*pairs: tuple[int, int]) -> LineElement:
    return LineElement(tuple(pairs))


@dataclass(frozen=True)
class KClass:
    """Formal difference of line multisets; the canonical form keeps both
    sides sorted and cancels lines common to both, so equality is equality
    in the group ring on line elements."""

    pos: tuple[LineElement, ...] = ()
    neg: tuple[LineElement, ...] = ()

    def __post_init__(self) -> None:
        pos = sorted(self.pos, key=lambda le: le.coeffs)
        neg = sorted(self.neg, key=lambda le: le.coeffs)
        i = j = 0
        keep_pos: list[LineElement] = []
        keep_neg: list[LineElement] = []
        while i < len(pos) and j < len(neg):
            if pos[i].coeffs == neg[j].coeffs:
                i += 1
                j += 1
            elif pos[i].coeffs < neg[j].coeffs:
                keep_pos.append(pos[i])
                i += 1
            else:
                keep_neg.append(neg[j])
                j += 1
        keep_pos.extend(pos[i:])
        keep_neg.extend(neg[j:])
        object.__setattr__(self, "pos", tuple(keep_pos))
        object.__setattr__(self, "neg", tuple(keep_neg))

    # -- constructors ----------------------------------------------------------

    @staticmethod
    def zero() -> "KClass":
        return KClass((), ())

    @staticmethod
    def unit() -> "KClass":
        return KClass((LineElement.trivial(),), ())

    @staticmethod
    def of_line(le: LineElement) -> "KClass":
        return KClass((le,), ())

    @staticmethod
    def sum_of_lines(lines: "list[LineElement] | tuple[LineElement, ...]") -> "KClass":
        return KClass(tuple(lines), ())

    # -- ring structure ----------------------------------------------------------

    @property
    def rank(self) -> int:
        return len(self.pos) - len(self.neg)

    def root_span(self) -> int:
        spans = [le.span() for le in self.pos + self.neg]
        return max(spans, default=0)

    def is_zero(self) -> bool:
        return not self.pos and not self.neg

    def is_effective(self) -> bool:
        return not self.neg

    def __add__(self, other: "KClass") -> "KClass":
        return KClass(self.pos + other.pos, self.neg + other.neg)

    def __neg__(self) -> "KClass":
        return KClass(self.neg, self.pos)

    def __sub__(self, other: "KClass") -> "KClass":
        return self + (-other)

    def tensor(self, other: "KClass") -> "KClass":
        pos: list[LineElement] = []
        neg: list[LineElement] = []
        for a in self.pos:
            for b in other.pos:
                pos.append(a.tensor(b))
            for b in other.neg:
                neg.append(a.tensor(b))
        for a in self.neg:
            for b in other.pos:
                neg.append(a.tensor(b))
            for b in other.neg:
                pos.append(a.tensor(b))
        return KClass(tuple(pos), tuple(neg))

    def __mul__(self, other: "KClass | int") -> "KClass":
        if isinstance(other, int):
            if other >= 0:
                return KClass(self.pos * other, self.neg * other)
            return KClass(self.neg * -other, self.pos * -other)
        return self.tensor(other)

    __rmul__ = __mul__

    # -- serialization ----------------------------------------------------------

    def to_json(self, roots: int | None = None) -> dict:
        n = self.root_span() if roots is None else roots
        return {
            "pos": [le.to_vector(n) for le in self.pos],
            "neg": [le.to_vector(n) for le in self.neg],
        }

    @staticmethod
    def from_json(obj: dict) -> "KClass":
        pos = tuple(LineElement.from_vector(v) for v in obj.get("pos", ()))
        neg = tuple(LineElement.from_vector(v) for v in obj.get("neg", ()))
        return KClass(pos, neg)


def tensor(x: KClass, y: KClass) -> KClass:
    return x.tensor(y)


def dual(x: KClass) -> KClass:
    """Dual class: every line is replaced by its inverse."""
    return KClass(
        tuple(le.inverse() for le in x.pos),
        tuple(le.inverse() for le in x.neg),
    )


def total_chern(x: KClass, trunc: int = 8, roots: int | None = None) -> TotalChern:
    """Total Chern series of a class: the Whitney product over positive
    lines times the inverted product over negative lines."""
    n = x.root_span() if roots is None else roots
    if n < x.root_span():
        raise DomainError(f"class uses {x.root_span()} roots, only {n} provided")
    ring = u_ring(n, trunc)
    num = TotalChern.one(ring)
    for le in x.pos:
        num = num * TotalChern(ring, [ring.one, le.c1(ring)], check=False)
    if x.neg:
        den = TotalChern.one(ring)
        for le in x.neg:
            den = den * TotalChern(ring, [ring.one, le.c1(ring)], check=False)
        num = num * den.invert()
    return num


@lru_cache(maxsize=65536)
def lambda_k(k: int, x: KClass) -> KClass:
    """k-th lambda operation.  On an effective class, the sum over
    k-element sub-multisets of tensor products of their lines; on virtual
    classes, extended by the series quotient
    lambda_t(F - G) = lambda_t(F) / lambda_t(G)."""
    if k < 0:
        raise DomainError("lambda index must be nonnegative")
    if k == 0:
        return KClass.unit()
    if not x.neg:
        lines = [
            reduce(LineElement.tensor, subset, LineElement.trivial())
            for subset in itertools.combinations(x.pos, k)
        ]
        return KClass.sum_of_lines(lines)
    effective = KClass(x.pos, ())
    acc = lambda_k(k, effective)
    g = KClass(x.neg, ())
    for j in range(1, min(k, len(x.neg)) + 1):
        acc = acc - lambda_k(j, g).tensor(lambda_k(k - j, x))
    return acc


def schur_op(mu: Partition, x: KClass) -> KClass:
    """Schur operation S^mu(x) = det(lambda^{mu_i + j - i}(x))."""
    mu = as_partition(mu)
    n = len(mu)
    if n == 0:
        return KClass.unit()
    acc = KClass.zero()
    for sigma in itertools.permutations(range(n)):
        indices = [mu[i] + sigma[i] - i for i in range(n)]
        if any(a < 0 for a in indices):
            continue
        inversions = sum(
            1 for i in range(n) for j in range(i + 1, n) if sigma[i] > sigma[j]
        )
        term = reduce(KClass.tensor, (lambda_k(a, x) for a in indices), KClass.unit())
        acc = acc + (term if inversions % 2 == 0 else -term)
    return acc


def schur_skew_op(mu: Partition, eps: Partition, x: KClass) -> KClass:
    """Skew Schur operation S^{mu/eps}(x) = sum_nu c^mu_{eps,nu} S^nu(x)."""
    mu = as_partition(mu)
    eps = as_partition(eps)
    w = weight(mu) - weight(eps)
    if w < 0:
        return KClass.zero()
    acc = KClass.zero()
    for nu in partitions_of_weight(w):
        c = lr_coefficient(mu, eps, nu)
        if c:
            acc = acc + c * schur_op(nu, x)
    return acc


def character(x: KClass, ring: PolyRing) -> GradedPoly:
    """Oracle map into a polynomial ring with one variable per root: a line
    with combination sum(a_j u_j) becomes the monomial prod x_j^{a_j}.
    Requires nonnegative root coefficients and enough truncation headroom
    to represent every monomial exactly."""
    n = len(ring.variables)
    acc = ring.zero
    for sign, lines in ((1, x.pos), (-1, x.neg)):
        for le in lines:
            if any(c < 0 for _, c in le.coeffs):
                raise DomainError("character requires nonnegative root coefficients")
            degree = sum(c for _, c in le.coeffs)
            if degree > ring.trunc:
                raise DomainError("ring truncation too small for exact character")
            if le.span() > n:
                raise DomainError("ring has fewer variables than the class has roots")
            exps = [0] * n
            for i, c in le.coeffs:
                exps[i] = c
            acc = acc + ring.monomial(exps, sign)
    return acc


def universal_tensor_poly(n: int, m: int, i: int) -> GradedPoly:
    """Degree-i Chern class of (rank n) tensor (rank m) as a universal
    polynomial in the Chern classes of the two factors, written in
    variables cF1.. and cG1.. of grading weight k."""
    if n < 1 or m < 1 or i < 1:
        raise DomainError("universal tensor polynomial needs n, m, i >= 1")
    ring = u_ring(n + m, i)
    x = KClass.sum_of_lines(
        [
            LineElement.primitive(a).tensor(LineElement.primitive(n + b))
            for a in range(n)
            for b in range(m)
        ]
    )
    ci = total_chern(x, trunc=i, roots=n + m).coefficient(i)
    groups = [[f"u{a+1}" for a in range(n)], [f"u{n+b+1}" for b in range(m)]]
    return elementary_symmetric_reduce(ci, groups, prefixes=["cF", "cG"])


def chern_of_lambda(k: int, n: int, i: int) -> GradedPoly:
    """Degree-i Chern class of lambda^k of a rank-n bundle as a universal
    polynomial in c1..cn (variables named c1, c2, ...)."""
    if not 0 <= k <= n:
        raise DomainError("need 0 <= k <= n")
    if i < 1:
        raise DomainError("need i >= 1")
    ring = u_ring(n, i)
    lam = lambda_k(k, KClass.sum_of_lines([LineElement.primitive(a) for a in range(n)]))
    ci = total_chern(lam, trunc=i, roots=n).coefficient(i)
    return elementary_symmetric_reduce(ci, [[f"u{a+1}" for a in range(n)]], prefixes=["c"])
