"""Gamma operations and the multiplicative filtration on split classes.

The augmentation ideal I is the kernel of the rank map.  Writing every line
L = prod L_j^{a_j} as prod (1 + v_j)^{a_j} in variables v_j = L_j - 1 turns
a rank-zero class into a polynomial with zero constant term, and the i-th
filtration step becomes exactly I^i (polynomials of lowest degree >= i):
this holds because gamma^j(L - 1) = 0 for every line L and j >= 2, so the
filtration generators in each degree are products of the v_j themselves.

gamma^i(x) = lambda^i(x + (i-1)) on classes; the series gamma_t = sum
gamma^i t^i is computed coefficient-wise in the v-variables through the
lambda series via gamma_t = lambda_{t/(1-t)}, i.e.

    gamma^n(x) = sum_{j=1..n} binom(n-1, j-1) * lambda^j(x)   (n >= 1),

which avoids expanding any virtual lambda recursion per coefficient.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from math import comb

from .bigpoly import GradedPoly, PolyRing, TotalChern, Variable
from .chern_roots import KClass, LineElement, dual, lambda_k
from .errors import CalculusError, DomainError


def v_ring(n: int, trunc: int = 8) -> PolyRing:
    """Polynomial ring on the shifted line generators v1..vn (v_j = L_j - 1)."""
    return PolyRing([Variable(f"v{i+1}") for i in range(n)], trunc)


def _one_plus_v_power(ring: PolyRing, index: int, exponent: int) -> GradedPoly:
    """(1 + v_index)^exponent, truncated; negative exponents expand the
    geometric series (1 + v)^-1 = 1 - v + v^2 - ... before powering."""
    v = ring.var(f"v{index+1}")
    if exponent >= 0:
        return (ring.one + v) ** exponent
    inv = ring.one
    power = ring.one
    for _ in range(ring.trunc):
        power = power * -v
        if power.is_zero():
            break
        inv = inv + power
    return inv ** (-exponent)


def line_expansion(le: LineElement, ring: PolyRing) -> GradedPoly:
    """Value of a line in the v-variables: prod (1 + v_j)^{a_j}."""
    acc = ring.one
    for i, c in le.coeffs:
        acc = acc * _one_plus_v_power(ring, i, c)
    return acc


def class_expansion(x: KClass, ring: PolyRing) -> GradedPoly:
    """Value of a class in the v-variables (constant term = rank)."""
    acc = ring.zero
    for le in x.pos:
        acc = acc + line_expansion(le, ring)
    for le in x.neg:
        acc = acc - line_expansion(le, ring)
    return acc


def _ring_for(x: KClass, trunc: int, roots: int | None) -> PolyRing:
    n = x.root_span() if roots is None else roots
    if n < x.root_span():
        raise DomainError(f"class uses {x.root_span()} roots, only {n} provided")
    return v_ring(n, trunc)


def augmentation_expand(x: KClass, trunc: int = 8, roots: int | None = None) -> GradedPoly:
    """x - rank(x) as a polynomial in the v-variables.  Its lowest total
    degree is the filtration degree of the rank-zero part of x."""
    ring = _ring_for(x, trunc, roots)
    return class_expansion(x, ring) - x.rank


def filtration_degree(x: KClass, trunc: int = 8, roots: int | None = None) -> int | float:
    """Largest i with x in I^i.  Classes of nonzero rank lie outside the
    augmentation ideal, hence in degree 0; for rank-zero classes the degree
    is the lowest total degree of the augmentation expansion.  Returns
    math.inf for the zero expansion — in particular for anything vanishing
    above the truncation degree, so callers probing deep classes should
    raise ``trunc``."""
    if x.rank != 0:
        return 0
    low = augmentation_expand(x, trunc, roots).min_wdeg()
    return math.inf if low is None else low


def gamma_op(i: int, x: KClass) -> KClass:
    """gamma^i(x) = lambda^i(x + (i-1) trivial lines)."""
    if i < 0:
        raise DomainError("gamma index must be nonnegative")
    if i == 0:
        return KClass.unit()
    return lambda_k(i, x + (i - 1) * KClass.unit())


def lambda_series(x: KClass, trunc: int = 8, roots: int | None = None) -> TotalChern:
    """lambda_t(x) expanded in the v-variables: the product of (1 + ell t)
    over positive lines divided by the same over negative lines, where ell
    is the line's value prod (1 + v_j)^{a_j}."""
    ring = _ring_for(x, trunc, roots)
    num = TotalChern.one(ring)
    for le in x.pos:
        num = num * TotalChern(ring, [ring.one, line_expansion(le, ring)], check=False)
    if x.neg:
        den = TotalChern.one(ring)
        for le in x.neg:
            den = den * TotalChern(ring, [ring.one, line_expansion(le, ring)], check=False)
        num = num * den.invert()
    return num


def gamma_series(x: KClass, trunc: int = 8, roots: int | None = None) -> TotalChern:
    """gamma_t(x) as a truncated series with v-variable coefficients."""
    lam = lambda_series(x, trunc, roots)
    ring = lam.ring
    out = [ring.one]
    for n in range(1, trunc + 1):
        acc = ring.zero
        for j in range(1, n + 1):
            fj = lam.coefficient(j)
            if fj.is_zero():
                continue
            acc = acc + comb(n - 1, j - 1) * fj
        out.append(acc)
    return TotalChern(ring, out, check=False)


@dataclass(frozen=True)
class GammaGradedClass:
    """Degree-i piece of the associated graded ring I^i/I^{i+1}: a
    homogeneous degree-i polynomial in the v-variables."""

    degree: int
    representative: GradedPoly

    def __post_init__(self) -> None:
        if self.degree < 0:
            raise DomainError("graded degree must be nonnegative")
        if not self.representative.is_homogeneous_of(self.degree):
            raise DomainError(
                f"representative is not homogeneous of degree {self.degree}"
            )

    def is_zero(self) -> bool:
        return self.representative.is_zero()

    def to_json(self) -> dict:
        return {"degree": self.degree, "representative": self.representative.to_json()}


def gamma_chern(i: int, x: KClass, roots: int | None = None) -> GammaGradedClass:
    """Degree-i Chern class of an effective class in the associated graded
    ring, computed as (-1)^i gamma^i(dual(x) - rank(x)).

    The sign pairs the dual (which realizes c_j on lines with the right
    orientation, c_1(L) ~ v_L) with the grading: on a split bundle with
    lines L_1..L_n the result is the i-th elementary symmetric polynomial
    in v_1..v_n, matching c_i under the degree-i identification u_j ~ v_j,
    and it vanishes identically for i > n.
    """
    if i < 0:
        raise DomainError("chern degree must be nonnegative")
    if not x.is_effective():
        raise DomainError("graded chern classes are defined for effective classes")
    ring = _ring_for(x, max(i, 1), roots)
    if i == 0:
        return GammaGradedClass(0, ring.one)
    z = gamma_op(i, dual(x) - x.rank * KClass.unit())
    expansion = class_expansion(z, ring)
    low = expansion.min_wdeg()
    if low is not None and low < i:
        raise CalculusError(
            f"gamma^{i} left the filtration: expansion has degree-{low} terms"
        )
    rep = expansion.homogeneous_component(i)
    if i % 2:
        rep = -rep
    return GammaGradedClass(i, rep)
