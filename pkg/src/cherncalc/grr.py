"""Verification harness for the denominator-free comparison maps.

The split model writes a class of filtration degree >= i as an integer
combination of products prod_j (L_j - 1).  Three exact statements are
checked here at a configurable truncation degree:

* vanishing: c_k of an (i+1)-fold product (L_1-1)...(L_{i+1}-1) is zero
  for 0 < k <= i;
* factor: c_i of an i-fold product is (-1)^{i-1} (i-1)! u_1...u_i;
* composition: transporting between degree-i Chern polynomials (in the
  root classes u_j) and degree-i graded pieces (monomials in v_j = L_j - 1)
  and coming back — in either order — multiplies by (-1)^{i-1} (i-1)!.

Reports carry the exact expected and actual polynomials; a report passes
exactly when the two are equal.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, replace
from functools import reduce
from math import factorial
from typing import Iterable

from .bigpoly import GradedPoly
from .chern_roots import KClass, LineElement, total_chern, u_ring
from .errors import DomainError
from .gamma import augmentation_expand, filtration_degree, v_ring


@dataclass(frozen=True)
class VerificationReport:
    """One exact check: passes iff expected == actual as polynomials."""

    case: str
    inputs: dict
    expected: GradedPoly
    actual: GradedPoly

    @property
    def passed(self) -> bool:
        return self.expected == self.actual

    def to_json(self) -> dict:
        return {
            "case": self.case,
            "inputs": self.inputs,
            "expected": self.expected.to_json(),
            "actual": self.actual.to_json(),
            "pass": self.passed,
        }


def grr_constant(i: int) -> int:
    """The multiplier (-1)^(i-1) * (i-1)!."""
    sign = 1 if (i - 1) % 2 == 0 else -1
    return sign * factorial(i - 1)


def monomial_class(indices: Iterable[int]) -> KClass:
    """The product prod_j ([L_j] - 1) over the given root indices
    (repeats allowed), expanded into a virtual class."""
    factors = [
        KClass.of_line(LineElement.primitive(j)) - KClass.unit() for j in indices
    ]
    return reduce(KClass.tensor, factors, KClass.unit())


def verify_vanishing(i: int, trunc: int | None = None) -> list[VerificationReport]:
    """c_k of the (i+1)-fold product vanishes for all 0 < k <= i."""
    if i < 1:
        raise DomainError("vanishing check needs i >= 1")
    D = i + 2 if trunc is None else trunc
    n = i + 1
    x = monomial_class(range(n))
    series = total_chern(x, trunc=D, roots=n)
    zero = u_ring(n, D).zero
    return [
        VerificationReport(
            case=f"vanishing[i={i},k={k}]",
            inputs={"i": i, "lines": len(x.pos) + len(x.neg), "degree": D},
            expected=zero,
            actual=series.coefficient(k),
        )
        for k in range(1, i + 1)
    ]


def verify_factor(i: int, trunc: int | None = None) -> VerificationReport:
    """c_i of the i-fold product is (-1)^(i-1) (i-1)! u_1...u_i."""
    if i < 1:
        raise DomainError("factor check needs i >= 1")
    D = i + 2 if trunc is None else trunc
    x = monomial_class(range(i))
    ring = u_ring(i, D)
    expected = ring.monomial([1] * i, grr_constant(i))
    actual = total_chern(x, trunc=D, roots=i).coefficient(i)
    return VerificationReport(
        case=f"factor[i={i}]",
        inputs={"i": i, "lines": len(x.pos) + len(x.neg), "degree": D},
        expected=expected,
        actual=actual,
    )


def class_from_v_monomials(w: GradedPoly) -> KClass:
    """Representative class for a polynomial in the v-variables: each
    monomial v_{j1}...v_{ji} lifts to (L_{j1}-1)...(L_{ji}-1)."""
    acc = KClass.zero()
    for exps, coeff in w.sorted_terms():
        indices = [j for j, e in enumerate(exps) for _ in range(e)]
        acc = acc + coeff * monomial_class(indices)
    return acc


def verify_grr_composition(
    i: int,
    x: KClass,
    trunc: int | None = None,
    roots: int | None = None,
) -> list[VerificationReport]:
    """Both composition round-trips on a class of filtration degree >= i.

    Graded side first: the degree-i piece w of the augmentation expansion
    lifts to a representative class, whose degree-i Chern class transported
    along u_j -> v_j must be grr_constant(i) * w.  Chern side first: the
    degree-i Chern polynomial p of x transports to a degree-i graded piece,
    lifts, and its Chern class must be grr_constant(i) * p.
    """
    if i < 1:
        raise DomainError("composition check needs i >= 1")
    D = i + 2 if trunc is None else trunc
    if D < i:
        raise DomainError(f"truncation {D} cannot see degree {i}")
    n = x.root_span() if roots is None else roots
    if filtration_degree(x, D, n) < i:
        raise DomainError(f"class has filtration degree < {i}")
    N = grr_constant(i)
    ur = u_ring(n, D)
    vr = v_ring(n, D)
    u_to_v = {f"u{j+1}": f"v{j+1}" for j in range(n)}
    inputs = {"i": i, "lines": len(x.pos) + len(x.neg), "degree": D}

    w = augmentation_expand(x, D, n).homogeneous_component(i)
    rep = class_from_v_monomials(w)
    chern_of_rep = total_chern(rep, trunc=D, roots=n).coefficient(i)
    graded_first = VerificationReport(
        case=f"compose[gr->B->gr,i={i}]",
        inputs=inputs,
        expected=N * w,
        actual=chern_of_rep.rename(u_to_v, vr),
    )

    p = total_chern(x, trunc=D, roots=n).coefficient(i)
    lifted = class_from_v_monomials(p.rename(u_to_v, vr))
    chern_first = VerificationReport(
        case=f"compose[B->gr->B,i={i}]",
        inputs=inputs,
        expected=N * p,
        actual=total_chern(lifted, trunc=D, roots=n).coefficient(i),
    )
    return [graded_first, chern_first]


def random_filtered_combination(
    rng: random.Random,
    i: int,
    roots: int = 6,
    max_pieces: int = 3,
    coeff_bound: int = 3,
) -> KClass:
    """Seeded integer combination of degree-i monomial classes — the test
    inputs for the composition checks beyond single generators."""
    pieces = rng.randint(2, max(2, max_pieces))
    acc = KClass.zero()
    for _ in range(pieces):
        indices = sorted(rng.choices(range(roots), k=i))
        coeff = rng.choice([c for c in range(-coeff_bound, coeff_bound + 1) if c])
        acc = acc + coeff * monomial_class(indices)
    return acc


def run_verification(
    max_i: int = 5,
    trunc: int | None = None,
    seed: int = 0,
    roots: int = 6,
) -> list[VerificationReport]:
    """Batch harness: for each i up to max_i run the vanishing and factor
    checks, plus both compositions on the canonical generator and on one
    seeded random combination (whose reports record the seed)."""
    if max_i < 1:
        raise DomainError("max_i must be >= 1")
    rng = random.Random(seed)
    reports: list[VerificationReport] = []
    for i in range(1, max_i + 1):
        reports.extend(verify_vanishing(i, trunc))
        reports.append(verify_factor(i, trunc))
        reports.extend(verify_grr_composition(i, monomial_class(range(i)), trunc))
        combo = random_filtered_combination(rng, i, roots=roots)
        reports.extend(
            replace(r, inputs={**r.inputs, "seed": seed})
            for r in verify_grr_composition(i, combo, trunc, roots=roots)
        )
    return reports
