"""Exact sparse multivariate polynomials over arbitrary-precision integers,
graded by per-variable weights and truncated at a fixed total weighted degree.

A polynomial is a dictionary mapping exponent tuples (one entry per ring
variable) to nonzero ``int`` coefficients.  Every term whose weighted degree
exceeds the ring's truncation bound is dropped on construction, so the ring
behaves like Z[x_1,...,x_n] / (terms of degree > D).  All arithmetic is exact.

Terms are kept in a canonical graded-lexicographic order (ascending total
weighted degree, then descending exponent tuple) for printing, serialization
and equality of rendered forms.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Iterable, Iterator, Mapping, Sequence, TypeVar

from .errors import ContextError, DegreeError, SymmetryError

Exponents = tuple[int, ...]

T = TypeVar("T")


@dataclass(frozen=True)
class Variable:
    """A named generator with a positive grading weight."""

    name: str
    degree: int = 1

    def __post_init__(self) -> None:
        if not self.name:
            raise ValueError("variable name must be nonempty")
        if self.degree < 1:
            raise ValueError(f"variable degree must be >= 1, got {self.degree}")


def _as_variable(spec: Variable | tuple[str, int] | str) -> Variable:
    if isinstance(spec, Variable):
        return spec
    if isinstance(spec, str):
        return Variable(spec)
    name, degree = spec
    return Variable(name, degree)


class PolyRing:
    """Ring context: an ordered tuple of graded variables plus a truncation
    degree.  Two rings compare equal when their variables and truncation
    agree, so independently constructed contexts are interoperable."""

    __slots__ = ("variables", "trunc", "_index", "_hash")

    def __init__(self, variables: Iterable[Variable | tuple[str, int] | str], trunc: int = 8):
        vs = tuple(_as_variable(v) for v in variables)
        names = [v.name for v in vs]
        if len(set(names)) != len(names):
            raise ValueError(f"duplicate variable names in {names}")
        if trunc < 1:
            raise ValueError(f"truncation degree must be >= 1, got {trunc}")
        self.variables = vs
        self.trunc = trunc
        self._index = {v.name: i for i, v in enumerate(vs)}
        self._hash = hash((vs, trunc))

    @property
    def names(self) -> tuple[str, ...]:
        return tuple(v.name for v in self.variables)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, PolyRing):
            return NotImplemented
        return self.variables == other.variables and self.trunc == other.trunc

    def __hash__(self) -> int:
        return self._hash

    def __repr__(self) -> str:
        vs = ", ".join(
            v.name if v.degree == 1 else f"{v.name}:{v.degree}" for v in self.variables
        )
        return f"PolyRing([{vs}], trunc={self.trunc})"

    def index(self, name: str) -> int:
        try:
            return self._index[name]
        except KeyError:
            raise ContextError(f"variable {name!r} is not in {self!r}") from None

    def wdeg(self, exps: Exponents) -> int:
        """Total weighted degree of an exponent tuple."""
        return sum(e * v.degree for e, v in zip(exps, self.variables))

    def with_trunc(self, trunc: int) -> "PolyRing":
        return PolyRing(self.variables, trunc)

    # -- element constructors -------------------------------------------------

    @property
    def zero(self) -> "GradedPoly":
        return GradedPoly(self, {})

    @property
    def one(self) -> "GradedPoly":
        return GradedPoly(self, {(0,) * len(self.variables): 1})

    def const(self, c: int) -> "GradedPoly":
        return GradedPoly(self, {(0,) * len(self.variables): int(c)})

    def var(self, name: str) -> "GradedPoly":
        i = self.index(name)
        exps = [0] * len(self.variables)
        exps[i] = 1
        return GradedPoly(self, {tuple(exps): 1})

    def monomial(self, exps: Sequence[int], coeff: int = 1) -> "GradedPoly":
        return GradedPoly(self, {tuple(exps): int(coeff)})


class GradedPoly:
    """Immutable truncated graded polynomial with integer coefficients."""

    __slots__ = ("ring", "terms", "_hash")

    def __init__(self, ring: PolyRing, terms: Mapping[Exponents, int], *, _clean: bool = False):
        self.ring = ring
        if _clean:
            self.terms = dict(terms)
        else:
            n = len(ring.variables)
            cleaned: dict[Exponents, int] = {}
            for exps, coeff in terms.items():
                if len(exps) != n:
                    raise ValueError(f"exponent tuple {exps} has wrong length for {ring!r}")
                if any(e < 0 for e in exps):
                    raise ValueError(f"negative exponent in {exps}")
                if coeff == 0 or ring.wdeg(exps) > ring.trunc:
                    continue
                cleaned[tuple(exps)] = int(coeff)
            self.terms = cleaned
        self._hash: int | None = None

    # -- basic queries --------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def constant_term(self) -> int:
        return self.terms.get((0,) * len(self.ring.variables), 0)

    def min_wdeg(self) -> int | None:
        """Lowest weighted degree appearing, or None for the zero polynomial."""
        if not self.terms:
            return None
        return min(self.ring.wdeg(e) for e in self.terms)

    def max_wdeg(self) -> int | None:
        if not self.terms:
            return None
        return max(self.ring.wdeg(e) for e in self.terms)

    def homogeneous_component(self, d: int) -> "GradedPoly":
        wdeg = self.ring.wdeg
        return GradedPoly(
            self.ring, {e: c for e, c in self.terms.items() if wdeg(e) == d}, _clean=True
        )

    def is_homogeneous_of(self, d: int) -> bool:
        wdeg = self.ring.wdeg
        return all(wdeg(e) == d for e in self.terms)

    # -- arithmetic ------------------------------------------------------------

    def _check_ring(self, other: "GradedPoly") -> None:
        if self.ring != other.ring:
            raise ContextError(f"ring mismatch: {self.ring!r} vs {other.ring!r}")

    def __add__(self, other: "GradedPoly | int") -> "GradedPoly":
        if isinstance(other, int):
            other = self.ring.const(other)
        self._check_ring(other)
        terms = dict(self.terms)
        for e, c in other.terms.items():
            s = terms.get(e, 0) + c
            if s:
                terms[e] = s
            else:
                terms.pop(e, None)
        return GradedPoly(self.ring, terms, _clean=True)

    __radd__ = __add__

    def __neg__(self) -> "GradedPoly":
        return GradedPoly(self.ring, {e: -c for e, c in self.terms.items()}, _clean=True)

    def __sub__(self, other: "GradedPoly | int") -> "GradedPoly":
        if isinstance(other, int):
            other = self.ring.const(other)
        return self + (-other)

    def __rsub__(self, other: int) -> "GradedPoly":
        return self.ring.const(other) - self

    def __mul__(self, other: "GradedPoly | int") -> "GradedPoly":
        if isinstance(other, int):
            if other == 0:
                return self.ring.zero
            return GradedPoly(
                self.ring, {e: c * other for e, c in self.terms.items()}, _clean=True
            )
        self._check_ring(other)
        ring = self.ring
        trunc = ring.trunc
        wdeg = ring.wdeg
        # Precompute degrees once per operand term.
        left = [(e, wdeg(e), c) for e, c in self.terms.items()]
        right = [(e, wdeg(e), c) for e, c in other.terms.items()]
        out: dict[Exponents, int] = {}
        for e1, d1, c1 in left:
            room = trunc - d1
            for e2, d2, c2 in right:
                if d2 > room:
                    continue
                e = tuple(a + b for a, b in zip(e1, e2))
                s = out.get(e, 0) + c1 * c2
                if s:
                    out[e] = s
                else:
                    out.pop(e, None)
        return GradedPoly(ring, out, _clean=True)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "GradedPoly":
        if n < 0:
            raise ValueError("negative powers are not defined")
        result = self.ring.one
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    # -- structural ------------------------------------------------------------

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int):
            return self.terms == self.ring.const(other).terms
        if not isinstance(other, GradedPoly):
            return NotImplemented
        return self.ring == other.ring and self.terms == other.terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.ring, frozenset(self.terms.items())))
        return self._hash

    def sorted_terms(self) -> list[tuple[Exponents, int]]:
        """Terms in canonical order: ascending weighted degree, then
        descending exponent tuple (so u^2 precedes u*v precedes v^2)."""
        wdeg = self.ring.wdeg
        return sorted(
            self.terms.items(), key=lambda item: (wdeg(item[0]), tuple(-e for e in item[0]))
        )

    def in_ring(self, target: PolyRing) -> "GradedPoly":
        """Map into another ring by variable name.  Terms exceeding the
        target truncation are dropped; unknown variables raise."""
        n = len(target.variables)
        positions = [target.index(v.name) for v in self.ring.variables]
        for v, w in zip(self.ring.variables, (target.variables[p] for p in positions)):
            if v.degree != w.degree:
                raise ContextError(f"variable {v.name!r} changes degree between rings")
        out: dict[Exponents, int] = {}
        for exps, coeff in self.terms.items():
            e = [0] * n
            for p, x in zip(positions, exps):
                e[p] = x
            out[tuple(e)] = coeff
        return GradedPoly(target, out)

    def rename(self, mapping: Mapping[str, str], target: PolyRing) -> "GradedPoly":
        """Transport into ``target`` along a variable-name mapping."""
        n = len(target.variables)
        positions = [target.index(mapping.get(v.name, v.name)) for v in self.ring.variables]
        out: dict[Exponents, int] = {}
        for exps, coeff in self.terms.items():
            e = [0] * n
            for p, x in zip(positions, exps):
                e[p] = x
            out[tuple(e)] = coeff
        return GradedPoly(target, out)

    def evaluate(self, assignment: Mapping[str, T], one: T) -> T:
        """Evaluate by substituting ``assignment[name]`` for each variable.

        Values only need ``+`` and ``*`` among themselves and with ints
        (e.g. GradedPoly of another ring, BoxedSchurElement, plain int).
        Every ring variable must be assigned.
        """
        values = [assignment[v.name] for v in self.ring.variables]
        powers: list[dict[int, T]] = [{0: one, 1: v} for v in values]

        def power(i: int, n: int) -> T:
            cache = powers[i]
            if n not in cache:
                cache[n] = power(i, n - 1) * values[i]
            return cache[n]

        total: T | None = None
        for exps, coeff in self.sorted_terms():
            term: T = one * coeff
            for i, e in enumerate(exps):
                if e:
                    term = term * power(i, e)
            total = term if total is None else total + term
        if total is None:
            return one * 0
        return total

    # -- rendering -------------------------------------------------------------

    def to_text(self) -> str:
        """Canonical text form, e.g. ``1 - u^3`` or ``2*cF1 + 2*cG1``."""
        return render_terms(self.ring.names, self.sorted_terms())

    def to_json(self) -> dict:
        return {
            "vars": list(self.ring.names),
            "terms": [
                {"exps": list(exps), "coeff": str(coeff)}
                for exps, coeff in self.sorted_terms()
            ],
        }

    @staticmethod
    def from_json(ring: PolyRing, obj: Mapping) -> "GradedPoly":
        if tuple(obj.get("vars", ())) != ring.names:
            raise ContextError(
                f"serialized variables {obj.get('vars')} do not match ring {ring.names}"
            )
        terms: dict[Exponents, int] = {}
        for t in obj.get("terms", ()):
            exps = tuple(int(e) for e in t["exps"])
            terms[exps] = terms.get(exps, 0) + int(t["coeff"])
        return GradedPoly(ring, terms)

    def __repr__(self) -> str:
        return f"<GradedPoly {self.to_text()}>"


def render_terms(
    names: Sequence[str], terms: Iterable[tuple[Sequence[int], int]]
) -> str:
    """Render (exponents, coefficient) pairs, assumed already in display
    order, as ``1 - u^3`` / ``2*cF1 + 2*cG1`` style text."""
    pieces: list[str] = []
    for exps, coeff in terms:
        factors = [
            name if e == 1 else f"{name}^{e}" for name, e in zip(names, exps) if e
        ]
        mag = abs(coeff)
        if not factors:
            body = str(mag)
        elif mag == 1:
            body = "*".join(factors)
        else:
            body = "*".join([str(mag)] + factors)
        if not pieces:
            pieces.append(body if coeff > 0 else f"-{body}")
        else:
            pieces.append(f"+ {body}" if coeff > 0 else f"- {body}")
    return " ".join(pieces) if pieces else "0"


def poly_mul(a: GradedPoly, b: GradedPoly) -> GradedPoly:
    """Truncating product of two polynomials in the same ring."""
    return a * b


class TotalChern:
    """A truncated power series 1 + f_1 t + f_2 t^2 + ... whose coefficients
    are GradedPoly values in a fixed ring.  Genuine total Chern series have
    f_i homogeneous of weighted degree i, which the public constructor
    validates; series arithmetic preserves that shape."""

    __slots__ = ("ring", "coefficients")

    def __init__(self, ring: PolyRing, coefficients: Sequence[GradedPoly], *, check: bool = True):
        coeffs = list(coefficients)
        if not coeffs:
            coeffs = [ring.one]
        for f in coeffs:
            if f.ring != ring:
                raise ContextError("series coefficient from a different ring")
        if coeffs[0] != ring.one:
            raise ValueError("total Chern series must have constant term 1")
        del coeffs[ring.trunc + 1 :]
        while len(coeffs) > 1 and coeffs[-1].is_zero():
            coeffs.pop()
        if check:
            for i, f in enumerate(coeffs):
                if not f.is_homogeneous_of(i):
                    raise DegreeError(
                        f"coefficient of t^{i} is not homogeneous of weighted degree {i}"
                    )
        self.ring = ring
        self.coefficients = tuple(coeffs)

    @classmethod
    def one(cls, ring: PolyRing) -> "TotalChern":
        return cls(ring, [ring.one], check=False)

    def coefficient(self, i: int) -> GradedPoly:
        if 0 <= i < len(self.coefficients):
            return self.coefficients[i]
        return self.ring.zero

    def __iter__(self) -> Iterator[GradedPoly]:
        return iter(self.coefficients)

    def __len__(self) -> int:
        return len(self.coefficients)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, TotalChern):
            return NotImplemented
        return self.ring == other.ring and self.coefficients == other.coefficients

    def __hash__(self) -> int:
        return hash((self.ring, self.coefficients))

    def __mul__(self, other: "TotalChern") -> "TotalChern":
        if self.ring != other.ring:
            raise ContextError("series ring mismatch")
        bound = min(self.ring.trunc, len(self) + len(other) - 2)
        out = []
        for k in range(bound + 1):
            acc = self.ring.zero
            for i in range(max(0, k - len(other) + 1), min(k, len(self) - 1) + 1):
                acc = acc + self.coefficient(i) * other.coefficient(k - i)
            out.append(acc)
        return TotalChern(self.ring, out, check=False)

    def invert(self) -> "TotalChern":
        return series_invert(self)

    def to_json(self) -> dict:
        return {
            "degree": self.ring.trunc,
            "coefficients": [f.to_json() for f in self.coefficients],
        }

    def __repr__(self) -> str:
        body = " + ".join(
            f"({f.to_text()})*t^{i}" if i else f.to_text()
            for i, f in enumerate(self.coefficients)
        )
        return f"<series {body}>"


def series_invert(f: TotalChern) -> TotalChern:
    """Multiplicative inverse of a series with constant term 1, by the
    degree-by-degree recursion g_k = -sum_{j=1..k} f_j g_{k-j}."""
    ring = f.ring
    out: list[GradedPoly] = [ring.one]
    for k in range(1, ring.trunc + 1):
        acc = ring.zero
        for j in range(1, k + 1):
            fj = f.coefficient(j)
            if fj.is_zero():
                continue
            acc = acc + fj * out[k - j]
        out.append(-acc)
    return TotalChern(ring, out, check=False)


def tau_substitute(f: TotalChern, a: GradedPoly) -> TotalChern:
    """Substitute t -> t / (1 + a t) into the series, where ``a`` is a
    homogeneous degree-1 polynomial (or zero, which leaves f unchanged)."""
    ring = f.ring
    if a.ring != ring:
        raise ContextError("substitution parameter from a different ring")
    if a.is_zero():
        return TotalChern(ring, f.coefficients, check=False)
    if not a.is_homogeneous_of(1):
        raise DegreeError("tau substitution requires a homogeneous degree-1 parameter")
    trunc = ring.trunc
    # inv[k] = coefficient of t^k in (1 + a t)^(-1) = (-a)^k
    inv = [ring.one]
    for k in range(1, trunc + 1):
        inv.append(inv[-1] * -a)
    # cur = coefficients of (1 + a t)^(-i), updated iteratively.
    cur = [ring.one] + [ring.zero] * trunc
    out = [ring.zero] * (trunc + 1)
    for i, fi in enumerate(f.coefficients):
        if i > trunc:
            break
        if not fi.is_zero():
            # add f_i * t^i * (1 + a t)^(-i)
            for k in range(trunc - i + 1):
                if cur[k].is_zero():
                    continue
                out[i + k] = out[i + k] + fi * cur[k]
        # cur *= (1 + a t)^(-1)
        nxt = [ring.zero] * (trunc + 1)
        for k in range(trunc + 1):
            acc = ring.zero
            for j in range(k + 1):
                if cur[j].is_zero() or inv[k - j].is_zero():
                    continue
                acc = acc + cur[j] * inv[k - j]
            nxt[k] = acc
        cur = nxt
    return TotalChern(ring, out, check=False)


def _leading_term(p: GradedPoly) -> tuple[Exponents, int]:
    wdeg = p.ring.wdeg
    exps = max(p.terms, key=lambda e: (wdeg(e), e))
    return exps, p.terms[exps]


def _elementary_cache(ring: PolyRing, group: tuple[int, ...]) -> list[GradedPoly]:
    """[e_0, e_1, ..., e_len(group)] in the ring's variables, restricted to
    the given variable positions."""
    n = len(ring.variables)
    es: list[GradedPoly] = [ring.one]
    acc = {(0,) * n: 1}
    # Iteratively multiply (1 + x_i s); coefficient of s^k is e_k.
    series: list[dict[Exponents, int]] = [dict(acc)]
    for pos in group:
        new_series: list[dict[Exponents, int]] = []
        for k in range(len(series) + 1):
            term: dict[Exponents, int] = dict(series[k]) if k < len(series) else {}
            if k > 0:
                for e, c in series[k - 1].items():
                    shifted = list(e)
                    shifted[pos] += 1
                    key = tuple(shifted)
                    term[key] = term.get(key, 0) + c
            new_series.append(term)
        series = new_series
    for k in range(1, len(group) + 1):
        es.append(GradedPoly(ring, series[k]))
    return es


def elementary_symmetric_reduce(
    p: GradedPoly,
    groups: Sequence[Sequence[str]],
    prefixes: Sequence[str] | None = None,
) -> GradedPoly:
    """Rewrite a polynomial symmetric within each variable group as a
    polynomial in the elementary symmetric polynomials of each group.

    Uses iterated leading-term elimination in graded-lex order.  The output
    ring has one variable per (group, k) named ``prefix + str(k)`` with
    grading weight k.  Raises SymmetryError when elimination encounters a
    leading term that no symmetric polynomial can produce (exponents not
    weakly decreasing within a group), which happens exactly when ``p`` is
    not symmetric under some group's variable permutations.
    """
    ring = p.ring
    if prefixes is None:
        if len(groups) == 1:
            prefixes = ["e"]
        else:
            raise ValueError("prefixes must be given for multi-group reductions")
    if len(prefixes) != len(groups):
        raise ValueError("one prefix per group required")
    seen: set[int] = set()
    positions: list[tuple[int, ...]] = []
    for group in groups:
        pos = tuple(ring.index(name) for name in group)
        for q in pos:
            if q in seen:
                raise ValueError("groups must be disjoint")
            if ring.variables[q].degree != 1:
                raise ValueError("symmetric reduction expects degree-1 variables")
            seen.add(q)
        positions.append(pos)
    for exps in p.terms:
        for i, e in enumerate(exps):
            if e and i not in seen:
                raise ValueError(
                    f"variable {ring.variables[i].name!r} appears in p but in no group"
                )

    out_vars: list[Variable] = []
    for prefix, pos in zip(prefixes, positions):
        for k in range(1, min(len(pos), ring.trunc) + 1):
            out_vars.append(Variable(f"{prefix}{k}", k))
    target = PolyRing(out_vars, ring.trunc)
    e_polys = [_elementary_cache(ring, pos) for pos in positions]

    remainder = p
    result: dict[Exponents, int] = {}
    guard = 0
    while remainder.terms:
        guard += 1
        if guard > 200_000:
            raise RuntimeError("symmetric reduction failed to terminate")
        lt_exps, lt_coeff = _leading_term(remainder)
        # Per group, the group-restricted exponents must be weakly decreasing.
        out_exps = [0] * len(target.variables)
        subtrahend = ring.one
        col = 0
        for gi, pos in enumerate(positions):
            lam = [lt_exps[q] for q in pos]
            if any(lam[j] < lam[j + 1] for j in range(len(lam) - 1)):
                raise SymmetryError(
                    f"leading monomial {lt_exps} is not weakly decreasing in group {gi}"
                )
            width = min(len(pos), ring.trunc)
            for k in range(1, len(pos) + 1):
                mult = lam[k - 1] - (lam[k] if k < len(pos) else 0)
                if mult:
                    if k > width:
                        raise RuntimeError("unreachable: term degree exceeds truncation")
                    out_exps[col + k - 1] = mult
                    subtrahend = subtrahend * e_polys[gi][k] ** mult
            col += width
        key = tuple(out_exps)
        result[key] = result.get(key, 0) + lt_coeff
        remainder = remainder - lt_coeff * subtrahend
    return GradedPoly(target, result)
