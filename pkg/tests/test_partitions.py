from math import comb

import pytest
from hypothesis import given, settings

from cherncalc import (
    PolyRing,
    conjugate,
    lr_coefficient,
    parse_partition,
    partitions_in_box,
    schur_in_variables,
)
from cherncalc.partitions import (
    as_partition,
    contains,
    format_partition,
    partitions_of_weight,
    weight,
)
from helpers import partitions


def test_as_partition_normalizes_and_validates():
    assert as_partition([2, 1]) == (2, 1)
    assert as_partition([]) == ()
    assert as_partition([2, 0]) == (2,)  # trailing zeros are stripped
    with pytest.raises(ValueError):
        as_partition([1, 2])  # must be weakly decreasing
    with pytest.raises(ValueError):
        as_partition([2, 0, 1])  # interior zeros are not


def test_parse_and_format():
    assert parse_partition("2,1") == (2, 1)
    assert parse_partition("[2, 1]") == (2, 1)
    assert parse_partition("") == ()
    with pytest.raises(ValueError):
        parse_partition("2,x")
    assert format_partition((2, 1)) == "[2,1]"
    assert format_partition(()) == "[]"


def test_conjugate():
    assert conjugate((3, 1)) == (2, 1, 1)
    assert conjugate(conjugate((4, 2, 1))) == (4, 2, 1)
    assert conjugate(()) == ()


def test_contains():
    assert contains((3, 2), (2, 2))
    assert not contains((3, 2), (1, 1, 1))


def test_partition_counts():
    assert [len(partitions_of_weight(n)) for n in range(9)] == [
        1, 1, 2, 3, 5, 7, 11, 15, 22,
    ]
    assert partitions_of_weight(4, max_part=2) == [(2, 2), (2, 1, 1), (1, 1, 1, 1)]


def test_box_enumeration():
    assert partitions_in_box(0, 5) == [()]
    assert partitions_in_box(1, 2) == [(), (1,), (2,)]
    assert partitions_in_box(2, 2) == [(), (1,), (2,), (1, 1), (2, 1), (2, 2)]


@pytest.mark.parametrize("rows,cols", [(1, 1), (2, 3), (3, 3), (4, 2)])
def test_box_count_is_binomial(rows, cols):
    box = partitions_in_box(rows, cols)
    assert len(box) == comb(rows + cols, rows)
    # conjugation is a bijection onto the transposed box
    transposed = set(partitions_in_box(cols, rows))
    assert {conjugate(p) for p in box} == transposed


def test_lr_examples():
    assert lr_coefficient((2, 1), (1,), (1, 1)) == 1
    assert lr_coefficient((4, 2), (2, 1), (2, 1)) == 1
    assert lr_coefficient((3, 2, 1), (2, 1), (2, 1)) == 2
    assert lr_coefficient((2, 2), (2, 2), ()) == 1


def test_lr_vanishing():
    assert lr_coefficient((3,), (1,), (1,)) == 0  # weight mismatch
    assert lr_coefficient((2, 2), (3,), (1,)) == 0  # eps not contained in mu


@settings(deadline=None)
@given(partitions(max_part=2, max_len=2), partitions(max_part=2, max_len=2))
def test_lr_is_symmetric(eps, nu):
    for mu in partitions_of_weight(weight(eps) + weight(nu)):
        assert lr_coefficient(mu, eps, nu) == lr_coefficient(mu, nu, eps)


@settings(deadline=None)
@given(partitions(max_part=2, max_len=2), partitions(max_part=2, max_len=2))
def test_lr_expands_schur_products(eps, nu):
    w = weight(eps) + weight(nu)
    k = max(w, 1)
    ring = PolyRing([f"x{i+1}" for i in range(k)], max(w, 1))
    lhs = schur_in_variables(eps, k, ring) * schur_in_variables(nu, k, ring)
    rhs = ring.zero
    for mu in partitions_of_weight(w):
        c = lr_coefficient(mu, eps, nu)
        if c:
            rhs = rhs + c * schur_in_variables(mu, k, ring)
    assert lhs == rhs


def test_schur_polynomial_examples():
    p = schur_in_variables((1,), 3)
    ring = p.ring
    assert ring.names == ("x1", "x2", "x3")
    assert p == ring.var("x1") + ring.var("x2") + ring.var("x3")

    q = schur_in_variables((1, 1), 2)
    assert q == q.ring.var("x1") * q.ring.var("x2")

    r = schur_in_variables((2, 1), 3)
    assert sum(r.terms.values()) == 8  # eight tableaux of shape (2,1) with entries <= 3


def test_schur_vanishes_when_partition_is_too_tall():
    assert schur_in_variables((1, 1, 1), 2).is_zero()


def test_schur_satisfies_jacobi_trudi():
    ring = PolyRing(["x1", "x2", "x3"], 8)

    def h(k):
        return schur_in_variables((k,), 3, ring) if k else ring.one

    assert schur_in_variables((2, 1), 3, ring) == h(2) * h(1) - h(3)
    assert schur_in_variables((2, 2), 3, ring) == h(2) * h(2) - h(3) * h(1)
