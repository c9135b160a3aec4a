"""Tests for finite abelian groups, finite rings and their axiom scans."""

from __future__ import annotations

import numpy as np
import pytest

from src.algebra.axioms import check_group_axioms, check_ring_axioms
from src.algebra.groups import FiniteAbelianGroup, cyclic_group, direct_product, quotient_group
from src.algebra.limits import SizeLimits, ensure_within
from src.algebra.rings import FiniteCommRing, product_ring, quotient_ring, ring_integers_mod


def test_mixed_radix_codes_last_residue_fastest() -> None:
    group = FiniteAbelianGroup([4, 6])

    assert group.size == 24
    assert group.encode((1, 2)) == 8
    assert group.decode(8) == (1, 2)
    assert group.decode(1) == (0, 1)
    assert group.zero == 0


def test_group_arithmetic() -> None:
    group = FiniteAbelianGroup([4, 6])
    a = group.encode((3, 5))
    b = group.encode((2, 4))

    assert group.decode(group.add(a, b)) == (1, 3)
    assert group.decode(group.neg(a)) == (1, 1)
    assert group.sub(a, a) == 0
    assert group.format_element(a) == "(3,5)"
    assert cyclic_group(5).format_element(3) == "3"


def test_group_rejects_bad_orders_and_codes() -> None:
    with pytest.raises(ValueError, match="at least one cyclic factor"):
        FiniteAbelianGroup([])
    with pytest.raises(ValueError, match="must be >= 1"):
        FiniteAbelianGroup([3, 0])
    with pytest.raises(ValueError, match="out of range"):
        cyclic_group(3).decode(3)
    with pytest.raises(ValueError, match="Residue 4 out of range"):
        cyclic_group(4).encode((4,))


def test_direct_product_flattens_factors() -> None:
    group = direct_product([cyclic_group(2), FiniteAbelianGroup([3, 5])])

    assert group.cyclic_orders == (2, 3, 5)
    assert group == FiniteAbelianGroup((2, 3, 5))


def test_subgroup_generated_and_cyclic_subgroup() -> None:
    group = cyclic_group(12)

    assert group.subgroup_generated([4, 6]) == frozenset({0, 2, 4, 6, 8, 10})
    assert group.cyclic_subgroup(3) == [0, 3, 6, 9]


def test_quotient_group_of_z4_by_two() -> None:
    quotient, projection = quotient_group(cyclic_group(4), frozenset({0, 2}))

    assert quotient.cyclic_orders == (2,)
    assert projection == (0, 1, 0, 1)


def test_quotient_group_klein_by_one_factor() -> None:
    klein = FiniteAbelianGroup([2, 2])
    quotient, projection = quotient_group(klein, frozenset({0, 2}))

    assert quotient.size == 2
    assert projection[0] == projection[2] == 0
    assert projection[1] == projection[3] == 1


def test_quotient_group_by_everything_is_trivial() -> None:
    quotient, projection = quotient_group(cyclic_group(3), frozenset({0, 1, 2}))

    assert quotient.size == 1
    assert set(projection) == {0}


def test_quotient_group_rejects_non_subgroup() -> None:
    with pytest.raises(ValueError, match="needs a subgroup"):
        quotient_group(cyclic_group(4), frozenset({0, 1}))


def test_group_axioms_pass_on_products() -> None:
    report = check_group_axioms(FiniteAbelianGroup([2, 3, 4]))

    assert report.passed
    assert {check.name for check in report.checks} >= {"addition associativity", "additive inverses"}


def test_axiom_scan_respects_size_bound() -> None:
    with pytest.raises(ValueError, match="above the size bound 8"):
        check_group_axioms(cyclic_group(9), max_size=8)


def test_integers_mod_ring() -> None:
    ring = ring_integers_mod(6)

    assert ring.mul(4, 5) == 2
    assert ring.one == 1
    assert ring.zero_divisor_pair() == (2, 3)
    assert ring.power(2, 3) == 2
    assert check_ring_axioms(ring).passed


def test_field_has_no_zero_divisors() -> None:
    assert ring_integers_mod(5).zero_divisor_pair() is None


def test_product_ring_componentwise() -> None:
    ring = product_ring([2, 3])
    a = ring.additive_group.encode((1, 2))
    b = ring.additive_group.encode((1, 2))

    assert ring.one == ring.additive_group.encode((1, 1))
    assert ring.additive_group.decode(ring.mul(a, b)) == (1, 1)
    assert check_ring_axioms(ring).passed


def test_product_ring_size_bound() -> None:
    with pytest.raises(ValueError, match="Product ring has 36 elements"):
        product_ring([6, 6], max_size=30)


def test_quotient_ring_z6_by_three() -> None:
    quotient, projection = quotient_ring(ring_integers_mod(6), frozenset({0, 3}))

    assert quotient.size == 3
    assert projection[3] == 0
    assert quotient.mul(projection[2], projection[2]) == projection[4]
    assert check_ring_axioms(quotient).passed


def test_ring_axioms_report_witnesses() -> None:
    group = cyclic_group(2)
    broken_unity = FiniteCommRing(group, np.zeros((2, 2), dtype=np.int64), one=1, name="null")
    not_commutative = FiniteCommRing(group, np.array([[0, 1], [0, 1]]), one=1, name="right")

    unity = check_ring_axioms(broken_unity).get("unity")
    commutativity = check_ring_axioms(not_commutative).get("multiplication commutativity")

    assert not unity.passed
    assert unity.witness == (1, 1)
    assert not commutativity.passed
    assert commutativity.witness == (0, 1)


def test_ring_table_shape_is_checked() -> None:
    with pytest.raises(ValueError, match="must be 2x2"):
        FiniteCommRing(cyclic_group(2), np.zeros((3, 3)), one=1)


def test_size_limits() -> None:
    assert SizeLimits.uniform(10) == SizeLimits(max_ring_size=10, max_module_size=10)
    ensure_within(10, 10, "Carrier")
    with pytest.raises(ValueError, match="Carrier has 11 elements, above the size bound 10."):
        ensure_within(11, 10, "Carrier")
