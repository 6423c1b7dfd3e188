from fractions import Fraction

import pytest

from kunz.errors import PreconditionError
from kunz.fsplit import (fedder_test, fpurity_exponent, fsplit_report,
                         splitting_number)
from kunz.localring import LocalRingPresentation
from oracles import node_splitting


def present(p, variables, gens):
    return LocalRingPresentation.from_texts(p, variables, gens)


@pytest.mark.parametrize("p", [2, 3, 5])
def test_node_splitting_numbers(p):
    pres = present(p, ["x", "y"], ["x*y"])
    for e in (1, 2, 3):
        assert splitting_number(pres, e).s == node_splitting(p, e)


def test_regular_rings_split_completely():
    for p, variables in [(2, ["x"]), (3, ["x", "y"]), (5, ["x", "y", "z"])]:
        pres = present(p, variables, [])
        for e in (1, 2):
            assert splitting_number(pres, e).s == 1


def test_cone_splitting_numbers(cone5):
    assert splitting_number(cone5, 1).s == Fraction(13, 25)
    assert splitting_number(cone5, 2).s == Fraction(313, 625)


def test_sample_fields_are_consistent(node3):
    sample = splitting_number(node3, 2)
    assert sample.e == 2 and sample.q == 9
    assert sample.s == Fraction(sample.colength, 9)
    assert 0 <= sample.s <= 1


def test_fedder_on_fermat_cubics():
    pure = fedder_test(present(7, ["x", "y", "z"], ["x^3 + y^3 + z^3"]))
    assert pure.is_F_pure
    assert pure.witness is not None
    impure = fedder_test(present(5, ["x", "y", "z"], ["x^3 + y^3 + z^3"]))
    assert not impure.is_F_pure
    assert impure.witness is None
    assert "exhausted" in impure.detail or "basis" in impure.detail


def test_fedder_on_non_reduced_rings():
    for p in (2, 3, 5):
        verdict = fedder_test(present(p, ["x", "y"], ["x^2"]))
        assert not verdict.is_F_pure


def test_fedder_agrees_with_positive_splitting():
    cases = [
        (7, ["x", "y", "z"], ["x^3 + y^3 + z^3"]),
        (5, ["x", "y", "z"], ["x^3 + y^3 + z^3"]),
        (3, ["x", "y"], ["x*y"]),
        (5, ["x", "y"], ["y^2 - x^3"]),
        (2, ["x", "y"], ["x^2"]),
        (5, ["x", "y", "z"], ["x*y - z^2"]),
    ]
    for p, variables, gens in cases:
        pres = present(p, variables, gens)
        verdict = fedder_test(pres)
        assert verdict.is_F_pure == (splitting_number(pres, 1).s > 0)


def test_purity_exponent_on_split_rings():
    node = present(3, ["x", "y"], ["x*y"])
    # a unit multiplier reduces to the plain Fedder membership at e = 1
    assert fpurity_exponent(node, node.ring.one()) == 1
    # x times the colon generator x^(q-1) y^(q-1) hits x^q at every level
    assert fpurity_exponent(node, node.ring.parse("x"), e_cap=3) is None
    deep = present(7, ["x", "y", "z"], ["x^3 + y^3 + z^3"])
    assert fpurity_exponent(deep, deep.ring.parse("x*y*z"), e_cap=2) is None


def test_purity_exponent_stays_none_on_impure_rings(cusp5):
    assert fpurity_exponent(cusp5, cusp5.ring.one(), e_cap=3) is None


def test_purity_exponent_rejects_bad_caps(node3):
    with pytest.raises(PreconditionError):
        fpurity_exponent(node3, node3.ring.one(), e_cap=0)


def test_fsplit_report_bundles_the_verdict(node3):
    report = fsplit_report(node3, 2)
    assert [s.s for s in report.samples] == [Fraction(1, 3), Fraction(1, 9)]
    assert report.verdict.is_F_pure
    assert report.interval.low <= 0 <= report.interval.high or \
        report.interval.low >= 0
