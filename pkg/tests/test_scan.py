from fractions import Fraction

import pytest

from kunz.errors import PreconditionError
from kunz.field import FieldConfig
from kunz.localring import LocalRingPresentation
from kunz.poly import PolyRing
from kunz.scan import Subvariety, enumerate_points, generic_value, scan_points


def ring3():
    return PolyRing(FieldConfig(3), ("x", "y", "z"))


def test_enumerate_points_counts_the_zero_set():
    ring = ring3()
    points = enumerate_points(ring, [ring.parse("x*y")])
    # the surface xy = 0 is two planes sharing a line: 2*9 - 3 points
    assert len(points) == 15
    assert all(p[0] * p[1] % 3 == 0 for p in points)
    everything = enumerate_points(ring, [])
    assert len(everything) == 27


def test_enumeration_is_capped():
    ring = PolyRing(FieldConfig(2), ("a", "b", "c", "d", "e"))
    with pytest.raises(PreconditionError):
        enumerate_points(ring, [])


def test_generic_value_factorizes_the_node_line():
    ring = ring3()
    ideal = [ring.parse("x*y")]
    sub = [ring.parse("x"), ring.parse("y")]
    params = [ring.parse("z")]
    for witness in [(0, 0, 0), (0, 0, 2)]:
        assert generic_value(ring, ideal, sub, witness, params, 1) == \
            Fraction(5, 3)
        assert generic_value(ring, ideal, sub, witness, params, 2) == \
            Fraction(17, 9)


def test_generic_value_matches_the_two_variable_model():
    # the generic point of the singular line sees exactly the plane node
    ring = ring3()
    node = LocalRingPresentation.from_texts(3, ["x", "y"], ["x*y"])
    value = generic_value(ring3(), [ring.parse("x*y")],
                          [ring.parse("x"), ring.parse("y")],
                          (0, 0, 1), [ring.parse("z")], 1)
    assert value == node.lambda_value(1)


def test_generic_value_rejects_bad_witnesses():
    ring = ring3()
    ideal = [ring.parse("x*y")]
    sub = [ring.parse("x"), ring.parse("y")]
    params = [ring.parse("z")]
    with pytest.raises(PreconditionError):
        generic_value(ring, ideal, sub, (1, 0, 0), params, 1)  # off the line
    with pytest.raises(PreconditionError):
        # the subvariety must contain the zero set cut by the ideal
        generic_value(ring, ideal, [ring.parse("z")], (0, 0, 0),
                      [ring.parse("x")], 1)
    with pytest.raises(PreconditionError):
        # the parameter count must match the subvariety dimension
        generic_value(ring, ideal, sub, (0, 0, 0),
                      [ring.parse("z"), ring.parse("y")], 1)


def test_generic_value_rejects_singular_witnesses():
    # the whole surface as its own subvariety is singular at the origin
    ring = ring3()
    with pytest.raises(PreconditionError):
        generic_value(ring, [ring.parse("x*y")], [ring.parse("x*y")],
                      (0, 0, 0), [ring.parse("y + x"), ring.parse("z")], 1)


def test_scan_report_on_the_node_surface():
    report = scan_points(
        3, ("x", "y", "z"), ["x*y"], e_max=2,
        subvarieties=(Subvariety(("x", "y"), ((0, 0, 0), (0, 0, 1)), ("z",)),))
    assert len(report.points) == 15
    by_point = {record.point: record for record in report.points}
    origin = by_point[(0, 0, 0)]
    assert origin.lambda_values == (Fraction(5, 3), Fraction(17, 9))
    assert origin.s_values == (Fraction(1, 3), Fraction(1, 9))
    assert not origin.smooth
    smooth_point = by_point[(1, 0, 0)]
    assert smooth_point.smooth
    assert smooth_point.lambda_values == (Fraction(1), Fraction(1))
    sub = report.subvarieties[0]
    assert sub.height == 1 and sub.parameter_count == 1
    assert sub.agreement
    assert len(sub.witness_values) == 2
    verdicts = report.verdicts
    assert verdicts.upper_semicontinuous_lambda
    assert verdicts.lower_semicontinuous_s
    assert verdicts.generic_constancy
    assert verdicts.violations == ()


def test_scan_accepts_explicit_points():
    report = scan_points(3, ("x", "y"), ["x*y"],
                         points=[(0, 0), (1, 0)], e_max=1)
    assert len(report.points) == 2
    assert report.points[0].lambda_values == (Fraction(5, 3),)
    assert report.points[1].lambda_values == (Fraction(1),)


def test_scan_rejects_points_off_the_zero_set():
    with pytest.raises(PreconditionError):
        scan_points(3, ("x", "y"), ["x*y"], points=[(1, 1)], e_max=1)


def test_subvariety_requires_witnesses():
    with pytest.raises(PreconditionError):
        Subvariety(("x",), (), ("y",))
