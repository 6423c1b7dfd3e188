from fractions import Fraction

import pytest

from kunz.errors import PreconditionError
from kunz.field import FieldConfig
from kunz.localring import (LocalRingPresentation, matrix_rank_mod_p,
                            translate_to_origin)
from kunz.poly import PolyRing


def test_from_texts_accepts_points_on_the_zero_set():
    pres = LocalRingPresentation.from_texts(
        5, ["x", "y"], ["y^2 - x^3"], point=(1, 1))
    assert pres.p == 5
    # after translation the origin is on the curve
    for g in pres.ideal.generators:
        assert g.constant_coefficient() == 0


def test_from_texts_rejects_points_off_the_zero_set():
    with pytest.raises(PreconditionError):
        LocalRingPresentation.from_texts(
            5, ["x", "y"], ["y^2 - x^3"], point=(1, 2))
    with pytest.raises(PreconditionError):
        LocalRingPresentation.from_texts(
            5, ["x", "y"], ["y^2 - x^3"], point=(1,))


def test_translation_matches_direct_shift():
    ring = PolyRing(FieldConfig(5), ("x", "y"))
    f = ring.parse("y^2 - x^3")
    shifted = translate_to_origin([f], (1, 1))
    assert shifted[0] == f.substitute_shift((1, 1))
    # the zero shift is the identity
    assert translate_to_origin([f], (0, 0)) == [f]


def test_smooth_point_localization_is_regular():
    # the cusp is smooth away from the origin, so lambda collapses to 1
    pres = LocalRingPresentation.from_texts(
        5, ["x", "y"], ["y^2 - x^3"], point=(1, 1))
    assert pres.lambda_value(1) == Fraction(1)
    assert pres.lambda_value(2) == Fraction(1)


def test_lambda_of_the_full_ring_is_one():
    pres = LocalRingPresentation.from_texts(3, ["x", "y", "z"], [])
    assert pres.dimension() == 3
    for e in (1, 2):
        assert pres.lambda_value(e) == Fraction(1)
        assert pres.frobenius_colength(e) == 3 ** (3 * e)


def test_sample_is_cached(cone5):
    first = cone5.sample(1)
    assert cone5.sample(1) is first
    assert first.colength == 37
    assert first.normalized == Fraction(37, 25)


def test_smoothness_report_flags_singular_origins(cone5):
    report = cone5.smoothness_report()
    assert report.dimension == 2
    assert report.codimension == 1
    assert report.jacobian_rank == 0
    assert not report.smooth


def test_smoothness_report_at_a_smooth_point():
    pres = LocalRingPresentation.from_texts(
        3, ["x", "y", "z"], ["x*y"], point=(1, 0, 0))
    report = pres.smoothness_report()
    assert report.jacobian_rank == 1
    assert report.smooth


def test_jacobian_matrix_shape(node3):
    rows = node3.jacobian_matrix()
    assert len(rows) == 1 and len(rows[0]) == 2
    assert node3.jacobian_rank_at_origin() == 0


def test_matrix_rank_mod_p():
    assert matrix_rank_mod_p([[1, 2], [2, 4]], 5) == 1
    assert matrix_rank_mod_p([[1, 2], [2, 4]], 3) == 1
    assert matrix_rank_mod_p([[1, 0], [0, 1]], 2) == 2
    assert matrix_rank_mod_p([], 5) == 0
    # rank can drop mod p even when the integer matrix is invertible
    assert matrix_rank_mod_p([[1, 1], [1, 3]], 2) == 1
