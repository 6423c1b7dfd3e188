from hypothesis import given, settings
from hypothesis import strategies as st
import pytest

from kunz.curves import (Branch, BranchCurve, branch_piece_membership,
                         construct_parameter, default_precision,
                         discriminant_valuation, extension_degree,
                         generator_bound_check, module_generator_count,
                         piece_generators, realize_curve, root_closure_check,
                         semigroup_conductor, semigroup_membership,
                         split_reduction_check, tame_invariants, tame_report,
                         tame_trial_valuation, trace_matrix)
from kunz.errors import PreconditionError
from oracles import semigroup_conductor_brute, semigroup_elements

CUSP = Branch((2, 3))
SMOOTH = Branch((1,))


def cusp_curve(p=5):
    return BranchCurve(p, (CUSP,))


def node_curve(p=5):
    return BranchCurve(p, (Branch((1,), cross_valuations=(1,)),
                           Branch((1,), cross_valuations=(1,))))


# -- branch and semigroup data -----------------------------------------------


def test_branch_normalizes_and_validates():
    branch = Branch((3, 2, 3))
    assert branch.semigroup_generators == (2, 3)
    assert branch.conductor == 2
    with pytest.raises(PreconditionError):
        Branch((2, 4))  # gcd 2
    with pytest.raises(PreconditionError):
        Branch(())
    with pytest.raises(PreconditionError):
        Branch((2, 3), cross_valuations=(0,))


def test_declared_conductor_is_checked():
    assert Branch((6, 10, 15), conductor=30).conductor == 30
    with pytest.raises(PreconditionError):
        Branch((6, 10, 15), conductor=29)


def test_conductor_known_values():
    assert semigroup_conductor((1,)) == 0
    assert semigroup_conductor((2, 3)) == 2
    assert semigroup_conductor((2, 5)) == 4
    assert semigroup_conductor((3, 4)) == 6
    assert semigroup_conductor((3, 5)) == 8
    assert semigroup_conductor((6, 10, 15)) == 30


@given(st.lists(st.integers(1, 12), min_size=1, max_size=3))
@settings(max_examples=80)
def test_conductor_matches_brute_force(raw):
    from math import gcd
    from functools import reduce
    if reduce(gcd, raw) != 1:
        raw.append(raw[-1] + 1)  # adjacent integers are coprime
    gens = tuple(sorted(set(raw)))
    assert semigroup_conductor(gens) == semigroup_conductor_brute(gens)


@given(st.sampled_from([(2, 3), (2, 5), (3, 4), (3, 5, 7)]), st.integers(5, 25))
def test_membership_sieve_matches_saturation(gens, bound):
    sieve = semigroup_membership(gens, bound)
    elements = semigroup_elements(gens, bound)
    assert [v in elements for v in range(bound)] == sieve


def test_curve_shape_validation():
    with pytest.raises(PreconditionError):
        BranchCurve(4, (CUSP,))  # characteristic must be prime
    with pytest.raises(PreconditionError):
        BranchCurve(5, ())
    with pytest.raises(PreconditionError):
        BranchCurve(5, (CUSP,) * 5)  # more branches than supported
    with pytest.raises(PreconditionError):
        BranchCurve(5, (CUSP, CUSP))  # multi-branch needs cross data
    with pytest.raises(PreconditionError):
        BranchCurve(5, (Branch((2, 3), cross_valuations=(1,)),))


# -- invariants ---------------------------------------------------------------


def test_invariants_of_the_cusp():
    inv = tame_invariants(cusp_curve(5))
    branch = inv.per_branch[0]
    assert (branch.gamma0, branch.beta, branch.gamma) == (2, 0, 2)
    assert inv.delta == 2
    assert inv.Delta == 9
    assert default_precision(cusp_curve(5)) == 20


def test_invariants_avoid_wild_gamma():
    # at p = 2 the candidate gamma = 2 is a multiple of p and must move up
    inv = tame_invariants(cusp_curve(2))
    assert inv.per_branch[0].gamma == 3
    assert inv.Delta == 16


def test_invariants_of_node_and_smooth_curves():
    inv = tame_invariants(node_curve(5))
    for branch in inv.per_branch:
        assert (branch.gamma0, branch.beta, branch.gamma) == (0, 1, 1)
    assert inv.delta == 2 and inv.Delta == 8
    smooth = tame_invariants(BranchCurve(5, (SMOOTH,)))
    assert smooth.delta == 1 and smooth.Delta == 4


def test_piece_generator_count_equals_gamma():
    # the piece needs exactly gamma generators over the shift action
    for gens, p in [((2, 3), 5), ((2, 5), 3), ((1,), 5), ((3, 4), 5)]:
        curve = BranchCurve(p, (Branch(gens),))
        gamma = tame_invariants(curve).per_branch[0].gamma
        found = piece_generators(curve, 0, gamma, bound=4 * gamma + 8)
        assert len(found) == gamma


def test_branch_piece_of_a_node_includes_the_cross():
    curve = node_curve(5)
    member = branch_piece_membership(curve, 0, 6)
    assert member == [False, True, True, True, True, True]


# -- realizations -------------------------------------------------------------


def test_parameter_hits_gamma_on_every_branch():
    param = construct_parameter(node_curve(5))
    assert param.valuations == (1, 1)
    cusp_param = construct_parameter(cusp_curve(5))
    assert cusp_param.valuations == (2,)
    assert cusp_param.components[0].coefficient(2) == 1


def test_trace_matrix_is_block_diagonal():
    real = realize_curve(node_curve(5))
    matrix = trace_matrix(real)
    assert len(matrix) == 2
    assert matrix[0][1].is_exactly_zero
    assert matrix[1][0].is_exactly_zero


def test_discriminant_valuations_frozen():
    assert discriminant_valuation(cusp_curve(5)) == 9
    assert discriminant_valuation(cusp_curve(2)) == 16
    assert discriminant_valuation(node_curve(5)) == 8
    assert discriminant_valuation(BranchCurve(5, (SMOOTH,))) == 4


def test_discriminant_is_unit_independent():
    # different seeds draw different units; the valuation must not move
    values = {discriminant_valuation(cusp_curve(5), seed=s) for s in range(4)}
    assert values == {9}


def test_explicit_precision_must_cover_the_default():
    with pytest.raises(PreconditionError):
        discriminant_valuation(cusp_curve(5), precision=6)


def test_degree_and_generator_counts():
    assert extension_degree(cusp_curve(5)) == 2
    assert extension_degree(node_curve(5)) == 2
    assert module_generator_count(cusp_curve(5)) == 2
    # one generator per sheet: the piece of the node is t k[[t]] x t k[[t]]
    assert module_generator_count(node_curve(5)) == 2
    assert module_generator_count(BranchCurve(5, (SMOOTH,))) == 1


def test_generator_bound_check_fields():
    check = generator_bound_check(cusp_curve(5))
    assert (check.count, check.delta, check.mu, check.bound) == (2, 2, 1, 2)
    assert check.passed
    with pytest.raises(PreconditionError):
        generator_bound_check(cusp_curve(5), mu=0)


# -- randomized trials and closure checks --------------------------------------


def test_trial_valuation_known_case():
    # degree 2 with v(x) = 3: determinant valuation (2 + 1) * 3
    assert tame_trial_valuation(5, 2, 3) == 9
    assert tame_trial_valuation(7, 3, 4, seed=11) == 16


def test_trial_valuation_is_seed_independent():
    values = {tame_trial_valuation(5, 3, 2, seed=s) for s in range(5)}
    assert values == {8}


def test_trial_preconditions():
    with pytest.raises(PreconditionError):
        tame_trial_valuation(5, 5, 2)  # p divides the degree
    with pytest.raises(PreconditionError):
        tame_trial_valuation(5, 4, 2)  # gcd(v(x), degree) != 1


def test_root_closure_on_the_cusp():
    check = root_closure_check(cusp_curve(5))
    assert check.passed
    assert check.m == 1
    assert check.tested > 0


def test_root_closure_is_single_branch_only():
    with pytest.raises(PreconditionError):
        root_closure_check(node_curve(5))


@pytest.mark.parametrize("p", [3, 5, 7])
def test_split_reduction_commutes(p):
    check = split_reduction_check(p)
    assert check.passed
    assert check.discriminant_reduction == check.reduced_discriminant


# -- the bundled report ---------------------------------------------------------


def test_tame_report_of_the_cusp():
    report = tame_report(cusp_curve(5))
    assert report.semigroups == ((0, 2, 3, 4),) or report.semigroups == ((2, 3),)
    inv = report.invariants
    assert (inv.per_branch[0].gamma0, inv.per_branch[0].beta,
            inv.per_branch[0].gamma) == (2, 0, 2)
    assert (inv.delta, inv.Delta) == (2, 9)
    assert report.discriminant_valuation == 9
    assert report.extension_degree == 2
    assert report.generator_count == 2
    assert report.generator_bound.passed


def test_tame_report_of_the_node():
    report = tame_report(node_curve(5))
    assert report.invariants.delta == 2
    assert report.invariants.Delta == 8
    assert report.discriminant_valuation == 8
    assert report.extension_degree == 2


def test_reports_are_deterministic_per_seed():
    a = tame_report(cusp_curve(5), seed=3)
    b = tame_report(cusp_curve(5), seed=3)
    assert a == b
