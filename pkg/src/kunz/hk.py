"""Normalized Frobenius colength sequences and uniform-bound checks.

hk_sequence collects lambda_e for e = 1..e_max, extracts the empirical gap
constant sup_e p^e*|lambda_e - lambda_{e+1}|, and turns it into an exact
rational interval around the limit via the geometric tail

    sum_{k>=0} p^-(E+k) = p^-E / (1 - 1/p).

verify_pair_bound checks |l_e/q^d - l_e'/q'^d| <= m * Delta * p^-e for a
pair of nested ideals differing by a single socle generator, with the
constants m and Delta supplied by the caller (for realized curve data they
come from the curves module). hypersurface_bound checks the colength of a
principal ideal plus a bracket power of the maximal ideal against
n * q^(d-1).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .engine import Budget, BudgetTracker, Ideal, maximal_ideal
from .errors import BudgetExceededError, PreconditionError
from .field import frobenius_exponent
from .localring import FrobeniusSample, LocalRingPresentation
from .poly import Polynomial


@dataclass(frozen=True)
class RationalInterval:
    low: Fraction
    high: Fraction

    def __post_init__(self) -> None:
        if self.low > self.high:
            raise PreconditionError("interval bounds out of order")

    def contains(self, value: Fraction) -> bool:
        return self.low <= value <= self.high

    def contains_interval(self, other: RationalInterval) -> bool:
        return self.low <= other.low and other.high <= self.high

    @property
    def width(self) -> Fraction:
        return self.high - self.low


@dataclass(frozen=True)
class HKReport:
    """Sequence report: exact samples, gap constant, and the tail interval."""

    presentation_id: str
    p: int
    dimension: int
    samples: tuple[FrobeniusSample, ...]
    empirical_C: Fraction
    interval: RationalInterval
    stabilization_index: int
    truncated: bool


def describe_presentation(presentation: LocalRingPresentation) -> str:
    ring = presentation.ring
    gens = ", ".join(str(g) for g in presentation.ideal.generators) or "0"
    return f"F_{ring.p}[{', '.join(ring.variables)}]/({gens})"


def empirical_gap_constant(p: int, values: list[tuple[int, Fraction]]) -> Fraction:
    """sup over adjacent sampled e of p^e * |value_e - value_{e+1}|."""
    best = Fraction(0)
    for (e, a), (e2, b) in zip(values, values[1:]):
        if e2 != e + 1:
            continue
        gap = abs(a - b) * p**e
        if gap > best:
            best = gap
    return best


def hk_sequence(presentation: LocalRingPresentation, e_max: int,
                budget: Budget | None = None) -> HKReport:
    """lambda_1..lambda_{e_max} with the empirical tail interval.

    A budget failure after at least one sample yields a partial report
    flagged truncated instead of an error.
    """
    if e_max < 1:
        raise PreconditionError(f"e_max must be >= 1, got {e_max}")
    p = presentation.p
    samples: list[FrobeniusSample] = []
    truncated = False
    for e in range(1, e_max + 1):
        try:
            samples.append(presentation.sample(e, budget))
        except BudgetExceededError:
            if not samples:
                raise
            truncated = True
            break
    lambdas = [(s.e, s.normalized) for s in samples]
    c = empirical_gap_constant(p, lambdas)
    last = samples[-1]
    radius = c * Fraction(1, p**last.e) / (1 - Fraction(1, p))
    interval = RationalInterval(last.normalized - radius, last.normalized + radius)
    stabilization = last.e
    for e, value in reversed(lambdas):
        if interval.contains(value):
            stabilization = e
        else:
            break
    return HKReport(
        presentation_id=describe_presentation(presentation),
        p=p,
        dimension=presentation.dimension(budget),
        samples=tuple(samples),
        empirical_C=c,
        interval=interval,
        stabilization_index=stabilization,
        truncated=truncated,
    )


# -- pair bounds -----------------------------------------------------------


@dataclass(frozen=True)
class BoundConstants:
    """Constants entering the pair bound rhs m * Delta * p^-e.

    b and e0 record the filtration step count and nilpotency index of the
    module variant; everything exercised here is the reduced rank-one case.
    """

    m: int
    Delta: int
    b: int = 1
    e0: int = 0


@dataclass(frozen=True)
class PairBoundEntry:
    e: int
    e_prime: int
    lhs: Fraction
    rhs: Fraction

    @property
    def passed(self) -> bool:
        return self.lhs <= self.rhs


@dataclass
class BoundCheck:
    """A batch of pair-bound verifications sharing one constant set."""

    constants: BoundConstants
    entries: list[PairBoundEntry] = field(default_factory=list)

    @property
    def all_passed(self) -> bool:
        return all(entry.passed for entry in self.entries)


def relative_bracket_colength(presentation: LocalRingPresentation,
                              inner: Ideal, u: Polynomial, q: int,
                              budget: Budget | None = None,
                              tracker: BudgetTracker | None = None) -> int:
    """length of (inner + (u))^[q] / inner^[q] in the presented ring.

    Computed as the difference of two colengths modulo the defining ideal.
    """
    base = presentation.ideal
    inner_q = base.sum_with(inner.bracket_power(q))
    outer_q = inner_q.sum_with(Ideal(presentation.ring,
                                     [u.frobenius_power(q)]))
    return inner_q.colength(budget, tracker) - outer_q.colength(budget, tracker)


def check_socle_condition(presentation: LocalRingPresentation, inner: Ideal,
                          u: Polynomial, budget: Budget | None = None) -> None:
    """Require (inner : u) = m in the presented ring."""
    total = presentation.ideal.sum_with(inner)
    colon = total.colon(Ideal(presentation.ring, [u]), budget)
    if colon != maximal_ideal(presentation.ring):
        raise PreconditionError(
            "the colon of the inner ideal by u is not the maximal ideal")


def verify_pair_bound(presentation: LocalRingPresentation, inner: Ideal,
                      u: Polynomial, e: int, e_prime: int,
                      constants: BoundConstants,
                      budget: Budget | None = None,
                      check_precondition: bool = True) -> PairBoundEntry:
    """One pair check of |l_e/q^d - l_e'/q'^d| <= m * Delta * p^-e.

    The socle condition (inner : u) = m makes the inner/outer quotient have
    length one, so the rhs carries no extra length factor.
    """
    if e < 0 or e > e_prime:
        raise PreconditionError(f"need 0 <= e <= e', got e={e}, e'={e_prime}")
    if check_precondition:
        check_socle_condition(presentation, inner, u, budget)
    p = presentation.p
    d = presentation.dimension(budget)
    lengths = {}
    for ee in {e, e_prime}:
        q = frobenius_exponent(p, ee)
        lengths[ee] = Fraction(
            relative_bracket_colength(presentation, inner, u, q, budget), q**d)
    lhs = abs(lengths[e] - lengths[e_prime])
    rhs = constants.m * constants.Delta * Fraction(1, p**e)
    return PairBoundEntry(e=e, e_prime=e_prime, lhs=lhs, rhs=rhs)


def verify_pair_bounds(presentation: LocalRingPresentation, inner: Ideal,
                       u: Polynomial, e_max: int, constants: BoundConstants,
                       budget: Budget | None = None) -> BoundCheck:
    """All pairs 1 <= e <= e' <= e_max against one constant set."""
    check_socle_condition(presentation, inner, u, budget)
    check = BoundCheck(constants=constants)
    for e in range(1, e_max + 1):
        for e_prime in range(e, e_max + 1):
            check.entries.append(
                verify_pair_bound(presentation, inner, u, e, e_prime,
                                  constants, budget, check_precondition=False))
    return check


@dataclass(frozen=True)
class BasicLengthsCheck:
    """Two independently computed sides of the colon/quotient length identity

    l(R / (I^[q] : u^q)) = l((I + (u))^[q] / I^[q]).
    """

    q: int
    colon_side: int
    quotient_side: int

    @property
    def passed(self) -> bool:
        return self.colon_side == self.quotient_side


def verify_basic_lengths(presentation: LocalRingPresentation, inner: Ideal,
                         u: Polynomial, q: int,
                         budget: Budget | None = None) -> BasicLengthsCheck:
    """Check the length identity for one q, both sides through the engine."""
    base = presentation.ideal
    inner_q = base.sum_with(inner.bracket_power(q))
    colon = inner_q.colon(Ideal(presentation.ring, [u.frobenius_power(q)]),
                          budget)
    colon_side = colon.colength(budget)
    quotient_side = relative_bracket_colength(presentation, inner, u, q, budget)
    return BasicLengthsCheck(q=q, colon_side=colon_side,
                             quotient_side=quotient_side)


# -- hypersurface bound ----------------------------------------------------


@dataclass(frozen=True)
class HypersurfaceBoundCheck:
    n: int
    e: int
    q: int
    colength: int
    bound: int

    @property
    def passed(self) -> bool:
        return self.colength <= self.bound


def hypersurface_bound(F: Polynomial, n: int, e: int,
                       budget: Budget | None = None) -> HypersurfaceBoundCheck:
    """Check colength((F) + m^[q]) <= n * q^(d-1) in the ambient ring of F.

    The order of vanishing of F must be at most n; a unit F with n = 0 is
    the degenerate equality 0 <= 0.
    """
    if F.is_zero():
        raise PreconditionError("F must be nonzero")
    if n < 0:
        raise PreconditionError(f"n must be >= 0, got {n}")
    order = F.order_of_vanishing()
    if order > n:
        raise PreconditionError(
            f"every term of F has total degree above n = {n} (order {order})")
    ring = F.ring
    p = ring.p
    q = frobenius_exponent(p, e)
    d = ring.nvars
    total = Ideal(ring, [F]).sum_with(maximal_ideal(ring).bracket_power(q))
    colength = total.colength(budget)
    return HypersurfaceBoundCheck(n=n, e=e, q=q, colength=colength,
                                  bound=n * q ** (d - 1))
