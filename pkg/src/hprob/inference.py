"""Conditioning, multiplication theorems, independence, total probability and
Bayes' rule for hyperbolic-valued measures.

A hyperbolic measure can take zero-divisor values, so ``P(A | B)`` cannot be a
plain quotient.  Every function here dispatches on the exact class of the
conditioning measure:

============  =================================================
``P(B)``      ``P(A | B)``
============  =================================================
invertible    ``P(A & B) / P(B)``
zero          ``P(A)``
``l*e``       ``(P(A & B) / l)*e + P(A)*e+``
``l*e+``      ``P(A)*e + (P(A & B) / l)*e+``
============  =================================================
"""

from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .errors import (HypothesisNotInFSE, InvalidFSE, NotIndependentInput,
                     TheoremViolation, ZeroCondition)
from .hyperbolic import E, EDAG, ONE, ZERO, HNum, ZdClass, classify
from .space import ProbSpace, Regime

__all__ = [
    "CondTag", "CondCase", "cond", "conditional_space", "mult_theorem",
    "ChainCondition", "chain_condition", "chain_mult",
    "IndepCase", "IndepReport", "independence", "complement_independence",
    "joint_independence", "FSE", "total_probability",
    "BayesBranch", "BayesResult", "bayes",
]


class CondTag(enum.Enum):
    INVERTIBLE = "cond-case-1"
    ZERO_MEASURE = "cond-case-2"
    ZD_E = "cond-case-3"
    ZD_EDAG = "cond-case-4"


@dataclass(frozen=True)
class CondCase:
    tag: CondTag
    lam: Optional[Fraction] = None  # nonzero idempotent component of P(B)


def _cond_case(mb: HNum) -> CondCase:
    zd = classify(mb)
    if zd is ZdClass.INVERTIBLE:
        return CondCase(CondTag.INVERTIBLE)
    if zd is ZdClass.ZERO:
        return CondCase(CondTag.ZERO_MEASURE)
    if zd is ZdClass.ZD_E:
        return CondCase(CondTag.ZD_E, mb.nu1)
    return CondCase(CondTag.ZD_EDAG, mb.nu2)


def cond(space: ProbSpace, a, b) -> tuple[HNum, CondCase]:
    """Conditional probability ``P(A | B)`` and the case that produced it."""
    a, b = space.event(a), space.event(b)
    mb = space.measure(b)
    case = _cond_case(mb)
    if case.tag is CondTag.ZERO_MEASURE:
        return space.measure(a), case
    mab = space.measure(a & b)
    if case.tag is CondTag.INVERTIBLE:
        return mab / mb, case
    if case.tag is CondTag.ZD_E:
        return (mab / case.lam) * E + space.measure(a) * EDAG, case
    return space.measure(a) * E + (mab / case.lam) * EDAG, case


def conditional_space(space: ProbSpace, b) -> ProbSpace:
    """The space ``(B, Sigma_B, P(. | B))``.

    Atoms are those of ``B`` and each atom ``w`` gets weight ``P({w} | B)``.
    Registered events are intersected with ``B``.
    """
    b = space.event(b)
    if space.measure(b).is_zero():
        raise ZeroCondition("conditioning event has measure zero; "
                            "P(. | B) is not a measure on B")
    atoms = [a for a in space.atoms if a in b]
    weights = {a: cond(space, (a,), b)[0] for a in atoms}
    regime = Regime.from_mass(cond(space, b, b)[0])
    events = {name: ev & b for name, ev in space.named_events.items()}
    return ProbSpace(atoms, weights, regime, events)


def mult_theorem(space: ProbSpace, a, b) -> tuple[HNum, HNum]:
    """Return ``(P(A & B), P(B) * P(A | B))``."""
    a, b = space.event(a), space.event(b)
    return space.measure(a & b), space.measure(b) * cond(space, a, b)[0]


class ChainCondition(enum.Enum):
    C1 = "C1"
    C2 = "C2"
    C3 = "C3"
    NOT_APPLICABLE = "not-applicable"


def chain_condition(space: ProbSpace, events) -> ChainCondition:
    sets = [space.event(ev) for ev in events]
    inter = classify(space.measure(frozenset.intersection(*sets)))
    if inter is ZdClass.INVERTIBLE:
        return ChainCondition.C1
    classes = [classify(space.measure(s)) for s in sets]
    # measures are non-negative, so a zd-e value is automatically in D_e^+
    if inter is ZdClass.ZD_E and ZdClass.ZD_E in classes:
        return ChainCondition.C2
    if inter is ZdClass.ZD_EDAG and ZdClass.ZD_EDAG in classes:
        return ChainCondition.C3
    return ChainCondition.NOT_APPLICABLE


def chain_mult(space: ProbSpace, events) -> tuple[HNum, HNum, ChainCondition]:
    """Return ``(P(A1 & ... & An), P(A1) P(A2|A1) ... P(An|A1 & ... & An-1))``
    with the hypothesis that guarantees their equality, if any holds."""
    sets = [space.event(ev) for ev in events]
    if len(sets) < 2:
        raise ValueError("chain_mult needs at least two events")
    product = space.measure(sets[0])
    prefix = sets[0]
    for s in sets[1:]:
        product = product * cond(space, s, prefix)[0]
        prefix = prefix & s
    return space.measure(prefix), product, chain_condition(space, sets)


class IndepCase(enum.Enum):
    I = "case-i"      # some measure is zero
    II = "case-ii"    # both invertible
    III = "case-iii"  # zero-divisors of the same type
    IV = "case-iv"    # zero-divisors of opposite types
    V = "case-v"      # one zero-divisor, one invertible


@dataclass(frozen=True)
class IndepReport:
    case: IndepCase
    a_indep_b: bool
    b_indep_a: bool
    product_holds: bool

    @property
    def mutual(self) -> bool:
        return self.a_indep_b and self.b_indep_a


_ZD = (ZdClass.ZD_E, ZdClass.ZD_EDAG)


def _indep_case(ca: ZdClass, cb: ZdClass) -> IndepCase:
    if ZdClass.ZERO in (ca, cb):
        return IndepCase.I
    if ca is ZdClass.INVERTIBLE and cb is ZdClass.INVERTIBLE:
        return IndepCase.II
    if ca in _ZD and cb in _ZD:
        return IndepCase.III if ca is cb else IndepCase.IV
    return IndepCase.V


def independence(space: ProbSpace, a, b) -> IndepReport:
    """Test both directions of independence and classify the pair.

    Raises :class:`TheoremViolation` if the two directions disagree or if
    independence holds without the product formula.
    """
    a, b = space.event(a), space.event(b)
    ma, mb = space.measure(a), space.measure(b)
    report = IndepReport(
        case=_indep_case(classify(ma), classify(mb)),
        a_indep_b=cond(space, a, b)[0] == ma,
        b_indep_a=cond(space, b, a)[0] == mb,
        product_holds=space.measure(a & b) == ma * mb,
    )
    if report.a_indep_b != report.b_indep_a:
        raise TheoremViolation(f"independence is not symmetric: {report}")
    if report.a_indep_b and not report.product_holds:
        raise TheoremViolation(f"independent pair violates product formula: {report}")
    return report


def complement_independence(space: ProbSpace, a, b) -> bool:
    """Check that independence of A, B carries over to every complement pair."""
    a, b = space.event(a), space.event(b)
    if not independence(space, a, b).mutual:
        raise NotIndependentInput("events are not mutually independent")
    ac, bc = space.omega - a, space.omega - b
    return all(independence(space, x, y).mutual
               for x, y in ((a, bc), (ac, b), (ac, bc)))


def _product_formula(space: ProbSpace, sets) -> bool:
    product = ONE
    for s in sets:
        product = product * space.measure(s)
    return space.measure(frozenset.intersection(*sets)) == product


def joint_independence(space: ProbSpace, events) -> tuple[bool, bool]:
    """Return ``(jointly, pairwise)`` independence of the events."""
    sets = [space.event(ev) for ev in events]
    if len(sets) < 2:
        raise ValueError("joint_independence needs at least two events")
    pairwise = all(_product_formula(space, pair)
                   for pair in itertools.combinations(sets, 2))
    jointly = pairwise and all(
        _product_formula(space, combo)
        for r in range(3, len(sets) + 1)
        for combo in itertools.combinations(sets, r))
    return jointly, pairwise


@dataclass(frozen=True)
class FSE:
    """A fundamental system of events: a partition of the sample space.

    Parts may be empty or have zero measure.
    """

    parts: tuple[frozenset, ...]

    @classmethod
    def of(cls, space: ProbSpace, parts) -> FSE:
        if isinstance(parts, FSE):
            parts = parts.parts
        sets = tuple(space.event(p) for p in parts)
        if not sets:
            raise InvalidFSE("a fundamental system needs at least one event")
        for (i, x), (j, y) in itertools.combinations(enumerate(sets), 2):
            if x & y:
                raise InvalidFSE(f"parts {i} and {j} overlap on {sorted(x & y)}")
        covered = frozenset().union(*sets)
        if covered != space.omega:
            raise InvalidFSE(f"parts do not cover atoms {sorted(space.omega - covered)}")
        return cls(sets)


def _weighted_terms(space, a, fse):
    return [space.measure(h) * cond(space, a, h)[0] for h in fse.parts]


def total_probability(space: ProbSpace, a, fse) -> HNum:
    """``sum_i P(H_i) P(A | H_i)`` over a fundamental system."""
    a = space.event(a)
    fse = FSE.of(space, fse)
    total = ZERO
    for term in _weighted_terms(space, a, fse):
        total = total + term
    return total


class BayesBranch(enum.Enum):
    INVERTIBLE = "bayes-invertible"
    ZD_E = "bayes-zd-e"
    ZD_EDAG = "bayes-zd-edag"
    ZERO = "bayes-zero"


@dataclass(frozen=True)
class BayesResult:
    posterior: HNum
    branch: BayesBranch
    residual: HNum


def bayes(space: ProbSpace, hypothesis, a, fse) -> BayesResult:
    """Posterior ``P(H_k | A)`` with the residual of the matching Bayes identity.

    For invertible ``P(A)`` the posterior is the usual quotient.  For a
    zero-divisor ``P(A)`` only the ``e`` (or ``e+``) part of the identity is
    constrained; the posterior comes from the conditional definition and the
    residual is the bracketed identity projected on that idempotent.  For
    ``P(A) = 0`` the posterior is ``P(H_k)``, and the residual is zero.
    """
    h, a = space.event(hypothesis), space.event(a)
    fse = FSE.of(space, fse)
    if h not in fse.parts:
        raise HypothesisNotInFSE("hypothesis is not a part of the fundamental system")

    terms = _weighted_terms(space, a, fse)
    total = ZERO
    for term in terms:
        total = total + term
    numerator = terms[fse.parts.index(h)]

    zd = classify(space.measure(a))
    if zd is ZdClass.INVERTIBLE:
        posterior = numerator / total
        return BayesResult(posterior, BayesBranch.INVERTIBLE,
                           posterior * total - numerator)
    if zd is ZdClass.ZERO:
        return BayesResult(space.measure(h), BayesBranch.ZERO, ZERO)
    posterior = cond(space, h, a)[0]
    bracket = numerator - posterior * total
    if zd is ZdClass.ZD_E:
        return BayesResult(posterior, BayesBranch.ZD_E, bracket * E)
    return BayesResult(posterior, BayesBranch.ZD_EDAG, bracket * EDAG)
