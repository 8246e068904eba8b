"""Finite probability spaces with hyperbolic-valued measures.

The sample space is a finite list of named atoms and the event algebra is its
full power set.  A measure is specified by one non-negative hyperbolic weight
per atom, which makes it additive by construction; the only axioms that can
fail are non-negativity and the prescribed total mass, and both are checked
when the space is built.

Events are plain ``frozenset``\\ s of atom ids.  Functions that take an event
also accept a registered event name or any iterable of atom ids.
"""

from __future__ import annotations

import enum
import itertools
from collections.abc import Iterable, Mapping
from fractions import Fraction
from types import MappingProxyType

from .errors import (DuplicateAtom, EmptySpace, InvalidAtomId, MassMismatch,
                     NegativeWeight, NotASubset, NotDecreasing, UnknownAtom,
                     UnknownAtomInEvent, UnknownEvent)
from .hyperbolic import (E, EDAG, ONE, ZERO, HNum, OrderRel, compare,
                         is_nonneg)

__all__ = [
    "Regime", "ProbSpace", "Event", "build_space", "measure",
    "complement_law", "monotone_compare", "union_inclusion_exclusion",
    "subadditivity_check", "continuity_limit", "increasing_limit",
]

Event = frozenset

_CACHE_LIMIT = 1 << 16


class Regime(enum.Enum):
    """Prescribed total mass of the space: 1, e or e+."""

    UNIT = "unit"
    E = "e"
    EDAG = "edag"

    @property
    def mass(self) -> HNum:
        return _REGIME_MASS[self]

    @classmethod
    def from_mass(cls, mass: HNum) -> Regime:
        for regime, value in _REGIME_MASS.items():
            if value == mass:
                return regime
        raise ValueError(f"{mass} is not a valid total mass")


_REGIME_MASS = {Regime.UNIT: ONE, Regime.E: E, Regime.EDAG: EDAG}


class ProbSpace:
    """A validated finite space ``(atoms, power set, measure)``.

    Instances are immutable.  ``measure`` is the only primitive the rest of
    the library reads, so overriding it in a subclass is the supported way to
    inject a deliberately broken measure (see ``verify``).
    """

    def __init__(self, atoms: Iterable[str], weights, regime: Regime | str,
                 events: Mapping[str, Iterable[str]] | None = None):
        atoms = tuple(atoms)
        if not atoms:
            raise EmptySpace("a probability space needs at least one atom")
        seen = set()
        for atom in atoms:
            if not isinstance(atom, str) or not atom:
                raise InvalidAtomId(f"atom ids must be non-empty strings, got {atom!r}")
            if atom in seen:
                raise DuplicateAtom(f"duplicate atom {atom!r}")
            seen.add(atom)

        if isinstance(weights, Mapping):
            extra = set(weights) - seen
            if extra:
                raise UnknownAtomInEvent(
                    f"weights given for unknown atoms {sorted(extra)}")
            missing = [a for a in atoms if a not in weights]
            if missing:
                raise InvalidAtomId(f"no weight given for atoms {missing}")
            weight_list = [weights[a] for a in atoms]
        else:
            weight_list = list(weights)
            if len(weight_list) != len(atoms):
                raise InvalidAtomId(
                    f"{len(atoms)} atoms but {len(weight_list)} weights")
        weight_list = [w if isinstance(w, HNum) else HNum(w) for w in weight_list]

        for atom, w in zip(atoms, weight_list):
            if not is_nonneg(w):
                raise NegativeWeight(atom, w)

        regime = Regime(regime)
        total = HNum._raw(sum((w.nu1 for w in weight_list), Fraction(0)),
                          sum((w.nu2 for w in weight_list), Fraction(0)))
        if total != regime.mass:
            raise MassMismatch(total, regime.mass)

        self._atoms = atoms
        self._weights = MappingProxyType(dict(zip(atoms, weight_list)))
        self._regime = regime
        self._omega = frozenset(atoms)
        self._cache: dict[frozenset, HNum] = {}

        named = {}
        for name, members in (events or {}).items():
            members = frozenset(members)
            unknown = members - self._omega
            if unknown:
                raise UnknownAtomInEvent(
                    f"event {name!r} refers to unknown atoms {sorted(unknown)}")
            named[name] = members
        self._events = MappingProxyType(named)

    atoms = property(lambda self: self._atoms)
    weights = property(lambda self: self._weights)
    regime = property(lambda self: self._regime)
    named_events = property(lambda self: self._events)
    omega = property(lambda self: self._omega)

    @property
    def total_mass(self) -> HNum:
        return self._regime.mass

    def event(self, spec) -> frozenset:
        """Resolve a registered name or an iterable of atom ids to an event."""
        if isinstance(spec, str):
            try:
                return self._events[spec]
            except KeyError:
                raise UnknownEvent(f"no event named {spec!r}") from None
        members = spec if isinstance(spec, frozenset) else frozenset(spec)
        if not members <= self._omega:
            raise UnknownAtom(
                f"unknown atoms {sorted(members - self._omega)} in event")
        return members

    def complement(self, spec) -> frozenset:
        return self._omega - self.event(spec)

    def measure(self, spec) -> HNum:
        members = self.event(spec)
        cached = self._cache.get(members)
        if cached is not None:
            return cached
        weights = self._weights
        value = HNum._raw(sum((weights[a].nu1 for a in members), Fraction(0)),
                          sum((weights[a].nu2 for a in members), Fraction(0)))
        if len(self._cache) >= _CACHE_LIMIT:
            self._cache.clear()
        self._cache[members] = value
        return value

    def p1(self, spec) -> Fraction:
        """Real measure carried by the ``e`` component."""
        return self.measure(spec).nu1

    def p2(self, spec) -> Fraction:
        """Real measure carried by the ``e+`` component."""
        return self.measure(spec).nu2

    def with_events(self, events: Mapping[str, Iterable[str]]) -> ProbSpace:
        merged = dict(self._events)
        merged.update(events)
        return ProbSpace(self._atoms, self._weights, self._regime, merged)

    def __eq__(self, other):
        if not isinstance(other, ProbSpace):
            return NotImplemented
        return (self._regime is other._regime
                and dict(self._weights) == dict(other._weights)
                and dict(self._events) == dict(other._events))

    def __hash__(self):
        return hash((self._regime, frozenset(self._weights.items())))

    def __repr__(self):
        return (f"ProbSpace(atoms={list(self._atoms)!r}, "
                f"regime={self._regime.value!r}, events={sorted(self._events)!r})")


def build_space(atoms, weights, regime, events=None) -> ProbSpace:
    """Validate and build a space.

    Raises :class:`NegativeWeight` (axiom (i)), :class:`MassMismatch`
    (axiom (ii)) or :class:`DuplicateAtom`.
    """
    return ProbSpace(atoms, weights, regime, events)


def measure(space: ProbSpace, event) -> HNum:
    return space.measure(event)


def complement_law(space: ProbSpace, event) -> tuple[HNum, HNum]:
    """Return ``(P(A), P(A^c))``; they always sum to the total mass."""
    a = space.event(event)
    return space.measure(a), space.measure(space.omega - a)


def monotone_compare(space: ProbSpace, a, b) -> OrderRel:
    a, b = space.event(a), space.event(b)
    if not a <= b:
        raise NotASubset("monotone_compare requires the first event to be "
                         "contained in the second")
    return compare(space.measure(a), space.measure(b))


def union_inclusion_exclusion(space: ProbSpace, events) -> HNum:
    """Measure of a union via the alternating sum over all index subsets."""
    sets = [space.event(ev) for ev in events]
    if not sets:
        raise ValueError("need at least one event")
    # accumulate integer-free components per sign, one Fraction sum each
    plus1, plus2, minus1, minus2 = [], [], [], []
    for r in range(1, len(sets) + 1):
        acc1, acc2 = (plus1, plus2) if r % 2 else (minus1, minus2)
        for combo in itertools.combinations(sets, r):
            m = space.measure(frozenset.intersection(*combo))
            acc1.append(m.nu1)
            acc2.append(m.nu2)
    zero = Fraction(0)
    return HNum._raw(sum(plus1, zero) - sum(minus1, zero),
                     sum(plus2, zero) - sum(minus2, zero))


def subadditivity_check(space: ProbSpace, events) -> tuple[HNum, HNum, OrderRel]:
    sets = [space.event(ev) for ev in events]
    if not sets:
        raise ValueError("need at least one event")
    union = space.measure(frozenset().union(*sets))
    bound = ZERO
    for s in sets:
        bound = bound + space.measure(s)
    return union, bound, compare(union, bound)


def _check_chain(sets, decreasing=True):
    for prev, nxt in zip(sets, sets[1:]):
        if not (nxt <= prev if decreasing else prev <= nxt):
            kind = "decreasing" if decreasing else "increasing"
            raise NotDecreasing(f"chain is not {kind}")


def continuity_limit(space: ProbSpace, chain) -> HNum:
    """Limit of ``P(A_n)`` along a decreasing chain, i.e. ``P(intersection)``."""
    sets = [space.event(ev) for ev in chain]
    if not sets:
        raise ValueError("need a nonempty chain")
    _check_chain(sets)
    return space.measure(frozenset.intersection(*sets))


def increasing_limit(space: ProbSpace, chain) -> HNum:
    """Limit along an increasing chain, obtained from the decreasing chain of
    complements."""
    sets = [space.event(ev) for ev in chain]
    if not sets:
        raise ValueError("need a nonempty chain")
    _check_chain(sets, decreasing=False)
    return space.total_mass - continuity_limit(space, [space.omega - s for s in sets])
