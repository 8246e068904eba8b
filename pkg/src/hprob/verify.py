"""Run the full law suite against one space.

Every law is checked on all events when the space is small enough, and on a
seeded sample of event pairs, triples, chains and partitions otherwise, so a
report is reproducible for a given ``(space, samples, seed)``.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field

from .errors import CapExceeded
from .hyperbolic import E, EDAG, ONE, ZERO, HNum, OrderRel, ZdClass, classify, compare, is_nonneg
from .inference import (ChainCondition, FSE, bayes, chain_mult, complement_independence,
                        cond, conditional_space, independence, mult_theorem,
                        total_probability)
from .space import (ProbSpace, Regime, complement_law, continuity_limit, increasing_limit,
                    subadditivity_check, union_inclusion_exclusion)

DEFAULT_CAP = 12


@dataclass(frozen=True)
class Check:
    law: str
    passed: bool
    detail: str


@dataclass
class VerifyReport:
    checks: list[Check] = field(default_factory=list)

    @property
    def all_pass(self) -> bool:
        return all(c.passed for c in self.checks)

    def failed(self) -> list[Check]:
        return [c for c in self.checks if not c.passed]

    def __getitem__(self, law: str) -> Check:
        for c in self.checks:
            if c.law == law:
                return c
        raise KeyError(law)

    def render(self) -> str:
        lines = [f"{'PASS' if c.passed else 'FAIL'} {c.law}: {c.detail}"
                 for c in self.checks]
        lines.append("all-pass" if self.all_pass else
                     f"{len(self.failed())} law(s) failed")
        return "\n".join(lines) + "\n"

    def to_dict(self) -> dict:
        return {"all_pass": self.all_pass,
                "checks": [{"law": c.law, "passed": c.passed, "detail": c.detail}
                           for c in self.checks]}


class _Fail(Exception):
    pass


def _expect(condition, message):
    if not condition:
        raise _Fail(message)


def _fmt(event) -> str:
    return "{" + ",".join(sorted(event)) + "}"


def _component_cond(space, a, b) -> HNum:
    """Classical conditional per idempotent component, falling back to the
    unconditioned component where the condition has zero mass."""
    ma, mab, mb = space.measure(a), space.measure(a & b), space.measure(b)
    nu1 = mab.nu1 / mb.nu1 if mb.nu1 else ma.nu1
    nu2 = mab.nu2 / mb.nu2 if mb.nu2 else ma.nu2
    return HNum(nu1, nu2)


class _Suite:
    def __init__(self, space: ProbSpace, samples: int, seed: int):
        self.space = space
        self.rng = random.Random(seed)
        self.samples = samples
        atoms = space.atoms
        self.events = [frozenset(a for i, a in enumerate(atoms) if mask >> i & 1)
                       for mask in range(1 << len(atoms))]
        n_events = len(self.events)
        if n_events * (n_events + 1) // 2 <= samples:
            self.pairs = list(itertools.combinations_with_replacement(self.events, 2))
        else:
            self.pairs = [(self.rng.choice(self.events), self.rng.choice(self.events))
                          for _ in range(samples)]
        self.triples = [tuple(self.rng.choice(self.events) for _ in range(3))
                        for _ in range(samples)]

    def random_event(self):
        return self.rng.choice(self.events)

    def random_partition(self):
        k = self.rng.randint(1, min(4, len(self.space.atoms)))
        labels = [self.rng.randrange(k) for _ in self.space.atoms]
        return [frozenset(a for a, lab in zip(self.space.atoms, labels) if lab == i)
                for i in range(k)]

    # -- axioms -------------------------------------------------------------
    def axiom_i(self):
        for ev in self.events:
            _expect(is_nonneg(self.space.measure(ev)), f"P({_fmt(ev)}) is negative")
        return f"{len(self.events)} events non-negative"

    def axiom_ii(self):
        total = self.space.measure(self.space.omega)
        _expect(total == self.space.total_mass, f"P(Omega) = {total}")
        return f"P(Omega) = {self.space.regime.value}"

    def axiom_iii(self):
        for ev in self.events:
            parts = ZERO
            for atom in ev:
                parts = parts + self.space.measure((atom,))
            _expect(self.space.measure(ev) == parts,
                    f"P({_fmt(ev)}) differs from the sum over its atoms")
        for a, b in self.pairs:
            b = b - a
            _expect(self.space.measure(a | b) == self.space.measure(a) + self.space.measure(b),
                    f"not additive on {_fmt(a)}, {_fmt(b)}")
        return "finitely additive"

    # -- properties I-VI ------------------------------------------------------
    def complement(self):
        for ev in self.events:
            pa, pc = complement_law(self.space, ev)
            _expect(pa + pc == self.space.total_mass, f"fails for {_fmt(ev)}")
        return "P(A) + P(A^c) = total mass"

    def empty(self):
        _expect(self.space.measure(frozenset()).is_zero(), "P(empty) != 0")
        return "P(empty) = 0"

    def monotone(self):
        n = 0
        for a, b in self.pairs:
            small, big = a & b, a | b
            rel = compare(self.space.measure(small), self.space.measure(big))
            _expect(rel in (OrderRel.LESS, OrderRel.EQUAL),
                    f"P({_fmt(small)}) vs P({_fmt(big)}) is {rel.value}")
            n += 1
        for ev in self.events:
            rel = compare(self.space.measure(ev), self.space.total_mass)
            _expect(rel in (OrderRel.LESS, OrderRel.EQUAL),
                    f"P({_fmt(ev)}) not below the total mass")
        return f"{n} nested pairs ordered; all events below the total mass"

    def regime_form(self):
        regime = self.space.regime
        if regime is Regime.UNIT:
            return "not applicable in the unit regime"
        allowed = ((ZdClass.ZERO, ZdClass.ZD_E) if regime is Regime.E
                   else (ZdClass.ZERO, ZdClass.ZD_EDAG))
        for ev in self.events:
            m = self.space.measure(ev)
            lam = m.nu1 if regime is Regime.E else m.nu2
            _expect(classify(m) in allowed and 0 <= lam <= 1,
                    f"P({_fmt(ev)}) = {m} is not of the required form")
        symbol = "lambda*e" if regime is Regime.E else "mu*e+"
        return f"every event has the form {symbol} with coefficient in [0, 1]"

    def addition(self):
        groups = [(a, b) for a, b in self.pairs] + self.triples
        for group in groups:
            lhs = union_inclusion_exclusion(self.space, group)
            rhs = self.space.measure(frozenset().union(*group))
            _expect(lhs == rhs, f"fails for {[_fmt(g) for g in group]}")
        return f"{len(groups)} pairs/triples"

    def subadditive(self):
        for group in list(self.pairs) + self.triples:
            _, _, rel = subadditivity_check(self.space, group)
            _expect(rel in (OrderRel.LESS, OrderRel.EQUAL),
                    f"{rel.value} for {[_fmt(g) for g in group]}")
        return "P(union) below the sum"

    def continuity(self):
        n = 0
        for _ in range(max(1, self.samples // 10)):
            chain = [self.random_event()]
            for _ in range(self.rng.randint(1, 4)):
                cur = list(chain[-1])
                keep = [a for a in cur if self.rng.random() < 0.7]
                chain.append(frozenset(keep))
            limit = continuity_limit(self.space, chain)
            _expect(limit == self.space.measure(chain[-1]),
                    f"decreasing chain ending at {_fmt(chain[-1])}")
            up = list(reversed(chain))
            _expect(increasing_limit(self.space, up) == self.space.measure(up[-1]),
                    f"increasing chain ending at {_fmt(up[-1])}")
            n += 1
        return f"{n} chains"

    # -- conditional probability ----------------------------------------------
    def cond_measure(self):
        conditions = [b for b in self.events if not self.space.measure(b).is_zero()]
        if len(conditions) > self.samples // 5:
            conditions = self.rng.sample(conditions, max(1, self.samples // 5))
        for b in conditions:
            mass, _ = cond(self.space, b, b)
            _expect(mass in (ONE, E, EDAG), f"P(B|B) = {mass} for B = {_fmt(b)}")
            sub = conditional_space(self.space, b)
            _expect(sub.total_mass == mass, f"conditional space mass for {_fmt(b)}")
            a = self.random_event()
            a1 = frozenset(x for x in a if self.rng.random() < 0.5)
            a2 = a - a1
            whole = cond(self.space, a, b)[0]
            _expect(is_nonneg(whole), f"negative P({_fmt(a)}|{_fmt(b)})")
            _expect(whole == cond(self.space, a1, b)[0] + cond(self.space, a2, b)[0],
                    f"not additive given {_fmt(b)}")
            _expect(sub.measure(a & b) == cond(self.space, a & b, b)[0],
                    f"conditional space disagrees on {_fmt(a & b)}")
        return f"{len(conditions)} conditioning events"

    def cond_compat(self):
        for a, b in self.pairs:
            _expect(cond(self.space, a, b)[0] == _component_cond(self.space, a, b),
                    f"P({_fmt(a)}|{_fmt(b)}) disagrees with the componentwise form")
        return f"{len(self.pairs)} pairs"

    def multiplication(self):
        for a, b in self.pairs:
            for x, y in ((a, b), (b, a)):
                lhs, rhs = mult_theorem(self.space, x, y)
                _expect(lhs == rhs, f"fails for A={_fmt(x)}, B={_fmt(y)}")
        return f"{2 * len(self.pairs)} ordered pairs"

    def chain(self):
        counts = dict.fromkeys(ChainCondition, 0)
        for _ in range(self.samples):
            n = self.rng.randint(2, 5)
            events = [self.random_event() for _ in range(n)]
            lhs, rhs, condition = chain_mult(self.space, events)
            counts[condition] += 1
            if condition is not ChainCondition.NOT_APPLICABLE:
                _expect(lhs == rhs, f"{condition.value} chain {[_fmt(e) for e in events]}")
        return ", ".join(f"{c.value}={k}" for c, k in counts.items())

    def independence(self):
        found = 0
        for a, b in self.pairs:
            report = independence(self.space, a, b)
            _expect(report.product_holds == report.a_indep_b,
                    f"product formula and independence disagree on {_fmt(a)}, {_fmt(b)}")
            if report.mutual:
                found += 1
                _expect(complement_independence(self.space, a, b),
                        f"complements of {_fmt(a)}, {_fmt(b)} not independent")
        return f"{len(self.pairs)} pairs, {found} independent"

    def total(self):
        n = 0
        for _ in range(max(1, self.samples // 10)):
            parts = self.random_partition()
            a = self.random_event()
            _expect(total_probability(self.space, a, parts) == self.space.measure(a),
                    f"fails for A={_fmt(a)}")
            n += 1
        return f"{n} partitions"

    def bayes(self):
        counts = {}
        for _ in range(max(1, self.samples // 10)):
            parts = self.random_partition()
            a = self.random_event()
            fse = FSE.of(self.space, parts)
            for h in fse.parts:
                result = bayes(self.space, h, a, fse)
                counts[result.branch.value] = counts.get(result.branch.value, 0) + 1
                _expect(result.residual.is_zero(),
                        f"{result.branch.value} residual {result.residual}")
        return ", ".join(f"{k}={v}" for k, v in sorted(counts.items()))


_LAWS = [
    ("axiom-i nonnegativity", "axiom_i"),
    ("axiom-ii total mass", "axiom_ii"),
    ("axiom-iii additivity", "axiom_iii"),
    ("I complement", "complement"),
    ("II empty set", "empty"),
    ("III monotonicity", "monotone"),
    ("regime form", "regime_form"),
    ("IV addition theorem", "addition"),
    ("V subadditivity", "subadditive"),
    ("VI continuity", "continuity"),
    ("conditional measure", "cond_measure"),
    ("conditional compatibility", "cond_compat"),
    ("multiplication theorem", "multiplication"),
    ("generalized multiplication", "chain"),
    ("independence", "independence"),
    ("total probability", "total"),
    ("bayes residuals", "bayes"),
]

LAWS = tuple(name for name, _ in _LAWS)


def verify(space: ProbSpace, cap: int = DEFAULT_CAP, samples: int = 300,
           seed: int = 0) -> VerifyReport:
    if len(space.atoms) > cap:
        raise CapExceeded(f"space has {len(space.atoms)} atoms, cap is {cap}")
    suite = _Suite(space, samples, seed)
    report = VerifyReport()
    for law, method in _LAWS:
        try:
            detail = getattr(suite, method)()
            report.checks.append(Check(law, True, detail))
        except _Fail as exc:
            report.checks.append(Check(law, False, str(exc)))
        except Exception as exc:  # a broken measure may make helpers raise
            report.checks.append(Check(law, False, f"{type(exc).__name__}: {exc}"))
    return report
