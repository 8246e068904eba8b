"""Random generators and brute-force oracles shared by the test modules.

The oracles work on plain ``(nu1, nu2)`` Fraction pairs and never call the
library's measure or conditioning code.
"""

from fractions import Fraction

from hypothesis import strategies as st

from hprob import HNum, Regime, build_space

REGIME_MASS = {Regime.UNIT: (1, 1), Regime.E: (1, 0), Regime.EDAG: (0, 1)}


def random_rational(rng, bound=6, den=6):
    return Fraction(rng.randint(-bound * den, bound * den), rng.randint(1, den))


def random_hnum(rng, zero_prob=0.1):
    def comp():
        return Fraction(0) if rng.random() < zero_prob else random_rational(rng)
    return HNum(comp(), comp())


def random_component(rng, n, zero_prob=0.3, max_w=6):
    while True:
        raw = [0 if rng.random() < zero_prob else rng.randint(1, max_w) for _ in range(n)]
        if sum(raw):
            total = sum(raw)
            return [Fraction(r, total) for r in raw]


def random_weights(rng, n, regime, zero_prob=0.3):
    zeros = [Fraction(0)] * n
    c1 = random_component(rng, n, zero_prob) if regime is not Regime.EDAG else zeros
    c2 = random_component(rng, n, zero_prob) if regime is not Regime.E else zeros
    return [HNum(x, y) for x, y in zip(c1, c2)]


def atom_ids(n):
    return [str(i) for i in range(1, n + 1)]


def random_space(rng, n=None, regime=None, zero_prob=0.3):
    n = n if n is not None else rng.randint(2, 10)
    regime = regime if regime is not None else rng.choice(list(Regime))
    return build_space(atom_ids(n), random_weights(rng, n, regime, zero_prob), regime)


def all_events(space):
    atoms = space.atoms
    return [frozenset(a for i, a in enumerate(atoms) if mask >> i & 1)
            for mask in range(1 << len(atoms))]


def random_event(rng, space, p=0.5):
    return frozenset(a for a in space.atoms if rng.random() < p)


def product_space(rng, rows, cols, regime):
    """Weights ``u_i * v_j``; every row event is independent of every column event."""
    u = random_weights(rng, rows, regime, zero_prob=0.25)
    v = random_weights(rng, cols, regime, zero_prob=0.25)
    atoms, weights = [], []
    for i in range(rows):
        for j in range(cols):
            atoms.append(f"r{i}c{j}")
            weights.append(u[i] * v[j])
    space = build_space(atoms, weights, regime)
    row_events = [frozenset(f"r{i}c{j}" for j in range(cols)) for i in range(rows)]
    col_events = [frozenset(f"r{i}c{j}" for i in range(rows)) for j in range(cols)]
    return space, row_events, col_events


# -- oracles -------------------------------------------------------------------

def brute_measure(space, event):
    """Atom-by-atom summation over the raw weights."""
    s1 = s2 = Fraction(0)
    for atom in space.atoms:
        if atom in event:
            w = space.weights[atom]
            s1 += w.nu1
            s2 += w.nu2
    return s1, s2


def componentwise_cond(space, a, b):
    """Classical conditional probability in each idempotent component; falls
    back to the unconditioned component where the condition has no mass."""
    a1, a2 = brute_measure(space, a)
    ab1, ab2 = brute_measure(space, a & b)
    b1, b2 = brute_measure(space, b)
    return (ab1 / b1 if b1 else a1), (ab2 / b2 if b2 else a2)


def pair(z):
    return z.nu1, z.nu2


# -- hypothesis strategies -----------------------------------------------------

rationals = st.fractions(min_value=-50, max_value=50, max_denominator=30)
hnums = st.builds(HNum, rationals, rationals)
nonneg_rationals = st.fractions(min_value=0, max_value=50, max_denominator=30)
nonneg_hnums = st.builds(HNum, nonneg_rationals, nonneg_rationals)


@st.composite
def spaces(draw, min_atoms=1, max_atoms=6, regimes=tuple(Regime)):
    regime = draw(st.sampled_from(regimes))
    n = draw(st.integers(min_atoms, max_atoms))

    def component():
        raw = draw(st.lists(st.integers(0, 5), min_size=n, max_size=n)
                   .filter(lambda xs: sum(xs) > 0))
        return [Fraction(r, sum(raw)) for r in raw]

    zeros = [Fraction(0)] * n
    c1 = component() if regime is not Regime.EDAG else zeros
    c2 = component() if regime is not Regime.E else zeros
    return build_space(atom_ids(n), [HNum(x, y) for x, y in zip(c1, c2)], regime)


@st.composite
def space_and_events(draw, k=2, **kwargs):
    space = draw(spaces(**kwargs))
    subset = st.frozensets(st.sampled_from(space.atoms))
    return (space, *[draw(subset) for _ in range(k)])
