"""Topological type of flat PSL_n bundles.

A PSL_n representation is given by SL_n lifts of the generator images.  The
lifted relator is then a scalar ``zeta * I`` with ``zeta**n == 1``; this root
of unity is the obstruction to lifting the representation to SL_n, i.e. the
topological type of the flat bundle in ``Z/n``.
"""

from dataclasses import dataclass, field

import numpy as np

from .errors import NotPSLRepresentationError
from .group_core import Family, GroupDescriptor, random_unitary
from .representation import SurfaceRep
from .surface_group import evaluate_word, relator

SCALAR_TOL = 1e-8
ROOT_TOL = 1e-9


@dataclass(frozen=True)
class CoveringData:
    """The covering ``SL_n -> PSL_n`` with kernel the n-th roots of unity."""

    n: int

    @property
    def base(self):
        return GroupDescriptor(Family.PSL, self.n)

    @property
    def cover(self):
        return GroupDescriptor(Family.SL, self.n)

    @property
    def central_subgroup(self):
        return [np.exp(2j * np.pi * k / self.n) * np.eye(self.n) for k in range(self.n)]


@dataclass(frozen=True)
class ObstructionClass:
    value: complex
    index: int
    n: int
    trivial: bool = field(init=False)

    def __post_init__(self):
        object.__setattr__(self, "trivial", self.index == 0)


def obstruction_class(rep):
    """Root of unity obtained by evaluating the relator on the stored lifts.

    Reps over GL, SL and tori lift trivially by definition and return 1.
    """
    desc = rep.descriptor
    n = desc.n
    if desc.family is not Family.PSL:
        return ObstructionClass(1 + 0j, 0, n)
    w = evaluate_word(rep, relator(rep.genus))
    lam = np.trace(w) / n
    res = float(np.linalg.norm(w - lam * np.eye(n)))
    if res > SCALAR_TOL or abs(lam ** n - 1) > SCALAR_TOL:
        raise NotPSLRepresentationError(
            f"relator product is not a root-of-unity scalar (residual {res:.2e})", residual=res)
    k = int(round(np.angle(lam) * n / (2 * np.pi))) % n
    return ObstructionClass(complex(lam), k, n)


def central_twist(rep, seed):
    """Multiply every stored lift by an independent random n-th root of unity."""
    rng = np.random.default_rng(seed)
    n = rep.descriptor.n
    roots = np.exp(2j * np.pi * rng.integers(n, size=2 * rep.genus) / n)
    A = [r * m for r, m in zip(roots[:rep.genus], rep.A)]
    B = [r * m for r, m in zip(roots[rep.genus:], rep.B)]
    return rep.with_images(A, B)


def lift_independence_check(rep, seed, twists=1):
    """True iff the obstruction is unchanged under ``twists`` random central twists."""
    base = obstruction_class(rep).value
    seeds = np.random.SeedSequence(seed).spawn(twists)
    return all(abs(obstruction_class(central_twist(rep, s)).value - base) <= ROOT_TOL
               for s in seeds)


def control_rep():
    """Genus-1 PSL_2 representation with nontrivial obstruction ``-1``."""
    desc = GroupDescriptor(Family.PSL, 2)
    a = np.diag([1j, -1j])
    b = np.array([[0, 1], [-1, 0]], dtype=complex)
    return SurfaceRep(desc, 1, (a,), (b,))


def random_schottky_psl(n, genus, seed):
    """Schottky PSL_n rep: scalar root-of-unity a-lifts, Haar SU(n) b-lifts."""
    desc = GroupDescriptor(Family.PSL, n)
    ss = np.random.SeedSequence(seed)
    s_a, *s_b = ss.spawn(1 + genus)
    rng = np.random.default_rng(s_a)
    roots = np.exp(2j * np.pi * rng.integers(n, size=genus) / n)
    A = [r * np.eye(n) for r in roots]
    B = [random_unitary(desc, s).matrix for s in s_b]
    return SurfaceRep(desc, genus, tuple(A), tuple(B))


@dataclass
class SweepReport:
    n: int
    genus: int
    seeds: int
    trivial_count: int
    counterexamples: list
    control_index: int = None

    @property
    def all_trivial(self):
        return not self.counterexamples


def schottky_triviality_sweep(n, genus, seeds, include_control=False):
    """Check that every sampled Schottky PSL_n rep has trivial topological type.

    With ``include_control`` the genus-1 control is evaluated too; its index is
    reported separately so the detector can be seen to fire.
    """
    bad = []
    ok = 0
    for s in range(seeds):
        cls = obstruction_class(random_schottky_psl(n, genus, s))
        if cls.trivial:
            ok += 1
        else:
            bad.append((s, cls.index))
    control = obstruction_class(control_rep()).index if include_control else None
    return SweepReport(n, genus, seeds, ok, bad, control)
