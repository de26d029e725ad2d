"""Cocycles, coboundaries and first cohomology with coefficients in the
adjoint representation, as numeric subspaces of ``g^k`` (k = 2g for surface
groups, k = g for free groups).

Vectors of ``g^k`` are stored as Lie coordinates of shape ``(k * dim_G,)``,
slot ``j`` occupying ``[j*dim_G, (j+1)*dim_G)``, slots ordered
``a_1..a_g, b_1..b_g``. Orthogonality always refers to the slot-wise
hermitian trace metric, so :class:`Subspace` bases are orthonormal for it.
"""

from dataclasses import dataclass

import numpy as np
import scipy.linalg

from . import numerics
from .errors import PreconditionError, RelatorError, UnsupportedError
from .representation import (FreeRep, is_good, is_schottky, is_strict_schottky,
                             relator_residual, require_schottky, stabilizer_lie_dim)
from .surface_group import ad_ring, fox_alpha, fox_beta


@dataclass(frozen=True, eq=False)
class Cocycle:
    """Generator values of a (candidate) 1-cocycle, shape ``(k, dim_G)``."""

    rep: object
    values: np.ndarray

    def __post_init__(self):
        v = np.array(self.values, dtype=complex).reshape(self.rep.num_generators,
                                                         self.rep.descriptor.dim_G)
        v.setflags(write=False)
        object.__setattr__(self, "values", v)

    @classmethod
    def from_vector(cls, rep, vec):
        return cls(rep, np.asarray(vec).reshape(rep.num_generators, rep.descriptor.dim_G))

    @property
    def vector(self):
        return self.values.ravel()

    def residual(self):
        """Relative size of the relator differential applied to this assignment."""
        if isinstance(self.rep, FreeRep):
            return 0.0
        norm = np.linalg.norm(self.values)
        if norm == 0:
            return 0.0
        return float(np.linalg.norm(relator_differential(self.rep) @ self.vector) / norm)

    def is_valid(self, tol=1e-8):
        return self.residual() <= tol


def coboundary(rep, a):
    """The cocycle ``x -> Ad(x) a - a`` for ``a`` in Lie coordinates."""
    a = np.asarray(a, dtype=complex)
    fwd, _ = rep._ad
    return Cocycle(rep, np.stack([m @ a - a for m in fwd]))


@dataclass(frozen=True, eq=False)
class Subspace:
    """Subspace of ``g^k``; ``basis`` columns are Lie coordinates, orthonormal
    for the slot-wise hermitian metric."""

    ambient_dim: int
    basis: np.ndarray

    @property
    def dim(self):
        return self.basis.shape[1]

    def cocycles(self, rep):
        return [Cocycle.from_vector(rep, col) for col in self.basis.T]


def slot_metric(desc, slots):
    """Block-diagonal factor turning Lie coordinates on ``g^slots`` into
    orthonormal-frame coordinates."""
    f = desc.metric_factor
    if slots == 0 or f.size == 0:
        return np.zeros((0, 0), dtype=complex)
    return scipy.linalg.block_diag(*([f] * slots))


class _Frame:
    """Converts between Lie coordinates and metric-orthonormal coordinates."""

    def __init__(self, desc, slots):
        self.desc = desc
        self.slots = slots
        self.f = slot_metric(desc, slots)
        self.dim = desc.dim_G * slots

    def to_frame(self, x):
        return self.f @ x

    def from_frame(self, z):
        if z.shape[0] == 0:
            return z
        return scipy.linalg.solve_triangular(self.f, z)

    def subspace(self, z):
        return Subspace(self.dim, self.from_frame(z))


def relator_differential(rep):
    """Linear map ``phi -> phi(R)`` on generator assignments, via Fox derivatives.

    The column block for ``a_i`` is ``Ad(dR/da_i)`` and that for ``b_i`` is
    ``Ad(dR/db_i)``, the adjoint action of a group-ring element being taken
    term by term. Shape ``(dim_G, 2g * dim_G)``.
    """
    res = relator_residual(rep)
    if res > rep.tol:
        raise RelatorError(f"relator residual {res:.3e} exceeds tolerance", residual=res)
    g = rep.genus
    blocks = [ad_ring(rep, fox_alpha(g, i)) for i in range(1, g + 1)]
    blocks += [ad_ring(rep, fox_beta(g, i)) for i in range(1, g + 1)]
    return np.hstack(blocks)


def coboundary_map(rep):
    """``a -> (Ad(x) a - a)_x`` stacked over the generator images."""
    fwd, _ = rep._ad
    eye = np.eye(rep.descriptor.dim_G)
    return np.vstack([m - eye for m in fwd])


def z1(rep):
    """Cocycles: the numerical kernel of :func:`relator_differential`."""
    fr = _Frame(rep.descriptor, rep.num_generators)
    d = relator_differential(rep)
    return fr.subspace(numerics.null_space(d @ fr.from_frame(np.eye(fr.dim))))


def b1(rep):
    """Coboundaries: the column space of :func:`coboundary_map`."""
    fr = _Frame(rep.descriptor, rep.num_generators)
    return fr.subspace(numerics.range_space(fr.to_frame(coboundary_map(rep))))


def _complement(fr, big, small):
    """Orthocomplement of ``small`` inside ``big`` (both Subspaces), frame coords."""
    zb = fr.to_frame(big.basis)
    zs = fr.to_frame(small.basis)
    proj = zb - zs @ (zs.conj().T @ zb)
    return numerics.range_space(proj)


def h1(rep):
    """Harmonic-style representatives of ``Z^1 / B^1``: the orthocomplement of
    the coboundaries inside the cocycles."""
    fr = _Frame(rep.descriptor, rep.num_generators)
    return fr.subspace(_complement(fr, z1(rep), b1(rep)))


def project(rep, subspace, onto):
    """Orthogonal projection of ``subspace`` onto ``onto``, as a Subspace."""
    fr = _Frame(rep.descriptor, rep.num_generators)
    zo = fr.to_frame(onto.basis)
    z = zo @ (zo.conj().T @ fr.to_frame(subspace.basis))
    return fr.subspace(numerics.range_space(z))


def schottky_cocycles(rep, strict=True):
    """Cocycles whose ``a_i`` values vanish (strict) or lie in the center's Lie algebra."""
    require_schottky(rep, strict)
    desc = rep.descriptor
    g, d = rep.genus, desc.dim_G
    fr = _Frame(desc, rep.num_generators)
    constraints = [relator_differential(rep) @ fr.from_frame(np.eye(fr.dim))]
    zc = desc.metric_factor @ desc.center_coords
    if strict or zc.shape[1] == 0:
        keep_out = np.eye(d)
    else:
        keep_out = np.eye(d) - zc @ zc.conj().T
    for i in range(g):
        row = np.zeros((d, fr.dim), dtype=complex)
        row[:, i * d:(i + 1) * d] = keep_out
        constraints.append(row)
    return fr.subspace(numerics.null_space(np.vstack(constraints)))


def schottky_tangent(rep, strict=True):
    """Tangent space of the (strict) Schottky locus, projected into :func:`h1`."""
    return project(rep, schottky_cocycles(rep, strict), h1(rep))


def formula_dims(desc, genus):
    """Dimension predictions at good representations."""
    dG, dZ, g = desc.dim_G, desc.dim_Z, genus
    return {
        "Z1": (2 * g - 1) * dG + dZ,
        "B1": dG - dZ,
        "H1": (2 * g - 2) * dG + 2 * dZ,
        "schottky_strict": (g - 1) * dG + dZ,
        "schottky": (g - 1) * dG + (g + 1) * dZ,
    }


@dataclass(frozen=True)
class DimsReport:
    dim_Z1: int
    dim_B1: int
    dim_H1: int
    dim_schottky_tangent: int
    stabilizer_lie_dim: int
    formula_Z1: int
    formula_B1: int
    formula_H1: int
    formula_schottky: int
    matches: bool
    schottky_kind: str = None  # "strict", "schottky" or None


def free_cohomology_dims(rep):
    """Cohomology dimensions of a free-group representation.

    There is no cocycle condition, so ``Z^1`` is all of ``g^rank``; the
    predicted ``H^1`` dimension uses the actual stabilizer, which makes it
    valid at every representation.
    """
    desc = rep.descriptor
    stab = stabilizer_lie_dim(rep)
    dz1 = rep.rank * desc.dim_G
    db1 = b1(rep).dim
    f_b1 = desc.dim_G - stab
    f_h1 = rep.rank * desc.dim_G - desc.dim_G + stab
    return DimsReport(dz1, db1, dz1 - db1, None, stab, dz1, f_b1, f_h1, None,
                      db1 == f_b1 and dz1 - db1 == f_h1)


def dims_report(rep):
    """Computed dimensions next to the formula values.

    ``matches`` is only ever true at good representations; elsewhere the
    report just carries the raw numbers. The Schottky tangent is the strict
    one for strict reps, the full Schottky one for other Schottky reps.
    """
    desc = rep.descriptor
    zs, bs = z1(rep), b1(rep)
    hs = h1(rep)
    stab = stabilizer_lie_dim(rep)
    kind = "strict" if is_strict_schottky(rep) else "schottky" if is_schottky(rep) else None
    tangent = schottky_tangent(rep, kind == "strict").dim if kind else None
    f = formula_dims(desc, rep.genus)
    f_sch = f["schottky_strict"] if kind == "strict" else f["schottky"] if kind else None
    try:
        good = is_good(rep).is_good
    except UnsupportedError:
        good = False
    matches = bool(good and kind is not None
                   and (zs.dim, bs.dim, hs.dim, tangent) == (f["Z1"], f["B1"], f["H1"], f_sch))
    return DimsReport(zs.dim, bs.dim, hs.dim, tangent, stab,
                      f["Z1"], f["B1"], f["H1"], f_sch, matches, kind)


def require_valid(phi, tol=1e-8):
    if not phi.is_valid(tol):
        raise PreconditionError(f"not a cocycle (residual {phi.residual():.2e})")
