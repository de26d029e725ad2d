"""Fox-calculus pairing on first cohomology.

For cocycles phi1, phi2 the pairing is

    <<phi1, phi2>> = -i * sum_j ( <phi1(#dR/db_j), phi2(b_j)> + <phi1(#dR/da_j), phi2(a_j)> )

where ``#`` inverts every word of a group-ring element and phi1 is extended
Z-linearly. With ``<A, B> = tr(A B^*)`` (HERMITIAN) this is hermitian at
unitary representations. With the trace form ``tr(A B)`` and the leading
``-i`` dropped (BILINEAR) it is the complex symplectic form, antisymmetric
and Ad-invariant at every representation.

Both terms carry the same sign.  Giving the b-term the opposite sign produces
a *symmetric* form (already visible for an abelian genus-1 representation,
where it reduces to ``-(x1 y2 + y1 x2)`` instead of the intersection form
``x1 y2 - y1 x2``).
"""

from dataclasses import dataclass
from enum import Enum

import numpy as np

from . import numerics
from .cohomology import Cocycle, h1, schottky_tangent
from .errors import PreconditionError
from .representation import (UNITARY_TOL, is_good, is_strict_schottky, relator_residual)
from .surface_group import evaluate_cocycle, fox_alpha, fox_beta, sharp

ISOTROPY_TOL = 1e-9


class FormKind(str, Enum):
    BILINEAR = "bilinear"
    HERMITIAN = "hermitian"


def _sharp_fox(g):
    """``[(slot, #dR/dx)]`` for all generators in slot order."""
    out = [(i - 1, sharp(fox_alpha(g, i))) for i in range(1, g + 1)]
    out += [(g + i - 1, sharp(fox_beta(g, i))) for i in range(1, g + 1)]
    return out


def _check(rep, kind):
    kind = FormKind(kind)
    if kind is FormKind.HERMITIAN:
        if not rep.is_unitary(UNITARY_TOL) or relator_residual(rep) > UNITARY_TOL:
            raise PreconditionError("the hermitian pairing needs a unitary representation")
    return kind


def _values(rep, phi):
    if isinstance(phi, Cocycle):
        if phi.rep.genus != rep.genus or phi.rep.descriptor != rep.descriptor:
            raise PreconditionError("cocycle belongs to a different representation")
        return phi.values
    return np.asarray(phi, dtype=complex).reshape(rep.num_generators, rep.descriptor.dim_G)


def fox_pairing(rep, phi1, phi2, form_kind=FormKind.BILINEAR):
    """Evaluate the pairing of two cocycles directly from the Fox derivatives."""
    kind = _check(rep, form_kind)
    v1, v2 = _values(rep, phi1), _values(rep, phi2)
    desc = rep.descriptor
    total = 0j
    for slot, elem in _sharp_fox(rep.genus):
        x = evaluate_cocycle(rep, v1, elem)
        if kind is FormKind.HERMITIAN:
            total += x @ desc.hermitian_gram @ v2[slot].conj()
        else:
            total += x @ desc.bilinear_gram @ v2[slot]
    return -1j * total if kind is FormKind.HERMITIAN else -total


def form_matrix(rep, form_kind=FormKind.BILINEAR):
    """Matrix ``W`` with ``pairing(u, v) = u^T W v`` (bilinear) or ``u^T W conj(v)``
    (hermitian), on flattened Lie coordinates."""
    kind = _check(rep, form_kind)
    desc = rep.descriptor
    d, k = desc.dim_G, rep.num_generators
    identity = np.eye(k * d, dtype=complex).reshape(k, d, k * d)
    gram = desc.hermitian_gram if kind is FormKind.HERMITIAN else desc.bilinear_gram
    w = np.zeros((k * d, k * d), dtype=complex)
    for slot, elem in _sharp_fox(rep.genus):
        s = evaluate_cocycle(rep, identity, elem)  # (d, k*d): u -> phi_u(#dR/dx)
        w[:, slot * d:(slot + 1) * d] += s.T @ gram
    return -1j * w if kind is FormKind.HERMITIAN else -w


@dataclass(frozen=True, eq=False)
class PairingMatrix:
    form_kind: FormKind
    basis: object
    entries: np.ndarray
    rank: int

    @property
    def dim(self):
        return self.entries.shape[0]

    @property
    def scale(self):
        m = float(np.abs(self.entries).max()) if self.entries.size else 0.0
        return m if m > 0 else 1.0


def gram(rep, basis, form_kind=FormKind.BILINEAR):
    kind = FormKind(form_kind)
    w = form_matrix(rep, kind)
    b = basis.basis
    other = b.conj() if kind is FormKind.HERMITIAN else b
    return b.T @ w @ other


def pairing_matrix(rep, basis=None, form_kind=FormKind.BILINEAR):
    """Gram matrix of the pairing on ``basis`` (default: :func:`h1`)."""
    kind = FormKind(form_kind)
    basis = h1(rep) if basis is None else basis
    entries = gram(rep, basis, kind)
    return PairingMatrix(kind, basis, entries, numerics.numerical_rank(entries))


def is_isotropic(rep, subspace, form_kind=FormKind.BILINEAR, tol=ISOTROPY_TOL, full=None):
    """Whether the pairing vanishes on ``subspace``, relative to its size on all of H^1."""
    kind = FormKind(form_kind)
    expected = rep.num_generators * rep.descriptor.dim_G
    if subspace.basis.shape[0] != expected:
        raise ValueError(f"subspace lives in dimension {subspace.basis.shape[0]}, expected {expected}")
    if subspace.dim == 0:
        return True
    full = pairing_matrix(rep, None, kind) if full is None else full
    restricted = gram(rep, subspace, kind)
    return bool(np.abs(restricted).max() <= tol * full.scale)


@dataclass(frozen=True)
class LagrangianReport:
    isotropic: bool
    half_dimensional: bool
    lagrangian: bool
    tangent_dim: int
    h1_dim: int


def verify_lagrangian(rep, tol=ISOTROPY_TOL):
    """Check that the strict Schottky tangent space is Lagrangian in H^1."""
    if not is_strict_schottky(rep):
        raise PreconditionError("representation is not strict Schottky")
    if not rep.is_unitary(UNITARY_TOL):
        raise PreconditionError("representation is not unitary")
    if not is_good(rep).is_good:
        raise PreconditionError("representation is not good")
    hs = h1(rep)
    tangent = schottky_tangent(rep, strict=True)
    iso = is_isotropic(rep, tangent, FormKind.BILINEAR, tol, full=pairing_matrix(rep, hs))
    half = 2 * tangent.dim == hs.dim
    return LagrangianReport(iso, half, iso and half, tangent.dim, hs.dim)
