"""Representations of surface groups and free groups into matrix groups.

A :class:`SurfaceRep` stores the images of ``a_i`` and ``b_i``; a
:class:`FreeRep` stores the images of the free generators ``c_i``.  Both are
immutable.  Predicates for (strict) Schottky representations, the
Lie-algebra stabilizer, goodness and random generation live here too.
"""

from dataclasses import dataclass, field
from functools import cached_property

import numpy as np

from . import numerics
from .errors import (GenerationError, InvalidElementError, InvalidGenusError,
                     PreconditionError, RelatorError, UnsupportedError)
from .group_core import (Family, GroupDescriptor, GroupElement, _distance_to_roots,
                         _matrix, random_central, random_unitary, unitarity_residual)
from .surface_group import evaluate_word, relator

RELATOR_TOL = 1e-9
CENTRAL_TOL = 1e-9
UNITARY_TOL = 1e-9
MAX_RETRIES = 16


def _freeze(desc, mats):
    out = []
    for m in mats:
        m = GroupElement(desc, _matrix(m)).matrix
        out.append(m)
    return tuple(out)


class _RepBase:
    """Shared plumbing: generator images, their inverses and adjoint matrices."""

    @cached_property
    def _inverses(self):
        return tuple(np.linalg.inv(m) for m in self.generators)

    @cached_property
    def _ad(self):
        ad = self.descriptor.ad_matrix
        return tuple(ad(m) for m in self.generators), tuple(ad(m) for m in self._inverses)

    def image(self, letter):
        slot = self.slot(letter)
        return self.generators[slot] if letter.exp > 0 else self._inverses[slot]

    def ad_generator(self, letter):
        fwd, inv = self._ad
        slot = self.slot(letter)
        return fwd[slot] if letter.exp > 0 else inv[slot]

    @property
    def num_generators(self):
        return len(self.generators)

    def is_unitary(self, tol=UNITARY_TOL):
        return all(unitarity_residual(m) <= tol for m in self.generators)


@dataclass(frozen=True, eq=False)
class SurfaceRep(_RepBase):
    """Representation of the genus-``g`` surface group.

    ``A[i]`` and ``B[i]`` are the images of ``a_{i+1}`` and ``b_{i+1}``. The
    relator is checked at construction unless ``validate=False``; for PSL it
    is checked up to a root-of-unity scalar.
    """

    descriptor: GroupDescriptor
    genus: int
    A: tuple
    B: tuple
    tol: float = RELATOR_TOL
    validate: bool = field(default=True, repr=False)

    def __post_init__(self):
        if self.genus < 1:
            raise InvalidGenusError(f"genus must be at least 1, got {self.genus}")
        if len(self.A) != self.genus or len(self.B) != self.genus:
            raise InvalidGenusError(f"need {self.genus} images for each of a_i and b_i")
        object.__setattr__(self, "A", _freeze(self.descriptor, self.A))
        object.__setattr__(self, "B", _freeze(self.descriptor, self.B))
        if self.validate:
            res = relator_residual(self)
            if res > self.tol:
                raise RelatorError(f"relator residual {res:.3e} exceeds tolerance {self.tol:.1e}",
                                   residual=res)

    @property
    def generators(self):
        return self.A + self.B

    def slot(self, letter):
        if letter.kind == "a":
            return letter.index - 1
        if letter.kind == "b":
            return self.genus + letter.index - 1
        raise KeyError(letter)

    @classmethod
    def from_free(cls, central, free, **kwargs):
        """Surface rep with ``a_i -> central[i]`` and ``b_i -> free.C[i]``."""
        return cls(free.descriptor, free.genus, tuple(central), free.C, **kwargs)

    def free_part(self):
        return FreeRep(self.descriptor, self.genus, self.B)

    def with_images(self, A, B):
        return SurfaceRep(self.descriptor, self.genus, tuple(A), tuple(B), tol=self.tol,
                          validate=self.validate)


@dataclass(frozen=True, eq=False)
class FreeRep(_RepBase):
    """Representation of the free group on ``genus`` generators ``c_i``."""

    descriptor: GroupDescriptor
    genus: int
    C: tuple

    def __post_init__(self):
        if self.genus < 1 or len(self.C) != self.genus:
            raise InvalidGenusError(f"need {self.genus} generator images")
        object.__setattr__(self, "C", _freeze(self.descriptor, self.C))

    @property
    def rank(self):
        return self.genus

    @property
    def generators(self):
        return self.C

    def slot(self, letter):
        if letter.kind != "c":
            raise KeyError(letter)
        return letter.index - 1


def trivial_rep(desc, genus):
    eye = np.eye(desc.n)
    return SurfaceRep(desc, genus, (eye,) * genus, (eye,) * genus)


def trivial_free_rep(desc, rank):
    return FreeRep(desc, rank, (np.eye(desc.n),) * rank)


def relator_residual(rep):
    """Frobenius distance of the relator image from the identity.

    For PSL the distance is to the nearest root-of-unity scalar, since those
    all represent the identity.
    """
    w = evaluate_word(rep, relator(rep.genus))
    if rep.descriptor.family is Family.PSL:
        return _distance_to_roots(w, rep.descriptor.n)
    return float(np.linalg.norm(w - np.eye(rep.descriptor.n)))


def is_schottky(rep, tol=CENTRAL_TOL):
    """Every ``a_i`` maps into the center (for PSL: every lift is a scalar)."""
    return all(rep.descriptor.is_central(m, tol) for m in rep.A)


def is_strict_schottky(rep, tol=CENTRAL_TOL):
    """Every ``a_i`` maps to the identity (for PSL, up to the scalar ambiguity of lifts)."""
    desc = rep.descriptor
    eye = np.eye(desc.n)
    if desc.family is Family.PSL:
        return all(desc.equal(m, eye, tol) for m in rep.A)
    return all(np.linalg.norm(m - eye) <= tol for m in rep.A)


def _stabilizer_map(rep):
    d = rep.descriptor.dim_G
    eye = np.eye(d)
    fwd, _ = rep._ad
    if not fwd:
        return np.zeros((0, d))
    return np.vstack([a - eye for a in fwd])


def stabilizer_lie_dim(rep):
    """Dimension of the Lie algebra of the centralizer of the image."""
    m = _stabilizer_map(rep)
    return rep.descriptor.dim_G - numerics.numerical_rank(m)


def burnside_span_dim(rep):
    """Dimension of the associative algebra generated by the images.

    Products of generator images and inverses are added one letter at a
    time, for at most ``2 n^2`` rounds or until the span stops growing.
    """
    n = rep.descriptor.n
    mats = list(rep.generators) + list(rep._inverses)
    q = np.eye(n, dtype=complex).reshape(-1, 1)
    for _ in range(2 * n * n):
        if q.shape[1] == n * n:
            break
        new = [(col.reshape(n, n) @ m).ravel() for col in q.T for m in mats]
        q_next = numerics.range_space(np.column_stack([q] + new))
        if q_next.shape[1] == q.shape[1]:
            break
        q = q_next
    return q.shape[1]


@dataclass(frozen=True)
class StabilizerReport:
    """Outcome of the goodness test.

    Only the Lie algebra of the stabilizer is computed, so a stabilizer that is
    a finite extension of the center cannot be told apart from the center itself.
    """

    lie_dim: int
    center_dim: int
    burnside_span_dim: int
    is_irreducible: bool
    is_good: bool


def is_good(rep):
    """Irreducible (Burnside test in the defining representation) with stabilizer
    of the same dimension as the center.

    Raises :class:`UnsupportedError` for tori; its ``partial`` attribute still
    holds the stabilizer dimensions.
    """
    desc = rep.descriptor
    lie_dim = stabilizer_lie_dim(rep)
    if desc.family is Family.TORUS:
        partial = StabilizerReport(lie_dim, desc.dim_Z, 0, False, False)
        raise UnsupportedError("irreducibility is only tested for GL, SL and PSL", partial=partial)
    span = burnside_span_dim(rep)
    irreducible = span == desc.n ** 2
    return StabilizerReport(lie_dim, desc.dim_Z, span, irreducible,
                            irreducible and lie_dim == desc.dim_Z)


def _derived_seed(seed, attempt):
    return np.random.SeedSequence([int(seed), int(attempt)])


def schottky_candidate(desc, genus, strict, seed, attempt=0):
    """One draw of the generator behind :func:`random_good_schottky`.

    ``a_i`` are the identity (strict) or random central elements, ``b_1`` and
    ``b_2`` are independent Haar-random elements of the compact form, and the
    remaining ``b_i`` are the identity.
    """
    if genus < 1:
        raise InvalidGenusError("genus must be at least 1")
    ss = _derived_seed(seed, attempt)
    seeds = ss.spawn(2 + genus)
    eye = np.eye(desc.n)
    if strict:
        A = [eye] * genus
    else:
        A = [random_central(desc, s).matrix for s in seeds[2:]]
    B = [random_unitary(desc, seeds[0]).matrix]
    if genus >= 2:
        B.append(random_unitary(desc, seeds[1]).matrix)
    B += [eye] * (genus - len(B))
    return SurfaceRep(desc, genus, tuple(A), tuple(B))


def random_good_schottky(desc, genus, strict=True, seed=0):
    """A unitary (strict) Schottky representation that passes :func:`is_good`.

    Two Haar-random compact elements generate a dense subgroup almost surely,
    so the first attempt nearly always succeeds; up to 16 retries are made
    with derived seeds. Tori have no goodness test and get a single draw.
    """
    if genus < 2:
        raise InvalidGenusError("good Schottky representations need genus >= 2")
    if desc.family is Family.TORUS:
        return schottky_candidate(desc, genus, strict, seed)
    for attempt in range(MAX_RETRIES + 1):
        rep = schottky_candidate(desc, genus, strict, seed, attempt)
        if is_good(rep).is_good:
            return rep
    raise GenerationError(f"no good Schottky representation for {desc}, genus {genus} "
                          f"after {MAX_RETRIES} retries")


def conjugate(rep, h):
    """Conjugate every generator image by ``h``."""
    hm = _matrix(h)
    try:
        hinv = np.linalg.inv(hm)
    except np.linalg.LinAlgError as exc:
        raise InvalidElementError("conjugating element is singular") from exc
    if np.linalg.cond(hm) > 1e14:
        raise InvalidElementError("conjugating element is singular")
    conj = [hm @ m @ hinv for m in rep.generators]
    if isinstance(rep, FreeRep):
        return FreeRep(rep.descriptor, rep.genus, tuple(conj))
    g = rep.genus
    return SurfaceRep(rep.descriptor, g, tuple(conj[:g]), tuple(conj[g:]), tol=rep.tol,
                      validate=rep.validate)


def require_schottky(rep, strict):
    ok = is_strict_schottky(rep) if strict else is_schottky(rep)
    if not ok:
        kind = "strict Schottky" if strict else "Schottky"
        raise PreconditionError(f"representation is not {kind}")


__all__ = [
    "SurfaceRep", "FreeRep", "StabilizerReport", "trivial_rep", "trivial_free_rep",
    "relator_residual", "is_schottky", "is_strict_schottky", "stabilizer_lie_dim",
    "burnside_span_dim", "is_good", "schottky_candidate", "random_good_schottky", "conjugate",
]
