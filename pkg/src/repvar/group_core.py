"""Matrix groups G, their Lie algebras, centers and compact forms.

Four families are supported: ``GL``, ``SL``, ``PSL`` and ``TORUS``.  PSL
elements are stored as SL lifts and compared up to n-th roots of unity.
Torus elements of rank n are stored as invertible diagonal n x n matrices.

Lie-algebra vectors are handled either as matrices or as coordinate vectors
with respect to :meth:`GroupDescriptor.lie_basis`; all dimensions are complex.
"""

from dataclasses import dataclass, field
from enum import Enum
from functools import cached_property

import numpy as np
from scipy.stats import unitary_group

from .errors import InvalidElementError

ELEMENT_TOL = 1e-9
MEMBERSHIP_TOL = 1e-9


class Family(str, Enum):
    GL = "GL"
    SL = "SL"
    PSL = "PSL"
    TORUS = "TORUS"


@dataclass(frozen=True)
class GroupDescriptor:
    """A supported matrix group family together with its size ``n``.

    For ``TORUS`` the integer ``n`` is the rank of the torus.
    """

    family: Family
    n: int

    def __post_init__(self):
        object.__setattr__(self, "family", Family(self.family))
        if not isinstance(self.n, (int, np.integer)) or self.n < 1:
            raise ValueError(f"matrix size must be a positive integer, got {self.n!r}")
        object.__setattr__(self, "n", int(self.n))

    def __str__(self):
        return f"{self.family.value}{self.n}"

    @classmethod
    def parse(cls, text):
        """Parse ``"SL2"``, ``"GL3"``, ``"TORUS1"`` and the like."""
        text = text.strip().upper()
        for fam in sorted(Family, key=lambda f: -len(f.value)):
            if text.startswith(fam.value) and text[len(fam.value):].isdigit():
                return cls(fam, int(text[len(fam.value):]))
        raise ValueError(f"cannot parse group descriptor {text!r}")

    @property
    def ambient_dim(self):
        return self.n

    @property
    def dim_G(self):
        n = self.n
        return {
            Family.GL: n * n,
            Family.SL: n * n - 1,
            Family.PSL: n * n - 1,
            Family.TORUS: n,
        }[self.family]

    @property
    def dim_Z(self):
        return {Family.GL: 1, Family.SL: 0, Family.PSL: 0, Family.TORUS: self.n}[self.family]

    @property
    def zf_order(self):
        """Order of the component group Z/Z° of the center."""
        return self.n if self.family is Family.SL else 1

    @property
    def is_special(self):
        return self.family in (Family.SL, Family.PSL)

    # -- Lie algebra ---------------------------------------------------------

    @cached_property
    def _basis_matrices(self):
        n = self.n

        def unit(i, j):
            e = np.zeros((n, n), dtype=complex)
            e[i, j] = 1.0
            return e

        if self.family is Family.GL:
            mats = [unit(i, j) for i in range(n) for j in range(n)]
        elif self.family is Family.TORUS:
            mats = [unit(k, k) for k in range(n)]
        else:
            mats = [unit(i, j) for i in range(n) for j in range(n) if i != j]
            mats += [unit(k, k) - unit(k + 1, k + 1) for k in range(n - 1)]
        for m in mats:
            m.setflags(write=False)
        return tuple(mats)

    @cached_property
    def basis_matrix(self):
        """``(n*n, dim_G)`` matrix whose columns are the row-major basis vectors."""
        if not self._basis_matrices:
            return np.zeros((self.n * self.n, 0), dtype=complex)
        return np.stack([m.ravel() for m in self._basis_matrices], axis=1)

    @cached_property
    def _coord_map(self):
        return np.linalg.pinv(self.basis_matrix)

    def lie_basis(self):
        """Deterministic basis of the Lie algebra as a list of :class:`LieVector`."""
        return [LieVector(self, m, coords=np.eye(self.dim_G, dtype=complex)[k])
                for k, m in enumerate(self._basis_matrices)]

    def coords(self, matrix):
        """Coordinates of a Lie-algebra matrix w.r.t. ``lie_basis``."""
        return self._coord_map @ np.asarray(matrix, dtype=complex).ravel()

    def from_coords(self, coords):
        n = self.n
        return (self.basis_matrix @ np.asarray(coords, dtype=complex)).reshape(n, n)

    def membership_residual(self, matrix):
        """Distance of ``matrix`` from the Lie algebra (trace or off-diagonal part)."""
        m = np.asarray(matrix, dtype=complex)
        if self.family is Family.GL:
            return 0.0
        if self.family is Family.TORUS:
            return float(np.linalg.norm(m - np.diag(np.diag(m))))
        return float(abs(np.trace(m)))

    @cached_property
    def hermitian_gram(self):
        """Entry ``[i, j] = tr(b_i b_j^*)``; so ``hermitian_ip(x, y) = x^T G conj(y)``."""
        b = self._basis_matrices
        return np.array([[np.trace(p @ q.conj().T) for q in b] for p in b],
                        dtype=complex).reshape(self.dim_G, self.dim_G)

    @cached_property
    def bilinear_gram(self):
        """Entry ``[i, j] = tr(b_i b_j)``."""
        b = self._basis_matrices
        return np.array([[np.trace(p @ q) for q in b] for p in b],
                        dtype=complex).reshape(self.dim_G, self.dim_G)

    @cached_property
    def metric_factor(self):
        """Upper-triangular ``F`` with ``<x, y> = (F y)^* (F x)`` for coordinate vectors.

        Multiplying coordinates by ``F`` turns the hermitian trace metric into
        the standard one.
        """
        m = self.hermitian_gram.T  # <x, y> = y^* M x
        if m.size == 0:
            return m
        return np.linalg.cholesky(m).conj().T

    @cached_property
    def center_coords(self):
        """Orthonormal (metric) basis of the Lie algebra of the center, as coordinate columns."""
        if self.family is Family.GL:
            z = self.coords(np.eye(self.n))[:, None]
        elif self.family is Family.TORUS:
            z = np.eye(self.n, dtype=complex)
        else:
            return np.zeros((self.dim_G, 0), dtype=complex)
        f = self.metric_factor
        # orthonormalise in the metric
        q, _ = np.linalg.qr(f @ z)
        return np.linalg.solve(f, q)

    def ad_matrix(self, g):
        """Matrix of ``v -> g v g^{-1}`` in ``lie_basis`` coordinates."""
        g = _matrix(g)
        ginv = np.linalg.inv(g)
        # row-major vec(g X h) = kron(g, h^T) vec(X)
        full = np.kron(g, ginv.T)
        return self._coord_map @ full @ self.basis_matrix

    # -- group elements ------------------------------------------------------

    def element(self, matrix, tol=ELEMENT_TOL):
        return GroupElement(self, matrix, tol=tol)

    def lie_vector(self, matrix, tol=MEMBERSHIP_TOL):
        return LieVector(self, matrix, tol=tol)

    def is_central(self, matrix, tol=ELEMENT_TOL):
        """Whether ``matrix`` lies in the center Z of this group.

        For PSL the center is trivial, so this means "is a scalar lift".
        """
        m = _matrix(matrix)
        if self.family is Family.TORUS:
            return True
        scale = max(1.0, float(np.linalg.norm(m)))
        lam = np.trace(m) / self.n
        if np.linalg.norm(m - lam * np.eye(self.n)) > tol * scale:
            return False
        if self.family is Family.SL:
            return abs(lam ** self.n - 1) <= tol * self.n
        return True

    def equal(self, x, y, tol=ELEMENT_TOL):
        """Group equality; up to n-th roots of unity for PSL."""
        x, y = _matrix(x), _matrix(y)
        if self.family is not Family.PSL:
            return np.linalg.norm(x - y) <= tol * max(1.0, np.linalg.norm(x))
        return _distance_to_roots(x @ np.linalg.inv(y), self.n) <= tol * self.n


def _distance_to_roots(m, n):
    """Distance from ``m`` to the nearest ``zeta * I`` with ``zeta**n == 1``."""
    lam = np.trace(m) / n
    k = round(np.angle(lam) * n / (2 * np.pi)) % n
    zeta = np.exp(2j * np.pi * k / n)
    return float(np.linalg.norm(m - zeta * np.eye(n)))


def _matrix(x):
    if isinstance(x, (GroupElement, LieVector)):
        return x.matrix
    return np.asarray(x, dtype=complex)


@dataclass(frozen=True, eq=False)
class GroupElement:
    descriptor: GroupDescriptor
    matrix: np.ndarray
    tol: float = field(default=ELEMENT_TOL, repr=False)

    def __post_init__(self):
        desc = self.descriptor
        m = np.array(self.matrix, dtype=complex)
        if m.shape != (desc.n, desc.n):
            raise InvalidElementError(f"expected a {desc.n}x{desc.n} matrix, got shape {m.shape}")
        if not np.all(np.isfinite(m)):
            raise InvalidElementError("matrix has non-finite entries")
        if desc.family is Family.TORUS:
            if np.any(m[~np.eye(desc.n, dtype=bool)] != 0):
                raise InvalidElementError("torus elements must be exactly diagonal")
            if np.any(np.diag(m) == 0):
                raise InvalidElementError("torus elements need nonzero diagonal entries")
        det = np.linalg.det(m)
        if desc.is_special:
            if abs(det - 1) > self.tol:
                raise InvalidElementError(f"|det - 1| = {abs(det - 1):.3e} exceeds {self.tol}")
        elif abs(det) <= 1e-300 or np.linalg.cond(m) > 1e14:
            raise InvalidElementError("matrix is singular")
        m.setflags(write=False)
        object.__setattr__(self, "matrix", m)

    def inverse(self):
        return GroupElement(self.descriptor, np.linalg.inv(self.matrix), tol=self.tol)

    def __matmul__(self, other):
        return GroupElement(self.descriptor, self.matrix @ _matrix(other), tol=self.tol)


@dataclass(frozen=True, eq=False)
class LieVector:
    descriptor: GroupDescriptor
    matrix: np.ndarray
    coords: np.ndarray = None
    tol: float = field(default=MEMBERSHIP_TOL, repr=False)

    def __post_init__(self):
        desc = self.descriptor
        m = np.array(self.matrix, dtype=complex)
        if m.shape != (desc.n, desc.n):
            raise InvalidElementError(f"expected a {desc.n}x{desc.n} matrix, got shape {m.shape}")
        scale = max(1.0, float(np.linalg.norm(m)))
        if desc.membership_residual(m) > self.tol * scale:
            raise InvalidElementError(f"matrix is not in the Lie algebra of {desc}")
        m.setflags(write=False)
        object.__setattr__(self, "matrix", m)
        if self.coords is not None:
            c = np.array(self.coords, dtype=complex)
            c.setflags(write=False)
            object.__setattr__(self, "coords", c)

    @classmethod
    def from_coords(cls, desc, coords):
        c = np.asarray(coords, dtype=complex)
        return cls(desc, desc.from_coords(c), coords=c)

    def to_coords(self):
        if self.coords is not None:
            return self.coords
        return self.descriptor.coords(self.matrix)


def ad(g, v):
    """Adjoint action ``g v g^{-1}``."""
    desc = v.descriptor if isinstance(v, LieVector) else g.descriptor
    gm = _matrix(g)
    try:
        ginv = np.linalg.inv(gm)
    except np.linalg.LinAlgError as exc:
        raise InvalidElementError("cannot act by a singular matrix") from exc
    return LieVector(desc, gm @ _matrix(v) @ ginv)


def hermitian_ip(v, w):
    """``tr(v w^*)``: positive definite, conjugate-linear in ``w``."""
    return complex(np.trace(_matrix(v) @ _matrix(w).conj().T))


def bilinear_form(v, w):
    """Trace form ``tr(v w)``; symmetric and invariant under all of G."""
    return complex(np.trace(_matrix(v) @ _matrix(w)))


def _rng(seed):
    return np.random.default_rng(seed)


def random_unitary(desc, seed):
    """Haar-random element of the compact form K (U(n), SU(n) or the unit torus)."""
    rng = _rng(seed)
    n = desc.n
    if desc.family is Family.TORUS:
        theta = rng.uniform(0.0, 2 * np.pi, size=n)
        return GroupElement(desc, np.diag(np.exp(1j * theta)))
    u = unitary_group.rvs(n, random_state=rng) if n > 1 else np.exp(2j * np.pi * rng.uniform()) * np.eye(1)
    u = np.asarray(u, dtype=complex).reshape(n, n)
    if desc.is_special:
        # divide by one n-th root of det; the result stays unitary
        u = u * np.exp(-1j * np.angle(np.linalg.det(u)) / n)
    return GroupElement(desc, u)


def random_central(desc, seed):
    """Random element of the center: a unit scalar (GL), a root of unity (SL, PSL lift)
    or a unit diagonal (TORUS)."""
    rng = _rng(seed)
    n = desc.n
    if desc.family is Family.TORUS:
        return random_unitary(desc, seed)
    if desc.family is Family.GL:
        return GroupElement(desc, np.exp(2j * np.pi * rng.uniform()) * np.eye(n))
    k = int(rng.integers(n))
    return GroupElement(desc, np.exp(2j * np.pi * k / n) * np.eye(n))


def center_component_count(desc, genus):
    """Number of irreducible components of the Schottky space: ``|Z/Z°| ** genus``."""
    if genus < 1:
        raise ValueError("genus must be at least 1")
    return desc.zf_order ** genus


def unitarity_residual(matrix):
    m = _matrix(matrix)
    return float(np.linalg.norm(m.conj().T @ m - np.eye(m.shape[0])))
