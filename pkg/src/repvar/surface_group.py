"""Words in the surface (or free) group generators, Fox derivatives of the
surface relator, and evaluation of representations and cocycles.

Generators are written ``a1..ag`` (alpha), ``b1..bg`` (beta) and ``c1..cg``
for a free group; capital letters denote inverses, so the genus-1 relator is
``"a1 b1 A1 B1"``.
"""

from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

from .errors import GenusMismatchError, IndexOutOfRangeError, InvalidGenusError


class Letter(NamedTuple):
    kind: str  # "a", "b" or "c"
    index: int  # 1-based
    exp: int  # +1 or -1

    def inverse(self):
        return Letter(self.kind, self.index, -self.exp)

    def __str__(self):
        s = f"{self.kind}{self.index}"
        return s if self.exp > 0 else s.upper()


@dataclass(frozen=True)
class Word:
    letters: tuple
    genus: int

    def __post_init__(self):
        letters = tuple(Letter(*x) for x in self.letters)
        for x in letters:
            if x.kind not in ("a", "b", "c") or x.exp not in (1, -1):
                raise ValueError(f"bad letter {x!r}")
            if not 1 <= x.index <= self.genus:
                raise IndexOutOfRangeError(f"generator index {x.index} outside 1..{self.genus}")
        object.__setattr__(self, "letters", letters)

    @classmethod
    def parse(cls, text, genus):
        letters = []
        for tok in text.split():
            kind = tok[0]
            letters.append(Letter(kind.lower(), int(tok[1:]), 1 if kind.islower() else -1))
        return cls(tuple(letters), genus)

    @classmethod
    def identity(cls, genus):
        return cls((), genus)

    @classmethod
    def gen(cls, kind, index, genus, exp=1):
        return cls((Letter(kind, index, exp),), genus)

    def __str__(self):
        return " ".join(str(x) for x in self.letters)

    def __len__(self):
        return len(self.letters)

    def __mul__(self, other):
        if self.genus != other.genus:
            raise GenusMismatchError("cannot multiply words of different genus")
        return Word(self.letters + other.letters, self.genus)

    def inverse(self):
        return Word(tuple(x.inverse() for x in reversed(self.letters)), self.genus)

    def reduce(self):
        """Freely reduce, cancelling adjacent ``x x^-1`` pairs."""
        out = []
        for x in self.letters:
            if out and out[-1] == x.inverse():
                out.pop()
            else:
                out.append(x)
        return Word(tuple(out), self.genus)


@dataclass(frozen=True)
class GroupRingElement:
    """Integer combination of words; terms are kept in order, zero coefficients dropped."""

    terms: tuple

    def __post_init__(self):
        terms = tuple((int(c), w) for c, w in self.terms if int(c) != 0)
        if len({w.genus for _, w in terms}) > 1:
            raise GenusMismatchError("all words of a group-ring element must share a genus")
        object.__setattr__(self, "terms", terms)

    def __add__(self, other):
        return GroupRingElement(self.terms + other.terms)

    def __neg__(self):
        return GroupRingElement(tuple((-c, w) for c, w in self.terms))

    def __sub__(self, other):
        return self + (-other)

    def __str__(self):
        return " ".join(f"{c:+d}[{w}]" for c, w in self.terms) or "0"


def as_ring(x):
    if isinstance(x, GroupRingElement):
        return x
    return GroupRingElement(((1, x),))


def _check_genus(g):
    if g < 1:
        raise InvalidGenusError(f"genus must be at least 1, got {g}")


def relator(g):
    """``a1 b1 A1 B1 ... ag bg Ag Bg``."""
    return partial_relator(g, g)


def partial_relator(g, k):
    """Product of the first ``k`` commutators; ``k = 0`` gives the empty word."""
    _check_genus(g)
    if not 0 <= k <= g:
        raise IndexOutOfRangeError(f"k={k} outside 0..{g}")
    letters = []
    for i in range(1, k + 1):
        letters += [Letter("a", i, 1), Letter("b", i, 1), Letter("a", i, -1), Letter("b", i, -1)]
    return Word(tuple(letters), g)


def _check_index(g, i):
    _check_genus(g)
    if not 1 <= i <= g:
        raise IndexOutOfRangeError(f"index {i} outside 1..{g}")


def fox_alpha(g, i):
    """Fox derivative of the relator in ``a_i``: ``R_{i-1} - R_i b_i``."""
    _check_index(g, i)
    return GroupRingElement(((1, partial_relator(g, i - 1)),
                             (-1, partial_relator(g, i) * Word.gen("b", i, g))))


def fox_beta(g, i):
    """Fox derivative of the relator in ``b_i``: ``R_{i-1} a_i - R_i``."""
    _check_index(g, i)
    return GroupRingElement(((1, partial_relator(g, i - 1) * Word.gen("a", i, g)),
                             (-1, partial_relator(g, i))))


def sharp(x):
    """The involution inverting every word of a group-ring element."""
    if isinstance(x, Word):
        return x.inverse()
    return GroupRingElement(tuple((c, w.inverse()) for c, w in x.terms))


# -- evaluation -------------------------------------------------------------

def _generator_kinds(rep):
    return ("c",) if hasattr(rep, "C") else ("a", "b")


def _check_word(rep, w):
    if w.genus != rep.genus:
        raise GenusMismatchError(f"word of genus {w.genus} used with a rep of genus {rep.genus}")
    kinds = _generator_kinds(rep)
    for x in w.letters:
        if x.kind not in kinds:
            raise GenusMismatchError(f"letter {x} is not a generator of this group")


def evaluate_word(rep, w):
    """Image of a word under a representation, as a matrix."""
    _check_word(rep, w)
    eye = np.eye(rep.descriptor.n, dtype=complex)
    # letters with an exactly trivial image are dropped before free reduction,
    # so e.g. commutators with the identity cancel exactly
    kept = Word(tuple(x for x in w.letters if not np.array_equal(rep.image(x), eye)), w.genus)
    m = eye
    for x in kept.reduce().letters:
        m = m @ rep.image(x)
    return m


def evaluate_ring(rep, x):
    """Matrix sum ``sum n_i rho(w_i)``."""
    x = as_ring(x)
    out = np.zeros((rep.descriptor.n,) * 2, dtype=complex)
    for c, w in x.terms:
        out += c * evaluate_word(rep, w)
    return out


def ad_ring(rep, x):
    """``Ad_rho`` of a group-ring element, acting term-by-term, in Lie coordinates."""
    x = as_ring(x)
    d = rep.descriptor.dim_G
    out = np.zeros((d, d), dtype=complex)
    for c, w in x.terms:
        out += c * rep.descriptor.ad_matrix(evaluate_word(rep, w))
    return out


def _cocycle_values(rep, phi):
    values = getattr(phi, "values", phi)
    values = np.asarray(values, dtype=complex)
    if values.shape[:2] != (rep.num_generators, rep.descriptor.dim_G):
        raise GenusMismatchError(
            f"cocycle values have shape {values.shape[:2]}, expected "
            f"{(rep.num_generators, rep.descriptor.dim_G)}")
    return values


def evaluate_cocycle(rep, phi, x):
    """Extend generator values of ``phi`` to a word or group-ring element.

    Uses ``phi(x y) = phi(x) + Ad(x) phi(y)`` and ``phi(x^-1) = -Ad(x^-1) phi(x)``,
    folded left to right. ``phi`` is a :class:`~repvar.cohomology.Cocycle` or an
    array of shape ``(num_generators, dim_G, ...)``; trailing axes are carried
    along, which lets callers evaluate many assignments (or a whole linear map)
    at once. Returns Lie coordinates.
    """
    values = _cocycle_values(rep, phi)
    out = np.zeros(values.shape[1:], dtype=complex)
    for c, w in as_ring(x).terms:
        _check_word(rep, w)
        total = np.zeros(values.shape[1:], dtype=complex)
        prefix = np.eye(rep.descriptor.dim_G, dtype=complex)
        for letter in w.letters:
            slot = rep.slot(letter)
            if letter.exp > 0:
                step = values[slot]
            else:
                step = -np.tensordot(rep.ad_generator(letter), values[slot], axes=1)
            total = total + np.tensordot(prefix, step, axes=1)
            prefix = prefix @ rep.ad_generator(letter)
        out = out + c * total
    return out
