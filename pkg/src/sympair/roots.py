"""Character lattice of the diagonal torus of GL_m and its type-A root system.

Conventions used throughout the package:

* Characters of the diagonal torus are rational vectors in the coordinate
  basis e_1, ..., e_m, where e_i reads off the i-th diagonal entry.  The
  roots of GL_m are the vectors e_i - e_j with i != j.
* Weyl group elements are permutations of {1, ..., m} in one-line notation,
  acting on characters by w(e_i) = e_{w(i)}.  Composition is fixed once and
  for all as (w * v)(i) = w(v(i)).
* On coordinate vectors (character vectors and valuation vectors alike) the
  action reads (w . c)_{w(i)} = c_i.

All values are immutable and all operations are pure.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Iterable, Sequence

from .ratlinalg import Mat


@dataclass(frozen=True)
class CharacterVector:
    """Element of the rational character lattice X*(A_0) tensor Q."""

    coords: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "coords", tuple(Fraction(c) for c in self.coords))

    @staticmethod
    def zero(rank: int) -> "CharacterVector":
        return CharacterVector(tuple(Fraction(0) for _ in range(rank)))

    @staticmethod
    def root(i: int, j: int, rank: int) -> "CharacterVector":
        """The root e_i - e_j (1-based indices)."""
        if not (1 <= i <= rank and 1 <= j <= rank and i != j):
            raise ValueError(f"invalid root indices ({i}, {j}) for rank {rank}")
        coords = [Fraction(0)] * rank
        coords[i - 1] = Fraction(1)
        coords[j - 1] = Fraction(-1)
        return CharacterVector(tuple(coords))

    @property
    def rank(self) -> int:
        return len(self.coords)

    @property
    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coords)

    @property
    def is_root(self) -> bool:
        nonzero = [c for c in self.coords if c != 0]
        return sorted(nonzero) == [Fraction(-1), Fraction(1)]

    def root_indices(self) -> tuple[int, int]:
        """Return (i, j) such that self = e_i - e_j."""
        if not self.is_root:
            raise ValueError(f"{self} is not a root")
        i = next(k for k, c in enumerate(self.coords) if c == 1) + 1
        j = next(k for k, c in enumerate(self.coords) if c == -1) + 1
        return i, j

    def __add__(self, other: "CharacterVector") -> "CharacterVector":
        if self.rank != other.rank:
            raise ValueError("rank mismatch")
        return CharacterVector(tuple(a + b for a, b in zip(self.coords, other.coords)))

    def __sub__(self, other: "CharacterVector") -> "CharacterVector":
        return self + (-other)

    def __neg__(self) -> "CharacterVector":
        return CharacterVector(tuple(-c for c in self.coords))

    def scale(self, c) -> "CharacterVector":
        c = Fraction(c)
        return CharacterVector(tuple(c * x for x in self.coords))

    def pair(self, valuation: Sequence) -> Fraction:
        """Pairing with an (integer) valuation vector of the torus."""
        if len(valuation) != self.rank:
            raise ValueError("rank mismatch")
        return sum(
            (c * Fraction(v) for c, v in zip(self.coords, valuation)), Fraction(0)
        )

    def __str__(self) -> str:
        return "(" + ", ".join(str(c) for c in self.coords) + ")"


@dataclass(frozen=True)
class WeylElement:
    """Permutation of {1, ..., m} in one-line notation: images[i-1] = w(i)."""

    images: tuple[int, ...]

    def __post_init__(self) -> None:
        if sorted(self.images) != list(range(1, len(self.images) + 1)):
            raise ValueError(f"{self.images} is not a permutation")

    @staticmethod
    def identity(m: int) -> "WeylElement":
        return WeylElement(tuple(range(1, m + 1)))

    @property
    def degree(self) -> int:
        return len(self.images)

    @property
    def is_identity(self) -> bool:
        return all(v == i + 1 for i, v in enumerate(self.images))

    def __call__(self, i: int) -> int:
        return self.images[i - 1]

    def __mul__(self, other: "WeylElement") -> "WeylElement":
        # (w * v)(i) = w(v(i))
        if self.degree != other.degree:
            raise ValueError("degree mismatch")
        return WeylElement(tuple(self.images[v - 1] for v in other.images))

    def inverse(self) -> "WeylElement":
        inv = [0] * self.degree
        for i, v in enumerate(self.images):
            inv[v - 1] = i + 1
        return WeylElement(tuple(inv))

    def apply(self, chi: CharacterVector) -> CharacterVector:
        """w . chi with w(e_i) = e_{w(i)}."""
        if chi.rank != self.degree:
            raise ValueError("rank mismatch")
        out = [Fraction(0)] * self.degree
        for i, c in enumerate(chi.coords):
            out[self.images[i] - 1] = c
        return CharacterVector(tuple(out))

    def permute(self, seq: Sequence) -> tuple:
        """Apply the same coordinate action to any vector: out[w(i)] = seq[i]."""
        if len(seq) != self.degree:
            raise ValueError("length mismatch")
        out = [None] * self.degree
        for i, x in enumerate(seq):
            out[self.images[i] - 1] = x
        return tuple(out)

    def matrix(self) -> Mat:
        """Permutation matrix W with W e_j = e_{w(j)}."""
        m = self.degree
        return tuple(
            tuple(Fraction(1 if self.images[j] == i + 1 else 0) for j in range(m))
            for i in range(m)
        )


@dataclass(frozen=True)
class SimpleSystem:
    """A base of the GL_m root system together with its positive roots.

    Every base of the type A_(m-1) system has the form
    {e_{p_1} - e_{p_2}, ..., e_{p_{m-1}} - e_{p_m}} for a permutation p,
    stored here as ``chain`` with p_i = chain(i).  The standard base is
    chain = identity.
    """

    rank: int
    base: tuple[CharacterVector, ...]
    chain: WeylElement

    @staticmethod
    def from_base(roots: Iterable[CharacterVector]) -> "SimpleSystem":
        """Build the system from an ordered list of simple roots.

        Raises ValueError if the roots do not form a base (a single chain
        e_{p_1} -> e_{p_2} -> ... -> e_{p_m} visiting every index once).
        """
        base = tuple(roots)
        if not base:
            raise ValueError("empty base")
        rank = base[0].rank
        if len(base) != rank - 1:
            raise ValueError(f"a base of GL_{rank} must have {rank - 1} roots")
        succ: dict[int, int] = {}
        for alpha in base:
            if alpha.rank != rank or not alpha.is_root:
                raise ValueError(f"{alpha} is not a rank-{rank} root")
            i, j = alpha.root_indices()
            if i in succ:
                raise ValueError("not a base: repeated chain start")
            succ[i] = j
        heads = set(succ) - set(succ.values())
        if len(heads) != 1:
            raise ValueError("not a base: roots do not form a single chain")
        order = [heads.pop()]
        while order[-1] in succ:
            order.append(succ[order[-1]])
        if len(order) != rank:
            raise ValueError("not a base: chain does not cover all indices")
        chain = WeylElement(tuple(order))
        expected = tuple(
            CharacterVector.root(order[i], order[i + 1], rank) for i in range(rank - 1)
        )
        if set(expected) != set(base):
            raise ValueError("not a base")
        return SimpleSystem(rank=rank, base=base, chain=chain)

    @cached_property
    def positive_roots(self) -> frozenset[CharacterVector]:
        p = self.chain.images
        return frozenset(
            CharacterVector.root(p[i], p[j], self.rank)
            for i in range(self.rank)
            for j in range(i + 1, self.rank)
        )

    @cached_property
    def all_roots(self) -> frozenset[CharacterVector]:
        return frozenset(
            CharacterVector.root(i, j, self.rank)
            for i in range(1, self.rank + 1)
            for j in range(1, self.rank + 1)
            if i != j
        )

    def is_positive(self, alpha: CharacterVector) -> bool:
        return alpha in self.positive_roots

    def contains_root(self, alpha: CharacterVector) -> bool:
        return alpha.is_root and alpha.rank == self.rank


def standard_base(m: int) -> SimpleSystem:
    """The standard base {e_i - e_{i+1} : 1 <= i <= m-1} of GL_m."""
    if m < 2:
        raise ValueError(f"invalid rank {m}: need m >= 2")
    base = tuple(CharacterVector.root(i, i + 1, m) for i in range(1, m))
    return SimpleSystem(rank=m, base=base, chain=WeylElement.identity(m))


def translate_base(w: WeylElement, system: SimpleSystem) -> SimpleSystem:
    """The Weyl translate w . Delta, with positive set w . (positive set)."""
    if w.degree != system.rank:
        raise ValueError(
            f"rank mismatch: permutation of degree {w.degree}, system of rank {system.rank}"
        )
    base = tuple(w.apply(alpha) for alpha in system.base)
    return SimpleSystem(rank=system.rank, base=base, chain=w * system.chain)


def w_plus(n: int) -> WeylElement:
    """The interleaving permutation of {1, ..., 2n}: 2i-1 -> i, 2i -> 2n+1-i."""
    if n < 1:
        raise ValueError(f"invalid rank {n}: need n >= 1")
    images = [0] * (2 * n)
    for i in range(1, n + 1):
        images[2 * i - 2] = i
        images[2 * i - 1] = 2 * n + 1 - i
    return WeylElement(tuple(images))
