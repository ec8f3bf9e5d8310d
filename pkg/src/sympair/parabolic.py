"""Standard parabolic subgroups of GL_m from subsets of a base.

A subset of a base determines Levi and nilradical root sets, the split
component of the Levi, and the modular character of the parabolic, which we
keep as the exact exponent vector sum(nilradical roots): the modulus itself
is |.| composed with that character.  Predicates for theta-split,
theta-stable and theta-elliptic are computed purely on root sets and
valuation lattices.

The one genuinely matrix-level computation here is the modulus of the fixed
points of the (n, n) block parabolic under the symplectic involution: it is
derived from an explicit basis of the fixed part of the nilradical Lie
algebra rather than quoted, so the closed form |det|^{n+1} is a checked
output, not an input.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Iterable, Sequence

from . import ratlinalg as rl
from .involution import SignedPermutation, is_fixed, standard_symplectic_form
from .roots import CharacterVector, SimpleSystem, standard_base


@dataclass(frozen=True)
class ParabolicDatum:
    """A standard parabolic: base, defining subset, and derived root data."""

    system: SimpleSystem
    subset: frozenset[CharacterVector]
    blocks: tuple[tuple[int, ...], ...]  # torus indices of each Levi block, in chain order

    @cached_property
    def levi_roots(self) -> frozenset[CharacterVector]:
        m = self.system.rank
        out = set()
        for block in self.blocks:
            for i in block:
                for j in block:
                    if i != j:
                        out.add(CharacterVector.root(i, j, m))
        return frozenset(out)

    @cached_property
    def nil_roots(self) -> frozenset[CharacterVector]:
        return frozenset(self.system.positive_roots - self.levi_roots)

    @cached_property
    def modulus_exponent(self) -> CharacterVector:
        """Sum of the nilradical roots; the modulus is |.| of this character."""
        total = CharacterVector.zero(self.system.rank)
        for alpha in self.nil_roots:
            total = total + alpha
        return total

    @cached_property
    def split_component(self) -> tuple[tuple[int, ...], ...]:
        """Basis of the valuation lattice of the split center of the Levi."""
        m = self.system.rank
        basis = []
        for block in self.blocks:
            basis.append(tuple(1 if i + 1 in block else 0 for i in range(m)))
        return tuple(basis)

    @property
    def partition(self) -> tuple[int, ...]:
        return tuple(len(b) for b in self.blocks)

    @property
    def is_proper(self) -> bool:
        return len(self.blocks) > 1


def standard_parabolic(
    system: SimpleSystem, subset: Iterable[CharacterVector]
) -> ParabolicDatum:
    """The standard parabolic attached to a subset of the base."""
    subset = frozenset(subset)
    if not subset <= frozenset(system.base):
        raise ValueError("subset is not contained in the base")
    p = system.chain.images
    blocks: list[tuple[int, ...]] = []
    current = [p[0]]
    for pos in range(system.rank - 1):
        if system.base[pos] in subset:
            current.append(p[pos + 1])
        else:
            blocks.append(tuple(current))
            current = [p[pos + 1]]
    blocks.append(tuple(current))
    return ParabolicDatum(system=system, subset=subset, blocks=tuple(blocks))


def parabolic_from_partition(parts: Sequence[int]) -> ParabolicDatum:
    """The block-upper-triangular parabolic of GL_m for an ordered partition of m."""
    if any(p < 1 for p in parts):
        raise ValueError("partition parts must be positive")
    m = sum(parts)
    system = standard_base(m)
    cuts = set()
    total = 0
    for p in parts[:-1]:
        total += p
        cuts.add(total)
    subset = frozenset(
        CharacterVector.root(i, i + 1, m) for i in range(1, m) if i not in cuts
    )
    return standard_parabolic(system, subset)


def is_theta_split(parabolic: ParabolicDatum, theta: SignedPermutation) -> bool:
    """Whether the involution sends the parabolic to its opposite.

    Root-set criterion: theta maps the nilradical roots onto their negatives
    and stabilizes the Levi roots.
    """
    nil_image = frozenset(theta.apply(alpha) for alpha in parabolic.nil_roots)
    levi_image = frozenset(theta.apply(alpha) for alpha in parabolic.levi_roots)
    negatives = frozenset(-alpha for alpha in parabolic.nil_roots)
    return nil_image == negatives and levi_image == parabolic.levi_roots


def is_theta_stable(parabolic: ParabolicDatum, theta: SignedPermutation) -> bool:
    """Whether the involution stabilizes both the Levi and nilradical root sets."""
    nil_image = frozenset(theta.apply(alpha) for alpha in parabolic.nil_roots)
    levi_image = frozenset(theta.apply(alpha) for alpha in parabolic.levi_roots)
    return nil_image == parabolic.nil_roots and levi_image == parabolic.levi_roots


def split_torus_rank(
    parabolic: ParabolicDatum, theta: SignedPermutation | None = None
) -> int:
    """Rank of the split center of the Levi, or of its theta-split part.

    With theta given, cuts the valuation lattice down by the split condition
    v(theta(s)) = -v(s) before measuring the rank.
    """
    m = parabolic.system.rank
    rows: list[tuple[Fraction, ...]] = [
        alpha.coords for alpha in sorted(parabolic.subset, key=lambda a: a.coords)
    ]
    if theta is not None:
        for j in range(m):
            row = [Fraction(0)] * m
            row[j] += Fraction(1)
            row[theta.images[j] - 1] += Fraction(theta.signs[j])
            rows.append(tuple(row))
    return len(rl.kernel_basis(rows, m))


def is_theta_elliptic_levi(parabolic: ParabolicDatum, theta: SignedPermutation) -> bool:
    """Whether the Levi's theta-split component is no bigger than the center's.

    This is the lattice form of the criterion that a theta-stable Levi lies
    in no proper theta-split parabolic.
    """
    return split_torus_rank(parabolic, theta) == 1


def balanced_partition_check(parts: Sequence[int]) -> bool:
    """Whether an ordered partition equals its reversal."""
    parts = tuple(parts)
    return parts == parts[::-1]


@dataclass(frozen=True)
class FixedModulusReport:
    """Modulus data of the (n, n) parabolic restricted to the fixed Levi torus.

    All exponent vectors live on the torus diag(x_1, ..., x_n) of the fixed
    Levi GL_n, embedded in GL_{2n} as diag(x, J (x^T)^{-1} J).
    """

    n: int
    fixed_nil_dimension: int
    fixed_nil_exponent: tuple[Fraction, ...]   # modulus of the fixed nilradical part
    half_modulus_exponent: tuple[Fraction, ...]  # square root of the full modulus
    ratio_exponent: tuple[Fraction, ...]       # fixed part minus half modulus


def _persymmetric_cells(n: int) -> list[list[tuple[int, int]]]:
    """Orbits of (i, j) in [1, n]^2 under the pairing (i, j) ~ (n+1-j, n+1-i).

    These index a basis of the matrices X with X = J X^T J.
    """
    seen = set()
    classes = []
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            if (i, j) in seen:
                continue
            partner = (n + 1 - j, n + 1 - i)
            cell = [(i, j)] if partner == (i, j) else [(i, j), partner]
            seen.update(cell)
            classes.append(cell)
    return classes


def delta_ratio_on_fixed_levi(n: int) -> FixedModulusReport:
    """Modulus of the fixed points of the (n, n) parabolic against the half modulus.

    The fixed part of the nilradical Lie algebra is spanned by the matrices
    (0 X; 0 0) with X symmetric about the anti-diagonal; each basis element
    is a weight vector for the fixed Levi torus, and the modulus of the
    fixed-point parabolic is the sum of those weights.  The report also
    carries the restriction of the half modulus of the full parabolic, and
    their difference, which should be the determinant character.
    """
    if n < 1:
        raise ValueError(f"invalid rank {n}: need n >= 1")
    m = 2 * n
    form = standard_symplectic_form(n)
    total = [Fraction(0)] * n
    classes = _persymmetric_cells(n)
    for cell in classes:
        # weight of the matrix unit at (i, n + j): x_i * x_{n+1-j}
        weights = set()
        for (i, j) in cell:
            w = [Fraction(0)] * n
            w[i - 1] += 1
            w[n - j] += 1
            weights.add(tuple(w))
        if len(weights) != 1:
            raise AssertionError("basis element is not a weight vector")
        # sanity: 1 + (the basis element) is fixed by the involution
        unipotent = [
            [Fraction(1 if a == b else 0) for b in range(m)] for a in range(m)
        ]
        for (i, j) in cell:
            unipotent[i - 1][n + j - 1] = Fraction(1)
        if not is_fixed(form, tuple(tuple(r) for r in unipotent)):
            raise AssertionError("basis element does not lie in the fixed nilradical")
        weight = weights.pop()
        total = [t + wc for t, wc in zip(total, weight)]

    full = parabolic_from_partition([n, n]).modulus_exponent.coords
    # restrict an ambient exponent to the embedded torus:
    # coordinate i <= n reads x_i, coordinate n + i reads x_{n+1-i}^{-1}
    half = [
        Fraction(1, 2) * (full[j] - full[m - 1 - j]) for j in range(n)
    ]
    ratio = [t - h for t, h in zip(total, half)]
    return FixedModulusReport(
        n=n,
        fixed_nil_dimension=len(classes),
        fixed_nil_exponent=tuple(total),
        half_modulus_exponent=tuple(half),
        ratio_exponent=tuple(ratio),
    )
