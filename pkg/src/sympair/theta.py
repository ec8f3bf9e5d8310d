"""Root-system structure relative to a lattice involution.

Covers theta-fixed roots, theta-bases, the restriction map to the maximal
split torus of the symmetric space, restricted root systems, theta-split
subsets of a base, and the dominant cones on which square-integrability
criteria are tested.

Valuation convention.  A point s of a split torus is recorded by the integer
vector v(s) of uniformizer-valuations of its diagonal entries.  Since the
absolute value of the uniformizer is < 1,

    |alpha(s)| <= 1   <=>   <alpha, v(s)> >= 0,

so every cone condition below is an exact integer inequality and the residue
cardinality never needs a numeric value.  The valuation-zero part of a torus
(its unit points) is invisible at this level, which is exactly the quotient
the criteria are stated on.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Iterable, Sequence

from . import ratlinalg as rl
from .involution import SignedPermutation
from .roots import CharacterVector, SimpleSystem, standard_base, translate_base, w_plus


@dataclass(frozen=True)
class RestrictedCharacter:
    """Character of the maximal split torus of the symmetric space, rank n."""

    coords: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "coords", tuple(Fraction(c) for c in self.coords))

    @property
    def rank(self) -> int:
        return len(self.coords)

    @property
    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coords)

    def __str__(self) -> str:
        return "(" + ", ".join(str(c) for c in self.coords) + ")"


def restrict(chi: CharacterVector) -> RestrictedCharacter:
    """Restriction to the torus diag(a_1, ..., a_n, a_n, ..., a_1).

    Coordinates i and 2n+1-i of the ambient character sum into coordinate i.
    """
    if chi.rank % 2 != 0:
        raise ValueError("restriction requires even ambient rank")
    n = chi.rank // 2
    return RestrictedCharacter(
        tuple(chi.coords[i] + chi.coords[2 * n - 1 - i] for i in range(n))
    )


def theta_fixed_roots(
    system: SimpleSystem, theta: SignedPermutation
) -> frozenset[CharacterVector]:
    """All roots fixed by the lattice involution.

    Raises ValueError if theta does not stabilize the root system.
    """
    fixed = set()
    for alpha in system.all_roots:
        image = theta.apply(alpha)
        if not image.is_root:
            raise ValueError("involution does not stabilize the root system")
        if image == alpha:
            fixed.add(alpha)
    return frozenset(fixed)


def is_theta_base(
    base: SimpleSystem | Iterable[CharacterVector], theta: SignedPermutation
) -> bool:
    """Whether every non-fixed positive root is sent to a negative root."""
    system = base if isinstance(base, SimpleSystem) else SimpleSystem.from_base(base)
    negatives = frozenset(-alpha for alpha in system.positive_roots)
    for alpha in system.positive_roots:
        image = theta.apply(alpha)
        if not image.is_root:
            raise ValueError("involution does not stabilize the root system")
        if image != alpha and image not in negatives:
            return False
    return True


def standard_setup(n: int) -> tuple[SimpleSystem, SignedPermutation]:
    """The theta-base w_plus . Delta of GL_{2n} and the involution e_i -> -e_{2n+1-i}.

    This is the lattice picture of the standard symplectic involution; the
    translated base is a theta-base for it.
    """
    if n < 1:
        raise ValueError(f"invalid rank {n}: need n >= 1")
    m = 2 * n
    system = translate_base(w_plus(n), standard_base(m))
    theta = SignedPermutation(
        tuple(-1 for _ in range(m)), tuple(m + 1 - i for i in range(1, m + 1))
    )
    return system, theta


def theta_base_case_families(n: int) -> dict[str, list[CharacterVector]]:
    """Witnesses for the four parity families in the theta-base scan.

    Positive roots of the theta-base are the w_plus translates of
    e_i - e_j, i < j; non-fixed ones fall into four families by the parity
    of (i, j), and in each family the involution sends the root negative.
    Returns the non-fixed witnesses per family, keyed 'odd-odd',
    'odd-even', 'even-odd', 'even-even'.
    """
    system, theta = standard_setup(n)
    wp = w_plus(n)
    negatives = frozenset(-alpha for alpha in system.positive_roots)
    families: dict[str, list[CharacterVector]] = {
        "odd-odd": [],
        "odd-even": [],
        "even-odd": [],
        "even-even": [],
    }
    for i in range(1, 2 * n + 1):
        for j in range(i + 1, 2 * n + 1):
            beta = wp.apply(CharacterVector.root(i, j, 2 * n))
            if theta.apply(beta) == beta:
                continue
            if theta.apply(beta) not in negatives:
                raise AssertionError(f"{beta} breaks the theta-base property")
            key = ("odd" if i % 2 else "even") + "-" + ("odd" if j % 2 else "even")
            families[key].append(beta)
    return families


def restricted_root_system(
    system: SimpleSystem, theta: SignedPermutation
) -> tuple[frozenset[RestrictedCharacter], str]:
    """The image of the roots under restriction, with a Cartan type label.

    Type A is detected by a Gram-matrix path check on the restricted base;
    anything else is reported as 'unclassified'.
    """
    fixed = theta_fixed_roots(system, theta)
    restricted = frozenset(
        restrict(alpha) for alpha in system.all_roots if alpha not in fixed
    )
    if any(r.is_zero for r in restricted):
        raise AssertionError("non-fixed root restricted to zero")
    bar_base = [restrict(alpha) for alpha in system.base if alpha not in fixed]
    return restricted, _cartan_type_label(bar_base)


def _cartan_type_label(bar_base: Sequence[RestrictedCharacter]) -> str:
    size = len(bar_base)
    if size == 0:
        return "unclassified"
    gram = [
        [rl.dot(a.coords, b.coords) for b in bar_base] for a in bar_base
    ]
    if any(gram[i][i] != 2 for i in range(size)):
        return "unclassified"
    degree = [0] * size
    for i in range(size):
        for j in range(size):
            if i == j:
                continue
            if gram[i][j] == -1:
                degree[i] += 1
            elif gram[i][j] != 0:
                return "unclassified"
    # a path: connected with end degrees 1 (size 1 is trivially a path)
    if size > 1 and (sorted(degree)[:2] != [1, 1] or any(d > 2 for d in degree)):
        return "unclassified"
    if not _is_connected(gram):
        return "unclassified"
    return f"A{size}"


def _is_connected(gram) -> bool:
    size = len(gram)
    seen = {0}
    stack = [0]
    while stack:
        i = stack.pop()
        for j in range(size):
            if j not in seen and gram[i][j] != 0:
                seen.add(j)
                stack.append(j)
    return len(seen) == size


@dataclass(frozen=True)
class ThetaSplitSubset:
    """A subset of the theta-base of the form r^{-1}(bar subset) + fixed simple roots."""

    system: SimpleSystem
    theta: SignedPermutation
    subset: frozenset[CharacterVector]
    bar_part: frozenset[RestrictedCharacter]
    removed: frozenset[CharacterVector]  # the non-fixed simple roots left out

    @property
    def rank(self) -> int:
        return self.system.rank


def _split_subset_from_bar(
    system: SimpleSystem,
    theta: SignedPermutation,
    fixed_simple: frozenset[CharacterVector],
    kept_bar: frozenset[RestrictedCharacter],
) -> ThetaSplitSubset:
    subset = set(fixed_simple)
    removed = set()
    for alpha in system.base:
        if alpha in fixed_simple:
            continue
        if restrict(alpha) in kept_bar:
            subset.add(alpha)
        else:
            removed.add(alpha)
    return ThetaSplitSubset(
        system=system,
        theta=theta,
        subset=frozenset(subset),
        bar_part=kept_bar,
        removed=frozenset(removed),
    )


def theta_split_subsets(
    system: SimpleSystem, theta: SignedPermutation
) -> list[ThetaSplitSubset]:
    """All theta-split subsets of the base, one per subset of the restricted base."""
    fixed_simple = frozenset(
        alpha for alpha in system.base if theta.apply(alpha) == alpha
    )
    bar_base = sorted(
        {restrict(alpha) for alpha in system.base if alpha not in fixed_simple},
        key=lambda r: r.coords,
    )
    out = []
    for size in range(len(bar_base) + 1):
        for kept in combinations(bar_base, size):
            out.append(
                _split_subset_from_bar(system, theta, fixed_simple, frozenset(kept))
            )
    return out


def is_theta_split_subset(
    subset: Iterable[CharacterVector], system: SimpleSystem, theta: SignedPermutation
) -> bool:
    """Whether a subset of the base has the split shape r^{-1}(bar part) + fixed part."""
    subset = frozenset(subset)
    if not subset <= frozenset(system.base):
        raise ValueError("subset is not contained in the base")
    fixed_simple = frozenset(
        alpha for alpha in system.base if theta.apply(alpha) == alpha
    )
    kept_bar = frozenset(
        restrict(alpha) for alpha in subset if alpha not in fixed_simple
    )
    rebuilt = _split_subset_from_bar(system, theta, fixed_simple, kept_bar)
    return rebuilt.subset == subset


def maximal_theta_split_subsets(
    system: SimpleSystem, theta: SignedPermutation
) -> list[ThetaSplitSubset]:
    """The proper theta-split subsets dropping exactly one restricted simple root.

    For the standard setup of GL_{2n} these are the n-1 subsets obtained by
    removing one non-fixed simple root from the theta-base, listed in the
    order of the removed restricted roots.
    """
    fixed_simple = frozenset(
        alpha for alpha in system.base if theta.apply(alpha) == alpha
    )
    bar_base = sorted(
        {restrict(alpha) for alpha in system.base if alpha not in fixed_simple},
        key=lambda r: tuple(-c for c in r.coords),
    )
    out = []
    for dropped in bar_base:
        kept = frozenset(b for b in bar_base if b != dropped)
        out.append(_split_subset_from_bar(system, theta, fixed_simple, kept))
    return out


@dataclass(frozen=True)
class DominantCone:
    """The dominant valuation cone of the split component attached to a subset.

    ``lattice_basis`` spans the valuation lattice of the torus; the cone is
    cut out inside it by <alpha, v> >= 0 for the listed inequality roots.
    ``generators`` are primitive lattice vectors, one per inequality, that
    together with the central sub-lattice generate the cone; the central
    sub-lattice (spanned by ``central``) is the valuation lattice of the
    split center and satisfies every inequality with equality.
    """

    ambient_rank: int
    lattice_basis: tuple[tuple[int, ...], ...]
    inequalities: tuple[CharacterVector, ...]
    generators: tuple[tuple[int, ...], ...]
    central: tuple[tuple[int, ...], ...]

    def contains(self, v: Sequence[int]) -> bool:
        return all(alpha.pair(v) >= 0 for alpha in self.inequalities)

    def is_central(self, v: Sequence[int]) -> bool:
        return all(alpha.pair(v) == 0 for alpha in self.inequalities)


def _cone_from_constraints(
    rank: int,
    equation_rows: Sequence[Sequence[Fraction]],
    inequality_roots: Sequence[CharacterVector],
) -> DominantCone:
    basis = rl.kernel_basis(equation_rows, rank)
    lattice = tuple(rl.primitive_integer(v) for v in basis)
    center = tuple(1 for _ in range(rank))
    if any(rl.dot(row, center) != 0 for row in equation_rows):
        raise AssertionError("central direction violates the defining equations")
    generators = []
    for beta in inequality_roots:
        others = [g.coords for g in inequality_roots if g != beta]
        kernel = rl.kernel_basis(list(equation_rows) + list(others), rank)
        if len(kernel) != 2:
            raise AssertionError(
                f"expected a 2-dimensional slab for {beta}, got {len(kernel)}"
            )
        candidate = next((v for v in kernel if beta.pair(v) != 0), None)
        if candidate is None:
            raise AssertionError(f"degenerate inequality {beta}")
        if beta.pair(candidate) < 0:
            candidate = tuple(-c for c in candidate)
        gen = list(rl.primitive_integer(candidate))
        if beta.pair(gen) < 0:
            gen = [-c for c in gen]
        shift = min(gen)
        gen = tuple(int(c - shift) for c in gen)  # normalize: nonneg, min entry 0
        generators.append(gen)
    return DominantCone(
        ambient_rank=rank,
        lattice_basis=lattice,
        inequalities=tuple(inequality_roots),
        generators=tuple(generators),
        central=(center,),
    )


def dominant_cone(split_subset: ThetaSplitSubset) -> DominantCone:
    """Dominant cone of the theta-split component of the subset's Levi.

    The lattice is cut out by vanishing of the subset's roots together with
    the split condition v(theta(s)) = -v(s); the inequalities come from the
    simple roots outside the subset.
    """
    system, theta = split_subset.system, split_subset.theta
    m = system.rank
    equations: list[tuple[Fraction, ...]] = [
        alpha.coords for alpha in sorted(split_subset.subset, key=lambda a: a.coords)
    ]
    # theta-split condition: signs[j] * v_{images[j]} + v_j = 0 for all j
    for j in range(m):
        row = [Fraction(0)] * m
        row[j] += Fraction(1)
        row[theta.images[j] - 1] += Fraction(theta.signs[j])
        equations.append(tuple(row))
    outside = sorted(
        (alpha for alpha in system.base if alpha not in split_subset.subset),
        key=lambda a: a.coords,
    )
    return _cone_from_constraints(m, equations, outside)


def parabolic_dominant_cone(
    system: SimpleSystem, subset: Iterable[CharacterVector]
) -> DominantCone:
    """Dominant cone of the full split component of an ordinary standard Levi."""
    subset = frozenset(subset)
    if not subset <= frozenset(system.base):
        raise ValueError("subset is not contained in the base")
    equations = [alpha.coords for alpha in sorted(subset, key=lambda a: a.coords)]
    outside = sorted(
        (alpha for alpha in system.base if alpha not in subset),
        key=lambda a: a.coords,
    )
    return _cone_from_constraints(system.rank, equations, outside)
