"""Segment data, Jacquet-module exponents, and square-integrability cone checks.

A discrete series of GL_n is recorded as a segment: a supercuspidal label of
dimension r, a length k with n = r k, and a central twist.  Only the real
part of any character matters for the criteria implemented here, so an
exponent is a rational vector c on the ambient diagonal torus, constant on
the blocks of the relevant Levi, with |chi(a)| = prod |a_i|^{c_i}; unitary
data contribute the zero vector.

Sign convention.  The segment of a generalized Steinberg representation is
stored with descending twists (k-1)/2, (k-3)/2, ..., (1-k)/2, and its
Jacquet restriction to a standard parabolic splits the segment into
consecutive runs in that order, first block first.  This is the unique
convention under which the rank-2 Steinberg exponent along the Borel is
dominant-regular, i.e. passes the square-integrability cone check; the
mirrored convention must fail, and the tests pin this down.

Cone check.  Square integrability asks for |chi(s)| < 1 on the dominant part
of a split component, off the center and the unit points.  With exponents
linear in the valuation vector and the cone simplicial with an identified
central sub-lattice, this is equivalent to: <c, g> > 0 on every non-central
generator g, and <c, z> = 0 on the central ones.  (If <c, z> were nonzero,
g + t z for large |t| of a suitable sign would violate the bound; conversely
any non-central cone point is a nonnegative combination of generators, with
some positive coefficient, plus a central vector.)
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .cosets import (
    CosetCase,
    CosetRep,
    block_swap,
    double_coset_reps,
    elliptic_subset,
)
from .roots import CharacterVector, SimpleSystem, WeylElement, standard_base, w_plus
from .theta import (
    DominantCone,
    ThetaSplitSubset,
    dominant_cone,
    maximal_theta_split_subsets,
    standard_setup,
)


@dataclass(frozen=True)
class SegmentDatum:
    """A generalized Steinberg datum: rho label, its dimension, length, twist."""

    rho: str
    rho_dim: int
    length: int
    center_twist: Fraction = Fraction(0)

    def __post_init__(self) -> None:
        if self.rho_dim < 1 or self.length < 1:
            raise ValueError("rho_dim and length must be positive")
        object.__setattr__(self, "center_twist", Fraction(self.center_twist))

    @property
    def dim(self) -> int:
        return self.rho_dim * self.length

    def support_twists(self) -> tuple[Fraction, ...]:
        """Twist exponents of the supercuspidal support, in descending order."""
        k = self.length
        return tuple(
            self.center_twist + Fraction(k - 1, 2) - j for j in range(k)
        )

    def __str__(self) -> str:
        tail = "" if self.center_twist == 0 else f":{self.center_twist}"
        return f"{self.rho}[{self.rho_dim}:{self.length}{tail}]"


@dataclass(frozen=True)
class ExponentVector:
    """Real-part exponent on the ambient diagonal torus: |chi(a)| = prod |a_i|^{c_i}."""

    coords: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "coords", tuple(Fraction(c) for c in self.coords))

    @property
    def rank(self) -> int:
        return len(self.coords)

    def pair(self, valuation: Sequence) -> Fraction:
        if len(valuation) != self.rank:
            raise ValueError("rank mismatch")
        return sum(
            (c * Fraction(v) for c, v in zip(self.coords, valuation)), Fraction(0)
        )

    def shift(self, s) -> "ExponentVector":
        """Twist by |det|^s: adds s to every coordinate."""
        s = Fraction(s)
        return ExponentVector(tuple(c + s for c in self.coords))

    def concat(self, other: "ExponentVector") -> "ExponentVector":
        return ExponentVector(self.coords + other.coords)

    def permuted(self, w: WeylElement) -> "ExponentVector":
        """Exponent of the twisted representation: coordinates pushed by w."""
        return ExponentVector(w.permute(self.coords))

    def restrict_to(self, lattice_basis: Iterable[Sequence[int]]) -> tuple[Fraction, ...]:
        """Pairings against a basis of a sub-torus valuation lattice."""
        return tuple(self.pair(v) for v in lattice_basis)


def segment_jacquet_exponents(
    delta: SegmentDatum, partition: Sequence[int]
) -> list[ExponentVector]:
    """Exponents of the segment's Jacquet module along a block parabolic.

    The restriction is nonzero only when every part is divisible by the
    supercuspidal dimension, in which case the segment splits into
    consecutive runs (descending twists, first part first) and the single
    resulting exponent is block-constant, each block carrying the mean twist
    of its run.  Returns the empty list when there is no Jacquet term.
    """
    parts = tuple(partition)
    if any(p < 1 for p in parts):
        raise ValueError("partition parts must be positive")
    if sum(parts) != delta.dim:
        raise ValueError(
            f"partition of {sum(parts)} does not match segment dimension {delta.dim}"
        )
    if any(p % delta.rho_dim for p in parts):
        return []
    twists = delta.support_twists()
    coords: list[Fraction] = []
    cursor = 0
    for p in parts:
        run = twists[cursor : cursor + p // delta.rho_dim]
        cursor += p // delta.rho_dim
        mean = sum(run, Fraction(0)) / len(run)
        coords.extend([mean] * p)
    return [ExponentVector(tuple(coords))]


def tensor_exponents(
    left: Iterable[ExponentVector], right: Iterable[ExponentVector]
) -> list[ExponentVector]:
    """Exponents of an external tensor product: all pairwise concatenations."""
    return [a.concat(b) for a in left for b in right]


def twist_exponents(exps: Iterable[ExponentVector], s) -> list[ExponentVector]:
    """Determinant-power twist shifts every exponent uniformly and does nothing else."""
    return [e.shift(s) for e in exps]


def casselman_check(exps: Iterable[ExponentVector], cone: DominantCone) -> bool:
    """Strict contraction of every exponent on the dominant cone, off the center.

    True iff every exponent pairs strictly positively with every non-central
    generator and pairs to zero with the central sub-lattice (see the module
    docstring for why this equals the pointwise criterion).
    """
    for e in exps:
        if e.rank != cone.ambient_rank:
            raise ValueError("exponent and cone rank mismatch")
        for z in cone.central:
            if e.pair(z) != 0:
                return False
        for g in cone.generators:
            if e.pair(g) <= 0:
                return False
    return True


@dataclass(frozen=True)
class FiltrationTerm:
    """One double-coset term of the induced representation's Jacquet filtration."""

    rep: CosetRep
    w_std: WeylElement                 # the representative in the standard picture
    twist: WeylElement                 # the full twisting element (rep conjugated in)
    partition_1: tuple[int, ...]       # parabolic of the first rank-n factor
    partition_2: tuple[int, ...]       # parabolic of the second rank-n factor
    exponents: tuple[ExponentVector, ...]          # on the ambient torus, twisted
    untwisted_exponents: tuple[ExponentVector, ...]  # before the twist, block picture

    def restricted(self, lattice_basis: Iterable[Sequence[int]]) -> list[tuple[Fraction, ...]]:
        return [e.restrict_to(lattice_basis) for e in self.exponents]


def _partitions_from_levi_positions(
    kept: set[int], start: int, stop: int
) -> tuple[int, ...]:
    """Composition of (stop - start) cut at the missing simple positions."""
    parts = []
    size = 1
    for i in range(start, stop - 1):
        if i in kept:
            size += 1
        else:
            parts.append(size)
            size = 1
    parts.append(size)
    return tuple(parts)


def geometric_lemma_terms(
    delta: SegmentDatum, n: int, k: int
) -> list[FiltrationTerm]:
    """Filtration terms of the half-twisted double induction along the k-th split Levi.

    For each distinguished representative, the twisted middle Levi meets the
    split parabolic in a product parabolic P_1 x P_2 of the two rank-n
    factors; the term's exponents are all products of a (+1/2)-twisted
    Jacquet exponent of the segment along P_1 with a (-1/2)-twisted one
    along P_2, pushed through the twisting element.  Case-1 terms have no
    Jacquet restriction and carry the two half-twisted central characters.
    """
    if delta.dim != n:
        raise ValueError(f"segment dimension {delta.dim} does not match n = {n}")
    if not (1 <= k <= n - 1):
        raise ValueError(f"k must be in 1..{n - 1}")
    system, theta = standard_setup(n)
    subsets = maximal_theta_split_subsets(system, theta)
    theta_subset = subsets[k - 1].subset
    omega = elliptic_subset(n, system)
    wp = w_plus(n)
    terms = []
    for rep in double_coset_reps(system, theta_subset, omega):
        w_std = wp.inverse() * rep.w * wp
        twist = rep.w * wp  # equals wp * w_std
        # positions 0-based in the standard base whose simple root survives:
        # alpha survives iff its twist lands in the Levi subset of the rep
        kept = set()
        for alpha in (
            CharacterVector.root(i, i + 1, 2 * n) for i in range(1, 2 * n) if i != n
        ):
            if twist.apply(alpha) in rep.levi_subset:
                kept.add(alpha.root_indices()[0] - 1)
        p1 = _partitions_from_levi_positions(kept, 0, n)
        p2 = _partitions_from_levi_positions(kept, n, 2 * n)
        exps_1 = twist_exponents(segment_jacquet_exponents(delta, p1), Fraction(1, 2))
        exps_2 = twist_exponents(segment_jacquet_exponents(delta, p2), Fraction(-1, 2))
        untwisted = tensor_exponents(exps_1, exps_2)
        twisted = tuple(e.permuted(twist) for e in untwisted)
        terms.append(
            FiltrationTerm(
                rep=rep,
                w_std=w_std,
                twist=twist,
                partition_1=p1,
                partition_2=p2,
                exponents=twisted,
                untwisted_exponents=tuple(untwisted),
            )
        )
    return terms


def half_det_ratio_exponent(n: int) -> ExponentVector:
    """Exponent of the (+1/2, -1/2) determinant pair on the diagonal of GL_{2n}."""
    return ExponentVector(
        tuple([Fraction(1, 2)] * n + [Fraction(-1, 2)] * n)
    )


def half_det_ratio_coefficients(n: int) -> tuple[Fraction, ...]:
    """Simple-root coefficients c with sum(c_alpha alpha) twice the half-det ratio.

    Expanding e_1 + ... + e_n - e_{n+1} - ... - e_{2n} over the standard base
    gives the cumulative sums (1, 2, ..., n, n-1, ..., 1).
    """
    target = half_det_ratio_exponent(n).coords
    doubled = [2 * c for c in target]
    coeffs = []
    acc = Fraction(0)
    for i in range(2 * n - 1):
        acc += doubled[i]
        coeffs.append(acc)
    # verify the expansion reproduces the target exactly
    recon = [Fraction(0)] * (2 * n)
    for i, c in enumerate(coeffs):
        recon[i] += c
        recon[i + 1] -= c
    if recon != list(doubled):
        raise AssertionError("coefficient expansion failed")
    return tuple(coeffs)


@dataclass(frozen=True)
class TermVerdict:
    """Outcome of the cone check for one (split subset, representative) pair.

    The status follows the verdict rule alone (strict positivity of the full
    pairings); the remaining flags record the two-factor diagnostics: whether
    the determinant-pair factor was non-expanding, whether the segment factor
    was strictly contracting, and whether the conjugated support identities
    held.  A failing term whose pairings are all zero is a boundary term: the
    determinant-pair expansion exactly cancels the segment contraction.
    """

    k: int
    rep: CosetRep
    status: str  # 'pass' | 'fail' | 'excluded-case1' | 'no-jacquet-term'
    pairings: tuple[tuple[Fraction, ...], ...]  # per exponent, per generator
    unramified_ok: bool
    segment_part_ok: bool
    support_identities_ok: bool

    @property
    def is_boundary_failure(self) -> bool:
        return self.status == "fail" and all(
            x == 0 for row in self.pairings for x in row
        )


@dataclass(frozen=True)
class VerdictReport:
    """Full cone verdict for a segment datum across all maximal split subsets."""

    n: int
    delta: SegmentDatum
    terms: tuple[TermVerdict, ...]
    coefficients: tuple[Fraction, ...]
    coefficients_expected: tuple[Fraction, ...]

    @property
    def passed(self) -> bool:
        return self.coefficients == self.coefficients_expected and all(
            t.status in ("pass", "excluded-case1", "no-jacquet-term")
            for t in self.terms
        )

    @property
    def case2_checked(self) -> int:
        return sum(1 for t in self.terms if t.status == "pass")


def relative_casselman_verdict(delta: SegmentDatum, n: int) -> VerdictReport:
    """Cone inequalities for every case-2 filtration term over every split subset.

    Case-1 terms are excluded (they carry no invariant functional; that input
    is analytic and recorded as an assumption, not checked here).  For each
    case-2 term the full exponent must contract strictly on every non-central
    generator; the determinant-pair factor alone must be non-expanding, and
    the segment factor alone strictly contracting, which is also recorded.
    """
    if delta.dim != n:
        raise ValueError(f"segment dimension {delta.dim} does not match n = {n}")
    system, theta = standard_setup(n)
    subsets = maximal_theta_split_subsets(system, theta)
    wp = w_plus(n)
    expected = tuple(
        Fraction(i) for i in list(range(1, n + 1)) + list(range(n - 1, 0, -1))
    )
    verdicts: list[TermVerdict] = []
    for k in range(1, n):
        cone = dominant_cone(subsets[k - 1])
        u = half_det_ratio_exponent(n)
        for term in geometric_lemma_terms(delta, n, k):
            if term.rep.case is CosetCase.CASE1:
                verdicts.append(
                    TermVerdict(
                        k=k,
                        rep=term.rep,
                        status="excluded-case1",
                        pairings=(),
                        unramified_ok=True,
                        segment_part_ok=True,
                        support_identities_ok=True,
                    )
                )
                continue
            if not term.exponents:
                verdicts.append(
                    TermVerdict(
                        k=k,
                        rep=term.rep,
                        status="no-jacquet-term",
                        pairings=(),
                        unramified_ok=True,
                        segment_part_ok=True,
                        support_identities_ok=True,
                    )
                )
                continue
            pairings = []
            ok = True
            unram_ok = True
            seg_ok = True
            support_ok = True
            w_std_inv = term.w_std.inverse()
            for g in cone.generators:
                # valuation vector in the block picture, then conjugated by the rep
                a_vec = wp.inverse().permute(g)
                v_prime = w_std_inv.permute(a_vec)
                if u.pair(v_prime) < 0:
                    unram_ok = False
                kept_pairings = []
                for e_tw, e_un in zip(term.exponents, term.untwisted_exponents):
                    total = e_tw.pair(g)
                    if e_tw.pair(cone.central[0]) != 0 or total <= 0:
                        ok = False
                    seg_only = e_un.pair(v_prime) - u.pair(v_prime)
                    if seg_only <= 0:
                        seg_ok = False
                    if total != e_un.pair(v_prime):
                        raise AssertionError("twisted and block-picture pairings differ")
                    kept_pairings.append(total)
                pairings.append(tuple(kept_pairings))
                support_ok = support_ok and _support_identities(
                    term, v_prime, n
                )
            verdicts.append(
                TermVerdict(
                    k=k,
                    rep=term.rep,
                    status="pass" if ok else "fail",
                    pairings=tuple(
                        tuple(p[i] for p in pairings)
                        for i in range(len(term.exponents))
                    ),
                    unramified_ok=unram_ok,
                    segment_part_ok=seg_ok,
                    support_identities_ok=support_ok,
                )
            )
    return VerdictReport(
        n=n,
        delta=delta,
        terms=tuple(verdicts),
        coefficients=half_det_ratio_coefficients(n),
        coefficients_expected=expected,
    )


def _support_identities(term: FiltrationTerm, v_prime: Sequence, n: int) -> bool:
    """Conjugated dominance identities for one generator.

    The conjugated valuation vector must be constant on the blocks of the
    product Levi, dominant for the product parabolic (nonnegative on the
    simple roots of either rank-n factor outside the Levi; the cross root
    joining the two factors is not a root of the product and carries no
    constraint), and not constant on the two rank-n factors, so it avoids
    the center of the middle Levi.
    """
    m = 2 * n
    blocks: list[tuple[int, int]] = []
    start = 0
    for part in term.partition_1 + term.partition_2:
        blocks.append((start, start + part))
        start += part
    for lo, hi in blocks:
        if any(v_prime[i] != v_prime[lo] for i in range(lo, hi)):
            return False
    removed_cuts = {hi for _, hi in blocks if hi != m and hi != n}
    for cut in removed_cuts:
        if Fraction(v_prime[cut - 1]) - Fraction(v_prime[cut]) < 0:
            return False
    half_constant = all(v_prime[i] == v_prime[0] for i in range(n)) and all(
        v_prime[i] == v_prime[n] for i in range(n, m)
    )
    return not half_constant
