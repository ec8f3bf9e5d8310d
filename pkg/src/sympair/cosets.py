"""Minimal representatives of Weyl double cosets for pairs of standard Levis.

For subsets Theta, Omega of a base, the distinguished representatives are

    { w : w(Omega) positive and w^{-1}(Theta) positive },

one per double coset of the parabolic subgroups W_Theta, W_Omega.  For GL
these biject with contingency tables: nonnegative integer matrices whose
row sums are the Theta block sizes and whose column sums are the Omega
block sizes.  The primary enumeration builds the representative from the
table; a full symmetric-group orbit partition is available as an
independent oracle at small rank.

Each representative is classified by whether the twisted Levi of Omega lands
inside the parabolic of Theta (case 1) or meets its nilradical (case 2); the
case-1 structure is verified at the matrix level, where the fixed points of
the twisted Levi decompose blockwise into a product of two symplectic groups.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from itertools import permutations
from random import Random
from typing import Iterable, Sequence

from . import ratlinalg as rl
from .involution import (
    apply_involution,
    block_diagonal,
    interleaved_symplectic_form,
)
from .parabolic import standard_parabolic
from .roots import CharacterVector, SimpleSystem, WeylElement, w_plus


class CosetCase(Enum):
    CASE1 = "case1"
    CASE2 = "case2"


@dataclass(frozen=True)
class CosetRep:
    """A distinguished double-coset representative with its intersection data."""

    w: WeylElement
    case: CosetCase
    levi_intersection: frozenset[CharacterVector]  # roots of M_Theta meet twisted M_Omega
    nil_cap_levi: frozenset[CharacterVector]       # roots of N_Theta meet twisted M_Omega
    levi_cap_nil: frozenset[CharacterVector]       # roots of M_Theta meet twisted N_Omega
    levi_subset: frozenset[CharacterVector]        # Theta meet w(Omega), simple in Theta


def _blocks_of_subset(
    system: SimpleSystem, subset: frozenset[CharacterVector]
) -> list[list[int]]:
    """Chain positions 0..m-1 grouped into the Levi blocks of the subset."""
    blocks: list[list[int]] = [[0]]
    for pos in range(system.rank - 1):
        if system.base[pos] in subset:
            blocks[-1].append(pos + 1)
        else:
            blocks.append([pos + 1])
    return blocks


def _contingency_tables(
    rows: Sequence[int], cols: Sequence[int]
) -> list[list[list[int]]]:
    tables: list[list[list[int]]] = []

    def fill(r: int, remaining_cols: list[int], acc: list[list[int]]) -> None:
        if r == len(rows):
            if all(c == 0 for c in remaining_cols):
                tables.append([row[:] for row in acc])
            return
        target = rows[r]

        def fill_row(c: int, left: int, row: list[int]) -> None:
            if c == len(cols) - 1:
                if left <= remaining_cols[c]:
                    row.append(left)
                    remaining = remaining_cols[:]
                    for k, v in enumerate(row):
                        remaining[k] -= v
                    fill(r + 1, remaining, acc + [row])
                    row.pop()
                return
            for v in range(min(left, remaining_cols[c]) + 1):
                row.append(v)
                fill_row(c + 1, left - v, row)
                row.pop()

        fill_row(0, target, [])

    fill(0, list(cols), [])
    return tables


def _rep_from_table(
    table: Sequence[Sequence[int]],
    row_blocks: Sequence[Sequence[int]],
    col_blocks: Sequence[Sequence[int]],
    m: int,
) -> WeylElement:
    """The minimal coset representative realizing a contingency table.

    Positions inside each row block are filled left to right by the column
    blocks in order; elements keep their relative order inside every cell.
    """
    images = [0] * m
    col_cursor = [0] * len(col_blocks)
    for r, row in enumerate(table):
        positions = list(row_blocks[r])
        pos_cursor = 0
        for c, count in enumerate(row):
            for _ in range(count):
                element = col_blocks[c][col_cursor[c]]
                col_cursor[c] += 1
                images[element] = positions[pos_cursor] + 1
                pos_cursor += 1
    return WeylElement(tuple(images))


def _is_distinguished(
    w: WeylElement,
    theta: frozenset[CharacterVector],
    omega: frozenset[CharacterVector],
    system: SimpleSystem,
) -> bool:
    winv = w.inverse()
    return all(system.is_positive(w.apply(a)) for a in omega) and all(
        system.is_positive(winv.apply(a)) for a in theta
    )


def double_coset_reps(
    system: SimpleSystem,
    theta: Iterable[CharacterVector],
    omega: Iterable[CharacterVector],
) -> list[CosetRep]:
    """All distinguished representatives, classified, in table order."""
    theta = frozenset(theta)
    omega = frozenset(omega)
    base = frozenset(system.base)
    if not (theta <= base and omega <= base):
        raise ValueError("subsets are not contained in the base")
    chain = system.chain
    row_pos = _blocks_of_subset(system, theta)
    col_pos = _blocks_of_subset(system, omega)
    m = system.rank
    reps = []
    for table in _contingency_tables(
        [len(b) for b in row_pos], [len(b) for b in col_pos]
    ):
        w0 = _rep_from_table(table, row_pos, col_pos, m)
        w = chain * w0 * chain.inverse()
        if not _is_distinguished(w, theta, omega, system):
            raise AssertionError("table construction produced a bad representative")
        reps.append(classify_case(w, theta, omega, system))
    return reps


def classify_case(
    w: WeylElement,
    theta: Iterable[CharacterVector],
    omega: Iterable[CharacterVector],
    system: SimpleSystem,
) -> CosetRep:
    """Intersection root sets and the case tag of a representative."""
    theta = frozenset(theta)
    omega = frozenset(omega)
    if not _is_distinguished(w, theta, omega, system):
        raise ValueError("not a distinguished representative")
    levi_theta = standard_parabolic(system, theta).levi_roots
    levi_omega = standard_parabolic(system, omega).levi_roots
    nil_theta = frozenset(system.positive_roots - levi_theta)
    nil_omega = frozenset(system.positive_roots - levi_omega)
    twisted_levi = frozenset(w.apply(a) for a in levi_omega)
    twisted_nil = frozenset(w.apply(a) for a in nil_omega)
    levi_cap = frozenset(levi_theta & twisted_levi)
    nil_cap_levi = frozenset(nil_theta & twisted_levi)
    levi_cap_nil = frozenset(levi_theta & twisted_nil)
    case = CosetCase.CASE1 if twisted_levi <= levi_theta else CosetCase.CASE2
    if case is CosetCase.CASE1 and nil_cap_levi:
        raise AssertionError("case-1 representative meets the nilradical")
    both_maximal = (
        len(_blocks_of_subset(system, theta)) == 2
        and len(_blocks_of_subset(system, omega)) == 2
    )
    if case is CosetCase.CASE2 and both_maximal:
        # for maximal Levis, case 2 forces the reciprocal intersection with
        # the Theta Levi to be a proper parabolic of it as well
        if levi_cap == levi_theta or not levi_cap_nil:
            raise AssertionError("case-2 representative without proper intersection")
    levi_subset = frozenset(theta & frozenset(w.apply(a) for a in omega))
    if levi_cap != standard_parabolic(system, levi_subset & frozenset(system.base)).levi_roots:
        raise AssertionError("Levi intersection is not standard")
    return CosetRep(
        w=w,
        case=case,
        levi_intersection=levi_cap,
        nil_cap_levi=nil_cap_levi,
        levi_cap_nil=levi_cap_nil,
        levi_subset=levi_subset,
    )


def brute_force_double_cosets(
    system: SimpleSystem,
    theta: Iterable[CharacterVector],
    omega: Iterable[CharacterVector],
) -> list[frozenset[tuple[int, ...]]]:
    """Partition of the full symmetric group into double cosets, by orbit search.

    Independent oracle for the table enumeration; use only at small rank
    (the whole symmetric group is materialized).
    """
    theta = frozenset(theta)
    omega = frozenset(omega)
    m = system.rank

    def transpositions(subset: frozenset[CharacterVector]) -> list[tuple[int, int]]:
        return [alpha.root_indices() for alpha in subset]

    left = transpositions(theta)    # act on values
    right = transpositions(omega)   # act on positions
    all_perms = {p: False for p in permutations(range(1, m + 1))}
    orbits = []
    for start in all_perms:
        if all_perms[start]:
            continue
        orbit = {start}
        stack = [start]
        all_perms[start] = True
        while stack:
            cur = stack.pop()
            neighbors = []
            for a, b in left:
                nxt = tuple(
                    b if v == a else a if v == b else v for v in cur
                )
                neighbors.append(nxt)
            for a, b in right:
                lst = list(cur)
                lst[a - 1], lst[b - 1] = lst[b - 1], lst[a - 1]
                neighbors.append(tuple(lst))
            for nxt in neighbors:
                if nxt not in orbit:
                    orbit.add(nxt)
                    all_perms[nxt] = True
                    stack.append(nxt)
        orbits.append(frozenset(orbit))
    return orbits


def elliptic_subset(n: int, system: SimpleSystem) -> frozenset[CharacterVector]:
    """The translate into the given base of the (n, n) block subset of GL_{2n}."""
    if system.rank != 2 * n:
        raise ValueError("rank mismatch")
    cut = CharacterVector.root(n, n + 1, 2 * n)
    return frozenset(
        system.chain.apply(alpha)
        for alpha in (
            CharacterVector.root(i, i + 1, 2 * n) for i in range(1, 2 * n)
        )
        if alpha != cut
    )


def block_swap(n: int) -> WeylElement:
    """The permutation exchanging the two n-blocks of {1, ..., 2n}."""
    return WeylElement(tuple(list(range(n + 1, 2 * n + 1)) + list(range(1, n + 1))))


@dataclass(frozen=True)
class Case1Report:
    """Matrix-level structure underlying the case-1 cosets.

    For even n and the middle-block Levi, the involution restricted to the
    twisted Levi acts blockwise, so its fixed points are a product of two
    rank-n symplectic groups; the two case-1 representatives are exactly the
    elements normalizing that Levi.
    """

    n: int
    trials: int
    blockwise_identity: bool
    normalizing_reps: tuple[WeylElement, ...]
    form_in_levi: bool


def case1_levi_fixed_points(n: int, trials: int = 20, seed: int = 2024) -> Case1Report:
    """Verify the blockwise fixed-point structure behind the case-1 cosets.

    Requires n even (case 1 only occurs then).  Checks theta restricted to
    the twisted middle Levi against the product of the rank-n involutions on
    random small-integer rational blocks, exactly.
    """
    if n % 2 != 0:
        raise ValueError(f"case1-absent: requires even n, got {n}")
    if n < 2:
        raise ValueError(f"invalid rank {n}")
    x2n = interleaved_symplectic_form(n)  # block-diagonal form of size 2n
    xn = interleaved_symplectic_form(n // 2)  # same shape in rank n
    form_in_levi = all(
        x2n.matrix[i][j] == 0
        for i in range(2 * n)
        for j in range(2 * n)
        if (i < n) != (j < n)
    )
    rng = Random(seed)
    ok = True
    for _ in range(trials):
        m1 = rl.random_invertible(rng, n)
        m2 = rl.random_invertible(rng, n)
        got = apply_involution(x2n, block_diagonal(m1, m2))
        want = block_diagonal(apply_involution(xn, m1), apply_involution(xn, m2))
        if got != want:
            ok = False
            break
    wp = w_plus(n)
    normalizing = (
        WeylElement.identity(2 * n),
        wp * block_swap(n) * wp.inverse(),
    )
    return Case1Report(
        n=n,
        trials=trials,
        blockwise_identity=ok,
        normalizing_reps=normalizing,
        form_in_levi=form_in_levi,
    )
