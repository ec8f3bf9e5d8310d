"""Symbolic bookkeeping of Arthur-type parameters for even general linear groups.

A parameter is a multiset of summands (rho, r, k, m, alpha): a supercuspidal
label rho of dimension r, a Steinberg length k, an Arthur factor of dimension
2m, and a real twist alpha with |alpha| < 1/2.  Untwisted summands (alpha = 0)
appear once; a twisted summand stands for the pair with twists +alpha and
-alpha.  Total dimension is 2n with n = sum(k r m) over untwisted summands
plus 2 sum(k r m) over twisted ones.

The distinguished parameters are those factoring as (tempered rank-n
parameter) tensor (two-dimensional factor): equivalently, every Arthur
factor is trivial (m = 1) and no twisted pair occurs.  Elliptic means the
tempered factor has a single summand.  An independent exhaustive oracle
decides factorizability from restriction data alone: the graded content of
the parameter per Weil label, both with Arthur grading kept and with the two
torus factors merged diagonally (expanded by the Clebsch-Gordan rule), is
compared against every candidate tempered rank-n multiset.
"""

from __future__ import annotations

import json
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

from .exponents import SegmentDatum


@dataclass(frozen=True)
class SL2Rep:
    """Finite-dimensional representation of SL(2): multiset of irreducible dims."""

    dims: tuple[int, ...]

    def __post_init__(self) -> None:
        if any(d < 1 for d in self.dims):
            raise ValueError("dimensions must be positive")
        object.__setattr__(self, "dims", tuple(sorted(self.dims)))

    @property
    def total_dim(self) -> int:
        return sum(self.dims)


def clebsch_gordan(a: int, b: int) -> SL2Rep:
    """Tensor of the a- and b-dimensional irreducibles: dims |a-b|+1, ..., a+b-1."""
    if a < 1 or b < 1:
        raise ValueError("dimensions must be positive")
    return SL2Rep(tuple(range(abs(a - b) + 1, a + b, 2)))


@dataclass(frozen=True)
class Summand:
    """One block (rho, r, k, m, alpha); alpha > 0 encodes the pair +alpha, -alpha."""

    rho: str
    rho_dim: int
    length: int
    arthur: int
    twist: Fraction = Fraction(0)

    def __post_init__(self) -> None:
        object.__setattr__(self, "twist", Fraction(self.twist))
        if self.rho_dim < 1 or self.length < 1 or self.arthur < 1:
            raise ValueError("rho_dim, length and arthur factor must be positive")
        if not abs(self.twist) < Fraction(1, 2):
            raise ValueError(f"|twist| must be < 1/2, got {self.twist}")
        if self.twist < 0:
            raise ValueError("store twisted pairs with the positive twist")

    @property
    def is_twisted(self) -> bool:
        return self.twist != 0

    @property
    def dim(self) -> int:
        base = 2 * self.length * self.rho_dim * self.arthur
        return 2 * base if self.is_twisted else base


@dataclass(frozen=True)
class AParameter:
    """A multiset of summands with even total dimension."""

    summands: tuple[Summand, ...]

    def __post_init__(self) -> None:
        if not self.summands:
            raise ValueError("parameter needs at least one summand")
        ordered = tuple(
            sorted(
                self.summands,
                key=lambda s: (s.rho, s.rho_dim, s.length, s.arthur, s.twist),
            )
        )
        object.__setattr__(self, "summands", ordered)
        dims = {s.rho: s.rho_dim for s in ordered}
        for s in ordered:
            if dims[s.rho] != s.rho_dim:
                raise ValueError(f"label {s.rho} used with two different dimensions")

    @property
    def total_dim(self) -> int:
        return sum(s.dim for s in self.summands)

    @property
    def n(self) -> int:
        return self.total_dim // 2

    @property
    def untwisted_count(self) -> int:
        return sum(1 for s in self.summands if not s.is_twisted)

    @property
    def twisted_count(self) -> int:
        return sum(1 for s in self.summands if s.is_twisted)


def speh_parameter(rho: str, rho_dim: int, length: int) -> AParameter:
    """The parameter of the double of one generalized Steinberg block."""
    return AParameter((Summand(rho, rho_dim, length, arthur=1),))


def is_X_distinguished(
    psi: AParameter,
) -> tuple[bool, tuple[tuple[str, int, int], ...] | None]:
    """Whether the parameter factors through a tempered rank-n parameter.

    True iff every Arthur factor is trivial and no twisted pair occurs; the
    witness is then the multiset of (rho, r, k) blocks of the rank-n factor.
    """
    if any(s.arthur != 1 for s in psi.summands):
        return False, None
    if any(s.is_twisted for s in psi.summands):
        return False, None
    witness = tuple(
        sorted((s.rho, s.rho_dim, s.length) for s in psi.summands)
    )
    return True, witness


def is_X_elliptic(psi: AParameter) -> bool:
    """Whether the tempered factor avoids every proper Levi: one summand only."""
    ok, _ = is_X_distinguished(psi)
    if not ok:
        raise ValueError("ellipticity is only defined for distinguished parameters")
    return len(psi.summands) == 1


def _weil_labels(psi: AParameter) -> dict[tuple[str, int, Fraction], list[Summand]]:
    """Summands grouped per Weil label (rho, r, twist), pairs split in two."""
    grouped: dict[tuple[str, int, Fraction], list[Summand]] = {}
    for s in psi.summands:
        twists = (s.twist, -s.twist) if s.is_twisted else (Fraction(0),)
        for t in twists:
            grouped.setdefault((s.rho, s.rho_dim, t), []).append(s)
    return grouped


def _partitions(total: int, largest: int | None = None) -> Iterable[tuple[int, ...]]:
    if total == 0:
        yield ()
        return
    cap = total if largest is None else min(largest, total)
    for first in range(cap, 0, -1):
        for rest in _partitions(total - first, first):
            yield (first,) + rest


def factorization_oracle(psi: AParameter, max_dim: int = 12) -> bool:
    """Exhaustively decide whether the parameter is a tempered factor times S(2).

    Works from restriction data alone.  Per Weil label, the parameter
    restricts to (i) a multiset of Arthur-factor dimensions, each with
    multiplicity its Steinberg length, and (ii) a diagonal multiset obtained
    by merging the Steinberg and Arthur torus factors, expanded by the
    Clebsch-Gordan rule.  A candidate tempered multiset of lengths matches a
    label iff it reproduces both.  Twisted labels can never match a tempered
    candidate, so they force a negative answer through the label grading.
    """
    if psi.total_dim > max_dim:
        raise ValueError(
            f"oracle too large: total dimension {psi.total_dim} exceeds {max_dim}"
        )
    for (rho, r, twist), summands in _weil_labels(psi).items():
        if twist != 0:
            return False
        arthur_content = Counter()
        diagonal_content = Counter()
        for s in summands:
            arthur_content[2 * s.arthur] += s.length
            diagonal_content.update(clebsch_gordan(s.length, 2 * s.arthur).dims)
        total_length = sum(s.length * s.arthur for s in summands)
        matched = False
        for candidate in _partitions(total_length):
            cand_arthur = Counter()
            cand_diag = Counter()
            for c in candidate:
                cand_arthur[2] += c
                cand_diag.update(clebsch_gordan(c, 2).dims)
            if cand_arthur == arthur_content and cand_diag == diagonal_content:
                matched = True
                break
        if not matched:
            return False
    return True


@dataclass(frozen=True)
class SpehClassification:
    """Outcome of the two-predicate classification."""

    is_speh: bool
    segment: SegmentDatum | None
    failed: tuple[str, ...]

    def __str__(self) -> str:
        if self.is_speh:
            return f"Speh(Z({self.segment.rho},{self.segment.length}))"
        return "NotSpeh(" + ", ".join(self.failed) + ")"


def classify_speh(psi: AParameter) -> SpehClassification:
    """Speh exactly when distinguished and elliptic; otherwise report what failed."""
    distinguished, witness = is_X_distinguished(psi)
    failed = []
    if not distinguished:
        failed.append("P1")
        if len(psi.summands) != 1:
            failed.append("P2")
        return SpehClassification(is_speh=False, segment=None, failed=tuple(failed))
    if not is_X_elliptic(psi):
        return SpehClassification(is_speh=False, segment=None, failed=("P2",))
    rho, rho_dim, length = witness[0]
    return SpehClassification(
        is_speh=True,
        segment=SegmentDatum(rho=rho, rho_dim=rho_dim, length=length),
        failed=(),
    )


def parameter_to_dict(psi: AParameter) -> dict:
    return {
        "summands": [
            {
                "rho": s.rho,
                "rho_dim": s.rho_dim,
                "length": s.length,
                "arthur": s.arthur,
                "twist": str(s.twist),
            }
            for s in psi.summands
        ]
    }


def parameter_from_dict(data: dict) -> AParameter:
    if not isinstance(data, dict) or "summands" not in data:
        raise ValueError("parameter JSON must be an object with a 'summands' list")
    raw = data["summands"]
    if not isinstance(raw, list) or not raw:
        raise ValueError("'summands' must be a non-empty list")
    summands = []
    for idx, item in enumerate(raw):
        if not isinstance(item, dict):
            raise ValueError(f"summand {idx}: expected an object")
        try:
            summands.append(
                Summand(
                    rho=str(item["rho"]),
                    rho_dim=int(item["rho_dim"]),
                    length=int(item["length"]),
                    arthur=int(item.get("arthur", 1)),
                    twist=Fraction(str(item.get("twist", 0))),
                )
            )
        except KeyError as exc:
            raise ValueError(f"summand {idx}: missing field {exc}") from exc
        except (ValueError, ZeroDivisionError) as exc:
            raise ValueError(f"summand {idx}: {exc}") from exc
    return AParameter(tuple(summands))


def parameter_from_json(text: str) -> AParameter:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ValueError(f"invalid JSON at line {exc.lineno} column {exc.colno}: {exc.msg}") from exc
    return parameter_from_dict(data)
