"""Matrix-level involutions of GL_m attached to skew-symmetric forms.

A nonsingular skew-symmetric x in GL_{2n} defines the involution
theta_x(g) = x^{-1} (g^T)^{-1} x, whose fixed points are a symplectic group.
GL_{2n} acts on such forms on the right by x . g = g^T x g, compatibly with
the action g . theta on involutions: g . theta_x = theta_{x . g}.

Everything is computed over exact rationals.  When x normalizes the diagonal
torus (equivalently, x is monomial), theta_x induces a signed permutation of
the character lattice, which is the bridge to the root-system modules.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from . import ratlinalg as rl
from .ratlinalg import Mat
from .roots import CharacterVector, w_plus


@dataclass(frozen=True)
class SkewForm:
    """A nonsingular skew-symmetric rational matrix of even size."""

    matrix: Mat

    def __post_init__(self) -> None:
        x = rl.mat(self.matrix)
        object.__setattr__(self, "matrix", x)
        m = len(x)
        if m % 2 != 0:
            raise ValueError("skew form must have even size")
        if rl.transpose(x) != rl.scale(x, -1):
            raise ValueError("matrix is not skew-symmetric")
        if not rl.is_invertible(x):
            raise ValueError("skew form must be nonsingular")

    @property
    def size(self) -> int:
        return len(self.matrix)


def standard_symplectic_form(n: int) -> SkewForm:
    """The 2n x 2n form with blocks ((0, J_n), (-J_n, 0)), J_n anti-diagonal ones.

    Satisfies inverse = transpose.
    """
    if n < 1:
        raise ValueError(f"invalid rank {n}: need n >= 1")
    m = 2 * n
    rows = [[Fraction(0)] * m for _ in range(m)]
    for i in range(1, n + 1):
        rows[i - 1][m - i] = Fraction(1)        # J_n block, top right
        rows[m - i][i - 1] = Fraction(-1)       # -J_n block, bottom left
    return SkewForm(tuple(tuple(r) for r in rows))


def interleaved_symplectic_form(n: int) -> SkewForm:
    """The 2n x 2n block-diagonal form with n blocks ((0, 1), (-1, 0)).

    This is the translate of the standard form by the interleaving
    permutation: w_plus^T . standard . w_plus.
    """
    if n < 1:
        raise ValueError(f"invalid rank {n}: need n >= 1")
    m = 2 * n
    rows = [[Fraction(0)] * m for _ in range(m)]
    for i in range(n):
        rows[2 * i][2 * i + 1] = Fraction(1)
        rows[2 * i + 1][2 * i] = Fraction(-1)
    return SkewForm(tuple(tuple(r) for r in rows))


def apply_involution(x: SkewForm, g: Mat) -> Mat:
    """theta_x(g) = x^{-1} (g^T)^{-1} x.  Applying twice returns g."""
    g = rl.mat(g)
    if len(g) != x.size:
        raise ValueError("size mismatch")
    if not rl.is_invertible(g):
        raise ValueError("matrix is not invertible")
    xinv = rl.inverse(x.matrix)
    return rl.mat_mul(rl.mat_mul(xinv, rl.inverse(rl.transpose(g))), x.matrix)


def act_on_involution(g: Mat, x: SkewForm) -> SkewForm:
    """The right action on forms, x . g = g^T x g."""
    g = rl.mat(g)
    if len(g) != x.size:
        raise ValueError("size mismatch")
    if not rl.is_invertible(g):
        raise ValueError("matrix is not invertible")
    return SkewForm(rl.mat_mul(rl.mat_mul(rl.transpose(g), x.matrix), g))


def is_fixed(x: SkewForm, g: Mat) -> bool:
    """Whether theta_x(g) = g, i.e. g belongs to the symplectic group of x.

    Equivalent to g^T x g = x.
    """
    g = rl.mat(g)
    if len(g) != x.size:
        raise ValueError("size mismatch")
    if not rl.is_invertible(g):
        raise ValueError("matrix is not invertible")
    return rl.mat_mul(rl.mat_mul(rl.transpose(g), x.matrix), g) == x.matrix


@dataclass(frozen=True)
class SignedPermutation:
    """A signed permutation of the character lattice: e_i -> signs[i] * e_{images[i]}."""

    signs: tuple[int, ...]
    images: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.signs) != len(self.images):
            raise ValueError("length mismatch")
        if sorted(self.images) != list(range(1, len(self.images) + 1)):
            raise ValueError("images are not a permutation")
        if any(s not in (1, -1) for s in self.signs):
            raise ValueError("signs must be +1 or -1")

    @staticmethod
    def identity(m: int) -> "SignedPermutation":
        return SignedPermutation(tuple(1 for _ in range(m)), tuple(range(1, m + 1)))

    @property
    def rank(self) -> int:
        return len(self.images)

    def apply(self, chi: CharacterVector) -> CharacterVector:
        if chi.rank != self.rank:
            raise ValueError("rank mismatch")
        out = [Fraction(0)] * self.rank
        for i, c in enumerate(chi.coords):
            out[self.images[i] - 1] += self.signs[i] * c
        return CharacterVector(tuple(out))

    def point_image(self, valuation) -> tuple[Fraction, ...]:
        """Valuation vector of theta(s) given the valuation vector of s.

        Dual to ``apply``: v(theta(s))_j = signs[j] * v(s)_{images[j]}.
        """
        if len(valuation) != self.rank:
            raise ValueError("rank mismatch")
        return tuple(
            self.signs[j] * Fraction(valuation[self.images[j] - 1])
            for j in range(self.rank)
        )

    @property
    def is_involution(self) -> bool:
        m = self.rank
        for i in range(m):
            j = self.images[i] - 1
            if self.images[j] != i + 1 or self.signs[i] * self.signs[j] != 1:
                return False
        return True


def lattice_action(x: SkewForm) -> SignedPermutation:
    """The map induced by theta_x on the character lattice of the diagonal torus.

    Requires theta_x to preserve the diagonal torus, i.e. x monomial (one
    nonzero entry per row and column); other forms are rejected.  If column j
    of x has its nonzero entry in row tau(j), then theta_x sends
    diag(a_1, ..., a_m) to diag(a_{tau(1)}^{-1}, ..., a_{tau(m)}^{-1}), so
    e_j -> -e_{tau(j)} on characters.
    """
    m = x.size
    tau = [0] * m
    for j in range(m):
        nonzero = [i for i in range(m) if x.matrix[i][j] != 0]
        if len(nonzero) != 1:
            raise ValueError(
                "unsupported form: does not normalize the diagonal torus"
            )
        tau[j] = nonzero[0] + 1
    return SignedPermutation(tuple(-1 for _ in range(m)), tuple(tau))


@dataclass(frozen=True)
class InvolutionDatum:
    """A skew form together with the induced action on the character lattice."""

    form: SkewForm
    lattice: SignedPermutation

    @staticmethod
    def from_form(x: SkewForm) -> "InvolutionDatum":
        return InvolutionDatum(form=x, lattice=lattice_action(x))

    def check_on_diagonal(self, entries) -> bool:
        """Verify the lattice action matches theta_x on a diagonal matrix."""
        m = self.form.size
        if len(entries) != m:
            raise ValueError("size mismatch")
        d = tuple(
            tuple(Fraction(entries[i]) if i == j else Fraction(0) for j in range(m))
            for i in range(m)
        )
        image = apply_involution(self.form, d)
        expect = [Fraction(0)] * m
        # e_j(theta(d)) = (theta* e_j)(d) = d_{images[j]} ^ signs[j]
        for j in range(m):
            base = Fraction(entries[self.lattice.images[j] - 1])
            expect[j] = base if self.lattice.signs[j] == 1 else Fraction(1) / base
        return all(
            image[i][j] == (expect[i] if i == j else 0)
            for i in range(m)
            for j in range(m)
        )


def standard_involution(n: int) -> InvolutionDatum:
    """The involution of GL_{2n} attached to the standard symplectic form."""
    return InvolutionDatum.from_form(standard_symplectic_form(n))


def block_diagonal(m1: Mat, m2: Mat) -> Mat:
    a, b = len(m1), len(m2)
    rows = []
    for i in range(a):
        rows.append(tuple(m1[i]) + tuple(Fraction(0) for _ in range(b)))
    for i in range(b):
        rows.append(tuple(Fraction(0) for _ in range(a)) + tuple(m2[i]))
    return tuple(rows)


def conjugate_form_by_weyl(n: int) -> SkewForm:
    """Check value for the interleaved form: standard form acted on by w_plus."""
    return act_on_involution(w_plus(n).matrix(), standard_symplectic_form(n))
