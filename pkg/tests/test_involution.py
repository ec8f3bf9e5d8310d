from fractions import Fraction
from random import Random

import pytest
from hypothesis import given, settings, strategies as st

from sympair import ratlinalg as rl
from sympair.involution import (
    InvolutionDatum,
    SignedPermutation,
    SkewForm,
    act_on_involution,
    apply_involution,
    block_diagonal,
    interleaved_symplectic_form,
    is_fixed,
    lattice_action,
    standard_symplectic_form,
)
from sympair.roots import CharacterVector, w_plus


def diag(*entries):
    m = len(entries)
    return tuple(
        tuple(Fraction(entries[i]) if i == j else Fraction(0) for j in range(m))
        for i in range(m)
    )


small_invertible = st.tuples(
    st.integers(min_value=1, max_value=3), st.integers(min_value=0, max_value=2**30)
).map(lambda t: rl.random_invertible(Random(t[1]), 2 * t[0]))


class TestStandardForm:
    def test_n1(self):
        assert standard_symplectic_form(1).matrix == (
            (0, 1),
            (-1, 0),
        )

    def test_n2_rows(self):
        assert standard_symplectic_form(2).matrix == (
            (0, 0, 0, 1),
            (0, 0, 1, 0),
            (0, -1, 0, 0),
            (-1, 0, 0, 0),
        )

    def test_inverse_is_transpose(self):
        for n in (1, 2, 3, 4):
            x = standard_symplectic_form(n).matrix
            assert rl.mat_mul(x, rl.transpose(x)) == rl.identity(2 * n)

    def test_rejects_non_skew(self):
        with pytest.raises(ValueError, match="skew"):
            SkewForm(((Fraction(1), Fraction(0)), (Fraction(0), Fraction(1))))


class TestApplyInvolution:
    def test_identity(self):
        x = standard_symplectic_form(2)
        assert apply_involution(x, rl.identity(4)) == rl.identity(4)

    def test_diagonal_reverses_and_inverts(self):
        x = standard_symplectic_form(2)
        image = apply_involution(x, diag(2, 3, 5, 7))
        assert image == diag(
            Fraction(1, 7), Fraction(1, 5), Fraction(1, 3), Fraction(1, 2)
        )

    @given(small_invertible)
    def test_involutive(self, g):
        x = standard_symplectic_form(len(g) // 2)
        assert apply_involution(x, apply_involution(x, g)) == g

    def test_rejects_singular(self):
        x = standard_symplectic_form(1)
        with pytest.raises(ValueError, match="invertible"):
            apply_involution(x, ((Fraction(1), Fraction(0)), (Fraction(0), Fraction(0))))


class TestActOnInvolution:
    def test_identity(self):
        x = standard_symplectic_form(2)
        assert act_on_involution(rl.identity(4), x) == x

    def test_w_plus_gives_interleaved_blocks(self):
        for n in (1, 2, 3):
            x = standard_symplectic_form(n)
            moved = act_on_involution(w_plus(n).matrix(), x)
            assert moved == interleaved_symplectic_form(n)

    @settings(max_examples=25)
    @given(small_invertible, st.data())
    def test_transport_identity(self, g, data):
        # moving the form and then applying equals conjugating inside theta
        m = len(g)
        x = standard_symplectic_form(m // 2)
        h = data.draw(
            st.integers(min_value=0, max_value=2**30).map(
                lambda s: rl.random_invertible(Random(s), m)
            )
        )
        moved = act_on_involution(g, x)
        lhs = apply_involution(moved, h)
        ginv = rl.inverse(g)
        inner = apply_involution(x, rl.mat_mul(rl.mat_mul(g, h), ginv))
        rhs = rl.mat_mul(rl.mat_mul(ginv, inner), g)
        assert lhs == rhs


class TestIsFixed:
    def test_identity_fixed(self):
        assert is_fixed(standard_symplectic_form(2), rl.identity(4))

    def test_sl2_unipotent_fixed(self):
        g = ((Fraction(1), Fraction(1)), (Fraction(0), Fraction(1)))
        assert is_fixed(standard_symplectic_form(1), g)

    def test_scaled_diagonal_not_fixed(self):
        assert not is_fixed(standard_symplectic_form(2), diag(2, 1, 1, 1))


class TestLatticeAction:
    def test_standard_form_reverses_with_sign(self):
        act = lattice_action(standard_symplectic_form(2))
        assert act.signs == (-1, -1, -1, -1)
        assert act.images == (4, 3, 2, 1)

    def test_root_image(self):
        act = lattice_action(standard_symplectic_form(2))
        alpha = CharacterVector.root(1, 2, 4)
        assert act.apply(alpha) == CharacterVector.root(3, 4, 4)

    def test_squares_to_identity(self):
        for n in (1, 2, 3):
            act = lattice_action(standard_symplectic_form(n))
            assert act.is_involution
            for i in range(1, 2 * n + 1):
                e = CharacterVector.root(i, (i % (2 * n)) + 1, 2 * n)
                assert act.apply(act.apply(e)) == e

    def test_interleaved_form(self):
        act = lattice_action(interleaved_symplectic_form(2))
        assert act.images == (2, 1, 4, 3)
        assert act.signs == (-1, -1, -1, -1)

    def test_non_monomial_rejected(self):
        j = ((Fraction(1), Fraction(1)), (Fraction(0), Fraction(1)))
        zero = ((Fraction(0), Fraction(0)), (Fraction(0), Fraction(0)))
        neg = tuple(tuple(-x for x in row) for row in rl.transpose(j))
        x = SkewForm(
            tuple(
                tuple(zero[i]) + tuple(j[i]) for i in range(2)
            )
            + tuple(tuple(neg[i]) + tuple(zero[i]) for i in range(2))
        )
        with pytest.raises(ValueError, match="unsupported form"):
            lattice_action(x)


class TestInvolutionDatum:
    def test_diagonal_consistency(self):
        datum = InvolutionDatum.from_form(standard_symplectic_form(3))
        assert datum.check_on_diagonal([2, 3, 5, 7, 11, 13])

    def test_lattice_is_involution(self):
        datum = InvolutionDatum.from_form(interleaved_symplectic_form(2))
        assert datum.lattice.is_involution


class TestBlockwiseDecomposition:
    @settings(max_examples=20)
    @given(
        st.integers(min_value=1, max_value=2),
        st.integers(min_value=0, max_value=2**30),
    )
    def test_even_rank_splits_blockwise(self, half, seed):
        # the interleaved involution of rank 2n preserves (n, n) blocks when
        # n is even and acts as the rank-n involution on each
        n = 2 * half
        rng = Random(seed)
        m1 = rl.random_invertible(rng, n)
        m2 = rl.random_invertible(rng, n)
        big = interleaved_symplectic_form(n)
        small = interleaved_symplectic_form(half)
        got = apply_involution(big, block_diagonal(m1, m2))
        want = block_diagonal(
            apply_involution(small, m1), apply_involution(small, m2)
        )
        assert got == want
