from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from sympair.roots import (
    CharacterVector,
    SimpleSystem,
    WeylElement,
    standard_base,
    translate_base,
    w_plus,
)


def root(i, j, m):
    return CharacterVector.root(i, j, m)


perms = st.integers(min_value=2, max_value=7).flatmap(
    lambda m: st.permutations(list(range(1, m + 1)))
)


class TestStandardBase:
    def test_gl4(self):
        system = standard_base(4)
        assert system.base == (root(1, 2, 4), root(2, 3, 4), root(3, 4, 4))
        assert len(system.positive_roots) == 6

    def test_gl2(self):
        assert standard_base(2).base == (root(1, 2, 2),)

    def test_positive_count_gl6(self):
        assert len(standard_base(6).positive_roots) == 15

    def test_invalid_rank(self):
        with pytest.raises(ValueError, match="invalid rank"):
            standard_base(1)


class TestTranslateBase:
    def test_identity(self):
        system = standard_base(4)
        assert translate_base(WeylElement.identity(4), system) == system

    def test_w_plus_moves_first_root(self):
        # for rank 4, the interleaving permutation sends e1 - e2 to e1 - e4
        system = translate_base(w_plus(2), standard_base(4))
        assert root(1, 4, 4) in system.base
        assert system.base[0] == root(1, 4, 4)

    def test_round_trip(self):
        system = standard_base(5)
        w = WeylElement((3, 1, 4, 5, 2))
        assert translate_base(w.inverse(), translate_base(w, system)) == system

    def test_rank_mismatch(self):
        with pytest.raises(ValueError, match="rank mismatch"):
            translate_base(WeylElement.identity(3), standard_base(4))

    @given(perms)
    def test_translate_preserves_cardinality(self, perm):
        m = len(perm)
        w = WeylElement(tuple(perm))
        system = translate_base(w, standard_base(m))
        assert len(system.base) == m - 1
        assert len(system.positive_roots) == m * (m - 1) // 2
        assert all(alpha.is_root for alpha in system.base)


class TestWPlus:
    def test_n2(self):
        assert w_plus(2).images == (1, 4, 2, 3)

    def test_n1(self):
        assert w_plus(1).images == (1, 2)

    def test_n3(self):
        assert w_plus(3).images == (1, 6, 2, 5, 3, 4)

    def test_defining_formula(self):
        for n in range(1, 7):
            w = w_plus(n)
            for i in range(1, n + 1):
                assert w(2 * i - 1) == i
                assert w(2 * i) == 2 * n + 1 - i


class TestWeylAction:
    @given(perms, st.data())
    def test_action_on_roots(self, perm, data):
        m = len(perm)
        w = WeylElement(tuple(perm))
        i = data.draw(st.integers(min_value=1, max_value=m))
        j = data.draw(st.integers(min_value=1, max_value=m).filter(lambda x: x != i))
        assert w.apply(root(i, j, m)) == root(w(i), w(j), m)

    @given(perms, perms)
    def test_composition_convention(self, p1, p2):
        if len(p1) != len(p2):
            return
        w, v = WeylElement(tuple(p1)), WeylElement(tuple(p2))
        for i in range(1, len(p1) + 1):
            assert (w * v)(i) == w(v(i))

    @given(perms)
    def test_inverse(self, perm):
        w = WeylElement(tuple(perm))
        assert (w * w.inverse()).is_identity
        assert (w.inverse() * w).is_identity

    def test_permute_matches_apply(self):
        w = WeylElement((2, 4, 1, 3))
        chi = CharacterVector((Fraction(1), Fraction(2), Fraction(3), Fraction(4)))
        assert w.apply(chi).coords == w.permute(chi.coords)


class TestSimpleSystemValidation:
    def test_from_base_standard(self):
        system = SimpleSystem.from_base([root(1, 2, 3), root(2, 3, 3)])
        assert system == standard_base(3)

    def test_from_base_rejects_non_chain(self):
        with pytest.raises(ValueError, match="not a base"):
            SimpleSystem.from_base([root(1, 2, 3), root(1, 3, 3)])

    def test_from_base_rejects_wrong_count(self):
        with pytest.raises(ValueError):
            SimpleSystem.from_base([root(1, 2, 3)])


class TestCharacterVector:
    def test_root_shape(self):
        alpha = root(2, 5, 6)
        assert alpha.is_root
        assert alpha.root_indices() == (2, 5)

    def test_pairing(self):
        alpha = root(1, 3, 4)
        assert alpha.pair((1, 0, 0, 1)) == 1
        assert alpha.pair((1, 1, 1, 1)) == 0

    def test_arithmetic(self):
        a, b = root(1, 2, 3), root(2, 3, 3)
        assert (a + b).coords == (1, 0, -1)
        assert (a - a).is_zero
        assert (-a).coords == (-1, 1, 0)
