"""Unit tests for automaton groups, group words and the word problem."""

import pytest
from hypothesis import given
from hypothesis import strategies as st

from ssg.application.services.word_problem import apply, equal, is_trivial, restrict
from ssg.core.exceptions import InvalidAutomatonError, InvalidWordError, MismatchedGroupsError
from ssg.domain.entities.automaton_group import AutomatonGroup, StateSpec
from ssg.domain.entities.group_word import GroupWord, free_reduce
from ssg.infrastructure.fixtures import builtin_group

grigorchuk_letters = st.lists(
    st.tuples(st.sampled_from("abcd"), st.sampled_from((1, -1))), max_size=6
)
binary_paths = st.text(alphabet="01", max_size=8)


@pytest.mark.unit
class TestAutomatonGroup:
    """Test AutomatonGroup validation."""

    def test_builtin_group_shape(self, grigorchuk):
        """Test parsed Grigorchuk group."""
        assert grigorchuk.d == 2
        assert grigorchuk.state_names == ("a", "b", "c", "d")
        assert grigorchuk.table["b"].trans == ("a", "c")
        assert str(grigorchuk) == "grigorchuk (d=2, 4 states)"

    def test_alphabet_size_bounds(self):
        """Test alphabets of size one are rejected."""
        with pytest.raises(InvalidAutomatonError, match="Alphabet size"):
            AutomatonGroup("g", 1, ())

    def test_reserved_and_duplicate_names(self):
        """Test ``id`` is reserved and names are unique."""
        with pytest.raises(InvalidAutomatonError, match="reserved"):
            AutomatonGroup("g", 2, (StateSpec("id", (1, 0), ("id", "id")),))
        state = StateSpec("a", (1, 0), ("id", "id"))
        with pytest.raises(InvalidAutomatonError, match="Duplicate"):
            AutomatonGroup("g", 2, (state, state))

    @pytest.mark.parametrize("name", ["a'", "a.b", "a b", "a#", ""])
    def test_state_names_avoid_word_syntax(self, name):
        """Test names clashing with word or file syntax are rejected."""
        with pytest.raises(InvalidAutomatonError, match="State name"):
            AutomatonGroup("g", 2, (StateSpec(name, (1, 0), ("id", "id")),))

    def test_permutation_must_be_bijection(self):
        """Test non-bijective root permutations."""
        with pytest.raises(InvalidAutomatonError, match="not a bijection"):
            AutomatonGroup("g", 2, (StateSpec("a", (0, 0), ("id", "id")),))

    def test_unknown_transition_target(self):
        """Test transitions must name known states."""
        with pytest.raises(InvalidAutomatonError, match="unknown state"):
            AutomatonGroup("g", 2, (StateSpec("a", (1, 0), ("id", "x")),))

    def test_inverse_permutation(self):
        """Test derived inverse permutation."""
        assert StateSpec("t", (1, 2, 0), ("id", "id", "id")).inverse_perm() == (2, 0, 1)


@pytest.mark.unit
class TestGroupWord:
    """Test GroupWord parsing and action."""

    def test_parse_and_render(self, grigorchuk):
        """Test ``a.b'`` notation."""
        word = grigorchuk.word("a.b'")
        assert word.letters == (("a", 1), ("b", -1))
        assert word.to_text() == "a.b'"
        assert grigorchuk.word("id").to_text() == "id"
        assert grigorchuk.word("a.id.b").to_text() == "a.b"

    def test_free_reduction(self, grigorchuk):
        """Test adjacent inverse pairs cancel."""
        assert grigorchuk.word("a.b.b'.a'").is_empty()
        assert free_reduce([("a", 1), ("a", -1), ("b", 1)]) == (("b", 1),)

    def test_invalid_words(self, grigorchuk):
        """Test unknown states and empty factors."""
        with pytest.raises(InvalidWordError, match="Unknown state"):
            grigorchuk.word("x")
        with pytest.raises(InvalidWordError, match="Empty factor"):
            grigorchuk.word("a..b")

    def test_mismatched_groups(self, grigorchuk, odometer):
        """Test words over different groups do not multiply."""
        with pytest.raises(MismatchedGroupsError):
            grigorchuk.word("a") * odometer.word("a")

    def test_action_on_paths(self, grigorchuk, odometer):
        """Test actions and restrictions."""
        assert apply(grigorchuk.word("a"), "00") == "10"
        assert apply(grigorchuk.word("b"), "00") == "01"
        assert restrict(grigorchuk.word("b"), "0").to_text() == "a"
        assert restrict(grigorchuk.word("b"), "1").to_text() == "c"
        assert apply(odometer.word("a.a"), "10") == "11"
        assert apply(odometer.word("a'"), "000") == "111"

    def test_rightmost_letter_acts_first(self, grigorchuk):
        """Test ``a.b`` applies ``b`` before ``a``."""
        assert apply(grigorchuk.word("a.b"), "00") == apply(grigorchuk.word("a"), "01")

    def test_path_letters_checked(self, grigorchuk):
        """Test paths with letters outside the alphabet."""
        with pytest.raises(InvalidWordError, match="out of range"):
            grigorchuk.word("a").apply("02")
        with pytest.raises(InvalidWordError, match="out of range"):
            grigorchuk.word("a").apply("0¹")

    def test_shortlex_key(self, grigorchuk):
        """Test shorter words first, then generators before inverses."""
        a, a_inv, ab = grigorchuk.word("a"), grigorchuk.word("a'"), grigorchuk.word("a.b")
        assert a.sort_key() < a_inv.sort_key() < ab.sort_key()
        assert grigorchuk.word("d").sort_key() < a_inv.sort_key()

    @given(grigorchuk_letters, grigorchuk_letters, binary_paths)
    def test_product_acts_as_composition(self, left, right, path):
        """Test ``(u*v)(w) == u(v(w))``."""
        group = builtin_group("grigorchuk")
        u, v = GroupWord(group, tuple(left)), GroupWord(group, tuple(right))
        assert apply(u * v, path) == apply(u, apply(v, path))

    @given(grigorchuk_letters, binary_paths)
    def test_inverse_undoes_action(self, letters, path):
        """Test ``w^-1(w(x)) == x``."""
        w = GroupWord(builtin_group("grigorchuk"), tuple(letters))
        assert apply(w.inverse(), apply(w, path)) == path

    @given(grigorchuk_letters, binary_paths, binary_paths)
    def test_restriction_cocycle(self, letters, first, second):
        """Test ``w|_{uv} == (w|_u)|_v``."""
        w = GroupWord(builtin_group("grigorchuk"), tuple(letters))
        assert equal(restrict(w, first + second), restrict(restrict(w, first), second))

    @given(grigorchuk_letters, grigorchuk_letters, binary_paths)
    def test_restriction_of_product(self, left, right, path):
        """Test ``(u*v)|_x == u|_{v(x)} * v|_x`` with the right factor acting first."""
        group = builtin_group("grigorchuk")
        u, v = GroupWord(group, tuple(left)), GroupWord(group, tuple(right))
        expected = restrict(u, apply(v, path)) * restrict(v, path)
        assert equal(restrict(u * v, path), expected)


@pytest.mark.unit
class TestWordProblem:
    """Test the word problem solver."""

    @pytest.mark.parametrize("text", ["id", "a.a", "b.b", "b.c.d", "a.d.a.d.a.d.a.d"])
    def test_grigorchuk_relations(self, grigorchuk, text):
        """Test known relations are trivial."""
        assert is_trivial(grigorchuk.word(text))

    @pytest.mark.parametrize("text", ["a", "a.b", "a.d.a.d"])
    def test_grigorchuk_nontrivial(self, grigorchuk, text):
        """Test nontrivial elements."""
        assert not is_trivial(grigorchuk.word(text))

    def test_odometer_has_infinite_order(self, odometer):
        """Test no small power of the adding machine is trivial."""
        a = odometer.word("a")
        assert all(not is_trivial(a**k) for k in range(1, 9))

    def test_reflection_is_an_involution(self, reflection):
        """Test ``a.a`` is trivial over the reflection group."""
        assert is_trivial(reflection.word("a.a"))

    def test_equal(self, grigorchuk, odometer):
        """Test equality as automorphisms."""
        assert equal(grigorchuk.word("b.c"), grigorchuk.word("d"))
        assert not equal(grigorchuk.word("b"), grigorchuk.word("c"))
        with pytest.raises(MismatchedGroupsError):
            equal(grigorchuk.word("a"), odometer.word("a"))
