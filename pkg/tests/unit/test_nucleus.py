"""Unit tests for nucleus computation and contraction depth."""

import pytest

from ssg.application.services.nucleus_service import (
    contraction_depth,
    nucleus,
    recurrent_part,
    restriction_graph,
)
from ssg.core.exceptions import BoundExceededError, NotContractingWithinBounds
from ssg.infrastructure.fixtures import EXPECTED_NUCLEUS_SIZES, builtin_group
from ssg.infrastructure.parsers import parse_group

LAMPLIGHTER = """\
group lamplighter
alphabet 2
state a perm 1 0 -> a b
state b perm 0 1 -> a b
"""


@pytest.mark.unit
class TestNucleus:
    """Test the nucleus semi-algorithm."""

    def test_grigorchuk_nucleus(self, grigorchuk):
        """Test the nucleus is the generating set with the identity."""
        result = nucleus(grigorchuk)
        assert [w.to_text() for w in result.elements] == ["id", "a", "b", "c", "d"]
        assert result.depth_certificate == 1
        assert len(result) == 5

    def test_odometer_nucleus(self, odometer):
        """Test the adding machine nucleus contains ``a`` and its inverse."""
        result = nucleus(odometer)
        assert [w.to_text() for w in result.elements] == ["id", "a", "a'"]
        assert result.depth_certificate == 1

    def test_reflection_nucleus_collapses_inverse(self, reflection):
        """Test ``a'`` is represented by ``a``."""
        result = nucleus(reflection)
        assert [w.to_text() for w in result.elements] == ["id", "a"]
        assert result.contains(reflection.word("a'"))

    def test_generators_shown_before_inverses(self, gupta_sidki):
        """Test ``a`` and ``A`` are shown rather than the inverse letters ``A'`` and ``a'``."""
        result = nucleus(gupta_sidki)
        assert [w.to_text() for w in result.elements] == ["id", "a", "A", "t", "t'"]
        assert result.contains(gupta_sidki.word("A'"))

    def test_trivial_group_nucleus(self, trivial_group):
        """Test the stateless automaton has only the identity."""
        result = nucleus(trivial_group)
        assert [w.to_text() for w in result.elements] == ["id"]
        assert result.depth_certificate == 0

    @pytest.mark.parametrize("name", sorted(EXPECTED_NUCLEUS_SIZES))
    def test_expected_sizes(self, name):
        """Test built-in groups match their recorded nucleus sizes."""
        assert len(nucleus(builtin_group(name))) == EXPECTED_NUCLEUS_SIZES[name]

    def test_size_cap_applies_to_generators(self, grigorchuk):
        """Test a cap below the generator count is reported."""
        with pytest.raises(NotContractingWithinBounds) as exc_info:
            nucleus(grigorchuk, max_size=2)
        assert exc_info.value.bound == 2
        assert exc_info.value.size == 5

    @pytest.mark.slow
    def test_lamplighter_exceeds_bounds(self):
        """Test a non-contracting automaton hits the caps."""
        group = parse_group(LAMPLIGHTER)
        with pytest.raises(NotContractingWithinBounds):
            nucleus(group, max_size=10, max_depth=8)

    def test_nucleus_is_restriction_closed(self, grigorchuk):
        """Test every first-level restriction of a nucleus element stays inside."""
        result = nucleus(grigorchuk)
        for element in result.elements:
            for x in range(grigorchuk.d):
                assert result.contains(element.restrict(str(x)))


@pytest.mark.unit
class TestRestrictionGraph:
    """Test restriction graphs and their recurrent parts."""

    def test_graph_of_b(self, grigorchuk):
        """Test ``b`` cycles through ``c`` and ``d`` and ends in ``id``."""
        graph, nodes = restriction_graph(grigorchuk.word("b"), [], 8)
        names = {index: word.to_text() for index, word in nodes.items()}
        assert set(names.values()) == {"b", "a", "c", "d", "id"}
        recurrent = {names[i] for i in recurrent_part(graph)}
        assert recurrent == {"b", "c", "d", "a", "id"}

    def test_depth_cap(self, odometer):
        """Test the depth cap on restriction graphs."""
        word = odometer.word("a.a.a.a.a.a.a.a")
        with pytest.raises(NotContractingWithinBounds):
            restriction_graph(word, [], 1)


@pytest.mark.unit
class TestContractionDepth:
    """Test contraction depth."""

    def test_nucleus_elements_have_depth_zero(self, grigorchuk):
        """Test members of the nucleus need no restriction."""
        result = nucleus(grigorchuk)
        assert contraction_depth(grigorchuk.word("c"), result) == 0

    def test_product_depth(self, grigorchuk):
        """Test ``a.b`` contracts after one level."""
        result = nucleus(grigorchuk)
        assert contraction_depth(grigorchuk.word("a.b"), result) == 1

    def test_cap(self, odometer):
        """Test the cap raises a bound error."""
        result = nucleus(odometer)
        with pytest.raises(BoundExceededError):
            contraction_depth(odometer.word("a.a.a.a.a.a.a.a"), result, cap=1)
