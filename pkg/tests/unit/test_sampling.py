"""Unit tests for seeded samplers and the mover search."""

import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from ssg.application.services.mover_search import bounded_words, find_mover
from ssg.application.services.rn_service import evaluate, fixes_cones
from ssg.application.services.sampling_service import (
    plant_identity_near,
    random_complete_partition,
    random_disjoint_family,
    random_distinct_points,
    random_word,
    sample_group_stabilizer,
    sample_stabilizer,
)
from ssg.application.services.witness_service import separate_points
from ssg.domain.value_objects.cone import are_disjoint, covers
from ssg.domain.value_objects.rational_point import RationalPoint
from ssg.infrastructure.fixtures import builtin_group


def point(text, d=2):
    return RationalPoint.parse(d, text)


@pytest.mark.unit
class TestRandomConstructions:
    """Test random generators."""

    def test_words_are_reproducible(self, grigorchuk):
        """Test the same seed yields the same words."""
        first = [random_word(grigorchuk, random.Random(5)) for _ in range(3)]
        second = [random_word(grigorchuk, random.Random(5)) for _ in range(3)]
        assert first == second
        assert all(len(word) <= 4 for word in first)

    def test_stateless_group_words(self, trivial_group, rng):
        """Test groups without states only produce the identity."""
        assert random_word(trivial_group, rng).is_empty()

    def test_complete_partition(self, rng):
        """Test random partitions cover the space."""
        for d in (2, 3):
            cones = random_complete_partition(d, rng, min_size=4)
            assert len(cones) >= 4
            assert are_disjoint(cones)
            assert covers(cones, d)

    def test_disjoint_family(self, rng):
        """Test random families leave room for a complement."""
        family = random_disjoint_family(2, rng, 3)
        assert len(family) == 3
        assert are_disjoint(family)
        assert not covers(family, 2)

    def test_distinct_points(self, rng):
        """Test points are pairwise distinct."""
        points = random_distinct_points(3, rng, 4)
        assert len(set(points)) == 4


@pytest.mark.unit
class TestStabilizerSamples:
    """Test stabilizer samplers."""

    @settings(max_examples=30, deadline=None)
    @given(st.integers(0, 10_000), st.sampled_from(["(01)", "(1)", "1(0)", "01(011)"]))
    def test_samples_fix_the_point(self, seed, text):
        """Test every sample fixes its point."""
        group = builtin_group("grigorchuk")
        p = point(text)
        element = sample_stabilizer(group, p, random.Random(seed))
        assert evaluate(element, p) == p

    def test_pure_thompson_samples(self, reflection, rng):
        """Test pure samples carry only identity actions."""
        p = point("(01)")
        element = sample_stabilizer(reflection, p, rng, pure_thompson=True)
        assert all(row.action.is_empty() for row in element.rows)
        assert evaluate(element, p) == p

    def test_group_stabilizer(self, grigorchuk, rng):
        """Test global samples fix the point."""
        p = point("(1)")
        element = sample_group_stabilizer(grigorchuk, p, rng)
        assert len(element) == 1
        assert evaluate(element, p) == p

    def test_plant_identity_near(self, grigorchuk, rng):
        """Test planted elements are the identity near every point."""
        system = separate_points([point("(0)"), point("(1)")])
        element, depth = plant_identity_near(grigorchuk, system, rng)
        near = [
            cone.address + p.period * depth
            for cone, p in zip(system.cones, system.points, strict=True)
        ]
        assert fixes_cones(element, near)


@pytest.mark.unit
class TestMoverSearch:
    """Test the best-effort mover search."""

    def test_bounded_words(self, odometer, grigorchuk):
        """Test enumeration skips words that reduce to shorter ones."""
        texts = [w.to_text() for w in bounded_words(odometer, 2)]
        assert texts == ["id", "a", "a'", "a.a", "a'.a'"]
        assert len(list(bounded_words(grigorchuk, 1))) == 9

    def test_global_mover(self, odometer):
        """Test ``a'`` sends the zero sequence to the ones sequence."""
        mover = find_mover(odometer, point("(0)"), point("(1)"))
        assert mover is not None
        assert evaluate(mover, point("(0)")) == point("(1)")
        assert mover.rows[0].action.to_text() == "a'"

    def test_prefix_swap_mover(self, grigorchuk):
        """Test movers that change the preperiod."""
        p, q = point("1(01)"), point("(01)")
        mover = find_mover(grigorchuk, p, q)
        assert mover is not None
        assert evaluate(mover, p) == q

    def test_search_can_fail(self, trivial_group):
        """Test an empty result when no bounded mover exists."""
        assert find_mover(trivial_group, point("(0)"), point("(1)"), 1, 2) is None
