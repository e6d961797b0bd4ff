"""Unit tests for separated systems, transporters, f, E′, φ and π."""

import random

import pytest

from ssg.application.services.rn_service import (
    compose,
    equal_rn,
    evaluate,
    fixes_cones,
    from_group_element,
    identity_rn,
)
from ssg.application.services.sampling_service import random_element
from ssg.application.services.witness_service import (
    SeparatedSystem,
    build_e_prime,
    build_f,
    induced_permutation,
    phi,
    pi,
    separate_points,
    tuple_transporter,
)
from ssg.core.exceptions import FixedPointViolation, InvalidPointError, MoverContractError
from ssg.domain.value_objects.cone import Cone
from ssg.domain.value_objects.rational_point import RationalPoint


def point(text, d=2):
    return RationalPoint.parse(d, text)


def addresses(cones):
    return [cone.address for cone in cones]


@pytest.mark.unit
class TestSeparatePoints:
    """Test cone separation of finite point sets."""

    def test_constant_points_need_one_extension(self):
        """Test ``(0)`` and ``(1)`` separate only below the root letters."""
        system = separate_points([point("(0)"), point("(1)")])
        assert addresses(system.cones) == ["00", "11"]

    def test_single_periodic_point(self):
        """Test one period of ``(01)`` suffices."""
        assert addresses(separate_points([point("(01)")]).cones) == ["01"]

    def test_already_separated(self):
        """Test no extension when the adjusted preperiods separate."""
        system = separate_points([point("(01)"), point("(10)")])
        assert addresses(system.cones) == ["01", "10"]
        assert system.periods() == ("01", "10")

    def test_rejects_bad_input(self):
        """Test empty and repeated point sets."""
        with pytest.raises(InvalidPointError, match="At least one"):
            separate_points([])
        with pytest.raises(InvalidPointError, match="Duplicate"):
            separate_points([point("(0)"), point("0(0)")])

    def test_system_validation(self):
        """Test systems must not cover and must continue periodically."""
        with pytest.raises(InvalidPointError, match="not cover"):
            SeparatedSystem(2, (point("(0)"),), (Cone(""),))
        with pytest.raises(InvalidPointError, match="continue"):
            SeparatedSystem(2, (point("(01)"),), (Cone("0"),))


@pytest.mark.unit
class TestTupleTransporter:
    """Test tuple transporters."""

    def test_swap_with_reflection(self, reflection):
        """Test one element swapping the two constant sequences."""
        a = from_group_element(reflection.word("a"))
        pairs = [(point("(0)"), point("(1)")), (point("(1)"), point("(0)"))]
        element = tuple_transporter(pairs, [a, a])
        for p, q in pairs:
            assert evaluate(element, p) == q
        assert "00 -> 11 act a" in [str(row) for row in element.rows]

    def test_mover_contract(self, odometer):
        """Test movers that miss their target are reported."""
        with pytest.raises(MoverContractError, match="expected"):
            tuple_transporter([(point("(0)"), point("(1)"))], [identity_rn(odometer)])

    def test_one_mover_per_pair(self, odometer):
        """Test the mover count must match."""
        with pytest.raises(MoverContractError, match="one mover"):
            tuple_transporter([(point("(0)"), point("(1)"))], [])

    def test_repeated_targets(self, reflection):
        """Test targets must be distinct."""
        a = from_group_element(reflection.word("a"))
        identity = identity_rn(reflection)
        pairs = [(point("(0)"), point("(1)")), (point("(1)"), point("(1)"))]
        with pytest.raises(InvalidPointError, match="distinct"):
            tuple_transporter(pairs, [a, identity])


@pytest.mark.unit
class TestContractionElement:
    """Test the element f."""

    def test_f_moves_cone_into_itself(self, reflection):
        """Test ``f`` fixes the point and maps ``01`` onto ``0101``."""
        p = point("(01)")
        f = build_f(reflection, separate_points([p]))
        assert evaluate(f, p) == p
        assert "01 -> 0101 act id" in [str(row) for row in f.rows]


@pytest.mark.unit
class TestEPrime:
    """Test E′ data and φ."""

    def test_binary_e_prime(self):
        """Test no extra cones are needed for ``d = 2``."""
        data = build_e_prime(separate_points([point("(01)")]))
        assert addresses(data.gamma) == ["00", "1"]
        assert addresses(data.delta) == ["0", "1"]
        assert addresses(data.e_prime) == ["01"]
        assert (data.m, data.extra) == (2, 0)
        assert data.to_dict()["k"] == 0

    def test_ternary_e_prime(self):
        """Test one extra cone restores the count rule for ``d = 3``."""
        data = build_e_prime(separate_points([point("(0)", 3)]))
        assert addresses(data.gamma) == ["1", "2", "01"]
        assert addresses(data.delta) == ["0", "1", "2"]
        assert addresses(data.e_prime) == ["00", "02"]
        assert (data.m, data.extra) == (2, 1)
        assert [(str(g), str(d)) for g, d in data.zmap()] == [("1", "0"), ("2", "1"), ("01", "2")]

    def test_phi_of_identity(self, grigorchuk):
        """Test ``φ`` sends the identity to the identity."""
        data = build_e_prime(separate_points([point("(1)")]))
        assert equal_rn(phi(identity_rn(grigorchuk), data), identity_rn(grigorchuk))

    def test_phi_fixes_e_prime(self, index_two):
        """Test images are the identity on E′."""
        data = build_e_prime(separate_points([point("(01)")]))
        image = phi(index_two, data)
        assert fixes_cones(image, data.e_prime)
        assert not equal_rn(image, identity_rn(index_two.group))

    def test_phi_is_a_homomorphism(self, grigorchuk):
        """Test ``φ(h1 h2) = φ(h1) φ(h2)`` on random elements."""
        data = build_e_prime(separate_points([point("(1)")]))
        rng = random.Random(7)
        for _ in range(5):
            h1, h2 = random_element(grigorchuk, rng), random_element(grigorchuk, rng)
            assert equal_rn(phi(compose(h1, h2), data), compose(phi(h1, data), phi(h2, data)))

    def test_phi_conjugates_into_gamma(self, index_two):
        """Test ``φ(h)`` acts on ``γ_i`` as ``h`` acts on ``δ_i``."""
        data = build_e_prime(separate_points([point("(01)")]))
        image = phi(index_two, data)
        # the element sends 0(1) to 01(0); pulled back through 0 -> 00
        assert evaluate(image, point("00(1)")) == point("001(0)")


@pytest.mark.unit
class TestGermProjection:
    """Test π, the germs of an element fixing a finite point set."""

    def test_f_has_displacement_one_period(self, reflection):
        """Test ``π(f)`` is the trivial component shifted by each period."""
        points = [point("(0)"), point("(1)")]
        f = build_f(reflection, separate_points(points))
        germs = pi(f, points)
        assert [(str(g.nucleus_component), g.delta) for g in germs] == [("id", 1), ("id", 1)]
        assert not any(g.is_trivial() for g in germs)

    def test_index_two_germ(self, index_two):
        """Test the reference element has component ``a`` and displacement one."""
        (germ,) = pi(index_two, [point("(01)")])
        assert str(germ.nucleus_component) == "a"
        assert germ.delta == 1
        assert not germ.is_trivial()

    def test_phi_lands_in_kernel(self, index_two):
        """Test ``φ(h)`` is the identity near every point of S."""
        points = [point("(01)")]
        data = build_e_prime(separate_points(points))
        assert all(germ.is_trivial() for germ in pi(phi(index_two, data), points))

    def test_identity_is_in_kernel(self, grigorchuk):
        """Test the identity has trivial germs everywhere."""
        points = [point("(1)"), point("0(1)")]
        assert all(germ.is_trivial() for germ in pi(identity_rn(grigorchuk), points))

    def test_swap_is_outside_fixator(self, reflection):
        """Test an element swapping the points permutes S and has no π."""
        a = from_group_element(reflection.word("a"))
        points = [point("(0)"), point("(1)")]
        assert induced_permutation(a, points) == (1, 0)
        with pytest.raises(FixedPointViolation, match="permutes"):
            pi(a, points)

    def test_point_set_not_preserved(self, index_two):
        """Test elements moving a point out of S are rejected."""
        with pytest.raises(FixedPointViolation, match="does not preserve"):
            induced_permutation(index_two, [point("(0)")])
