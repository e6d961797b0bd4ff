"""Seeded property suites over the toolkit's constructions.

Each suite is a list of named checks. A check either returns a detail
string (pass) or raises: ``CheckFailed`` and any other toolkit error
count as failures, exhausted bounds as "not stabilized", and
``CheckSkipped`` marks a check with nothing to run on. Every check
draws from its own ``random.Random`` seeded by ``"{seed}:{check_id}"``,
so adding a check never perturbs the others.
"""

from __future__ import annotations

import random
from collections.abc import Callable, Iterator
from dataclasses import dataclass, field
from itertools import chain, product

import structlog

from ...core.exceptions import (
    BoundExceededError,
    CheckFailed,
    CheckSkipped,
    SSGError,
    UnknownSuiteError,
)
from ...domain.entities.automaton_group import AutomatonGroup
from ...domain.entities.group_word import GroupWord, Letter, step_letters
from ...domain.entities.rn_element import RNElement
from ...domain.value_objects.cone import Cone, ConePartition
from ...domain.value_objects.rational_point import RationalPoint
from ..schemas import CheckResult, CheckStatus, SuiteReport
from .germ_service import (
    PeriodicNucleusData,
    coset_witness,
    germ_equal,
    germ_signature,
    periodic_nucleus,
)
from .nucleus_service import nucleus
from .partition_service import common_refinement
from .rn_service import (
    compose,
    equal_rn,
    evaluate,
    expand,
    fixes_cones,
    identity_rn,
    image_cone,
    invert,
    make_element,
    power,
)
from .sampling_service import (
    plant_identity_near,
    random_complete_partition,
    random_distinct_points,
    random_element,
    random_pairs,
    random_point,
    random_word,
    sample_group_stabilizer,
    sample_stabilizer,
)
from .witness_service import (
    EPrimeData,
    SeparatedSystem,
    build_e_prime,
    build_f,
    phi,
    pi,
    separate_points,
    tuple_transporter,
)
from .word_problem import equal, is_trivial

logger = structlog.get_logger(__name__)

SUITES = ("wp", "nucleus", "construct", "algebra", "oligo", "germ", "stab")
WP_MAX_LENGTH = 6
WP_DEPTH = 8
PURE_THOMPSON_SAMPLE = 200
KERNEL_MAX_POWER = 8
NESTING_LEVELS = 5
TUPLE_ATTEMPTS = 50


@dataclass(frozen=True)
class SuiteDefaults:
    """Group, points and reference element a suite runs against by default."""

    group: str
    points: tuple[str, ...] = ()
    element: str | None = None


@dataclass(frozen=True)
class SuiteContext:
    """Inputs shared by the checks of one suite run."""

    group: AutomatonGroup
    seed: int
    cases: int
    points: tuple[RationalPoint, ...] = ()
    element: RNElement | None = None
    expected_nucleus_size: int | None = None
    extra_groups: tuple[AutomatonGroup, ...] = field(default_factory=tuple)

    def rng(self, check_id: str) -> random.Random:
        """Independent generator for one check."""
        return random.Random(f"{self.seed}:{check_id}")

    def point(self) -> RationalPoint:
        """The single base point of point-based suites."""
        if not self.points:
            msg = "This suite needs at least one rational point"
            raise CheckFailed(msg)
        return self.points[0]


Check = Callable[[SuiteContext, random.Random], str]


def _require(condition: bool, detail: str) -> None:
    if not condition:
        raise CheckFailed(detail)


def _run(check_id: str, check: Check, ctx: SuiteContext) -> CheckResult:
    try:
        detail = check(ctx, ctx.rng(check_id))
        status = CheckStatus.PASS
    except BoundExceededError as exc:
        detail, status = str(exc), CheckStatus.NOT_STABILIZED
    except CheckSkipped as exc:
        detail, status = str(exc), CheckStatus.SKIP
    except SSGError as exc:
        detail, status = f"{type(exc).__name__}: {exc}", CheckStatus.FAIL
    logger.info("Check finished", check_id=check_id, status=status.value)
    return CheckResult(check_id=check_id, status=status, detail=detail)


# Word problem


def _letters_for(group: AutomatonGroup) -> list[Letter]:
    letters: list[Letter] = [(name, 1) for name in group.state_names]
    for name in group.state_names:
        square = GroupWord(group, ((name, 1), (name, 1)))
        if not is_trivial(square):
            letters.append((name, -1))
    return letters


def _reduced_words(group: AutomatonGroup, max_length: int) -> Iterator[GroupWord]:
    seen: set[tuple[Letter, ...]] = set()
    letters = _letters_for(group)
    for length in range(max_length + 1):
        for combo in product(letters, repeat=length):
            word = GroupWord(group, combo)
            if len(word) == length and word.letters not in seen:
                seen.add(word.letters)
                yield word


class _LevelAction:
    """Images of every path of a fixed length, memoized on letter tuples."""

    def __init__(self, group: AutomatonGroup) -> None:
        self.group = group
        self._cache: dict[tuple[tuple[Letter, ...], int], tuple[str, ...]] = {}

    def images(self, letters: tuple[Letter, ...], depth: int) -> tuple[str, ...]:
        key = (letters, depth)
        if key in self._cache:
            return self._cache[key]
        if depth == 0:
            result: tuple[str, ...] = ("",)
        else:
            out: list[str] = []
            for x in range(self.group.d):
                y, below = step_letters(self.group, letters, x)
                out.extend(str(y) + tail for tail in self.images(below, depth - 1))
            result = tuple(out)
        self._cache[key] = result
        return result


def _check_wp_brute_force(ctx: SuiteContext, rng: random.Random) -> str:
    action = _LevelAction(ctx.group)
    identity = action.images((), WP_DEPTH)
    checked = 0
    for word in _reduced_words(ctx.group, WP_MAX_LENGTH):
        trivial = is_trivial(word)
        moves = action.images(word.letters, WP_DEPTH) != identity
        _require(
            trivial != moves,
            f"{word}: is_trivial={trivial} but depth-{WP_DEPTH} action moves={moves}",
        )
        checked += 1
    return f"{checked} reduced words of length <= {WP_MAX_LENGTH} agree at depth {WP_DEPTH}"


def _check_wp_commutation(ctx: SuiteContext, rng: random.Random) -> str:
    action = _LevelAction(ctx.group)
    commuting = 0
    for _ in range(ctx.cases):
        u, v = random_word(ctx.group, rng, 4), random_word(ctx.group, rng, 4)
        same = action.images((u * v).letters, WP_DEPTH) == action.images((v * u).letters, WP_DEPTH)
        _require(equal(u * v, v * u) == same, f"equal({u}.{v}, {v}.{u}) disagrees with the tree action")
        commuting += same
    involutions = sum(is_trivial(g * g) for g in ctx.group.generators())
    return f"{commuting}/{ctx.cases} commuting pairs; {involutions} involutive generators"


# Nucleus


def _check_nucleus_closure(ctx: SuiteContext, rng: random.Random) -> str:
    result = nucleus(ctx.group)
    for element in result.elements:
        for x in range(ctx.group.d):
            _require(
                result.contains(element.restrict(str(x))),
                f"{element}|_{x} is outside the nucleus",
            )
        _require(result.contains(element.inverse()), f"{element}' is outside the nucleus")
    if ctx.expected_nucleus_size is not None:
        _require(
            len(result) == ctx.expected_nucleus_size,
            f"expected {ctx.expected_nucleus_size} elements, found {len(result)}",
        )
    return f"{len(result)} elements closed under restriction and inversion"


def _check_nucleus_certificate(ctx: SuiteContext, rng: random.Random) -> str:
    result = nucleus(ctx.group)
    depth = result.depth_certificate
    for first in result.elements:
        for second in result.elements:
            w = first * second
            for level in range(depth, depth + 3):
                for path in product(range(ctx.group.d), repeat=level):
                    below = w.restrict("".join(map(str, path)))
                    _require(
                        result.contains(below),
                        f"({w})|_{''.join(map(str, path))} left the nucleus below the certificate",
                    )
    return f"certificate {depth} holds through depth {depth + 2}"


# Element construction


def _check_make_element(ctx: SuiteContext, rng: random.Random) -> str:
    groups = (ctx.group, *ctx.extra_groups)
    built = 0
    for group in groups:
        for _ in range(ctx.cases):
            pairs = random_pairs(group, rng, max_pairs=3)
            h = make_element(group, pairs)
            for alpha, beta, g in pairs:
                row = h.row_at(alpha.address)
                if row is None or row.domain != alpha or row.range != beta:
                    msg = f"{alpha} is not mapped onto {beta} in {h}"
                    raise CheckFailed(msg)
                _require(equal(row.action, g), f"local action at {alpha} is {row.action}, not {g}")
            built += 1
    return f"{built} elements over d in {sorted({g.d for g in groups})}"


# Group laws


def _check_associativity(ctx: SuiteContext, rng: random.Random) -> str:
    for _ in range(ctx.cases):
        a, b, c = (random_element(ctx.group, rng) for _ in range(3))
        _require(
            equal_rn(compose(compose(a, b), c), compose(a, compose(b, c))),
            f"(ab)c != a(bc) for a={a}, b={b}, c={c}",
        )
    return f"{ctx.cases} triples"


def _check_identity_and_inverse(ctx: SuiteContext, rng: random.Random) -> str:
    one = identity_rn(ctx.group)
    for _ in range(ctx.cases):
        h = random_element(ctx.group, rng)
        _require(equal_rn(compose(h, one), h) and equal_rn(compose(one, h), h), f"identity law for {h}")
        _require(equal_rn(compose(h, invert(h)), one), f"h h^-1 != 1 for {h}")
        _require(equal_rn(invert(invert(h)), h), f"(h^-1)^-1 != h for {h}")
    return f"{ctx.cases} elements"


def _check_action_axiom(ctx: SuiteContext, rng: random.Random) -> str:
    for _ in range(ctx.cases):
        h1, h2 = random_element(ctx.group, rng), random_element(ctx.group, rng)
        p = random_point(ctx.group.d, rng)
        _require(
            evaluate(compose(h1, h2), p) == evaluate(h1, evaluate(h2, p)),
            f"(h1 h2)(p) != h1(h2(p)) at p={p}",
        )
    return f"{ctx.cases} pairs"


def _check_expand(ctx: SuiteContext, rng: random.Random) -> str:
    for _ in range(ctx.cases):
        h = random_element(ctx.group, rng)
        finer = common_refinement(
            h.domain_partition(),
            ConePartition.of(ctx.group.d, random_complete_partition(ctx.group.d, rng)),
        )
        refined = expand(h, finer)
        p = random_point(ctx.group.d, rng)
        _require(equal_rn(refined, h), f"expansion changed {h}")
        _require(evaluate(refined, p) == evaluate(h, p), f"expansion moved the image of {p}")
    return f"{ctx.cases} refinements"


# Oligomorphy


def _admissible_tuple(
    group: AutomatonGroup, rng: random.Random, n: int
) -> tuple[list[RationalPoint], list[RationalPoint], list[RNElement]]:
    """Distinct points, movers and distinct targets ``q_i = h_i(p_i)``."""
    for _ in range(TUPLE_ATTEMPTS):
        points = random_distinct_points(group.d, rng, n)
        movers = [random_element(group, rng) for _ in points]
        targets = [evaluate(h, p) for h, p in zip(movers, points, strict=True)]
        if len(set(targets)) == n:
            return points, targets, movers
    msg = f"No admissible {n}-tuple drawn in {TUPLE_ATTEMPTS} attempts"
    raise CheckFailed(msg)


def _check_transporter(ctx: SuiteContext, rng: random.Random) -> str:
    largest = 0
    for _ in range(ctx.cases):
        n = rng.randint(1, 4)
        points, targets, movers = _admissible_tuple(ctx.group, rng, n)
        h = tuple_transporter(list(zip(points, targets, strict=True)), movers)
        for p, q in zip(points, targets, strict=True):
            _require(evaluate(h, p) == q, f"transporter sends {p} to {evaluate(h, p)}, not {q}")
        largest = max(largest, n)
    return f"{ctx.cases} tuples, up to {largest} points"


# Germs


def _check_f_signature(ctx: SuiteContext, rng: random.Random) -> str:
    p = ctx.point()
    f = build_f(ctx.group, separate_points([p]))
    data = periodic_nucleus(nucleus(ctx.group), p.period)
    sig = germ_signature(f, p, data)
    _require(is_trivial(sig.nucleus_component), f"f has component {sig.nucleus_component}")
    _require(sig.delta == len(p.period), f"f has delta {sig.delta}, expected {len(p.period)}")
    return f"{sig}; {data}"


def _check_additivity(ctx: SuiteContext, rng: random.Random) -> str:
    p = ctx.point()
    data = periodic_nucleus(nucleus(ctx.group), p.period)
    for _ in range(ctx.cases):
        h1 = sample_stabilizer(ctx.group, p, rng)
        h2 = sample_stabilizer(ctx.group, p, rng)
        d1 = germ_signature(h1, p, data).delta
        d2 = germ_signature(h2, p, data).delta
        d12 = germ_signature(compose(h1, h2), p, data).delta
        _require(d12 == d1 + d2, f"delta(h1 h2) = {d12} but {d1} + {d2}")
    return f"{ctx.cases} pairs"


def _check_coset(ctx: SuiteContext, rng: random.Random) -> str:
    p = ctx.point()
    f = build_f(ctx.group, separate_points([p]))
    data = periodic_nucleus(nucleus(ctx.group), p.period)
    witnessed = 0
    for _ in range(ctx.cases):
        h1 = sample_stabilizer(ctx.group, p, rng)
        h2 = sample_stabilizer(ctx.group, p, rng)
        if coset_witness(h1, h2, p, f, data) is not None:
            witnessed += 1
    return f"{witnessed}/{ctx.cases} pairs in a common f-coset, each verified"


def _check_group_germs_finite(ctx: SuiteContext, rng: random.Random) -> str:
    p = ctx.point()
    data = periodic_nucleus(nucleus(ctx.group), p.period)
    for _ in range(ctx.cases):
        h = sample_group_stabilizer(ctx.group, p, rng)
        sig = germ_signature(h, p, data)
        _require(sig.delta == 0, f"pure-group stabilizer has delta {sig.delta}")
    return f"{ctx.cases} pure-group stabilizers, all delta 0"


def _check_finitely_many_cosets(ctx: SuiteContext, rng: random.Random) -> str:
    p = ctx.point()
    f = build_f(ctx.group, separate_points([p]))
    data = periodic_nucleus(nucleus(ctx.group), p.period)
    representatives: list[RNElement] = []
    for _ in range(ctx.cases):
        h = sample_stabilizer(ctx.group, p, rng)
        if not any(coset_witness(r, h, p, f, data) is not None for r in representatives):
            representatives.append(h)
    _require(
        len(representatives) <= len(data.n_beta),
        f"{len(representatives)} cosets exceed {len(data.n_beta)} periodic components",
    )
    return f"{len(representatives)} cosets of <f> among {ctx.cases} samples"


def _nontrivial_germ_element(
    ctx: SuiteContext, p: RationalPoint, data: PeriodicNucleusData, rng: random.Random
) -> RNElement:
    reference = [ctx.element] if ctx.element is not None and evaluate(ctx.element, p) == p else []
    samples = (sample_stabilizer(ctx.group, p, rng) for _ in range(ctx.cases * 4))
    for h in chain(reference, samples):
        if not is_trivial(germ_signature(h, p, data).nucleus_component):
            return h
    msg = f"no stabilizer of {p} with a non-trivial component among {ctx.cases * 4} samples"
    raise CheckSkipped(msg)


def _check_index_two(ctx: SuiteContext, rng: random.Random) -> str:
    p = ctx.point()
    data = periodic_nucleus(nucleus(ctx.group), p.period)
    h = _nontrivial_germ_element(ctx, p, data, rng)
    sig = germ_signature(h, p, data)
    _require(not is_trivial(sig.nucleus_component), f"{sig} has trivial component")
    for _ in range(PURE_THOMPSON_SAMPLE):
        sample = sample_stabilizer(ctx.group, p, rng, pure_thompson=True)
        _require(not germ_equal(sample, h, p, data), f"pure-Thompson germ matches: {sample}")
    realized: list[GroupWord] = [sig.nucleus_component]
    for _ in range(ctx.cases * 4):
        component = germ_signature(sample_stabilizer(ctx.group, p, rng), p, data).nucleus_component
        if not any(equal(component, seen) for seen in realized):
            realized.append(component)
    trivial = [c for c in realized if is_trivial(c)]
    _require(
        bool(trivial) and len(trivial) < len(realized),
        f"realized components {[str(c) for c in realized]} of {data}",
    )
    return (
        f"{sig}; no match among {PURE_THOMPSON_SAMPLE} pure-Thompson stabilizers; "
        f"components {sorted(c.to_text() for c in realized)} realized"
    )


# Stabilizer structure


def _stab_setup(ctx: SuiteContext) -> tuple[SeparatedSystem, RNElement, EPrimeData]:
    system = separate_points(list(ctx.points))
    return system, build_f(ctx.group, system), build_e_prime(system)


def _check_nesting(ctx: SuiteContext, rng: random.Random) -> str:
    system, f, _ = _stab_setup(ctx)
    for cone, point in zip(system.cones, system.points, strict=True):
        image = cone
        for k in range(1, NESTING_LEVELS + 1):
            following = image_cone(f, image)
            expected = Cone(cone.address + point.period * k)
            _require(following == expected, f"f^{k}({cone}) = {following}, expected {expected}")
            image = expected
    return f"E ⊃ f(E) ⊃ ... for {NESTING_LEVELS} levels"


def _check_f_fixes_points(ctx: SuiteContext, rng: random.Random) -> str:
    system, f, _ = _stab_setup(ctx)
    for p in system.points:
        _require(evaluate(f, p) == p, f"f moves {p}")
    return f"f fixes {len(system.points)} points"


def _check_e_prime(ctx: SuiteContext, rng: random.Random) -> str:
    system, _, data = _stab_setup(ctx)
    _require((data.m + data.extra - 1) % (ctx.group.d - 1) == 0, "m + k is not 1 mod d-1")
    for cone in data.gamma[data.m :]:
        _require(any(alpha.contains(cone) for alpha in system.cones), f"extra cone {cone} is outside E")
    for p in system.points:
        _require(any(p.in_cone(cone) for cone in data.e_prime), f"{p} is not in E′")
        _require(not any(p.in_cone(cone) for cone in data.gamma), f"{p} lies in a γ cone")
    return f"m={data.m}, k={data.extra}, E′ has {len(data.e_prime)} cones"


def _check_phi_homomorphism(ctx: SuiteContext, rng: random.Random) -> str:
    _, _, data = _stab_setup(ctx)
    for _ in range(ctx.cases):
        h1, h2 = random_element(ctx.group, rng), random_element(ctx.group, rng)
        _require(
            equal_rn(phi(compose(h1, h2), data), compose(phi(h1, data), phi(h2, data))),
            "phi(h1 h2) != phi(h1) phi(h2)",
        )
    return f"{ctx.cases} pairs"


def _check_phi_fixes_e_prime(ctx: SuiteContext, rng: random.Random) -> str:
    _, _, data = _stab_setup(ctx)
    for _ in range(ctx.cases):
        image = phi(random_element(ctx.group, rng), data)
        _require(fixes_cones(image, data.e_prime), "phi(h) moves part of E′")
        for _ in range(5):
            cone = rng.choice(data.e_prime)
            inner = random_point(ctx.group.d, rng)
            p = RationalPoint.canonicalize(ctx.group.d, cone.address + inner.preperiod, inner.period)
            _require(evaluate(image, p) == p, f"phi(h) moves {p} in E′")
    return f"{ctx.cases} images, 5 points each"


def _check_phi_injective(ctx: SuiteContext, rng: random.Random) -> str:
    _, _, data = _stab_setup(ctx)
    one = identity_rn(ctx.group)
    _require(equal_rn(phi(one, data), one), "phi(1) != 1")
    for _ in range(ctx.cases):
        h = random_element(ctx.group, rng)
        if equal_rn(phi(h, data), one):
            _require(equal_rn(h, one), f"phi kills the nontrivial {h}")
    return f"{ctx.cases} samples"


def _check_pi_kernel(ctx: SuiteContext, rng: random.Random) -> str:
    system, f, data = _stab_setup(ctx)
    for germ, point in zip(pi(f, system.points), system.points, strict=True):
        _require(
            is_trivial(germ.nucleus_component) and germ.delta == len(point.period),
            f"f has germ {germ} at {point}",
        )
    for _ in range(ctx.cases):
        image = phi(random_element(ctx.group, rng), data)
        germs = pi(image, system.points)
        _require(all(germ.is_trivial() for germ in germs), "phi(h) has a non-trivial germ on S")
    return f"pi(f) = (1, |β|) at {len(system.points)} points; {ctx.cases} phi images in ker pi"


def _check_kernel_exhaustion(ctx: SuiteContext, rng: random.Random) -> str:
    system, f, _ = _stab_setup(ctx)
    worst = 0
    for _ in range(ctx.cases):
        h, _depth = plant_identity_near(ctx.group, system, rng)
        _require(
            all(germ.is_trivial() for germ in pi(h, system.points)),
            f"planted element {h} has a non-trivial germ on S",
        )
        for i in range(KERNEL_MAX_POWER + 1):
            fi = power(f, i)
            if fixes_cones(compose(invert(fi), compose(h, fi)), system.cones):
                worst = max(worst, i)
                break
        else:
            msg = f"f^-i h f^i never fixes E for i <= {KERNEL_MAX_POWER}"
            raise CheckFailed(msg)
    return f"{ctx.cases} planted elements, largest power {worst}"


SUITE_CHECKS: dict[str, dict[str, Check]] = {
    "wp": {
        "wp.brute_force": _check_wp_brute_force,
        "wp.commutation": _check_wp_commutation,
    },
    "nucleus": {
        "nucleus.certificate": _check_nucleus_certificate,
        "nucleus.closure": _check_nucleus_closure,
    },
    "construct": {"construct.make_element": _check_make_element},
    "algebra": {
        "algebra.action_axiom": _check_action_axiom,
        "algebra.associativity": _check_associativity,
        "algebra.expand": _check_expand,
        "algebra.identity_inverse": _check_identity_and_inverse,
    },
    "oligo": {"oligo.transporter": _check_transporter},
    "germ": {
        "germ.additivity": _check_additivity,
        "germ.coset": _check_coset,
        "germ.f_signature": _check_f_signature,
        "germ.finite_cosets": _check_finitely_many_cosets,
        "germ.group_delta": _check_group_germs_finite,
        "germ.index_two": _check_index_two,
    },
    "stab": {
        "stab.e_prime": _check_e_prime,
        "stab.f_fixes_points": _check_f_fixes_points,
        "stab.kernel_exhaustion": _check_kernel_exhaustion,
        "stab.nesting": _check_nesting,
        "stab.phi_fixes_e_prime": _check_phi_fixes_e_prime,
        "stab.phi_homomorphism": _check_phi_homomorphism,
        "stab.phi_injective": _check_phi_injective,
        "stab.pi_kernel": _check_pi_kernel,
    },
}


def run_checks(suite: str, ctx: SuiteContext) -> list[CheckResult]:
    """Run every check of one suite."""
    if suite not in SUITE_CHECKS:
        msg = f"Unknown suite {suite!r}; choose from {', '.join(SUITES)} or all"
        raise UnknownSuiteError(msg)
    logger.info("Running suite", suite=suite, group=ctx.group.name, seed=ctx.seed, cases=ctx.cases)
    return [_run(check_id, check, ctx) for check_id, check in sorted(SUITE_CHECKS[suite].items())]


def run_suite(suite: str, ctx: SuiteContext) -> SuiteReport:
    """One suite as a report."""
    return SuiteReport.from_checks(suite, ctx.group.name, ctx.seed, ctx.cases, run_checks(suite, ctx))
