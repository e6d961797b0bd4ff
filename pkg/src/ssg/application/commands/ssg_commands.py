"""Commands and handlers behind the ``ssg`` subcommands."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Protocol

import structlog

from ...core.config import get_settings
from ...core.exceptions import BoundExceededError
from ...domain.entities.automaton_group import AutomatonGroup
from ...domain.entities.rn_element import RNElement
from ...domain.value_objects.rational_point import RationalPoint
from ..schemas import SuiteReport
from ..services.germ_service import germ_signature, periodic_nucleus
from ..services.mover_search import find_mover
from ..services.nucleus_service import nucleus
from ..services.rn_service import evaluate, from_group_element
from ..services.verification_service import SUITES, SuiteContext, SuiteDefaults, run_checks
from ..services.witness_service import build_e_prime, phi, separate_points, tuple_transporter
from ..services.word_problem import is_trivial
from .base import Command, CommandHandler, CommandResult

logger = structlog.get_logger(__name__)


class Resolver(Protocol):
    """Turns command references into groups, elements and suite defaults."""

    def group(self, reference: str) -> AutomatonGroup: ...

    def element(self, reference: str, group: AutomatonGroup) -> RNElement: ...

    def suite_defaults(self, suite: str) -> SuiteDefaults | None: ...

    def expected_nucleus_size(self, group: AutomatonGroup) -> int | None: ...

    def companion_group(self, group: AutomatonGroup) -> AutomatonGroup | None: ...


def _rows(element: RNElement) -> list[dict[str, str]]:
    return [
        {"domain": str(row.domain), "range": str(row.range), "act": row.action.to_text()}
        for row in element.rows
    ]


def _render_rows(name: str, element: RNElement) -> list[str]:
    lines = [f"rn {name} over {element.group.name}"]
    lines += [f"row {row.domain} -> {row.range} act {row.action.to_text()}" for row in element.rows]
    return lines


def _positive(value: int | None, what: str) -> None:
    if value is not None and value <= 0:
        msg = f"{what} must be positive"
        raise ValueError(msg)


class _ResolvingHandler:
    def __init__(self, resolver: Resolver) -> None:
        """Initialize handler with a reference resolver."""
        self._resolver = resolver


@dataclass(frozen=True)
class NucleusCommand(Command):
    """Compute the nucleus of a group."""

    group: str
    max_size: int | None = None
    max_depth: int | None = None

    def validate(self) -> None:
        """Caps must be positive."""
        _positive(self.max_size, "max size")
        _positive(self.max_depth, "max depth")


class NucleusCommandHandler(_ResolvingHandler, CommandHandler[NucleusCommand, CommandResult]):
    """Handler for ``ssg nucleus``."""

    def handle(self, command: NucleusCommand) -> CommandResult:
        """List representatives and the depth certificate."""
        command.validate()
        group = self._resolver.group(command.group)
        result = nucleus(group, command.max_size, command.max_depth)
        names = [w.to_text() for w in result.elements]
        text = "\n".join(
            [f"nucleus of {group.name}: {len(names)} elements, depth certificate {result.depth_certificate}"]
            + [f"  {name}" for name in names]
        )
        return CommandResult.success_result(
            text,
            {"group": group.name, "elements": names, "depth_certificate": result.depth_certificate},
        )


@dataclass(frozen=True)
class WordProblemCommand(Command):
    """Decide whether a word is trivial."""

    group: str
    word: str

    def validate(self) -> None:
        """Words may be ``id`` but not blank."""
        if not self.word.strip():
            msg = "Word cannot be empty; use 'id' for the identity"
            raise ValueError(msg)


class WordProblemCommandHandler(
    _ResolvingHandler, CommandHandler[WordProblemCommand, CommandResult]
):
    """Handler for ``ssg wp``."""

    def handle(self, command: WordProblemCommand) -> CommandResult:
        """Print ``trivial`` or ``nontrivial``."""
        command.validate()
        group = self._resolver.group(command.group)
        word = group.word(command.word)
        trivial = is_trivial(word)
        verdict = "trivial" if trivial else "nontrivial"
        return CommandResult.success_result(
            verdict, {"group": group.name, "word": word.to_text(), "trivial": trivial}
        )


@dataclass(frozen=True)
class EvaluateCommand(Command):
    """Image of a rational point under an element or a global word."""

    group: str
    point: str
    element: str | None = None
    word: str | None = None

    def validate(self) -> None:
        """Exactly one of element and word."""
        if (self.element is None) == (self.word is None):
            msg = "Give exactly one of an element reference and a word"
            raise ValueError(msg)


class EvaluateCommandHandler(_ResolvingHandler, CommandHandler[EvaluateCommand, CommandResult]):
    """Handler for ``ssg eval``."""

    def handle(self, command: EvaluateCommand) -> CommandResult:
        """Print the image point."""
        command.validate()
        group = self._resolver.group(command.group)
        if command.element is not None:
            element = self._resolver.element(command.element, group)
        else:
            element = from_group_element(group.word(command.word or "id"))
        point = RationalPoint.parse(group.d, command.point)
        image = evaluate(element, point)
        return CommandResult.success_result(
            str(image), {"group": group.name, "point": str(point), "image": str(image)}
        )


@dataclass(frozen=True)
class GermCommand(Command):
    """Germ signature of an element at a fixed rational point."""

    group: str
    element: str
    point: str
    cap: int | None = None

    def validate(self) -> None:
        """Cap must be positive."""
        _positive(self.cap, "cap")


class GermCommandHandler(_ResolvingHandler, CommandHandler[GermCommand, CommandResult]):
    """Handler for ``ssg germ``."""

    def handle(self, command: GermCommand) -> CommandResult:
        """Print the signature and the periodic nucleus it was taken against."""
        command.validate()
        group = self._resolver.group(command.group)
        element = self._resolver.element(command.element, group)
        point = RationalPoint.parse(group.d, command.point)
        data = periodic_nucleus(nucleus(group), point.period)
        signature = germ_signature(element, point, data, command.cap)
        document = signature.to_dict() | {
            "periodic_nucleus": [w.to_text() for w in data.n_beta],
            "M": data.M,
        }
        return CommandResult.success_result(f"{signature}\n{data}", document)


@dataclass(frozen=True)
class TransportCommand(Command):
    """One element sending each ``p_i`` to ``q_i``."""

    group: str
    pairs: tuple[tuple[str, str], ...]
    movers: tuple[str, ...] = field(default_factory=tuple)

    def validate(self) -> None:
        """At least one pair, and one mover per pair when movers are given."""
        if not self.pairs:
            msg = "At least one source/target pair is required"
            raise ValueError(msg)
        if self.movers and len(self.movers) != len(self.pairs):
            msg = f"Got {len(self.movers)} movers for {len(self.pairs)} pairs"
            raise ValueError(msg)


class TransportCommandHandler(_ResolvingHandler, CommandHandler[TransportCommand, CommandResult]):
    """Handler for ``ssg transport``."""

    def handle(self, command: TransportCommand) -> CommandResult:
        """Build the transporter; search for movers when none are given."""
        command.validate()
        group = self._resolver.group(command.group)
        pairs = [
            (RationalPoint.parse(group.d, p), RationalPoint.parse(group.d, q))
            for p, q in command.pairs
        ]
        if command.movers:
            movers = [self._resolver.element(ref, group) for ref in command.movers]
        else:
            movers = []
            for p, q in pairs:
                mover = find_mover(group, p, q)
                if mover is None:
                    bound = get_settings().mover_word_length
                    msg = f"No mover from {p} to {q} within the best-effort search bounds"
                    raise BoundExceededError(msg, bound)
                movers.append(mover)
        element = tuple_transporter(pairs, movers)
        images = [{"point": str(p), "image": str(evaluate(element, p))} for p, _ in pairs]
        text = "\n".join(
            _render_rows("transporter", element)
            + [f"# {item['point']} -> {item['image']}" for item in images]
        )
        return CommandResult.success_result(
            text, {"group": group.name, "rows": _rows(element), "images": images}
        )


@dataclass(frozen=True)
class PhiCommand(Command):
    """``φ(h)`` for the stabilizer data of a set of points."""

    group: str
    element: str
    points: tuple[str, ...]

    def validate(self) -> None:
        """At least one point."""
        if not self.points:
            msg = "At least one point of S is required"
            raise ValueError(msg)


class PhiCommandHandler(_ResolvingHandler, CommandHandler[PhiCommand, CommandResult]):
    """Handler for ``ssg phi``."""

    def handle(self, command: PhiCommand) -> CommandResult:
        """Print E, E′, the γ/δ pairing and ``φ(h)``."""
        command.validate()
        group = self._resolver.group(command.group)
        element = self._resolver.element(command.element, group)
        points = [RationalPoint.parse(group.d, text) for text in command.points]
        system = separate_points(points)
        data = build_e_prime(system)
        image = phi(element, data)
        document = data.to_dict()
        lines = [
            "E: " + " ".join(str(c) for c in system.cones),
            "E': " + " ".join(str(c) for c in data.e_prime),
            "gamma -> delta: " + " ".join(f"{g}->{d}" for g, d in data.zmap()),
            *_render_rows("phi", image),
        ]
        return CommandResult.success_result(
            "\n".join(lines),
            {"group": group.name, "E": [str(c) for c in system.cones], **document, "rows": _rows(image)},
        )


@dataclass(frozen=True)
class VerifyCommand(Command):
    """Run a named verification suite, or ``all``."""

    suite: str
    seed: int | None = None
    cases: int | None = None
    group: str | None = None
    points: tuple[str, ...] = field(default_factory=tuple)

    def validate(self) -> None:
        """Known suite; overrides only for a single suite."""
        if self.suite != "all" and self.suite not in SUITES:
            msg = f"Unknown suite {self.suite!r}; choose from {', '.join(SUITES)} or all"
            raise ValueError(msg)
        if self.suite == "all" and (self.group or self.points):
            msg = "'verify all' runs every suite on its defaults; drop --group and --point"
            raise ValueError(msg)
        _positive(self.cases, "cases")


class VerifyCommandHandler(_ResolvingHandler, CommandHandler[VerifyCommand, CommandResult]):
    """Handler for ``ssg verify``."""

    def _context(self, suite: str, command: VerifyCommand, seed: int, cases: int) -> SuiteContext:
        defaults = self._resolver.suite_defaults(suite) or SuiteDefaults("grigorchuk")
        group = self._resolver.group(command.group or defaults.group)
        texts = command.points or defaults.points
        points = tuple(RationalPoint.parse(group.d, text) for text in texts)
        element = None
        if defaults.element is not None and group.name == defaults.group:
            element = self._resolver.element(defaults.element, group)
        companion = self._resolver.companion_group(group)
        return SuiteContext(
            group=group,
            seed=seed,
            cases=cases,
            points=points,
            element=element,
            expected_nucleus_size=self._resolver.expected_nucleus_size(group),
            extra_groups=(companion,) if companion is not None else (),
        )

    def handle(self, command: VerifyCommand) -> CommandResult:
        """Run the checks and summarize them as a report."""
        command.validate()
        settings = get_settings()
        seed = settings.default_seed if command.seed is None else command.seed
        cases = command.cases or settings.default_cases
        suites = SUITES if command.suite == "all" else (command.suite,)

        checks = []
        groups = []
        for suite in suites:
            ctx = self._context(suite, command, seed, cases)
            groups.append(ctx.group.name)
            checks += run_checks(suite, ctx)
        group_label = groups[0] if len(set(groups)) == 1 else "built-in defaults"
        report = SuiteReport.from_checks(command.suite, group_label, seed, cases, checks)
        logger.info("Suite finished", suite=command.suite, exit_code=report.exit_code)
        if report.passed:
            return CommandResult.success_result(report.render_text(), report.model_dump(mode="json"))
        return CommandResult.failure_result(
            report.render_text(), report.model_dump(mode="json"), report.exit_code
        )
