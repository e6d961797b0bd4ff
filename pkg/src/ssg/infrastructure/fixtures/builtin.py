"""Compiled-in groups, elements and suite defaults."""

from __future__ import annotations

from functools import cache

from ...application.services.rn_service import make_element
from ...application.services.verification_service import SuiteDefaults
from ...domain.entities.automaton_group import AutomatonGroup
from ...domain.entities.rn_element import RNElement
from ...domain.value_objects.cone import Cone
from ..parsers.group_parser import parse_group

GROUP_TEXTS: dict[str, str] = {
    "grigorchuk": """\
group grigorchuk
alphabet 2
state a perm 1 0 -> id id
state b perm 0 1 -> a c
state c perm 0 1 -> a d
state d perm 0 1 -> id b
""",
    "odometer": """\
# binary adding machine
group odometer
alphabet 2
state a perm 1 0 -> id a
""",
    "reflection": """\
# flips every letter
group reflection
alphabet 2
state a perm 1 0 -> a a
""",
    "gupta_sidki_3": """\
group gupta_sidki_3
alphabet 3
state a perm 1 2 0 -> id id id
state A perm 2 0 1 -> id id id
state t perm 0 1 2 -> a A t
""",
    "trivial": """\
group trivial
alphabet 2
""",
}

EXPECTED_NUCLEUS_SIZES: dict[str, int] = {
    "grigorchuk": 5,
    "odometer": 3,
    "reflection": 2,
    "trivial": 1,
}


@cache
def builtin_group(name: str) -> AutomatonGroup:
    """Parse a compiled-in group once."""
    return parse_group(GROUP_TEXTS[name])


def index_two_element() -> RNElement:
    """Reflection-group element sending ``0𝔠`` onto ``01𝔠`` with local action ``a``."""
    group = builtin_group("reflection")
    return make_element(group, [(Cone("0"), Cone("01"), group.word("a"))])


BUILTIN_ELEMENTS = {"index_two": ("reflection", index_two_element)}


SUITE_DEFAULTS: dict[str, SuiteDefaults] = {
    "wp": SuiteDefaults("grigorchuk"),
    "nucleus": SuiteDefaults("grigorchuk"),
    "construct": SuiteDefaults("reflection"),
    "algebra": SuiteDefaults("grigorchuk"),
    "oligo": SuiteDefaults("odometer"),
    "germ": SuiteDefaults("reflection", ("(01)",), "index_two"),
    "stab": SuiteDefaults("grigorchuk", ("(1)",)),
}

# construct also runs over a group of the other arity
COMPANION_GROUPS: dict[int, str] = {2: "gupta_sidki_3", 3: "odometer"}
