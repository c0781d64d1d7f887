from __future__ import annotations

import functools
from importlib import resources

import pytest

from primhom.chartab import character_table
from primhom.formats import parse_group_file, parse_table_file
from primhom.perm import conjugacy_classes

FIXTURES = ["z2", "z4", "z2xz2", "z2xz2xz2", "z4xz2", "z8", "d8", "q8", "q16",
            "z3xz3", "heis27", "g128"]
SMALL = [f for f in FIXTURES if f != "g128"]
ABELIAN_RANK_GE_2 = ["z2xz2", "z2xz2xz2", "z4xz2", "z3xz3"]


def fixture_text(name: str) -> str:
    return resources.files("primhom.fixtures").joinpath(name).read_text()


@functools.lru_cache(maxsize=None)
def load(name: str):
    """(GroupFile, Group, classes, CharacterTable) for a shipped fixture."""
    gf = parse_group_file(fixture_text(name + ".grp"))
    g = gf.build()
    classes = conjugacy_classes(g)
    return gf, g, classes, character_table(g, classes)


@functools.lru_cache(maxsize=None)
def published_table():
    return parse_table_file(fixture_text("g128_published.tbl"))


@pytest.fixture(params=FIXTURES)
def fixture_name(request):
    return request.param


@pytest.fixture(params=SMALL)
def small_name(request):
    return request.param


def pytest_terminal_summary(terminalreporter):
    mod = __import__("sys").modules.get("test_acceptance")
    if mod is None or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for line in mod.summary_lines(mod.RESULTS):
        terminalreporter.write_line(line)
