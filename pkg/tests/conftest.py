from functools import lru_cache

import pytest

from gentle_hh1.corpus import corpus
from gentle_hh1.linalg import Field
from gentle_hh1.quiver import presentation

Q, F2, F3 = Field(0), Field(2), Field(3)
FIELDS = (Q, F2, F3)


def kronecker():
    return presentation(["e1", "e2"], [("b1", "e1", "e2"), ("b2", "e1", "e2")], [])


def nakayama():
    return presentation(["e1", "e2"], [("a1", "e1", "e2"), ("a2", "e2", "e1")], [("a1", "a2"), ("a2", "a1")])


def loop():
    return presentation(["e"], [("x", "e", "e")], [("x", "x")])


def point():
    return presentation(["e"], [], [])


def loop_cycle():
    # a: e1 -> e2, b: loop at e2, c: e2 -> e1, I = <ca, ac, b²>
    return presentation(
        ["e1", "e2"],
        [("a", "e1", "e2"), ("b", "e2", "e2"), ("c", "e2", "e1")],
        [("a", "c"), ("c", "a"), ("b", "b")],
    )


def four_vertex():
    # I = <ba, db>
    return presentation(
        ["e1", "e2", "e3", "e4"],
        [("a", "e1", "e2"), ("b", "e2", "e3"), ("c", "e3", "e4"), ("d", "e3", "e1")],
        [("a", "b"), ("b", "d")],
    )


def example_cuts():
    return presentation(
        ["e1", "e2", "e3", "e4"],
        [("a", "e1", "e2"), ("b", "e2", "e3"), ("c", "e2", "e3"), ("d", "e3", "e4"), ("f", "e4", "e1")],
        [("a", "c"), ("b", "d"), ("d", "f"), ("f", "a")],
    )


NAMED = {
    "kronecker": kronecker,
    "nakayama": nakayama,
    "loop": loop,
    "point": point,
    "loop_cycle": loop_cycle,
    "four_vertex": four_vertex,
    "example_cuts": example_cuts,
}


@lru_cache(maxsize=None)
def small_corpus():
    return tuple(corpus())


@pytest.fixture(scope="session")
def the_corpus():
    return small_corpus()


def by_name(name):
    return NAMED[name]()


# one summary line per acceptance criterion, printed after the run
ACCEPTANCE: dict[str, str] = {}


def record(criterion: str, ok: bool, detail: str = "") -> None:
    ACCEPTANCE[criterion] = f"{'PASS' if ok else 'FAIL'}  {criterion}" + (f"  ({detail})" if detail else "")


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE:
        terminalreporter.section("acceptance criteria")
        for key in sorted(ACCEPTANCE):
            terminalreporter.write_line(ACCEPTANCE[key])
