import random

import pytest
from hypothesis import strategies as st

from mubar.checks import golden
from mubar.diagrams import DiagramError, r1_add, r1_remove, r2_add, r2_remove, r3
from mubar.words import BraidWord, Word


def words(m=3, max_len=12):
    letters = st.integers(1, m).flatmap(lambda i: st.sampled_from((i, -i)))
    return st.lists(letters, max_size=max_len).map(lambda ls: Word(tuple(ls), m))


def monomials(m=3, max_deg=4):
    return st.lists(st.integers(1, m), max_size=max_deg).map(tuple)


def pure_braids(strands=3, max_len=8):
    """Pure braids as products of squared generators and their conjugates."""
    gen = st.integers(1, strands - 1).flatmap(lambda k: st.sampled_from((k, -k)))
    return st.lists(st.tuples(gen, gen), max_size=max_len // 4 + 1).map(
        lambda pairs: BraidWord(tuple(x for c, g in pairs for x in (c, g, g, -c)), strands))


def random_move(pd, rng):
    """One applicable Reidemeister move chosen at random, or None."""
    edges = [e for comp in pd.components for e in comp]
    for _ in range(60):
        mv = rng.choice(["R1+", "R1-", "R2+", "R2-", "R3"])
        try:
            if mv == "R1+":
                return mv, r1_add(pd, rng.choice(edges), rng.randrange(4))
            if mv == "R1-" and pd.crossings:
                return mv, r1_remove(pd, rng.randrange(len(pd.crossings)))
            if mv == "R2+":
                return mv, r2_add(pd, rng.choice(edges), rng.choice(edges))
            if mv == "R2-":
                return mv, r2_remove(pd, rng.choice(edges))
            if mv == "R3":
                return mv, r3(pd, rng.choice(edges))
        except DiagramError:
            continue
    return None


@pytest.fixture
def load():
    return golden


@pytest.fixture
def rng():
    return random.Random(20240611)


def pytest_terminal_summary(terminalreporter):
    mod = __import__("sys").modules.get("test_acceptance")
    if mod and mod.RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in mod.RESULTS:
            terminalreporter.write_line(line)
