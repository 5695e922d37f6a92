"""mu-bar is a link invariant; raw mu is only pinned down where Delta = 0."""

import random

import pytest

from mubar.invariants import mu_table
from mubar.longitudes import peripheral_data

from conftest import random_move

SEQUENCES = 60
MOVES = 6


def table(pd):
    return mu_table(peripheral_data(pd, 4), 4).entries


@pytest.mark.parametrize("name", ["hopf.pd", "whitehead.pd"])
def test_random_move_sequences(name, load):
    pd0 = load(name)
    base = table(pd0)
    rng = random.Random(name)
    applied = 0
    for s in range(SEQUENCES):
        pd, done = pd0, []
        for _ in range(MOVES):
            step = random_move(pd, rng)
            if step is None:
                break
            done.append(step[0])
            pd = step[1]
        applied += len(done)
        got = table(pd)
        for I, e in base.items():
            assert got[I].mubar == e.mubar, (s, done, I)
            assert got[I].delta == e.delta, (s, done, I)
            if e.delta == 0:
                assert got[I].mu == e.mu, (s, done, I)
    assert applied >= SEQUENCES * MOVES // 2
