import pytest
from hypothesis import given

from mubar.diagrams import (
    Crossing,
    DiagramError,
    PDCode,
    closure,
    linking_number,
    mirror,
    r1_add,
    r1_remove,
    r2_add,
    r2_remove,
    reidemeister_move,
    reverse_component,
    to_layout,
    unlink,
    writhe,
)
from mubar.words import BraidWord, parse_braid

from conftest import pure_braids, random_move

HOPF = PDCode(((1, 4, 2, 3, 1), (4, 1, 3, 2, 1)), ((1, 2), (3, 4)))


def planar(pd):
    layout, _ = to_layout(pd)
    return len(layout.faces()) == len(pd.crossings) + 2


def test_identity_closure_is_unlink():
    assert closure(BraidWord((), 3)) == unlink(3)


def test_hopf_closure():
    assert closure(parse_braid("s1 s1", 2)) == HOPF
    assert linking_number(HOPF, 1, 2) == 1


def test_closure_needs_pure_braid():
    with pytest.raises(DiagramError):
        closure(BraidWord((1,), 2))


def test_linking_numbers():
    assert linking_number(closure(parse_braid("s1^4", 2)), 1, 2) == 2
    assert linking_number(unlink(2), 1, 2) == 0
    br = parse_braid("s2 s1^-1 s2 s1^-1 s2 s1^-1", 3)
    assert all(linking_number(br, i, j) == 0 for i, j in ((1, 2), (1, 3), (2, 3)))


@given(pure_braids())
def test_braid_and_pd_linking_agree(b):
    pd = closure(b)
    for i in range(1, 4):
        for j in range(1, 4):
            if i != j:
                assert linking_number(b, i, j) == linking_number(pd, i, j) == linking_number(pd, j, i)


def test_linking_index_checks():
    with pytest.raises(DiagramError):
        linking_number(HOPF, 1, 3)
    with pytest.raises(DiagramError):
        linking_number(HOPF, 1, 1)


def test_arc_multiplicity_error():
    with pytest.raises(DiagramError, match="arc multiplicity"):
        PDCode(((1, 1, 1, 2, 1),), ((1, 2),))


def test_orientation_error(load):
    br = load("br.pd")
    assert br.crossings[0] == Crossing((5, 10, 6, 9), 1)
    flipped = (Crossing((5, 10, 6, 9), -1),) + br.crossings[1:]
    with pytest.raises(DiagramError, match="orientation"):
        PDCode(flipped, br.components)


def test_mirror_and_reverse_flip_linking():
    assert linking_number(mirror(HOPF), 1, 2) == -1
    assert linking_number(reverse_component(HOPF, 2), 1, 2) == -1


def test_r1_round_trip():
    k = r1_add(HOPF, 1, 2)
    assert len(k.crossings) == 3 and writhe(k, 1) in (1, -1)
    assert r1_remove(k, 2) == HOPF


@pytest.mark.parametrize("variant", range(4))
def test_r1_variants_on_circle(variant):
    k = r1_add(unlink(1), 1, variant)
    assert len(k.crossings) == 1 and planar(k)


def test_r2_poke_on_unlink():
    pd = r2_add(unlink(2), 1, 2)
    assert len(pd.crossings) == 2 and planar(pd)
    assert linking_number(pd, 1, 2) == 0


def test_r2_round_trip_keeps_linking():
    pd = r2_add(HOPF, 1, 3)
    assert len(pd.crossings) == 4
    back = [r2_remove(pd, e) for e in range(1, 9) if _bigon(pd, e)]
    assert back and all(linking_number(b, 1, 2) == 1 and len(b.crossings) == 2 for b in back)


def _bigon(pd, e):
    try:
        r2_remove(pd, e)
    except DiagramError:
        return False
    return True


def test_invalid_site():
    with pytest.raises(DiagramError):
        reidemeister_move(HOPF, "R3", edge=1)
    with pytest.raises(DiagramError):
        reidemeister_move(HOPF, "R1-", crossing=0)
    with pytest.raises(DiagramError):
        reidemeister_move(HOPF, "R7")


def test_random_moves_keep_diagrams_valid(rng, load):
    for name in ("hopf.pd", "whitehead.pd", "br.pd"):
        pd = load(name)
        lks = {(i, j): linking_number(pd, i, j) for i in range(1, pd.m + 1) for j in range(i + 1, pd.m + 1)}
        for _ in range(40):
            step = random_move(pd, rng)
            if step is None:
                continue
            pd = step[1]
            assert planar(pd)
            assert {k: linking_number(pd, *k) for k in lks} == lks


def test_crossing_strands():
    x = Crossing((1, 4, 2, 3), 1)
    assert x.under == (1, 2) and x.over == (3, 4)
    assert Crossing((1, 4, 2, 3), -1).over == (4, 3)
