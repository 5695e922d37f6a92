import pytest

from mubar.diagrams import DiagramError, closure, linking_number, r1_add, to_layout, unlink, writhe
from mubar.invariants import first_nonvanishing, mu
from mubar.longitudes import peripheral_data
from mubar.operators import (
    DoublingSpec,
    SizeBudgetExceeded,
    bing_double,
    borromean,
    braid_commutator_link,
    iterated_bing_double,
    stack,
    stack_power,
    twisted_whitehead,
)
from mubar.words import BraidWord, inverse, parse_braid

HOPF = parse_braid("s1 s1", 2)


def planar(pd):
    layout, _ = to_layout(pd)
    return len(layout.faces()) == len(pd.crossings) + 2


def all_lk(pd):
    return {linking_number(pd, i, j) for i in range(1, pd.m + 1) for j in range(i + 1, pd.m + 1)}


def test_bing_double_of_unknot_is_unlink():
    assert first_nonvanishing(bing_double(unlink(1)), 6).vanishes


@pytest.mark.parametrize("variant", [0, 1, 2, 3])
def test_kinked_unknot_still_bounds(variant):
    # the framing correction has to undo the kink's writhe
    kinked = r1_add(unlink(1), 1, variant)
    assert writhe(kinked, 1) in (1, -1)
    assert first_nonvanishing(bing_double(kinked), 6).vanishes


def test_doubling_one_hopf_component_gives_borromean():
    out = bing_double(HOPF, DoublingSpec(target=1))
    assert out.m == 3 and all_lk(out) == {0}
    assert abs(mu(peripheral_data(out, 3), (1, 2, 3))) == 1


def test_bd_hopf():
    out = bing_double(HOPF)
    assert out.m == 4 and planar(out) and all_lk(out) == {0}
    f = first_nonvanishing(out, 4)
    assert f.length == 4 and abs(f.value) == 1


@pytest.mark.parametrize("clasp", [1, -1])
def test_clasp_sign_keeps_lk_zero(clasp):
    out = bing_double(HOPF, DoublingSpec(clasp=clasp))
    assert all_lk(out) == {0}
    assert first_nonvanishing(out, 4).length == 4


def test_component_order():
    # hairpins keep their slots, new loops are appended in target order
    out = bing_double(borromean(), DoublingSpec(target=2))
    comp = {e: c + 1 for e, c in out.component_of().items()}
    met = {frozenset((comp[x.labels[0]], comp[x.labels[1]])) for x in out.crossings}
    # the new loop only clasps the band that replaced component 2
    assert out.m == 4 and {c for pair in met if 4 in pair for c in pair} == {2, 4}
    assert bing_double(unlink(2), DoublingSpec(target=2)).m == 3


def test_target_out_of_range():
    with pytest.raises(DiagramError):
        bing_double(HOPF, DoublingSpec(target=3))


def test_iterated_size_cap():
    with pytest.raises(SizeBudgetExceeded):
        iterated_bing_double(borromean(), 3, max_crossings=500)
    with pytest.raises(ValueError):
        iterated_bing_double(borromean(), 0)


def test_second_bing_double_size():
    out = iterated_bing_double(borromean(), 2)
    assert out.m == 12 and planar(out) and all_lk(out) == {0}


@pytest.mark.parametrize("t", [0, 1, 2, 3, 4, 6, -2])
def test_twisted_whitehead(t):
    pd = twisted_whitehead(t)
    assert pd.m == 2 and planar(pd) and linking_number(pd, 1, 2) == 0
    P = peripheral_data(pd, 4)
    assert mu(P, (1, 1, 2, 2)) == -t and mu(P, (1, 2, 1, 2)) == 2 * t


def test_untwisted_whitehead_is_unlink():
    assert first_nonvanishing(twisted_whitehead(0), 6).vanishes


def test_stack():
    br = borromean()
    assert stack(br, BraidWord((), 3)) == br == stack(BraidWord((), 3), br)
    assert stack_power(br, 0) == BraidWord((), 3)
    assert stack_power(br, -2) == inverse(br) ** 2
    with pytest.raises(DiagramError):
        stack(br, HOPF)


def test_commutator_link_is_pure_and_unlinked():
    b = braid_commutator_link()
    assert b.is_pure()
    assert all_lk(closure(b)) == {0}
    assert first_nonvanishing(b, 5).vanishes


@pytest.mark.parametrize("target", [1, 2, 3])
def test_doubling_one_borromean_component(target):
    f = first_nonvanishing(bing_double(borromean(), DoublingSpec(target=target)), 4)
    assert f.length == 4 and abs(f.value) == 1
