"""Link operators: Bing doubling, twisted Whitehead links, braid stacking.

Bing doubling works on the diagram. Each targeted component is replaced by
its blackboard 2-cable, the cable gets full twists that cancel the
component's self-writhe (so the band is 0-framed), and at one spot the cable
is cut and closed off by a cap and a cup, both clasped by a small new loop.
The cable closes up into a band-shaped loop (the "hairpin") which keeps the
component's position; the new loop is appended after all old components, in
order of the targets.

The t-twisted Whitehead link is the same construction on a round unknot
with t full twists left in the band instead of 0.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import count

from .diagrams import DiagramError, Layout, PDCode, closure, linking_number, orient, to_layout, writhe
from .words import BraidWord, conjugate, braid_commutator, inverse, parse_braid

BORROMEAN = "s2 s1^-1 s2 s1^-1 s2 s1^-1"
DEFAULT_MAX_CROSSINGS = 20_000


class SizeBudgetExceeded(RuntimeError):
    pass


@dataclass(frozen=True)
class DoublingSpec:
    """``target``: a 1-based component or None for all of them.

    ``clasp`` mirrors the clasp tile when -1. ``twists`` adds full twists to
    the band on top of the framing correction.
    """

    target: int | None = None
    clasp: int = 1
    twists: int = 0

    def targets(self, m: int) -> list[int]:
        if self.target is None:
            return list(range(1, m + 1))
        if not 1 <= self.target <= m:
            raise DiagramError(f"doubling target {self.target} out of range 1..{m}")
        return [self.target]


def borromean() -> BraidWord:
    return parse_braid(BORROMEAN, 3)


def braid_commutator_link() -> BraidWord:
    """``BR (s1 BR s1^-1) BR^-1 (s1 BR s1^-1)^-1``, a pure 3-strand braid."""
    br = borromean()
    return braid_commutator(br, conjugate(br, BraidWord((1,), 3)))


def stack(a: BraidWord, b: BraidWord) -> BraidWord:
    """``a`` on top of ``b``."""
    if a.strands != b.strands:
        raise DiagramError(f"cannot stack {a.strands}- and {b.strands}-strand braids")
    return a * b


def stack_power(b: BraidWord, k: int) -> BraidWord:
    if k < 0:
        return stack_power(inverse(b), -k)
    return BraidWord((), b.strands) if k == 0 else b ** k


# -- Bing doubling -------------------------------------------------------------

def _ends(x) -> dict[int, str]:
    """For each edge at crossing ``x``: 'h' if it ends here, 't' if it starts here."""
    a, b, c, d = x.labels
    ends = {0: "h", 2: "t"}
    ends[3], ends[1] = ("h", "t") if x.sign > 0 else ("t", "h")
    return {k: ends[k] for k in range(4)}


def _cable_crossing(layout: Layout, x, comp_of, targets, lab, fresh) -> list[int]:
    """Cable one crossing; returns the ids of the crossings it became.

    Labels of untargeted strands keep their slot index.
    """
    a, b, c, d = x.labels
    end = _ends(x)
    under_t = comp_of[a] in targets
    over_t = comp_of[b] in targets
    # under-strand runs south -> north, so its left copy is the west one;
    # the over-strand runs west -> east when sign > 0, its left copy is north
    north, south = ("L", "R") if x.sign > 0 else ("R", "L")
    if under_t and over_t:
        mw, me, ms, mn = (next(fresh) for _ in range(4))
        slots = [[lab(a, "L", end[0]), ms, mw, lab(d, south, end[3])],
                 [lab(a, "R", end[0]), lab(b, south, end[1]), me, ms],
                 [mw, mn, lab(c, "L", end[2]), lab(d, north, end[3])],
                 [me, lab(b, north, end[1]), lab(c, "R", end[2]), mn]]
    elif under_t:
        mid = next(fresh)
        slots = [[lab(a, "L", end[0]), mid, lab(c, "L", end[2]), d],
                 [lab(a, "R", end[0]), b, lab(c, "R", end[2]), mid]]
    elif over_t:
        mid = next(fresh)
        slots = [[a, lab(b, south, end[1]), mid, lab(d, south, end[3])],
                 [mid, lab(b, north, end[1]), c, lab(d, north, end[3])]]
    else:
        slots = [[a, b, c, d]]
    return [layout.add(s) for s in slots]


def _twist(layout: Layout, west, east, full_twists: int, fresh):
    """Full twists of two parallel strands heading north; returns the top ends."""
    for _ in range(2 * abs(full_twists)):
        nw, ne = next(fresh), next(fresh)
        if full_twists > 0:  # SW -> NE over: positive for parallel strands
            layout.add([east, ne, nw, west])
        else:
            layout.add([west, east, ne, nw])
        west, east = nw, ne
    return west, east


def _tile(layout: Layout, p1, p3, q1, q3, fresh, flip_cup: bool, mirror: bool) -> tuple[list[int], object]:
    """Cap ``p1 - p2 - p3`` below, cup ``q1 - q2 - q3`` above, loop ``b`` clasping both."""
    p2, q2 = next(fresh), next(fresh)
    b1, b2, b3, b4 = (next(fresh) for _ in range(4))
    cap = [[p1, b4, p2, b1], [b4, p3, b3, p2]]
    cup = [[q2, b2, q1, b1], [b2, q2, b3, q3]] if flip_cup else [[b1, q2, b2, q1], [q2, b3, q3, b2]]
    tiles = cap + cup
    if mirror:
        tiles = [s[1:] + s[:1] for s in tiles]
    return [layout.add(s) for s in tiles], b1


def _estimate(pd: PDCode, targets: list[int], extra: int) -> int:
    comp_of = pd.component_of()
    n = 0
    for x in pd.crossings:
        k = (comp_of[x.labels[0]] + 1 in targets) + (comp_of[x.labels[1]] + 1 in targets)
        n += (1, 2, 4)[k]
    for t in targets:
        n += 4 + 2 * abs(extra - writhe(pd, t)) + 2
    return n


def _double(pd: PDCode, spec: DoublingSpec, flips: dict[int, bool]) -> PDCode:
    m = pd.m
    targets = spec.targets(m)
    comp_of = {e: c + 1 for e, c in pd.component_of().items()}
    used = {lab for x in pd.crossings for lab in x.labels}
    cut = {t: min(pd.components[t - 1]) for t in targets}
    # on a crossingless circle both ends of the cut edge are the same lane
    cut_edges = {e for e in cut.values() if e in used}

    def lab(e, lane, end):
        return (e, lane, end) if e in cut_edges else (e, lane)

    layout = Layout()
    fresh = (("n", i) for i in count())
    cabled = [_cable_crossing(layout, x, comp_of, set(targets), lab, fresh) for x in pd.crossings]
    old, head = to_layout(pd)
    old_index = {cid: k for k, cid in enumerate(old.crossings)}
    loops, cups = [], {}
    for t in targets:
        e0 = cut[t]
        w, e = _twist(layout, lab(e0, "L", "t"), lab(e0, "R", "t"), spec.twists - writhe(pd, t), fresh)
        ids, b1 = _tile(layout, w, e, lab(e0, "L", "h"), lab(e0, "R", "h"), fresh, flips.get(t, False), spec.clasp < 0)
        q1 = lab(e0, "L", "h")
        cups[t] = next((cid, layout.crossings[cid].index(q1)) for cid in ids[2:] if q1 in layout.crossings[cid])
        loops.append((b1, ids[2]))
    occ = layout.occurrences()
    seeds = []
    for i, comp in enumerate(pd.components, 1):
        if i in targets:
            # the left lane leaves the cup and runs forward along the component
            lab0 = lab(cut[i], "L", "h")
            seeds.append((lab0, next(dt for dt in occ[lab0] if dt != cups[i])))
        elif comp[0] not in head:
            seeds.append((comp[0], None))
        else:
            cid, k = head[comp[0]]
            new = next(n for n in cabled[old_index[cid]] if layout.crossings[n][k] == comp[0])
            seeds.append((comp[0], (new, k)))
    for b1, cid in loops:
        seeds.append((b1, (cid, layout.crossings[cid].index(b1))))
    return orient(layout, seeds)


def bing_double(link: PDCode | BraidWord, spec: DoublingSpec | None = None,
                max_crossings: int = DEFAULT_MAX_CROSSINGS) -> PDCode:
    """Bing double the targeted components (all by default)."""
    spec = spec or DoublingSpec()
    pd = closure(link) if isinstance(link, BraidWord) else link
    targets = spec.targets(pd.m)
    size = _estimate(pd, targets, spec.twists)
    if size > max_crossings:
        raise SizeBudgetExceeded(f"Bing double would have about {size} crossings, cap is {max_crossings}")
    flips: dict[int, bool] = {}
    out = _double(pd, spec, flips)
    # the new loop must clasp cap and cup with opposite signs; fix the cup if not
    for rank, t in enumerate(targets):
        new = pd.m + rank + 1
        if linking_number(out, t, new) != 0:
            flips[t] = True
    if flips:
        out = _double(pd, spec, flips)
    for rank, t in enumerate(targets):
        if linking_number(out, t, pd.m + rank + 1) != 0:
            raise DiagramError("clasp tile does not bound; linking number nonzero")
    return out


def iterated_bing_double(link: PDCode | BraidWord, k: int, max_crossings: int = DEFAULT_MAX_CROSSINGS) -> PDCode:
    if k < 1:
        raise ValueError("k must be >= 1")
    pd = closure(link) if isinstance(link, BraidWord) else link
    for _ in range(k):
        pd = bing_double(pd, DoublingSpec(), max_crossings)
    return pd


def twisted_whitehead(t: int, clasp: int = 1) -> PDCode:
    """Two-component link: a band with ``t`` full twists and a loop through both ends.

    ``t = 0`` is the unlink, ``t = 1`` the Whitehead link.
    """
    return bing_double(PDCode((), ((1,),)), DoublingSpec(target=1, clasp=clasp, twists=t))
