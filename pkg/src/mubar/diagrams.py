"""Planar diagram (PD) codes for oriented, ordered links.

Convention: a crossing is ``(a, b, c, d, sign)`` with the four edge labels in
counterclockwise order starting at the incoming under-edge, so the
under-strand runs ``a -> c``. The over-strand runs ``d -> b`` on a positive
crossing and ``b -> d`` on a negative one. Components list their edge labels
in traversal order; a component without crossings is a single label that
appears in no crossing.

Diagram surgery (closures, cabling, Reidemeister moves) is done on an
unoriented layout: each crossing is four labels in counterclockwise order
with the under-strand on slots 0 and 2. ``orient`` turns such a layout back
into a PD code, given one oriented edge per component.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from itertools import count
from typing import Hashable, Iterable, Sequence

from .words import BraidWord


class DiagramError(ValueError):
    pass


@dataclass(frozen=True)
class Crossing:
    labels: tuple[int, int, int, int]
    sign: int

    @property
    def under(self) -> tuple[int, int]:
        a, _, c, _ = self.labels
        return a, c

    @property
    def over(self) -> tuple[int, int]:
        """(incoming, outgoing) over-edges."""
        _, b, _, d = self.labels
        return (d, b) if self.sign > 0 else (b, d)


@dataclass(frozen=True)
class PDCode:
    crossings: tuple[Crossing, ...]
    components: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        object.__setattr__(self, "crossings", tuple(
            c if isinstance(c, Crossing) else Crossing(tuple(c[:4]), int(c[4])) for c in self.crossings))
        object.__setattr__(self, "components", tuple(tuple(int(x) for x in comp) for comp in self.components))
        validate(self)

    @property
    def m(self) -> int:
        return len(self.components)

    def component_of(self) -> dict[int, int]:
        """Edge label -> 0-based component index."""
        return {lab: i for i, comp in enumerate(self.components) for lab in comp}

    def next_edge(self) -> dict[int, int]:
        return {comp[j]: comp[(j + 1) % len(comp)] for comp in self.components for j in range(len(comp))}


def validate(pd: PDCode) -> None:
    seen: dict[int, int] = defaultdict(int)
    for n, x in enumerate(pd.crossings):
        if len(x.labels) != 4:
            raise DiagramError(f"crossing {n}: expected 4 labels")
        if x.sign not in (1, -1):
            raise DiagramError(f"crossing {n}: sign must be +1 or -1")
        for lab in x.labels:
            seen[lab] += 1
    in_comp: dict[int, int] = defaultdict(int)
    for comp in pd.components:
        if not comp:
            raise DiagramError("empty component")
        for lab in comp:
            in_comp[lab] += 1
    for lab, k in in_comp.items():
        if k != 1:
            raise DiagramError(f"arc multiplicity: label {lab} listed {k} times in components")
    for lab, k in seen.items():
        if k != 2:
            raise DiagramError(f"arc multiplicity: label {lab} appears {k} times in crossings")
        if lab not in in_comp:
            raise DiagramError(f"label {lab} belongs to no component")
    for i, comp in enumerate(pd.components):
        free = [lab for lab in comp if lab not in seen]
        if free and len(comp) != 1:
            raise DiagramError(f"component {i + 1}: label {free[0]} is not used by any crossing")
    nxt = pd.next_edge()
    for n, x in enumerate(pd.crossings):
        a, b, c, d = x.labels
        o_in, o_out = x.over
        if nxt[a] != c or nxt[o_in] != o_out:
            raise DiagramError(f"orientation inconsistency at crossing {n} {x.labels} sign {x.sign:+d}")


# -- unoriented layouts ------------------------------------------------------

Dart = tuple[int, int]  # (crossing id, slot)


class Layout:
    """Mutable unoriented diagram used while building or rewriting PD codes."""

    def __init__(self):
        self.crossings: dict[int, list[Hashable]] = {}
        self._ids = count()

    def add(self, slots: Sequence[Hashable]) -> int:
        cid = next(self._ids)
        self.crossings[cid] = list(slots)
        return cid

    def occurrences(self) -> dict[Hashable, list[Dart]]:
        occ: dict[Hashable, list[Dart]] = defaultdict(list)
        for cid, slots in self.crossings.items():
            for k, lab in enumerate(slots):
                occ[lab].append((cid, k))
        return occ

    def rename(self, mapping: dict) -> None:
        for slots in self.crossings.values():
            for k, lab in enumerate(slots):
                slots[k] = _resolve(mapping, lab)

    def faces(self) -> list[list[Dart]]:
        """Faces as dart cycles, each traversed with the face on the left."""
        occ = self.occurrences()
        other = {}
        for lab, darts in occ.items():
            if len(darts) == 2:
                other[darts[0]], other[darts[1]] = darts[1], darts[0]
        seen = set()
        faces = []
        for start in sorted(other):
            if start in seen:
                continue
            face = []
            d = start
            while d not in seen:
                seen.add(d)
                face.append(d)
                x, k = other[d]
                d = (x, (k - 1) % 4)
            faces.append(face)
        return faces

    def label(self, dart: Dart) -> Hashable:
        return self.crossings[dart[0]][dart[1]]


def _resolve(mapping: dict, lab):
    while lab in mapping:
        lab = mapping[lab]
    return lab


def orient(layout: Layout, seeds: Sequence[tuple[Hashable, Dart | None]]) -> PDCode:
    """Orient ``layout`` and relabel edges 1..N component by component.

    ``seeds[i]`` is ``(label, head_dart)`` for component ``i``: the edge that
    becomes the lowest label of the component, travelling into ``head_dart``.
    ``head_dart`` is None for a component without crossings.
    """
    occ = layout.occurrences()
    head: dict[Hashable, Dart] = {}
    new_label: dict[Hashable, int] = {}
    components = []
    fresh = count(1)
    for lab, hd in seeds:
        if hd is None:
            if lab in occ:
                raise DiagramError(f"seed {lab!r} has crossings but no head dart")
            new_label[lab] = next(fresh)
            components.append((new_label[lab],))
            continue
        if layout.label(hd) != lab:
            raise DiagramError(f"seed dart {hd} does not carry label {lab!r}")
        comp = []
        cur, dart = lab, hd
        while True:
            if cur in new_label:
                raise DiagramError(f"edge {cur!r} reached twice while orienting")
            new_label[cur] = next(fresh)
            head[cur] = dart
            comp.append(new_label[cur])
            x, k = dart
            out = (x, (k + 2) % 4)
            nxt = layout.label(out)
            if nxt == lab:
                break
            darts = occ[nxt]
            dart = darts[1] if darts[0] == out else darts[0]
            cur = nxt
        components.append(tuple(comp))
    missing = [lab for lab in occ if lab not in new_label]
    if missing:
        raise DiagramError(f"edges not reached from any seed: {missing[:5]}")
    crossings = []
    for cid in sorted(layout.crossings):
        slots = layout.crossings[cid]
        s = 0 if head[slots[0]] == (cid, 0) else 2
        if head[slots[s]] != (cid, s):
            raise DiagramError(f"under-strand at crossing {cid} is not traversed through it")
        rot = slots[s:] + slots[:s]
        sign = 1 if head[rot[3]] == (cid, (s + 3) % 4) else -1
        crossings.append(Crossing(tuple(new_label[lab] for lab in rot), sign))
    return PDCode(tuple(crossings), tuple(components))


def to_layout(pd: PDCode) -> tuple[Layout, dict[int, Dart]]:
    """Unoriented layout of ``pd`` plus each edge's head dart."""
    layout = Layout()
    head: dict[int, Dart] = {}
    for x in pd.crossings:
        cid = layout.add(x.labels)
        head[x.labels[0]] = (cid, 0)
        if x.sign > 0:
            head[x.labels[3]] = (cid, 3)
        else:
            head[x.labels[1]] = (cid, 1)
    return layout, head


def _reseed(pd: PDCode, layout: Layout, old_head: dict[int, Dart], old_occ: dict,
            touched: set[int], merged: dict | None = None) -> list[tuple[Hashable, Dart | None]]:
    """Pick one oriented edge per component that survives a local rewrite."""
    occ = layout.occurrences()
    merged = merged or {}
    seeds = []
    for comp in pd.components:
        seed = None
        for lab in comp:
            if lab in merged or lab not in occ or lab not in old_head:
                continue
            hd = old_head[lab]
            darts = occ[lab]
            if hd[0] not in touched and hd in darts:
                seed = (lab, hd)
                break
            tail = next(d for d in old_occ[lab] if d != hd)
            if tail[0] not in touched and tail in darts and len(darts) == 2:
                seed = (lab, darts[1] if darts[0] == tail else darts[0])
                break
        if seed is None:
            alive = [_resolve(merged, lab) for lab in comp]
            alive = [lab for lab in alive if lab not in occ]
            if not alive:
                raise DiagramError("could not re-orient a component after the move")
            seed = (alive[0], None)
        seeds.append(seed)
    return seeds


# -- constructors ------------------------------------------------------------

def unlink(m: int) -> PDCode:
    return PDCode((), tuple((i,) for i in range(1, m + 1)))


def closure(b: BraidWord) -> PDCode:
    """PD code of the closure of a pure braid, strands oriented top to bottom.

    ``s_k`` is a positive crossing. Component ``i`` is strand ``i`` and its
    lowest label is the edge entering the top of the braid, so the Wirtinger
    meridian of that edge is the braid-group generator ``x_i``.
    """
    if not b.is_pure():
        raise DiagramError("closure needs a pure braid (permutation is not the identity)")
    layout = Layout()
    fresh = count(b.strands + 1)
    cur = list(range(1, b.strands + 1))
    head: dict[int, Dart] = {}
    for a in b.letters:
        k = abs(a) - 1
        left, right = cur[k], cur[k + 1]
        out_l, out_r = next(fresh), next(fresh)
        if a > 0:  # over-strand NE -> SW, under NW -> SE
            cid = layout.add([left, out_l, out_r, right])
            head[left], head[right] = (cid, 0), (cid, 3)
        else:  # over NW -> SE, under NE -> SW
            cid = layout.add([right, left, out_l, out_r])
            head[right], head[left] = (cid, 0), (cid, 1)
        cur[k], cur[k + 1] = out_l, out_r
    merge = {cur[p]: p + 1 for p in range(b.strands) if cur[p] != p + 1}
    layout.rename(merge)
    seeds = [(i, head.get(i)) for i in range(1, b.strands + 1)]
    return orient(layout, seeds)


def linking_number(link: PDCode | BraidWord, i: int, j: int) -> int:
    """Linking number of components ``i`` and ``j`` (1-based)."""
    if isinstance(link, BraidWord):
        s = link.strands
        if not (1 <= i <= s and 1 <= j <= s):
            raise DiagramError("component index out of range")
        if i == j:
            raise DiagramError("linking number needs two distinct components")
        at = list(range(1, s + 1))
        total = 0
        for a in link.letters:
            k = abs(a) - 1
            if {at[k], at[k + 1]} == {i, j}:
                total += 1 if a > 0 else -1
            at[k], at[k + 1] = at[k + 1], at[k]
        if total % 2:
            raise DiagramError("odd crossing count between components; braid is not pure")
        return total // 2
    m = link.m
    if not (1 <= i <= m and 1 <= j <= m):
        raise DiagramError("component index out of range")
    if i == j:
        raise DiagramError("linking number needs two distinct components")
    comp = link.component_of()
    total = 0
    for x in link.crossings:
        pair = {comp[x.labels[0]] + 1, comp[x.labels[1]] + 1}
        if pair == {i, j}:
            total += x.sign
    return total // 2


def writhe(pd: PDCode, component: int) -> int:
    """Sum of signs of the self-crossings of one component (1-based)."""
    comp = pd.component_of()
    return sum(x.sign for x in pd.crossings
               if comp[x.labels[0]] + 1 == component and comp[x.labels[1]] + 1 == component)


def mirror(pd: PDCode) -> PDCode:
    """Mirror image: every crossing changes from over to under."""
    crossings = []
    for x in pd.crossings:
        a, b, c, d = x.labels
        # the old over-strand becomes the under-strand; start at its incoming edge
        if x.sign > 0:
            crossings.append(Crossing((d, a, b, c), -1))
        else:
            crossings.append(Crossing((b, c, d, a), 1))
    return PDCode(tuple(crossings), pd.components)


def reverse_component(pd: PDCode, component: int) -> PDCode:
    """Reverse the orientation of one component (1-based)."""
    layout, head = to_layout(pd)
    occ = layout.occurrences()
    seeds = []
    for i, comp in enumerate(pd.components, 1):
        lab = comp[0]
        if lab not in occ:
            seeds.append((lab, None))
            continue
        hd = head[lab]
        if i == component:
            darts = occ[lab]
            hd = darts[1] if darts[0] == hd else darts[0]
        seeds.append((lab, hd))
    return orient(layout, seeds)


def split_components(pd: PDCode) -> list[set[int]]:
    """Groups of 0-based component indices that share crossings."""
    comp = pd.component_of()
    parent = list(range(pd.m))

    def find(a):
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    for x in pd.crossings:
        ra, rb = find(comp[x.labels[0]]), find(comp[x.labels[1]])
        parent[ra] = rb
    groups = defaultdict(set)
    for i in range(pd.m):
        groups[find(i)].add(i)
    return sorted(groups.values(), key=min)


# -- Reidemeister moves ------------------------------------------------------

_KINKS = (
    ("a", "b", "l", "l"),
    ("a", "l", "l", "b"),
    ("b", "a", "l", "l"),
    ("l", "a", "b", "l"),
)


def r1_add(pd: PDCode, edge: int, variant: int = 0) -> PDCode:
    """Insert a curl on ``edge``; ``variant`` 0..3 picks sign and side."""
    if not 0 <= variant < 4:
        raise DiagramError("R1 variant must be 0..3")
    layout, head = to_layout(pd)
    occ = layout.occurrences()
    if edge not in pd.component_of():
        raise DiagramError(f"R1: no edge {edge}")
    new_b, new_l = ("r1b", edge), ("r1l", edge)
    sub = {"a": edge, "b": new_b, "l": new_l}
    if edge in occ:
        hd = head[edge]
        layout.crossings[hd[0]][hd[1]] = new_b
        cid = layout.add([sub[s] for s in _KINKS[variant]])
    else:  # curl on a crossingless circle: both ends of the split edge meet
        sub["b"] = edge
        cid = layout.add([sub[s] for s in _KINKS[variant]])
    slot_a = _KINKS[variant].index("a")
    new_head = dict(head)
    new_head[edge] = (cid, slot_a)
    seeds = []
    for comp in pd.components:
        lab = comp[0]
        seeds.append((lab, new_head[lab]) if lab in new_head else (lab, (cid, slot_a)) if lab == edge else (lab, None))
    return orient(layout, seeds)


def r1_remove(pd: PDCode, crossing: int) -> PDCode:
    """Remove the curl at crossing index ``crossing`` (0-based)."""
    if not 0 <= crossing < len(pd.crossings):
        raise DiagramError(f"R1: no crossing {crossing}")
    layout, head = to_layout(pd)
    old_occ = layout.occurrences()
    cid = crossing
    slots = layout.crossings[cid]
    for k in range(4):
        if slots[k] == slots[(k + 1) % 4]:
            loop = slots[k]
            u, v = slots[(k + 2) % 4], slots[(k + 3) % 4]
            break
    else:
        raise DiagramError(f"R1: crossing {crossing} is not a curl")
    del layout.crossings[cid]
    merged = {}
    if u != v:
        merged[v] = u
        layout.rename(merged)
    merged[loop] = u
    return orient(layout, _reseed(pd, layout, head, old_occ, {cid}, merged))


def _face_with(layout: Layout, edges: Iterable[int]) -> list[Dart] | None:
    edges = set(edges)
    for face in layout.faces():
        labs = {layout.label(d) for d in face}
        if edges <= labs:
            return face
    return None


def r2_add(pd: PDCode, over_edge: int, under_edge: int) -> PDCode:
    """Push ``over_edge`` across ``under_edge`` inside a face they share."""
    if over_edge == under_edge:
        raise DiagramError("R2 needs two different edges")
    comp = pd.component_of()
    for e in (over_edge, under_edge):
        if e not in comp:
            raise DiagramError(f"R2: no edge {e}")
    layout, head = to_layout(pd)
    occ = layout.occurrences()
    free_e, free_f = over_edge not in occ, under_edge not in occ
    e, f = over_edge, under_edge
    if free_e or free_f:
        # a crossingless circle borders every face of the piece it sits in
        if not free_e and not free_f:
            raise AssertionError
        de = df = None
        if not free_e:
            de = occ[e][0]
        if not free_f:
            df = occ[f][0]
    else:
        face = _face_with(layout, (e, f))
        if face is None:
            raise DiagramError(f"R2: edges {e} and {f} do not share a face")
        de = next(d for d in face if layout.label(d) == e)
        df = next(d for d in face if layout.label(d) == f)
    e2, e3, f2, f3 = ("r2", e, 2), ("r2", e, 3), ("r2", f, 2), ("r2", f, 3)
    # far ends of e and f (seen from the face) get the new labels
    if de is not None:
        far = occ[e][1] if occ[e][0] == de else occ[e][0]
        layout.crossings[far[0]][far[1]] = e3
    else:
        e3 = e
    if df is not None:
        far = occ[f][1] if occ[f][0] == df else occ[f][0]
        layout.crossings[far[0]][far[1]] = f3
    else:
        f3 = f
    p = layout.add([f2, e2, f3, e])
    q = layout.add([f, e2, f2, e3])
    seeds = []
    occ = layout.occurrences()
    for comp_labels in pd.components:
        lab = comp_labels[0]
        if lab in head:
            hd = head[lab]
            if layout.label(hd) == lab:
                seeds.append((lab, hd))
            else:  # the head end was relabelled: orient via the tail instead
                darts = occ[lab]
                tail = next(d for d in darts if d != hd)
                other = [d for d in darts if d != tail]
                seeds.append((lab, other[0]))
        elif lab in occ:  # was crossingless; pick a direction
            seeds.append((lab, occ[lab][0]))
        else:
            seeds.append((lab, None))
    return orient(layout, seeds)


def r2_remove(pd: PDCode, edge: int) -> PDCode:
    """Undo a bigon that has ``edge`` as one side."""
    layout, head = to_layout(pd)
    old_occ = layout.occurrences()
    for face in layout.faces():
        if len(face) != 2 or edge not in {layout.label(d) for d in face}:
            continue
        (p, kp), (q, kq) = face
        if p == q:
            continue
        s1_under_p = kp % 2 == 0
        s1_under_q = (kq + 1) % 2 == 0
        if s1_under_p != s1_under_q:
            continue
        sp, sq = layout.crossings[p], layout.crossings[q]
        u1, v1 = sp[(kp + 2) % 4], sq[(kq + 3) % 4]
        u2, v2 = sp[(kp + 3) % 4], sq[(kq + 2) % 4]
        inner = {sp[kp], sp[(kp + 1) % 4]}
        del layout.crossings[p]
        del layout.crossings[q]
        merged = {}
        for u, v in ((u1, v1), (u2, v2)):
            u, v = _resolve(merged, u), _resolve(merged, v)
            if u != v:
                merged[v] = u
        for lab in inner:
            merged.setdefault(lab, _resolve(merged, u1) if lab == sp[kp] else _resolve(merged, u2))
        layout.rename(merged)
        return orient(layout, _reseed(pd, layout, head, old_occ, {p, q}, merged))
    raise DiagramError(f"R2: edge {edge} does not bound a removable bigon")


def r3(pd: PDCode, edge: int) -> PDCode:
    """Slide a strand across the crossing opposite it in a triangle bounded by ``edge``."""
    layout, head = to_layout(pd)
    old_occ = layout.occurrences()
    for face in layout.faces():
        if len(face) != 3 or edge not in {layout.label(d) for d in face}:
            continue
        (x, kx), (y, ky), (z, kz) = face
        if len({x, y, z}) != 3:
            continue
        X, Y, Z = (layout.crossings[c] for c in (x, y, z))
        p = [X[(kx + 2) % 4], X[(kx + 3) % 4], Y[(ky + 2) % 4], Y[(ky + 3) % 4],
             Z[(kz + 2) % 4], Z[(kz + 3) % 4]]
        # strands: L0 = side XY, L1 = side ZX, L2 = side YZ; under on slot parity
        lower = {
            frozenset((0, 1)): 0 if kx % 2 == 0 else 1,
            frozenset((0, 2)): 2 if ky % 2 == 0 else 0,
            frozenset((1, 2)): 1 if kz % 2 == 0 else 2,
        }
        # a cyclic over/under pattern admits no move
        beats = {s: sum(1 for pair, lo in lower.items() if s in pair and lo != s) for s in range(3)}
        if sorted(beats.values()) != [0, 1, 2]:
            continue
        t1, t3, t2 = ("r3", edge, 1), ("r3", edge, 3), ("r3", edge, 2)
        new = [
            ([t1, t3, p[3], p[4]], (0, 1)),  # strands on these slots: L0, L1
            ([t2, t1, p[5], p[0]], (2, 0)),
            ([t3, t2, p[1], p[2]], (1, 2)),
        ]
        for c in (x, y, z):
            del layout.crossings[c]
        for slots, (s_first, s_second) in new:
            lo = lower[frozenset((s_first, s_second))]
            if lo != s_first:
                slots = slots[1:] + slots[:1]
            layout.add(slots)
        return orient(layout, _reseed(pd, layout, head, old_occ, {x, y, z}))
    raise DiagramError(f"R3: edge {edge} does not bound a triangle admitting a move")


def reidemeister_move(pd: PDCode, move: str, **site) -> PDCode:
    """Dispatch ``move`` in {"R1+", "R1-", "R2+", "R2-", "R3"} with its site arguments."""
    moves = {"R1+": r1_add, "R1-": r1_remove, "R2+": r2_add, "R2-": r2_remove, "R3": r3}
    if move not in moves:
        raise DiagramError(f"unknown move {move!r}")
    return moves[move](pd, **site)
