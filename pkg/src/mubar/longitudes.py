"""Zero-framed longitudes as elements of the free group on the meridians.

Two sources:

* pure braids: pushing the top meridians down the braid and recording the
  over-arc met at each undercrossing. Exact words while they stay small,
  otherwise the same recursion in ``F/F_q``.
* PD codes: the Wirtinger relations are solved by iteration in ``F/F_q``.
  Elements of ``F/F_q`` are carried as their truncated Magnus expansions,
  which is faithful (the Magnus kernel mod degree q is exactly ``F_q``), so
  each sweep is exact arithmetic in the nilpotent quotient rather than an
  ever-growing word.

In both cases the longitude of component ``i`` is corrected to zero framing by
prepending ``x_i^{-e_i}``, ``e_i`` being its ``x_i`` exponent sum.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .diagrams import PDCode
from .series import GradedSeries, SeriesError, coefficient
from .words import BraidWord, Word


class LongitudeError(ValueError):
    pass


@dataclass(frozen=True)
class PeripheralData:
    m: int
    q: int
    longitude_words: tuple[Word, ...] | None
    framing_corrections: tuple[int, ...]
    longitude_series: tuple[GradedSeries, ...] | None = field(default=None, compare=False)

    def series(self, i: int) -> GradedSeries:
        """Magnus expansion (mod degree q) of the longitude of component ``i`` (1-based)."""
        if self.longitude_series is not None:
            return self.longitude_series[i - 1]
        cache = self.__dict__.setdefault("_series_cache", {})
        if i not in cache:
            cache[i] = GradedSeries.from_word(self.longitude_words[i - 1], self.m, self.q)
        return cache[i]

    def coefficient(self, i: int, mono) -> int:
        """Coefficient of ``X_mono`` in the longitude of component ``i``."""
        if len(mono) >= self.q:
            raise SeriesError(f"monomial of degree {len(mono)} needs q > {len(mono)} (have q={self.q})")
        if self.longitude_words is not None:
            return coefficient(self.longitude_words[i - 1], mono)
        return self.series(i).coefficient(mono)

    def exponent_sum(self, i: int, j: int) -> int:
        """Exponent sum of ``x_j`` in the longitude of component ``i``."""
        if self.longitude_words is not None:
            return self.longitude_words[i - 1].exponent_sum(j)
        return self.series(i).coefficient((j,))

    def to_json(self) -> dict:
        out = {"m": self.m, "q": self.q, "framing_corrections": list(self.framing_corrections)}
        if self.longitude_words is not None:
            out["longitudes"] = [str(w) for w in self.longitude_words]
        return out


def _framing_fix(w: Word, i: int) -> tuple[Word, int]:
    e = w.exponent_sum(i)
    return Word((-i,) * e if e > 0 else (i,) * (-e), w.m) * w, e


WORD_CAP = 50_000


class _TooLong(Exception):
    pass


def _descend(b: BraidWord, gens, one, cap: int | None = None):
    """Push the top meridians down ``b``; returns the raw longitude of each strand.

    ``gens[i]`` is the pair (x_i, x_i^-1) in whatever group arithmetic is in
    use. At ``s_k^e`` the under strand's meridian ``g`` becomes ``y^-e g y^e``
    (``y`` the over arc) and the under strand picks up the factor ``y^e``.
    """
    n = b.strands
    arcs = list(gens)
    who = list(range(n))
    raw = [one() for _ in range(n)]
    for s in b.letters:
        k = abs(s) - 1
        if s > 0:
            (g, gi), (y, yi) = arcs[k], arcs[k + 1]
            arcs[k], arcs[k + 1] = (y, yi), (yi * g * y, yi * gi * y)
            raw[who[k]] = raw[who[k]] * y
        else:
            (y, yi), (g, gi) = arcs[k], arcs[k + 1]
            arcs[k], arcs[k + 1] = (y * g * yi, y * gi * yi), (y, yi)
            raw[who[k + 1]] = raw[who[k + 1]] * yi
        who[k], who[k + 1] = who[k + 1], who[k]
        if cap is not None and sum(len(a) for a, _ in arcs) > cap:
            raise _TooLong
    return raw


def _zero_frame(lam: GradedSeries, i: int) -> tuple[GradedSeries, int]:
    e = lam.coefficient((i,))
    fix = GradedSeries.one(lam.m, lam.q)
    for _ in range(abs(e)):
        fix.right_multiply_letter(-i if e > 0 else i)
    return fix * lam, e


def braid_longitudes(b: BraidWord, q: int, exact: bool | None = None) -> PeripheralData:
    """Zero-framed longitudes of the closure of the pure braid ``b``.

    ``artin_image(b, i) = w_i x_i w_i^-1`` exhibits ``w_i`` in the meridians at
    the bottom of the braid. The longitudes returned are the same elements read
    in the top meridians, which is what the Wirtinger path on ``closure(b)``
    produces, so the two inputs agree coefficientwise and not only up to
    indeterminacy.

    Exact words are kept while the arc words stay below ``WORD_CAP`` letters
    in total (they can grow exponentially with the braid length); past that,
    or with ``exact=False``, the same computation runs in ``F/F_q``.
    ``exact=True`` insists on words.
    """
    if not b.is_pure():
        raise LongitudeError("braid is not pure; its closure has fewer components than strands")
    n = b.strands
    if exact is not False:
        gens = [(Word((i,), n), Word((-i,), n)) for i in range(1, n + 1)]
        try:
            raw = _descend(b, gens, lambda: Word((), n), None if exact else WORD_CAP)
        except _TooLong:
            pass
        else:
            words, fixes = zip(*(_framing_fix(u, i) for i, u in enumerate(raw, 1)))
            return PeripheralData(n, q, tuple(words), tuple(fixes))
    gens = [(GradedSeries.generator(i, n, q), GradedSeries.generator(i, n, q, inverse=True))
            for i in range(1, n + 1)]
    raw = _descend(b, gens, lambda: GradedSeries.one(n, q))
    series, fixes = zip(*(_zero_frame(lam, i) for i, lam in enumerate(raw, 1)))
    return PeripheralData(n, q, None, tuple(fixes), tuple(series))


def _walks(pd: PDCode):
    """Per component: base edge and the list of (edge_in, edge_out, over_edge, sign, under)."""
    under_at = {}
    over_at = {}
    for x in pd.crossings:
        a, _, c, _ = x.labels
        o_in, o_out = x.over
        under_at[a] = (c, o_in, x.sign)
        over_at[o_in] = o_out
    walks = []
    for comp in pd.components:
        start = comp.index(min(comp))
        cyc = comp[start:] + comp[:start]
        steps = []
        for e in cyc:
            if e in under_at:
                c, o, sign = under_at[e]
                steps.append((e, c, o, sign, True))
            elif e in over_at:
                steps.append((e, over_at[e], None, 0, False))
        walks.append((cyc[0], steps))
    return walks


def _sweep(pd_walks, gens, q):
    for base, steps in pd_walks:
        for e_in, e_out, over, sign, under in steps:
            if e_out == base:
                continue
            g, g_inv = gens[e_in]
            if under:
                y, y_inv = gens[over]
                if sign > 0:
                    gens[e_out] = (y_inv * g * y, y_inv * g_inv * y)
                else:
                    gens[e_out] = (y * g * y_inv, y * g_inv * y_inv)
            else:
                gens[e_out] = (g, g_inv)


def _wirtinger(pd: PDCode, q: int, sweeps: int):
    m = pd.m
    walks = _walks(pd)
    gens = {}
    for i, comp in enumerate(pd.components, 1):
        gen = (GradedSeries.generator(i, m, q), GradedSeries.generator(i, m, q, inverse=True))
        for lab in comp:
            gens[lab] = gen
    for _ in range(sweeps):
        _sweep(walks, gens, q)
    longitudes, fixes = [], []
    for i, (base, steps) in enumerate(walks, 1):
        lam = GradedSeries.one(m, q)
        for _, _, over, sign, under in steps:
            if under:
                y, y_inv = gens[over]
                lam = lam * (y if sign > 0 else y_inv)
        lam, e = _zero_frame(lam, i)
        longitudes.append(lam)
        fixes.append(e)
    return tuple(longitudes), tuple(fixes)


def wirtinger_longitudes(pd: PDCode, q: int, sweeps: int | None = None) -> PeripheralData:
    """Longitudes of a PD diagram in ``F/F_q``, meridians at each component's lowest edge label."""
    if q < 1:
        raise LongitudeError("q must be >= 1")
    longitudes, fixes = _wirtinger(pd, q, q if sweeps is None else sweeps)
    return PeripheralData(pd.m, q, None, fixes, longitudes)


def stabilization_check(link: PDCode | BraidWord, q: int) -> bool:
    """True iff q and q+1 Wirtinger sweeps agree on every coefficient below degree q."""
    if isinstance(link, BraidWord):
        return True
    a, _ = _wirtinger(link, q, q)
    b, _ = _wirtinger(link, q, q + 1)
    return all(x == y for x, y in zip(a, b))


def peripheral_data(link: PDCode | BraidWord, q: int) -> PeripheralData:
    if isinstance(link, BraidWord):
        return braid_longitudes(link, q)
    return wirtinger_longitudes(link, q)
