"""Truncated noncommutative power series and the Magnus expansion.

A series lives in Z<<X_1..X_m>> modulo all monomials of degree >= q. Two
representations are provided:

``TruncatedSeries``
    sparse, immutable, keyed by index tuples; the public value type.
``GradedSeries``
    dense, one flat ``numpy`` object array per degree (row-major in the
    variable indices). Used for bulk work: products inside the Wirtinger
    iteration and reading off every coefficient of a longitude at once.

Coefficients are Python integers in both, so nothing overflows.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Mapping, Sequence

import numpy as np

from .words import Word

Monomial = tuple[int, ...]

# Above this many (letters x degree) the scalar DP is preferred to materialising a series.
DP_THRESHOLD = 2000


class SeriesError(ValueError):
    pass


@dataclass(frozen=True)
class TruncatedSeries:
    m: int
    q: int
    terms: Mapping[Monomial, int] = field(default_factory=dict)

    def __post_init__(self):
        if self.q < 1:
            raise SeriesError("truncation degree q must be >= 1")
        clean = {}
        for mono, c in self.terms.items():
            mono = tuple(mono)
            if len(mono) >= self.q:
                raise SeriesError(f"monomial {mono} has degree >= q={self.q}")
            if any(not 1 <= i <= self.m for i in mono):
                raise SeriesError(f"monomial {mono} uses a variable outside 1..{self.m}")
            if c:
                clean[mono] = int(c)
        object.__setattr__(self, "terms", clean)

    @classmethod
    def one(cls, m: int, q: int) -> TruncatedSeries:
        return cls(m, q, {(): 1})

    def __getitem__(self, mono: Sequence[int]) -> int:
        return self.terms.get(tuple(mono), 0)

    def __eq__(self, other):
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return (self.m, self.q) == (other.m, other.q) and self.terms == other.terms

    def __hash__(self):
        return hash((self.m, self.q, frozenset(self.terms.items())))

    def __mul__(self, other: TruncatedSeries) -> TruncatedSeries:
        return multiply(self, other)

    def __sub__(self, other: TruncatedSeries) -> TruncatedSeries:
        _check_compatible(self, other)
        out = dict(self.terms)
        for mono, c in other.terms.items():
            out[mono] = out.get(mono, 0) - c
        return TruncatedSeries(self.m, self.q, out)

    def degree_part(self, d: int) -> dict[Monomial, int]:
        return {mono: c for mono, c in self.terms.items() if len(mono) == d}

    def min_positive_degree(self) -> int | None:
        degs = [len(mono) for mono in self.terms if mono]
        return min(degs) if degs else None

    def __str__(self) -> str:
        return format_series(self)


def _check_compatible(a: TruncatedSeries, b: TruncatedSeries) -> None:
    if a.m != b.m or a.q != b.q:
        raise SeriesError(f"incompatible series (m={a.m}, q={a.q}) vs (m={b.m}, q={b.q})")


def multiply(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    _check_compatible(a, b)
    q = a.q
    out: dict[Monomial, int] = {}
    by_degree: dict[int, list[tuple[Monomial, int]]] = {}
    for mono, c in b.terms.items():
        by_degree.setdefault(len(mono), []).append((mono, c))
    for ma, ca in a.terms.items():
        room = q - len(ma)
        for d, items in by_degree.items():
            if d >= room:
                continue
            for mb, cb in items:
                key = ma + mb
                out[key] = out.get(key, 0) + ca * cb
    return TruncatedSeries(a.m, q, out)


def _times_letter(terms: dict[Monomial, int], a: int, q: int) -> dict[Monomial, int]:
    """Right-multiply by the Magnus image of one letter."""
    i = abs(a)
    out = dict(terms)
    if a > 0:
        for mono, c in terms.items():
            if len(mono) < q - 1:
                key = mono + (i,)
                out[key] = out.get(key, 0) + c
    else:
        for mono, c in terms.items():
            sign = -1
            for n in range(1, q - len(mono)):
                key = mono + (i,) * n
                out[key] = out.get(key, 0) + sign * c
                sign = -sign
    return {k: v for k, v in out.items() if v}


def magnus_expand(w: Word, q: int) -> TruncatedSeries:
    """Magnus image of ``w`` with every term of degree >= q discarded."""
    if q < 1:
        raise SeriesError("q must be >= 1")
    terms: dict[Monomial, int] = {(): 1}
    for a in w.letters:
        terms = _times_letter(terms, a, q)
    return TruncatedSeries(w.m, q, terms)


def coefficient(w: Word | Sequence[int], mono: Sequence[int]) -> int:
    """Coefficient of ``X_{mono}`` in the Magnus expansion of ``w``.

    Dynamic programming over prefixes: ``c[p]`` is the coefficient of the
    first ``p`` variables of ``mono`` in the expansion of the letters read so
    far. A letter ``x_i`` either contributes 1 or consumes one ``X_i``; a letter
    ``x_i^-1`` consumes a run of ``n`` copies of ``X_i`` with sign ``(-1)^n``.
    """
    letters = w.letters if isinstance(w, Word) else tuple(w)
    mono = tuple(mono)
    k = len(mono)
    c = [1] + [0] * k
    # run[p]: length of the run of equal variables ending at mono[p-1]
    for a in letters:
        i = abs(a)
        if a > 0:
            for p in range(k, 0, -1):
                if mono[p - 1] == i and c[p - 1]:
                    c[p] += c[p - 1]
        else:
            # new[p] = c[p] + sum_{n>=1, mono[p-n:p] all i} (-1)^n c[p-n]
            # Computed via the recurrence t[p] = -(c[p-1] + t[p-1]) on runs of i.
            new = c[:]
            t = 0
            for p in range(1, k + 1):
                if mono[p - 1] == i:
                    t = -(c[p - 1] + t)
                    new[p] += t
                else:
                    t = 0
            c = new
    return c[k]


def lcs_residue_degree(w: Word, q: int | None = None) -> int | None:
    """Smallest positive degree carrying a nonzero Magnus coefficient of ``w``.

    A reduced nontrivial word lies in ``F_d`` but not ``F_{d+1}`` for this
    ``d``. Returns None when nothing below degree ``q`` is nonzero
    (``q`` defaults to ``len(w) + 1``).
    """
    if q is None:
        q = len(w) + 1
    terms: dict[Monomial, int] = {(): 1}
    for a in w.letters:
        terms = _times_letter(terms, a, q)
    degs = [len(mono) for mono in terms if mono]
    return min(degs) if degs else None


def format_series(s: TruncatedSeries) -> str:
    """``1 + 2·X1X2 − 1·X2X1``: graded, lexicographic within a degree."""
    parts: list[str] = []
    for mono in sorted(s.terms, key=lambda t: (len(t), t)):
        c = s.terms[mono]
        body = "".join(f"X{i}" for i in mono)
        if not mono:
            text = str(abs(c))
        else:
            text = f"{abs(c)}·{body}"
        if not parts:
            parts.append(text if c > 0 else f"−{text}")
        else:
            parts.append(f"{'+' if c > 0 else '−'} {text}")
    return " ".join(parts) if parts else "0"


# -- dense graded engine -----------------------------------------------------

def _zeros(n: int) -> np.ndarray:
    arr = np.empty(n, dtype=object)
    arr.fill(0)
    return arr


class GradedSeries:
    """Dense truncated series: ``parts[d]`` holds the ``m**d`` degree-d coefficients."""

    __slots__ = ("m", "q", "parts")

    def __init__(self, m: int, q: int, parts: list[np.ndarray]):
        self.m = m
        self.q = q
        self.parts = parts

    @classmethod
    def one(cls, m: int, q: int) -> GradedSeries:
        parts = [_zeros(m ** d) for d in range(q)]
        parts[0][0] = 1
        return cls(m, q, parts)

    @classmethod
    def generator(cls, i: int, m: int, q: int, inverse: bool = False) -> GradedSeries:
        g = cls.one(m, q)
        g.right_multiply_letter(-i if inverse else i)
        return g

    @classmethod
    def from_word(cls, w: Word | Sequence[int], m: int, q: int) -> GradedSeries:
        g = cls.one(m, q)
        for a in (w.letters if isinstance(w, Word) else w):
            g.right_multiply_letter(a)
        return g

    def copy(self) -> GradedSeries:
        return GradedSeries(self.m, self.q, [p.copy() for p in self.parts])

    def right_multiply_letter(self, a: int) -> None:
        """In place: ``self <- self * E(x_a)`` (``a`` signed)."""
        m, i = self.m, abs(a) - 1
        parts = self.parts
        if a > 0:
            for d in range(self.q - 2, -1, -1):
                parts[d + 1].reshape(-1, m)[:, i] += parts[d]
        else:
            # T = S (1 + X_i)^-1  <=>  T_{d+1} = S_{d+1} - T_d X_i
            for d in range(0, self.q - 1):
                parts[d + 1].reshape(-1, m)[:, i] -= parts[d]

    def __mul__(self, other: GradedSeries) -> GradedSeries:
        if (self.m, self.q) != (other.m, other.q):
            raise SeriesError("incompatible graded series")
        out = []
        for d in range(self.q):
            acc = None
            for a in range(d + 1):
                term = np.multiply.outer(self.parts[a], other.parts[d - a]).ravel()
                acc = term if acc is None else acc + term
            out.append(acc)
        return GradedSeries(self.m, self.q, out)

    def __eq__(self, other):
        if not isinstance(other, GradedSeries):
            return NotImplemented
        return (self.m, self.q) == (other.m, other.q) and all(
            np.array_equal(a, b) for a, b in zip(self.parts, other.parts))

    def coefficient(self, mono: Sequence[int]) -> int:
        if len(mono) >= self.q:
            raise SeriesError(f"degree {len(mono)} is not kept modulo degree {self.q}")
        if any(not 1 <= i <= self.m for i in mono):
            raise SeriesError(f"monomial {tuple(mono)} uses a generator outside 1..{self.m}")
        idx = 0
        for i in mono:
            idx = idx * self.m + (i - 1)
        return int(self.parts[len(mono)][idx])

    def degree_array(self, d: int) -> np.ndarray:
        return self.parts[d]

    def to_truncated(self) -> TruncatedSeries:
        terms = {}
        for d, arr in enumerate(self.parts):
            for flat in np.flatnonzero(arr != 0):
                terms[_unflatten(int(flat), d, self.m)] = int(arr[flat])
        return TruncatedSeries(self.m, self.q, terms)

    @classmethod
    def from_truncated(cls, s: TruncatedSeries) -> GradedSeries:
        g = cls(s.m, s.q, [_zeros(s.m ** d) for d in range(s.q)])
        for mono, c in s.terms.items():
            idx = 0
            for i in mono:
                idx = idx * s.m + (i - 1)
            g.parts[len(mono)][idx] = c
        return g


def _unflatten(flat: int, d: int, m: int) -> Monomial:
    out = []
    for _ in range(d):
        flat, r = divmod(flat, m)
        out.append(r + 1)
    return tuple(reversed(out))


def dense_size(m: int, q: int) -> int:
    return sum(m ** d for d in range(q))


def coefficients(w: Word, monos: Iterable[Sequence[int]]) -> list[int]:
    """Batch extraction; picks full expansion or per-monomial DP by cost."""
    monos = [tuple(x) for x in monos]
    if not monos:
        return []
    q = max(len(x) for x in monos) + 1
    if len(w) * q <= DP_THRESHOLD and dense_size(w.m, q) <= 200_000:
        g = GradedSeries.from_word(w, w.m, q)
        return [g.coefficient(x) for x in monos]
    return [coefficient(w, x) for x in monos]
