"""Milnor invariants from peripheral data.

``I = (i_1, ..., i_k)``: the last index selects the longitude, the first
``k - 1`` name the monomial ``X_{i_1} ... X_{i_{k-1}}`` whose coefficient in
its Magnus expansion is ``mu(I)``.
"""

from __future__ import annotations

import itertools
import math
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .diagrams import PDCode
from .longitudes import PeripheralData, peripheral_data
from .series import SeriesError, coefficient, dense_size
from .words import BraidWord

DEFAULT_BUDGET = 10**7
DENSE_LIMIT = 2_000_000
THREADS_ENV = "MUBAR_THREADS"

Index = tuple[int, ...]


class BudgetExceeded(RuntimeError):
    """A scan would need more coefficient extractions than allowed."""


class InvariantViolation(AssertionError):
    """An internal consistency check failed."""


@dataclass(frozen=True)
class MuEntry:
    mu: int
    delta: int
    mubar: int


@dataclass(frozen=True)
class FirstNonvanishing:
    length: int | None
    witness: Index | None
    value: int | None
    max_length: int
    extractions: int

    @property
    def vanishes(self) -> bool:
        return self.length is None

    def __str__(self) -> str:
        if self.vanishes:
            return f"all vanish <= {self.max_length}"
        return f"length {self.length}, mu({format_index(self.witness)}) = {self.value}"


def format_index(I: Sequence[int]) -> str:
    if all(i < 10 for i in I):
        return "".join(map(str, I))
    return ",".join(map(str, I))


def parse_index(text: str) -> Index:
    """``"313323"`` or ``"3,1,3,3,2,3"`` (commas needed once m >= 10)."""
    text = text.strip()
    parts = text.split(",") if "," in text else list(text)
    try:
        I = tuple(int(p) for p in parts)
    except ValueError:
        raise ValueError(f"bad index sequence {text!r}") from None
    if len(I) < 2 or min(I) < 1:
        raise ValueError(f"index sequence {text!r} needs length >= 2 and entries >= 1")
    return I


def _check_index(P: PeripheralData, I: Sequence[int]) -> Index:
    I = tuple(I)
    if len(I) < 2:
        raise ValueError("index sequences have length >= 2")
    if any(not 1 <= i <= P.m for i in I):
        raise ValueError(f"index {format_index(I)} out of range 1..{P.m}")
    if len(I) > P.q:
        raise SeriesError(f"|I| = {len(I)} exceeds q = {P.q}; recompute peripheral data with larger q")
    return I


def mu(P: PeripheralData, I: Sequence[int]) -> int:
    I = _check_index(P, I)
    return P.coefficient(I[-1], I[:-1])


def reduced_sequences(I: Sequence[int]) -> set[Index]:
    """Cyclic rotations of every proper subsequence of ``I`` of length >= 2."""
    I = tuple(I)
    out = set()
    for r in range(2, len(I)):
        for pos in itertools.combinations(range(len(I)), r):
            J = tuple(I[p] for p in pos)
            out.update(J[s:] + J[:s] for s in range(r))
    return out


def indeterminacy(values, I: Sequence[int]) -> int:
    """gcd of ``mu`` over ``reduced_sequences(I)``; 0 when empty or all vanish.

    ``values`` maps shorter index sequences to mu, or is a callable.
    """
    get = values if callable(values) else values.__getitem__
    g = 0
    for J in sorted(reduced_sequences(I)):
        try:
            g = math.gcd(g, get(J))
        except KeyError:
            raise KeyError(f"mu({format_index(J)}) needed for the indeterminacy of {format_index(I)}") from None
        if g == 1:
            break
    return g


def residue(value: int, delta: int) -> int:
    return value % delta if delta else value


def mubar(P: PeripheralData, I: Sequence[int], cache: dict | None = None) -> MuEntry:
    cache = {} if cache is None else cache

    def get(J):
        if J not in cache:
            cache[J] = mu(P, J)
        return cache[J]

    I = _check_index(P, I)
    value = get(I)
    delta = indeterminacy(get, I)
    return MuEntry(value, delta, residue(value, delta))


def scan_cost(m: int, lengths: Iterable[int]) -> int:
    return sum(m**k for k in lengths)


def check_budget(m: int, lengths: Iterable[int], budget: int) -> int:
    lengths = list(lengths)
    need = scan_cost(m, lengths)
    if need > budget:
        hi = max(lengths)
        raise BudgetExceeded(
            f"exhaustive scan over lengths {min(lengths)}..{hi} on {m} components needs "
            f"{need} coefficient extractions, budget is {budget}"
        )
    return need


def worker_count() -> int:
    try:
        return max(1, int(os.environ.get(THREADS_ENV, "1")))
    except ValueError:
        return 1


def _dp_chunk(args):
    word, monos = args
    return [coefficient(word, x) for x in monos]


def length_values(P: PeripheralData, k: int, workers: int | None = None) -> dict[Index, int]:
    """mu(I) for all ``m**k`` sequences of length ``k``, in lexicographic order."""
    if k > P.q:
        raise SeriesError(f"length {k} exceeds q = {P.q}")
    m = P.m
    out = {}
    if P.longitude_words is None or dense_size(m, P.q) <= DENSE_LIMIT:
        # one pass over the dense degree-(k-1) block of each longitude
        for i in range(1, m + 1):
            block = P.series(i).degree_array(k - 1) if k > 1 else None
            for flat, mono in enumerate(itertools.product(range(1, m + 1), repeat=k - 1)):
                out[mono + (i,)] = int(block[flat])
        return dict(sorted(out.items()))
    monos = list(itertools.product(range(1, m + 1), repeat=k - 1))
    workers = worker_count() if workers is None else workers
    jobs = [(P.longitude_words[i - 1], monos) for i in range(1, m + 1)]
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as ex:
            results = list(ex.map(_dp_chunk, jobs))
    else:
        results = [_dp_chunk(j) for j in jobs]
    for i, vals in enumerate(results, 1):
        for mono, v in zip(monos, vals):
            out[mono + (i,)] = v
    return dict(sorted(out.items()))


@dataclass
class MuTable:
    m: int
    q: int
    entries: dict[Index, MuEntry] = field(default_factory=dict)
    first: FirstNonvanishing | None = None

    def __getitem__(self, I) -> MuEntry:
        return self.entries[tuple(I)]

    def mu(self, I) -> int:
        return self.entries[tuple(I)].mu

    def mubar(self, I) -> int:
        return self.entries[tuple(I)].mubar

    def of_length(self, k: int) -> dict[Index, MuEntry]:
        return {I: e for I, e in self.entries.items() if len(I) == k}

    def to_json(self) -> dict:
        records = [
            {"I": format_index(I), "mu": e.mu, "delta": e.delta, "mubar": e.mubar}
            for I, e in sorted(self.entries.items(), key=lambda kv: (len(kv[0]), kv[0]))
        ]
        f = self.first
        summary = {
            "first_nonvanishing_length": None if f is None else f.length,
            "witness": None if f is None or f.witness is None else format_index(f.witness),
            "value": None if f is None else f.value,
            "max_length": self.q,
        }
        return {"m": self.m, "max_length": self.q, "summary": summary, "entries": records}


def _first_from(values_by_length: dict[int, dict[Index, int]], Q: int, used: int) -> FirstNonvanishing:
    for k in sorted(values_by_length):
        nz = [(I, v) for I, v in values_by_length[k].items() if v]
        if nz:
            I, v = min(nz)
            return FirstNonvanishing(k, I, v, Q, used)
    return FirstNonvanishing(None, None, None, Q, used)


def mu_table(P: PeripheralData, max_len: int, budget: int = DEFAULT_BUDGET, cross_check: bool = False) -> MuTable:
    """All mu, Delta and mu-bar for lengths 2..max_len."""
    if max_len < 2:
        raise ValueError("max length must be >= 2")
    if max_len > P.q:
        raise SeriesError(f"max length {max_len} exceeds q = {P.q}")
    used = check_budget(P.m, range(2, max_len + 1), budget)
    raw = {k: length_values(P, k) for k in range(2, max_len + 1)}
    flat = {I: v for vals in raw.values() for I, v in vals.items()}
    table = MuTable(P.m, max_len)
    for I, v in flat.items():
        d = indeterminacy(flat, I)
        table.entries[I] = MuEntry(v, d, residue(v, d))
    table.first = _first_from(raw, max_len, used)
    check_table(P, table, cross_check)
    return table


def check_table(P: PeripheralData, table: MuTable, cross_check: bool = False) -> None:
    """Well-definedness of the first nonvanishing level; optional DP cross-check."""
    f = table.first
    if f is not None and not f.vanishes:
        for I, e in table.of_length(f.length).items():
            if e.delta != 0 or e.mubar != e.mu:
                raise InvariantViolation(f"first nonvanishing mu({format_index(I)}) has delta {e.delta}")
    if cross_check and P.longitude_words is not None:
        for I, e in table.entries.items():
            dp = coefficient(P.longitude_words[I[-1] - 1], I[:-1])
            if dp != e.mu:
                raise InvariantViolation(f"DP and series disagree at {format_index(I)}: {dp} vs {e.mu}")


def first_nonvanishing(
    link: PDCode | BraidWord | PeripheralData, max_len: int, budget: int = DEFAULT_BUDGET
) -> FirstNonvanishing:
    """Shortest length with a nonzero mu, exhaustively, and its least witness.

    The whole scan up to ``max_len`` is charged against ``budget`` before any
    work starts, so an impossible request fails at once.
    """
    if max_len < 2:
        raise ValueError("max length must be >= 2")
    m = link.m if isinstance(link, (PDCode, PeripheralData)) else link.strands
    check_budget(m, range(2, max_len + 1), budget)
    P = link if isinstance(link, PeripheralData) else peripheral_data(link, max_len)
    used = 0
    for k in range(2, max_len + 1):
        vals = length_values(P, k)
        used += len(vals)
        nz = [(I, v) for I, v in vals.items() if v]
        if nz:
            I, v = min(nz)
            return FirstNonvanishing(k, I, v, max_len, used)
    return FirstNonvanishing(None, None, None, max_len, used)
