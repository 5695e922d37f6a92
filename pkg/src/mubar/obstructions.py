"""Filtration non-membership read off from the first nonvanishing length.

If ``mu-bar`` first fails to vanish at length ``l`` then the link is

* not (n)-solvable, nor n-positive/negative/bipolar, whenever ``2**(n+2) - 1 >= l``;
* not bounding disjoint gropes of height h whenever ``2**h >= l``;
* not null k-cobordant whenever ``2k >= l``.

Only non-membership is ever reported.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from .invariants import FirstNonvanishing, MuTable, format_index


def solvability_obstruction(length: int | None) -> int | None:
    """Smallest n with the link provably not (n)-solvable; None if no obstruction.

    Every n beyond it is excluded too (the filtration is nested).
    """
    if length is None:
        return None
    if length < 2:
        raise ValueError("Milnor invariants have length >= 2")
    n = 0
    while 2 ** (n + 2) - 1 < length:
        n += 1
    return n


def bipolar_obstruction(length: int | None) -> int | None:
    return solvability_obstruction(length)


def grope_obstruction(length: int | None) -> int | None:
    """Smallest excluded grope height: least h with ``2**h >= length``."""
    if length is None:
        return None
    if length < 2:
        raise ValueError("Milnor invariants have length >= 2")
    return (length - 1).bit_length()


def kcobordism_obstruction(length: int | None) -> int | None:
    """Smallest k for which the link is not null k-cobordant."""
    if length is None:
        return None
    return (length + 1) // 2


def excluded(threshold: int | None, upto: int) -> list[int]:
    """Levels ``threshold .. upto`` (empty when there is no obstruction)."""
    return [] if threshold is None else list(range(threshold, upto + 1))


@dataclass(frozen=True)
class ObstructionReport:
    first_nonvanishing: int | None
    witness: tuple[int, ...] | None
    value: int | None
    max_length: int
    excluded_solvable_from: int | None
    excluded_grope_from: int | None
    excluded_bipolar_from: int | None
    excluded_kcobordism_from: int | None
    notes: list[str] = field(default_factory=list)

    @classmethod
    def from_first(cls, first: FirstNonvanishing) -> ObstructionReport:
        ell = first.length
        notes = []
        if ell is None:
            notes.append(f"all mu-bar vanish up to length {first.max_length}; no obstruction found")
        else:
            n = solvability_obstruction(ell)
            notes.append(
                f"mu-bar({format_index(first.witness)}) = {first.value} at length {ell}: "
                f"not ({n})-solvable, hence not in any deeper level"
            )
            notes.append(f"no disjoint gropes of height {grope_obstruction(ell)} or more")
        return cls(
            first_nonvanishing=ell,
            witness=first.witness,
            value=first.value,
            max_length=first.max_length,
            excluded_solvable_from=solvability_obstruction(ell),
            excluded_grope_from=grope_obstruction(ell),
            excluded_bipolar_from=bipolar_obstruction(ell),
            excluded_kcobordism_from=kcobordism_obstruction(ell),
            notes=notes,
        )

    def to_json(self) -> dict:
        return {
            "first_nonvanishing": self.first_nonvanishing,
            "witness": None if self.witness is None else format_index(self.witness),
            "value": self.value,
            "excluded_solvable_from": self.excluded_solvable_from,
            "excluded_grope_from": self.excluded_grope_from,
            "excluded_bipolar_from": self.excluded_bipolar_from,
            "excluded_kcobordism_from": self.excluded_kcobordism_from,
            "notes": list(self.notes),
        }


@dataclass(frozen=True)
class KCobordismResult:
    consistent: bool
    witness: tuple[int, ...] | None = None
    values: tuple[int, int] | None = None

    def __bool__(self) -> bool:
        return self.consistent


def kcobordism_check(a: MuTable, b: MuTable, k: int) -> KCobordismResult:
    """Compare mu-bar up to length 2k; a mismatch certifies "not k-cobordant".

    Residues are compared modulo the gcd of both indeterminacies.
    """
    if a.m != b.m:
        raise ValueError(f"tables have {a.m} and {b.m} components")
    if k < 1:
        raise ValueError("k must be >= 1")
    need = 2 * k
    if a.q < need or b.q < need:
        raise ValueError(f"k = {k} needs tables to length {need}, have {a.q} and {b.q}")
    for I in sorted(a.entries, key=lambda I: (len(I), I)):
        if len(I) > need:
            continue
        x, y = a[I], b[I]
        d = math.gcd(x.delta, y.delta)
        if (x.mu - y.mu) % d if d else x.mu != y.mu:
            return KCobordismResult(False, I, (x.mu, y.mu))
    return KCobordismResult(True)
