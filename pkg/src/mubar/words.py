"""Free-group words and braid words.

Letters are signed integers: ``+i`` is the generator ``x_i`` and ``-i`` its
inverse. Indices are 1-based throughout, so ``x1`` and ``s1`` in text match
the usual notation.

Braid words act on the free group through the Artin representation

    s_k:  x_k -> x_k x_{k+1} x_k^-1,   x_{k+1} -> x_k

and a braid ``b1 * b2`` is ``b1`` drawn above ``b2``. ``artin_image(b, i)``
expresses the meridian at the top of strand ``i`` as a word in the meridians
at the bottom of the braid, so ``artin_image(b1 * b2, i)`` is obtained by
substituting ``artin_image(b2, j)`` for every ``x_j`` in ``artin_image(b1, i)``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Sequence


class WordError(ValueError):
    """Raised for malformed words, out-of-range generators or mismatched ranks."""


def reduce_letters(letters: Iterable[int]) -> tuple[int, ...]:
    """Freely reduce a sequence of signed letters."""
    out: list[int] = []
    for a in letters:
        if out and out[-1] == -a:
            out.pop()
        else:
            out.append(a)
    return tuple(out)


def invert_letters(letters: Sequence[int]) -> tuple[int, ...]:
    return tuple(-a for a in reversed(letters))


@dataclass(frozen=True)
class Word:
    """A freely reduced word in the free group on ``m`` generators."""

    letters: tuple[int, ...]
    m: int

    def __post_init__(self):
        letters = tuple(int(a) for a in self.letters)
        for a in letters:
            if a == 0 or abs(a) > self.m:
                raise WordError(f"generator index {a} out of range 1..{self.m}")
        object.__setattr__(self, "letters", reduce_letters(letters))

    @classmethod
    def identity(cls, m: int) -> Word:
        return cls((), m)

    @classmethod
    def generator(cls, i: int, m: int) -> Word:
        return cls((i,), m)

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self):
        return iter(self.letters)

    def __mul__(self, other: Word) -> Word:
        _check_rank(self, other)
        return Word(self.letters + other.letters, self.m)

    def inverse(self) -> Word:
        return Word(invert_letters(self.letters), self.m)

    def __pow__(self, n: int) -> Word:
        base = self if n >= 0 else self.inverse()
        return Word(base.letters * abs(n), self.m)

    def exponent_sum(self, i: int) -> int:
        return sum(1 if a == i else -1 if a == -i else 0 for a in self.letters)

    def is_identity(self) -> bool:
        return not self.letters

    def __str__(self) -> str:
        return format_word(self.letters, "x")


def _check_rank(u: Word, v: Word) -> None:
    if u.m != v.m:
        raise WordError(f"words over different free groups (m={u.m} vs m={v.m})")


def reduce(w: Word) -> Word:
    """Return the freely reduced form of ``w``.

    ``Word`` values are reduced on construction, so this is the identity on
    them; it exists so raw letter sequences can be pushed through one entry
    point: ``reduce(Word(letters, m))``.
    """
    return Word(reduce_letters(w.letters), w.m)


def commutator(u: Word, v: Word) -> Word:
    """``[u, v] = u v u^-1 v^-1``, reduced."""
    _check_rank(u, v)
    return Word(u.letters + v.letters + invert_letters(u.letters) + invert_letters(v.letters), u.m)


def conjugator_of_generator(w: Word, i: int) -> Word | None:
    """If ``w`` is reduced and equals ``u x_i u^-1``, return ``u``; else None."""
    n = len(w.letters)
    if n % 2 == 0:
        return None
    h = n // 2
    if w.letters[h] != i:
        return None
    u = w.letters[:h]
    if w.letters[h + 1:] != invert_letters(u):
        return None
    return Word(u, w.m)


# -- text syntax -------------------------------------------------------------

_TOKEN = re.compile(r"^([A-Za-z]+)(\d+)(?:\^(-?\d+))?$")


def format_word(letters: Sequence[int], symbol: str) -> str:
    return " ".join(f"{symbol}{a}" if a > 0 else f"{symbol}{-a}^-1" for a in letters)


def parse_letters(text: str, symbol: str) -> tuple[int, ...]:
    """Parse ``x1 x2^-1 x3^2`` style text into signed letters (not reduced)."""
    letters: list[int] = []
    for pos, tok in enumerate(text.split()):
        match = _TOKEN.match(tok)
        if not match or match.group(1) != symbol:
            raise WordError(f"unknown token {tok!r} at position {pos}")
        idx = int(match.group(2))
        power = int(match.group(3)) if match.group(3) is not None else 1
        if idx == 0 or power == 0:
            raise WordError(f"invalid token {tok!r} at position {pos}")
        letters.extend([idx if power > 0 else -idx] * abs(power))
    return tuple(letters)


def parse_word(text: str, m: int | None = None) -> Word:
    letters = parse_letters(text, "x")
    if m is None:
        m = max((abs(a) for a in letters), default=0)
    return Word(letters, m)


# -- braids ------------------------------------------------------------------

@dataclass(frozen=True)
class BraidWord:
    """A word in the Artin generators ``s_1 .. s_{strands-1}``.

    Braid words are kept exactly as written (no free reduction), so that
    parse and print round-trip.
    """

    letters: tuple[int, ...]
    strands: int

    def __post_init__(self):
        letters = tuple(int(a) for a in self.letters)
        if self.strands < 1:
            raise WordError("a braid needs at least one strand")
        for a in letters:
            if a == 0 or abs(a) >= self.strands:
                raise WordError(f"braid generator s{abs(a)} out of range for {self.strands} strands")
        object.__setattr__(self, "letters", letters)

    @classmethod
    def identity(cls, strands: int) -> BraidWord:
        return cls((), strands)

    def __len__(self) -> int:
        return len(self.letters)

    def __mul__(self, other: BraidWord) -> BraidWord:
        return multiply(self, other)

    def __pow__(self, n: int) -> BraidWord:
        base = self if n >= 0 else inverse(self)
        return BraidWord(base.letters * abs(n), self.strands)

    def __str__(self) -> str:
        return format_word(self.letters, "s")

    def permutation(self) -> tuple[int, ...]:
        return permutation(self)

    def is_pure(self) -> bool:
        return permutation(self) == tuple(range(1, self.strands + 1))


def _check_strands(b1: BraidWord, b2: BraidWord) -> None:
    if b1.strands != b2.strands:
        raise WordError(f"strand-count mismatch ({b1.strands} vs {b2.strands})")


def multiply(b1: BraidWord, b2: BraidWord) -> BraidWord:
    """``b1`` stacked on top of ``b2``."""
    _check_strands(b1, b2)
    return BraidWord(b1.letters + b2.letters, b1.strands)


def inverse(b: BraidWord) -> BraidWord:
    return BraidWord(invert_letters(b.letters), b.strands)


def conjugate(b: BraidWord, c: BraidWord) -> BraidWord:
    """``c b c^-1``."""
    return multiply(multiply(c, b), inverse(c))


def braid_commutator(a: BraidWord, b: BraidWord) -> BraidWord:
    """``a b a^-1 b^-1`` as a braid word (no cancellation)."""
    return multiply(multiply(a, b), multiply(inverse(a), inverse(b)))


def permutation(b: BraidWord) -> tuple[int, ...]:
    """``perm[p-1]`` is the bottom position of the strand starting at top position ``p``."""
    where = list(range(1, b.strands + 1))  # where[p-1]: current position of strand p
    at = list(range(1, b.strands + 1))  # at[pos-1]: strand currently at pos
    for a in b.letters:
        k = abs(a)
        s1, s2 = at[k - 1], at[k]
        at[k - 1], at[k] = s2, s1
        where[s1 - 1], where[s2 - 1] = k + 1, k
    return tuple(where)


def parse_braid(text: str, strands: int | None = None) -> BraidWord:
    letters = parse_letters(text, "s")
    if strands is None:
        strands = max((abs(a) for a in letters), default=0) + 1
    return BraidWord(letters, strands)


def artin_images(b: BraidWord) -> list[Word]:
    """Images of all generators ``x_1 .. x_s`` under the Artin action of ``b``."""
    s = b.strands
    table = [(j,) for j in range(1, s + 1)]
    # phi_{g b} = phi_b o phi_g, so prepend letters one at a time from the right.
    for a in reversed(b.letters):
        k = abs(a) - 1
        tk, tk1 = table[k], table[k + 1]
        if a > 0:
            table[k] = reduce_letters(tk + tk1 + invert_letters(tk))
            table[k + 1] = tk
        else:
            table[k] = tk1
            table[k + 1] = reduce_letters(invert_letters(tk1) + tk + tk1)
    return [Word(t, s) for t in table]


def artin_image(b: BraidWord, i: int) -> Word:
    if not 1 <= i <= b.strands:
        raise WordError(f"strand index {i} out of range 1..{b.strands}")
    return artin_images(b)[i - 1]


def apply_substitution(w: Word, images: Sequence[Word]) -> Word:
    """Apply the endomorphism ``x_j -> images[j-1]`` to ``w``."""
    out: list[int] = []
    for a in w.letters:
        img = images[abs(a) - 1].letters
        out.extend(img if a > 0 else invert_letters(img))
    return Word(out, images[0].m if images else w.m)
