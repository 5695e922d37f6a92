"""Golden regression checks behind ``mubar verify``."""

from __future__ import annotations

import random
import time
from dataclasses import dataclass
from importlib import resources
from itertools import product
from pathlib import Path
from typing import Callable

from .diagrams import closure, linking_number, r1_add, r2_add, reidemeister_move
from .invariants import first_nonvanishing, mu, mu_table, mubar
from .linkfile import read_link
from .longitudes import peripheral_data
from .obstructions import grope_obstruction, solvability_obstruction
from .operators import borromean, stack_power
from .series import GradedSeries, coefficient, lcs_residue_degree, magnus_expand
from .words import Word, commutator


def golden_dir() -> Path:
    return Path(str(resources.files("mubar") / "golden"))


def golden(name: str):
    return read_link(golden_dir() / name)


@dataclass(frozen=True)
class Check:
    name: str
    run: Callable[[], tuple[bool, str]]
    xfail: str | None = None


@dataclass(frozen=True)
class Outcome:
    name: str
    ok: bool
    detail: str
    seconds: float
    xfail: str | None = None

    @property
    def status(self) -> str:
        if self.xfail:
            return "XPASS" if self.ok else "XFAIL"
        return "PASS" if self.ok else "FAIL"


def _br():
    pb = peripheral_data(golden("br.braid"), 3)
    pp = peripheral_data(golden("br.pd"), 3)
    a, b = mubar(pb, (1, 2, 3)), mubar(pp, (1, 2, 3))
    return abs(a.mubar) == 1 and a.delta == 0 and a == b, f"braid {a}, pd {b}"


def _whitehead():
    P = peripheral_data(golden("whitehead.pd"), 4)
    low = all(mu(P, I) == 0 for k in (2, 3) for I in product((1, 2), repeat=k))
    e = mubar(P, (1, 1, 2, 2))
    return low and abs(e.mubar) == 1 and e.delta == 0, f"mu-bar(1122) {e}, lengths <= 3 vanish: {low}"


def _twisted():
    got = {}
    for t in (2, 4, 6):
        P = peripheral_data(golden(f"twisted-whitehead-{t}.pd"), 4)
        got[t] = (mu(P, (1, 1, 2, 2)), mu(P, (1, 2, 1, 2)))
    return all(got[t] == (-t, 2 * t) for t in got), f"(mu(1122), mu(1212)) by t: {got}"


def _commutator():
    link = golden("commutator.braid")
    P = peripheral_data(link, 6)
    lks = [linking_number(link, i, j) for i, j in ((1, 2), (1, 3), (2, 3))]
    e = mubar(P, (3, 1, 3, 3, 2, 3))
    n = solvability_obstruction(first_nonvanishing(P, 6).length)
    return e.mubar == -1 and lks == [0, 0, 0] and n <= 1, f"mu-bar(313323) = {e.mubar}, lk {lks}"


def _bd(name, length):
    def run():
        link = golden(name)
        lks = {linking_number(link, i, j) for i in range(1, link.m + 1) for j in range(i + 1, link.m + 1)}
        f = first_nonvanishing(link, length)
        return lks == {0} and f.length == length and abs(f.value) == 1, f"lk {sorted(lks)}, {f}"
    return run


def _obstructions():
    ok = (solvability_obstruction(3) == 0 and solvability_obstruction(6) == 1
          and solvability_obstruction(4) == 1 and grope_obstruction(4) == 2)
    return ok, "l=3: n>=0, l=6: n>=1, l=4: n>=1 and height>=2 excluded"


def _stack():
    br = golden("br.braid")
    vals = [mu(peripheral_data(stack_power(br, k), 3), (1, 2, 3)) for k in range(1, 6)]
    return abs(vals[0]) == 1 and vals == [k * vals[0] for k in range(1, 6)], f"mu(123) for k = 1..5: {vals}"


def _magnus():
    rng = random.Random(7)
    for _ in range(200):
        u = Word(tuple(rng.choice((1, -1)) * rng.randint(1, 3) for _ in range(rng.randint(0, 8))), 3)
        v = Word(tuple(rng.choice((1, -1)) * rng.randint(1, 3) for _ in range(rng.randint(0, 8))), 3)
        if magnus_expand(u * v, 4) != magnus_expand(u, 4) * magnus_expand(v, 4):
            return False, f"homomorphism fails at {u}, {v}"
        if (GradedSeries.from_word(u, 3, 4) * GradedSeries.from_word(u.inverse(), 3, 4)) != GradedSeries.one(3, 4):
            return False, f"inverse fails at {u}"
    return True, "200 random pairs"


def _dp():
    rng = random.Random(11)
    for _ in range(200):
        w = Word(tuple(rng.choice((1, -1)) * rng.randint(1, 3) for _ in range(rng.randint(0, 12))), 3)
        mono = tuple(rng.randint(1, 3) for _ in range(rng.randint(0, 4)))
        if coefficient(w, mono) != GradedSeries.from_word(w, 3, 5).coefficient(mono):
            return False, f"mismatch at {w}, {mono}"
    return True, "200 random (word, monomial) pairs"


def _framing():
    names = sorted(p.name for p in golden_dir().iterdir() if p.suffix in (".pd", ".braid"))
    for name in names:
        link = golden(name)
        P = peripheral_data(link, 2)
        for i in range(1, P.m + 1):
            for j in range(1, P.m + 1):
                want = 0 if i == j else linking_number(link, i, j)
                if P.exponent_sum(i, j) != want:
                    return False, f"{name}: exponent sum of x{j} in longitude {i} is {P.exponent_sum(i, j)}, want {want}"
    return True, f"{len(names)} golden links"


def _reidemeister():
    for name in ("hopf.pd", "whitehead.pd"):
        pd = golden(name)
        base = mu_table(peripheral_data(pd, 4), 4)
        moved = [r1_add(pd, 1, 0), r1_add(pd, 2, 3), r2_add(pd, 1, pd.components[-1][0])]
        for k, other in enumerate(moved):
            t = mu_table(peripheral_data(other, 4), 4)
            if {I: e.mu for I, e in t.entries.items()} != {I: e.mu for I, e in base.entries.items()}:
                return False, f"{name}: move {k} changed mu"
    return True, "R1 and R2 moves on hopf and whitehead"


def _lcs():
    got = [lcs_residue_degree(w, 10) for w in derived_series_words()]
    return got == [2, 4, 8], f"residue degrees {got}"


def derived_series_words() -> list[Word]:
    """Elements of the first three derived subgroups of F(x1, x2, x3)."""
    x, y, z = (Word((i,), 3) for i in (1, 2, 3))
    a, b, c = commutator(x, y), commutator(x, z), commutator(y, z)
    d1, d2 = commutator(a, b), commutator(c, a)
    return [a, d1, commutator(d1, d2)]


CHECKS = [
    Check("br", _br),
    Check("whitehead", _whitehead),
    Check("twisted-whitehead", _twisted),
    Check("commutator", _commutator,
          xfail="mu(313323) is 0 from both braid and PD input; see the notes in README"),
    Check("bd-hopf", _bd("bd-hopf.pd", 4)),
    Check("bd-br", _bd("bd-br.pd", 6)),
    Check("obstructions", _obstructions),
    Check("stack", _stack),
    Check("magnus", _magnus),
    Check("dp", _dp),
    Check("framing", _framing),
    Check("reidemeister", _reidemeister),
    Check("lcs", _lcs),
]


def run_checks(only: list[str] | None = None) -> list[Outcome]:
    selected = [c for c in CHECKS if not only or any(o in c.name for o in only)]
    if only and not selected:
        raise ValueError(f"no check matches {only}; known: {', '.join(c.name for c in CHECKS)}")
    out = []
    for c in selected:
        t = time.perf_counter()
        try:
            ok, detail = c.run()
        except Exception as exc:  # a crash is a named failure, not a traceback
            ok, detail = False, f"{type(exc).__name__}: {exc}"
        out.append(Outcome(c.name, ok, detail, time.perf_counter() - t, c.xfail))
    return out
