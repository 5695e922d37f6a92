"""mu(313323) of the commutator braid under every convention we could think of.

Varies the Borromean word, the conjugating generator, the commutator
convention and operand order, and mirror / reversal of the result. Prints
mu(313323) and the first nonvanishing length for each variant.
"""

from itertools import product

from mubar.invariants import first_nonvanishing, mu
from mubar.longitudes import peripheral_data
from mubar.words import BraidWord, inverse, parse_braid

INDEX = (3, 1, 3, 3, 2, 3)
WORDS = {"s2 s1^-1": "s2 s1^-1 s2 s1^-1 s2 s1^-1", "s1 s2^-1": "s1 s2^-1 s1 s2^-1 s1 s2^-1"}
CONJ = ["s1", "s1^-1", "s2"]
COMM = {
    "a b a^-1 b^-1": lambda a, b: a * b * inverse(a) * inverse(b),
    "a^-1 b^-1 a b": lambda a, b: inverse(a) * inverse(b) * a * b,
}
TWEAK = {
    "": lambda b: b,
    "mirror": lambda b: BraidWord(tuple(-x for x in b.letters), b.strands),
    "reversed": lambda b: BraidWord(tuple(reversed(b.letters)), b.strands),
}


def main():
    hits = 0
    for (wn, w), g, (cn, comm), swap, (tn, tweak) in product(
            WORDS.items(), CONJ, COMM.items(), (False, True), TWEAK.items()):
        br = parse_braid(w, 3)
        c = parse_braid(g, 3)
        a, b = br, c * br * inverse(c)
        link = tweak(comm(b, a) if swap else comm(a, b))
        P = peripheral_data(link, 6)
        v = mu(P, INDEX)
        hits += v != 0
        print(f"{wn:9} conj {g:6} {cn:14} {'ba' if swap else 'ab'} {tn:9} mu(313323) = {v:2}   {first_nonvanishing(P, 6)}")
    print(f"{hits} variants with mu(313323) != 0")


if __name__ == "__main__":
    main()
