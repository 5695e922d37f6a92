"""Regenerate the golden link files in src/mubar/golden."""

from pathlib import Path

from mubar.diagrams import closure, unlink
from mubar.linkfile import write_link
from mubar.operators import bing_double, borromean, braid_commutator_link, twisted_whitehead
from mubar.words import parse_braid

GOLDEN = Path(__file__).resolve().parents[1] / "src" / "mubar" / "golden"


def main():
    GOLDEN.mkdir(exist_ok=True)
    hopf = closure(parse_braid("s1 s1", 2))
    files = {
        "hopf.pd": hopf,
        "unlink2.pd": unlink(2),
        "unlink3.pd": unlink(3),
        "br.braid": borromean(),
        "br.pd": closure(borromean()),
        "whitehead.pd": twisted_whitehead(1),
        "commutator.braid": braid_commutator_link(),
        "bd-hopf.pd": bing_double(hopf),
        "bd-br.pd": bing_double(borromean()),
    }
    for t in (2, 4, 6):
        files[f"twisted-whitehead-{t}.pd"] = twisted_whitehead(t)
    for name, link in files.items():
        write_link(link, GOLDEN / name)
        print("wrote", GOLDEN / name)


if __name__ == "__main__":
    main()
