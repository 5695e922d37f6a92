"""Time the length scan on BD(BR), optionally with several worker processes.

    python3 scripts/bench_bd_br.py --threads 1 2 4
"""

import argparse
import os
import time

from mubar.invariants import THREADS_ENV, first_nonvanishing
from mubar.operators import bing_double, borromean


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--threads", type=int, nargs="+", default=[1])
    ap.add_argument("--max-len", type=int, default=6)
    args = ap.parse_args()

    t = time.perf_counter()
    link = bing_double(borromean())
    print(f"BD(BR): {link.m} components, {len(link.crossings)} crossings, built in {time.perf_counter() - t:.2f}s")
    for n in args.threads:
        os.environ[THREADS_ENV] = str(n)
        t = time.perf_counter()
        f = first_nonvanishing(link, args.max_len)
        print(f"threads={n:<3} {time.perf_counter() - t:7.2f}s  {f}  ({f.extractions} extractions)")


if __name__ == "__main__":
    main()
