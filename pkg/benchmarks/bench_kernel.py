#!/usr/bin/env python3
"""Benchmark: compiled normal-ordering kernel vs the pure-Python fallback.

Two measurements per algebra:

  * kernel-only: normal-order a fixed corpus of random words on a cold
    kernel (exercises the insert recursion and memo behaviour directly);
  * end-to-end: the full star-product sweep over all monomial pairs up to a
    total degree, run in a subprocess with GUTTSTAR_PURE toggled so the
    import-time backend selection is what is actually being compared.

Usage: python benchmarks/bench_kernel.py [--degree 6] [--words 400]
"""

from __future__ import annotations

import argparse
import json
import os
import random
import subprocess
import sys
import time

from guttstar import _kernel_py
from guttstar.kernel import backend_name
from guttstar.liealg import heisenberg, sl2

try:
    from guttstar import _speedups
except ImportError:
    _speedups = None

ALGEBRAS = {"heisenberg": heisenberg, "sl2": sl2}

SWEEP_SNIPPET = """
import json, time
from guttstar.kernel import backend_name
from guttstar.liealg import heisenberg, sl2
from guttstar.sym import SymElement
from guttstar.pbw import star_pbw
from guttstar.experiments import monomial_pairs
L = {factory}()
t0 = time.perf_counter()
for alpha, beta in monomial_pairs(L, {degree}):
    star_pbw(SymElement.monomial(L, alpha), SymElement.monomial(L, beta))
print(json.dumps({{"backend": backend_name(), "seconds": time.perf_counter() - t0}}))
"""


def bracket_rows(L):
    rows = {}
    for i in range(L.dim):
        for j in range(L.dim):
            if i != j:
                row = tuple(sorted(L.basis_bracket(i, j).items()))
                if row:
                    rows[(i, j)] = row
    return rows


def word_corpus(L, count, max_len, seed=0):
    rng = random.Random(seed)
    return [
        tuple(rng.randrange(L.dim) for _ in range(rng.randint(1, max_len)))
        for _ in range(count)
    ]


def bench_kernel_only(kernel_cls, L, words):
    kernel = kernel_cls(L.dim, bracket_rows(L), deform=True)
    t0 = time.perf_counter()
    for word in words:
        kernel.normal_order(word)
    return time.perf_counter() - t0


def bench_end_to_end(factory_name, degree, pure):
    env = dict(os.environ)
    if pure:
        env["GUTTSTAR_PURE"] = "1"
    else:
        env.pop("GUTTSTAR_PURE", None)
    snippet = SWEEP_SNIPPET.format(factory=factory_name, degree=degree)
    out = subprocess.run(
        [sys.executable, "-c", snippet], env=env, capture_output=True, text=True
    )
    if out.returncode != 0:
        raise RuntimeError(out.stderr)
    return json.loads(out.stdout)


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--degree", type=int, default=6)
    parser.add_argument("--words", type=int, default=400)
    parser.add_argument("--max-word-len", type=int, default=10)
    args = parser.parse_args()

    print(f"default backend at import: {backend_name()}")
    if _speedups is None:
        print("compiled kernel not available; benchmarking the fallback only")

    for name, factory in ALGEBRAS.items():
        L = factory()
        words = word_corpus(L, args.words, args.max_word_len)
        pure_t = bench_kernel_only(_kernel_py.PbwKernel, L, words)
        line = f"{name:<11} kernel-only  python={pure_t:.3f}s"
        if _speedups is not None:
            fast_t = bench_kernel_only(_speedups.PbwKernel, L, words)
            line += f"  compiled={fast_t:.3f}s  speedup={pure_t / fast_t:.2f}x"
        print(line)

    for name in ALGEBRAS:
        slow = bench_end_to_end(name, args.degree, pure=True)
        line = (
            f"{name:<11} sweep<= {args.degree}   "
            f"{slow['backend']}={slow['seconds']:.3f}s"
        )
        if _speedups is not None:
            fast = bench_end_to_end(name, args.degree, pure=False)
            line += (
                f"  {fast['backend']}={fast['seconds']:.3f}s"
                f"  speedup={slow['seconds'] / fast['seconds']:.2f}x"
            )
        print(line)
    return 0


if __name__ == "__main__":
    sys.exit(main())
