"""
pkcheck.bench
=============

Micro-benchmarks for the exact pipeline on the braid family.

python -m pkcheck.bench --kmin 4 --kmax 6 --trials 5

For every braid arrangement A_{k-1} (k = kmin..kmax) this times

1. building the intersection lattice,
2. enumerating the basic monomials,
3. reducing every degree-2 monomial through the table,
4. building the presentation oracle,
5. the full existence check on random braid weights,

and prints one summary table.
"""

from __future__ import annotations

import argparse
import random
import statistics as stats
import time

from rich.console import Console
from rich.table import Table

from .checker import braid_weights, check_theorem
from .generators import gen_braid
from .lattice import build_lattice
from .weights import WeightedArrangement, random_simplex
from .wonder import WonderfulModel

RND = random.Random(42)
console = Console()


def _timed(fn, *args):
    t0 = time.perf_counter()
    out = fn(*args)
    return out, (time.perf_counter() - t0) * 1e3  # ms


def bench_braid(k: int, trials: int) -> dict[str, float | int]:
    arr = gen_braid(k)
    lat, t_lattice = _timed(build_lattice, arr)
    model = WonderfulModel(lat)
    delta, t_delta = _timed(lambda: model.delta2)
    monomials = list(model.all_monomials())
    _, t_table = _timed(lambda: [model.reduce_monomial(m) for m in monomials])
    _, t_oracle = _timed(lambda: model.oracle)

    check_ms = []
    for _ in range(trials):
        w = WeightedArrangement(arr, braid_weights(random_simplex(k, RND)))
        report, ms = _timed(check_theorem, w)
        if not report.verdict:
            console.print(f"[red]braid k={k}: unexpected negative verdict[/red]")
        check_ms.append(ms)

    return {
        "k": k,
        "hyperplanes": len(arr.hyperplanes),
        "G": len(model.G),
        "delta2": len(delta),
        "lattice_ms": t_lattice,
        "delta_ms": t_delta,
        "table_ms": t_table,
        "oracle_ms": t_oracle,
        "check_ms": stats.median(check_ms) if check_ms else 0.0,
    }


def main():
    ap = argparse.ArgumentParser(description="pkcheck benchmark")
    ap.add_argument("--kmin", type=int, default=4, help="smallest braid k")
    ap.add_argument("--kmax", type=int, default=5, help="largest braid k")
    ap.add_argument("--trials", type=int, default=5, help="# random weight vectors per k")
    args = ap.parse_args()

    rows = []
    for k in range(args.kmin, args.kmax + 1):
        console.print(f"[yellow]braid k={k}…[/yellow]", highlight=False)
        rows.append(bench_braid(k, args.trials))

    tbl = Table(title="Braid family timings (ms)")
    for col in ("k", "N", "|G|", "|Δ2|", "lattice", "Δ2", "table", "oracle", "check p50"):
        tbl.add_column(col, justify="right")
    for r in rows:
        tbl.add_row(
            str(r["k"]), str(r["hyperplanes"]), str(r["G"]), str(r["delta2"]),
            f"{r['lattice_ms']:,.1f}", f"{r['delta_ms']:,.1f}", f"{r['table_ms']:,.1f}",
            f"{r['oracle_ms']:,.1f}", f"{r['check_ms']:,.1f}",
        )
    console.print(tbl)


if __name__ == "__main__":
    main()
