#!/usr/bin/env python3
"""
Scaling sweep: lattice size, basis size and timings of the lattice build,
the table reduction and the presentation oracle across the braid and B_m
families. Writes a CSV and a latency plot.
"""

import time

import matplotlib.pyplot as plt
import pandas as pd
from tqdm import tqdm

from pkcheck.generators import gen_bm, gen_braid
from pkcheck.lattice import build_lattice
from pkcheck.wonder import WonderfulModel

CONFIGS = [("braid", 4), ("braid", 5), ("braid", 6), ("bm", 3), ("bm", 4)]

def measure(family: str, param: int) -> dict:
    arr = gen_braid(param) if family == "braid" else gen_bm(param)

    t0 = time.perf_counter()
    lat = build_lattice(arr)
    t_lattice = time.perf_counter() - t0

    model = WonderfulModel(lat)
    monomials = list(model.all_monomials())
    t0 = time.perf_counter()
    for m in monomials:
        model.reduce_monomial(m)
    t_table = time.perf_counter() - t0

    t0 = time.perf_counter()
    oracle = model.oracle
    t_oracle = time.perf_counter() - t0

    return {
        "family": family,
        "param": param,
        "dim": arr.dim,
        "hyperplanes": len(arr.hyperplanes),
        "flats": sum(lat.counts().values()),
        "G": len(model.G),
        "monomials": len(monomials),
        "delta2": len(model.delta2),
        "quotient": oracle.dimension,
        "lattice_s": t_lattice,
        "table_s": t_table,
        "oracle_s": t_oracle,
    }

def main():
    results = []
    for family, param in tqdm(CONFIGS, desc="Arrangements"):
        results.append(measure(family, param))
    df = pd.DataFrame(results)

    print(df.to_string(index=False, float_format="{:0.4f}".format))
    out_csv = "scaling.csv"
    df.to_csv(out_csv, index=False)

    plt.figure(figsize=(6, 4))
    plt.plot(df["monomials"], df["lattice_s"], marker="o", label="lattice")
    plt.plot(df["monomials"], df["table_s"], marker="o", label="table reduction")
    plt.plot(df["monomials"], df["oracle_s"], marker="s", label="presentation oracle")
    plt.xscale("log")
    plt.yscale("log")
    plt.xlabel("Degree-2 monomials over G")
    plt.ylabel("Time (s)")
    plt.title("Exact pipeline cost vs arrangement size")
    plt.legend()
    plt.tight_layout()
    out_png = "scaling.png"
    plt.savefig(out_png, dpi=150)
    print(f"\nTable saved → {out_csv}\nPlot saved → {out_png}")

if __name__ == "__main__":
    main()
