"""
pkcheck.report
==============

Turns results into JSON-ready dicts, and dicts into text tables.

Text output is always derived from the dict, so ``--format text`` and
``--format json`` carry the same information.
"""

from __future__ import annotations

import io
from typing import Any, Iterable

from rich.console import Console
from rich.table import Table

from .arrangement import Flat
from .chern import CoeffReport
from .checker import CheckReport
from .exactla import format_rational
from .lattice import IntersectionLattice
from .weights import WeightedArrangement
from .wonder import H2Class, OracleSweep

WIDTH = 120


# ====================== dicts ======================================

def flat_dict(lat: IntersectionLattice, flat: Flat) -> dict[str, Any]:
    arr = lat.arrangement
    out: dict[str, Any] = {
        "closure": list(flat.closure),
        "rank": flat.rank,
        "irreducible": lat.is_irreducible_flat(flat),
        "labels": [arr.label(i) for i in flat.closure],
    }
    if flat.rank == 2:
        out["multiplicity"] = len(flat.closure)
    return out


def lattice_dict(lat: IntersectionLattice, delta: tuple[int, int] | None = None) -> dict[str, Any]:
    arr = lat.arrangement
    out: dict[str, Any] = {
        "dim": lat.dim,
        "hyperplanes": [
            {"index": i, "label": arr.label(i), "normal": list(h.normal),
             "irreducible_rank2_flats": lat.rank2_count(i)}
            for i, h in enumerate(arr.hyperplanes)
        ],
        "essential": lat.is_essential,
        "irreducible": lat.is_irreducible,
        "flats_per_rank": {str(r): c for r, c in lat.counts().items()},
        "irreducible_per_rank": {str(r): c for r, c in lat.irreducible_counts().items()},
        "building_set_size": len(lat.irreducible_flats()),
        "flats": [flat_dict(lat, f) for f in lat.flats()],
    }
    if delta is not None:
        out["delta1"], out["delta2"] = delta
    return out


def check_dict(w: WeightedArrangement, report: CheckReport) -> dict[str, Any]:
    lat = w.lattice
    return {
        "verdict": report.verdict,
        "meta": {k: ({str(r): c for r, c in v.items()} if isinstance(v, dict) else v)
                 for k, v in report.meta.items()},
        "weights": [format_rational(x) for x in w.a],
        "cy": {
            "passed": report.cy.passed,
            "total": format_rational(report.cy.total),
            "target": report.cy.target,
        },
        "klt": {
            "passed": report.klt.passed,
            "scope": report.klt.scope,
            "min_margin": {str(r): format_rational(m) for r, m in sorted(report.klt.min_margin.items())},
            "violations": [
                {**flat_dict(lat, e.flat), "total": format_rational(e.total),
                 "margin": format_rational(e.margin)}
                for e in report.klt.violations
            ],
        },
        "quadratic": {
            "passed": report.quadratic.passed,
            "values": [
                {**flat_dict(lat, v.flat), "empty": v.is_empty, "Q": format_rational(v.value)}
                for v in report.quadratic.values
            ],
        },
    }


def h2_dict(cls: H2Class) -> dict[str, str]:
    return dict(cls.dump())


def coeff_dict(report: CoeffReport) -> dict[str, Any]:
    out: dict[str, Any] = {
        "name": report.name,
        "passed": report.passed,
        "constrained": report.constrained,
        "coordinates": [
            {"monomial": e.key.render(), "computed": format_rational(e.computed),
             "closed_form": format_rational(e.closed_form), "equal": e.equal,
             "compared": e.compared}
            for e in report.entries
        ],
    }
    if any(e.opposite is not None for e in report.entries):
        out["opposite_sign_disagreements"] = [
            e.key.render() for e in report.opposite_disagreements
        ]
    return out


def sweep_dict(sweep: OracleSweep) -> dict[str, Any]:
    return {
        "passed": sweep.passed,
        "monomials": sweep.monomials,
        "basis_size": sweep.basis_size,
        "quotient_dimension": sweep.quotient_dimension,
        "relation_failures": sweep.relation_failures,
        "mismatches": [
            {"monomial": m.render(), "table": dict(t.dump()), "oracle": dict(o.dump())}
            for m, t, o in sweep.mismatches
        ],
        "blowup_mismatches": [
            {"monomial": m.render(), "table": format_rational(t), "blowup": format_rational(b)}
            for m, t, b in sweep.blowup_mismatches
        ],
    }


# ====================== text =======================================

def _yes(flag: bool) -> str:
    return "yes" if flag else "no"


def _kv_table(title: str, rows: Iterable[tuple[str, Any]]) -> Table:
    tbl = Table(title=title)
    tbl.add_column("field", justify="right")
    tbl.add_column("value")
    for k, v in rows:
        tbl.add_row(k, str(v))
    return tbl


def _lattice_tables(d: dict[str, Any]) -> list[Table]:
    summary = [
        ("dim", d["dim"]),
        ("hyperplanes", len(d["hyperplanes"])),
        ("essential", _yes(d["essential"])),
        ("irreducible", _yes(d["irreducible"])),
        ("flats per rank", d["flats_per_rank"]),
        ("irreducible per rank", d["irreducible_per_rank"]),
        ("|G|", d["building_set_size"]),
    ]
    if "delta2" in d:
        summary += [("|Δ1|", d["delta1"]), ("|Δ2|", d["delta2"])]
    tables = [_kv_table("Arrangement", summary)]

    flats = Table(title="Flats")
    for col in ("rank", "closure", "hyperplanes", "irreducible", "multiplicity"):
        flats.add_column(col)
    for f in d["flats"]:
        flats.add_row(str(f["rank"]), str(f["closure"]), " ".join(f["labels"]),
                      _yes(f["irreducible"]), str(f.get("multiplicity", "")))
    tables.append(flats)
    return tables


def _check_tables(d: dict[str, Any]) -> list[Table]:
    tables = [_kv_table("Verdict", [
        ("verdict", _yes(d["verdict"])),
        ("Σ a_H", f"{d['cy']['total']} (target {d['cy']['target']})"),
        ("cy", _yes(d["cy"]["passed"])),
        ("klt", f"{_yes(d['klt']['passed'])} ({d['klt']['scope']} flats)"),
        ("quadratic", _yes(d["quadratic"]["passed"])),
        ("min klt margin", d["klt"]["min_margin"]),
    ])]
    if d["klt"]["violations"]:
        tbl = Table(title="klt violations")
        for col in ("rank", "closure", "Σ a_H", "margin"):
            tbl.add_column(col)
        for v in d["klt"]["violations"]:
            tbl.add_row(str(v["rank"]), str(v["closure"]), v["total"], v["margin"])
        tables.append(tbl)
    if d["quadratic"]["values"]:
        tbl = Table(title="Q_L on irreducible flats of rank ≥ 3")
        for col in ("rank", "closure", "Q"):
            tbl.add_column(col)
        for v in d["quadratic"]["values"]:
            tbl.add_row(str(v["rank"]), "∅" if v["empty"] else str(v["closure"]), v["Q"])
        tables.append(tbl)
    return tables


def _verify_tables(d: dict[str, Any]) -> list[Table]:
    tables = [_kv_table("Verification", [
        ("passed", _yes(d["passed"])),
        ("seed", d["seed"]),
        ("trials", d["trials"]),
        ("cy constrained", _yes(d["constrain_cy"])),
    ])]
    oracle = d["suites"].get("oracle")
    if oracle is not None:
        tables.append(_kv_table("Table vs presentation oracle", [
            ("passed", _yes(oracle["passed"])),
            ("monomials", oracle["monomials"]),
            ("|Δ2|", oracle["basis_size"]),
            ("quotient dimension", oracle["quotient_dimension"]),
            ("mismatches", len(oracle["mismatches"])),
            ("blowup mismatches", len(oracle["blowup_mismatches"])),
            ("relation failures", oracle["relation_failures"]),
        ]))
    if "eta" in d["suites"]:
        tbl = Table(title="η in the H² basis")
        for col in ("trial", "Σ a_H", "expected π*h", "class", "ok"):
            tbl.add_column(col)
        for t in d["suites"]["eta"]:
            body = ", ".join(f"{k}: {v}" for k, v in t["class"].items()) or "0"
            tbl.add_row(str(t["trial"]), t["total"], t["expected"], body, _yes(t["passed"]))
        tables.append(tbl)
    for name in ("omega", "parch2"):
        trials = d["suites"].get(name)
        if trials is None:
            continue
        tbl = Table(title=f"{name}: computed vs closed form")
        for col in ("trial", "monomial", "computed", "closed form", "equal"):
            tbl.add_column(col)
        for t in trials:
            for c in t["coordinates"]:
                mark = _yes(c["equal"]) if c["compared"] else "skipped"
                tbl.add_row(str(t["trial"]), c["monomial"], c["computed"], c["closed_form"], mark)
        tables.append(tbl)
        flips = [(t["trial"], t["opposite_sign_disagreements"]) for t in trials
                 if t.get("opposite_sign_disagreements")]
        if flips:
            tbl = Table(title=f"{name}: coordinates failing the +2B chain sign (not asserted)")
            tbl.add_column("trial")
            tbl.add_column("monomials")
            for trial, monos in flips:
                tbl.add_row(str(trial), ", ".join(monos))
            tables.append(tbl)
    return tables


_RENDERERS = {
    "lattice": _lattice_tables,
    "check": _check_tables,
    "verify": _verify_tables,
}


def render_text(kind: str, payload: dict[str, Any]) -> str:
    console = Console(record=True, width=WIDTH, file=io.StringIO(), color_system=None)
    for tbl in _RENDERERS[kind](payload):
        console.print(tbl)
    return console.export_text()
