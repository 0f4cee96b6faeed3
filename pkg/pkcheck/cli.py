"""
pkcheck.cli
===========

Command-line front end.

Examples
--------
pkc gen braid 5 --weights braid:1/5,1/5,1/5,1/5,1/5 --out a4.json
pkc gen bm 3 --weights uniform --out b3.json
pkc gen seven-lines --weights seven:1/3,1/3,1/3
pkc gen generic 2 4 --seed 7

pkc lattice a4.json --format text
pkc check b3.json                       # exit 0: metric exists, 1: it does not
pkc verify a4.json --oracle --omega --pch2 --eta --trials 20 --seed 0 --cy

Exit codes: 0 success / verdict true, 1 verdict false or a failed
verification, 2 invalid input.
"""

from __future__ import annotations

import argparse
import logging
import os
import random
import sys
from dataclasses import dataclass
from pathlib import Path
from typing import Any, Sequence

from . import persist, report
from .arrangement import Arrangement
from .chern import eta, verify_identities
from .checker import braid_weights, check_theorem, seven_lines_weights, uniform_reflection_weights
from .exactla import as_rational, format_rational
from .exceptions import InputError, InternalInconsistency, PKError
from .generators import gen_bm, gen_braid, gen_generic, gen_seven_lines
from .lattice import cached_lattice, localize
from .log import configure_logging
from .weights import WeightedArrangement, random_weights
from .wonder import PI_H, H2Class, compare_with_oracle, wonderful_model

logger = logging.getLogger(__name__)

ENV_SEED = "PKCHECK_SEED"
ENV_TRIALS = "PKCHECK_TRIALS"
DEFAULT_SEED = 0
DEFAULT_TRIALS = 20


# -------------------------------------------------------------------
# configuration
# -------------------------------------------------------------------
def _env_int(name: str, default: int) -> int:
    raw = os.environ.get(name)
    if raw is None or not raw.strip():
        return default
    try:
        return int(raw)
    except ValueError:
        raise InputError(f"{name} must be an integer, got {raw!r}") from None


@dataclass(frozen=True)
class RunConfig:
    command: str
    input: Path | None = None
    out: Path | None = None
    fmt: str = "json"
    seed: int = DEFAULT_SEED
    trials: int = DEFAULT_TRIALS
    cy: bool = False
    verbosity: int = 0

    @classmethod
    def from_args(cls, args: argparse.Namespace) -> RunConfig:
        seed = getattr(args, "seed", None)
        trials = getattr(args, "trials", None)
        if seed is None:
            seed = _env_int(ENV_SEED, DEFAULT_SEED)
        if trials is None:
            trials = _env_int(ENV_TRIALS, DEFAULT_TRIALS)
        if trials < 0:
            raise InputError(f"trials must be >= 0, got {trials}")
        inp = getattr(args, "input", None)
        return cls(
            command=args.cmd,
            input=Path(inp) if inp else None,
            out=Path(args.out) if args.out else None,
            fmt=args.format,
            seed=seed,
            trials=trials,
            cy=getattr(args, "cy", False),
            verbosity=-1 if args.quiet else args.verbose,
        )


def _emit(cfg: RunConfig, kind: str, payload: dict[str, Any]) -> None:
    if cfg.fmt == "text" and kind in ("lattice", "check", "verify"):
        text = report.render_text(kind, payload)
    else:
        text = persist.dumps_canonical(payload)
    if cfg.out is None:
        sys.stdout.write(text)
    else:
        persist.write_text(text, cfg.out)


def _int_list(raw: str) -> list[int]:
    try:
        return [int(x) for x in raw.split(",") if x.strip()]
    except ValueError:
        raise InputError(f"expected comma-separated integers, got {raw!r}") from None


# ====================== command handlers ===========================

def _attach_weights(family: str, arr: Arrangement, choice: str) -> WeightedArrangement:
    kind, _, rest = choice.partition(":")
    if kind == "uniform" and not rest:
        return WeightedArrangement(arr, uniform_reflection_weights(arr))
    if kind == "braid" and rest:
        if family != "braid":
            raise InputError("braid:... weights only apply to the braid family")
        return WeightedArrangement(arr, braid_weights(rest.split(",")))
    if kind == "seven" and rest:
        if family != "seven-lines":
            raise InputError("seven:... weights only apply to the seven-lines family")
        return WeightedArrangement(arr, seven_lines_weights(rest.split(",")))
    return WeightedArrangement(arr, tuple(as_rational(x) for x in choice.split(",")))


def _cmd_gen(cfg: RunConfig, args) -> int:
    family, params = args.family, args.params
    expected = {"braid": 1, "bm": 1, "seven-lines": 0, "generic": 2}[family]
    if len(params) != expected:
        raise InputError(f"{family} takes {expected} integer parameter(s), got {len(params)}")
    if family == "braid":
        arr = gen_braid(params[0])
    elif family == "bm":
        arr = gen_bm(params[0])
    elif family == "seven-lines":
        arr = gen_seven_lines()
    else:
        arr = gen_generic(params[0], params[1], seed=cfg.seed)
    obj = arr if args.weights is None else _attach_weights(family, arr, args.weights)
    logger.info("generated %s with %d hyperplanes", family, len(arr.hyperplanes))
    if cfg.out is None:
        sys.stdout.write(persist.dumps_canonical(obj))
    else:
        persist.save(obj, cfg.out)
    return 0


def _delta_sizes(lat) -> tuple[int, int] | None:
    if lat.dim < 2 or not lat.is_essential or not lat.is_irreducible:
        return None
    model = wonderful_model(lat)
    return len(model.enumerate_delta(1)), len(model.enumerate_delta(2))


def _cmd_lattice(cfg: RunConfig, args) -> int:
    arr = persist.load_arrangement(cfg.input)
    lat = cached_lattice(arr)
    payload = report.lattice_dict(lat, _delta_sizes(lat))
    if args.flat:
        flat = lat.find(_int_list(args.flat))
        local, mapping = localize(lat, flat).essentialize()
        payload["localization"] = {
            "flat": report.flat_dict(lat, flat),
            "arrangement": persist.to_dict(local),
            "index_map": {str(k): v for k, v in sorted(mapping.items())},
        }
    _emit(cfg, "lattice", payload)
    return 0


def _cmd_check(cfg: RunConfig, args) -> int:
    w = persist.load_weighted(cfg.input)
    result = check_theorem(w, klt_irreducible_only=args.klt_irreducible_only)
    _emit(cfg, "check", report.check_dict(w, result))
    return 0 if result.verdict else 1


def _trial_weights(cfg: RunConfig, obj) -> list[WeightedArrangement]:
    arr = obj.base if isinstance(obj, WeightedArrangement) else obj
    out = [obj] if isinstance(obj, WeightedArrangement) else []
    rnd = random.Random(cfg.seed)
    for _ in range(cfg.trials):
        out.append(WeightedArrangement(arr, random_weights(arr, rnd, cy=cfg.cy)))
    if not out:
        raise InputError("no weights in the file and --trials 0: nothing to verify")
    return out


def _cmd_verify(cfg: RunConfig, args) -> int:
    obj = persist.load_any(cfg.input)
    arr = obj.base if isinstance(obj, WeightedArrangement) else obj
    model = wonderful_model(cached_lattice(arr))
    suites = {s for s in ("oracle", "omega", "pch2", "eta") if getattr(args, s)}
    if not suites:
        suites = {"oracle", "omega", "pch2", "eta"}

    results: dict[str, Any] = {}
    passed = True
    if "oracle" in suites:
        sweep = compare_with_oracle(model)
        results["oracle"] = report.sweep_dict(sweep)
        passed &= sweep.passed

    if suites & {"omega", "pch2", "eta"}:
        trials = _trial_weights(cfg, obj)
        logger.info("verifying %d weight vector(s), seed %d", len(trials), cfg.seed)
        for t, w in enumerate(trials):
            if "eta" in suites:
                cls = eta(w)
                expected = H2Class({PI_H: model.n + 1 - w.total})
                results.setdefault("eta", []).append({
                    "trial": t,
                    "weights": [format_rational(x) for x in w.a],
                    "total": format_rational(w.total),
                    "expected": format_rational(model.n + 1 - w.total),
                    "class": report.h2_dict(cls),
                    "passed": cls == expected,
                })
                passed &= cls == expected
            if suites & {"omega", "pch2"}:
                omega, pch2 = verify_identities(w, constrain_cy=cfg.cy)
                for flag, rep in (("omega", omega), ("pch2", pch2)):
                    if flag in suites:
                        results.setdefault(rep.name, []).append({"trial": t, **report.coeff_dict(rep)})
                        passed &= rep.passed

    _emit(cfg, "verify", {
        "passed": passed,
        "seed": cfg.seed,
        "trials": cfg.trials,
        "constrain_cy": cfg.cy,
        "suites": results,
    })
    return 0 if passed else 1


# ====================== argument parser ============================

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "text"), default="json",
                        help="output format (default: json)")
    common.add_argument("--out", default=None, help="write output to PATH instead of stdout")
    common.add_argument("-v", "--verbose", action="count", default=0,
                        help="more logging on stderr (repeatable)")
    common.add_argument("-q", "--quiet", action="store_true", help="errors only")

    parser = argparse.ArgumentParser(
        prog="pkc",
        description="Exact checks for polyhedral Kähler metrics on weighted arrangements",
    )
    sub = parser.add_subparsers(dest="cmd", required=True)

    p = sub.add_parser("gen", parents=[common], help="Write a named arrangement family")
    p.add_argument("family", choices=("braid", "bm", "seven-lines", "generic"))
    p.add_argument("params", nargs="*", type=int,
                   help="braid K | bm M | generic N K")
    p.add_argument("--weights", default=None,
                   help="uniform | braid:a1,...,ak | seven:α1,α2,α3 | p/q,... (canonical order)")
    p.add_argument("--seed", type=int, default=None, help="seed for the generic family")
    p.set_defaults(func=_cmd_gen)

    p = sub.add_parser("lattice", parents=[common], help="Describe the intersection lattice")
    p.add_argument("input")
    p.add_argument("--flat", default=None,
                   help="comma-separated hyperplane indices; also print its localization")
    p.set_defaults(func=_cmd_lattice)

    p = sub.add_parser("check", parents=[common], help="Decide existence of the metric")
    p.add_argument("input")
    p.add_argument("--klt-irreducible-only", action="store_true",
                   help="scan only irreducible flats for the klt condition")
    p.set_defaults(func=_cmd_check)

    p = sub.add_parser("verify", parents=[common], help="Exact cohomology identities")
    p.add_argument("input")
    p.add_argument("--oracle", action="store_true", help="reduction table vs presentation")
    p.add_argument("--omega", action="store_true", help="Ohtsuki class vs closed form")
    p.add_argument("--pch2", action="store_true", help="second Chern character vs closed form")
    p.add_argument("--eta", action="store_true", help="first Chern identity")
    p.add_argument("--trials", type=int, default=None,
                   help=f"random weight vectors (default: ${ENV_TRIALS} or {DEFAULT_TRIALS})")
    p.add_argument("--seed", type=int, default=None,
                   help=f"random seed (default: ${ENV_SEED} or {DEFAULT_SEED})")
    p.add_argument("--cy", action="store_true",
                   help="require Σ a_H = n+1 and compare every coordinate")
    p.set_defaults(func=_cmd_verify)

    return parser


# ====================== entry point ================================

def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        cfg = RunConfig.from_args(args)
        configure_logging(cfg.verbosity)
        return args.func(cfg, args)
    except InputError as e:
        print("Error:", e, file=sys.stderr)
        return 2
    except InternalInconsistency as e:
        print("Internal inconsistency:", e, file=sys.stderr)
        return 1
    except PKError as e:
        print("Error:", e, file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
