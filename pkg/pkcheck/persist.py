"""
pkcheck.persist
===============

JSON files for arrangements, with or without weights::

    {"dim": 2, "hyperplanes": [[1, 0, 0], ...], "weights": ["1/3", ...], "labels": ["x", ...]}

``weights`` and ``labels`` are optional. Hyperplanes may come in any order
and any scaling; they are canonicalized on load and the weights and labels
follow them. Files are always written in canonical form (sorted keys,
two-space indent, trailing newline, rationals as ``"p/q"``), so loading and
saving a written file reproduces it byte for byte.

Paths ending in ``.gz`` are gzip-compressed transparently.
"""

from __future__ import annotations

import gzip
import json
from pathlib import Path
from typing import Any, Union

from .arrangement import Arrangement, canonicalize
from .exactla import as_rational, format_rational
from .exceptions import InputError, MalformedWeights, ParseError
from .weights import WeightedArrangement

_KEYS = {"dim", "hyperplanes", "weights", "labels"}


def _read_text(path: Union[str, Path]) -> str:
    p = Path(path)
    if not p.exists():
        raise InputError(f"no such file: {p}")
    try:
        if p.suffix == ".gz":
            with gzip.open(p, "rt", encoding="utf-8") as fh:
                return fh.read()
        return p.read_text(encoding="utf-8")
    except (OSError, UnicodeDecodeError) as e:
        raise ParseError(f"cannot read {p}: {e}") from None


def write_text(text: str, path: Union[str, Path]) -> None:
    """Write *text* to *path*, gzip-compressed when it ends in ``.gz``."""
    p = Path(path)
    try:
        if p.suffix == ".gz":
            # mtime=0 keeps the compressed bytes reproducible
            with open(p, "wb") as raw, gzip.GzipFile(fileobj=raw, mode="wb", mtime=0) as fh:
                fh.write(text.encode("utf-8"))
        else:
            p.write_text(text, encoding="utf-8")
    except OSError as e:
        raise InputError(f"cannot write {p}: {e}") from None


# ====================== dict <-> objects ===========================

def from_dict(data: Any) -> Arrangement | WeightedArrangement:
    if not isinstance(data, dict):
        raise ParseError("top-level JSON value must be an object")
    unknown = set(data) - _KEYS
    if unknown:
        raise ParseError(f"unknown keys: {sorted(unknown)}")
    for key in ("dim", "hyperplanes"):
        if key not in data:
            raise ParseError(f"missing key {key!r}")
    dim, normals = data["dim"], data["hyperplanes"]
    if isinstance(dim, bool) or not isinstance(dim, int):
        raise ParseError(f"'dim' must be an integer, got {dim!r}")
    if not isinstance(normals, list) or not all(isinstance(n, list) for n in normals):
        raise ParseError("'hyperplanes' must be a list of integer lists")
    if not normals:
        raise InputError("an arrangement needs at least one hyperplane")
    if dim < 1:
        raise InputError(f"projective dimension must be >= 1, got {dim}")

    hyps, order = canonicalize(dim, normals)

    labels = data.get("labels")
    if labels is not None:
        if not isinstance(labels, list) or not all(isinstance(x, str) for x in labels):
            raise ParseError("'labels' must be a list of strings")
        if len(labels) != len(normals):
            raise InputError(f"{len(labels)} labels for {len(normals)} hyperplanes")
        labels = tuple(labels[i] for i in order)
    arr = Arrangement(dim, tuple(hyps), labels)

    weights = data.get("weights")
    if weights is None:
        return arr
    if not isinstance(weights, list):
        raise ParseError("'weights' must be a list of rational strings")
    if len(weights) != len(normals):
        raise MalformedWeights(f"{len(weights)} weights for {len(normals)} hyperplanes")
    parsed = [as_rational(x) for x in weights]
    return WeightedArrangement(arr, tuple(parsed[i] for i in order))


def to_dict(obj: Arrangement | WeightedArrangement) -> dict[str, Any]:
    arr = obj.base if isinstance(obj, WeightedArrangement) else obj
    out: dict[str, Any] = {
        "dim": arr.dim,
        "hyperplanes": [list(h.normal) for h in arr.hyperplanes],
    }
    if arr.labels is not None:
        out["labels"] = list(arr.labels)
    if isinstance(obj, WeightedArrangement):
        out["weights"] = [format_rational(x) for x in obj.a]
    return out


def dumps_canonical(obj: Any) -> str:
    if isinstance(obj, (Arrangement, WeightedArrangement)):
        obj = to_dict(obj)
    return json.dumps(obj, sort_keys=True, indent=2, ensure_ascii=False) + "\n"


def loads(text: str) -> Arrangement | WeightedArrangement:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as e:
        raise ParseError(f"invalid JSON: {e}") from None
    return from_dict(data)


# ====================== files ======================================

def load_any(path: Union[str, Path]) -> Arrangement | WeightedArrangement:
    return loads(_read_text(path))


def load_arrangement(path: Union[str, Path]) -> Arrangement:
    """The arrangement stored in *path*; weights, if any, are dropped."""
    obj = load_any(path)
    return obj.base if isinstance(obj, WeightedArrangement) else obj


def load_weighted(path: Union[str, Path]) -> WeightedArrangement:
    obj = load_any(path)
    if not isinstance(obj, WeightedArrangement):
        raise MalformedWeights(f"{path} carries no 'weights'")
    return obj


def save(obj: Arrangement | WeightedArrangement, path: Union[str, Path]) -> None:
    write_text(dumps_canonical(obj), path)
