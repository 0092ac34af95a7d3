"""JSON readers/writers for algebras, metrics, and deformation specs.

Algebra format (1-based indices, i < j, exact rational coefficients):
    {"name": str, "dim": n,
     "brackets": [{"i": 1, "j": 2, "k": 3, "c": "1/2"}, ...]}
Metric format: {"gram": [[...], ...]}; omitted metric means identity Gram.
DeformationSpec format: {"metric": <metric JSON>, "lambdas": [...]}.
"""

from __future__ import annotations

import json
from fractions import Fraction
from pathlib import Path

import numpy as np

from .algebra import NilpotentAlgebra


class FormatError(ValueError):
    """Malformed input file; message names the offending key."""


def algebra_to_dict(a: NilpotentAlgebra) -> dict:
    entries = []
    for (i, j) in sorted(a.brackets):
        for k in sorted(a.brackets[(i, j)]):
            c = a.brackets[(i, j)][k]
            entries.append({"i": i + 1, "j": j + 1, "k": k + 1, "c": str(c)})
    return {"name": a.name, "dim": a.n, "brackets": entries}


def algebra_from_dict(data: dict) -> NilpotentAlgebra:
    if "dim" not in data:
        raise FormatError("missing key 'dim'")
    n = data["dim"]
    if not isinstance(n, int) or n < 1:
        raise FormatError("key 'dim' must be a positive integer")
    brackets: dict[tuple[int, int], dict[int, Fraction]] = {}
    seen: set[tuple[int, int, int]] = set()
    for idx, entry in enumerate(data.get("brackets", [])):
        for key in ("i", "j", "k", "c"):
            if key not in entry:
                raise FormatError(f"brackets[{idx}]: missing key '{key}'")
        i, j, k = entry["i"], entry["j"], entry["k"]
        if not all(isinstance(v, int) and 1 <= v <= n for v in (i, j, k)):
            raise FormatError(f"brackets[{idx}]: indices must be in 1..{n}")
        if i >= j:
            raise FormatError(f"brackets[{idx}]: requires i < j, got i={i}, j={j}")
        if (i, j, k) in seen:
            raise FormatError(f"brackets[{idx}]: duplicate (i,j,k)=({i},{j},{k})")
        seen.add((i, j, k))
        try:
            c = Fraction(str(entry["c"]))
        except (ValueError, ZeroDivisionError) as exc:
            raise FormatError(f"brackets[{idx}]: bad coefficient 'c': {exc}")
        brackets.setdefault((i - 1, j - 1), {})[k - 1] = c
    return NilpotentAlgebra(n, brackets, name=data.get("name", ""))


def load_algebra(path: str | Path) -> NilpotentAlgebra:
    try:
        data = json.loads(Path(path).read_text())
    except json.JSONDecodeError as exc:
        raise FormatError(f"invalid JSON in {path}: {exc}")
    return algebra_from_dict(data)


def save_algebra(a: NilpotentAlgebra, path: str | Path) -> None:
    Path(path).write_text(json.dumps(algebra_to_dict(a), indent=2) + "\n")


def load_gram(path: str | Path | None, n: int) -> np.ndarray:
    if path is None:
        return np.eye(n)
    try:
        data = json.loads(Path(path).read_text())
    except json.JSONDecodeError as exc:
        raise FormatError(f"invalid JSON in {path}: {exc}")
    if "gram" not in data:
        raise FormatError("missing key 'gram'")
    g = np.asarray(data["gram"], dtype=float)
    if g.shape != (n, n):
        raise FormatError(f"key 'gram' must be {n}x{n}, got {g.shape}")
    return g


def load_deformation(path: str | Path, n: int) -> tuple[np.ndarray, np.ndarray]:
    """Returns (gram, lambdas)."""
    try:
        data = json.loads(Path(path).read_text())
    except json.JSONDecodeError as exc:
        raise FormatError(f"invalid JSON in {path}: {exc}")
    if "lambdas" not in data:
        raise FormatError("missing key 'lambdas'")
    lambdas = np.asarray(data["lambdas"], dtype=float)
    if lambdas.shape != (n,):
        raise FormatError(f"key 'lambdas' must have length {n}")
    if "metric" in data and data["metric"] is not None:
        g = np.asarray(data["metric"]["gram"], dtype=float)
        if g.shape != (n, n):
            raise FormatError(f"metric gram must be {n}x{n}")
    else:
        g = np.eye(n)
    return g, lambdas
