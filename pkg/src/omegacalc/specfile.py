"""Reading and writing matroid spec files and point batch files.

A matroid spec is a JSON object with a "kind" field; subsets are sorted
0-indexed element lists.  Kinds and their fields:

    {"kind": "bases", "n": 4, "bases": [[0,1], [2,3], ...]}
    {"kind": "uniform", "n": 6, "r": 2}
    {"kind": "schubert_lower", "n": 10,
     "chain": [[0,1], [0,...,6], [0,...,9]], "profile": [0,1,3,4]}
    {"kind": "schubert_upper",  ... same fields ...}
    {"kind": "schubert_order", "n": 10, "order": [0,...,9], "set": [0,2,3,7]}
    {"kind": "dual", "of": {...}}
    {"kind": "delete", "set": [...], "of": {...}}
    {"kind": "contract", "set": [...], "of": {...}}
    {"kind": "direct_sum", "parts": [{...}, {...}, ...]}

The chain lists the nonempty members ending with the full ground set; the
profile starts at 0 and has one more entry than the chain.  Kinds nest
arbitrarily through "of"/"parts".  An optional "id" names the matroid.

A corpus file is JSON lines: one spec object per line.  A point batch
file is a JSON list of coordinate arrays, each coordinate a
[numerator, denominator] pair.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path

from .bitops import elements_of, mask_of
from .errors import OmegacalcError, SpecFileError
from .matroid import (
    Matroid,
    from_bases,
    schubert_from_order,
    schubert_lower,
    schubert_upper,
    uniform,
)

SchubertData = tuple[int, tuple[int, ...], tuple[int, ...]]


@dataclass(frozen=True)
class LoadedMatroid:
    matroid_id: str
    matroid: Matroid
    schubert: SchubertData | None = None


def _as_mask(obj, n: int, what: str) -> int:
    if not isinstance(obj, list) or not all(
        isinstance(e, int) and 0 <= e < n for e in obj
    ):
        raise SpecFileError(f"{what} must be a list of elements in [0, {n})")
    if len(set(obj)) != len(obj):
        raise SpecFileError(f"{what} has repeated elements")
    return mask_of(obj)


def _require(obj: dict, key: str, kind: str):
    if key not in obj:
        raise SpecFileError(f"kind {kind!r} requires field {key!r}")
    return obj[key]


def matroid_from_spec(obj: dict) -> LoadedMatroid:
    if not isinstance(obj, dict):
        raise SpecFileError("matroid spec must be a JSON object")
    kind = obj.get("kind")
    matroid_id = str(obj.get("id", ""))
    try:
        matroid, schubert = _build(obj, kind)
    except SpecFileError:
        raise
    except OmegacalcError as exc:
        raise SpecFileError(f"invalid matroid spec ({kind}): {exc}") from exc
    return LoadedMatroid(matroid_id, matroid, schubert)


def _build(obj: dict, kind) -> tuple[Matroid, SchubertData | None]:
    if kind == "bases":
        n = _require(obj, "n", kind)
        bases = _require(obj, "bases", kind)
        if not isinstance(bases, list):
            raise SpecFileError("bases must be a list of subsets")
        return from_bases(n, [_as_mask(b, n, "basis") for b in bases]), None
    if kind == "uniform":
        n = _require(obj, "n", kind)
        return uniform(_require(obj, "r", kind), n), None
    if kind in ("schubert_lower", "schubert_upper"):
        n = _require(obj, "n", kind)
        chain = tuple(
            _as_mask(s, n, "chain member") for s in _require(obj, "chain", kind)
        )
        profile = tuple(_require(obj, "profile", kind))
        if not all(isinstance(a, int) for a in profile):
            raise SpecFileError("profile must be a list of integers")
        if kind == "schubert_lower":
            return schubert_lower(n, chain, profile), (n, chain, profile)
        matroid = schubert_upper(n, chain, profile)
        full = (1 << n) - 1
        r = profile[-1]
        rev_chain = tuple(full & ~s for s in reversed((0, *chain[:-1])))
        rev_profile = tuple(r - a for a in reversed(profile))
        return matroid, (n, rev_chain, rev_profile)
    if kind == "schubert_order":
        n = _require(obj, "n", kind)
        order = _require(obj, "order", kind)
        if sorted(order) != list(range(n)):
            raise SpecFileError("order must be a permutation of range(n)")
        subset = _as_mask(_require(obj, "set", kind), n, "set")
        matroid = schubert_from_order(order, subset)
        chain = tuple(mask_of(order[: i + 1]) for i in range(n))
        profile = tuple(
            len([e for e in order[:i] if subset >> e & 1]) for i in range(n + 1)
        )
        return matroid, (n, chain, profile)
    if kind == "dual":
        inner, _ = _build_of(obj, kind)
        return inner.dual(), None
    if kind in ("delete", "contract"):
        inner, _ = _build_of(obj, kind)
        mask = _as_mask(_require(obj, "set", kind), inner.n, "set")
        return (inner.delete(mask) if kind == "delete" else inner.contract(mask)), None
    if kind == "direct_sum":
        parts = _require(obj, "parts", kind)
        if not isinstance(parts, list) or len(parts) < 2:
            raise SpecFileError("direct_sum needs at least two parts")
        built = [_build(p, p.get("kind"))[0] for p in parts]
        out = built[0]
        for nxt in built[1:]:
            out = out.direct_sum(nxt)
        return out, None
    raise SpecFileError(f"unknown matroid kind {kind!r}")


def _build_of(obj: dict, kind: str) -> tuple[Matroid, None]:
    inner = _require(obj, "of", kind)
    if not isinstance(inner, dict):
        raise SpecFileError(f"{kind}: field 'of' must be a matroid spec object")
    return _build(inner, inner.get("kind"))[0], None


def spec_to_json(obj: dict) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":"))


def mask_to_list(mask: int) -> list[int]:
    return elements_of(mask)


def load_matroid_file(path: str | Path) -> list[LoadedMatroid]:
    """Load a single-spec JSON file or a JSON-lines corpus."""
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as exc:
        raise SpecFileError(f"cannot read {path}: {exc}") from exc
    stripped = text.strip()
    if not stripped:
        return []
    try:
        parsed = json.loads(stripped)
        objs = parsed if isinstance(parsed, list) else [parsed]
    except json.JSONDecodeError:
        objs = []
        for i, line in enumerate(stripped.splitlines(), 1):
            line = line.strip()
            if not line:
                continue
            try:
                objs.append(json.loads(line))
            except json.JSONDecodeError as exc:
                raise SpecFileError(f"{path}:{i}: invalid JSON: {exc}") from exc
    out = []
    for i, obj in enumerate(objs):
        loaded = matroid_from_spec(obj)
        if not loaded.matroid_id:
            suffix = f"#{i}" if len(objs) > 1 else ""
            loaded = LoadedMatroid(
                f"{path.stem}{suffix}", loaded.matroid, loaded.schubert
            )
        out.append(loaded)
    return out


def load_points_file(path: str | Path) -> list[tuple[Fraction, ...]]:
    path = Path(path)
    try:
        data = json.loads(path.read_text(encoding="utf-8"))
    except (OSError, json.JSONDecodeError) as exc:
        raise SpecFileError(f"cannot read point batch {path}: {exc}") from exc
    if not isinstance(data, list):
        raise SpecFileError("point batch must be a JSON list of points")
    points = []
    for row in data:
        if not isinstance(row, list):
            raise SpecFileError("each point must be a list of [num, den] pairs")
        coords = []
        for pair in row:
            if (
                not isinstance(pair, list)
                or len(pair) != 2
                or not all(isinstance(v, int) for v in pair)
                or pair[1] == 0
            ):
                raise SpecFileError("each coordinate must be [numerator, denominator]")
            coords.append(Fraction(pair[0], pair[1]))
        points.append(tuple(coords))
    return points
