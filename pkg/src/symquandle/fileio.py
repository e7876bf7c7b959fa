"""JSON file formats for quandles and involutions.

Quandle: ``{"size": n, "table": [[...], ...]}`` (optional ``"labels"``).
Involution: ``{"rho": [images...]}``.
"""

from __future__ import annotations

import hashlib
import json
from pathlib import Path

from .quandle import FormatError, Permutation, validate_quandle
from .symmetric import validate_good_involution
from .words import parse_presentation


def _read_json(path):
    try:
        return json.loads(Path(path).read_text())
    except json.JSONDecodeError as exc:
        raise FormatError(f"{path}: invalid JSON at line {exc.lineno}, column {exc.colno}") from None


def parse_quandle_json(obj, where="quandle"):
    if not isinstance(obj, dict):
        raise FormatError(f"{where}: expected a JSON object")
    extra = set(obj) - {"size", "table", "labels"}
    if extra or "size" not in obj or "table" not in obj:
        raise FormatError(f"{where}: expected keys 'size' and 'table', got {sorted(obj)}")
    size, table = obj["size"], obj["table"]
    if isinstance(size, bool) or not isinstance(size, int) or size < 1:
        raise FormatError(f"{where}: 'size' must be a positive integer")
    if not isinstance(table, list) or len(table) != size:
        raise FormatError(f"{where}: 'table' must have {size} rows")
    labels = obj.get("labels")
    if labels is not None and (not isinstance(labels, list) or len(labels) != size):
        raise FormatError(f"{where}: 'labels' must be a list of length {size}")
    return validate_quandle(table, labels)


def parse_involution_json(obj, q, where="rho"):
    if not isinstance(obj, dict) or set(obj) != {"rho"}:
        raise FormatError(f"{where}: expected an object with the single key 'rho'")
    im = obj["rho"]
    if not isinstance(im, list) or len(im) != q.size or any(
            isinstance(v, bool) or not isinstance(v, int) or not 0 <= v < q.size for v in im):
        raise FormatError(f"{where}: 'rho' must list {q.size} indices in 0..{q.size - 1}")
    try:
        perm = Permutation(im)
    except ValueError:
        raise FormatError(f"{where}: 'rho' is not a bijection") from None
    return validate_good_involution(q, perm)


def load_quandle_file(path, rho_path=None):
    """Load and validate a quandle, and optionally a good involution paired with it."""
    q = parse_quandle_json(_read_json(path), str(path))
    if rho_path is None:
        return q, None
    return q, parse_involution_json(_read_json(rho_path), q, str(rho_path))


def load_presentation_file(path):
    return parse_presentation(Path(path).read_text())


def quandle_to_json(q):
    out = q.to_json()
    if q.labels is not None:
        out["labels"] = list(q.labels)
    return out


def involution_to_json(rho):
    return {"rho": list(rho.images)}


def digest(path):
    return hashlib.sha256(Path(path).read_bytes()).hexdigest()
