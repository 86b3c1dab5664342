"""JSON field documents.

A document looks like::

    {"dim": 3, "order": 2, "variance": "cc",
     "components": {"11": "2 x1", "12": "1/2 x2", "21": "1/2 x2"}}

Index strings are 1-based digits, one per slot.  Omitted components are
zero; an order-0 field uses the single key ``""``.
"""
from __future__ import annotations

import json
from pathlib import Path
from typing import Any

from .polynomial import ParseError, Polynomial, coordinates, format_polynomial, parse_polynomial
from .tensor import TensorField, flat_index


def field_from_document(doc: Any) -> TensorField:
    if not isinstance(doc, dict):
        raise ParseError("field document must be a JSON object")
    try:
        n = int(doc["dim"])
        k = int(doc["order"])
    except (KeyError, TypeError, ValueError) as exc:
        raise ParseError(f"bad or missing dim/order: {exc}") from None
    if n < 1 or n > 9 or k < 0:
        raise ParseError(f"unsupported dim={n}, order={k}")
    variance = doc.get("variance", "c" * k)
    if not isinstance(variance, str) or len(variance) != k or set(variance) - {"c", "v"}:
        raise ParseError(f"variance must be {k} characters from 'c'/'v', got {variance!r}")
    raw = doc.get("components", {})
    if not isinstance(raw, dict):
        raise ParseError("components must be an object")
    ctx = coordinates(n)
    comps = [Polynomial.zero(ctx)] * (n**k)
    for key, text in raw.items():
        if len(key) != k or not all(ch.isdigit() and 1 <= int(ch) <= n for ch in key):
            raise ParseError(f"bad index string {key!r} for dim={n}, order={k}")
        if not isinstance(text, (str, int)):
            raise ParseError(f"component {key!r} must be a polynomial string")
        idx = tuple(int(ch) - 1 for ch in key)
        comps[flat_index(idx, n)] = parse_polynomial(str(text), ctx)
    return TensorField(n, variance, comps)


def field_to_document(T: TensorField) -> dict:
    comps = {
        "".join(str(i + 1) for i in idx): format_polynomial(p) for idx, p in sorted(T.nonzero().items())
    }
    return {"dim": T.dim, "order": T.order, "variance": T.variance, "components": comps}


def loads_field(text: str) -> TensorField:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc}") from None
    return field_from_document(doc)


def dumps_field(T: TensorField, indent: int | None = 2) -> str:
    return json.dumps(field_to_document(T), indent=indent)


def load_field(path: str | Path) -> TensorField:
    return loads_field(Path(path).read_text())
