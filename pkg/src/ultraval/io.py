"""JSON file formats for valuations, prices, economies and allocations.

A valuation document looks like::

    {"items": ["x", "y", "z"],
     "values": {"": "0", "x": "5", "y": "10", "z": "15",
                "x,y": "25", "x,z": "20", "y,z": "35", "x,y,z": "35"}}

Bundle keys list item names in ground-set order joined by ``","``; every one
of the ``2**n`` keys must be present.  Values are strings holding an integer,
``"p/q"`` or a finite decimal, and are read exactly.
"""

from __future__ import annotations

import json
from pathlib import Path
from typing import Any

from .core import DomainError, GroundSet, PriceVector, Valuation, format_value, to_value
from .economy import Allocation, Economy


def _values_doc(v: Valuation) -> dict[str, str]:
    return {v.ground.key(m): format_value(x) for m, x in enumerate(v.table)}


def _parse_values(ground: GroundSet, values: Any) -> Valuation:
    if not isinstance(values, dict):
        raise DomainError('"values" must be an object')
    table: list = [None] * (1 << ground.n)
    for key, raw in values.items():
        if not isinstance(raw, str):
            raise DomainError(f"value for bundle {key!r} must be a string")
        names = key.split(",") if key else []
        m = ground.mask(names)
        if len(names) != m.bit_count():
            raise DomainError(f"repeated item in bundle key {key!r}")
        if key != ground.key(m):
            raise DomainError(f"bundle key {key!r} is not in ground-set order")
        table[m] = to_value(raw)
    missing = [ground.key(m) for m, x in enumerate(table) if x is None]
    if missing:
        raise DomainError(f"missing {len(missing)} bundle keys, e.g. {missing[0]!r}")
    return Valuation(ground, tuple(table))


def _items(doc: Any) -> GroundSet:
    if not isinstance(doc, dict) or not isinstance(doc.get("items"), list):
        raise DomainError('document must be an object with an "items" array')
    return GroundSet(tuple(doc["items"]))


def valuation_to_doc(v: Valuation) -> dict:
    return {"items": list(v.ground.items), "values": _values_doc(v)}


def valuation_from_doc(doc: Any) -> Valuation:
    return _parse_values(_items(doc), doc.get("values"))


def prices_to_doc(p: PriceVector) -> dict[str, str]:
    return {name: format_value(x) for name, x in zip(p.ground.items, p.prices)}


def prices_from_doc(doc: Any, ground: GroundSet) -> PriceVector:
    if not isinstance(doc, dict):
        raise DomainError("prices must be an object mapping items to values")
    for raw in doc.values():
        if not isinstance(raw, str):
            raise DomainError("prices must be value strings")
    return PriceVector.from_mapping(ground, {k: to_value(x) for k, x in doc.items()})


def economy_to_doc(e: Economy) -> dict:
    return {
        "items": list(e.ground.items),
        "agents": [{"name": name, "values": _values_doc(v)} for name, v in e.agents],
    }


def economy_from_doc(doc: Any) -> Economy:
    ground = _items(doc)
    agents = doc.get("agents")
    if not isinstance(agents, list):
        raise DomainError('economy needs an "agents" array')
    out = []
    for a in agents:
        if not isinstance(a, dict) or not isinstance(a.get("name"), str):
            raise DomainError("each agent needs a name and values")
        out.append((a["name"], _parse_values(ground, a.get("values"))))
    return Economy(ground, tuple(out))


def allocation_to_doc(e: Economy, a: Allocation) -> dict[str, list[str]]:
    return {name: list(e.ground.names(b)) for name, b in zip(e.names, a.bundles)}


def allocation_from_doc(doc: Any, e: Economy) -> Allocation:
    if not isinstance(doc, dict):
        raise DomainError("allocation must map agent names to item arrays")
    for bundle in doc.values():
        if not isinstance(bundle, list):
            raise DomainError("allocation bundles must be arrays of item names")
    counts: dict = {}
    for bundle in doc.values():
        for item in bundle:
            counts[item] = counts.get(item, 0) + 1
    if any(c > 1 for c in counts.values()):
        raise DomainError("an item is allocated twice")
    return Allocation.from_mapping(e, doc)


def read_json(path: str | Path) -> Any:
    with open(path, encoding="utf-8") as fh:
        try:
            return json.load(fh)
        except json.JSONDecodeError as exc:
            raise DomainError(f"{path}: invalid JSON ({exc})") from None


def dumps(doc: Any) -> str:
    return json.dumps(doc, indent=2, ensure_ascii=False) + "\n"


def load_valuation(path: str | Path) -> Valuation:
    return valuation_from_doc(read_json(path))


def save_valuation(v: Valuation, path: str | Path) -> None:
    Path(path).write_text(dumps(valuation_to_doc(v)), encoding="utf-8")


def load_economy(path: str | Path) -> Economy:
    return economy_from_doc(read_json(path))


def save_economy(e: Economy, path: str | Path) -> None:
    Path(path).write_text(dumps(economy_to_doc(e)), encoding="utf-8")
