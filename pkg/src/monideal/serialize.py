"""JSON persistence for ideals and decompositions.

Ideal::

    {"d": 2, "mode": "Q", "boxes": [{"alpha": ["1", "3/2"], "strict": [false, true]}]}

Decomposition (sparse map per component, 1-based variable keys)::

    {"d": 3, "mode": "Q", "components": [{"1": {"alpha": "1", "strict": false}}]}
"""

from __future__ import annotations

import json

from .decompose import Decomposition
from .exponent import INF, AmbientConfig, Mode, format_exponent, parse_extended, parse_rational
from .ideal import Box, Ideal, PurePowerIdeal


def _cfg_dict(cfg: AmbientConfig) -> dict:
    return {"d": cfg.d, "mode": cfg.mode.value}


def config_from_dict(data: dict) -> AmbientConfig:
    return AmbientConfig(int(data["d"]), Mode(data.get("mode", "Q")))


def ideal_to_dict(ideal: Ideal) -> dict:
    return {
        **_cfg_dict(ideal.cfg),
        "boxes": [
            {"alpha": [format_exponent(a) for a in b.alpha], "strict": list(b.strict)}
            for b in ideal.boxes
        ],
    }


def ideal_from_dict(data: dict) -> Ideal:
    cfg = config_from_dict(data)
    boxes = []
    for entry in data["boxes"]:
        alpha = tuple(parse_rational(a) for a in entry["alpha"])
        strict = tuple(bool(e) for e in entry.get("strict", [False] * len(alpha)))
        boxes.append(Box(alpha, strict))
    return Ideal(boxes, cfg)


def component_to_dict(component: PurePowerIdeal) -> dict:
    return {
        str(i): {"alpha": format_exponent(a), "strict": e}
        for i, (a, e) in component.entries().items()
    }


def component_from_dict(data: dict, d: int) -> PurePowerIdeal:
    entries = {}
    for key, value in data.items():
        a = parse_extended(value["alpha"])
        if a != INF:
            entries[int(key)] = (a, bool(value.get("strict", False)))
    return PurePowerIdeal.from_map(d, entries)


def decomposition_to_dict(dec: Decomposition) -> dict:
    return {
        **_cfg_dict(dec.source.cfg),
        "components": [component_to_dict(c) for c in dec.components],
    }


def dumps(obj, **kwargs) -> str:
    if isinstance(obj, Ideal):
        obj = ideal_to_dict(obj)
    elif isinstance(obj, Decomposition):
        obj = decomposition_to_dict(obj)
    return json.dumps(obj, **kwargs)


def loads_ideal(text: str) -> Ideal:
    return ideal_from_dict(json.loads(text))
