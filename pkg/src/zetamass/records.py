"""Text formats for curves and alpha/beta tables."""

from __future__ import annotations

import json
from pathlib import Path

from .curvezeta import CurveData
from .zetassembly import AlphaBetaTable

__all__ = ["curve_from_text", "curve_to_text", "read_curve", "read_table"]


def curve_from_text(text: str) -> CurveData:
    """``{"q": 2, "g": 1, "numerator": [1, 0, 2]}`` or the same with
    ``"point_counts": [N_1, ..., N_g]`` in place of the numerator."""
    try:
        rec = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ValueError(f"curve file is not valid JSON: {exc}") from None
    if not isinstance(rec, dict) or "q" not in rec or "g" not in rec:
        raise ValueError("curve record needs q and g")
    q, g = int(rec["q"]), int(rec["g"])
    if "numerator" in rec:
        return CurveData(q, g, tuple(int(c) for c in rec["numerator"]))
    if "point_counts" in rec:
        return CurveData.from_counts(q, g, [int(c) for c in rec["point_counts"]])
    raise ValueError("curve record needs numerator or point_counts")


def curve_to_text(curve: CurveData) -> str:
    rec = {"q": curve.q, "g": curve.g, "numerator": list(curve.numerator)}
    return json.dumps(rec) + "\n"


def read_curve(path) -> CurveData:
    return curve_from_text(Path(path).read_text())


def read_table(path) -> AlphaBetaTable:
    text = Path(path).read_text()
    try:
        return AlphaBetaTable.from_text(text)
    except (KeyError, TypeError, json.JSONDecodeError) as exc:
        raise ValueError(f"malformed alpha/beta table: {exc}") from None
