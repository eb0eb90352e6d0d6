"""JSON codecs for valuations, canonical forms, trees, and points.

Field names are part of the wire format; every value printed re-parses to an
equal object.  Rationals travel as "p" or "p/q" strings, infinity as "inf",
projective directions as "[p:q]" with a primitive integer representative.
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import Dict, List, Optional, Tuple, Union

from .poly import IDENTITY_FRAME, LinearFrame
from .rationals import ExtRat, format_extrat, format_rat, is_inf, parse_extrat
from .tree import PathParam, RootedTree, TreePoint, FIPoint, FI_X, FI_Y, fi_seg
from .valuation import (
    CanonicalForm,
    Curve,
    Divisorial,
    INF_POINT,
    ProjPoint,
    QuasiMonomialVal,
)


class FormatError(ValueError):
    """Raised for malformed interchange data."""


def format_direction(d: ProjPoint) -> str:
    a, b = d.as_pair()
    return f"[{a}:{b}]"


_DIRECTION = re.compile(r"\A\[(-?\d+):(-?\d+)\]\Z")


def parse_direction(text: str) -> ProjPoint:
    m = _DIRECTION.match(text.strip())
    if not m:
        raise FormatError(f"malformed direction {text!r}")
    a, b = int(m.group(1)), int(m.group(2))
    if b == 0:
        if a == 0:
            raise FormatError("[0:0] is not a projective point")
        return INF_POINT
    return ProjPoint(Fraction(a, b))


def _center_str(p: ProjPoint) -> str:
    return "inf" if p.is_inf else format_rat(p.value)


def _center_from(text: str) -> ProjPoint:
    return ProjPoint(parse_extrat(text))


def valuation_to_json(nu: QuasiMonomialVal) -> dict:
    return {
        "steps": [{"center": _center_str(s)} for s in nu.steps],
        "frame": [[format_rat(v) for v in row] for row in nu.frame.rows],
        "weights": [format_extrat(w) for w in nu.weights],
    }


def valuation_from_json(data: dict) -> QuasiMonomialVal:
    if not isinstance(data, dict):
        raise FormatError("valuation must be a JSON object")
    try:
        steps = tuple(_center_from(s["center"]) for s in data.get("steps", ()))
        frame_rows = data.get("frame")
        frame = (
            IDENTITY_FRAME
            if frame_rows is None
            else LinearFrame(
                tuple(tuple(Fraction(v) for v in row) for row in frame_rows)
            )
        )
        weights = tuple(parse_extrat(w) for w in data.get("weights", ("1", "1")))
        if len(weights) != 2:
            raise FormatError("weights must be a pair")
        return QuasiMonomialVal(steps, frame, weights)
    except FormatError:
        raise
    except (KeyError, TypeError, ValueError, ZeroDivisionError) as exc:
        raise FormatError(f"malformed valuation: {exc}") from exc


def canonical_to_json(form: CanonicalForm) -> dict:
    t = form.terminal
    if isinstance(t, Divisorial):
        terminal = {"divisorial": format_rat(t.gamma)}
    else:
        terminal = {
            "curve": {
                "direction": format_direction(t.direction),
                "weight": format_rat(t.gamma),
            }
        }
    return {
        "steps": [{"center": _center_str(s)} for s in form.steps],
        "terminal": terminal,
    }


def canonical_from_json(data: dict) -> CanonicalForm:
    try:
        steps = tuple(_center_from(s["center"]) for s in data.get("steps", ()))
        t = data["terminal"]
        if "divisorial" in t:
            terminal: Union[Divisorial, Curve] = Divisorial(Fraction(t["divisorial"]))
        else:
            c = t["curve"]
            terminal = Curve(parse_direction(c["direction"]), Fraction(c["weight"]))
        return CanonicalForm(steps, terminal)
    except FormatError:
        raise
    except (KeyError, TypeError, ValueError) as exc:
        raise FormatError(f"malformed canonical form: {exc}") from exc


def rank2_values_to_json(wx: Tuple[int, Fraction], wy: Tuple[int, Fraction]) -> list:
    return [[str(w[0]), format_rat(w[1])] for w in (wx, wy)]


def rank2_values_from_json(data: list) -> Tuple[Tuple[int, Fraction], Tuple[int, Fraction]]:
    try:
        (a0, a1), (b0, b1) = data
        return (int(a0), Fraction(a1)), (int(b0), Fraction(b1))
    except (TypeError, ValueError) as exc:
        raise FormatError(f"malformed rank-2 values: {exc}") from exc


# ---------------------------------------------------------------------------
# trees and points
# ---------------------------------------------------------------------------


def tree_to_json(tree: RootedTree, psi_style: str = "arclength+1") -> dict:
    def node_obj(path) -> dict:
        kids = [
            {
                "edge": format_extrat(tree.edge_length(path + (i,))),
                "node": node_obj(path + (i,)),
            }
            for i in range(tree.n_children(path))
        ]
        return {"children": kids} if kids else {}

    return {"nodes": {"root": node_obj(())}, "psi": psi_style}


def tree_from_json(data: dict) -> Tuple[RootedTree, PathParam]:
    try:
        edges: Dict[tuple, ExtRat] = {}

        def walk(obj: dict, path: tuple) -> None:
            for i, kid in enumerate(obj.get("children", ())):
                edges[path + (i,)] = parse_extrat(kid["edge"])
                walk(kid.get("node", {}), path + (i,))

        walk(data["nodes"]["root"], ())
        tree = RootedTree(edges)
        return tree, PathParam(tree, data.get("psi", "arclength+1"))
    except FormatError:
        raise
    except (KeyError, TypeError, ValueError) as exc:
        raise FormatError(f"malformed tree: {exc}") from exc


def format_point(p: TreePoint) -> str:
    if p.is_root():
        return "root"
    path = "/".join(str(i) for i in p.path)
    if p.t == p.tree.edge_length(p.path):
        return path
    return f"{path}@{format_extrat(p.t)}"


def parse_point(tree: RootedTree, text: str) -> TreePoint:
    text = text.strip()
    if text == "root":
        return tree.root_point()
    body, sep, offset = text.partition("@")
    try:
        path = tuple(int(part) for part in body.split("/"))
        if sep:
            return tree.point(path, parse_extrat(offset))
        return tree.node_point(path)
    except (KeyError, ValueError) as exc:
        raise FormatError(f"malformed point {text!r}: {exc}") from exc


FORKED_INTERVAL_TAG = "forked-interval"


def is_poset_doc(data: dict) -> bool:
    return isinstance(data, dict) and data.get("poset") == FORKED_INTERVAL_TAG


def parse_fi_point(text: str) -> FIPoint:
    text = text.strip()
    if text in ("X", "x"):
        return FI_X
    if text in ("Y", "y"):
        return FI_Y
    try:
        return fi_seg(Fraction(text))
    except ValueError as exc:
        raise FormatError(f"malformed poset point {text!r}: {exc}") from exc


def format_fi_point(p: FIPoint) -> str:
    return p.kind.upper() if p.kind != "seg" else format_rat(p.t)
