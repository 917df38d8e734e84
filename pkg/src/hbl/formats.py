"""JSON reading and writing.

Scalars are strings (``"-3/2"``, ``"4"``); matrices are row-major nested
lists; spaces are ``{"dim": n, "basis": [...]}``.  A structure file holds a
``dim``/``basis`` header and whichever of ``unit``, ``prod``, ``counit``,
``coprod``, ``antipode`` it has.
"""

from __future__ import annotations

import json
from pathlib import Path

from .errors import ParseError
from .hopf import Bialgebra, HopfAlgebra
from .hopfbrace import HopfBrace
from .linalg import QQ, K, Morphism, Space, field_from_name, matrix, tensor_spaces
from .skewbrace import GroupTable, SkewBrace
from .structures import Algebra, Coalgebra, Module

__all__ = [
    "space_to_json", "space_from_json", "matrix_to_json", "matrix_from_json",
    "morphism_to_json", "structure_to_json", "structure_from_json",
    "brace_to_json", "brace_from_json", "skew_brace_to_json", "skew_brace_from_json",
    "module_to_json", "brace_module_to_json", "load", "loads", "dumps", "write",
]

_MAPS = ("unit", "prod", "counit", "coprod", "antipode")


def space_to_json(s: Space) -> dict:
    return {"dim": s.dim, "basis": list(s.labels())}


def space_from_json(d) -> Space:
    if isinstance(d, int):
        return Space(d)
    try:
        return Space(int(d["dim"]), d.get("basis"))
    except (KeyError, TypeError, ValueError) as exc:
        raise ParseError(f"bad space {d!r}: {exc}") from exc


def matrix_to_json(f: Morphism) -> list:
    fmt = f.field.format
    return [[fmt(x) for x in row] for row in f.mat]


def matrix_from_json(rows, dom: Space, cod: Space, field=QQ, what: str = "matrix") -> Morphism:
    if not isinstance(rows, list) or len(rows) != cod.dim or any(
            not isinstance(r, list) or len(r) != dom.dim for r in rows):
        raise ParseError(f"{what}: expected a {cod.dim} x {dom.dim} nested list")
    return matrix([[field.parse(str(x)) for x in r] for r in rows], dom, cod, field)


def morphism_to_json(f: Morphism) -> dict:
    return {"dom": space_to_json(f.dom), "cod": space_to_json(f.cod), "mat": matrix_to_json(f)}


def _shapes(H: Space) -> dict:
    HH = tensor_spaces(H, H)
    return {"unit": (K, H), "prod": (HH, H), "counit": (H, K), "coprod": (H, HH),
            "antipode": (H, H)}


def structure_to_json(s, name: str | None = None) -> dict:
    fld = next(getattr(s, m) for m in _MAPS if getattr(s, m, None) is not None).field
    out = {"field": fld.name, "name": name if name is not None else getattr(s, "name", ""),
           **space_to_json(s.space)}
    for m in _MAPS:
        f = getattr(s, m, None)
        if f is not None:
            out[m] = matrix_to_json(f)
    return out


def _field_of(d: dict, field):
    if field is not None:
        return field
    return field_from_name(d.get("field", "q"))


def structure_from_json(d: dict, field=None):
    """Algebra, Coalgebra, Bialgebra or HopfAlgebra depending on the keys present."""
    fld = _field_of(d, field)
    H = space_from_json(d)
    shapes = _shapes(H)
    maps = {m: matrix_from_json(d[m], *shapes[m], fld, m) for m in _MAPS if m in d}
    has_alg = "unit" in maps and "prod" in maps
    has_coalg = "counit" in maps and "coprod" in maps
    if has_alg and has_coalg:
        if "antipode" in maps:
            return HopfAlgebra(H, maps["unit"], maps["prod"], maps["counit"], maps["coprod"],
                               maps["antipode"], name=d.get("name", ""))
        return Bialgebra(H, maps["unit"], maps["prod"], maps["counit"], maps["coprod"])
    if has_alg:
        return Algebra(H, maps["unit"], maps["prod"])
    if has_coalg:
        return Coalgebra(H, maps["counit"], maps["coprod"])
    raise ParseError("structure needs unit+prod and/or counit+coprod")


def brace_to_json(b: HopfBrace) -> dict:
    def part(h):
        return {m: matrix_to_json(getattr(h, m)) for m in ("unit", "prod", "antipode")}

    return {"kind": "hopf-brace", "field": b.field.name, "name": b.name,
            **space_to_json(b.space),
            "coalgebra": {m: matrix_to_json(getattr(b.h1, m)) for m in ("counit", "coprod")},
            "h1": part(b.h1), "h2": part(b.h2)}


def brace_from_json(d: dict, field=None) -> HopfBrace:
    if "dot" in d:
        from .skewbrace import linearize

        return linearize(skew_brace_from_json(d), _field_of(d, field))
    try:
        base = {k: v for k, v in d.items() if k not in ("h1", "h2", "coalgebra")}
        h1 = structure_from_json({**base, **d["coalgebra"], **d["h1"]}, field)
        h2 = structure_from_json({**base, **d["coalgebra"], **d["h2"]}, field)
    except KeyError as exc:
        raise ParseError(f"brace file missing {exc}") from exc
    return HopfBrace(h1, h2, name=d.get("name", ""))


def skew_brace_to_json(s: SkewBrace) -> dict:
    return {"n": s.n, "name": s.name, "dot": [list(r) for r in s.dot.op],
            "circ": [list(r) for r in s.circ.op]}


def skew_brace_from_json(d: dict) -> SkewBrace:
    try:
        s = SkewBrace(GroupTable(d["dot"]), GroupTable(d["circ"]), name=d.get("name", ""))
    except (KeyError, TypeError, ValueError) as exc:
        raise ParseError(f"bad skew brace: {exc}") from exc
    if "n" in d and int(d["n"]) != s.n:
        raise ParseError(f"declared order {d['n']} but tables have {s.n} rows")
    return s


def module_to_json(m: Module, over=None) -> dict:
    return {"carrier": m.carrier.dim, "action": matrix_to_json(m.action),
            "over": over if over is not None else structure_to_json(m.over)}


def brace_module_to_json(m, brace=None) -> dict:
    return {"carrier": m.carrier.dim, "name": m.name, "act1": matrix_to_json(m.act1),
            "act2": matrix_to_json(m.act2),
            "brace": brace if brace is not None else brace_to_json(m.over)}


def _resolve(ref, base: Path | None):
    """A nested object given inline or as a path relative to ``base``."""
    if isinstance(ref, dict):
        return ref
    if isinstance(ref, str):
        p = Path(ref)
        if base is not None and not p.is_absolute():
            p = base / p
        return _read(p)
    raise ParseError(f"expected an object or a file path, got {type(ref).__name__}")


def _read(path: Path) -> dict:
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise ParseError(f"{path}: {exc.strerror}") from exc
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"{path}:{exc.lineno}:{exc.colno}: {exc.msg}") from exc


def loads(d: dict, field=None, base: Path | None = None):
    """Decode any supported object, dispatching on its keys."""
    from .modules import BraceModule

    if not isinstance(d, dict):
        raise ParseError("top level must be a JSON object")
    if "act1" in d:
        b = brace_from_json(_resolve(d["brace"], base), field)
        M = space_from_json(d["carrier"])
        HM = tensor_spaces(b.space, M)
        return BraceModule(M, matrix_from_json(d["act1"], HM, M, b.field, "act1"),
                           matrix_from_json(d["act2"], HM, M, b.field, "act2"), b,
                           name=d.get("name", ""))
    if "action" in d:
        over = structure_from_json(_resolve(d["over"], base), field)
        M = space_from_json(d["carrier"])
        return Module(M, matrix_from_json(d["action"], tensor_spaces(over.space, M), M,
                                          over.field, "action"), over)
    if "h1" in d or d.get("kind") == "hopf-brace":
        return brace_from_json(d, field)
    if "dot" in d:
        return skew_brace_from_json(d)
    return structure_from_json(d, field)


def load(path, field=None):
    path = Path(path)
    try:
        return loads(_read(path), field, path.parent)
    except ParseError as exc:
        if str(exc).startswith(str(path)):
            raise
        raise ParseError(f"{path}: {exc}") from exc


def dumps(obj) -> str:
    return json.dumps(obj, indent=1, ensure_ascii=False) + "\n"


def write(path, obj) -> None:
    Path(path).write_text(dumps(obj))
