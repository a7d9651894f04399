"""JSON configuration for the command line.

A config names a field, a presentation (explicit or from a builder), the
generators of the character group and a monomial::

    {
      "field": {"kind": "cyclotomic", "m": 4},
      "presentation": {
        "grouplikes": [{"name": "g", "order": 0}],
        "skewprims": [{"name": "h", "g": "g", "gp": "1"}]
      },
      "group": {"generators": [{"g": "zeta", "h": "1"}], "cap": 64},
      "monomial": "h"
    }

Instead of "presentation" a config may give "builder" plus the builder's
parameters at top level, e.g. ``"builder": "uql", "rank": 2, "l": 4``.
Field elements are integers, fractions or polynomial expressions in
``zeta`` (the field generator; ``x`` is accepted for extension fields).
"""

from __future__ import annotations

import ast
import json
import re
from dataclasses import dataclass
from typing import Any

from . import constructions, hecke, qexamples
from .errors import CharsumError, ParseError
from .group import FiniteGroup
from .hopf import (
    Constraint,
    HopfPresentation,
    Monomial,
    character_group,
    default_cap,
    validate_character,
)
from .ring import (
    Field,
    FieldElement,
    cyclotomic,
    default_modulus,
    extension_field,
    prime_field,
    rational,
)


@dataclass
class Config:
    field: Field
    presentation: HopfPresentation
    generators: list
    cap: int
    monomial: str | None

    def group(self, cap: int | None = None) -> FiniteGroup:
        return character_group(self.generators, cap=cap or self.cap)


def load_text(text: str, source: str = "<config>") -> Config:
    try:
        raw = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"{source}:{exc.lineno}:{exc.colno}: {exc.msg}") from None
    if not isinstance(raw, dict):
        raise ParseError(f"{source}:1:1: top level must be an object")
    try:
        return _build(raw)
    except _Located as exc:
        line, col = _locate(text, exc.path)
        raise ParseError(f"{source}:{line}:{col}: at {exc.path}: {exc.msg}") from None


class _Located(Exception):
    def __init__(self, path: str, msg: str):
        super().__init__(msg)
        self.path, self.msg = path, msg


def _locate(text: str, path: str) -> tuple[int, int]:
    """Line and column of the last key named in ``path`` (best effort)."""
    keys = re.findall(r"[A-Za-z_][\w]*", path)
    pos = 0
    for key in keys:
        hit = text.find(f'"{key}"', pos)
        if hit >= 0:
            pos = hit
    line = text.count("\n", 0, pos) + 1
    col = pos - (text.rfind("\n", 0, pos) + 1) + 1
    return line, col


def _at(path: str, fn, *args):
    try:
        return fn(*args)
    except _Located:
        raise
    except (CharsumError, ValueError, TypeError, KeyError) as exc:
        raise _Located(path, str(exc) or type(exc).__name__) from None


def _build(raw: dict) -> Config:
    if "field" not in raw:
        raise _Located("field", "missing")
    fld = _at("field", parse_field, raw["field"])
    if "builder" in raw:
        params = {k: v for k, v in raw.items()
                  if k not in ("field", "builder", "group", "monomial", "presentation")}
        P = _at("builder", make_builder, raw["builder"], params, fld)
    elif "presentation" in raw:
        P = _at("presentation", parse_presentation, raw["presentation"])
    else:
        raise _Located("presentation", "need \"presentation\" or \"builder\"")
    group = raw.get("group", {})
    if not isinstance(group, dict):
        raise _Located("group", "must be an object")
    gens_raw = group.get("generators", [])
    if not isinstance(gens_raw, list) or not gens_raw:
        raise _Located("group.generators", "need a non-empty list")
    gens = []
    for i, g in enumerate(gens_raw):
        path = f"group.generators[{i}]"
        if not isinstance(g, dict):
            raise _Located(path, "each generator is an object name -> value")
        vals = {k: _at(f"{path}.{k}", parse_element, fld, v) for k, v in g.items()}
        gens.append(_at(path, validate_character, P, fld, vals))
    cap = group.get("cap", default_cap())
    if not isinstance(cap, int) or cap < 1:
        raise _Located("group.cap", "must be a positive integer")
    mono = raw.get("monomial")
    if mono is not None:
        _at("monomial", P.monomial, mono)
    return Config(fld, P, gens, min(cap, default_cap()), mono)


# ------------------------------------------------------------------- fields

_SHORT = [
    (re.compile(r"^Q$"), lambda m: rational()),
    (re.compile(r"^Q\(zeta_(\d+)\)$"), lambda m: cyclotomic(int(m[1]))),
    (re.compile(r"^F_(\d+)$"), lambda m: prime_field(int(m[1]))),
    (re.compile(r"^F_(\d+)\^(\d+)$"),
     lambda m: extension_field(int(m[1]), default_modulus(int(m[1]), int(m[2])))),
]


def parse_field(spec: Any) -> Field:
    """``{"kind": ...}`` object or shorthand ``Q``, ``Q(zeta_12)``, ``F_7``, ``F_2^3``."""
    if isinstance(spec, str):
        text = spec.replace(" ", "")
        for rx, make in _SHORT:
            m = rx.match(text)
            if m:
                return make(m)
        raise ParseError(f"unknown field {spec!r}")
    if not isinstance(spec, dict) or "kind" not in spec:
        raise ParseError("field must be a shorthand string or an object with \"kind\"")
    kind = spec["kind"]
    if kind == "rational":
        return rational()
    if kind == "cyclotomic":
        return cyclotomic(int(spec["m"]))
    if kind == "prime":
        return prime_field(int(spec["p"]))
    if kind == "prime_ext":
        p = int(spec["p"])
        modulus = spec.get("modulus") or default_modulus(p, int(spec["degree"]))
        return extension_field(p, modulus)
    raise ParseError(f"unknown field kind {kind!r}")


def field_to_json(fld: Field) -> dict:
    s = fld.spec
    if s.kind == "rational":
        return {"kind": "rational"}
    if s.kind == "cyclotomic":
        return {"kind": "cyclotomic", "m": s.m}
    if s.kind == "prime":
        return {"kind": "prime", "p": s.p}
    return {"kind": "prime_ext", "p": s.p, "modulus": list(s.modulus)}


_OPS = {ast.Add: "__add__", ast.Sub: "__sub__", ast.Mult: "__mul__", ast.Div: "__truediv__"}


def parse_element(fld: Field, value: Any) -> FieldElement:
    """Integer, coefficient list (low to high) or expression in ``zeta``."""
    if isinstance(value, bool):
        raise ParseError("booleans are not field elements")
    if isinstance(value, int):
        return fld(value)
    if isinstance(value, list):
        return fld.from_coeffs([int(c) for c in value])
    if not isinstance(value, str):
        raise ParseError(f"cannot read {value!r} as a field element")
    text = value.replace("^", "**")
    try:
        tree = ast.parse(text.strip(), mode="eval")
    except SyntaxError as exc:
        raise ParseError(f"column {exc.offset}: cannot parse {value!r}") from None
    return _eval(fld, tree.body, value)


def _eval(fld: Field, node: ast.AST, src: str) -> FieldElement:
    if isinstance(node, ast.Constant) and isinstance(node.value, int) \
            and not isinstance(node.value, bool):
        return fld(node.value)
    if isinstance(node, ast.Name) and node.id in ("zeta", "x"):
        return fld.gen
    if isinstance(node, ast.UnaryOp) and isinstance(node.op, (ast.USub, ast.UAdd)):
        v = _eval(fld, node.operand, src)
        return -v if isinstance(node.op, ast.USub) else v
    if isinstance(node, ast.BinOp):
        if isinstance(node.op, ast.Pow):
            e = _int_exponent(node.right, src)
            return _eval(fld, node.left, src) ** e
        op = _OPS.get(type(node.op))
        if op:
            return getattr(_eval(fld, node.left, src), op)(_eval(fld, node.right, src))
    col = getattr(node, "col_offset", 0) + 1
    raise ParseError(f"column {col}: unsupported expression in {src!r}")


def _int_exponent(node: ast.AST, src: str) -> int:
    if isinstance(node, ast.Constant) and isinstance(node.value, int):
        return node.value
    if isinstance(node, ast.UnaryOp) and isinstance(node.op, ast.USub):
        return -_int_exponent(node.operand, src)
    raise ParseError(f"column {node.col_offset + 1}: exponents must be integers in {src!r}")


# ------------------------------------------------------------- presentations

_CONSTRAINT_KINDS = {"unit", "self_inverse", "root_of_unity", "zero", "word_is_one"}


def parse_presentation(spec: Any) -> HopfPresentation:
    if not isinstance(spec, dict):
        raise ParseError("presentation must be an object")
    grouplikes = []
    for i, g in enumerate(spec.get("grouplikes", [])):
        if isinstance(g, str):
            grouplikes.append((g, 0))
        elif isinstance(g, dict):
            grouplikes.append((g["name"], int(g.get("order", 0))))
        else:
            grouplikes.append((g[0], int(g[1])))
    skews = []
    for s in spec.get("skewprims", []):
        if isinstance(s, dict):
            skews.append((s["name"], _word_spec(s.get("g")), _word_spec(s.get("gp"))))
        else:
            skews.append((s[0], _word_spec(s[1]), _word_spec(s[2])))
    constraints = []
    for c in spec.get("constraints", []):
        kind = c.get("kind")
        if kind not in _CONSTRAINT_KINDS:
            raise ParseError(f"unknown constraint kind {kind!r}")
        word = _word_spec(c.get("word")) or ()
        constraints.append(Constraint(kind, c.get("generator", ""), int(c.get("l", 0)), word))
    return HopfPresentation.build(grouplikes, skews, spec.get("annihilated", []),
                                  constraints, name=spec.get("name", ""))


def _word_spec(w):
    if w in (None, "", "1"):
        return None
    return w


def presentation_to_json(P: HopfPresentation) -> dict:
    return {
        "name": P.name,
        "grouplikes": [{"name": n, "order": o} for n, o in P.grouplikes],
        "skewprims": [{"name": s.name, "g": _word_text(s.g), "gp": _word_text(s.gp)}
                      for s in P.skewprims],
        "annihilated": list(P.annihilated),
        "constraints": [_constraint_json(c) for c in P.constraints],
    }


def _word_text(w) -> str:
    return str(Monomial.from_word(w)) if w else "1"


def _constraint_json(c: Constraint) -> dict:
    out: dict[str, Any] = {"kind": c.kind}
    if c.generator:
        out["generator"] = c.generator
    if c.l:
        out["l"] = c.l
    if c.word:
        out["word"] = _word_text(c.word)
    return out


# ------------------------------------------------------------------ builders

def _smash(fld: Field, root_system=(), central_rank: int = 0) -> HopfPresentation:
    if isinstance(root_system, str):
        data = hecke.RootSystemData.parse(root_system, central_rank)
    else:
        comps = tuple((c["type"].upper(), int(c["rank"])) for c in root_system)
        data = hecke.RootSystemData(comps, central_rank)
    return hecke.smash_presentation(data, fld)


def _sym(n: int = 1) -> HopfPresentation:
    return HopfPresentation.build([], [(f"h{i}", None, None) for i in range(1, n + 1)],
                                  name=f"Sym_{n}")


BUILDER_NAMES = sorted(list(qexamples.BUILDERS) + ["hn", "sym", "smash"])


def make_builder(name: str, params: dict, fld: Field) -> HopfPresentation:
    if name == "hn":
        return constructions.hn_presentation(int(params.get("n", 1)))
    if name == "sym":
        return _sym(int(params.get("n", 1)))
    if name == "smash":
        return _smash(fld, params.get("root_system", ()), int(params.get("central_rank", 0)))
    try:
        make = qexamples.BUILDERS[name]
    except KeyError:
        raise ParseError(f"unknown builder {name!r}; choose from {', '.join(BUILDER_NAMES)}") \
            from None
    return make(**params)
