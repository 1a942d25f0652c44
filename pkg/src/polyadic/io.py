"""JSON structure files.

Every file holds one block with a ``"kind"`` key.  Scalars are written as
text in the canonical scalar grammar so that files round-trip bit-exactly.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from pathlib import Path

from .algebra import PolyadicAlgebra
from .coalgebra import PolyadicCoalgebra
from .convolution import ConvolutionContext
from .hopf import PolyadicBialgebra
from .nary import (
    Carrier,
    NaryOp,
    PolyadicFieldDesc,
    formula_op,
    imaginary_member,
    imaginary_odd_member,
    rational_member,
)
from .quantum import MMatrix, RMatrix
from .scalars import Scalar, scalar_format, scalar_parse
from .tensorkit import MultiLinearMap, TensorSum, flat_to_word, word_to_flat

FORMAT_VERSION = 1
KINDS = ("map", "algebra", "coalgebra", "bialgebra", "convolution_context", "rmatrix", "mmatrix",
         "nary_group", "polyadic_field")

MEMBERSHIP = {
    "imaginary_odd": imaginary_odd_member,
    "imaginary": imaginary_member,
    "rational": rational_member,
}


class FormatError(ValueError):
    """The file does not describe a structure this package understands."""


# ---------------------------------------------------------------------------
# scalars, tensors, maps


def _scalar_out(c: Scalar) -> str:
    return scalar_format(Scalar.coerce(c))


def _scalar_in(text) -> Scalar:
    if isinstance(text, int):
        return Scalar(text)
    if not isinstance(text, str):
        raise FormatError(f"scalars must be strings, got {text!r}")
    return scalar_parse(text)


def map_to_block(f: MultiLinearMap) -> dict:
    dim = f.dim
    block = {"in": f.in_factors, "out": f.out_factors}
    if dim is not None:
        block["dim"] = dim
    else:
        block["in_dims"] = list(f.in_dims)
        block["out_dims"] = list(f.out_dims)
    entries = []
    for (o, i), c in sorted(f.entries.items(), key=lambda kv: (kv[0][1], kv[0][0])):
        entries.append({"out_word": list(flat_to_word(o, f.out_dims)),
                        "in_word": list(flat_to_word(i, f.in_dims)),
                        "coeff": _scalar_out(c)})
    block["entries"] = entries
    return block


def map_from_block(block: dict, dim: int | None = None) -> MultiLinearMap:
    try:
        if "in_dims" in block:
            in_dims, out_dims = tuple(block["in_dims"]), tuple(block["out_dims"])
        else:
            d = block.get("dim", dim)
            if d is None:
                raise FormatError("map block needs 'dim'")
            in_dims, out_dims = (d,) * int(block["in"]), (d,) * int(block["out"])
        entries = {}
        for e in block.get("entries", []):
            o = word_to_flat(e["out_word"], out_dims)
            i = word_to_flat(e["in_word"], in_dims)
            entries[(o, i)] = entries.get((o, i), Scalar(0)) + _scalar_in(e["coeff"])
    except (KeyError, TypeError) as exc:
        raise FormatError(f"malformed map block: {exc}") from exc
    return MultiLinearMap(in_dims, out_dims, entries)


def tensor_to_terms(T: TensorSum) -> list:
    return [{"word": list(w), "coeff": _scalar_out(c)} for w, c in T.items()]


def tensor_from_terms(terms: list, dims) -> TensorSum:
    try:
        return TensorSum(dims, [(tuple(t["word"]), _scalar_in(t["coeff"])) for t in terms])
    except (KeyError, TypeError) as exc:
        raise FormatError(f"malformed term list: {exc}") from exc


# ---------------------------------------------------------------------------
# algebraic structures


def algebra_to_block(A: PolyadicAlgebra) -> dict:
    block = {"kind": "algebra", "name": A.name, "arity": A.arity, "labels": A.labels}
    block.update(map_to_block(A.mult))
    if A.unit is not None:
        block["unit"] = map_to_block(A.unit)
    if A.addition_arity is not None:
        block["addition_arity"] = A.addition_arity
    return block


def algebra_from_block(block: dict) -> PolyadicAlgebra:
    mult = map_from_block(block)
    if "arity" in block and int(block["arity"]) != mult.in_factors:
        raise FormatError("algebra 'arity' disagrees with the multiplication block")
    unit = map_from_block(block["unit"], mult.dim) if block.get("unit") else None
    return PolyadicAlgebra(mult, unit, block.get("labels"), block.get("addition_arity"), block.get("name", ""))


def coalgebra_to_block(C: PolyadicCoalgebra) -> dict:
    block = {"kind": "coalgebra", "name": C.name, "arity": C.arity, "dim": C.dim, "labels": C.labels,
             "comult": map_to_block(C.comult)}
    if C.counit is not None:
        block["counit"] = map_to_block(C.counit)
    return block


def coalgebra_from_block(block: dict) -> PolyadicCoalgebra:
    if "comult" not in block:
        raise FormatError("coalgebra block needs 'comult'")
    comult = map_from_block(block["comult"], block.get("dim"))
    if "arity" in block and int(block["arity"]) != comult.out_factors:
        raise FormatError("coalgebra 'arity' disagrees with the comultiplication block")
    counit = map_from_block(block["counit"], comult.dim) if block.get("counit") else None
    return PolyadicCoalgebra(comult, counit, block.get("labels"), block.get("name", ""))


def matrix_to_block(X, dim: int) -> dict:
    kind = "mmatrix" if isinstance(X, MMatrix) else "rmatrix"
    return {"kind": kind, "name": X.name, "factors": X.factors, "dim": dim, "terms": tensor_to_terms(X.body)}


def matrix_from_block(block: dict, dim: int | None = None):
    d = block.get("dim", dim)
    if d is None:
        raise FormatError("matrix block needs 'dim'")
    k = int(block["factors"])
    body = tensor_from_terms(block.get("terms", []), (d,) * k)
    cls = MMatrix if block.get("kind") == "mmatrix" else RMatrix
    return cls(body, block.get("name", "M" if cls is MMatrix else "R"))


def bialgebra_to_block(B: PolyadicBialgebra, rmatrices: dict | None = None, mmatrices: dict | None = None) -> dict:
    block = {"kind": "bialgebra", "name": B.name, "algebra": algebra_to_block(B.alg),
             "coalgebra": coalgebra_to_block(B.coalg)}
    if rmatrices:
        block["rmatrices"] = {k: matrix_to_block(v, B.dim) for k, v in rmatrices.items()}
    if mmatrices:
        block["mmatrices"] = {k: matrix_to_block(v, B.dim) for k, v in mmatrices.items()}
    return block


def context_to_block(ctx: ConvolutionContext, maps: dict | None = None) -> dict:
    block = {"kind": "convolution_context", "algebra": algebra_to_block(ctx.A),
             "coalgebra": coalgebra_to_block(ctx.C), "ell": ctx.ell, "ell_prime": ctx.ell_prime}
    if maps:
        block["maps"] = {k: map_to_block(v) for k, v in maps.items()}
    return block


# ---------------------------------------------------------------------------
# element-level structures


def _element_out(x):
    if isinstance(x, Scalar):
        return _scalar_out(x)
    if isinstance(x, tuple):
        return [_element_out(y) for y in x]
    return x


def _element_in(x):
    if isinstance(x, str):
        return scalar_parse(x)
    if isinstance(x, list):
        return tuple(_element_in(y) for y in x)
    return x


def op_to_block(op: NaryOp) -> dict:
    block = {"name": op.name, "arity": op.arity}
    if "formula" in op.spec:
        block["formula"] = op.spec["formula"]
        block["params"] = op.spec.get("params", {})
    else:
        block["table"] = op.table()
    return block


def op_from_block(block: dict, carrier: Carrier) -> NaryOp:
    arity = int(block["arity"])
    if "table" in block:
        return NaryOp.from_table(arity, carrier, block["table"], block.get("name", ""))
    if "formula" in block:
        return formula_op(block["formula"], arity, carrier, **block.get("params", {}))
    raise FormatError("operation block needs 'table' or 'formula'")


def _carrier_block(carrier: Carrier, member_name: str | None) -> dict:
    out = {"carrier": [_element_out(x) for x in carrier.elements]}
    if member_name:
        out["member"] = member_name
    return out


def _carrier_from_block(block: dict) -> Carrier:
    member = None
    if block.get("member"):
        if block["member"] not in MEMBERSHIP:
            raise FormatError(f"unknown membership predicate {block['member']!r}")
        member = MEMBERSHIP[block["member"]]
    return Carrier([_element_in(x) for x in block["carrier"]], member, block.get("carrier_name", ""))


def field_to_block(desc: PolyadicFieldDesc, member_name: str | None = None) -> dict:
    block = {"kind": "polyadic_field", "name": desc.name}
    block.update(_carrier_block(desc.carrier, member_name))
    block["ops"] = [dict(op_to_block(desc.add), name="add"), dict(op_to_block(desc.mul), name="mul")]
    return block


def group_to_block(op: NaryOp, name: str = "") -> dict:
    block = {"kind": "nary_group", "name": name}
    block.update(_carrier_block(op.carrier, None))
    block["ops"] = [dict(op_to_block(op), name="mul")]
    return block


# ---------------------------------------------------------------------------
# loading


@dataclass
class Loaded:
    kind: str
    obj: object
    rmatrices: dict = field(default_factory=dict)
    mmatrices: dict = field(default_factory=dict)
    maps: dict = field(default_factory=dict)
    name: str = ""
    axioms: list = field(default_factory=list)
    default_rmatrix: str | None = None
    default_mmatrix: str | None = None


def load_block(block: dict) -> Loaded:
    """Build the object described by a parsed JSON block.

    Optional keys ``axioms``, ``default_rmatrix`` and ``default_mmatrix``
    declare the suite a generated file is expected to pass.
    """
    if not isinstance(block, dict) or "kind" not in block:
        raise FormatError("top-level JSON object with a 'kind' key expected")
    try:
        loaded = _load_block(block)
    except FormatError:
        raise
    except (KeyError, TypeError, ValueError, IndexError) as exc:
        raise FormatError(f"malformed {block.get('kind')} block: {exc!r}") from exc
    loaded.axioms = list(block.get("axioms", []))
    loaded.default_rmatrix = block.get("default_rmatrix")
    loaded.default_mmatrix = block.get("default_mmatrix")
    return loaded


def _load_block(block: dict) -> Loaded:
    kind = block["kind"]
    name = block.get("name", "")
    if kind == "algebra":
        return Loaded(kind, algebra_from_block(block), name=name)
    if kind == "coalgebra":
        return Loaded(kind, coalgebra_from_block(block), name=name)
    if kind == "bialgebra":
        A = algebra_from_block(block["algebra"])
        C = coalgebra_from_block(block["coalgebra"])
        B = PolyadicBialgebra(A, C, name)
        rms = {k: matrix_from_block(v, B.dim) for k, v in block.get("rmatrices", {}).items()}
        mms = {k: matrix_from_block(v, B.dim) for k, v in block.get("mmatrices", {}).items()}
        return Loaded(kind, B, rms, mms, name=name)
    if kind == "convolution_context":
        A = algebra_from_block(block["algebra"])
        C = coalgebra_from_block(block["coalgebra"])
        ctx = ConvolutionContext(A, C, int(block.get("ell", 1)), int(block.get("ell_prime", 1)))
        maps = {k: map_from_block(v) for k, v in block.get("maps", {}).items()}
        return Loaded(kind, ctx, maps=maps, name=name)
    if kind in ("rmatrix", "mmatrix"):
        return Loaded(kind, matrix_from_block(block), name=name)
    if kind == "map":
        return Loaded(kind, map_from_block(block), name=name)
    if kind == "nary_group":
        carrier = _carrier_from_block(block)
        ops = block.get("ops", [])
        if len(ops) != 1:
            raise FormatError("an n-ary group has exactly one operation")
        return Loaded(kind, op_from_block(ops[0], carrier), name=name)
    if kind == "polyadic_field":
        carrier = _carrier_from_block(block)
        ops = {o.get("name"): o for o in block.get("ops", [])}
        if set(ops) != {"add", "mul"}:
            raise FormatError("a polyadic field needs operations named 'add' and 'mul'")
        desc = PolyadicFieldDesc(carrier, op_from_block(ops["add"], carrier), op_from_block(ops["mul"], carrier), name)
        return Loaded(kind, desc, name=name)
    raise FormatError(f"unknown kind {kind!r}; expected one of {', '.join(KINDS)}")


def load_file(path) -> Loaded:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise FormatError(f"cannot read {path}: {exc}") from exc
    try:
        block = json.loads(text)
    except json.JSONDecodeError as exc:
        raise FormatError(f"{path}: invalid JSON ({exc})") from exc
    return load_block(block)


def dumps(block: dict) -> str:
    return json.dumps(block, indent=1, sort_keys=False, ensure_ascii=False) + "\n"


def write_file(path, block: dict) -> None:
    Path(path).write_text(dumps(block), encoding="utf-8")
