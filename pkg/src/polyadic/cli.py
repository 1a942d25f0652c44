"""Command-line front end: ``polyadic arity | check | solve | gen``.

Exit codes: 0 when every requested check passes, 1 when something is
falsified or inconsistent, 2 for usage and parse errors, 3 when a budget
stops the computation.
"""
from __future__ import annotations

import argparse
import json
import sys
import time

from . import corpus
from . import io as pio
from .algebra import (
    PolyadicAlgebra,
    check_mediality,
    check_total_associativity_linear,
    check_unit,
    find_unit,
    quermap,
)
from .arity import (
    Inadmissible,
    convolution_arity,
    maximal_shape,
    minimal_shape,
    nstar_table,
    quasipolyangular_shape,
    twist_table,
)
from .coalgebra import (
    PolyadicCoalgebra,
    check_coassociativity,
    check_comediality,
    check_counit,
    co_commutativity_class,
    d3_coalgebra,
    find_counit,
    matrix_coalgebra,
)
from .convolution import ConvolutionContext, coquerelement, convolution_unit, convolve
from .hopf import (
    PolyadicBialgebra,
    check_bialgebra,
    cyclic_group_bialgebra,
    solve_symmetric_querantipode,
    von_neumann_regular_bialgebra,
)
from .nary import (
    NaryOp,
    PolyadicFieldDesc,
    check_field,
    check_total_associativity,
    find_units,
    querelement,
    ternary_field_sample,
)
from .quantum import (
    MissingUnit,
    MMatrix,
    RMatrix,
    check_almost_cocommutativity,
    check_almost_comediality,
    check_braid_equation,
    check_medial_braid,
    check_medial_quasipolyangular,
    check_quasipolyangular,
    check_quasitriangular,
    check_yang_baxter,
    m_from_r,
    unit_element,
)
from .runtime import BudgetExceeded, set_threads
from .scalars import Scalar, scalar_format
from .tensorkit import MultiLinearMap, SlotPermutation, TensorSum, flat_to_word, tensor_all
from .verdict import BUDGET, FAIL, INADMISSIBLE, PASS, Verdict

REPORT_VERSION = 1
AXIOMS = ("assoc", "quer", "unit", "medial", "coassoc", "counit", "bialgebra", "cocomm", "comedial",
          "ybe", "braid", "quasitriangular", "quasipolyangular", "medial-braid", "medial-quasipolyangular")
GEN_NAMES = ("vn-regular", "ternary-field-sample", "d3", "matrix-coalgebra", "group-algebra", "group-bialgebra",
             "group-context", "z2-rmatrix")
SOLVE_TARGETS = ("querantipode", "coquerelement", "counit", "unit")

EXIT_PASS, EXIT_FAIL, EXIT_USAGE, EXIT_BUDGET = 0, 1, 2, 3


class UsageError(Exception):
    pass


# ---------------------------------------------------------------------------
# JSON rendering


def jsonable(x):
    if isinstance(x, Scalar):
        return scalar_format(x)
    if isinstance(x, SlotPermutation):
        return list(x.image)
    if isinstance(x, TensorSum):
        return pio.tensor_to_terms(x)
    if isinstance(x, MultiLinearMap):
        return pio.map_to_block(x)
    if isinstance(x, Verdict):
        return verdict_dict(x)
    if isinstance(x, dict):
        return {str(k): jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [jsonable(v) for v in x]
    if isinstance(x, (str, int, float, bool)) or x is None:
        return x
    return str(x)


def verdict_dict(v: Verdict) -> dict:
    return {"name": v.name, "status": v.status, "witness": jsonable(v.witness), "details": jsonable(v.details)}


def exit_code(verdicts) -> int:
    statuses = {v.status for v in verdicts}
    if FAIL in statuses or INADMISSIBLE in statuses:
        return EXIT_FAIL
    if BUDGET in statuses:
        return EXIT_BUDGET
    return EXIT_PASS


def overall(code: int) -> str:
    return {EXIT_PASS: PASS, EXIT_FAIL: FAIL, EXIT_BUDGET: BUDGET}.get(code, "error")


def emit_report(args, report: dict, human_lines: list, elapsed: float) -> None:
    if args.json:
        sys.stdout.write(json.dumps(report, indent=1, sort_keys=True, ensure_ascii=False) + "\n")
    else:
        for line in human_lines:
            print(line)
        print(f"status: {report['status']}  ({elapsed:.2f} s)")


def _verdict_line(v: Verdict) -> str:
    line = f"[{v.status.upper():>12}] {v.name}"
    if v.status != PASS and v.witness is not None:
        line += f"  witness: {json.dumps(jsonable(v.witness), ensure_ascii=False)}"
    if v.status == INADMISSIBLE and v.details.get("reason"):
        line += f"  ({v.details['reason']})"
    return line


# ---------------------------------------------------------------------------
# arity


def _table_text(header: list, rows: list) -> str:
    cells = [header] + rows
    widths = [max(len(str(r[c])) for r in cells) for c in range(len(header))]
    return "\n".join("  ".join(str(r[c]).rjust(widths[c]) for c in range(len(header))).rstrip() for r in cells)


def _table_csv(header: list, rows: list) -> str:
    return "\n".join(",".join(str(c) for c in r) for r in [header] + rows)


def twist_table_rows(max_side: int, mode: str) -> tuple[list, list]:
    table = twist_table(max_side, mode)
    header = ["m\\n"] + [str(n) for n in range(2, max_side + 1)]
    rows = [[str(m)] + [str(v) for v in table[m - 2]] for m in range(2, max_side + 1)]
    return header, rows


def nstar_table_rows(max_arity: int, max_ell: int) -> tuple[list, list]:
    table = nstar_table(max_arity, max_ell)
    cols = [(n, l) for n in range(2, max_arity + 1) for l in range(1, max_ell + 1)]
    header = ["n',l'\\n,l"] + [f"{n},{l}" for n, l in cols]
    rows = []
    for n_p in range(2, max_arity + 1):
        for l_p in range(1, max_ell + 1):
            row = table.get((n_p, l_p), {})
            rows.append([f"{n_p},{l_p}"] + [str(row[c]) if c in row else "." for c in cols])
    return header, rows


def cmd_arity(args) -> int:
    if args.table == "twist-table":
        if args.max < 2:
            raise UsageError("--max must be at least 2")
        header, rows = twist_table_rows(args.max, args.mode)
    elif args.table == "nstar-table":
        if args.max < 2 or args.max_ell < 1:
            raise UsageError("--max must be at least 2 and --max-ell at least 1")
        header, rows = nstar_table_rows(args.max, args.max_ell)
    else:
        return _cmd_shapes(args)
    if args.json:
        print(json.dumps({"table": args.table, "header": header, "rows": rows}, indent=1))
    else:
        print(_table_csv(header, rows) if args.csv else _table_text(header, rows))
    return EXIT_PASS


def _shape_text(shape) -> str:
    return f"(m_a, n_a) = ({shape.m_a}, {shape.n_a}) over (m_k, n_k) = ({shape.m_k}, {shape.n_k}), r_a = {shape.r_a}"


def _cmd_shapes(args) -> int:
    results = []
    if args.n is not None and args.nprime is not None:
        for medial in (False, True):
            label = "medial quasipolyangular" if medial else "quasipolyangular"
            try:
                ell = quasipolyangular_shape(args.n, args.nprime, medial)
                results.append((label, PASS, f"l = {ell}"))
            except Inadmissible as exc:
                results.append((label, INADMISSIBLE, str(exc)))
        if args.ell is not None and args.ell_prime is not None:
            try:
                ns = convolution_arity(args.n, args.ell, args.nprime, args.ell_prime)
                results.append(("convolution arity", PASS, f"n_star = {ns}"))
            except Inadmissible as exc:
                results.append(("convolution arity", INADMISSIBLE, str(exc)))
    if args.m is not None and args.n is not None and args.r is not None:
        shape = maximal_shape(args.m, args.n, args.r)
        try:
            ell = shape.ell_shape()
            results.append(("maximal shape", PASS, f"{_shape_text(shape)}; l = {ell.ell}, l' = {ell.ell_prime}"))
        except Inadmissible as exc:
            results.append(("maximal shape", INADMISSIBLE, str(exc)))
        try:
            shape = minimal_shape(args.m, args.n, args.r)
            ell = shape.ell_shape()
            results.append(("minimal shape", PASS, f"{_shape_text(shape)}; l = {ell.ell}, l' = {ell.ell_prime}"))
        except Inadmissible as exc:
            results.append(("minimal shape", INADMISSIBLE, str(exc)))
    if not results:
        raise UsageError("shapes needs --n with --nprime, or --m with --n and --r")
    if args.json:
        print(json.dumps([{"name": a, "status": b, "detail": c} for a, b, c in results], indent=1))
    else:
        for a, b, c in results:
            print(f"{a}: {b if b != PASS else c}" + (f" ({c})" if b != PASS else ""))
    return EXIT_PASS if all(b == PASS for _, b, _ in results) else EXIT_FAIL


# ---------------------------------------------------------------------------
# check


def _parse_twist(text: str | None) -> SlotPermutation | None:
    if not text:
        return None
    try:
        return SlotPermutation([int(t) for t in text.replace(" ", "").split(",")])
    except ValueError as exc:
        raise UsageError(f"bad --twist {text!r}: {exc}") from exc


def _algebra_of(loaded) -> PolyadicAlgebra | None:
    obj = loaded.obj
    if isinstance(obj, PolyadicAlgebra):
        return obj
    if isinstance(obj, PolyadicBialgebra):
        return obj.alg
    if isinstance(obj, ConvolutionContext):
        return obj.A
    return None


def _coalgebra_of(loaded) -> PolyadicCoalgebra | None:
    obj = loaded.obj
    if isinstance(obj, PolyadicCoalgebra):
        return obj
    if isinstance(obj, PolyadicBialgebra):
        return obj.coalg
    if isinstance(obj, ConvolutionContext):
        return obj.C
    return None


def _need(x, what: str, axiom: str):
    if x is None:
        raise UsageError(f"axiom {axiom!r} needs {what}")
    return x


def _resolve_r(loaded, spec: str | None, axiom: str) -> RMatrix:
    spec = spec or loaded.default_rmatrix
    if not spec:
        raise UsageError(f"axiom {axiom!r} needs --rmatrix (trivial, a name in the file, or a path)")
    if spec == "trivial":
        alg = _need(_algebra_of(loaded), "an algebra", axiom)
        factors = loaded.obj.n_prime if isinstance(loaded.obj, PolyadicBialgebra) else 2
        return corpus.trivial_rmatrix(alg, factors)
    if spec in loaded.rmatrices:
        return loaded.rmatrices[spec]
    other = pio.load_file(spec)
    if other.kind != "rmatrix":
        raise UsageError(f"{spec} is not an rmatrix file")
    return other.obj


def _resolve_m(loaded, spec: str | None, rspec: str | None, axiom: str) -> MMatrix:
    spec = spec or loaded.default_mmatrix
    if not spec:
        raise UsageError(f"axiom {axiom!r} needs --mmatrix (trivial, from-r, a name in the file, or a path)")
    B = loaded.obj
    if spec == "trivial":
        k = B.n_prime
        return MMatrix(tensor_all([unit_element(B.alg)] * (k * k)), "trivial")
    if spec == "from-r":
        return m_from_r(_resolve_r(loaded, rspec, axiom), B.n_prime)[0]
    if spec in loaded.mmatrices:
        return loaded.mmatrices[spec]
    other = pio.load_file(spec)
    if other.kind != "mmatrix":
        raise UsageError(f"{spec} is not an mmatrix file")
    return other.obj


def _bialgebra(loaded, axiom: str) -> PolyadicBialgebra:
    if not isinstance(loaded.obj, PolyadicBialgebra):
        raise UsageError(f"axiom {axiom!r} needs a bialgebra file")
    return loaded.obj


def run_axiom(loaded, axiom: str, args) -> list[Verdict]:
    obj = loaded.obj
    twist = _parse_twist(getattr(args, "twist", None))
    if axiom == "assoc":
        if isinstance(obj, NaryOp):
            return [check_total_associativity(obj, sample=args.sample)]
        if isinstance(obj, PolyadicFieldDesc):
            out = []
            for tag, op in (("add", obj.add), ("mul", obj.mul)):
                v = check_total_associativity(op, sample=args.sample)
                v.name = f"{tag} {v.name}"
                out.append(v)
            return out
        return [check_total_associativity_linear(_need(_algebra_of(loaded), "an algebra", axiom))]
    if axiom == "quer":
        if isinstance(obj, NaryOp):
            bad = [x for x in obj.carrier if not querelement(obj, x).exists]
            return [Verdict.check("querability", not bad, {"elements": jsonable(bad)})]
        if isinstance(obj, PolyadicFieldDesc):
            rep = check_field(obj, sample=args.sample)
            return [v for v in rep.verdicts if "querability" in v.name]
        alg = _need(_algebra_of(loaded), "an algebra", axiom)
        bad = []
        for k in range(alg.dim):
            if not quermap(alg, alg.basis(k)).consistent:
                bad.append(alg.labels[k])
        return [Verdict.check("basis querability", not bad, {"elements": bad})]
    if axiom == "unit":
        if isinstance(obj, NaryOp):
            units = find_units(obj)
            return [Verdict.check("unit", bool(units), None, units=jsonable(units))]
        if isinstance(obj, PolyadicFieldDesc):
            units = find_units(obj.mul)
            return [Verdict.check("unit", bool(units), None, units=jsonable(units))]
        alg = _need(_algebra_of(loaded), "an algebra", axiom)
        if alg.unit is not None:
            return [check_unit(alg, alg.unit)]
        res = find_unit(alg)
        return [Verdict.check("unit", res.found, {"reason": "no unit solves the defining system"},
                              nullity=res.nullity, declared=False)]
    if axiom == "medial":
        return [check_mediality(_need(_algebra_of(loaded), "an algebra", axiom))]
    if axiom == "coassoc":
        return [check_coassociativity(_need(_coalgebra_of(loaded), "a coalgebra", axiom))]
    if axiom == "counit":
        C = _need(_coalgebra_of(loaded), "a coalgebra", axiom)
        if C.counit is not None:
            return [check_counit(C, C.counit)]
        res = find_counit(C)
        return [Verdict.check("counit", res.found, {"reason": "no counit solves the defining system"},
                              nullity=res.nullity, declared=False)]
    if axiom == "bialgebra":
        return list(check_bialgebra(_bialgebra(loaded, axiom)).verdicts)
    if axiom == "cocomm":
        C = _need(_coalgebra_of(loaded), "a coalgebra", axiom)
        cls = co_commutativity_class(C, twist if twist is not None and twist.size == C.arity else None)
        out = [Verdict.check("co-commutativity", cls["class"] != "neither", {"class": cls["class"]},
                             **{"class": cls["class"]})]
        if args.rmatrix or loaded.default_rmatrix:
            B = _bialgebra(loaded, axiom)
            out.append(check_almost_cocommutativity(B, _resolve_r(loaded, args.rmatrix, axiom), twist))
        return out
    if axiom == "comedial":
        C = _need(_coalgebra_of(loaded), "a coalgebra", axiom)
        out = [check_comediality(C)]
        if args.mmatrix:
            B = _bialgebra(loaded, axiom)
            out.append(check_almost_comediality(B, _resolve_m(loaded, args.mmatrix, args.rmatrix, axiom)))
        return out
    if axiom == "ybe":
        target = obj if isinstance(obj, PolyadicBialgebra) else _need(_algebra_of(loaded), "an algebra", axiom)
        return [check_yang_baxter(target, _resolve_r(loaded, args.rmatrix, axiom))]
    if axiom == "braid":
        return check_braid_equation(_bialgebra(loaded, axiom), _resolve_r(loaded, args.rmatrix, axiom))
    if axiom == "quasitriangular":
        return check_quasitriangular(_bialgebra(loaded, axiom), _resolve_r(loaded, args.rmatrix, axiom))
    if axiom == "quasipolyangular":
        B = _bialgebra(loaded, axiom)
        return check_quasipolyangular(B, _resolve_r(loaded, args.rmatrix, axiom), twist).verdicts
    if axiom == "medial-braid":
        B = _bialgebra(loaded, axiom)
        return check_medial_braid(B, _resolve_m(loaded, args.mmatrix, args.rmatrix, axiom)).verdicts
    if axiom == "medial-quasipolyangular":
        B = _bialgebra(loaded, axiom)
        return check_medial_quasipolyangular(B, _resolve_m(loaded, args.mmatrix, args.rmatrix, axiom)).verdicts
    raise UsageError(f"unknown axiom {axiom!r}")


def _load(path: str):
    return pio.load_file(path)


def _split_axioms(values) -> list[str]:
    out = []
    for v in values or []:
        out += [a for a in v.split(",") if a]
    return out


def cmd_check(args) -> int:
    loaded = _load(args.file)
    axioms = _split_axioms(args.axiom) or list(loaded.axioms)
    if not axioms:
        raise UsageError("no --axiom given and the file declares no axiom suite")
    for a in axioms:
        if a not in AXIOMS:
            raise UsageError(f"unknown axiom {a!r}; choose from {', '.join(AXIOMS)}")
    t0 = time.perf_counter()
    verdicts: list[Verdict] = []
    per_axiom = []
    for a in axioms:
        try:
            vs = run_axiom(loaded, a, args)
        except BudgetExceeded as exc:
            vs = [Verdict(a, BUDGET, None, {"reason": str(exc)})]
        except (Inadmissible, MissingUnit) as exc:
            vs = [Verdict(a, INADMISSIBLE, None, {"reason": str(exc)})]
        verdicts += vs
        per_axiom.append({"axiom": a, "verdicts": [verdict_dict(v) for v in vs]})
    code = exit_code(verdicts)
    report = {
        "version": REPORT_VERSION,
        "command": ["check", "--file", args.file] + [x for a in axioms for x in ("--axiom", a)]
        + [x for flag in ("rmatrix", "mmatrix", "twist") if getattr(args, flag)
           for x in (f"--{flag}", getattr(args, flag))],
        "kind": loaded.kind,
        "name": loaded.name,
        "results": per_axiom,
        "status": overall(code),
        "exit": code,
    }
    lines = [f"{loaded.kind} {loaded.name or args.file}"] + [_verdict_line(v) for v in verdicts]
    emit_report(args, report, lines, time.perf_counter() - t0)
    return code


# ---------------------------------------------------------------------------
# solve


def _describe_map(f: MultiLinearMap, in_labels, out_labels) -> list[str]:
    lines = []
    for i, col in sorted(f.columns().items()):
        col = sorted(col)
        src = " (x) ".join(in_labels[k] for k in flat_to_word(i, f.in_dims)) or "1"
        parts = []
        for o, c in col:
            word = " (x) ".join(out_labels[k] for k in flat_to_word(o, f.out_dims)) or "1"
            coeff = scalar_format(c)
            parts.append(word if coeff == "1" else f"({coeff}) {word}")
        lines.append(f"  {src} -> {' + '.join(parts) if parts else '0'}")
    return lines


def cmd_solve(args) -> int:
    loaded = _load(args.file)
    obj = loaded.obj
    t0 = time.perf_counter()
    solution = None
    verdicts: list[Verdict] = []
    lines = []
    labels = None
    if args.target == "querantipode":
        B = _bialgebra(loaded, "querantipode")
        rep = solve_symmetric_querantipode(B, args.ell)
        if rep.consistent:
            Q = rep.querantipode
            solution = Q.map
            verdicts.append(Verdict.check("querantipode verified at every place",
                                          len(Q.verified_positions) == rep.n_star,
                                          {"verified_positions": Q.verified_positions},
                                          n_star=rep.n_star, nullity=Q.nullity))
            if rep.n_star == 2:
                from .hopf import symmetric_context
                ctx = symmetric_context(B, args.ell)
                e = convolution_unit(ctx)
                ident = MultiLinearMap.identity((B.dim,))
                verdicts.append(Verdict.check("id * Q = e_star", convolve(ctx, [ident, solution]) == e))
            labels = B.labels
        else:
            verdicts.append(Verdict.fail("querantipode", {"reason": rep.note}))
    elif args.target == "coquerelement":
        if not isinstance(obj, ConvolutionContext):
            raise UsageError("coquerelement needs a convolution_context file")
        name = args.map or "id"
        if name in loaded.maps:
            f = loaded.maps[name]
        elif name == "id":
            if obj.in_dims != obj.out_dims:
                raise UsageError("the identity map needs matching input and output shapes")
            f = MultiLinearMap.identity(obj.in_dims)
        else:
            raise UsageError(f"map {name!r} is not in the file")
        res = coquerelement(obj, f)
        if res.consistent:
            solution = res.value
            verdicts.append(Verdict.check("coquerelement verified at every place",
                                          len(res.verified_positions) == obj.n_star,
                                          {"verified_positions": res.verified_positions},
                                          n_star=obj.n_star, nullity=res.nullity))
        else:
            verdicts.append(Verdict.fail("coquerelement", {"reason": "inconsistent"}))
        labels = obj.A.labels
    elif args.target == "counit":
        C = _need(_coalgebra_of(loaded), "a coalgebra", "counit")
        res = find_counit(C)
        if res.found:
            solution = res.counit
            verdicts.append(check_counit(C, solution))
        else:
            verdicts.append(Verdict.fail("counit", {"reason": "inconsistent"}))
        labels = C.labels
    elif args.target == "unit":
        A = _need(_algebra_of(loaded), "an algebra", "unit")
        res = find_unit(A)
        if res.found:
            solution = res.unit
            verdicts.append(check_unit(A, solution))
        else:
            verdicts.append(Verdict.fail("unit", {"reason": "inconsistent"}))
        labels = A.labels
    code = exit_code(verdicts)
    block = None
    if solution is not None and code == EXIT_PASS:
        block = dict(pio.map_to_block(solution), kind="map", name=args.target)
        if args.out:
            pio.write_file(args.out, block)
    report = {
        "version": REPORT_VERSION,
        "command": ["solve", "--file", args.file, "--target", args.target],
        "kind": loaded.kind,
        "verdicts": [verdict_dict(v) for v in verdicts],
        "solution": block,
        "status": overall(code),
        "exit": code,
    }
    lines = [f"{args.target} for {loaded.name or args.file}"]
    if solution is not None:
        lines += _describe_map(solution, labels, labels)
    elif code != EXIT_PASS:
        lines.append("  inconsistent: no solution")
    lines += [_verdict_line(v) for v in verdicts]
    if args.out and block is not None:
        lines.append(f"solution written to {args.out}")
    emit_report(args, report, lines, time.perf_counter() - t0)
    return code


# ---------------------------------------------------------------------------
# gen


def generate(name: str, args) -> dict:
    if name == "vn-regular":
        B = von_neumann_regular_bialgebra(args.n)
        block = pio.bialgebra_to_block(B)
        block["axioms"] = ["assoc", "coassoc", "bialgebra"]
        return block
    if name == "ternary-field-sample":
        block = pio.field_to_block(ternary_field_sample(args.bound), "imaginary_odd")
        block["axioms"] = ["quer"]
        return block
    if name == "d3":
        block = pio.coalgebra_to_block(d3_coalgebra())
        block["axioms"] = ["coassoc"]
        return block
    if name == "matrix-coalgebra":
        C = matrix_coalgebra(args.size) if args.ell == 1 else corpus.derived_matrix_coalgebra(args.size, args.ell)
        block = pio.coalgebra_to_block(C)
        block["axioms"] = ["coassoc", "counit"]
        return block
    if name == "group-algebra":
        block = pio.algebra_to_block(cyclic_group_bialgebra(args.order).alg)
        block["default_rmatrix"] = "trivial"
        block["axioms"] = ["assoc", "unit", "quer", "medial", "ybe"]
        return block
    if name == "group-context":
        B = cyclic_group_bialgebra(args.order)
        ctx = ConvolutionContext(B.alg, B.coalg, args.ell, args.ell)
        return pio.context_to_block(ctx, {"id": MultiLinearMap.identity((B.dim,))})
    if name == "group-bialgebra":
        B = cyclic_group_bialgebra(args.order)
        block = pio.bialgebra_to_block(B, {"trivial": corpus.trivial_rmatrix(B)})
        block["default_rmatrix"] = "trivial"
        block["axioms"] = ["assoc", "unit", "coassoc", "counit", "bialgebra", "cocomm", "ybe", "quasitriangular",
                           "braid"]
        return block
    if name == "z2-rmatrix":
        B = cyclic_group_bialgebra(2)
        block = pio.bialgebra_to_block(B, {"R": corpus.z2_rmatrix()})
        block["default_rmatrix"] = "R"
        block["axioms"] = ["cocomm", "ybe", "quasitriangular", "braid"]
        return block
    raise UsageError(f"unknown generator {name!r}; choose from {', '.join(GEN_NAMES)}")


def cmd_gen(args) -> int:
    block = generate(args.name, args)
    text = pio.dumps(block)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return EXIT_PASS


# ---------------------------------------------------------------------------
# parser


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="polyadic", description="Exact checks for polyadic algebraic structures.")
    p.add_argument("--threads", type=int, default=1, help="worker threads for checkers")
    sub = p.add_subparsers(dest="command", required=True)

    pa = sub.add_parser("arity", help="arity tables and shape solvers")
    pa.add_argument("table", choices=("twist-table", "nstar-table", "shapes"))
    pa.add_argument("--max", type=int, default=7)
    pa.add_argument("--max-ell", type=int, default=3)
    pa.add_argument("--mode", choices=("paper", "exact"), default="paper")
    pa.add_argument("--csv", action="store_true")
    pa.add_argument("--json", action="store_true")
    for flag in ("--m", "--n", "--r", "--nprime", "--ell", "--ell-prime"):
        pa.add_argument(flag, type=int)
    pa.set_defaults(func=cmd_arity)

    pc = sub.add_parser("check", help="run axiom checks on a structure file")
    pc.add_argument("--file", required=True)
    pc.add_argument("--axiom", action="append", help=f"one of: {', '.join(AXIOMS)} (repeatable, comma lists allowed)")
    pc.add_argument("--rmatrix", help="'trivial', a matrix name stored in the file, or an rmatrix file path")
    pc.add_argument("--mmatrix", help="'trivial', 'from-r', a stored name, or an mmatrix file path")
    pc.add_argument("--twist", help="explicit twist as comma-separated slot images, e.g. 2,1,0")
    pc.add_argument("--sample", type=int, default=20000, help="sample size for large element-level checks")
    pc.add_argument("--json", action="store_true")
    pc.set_defaults(func=cmd_check)

    ps = sub.add_parser("solve", help="solve for a unit, counit, querantipode or coquerelement")
    ps.add_argument("--file", required=True)
    ps.add_argument("--target", required=True, choices=SOLVE_TARGETS)
    ps.add_argument("--map", help="map name inside a convolution context file ('id' for the identity)")
    ps.add_argument("--ell", type=int, default=1, help="iterations of the product in the convolution")
    ps.add_argument("--out", help="write the solution block here")
    ps.add_argument("--json", action="store_true")
    ps.set_defaults(func=cmd_solve)

    pg = sub.add_parser("gen", help="write a canned structure file")
    pg.add_argument("--name", required=True, choices=GEN_NAMES)
    pg.add_argument("--n", type=int, default=3)
    pg.add_argument("--bound", type=int, default=9)
    pg.add_argument("--size", type=int, default=2)
    pg.add_argument("--ell", type=int, default=1)
    pg.add_argument("--order", type=int, default=3)
    pg.add_argument("--out")
    pg.set_defaults(func=cmd_gen)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    set_threads(args.threads)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"polyadic: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except pio.FormatError as exc:
        print(f"polyadic: parse error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except BudgetExceeded as exc:
        print(f"polyadic: budget exceeded: {exc}", file=sys.stderr)
        return EXIT_BUDGET


if __name__ == "__main__":
    sys.exit(main())
