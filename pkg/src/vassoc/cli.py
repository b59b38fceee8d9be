"""Command-line front end.

Every subcommand builds a :class:`Result`: free-form ``data`` (rendered as
text lines or as JSON) plus a list of identity reports.  The exit status is
0 when every report holds, 1 when one fails and 2 for usage or input errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

from . import algebra, deformation, polarization
from .algebra import IdentityReport, MultTable
from .deformation import Jet
from .exact_linalg import QMatrix, kernel_basis, rank, span_contains
from .inputs import ParseError, WorkbenchInput, dump_table, parse_binding, parse_input
from .sigma3 import (NAMES, PERMS, V_LAD, V_3PA, GroupVector, VectorSyntaxError, lambda_value,
                     mv_matrix, orbit, parse_vector, rank_v)


class UsageError(ValueError):
    pass


@dataclass
class Result:
    command: str
    lines: list = field(default_factory=list)
    data: dict = field(default_factory=dict)
    records: list = field(default_factory=list)
    raw: Optional[str] = None  # printed verbatim in both formats (used by --emit)

    @property
    def ok(self) -> bool:
        return all(r.holds for r in self.records)


# ---- rendering -------------------------------------------------------------

def _jsonable(x):
    if isinstance(x, Fraction):
        return str(x)
    if isinstance(x, GroupVector):
        return [str(a) for a in x.coeffs]
    if isinstance(x, QMatrix):
        return [[str(a) for a in row] for row in x.to_rows()]
    if isinstance(x, MultTable):
        return [[[str(a) for a in cell] for cell in row] for row in x.c]
    if isinstance(x, dict):
        return {str(k): _jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [_jsonable(v) for v in x]
    return x


def record_line(r: IdentityReport) -> str:
    if r.holds:
        return f"{r.name}: holds"
    where = f" [{r.clause}]" if r.clause else ""
    return f"{r.name}: FAILS{where}; {r.witness}"


def render(result: Result, fmt: str) -> str:
    if result.raw is not None:
        return result.raw
    if fmt == "structured":
        doc = {
            "command": result.command,
            "data": _jsonable(result.data),
            "records": [r.as_record() for r in result.records],
            "ok": result.ok,
        }
        return json.dumps(doc, indent=2) + "\n"
    out = list(result.lines)
    if result.records:
        if out:
            out.append("")
        out.extend(record_line(r) for r in result.records)
    return "\n".join(out) + "\n"


def table_lines(t: MultTable, basis: tuple) -> list:
    lines = []
    for i in range(t.dim):
        for j in range(t.dim):
            terms = [(a, basis[k]) for k, a in enumerate(t.c[i][j]) if a]
            if terms:
                lines.append(f"  {basis[i]} * {basis[j]} = {_combo(terms)}")
    return lines or ["  (all products zero)"]


def _combo(terms) -> str:
    parts = []
    for a, name in terms:
        mag = abs(a)
        body = name if mag == 1 else f"{mag} {name}"
        if not parts:
            parts.append(body if a > 0 else f"-{body}")
        else:
            parts.append(("+ " if a > 0 else "- ") + body)
    return " ".join(parts)


def _yes(flag: bool) -> str:
    return "yes" if flag else "no"


# ---- argument helpers ------------------------------------------------------

def _params(args) -> dict:
    out = {}
    for text in args.param or []:
        try:
            name, value = parse_binding(text)
        except ValueError as exc:
            raise UsageError(f"--param: {exc}") from None
        out[name] = value
    return out


def _vector(text: Optional[str], args, inp: Optional[WorkbenchInput] = None,
            flag: str = "--v") -> GroupVector:
    if text is None:
        raise UsageError(f"{flag} is required")
    if inp is not None and text.strip() in inp.vectors:
        return inp.vectors[text.strip()]
    params = dict(inp.params) if inp is not None else {}
    params.update(_params(args))
    try:
        return parse_vector(text, params)
    except VectorSyntaxError as exc:
        raise UsageError(f"{flag}: {exc}") from None


def _load(args) -> WorkbenchInput:
    return parse_input(args.file, _params(args))


# ---- subcommands -----------------------------------------------------------

def cmd_classify(args) -> Result:
    inp = _load(args)
    res = Result("classify", [f"algebra of dimension {inp.dimension}:"] + table_lines(inp.table, inp.basis))
    res.records = algebra.classify(inp.table)
    return res


def cmd_check(args) -> Result:
    inp = _load(args)
    v = _vector(args.v, args, inp)
    res = Result("check")
    if args.w is None:
        if args.mode == "pair":
            raise UsageError("--mode pair needs --w")
        res.lines = [f"v = {v}"]
        res.data = {"v": v}
        res.records = [algebra.is_v_associative(inp.table, v)]
    else:
        w = _vector(args.w, args, inp, "--w")
        mode = args.mode or "diff"
        res.lines = [f"v = {v}", f"w = {w}", f"mode = {mode}"]
        res.data = {"v": v, "w": w, "mode": mode}
        res.records = [algebra.is_vw_algebra(inp.table, v, w, mode)]
    return res


def cmd_rank(args) -> Result:
    v = _vector(args.v, args)
    span = [t.coeffs for t in orbit(v)]
    r = rank_v(v)
    lad = span_contains(span, V_LAD.coeffs)
    pa = span_contains(span, V_3PA.coeffs)
    lam = lambda_value(v)
    return Result("rank", [
        f"v = {v}",
        f"rank = {r}",
        f"lambda (eigenvalue on V_Lad) = {lam}",
        f"V_Lad in F_v: {_yes(lad)}",
        f"V_3Pa in F_v: {_yes(pa)}",
    ], {"v": v, "rank": r, "lambda": lam, "lie_admissible": lad, "three_power_associative": pa})


def cmd_orbit(args) -> Result:
    v = _vector(args.v, args)
    translates = orbit(v)
    lines = [f"v = {v}"] + [f"  {NAMES[i]:>3} * v = {t}" for i, t in enumerate(translates)]
    lines.append(f"rank = {rank_v(v)}")
    return Result("orbit", lines, {"v": v, "orbit": {s.name: t for s, t in zip(PERMS, translates)},
                                   "rank": rank_v(v)})


def cmd_mv(args) -> Result:
    v = _vector(args.v, args)
    m = mv_matrix(v)
    ker = [GroupVector(k) for k in kernel_basis(m)]
    cert = deformation.lie_admissibility_certificate(v)
    lines = [f"v = {v}", "M_v (column j is PERMS[j] * v):", str(m), f"rank = {rank(m)}",
             "kernel basis (v1 with v1 * v = 0):"]
    lines += [f"  {k}" for k in ker] or ["  (trivial)"]
    lines.append(f"V_Lad in image: {_yes(cert is not None)}")
    if cert is not None:
        lines.append(f"certificate v1 with v1 * v = V_Lad: {cert}")
    return Result("mv", lines, {"v": v, "matrix": m, "rank": rank(m), "kernel": ker,
                                "lie_admissible": cert is not None, "certificate": cert})


def cmd_deform(args) -> Result:
    inp = _load(args)
    v = _vector(args.v, args, inp)
    terms = inp.jet.terms if inp.jet is not None else (inp.table,)
    jet = Jet.padded(terms, args.order)
    res = Result("deform", [f"v = {v}", f"jet order = {jet.order} (stored terms: {len(terms)})"])
    res.data = {"v": v, "order": jet.order}
    if args.w is None:
        reports = deformation.verify_jet(jet, v)
    else:
        w = _vector(args.w, args, inp, "--w")
        res.lines.append(f"w = {w}")
        res.data["w"] = w
        reports = deformation.verify_jet_vw(jet, v, w)
    res.records = reports
    return res


def cmd_delta2_kernel(args) -> Result:
    inp = _load(args)
    v = _vector(args.v, args, inp)
    ker = deformation.delta2_kernel(v, inp.table)
    lines = [f"v = {v}", f"kernel dimension = {len(ker)} (of {inp.dimension ** 3})"]
    for i, phi in enumerate(ker):
        lines.append(f"phi[{i}]:")
        lines += table_lines(phi, inp.basis)
    return Result("delta2-kernel", lines, {"v": v, "dimension": len(ker), "basis": ker})


def cmd_lemma1(args) -> Result:
    inp = _load(args)
    try:
        sols = deformation.lemma1_solve(inp.table)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    contains = span_contains([s.coeffs for s in sols], V_LAD.coeffs)
    lines = [f"solution space dimension = {len(sols)}"]
    lines += [f"  {s}" for s in sols]
    lines.append(f"contains V_Lad: {_yes(contains)}")
    return Result("lemma1", lines, {"dimension": len(sols), "basis": sols, "contains_V_Lad": contains})


def cmd_polarize(args) -> Result:
    inp = _load(args)
    rho, psi = algebra.polarize(inp.table)
    if args.emit:
        chosen = {"rho": rho, "psi": psi, "mu": inp.table}[args.emit]
        return Result("polarize", raw=dump_table(chosen, inp.basis))
    lines = ["rho (symmetric part):"] + table_lines(rho, inp.basis)
    lines += ["psi (skew part):"] + table_lines(psi, inp.basis)
    res = Result("polarize", lines, {"rho": rho, "psi": psi})
    res.records = [algebra.poisson_family_check(rho, psi, k) for k in algebra.POISSON_KINDS]
    return res


def cmd_polar_system(args) -> Result:
    if args.family and args.v:
        raise UsageError("give either --family or --v, not both")
    if args.family:
        fam = {"assoc": "assoc_v"}.get(args.family, args.family)
        m = polarization.polar_matrix(fam)
        head = [f"family = {args.family}"]
        data = {"family": args.family}
    else:
        v = _vector(args.v, args)
        w = v if args.w is None else _vector(args.w, args, flag="--w")
        m = polarization.family_matrix(v, w)
        head = [f"v = {v}", f"w = {w}", f"expansion: {polarization.polar_expand(v, w).text()}"]
        data = {"v": v, "w": w}
    rels = polarization.sparse_relations(m, args.support)
    r = rank(m)
    lines = head + ["rows: " + ", ".join(str(t) for t in polarization.TERMS),
                    "N matrix:", str(m), f"rank = {r}",
                    f"sparse relations (support <= {args.support}): {len(rels)}"]
    for rel in rels:
        pre = ", ".join(str(a) for a in rel.preimage)
        lines.append(f"  {rel.image.text()}    preimage ({pre})")
    data.update({"matrix": m, "rank": r, "support": args.support,
                 "relations": [{"relation": rel.image.text(), "image": list(rel.image.coeffs),
                                "preimage": list(rel.preimage)} for rel in rels]})
    return Result("polar-system", lines, data)


def cmd_c_family(args) -> Result:
    try:
        _, alpha = parse_binding(f"alpha={args.alpha}")
    except ValueError as exc:
        raise UsageError(f"--alpha: {exc}") from None
    rep = polarization.c_family_analysis(alpha)
    data = {
        "alpha": rep.alpha, "gamma": rep.gamma, "v": rep.v, "twisted": rep.twisted,
        "expansion": rep.expansion.text(), "psi_psi_part": list(rep.psi_psi_part),
        "gamma_relation": rep.gamma_relation.text(),
        "matches_gamma_relation": rep.matches_gamma_relation,
        "matches_modulo_jacobi": rep.matches_modulo_jacobi,
        "gamma_relation_implied": rep.gamma_relation_implied,
        "leibniz_residual": rep.leibniz_residual.text(),
        "equivalent_to_leibniz_law": rep.equivalent_to_leibniz_law,
        "v1_rank": rep.v1_rank, "lie_admissible": rep.lie_admissible,
        "three_power_associative": rep.three_power_associative,
        "in_weakly_associative_module": rep.in_weakly_associative_module,
        "same_module_as_weakly_associative": rep.same_module_as_weakly_associative,
        "rank": rep.rank,
    }
    return Result("c-family", rep.lines(), data)


# ---- parser ----------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="vassoc", description=__doc__.splitlines()[0])
    p.add_argument("--format", choices=("human", "structured"), default="human")
    sub = p.add_subparsers(dest="command", required=True)

    def add(name, func, file=False, v=False, w=False, help=None):
        sp = sub.add_parser(name, help=help)
        if file:
            sp.add_argument("file")
        if v:
            sp.add_argument("--v", required=v == "required")
        if w:
            sp.add_argument("--w")
        sp.add_argument("--param", action="append", metavar="NAME=RATIONAL",
                        help="bind a parameter of a named vector or of the input file")
        sp.add_argument("--format", choices=("human", "structured"), default=argparse.SUPPRESS)
        sp.set_defaults(func=func)
        return sp

    add("classify", cmd_classify, file=True, help="evaluate the whole identity catalog")
    sp = add("check", cmd_check, file=True, v="required", w=True, help="check one (v) or (v, w) identity")
    sp.add_argument("--mode", choices=("pair", "diff"))
    add("rank", cmd_rank, v="required", help="rank of a group algebra vector")
    add("orbit", cmd_orbit, v="required", help="left translates of a vector")
    add("mv", cmd_mv, v="required", help="the matrix M_v with kernel and V_Lad certificate")
    sp = add("deform", cmd_deform, file=True, v="required", w=True, help="verify a truncated deformation")
    sp.add_argument("--order", type=int, required=True)
    add("delta2-kernel", cmd_delta2_kernel, file=True, v="required", help="order-1 cocycles")
    add("lemma1", cmd_lemma1, file=True, help="all w killing every twisted Hochschild coboundary")
    sp = add("polarize", cmd_polarize, file=True, help="symmetric/skew split and Poisson-type checks")
    sp.add_argument("--emit", choices=("rho", "psi", "mu"))
    sp = add("polar-system", cmd_polar_system, v=True, w=True, help="polarized coefficient system")
    sp.add_argument("--family", choices=("assoc", "assoc_v", "vw_pair"))
    sp.add_argument("--support", type=int, default=3)
    sp = add("c-family", cmd_c_family, help="the one-parameter family C(alpha)")
    sp.add_argument("--alpha", required=True)
    return p


_VALUE_FLAGS = ("--v", "--w", "--alpha", "--param")


def _glue_values(argv: list) -> list:
    """Attach values such as ``-1/2`` or ``-t12 + c`` to their flag, which
    argparse would otherwise read as options."""
    out = []
    for tok in argv:
        if out and out[-1] in _VALUE_FLAGS and tok.startswith("-") and not tok.startswith("--"):
            out[-1] = f"{out[-1]}={tok}"
        else:
            out.append(tok)
    return out


def run(argv=None) -> tuple:
    """``(exit_code, stdout_text, stderr_text)``; never raises on bad input."""
    parser = build_parser()
    argv = _glue_values(list(sys.argv[1:] if argv is None else argv))
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0), "", ""
    try:
        result = args.func(args)
    except (ParseError, UsageError, VectorSyntaxError, ValueError) as exc:
        return 2, "", f"error: {exc}\n"
    return (0 if result.ok else 1), render(result, args.format), ""


def main(argv=None) -> int:
    code, out, err = run(argv)
    sys.stdout.write(out)
    sys.stderr.write(err)
    return code


if __name__ == "__main__":
    sys.exit(main())
