"""Command-line front end: ``g12 <verb> [--c p/q] [--tau LABEL] [--degree N] ...``.

Exit status is 0 on success, 1 for invalid input and 2 when an internal
consistency check fails.  Output is deterministic; JSON is key-sorted.
"""

from __future__ import annotations

import argparse
import json
import re
import sys
from fractions import Fraction

from .errors import DomainError, InconsistencyError
from .group import IRREP_LABELS

VERBS = ("semisimple", "weights", "blocks", "decompose-sym", "brank", "singular",
         "amatrix", "category", "aspherical", "transport")

ASPHERICAL_CANDIDATES = ("1/4", "1/2", "1/3", "2/3", "3/4", "5/4",
                         "1/12", "5/12", "7/12", "11/12")


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        sys.stderr.write(f"g12: error: {message}\n")
        raise SystemExit(1)


def parse_fraction(text: str) -> Fraction:
    m = re.fullmatch(r"\s*(-?\d+)(?:/(\d+))?\s*", text or "")
    if not m:
        raise DomainError(f"malformed fraction {text!r}; expected p/q")
    num, den = int(m.group(1)), int(m.group(2) or 1)
    if den == 0:
        raise DomainError("zero denominator")
    return Fraction(num, den)


def fmt(q: Fraction) -> str:
    return f"{q.numerator}/{q.denominator}"


def _need(args, *names):
    for name in names:
        if getattr(args, name) is None:
            raise DomainError(f"--{name} is required for '{args.verb}'")
    if getattr(args, "tau", None) is not None and args.tau not in IRREP_LABELS:
        raise DomainError(f"unknown irrep label {args.tau!r}; expected one of {list(IRREP_LABELS)}")
    if getattr(args, "degree", None) is not None and args.degree < 0:
        raise DomainError("degree must be non-negative")


def _mults(vec) -> dict:
    return {lab: m for lab, m in zip(IRREP_LABELS, vec) if m}


def cmd_semisimple(args) -> dict:
    from .hecke import schur_evaluate
    _need(args, "c")
    c = parse_fraction(args.c)
    vanishing = [lab for lab in IRREP_LABELS if not schur_evaluate(lab, c)]
    return {"c": fmt(c), "semisimple": not vanishing, "vanishing_schur_elements": vanishing}


def cmd_weights(args) -> dict:
    from .cherednik import lowest_weight
    _need(args, "c")
    c = parse_fraction(args.c)
    return {"c": fmt(c), "weights": {lab: fmt(lowest_weight(lab, c)) for lab in IRREP_LABELS}}


def cmd_blocks(args) -> dict:
    from .category import blocks
    _need(args, "c")
    c = parse_fraction(args.c)
    return {"c": fmt(c), "blocks": blocks(c)}


def cmd_decompose_sym(args) -> dict:
    from .characters import sym_power_decompose
    _need(args, "tau", "degree")
    return {"tau": args.tau, "degree": args.degree,
            "decomposition": sym_power_decompose(args.degree, args.tau)}


def cmd_brank(args) -> dict:
    from .cherednik import ModuleContext, b_matrix, form_tower
    _need(args, "c", "tau", "degree")
    ctx = ModuleContext(args.tau, parse_fraction(args.c))
    tower = form_tower(ctx.tau, ctx.c)
    out = {
        "c": fmt(ctx.c),
        "tau": ctx.tau,
        "degree": args.degree,
        "dim": ctx.graded_dim(args.degree),
        "rank": tower.rank(args.degree),
        "multiplicities": _mults(tower.multiplicities(args.degree)),
    }
    if args.dump_form:
        out["form"] = b_matrix(ctx, args.degree).to_json()
    return out


def cmd_singular(args) -> dict:
    from .characters import decompose
    from .cherednik import ModuleContext, singular_subspace
    _need(args, "c", "tau", "degree")
    ctx = ModuleContext(args.tau, parse_fraction(args.c))
    chi = singular_subspace(ctx, args.degree)
    return {"c": fmt(ctx.c), "tau": ctx.tau, "degree": args.degree,
            "singular": _mults(decompose(chi))}


def cmd_amatrix(args) -> dict:
    from .amatrix import a_nullspace, build_a_matrix
    _need(args, "c")
    c = parse_fraction(args.c)
    A = build_a_matrix(c)
    null = [[x if isinstance(x, int) else x.to_json() for x in v] for v in a_nullspace(c)]
    return {"c": fmt(c), "matrix": A.to_json(), "nullspace": null}


def cmd_category(args) -> dict:
    from .category import report
    _need(args, "c")
    return report(parse_fraction(args.c), args.depth)


def cmd_aspherical(args) -> dict:
    from .category import is_aspherical
    if args.c is not None:
        cands = [parse_fraction(args.c)]
    else:
        cands = [s * parse_fraction(x) for x in ASPHERICAL_CANDIDATES for s in (1, -1)]
    results = {}
    for c in sorted(cands):
        flag, witnesses = is_aspherical(c, args.depth)
        results[fmt(c)] = {"aspherical": flag, "witnesses": witnesses}
    return {"depth": args.depth, "results": results,
            "aspherical": [k for k, v in results.items() if v["aspherical"]]}


def cmd_transport(args) -> dict:
    from .category import (decomposition_matrix_at, finite_dimensionals_at,
                           scaling_permutation, sign_permutation)
    _need(args, "c")
    c = parse_fraction(args.c)
    if c == 0:
        raise DomainError("c = 0 has no transport")
    r, d = abs(c.numerator), c.denominator
    out = {"c": fmt(c)}
    if d in (2, 3, 4, 12):
        phi = scaling_permutation(d, r)
        out["scaling"] = {"d": d, "r": r, "permutation": phi.permutation,
                          "conjugate": phi.conjugate}
    if c < 0:
        out["sign_flip"] = sign_permutation()
    dm = decomposition_matrix_at(c, args.depth)
    out["l_in_m"] = {tau: dm.l_row(tau).format("M") for tau in IRREP_LABELS}
    out["finite_dimensional"] = finite_dimensionals_at(c, args.depth)
    return out


COMMANDS = {
    "semisimple": cmd_semisimple,
    "weights": cmd_weights,
    "blocks": cmd_blocks,
    "decompose-sym": cmd_decompose_sym,
    "brank": cmd_brank,
    "singular": cmd_singular,
    "amatrix": cmd_amatrix,
    "category": cmd_category,
    "aspherical": cmd_aspherical,
    "transport": cmd_transport,
}


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="g12", description="Category O for the rational Cherednik algebra of G12.")
    p.add_argument("verb", choices=VERBS)
    p.add_argument("--c", help="parameter as p/q")
    p.add_argument("--tau", help="irrep label: " + ", ".join(IRREP_LABELS))
    p.add_argument("--degree", type=int)
    p.add_argument("--depth", type=int, default=12, help="truncation degree (default 12)")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.add_argument("--out", help="write the report to this file instead of stdout")
    p.add_argument("--dump-form", action="store_true",
                   help="include the form matrix in 'brank' output (debugging)")
    return p


def render_text(data, indent: int = 0) -> str:
    pad = "  " * indent
    lines = []
    for key in sorted(data):
        value = data[key]
        if isinstance(value, dict):
            lines.append(f"{pad}{key}:")
            lines.append(render_text(value, indent + 1))
        else:
            lines.append(f"{pad}{key}: {json.dumps(value, sort_keys=True)}")
    return "\n".join(line for line in lines if line)


def render(data: dict, form: str) -> str:
    if form == "json":
        return json.dumps(data, indent=2, sort_keys=True) + "\n"
    return render_text(data) + "\n"


def _join_negative_values(argv):
    """Let ``--c -1/2`` work by rewriting it as ``--c=-1/2``."""
    out, i = [], 0
    while i < len(argv):
        if argv[i] == "--c" and i + 1 < len(argv) and argv[i + 1].startswith("-"):
            out.append(f"--c={argv[i + 1]}")
            i += 2
        else:
            out.append(argv[i])
            i += 1
    return out


def main(argv=None) -> int:
    argv = _join_negative_values(list(sys.argv[1:] if argv is None else argv))
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    if args.depth < 0:
        sys.stderr.write("g12: error: depth must be non-negative\n")
        return 1
    try:
        data = COMMANDS[args.verb](args)
    except InconsistencyError as exc:
        sys.stderr.write(f"g12: internal inconsistency: {exc}\n")
        return 2
    except (DomainError, ValueError) as exc:
        sys.stderr.write(f"g12: error: {exc}\n")
        return 1
    text = render(data, args.format)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return 0


if __name__ == "__main__":  # pragma: no cover
    raise SystemExit(main())
