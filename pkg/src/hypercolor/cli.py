"""Command-line front end.

Input is a JSON file (or ``-`` for standard input) holding a hypergraph
``{"vertices": [...], "edges": [[...], ...]}``, optionally with a list
assignment under ``"lists"`` and a vector function under ``"f"``.  Reports
are JSON on standard output or in the ``--out`` file.

Exit codes: 0 when every check passes, 1 when a violation is found, 2 for
input errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from pathlib import Path
from typing import Any, Mapping, Sequence

from . import _json
from .coloring import chi_P, chi_list_P, find_PL_coloring, is_PL_critical, lists_from_json, lists_to_json
from .core import Hypergraph, from_dict, induced, shrink, to_dict
from .degeneracy import (
    certificate_to_dict,
    check_certificate,
    classify_hard_pair,
    degree_feasible,
    find_f_partition,
    is_strictly_k_degenerate,
)
from .enumeration import EnumerationBounds, canonical_form, enum_hypergraphs, search_critical
from .errors import BudgetExceeded, DomainError, HypercolorError, PreconditionError
from .property import builtin
from .structure import blocks, classify_brick, components
from .sweeps import sweep_hard_pairs
from .theorems import (
    verify_brooks,
    verify_gallai_bound,
    verify_sigma_lemmas,
    verify_theorem3,
    verify_theorem6,
)

OK, VIOLATION, INPUT_ERROR = 0, 1, 2

VERIFY_NAMES = ("theorem3", "theorem4", "brooks", "theorem6", "gallai-bound", "sigma-lemmas", "degeneracy", "monotonicity")


class InputError(Exception):
    pass


@dataclass
class Instance:
    H: Hypergraph
    lists: dict | None = None
    f: dict | None = None


def _read_json(source: str) -> Any:
    try:
        text = sys.stdin.read() if source == "-" else Path(source).read_text(encoding="utf-8")
    except OSError as e:
        raise InputError(f"{source}: {e.strerror}") from None
    try:
        return json.loads(text)
    except json.JSONDecodeError as e:
        raise InputError(f"{source}:{e.lineno}:{e.colno}: malformed JSON: {e.msg}") from None


def _vector_function(H: Hypergraph, data: Any) -> dict[str, tuple[int, ...]]:
    if not isinstance(data, Mapping):
        raise InputError("vector function must be an object mapping vertex -> array")
    extra = set(data) - set(H.vertices)
    if extra:
        raise InputError(f"vector function names unknown vertices {sorted(extra)}")
    out = {}
    for v in H.vertices:
        xs = data.get(v)
        if not isinstance(xs, list) or not all(isinstance(x, int) and not isinstance(x, bool) and x >= 0 for x in xs):
            raise InputError(f"vector function at {v!r} must be an array of natural numbers")
        out[v] = tuple(xs)
    return out


def parse_input(source: str, lists_path: str | None = None, f_path: str | None = None) -> Instance:
    """Read and validate a hypergraph with optional list assignment and vector function."""
    data = _read_json(source)
    if not isinstance(data, Mapping):
        raise InputError("input must be a JSON object")
    try:
        H = from_dict({k: data[k] for k in ("vertices", "edges") if k in data})
        inst = Instance(H)
        raw_lists = _read_json(lists_path) if lists_path else data.get("lists")
        if raw_lists is not None:
            inst.lists = lists_from_json(H, raw_lists)
    except HypercolorError as e:
        raise InputError(str(e)) from None
    raw_f = _read_json(f_path) if f_path else data.get("f")
    if raw_f is not None:
        inst.f = _vector_function(H, raw_f)
    return inst


# -- verbs --------------------------------------------------------------------------


def _need(value, what: str):
    if value is None:
        raise InputError(f"this command needs {what}")
    return value


def cmd_blocks(args, inst: Instance) -> tuple[int, dict]:
    H = inst.H
    D = blocks(H)
    out = []
    for i, b in enumerate(D.blocks):
        B = induced(H, b)
        c = classify_brick(B)
        out.append(
            {
                "id": i,
                "vertices": list(b),
                "edges": list(D.block_edges[i]),
                "end_block": D.is_end_block(i),
                "brick": {"kind": c.kind, "t": c.t, "n": c.n},
            }
        )
    return OK, {
        "components": [list(c) for c in components(H)],
        "separating_vertices": sorted(D.separating_vertices),
        "blocks": out,
    }


def cmd_degeneracy(args, inst: Instance) -> tuple[int, dict]:
    H = inst.H
    k = 0
    while not is_strictly_k_degenerate(H, k):
        k += 1
    report: dict = {"least_strict_degeneracy": k}
    if args.k is not None:
        report["strictly_k_degenerate"] = {"k": args.k, "value": is_strictly_k_degenerate(H, args.k)}
    if inst.f is not None:
        part = find_f_partition(H, inst.f, args.p)
        report["degree_feasible"] = degree_feasible(H, inst.f)
        report["f_partition"] = [list(x) for x in part] if part is not None else None
    return OK, report


def cmd_color(args, inst: Instance) -> tuple[int, dict]:
    H, P = inst.H, builtin(args.property)
    report: dict = {"property": P.name}
    if inst.lists is not None:
        phi = find_PL_coloring(H, P, inst.lists)
        report["colorable"] = phi is not None
        report["coloring"] = dict(sorted(phi.items())) if phi is not None else None
        return OK, report
    report["chi"] = chi_P(H, P)
    try:
        report["chi_list"] = chi_list_P(H, P, max_order=args.max_order or 6, max_k=args.k or 3)
    except BudgetExceeded as e:
        report["chi_list"] = None
        report["chi_list_skipped"] = str(e)
    return OK, report


def cmd_critical(args, inst: Instance) -> tuple[int, dict]:
    H, P = inst.H, builtin(args.property)
    L = _need(inst.lists, "a list assignment (--lists or \"lists\")")
    rep = is_PL_critical(H, P, L)
    report = {"property": P.name, **rep.to_dict()}
    if rep.is_critical:
        report["low_vertex_hypergraph"] = to_dict(shrink(H, rep.low_vertices))
    code = VIOLATION if rep.is_critical and not rep.prop2_ok else OK
    return code, report


def cmd_hardpair(args, inst: Instance) -> tuple[int, dict]:
    H = inst.H
    f = _need(inst.f, "a vector function (--f or \"f\")")
    cert = classify_hard_pair(H, f)
    part = find_f_partition(H, f)
    report: dict = {
        "degree_feasible": degree_feasible(H, f),
        "hard_pair": cert is not None,
        "certificate": certificate_to_dict(cert) if cert is not None else None,
        "f_partition": [list(x) for x in part] if part is not None else None,
    }
    code = OK
    if cert is not None:
        try:
            check_certificate(H, f, cert)
        except ValueError as e:
            report["certificate_error"] = str(e)
            code = VIOLATION
    if degree_feasible(H, f) and (cert is None) == (part is None):
        code = VIOLATION
    return code, report


def _bounds(args) -> dict:
    out = {}
    for item in args.bounds or []:
        key, _, value = item.partition("=")
        field = {"order": "max_order", "edges": "max_edges", "edge-size": "max_edge_size", "mult": "max_multiplicity"}.get(key)
        if field is None or not value.isdigit():
            raise InputError(f"bad --bounds entry {item!r}; use order=N, edges=N, edge-size=N or mult=N")
        out[field] = int(value)
    for flag, field in (("max_order", "max_order"), ("max_edges", "max_edges"), ("max_edge_size", "max_edge_size"), ("max_mult", "max_multiplicity")):
        if getattr(args, flag) is not None:
            out[field] = getattr(args, flag)
    return out


def _with(b: EnumerationBounds, overrides: dict) -> EnumerationBounds:
    return EnumerationBounds(**{**b.__dict__, **overrides})


def _sweep(args) -> tuple[int, dict]:
    from . import sweeps

    name = args.name
    over = _bounds(args)
    props = [args.property] if args.property else ["O", "D:1"]
    if name == "theorem4":
        res = sweep_hard_pairs(_with(sweeps.HARDPAIR_BOUNDS, over), p=args.p or 2)
    elif name == "degeneracy":
        res = sweeps.sweep_degeneracy(_with(sweeps.SMALL_BOUNDS, over))
    elif name == "theorem3":
        res = sweeps.sweep_theorem3(props, [args.k] if args.k else (1, 2), _with(sweeps.SMALL_BOUNDS, over))
    elif name == "brooks":
        bs = [_with(sweeps.MULTIGRAPH_BOUNDS, over), _with(sweeps.HARDPAIR_BOUNDS, over)] if not over else [
            _with(sweeps.HARDPAIR_BOUNDS, over)
        ]
        res = sweeps.sweep_brooks(props, bs)
    elif name == "theorem6":
        res = sweeps.sweep_theorem6(props, _with(sweeps.SMALL_BOUNDS, over))
    elif name == "gallai-bound":
        cases = [(args.property, args.k)] if args.property and args.k else sweeps.GALLAI_CASES
        bs = [_with(b, over) for b in sweeps.GALLAI_BOUNDS] if not over else [_with(sweeps.GALLAI_BOUNDS[0], over)]
        res = sweeps.sweep_gallai(cases, bs)
    elif name == "sigma-lemmas":
        res = sweeps.sweep_sigma(tree_delta=args.delta or 4, max_order=over.get("max_order", 9), props=props)
    else:
        res = sweeps.sweep_monotonicity(props, _with(sweeps.SMALL_BOUNDS, over))
    return (OK if res.passed else VIOLATION), res.to_dict()


def _single(args, inst: Instance) -> tuple[int, dict]:
    H = inst.H
    name = args.name
    P = builtin(args.property or "O")
    if name == "theorem4":
        f = _need(inst.f, "a vector function (--f or \"f\")")
        return cmd_hardpair(args, Instance(H, f=f))
    if name == "theorem3":
        rep = verify_theorem3(H, P, _need(inst.lists, "a list assignment"))
    elif name == "brooks":
        rep = verify_brooks(H, P, max_order=args.max_order or 6, max_k=args.k or 3)
    elif name == "theorem6":
        rep = verify_theorem6(H, P, _need(inst.lists, "a list assignment"))
    elif name == "gallai-bound":
        rep = verify_gallai_bound(H, P, _need(inst.lists, "a list assignment"))
    elif name == "sigma-lemmas":
        rep = verify_sigma_lemmas(H, P, _need(args.delta, "--delta"))
    else:
        raise InputError(f"verify {name} runs as a sweep only")
    return (OK if rep.passed else VIOLATION), rep.to_dict()


def cmd_verify(args, inst: Instance | None) -> tuple[int, dict]:
    if inst is None:
        return _sweep(args)
    return _single(args, inst)


def cmd_enumerate(args) -> tuple[int, list[str]]:
    over = _bounds(args)
    b = EnumerationBounds(
        max_order=over.get("max_order", 4),
        max_edges=over.get("max_edges", 6),
        max_edge_size=over.get("max_edge_size", 2),
        max_multiplicity=over.get("max_multiplicity", 1),
        connected_only=args.connected,
    )
    lines = []
    if args.property:
        P = builtin(args.property)
        for H, L in search_critical(P, args.k or 1, b):
            lines.append(json.dumps({"hypergraph": json.loads(canonical_form(H)), "lists": lists_to_json(L)}, sort_keys=True))
    else:
        lines = [canonical_form(H) for H in enum_hypergraphs(b)]
    return OK, lines


# -- entry point --------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="hypercolor", description="Generalized hypergraph colouring toolkit.")
    sub = ap.add_subparsers(dest="verb", required=True)

    def common(p: argparse.ArgumentParser, needs_input: bool = True) -> None:
        if needs_input:
            p.add_argument("input", help="JSON file, or - for standard input")
        p.add_argument("--property", help="O, S:k or D:k")
        p.add_argument("--lists", help="list assignment JSON file")
        p.add_argument("--f", dest="f_path", help="vector function JSON file")
        p.add_argument("--out", help="write the report here instead of standard output")
        p.add_argument("--max-order", type=int)
        p.add_argument("--max-edges", type=int)
        p.add_argument("--max-edge-size", type=int)
        p.add_argument("--max-mult", type=int)
        p.add_argument("--bounds", nargs="*", metavar="KEY=N")
        p.add_argument("--p", type=int)
        p.add_argument("--k", type=int)
        p.add_argument("--delta", type=int)

    for verb in ("blocks", "degeneracy", "hardpair"):
        common(sub.add_parser(verb))
    for verb in ("color", "critical"):
        p = sub.add_parser(verb)
        common(p)
        p.set_defaults(property="O")
    v = sub.add_parser("verify")
    v.add_argument("name", choices=VERIFY_NAMES)
    v.add_argument("input", nargs="?", help="single instance; omit to run the sweep")
    common(v, needs_input=False)
    e = sub.add_parser("enumerate")
    common(e, needs_input=False)
    e.add_argument("--connected", action="store_true")
    return ap


def _emit(payload: str, out: str | None) -> None:
    if out:
        Path(out).write_text(payload + "\n", encoding="utf-8")
    else:
        sys.stdout.write(payload + "\n")


def run(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        if args.verb == "enumerate":
            code, lines = cmd_enumerate(args)
            _emit("\n".join(lines), args.out)
            return code
        inst = None
        if getattr(args, "input", None) is not None:
            inst = parse_input(args.input, args.lists, args.f_path)
        handler = {
            "blocks": cmd_blocks,
            "degeneracy": cmd_degeneracy,
            "color": cmd_color,
            "critical": cmd_critical,
            "hardpair": cmd_hardpair,
            "verify": cmd_verify,
        }[args.verb]
        code, report = handler(args, inst)
    except InputError as e:
        print(f"error: {e}", file=sys.stderr)
        return INPUT_ERROR
    except PreconditionError as e:
        print(f"error: precondition failed: {e}", file=sys.stderr)
        return INPUT_ERROR
    except (DomainError, BudgetExceeded) as e:
        print(f"error: {e}", file=sys.stderr)
        return INPUT_ERROR
    _emit(_json.dumps(report), args.out)
    return code


def main() -> None:
    raise SystemExit(run())


if __name__ == "__main__":
    main()
