"""ginv: command-line front end.

Subcommands::

    ginv analyze SPEC            full report for one group
    ginv centre SPEC --phi SEL   modular invariant matrix of Z(G) for one automorphism
    ginv sn-doubles N            factorised partitions of N with sample pairs
    ginv an-classify RANGE       class-inverting classification of A_n

Exit codes: 0 success, 2 parse or usage error, 3 search budget exhausted
(answer unknown), 4 size cap exceeded.
"""
from __future__ import annotations

import argparse
import json
import sys
import time

import numpy as np

from . import __version__
from .automorphisms import (
    DEFAULT_BUDGET,
    SearchBudgetExceeded,
    automorphism_group,
    find_class_inverting,
    find_double_class_inverting,
    identity_automorphism,
    inversion_automorphism,
    is_ambivalent,
    is_double_class_inverting,
    is_doubly_ambivalent,
)
from .cache import SCHEMA, TableCache, default_cache_dir
from .catalog import build, parse_spec
from .centre import CENTRE_CAP, CentreTooLarge, centre, modular_invariant_matrix
from .chartable import CharacterTableError
from .double_classes import double_classes, sn_enumerate_factorized_partitions, sn_representative
from .group import DEFAULT_MAX_ORDER, GroupTooLarge
from .sym_alt import an_classification, splitting_types, an_self_inverse_parity

EXIT_OK, EXIT_USAGE, EXIT_UNKNOWN, EXIT_CAP = 0, 2, 3, 4
SN_DOUBLES_MAX_N = 16


class UsageError(Exception):
    pass


class Timer:
    def __init__(self):
        self.laps: dict[str, float] = {}

    def lap(self, name, fn, *args, **kw):
        t = time.perf_counter()
        out = fn(*args, **kw)
        self.laps[name] = round(time.perf_counter() - t, 4)
        return out


def _perm_text(p) -> str:
    s = str(p)
    return "e" if s == "()" else s


def _witness(G, phi):
    if phi is None:
        return None
    kind = "other"
    if phi.is_identity():
        kind = "identity"
    elif np.array_equal(phi.full_map, G.inv):
        kind = "inversion"
    return {"kind": kind, "images": [_perm_text(G.element(i)) for i in phi.gen_images]}


def _search(G, finder, budget):
    try:
        res = finder(G, budget=budget)
    except SearchBudgetExceeded as exc:
        return {"status": "unknown", "witness": None, "nodes": exc.nodes}, None
    except ValueError as exc:  # presentation-free group above the search cap
        return {"status": "unknown", "witness": None, "nodes": 0, "reason": str(exc)}, None
    phi = res.witness
    return {"status": "yes" if phi is not None else "no", "witness": _witness(G, phi),
            "nodes": res.nodes}, phi


def _group_record(text, G):
    return {"spec": text, "order": G.order, "degree": G.degree,
            "generators": [_perm_text(g) for g in G.generators]}


VERDICT_TEXT = {
    "yes": "physical: Z(G) has a dualising autoequivalence, so the diagonal modular invariant is realisable",
    "no": "not physical: no double class-inverting automorphism, so the diagonal modular invariant is not realisable",
    "unknown": "unknown: the automorphism search did not finish",
}


def cmd_analyze(args, cache) -> tuple[dict, int]:
    timer = Timer()
    spec = parse_spec(args.spec)
    G = timer.lap("build", build, spec, max_order=args.max_order)
    cl = timer.lap("classes", lambda: G.classes)
    dc = timer.lap("double_classes", double_classes, G)
    rep = {"schema": SCHEMA, "command": "analyze", "group": _group_record(str(spec), G)}
    rep["classes"] = {"count": cl.count, "sizes": [int(x) for x in cl.sizes]}
    rep["double_classes"] = {"count": dc.count}
    rep["ambivalent"] = is_ambivalent(G)
    rep["doubly_ambivalent"] = is_doubly_ambivalent(G)
    try:
        T = timer.lap("character_table", cache.table, G)
        rep["character_table"] = {"degrees": list(T.degrees), "prime": T.prime,
                                  "all_real": bool(np.all(T.real_rows()))}
    except CharacterTableError as exc:
        rep["character_table"] = {"error": str(exc)}
    ci, _ = timer.lap("class_inverting", _search, G, find_class_inverting, args.search_budget)
    dci, phi = timer.lap("double_class_inverting", _search, G, find_double_class_inverting,
                         args.search_budget)
    rep["class_inverting"] = ci
    rep["double_class_inverting"] = dci
    if G.order <= args.centre_cap:
        z = timer.lap("centre", centre, G, cap=args.centre_cap, table_fn=cache.table)
        rec = {"simple_count": z.count}
        if phi is not None:
            M = modular_invariant_matrix(G, phi, cap=args.centre_cap, table_fn=cache.table)
            rec["phi"] = "double class-inverting witness"
            rec["matrix_is_identity"] = bool(np.array_equal(M, np.eye(len(M), dtype=M.dtype)))
        rep["centre"] = rec
    else:
        rep["centre"] = None
    status = dci["status"]
    rep["verdict"] = {"physical": status, "summary": VERDICT_TEXT[status]}
    if args.timing:
        rep["timing"] = timer.laps
    return rep, EXIT_UNKNOWN if status == "unknown" or ci["status"] == "unknown" else EXIT_OK


def _select_phi(G, sel: str, budget: int):
    if sel == "identity":
        return identity_automorphism(G)
    if sel == "inversion":
        if not G.is_abelian:
            raise UsageError("--phi inversion needs an abelian group")
        return inversion_automorphism(G)
    try:
        k = int(sel)
    except ValueError:
        raise UsageError(f"--phi must be identity, inversion or an index, not {sel!r}") from None
    auts = automorphism_group(G, budget=budget)
    if not 0 <= k < len(auts):
        raise UsageError(f"automorphism index {k} out of range 0..{len(auts) - 1}")
    return auts[k]


def cmd_centre(args, cache) -> tuple[dict, int]:
    spec = parse_spec(args.spec)
    G = build(spec, max_order=args.max_order)
    if G.order > args.centre_cap:
        raise CentreTooLarge(G.order, args.centre_cap)
    phi = _select_phi(G, args.phi, args.search_budget)
    z = centre(G, cap=args.centre_cap, table_fn=cache.table)
    M = modular_invariant_matrix(G, phi, cap=args.centre_cap, table_fn=cache.table)
    dual = z.dual_permutation
    simples = []
    for s in z.simples:
        a = int(z.dclasses.group.classes.reps[s.class_index])
        T = z.tables[s.class_index]
        simples.append({"index": s.index, "class_rep": _perm_text(G.element(a)),
                        "irrep": s.irrep_index, "degree": int(T.degrees[s.irrep_index]),
                        "dual": int(dual[s.index])})
    rep = {"schema": SCHEMA, "command": "centre", "group": _group_record(str(spec), G),
           "phi": {"selector": args.phi, **_witness(G, phi)},
           "simples": simples, "matrix": M.tolist(),
           "is_identity": bool(np.array_equal(M, np.eye(len(M), dtype=M.dtype))),
           "double_class_inverting": is_double_class_inverting(G, phi)}
    return rep, EXIT_OK


def cmd_sn_doubles(args, cache) -> tuple[dict, int]:
    n = args.n
    if n < 1:
        raise UsageError("n must be positive")
    if n > SN_DOUBLES_MAX_N:
        raise GroupTooLarge(SN_DOUBLES_MAX_N)
    rows = []
    for fp in sn_enumerate_factorized_partitions(n):
        sigma, pi = sn_representative(fp)
        rows.append({"partition": str(fp), "blocks": [list(b) for b in fp.blocks],
                     "sigma": _perm_text(sigma), "pi": _perm_text(pi)})
    return {"schema": SCHEMA, "command": "sn-doubles", "n": n, "count": len(rows),
            "rows": rows}, EXIT_OK


def _parse_range(text: str) -> list[int]:
    out = []
    for part in text.split(","):
        part = part.strip()
        if ".." in part:
            lo, hi = part.split("..", 1)
            out.extend(range(int(lo), int(hi) + 1))
        elif part:
            out.append(int(part))
    if not out or min(out) < 1:
        raise UsageError(f"bad range {text!r}; use e.g. 1..14 or 3,5,7")
    return out


def cmd_an_classify(args, cache) -> tuple[dict, int]:
    try:
        ns = _parse_range(args.range)
    except ValueError:
        raise UsageError(f"bad range {args.range!r}; use e.g. 1..14 or 3,5,7") from None
    rows, code = [], EXIT_OK
    for n in ns:
        types = splitting_types(n)
        row = {"n": n, "classification": an_classification(n).value,
               "splitting_types": [{"parts": list(t.parts), "self_inverse": an_self_inverse_parity(t)}
                                   for t in types]}
        if args.search and 3 <= n <= 7:
            G = build(f"A{n}", max_order=args.max_order)
            ci, _ = _search(G, find_class_inverting, args.search_budget)
            dci, _ = _search(G, find_double_class_inverting, args.search_budget)
            row["search"] = {"class_inverting": ci, "double_class_inverting": dci}
            if "unknown" in (ci["status"], dci["status"]):
                code = EXIT_UNKNOWN
        rows.append(row)
    return {"schema": SCHEMA, "command": "an-classify", "rows": rows}, code


# --- text rendering ----------------------------------------------------------

def _render(rep: dict) -> str:
    cmd = rep["command"]
    lines = []
    if "group" in rep:
        g = rep["group"]
        lines.append(f"group {g['spec']}: order {g['order']}, degree {g['degree']}")
    if cmd == "analyze":
        lines.append(f"conjugacy classes: {rep['classes']['count']} (sizes {rep['classes']['sizes']})")
        lines.append(f"double classes: {rep['double_classes']['count']}")
        lines.append(f"ambivalent: {rep['ambivalent']}   doubly ambivalent: {rep['doubly_ambivalent']}")
        ct = rep["character_table"]
        if "error" in ct:
            lines.append(f"character table: {ct['error']}")
        else:
            lines.append(f"irreducible degrees: {ct['degrees']}   all real: {ct['all_real']}")
        for key, label in (("class_inverting", "class-inverting"),
                           ("double_class_inverting", "double class-inverting")):
            r = rep[key]
            w = r["witness"]
            wtxt = f" ({w['kind']}: {', '.join(w['images'])})" if w else ""
            lines.append(f"{label} automorphism: {r['status']}{wtxt}  [{r['nodes']} nodes]")
        if rep["centre"] is not None:
            c = rep["centre"]
            extra = f", witness matrix is identity: {c['matrix_is_identity']}" if "phi" in c else ""
            lines.append(f"centre simples: {c['simple_count']}{extra}")
        lines.append("verdict: " + rep["verdict"]["summary"])
        if "timing" in rep:
            lines.append("timing: " + ", ".join(f"{k} {v:.3f}s" for k, v in rep["timing"].items()))
    elif cmd == "centre":
        p = rep["phi"]
        lines.append(f"phi = {p['selector']} ({p['kind']}: {', '.join(p['images'])})")
        lines.append(f"{len(rep['simples'])} simples; matrix is identity: {rep['is_identity']}")
        for row in rep["matrix"]:
            lines.append(" ".join(str(x) for x in row))
    elif cmd == "sn-doubles":
        lines.append(f"n = {rep['n']}: {rep['count']} double classes")
        width = max(len(r["partition"]) for r in rep["rows"])
        for r in rep["rows"]:
            lines.append(f"{r['partition']:<{width}}  ({r['sigma']}, {r['pi']})")
    elif cmd == "an-classify":
        for r in rep["rows"]:
            line = f"A{r['n']}: {r['classification']}"
            if "search" in r:
                s = r["search"]
                line += (f"   [search: class-inverting {s['class_inverting']['status']},"
                         f" double class-inverting {s['double_class_inverting']['status']}]")
            lines.append(line)
    return "\n".join(lines)


# --- entry point -------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="emit a JSON report")
    common.add_argument("--cache-dir", default=None,
                        help="character-table cache directory (default: $GINV_CACHE or ~/.cache/ginv)")
    common.add_argument("--no-cache", action="store_true", help="do not read or write the cache")
    common.add_argument("--max-order", type=int, default=DEFAULT_MAX_ORDER,
                        help=f"element cap for group closure (default {DEFAULT_MAX_ORDER})")
    common.add_argument("--search-budget", type=int, default=DEFAULT_BUDGET,
                        help=f"node budget for automorphism searches (default {DEFAULT_BUDGET})")
    common.add_argument("--centre-cap", type=int, default=CENTRE_CAP,
                        help=f"largest |G| for Drinfeld-centre computations (default {CENTRE_CAP})")
    common.add_argument("--timing", action="store_true",
                        help="include wall-clock timings (makes output run-dependent)")

    p = argparse.ArgumentParser(prog="ginv", description=__doc__.split("\n\n")[0])
    p.add_argument("--version", action="version", version=f"ginv {__version__}")
    sub = p.add_subparsers(dest="command", required=True)
    a = sub.add_parser("analyze", parents=[common], help="full report for a group")
    a.add_argument("spec", help='group spec, e.g. S5, A6, C12, "Ab[2,4,3]", D4, Q8, M11, H27, F21, '
                                '"perm: (1 2 3)(4 5), (1 2)"')
    c = sub.add_parser("centre", parents=[common], help="modular invariant matrix of Z(G)")
    c.add_argument("spec")
    c.add_argument("--phi", default="identity",
                   help="identity, inversion (abelian groups) or an index into Aut(G)")
    s = sub.add_parser("sn-doubles", parents=[common], help="double classes of S_n")
    s.add_argument("n", type=int)
    r = sub.add_parser("an-classify", parents=[common], help="class-inverting automorphisms of A_n")
    r.add_argument("range", help="e.g. 1..14 or 3,5,7")
    r.add_argument("--search", action="store_true",
                   help="also run the exhaustive automorphism searches for 3 <= n <= 7")
    return p


COMMANDS = {"analyze": cmd_analyze, "centre": cmd_centre,
            "sn-doubles": cmd_sn_doubles, "an-classify": cmd_an_classify}


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    cache = TableCache(None if args.no_cache else (args.cache_dir or default_cache_dir()))
    try:
        rep, code = COMMANDS[args.command](args, cache)
    except (UsageError, ValueError) as exc:
        if isinstance(exc, (GroupTooLarge, CentreTooLarge)):
            print(f"ginv: size cap exceeded: {exc}", file=sys.stderr)
            return EXIT_CAP
        print(f"ginv: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except SearchBudgetExceeded as exc:
        print(f"ginv: {exc}", file=sys.stderr)
        return EXIT_UNKNOWN
    if args.json:
        print(json.dumps(rep, indent=2, sort_keys=True))
    else:
        print(_render(rep))
    return code


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
