"""Command line entry point: ``steenrod-bounds <command> ...``.

Exit codes: 0 success, 1 a verification claim failed, 2 bad arguments.
"""

from __future__ import annotations

import argparse
import json
import sys
import time

from . import __version__, bounds, milnor, polyaction, seqcomb, verify
from .fp import is_prime

SCHEMA = 1


def format_word(word) -> str:
    return "P(" + ",".join(map(str, word)) + ")" if word else "1"


def format_xi(exponents) -> str:
    return milnor.format_milnor(exponents) if exponents else "1"


def document(command: str, params: dict, result, started: float) -> dict:
    return {
        "schema": SCHEMA,
        "command": command,
        "params": params,
        "result": result,
        "version": __version__,
        "elapsed_s": round(time.perf_counter() - started, 6),
    }


def dumps(doc: dict) -> str:
    return json.dumps(doc, sort_keys=True, indent=2)


def _prime(parser, p):
    if not is_prime(p):
        parser.error(f"{p} is not a prime")
    return p


def _nonneg(parser, name, v):
    if v < 0:
        parser.error(f"{name} must be nonnegative")
    return v


def cmd_bounds(args, parser):
    if args.n < 1:
        parser.error("n must be a positive integer")
    report = bounds.bound_report(args.n, superseded=args.show_superseded)
    payload = report.to_dict()
    lines = [f"n = {args.n}", f"{'p':>4} {'nu_lower':>9} {'nu_upper':>9} {'exact':>6}"]
    for b in report.per_prime:
        exact = "-" if b.exact is None else str(b.exact)
        lines.append(f"{b.p:>4} {b.nu_lower:>9} {b.nu_upper:>9} {exact:>6}")
    lines.append(f"k_U  lower {report.ku_lower}  upper {report.ku_upper}")
    lines.append(f"k_SO lower {report.kso_lower}  upper {report.kso_upper}")
    if report.ku_exact is not None:
        lines.append(f"k_U  exact {report.ku_exact}")
    if isinstance(report.kso_exact, frozenset):
        lines.append("k_SO exact one of " + ", ".join(map(str, sorted(report.kso_exact))))
    elif report.kso_exact is not None:
        lines.append(f"k_SO exact {report.kso_exact}")
    if report.ku_stable is not None:
        lines.append(f"superseded stable bounds: k_U {report.ku_stable}  k_SO {report.kso_stable}")
    return {"n": args.n, "show_superseded": args.show_superseded}, payload, lines


def cmd_chi(args, parser):
    p = _prime(parser, args.p)
    r = _nonneg(parser, "r", args.r)
    chi = milnor.chi_pr(p, r)
    if args.basis == "milnor":
        terms = [(list(m), c, format_xi(m)) for m, c in chi.sorted_terms()]
    else:
        combo = milnor.milnor_to_admissible(chi)
        ordered = sorted(combo.items(), key=lambda kv: seqcomb.right_lex_key(kv[0]), reverse=True)
        terms = [(list(w), c, format_word(w)) for w, c in ordered]
    payload = {
        "degree": 2 * r * (p - 1),
        "basis": args.basis,
        "terms": [{"exponents": e, "coeff": c, "label": s} for e, c, s in terms],
    }
    lines = [f"chi(P^{r}) at p={p}, degree {payload['degree']}, {args.basis} basis:"]
    lines += [f"  {c} * {s}" for _, c, s in terms] or ["  0"]
    return {"p": p, "r": r, "basis": args.basis}, payload, lines


def cmd_ex(args, parser):
    p = _prime(parser, args.p)
    r_max = _nonneg(parser, "r_max", args.r_max)
    rows = []
    for r in range(r_max + 1):
        v = seqcomb.ex(p, r)
        rows.append({"r": r, "ex": v, "diff": None if r == 0 else v - rows[-1]["ex"],
                     "greatest": list(seqcomb.greatest_in_upsilon_r(p, r))})
    lines = [f"{'r':>4} {'ex':>5} {'diff':>5}  greatest"]
    for row in rows:
        diff = "" if row["diff"] is None else str(row["diff"])
        lines.append(f"{row['r']:>4} {row['ex']:>5} {diff:>5}  {tuple(row['greatest'])}")
    return {"p": p, "r_max": r_max}, {"rows": rows}, lines


def cmd_upsilon(args, parser):
    p = _prime(parser, args.p)
    r = _nonneg(parser, "r", args.r)
    seqs = seqcomb.enumerate_upsilon_r(p, r)
    top = seqcomb.greatest_in_upsilon_r(p, r)
    entries = [{"seq": list(j), "greatest": j == top, "admissible": list(seqcomb.gamma_inv(j, p)),
                "excess": 2 * sum(j)} for j in seqs]
    lines = [f"{len(seqs)} sequences of weight {r} at p={p} (descending, * = greatest):"]
    for e in entries:
        mark = "*" if e["greatest"] else " "
        lines.append(f"  {tuple(e['seq'])}{mark}  <- {format_word(e['admissible'])}  excess {e['excess']}")
    return {"p": p, "r": r}, {"sequences": entries, "greatest": list(top)}, lines


def cmd_act(args, parser):
    p = _prime(parser, args.p)
    if args.r < 1:
        parser.error("r must be positive")
    rep = polyaction.chi_nontriviality_witness(p, args.r)
    terms = [{"monomial": list(m), "coeff": c, "label": polyaction.format_monomial(m)}
             for m, c in rep.result.sorted_terms()]
    payload = {
        "ok": rep.ok,
        "nvars": rep.nvars,
        "greatest": list(rep.greatest),
        "witness": list(rep.witness_monomial),
        "witness_label": polyaction.format_monomial(rep.witness_monomial),
        "witness_coeff": rep.witness_coefficient,
        "witness_is_leading": rep.is_leading,
        "terms": terms,
    }
    lines = [
        f"chi(P^{args.r}) on {'*'.join(f'i{k}' for k in range(1, rep.nvars + 1))} at p={p}: {'ok' if rep.ok else 'FAILED'}",
        f"  witness {payload['witness_label']} with coefficient {rep.witness_coefficient}"
        f"{' (leading)' if rep.is_leading else ''}",
        f"  {len(terms)} terms",
    ]
    return {"p": p, "r": args.r}, payload, lines


def cmd_verify(args, parser):
    for name in ("cap_r", "cap_n", "cap_degree", "cap_seq"):
        if getattr(args, name) < 1:
            parser.error(f"--{name.replace('_', '-')} must be positive")
    caps = verify.Caps(r=args.cap_r, seq=args.cap_seq, n=args.cap_n, degree=args.cap_degree)
    results = verify.run_claims(caps)
    payload = {
        "all_pass": all(r.ok for r in results),
        "claims": [{"claim": r.claim, "status": "PASS" if r.ok else "FAIL", "anchor": r.anchor,
                    "detail": r.detail} for r in results],
    }
    lines = [f"{'PASS' if r.ok else 'FAIL'}  {r.claim:<28} {r.anchor:<40} {r.detail}" for r in results]
    params = {"cap_r": args.cap_r, "cap_n": args.cap_n, "cap_degree": args.cap_degree, "cap_seq": args.cap_seq}
    return params, payload, lines


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="steenrod-bounds", description="Steenrod-algebra combinatorics and realization bounds.")
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, fn, help):
        sp = sub.add_parser(name, help=help)
        sp.add_argument("--json", action="store_true", help="emit a JSON document")
        sp.set_defaults(func=fn)
        return sp

    sp = add("bounds", cmd_bounds, "bounds and exact values of k_U(n), k_SO(n)")
    sp.add_argument("n", type=int)
    sp.add_argument("--show-superseded", action="store_true", help="also print the older stable bounds")

    sp = add("chi", cmd_chi, "antipode of P^r")
    sp.add_argument("p", type=int)
    sp.add_argument("r", type=int)
    sp.add_argument("--basis", choices=("milnor", "admissible"), default="milnor")

    sp = add("ex", cmd_ex, "minimal excess table for r = 0..r_max")
    sp.add_argument("p", type=int)
    sp.add_argument("r_max", type=int)

    sp = add("upsilon", cmd_upsilon, "all exponent sequences of weight r")
    sp.add_argument("p", type=int)
    sp.add_argument("r", type=int)

    sp = add("act", cmd_act, "antipode of P^r acting on a product of degree-2 classes")
    sp.add_argument("p", type=int)
    sp.add_argument("r", type=int)

    sp = add("verify-paper", cmd_verify, "run every desk-checkable claim")
    defaults = verify.Caps()
    sp.add_argument("--cap-r", type=int, default=defaults.r, help="largest r for algebra and action claims")
    sp.add_argument("--cap-n", type=int, default=defaults.n, help="largest n for bound identities")
    sp.add_argument("--cap-degree", type=int, default=defaults.degree, help="largest degree for transition matrices")
    sp.add_argument("--cap-seq", type=int, default=defaults.seq, help="largest r for pure sequence claims")
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    started = time.perf_counter()
    params, payload, lines = args.func(args, parser)
    if args.json:
        print(dumps(document(args.command, params, payload, started)))
    else:
        print("\n".join(lines))
    if args.command == "verify-paper" and not payload["all_pass"]:
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
