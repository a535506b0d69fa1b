"""Command-line front end.

Exit codes: 0 success, 1 unreadable or malformed input (or bad usage),
2 well-formed input that violates a hypothesis. ``--json`` prints one JSON
object for every outcome, errors included.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import claims as C
from .cutting import brute_force_decompose, decompose, generic_graph
from .errors import (HypothesisViolation, LimitError, MsDecompError, SchemaError, UsageError)
from .morse import check_morse_inequalities, corollary_for_portrait, genus, morse_counts
from .order import smale_order
from .portrait import orbit_counts, validate_portrait
from .projective import analyze_single_saddle
from .realization import round_trip
from .scenario import parse_scenario

OK, BAD_INPUT, VIOLATION = 0, 1, 2


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _build_parser():
    ap = _Parser(prog="msdecomp", description=__doc__.splitlines()[0])
    sub = ap.add_subparsers(dest="command", required=True, parser_class=_Parser)
    for name, helptext in [
        ("validate", "check a scenario's portrait and its heteroclinic order"),
        ("decompose", "cut every codimension-one separatrix and print the connected sum"),
        ("analyze", "single non-codimension-one saddle analysis"),
        ("check", "orbit counts, genus, Morse relations and free-product corollaries"),
        ("oracle", "decompose under every cut order and compare"),
    ]:
        p = sub.add_parser(name, help=helptext)
        p.add_argument("scenario", help="scenario JSON file, or - for stdin")
        p.add_argument("--json", action="store_true", help="machine-readable output")
        if name in ("decompose", "analyze", "oracle"):
            p.add_argument("--generic-graph", action="store_true",
                           help="use a representative cut graph built from counts")
    p = sub.add_parser("realize", help="plan and verify a realization for (n, nu, mu)")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--nu", type=int, required=True)
    p.add_argument("--mu", type=int, required=True)
    p.add_argument("--json", action="store_true")
    return ap


def _load(path):
    try:
        if path == "-":
            data = sys.stdin.buffer.read()
        else:
            with open(path, "rb") as fh:
                data = fh.read()
    except OSError as exc:
        raise SchemaError(f"cannot read {path}: {exc.strerror}") from None
    return parse_scenario(data)


def _graph_for(sc, want_generic):
    if sc.graph is not None and not want_generic:
        return sc.graph, False
    if want_generic or sc.generic_graph:
        return generic_graph(sc.portrait), True
    raise SchemaError("scenario has no 'graph' section; pass --generic-graph to use a "
                      "representative one", field="graph")


def _require_admissible(p):
    rep = validate_portrait(p)
    if not rep.admissible:
        return {"validation": rep.to_dict()}
    return None


def cmd_validate(args):
    sc = _load(args.scenario)
    rep = validate_portrait(sc.portrait)
    out = {"validation": rep.to_dict()}
    code = OK if rep.admissible else VIOLATION
    if rep.structural_ok:
        try:
            order = smale_order(sc.portrait)
            out["smale_order"] = {"acyclic": True, "topological": list(order.topological),
                                  "covering": sorted(map(list, order.covering()))}
        except HypothesisViolation as exc:
            out["smale_order"] = {"acyclic": False, "message": str(exc),
                                  "cycle": list(getattr(exc, "cycle", ()))}
            code = VIOLATION
    return code, out


def cmd_decompose(args):
    sc = _load(args.scenario)
    bad = _require_admissible(sc.portrait)
    if bad:
        return VIOLATION, bad
    smale_order(sc.portrait)
    gr, generic = _graph_for(sc, args.generic_graph)
    expr, records = decompose(sc.portrait, gr)
    mu, nu, other = orbit_counts(sc.portrait)
    out = {"counts": {"mu": mu, "nu": nu, "other_saddles": other},
           "generic_graph": generic,
           "decomposition": expr.to_dict(),
           "cuts": [r.to_dict() for r in records]}
    return OK, out


def cmd_analyze(args):
    sc = _load(args.scenario)
    gr = None
    if sc.graph is not None or args.generic_graph or sc.generic_graph:
        gr, _ = _graph_for(sc, args.generic_graph)
    rep = analyze_single_saddle(sc.portrait, gr)
    return (OK if rep.admissible else VIOLATION), {"analysis": rep.to_dict()}


def cmd_check(args):
    sc = _load(args.scenario)
    p = sc.portrait
    bad = _require_admissible(p)
    if bad:
        return VIOLATION, bad
    mu, nu, other = orbit_counts(p)
    out = {"counts": {"mu": mu, "nu": nu, "other_saddles": other},
           "morse_counts": morse_counts(p)}
    code = OK
    gen = genus(mu, nu)
    out["genus"] = gen.to_dict()
    if p.betti is not None:
        rep = check_morse_inequalities(morse_counts(p), p.betti)
        out["morse"] = rep.to_dict()
        if not rep.ok:
            code = VIOLATION
    if gen.g >= 1:
        try:
            cor = corollary_for_portrait(p)
        except HypothesisViolation as exc:
            out["corollary"] = {"applicable": False, "reason": str(exc)}
        else:
            d = cor.to_dict()
            d["applicable"] = True
            d["citation"] = C.PERIODIC_COROLLARY if p.is_flow else C.HETEROCLINIC_COROLLARY
            out["corollary"] = d
            if not cor.consistent:
                code = VIOLATION
    else:
        out["corollary"] = {"applicable": False, "reason": "g = 0"}
    return code, out


def cmd_oracle(args):
    sc = _load(args.scenario)
    bad = _require_admissible(sc.portrait)
    if bad:
        return VIOLATION, bad
    gr, generic = _graph_for(sc, args.generic_graph)
    results = brute_force_decompose(sc.portrait, gr)
    invariant = len(results) == 1
    out = {"order_invariant": invariant, "generic_graph": generic,
           "distinct_results": [e.to_dict() for e in sorted(results, key=lambda e: e.render())],
           "cycle_rank": gr.cycle_rank()}
    return (OK if invariant else VIOLATION), out


def cmd_realize(args):
    rt = round_trip(args.n, args.nu, args.mu)
    return (OK if rt.ok else VIOLATION), {"round_trip": rt.to_dict()}


def _text(command, code, out):
    lines = []
    if "error" in out:
        err = out["error"]
        where = ""
        if "line" in err:
            where = f" (line {err['line']}, column {err['column']})"
        elif "field" in err:
            where = f" (field {err['field']})"
        return f"error: {err['message']}{where}"
    if "validation" in out:
        v = out["validation"]
        lines.append("admissible: " + ("yes" if v["admissible"] else "no"))
        for viol in v["violations"]:
            tag = "hypothesis" if viol["hypothesis"] else viol["code"]
            lines.append(f"  - [{tag}] {viol['message']}")
    if "smale_order" in out:
        so = out["smale_order"]
        lines.append("heteroclinic order: " + ("acyclic" if so["acyclic"] else so["message"]))
    if "counts" in out:
        c = out["counts"]
        lines.append(f"mu = {c['mu']}, nu = {c['nu']}, other saddles = {c['other_saddles']}")
    if "morse_counts" in out:
        lines.append("M_j = " + " ".join(map(str, out["morse_counts"])))
    if "genus" in out:
        lines.append(f"g = {out['genus']['g']}, k = {out['genus']['k']}")
    if "morse" in out:
        m = out["morse"]
        lines.append("Morse inequalities: " + " ".join("ok" if x else "FAIL"
                                                       for x in m["inequality_verdicts"]))
        lines.append("Euler relation: " + ("ok" if m["euler_ok"] else "FAIL"))
    if "corollary" in out:
        c = out["corollary"]
        if c["applicable"]:
            lines.append(f"corollary: {c['conclusion']}  [{c['citation']}]")
            if not c["consistent"]:
                lines.append(f"  contradiction: {c['note']}")
        else:
            lines.append(f"corollary: not applicable ({c['reason']})")
    if "decomposition" in out and out["decomposition"]:
        _expr_lines(lines, out["decomposition"], out.get("generic_graph"))
    if "analysis" in out:
        a = out["analysis"]
        lines.append("single-saddle hypotheses: " + ("satisfied" if a["admissible"] else "rejected"))
        for r in a["reasons"]:
            lines.append(f"  - {r['text']}  [{r['citation']}]")
        if a["decomposition"]:
            _expr_lines(lines, a["decomposition"], False)
        for cl in a["structure_claims"]:
            lines.append(f"  * {cl['text']}  [{cl['citation']}]")
    if "order_invariant" in out:
        lines.append("order-invariant: " + ("yes" if out["order_invariant"] else "no"))
        for e in out["distinct_results"]:
            lines.append(f"  {e['expression']}  (g = {e['g']}, cycle rank {out['cycle_rank']})")
    if "round_trip" in out:
        rt = out["round_trip"]
        plan = rt["plan"]
        lines.append(f"plan for n = {plan['n']}, nu = {plan['nu']}, mu = {plan['mu']} "
                     f"(g = {plan['g']}):")
        for i, s in enumerate(plan["steps"], 1):
            args = ", ".join(f"{k}={v}" for k, v in s.items() if k != "op")
            lines.append(f"  {i}. {s['op']}({args})")
        lines.append("expected: " + plan["expected_manifold"]["expression"])
        lines.append("recovered: " + rt["decomposition"]["expression"])
        lines.append("round trip: " + ("ok" if rt["ok"] else "FAILED"))
        lines += [f"  - {p}" for p in rt["problems"]]
    return "\n".join(lines)


def _expr_lines(lines, d, generic):
    lines.append(d["expression"] + f"   [{d['citation']}]")
    lines.append("  i.e. " + d["expression_symbolic"])
    lines.append(f"g = {d['g']}, k = {d['k']}, l = {d['l']}")
    if generic:
        lines.append("(computed on a representative cut graph, not the actual incidence)")
    for cl in d["claims"]:
        lines.append(f"  * {cl['text']}  [{cl['citation']}]")


_COMMANDS = {"validate": cmd_validate, "decompose": cmd_decompose, "analyze": cmd_analyze,
             "check": cmd_check, "oracle": cmd_oracle, "realize": cmd_realize}


def run(argv=None, stdout=None) -> int:
    stdout = stdout or sys.stdout
    argv = list(sys.argv[1:] if argv is None else argv)
    want_json = "--json" in argv
    command = next((a for a in argv if a in _COMMANDS), None)
    try:
        args = _build_parser().parse_args(argv)
        command = args.command
        code, out = _COMMANDS[command](args)
    except (SchemaError, UsageError, LimitError) as exc:
        err = exc.to_dict() if isinstance(exc, SchemaError) else {
            "type": "usage_error" if isinstance(exc, UsageError) else "limit_error",
            "message": str(exc)}
        code, out = BAD_INPUT, {"error": err}
    except HypothesisViolation as exc:
        code, out = VIOLATION, {"error": {"type": "hypothesis_violation",
                                          "kind": type(exc).__name__, "message": str(exc)}}
    except MsDecompError as exc:  # pragma: no cover - every subclass is handled above
        code, out = BAD_INPUT, {"error": {"type": "error", "message": str(exc)}}
    out = {"command": command, "exit_code": code, **out}
    if want_json:
        stdout.write(json.dumps(out, ensure_ascii=False, indent=2) + "\n")
    else:
        stdout.write(_text(command, code, out) + "\n")
    return code


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
