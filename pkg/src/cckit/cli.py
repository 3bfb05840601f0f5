"""Command-line front end.

Exit codes: 0 success, 1 decision answered false, 2 usage or parse or
precondition error, 3 internal invariant violation.  ``-`` stands for
stdin or stdout in file positions.
"""

from __future__ import annotations

import argparse
import sys

from .circuit import STAR, Circuit, Const, dual, eval, eval_tri, normalize_down, resolve_inputs
from .errors import BadShapeError, CckitError, InternalBoundViolationError
from .formats import (
    parse_circuit,
    parse_digraph,
    parse_graph,
    parse_sm,
    serialize_circuit,
    serialize_graph,
    serialize_sm,
)
from .matching import lfm_matching, lfmm_decision, vlfmm_decision
from .reachability import layer, reach_to_ccv
from .reductions import (
    CcvInstance,
    ccv_to_3lfmm,
    ccv_to_3vlfmm,
    double_rail,
    lfmm3_to_sm,
    lfmm_to_ccvneg,
    mosm_to_ccv,
    to_all_up,
    tri_to_bool,
    vlfmm_to_ccv,
    wosm_to_ccv,
)
from .stable_marriage import (
    delayed_interval_run,
    gale_shapley,
    interval_logic_run,
    interval_run,
    subramanian_run,
    symmetric_gs,
)
from .universal import build_universal, encode_control
from .verify import render_report, run_suite, _SUITES


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, "r", encoding="utf-8") as fh:
        return fh.read()


def _write(path: str, text: str):
    if path == "-":
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)


def _bits(s: str):
    out = []
    for ch in s:
        if ch == "0":
            out.append(0)
        elif ch == "1":
            out.append(1)
        elif ch == "*":
            out.append(STAR)
        else:
            raise BadShapeError(f"input strings use 0, 1, and *, not {ch!r}")
    return out


def _value_char(v) -> str:
    return str(v)


def cmd_eval(args) -> int:
    c = parse_circuit(_read(args.file))
    x = _bits(args.tri if args.tri is not None else (args.input or ""))
    if args.tri is not None:
        outputs, answer, trace = eval_tri(c, x)
    else:
        outputs, answer, trace = eval(c, x, allow_negations=True)
    if args.trace:
        for k, snap in enumerate(trace.snapshots):
            print(f"step {k} " + "".join(_value_char(v) for v in snap))
    for w, v in enumerate(outputs):
        print(f"w{w}={_value_char(v)}")
    print(f"answer={_value_char(answer)}")
    return 0 if answer == 1 else 1


def _close(c: Circuit, input_str) -> CcvInstance:
    vals = resolve_inputs(c, _bits(input_str or ""))
    return CcvInstance(
        Circuit(c.num_wires, tuple(Const(v) for v in vals), c.gates, c.output_wire)
    )


def cmd_reduce(args) -> int:
    name = args.pass_name
    text = _read(args.infile)
    sidecar = []

    if name == "normalize-down":
        c = parse_circuit(text)
        out_c, wmap = normalize_down(c)
        out = serialize_circuit(out_c)
        sidecar = [f"w{a} w{b}" for a, b in sorted(wmap.items())]
    elif name == "dual":
        out = serialize_circuit(dual(parse_circuit(text)))
    elif name == "neg-elim":
        out_c, wmap = double_rail(parse_circuit(text))
        out = serialize_circuit(out_c)
        sidecar = [f"w{a} w{b}" for a, b in sorted(wmap.items())]
    elif name == "tri-lower":
        c = parse_circuit(text)
        inst, rails = tri_to_bool(c, _bits(args.input or ""))
        out = serialize_circuit(inst.circuit)
        sidecar = [f"w{w} w{a},w{b}" for w, (a, b) in sorted(rails.items())]
    elif name in ("ccv-to-3vlfmm", "ccv-to-3lfmm"):
        inst = _close(parse_circuit(text), args.input)
        up, wmap = to_all_up(inst.circuit)
        lower = ccv_to_3vlfmm if name == "ccv-to-3vlfmm" else ccv_to_3lfmm
        lf, node_map = lower(CcvInstance(up))
        out = serialize_graph(lf.graph, lf.designated)
        sidecar = [f"w{a} w{b}" for a, b in sorted(wmap.items())]
        sidecar += [f"n{l},{w} {i}" for (l, w), i in sorted(node_map.items())]
    elif name == "vlfmm-to-ccv":
        g, desig = parse_graph(text)
        if desig is None or desig[0] != "top":
            raise BadShapeError("needs a graph with a target-top designation")
        inst = vlfmm_to_ccv(g, desig[1])
        out = serialize_circuit(inst.circuit)
        sidecar = [f"t{j} w{j}" for j in range(g.num_top)]
        sidecar += [f"v{i} w{g.num_top + i}" for i in range(g.num_bottom)]
    elif name == "lfmm-to-ccvneg":
        g, desig = parse_graph(text)
        if desig is None or desig[0] != "edge":
            raise BadShapeError("needs a graph with a target-edge designation")
        out = serialize_circuit(lfmm_to_ccvneg(g, desig[1]).circuit)
    elif name == "lfmm3-to-sm":
        g, _ = parse_graph(text)
        out = serialize_sm(lfmm3_to_sm(g, g.num_bottom))
    elif name in ("mosm-to-ccv", "wosm-to-ccv"):
        inst = parse_sm(text)
        if args.pair is None:
            raise BadShapeError("needs --pair M W")
        build = mosm_to_ccv if name == "mosm-to-ccv" else wosm_to_ccv
        out = serialize_circuit(build(inst, tuple(args.pair)).circuit)
    elif name == "reach-to-ccv":
        g = parse_digraph(text)
        if args.target is None:
            raise BadShapeError("needs --target")
        if args.layer:
            layered, node_map = layer(g, args.src)
            c = reach_to_ccv(layered, node_map[args.target])
            sidecar = [f"n{v} {i}" for v, i in sorted(node_map.items())]
        else:
            c = reach_to_ccv(g, args.target)
        out = serialize_circuit(c)
    elif name == "universal":
        c = parse_circuit(text)
        m = max(2, c.num_wires)
        n = len(c.gates)
        enc = encode_control(c, m, n)
        out = serialize_circuit(build_universal(m, n))
        sidecar = [f"b{i} {b}" for i, b in enumerate(enc)]
    else:
        raise BadShapeError(f"unknown pass {name!r}")

    _write(args.outfile, out)
    map_path = args.map
    if map_path is None and args.outfile != "-":
        map_path = args.outfile + ".map"
    if sidecar and map_path is not None:
        _write(map_path, "\n".join(sidecar) + "\n")
    return 0


def cmd_lfmm(args) -> int:
    g, desig = parse_graph(_read(args.file))
    for i, j in sorted(lfm_matching(g).pairs):
        print(f"v{i} w{j}")
    if desig is None:
        return 0
    if desig[0] == "edge":
        answer = lfmm_decision(g, desig[1])
    else:
        answer = vlfmm_decision(g, desig[1])
    print(f"answer={answer}")
    return 0 if answer == 1 else 1


def _print_marriage(mar, label=None):
    if label:
        print(label)
    for m, w in sorted(mar.pairs):
        print(f"m{m} w{w}")


def cmd_gs(args) -> int:
    inst = parse_sm(_read(args.file))
    alg = args.alg
    if alg == 1:
        mar, _ = gale_shapley(inst)
        _print_marriage(mar)
        return 0
    if alg == 2:
        man, woman, _ = symmetric_gs(inst)
    elif alg == 3:
        man, woman, _, _ = interval_run(inst)
    elif alg == 4:
        man, woman, _, _ = delayed_interval_run(inst)
    elif alg == 5:
        man, woman, _, _ = interval_logic_run(inst)
    else:
        man, woman, _, _ = subramanian_run(inst)
    _print_marriage(man, "man-optimal:")
    _print_marriage(woman, "woman-optimal:")
    return 0


def cmd_reach(args) -> int:
    g = parse_digraph(_read(args.file))
    layered, node_map = layer(g, args.src)
    c = reach_to_ccv(layered, node_map[args.target])
    _, answer, _ = eval(c, (), with_trace=False)
    print(f"reachable={answer}")
    return 0 if answer == 1 else 1


def cmd_verify(args) -> int:
    names = list(_SUITES) if args.suite == "all" else [args.suite]
    ok = True
    for name in names:
        report = run_suite(name, args.cases, args.seed)
        sys.stdout.write(render_report(report))
        ok = ok and report.passed
    return 0 if ok else 1


def _parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="cckit", description=__doc__)
    sub = p.add_subparsers(dest="command", required=True)

    ev = sub.add_parser("eval", help="evaluate a circuit")
    ev.add_argument("file")
    ev.add_argument("--input", help="bit string, one character per input variable")
    ev.add_argument("--tri", help="string over 0, *, 1 for three-valued evaluation")
    ev.add_argument("--trace", action="store_true", help="print every snapshot")
    ev.set_defaults(fn=cmd_eval)

    rd = sub.add_parser("reduce", help="run a lowering pass")
    rd.add_argument("pass_name", metavar="pass")
    rd.add_argument("infile")
    rd.add_argument("outfile")
    rd.add_argument("--map", help="sidecar path (default OUTFILE.map)")
    rd.add_argument("--input", help="bit string closing the circuit's inputs")
    rd.add_argument("--pair", nargs=2, type=int, metavar=("M", "W"))
    rd.add_argument("--target", type=int)
    rd.add_argument("--src", type=int, default=0)
    rd.add_argument("--layer", action="store_true", help="time-expand the digraph first")
    rd.set_defaults(fn=cmd_reduce)

    lf = sub.add_parser("lfmm", help="greedy matching and designated decisions")
    lf.add_argument("file")
    lf.set_defaults(fn=cmd_lfmm)

    gs = sub.add_parser("gs", help="stable marriage algorithms")
    gs.add_argument("file")
    gs.add_argument("--alg", type=int, choices=range(1, 7), default=1)
    gs.set_defaults(fn=cmd_gs)

    rc = sub.add_parser("reach", help="digraph reachability through a circuit")
    rc.add_argument("file")
    rc.add_argument("--target", type=int, required=True)
    rc.add_argument("--src", type=int, default=0)
    rc.set_defaults(fn=cmd_reach)

    vf = sub.add_parser("verify", help="run a property suite")
    vf.add_argument("suite")
    vf.add_argument("--cases", type=int)
    vf.add_argument("--seed", type=int, default=1)
    vf.set_defaults(fn=cmd_verify)

    return p


def main(argv=None) -> int:
    try:
        args = _parser().parse_args(argv)
    except SystemExit as e:
        return 0 if not e.code else int(e.code)
    try:
        return args.fn(args)
    except InternalBoundViolationError as e:
        print(f"internal invariant violated: {e}", file=sys.stderr)
        return 3
    except CckitError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
