"""Command-line front end for scripts and CI.

Subcommands: recognize, check, tau, sweep, gadget, gh, verify-unique, gen,
convert.  Results go to stdout (JSON with --json, terse text otherwise);
warnings and errors go to stderr only.  Exit codes are part of the
contract:

* 0  the question was decided (whatever the answer)
* 1  unusable input: unreadable file, malformed graph or spec, bad
     arguments
* 2  the requested decider does not apply: unbounded property pair, or a
     brute-force gate exceeded
* 3  internal disagreement between the recognizer and the oracle (a bug),
     or a sweep that found one

Graph files are read by extension when --format is auto: .g6 as graph6,
.col/.dimacs as DIMACS, anything else (and stdin) as edge_list.
GENSPLIT_WORKERS sets the sweep worker count; there are no other knobs in
the environment.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from pathlib import Path

from .graphs import FORMATS, FormatError, Graph, emit, generate, parse
from .properties import (
    OracleLimitError,
    SpecParseError,
    check,
    clique_bound,
    co_clique_bound,
    parse_spec,
    spec_name,
)
from .ramsey import tau as ramsey_tau
from .ramsey import verify_tau
from .recognizer import (
    UnboundedPropertyError,
    brute_force,
    decision_record,
    recognize,
)
from .reductions import (
    gh_combinator,
    t6_gadget,
    t7_gadget,
    verify_strongly_unique,
    witness_from_json,
)
from .sweep import report_dict, report_lines, sweep_pair

EXIT_OK = 0
EXIT_INPUT = 1
EXIT_INAPPLICABLE = 2
EXIT_DISAGREEMENT = 3

# the standard agreement matrix, also the sweep default
DEFAULT_SWEEP_PAIRS = (
    "edgeless|complete",
    "free(K3,P3)|co(free(K3,P3))",
    "free(K2,P3)|co(free(K2,P3))",
    "bipartite|co(bipartite)",
)


def _warn(message: str) -> None:
    print(f"gensplit: warning: {message}", file=sys.stderr)


def _fail(message: str) -> None:
    print(f"gensplit: error: {message}", file=sys.stderr)


def _read_text(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    return Path(path).read_text()


def _write_text(path: str, text: str) -> None:
    if path == "-":
        sys.stdout.write(text)
    else:
        Path(path).write_text(text)


def _format_for(path: str, fmt: str) -> str:
    if fmt != "auto":
        return fmt
    if path.endswith(".g6"):
        return "graph6"
    if path.endswith(".col") or path.endswith(".dimacs"):
        return "dimacs"
    return "edge_list"


def _load_graph(path: str, fmt: str) -> Graph:
    return parse(_format_for(path, fmt), _read_text(path))


def _save_graph(g: Graph, path: str, fmt: str) -> None:
    if fmt == "auto":
        fmt = "graph6" if path == "-" else _format_for(path, "auto")
    text = emit(fmt, g)
    if not text.endswith("\n"):
        text += "\n"
    _write_text(path, text)


@dataclass(frozen=True)
class RunConfig:
    """Parsed recognize-run parameters, decoupled from argparse."""

    graph_path: str
    graph_format: str
    part_spec: str
    rest_spec: str
    mode: str
    tau_override: int | None
    as_json: bool

    @classmethod
    def from_args(cls, args) -> "RunConfig":
        return cls(
            graph_path=args.graph,
            graph_format=args.format,
            part_spec=args.p,
            rest_spec=args.q,
            mode=args.mode,
            tau_override=args.tau_override,
            as_json=args.json,
        )


def _decision_lines(record: dict) -> list[str]:
    lines = [f"member: {'true' if record['member'] else 'false'}"]
    cert = record.get("certificate")
    if cert is not None:
        lines.append("part_a: " + (" ".join(map(str, cert["part_a"])) or "(empty)"))
        lines.append("part_rest: " + (" ".join(map(str, cert["part_rest"])) or "(empty)"))
    lines.append(f"tau: {record['tau']}  n: {record['n']}  m: {record['m']}")
    t = record["trace"]
    lines.append(
        f"trace: growth_iterations={t['step2_iterations']} "
        f"growth_candidates={t['step2_candidates_examined']} "
        f"search_candidates={t['step3_candidates_examined']} "
        f"membership_checks={t['membership_checks']}"
    )
    return lines


def cmd_recognize(args) -> int:
    cfg = RunConfig.from_args(args)
    g = _load_graph(cfg.graph_path, cfg.graph_format)
    ps = parse_spec(cfg.part_spec)
    qs = parse_spec(cfg.rest_spec)

    records = {}
    if cfg.mode in ("algorithm_a", "both"):
        if cfg.tau_override is not None:
            nb = clique_bound(ps)
            mb = co_clique_bound(qs)
            if nb.bounded and mb.bounded:
                computed = ramsey_tau(mb.n, nb.n).tau
                if cfg.tau_override < computed:
                    _warn(
                        f"tau override {cfg.tau_override} is below the computed "
                        f"threshold {computed}; the answer may be unsound"
                    )
        decision = recognize(g, ps, qs, tau_override=cfg.tau_override)
        records["algorithm_a"] = decision_record(decision, ps, qs)
    if cfg.mode in ("oracle", "both"):
        decision = brute_force(g, ps, qs)
        records["oracle"] = decision_record(decision, ps, qs)

    if cfg.mode == "both":
        agree = records["algorithm_a"]["member"] == records["oracle"]["member"]
        payload = {"mode": "both", "agree": agree, **records}
        if cfg.as_json:
            print(json.dumps(payload))
        else:
            for name in ("algorithm_a", "oracle"):
                print(f"[{name}]")
                for line in _decision_lines(records[name]):
                    print("  " + line)
            print(f"agree: {'true' if agree else 'false'}")
        if not agree:
            _fail("recognizer and oracle disagree; this is a bug")
            return EXIT_DISAGREEMENT
        return EXIT_OK

    record = records[cfg.mode]
    payload = {"mode": cfg.mode, **record}
    if cfg.as_json:
        print(json.dumps(payload))
    else:
        for line in _decision_lines(record):
            print(line)
    return EXIT_OK


def cmd_check(args) -> int:
    g = _load_graph(args.graph, args.format)
    spec = parse_spec(args.spec)
    member = check(spec, g)
    if args.json:
        print(json.dumps({"spec": spec_name(spec), "order": g.order, "member": member}))
    else:
        print("true" if member else "false")
    return EXIT_OK


def cmd_tau(args) -> int:
    bound = ramsey_tau(args.m, args.n)
    verified = None
    if args.verify:
        verified = verify_tau(args.m, args.n, bound.tau)
    if args.json:
        payload = {"m": bound.m, "n": bound.n, "tau": bound.tau, "exact": bound.exact}
        if verified is not None:
            payload["verified"] = verified
        print(json.dumps(payload))
    else:
        kind = "exact" if bound.exact else "upper bound"
        suffix = "" if verified is None else f", verified={str(verified).lower()}"
        print(f"tau({bound.m}, {bound.n}) = {bound.tau} ({kind}{suffix})")
    return EXIT_OK


def cmd_sweep(args) -> int:
    pair_texts = args.pair or list(DEFAULT_SWEEP_PAIRS)
    pairs = []
    for text in pair_texts:
        left, sep, right = text.partition("|")
        if not sep or not left or not right:
            raise ValueError(f"pair {text!r} must look like 'P_SPEC|Q_SPEC'")
        pairs.append((parse_spec(left), parse_spec(right)))

    if args.random_orders:
        lo, sep, hi = args.random_orders.partition(":")
        if not sep:
            raise ValueError("--random-orders must look like LO:HI")
        order_range = (int(lo), int(hi))
    else:
        order_range = (10, 14)

    reports = []
    for ps, qs in pairs:
        report = sweep_pair(
            ps,
            qs,
            max_order=args.max_order,
            random_count=args.random,
            random_order_range=order_range,
            seed=args.seed,
        )
        reports.append(report)
        if not args.json:
            for line in report_lines(report):
                print(line)
            print()
    if args.json:
        print(json.dumps([report_dict(r) for r in reports]))
    all_clean = all(r.clean for r in reports)
    if not all_clean:
        _fail("sweep found disagreements or budget violations")
    return EXIT_OK if all_clean else EXIT_DISAGREEMENT


def cmd_gadget(args) -> int:
    g = _load_graph(args.graph, args.format)
    gadget = t6_gadget(g) if args.kind == "t6" else t7_gadget(g)
    _save_graph(gadget, args.out, args.out_format)
    return EXIT_OK


def cmd_gh(args) -> int:
    g = _load_graph(args.graph, args.format)
    witness = witness_from_json(json.loads(_read_text(args.witness)))
    _save_graph(gh_combinator(g, witness), args.out, args.out_format)
    return EXIT_OK


def cmd_verify_unique(args) -> int:
    g = _load_graph(args.graph, args.format)
    specs = [parse_spec(s) for s in args.specs]
    unique = verify_strongly_unique(g, specs)
    if args.json:
        print(
            json.dumps(
                {
                    "host": emit("graph6", g),
                    "specs": [spec_name(s) for s in specs],
                    "strongly_unique": unique,
                }
            )
        )
    else:
        print("true" if unique else "false")
    return EXIT_OK


def cmd_gen(args) -> int:
    params = [int(x) if x.is_integer() else x for x in args.params]
    g = generate(args.family, *params, seed=args.seed)
    _save_graph(g, args.out, args.out_format)
    return EXIT_OK


def cmd_convert(args) -> int:
    g = _load_graph(args.graph, args.from_format)
    _save_graph(g, args.out, args.to_format)
    return EXIT_OK


def _parser() -> argparse.ArgumentParser:
    top = argparse.ArgumentParser(
        prog="gensplit",
        description="Two-part vertex partition recognition and its test harness.",
    )
    sub = top.add_subparsers(dest="command", required=True)

    def add_graph_arg(p, help_text="graph file, or - for stdin"):
        p.add_argument("graph", help=help_text)
        p.add_argument(
            "--format",
            choices=("auto",) + FORMATS,
            default="auto",
            help="input format (auto: by file extension, stdin is edge_list)",
        )

    def add_out_args(p):
        p.add_argument("--out", default="-", help="output file, or - for stdout")
        p.add_argument(
            "--out-format",
            choices=("auto",) + FORMATS,
            default="auto",
            help="output format (auto: by extension, stdout is graph6)",
        )

    p = sub.add_parser("recognize", help="decide membership in a product of two classes")
    add_graph_arg(p)
    p.add_argument("--p", required=True, help="first-part property spec")
    p.add_argument("--q", required=True, help="rest property spec")
    p.add_argument(
        "--mode",
        choices=("algorithm_a", "oracle", "both"),
        default="algorithm_a",
        help="fast recognizer, brute-force oracle, or both with agreement check",
    )
    p.add_argument("--tau-override", type=int, default=None, help="replace the computed swap threshold")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_recognize)

    p = sub.add_parser("check", help="single-class membership test")
    p.add_argument("spec", help="property spec, e.g. 'free(K3,P3)'")
    add_graph_arg(p)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("tau", help="swap threshold for a bound pair")
    p.add_argument("m", type=int)
    p.add_argument("n", type=int)
    p.add_argument("--verify", action="store_true", help="re-certify by exhaustive search (small values only)")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_tau)

    p = sub.add_parser("sweep", help="recognizer-vs-oracle agreement sweep")
    p.add_argument("--pair", action="append", help="'P_SPEC|Q_SPEC' (repeatable; default: the standard matrix)")
    p.add_argument("--max-order", type=int, default=5, help="exhaustive over all labeled graphs up to this order")
    p.add_argument("--random", type=int, default=0, help="number of extra seeded random graphs")
    p.add_argument("--random-orders", default=None, help="LO:HI order range for random graphs (default 10:14)")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("gadget", help="build a 3-colorability gadget graph")
    p.add_argument("kind", choices=("t6", "t7"), help="t6: disjoint triangle; t7: universal vertex")
    add_graph_arg(p)
    add_out_args(p)
    p.set_defaults(func=cmd_gadget)

    p = sub.add_parser("gh", help="attach a graph to a unique-partition witness host")
    add_graph_arg(p)
    p.add_argument("witness", help="witness JSON file, or - for stdin")
    add_out_args(p)
    p.set_defaults(func=cmd_gh)

    p = sub.add_parser("verify-unique", help="is a partition into these classes unique?")
    add_graph_arg(p)
    p.add_argument("specs", nargs="+", help="one property spec per part")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_verify_unique)

    p = sub.add_parser("gen", help="generate a named graph family member")
    p.add_argument(
        "family",
        choices=("complete", "empty", "path", "cycle", "complete_bipartite", "random"),
    )
    p.add_argument("params", nargs="*", type=float, help="family parameters (order, sizes, probability)")
    p.add_argument("--seed", type=int, default=None, help="seed for random graphs")
    add_out_args(p)
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("convert", help="re-serialize a graph between formats")
    p.add_argument("graph", help="input file, or - for stdin")
    p.add_argument("--from", dest="from_format", choices=("auto",) + FORMATS, default="auto")
    p.add_argument("--out", default="-")
    p.add_argument("--to", dest="to_format", choices=("auto",) + FORMATS, default="auto")
    p.set_defaults(func=cmd_convert)

    return top


def main(argv=None) -> int:
    args = _parser().parse_args(argv)
    try:
        return args.func(args)
    except FormatError as exc:
        _fail(f"bad graph input: {exc}")
        return EXIT_INPUT
    except SpecParseError as exc:
        _fail(f"bad property spec: {exc}")
        return EXIT_INPUT
    except UnboundedPropertyError as exc:
        _fail(str(exc))
        _fail("hint: --mode oracle runs the brute-force referee on graphs up to order 24")
        return EXIT_INAPPLICABLE
    except OracleLimitError as exc:
        _fail(str(exc))
        return EXIT_INAPPLICABLE
    except OSError as exc:
        _fail(str(exc))
        return EXIT_INPUT
    except ValueError as exc:
        _fail(str(exc))
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
