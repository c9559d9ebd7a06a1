"""
Command-line front end

Every subcommand prints one JSON document on stdout (census prints JSON lines),
or aligned key/value text with --format text. Diagnostics go to stderr.
Exit codes: 0 success, 1 computation error, 2 usage error.
"""

import argparse
import json
import logging
import sys
from typing import Any, Dict, List, Optional

from . import __version__
from .census import CensusScanner
from .core.diagram import PlanarDiagram, parse_pd, to_pd_text
from .core.ftinv import invariants
from .core.poly import format_rational
from .cosmetic import admissible_slopes, verdict, whitehead_verdict
from .exceptions import KnotEngineError
from .families import (
    ConwayFormParams,
    WhiteheadParams,
    build_twobridge,
    closed_form_invariants,
    continued_fraction,
    twist_knot_diagram,
    whitehead_invariants,
)
from .utils.helpers import ConfigHelper, FileHelper, setup_logging
from .verify import PropertySuite, render_matrix

logger = logging.getLogger(__name__)


class UsageError(Exception):
    pass


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="knotcosmetic",
        description="Knot invariants and purely cosmetic surgery obstructions",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    parser.add_argument("--format", choices=("json", "text"), default="json")
    parser.add_argument("--config", help="JSON configuration file")
    parser.add_argument("--log-level", choices=("DEBUG", "INFO", "WARNING", "ERROR"))
    parser.add_argument("--workers", type=int, help="worker count for census and verify")

    # --format may also follow the subcommand
    output = argparse.ArgumentParser(add_help=False)
    output.add_argument("--format", choices=("json", "text"), default=argparse.SUPPRESS)

    sub = parser.add_subparsers(dest="command", metavar="command")
    sub.required = True

    def command(name, help_text):
        return sub.add_parser(name, help=help_text, parents=[output])

    def diagram_input(p):
        p.add_argument("pd_file", nargs="?", help="file holding PD text")
        p.add_argument("--pd", help="PD text, e.g. \"X(1,5,2,4) X(3,1,4,6) X(5,3,6,2)\"")
        p.add_argument("--unknot", action="store_true", help="empty input means the 0-crossing unknot")

    p = command("invariants", "a2, Jones derivatives at 1, w3, v2, v3 of a knot diagram")
    diagram_input(p)

    p = command("verdict", "cosmetic surgery verdict for a knot diagram")
    diagram_input(p)
    p.add_argument("--tau", type=int, help="Ozsvath-Szabo tau, when known")

    p = command("twobridge", "closed formulas for K(b1,c1,...,bm,cm)")
    p.add_argument("--conway", required=True, help="comma-separated b1,c1,...,bm,cm")
    p.add_argument("--diagram", action="store_true", help="also generate the diagram and cross-check")
    p.add_argument("--tau", type=int)

    p = command("whitehead", "positive n-twisted Whitehead double")
    p.add_argument("--twist", type=int, required=True, dest="n")
    p.add_argument("--companion-a2", type=int, default=0)
    p.add_argument("--diagram", action="store_true", help="cross-check on the twist-knot diagram (companion a2 = 0)")
    p.add_argument("--tau", type=int)

    p = command("twist", "twist-knot diagram D+(unknot, n)")
    p.add_argument("n", type=int)

    p = command("slopes", "slope pairs p/q, -p/q with q^2 = -1 mod p")
    p.add_argument("--pmax", type=int, required=True)

    p = command("census", "scan a census CSV (name,crossings,pd,tau)")
    p.add_argument("csv")
    p.add_argument("--tau-source", help="provenance of the tau column")

    p = command("verify", "run the property suites")
    p.add_argument("--grid-max", type=int)
    p.add_argument("--genus-max", type=int)

    p = command("config", "print the resolved configuration")
    p.add_argument("--save", metavar="PATH", help="also write it as JSON to PATH")

    return parser


# commands

def _read_diagram(args) -> PlanarDiagram:
    if args.pd is not None and args.pd_file:
        raise UsageError("give either --pd or a PD file, not both")
    if args.pd is not None:
        text = args.pd
    elif args.pd_file:
        text = FileHelper.safe_read_file(args.pd_file)
    elif args.unknot:
        text = ""
    else:
        raise UsageError("a PD file, --pd or --unknot is required")
    return parse_pd(text, unknot=args.unknot)


def cmd_invariants(args, config) -> Dict[str, Any]:
    d = _read_diagram(args)
    return invariants(d, config['engine']['bracket_method']).to_dict()


def cmd_verdict(args, config) -> Dict[str, Any]:
    d = _read_diagram(args)
    inv = invariants(d, config['engine']['bracket_method'])
    return verdict(inv, args.tau).to_dict()


def cmd_twobridge(args, config) -> Dict[str, Any]:
    p = ConwayFormParams.parse(args.conway)
    closed = closed_form_invariants(p)
    payload = {
        "params": list(p.flat),
        "genus": p.m,
        "continued_fraction": format_rational(continued_fraction(p)),
        "a2": closed.a2,
        "v3": closed.v3,
        "verdict": verdict(closed, args.tau).to_dict(),
    }
    if args.diagram:
        conway = build_twobridge(p)
        computed = invariants(conway.diagram, config['engine']['bracket_method'])
        payload["diagram"] = {
            "pd": to_pd_text(conway.diagram),
            "crossings": conway.diagram.n_crossings,
            "a2": computed.a2,
            "v3": computed.v3,
            "agrees": (computed.a2, computed.v3) == (closed.a2, closed.v3),
        }
    return payload


def cmd_whitehead(args, config) -> Dict[str, Any]:
    w = WhiteheadParams(args.n, args.companion_a2)
    a2, v3, delta = whitehead_invariants(w)
    payload = {
        "n": w.n,
        "companion_a2": w.companion_a2,
        "a2": a2,
        "v3": v3,
        "alexander": delta.to_text(),
        "verdict": whitehead_verdict(w, args.tau).to_dict(),
    }
    if args.diagram:
        if w.companion_a2 != 0:
            raise UsageError("--diagram needs --companion-a2 0 (twist knots only)")
        computed = invariants(twist_knot_diagram(w.n), config['engine']['bracket_method'])
        payload["diagram"] = {"a2": computed.a2, "v3": computed.v3,
                              "agrees": (computed.a2, computed.v3) == (a2, v3)}
    return payload


def cmd_twist(args, config) -> Dict[str, Any]:
    d = twist_knot_diagram(args.n)
    a2, v3, _ = whitehead_invariants(WhiteheadParams(args.n, 0))
    return {
        "n": args.n,
        "pd": to_pd_text(d),
        "invariants": invariants(d, config['engine']['bracket_method']).to_dict(),
        "closed": {"a2": a2, "v3": v3},
    }


def cmd_slopes(args, config) -> Dict[str, Any]:
    return {"pmax": args.pmax, "pairs": [s.to_list() for s in admissible_slopes(args.pmax)]}


# output

def _flatten(payload: Any, prefix: str = "") -> List[tuple]:
    if isinstance(payload, dict):
        rows = []
        for key, value in payload.items():
            rows.extend(_flatten(value, f"{prefix}{key}" if not prefix else f"{prefix}.{key}"))
        return rows
    if isinstance(payload, list) and payload and isinstance(payload[0], list):
        return [(prefix, " ".join("(" + ",".join(str(v) for v in item) + ")" for item in payload))]
    if isinstance(payload, list):
        return [(prefix, ", ".join(str(v) for v in payload))]
    return [(prefix, "null" if payload is None else str(payload))]


def render_text(payload: Dict[str, Any]) -> str:
    rows = _flatten(payload)
    width = max((len(k) for k, _ in rows), default=0)
    return "\n".join(f"{key:<{width}}  {value}" for key, value in rows)


def emit(payload: Dict[str, Any], fmt: str) -> None:
    if fmt == "text":
        print(render_text(payload))
    else:
        print(json.dumps(payload, sort_keys=True, indent=2))


COMMANDS = {
    "invariants": cmd_invariants,
    "verdict": cmd_verdict,
    "twobridge": cmd_twobridge,
    "whitehead": cmd_whitehead,
    "twist": cmd_twist,
    "slopes": cmd_slopes,
}


def _load_config(args) -> Dict[str, Any]:
    config = ConfigHelper.resolve(args.config)
    if args.workers is not None:
        config['engine']['max_workers'] = args.workers
    if getattr(args, 'grid_max', None) is not None:
        config['verify']['grid_max'] = args.grid_max
    if getattr(args, 'genus_max', None) is not None:
        config['verify']['genus_max'] = args.genus_max
    if getattr(args, 'tau_source', None):
        config['census']['tau_source'] = args.tau_source
    return config


def _run_census(args, config) -> int:
    engine = config['engine']
    scanner = CensusScanner(engine['max_workers'], engine['executor'],
                            engine['bracket_method'], config['census']['tau_source'])
    report = scanner.scan(args.csv)
    if args.format == "text":
        for entry in report.entries:
            witness = entry.verdict.witness
            detail = f"{witness[0]}={witness[1]}" if witness else (entry.verdict.constraints or "")
            print(f"{entry.name:<12} {entry.verdict.status.value:<17} {detail}")
        print(render_text({"summary": report.summary()}))
    else:
        for line in report.to_json_lines():
            print(line)
    return 0 if not report.errors else 1


def _run_verify(args, config) -> int:
    results = PropertySuite(config).run()
    if args.format == "json":
        print(json.dumps([r.to_dict() for r in results], sort_keys=True, indent=2))
    else:
        print(render_matrix(results))
    return 0 if all(r.passed for r in results) else 1


def _run_config(args, config) -> int:
    emit(config, args.format)
    if args.save:
        if not ConfigHelper.save_config(args.save, config):
            return 1
        logger.info(f"Configuration written to {args.save}")
    return 0


def run(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else 2

    config = _load_config(args)
    setup_logging(args.log_level or config['logging']['level'], config['logging']['file'])

    try:
        if args.command == "census":
            return _run_census(args, config)
        if args.command == "config":
            return _run_config(args, config)
        if args.command == "verify":
            return _run_verify(args, config)
        payload = COMMANDS[args.command](args, config)
        emit(payload, args.format)
        if isinstance(payload.get("diagram"), dict) and payload["diagram"].get("agrees") is False:
            logger.error("diagram invariants disagree with the closed formulas")
            return 1
        return 0
    except UsageError as e:
        print(f"{parser.prog}: error: {e}", file=sys.stderr)
        return 2
    except (KnotEngineError, ValueError) as e:
        print(f"{parser.prog}: {type(e).__name__}: {e}", file=sys.stderr)
        return 1


def main() -> None:
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
