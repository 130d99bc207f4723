"""Command-line surface - one subcommand per tool.

Each subcommand parses its flags, hands an args dict to ToolExecutor and
renders the result dict either as text or, with --json, as one JSON object.

Exit codes:
    0  success
    1  a verified claim failed (status "violation")
    2  usage error or rejected input (status "error")
"""

import argparse
import json
import logging
import sys
from typing import Any, Callable, Dict, List, Optional

from execution.executor import ToolExecutor
from tools.loader import load_all_tools

EXIT_OK = 0
EXIT_VIOLATION = 1
EXIT_ERROR = 2

# subcommand -> (tool name, [(argparse dest, tool arg)])
COMMANDS: Dict[str, tuple[str, list[tuple[str, str]]]] = {
    "classify": ("wheel.classify", [("n", "n")]),
    "verify": ("wheel.verify", [("max", "max")]),
    "rhythm": ("cycles.rhythm", [("blocks", "blocks")]),
    "twins": ("twins.list", [("max", "max")]),
    "spectrum": ("spectrum.analyze", [
        ("start", "start"), ("count", "count"), ("max_period", "max_period"), ("output", "output"),
    ]),
    "plot": ("plot.render", [
        ("kind", "kind"), ("max", "max"), ("start", "start"), ("count", "count"),
        ("width", "width"), ("height", "height"), ("output", "output"),
    ]),
    "bench": ("bench.sieves", [("limit", "limit")]),
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="wheel30",
        description="Mod-30 wheel: prime candidates, polar rays, cycle rhythms and twin positions",
    )
    parser.add_argument("-v", "--verbose", action="count", default=0,
                        help="More diagnostics on stderr (-v info, -vv debug)")

    subparsers = parser.add_subparsers(dest="command", required=True, help="Available commands")

    def add(name: str, help_text: str) -> argparse.ArgumentParser:
        sub = subparsers.add_parser(name, help=help_text)
        sub.add_argument("--json", action="store_true", help="Emit one JSON object on stdout")
        return sub

    classify = add("classify", "Classify one natural number")
    classify.add_argument("n", type=int, help="Natural number, 1 <= n < 2**64")

    verify = add("verify", "Check necessity, sufficiency, density and ray coverage up to --max")
    verify.add_argument("--max", type=int, help="Upper bound (default from settings.yaml)")

    rhythm = add("rhythm", "Check the 3-5-1-5-3-1-3-1 and 1-2-1-2-2 rhythms")
    rhythm.add_argument("--blocks", type=int, help="Last block index to check (default 1000)")

    twins = add("twins", "List twin-candidate positions and realized twin primes")
    twins.add_argument("--max", type=int, help="Largest lower member (default 1000)")

    spectrum = add("spectrum", "Power spectrum and period search of the candidate indicator")
    spectrum.add_argument("--start", type=int, help="First number scanned (default 50)")
    spectrum.add_argument("--count", type=int, help="Candidates in the indicator (default from settings.yaml)")
    spectrum.add_argument("--max-period", dest="max_period", type=int, help="Largest period tested")
    spectrum.add_argument("-o", "--output", help="CSV destination for frequency_index,power rows")

    plot = add("plot", "Render a figure (SVG) or dump polar points (CSV)")
    plot.add_argument("--kind", required=True, choices=["rays", "cycle", "primes", "points"])
    plot.add_argument("--max", type=int, help="Largest n (rays, points)")
    plot.add_argument("--start", type=int, help="First n (cycle, primes, points)")
    plot.add_argument("--count", type=int, help="Numbers on the strip (cycle, primes)")
    plot.add_argument("--width", type=int, help="Viewport width in px (rays)")
    plot.add_argument("--height", type=int, help="Viewport height in px (rays)")
    plot.add_argument("-o", "--output", required=True, help="Destination file")

    bench = add("bench", "Time plain sieve, wheel sieve and candidate filter")
    bench.add_argument("--limit", type=int, help="Upper bound (default from settings.yaml)")

    return parser


def tool_args(command: str, namespace: argparse.Namespace) -> Dict[str, Any]:
    """Collect the flags the user actually gave; tools apply their own defaults."""
    _, mapping = COMMANDS[command]
    args: Dict[str, Any] = {}
    for dest, key in mapping:
        value = getattr(namespace, dest, None)
        if value is not None:
            args[key] = value
    return args


def exit_code(result: Dict[str, Any]) -> int:
    status = result.get("status")
    if status == "success":
        return EXIT_OK
    if status == "violation":
        return EXIT_VIOLATION
    return EXIT_ERROR


# ----------------------------------------------------------------------
# Text display
# ----------------------------------------------------------------------

def _show_classify(r: Dict[str, Any]) -> None:
    wc = r["wheel_class"]
    if wc["kind"] == "candidate":
        print(f"{r['n']}: Candidate(pn0={wc['pn0']}, n={wc['multiplier']})")
        print(f"   {r['decomposition']}")
    elif wc["kind"] == "special_prime":
        print(f"{r['n']}: SpecialPrime")
    else:
        print(f"{r['n']}: CertainComposite")
    print(f"   {r['verdict']}")
    polar = r["polar"]
    print(f"   polar: ({polar['x']:.2f}, {polar['y']:.2f}), ray {polar['ray_degree']} deg ({r['ray_kind']})")
    print(f"   prime per oracle: {'yes' if r['is_prime'] else 'no'}")


def _show_verify(r: Dict[str, Any]) -> None:
    print(f"Verified up to {r['max']}: {r['primes_checked']} primes checked")
    print(f"   necessity violations:   {r['necessity_violations']}")
    print(f"   sufficiency violations: {r['sufficiency_violations']}")
    print(f"   density: {r['windows_checked']} windows, {r['density_violations']} violations")
    rays = "complete" if r["rays_complete"] else f"{len(r['missing_rays'])} not yet reached"
    print(f"   rays: {r['rays_observed']} observed of 96 ({rays}), "
          f"{len(r['unexpected_rays'])} unexpected")
    if r["examples"]:
        print(f"   offending numbers: {r['examples']}")


def _show_rhythm(r: Dict[str, Any]) -> None:
    parcels = "-".join(str(p) for p in r["canonical_parcels"])
    groups = "-".join(str(g) for g in r["canonical_groups"])
    print(f"Composite parcels: {parcels}")
    print(f"Candidate groups:  {groups}")
    block = r["example_block"]
    print(f"Block 0 [{block['start']}, {block['end']}]: candidates {block['candidates']}")
    print(f"Blocks checked: {r['blocks_checked']}")
    violation = r["first_violation"]
    if violation:
        print(f"   First violation at block {violation['block_index']}: "
              f"parcels {violation['parcels']}, groups {violation['candidate_groups']}")


def _show_twins(r: Dict[str, Any]) -> None:
    print(f"Twin-candidate positions up to {r['max']} ({r['slots_per_block']} member slots per block):")
    for pos in r["positions"]:
        mark = "twin primes" if pos["realized"] else "-"
        print(f"   {pos['p']:>10} = 30*{pos['n']} + 50 + {pos['k']:<2}  {mark}")
    print(f"Realized: {r['realized']} of {len(r['positions'])}")
    print(f"Twin prime pairs: {r['pairs_checked']} ({r['covered']} on formula positions, "
          f"{len(r['exceptions'])} small exceptions)")
    for pair in r["violations"] + r["uncovered"]:
        print(f"   ✗ ({pair[0]}, {pair[1]}) outside the formula")


def _show_spectrum(r: Dict[str, Any]) -> None:
    print(f"Indicator: {r['count']} candidates from {r['first_candidate']} to {r['last_candidate']} "
          f"({r['primes']} prime, {r['composites']} composite)")
    print(f"   Parseval residual: {r['parseval_residual']:.3e}")
    print(f"   dominance ratio:   {r['dominance_ratio']:.4f} (bin {r['dominant_frequency']})")
    if r["aperiodic"]:
        print(f"   aperiodic: no exact period up to {r['max_period']}")
    else:
        print(f"   periodic with period {r['period']}")
    if r["gap_control_period"] is not None:
        print(f"   control: candidate gaps repeat with period {r['gap_control_period']}")
    if "output" in r:
        print(f"   wrote {r['rows_written']} rows to {r['output']}")


def _show_plot(r: Dict[str, Any]) -> None:
    print(f"Wrote {r['kind']} to {r['output']}")


def _show_bench(r: Dict[str, Any]) -> None:
    print(f"Bench up to {r['limit']}")
    print(f"   {'method':<18}{'seconds':>10}{'positions':>14}{'fraction':>10}{'found':>12}{'throughput/s':>14}")
    for row in r["rows"]:
        print(f"   {row['method']:<18}{row['seconds']:>10.4f}{row['positions_examined']:>14}"
              f"{row['fraction_examined']:>10.4f}{row['found']:>12}{row['throughput']:>14.3e}")
    print(f"   sieves agree: {r['sieves_agree']}; wheel within 8/30: {r['wheel_within_bound']}")


DISPLAY: Dict[str, Callable[[Dict[str, Any]], None]] = {
    "classify": _show_classify,
    "verify": _show_verify,
    "rhythm": _show_rhythm,
    "twins": _show_twins,
    "spectrum": _show_spectrum,
    "plot": _show_plot,
    "bench": _show_bench,
}


def display_result(command: str, result: Dict[str, Any]) -> None:
    status = result.get("status")
    if status == "error":
        print(f"❌ Error: {result.get('error', 'Unknown error')}", file=sys.stderr)
        return
    DISPLAY[command](result)
    if status == "violation":
        print("⚠️  Violations found", file=sys.stderr)


def run(argv: Optional[List[str]] = None) -> int:
    """Parse argv, execute one subcommand, return the exit code."""
    parser = build_parser()
    try:
        namespace = parser.parse_args(argv)
    except SystemExit as e:
        # --help exits 0; every parse failure is a usage error
        return EXIT_OK if e.code in (0, None) else EXIT_ERROR

    if namespace.verbose:
        logging.getLogger().setLevel(logging.DEBUG if namespace.verbose > 1 else logging.INFO)

    tool_name, _ = COMMANDS[namespace.command]
    load_all_tools()
    result = ToolExecutor().execute_tool(tool_name, tool_args(namespace.command, namespace))

    if namespace.json:
        print(json.dumps(result, indent=2, sort_keys=True))
    else:
        display_result(namespace.command, result)
    return exit_code(result)


def main() -> int:
    try:
        return run()
    except KeyboardInterrupt:
        print("\n👋 Interrupted", file=sys.stderr)
        return EXIT_ERROR
