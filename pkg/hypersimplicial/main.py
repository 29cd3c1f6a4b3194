#!/usr/bin/env python
"""
    Title: Hypersimplicial Subdivisions
    Description: Exact construction and verification of hypersimplicial subdivisions of dilated hypersimplices.
    Author: Susanna
    License: MIT License
    Created: 2025

    Copyright (c) 2025 Susanna Maria Hepp

    Permission is hereby granted, free of charge, to any person obtaining a copy
    of this software and associated documentation files (the "Software"), to deal
    in the Software without restriction, including without limitation the rights
    to use, copy, modify, merge, publish, distribute, sublicense, and/or sell
    copies of the Software, and to permit persons to whom the Software is
    furnished to do so, subject to the following conditions:

    The above copyright notice and this permission notice shall be included in all
    copies or substantial portions of the Software.

    THE SOFTWARE IS PROVIDED "AS IS", WITHOUT WARRANTY OF ANY KIND, EXPRESS OR
    IMPLIED, INCLUDING BUT NOT LIMITED TO THE WARRANTIES OF MERCHANTABILITY,
    FITNESS FOR A PARTICULAR PURPOSE AND NONINFRINGEMENT. IN NO EVENT SHALL THE
    AUTHORS OR COPYRIGHT HOLDERS BE LIABLE FOR ANY CLAIM, DAMAGES OR OTHER
    LIABILITY, WHETHER IN AN ACTION OF CONTRACT, TORT OR OTHERWISE, ARISING FROM,
    OUT OF OR IN CONNECTION WITH THE SOFTWARE OR THE USE OR OTHER DEALINGS IN
    THE SOFTWARE.
"""

import argparse
import json
import logging
import sys
from dataclasses import dataclass
from pathlib import Path

from colorama import Fore, Style, just_fix_windows_console

from hypersimplicial.combinatorics.eulerian import eulerian
from hypersimplicial.combinatorics.identity_main import (
    check_identity_parameters,
    identity_check,
    identity_check_by_enumeration,
    identity_sweep,
)
from hypersimplicial.dualgraph.dualgraph_main import build_dual_graph, check_dual_graph, export_graph
from hypersimplicial.geometry.cells import containing_translates
from hypersimplicial.geometry.rational import format_point, parse_point
from hypersimplicial.subdivision.ehrhart import ehrhart_normalized_volume, ehrhart_samples
from hypersimplicial.subdivision.oracles import (
    verify_hyperplane_tiling,
    verify_intersection_formula,
    verify_membership,
)
from hypersimplicial.subdivision.subdivision_main import (
    Subdivision,
    build_subdivision,
    covering_witness,
    is_member,
    subdivision_cell_count,
)
from hypersimplicial.subdivision.verify import verify_cells
from hypersimplicial.utils.config_loader import get_setting
from hypersimplicial.utils.logging_config import setup_logging

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_INVALID = 2

COMMANDS = ("identity", "sweep", "subdivide", "verify", "dual-graph", "volume", "locate", "oracles")


@dataclass
class RunConfig:
    command: str
    d: int | None = None
    i: int | None = None
    r: int | None = None
    d_max: int | None = None
    r_max: int | None = None
    samples: int | None = None
    seed: int = 0
    format: str = "text"
    out: str | None = None
    point: str | None = None
    oracle: str = "eulerian"
    cells: str | None = None
    enumerate: bool = False
    workers: int | None = None
    force: bool = False

    def validate(self):
        if self.command not in COMMANDS:
            raise ValueError(f"Unknown command '{self.command}'.")
        if self.seed < 0:
            raise ValueError(f"Seed must be non-negative, got {self.seed}.")
        if self.samples is not None and self.samples < 0:
            raise ValueError(f"Sample count must be non-negative, got {self.samples}.")
        if self.command in ("identity", "subdivide", "verify", "dual-graph", "locate"):
            check_identity_parameters(self.r, self.d, self.i)
        elif self.command == "volume":
            check_identity_parameters(1, self.d, self.i)
        elif self.command in ("sweep", "oracles") and (self.d_max or 0) < 1:
            raise ValueError(f"--d-max must be at least 1, got {self.d_max}.")
        if self.command == "sweep" and (self.r_max or 0) < 1:
            raise ValueError(f"--r-max must be at least 1, got {self.r_max}.")
        if self.command == "locate" and not self.point:
            raise ValueError("locate needs --point.")
        if self.format == "dot" and self.command != "dual-graph":
            raise ValueError("--format dot only applies to dual-graph.")
        if self.command == "dual-graph" and self.format == "text":
            self.format = "dot"


def build_parser():
    parser = argparse.ArgumentParser(
        prog="hypersimplicial", description="Hypersimplicial subdivisions of dilated hypersimplices"
    )
    parser.add_argument("--log", default=None, help="Set the logging level")
    subparsers = parser.add_subparsers(dest="command", required=True)

    def add_params(subparser, with_r=True):
        subparser.add_argument("--d", type=int, required=True, help="Dimension of the hypersimplex.")
        subparser.add_argument("--i", type=int, required=True, help="Index of the hypersimplex, 1 <= i <= d.")
        if with_r:
            subparser.add_argument("--r", type=int, required=True, help="Dilation factor, r >= 1.")

    def add_output(subparser, formats=("text", "json")):
        subparser.add_argument("--format", choices=formats, default=formats[0], help="Output format.")
        subparser.add_argument("--out", help="Write the payload to this file instead of stdout.")

    def add_guardrail(subparser):
        subparser.add_argument(
            "--force", action="store_true", help="Allow dimensions or cell counts above the configured limits."
        )

    identity_parser = subparsers.add_parser("identity", help="Evaluate both sides of the Eulerian dilation identity.")
    add_params(identity_parser)
    identity_parser.add_argument(
        "--enumerate", action="store_true", help="Count compositions and permutations by explicit enumeration."
    )
    add_output(identity_parser)

    sweep_parser = subparsers.add_parser("sweep", help="Check the identity over a range of parameters.")
    sweep_parser.add_argument("--d-max", type=int, required=True, help="Largest dimension.")
    sweep_parser.add_argument("--r-max", type=int, required=True, help="Largest dilation.")
    sweep_parser.add_argument("--workers", type=int, default=None, help="Worker processes.")
    add_output(sweep_parser)

    subdivide_parser = subparsers.add_parser("subdivide", help="Emit the cells of H(r,d,i) as JSON.")
    add_params(subdivide_parser)
    add_output(subdivide_parser, formats=("json",))
    add_guardrail(subdivide_parser)

    verify_parser = subparsers.add_parser("verify", help="Verify that H(r,d,i) subdivides r*Delta(d,i).")
    add_params(verify_parser)
    verify_parser.add_argument("--samples", type=int, default=None, help="Random points for the coverage check.")
    verify_parser.add_argument("--seed", type=int, default=0, help="Seed of the random generator.")
    verify_parser.add_argument("--cells", help="Verify the cells of this subdivision JSON file instead.")
    verify_parser.add_argument("--workers", type=int, default=None, help="Worker processes.")
    add_output(verify_parser)
    add_guardrail(verify_parser)

    graph_parser = subparsers.add_parser("dual-graph", help="Export the dual graph of H(r,d,i).")
    add_params(graph_parser)
    add_output(graph_parser, formats=("dot", "json"))
    add_guardrail(graph_parser)

    volume_parser = subparsers.add_parser("volume", help="Normalized volume of Delta(d,i).")
    add_params(volume_parser, with_r=False)
    volume_parser.add_argument(
        "--oracle", choices=["ehrhart", "eulerian"], default="eulerian", help="Computation path for the volume."
    )
    add_output(volume_parser)

    locate_parser = subparsers.add_parser("locate", help="Find the cells containing a point.")
    add_params(locate_parser)
    locate_parser.add_argument("--point", required=True, help="Comma separated rationals, e.g. '3/2,1/2,0,0'.")
    add_output(locate_parser)

    oracles_parser = subparsers.add_parser("oracles", help="Run the membership, intersection and tiling oracles.")
    oracles_parser.add_argument("--d-max", type=int, required=True, help="Largest dimension.")
    oracles_parser.add_argument("--samples", type=int, default=None, help="Random points per suite.")
    oracles_parser.add_argument("--seed", type=int, default=0, help="Seed of the random generator.")
    add_output(oracles_parser)

    return parser


def parse_args(argv=None):
    args = build_parser().parse_args(argv)
    fields = RunConfig.__dataclass_fields__
    config = RunConfig(**{key: value for key, value in vars(args).items() if key in fields})
    return args, config


def status(ok, colored):
    label = "PASS" if ok else "FAIL"
    if not colored:
        return label
    return f"{Style.BRIGHT}{Fore.GREEN if ok else Fore.RED}{label}{Style.RESET_ALL}"


def check_size(config, d, cell_count):
    if config.force:
        return
    max_dimension = get_setting("limits", "max_dimension", 7)
    max_cells = get_setting("limits", "max_cells", 1000000)
    if d > max_dimension:
        raise ValueError(f"d={d} exceeds the limit {max_dimension}; pass --force to go ahead.")
    if cell_count > max_cells:
        raise ValueError(f"H has {cell_count} cells, more than {max_cells}; pass --force to go ahead.")


def run_identity(config, colored):
    check = identity_check_by_enumeration if config.enumerate else identity_check
    result = check(config.r, config.d, config.i)
    if config.format == "json":
        return json.dumps(result.to_dict()), EXIT_OK
    return f"lhs={result.lhs} rhs={result.rhs} equal={str(result.equal).lower()}", EXIT_OK


def run_sweep(config, colored):
    workers = get_setting("verification", "workers", 1) if config.workers is None else config.workers
    report = identity_sweep(config.d_max, config.r_max, workers=workers)
    code = EXIT_OK if report.passed else EXIT_FAILED
    if config.format == "json":
        return json.dumps(report.to_dict(), indent=2), code
    lines = [
        f"d={result.d} i={result.i} r={result.r} lhs={result.lhs} rhs={result.rhs} {status(result.equal, colored)}"
        for result in report.results
    ]
    lines.append(f"{len(report.results)} triples, {len(report.failures)} failures: {status(report.passed, colored)}")
    return "\n".join(lines), code


def run_subdivide(config, colored):
    check_size(config, config.d, subdivision_cell_count(config.r, config.d, config.i))
    return build_subdivision(config.r, config.d, config.i).to_json(), EXIT_OK


def load_subdivision(path):
    with open(path, "r", encoding="utf-8") as file:
        return Subdivision.from_dict(json.load(file))


def run_verify(config, colored):
    if config.cells:
        subdivision = load_subdivision(config.cells)
        if (subdivision.r, subdivision.d, subdivision.i) != (config.r, config.d, config.i):
            raise ValueError(
                f"{config.cells} holds H({subdivision.r},{subdivision.d},{subdivision.i}), "
                f"not H({config.r},{config.d},{config.i})."
            )
        cells = subdivision.cells
    else:
        check_size(config, config.d, subdivision_cell_count(config.r, config.d, config.i))
        cells = build_subdivision(config.r, config.d, config.i).cells

    report = verify_cells(
        config.r, config.d, config.i, cells, samples=config.samples, seed=config.seed, workers=config.workers
    )
    code = EXIT_OK if report.passed else EXIT_FAILED
    if config.format == "json":
        return json.dumps(report.to_dict(), indent=2), code

    lines = [f"H({config.r},{config.d},{config.i}), seed {config.seed}"]
    lines.extend(f"{label:<12}{status(ok, colored)}  {detail}" for label, ok, detail in report.format_lines())
    lines.extend(f"  {witness}" for witness in report.witnesses())
    return "\n".join(lines), code


def run_dual_graph(config, colored):
    check_size(config, config.d, subdivision_cell_count(config.r, config.d, config.i))
    graph = build_dual_graph(build_subdivision(config.r, config.d, config.i))
    return export_graph(graph, config.format).rstrip("\n"), EXIT_OK


def run_volume(config, colored):
    if config.oracle == "ehrhart":
        volume = ehrhart_normalized_volume(config.d, config.i)
    else:
        volume = eulerian(config.d, config.i)
    if config.format == "json":
        payload = {"d": config.d, "i": config.i, "oracle": config.oracle, "volume": str(volume)}
        if config.oracle == "ehrhart":
            payload["counts"] = [str(sample.count) for sample in ehrhart_samples(config.d, config.i)]
        return json.dumps(payload), EXIT_OK
    return str(volume), EXIT_OK


def run_locate(config, colored):
    point = parse_point(config.point)
    witness = covering_witness(point, config.r, config.d, config.i)
    family = containing_translates(point)
    if config.format == "json":
        payload = {
            "point": format_point(point),
            "witness": witness.to_dict(),
            "containing": [
                dict(cell.to_dict(), member=is_member(cell, config.r, config.d, config.i)) for cell in family
            ],
        }
        return json.dumps(payload), EXIT_OK
    lines = [f"point ({format_point(point)})", f"witness {witness}", f"containing translates ({len(family)}):"]
    for cell in family:
        marker = " in H" if is_member(cell, config.r, config.d, config.i) else ""
        lines.append(f"  {cell}{marker}")
    return "\n".join(lines), EXIT_OK


def run_oracles(config, colored):
    samples = get_setting("verification", "samples", 1000) if config.samples is None else config.samples
    reports = [verify_membership(samples=samples, seed=config.seed, d_max=config.d_max)]
    reports.extend(verify_intersection_formula(d) for d in range(1, min(config.d_max, 3) + 1))
    reports.extend(
        verify_hyperplane_tiling(d, level, samples=samples, seed=config.seed)
        for d in range(1, config.d_max + 1)
        for level in (0, 1)
    )
    code = EXIT_OK if all(report.passed for report in reports) else EXIT_FAILED
    if config.format == "json":
        return json.dumps({report.name: report.to_dict() for report in reports}, indent=2), code
    lines = [
        f"{report.name:<24}{status(report.passed, colored)}  {report.checked} checked, {len(report.failures)} failures"
        for report in reports
    ]
    return "\n".join(lines), code


HANDLERS = {
    "identity": run_identity,
    "sweep": run_sweep,
    "subdivide": run_subdivide,
    "verify": run_verify,
    "dual-graph": run_dual_graph,
    "volume": run_volume,
    "locate": run_locate,
    "oracles": run_oracles,
}


def run(config):
    """
    Dispatch one validated command and print or write its payload.

    Returns:
        int: The exit code.
    """
    config.validate()
    colored = config.out is None and sys.stdout.isatty()
    payload, code = HANDLERS[config.command](config, colored)
    if config.out:
        Path(config.out).write_text(payload + "\n", encoding="utf-8")
        logger.info(f"Wrote {config.command} output to {config.out}")
    else:
        print(payload)
    return code


def main(argv=None):
    just_fix_windows_console()
    try:
        args, config = parse_args(argv)
    except SystemExit as e:
        return e.code

    setup_logging(args.log)
    logger.info(f"Running {config.command}")
    try:
        return run(config)
    except (ValueError, OSError) as e:
        logger.error(f"{e}")
        return EXIT_INVALID
    except Exception:
        logger.exception("Unhandled exception occurred")
        return EXIT_FAILED
    finally:
        logger.info("Application exiting")


if __name__ == "__main__":
    sys.exit(main())
