"""Command line interface.

Subcommands operate on a module given either by preset name or by a JSON
input file, build its stability fan, and emit a JSON document (an SVG for
the svg subcommand).  Exit codes: 0 success, 1 verification found
violations, 2 bad input or usage.
"""
from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass

from . import serialize
from .errors import InputFormatError, ResourceLimitError
from .fan import build_mtf_fan, class_of, fan_paths, wall_cone
from .oracle import build_sample_set, verify_dim_formula, verify_fan
from .polyhedra import validate_generalized_fan
from .presets import preset_module, preset_names
from .svg import render_svg


@dataclass
class RunConfig:
    command: str
    preset: str | None = None
    input_path: str | None = None
    output: str | None = None
    theta: str | None = None
    grid_bound: int = 3
    seed: int = 2024
    p_override: int | None = None
    size: int = 440


def _load_module(config):
    have_preset = config.preset is not None
    have_input = config.input_path is not None
    if have_preset == have_input:
        raise InputFormatError("give exactly one of --preset and --input")
    if have_preset:
        if config.p_override is not None:
            raise InputFormatError("--p cannot override a preset")
        return preset_module(config.preset)
    try:
        with open(config.input_path, encoding="utf-8") as fh:
            doc = json.load(fh)
    except OSError as exc:
        raise InputFormatError(f"cannot read {config.input_path}: {exc}")
    except json.JSONDecodeError as exc:
        raise InputFormatError(
            f"invalid JSON in {config.input_path} at line {exc.lineno} "
            f"column {exc.colno}: {exc.msg}"
        )
    if config.p_override is not None:
        doc["p"] = config.p_override
    _, module = serialize.module_from_doc(doc)
    return module


def _parse_theta(text, n):
    if text is None:
        raise InputFormatError("classify needs --theta")
    parts = [p.strip() for p in text.split(",")]
    theta = tuple(serialize.parse_frac(p) for p in parts)
    if len(theta) != n:
        raise InputFormatError(
            f"--theta has {len(theta)} entries, the module has {n} vertices"
        )
    return theta


def _emit(config, text):
    if config.output is None:
        sys.stdout.write(text + "\n")
    else:
        with open(config.output, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")


def _emit_json(config, doc):
    _emit(config, json.dumps(doc, indent=2))


def run(config):
    module = _load_module(config)
    mtf = build_mtf_fan(module)

    if config.command == "newton":
        _emit_json(config, serialize.polytope_doc(mtf.newton))
        return 0
    if config.command == "fan":
        _emit_json(config, serialize.fan_doc(mtf))
        return 0
    if config.command == "wall":
        wall = wall_cone(mtf)
        _emit_json(config, {"n": mtf.n, "wall": serialize.cone_doc(wall)})
        return 0
    if config.command == "classify":
        theta = _parse_theta(config.theta, mtf.n)
        cone, data = class_of(mtf, theta)
        _emit_json(config, serialize.classify_doc(mtf, theta, cone, data))
        return 0
    if config.command == "paths":
        _emit_json(config, serialize.paths_doc(fan_paths(mtf)))
        return 0
    if config.command == "svg":
        _emit(config, render_svg(mtf, size=config.size))
        return 0
    if config.command == "verify":
        samples = build_sample_set(
            mtf, bound=config.grid_bound, seed=config.seed
        )
        oracle = verify_fan(mtf, samples=samples)
        dims = verify_dim_formula(mtf)
        validation = validate_generalized_fan(mtf.fan)
        ok = oracle.ok and dims.ok and validation.ok
        _emit_json(
            config,
            {
                "samples": len(samples.thetas),
                "grid_bound": samples.bound,
                "seed": samples.seed,
                "oracle": serialize.report_doc(oracle),
                "dim_formula": serialize.report_doc(dims),
                "fan_validation": serialize.validation_doc(validation),
                "ok": ok,
            },
        )
        return 0 if ok else 1
    raise InputFormatError(f"unknown command {config.command!r}")


def _add_source_args(sub):
    sub.add_argument(
        "--preset",
        choices=preset_names(),
        help="built-in example module",
    )
    sub.add_argument("--input", help="JSON file describing algebra and module")
    sub.add_argument(
        "--p",
        type=int,
        default=None,
        help="override the prime of a JSON input (not allowed with --preset)",
    )
    sub.add_argument("--output", help="write result here instead of stdout")


def build_parser():
    parser = argparse.ArgumentParser(
        prog="mtfan",
        description=(
            "Newton polytopes, stability fans and torsion-class data for "
            "modules over bound quiver algebras."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    for name, desc in (
        ("newton", "Newton polytope of submodule dimension vectors"),
        ("fan", "complete stability fan with torsion-class data per cone"),
        ("wall", "cone of stability conditions where the module is on a wall"),
        ("paths", "increasing paths in the fan and on the Newton polytope"),
    ):
        _add_source_args(sub.add_parser(name, help=desc))

    classify = sub.add_parser(
        "classify", help="locate a stability vector and report its class data"
    )
    _add_source_args(classify)
    classify.add_argument(
        "--theta",
        help="comma separated rationals, one per vertex, e.g. 1/2,-1",
    )

    verify = sub.add_parser(
        "verify", help="cross-check the fan against a brute-force oracle"
    )
    _add_source_args(verify)
    verify.add_argument(
        "--grid-bound",
        type=int,
        default=3,
        help="check every integer vector with entries in [-B, B]",
    )
    verify.add_argument(
        "--seed", type=int, default=2024, help="seed for extra random samples"
    )

    svg = sub.add_parser("svg", help="render a rank-two fan")
    _add_source_args(svg)
    svg.add_argument(
        "--size", type=int, default=440, help="canvas size in pixels"
    )
    return parser


def main(argv=None):
    parser = build_parser()
    ns = parser.parse_args(argv)
    config = RunConfig(
        command=ns.command,
        preset=ns.preset,
        input_path=ns.input,
        output=ns.output,
        theta=getattr(ns, "theta", None),
        grid_bound=getattr(ns, "grid_bound", 3),
        seed=getattr(ns, "seed", 2024),
        p_override=ns.p,
        size=getattr(ns, "size", 440),
    )
    try:
        return run(config)
    except (ValueError, ResourceLimitError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
