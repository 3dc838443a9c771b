#!/usr/bin/env python3
"""
Landau Radius Command-Line Tool

Computes univalence and schlicht radii of the harmonic and biharmonic
Landau-type theorems, compares them along the published radius chains,
audits coefficient bounds on the extremal mappings and runs desk-scale
injectivity and coverage scans. Reports go to stdout as JSON or CSV;
diagnostics go to stderr.
"""

import os
import sys
import csv
import io
import json
import math
import yaml
import argparse
import logging
from typing import Any, Dict, List, Optional

from bounds import AUDIT_MODES, CONJECTURE_H, audit_bounds
from maps_core import DomainError
from radii import CHAIN_COLUMNS, REMARK_IDS, THEOREM_IDS, theorem_radius, remark_chain
from verify import (
    CORPUS_DEFAULTS,
    CORPUS_DESCRIPTIONS,
    CORPUS_NAMES,
    HypothesisAuditError,
    corpus,
    verify_classical,
    verify_theorem,
)

logger = logging.getLogger(__name__)

TOOL_VERSION = "1.0.0"
DEFAULT_CONFIG_PATH = "config.yaml"

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2

DEFAULT_CONFIG: Dict[str, Dict[str, Any]] = {
    "settings": {
        "bisection_tolerance": 1e-13,
        "bisection_max_iterations": 200,
        "grid_n": 128,
        "output_format": "json",
    },
    "extraction": {
        "radius": 0.5,
        "samples": 4096,
        "n_max": 16,
    },
    "verification": {
        "univalence_scale": 0.999,
        "coverage_scale": 0.99,
        "collision_tolerance": 1e-10,
        "separation_floor": 1e-6,
        "boundary_samples": 1024,
        "targets": 48,
    },
}


class ConfigError(ValueError):
    """Configuration file could not be read or has the wrong shape."""


def load_config(config_path: Optional[str] = None) -> Dict[str, Dict[str, Any]]:
    """
    Load configuration from YAML, merged section by section over DEFAULT_CONFIG.

    Without an explicit path, LANDAU_CONFIG names the file; otherwise
    config.yaml is used when present. A missing file means built-in defaults.
    """
    explicit = config_path is not None
    path = config_path or os.getenv("LANDAU_CONFIG") or DEFAULT_CONFIG_PATH
    config = {section: dict(values) for section, values in DEFAULT_CONFIG.items()}

    if not os.path.exists(path):
        if explicit or os.getenv("LANDAU_CONFIG"):
            raise ConfigError(f"Config file not found: {path}")
        logger.debug(f"No config file at {path}; using built-in defaults")
        return config

    try:
        with open(path, "r") as f:
            loaded = yaml.safe_load(f) or {}
    except (yaml.YAMLError, IOError) as e:
        raise ConfigError(f"Could not load config file {path}: {e}")

    if not isinstance(loaded, dict):
        raise ConfigError(f"Config file {path} must contain a mapping of sections")
    for section, values in loaded.items():
        if section not in config:
            logger.warning(f"Ignoring unknown config section '{section}' in {path}")
            continue
        if not isinstance(values, dict):
            raise ConfigError(f"Config section '{section}' in {path} must be a mapping")
        for key, value in values.items():
            if key not in config[section]:
                logger.warning(f"Ignoring unknown config key '{section}.{key}' in {path}")
                continue
            config[section][key] = value

    logger.debug(f"Loaded configuration from {path}")
    return config


# ---------------------------------------------------------------------------
# Report encoding
# ---------------------------------------------------------------------------

def _plain(value: Any) -> Any:
    """Convert numbers and containers to JSON-ready values; non-finite floats become None."""
    if isinstance(value, dict):
        return {str(k): _plain(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_plain(v) for v in value]
    if isinstance(value, complex):
        return [_plain(value.real), _plain(value.imag)]
    if isinstance(value, bool) or value is None or isinstance(value, str):
        return value
    if isinstance(value, int):
        return value
    if hasattr(value, "item"):
        return _plain(value.item())
    value = float(value)
    return value if math.isfinite(value) else None


FLOAT_FORMAT = ".17g"


def _float_text(value: float) -> str:
    if not math.isfinite(value):
        raise ValueError(f"Out of range float values are not JSON compliant: {value!r}")
    return format(value, FLOAT_FORMAT)


class ReportEncoder(json.JSONEncoder):
    """JSON encoder writing every float with 17 significant digits."""

    def iterencode(self, o, _one_shot=False):
        markers = {} if self.check_circular else None
        encoder = json.encoder.encode_basestring_ascii if self.ensure_ascii else json.encoder.encode_basestring
        return json.encoder._make_iterencode(markers, self.default, encoder, self.indent, _float_text,
                                             self.key_separator, self.item_separator, self.sort_keys,
                                             self.skipkeys, _one_shot)(o, 0)


def _cell(value: Any) -> str:
    if value is None:
        return ""
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, float):
        return _float_text(value)
    return str(value)


def make_report(command: str, inputs: Dict[str, Any], status: str, **outputs) -> Dict[str, Any]:
    report = {"command": command, "inputs": inputs}
    report.update(outputs)
    report["status"] = status
    report["tool_version"] = TOOL_VERSION
    return _plain(report)


def render_json(report: Dict[str, Any]) -> str:
    return json.dumps(report, indent=2, allow_nan=False, cls=ReportEncoder) + "\n"


def render_csv(header: List[str], rows: List[List[Any]]) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(header)
    for row in rows:
        writer.writerow([_cell(value) for value in row])
    return buffer.getvalue()


def parse_grid(text: str) -> List[float]:
    """Parse start:stop:step into start + k step, k = 0, 1, ..., stop inclusive."""
    try:
        start, stop, step = (float(part) for part in text.split(":"))
    except ValueError:
        raise DomainError(f"Grid must be start:stop:step, got '{text}'")
    if not step > 0 or stop < start:
        raise DomainError(f"Grid needs step > 0 and stop >= start, got '{text}'")
    count = int(math.floor((stop - start) / step + 1e-9)) + 1
    return [round(start + k * step, 10) for k in range(count)]


# ---------------------------------------------------------------------------
# Subcommands
# ---------------------------------------------------------------------------

def _option(value, default):
    """Command-line value when given, including an explicit 0, else the configured default."""
    return default if value is None else value


def _tolerance(args, settings) -> float:
    tol = _option(args.tol, settings["bisection_tolerance"])
    if not tol > 0:
        raise DomainError(f"--tol must be positive, got {tol}")
    return tol


def _theorem_params(args) -> Dict[str, float]:
    return {k: v for k, v in (("M", args.M), ("M1", args.M1), ("M2", args.M2)) if v is not None}


def command_radii(args, config) -> tuple:
    settings = config["settings"]
    params = _theorem_params(args)
    result = theorem_radius(args.theorem, tol=_tolerance(args, settings),
                            max_iter=settings["bisection_max_iterations"], **params)
    status = "exploratory" if result.sigma_nonpositive else "ok"
    inputs = {"theorem": args.theorem, **params}
    report = make_report("radii", inputs, status, family=result.spec.family, rho=result.rho,
                         sigma=result.sigma, residual=result.residual, iterations=result.iterations,
                         unconstrained=result.unconstrained, sigma_nonpositive=result.sigma_nonpositive)
    header = ["theorem", "rho", "sigma", "residual", "unconstrained"]
    rows = [[args.theorem, report["rho"], report["sigma"], report["residual"], result.unconstrained]]
    return report, header, rows


def command_compare(args, config) -> tuple:
    grid = parse_grid(args.grid)
    chain_report = remark_chain(args.remark, grid, M1=args.M1, tol=_tolerance(args, config["settings"]))
    rows_out, csv_rows = [], []
    for value, row in zip(grid, chain_report.rows):
        rows_out.append({"param": value, "params": row.params, "radii": row.radii, "sigmas": row.sigmas,
                         "in_regime": row.in_regime, "equalities": row.equalities, "status": row.status})
        passed = "exploratory" if row.passed is None else row.passed
        csv_rows.append([value] + [row.radii.get(column) for column in CHAIN_COLUMNS] + [passed])
    inputs = {"remark": args.remark, "grid": args.grid, "regime": chain_report.regime}
    if args.remark in ("R27", "R29"):
        inputs["M1"] = args.M1
    report = make_report("compare", inputs, chain_report.status, rows=rows_out)
    header = ["param", *CHAIN_COLUMNS, "pass"]
    return report, header, _plain(csv_rows)


def command_coeffs(args, config) -> tuple:
    extraction = config["extraction"]
    params = {k: getattr(args, k) for k in CORPUS_DEFAULTS[args.corpus] if getattr(args, k) is not None}
    entry = corpus(args.corpus, **params)
    n_max = _option(args.n_max, extraction["n_max"])
    r = _option(args.r, extraction["radius"])
    samples = _option(args.samples, extraction["samples"])

    audits = []
    for target in entry.audit_targets:
        mode = args.mode or target.mode
        audits.append((target.label, audit_bounds(target.mapping, target.M, mode, n_max=n_max,
                                                  map_name=f"{entry.name}.{target.label}", r=r, N=samples)))

    asserted = [audit for _, audit in audits if audit.asserted]
    if any(not audit.passed for audit in asserted):
        status = "fail"
    else:
        status = "ok" if asserted else "exploratory"

    rows_out, csv_rows = [], []
    for label, audit in audits:
        for row in audit.rows:
            rows_out.append({"map": label, "mode": audit.mode, "M": audit.M, "n": row.n, "value": row.value,
                             "bound": row.bound, "slack": row.slack, "status": audit.status})
            csv_rows.append([label, audit.mode, row.n, row.value, row.bound, row.slack, audit.status])
    inputs = {"corpus": entry.name, **entry.params, "n_max": n_max, "r": r, "samples": samples}
    if args.mode:
        inputs["mode"] = args.mode
    lambdas = {label: audit.lam for label, audit in audits}
    report = make_report("coeffs", inputs, status, hypothesis=entry.hypothesis,
                         normalization=entry.normalization, lambda_at_origin=lambdas, rows=rows_out)
    header = ["map", "mode", "n", "value", "bound", "slack", "status"]
    return report, header, _plain(csv_rows)


def command_verify(args, config) -> tuple:
    settings = config["settings"]
    options = config["verification"]
    grid_n = _option(args.grid_n, settings["grid_n"])
    scan_options = dict(grid_n=grid_n, n_boundary=options["boundary_samples"], n_targets=options["targets"],
                        collision_tolerance=options["collision_tolerance"],
                        separation_floor=options["separation_floor"])
    if args.theorem == "classical":
        if args.M is None:
            raise DomainError("The classical configuration requires M (|f| < M, M >= 1)")
        result = verify_classical(args.M, scale=options["coverage_scale"], **scan_options)
    else:
        result = verify_theorem(args.theorem, M=args.M, M1=args.M1, M2=args.M2,
                                univalence_scale=options["univalence_scale"],
                                coverage_scale=options["coverage_scale"],
                                tol=_tolerance(args, settings),
                                max_iter=settings["bisection_max_iterations"], **scan_options)

    injectivity = result.injectivity
    injectivity_out = {"radius": injectivity.radius, "grid_n": injectivity.grid_n, "passed": injectivity.passed,
                       "witness": injectivity.witness, "min_separation_ratio": injectivity.min_separation_ratio,
                       "n_points": injectivity.n_points, "note": injectivity.note}
    coverage_out = None
    if result.coverage is not None:
        coverage = result.coverage
        coverage_out = {"radius": coverage.radius, "sigma": coverage.sigma, "n_targets": coverage.n_targets,
                        "passed": coverage.passed, "uncovered": coverage.uncovered,
                        "indeterminate": coverage.indeterminate, "max_deviation": coverage.max_deviation,
                        "n_samples": coverage.n_samples, "note": coverage.note}

    inputs = {"theorem": args.theorem, **result.params, "grid_n": grid_n}
    report = make_report("verify", inputs, result.status, corpus=result.corpus_name, rho=result.rho,
                         sigma=result.sigma, scan_radius=result.scan_radius, injectivity=injectivity_out,
                         coverage=coverage_out, min_jacobian=result.min_jacobian, extras=result.extras)
    header = ["key", "value"]
    rows = [["rho", report["rho"]], ["sigma", report["sigma"]], ["scan_radius", report["scan_radius"]],
            ["injectivity_passed", injectivity.passed],
            ["min_separation_ratio", report["injectivity"]["min_separation_ratio"]],
            ["coverage_passed", None if coverage_out is None else coverage_out["passed"]],
            ["min_jacobian", report["min_jacobian"]], ["status", result.status]]
    rows += [[key, value] for key, value in report["extras"].items()]
    return report, header, rows


def command_corpus_list(args, config) -> tuple:
    rows_out = [{"name": name, "defaults": CORPUS_DEFAULTS[name], "description": CORPUS_DESCRIPTIONS[name]}
                for name in CORPUS_NAMES]
    report = make_report("corpus-list", {}, "ok", rows=rows_out)
    csv_rows = [[row["name"], " ".join(f"{k}={v}" for k, v in row["defaults"].items()), row["description"]]
                for row in rows_out]
    return report, ["name", "defaults", "description"], csv_rows


COMMANDS = {
    "radii": command_radii,
    "compare": command_compare,
    "coeffs": command_coeffs,
    "verify": command_verify,
    "corpus-list": command_corpus_list,
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--config", "-c", help="Path to configuration file (default: $LANDAU_CONFIG or config.yaml)")
    common.add_argument("--output", "-o", help="Output file path (stdout if not specified)")
    common.add_argument("--tol", type=float, help="Bisection tolerance for family I radii")
    common.add_argument("--grid-n", type=int, help="Scan density for verify")
    output_format = common.add_mutually_exclusive_group()
    output_format.add_argument("--json", dest="output_format", action="store_const", const="json",
                               help="Emit a JSON report (default)")
    output_format.add_argument("--csv", dest="output_format", action="store_const", const="csv",
                               help="Emit a CSV table")

    parameters = argparse.ArgumentParser(add_help=False)
    parameters.add_argument("--M", type=float, help="Single bound M")
    parameters.add_argument("--M2", type=float, help="Bound M2 on h")

    parser = argparse.ArgumentParser(
        description="Landau univalence and schlicht radii for harmonic and biharmonic mappings"
    )
    subparsers = parser.add_subparsers(dest="command", required=True)

    radii = subparsers.add_parser("radii", parents=[common, parameters], help="Radii of one theorem")
    radii.add_argument("--theorem", "-t", required=True, choices=THEOREM_IDS, help="Theorem identifier")
    radii.add_argument("--M1", type=float, help="Bound M1 on |g|")

    compare = subparsers.add_parser("compare", parents=[common], help="Evaluate a remark's radius chain on a grid")
    compare.add_argument("--remark", "-r", required=True, choices=REMARK_IDS, help="Remark identifier")
    compare.add_argument("--grid", required=True, help="Parameter grid start:stop:step (M, or M2 for R27/R29)")
    compare.add_argument("--M1", type=float, default=1.0, help="Fixed M1 for R27/R29 grids (default 1.0)")

    coeffs = subparsers.add_parser("coeffs", parents=[common], help="Coefficient extraction and bound audit")
    coeffs.add_argument("--corpus", required=True, choices=CORPUS_NAMES, help="Corpus mapping")
    coeffs.add_argument("--M", type=float, help="Bound M")
    coeffs.add_argument("--a", type=float, help="lambda_f(0) of f_an")
    coeffs.add_argument("--n", type=int, help="Index n of f_an")
    coeffs.add_argument("--m", type=int, help="Power m of vstrip_m")
    coeffs.add_argument("--M1", type=float, help="Bound M1 of bih_gh")
    coeffs.add_argument("--M2", type=float, help="Bound M2 of bih_gh")
    coeffs.add_argument("--n-max", type=int, help="Highest coefficient index audited")
    coeffs.add_argument("--mode", choices=AUDIT_MODES, help=f"Override the audit mode (e.g. {CONJECTURE_H})")
    coeffs.add_argument("--r", type=float, help="Extraction radius")
    coeffs.add_argument("--samples", type=int, help="Extraction sample count")

    verify = subparsers.add_parser("verify", parents=[common, parameters],
                                   help="Injectivity and coverage scan of a theorem configuration")
    verify.add_argument("--theorem", "-t", required=True, choices=THEOREM_IDS + ("classical",),
                        help="Theorem identifier, or 'classical' for the analytic Landau extremal")
    verify.add_argument("--M1", type=float, help="Bound M1 on |g|")

    subparsers.add_parser("corpus-list", parents=[common], help="List corpus mappings")
    return parser


def run(argv: Optional[List[str]] = None) -> int:
    """Run one subcommand and return its exit code."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else EXIT_USAGE

    try:
        config = load_config(args.config)
        output_format = args.output_format or config["settings"]["output_format"]
        if output_format not in ("json", "csv"):
            raise ConfigError(f"settings.output_format must be json or csv, got '{output_format}'")
        logger.info(f"Running {args.command}...")
        report, header, rows = COMMANDS[args.command](args, config)
    except (DomainError, ConfigError) as e:
        logger.error(str(e))
        return EXIT_USAGE
    except HypothesisAuditError as e:
        logger.error(f"Corpus construction audit failed: {e}")
        return EXIT_FAILED

    text = render_json(report) if output_format == "json" else render_csv(header, rows)
    if args.output:
        with open(args.output, "w") as f:
            f.write(text)
        logger.info(f"Report written to {args.output}")
    else:
        sys.stdout.write(text)

    if report["status"] == "fail":
        logger.error(f"{args.command}: assertion failed")
        return EXIT_FAILED
    return EXIT_OK


def main():
    """Main function"""
    log_level = os.getenv("LOG_LEVEL", "INFO").upper()
    logging.basicConfig(
        level=getattr(logging, log_level, logging.INFO),
        format="%(asctime)s - %(levelname)s - %(message)s",
    )
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
