"""Pipeline driver and JSON certificate emission.

Subcommands: validate, search, build, verify, run, demo-g2, demo-g3.  A run
reads a flat ``key = value`` config file (every key overridable on the
command line), executes validate -> search -> build -> verify stage by
stage, and writes one canonical JSON document holding every number needed to
re-derive every pass/fail flag.  Identical configs produce byte-identical
documents up to the timing block, which is excluded from comparisons.

Exit codes: 0 for a PASS verdict, 1 for a FAIL document, 2 for an unusable
configuration.
"""

import argparse
import json
import sys
import time
from dataclasses import dataclass

from . import __version__
from .artinian import (build_artinian, find_sop, socle_and_type,
                       verify_total_reflexivity)
from .curve import validate_curve
from .errors import ConfigError, IoError, SectionRingError
from .graded import (build_graded_model, check_section_sequences,
                     check_standard_graded, hilbert_check)
from .reflexivity import (betti_numbers, canonical_and_type, ext_vanishing,
                          syzygy_matrix, verify_complex_window,
                          verify_dual_and_hom)
from .search import find_good_divisor, verify_certificate

DEMO_PRESETS = {
    "demo-g2": {"p": 101, "f": [1, 1, 0, 0, 0, 1], "seed": 0},
    "demo-g3": {"p": 101, "f": [1, 1, 0, 0, 0, 0, 0, 1], "seed": 0},
}


@dataclass
class RunConfig:
    p: int
    f_coeffs: list
    seed: int = 0
    max_tries: int = 100
    degree_bound: int = 6
    window: int = 4
    strong_divisor_check: bool = False
    output_path: str = None

    def echo(self):
        return {
            "p": self.p,
            "f": list(self.f_coeffs),
            "seed": self.seed,
            "max_tries": self.max_tries,
            "degree_bound": self.degree_bound,
            "window": self.window,
            "strong_divisor_check": self.strong_divisor_check,
        }


def _parse_value(raw):
    raw = raw.strip()
    try:
        return json.loads(raw)
    except ValueError:
        lowered = raw.lower()
        if lowered in ("true", "false"):
            return lowered == "true"
        return raw


def parse_config_file(path):
    """Flat key = value lines; '#' starts a comment; values JSON-parsed."""
    values = {}
    try:
        with open(path, "r", encoding="utf-8") as fh:
            for lineno, line in enumerate(fh, 1):
                line = line.split("#", 1)[0].strip()
                if not line:
                    continue
                if "=" not in line:
                    raise ConfigError(f"{path}:{lineno}: expected key = value")
                key, raw = line.split("=", 1)
                values[key.strip()] = _parse_value(raw)
    except OSError as exc:
        raise ConfigError(f"cannot read config {path}: {exc}") from exc
    return values


def _coerce_f(value):
    if isinstance(value, str):
        value = [v for v in value.replace("[", " ").replace("]", " ")
                 .replace(",", " ").split() if v]
    try:
        return [int(v) for v in value]
    except (TypeError, ValueError) as exc:
        raise ConfigError(f"bad coefficient list for f: {value!r}") from exc


def build_config(values):
    """Validate raw key/value pairs into a RunConfig."""
    known = {"p", "f", "seed", "max_tries", "degree_bound", "window",
             "strong", "out"}
    unknown = set(values) - known
    if unknown:
        raise ConfigError(f"unknown config keys: {sorted(unknown)}")
    if "p" not in values or "f" not in values:
        raise ConfigError("config needs at least p and f")
    try:
        cfg = RunConfig(
            p=int(values["p"]),
            f_coeffs=_coerce_f(values["f"]),
            seed=int(values.get("seed", 0)),
            max_tries=int(values.get("max_tries", 100)),
            degree_bound=int(values.get("degree_bound", 6)),
            window=int(values.get("window", 4)),
            strong_divisor_check=bool(values.get("strong", False)),
            output_path=values.get("out"),
        )
    except (TypeError, ValueError) as exc:
        raise ConfigError(f"bad config value: {exc}") from exc
    if cfg.degree_bound < 3:
        raise ConfigError("degree_bound must be at least 3")
    if not 1 <= cfg.window <= cfg.degree_bound - 2:
        raise ConfigError("window must satisfy 1 <= window <= degree_bound - 2")
    if cfg.max_tries < 1:
        raise ConfigError("max_tries must be positive")
    return cfg


def _validated_curve(config):
    try:
        return validate_curve(config.p, config.f_coeffs)
    except SectionRingError as exc:
        raise ConfigError(f"invalid curve: {exc}") from exc


def run_pipeline(config):
    """Execute every stage; failures yield a FAIL document naming the stage."""
    curve = _validated_curve(config)
    doc = {
        "tool": {"name": "sectionring", "version": __version__},
        "config": config.echo(),
        "curve": {"p": curve.p, "f": list(curve.f.coeffs),
                  "genus": curve.genus},
        "verdict": "FAIL",
        "failed_stage": None,
        "error": None,
    }
    timings = {}
    state = {}

    def stage(name, fn):
        t0 = time.perf_counter()
        out = fn()
        timings[name] = round(time.perf_counter() - t0, 6)
        return out

    def attempt(name, fn):
        try:
            return True, stage(name, fn)
        except SectionRingError as exc:
            doc["failed_stage"] = name
            doc["error"] = f"{type(exc).__name__}: {exc}"
            return False, None

    plan = [
        ("search", lambda: find_good_divisor(
            curve, seed=config.seed, max_tries=config.max_tries)),
        ("verify_divisor", lambda: verify_certificate(
            curve, state["search"].divisor,
            strong=config.strong_divisor_check,
            seed=state["search"].seed, tries=state["search"].tries)),
        ("build_model", lambda: build_graded_model(
            curve, state["verify_divisor"], N=config.degree_bound)),
        ("hilbert", lambda: hilbert_check(state["build_model"])),
        ("standard_graded", lambda: check_standard_graded(
            state["build_model"])),
        ("section_sequences", lambda: check_section_sequences(
            state["build_model"])),
        ("syzygy", lambda: syzygy_matrix(state["build_model"])),
        ("complex_window", lambda: verify_complex_window(
            state["build_model"], state["syzygy"])),
        ("dual_and_hom", lambda: verify_dual_and_hom(
            state["build_model"], state["syzygy"])),
        ("ext", lambda: ext_vanishing(
            state["build_model"], state["syzygy"], config.window)),
        ("betti", lambda: betti_numbers(
            state["build_model"], state["syzygy"], config.window)),
        ("canonical", lambda: canonical_and_type(state["build_model"])),
        ("find_sop", lambda: find_sop(state["build_model"], seed=config.seed)),
        ("artinian", lambda: build_artinian(
            state["build_model"], *state["find_sop"], seed=config.seed)),
        ("artinian_reflexivity", lambda: verify_total_reflexivity(
            state["artinian"])),
        ("socle", lambda: socle_and_type(state["artinian"])),
    ]
    for name, fn in plan:
        ok, result = attempt(name, fn)
        if not ok:
            doc["timings"] = timings
            return doc
        state[name] = result

    model = state["build_model"]
    socle_dim, loewy = state["socle"]
    doc.update({
        "verdict": "PASS",
        "divisor_certificate": state["verify_divisor"].to_json(),
        "graded_model": {
            "degree_bound": model.N,
            "dims": {k: model.dims(k) for k in ("R", "M", "K")},
            "hilbert": state["hilbert"],
            "standard_graded": state["standard_graded"],
            "section_sequences": state["section_sequences"],
        },
        "syzygy": state["syzygy"].to_json(),
        "resolution": {
            "complex": state["complex_window"],
            "duality": state["dual_and_hom"],
            "ext": state["ext"],
            "betti": state["betti"],
        },
        "canonical_module": state["canonical"],
        "artinian": {
            "model": state["artinian"].to_json(),
            "total_reflexivity": state["artinian_reflexivity"],
            "socle_dim": socle_dim,
            "loewy_length": loewy,
            "type": socle_dim,
        },
        "timings": timings,
    })
    return doc


def canonical_json(doc):
    return json.dumps(doc, sort_keys=True, indent=2, ensure_ascii=True) + "\n"


def masked_document(doc):
    """Copy of the document without the timing block (for comparisons)."""
    out = json.loads(json.dumps(doc))
    out.pop("timings", None)
    return out


def emit_report(doc, path):
    data = canonical_json(doc).encode("utf-8")
    try:
        with open(path, "wb") as fh:
            fh.write(data)
    except OSError as exc:
        raise IoError(f"cannot write {path}: {exc}") from exc


def _add_override_args(sub):
    sub.add_argument("--config", help="path to a key = value config file")
    sub.add_argument("--prime", type=int, help="field characteristic p")
    sub.add_argument("--f", help="coefficients of f ascending, e.g. "
                                 "'[1,1,0,0,0,1]'")
    sub.add_argument("--seed", type=int, help="search seed")
    sub.add_argument("--max-tries", type=int, help="divisor search budget")
    sub.add_argument("--degree-bound", type=int,
                     help="graded truncation bound N")
    sub.add_argument("--window", type=int, help="Ext window i_max")
    sub.add_argument("--strong", action="store_true", default=None,
                     help="also check h1(D - P) = 0 at every rational place")
    sub.add_argument("--out", help="certificate output path")


def _gather_config(args, preset=None):
    values = dict(preset or {})
    if getattr(args, "config", None):
        values.update(parse_config_file(args.config))
    for key, attr in (("p", "prime"), ("f", "f"), ("seed", "seed"),
                      ("max_tries", "max_tries"),
                      ("degree_bound", "degree_bound"), ("window", "window"),
                      ("strong", "strong"), ("out", "out")):
        val = getattr(args, attr, None)
        if val is not None:
            values[key] = val
    return build_config(values)


def _print(doc):
    sys.stdout.write(canonical_json(doc))


def main(argv=None):
    parser = argparse.ArgumentParser(
        prog="sectionring",
        description="Build and certify section rings of hyperelliptic "
                    "divisors over prime fields.")
    parser.add_argument("--version", action="version", version=__version__)
    subs = parser.add_subparsers(dest="command", required=True)
    for name, helptext in (
            ("validate", "check the curve data and report the genus"),
            ("search", "find and certify a good divisor"),
            ("build", "build the graded model and report its dimensions"),
            ("verify", "run every check and print the certificate"),
            ("run", "full pipeline; write the certificate file"),
            ("demo-g2", "reference run on y^2 = x^5 + x + 1 over GF(101)"),
            ("demo-g3", "reference run on y^2 = x^7 + x + 1 over GF(101)")):
        sub = subs.add_parser(name, help=helptext)
        _add_override_args(sub)

    args = parser.parse_args(argv)
    try:
        preset = DEMO_PRESETS.get(args.command)
        config = _gather_config(args, preset)
        curve = _validated_curve(config)
    except ConfigError as exc:
        print(f"config error: {exc}", file=sys.stderr)
        return 2

    if args.command == "validate":
        _print({"p": curve.p, "f": list(curve.f.coeffs),
                "genus": curve.genus, "valid": True})
        return 0

    try:
        if args.command == "search":
            cert = find_good_divisor(curve, seed=config.seed,
                                     max_tries=config.max_tries)
            _print(cert.to_json())
            return 0
        if args.command == "build":
            cert = find_good_divisor(curve, seed=config.seed,
                                     max_tries=config.max_tries)
            model = build_graded_model(curve, cert, N=config.degree_bound)
            _print({"dims": {k: model.dims(k) for k in ("R", "M", "K")},
                    "degree_bound": model.N,
                    "divisor_certificate": cert.to_json()})
            return 0
    except SectionRingError as exc:
        print(f"{type(exc).__name__}: {exc}", file=sys.stderr)
        return 1

    # verify / run / demos: the full pipeline
    doc = run_pipeline(config)
    default_out = {
        "run": "sectionring-certificate.json",
        "demo-g2": "sectionring-demo-g2.json",
        "demo-g3": "sectionring-demo-g3.json",
    }
    out = config.output_path
    if args.command != "verify":
        out = out or default_out[args.command]
    if out:
        emit_report(doc, out)
        print(f"{doc['verdict']}: certificate written to {out}")
    else:
        _print(doc)
    return 0 if doc["verdict"] == "PASS" else 1


if __name__ == "__main__":
    sys.exit(main())
