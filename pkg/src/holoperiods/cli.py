"""Command-line front end.

    holoperiods classify action.json
    holoperiods lefschetz --max-m 10 action.json
    holoperiods harness builtin:half --format json
"""

from __future__ import annotations

import argparse
import json
import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from pathlib import Path
from typing import Optional

from holoperiods._jsonint import encode_int
from holoperiods.classifier import DEFAULT_HARD_CAP, Verdict, classify, period_set_statement
from holoperiods.errors import (
    HypothesisShapeViolated,
    MalformedInput,
    PreconditionNotStrictlyInside,
    TheoremViolation,
    WitnessNotFound,
)
from holoperiods.harness import BUILTIN_MAPS, map_from_document, verify_theorem
from holoperiods.homology import from_document, hypothesis_shape
from holoperiods.lefschetz import DEFAULT_MAX_M, lefschetz_sequence, zeta
from holoperiods.spectrum import circle_angles, spectrum_summary

SUBCOMMANDS = ("classify", "lefschetz", "zeta", "spectrum", "harness")

HARNESS_MAX_M = 8

EXIT_OK = 0
EXIT_MALFORMED = 1
EXIT_SHAPE = 2
EXIT_NO_WITNESS = 3
EXIT_THEOREM_VIOLATION = 4

_VERDICT_TEXT = {
    Verdict.FORCED_CASE_A: "forced case (a)",
    Verdict.CASE_B_COMPATIBLE: "compatible with case (b)",
    Verdict.CASE_C_COMPATIBLE: "compatible with case (c)",
}


@dataclass(frozen=True)
class RunConfig:
    subcommand: str
    input_path: str
    max_m: int = DEFAULT_MAX_M
    hard_cap: int = DEFAULT_HARD_CAP
    output_format: str = "text"
    grid_resolution: int = 64
    out: Optional[str] = None


class _Failure(Exception):
    def __init__(self, code: int, message: str):
        self.code = code
        super().__init__(message)


def canonical_json(obj) -> str:
    return json.dumps(obj, sort_keys=True, indent=2, ensure_ascii=False) + "\n"


def _load(path: str):
    if path.startswith("builtin:"):
        key = path.split(":", 1)[1]
        if key not in BUILTIN_MAPS:
            raise MalformedInput("input", f"unknown builtin map {key!r}; choose from {sorted(BUILTIN_MAPS)}")
        return BUILTIN_MAPS[key]
    try:
        with open(path, encoding="utf-8") as fh:
            return json.load(fh)
    except OSError as exc:
        raise MalformedInput("input", f"cannot read {path}: {exc.strerror}") from None
    except json.JSONDecodeError as exc:
        raise MalformedInput("input", f"invalid JSON at line {exc.lineno}: {exc.msg}") from None


def _ints(values) -> list:
    return [encode_int(v) for v in values]


def _poly_in_t(p) -> str:
    """Ascending powers, e.g. ``1 - t + 2t^3``."""
    terms = []
    for k, c in enumerate(p.coeffs):
        if c == 0:
            continue
        mag = abs(c)
        body = str(mag) if k == 0 else ("" if mag == 1 else str(mag)) + ("t" if k == 1 else f"t^{k}")
        if terms:
            terms.append(("- " if c < 0 else "+ ") + body)
        else:
            terms.append(("-" if c < 0 else "") + body)
    return " ".join(terms) or "0"


def _classify(cfg: RunConfig, doc) -> tuple[dict, str]:
    name, action = from_document(doc)
    result = classify(action, cfg.hard_cap)
    statement = period_set_statement(result)
    report = {"name": name, **result.to_fragment(), **result.spectrum.to_fragment()}
    report["L"] = _ints(result.l_prefix.values)
    report["period_set"] = statement.text
    lines = [f"input: {name or cfg.input_path}", f"verdict: {_VERDICT_TEXT[result.verdict]}"]
    if result.witness_m is not None:
        lines.append(f"witness m={result.witness_m} ({result.witness_reason.value})")
    lines += [
        f"proof case: {result.proof_case.value}",
        f"period set: {statement.text}",
        f"narrative: {result.narrative}",
    ]
    return report, "\n".join(lines) + "\n"


def _lefschetz(cfg: RunConfig, doc) -> tuple[dict, str]:
    name, action = from_document(doc)
    seq = lefschetz_sequence(action, cfg.max_m)
    report = {"name": name, "L": _ints(seq.values)}
    if hypothesis_shape(action).satisfies_theorem_hypotheses:
        z = zeta(action)
        report["zeta"] = {"num": _ints(z.numerator.coeffs), "den": _ints(z.denominator.coeffs)}
    width = len(str(cfg.max_m))
    lines = [f"{'m':>{width}}  L(f^m)"] + [f"{m:>{width}}  {v}" for m, v in enumerate(seq.values, 1)]
    return report, "\n".join(lines) + "\n"


def _zeta(cfg: RunConfig, doc) -> tuple[dict, str]:
    name, action = from_document(doc)
    z = zeta(action)
    report = {"name": name, "zeta": {"num": _ints(z.numerator.coeffs), "den": _ints(z.denominator.coeffs)}}
    return report, f"zeta(t) = ({_poly_in_t(z.numerator)}) / ({_poly_in_t(z.denominator)})\n"


def _spectrum(cfg: RunConfig, doc) -> tuple[dict, str]:
    name, action = from_document(doc)
    s = spectrum_summary(action.h1)
    angles = circle_angles(action.h1)
    report = {"name": name, **s.to_fragment()}
    lines = [
        f"eigenvalues: {s.n}",
        f"zero: {s.zero_count}",
        f"roots of unity (orders): {list(s.unity_orders)}",
        f"other circle eigenvalues: {s.circle_non_torsion_count}",
        f"outside unit disk: {s.outside_count}",
        f"inside, nonzero: {s.inside_nonzero_count}",
        f"max modulus class: {s.radius_class.value}",
    ]
    if angles:
        lines.append("circle arguments (turns): " + ", ".join(str(a) if not isinstance(a, float) else f"{a:.12f}" for a in angles))
    return report, "\n".join(lines) + "\n"


def _harness(cfg: RunConfig, doc) -> tuple[dict, str]:
    spec = map_from_document(doc)
    rep = verify_theorem(spec, cfg.max_m, cfg.grid_resolution)
    lines = [
        f"map: {spec.name or cfg.input_path}",
        f"strictly inside: margin {rep.margin:.6g} ({rep.samples} boundary samples)",
        f"verdict: {_VERDICT_TEXT[rep.classification.verdict]}",
        f"{'m':>3}  {'L':>4}  {'#Fix':>4}  {'exact':>5}  points",
    ]
    for m, r in sorted(rep.reports.items()):
        pts = ", ".join(f"{p.real:.10f}{p.imag:+.10f}i" for p in r.points)
        lines.append(f"{m:>3}  {r.lefschetz_value:>4}  {r.count:>4}  {rep.exact_period_counts[m]:>5}  {pts}")
    lines.append("result: pass")
    return rep.to_dict(), "\n".join(lines) + "\n"


_HANDLERS = {
    "classify": _classify,
    "lefschetz": _lefschetz,
    "zeta": _zeta,
    "spectrum": _spectrum,
    "harness": _harness,
}


def _render(cfg: RunConfig) -> str:
    """Run one input; returns the rendered output or raises ``_Failure``."""
    try:
        report, text = _HANDLERS[cfg.subcommand](cfg, _load(cfg.input_path))
    except (MalformedInput, PreconditionNotStrictlyInside) as exc:
        raise _Failure(EXIT_MALFORMED, f"error: {exc}") from None
    except HypothesisShapeViolated as exc:
        raise _Failure(EXIT_SHAPE, f"error: {exc}") from None
    except WitnessNotFound as exc:
        raise _Failure(EXIT_NO_WITNESS, f"error: {exc}") from None
    except TheoremViolation as exc:
        raise _Failure(EXIT_THEOREM_VIOLATION, f"theorem violation: {exc}") from None
    return canonical_json(report) if cfg.output_format == "json" else text


def _run_one(cfg: RunConfig) -> tuple[int, str, str]:
    try:
        return EXIT_OK, _render(cfg), ""
    except _Failure as exc:
        return exc.code, "", str(exc) + "\n"


def run(config: RunConfig) -> int:
    if config.subcommand not in SUBCOMMANDS:
        print(f"error: unknown subcommand {config.subcommand!r}", file=sys.stderr)
        return EXIT_MALFORMED
    if config.max_m < 1 or config.hard_cap < 1 or config.grid_resolution < 1:
        print("error: --max-m, --cap and --grid must be positive", file=sys.stderr)
        return EXIT_MALFORMED
    if config.max_m > config.hard_cap:
        print("error: --max-m must not exceed --cap", file=sys.stderr)
        return EXIT_MALFORMED

    path = Path(config.input_path)
    if not config.input_path.startswith("builtin:") and path.is_dir():
        return _run_directory(config, path)

    code, output, err = _run_one(config)
    if err:
        sys.stderr.write(err)
    if output:
        if config.out:
            Path(config.out).write_text(output, encoding="utf-8")
        else:
            sys.stdout.write(output)
    return code


def _run_directory(config: RunConfig, directory: Path) -> int:
    files = sorted(directory.glob("*.json"))
    configs = [RunConfig(**{**config.__dict__, "input_path": str(f), "out": None}) for f in files]
    with ProcessPoolExecutor() as pool:
        results = list(pool.map(_run_one, configs))
    out_dir = Path(config.out) if config.out else None
    if out_dir:
        out_dir.mkdir(parents=True, exist_ok=True)
    suffix = ".json" if config.output_format == "json" else ".txt"
    worst = EXIT_OK
    for f, (code, output, err) in zip(files, results):
        worst = max(worst, code)
        if err:
            sys.stderr.write(f"{f.name}: {err}")
        if not output:
            continue
        if out_dir:
            (out_dir / (f.stem + suffix)).write_text(output, encoding="utf-8")
        else:
            sys.stdout.write(f"== {f.name}\n{output}")
    return worst


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("input", help="input JSON file, a directory of them, or builtin:NAME for harness")
    common.add_argument("--max-m", type=int, help="iterates to report (default 64; 8 for harness)")
    common.add_argument("--cap", type=int, default=DEFAULT_HARD_CAP, help="witness search cap (default 65536)")
    common.add_argument("--format", choices=("text", "json"), default="text")
    common.add_argument("--grid", type=int, default=64, help="Newton seed grid resolution (harness)")
    common.add_argument("--out", help="write output here (a directory when the input is a directory)")

    parser = argparse.ArgumentParser(prog="holoperiods", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="subcommand", required=True)
    helps = {
        "classify": "decide the period-set trichotomy case",
        "lefschetz": "print L(f^m) for m = 1..max-m",
        "zeta": "print the Lefschetz zeta function",
        "spectrum": "summarise eigenvalue locations of f_*1",
        "harness": "verify the Lefschetz bound on a concrete map",
    }
    for name in SUBCOMMANDS:
        sub.add_parser(name, parents=[common], help=helps[name])
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    max_m = args.max_m
    if max_m is None:
        max_m = HARNESS_MAX_M if args.subcommand == "harness" else DEFAULT_MAX_M
    config = RunConfig(
        subcommand=args.subcommand,
        input_path=args.input,
        max_m=max_m,
        hard_cap=args.cap,
        output_format=args.format,
        grid_resolution=args.grid,
        out=args.out,
    )
    return run(config)


if __name__ == "__main__":
    sys.exit(main())
