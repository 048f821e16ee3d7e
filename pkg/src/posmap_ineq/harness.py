"""Verification suites, example reproduction, fuzzing and the sharpness search.

Reports are sequences of flat JSON objects (one per line, format ``ldo``) or
a CSV summary. Every object carries a ``record`` field naming its type; the
JSON Schemas for each type live in :data:`RECORD_SCHEMAS`.

Exit codes: 0 all verdicts hold, 1 at least one verdict failed, 2 usage or
configuration error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import logging
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Sequence

import numpy as np

from .checkers import CHECKERS, Instance, PolyaBand, check_polya_szego, run_checker
from .errors import HypothesisViolation
from .generators import suite_instance
from .maps import NormalizedTrace, apply_map
from .means import geo_mean
from .psd_core import CheckResult, eigvals_sym
from .sharpness import SearchState, search_sharpness

log = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_USAGE = 2

REPRO_TOL = 0.02
DEFAULT_DIMS = (2, 3, 4, 5, 6, 7, 8)

EXAMPLE1 = {
    "band": (1.21, 16.0, 20.25, 25.0),
    "A": [[2.0, -2.0], [-2.0, 7.0]],
    "B": [[21.0, 0.5], [0.5, 21.0]],
    "published": {"geometric": 9.72, "unrefined": 11.2, "refined": 11.12},
}
EXAMPLE2 = {
    "band": (4.0, 9.0, 0.5, 2.0),
    "A": [[6.0, -1.0], [-1.0, 5.0]],
    "B": [[1.5, 0.5], [0.5, 1.2]],
    "published": {"geometric": 2.72, "unrefined": 3.02, "refined": 2.84},
}
EXAMPLES = {1: EXAMPLE1, 2: EXAMPLE2}


class UsageError(ValueError):
    pass


# --------------------------------------------------------------------------
# report records
# --------------------------------------------------------------------------

_num = {"type": "number"}
_int = {"type": "integer"}
_str = {"type": "string"}
_bool = {"type": "boolean"}

RECORD_SCHEMAS: dict[str, dict] = {
    "suite": {
        "type": "object",
        "required": ["record", "config"],
        "properties": {"record": {"const": "suite"}, "config": {"type": "object"}},
    },
    "check": {
        "type": "object",
        "required": ["record", "theorem_id", "verdict", "margin", "constants",
                     "instance_digest", "seed"],
        "properties": {
            "record": {"const": "check"},
            "theorem_id": _str,
            "verdict": _bool,
            "margin": {"type": ["number", "null"]},
            "scale": _num,
            "constants": {"type": "object", "additionalProperties": _num},
            "subchecks": {"type": "object"},
            "instance_digest": _str,
            "seed": {"type": ["integer", "null"]},
            "error": _str,
            "witness": {"type": "object"},
        },
    },
    "summary": {
        "type": "object",
        "required": ["record", "theorem_id", "instances", "passed", "failed", "min_margin",
                     "min_relative_margin", "worst_instance_digest"],
        "properties": {
            "record": {"const": "summary"},
            "theorem_id": _str,
            "instances": _int,
            "passed": _int,
            "failed": _int,
            "errors": _int,
            "min_margin": {"type": ["number", "null"]},
            "min_relative_margin": {"type": ["number", "null"]},
            "worst_instance_digest": {"type": ["string", "null"]},
        },
    },
    "total": {
        "type": "object",
        "required": ["record", "passed", "failed", "exit_code"],
        "properties": {
            "record": {"const": "total"},
            "passed": _int,
            "failed": _int,
            "exit_code": {"enum": [0, 1]},
            "wall_time_s": _num,
        },
    },
    "repro": {
        "type": "object",
        "required": ["record", "example", "quantity", "published_value", "computed", "reproduced"],
        "properties": {
            "record": {"const": "repro"},
            "example": _int,
            "quantity": _str,
            "published_value": _num,
            "computed": _num,
            "abs_error": _num,
            "reproduced": _bool,
        },
    },
    "search": {
        "type": "object",
        "required": ["record", "band", "budget", "seed", "best_ratio", "witness_instance",
                     "ratio_trace"],
        "properties": {
            "record": {"const": "search"},
            "band": {"type": "object"},
            "budget": {"type": "integer", "minimum": 1},
            "seed": _int,
            "best_ratio": {"type": "number", "exclusiveMinimum": 0},
            "exceeds_bound": _bool,
            "witness_instance": {"type": "object", "required": ["A", "B", "phi", "band"]},
            "ratio_trace": {
                "type": "array",
                "items": {"type": "array", "items": _num, "minItems": 2, "maxItems": 2},
            },
            "map_family": _str,
        },
    },
    "search_merge": {
        "type": "object",
        "required": ["record", "seeds", "best_ratio", "best_seed", "exceeds_bound"],
        "properties": {
            "record": {"const": "search_merge"},
            "seeds": {"type": "array", "items": _int},
            "best_ratio": _num,
            "best_seed": _int,
            "exceeds_bound": _bool,
        },
    },
}


@dataclass
class TheoremStats:
    theorem_id: str
    instances: int = 0
    passed: int = 0
    failed: int = 0
    errors: int = 0
    min_margin: float | None = None
    min_relative_margin: float | None = None
    worst_instance_digest: str | None = None

    def to_record(self) -> dict:
        return {
            "record": "summary",
            "theorem_id": self.theorem_id,
            "instances": self.instances,
            "passed": self.passed,
            "failed": self.failed,
            "errors": self.errors,
            "min_margin": self.min_margin,
            "min_relative_margin": self.min_relative_margin,
            "worst_instance_digest": self.worst_instance_digest,
        }


@dataclass
class Report:
    """Outcome of one harness run.

    ``records`` are the line objects in their final order; ``stats`` holds
    per-theorem counts for suite runs. ``wall_time_s`` is kept out of the
    serialized form unless requested, so identical runs serialize identically.
    """

    kind: str
    records: list[dict] = field(default_factory=list)
    stats: dict[str, TheoremStats] = field(default_factory=dict)
    exit_code: int = EXIT_OK
    wall_time_s: float = 0.0
    search: SearchState | None = None

    def to_ldo(self, timing: bool = False) -> str:
        lines = []
        for rec in self.records:
            if rec.get("record") == "total" and timing:
                rec = dict(rec, wall_time_s=self.wall_time_s)
            lines.append(json.dumps(rec, sort_keys=True, allow_nan=False))
        return "\n".join(lines) + "\n"

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        if self.kind == "repro":
            w.writerow(["example", "quantity", "published_value", "computed", "reproduced"])
            for r in self.records:
                w.writerow([r["example"], r["quantity"], r["published_value"],
                            f"{r['computed']:.6f}", r["reproduced"]])
        elif self.kind == "search":
            rec = self.records[0]
            w.writerow(["seed", "budget", "best_ratio", "exceeds_bound"])
            w.writerow([rec["seed"], rec["budget"], repr(rec["best_ratio"]), rec["exceeds_bound"]])
        else:
            w.writerow(["theorem_id", "instances", "passed", "failed", "errors",
                        "min_margin", "min_relative_margin", "worst_instance_digest"])
            for s in self.stats.values():
                w.writerow([s.theorem_id, s.instances, s.passed, s.failed, s.errors,
                            s.min_margin, s.min_relative_margin, s.worst_instance_digest])
        return buf.getvalue()

    def render(self, fmt: str = "ldo", timing: bool = False) -> str:
        if fmt == "ldo":
            return self.to_ldo(timing)
        if fmt == "csv":
            return self.to_csv()
        raise UsageError(f"unknown format {fmt!r}")


# --------------------------------------------------------------------------
# example reproduction
# --------------------------------------------------------------------------


def example_instance(number: int) -> Instance:
    """The two 2x2 worked examples with ``phi(X) = tr(X)/2``."""
    ex = EXAMPLES[number]
    return Instance(ex["A"], ex["B"], NormalizedTrace(2, 0.5), 0.5, 2.0, PolyaBand(*ex["band"]))


def example_values(number: int) -> dict[str, float]:
    inst = example_instance(number)
    band = inst.band
    phi = inst.phi
    geometric = float(geo_mean(apply_map(phi, inst.A), apply_map(phi, inst.B), 0.5)[0, 0])
    pg = float(apply_map(phi, geo_mean(inst.A, inst.B, 0.5))[0, 0])
    return {
        "geometric": geometric,
        "unrefined": band.unrefined_constant * pg,
        "refined": band.gamma * pg,
        "phi_of_geo_mean": pg,
    }


def run_repro() -> Report:
    t0 = time.perf_counter()
    report = Report("repro")
    for number, ex in EXAMPLES.items():
        vals = example_values(number)
        for key, published in ex["published"].items():
            err = abs(vals[key] - published)
            report.records.append({
                "record": "repro",
                "example": number,
                "quantity": key,
                "published_value": published,
                "computed": vals[key],
                "abs_error": err,
                "reproduced": bool(err <= REPRO_TOL),
            })
        for refined in (False, True):
            res = check_polya_szego(example_instance(number), refined)
            if not res.verdict:
                report.exit_code = EXIT_FAIL
    if not all(r["reproduced"] for r in report.records):
        report.exit_code = EXIT_FAIL
    report.wall_time_s = time.perf_counter() - t0
    return report


# --------------------------------------------------------------------------
# suites
# --------------------------------------------------------------------------


@dataclass
class SuiteConfig:
    theorem_ids: list[str]
    instance_count: int = 100
    dims: list[int] = field(default_factory=lambda: list(DEFAULT_DIMS))
    seed: int = 0
    tolerance: float | None = None
    workers: int = 1

    def __post_init__(self):
        unknown = [t for t in self.theorem_ids if t not in CHECKERS]
        if unknown:
            raise UsageError(f"unknown theorem id(s): {', '.join(unknown)}")
        if not self.theorem_ids:
            raise UsageError("no theorems selected")
        if self.instance_count < 1:
            raise UsageError("instance_count must be at least 1")
        if not self.dims or any(d < 1 or d > 32 for d in self.dims):
            raise UsageError("dims must lie in [1, 32]")
        if self.tolerance is not None and self.tolerance < 0:
            raise UsageError("tolerance must be non-negative")
        if not 0 <= self.seed < 2**64:
            raise UsageError("seed must be an unsigned 64-bit integer")

    def to_dict(self) -> dict:
        return {
            "theorems": list(self.theorem_ids),
            "count": self.instance_count,
            "dims": list(self.dims),
            "seed": self.seed,
            "tolerance": self.tolerance,
        }


def _passes(res: CheckResult, tolerance: float | None) -> bool:
    verdict = res.verdict
    if tolerance is not None and res.theorem_id != "lemma50":
        verdict = res.margin >= -tolerance * res.scale
    return bool(verdict and res.all_subchecks_hold)


def _evaluate_theorem(args) -> list[tuple[Instance, list[CheckResult] | None, str | None]]:
    theorem_id, count, dims, seed = args
    spec = CHECKERS[theorem_id]
    out = []
    for i in range(count):
        inst = suite_instance(spec.instance_kind, dims[i % len(dims)], seed, i, spec.min_p)
        try:
            out.append((inst, run_checker(theorem_id, inst), None))
        except (HypothesisViolation, ArithmeticError, RuntimeError, ValueError) as exc:
            out.append((inst, None, f"{type(exc).__name__}: {exc}"))
    return out


def run_suite(cfg: SuiteConfig) -> Report:
    """Generate ``instance_count`` instances per theorem and run its checker."""
    t0 = time.perf_counter()
    jobs = [(tid, cfg.instance_count, list(cfg.dims), cfg.seed) for tid in sorted(cfg.theorem_ids)]
    if cfg.workers > 1:
        with ProcessPoolExecutor(max_workers=cfg.workers) as pool:
            evaluated = list(pool.map(_evaluate_theorem, jobs))
    else:
        evaluated = [_evaluate_theorem(j) for j in jobs]

    report = Report("suite")
    report.records.append({"record": "suite", "config": cfg.to_dict()})
    summaries = []
    for (tid, *_), rows in zip(jobs, evaluated):
        stats = TheoremStats(tid)
        lines = []
        for inst, results, error in rows:
            stats.instances += 1
            digest = inst.digest
            if error is not None:
                stats.failed += 1
                stats.errors += 1
                lines.append({
                    "record": "check", "theorem_id": tid, "verdict": False, "margin": None,
                    "constants": {}, "instance_digest": digest, "seed": inst.seed,
                    "error": error, "witness": inst.to_record(),
                })
                continue
            ok = True
            for res in results:
                passed = _passes(res, cfg.tolerance)
                ok = ok and passed
                rec = {"record": "check", **res.to_record()}
                rec["verdict"] = passed
                if not passed:
                    rec["witness"] = inst.to_record()
                lines.append(rec)
                rel = res.margin / res.scale
                if stats.min_relative_margin is None or rel < stats.min_relative_margin:
                    stats.min_relative_margin = rel
                    stats.min_margin = res.margin
                    stats.worst_instance_digest = digest
            if ok:
                stats.passed += 1
            else:
                stats.failed += 1
        lines.sort(key=lambda r: r["instance_digest"])
        report.records.extend(lines)
        report.stats[tid] = stats
        summaries.append(stats.to_record())
    report.records.extend(summaries)
    passed = sum(s.passed for s in report.stats.values())
    failed = sum(s.failed for s in report.stats.values())
    report.exit_code = EXIT_OK if failed == 0 else EXIT_FAIL
    report.records.append(
        {"record": "total", "passed": passed, "failed": failed, "exit_code": report.exit_code}
    )
    report.wall_time_s = time.perf_counter() - t0
    return report


def parse_band(text: str | Sequence[float]) -> PolyaBand:
    if isinstance(text, str):
        try:
            vals = [float(x) for x in text.split(",")]
        except ValueError as exc:
            raise UsageError(f"bad band {text!r}") from exc
    else:
        vals = [float(x) for x in text]
    if len(vals) != 4:
        raise UsageError("band needs four values m1^2,M1^2,m2^2,M2^2")
    try:
        band = PolyaBand(*vals)
    except (HypothesisViolation, ValueError) as exc:
        raise UsageError(str(exc)) from exc
    if not band.has_gap:
        raise UsageError("sharpness search needs M1 < m2 or M2 < m1")
    return band


def run_search(
    band: PolyaBand | str | Sequence[float],
    budget: int,
    seed: int,
    dim: int = 2,
    restarts: int = 8,
    workers: int = 1,
) -> Report:
    """Wrap :func:`~posmap_ineq.sharpness.search_sharpness` in a report."""
    if not isinstance(band, PolyaBand):
        band = parse_band(band)
    if budget < 1:
        raise UsageError("budget must be at least 1")
    t0 = time.perf_counter()
    state = search_sharpness(band, budget, seed, dim=dim, restarts=restarts, workers=workers)
    report = Report("search", search=state)
    rec = state.to_record()
    report.records.append({
        "record": "search",
        "band": band.to_dict(),
        "budget": budget,
        "seed": seed,
        "best_ratio": state.best_ratio,
        "exceeds_bound": state.exceeds_bound,
        "witness_instance": rec["witness_instance"],
        "ratio_trace": rec["ratio_trace"],
        "map_family": "compression (catalog only)",
        "seed_lineage": rec["seed_lineage"],
        "config": rec["config"],
        "violating_evaluations": state.violating_evaluations,
        "violations": len(state.violations),
    })
    report.exit_code = EXIT_FAIL if state.exceeds_bound else EXIT_OK
    report.wall_time_s = time.perf_counter() - t0
    return report


def merge_searches(reports: Sequence[Report]) -> dict:
    """Max-merge of independent search reports: the highest ratio wins, lowest seed on ties."""
    recs = [r.records[0] for r in reports]
    best = max(recs, key=lambda r: (r["best_ratio"], -r["seed"]))
    return {
        "record": "search_merge",
        "seeds": [r["seed"] for r in recs],
        "best_ratio": best["best_ratio"],
        "best_seed": best["seed"],
        "exceeds_bound": any(r["exceeds_bound"] for r in recs),
    }


# --------------------------------------------------------------------------
# instance files
# --------------------------------------------------------------------------


def write_corpus(instances: Sequence[Instance], path: str | Path) -> None:
    with open(path, "w") as fh:
        for inst in instances:
            fh.write(json.dumps(inst.to_record(), sort_keys=True) + "\n")


def read_corpus(path: str | Path) -> list[Instance]:
    out = []
    with open(path) as fh:
        for line in fh:
            if line.strip():
                out.append(Instance.from_dict(json.loads(line)))
    return out


def describe_instance(inst: Instance) -> str:
    np.set_printoptions(precision=6, suppress=True)
    phi = inst.phi.to_dict()["kind"] if inst.phi is not None else "identity"
    band = inst.band.to_dict() if inst.band is not None else None
    parts = [
        f"instance {inst.digest}  seed={inst.seed}  dim={inst.A.dim}",
        f"  map: {phi}   nu={inst.nu}   p={inst.p}",
        f"  band: {band}",
        f"  params: {inst.params}",
        f"  A =\n{np.array2string(inst.A.array, prefix='    ')}",
        f"  eig(A) = {eigvals_sym(inst.A)}",
        f"  B =\n{np.array2string(inst.B.array, prefix='    ')}",
        f"  eig(B) = {eigvals_sym(inst.B)}",
    ]
    return "\n".join(parts)


# --------------------------------------------------------------------------
# command line
# --------------------------------------------------------------------------

_CONFIG_KEYS = ("seed", "dims", "count", "theorems", "tolerance", "out", "format", "budget",
                "band", "rounds", "workers", "restarts", "dim", "timing", "seeds")


def _int_list(text: str) -> list[int]:
    try:
        return [int(x) for x in str(text).split(",") if x.strip()]
    except ValueError as exc:
        raise UsageError(f"bad integer list {text!r}") from exc


def _add_common(p: argparse.ArgumentParser) -> None:
    p.add_argument("--config", help="JSON file with default values for any flag")
    p.add_argument("--seed", type=int, default=None)
    p.add_argument("--out", default=None, help="write the report here instead of stdout")
    p.add_argument("--format", choices=("ldo", "csv"), default=None)
    p.add_argument("--timing", action="store_true", default=None,
                   help="include wall time in the report (breaks byte-identity)")


def _add_suite(p: argparse.ArgumentParser) -> None:
    p.add_argument("--dims", default=None, help="comma-separated dimensions, e.g. 2,3")
    p.add_argument("--count", type=int, default=None)
    p.add_argument("--theorems", default=None, help="comma-separated ids or 'all'")
    p.add_argument("--tolerance", type=float, default=None)
    p.add_argument("--workers", type=int, default=None)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="posmap-ineq",
        description="Numerically verify operator inequalities for positive linear maps.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("repro", help="reproduce the worked examples")
    _add_common(p)

    p = sub.add_parser("verify", help="run the seeded verification suite")
    _add_common(p)
    _add_suite(p)
    p.add_argument("--corpus", default=None, help="also write generated instances here")

    p = sub.add_parser("fuzz", help="repeat the suite with rotating seeds")
    _add_common(p)
    _add_suite(p)
    p.add_argument("--rounds", type=int, default=None, help="0 runs until interrupted")

    p = sub.add_parser("sharpness", help="search for near-tight refined Polya-Szego instances")
    _add_common(p)
    p.add_argument("--budget", type=int, default=None)
    p.add_argument("--band", default=None, help="m1^2,M1^2,m2^2,M2^2 (default: example 1)")
    p.add_argument("--seeds", default=None, help="comma-separated seeds; reports are max-merged")
    p.add_argument("--dim", type=int, default=None)
    p.add_argument("--restarts", type=int, default=None)
    p.add_argument("--workers", type=int, default=None)

    p = sub.add_parser("show", help="pretty-print an instance file")
    p.add_argument("path")
    return parser


def _settings(args: argparse.Namespace) -> dict[str, Any]:
    conf: dict[str, Any] = {}
    if getattr(args, "config", None):
        try:
            conf = json.loads(Path(args.config).read_text())
        except (OSError, json.JSONDecodeError) as exc:
            raise UsageError(f"cannot read config file: {exc}") from exc
        if not isinstance(conf, dict):
            raise UsageError("config file must hold a JSON object")
        unknown = set(conf) - set(_CONFIG_KEYS)
        if unknown:
            raise UsageError(f"unknown config keys: {sorted(unknown)}")
    merged = dict(conf)
    for key in _CONFIG_KEYS:
        val = getattr(args, key, None)
        if val is not None:
            merged[key] = val
    return merged


def _suite_config(s: dict, seed: int | None = None) -> SuiteConfig:
    theorems = s.get("theorems", "all")
    if isinstance(theorems, str):
        theorems = list(CHECKERS) if theorems == "all" else [t for t in theorems.split(",") if t]
    dims = s.get("dims", list(DEFAULT_DIMS))
    if isinstance(dims, str):
        dims = _int_list(dims)
    return SuiteConfig(
        theorem_ids=list(theorems),
        instance_count=int(s.get("count", 100)),
        dims=[int(d) for d in dims],
        seed=int(s.get("seed", 0) if seed is None else seed),
        tolerance=s.get("tolerance"),
        workers=int(s.get("workers", 1)),
    )


def _emit(text: str, out: str | None) -> None:
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code) if exc.code is not None else EXIT_USAGE
    logging.basicConfig(level=logging.WARNING, format="%(levelname)s %(name)s: %(message)s")
    try:
        return _dispatch(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


def _dispatch(args: argparse.Namespace) -> int:
    if args.command == "show":
        try:
            instances = read_corpus(args.path)
        except (OSError, ValueError, KeyError) as exc:
            raise UsageError(f"cannot read instance file: {exc}") from exc
        print("\n\n".join(describe_instance(i) for i in instances))
        return EXIT_OK

    s = _settings(args)
    fmt = s.get("format", "ldo")
    timing = bool(s.get("timing", False))

    if args.command == "repro":
        report = run_repro()
        _emit(report.render(fmt, timing), s.get("out"))
        return report.exit_code

    if args.command == "verify":
        cfg = _suite_config(s)
        report = run_suite(cfg)
        if args.corpus:
            write_corpus(_suite_instances(cfg), args.corpus)
        _emit(report.render(fmt, timing), s.get("out"))
        return report.exit_code

    if args.command == "fuzz":
        base = _suite_config(s)
        rounds = int(s.get("rounds", 10))
        if rounds < 0:
            raise UsageError("rounds must be non-negative")
        worst = EXIT_OK
        chunks = []
        k = 0
        try:
            while rounds == 0 or k < rounds:
                cfg = _suite_config(s, seed=(base.seed + k) % 2**64)
                report = run_suite(cfg)
                worst = max(worst, report.exit_code)
                text = report.render(fmt, timing)
                if s.get("out"):
                    chunks.append(text)
                else:
                    sys.stdout.write(text)
                    sys.stdout.flush()
                k += 1
        except KeyboardInterrupt:
            pass
        if s.get("out"):
            _emit("".join(chunks), s.get("out"))
        return worst

    if args.command == "sharpness":
        budget = int(s.get("budget", 10_000))
        if budget < 1:
            raise UsageError("budget must be at least 1")
        band = s.get("band", list(EXAMPLE1["band"]))
        seeds = _int_list(s["seeds"]) if s.get("seeds") else [int(s.get("seed", 0))]
        reports = [
            run_search(band, budget, sd, dim=int(s.get("dim", 2)),
                       restarts=int(s.get("restarts", 8)), workers=int(s.get("workers", 1)))
            for sd in seeds
        ]
        text = "".join(r.render(fmt, timing) for r in reports)
        if len(reports) > 1 and fmt == "ldo":
            text += json.dumps(merge_searches(reports), sort_keys=True) + "\n"
        _emit(text, s.get("out"))
        return max(r.exit_code for r in reports)

    raise UsageError(f"unknown command {args.command!r}")


def _suite_instances(cfg: SuiteConfig) -> list[Instance]:
    out = []
    for tid in sorted(cfg.theorem_ids):
        spec = CHECKERS[tid]
        for i in range(cfg.instance_count):
            out.append(suite_instance(spec.instance_kind, cfg.dims[i % len(cfg.dims)], cfg.seed,
                                      i, spec.min_p))
    return out


if __name__ == "__main__":
    sys.exit(main())
