"""Command line front-end.

    hopfcyc run --example zoo:trivial --suite all
    hopfcyc run data.json --suite galois --max-degree 3 --format json --out report.json
    hopfcyc describe zoo:K2

Exit status: 0 all selected checks pass, 1 some check fails, 2 bad input.
"""

from __future__ import annotations

import argparse
import os
import sys
import time
from dataclasses import dataclass, field

from . import __version__
from .serialize import SchemaError, algebra_from_json, dumps, hopf_from_json, load
from .suites import SUITES, run_example
from .zoo import REGISTRY, Example, UnknownName, algebra_example, example, hopf_example

DEFAULT_MAX_DEGREE = 4


@dataclass
class RunConfig:
    inputs: list = field(default_factory=list)
    examples: list = field(default_factory=list)
    suites: tuple = SUITES
    max_degree: int = DEFAULT_MAX_DEGREE
    fmt: str = "table"
    out: str | None = None

    def __post_init__(self):
        if self.max_degree < 1:
            raise SchemaError("max_degree must be at least 1")
        bad = [s for s in self.suites if s not in SUITES]
        if bad:
            raise SchemaError(f"unknown suite(s) {bad}")


class InputRejected(ValueError):
    """Well-formed input whose data fails verification before any suite can run."""

    def __init__(self, name: str, result: dict):
        super().__init__(f"{name}: {result.get('message') or result['violations'][0]['check']}")
        self.name, self.result = name, result


def example_from_document(doc, origin: str) -> Example:
    """``{"kind": "hopf", ...}`` or ``{"kind": "algebra", "algebra": {...}, "units": [...]}``.

    Parse problems raise :class:`SchemaError`; data that parses but fails its
    axioms raises :class:`InputRejected`.
    """
    if not isinstance(doc, dict):
        raise SchemaError("top level must be an object", "$")
    kind = doc.get("kind")
    name = doc.get("name", origin)
    if kind not in ("hopf", "algebra"):
        raise SchemaError(f"kind must be 'hopf' or 'algebra', got {kind!r}", "$.kind")
    try:
        if kind == "hopf":
            H = hopf_from_json(doc, "$", name)
            rep = H.check()
            if not rep.ok:
                raise InputRejected(name, rep.to_json())
            return hopf_example(H, name)
        R = algebra_from_json(doc.get("algebra"), "$.algebra", name)
        units = doc.get("units")
        if units is not None:
            from .serialize import _vector
            units = [_vector(u, R.dim, f"$.units[{i}]") for i, u in enumerate(units)]
        return algebra_example(R, name, units)
    except (SchemaError, InputRejected):
        raise
    except ValueError as exc:  # parsed, but the data fails a construction check
        w = getattr(exc, "witness", None)
        raise InputRejected(name, {"ok": False, "error": type(exc).__name__, "message": str(exc),
                                   "witness": list(w) if isinstance(w, tuple) else w}) from None


def run(cfg: RunConfig) -> tuple[dict, int]:
    exs = [example(n) for n in cfg.examples]
    results, timing = [], {}
    for p in cfg.inputs:
        try:
            exs.append(example_from_document(load(p), str(p)))
        except InputRejected as exc:
            results.append({"name": exc.name, "ok": False, "input": exc.result, "suites": {}})
    for ex in exs:
        t0 = time.perf_counter()
        res, times = run_example(ex, cfg.suites, cfg.max_degree)
        results.append(res)
        timing[ex.name] = {"suites": times, "total": round(time.perf_counter() - t0, 4)}
    report = {"version": __version__, "max_degree": cfg.max_degree, "suites": list(cfg.suites),
              "examples": results, "ok": all(r["ok"] for r in results), "timing": timing}
    return report, 0 if report["ok"] else 1


def render_table(report: dict) -> str:
    lines = []
    for r in report["examples"]:
        lines.append(f"== {r['name']}  {'PASS' if r['ok'] else 'FAIL'}")
        if "input" in r:
            lines.append(f"  input rejected: {_describe_failure({'axioms': r['input']} if 'violations' in r['input'] else r['input'])}")
        for s, v in r["suites"].items():
            lines.append(f"  {s:<12} {'pass' if v['ok'] else 'FAIL'}  ({len(v['objects'])} object(s))")
            for o in v["objects"]:
                if not o["ok"]:
                    lines.append(f"    failing: {_describe_failure(o)}")
                if s == "complexes" and o.get("homology"):
                    hc = o["homology"]["HC"]
                    lines.append(f"    HC {o.get('algebra') or o.get('hopf')} / {o['coefficients']}: "
                                 + ",".join(str(hc[k]) for k in sorted(hc, key=int)))
                if s == "galois" and o.get("galois"):
                    for c in o["coefficients"]:
                        om = c.get("omega", {})
                        lines.append(f"    omega {c['name']}: iso={om.get('iso')} chain_map={om.get('chain_map')}"
                                     f" up_to={om.get('up_to')}")
    lines.append(f"overall: {'PASS' if report['ok'] else 'FAIL'}")
    return "\n".join(lines) + "\n"


def _describe_failure(o: dict) -> str:
    if "error" in o:
        return f"{o['error']}: {o['message']}"
    for key in ("axioms", "translation", "ayd", "cocyclic", "cyclic"):
        sub = o.get(key)
        if isinstance(sub, dict) and not sub.get("ok", True):
            v = sub["violations"][0]
            return f"{key}: {v['check']} at {v['witness']}"
    return ", ".join(k for k, v in o.items() if v is False) or "see JSON report"


def _max_degree_default() -> int:
    env = os.environ.get("HOPFCYC_MAX_DEGREE")
    if env is None:
        return DEFAULT_MAX_DEGREE
    try:
        return int(env)
    except ValueError:
        raise SchemaError(f"HOPFCYC_MAX_DEGREE={env!r} is not an integer") from None


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="hopfcyc", description="Verify x-Hopf algebra data and compute cyclic homology.")
    p.add_argument("--version", action="version", version=__version__)
    sub = p.add_subparsers(dest="cmd", required=True)
    r = sub.add_parser("run", help="run verification suites")
    r.add_argument("inputs", nargs="*", help="JSON definitions (kind 'hopf' or 'algebra')")
    r.add_argument("--example", action="append", default=[], help="registered example, e.g. zoo:crossed-z2")
    r.add_argument("--suite", default="all", choices=SUITES + ("all",))
    r.add_argument("--max-degree", type=int, default=None)
    r.add_argument("--format", default="table", choices=("table", "json"))
    r.add_argument("--out", default=None, help="write the JSON report here")
    d = sub.add_parser("describe", help="summarize a registered example")
    d.add_argument("name")
    sub.add_parser("list", help="list registered examples")
    return p


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:  # argparse uses 2 for usage errors already
        return int(exc.code or 0)
    try:
        if args.cmd == "list":
            print("\n".join(REGISTRY))
            return 0
        if args.cmd == "describe":
            print("\n".join(example(args.name).summary()))
            return 0
        if not args.inputs and not args.example:
            raise SchemaError("nothing to run: give input files or --example")
        cfg = RunConfig(inputs=args.inputs, examples=args.example,
                        suites=SUITES if args.suite == "all" else (args.suite,),
                        max_degree=args.max_degree if args.max_degree is not None else _max_degree_default(),
                        fmt=args.format, out=args.out)
        report, status = run(cfg)
    except UnknownName as exc:
        print(f"hopfcyc: unknown example {exc.args[0]!r}; known: {', '.join(REGISTRY)}", file=sys.stderr)
        return 2
    except SchemaError as exc:
        print(f"hopfcyc: {exc}", file=sys.stderr)
        return 2
    if cfg.out:
        with open(cfg.out, "w") as fh:
            fh.write(dumps(report))
    if cfg.fmt == "json":
        if not cfg.out:
            sys.stdout.write(dumps(report))
    else:
        sys.stdout.write(render_table(report))
    return status


if __name__ == "__main__":
    sys.exit(main())
