"""Batch front-end: read a run configuration, drive the library, emit reports.

One JSON config in, one JSON report out; the exit status is 0 exactly when
every certification in the report passed.  Reports are deterministic: the
certified payload carries no timestamps and keys are sorted.
"""
from __future__ import annotations

import argparse
import concurrent.futures
import json
import os
import sys
from dataclasses import dataclass, field

from . import fuchs as fuchs_mod
from . import serialize as ser
from .errors import ConfigParseError, PVI6Error
from .painleve import (
    FamilySpec,
    PVIParams,
    check_truncated_solution,
    closed_form_correspondence,
    grade0_linear_operator,
    linearized_reference_forms,
    pvi_diffsum,
)
from .polygon import build_polygon
from .recursion import (
    expand,
    head_factors,
    rationality_certificate,
    residual_orders,
)
from .scalars import GaussianRational, Rat

TASKS = ("verify", "expand", "polygon", "fuchs", "rationality")


@dataclass
class RunConfig:
    family: str
    a: GaussianRational
    b: GaussianRational
    c: GaussianRational
    d: GaussianRational
    theta: object = None
    K: int = 4
    J: int = 24
    max_deg: int = 12
    tasks: tuple = ("verify",)

    @classmethod
    def from_dict(cls, raw: dict) -> RunConfig:
        try:
            fam = raw["family"]
            scal = {}
            for name in "abcd":
                scal[name] = GaussianRational.from_string(str(raw[name]))
            theta = raw.get("theta")
            if theta is not None:
                theta = Rat(str(theta))
            k = int(raw.get("K", 4))
            j = int(raw.get("J", 24))
            md = int(raw.get("max_deg", 12))
            if k < 0 or j < 0 or md < 0:
                raise ValueError("K, J, max_deg must be non-negative")
            tasks = tuple(raw.get("tasks", ["verify"]))
            for t in tasks:
                if t not in TASKS:
                    raise ValueError(f"unknown task {t!r}")
        except ConfigParseError:
            raise
        except (KeyError, ValueError, ZeroDivisionError, TypeError) as exc:
            raise ConfigParseError(f"bad config: {exc}") from exc
        return cls(
            family=fam,
            a=scal["a"],
            b=scal["b"],
            c=scal["c"],
            d=scal["d"],
            theta=theta,
            K=k,
            J=j,
            max_deg=md,
            tasks=tasks,
        )

    def family_spec(self) -> FamilySpec:
        try:
            return FamilySpec(self.family, theta=self.theta)
        except PVI6Error as exc:
            raise ConfigParseError(str(exc)) from exc

    def params(self) -> PVIParams:
        return PVIParams(self.a, self.b, self.c, self.d)

    def echo(self) -> dict:
        return {
            "family": self.family,
            "a": str(self.a),
            "b": str(self.b),
            "c": str(self.c),
            "d": str(self.d),
            "theta": None if self.theta is None else str(self.theta),
            "K": self.K,
            "J": self.J,
            "max_deg": self.max_deg,
            "tasks": list(self.tasks),
        }


def run(config: RunConfig, out_path: str | None = None) -> tuple[int, dict]:
    """Execute the requested tasks in dependency order; returns (exit, report)."""
    fam = config.family_spec()
    params = config.params()
    results: dict = {}
    certs: dict = {}
    tasks = list(dict.fromkeys(config.tasks))

    state = None

    def ensure_state(K: int):
        nonlocal state
        if state is None or state.K < K:
            state = expand(fam, params, K, config.J)
        return state

    for task in TASKS:
        if task not in tasks:
            continue
        if task == "verify":
            rep = check_truncated_solution(fam, params)
            ops = grade0_linear_operator(fam, params)
            refs = linearized_reference_forms(fam, params)
            lin_ok = all(a == b for a, b in zip(ops, refs))
            rep["linearization_matches_closed_forms"] = lin_ok
            if fam.name in ("B1", "B2", "B6", "B7"):
                corr = closed_form_correspondence(fam, params)
                rep["closed_form_matches"] = corr["matches"]
                rep["closed_form_lam"] = str(corr["lam"])
                rep["closed_form_sign"] = corr["sign"]
                certs["closed_form"] = corr["matches"]
            results["verify"] = rep
            certs["truncation"] = rep["residual_zero"]
            certs["linearization"] = lin_ok
        elif task == "expand":
            st = ensure_state(config.K)
            audit = residual_orders(st)
            results["expand"] = {
                "coefficients": [ser.series_dict(c) for c in st.coefficients],
                "head_factors": [str(h) for h in head_factors(st)],
                "head_polynomials": [
                    [str(v) for v in eqn.head_values()] for eqn in st.equations
                ],
                "residual_audit": audit,
            }
            certs["residual_audit"] = all(r["ok"] for r in audit)
        elif task == "polygon":
            st = ensure_state(max(1, min(config.K, 1)))
            g = pvi_diffsum(params, fam.variable_kind())
            full_poly = build_polygon(g.support())
            op = fuchs_mod.normalized_equation(st, 1)
            op_poly = build_polygon(fuchs_mod.operator_support(op))
            entry = {
                "full_sum": ser.polygon_dict(full_poly),
                "first_order_operator": ser.polygon_dict(op_poly),
            }
            if fam.is_exotic():
                shifted = {}
                for rpt in fuchs_mod.singular_points(op):
                    if rpt.point == fuchs_mod.INFINITY or (
                        not hasattr(rpt.point, "ext")
                        and rpt.point.is_zero()
                    ):
                        continue
                    sh = fuchs_mod.shift_operator(op, rpt.point)
                    key = f"mult{rpt.multiplicity}"
                    if key not in shifted:
                        shifted[key] = ser.polygon_dict(
                            build_polygon(fuchs_mod.operator_support(sh))
                        )
                entry["shifted"] = shifted
            results["polygon"] = entry
        elif task == "fuchs":
            st = ensure_state(max(1, min(config.K, 1)))
            per_k = {}
            upto = max(1, config.K)
            for k in range(1, upto + 1):
                op = fuchs_mod.normalized_equation(st, k)
                shapes = fuchs_mod.local_shape_report(op)
                per_k[str(k)] = {
                    "operator_degrees": {
                        "c2": op.c2.degree(),
                        "c1": op.c1.degree(),
                        "c0": op.c0.degree(),
                    },
                    "points": [ser.singular_report_dict(r) for r in shapes],
                    "fuchsian_at_zero": fuchs_mod.fuchsian_at(
                        op, GaussianRational(0)
                    ),
                    "fuchsian_at_infinity": fuchs_mod.fuchsian_at(
                        op, fuchs_mod.INFINITY
                    ),
                }
            results["fuchs"] = per_k
        elif task == "rationality":
            st = ensure_state(config.K)
            entries = {}
            ok = True
            for k in range(1, config.K + 1):
                cert = rationality_certificate(st, k, config.max_deg)
                if cert is None:
                    entries[str(k)] = None
                    ok = False
                else:
                    entries[str(k)] = ser.ratfunc_dict(cert)
            results["rationality"] = entries
            certs["rationality"] = ok

    report = {
        "schema": 1,
        "config": config.echo(),
        "results": results,
        "certifications": certs,
        "ok": all(certs.values()) if certs else True,
        "meta": {"package": "pvi6", "version": "1.0.0"},
    }
    if out_path:
        with open(out_path, "w") as fh:
            json.dump(report, fh, indent=2, sort_keys=True)
            fh.write("\n")
    return (0 if report["ok"] else 1), report


def _run_config_file(path: str, out_path: str | None, overrides: dict) -> int:
    with open(path) as fh:
        try:
            raw = json.load(fh)
        except json.JSONDecodeError as exc:
            raise ConfigParseError(f"invalid JSON in {path}: {exc}") from exc
    raw.update({k: v for k, v in overrides.items() if v is not None})
    config = RunConfig.from_dict(raw)
    code, report = run(config, out_path)
    summary = {k: v for k, v in report["certifications"].items()}
    print(f"{path}: {'OK' if code == 0 else 'FAIL'} {summary}")
    return code


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(
        prog="pvi",
        description=(
            "Exact engine for the complicated and exotic expansions of the "
            "sixth Painleve equation"
        ),
    )
    sub = parser.add_subparsers(dest="task", required=True)
    for t in TASKS:
        sp = sub.add_parser(t, help=f"run the {t} task")
        sp.add_argument("config", nargs="?", help="JSON config file")
        sp.add_argument("--out", help="report output path")
        sp.add_argument("--task", action="append", dest="extra_tasks", default=[])
        sp.add_argument("--K", type=int, default=None)
        sp.add_argument("--J", type=int, default=None)
        sp.add_argument("--max-deg", type=int, default=None)
        sp.add_argument("--batch", help="directory of config files")
    args = parser.parse_args(argv)

    overrides = {
        "K": args.K,
        "J": args.J,
        "max_deg": args.max_deg,
        "tasks": [args.task] + list(args.extra_tasks),
    }
    try:
        if args.batch:
            paths = sorted(
                os.path.join(args.batch, f)
                for f in os.listdir(args.batch)
                if f.endswith(".json")
            )
            codes = []
            with concurrent.futures.ProcessPoolExecutor() as pool:
                futs = {
                    pool.submit(
                        _run_config_file,
                        p,
                        os.path.splitext(p)[0] + ".report.json",
                        overrides,
                    ): p
                    for p in paths
                }
                for fut in concurrent.futures.as_completed(futs):
                    codes.append(fut.result())
            return 0 if all(c == 0 for c in codes) else 1
        if not args.config:
            parser.error("a config file (or --batch) is required")
        return _run_config_file(args.config, args.out, overrides)
    except ConfigParseError as exc:
        print(f"config error: {exc}", file=sys.stderr)
        return 2
    except PVI6Error as exc:
        print(f"error [{type(exc).__name__}]: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
