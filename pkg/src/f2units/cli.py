"""Command-line front end: group ingestion, verification runs, reports.

Exit codes: 0 all checks passed, 1 at least one check failed (the report
carries witnesses), 2 invalid input (bad group spec, violated hypothesis,
bad flags). JSON output is byte-stable across runs and worker counts.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from pathlib import Path

from .algebra import AlgebraElement, render_element
from .catalog import CLASSICAL_ENTRIES, ODOT_ENTRIES
from .decompositions import (
    DecompositionReport,
    verify_inverting_decomposition,
    verify_odot_decomposition,
)
from .errors import F2UnitsError, ParseError
from .groups import (
    GroupTable,
    make_cyclic,
    make_dihedral,
    make_direct_product,
    make_inverting_extension,
    make_quaternion,
)
from .involutions import (
    classical_involution,
    detect_inverting_form,
    make_odot_form,
    odot_involution,
)
from .unitgroup import (
    DEFAULT_EXHAUSTIVE_BOUND,
    canonical_generators,
    enumerate_normalized_units,
    enumerate_unitary,
)


@dataclass
class RunConfig:
    group: GroupTable | None
    involution: str | None
    mode: str
    max_exhaustive_order: int = DEFAULT_EXHAUSTIVE_BOUND
    workers: int | None = None
    fmt: str = "text"
    out: str | None = None
    force_enumeration: bool = False


# ---------------------------------------------------------------------------
# group-spec ingestion


def _build_family(family: str, params: dict) -> GroupTable:
    if family == "cyclic":
        return make_cyclic(int(params["order"]))
    if family == "dihedral":
        return make_dihedral(int(params["order"]))
    if family == "quaternion":
        return make_quaternion(int(params["order"]))
    if family == "direct_product":
        factors = params.get("factors")
        if not isinstance(factors, list) or len(factors) < 2:
            raise ParseError("direct_product needs a list of at least two factor specs")
        gs = [_from_spec_dict(f) for f in factors]
        out = gs[0]
        for nxt in gs[1:]:
            out = make_direct_product(out, nxt)
        return out
    if family == "inverting_extension":
        if "base" in params:
            base = _from_spec_dict(params["base"])
        elif "order" in params:
            base = make_cyclic(int(params["order"]) // 2)
        else:
            raise ParseError("inverting_extension needs a base spec or an order")
        label = params.get("square_element")
        if label is None:
            t = next(
                (
                    i
                    for i in range(1, base.order)
                    if base.mul[i][i] == 0
                ),
                None,
            )
            if t is None:
                raise ParseError("base group has no involution to square onto")
        else:
            try:
                t = base.labels.index(str(label))
            except ValueError:
                raise ParseError(f"unknown element label {label!r} in the base group")
        return make_inverting_extension(base, t)
    raise ParseError(f"unknown family {family!r}")


def _from_spec_dict(spec: dict) -> GroupTable:
    if not isinstance(spec, dict):
        raise ParseError("group spec must be a JSON object")
    if "table" in spec:
        labels = spec.get("labels")
        return GroupTable(spec["table"], labels=labels, family="table")
    if "family" in spec:
        return _build_family(str(spec["family"]), spec.get("params", {}))
    raise ParseError("group spec needs either a 'table' or a 'family' key")


def parse_group_spec(text: str) -> GroupTable:
    """Parse a JSON group spec: {'family':..., 'params':...} or {'table': ...}."""
    try:
        spec = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc}") from exc
    return _from_spec_dict(spec)


def _resolve_group(args) -> GroupTable | None:
    if args.group:
        return parse_group_spec(Path(args.group).read_text())
    if args.family:
        if args.order is None:
            raise ParseError("--family requires --order")
        params: dict = {"order": args.order}
        if args.square_element is not None:
            params["square_element"] = args.square_element
        return _build_family(args.family, params)
    return None


# ---------------------------------------------------------------------------
# modes


def _enumerate_payload(config: RunConfig) -> dict:
    g = config.group
    v = enumerate_normalized_units(
        g, max_order=config.max_exhaustive_order, workers=config.workers
    )
    payload = {
        "schema": 1,
        "mode": "enumerate",
        "group": {"family": g.family, "order": g.order, "spec": g.name},
        "orders": {"normalized_units": v.order},
        "generators": {
            "normalized_units": [
                render_element(AlgebraElement(g, m)) for m in canonical_generators(v)
            ]
        },
        "pass": True,
    }
    if config.involution:
        sigma = _make_sigma(g, config.involution)
        vu = enumerate_unitary(
            g, sigma, max_order=config.max_exhaustive_order, workers=config.workers
        )
        payload["involution"] = config.involution
        payload["orders"]["unitary"] = vu.order
        payload["generators"]["unitary"] = [
            render_element(AlgebraElement(g, m)) for m in canonical_generators(vu)
        ]
    return payload


def _make_sigma(g: GroupTable, name: str):
    if name == "classical":
        return classical_involution(g)
    if name == "odot":
        return odot_involution(make_odot_form(g))
    raise ParseError(f"unknown involution {name!r}")


def _verify_report(config: RunConfig, skip_enumeration: bool) -> DecompositionReport:
    g = config.group
    if config.involution == "classical":
        form = detect_inverting_form(g)
        return verify_inverting_decomposition(
            form,
            max_order=config.max_exhaustive_order,
            workers=config.workers,
            force_enumeration=config.force_enumeration,
            skip_enumeration=skip_enumeration,
        )
    if config.involution == "odot":
        form = make_odot_form(g)
        return verify_odot_decomposition(
            form,
            max_order=config.max_exhaustive_order,
            workers=config.workers,
            force_enumeration=config.force_enumeration,
            skip_enumeration=skip_enumeration,
        )
    raise ParseError("verify/construct modes need --involution classical or odot")


def _catalog_payload(config: RunConfig) -> dict:
    rows = []
    for entry in CLASSICAL_ENTRIES:
        report = verify_inverting_decomposition(
            entry.form(),
            max_order=config.max_exhaustive_order,
            workers=config.workers,
            force_enumeration=config.force_enumeration,
        )
        rows.append({"instance": entry.key, **report.to_json_dict()})
    for entry in ODOT_ENTRIES:
        report = verify_odot_decomposition(
            entry.form(),
            max_order=config.max_exhaustive_order,
            workers=config.workers,
            force_enumeration=config.force_enumeration,
        )
        rows.append({"instance": entry.key, **report.to_json_dict()})
    return {
        "schema": 1,
        "mode": "catalog",
        "reports": rows,
        "pass": all(r["pass"] for r in rows),
    }


# ---------------------------------------------------------------------------
# rendering


def _render_text(payload: dict) -> str:
    lines: list[str] = []
    if payload.get("mode") == "catalog":
        for row in payload["reports"]:
            verdict = "PASS" if row["pass"] else "FAIL"
            orders = row.get("orders", {})
            parts = ", ".join(f"{k}={v}" for k, v in sorted(orders.items()))
            lines.append(f"[{verdict}] {row['instance']} ({row['involution']}): {parts}")
            for check in row["checks"]:
                mark = "ok" if check["pass"] else "FAIL"
                suffix = f"  witness: {check['witness']}" if "witness" in check else ""
                lines.append(f"    {mark:4} {check['name']}{suffix}")
        lines.append("overall: " + ("PASS" if payload["pass"] else "FAIL"))
        return "\n".join(lines) + "\n"
    if payload.get("mode") == "enumerate":
        grp = payload["group"]
        lines.append(f"group {grp['spec']} (order {grp['order']})")
        for key, val in sorted(payload["orders"].items()):
            lines.append(f"  |{key}| = {val}")
        for key, gens in sorted(payload.get("generators", {}).items()):
            lines.append(f"  {key} generators:")
            for s in gens:
                lines.append(f"    {s}")
        return "\n".join(lines) + "\n"
    grp = payload["group"]
    lines.append(
        f"{payload['kind']} decomposition of {grp['spec']} "
        f"(order {grp['order']}) under {payload['involution']}"
    )
    for key, val in sorted(payload["orders"].items()):
        lines.append(f"  {key} = {val}")
    for check in payload["checks"]:
        mark = "ok" if check["pass"] else "FAIL"
        suffix = f"  witness: {check['witness']}" if "witness" in check else ""
        lines.append(f"  {mark:4} {check['name']}{suffix}")
    for note in payload.get("notes", []):
        lines.append(f"  note: {note}")
    lines.append("overall: " + ("PASS" if payload["pass"] else "FAIL"))
    return "\n".join(lines) + "\n"


def _emit(payload: dict, config: RunConfig) -> None:
    if config.fmt == "json":
        text = json.dumps(payload, indent=2, sort_keys=True) + "\n"
    else:
        text = _render_text(payload)
    if config.out:
        Path(config.out).write_text(text)
    else:
        sys.stdout.write(text)


def run(config: RunConfig) -> int:
    """Execute one mode and emit its report; returns the process exit code."""
    try:
        if config.mode == "catalog":
            payload = _catalog_payload(config)
        elif config.mode == "enumerate":
            if config.group is None:
                raise ParseError("enumerate mode needs a group")
            payload = _enumerate_payload(config)
        elif config.mode in ("verify", "construct"):
            if config.group is None:
                raise ParseError(f"{config.mode} mode needs a group")
            report = _verify_report(config, skip_enumeration=config.mode == "construct")
            payload = {"mode": config.mode, **report.to_json_dict()}
        else:
            raise ParseError(f"unknown mode {config.mode!r}")
    except F2UnitsError as exc:
        sys.stderr.write(f"error: {type(exc).__name__}: {exc}\n")
        return 2
    _emit(payload, config)
    return 0 if payload["pass"] else 1


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="f2units",
        description=(
            "Unitary subgroups of group algebras over the two-element field: "
            "exhaustive enumeration and structural decomposition checks"
        ),
    )
    parser.add_argument("--group", help="path to a JSON group spec")
    parser.add_argument(
        "--family",
        choices=["cyclic", "dihedral", "quaternion", "direct_product", "inverting_extension"],
        help="built-in group family",
    )
    parser.add_argument("--order", type=int, help="group order for --family")
    parser.add_argument(
        "--square-element",
        help="label of the base-group element the twist squares to (inverting_extension)",
    )
    parser.add_argument("--involution", choices=["classical", "odot"])
    parser.add_argument(
        "--mode",
        choices=["enumerate", "construct", "verify", "catalog"],
        default="verify",
    )
    parser.add_argument(
        "--max-exhaustive-order",
        type=int,
        default=DEFAULT_EXHAUSTIVE_BOUND,
        help="largest support size enumerated exhaustively (default 16)",
    )
    parser.add_argument(
        "--threads",
        type=int,
        default=None,
        help="worker count (default: F2UNITS_THREADS or the CPU count)",
    )
    parser.add_argument("--format", choices=["json", "text"], default="text")
    parser.add_argument("--out", help="write the report here instead of stdout")
    parser.add_argument(
        "--force-enumeration",
        action="store_true",
        help="run the exhaustive oracle even past the bound (slow)",
    )
    return parser


def main(argv: list[str] | None = None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        group = _resolve_group(args)
    except F2UnitsError as exc:
        sys.stderr.write(f"error: {type(exc).__name__}: {exc}\n")
        return 2
    except OSError as exc:
        sys.stderr.write(f"error: cannot read group spec: {exc}\n")
        return 2
    config = RunConfig(
        group=group,
        involution=args.involution,
        mode=args.mode,
        max_exhaustive_order=args.max_exhaustive_order,
        workers=args.threads,
        fmt=args.format,
        out=args.out,
        force_enumeration=args.force_enumeration,
    )
    return run(config)


if __name__ == "__main__":
    sys.exit(main())
