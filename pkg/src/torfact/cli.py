"""Command-line interface.

Usage:
    torfact make pn 2
    torfact make product 1,2,3 [--name NAME]
    torfact make hirzebruch 1
    torfact validate FILE
    torfact complete FILE
    torfact skeleton FILE
    torfact roots FILE [--format json]
    torfact decompose FILE
    torfact classify FILE

Fans travel as JSON objects
    {"rank": n, "rays": [[...], ...], "maximal_cones": [[...], ...], "name": "..."}
with 0-based ray indices; `make` emits them and every other sub-command
accepts them, from a path or from stdin when FILE is `-`. Exit status: 0 for
success and affirmative verdicts, 1 for negative verdicts (not complete, not
semisimple), 2 for unparseable input or fan-axiom violations.
"""

from __future__ import annotations

import argparse
import json
import sys

from .decompose import factorize
from .demazure import NOT_SEMISIMPLE, PRODUCT_OF_PROJECTIVE_SPACES, classify, demazure_roots
from .errors import GeometryError, InvalidParameter
from .fan import Fan, fan_new, hirzebruch_fan, product_fan, projective_space_fan


def fan_to_dict(fan: Fan, name: str | None = None) -> dict:
    """Canonical file form: rays sorted, cones as sorted index lists, sorted."""
    rays = list(fan.skeleton)
    index = {r: i for i, r in enumerate(rays)}
    cones = sorted(sorted(index[r] for r in c.rays) for c in fan.maximal_cones)
    payload = {
        "rank": fan.ambient_rank,
        "rays": [list(r) for r in rays],
        "maximal_cones": cones,
    }
    if name is not None:
        payload["name"] = name
    return payload


def fan_to_json(fan: Fan, name: str | None = None) -> str:
    payload = fan_to_dict(fan, name)
    rays = ", ".join(_compact(r) for r in payload["rays"])
    cones = ", ".join(_compact(c) for c in payload["maximal_cones"])
    lines = [
        "{",
        f'  "rank": {payload["rank"]},',
        f'  "rays": [{rays}],',
        f'  "maximal_cones": [{cones}]' + ("," if "name" in payload else ""),
    ]
    if "name" in payload:
        lines.append(f'  "name": {json.dumps(payload["name"])}')
    lines.append("}")
    return "\n".join(lines) + "\n"


def parse_fan_dict(payload) -> tuple[Fan, str | None]:
    if not isinstance(payload, dict):
        raise InvalidParameter("fan file must be a JSON object")
    for key in ("rank", "rays", "maximal_cones"):
        if key not in payload:
            raise InvalidParameter(f"fan file is missing the field {key!r}")
    rank_ = payload["rank"]
    rays = payload["rays"]
    cones = payload["maximal_cones"]
    if not isinstance(rank_, int):
        raise InvalidParameter("field 'rank' must be an integer")
    if not isinstance(rays, list) or not all(
        isinstance(r, list) and all(isinstance(x, int) for x in r) for r in rays
    ):
        raise InvalidParameter("field 'rays' must be a list of integer vectors")
    if not isinstance(cones, list) or not all(
        isinstance(c, list) and all(isinstance(i, int) for i in c) for c in cones
    ):
        raise InvalidParameter("field 'maximal_cones' must be a list of index lists")
    name = payload.get("name")
    if name is not None and not isinstance(name, str):
        raise InvalidParameter("field 'name' must be a string")
    return fan_new(rank_, [tuple(r) for r in rays], cones), name


def _read_fan(path: str) -> tuple[Fan, str | None]:
    text = sys.stdin.read() if path == "-" else open(path, encoding="utf-8").read()
    try:
        payload = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InvalidParameter(f"not valid JSON: {exc}") from exc
    return parse_fan_dict(payload)


def _compact(value) -> str:
    return json.dumps(value, separators=(",", ":"))


def _cmd_make(args) -> tuple[dict, str, int]:
    if args.family == "pn":
        fan = projective_space_fan(_parse_int(args.parameter))
    elif args.family == "product":
        dims = [_parse_int(p) for p in args.parameter.split(",") if p != ""]
        fan = product_fan(dims)
    elif args.family == "hirzebruch":
        fan = hirzebruch_fan(_parse_int(args.parameter))
    else:  # unreachable through argparse choices
        raise InvalidParameter(f"unknown family {args.family!r}")
    text = fan_to_json(fan, args.name)
    report = {"command": "make", "fan": fan_to_dict(fan, args.name), "exit_code": 0}
    return report, text, 0


def _parse_int(text: str) -> int:
    try:
        return int(text)
    except ValueError as exc:
        raise InvalidParameter(f"expected an integer, got {text!r}") from exc


def _cmd_validate(fan: Fan, name) -> tuple[dict, str, int]:
    report = {
        "command": "validate",
        "valid": True,
        "rank": fan.ambient_rank,
        "rays": len(fan.skeleton),
        "maximal_cones": len(fan.maximal_cones),
        "cones": len(fan.cones()),
        "exit_code": 0,
    }
    text = (
        f"valid: true\nrank: {fan.ambient_rank}\nrays: {len(fan.skeleton)}\n"
        f"maximal_cones: {len(fan.maximal_cones)}\ncones: {len(fan.cones())}\n"
    )
    return report, text, 0


def _cmd_complete(fan: Fan, name) -> tuple[dict, str, int]:
    verdict = fan.is_complete()
    code = 0 if verdict else 1
    report = {"command": "complete", "complete": verdict, "exit_code": code}
    return report, f"complete: {'true' if verdict else 'false'}\n", code


def _cmd_skeleton(fan: Fan, name) -> tuple[dict, str, int]:
    rays = [list(r) for r in fan.skeleton]
    report = {
        "command": "skeleton",
        "rank": fan.ambient_rank,
        "count": len(rays),
        "rays": rays,
        "exit_code": 0,
    }
    lines = [f"skeleton: {len(rays)} rays"] + [_compact(r) for r in rays]
    return report, "\n".join(lines) + "\n", 0


def _cmd_roots(fan: Fan, name) -> tuple[dict, str, int]:
    root_set = demazure_roots(fan)
    entries = [
        {"alpha": list(r.alpha), "ray": list(r.distinguished_ray)} for r in root_set
    ]
    report = {
        "command": "roots",
        "count": len(entries),
        "roots": entries,
        "exit_code": 0,
    }
    lines = [f"roots: {len(entries)}"]
    for r in root_set:
        lines.append(f"alpha {_compact(list(r.alpha))} ray {_compact(list(r.distinguished_ray))}")
    return report, "\n".join(lines) + "\n", 0


def _cmd_decompose(fan: Fan, name) -> tuple[dict, str, int]:
    factorization = factorize(fan)
    dims = [f.ambient_rank for f in factorization.factors]
    blocks = [[list(r) for r in block] for block in factorization.partition.blocks]
    report = {
        "command": "decompose",
        "factors": len(dims),
        "dims": dims,
        "lattice_index": factorization.lattice_index,
        "real_split_only": factorization.real_split_only,
        "blocks": blocks,
        "exit_code": 0,
    }
    lines = [
        f"factors: {len(dims)}",
        f"dims: {_compact(dims)}",
        f"lattice_index: {factorization.lattice_index}",
    ]
    if factorization.real_split_only:
        lines.append("real_split_only: true")
    for i, block in enumerate(blocks):
        lines.append(f"block {i}: {_compact(block)}")
    return report, "\n".join(lines) + "\n", 0


def _cmd_classify(fan: Fan, name) -> tuple[dict, str, int]:
    outcome = classify(fan)
    code = 0 if outcome.verdict == PRODUCT_OF_PROJECTIVE_SPACES else 1
    report = {
        "command": "classify",
        "verdict": outcome.verdict,
        "dims": list(outcome.dims) if outcome.dims is not None else None,
        "roots": outcome.root_count,
        "exit_code": code,
    }
    if outcome.verdict == NOT_SEMISIMPLE:
        report["asymmetric_roots"] = [list(a) for a in outcome.evidence["asymmetric_roots"]]
    if outcome.verdict == PRODUCT_OF_PROJECTIVE_SPACES:
        first = f"{outcome.verdict}: {_compact(list(outcome.dims))}"
    else:
        first = outcome.verdict
    text = first + f"\nroots: {outcome.root_count}\n"
    return report, text, code


_COMMANDS = {
    "validate": _cmd_validate,
    "complete": _cmd_complete,
    "skeleton": _cmd_skeleton,
    "roots": _cmd_roots,
    "decompose": _cmd_decompose,
    "classify": _cmd_classify,
}


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="torfact",
        description="Exact computations with rational polyhedral fans: "
        "validation, completeness, Demazure roots, factorization, and "
        "recognition of products of projective spaces.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    make = sub.add_parser("make", help="emit a builtin fan as JSON")
    make.add_argument("family", choices=["pn", "product", "hirzebruch"])
    make.add_argument("parameter", help="dimension, comma list of dimensions, or parameter")
    make.add_argument("--name", default=None)

    for command in _COMMANDS:
        p = sub.add_parser(command, help=f"run {command} on a fan file")
        p.add_argument("fan_file", metavar="FILE", help="path to a fan file, or - for stdin")
        p.add_argument("--format", choices=["text", "json"], default="text")
    return parser


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        if args.command == "make":
            report, text, code = _cmd_make(args)
            sys.stdout.write(text)
            return code
        fan, name = _read_fan(args.fan_file)
        report, text, code = _COMMANDS[args.command](fan, name)
    except GeometryError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 2
    except OSError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 2
    if args.format == "json":
        sys.stdout.write(json.dumps(report, sort_keys=True) + "\n")
    else:
        sys.stdout.write(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
