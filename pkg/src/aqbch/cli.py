"""Command-line interface: construct, verify, sweep, reproduce.

Exit status: 0 ok, 1 verification mismatch, 2 bad input, 3 enumeration cap hit.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from . import tables
from .cyclic import bch_code, cyclic_dual, delta_max, in_length_range
from .errors import CodeError, PreconditionError, ResourceCapError
from .gf import ord_n_q
from .quantum import (
    SCHEMA,
    aqec_bch_family,
    aqec_rs,
    asymmetric_subsystem,
    css_qec,
    cyclic_subsystem_from_T,
    euclidean_subsystem,
    hit_cap,
    rs_pairs,
    subsystem_bch_designed,
    subsystem_bch_hermitian_params,
)

EXIT_OK, EXIT_MISMATCH, EXIT_INPUT, EXIT_CAP = 0, 1, 2, 3

KINDS = {
    "aqec-bch": ("n", "q", "d1", "d2"),
    "qec-bch": ("n", "q", "d1", "d2"),
    "aqec-rs": ("q", "d1", "d2"),
    "ssc-euclid": ("n", "q", "delta"),
    "assc-bch": ("n", "q", "d1", "d2"),
    "ssc-bch": ("n", "q", "delta", "r"),
    "ssc-hermitian": ("n", "q", "delta", "r"),
    "ssc-cyclic": ("n", "q", "delta", "T"),
}


class InputError(PreconditionError):
    pass


def _require(args, kind: str) -> None:
    missing = [f"--{name}" for name in KINDS[kind] if getattr(args, name) is None]
    if missing:
        raise InputError(f"{kind} needs {', '.join(missing)}")


def build(kind: str, args) -> list:
    """Run one construction; returns a list of parameter records."""
    _require(args, kind)
    cap = args.cap
    if kind == "aqec-bch":
        return [aqec_bch_family(args.n, args.q, args.d1, args.d2, cap)]
    if kind == "qec-bch":
        return [css_qec(bch_code(args.n, args.q, args.d1), bch_code(args.n, args.q, args.d2), cap)]
    if kind == "aqec-rs":
        return [aqec_rs(args.q, args.d1, args.d2, cap)]
    if kind == "ssc-euclid":
        return list(euclidean_subsystem(bch_code(args.n, args.q, args.delta), cap))
    if kind == "assc-bch":
        return list(asymmetric_subsystem(bch_code(args.n, args.q, args.d1), bch_code(args.n, args.q, args.d2), cap))
    if kind == "ssc-bch":
        return [subsystem_bch_designed(args.n, args.q, args.delta, args.r)]
    if kind == "ssc-hermitian":
        return [subsystem_bch_hermitian_params(args.n, args.q, args.delta, args.r)]
    if kind == "ssc-cyclic":
        C2 = cyclic_dual(bch_code(args.n, args.q, args.delta))
        return [cyclic_subsystem_from_T(C2, _parse_T(args.T, args.n, args.q), cap)]
    raise InputError(f"unknown construction {kind!r}")


def _parse_T(text: str, n: int, q: int):
    from .cyclic import DefiningSet

    reps = [int(t) for t in text.replace(" ", "").split(",") if t]
    return DefiningSet.from_cosets(n, q, reps)


def _sweep_jobs(kind: str, args) -> list[dict]:
    """Parameter sets for a family sweep."""
    if kind == "aqec-rs":
        return [dict(d1=a, d2=b) for a, b in rs_pairs(args.q)]
    for name in ("n", "q"):
        if getattr(args, name) is None:
            raise InputError(f"sweep {kind} needs --{name}")
    n, q = args.n, args.q
    m = ord_n_q(n, q)
    if not in_length_range(n, q, m):
        raise InputError(f"n={n} outside the designed range for q={q}")
    dm = delta_max(n, q, m)
    if kind in ("aqec-bch", "qec-bch", "assc-bch"):
        from .cyclic import bch_defining_set

        seen, deltas = set(), []
        for d in range(2, dm + 1):
            T = bch_defining_set(n, q, d)
            if T not in seen:
                seen.add(T)
                deltas.append(d)
        return [dict(d1=a, d2=b) for i, a in enumerate(deltas) for b in deltas[i + 1:]]
    if kind == "ssc-euclid":
        return [dict(delta=d) for d in range(2, dm + 1)]
    raise InputError(f"sweep is not available for {kind!r}")


def _records_json(records: list) -> list[dict]:
    return [rec.to_json() for rec in records]


def _text_line(d: dict) -> str:
    b = d["bounds"]
    return (f"{d['label']:<28} {d['certified']:<12} singleton={b['singleton']} "
            f"subsystem={b['subsystem_singleton']} hamming={b['hamming']} mds={str(b['mds']).lower()}")


def cmd_construct(args) -> tuple[dict, int]:
    recs = build(args.kind, args)
    code = EXIT_CAP if any(hit_cap(r) for r in recs) else EXIT_OK
    return {"command": "construct", "kind": args.kind, "results": _records_json(recs)}, code


def cmd_verify(args) -> tuple[dict, int]:
    claim = tables.parse_claim(args.claim)
    recs = build(args.kind, args)
    results = []
    for rec in recs:
        status, diffs = tables.compare(rec, claim)
        results.append({"status": status, "mismatches": diffs, "derived": rec.to_json()})
    ok = [r for r in results if r["status"] != tables.MISMATCH]
    chosen = ok[0] if ok else results[0]
    out = {"command": "verify", "kind": args.kind, "claim": args.claim, **chosen}
    if not ok:
        return out, EXIT_MISMATCH
    return out, (EXIT_CAP if chosen["status"] == tables.LOWER and any(hit_cap(r) for r in recs) else EXIT_OK)


def cmd_sweep(args) -> tuple[dict, int]:
    rows = []
    for job in _sweep_jobs(args.kind, args):
        ns = argparse.Namespace(**{**vars(args), **job})
        try:
            recs = _records_json(build(args.kind, ns))
            rows.append({"params": job, "results": recs})
        except PreconditionError as exc:
            rows.append({"params": job, "error": {"type": type(exc).__name__, "message": str(exc)}})
    rows.sort(key=lambda r: sorted(r["params"].items()))
    return {"command": "sweep", "kind": args.kind, "rows": rows}, EXIT_OK


def cmd_reproduce(args) -> tuple[dict, int]:
    if args.target == "example":
        return {"command": "reproduce", "target": "example", **tables.reproduce_example(args.cap)}, EXIT_OK
    rows = tables.reproduce_table1(args.cap) if args.target == "table1" else tables.reproduce_table2(args.cap)
    return {"command": "reproduce", "target": args.target, "rows": rows, "summary": tables.summarize(rows)}, EXIT_OK


def _render_text(payload: dict) -> str:
    lines = []
    if "error" in payload:
        e = payload["error"]
        return f"error: {e['type']}: {e['message']}"
    cmd = payload.get("command")
    if cmd in ("construct",):
        lines += [_text_line(d) for d in payload["results"]]
    elif cmd == "verify":
        lines.append(f"{payload['claim']}: {payload['status']} (derived {payload['derived']['label']})")
        for m in payload["mismatches"]:
            lines.append(f"  {m['field']}: claimed {m['claimed']}, derived {m['derived']}")
    elif cmd == "sweep":
        for row in payload["rows"]:
            params = " ".join(f"{k}={v}" for k, v in row["params"].items())
            if "error" in row:
                lines.append(f"{params:<16} {row['error']['type']}")
            for d in row.get("results", []):
                lines.append(f"{params:<16} {_text_line(d)}")
    elif payload.get("target") == "example":
        for name, c in payload["codes"].items():
            lines.append(f"{name} = {c['name']} [{c['n']},{c['k']}]")
            lines += [f"  {row}" for row in c["generator"]]
        lines.append(f"nesting: {payload['nesting']}")
        lines.append(f"d_x = {payload['d_x']}, d_z = {payload['d_z']}")
        for row in payload["rows"]:
            lines.append(f"{row['status']:<17} {row['claim']:<22} derived {row['derived']['label']}")
        lines.append(f"swapped ASSC: {payload['assc_swapped']}")
    else:
        for row in payload["rows"]:
            derived = row["derived"]["label"] if row["derived"] else "-"
            lines.append(f"{row['status']:<17} {row['claim']:<22} derived {derived}")
            lines += [f"    {note}" for note in row["notes"]]
        lines.append("summary: " + ", ".join(f"{k}={v}" for k, v in payload["summary"].items()))
    return "\n".join(lines)


def _add_code_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("kind", choices=sorted(KINDS))
    p.add_argument("--n", type=int)
    p.add_argument("--q", type=int)
    p.add_argument("--d1", type=int)
    p.add_argument("--d2", type=int)
    p.add_argument("--delta", type=int)
    p.add_argument("--r", type=int)
    p.add_argument("--T", help="comma-separated cyclotomic coset representatives")


def make_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="aqbch", description="Asymmetric quantum and subsystem BCH code toolkit.")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--cap", type=int, default=None, help="enumeration cap (vectors examined)")
    common.add_argument("--format", choices=("json", "text"), default="json")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("construct", parents=[common], help="build one code and print its parameters")
    _add_code_flags(p)
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("verify", parents=[common], help="check a claimed parameter string")
    p.add_argument("claim")
    _add_code_flags(p)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("sweep", parents=[common], help="run a construction over a parameter family")
    _add_code_flags(p)
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("reproduce", parents=[common], help="regenerate a published table or the worked example")
    p.add_argument("target", choices=("table1", "table2", "example"))
    p.set_defaults(func=cmd_reproduce)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    args = make_parser().parse_args(argv)
    try:
        if args.cap is not None and args.cap < 0:
            raise InputError("--cap must be non-negative")
        payload, code = args.func(args)
    except CodeError as exc:
        code = EXIT_CAP if isinstance(exc, ResourceCapError) else EXIT_INPUT
        payload = {"error": {"type": type(exc).__name__, "message": str(exc)}}
        if getattr(exc, "witness", None) is not None:
            payload["error"]["witness"] = list(exc.witness)
    payload = {"schema": SCHEMA, **payload, "exit_code": code}
    if args.format == "json":
        print(json.dumps(payload, sort_keys=True, indent=2))
    else:
        print(_render_text(payload))
    return code


if __name__ == "__main__":
    sys.exit(main())
