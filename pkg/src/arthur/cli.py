"""Batch command-line interface: one JSON document in, one out.

Exit codes: 0 the computation ran (whatever the verdict), 1 bad input,
2 a structural invariant failed (a bug), 3 an orbit cap was exceeded.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import __version__
from .errors import CapExceeded, InputError, InternalCheckError
from .induction import component_characters, induce, is_reducible, sign_counts
from .io import (
    multisegment_to_json,
    half_segment_to_json,
    parse_aplus_document,
    parse_gl_document,
    parse_multisegment_document,
    parse_parameter_document,
    parse_sequence,
    zseg_to_json,
)
from .glconstraints import check_constraint
from .multisegments import canonical_rows, character, pi_nonzero
from .oracle import exhaustive_interval_census, packet_sweep
from .segments import ZSegment
from .sequences import DEFAULT_CAP, orbit
from .unitarity import is_unitary


def _character_json(char) -> list:
    return [
        {"rho": rho.name, "a": a, "b": b, "value": v}
        for (rho, a, b), v in char.values
    ]


def _cmd_nonvanishing(doc, args):
    ms = parse_multisegment_document(doc)
    return {"nonzero": pi_nonzero(ms, args.cap)}


def _cmd_character(doc, args):
    ms = parse_multisegment_document(doc)
    return {"character": _character_json(character(ms, args.cap))}


def _cmd_orbit(doc, args):
    members = orbit(parse_sequence(doc), args.cap).members
    return {
        "size": len(members),
        "members": [[zseg_to_json(e) for e in m] for m in members],
    }


def _require_insertion_flags(args):
    if args.rho is None or args.a is None or args.b is None:
        raise InputError("this command needs --rho, --a and --b")


def _find_cuspidal(doc, name):
    from .io import parse_cuspidals

    registry = parse_cuspidals(doc.get("cuspidals", []))
    if name not in registry:
        raise InputError(f"unknown cuspidal {name!r}")
    return registry[name]


def _cmd_induce(doc, args):
    _require_insertion_flags(args)
    ms = canonical_rows(parse_multisegment_document(doc), args.cap)
    rho = _find_cuspidal(doc, args.rho)
    result = induce(ms, rho, args.a, args.b, args.cap)
    chars = component_characters(result, args.cap)
    return {
        "components": len(result.components),
        "inserted_support": {"A": str(result.A), "B": str(result.B)},
        "items": [
            {
                "inserted": half_segment_to_json(seg),
                "character": _character_json(char),
                "multisegment": multisegment_to_json(component),
            }
            for seg, char, component in zip(
                result.inserted, chars, result.components
            )
        ],
    }


def _cmd_reducible(doc, args):
    _require_insertion_flags(args)
    ms = parse_multisegment_document(doc)
    rho = _find_cuspidal(doc, args.rho)
    return {"reducible": is_reducible(ms, rho, args.a, args.b, args.cap)}


def _cmd_sign_counts(doc, args):
    _require_insertion_flags(args)
    ms = parse_multisegment_document(doc)
    rho = _find_cuspidal(doc, args.rho)
    plus, minus = sign_counts(ms, rho, args.a, args.b, args.cap)
    return {"m_plus": plus, "m_minus": minus}


def _cmd_unitary(doc, args):
    verdict = is_unitary(parse_aplus_document(doc), args.cap)
    return {
        "hermitian": verdict.hermitian,
        "unitary": verdict.unitary,
        "witnesses": [
            {
                "index": w.index,
                "reducible": w.reducible,
                "class_cardinality": w.class_cardinality,
            }
            for w in verdict.witnesses
        ],
    }


def _cmd_gl_constraint(doc, args):
    ok, violations = check_constraint(parse_gl_document(doc))
    return {"ok": ok, "violations": violations}


def _cmd_census(doc, args):
    delta_doc = doc.get("delta")
    if not isinstance(delta_doc, dict):
        raise InputError("census needs a 'delta' object with fields A and B")
    report = exhaustive_interval_census(
        ZSegment(int(delta_doc["A"]), int(delta_doc["B"]))
    )
    return {
        "elements": report.n_elements,
        "intervals": report.n_intervals,
        "non_intervals": [
            sorted(str(e) for e in s) for s in report.non_intervals
        ],
        "counterexamples": [c.as_dict() for c in report.counterexamples],
    }


def _cmd_sweep(doc, args):
    psi = parse_parameter_document(doc)
    report = packet_sweep(psi, max_rows=int(doc.get("max_rows", 6)), cap=args.cap)
    return {
        "size": report.size,
        "characters": [
            [{"rho": name, "a": a, "b": b, "value": v} for (name, a, b), v in char]
            for char in report.characters
        ],
        "collisions": len(report.collisions),
    }


COMMANDS = {
    "nonvanishing": _cmd_nonvanishing,
    "character": _cmd_character,
    "orbit": _cmd_orbit,
    "induce": _cmd_induce,
    "reducible": _cmd_reducible,
    "sign-counts": _cmd_sign_counts,
    "unitary": _cmd_unitary,
    "gl-constraint": _cmd_gl_constraint,
    "census": _cmd_census,
    "sweep": _cmd_sweep,
}


def _default_cap() -> int:
    env = os.environ.get("ARTHUR_CAP")
    if env is None:
        return DEFAULT_CAP
    try:
        return int(env)
    except ValueError:
        raise InputError(f"ARTHUR_CAP must be an integer, got {env!r}")


def _emit(payload: dict, pretty: bool) -> None:
    payload = dict(payload)
    payload["engine_version"] = __version__
    if pretty:
        text = json.dumps(payload, indent=2, sort_keys=True)
    else:
        text = json.dumps(payload, sort_keys=True, separators=(",", ":"))
    sys.stdout.write(text + "\n")


def _error_payload(kind: str, path: str, message: str) -> dict:
    return {"error": {"kind": kind, "path": path, "message": message}}


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(
        prog="arthur",
        description="Batch queries against the extended multi-segment engine.",
    )
    parser.add_argument("command", choices=sorted(COMMANDS))
    parser.add_argument("input", help="path to the JSON input document")
    parser.add_argument("--cap", type=int, default=None, help="orbit cap override")
    parser.add_argument("--pretty", action="store_true", help="indent the output")
    parser.add_argument("--rho", default=None, help="cuspidal name for insertions")
    parser.add_argument("--a", type=int, default=None)
    parser.add_argument("--b", type=int, default=None)
    args = parser.parse_args(argv)

    path = args.input
    try:
        if args.cap is None:
            args.cap = _default_cap()
        try:
            with open(path, "r", encoding="utf-8") as fh:
                doc = json.load(fh)
        except OSError as exc:
            raise InputError(f"cannot read {path}: {exc}") from exc
        except json.JSONDecodeError as exc:
            raise InputError(f"malformed JSON: {exc}") from exc
        payload = COMMANDS[args.command](doc, args)
    except InputError as exc:
        _emit(_error_payload(type(exc).__name__, path, str(exc)), args.pretty)
        return 1
    except InternalCheckError as exc:
        _emit(_error_payload(type(exc).__name__, path, str(exc)), args.pretty)
        return 2
    except CapExceeded as exc:
        _emit(_error_payload(type(exc).__name__, path, str(exc)), args.pretty)
        return 3
    _emit(payload, args.pretty)
    return 0


if __name__ == "__main__":
    sys.exit(main())
