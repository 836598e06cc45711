"""qcat: compute, inject, verify, and render from the command line.

Exit codes: 0 success (and "claim verified"), 1 verification failure,
2 usage error.  All output is deterministic; JSON comes straight from the
module schemas and the text views are derived from the same data.
"""

from __future__ import annotations

import argparse
import dataclasses
import json
import sys

from . import render, verify, words
from .catalan import q_catalan
from .inject import InvariantBreachError, geometric_scene, inject
from .poly import Poly
from .verify import report_to_json


def _emit(text: str, out_path: str | None = None) -> None:
    if out_path:
        with open(out_path, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        print(text)


def _dump(obj) -> str:
    return json.dumps(obj, indent=2)


def _cmd_poly(args) -> int:
    p = q_catalan(args.n)
    _emit(_dump(p.to_json_coeffs()) if args.json else p.to_text())
    return 0


def _cmd_enumerate(args) -> int:
    ws = words.enumerate_words(args.n)
    _emit(_dump(ws) if args.json else "\n".join(ws))
    return 0


def _cmd_inv(args) -> int:
    n = words.inversions(args.word)
    _emit(_dump({"word": args.word, "inversions": n}) if args.json else str(n))
    return 0


def _cmd_inject(args) -> int:
    result = inject(args.pi, args.sigma, args.r)
    if args.json:
        doc = {
            "nu": result.nu,
            "omega": result.omega,
            "shift": result.shift_exponent,
            "certificate": dataclasses.asdict(result.certificate),
        }
        doc["certificate"]["meet_point"] = list(result.certificate.meet_point)
        _emit(_dump(doc))
    else:
        cert = result.certificate
        _emit(
            "\n".join(
                [
                    f"nu    = {result.nu}",
                    f"omega = {result.omega}",
                    f"shift = {result.shift_exponent}",
                    f"split t = {cert.t}  meet = {cert.meet_point}",
                ]
            )
        )
    return 0


def _gap_rows(reports, with_sharpness: bool) -> tuple[list[dict], bool]:
    docs = []
    for rep in reports:
        sharp = (
            verify.sharpness_check(rep.k, rep.l, rep.r) if with_sharpness else None
        )
        docs.append(report_to_json(rep, sharpness=sharp))
    return docs, all(d["verdict"] for d in docs)


def _render_verify_text(docs: list[dict], all_ok: bool) -> str:
    lines = []
    for d in docs:
        params = " ".join(f"{key}={val}" for key, val in d["params"].items())
        status = "ok" if d["verdict"] else "FAIL"
        line = f"[{d['kind']}] {params}: {status}"
        if d["violation"] is not None:
            v = d["violation"]
            line += f" (coefficient {v['coeff']} at degree {v['degree']})"
        lines.append(line)
    lines.append(f"cells={len(docs)} all_ok={all_ok}")
    return "\n".join(lines)


def _finish_verify(docs: list[dict], all_ok: bool, as_json: bool) -> int:
    if as_json:
        _emit(_dump({"reports": docs, "summary": {"cells": len(docs), "ok": all_ok}}))
    else:
        _emit(_render_verify_text(docs, all_ok))
    return 0 if all_ok else 1


def _cmd_verify(args) -> int:
    if args.target == "theorem":
        reports = verify.sweep(args.kmax, args.lmax or args.kmax, 1, "gap", args.jobs)
        docs, ok = _gap_rows(reports, with_sharpness=False)
        return _finish_verify(docs, ok, args.json)
    if args.target == "corollary":
        reports = verify.sweep(args.kmax, args.lmax or args.kmax, args.rmax, "gap", args.jobs)
        docs, ok = _gap_rows(reports, with_sharpness=True)
        return _finish_verify(docs, ok, args.json)
    if args.target == "audit":
        kmax = args.kmax
        lmax = args.lmax or args.kmax
        cap = verify.AUDIT_DEFAULT_CAP if args.cap is None else args.cap
        if max(kmax, lmax) > cap:
            raise ValueError(
                f"audit bounds exceed the cap {cap}; raise it with --cap"
            )
        reports = verify.sweep(kmax, lmax, args.rmax, "audit", args.jobs)
        docs = [report_to_json(rep) for rep in reports]
        return _finish_verify(docs, all(d["verdict"] for d in docs), args.json)
    # counterexamples: expected failures must be found, adjacent gaps must hold
    docs = [
        report_to_json(verify.naive_counterexample()),
        report_to_json(verify.definition_critique()),
    ]
    return _finish_verify(docs, all(d["verdict"] for d in docs), args.json)


def _cmd_render(args) -> int:
    scene = geometric_scene(args.pi, args.sigma, args.r)
    if args.svg:
        text = render.render_svg(scene, stage=args.stage)
    else:
        text = render.render_ascii(scene, stage=args.stage)
    _emit(text, args.out)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="qcat",
        description="Exact q-Catalan polynomials, lattice-word injections, "
        "and log-convexity verification.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("poly", help="print the n-th q-Catalan polynomial")
    p.add_argument("n", type=int)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_poly)

    p = sub.add_parser("enumerate", help="list all lattice words of half-length n")
    p.add_argument("n", type=int)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_enumerate)

    p = sub.add_parser("inv", help="inversion count of a lattice word")
    p.add_argument("word")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_inv)

    p = sub.add_parser("inject", help="apply the inversion-shifting injection")
    p.add_argument("pi")
    p.add_argument("sigma")
    p.add_argument("--r", type=int, default=1)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_inject)

    p = sub.add_parser("verify", help="sweep the verification suites")
    p.add_argument(
        "target", choices=["theorem", "corollary", "audit", "counterexamples"]
    )
    p.add_argument("--kmax", type=int, default=None)
    p.add_argument("--lmax", type=int, default=None)
    p.add_argument("--rmax", type=int, default=None)
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--cap", type=int, default=None,
                   help="override the audit enumeration cap")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("render", help="draw an injection scene")
    p.add_argument("pi")
    p.add_argument("sigma")
    p.add_argument("--r", type=int, default=1)
    fmt = p.add_mutually_exclusive_group()
    fmt.add_argument("--svg", action="store_true")
    fmt.add_argument("--ascii", action="store_true")
    p.add_argument("--stage", choices=["before", "after"], default="before")
    p.add_argument("--out", default=None)
    p.set_defaults(func=_cmd_render)

    return parser


_VERIFY_DEFAULTS = {
    "theorem": {"kmax": 25, "rmax": 1},
    "corollary": {"kmax": 12, "rmax": 12},
    "audit": {"kmax": 6, "rmax": 6},
    "counterexamples": {"kmax": 0, "rmax": 0},
}


def _apply_verify_defaults(args) -> None:
    defaults = _VERIFY_DEFAULTS[args.target]
    if args.kmax is None:
        args.kmax = defaults["kmax"]
    if args.rmax is None:
        args.rmax = defaults["rmax"]
    if args.jobs < 1:
        raise ValueError("--jobs must be at least 1")


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "verify":
            _apply_verify_defaults(args)
        return args.func(args)
    except InvariantBreachError as exc:
        print(f"qcat: internal invariant breach: {exc}", file=sys.stderr)
        return 1
    except (ValueError, IndexError) as exc:
        print(f"qcat: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
