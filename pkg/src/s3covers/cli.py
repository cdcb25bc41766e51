"""Command-line front end: ``s3covers <subcommand> [flags]``."""

from __future__ import annotations

import argparse
import json
import os
import sys
import time
from typing import Sequence

from . import __version__
from .atlas import SUITES, run_suite
from .covers import BuildingData, RelationsViolated, classify, cover_algebra, derive, discriminant_chi, is_torsor
from .exactnum import CharacteristicError, field_from_tag
from .groebner import GroebnerTimeout, buchberger
from .miranda import (
    TraceError,
    TripleCoverData,
    alpha_delta,
    beta_from_delta,
    cover_to_delta,
    delta_discriminant,
    eta_delta,
    lambda_to_cover,
    m_delta,
)
from .poly import MonomialOrder, format_poly, read_ideal_text
from .qring import CoeffRing
from .s3x import equivariant_trivialization, s3_transform
from .scalg import SCAlgebra


class InputError(ValueError):
    """Bad input file or flag value; exit status 1."""


class Output:
    """Collects one run's report; text goes out line by line, JSON as one document."""

    def __init__(self, as_json: bool, ring: str) -> None:
        self.as_json = as_json
        self.doc: dict = {"version": __version__, "ring": ring}
        self.lines = [f"s3covers {__version__}", f"ring: {ring}"]

    def put(self, key: str, value, text: str | None = None) -> None:
        self.doc[key] = value
        if text is not None:
            self.lines.append(text)

    def emit(self, stream=None) -> None:
        stream = stream or sys.stdout
        if self.as_json:
            stream.write(json.dumps(self.doc, indent=1, sort_keys=True) + "\n")
        else:
            stream.write("\n".join(self.lines) + "\n")


def _read_json(path: str) -> dict:
    try:
        with open(path, encoding="utf-8") as fh:
            return json.load(fh)
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from exc
    except json.JSONDecodeError as exc:
        raise InputError(f"{path} is not valid JSON: {exc}") from exc


def _load_cover(path: str) -> BuildingData:
    try:
        return BuildingData.from_json(_read_json(path))
    except InputError:
        raise
    except (ValueError, KeyError, TypeError) as exc:
        raise InputError(f"{path}: {exc}") from exc


def _yes(flag: bool) -> str:
    return "yes" if flag else "no"


# subcommands


def cmd_check_cover(args: argparse.Namespace) -> int:
    chi = _load_cover(args.file)
    out = Output(args.json, chi.ring.describe())
    report = classify(chi)
    bad = [f"g{i + 1}" for i, r in enumerate(report.residuals) if not r.is_zero()]
    out.put("residuals", [str(r) for r in report.residuals])
    out.put("relations_ok", not bad, "relations: OK" if not bad else "relations: violated at " + ", ".join(bad))
    if bad:
        for name, r in zip((f"g{i + 1}" for i in range(25)), report.residuals):
            if not r.is_zero():
                out.lines.append(f"  {name} = {r}")
    out.put("locus", report.to_json(), "loci: " + (", ".join(report.loci()) or "none"))
    if not bad:
        torsor = is_torsor(chi)
        m = derive(chi).m
        if torsor:
            status = "yes"
        elif chi.ring.is_field or m.is_zero() or chi.omega.is_zero():
            status = "no"
        else:
            status = "iff m, omega units"
        out.put("torsor", status, f"torsor: {status}")
        out.put("m", str(m), f"m = {m}")
    else:
        out.put("torsor", None, "torsor: undefined (relations violated)")
    disc = discriminant_chi(chi)
    out.put("discriminant", str(disc), f"discriminant: {disc}")
    out.emit()
    return 1 if bad else 0


def _algebra_verdicts(alg: SCAlgebra) -> dict:
    comm, cw = alg.check_commutative()
    assoc, aw = alg.check_associative()
    unit, uw = alg.check_unit()
    return {
        "unit": unit,
        "commutative": comm,
        "associative": assoc,
        "witnesses": {"unit": uw, "commutative": cw, "associative": aw},
    }


def cmd_algebra(args: argparse.Namespace) -> int:
    if args.check:
        data = _read_json(args.check)
        data = data.get("algebra", data)
        try:
            alg = SCAlgebra.from_json(data)
        except (ValueError, KeyError, TypeError) as exc:
            raise InputError(f"{args.check}: {exc}") from exc
    else:
        if not args.file:
            raise InputError("algebra needs a building-data file or --check FILE")
        alg, _, _ = cover_algebra(_load_cover(args.file))
    out = Output(args.json, alg.ring.describe())
    verdicts = _algebra_verdicts(alg)
    for key in ("unit", "commutative", "associative"):
        w = verdicts["witnesses"][key]
        out.put(key, verdicts[key], f"{key}: {_yes(verdicts[key])}" + (f" (witness {w})" if w is not None else ""))
    out.put("witnesses", verdicts["witnesses"])
    out.put("algebra", alg.to_json(), "structure constants:\n" + alg.dumps())
    out.emit()
    return 0


def cmd_triple(args: argparse.Namespace) -> int:
    data = _read_json(args.file)
    if "delta" in data:
        try:
            d = TripleCoverData.from_json(data)
        except (ValueError, KeyError, TypeError) as exc:
            raise InputError(f"{args.file}: {exc}") from exc
        out = Output(args.json, d.ring.describe())
        chi = lambda_to_cover(d)
    else:
        chi0 = _load_cover(args.file)
        out = Output(args.json, chi0.ring.describe())
        try:
            d, chi = cover_to_delta(chi0)
        except TraceError as exc:
            raise InputError(str(exc)) from exc
        except ValueError as exc:
            raise InputError(f"cannot recover a cubic: {exc}") from exc
    out.put("delta", [str(x) for x in d.delta], "delta (y^3, y^2z, yz^2, z^3): " + ", ".join(map(str, d.delta)))
    beta = beta_from_delta(d)
    out.put("beta", [[str(x) for x in row] for row in beta], "beta: " + str([[str(x) for x in row] for row in beta]))
    eta = eta_delta(d)
    out.put("eta", [str(x) for x in eta], "eta (y^2, yz, z^2): " + ", ".join(map(str, eta)))
    alpha = alpha_delta(d)
    out.put("alpha", [[str(x) for x in row] for row in alpha], "alpha: " + str([[str(x) for x in row] for row in alpha]))
    out.put("m", str(m_delta(d)), f"m = {m_delta(d)}")
    out.put("discriminant", str(delta_discriminant(d)), f"discriminant: {delta_discriminant(d)}")
    report = classify(chi)
    ok = report.satisfies_relations
    out.put("lambda", chi.to_json(), "Lambda: " + json.dumps(chi.to_json(), sort_keys=True))
    out.put("relations_ok", ok, "relations: OK" if ok else "relations: violated")
    out.emit()
    return 0 if ok else 1


def cmd_s3(args: argparse.Namespace) -> int:
    chi = _load_cover(args.file)
    try:
        c = s3_transform(chi)
    except (CharacteristicError, RelationsViolated) as exc:
        raise InputError(str(exc)) from exc
    verdict = c.verify()
    out = Output(args.json, chi.ring.describe())
    for key in ("commutative", "associative", "action"):
        out.put(key, verdict[key], f"{key}: {_yes(verdict[key])}")
    out.put("action_note", verdict["action_note"], None if verdict["action"] else f"  {verdict['action_note']}")
    triv = equivariant_trivialization(chi)
    out.put("trivialization", {"ring": triv.ring.describe(), "checks": triv.checks},
            f"trivialization over {triv.ring.describe()}: {'verified' if triv.verified else 'FAILED'}")
    for key, val in triv.checks.items():
        out.lines.append(f"  {key}: {_yes(val)}")
    out.put("s3_algebra", c.to_json(), "S3 algebra:\n" + json.dumps(c.to_json(), indent=1, sort_keys=True))
    out.emit()
    good = verdict["commutative"] and verdict["associative"] and verdict["action"] and triv.verified
    return 0 if good else 1


def cmd_gb(args: argparse.Namespace) -> int:
    try:
        order = MonomialOrder.parse(args.order)
    except ValueError as exc:
        raise InputError(str(exc)) from exc
    field = field_from_tag(f"fp:{args.modulus}") if args.modulus else field_from_tag("q")
    try:
        with open(args.file, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise InputError(f"cannot read {args.file}: {exc.strerror}") from exc
    try:
        ideal = read_ideal_text(text, field, order)
    except ValueError as exc:
        raise InputError(f"{args.file}: {exc}") from exc
    ring_name = CoeffRing.polynomial(ideal.ring.variables, field).describe()
    out = Output(args.json, ring_name)
    deadline = time.monotonic() + args.timeout if args.timeout else None
    try:
        gb = buchberger(ideal.gens, order, deadline=deadline)
    except GroebnerTimeout as exc:
        out.put("status", "skipped", f"skipped: {exc}")
        out.emit()
        return 2 if args.strict else 0
    basis = [format_poly(g) for g in gb]
    out.put("order", str(order), f"order: {order}")
    out.put("basis", basis, f"reduced basis ({len(basis)} elements):")
    out.lines.extend(f"  {g}" for g in basis)
    out.emit()
    return 0


def cmd_verify_paper(args: argparse.Namespace) -> int:
    fields = args.field or ["fp:5", "fp:7"]
    for tag in fields:
        f = field_from_tag(tag)
        if f.characteristic == 2:
            raise InputError("characteristic 2 is excluded")
    report = run_suite(args.suite, [field_from_tag(t).tag for t in fields], seed=args.seed,
                       threads=args.threads, budget=args.budget)
    ring = ", ".join(CoeffRing.of_field(field_from_tag(t)).describe() for t in fields)
    out = Output(args.json, ring)
    out.put("suite", args.suite, f"suite: {args.suite}")
    out.put("report", report.to_json(args.timings), report.to_text(args.timings))
    out.emit()
    if report.refuted:
        return 1
    if args.strict and report.skipped:
        return 2
    return 0


class _Parser(argparse.ArgumentParser):
    # usage errors count as invalid input; status 2 is reserved for strict-mode skips
    def error(self, message: str) -> None:
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--json", action="store_true", help="emit one JSON document on stdout")
    common.add_argument("--strict", action="store_true", help="exit 2 when a check is skipped or times out")
    common.add_argument("--seed", type=int, default=0, help="seed for sampled checks")

    parser = _Parser(prog="s3covers", description="Building data of S3-covers: checks and transforms.")
    parser.add_argument("--version", action="version", version=f"s3covers {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check-cover", parents=[common], help="relations, loci, torsor status, discriminant")
    p.add_argument("file")
    p.set_defaults(func=cmd_check_cover)

    p = sub.add_parser("algebra", parents=[common], help="structure constants of A_chi")
    p.add_argument("file", nargs="?")
    p.add_argument("--check", metavar="FILE", help="verify a structure-constant JSON file instead")
    p.set_defaults(func=cmd_algebra)

    p = sub.add_parser("triple", parents=[common], help="cubic form <-> trace-zero beta, and Lambda")
    p.add_argument("file")
    p.set_defaults(func=cmd_triple)

    p = sub.add_parser("s3", parents=[common], help="the S3-algebra of a cover and its verification")
    p.add_argument("file")
    p.set_defaults(func=cmd_s3)

    p = sub.add_parser("gb", parents=[common], help="reduced Groebner basis of an ideal file")
    p.add_argument("file")
    p.add_argument("--order", default="grevlex", help="lex, grevlex or block(k)")
    p.add_argument("--modulus", type=int, default=0, help="work over GF(p) instead of QQ")
    p.add_argument("--timeout", type=float, default=0.0, help="seconds before giving up (0: none)")
    p.set_defaults(func=cmd_gb)

    p = sub.add_parser("verify-paper", parents=[common], help="run the atlas checks")
    p.add_argument("--suite", choices=SUITES, default="core")
    p.add_argument("--field", action="append", help="q or fp:<p>; repeatable (default fp:5 and fp:7)")
    p.add_argument("--threads", type=int, default=os.cpu_count() or 1)
    p.add_argument("--budget", type=float, default=600.0, help="seconds for the smoothness computation")
    p.add_argument("--timings", action="store_true", help="include runtimes (output is then not byte-stable)")
    p.set_defaults(func=cmd_verify_paper)
    return parser


def run(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (InputError, CharacteristicError, RelationsViolated) as exc:
        print(f"s3covers {__version__}: error: {exc}", file=sys.stderr)
        return 1
    except ValueError as exc:
        print(f"s3covers {__version__}: error: {exc}", file=sys.stderr)
        return 1


def main(argv: Sequence[str] | None = None) -> None:
    sys.exit(run(argv))


if __name__ == "__main__":
    main()
