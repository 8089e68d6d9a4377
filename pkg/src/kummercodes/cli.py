"""Command-line front end.

A job is described by a flat INI config with [field], [curve] and [job]
sections; the subcommand picks the operation.  All output is plain
UTF-8 text or CSV with no timestamps, so identical configs produce
byte-identical output.
"""

from __future__ import annotations

import argparse
import itertools
import sys
from configparser import ConfigParser
from typing import List, Optional, Sequence

from . import verify
from .agcode import (brute_force_distance, build_cl, build_comega,
                     designed_distance, evaluation_places, DEFAULT_BUDGET)
from .curve import KummerCurve, find_roots
from .gf import FiniteField
from .rrlattice import Divisor, dimension, omega_enumerate
from .weierstrass import PlaceTuple, box_search, floor_divisor, pure_gap, semigroup_member


class ConfigError(ValueError):
    pass


def _ints(text: str) -> List[int]:
    text = text.strip()
    if not text:
        return []
    return [int(tok) for tok in text.split(",")]


def load_config(path: str) -> ConfigParser:
    cp = ConfigParser()
    read = cp.read(path)
    if not read:
        raise ConfigError(f"cannot read config file {path}")
    return cp


def build_field(cp: ConfigParser) -> FiniteField:
    if "field" not in cp:
        raise ConfigError("missing [field] section")
    sec = cp["field"]
    try:
        return FiniteField(int(sec["p"]), int(sec["e"]), _ints(sec["modulus"]))
    except KeyError as exc:
        raise ConfigError(f"[field] missing key {exc}") from exc


def build_curve(cp: ConfigParser) -> KummerCurve:
    field = build_field(cp)
    if "curve" not in cp:
        raise ConfigError("missing [curve] section")
    sec = cp["curve"]
    try:
        m = int(sec["m"])
        lam = int(sec["lambda"])
    except KeyError as exc:
        raise ConfigError(f"[curve] missing key {exc}") from exc
    if "roots" in sec:
        roots: Sequence[int] = _ints(sec["roots"])
    elif "f" in sec:
        roots = find_roots(field, _ints(sec["f"]))
    else:
        raise ConfigError("[curve] needs either roots= or f=")
    return KummerCurve(field, m, lam, roots)


def job_value(cp: ConfigParser, key: str) -> Optional[str]:
    if "job" in cp and key in cp["job"]:
        return cp["job"][key]
    return None


def parse_divisor(curve: KummerCurve, text: Optional[str]) -> Divisor:
    if text is None:
        raise ConfigError("this command needs divisor=s1,...,sr,t in [job]")
    coeffs = _ints(text)
    if len(coeffs) != curve.r + 1:
        raise ConfigError(
            f"divisor needs {curve.r + 1} coefficients (s1..s{curve.r}, t), got {len(coeffs)}")
    return Divisor(tuple(coeffs[:-1]), coeffs[-1])


def parse_places(curve: KummerCurve, text: Optional[str]) -> PlaceTuple:
    if text is None:
        raise ConfigError("this command needs places=P1,...,Pl[,Pinf] in [job]")
    names = [tok.strip() for tok in text.split(",") if tok.strip()]
    include_inf = False
    l = 0
    for idx, name in enumerate(names):
        if name.lower() in ("pinf", "infinity"):
            if idx != len(names) - 1:
                raise ConfigError("Pinf must come last in places=")
            include_inf = True
        elif name.upper() == f"P{idx + 1}":
            l += 1
        else:
            raise ConfigError(f"places must be P1,P2,...,Pl[,Pinf]; got {name!r}")
    return PlaceTuple(l, include_inf)


def _emit(out: Optional[str], text: str) -> None:
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def cmd_curve_info(curve: KummerCurve, args, cp) -> int:
    lines = [
        f"m {curve.m}",
        f"lambda {curve.lam}",
        f"r {curve.r}",
        f"genus {curve.g}",
        f"places {curve.num_places()}",
        f"A {curve.A}",
        f"B {curve.B}",
        f"a {curve.a}",
        f"b {curve.b}",
    ]
    _emit(args.out, "\n".join(lines) + "\n")
    return 0


def cmd_places(curve: KummerCurve, args, cp) -> int:
    rows = ["kind,mu,x,y"]
    for p in curve.places():
        rows.append(f"{p.kind},{p.mu},{p.x},{p.y}")
    _emit(args.out, "\n".join(rows) + "\n")
    return 0


def cmd_rr_basis(curve: KummerCurve, args, cp) -> int:
    G = parse_divisor(curve, job_value(cp, "divisor"))
    m, r = curve.m, curve.r
    rows = []
    for pt in omega_enumerate(curve, G):
        left = " ".join(str(v) for v in (pt.i,) + pt.j)
        orders = [-pt.i] + [-pt.i - m * j for j in pt.j] + [r * pt.i + m * sum(pt.j)]
        rows.append(left + " | " + " ".join(str(v) for v in orders))
    _emit(args.out, "\n".join(rows) + "\n")
    return 0


def cmd_dim(curve: KummerCurve, args, cp) -> int:
    G = parse_divisor(curve, job_value(cp, "divisor"))
    _emit(args.out, f"{dimension(curve, G)}\n")
    return 0


def cmd_semigroup(curve: KummerCurve, args, cp) -> int:
    places = parse_places(curve, job_value(cp, "places"))
    coords = _ints(job_value(cp, "coords") or "")
    member = semigroup_member(curve, places, coords)
    _emit(args.out, ("true" if member else "false") + "\n")
    return 0


def cmd_pure_gaps(curve: KummerCurve, args, cp) -> int:
    places = parse_places(curve, job_value(cp, "places"))
    bound = args.bound or int(job_value(cp, "bound") or 0)
    if bound < 1:
        raise ConfigError("pure-gaps needs --bound or bound= in [job]")
    rows = []
    for pt in itertools.product(range(1, bound + 1), repeat=places.arity()):
        if pure_gap(curve, places, pt):
            rows.append(",".join(str(v) for v in pt))
    _emit(args.out, "\n".join(rows) + ("\n" if rows else ""))
    return 0


def cmd_box_search(curve: KummerCurve, args, cp) -> int:
    places = parse_places(curve, job_value(cp, "places"))
    bound = args.bound or int(job_value(cp, "bound") or 0)
    if bound < 1:
        raise ConfigError("box-search needs --bound or bound= in [job]")
    result = box_search(curve, places, bound)
    if result is None:
        _emit(args.out, "no pure gaps\n")
        return 0
    box, G = result
    text = (f"base {' '.join(map(str, box.base))}\n"
            f"widths {' '.join(map(str, box.widths))}\n"
            f"G {G}\n"
            f"bound {designed_distance(curve, G, 'pure_gap_box', box=box)}\n")
    _emit(args.out, text)
    return 0


def cmd_floor(curve: KummerCurve, args, cp) -> int:
    H = parse_divisor(curve, job_value(cp, "divisor"))
    _emit(args.out, f"{floor_divisor(curve, H)}\n")
    return 0


def _build_code(curve, args, cp):
    G = parse_divisor(curve, job_value(cp, "divisor"))
    n_text = job_value(cp, "n")
    n = int(n_text) if n_text else None
    seed = args.seed if args.seed is not None else (
        int(job_value(cp, "seed")) if job_value(cp, "seed") else None)
    D = evaluation_places(curve, G, n=n, seed=seed)
    kind = (job_value(cp, "code") or "omega").lower()
    if kind == "l":
        code = build_cl(curve, G, D)
    elif kind == "omega":
        code = build_comega(curve, G, D)
    else:
        raise ConfigError(f"code= must be 'l' or 'omega', got {kind!r}")
    selection = "all" if n is None else ("drop-highest" if seed is None else f"seed={seed}")
    return G, D, code, selection


def cmd_build_code(curve: KummerCurve, args, cp) -> int:
    G, D, code, selection = _build_code(curve, args, cp)
    _emit(args.out, code.export_text())
    dest = sys.stdout if args.out else sys.stderr
    dest.write(f"selection {selection} n={code.n}\n")
    for name, value in code.bounds:
        dest.write(f"bound {name} {value}\n")
    return 0


def cmd_check_distance(curve: KummerCurve, args, cp) -> int:
    budget = args.budget or int(job_value(cp, "budget") or DEFAULT_BUDGET)
    _, _, code, _ = _build_code(curve, args, cp)
    d = brute_force_distance(code, budget)
    _emit(args.out, ("undefined" if d is None else str(d)) + "\n")
    return 0


COMMANDS = {
    "curve-info": cmd_curve_info,
    "places": cmd_places,
    "rr-basis": cmd_rr_basis,
    "dim": cmd_dim,
    "semigroup": cmd_semigroup,
    "pure-gaps": cmd_pure_gaps,
    "box-search": cmd_box_search,
    "floor": cmd_floor,
    "build-code": cmd_build_code,
    "check-distance": cmd_check_distance,
}


def make_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="kummer-codes",
        description="Multi-point algebraic-geometric codes over Kummer extensions")
    ap.add_argument("command", choices=sorted(COMMANDS) + ["verify-example"])
    ap.add_argument("example", nargs="?", type=int,
                    help="example number for verify-example (1-4)")
    ap.add_argument("--config", help="path to the job config file")
    ap.add_argument("--out", help="write primary output to this file")
    ap.add_argument("--budget", type=int, help="brute-force codeword budget")
    ap.add_argument("--seed", type=int, help="seed for evaluation-place selection")
    ap.add_argument("--bound", type=int, help="coordinate bound for gap searches")
    return ap


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = make_parser().parse_args(argv)

    if args.command == "verify-example":
        if args.example not in (1, 2, 3, 4):
            print("verify-example needs a number in 1-4", file=sys.stderr)
            return 2
        ok, lines = verify.verify_example(args.example)
        _emit(args.out, "\n".join(lines) + "\n")
        return 0 if ok else 1

    if not args.config:
        print("this command needs --config", file=sys.stderr)
        return 2
    try:
        cp = load_config(args.config)
        curve = build_curve(cp)
    except (ConfigError, KeyError) as exc:
        print(f"config error: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    try:
        return COMMANDS[args.command](curve, args, cp)
    except ConfigError as exc:
        print(f"config error: {exc}", file=sys.stderr)
        return 2
    except (ValueError, IndexError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
