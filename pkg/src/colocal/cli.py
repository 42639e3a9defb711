"""Command-line front end.

Exit codes: 0 success / colocal, 1 not colocal, 2 input error,
3 verification mismatch.
"""

from __future__ import annotations

import argparse
import json
import sys

from .analysis import (VerificationError, analyze, brute_force_lattice,
                       verify_main_theorem, verify_partition_M,
                       verify_tau_equivalences)
from .lattice import DEFAULT_MAX_SIZE, LatticeError, to_dot
from .quiver import QuiverError, check_C1, load_quiver
from .strings import InfiniteStringsError, enumerate_strings, string_module
from .young import YoungLattice

EXIT_OK, EXIT_NOT_COLOCAL, EXIT_INPUT, EXIT_MISMATCH = 0, 1, 2, 3


class InputError(Exception):
    pass


def _load(path):
    try:
        return load_quiver(path)
    except OSError as e:
        raise InputError(f"{path}: {e.strerror or e}") from e
    except QuiverError as e:
        raise InputError(f"{path}: {e}") from e


def _dump(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=True) + "\n"


def _write_dot(path, text):
    try:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)
    except OSError as e:
        raise InputError(f"cannot write {path}: {e.strerror or e}") from e


def cmd_analyze(args, out) -> int:
    rep = analyze(_load(args.file))
    out.write(rep.to_json() + "\n" if args.json else rep.to_text())
    return EXIT_OK if rep.colocal else EXIT_NOT_COLOCAL


def cmd_lattice(args, out) -> int:
    qa = _load(args.file)
    rep = analyze(qa)
    if not rep.colocal:
        msg = "not of colocal type; the lattice is not computed"
        out.write(_dump({"colocal": False, "message": msg}) if args.json else msg + "\n")
        return EXIT_NOT_COLOCAL
    factors = [{"vertex": str(m), "m": p.k + 1, "n": p.l + 1} for m, p in rep.profiles.items()]
    materialized = rep.lattice_size <= args.max_size
    if args.dot:
        if not materialized:
            raise InputError(f"lattice size {rep.lattice_size} exceeds --max-size {args.max_size}; "
                             "no DOT written")
        L = brute_force_lattice(qa, max_size=args.max_size)
        _write_dot(args.dot, to_dot(L, name="S", max_size=args.max_size))
    if args.json:
        out.write(_dump({"colocal": True, "factors": factors, "size": rep.lattice_size,
                         "dot": args.dot}))
    else:
        for f in factors:
            out.write(f"vertex {f['vertex']}: Y^{{{f['m']},{f['n']}}}\n")
        out.write(f"size {rep.lattice_size}\n")
    return EXIT_OK


def cmd_verify(args, out) -> int:
    qa = _load(args.file)
    rep = analyze(qa)
    result: dict = {"colocal": rep.colocal}
    ok = True
    if rep.colocal:
        strings = enumerate_strings(qa)
        try:
            result["main_theorem"] = verify_main_theorem(qa, args.max_size, strings).to_dict()
            result["main_theorem"]["passed"] = True
        except VerificationError as e:
            result["main_theorem"] = {"passed": False, "error": str(e)}
            ok = False
        part = verify_partition_M(qa, strings)
        result["partition"] = part.to_dict()
        ok &= part.passed
        tau = verify_tau_equivalences(qa, strings)
        result["tau"] = tau.to_dict()
        ok &= tau.passed
    elif check_C1(qa):
        tau = verify_tau_equivalences(qa, enumerate_strings(qa))
        result["tau"] = tau.to_dict()
        ok &= tau.passed
    result["passed"] = ok
    if args.json:
        out.write(_dump(result))
    else:
        out.write(f"colocal: {'yes' if rep.colocal else 'no'}\n")
        if "main_theorem" in result:
            mt = result["main_theorem"]
            if mt["passed"]:
                out.write(f"main theorem: pass ({mt['brute_force_size']} = {mt['structural_size']})\n")
            else:
                out.write(f"main theorem: FAIL ({mt['error']})\n")
        if "partition" in result:
            out.write(f"socle classes (M1-M3): {'pass' if result['partition']['passed'] else 'FAIL'}\n")
        if "tau" in result:
            out.write(f"tau equivalences: {'pass' if result['tau']['passed'] else 'FAIL'}\n")
            for v in result["tau"]["violations"]:
                out.write(f"  {v}\n")
        out.write(f"verdict: {'pass' if ok else 'FAIL'}\n")
    return EXIT_OK if ok else EXIT_MISMATCH


def cmd_strings(args, out) -> int:
    qa = _load(args.file)
    strings = enumerate_strings(qa, max_len=args.max_len)
    mods = [string_module(qa, w).to_dict() for w in strings]
    if args.json:
        out.write(_dump({"count": len(mods), "strings": mods}))
    else:
        for d in mods:
            dv = " ".join(f"{k}:{v}" for k, v in d["dimension_vector"].items())
            out.write(f"{d['string']}\tdim {dv}\tsocle {','.join(d['socle'])}\ttop {','.join(d['top'])}\n")
        out.write(f"{len(mods)} strings\n")
    return EXIT_OK


def cmd_young(args, out) -> int:
    if args.m < 1 or args.n < 1:
        raise InputError("box dimensions must be positive")
    Y = YoungLattice(args.m, args.n, max_size=args.max_size)
    if args.dot:
        if Y.size > args.max_size:
            raise InputError(f"size {Y.size} exceeds --max-size {args.max_size}; no DOT written")
        _write_dot(args.dot, to_dot(Y, name=f"Y{args.m}_{args.n}", max_size=args.max_size))
    if args.json:
        out.write(_dump({"m": args.m, "n": args.n, "size": Y.size, "dot": args.dot}))
    else:
        out.write(f"size {Y.size}\n")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="colocal",
                                description="Colocal-type monomial algebras and their subcategory lattices.")
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp, dot=False):
        sp.add_argument("--json", action="store_true", help="machine-readable output")
        sp.add_argument("--max-size", type=int, default=DEFAULT_MAX_SIZE,
                        help="largest lattice to materialize (default %(default)s)")
        if dot:
            sp.add_argument("--dot", metavar="PATH", help="write the Hasse diagram as DOT")
        return sp

    sp = common(sub.add_parser("analyze", help="check the colocal-type conditions"))
    sp.add_argument("file")
    sp.set_defaults(func=cmd_analyze)

    sp = common(sub.add_parser("lattice", help="factor list and size of the subcategory lattice"), dot=True)
    sp.add_argument("file")
    sp.set_defaults(func=cmd_lattice)

    sp = common(sub.add_parser("verify", help="cross-check both lattice routes and the tau sets"))
    sp.add_argument("file")
    sp.add_argument("--seed", type=int, default=0, help="accepted for reproducibility; checks are exhaustive")
    sp.set_defaults(func=cmd_verify)

    sp = common(sub.add_parser("strings", help="list canonical strings"))
    sp.add_argument("file")
    sp.add_argument("--max-len", type=int, default=None, help="longest string to list")
    sp.set_defaults(func=cmd_strings)

    sp = common(sub.add_parser("young", help="the lattice of partitions in an M x N box"), dot=True)
    sp.add_argument("m", type=int)
    sp.add_argument("n", type=int)
    sp.set_defaults(func=cmd_young)
    return p


def main(argv=None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_INPUT if e.code else EXIT_OK
    if getattr(args, "max_size", 1) < 1:
        err.write("colocal: --max-size must be positive\n")
        return EXIT_INPUT
    try:
        return args.func(args, out)
    except (InputError, InfiniteStringsError, LatticeError) as e:
        err.write(f"colocal: {e}\n")
        return EXIT_INPUT
    except VerificationError as e:
        err.write(f"colocal: verification failed: {e}\n")
        return EXIT_MISMATCH


if __name__ == "__main__":
    sys.exit(main())
