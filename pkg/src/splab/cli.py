"""splab command line: compute invariants, run verification campaigns,
emit sample matrices.  All inputs and outputs are exact-rational JSON.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import io, lab
from .extension import ExtElement, chi_r, chi_s
from .invariants import epsilon, j_of_map, k_of_map, n_of_map, phi, s_of_map
from .maslov import maslov_index, nu_cocycle

_MAP_QUANTITIES = {
    "s": lambda f: s_of_map(f),
    "n": n_of_map,
    "j": j_of_map,
    "k": k_of_map,
}
_PAIR_QUANTITIES = {"phi": phi, "nu": nu_cocycle}


def _load_json(path: str) -> dict:
    return json.loads(Path(path).read_text(encoding="utf-8"))


def _cmd_compute(args) -> int:
    q = args.quantity
    if q in _MAP_QUANTITIES:
        if not args.matrix:
            raise SystemExit(f"compute {q} needs --matrix FILE")
        f = io.map_from_obj(_load_json(args.matrix))
        print(_MAP_QUANTITIES[q](f))
        return 0
    if q in _PAIR_QUANTITIES:
        files = args.matrices or ([args.matrix] if args.matrix else [])
        if len(files) != 2:
            raise SystemExit(f"compute {q} needs --matrices FILE FILE")
        f1, f2 = (io.map_from_obj(_load_json(p)) for p in files)
        print(_PAIR_QUANTITIES[q](f1, f2))
        return 0
    lagrangians = [io.lagrangian_from_obj(_load_json(p)) for p in args.lagrangians or []]
    if q == "eps":
        if len(lagrangians) != 2:
            raise SystemExit("compute eps needs --lagrangians FILE FILE")
        print(epsilon(*lagrangians))
        return 0
    if q == "mu":
        if len(lagrangians) != 3:
            raise SystemExit("compute mu needs --lagrangians FILE FILE FILE")
        print(maslov_index(*lagrangians))
        return 0
    raise SystemExit(f"unknown quantity {q!r}")


def _cmd_verify(args) -> int:
    params = lab.SampleParams(
        g=args.g,
        seed=args.seed,
        word_length=args.len,
        entry_bound=args.bound,
        integral=not args.rational,
    )
    report = lab.run_campaign(args.campaign, params, args.trials)
    obj = report.to_obj()
    if args.out:
        Path(args.out).write_text(json.dumps(obj, indent=2) + "\n", encoding="utf-8")
    else:
        json.dump(obj, sys.stdout, indent=2)
        print()
    if report.failures:
        print(f"{len(report.failures)} counterexample(s) in {report.trials} trials",
              file=sys.stderr)
    if args.campaign in lab.CONJECTURE_CAMPAIGNS:
        return 0
    return 0 if report.ok else 1


def _cmd_sample(args) -> int:
    params = lab.SampleParams(
        g=args.g,
        seed=args.seed,
        word_length=args.len,
        entry_bound=args.bound,
        integral=not args.rational,
    )
    f = lab.random_sp(params, lab.trial_rng(params.seed, 0))
    json.dump(io.map_to_obj(f), sys.stdout, indent=2)
    print()
    return 0


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="splab")
    sub = ap.add_subparsers(dest="command", required=True)

    pc = sub.add_parser("compute", help="compute one invariant from JSON inputs")
    pc.add_argument("quantity", choices=["s", "n", "j", "k", "eps", "mu", "phi", "nu"])
    pc.add_argument("--matrix", help="matrix JSON file")
    pc.add_argument("--matrices", nargs="+", help="matrix JSON files")
    pc.add_argument("--lagrangians", nargs="+", help="lagrangian JSON files")
    pc.set_defaults(func=_cmd_compute)

    pv = sub.add_parser("verify", help="run a verification campaign")
    pv.add_argument("campaign", choices=sorted(lab.CAMPAIGNS))
    pv.add_argument("--g", type=int, required=True)
    pv.add_argument("--trials", type=int, required=True)
    pv.add_argument("--seed", type=int, required=True)
    pv.add_argument("--len", type=int, default=12)
    pv.add_argument("--bound", type=int, default=2)
    pv.add_argument("--rational", action="store_true",
                    help="sample rational (not integer) matrices")
    pv.add_argument("--out", help="write the report JSON here")
    pv.set_defaults(func=_cmd_verify)

    ps = sub.add_parser("sample", help="emit one random symplectic matrix")
    ps.add_argument("--g", type=int, required=True)
    ps.add_argument("--seed", type=int, required=True)
    ps.add_argument("--len", type=int, default=12)
    ps.add_argument("--bound", type=int, default=2)
    ps.add_argument("--rational", action="store_true")
    ps.set_defaults(func=_cmd_sample)
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    raise SystemExit(main())
