"""Command-line surface: seeded reproducible experiments, JSON run
records, and report rendering.

Every run derives its per-subtask random generators from one master seed
through a documented scheme: the generator for a labelled subtask is
PCG64 seeded with sha256("bettilab:<master>:<label>"), so partial reruns
match full runs and identical configs give byte-identical records.
Records are written to an append-only directory of JSON files named by
content hash; records contain no wall-clock data, keeping reruns
byte-identical (the filesystem carries timestamps if needed).
"""

from __future__ import annotations

import argparse
import hashlib
import json
import os
import sys
from dataclasses import dataclass

import numpy as np

from . import __version__, modp
from .betti import betti_table, brute_force_betti, regularity
from .chow import compare_on_curve, compare_on_quadric, tate_phi, verify_linear_strand
from .curves import (HyperellipticCurve, ParametricCurve, curve_betti_table,
                     gonal_betti_rows, monomial_curve, property_r_sample,
                     random_rational_curve, rational_normal_curve,
                     sample_gamma_points, sample_points)
from .errors import InvariantError
from .points import PointSet
from .predictor import predict, verdict
from .ulrich import line_bundle_on_rational_curve, sheaf_on_quadric


def derive_seed(master: int, label: str) -> int:
    digest = hashlib.sha256(f"bettilab:{master}:{label}".encode()).hexdigest()
    return int(digest[:16], 16)


def rng_for(master: int, label: str) -> np.random.Generator:
    return np.random.Generator(np.random.PCG64(derive_seed(master, label)))


@dataclass(frozen=True)
class RunRecord:
    command: str
    config: dict
    outputs: dict
    agreement: dict
    version: str = __version__

    def canonical_json(self) -> str:
        return json.dumps(
            {"command": self.command, "config": self.config,
             "outputs": self.outputs, "agreement": self.agreement,
             "version": self.version},
            sort_keys=True, separators=(",", ":"))


def store_dir(args) -> str | None:
    if getattr(args, "no_store", False):
        return None
    return args.run_store or os.environ.get("BETTILAB_RUN_STORE") or "runs"


def write_record(record: RunRecord, directory: str | None) -> str | None:
    if directory is None:
        return None
    os.makedirs(directory, exist_ok=True)
    text = record.canonical_json()
    name = hashlib.sha256(text.encode()).hexdigest()[:20] + ".json"
    path = os.path.join(directory, name)
    with open(path, "w") as fh:
        fh.write(text)
    return path


def resolve_primes(args) -> list[int]:
    if getattr(args, "prime", None):
        return [int(q) for q in args.prime]
    count = getattr(args, "primes", 1) or 1
    if getattr(args, "random_primes", False):
        rng = rng_for(args.seed, "primes")
        return [modp.random_prime_31(rng) for _ in range(count)]
    return list(modp.DEFAULT_PRIMES[:count])


def build_curve(kind: str, r: int | None, d: int | None, exponents, p: int,
                seed: int) -> ParametricCurve:
    if kind == "twisted-cubic":
        return rational_normal_curve(3, p)
    if kind == "rnc":
        if r is None:
            raise ValueError("--curve rnc needs --r")
        return rational_normal_curve(r, p)
    if kind == "random":
        if r is None or d is None:
            raise ValueError("--curve random needs --r and --d")
        return random_rational_curve(r, d, p, rng_for(seed, "curve"))
    if kind == "monomial":
        if not exponents:
            raise ValueError("--curve monomial needs --exponents")
        return monomial_curve(tuple(exponents), p)
    raise ValueError(f"unknown curve kind {kind!r}")


def _curve_config(args) -> dict:
    return {"curve": args.curve, "r": getattr(args, "r", None),
            "d": getattr(args, "d", None),
            "exponents": list(args.exponents) if getattr(args, "exponents", None) else None}


def _sample_table(curve, gamma, seed, prime):
    points = sample_points(curve, gamma, rng_for(seed, "points"))
    table = betti_table(points, meta={"sampled": True, "seed": seed,
                                      "prime": prime})
    return points, table


# --- subcommand implementations ---------------------------------------------

def cmd_predict(args) -> RunRecord:
    pred = predict(args.g, args.r, args.d, args.gamma, reg=args.reg)
    print(pred.render())
    return RunRecord("predict",
                     {"g": args.g, "r": args.r, "d": args.d,
                      "gamma": args.gamma, "reg": args.reg},
                     {"prediction": json.loads(pred.to_json())}, {})


def cmd_betti(args) -> RunRecord:
    primes = resolve_primes(args)
    tables = []
    for prime in primes:
        curve = build_curve(args.curve, args.r, args.d, args.exponents,
                            prime, args.seed)
        _, table = _sample_table(curve, args.gamma, args.seed, prime)
        tables.append(table)
    agree = all(t.same_table(tables[0]) for t in tables)
    if args.format == "csv":
        print(tables[0].to_csv(), end="")
    else:
        print(tables[0].render())
    print(f"primes: {primes}  agreement: {agree}")
    return RunRecord("betti",
                     {**_curve_config(args), "gamma": args.gamma,
                      "seed": args.seed, "primes": primes},
                     {"tables": [json.loads(t.to_json()) for t in tables]},
                     {"primes": primes, "tables_agree": agree})


def cmd_mrc_check(args) -> RunRecord:
    primes = resolve_primes(args)
    verdicts, tables = [], []
    pred_json = None
    for prime in primes:
        curve = build_curve(args.curve, args.r, args.d, args.exponents,
                            prime, args.seed)
        curve_table = curve_betti_table(curve)
        reg_c = regularity(curve_table)
        pred = predict(0, curve.r, curve.d, args.gamma, reg=reg_c)
        _, table = _sample_table(curve, args.gamma, args.seed, prime)
        v = verdict(table, pred, curve_table)
        verdicts.append(v)
        tables.append(table)
        pred_json = json.loads(pred.to_json())
    agree = (all(t.same_table(tables[0]) for t in tables)
             and all(v == verdicts[0] for v in verdicts))
    print(tables[0].render())
    print(verdicts[0].render())
    print(f"primes: {primes}  agreement: {agree}")
    return RunRecord("mrc-check",
                     {**_curve_config(args), "gamma": args.gamma,
                      "seed": args.seed, "primes": primes},
                     {"prediction": pred_json,
                      "verdicts": [json.loads(v.to_json()) for v in verdicts],
                      "tables": [json.loads(t.to_json()) for t in tables]},
                     {"primes": primes, "agree": agree})


def cmd_splitting(args) -> RunRecord:
    primes = resolve_primes(args)
    types = []
    for prime in primes:
        curve = build_curve(args.curve, args.r, args.d, args.exponents,
                            prime, args.seed)
        types.append(splitting_type_of(curve))
    agree = all(t == types[0] for t in types)
    print(types[0].render())
    print(f"primes: {primes}  agreement: {agree}")
    return RunRecord("splitting",
                     {**_curve_config(args), "seed": args.seed, "primes": primes},
                     {"type": list(types[0].a), "balanced": types[0].balanced},
                     {"primes": primes, "types_agree": agree})


def splitting_type_of(curve):
    from .curves import splitting_type
    return splitting_type(curve)


def cmd_property_r(args) -> RunRecord:
    prime = resolve_primes(args)[0]
    curve = HyperellipticCurve.random(args.g, prime, rng_for(args.seed, "hyp"))
    freq = property_r_sample(curve, args.r, args.i, args.trials,
                             rng_for(args.seed, f"trials:p={prime}"))
    print(f"generic-vanishing frequency at i={args.i}: {freq:.3f} "
          f"({args.trials} trials, p={prime})")
    return RunRecord("property-r",
                     {"g": args.g, "r": args.r, "i": args.i,
                      "trials": args.trials, "seed": args.seed, "prime": prime},
                     {"frequency": freq}, {"prime": prime})


def cmd_gonal(args) -> RunRecord:
    prime = resolve_primes(args)[0]
    curve = HyperellipticCurve.random(args.g, prime, rng_for(args.seed, "hyp"))
    runs = []
    for sample in range(args.samples):
        pts = sample_gamma_points(curve, args.gamma,
                                  rng_for(args.seed, f"gamma:{sample}:p={prime}"))
        rows = gonal_betti_rows(curve, args.r, pts)
        runs.append(rows)
        print(rows.render())
    diffs_ok = all(r.differences_ok for r in runs)
    zero_majority = (sum(r.all_products_zero for r in runs) * 2 > len(runs))
    print(f"differences exact on all samples: {diffs_ok}; "
          f"product-zero majority: {zero_majority}")
    return RunRecord("gonal",
                     {"g": args.g, "r": args.r, "gamma": args.gamma,
                      "seed": args.seed, "samples": args.samples, "prime": prime},
                     {"rows": [{"u": r.u,
                                "row_u_minus_1": list(r.row_u_minus_1),
                                "row_u": list(r.row_u),
                                "products": list(r.diagonal_products)}
                               for r in runs]},
                     {"differences_ok": diffs_ok,
                      "product_zero_majority": zero_majority, "prime": prime})


def cmd_chow(args) -> RunRecord:
    prime = resolve_primes(args)[0]
    rng = rng_for(args.seed, f"chow:p={prime}")
    if args.curve == "quadric":
        summands = (((0, 1), (1, 0)) if args.rank == 2 else ((0, 1),))
        data = sheaf_on_quadric(summands, prime)
        cm = tate_phi(data)
        report = compare_on_quadric(cm, args.samples, rng)
    else:
        curve = build_curve(args.curve, args.r, args.d, args.exponents,
                            prime, args.seed)
        data = line_bundle_on_rational_curve(curve, curve.d - 1)
        cm = tate_phi(data)
        report = compare_on_curve(cm, curve, args.samples, rng)
    strand_ok = verify_linear_strand(cm, data)
    print(f"matrix: {cm.n} x {cm.n}  skew: {cm.skew}  "
          f"strand composition zero: {strand_ok}")
    print(report.render())
    return RunRecord("chow",
                     {**_curve_config(args), "rank": getattr(args, "rank", None),
                      "samples": args.samples, "seed": args.seed, "prime": prime},
                     {"n": cm.n, "skew": cm.skew,
                      "strand_zero": strand_ok,
                      "report": json.loads(report.to_json())},
                     {"prime": prime, "oracle_agreement": report.ok})


def cmd_oracle_compare(args) -> RunRecord:
    primes = resolve_primes(args)
    results = []
    all_ok = True
    for index in range(args.instances):
        rng = rng_for(args.seed, f"instance:{index}")
        gamma = int(rng.integers(1, args.gamma + 1))
        for prime in primes:
            ps = PointSet.random(args.r, gamma, prime,
                                 rng_for(args.seed, f"pts:{index}"))
            fast = betti_table(ps)
            slow = brute_force_betti(ps)
            ok = fast.same_table(slow)
            all_ok = all_ok and ok
            results.append({"instance": index, "gamma": gamma,
                            "prime": prime, "match": ok})
            print(f"instance {index} gamma={gamma} p={prime}: "
                  f"{'match' if ok else 'MISMATCH'}")
    return RunRecord("oracle-compare",
                     {"r": args.r, "gamma": args.gamma, "seed": args.seed,
                      "instances": args.instances, "primes": primes},
                     {"results": results}, {"all_match": all_ok})


# --- parser ------------------------------------------------------------------

def _add_common(sub, curve: bool = False):
    sub.add_argument("--seed", type=int, default=0)
    sub.add_argument("--primes", type=int, default=1,
                     help="number of default 31-bit primes to run under")
    sub.add_argument("--prime", type=int, action="append",
                     help="explicit prime (repeatable; overrides --primes)")
    sub.add_argument("--random-primes", action="store_true",
                     help="draw seeded random 31-bit primes instead of defaults")
    sub.add_argument("--run-store", default=None,
                     help="run-record directory (env BETTILAB_RUN_STORE, default ./runs)")
    sub.add_argument("--no-store", action="store_true",
                     help="do not write a run record")
    sub.add_argument("--format", choices=("text", "csv"), default="text")
    if curve:
        sub.add_argument("--curve", default="rnc",
                         choices=("rnc", "twisted-cubic", "random", "monomial"))
        sub.add_argument("--r", type=int)
        sub.add_argument("--d", type=int)
        sub.add_argument("--exponents", type=lambda s: [int(x) for x in s.split(",")],
                         help="monomial exponents, e.g. 5,4,1,0")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="bettilab",
        description="exact finite-field experiments on Betti tables of points"
                    " on curves and determinantal/pfaffian Chow forms")
    subs = parser.add_subparsers(dest="command", required=True)

    sp = subs.add_parser("predict", help="closed-form extra-row prediction")
    sp.add_argument("--g", type=int, required=True)
    sp.add_argument("--r", type=int, required=True)
    sp.add_argument("--d", type=int, required=True)
    sp.add_argument("--gamma", type=int, required=True)
    sp.add_argument("--reg", type=int, default=None)
    _add_common(sp)
    sp.set_defaults(func=cmd_predict)

    sb = subs.add_parser("betti", help="Betti table of sampled points on a curve")
    sb.add_argument("--gamma", type=int, required=True)
    _add_common(sb, curve=True)
    sb.set_defaults(func=cmd_betti)

    sm = subs.add_parser("mrc-check", help="sampled table against the prediction")
    sm.add_argument("--gamma", type=int, required=True)
    _add_common(sm, curve=True)
    sm.set_defaults(func=cmd_mrc_check)

    ss = subs.add_parser("splitting", help="splitting type of a rational curve")
    _add_common(ss, curve=True)
    ss.set_defaults(func=cmd_splitting)

    sr = subs.add_parser("property-r", help="generic-vanishing sampling frequency")
    sr.add_argument("--g", type=int, required=True)
    sr.add_argument("--r", type=int, required=True)
    sr.add_argument("--i", type=int, required=True)
    sr.add_argument("--trials", type=int, default=200)
    _add_common(sr)
    sr.set_defaults(func=cmd_property_r)

    sg = subs.add_parser("gonal", help="extra rows via the degree-2 pencil")
    sg.add_argument("--g", type=int, required=True)
    sg.add_argument("--r", type=int, required=True)
    sg.add_argument("--gamma", type=int, required=True)
    sg.add_argument("--samples", type=int, default=2)
    _add_common(sg)
    sg.set_defaults(func=cmd_gonal)

    sc = subs.add_parser("chow", help="matrix of linear forms vs membership oracle")
    sc.add_argument("--samples", type=int, default=100)
    sc.add_argument("--rank", type=int, default=1, choices=(1, 2),
                    help="rank of the quadric sheaf (quadric only)")
    _add_common(sc, curve=True)
    sc.choices = None
    for action in sc._actions:
        if action.dest == "curve":
            action.choices = ("rnc", "twisted-cubic", "random", "monomial", "quadric")
    sc.set_defaults(func=cmd_chow)

    so = subs.add_parser("oracle-compare", help="Koszul engine vs resolution oracle")
    so.add_argument("--r", type=int, required=True)
    so.add_argument("--gamma", type=int, default=12,
                    help="max points per random instance")
    so.add_argument("--instances", type=int, default=5)
    _add_common(so)
    so.set_defaults(func=cmd_oracle_compare)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        record = args.func(args)
    except InvariantError as err:
        print(f"invariant violated: {err}", file=sys.stderr)
        return 1
    path = write_record(record, store_dir(args))
    if path:
        print(f"run record: {path}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
