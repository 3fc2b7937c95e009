"""Command-line front end: ``z``, ``verify`` and ``bench``.

Every exact value is printed as a ``p/q`` string. Standard output depends
only on the arguments (seeds included); wall-clock timings for ``z`` and
``verify`` go to standard error so that repeated runs are byte-identical.

Exit codes: 0 success, 1 a failed check or a singular point, 2 usage error.
"""
from __future__ import annotations

import argparse
import json
import random
import sys
import time
from dataclasses import dataclass

from . import determinant as det
from .fock import f_free_at, monomial_state, vacuum_pairing, verify_main
from .kernel import format_rational, parse_rational
from .partitions import enumerate_box, frobenius
from .plucker import (
    GammaBasis,
    admissible_multi_hook,
    admissible_two_hook,
    c_of,
    hook_sigma_sequence,
    laplace_plucker,
    multi_hook_relation,
    multi_hook_terms,
    plucker_terms,
    same_relation,
    two_hook_relation,
    two_hook_terms,
)
from .sixvertex import MAX_BRUTE_N, RapidityPoint, check_korepin, count_dwbc, random_point, z_bruteforce
from .symmetric import character_poly

METHODS = ("brute", "izergin", "lascoux", "schur", "cauchy-binet", "free-restricted", "fermionic")
SUITES = ("korepin", "boson-fermion", "plucker", "main", "agreement", "all")
SEED_LIMIT = 2**64


class UsageError(Exception):
    pass


@dataclass(frozen=True)
class RunConfig:
    command: str
    N: int
    method: str | None = None
    seed: int = 0
    s: tuple | None = None
    t: tuple | None = None
    r: object = None
    suite: str | None = None
    points: int = 3
    fmt: str = "json"
    n_min: int = 1

    def rng(self) -> random.Random:
        return random.Random(self.seed)

    def point(self) -> RapidityPoint:
        """The explicit point if one was given, else the first seeded random point."""
        if self.s is not None:
            return RapidityPoint(self.s, self.t, self.r)
        return random_point(self.N, self.rng())

    def random_points(self, N: int | None = None) -> list[RapidityPoint]:
        rng = self.rng()
        return [random_point(N or self.N, rng) for _ in range(self.points)]


# -- z -------------------------------------------------------------------------


def evaluate(method: str, p: RapidityPoint):
    """Value of the chosen method in its own normalisation."""
    if method == "brute":
        if p.N > MAX_BRUTE_N:
            raise UsageError(f"brute force is limited to N <= {MAX_BRUTE_N}")
        return z_bruteforce(p)
    if method == "izergin":
        return det.z_izergin(p)
    if method == "lascoux":
        return det.z_lascoux(p)
    if method == "schur":
        return det.z_schur_expansion(p)
    if method == "cauchy-binet":
        return det.z_cauchy_binet(p)
    if method == "free-restricted":
        return det.z_free_restricted(p)
    if method == "fermionic":
        table = det.coefficient_table(p.v, p.q)
        if table.c_phi == 0:
            raise det.SingularPointError("c_phi vanishes at this (v, q)")
        return det.c_prefactor(p) * table.c_phi * f_free_at(table, p.u)
    raise UsageError(f"unknown method {method!r}")


def cmd_z(cfg: RunConfig) -> tuple[dict, int]:
    p = cfg.point()
    if cfg.method == "izergin" and p.singular_pair():
        raise det.SingularPointError(f"Izergin's formula is singular: {p.singular_pair()}")
    value = evaluate(cfg.method, p)
    kappa = det.kappa_closed_form(p)
    # brute force already sums sinh weights; the determinant routes need kappa
    sinh_sum = value if cfg.method == "brute" else kappa * value
    report = {
        "N": p.N,
        "method": cfg.method,
        "seed": None if cfg.s is not None else cfg.seed,
        "point": p.to_json(),
        "value": format_rational(value),
        "kappa": format_rational(kappa),
        "sinh_weight_sum": format_rational(sinh_sum),
        "determinant_form": format_rational(sinh_sum / kappa),
    }
    return report, 0


def _z_text(report: dict) -> str:
    lines = [report["value"]]
    for key in ("method", "N", "seed", "kappa", "sinh_weight_sum", "determinant_form"):
        lines.append(f"{key}: {report[key]}")
    pt = report["point"]
    lines.append(f"s: {','.join(pt['s'])}  t: {','.join(pt['t'])}  r: {pt['r']}")
    return "\n".join(lines)


# -- verify --------------------------------------------------------------------


def _check(name: str, ok: bool, **details) -> dict:
    return {"name": name, "pass": bool(ok), "details": details}


def suite_korepin(cfg: RunConfig) -> list[dict]:
    if cfg.N > 6:
        raise UsageError("the Korepin suite runs for N <= 6")
    rep = check_korepin(cfg.N, cfg.random_points(), rng=cfg.rng())
    return [_check(name, ok, points=cfg.points) for name, ok in rep.checks()]


def suite_boson_fermion(cfg: RunConfig) -> list[dict]:
    if cfg.N > 5:
        raise UsageError("the boson-fermion suite runs for N <= 5")
    M = det.time_count(cfg.N)
    failures = []
    lams = enumerate_box(cfg.N)
    for lam in lams:
        sign = -1 if sum(frobenius(lam).b_parts) % 2 else 1
        if vacuum_pairing(monomial_state(lam), M) != character_poly(lam, M) * sign:
            failures.append(lam.to_json())
    return [_check("boson-fermion", not failures, partitions=len(lams), failures=failures)]


def suite_plucker(cfg: RunConfig) -> list[dict]:
    N = cfg.N
    if not 2 <= N <= 6:
        raise UsageError("the Plücker suite runs for 2 <= N <= 6")
    bases = [GammaBasis(p.v, p.q) for p in cfg.random_points()]
    rng = cfg.rng()
    out = []

    fuzz_bad = 0
    for _ in range(100):
        mus = [rng.randint(1, 2 * N + 2) for _ in range(N - 1)]
        nus = [rng.randint(1, 2 * N + 2) for _ in range(N + 1)]
        fuzz_bad += laplace_plucker(mus, nus, bases[0]) != 0
    out.append(_check("plucker-laplace-fuzz", fuzz_bad == 0, tuples=100, failures=fuzz_bad))

    agree = all(
        c_of(lam, b) == det.c_lambda(lam, b.v, b.q) for b in bases for lam in enumerate_box(N)
    )
    out.append(_check("plucker-minor-equals-c-lambda", agree, partitions=len(enumerate_box(N))))

    two = list(admissible_two_hook(N))
    ok = sum(all(two_hook_relation(*h, b) for b in bases) for h in two)
    derived = sum(
        same_relation(plucker_terms(*hook_sigma_sequence(h[:2], h[2:], N), N), two_hook_terms(*h))
        for h in two
    )
    out.append(_check("plucker-two-hook", ok == len(two), relations=len(two), holding=ok))
    out.append(_check("plucker-two-hook-from-laplace", derived == len(two), relations=len(two), matching=derived))

    multi = [h for size in range(2, N) for h in admissible_multi_hook(N, size)]
    ok = sum(all(multi_hook_relation(a, b, bb) for bb in bases) for a, b in multi)
    derived = sum(
        same_relation(plucker_terms(*hook_sigma_sequence(a, b, N), N), multi_hook_terms(a, b))
        for a, b in multi
    )
    out.append(_check("plucker-multi-hook", ok == len(multi), relations=len(multi), holding=ok))
    out.append(_check("plucker-multi-hook-from-laplace", derived == len(multi), relations=len(multi), matching=derived))

    if N == 3:
        for name, lhs in _n3_relations().items():
            ok = all(lhs(lambda lam: c_of(lam, b) / c_of([], b)) == 0 for b in bases)
            out.append(_check(f"plucker-n3-{name}", ok))
    return out


def _n3_relations() -> dict:
    """The three N = 3 relations among normalised coefficients, each written as lhs - rhs."""
    return {
        "p1": lambda d: d([1, 1]) * d([2]) - d([1]) * d([2, 1]) + d([2, 2]),
        "p2": lambda d: d([1]) * d([2, 1, 1]) - d([1, 1, 1]) * d([2]) - d([2, 2, 1]),
        "p3": lambda d: d([1, 1, 1]) * d([2, 1]) - d([1, 1]) * d([2, 1, 1]) + d([2, 2, 2]),
    }


def suite_main(cfg: RunConfig) -> list[dict]:
    N = cfg.N
    if N > 5:
        raise UsageError("the main-identity suite runs for N <= 5")
    poly, restricted = [], []
    for p in cfg.random_points():
        rep = verify_main(p.v, p.q, points=[p], polynomial=N <= 4)
        poly.append(rep.polynomial_identity)
        restricted.extend(rep.restricted)
    out = [_check("main-restricted", all(restricted), points=len(restricted))]
    if N <= 4:
        out.append(_check("main-polynomial", all(poly), points=len(poly), times=det.time_count(N)))
    return out


def suite_agreement(cfg: RunConfig) -> list[dict]:
    if cfg.N > MAX_BRUTE_N:
        raise UsageError(f"the agreement suite runs for N <= {MAX_BRUTE_N}")
    pts = cfg.random_points()
    brute = [z_bruteforce(p) for p in pts]
    out = []
    for method in METHODS[1:]:
        if method == "fermionic" and cfg.N > 5:
            continue
        ok = all(det.kappa_closed_form(p) * evaluate(method, p) == z for p, z in zip(pts, brute))
        out.append(_check(f"agreement-brute-{method}", ok, points=len(pts)))
    return out


SUITE_RUNNERS = {
    "korepin": suite_korepin,
    "boson-fermion": suite_boson_fermion,
    "plucker": suite_plucker,
    "main": suite_main,
    "agreement": suite_agreement,
}


def cmd_verify(cfg: RunConfig) -> tuple[dict, int]:
    names = [s for s in SUITE_RUNNERS if cfg.suite in (s, "all")]
    checks = []
    for name in names:
        if cfg.suite == "all" and name == "plucker" and cfg.N < 2:
            continue
        checks.extend(SUITE_RUNNERS[name](cfg))
    checks.sort(key=lambda c: c["name"])
    report = {"suite": cfg.suite, "N": cfg.N, "seed": cfg.seed, "checks": checks}
    return report, 0 if all(c["pass"] for c in checks) else 1


def _verify_text(report: dict) -> str:
    lines = [f"suite {report['suite']}  N={report['N']}  seed={report['seed']}"]
    for c in report["checks"]:
        details = " ".join(f"{k}={v}" for k, v in c["details"].items())
        lines.append(f"{'PASS' if c['pass'] else 'FAIL'} {c['name']} {details}".rstrip())
    passed = sum(c["pass"] for c in report["checks"])
    lines.append(f"{passed}/{len(report['checks'])} checks passed")
    return "\n".join(lines)


# -- bench ---------------------------------------------------------------------


def cmd_bench(cfg: RunConfig) -> tuple[dict, int]:
    methods = cfg.method.split(",") if cfg.method else ["brute", "izergin", "lascoux", "schur", "fermionic"]
    for m in methods:
        if m not in METHODS:
            raise UsageError(f"unknown method {m!r}")
    rows = []
    for m in methods:
        for N in range(cfg.n_min, cfg.N + 1):
            if m == "brute" and N > MAX_BRUTE_N:
                continue
            p = random_point(N, random.Random(cfg.seed))
            start = time.perf_counter()
            value = evaluate(m, p)
            elapsed = time.perf_counter() - start
            rows.append({
                "method": m,
                "N": N,
                "configurations": count_dwbc(N) if m == "brute" else None,
                "value": format_rational(value),
                "seconds": round(elapsed, 6),
            })
    return {"seed": cfg.seed, "rows": rows}, 0


def _bench_text(report: dict) -> str:
    lines = [f"{'method':<16}{'N':>3}{'configs':>10}{'seconds':>12}"]
    for row in report["rows"]:
        configs = "" if row["configurations"] is None else str(row["configurations"])
        lines.append(f"{row['method']:<16}{row['N']:>3}{configs:>10}{row['seconds']:>12.6f}")
    return "\n".join(lines)


# -- argument handling ---------------------------------------------------------


def _rationals(text: str) -> tuple:
    try:
        return tuple(parse_rational(x) for x in text.split(","))
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _seed(text: str) -> int:
    seed = int(text)
    if not 0 <= seed < SEED_LIMIT:
        raise argparse.ArgumentTypeError("seed must be a 64-bit unsigned integer")
    return seed


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="dwkp", description="Domain wall partition functions, exactly.")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, fmt_default):
        p.add_argument("--n", type=int, required=True, help="lattice size N")
        p.add_argument("--seed", type=_seed, default=0, help="seed for random rational rapidities")
        p.add_argument("--format", choices=("json", "text"), default=fmt_default, dest="fmt")

    z = sub.add_parser("z", help="compute Z_N by one method")
    common(z, "text")
    z.add_argument("--method", choices=METHODS, default="izergin")
    z.add_argument("--s", type=_rationals, help="comma-separated s_i = exp(x_i)")
    z.add_argument("--t", type=_rationals, help="comma-separated t_j = exp(y_j)")
    z.add_argument("--r", type=parse_rational, help="r = exp(-mu)")

    v = sub.add_parser("verify", help="run a verification suite")
    common(v, "json")
    v.add_argument("--suite", "--identity", choices=SUITES, default="all", dest="suite")
    v.add_argument("--points", type=int, default=3, help="random rapidity points per check")

    b = sub.add_parser("bench", help="time each method for N = n-min..n")
    common(b, "text")
    b.add_argument("--method", default=None, help="comma-separated methods (default: all main routes)")
    b.add_argument("--n-min", type=int, default=1)
    return parser


def config_from_args(args: argparse.Namespace) -> RunConfig:
    if args.n < 1:
        raise UsageError("--n must be at least 1")
    kw = dict(command=args.command, N=args.n, seed=args.seed, fmt=args.fmt)
    if args.command == "z":
        given = [x is not None for x in (args.s, args.t, args.r)]
        if any(given) and not all(given):
            raise UsageError("--s, --t and --r must be given together")
        if all(given):
            if not len(args.s) == len(args.t) == args.n:
                raise UsageError(f"--s and --t need exactly {args.n} entries each")
            kw.update(s=args.s, t=args.t, r=args.r)
        kw["method"] = args.method
    elif args.command == "verify":
        if args.points < 1:
            raise UsageError("--points must be at least 1")
        kw.update(suite=args.suite, points=args.points)
    else:
        if not 1 <= args.n_min <= args.n:
            raise UsageError("need 1 <= --n-min <= --n")
        kw.update(method=args.method, n_min=args.n_min)
    return RunConfig(**kw)


COMMANDS = {"z": (cmd_z, _z_text), "verify": (cmd_verify, _verify_text), "bench": (cmd_bench, _bench_text)}


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        cfg = config_from_args(args)
        run, as_text = COMMANDS[cfg.command]
        start = time.perf_counter()
        report, code = run(cfg)
        elapsed = time.perf_counter() - start
    except UsageError as exc:
        parser.error(str(exc))
    except ZeroDivisionError as exc:
        parser.error(str(exc))
    except det.SingularPointError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    if cfg.fmt == "json":
        print(json.dumps(report, indent=2, sort_keys=True))
    else:
        print(as_text(report))
    if cfg.command != "bench":
        print(f"elapsed: {elapsed:.3f} s", file=sys.stderr)
    return code


if __name__ == "__main__":
    sys.exit(main())
