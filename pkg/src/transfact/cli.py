"""Command-line front end.

Exit status: 0 on success, 1 when a computed report fails (routes disagree,
a b-scan flag is false, a map triple is rejected), 2 on usage errors.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import logging
import sys
from dataclasses import dataclass, field
from fractions import Fraction
from math import factorial
from pathlib import Path

from . import brute as bf, cache, charalg, hurwitz, jackseries, maps
from .core import Partition

log = logging.getLogger("transfact")


@dataclass
class RunConfig:
    command: str
    partitions: dict = field(default_factory=dict)
    factors: list = field(default_factory=list)
    max_weight: int = 4
    genus: int = 0
    workers: int = 1
    cache_dir: Path | None = None
    fmt: str = "text"
    brute: bool = False
    budget: int = bf.DEFAULT_BUDGET.max_tuples
    extra: dict = field(default_factory=dict)

    def __post_init__(self):
        if self.max_weight < 1:
            raise ValueError("max weight must be >= 1")
        if self.workers < 1:
            raise ValueError("worker count must be >= 1")


def fmt_value(x) -> str:
    """Exact decimal / "p/q" text; never floating point."""
    if isinstance(x, bool):
        return "true" if x else "false"
    if isinstance(x, int):
        return str(x)
    if isinstance(x, Fraction):
        return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"
    return str(x)


def _result(query: dict, routes: list[tuple[str, object]]) -> dict:
    values = [fmt_value(v) for _, v in routes]
    return {
        "query": query,
        "value": values[0],
        "routes": [{"name": n, "value": v} for (n, _), v in zip(routes, values)],
        "agreement": len(set(values)) == 1,
    }


# -- command implementations ---------------------------------------------------

def _budget(cfg):
    return bf.SearchBudget(cfg.budget, cfg.workers)


def _cmd_character(cfg):
    lam, theta = cfg.partitions["lam"], cfg.partitions["theta"]
    return _result({"lambda": str(lam), "theta": str(theta)},
                   [("murnaghan-nakayama", charalg.character(lam, theta))])


def _cmd_count(cfg, transitive: bool):
    spec = charalg.FactorizationSpec(cfg.partitions["target"], cfg.factors)
    if transitive:
        routes = [("charalg", charalg.transitive_factorization_count(spec))]
    else:
        routes = [("charalg", charalg.factorization_count(spec))]
    if cfg.brute:
        fn = bf.enumerate_transitive_factorizations if transitive else bf.enumerate_factorizations
        routes.append(("brute", fn(spec, None, _budget(cfg))))
    return _result({"target": str(spec.target), "factors": [str(b) for b in spec.factors],
                    "transitive": transitive}, routes)


def _cmd_maps(cfg):
    lam, mu = cfg.partitions["lam"], cfg.partitions["mu"]
    tau = cfg.partitions.get("tau")
    N = lam.weight
    if tau is None:
        if N % 2:
            raise ValueError("maps need an even number of darts; pass --tau for hypermaps")
        tau = Partition((2,) * (N // 2))
    routes = [("charalg", maps.count_rooted_hypermaps(lam, mu, tau))]
    if cfg.brute:
        dec = bf.enumerate_decorated_maps(lam, mu, tau, _budget(cfg))
        routes.append(("brute", Fraction(dec, factorial(N - 1))))
    if cfg.extra.get("series") and N <= 6:
        routes.append(("schur-series", jackseries.schur_series(N).coefficient(lam, mu, tau)))
    return _result({"lambda": str(lam), "mu": str(mu), "tau": str(tau)}, routes)


def _cmd_hurwitz(cfg):
    alpha, g = cfg.partitions["alpha"], cfg.genus
    routes = []
    if g == 0:
        routes.append(("closed-form", hurwitz.hurwitz_g0_closed(alpha)))
        routes.append(("join-cut", hurwitz.joincut_table(alpha.weight).hurwitz(alpha)))
    routes.append(("character", hurwitz.hurwitz_char(alpha, g)))
    if cfg.brute:
        routes.append(("brute", hurwitz.hurwitz_brute(alpha, g, _budget(cfg))))
    q = hurwitz.HurwitzQuery(alpha, g)
    return _result({"alpha": str(alpha), "genus": g, "r": hurwitz.transposition_count(q)}, routes)


def _cmd_double(cfg):
    alpha, beta, g = cfg.partitions["alpha"], cfg.partitions["beta"], cfg.genus
    routes = [("character", hurwitz.double_hurwitz(alpha, beta, g))]
    if cfg.brute:
        routes.append(("brute", hurwitz.double_hurwitz_brute(alpha, beta, g, _budget(cfg))))
    q = hurwitz.HurwitzQuery(alpha, g, beta)
    return _result({"alpha": str(alpha), "beta": str(beta), "genus": g,
                    "r": hurwitz.transposition_count(q)}, routes)


def _cmd_joincut(cfg):
    table = hurwitz.joincut_table(cfg.max_weight)
    rows = []
    for alpha, value in table.rows():
        closed = hurwitz.hurwitz_g0_closed(alpha)
        rows.append({"partition": str(alpha), "genus": 0, "value": fmt_value(value),
                     "closed_form": fmt_value(closed), "agreement": value == closed})
    return {"query": {"max_weight": cfg.max_weight}, "rows": rows,
            "agreement": all(r["agreement"] for r in rows)}


def _cmd_bscan(cfg):
    reports = jackseries.b_conjecture_scan(cfg.max_weight)
    recs = [r.to_json() for r in reports]
    return {"query": {"max_weight": cfg.max_weight}, "records": recs,
            "passed": sum(r.passed for r in reports), "total": len(reports),
            "agreement": all(r.passed for r in reports)}


def _cmd_psi(cfg):
    lam, mu, tau = (cfg.partitions[k] for k in ("lam", "mu", "tau"))
    n = lam.weight
    if not n == mu.weight == tau.weight:
        coeff = jackseries.AlphaRational()
    else:
        coeff = jackseries.psi_series(n).coefficient(lam, mu, tau)
        if not isinstance(coeff, jackseries.AlphaRational):
            coeff = jackseries.AlphaRational.const(coeff)
    rep = jackseries.b_report((lam, mu, tau), coeff)
    out = _result({"lambda": str(lam), "mu": str(mu), "tau": str(tau)},
                  [("psi", coeff.format("a"))])
    out["b_polynomial"] = rep.to_json()["b_polynomial"]
    out["at_alpha_1"] = fmt_value(coeff(1))
    out["at_alpha_2"] = fmt_value(coeff(2))
    out["agreement"] = rep.passed or coeff.is_zero()
    return out


def _cmd_validate(cfg):
    e = cfg.extra
    try:
        t = maps.validate_triple(e["nu"], e["eps"], e["phi"], hypermap=e.get("hypermap", False))
    except maps.TripleRejected as err:
        return {"query": {"nu": e["nu"], "eps": e["eps"], "phi": e["phi"]}, "value": "rejected",
                "reason": err.invariant, "message": str(err), "routes": [], "agreement": False}
    return _result({**t.to_text(), "hypermap": t.hypermap}, [("genus", maps.map_genus(t))])


def _cmd_lagrange(cfg):
    rep = hurwitz.lagrange_consistency_check(cfg.max_weight)
    out = {"query": {"max_weight": cfg.max_weight}, "value": fmt_value(rep.passed),
           "routes": [], "agreement": rep.passed}
    if rep.mismatch:
        n, mono, lhs, rhs = rep.mismatch
        out["mismatch"] = {"degree": n, "monomial": str(mono), "lhs": fmt_value(lhs),
                           "rhs": fmt_value(rhs)}
    return out


COMMANDS = {
    "character": _cmd_character,
    "count-fact": lambda c: _cmd_count(c, False),
    "count-transitive": lambda c: _cmd_count(c, True),
    "maps": _cmd_maps,
    "hurwitz": _cmd_hurwitz,
    "double-hurwitz": _cmd_double,
    "joincut-table": _cmd_joincut,
    "b-scan": _cmd_bscan,
    "psi-coeff": _cmd_psi,
    "validate-map": _cmd_validate,
    "lagrange-check": _cmd_lagrange,
}


# -- rendering ---------------------------------------------------------------------

def render(result: dict, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(result, indent=2) + "\n"
    buf = io.StringIO()
    if fmt == "csv":
        w = csv.writer(buf, lineterminator="\n")
        if "rows" in result:
            w.writerow(["partition", "genus", "value"])
            for r in result["rows"]:
                w.writerow([r["partition"], r["genus"], r["value"]])
        elif "records" in result:
            w.writerow(["lambda", "mu", "tau", "b_polynomial", "passed"])
            for r in result["records"]:
                ok = r["is_polynomial"] and r["integer_coefficients"] and r["nonnegative_coefficients"]
                w.writerow([r["lambda"], r["mu"], r["tau"], " ".join(r["b_polynomial"]), fmt_value(ok)])
        else:
            w.writerow(["route", "value"])
            for r in result["routes"]:
                w.writerow([r["name"], r["value"]])
        return buf.getvalue()
    if "rows" in result:
        for r in result["rows"]:
            buf.write(f"{r['partition']}\t{r['value']}\n")
    elif "records" in result:
        for r in result["records"]:
            if r["b_polynomial"] and r["b_polynomial"] != ["0"]:
                buf.write(f"{r['lambda']} {r['mu']} {r['tau']}\t{r['value']}\n")
        buf.write(f"{result['passed']}/{result['total']} triples pass\n")
    else:
        buf.write(f"{result['value']}\n")
        if "reason" in result:
            buf.write(f"# {result['reason']}: {result['message']}\n")
        if len(result["routes"]) > 1:
            for r in result["routes"]:
                buf.write(f"# {r['name']}: {r['value']}\n")
            buf.write(f"# agreement: {fmt_value(result['agreement'])}\n")
    return buf.getvalue()


def run(cfg: RunConfig, out=None) -> int:
    out = out or sys.stdout
    cache_dir = cfg.cache_dir or cache.default_cache_dir()
    if cache_dir is not None:
        status = cache.load(cache_dir)
        log.info("cache %s: %s", cache_dir, status)
    try:
        result = COMMANDS[cfg.command](cfg)
    except bf.BudgetExceeded as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    out.write(render(result, cfg.fmt))
    if cache_dir is not None:
        cache.store(cache_dir)
    return 0 if result.get("agreement", True) else 1


# -- argument parsing ----------------------------------------------------------------

def _partition_arg(text: str) -> Partition:
    try:
        return Partition.parse(text)
    except ValueError as e:
        raise argparse.ArgumentTypeError(str(e)) from None


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", dest="fmt", choices=["text", "json", "csv"], default="text")
    common.add_argument("--cache-dir", type=Path, default=None,
                        help=f"persistent cache directory (default: ${cache.ENV_VAR})")
    common.add_argument("--workers", type=int, default=1)
    common.add_argument("--budget", type=int, default=bf.DEFAULT_BUDGET.max_tuples,
                        help="maximum tuples a brute-force search may visit")
    common.add_argument("--brute", action="store_true", help="add the exhaustive-search route")

    p = argparse.ArgumentParser(prog="transfact", description=__doc__.splitlines()[0])
    p.add_argument("-v", "--verbose", action="store_true")
    sub = p.add_subparsers(dest="command", required=True)
    P = _partition_arg

    s = sub.add_parser("character", parents=[common], help="irreducible character value")
    s.add_argument("--lam", type=P, required=True)
    s.add_argument("--theta", type=P, required=True)

    for name in ("count-fact", "count-transitive"):
        s = sub.add_parser(name, parents=[common], help="(transitive) factorization count")
        s.add_argument("--target", type=P, required=True)
        s.add_argument("--factors", type=P, nargs="*", default=[])

    s = sub.add_parser("maps", parents=[common], help="rooted maps / hypermaps")
    s.add_argument("--lam", type=P, required=True, help="vertex degrees")
    s.add_argument("--mu", type=P, required=True, help="face degrees")
    s.add_argument("--tau", type=P, default=None, help="edge class (default [2,...,2])")
    s.add_argument("--series", action="store_true", help="add the Schur-series route")

    s = sub.add_parser("hurwitz", parents=[common], help="Hurwitz number H^g_alpha")
    s.add_argument("--alpha", type=P, required=True)
    s.add_argument("--genus", type=int, default=0)

    s = sub.add_parser("double-hurwitz", parents=[common], help="double Hurwitz number")
    s.add_argument("--alpha", type=P, required=True)
    s.add_argument("--beta", type=P, required=True)
    s.add_argument("--genus", type=int, default=0)

    s = sub.add_parser("joincut-table", parents=[common], help="genus-0 Hurwitz table")
    s.add_argument("--max-weight", type=int, default=6)

    s = sub.add_parser("b-scan", parents=[common], help="b-polynomial scan of the Jack series")
    s.add_argument("--max-weight", type=int, default=5)

    s = sub.add_parser("psi-coeff", parents=[common], help="one coefficient of the Jack series")
    s.add_argument("--lam", type=P, required=True)
    s.add_argument("--mu", type=P, required=True)
    s.add_argument("--tau", type=P, required=True)

    s = sub.add_parser("validate-map", parents=[common], help="check a (nu, eps, phi) triple")
    s.add_argument("--nu", required=True)
    s.add_argument("--eps", required=True)
    s.add_argument("--phi", required=True)
    s.add_argument("--hypermap", action="store_true")

    s = sub.add_parser("lagrange-check", parents=[common], help="change-of-variables identity")
    s.add_argument("--max-weight", type=int, default=6)
    return p


def config_from_args(ns: argparse.Namespace) -> RunConfig:
    parts = {k: getattr(ns, k) for k in ("lam", "theta", "mu", "tau", "alpha", "beta", "target")
             if getattr(ns, k, None) is not None}
    extra = {k: getattr(ns, k) for k in ("nu", "eps", "phi", "hypermap", "series") if hasattr(ns, k)}
    return RunConfig(
        command=ns.command, partitions=parts, factors=list(getattr(ns, "factors", []) or []),
        max_weight=getattr(ns, "max_weight", 4), genus=getattr(ns, "genus", 0),
        workers=ns.workers, cache_dir=ns.cache_dir, fmt=ns.fmt, brute=ns.brute,
        budget=ns.budget, extra=extra,
    )


def main(argv=None) -> int:
    parser = build_parser()
    ns = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if ns.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    try:
        cfg = config_from_args(ns)
        for b in cfg.factors:
            if b.weight != cfg.partitions.get("target", b).weight:
                raise ValueError(f"factor {b} has the wrong weight")
        return run(cfg)
    except ValueError as e:
        parser.error(str(e))


if __name__ == "__main__":
    sys.exit(main())
