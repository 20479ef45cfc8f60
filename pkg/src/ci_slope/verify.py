"""Grid sweep of every identity and oracle pairing in the package.

``run_verification`` returns a plain dict so the CLI can serialize it as is.
"""

import os
import random
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations_with_replacement

from . import chow_ring as cr
from .errors import DomainError
from .exact_arith import format_rational, sigma_closed, sigma_direct, sigma_recursive
from .fibration_invariants import (
    A_coefficients,
    FibrationConfig,
    chi_incl_excl,
    eprime,
    genus,
    invariants_closed,
    k2_chow,
    lambda_nd,
    uvr,
)
from .oracles import a_coeffs_bruteforce, koszul_ch_bruteforce, pushforward_degree_rr
from .singularity_calc import SingularityInput, check_theorem, equivalent_coefficient, margin_identity
from .slope_elimination import eliminate, round_trip

GRID_ENV = "CI_SLOPE_GRID"
DEFAULT_GRID = {"n": (2, 5), "d": (2, 6), "m": (5, 10, 100)}

ADE = {"A1": 1, "A2": 2, "A3": 3, "A4": 4, "D4": 4, "D5": 5, "E6": 6, "E7": 7, "E8": 8}


def parse_range(text: str) -> tuple:
    """``"2..5"`` -> ``(2, 5)``; a single integer gives a one-point range."""
    text = text.strip()
    if ".." in text:
        lo, hi = text.split("..", 1)
        lo, hi = int(lo), int(hi)
    else:
        lo = hi = int(text)
    if lo > hi:
        raise ValueError(f"empty range {text!r}")
    return lo, hi


def parse_list(text: str) -> tuple:
    return tuple(int(x) for x in text.split(",") if x.strip())


def grid_from_env(environ=None) -> dict:
    """Default grid, overridden by e.g. ``CI_SLOPE_GRID="n=2..4;d=2..5;m=5,10"``."""
    environ = os.environ if environ is None else environ
    grid = dict(DEFAULT_GRID)
    spec = environ.get(GRID_ENV, "").strip()
    if not spec:
        return grid
    for part in spec.split(";"):
        if not part.strip():
            continue
        key, _, value = part.partition("=")
        key = key.strip()
        if key in ("n", "d"):
            grid[key] = parse_range(value)
        elif key == "m":
            grid[key] = parse_list(value)
        else:
            raise ValueError(f"unknown grid key {key!r} in {GRID_ENV}")
    return grid


def _fmt(x):
    if isinstance(x, Fraction):
        return format_rational(x)
    if isinstance(x, (list, tuple)):
        return [_fmt(v) for v in x]
    return x


@dataclass
class _Collector:
    counts: dict = field(default_factory=dict)
    failures: list = field(default_factory=list)

    def check(self, prop: str, point, ok: bool, expected=None, got=None):
        entry = self.counts.setdefault(prop, {"checked": 0, "failed": 0, "skipped": 0})
        entry["checked"] += 1
        if not ok:
            entry["failed"] += 1
            self.failures.append(
                {"property": prop, "point": _fmt(point), "expected": _fmt(expected), "got": _fmt(got)}
            )

    def skip(self, prop: str):
        entry = self.counts.setdefault(prop, {"checked": 0, "failed": 0, "skipped": 0})
        entry["skipped"] += 1


def _sample_configs(n: int, d: int, rng: random.Random, count: int):
    for _ in range(count):
        yield FibrationConfig(
            n=n,
            d=d,
            b=rng.randint(0, 2),
            degE=rng.randint(-2, 3),
            a=tuple(rng.randint(-2, 2) for _ in range(n - 1)),
        )


def _check_combinatorics(col: _Collector, grid: dict):
    for m in range(1, 9):
        for l in range(11):
            direct = sigma_direct(m, l)
            col.check("sigma_direct=recursive", (m, l), direct == sigma_recursive(m, l), direct, sigma_recursive(m, l))
            if l <= m + 2:
                col.check("sigma_direct=closed", (m, l), direct == sigma_closed(m, l), direct, sigma_closed(m, l))
    n_lo, n_hi = grid["n"]
    d_lo, d_hi = grid["d"]
    for n in range(n_lo, max(n_hi, 7) + 1):
        for d in range(1, max(d_hi, 8) + 1):
            closed, brute = A_coefficients(n, d), a_coeffs_bruteforce(n, d)
            col.check("A_closed=bruteforce", (n, d), closed == brute, brute, closed)
            col.check("genus_integral", (n, d), d ** (n - 1) * eprime(n, d) % 2 == 0)
    for n in range(n_lo, n_hi + 1):
        for d in range(d_lo, d_hi + 1):
            if eprime(n, d) <= 0 or (n, d) == (2, 2):
                col.skip("lambda_two_forms")
                continue
            _, _, r = uvr(n, d, 1)
            lam = lambda_nd(n, d)
            alt = (d - 1) * eprime(n, d) / r
            col.check("lambda_two_forms", (n, d), lam == alt, lam, alt)


def _check_fibrations(col: _Collector, grid: dict, rng: random.Random, per_point: int):
    for n in range(grid["n"][0], grid["n"][1] + 1):
        for d in range(grid["d"][0], grid["d"][1] + 1):
            for cfg in _sample_configs(n, d, rng, per_point):
                point = (cfg.n, cfg.d, cfg.b, cfg.degE, list(cfg.a))
                rep = invariants_closed(cfg)
                if rep.lambda_ is None:
                    col.skip("slope_equality")
                else:
                    col.check("slope_equality", point, rep.slope_equality, rep.lambda_ * rep.chi, rep.K2)
                kc = k2_chow(cfg)
                col.check("k2_chow=closed", point, kc == rep.K2, rep.K2, kc)
                expected = rep.chi + (genus(n, d) - 1) * (cfg.b - 1)
                got = chi_incl_excl(cfg, 0)
                col.check("chi_incl_excl=closed", point, got == expected, expected, got)


def _check_koszul(col: _Collector, grid: dict):
    avals = (-2, 0, 1)
    for n in range(grid["n"][0], grid["n"][1] + 1):
        for d in range(grid["d"][0], grid["d"][1] + 1):
            spec = cr.RingSpec(n, 1)
            for a in combinations_with_replacement(avals, n - 1):
                rhos = [cr.ChowClass.divisor(spec, d, ai) for ai in a]
                k = cr.koszul_ch(rhos)
                col.check("koszul=ch_OX_closed", (n, d, list(a)), k == cr.ch_OX_closed(rhos))
                col.check("koszul=bruteforce", (n, d, list(a)), k == koszul_ch_bruteforce(rhos))
                rhos_c = rhos + [cr.ChowClass.divisor(spec, max(eprime(n, d), 1), 1)]
                kc = cr.koszul_ch(rhos_c)
                col.check("koszul=ch_OC_closed", (n, d, list(a)), kc == cr.ch_OC_closed(rhos_c))
                s = sum(rhos_c, cr.ChowClass.zero(spec))
                prod = cr.ChowClass.one(spec)
                for r in rhos_c:
                    prod = prod * r
                top = cr.evaluate_top(kc)
                expected = cr.evaluate_top(s * prod) * Fraction(-1, 2)
                col.check("ch_OC_top_degree", (n, d, list(a)), top == expected, expected, top)


def _check_grr(col: _Collector, grid: dict):
    for n in range(grid["n"][0], min(grid["n"][1], 4) + 1):
        for d in range(grid["d"][0], min(grid["d"][1], 5) + 1):
            ep = eprime(n, d)
            if ep <= 0:
                col.skip("grr=uv")
                continue
            guard = (n - 1) * d
            for m in (1, 2, 3):
                e = m * ep
                u, v, _ = uvr(n, d, m)
                gu = cr.grr_pushforward_degree(n, d, e, 1, [0] * (n - 1))
                gv = cr.grr_pushforward_degree(n, d, e, 0, [1] + [0] * (n - 2))
                col.check("grr=uv", (n, d, e), (gu, gv) == (u, v), [u, v], [gu, gv])
                for e_rr in sorted({e, guard, guard + 1}):
                    if e_rr < guard:
                        continue
                    for degE, a in ((1, (0,) * (n - 1)), (2, tuple(range(-1, n - 2)))):
                        cfg = FibrationConfig(n, d, 1, degE, a)
                        grr = cr.grr_pushforward_degree(n, d, e_rr, degE, list(a))
                        rr = pushforward_degree_rr(cfg, e_rr)
                        col.check("grr=riemann_roch", (n, d, e_rr, degE, list(a)), grr == rr, rr, grr)


def _check_elimination(col: _Collector, grid: dict, report: dict):
    for n in range(grid["n"][0], grid["n"][1] + 1):
        for d in range(grid["d"][0], grid["d"][1] + 1):
            if eprime(n, d) <= 0:
                col.skip("elimination_lambda")
                continue
            lam = lambda_nd(n, d)
            seen = set()
            for m in grid["m"]:
                try:
                    res = eliminate(n, d, m)
                except DomainError as exc:
                    col.check("elimination_defined", (n, d, m), False, "defined", str(exc))
                    continue
                point = (n, d, m)
                seen.add(res.lambda_coeff)
                col.check("elimination_lambda", point, res.lambda_coeff == lam, lam, res.lambda_coeff)
                positive = res.p1 > 0 and res.p2 > 0 and res.p3 > 0
                col.check("elimination_positive", point, positive, "p1, p2, p3 > 0", [res.p1, res.p2, res.p3])
                col.check("elimination_round_trip", point, all(r.is_zero() for r in round_trip(res)))
                report.setdefault("c_coeff", {})[f"{n},{d},{m}"] = format_rational(res.c_coeff)
                report.setdefault("lambda_coeff", {})[f"{n},{d},{m}"] = format_rational(res.lambda_coeff)
            col.check("elimination_m_independent", (n, d), len(seen) <= 1, 1, len(seen))


def random_singularity(rng: random.Random) -> SingularityInput:
    """Random input satisfying all consistency constraints."""
    while True:
        emb = rng.randint(3, 8)
        pg = rng.randint(0, 30)
        exc = rng.randint(1, 20)
        mu0 = rng.randint(0, min(2 * pg, exc + 1))
        K2 = rng.randint(-3 * pg - 5, 5)
        try:
            inp = SingularityInput(emb, pg, K2, exc, mu0)
            check_theorem(inp)
        except DomainError:
            continue
        return inp


def _check_singularities(col: _Collector, rng: random.Random, samples: int):
    for name, rank in ADE.items():
        rep = check_theorem(SingularityInput(3, 0, 0, rank, 0))
        col.check("ade_equality", name, rep.sigma == -rank and rep.equality, -rank, rep.sigma)
    col.check("hypersurface_coefficient_6", 3, equivalent_coefficient(3) == 6, 6, equivalent_coefficient(3))
    for _ in range(samples):
        inp = random_singularity(rng)
        rep = check_theorem(inp)
        point = [inp.emb_dim, inp.pg, inp.K2, inp.exc_count, inp.mu0]
        agree = (rep.satisfied, rep.equality) == (rep.equiv_satisfied, rep.equiv_equality)
        col.check("two_forms_agree", point, agree)
        col.check("margin_identity", point, rep.margin == margin_identity(inp), margin_identity(inp), rep.margin)
        col.check("sigma_via_durfee", point, rep.sigma == 4 * inp.pg - inp.mu0 - rep.mu, 4 * inp.pg - inp.mu0 - rep.mu, rep.sigma)


def run_verification(grid: dict = None, seed: int = 0, configs_per_point: int = 6, singularity_samples: int = 300) -> dict:
    grid = grid_from_env() if grid is None else grid
    rng = random.Random(seed)
    col = _Collector()
    extra: dict = {}
    _check_combinatorics(col, grid)
    _check_fibrations(col, grid, rng, configs_per_point)
    _check_koszul(col, grid)
    _check_grr(col, grid)
    _check_elimination(col, grid, extra)
    _check_singularities(col, rng, singularity_samples)
    properties = {
        name: {**counts, "passed": counts["failed"] == 0} for name, counts in sorted(col.counts.items())
    }
    nonzero_c = sorted(k for k, v in extra.get("c_coeff", {}).items() if v != "0")
    return {
        "grid": {"n": list(grid["n"]), "d": list(grid["d"]), "m": list(grid["m"])},
        "properties": properties,
        "failures": col.failures,
        "all_passed": not col.failures,
        "c_coeff": extra.get("c_coeff", {}),
        "c_coeff_nonzero_points": nonzero_c,
        "lambda_coeff": extra.get("lambda_coeff", {}),
    }
