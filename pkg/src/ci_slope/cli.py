"""Command line front end.

Exit codes: 0 success, 1 usage/parse error, 2 domain error, 3 internal
cross-check mismatch, 4 verification failure.
"""

import argparse
import json
import sys
from dataclasses import dataclass, field
from fractions import Fraction

from .errors import DomainError, SlopeUndefined
from .exact_arith import format_rational
from .fibration_invariants import (
    FibrationConfig,
    chi_incl_excl,
    eprime,
    genus,
    invariants_closed,
    k2_chow,
    lambda_nd,
)
from .singularity_calc import SingularityInput, check_theorem, margin_identity
from .slope_elimination import eliminate, round_trip
from .verify import grid_from_env, parse_list, parse_range, run_verification

EXIT_OK, EXIT_USAGE, EXIT_DOMAIN, EXIT_MISMATCH, EXIT_VERIFY = 0, 1, 2, 3, 4


class UsageError(Exception):
    pass


@dataclass
class Report:
    command: str
    inputs: dict
    outputs: dict = field(default_factory=dict)
    diagnostics: list = field(default_factory=list)
    exit_code: int = EXIT_OK

    def to_json(self) -> str:
        payload = {
            "command": self.command,
            "inputs": _jsonable(self.inputs),
            "outputs": _jsonable(self.outputs),
            "diagnostics": list(self.diagnostics),
        }
        return json.dumps(payload, sort_keys=True)

    def to_table(self) -> str:
        rows = [("command", self.command)]
        rows += [(f"input.{k}", v) for k, v in _flatten(_jsonable(self.inputs))]
        rows += [(f"output.{k}", v) for k, v in _flatten(_jsonable(self.outputs))]
        rows += [("diagnostic", d) for d in self.diagnostics]
        width = max(len(k) for k, _ in rows)
        return "\n".join(f"{k.ljust(width)}  {_cell(v)}" for k, v in rows)


def _jsonable(x):
    if isinstance(x, Fraction):
        return format_rational(x)
    if isinstance(x, dict):
        return {str(k): _jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [_jsonable(v) for v in x]
    return x


def _flatten(x, prefix=""):
    if isinstance(x, dict):
        for k in sorted(x):
            yield from _flatten(x[k], f"{prefix}{k}.")
    else:
        yield prefix.rstrip("."), x


def _cell(v):
    if isinstance(v, bool) or v is None:
        return json.dumps(v)
    if isinstance(v, list):
        return json.dumps(v, sort_keys=True)
    return str(v)


def _parse_coeffs(text: str) -> tuple:
    try:
        return tuple(int(x) for x in text.split(",")) if text.strip() else ()
    except ValueError:
        raise UsageError(f"malformed --coeffs {text!r}: expected comma-separated integers")


def cmd_slope(n: int, d: int) -> Report:
    rep = Report("slope", {"n": n, "d": d})
    if n < 2 or d < 2:
        raise UsageError("need n >= 2 and d >= 2")
    ep = eprime(n, d)
    rep.outputs.update(eprime=ep, genus=genus(n, d), r=Fraction((d - 1) * ((3 * n - 2) * d - (3 * n + 2)), 24))
    try:
        rep.outputs["lambda"] = lambda_nd(n, d)
    except SlopeUndefined as exc:
        rep.outputs["lambda"] = None
        rep.diagnostics.append(str(exc))
        rep.exit_code = EXIT_DOMAIN
    if ep <= 0:
        rep.diagnostics.append(f"e' = {ep} <= 0: fibers have genus <= 1")
    return rep


def cmd_fibration(n: int, d: int, b: int, deg_e: int, coeffs) -> Report:
    if isinstance(coeffs, str):
        coeffs = _parse_coeffs(coeffs)
    inputs = {"n": n, "d": d, "b": b, "deg_e": deg_e, "coeffs": list(coeffs)}
    if d < 2:
        raise UsageError("need d >= 2")
    try:
        cfg = FibrationConfig(n=n, d=d, b=b, degE=deg_e, a=tuple(coeffs))
    except ValueError as exc:
        raise UsageError(str(exc))
    rep = Report("fibration", inputs)
    inv = invariants_closed(cfg)
    kc = k2_chow(cfg)
    chi_ie = chi_incl_excl(cfg, 0)
    shift = (inv.genus - 1) * (b - 1)
    checks = {"k2_chow_matches": kc == inv.K2, "chi_incl_excl_matches": chi_ie == inv.chi + shift}
    rep.outputs.update(
        K2=inv.K2,
        chi=inv.chi,
        genus=inv.genus,
        eprime=cfg.eprime,
        # null where the slope is undefined
        **{"lambda": inv.lambda_},
        slope_equality=inv.slope_equality,
        chi_OX=chi_ie,
        cross_checks=checks,
    )
    rep.diagnostics.extend(inv.diagnostics)
    if not all(checks.values()):
        rep.diagnostics.append("internal cross-check mismatch")
        rep.exit_code = EXIT_MISMATCH
    return rep


def cmd_singularity(emb_dim: int, pg: int, k2: int, exc: int, mu0: int) -> Report:
    inputs = {"emb_dim": emb_dim, "pg": pg, "k2": k2, "exc": exc, "mu0": mu0}
    rep = Report("singularity", inputs)
    inp = SingularityInput(emb_dim, pg, k2, exc, mu0)
    sr = check_theorem(inp)
    rep.outputs.update(
        mu=sr.mu,
        mu_plus=sr.mu_plus,
        mu_minus=sr.mu_minus,
        mu_zero=sr.mu_zero,
        sigma=sr.sigma,
        chi_top=sr.chi_top,
        bound=sr.bound,
        satisfied=sr.satisfied,
        equality=sr.equality,
        margin=sr.margin,
        equivalent_form={
            "lhs": sr.equiv_lhs,
            "rhs": sr.equiv_rhs,
            "satisfied": sr.equiv_satisfied,
            "equality": sr.equiv_equality,
        },
        convention={
            "emb_dim": emb_dim,
            "denominator": 3 * emb_dim - 5,
            "proof_index": sr.proof_index,
            "proof_denominator": sr.proof_denominator,
        },
    )
    if sr.caption:
        rep.diagnostics.append(sr.caption)
    if margin_identity(inp) != sr.margin:
        rep.diagnostics.append("internal cross-check mismatch: margin identity")
        rep.exit_code = EXIT_MISMATCH
    return rep


def cmd_eliminate(n: int, d: int, m: int) -> Report:
    rep = Report("eliminate", {"n": n, "d": d, "m": m})
    res = eliminate(n, d, m)
    residuals = round_trip(res)
    rep.outputs.update(
        lambda_coeff=res.lambda_coeff,
        p1=res.p1,
        p2=res.p2,
        p3=res.p3,
        c_coeff=res.c_coeff,
        lambda_expected=lambda_nd(n, d),
        round_trip_zero=all(r.is_zero() for r in residuals),
    )
    if res.c_coeff != 0:
        rep.diagnostics.append(f"nonzero c coefficient {format_rational(res.c_coeff)}")
    if not (res.p1 > 0 and res.p2 > 0 and res.p3 > 0):
        rep.diagnostics.append(f"non-positive p coefficient at n={n}, d={d}, m={m}")
    if res.lambda_coeff != lambda_nd(n, d) or not rep.outputs["round_trip_zero"]:
        rep.diagnostics.append("internal cross-check mismatch")
        rep.exit_code = EXIT_MISMATCH
    return rep


def cmd_verify(grid_n=None, grid_d=None, grid_m=None) -> Report:
    try:
        grid = grid_from_env()
        if grid_n is not None:
            grid["n"] = parse_range(grid_n) if isinstance(grid_n, str) else tuple(grid_n)
        if grid_d is not None:
            grid["d"] = parse_range(grid_d) if isinstance(grid_d, str) else tuple(grid_d)
        if grid_m is not None:
            grid["m"] = parse_list(grid_m) if isinstance(grid_m, str) else tuple(grid_m)
    except ValueError as exc:
        raise UsageError(f"bad grid: {exc}")
    if grid["n"][0] < 2 or grid["d"][0] < 2 or not grid["m"] or min(grid["m"]) < 1:
        raise UsageError("grids need n >= 2, d >= 2 and m >= 1")
    result = run_verification(grid)
    rep = Report("verify", {"grid": result["grid"]})
    rep.outputs = {k: v for k, v in result.items() if k != "grid"}
    for f in result["failures"]:
        rep.diagnostics.append(f"FAIL {f['property']} at {f['point']}")
    if result["c_coeff_nonzero_points"]:
        rep.diagnostics.append("nonzero c coefficient at " + ", ".join(result["c_coeff_nonzero_points"]))
    if not result["all_passed"]:
        rep.exit_code = EXIT_VERIFY
    return rep


_BATCH_DEFAULTS = {"fibration": {"b": 0}, "singularity": {"mu0": 0}, "eliminate": {"m": 100}}

_BATCH = {
    "slope": (cmd_slope, ("n", "d")),
    "fibration": (cmd_fibration, ("n", "d", "b", "deg_e", "coeffs")),
    "singularity": (cmd_singularity, ("emb_dim", "pg", "k2", "exc", "mu0")),
    "eliminate": (cmd_eliminate, ("n", "d", "m")),
}


def run_batch(lines) -> tuple:
    """Process newline-delimited JSON requests; returns (output lines, worst exit code)."""
    out, worst = [], EXIT_OK
    for raw in lines:
        if not raw.strip():
            continue
        try:
            req = json.loads(raw)
            cmd = req.get("command")
            if cmd not in _BATCH:
                raise UsageError(f"unknown batch command {cmd!r}")
            fn, keys = _BATCH[cmd]
            fields = {**_BATCH_DEFAULTS.get(cmd, {}), **req}
            missing = [k for k in keys if k not in fields]
            if missing:
                raise UsageError(f"missing fields {missing} for {cmd}")
            kwargs = {k: fields[k] for k in keys}
            rep = _guarded(lambda: fn(**kwargs), cmd, req)
        except (json.JSONDecodeError, UsageError, TypeError, AttributeError) as exc:
            rep = Report("batch", {"line": raw.strip()}, diagnostics=[f"usage: {exc}"], exit_code=EXIT_USAGE)
        out.append(rep.to_json())
        worst = max(worst, rep.exit_code)
    return out, worst


def _guarded(fn, command: str, inputs: dict) -> Report:
    try:
        return fn()
    except UsageError as exc:
        return Report(command, inputs, diagnostics=[f"usage: {exc}"], exit_code=EXIT_USAGE)
    except DomainError as exc:
        return Report(command, inputs, diagnostics=[str(exc)], exit_code=EXIT_DOMAIN)
    except ArithmeticError as exc:
        return Report(command, inputs, diagnostics=[f"internal cross-check mismatch: {exc}"], exit_code=EXIT_MISMATCH)


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="ci-slope", description="Invariants, slope bounds and signature bounds, in exact arithmetic.")
    p.add_argument("--format", choices=("json", "table"), default="json")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    s = sub.add_parser("slope", help="slope bound lambda_{n,d}")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--d", type=int, required=True)

    f = sub.add_parser("fibration", help="K^2 and chi of a complete-intersection family")
    f.add_argument("--n", type=int, required=True)
    f.add_argument("--d", type=int, required=True)
    f.add_argument("--b", type=int, default=0)
    f.add_argument("--deg-e", type=int, required=True, dest="deg_e")
    f.add_argument("--coeffs", type=str, required=True, help="a_1,...,a_{n-1}")

    g = sub.add_parser("singularity", help="signature bound for a surface complete intersection")
    g.add_argument("--emb-dim", type=int, required=True, dest="emb_dim", help="embedding dimension n of (X, o) in C^n")
    g.add_argument("--pg", type=int, required=True)
    g.add_argument("--k2", type=int, required=True)
    g.add_argument("--exc", type=int, required=True)
    g.add_argument("--mu0", type=int, default=0)

    e = sub.add_parser("eliminate", help="coefficients of the slope identity")
    e.add_argument("--n", type=int, required=True)
    e.add_argument("--d", type=int, required=True)
    e.add_argument("--m", type=int, default=100)

    v = sub.add_parser("verify", help="run every identity over a grid")
    v.add_argument("--grid-n", dest="grid_n", help="range lo..hi")
    v.add_argument("--grid-d", dest="grid_d", help="range lo..hi")
    v.add_argument("--grid-m", dest="grid_m", help="comma-separated list")

    sub.add_parser("batch", help="read newline-delimited JSON requests from stdin")
    for sp in (s, f, g, e, v):
        sp.add_argument("--format", choices=("json", "table"), default=argparse.SUPPRESS)
    return p


def main(argv=None, stdin=None, stdout=None) -> int:
    stdin = sys.stdin if stdin is None else stdin
    stdout = sys.stdout if stdout is None else stdout
    try:
        args = build_parser().parse_args(argv)
    except UsageError as exc:
        print(json.dumps({"command": None, "diagnostics": [f"usage: {exc}"]}, sort_keys=True), file=stdout)
        return EXIT_USAGE

    if args.command == "batch":
        lines, code = run_batch(stdin)
        for line in lines:
            print(line, file=stdout)
        return code

    params = {k: v for k, v in vars(args).items() if k not in ("command", "format")}
    fn = {
        "slope": cmd_slope,
        "fibration": cmd_fibration,
        "singularity": cmd_singularity,
        "eliminate": cmd_eliminate,
        "verify": cmd_verify,
    }[args.command]
    rep = _guarded(lambda: fn(**params), args.command, params)
    print(rep.to_table() if args.format == "table" else rep.to_json(), file=stdout)
    return rep.exit_code


if __name__ == "__main__":
    sys.exit(main())
