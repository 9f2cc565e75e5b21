"""Command-line interface: eval, verify, verify-all, sweep.

Artifacts (JSON/CSV/MD) are byte-identical across runs with the same
configuration; measured runtimes appear only in the console summary.

Examples:

    weaklim eval gamma z=0.5
    weaklim eval q_nu nu=0 z=2
    weaklim verify E04-euler-beta --format csv --out e04.csv
    weaklim verify-all --format md
    weaklim sweep eps E31-weak-limit-2f1 --eps-ladder 1e-1,1e-2,1e-3
"""

from __future__ import annotations

import argparse
import json
import sys

from . import claims, distrib, hyper, legendre
from .complexfn import (
    DomainError,
    GAMMA_CONTRACT,
    digamma,
    gamma,
    log_gamma,
    trigamma,
)
from .config import build_run_config, load_config_file
from .report import (
    fmt_float,
    relation_grid_csv,
    summary_to_md,
    sweep_rows_csv,
    verdicts_to_csv,
    verdicts_to_json,
)

__all__ = ["main"]


def _contract_err(value: complex) -> float:
    return abs(value) * GAMMA_CONTRACT.target_rel_err


# name -> (parameter names, callable(params) -> (value, error_estimate))
_EVAL_CATALOG = {
    "gamma": (("z",), lambda p: (gamma(p["z"]), _contract_err(gamma(p["z"])))),
    "log_gamma": (("z",), lambda p: (log_gamma(p["z"]),
                                     _contract_err(log_gamma(p["z"])))),
    "digamma": (("z",), lambda p: (digamma(p["z"]),
                                   abs(digamma(p["z"])) * 1e-10)),
    "trigamma": (("z",), lambda p: (trigamma(p["z"]),
                                    abs(trigamma(p["z"])) * 1e-8)),
    "beta": (("alpha", "beta"),
             lambda p: (distrib.beta(p["alpha"], p["beta"]),
                        _contract_err(distrib.beta(p["alpha"], p["beta"])))),
    "beta_reg": (("tau", "eps"),
                 lambda p: (distrib.beta_reg(p["tau"].real, p["eps"].real),
                            _contract_err(distrib.beta_reg(p["tau"].real,
                                                           p["eps"].real)))),
    "omega_eps": (("x", "eps"),
                  lambda p: (complex(distrib.omega_eps(p["x"].real,
                                                       p["eps"].real)), 0.0)),
    "hyp2f1": (("a", "b", "c", "z"),
               lambda p: (hyper.hyp2f1(p["a"], p["b"], p["c"], p["z"]),
                          abs(hyper.hyp2f1(p["a"], p["b"], p["c"],
                                           p["z"])) * 1e-12)),
    "gauss_sum": (("a", "b", "c"),
                  lambda p: (hyper.gauss_sum(p["a"], p["b"], p["c"]),
                             _contract_err(hyper.gauss_sum(p["a"], p["b"],
                                                           p["c"])))),
    "family_closed_form": (("tau", "eps"),
                           lambda p: (hyper.family_closed_form(
                               p["tau"].real, p["eps"].real), 0.0)),
    "f_factor": (("eps", "tau"),
                 lambda p: (hyper.f_factor(p["eps"].real, p["tau"].real), 0.0)),
    "mellin_forward": (("tau", "eps"),
                       lambda p: (distrib.mellin_reg_forward(
                           p["tau"].real, p["eps"].real), 1e-9)),
    "mellin_inverse": (("t", "eps"),
                       lambda p: (distrib.mellin_inverse_check(
                           p["t"].real, p["eps"].real), 1e-9)),
}


def _eval_quadrature(name, params):
    if name == "q_nu":
        return legendre.q_nu(params["nu"], params["z"]), 1e-10
    if name == "q_nu_mu":
        return legendre.q_nu_mu(params["nu"], params["mu"], params["z"]), 1e-10
    if name == "q_nu_itau":
        return legendre.q_nu_itau_direct(params["nu"], params["tau"].real,
                                         params["z"]), 1e-10
    if name == "relation_rhs":
        return legendre.relation_rhs(params["nu"], params["tau"].real,
                                     params["z"]), 1e-10
    raise KeyError(name)


_QUAD_EVALS = {
    "q_nu": ("nu", "z"),
    "q_nu_mu": ("nu", "mu", "z"),
    "q_nu_itau": ("nu", "tau", "z"),
    "relation_rhs": ("nu", "tau", "z"),
}


def _parse_params(tokens, wanted):
    params = {}
    for tok in tokens:
        if "=" not in tok:
            raise DomainError("key=value parameters",
                              f"cannot parse parameter token {tok!r}")
        key, _, val = tok.partition("=")
        key = key.strip()
        if key not in wanted:
            raise DomainError("known parameters",
                              f"unexpected parameter {key!r}; "
                              f"wanted: {', '.join(wanted)}")
        try:
            params[key] = complex(val.strip().replace("i", "j"))
        except ValueError:
            raise DomainError("numeric parameters",
                              f"cannot parse value in {tok!r}") from None
    missing = [w for w in wanted if w not in params]
    if missing:
        raise DomainError("all parameters present",
                          f"missing parameters: {', '.join(missing)}")
    return params


def _cmd_eval(args) -> int:
    name = args.function
    if name == "solve_eta":
        params = _parse_params(args.params, ("nu", "tau"))
        sol = legendre.solve_eta(params["nu"].real, params["tau"].real)
        print(json.dumps({
            "function": "solve_eta",
            "eta": fmt_float(sol.eta),
            "cos_value": fmt_float(sol.cos_value),
            "branch_index": sol.branch_index,
            "degenerate": sol.degenerate,
        }, indent=2))
        return 0
    if name in _EVAL_CATALOG:
        wanted, fn = _EVAL_CATALOG[name]
        params = _parse_params(args.params, wanted)
        value, err = fn(params)
    elif name in _QUAD_EVALS:
        params = _parse_params(args.params, _QUAD_EVALS[name])
        value, err = _eval_quadrature(name, params)
    else:
        known = sorted([*_EVAL_CATALOG, *_QUAD_EVALS, "solve_eta"])
        print(f"unknown function {name!r}; known: {', '.join(known)}",
              file=sys.stderr)
        return 2
    print(json.dumps({
        "function": name,
        "value": {"re": fmt_float(value.real), "im": fmt_float(value.imag)},
        "error_estimate": fmt_float(err),
    }, indent=2))
    return 0


def _emit(text: str, out_path: str | None) -> None:
    if out_path:
        with open(out_path, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _cmd_verify(args, cfg) -> int:
    verdicts = claims.run_claim(args.claim_id, cfg)
    if cfg.format == "csv":
        if args.claim_id.startswith("E47"):
            text = relation_grid_csv(verdicts)
        else:
            text = verdicts_to_csv(verdicts)
    elif cfg.format == "md":
        failures = sum(1 for v in verdicts if v.status == "FAIL")
        text = summary_to_md(
            [{"claim": args.claim_id, "mode": "-", "points": len(verdicts),
              "failures": failures,
              "max_deviation": max(v.deviation for v in verdicts)}],
            {"claims": 1, "verdicts": len(verdicts), "failures": failures,
             "exit_status": 1 if failures else 0},
        )
    else:
        text = verdicts_to_json(verdicts)
    _emit(text, cfg.out)
    return 1 if any(v.status == "FAIL" for v in verdicts) else 0


def _cmd_verify_all(args, cfg) -> int:
    summary = claims.run_all(cfg)
    if cfg.format == "csv":
        text = verdicts_to_csv(summary.verdicts)
    elif cfg.format == "md":
        text = summary_to_md(summary.rows, summary.totals())
    else:
        text = verdicts_to_json(summary.verdicts, summary.summary_dict())
    _emit(text, cfg.out)
    print(
        "claims: {claims}  verdicts: {verdicts}  failures: {failures}  "
        "exit: {exit_status}".format(**summary.totals()),
        file=sys.stderr,
    )
    for cid, ms in summary.runtimes_ms.items():
        print(f"  {cid}: {ms} ms", file=sys.stderr)
    return summary.exit_status


def _cmd_sweep(args, cfg) -> int:
    ladder = None
    if args.eps_ladder:
        ladder = tuple(float(x) for x in args.eps_ladder.split(","))
    param_name, rows = claims.sweep(args.kind, args.claim_id, cfg, ladder)
    _emit(sweep_rows_csv(param_name, rows), cfg.out)
    return 0


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="weaklim",
        description="evaluate regularized special functions and verify "
                    "the registered identities",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--config", help="flat key=value config file")
    common.add_argument("--out", help="output path (default stdout)")
    common.add_argument("--format", choices=("json", "csv", "md"))
    common.add_argument("--eps-ladder",
                        help="comma-separated ladder values")
    common.add_argument("--probe", help="probe name for pairings")
    common.add_argument("--tol", type=float,
                        help="tolerance override for every sub-check")
    common.add_argument("--parallel", action="store_true", default=None,
                        help="run claims concurrently (same output order)")

    p_eval = sub.add_parser("eval", parents=[common],
                            help="evaluate one catalog function")
    p_eval.add_argument("function")
    p_eval.add_argument("params", nargs="*", help="key=value arguments")

    p_verify = sub.add_parser("verify", parents=[common],
                              help="run one claim")
    p_verify.add_argument("claim_id")

    sub.add_parser("verify-all", parents=[common], help="run every claim")

    p_sweep = sub.add_parser("sweep", parents=[common],
                             help="emit ladder rows for one claim")
    p_sweep.add_argument("kind", choices=("eps", "z", "nu"))
    p_sweep.add_argument("claim_id")
    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        file_values = load_config_file(args.config) if args.config else {}
        flag_values = {
            "out": args.out,
            "format": args.format,
            "probe": args.probe,
        }
        if args.eps_ladder and args.command != "sweep":
            flag_values["eps_ladder"] = args.eps_ladder
        if args.tol is not None:
            flag_values["tol"] = str(args.tol)
        if args.parallel:
            flag_values["parallel"] = True
        cfg = build_run_config(file_values, flag_values)

        if args.command == "eval":
            return _cmd_eval(args)
        if args.command == "verify":
            return _cmd_verify(args, cfg)
        if args.command == "verify-all":
            return _cmd_verify_all(args, cfg)
        if args.command == "sweep":
            return _cmd_sweep(args, cfg)
        parser.error(f"unknown command {args.command!r}")
    except DomainError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except KeyError as exc:
        print(f"error: {exc.args[0]}", file=sys.stderr)
        return 2
    return 0


if __name__ == "__main__":
    sys.exit(main())
