"""Command-line interface.

Subcommands mirror the library: ``predict``, ``hazard``, ``classify``,
``extend``, ``verify``, and ``figures``.  Prior selection uses one of the
flags below; parameters are exact rationals written as ``num/den``, integers,
or decimal strings:

    --binomial N P | --beta-binomial N A B | --cmp N P NU
    --hypergeometric POPULATION ONES SAMPLE | --degenerate N G
    --pmf-file PATH | --mixture-file PATH

JSON payloads carry a "schema": "1" field and serialize every probability as
an exact "num/den" string (a decimal string in approximate mode).  ``verify``
exits nonzero when any claim in the certificate fails.  ``figures`` emits CSV
curve data, and with ``--out-dir`` also renders a PNG next to it when
matplotlib is available.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from decimal import Decimal
from pathlib import Path
from typing import Optional

from . import figures as figures_mod
from . import verify as verify_mod
from .classify import (
    GamblerAnalysis,
    MaturityAnalysis,
    TiesPolicy,
    TightnessVerdict,
    defined_streak_hazards,
    is_indifferent,
    is_symmetric,
    second_order_class,
    tightness_class,
    verify_gambler,
    verify_maturity,
)
from .errors import MaturityError
from .extend import extendibility_check, extendibility_profile
from .model import HistorySummary, posterior_gamma, predictive_one
from .numerics import parse_rational, scalar_to_string
from .priors import (
    GammaPrior,
    from_beta_binomial,
    from_binomial,
    from_cmp_binomial,
    from_degenerate,
    from_hypergeometric,
    mixture_from_json_dict,
    prior_from_json_dict,
)

SCHEMA_VERSION = "1"


def _add_prior_flags(parser: argparse.ArgumentParser) -> None:
    group = parser.add_argument_group("prior selection (exactly one)")
    group.add_argument("--binomial", nargs=2, metavar=("N", "P"))
    group.add_argument("--beta-binomial", nargs=3, metavar=("N", "ALPHA", "BETA"))
    group.add_argument("--cmp", nargs=3, metavar=("N", "P", "NU"))
    group.add_argument(
        "--hypergeometric", nargs=3, metavar=("POPULATION", "ONES", "SAMPLE")
    )
    group.add_argument("--degenerate", nargs=2, metavar=("N", "G"))
    group.add_argument("--pmf-file", metavar="PATH")
    group.add_argument("--mixture-file", metavar="PATH")
    parser.add_argument(
        "--precision-bits",
        type=int,
        default=None,
        help="working precision for approximate-mode priors",
    )
    parser.add_argument(
        "--tolerance",
        default=None,
        help="comparison tolerance for approximate-mode priors, e.g. 1e-30",
    )


def _parse_int(text: str, flag: str) -> int:
    try:
        return int(text)
    except ValueError:
        raise MaturityError(f"{flag}: expected an integer, got {text!r}") from None


def _prior_from_args(args: argparse.Namespace) -> GammaPrior:
    chosen = [
        name
        for name in (
            "binomial",
            "beta_binomial",
            "cmp",
            "hypergeometric",
            "degenerate",
            "pmf_file",
            "mixture_file",
        )
        if getattr(args, name) is not None
    ]
    if len(chosen) != 1:
        raise MaturityError(
            "exactly one prior flag is required (--binomial, --beta-binomial, "
            "--cmp, --hypergeometric, --degenerate, --pmf-file, --mixture-file)"
        )
    name = chosen[0]
    try:
        if name == "binomial":
            n, p = args.binomial
            return from_binomial(_parse_int(n, "--binomial"), parse_rational(p))
        if name == "beta_binomial":
            n, alpha, beta = args.beta_binomial
            return from_beta_binomial(
                _parse_int(n, "--beta-binomial"),
                parse_rational(alpha),
                parse_rational(beta),
            )
        if name == "cmp":
            n, p, nu = args.cmp
            tolerance = Decimal(args.tolerance) if args.tolerance else None
            return from_cmp_binomial(
                _parse_int(n, "--cmp"),
                parse_rational(p),
                parse_rational(nu),
                precision_bits=args.precision_bits,
                tolerance=tolerance,
            )
        if name == "hypergeometric":
            population, ones, sample = args.hypergeometric
            return from_hypergeometric(
                _parse_int(population, "--hypergeometric"),
                _parse_int(ones, "--hypergeometric"),
                _parse_int(sample, "--hypergeometric"),
            )
        if name == "degenerate":
            n, g = args.degenerate
            return from_degenerate(
                _parse_int(n, "--degenerate"), _parse_int(g, "--degenerate")
            )
        if name == "pmf_file":
            payload = json.loads(Path(args.pmf_file).read_text())
            return prior_from_json_dict(payload, label=f"pmf-file({args.pmf_file})")
        payload = json.loads(Path(args.mixture_file).read_text())
        return mixture_from_json_dict(payload)
    except FileNotFoundError as exc:
        raise MaturityError(f"--{name.replace('_', '-')}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise MaturityError(
            f"--{name.replace('_', '-')}: file is not valid JSON ({exc})"
        ) from exc
    except MaturityError as exc:
        raise MaturityError(f"--{name.replace('_', '-')}: {exc}") from exc


def _write_output(text: str, output: Optional[str]) -> None:
    if output is None:
        sys.stdout.write(text)
        if not text.endswith("\n"):
            sys.stdout.write("\n")
    else:
        Path(output).write_text(text if text.endswith("\n") else text + "\n")


def _json_dumps(payload: dict) -> str:
    return json.dumps(payload, indent=2)


def _verdict_to_json(verdict: TightnessVerdict) -> dict:
    return {
        "verdict": verdict.verdict.value,
        "per_index": [
            {"i": record.i, "side": record.side.value} for record in verdict.per_index
        ],
        "mode_caveat": verdict.mode_caveat,
    }


def _gambler_to_json(analysis: GamblerAnalysis) -> dict:
    def report(rep) -> dict:
        return {
            "belief": rep.belief.value,
            "holds": rep.holds.value,
            "counterexamples": [
                {
                    "n": ce.history.n,
                    "s": ce.history.s,
                    "predictive": scalar_to_string(ce.predictive),
                    "requirement": ce.requirement,
                }
                for ce in rep.counterexamples
            ],
        }

    return {
        "conclusion": analysis.conclusion.value if analysis.conclusion else None,
        "ties_policy": analysis.ties.value,
        "gambler": report(analysis.gambler),
        "reverse_gambler": report(analysis.reverse_gambler),
    }


def _maturity_to_json(analysis: MaturityAnalysis) -> dict:
    def report(rep) -> dict:
        return {
            "belief": rep.belief.value,
            "holds": rep.holds.value,
            "counterexamples": [
                {
                    "n": ce.history.n,
                    "s": ce.history.s,
                    "predictive": scalar_to_string(ce.predictive),
                    "requirement": ce.requirement,
                }
                for ce in rep.counterexamples
            ],
        }

    return {
        "conclusion": analysis.conclusion.value if analysis.conclusion else None,
        "hazards": [
            {"m": m, "r": scalar_to_string(r)} for m, r in analysis.hazards
        ],
        "maturity": report(analysis.maturity),
        "reverse_maturity": report(analysis.reverse_maturity),
    }


def _cmd_predict(args: argparse.Namespace) -> int:
    prior = _prior_from_args(args)
    if args.history is not None:
        history = HistorySummary.from_bits(args.history)
    else:
        n, s = args.summary
        history = HistorySummary(_parse_int(n, "--summary"), _parse_int(s, "--summary"))
    posterior = posterior_gamma(prior, history)
    payload = {
        "schema": SCHEMA_VERSION,
        "prior": prior.label,
        "mode": prior.mode.value,
        "n": history.n,
        "s": history.s,
        "predictive": None,
        "posterior_gamma": [scalar_to_string(p) for p in posterior.pmf],
    }
    if history.n < prior.N:
        payload["predictive"] = scalar_to_string(predictive_one(prior, history))
    _write_output(_json_dumps(payload), args.output)
    return 0


def _cmd_hazard(args: argparse.Namespace) -> int:
    prior = _prior_from_args(args)
    hazards = defined_streak_hazards(prior)
    buffer = io.StringIO()
    writer = csv.writer(buffer)
    writer.writerow(["m", "r_m"])
    for m, hazard in hazards:
        writer.writerow([m, scalar_to_string(hazard)])
    _write_output(buffer.getvalue(), args.output)
    return 0


def _cmd_classify(args: argparse.Namespace) -> int:
    prior = _prior_from_args(args)
    ties = TiesPolicy(args.ties)
    pi = is_indifferent(prior)
    payload = {
        "schema": SCHEMA_VERSION,
        "prior": prior.label,
        "mode": prior.mode.value,
        "symmetric": is_symmetric(prior),
        "tightness": _verdict_to_json(tightness_class(prior)),
        "second_order": _verdict_to_json(second_order_class(prior)),
        "indifferent_pi": scalar_to_string(pi) if pi is not None else None,
        "gambler": _gambler_to_json(verify_gambler(prior, ties)),
        "maturity": _maturity_to_json(verify_maturity(prior)),
    }
    _write_output(_json_dumps(payload), args.output)
    return 0


def _cmd_extend(args: argparse.Namespace) -> int:
    prior = _prior_from_args(args)
    if (args.M is None) == (args.M_max is None):
        raise MaturityError("exactly one of --M or --M-max is required")
    if args.M is not None:
        results = [extendibility_check(prior, args.M)]
    else:
        results = list(extendibility_profile(prior, args.M_max))
    payload = {
        "schema": SCHEMA_VERSION,
        "prior": prior.label,
        # A finite profile can refute infinite extendibility, never certify it.
        "note": "verdicts are per finite M; FEASIBLE does not certify infinite extendibility",
        "results": [
            {
                "M": result.M,
                "verdict": result.verdict,
                "witness": result.witness.to_json_list() if result.witness else None,
            }
            for result in results
        ],
    }
    _write_output(_json_dumps(payload), args.output)
    return 0


def _cmd_verify(args: argparse.Namespace) -> int:
    certificate = verify_mod.run_certificate(
        args.seed,
        random_symmetric=args.random_symmetric,
        random_general=args.random_general,
        n_max=args.n_max,
        include_extendibility=not args.skip_extendibility,
    )
    _write_output(_json_dumps(certificate), args.output)
    return 0 if certificate["pass"] else 1


def _cmd_figures(args: argparse.Namespace) -> int:
    data = figures_mod.emit_figure_data(args.figure, args.N)
    buffer = io.StringIO()
    writer = csv.writer(buffer)
    writer.writerow(figures_mod.CSV_HEADER)
    for row in data.csv_rows():
        writer.writerow(row)
    if args.out_dir is None:
        _write_output(buffer.getvalue(), None)
        return 0
    out_dir = Path(args.out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    stem = f"{args.figure.replace('-', '_')}_N{args.N}"
    csv_path = out_dir / f"{stem}.csv"
    csv_path.write_text(buffer.getvalue())
    written = [str(csv_path)]
    if not args.no_render:
        try:
            png_path = figures_mod.render_figure(data, out_dir / f"{stem}.png")
            written.append(str(png_path))
        except MaturityError as exc:
            print(f"note: {exc}; emitted CSV only", file=sys.stderr)
    for path in written:
        print(path)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="maturity",
        description=(
            "Exact predictive probabilities, belief classification, and "
            "extendibility certificates for finitely exchangeable 0/1 populations."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    predict = sub.add_parser(
        "predict", help="predictive probability and posterior count distribution"
    )
    _add_prior_flags(predict)
    target = predict.add_mutually_exclusive_group(required=True)
    target.add_argument("--history", help="explicit 0/1 string, e.g. 0110")
    target.add_argument("--summary", nargs=2, metavar=("N_TRIALS", "S_ONES"))
    predict.add_argument("--output", default=None)
    predict.set_defaults(func=_cmd_predict)

    hazard = sub.add_parser("hazard", help="streak-ending hazards r(m) as CSV")
    _add_prior_flags(hazard)
    hazard.add_argument("--output", default=None)
    hazard.set_defaults(func=_cmd_hazard)

    classify = sub.add_parser(
        "classify", help="tightness classes and belief verification as JSON"
    )
    _add_prior_flags(classify)
    classify.add_argument(
        "--ties",
        choices=[policy.value for policy in TiesPolicy],
        default=TiesPolicy.STRICT.value,
        help="how balanced histories are judged in the gambler check",
    )
    classify.add_argument("--output", default=None)
    classify.set_defaults(func=_cmd_classify)

    extend = sub.add_parser("extend", help="decide M-extendibility")
    _add_prior_flags(extend)
    extend.add_argument("--M", type=int, default=None)
    extend.add_argument("--M-max", dest="M_max", type=int, default=None)
    extend.add_argument("--output", default=None)
    extend.set_defaults(func=_cmd_extend)

    verify = sub.add_parser(
        "verify", help="run the claim corpus; nonzero exit on any violation"
    )
    verify.add_argument("--seed", type=int, default=0)
    verify.add_argument("--random-symmetric", type=int, default=120)
    verify.add_argument("--random-general", type=int, default=80)
    verify.add_argument("--n-max", type=int, default=10)
    verify.add_argument("--skip-extendibility", action="store_true")
    verify.add_argument("--output", default=None)
    verify.set_defaults(func=_cmd_verify)

    figures = sub.add_parser("figures", help="emit figure curve data (CSV, plus PNG)")
    figures.add_argument("--figure", required=True, choices=figures_mod.FIGURE_IDS)
    figures.add_argument("--N", type=int, required=True)
    figures.add_argument(
        "--out-dir",
        default=None,
        help="write <figure>_N<k>.csv (and .png unless --no-render) here",
    )
    figures.add_argument("--no-render", action="store_true")
    figures.set_defaults(func=_cmd_figures)

    return parser


def main(argv: Optional[list[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except MaturityError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    raise SystemExit(main())
