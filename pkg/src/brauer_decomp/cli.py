"""brauer-decomp: run decomposition campaigns, verify certificates, query the oracle.

Exit codes: 0 pass, 1 hard failure, 2 usage error.
"""

from __future__ import annotations

import json
import sys
from pathlib import Path

import click

from .brauer import BrauerExpr
from .oracle.invariants import invariant_vector
from .parse import ParseError, parse_symbol_terms
from .pipeline import certificate as cert
from .pipeline.campaign import STAGES, RunConfig, run_campaign

EXIT_PASS, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


@click.group()
def cli():
    """Explicit decomposition of Z/3 x Z/3 crossed products into symbol algebras."""


def _parse_stages(text: str) -> tuple:
    stages = tuple(s.strip() for s in text.split(",") if s.strip())
    bad = [s for s in stages if s not in STAGES]
    if bad or not stages:
        raise click.BadParameter(f"stages must be a comma list from {', '.join(STAGES)}; got {text!r}")
    return stages


def _file_name(outcome) -> str:
    return f"{outcome.kind}-{outcome.index:03d}.json"


def _report(cfg: RunConfig, outcomes) -> str:
    sections = {"counts": "MT4 counts", "mt1-mt2": "MT1/MT2 crossed-product campaign", "mt3": "MT3 exponent-3 branch", "tignol": "Tignol decompositions"}
    lines = [f"brauer-decomp report  q={cfg.q} seed={cfg.seed} stages={','.join(cfg.stages)}", ""]
    for kind, title in sections.items():
        mine = [o for o in outcomes if o.kind == kind]
        if not mine:
            continue
        npass = sum(o.status == "pass" for o in mine)
        lines.append(f"== {title}: {npass}/{len(mine)} pass")
        for o in mine:
            extra = f" resampled={len(o.resampled)}" if o.resampled else ""
            lines.append(f"  run {o.index:3d}: {o.status}{extra}")
            if o.doc is None:
                continue
            v = o.doc["verdicts"]
            if kind == "counts":
                for k, val in o.doc["table"].items():
                    lines.append(f"    {k} = {val}")
            elif kind == "mt1-mt2":
                lines.append(f"    MT1 arity {v['mt1_arity']}  MT2 arity {v['mt2_arity']}  restriction law {v['restriction_law']}  MT2 = input {v['mt2_equals_input']}")
                lines.append(f"    MT2 invariants {o.doc['expressions']['MT2']['invariants']}")
            elif kind == "mt3":
                lines.append(f"    {v['count_L']} symbols over L, {v['count_F']} over F  telescoping {v['telescoping_formal']}  descent {v['descent_consistency']}")
            elif kind == "tignol":
                lines.append(f"    {v['count']} degree-3 symbols  oracle-equal {v['oracle_equal']}")
        lines.append("")
    return "\n".join(lines)


@cli.command()
@click.option("--stages", "stages_text", default="counts", show_default=True, help="Comma list: counts,mt1,mt2,mt3,tignol.")
@click.option("--q", type=int, default=19, show_default=True, help="Prime q = 1 mod 9 for the constant field F_q.")
@click.option("--seed", type=int, default=0, show_default=True)
@click.option("--specializations", type=int, default=1, show_default=True, help="Runs per selected stage.")
@click.option("--degree-bound", type=int, default=1, show_default=True, help="Degree bound for random parameters.")
@click.option("--chain-budget", type=int, default=0, show_default=True, help="Oracle budget for the MT3 chain search (0 = use the constructed chain only).")
@click.option("--out", "out_dir", type=click.Path(file_okay=False), default="certificates", show_default=True)
@click.option("--verify/--no-verify", default=False, help="Re-verify every certificate after writing it.")
@click.option("--workers", type=int, default=1, show_default=True)
def run(stages_text, q, seed, specializations, degree_bound, chain_budget, out_dir, verify, workers):
    """Run the selected stages and write one certificate per run plus a summary."""
    cfg = RunConfig(q, seed, specializations, degree_bound, chain_budget, _parse_stages(stages_text), workers=workers)
    try:
        cfg.validate()
    except ValueError as exc:
        raise click.UsageError(str(exc)) from exc
    outcomes = run_campaign(cfg)
    out = Path(out_dir)
    failures = []
    for o in outcomes:
        if o.doc is not None:
            path = cert.write(o.doc, out / _file_name(o))
            if verify:
                try:
                    cert.verify(cert.load(path))
                except cert.CertificateError as exc:
                    failures.append(f"{path.name}: verification failed {exc}")
        if o.status != "pass":
            failures.append(f"{o.kind} run {o.index}: {o.status}")
    report = _report(cfg, outcomes)
    (out / "summary.txt").parent.mkdir(parents=True, exist_ok=True)
    (out / "summary.txt").write_text(report + "\n")
    (out / "summary.json").write_text(json.dumps([o.to_json() for o in outcomes], sort_keys=True, indent=1) + "\n")
    click.echo(report)
    if failures:
        click.echo(f"FAIL: {failures[0]}", err=True)
        sys.exit(EXIT_FAIL)
    click.echo("PASS")


@cli.command("verify")
@click.argument("paths", nargs=-1, required=True, type=click.Path(exists=True, dir_okay=False))
def verify_cmd(paths):
    """Re-derive every asserted identity of the given certificates."""
    status = EXIT_PASS
    for path in paths:
        try:
            cert.verify(cert.load(path))
            click.echo(f"{path}: pass")
        except (cert.CertificateError, KeyError, TypeError, ValueError, ArithmeticError) as exc:
            click.echo(f"{path}: FAIL {exc}")
            status = EXIT_FAIL
    sys.exit(status)


@cli.command()
@click.argument("expression")
@click.option("--q", type=int, default=19, show_default=True)
@click.option("--var", default="t", show_default=True)
@click.option("--file", "is_file", is_flag=True, help="Read the expression from a file.")
def oracle(expression, q, var, is_file):
    """Print the local-invariant table of an expression such as '(t,2)_3 - 3*(t+1,t)_9'."""
    from .fields.ratfunc import RationalFunctionField

    text = Path(expression).read_text().strip() if is_file else expression
    if q % 9 != 1:
        raise click.UsageError(f"q = {q} must be 1 mod 9")
    F = RationalFunctionField(q, var)
    try:
        terms = parse_symbol_terms(F, text)
    except ParseError as exc:
        raise click.UsageError(str(exc)) from exc
    expr = BrauerExpr.zero(F)
    for a, b, n, c in terms:
        expr = expr + BrauerExpr.symbol(F, a, b, n, c)
    vec = invariant_vector(expr)
    click.echo(f"expression: {expr}")
    if vec.is_zero():
        click.echo("  (empty table)")
    for label, num, den in vec.table():
        click.echo(f"  {label}: {num}/{den}")
    click.echo(f"reciprocity sum: {vec.reciprocity_sum()}")
    click.echo(f"exponent: {vec.exponent()}")


def main(argv=None):
    cli.main(args=argv, prog_name="brauer-decomp")


if __name__ == "__main__":
    main()
