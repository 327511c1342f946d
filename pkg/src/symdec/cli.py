"""Command-line surface.

Exit codes: 0 success, 1 usage error, 2 weight-condition refusal,
3 oracle/corpus mismatch.
"""

from __future__ import annotations

import json
import sys

import click

from . import __version__
from .blocks import (
    candidate_set,
    column_as_dict,
    synthesize_columns,
    weight_condition_holds,
    weight_k,
)
from .characters import foulkes_character_induced, foulkes_character_sum
from .corpus import corpus_check, corpus_load, default_corpus_path
from .errors import HypothesisViolation, OracleMismatch
from .matchings import stratify_report
from .partitions import format_partition, p_core, parse_partition, size
from .specht import DEFAULT_CAP


def _emit(data: dict, fmt: str):
    if fmt == "json":
        click.echo(json.dumps(data, indent=2))
    else:
        _emit_table(data)


def _emit_table(data: dict, indent: str = ""):
    for key, value in data.items():
        if isinstance(value, dict):
            click.echo(f"{indent}{key}:")
            _emit_table(value, indent + "  ")
        elif isinstance(value, list) and value and isinstance(value[0], dict):
            click.echo(f"{indent}{key}:")
            for item in value:
                _emit_table(item, indent + "  ")
                click.echo(f"{indent}  -")
        else:
            click.echo(f"{indent}{key}: {value}")


fmt_option = click.option(
    "--format", "fmt", type=click.Choice(["json", "table"]), default="json",
    show_default=True, help="output format",
)
partition_option = click.option(
    "--core", "core_text", required=True,
    help='partition, e.g. "3,1,1" or "5,4,2,1^4"',
)
p_option = click.option("--p", "p", type=int, required=True, help="odd prime")
k_option = click.option("--k", "k", type=int, required=True, help="target odd-part count")


@click.group()
@click.version_option(__version__)
def cli():
    """Decomposition-matrix columns of symmetric groups in odd characteristic."""


@cli.command()
@p_option
@partition_option
@fmt_option
def core(p, core_text, fmt):
    """p-core and weight of a partition."""
    lam = parse_partition(core_text)
    res = p_core(lam, p)
    _emit(
        {
            "p": p,
            "partition": format_partition(lam),
            "core": format_partition(res.core),
            "weight": res.weight,
        },
        fmt,
    )


@cli.command()
@p_option
@partition_option
@k_option
@fmt_option
def weights(p, core_text, k, fmt):
    """Minimal hook weight w_k and the weight condition."""
    gamma = parse_partition(core_text)
    res = weight_k(gamma, k, p)
    holds, witness = weight_condition_holds(gamma, k, p)
    _emit(
        {
            "p": p,
            "core": format_partition(gamma),
            "k": k,
            "w": res.w,
            "n": res.n,
            "weight_condition": holds,
            "witness": witness,
        },
        fmt,
    )


@cli.command()
@p_option
@partition_option
@k_option
@fmt_option
def candidates(p, core_text, k, fmt):
    """The candidate set E_k(core)."""
    gamma = parse_partition(core_text)
    cand = candidate_set(gamma, k, p)
    _emit(
        {
            "p": p,
            "core": format_partition(gamma),
            "k": k,
            "w": cand.w,
            "n": cand.n,
            "members": [format_partition(m) for m in cand.members],
        },
        fmt,
    )


@cli.command()
@p_option
@partition_option
@k_option
@fmt_option
def column(p, core_text, k, fmt):
    """Synthesized decomposition-matrix columns (refuses with exit 2 when
    the weight condition fails)."""
    gamma = parse_partition(core_text)
    cols = synthesize_columns(gamma, k, p)
    _emit({"columns": [column_as_dict(c) for c in cols]}, fmt)


@cli.command()
@click.option("--m", "m", type=int, required=True, help="number of pairs")
@k_option
@click.option(
    "--route", type=click.Choice(["both", "sum", "induced"]), default="both",
    show_default=True, help="evaluation route(s)",
)
@fmt_option
def character(m, k, route, fmt):
    """Character of the twisted Foulkes module H^(2^m k)."""
    if route == "sum":
        vec = foulkes_character_sum(m, k)
        _emit(vec.as_dict(), fmt)
        return
    if route == "induced":
        vec = foulkes_character_induced(m, k)
        _emit(vec.as_dict(), fmt)
        return
    by_sum = foulkes_character_sum(m, k)
    by_induction = foulkes_character_induced(m, k)
    data = by_sum.as_dict()
    data["routes_agree"] = by_sum == by_induction
    _emit(data, fmt)


@cli.command()
@click.option("--m", "m", type=int, required=True, help="number of pairs")
@k_option
@p_option
@click.option("--r", "r", type=int, required=True, help="number of p-blocks")
@fmt_option
def brauer(m, k, p, r, fmt):
    """Fixed-point strata of the signed-matching basis under the diagonal
    p-cycle subgroup, with the partition and product identities checked."""
    _emit(stratify_report(m, k, r, p), fmt)


@cli.command()
@p_option
@partition_option
@k_option
@click.option("--seed", type=int, default=7, show_default=True)
@click.option("--cap", type=int, default=DEFAULT_CAP, show_default=True,
              help="largest block degree the oracle will attempt")
@click.option("--no-cache", is_flag=True, help="bypass the module cache")
@fmt_option
def oracle(p, core_text, k, seed, cap, no_cache, fmt):
    """Synthesize columns and verify each against Meataxe decomposition
    numbers (exit 3 on mismatch)."""
    from .meataxe import block_decomposition_rows, verify_column

    gamma = parse_partition(core_text)
    cols = synthesize_columns(gamma, k, p)
    use_cache = False if no_cache else None
    rows = block_decomposition_rows(
        cols[0].block, seed=seed, cap=cap, use_cache=use_cache
    )
    reports = [
        verify_column(c, seed=seed, cap=cap, use_cache=use_cache, rows=rows)
        for c in cols
    ]
    _emit({"columns": reports, "ok": True}, fmt)


@cli.command()
@p_option
@click.option("--nmax", type=int, default=8, show_default=True,
              help="largest block degree to cross-check")
@click.option("--seed", type=int, default=7, show_default=True)
@click.option("--cap", type=int, default=DEFAULT_CAP, show_default=True)
@click.option("--corpus", "corpus_path", type=click.Path(exists=True),
              default=None, help="corpus file (default: the shipped corpus)")
@click.option("--no-cache", is_flag=True, help="bypass the module cache")
@fmt_option
def verify(p, nmax, seed, cap, corpus_path, no_cache, fmt):
    """Recompute the corpus and cross-check synthesized columns against the
    oracle over all small cores (exit 3 on any mismatch)."""
    from .meataxe import block_decomposition_rows, check_row_invariants, verify_column
    from .partitions import partitions_of

    path = corpus_path or default_corpus_path()
    entries = [e for e in corpus_load(path) if e.p == p]
    corpus_report = corpus_check(entries)

    use_cache = False if no_cache else None
    cases = []
    ok = corpus_report["ok"]
    for total in range(5):
        for gamma in partitions_of(total):
            if p_core(gamma, p).weight != 0:
                continue
            for k in range(3):
                holds, _ = weight_condition_holds(gamma, k, p)
                if not holds:
                    continue
                res = weight_k(gamma, k, p)
                if res.n > nmax:
                    continue
                cols = synthesize_columns(gamma, k, p)
                rows = block_decomposition_rows(
                    cols[0].block, seed=seed, cap=cap, use_cache=use_cache
                )
                problems = check_row_invariants(rows, p)
                case = {
                    "core": format_partition(gamma),
                    "k": k,
                    "n": res.n,
                    "columns": [format_partition(c.label) for c in cols],
                    "row_invariants": problems,
                }
                try:
                    for c in cols:
                        verify_column(c, seed=seed, cap=cap,
                                      use_cache=use_cache, rows=rows)
                    case["ok"] = not problems
                except OracleMismatch as exc:
                    case["ok"] = False
                    case["mismatches"] = exc.report["mismatches"]
                ok = ok and case["ok"]
                cases.append(case)
    _emit(
        {
            "p": p,
            "nmax": nmax,
            "seed": seed,
            "corpus": corpus_report,
            "oracle": {"cases": cases},
            "ok": ok,
        },
        fmt,
    )
    if not ok:
        sys.exit(3)


def main(argv=None):
    try:
        cli.main(args=argv, standalone_mode=False)
    except HypothesisViolation as exc:
        click.echo(f"refused: {exc}", err=True)
        sys.exit(2)
    except OracleMismatch as exc:
        click.echo(f"oracle mismatch: {json.dumps(exc.report)}", err=True)
        sys.exit(3)
    except click.ClickException as exc:
        exc.show()
        sys.exit(1)
    except click.Abort:
        sys.exit(1)
    except (ValueError, OSError) as exc:
        click.echo(f"error: {exc}", err=True)
        sys.exit(1)


if __name__ == "__main__":
    main()
