"""Command line interface.

Commands operate on pmx files and emit a single JSON result document on
standard output. Exit codes are stable: 0 success, 2 parse or usage
error, 3 cross-check mismatch, 4 precondition violation.
"""

from __future__ import annotations

import json
import sys
import time

import click

from . import pmx
from .crp import column_rank_profile
from .gf import NEG_INF
from .kernel_rank import ShiftError, kernel_basis_rank_profile
from .oracle import InstanceSpec, crp_oracle, random_instance
from .polymat import PolyMatrix

EXIT_PARSE = 2
EXIT_MISMATCH = 3
EXIT_PRECONDITION = 4


def _load(path: str) -> PolyMatrix:
    try:
        return pmx.load(path)
    except pmx.PmxParseError as exc:
        click.echo(f"error: {path}: {exc}", err=True)
        sys.exit(EXIT_PARSE)
    except OSError as exc:
        click.echo(f"error: {exc}", err=True)
        sys.exit(EXIT_PARSE)


def _emit(doc: dict) -> None:
    click.echo(json.dumps(doc, indent=2))


def _auto_shift(F: PolyMatrix) -> tuple:
    return tuple(0 if d == NEG_INF else int(d) for d in F.row_degrees())


@click.group()
def main():
    """Exact rank tools for polynomial matrices over GF(p)."""


@main.command("rank-profile")
@click.argument("path", type=click.Path())
@click.option(
    "--algorithm",
    type=click.Choice(["fast", "oracle"]),
    default="fast",
    show_default=True,
    help="rank-sensitive scan, or the classical reference reduction",
)
@click.option(
    "--check",
    is_flag=True,
    help="run both algorithms and fail on any disagreement",
)
def rank_profile_cmd(path: str, algorithm: str, check: bool):
    """Column rank profile and independent rows of the matrix at PATH."""
    F = _load(path)
    doc: dict = {"modulus": F.field.p, "rows": F.nrows, "cols": F.ncols}
    fast = None
    if algorithm == "fast" or check:
        fast = column_rank_profile(F)
    if algorithm == "oracle" or check:
        reference = crp_oracle(F)
        if check and fast is not None and tuple(reference) != fast.rank_profile:
            click.echo(
                f"error: rank profile mismatch: fast {list(fast.rank_profile)} "
                f"vs oracle {list(reference)}",
                err=True,
            )
            sys.exit(EXIT_MISMATCH)
    if fast is not None:
        assert all(a < b for a, b in zip(fast.rank_profile, fast.rank_profile[1:]))
        doc["rank"] = fast.rank
        doc["column_rank_profile"] = list(fast.rank_profile)
        doc["independent_rows"] = list(fast.independent_rows)
        doc["stats"] = {
            "field_ops": fast.stats.field_ops,
            "rounds": [
                {
                    "theta": r.theta,
                    "known": r.known,
                    "window": r.window,
                    "degree_sum": r.degree_sum,
                    "field_ops": r.field_ops,
                }
                for r in fast.stats.rounds
            ],
        }
        if check:
            doc["checked"] = True
    else:
        doc["rank"] = len(reference)
        doc["column_rank_profile"] = list(reference)
        doc["algorithm"] = "oracle"
    _emit(doc)


@main.command("kernel")
@click.argument("path", type=click.Path())
@click.option(
    "--shift",
    default="auto",
    show_default=True,
    help="comma-separated row shift, or 'auto' for the row degrees",
)
@click.option(
    "--verify",
    is_flag=True,
    help="check K F = 0, the weak Popov shape, and the oracle rank",
)
def kernel_cmd(path: str, shift: str, verify: bool):
    """Shifted kernel basis and column rank profile of the matrix at PATH."""
    F = _load(path)
    if shift == "auto":
        s = _auto_shift(F)
    else:
        try:
            s = tuple(int(v) for v in shift.split(","))
        except ValueError:
            raise click.UsageError(f"bad shift {shift!r}") from None
    try:
        res = kernel_basis_rank_profile(F, s)
    except ShiftError as exc:
        click.echo(f"error: {exc}", err=True)
        sys.exit(EXIT_PRECONDITION)
    except ValueError as exc:
        raise click.UsageError(str(exc)) from None
    if verify:
        from .oracle import rank_oracle

        ok = (
            (res.kernel @ F).is_zero()
            and (res.kernel.nrows == 0 or res.kernel.is_ordered_weak_popov(s))
            and rank_oracle(F) == res.rank
        )
        if not ok:
            click.echo("error: kernel verification failed", err=True)
            sys.exit(EXIT_MISMATCH)
    profile = res.kernel.pivot_profile(s)
    doc = {
        "modulus": F.field.p,
        "rows": F.nrows,
        "cols": F.ncols,
        "shift": list(s),
        "rank": res.rank,
        "column_rank_profile": list(res.rank_profile),
        "kernel_rows": res.kernel.nrows,
        "kernel_pivot_profile": [list(e) for e in profile],
        "kernel_pmx": pmx.serialize(res.kernel),
        "stats": {
            "field_ops": res.stats.field_ops,
            "max_depth": res.stats.max_depth,
            "relation_steps": [
                {
                    "depth": st.depth,
                    "rows": st.nrows,
                    "cols": st.ncols,
                    "order": st.order,
                    "rows_in_kernel": st.rows_in_kernel,
                    "rows_residual": st.rows_residual,
                }
                for st in res.stats.relation_steps
            ],
        },
    }
    if verify:
        doc["verified"] = True
    _emit(doc)


@main.command("gen")
@click.argument("path", type=click.Path())
@click.option("--rows", "nrows", type=int, required=True)
@click.option("--cols", "ncols", type=int, required=True)
@click.option("--rank", type=int, required=True)
@click.option("--degree", type=int, default=2, show_default=True)
@click.option("--modulus", type=int, default=97, show_default=True)
@click.option("--seed", type=int, default=0, show_default=True)
def gen_cmd(path: str, nrows: int, ncols: int, rank: int, degree: int, modulus: int, seed: int):
    """Write a random matrix of prescribed rank to PATH ('-' for stdout)."""
    try:
        F = random_instance(InstanceSpec(nrows, ncols, rank, degree, modulus, seed))
    except ValueError as exc:
        raise click.UsageError(str(exc)) from None
    text = pmx.serialize(F)
    if path == "-":
        click.echo(text, nl=False)
    else:
        with open(path, "w", encoding="ascii") as handle:
            handle.write(text)


@main.command("bench")
@click.option("--rows", "nrows", type=int, default=64, show_default=True)
@click.option("--cols", "ncols", type=int, default=64, show_default=True)
@click.option("--degree", type=int, default=2, show_default=True)
@click.option("--modulus", type=int, default=97, show_default=True)
@click.option("--seed", type=int, default=0, show_default=True)
@click.option(
    "--ranks",
    default="",
    help="comma-separated ranks to sweep [default: 2, m/4, m/2, m]",
)
@click.option("--json", "as_json", is_flag=True, help="machine-readable output")
def bench_cmd(nrows: int, ncols: int, degree: int, modulus: int, seed: int, ranks: str, as_json: bool):
    """Rank sweep of the rank-profile scan, reporting field-op counts."""
    cap = min(nrows, ncols)
    if ranks:
        try:
            sweep = [int(v) for v in ranks.split(",")]
        except ValueError:
            raise click.UsageError(f"bad rank list {ranks!r}") from None
    else:
        sweep = sorted({2, max(1, nrows // 4), max(1, nrows // 2), cap})
    if any(not 0 <= r <= cap for r in sweep):
        raise click.UsageError(f"ranks must lie in [0, {cap}]")
    records = []
    for r in sweep:
        F = random_instance(InstanceSpec(nrows, ncols, r, degree, modulus, seed))
        start = time.perf_counter()
        res = column_rank_profile(F)
        elapsed = time.perf_counter() - start
        assert res.rank == r
        records.append(
            {
                "rank": r,
                "field_ops": res.stats.field_ops,
                "rounds": len(res.stats.rounds),
                "seconds": round(elapsed, 3),
            }
        )
    doc = {
        "rows": nrows,
        "cols": ncols,
        "degree": degree,
        "modulus": modulus,
        "seed": seed,
        "sweep": records,
    }
    if as_json:
        _emit(doc)
        return
    click.echo(f"{nrows}x{ncols}, degree {degree}, GF({modulus}), seed {seed}")
    click.echo(f"{'rank':>6} {'field_ops':>14} {'rounds':>7} {'seconds':>9}")
    for rec in records:
        click.echo(
            f"{rec['rank']:>6} {rec['field_ops']:>14} {rec['rounds']:>7} "
            f"{rec['seconds']:>9.3f}"
        )


if __name__ == "__main__":
    main()
