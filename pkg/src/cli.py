#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""
Command-line front end.

Usage:
    python src/cli.py char-sym --shape 2,1 --class 3
    python src/cli.py char-wreath --group Z6 --shape "[1|-|1|-|-|-]" --color 5 --class 1,1
    python src/cli.py core-quotient --shape 4,2 --r 2
    python src/cli.py hat --shape "[1|1]"
    python src/cli.py sign --shape 2,1,1 --r 2
    python src/cli.py table --n 4 --format csv
    python src/cli.py bst --shape "[2|1]" --class 2,1
    python src/cli.py verify rr --n 4 --group Z2
    python src/cli.py verify rt --n 3 --group Z4

JSON goes to stdout, [TAG] diagnostics to stderr.
Exit codes: 0 pass, 1 identity failure, 2 invalid input or usage.
"""

import csv
import io
import json
import sys
from typing import Any, Dict, List, Optional

import click

from config import DEFAULT_JOBS, DEFAULT_MAX_FAILURES, SCHEMA_VERSION, log
from groups import GroupModel, UnsupportedEvaluationError, parse_group
from identities import (
    VerificationReport,
    report_sign2,
    value_to_json,
    verify_color_products,
    verify_main,
    verify_main2,
    verify_rr,
    verify_rr_general,
)
from partitions import (
    InvalidInputError,
    Partition,
    hat,
    parse_composition,
    parse_partition,
    parse_rpartite,
    parse_shape,
    r_core,
    r_quotient,
)
from symchar import character_table, chi, class_size, set_cache_limit, sign_r
from tableaux import count_bst, signed_sum
from wreath import psi, standard_element, ty


class CommandError(click.ClickException):
    exit_code = 2


def _emit(payload: Dict[str, Any]) -> None:
    click.echo(json.dumps({"schema": SCHEMA_VERSION, **payload}, ensure_ascii=False, indent=2))


def _partition(text: str) -> Partition:
    try:
        return parse_partition(text)
    except InvalidInputError as e:
        raise CommandError(str(e)) from None


def _group(text: str) -> GroupModel:
    try:
        return parse_group(text)
    except InvalidInputError as e:
        raise CommandError(str(e)) from None


def _emit_report(report: VerificationReport) -> None:
    _emit(report.to_dict())
    if not report.passed:
        click.get_current_context().exit(1)


# ---------------------------------------------------------------------------
# Commands
# ---------------------------------------------------------------------------

@click.group(context_settings={"help_option_names": ["-h", "--help"]})
@click.option("--cache-limit", type=click.IntRange(min=0), default=None,
              help="Cap on memoised S_n character values (0 = unbounded).")
def cli(cache_limit: Optional[int]) -> None:
    """Exact characters of S_n and G wr S_n."""
    if cache_limit is not None:
        set_cache_limit(cache_limit)


@cli.command("char-sym")
@click.option("--shape", required=True, help="Partition, e.g. 3,1,1.")
@click.option("--class", "class_", required=True, help="Cycle type (any order), e.g. 2,2,1.")
def char_sym(shape: str, class_: str) -> None:
    """chi_shape at a permutation of the given cycle type."""
    lam = _partition(shape)
    try:
        mu = parse_composition(class_)
        value = chi(lam, mu)
    except InvalidInputError as e:
        raise CommandError(str(e)) from None
    _emit({"shape": lam.to_json(), "class": mu.sorted().to_json(), "value": value})


@cli.command("char-wreath")
@click.option("--group", "group_spec", required=True, help="Z6, Z2xZ2, quot:..., or a preset name.")
@click.option("--shape", required=True, help='r-partite partition, e.g. "[2,1|-|1]".')
@click.option("--color", default=None,
              help="Color element (e.g. 5 or 1,0) for a constant coloring, or one per point separated by ';'.")
@click.option("--class", "class_", required=True, help="Cycle lengths of pi, e.g. 2,1.")
def char_wreath(group_spec: str, shape: str, color: Optional[str], class_: str) -> None:
    """psi_shape at (c_1, ..., c_n, pi) with pi cycling consecutive blocks."""
    model = _group(group_spec)
    try:
        lam = parse_rpartite(shape)
        mu = parse_composition(class_)
        if color is None:
            colors: Any = model.identity
        elif ";" in color:
            colors = [model.parse_element(c) for c in color.split(";")]
        else:
            colors = model.parse_element(color)
        x = standard_element(model, colors, mu)
        value = psi(lam, model, x)
    except (InvalidInputError, UnsupportedEvaluationError) as e:
        raise CommandError(str(e)) from None
    _emit({
        "group": model.name,
        "labelling": model.labelling(),
        "shape": lam.to_json(),
        "element": x.to_json(),
        "type": ty(model, x).to_json(),
        "value": value_to_json(value),
    })


@cli.command("core-quotient")
@click.option("--shape", required=True)
@click.option("--r", "r", type=click.IntRange(min=2), required=True)
def core_quotient(shape: str, r: int) -> None:
    """r-core and r-quotient of a partition."""
    lam = _partition(shape)
    _emit({"shape": lam.to_json(), "r": r,
           "core": r_core(lam, r).to_json(), "quotient": r_quotient(lam, r).to_json()})


@cli.command("hat")
@click.option("--shape", required=True, help='r-partite partition, e.g. "[1|1]".')
@click.option("--r", "r", type=click.IntRange(min=1), default=None,
              help="Pad the shape with empty components up to r.")
def hat_cmd(shape: str, r: Optional[int]) -> None:
    """The partition with empty core whose quotient is the given shape."""
    try:
        lam = parse_rpartite(shape)
        if r is not None:
            lam = lam.padded(r)
        result = hat(lam)
    except InvalidInputError as e:
        raise CommandError(str(e)) from None
    _emit({"shape": lam.to_json(), "r": lam.arity, "hat": result.to_json()})


@cli.command("sign")
@click.option("--shape", required=True)
@click.option("--r", "r", type=click.IntRange(min=1), required=True)
def sign_cmd(shape: str, r: int) -> None:
    """sign_r of a partition with empty r-core."""
    lam = _partition(shape)
    try:
        value = sign_r(lam, r)
    except InvalidInputError as e:
        raise CommandError(str(e)) from None
    _emit({"shape": lam.to_json(), "r": r, "sign": value})


@cli.command("table")
@click.option("--n", "n", type=click.IntRange(min=1), required=True)
@click.option("--format", "fmt", type=click.Choice(["json", "csv"]), default="json")
def table_cmd(n: int, fmt: str) -> None:
    """Character table of S_n; rows and columns lexicographically decreasing."""
    rows, cols, values = character_table(n)
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["shape"] + [str(mu) for mu in cols])
        for lam, row in zip(rows, values):
            writer.writerow([str(lam)] + row)
        click.echo(buf.getvalue(), nl=False)
        return
    _emit({"n": n, "shapes": [lam.to_json() for lam in rows],
           "classes": [mu.to_json() for mu in cols],
           "class_sizes": [class_size(mu) for mu in cols], "values": values})


@cli.command("bst")
@click.option("--shape", required=True, help='Partition or r-partite partition.')
@click.option("--class", "class_", required=True, help="Weight composition.")
def bst_cmd(shape: str, class_: str) -> None:
    """Number of border-strip tableaux and their signed sum."""
    try:
        lam = parse_shape(shape)
        weight = parse_composition(class_)
        count, signed = count_bst(lam, weight), signed_sum(lam, weight)
    except InvalidInputError as e:
        raise CommandError(str(e)) from None
    _emit({"shape": lam.to_json(), "weight": list(weight.parts), "count": count, "signed_sum": signed})


# ---------------------------------------------------------------------------
# Sweeps
# ---------------------------------------------------------------------------

def _sweep_options(f):
    f = click.option("--n", "n", type=click.IntRange(min=1), required=True, help="Largest size swept.")(f)
    f = click.option("--max-failures", type=click.IntRange(min=0), default=DEFAULT_MAX_FAILURES,
                     show_default=True, help="Failures listed in the report.")(f)
    f = click.option("--jobs", type=click.IntRange(min=1), default=DEFAULT_JOBS, show_default=True,
                     help="Worker threads.")(f)
    f = click.option("--format", "fmt", type=click.Choice(["json"]), default="json")(f)
    return f


@cli.group("verify")
def verify() -> None:
    """Exhaustive identity sweeps; exit 1 if any case fails."""


@verify.command("rr")
@_sweep_options
@click.option("--group", "group_spec", default="Z2", show_default=True)
def verify_rr_cmd(n: int, max_failures: int, jobs: int, fmt: str, group_spec: str) -> None:
    model = _group(group_spec)
    try:
        report = verify_rr(n, model, jobs=jobs, max_failures=max_failures)
    except InvalidInputError as e:
        raise CommandError(str(e)) from None
    _emit_report(report)


@verify.command("rr-general")
@_sweep_options
@click.option("--group", "group_spec", default="S3", show_default=True)
@click.option("--degree", type=click.IntRange(min=1), default=None, help="Only this character degree.")
def verify_rr_general_cmd(n: int, max_failures: int, jobs: int, fmt: str, group_spec: str,
                          degree: Optional[int]) -> None:
    model = _group(group_spec)
    try:
        report = verify_rr_general(n, model, degree=degree, jobs=jobs, max_failures=max_failures)
    except InvalidInputError as e:
        raise CommandError(str(e)) from None
    _emit_report(report)


@verify.command("main")
@_sweep_options
@click.option("--group", "group_spec", required=True)
@click.option("--color", required=True, help="The element a.")
def verify_main_cmd(n: int, max_failures: int, jobs: int, fmt: str, group_spec: str, color: str) -> None:
    model = _group(group_spec)
    try:
        report = verify_main(n, model, model.parse_element(color), jobs=jobs, max_failures=max_failures)
    except InvalidInputError as e:
        raise CommandError(str(e)) from None
    _emit_report(report)


@verify.command("main2")
@_sweep_options
@click.option("--group", "group_spec", default="S3", show_default=True)
@click.option("--color", default=None, help="Coset of a in G/G' (defaults to the preset's element).")
def verify_main2_cmd(n: int, max_failures: int, jobs: int, fmt: str, group_spec: str,
                     color: Optional[str]) -> None:
    model = _group(group_spec)
    try:
        a = model.parse_element(color) if color is not None else None
        report = verify_main2(n, model, a, jobs=jobs, max_failures=max_failures)
    except (InvalidInputError, UnsupportedEvaluationError) as e:
        raise CommandError(str(e)) from None
    _emit_report(report)


@verify.command("rt")
@_sweep_options
@click.option("--group", "group_spec", default="Z6ex", show_default=True)
def verify_rt_cmd(n: int, max_failures: int, jobs: int, fmt: str, group_spec: str) -> None:
    model = _group(group_spec)
    try:
        report = verify_color_products(n, model, jobs=jobs, max_failures=max_failures)
    except InvalidInputError as e:
        raise CommandError(str(e)) from None
    _emit_report(report)


@verify.command("sign2")
@_sweep_options
def verify_sign2_cmd(n: int, max_failures: int, jobs: int, fmt: str) -> None:
    _emit_report(report_sign2(n, max_failures=max_failures))


# ---------------------------------------------------------------------------
# Entry points
# ---------------------------------------------------------------------------

def run(argv: Optional[List[str]] = None) -> int:
    """Run one command; returns the process exit code."""
    try:
        result = cli.main(args=argv, prog_name="wreathchar", standalone_mode=False)
    except click.ClickException as e:
        e.show()
        return e.exit_code
    except click.exceptions.Abort:
        log("ERROR", "Aborted")
        return 2
    except ValueError as e:
        log("ERROR", str(e))
        return 2
    return result if isinstance(result, int) else 0


def main() -> None:
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
