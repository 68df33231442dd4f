"""Command-line front end.

Field elements go in and out as integer encodings. Exit status: 0 on
success, 1 when a verification check fails, 2 on usage or validation errors.
"""

from __future__ import annotations

import functools
import json
import sys
from pathlib import Path

import click

from . import decomp, gf, psl2, seq, verify
from .errors import Psl2Error

EXIT_CHECK_FAILED = 1
EXIT_USAGE = 2


def _emit(text: str, out: Path | None) -> None:
    if not text.endswith("\n"):
        text += "\n"
    if out is None:
        click.echo(text, nl=False)
    else:
        out.write_text(text)


def _dump(data) -> str:
    return json.dumps(data, indent=2)


def _guarded(func):
    """Turn library errors into a one-line message and exit status 2."""

    @functools.wraps(func)
    def wrapper(*args, **kwargs):
        try:
            return func(*args, **kwargs)
        except Psl2Error as exc:
            click.echo(f"error: {type(exc).__name__}: {exc}", err=True)
            sys.exit(EXIT_USAGE)

    return wrapper


def _tables(q: int, a: int | None, b: int | None) -> seq.SeqTables:
    field = gf.field_for_order(q)
    a_el = None if a is None else gf.decode(field, a)
    b_el = None if b is None else gf.decode(field, b)
    return seq.tables_for(field, a_el, b_el)


def _parse_matrix(ctx, param, value):
    if value is None:
        return None
    try:
        entries = [int(v) for v in value.split(",")]
    except ValueError:
        raise click.BadParameter(f"expected four comma-separated integers, got {value!r}") from None
    if len(entries) != 4:
        raise click.BadParameter(f"expected 4 entries, got {len(entries)}")
    return entries


q_option = click.option("--q", "q", type=int, required=True, help="Field order, a prime power.")
a_option = click.option("--a", "a", type=int, default=None, help="Override the parameter a (encoding).")
b_option = click.option("--b", "b", type=int, default=None, help="Override the parameter b (encoding, odd q).")
out_option = click.option("--out", type=click.Path(dir_okay=False, path_type=Path), default=None,
                          help="Write to this file instead of stdout.")


@click.group(context_settings={"help_option_names": ["-h", "--help"]})
def cli():
    """OGS and BN-pair canonical forms of PSL_2(q)."""


@cli.command()
@q_option
@a_option
@b_option
@out_option
@_guarded
def params(q, a, b, out):
    """Field description and the selected (a, b, t)."""
    field = gf.field_for_order(q)
    p = seq.make_params(
        field,
        None if a is None else gf.decode(field, a),
        None if b is None else gf.decode(field, b),
    )
    _emit(_dump(p.to_dict()), out)


@cli.command()
@q_option
@a_option
@b_option
@click.option("--format", "fmt", type=click.Choice(["tsv", "json"]), default="tsv", show_default=True)
@out_option
@_guarded
def tables(q, a, b, fmt, out):
    """The a, b, alpha, beta, gamma sequences."""
    t = _tables(q, a, b)
    _emit(t.to_tsv() if fmt == "tsv" else _dump(t.to_dict()), out)


@cli.command()
@q_option
@click.option("--k", type=int, required=True)
@click.option("--ell", type=int, default=0, show_default=True)
@click.option("--x", type=int, required=True)
@click.option("--y", type=int, required=True)
@a_option
@b_option
@out_option
@_guarded
def compose(q, k, ell, x, y, a, b, out):
    """Matrix and BN form of the OGS element (k, ell, x, y)."""
    t = _tables(q, a, b)
    form = decomp.ogs_form(k, ell, gf.decode(t.field, x), gf.decode(t.field, y))
    m = decomp.ogs_compose(t, form)
    data = {"matrix": m.encodings(), "bn": decomp.ogs_to_bn(t, form).to_dict(), "ogs": form.to_dict()}
    _emit(_dump(data), out)


@cli.command()
@q_option
@click.option("--matrix", "entries", required=True, callback=_parse_matrix,
              help='Entries "m11,m12,m21,m22" as encodings.')
@a_option
@b_option
@out_option
@_guarded
def decompose(q, entries, a, b, out):
    """BN and OGS forms of a determinant-one matrix."""
    t = _tables(q, a, b)
    m = psl2.matrix_from_ints(t.field, [gf.encode(gf.decode(t.field, v)) for v in entries])
    bn = decomp.bn_decompose(m)
    data = {"matrix": m.encodings(), "bn": bn.to_dict(), "ogs": decomp.bn_to_ogs(t, bn).to_dict()}
    _emit(_dump(data), out)


@cli.command()
@q_option
@click.option("--matrix", "entries", default=None, callback=_parse_matrix,
              help='Entries "m11,m12,m21,m22" as encodings.')
@click.option("--a", "a", type=int, default=None, help="Order of u(a) s instead of a matrix.")
@out_option
@_guarded
def order(q, entries, a, out):
    """Order of an element of PSL_2(q)."""
    if (entries is None) == (a is None):
        raise click.UsageError("give exactly one of --matrix or --a")
    field = gf.field_for_order(q)
    if a is not None:
        m = psl2.gen_u(gf.decode(field, a)) * psl2.gen_s(field)
    else:
        m = psl2.matrix_from_ints(field, [gf.encode(gf.decode(field, v)) for v in entries])
    _emit(_dump({"q": q, "matrix": m.encodings(), "order": psl2.element_order(m)}), out)


@cli.command(name="verify")
@q_option
@click.option("--suite", type=click.Choice(verify.SUITES + ("all",)), default="all", show_default=True)
@click.option("--json", "as_json", is_flag=True, help="Print the JSON report.")
@out_option
@_guarded
def verify_cmd(q, suite, as_json, out):
    """Run a named verification suite; exit 1 if any check fails."""
    report = verify.run_suite(q, suite)
    _emit(report.to_json() if as_json else "\n".join(report.lines()), out)
    if not report.passed:
        sys.exit(EXIT_CHECK_FAILED)


def main(argv: list[str] | None = None) -> None:
    cli.main(args=argv, prog_name="psl2ogs")
