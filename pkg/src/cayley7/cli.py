"""Command-line surface: expression evaluation, product tables, the
verification runner, matrix emission, and torsion components.

Exit codes: 0 all good, 1 verification found an uncovered mismatch,
2 usage or parse error.
"""

from __future__ import annotations

import csv
import io
import json
import re
import sys
from fractions import Fraction
from pathlib import Path
from typing import Optional

import click

from .clifford import CL07, Multivector, blade_from_indices
from .codec import dumps as codec_dumps
from .codec import matrix_to_doc, to_doc
from .matrep import (
    blade_mask,
    blade_names,
    bundled_fixture_path,
    fixture_differences,
    left_action_matrix,
    load_fixture_matrices,
)
from .octonion import Octonion
from .products import PRODUCTS, as_multivector, as_octonion, deformed, named_product, torsion_tensor
from .verify import SUITES, Erratum, load_errata, result_doc, run_all, run_suite

__all__ = ["main", "parse_expr", "evaluate_expr", "evaluate"]


# ---------------------------------------------------------------------------
# Expression grammar
#
#   expr  := oterm (('+' | '-') oterm)*
#   oterm := cterm ('o' cterm)*
#   cterm := unary (('*' | '^') unary)*
#   unary := '-'? atom
#   atom  := rational | basis | '(' expr ')'
#   basis := 'e' digit+
#
# '*' is the Clifford product, '^' the wedge, 'o' the octonion product
# (operands coerced to paravectors); '*' and '^' bind tighter than 'o'.
# AST nodes are tuples: ("num", Fraction), ("basis", digit string),
# ("neg", node), ("clifford"|"wedge"|"oct", left, right).

_TOKEN_RE = re.compile(
    r"\s*(?:(?P<num>\d+(?:/\d+)?)|(?P<basis>e\d+)|(?P<oct>o)|(?P<op>[-+*^()]))"
)


class ExprError(ValueError):
    """Parse or evaluation failure, carrying the offending position."""

    def __init__(self, message: str, pos: int) -> None:
        super().__init__(f"{message} (at position {pos})")
        self.pos = pos


def _tokenize(text: str) -> list[tuple[str, str, int]]:
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        if m is None:
            stripped = text[pos:].lstrip()
            if not stripped:
                break
            raise ExprError(f"unexpected character {stripped[0]!r}", len(text) - len(stripped))
        kind = m.lastgroup
        value = m.group(kind)
        tokens.append((kind, value, m.start(kind)))
        pos = m.end()
    tokens.append(("end", "", len(text)))
    return tokens


class _Parser:
    def __init__(self, text: str) -> None:
        self.text = text
        self.tokens = _tokenize(text)
        self.i = 0

    def peek(self) -> tuple[str, str, int]:
        return self.tokens[self.i]

    def take(self) -> tuple[str, str, int]:
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def expr(self):
        node = self.oterm()
        while self.peek()[0] == "op" and self.peek()[1] in "+-":
            op = self.take()[1]
            rhs = self.oterm()
            node = ("add" if op == "+" else "sub", node, rhs)
        return node

    def oterm(self):
        node = self.cterm()
        while self.peek()[0] == "oct":
            self.take()
            node = ("oct", node, self.cterm())
        return node

    def cterm(self):
        node = self.unary()
        while self.peek()[0] == "op" and self.peek()[1] in "*^":
            op = self.take()[1]
            node = ("clifford" if op == "*" else "wedge", node, self.unary())
        return node

    def unary(self):
        kind, value, pos = self.peek()
        if kind == "op" and value == "-":
            self.take()
            return ("neg", self.atom())
        return self.atom()

    def atom(self):
        kind, value, pos = self.take()
        if kind == "num":
            if "/" in value:
                num, den = value.split("/")
                if int(den) == 0:
                    raise ExprError("zero denominator", pos)
                return ("num", Fraction(int(num), int(den)))
            return ("num", Fraction(int(value)))
        if kind == "basis":
            return ("basis", value[1:], pos)
        if kind == "op" and value == "(":
            node = self.expr()
            k, v, p = self.take()
            if not (k == "op" and v == ")"):
                raise ExprError("expected ')'", p)
            return node
        raise ExprError(f"expected a value, got {value!r}" if value else "unexpected end of input", pos)


def parse_expr(text: str):
    """Parse an expression to its AST; raises ExprError with a position."""
    parser = _Parser(text)
    node = parser.expr()
    kind, value, pos = parser.peek()
    if kind != "end":
        raise ExprError(f"trailing input {value!r}", pos)
    return node


def _basis_value(digits: str, pos: int) -> Multivector:
    if digits == "0":
        return Multivector.scalar(1, CL07)
    if "0" in digits:
        raise ExprError("0 denotes the scalar unit and cannot join other indices", pos)
    indices = [int(ch) for ch in digits]
    if any(i > 7 for i in indices):
        raise ExprError("generator indices run from 1 to 7", pos)
    return blade_from_indices(indices, CL07)


def evaluate_expr(node) -> Multivector:
    """Evaluate an AST to a multivector in signature (0,7)."""
    kind = node[0]
    if kind == "num":
        return Multivector.scalar(node[1], CL07)
    if kind == "basis":
        return _basis_value(node[1], node[2])
    if kind == "neg":
        return evaluate_expr(node[1]) * -1
    if kind == "add":
        return evaluate_expr(node[1]) + evaluate_expr(node[2])
    if kind == "sub":
        return evaluate_expr(node[1]) - evaluate_expr(node[2])
    if kind == "clifford":
        return evaluate_expr(node[1]) * evaluate_expr(node[2])
    if kind == "wedge":
        return evaluate_expr(node[1]) ^ evaluate_expr(node[2])
    if kind == "oct":
        left = evaluate_expr(node[1])
        right = evaluate_expr(node[2])
        try:
            product = as_octonion(left) * as_octonion(right)
        except ValueError as exc:
            raise ValueError(f"'o' needs paravector operands: {exc}") from None
        return product.to_multivector(CL07)
    raise ValueError(f"unknown node {kind!r}")


def evaluate(text: str) -> Multivector:
    return evaluate_expr(parse_expr(text))


# ---------------------------------------------------------------------------
# Commands


@click.group()
def main() -> None:
    """Exact octonion and Clifford-algebra toolkit."""


def _parse_operand(text: str, flag: str) -> Multivector:
    try:
        return evaluate(text)
    except ValueError as exc:
        raise click.UsageError(f"{flag}: {exc}") from None


_PARAVECTOR_LABELS = ["1"] + [f"e{a}" for a in range(1, 8)]
# Products whose entry maps accept arbitrary-grade operands.
_BLADE_LEFT = {"odot_L", "odot_R", "bullet_one"}
_BLADE_RIGHT = {"odot_L", "odot_R"}


def _mask_label(mask: int) -> str:
    if mask == 0:
        return "1"
    return "e" + "".join(str(i + 1) for i in range(7) if mask >> i & 1)


@main.command()
@click.option("--product", "product_name", default="circ", show_default=True,
              help="Registry name: " + ", ".join(sorted(PRODUCTS)) + ".")
@click.option("--u", "u_text", default=None, help="Deformer expression.")
@click.option("--v", "v_text", default=None, help="Second deformer expression.")
@click.option("--x", "x_text", default=None, help="Alias for --u.")
@click.option("--format", "fmt", type=click.Choice(["md", "csv", "json"]), default="md",
              show_default=True)
@click.option("--blades", is_flag=True,
              help="Table over all 128 basis blades instead of the 8 paravector units.")
def table(product_name: str, u_text: Optional[str], v_text: Optional[str],
          x_text: Optional[str], fmt: str, blades: bool) -> None:
    """Print the multiplication table of a (possibly deformed) product."""
    if u_text is not None and x_text is not None:
        raise click.UsageError("--u and --x are aliases; give only one")
    u = _parse_operand(u_text or x_text, "--u") if (u_text or x_text) else None
    v = _parse_operand(v_text, "--v") if v_text else None
    try:
        spec = named_product(product_name, u=u, v=v)
    except ValueError as exc:
        raise click.UsageError(str(exc)) from None

    if blades:
        left_map, right_map, outer, _ = PRODUCTS[product_name]
        ok_left = left_map in _BLADE_LEFT or outer == "bullet_right"
        if not (ok_left and right_map in _BLADE_RIGHT):
            capable = sorted(
                name for name, (lm, rm, out, _) in PRODUCTS.items()
                if (lm in _BLADE_LEFT or out == "bullet_right") and rm in _BLADE_RIGHT
            )
            raise click.UsageError(
                f"product {product_name!r} folds its entries through the octonion product, "
                f"so blades of grade 2+ are not valid entries; blade-capable products: "
                + ", ".join(capable)
            )
        masks = sorted(range(128), key=lambda m: (m.bit_count(), m))
        labels = [_mask_label(m) for m in masks]
        operands = [Multivector.basis(m, CL07) for m in masks]
    else:
        labels = _PARAVECTOR_LABELS
        operands = [Multivector.scalar(1, CL07)] + [
            Multivector.basis(1 << (a - 1), CL07) for a in range(1, 8)
        ]

    rows = []
    for a in operands:
        rows.append([as_multivector(deformed(a, b, spec)) for b in operands])

    if fmt == "json":
        doc = {
            "product": product_name,
            "u": to_doc(spec.u),
            "v": to_doc(spec.v) if spec.v is not None else None,
            "labels": labels,
            "entries": [[to_doc(value) for value in row] for row in rows],
        }
        click.echo(json.dumps(doc, indent=2))
        return
    cells = [[str(value) for value in row] for row in rows]
    if fmt == "csv":
        buffer = io.StringIO()
        writer = csv.writer(buffer)
        writer.writerow([""] + labels)
        for label, row in zip(labels, cells):
            writer.writerow([label] + row)
        click.echo(buffer.getvalue().rstrip("\n"))
        return
    widths = [max(len(labels[j]), max(len(row[j]) for row in cells)) for j in range(len(labels))]
    head = max(len(label) for label in labels)
    click.echo("| " + " " * head + " | " + " | ".join(l.ljust(w) for l, w in zip(labels, widths)) + " |")
    click.echo("|" + "-" * (head + 2) + "|" + "|".join("-" * (w + 2) for w in widths) + "|")
    for label, row in zip(labels, cells):
        click.echo("| " + label.ljust(head) + " | " + " | ".join(c.ljust(w) for c, w in zip(row, widths)) + " |")


@main.command("eval")
@click.argument("expression")
def eval_command(expression: str) -> None:
    """Evaluate an expression and print its multivector document."""
    try:
        value = evaluate(expression)
    except ValueError as exc:
        raise click.UsageError(str(exc)) from None
    click.echo(codec_dumps(value))


@main.command()
@click.option("--suite", "suite_name", default="all", show_default=True,
              type=click.Choice(sorted(SUITES) + ["all"]))
@click.option("--errata", "errata_path", type=click.Path(exists=True, dir_okay=False),
              default=None, help="Errata file (defaults to the bundled one).")
@click.option("--json", "json_path", type=click.Path(dir_okay=False), default=None,
              help="Write the full report as JSON to this path.")
@click.option("--seed", default=0, show_default=True, type=int)
def verify(suite_name: str, errata_path: Optional[str], json_path: Optional[str], seed: int) -> None:
    """Run verification suites; exit 1 on any uncovered mismatch."""
    errata = load_errata(errata_path)
    if suite_name == "all":
        result = run_all(seed, errata)
        reports = result.reports
    else:
        report = run_suite(suite_name, seed, errata)
        reports = [report]
        result = None

    failed = False
    for report in reports:
        counts = report.counts()
        covered = sum(
            1 for case in report.mismatches() if len(case.flags.get("covered_by", [])) == 1
        )
        line = (
            f"{report.suite}: {counts['match']} match, {counts['mismatch']} mismatch"
            f" ({covered} errata-covered), {counts['no-claim']} no-claim"
        )
        click.echo(line)
        for case in report.mismatches():
            matching = case.flags.get("covered_by", [])
            if len(matching) != 1:
                failed = True
                why = "uncovered" if not matching else f"covered {len(matching)} times"
                click.echo(f"  {why}: {case.id}")
                click.echo(f"    claim   : {case.claim}")
                click.echo(f"    computed: {case.computed}")

    if result is not None:
        for erratum_id in result.unused_errata:
            failed = True
            click.echo(f"unused erratum: {erratum_id}")
        if json_path:
            Path(json_path).write_text(json.dumps(result_doc(result), indent=2) + "\n")
        failed = failed or not result.passed
    elif json_path:
        from .verify import report_doc

        Path(json_path).write_text(json.dumps(report_doc(reports[0]), indent=2) + "\n")

    click.echo("FAIL" if failed else "PASS")
    if failed:
        sys.exit(1)


@main.command()
@click.option("--blade", "blade_name", default=None, help="One blade name, e.g. e136.")
@click.option("--all", "emit_all", is_flag=True, help="Emit all 63 matrices.")
@click.option("--fixtures", "fixtures_dir", type=click.Path(exists=True, file_okay=False),
              default=None, help="Directory holding left_action_matrices.json.")
@click.option("--check", is_flag=True, help="Compare computed matrices against the fixture file.")
def matrep(blade_name: Optional[str], emit_all: bool, fixtures_dir: Optional[str], check: bool) -> None:
    """Emit or check the 8x8 left-action matrices."""
    fixture_path = (
        Path(fixtures_dir) / "left_action_matrices.json" if fixtures_dir else bundled_fixture_path()
    )
    if check:
        diffs = fixture_differences(fixture_path)
        errata = load_errata()
        bad = False
        if not diffs:
            click.echo("all 63 fixture matrices match")
        for name, row, col, stored, computed in diffs:
            covering = [e.id for e in errata if e.matches(f"matrep/fixture/{name}")]
            note = f" [erratum {covering[0]}]" if len(covering) == 1 else " [UNCOVERED]"
            if len(covering) != 1:
                bad = True
            click.echo(f"{name}: row {row}, column {col}: stored {stored}, computed {computed}{note}")
        if bad:
            sys.exit(1)
        return
    if emit_all:
        doc = {
            name: matrix_to_doc(left_action_matrix(Multivector.basis(blade_mask(name), CL07)))
            for name in blade_names()
        }
        click.echo(json.dumps(doc, indent=2))
        return
    if blade_name is None:
        raise click.UsageError("give --blade NAME, --all, or --check")
    try:
        mask = blade_mask(blade_name)
    except ValueError as exc:
        raise click.UsageError(str(exc)) from None
    matrix = left_action_matrix(Multivector.basis(mask, CL07))
    click.echo(json.dumps({blade_name: matrix_to_doc(matrix)}, indent=2))


@main.command()
@click.option("--x", "x_text", required=True, help="Unit-norm paravector expression.")
def torsion(x_text: str) -> None:
    """Print the nonzero torsion components at a unit point."""
    value = _parse_operand(x_text, "--x")
    try:
        point = as_octonion(value)
        tensor = torsion_tensor(point)
    except ValueError as exc:
        raise click.UsageError(str(exc)) from None
    count = 0
    for (i, j, k), component in tensor.nonzeros():
        click.echo(f"T[{i},{j},{k}] = {component.numerator}/{component.denominator}")
        count += 1
    click.echo(f"{count} nonzero of 343 components")


if __name__ == "__main__":
    main()
