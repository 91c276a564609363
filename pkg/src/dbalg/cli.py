"""Command-line interface: structure reports, classification, tables, checks.

Subcommands::

    dbalg info M N R [--format text|json] [--figure PATH]
    dbalg classify M N R1 P Q R2 [--format text|json]
    dbalg constants M N R [--format text|json]
    dbalg verify [--max-dim K] [--format text|json]

Results go to stdout, diagnostics to stderr, and text output is fixed-width
aligned with no color, so it pipes cleanly.  Exit codes: 0 success (for
``classify``: isomorphic; for ``verify``: all checks pass), 1 for a negative
``classify`` verdict or a failed check, 2 for usage errors.  The ``DB_SEED``
environment variable (integer, default 0) seeds the random-generator sweeps
of ``verify``.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import dataclass
from fractions import Fraction

from .classify import AlgebraSpec, ClassificationVerdict, iso_decision
from .derived import RankOutOfRangeError, algebra_to_dict, build_algebra, label_string
from .linalg import Matrix
from .structure import decomposition_report
from .supermatrix import SuperShape
from .sweep import run_all


@dataclass
class CliConfig:
    """Parsed invocation: subcommand, integer arguments, rendering options."""

    command: str
    args: tuple[int, ...] = ()
    fmt: str = "text"
    max_dim: int = 4
    seed: int = 0
    figure: str | None = None


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="dbalg",
        description=(
            "Lie algebras carried by the lower-left block of gl(M|N) under a "
            "rank-R square-zero derived bracket: reports, tables, classification."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_format(p: argparse.ArgumentParser) -> None:
        p.add_argument(
            "--format", dest="fmt", choices=("text", "json"), default="text",
            help="output format (default: text)",
        )

    p_info = sub.add_parser("info", help="dimension report for one algebra")
    for name in ("M", "N", "R"):
        p_info.add_argument(name, type=int)
    add_format(p_info)
    p_info.add_argument(
        "--figure", metavar="PATH", default=None,
        help="additionally render the basis-grid role figure to this file",
    )

    p_cls = sub.add_parser("classify", help="decide isomorphism of two algebras")
    for name in ("M", "N", "R1", "P", "Q", "R2"):
        p_cls.add_argument(name, type=int)
    add_format(p_cls)

    p_con = sub.add_parser("constants", help="structure constants on the F_ij basis")
    for name in ("M", "N", "R"):
        p_con.add_argument(name, type=int)
    add_format(p_con)

    p_ver = sub.add_parser("verify", help="run the cross-check families")
    p_ver.add_argument(
        "--max-dim", dest="max_dim", type=int, default=4,
        help="largest block size swept (default: 4)",
    )
    add_format(p_ver)

    return parser


def _usage_error(message: str) -> int:
    print(f"dbalg: error: {message}", file=sys.stderr)
    print("run 'dbalg --help' for usage", file=sys.stderr)
    return 2


def _spec(m: int, n: int, r: int) -> AlgebraSpec:
    return AlgebraSpec(m, n, r)


def _render_pairs(pairs: list[tuple[str, str]]) -> str:
    width = max(len(key) for key, _ in pairs)
    return "\n".join(f"{key:<{width}}  {value}" for key, value in pairs)


def cmd_info(cfg: CliConfig) -> int:
    m, n, r = cfg.args
    report = decomposition_report(SuperShape(m, n), r)
    if cfg.fmt == "json":
        print(json.dumps(report.to_dict(), indent=2))
    else:
        print(
            _render_pairs(
                [
                    ("algebra", f"gl({m}|{n}) corner, generator rank {r}"),
                    ("dim total", str(report.dim_total)),
                    ("dim levi", f"{report.dim_levi}  [{report.levi_type}]"),
                    ("dim radical", str(report.dim_radical)),
                    ("dim center", str(report.dim_center)),
                    ("abelian", "yes" if report.is_abelian else "no"),
                    ("solvable", "yes" if report.is_solvable else "no"),
                ]
            )
        )
    if cfg.figure is not None:
        from .figures import render_block_role_figure

        render_block_role_figure(SuperShape(m, n), r, cfg.figure)
        print(f"figure written to {cfg.figure}", file=sys.stderr)
    return 0


def _matrix_strings(matrix: Matrix) -> list[list[str]]:
    return [
        [f"{c.numerator}/{c.denominator}" for c in row]
        for row in matrix.entries
    ]


def _verdict_dict(verdict: ClassificationVerdict) -> dict:
    record: dict = {
        "left": {"m": verdict.left.m, "n": verdict.left.n, "r": verdict.left.r},
        "right": {"m": verdict.right.m, "n": verdict.right.n, "r": verdict.right.r},
        "isomorphic": verdict.isomorphic,
        "witness_kind": verdict.witness_kind,
        "witness_matrix": (
            _matrix_strings(verdict.witness.matrix) if verdict.witness else None
        ),
        "separator": (
            {
                "invariant": verdict.separator.invariant,
                "left_value": verdict.separator.left_value,
                "right_value": verdict.separator.right_value,
            }
            if verdict.separator
            else None
        ),
        "note": verdict.note,
    }
    return record


def cmd_classify(cfg: CliConfig) -> int:
    m, n, r1, p, q, r2 = cfg.args
    verdict = iso_decision(_spec(m, n, r1), _spec(p, q, r2))
    if cfg.fmt == "json":
        print(json.dumps(_verdict_dict(verdict), indent=2))
    else:
        lines = [("verdict", "ISOMORPHIC" if verdict.isomorphic else "NOT ISOMORPHIC"),
                 ("left", str(verdict.left)),
                 ("right", str(verdict.right))]
        if verdict.witness is not None:
            kind = verdict.witness_kind
            detail = "F_i_j -> -F_j_i" if kind == "flip" else "coordinate identity"
            lines.append(("witness", f"{kind} ({detail})"))
        else:
            sep = verdict.separator
            lines.append(
                ("separator", f"{sep.invariant}: {sep.left_value} vs {sep.right_value}")
            )
        if verdict.note:
            lines.append(("note", verdict.note))
        print(_render_pairs(lines))
    return 0 if verdict.isomorphic else 1


def _format_terms(terms, labels) -> str:
    parts = []
    for w, c in terms:
        sign = "-" if c < 0 else "+"
        mag = -c if c < 0 else c
        coeff = f"{mag.numerator}/{mag.denominator}" if mag.denominator != 1 else str(mag.numerator)
        parts.append(f"{sign}{coeff} {label_string(labels[w])}")
    return "  ".join(parts)


def cmd_constants(cfg: CliConfig) -> int:
    m, n, r = cfg.args
    algebra = build_algebra(SuperShape(m, n), r)
    if cfg.fmt == "json":
        print(json.dumps(algebra_to_dict(algebra), indent=2))
        return 0
    labels = algebra.basis_labels
    print(f"gl({m}|{n}) corner, generator rank {r}: dim {algebra.dim}")
    print("basis  " + " ".join(label_string(label) for label in labels))
    pairs = sorted(algebra.table)
    if not pairs:
        print("all brackets vanish (abelian)")
        return 0
    headers = [
        f"[{label_string(labels[u])}, {label_string(labels[v])}]" for u, v in pairs
    ]
    width = max(len(h) for h in headers)
    for header, (u, v) in zip(headers, pairs):
        print(f"{header:<{width}}  =  {_format_terms(algebra.table[(u, v)], labels)}")
    return 0


def cmd_verify(cfg: CliConfig) -> int:
    results = run_all(max_dim=cfg.max_dim, seed=cfg.seed)
    all_passed = all(result.passed for result in results)
    if cfg.fmt == "json":
        print(
            json.dumps(
                [
                    {
                        "family": result.family,
                        "cases": result.cases,
                        "passed": result.passed,
                        "failures": result.failures,
                    }
                    for result in results
                ],
                indent=2,
            )
        )
    else:
        for result in results:
            print(result.summary())
            for failure in result.failures:
                print(f"      counterexample: {failure}")
        total = sum(result.cases for result in results)
        print(f"{'OK' if all_passed else 'FAILED'}  {total} cases across {len(results)} families")
    return 0 if all_passed else 1


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        namespace = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2

    command = namespace.command
    try:
        if command == "info":
            cfg = CliConfig(
                command, (namespace.M, namespace.N, namespace.R), namespace.fmt,
                figure=namespace.figure,
            )
            _spec(*cfg.args)
            return cmd_info(cfg)
        if command == "classify":
            cfg = CliConfig(
                command,
                (namespace.M, namespace.N, namespace.R1,
                 namespace.P, namespace.Q, namespace.R2),
                namespace.fmt,
            )
            _spec(*cfg.args[:3])
            _spec(*cfg.args[3:])
            return cmd_classify(cfg)
        if command == "constants":
            cfg = CliConfig(command, (namespace.M, namespace.N, namespace.R), namespace.fmt)
            _spec(*cfg.args)
            return cmd_constants(cfg)
        if command == "verify":
            if namespace.max_dim < 1:
                return _usage_error("--max-dim must be >= 1")
            seed_text = os.environ.get("DB_SEED", "0")
            try:
                seed = int(seed_text)
            except ValueError:
                return _usage_error(f"DB_SEED must be an integer, got {seed_text!r}")
            cfg = CliConfig(command, (), namespace.fmt, max_dim=namespace.max_dim, seed=seed)
            return cmd_verify(cfg)
    except (RankOutOfRangeError, ValueError) as exc:
        return _usage_error(str(exc))
    raise AssertionError(f"unhandled command {command}")  # pragma: no cover


def entrypoint() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entrypoint()
