"""Command-line front end: text / JSON / LaTeX output and the matrix cache."""

from __future__ import annotations

import argparse
import json
import os
import sys
import tempfile
from fractions import Fraction
from typing import Optional, Sequence

from . import analysis, invariants, symfun
from .combinatorics import (
    EMPTY,
    Composition,
    composition_sort_key,
    enumerate_compositions,
    is_composition,
    weight,
)
from .symfun import TransitionMatrix
from .xring import XPolynomial, derivation_d

CACHE_FORMAT_VERSION = 1
CACHE_ENV_VAR = "JRING_CACHE"


# ---------------------------------------------------------------------------
# On-disk transition matrix cache


class DiskCache:
    """One JSON file per (n, ell); atomic write-then-rename, version checked."""

    def __init__(self, directory: str):
        self.directory = directory

    def _path(self, n: int, ell: int) -> str:
        return os.path.join(self.directory, f"M_{n}_{ell}.json")

    def load(self, n: int, ell: int) -> Optional[TransitionMatrix]:
        path = self._path(n, ell)
        try:
            with open(path, "r", encoding="utf-8") as fh:
                data = json.load(fh)
        except (OSError, json.JSONDecodeError):
            return None
        if (
            not isinstance(data, dict)
            or data.get("version") != CACHE_FORMAT_VERSION
            or data.get("n") != n
            or data.get("ell") != ell
        ):
            return None
        try:
            partitions = [tuple(p) for p in data["partitions"]]
            compositions = [tuple(b) for b in data["compositions"]]
            matrix = data["matrix"]
            entries = {}
            for i, lam in enumerate(partitions):
                for j, beta in enumerate(compositions):
                    if matrix[i][j] != 0:
                        entries[(lam, beta)] = matrix[i][j]
        except (KeyError, TypeError, IndexError):
            return None
        return TransitionMatrix(n, ell, partitions, compositions, entries)

    def store(self, tm: TransitionMatrix) -> None:
        os.makedirs(self.directory, exist_ok=True)
        matrix = [
            [tm.entry(lam, beta) for beta in tm.compositions]
            for lam in tm.partitions
        ]
        payload = {
            "version": CACHE_FORMAT_VERSION,
            "n": tm.n,
            "ell": tm.ell,
            "partitions": [list(p) for p in tm.partitions],
            "compositions": [list(b) for b in tm.compositions],
            "matrix": matrix,
        }
        fd, tmp_path = tempfile.mkstemp(
            dir=self.directory, prefix=f".M_{tm.n}_{tm.ell}.", suffix=".tmp"
        )
        try:
            with os.fdopen(fd, "w", encoding="utf-8") as fh:
                json.dump(payload, fh)
            os.replace(tmp_path, self._path(tm.n, tm.ell))
        except OSError:
            try:
                os.unlink(tmp_path)
            except OSError:
                pass
            raise


# ---------------------------------------------------------------------------
# Rendering


def _coeff_str(c: Fraction) -> str:
    if c.denominator == 1:
        return str(c.numerator)
    return f"{c.numerator}/{c.denominator}"


def render_polynomial_json(p: XPolynomial) -> list[dict]:
    return [
        {"partition": list(lam), "coeff": _coeff_str(c)}
        for lam, c in p.sorted_terms()
    ]


def _monomial_text(lam, sep: str) -> str:
    if not lam:
        return "1"
    pieces = []
    for v in sorted(set(lam)):
        e = lam.count(v)
        pieces.append(f"x{v}" + (f"^{e}" if e > 1 else ""))
    return sep.join(pieces)


def _monomial_latex(lam) -> str:
    if not lam:
        return "1"
    pieces = []
    for v in sorted(set(lam)):
        e = lam.count(v)
        pieces.append(f"x_{{{v}}}" if v >= 10 else f"x_{v}")
        if e > 1:
            pieces[-1] += f"^{{{e}}}" if e >= 10 else f"^{e}"
    return "".join(pieces)


def _render_terms(terms, mono_fn, joiner: str = " ") -> str:
    if not terms:
        return "0"
    out = ""
    for i, (lam, c) in enumerate(terms):
        mono = mono_fn(lam)
        mag = abs(c)
        if mono == "1":
            body = _coeff_str(mag)
        elif mag == 1:
            body = mono
        else:
            body = f"{_coeff_str(mag)}{joiner}{mono}"
        if i == 0:
            out = body if c > 0 else f"-{body}"
        else:
            out += f" + {body}" if c > 0 else f" - {body}"
    return out


def render_polynomial_text(p: XPolynomial) -> str:
    return _render_terms(
        p.sorted_terms(), lambda lam: _monomial_text(lam, "*"), joiner="*"
    )


def render_polynomial_latex(p: XPolynomial) -> str:
    return _render_terms(p.sorted_terms(), _monomial_latex)


def render_polynomial(p: XPolynomial, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(render_polynomial_json(p))
    if fmt == "latex":
        return render_polynomial_latex(p)
    return render_polynomial_text(p)


def sorted_combination(comb: invariants.JCombination):
    return sorted(comb.items(), key=lambda kv: composition_sort_key(kv[0]))


def render_combination(comb: invariants.JCombination, fmt: str) -> str:
    items = sorted_combination(comb)
    if fmt == "json":
        return json.dumps(
            [{"beta": list(b), "coeff": str(c)} for b, c in items]
        )
    if fmt == "latex":
        bits = []
        for b, c in items:
            label = ",".join(str(x) for x in b) if b else r"\emptyset"
            mag = "" if abs(c) == 1 else str(abs(c))
            body = f"{mag}g_{{({label})}}"
            bits.append(body if c > 0 or not bits else body)
        out = ""
        for (b, c), body in zip(items, bits):
            if not out:
                out = body if c > 0 else f"-{body}"
            else:
                out += f" + {body}" if c > 0 else f" - {body}"
        return out or "0"
    bits = []
    for b, c in items:
        label = "(" + ",".join(str(x) for x in b) + ")" if b else "(empty)"
        bits.append(f"{c}*g{label}")
    return " + ".join(bits) if bits else "0"


def beta_label(beta: Composition) -> str:
    return "(" + ",".join(str(x) for x in beta) + ")" if beta else "(empty)"


# ---------------------------------------------------------------------------
# Argument parsing


def parse_beta(text: str) -> Composition:
    if text == "empty":
        return EMPTY
    try:
        beta = tuple(int(x) for x in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"cannot parse index {text!r}")
    if not is_composition(beta) or beta == ():
        raise argparse.ArgumentTypeError(
            f"{text!r} is not a valid index: entries >= 0 with last >= 1, "
            "or 'empty'"
        )
    return beta


def parse_kvec(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(x) for x in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"cannot parse k values {text!r}")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="jring",
        description="Exact computations in the ring of Atiyah-Segal "
        "invariant polynomials.",
    )
    parser.add_argument(
        "--cache-dir",
        default=None,
        help=f"transition-matrix cache directory (default: ${CACHE_ENV_VAR})",
    )
    parser.add_argument(
        "--format",
        choices=("text", "json", "latex"),
        default="text",
        help="output format",
    )
    # the same options are accepted after the subcommand; when given there
    # they override the top-level value, otherwise SUPPRESS keeps it
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--cache-dir", default=argparse.SUPPRESS)
    common.add_argument(
        "--format",
        choices=("text", "json", "latex"),
        default=argparse.SUPPRESS,
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("basis", parents=[common], help="list a basis slice with polynomials")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--ell", type=int, required=True)
    p.add_argument("--zero-only", action="store_true")

    p = sub.add_parser("poly", parents=[common], help="print one basis polynomial")
    p.add_argument("beta", type=parse_beta)

    p = sub.add_parser("product", parents=[common], help="product of two basis elements")
    p.add_argument("beta", type=parse_beta)
    p.add_argument("beta2", type=parse_beta)

    p = sub.add_parser("lift", parents=[common], help="lift a basis polynomial")
    p.add_argument("beta", type=parse_beta)
    p.add_argument("--max-degree", type=int, required=True)
    p.add_argument("--method", choices=("tilde", "exp"), default="tilde")

    p = sub.add_parser("chern", parents=[common], help="Chern character expansions")
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--ell", type=int)
    group.add_argument("--k", type=parse_kvec)
    p.add_argument("--max-degree", type=int, required=True)

    p = sub.add_parser("dims", parents=[common], help="dimension table")
    p.add_argument("--max-n", type=int, required=True)

    p = sub.add_parser("series", parents=[common], help="Poincare series coefficients")
    p.add_argument("--which", choices=("J", "Jl"), required=True)
    p.add_argument("--ell", type=int, default=None)
    p.add_argument("--order", type=int, required=True)

    p = sub.add_parser("generators", parents=[common], help="algebra generator candidates")
    p.add_argument("--max-n", type=int, required=True)

    p = sub.add_parser("relations", parents=[common], help="relations among generators")
    p.add_argument("--degree", type=int, required=True)

    p = sub.add_parser("verify", parents=[common], help="run the invariant verification suite")
    p.add_argument("--max-n", type=int, default=10)

    return parser


# ---------------------------------------------------------------------------
# Commands


def cmd_basis(args) -> int:
    betas = enumerate_compositions(
        args.n, args.ell, first=0 if args.zero_only else None
    )
    if args.format == "json":
        payload = [
            {
                "beta": list(b),
                "polynomial": render_polynomial_json(invariants.g_poly(b)),
            }
            for b in betas
        ]
        print(json.dumps(payload))
        return 0
    for b in betas:
        poly = invariants.g_poly(b)
        if args.format == "latex":
            label = ",".join(str(x) for x in b) if b else r"\emptyset"
            print(f"g_{{({label})}} &= {render_polynomial_latex(poly)} \\\\")
        else:
            print(f"g{beta_label(b)} = {render_polynomial_text(poly)}")
    return 0


def cmd_poly(args) -> int:
    print(render_polynomial(invariants.g_poly(args.beta), args.format))
    return 0


def cmd_product(args) -> int:
    comb = invariants.structure_constants(args.beta, args.beta2)
    print(render_combination(comb, args.format))
    return 0


def cmd_lift(args) -> int:
    if args.method == "tilde":
        poly = invariants.lift_tilde(args.beta, args.max_degree)
    else:
        poly = invariants.lift_exp(
            invariants.g_poly(args.beta), args.max_degree
        )
    print(render_polynomial(poly, args.format))
    return 0


def cmd_chern(args) -> int:
    if args.k is not None:
        poly = invariants.ch_numeric(args.k, args.max_degree)
        print(render_polynomial(poly, args.format))
        return 0
    table = invariants.chern_coefficients(args.ell, args.max_degree)
    items = sorted(
        table.items(), key=lambda kv: composition_sort_key((0,) + kv[0])
    )
    if args.format == "json":
        payload = [
            {"exponents": list(k), "polynomial": render_polynomial_json(v)}
            for k, v in items
        ]
        print(json.dumps(payload))
        return 0
    for exps, poly in items:
        if args.format == "latex":
            label = "".join(
                f"e_{j}" + (f"^{e}" if e > 1 else "")
                for j, e in enumerate(exps, start=2)
                if e > 0
            )
            print(f"{label} &: {render_polynomial_latex(poly)} \\\\")
        else:
            label = "*".join(
                f"e{j}" + (f"^{e}" if e > 1 else "")
                for j, e in enumerate(exps, start=2)
                if e > 0
            )
            print(f"{label}: {render_polynomial_text(poly)}")
    return 0


def cmd_dims(args) -> int:
    table = analysis.dimension_table(args.max_n)
    if args.format == "json":
        payload = [
            {"n": n, "dims": table.dims[n], "total": table.totals[n]}
            for n in range(1, args.max_n + 1)
        ]
        print(json.dumps(payload))
        return 0
    if args.format == "latex":
        for n in range(1, args.max_n + 1):
            cells = " & ".join(str(d) for d in table.dims[n])
            print(f"\\dim J_{{{n}}} & {cells} & {table.totals[n]} \\\\")
        return 0
    width = 4
    header = "  n |" + "".join(
        f"{ell:>{width}}" for ell in range(1, args.max_n + 1)
    ) + " | total"
    print(header)
    print("-" * len(header))
    for n in range(1, args.max_n + 1):
        row = table.dims[n] + [0] * (args.max_n - n)
        cells = "".join(f"{d:>{width}}" for d in row)
        print(f"{n:>3} |{cells} | {table.totals[n]:>5}")
    return 0


def cmd_series(args) -> int:
    if args.which == "Jl":
        if args.ell is None:
            print("jring series: --which Jl requires --ell", file=sys.stderr)
            return 2
        coeffs = analysis.poincare_series(args.order, args.ell)
    else:
        coeffs = analysis.poincare_series(args.order)
    if args.format == "json":
        print(json.dumps({"order": args.order, "coeffs": coeffs}))
        return 0
    if args.format == "latex":
        bits = []
        for n, c in enumerate(coeffs):
            if c == 0:
                continue
            coeff = "" if c == 1 and n > 0 else str(c)
            if n == 0:
                bits.append(str(c))
            elif n == 1:
                bits.append(f"{coeff}t")
            else:
                bits.append(f"{coeff}t^{{{n}}}")
        print(" + ".join(bits) + " + \\cdots")
        return 0
    print(" ".join(str(c) for c in coeffs))
    return 0


def cmd_generators(args) -> int:
    gens = analysis.generator_candidates(args.max_n)
    if args.format == "json":
        print(json.dumps([list(g) for g in gens]))
        return 0
    for g in gens:
        if args.format == "latex":
            print("g_{(" + ",".join(str(x) for x in g) + ")}")
        else:
            print(f"g{beta_label(g)}  (degree {weight(g)})")
    return 0


def cmd_relations(args) -> int:
    gens = analysis.generator_candidates(args.degree)
    relations = analysis.find_relations(args.degree, gens)
    if args.format == "json":
        payload = [
            [
                {"monomial": [list(b) for b in mono], "coeff": str(c)}
                for mono, c in sorted(rel.items())
            ]
            for rel in relations
        ]
        print(json.dumps(payload))
        return 0
    if not relations:
        print(f"no relations in degree {args.degree}")
        return 0
    for rel in relations:
        bits = []
        for mono, c in sorted(rel.items()):
            factors = "".join(f"g{beta_label(b)}" for b in mono)
            bits.append(f"{c}*{factors}")
        print(" + ".join(bits) + " = 0")
    return 0


def cmd_verify(args) -> int:
    failures = 0
    for name, ok in run_verification(args.max_n):
        print(f"{'PASS' if ok else 'FAIL'}  {name}")
        if not ok:
            failures += 1
    if failures:
        print(f"{failures} check(s) failed", file=sys.stderr)
        return 1
    return 0


def run_verification(max_n: int) -> list[tuple[str, bool]]:
    """Cross-checks between the independent computation routes."""
    results: list[tuple[str, bool]] = []

    ok = True
    try:
        table = analysis.dimension_table(max_n)
    except RuntimeError:
        ok = False
        table = None
    results.append(("dimension table: counting vs kernel rank", ok))

    if table is not None:
        series = analysis.poincare_series(max_n)
        ok = all(
            series[n] == table.totals[n] for n in range(1, max_n + 1)
        )
        results.append(("Poincare series matches dimension totals", ok))

    ok = True
    for n in range(1, max_n + 1):
        for ell in range(1, n + 1):
            tm = symfun.transition_matrix(n, ell)
            for beta in tm.compositions:
                exp = symfun.expand_elementary_product(beta, ell)
                for beta2 in tm.compositions:
                    want = 1 if beta == beta2 else 0
                    got = sum(
                        exp.get(lam, 0) * tm.entry(lam, beta2)
                        for lam in tm.partitions
                    )
                    if got != want:
                        ok = False
    results.append(("expansion times transition matrix is identity", ok))

    ok = True
    for n in range(2, max_n + 1):
        for ell in range(1, n):
            for beta in enumerate_compositions(n, ell):
                if symfun.waring_coefficient(beta) != symfun.transition_matrix(
                    n, ell
                ).entry((n - ell + 1,) + (1,) * (ell - 1), beta):
                    ok = False
    results.append(("Waring closed form matches matrix entries", ok))

    ok = True
    for n in range(1, max_n + 1):
        for ell in range(1, n + 1):
            for beta in enumerate_compositions(n, ell):
                image = derivation_d(invariants.g_poly(beta))
                if beta[0] == 0 or beta == (1,):
                    expected = XPolynomial.zero()
                else:
                    expected = invariants.g_poly((beta[0] - 1,) + beta[1:])
                if image != expected:
                    ok = False
    results.append(("derivation acts by lowering the first index", ok))

    ok = True
    half = max_n // 2
    labels = [
        beta
        for n in range(1, half + 1)
        for ell in range(1, n + 1)
        for beta in enumerate_compositions(n, ell, first=0)
    ]
    for b1 in labels:
        for b2 in labels:
            got = invariants.realize(invariants.j_product({b1: 1}, {b2: 1}))
            want = invariants.g_poly(b1) * invariants.g_poly(b2)
            if got != want:
                ok = False
    results.append(("structure constants realize polynomial products", ok))

    return results


COMMANDS = {
    "basis": cmd_basis,
    "poly": cmd_poly,
    "product": cmd_product,
    "lift": cmd_lift,
    "chern": cmd_chern,
    "dims": cmd_dims,
    "series": cmd_series,
    "generators": cmd_generators,
    "relations": cmd_relations,
    "verify": cmd_verify,
}


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    cache_dir = args.cache_dir or os.environ.get(CACHE_ENV_VAR)
    symfun.set_cache_backend(DiskCache(cache_dir) if cache_dir else None)
    try:
        return COMMANDS[args.command](args)
    except (ValueError, argparse.ArgumentTypeError) as exc:
        print(f"jring: {exc}", file=sys.stderr)
        return 2
    finally:
        symfun.set_cache_backend(None)


if __name__ == "__main__":
    sys.exit(main())
