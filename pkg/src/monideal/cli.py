"""Command-line front end: ``monideal <command> [options] IDEAL ...``.

Ideal arguments are DSL expressions (see :mod:`monideal.dsl`) or ``@file.json``.
Exit status is 0 on success, 1 on domain errors and 2 on parse errors.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
from fractions import Fraction

from . import covers as cov
from .decompose import decompose, is_m_irreducible, is_m_prime
from .dimension import max_chain, mdim, semicontinuity_radius
from .dsl import evaluate, max_index, parse, parse_monomial
from .errors import MonomialIdealError, ParseError
from .exponent import AmbientConfig, Mode, format_exponent
from .ideal import contains, format_monomial, ideal_sum, intersect, irredundant_generators, member
from .metric import distance
from .serialize import decomposition_to_dict, ideal_from_dict, ideal_to_dict
from .svg import RenderSpec, render_svg

COMMANDS = {
    "normalize": (1, "print the canonical form of an ideal"),
    "eq": (2, "test two ideals for equality"),
    "member": (2, "test whether MONOMIAL lies in IDEAL"),
    "sum": (2, "sum of two ideals"),
    "intersect": (2, "intersection of two ideals"),
    "generators": (1, "irredundant generators of a finitely generated ideal"),
    "decompose": (1, "irredundant m-irreducible decomposition"),
    "irreducible": (1, "test m-irreducibility"),
    "prime": (1, "test m-primality and report T with I = Q_T"),
    "mdim": (1, "monomial Krull dimension"),
    "chain": (1, "a longest chain of m-primes over the ideal"),
    "radius": (1, "semicontinuity radius"),
    "dist": (2, "certified distance enclosure"),
    "covers": (1, "minimal interval vertex covers of a diagonal quadratic ideal"),
    "plot": (1, "SVG staircase picture (d = 2)"),
}


def _fraction(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise argparse.ArgumentTypeError(f"not a number: {text!r}") from exc


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--dim", type=int, help="number of variables (default: largest index used)")
    common.add_argument("--mode", choices=["Q", "Z"], default="Q", help="rational (Q) or integer (Z) exponents")
    common.add_argument("--json", action="store_true", help="machine-readable output")

    parser = argparse.ArgumentParser(prog="monideal", description="Monomial ideals with rational exponents.")
    sub = parser.add_subparsers(dest="command", required=True)
    for name, (nargs, help_text) in COMMANDS.items():
        p = sub.add_parser(name, parents=[common], help=help_text)
        if name == "member":
            p.add_argument("monomial")
            p.add_argument("ideal")
        else:
            p.add_argument("ideals", nargs=nargs, metavar="IDEAL")
        if name == "mdim":
            p.add_argument("--chain", action="store_true", help="also print a longest m-prime chain")
        if name == "dist":
            p.add_argument("--tol", type=_fraction, default=Fraction(1, 10**6))
        if name == "covers":
            p.add_argument("--dot", action="store_true", help="emit the labelled graph in DOT format")
        if name == "plot":
            p.add_argument("--size", type=int, default=320)
            p.add_argument("--range", type=_fraction, dest="axis_max", help="upper end of both axes")
            p.add_argument("-o", "--out", help="write the SVG here instead of stdout")
    return parser


def _load(texts: list[str], args) -> list:
    """Parse every ideal argument under one ambient configuration."""
    sources = []
    json_cfg = None
    for text in texts:
        if text.startswith("@"):
            with open(text[1:]) as fh:
                ideal = ideal_from_dict(json.load(fh))
            json_cfg = json_cfg or ideal.cfg
            sources.append(ideal)
        else:
            sources.append(parse(text))
    if args.dim is not None:
        cfg = AmbientConfig(args.dim, Mode(args.mode))
    elif json_cfg is not None:
        cfg = json_cfg
    else:
        d = max((max_index(s) for s in sources if not hasattr(s, "boxes")), default=0)
        if d < 1:
            raise ParseError("cannot infer the dimension; pass --dim")
        cfg = AmbientConfig(d, Mode(args.mode))
    out = []
    for s in sources:
        if hasattr(s, "boxes"):
            if s.cfg != cfg:
                raise MonomialIdealError(f"JSON ideal has d={s.cfg.d}, mode={s.cfg.mode.value}; expected {cfg}")
            out.append(s)
        else:
            out.append(evaluate(s, cfg))
    return out, cfg


def _bool(value: bool, args) -> str:
    return json.dumps(value) if args.json else ("true" if value else "false")


def _set(t) -> str:
    return "{" + ",".join(str(i) for i in sorted(t)) + "}"


def _digits(tol: Fraction) -> int:
    return max(6, math.ceil(-math.log10(tol)) + 3) if tol < 1 else 6


def run(argv=None) -> str:
    """Execute one command and return its output text (raises on errors)."""
    args = build_parser().parse_args(argv)
    cmd = args.command

    if cmd == "member":
        (ideal,), cfg = _load([args.ideal], args)
        return _bool(member(parse_monomial(args.monomial, cfg), ideal), args)

    ideals, cfg = _load(args.ideals, args)
    first = ideals[0]

    if cmd in ("normalize", "sum", "intersect"):
        result = first
        if cmd == "sum":
            result = ideal_sum(*ideals)
        elif cmd == "intersect":
            result = intersect(*ideals)
        return json.dumps(ideal_to_dict(result)) if args.json else str(result)
    if cmd == "eq":
        return _bool(first == ideals[1], args)
    if cmd == "generators":
        gens = irredundant_generators(first)
        if args.json:
            return json.dumps([[format_exponent(x) for x in g] for g in gens])
        return "\n".join(format_monomial(g) for g in gens)
    if cmd == "decompose":
        dec = decompose(first)
        if args.json:
            return json.dumps(decomposition_to_dict(dec))
        return "\n".join(str(c) for c in dec.components)
    if cmd == "irreducible":
        return _bool(is_m_irreducible(first), args)
    if cmd == "prime":
        t = is_m_prime(first)
        if args.json:
            return json.dumps(None if t is None else sorted(t))
        return "not m-prime" if t is None else f"T = {_set(t)}"
    if cmd in ("mdim", "chain"):
        n = mdim(first)
        chain = max_chain(first) if (cmd == "chain" or args.chain) and not first.is_unit() else None
        if args.json:
            out = {"mdim": n if n != -math.inf else "-inf"}
            if chain is not None:
                out["chain"] = [sorted(t) for t in chain]
            return json.dumps(out)
        lines = [] if cmd == "chain" else [f"mdim = {n if n != -math.inf else '-inf'}"]
        if chain is not None:
            lines += [f"T{k} = {_set(t)}" for k, t in enumerate(chain)]
        return "\n".join(lines)
    if cmd == "radius":
        r = semicontinuity_radius(first)
        return json.dumps({"radius": format_exponent(r)}) if args.json else f"radius = {format_exponent(r)}"
    if cmd == "dist":
        enc = distance(first, ideals[1], args.tol)
        if args.json:
            return json.dumps({"lo": format_exponent(enc.lo), "hi": format_exponent(enc.hi)})
        return f"dist in {enc.format(_digits(args.tol))}"
    if cmd == "covers":
        graph = cov.graph_from_ideal(first)
        if args.dot:
            return cov.to_dot(graph).rstrip("\n")
        found = cov.covers_via_decomposition(first)
        if args.json:
            return json.dumps([
                {str(i): {"alpha": format_exponent(w.threshold), "strict": w.open} for i, w in c.sigma}
                for c in found
            ])
        return "\n".join(str(c) for c in found)
    if cmd == "plot":
        svg = render_svg(first, RenderSpec(size=args.size, axis_max=args.axis_max))
        if args.out:
            with open(args.out, "w") as fh:
                fh.write(svg)
            return ""
        return svg.rstrip("\n")
    raise AssertionError(cmd)


def main(argv=None) -> int:
    try:
        out = run(argv)
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return 2
    except (MonomialIdealError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    if out:
        print(out)
    return 0


if __name__ == "__main__":
    sys.exit(main())
