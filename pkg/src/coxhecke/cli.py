"""
Command-line interface.

    coxhecke reduce --preset A2 -- 1 0 1 1 0
    coxhecke support --preset A2 -- x "0 1" y "1 0"
    coxhecke bound --n 2
    coxhecke candidates --n 2 --m 1 s:0 1
    coxhecke verify --preset A2 --radius 8 --seed 0

Element syntax: "w:3,0" (window), "s:0 1 0" (word), "l:1,0,-1" (translation
by a cocharacter). Coxeter-system commands also take a bare word of generator
indices. Exit status: 0 ok, 1 domain error, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import sys
from collections.abc import Sequence

from . import affine as aff
from .coxeter import CoxeterSystem, GroupElement, load_system, preset
from .hecke import HeckeAlgebra
from .verify import VerifyScope, all_passed, format_report, run_verify

SUBCOMMANDS = (
    "length", "reduce", "inversions", "hecke-mult", "support", "support-upper",
    "twist", "translate-length", "sk", "bound", "enumerate", "small-twist",
    "candidates", "verify",
)


class DomainError(ValueError):
    pass


# ---- element syntax --------------------------------------------------------

def _ints(text: str, sep: str | None) -> list[int]:
    parts = text.replace(",", " ").split() if sep is None else [p for p in text.split(sep) if p.strip()]
    try:
        return [int(p) for p in parts]
    except ValueError:
        raise DomainError(f"malformed element syntax {text!r}") from None


def parse_word(tokens: Sequence[str]) -> list[int]:
    """'s:0 1 0', or bare indices spread over one or more tokens."""
    text = " ".join(tokens).strip()
    if text.startswith("s:"):
        text = text[2:].strip()
    elif ":" in text:
        raise DomainError(f"expected a word, got {text!r}")
    if text == "e":
        return []
    return _ints(text, None)


def parse_affine(tokens: Sequence[str], n: int | None = None) -> aff.AffinePermutation:
    text = " ".join(tokens).strip()
    if text.startswith("w:"):
        v = aff.AffinePermutation(tuple(_ints(text[2:], ",")))
    elif text.startswith("l:"):
        v = aff.translation(_ints(text[2:], ","))
    else:
        if n is None:
            raise DomainError(f"word {text!r} needs --n")
        v = aff.from_word(n, parse_word([text]))
    if n is not None and v.n != n:
        raise DomainError(f"element {text!r} has n = {v.n}, but --n {n} was given")
    return v


def parse_cocharacter(tokens: Sequence[str]) -> tuple[int, ...]:
    text = " ".join(tokens).strip()
    if not text.startswith("l:"):
        raise DomainError(f"expected a cocharacter 'l:...', got {text!r}")
    lam = tuple(_ints(text[2:], ","))
    if not lam:
        raise DomainError("empty cocharacter")
    return lam


def format_word(word: Sequence[int]) -> str:
    """Bare word for TSV columns; 'e' for the identity."""
    return " ".join(map(str, word)) or "e"


# ---- output ----------------------------------------------------------------

def emit(args, rows: list[dict], columns: Sequence[str], out) -> None:
    if args.format == "json":
        json.dump(rows, out, indent=None)
        out.write("\n")
    else:
        for row in rows:
            out.write("\t".join(str(row[c]) for c in columns) + "\n")


def affine_row(v: aff.AffinePermutation) -> dict:
    return {"length": v.length, "window": ",".join(map(str, v.window)), "word": format_word(v.word)}


def group_row(x: GroupElement) -> dict:
    return {"length": x.length, "word": format_word(x.word)}


def _system(args) -> CoxeterSystem:
    if args.preset and args.system:
        raise DomainError("give exactly one of --preset and --system")
    if args.system:
        return load_system(args.system)
    return preset(args.preset or "A2")


def _datum(args) -> aff.SuperbasicDatum:
    if args.n is None or args.m is None:
        raise DomainError("this command needs --n and --m")
    return aff.SuperbasicDatum(args.n, args.m)


def _xy(system: CoxeterSystem, tokens: Sequence[str]) -> tuple[GroupElement, GroupElement]:
    """Split 'x <word> y <word>' into two elements."""
    tokens = list(tokens)
    if "x" not in tokens or "y" not in tokens:
        raise DomainError("expected: x <word> y <word>")
    i, j = tokens.index("x"), tokens.index("y")
    if i != 0 or j < i:
        raise DomainError("expected: x <word> y <word>")
    x_tokens, y_tokens = tokens[i + 1:j], tokens[j + 1:]
    return system.element(parse_word(x_tokens)), system.element(parse_word(y_tokens))


# ---- commands --------------------------------------------------------------

def cmd_length(args, out):
    if args.n is not None or (args.items and args.items[0][:2] in ("w:", "l:")):
        v = parse_affine(args.items, args.n)
        out.write(f"{v.length}\n")
    else:
        out.write(f"{_system(args).element(parse_word(args.items)).length}\n")


def cmd_reduce(args, out):
    W = _system(args)
    word = W.reduce_word(parse_word(args.items))
    if args.format == "json":
        json.dump({"word": list(word), "length": len(word)}, out)
        out.write("\n")
    else:
        out.write(format_word(word) + "\n")


def cmd_inversions(args, out):
    W = _system(args)
    x = W.element(parse_word(args.items))
    roots = sorted(x.inversion_set(), key=lambda a: [str(c) for c in a.coords])
    rows = [{"root": str(a), "coords": ",".join(str(c) for c in a.coords)} for a in roots]
    emit(args, rows, ("coords", "root"), out)


def _algebra(args, W):
    weights = _ints(args.weights, ",") if args.weights else None
    return HeckeAlgebra(W, weights)


def cmd_hecke_mult(args, out):
    W = _system(args)
    x, y = _xy(W, args.items)
    prod = _algebra(args, W).t_mult(x, y)
    if args.format == "json":
        json.dump(prod.to_json(), out)
        out.write("\n")
    else:
        for w, p in prod.sorted_items():
            out.write(f"{w.length}\t{format_word(w.word)}\t{p}\n")


def cmd_support(args, out):
    W = _system(args)
    x, y = _xy(W, args.items)
    H = _algebra(args, W)
    elems = H.support(x, y) if args.command == "support" else H.support_upper(x, y)
    rows = [group_row(w) for w in sorted(elems, key=lambda w: (w.length, w.word))]
    emit(args, rows, ("length", "word"), out)


def cmd_twist(args, out):
    d = _datum(args)
    v = parse_affine(args.items, d.n)
    emit(args, [affine_row(aff.beta_twist(v, d))], ("length", "window", "word"), out)


def cmd_translate_length(args, out):
    lam = parse_cocharacter(args.items)
    out.write(f"{aff.translation(lam).length}\n")


def cmd_sk(args, out):
    lam = parse_cocharacter(args.items)
    n = len(lam)
    if n < 2:
        raise DomainError("S_k needs n >= 2")
    d = aff.SuperbasicDatum(n, args.m) if args.m is not None else None
    rows = []
    for k in range(1, n):
        row = {"k": k, "S_k": aff.s_k_sum(lam, k)}
        if d is not None:
            row["d"] = aff.d_of(d, k)
        rows.append(row)
    emit(args, rows, ("k", "S_k", "d") if d else ("k", "S_k"), out)


def cmd_bound(args, out):
    if args.n is None:
        raise DomainError("bound needs --n")
    cap = aff.effective_cap(args.n) if args.corrected else args.cap
    f = aff.bound_f(args.n, cap)
    if args.format == "json":
        json.dump({"a": str(f.a), "b": str(f.b), "c": f.c, "text": str(f)}, out)
        out.write("\n")
    else:
        out.write(f"{f}\n")


def cmd_enumerate(args, out):
    if args.n is None or args.n < 1:
        raise DomainError("enumerate needs --n >= 1")
    radius = 3 if args.radius is None else args.radius
    rows = [affine_row(v) for v in aff.enumerate_ball(args.n, radius)]
    emit(args, rows, ("length", "window", "word"), out)


def cmd_small_twist(args, out):
    d = _datum(args)
    if len(args.items) != 1:
        raise DomainError("small-twist needs one positive integer r")
    (r,) = _ints(args.items[0], None)
    if r <= 0:
        raise DomainError(f"r must be positive, got {r}")
    rows = [affine_row(v) for v in aff.small_twist_set(d, r)]
    emit(args, rows, ("length", "window", "word"), out)


def cmd_candidates(args, out):
    d = _datum(args)
    w = parse_affine(args.items, d.n)
    rows = [affine_row(v) for v in aff.candidate_cells(d, w)]
    emit(args, rows, ("length", "window", "word"), out)


def cmd_verify(args, out) -> int:
    scope = VerifyScope(
        preset=args.preset or "A2",
        radius=8 if args.radius is None else args.radius,
        samples=args.samples,
        seed=args.seed,
    )
    system = load_system(args.system) if args.system else None
    results = run_verify(scope, system)
    out.write(format_report(results, scope, timing=not args.no_timing))
    return 0 if all_passed(results) else 1


COMMANDS = {
    "length": cmd_length, "reduce": cmd_reduce, "inversions": cmd_inversions,
    "hecke-mult": cmd_hecke_mult, "support": cmd_support, "support-upper": cmd_support,
    "twist": cmd_twist, "translate-length": cmd_translate_length, "sk": cmd_sk,
    "bound": cmd_bound, "enumerate": cmd_enumerate, "small-twist": cmd_small_twist,
    "candidates": cmd_candidates, "verify": cmd_verify,
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="coxhecke", description=__doc__.split("\n\n")[0].strip())
    sub = parser.add_subparsers(dest="command", required=True)
    for name in SUBCOMMANDS:
        p = sub.add_parser(name)
        p.add_argument("--preset")
        p.add_argument("--system", metavar="FILE")
        p.add_argument("--format", choices=("tsv", "json"), default="tsv")
        p.add_argument("--seed", type=int, default=0)
        p.add_argument("--radius", type=int)
        p.add_argument("--samples", type=int, default=200)
        p.add_argument("--n", type=int)
        p.add_argument("--m", type=int)
        if name in ("hecke-mult", "support", "support-upper"):
            p.add_argument("--weights", help="comma-separated L(s) per generator")
        if name == "bound":
            p.add_argument("--cap", type=int, help="finite-part cap c (default 2n-3)")
            p.add_argument("--corrected", action="store_true", help="use c = max(2n-3, n(n-1)/2)")
        if name == "verify":
            p.add_argument("--no-timing", action="store_true", help="print 0 in the millis column")
        p.add_argument("items", nargs="*")
    return parser


def main(argv: Sequence[str] | None = None, out=None) -> int:
    out = sys.stdout if out is None else out
    args = build_parser().parse_args(argv)
    try:
        status = COMMANDS[args.command](args, out)
    except (ValueError, OSError) as exc:
        # one line naming the violated precondition
        print(f"coxhecke {args.command}: error: {exc}", file=sys.stderr)
        return 1
    return status or 0


if __name__ == "__main__":
    sys.exit(main())
