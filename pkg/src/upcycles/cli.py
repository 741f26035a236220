"""Command-line frontend for the upcycle toolkit.

Words travel in the library's text format ('*' for the diamond, with
'⋄' accepted on input; parentheses mark a cyclic word), tables are TSV,
graphs are DOT.  Exit status is 0 on success or a positive verdict, 1
when a well-formed object fails certification, 2 on usage errors.
"""

from __future__ import annotations

import argparse
import itertools
import os
import sys
from fractions import Fraction
from pathlib import Path
from typing import IO, NoReturn, Sequence

from . import plots
from .graphs import cover_graph, export_dot, tour_pairs
from .liftfold import enumerate_debruijn_lifts, lift, lift_filler_params, try_fold
from .multiplier import alphabet_multiply, alphabet_multiply_lex, filler_params
from .necklaces import (
    ContainWord,
    Necklace,
    ZerosPrefix,
    euler_necklace,
    lex_necklace,
    reflect_expand_necklace,
    rotate_expand_necklace,
    stretch_necklace,
)
from .nonexistence import curtain_threshold, feasibility, feasibility_table
from .pseudorandom import (
    FiniteField,
    autocorrelation,
    balance,
    check_psd,
    check_r3,
    check_runs,
    puncture,
)
from .search import SearchSpec, cross_join, find_cross_join_pairs, search_upcycles
from .verify import (
    UpcycleParams,
    verify_perfect_necklace,
    verify_upcycle,
    verify_upword,
)
from .words import CapExceeded, PWord, diamond_offsets, format_word, parse_word


class UsageError(Exception):
    """Bad flags or malformed input; maps to exit status 2."""


class VerdictFailure(Exception):
    """A well-formed object failed certification; maps to exit status 1."""

    def __init__(self, line: str) -> None:
        super().__init__(line)
        self.line = line


class _Parser(argparse.ArgumentParser):
    def error(self, message: str) -> NoReturn:
        raise UsageError(message)


def _infer_alphabet(text: str) -> int:
    best = 2
    for ch in text.lower():
        if ch.isspace() or ch in "()*⋄":
            continue
        try:
            value = int(ch, 36)
        except ValueError:
            continue  # parse_word reports the bad character
        best = max(best, value + 1)
    return best


def _parse_text(text: str, alphabet: int | None, cyclic: bool | None) -> PWord:
    a = alphabet if alphabet is not None else _infer_alphabet(text)
    return parse_word(text, a, cyclic)


def _read_lines(path: str | None) -> list[str]:
    stream: IO[str] = sys.stdin if path in (None, "-") else open(path, encoding="utf-8")
    try:
        return [line.rstrip("\n") for line in stream]
    finally:
        if stream is not sys.stdin:
            stream.close()


def _word_texts(path: str | None) -> list[str]:
    texts = []
    for line in _read_lines(path):
        line = line.strip()
        if line and not line.startswith("#") and not line.startswith("NECKLACE"):
            texts.append(line)
    if not texts:
        raise UsageError("no word found in the input")
    return texts


def _single(texts: list[str]) -> str:
    if len(texts) != 1:
        raise UsageError(f"expected exactly one word in the input, got {len(texts)}")
    return texts[0]


def _certified_cycle(
    text: str, alphabet: int | None, n: int
) -> tuple[PWord, UpcycleParams]:
    u = _parse_text(text, alphabet, True)
    rep = verify_upcycle(u, n)
    if not rep.valid:
        raise VerdictFailure(rep.to_line())
    assert rep.params is not None
    return u, rep.params


def _read_record(path: str) -> tuple[str | None, str]:
    """Optional NECKLACE header plus the first word line of a file."""
    header = None
    for line in _read_lines(path):
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        if line.startswith("NECKLACE"):
            header = line
            continue
        return header, line
    raise UsageError(f"no word found in {path!r}")


def _wrap_necklace(word_text: str, a: int, n: int, t: int) -> Necklace:
    word = parse_word(word_text, a, cyclic=True)
    if not verify_perfect_necklace(word, a, n, t):
        raise VerdictFailure(
            f"INVALID reason=not-a-perfect-necklace witness=a={a} n={n} t={t}"
        )
    return Necklace(word, a, n, t)


def _read_necklace(path: str, want: tuple[int, int, int] | None = None) -> Necklace:
    """A verified necklace from a file; `want` supplies params when there
    is no header line."""
    header, word_text = _read_record(path)
    if header is not None:
        fields = dict(part.split("=", 1) for part in header.split()[1:])
        try:
            a, n, t = (int(fields[key]) for key in ("a", "n", "t"))
        except KeyError as exc:
            raise UsageError(f"NECKLACE header is missing field {exc}") from exc
    elif want is not None:
        a, n, t = want
    else:
        raise UsageError(f"{path!r} has no NECKLACE header line")
    return _wrap_necklace(word_text, a, n, t)


def _resolve_threads(value: int) -> int:
    env = os.environ.get("UPCYCLE_THREADS")
    if env:
        try:
            value = int(env)
        except ValueError:
            raise UsageError(f"UPCYCLE_THREADS must be an integer, got {env!r}")
    if value < 1:
        raise UsageError("thread count must be at least 1")
    return value


def _parse_offsets(text: str) -> frozenset[int]:
    try:
        return frozenset(int(part) for part in text.split(",") if part.strip())
    except ValueError:
        raise UsageError(f"--offsets must be a comma-separated list of integers, got {text!r}")


def _power_log(length: int, a: int) -> int:
    n, total = 0, 1
    while total < length:
        total *= a
        n += 1
    if total != length:
        raise UsageError(f"word length {length} is not a power of the alphabet size {a}")
    return n


def _debruijn_input(args: argparse.Namespace) -> PWord:
    text = _single(_word_texts(args.file))
    w = _parse_text(text, args.alphabet, True)
    n = _power_log(len(w), w.alphabet)
    rep = verify_upcycle(w, n)
    if not rep.valid or rep.params.d != 0:
        raise VerdictFailure(
            rep.to_line() if not rep.valid else "INVALID reason=not-a-de-bruijn-cycle"
        )
    return w


def _cmd_verify(args: argparse.Namespace) -> int:
    if args.cyclic and args.linear:
        raise UsageError("--cyclic and --linear are mutually exclusive")
    cyclic = True if args.cyclic else (False if args.linear else None)
    ok = True
    for text in _word_texts(args.file):
        w = _parse_text(text, args.alphabet, cyclic)
        rep = verify_upcycle(w, args.n) if w.cyclic else verify_upword(w, args.n)
        print(rep.to_line())
        ok = ok and rep.valid
    return 0 if ok else 1


def _cmd_analyze(args: argparse.Namespace) -> int:
    threads = _resolve_threads(args.threads)
    u = _parse_text(_single(_word_texts(args.file)), args.alphabet, True)
    rep = verify_upcycle(u, args.n)
    print(rep.to_line())
    if not rep.valid:
        return 1
    a, n, d = rep.params.a, rep.params.n, rep.params.d
    counts, even = balance(u)
    cells = "\t".join(f"{letter}={counts[letter]}" for letter in sorted(counts))
    print(f"balance\t{cells}\teven={'yes' if even else 'no'}")
    table, law = check_runs(u, n)
    for letter, r in sorted(table):
        print(f"run\t{letter}\t{r}\t{table[letter, r]}")
    print(f"run-law\t{'met' if law else 'missed'}")
    psd_ok, witness = check_psd(u, n)
    if psd_ok:
        print("psd\tpass")
    else:
        k, v, got, want = witness
        shown = format_word(PWord(v, a, cyclic=False))
        print(f"psd\tfail\tk={k}\tword={shown}\tgot={got}\twant={want}")
    sweep: dict[int, int | None] = {}
    if d != 0:
        print("r3\tskipped\tword has diamonds")
    else:
        try:
            field = FiniteField.for_order(a)
        except ValueError as exc:
            print(f"r3\tskipped\t{exc}")
        else:
            r3_ok, failing = check_r3(u, n, field, threads=threads)
            if r3_ok:
                print("r3\tpass")
            else:
                print("r3\tfail\ttau=" + ",".join(str(t) for t in failing))
            hat = puncture(u, n)
            sweep = {
                tau: autocorrelation(hat, tau, field).as_int()
                for tau in range(1, len(hat))
            }
    if args.figures:
        outdir = Path(args.figures)
        outdir.mkdir(parents=True, exist_ok=True)
        target = {r: Fraction(a ** (n - d), a**r) for r in range(1, n + 1)}
        written = [
            plots.balance_figure(counts, outdir / "balance.png"),
            plots.run_table_figure(table, target, outdir / "runs.png"),
        ]
        if sweep:
            written.append(
                plots.autocorrelation_figure(sweep, outdir / "autocorrelation.png")
            )
        for path in written:
            print(f"figure\t{path}")
    return 0


def _cmd_necklace(args: argparse.Namespace) -> int:
    how = args.construction
    if how in ("euler", "lex"):
        if args.a is None or args.n is None:
            raise UsageError(f"--a and --n are required for --construction {how}")
    if how == "euler":
        if args.t is None:
            raise UsageError("--t is required for --construction euler")
        if args.zeros_prefix and args.contain:
            raise UsageError("--zeros-prefix and --contain are mutually exclusive")
        constraint = ZerosPrefix() if args.zeros_prefix else None
        if args.contain:
            constraint = ContainWord(parse_word(args.contain, args.a, cyclic=False).chars)
        nk = euler_necklace(args.a, args.n, args.t, constraint)
        provenance = "Euler tour of the astute graph yields a perfect necklace"
    elif how == "lex":
        if args.t is not None and args.t != args.n:
            raise UsageError("--construction lex fixes t = n")
        nk = lex_necklace(args.a, args.n)
        provenance = "lexicographic concatenation yields an (a,n,n)-perfect necklace"
    elif how == "stretch":
        if args.q is None:
            raise UsageError("--q is required for --construction stretch")
        nk = stretch_necklace(_read_necklace(args.file or "-"), args.q)
        provenance = "periodic stretch of a perfect necklace"
    elif how == "rotate-expand":
        if args.r is None:
            raise UsageError("--r is required for --construction rotate-expand")
        nk = rotate_expand_necklace(_debruijn_input(args), args.r)
        provenance = "rotate-expand of a De Bruijn cycle by a coprime shift"
    else:
        nk = reflect_expand_necklace(_debruijn_input(args))
        provenance = "reflect-expand of a De Bruijn cycle"
    print(f"# provenance: {provenance}")
    print(nk.to_text())
    return 0


def _cmd_multiply(args: argparse.Namespace) -> int:
    base, params = _certified_cycle(_single(_word_texts(args.file)), args.alphabet, args.n)
    if args.filler:
        k = args.k
        if k is None:
            _, word_text = _read_record(args.filler)
            k = _infer_alphabet(word_text)
        filler = _read_necklace(args.filler, filler_params(params, k))
        product = alphabet_multiply(base, args.n, filler.a, filler)
    else:
        if args.k is None:
            raise UsageError("--k is required unless --filler is given")
        product = alphabet_multiply_lex(base, args.n, args.k)
    print("# provenance: alphabet multiplier with a perfect-necklace filler")
    print(format_word(product))
    return 0


def _cmd_lift(args: argparse.Namespace) -> int:
    base, params = _certified_cycle(_single(_word_texts(args.file)), args.alphabet, args.n)
    a, n, d = params.a, params.n, params.d
    if args.enumerate:
        print("# provenance: De Bruijn lift enumeration via permutation fillers")
        for w in enumerate_debruijn_lifts(base, n):
            print(format_word(w))
        return 0
    offsets = set(_parse_offsets(args.offsets)) if args.offsets else diamond_offsets(base, n)
    delta = len(offsets)
    if args.necklace:
        filler = _read_necklace(args.necklace, lift_filler_params(a, n, d, delta))
    else:
        filler = euler_necklace(*lift_filler_params(a, n, d, delta))
    lifted = lift(base, n, offsets, filler)
    print("# provenance: lift by filling diamond classes from a perfect necklace")
    print(format_word(lifted))
    return 0


def _cmd_fold(args: argparse.Namespace) -> int:
    upper, params = _certified_cycle(_single(_word_texts(args.file)), args.alphabet, args.n)
    n, delta = args.n, args.delta
    if args.offsets:
        combos = [set(_parse_offsets(args.offsets))]
    else:
        combos = [set(c) for c in itertools.combinations(range(n), delta)]
    for offsets in combos:
        folded = try_fold(upper, n, delta, offsets)
        if folded is not None:
            print("# provenance: fold of a lift onto a coarser diamond layout")
            print(format_word(folded))
            return 0
    raise VerdictFailure(f"INVALID reason=no-fold witness=delta={delta}")


def _cmd_graph(args: argparse.Namespace) -> int:
    u, _ = _certified_cycle(_single(_word_texts(args.file)), args.alphabet, args.n)
    if args.model == "s":
        view = cover_graph(u, args.n)
        provenance = "spanning subgraph of consecutively covered words"
    else:
        view = tour_pairs(u, args.n)
        provenance = "consecutive edge pairs of the covering tour"
    if args.out:
        with open(args.out, "w", encoding="utf-8") as handle:
            handle.write(f"# provenance: {provenance}\n")
            export_dot(view, handle)
    else:
        print(f"# provenance: {provenance}")
        export_dot(view, sys.stdout)
    return 0


def _cmd_dn(args: argparse.Namespace) -> int:
    if args.max < 1:
        raise UsageError("--max must be at least 1")
    print("# columns: frame length n, curtain threshold D, most diamonds leaving some frame non-curtained")
    values = {}
    for n in range(1, args.max + 1):
        values[n] = curtain_threshold(n)
        print(f"{n}\t{values[n]}\t{values[n] - 1}")
    if args.figures:
        outdir = Path(args.figures)
        outdir.mkdir(parents=True, exist_ok=True)
        path = plots.curtain_growth_figure(values, outdir / "curtain_growth.png")
        print(f"figure\t{path}")
    return 0


def _cmd_feasible(args: argparse.Namespace) -> int:
    if args.table:
        print("# columns: n, alphabet class, surviving d, rules bounding the row")
        for row in feasibility_table(args.lo, args.hi):
            print(row.to_line())
        return 0
    if args.a is None or args.n is None:
        raise UsageError("--a and --n are required without --table")
    if args.n < 2:
        raise UsageError("--n must be at least 2")
    ds = [args.d] if args.d is not None else list(range(1, args.n))
    ruled_out = False
    print("# columns: status, parameters, admissible frame periods, rules")
    for d in ds:
        verdict = feasibility(args.a, args.n, d)
        ruled_out = ruled_out or verdict.status == "ruled-out"
        print(verdict.to_line())
    return 1 if args.d is not None and ruled_out else 0


def _cmd_search(args: argparse.Namespace) -> int:
    threads = _resolve_threads(args.threads)
    seed = parse_word(args.seed, args.a, cyclic=False) if args.seed else None
    offsets = _parse_offsets(args.offsets) if args.offsets else None
    spec = SearchSpec(
        args.a,
        args.n,
        args.d,
        diamond_offsets=offsets,
        seed_prefix=seed,
        limit=args.limit,
        exhaustive=args.exhaustive,
        threads=threads,
    )
    print("# provenance: exact-cover backtracking over a fixed diamond layout")
    for word in search_upcycles(spec):
        print(format_word(word))
    return 0


def _cmd_crossjoin(args: argparse.Namespace) -> int:
    w = _parse_text(_single(_word_texts(args.file)), args.alphabet, None)
    if args.find:
        if args.n is None:
            raise UsageError("--n is required with --find")
        n = args.n
    else:
        for flag in ("x", "y", "ix", "iy", "jx", "jy"):
            if getattr(args, flag) is None:
                raise UsageError(f"--{flag} is required unless --find is given")
        x = parse_word(args.x, w.alphabet, cyclic=False)
        y = parse_word(args.y, w.alphabet, cyclic=False)
        n = len(x) + 1
        if args.n is not None and args.n != n:
            raise UsageError(f"--n {args.n} conflicts with the pivot length {len(x)}")
    rep = verify_upcycle(w, n) if w.cyclic else verify_upword(w, n)
    if not rep.valid:
        raise VerdictFailure(rep.to_line())
    if args.find:
        print("# columns: x, y, i_x, i_y, j_x, j_y (1-based)")
        for px, py, i_x, i_y, j_x, j_y in find_cross_join_pairs(w, n):
            print(f"{format_word(px)}\t{format_word(py)}\t{i_x}\t{i_y}\t{j_x}\t{j_y}")
        return 0
    out = cross_join(w, x, y, args.ix, args.iy, args.jx, args.jy)
    print("# provenance: cross-join exchange between repeated windows")
    print(format_word(out))
    return 0


def _word_input(p: argparse.ArgumentParser) -> None:
    p.add_argument("file", nargs="?", help="input file with one word per line; '-' or absent reads stdin")
    p.add_argument("--alphabet", type=int, help="alphabet size (default: inferred from the letters)")


def _build_parser() -> _Parser:
    parser = _Parser(prog="upcycles", description=__doc__)
    sub = parser.add_subparsers(dest="command", metavar="command", required=True)

    p = sub.add_parser("verify", help="certify upcycles or upwords")
    p.add_argument("--n", type=int, required=True, help="window length")
    p.add_argument("--cyclic", action="store_true", help="treat bare words as cyclic")
    p.add_argument("--linear", action="store_true", help="require linear words")
    _word_input(p)
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("analyze", help="distribution report for a cyclic word")
    p.add_argument("--n", type=int, required=True, help="window length")
    p.add_argument("--threads", type=int, default=1, help="worker threads for the shift sweep")
    p.add_argument("--figures", metavar="DIR", help="render figures into DIR")
    _word_input(p)
    p.set_defaults(func=_cmd_analyze)

    p = sub.add_parser("necklace", help="construct perfect necklaces")
    p.add_argument(
        "--construction",
        choices=("euler", "lex", "stretch", "rotate-expand", "reflect-expand"),
        default="euler",
    )
    p.add_argument("--a", type=int, help="alphabet size")
    p.add_argument("--n", type=int, help="window length")
    p.add_argument("--t", type=int, help="residue count")
    p.add_argument("--q", type=int, help="stretch factor")
    p.add_argument("--r", type=int, help="rotation step")
    p.add_argument("--zeros-prefix", action="store_true", help="start with a block of zeros")
    p.add_argument("--contain", metavar="WORD", help="require this length-(n+1) word to occur")
    _word_input(p)
    p.set_defaults(func=_cmd_necklace)

    p = sub.add_parser("multiply", help="grow the alphabet of an upcycle")
    p.add_argument("--n", type=int, required=True, help="window length")
    p.add_argument("--k", type=int, help="alphabet growth factor")
    p.add_argument("--filler", metavar="FILE", help="perfect-necklace filler (default: stretched lexicographic)")
    _word_input(p)
    p.set_defaults(func=_cmd_multiply)

    p = sub.add_parser("lift", help="fill diamonds to reduce diamondicity")
    p.add_argument("--n", type=int, required=True, help="window length")
    p.add_argument("--enumerate", action="store_true", help="list all De Bruijn lifts up to rotation")
    p.add_argument("--necklace", metavar="FILE", help="filler necklace (default: Euler tour)")
    p.add_argument("--offsets", help="comma-separated diamond residues mod n to fill")
    _word_input(p)
    p.set_defaults(func=_cmd_lift)

    p = sub.add_parser("fold", help="collapse a lift back onto a diamond layout")
    p.add_argument("--n", type=int, required=True, help="window length")
    p.add_argument("--delta", type=int, required=True, help="diamondicity increase")
    p.add_argument("--offsets", help="comma-separated diamond residues mod n (default: try all)")
    _word_input(p)
    p.set_defaults(func=_cmd_fold)

    p = sub.add_parser("graph", help="DOT rendering of a covering graph")
    p.add_argument("--n", type=int, required=True, help="window length")
    p.add_argument("--model", choices=("s", "t"), required=True, help="s: covered-word graph, t: edge-pair view")
    p.add_argument("--out", metavar="FILE", help="write DOT here instead of stdout")
    _word_input(p)
    p.set_defaults(func=_cmd_graph)

    p = sub.add_parser("dn", help="curtain threshold table")
    p.add_argument("--max", type=int, required=True, help="largest frame length")
    p.add_argument("--figures", metavar="DIR", help="render the growth figure into DIR")
    p.set_defaults(func=_cmd_dn)

    p = sub.add_parser("feasible", help="nonexistence screening of (a, n, d)")
    p.add_argument("--a", type=int, help="alphabet size")
    p.add_argument("--n", type=int, help="window length")
    p.add_argument("--d", type=int, help="diamondicity (default: all 1..n-1)")
    p.add_argument("--table", action="store_true", help="emit the alphabet-class table")
    p.add_argument("--from", dest="lo", type=int, default=4, help="table range start")
    p.add_argument("--to", dest="hi", type=int, default=12, help="table range end")
    p.set_defaults(func=_cmd_feasible)

    p = sub.add_parser("search", help="backtracking search for upcycles")
    p.add_argument("--a", type=int, required=True, help="alphabet size")
    p.add_argument("--n", type=int, required=True, help="window length")
    p.add_argument("--d", type=int, required=True, help="diamondicity")
    p.add_argument("--seed", metavar="WORD", help="linear prefix to extend")
    p.add_argument("--exhaustive", action="store_true", help="emit every class instead of the first")
    p.add_argument("--limit", type=int, help="stop after this many results")
    p.add_argument("--threads", type=int, default=1, help="parallel branches")
    p.add_argument("--offsets", help="comma-separated diamond residues mod n")
    p.set_defaults(func=_cmd_search)

    p = sub.add_parser("crossjoin", help="exchange blocks between repeated windows")
    p.add_argument("--x", metavar="WORD", help="first pivot, length n-1")
    p.add_argument("--y", metavar="WORD", help="second pivot, length n-1")
    p.add_argument("--ix", type=int, help="first occurrence of x, 1-based")
    p.add_argument("--iy", type=int, help="first occurrence of y")
    p.add_argument("--jx", type=int, help="second occurrence of x")
    p.add_argument("--jy", type=int, help="second occurrence of y")
    p.add_argument("--find", action="store_true", help="list usable pivot pairs instead")
    p.add_argument("--n", type=int, help="window length (inferred from --x otherwise)")
    _word_input(p)
    p.set_defaults(func=_cmd_crossjoin)

    return parser


def run(argv: Sequence[str] | None = None) -> int:
    try:
        args = _build_parser().parse_args(argv)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 2
    except SystemExit as exc:  # --help
        return int(exc.code or 0)
    try:
        return args.func(args)
    except VerdictFailure as exc:
        print(exc.line)
        return 1
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 2
    except (ValueError, KeyError, OSError, RuntimeError, CapExceeded) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def main(argv: Sequence[str] | None = None) -> int:
    return run(argv)


if __name__ == "__main__":
    sys.exit(main())
