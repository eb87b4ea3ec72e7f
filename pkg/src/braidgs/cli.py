"""Command-line entry point.

Exit codes: 0 success / equal, 1 distinct / violations found, 2 usage or parse
error, 3 budget or cap exceeded. Results go to stdout, diagnostics to stderr.
"""

from __future__ import annotations

import argparse
import random
import sys
from dataclasses import dataclass

from .braid import (
    artin_presentation,
    bkl_presentation,
    coxeter_braid_presentation,
    gs_normalize,
    identity_suite,
    parse_coxeter,
    theorem_rules,
)
from .completion import (
    DEFAULT_ORACLE_CAP,
    CapExceeded,
    CompletionConfig,
    CompletionStatus,
    complete,
    interreduce,
    oracle_equal,
    parse_rules,
    verify_gs_up_to,
)
from .core import ParseError, Presentation, format_word, parse_presentation, parse_signed_word, parse_word
from .garside import group_equal, group_normal_form
from .rewrite import RuleSystem, StepBudgetExceeded, normalize

EXIT_OK, EXIT_DISTINCT, EXIT_USAGE, EXIT_BUDGET = 0, 1, 2, 3


class UsageError(Exception):
    pass


class BudgetError(Exception):
    pass


@dataclass
class Source:
    presentation: Presentation
    artin_n: int | None  # set when the built-in braid-rule matcher applies


def _read(path: str) -> str:
    try:
        with open(path, encoding="utf-8") as fh:
            return fh.read()
    except OSError as e:
        raise UsageError(f"cannot read {path}: {e.strerror}") from None


def parse_preset(spec: str) -> Source:
    kind, sep, arg = spec.partition(":")
    if not sep:
        raise UsageError(f"preset {spec!r} must look like artin:<n>, bkl:<n+1> or coxeter:<file>")
    if kind == "coxeter":
        return Source(coxeter_braid_presentation(parse_coxeter(_read(arg))), None)
    try:
        k = int(arg)
    except ValueError:
        raise UsageError(f"preset {spec!r}: expected an integer after ':'") from None
    if kind == "artin":
        if k < 1:
            raise UsageError("artin:<n> needs n >= 1")
        return Source(artin_presentation(k), k)
    if kind == "bkl":
        if k < 2:
            raise UsageError("bkl:<n+1> needs at least 2 strands")
        return Source(bkl_presentation(k), None)
    raise UsageError(f"unknown preset kind {kind!r}")


def _source(args) -> Source:
    if getattr(args, "preset", None) and getattr(args, "presentation", None):
        raise UsageError("give either --preset or --presentation, not both")
    if getattr(args, "preset", None):
        return parse_preset(args.preset)
    if getattr(args, "presentation", None):
        return Source(parse_presentation(_read(args.presentation)), None)
    raise UsageError("one of --preset or --presentation is required")


def _word_arg(args, attr="word") -> str:
    text = getattr(args, attr, None)
    if text is None:
        text = sys.stdin.read()
    return text.strip()


def _config(args) -> CompletionConfig:
    return CompletionConfig(args.max_len, args.max_rules, args.max_ambiguities)


def _completed(src: Source, args) -> RuleSystem:
    rep = complete(src.presentation, _config(args))
    if rep.status is not CompletionStatus.SATURATED:
        raise BudgetError(f"completion stopped: {rep.status.value}")
    return interreduce(rep.rules)


def _positive_nf(src: Source, args, words):
    """Normal forms of positive words, via the matcher or bounded completion."""
    if src.artin_n is not None:
        return [gs_normalize(w, src.artin_n) for w in words]
    rules = _completed(src, args)
    if any(len(w) > args.max_len for w in words):
        print(f"warning: word longer than --max-len {args.max_len}; result may not be canonical", file=sys.stderr)
    else:
        print(f"note: normal forms are valid for words of length <= {args.max_len}", file=sys.stderr)
    rng = random.Random(args.seed)
    return [normalize(w, rules, strategy=args.strategy, rng=rng)[0] for w in words]


def cmd_normalize(args) -> int:
    src = _source(args)
    n = src.presentation.n_generators
    w = parse_word(_word_arg(args), n)
    if src.artin_n is not None and args.strategy != "leftmost":
        out = gs_normalize(w, n, strategy=args.strategy, rng=random.Random(args.seed))
    else:
        out = _positive_nf(src, args, [w])[0]
    print(format_word(out))
    return EXIT_OK


def cmd_eq(args) -> int:
    src = _source(args)
    n = src.presentation.n_generators
    if args.group:
        if src.artin_n is None:
            raise UsageError("--group needs an artin:<n> preset")
        same = group_equal(parse_signed_word(args.w1, n), parse_signed_word(args.w2, n), n)
    else:
        a, b = _positive_nf(src, args, [parse_word(args.w1, n), parse_word(args.w2, n)])
        same = a == b
    print("equal" if same else "distinct")
    return EXIT_OK if same else EXIT_DISTINCT


def cmd_oracle_eq(args) -> int:
    src = _source(args)
    n = src.presentation.n_generators
    same = oracle_equal(parse_word(args.w1, n), parse_word(args.w2, n), src.presentation, args.cap)
    print("equal" if same else "distinct")
    return EXIT_OK if same else EXIT_DISTINCT


def cmd_delta_form(args) -> int:
    src = _source(args)
    if src.artin_n is None:
        raise UsageError("delta-form needs an artin:<n> preset")
    n = src.artin_n
    print(group_normal_form(parse_signed_word(_word_arg(args), n), n).format())
    return EXIT_OK


def cmd_complete(args) -> int:
    src = _source(args)
    rep = complete(src.presentation, _config(args))
    if not args.no_interreduce:
        rep.rules = interreduce(rep.rules)
    text = rep.format()
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    if rep.status is not CompletionStatus.SATURATED:
        print(f"completion stopped: {rep.status.value}", file=sys.stderr)
        return EXIT_BUDGET
    return EXIT_OK


def cmd_verify(args) -> int:
    if args.rules:
        rules = parse_rules(_read(args.rules))
    else:
        src = _source(args)
        if src.artin_n is not None:
            rules = theorem_rules(src.artin_n, args.max_len)
        else:
            rules = RuleSystem.from_presentation(src.presentation)
    print(f"# {len(rules)} rules", file=sys.stderr)
    rep = verify_gs_up_to(rules, args.max_len)
    sys.stdout.write(rep.format())
    return EXIT_OK if rep.ok else EXIT_DISTINCT


def cmd_identities(args) -> int:
    rep = identity_suite(args.n, args.bound)
    sys.stdout.write(rep.format())
    return EXIT_OK if rep.ok else EXIT_DISTINCT


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_USAGE)


PRESET_HELP = (
    "artin:<n> (B+_{n+1} on a_1..a_n), bkl:<n+1> (band generators a_ts, t<s, "
    "numbered lexicographically by (s, t): a_21=1, a_31=2, a_32=3, a_41=4, ...), "
    "or coxeter:<file> (lines 'm <s> <s2> <value|inf>', unlisted pairs are 2)"
)


def build_parser() -> argparse.ArgumentParser:
    ap = _Parser(prog="braidgs", description="Word problems in braid monoids and groups.")
    sub = ap.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def source(p, presentation=True):
        p.add_argument("--preset", help=PRESET_HELP)
        if presentation:
            p.add_argument("--presentation", help="presentation file ('gens: n' then 'rel: u = v' lines)")

    def bounds(p, max_len=10):
        p.add_argument("--max-len", type=int, default=max_len, help="completion length bound")
        p.add_argument("--max-rules", type=int, default=100_000)
        p.add_argument("--max-ambiguities", type=int, default=10**7)

    def strategy(p):
        p.add_argument("--strategy", choices=["leftmost", "rightmost", "random"], default="leftmost")
        p.add_argument("--seed", type=int, default=0, help="seed for --strategy random")

    p = sub.add_parser("normalize", help="normal form of a positive word")
    source(p)
    bounds(p)
    strategy(p)
    p.add_argument("--word", help="word like '2 1 1 2 1' (default: stdin)")
    p.set_defaults(func=cmd_normalize)

    p = sub.add_parser("eq", help="compare two words by normal form")
    source(p)
    bounds(p)
    strategy(p)
    p.add_argument("--w1", required=True)
    p.add_argument("--w2", required=True)
    p.add_argument("--group", action="store_true", help="signed words in the braid group")
    p.set_defaults(func=cmd_eq)

    p = sub.add_parser("oracle-eq", help="compare two positive words by brute-force search")
    source(p)
    p.add_argument("--w1", required=True)
    p.add_argument("--w2", required=True)
    p.add_argument("--cap", type=int, default=DEFAULT_ORACLE_CAP)
    p.set_defaults(func=cmd_oracle_eq)

    p = sub.add_parser("delta-form", help="Garside form D^k | u of a signed word")
    source(p, presentation=False)
    p.add_argument("--word", help="signed word like '2 -1 3' (default: stdin)")
    p.set_defaults(func=cmd_delta_form)

    p = sub.add_parser("complete", help="bounded completion report")
    source(p)
    bounds(p)
    p.add_argument("--out", help="write the report here instead of stdout")
    p.add_argument("--no-interreduce", action="store_true")
    p.set_defaults(func=cmd_complete)

    p = sub.add_parser("verify", help="check all compositions up to --max-len")
    source(p)
    p.add_argument("--rules", help="rule file with 'rule: u -> v' lines")
    p.add_argument("--max-len", type=int, default=10)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("identities", help="check the descending-run identities")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--bound", type=int, default=3)
    p.set_defaults(func=cmd_identities)
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (UsageError, ParseError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except ValueError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except (BudgetError, CapExceeded, StepBudgetExceeded) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_BUDGET


if __name__ == "__main__":
    sys.exit(main())
