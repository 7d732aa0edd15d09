"""
Command-line front end of the playground.

Results go to standard output, one term or row per line; logs go to
standard error. Exit status: 0 success, 1 usage or configuration error,
2 domain error (syntax, untypable, unbalanced, fuel), 3 nothing found.
"""

import argparse
import json
import logging
import sys
from functools import partial
from typing import List, Optional

from lambda_playground import __version__
from lambda_playground.errors import ConfigError, DomainError, NotFoundError
from lambda_playground.terms.core import (
    compressed_to_db, compressed_to_std, db_to_compressed, db_to_std,
    std_to_compressed, std_to_db,
)
from lambda_playground.terms.syntax import hole_name, parse_term, print_term
from lambda_playground.typeinf.unify import print_type
from lambda_playground.typeinf.infer import (
    infer_compressed, infer_db, infer_std, infer_sk, infer_x, useless_type,
)
from lambda_playground.reduce.debruijn import Fuel, eval_compressed, eval_std, nf_reduce
from lambda_playground.reduce.combinators import eval_as_b, eval_sk, eval_x, sk_to_db, x_to_db
from lambda_playground.generate.trees import EXACT, UPTO
from lambda_playground.generate.families import FAMILIES, count_family, family_members, get_family
from lambda_playground.codec.catalan import (
    rank_catalan, rank_type, unrank_catalan, unrank_type,
)
from lambda_playground.codec.cantor import from_cantor, to_cantor
from lambda_playground.codec.terms import KINDS, ran_term, rank_term, unrank_term
from lambda_playground.treenat.arith import (
    nat_of_tree, tree_add, tree_of_nat, tree_pred, tree_sub, tree_succ,
)
from lambda_playground.treenat.ranking import rank_db, unrank_db
from lambda_playground.lab.queries import GROWTH_MATCHES, growth_sequence, query_typed, type_siblings
from lambda_playground.lab.census import (
    census_frame, sk_density, type_census, useless_counts, x_density,
)
from lambda_playground.lab.frontier import frontier_stats, simplify_sk, well_typed_frontier
from lambda_playground.lab.xtypes import (
    gen_self_typed, inflate_b2b, inflate_t2t, iter_stats, iter_type,
)
from lambda_playground.lab.orbits import orbit, orbit_frame
from lambda_playground.utils.helpers import LOG_FORMAT, load_playground_config
from lambda_playground.utils.parallel import map_sizes
from lambda_playground.utils.tables import TABLE_FORMATS, write_table

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_DOMAIN = 2
EXIT_NOT_FOUND = 3

RECURSION_LIMIT = 10000

# (source grammar, target grammar) -> converter
CONVERSIONS = {
    ("db", "comp"): db_to_compressed,
    ("db", "std"): db_to_std,
    ("db", "tree"): rank_db,
    ("comp", "db"): compressed_to_db,
    ("comp", "std"): compressed_to_std,
    ("std", "db"): std_to_db,
    ("std", "comp"): std_to_compressed,
    ("tree", "db"): unrank_db,
    ("sk", "db"): sk_to_db,
    ("x", "db"): x_to_db,
}

EVAL_ENGINES = {
    "db": ("db", nf_reduce),
    "comp": ("comp", eval_compressed),
    "std": ("std", eval_std),
    "sk": ("sk", eval_sk),
    "x": ("tree", eval_x),
    "x-lambda": ("tree", eval_as_b),
}

TYPE_ENGINES = {
    "std": ("std", infer_std),
    "db": ("db", infer_db),
    "comp": ("comp", infer_compressed),
    "sk": ("sk", infer_sk),
    "x": ("tree", infer_x),
    "x-direct": ("tree", partial(infer_x, mode="direct")),
    "sk-useless": ("sk", useless_type),
}

RANK_SCHEMES = ("term", "type", "catalan", "nat", "db", "cantor")


class PlaygroundArgumentParser(argparse.ArgumentParser):
    """Argument parser exiting with the usage status on bad arguments."""

    def error(self, message: str):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _digits(text: str) -> List[int]:
    return [int(c) for c in text if c in "01"]


def _naturals(text: str) -> List[int]:
    return [int(part) for part in text.replace(",", " ").split()]


def _given(value, default):
    return default if value is None else value


def _emit(line: str):
    sys.stdout.write(line + "\n")


def _annotation(value) -> str:
    if isinstance(value, list):
        return "".join(map(str, value))
    return print_term(value)


def run_gen(args, config) -> int:
    """Print the members of a family."""
    family = get_family(args.family)
    mode = UPTO if args.upto else EXACT
    options = {"height": args.height, "free": args.free}
    for member in family_members(args.family, args.size, mode, options):
        term, note = member if family.pairs else (member, None)
        if args.format == "json":
            record = {"term": print_term(term)}
            if note is not None:
                record["note"] = _annotation(note)
            _emit(json.dumps(record))
        elif args.format == "pairs" and note is not None:
            _emit(f"{print_term(term)} : {_annotation(note)}")
        else:
            _emit(print_term(term))
    return EXIT_OK


def run_count(args, config) -> int:
    """Print the exact-size counts of a family from its smallest size to --max."""
    family = get_family(args.family)
    sizes = range(family.min_size, args.max + 1)
    counter = partial(count_family, args.family,
                      options={"height": args.height, "free": args.free})
    counts = map_sizes(counter, sizes, _given(args.jobs, config.jobs))
    _emit(" ".join(map(str, counts)))
    return EXIT_OK


def run_query(args, config) -> int:
    ty = parse_term(args.type, "tree")
    mode = UPTO if args.upto else EXACT
    for term in query_typed(args.size, ty, mode):
        _emit(print_term(term))
    return EXIT_OK


def run_rank(args, config) -> int:
    text = args.value
    if args.scheme == "term":
        rank = rank_term(parse_term(text, "comp"))
    elif args.scheme == "type":
        rank = rank_type(parse_term(text, "tree"))
    elif args.scheme == "catalan":
        rank = rank_catalan(_digits(text))
    elif args.scheme == "nat":
        rank = nat_of_tree(parse_term(text, "tree"))
    elif args.scheme == "db":
        rank = nat_of_tree(rank_db(parse_term(text, "db")))
    else:
        rank = from_cantor(_naturals(text))
    _emit(str(rank))
    return EXIT_OK


def run_unrank(args, config) -> int:
    n = args.rank
    if args.scheme == "term":
        _emit(print_term(unrank_term(n)))
    elif args.scheme == "type":
        _emit(print_term(unrank_type(n)))
    elif args.scheme == "catalan":
        _emit("".join(map(str, unrank_catalan(n))))
    elif args.scheme == "nat":
        _emit(print_term(tree_of_nat(n)))
    elif args.scheme == "db":
        _emit(print_term(unrank_db(tree_of_nat(n))))
    else:
        _emit(",".join(map(str, to_cantor(args.arity, n))))
    return EXIT_OK


def run_eval(args, config) -> int:
    grammar, evaluate = EVAL_ENGINES[args.engine]
    fuel = Fuel(_given(args.fuel, config.fuel))
    result = evaluate(parse_term(args.term, grammar), fuel)
    logger.info(f"normalized in {fuel.steps} steps")
    _emit(print_term(result))
    return EXIT_OK


def run_type(args, config) -> int:
    grammar, infer = TYPE_ENGINES[args.engine]
    _emit(print_type(infer(parse_term(args.term, grammar))))
    return EXIT_OK


def run_convert(args, config) -> int:
    convert = CONVERSIONS.get((args.source, args.target))
    if convert is None:
        raise ConfigError(f"no conversion from {args.source} to {args.target}")
    grammar = "tree" if args.source == "x" else args.source
    _emit(print_term(convert(parse_term(args.term, grammar))))
    return EXIT_OK


def run_census(args, config) -> int:
    top = _given(args.top, config.census_top_k)
    rows = type_census(args.max, top, _given(args.jobs, config.jobs))
    write_table(census_frame(rows), args.format)
    return EXIT_OK


def run_growth(args, config) -> int:
    counts = growth_sequence(parse_term(args.type, "tree"), args.max, args.match)
    _emit(" ".join(map(str, counts)))
    return EXIT_OK


def run_density(args, config) -> int:
    jobs = _given(args.jobs, config.jobs)
    if args.calculus == "sk":
        df = sk_density(args.max, jobs)
    elif args.calculus == "x":
        df = x_density(args.max, jobs)
    else:
        df = useless_counts(args.max)
    write_table(df, args.format)
    return EXIT_OK


def run_frontier(args, config) -> int:
    if args.stats:
        write_table(frontier_stats(args.max), args.format)
        return EXIT_OK
    if args.term is None:
        raise ConfigError("frontier needs a term unless --stats is given")
    dec = well_typed_frontier(parse_term(args.term, "sk"))
    _emit(print_term(dec.trunk))
    for ident, member in dec.equations:
        _emit(f"{hole_name(ident)} = {print_term(member)}")
    return EXIT_OK


def run_simplify_sk(args, config) -> int:
    fuel = _given(args.fuel, config.fuel)
    _emit(print_term(simplify_sk(parse_term(args.term, "sk"), fuel)))
    return EXIT_OK


def run_siblings(args, config) -> int:
    for term in type_siblings(parse_term(args.term, "db")):
        _emit(print_term(term))
    return EXIT_OK


def run_itertype(args, config) -> int:
    max_steps = _given(args.max_steps, config.iter_max_steps)
    if args.stats:
        write_table(iter_stats(args.max, max_steps), args.format)
        return EXIT_OK
    if args.term is None:
        raise ConfigError("itertype needs a tree unless --stats is given")
    types, steps = iter_type(parse_term(args.term, "tree"), max_steps)
    for ty in types:
        _emit(print_term(ty))
    _emit(f"steps {steps}")
    return EXIT_OK


def run_selftyped(args, config) -> int:
    for t in gen_self_typed(args.size):
        _emit(print_term(t))
    return EXIT_OK


def run_inflate(args, config) -> int:
    if args.kind == "b2b":
        _emit(print_term(inflate_b2b(parse_term(args.term, "db"))))
    else:
        _emit(print_term(inflate_t2t(parse_term(args.term, "tree"))))
    return EXIT_OK


def run_orbit(args, config) -> int:
    steps = _given(args.steps, config.orbit_steps)
    terms = orbit(parse_term(args.term, "db"), steps, _given(args.fuel, config.fuel))
    write_table(orbit_frame(terms), args.format)
    return EXIT_OK


def run_random(args, config) -> int:
    bits = _given(args.bits, config.random_bits)
    seed = _given(args.seed, config.random_seed)
    _emit(print_term(ran_term(args.kind, bits, seed)))
    return EXIT_OK


def run_arith(args, config) -> int:
    a = parse_term(args.a, "tree")
    if args.op == "succ":
        result = tree_succ(a)
    elif args.op == "pred":
        result = tree_pred(a)
    else:
        if args.b is None:
            raise ConfigError(f"{args.op} needs a second tree")
        b = parse_term(args.b, "tree")
        result = tree_add(a, b) if args.op == "add" else tree_sub(a, b)
    _emit(print_term(result))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = PlaygroundArgumentParser(
        prog="lplay", description="Playground for lambda terms, types and combinators")
    parser.add_argument('--version', action='version', version=f"%(prog)s {__version__}")
    parser.add_argument('--config', type=str, default=None, help='Config file')
    parser.add_argument('--log-level', type=str, default=None,
                        choices=['DEBUG', 'INFO', 'WARNING', 'ERROR'], help='Log level')
    parser.add_argument('--jobs', type=int, default=None,
                        help='Ray workers for count, census and density')
    sub = parser.add_subparsers(dest='command', required=True)

    def family_options(p):
        p.add_argument('--family', required=True, choices=sorted(FAMILIES))
        p.add_argument('--height', type=int, default=None, help='Binder bound (bounded)')
        p.add_argument('--free', type=int, default=None, help='Free indices (typed-free)')

    def jobs_option(p):
        # left unset when absent so a top-level --jobs is kept
        p.add_argument('--jobs', type=int, default=argparse.SUPPRESS,
                       help='Ray workers')

    def table_format(p, default='tsv', choices=TABLE_FORMATS):
        p.add_argument('--format', choices=choices, default=default)

    p = sub.add_parser('gen', help='Enumerate a family')
    family_options(p)
    p.add_argument('--size', type=int, required=True)
    p.add_argument('--upto', action='store_true', help='All sizes up to --size')
    p.add_argument('--format', choices=['plain', 'pairs', 'json'], default='plain')
    p.set_defaults(run=run_gen)

    p = sub.add_parser('count', help='Count a family by size')
    family_options(p)
    p.add_argument('--max', type=int, required=True)
    jobs_option(p)
    p.set_defaults(run=run_count)

    p = sub.add_parser('query', help='Terms of a given type')
    p.add_argument('--type', required=True)
    p.add_argument('--size', type=int, required=True)
    p.add_argument('--upto', action='store_true')
    p.set_defaults(run=run_query)

    p = sub.add_parser('rank', help='Rank a term, type, word or tuple')
    p.add_argument('--scheme', choices=RANK_SCHEMES, default='term')
    p.add_argument('value')
    p.set_defaults(run=run_rank)

    p = sub.add_parser('unrank', help='Object of a rank')
    p.add_argument('--scheme', choices=RANK_SCHEMES, default='term')
    p.add_argument('--arity', type=int, default=2, help='Tuple length (cantor)')
    p.add_argument('rank', type=int)
    p.set_defaults(run=run_unrank)

    p = sub.add_parser('eval', help='Normalize a term')
    p.add_argument('--engine', choices=sorted(EVAL_ENGINES), default='db')
    p.add_argument('--fuel', type=int, default=None)
    p.add_argument('term')
    p.set_defaults(run=run_eval)

    p = sub.add_parser('type', help='Infer a type')
    p.add_argument('--engine', choices=sorted(TYPE_ENGINES), default='db')
    p.add_argument('term')
    p.set_defaults(run=run_type)

    p = sub.add_parser('convert', help='Change notation')
    p.add_argument('--from', dest='source', required=True,
                   choices=sorted({s for s, _ in CONVERSIONS}))
    p.add_argument('--to', dest='target', required=True,
                   choices=sorted({t for _, t in CONVERSIONS}))
    p.add_argument('term')
    p.set_defaults(run=run_convert)

    p = sub.add_parser('census', help='Types of typed terms by size')
    p.add_argument('--max', type=int, required=True)
    p.add_argument('--top', type=int, default=None)
    jobs_option(p)
    table_format(p)
    p.set_defaults(run=run_census)

    p = sub.add_parser('growth', help='Inhabitants of a type by size')
    p.add_argument('--type', required=True)
    p.add_argument('--max', type=int, required=True)
    p.add_argument('--match', choices=GROWTH_MATCHES, default='exact')
    p.set_defaults(run=run_growth)

    p = sub.add_parser('density', help='Typable combinator trees by size')
    p.add_argument('--calculus', choices=['sk', 'x', 'useless'], default='sk')
    p.add_argument('--max', type=int, required=True)
    jobs_option(p)
    table_format(p)
    p.set_defaults(run=run_density)

    p = sub.add_parser('frontier', help='Well-typed frontier of an SK tree')
    p.add_argument('term', nargs='?')
    p.add_argument('--stats', action='store_true')
    p.add_argument('--max', type=int, default=6)
    table_format(p)
    p.set_defaults(run=run_frontier)

    p = sub.add_parser('simplify-sk', help='Normalize the frontier of an SK tree')
    p.add_argument('--fuel', type=int, default=None)
    p.add_argument('term')
    p.set_defaults(run=run_simplify_sk)

    p = sub.add_parser('siblings', help='Terms sharing the type of a term')
    p.add_argument('term')
    p.set_defaults(run=run_siblings)

    p = sub.add_parser('itertype', help='Iterated types of an X-tree')
    p.add_argument('term', nargs='?')
    p.add_argument('--max-steps', type=int, default=None)
    p.add_argument('--stats', action='store_true')
    p.add_argument('--max', type=int, default=5)
    table_format(p)
    p.set_defaults(run=run_itertype)

    p = sub.add_parser('selftyped', help='X-trees that are instances of their own type')
    p.add_argument('--size', type=int, required=True)
    p.set_defaults(run=run_selftyped)

    p = sub.add_parser('inflate', help='Size-inflating injections')
    p.add_argument('--kind', choices=['b2b', 't2t'], default='b2b')
    p.add_argument('term')
    p.set_defaults(run=run_inflate)

    p = sub.add_parser('orbit', help='Eval-or-successor trajectory')
    p.add_argument('term')
    p.add_argument('--steps', type=int, default=None)
    p.add_argument('--fuel', type=int, default=None)
    table_format(p, default='csv')
    p.set_defaults(run=run_orbit)

    p = sub.add_parser('random', help='Random term by unranking')
    p.add_argument('--kind', choices=KINDS, default='typed')
    p.add_argument('--bits', type=int, default=None)
    p.add_argument('--seed', type=int, default=None)
    p.set_defaults(run=run_random)

    p = sub.add_parser('arith', help='Tree-natural arithmetic')
    p.add_argument('--op', choices=['succ', 'pred', 'add', 'sub'], required=True)
    p.add_argument('a')
    p.add_argument('b', nargs='?')
    p.set_defaults(run=run_arith)

    return parser


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else EXIT_USAGE

    try:
        config = load_playground_config(args.config)
    except ConfigError as e:
        sys.stderr.write(f"lplay: {e}\n")
        return EXIT_USAGE

    logging.basicConfig(level=_given(args.log_level, config.log_level), format=LOG_FORMAT)
    sys.setrecursionlimit(max(sys.getrecursionlimit(), RECURSION_LIMIT))
    logger.debug(f"lplay {__version__}: {args.command}")

    try:
        return args.run(args, config)
    except (ConfigError, ValueError) as e:
        sys.stderr.write(f"lplay: {e}\n")
        return EXIT_USAGE
    except NotFoundError as e:
        sys.stderr.write(f"lplay: not found: {e}\n")
        return EXIT_NOT_FOUND
    except DomainError as e:
        sys.stderr.write(f"lplay: {type(e).__name__}: {e}\n")
        return EXIT_DOMAIN


if __name__ == '__main__':
    sys.exit(main())
