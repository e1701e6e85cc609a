"""Command-line front end.

Exit codes: 0 success, 1 usage error, 2 domain error, 3 resource guard.
"""

import argparse
import json
import sys
from itertools import count, islice

from . import graphcodec, hfs, natset, numerals, pairing
from .errors import DomainError, ResourceLimitError
from .graphcodec import Orientation

EXIT_OK, EXIT_USAGE, EXIT_DOMAIN, EXIT_RESOURCE = 0, 1, 2, 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


def nat(text):
    """argparse type for arbitrarily long non-negative decimals."""
    if not text.isascii() or not text.isdigit():
        raise argparse.ArgumentTypeError(f"not a non-negative decimal integer: {text!r}")
    return int(text)


def _bitstring(text):
    if any(c not in "01" for c in text):
        raise argparse.ArgumentTypeError(f"not a bitstring: {text!r}")
    return text


def _lines(values):
    return "".join(f"{v}\n" for v in values)


def _cmd_bits(args):
    return "".join(map(str, numerals.nat_to_bijbits(args.n))) + "\n"


def _cmd_unbits(args):
    return f"{numerals.bijbits_to_nat([int(c) for c in ''.join(args.bits)])}\n"


def _cmd_set(args):
    return " ".join(map(str, natset.nat_to_set(args.n))) + "\n"


def _cmd_unset(args):
    return f"{natset.set_to_nat(args.elements)}\n"


def _cmd_hfs(args):
    return f"{hfs.nat_to_hfs(args.urelements, args.n)!r}\n"


def _cmd_show(args):
    return hfs.hfs_show(args.urelements, args.n) + "\n"


def _cmd_hypergraph(args):
    return _lines(" ".join(map(str, e)) for e in natset.nat_to_hypergraph(args.n))


def _read_hypergraph(text):
    edges = []
    for lineno, line in enumerate(text.splitlines(), 1):
        fields = line.split()
        if not all(f.isdigit() for f in fields):
            raise DomainError(f"line {lineno}: expected naturals, got {line!r}")
        edges.append([int(f) for f in fields])
    return edges


def _cmd_unhypergraph(args):
    return f"{natset.hypergraph_to_nat(_read_hypergraph(args.input.read()))}\n"


PAIRINGS = {
    "cantor": pairing.cantor_pair,
    "bitmerge": pairing.bitmerge_pair,
    "kuratowski": pairing.kuratowski_pair,
}
UNPAIRINGS = {
    "cantor": pairing.cantor_unpair,
    "bitmerge": pairing.bitmerge_unpair,
}


def _cmd_pair(args):
    return f"{PAIRINGS[args.kind](args.x, args.y)}\n"


def _cmd_unpair(args):
    x, y = UNPAIRINGS[args.kind](args.z)
    return f"{x} {y}\n"


def _cmd_powset(args):
    return f"{natset.nat_powset(args.n)}\n"


def _cmd_ordinal(args):
    return f"{natset.nat_ordinal(args.n)}\n"


def _cmd_choice(args):
    return f"{natset.nat_choice_fun(args.n)}\n"


def _cmd_edges(args):
    return graphcodec.format_edges(graphcodec.nat_to_pairs(Orientation(args.orientation), args.n))


def _render_dag(g, n, dot):
    if dot:
        return graphcodec.dag_to_dot(g, graphcodec.compact_dag_labels(n))
    return graphcodec.format_edges(g.edges())


def _cmd_dag(args):
    return _render_dag(graphcodec.to_compact_dag(args.n), args.n, args.dot)


def _cmd_ddag(args):
    return _render_dag(graphcodec.transpose(graphcodec.to_compact_dag(args.n)), args.n, args.dot)


def _cmd_undag(args):
    g = graphcodec.dag_from_edges(graphcodec.parse_edges(args.input.read()))
    root = graphcodec.from_ddag if args.dual else graphcodec.from_dag
    return f"{root(g)}\n"


def _cmd_dual(args):
    return f"{graphcodec.intensional_dual(args.n)}\n"


def _cmd_self_duals(args):
    return _lines(graphcodec.self_duals(args.start, args.stop))


def _cmd_digraph(args):
    return graphcodec.format_edges(graphcodec.nat_to_digraph(args.n))


def _cmd_undigraph(args):
    return f"{graphcodec.digraph_to_nat(graphcodec.parse_edges(args.input.read()))}\n"


def _compact_json(value):
    return json.dumps(value, separators=(",", ":"))


def _cmd_enumerate(args):
    if args.kind == "bits":
        items = ("".join(map(str, b)) for b in numerals.all_bitstrings())
    elif args.kind == "hfs":
        items = map(repr, hfs.iterative_hfs_stream(args.urelements))
    elif args.kind == "hypergraphs":
        items = map(_compact_json, natset.hypergraph_stream())
    else:
        items = (_compact_json([list(e) for e in graphcodec.nat_to_digraph(n)])
                 for n in count())
    return _lines(islice(items, args.count))


def build_parser():
    parser = _Parser(prog="hfsets", description="Bijective codes between naturals, "
                     "hereditarily finite sets, pairs and graphs.")
    sub = parser.add_subparsers(dest="command", metavar="COMMAND", parser_class=_Parser)
    sub.required = True

    def command(name, func, help, urelements=False):
        p = sub.add_parser(name, help=help)
        p.set_defaults(func=func)
        if urelements:
            p.add_argument("--urelements", "-u", type=nat, default=0, metavar="U",
                           help="urelement limit (default 0: pure sets)")
        return p

    command("bits", _cmd_bits, "bijective base-2 digits of N, least significant first"
            ).add_argument("n", type=nat, metavar="N")
    command("unbits", _cmd_unbits, "natural coded by a bijective base-2 bitstring"
            ).add_argument("bits", type=_bitstring, nargs="*", metavar="B")
    command("set", _cmd_set, "exponents of the 1-bits of N"
            ).add_argument("n", type=nat, metavar="N")
    command("unset", _cmd_unset, "code of a strictly increasing set of naturals"
            ).add_argument("elements", type=nat, nargs="*", metavar="E")
    command("hfs", _cmd_hfs, "HFS tree of N", urelements=True
            ).add_argument("n", type=nat, metavar="N")
    command("show", _cmd_show, "brace rendering of N as an HFS", urelements=True
            ).add_argument("n", type=nat, metavar="N")
    command("hypergraph", _cmd_hypergraph, "hyperedges of N, one per line"
            ).add_argument("n", type=nat, metavar="N")
    p = command("unhypergraph", _cmd_unhypergraph, "code of hyperedge lines read from input")
    p.add_argument("input", nargs="?", type=argparse.FileType("r"), default="-")

    p = command("pair", _cmd_pair, "pair two naturals")
    p.add_argument("kind", choices=sorted(PAIRINGS))
    p.add_argument("x", type=nat, metavar="X")
    p.add_argument("y", type=nat, metavar="Y")
    p = command("unpair", _cmd_unpair, "split a natural into a pair")
    p.add_argument("kind", choices=sorted(UNPAIRINGS))
    p.add_argument("z", type=nat, metavar="Z")

    command("powset", _cmd_powset, "code of the powerset of N"
            ).add_argument("n", type=nat, metavar="N")
    command("ordinal", _cmd_ordinal, "code of the von Neumann ordinal N"
            ).add_argument("n", type=nat, metavar="N")
    command("choice", _cmd_choice, "code of a choice function for the family N"
            ).add_argument("n", type=nat, metavar="N")

    p = command("edges", _cmd_edges, "membership edges of N")
    p.add_argument("orientation", choices=[o.value for o in Orientation])
    p.add_argument("n", type=nat, metavar="N")
    for name, func, help in [("dag", _cmd_dag, "compact containment graph of N"),
                             ("ddag", _cmd_ddag, "transposed compact graph of N")]:
        p = command(name, func, help)
        p.add_argument("n", type=nat, metavar="N")
        p.add_argument("--dot", action="store_true", help="emit Graphviz DOT")
    p = command("undag", _cmd_undag, "decorate an edge list read from input")
    p.add_argument("input", nargs="?", type=argparse.FileType("r"), default="-")
    p.add_argument("--dual", action="store_true",
                   help="decorate from the last vertex (for ddag output)")

    command("dual", _cmd_dual, "intensional dual of N"
            ).add_argument("n", type=nat, metavar="N")
    p = command("self-duals", _cmd_self_duals, "self-dual naturals in [FROM, TO]")
    p.add_argument("start", type=nat, metavar="FROM")
    p.add_argument("stop", type=nat, metavar="TO")

    command("digraph", _cmd_digraph, "edges of the digraph coded by N"
            ).add_argument("n", type=nat, metavar="N")
    p = command("undigraph", _cmd_undigraph, "code of an edge list read from input")
    p.add_argument("input", nargs="?", type=argparse.FileType("r"), default="-")

    p = command("enumerate", _cmd_enumerate, "list the first K objects of a kind",
                urelements=True)
    p.add_argument("kind", choices=["bits", "hfs", "hypergraphs", "digraphs"])
    p.add_argument("--count", "-k", type=nat, required=True, metavar="K")
    return parser


def main(argv=None, stdout=None, stderr=None):
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    if hasattr(sys, "set_int_max_str_digits"):
        sys.set_int_max_str_digits(0)
    try:
        args = build_parser().parse_args(argv)
        output = args.func(args)
    except UsageError as e:
        print(e, file=stderr)
        return EXIT_USAGE
    except SystemExit as e:
        # --help
        return EXIT_OK if not e.code else EXIT_USAGE
    except ResourceLimitError as e:
        print(f"hfsets: resource limit: {e}", file=stderr)
        return EXIT_RESOURCE
    except DomainError as e:
        print(f"hfsets: error: {e}", file=stderr)
        return EXIT_DOMAIN
    stdout.write(output)
    return EXIT_OK


def run():
    sys.exit(main())


if __name__ == "__main__":
    run()
