import os
import sys
import json
import logging
import argparse
sys.path.insert(0, os.path.abspath(os.path.dirname(__file__)))
from src.enumeration.TreeEnumerator import EnumerationQuery, TreeEnumerator
from src.extremal.BoundFormulas import MAX_B, MAX_K, MIN_B, bound
from src.extremal.FamilyBuilder import B_FAMILIES, FAMILIES, construct_family, normalize_family
from src.harness.VerificationHarness import MIN_K_EMPIRICAL, VerificationHarness
from src.polarity import summarize_tree
from src.serialization.EdgeListDocument import read_edge_list, serialize_edge_list, write_edge_list
from src.serialization.ReportWriter import FORMATS, write_reports
from src.transforms.RewriteRules import rule_catalog
from src.trees.ChemicalTree import degree_census, wp_distance, wp_edge
from src.trees.PathStructure import segment_count

EXIT_OK = 0
EXIT_ERROR = 1
EXIT_VIOLATIONS = 2

CENSUS_HEADER = 'n,n1,n2,n3,n4,b,k,wp'


class WpArgumentParser(argparse.ArgumentParser):
    """Usage errors exit with status 1."""

    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_ERROR, f"{self.prog}: error: {message}\n")


def _parameter(args, expected):
    """The --b or --k value a subcommand needs; the other one must be absent."""
    other = 'k' if expected == 'b' else 'b'
    if getattr(args, other) is not None:
        raise ValueError(f"--{other} does not apply here, expected --{expected}")
    value = getattr(args, expected)
    if value is None:
        raise ValueError(f"--{expected} is required")
    return value


def cmd_compute(args):
    tree = read_edge_list(args.input)
    if args.summary:
        print(json.dumps(summarize_tree(tree)))
    elif args.method == 'edge':
        print(wp_edge(tree))
    elif args.method == 'distance':
        print(wp_distance(tree))
    else:
        print(f"{wp_edge(tree)} {wp_distance(tree)}")
    return EXIT_OK


def cmd_enumerate(args):
    query = EnumerationQuery(args.n, b=args.b, k=args.k, limit=args.limit)
    enumerator = TreeEnumerator()
    if args.emit == 'count':
        print(enumerator.count(query))
        return EXIT_OK
    if args.emit == 'census':
        print(CENSUS_HEADER)
    for tree in enumerator.enumerate(query):
        if args.emit == 'trees':
            print(serialize_edge_list(tree), end='')
        else:
            census = degree_census(tree)
            print(f"{tree.order},{census.n1},{census.n2},{census.n3},{census.n4},"
                  f"{census.branching},{segment_count(tree)},{wp_edge(tree)}")
    return EXIT_OK


def cmd_bound(args):
    parameter = _parameter(args, 'k' if args.which == MAX_K else 'b')
    print(json.dumps(bound(args.which, args.n, parameter).to_dict()))
    return EXIT_OK


def cmd_construct(args):
    family = normalize_family(args.family)
    tree = construct_family(family, args.n, _parameter(args, 'b' if family in B_FAMILIES else 'k'))
    if args.out:
        write_edge_list(tree, args.out)
        print(f"{family} witness of order {tree.order} saved to {args.out}")
    else:
        print(serialize_edge_list(tree), end='')
    return EXIT_OK


def cmd_verify(args):
    harness = VerificationHarness(workers=args.workers, rule_ids=args.rules)
    if args.which == 'bounds':
        if args.min_k_empirical:
            campaigns = [MIN_K_EMPIRICAL]
        else:
            campaigns = [args.bound] if args.bound else [MAX_B, MIN_B, MAX_K]
        reports = [harness.verify_bounds(args.n_min, args.n_max, which) for which in campaigns]
    elif args.which == 'rules':
        reports = [harness.verify_rules(args.n_min, args.n_max)]
    else:
        reports = [harness.verify_wp_equivalence(args.n_min, args.n_max)]

    text = write_reports(reports, args.format, args.out)
    if args.out:
        print(f"Report saved to {args.out}")
    else:
        print(text, end='')

    violations = sum(r.violation_count for r in reports)
    for report in reports:
        status = 'passed' if report.passed else f"{report.violation_count} violations"
        print(f"{report.campaign_id}: {len(report.rows)} rows, {status}", file=sys.stderr)
    return EXIT_VIOLATIONS if violations else EXIT_OK


def cmd_rules(args):
    catalog = [rule.to_dict() for rule in rule_catalog()]
    if args.json:
        print(json.dumps(catalog, indent=2))
        return EXIT_OK
    print(f"Rule catalog ({len(catalog)} rules):")
    for rule in catalog:
        closed = 'closed form' if rule['closed_form'] else 'no closed form'
        print(f"  {rule['rule_id']:<4} {rule['preserves']:<16} {rule['sign']:<13} {closed:<15} {rule['label']}")
        if args.verbose:
            print(f"       sites ({rule['variables']}): {rule['hypothesis']}")
    return EXIT_OK


def build_parser():
    parser = WpArgumentParser(description="Wiener polarity index of chemical trees")
    parser.add_argument("-v", "--verbose", action="store_true", help="Debug logging on stderr")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("compute", help="W_p of a tree read from an edge list file")
    p.add_argument("--input", required=True, help="Edge list file")
    p.add_argument("--method", choices=["edge", "distance", "both"], default="edge")
    p.add_argument("--summary", action="store_true", help="Census, b, k and both W_p values as JSON")
    p.set_defaults(func=cmd_compute)

    p = sub.add_parser("enumerate", help="Stream the chemical trees of one order")
    p.add_argument("--n", type=int, required=True)
    group = p.add_mutually_exclusive_group()
    group.add_argument("--b", type=int, help="Keep trees with b branching vertices")
    group.add_argument("--k", type=int, help="Keep trees with k segments")
    p.add_argument("--emit", choices=["trees", "census", "count"], default="trees")
    p.add_argument("--limit", type=int, help="Stop after this many trees")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("bound", help="Closed form extreme of W_p as JSON")
    p.add_argument("--which", choices=[MAX_B, MIN_B, MAX_K], required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--b", type=int)
    p.add_argument("--k", type=int)
    p.set_defaults(func=cmd_bound)

    p = sub.add_parser("construct", help="Write the witness tree of an extremal family")
    p.add_argument("--family", choices=[f.lower() for f in FAMILIES], type=str.lower, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--b", type=int)
    p.add_argument("--k", type=int)
    p.add_argument("--out", help="Output edge list file (default: stdout)")
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("verify", help="Run a verification campaign")
    p.add_argument("--which", choices=["bounds", "rules", "wp-equiv"], required=True)
    p.add_argument("--bound", choices=[MAX_B, MIN_B, MAX_K],
                   help="Single bound campaign (default: all three)")
    p.add_argument("--min-k-empirical", action="store_true",
                   help="Tabulate the enumerated minimum for fixed k instead of the bounds")
    p.add_argument("--n-min", type=int, required=True)
    p.add_argument("--n-max", type=int, required=True)
    p.add_argument("--format", choices=list(FORMATS), default="csv")
    p.add_argument("--out", help="Report file (default: stdout)")
    p.add_argument("--workers", type=int, default=1, help="Worker processes for campaign cells")
    p.add_argument("--rules", nargs="+", help="Rule ids swept by --which rules (default: all)")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("rules", help="Print the rewrite rule catalog")
    p.add_argument("--list", action="store_true", help="List the catalog (default action)")
    p.add_argument("--json", action="store_true", help="Catalog as JSON")
    p.set_defaults(func=cmd_rules)
    return parser


def main(argv=None):
    """
    Main entry point of the Wiener polarity tool.
    Parses command line arguments, dispatches to the subcommand and returns its exit status.
    """
    parser = build_parser()
    args = parser.parse_args(argv)

    if args.verbose:
        level = logging.DEBUG
    elif args.command == 'enumerate':
        level = logging.WARNING
    else:
        level = logging.INFO
    logging.basicConfig(level=level, stream=sys.stderr, force=True,
                        format="%(asctime)s %(levelname)s %(name)s: %(message)s")

    try:
        return args.func(args)
    except (ValueError, OSError) as e:
        print(f"Error: {e}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
