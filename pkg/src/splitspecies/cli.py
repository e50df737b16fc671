"""Command-line front end: counting, enumeration, classification, bijections,
verification suites, and asymptotic reports, all with machine-readable output.

Exit codes: 0 success, 1 a verification suite found a discrepancy, 2 usage
error, 3 invalid input (too large, not a split graph, wrong class, ...).

Counts are printed as decimal strings, since they overflow 64-bit integers
almost immediately.  Identical invocations produce byte-identical output; the
``verify --suite identities`` report in particular contains no timing and is
stable across runs (the env var SPLIT_SPECIES_THREADS, which caps internal
parallelism, cannot change any output either).
"""

from __future__ import annotations

import argparse
import json
import os
import random
import sys

from . import counting
from .counting import decimal
from .asymptotics import ratio_report
from .bijections import (
    amb_compose,
    amb_decompose,
    bicolored_to_split,
    cuk_compose,
    cuk_decompose,
    split_to_bicolored,
    uk_compose,
    uk_decompose,
)
from .enumeration import ClassTag, class_census, count_unlabeled, enumerate_labeled
from .errors import SplitSpeciesError
from .graphs import BicoloredGraph, Graph, graph_to_json, load_graph
from .structure import ColoredSplitGraph, classify, swing_report

_CHAIN_KEYS = {
    ClassTag.BALANCED: "B",
    ClassTag.UNBALANCED: "U",
    ClassTag.AMBIGUOUS: "Uamb",
    ClassTag.K_CANONICAL: "UK",
    ClassTag.S_CANONICAL: "UK",
    ClassTag.COLORED_SPLIT: "cS",
    ClassTag.BICOLORED_NO_ISOLATED_GREEN: "cS",
}


def _labeled_count(tag: ClassTag, n: int) -> int:
    if tag is ClassTag.SPLIT:
        return counting.split_labeled(n)
    if tag is ClassTag.BICOLORED:
        return counting.bicolored_labeled(n)
    if tag is ClassTag.ALL_GRAPHS:
        return 1 << (n * (n - 1) // 2)
    return counting.chain_count(_CHAIN_KEYS[tag], n)


def _structure_json(obj) -> dict:
    if isinstance(obj, Graph):
        return graph_to_json(obj)
    if isinstance(obj, (ColoredSplitGraph, BicoloredGraph)):
        return obj.to_json()
    raise TypeError(type(obj))


def _emit_json(data) -> None:
    print(json.dumps(data, sort_keys=True, separators=(",", ":")))


# ---------------------------------------------------------------------------
# Subcommands
# ---------------------------------------------------------------------------

def _cmd_count(args) -> int:
    tag = ClassTag(args.klass)
    ns = range(args.max_n + 1) if args.n is None else [args.n]
    values = {}
    for n in ns:
        if args.unlabeled:
            values[n] = count_unlabeled(n, tag)
        else:
            values[n] = _labeled_count(tag, n)
    kind = "unlabeled" if args.unlabeled else "labeled"
    if args.format == "json":
        _emit_json({"class": tag.value, "kind": kind,
                    "counts": {str(n): decimal(v) for n, v in values.items()}})
    elif args.format == "csv":
        print("n,class,kind,count")
        for n, v in values.items():
            print(f"{n},{tag.value},{kind},{decimal(v)}")
    else:
        for n, v in values.items():
            print(f"{tag.value} {kind} n={n}: {decimal(v)}")
    return 0


def _cmd_enumerate(args) -> int:
    tag = ClassTag(args.klass)
    for structure in enumerate_labeled(args.n, tag):
        print(json.dumps(_structure_json(structure), sort_keys=True, separators=(",", ":")))
    return 0


def _cmd_classify(args) -> int:
    g = load_graph(args.graph)
    rep = swing_report(g)  # raises NotSplit -> exit 3
    cls = classify(g)
    _emit_json({"class": cls.value, "swing_report": rep.to_json()})
    return 0


def _load_colored(path: str) -> ColoredSplitGraph:
    with open(path) as f:
        return ColoredSplitGraph.from_json(json.load(f))


def _load_bicolored(path: str) -> BicoloredGraph:
    with open(path) as f:
        return BicoloredGraph.from_json(json.load(f))


def _cmd_biject(args) -> int:
    name = args.map
    if name in ("uk-decompose", "amb-decompose"):
        if not args.graph:
            raise SystemExit("--graph is required for this map")
        g = load_graph(args.graph)
        if name == "uk-decompose":
            a, rest = uk_decompose(g)
            _emit_json({"map": name, "swing_set": list(a), "rest": rest.to_json()})
        else:
            a, rest = amb_decompose(g)
            _emit_json({"map": name, "swing_vertex": a, "rest": rest.to_json()})
    elif name == "cuk-decompose":
        c = _load_colored(args.input)
        ps, rest = cuk_decompose(c)
        _emit_json({"map": name, "pointed_set": ps.to_json(), "rest": rest.to_json()})
    elif name == "split-to-bicolored":
        c = _load_colored(args.input)
        _emit_json({"map": name, "result": split_to_bicolored(c).to_json()})
    elif name == "bicolored-to-split":
        b = _load_bicolored(args.input)
        _emit_json({"map": name, "result": bicolored_to_split(b).to_json()})
    else:  # pragma: no cover - argparse choices prevent this
        raise SystemExit(f"unknown map {name}")
    return 0


# -- verify suites ----------------------------------------------------------

def _identity_checks(max_n: int) -> list[dict]:
    """Deterministic identity battery over the exhaustive census."""
    checks = []

    def add(name: str, n: int, expected: int, got: int):
        checks.append({"check": name, "n": n, "expected": str(expected),
                       "got": str(got), "ok": expected == got})

    censuses = [class_census(n) for n in range(max_n + 1)]
    for n, c in enumerate(censuses):
        lab, unl = c.labeled, c.unlabeled
        add("labeled-split-partition", n, lab[ClassTag.SPLIT],
            lab[ClassTag.BALANCED] + lab[ClassTag.UNBALANCED])
        add("labeled-unbalanced-partition", n, lab[ClassTag.UNBALANCED],
            lab[ClassTag.K_CANONICAL] + lab[ClassTag.S_CANONICAL] + lab[ClassTag.AMBIGUOUS])
        add("labeled-uk-equals-us", n, lab[ClassTag.K_CANONICAL], lab[ClassTag.S_CANONICAL])
        add("unlabeled-uk-equals-us", n, unl[ClassTag.K_CANONICAL], unl[ClassTag.S_CANONICAL])
        add("labeled-split-formula", n, counting.split_labeled(n), lab[ClassTag.SPLIT])
        add("labeled-bicolored-formula", n, counting.bicolored_labeled(n), lab[ClassTag.BICOLORED])
        add("labeled-colored-equals-bicolored-star", n, lab[ClassTag.COLORED_SPLIT],
            lab[ClassTag.BICOLORED_NO_ISOLATED_GREEN])
        add("unlabeled-colored-equals-split", n, unl[ClassTag.COLORED_SPLIT], unl[ClassTag.SPLIT])
        s_tilde = [censuses[k].unlabeled[ClassTag.SPLIT] for k in range(n + 1)]
        add("unlabeled-unbalanced-partial-sums", n, sum(s_tilde[:-1]), unl[ClassTag.UNBALANCED])
        add("unlabeled-bicolored-partial-sums", n, sum(s_tilde), unl[ClassTag.BICOLORED])
        if n >= 1:
            from math import comb

            prev = censuses[n - 1].labeled
            add("labeled-ambiguous-convolution", n, n * prev[ClassTag.BALANCED],
                lab[ClassTag.AMBIGUOUS])
            uk_conv = sum(comb(n, k) * censuses[n - k].labeled[ClassTag.COLORED_SPLIT]
                          for k in range(2, n + 1))
            add("labeled-k-canonical-convolution", n, uk_conv, lab[ClassTag.K_CANONICAL])
    return checks


def _random_checks(max_n: int, seed: int, cases: int) -> list[dict]:
    """Seeded random property checks: split test vs subset oracle, round trips."""
    from .enumeration import _split_data
    from .graphs import complement, is_split, make_graph, relabel

    rng = random.Random(seed)
    failures = []

    def subset_oracle(g: Graph) -> bool:
        full = g.vertex_mask()
        from .structure import is_clique, is_stable

        return any(is_clique(g, km) and is_stable(g, full ^ km) for km in range(full + 1))

    for case in range(cases):
        n = rng.randint(0, 8)
        edges = [(i, j) for j in range(n) for i in range(j) if rng.random() < 0.5]
        g = make_graph(n, edges)
        if is_split(g) != subset_oracle(g):
            failures.append({"check": "split-test-vs-subset-oracle", "case": case,
                             "graph": graph_to_json(g)})
        if is_split(g) != is_split(complement(g)):
            failures.append({"check": "split-complement-closure", "case": case,
                             "graph": graph_to_json(g)})

    n = min(max_n, 7)
    data = _split_data(n)
    from .structure import all_colorings

    by_class = {cls: [] for cls in (1, 2)}
    for q in range(len(data.words)):
        c = int(data.classes[q])
        if c in by_class:
            by_class[c].append(int(data.words[q]))
    for case in range(cases):
        word = rng.choice(by_class[2])  # k-canonical
        g = Graph.from_edge_word(n, word)
        a, rest = uk_decompose(g)
        if uk_compose(a, rest).core != g:
            failures.append({"check": "uk-round-trip", "case": case, "word": word})
        p = list(range(n))
        rng.shuffle(p)
        a2, rest2 = uk_decompose(relabel(g, p))
        if a2 != tuple(sorted(p[v] for v in a)) or rest2 != rest.relabeled(p):
            failures.append({"check": "uk-equivariance", "case": case, "word": word})
        colored = rng.choice(all_colorings(g))
        ps, crest = cuk_decompose(colored)
        if cuk_compose(ps, crest).core != colored:
            failures.append({"check": "cuk-round-trip", "case": case, "word": word})
        back = bicolored_to_split(split_to_bicolored(colored))
        if back != colored:
            failures.append({"check": "bicolored-round-trip", "case": case, "word": word})

        word = rng.choice(by_class[1])  # ambiguous
        g = Graph.from_edge_word(n, word)
        v, rest = amb_decompose(g)
        if amb_compose(v, rest).core != g:
            failures.append({"check": "amb-round-trip", "case": case, "word": word})
    return failures


def _cmd_verify(args) -> int:
    if args.suite == "identities":
        max_n = 6 if args.max_n is None else args.max_n
        checks = _identity_checks(max_n)
        bad = [c for c in checks if not c["ok"]]
        report = {"suite": "identities", "max_n": max_n,
                  "checks_run": len(checks), "discrepancies": bad}
        if args.format == "json":
            _emit_json(report)
        else:
            for c in bad:
                print(f"FAIL {c['check']} n={c['n']}: expected {c['expected']}, got {c['got']}")
            print(f"identities: {len(checks) - len(bad)}/{len(checks)} checks passed")
        return 0 if not bad else 1

    if args.suite == "formulas":
        max_n = 318 if args.max_n is None else args.max_n
        cache = None
        if args.cache and os.path.exists(args.cache):
            cache = counting.CountTable.load(args.cache)
        elif args.cache:
            cache = counting.CountTable("split/labeled/double-sum")
        report = counting.cross_check(max_n, bp_cache=cache)
        if args.cache and cache is not None:
            cache.save(args.cache)
        if args.format == "json":
            _emit_json(report.to_json())
        else:
            print(f"formulas: checked to n={report.checked_to}, "
                  f"{len(report.discrepancies)} discrepancies, {report.elapsed_ms} ms")
            for d in report.discrepancies:
                print(f"FAIL {d['check']} n={d['n']}: expected {d['expected']}, got {d['got']}")
        return 0 if report.ok else 1

    # random
    max_n = 7 if args.max_n is None else args.max_n
    failures = _random_checks(max_n, args.seed, args.cases)
    report = {"suite": "random", "seed": args.seed, "cases": args.cases,
              "failures": failures}
    if args.format == "json":
        _emit_json(report)
    else:
        print(f"random: seed={args.seed} cases={args.cases} failures={len(failures)}")
    return 0 if not failures else 1


def _cmd_asym(args) -> int:
    base = None
    if args.unlabeled_base:
        with open(args.unlabeled_base) as f:
            base = [int(v) for v in json.load(f)["values"]]
    report = ratio_report(args.max_n, bits=args.bits, unlabeled_base=base)
    if args.format == "json":
        _emit_json(report.to_json())
    else:
        sys.stdout.write(report.to_csv())
    return 0


# ---------------------------------------------------------------------------
# Parser
# ---------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="splitspecies",
        description="Exact counting, enumeration, and structure maps for split "
                    "and bicolored graphs.",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    tags = [t.value for t in ClassTag]

    p = sub.add_parser("count", help="count structures of a class")
    p.add_argument("--class", dest="klass", choices=tags, required=True)
    mode = p.add_mutually_exclusive_group(required=True)
    mode.add_argument("--labeled", action="store_true")
    mode.add_argument("--unlabeled", action="store_true")
    size = p.add_mutually_exclusive_group(required=True)
    size.add_argument("--n", type=int)
    size.add_argument("--max-n", type=int)
    p.add_argument("--format", choices=["text", "json", "csv"], default="text")
    p.set_defaults(func=_cmd_count)

    p = sub.add_parser("enumerate", help="list every labeled structure of a class")
    p.add_argument("--class", dest="klass", choices=tags, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--format", choices=["jsonl"], default="jsonl")
    p.set_defaults(func=_cmd_enumerate)

    p = sub.add_parser("classify", help="classify a split graph and report its swing structure")
    p.add_argument("--graph", required=True, help="graph file (.g text or .json)")
    p.set_defaults(func=_cmd_classify)

    p = sub.add_parser("biject", help="apply one of the structural bijections")
    p.add_argument("--map", required=True,
                   choices=["uk-decompose", "amb-decompose", "cuk-decompose",
                            "split-to-bicolored", "bicolored-to-split"])
    p.add_argument("--graph", help="graph file, for the graph-input maps")
    p.add_argument("--input", help="colored/bicolored JSON file, for the colored maps")
    p.set_defaults(func=_cmd_biject)

    p = sub.add_parser("verify", help="run a verification suite")
    p.add_argument("--suite", required=True, choices=["identities", "formulas", "random"])
    p.add_argument("--max-n", type=int, default=None)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--cases", type=int, default=1000)
    p.add_argument("--cache", help="advisory JSON cache file for the formulas suite")
    p.add_argument("--format", choices=["text", "json"], default="json")
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("asym", help="emit the asymptotic ratio report")
    p.add_argument("--max-n", type=int, default=200)
    p.add_argument("--bits", type=int, default=256)
    p.add_argument("--unlabeled-base", help="JSON file with unlabeled split counts")
    p.add_argument("--format", choices=["csv", "json"], default="csv")
    p.set_defaults(func=_cmd_asym)
    return parser


def main(argv=None) -> int:
    # The env var caps internal parallelism; all computation is deterministic
    # regardless of its value, and the current implementation runs serially.
    threads = os.environ.get("SPLIT_SPECIES_THREADS")
    if threads is not None:
        try:
            _ = max(1, int(threads))
        except ValueError:
            print(f"ignoring invalid SPLIT_SPECIES_THREADS={threads!r}", file=sys.stderr)
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except SplitSpeciesError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except FileNotFoundError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
