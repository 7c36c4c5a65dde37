"""punctbin command line: binarize, debinarize, induce-heads, head-acc,
export-instances, eval, punct-eval, compare, normalize, gen-synth.

Exit codes: 0 success, 1 validation error, 2 I/O error.  Diagnostics go
to stderr; data goes to files or stdout.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import compare as cp
from . import deps as dp
from . import evaluate as ev
from . import heads as hd
from . import synth
from . import transfer as tf
from . import trees as tr
from .binarize import (PTB_INVENTORY, binarize, debinarize, parse_inventory)


def _read(path):
    with open(path, encoding="utf-8") as f:
        return f.read()


def _write(path, text):
    if path == "-":
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8") as f:
            f.write(text)


def _load_inventory(args):
    if getattr(args, "punct", None):
        return parse_inventory(_read(args.punct))
    return PTB_INVENTORY


def _load_rule_table(path):
    if path == "toy":
        return hd.TOY_RULE_TABLE
    return hd.parse_rule_table(_read(path))


def _conll_args(parser):
    parser.add_argument("--id-col", type=int, default=0)
    parser.add_argument("--form-col", type=int, default=1)
    parser.add_argument("--pos-col", type=int, default=3)
    parser.add_argument("--head-col", type=int, default=6)


def _parse_deps(args, path):
    return dp.parse_conll(_read(path), id_col=args.id_col, form_col=args.form_col,
                          pos_col=args.pos_col, head_col=args.head_col)


def _complete(assignment, tree, punct):
    """Fill nodes missing from a partial head source with the leftmost
    non-punctuation child, so binarization stays total.
    """
    nodes, _ = tr.node_table(tree)
    choice = dict(assignment.choice)
    filled = 0
    for nid, node in enumerate(nodes):
        if node.is_preterminal or nid in choice:
            continue
        labels = [c.label for c in node.children]
        pos = next((i for i, (lab, c) in enumerate(zip(labels, node.children))
                    if not (c.is_preterminal and lab in punct)), 0)
        choice[nid] = pos
        filled += 1
    return hd.HeadAssignment(choice), filled


def _head_source(args, corpus, punct):
    """Per-tree HeadAssignments from a "kind:path" head source spec."""
    spec = args.heads
    if ":" not in spec:
        raise SystemExit2("head source must be rules:PATH, induced:PATH or file:PATH")
    kind, path = spec.split(":", 1)
    if kind == "rules":
        table = _load_rule_table(path)
        return [hd.rule_heads(t, table) for t in corpus]
    if kind == "induced":
        graphs = _parse_deps(args, path)
        pairs, rejected = dp.align(corpus, graphs)
        if rejected:
            raise SystemExit2("induced head source: %d sentence(s) fail terminal "
                              "alignment (first: sentence %d, %s)"
                              % (len(rejected), rejected[0][0], rejected[0][1]))
        assignments = []
        filled_total = 0
        for tree, pair in zip(corpus, pairs):
            a, _ = hd.induce_gold_heads(pair)
            a, filled = _complete(a, tree, punct)
            filled_total += filled
            assignments.append(a)
        if filled_total:
            print("induced heads: %d excluded node(s) completed with leftmost "
                  "non-punctuation child" % filled_total, file=sys.stderr)
        return assignments
    if kind == "file":
        assignments = hd.load_predictions(corpus, _read(path))
        out = []
        filled_total = 0
        for tree, a in zip(corpus, assignments):
            a, filled = _complete(a, tree, punct)
            filled_total += filled
            out.append(a)
        if filled_total:
            print("prediction file: %d uncovered node(s) completed with leftmost "
                  "non-punctuation child" % filled_total, file=sys.stderr)
        return out
    raise SystemExit2("unknown head source kind %r" % kind)


class SystemExit2(ValueError):
    """Validation failure surfaced as exit code 1."""


def cmd_binarize(args):
    corpus = tr.parse_trees(_read(args.infile))
    punct = _load_inventory(args)
    assignments = _head_source(args, corpus, punct)
    warnings = []
    out = []
    for tree, assignment in zip(corpus, assignments):
        out.append(binarize(tree, assignment, punct, aware=not args.no_punct,
                               warnings=warnings))
    for nid, msg in warnings:
        print("warning: node %d: %s" % (nid, msg), file=sys.stderr)
    _write(args.out, tr.write_corpus(tr.Corpus(tuple(out))))
    return 0


def cmd_debinarize(args):
    corpus = tr.parse_trees(_read(args.infile))
    out = tuple(debinarize(t) for t in corpus)
    _write(args.out, tr.write_corpus(tr.Corpus(out)))
    return 0


def cmd_induce_heads(args):
    corpus = tr.parse_trees(_read(args.trees))
    graphs = _parse_deps(args, args.deps)
    pairs, rejected = dp.align(corpus, graphs)
    for i, reason in rejected:
        print("rejected sentence %d: %s" % (i, reason), file=sys.stderr)
    assignments = []
    kept = iter(pairs)
    rejected_set = {i for i, _ in rejected}
    for i, _tree in enumerate(corpus):
        if i in rejected_set:
            assignments.append(hd.HeadAssignment({}))
        else:
            a, excluded = hd.induce_gold_heads(next(kept))
            for nid, reason in excluded:
                print("tree %d node %d excluded: %s" % (i, nid, reason),
                      file=sys.stderr)
            assignments.append(a)
    _write(args.out, hd.write_predictions(assignments))
    return 0


def cmd_head_acc(args):
    corpus = tr.parse_trees(_read(args.trees))
    graphs = _parse_deps(args, args.deps)
    pairs, rejected = dp.align(corpus, graphs)
    if rejected:
        raise SystemExit2("%d sentence(s) fail terminal alignment" % len(rejected))
    gold = [hd.induce_gold_heads(p)[0] for p in pairs]
    if args.pred.startswith("rules:"):
        table = _load_rule_table(args.pred.split(":", 1)[1])
        predicted = [hd.rule_heads(t, table) for t in corpus]
    elif args.pred.startswith("file:"):
        predicted = hd.load_predictions(corpus, _read(args.pred.split(":", 1)[1]))
    else:
        raise SystemExit2("--pred must be rules:PATH or file:PATH")
    acc, counted = hd.corpus_head_accuracy(predicted, gold)
    _write(args.out, json.dumps({"accuracy": round(acc, 6), "counted": counted}) + "\n")
    return 0


def cmd_export_instances(args):
    corpus = tr.parse_trees(_read(args.trees))
    graphs = _parse_deps(args, args.deps)
    pairs, rejected = dp.align(corpus, graphs)
    for i, reason in rejected:
        print("rejected sentence %d: %s" % (i, reason), file=sys.stderr)
    label_map = tf.parse_label_map(_read(args.map)) if args.map else None
    records = export_with_indices(corpus, pairs, rejected, label_map)
    _write(args.out, hd.write_instances(records))
    return 0


def export_with_indices(corpus, pairs, rejected, label_map=None):
    """Instance export keyed by original corpus tree indices, skipping
    rejected sentences.
    """
    rejected_set = {i for i, _ in rejected}
    kept_indices = [i for i in range(len(corpus)) if i not in rejected_set]
    records = hd.export_instances(pairs, label_map)
    return [(kept_indices[ti], ni, inst) for ti, ni, inst in records]


def cmd_eval(args):
    gold = tr.parse_trees(_read(args.gold))
    pred = tr.parse_trees(_read(args.pred))
    punct = _load_inventory(args)
    mode = ev.MODE_EXCLUDE if args.mode == "evalb" else ev.MODE_INCLUDE
    report = ev.score(gold, pred, mode, punct)
    sys.stderr.write(report.to_table())
    _write(args.out, report.to_json_lines())
    return 0


def cmd_punct_eval(args):
    gold = tr.parse_trees(_read(args.gold))
    pred = tr.parse_trees(_read(args.pred))
    punct = _load_inventory(args)
    marks = ev.DEFAULT_MARK_FORMS
    if args.marks:
        marks = frozenset(_read(args.marks).split())
    report = ev.punct_conditioned(gold, pred, punct, marks)
    sys.stderr.write(report.to_table())
    _write(args.out, report.to_json_lines())
    return 0


def cmd_compare(args):
    orig = tr.parse_trees(_read(args.orig))
    ca = tr.parse_trees(_read(args.a))
    cb = tr.parse_trees(_read(args.b))
    if not (len(orig) == len(ca) == len(cb)):
        raise SystemExit2("corpora differ in tree count")
    rows = ["sentence\tbracket_f1\tspine_identity\tspine_counted"]
    f1s = []
    idents = []
    total_counted = 0
    for i, (o, a, b) in enumerate(zip(orig, ca, cb)):
        f1 = cp.binary_bracket_f1(a, b)
        ident, counted = cp.spine_identity(o, a, b)
        rows.append("%d\t%.4f\t%.4f\t%d" % (i, f1, ident, counted))
        f1s.append(f1)
        if counted:
            idents.append((ident, counted))
            total_counted += counted
    corpus_f1 = sum(f1s) / len(f1s) if f1s else 1.0
    corpus_ident = (sum(i * c for i, c in idents) / total_counted
                    if total_counted else 1.0)
    rows.append("ALL\t%.4f\t%.4f\t%d" % (corpus_f1, corpus_ident, total_counted))
    _write(args.out, "\n".join(rows) + "\n")
    return 0


def cmd_normalize(args):
    corpus = tr.parse_trees(_read(args.infile))
    label_map = tf.parse_label_map(_read(args.map))
    normalized, warnings = tf.apply_corpus(corpus, label_map)
    for label, count in sorted(warnings.items()):
        print("unmapped label %r (%d occurrence(s))" % (label, count), file=sys.stderr)
    _write(args.out, tr.write_corpus(normalized))
    return 0


def cmd_gen_synth(args):
    corpus, graphs, _heads = synth.generate(
        args.trees, args.seed, max_depth=args.depth, max_branch=args.branch,
        punct_prob=args.punct_prob)
    _write(args.out_trees, tr.write_corpus(corpus))
    _write(args.out_deps, dp.write_conll(graphs))
    return 0


def build_parser():
    p = argparse.ArgumentParser(prog="punctbin",
                                description="punctuation-aware treebank binarization toolkit")
    sub = p.add_subparsers(dest="command", required=True)

    b = sub.add_parser("binarize", help="head-driven punctuation-aware binarization")
    b.add_argument("--in", dest="infile", required=True)
    b.add_argument("--heads", required=True,
                   help="rules:PATH | induced:PATH | file:PATH (rules:toy for the built-in table)")
    b.add_argument("--punct", help="inventory config; default PTB-style tags")
    b.add_argument("--no-punct", action="store_true",
                   help="disable boundary peeling (high-attachment baseline)")
    b.add_argument("--out", required=True)
    _conll_args(b)
    b.set_defaults(func=cmd_binarize)

    d = sub.add_parser("debinarize", help="splice @X nodes back into parents")
    d.add_argument("--in", dest="infile", required=True)
    d.add_argument("--out", required=True)
    d.set_defaults(func=cmd_debinarize)

    i = sub.add_parser("induce-heads", help="dependency-induced gold heads")
    i.add_argument("--trees", required=True)
    i.add_argument("--deps", required=True)
    i.add_argument("--out", required=True)
    _conll_args(i)
    i.set_defaults(func=cmd_induce_heads)

    h = sub.add_parser("head-acc", help="head accuracy against induced gold heads")
    h.add_argument("--trees", required=True)
    h.add_argument("--deps", required=True)
    h.add_argument("--pred", required=True, help="rules:PATH | file:PATH")
    h.add_argument("--out", default="-")
    _conll_args(h)
    h.set_defaults(func=cmd_head_acc)

    x = sub.add_parser("export-instances", help="training instances for the head selector")
    x.add_argument("--trees", required=True)
    x.add_argument("--deps", required=True)
    x.add_argument("--map", help="label normalization config")
    x.add_argument("--out", required=True)
    _conll_args(x)
    x.set_defaults(func=cmd_export_instances)

    e = sub.add_parser("eval", help="labeled bracket F1")
    e.add_argument("--gold", required=True)
    e.add_argument("--pred", required=True)
    e.add_argument("--mode", choices=["evalb", "jp"], default="jp")
    e.add_argument("--punct")
    e.add_argument("--out", default="-")
    e.set_defaults(func=cmd_eval)

    q = sub.add_parser("punct-eval", help="punctuation-conditioned F1 per mark")
    q.add_argument("--gold", required=True)
    q.add_argument("--pred", required=True)
    q.add_argument("--punct")
    q.add_argument("--marks", help="file of extra conditioning mark forms")
    q.add_argument("--out", default="-")
    q.set_defaults(func=cmd_punct_eval)

    c = sub.add_parser("compare", help="bracket F1 and spine identity of two binarizations")
    c.add_argument("--orig", required=True)
    c.add_argument("--a", required=True)
    c.add_argument("--b", required=True)
    c.add_argument("--out", default="-")
    c.set_defaults(func=cmd_compare)

    n = sub.add_parser("normalize", help="apply deterministic label maps")
    n.add_argument("--in", dest="infile", required=True)
    n.add_argument("--map", required=True)
    n.add_argument("--out", required=True)
    n.set_defaults(func=cmd_normalize)

    g = sub.add_parser("gen-synth", help="seeded synthetic aligned corpora")
    g.add_argument("--trees", type=int, default=100)
    g.add_argument("--seed", type=int, default=0)
    g.add_argument("--depth", type=int, default=6)
    g.add_argument("--branch", type=int, default=4)
    g.add_argument("--punct-prob", type=float, default=0.3)
    g.add_argument("--out-trees", required=True)
    g.add_argument("--out-deps", required=True)
    g.set_defaults(func=cmd_gen_synth)

    return p


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 1 if exc.code not in (0, None) else 0
    try:
        return args.func(args)
    except (OSError,) as exc:
        print("I/O error: %s" % exc, file=sys.stderr)
        return 2
    except (ValueError, SystemExit2) as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 1


def entry():
    raise SystemExit(main())
