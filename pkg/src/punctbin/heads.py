"""Head-child assignment from three sources: dependency-induced gold heads,
Collins-style percolation tables, and external prediction files.  Also the
instance export consumed by the trainer and head accuracy scoring.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field

from .deps import AlignedPair
from .trees import Corpus, Tree, node_table, terminal_spans

log = logging.getLogger(__name__)


class HeadError(ValueError):
    pass


LEFT_TO_RIGHT = "left-to-right"
RIGHT_TO_LEFT = "right-to-left"


@dataclass(frozen=True)
class HeadAssignment:
    """Per-tree map from internal NodeId to 0-based head-child position."""

    choice: dict

    @property
    def coverage(self):
        return set(self.choice)

    def get(self, node_id):
        return self.choice.get(node_id)


@dataclass(frozen=True)
class HeadRuleTable:
    """Ordered percolation passes per parent label.

    rules[label] is a list of (direction, priority labels) passes.
    """

    rules: dict
    default_direction: str = LEFT_TO_RIGHT

    def find_head(self, parent_label, child_labels):
        k = len(child_labels)
        if k == 1:
            return 0
        for direction, priorities in self.rules.get(parent_label, ()):
            order = range(k) if direction == LEFT_TO_RIGHT else range(k - 1, -1, -1)
            if not priorities:
                return next(iter(order))
            for wanted in priorities:
                for i in order:
                    if child_labels[i] == wanted:
                        return i
        return 0 if self.default_direction == LEFT_TO_RIGHT else k - 1


def parse_rule_table(text):
    """Parse "PARENT direction label..." lines; repeated PARENT lines form
    ordered passes.  A "default <direction>" line sets the fallback scan.
    """
    rules = {}
    default = LEFT_TO_RIGHT
    for lineno, raw in enumerate(text.split("\n"), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if parts[0] == "default":
            if len(parts) != 2 or parts[1] not in (LEFT_TO_RIGHT, RIGHT_TO_LEFT):
                raise HeadError("line %d: bad default rule %r" % (lineno, raw))
            default = parts[1]
            continue
        if len(parts) < 2 or parts[1] not in (LEFT_TO_RIGHT, RIGHT_TO_LEFT):
            raise HeadError("line %d: expected 'PARENT direction labels...'" % lineno)
        priorities = parts[2:]
        if len(set(priorities)) != len(priorities):
            raise HeadError("line %d: duplicate priority label" % lineno)
        rules.setdefault(parts[0], []).append((parts[1], tuple(priorities)))
    return HeadRuleTable(rules, default)


# Toy table covering the tag set used in tests and synthetic corpora.
TOY_RULE_TABLE = parse_rule_table("""
S  left-to-right VP S
NP right-to-left NN NNS NNP NN-POS JJ
VP left-to-right VBZ VBD VBP VB MD VP
PP left-to-right IN TO
X  right-to-left H
default left-to-right
""")


def yields(tree):
    """Per-NodeId set of 1-based terminal indices dominated by the node."""
    spans = terminal_spans(tree)
    return {nid: frozenset(range(s + 1, e + 1)) for nid, (s, e) in spans.items()}


EXCLUDE_EMPTY = "empty"
EXCLUDE_NON_SINGLETON = "non_singleton"


def induce_gold_heads(pair: AlignedPair):
    """Dependency-induced heads via span-head candidates.

    For an internal node v, the candidates are the terminals in v's yield
    whose governor lies outside that yield.  A singleton candidate set
    fixes the head child (the child dominating that terminal); otherwise
    the node is excluded with reason "empty" or "non_singleton".
    """
    tree = pair.tree
    g = pair.dep.governor
    nodes, kids = node_table(tree)
    node_yield = yields(tree)
    choice = {}
    excluded = []
    for nid, node in enumerate(nodes):
        if node.is_preterminal:
            continue
        y = node_yield[nid]
        cands = {i for i in y if g[i - 1] not in y}
        if len(cands) != 1:
            excluded.append((nid, EXCLUDE_EMPTY if not cands else EXCLUDE_NON_SINGLETON))
            continue
        tok = next(iter(cands))
        owners = [pos for pos, cid in enumerate(kids[nid]) if tok in node_yield[cid]]
        assert len(owners) == 1, "terminal %d dominated by %d children" % (tok, len(owners))
        choice[nid] = owners[0]
    return HeadAssignment(choice), excluded


def rule_heads(tree: Tree, table: HeadRuleTable):
    """Total assignment: every internal node gets a head via the table."""
    nodes, _ = node_table(tree)
    choice = {}
    for nid, node in enumerate(nodes):
        if node.is_preterminal:
            continue
        choice[nid] = table.find_head(node.label, [c.label for c in node.children])
    return HeadAssignment(choice)


def load_predictions(corpus: Corpus, text):
    """Decode "tree_index TAB node_index TAB head_position" lines into one
    HeadAssignment per tree.  Nodes absent from the file stay uncovered.
    """
    tables = [node_table(t) for t in corpus]
    choices = [{} for _ in corpus]
    for lineno, raw in enumerate(text.split("\n"), start=1):
        line = raw.strip()
        if not line:
            continue
        parts = line.split("\t")
        if len(parts) < 3:
            raise HeadError("line %d: expected 3 tab-separated fields" % lineno)
        try:
            ti, ni, hp = int(parts[0]), int(parts[1]), int(parts[2])
        except ValueError:
            raise HeadError("line %d: non-integer field" % lineno)
        if not 0 <= ti < len(corpus):
            raise HeadError("line %d: tree index %d out of range" % (lineno, ti))
        nodes, kids = tables[ti]
        if not 0 <= ni < len(nodes):
            raise HeadError("line %d: node index %d out of range" % (lineno, ni))
        if nodes[ni].is_preterminal:
            raise HeadError("line %d: node %d is a preterminal" % (lineno, ni))
        if not 0 <= hp < len(kids[ni]):
            raise HeadError("line %d: head position %d out of range for %d children"
                            % (lineno, hp, len(kids[ni])))
        if ni in choices[ti]:
            raise HeadError("line %d: duplicate entry for tree %d node %d"
                            % (lineno, ti, ni))
        choices[ti][ni] = hp
    return [HeadAssignment(c) for c in choices]


def write_predictions(assignments):
    out = []
    for ti, assignment in enumerate(assignments):
        for ni in sorted(assignment.choice):
            out.append("%d\t%d\t%d" % (ti, ni, assignment.choice[ni]))
    return "\n".join(out) + ("\n" if out else "")


@dataclass(frozen=True)
class HeadInstance:
    parent_label: str
    child_labels: tuple
    gold_head: int

    def __post_init__(self):
        if not 0 <= self.gold_head < len(self.child_labels):
            raise HeadError("gold head %d out of range" % self.gold_head)


def export_instances(pairs, label_map=None):
    """One (tree_index, node_id, HeadInstance) per inducible internal node,
    in tree order and preorder; excluded nodes are skipped.  Labels go
    through label_map (a transfer.LabelMap) when given.
    """
    records = []
    for ti, pair in enumerate(pairs):
        assignment, _ = induce_gold_heads(pair)
        nodes, _ = node_table(pair.tree)
        for ni in sorted(assignment.choice):
            node = nodes[ni]
            parent = node.label
            childs = [c.label for c in node.children]
            if label_map is not None:
                parent = label_map.map_phrase(parent)
                childs = [label_map.map_phrase(c.label) if not c.is_preterminal
                          else label_map.map_pos(c.label) for c in node.children]
            records.append((ti, ni, HeadInstance(parent, tuple(childs),
                                                 assignment.choice[ni])))
    return records


def write_instances(records):
    out = []
    for ti, ni, inst in records:
        out.append("%d\t%d\t%s\t%s\t%d"
                   % (ti, ni, inst.parent_label, " ".join(inst.child_labels),
                      inst.gold_head))
    return "\n".join(out) + ("\n" if out else "")


def head_accuracy(predicted: HeadAssignment, gold: HeadAssignment):
    """(accuracy, counted) over the gold coverage; gold nodes missing from
    the prediction count as wrong.  Empty gold coverage is vacuously 1.0.
    """
    counted = len(gold.choice)
    if counted == 0:
        log.warning("head_accuracy: empty gold coverage, reporting vacuous 1.0")
        return 1.0, 0
    matches = sum(1 for ni, pos in gold.choice.items() if predicted.get(ni) == pos)
    return matches / counted, counted


def corpus_head_accuracy(predicted, gold):
    """Micro-averaged accuracy over per-tree assignment lists."""
    matches = 0
    counted = 0
    for p, g in zip(predicted, gold):
        counted += len(g.choice)
        matches += sum(1 for ni, pos in g.choice.items() if p.get(ni) == pos)
    if counted == 0:
        log.warning("corpus_head_accuracy: empty gold coverage, reporting vacuous 1.0")
        return 1.0, 0
    return matches / counted, counted
