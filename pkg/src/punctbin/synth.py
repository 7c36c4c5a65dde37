"""Seeded synthetic corpora: random constituency trees with punctuation
preterminals plus dependency graphs derived from a label-deterministic
head function, so that dependency-induced heads reproduce that function
exactly and supervised head selection has a known ceiling.
"""

from __future__ import annotations

import random

from .deps import DepGraph
from .heads import HeadAssignment
from .trees import Corpus, internal, node_table, preterminal

PHRASE_LABELS = ["S", "NP", "VP", "PP", "X"]
LEX_TAGS = ["H", "NN", "JJ", "VBZ", "DT", "IN"]
PUNCT_TAGS = [",", ".", "``", "''", ":"]
# words identical to the tag for punctuation; -LRB- style forms stay opaque
PUNCT_WORDS = {",": ",", ".": ".", "``": "``", "''": "''", ":": ":"}


def synth_head(parent_label, child_labels):
    """Deterministic head rule: rightmost child labeled H, else the
    leftmost child not tagged as punctuation, else the leftmost child.
    """
    for i in range(len(child_labels) - 1, -1, -1):
        if child_labels[i] == "H":
            return i
    for i, lab in enumerate(child_labels):
        if lab not in PUNCT_WORDS:
            return i
    return 0


def random_tree(rng, max_depth=6, max_branch=4, punct_prob=0.3, leaf_prob=0.35):
    """One random tree with at least one non-punctuation terminal."""
    counter = [0]

    def leaf():
        if rng.random() < punct_prob:
            tag = rng.choice(PUNCT_TAGS)
            return preterminal(tag, PUNCT_WORDS[tag])
        counter[0] += 1
        return preterminal(rng.choice(LEX_TAGS), "w%d" % counter[0])

    def node(depth):
        if depth >= max_depth or (depth > 1 and rng.random() < leaf_prob):
            return leaf()
        k = rng.randint(1, max_branch)
        return internal(rng.choice(PHRASE_LABELS), [node(depth + 1) for _ in range(k)])

    while True:
        t = node(0)
        if t.is_preterminal:
            t = internal(rng.choice(PHRASE_LABELS), [t])
        # require a non-punctuation anchor so the sentence has a lexical root
        if any(pt.label not in PUNCT_WORDS for pt in t.preterminals()):
            return t


def deterministic_heads(tree, head_fn=synth_head):
    """Total HeadAssignment from a label-deterministic head function."""
    nodes, _ = node_table(tree)
    choice = {}
    for nid, node in enumerate(nodes):
        if node.is_preterminal:
            continue
        choice[nid] = head_fn(node.label, [c.label for c in node.children])
    return HeadAssignment(choice)


def derive_deps(tree, heads: HeadAssignment):
    """Dependency graph by head percolation: the lexical head of every
    non-head child is governed by the lexical head of the head child, and
    the sentence's lexical head by the artificial root.
    """
    preterms = tree.preterminals()
    n = len(preterms)
    governor = [0] * n
    next_tok = [0]

    def walk(node, nid):
        # returns (lexical head token, next node id); tokens are 1-based
        if node.is_preterminal:
            next_tok[0] += 1
            return next_tok[0], nid + 1
        h = heads.choice[nid]
        cid = nid + 1
        child_heads = []
        for c in node.children:
            tok, cid = walk(c, cid)
            child_heads.append(tok)
        for i, tok in enumerate(child_heads):
            if i != h:
                governor[tok - 1] = child_heads[h]
        return child_heads[h], cid

    root_tok, _ = walk(tree, 0)
    governor[root_tok - 1] = 0
    tokens = tuple((pt.word, pt.label) for pt in preterms)
    return DepGraph(tokens, tuple(governor))


def generate(n_trees, seed, max_depth=6, max_branch=4, punct_prob=0.3,
             head_fn=synth_head):
    """(Corpus, dep graphs, per-tree head assignments), all seeded."""
    rng = random.Random(seed)
    trees = []
    deps = []
    assignments = []
    for _ in range(n_trees):
        t = random_tree(rng, max_depth=max_depth, max_branch=max_branch,
                        punct_prob=punct_prob)
        h = deterministic_heads(t, head_fn)
        trees.append(t)
        deps.append(derive_deps(t, h))
        assignments.append(h)
    return Corpus(tuple(trees), "synth:%d" % seed), deps, assignments


def random_head_assignment(tree, rng):
    """Uniformly random total assignment, for round-trip stress tests."""
    nodes, _ = node_table(tree)
    choice = {}
    for nid, node in enumerate(nodes):
        if node.is_preterminal:
            continue
        choice[nid] = rng.randrange(len(node.children))
    return HeadAssignment(choice)
