"""Dependency annotation: CoNLL-style reading and terminal-level alignment
with constituency trees.
"""

from __future__ import annotations

from dataclasses import dataclass

from .trees import Corpus


class DepError(ValueError):
    pass


@dataclass(frozen=True)
class DepGraph:
    """A single-rooted dependency tree over one sentence.

    governor[i] is the 1-based index of token i+1's head; 0 = artificial root.
    """

    tokens: tuple  # of (form, pos)
    governor: tuple  # of int

    @property
    def forms(self):
        return [f for f, _ in self.tokens]

    def __len__(self):
        return len(self.tokens)


@dataclass(frozen=True)
class AlignedPair:
    tree: object
    dep: DepGraph


def _validate(tokens, governor, sent_index):
    n = len(tokens)
    roots = [i for i, g in enumerate(governor) if g == 0]
    if len(roots) != 1:
        raise DepError("sentence %d: expected exactly one root, found %d"
                       % (sent_index, len(roots)))
    for i, g in enumerate(governor):
        if not 0 <= g <= n:
            raise DepError("sentence %d: HEAD %d out of range 1..%d"
                           % (sent_index, g, n))
        if g == i + 1:
            raise DepError("sentence %d: token %d governs itself" % (sent_index, i + 1))
    # acyclicity: walking governors from any token must reach the root
    for start in range(1, n + 1):
        seen = set()
        cur = start
        while cur != 0:
            if cur in seen:
                raise DepError("sentence %d: governor cycle through token %d"
                               % (sent_index, cur))
            seen.add(cur)
            cur = governor[cur - 1]


def parse_conll(text, id_col=0, form_col=1, pos_col=3, head_col=6):
    """Parse blank-line separated CoNLL-style sentences into DepGraphs.

    Column indices default to CoNLL-X (ID, FORM, CPOSTAG, HEAD); other
    columns are ignored.
    """
    graphs = []
    tokens = []
    governor = []
    needed = max(id_col, form_col, pos_col, head_col) + 1
    for lineno, line in enumerate(text.split("\n"), start=1):
        line = line.rstrip("\n")
        if not line.strip():
            if tokens:
                _validate(tokens, governor, len(graphs))
                graphs.append(DepGraph(tuple(tokens), tuple(governor)))
                tokens = []
                governor = []
            continue
        fields = line.split("\t")
        if len(fields) < needed:
            raise DepError("line %d: expected at least %d tab-separated fields, got %d"
                           % (lineno, needed, len(fields)))
        try:
            head = int(fields[head_col])
        except ValueError:
            raise DepError("line %d: non-integer HEAD %r" % (lineno, fields[head_col]))
        tokens.append((fields[form_col], fields[pos_col]))
        governor.append(head)
    if tokens:
        _validate(tokens, governor, len(graphs))
        graphs.append(DepGraph(tuple(tokens), tuple(governor)))
    return graphs


def write_conll(graphs, id_col=0, form_col=1, pos_col=3, head_col=6):
    """Serializer for test fixtures; inverse of parse_conll on the four columns."""
    width = max(id_col, form_col, pos_col, head_col) + 1
    out = []
    for g in graphs:
        for i, ((form, pos), head) in enumerate(zip(g.tokens, g.governor), start=1):
            row = ["_"] * width
            row[id_col] = str(i)
            row[form_col] = form
            row[pos_col] = pos
            row[head_col] = str(head)
            out.append("\t".join(row))
        out.append("")
    return "\n".join(out) + ("\n" if out else "")


def align(corpus: Corpus, deps):
    """Pair trees with dependency graphs positionally, keeping only pairs
    whose terminal form sequences are identical.

    Returns (pairs, rejected) where rejected holds (index, reason) for
    every dropped sentence; indices partition the input.
    """
    if len(corpus) != len(deps):
        raise DepError("corpus has %d trees but %d dependency graphs given"
                       % (len(corpus), len(deps)))
    pairs = []
    rejected = []
    for i, (tree, dep) in enumerate(zip(corpus, deps)):
        words = tree.leaves()
        forms = dep.forms
        if words == forms:
            pairs.append(AlignedPair(tree, dep))
            continue
        diverge = next((j for j, (a, b) in enumerate(zip(words, forms)) if a != b),
                       min(len(words), len(forms)))
        rejected.append((i, "token %d mismatch" % (diverge + 1)))
    return pairs, rejected
