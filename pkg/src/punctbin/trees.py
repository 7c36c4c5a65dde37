"""Bracketed constituency trees: reading, writing, and traversal.

Trees are immutable after construction.  A node is either internal
(label plus ordered children) or a preterminal (label plus a single
surface word).  Node ids are preorder positions, root = 0.
"""

from __future__ import annotations

from dataclasses import dataclass, field


class TreeParseError(ValueError):
    """Malformed bracketed input; carries 1-based line/column."""

    def __init__(self, message, line, column):
        super().__init__("%s (line %d, column %d)" % (message, line, column))
        self.line = line
        self.column = column


ROOT_WRAPPER_LABEL = "TOP"


@dataclass(frozen=True)
class Tree:
    label: str
    children: tuple = ()
    word: str | None = None

    def __post_init__(self):
        if not self.label:
            raise ValueError("empty label")
        if (self.word is None) == (len(self.children) == 0):
            raise ValueError("node must be internal xor preterminal: %r" % self.label)

    @property
    def is_preterminal(self):
        return self.word is not None

    def leaves(self):
        """Surface tokens, left to right."""
        out = []
        stack = [self]
        while stack:
            n = stack.pop()
            if n.is_preterminal:
                out.append(n.word)
            else:
                stack.extend(reversed(n.children))
        return out

    def preterminals(self):
        out = []
        stack = [self]
        while stack:
            n = stack.pop()
            if n.is_preterminal:
                out.append(n)
            else:
                stack.extend(reversed(n.children))
        return out

    def nodes(self):
        """All nodes in preorder; index in this list is the NodeId."""
        out = []

        def walk(n):
            out.append(n)
            for c in n.children:
                walk(c)

        walk(self)
        return out

    def __str__(self):
        return write_tree(self)


def internal(label, children):
    return Tree(label, tuple(children), None)


def preterminal(label, word):
    return Tree(label, (), word)


@dataclass(frozen=True)
class Corpus:
    trees: tuple
    source_name: str = "<string>"

    def __len__(self):
        return len(self.trees)

    def __iter__(self):
        return iter(self.trees)

    def __getitem__(self, i):
        return self.trees[i]


def node_table(tree):
    """(nodes, child_ids): preorder node list and per-node child NodeIds."""
    nodes = []
    kids = []

    def walk(n):
        i = len(nodes)
        nodes.append(n)
        kids.append([])
        for c in n.children:
            kids[i].append(walk(c))
        return i

    walk(tree)
    return nodes, kids


def children_of(tree, node_id):
    """Preorder ids of the node's children in surface order."""
    nodes, kids = node_table(tree)
    if not 0 <= node_id < len(nodes):
        raise IndexError("node id %d out of range (tree has %d nodes)" % (node_id, len(nodes)))
    return kids[node_id]


def terminal_spans(tree):
    """Per-NodeId (start, end) terminal spans, end exclusive, 0-based."""
    spans = {}

    def walk(n, nid, start):
        if n.is_preterminal:
            spans[nid] = (start, start + 1)
            return nid + 1, start + 1
        cid = nid + 1
        pos = start
        for c in n.children:
            cid, pos = walk(c, cid, pos)
        spans[nid] = (start, pos)
        return cid, pos

    walk(tree, 0, 0)
    return spans


# ---------------------------------------------------------------------------
# Parsing


def _tokenize(text):
    line = 1
    col = 1
    i = 0
    n = len(text)
    while i < n:
        ch = text[i]
        if ch == "\n":
            line += 1
            col = 1
            i += 1
        elif ch.isspace():
            col += 1
            i += 1
        elif ch in "()":
            yield ch, line, col
            col += 1
            i += 1
        else:
            j = i
            while j < n and not text[j].isspace() and text[j] not in "()":
                j += 1
            yield text[i:j], line, col
            col += j - i
            i = j


def parse_trees(text, source_name="<string>"):
    """Parse a sequence of bracketed trees into a Corpus.

    PTB-style outer wrappers "( (S ...) )" get the root label TOP.
    Empty input yields an empty Corpus.
    """
    tokens = list(_tokenize(text))
    trees = []
    pos = 0

    def parse_node(pos, top_level):
        tok, line, col = tokens[pos]
        assert tok == "("
        pos += 1
        if pos >= len(tokens):
            raise TreeParseError("unexpected end of input", *_end(tokens))
        tok, line, col = tokens[pos]
        if tok == ")":
            raise TreeParseError("empty tree", line, col)
        if tok == "(":
            # missing label; legal only as the PTB top-level wrapper
            if not top_level:
                raise TreeParseError("empty label", line, col)
            label = ROOT_WRAPPER_LABEL
        else:
            label = tok
            pos += 1
            if pos >= len(tokens):
                raise TreeParseError("unexpected end of input", *_end(tokens))
            tok, line, col = tokens[pos]
        if tok == "(":
            children = []
            while True:
                if pos >= len(tokens):
                    raise TreeParseError("unbalanced brackets", *_end(tokens))
                tok, line, col = tokens[pos]
                if tok == ")":
                    pos += 1
                    break
                if tok != "(":
                    raise TreeParseError(
                        "word %r mixed with bracketed children" % tok, line, col)
                child, pos = parse_node(pos, False)
                children.append(child)
            if not children:
                raise TreeParseError("node %r has no children" % label, line, col)
            return internal(label, children), pos
        if tok == ")":
            raise TreeParseError("node %r has no children" % label, line, col)
        word = tok
        pos += 1
        if pos >= len(tokens):
            raise TreeParseError("unbalanced brackets", *_end(tokens))
        tok, line, col = tokens[pos]
        if tok != ")":
            raise TreeParseError("multiple words under %r" % label, line, col)
        pos += 1
        return preterminal(label, word), pos

    while pos < len(tokens):
        tok, line, col = tokens[pos]
        if tok != "(":
            raise TreeParseError("expected '('", line, col)
        tree, pos = parse_node(pos, True)
        if tree.is_preterminal:
            raise TreeParseError("top-level preterminal", line, col)
        trees.append(tree)
    return Corpus(tuple(trees), source_name)


def _end(tokens):
    if not tokens:
        return 1, 1
    _, line, col = tokens[-1]
    return line, col + 1


# ---------------------------------------------------------------------------
# Serialization


def write_tree(tree):
    if tree.is_preterminal:
        return "(%s %s)" % (tree.label, tree.word)
    return "(%s %s)" % (tree.label, " ".join(write_tree(c) for c in tree.children))


def _write_pretty(tree, indent):
    pad = "  " * indent
    if tree.is_preterminal:
        return pad + "(%s %s)" % (tree.label, tree.word)
    lines = [pad + "(" + tree.label]
    for c in tree.children:
        lines.append(_write_pretty(c, indent + 1))
    lines[-1] += ")"
    return "\n".join(lines)


def write_corpus(corpus, layout="compact"):
    """Serialize a Corpus; compact = one tree per line."""
    if layout == "compact":
        return "".join(write_tree(t) + "\n" for t in corpus)
    if layout == "pretty":
        return "\n".join(_write_pretty(t, 0) for t in corpus) + ("\n" if len(corpus) else "")
    raise ValueError("unknown layout %r" % layout)


def read_corpus(path):
    with open(path, encoding="utf-8") as f:
        return parse_trees(f.read(), source_name=str(path))
