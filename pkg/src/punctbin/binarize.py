"""Punctuation-aware head-driven binarization and its exact inverse.

Binarization runs in two phases per node: boundary punctuation at the
edges is peeled into nested @X layers (right-boundary marks group with
the material to their left, left-boundary marks dually), then the
remaining child sequence is binarized head-outward around the designated
head child.  Debinarization splices every @-labeled node back into its
parent, restoring the original tree exactly.
"""

from __future__ import annotations

from dataclasses import dataclass

from .heads import HeadAssignment
from .trees import Tree, internal

INTERMEDIATE_PREFIX = "@"


class BinarizeError(ValueError):
    pass


@dataclass(frozen=True)
class PunctInventory:
    """Finite punctuation inventory keyed by preterminal label."""

    right_boundary: frozenset
    left_boundary: frozenset

    def __post_init__(self):
        overlap = self.right_boundary & self.left_boundary
        if overlap:
            raise ValueError("labels in both boundary classes: %s" % sorted(overlap))

    def __contains__(self, label):
        return label in self.right_boundary or label in self.left_boundary


def inventory(right=(), left=()):
    return PunctInventory(frozenset(right), frozenset(left))


PTB_INVENTORY = inventory(
    right=[",", ".", ":", "''", "-RRB-", "-RCB-"],
    left=["``", "-LRB-", "-LCB-"],
)

CTB_INVENTORY = inventory(
    right=["，", "、", "。", "”", "）", "》", "；", "：", "！", "？", "—", "——"],
    left=["“", "（", "《"],
)

EMPTY_INVENTORY = inventory()


def parse_inventory(text):
    """Config lines "left <label>" / "right <label>"."""
    left = []
    right = []
    for lineno, raw in enumerate(text.split("\n"), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if len(parts) != 2 or parts[0] not in ("left", "right"):
            raise ValueError("line %d: expected 'left <label>' or 'right <label>'" % lineno)
        (left if parts[0] == "left" else right).append(parts[1])
    return inventory(right=right, left=left)


def is_intermediate(label):
    return label.startswith(INTERMEDIATE_PREFIX)


def binarize(tree, heads: HeadAssignment, punct: PunctInventory, aware=True,
             warnings=None):
    """f_punct(T; H): binary tree with @X intermediates.

    aware=False disables boundary peeling: punctuation participates as an
    ordinary child, reproducing the high-attachment baseline shape.
    warnings, when given, is a list collecting (node_id, message) entries
    for head fallbacks and punctuation-only constituents.
    """
    if warnings is None:
        warnings = []

    def warn(nid, msg):
        warnings.append((nid, msg))

    def rebuild(label, nid, kids, flags):
        k = len(kids)
        if k <= 2:
            return internal(label, kids)
        at_label = INTERMEDIATE_PREFIX + label

        non_punct = [i for i in range(k) if not flags[i]]

        # phase 1: peel boundary punctuation, outermost first
        peels = []
        cl, cr = 0, k
        if aware and len(non_punct) >= 2:
            while cr - cl >= 3:
                if kids[cr - 1].is_preterminal and kids[cr - 1].label in punct.right_boundary:
                    peels.append(("R", cr - 1))
                    cr -= 1
                elif kids[cl].is_preterminal and kids[cl].label in punct.left_boundary:
                    peels.append(("L", cl))
                    cl += 1
                else:
                    break

        core = list(range(cl, cr))
        core_label = at_label if peels else label

        # phase 2: head-outward binarization of the core
        if len(core) == 2:
            built = internal(core_label, [kids[core[0]], kids[core[1]]])
        else:
            h = heads.get(nid)
            if not non_punct:
                warn(nid, "punctuation-only constituent; using leftmost child as anchor")
                h = 0
            elif h is None:
                raise BinarizeError("missing head for node %d (%s, %d children)"
                                    % (nid, label, k))
            elif flags[h]:
                fallback = max((i for i in non_punct if i < h), default=None)
                if fallback is None:
                    fallback = min(i for i in non_punct if i > h)
                warn(nid, "head %d is punctuation; falling back to child %d" % (h, fallback))
                h = fallback
            elif not cl <= h < cr:
                # non-punctuation heads always survive peeling
                raise BinarizeError("head %d for node %d outside core" % (h, nid))
            spine = kids[h]
            left = [i for i in core if i < h]
            right = [i for i in core if i > h]
            ri = 0
            remaining = len(left) + len(right)
            while remaining:
                lab = core_label if remaining == 1 else at_label
                if ri < len(right):
                    spine = internal(lab, [spine, kids[right[ri]]])
                    ri += 1
                else:
                    spine = internal(lab, [kids[left.pop()], spine])
                remaining -= 1
            built = spine

        # re-wrap peeled punctuation, innermost layer first
        for depth, (side, idx) in enumerate(reversed(peels)):
            lab = label if depth == len(peels) - 1 else at_label
            if side == "R":
                built = internal(lab, [built, kids[idx]])
            else:
                built = internal(lab, [kids[idx], built])
        return built

    def walk(node, nid):
        if node.is_preterminal:
            return node, nid + 1
        if is_intermediate(node.label):
            raise BinarizeError("input tree already contains intermediate label %r"
                                % node.label)
        kids = []
        flags = []
        cid = nid + 1
        for c in node.children:
            flags.append(c.is_preterminal and c.label in punct)
            b, cid = walk(c, cid)
            kids.append(b)
        return rebuild(node.label, nid, kids, flags), cid

    result, _ = walk(tree, 0)
    return result


def debinarize(btree):
    """Inverse of binarize: splice @-labeled nodes into their parents."""
    if is_intermediate(btree.label):
        raise BinarizeError("cannot debinarize a tree whose root is intermediate")

    def restore(node):
        if node.is_preterminal:
            return node
        out = []

        def flatten(c):
            if not c.is_preterminal and is_intermediate(c.label):
                for g in c.children:
                    flatten(g)
            else:
                out.append(restore(c))

        for c in node.children:
            flatten(c)
        return internal(node.label, out)

    return restore(btree)
