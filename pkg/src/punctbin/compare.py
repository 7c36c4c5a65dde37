"""Structural comparison of two binary targets built from the same
original tree: unlabeled bracketing F1 over all internal nodes (including
intermediates) and exact spine identity over the original >=3-child
constituents.
"""

from __future__ import annotations

from collections import Counter

from .binarize import debinarize, is_intermediate


class CompareError(ValueError):
    pass


def _unlabeled_spans(tree):
    result = Counter()

    def walk(node, start):
        if node.is_preterminal:
            return start + 1
        pos = start
        for c in node.children:
            pos = walk(c, pos)
        result[(start, pos)] += 1
        return pos

    walk(tree, 0)
    return result


def binary_bracket_f1(a, b):
    """Unlabeled span-multiset F1 between two binary trees, as a fraction."""
    if a.leaves() != b.leaves():
        raise CompareError("terminal yields differ")
    sa = _unlabeled_spans(a)
    sb = _unlabeled_spans(b)
    matched = sum((sa & sb).values())
    ta, tb = sum(sa.values()), sum(sb.values())
    if ta == 0 or tb == 0:
        return 1.0 if ta == tb else 0.0
    p = matched / ta
    r = matched / tb
    return 2 * p * r / (p + r) if p + r > 0 else 0.0


def spine_records(orig, btree):
    """Per original NodeId, the canonical shape of the binary structure
    introduced for that constituent, with original children collapsed to
    #i placeholders.
    """
    records = {}

    def walk(onode, oid, bnode):
        if onode.is_preterminal:
            return oid + 1
        frontier = []

        def shape(b):
            if not b.is_preterminal and is_intermediate(b.label):
                return "(" + " ".join(shape(c) for c in b.children) + ")"
            frontier.append(b)
            return "#%d" % (len(frontier) - 1)

        records[oid] = "(" + " ".join(shape(c) for c in bnode.children) + ")"
        if len(frontier) != len(onode.children):
            raise CompareError(
                "binary tree does not debinarize onto the original at node %d" % oid)
        cid = oid + 1
        for oc, bc in zip(onode.children, frontier):
            cid = walk(oc, cid, bc)
        return cid

    walk(orig, 0, btree)
    return records


def spine_identity(orig, a, b):
    """(fraction, counted) of original internal nodes with >=3 children
    whose introduced binary structure is identical in a and b.  Vacuously
    (1.0, 0) when the original tree is already binary.
    """
    if debinarize(a) != orig or debinarize(b) != orig:
        raise CompareError("both binary trees must debinarize to the original tree")
    ra = spine_records(orig, a)
    rb = spine_records(orig, b)
    eligible = [nid for nid, node in enumerate(orig.nodes())
                if not node.is_preterminal and len(node.children) >= 3]
    if not eligible:
        return 1.0, 0
    same = sum(1 for nid in eligible if ra[nid] == rb[nid])
    return same / len(eligible), len(eligible)
