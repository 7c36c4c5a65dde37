"""Instance file I/O and batching.

Instance rows are "tree_index TAB node_index TAB parent TAB child labels
(space-joined) TAB gold_head"; predictions are emitted as
"tree_index TAB node_index TAB predicted_position".
"""

from __future__ import annotations

from dataclasses import dataclass

import torch

PAD = "<pad>"
UNK = "<unk>"


class DataError(ValueError):
    pass


@dataclass(frozen=True)
class Instance:
    tree_index: int
    node_index: int
    parent: str
    children: tuple
    gold_head: int  # -1 when unlabeled


def read_instances(text):
    instances = []
    for lineno, raw in enumerate(text.split("\n"), start=1):
        line = raw.rstrip("\n")
        if not line.strip():
            continue
        fields = line.split("\t")
        if len(fields) != 5:
            raise DataError("line %d: expected 5 tab-separated fields, got %d"
                            % (lineno, len(fields)))
        try:
            ti, ni = int(fields[0]), int(fields[1])
            gold = -1 if fields[4] == "-" else int(fields[4])
        except ValueError:
            raise DataError("line %d: non-integer index field" % lineno)
        children = tuple(fields[3].split(" "))
        if not children or children == ("",):
            raise DataError("line %d: empty child sequence" % lineno)
        if gold >= len(children):
            raise DataError("line %d: gold head %d out of range for %d children"
                            % (lineno, gold, len(children)))
        instances.append(Instance(ti, ni, fields[2], children, gold))
    return instances


def write_predictions(instances, positions):
    out = []
    for inst, pos in zip(instances, positions):
        out.append("%d\t%d\t%d" % (inst.tree_index, inst.node_index, pos))
    return "\n".join(out) + ("\n" if out else "")


class Vocab:
    def __init__(self, labels):
        self.itos = [PAD, UNK] + sorted(set(labels))
        self.stoi = {s: i for i, s in enumerate(self.itos)}

    def __len__(self):
        return len(self.itos)

    def encode(self, label):
        return self.stoi.get(label, self.stoi[UNK])

    @classmethod
    def from_instances(cls, instances):
        labels = []
        for inst in instances:
            labels.append(inst.parent)
            labels.extend(inst.children)
        return cls(labels)


def make_batch(instances, vocab, device="cpu"):
    """Pad to the longest sequence; sequence = [parent] + children.

    Returns (token ids [B, L], child mask [B, L-1], gold indices [B]).
    Mask is over child positions only; padding is never scored.
    """
    width = max(len(inst.children) for inst in instances)
    ids = torch.zeros(len(instances), width + 1, dtype=torch.long)
    mask = torch.zeros(len(instances), width, dtype=torch.bool)
    gold = torch.full((len(instances),), -1, dtype=torch.long)
    for b, inst in enumerate(instances):
        ids[b, 0] = vocab.encode(inst.parent)
        for j, lab in enumerate(inst.children):
            ids[b, j + 1] = vocab.encode(lab)
            mask[b, j] = True
        gold[b] = inst.gold_head
    return ids.to(device), mask.to(device), gold.to(device)
