"""Training and prediction loops."""

from __future__ import annotations

import random

import torch
from torch import nn

from .data import Vocab, make_batch
from .model import HeadSelector


def set_seed(seed):
    random.seed(seed)
    torch.manual_seed(seed)
    torch.set_num_threads(1)  # keeps runs bit-reproducible on CPU


def train(instances, epochs=10, batch_size=256, lr=1e-3, seed=0,
          dim=64, heads=4, layers=2, hidden=128, dropout=0.1,
          log=None, held_out=None):
    """Train a HeadSelector on labeled instances; returns (model, vocab).

    held_out, when given, is evaluated after each epoch and reported via
    log(epoch, loss, heldout_accuracy).
    """
    set_seed(seed)
    vocab = Vocab.from_instances(instances)
    model = HeadSelector(len(vocab), dim=dim, heads=heads, layers=layers,
                         hidden=hidden, dropout=dropout)
    opt = torch.optim.Adam(model.parameters(), lr=lr)
    loss_fn = nn.CrossEntropyLoss()
    order = list(range(len(instances)))
    rng = random.Random(seed)
    for epoch in range(epochs):
        model.train()
        rng.shuffle(order)
        total = 0.0
        batches = 0
        for start in range(0, len(order), batch_size):
            chunk = [instances[i] for i in order[start:start + batch_size]]
            ids, mask, gold = make_batch(chunk, vocab)
            logits = model(ids, mask)
            loss = loss_fn(logits, gold)
            opt.zero_grad()
            loss.backward()
            opt.step()
            total += loss.item()
            batches += 1
        if log is not None:
            acc = accuracy(model, vocab, held_out) if held_out else None
            log(epoch, total / max(batches, 1), acc)
    model.eval()
    return model, vocab


def predict(model, vocab, instances, batch_size=512):
    """Predicted head positions, one per instance, in input order."""
    model.eval()
    out = []
    for start in range(0, len(instances), batch_size):
        chunk = instances[start:start + batch_size]
        ids, mask, _ = make_batch(chunk, vocab)
        out.extend(model.predict(ids, mask).tolist())
    return out


def accuracy(model, vocab, instances):
    if not instances:
        return 1.0
    preds = predict(model, vocab, instances)
    hits = sum(1 for p, inst in zip(preds, instances) if p == inst.gold_head)
    return hits / len(instances)
