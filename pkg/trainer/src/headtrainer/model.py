"""Unlexicalized head selector: label embeddings, a small Transformer
encoder over the parent-plus-children sequence, and an MLP scoring each
child position.  Selection is argmax over valid positions; ties break to
the lowest index (torch argmax returns the first maximum).
"""

from __future__ import annotations

import torch
from torch import nn

NEG_INF = -1e9


class HeadSelector(nn.Module):
    def __init__(self, vocab_size, dim=64, heads=4, layers=2, hidden=128,
                 max_len=128, dropout=0.1):
        super().__init__()
        self.hparams = dict(vocab_size=vocab_size, dim=dim, heads=heads,
                            layers=layers, hidden=hidden, max_len=max_len,
                            dropout=dropout)
        self.embed = nn.Embedding(vocab_size, dim, padding_idx=0)
        self.pos_embed = nn.Embedding(max_len, dim)
        layer = nn.TransformerEncoderLayer(
            d_model=dim, nhead=heads, dim_feedforward=hidden,
            dropout=dropout, batch_first=True)
        self.encoder = nn.TransformerEncoder(layer, num_layers=layers)
        self.scorer = nn.Sequential(
            nn.Linear(dim, hidden), nn.ReLU(), nn.Linear(hidden, 1))

    def forward(self, ids, mask):
        """ids [B, L] with parent at position 0; mask [B, L-1] over child
        positions.  Returns logits [B, L-1] with invalid positions at -inf.
        """
        b, length = ids.shape
        if length > self.hparams["max_len"]:
            raise ValueError("sequence length %d exceeds max_len %d"
                             % (length, self.hparams["max_len"]))
        positions = torch.arange(length, device=ids.device).unsqueeze(0)
        x = self.embed(ids) + self.pos_embed(positions)
        pad_mask = torch.cat(
            [torch.zeros(b, 1, dtype=torch.bool, device=ids.device), ~mask], dim=1)
        enc = self.encoder(x, src_key_padding_mask=pad_mask)
        logits = self.scorer(enc[:, 1:, :]).squeeze(-1)
        return logits.masked_fill(~mask, NEG_INF)

    def predict(self, ids, mask):
        with torch.no_grad():
            return self.forward(ids, mask).argmax(dim=1)


def save_checkpoint(path, model, vocab):
    torch.save({"hparams": model.hparams, "itos": vocab.itos,
                "state_dict": model.state_dict()}, path)


def load_checkpoint(path):
    from .data import Vocab

    blob = torch.load(path, map_location="cpu", weights_only=True)
    model = HeadSelector(**blob["hparams"])
    model.load_state_dict(blob["state_dict"])
    model.eval()
    vocab = Vocab.__new__(Vocab)
    vocab.itos = list(blob["itos"])
    vocab.stoi = {s: i for i, s in enumerate(vocab.itos)}
    return model, vocab
