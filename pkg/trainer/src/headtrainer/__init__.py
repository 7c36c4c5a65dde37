"""Neural head-child selector trained on exported instance TSV files."""

from .data import (DataError, Instance, Vocab, make_batch, read_instances,
                   write_predictions)
from .model import HeadSelector, load_checkpoint, save_checkpoint
from .train import accuracy, predict, set_seed, train

__all__ = [
    "DataError", "Instance", "Vocab", "make_batch", "read_instances",
    "write_predictions", "HeadSelector", "load_checkpoint", "save_checkpoint",
    "accuracy", "predict", "set_seed", "train",
]
