"""headtrain command line: train a head selector on exported instances,
predict head positions for new instances.

Exit codes: 0 success, 1 validation error, 2 I/O error.
"""

from __future__ import annotations

import argparse
import sys

from .data import DataError, read_instances, write_predictions
from .model import load_checkpoint, save_checkpoint
from .train import accuracy, predict, train


def _read(path):
    if path == "-":
        return sys.stdin.read()
    with open(path, encoding="utf-8") as fh:
        return fh.read()


def _write(path, text):
    if path == "-":
        sys.stdout.write(text)
        return
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(text)


def cmd_train(args):
    instances = read_instances(_read(args.instances))
    labeled = [i for i in instances if i.gold_head >= 0]
    if not labeled:
        raise DataError("no labeled instances to train on")
    held_out = None
    if args.dev:
        held_out = [i for i in read_instances(_read(args.dev)) if i.gold_head >= 0]

    def log(epoch, loss, acc):
        line = "epoch %d loss %.4f" % (epoch + 1, loss)
        if acc is not None:
            line += " dev-acc %.4f" % acc
        print(line, file=sys.stderr)

    model, vocab = train(labeled, epochs=args.epochs, batch_size=args.batch_size,
                         lr=args.lr, seed=args.seed, dim=args.dim,
                         layers=args.layers, log=log, held_out=held_out)
    save_checkpoint(args.out, model, vocab)
    print("saved model to %s" % args.out, file=sys.stderr)
    return 0


def cmd_predict(args):
    model, vocab = load_checkpoint(args.model)
    instances = read_instances(_read(args.instances))
    positions = predict(model, vocab, instances)
    _write(args.out, write_predictions(instances, positions))
    return 0


def cmd_eval(args):
    model, vocab = load_checkpoint(args.model)
    instances = [i for i in read_instances(_read(args.instances))
                 if i.gold_head >= 0]
    if not instances:
        raise DataError("no labeled instances to evaluate")
    acc = accuracy(model, vocab, instances)
    print("accuracy %.4f over %d instances" % (acc, len(instances)))
    return 0


def build_parser():
    p = argparse.ArgumentParser(prog="headtrain")
    sub = p.add_subparsers(dest="command", required=True)

    t = sub.add_parser("train", help="fit a head selector on instance TSV")
    t.add_argument("--instances", required=True)
    t.add_argument("--dev", help="held-out instances, reported per epoch")
    t.add_argument("--out", required=True, help="checkpoint path")
    t.add_argument("--seed", type=int, default=0)
    t.add_argument("--epochs", type=int, default=10)
    t.add_argument("--batch-size", type=int, default=256)
    t.add_argument("--lr", type=float, default=1e-3)
    t.add_argument("--dim", type=int, default=64)
    t.add_argument("--layers", type=int, default=2)
    t.set_defaults(func=cmd_train)

    q = sub.add_parser("predict", help="emit tree/node/head prediction TSV")
    q.add_argument("--model", required=True)
    q.add_argument("--instances", required=True)
    q.add_argument("--out", default="-")
    q.set_defaults(func=cmd_predict)

    e = sub.add_parser("eval", help="accuracy against gold column")
    e.add_argument("--model", required=True)
    e.add_argument("--instances", required=True)
    e.set_defaults(func=cmd_eval)
    return p


def main(argv=None):
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (DataError, ValueError) as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 1
    except OSError as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 2


def entry():
    raise SystemExit(main())
