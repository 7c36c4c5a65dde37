"""Labeled-bracket precision/recall/F1 in three regimes: punctuation
excluded from the index line (evalb convention), punctuation retained
(jp-evalb convention), and punctuation-conditioned per-mark scoring with
a macro average over marks attested in gold.
"""

from __future__ import annotations

import json
from collections import Counter
from dataclasses import dataclass, field

from .binarize import PunctInventory
from .trees import Corpus, ROOT_WRAPPER_LABEL

MODE_EXCLUDE = "exclude_punct"
MODE_INCLUDE = "include_punct"

# Surface mark forms used for conditioning when they are not boundary tags
# (currency and list markers carry ordinary POS tags in PTB).
DEFAULT_MARK_FORMS = frozenset([
    ",", "$", ".", "``", "''", "'", "-RRB-", "-LRB-", ";", ":",
    "-LCB-", "-RCB-", "#", "...", "`", "?", "-", "=", "!",
    "，", "、", "。", "“", "”", "（", "）", "《", "》", "；", "—", "：", "——", "！",
])


class EvalError(ValueError):
    pass


@dataclass
class MarkScore:
    f1: float
    gold_count: int
    precision: float = 0.0
    recall: float = 0.0
    matched: int = 0
    pred_count: int = 0


@dataclass
class EvalReport:
    precision: float = 0.0
    recall: float = 0.0
    f1: float = 0.0
    matched: int = 0
    gold_total: int = 0
    pred_total: int = 0
    per_mark: dict = field(default_factory=dict)
    macro_avg: float | None = None
    skipped: int = 0

    def to_json_lines(self):
        lines = []
        for mark in sorted(self.per_mark, key=lambda m: -self.per_mark[m].gold_count):
            s = self.per_mark[mark]
            lines.append(json.dumps(
                {"record": "mark", "mark": mark, "f1": round(s.f1, 4),
                 "precision": round(s.precision, 4), "recall": round(s.recall, 4),
                 "matched": s.matched, "gold_count": s.gold_count,
                 "pred_count": s.pred_count},
                ensure_ascii=False))
        summary = {"record": "summary", "precision": round(self.precision, 4),
                   "recall": round(self.recall, 4), "f1": round(self.f1, 4),
                   "matched": self.matched, "gold_total": self.gold_total,
                   "pred_total": self.pred_total, "skipped": self.skipped}
        if self.macro_avg is not None:
            summary["macro_avg"] = round(self.macro_avg, 4)
        lines.append(json.dumps(summary, ensure_ascii=False))
        return "\n".join(lines) + "\n"

    def to_table(self):
        rows = []
        if self.per_mark:
            rows.append("%-8s %10s %10s %10s %8s" % ("mark", "P", "R", "F1", "gold"))
            for mark in sorted(self.per_mark, key=lambda m: -self.per_mark[m].gold_count):
                s = self.per_mark[mark]
                rows.append("%-8s %10.2f %10.2f %10.2f %8d"
                            % (mark, s.precision, s.recall, s.f1, s.gold_count))
            if self.macro_avg is not None:
                rows.append("%-8s %10s %10s %10.2f" % ("MACRO", "", "", self.macro_avg))
        rows.append("overall  P=%.2f R=%.2f F1=%.2f (matched %d, gold %d, pred %d, skipped %d)"
                    % (self.precision, self.recall, self.f1,
                       self.matched, self.gold_total, self.pred_total, self.skipped))
        return "\n".join(rows) + "\n"


def _prf(matched, gold_total, pred_total):
    p = 100.0 * matched / pred_total if pred_total else 0.0
    r = 100.0 * matched / gold_total if gold_total else 0.0
    f = 2 * p * r / (p + r) if p + r > 0 else 0.0
    return p, r, f


def _terminal_line(tree, mode, punct):
    """(surviving forms, old->new index map) for the chosen mode."""
    keep = {}
    forms = []
    for i, pt in enumerate(tree.preterminals()):
        if mode == MODE_EXCLUDE and pt.label in punct:
            continue
        keep[i] = len(forms)
        forms.append(pt.word)
    return forms, keep


def spans(tree, mode, punct: PunctInventory):
    """Multiset of (label, start, end) over internal non-root-wrapper nodes.

    In exclude_punct mode, terminal positions with inventory preterminals
    are deleted before indexing; constituents whose surviving yield is
    empty are dropped.
    """
    _, keep = _terminal_line(tree, mode, punct)
    result = Counter()

    def walk(node, start):
        if node.is_preterminal:
            return start + 1
        pos = start
        for c in node.children:
            pos = walk(c, pos)
        surviving = [keep[i] for i in range(start, pos) if i in keep]
        if surviving and node.label != ROOT_WRAPPER_LABEL:
            result[(node.label, surviving[0], surviving[-1] + 1)] += 1
        return pos

    walk(tree, 0)
    return result


def score(gold: Corpus, pred: Corpus, mode, punct: PunctInventory):
    """Corpus-level labeled bracket P/R/F1 in the chosen mode.

    Sentence pairs whose surviving terminal sequences disagree are skipped
    and counted in the report rather than aborting the run.
    """
    if len(gold) != len(pred):
        raise EvalError("gold has %d trees, pred has %d" % (len(gold), len(pred)))
    report = EvalReport()
    for g, p in zip(gold, pred):
        gf, _ = _terminal_line(g, mode, punct)
        pf, _ = _terminal_line(p, mode, punct)
        if gf != pf:
            report.skipped += 1
            continue
        gs = spans(g, mode, punct)
        ps = spans(p, mode, punct)
        report.matched += sum((gs & ps).values())
        report.gold_total += sum(gs.values())
        report.pred_total += sum(ps.values())
    report.precision, report.recall, report.f1 = _prf(
        report.matched, report.gold_total, report.pred_total)
    return report


def _conditioning_forms(gold, punct, mark_forms):
    """Word forms to condition on: forms under inventory preterminals plus
    forms in the configured mark list, restricted to those attested in gold.
    """
    found = set()
    for tree in gold:
        for pt in tree.preterminals():
            if pt.label in punct or pt.word in mark_forms:
                found.add(pt.word)
    return found


def punct_conditioned(gold: Corpus, pred: Corpus, punct: PunctInventory,
                      mark_forms=DEFAULT_MARK_FORMS):
    """Per-mark F1 over constituents whose yield contains the mark, plus
    the unweighted macro average over marks with at least one gold
    constituent.  Scoring retains punctuation (jp-evalb regime).
    """
    if len(gold) != len(pred):
        raise EvalError("gold has %d trees, pred has %d" % (len(gold), len(pred)))
    marks = _conditioning_forms(gold, punct, mark_forms)
    tallies = {m: [0, 0, 0] for m in marks}  # matched, gold, pred
    report = EvalReport()
    for g, p in zip(gold, pred):
        gf, _ = _terminal_line(g, MODE_INCLUDE, punct)
        pf, _ = _terminal_line(p, MODE_INCLUDE, punct)
        if gf != pf:
            report.skipped += 1
            continue
        gs = spans(g, MODE_INCLUDE, punct)
        ps = spans(p, MODE_INCLUDE, punct)
        report.matched += sum((gs & ps).values())
        report.gold_total += sum(gs.values())
        report.pred_total += sum(ps.values())
        present = marks & set(gf)
        for m in present:
            gm = Counter({s: c for s, c in gs.items() if m in gf[s[1]:s[2]]})
            pm = Counter({s: c for s, c in ps.items() if m in pf[s[1]:s[2]]})
            t = tallies[m]
            t[0] += sum((gm & pm).values())
            t[1] += sum(gm.values())
            t[2] += sum(pm.values())
    report.precision, report.recall, report.f1 = _prf(
        report.matched, report.gold_total, report.pred_total)
    attested = []
    for m, (matched, gtot, ptot) in tallies.items():
        mp, mr, mf = _prf(matched, gtot, ptot)
        report.per_mark[m] = MarkScore(f1=mf, gold_count=gtot, precision=mp,
                                       recall=mr, matched=matched, pred_count=ptot)
        if gtot >= 1:
            attested.append(mf)
    report.macro_avg = sum(attested) / len(attested) if attested else 0.0
    return report
