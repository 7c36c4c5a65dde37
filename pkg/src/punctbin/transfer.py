"""Deterministic label normalization for cross-treebank head transfer:
a phrase-label map, a POS map, and an optional suffix-stripping pattern
applied before lookup.  Structure is never changed, so head positions
predicted on normalized trees remain valid in the original trees.
"""

from __future__ import annotations

import re
from collections import Counter
from dataclasses import dataclass, field

from .heads import load_predictions
from .trees import Corpus, Tree, internal, preterminal


@dataclass(frozen=True)
class LabelMap:
    phrase_map: dict = field(default_factory=dict)
    pos_map: dict = field(default_factory=dict)
    strip_pattern: str | None = None

    def _strip(self, label):
        if self.strip_pattern is None:
            return label
        stripped = re.sub(self.strip_pattern, "", label)
        # never strip a label down to nothing
        return stripped if stripped else label

    def map_phrase(self, label):
        s = self._strip(label)
        return self.phrase_map.get(s, s)

    def map_pos(self, label):
        s = self._strip(label)
        return self.pos_map.get(s, s)


IDENTITY_MAP = LabelMap()


def parse_label_map(text):
    """Config lines: "ph SRC TGT", "pos SRC TGT", "strip REGEX"."""
    phrase = {}
    pos = {}
    strip = None
    for lineno, raw in enumerate(text.split("\n"), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if parts[0] == "strip" and len(parts) == 2:
            strip = parts[1]
        elif parts[0] == "ph" and len(parts) == 3:
            phrase[parts[1]] = parts[2]
        elif parts[0] == "pos" and len(parts) == 3:
            pos[parts[1]] = parts[2]
        else:
            raise ValueError("line %d: expected 'ph SRC TGT', 'pos SRC TGT' or 'strip REGEX'"
                             % lineno)
    return LabelMap(phrase, pos, strip)


def apply(tree: Tree, label_map: LabelMap, warnings: Counter | None = None):
    """Normalize every label; words and structure untouched.  Labels that
    pass through unmapped after stripping are tallied in warnings.
    """
    def note(original, mapped, table):
        if warnings is not None and label_map._strip(original) not in table:
            warnings[label_map._strip(original)] += 1
        return mapped

    def walk(n):
        if n.is_preterminal:
            return preterminal(note(n.label, label_map.map_pos(n.label),
                                    label_map.pos_map), n.word)
        return internal(note(n.label, label_map.map_phrase(n.label),
                             label_map.phrase_map),
                        [walk(c) for c in n.children])

    return walk(tree)


def apply_corpus(corpus: Corpus, label_map: LabelMap):
    warnings = Counter()
    trees = tuple(apply(t, label_map, warnings) for t in corpus)
    return Corpus(trees, corpus.source_name), warnings


def transfer_heads(target: Corpus, label_map: LabelMap, prediction_text):
    """Interpret predictions made on the normalized corpus directly in the
    original target trees; valid because normalization preserves structure.
    """
    return load_predictions(target, prediction_text)
