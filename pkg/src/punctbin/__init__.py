"""punctbin: punctuation-aware head-driven treebank binarization,
dependency-induced head extraction, exact debinarization, and
punctuation-sensitive labeled-bracket evaluation.
"""

from .binarize import (BinarizeError, CTB_INVENTORY, EMPTY_INVENTORY,
                       PTB_INVENTORY, PunctInventory, binarize, debinarize,
                       inventory, parse_inventory)
from .compare import binary_bracket_f1, spine_identity, spine_records
from .deps import AlignedPair, DepError, DepGraph, align, parse_conll, write_conll
from .evaluate import (DEFAULT_MARK_FORMS, EvalReport, MODE_EXCLUDE,
                       MODE_INCLUDE, punct_conditioned, score, spans)
from .heads import (HeadAssignment, HeadError, HeadInstance, HeadRuleTable,
                    TOY_RULE_TABLE, corpus_head_accuracy, export_instances,
                    head_accuracy, induce_gold_heads, load_predictions,
                    parse_rule_table, rule_heads, write_instances,
                    write_predictions)
from .transfer import (IDENTITY_MAP, LabelMap, apply, apply_corpus,
                       parse_label_map, transfer_heads)
from .trees import (Corpus, Tree, TreeParseError, children_of, internal,
                    node_table, parse_trees, preterminal, read_corpus,
                    terminal_spans, write_corpus, write_tree)

__version__ = "0.1.0"
