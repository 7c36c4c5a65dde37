import random
from collections import Counter

import pytest

from punctbin import (Corpus, EMPTY_INVENTORY, MODE_EXCLUDE, MODE_INCLUDE,
                      PTB_INVENTORY, binarize, debinarize, parse_trees,
                      punct_conditioned, score, spans)
from punctbin.evaluate import EvalError
from punctbin.synth import random_head_assignment
from helpers import random_corpus, random_plain_tree
from oracles import brute_force_spans


def c(*texts):
    return parse_trees("\n".join(texts))


def test_spans_include_punct():
    got = spans(c("(S (NP (DT a) (NN b)) (. .))")[0], MODE_INCLUDE, PTB_INVENTORY)
    assert got == Counter({("S", 0, 3): 1, ("NP", 0, 2): 1})


def test_spans_exclude_punct_reindexes():
    got = spans(c("(S (NP (DT a) (NN b)) (. .))")[0], MODE_EXCLUDE, PTB_INVENTORY)
    assert got == Counter({("S", 0, 2): 1, ("NP", 0, 2): 1})


def test_spans_exclude_drops_empty_yield():
    got = spans(c("(S (X (, ,)) (NN a))")[0], MODE_EXCLUDE, PTB_INVENTORY)
    assert got == Counter({("S", 0, 1): 1})


def test_spans_interior_punct_reindexing():
    t = c("(S (NP (NN a)) (, ,) (VP (VBZ b) (NN c)))")[0]
    got = spans(t, MODE_EXCLUDE, PTB_INVENTORY)
    assert got == Counter({("S", 0, 3): 1, ("NP", 0, 1): 1, ("VP", 1, 3): 1})


def test_spans_top_wrapper_excluded():
    got = spans(c("((S (NN a) (NN b)))")[0], MODE_INCLUDE, PTB_INVENTORY)
    assert got == Counter({("S", 0, 2): 1})


def test_spans_keeps_duplicates():
    t = c("(S (NP (NP (NN a) (NN b))))")[0]
    got = spans(t, MODE_INCLUDE, PTB_INVENTORY)
    assert got[("NP", 0, 2)] == 2


def test_spans_match_brute_force():
    rng = random.Random(17)
    for _ in range(200):
        t = random_plain_tree(rng)
        got = spans(t, MODE_INCLUDE, EMPTY_INVENTORY)
        want = Counter(brute_force_spans(t))
        assert got == want


def test_score_identity_100():
    corpus = c("(S (NP (DT a) (NN b)) (. .))")
    for mode in (MODE_EXCLUDE, MODE_INCLUDE):
        r = score(corpus, corpus, mode, PTB_INVENTORY)
        assert r.precision == r.recall == r.f1 == 100.0


def test_score_half_overlap():
    gold = c("(S (NP (A a) (B b)) (C c))")
    pred = c("(S (A a) (VP (B b) (C c)))")
    r = score(gold, pred, MODE_INCLUDE, PTB_INVENTORY)
    assert (r.matched, r.gold_total, r.pred_total) == (1, 2, 2)
    assert r.precision == pytest.approx(50.0, abs=1e-4)
    assert r.recall == pytest.approx(50.0, abs=1e-4)
    assert r.f1 == pytest.approx(50.0, abs=1e-4)


def test_score_empty_corpora():
    r = score(Corpus(()), Corpus(()), MODE_INCLUDE, PTB_INVENTORY)
    assert r.f1 == 0.0 and r.gold_total == 0 and r.skipped == 0


def test_score_tree_count_mismatch():
    with pytest.raises(EvalError):
        score(c("(S (NN a))"), Corpus(()), MODE_INCLUDE, PTB_INVENTORY)


def test_score_yield_mismatch_skipped_and_counted():
    gold = c("(S (NN a) (NN b))", "(S (NN x))")
    pred = c("(S (NN a) (NN b))", "(S (NN y))")
    r = score(gold, pred, MODE_INCLUDE, PTB_INVENTORY)
    assert r.skipped == 1
    assert r.f1 == 100.0


def test_mode_agreement_without_punctuation():
    corpus = random_corpus(30, seed=5, punct_prob=0.0)
    a = score(corpus, corpus, MODE_EXCLUDE, PTB_INVENTORY)
    b = score(corpus, corpus, MODE_INCLUDE, PTB_INVENTORY)
    assert (a.matched, a.gold_total, a.pred_total) == (b.matched, b.gold_total, b.pred_total)


def test_symmetry_swaps_precision_recall():
    gold = c("(S (NP (A a) (B b)) (C c))")
    pred = c("(S (S (A a) (B b) (C c)))")
    r1 = score(gold, pred, MODE_INCLUDE, PTB_INVENTORY)
    r2 = score(pred, gold, MODE_INCLUDE, PTB_INVENTORY)
    assert r1.precision == pytest.approx(r2.recall)
    assert r1.recall == pytest.approx(r2.precision)
    assert r1.f1 == pytest.approx(r2.f1)


def test_self_score_property_random():
    for seed in range(10):
        corpus = random_corpus(20, seed=seed)
        for mode in (MODE_EXCLUDE, MODE_INCLUDE):
            r = score(corpus, corpus, mode, PTB_INVENTORY)
            if r.gold_total:
                assert r.f1 == pytest.approx(100.0)


def test_debinarize_pipeline_scores_100():
    rng = random.Random(9)
    for _ in range(50):
        t = random_plain_tree(rng)
        heads = random_head_assignment(t, rng)
        back = debinarize(binarize(t, heads, PTB_INVENTORY))
        gold = Corpus((t,))
        pred = Corpus((back,))
        for mode in (MODE_EXCLUDE, MODE_INCLUDE):
            r = score(gold, pred, mode, PTB_INVENTORY)
            if r.gold_total:
                assert r.f1 == pytest.approx(100.0)


def test_punct_conditioned_identity():
    corpus = c("(S (NP (NN a) (NN b)) (, ,) (VP (VBZ v)))")
    r = punct_conditioned(corpus, corpus, PTB_INVENTORY)
    assert r.per_mark[","].f1 == pytest.approx(100.0)
    assert r.macro_avg == pytest.approx(100.0)


def test_punct_conditioned_comma_attachment():
    gold = c("(S (NP (NN a) (NN b)) (, ,) (VP (VBZ v)))")
    pred = c("(S (NP (NN a) (NN b)) (VP (, ,) (VBZ v)))")
    r = punct_conditioned(gold, pred, PTB_INVENTORY)
    # comma-bearing gold spans: S[0,4); pred: S[0,4), VP[2,4) -> P=50 R=100
    m = r.per_mark[","]
    assert m.gold_count == 1
    assert m.precision == pytest.approx(50.0, abs=1e-4)
    assert m.recall == pytest.approx(100.0, abs=1e-4)
    assert m.f1 == pytest.approx(200.0 / 3.0, abs=1e-4)
    assert r.macro_avg == pytest.approx(200.0 / 3.0, abs=1e-4)


def test_mark_absent_in_gold_excluded_from_macro():
    gold = c("(S (NN a) (NN b))")
    pred = c("(S (NP (NN a) (, b)))")
    # pred tags a word as comma but gold has no comma-bearing constituent
    r = punct_conditioned(gold, pred, PTB_INVENTORY)
    # the macro average only pools marks attested in gold
    attested = [s for s in r.per_mark.values() if s.gold_count >= 1]
    assert r.macro_avg == (sum(s.f1 for s in attested) / len(attested) if attested else 0.0)


def test_conditioning_counts_match_brute_force():
    rng = random.Random(31)
    for _ in range(50):
        t = random_plain_tree(rng)
        corpus = Corpus((t,))
        r = punct_conditioned(corpus, corpus, PTB_INVENTORY)
        forms = t.leaves()
        for mark, ms in r.per_mark.items():
            count = 0
            for lab, s, e in brute_force_spans(t):
                if lab != "TOP" and mark in forms[s:e]:
                    count += 1
            assert ms.gold_count == count


def test_conditioning_keys_on_word_form():
    # "$" is not a boundary tag but is a default conditioning mark form
    gold = c("(S (NP ($ $) (CD 3)) (VBZ v))")
    r = punct_conditioned(gold, gold, PTB_INVENTORY)
    assert "$" in r.per_mark
    assert r.per_mark["$"].gold_count == 2  # NP and S both contain "$"


def test_report_serialization():
    corpus = c("(S (NP (NN a) (NN b)) (, ,) (VP (VBZ v)))")
    r = punct_conditioned(corpus, corpus, PTB_INVENTORY)
    jl = r.to_json_lines()
    assert '"record": "summary"' in jl
    assert '"record": "mark"' in jl
    assert r.to_table()
