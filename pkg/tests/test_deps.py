import random

import pytest

from punctbin import DepError, align, parse_conll, parse_trees, write_conll
from helpers import random_messy_governor, random_plain_tree


def rows(*triples):
    """4-column fixture: ID FORM POS HEAD."""
    return "\n".join("%d\t%s\t%s\t%d" % (i + 1, f, p, h)
                     for i, (f, p, h) in enumerate(triples)) + "\n\n"


def parse4(text):
    return parse_conll(text, id_col=0, form_col=1, pos_col=2, head_col=3)


def test_basic_sentence():
    gs = parse4(rows(("the", "DT", 2), ("dog", "NN", 0), ("barks", "VBZ", 2)))
    assert len(gs) == 1
    assert gs[0].governor == (2, 0, 2)
    assert gs[0].forms == ["the", "dog", "barks"]


def test_two_roots_rejected():
    with pytest.raises(DepError, match="root"):
        parse4(rows(("a", "X", 0), ("b", "X", 0)))


def test_cycle_rejected():
    with pytest.raises(DepError, match="cycle"):
        parse4(rows(("a", "X", 2), ("b", "X", 1), ("c", "X", 0)))


def test_self_governing_rejected():
    with pytest.raises(DepError, match="governs itself"):
        parse4(rows(("a", "X", 1), ("b", "X", 0)))


def test_head_out_of_range_rejected():
    with pytest.raises(DepError, match="out of range"):
        parse4(rows(("a", "X", 5), ("b", "X", 0)))


def test_non_integer_head():
    with pytest.raises(DepError, match="non-integer"):
        parse4("1\ta\tX\tq\n")


def test_default_columns_are_conllx():
    line = "1\tdog\tdog\tNN\tNN\t_\t0\troot\t_\t_\n"
    gs = parse_conll(line)
    assert gs[0].tokens == (("dog", "NN"),)
    assert gs[0].governor == (0,)


def test_multiple_sentences():
    text = rows(("a", "X", 0)) + rows(("b", "Y", 2), ("c", "Z", 0))
    gs = parse4(text)
    assert len(gs) == 2
    assert gs[1].governor == (2, 0)


def test_write_conll_roundtrip():
    gs = parse4(rows(("the", "DT", 2), ("dog", "NN", 0)))
    text = write_conll(gs)
    assert parse_conll(text) == gs


def test_random_governors_roundtrip():
    rng = random.Random(3)
    for _ in range(50):
        t = random_plain_tree(rng)
        gov = random_messy_governor(t, rng)
        text = rows(*[(w, "T", gov[i]) for i, w in enumerate(t.leaves())])
        gs = parse4(text)
        assert list(gs[0].governor) == gov


def test_align_retains_matching():
    corpus = parse_trees("(S (DT the) (NN dog) (VBZ barks))")
    gs = parse4(rows(("the", "DT", 2), ("dog", "NN", 0), ("barks", "VBZ", 2)))
    pairs, rejected = align(corpus, gs)
    assert len(pairs) == 1 and rejected == []
    assert pairs[0].tree is corpus[0]


def test_align_rejects_tokenization_mismatch():
    corpus = parse_trees("(S (MD can) (RB not))")
    gs = parse4(rows(("cannot", "MD", 0), ("x", "RB", 1)))
    pairs, rejected = align(corpus, gs)
    assert pairs == []
    assert rejected == [(0, "token 1 mismatch")]


def test_align_reports_first_divergence():
    corpus = parse_trees("(S (A a) (B b) (C c))")
    gs = parse4(rows(("a", "A", 0), ("X", "B", 1), ("c", "C", 1)))
    _, rejected = align(corpus, gs)
    assert rejected == [(0, "token 2 mismatch")]


def test_align_length_mismatch_is_hard_error():
    corpus = parse_trees("(S (A a))\n(S (B b))")
    gs = parse4(rows(("a", "A", 0)))
    with pytest.raises(DepError):
        align(corpus, gs)


def test_align_partitions_indices():
    corpus = parse_trees("(S (A a))\n(S (B b))\n(S (C c))")
    gs = parse4(rows(("a", "A", 0)) + rows(("X", "B", 0)) + rows(("c", "C", 0)))
    pairs, rejected = align(corpus, gs)
    assert len(pairs) == 2
    assert [i for i, _ in rejected] == [1]
