"""Shared generators for randomized tests."""

import random

from punctbin import Corpus, internal, preterminal
from punctbin.synth import (PUNCT_TAGS, PUNCT_WORDS, derive_deps,
                            deterministic_heads, random_tree,
                            random_head_assignment)

PHRASES = ["S", "NP", "VP", "PP", "X", "ADJP"]
TAGS = ["NN", "DT", "VBZ", "JJ", "IN", "H"]


def random_plain_tree(rng, max_depth=5, max_branch=6, punct_prob=0.3,
                      leaf_prob=0.4):
    """Random tree (no synthetic head constraints), depth-bounded."""
    counter = [0]

    def leaf():
        if rng.random() < punct_prob:
            tag = rng.choice(PUNCT_TAGS)
            return preterminal(tag, PUNCT_WORDS[tag])
        counter[0] += 1
        return preterminal(rng.choice(TAGS), "w%d" % counter[0])

    def node(depth):
        if depth >= max_depth or (depth > 0 and rng.random() < leaf_prob):
            return leaf()
        k = rng.randint(1, max_branch)
        return internal(rng.choice(PHRASES), [node(depth + 1) for _ in range(k)])

    t = node(0)
    if t.word is not None:
        t = internal(rng.choice(PHRASES), [t])
    return t


def random_corpus(n, seed, **kwargs):
    rng = random.Random(seed)
    return Corpus(tuple(random_plain_tree(rng, **kwargs) for _ in range(n)))


def random_aligned_pairs(n, seed, **kwargs):
    """Aligned (tree, deps) pairs whose governor functions come from a
    deterministic head rule, so induced heads are well defined everywhere.
    """
    from punctbin.deps import AlignedPair

    rng = random.Random(seed)
    pairs = []
    for _ in range(n):
        t = random_tree(rng, **kwargs)
        h = deterministic_heads(t)
        pairs.append(AlignedPair(t, derive_deps(t, h)))
    return pairs


def random_messy_governor(tree, rng):
    """Arbitrary (still tree-shaped) governor function, independent of any
    head notion; exercises empty/non-singleton exclusions.
    """
    n = len(tree.leaves())
    order = list(range(1, n + 1))
    rng.shuffle(order)
    governor = [0] * n
    # random rooted tree: each token attaches to an earlier token in a
    # random order, the first to the artificial root
    for pos, tok in enumerate(order):
        governor[tok - 1] = 0 if pos == 0 else order[rng.randrange(pos)]
    return governor
