from collections import Counter

import pytest

from annular_tangles.relations import RuleId, relation_corpus


@pytest.fixture(scope="module")
def corpus():
    return relation_corpus(8)


def test_every_family_is_instantiated(corpus):
    seen = Counter(r.rule_id for r in corpus)
    assert set(seen) == set(RuleId)


def test_instances_respect_size_bound(corpus):
    for r in corpus:
        assert max(r.lhs.sizes() + r.rhs.sizes()) <= 8
        assert (r.lhs.source_size, r.lhs.target_size) == (r.rhs.source_size, r.rhs.target_size)


def test_corpus_grows_with_size():
    assert len(relation_corpus(4)) < len(relation_corpus(6))


def test_reversed_swaps_sides(corpus):
    r = corpus[0]
    assert r.reversed().lhs == r.rhs and r.reversed().rhs == r.lhs
