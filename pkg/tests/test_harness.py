"""Theorem suites and the randomized falsifier."""

import json

from finring import SearchConfig, cyclic, falsify, make_zmod, standard_corpus
from finring.harness import (
    suite_connell,
    suite_group_ring_sunc,
    suite_lemma_4_4,
    suite_matrix_sunc,
    suite_morita,
    suite_periodic,
    suite_theorem_4_5,
)


def test_lemma_4_4_small():
    report = suite_lemma_4_4(30)
    assert report.attempted == 30 and report.ok


def test_theorem_4_5_subset():
    cases = [(2, cyclic(3)), (2, cyclic(2))]
    report = suite_theorem_4_5(cases)
    assert report.attempted == 2 and report.ok


def test_theorem_4_5_cap_skip():
    report = suite_theorem_4_5([(2, cyclic(3))], cap=4)
    assert report.attempted == 0
    assert len(report.skipped) == 1


def test_connell_subset():
    cases = [(2, cyclic(3)), (2, cyclic(2))]
    report = suite_connell(cases)
    # each case contributes the fast-vs-brute check and the
    # regular<=>unit-regular coincidence check
    assert report.attempted == 4 and report.ok


def test_matrix_sunc():
    report = suite_matrix_sunc([make_zmod(2)])
    assert report.attempted == 1 and report.ok


def test_morita_default():
    report = suite_morita()
    assert report.ok and report.attempted == 7


def test_group_ring_sunc_subset():
    report = suite_group_ring_sunc([(make_zmod(2), cyclic(3))])
    assert report.ok


def test_periodic_subset():
    report = suite_periodic([(make_zmod(4), cyclic(2))])
    assert report.ok


def test_standard_corpus_shape():
    corpus = standard_corpus()
    labels = [R.label for R in corpus]
    assert len(labels) == len(set(labels))
    assert all(R.order <= 1296 for R in corpus)
    assert "M(2, Z(2))" in labels and "GR(Z(2), S(3))" in labels


def test_falsify_clean_and_deterministic():
    config = SearchConfig(seed=7, count=15)
    first = falsify(config)
    second = falsify(config)
    assert first.ok
    assert json.dumps(first.to_json(include_timing=False), sort_keys=True) == json.dumps(
        second.to_json(include_timing=False), sort_keys=True
    )


def test_falsify_seed_changes_sequence():
    a = falsify(SearchConfig(seed=1, count=10))
    b = falsify(SearchConfig(seed=2, count=10))
    assert a.attempted == b.attempted == 10
    assert a.ok and b.ok
