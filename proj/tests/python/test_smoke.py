"""Smoke tests for the aphgen Python bindings."""

import json

import pytest

import aphgen


def test_tokenize_and_split():
    assert aphgen.tokenize("The um cat is stuck.") == ["the", "um", "cat", "is", "stuck"]
    sentences = aphgen.split_sentences("But the ladder fell. They called.")
    assert sentences == [["but", "the", "ladder", "fell"], ["they", "called"]]


def test_score_transcript():
    score = aphgen.score_transcript("The um cat is stuck yup up tree.")
    assert score["word_count"] == 8
    assert score["ciu_count"] == 6
    assert score["ciu_percentage"] == pytest.approx(75.0)


def test_profile_transcript():
    profile = aphgen.profile_transcript("cat cat dog", trials=10, seed=1)
    assert profile["ttr"] == pytest.approx(2 / 3)
    assert profile["ndw"] == pytest.approx(2.0)
    assert profile["words"] == 3
    assert profile["avg_len"] == pytest.approx(3.0)


def test_generate_corpus_is_deterministic():
    a = aphgen.generate_corpus(per_severity=5, seed=7)
    b = aphgen.generate_corpus(per_severity=5, seed=7)
    assert a == b
    assert len(a) == 20
    severities = {r["severity"] for r in a}
    assert severities == {"mild", "moderate", "severe", "very_severe"}
    rec = a[0]
    assert rec["method"] == "procedural"
    assert rec["model"] is None
    assert isinstance(rec["seed"], int)
    assert rec["word_count"] > 0
    assert 0.0 <= rec["ciu_percentage"] <= 100.0

    c = aphgen.generate_corpus(per_severity=5, seed=8)
    assert c != a


def test_jsonl_round_trip_and_split(tmp_path):
    records = aphgen.generate_corpus(per_severity=30, seed=3)
    corpus = tmp_path / "corpus.jsonl"
    aphgen.write_jsonl(json.dumps(records), str(corpus))

    lines = corpus.read_text().splitlines()
    assert len(lines) == 120
    first = json.loads(lines[0])
    assert list(first) == [
        "id", "method", "model", "severity", "template_id", "seed",
        "transcript", "word_count", "ciu_count", "ciu_percentage", "created_at",
    ]

    sizes = aphgen.split_jsonl(str(corpus), str(tmp_path / "corpus"), 0.8, 0.1, 0.1, 1)
    assert sizes == (96, 12, 12)
    train = (tmp_path / "corpus.train.jsonl").read_text().splitlines()
    assert len(train) == 96
