"""Synthetic Cat Rescue picture-description corpus toolkit."""

from ._aphgen import (
    generate_corpus,
    profile_transcript,
    score_transcript,
    split_jsonl,
    split_sentences,
    tokenize,
    write_jsonl,
)

__all__ = [
    "generate_corpus",
    "profile_transcript",
    "score_transcript",
    "split_jsonl",
    "split_sentences",
    "tokenize",
    "write_jsonl",
]
