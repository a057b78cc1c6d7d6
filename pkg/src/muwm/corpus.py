"""Bundled families, matrix file parsing, and the manifest regression.

Matrix files hold whitespace-separated digit strings over {0,1,2}, one per
row, with 2 standing for -1.  The manifest pins every family's order,
weight, and member list so a transcription loss fails loudly instead of
silently shrinking a family.
"""

from __future__ import annotations

import json
import os
from pathlib import Path

import numpy as np

from .wmatrix import MuwmFamily, WeighingMatrix

__all__ = ["parse_matrix", "serialize_matrix", "load_corpus", "corpus_dir", "corpus_manifest"]

ENV_DATA_DIR = "MUWM_DATA_DIR"


def parse_matrix(text: str) -> np.ndarray:
    """Integer matrix from digit-string rows, mapping 2 -> -1.

    The first token's length fixes the order n; the text must then contain
    exactly n tokens of length n.  Tokens may be spread over any number of
    lines.
    """
    tokens = text.split()
    if not tokens:
        raise ValueError("no matrix rows found")
    n = len(tokens[0])
    for t in tokens:
        if not set(t) <= {"0", "1", "2"}:
            raise ValueError(f"malformed row {t!r}: digits must be 0, 1, or 2")
        if len(t) != n:
            raise ValueError(f"row length {len(t)} differs from first row length {n}")
    if len(tokens) != n:
        raise ValueError(f"expected {n} rows of length {n}, got {len(tokens)}")
    a = np.array([[int(ch) for ch in t] for t in tokens], dtype=np.int64)
    a[a == 2] = -1
    return a


def serialize_matrix(matrix) -> str:
    """Digit-string text for a {0, +-1} matrix, -1 written as 2.

    Inverse of parse_matrix: one row per line, trailing newline.
    """
    a = np.asarray(matrix, dtype=np.int64)
    if not np.isin(a, (-1, 0, 1)).all():
        raise ValueError("entries must lie in {0, 1, -1}")
    return "\n".join("".join(str(int(x) % 3) for x in row) for row in a) + "\n"


def corpus_dir() -> Path:
    """Bundled data directory, overridable through MUWM_DATA_DIR."""
    override = os.environ.get(ENV_DATA_DIR)
    if override:
        return Path(override)
    return Path(__file__).parent / "data"


def corpus_manifest() -> dict:
    path = corpus_dir() / "manifest.json"
    return json.loads(path.read_text())


def load_corpus() -> list[MuwmFamily]:
    """All bundled families, each validated against the manifest.

    Raises when a member file is missing, a matrix fails the weighing
    axioms, its order disagrees with the manifest, or a family's size
    disagrees with the member list.
    """
    base = corpus_dir()
    manifest = corpus_manifest()
    families: list[MuwmFamily] = []
    for entry in manifest["families"]:
        members = []
        if entry["size"] != len(entry["members"]):
            raise ValueError(
                f"family {entry['id']}: manifest size {entry['size']} "
                f"!= member count {len(entry['members'])}"
            )
        for name in entry["members"]:
            path = base / f"{name}.txt"
            raw = parse_matrix(path.read_text())
            if raw.shape[0] != entry["order"]:
                raise ValueError(
                    f"{name}: order {raw.shape[0]} != manifest order {entry['order']}"
                )
            members.append(WeighingMatrix.from_array(raw, entry["weight"]))
        families.append(
            MuwmFamily(members=tuple(members), labels=tuple(entry["members"]))
        )
    return families
