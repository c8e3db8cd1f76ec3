"""Structural clustering of labeled graph datasets."""

from ._struclus import (
    Database,
    IoError,
    cluster,
    fowlkes_mallows,
    generate,
    is_subgraph,
    mcs_size,
    mine,
    nvi,
    purity,
)

__all__ = [
    "Database",
    "IoError",
    "cluster",
    "evaluate",
    "fowlkes_mallows",
    "generate",
    "is_subgraph",
    "mcs_size",
    "mine",
    "nvi",
    "purity",
]


def evaluate(clusters, truth):
    """NVI, Fowlkes-Mallows and purity of `clusters` against `truth`."""
    return {
        "nvi": nvi(clusters, truth),
        "fm": fowlkes_mallows(clusters, truth),
        "purity": purity(clusters, truth),
    }
