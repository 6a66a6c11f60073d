"""Distance, k-distance, approximate distance and level-ancestor labels for trees."""
from __future__ import annotations

from .approx import ApproxScheme, approx_query, build_approx
from .bitio import BitString, MonotoneSeq
from .exact import BaselineScheme, ExactScheme, baseline_query, build_baseline, build_exact, exact_query
from .kdist import KDistScheme, build_k, k_query
from .labelset import LabelSet, deserialize, serialize
from .levelanc import LevelAncScheme, build_la, level_anc, parent
from .tree import RootedTree, normalize, parse_tree

__all__ = [
    "ApproxScheme", "approx_query", "build_approx", "BitString", "MonotoneSeq",
    "BaselineScheme", "ExactScheme", "baseline_query", "build_baseline", "build_exact",
    "exact_query", "KDistScheme", "build_k", "k_query", "LabelSet", "deserialize",
    "serialize", "LevelAncScheme", "build_la", "level_anc", "parent", "RootedTree",
    "normalize", "parse_tree",
]
