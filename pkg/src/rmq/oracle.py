"""Exhaustive-search reference decoder and code sanity checks.

Enumerates all q**(m+1) codewords outright, so it is exact by construction
and usable as ground truth against the fast decoder, but only for parameter
sizes below the enumeration cap.
"""

from __future__ import annotations

import numpy as np

from .codec import CodeParams, as_received, encode, to_polyphase
from .decoder import DecodeResult

__all__ = [
    "DEFAULT_ENUMERATION_CAP",
    "codebook",
    "brute_force_decode",
    "brute_force_decode_batch",
    "top_two_correlations",
    "min_distance_check",
]

DEFAULT_ENUMERATION_CAP = 1 << 20

_codebook_cache: dict[tuple[int, int], tuple[np.ndarray, np.ndarray, np.ndarray]] = {}


def _check_cap(params: CodeParams, cap: int) -> int:
    count = params.q ** (params.m + 1)
    if count > cap:
        raise ValueError(
            f"enumeration cap exceeded: q**(m+1) = {count} > {cap}")
    return count


def codebook(params: CodeParams, cap: int = DEFAULT_ENUMERATION_CAP):
    """All codewords of RM_q(1, m) in lexicographic info-vector order.

    Returns (U, C, X): info vectors (K, m+1), Z_q codewords (K, n) and their
    polyphase images (K, n), K = q**(m+1).  Arrays are cached and read-only.
    """
    _check_cap(params, cap)
    key = (params.q, params.m)
    hit = _codebook_cache.get(key)
    if hit is None:
        q, k = params.q, params.m + 1
        grids = np.indices((q,) * k).reshape(k, -1).T  # lexicographic order
        U = np.ascontiguousarray(grids, np.int64)
        C = encode(params, U)
        X = to_polyphase(params, C)
        for a in (U, C, X):
            a.flags.writeable = False
        hit = (U, C, X)
        _codebook_cache[key] = hit
    return hit


def brute_force_decode(params: CodeParams, y,
                       cap: int = DEFAULT_ENUMERATION_CAP) -> DecodeResult:
    """Exact ML decode by scanning the whole code.

    Ties are broken toward the lexicographically smallest info vector.
    """
    yv = as_received(params, y)
    if yv.ndim != 1:
        raise ValueError(f"brute_force_decode takes a single received vector, "
                         f"got shape {yv.shape}")
    U, C, X = codebook(params, cap)
    corr = (X.conj() @ yv).real
    b = int(np.argmax(corr))  # first max = lexicographically smallest u
    return DecodeResult(codeword=C[b].copy(), info=U[b].copy(),
                        correlation=float(corr[b]))


def brute_force_decode_batch(params: CodeParams, Y,
                             cap: int = DEFAULT_ENUMERATION_CAP):
    """Exhaustive ML decode of a batch: returns (U_hat, corr)."""
    Ya = as_received(params, Y)
    if Ya.ndim == 1:
        Ya = Ya[None, :]
    U, C, X = codebook(params, cap)
    best = np.empty(Ya.shape[0], np.int64)
    corr = np.empty(Ya.shape[0], np.float64)
    # chunk the (B, K) correlation matrix to bound memory
    step = max(1, (1 << 22) // max(1, X.shape[0]))
    Xc = X.conj().T
    for lo in range(0, Ya.shape[0], step):
        block = (Ya[lo:lo + step] @ Xc).real
        idx = np.argmax(block, axis=1)
        best[lo:lo + step] = idx
        corr[lo:lo + step] = np.take_along_axis(block, idx[:, None], axis=1)[:, 0]
    return U[best], corr


def top_two_correlations(params: CodeParams, y,
                         cap: int = DEFAULT_ENUMERATION_CAP) -> tuple[float, float]:
    """Largest and second-largest correlation over the whole code.

    The gap between them certifies whether the ML codeword is unique.
    """
    yv = as_received(params, y)
    U, C, X = codebook(params, cap)
    corr = (X.conj() @ yv).real
    two = np.partition(corr, corr.size - 2)[-2:]
    return float(two[1]), float(two[0])


def min_distance_check(params: CodeParams, cap: int = DEFAULT_ENUMERATION_CAP,
                       block: int = 2048) -> float:
    """Max cross-correlation Re{x1 . x2^H} over distinct codeword pairs.

    Strictly below n for a sane code (equal-energy words are distinct).
    """
    U, C, X = codebook(params, cap)
    K = X.shape[0]
    Xc = X.conj().T
    worst = -np.inf
    for lo in range(0, K, block):
        g = (X[lo:lo + block] @ Xc).real
        # mask the diagonal (self-correlations are exactly n)
        for r in range(g.shape[0]):
            g[r, lo + r] = -np.inf
        worst = max(worst, float(g.max()))
    return worst
