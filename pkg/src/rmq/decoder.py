"""Soft-decision maximum-likelihood decoding of RM_q(1, m).

Codewords map to equal-energy polyphase words, so ML decoding of a received
complex vector y is the correlation maximization

    x_hat = argmax_{x in code} Re{ y . x^H },

solved exactly by the recursive split implemented in the kernel modules: each
hypothesis i for the last info symbol folds the word in half via
z_k(i) = y_k + y_{k+n/2} * xi**(-i), the halves are decoded recursively, and
the i whose subproblem correlates best wins (ties to the smallest i).  At
length 2 the generator is the identity, so the two hard-decided symbols are
the info symbols themselves and the correlation is the sum of their
contributions.

ml_decode_instrumented runs the same decode while tallying the arithmetic it
performs under the accounting rules of rmq.complexity; the tallies depend
only on (q, m), never on y, and q must be a power of two.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import backend as _backend
from . import _kernels_numpy
from .codec import CodeParams, as_received, encode
from .complexity import OpCounts

__all__ = [
    "DecodeResult",
    "correlation",
    "hard_decision_symbol",
    "ml_decode",
    "ml_decode_instrumented",
    "decode_batch",
]


@dataclass(frozen=True)
class DecodeResult:
    """A decoded word: Z_q codeword, info symbols, achieved correlation.

    For ml_decode and brute_force_decode, codeword == encode(info) and
    correlation == Re{y . to_polyphase(codeword)^H} (to within float
    round-off).  Coset-union decoding reports the full coset word instead:
    codeword == (encode(info) + representative) mod q.
    """

    codeword: np.ndarray
    info: np.ndarray
    correlation: float


def correlation(y, x) -> float:
    """Re{ y . x^H } for equal-length complex vectors."""
    ya = np.asarray(y, np.complex128)
    xa = np.asarray(x, np.complex128)
    if ya.shape != xa.shape or ya.ndim != 1:
        raise ValueError(f"correlation needs two equal-length 1-D vectors, "
                         f"got shapes {ya.shape} and {xa.shape}")
    return float(np.vdot(xa, ya).real)


def hard_decision_symbol(y_k, q: int, method: str = "auto") -> tuple[int, float]:
    """Closest constellation symbol: argmax_i Re{y_k * xi**(-i)}, ties to
    the smallest i.  Returns (symbol, contribution).

    method "auto" restricts the search to the quadrant of y_k when q = 2**h
    with h > 2 (2**(h-2) + 1 candidates); method "full" scans all q rotations.
    Both give identical results.
    """
    if not isinstance(q, (int, np.integer)) or isinstance(q, bool) or q < 2:
        raise ValueError(f"q must be an integer >= 2, got {q!r}")
    w = np.asarray([y_k], np.complex128)
    if not (np.isfinite(w[0].real) and np.isfinite(w[0].imag)):
        raise ValueError("sample must be finite")
    syms, contribs = _kernels_numpy.hard_decisions(w, int(q), method)
    return int(syms[0]), float(contribs[0])


def ml_decode(params: CodeParams, y, base_method: str = "auto") -> DecodeResult:
    """Exact ML decode of one received vector (any q >= 2).

    base_method selects the hard-decision strategy at the length-2 base
    ("auto" = quadrant-pruned where applicable, "full" = scan all rotations);
    the decoded result is identical either way.
    """
    yv = as_received(params, y)
    if yv.ndim != 1:
        raise ValueError(f"ml_decode takes a single received vector, got shape {yv.shape}")
    U, corr = _backend.decode_batch(yv[None, :], params.q, base_method)
    info = U[0]
    return DecodeResult(codeword=encode(params, info), info=info,
                        correlation=float(corr[0]))


def ml_decode_instrumented(params: CodeParams, y) -> tuple[DecodeResult, OpCounts]:
    """ML decode plus an exact tally of the arithmetic performed.

    Requires q = 2**h (the accounting rules are defined for power-of-two
    alphabets).  The tally depends only on (q, m), not on y, and the decode
    result is identical to ml_decode's.
    """
    if params.h is None:
        raise ValueError(
            f"operation counting requires q to be a power of two, got q={params.q}")
    yv = as_received(params, y)
    if yv.ndim != 1:
        raise ValueError(
            f"ml_decode_instrumented takes a single received vector, got shape {yv.shape}")
    counter = _kernels_numpy.OpCounter()
    U, corr = _kernels_numpy.decode_batch(yv[None, :], params.q, counter, "auto")
    info = U[0]
    result = DecodeResult(codeword=encode(params, info), info=info,
                          correlation=float(corr[0]))
    return result, OpCounts.from_half_units(counter.add_halves, counter.mults)


def decode_batch(params: CodeParams, Y, base_method: str = "auto"):
    """ML decode a batch of received words.

    Y: (B, 2**m) complex.  Returns (U, corr) with U of shape (B, m+1) and
    corr the per-word correlations.
    """
    Ya = as_received(params, Y)
    if Ya.ndim == 1:
        Ya = Ya[None, :]
    if Ya.ndim != 2:
        raise ValueError(f"decode_batch takes a (B, n) array, got shape {Ya.shape}")
    return _backend.decode_batch(Ya, params.q, base_method)
