"""Decoding unions of cosets of RM_q(1, m).

A supercode is the union of M cosets (code + r_i) mod q.  Each coset is
searched by derotating the received word sample-wise, y'_k = y_k * xi**(-r_k),
and running the fast subcode decoder; derotation makes the coset search an
ordinary subcode decode because

    Re{ y' . w^H } = Re{ y . (w + r)^H_polyphase }

for every subcode word w (rotations are unitary symbol-wise).  The coset with
the best correlation wins (ties to the smallest coset index), and the
reported codeword is the full coset word (encode(info) + r) mod q.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from . import backend as _backend
from .codec import CodeParams, as_codeword, as_received, encode, inverse_roots
from .complexity import OpCounts
from .decoder import DecodeResult, ml_decode_instrumented

__all__ = ["CosetCode", "derotate", "supercode_decode",
           "supercode_decode_instrumented", "load_coset_file"]


@dataclass(frozen=True)
class CosetCode:
    """A union of cosets of RM_q(1, m), given by M representative words."""

    params: CodeParams
    representatives: np.ndarray = field(repr=False)

    def __post_init__(self) -> None:
        reps = np.asarray(self.representatives)
        if reps.ndim == 1:
            reps = reps[None, :]
        if reps.ndim != 2 or reps.shape[0] < 1:
            raise ValueError("representatives must be a nonempty (M, n) array")
        reps = np.vstack([as_codeword(self.params, r) for r in reps])
        reps.flags.writeable = False
        object.__setattr__(self, "representatives", reps)

    @property
    def size(self) -> int:
        return self.representatives.shape[0]


def derotate(params: CodeParams, y, rep) -> np.ndarray:
    """Remove a representative from a received word: y_k * xi**(-r_k)."""
    yv = as_received(params, y)
    r = as_codeword(params, rep)
    return yv * inverse_roots(params.q)[r]


def _decode_cosets(code: CosetCode, y):
    yv = as_received(code.params, y)
    if yv.ndim != 1:
        raise ValueError(f"supercode_decode takes a single received vector, "
                         f"got shape {yv.shape}")
    rot = inverse_roots(code.params.q)[code.representatives]  # (M, n)
    U, corr = _backend.decode_batch(yv[None, :] * rot, code.params.q)
    j = int(np.argmax(corr))  # first max = smallest coset index
    info = U[j]
    full = (encode(code.params, info) + code.representatives[j]) % code.params.q
    return j, DecodeResult(codeword=full, info=info, correlation=float(corr[j]))


def supercode_decode(code: CosetCode, y) -> tuple[int, DecodeResult]:
    """ML decode over the coset union.

    Returns (coset_index, result); result.codeword is the full coset word
    (encode(result.info) + representative) mod q and result.correlation is
    Re{y . to_polyphase(result.codeword)^H}.
    """
    return _decode_cosets(code, y)


def supercode_decode_instrumented(code: CosetCode, y):
    """Coset-union decode plus operation counts: M subcode decodes plus the
    M derotations, whose products are free where xi**(-r_k) is 1, 1j, -1 or
    -1j.  Requires q = 2**h."""
    params = code.params
    if params.h is None:
        raise ValueError(
            f"operation counting requires q to be a power of two, got q={params.q}")
    j, result = _decode_cosets(code, y)
    _, per_decode = ml_decode_instrumented(params, y)
    reps = code.representatives
    nontrivial = int(np.count_nonzero((4 * reps) % params.q))
    counts = OpCounts(code.size * per_decode.complex_adds,
                      code.size * per_decode.complex_mults + nontrivial)
    return j, result, counts


def load_coset_file(path, params: CodeParams) -> CosetCode:
    """Read coset representatives: one word per line, comma-separated
    decimal symbols in [0, q), each of length 2**m."""
    reps = []
    with open(path, "r", encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, 1):
            line = line.strip()
            if not line:
                continue
            try:
                symbols = [int(tok) for tok in line.split(",")]
            except ValueError as exc:
                raise ValueError(f"{path}:{lineno}: malformed symbol: {exc}") from None
            try:
                reps.append(as_codeword(params, symbols))
            except ValueError as exc:
                raise ValueError(f"{path}:{lineno}: {exc}") from None
    if not reps:
        raise ValueError(f"{path}: no coset representatives found")
    return CosetCode(params, np.vstack(reps))
