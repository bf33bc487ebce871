"""First-order Reed-Muller codes over Z_q and their q-PSK image.

RM_q(1, m) is the length-n = 2**m code over the integers mod q generated by

    G_m = | G_{m-1}  G_{m-1} |      with   G_1 = | 1 0 |
          | 0 ... 0  1 ... 1 |                   | 0 1 |

so a message u = (u_0, ..., u_m) in Z_q^(m+1) encodes to c = u.G_m mod q,
and equivalently by the concatenation identity

    u.G_m = ( u'.G_{m-1} | u'.G_{m-1} + u_m * 1 )  mod q,   u' = (u_0..u_{m-1}).

The code has exactly q**(m+1) distinct codewords.  A codeword maps onto the
unit circle symbol-wise via s -> xi**s with xi = exp(2j*pi/q), giving an
equal-energy polyphase word with squared norm n.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

import numpy as np

__all__ = [
    "CodeParams",
    "generator_matrix",
    "encode",
    "encode_recursive",
    "to_polyphase",
    "roots_of_unity",
    "inverse_roots",
    "as_info_vector",
    "as_codeword",
    "as_received",
]


@dataclass(frozen=True)
class CodeParams:
    """Parameters of RM_q(1, m): alphabet Z_q (q >= 2) and order m >= 1."""

    q: int
    m: int

    def __post_init__(self) -> None:
        if not isinstance(self.q, (int, np.integer)) or isinstance(self.q, bool):
            raise ValueError(f"q must be an integer, got {self.q!r}")
        if not isinstance(self.m, (int, np.integer)) or isinstance(self.m, bool):
            raise ValueError(f"m must be an integer, got {self.m!r}")
        if self.q < 2:
            raise ValueError(f"q must be at least 2, got {self.q}")
        if self.m < 1:
            raise ValueError(f"m must be at least 1, got {self.m}")

    @property
    def n(self) -> int:
        """Block length 2**m."""
        return 1 << self.m

    @property
    def k(self) -> int:
        """Number of information symbols, m + 1."""
        return self.m + 1

    @property
    def h(self) -> int | None:
        """Exponent with q = 2**h, or None when q is not a power of two."""
        if self.q & (self.q - 1) == 0:
            return self.q.bit_length() - 1
        return None


@lru_cache(maxsize=None)
def _generator_matrix_cached(m: int) -> np.ndarray:
    g = np.eye(2, dtype=np.int64)
    for k in range(2, m + 1):
        half = 1 << (k - 1)
        top = np.hstack([g, g])
        last = np.concatenate([np.zeros(half, np.int64), np.ones(half, np.int64)])
        g = np.vstack([top, last])
    g.flags.writeable = False
    return g


def generator_matrix(m: int) -> np.ndarray:
    """(m+1) x 2**m generator matrix of RM_q(1, m) (entries 0/1, read-only)."""
    if not isinstance(m, (int, np.integer)) or isinstance(m, bool) or m < 1:
        raise ValueError(f"m must be an integer >= 1, got {m!r}")
    return _generator_matrix_cached(int(m))


@lru_cache(maxsize=None)
def _roots_cached(q: int) -> np.ndarray:
    w = np.exp(2j * np.pi * np.arange(q) / q)
    w[0] = 1.0
    if q % 4 == 0:
        w[q // 4] = 1j
    if q % 2 == 0:
        # Exact half-turn antisymmetry: rotating by q/2 is a pure sign flip.
        half = q // 2
        w[half:] = -w[:half]
    w.flags.writeable = False
    return w


def roots_of_unity(q: int) -> np.ndarray:
    """The q-PSK constellation exp(2j*pi*k/q), k = 0..q-1 (read-only).

    Entries on the axes are exact (1, 1j, -1, -1j) and, for even q, the
    second half of the table is the exact negation of the first half.
    """
    if not isinstance(q, (int, np.integer)) or isinstance(q, bool) or q < 2:
        raise ValueError(f"q must be an integer >= 2, got {q!r}")
    return _roots_cached(int(q))


@lru_cache(maxsize=None)
def _inverse_roots_cached(q: int) -> np.ndarray:
    w = _roots_cached(q).conj()
    w.flags.writeable = False
    return w


def inverse_roots(q: int) -> np.ndarray:
    """xi**(-k) for k = 0..q-1, i.e. the conjugate constellation (read-only)."""
    if not isinstance(q, (int, np.integer)) or isinstance(q, bool) or q < 2:
        raise ValueError(f"q must be an integer >= 2, got {q!r}")
    return _inverse_roots_cached(int(q))


def _check_symbols(params: CodeParams, arr: np.ndarray, length: int, what: str) -> np.ndarray:
    a = np.asarray(arr)
    if a.ndim == 0 or a.shape[-1] != length:
        raise ValueError(
            f"{what} must have {length} symbols along the last axis, got shape {a.shape}"
        )
    if not np.issubdtype(a.dtype, np.integer):
        if np.issubdtype(a.dtype, np.floating) and np.all(a == np.floor(a)):
            a = a.astype(np.int64)
        else:
            raise ValueError(f"{what} symbols must be integers")
    a = a.astype(np.int64, copy=False)
    if a.size and (a.min() < 0 or a.max() >= params.q):
        raise ValueError(f"{what} symbols must lie in [0, {params.q})")
    return a


def as_info_vector(params: CodeParams, u) -> np.ndarray:
    """Validate an information vector: m+1 symbols in [0, q)."""
    return _check_symbols(params, u, params.m + 1, "info vector")


def as_codeword(params: CodeParams, c) -> np.ndarray:
    """Validate a codeword-shaped symbol vector: 2**m symbols in [0, q)."""
    return _check_symbols(params, c, params.n, "codeword")


def as_received(params: CodeParams, y) -> np.ndarray:
    """Validate a received vector: 2**m finite complex samples."""
    a = np.asarray(y, dtype=np.complex128)
    if a.ndim == 0 or a.shape[-1] != params.n:
        raise ValueError(
            f"received vector must have {params.n} samples along the last axis, "
            f"got shape {a.shape}"
        )
    if not (np.all(np.isfinite(a.real)) and np.all(np.isfinite(a.imag))):
        raise ValueError("received vector contains non-finite samples")
    return a


def encode(params: CodeParams, u) -> np.ndarray:
    """Encode info symbols u (shape (..., m+1)) to codewords (shape (..., n)).

    c = u.G_m mod q, computed against the materialized generator matrix.
    """
    a = _check_symbols(params, u, params.m + 1, "info vector")
    g = generator_matrix(params.m)
    return (a @ g) % params.q


def encode_recursive(params: CodeParams, u) -> np.ndarray:
    """Encode via the concatenation identity; agrees with encode() exactly."""
    a = _check_symbols(params, u, params.m + 1, "info vector")
    q = params.q
    word = a[..., :2] % q
    for j in range(2, params.m + 1):
        word = np.concatenate([word, (word + a[..., j : j + 1]) % q], axis=-1)
    return word


def to_polyphase(params: CodeParams, c) -> np.ndarray:
    """Map codeword symbols to the unit circle: s -> exp(2j*pi*s/q)."""
    a = _check_symbols(params, c, params.n, "codeword")
    return roots_of_unity(params.q)[a]
