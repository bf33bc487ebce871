"""Pure-numpy batch implementation of the recursive correlation decoder.

A length-2**m problem splits into q half-length subproblems

    z_k(i) = y_k + y_{k + 2**(m-1)} * xi**(-i),     i in Z_q,

one per hypothesis for the last info symbol.  The subproblem achieving the
largest real correlation wins (ties to the smallest i), and the recursion
bottoms out at length-2 problems solved by per-symbol hard decisions.  All
q**d subproblems of a level are processed as one array, so the hot loops are
element-wise numpy operations over large arrays; a batch of received words
just widens the level arrays.

The optional counter tallies the arithmetic the decode actually performs,
under the accounting rules in `rmq.complexity`: products with the roots
1, 1j, -1, -1j are realized as copies / exact axis rotations / sign flips and
are free; half-turn products reuse the first half with a sign flip; q = 2
runs entirely on real parts (real additions, half-weight).
"""

from __future__ import annotations

import numpy as np

from .codec import inverse_roots

__all__ = ["OpCounter", "decode_batch", "hard_decisions"]


class OpCounter:
    """Mutable tally: additions in real-addition halves, complex multiplies."""

    __slots__ = ("add_halves", "mults")

    def __init__(self) -> None:
        self.add_halves = 0
        self.mults = 0


def _is_axis_root(i: int, q: int) -> bool:
    # xi**(-i) in {1, 1j, -1, -1j}
    return (4 * i) % q == 0


def _hard_full(w: np.ndarray, q: int) -> tuple[np.ndarray, np.ndarray]:
    """Hard decisions by scanning all q rotations (first maximum wins)."""
    xi_inv = inverse_roots(q)
    cand = (w[..., None] * xi_inv).real
    sym = np.argmax(cand, axis=-1)
    contrib = np.take_along_axis(cand, sym[..., None], axis=-1)[..., 0]
    return sym.astype(np.int64), contrib


_AXIS_INV = np.array([1.0, -1.0j, -1.0, 1.0j])  # xi**(-quad * q/4), exact


def _hard_quadrant(w: np.ndarray, q: int,
                   counter: OpCounter | None) -> tuple[np.ndarray, np.ndarray]:
    """Quadrant-pruned hard decisions for q = 2**h, h > 2.

    The sign pattern of (Re, Im) picks the quadrant, leaving q/4 + 1
    candidate symbols: the two axis endpoints (free: rotating by an axis
    root is an exact component swap) and q/4 - 1 interior ones (one complex
    multiplication each).  Candidates are compared in codeword-symbol order
    so ties resolve exactly as a full scan would; in quadrant 3 that order
    is i = 0 first, then i = 3q/4 .. q-1.
    """
    xi_inv = inverse_roots(q)
    quarter = q >> 2
    neg_re = w.real < 0.0
    neg_im = w.imag < 0.0
    quad = np.where(neg_im, 3 - neg_re.astype(np.int64), neg_re.astype(np.int64))
    base = quad * quarter

    w_rot = w * _AXIS_INV[quad]
    cand = np.empty(w.shape + (quarter + 1,), np.float64)
    cand[..., 0] = w_rot.real       # Re{w * xi**(-base)}
    cand[..., quarter] = w_rot.imag  # Re{w * xi**(-base - q/4)}
    for t in range(1, quarter):
        cand[..., t] = (w * xi_inv[base + t]).real
        if counter is not None:
            counter.mults += w.size

    win = np.argmax(cand, axis=-1)
    contrib = np.take_along_axis(cand, win[..., None], axis=-1)[..., 0]
    # Quadrant 3 contains symbol 0 (as t = q/4): it must win any tie, since
    # a first-maximum full scan would reach symbol 0 before 3q/4 .. q-1.
    win = np.where((quad == 3) & (cand[..., quarter] >= contrib), quarter, win)
    sym = (base + win) % q
    return sym.astype(np.int64), contrib


def hard_decisions(w: np.ndarray, q: int, method: str = "auto",
                   counter: OpCounter | None = None) -> tuple[np.ndarray, np.ndarray]:
    """Per-sample hard decisions argmax_i Re{w * xi**(-i)} (element-wise).

    Returns (symbols, contributions).  method: "auto" prunes to one quadrant
    when q = 2**h with h > 2; "full" always scans all q rotations.
    """
    if method not in ("auto", "full"):
        raise ValueError(f"unknown hard-decision method {method!r}")
    w = np.asarray(w, np.complex128)
    is_pow2 = q >= 2 and q & (q - 1) == 0
    if method == "auto" and is_pow2 and q > 4:
        return _hard_quadrant(w, q, counter)
    # Scanning all rotations: products with 1, 1j, -1, -1j are exact in the
    # snapped root table, so for q <= 4 this IS the sign-logic decision and
    # costs nothing under the accounting rules.
    return _hard_full(w, q)


def decode_batch(Y: np.ndarray, q: int, counter: OpCounter | None = None,
                 base_method: str = "auto") -> tuple[np.ndarray, np.ndarray]:
    """Decode a batch of received words.

    Y: (B, 2**m) complex.  Returns (U, corr): U is (B, m+1) info symbols,
    corr the achieved correlations Re{y . x_hat^H}.
    """
    Y = np.asarray(Y, np.complex128)
    B, n = Y.shape
    m = n.bit_length() - 1
    real_path = q == 2
    Z = np.ascontiguousarray(Y.real) if real_path else Y

    # Forward: expand level d (B*q**d problems of size n >> d) to level d+1.
    imax_levels: list[np.ndarray] = [None] * max(m - 1, 0)
    for d in range(m - 1):
        P, s = Z.shape
        half = s >> 1
        ya, yb = Z[:, :half], Z[:, half:]
        if real_path:
            nxt = np.empty((P, 2, half), np.float64)
            np.add(ya, yb, out=nxt[:, 0, :])
            np.subtract(ya, yb, out=nxt[:, 1, :])
            if counter is not None:
                counter.add_halves += 2 * P * half  # real additions
        else:
            xi_inv = inverse_roots(q)
            prods = np.empty((P, q, half), np.complex128)
            prods[:, 0, :] = yb
            if q % 2 == 0:
                top = q >> 1
                for i in range(1, top):
                    np.multiply(yb, xi_inv[i], out=prods[:, i, :])
                    if counter is not None and not _is_axis_root(i, q):
                        counter.mults += P * half
                # xi**-(i + q/2) = -xi**(-i): sign flips, free.
                np.negative(prods[:, :top, :], out=prods[:, top:, :])
            else:
                for i in range(1, q):
                    np.multiply(yb, xi_inv[i], out=prods[:, i, :])
            nxt = prods
            nxt += ya[:, None, :]
            if counter is not None:
                counter.add_halves += 2 * P * q * half  # complex additions
        Z = nxt.reshape(-1, half)

    # Base: length-2 problems solved by hard decisions.
    P = Z.shape[0]
    if real_path:
        syms = (Z < 0.0).astype(np.int64)
        contribs = np.abs(Z)
    else:
        syms, contribs = hard_decisions(Z, q, base_method, counter)
    p = contribs[:, 0] + contribs[:, 1]
    if counter is not None:
        counter.add_halves += P  # one real addition per base problem

    # Backward: propagate the best hypothesis up the tree.
    for d in range(m - 2, -1, -1):
        pm = p.reshape(-1, q)
        im = np.argmax(pm, axis=1)  # first max -> smallest i
        imax_levels[d] = im
        p = np.take_along_axis(pm, im[:, None], axis=1)[:, 0]

    # Walk the winning path down to read off the info symbols.
    U = np.empty((B, m + 1), np.int64)
    t = np.arange(B)
    for d in range(m - 1):
        ii = imax_levels[d][t]
        U[:, m - d] = ii
        t = t * q + ii
    U[:, 0] = syms[t, 0]
    U[:, 1] = syms[t, 1]
    return U, p
