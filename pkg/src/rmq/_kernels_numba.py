"""Numba-compiled batch decoder: the same breadth-first algorithm as the
numpy path, written as explicit scalar loops and compiled with @njit.
Outputs match the numpy kernel (identical arithmetic, identical first-maximum
tie handling)."""

from __future__ import annotations

import numpy as np
from numba import njit

__all__ = ["decode_batch_kernel"]


@njit(cache=True)
def _hard_decision_scalar(w, q, xi_inv, pruned):
    re = w.real
    im = w.imag
    if q == 2:
        if re >= 0.0:
            return 0, re
        return 1, -re
    if q == 4:
        best = re
        bi = 0
        if im > best:
            best = im
            bi = 1
        if -re > best:
            best = -re
            bi = 2
        if -im > best:
            best = -im
            bi = 3
        return bi, best
    if pruned and q & (q - 1) == 0:
        quarter = q >> 2
        if re >= 0.0:
            quad = 0 if im >= 0.0 else 3
        else:
            quad = 1 if im >= 0.0 else 2
        base = quad * quarter
        if quad < 3:
            # candidates i = base .. base + q/4, ascending; endpoints are free
            if quad == 0:
                best = re
                end = im
            elif quad == 1:
                best = im
                end = -re
            else:
                best = -re
                end = -im
            bi = base
            for t in range(1, quarter):
                c = (w * xi_inv[base + t]).real
                if c > best:
                    best = c
                    bi = base + t
            if end > best:
                best = end
                bi = base + quarter
        else:
            # candidates are {0} U {3q/4 .. q-1}: symbol 0 scans first
            best = re
            bi = 0
            if -im > best:
                best = -im
                bi = base
            for t in range(1, quarter):
                c = (w * xi_inv[base + t]).real
                if c > best:
                    best = c
                    bi = base + t
        return bi, best
    best = re  # i = 0
    bi = 0
    for i in range(1, q):
        c = (w * xi_inv[i]).real
        if c > best:
            best = c
            bi = i
    return bi, best


@njit(cache=True)
def decode_batch_kernel(Y, q, xi_inv, pruned):
    B, n = Y.shape
    m = 0
    t = n
    while t > 1:
        t >>= 1
        m += 1
    U = np.empty((B, m + 1), np.int64)

    nlev = m - 1
    off = np.zeros(nlev + 1, np.int64)
    for d in range(nlev):
        off[d + 1] = off[d] + B * q ** d
    imax = np.empty(off[nlev], np.int64)

    Z = Y
    for d in range(nlev):
        P, s = Z.shape
        half = s >> 1
        nxt = np.empty((P * q, half), np.complex128)
        for tt in range(P):
            rowbase = tt * q
            for i in range(q):
                xr = xi_inv[i]
                row = rowbase + i
                for k in range(half):
                    nxt[row, k] = Z[tt, k] + Z[tt, k + half] * xr
        Z = nxt

    P = Z.shape[0]
    syms = np.empty((P, 2), np.int64)
    p = np.empty(P, np.float64)
    for tt in range(P):
        s0, c0 = _hard_decision_scalar(Z[tt, 0], q, xi_inv, pruned)
        s1, c1 = _hard_decision_scalar(Z[tt, 1], q, xi_inv, pruned)
        syms[tt, 0] = s0
        syms[tt, 1] = s1
        p[tt] = c0 + c1

    for d in range(nlev - 1, -1, -1):
        rows = off[d + 1] - off[d]
        pnew = np.empty(rows, np.float64)
        for tt in range(rows):
            basei = tt * q
            best = p[basei]
            bi = 0
            for i in range(1, q):
                if p[basei + i] > best:
                    best = p[basei + i]
                    bi = i
            pnew[tt] = best
            imax[off[d] + tt] = bi
        p = pnew

    for b in range(B):
        t = b
        for d in range(nlev):
            ii = imax[off[d] + t]
            U[b, m - d] = ii
            t = t * q + ii
        U[b, 0] = syms[t, 0]
        U[b, 1] = syms[t, 1]
    return U, p
