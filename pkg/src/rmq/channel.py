"""AWGN channel and Monte-Carlo word/symbol error simulation.

Noise model: y_k = x_k + n_k with circularly symmetric complex Gaussian
noise of total per-sample variance sigma^2 = 10**(-snr_db/10), split evenly
between the real and imaginary parts.  Since |x_k| = 1, snr_db is Es/N0 per
symbol in dB.  snr_db = +inf disables the noise exactly (sigma = 0).

Reproducibility: randomness comes from numpy's Philox counter-based bit
generator, whose raw stream is stable across platforms and numpy versions,
and Gaussian samples are produced by an explicit Box-Muller transform of
uniform draws (never Generator.standard_normal, whose algorithm is not
stream-stable).  Trials are processed in fixed-size chunks; chunk c draws
from Philox keyed by (seed, c), so results are bit-identical regardless of
how many workers process the chunks.  RMQ_THREADS caps the worker count.

Per chunk, draws happen in a fixed order: info symbols, then the coset index
(supercode decoding only), then noise.  For supercode trials the transmitted
word is a uniformly drawn (coset, info) pair; a trial is a word error when
either part is misdecoded, while symbol errors count only the m+1 info
symbols.
"""

from __future__ import annotations

import math
import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import numpy as np

from .codec import CodeParams, encode, to_polyphase
from .decoder import decode_batch
from .oracle import DEFAULT_ENUMERATION_CAP, brute_force_decode_batch
from .supercode import CosetCode
from . import backend as _backend
from .codec import inverse_roots

__all__ = ["ChannelConfig", "TrialRecord", "noise_sigma", "awgn", "run_trials"]

_CHUNK = 1024


@dataclass(frozen=True)
class ChannelConfig:
    """Channel setup: snr_db is Es/N0 per symbol in dB (+inf = noise off),
    seed drives the reproducible noise/message stream (64-bit)."""

    snr_db: float
    seed: int = 0

    def __post_init__(self) -> None:
        s = float(self.snr_db)
        if math.isnan(s) or s == -math.inf:
            raise ValueError(f"snr_db must be a real value or +inf, got {s}")
        object.__setattr__(self, "snr_db", s)
        if not isinstance(self.seed, (int, np.integer)) or isinstance(self.seed, bool):
            raise ValueError(f"seed must be an integer, got {self.seed!r}")
        if not 0 <= self.seed < 2 ** 64:
            raise ValueError(f"seed must fit in 64 bits, got {self.seed}")


@dataclass(frozen=True)
class TrialRecord:
    """Tally of one simulation point."""

    trials: int
    word_errors: int
    symbol_errors: int
    snr_db: float

    @property
    def wer(self) -> float:
        return self.word_errors / self.trials

    @property
    def ser(self) -> float:
        return self.symbol_errors / self.trials


def noise_sigma(snr_db: float) -> float:
    """Total per-sample noise standard deviation: sqrt(10**(-snr_db/10))."""
    return math.sqrt(10.0 ** (-float(snr_db) / 10.0))


def _chunk_rng(seed: int, chunk_index: int) -> np.random.Generator:
    return np.random.Generator(np.random.Philox(key=np.array(
        [seed, chunk_index], dtype=np.uint64)))


def _gaussian_pairs(rng: np.random.Generator, shape) -> np.ndarray:
    """Standard complex Gaussian (unit variance per complex sample) via
    Box-Muller on uniform draws."""
    u1 = rng.random(shape)
    u2 = rng.random(shape)
    amp = np.sqrt(-np.log1p(-u1))  # Rayleigh with E[amp^2] = 1
    phase = 2.0 * np.pi * u2
    return amp * np.cos(phase) + 1j * (amp * np.sin(phase))


def awgn(x, config: ChannelConfig, rng: np.random.Generator | None = None) -> np.ndarray:
    """Add channel noise to polyphase samples x (any shape).

    With the default rng, repeated calls with the same config are
    bit-identical.
    """
    xa = np.asarray(x, np.complex128)
    if rng is None:
        rng = _chunk_rng(config.seed, 0)
    sigma = noise_sigma(config.snr_db)
    return xa + sigma * _gaussian_pairs(rng, xa.shape)


def _worker_count(workers: int | None) -> int:
    if workers is None:
        env = os.environ.get("RMQ_THREADS", "").strip()
        if env:
            try:
                workers = int(env)
            except ValueError:
                raise ValueError(f"RMQ_THREADS must be an integer, got {env!r}")
        else:
            workers = 1
    if workers < 1:
        raise ValueError(f"worker count must be >= 1, got {workers}")
    return workers


def run_trials(params: CodeParams, config: ChannelConfig, trials: int,
               decoder: str = "ml", coset_code: CosetCode | None = None,
               cap: int = DEFAULT_ENUMERATION_CAP,
               workers: int | None = None) -> TrialRecord:
    """Monte-Carlo word/symbol error simulation of one channel point.

    decoder: "ml" (fast decoder), "oracle" (exhaustive search; subject to the
    enumeration cap) or "supercode" (requires coset_code).  A fixed
    (params, config, trials, decoder) tuple gives identical tallies on every
    run and for every worker count.
    """
    if not isinstance(trials, (int, np.integer)) or isinstance(trials, bool) or trials < 1:
        raise ValueError(f"trials must be a positive integer, got {trials!r}")
    if decoder not in ("ml", "oracle", "supercode"):
        raise ValueError(f"unknown decoder {decoder!r}; choose ml, oracle, or supercode")
    if decoder == "supercode":
        if coset_code is None:
            raise ValueError("supercode decoding needs coset_code")
        if coset_code.params != params:
            raise ValueError("coset_code parameters do not match params")
    if decoder == "oracle":
        count = params.q ** (params.m + 1)
        if count > cap:
            raise ValueError(
                f"oracle decoder unavailable: q**(m+1) = {count} exceeds the "
                f"enumeration cap {cap}")

    sigma = noise_sigma(config.snr_db)
    q, m, n = params.q, params.m, params.n
    rot = None
    if decoder == "supercode":
        rot = inverse_roots(q)[coset_code.representatives]  # (M, n)

    def one_chunk(ci: int) -> tuple[int, int]:
        lo = ci * _CHUNK
        count = min(_CHUNK, trials - lo)
        rng = _chunk_rng(config.seed, ci)
        U = np.floor(rng.random((count, m + 1)) * q).astype(np.int64)
        C = encode(params, U)
        if decoder == "supercode":
            J = np.floor(rng.random(count) * coset_code.size).astype(np.int64)
            C = (C + coset_code.representatives[J]) % q
        Y = to_polyphase(params, C) + sigma * _gaussian_pairs(rng, (count, n))

        if decoder == "ml":
            Uhat, _ = decode_batch(params, Y)
        elif decoder == "oracle":
            Uhat, _ = brute_force_decode_batch(params, Y, cap)
        else:
            M = coset_code.size
            # decode every coset of every word in one batch
            Yd = (Y[:, None, :] * rot[None, :, :]).reshape(count * M, n)
            Uall, corr_all = _backend.decode_batch(Yd, q)
            corr_all = corr_all.reshape(count, M)
            Jhat = np.argmax(corr_all, axis=1)  # first max = smallest coset index
            Uhat = Uall.reshape(count, M, m + 1)[np.arange(count), Jhat]

        sym_err = int(np.count_nonzero(Uhat != U))
        word_err = np.any(Uhat != U, axis=1)
        if decoder == "supercode":
            word_err = word_err | (Jhat != J)
        return int(np.count_nonzero(word_err)), sym_err

    chunk_count = (trials + _CHUNK - 1) // _CHUNK
    nworkers = min(_worker_count(workers), chunk_count)
    if nworkers > 1:
        with ThreadPoolExecutor(max_workers=nworkers) as pool:
            results = list(pool.map(one_chunk, range(chunk_count)))
    else:
        results = [one_chunk(ci) for ci in range(chunk_count)]

    word_errors = sum(r[0] for r in results)
    symbol_errors = sum(r[1] for r in results)
    return TrialRecord(trials=trials, word_errors=word_errors,
                       symbol_errors=symbol_errors, snr_db=config.snr_db)
