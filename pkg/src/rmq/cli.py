"""Command-line interface.

Subcommands:
    encode      encode info symbols to a Z_q codeword
    decode      ML-decode a file of received samples
    simulate    Monte-Carlo error-rate simulation over AWGN (CSV output)
    complexity  operation-count table for the fast and reference decoders

Sample files hold one complex sample per line as "re,im".  Coset files hold
one representative word per line as comma-separated decimal symbols.
"""

from __future__ import annotations

import argparse
import math
import sys

import numpy as np

from .codec import CodeParams, encode
from .channel import ChannelConfig, run_trials
from .complexity import complexity_table, format_table
from .decoder import ml_decode, ml_decode_instrumented
from .oracle import DEFAULT_ENUMERATION_CAP, brute_force_decode
from .supercode import load_coset_file, supercode_decode, supercode_decode_instrumented


def _parse_symbols(text: str) -> list[int]:
    try:
        return [int(tok) for tok in text.split(",")]
    except ValueError:
        raise ValueError(f"malformed symbol list {text!r}; expected comma-separated integers")


def _parse_int_list(text: str) -> list[int]:
    return _parse_symbols(text)


def _read_samples(path: str) -> np.ndarray:
    values = []
    with open(path, "r", encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, 1):
            line = line.strip()
            if not line:
                continue
            parts = line.split(",")
            if len(parts) != 2:
                raise ValueError(f"{path}:{lineno}: expected 're,im', got {line!r}")
            try:
                re_part, im_part = float(parts[0]), float(parts[1])
            except ValueError:
                raise ValueError(f"{path}:{lineno}: expected 're,im', got {line!r}")
            values.append(complex(re_part, im_part))
    if not values:
        raise ValueError(f"{path}: no samples found")
    return np.asarray(values, np.complex128)


def _parse_snr_spec(text: str) -> list[float]:
    """Either a single value or an inclusive range 'start:step:stop'."""
    if ":" not in text:
        return [float(text)]
    parts = text.split(":")
    if len(parts) != 3:
        raise ValueError(f"malformed snr range {text!r}; expected start:step:stop")
    start, step, stop = (float(p) for p in parts)
    if not (math.isfinite(start) and math.isfinite(step) and math.isfinite(stop)):
        raise ValueError(f"snr range bounds must be finite, got {text!r}")
    if step <= 0:
        raise ValueError(f"snr range step must be positive, got {step}")
    if stop < start:
        raise ValueError(f"snr range stop must be >= start, got {text!r}")
    count = int(math.floor((stop - start) / step + 1e-9)) + 1
    return [start + k * step for k in range(count)]


def _fmt_float(x: float) -> str:
    return f"{x:.10g}"


def _cmd_encode(args) -> int:
    params = CodeParams(args.q, args.m)
    word = encode(params, _parse_symbols(args.u))
    print(",".join(str(int(s)) for s in word))
    return 0


def _cmd_decode(args) -> int:
    params = CodeParams(args.q, args.m)
    y = _read_samples(args.samples)
    counts = None
    coset_index = None
    if args.mode == "ml":
        if args.count:
            result, counts = ml_decode_instrumented(params, y)
        else:
            result = ml_decode(params, y)
    elif args.mode == "oracle":
        if args.count:
            raise ValueError("--count is only available for ml and supercode decoding")
        result = brute_force_decode(params, y, cap=args.cap)
    else:
        if not args.coset_file:
            raise ValueError("supercode decoding needs --coset-file")
        code = load_coset_file(args.coset_file, params)
        if args.count:
            coset_index, result, counts = supercode_decode_instrumented(code, y)
        else:
            coset_index, result = supercode_decode(code, y)
    print("info: " + ",".join(str(int(s)) for s in result.info))
    print("codeword: " + ",".join(str(int(s)) for s in result.codeword))
    print("correlation: " + _fmt_float(result.correlation))
    if coset_index is not None:
        print(f"coset: {coset_index}")
    if counts is not None:
        print(str(counts))
    return 0


def _cmd_simulate(args) -> int:
    params = CodeParams(args.q, args.m)
    coset_code = None
    if args.mode == "supercode":
        if not args.coset_file:
            raise ValueError("supercode simulation needs --coset-file")
        coset_code = load_coset_file(args.coset_file, params)
    snrs = _parse_snr_spec(args.snr)
    if args.ebn0 and params.h is None:
        raise ValueError("--ebn0 requires q to be a power of two")

    lines = []
    header = "snr_db,trials,word_errors,wer,symbol_errors,ser"
    if args.ebn0:
        header = "snr_db,ebn0_db," + header.split(",", 1)[1]
    lines.append(header)
    for snr in snrs:
        rec = run_trials(params, ChannelConfig(snr_db=snr, seed=args.seed),
                         args.trials, decoder=args.mode, coset_code=coset_code,
                         cap=args.cap)
        fields = [_fmt_float(rec.snr_db)]
        if args.ebn0:
            bits_per_symbol = (params.m + 1) * math.log2(params.q) / params.n
            fields.append(_fmt_float(rec.snr_db - 10.0 * math.log10(bits_per_symbol)))
        fields += [str(rec.trials), str(rec.word_errors), _fmt_float(rec.wer),
                   str(rec.symbol_errors), _fmt_float(rec.ser)]
        lines.append(",".join(fields))
    # emit only after every point succeeded: no partial CSV on failure
    print("\n".join(lines))
    return 0


def _cmd_complexity(args) -> int:
    rows = complexity_table(_parse_int_list(args.m), _parse_int_list(args.q))
    print(format_table(rows, csv=args.csv))
    return 0


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="rmq",
        description="First-order Reed-Muller codes over Z_q: encoding, fast "
                    "soft-decision ML decoding, coset-union decoding, "
                    "operation-count models, AWGN simulation.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("encode", help="encode info symbols to a codeword")
    p.add_argument("--q", type=int, required=True, help="alphabet size")
    p.add_argument("--m", type=int, required=True, help="code order (length 2**m)")
    p.add_argument("--u", required=True, help="m+1 comma-separated info symbols")
    p.set_defaults(func=_cmd_encode)

    p = sub.add_parser("decode", help="decode a file of received samples")
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--samples", required=True, help="file with one 're,im' pair per line")
    p.add_argument("--mode", choices=("ml", "oracle", "supercode"), default="ml")
    p.add_argument("--coset-file", help="coset representatives (supercode mode)")
    p.add_argument("--count", action="store_true",
                   help="also print the exact operation counts")
    p.add_argument("--cap", type=int, default=DEFAULT_ENUMERATION_CAP,
                   help="enumeration cap for oracle mode")
    p.set_defaults(func=_cmd_decode)

    p = sub.add_parser("simulate", help="Monte-Carlo AWGN error-rate simulation")
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--snr", required=True,
                   help="Es/N0 in dB: single value or inclusive range start:step:stop")
    p.add_argument("--trials", type=int, required=True)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--mode", choices=("ml", "oracle", "supercode"), default="ml")
    p.add_argument("--coset-file")
    p.add_argument("--ebn0", action="store_true",
                   help="add a derived Eb/N0 column (power-of-two q only)")
    p.add_argument("--cap", type=int, default=DEFAULT_ENUMERATION_CAP)
    p.set_defaults(func=_cmd_simulate)

    p = sub.add_parser("complexity", help="operation-count table")
    p.add_argument("--m", required=True, help="comma-separated list of orders")
    p.add_argument("--q", required=True, help="comma-separated list of alphabet sizes")
    p.add_argument("--csv", action="store_true", help="emit CSV instead of aligned text")
    p.set_defaults(func=_cmd_complexity)
    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
