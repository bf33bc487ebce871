"""First-order Reed-Muller codes over Z_q.

Encoding, fast soft-decision maximum-likelihood decoding, exhaustive oracle
decoding, coset-union (supercode) decoding, exact operation-count models, and
a reproducible AWGN Monte-Carlo simulation harness.
"""

from .codec import (
    CodeParams,
    generator_matrix,
    encode,
    encode_recursive,
    to_polyphase,
    roots_of_unity,
    inverse_roots,
    as_info_vector,
    as_codeword,
    as_received,
)
from .decoder import (
    DecodeResult,
    correlation,
    hard_decision_symbol,
    ml_decode,
    ml_decode_instrumented,
    decode_batch,
)
from .oracle import (
    DEFAULT_ENUMERATION_CAP,
    codebook,
    brute_force_decode,
    brute_force_decode_batch,
    top_two_correlations,
    min_distance_check,
)
from .supercode import (
    CosetCode,
    derotate,
    supercode_decode,
    supercode_decode_instrumented,
    load_coset_file,
)
from .complexity import (
    OpCounts,
    predicted_adds,
    predicted_mults,
    reference_adds,
    reference_mults,
    comparison_ratio,
    complexity_table,
    format_table,
    TableRow,
    FHT_REFERENCE_COUNTS,
    rm4_coset_union_real_adds,
)
from .channel import ChannelConfig, TrialRecord, noise_sigma, awgn, run_trials
from .backend import available_backends, get_backend, set_backend

__version__ = "0.1.0"

__all__ = [
    "CodeParams", "generator_matrix", "encode", "encode_recursive",
    "to_polyphase", "roots_of_unity", "inverse_roots",
    "as_info_vector", "as_codeword", "as_received",
    "DecodeResult", "correlation", "hard_decision_symbol",
    "ml_decode", "ml_decode_instrumented", "decode_batch",
    "DEFAULT_ENUMERATION_CAP", "codebook", "brute_force_decode",
    "brute_force_decode_batch", "top_two_correlations", "min_distance_check",
    "CosetCode", "derotate", "supercode_decode",
    "supercode_decode_instrumented", "load_coset_file",
    "OpCounts", "predicted_adds", "predicted_mults",
    "reference_adds", "reference_mults", "comparison_ratio",
    "complexity_table", "format_table", "TableRow",
    "FHT_REFERENCE_COUNTS", "rm4_coset_union_real_adds",
    "ChannelConfig", "TrialRecord", "noise_sigma", "awgn", "run_trials",
    "available_backends", "get_backend", "set_backend",
    "__version__",
]
