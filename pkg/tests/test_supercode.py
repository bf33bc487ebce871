"""Coset-union (supercode) decoding."""

import numpy as np
import pytest

from rmq import (
    CodeParams,
    CosetCode,
    codebook,
    correlation,
    derotate,
    encode,
    load_coset_file,
    ml_decode,
    ml_decode_instrumented,
    predicted_adds,
    predicted_mults,
    supercode_decode,
    supercode_decode_instrumented,
    to_polyphase,
)
from conftest import randn_complex


def _random_code(rng, params, M):
    reps = rng.integers(0, params.q, size=(M, params.n))
    return CosetCode(params, reps)


class TestCosetCode:
    def test_single_representative_promoted(self):
        p = CodeParams(4, 2)
        code = CosetCode(p, [1, 2, 3, 0])
        assert code.size == 1 and code.representatives.shape == (1, 4)

    def test_representatives_read_only(self, rng):
        code = _random_code(rng, CodeParams(4, 2), 3)
        with pytest.raises(ValueError):
            code.representatives[0, 0] = 0

    def test_rejects_bad_representatives(self):
        p = CodeParams(4, 2)
        with pytest.raises(ValueError):
            CosetCode(p, np.zeros((0, 4), int))          # empty
        with pytest.raises(ValueError):
            CosetCode(p, [[0, 1, 2]])                    # wrong length
        with pytest.raises(ValueError):
            CosetCode(p, [[0, 1, 2, 4]])                 # symbol out of range


class TestDerotate:
    def test_inverts_a_coset_offset(self, rng):
        p = CodeParams(8, 3)
        c = rng.integers(0, 8, p.n)
        rep = rng.integers(0, 8, p.n)
        shifted = to_polyphase(p, (c + rep) % 8)
        assert np.max(np.abs(derotate(p, shifted, rep) - to_polyphase(p, c))) <= 1e-12

    def test_zero_representative_is_identity(self, rng):
        p = CodeParams(4, 2)
        y = randn_complex(rng, p.n)
        assert np.allclose(derotate(p, y, np.zeros(p.n, int)), y, rtol=0, atol=0)


class TestSupercodeDecode:
    def test_single_zero_coset_equals_plain_decode(self, rng):
        p = CodeParams(8, 3)
        code = CosetCode(p, np.zeros((1, p.n), int))
        y = randn_complex(rng, p.n)
        j, res = supercode_decode(code, y)
        plain = ml_decode(p, y)
        assert j == 0
        assert np.array_equal(res.info, plain.info)
        assert np.array_equal(res.codeword, plain.codeword)
        assert abs(res.correlation - plain.correlation) <= 1e-12

    def test_noiseless_recovery(self, rng):
        p = CodeParams(4, 3)
        code = _random_code(rng, p, 4)
        for _ in range(30):
            u = rng.integers(0, 4, 4)
            j = int(rng.integers(0, 4))
            word = (encode(p, u) + code.representatives[j]) % 4
            j_hat, res = supercode_decode(code, to_polyphase(p, word))
            assert np.array_equal(res.codeword, word)
            assert abs(res.correlation - p.n) <= 1e-9
            # the transmitted coset wins unless another coset contains the
            # same word, in which case the smaller index is reported
            if j_hat != j:
                diff = (word - code.representatives[j_hat]) % 4
                _, C, _ = codebook(p)
                assert j_hat < j
                assert any(np.array_equal(diff, c) for c in C)

    def test_overlapping_cosets_pick_smallest_index(self, rng):
        p = CodeParams(4, 2)
        rep = rng.integers(0, 4, p.n)
        shifted = (rep + encode(p, [1, 2, 3])) % 4  # same coset, other leader
        code = CosetCode(p, np.vstack([rep, shifted]))
        y = to_polyphase(p, (encode(p, [0, 1, 2]) + shifted) % 4)
        j_hat, _ = supercode_decode(code, y)
        assert j_hat == 0

    def test_reported_codeword_structure(self, rng):
        p = CodeParams(4, 3)
        code = _random_code(rng, p, 3)
        y = randn_complex(rng, p.n)
        j, res = supercode_decode(code, y)
        rebuilt = (encode(p, res.info) + code.representatives[j]) % 4
        assert np.array_equal(res.codeword, rebuilt)
        assert abs(res.correlation
                   - correlation(y, to_polyphase(p, res.codeword))) <= 1e-9

    def test_matches_exhaustive_union_search(self, rng):
        p = CodeParams(4, 3)
        _, C, _ = codebook(p)
        for M in (2, 4):
            code = _random_code(rng, p, M)
            union = np.vstack([
                to_polyphase(p, (C + rep) % 4) for rep in code.representatives
            ])
            for _ in range(50):
                u = rng.integers(0, 4, 4)
                j = int(rng.integers(0, M))
                x = to_polyphase(p, (encode(p, u) + code.representatives[j]) % 4)
                y = x + 0.5 * randn_complex(rng, p.n)
                _, res = supercode_decode(code, y)
                best = float(np.max((union.conj() @ y).real))
                assert abs(res.correlation - best) <= 1e-9

    def test_rejects_batched_input(self, rng):
        code = _random_code(rng, CodeParams(4, 2), 2)
        with pytest.raises(ValueError):
            supercode_decode(code, np.ones((2, 4), complex))


class TestInstrumented:
    def test_counts_scale_with_cosets_trivial_rotations(self, rng):
        # q = 4: every root is an axis root, so derotation is free
        p = CodeParams(4, 3)
        code = _random_code(rng, p, 3)
        _, _, counts = supercode_decode_instrumented(code, randn_complex(rng, p.n))
        assert counts.complex_adds == 3 * predicted_adds(2, 3)
        assert counts.complex_mults == 3 * predicted_mults(2, 3)

    def test_counts_include_nontrivial_derotations(self, rng):
        p = CodeParams(8, 2)
        reps = np.array([[0, 2, 4, 6],     # all axis roots: free
                         [1, 0, 3, 4]])    # two non-axis symbols
        code = CosetCode(p, reps)
        y = randn_complex(rng, p.n)
        j, res, counts = supercode_decode_instrumented(code, y)
        assert counts.complex_adds == 2 * predicted_adds(3, 2)
        assert counts.complex_mults == 2 * predicted_mults(3, 2) + 2
        plain_j, plain_res = supercode_decode(code, y)
        assert j == plain_j and np.array_equal(res.info, plain_res.info)

    def test_requires_power_of_two_alphabet(self, rng):
        p = CodeParams(3, 2)
        code = _random_code(rng, p, 2)
        with pytest.raises(ValueError):
            supercode_decode_instrumented(code, randn_complex(rng, p.n))


class TestLoadCosetFile:
    def test_round_trip(self, tmp_path):
        p = CodeParams(4, 2)
        path = tmp_path / "cosets.txt"
        path.write_text("0,1,2,3\n\n3,3,0,0\n")
        code = load_coset_file(path, p)
        assert code.size == 2
        assert np.array_equal(code.representatives, [[0, 1, 2, 3], [3, 3, 0, 0]])

    def test_malformed_symbol_reports_location(self, tmp_path):
        path = tmp_path / "cosets.txt"
        path.write_text("0,1,2,3\n0,x,0,0\n")
        with pytest.raises(ValueError, match=r"cosets\.txt:2"):
            load_coset_file(path, CodeParams(4, 2))

    def test_out_of_range_symbol_reports_location(self, tmp_path):
        path = tmp_path / "cosets.txt"
        path.write_text("0,1,2,9\n")
        with pytest.raises(ValueError, match=r"cosets\.txt:1"):
            load_coset_file(path, CodeParams(4, 2))

    def test_empty_file_rejected(self, tmp_path):
        path = tmp_path / "cosets.txt"
        path.write_text("\n\n")
        with pytest.raises(ValueError, match="no coset representatives"):
            load_coset_file(path, CodeParams(4, 2))
