"""Generator matrices, encoding, and the polyphase (q-PSK) map."""

import numpy as np
import pytest

from rmq import (
    CodeParams,
    as_codeword,
    as_info_vector,
    as_received,
    encode,
    encode_recursive,
    generator_matrix,
    inverse_roots,
    roots_of_unity,
    to_polyphase,
)
from conftest import randn_complex


class TestCodeParams:
    def test_derived_quantities(self):
        p = CodeParams(q=8, m=4)
        assert (p.n, p.k, p.h) == (16, 5, 3)

    def test_exponent_for_powers_of_two(self):
        for h in range(1, 7):
            assert CodeParams(q=2**h, m=1).h == h

    def test_exponent_absent_otherwise(self):
        assert CodeParams(q=3, m=1).h is None
        assert CodeParams(q=12, m=2).h is None

    @pytest.mark.parametrize("q,m", [(1, 1), (0, 2), (-4, 3), (2, 0), (2, -1)])
    def test_rejects_out_of_range(self, q, m):
        with pytest.raises(ValueError):
            CodeParams(q=q, m=m)

    @pytest.mark.parametrize("q,m", [(2.0, 1), (2, 1.5), (True, 1), (2, True), ("4", 1)])
    def test_rejects_non_integers(self, q, m):
        with pytest.raises(ValueError):
            CodeParams(q=q, m=m)


class TestGeneratorMatrix:
    def test_order_one_is_identity(self):
        assert np.array_equal(generator_matrix(1), np.eye(2, dtype=int))

    def test_order_two_rows(self):
        expected = [[1, 0, 1, 0], [0, 1, 0, 1], [0, 0, 1, 1]]
        assert np.array_equal(generator_matrix(2), expected)

    def test_order_three_last_row(self):
        assert np.array_equal(generator_matrix(3)[3], [0, 0, 0, 0, 1, 1, 1, 1])

    @pytest.mark.parametrize("m", range(2, 8))
    def test_recursive_block_structure(self, m):
        g, prev = generator_matrix(m), generator_matrix(m - 1)
        half = 1 << (m - 1)
        assert g.shape == (m + 1, 2 * half)
        assert np.array_equal(g[:m, :half], prev)
        assert np.array_equal(g[:m, half:], prev)
        assert np.array_equal(g[m], [0] * half + [1] * half)

    def test_entries_binary_and_read_only(self):
        g = generator_matrix(4)
        assert set(np.unique(g)) <= {0, 1}
        with pytest.raises(ValueError):
            g[0, 0] = 5

    @pytest.mark.parametrize("m", [0, -1, 1.5, "2"])
    def test_rejects_bad_order(self, m):
        with pytest.raises(ValueError):
            generator_matrix(m)


class TestEncode:
    def test_zero_message(self):
        assert np.array_equal(encode(CodeParams(2, 1), [0, 0]), [0, 0])

    def test_known_quaternary_word(self):
        assert np.array_equal(encode(CodeParams(4, 2), [1, 2, 3]), [1, 2, 0, 1])

    def test_last_row_selector(self):
        word = encode(CodeParams(2, 3), [0, 0, 0, 1])
        assert np.array_equal(word, [0, 0, 0, 0, 1, 1, 1, 1])

    def test_matches_recursive_form(self, rng):
        for q in (2, 3, 4, 8):
            for m in range(1, 5):
                p = CodeParams(q, m)
                u = rng.integers(0, q, size=(25, m + 1))
                assert np.array_equal(encode(p, u), encode_recursive(p, u))

    def test_linearity(self, rng):
        for q in (2, 3, 4, 8):
            for m in (1, 2, 3, 4):
                p = CodeParams(q, m)
                u = rng.integers(0, q, size=(20, m + 1))
                v = rng.integers(0, q, size=(20, m + 1))
                lhs = encode(p, (u + v) % q)
                rhs = (encode(p, u) + encode(p, v)) % q
                assert np.array_equal(lhs, rhs)

    def test_stacked_messages_encode_row_wise(self, rng):
        p = CodeParams(5, 3)
        u = rng.integers(0, 5, size=(7, 4))
        batch = encode(p, u)
        for k in range(7):
            assert np.array_equal(batch[k], encode(p, u[k]))

    @pytest.mark.parametrize("q,m", [(2, 3), (2, 4), (3, 2), (3, 3), (4, 2),
                                     (4, 3), (8, 2), (16, 2)])
    def test_code_has_full_size(self, q, m):
        p = CodeParams(q, m)
        grids = np.indices((q,) * (m + 1)).reshape(m + 1, -1).T
        words = encode(p, grids)
        assert len(np.unique(words, axis=0)) == q ** (m + 1)

    def test_integral_floats_accepted(self):
        assert np.array_equal(encode(CodeParams(4, 1), [1.0, 3.0]),
                              encode(CodeParams(4, 1), [1, 3]))

    def test_rejects_bad_messages(self):
        p = CodeParams(4, 2)
        with pytest.raises(ValueError):
            encode(p, [1, 2])          # wrong length
        with pytest.raises(ValueError):
            encode(p, [1, 2, 4])       # symbol out of range
        with pytest.raises(ValueError):
            encode(p, [1, 2, -1])      # negative symbol
        with pytest.raises(ValueError):
            encode(p, [0.5, 1, 2])     # non-integral float


class TestRootTables:
    @pytest.mark.parametrize("q", [2, 3, 4, 5, 6, 8, 12, 16, 32])
    def test_unit_modulus(self, q):
        assert np.max(np.abs(np.abs(roots_of_unity(q)) - 1.0)) <= 1e-12

    @pytest.mark.parametrize("q", [4, 8, 12, 16, 32])
    def test_axis_entries_exact(self, q):
        w = roots_of_unity(q)
        assert w[0] == 1.0 and w[q // 4] == 1j
        assert w[q // 2] == -1.0 and w[3 * q // 4] == -1j

    @pytest.mark.parametrize("q", [2, 4, 6, 8, 10, 16])
    def test_half_turn_antisymmetry_exact(self, q):
        w = roots_of_unity(q)
        half = q // 2
        assert np.array_equal(w[half:], -w[:half])

    @pytest.mark.parametrize("q", [2, 3, 4, 8, 9])
    def test_inverse_is_conjugate(self, q):
        assert np.array_equal(inverse_roots(q), roots_of_unity(q).conj())

    def test_tables_read_only(self):
        with pytest.raises(ValueError):
            roots_of_unity(8)[1] = 0

    @pytest.mark.parametrize("q", [1, 0, 2.5, "8"])
    def test_rejects_bad_alphabet(self, q):
        with pytest.raises(ValueError):
            roots_of_unity(q)


class TestPolyphase:
    def test_fourth_roots_exact(self):
        x = to_polyphase(CodeParams(4, 2), [0, 1, 2, 3])
        assert np.array_equal(x, [1, 1j, -1, -1j])

    def test_binary_is_antipodal(self):
        assert np.array_equal(to_polyphase(CodeParams(2, 1), [0, 1]), [1, -1])

    def test_eighth_root_value(self):
        v = roots_of_unity(8)[1]
        assert abs(v - (0.7071067811865476 + 0.7071067811865476j)) <= 1e-12

    def test_codeword_energy(self, rng):
        for q in (3, 5, 8, 16):
            for m in (1, 3, 5):
                p = CodeParams(q, m)
                c = rng.integers(0, q, p.n)
                x = to_polyphase(p, c)
                assert abs(np.vdot(x, x).real - p.n) <= 1e-9 * p.n

    def test_rejects_out_of_range(self):
        with pytest.raises(ValueError):
            to_polyphase(CodeParams(4, 1), [0, 4])


class TestValidators:
    def test_info_vector_round_trip(self):
        u = as_info_vector(CodeParams(4, 2), [3, 0, 1])
        assert u.dtype == np.int64 and np.array_equal(u, [3, 0, 1])

    def test_codeword_length_enforced(self):
        with pytest.raises(ValueError):
            as_codeword(CodeParams(2, 3), [0, 1, 0])

    def test_received_length_enforced(self):
        with pytest.raises(ValueError):
            as_received(CodeParams(2, 3), np.zeros(4, complex))

    @pytest.mark.parametrize("bad", [np.nan, np.inf, -np.inf, np.nan * 1j, np.inf * 1j])
    def test_received_must_be_finite(self, bad):
        y = np.ones(4, complex)
        y[2] = bad
        with pytest.raises(ValueError):
            as_received(CodeParams(2, 2), y)

    def test_received_accepts_strided_views(self, rng):
        # a non-contiguous complex view must validate cleanly
        base = randn_complex(rng, 16)
        out = as_received(CodeParams(2, 3), base[::2])
        assert np.array_equal(out, base[::2])

    def test_received_accepts_real_input(self):
        out = as_received(CodeParams(2, 2), [1.0, -1.0, 1.0, 1.0])
        assert out.dtype == np.complex128
