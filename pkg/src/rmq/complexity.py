"""Operation-count models for the fast ML decoder of RM_q(1, m), q = 2**h.

Counting conventions
--------------------
* Multiplications by 1, 1j, -1, -1j are free (sign changes / component
  swaps), as are the products obtained from already computed ones by a sign
  change (rotating by half a turn).
* One real addition counts as half a complex addition.  Additions are
  reported in complex-addition units as exact rationals; counts are carried
  internally as integer numbers of real-addition halves so 1/2 stays exact.
* For q = 2 the decoder touches only the real parts of the received word, so
  it performs real additions exclusively; its reported figures are still in
  complex-addition units (the literal real-addition count is twice the
  reported number, e.g. 28 complex units = 56 real additions at m = 4).

Recursive decoder cost
----------------------
Per decode of a length-2**m word over Z_{2**h}:

    mults(h, 1) = 2**(h-1) - 2          (h > 2; zero for h <= 2)
    mults(h, m) = (2**(h-1) - 2) * 2**(m-1) + 2**h * mults(h, m-1)

    adds(h, 1)  = 1/2                   (one real addition)
    adds(1, m)  = 2 * (2**(m-2) + adds(1, m-1))
    adds(h, m)  = 2**h * (2**(m-1) + adds(h, m-1))     (h > 1)

with closed forms (cross-checked against the recursions in tests)

    mults(h, m) = (2**(h-1) - 2) * (2**(h*m) - 2**m) / (2**h - 2)
    adds(1, m)  = (2*m - 1) * 2**(m-2)
    adds(h, m)  = (5*2**(h*m-1) - 2**(h*(m-1)) - 2**(h+m)) / (2**h - 2)

Reference decoder
-----------------
The classical exhaustive-correlation ML decoder based on the q-ary fast
Hadamard transform costs, in the same units,

    ref_adds(1, m) = m * 2**(m-1)
    ref_adds(h, m) = 2**(h-1) * (2**(h*m) - 2**m) / (2**(h-1) - 1)   (h > 1)
    ref_mults(h, m) = 2 * mults(h, m)

A verbatim table of its published figures for m in {4, 5, 6} and
q in {2, 4, 8, 16} is kept in FHT_REFERENCE_COUNTS and anchors the formulas.
As m grows, adds(h, m) / ref_adds(h, m) converges to

    comparison_ratio(h) = (2**(h+1) + 2**(h-1) - 1) / 2**(2*h).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

__all__ = [
    "OpCounts",
    "predicted_mults",
    "predicted_adds",
    "reference_mults",
    "reference_adds",
    "comparison_ratio",
    "complexity_table",
    "format_table",
    "TableRow",
    "FHT_REFERENCE_COUNTS",
    "rm4_coset_union_real_adds",
]


@dataclass(frozen=True)
class OpCounts:
    """Exact operation tally: complex additions (rational) and multiplications."""

    complex_adds: Fraction
    complex_mults: int

    def __post_init__(self) -> None:
        adds = Fraction(self.complex_adds)
        object.__setattr__(self, "complex_adds", adds)
        if adds < 0 or adds.denominator not in (1, 2):
            raise ValueError(f"complex_adds must be a nonnegative half-integer, got {adds}")
        if self.complex_mults < 0:
            raise ValueError("complex_mults must be nonnegative")

    @classmethod
    def from_half_units(cls, add_halves: int, mults: int) -> "OpCounts":
        return cls(Fraction(add_halves, 2), mults)

    def __add__(self, other: "OpCounts") -> "OpCounts":
        return OpCounts(self.complex_adds + other.complex_adds,
                        self.complex_mults + other.complex_mults)

    def __str__(self) -> str:
        return f"adds={self.complex_adds} mults={self.complex_mults}"


def _check_hm(h: int, m: int) -> None:
    if not isinstance(h, int) or isinstance(h, bool) or h < 1:
        raise ValueError(f"h must be an integer >= 1, got {h!r}")
    if not isinstance(m, int) or isinstance(m, bool) or m < 1:
        raise ValueError(f"m must be an integer >= 1, got {m!r}")


def predicted_mults(h: int, m: int) -> int:
    """Complex multiplications per decode of RM_{2**h}(1, m) (exact)."""
    _check_hm(h, m)
    if h <= 2:
        return 0
    v = 2 ** (h - 1) - 2
    for k in range(2, m + 1):
        v = (2 ** (h - 1) - 2) * 2 ** (k - 1) + 2 ** h * v
    return v


def _predicted_mults_closed(h: int, m: int) -> int:
    _check_hm(h, m)
    if h <= 2:
        return 0
    num = (2 ** (h - 1) - 2) * (2 ** (h * m) - 2 ** m)
    den = 2 ** h - 2
    assert num % den == 0
    return num // den


def predicted_adds(h: int, m: int) -> Fraction:
    """Complex-addition units per decode of RM_{2**h}(1, m) (exact rational)."""
    _check_hm(h, m)
    v = Fraction(1, 2)
    for k in range(2, m + 1):
        if h == 1:
            v = 2 * (2 ** (k - 2) + v)
        else:
            v = 2 ** h * (2 ** (k - 1) + v)
    return v


def _predicted_adds_closed(h: int, m: int) -> Fraction:
    _check_hm(h, m)
    if h == 1:
        return (2 * m - 1) * Fraction(2) ** (m - 2)
    return Fraction(5 * 2 ** (h * m - 1) - 2 ** (h * (m - 1)) - 2 ** (h + m),
                    2 ** h - 2)


def reference_mults(h: int, m: int) -> int:
    """Complex multiplications of the FHT correlation decoder (exact)."""
    _check_hm(h, m)
    return 2 * predicted_mults(h, m)


def reference_adds(h: int, m: int) -> Fraction:
    """Complex-addition units of the FHT correlation decoder (exact)."""
    _check_hm(h, m)
    if h == 1:
        return Fraction(m * 2 ** (m - 1))
    return Fraction(2 ** (h - 1) * (2 ** (h * m) - 2 ** m), 2 ** (h - 1) - 1)


def comparison_ratio(h: int) -> float:
    """Large-m limit of predicted_adds / reference_adds for q = 2**h, h > 1."""
    if not isinstance(h, int) or isinstance(h, bool) or h < 2:
        raise ValueError(f"h must be an integer >= 2, got {h!r}")
    return (2 ** (h + 1) + 2 ** (h - 1) - 1) / 2 ** (2 * h)


def rm4_coset_union_real_adds(m: int) -> int:
    """Real additions of the alternative RM_4(1, m) ML decoder that searches
    2**m cosets of a length-2**(m+1) binary code: (m+1) * 2**(2m+1).
    Documented for comparison only; not modeled further."""
    if not isinstance(m, int) or isinstance(m, bool) or m < 1:
        raise ValueError(f"m must be an integer >= 1, got {m!r}")
    return (m + 1) * 2 ** (2 * m + 1)


#: Published operation counts of the FHT correlation decoder,
#: {(m, q): (complex-addition units, complex multiplications)}.
FHT_REFERENCE_COUNTS: dict[tuple[int, int], tuple[int, int]] = {
    (4, 2): (32, 0),
    (4, 4): (480, 0),
    (4, 8): (5440, 2720),
    (4, 16): (74880, 56160),
    (5, 2): (80, 0),
    (5, 4): (1984, 0),
    (5, 8): (43648, 21824),
    (5, 16): (1198336, 898752),
    (6, 2): (192, 0),
    (6, 4): (8064, 0),
    (6, 8): (349440, 174720),
    (6, 16): (19173888, 14380416),
}


@dataclass(frozen=True)
class TableRow:
    m: int
    q: int
    adds: Fraction
    mults: int
    ref_adds: Fraction
    ref_mults: int


def _h_of_q(q) -> int:
    if not isinstance(q, int) or isinstance(q, bool) or q < 2 or q & (q - 1):
        raise ValueError(f"q must be a power of two >= 2 for operation counting, got {q!r}")
    return q.bit_length() - 1


def complexity_table(ms, qs) -> list[TableRow]:
    """Predicted and reference counts for every (m, q) in the given grids."""
    rows = []
    for m in ms:
        for q in qs:
            h = _h_of_q(q)
            rows.append(TableRow(
                m=m, q=q,
                adds=predicted_adds(h, m),
                mults=predicted_mults(h, m),
                ref_adds=reference_adds(h, m),
                ref_mults=reference_mults(h, m),
            ))
    return rows


def format_table(rows, csv: bool = False) -> str:
    """Render rows as CSV or as an aligned text table.

    Fractional addition counts are printed as exact rationals like 1/2,
    never as floats.
    """
    header = ["m", "q", "adds", "mults", "ref_adds", "ref_mults"]
    cells = [[str(r.m), str(r.q), str(r.adds), str(r.mults),
              str(r.ref_adds), str(r.ref_mults)] for r in rows]
    if csv:
        return "\n".join([",".join(header)] + [",".join(c) for c in cells])
    widths = [max(len(header[j]), *(len(c[j]) for c in cells)) if cells else len(header[j])
              for j in range(len(header))]
    lines = ["  ".join(header[j].rjust(widths[j]) for j in range(len(header)))]
    for c in cells:
        lines.append("  ".join(c[j].rjust(widths[j]) for j in range(len(header))))
    return "\n".join(lines)
