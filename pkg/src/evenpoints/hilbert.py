"""Closed formulas for the graded dimensions, degree, and series identities.

Everything here is exact: integer arithmetic throughout, with rationals
only inside the polynomial interpolation.  The subset sums that drive the
inclusion-exclusion formulas walk all 2^n subsets of the weight indices,
so callers hit a guard (default cap n <= 24) before committing to an
exponential enumeration; pass ``subset_cap=None`` to override.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Mapping, Sequence

from .combinatorics import WeightVector, as_weights

__all__ = [
    "SUBSET_CAP",
    "GradedSeries",
    "RationalHilbertForm",
    "binom_count",
    "bounded_composition_count",
    "hilbert_function",
    "hilbert_series",
    "hilbert_polynomial",
    "degree",
    "rational_form",
    "koszul_numerical_check",
    "multigraded_hilbert",
    "grassmannian_identity_check",
    "cancellation_identity_check",
]

SUBSET_CAP = 24


def binom_count(a: int, b: int) -> int:
    """Counting binomial: C(a, b) when 0 <= b <= a, otherwise 0.

    This is the convention under which the inclusion-exclusion identities
    below hold verbatim; the polynomial extension of C(., b) is confined to
    ``hilbert_polynomial`` via interpolation.
    """
    if b < 0 or a < b:
        return 0
    return math.comb(a, b)


def _require_cap(n: int, subset_cap: int | None) -> None:
    if subset_cap is not None and n > subset_cap:
        raise ValueError(
            f"refusing to enumerate 2^{n} subsets (cap {subset_cap}); "
            "pass subset_cap=None to force"
        )


def _subset_terms(entries: Sequence[int]) -> Iterator[tuple[int, int]]:
    """Yield (|J|, sum over J) for every subset J, via Gray-code updates.

    Each step flips a single index in or out, so the running size and sum
    are maintained in O(1) per subset.  Order is Gray-code order; all users
    aggregate over the full walk, so only determinism matters.
    """
    n = len(entries)
    size = 0
    total = 0
    yield (0, 0)
    prev = 0
    for k in range(1, 1 << n):
        gray = k ^ (k >> 1)
        bit = gray ^ prev
        j = bit.bit_length() - 1
        if gray & bit:
            size += 1
            total += entries[j]
        else:
            size -= 1
            total -= entries[j]
        prev = gray
        yield (size, total)


def bounded_composition_count(
    n: int,
    k: int,
    bounds: Mapping[int, int] | Sequence[int | None] | None = None,
    *,
    subset_cap: int | None = SUBSET_CAP,
) -> int:
    """Number of nonnegative integer n-vectors with sum k and the given bounds.

    ``bounds`` maps 1-based positions to upper bounds (a sequence of
    length n with None for unconstrained entries also works).  Computed by
    inclusion-exclusion over the constrained positions: each subset J
    contributes (-1)^|J| * C(n-1+k - sum_{j in J}(bound_j + 1), n-1).
    """
    if bounds is None:
        values: list[int] = []
    elif isinstance(bounds, Mapping):
        for i in bounds:
            if not 1 <= i <= n:
                raise ValueError(f"bound position {i} outside 1..{n}")
        values = [bounds[i] for i in sorted(bounds)]
    else:
        if len(bounds) != n:
            raise ValueError(f"expected {n} bounds, got {len(bounds)}")
        values = [b for b in bounds if b is not None]
    _require_cap(len(values), subset_cap)
    acc = 0
    for size, shifted in _subset_terms([b + 1 for b in values]):
        sign = -1 if size % 2 else 1
        acc += sign * binom_count(n - 1 + k - shifted, n - 1)
    return acc


def _graded_dimensions(
    w: WeightVector, dmax: int, subset_cap: int | None
) -> list[int]:
    """h(0..dmax) in a single pass over the subsets of weight indices."""
    n = w.n
    total = w.total
    _require_cap(n, subset_cap)
    terms = [
        (size, wsum)
        for size, wsum in _subset_terms(w.entries)
        if 2 * wsum < total
    ]
    out = []
    for d in range(dmax + 1):
        if (d * total) % 2 != 0:
            out.append(0)
            continue
        dk = d * total // 2
        acc = 0
        for size, wsum in terms:
            top = dk - d * wsum + n - size - 2
            c = binom_count(top, n - 2)
            acc += -c if size % 2 else c
        out.append(acc)
    return out


def hilbert_function(
    w: WeightVector | Sequence[int],
    d: int,
    *,
    subset_cap: int | None = SUBSET_CAP,
) -> int:
    """Dimension of the degree-d graded piece of the invariant ring.

    Equals the stretched Kostka number K(d*(|w|/2, |w|/2), d*w): zero when
    d|w| is odd, and otherwise

        sum over J with |w_J| < |w|/2 of
            (-1)^|J| * C(d(|w|/2 - |w_J|) + n - |J| - 2, n - 2).

    Agrees with ``kostka_bruteforce`` for d >= 1 and gives h(0) = 1.
    """
    if d < 0:
        raise ValueError("d must be >= 0")
    return _hf_single(as_weights(w), d, subset_cap)


def _hf_single(w: WeightVector, d: int, subset_cap: int | None) -> int:
    n = w.n
    total = w.total
    if (d * total) % 2 != 0:
        return 0
    _require_cap(n, subset_cap)
    dk = d * total // 2
    acc = 0
    for size, wsum in _subset_terms(w.entries):
        if 2 * wsum >= total:
            continue
        top = dk - d * wsum + n - size - 2
        c = binom_count(top, n - 2)
        acc += -c if size % 2 else c
    return acc


@dataclass(frozen=True)
class GradedSeries:
    """Exact integer coefficients of a graded dimension series, degrees 0..D."""

    coeffs: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "coeffs", tuple(int(c) for c in self.coeffs))
        if not self.coeffs:
            raise ValueError("a series needs at least the degree-0 coefficient")

    @property
    def truncation(self) -> int:
        return len(self.coeffs) - 1

    def __getitem__(self, d: int) -> int:
        return self.coeffs[d]

    def __len__(self) -> int:
        return len(self.coeffs)

    def __iter__(self):
        return iter(self.coeffs)


def hilbert_series(
    w: WeightVector | Sequence[int],
    dmax: int,
    *,
    subset_cap: int | None = SUBSET_CAP,
) -> GradedSeries:
    """The series h(0), h(1), ..., h(dmax) as a GradedSeries."""
    if dmax < 0:
        raise ValueError("dmax must be >= 0")
    w = as_weights(w)
    return GradedSeries(tuple(_graded_dimensions(w, dmax, subset_cap)))


@dataclass(frozen=True)
class RationalHilbertForm:
    """A series written as numerator(z) / (1 - z)^e with integer numerator."""

    numerator: tuple[int, ...]
    denominator_exponent: int

    def expand(self, dmax: int) -> GradedSeries:
        """Taylor coefficients of numerator/(1-z)^e up to degree dmax."""
        e = self.denominator_exponent
        coeffs = [
            sum(
                self.numerator[i] * binom_count(d - i + e - 1, e - 1)
                for i in range(min(d, len(self.numerator) - 1) + 1)
            )
            for d in range(dmax + 1)
        ]
        return GradedSeries(tuple(coeffs))


def rational_form(series: GradedSeries, e: int) -> RationalHilbertForm:
    """Clear (1 - z)^e from a truncated series and return the numerator.

    Multiplies the coefficients by (1 - z)^e and strips trailing zeros.
    If the last computed coefficient is nonzero there is no evidence the
    numerator is a polynomial at this truncation, which means the chosen
    denominator exponent is wrong for this series; that raises.
    """
    if e < 1:
        raise ValueError("denominator exponent must be >= 1")
    dmax = series.truncation
    if dmax < e:
        raise ValueError(f"need truncation >= {e}, have {dmax}")
    prod = [
        sum(
            (-1) ** i * math.comb(e, i) * series[d - i]
            for i in range(min(d, e) + 1)
        )
        for d in range(dmax + 1)
    ]
    last = max((d for d, c in enumerate(prod) if c != 0), default=0)
    if last == dmax and prod[last] != 0:
        raise ValueError(
            f"numerator has a nonzero tail at degree {dmax}; "
            f"(1-z)^{e} looks like the wrong denominator for this series"
        )
    return RationalHilbertForm(tuple(prod[: last + 1]), e)


def _interpolate(values: Sequence[int]) -> list[Fraction]:
    """Coefficients (ascending) of the polynomial through (i, values[i])."""
    m = len(values) - 1
    coeffs = [Fraction(0)] * (m + 1)
    for i, v in enumerate(values):
        if v == 0:
            continue
        basis = [Fraction(1)]
        denom = 1
        for j in range(m + 1):
            if j == i:
                continue
            # multiply basis by (x - j)
            nxt = [Fraction(0)] * (len(basis) + 1)
            for k, c in enumerate(basis):
                nxt[k] += c * (-j)
                nxt[k + 1] += c
            basis = nxt
            denom *= i - j
        scale = Fraction(v, denom)
        for k, c in enumerate(basis):
            coeffs[k] += scale * c
    return coeffs


def _poly_eval(coeffs: Sequence[Fraction], x: int) -> Fraction:
    acc = Fraction(0)
    for c in reversed(coeffs):
        acc = acc * x + c
    return acc


def hilbert_polynomial(
    w: WeightVector | Sequence[int],
    *,
    subset_cap: int | None = SUBSET_CAP,
) -> list[Fraction]:
    """Exact rational coefficients (ascending) of the degree polynomial in d.

    The graded dimension h(d) is a polynomial in d of degree at most n-3;
    this interpolates through h(0..n-3) and then verifies the result
    against h(n-2) and h(n-1), so a non-polynomial profile (degenerate
    weights) surfaces as an error rather than a silently wrong answer.
    """
    w = as_weights(w)
    if not w.even_total:
        raise ValueError("|w| must be even for a polynomial graded dimension")
    n = w.n
    values = _graded_dimensions(w, n - 1, subset_cap)
    coeffs = _interpolate(values[: n - 2])
    for d in (n - 2, n - 1):
        if _poly_eval(coeffs, d) != values[d]:
            raise ArithmeticError(
                f"interpolated polynomial disagrees with h({d}) for w={w.entries}; "
                "weights look degenerate (or a formula bug)"
            )
    return coeffs


def degree(
    w: WeightVector | Sequence[int],
    *,
    subset_cap: int | None = SUBSET_CAP,
) -> int:
    """Degree of the weighted quotient, by the closed subset-sum formula.

    Computes
        1/(n-2) * sum over J with |w_J| < |w|/2 of
            (-1)^|J| (|w|/2 - |w_J|)^{n-3} * sum_{i=0}^{n-3} (n - |J| - 2 - i)
    with the division performed last and checked exact.  Non-exact division
    or a nonpositive value means the weight vector is degenerate (some
    subset carries half or more of the total weight in a collapsing way).
    """
    w = as_weights(w)
    half = w.half  # raises for odd totals
    n = w.n
    _require_cap(n, subset_cap)
    acc = 0
    for size, wsum in _subset_terms(w.entries):
        if wsum >= half:
            continue
        inner = (n - 2) * (n - size - 2) - (n - 3) * (n - 2) // 2
        term = (half - wsum) ** (n - 3) * inner
        acc += -term if size % 2 else term
    q, r = divmod(acc, n - 2)
    if r != 0 or q <= 0:
        raise ArithmeticError(
            f"degree formula gave {acc}/{n - 2} for w={w.entries}; "
            "this signals a degenerate weight vector"
        )
    return q


def koszul_numerical_check(
    w: WeightVector | Sequence[int],
    dmax: int,
    *,
    subset_cap: int | None = SUBSET_CAP,
) -> tuple[GradedSeries, int | None]:
    """Invert the alternating-sign series H(-z) and look for negative terms.

    Returns the coefficients of H(-z)^{-1} up to degree dmax together with
    the first index carrying a negative coefficient, if any.  A negative
    coefficient certifies the graded ring is not Koszul; all-positive
    output to any finite depth is inconclusive.
    """
    if dmax < 1:
        raise ValueError("dmax must be >= 1")
    w = as_weights(w)
    hs = _graded_dimensions(w, dmax, subset_cap)
    signed = [(-1) ** d * h for d, h in enumerate(hs)]
    inv = [1]
    for d in range(1, dmax + 1):
        inv.append(-sum(signed[i] * inv[d - i] for i in range(1, d + 1)))
    first_negative = next((d for d, c in enumerate(inv) if c < 0), None)
    return GradedSeries(tuple(inv)), first_negative


def multigraded_hilbert(
    wvec: Sequence[int],
    *,
    subset_cap: int | None = SUBSET_CAP,
) -> int:
    """Dimension of the multidegree-w piece of the two-row tableau algebra.

    Zero when |w| is odd or some entry exceeds |w|/2 (outside the support);
    otherwise the same inclusion-exclusion sum as ``hilbert_function`` at
    d = 1.  Entries may be zero here, unlike in a WeightVector.
    """
    entries = tuple(int(v) for v in wvec)
    if any(v < 0 for v in entries):
        raise ValueError("multidegrees must be nonnegative")
    n = len(entries)
    total = sum(entries)
    if total % 2 != 0:
        return 0
    if total == 0:
        return 1  # the empty tableau
    half = total // 2
    if any(v > half for v in entries):
        return 0
    _require_cap(n, subset_cap)
    acc = 0
    for size, wsum in _subset_terms(entries):
        if wsum >= half:
            continue
        c = binom_count(half - wsum + n - size - 2, n - 2)
        acc += -c if size % 2 else c
    return acc


def _compositions(total: int, parts: int) -> Iterator[tuple[int, ...]]:
    if parts == 1:
        yield (total,)
        return
    for v in range(total + 1):
        for rest in _compositions(total - v, parts - 1):
            yield (v,) + rest


def grassmannian_identity_check(n: int, d: int) -> bool:
    """Check that the multigraded dimensions refine the Plucker dimension count.

    The degree-d graded dimension of the two-row Plucker algebra on n
    columns is C(n+d-1,d)^2 - C(n+d,d+1)C(n+d-2,d-1); summing the
    multigraded dimensions over all multidegrees of total 2d must
    reproduce it exactly.
    """
    if n < 2 or d < 1:
        raise ValueError("need n >= 2 and d >= 1")
    lhs = math.comb(n + d - 1, d) ** 2 - math.comb(n + d, d + 1) * math.comb(
        n + d - 2, d - 1
    )
    rhs = sum(multigraded_hilbert(wvec) for wvec in _compositions(2 * d, n))
    return lhs == rhs


def cancellation_identity_check(
    w: WeightVector | Sequence[int],
    *,
    subset_cap: int | None = SUBSET_CAP,
) -> bool:
    """Check the top-degree cancellation over ALL index subsets.

    The quotient has dimension n-3, so the (n-2)-nd power sum
    sum over all J of (-1)^|J| (|w|/2 - |w_J|)^{n-2} must vanish exactly.
    """
    w = as_weights(w)
    half = w.half
    n = w.n
    _require_cap(n, subset_cap)
    acc = 0
    for size, wsum in _subset_terms(w.entries):
        term = (half - wsum) ** (n - 2)
        acc += -term if size % 2 else term
    return acc == 0
