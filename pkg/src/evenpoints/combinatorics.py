"""Weight vectors, two-row tableaux, and the partition model that counts them.

The degree-d graded piece of the invariant ring attached to a weight vector
w has a basis of semistandard two-row tableaux of shape (d|w|/2, d|w|/2)
and content d*w.  Such a tableau is determined by the content of its first
row: an integer vector nu with 0 <= nu_l <= d*w_l whose prefix sums stay
far enough ahead of the weight prefix sums (see ``prefix_slack``).  All
counting in this module works directly on those first-row content vectors.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import accumulate
from typing import Iterable, Iterator, Sequence

__all__ = [
    "WeightVector",
    "TwoRowTableau",
    "as_weights",
    "is_admissible",
    "admissible_partitions",
    "kostka_bruteforce",
    "tableau_from_partition",
    "partition_of_tableau",
    "monomial_of_tableau",
    "prefix_slack",
    "slack_profile",
    "step_down",
    "step_up",
    "bounded_compositions",
]


@dataclass(frozen=True)
class WeightVector:
    """Positive integer weights w_1..w_n attached to n >= 3 points."""

    entries: tuple[int, ...]

    def __post_init__(self) -> None:
        entries = tuple(int(e) for e in self.entries)
        object.__setattr__(self, "entries", entries)
        if len(entries) < 3:
            raise ValueError("a weight vector needs at least 3 entries")
        if any(e < 1 for e in entries):
            raise ValueError("weights must be positive integers")

    @property
    def n(self) -> int:
        return len(self.entries)

    @property
    def total(self) -> int:
        return sum(self.entries)

    @property
    def even_total(self) -> bool:
        return self.total % 2 == 0

    @property
    def all_even(self) -> bool:
        return all(e % 2 == 0 for e in self.entries)

    @property
    def half(self) -> int:
        if not self.even_total:
            raise ValueError(f"|w| = {self.total} is odd; half-weight undefined")
        return self.total // 2

    def prefix_sums(self) -> tuple[int, ...]:
        """w_1, w_1+w_2, ..., |w|."""
        return tuple(accumulate(self.entries))

    def __iter__(self) -> Iterator[int]:
        return iter(self.entries)

    def __len__(self) -> int:
        return len(self.entries)


def as_weights(w: WeightVector | Sequence[int]) -> WeightVector:
    """Coerce a plain sequence to a WeightVector (no-op if already one)."""
    return w if isinstance(w, WeightVector) else WeightVector(tuple(w))


def prefix_slack(nu: Sequence[int], w: WeightVector | Sequence[int], d: int, i: int) -> int:
    """Slack of the first i columns: 2(nu_1+..+nu_{i-1}) + nu_i - d(w_1+..+w_i).

    Nonnegative slack at every position is exactly the condition for the
    two-row filling determined by nu to be semistandard.  Index i is
    1-based; out-of-range indices raise IndexError.
    """
    w = as_weights(w)
    if not 1 <= i <= w.n:
        raise IndexError(f"position {i} outside 1..{w.n}")
    head = sum(nu[: i - 1])
    return 2 * head + nu[i - 1] - d * sum(w.entries[:i])


def slack_profile(nu: Sequence[int], w: WeightVector | Sequence[int], d: int) -> tuple[int, ...]:
    """All prefix slacks (prefix_slack at i = 1..n) in one pass."""
    w = as_weights(w)
    out = []
    head = 0
    wsum = 0
    for nu_i, w_i in zip(nu, w.entries):
        wsum += d * w_i
        out.append(2 * head + nu_i - wsum)
        head += nu_i
    return tuple(out)


def is_admissible(nu: Sequence[int], w: WeightVector | Sequence[int], d: int) -> bool:
    """True iff nu is the first-row content of a semistandard tableau.

    Checks the box bounds 0 <= nu_l <= d*w_l, the total d|w|/2, and
    nonnegative prefix slack at every position.
    """
    w = as_weights(w)
    if len(nu) != w.n:
        return False
    if (d * w.total) % 2 != 0:
        return False
    if sum(nu) != d * w.total // 2:
        return False
    if any(not 0 <= nu_l <= d * w_l for nu_l, w_l in zip(nu, w.entries)):
        return False
    return all(f >= 0 for f in slack_profile(nu, w, d))


def _scan_admissible(w: WeightVector, d: int, out: list[tuple[int, ...]] | None) -> int:
    """DFS over admissible first-row contents in lexicographic order.

    Returns the count; appends tuples to ``out`` when given.  Prunes with
    the box bounds, remaining capacity, and the slack lower bound, so the
    number of visited nodes stays close to the number of solutions.
    """
    n = w.n
    if (d * w.total) % 2 != 0:
        return 0
    target = d * w.total // 2
    caps = [d * e for e in w.entries]
    tail_cap = [0] * (n + 1)
    for l in range(n - 1, -1, -1):
        tail_cap[l] = tail_cap[l + 1] + caps[l]
    wpre = [d * s for s in w.prefix_sums()]

    prefix: list[int] = []
    count = 0

    def rec(l: int, acc: int) -> None:
        nonlocal count
        if l == n:
            count += 1
            if out is not None:
                out.append(tuple(prefix))
            return
        rem = target - acc
        lo = max(0, wpre[l] - 2 * acc, rem - tail_cap[l + 1])
        hi = min(caps[l], rem)
        for v in range(lo, hi + 1):
            prefix.append(v)
            rec(l + 1, acc + v)
            prefix.pop()

    rec(0, 0)
    return count


def admissible_partitions(w: WeightVector | Sequence[int], d: int) -> list[tuple[int, ...]]:
    """All admissible first-row contents for (w, d), lexicographically sorted.

    Empty when d|w| is odd (no tableau of half-integral size exists).
    """
    w = as_weights(w)
    if d < 1:
        raise ValueError("d must be >= 1")
    out: list[tuple[int, ...]] = []
    _scan_admissible(w, d, out)
    return out


def kostka_bruteforce(w: WeightVector | Sequence[int], d: int) -> int:
    """Count semistandard two-row tableaux of content d*w by direct enumeration.

    This is the combinatorial oracle: no closed formula, just the DFS count
    of admissible first-row contents, which are in bijection with tableaux.
    """
    w = as_weights(w)
    if d < 1:
        raise ValueError("d must be >= 1")
    return _scan_admissible(w, d, None)


@dataclass(frozen=True)
class TwoRowTableau:
    """A filling of the two-row shape (k, k) with values in 1..n."""

    top: tuple[int, ...]
    bottom: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "top", tuple(self.top))
        object.__setattr__(self, "bottom", tuple(self.bottom))
        if len(self.top) != len(self.bottom):
            raise ValueError("rows must have equal length")

    @property
    def shape(self) -> tuple[int, int]:
        k = len(self.top)
        return (k, k)

    def is_semistandard(self) -> bool:
        """Rows weakly increasing, every column strictly increasing."""
        rows_ok = all(a <= b for a, b in zip(self.top, self.top[1:])) and all(
            a <= b for a, b in zip(self.bottom, self.bottom[1:])
        )
        cols_ok = all(t < b for t, b in zip(self.top, self.bottom))
        return rows_ok and cols_ok

    def content(self, n: int) -> tuple[int, ...]:
        """Occurrence count of each value 1..n over both rows."""
        counts = [0] * n
        for v in self.top + self.bottom:
            counts[v - 1] += 1
        return tuple(counts)


def tableau_from_partition(
    nu: Sequence[int], w: WeightVector | Sequence[int], d: int
) -> TwoRowTableau:
    """Build the semistandard tableau whose first row has content nu.

    The second row is forced: it holds the d*w_i - nu_i remaining copies of
    each value i.  Rejects nu that is not admissible for (w, d).
    """
    w = as_weights(w)
    if not is_admissible(nu, w, d):
        raise ValueError(f"{tuple(nu)} is not admissible for w={w.entries}, d={d}")
    top: list[int] = []
    bottom: list[int] = []
    for i, (nu_i, w_i) in enumerate(zip(nu, w.entries), start=1):
        top.extend([i] * nu_i)
        bottom.extend([i] * (d * w_i - nu_i))
    return TwoRowTableau(tuple(top), tuple(bottom))


def partition_of_tableau(tableau: TwoRowTableau, n: int) -> tuple[int, ...]:
    """First-row content of a tableau, as a length-n vector."""
    counts = [0] * n
    for v in tableau.top:
        counts[v - 1] += 1
    return tuple(counts)


def monomial_of_tableau(tableau: TwoRowTableau, n: int) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """Exponent vectors (x-exponents, y-exponents) of the tableau monomial.

    Value i in the top row contributes to x_i, in the bottom row to y_i.
    Distinct semistandard tableaux of fixed shape and content give distinct
    monomials, which is what makes the monomial shadow a faithful basis.
    """
    x = [0] * n
    y = [0] * n
    for v in tableau.top:
        x[v - 1] += 1
    for v in tableau.bottom:
        y[v - 1] += 1
    return tuple(x), tuple(y)


def _check_box(nu: Sequence[int], w: WeightVector, d: int) -> None:
    if len(nu) != w.n:
        raise ValueError(f"expected {w.n} entries, got {len(nu)}")
    if any(not 0 <= nu_l <= d * w_l for nu_l, w_l in zip(nu, w.entries)):
        raise ValueError(f"{tuple(nu)} violates the box bounds 0 <= nu_l <= d*w_l")


def step_down(
    nu: Sequence[int], w: WeightVector | Sequence[int], d: int
) -> tuple[int, ...]:
    """Decrement nu at the last position of minimal prefix slack.

    Defined on content vectors of total d|w|/2 with negative slack
    somewhere (the non-semistandard ones); lands on total d|w|/2 - 1.
    Mutually inverse with ``step_up``.
    """
    w = as_weights(w)
    _check_box(nu, w, d)
    if sum(nu) != d * w.total // 2 or (d * w.total) % 2 != 0:
        raise ValueError("step_down expects total d|w|/2 (with d|w| even)")
    slacks = slack_profile(nu, w, d)
    low = min(slacks)
    if low >= 0:
        raise ValueError("step_down needs some negative prefix slack")
    pos = max(i for i, f in enumerate(slacks) if f == low)
    if nu[pos] <= 0:
        raise ArithmeticError("minimal-slack position has no unit to remove")
    out = list(nu)
    out[pos] -= 1
    return tuple(out)


def step_up(
    nu: Sequence[int], w: WeightVector | Sequence[int], d: int
) -> tuple[int, ...]:
    """Increment nu at the first position of minimal prefix slack.

    Defined on content vectors of total d|w|/2 - 1; inverse of ``step_down``.
    """
    w = as_weights(w)
    _check_box(nu, w, d)
    if (d * w.total) % 2 != 0 or sum(nu) != d * w.total // 2 - 1:
        raise ValueError("step_up expects total d|w|/2 - 1 (with d|w| even)")
    slacks = slack_profile(nu, w, d)
    low = min(slacks)
    pos = min(i for i, f in enumerate(slacks) if f == low)
    if nu[pos] >= d * w.entries[pos]:
        raise ArithmeticError("minimal-slack position is already at its bound")
    out = list(nu)
    out[pos] += 1
    return tuple(out)


def bounded_compositions(bounds: Sequence[int | None], k: int) -> Iterator[tuple[int, ...]]:
    """Nonnegative integer vectors with the given sum and per-entry bounds.

    ``bounds[i] is None`` leaves entry i unconstrained.  Yields in
    lexicographic order; empty for negative k.
    """
    n = len(bounds)
    if k < 0:
        return
    prefix: list[int] = []

    def rec(l: int, rem: int) -> Iterator[tuple[int, ...]]:
        if l == n:
            if rem == 0:
                yield tuple(prefix)
            return
        cap = rem if bounds[l] is None else min(bounds[l], rem)
        tail_unbounded = any(b is None for b in bounds[l + 1 :])
        for v in range(0, cap + 1):
            rest = rem - v
            if not tail_unbounded:
                tail_cap = sum(b for b in bounds[l + 1 :])  # type: ignore[misc]
                if rest > tail_cap:
                    continue
            prefix.append(v)
            yield from rec(l + 1, rest)
            prefix.pop()

    yield from rec(0, k)
