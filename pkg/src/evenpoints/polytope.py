"""Exact H-form polytopes behind the tableau count and their normality.

Two models of the same count live here.  The content polytope sits in R^n
and its level-d lattice points are the admissible first-row contents.  The
triangle polytope sits in R^{n-3} with the doubled lattice (2Z)^{n-3}: its
points are chains u(2)..u(n-2) forming triangles with consecutive weights.
An explicit affine map identifies the two point sets level by level.

All membership tests are integer comparisons; a polytope stores level-1
data and scales offsets by the level, so dilations never leave exact
arithmetic.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import floor
from typing import Sequence

from .combinatorics import WeightVector, as_weights

__all__ = [
    "HPolytope",
    "content_polytope",
    "triangle_polytope",
    "lattice_points",
    "to_triangle_coords",
    "from_triangle_coords",
    "splitting_signs",
    "even_round",
    "normal_decompose",
    "balanced_pair",
    "normality_check",
    "NormalityReport",
]

LATTICE_STEP = {"unit": 1, "even": 2}


@dataclass(frozen=True)
class HPolytope:
    """A rational polytope as integral equalities/inequalities plus a box.

    A constraint (a, b) means a.x = b (equality) or a.x >= b (inequality)
    at level 1; at level d the offset b scales to d*b.  ``box`` holds
    level-1 per-coordinate bounds used to seed lattice-point enumeration,
    and ``lattice`` names the reference lattice ("unit" for Z^k, "even"
    for (2Z)^k).
    """

    dim: int
    equalities: tuple[tuple[tuple[int, ...], int], ...]
    inequalities: tuple[tuple[tuple[int, ...], int], ...]
    lattice: str
    box: tuple[tuple[int, int], ...]

    def __post_init__(self) -> None:
        if self.lattice not in LATTICE_STEP:
            raise ValueError(f"unknown lattice {self.lattice!r}")
        if len(self.box) != self.dim:
            raise ValueError("box must bound every coordinate")

    @property
    def step(self) -> int:
        return LATTICE_STEP[self.lattice]

    def contains(self, point: Sequence[int], level: int = 1) -> bool:
        """Exact membership of an integer point in the level-d dilate."""
        if len(point) != self.dim:
            return False
        for a, b in self.equalities:
            if sum(c * x for c, x in zip(a, point)) != level * b:
                return False
        for a, b in self.inequalities:
            if sum(c * x for c, x in zip(a, point)) < level * b:
                return False
        return True

    def on_lattice(self, point: Sequence[int]) -> bool:
        step = self.step
        return all(x % step == 0 for x in point)

    def to_json_dict(self) -> dict:
        """H-representation as plain data: {dim, lattice, equalities, inequalities}.

        Each constraint is encoded as [a_1, ..., a_k, b] with the same
        level-1 semantics as ``contains``.
        """
        return {
            "dim": self.dim,
            "lattice": self.lattice,
            "equalities": [list(a) + [b] for a, b in self.equalities],
            "inequalities": [list(a) + [b] for a, b in self.inequalities],
        }


def _unit(n: int, i: int, scale: int = 1) -> tuple[int, ...]:
    v = [0] * n
    v[i] = scale
    return tuple(v)


def content_polytope(w: WeightVector | Sequence[int]) -> HPolytope:
    """Polytope of first-row content vectors, in ambient R^n.

    Constraints at level 1: sum nu = |w|/2, the box 0 <= nu_l <= w_l, and
    the prefix inequalities 2(nu_1+..+nu_{l-1}) + nu_l >= w_1+..+w_l.
    Level-d membership is the d-scaled system, so the level-d lattice
    points are exactly the admissible partitions for (w, d).  For odd |w|
    the sum hyperplane is stored doubled (2.nu = |w|) to keep the data
    integral; the polytope then has no lattice points at odd d|w|.
    """
    w = as_weights(w)
    n = w.n
    ineqs: list[tuple[tuple[int, ...], int]] = []
    wpre = w.prefix_sums()
    for l in range(n):
        ineqs.append((_unit(n, l), 0))
        ineqs.append((_unit(n, l, -1), -w.entries[l]))
        row = tuple(2 if i < l else (1 if i == l else 0) for i in range(n))
        ineqs.append((row, wpre[l]))
    if w.even_total:
        eqs = (((1,) * n, w.half),)
    else:
        eqs = (((2,) * n, w.total),)
    box = tuple((0, w_l) for w_l in w.entries)
    return HPolytope(n, eqs, tuple(ineqs), "unit", box)


def _triangle_rows(
    x: tuple[tuple[int, ...], int],
    y: tuple[tuple[int, ...], int],
    z: tuple[tuple[int, ...], int],
) -> list[tuple[tuple[int, ...], int]]:
    """The three triangle inequalities for affine forms (a, c): a.u + c*d."""
    out = []
    for p, q, r in ((x, y, z), (x, z, y), (y, z, x)):
        coeffs = tuple(pa + qa - ra for pa, qa, ra in zip(p[0], q[0], r[0]))
        out.append((coeffs, r[1] - p[1] - q[1]))
    return out


def triangle_polytope(w: WeightVector | Sequence[int]) -> HPolytope:
    """Chain polytope of triangle inequalities in R^{n-3}, lattice (2Z)^{n-3}.

    Coordinates are u(2), ..., u(n-2); each consecutive triple
    (w_1, w_2, u(2)), (u(i-1), w_i, u(i)), (u(n-2), w_{n-1}, w_n) must
    satisfy the triangle inequalities.  Requires every weight even and
    n >= 4 (for n = 3 there is no coordinate left to constrain).
    """
    w = as_weights(w)
    if not w.all_even:
        raise ValueError("triangle polytope is defined for all-even weights")
    if w.n < 4:
        raise ValueError("triangle polytope needs n >= 4 (ambient dimension n - 3 >= 1)")
    n = w.n
    dim = n - 3
    zero = (0,) * dim

    def const(c: int) -> tuple[tuple[int, ...], int]:
        return (zero, c)

    def coord(l: int) -> tuple[tuple[int, ...], int]:
        # u(l) lives at index l - 2
        return (_unit(dim, l - 2), 0)

    ineqs: list[tuple[tuple[int, ...], int]] = []
    ineqs += _triangle_rows(const(w.entries[0]), const(w.entries[1]), coord(2))
    for i in range(3, n - 1):
        ineqs += _triangle_rows(coord(i - 1), const(w.entries[i - 1]), coord(i))
    ineqs += _triangle_rows(coord(n - 2), const(w.entries[n - 2]), const(w.entries[n - 1]))

    wpre = w.prefix_sums()
    box = tuple(
        (0, min(wpre[l - 1], w.total - wpre[l - 1])) for l in range(2, n - 1)
    )
    return HPolytope(dim, (), tuple(ineqs), "even", box)


def lattice_points(poly: HPolytope, level: int) -> list[tuple[int, ...]]:
    """All lattice points of the level-d dilate, lexicographically sorted.

    Depth-first walk over the scaled bounding box with exact interval
    pruning on every constraint; at a leaf the pruning test degenerates to
    the exact membership test, so no separate filtering pass is needed.
    """
    if level < 0:
        raise ValueError("level must be >= 0")
    dim = poly.dim
    step = poly.step
    ranges: list[range] = []
    for lo, hi in poly.box:
        lo_d, hi_d = level * lo, level * hi
        if lo_d > hi_d:
            raise ValueError("empty box; polytope data looks unbounded or inverted")
        start = lo_d if lo_d % step == 0 else lo_d + (step - lo_d % step)
        ranges.append(range(start, hi_d + 1, step))

    constraints = [(a, b, True) for a, b in poly.equalities] + [
        (a, b, False) for a, b in poly.inequalities
    ]
    # suffix min/max of each constraint's contribution from coordinates >= k
    suffix: list[tuple[list[int], list[int]]] = []
    for a, _, _ in constraints:
        lo_s = [0] * (dim + 1)
        hi_s = [0] * (dim + 1)
        for k in range(dim - 1, -1, -1):
            r = ranges[k]
            vals = (a[k] * r[0], a[k] * r[-1]) if len(r) else (0, 0)
            lo_s[k] = lo_s[k + 1] + min(vals)
            hi_s[k] = hi_s[k + 1] + max(vals)
        suffix.append((lo_s, hi_s))

    if any(len(r) == 0 for r in ranges):
        return []

    out: list[tuple[int, ...]] = []
    point: list[int] = []
    partial = [0] * len(constraints)

    def feasible(k: int) -> bool:
        for ci, (a, b, is_eq) in enumerate(constraints):
            lo_s, hi_s = suffix[ci]
            lo_v = partial[ci] + lo_s[k]
            hi_v = partial[ci] + hi_s[k]
            bound = level * b
            if is_eq:
                if not lo_v <= bound <= hi_v:
                    return False
            elif hi_v < bound:
                return False
        return True

    def rec(k: int) -> None:
        if not feasible(k):
            return
        if k == dim:
            out.append(tuple(point))
            return
        for x in ranges[k]:
            point.append(x)
            for ci, (a, _, _) in enumerate(constraints):
                partial[ci] += a[k] * x
            rec(k + 1)
            for ci, (a, _, _) in enumerate(constraints):
                partial[ci] -= a[k] * x
            point.pop()

    rec(0)
    return out


def to_triangle_coords(
    nu: Sequence[int], w: WeightVector | Sequence[int], level: int
) -> tuple[int, ...]:
    """Map a level-d content vector to its triangle-chain coordinates.

    u(l) = 2(nu_2 + ... + nu_l) - d(w_2 + ... + w_l - w_1) for 2 <= l <= n-2.
    This is the lattice isomorphism between the two polytope models.
    """
    w = as_weights(w)
    if len(nu) != w.n:
        raise ValueError(f"expected {w.n} entries, got {len(nu)}")
    out = []
    acc = 0
    wacc = 0
    for l in range(2, w.n - 1):
        acc += nu[l - 1]
        wacc += w.entries[l - 1]
        out.append(2 * acc - level * (wacc - w.entries[0]))
    return tuple(out)


def from_triangle_coords(
    u: Sequence[int], w: WeightVector | Sequence[int], level: int
) -> tuple[int, ...]:
    """Inverse of ``to_triangle_coords``: rebuild the full content vector.

    nu_2 = (u(2) - d w_1 + d w_2)/2 and nu_l = (u(l) - u(l-1) + d w_l)/2;
    the remaining entries nu_1 = d w_1, nu_n = 0, and nu_{n-1} are forced
    by the total.  A parity failure means u is off the doubled lattice.
    """
    w = as_weights(w)
    n = w.n
    if len(u) != n - 3:
        raise ValueError(f"expected {n - 3} coordinates, got {len(u)}")
    nu = [0] * n
    nu[0] = level * w.entries[0]
    for l in range(2, n - 1):
        if l == 2:
            delta = u[0] - level * w.entries[0] + level * w.entries[1]
        else:
            delta = u[l - 2] - u[l - 3] + level * w.entries[l - 1]
        if delta % 2 != 0:
            raise ValueError(f"coordinate u({l}) violates the doubled-lattice parity")
        nu[l - 1] = delta // 2
    nu[n - 2] = level * w.total // 2 - sum(nu)
    return tuple(nu)


def splitting_signs(
    r: Sequence[int], m: int, w: WeightVector | Sequence[int]
) -> tuple[int, ...]:
    """Sign pattern (+1/-1 per coordinate) used to peel one summand off r.

    Consecutive signs flip exactly when r(i)/m and r(i+1)/m are both odd
    integers summing to the weight between them; the pattern is unique up
    to a global flip and is normalized to start with +1.
    """
    w = as_weights(w)
    dim = w.n - 3
    if len(r) != dim:
        raise ValueError(f"expected {dim} coordinates, got {len(r)}")
    if m < 1:
        raise ValueError("level m must be >= 1")

    def odd_quotient(value: int) -> bool:
        return value % m == 0 and (value // m) % 2 != 0

    signs = [1]
    for i in range(dim - 1):
        flip = (
            odd_quotient(r[i])
            and odd_quotient(r[i + 1])
            and r[i] + r[i + 1] == m * w.entries[i + 2]
        )
        signs.append(-signs[-1] if flip else signs[-1])
    return tuple(signs)


def even_round(x: int | Fraction, sign: int) -> int:
    """Round to the nearest even integer, breaking odd-integer ties by sign.

    Odd integers sit exactly between two even neighbours; sign +1 rounds
    them up (2a+1 -> 2a+2) and sign -1 rounds them down (2a+1 -> 2a).
    All other rationals have a unique nearest even integer.
    """
    if sign not in (1, -1):
        raise ValueError("sign must be +1 or -1")
    q = Fraction(x) / 2
    base = floor(q)
    rem = q - base
    if rem > Fraction(1, 2) or (rem == Fraction(1, 2) and sign == 1):
        return 2 * base + 2
    return 2 * base


def _peel(r: Sequence[int], m: int, w: WeightVector, poly: HPolytope) -> tuple[int, ...]:
    signs = splitting_signs(r, m, w)
    u = tuple(even_round(Fraction(c, m), s) for c, s in zip(r, signs))
    if not poly.contains(u, 1) or not poly.on_lattice(u):
        raise ArithmeticError(
            f"peeled point {u} escaped the level-1 polytope for w={w.entries}; "
            "this would falsify normality"
        )
    return u


def normal_decompose(
    r: Sequence[int], m: int, w: WeightVector | Sequence[int]
) -> list[tuple[int, ...]]:
    """Write a level-m lattice point as a sum of m level-1 lattice points.

    Recursively peels off the even-rounded point u = e(r/m) with the
    splitting sign pattern and verifies each remainder stays inside the
    appropriate dilate.  Any verification failure raises, since the
    decomposition is guaranteed to exist for even weights.
    """
    w = as_weights(w)
    poly = triangle_polytope(w)
    r = tuple(r)
    if m < 1:
        raise ValueError("level m must be >= 1")
    if not poly.contains(r, m) or not poly.on_lattice(r):
        raise ValueError(f"{r} is not a doubled-lattice point of the level-{m} dilate")
    parts: list[tuple[int, ...]] = []
    current = r
    for level in range(m, 1, -1):
        u = _peel(current, level, w, poly)
        current = tuple(c - uc for c, uc in zip(current, u))
        if not poly.contains(current, level - 1) or not poly.on_lattice(current):
            raise ArithmeticError(
                f"remainder {current} escaped the level-{level - 1} dilate; "
                "this would falsify normality"
            )
        parts.append(u)
    parts.append(current)
    return parts


def balanced_pair(
    v: Sequence[int], v2: Sequence[int], w: WeightVector | Sequence[int]
) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """Rewrite a sum of two level-1 points as a pair with coordinate gaps <= 2.

    Applies the even rounding with opposite sign patterns to (v + v2)/2.
    The result depends only on v + v2, preserves the sum, and both outputs
    stay in the polytope.
    """
    w = as_weights(w)
    poly = triangle_polytope(w)
    r = tuple(a + b for a, b in zip(v, v2))
    signs = splitting_signs(r, 2, w)
    u = tuple(even_round(Fraction(c, 2), s) for c, s in zip(r, signs))
    u2 = tuple(even_round(Fraction(c, 2), -s) for c, s in zip(r, signs))
    for cand in (u, u2):
        if not poly.contains(cand, 1) or not poly.on_lattice(cand):
            raise ArithmeticError(
                f"balanced point {cand} escaped the polytope for w={w.entries}"
            )
    if tuple(a + b for a, b in zip(u, u2)) != r:
        raise ArithmeticError("balanced pair does not preserve the sum")
    return u, u2


@dataclass(frozen=True)
class NormalityReport:
    """Per-level point counts of a decomposition sweep, plus any failures."""

    weights: tuple[int, ...]
    level_counts: tuple[tuple[int, int], ...]
    failures: tuple[str, ...]

    @property
    def ok(self) -> bool:
        return not self.failures


def normality_check(
    w: WeightVector | Sequence[int], m_max: int
) -> NormalityReport:
    """Decompose every lattice point of every dilate up to level m_max.

    Failures are collected rather than raised so a report can show how far
    a sweep got; expected outcome for even weights is zero failures.
    """
    w = as_weights(w)
    if m_max < 2:
        raise ValueError("m_max must be >= 2")
    poly = triangle_polytope(w)
    counts = []
    failures = []
    for m in range(1, m_max + 1):
        pts = lattice_points(poly, m)
        counts.append((m, len(pts)))
        for r in pts:
            try:
                parts = normal_decompose(r, m, w)
            except (ValueError, ArithmeticError) as exc:
                failures.append(f"level {m}, point {r}: {exc}")
                continue
            if len(parts) != m or tuple(map(sum, zip(*parts))) != r:
                failures.append(f"level {m}, point {r}: parts do not sum back")
    return NormalityReport(w.entries, tuple(counts), tuple(failures))
