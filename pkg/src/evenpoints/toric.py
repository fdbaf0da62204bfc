"""The toric ideal of the triangle polytope and its quadratic Groebner basis.

Variables are the level-1 doubled-lattice points of the triangle polytope,
one variable per point.  A binomial lhs - rhs lies in the toric ideal
exactly when both sides share degree and coordinate-wise multidegree.  The
term order is graded, refined first by the norm (sum of squared
coordinates over all factors) and then by reverse lexicographic
comparison on the lex-sorted variables.

Two families of quadratic relations are generated: norm-dropping rewrites
of pairs with a coordinate gap larger than 2 (each rewritten to its
balanced pair), and norm-preserving tail swaps at a position where the
crossed triangle inequalities hold.  Certification that these generate
the initial ideal is degreewise: the count of monomials avoiding the
generated leads must match the lattice-point count of the dilated
polytope in every degree.  An independent Buchberger pass over all
S-pairs is available for small instances.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from itertools import combinations_with_replacement
from typing import Iterable, Sequence

from .combinatorics import WeightVector, as_weights
from .polytope import balanced_pair, lattice_points, triangle_polytope

__all__ = [
    "Monomial",
    "Binomial",
    "TermOrder",
    "toric_variables",
    "term_order",
    "is_toric_relation",
    "is_norm_minimal",
    "tail_swap",
    "norm_drop_relations",
    "tail_swap_relations",
    "groebner_basis",
    "initial_leads",
    "standard_monomial_count",
    "groebner_certify",
    "GroebnerReport",
    "buchberger_check",
    "BuchbergerReport",
    "radical_certificate",
    "groebner_json",
]

Point = tuple[int, ...]


class Monomial:
    """A product of point variables, stored as a lex-sorted factor tuple."""

    __slots__ = ("points", "degree", "multidegree", "norm")

    def __init__(self, points: Iterable[Point]):
        pts = tuple(sorted(tuple(p) for p in points))
        if pts:
            dim = len(pts[0])
            if any(len(p) != dim for p in pts):
                raise ValueError("factors live in different ambient dimensions")
        self.points = pts
        self.degree = len(pts)
        self.multidegree = tuple(map(sum, zip(*pts))) if pts else ()
        self.norm = sum(c * c for p in pts for c in p)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Monomial) and self.points == other.points

    def __hash__(self) -> int:
        return hash(self.points)

    def __mul__(self, other: "Monomial") -> "Monomial":
        return Monomial(self.points + other.points)

    def __repr__(self) -> str:
        if not self.points:
            return "1"
        factors = Counter(self.points)
        return "*".join(
            f"X{list(p)}" + (f"^{k}" if k > 1 else "")
            for p, k in sorted(factors.items())
        )

    def divisible_by(self, other: "Monomial") -> bool:
        mine = Counter(self.points)
        return all(mine[p] >= k for p, k in Counter(other.points).items())

    def divide(self, other: "Monomial") -> "Monomial":
        mine = Counter(self.points)
        for p, k in Counter(other.points).items():
            mine[p] -= k
            if mine[p] < 0:
                raise ValueError(f"{self!r} is not divisible by {other!r}")
        return Monomial(tuple(mine.elements()))

    def quadratic_divisors(self) -> list[tuple[Point, Point]]:
        """All unordered factor pairs (v <= v'), with repetition for squares."""
        out = []
        pts = self.points
        for i in range(len(pts)):
            for j in range(i + 1, len(pts)):
                out.append((pts[i], pts[j]))
        return out


@dataclass(frozen=True)
class Binomial:
    """An oriented relation lhs - rhs; lhs is the term-order leading side."""

    lhs: Monomial
    rhs: Monomial
    kind: str  # "norm_drop" or "tail_swap"
    position: int | None = None


class TermOrder:
    """Degree, then norm, then reverse-lex on lex-sorted point variables.

    ``sort_key`` returns a tuple that compares the same way as the order:
    on equal degree and norm, the monomial whose exponent is larger at the
    smallest differing variable is the *smaller* one, which the key
    realizes by negating the exponent vector.
    """

    def __init__(self, variables: Iterable[Point]):
        self.variables = tuple(sorted(tuple(v) for v in variables))
        self.index = {v: i for i, v in enumerate(self.variables)}

    def exponents(self, m: Monomial) -> tuple[int, ...]:
        exps = [0] * len(self.variables)
        for p in m.points:
            exps[self.index[p]] += 1
        return tuple(exps)

    def sort_key(self, m: Monomial) -> tuple:
        return (m.degree, m.norm, tuple(-e for e in self.exponents(m)))

    def compare(self, a: Monomial, b: Monomial) -> int:
        ka, kb = self.sort_key(a), self.sort_key(b)
        return (ka > kb) - (ka < kb)

    def oriented(self, a: Monomial, b: Monomial) -> tuple[Monomial, Monomial]:
        """Return (larger, smaller); rejects ties between distinct monomials."""
        c = self.compare(a, b)
        if c == 0 and a != b:
            raise ArithmeticError("term order failed to separate distinct monomials")
        return (a, b) if c >= 0 else (b, a)


def toric_variables(w: WeightVector | Sequence[int]) -> list[Point]:
    """The variable set: level-1 doubled-lattice points, lex sorted."""
    return lattice_points(triangle_polytope(w), 1)


def term_order(w: WeightVector | Sequence[int]) -> TermOrder:
    return TermOrder(toric_variables(w))


def is_toric_relation(lhs: Monomial, rhs: Monomial) -> bool:
    """Membership of lhs - rhs in the toric ideal: equal degree and multidegree."""
    return lhs.degree == rhs.degree and lhs.multidegree == rhs.multidegree


def is_norm_minimal(m: Monomial) -> bool:
    """No equal-multidegree rewrite has smaller norm.

    Characterization: every quadratic divisor has all coordinate gaps <= 2.
    A gap above 2 can always be narrowed by rebalancing the pair, which
    strictly drops the norm.
    """
    return all(
        all(abs(x - y) <= 2 for x, y in zip(v, v2))
        for v, v2 in m.quadratic_divisors()
    )


def tail_swap(u: Point, v: Point, j: int) -> tuple[Point, Point]:
    """Exchange the coordinate tails of u and v from position j onward.

    Positions follow the chain labelling u(2)..u(n-2), so the swap starts
    at index j - 2 and j must satisfy 3 <= j <= n - 2.
    """
    dim = len(u)
    if len(v) != dim:
        raise ValueError("points live in different ambient dimensions")
    if not 3 <= j <= dim + 1:
        raise ValueError(f"swap position {j} outside 3..{dim + 1}")
    cut = j - 2
    return u[:cut] + v[cut:], v[:cut] + u[cut:]


def _triangle_ok(x: int, y: int, z: int) -> bool:
    return x + y >= z and x + z >= y and y + z >= x


def norm_drop_relations(w: WeightVector | Sequence[int]) -> list[Binomial]:
    """One canonical norm-dropping rewrite per non-norm-minimal pair.

    For every unordered pair of variables with some coordinate gap above 2,
    the relation sends the pair to its balanced pair.  The lhs side is the
    strictly larger one in the term order because its norm strictly drops,
    and the lhs set is exactly the set of non-norm-minimal quadratics.
    """
    w = as_weights(w)
    out = []
    for v, v2 in combinations_with_replacement(toric_variables(w), 2):
        lhs = Monomial((v, v2))
        if is_norm_minimal(lhs):
            continue
        u, u2 = balanced_pair(v, v2, w)
        rhs = Monomial((u, u2))
        if not is_toric_relation(lhs, rhs) or lhs.norm <= rhs.norm:
            raise ArithmeticError(f"balanced rewrite of {lhs!r} is not a norm drop")
        out.append(Binomial(lhs, rhs, "norm_drop"))
    return out


def tail_swap_relations(w: WeightVector | Sequence[int]) -> list[Binomial]:
    """Norm-preserving tail swaps wherever the crossed triangles close.

    A swap at position j needs (u(j-1), w_j, v(j)) and (v(j-1), w_j, u(j))
    to satisfy the triangle inequalities; both swapped points then stay in
    the polytope.  Pairs are scanned in both orders, trivial swaps (the
    same unordered pair) are dropped, each relation is oriented by the
    term order, and duplicates are removed.
    """
    w = as_weights(w)
    variables = toric_variables(w)
    order = TermOrder(variables)
    poly = triangle_polytope(w)
    n = w.n
    seen: set[tuple[tuple[Point, ...], tuple[Point, ...]]] = set()
    out = []
    for u in variables:
        for v in variables:
            for j in range(3, n - 1):
                # chain coordinate u(l) sits at index l - 2
                if not _triangle_ok(u[j - 3], w.entries[j - 1], v[j - 2]):
                    continue
                if not _triangle_ok(v[j - 3], w.entries[j - 1], u[j - 2]):
                    continue
                u2, v2 = tail_swap(u, v, j)
                src = Monomial((u, v))
                dst = Monomial((u2, v2))
                if src == dst:
                    continue
                for p in (u2, v2):
                    if not poly.contains(p, 1):
                        raise ArithmeticError(
                            f"swapped point {p} escaped the polytope for w={w.entries}"
                        )
                if src.norm != dst.norm or not is_toric_relation(src, dst):
                    raise ArithmeticError(f"tail swap at {j} broke an invariant")
                lhs, rhs = order.oriented(src, dst)
                key = (lhs.points, rhs.points)
                if key in seen:
                    continue
                seen.add(key)
                out.append(Binomial(lhs, rhs, "tail_swap", j))
    return out


def groebner_basis(w: WeightVector | Sequence[int]) -> list[Binomial]:
    """The full quadratic basis: norm drops followed by tail swaps."""
    return norm_drop_relations(w) + tail_swap_relations(w)


def initial_leads(w: WeightVector | Sequence[int]) -> set[Monomial]:
    """Leading monomials of the quadratic basis (generators of the initial ideal)."""
    return {b.lhs for b in groebner_basis(w)}


def _standard_count(
    variables: Sequence[Point], lead_pairs: set[tuple[Point, Point]], d: int
) -> int:
    """Monomials of degree d with no quadratic divisor among the leads."""

    def rec(start: int, chosen: list[Point], depth: int) -> int:
        if depth == d:
            return 1
        total = 0
        for i in range(start, len(variables)):
            v = variables[i]
            if all((c, v) not in lead_pairs for c in chosen):
                chosen.append(v)
                total += rec(i, chosen, depth + 1)
                chosen.pop()
        return total

    return rec(0, [], 0)


def standard_monomial_count(w: WeightVector | Sequence[int], d: int) -> int:
    """Count degree-d monomials divisible by no generated lead."""
    if d < 0:
        raise ValueError("d must be >= 0")
    variables = toric_variables(w)
    lead_pairs = {m.points for m in initial_leads(w)}
    return _standard_count(variables, lead_pairs, d)


@dataclass(frozen=True)
class GroebnerReport:
    """Degreewise comparison of standard-monomial and lattice-point counts."""

    weights: tuple[int, ...]
    degrees: tuple[tuple[int, int, int], ...]  # (d, standard, lattice)
    first_mismatch: int | None

    @property
    def ok(self) -> bool:
        return self.first_mismatch is None


def groebner_certify(w: WeightVector | Sequence[int], dmax: int) -> GroebnerReport:
    """Certify the quadratic basis degree by degree up to dmax.

    Every generated lead lies in the initial ideal, so the count of
    monomials avoiding the leads is at least the dimension count
    |dP cap M|; equality in degree d certifies the leads generate the
    initial ideal there.  A mismatch reports the offending degree.
    """
    w = as_weights(w)
    if dmax < 2:
        raise ValueError("dmax must be >= 2 for a meaningful certificate")
    poly = triangle_polytope(w)
    variables = toric_variables(w)
    lead_pairs = {m.points for m in initial_leads(w)}
    rows = []
    mismatch = None
    for d in range(dmax + 1):
        standard = _standard_count(variables, lead_pairs, d)
        lattice = len(lattice_points(poly, d))
        rows.append((d, standard, lattice))
        if standard != lattice and mismatch is None:
            mismatch = d
    return GroebnerReport(w.entries, tuple(rows), mismatch)


def _lcm_points(a: Monomial, b: Monomial) -> Monomial:
    ca, cb = Counter(a.points), Counter(b.points)
    return Monomial(tuple((ca | cb).elements()))


def _normal_form(m: Monomial, basis: Sequence[Binomial], guard: int = 100_000) -> Monomial:
    """Rewrite with lhs -> rhs until no lead divides; terminates because
    every step strictly decreases the monomial in the term order."""
    steps = 0
    while True:
        for b in basis:
            if m.divisible_by(b.lhs):
                m = m.divide(b.lhs) * b.rhs
                steps += 1
                if steps > guard:
                    raise RuntimeError("reduction did not terminate within the guard")
                break
        else:
            return m


@dataclass(frozen=True)
class BuchbergerReport:
    """Outcome of reducing every S-pair of the quadratic basis."""

    weights: tuple[int, ...]
    generators: int
    s_pairs: int
    failures: tuple[str, ...]

    @property
    def ok(self) -> bool:
        return not self.failures


def buchberger_check(
    w: WeightVector | Sequence[int], *, max_variables: int = 40
) -> BuchbergerReport:
    """Reduce all S-pairs of the quadratic basis to zero.

    Binomial S-pairs are again binomials, and reducing a monomial by a
    binomial is a single rewrite, so the whole pass stays inside monomial
    arithmetic.  Quadratic growth in the number of generators makes this
    expensive; the variable-count guard keeps accidental large runs out.
    """
    w = as_weights(w)
    variables = toric_variables(w)
    if len(variables) > max_variables:
        raise ValueError(
            f"{len(variables)} variables exceeds the guard ({max_variables}); "
            "raise max_variables explicitly to proceed"
        )
    basis = groebner_basis(w)
    failures = []
    pairs = 0
    for i in range(len(basis)):
        for k in range(i + 1, len(basis)):
            f, g = basis[i], basis[k]
            lcm = _lcm_points(f.lhs, g.lhs)
            s1 = lcm.divide(f.lhs) * f.rhs
            s2 = lcm.divide(g.lhs) * g.rhs
            pairs += 1
            if s1 == s2:
                continue
            n1 = _normal_form(s1, basis)
            n2 = _normal_form(s2, basis)
            if n1 != n2:
                failures.append(
                    f"S-pair of {f.lhs!r} and {g.lhs!r} left remainder {n1!r} - {n2!r}"
                )
    return BuchbergerReport(w.entries, len(basis), pairs, tuple(failures))


def radical_certificate(w: WeightVector | Sequence[int]) -> bool:
    """True iff no generated lead is a perfect square (square-free initial ideal)."""
    return all(m.points[0] != m.points[1] for m in initial_leads(w))


def groebner_json(w: WeightVector | Sequence[int]) -> list[dict]:
    """The quadratic basis as plain data for export.

    Each entry is {"type", "lhs", "rhs"} with point lists, plus
    "position" for tail swaps.
    """
    out = []
    for b in groebner_basis(w):
        entry: dict = {
            "type": b.kind,
            "lhs": [list(p) for p in b.lhs.points],
            "rhs": [list(p) for p in b.rhs.points],
        }
        if b.position is not None:
            entry["position"] = b.position
        out.append(entry)
    return out
