import random
from itertools import product

import pytest

from evenpoints.combinatorics import (
    TwoRowTableau,
    WeightVector,
    admissible_partitions,
    bounded_compositions,
    is_admissible,
    kostka_bruteforce,
    monomial_of_tableau,
    partition_of_tableau,
    prefix_slack,
    slack_profile,
    step_down,
    step_up,
    tableau_from_partition,
)


def brute_admissible(entries, d):
    """Independent oracle: nested loops over the box, verbatim inequalities."""
    n = len(entries)
    total = sum(entries)
    if (d * total) % 2:
        return []
    out = []
    for nu in product(*(range(d * e + 1) for e in entries)):
        if sum(nu) != d * total // 2:
            continue
        ok = True
        for l in range(1, n + 1):
            if 2 * sum(nu[: l - 1]) + nu[l - 1] < d * sum(entries[:l]):
                ok = False
                break
        if ok:
            out.append(nu)
    return sorted(out)


class TestWeightVector:
    def test_basic_fields(self):
        w = WeightVector((2, 4, 2, 4))
        assert w.n == 4 and w.total == 12 and w.half == 6
        assert w.even_total and w.all_even
        assert w.prefix_sums() == (2, 6, 8, 12)

    def test_parity_flags(self):
        assert not WeightVector((1, 1, 1)).even_total
        w = WeightVector((1, 1, 2))
        assert w.even_total and not w.all_even

    def test_rejects_bad_input(self):
        with pytest.raises(ValueError):
            WeightVector((1, 1))
        with pytest.raises(ValueError):
            WeightVector((1, 0, 1))
        with pytest.raises(ValueError):
            WeightVector((1, 1, 1)).half


class TestAdmissiblePartitions:
    def test_pentagon_weights(self):
        # derived by the nested-loop oracle; 6 points with these projections
        w = (2, 2, 2, 2, 2)
        parts = admissible_partitions(w, 1)
        assert parts == brute_admissible(w, 1)
        assert len(parts) == 6
        assert sorted((p[1], p[2]) for p in parts) == [
            (0, 2), (1, 0), (1, 1), (1, 2), (2, 0), (2, 1),
        ]

    def test_odd_total_is_empty(self):
        assert admissible_partitions((1, 1, 1), 1) == []
        assert kostka_bruteforce((1, 1, 1), 1) == 0

    def test_catalan_case(self):
        assert len(admissible_partitions((1, 1, 1, 1), 1)) == 2

    def test_forced_ends(self):
        for d in (1, 2):
            for nu in admissible_partitions((1, 2, 1, 2), d):
                assert nu[0] == d * 1 and nu[-1] == 0

    def test_lexicographic_order(self):
        parts = admissible_partitions((2, 2, 2, 2, 2), 1)
        assert parts == sorted(parts)

    @pytest.mark.parametrize(
        "w,d,expected",
        [((1,) * 8, 1, 14), ((1,) * 8, 2, 91), ((2, 2, 2, 2, 2), 1, 6)],
    )
    def test_kostka_values(self, w, d, expected):
        assert kostka_bruteforce(w, d) == expected

    def test_oracle_agreement_small_grid(self):
        for n in (3, 4):
            for entries in product((1, 2), repeat=n):
                for d in (1, 2):
                    assert admissible_partitions(entries, d) == brute_admissible(
                        entries, d
                    )


def ssyt_fill_count(content, k):
    """Second independent oracle: fill the two-row shape column by column."""
    n = len(content)
    remaining = list(content)

    def rec(col, last_t, last_b):
        if col == k:
            return 1 if all(r == 0 for r in remaining) else 0
        total = 0
        for t in range(last_t, n + 1):
            if remaining[t - 1] == 0:
                continue
            remaining[t - 1] -= 1
            for b in range(max(t + 1, last_b), n + 1):
                if remaining[b - 1] == 0:
                    continue
                remaining[b - 1] -= 1
                total += rec(col + 1, t, b)
                remaining[b - 1] += 1
            remaining[t - 1] += 1
        return total
    return rec(0, 1, 1)


def test_kostka_matches_direct_tableau_filling():
    for n in (3, 4):
        for entries in product((1, 2), repeat=n):
            total = sum(entries)
            for d in (1, 2):
                if (d * total) % 2:
                    continue
                direct = ssyt_fill_count([d * e for e in entries], d * total // 2)
                assert direct == kostka_bruteforce(entries, d), (entries, d)


class TestTableaux:
    def test_forced_fillings(self):
        t = tableau_from_partition((1, 1, 0, 0), (1, 1, 1, 1), 1)
        assert t.top == (1, 2) and t.bottom == (3, 4)
        t = tableau_from_partition((1, 0, 1, 0), (1, 1, 1, 1), 1)
        assert t.top == (1, 3) and t.bottom == (2, 4)

    def test_rejects_non_admissible(self):
        with pytest.raises(ValueError):
            tableau_from_partition((0, 1, 1, 0), (1, 1, 1, 1), 1)

    def test_round_trip_on_full_domain(self):
        w = (1, 1, 1, 1, 1, 1)
        parts = admissible_partitions(w, 1)
        assert len(parts) == 5  # Catalan C_3
        for nu in parts:
            t = tableau_from_partition(nu, w, 1)
            assert t.is_semistandard()
            assert t.content(6) == (1,) * 6
            assert partition_of_tableau(t, 6) == nu

    def test_every_tableau_semistandard(self):
        for entries in ((2, 1, 1, 2), (2, 2, 2, 2, 2), (1, 3, 2, 2)):
            for d in (1, 2):
                for nu in admissible_partitions(entries, d):
                    assert tableau_from_partition(nu, entries, d).is_semistandard()

    def test_monomial_exponents(self):
        t = TwoRowTableau((1, 2), (3, 4))
        assert monomial_of_tableau(t, 4) == ((1, 1, 0, 0), (0, 0, 1, 1))
        t = TwoRowTableau((1, 1), (2, 2))
        assert monomial_of_tableau(t, 2) == ((2, 0), (0, 2))

    def test_distinct_tableaux_distinct_monomials(self):
        w = (1, 1, 1, 1, 1, 1)
        monomials = {
            monomial_of_tableau(tableau_from_partition(nu, w, 1), 6)
            for nu in admissible_partitions(w, 1)
        }
        assert len(monomials) == 5


class TestPrefixSlack:
    def test_examples(self):
        assert prefix_slack((0, 1, 1, 0), (1, 1, 1, 1), 1, 1) == -1
        assert prefix_slack((1, 1, 0, 0), (1, 1, 1, 1), 1, 4) == 0

    def test_out_of_range(self):
        with pytest.raises(IndexError):
            prefix_slack((1, 1, 0, 0), (1, 1, 1, 1), 1, 5)
        with pytest.raises(IndexError):
            prefix_slack((1, 1, 0, 0), (1, 1, 1, 1), 1, 0)

    def test_last_slack_formula(self):
        # slack at n is 2|nu| - d|w| - nu_n
        rng = random.Random(11)
        w = WeightVector((2, 1, 3, 1, 2))
        for _ in range(20):
            d = rng.randint(1, 3)
            nu = tuple(rng.randint(0, d * e) for e in w.entries)
            expected = 2 * sum(nu) - d * w.total - nu[-1]
            assert prefix_slack(nu, w, d, w.n) == expected
            assert slack_profile(nu, w, d)[-1] == expected

    def test_profile_matches_pointwise(self):
        w = WeightVector((1, 2, 2, 1))
        nu = (1, 1, 1, 0)
        assert slack_profile(nu, w, 1) == tuple(
            prefix_slack(nu, w, 1, i) for i in range(1, 5)
        )


class TestStepMaps:
    def test_examples(self):
        assert step_down((0, 1, 1, 0), (1, 1, 1, 1), 1) == (0, 0, 1, 0)
        assert step_up((0, 0, 1, 0), (1, 1, 1, 1), 1) == (0, 1, 1, 0)

    def test_step_down_rejects_admissible(self):
        with pytest.raises(ValueError):
            step_down((1, 1, 0, 0), (1, 1, 1, 1), 1)

    def test_step_up_rejects_wrong_total(self):
        with pytest.raises(ValueError):
            step_up((1, 1, 0, 0), (1, 1, 1, 1), 1)

    def test_totals_change_by_one(self):
        w = (1, 2, 1, 2)
        for nu in bounded_compositions([1, 2, 1, 2], 3):
            if min(slack_profile(nu, w, 1)) < 0:
                assert sum(step_down(nu, w, 1)) == 2
        for nup in bounded_compositions([1, 2, 1, 2], 2):
            assert sum(step_up(nup, w, 1)) == 3

    def test_full_bijection(self):
        for entries, d in (((1, 1, 1, 1, 1, 1), 1), ((2, 1, 1, 2), 2), ((2, 2, 2, 2, 2), 1)):
            w = WeightVector(entries)
            k = d * w.total // 2
            dw = [d * e for e in entries]
            big = list(bounded_compositions(dw, k))
            small = list(bounded_compositions(dw, k - 1))
            domain = [nu for nu in big if min(slack_profile(nu, w, d)) < 0]
            images = set()
            for nu in domain:
                down = step_down(nu, w, d)
                assert step_up(down, w, d) == nu
                images.add(down)
            assert images == set(small)
            for nup in small:
                assert step_down(step_up(nup, w, d), w, d) == nup
            assert len(big) - len(domain) == kostka_bruteforce(w, d)


def test_bounded_compositions_basic():
    assert list(bounded_compositions([1, 1], 1)) == [(0, 1), (1, 0)]
    assert list(bounded_compositions([2, None], 3)) == [(0, 3), (1, 2), (2, 1)]
    assert list(bounded_compositions([1, 1], -1)) == []
    assert list(bounded_compositions([1, 1, 1], 5)) == []
