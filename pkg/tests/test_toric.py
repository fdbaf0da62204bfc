import json
import random
from itertools import combinations_with_replacement, product

import pytest

from evenpoints.hilbert import hilbert_function
from evenpoints.toric import (
    Monomial,
    buchberger_check,
    groebner_basis,
    groebner_certify,
    groebner_json,
    initial_leads,
    is_norm_minimal,
    is_toric_relation,
    norm_drop_relations,
    radical_certificate,
    standard_monomial_count,
    tail_swap,
    tail_swap_relations,
    term_order,
    toric_variables,
)

PENTAGON = (2, 2, 2, 2, 2)
HEXAGON = (2, 2, 2, 2, 2, 2)


class TestMonomial:
    def test_cached_data(self):
        m = Monomial(((0, 2), (4, 2)))
        assert m.degree == 2
        assert m.multidegree == (4, 4)
        assert m.norm == 24

    def test_norm_and_multidegree_additive(self):
        a = Monomial(((0, 2),))
        b = Monomial(((4, 2), (2, 2)))
        ab = a * b
        assert ab.norm == a.norm + b.norm
        assert ab.multidegree == tuple(x + y for x, y in zip(a.multidegree, b.multidegree))

    def test_divisibility(self):
        m = Monomial(((0, 2), (2, 2), (2, 2)))
        assert m.divisible_by(Monomial(((2, 2), (2, 2))))
        assert not m.divisible_by(Monomial(((4, 4),)))
        assert m.divide(Monomial(((2, 2),))).points == ((0, 2), (2, 2))


class TestTermOrder:
    def test_degree_dominates(self):
        order = term_order(PENTAGON)
        low = Monomial(((4, 4),))
        high = Monomial(((0, 2), (2, 0)))
        assert order.compare(low, high) < 0

    def test_norm_tiebreak_example(self):
        order = term_order(PENTAGON)
        heavy = Monomial(((0, 2), (4, 2)))  # norm 24
        light = Monomial(((2, 2), (2, 2)))  # norm 16
        assert order.compare(light, heavy) < 0

    def test_multiplicativity_random_triples(self):
        rng = random.Random(101)
        order = term_order(HEXAGON)
        variables = toric_variables(HEXAGON)

        def random_monomial():
            return Monomial(rng.choice(variables) for _ in range(rng.randint(0, 3)))

        for _ in range(500):
            a, b, c = random_monomial(), random_monomial(), random_monomial()
            if order.compare(a, b) < 0:
                assert order.compare(a * c, b * c) < 0

    def test_total_on_each_degree(self):
        order = term_order(PENTAGON)
        variables = toric_variables(PENTAGON)
        monomials = [Monomial(p) for p in combinations_with_replacement(variables, 2)]
        keys = [order.sort_key(m) for m in monomials]
        assert len(set(keys)) == len(monomials)


class TestToricMembership:
    def test_relation_example(self):
        assert is_toric_relation(Monomial(((0, 2), (4, 2))), Monomial(((2, 2), (2, 2))))

    def test_non_relation(self):
        assert not is_toric_relation(
            Monomial(((2, 0), (0, 2))), Monomial(((2, 2), (2, 2)))
        )

    def test_zero_binomial(self):
        m = Monomial(((2, 4), (4, 2)))
        assert is_toric_relation(m, m)


class TestNormMinimality:
    def test_squares_minimal(self):
        for v in toric_variables(PENTAGON):
            assert is_norm_minimal(Monomial((v, v)))

    def test_wide_gap_not_minimal(self):
        assert not is_norm_minimal(Monomial(((0, 2), (4, 2))))

    def test_gap_two_minimal(self):
        assert is_norm_minimal(Monomial(((2, 0), (0, 2))))

    @pytest.mark.parametrize("w", [PENTAGON, HEXAGON, (2, 4, 2, 4)])
    def test_criterion_matches_bruteforce_oracle(self, w):
        variables = toric_variables(w)
        by_multidegree = {}
        for a, b in combinations_with_replacement(variables, 2):
            m = Monomial((a, b))
            by_multidegree.setdefault(m.multidegree, []).append(m)
        for monomials in by_multidegree.values():
            best = min(m.norm for m in monomials)
            for m in monomials:
                assert is_norm_minimal(m) == (m.norm == best)

    def test_random_multidegrees_against_oracle(self):
        rng = random.Random(5)
        variables = toric_variables(HEXAGON)
        pairs = [Monomial(p) for p in combinations_with_replacement(variables, 2)]
        by_multidegree = {}
        for m in pairs:
            by_multidegree.setdefault(m.multidegree, []).append(m)
        for _ in range(200):
            m = rng.choice(pairs)
            best = min(x.norm for x in by_multidegree[m.multidegree])
            assert is_norm_minimal(m) == (m.norm == best)


def test_square_gap_fact_exhaustive():
    # even tuples with pairwise gaps <= 2 minimize the square sum in their
    # fiber, with equality only for the same multiset
    values = range(-6, 7, 2)
    for length in (1, 2, 3):
        for a in product(values, repeat=length):
            if max(a) - min(a) > 2:
                continue
            for b in product(values, repeat=length):
                if sum(b) != sum(a):
                    continue
                na = sum(x * x for x in a)
                nb = sum(x * x for x in b)
                assert na <= nb
                assert (na == nb) == (sorted(a) == sorted(b))


class TestNormDropRelations:
    def test_pentagon_contains_example(self):
        relations = norm_drop_relations(PENTAGON)
        wanted = (Monomial(((0, 2), (4, 2))), Monomial(((2, 2), (2, 2))))
        assert any((b.lhs, b.rhs) == wanted for b in relations)

    def test_pentagon_count(self):
        # frozen from the exhaustive scan of the 21 unordered variable pairs
        assert len(norm_drop_relations(PENTAGON)) == 4

    def test_minimal_pairs_not_rewritten(self):
        lhs_set = {b.lhs for b in norm_drop_relations(PENTAGON)}
        assert Monomial(((2, 0), (0, 2))) not in lhs_set

    def test_lhs_set_is_all_non_minimal_quadratics(self):
        variables = toric_variables(PENTAGON)
        expected = {
            Monomial(p)
            for p in combinations_with_replacement(variables, 2)
            if not is_norm_minimal(Monomial(p))
        }
        assert {b.lhs for b in norm_drop_relations(PENTAGON)} == expected

    def test_relations_are_strict_norm_drops_in_ideal(self):
        for b in norm_drop_relations(HEXAGON):
            assert is_toric_relation(b.lhs, b.rhs)
            assert b.lhs.norm > b.rhs.norm


class TestTailSwapRelations:
    def test_swap_arithmetic(self):
        assert tail_swap((2, 0, 0), (0, 2, 2), 4) == ((2, 0, 2), (0, 2, 0))

    def test_swap_position_range(self):
        with pytest.raises(ValueError):
            tail_swap((2, 0), (0, 2), 5)

    def test_pentagon_single_swap(self):
        relations = tail_swap_relations(PENTAGON)
        assert len(relations) == 1
        b = relations[0]
        assert b.position == 3
        assert {b.lhs, b.rhs} == {
            Monomial(((2, 4), (4, 2))), Monomial(((2, 2), (4, 4)))
        }

    def test_hexagon_nonempty(self):
        relations = tail_swap_relations(HEXAGON)
        assert len(relations) == 22  # frozen from the exhaustive pair/position scan

    def test_norm_preserved_and_in_ideal(self):
        order = term_order(HEXAGON)
        for b in tail_swap_relations(HEXAGON):
            assert b.lhs.norm == b.rhs.norm
            assert is_toric_relation(b.lhs, b.rhs)
            assert order.compare(b.lhs, b.rhs) > 0

    def test_no_swaps_for_four_points(self):
        assert tail_swap_relations((2, 4, 2, 4)) == []


class TestInitialLeads:
    def test_contains_norm_drop_lead(self):
        assert Monomial(((0, 2), (4, 2))) in initial_leads(PENTAGON)

    @pytest.mark.parametrize("w", [PENTAGON, HEXAGON, (2, 4, 2, 4)])
    def test_no_squares(self, w):
        for lead in initial_leads(w):
            assert lead.points[0] != lead.points[1]
        assert radical_certificate(w)

    def test_leads_lead_their_binomials(self):
        order = term_order(PENTAGON)
        for b in groebner_basis(PENTAGON):
            assert order.compare(b.lhs, b.rhs) > 0


class TestStandardMonomials:
    def test_degree_zero_and_one(self):
        assert standard_monomial_count(PENTAGON, 0) == 1
        assert standard_monomial_count(PENTAGON, 1) == 6

    def test_degree_two_matches_dilate(self):
        assert standard_monomial_count(PENTAGON, 2) == hilbert_function(PENTAGON, 2)

    @pytest.mark.parametrize(
        "w,dmax",
        [(PENTAGON, 5), (HEXAGON, 3), ((2, 4, 2, 4), 4)],
    )
    def test_certificates(self, w, dmax):
        report = groebner_certify(w, dmax)
        assert report.ok
        for d, standard, lattice in report.degrees:
            assert standard == lattice == hilbert_function(w, d)


class TestBuchberger:
    @pytest.mark.parametrize("w", [(2, 2, 2, 2), PENTAGON])
    def test_all_s_pairs_reduce(self, w):
        report = buchberger_check(w)
        assert report.ok
        assert report.generators == len(groebner_basis(w))

    def test_self_pair_is_trivially_zero(self):
        for b in groebner_basis(PENTAGON):
            # S-binomial of a generator with itself cancels identically
            assert b.lhs.divide(b.lhs) * b.rhs == b.rhs

    def test_variable_guard(self):
        with pytest.raises(ValueError):
            buchberger_check(HEXAGON, max_variables=5)


def test_groebner_json_schema():
    data = groebner_json(PENTAGON)
    assert len(data) == len(groebner_basis(PENTAGON))
    for entry in data:
        assert entry["type"] in ("norm_drop", "tail_swap")
        assert len(entry["lhs"]) == 2 and len(entry["rhs"]) == 2
        if entry["type"] == "tail_swap":
            assert "position" in entry
    json.dumps(data)
