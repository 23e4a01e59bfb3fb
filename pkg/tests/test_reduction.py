import random

import pytest

from toric_diamond import reduction
from toric_diamond.errors import (
    DegenerateMatrix,
    NormalizationImpossible,
    NotReduced,
    TooLarge,
)
from toric_diamond.lattice import lattice_span_index
from toric_diamond.reduction import (
    IsotropyData,
    WeightMatrix,
    chain_shape_ok,
    cs_conditions_check,
    g_omega_order,
    g_omega_order_bruteforce,
    is_admissible,
    is_nondegenerate,
    is_reduced,
    isotropy_data,
    kernel_phi,
    minors_all,
    normalize_phi,
    s_omega_cohomology,
)

GOLDEN = WeightMatrix.from_rows([[1, 0, 1, 1], [0, 1, 1, 2]])


class TestMinors:
    def test_golden(self):
        m = minors_all(GOLDEN)
        # keyed by deleted column pair, 0-based
        assert m[(0, 1)] == 1
        assert m[(0, 2)] == -1
        assert m[(0, 3)] == -1
        assert m[(1, 2)] == 2
        assert m[(1, 3)] == 1
        assert m[(2, 3)] == 1

    def test_k1(self):
        m = minors_all(WeightMatrix.from_rows([[3, 5, 7]]))
        assert m == {(0, 1): 7, (0, 2): 5, (1, 2): 3}

    def test_multiset_invariant_under_row_ops(self):
        # left GL(k,Z) action scales all minors by det = +-1
        w = WeightMatrix.from_rows([[1, 2, 3, 4], [0, 1, 1, 2]])
        w2 = WeightMatrix.from_rows([[1, 3, 4, 6], [0, 1, 1, 2]])  # r1 += r2
        a = sorted(abs(v) for v in minors_all(w).values())
        b = sorted(abs(v) for v in minors_all(w2).values())
        assert a == b


class TestDegeneracy:
    def test_golden_reduced(self):
        assert is_nondegenerate(GOLDEN)
        assert reduction.determinantal_divisor(GOLDEN) == 1
        assert is_reduced(GOLDEN)

    def test_explicit_zero_minor(self):
        w = WeightMatrix.from_rows([[1, 0, 0, 1], [0, 1, 1, 2]])
        assert not is_nondegenerate(w)

    def test_scaled_not_reduced(self):
        w = WeightMatrix.from_rows([[2, 0, 2, 2], [0, 2, 2, 4]])
        assert reduction.determinantal_divisor(w) == 4
        assert not is_reduced(w)

    def test_k0_conventions(self):
        w = WeightMatrix.from_rows([])
        assert is_nondegenerate(w)
        assert is_reduced(w)
        assert is_admissible(w)
        assert g_omega_order(w) == 1
        assert g_omega_order_bruteforce(w) == 1
        assert kernel_phi(w) == ((1, 0), (0, 1))


class TestAdmissibility:
    def test_golden(self):
        assert is_admissible(GOLDEN)

    def test_gcd_violation(self):
        assert not is_admissible(WeightMatrix.from_rows([[2, 2, 1]]))

    def test_repeated_pair(self):
        w = WeightMatrix.from_rows([[1, 0, 1, 1], [0, 1, 1, 1]])
        assert not is_admissible(w)

    def test_invariance_under_equivalence(self):
        rng = random.Random(5)
        for _ in range(50):
            k = rng.randint(1, 3)
            rows = [[int(i == j) for j in range(k)]
                    + [rng.randint(1, 9), rng.randint(1, 9)] for i in range(k)]
            try:
                w = WeightMatrix.from_rows(rows)
                if not is_nondegenerate(w):
                    continue
                base = is_admissible(w)
            except (ValueError, DegenerateMatrix):
                continue
            # column permutation / sign equivalence
            perm = list(range(k + 2))
            rng.shuffle(perm)
            signs = [rng.choice((1, -1)) for _ in range(k + 2)]
            rows2 = [[signs[j] * r[perm[j]] for j in range(k + 2)] for r in rows]
            w2 = WeightMatrix.from_rows(rows2)
            assert is_admissible(w2) == base


class TestGOmegaOrder:
    def test_golden_24(self):
        assert g_omega_order(GOLDEN) == 24
        assert g_omega_order_bruteforce(GOLDEN) == 24

    def test_k1_formula(self):
        for p in [(1, 1, 1), (3, 1, 1), (2, 3, 5), (9, 4, 7)]:
            w = WeightMatrix.from_rows([list(p)])
            expect = p[0] * p[1] + p[0] * p[2] + p[1] * p[2]
            assert g_omega_order(w) == expect
            assert g_omega_order_bruteforce(w) == expect

    def test_galicki_lawson_orders(self):
        for q in (1, 2, 5, 9):
            w = WeightMatrix.from_rows([[2 * q - 1, 1, 1]])
            assert g_omega_order(w) == 4 * q - 1

    def test_brute_force_cap(self, monkeypatch):
        monkeypatch.setenv("TORIC_DIAMOND_MAX_K", "1")
        with pytest.raises(TooLarge):
            g_omega_order_bruteforce(GOLDEN)

    def test_lower_bound_normal_form(self):
        # |G| >= |a_1...a_k| + |b_1...b_k| for [I|a|b] matrices
        rng = random.Random(9)
        for _ in range(200):
            k = rng.randint(1, 3)
            a = [rng.randint(1, 9) for _ in range(k)]
            b = [rng.randint(1, 9) for _ in range(k)]
            rows = [[int(i == j) for j in range(k)] + [a[i], b[i]]
                    for i in range(k)]
            w = WeightMatrix.from_rows(rows)
            if not is_nondegenerate(w):
                continue
            prod_a = prod_b = 1
            for i in range(k):
                prod_a *= a[i]
                prod_b *= b[i]
            assert g_omega_order(w) >= prod_a + prod_b


class TestKernelPhi:
    def test_golden(self):
        phi = kernel_phi(GOLDEN)
        for row in GOLDEN.rows:
            for p in phi:
                assert sum(x * y for x, y in zip(row, p)) == 0
        # row span equals that of {(1,1,-1,0),(1,2,0,-1)}
        from toric_diamond.lattice import smith_normal_form
        stacked = [list(p) for p in phi] + [[1, 1, -1, 0], [1, 2, 0, -1]]
        assert smith_normal_form(stacked).invariant_factors == (1, 1)

    def test_p111(self):
        phi = kernel_phi(WeightMatrix.from_rows([[1, 1, 1]]))
        for p in phi:
            assert sum(p) == 0

    def test_not_reduced(self):
        with pytest.raises(NotReduced):
            kernel_phi(WeightMatrix.from_rows([[2, 0, 2, 2], [0, 2, 2, 4]]))


class TestNormalizePhi:
    def test_golden_columns(self):
        phi = ((1, 1, -1, 0), (1, 2, 0, -1))
        assert normalize_phi(phi) == ((1, 2, 3, 1), (0, 1, 2, 1))

    def test_contract_on_identity(self):
        out = normalize_phi(((1, 0), (0, 1)))
        cols = list(zip(*out))
        assert all(c[0] > 0 for c in cols)
        from fractions import Fraction
        slopes = [Fraction(c[1], c[0]) for c in cols]
        assert slopes == sorted(set(slopes))

    def test_parallel_columns(self):
        with pytest.raises(NormalizationImpossible):
            normalize_phi(((1, 2, 1), (1, 2, 0)))

    def test_zero_column(self):
        with pytest.raises(NormalizationImpossible):
            normalize_phi(((0, 1, 1), (0, 1, 2)))


class TestIsotropyData:
    def test_golden_exact(self):
        data = isotropy_data(GOLDEN)
        assert data.v == ((-7, -2), (-5, -2), (-1, -1), (5, 1), (7, 2))

    def test_cs_conditions(self):
        assert cs_conditions_check(isotropy_data(GOLDEN))

    def test_shape_without_span(self):
        d = IsotropyData.from_vectors([(-2, -1), (0, -1), (2, 1)])
        assert chain_shape_ok(d)
        assert not cs_conditions_check(d)  # span index 2

    def test_random_admissible_always_valid(self):
        rng = random.Random(17)
        found = 0
        while found < 60:
            k = rng.randint(1, 3)
            rows = [[int(i == j) for j in range(k)]
                    + [rng.randint(1, 9), rng.randint(1, 9)] for i in range(k)]
            w = WeightMatrix.from_rows(rows)
            if not is_nondegenerate(w) or not is_admissible(w):
                continue
            found += 1
            data = isotropy_data(w)
            assert cs_conditions_check(data)
            assert lattice_span_index(data.v) == 1


class TestCohomology:
    def test_golden(self):
        tab = s_omega_cohomology(GOLDEN)
        assert tab.b2 == 2 and tab.torsion_order == 24
        assert tab.table[0] == "Z" and tab.table[7] == "Z"
        assert tab.table[1] == tab.table[3] == tab.table[6] == "0"
        assert tab.table[2] == tab.table[5] == "Z^2"
        assert tab.pi1_trivial

    def test_families(self):
        assert s_omega_cohomology(WeightMatrix.from_rows([[1, 1, 1]])).torsion_order == 3
        assert s_omega_cohomology(WeightMatrix.from_rows([[3, 1, 1]])).torsion_order == 7
