"""Classical code layer: distance search, duals, Singleton classes."""

from itertools import product
import random

import pytest

from eaqec.codes import (
    DEFAULT_BUDGET,
    ClassicalCode,
    Distance,
    dual,
    hermitian_dual,
    min_distance,
    random_code,
    singleton_defect,
)
from eaqec.errors import BudgetInvalid, DistanceUnknown, FieldMismatch
from eaqec.gf import FieldSpec
from eaqec.matrix import MatrixGF, rowspace_intersection_dim

GF2 = FieldSpec(2, 1)
GF3 = FieldSpec(3, 1)
GF4 = FieldSpec(2, 2)

HAMMING_H = [
    [1, 0, 1, 0, 1, 0, 1],
    [0, 1, 1, 0, 0, 1, 1],
    [0, 0, 0, 1, 1, 1, 1],
]


def hamming():
    return ClassicalCode.from_parity_check(MatrixGF(GF2, HAMMING_H))


def span(code):
    return set(code.codewords())


class TestDistance:
    def test_constructors_and_render(self):
        assert Distance.exact(3).render() == "3"
        assert Distance.lower_bound(4).render() == ">=4"
        assert Distance.unknown().render() == "?"
        assert Distance.exact(3).is_exact
        assert Distance.lower_bound(4).is_known
        assert not Distance.lower_bound(4).is_exact
        assert not Distance.unknown().is_known

    def test_require(self):
        assert Distance.exact(5).require() == 5
        assert Distance.lower_bound(2).require() == 2
        with pytest.raises(DistanceUnknown):
            Distance.unknown().require()

    def test_rejects_nonpositive(self):
        with pytest.raises(ValueError):
            Distance.exact(0)
        with pytest.raises(ValueError):
            Distance.lower_bound(-1)


class TestConstruction:
    def test_from_parity_check_hamming(self):
        code = hamming()
        assert (code.n, code.k) == (7, 4)
        assert not code.G.mul(code.H.transpose()).array().any()

    def test_from_generator_roundtrip(self):
        g = MatrixGF(GF3, [[1, 0, 2, 1], [0, 1, 1, 1]])
        code = ClassicalCode.from_generator(g)
        assert (code.n, code.k) == (4, 2)
        # same codeword set when rebuilt from the parity check
        again = ClassicalCode.from_parity_check(code.H)
        assert span(code) == span(again)

    def test_rank_validation(self):
        g = MatrixGF(GF2, [[1, 1, 0], [1, 1, 0]])
        with pytest.raises(ValueError, match="full rank"):
            ClassicalCode(GF2, g, MatrixGF(GF2, [[1, 1, 1]]))

    def test_orthogonality_validation(self):
        g = MatrixGF(GF2, [[1, 0, 0]])
        h = MatrixGF(GF2, [[1, 1, 0], [0, 0, 1]])
        with pytest.raises(ValueError, match="!= 0"):
            ClassicalCode(GF2, g, h)

    def test_parity_shape_validation(self):
        g = MatrixGF(GF2, [[1, 0, 0]])
        with pytest.raises(ValueError, match="rows"):
            ClassicalCode(GF2, g, MatrixGF(GF2, [[0, 1, 1]]))

    def test_field_mismatch(self):
        g = MatrixGF(GF3, [[1, 0]])
        h = MatrixGF(GF3, [[0, 1]])
        with pytest.raises(FieldMismatch):
            ClassicalCode(GF2, g, h)

    def test_with_distance_is_fresh(self):
        code = hamming()
        coded = code.with_distance(Distance.exact(3))
        assert code.distance.kind == "unknown"
        assert coded.distance == Distance.exact(3)
        assert coded.G is code.G

    def test_repr(self):
        code = hamming().with_distance(Distance.exact(3))
        assert repr(code) == "[7,4,3]_2"


class TestCodewords:
    def test_count_and_linearity(self):
        code = hamming()
        words = span(code)
        assert len(words) == 2 ** 4
        assert (0,) * 7 in words
        # closed under addition (GF(2): XOR)
        sample = sorted(words)[:6]
        for u in sample:
            for v in sample:
                assert tuple(a ^ b for a, b in zip(u, v)) in words

    def test_matches_parity_check(self):
        g = MatrixGF(GF3, [[1, 2, 0, 1], [0, 1, 1, 2]])
        code = ClassicalCode.from_generator(g)
        for w in code.codewords():
            assert not MatrixGF(GF3, list(w)).mul(code.H.transpose()).array().any()

    def test_zero_code(self):
        code = random_code(GF2, 4, 0, random.Random(0))
        assert list(code.codewords()) == [(0, 0, 0, 0)]


class TestMinDistance:
    def test_hamming_is_3(self):
        assert min_distance(hamming()) == Distance.exact(3)

    def test_gf4_mds(self):
        g = MatrixGF(GF4, [[1, 0, 1], [0, 1, 1]])
        code = ClassicalCode.from_generator(g)
        assert min_distance(code) == Distance.exact(2)

    def test_exhaustive_oracle(self):
        rng = random.Random(11)
        for spec in (GF2, GF3, GF4):
            for _ in range(20):
                n = rng.randrange(3, 7)
                k = rng.randrange(1, n)
                code = random_code(spec, n, k, rng)
                truth = min(
                    sum(1 for v in w if v) for w in code.codewords() if any(w)
                )
                assert min_distance(code) == Distance.exact(truth)

    def test_budget_exceeded_is_unknown(self):
        code = hamming()
        assert min_distance(code, budget=15) == Distance.unknown()
        assert min_distance(code, budget=16) == Distance.exact(3)

    def test_budget_validation(self):
        code = hamming()
        for bad in (0, -3, 2.5, "big"):
            with pytest.raises(BudgetInvalid):
                min_distance(code, budget=bad)

    def test_zero_code_rejected(self):
        code = random_code(GF2, 4, 0, random.Random(0))
        with pytest.raises(ValueError):
            min_distance(code)

    def test_default_budget(self):
        assert DEFAULT_BUDGET == 1 << 24


class TestDuals:
    def test_dual_params_and_orthogonality(self):
        code = hamming()
        dd = dual(code)
        assert (dd.n, dd.k) == (7, 3)
        assert dd.distance.kind == "unknown"
        for u in code.codewords():
            for v in dd.codewords():
                assert sum(a & b for a, b in zip(u, v)) % 2 == 0

    def test_dual_involution(self):
        code = hamming()
        back = dual(dual(code))
        assert span(back) == span(code)

    def test_simplex_distance(self):
        # dual of the [7,4] Hamming code: every nonzero word has weight 4
        assert min_distance(dual(hamming())) == Distance.exact(4)

    def test_hermitian_dual_orthogonality(self):
        g = MatrixGF(GF4, [[1, 0, 2], [0, 1, 3]])
        code = ClassicalCode.from_generator(g)
        hd = hermitian_dual(code, 2)
        assert (hd.n, hd.k) == (3, 1)
        for u in code.codewords():
            for v in hd.codewords():
                acc = 0
                for a, b in zip(u, v):
                    acc = GF4.add(acc, GF4.mul(a, GF4.frobenius(b, 2)))
                assert acc == 0

    def test_hermitian_dual_base_field_check(self):
        code = hamming()
        with pytest.raises(FieldMismatch):
            hermitian_dual(code, 2)

    def test_hull_dimension_oracle(self):
        rng = random.Random(5)
        for spec in (GF2, GF3):
            for _ in range(10):
                n = rng.randrange(3, 6)
                k = rng.randrange(1, n)
                code = random_code(spec, n, k, rng)
                got = rowspace_intersection_dim(code.G, code.H)
                hull = span(code) & span(dual(code))
                assert len(hull) == spec.q ** got


class TestSingletonClass:
    def test_mds(self):
        g = MatrixGF(GF4, [[1, 0, 1], [0, 1, 1]])
        code = ClassicalCode.from_generator(g).with_distance(Distance.exact(2))
        sc = singleton_defect(code)
        assert (sc.defect, sc.label, sc.from_bound) == (0, "MDS", False)

    def test_repetition_is_mds(self):
        g = MatrixGF(GF2, [[1, 1, 1, 1, 1]])
        code = ClassicalCode.from_generator(g).with_distance(Distance.exact(5))
        assert singleton_defect(code).label == "MDS"

    def test_hamming_is_nmds(self):
        # defect 1 on both sides: dual simplex [7,3,4] also has defect 1
        code = hamming().with_distance(min_distance(hamming()))
        sc = singleton_defect(code)
        assert (sc.defect, sc.label) == (1, "NMDS")

    def test_amds_not_nmds(self):
        # dead 4th coordinate forces a weight-1 dual word, dual defect 2
        g = MatrixGF(GF2, [[1, 0, 1, 0], [0, 1, 1, 0]])
        code = ClassicalCode.from_generator(g).with_distance(Distance.exact(2))
        sc = singleton_defect(code)
        assert (sc.defect, sc.label) == (1, "AMDS")

    def test_deep_defect_label(self):
        g = MatrixGF(GF2, [[1, 1, 0, 0, 0, 0], [0, 0, 1, 1, 0, 0]])
        code = ClassicalCode.from_generator(g).with_distance(Distance.exact(2))
        assert singleton_defect(code).label == "3-MDS"

    def test_bound_distance_flagged(self):
        code = hamming().with_distance(Distance.lower_bound(3))
        sc = singleton_defect(code)
        assert sc.from_bound
        # defect-1 bound stays AMDS; the NMDS upgrade needs an exact value
        assert (sc.defect, sc.label) == (1, "AMDS")

    def test_unknown_distance_rejected(self):
        with pytest.raises(DistanceUnknown):
            singleton_defect(hamming())

    def test_singleton_violation_rejected(self):
        code = hamming().with_distance(Distance.exact(5))
        with pytest.raises(ValueError):
            singleton_defect(code)


class TestRandomCode:
    def test_shapes_and_rank(self):
        rng = random.Random(7)
        for spec in (GF2, GF3, GF4):
            for _ in range(15):
                n = rng.randrange(1, 9)
                k = rng.randrange(0, n + 1)
                code = random_code(spec, n, k, rng)
                assert (code.n, code.k) == (n, k)
                assert code.G.rank() == k

    def test_k_bounds(self):
        with pytest.raises(ValueError):
            random_code(GF2, 3, 4, random.Random(0))
        with pytest.raises(ValueError):
            random_code(GF2, 3, -1, random.Random(0))

    def test_full_code(self):
        code = random_code(GF2, 4, 4, random.Random(3))
        assert len(span(code)) == 16
        assert code.H.rows == 0

    def test_reproducible(self):
        a = random_code(GF3, 6, 3, random.Random(42))
        b = random_code(GF3, 6, 3, random.Random(42))
        assert a.G == b.G
