from fractions import Fraction as F

import pytest

from okbodies import linalg, lp


class TestLinalg:
    def test_solve(self):
        assert linalg.solve([[F(2), F(0)], [F(0), F(4)]], [F(2), F(2)]) == (1, F(1, 2))
        assert linalg.solve([[F(1), F(1)], [F(2), F(2)]], [F(1), F(2)]) is None

    def test_rank_nullspace(self):
        rows = [(F(1), F(2), F(3)), (F(2), F(4), F(6))]
        assert linalg.rank(rows) == 1
        ns = linalg.nullspace(rows)
        assert len(ns) == 2
        for v in ns:
            assert linalg.dot(rows[0], v) == 0

    def test_det(self):
        assert linalg.det([[F(1), F(2)], [F(3), F(4)]]) == -2
        assert linalg.det([[F(1), F(2)], [F(2), F(4)]]) == 0

    def test_primitive(self):
        ints, mult = linalg.primitive_int_vector((F(2, 3), F(-4, 3)))
        assert ints == (1, -2)
        assert mult == F(3, 2)

    def test_signature(self):
        assert linalg.signature([[1, 0], [0, -1]]) == (1, 1, 0)
        assert linalg.signature([[0, 1], [1, 0]]) == (1, 1, 0)
        assert linalg.signature([[2, 0, 0], [0, -3, 0], [0, 0, 0]]) == (1, 1, 1)
        assert linalg.signature([[4, 2], [2, 0]]) == (1, 1, 0)

    def test_float_rejected(self):
        with pytest.raises(TypeError):
            linalg.frac(0.5)


class TestSimplex:
    def test_basic_max(self):
        # max x+y st x+y+s=2: optimum 2
        status, x, val = lp.simplex_max([[1, 1, 1]], [2], [1, 1, 0])
        assert status == lp.OPTIMAL and val == 2

    def test_infeasible(self):
        status, _, _ = lp.simplex_max([[1, 0], [1, 0]], [1, 2], [0, 0])
        assert status == lp.INFEASIBLE

    def test_unbounded(self):
        # max x st x - y = 0: x can grow with y
        status, _, _ = lp.simplex_max([[1, -1]], [0], [1, 0])
        assert status == lp.UNBOUNDED

    def test_nonneg_combination(self):
        gens = [(F(0), F(1)), (F(1), F(-1))]
        x = lp.nonneg_combination(gens, (F(2), F(1)))  # 2H+E = 3E + 2(H-E)
        assert x is not None
        assert all(c >= 0 for c in x)
        assert lp.nonneg_combination(gens, (F(-1), F(0))) is None

    def test_max_cone_shift(self):
        gens = [(F(0), F(1)), (F(1), F(-1))]  # E, H-E on the blown-up plane
        # sup{t : H - tE psef} = 1
        status, t = lp.max_cone_shift(gens, (F(0), F(1)), (F(1), F(0)))
        assert (status, t) == (lp.OPTIMAL, 1)

    def test_recession(self):
        # square [0,1]^2: bounded
        A = [[1, 0], [-1, 0], [0, 1], [0, -1]]
        assert lp.recession_is_trivial(A, 2)
        # half-strip: unbounded
        assert not lp.recession_is_trivial([[1, 0], [-1, 0], [0, -1]], 2)
