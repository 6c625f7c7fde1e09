from fractions import Fraction as F

import pytest

from okbodies import surface as S
from okbodies.fixtures import blown_up_plane_lattice
from okbodies.linalg import qvec
from okbodies.polytope import hull

BL = blown_up_plane_lattice()
H = qvec([1, 0])
E = qvec([0, 1])
A_BL = qvec([2, -1])  # 2H - E, ample


def g2xg2_lattice():
    return S.SurfaceLattice(
        rank=2, gram=((0, 1), (1, 0)),
        effective_generators=(qvec([1, 0]), qvec([0, 1])),
        nef_generators=(qvec([1, 0]), qvec([0, 1])),
        negative_curves=(),
        canonical_class=qvec([2, 2]),
        abundance={"iitaka_degree_on": {0: 1}},
        declared_kappa={"2,2": 2})


class TestValidation:
    def test_signature_enforced(self):
        with pytest.raises(ValueError, match="signature"):
            S.SurfaceLattice(rank=2, gram=((1, 0), (0, 1)),
                             effective_generators=(qvec([1, 0]),),
                             nef_generators=(), negative_curves=(),
                             canonical_class=qvec([0, 0]))

    def test_nef_pairing_enforced(self):
        with pytest.raises(ValueError, match="nef generator"):
            S.SurfaceLattice(rank=2, gram=((1, 0), (0, -1)),
                             effective_generators=(qvec([0, 1]),),
                             nef_generators=(qvec([0, 1]),),  # pairs -1 with E
                             negative_curves=(0,),
                             canonical_class=qvec([0, 0]))

    def test_negative_curve_must_be_negative(self):
        with pytest.raises(ValueError, match="self-intersection"):
            S.SurfaceLattice(rank=2, gram=((1, 0), (0, -1)),
                             effective_generators=(qvec([1, 0]),),
                             nef_generators=(), negative_curves=(0,),
                             canonical_class=qvec([0, 0]))


class TestIntersection:
    def test_blown_up_plane(self):
        assert S.intersect(BL, H, H) == 1
        assert S.intersect(BL, H, E) == 0
        assert S.intersect(BL, E, E) == -1

    def test_product_canonical(self):
        G = g2xg2_lattice()
        K = qvec([2, 2])
        assert S.intersect(G, K, K) == 8

    def test_length_mismatch(self):
        with pytest.raises(ValueError):
            S.intersect(BL, (1,), (1, 0))


class TestConeTests:
    def test_h_minus_e(self):
        t = S.cone_tests(BL, qvec([1, -1]))
        assert t == {"is_psef": True, "is_nef": True, "is_big": False,
                     "is_ample": False}

    def test_2h_plus_e(self):
        t = S.cone_tests(BL, qvec([2, 1]))
        assert t["is_big"] and t["is_psef"] and not t["is_nef"]

    def test_minus_h(self):
        assert not S.cone_tests(BL, qvec([-1, 0]))["is_psef"]


class TestZariski:
    def test_nef_divisor(self):
        zp = S.zariski_decompose(BL, H)
        assert zp.positive == H and all(c == 0 for c in zp.negative)
        assert zp.support == ()

    def test_2h_plus_e(self):
        zp = S.zariski_decompose(BL, qvec([2, 1]))
        assert zp.positive == (2, 0) and zp.negative == (0, 1)

    def test_exceptional(self):
        zp = S.zariski_decompose(BL, E)
        assert zp.positive == (0, 0) and zp.negative == tuple(E)

    def test_orthogonality(self):
        for cls in ([2, 1], [3, 2], [1, 1]):
            zp = S.zariski_decompose(BL, qvec(cls))
            assert S.intersect(BL, zp.positive, zp.negative) == 0
            for i in zp.support:
                assert S.intersect(BL, zp.positive,
                                   BL.effective_generators[i]) == 0

    def test_permutation_invariance(self):
        # same lattice with negative curve listed after a reshuffle of the
        # effective generators
        alt = S.SurfaceLattice(
            rank=2, gram=((1, 0), (0, -1)),
            effective_generators=(qvec([1, -1]), qvec([0, 1])),
            nef_generators=(qvec([1, 0]), qvec([1, -1])),
            negative_curves=(1,),
            canonical_class=qvec([-3, 1]))
        for cls in ([2, 1], [1, 1], [3, 2]):
            a = S.zariski_decompose(BL, qvec(cls))
            b = S.zariski_decompose(alt, qvec(cls))
            assert a.positive == b.positive and a.negative == b.negative

    def test_not_psef(self):
        with pytest.raises(ValueError, match="pseudoeffective"):
            S.zariski_decompose(BL, qvec([-1, 0]))

    def test_section_count_oracle(self):
        # h^0(m(2H+E)) counted on the toric realization of the same surface
        from okbodies import toric as T

        blt = T.blown_up_plane()
        for m in range(1, 11):
            count = len(T.sections(blt, T.divisor(blt, [0, 0, 2, 1]), m))
            assert count == (2 * m + 1) * (2 * m + 2) // 2
        assert S.volume_surface(BL, qvec([2, 1])) == 4


class TestVolume:
    def test_values(self):
        assert S.volume_surface(BL, qvec([2, 1])) == 4
        assert S.volume_surface(BL, E) == 0
        assert S.volume_surface(BL, qvec([-1, 0])) == 0
        assert S.volume_surface(g2xg2_lattice(), qvec([2, 2])) == 8


class TestBodies:
    def test_h_with_flag_e(self):
        body = S.okounkov_body_surface(BL, H, 0)
        assert body == hull([(0, 0), (1, 0), (1, 1)])

    def test_genus2_square(self):
        body = S.okounkov_body_surface(g2xg2_lattice(), qvec([2, 2]), 0)
        assert body == hull([(0, 0), (2, 0), (0, 2), (2, 2)])

    def test_rigid_class_point_body(self):
        body = S.okounkov_body_surface(BL, E, 0)
        assert body == hull([(1, 0)])

    def test_left_endpoint_from_negative_part(self):
        body = S.okounkov_body_surface(BL, qvec([2, 1]), 0)
        assert body == hull([(1, 0), (3, 0), (3, 2)])
        assert 2 * body.volume_in_dim(2) == S.volume_surface(BL, qvec([2, 1]))

    def test_not_psef_errors(self):
        with pytest.raises(ValueError, match="pseudoeffective"):
            S.okounkov_body_surface(BL, qvec([-1, 0]), 0)


class TestLimitingBodies:
    def test_big_equals_direct(self):
        for cls in ([1, 0], [2, 1], [1, 1]):
            direct = S.okounkov_body_surface(BL, qvec(cls), 0)
            lim = S.limiting_body_surface(BL, qvec(cls), 0, A_BL)
            assert lim == direct

    def test_exceptional_shrinks_to_point(self):
        lim = S.limiting_body_surface(BL, E, 0, A_BL)
        assert lim == hull([(1, 0)])

    def test_requires_ample(self):
        with pytest.raises(ValueError, match="ample"):
            S.limiting_body_surface(BL, E, 0, H)

    def test_retry_across_chamber_walls(self):
        # an absurdly large starting eps straddles chamber walls; the
        # halving retry still reaches the stable answer
        body = S.limiting_body_surface(BL, E, 0, A_BL, eps0=F(4))
        assert body == hull([(1, 0)])

    def test_bad_epsilon(self):
        with pytest.raises(ValueError, match="positive"):
            S.limiting_body_surface(BL, E, 0, A_BL, eps0=0)


class TestConeDataErrors:
    def test_undeclared_negative_curve(self):
        bad = S.SurfaceLattice(
            rank=2, gram=((1, 0), (0, -1)),
            effective_generators=(qvec([0, 1]), qvec([1, -1])),
            nef_generators=(),
            negative_curves=(),  # E missing from the declaration
            canonical_class=qvec([-3, 1]))
        with pytest.raises(S.ConeDataError, match="cone data incomplete"):
            S.zariski_decompose(bad, qvec([2, 1]))


class TestNumericalDims:
    def test_big(self):
        nd = S.numerical_dims_surface(BL, H, A_BL)
        assert nd == {"nu_bdpp": 2, "kappa_vol": 2}

    def test_fiber_class(self):
        G = g2xg2_lattice()
        nd = S.numerical_dims_surface(G, qvec([1, 0]), qvec([1, 1]))
        assert nd == {"nu_bdpp": 1, "kappa_vol": 1}

    def test_rigid(self):
        nd = S.numerical_dims_surface(BL, E, A_BL)
        assert nd == {"nu_bdpp": 0, "kappa_vol": 0}

    def test_not_psef(self):
        with pytest.raises(ValueError):
            S.numerical_dims_surface(BL, qvec([-1, 0]), A_BL)


class TestValuativeAbundant:
    def test_scaling_by_declared_degree(self):
        G = S.SurfaceLattice(
            rank=2, gram=((0, 2), (2, 0)),
            effective_generators=(qvec([1, 0]), qvec([0, 1])),
            nef_generators=(qvec([1, 0]), qvec([0, 1])),
            negative_curves=(),
            canonical_class=qvec([1, 0]),
            abundance={"iitaka_degree_on": {1: 2}})
        body = S.valuative_body_abundant(G, qvec([1, 0]), 1)
        assert body == hull([(0, 0), (0, 1)])

    def test_alpha_one_is_limiting(self):
        G = g2xg2_lattice()
        body = S.valuative_body_abundant(G, qvec([2, 2]), 0)
        assert body == S.okounkov_body_surface(G, qvec([2, 2]), 0)

    def test_undeclared_errors(self):
        with pytest.raises(ValueError, match="undeterminable"):
            S.valuative_body_abundant(BL, qvec([2, 1]), 0)


class TestBodyProperties:
    @pytest.mark.parametrize("cls,flag", [
        ([2, 1], 0), ([1, 0], 0), ([1, 1], 0), ([3, 2], 0), ([2, 0], 1),
    ])
    def test_volume_consistency_big(self, cls, flag):
        body = S.okounkov_body_surface(BL, qvec(cls), flag)
        assert 2 * body.volume_in_dim(2) == S.volume_surface(BL, qvec(cls))

    def test_body_monotone_under_ample(self):
        for cls in ([2, 1], [0, 1], [1, 0]):
            D = qvec(cls)
            Dp = tuple(d + F(1, 8) * a for d, a in zip(D, A_BL))
            small = S.okounkov_body_surface(BL, D, 0)
            big = S.okounkov_body_surface(BL, Dp, 0)
            assert big.contains(small) == (True, 0)

    def test_dim_equals_nu(self):
        for cls, nu in ((H, 2), (qvec([1, -1]), 1), (E, 0)):
            lim = S.limiting_body_surface(BL, cls, 0, A_BL)
            assert lim.dim() == S.numerical_dims_surface(BL, cls, A_BL)["nu_bdpp"]
