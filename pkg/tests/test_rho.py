"""Level invariants and the finite-cyclic rho invariant."""

import random
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from knotrho.exceptions import (
    InvalidParameterError,
    InvalidSlopeError,
    MissingCableDataError,
)
from knotrho.rho import (
    CableData,
    casson_gordon_sigma,
    rho_finite_cyclic,
    rho_knot_surgery,
    rho_knot_surgery_result,
    sign_linking_matrix,
)
from knotrho.seifert import (
    SeifertMatrix,
    SurgeryPresentation,
    jn_seifert,
    knot_surgery_presentation,
    mirror,
    torus_knot_seifert,
    trefoil_seifert,
    unknot_seifert,
)
from knotrho.signature import avg_signature
from knotrho.verify import random_knot_seifert

UNKNOT = unknot_seifert()
TREFOIL = trefoil_seifert()


def trivial(a):
    return CableData.trivial_cable(a)


# -- level invariants -----------------------------------------------------


def test_level_invariant_examples():
    p2 = knot_surgery_presentation(2, 2)
    assert casson_gordon_sigma(p2, trivial(UNKNOT), 1) == 0
    p3 = knot_surgery_presentation(3, 3)
    assert casson_gordon_sigma(p3, trivial(TREFOIL), 1) == Fraction(7, 3)


def test_level_range_validation():
    p3 = knot_surgery_presentation(3, 3)
    for k in (0, 3, -1, 7):
        with pytest.raises(InvalidParameterError):
            casson_gordon_sigma(p3, trivial(TREFOIL), k)


def test_missing_cable_data():
    pres = SurgeryPresentation(((4,),), (2,), 8)
    with pytest.raises(MissingCableDataError):
        casson_gordon_sigma(pres, trivial(UNKNOT), 1)
    with pytest.raises(MissingCableDataError):
        rho_finite_cyclic(pres, trivial(UNKNOT), 8)
    with pytest.raises(MissingCableDataError):
        CableData.explicit(UNKNOT, 0)


def test_explicit_cable_interface():
    # 4-framed surgery, meridian residue 2 mod 8; companion link data supplied
    # as a one-component link with Seifert matrix [-1].
    pres = SurgeryPresentation(((4,),), (2,), 8)
    cable = CableData.explicit(SeifertMatrix(((-1,),), kind="link"), components=2)
    # sigma_k = -1 - 1 + (2(8-k)k/64)*16 = -2 + k(8-k)/2
    assert casson_gordon_sigma(pres, cable, 1) == Fraction(3, 2)
    assert casson_gordon_sigma(pres, cable, 4) == 6
    res = rho_finite_cyclic(pres, cable, 8)
    assert res.value == Fraction(7, 2)
    assert res.per_level[0] == 0


# -- rho for knot surgeries ---------------------------------------------------


def test_rho_examples():
    assert rho_knot_surgery(UNKNOT, 1) == 0
    assert rho_knot_surgery(UNKNOT, 2) == 0
    assert rho_knot_surgery(TREFOIL, 3) == Fraction(14, 9)
    assert rho_knot_surgery(jn_seifert(1), 2) == 0


def test_rho_slope_zero_rejected():
    with pytest.raises(InvalidSlopeError):
        rho_knot_surgery(TREFOIL, 0)


def test_rho_unknot_closed_form():
    for n in range(1, 25):
        assert rho_knot_surgery(UNKNOT, n) == Fraction(n, 3) + Fraction(2, 3 * n) - 1


def test_rho_negative_slope_uses_mirror():
    for n in (-2, -3, -7):
        m = abs(n)
        want = Fraction(m, 3) + Fraction(2, 3 * m) - 1 + avg_signature(mirror(TREFOIL), m)
        assert rho_knot_surgery(TREFOIL, n) == want


def test_per_level_structure():
    res = rho_knot_surgery_result(TREFOIL, 3)
    assert res.value == Fraction(14, 9)
    assert res.per_level == (0, Fraction(7, 3), Fraction(7, 3))
    res5 = rho_knot_surgery_result(jn_seifert(2), 5)
    assert res5.per_level[0] == 0
    for k in range(1, 5):
        assert res5.per_level[k] == res5.per_level[5 - k]
    assert res5.value == Fraction(sum(res5.per_level), 5)


def test_specialization_over_families():
    params = [UNKNOT] + [torus_knot_seifert(i) for i in (1, 2, 4, 6)] + [
        jn_seifert(i) for i in (1, 2, 4, 6)
    ]
    for a in params:
        for n in list(range(2, 12)) + [20, 31, 40]:
            for slope in (n, -n):
                pres = knot_surgery_presentation(slope, n)
                res = rho_finite_cyclic(pres, trivial(a), n)
                assert res.value == rho_knot_surgery(a, slope)


def test_modulus_mismatch():
    pres = knot_surgery_presentation(3, 3)
    with pytest.raises(InvalidParameterError):
        rho_finite_cyclic(pres, trivial(TREFOIL), 4)


def test_d_equal_one_is_zero():
    pres = SurgeryPresentation(((5,),), (0,), 1)
    res = rho_finite_cyclic(pres, trivial(UNKNOT), 1)
    assert res.value == 0
    assert res.per_level == (0,)


def test_multi_component_internal_consistency():
    # 2-component chain with linking matrix [[2,1],[1,2]], residues (1,1) mod 3
    pres = SurgeryPresentation(((2, 1), (1, 2)), (1, 1), 3)
    cable = CableData.explicit(SeifertMatrix(((-1,),), kind="link"), components=2)
    res = rho_finite_cyclic(pres, cable, 3)
    assert res.value == Fraction(sum(res.per_level), 3)
    assert res.per_level[1] == res.per_level[2]


def test_sign_linking_matrix():
    assert sign_linking_matrix(knot_surgery_presentation(7, 7)) == 1
    assert sign_linking_matrix(knot_surgery_presentation(-7, 7)) == -1
    pres = SurgeryPresentation(((2, 1), (1, 2)), (1, 1), 3)
    assert sign_linking_matrix(pres) == 2
    hyperbolic = SurgeryPresentation(((0, 3), (3, 0)), (1, 1), 3)
    assert sign_linking_matrix(hyperbolic) == 0


# -- estimate from the universal bound chain ------------------------------------


@given(st.integers(0, 10**9))
def test_first_rho_estimate(seed):
    rng = random.Random(seed)
    a = random_knot_seifert(rng, size_max=8)
    n = rng.randint(1, 20)
    rho = rho_knot_surgery(a, n)
    bound = Fraction(n - 3 - 3 * abs(avg_signature(a, n)), 3)
    assert abs(rho) >= bound
