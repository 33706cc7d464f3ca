"""Seifert matrices, families, presentations, and JSON input."""

import json
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from knotrho.exceptions import (
    InconsistentModulusError,
    InvalidParameterError,
    InvalidSeifertMatrixError,
    InvalidSlopeError,
    SeifertJSONError,
)
from knotrho.seifert import (
    KnotFamilyId,
    SeifertMatrix,
    SurgeryPresentation,
    det_int,
    jn_seifert,
    knot_surgery_presentation,
    mirror,
    seifert_from_json,
    torus_knot_seifert,
    twist_reduction,
    unknot_seifert,
)
from knotrho.verify import random_knot_seifert


def test_jn_small_cases():
    assert jn_seifert(1).entries == ((1, 1), (0, -1))
    a2 = jn_seifert(2)
    assert a2.size == 4
    assert tuple(a2.entries[i][i] for i in range(4)) == (1, 1, 1, -1)
    assert tuple(a2.entries[i][i + 1] for i in range(3)) == (1, 1, 1)
    assert a2.entries[0][2] == 0


def test_torus_small_cases():
    assert torus_knot_seifert(1).entries == ((1, 1), (0, 1))
    a3 = torus_knot_seifert(3)
    assert a3.size == 6
    assert all(a3.entries[i][i] == 1 for i in range(6))


def test_families_validate_up_to_200():
    # construction runs the knot validation: det(A - A^T) = +-1
    for n in range(1, 201):
        jn_seifert(n)
        torus_knot_seifert(n)


def test_family_skew_determinant_is_one():
    for n in (1, 2, 5, 9):
        a = jn_seifert(n)
        m = a.size
        skew = tuple(
            tuple(a.entries[i][j] - a.entries[j][i] for j in range(m)) for i in range(m)
        )
        assert det_int(skew) == 1


def test_unknot_is_empty():
    u = unknot_seifert()
    assert u.size == 0
    assert u.kind == "knot"


def test_mirror_example_and_involution():
    t = torus_knot_seifert(1)
    assert mirror(t).entries == ((-1, 0), (-1, -1))
    for n in (1, 2, 4):
        a = jn_seifert(n)
        assert mirror(mirror(a)) == a


def test_knot_validation_rejects_bad_matrices():
    with pytest.raises(InvalidSeifertMatrixError):
        SeifertMatrix(((1, 0), (0, 1)), kind="knot")  # A - A^T = 0
    with pytest.raises(InvalidSeifertMatrixError):
        SeifertMatrix(((1,),), kind="knot")  # odd size
    with pytest.raises(InvalidSeifertMatrixError):
        SeifertMatrix(((1, 1.5), (0, 1)), kind="knot")  # non-integer
    with pytest.raises(InvalidSeifertMatrixError):
        SeifertMatrix(((1, 1), (0,)), kind="knot")  # ragged
    # links need no unimodularity, odd sizes fine
    SeifertMatrix(((-1,),), kind="link")
    SeifertMatrix(((2, 0), (0, 2)), kind="link")


@given(st.integers(0, 10**6))
def test_random_knot_matrices_validate(seed):
    import random

    rng = random.Random(seed)
    a = random_knot_seifert(rng, size_max=10)
    assert a.kind == "knot"
    assert a.size % 2 == 0


def test_json_round_trip():
    a = jn_seifert(2)
    b = seifert_from_json(a.to_json())
    assert a == b


def test_json_parse_errors_are_distinct_from_validation():
    with pytest.raises(SeifertJSONError):
        seifert_from_json("{not json")
    with pytest.raises(SeifertJSONError):
        seifert_from_json(json.dumps({"kind": "knot", "size": 2}))
    with pytest.raises(SeifertJSONError):
        seifert_from_json(json.dumps({"kind": "knot", "size": 1, "entries": [[1, 2]]}))
    with pytest.raises(SeifertJSONError):
        seifert_from_json(json.dumps({"kind": "weird", "size": 0, "entries": []}))
    # well-formed JSON, invalid Seifert data
    with pytest.raises(InvalidSeifertMatrixError):
        seifert_from_json(json.dumps({"kind": "knot", "size": 2, "entries": [[1, 0], [0, 1]]}))


def test_knot_surgery_presentation():
    p = knot_surgery_presentation(5, 5)
    assert p.linking == ((5,),)
    assert p.residues == (1,)
    assert p.modulus == 5
    q = knot_surgery_presentation(-5, 5)
    assert q.linking == ((-5,),)
    with pytest.raises(InvalidSlopeError):
        knot_surgery_presentation(0, 1)
    with pytest.raises(InconsistentModulusError):
        knot_surgery_presentation(4, 5)


def test_presentation_validation():
    with pytest.raises(InvalidParameterError):
        SurgeryPresentation(((1, 2), (3, 1)), (0, 0), 2)  # not symmetric
    with pytest.raises(InconsistentModulusError):
        SurgeryPresentation(((3,),), (1,), 2)  # 3*1 != 0 mod 2
    p = SurgeryPresentation(((2, 1), (1, 2)), (1, 4), 3)
    assert p.residues == (1, 1)
    assert p.residue_quadratic() == 2 + 1 + 1 + 2


def test_twist_reduction_examples():
    r = twist_reduction(2, 3)
    assert (r.slope_a, r.slope_b, r.degenerate) == (14, Fraction(1, 3), False)
    assert twist_reduction(0, 1).slope_a == 4
    assert twist_reduction(0, 1).slope_b == 1
    assert twist_reduction(5, 2).slope_b == Fraction(1, 2)
    degenerate = twist_reduction(7, 0)
    assert degenerate.degenerate and degenerate.slope_b is None


def test_family_ids():
    assert KnotFamilyId("torus2", 3).seifert() == torus_knot_seifert(3)
    assert KnotFamilyId("jn", 2).seifert() == jn_seifert(2)
    assert KnotFamilyId("unknot").seifert().size == 0
    assert str(KnotFamilyId("jn", 2)) == "jn:2"
    with pytest.raises(InvalidParameterError):
        KnotFamilyId("torus2", 0)
    with pytest.raises(InvalidParameterError):
        KnotFamilyId("torus3", 1)


def test_det_int_matches_bareiss_on_dense():
    rows = ((2, 3, 1), (0, 1, 4), (5, 2, 2))
    # expansion by hand: 2*(2-8) - 3*(0-20) + 1*(0-5) = -12 + 60 - 5 = 43
    assert det_int(rows) == 43
    assert det_int(()) == 1
