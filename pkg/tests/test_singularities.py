"""Tests for singular-locus classification against the projective scan."""

import random
from fractions import Fraction

import pytest

from howe_sextic.exact_arith import QQ, PrimeField
from howe_sextic.howe_model import (
    Quintuple,
    SexticModel,
    UnsupportedCharacteristic,
    build_sextic,
    iter_howe_triples,
    random_quintuple,
)
from howe_sextic.singularities import (
    TYPE_I,
    TYPE_II,
    TYPE_III,
    classify,
    kind_from_point_set,
    point_multiplicity_is_two,
    scan_singular_points,
    singular_points,
    verify_singular_point,
)

F7 = PrimeField(7)
F11 = PrimeField(11)
F31 = PrimeField(31)
F101 = PrimeField(101)


def _point_coord_set(points):
    return {p.coords for p in points}


def test_pinned_kind_one_example_with_its_five_points():
    m = build_sextic(Quintuple(F31, 3, 9, 27, 19, 26))
    report = classify(m, with_points=True)
    assert report.kind == TYPE_I
    assert report.witnesses["fired"] == "generic-affine"
    expected = {
        (F31(0), F31(0), F31(1)),
        (F31(7), F31(14), F31(1)),
        (F31(7), F31(-14), F31(1)),
        (F31(-7), F31(14), F31(1)),
        (F31(-7), F31(-14), F31(1)),
    }
    assert _point_coord_set(report.points) == expected


def test_pinned_kind_two_example_with_points_at_infinity():
    m = build_sextic(Quintuple(F31, 3, 25, 17, 21, 18))
    report = classify(m, with_points=True)
    assert report.kind == TYPE_II
    expected = {
        (F31(0), F31(0), F31(1)),
        (F31(13), F31(1), F31(0)),
        (F31(-13), F31(1), F31(0)),
    }
    assert _point_coord_set(report.points) == expected
    # The normalized model (c06 scaled to 1) has these exact coefficients.
    assert tuple(int(c) for c in m.normalize().coefficients()) == (
        23, 4, 4, 4, 0, 19, 1, 22, 12,
    )


def test_pinned_kind_three_example_recomputed():
    m = build_sextic(Quintuple(F31, 3, 2, 16, 28, 9))
    report = classify(m, with_points=True)
    assert report.kind == TYPE_III
    assert report.witnesses["fired"] == "z-axis-discriminant"
    expected = {
        (F31(0), F31(0), F31(1)),
        (F31(0), F31(8), F31(1)),
        (F31(0), F31(-8), F31(1)),
    }
    assert _point_coord_set(report.points) == expected
    assert tuple(int(c) for c in m.coefficients()) == (
        11, 5, 21, 5, 3, 5, 22, 5, 26,
    )


def test_exhaustive_f7_points_match_the_projective_scan():
    for triple in iter_howe_triples(7):
        q = next(triple.quintuple_orderings(F7))
        model = build_sextic(q)
        reported = singular_points(model)
        assert all(p.coords is not None for p in reported)
        scanned = set(scan_singular_points(model))
        assert _point_coord_set(reported) == scanned
        assert classify(model).kind == kind_from_point_set(scan_singular_points(model))


def test_random_f11_classification_matches_the_projective_scan():
    rng = random.Random(1105)
    triples = list(iter_howe_triples(11))
    for triple in rng.sample(triples, 120):
        q = next(triple.quintuple_orderings(F11))
        model = build_sextic(q)
        scanned = scan_singular_points(model)
        assert classify(model).kind == kind_from_point_set(scanned)
        assert _point_coord_set(singular_points(model)) == set(scanned)


def test_reported_points_are_singular_with_multiplicity_two():
    rng = random.Random(404)
    for field in (F11, F31, F101):
        for _ in range(12):
            model = build_sextic(random_quintuple(field, rng))
            for pt in singular_points(model):
                assert pt.coords is not None
                assert verify_singular_point(model, pt.coords)
                assert point_multiplicity_is_two(model, pt.coords)


def test_point_sets_are_closed_under_sign_flips():
    rng = random.Random(505)
    for field in (F11, F31, F101):
        for _ in range(10):
            model = build_sextic(random_quintuple(field, rng))
            coords = _point_coord_set(singular_points(model))
            for yy, zz, xx in coords:
                if xx:
                    orbit = {(yy, zz, xx), (-yy, zz, xx), (yy, -zz, xx), (-yy, -zz, xx)}
                else:
                    orbit = {(yy, zz, xx), (-yy, zz, xx)}
                assert orbit <= coords


def test_kinds_two_and_three_never_fire_together():
    # classify() asserts mutual exclusion internally; drive it broadly.
    rng = random.Random(606)
    kinds = {TYPE_I: 0, TYPE_II: 0, TYPE_III: 0}
    for field in (F11, F31, F101):
        for _ in range(500):
            report = classify(build_sextic(random_quintuple(field, rng)))
            kinds[report.kind] += 1
            if report.kind == TYPE_II:
                assert report.witnesses["fired"].startswith("infinity")
            elif report.kind == TYPE_III:
                assert report.witnesses["fired"].endswith("discriminant")
    assert kinds[TYPE_I] > 0  # the generic case must dominate a random sample
    assert kinds[TYPE_I] > kinds[TYPE_II] + kinds[TYPE_III]


def test_origin_node_is_always_reported():
    rng = random.Random(707)
    for field in (F11, F101):
        for _ in range(20):
            model = build_sextic(random_quintuple(field, rng))
            pts = singular_points(model)
            origin = (field.zero(), field.zero(), field.one())
            assert origin in _point_coord_set(pts)
            assert len(pts) == (5 if classify(model).kind == TYPE_I else 3)


def test_rational_models_classify_and_mark_non_rational_points():
    m = build_sextic(Quintuple(QQ, 7, 2, 3, 4, 6))
    report = classify(m, with_points=True)
    assert report.kind == TYPE_I
    markers = [p for p in report.points if p.coords is None]
    assert len(markers) == 2
    squares = dict(p.square_of for p in markers)
    assert squares == {
        "Y^2": Fraction(-108, 3773),
        "Z^2": Fraction(-124, 3773),
    }
    for p in markers:
        assert p.field_label == "symbolic"
        assert p.minimal_poly.startswith("T^2 - ")
    # And the marked squares really solve the three-equation system.
    from howe_sextic.singularities import _fhat_partial_u, _fhat_partial_v

    u, v = squares["Y^2"], squares["Z^2"]
    assert m.evaluate_uv(u, v) == 0
    assert _fhat_partial_u(m, u, v) == 0
    assert _fhat_partial_v(m, u, v) == 0


def test_report_json_shape():
    m = build_sextic(Quintuple(F31, 3, 9, 27, 19, 26))
    data = classify(m, with_points=True).to_json_dict()
    assert data["kind"] == "I"
    assert data["witnesses"]["fired"] == "generic-affine"
    assert len(data["points"]) == 5
    for entry in data["points"]:
        assert entry["field"] in ("Fp", "Fp2", "QQ", "symbolic")
        assert entry["coords"] is None or len(entry["coords"]) == 3


def test_extension_coordinates_appear_when_the_squares_are_nonresidues():
    # Over F_11 some kind-I models have u or v a nonsquare; their points
    # then live in F_121 and still check out exactly.
    rng = random.Random(808)
    seen_ext = False
    for _ in range(200):
        model = build_sextic(random_quintuple(F11, rng))
        for pt in singular_points(model):
            if pt.field_label == "Fp2":
                seen_ext = True
                assert verify_singular_point(model, pt.coords)
        if seen_ext:
            break
    assert seen_ext


def test_classify_rejects_unsupported_characteristic():
    F5 = PrimeField(5)
    fake = SexticModel(
        field=F5,
        c60=F5(1), c42=F5(1), c40=F5(1), c24=F5(1), c22=F5(0),
        c20=F5(1), c06=F5(1), c04=F5(1), c02=F5(4),
    )
    with pytest.raises(UnsupportedCharacteristic):
        classify(fake)


def test_scan_oracle_rejects_rational_models():
    m = build_sextic(Quintuple(QQ, 7, 2, 3, 4, 6))
    with pytest.raises(ValueError):
        scan_singular_points(m)
