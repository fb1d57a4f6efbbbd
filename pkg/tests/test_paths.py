# tests/test_paths.py
from fractions import Fraction
from itertools import product

import pytest

from app.exactmath.laurent import LaurentPoly
from app.lhcomb.bounded_sequence import BoundedSequence, Variant
from app.partitions.partition import Partition, SkewShape
from app.paths.lattice_path import LatticePath, PathKind, Step, path_from_sequence, path_weight, sequence_from_path
from app.paths.path_families import (
    family_is_disjoint,
    family_is_valid,
    family_weight,
    filling_to_paths,
    lgv_check,
    nw_endpoints,
    path_criterion_check,
    paths_to_tableau,
    sequence_path_check,
    tableau_path_roundtrip_check,
    tableau_to_paths,
)
from app.paths.svg_renderer import PathDiagramRenderer, render_paths
from app.tableaux.tableau import OrderType, Tableau, tableau_from_rows, validate, weight


def test_anti_lecture_hall_composition_path():
    seq = BoundedSequence(Variant.AL, 8, (5, 4, 5, 5, 3, 3))
    path = path_from_sequence(seq)
    assert (path.kind, path.start, path.end) == (PathKind.NW, 8, 2)
    assert [step.column for step in path.steps] == [3, 4, 5, 6, 7, 8]
    assert path.steps[0].height == Fraction(5, 3)
    assert path.is_monotone()
    assert sequence_from_path(path) == seq
    assert path_weight(path) == (25, LaurentPoly.monomial(3, 3))


def test_lecture_hall_partition_path():
    seq = BoundedSequence(Variant.L, 8, (15, 12, 8, 5, 3, 0))
    path = path_from_sequence(seq)
    assert (path.kind, path.start, path.end) == (PathKind.NE, 2, 8)
    assert path.vertices()[0] == (2, Fraction(-1, 9))
    assert path.vertices()[-1] == (8, None)
    assert sequence_from_path(path) == seq
    assert path_weight(path) == (43, LaurentPoly.monomial(4, 4))


def test_path_validation():
    assert PathKind.parse("ne") is PathKind.NE
    with pytest.raises(ValueError):
        PathKind.parse("SW")
    with pytest.raises(ValueError):
        LatticePath(PathKind.NW, 3, 1, (Step(2, Fraction(1)),))
    with pytest.raises(ValueError):
        LatticePath(PathKind.NW, 3, 2, (Step(3, Fraction(1, 2)),))
    with pytest.raises(ValueError):
        path_from_sequence(BoundedSequence(Variant.LBAR, 2, (3, 1)))


def test_sample_tableau_families(sample_tableau):
    assert nw_endpoints(sample_tableau.shape, 5) == [(10, 7), (9, 4), (6, 2), (4, 1), (0, 0)]
    for kind in (PathKind.NW, PathKind.NE):
        paths = tableau_to_paths(sample_tableau, kind)
        assert family_is_disjoint(paths)
        assert family_weight(paths) == weight(sample_tableau)
        assert paths_to_tableau(paths, sample_tableau.shape, 5, kind) == sample_tableau
    assert len(tableau_to_paths(sample_tableau, PathKind.NE)) == 6


def test_intersecting_family_is_rejected():
    shape = SkewShape(Partition.of(1, 1))
    paths = [
        LatticePath(PathKind.NW, 2, 1, (Step(2, Fraction(0)),)),
        LatticePath(PathKind.NW, 1, 0, (Step(1, Fraction(0)),)),
    ]
    assert not family_is_disjoint(paths)
    with pytest.raises(ValueError):
        paths_to_tableau(paths, shape, 2)


@pytest.mark.parametrize("variant,n,k", [(Variant.AL, 4, 2), (Variant.AL, 5, 5), (Variant.L, 4, 3), (Variant.L, 5, 1)])
def test_sequence_path_bijection(variant, n, k):
    assert sequence_path_check(variant, n, k, 8)


@pytest.mark.parametrize("shape", [SkewShape(Partition.of(2, 1)), SkewShape(Partition.of(2, 2), Partition.of(1))])
def test_tableau_path_round_trip(shape):
    assert tableau_path_roundtrip_check(shape, 3, 6)


_CRITERION_SHAPES = [
    SkewShape(Partition.of(2, 1)),
    SkewShape(Partition.of(2, 2), Partition.of(1)),
    SkewShape(Partition.of(1, 1, 1)),
]


@pytest.mark.parametrize("kind", [PathKind.NW, PathKind.NE])
@pytest.mark.parametrize("shape", _CRITERION_SHAPES)
def test_validity_iff_monotone_disjoint_family(shape, kind):
    order_type = OrderType.named("ge-gt", 3)
    cells = shape.cells()
    for values in product(range(7), repeat=len(cells)):
        t = Tableau(shape, dict(zip(cells, values)), order_type)
        paths = filling_to_paths(t, kind)
        valid = validate(t)
        assert valid == (all(p.is_monotone() for p in paths) and family_is_disjoint(paths)), values
        assert valid == family_is_valid(paths)
        if not valid:
            with pytest.raises(ValueError):
                tableau_to_paths(t, kind)


@pytest.mark.parametrize("shape", _CRITERION_SHAPES)
def test_path_criterion_check(shape):
    assert path_criterion_check(shape, 3, 4)


def test_invalid_filling_gives_disjoint_but_non_monotone_family():
    # 1/3 < 2/4 violates the row condition
    t = tableau_from_rows(SkewShape(Partition.of(2, 1)), [[1, 2], [0]], OrderType.named("ge-gt", 3))
    assert not validate(t)
    paths = filling_to_paths(t)
    assert family_is_disjoint(paths)
    assert not paths[0].is_monotone()
    assert not family_is_valid(paths)
    with pytest.raises(ValueError):
        tableau_to_paths(t)


@pytest.mark.parametrize("shape,n", [
    (SkewShape(Partition.of(2, 1)), 3),
    (SkewShape(Partition.of(2, 2), Partition.of(1)), 3),
    (SkewShape(Partition.of(1, 1)), 2),
])
def test_lgv(shape, n):
    assert lgv_check(shape, n, 6)


def test_svg_is_deterministic(sample_tableau, tmp_path):
    paths = tableau_to_paths(sample_tableau)
    svg = render_paths(paths)
    assert svg == render_paths(paths)
    assert svg.count("<polyline") == len(paths)
    out = PathDiagramRenderer().save(paths, tmp_path / "family.svg")
    with open(out, encoding="utf-8") as f:
        assert f.read() == svg
    with pytest.raises(ValueError):
        PathDiagramRenderer(0)
