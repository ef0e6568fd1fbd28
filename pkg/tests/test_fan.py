"""Decorated fans: construction, walls, facet partitions, paths."""

import pytest

from mtfan.errors import ModuleDefinitionError
from mtfan.fan import (
    boundary_regions,
    build_mtf_fan,
    class_of,
    face_restriction_check,
    facet_partition,
    fan_paths,
    smallest_cone,
    wall_cone,
)
from mtfan.polyhedra import (
    cone_from_generators,
    cone_from_hrep,
    full_cone,
    minkowski_sum,
    validate_generalized_fan,
)
from mtfan.presets import preset_module
from mtfan.quiver import direct_sum, simple_module, zero_module


def fan_of(name):
    return build_mtf_fan(preset_module(name))


def ray2(x, y):
    return cone_from_generators(2, rays=[(x, y)])


def test_cone_counts():
    assert len(fan_of("a2-P1").cones) == 7
    assert len(fan_of("a2-S1").cones) == 3
    assert len(fan_of("nakayama2-121").cones) == 9
    assert len(fan_of("square-lambda").cones) == 39


def test_maximal_counts():
    assert len(fan_of("a2-P1").maximal_indices()) == 3
    assert len(fan_of("a2-S1").maximal_indices()) == 2
    assert len(fan_of("nakayama2-121").maximal_indices()) == 4
    assert len(fan_of("square-lambda").maximal_indices()) == 6


def test_dimension_duality_and_validation():
    for name in ("a2-P1", "a2-S1", "nakayama2-121"):
        mtf = fan_of(name)
        n = mtf.n
        for i, cone in enumerate(mtf.cones):
            assert cone.dim + mtf.newton.faces[i].dim == n
        assert validate_generalized_fan(mtf.fan).ok


def test_class_data_on_the_one_arrow_module():
    mtf = fan_of("a2-P1")
    by_cone = {mtf.cones[i]: d for i, d in enumerate(mtf.classes)}
    origin = cone_from_hrep(2, [(1, 0), (0, 1)], [])
    d = by_cone[origin]
    assert d.t_dims == (0, 0) and d.tbar_dims == (1, 1)
    assert d.supp_dims == ((0, 1), (1, 0))
    d = by_cone[ray2(0, 1)]
    assert d.t_dims == (0, 1) and d.w_dims == (1, 0)
    assert d.supp_dims == ((1, 0),)
    d = by_cone[ray2(-1, 0)]
    assert d.t_dims == (0, 0) and d.tbar_dims == (0, 1)
    assert d.supp_dims == ((0, 1),)
    d = by_cone[ray2(1, -1)]
    assert d.w_dims == (1, 1) and d.supp_dims == ((1, 1),)
    # chambers: everything torsion / top torsion / everything free
    chamber = cone_from_hrep(2, [], [(1, 0), (1, 1)])
    d = by_cone[chamber]
    assert d.t_dims == (1, 1) and d.f_dims == (0, 0)
    chamber = cone_from_hrep(2, [], [(-1, 0), (0, 1)])
    d = by_cone[chamber]
    assert d.t_dims == (0, 1) and d.f_dims == (1, 0)
    chamber = cone_from_hrep(2, [], [(0, -1), (-1, -1)])
    d = by_cone[chamber]
    assert d.t_dims == (0, 0) and d.f_dims == (1, 1)


def test_maximal_iff_middle_slice_vanishes():
    for name in ("a2-P1", "a2-S1", "nakayama2-121", "square-lambda"):
        mtf = fan_of(name)
        for i, cone in enumerate(mtf.cones):
            is_max = cone.dim == mtf.n
            w_zero = not any(mtf.classes[i].w_dims)
            assert is_max == w_zero


def test_class_of_locates():
    mtf = fan_of("a2-P1")
    cone, data = class_of(mtf, (2, 1))
    assert data.t_dims == (1, 1)
    assert cone.contains_relint((2, 1))
    cone, data = class_of(mtf, (0, 0))
    assert cone.dim == 0


def test_wall_cones():
    assert wall_cone(fan_of("a2-P1")) == ray2(1, -1)
    assert wall_cone(fan_of("a2-S1")) == cone_from_hrep(2, [(1, 0)], [])
    assert wall_cone(fan_of("nakayama2-121")) == cone_from_hrep(
        2, [(1, 0), (0, 1)], []
    )
    wall = wall_cone(fan_of("square-lambda"))
    assert wall.dim == 3
    assert wall.rays == (
        (0, 0, 1, -1),
        (0, 1, 0, -1),
        (1, -1, 0, 0),
        (1, 0, -1, 0),
    )


def test_wall_cone_is_cached_and_rejects_zero_module():
    mtf = fan_of("a2-P1")
    assert wall_cone(mtf) is wall_cone(mtf)
    z = build_mtf_fan(zero_module(preset_module("a2-P1").algebra))
    with pytest.raises(ModuleDefinitionError):
        wall_cone(z)


def test_smallest_cones():
    assert smallest_cone(fan_of("a2-P1")) == cone_from_hrep(
        2, [(1, 0), (0, 1)], []
    )
    # vanishing first vertex frees the first coordinate line
    assert smallest_cone(fan_of("a2-S1")) == cone_from_generators(
        2, lineality=[(0, 1)]
    )
    assert smallest_cone(fan_of("square-lambda")).dim == 0
    z = build_mtf_fan(zero_module(preset_module("a2-P1").algebra))
    assert smallest_cone(z) == full_cone(2)


def test_facet_partition_on_a2():
    mtf = fan_of("a2-P1")

    def parts(chamber):
        plus, minus = facet_partition(mtf, chamber)
        return set(plus), set(minus)

    top = cone_from_hrep(2, [], [(1, 0), (1, 1)])  # vertex (1, 1)
    assert parts(top) == ({ray2(0, 1), ray2(1, -1)}, set())
    mid = cone_from_hrep(2, [], [(-1, 0), (0, 1)])  # vertex (0, 1)
    assert parts(mid) == ({ray2(-1, 0)}, {ray2(0, 1)})
    low = cone_from_hrep(2, [], [(0, -1), (-1, -1)])  # vertex (0, 0)
    assert parts(low) == (set(), {ray2(-1, 0), ray2(1, -1)})


def test_facet_partition_requires_maximal_cone():
    mtf = fan_of("a2-P1")
    with pytest.raises(ModuleDefinitionError):
        facet_partition(mtf, ray2(0, 1))


def test_boundary_regions_cover_the_boundary():
    for name in ("a2-P1", "nakayama2-121", "square-lambda"):
        mtf = fan_of(name)
        for i in mtf.maximal_indices():
            plus, minus = boundary_regions(mtf, mtf.cones[i])
            assert len(plus) + len(minus) == len(mtf.cones[i].ineqs)


def test_fan_paths_on_a2():
    mtf = fan_of("a2-P1")
    cat = fan_paths(mtf)
    assert set(cat.vertices) == {(0, 0), (0, 1), (1, 1)}
    assert len(cat.increasing_paths) == 7
    newton = {cat.newton_path(p) for p in cat.maximal_paths}
    assert newton == {
        ((0, 0), (0, 1), (1, 1)),
        ((0, 0), (1, 1)),
    }
    for p in cat.maximal_paths:
        cones = cat.cone_path(p)
        assert all(mtf.cones[c].dim == mtf.n for c in cones)


def test_fan_paths_on_nakayama():
    cat = fan_paths(fan_of("nakayama2-121"))
    newton = {cat.newton_path(p) for p in cat.maximal_paths}
    assert newton == {
        ((0, 0), (1, 0), (2, 1)),
        ((0, 0), (1, 1), (2, 1)),
    }


def test_fan_paths_zero_module():
    z = build_mtf_fan(zero_module(preset_module("a2-P1").algebra))
    cat = fan_paths(z)
    assert cat.vertices == ((0, 0),)
    assert cat.increasing_paths == ((0,),)
    assert cat.maximal_paths == ((0,),)


def test_face_restriction():
    mtf = fan_of("a2-P1")
    top = cone_from_hrep(2, [], [(1, 0), (1, 1)])
    origin = cone_from_hrep(2, [(1, 0), (0, 1)], [])
    assert face_restriction_check(mtf, top, ray2(0, 1))
    assert face_restriction_check(mtf, top, origin)
    with pytest.raises(ModuleDefinitionError):
        face_restriction_check(mtf, top, ray2(-1, 0))


def test_direct_sum_newton_is_minkowski_and_fan_refines():
    m = preset_module("a2-P1")
    s = simple_module(m.algebra, 1)
    both = direct_sum(m, s)
    fm = build_mtf_fan(m)
    fs = build_mtf_fan(s)
    fb = build_mtf_fan(both)
    assert fb.newton.vertices == minkowski_sum(fm.newton, fs.newton).vertices
    # the fan of a direct sum refines the fans of its summands
    for cone in fb.cones:
        assert any(c.contains_cone(cone) for c in fm.cones)
        assert any(c.contains_cone(cone) for c in fs.cones)


def test_direct_sum_with_nakayama():
    m = preset_module("nakayama2-121")
    s = simple_module(m.algebra, 2)
    both = direct_sum(m, s)
    fm = build_mtf_fan(m)
    fs = build_mtf_fan(s)
    fb = build_mtf_fan(both)
    assert fb.newton.vertices == minkowski_sum(fm.newton, fs.newton).vertices
    for cone in fb.cones:
        assert any(c.contains_cone(cone) for c in fm.cones)
        assert any(c.contains_cone(cone) for c in fs.cones)
