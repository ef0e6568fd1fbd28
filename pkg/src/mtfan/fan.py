"""The equivalence fan of a module: cones of the normal fan of its Newton
polytope decorated with torsion-theoretic class data.

Functionals are equivalent relative to M exactly when they lie in the
relative interior of the same cone; each cone gets the canonical filtration
(t, tbar, w, f, fbar), the stable support factors of w, and the t-set, all
computed at an interior witness and cross-checked at random interior points.
"""
from __future__ import annotations

import random
from dataclasses import dataclass

from .errors import ModuleDefinitionError
from .exact import rank
from .polyhedra import (
    Cone,
    GeneralizedFan,
    NormalFan,
    Order,
    cone_from_generators,
    cone_from_hrep,
    cone_intersection,
    locate_index,
    normal_fan,
    vertex_order,
)
from .quiver import Module, dim_vector
from .sublattice import newton_polytope
from .stability import (
    as_theta,
    canonical_sequences,
    evaluate,
    supp_factors,
    t_set,
)

_SAMPLE_SEED = 0x5EED
_EXTRA_SAMPLES = 3


@dataclass(frozen=True)
class TFClassData:
    """Torsion-theoretic invariants attached to one cone of the fan."""

    cone_index: int
    newton_face_id: int
    t_dims: tuple[int, ...]
    tbar_dims: tuple[int, ...]
    w_dims: tuple[int, ...]
    f_dims: tuple[int, ...]
    fbar_dims: tuple[int, ...]
    supp_dims: tuple[tuple[int, ...], ...]  # sorted multiset
    witness: tuple[int, ...]
    filtration: object  # CanonicalSequenceData at the witness
    supp: tuple  # (factor module, dim vector) pairs
    t_set: frozenset


@dataclass(frozen=True)
class MTFFan:
    """Newton polytope, its normal fan, and per-cone class data."""

    module: Module
    normal: NormalFan
    classes: tuple[TFClassData, ...]

    @property
    def newton(self):
        return self.normal.polytope

    @property
    def fan(self) -> GeneralizedFan:
        return self.normal.fan

    @property
    def cones(self):
        return self.normal.cones

    @property
    def n(self):
        return self.module.algebra.n

    def cone_index(self, cone):
        return self.normal.cone_index(cone)

    def maximal_indices(self):
        return self.fan.maximal_indices()


def _class_at(module, theta):
    cs = canonical_sequences(theta, module)
    supp = supp_factors(theta, cs.w)
    ts = t_set(theta, module)
    return cs, supp, ts


def build_mtf_fan(module):
    """Fan of equivalence classes of stability vectors relative to a module.

    Class data per cone is computed at the deterministic interior witness
    and re-derived at a few random interior points; any disagreement would
    mean the cone decomposition is wrong, so it is asserted.
    """
    P = newton_polytope(module)
    nfan = normal_fan(P)
    n = module.algebra.n
    classes = []
    rng = random.Random(_SAMPLE_SEED)
    for idx, cone in enumerate(nfan.cones):
        witness = cone.relint_point()
        theta = as_theta(witness, n)
        cs, supp, ts = _class_at(module, theta)
        supp_dims = tuple(sorted(d for _, d in supp))
        for _ in range(_EXTRA_SAMPLES):
            eta = as_theta(cone.random_relint_point(rng), n)
            cs2, supp2, ts2 = _class_at(module, eta)
            assert cs2.t == cs.t and cs2.tbar == cs.tbar
            assert tuple(sorted(d for _, d in supp2)) == supp_dims
            assert ts2 == ts
        face = P.faces[idx]
        # the min and max of the Newton face are the classes of t and tbar
        face_vecs = [tuple(map(int, P.vertices[v])) for v in face.vertex_ids]
        t_vec, tbar_vec = tuple(cs.t.dims), tuple(cs.tbar.dims)
        assert t_vec in face_vecs and tbar_vec in face_vecs
        assert all(vertex_order(t_vec, v) in (Order.LESS, Order.EQUAL) for v in face_vecs)
        assert all(vertex_order(tbar_vec, v) in (Order.GREATER, Order.EQUAL) for v in face_vecs)
        # duality of dimensions, and the span of the support cuts the cone
        assert cone.dim == n - face.dim
        assert cone.dim == n - rank(supp_dims)
        classes.append(
            TFClassData(
                cone_index=idx,
                newton_face_id=idx,
                t_dims=t_vec,
                tbar_dims=tbar_vec,
                w_dims=dim_vector(cs.w),
                f_dims=dim_vector(cs.f),
                fbar_dims=dim_vector(cs.fbar),
                supp_dims=supp_dims,
                witness=witness,
                filtration=cs,
                supp=supp,
                t_set=ts,
            )
        )
    return MTFFan(module, nfan, tuple(classes))


def class_of(mtf, theta):
    """Cone and class data at a functional (theta lies in its relint)."""
    theta = as_theta(theta, mtf.n)
    idx = locate_index(mtf.normal, theta)
    return mtf.cones[idx], mtf.classes[idx]


_wall_cache: dict = {}


def wall_cone(mtf):
    """The set of functionals at which the module itself is semistable.

    Computed as the intersection of the normal cones at the Newton vertices
    0 and [M]; equals the normal cone of the smallest face containing both.
    """
    cached = _wall_cache.get(id(mtf))
    if cached is not None and cached[0] is mtf:
        return cached[1]
    module = mtf.module
    if module.is_zero():
        raise ModuleDefinitionError("the wall is undefined for the zero module")
    P = mtf.newton
    v0 = P.vertices.index((0,) * mtf.n)
    vM = P.vertices.index(tuple(module.dims))
    c0 = mtf.cones[P.vertex_face_id(v0)]
    cM = mtf.cones[P.vertex_face_id(vM)]
    wall = cone_intersection(c0, cM)
    carrier = [
        set(f.vertex_ids) for f in P.faces if {v0, vM} <= set(f.vertex_ids)
    ]
    smallest = frozenset(set.intersection(*carrier))
    assert wall == mtf.cones[P.face_id(smallest)]
    from .stability import wall_membership

    probe = wall.relint_point()
    assert wall_membership(as_theta(probe, mtf.n), module)
    for i in mtf.maximal_indices():
        if not wall.contains_cone(mtf.cones[i]):
            off = mtf.cones[i].relint_point()
            assert not wall_membership(as_theta(off, mtf.n), module)
    _wall_cache[id(mtf)] = (mtf, wall)
    return wall


def smallest_cone(mtf):
    """Intersection of all cones: the span of the coordinate functionals at
    vertices where the module vanishes."""
    module = mtf.module
    gens = [
        tuple(int(i == j) for j in range(mtf.n))
        for i, d in enumerate(module.dims)
        if d == 0
    ]
    cone = cone_from_generators(mtf.n, (), gens)
    at_zero = mtf.cones[locate_index(mtf.normal, (0,) * mtf.n)]
    assert cone == at_zero
    meet = mtf.cones[0]
    for c in mtf.cones[1:]:
        meet = cone_intersection(meet, c)
    assert cone == meet
    return cone


def _newton_vertex_of_maximal(mtf, idx):
    face = mtf.newton.faces[idx]
    if len(face.vertex_ids) != 1:
        raise ModuleDefinitionError("cone is not maximal")
    return tuple(map(int, mtf.newton.vertices[face.vertex_ids[0]]))


def _edge_neighbors(mtf, idx):
    """(facet cone index, neighbor maximal cone index) pairs around a
    maximal cone, one per Newton edge at its vertex."""
    P = mtf.newton
    vid = P.faces[idx].vertex_ids[0]
    out = []
    for eid in P.edges():
        vs = P.faces[eid].vertex_ids
        if vid in vs:
            other = vs[0] if vs[1] == vid else vs[1]
            out.append((eid, P.vertex_face_id(other)))
    return out


def facet_partition(mtf, cone):
    """Split the fan facets of a maximal cone by the direction of the Newton
    edge they correspond to.

    Returns (plus, minus): facets across which the Newton vertex drops,
    respectively rises.  Each facet falls in exactly one part; the split is
    cross-checked torsion-theoretically at a facet witness (the vertex drops
    iff t stops being torsion there, rises iff f stops being free).
    """
    idx = mtf.cone_index(cone)
    if cone.dim != mtf.n:
        raise ModuleDefinitionError("facet partition needs a maximal cone")
    v = _newton_vertex_of_maximal(mtf, idx)
    data = mtf.classes[idx]
    plus, minus = [], []
    pairs = _edge_neighbors(mtf, idx)
    assert len(pairs) == len(cone.ineqs)
    for eid, nid in pairs:
        tau = mtf.cones[eid]
        v2 = _newton_vertex_of_maximal(mtf, nid)
        order = vertex_order(v, v2)
        assert order in (Order.LESS, Order.GREATER)
        theta = as_theta(tau.relint_point(), mtf.n)
        cs_tau = canonical_sequences(theta, mtf.module)
        t_stays_torsion = tuple(cs_tau.t.dims) == data.t_dims
        f_stays_free = tuple(cs_tau.tbar.dims) == data.tbar_dims
        if order is Order.GREATER:
            plus.append(tau)
            assert not t_stays_torsion and f_stays_free
        else:
            minus.append(tau)
            assert t_stays_torsion and not f_stays_free
    return tuple(plus), tuple(minus)


def boundary_regions(mtf, cone):
    """Decompose the boundary of a maximal cone into the facets where t
    degenerates (plus side) and where f degenerates (minus side).

    The union of the two facet families is the whole boundary: every proper
    face of the cone lies in some listed facet (checked on face witnesses).
    """
    plus, minus = facet_partition(mtf, cone)
    both = plus + minus
    for face in cone.faces():
        if face == cone:
            continue
        probe = face.relint_point()
        assert any(c.contains(probe) for c in both) or not both
    return plus, minus


@dataclass(frozen=True)
class FanPathCatalog:
    """Directed paths through adjacent maximal cones, oriented so that the
    Newton vertex increases coordinatewise along every step."""

    cone_indices: tuple[int, ...]  # maximal cones, one per Newton vertex
    vertices: tuple[tuple[int, ...], ...]  # Newton vertex per node
    edges: tuple[tuple[int, int], ...]  # directed node pairs (small, large)
    increasing_paths: tuple[tuple[int, ...], ...]  # node sequences, all
    maximal_paths: tuple[tuple[int, ...], ...]  # inextensible ones

    def newton_path(self, path):
        return tuple(self.vertices[i] for i in path)

    def cone_path(self, path):
        return tuple(self.cone_indices[i] for i in path)


def fan_paths(mtf):
    """Catalog of increasing paths in the fan.

    Nodes are the maximal cones (equivalently the Newton vertices); steps
    cross a shared facet, which happens exactly along Newton edges, and are
    oriented by the coordinatewise vertex order.
    """
    P = mtf.newton
    node_faces = [i for i, f in enumerate(P.faces) if f.dim == 0]
    vid_to_node = {}
    vertices = []
    for node, fid in enumerate(node_faces):
        vid = P.faces[fid].vertex_ids[0]
        vid_to_node[vid] = node
        vertices.append(tuple(map(int, P.vertices[vid])))
    edges = []
    for eid in P.edges():
        a, b = P.faces[eid].vertex_ids
        va, vb = vertices[vid_to_node[a]], vertices[vid_to_node[b]]
        order = vertex_order(va, vb)
        assert order in (Order.LESS, Order.GREATER)
        if order is Order.LESS:
            edges.append((vid_to_node[a], vid_to_node[b]))
        else:
            edges.append((vid_to_node[b], vid_to_node[a]))
    succ = {i: [] for i in range(len(vertices))}
    pred = {i: [] for i in range(len(vertices))}
    for a, b in edges:
        succ[a].append(b)
        pred[b].append(a)
    paths = []

    def extend(path):
        paths.append(tuple(path))
        for nxt in sorted(succ[path[-1]]):
            extend(path + [nxt])

    for start in range(len(vertices)):
        extend([start])
    maximal = tuple(
        p for p in paths if not pred[p[0]] and not succ[p[-1]]
    )
    return FanPathCatalog(
        cone_indices=tuple(P.vertex_face_id(P.faces[f].vertex_ids[0]) for f in node_faces),
        vertices=tuple(vertices),
        edges=tuple(sorted(edges)),
        increasing_paths=tuple(sorted(paths)),
        maximal_paths=tuple(sorted(maximal)),
    )


def face_restriction_check(mtf, cone, face_cone):
    """Whether a face of a cone is cut out of it by the span conditions of
    its own support: face == cone intersected with {theta(d) = 0 for every
    support class d of the face}."""
    idx = mtf.cone_index(cone)
    fidx = mtf.cone_index(face_cone)
    if not face_cone.is_face_of(cone):
        raise ModuleDefinitionError("second cone is not a face of the first")
    supp = mtf.classes[fidx].supp_dims
    cut = cone_from_hrep(
        mtf.n, cone.eqs + tuple(tuple(d) for d in supp), cone.ineqs
    )
    return cut == face_cone
