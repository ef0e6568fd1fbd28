"""Exact polyhedral geometry: cones, polytopes, face lattices, normal fans.

All coordinates are rational and all predicates exact.  Cones carry both a
canonical H-representation (equalities and irredundant facet inequalities,
primitive integer normals) and a canonical V-representation (Hermite-normal
lineality basis plus the primitive extreme rays of the cone intersected with
the orthogonal complement of its lineality), so structural equality of Cone
values coincides with geometric equality.

Conversion between the two representations runs the double description
method: facets of a cone are the extreme rays of its dual, so one insertion
loop serves both directions.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass, field
from fractions import Fraction

from .exact import (
    dot,
    hnf,
    lattice_basis_of_span,
    nullspace,
    primitive,
    rank,
    rref,
    subspace_canonical,
)


class Order(enum.Enum):
    """Coordinatewise comparison outcome for two vectors."""

    LESS = "less"
    GREATER = "greater"
    EQUAL = "equal"
    INCOMPARABLE = "incomparable"


def vertex_order(u, v):
    if len(u) != len(v):
        raise ValueError("vectors of different lengths")
    le = all(a <= b for a, b in zip(u, v))
    ge = all(a >= b for a, b in zip(u, v))
    if le and ge:
        return Order.EQUAL
    if le:
        return Order.LESS
    if ge:
        return Order.GREATER
    return Order.INCOMPARABLE


# ---------------------------------------------------------------------------
# double description


def _independent_subset(normals, d):
    """Indices of d linearly independent rows, greedily from the front."""
    chosen = []
    for i, v in enumerate(normals):
        if rank([normals[j] for j in chosen] + [v]) > len(chosen):
            chosen.append(i)
            if len(chosen) == d:
                return chosen
    return None


def _invert(mat):
    d = len(mat)
    work = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(d)]
            for i, row in enumerate(mat)]
    for c in range(d):
        pr = next(i for i in range(c, d) if work[i][c] != 0)
        work[c], work[pr] = work[pr], work[c]
        pv = work[c][c]
        work[c] = [x / pv for x in work[c]]
        for i in range(d):
            if i != c and work[i][c] != 0:
                f = work[i][c]
                work[i] = [a - f * b for a, b in zip(work[i], work[c])]
    return [tuple(row[d:]) for row in work]


def _dd_pointed(normals, d):
    """Extreme rays of the pointed cone {t in R^d : a.t >= 0 for all a}.

    The normals must span R^d (which is exactly pointedness).  Insertion
    order is the given order; adjacency uses the combinatorial zero-set test.
    """
    if d == 0:
        return ()
    init = _independent_subset(normals, d)
    if init is None:
        raise ValueError("cone is not pointed: normals do not span")
    inv = _invert([normals[i] for i in init])
    rays = [primitive(tuple(row[j] for row in inv)) for j in range(d)]
    processed = [normals[i] for i in init]
    rest = [normals[i] for i in range(len(normals)) if i not in set(init)]

    for a in rest:
        vals = [dot(a, r) for r in rays]
        if all(v >= 0 for v in vals):
            processed.append(a)
            continue
        zero_sets = [
            frozenset(k for k, b in enumerate(processed) if dot(b, r) == 0)
            for r in rays
        ]
        plus = [i for i, v in enumerate(vals) if v > 0]
        zero = [i for i, v in enumerate(vals) if v == 0]
        minus = [i for i, v in enumerate(vals) if v < 0]
        new_rays = []
        for i in plus:
            for j in minus:
                meet = zero_sets[i] & zero_sets[j]
                adjacent = True
                for k in range(len(rays)):
                    if k != i and k != j and meet <= zero_sets[k]:
                        adjacent = False
                        break
                if adjacent:
                    combo = tuple(
                        vals[i] * rays[j][c] - vals[j] * rays[i][c]
                        for c in range(d)
                    )
                    new_rays.append(primitive(combo))
        rays = [rays[i] for i in plus + zero] + new_rays
        processed.append(a)
    return tuple(sorted(set(rays)))


def _dd(ineqs, eqs, n):
    """V-representation of {x : eq.x = 0, a.x >= 0}.

    Returns (lineality_basis, rays): a rational basis of the lineality space
    and the primitive extreme rays of the cone intersected with the
    orthogonal complement of the lineality, sorted.
    """
    ineqs = [tuple(v) for v in ineqs]
    eqs = [tuple(v) for v in eqs]
    lin = nullspace(eqs + ineqs, n)
    w_basis = nullspace(eqs + list(lin), n)
    d = len(w_basis)
    if d == 0:
        return lin, ()
    restricted = []
    seen = set()
    for a in ineqs:
        ar = primitive(tuple(dot(a, w) for w in w_basis))
        if any(ar) and ar not in seen:
            seen.add(ar)
            restricted.append(ar)
    rays_t = _dd_pointed(restricted, d)
    rays = sorted(
        primitive(tuple(sum(t[j] * w_basis[j][c] for j in range(d))
                        for c in range(n)))
        for t in rays_t
    )
    return lin, tuple(rays)


# ---------------------------------------------------------------------------
# cones


@dataclass(frozen=True)
class Cone:
    """Polyhedral cone in canonical form; equal cones are equal values."""

    n: int
    dim: int
    eqs: tuple[tuple[int, ...], ...]
    ineqs: tuple[tuple[int, ...], ...]
    lineality: tuple[tuple[int, ...], ...]
    rays: tuple[tuple[int, ...], ...]

    def contains(self, theta):
        return all(dot(e, theta) == 0 for e in self.eqs) and all(
            dot(a, theta) >= 0 for a in self.ineqs
        )

    def contains_relint(self, theta):
        """Membership in the relative interior (facet inequalities strict)."""
        return all(dot(e, theta) == 0 for e in self.eqs) and all(
            dot(a, theta) > 0 for a in self.ineqs
        )

    def contains_cone(self, other):
        gens = list(other.rays)
        for v in other.lineality:
            gens.append(v)
            gens.append(tuple(-x for x in v))
        return all(self.contains(g) for g in gens)

    def relint_point(self):
        """Deterministic integer point in the relative interior."""
        if self.rays:
            pt = tuple(sum(r[c] for r in self.rays) for c in range(self.n))
        elif self.lineality:
            pt = tuple(sum(r[c] for r in self.lineality) for c in range(self.n))
        else:
            pt = (0,) * self.n
        assert self.contains_relint(pt)
        return pt

    def random_relint_point(self, rng):
        """Random rational point in the relative interior."""
        pt = [Fraction(0)] * self.n
        for r in self.rays:
            c = Fraction(rng.randint(1, 9), rng.randint(1, 4))
            pt = [a + c * x for a, x in zip(pt, r)]
        for l in self.lineality:
            c = Fraction(rng.randint(-9, 9), rng.randint(1, 4))
            pt = [a + c * x for a, x in zip(pt, l)]
        pt = tuple(pt)
        assert self.contains_relint(pt)
        return pt

    def face_at(self, tight):
        """Face where the given inequality normals become equalities."""
        return cone_from_hrep(self.n, self.eqs + tuple(tight), self.ineqs)

    def facet_cones(self):
        return tuple(self.face_at((a,)) for a in self.ineqs)

    def faces(self):
        """All faces, the cone itself included."""
        found = {self}
        frontier = [self]
        while frontier:
            c = frontier.pop()
            for f in c.facet_cones():
                if f not in found:
                    found.add(f)
                    frontier.append(f)
        return tuple(sorted(found, key=lambda c: (c.dim, c.eqs, c.ineqs)))

    def is_face_of(self, other):
        if self.n != other.n or not other.contains_cone(self):
            return False
        gens = list(self.rays) + list(self.lineality)
        tight = tuple(
            a for a in other.ineqs if all(dot(a, g) == 0 for g in gens)
        )
        return other.face_at(tight) == self


def cone_from_hrep(n, eqs, ineqs):
    """Canonical cone {x : eq.x = 0, a.x >= 0}."""
    lin_raw, rays = _dd(ineqs, eqs, n)
    lineality = hnf(lattice_basis_of_span(lin_raw, n))
    dual_lin, facets = _dd(rays, [tuple(v) for v in lineality], n)
    eqs_c = subspace_canonical(dual_lin)
    dim = n - len(eqs_c)
    cone = Cone(n, dim, eqs_c, tuple(sorted(facets)), lineality, rays)
    for g in list(rays) + list(lineality):
        assert all(dot(e, g) == 0 for e in eqs_c)
    assert rank(list(lineality) + list(rays)) == dim
    return cone


def cone_from_generators(n, rays=(), lineality=()):
    """Canonical cone spanned by ray generators plus a lineality span."""
    dual_lin, facets = _dd([tuple(r) for r in rays], [tuple(v) for v in lineality], n)
    eqs_c = subspace_canonical(dual_lin)
    return cone_from_hrep(n, eqs_c, facets)


def cone_intersection(a, b):
    if a.n != b.n:
        raise ValueError("cones in different ambient dimensions")
    return cone_from_hrep(a.n, a.eqs + b.eqs, a.ineqs + b.ineqs)


def full_cone(n):
    return cone_from_hrep(n, (), ())


# ---------------------------------------------------------------------------
# polytopes


@dataclass(frozen=True)
class Face:
    """Face of a polytope: vertex ids, dimension, affine hull equations.

    Affine equations are primitive integer rows (c0, c1, ..., cn) meaning
    c0 + c.x = 0 on the face.
    """

    vertex_ids: tuple[int, ...]
    dim: int
    affine_eqs: tuple[tuple[int, ...], ...]


@dataclass(frozen=True)
class Polytope:
    """Convex hull of finitely many rational points with its face lattice."""

    n: int
    vertices: tuple[tuple[Fraction, ...], ...]
    faces: tuple[Face, ...]
    facet_ids: tuple[int, ...]
    affine_eqs: tuple[tuple[int, ...], ...]
    _face_lookup: dict = field(compare=False, repr=False, hash=False)

    @property
    def dim(self):
        return self.faces[-1].dim

    def face_id(self, vertex_ids):
        return self._face_lookup[frozenset(vertex_ids)]

    def face_children(self, fid):
        """Ids of the faces covered by faces[fid] (one dimension down)."""
        f = self.faces[fid]
        vs = set(f.vertex_ids)
        return tuple(
            i
            for i, g in enumerate(self.faces)
            if g.dim == f.dim - 1 and set(g.vertex_ids) <= vs
        )

    def edges(self):
        return tuple(i for i, f in enumerate(self.faces) if f.dim == 1)

    def vertex_face_id(self, vid):
        return self.face_id((vid,))


def _affine_eqs_of(points, n):
    rows = [(1,) + tuple(v) for v in points]
    return subspace_canonical(nullspace(rows, n + 1))


def convex_hull(points, n):
    """Polytope from a finite point set in R^n (exact rational arithmetic).

    The face lattice is complete: every nonempty face appears, the polytope
    itself included, ordered by (dim, vertex ids).
    """
    pts = []
    seen = set()
    for pt in points:
        t = tuple(Fraction(x) for x in pt)
        if len(t) != n:
            raise ValueError("point of wrong dimension")
        if t not in seen:
            seen.add(t)
            pts.append(t)
    if not pts:
        raise ValueError("convex hull of an empty point set")

    homog = [primitive((1,) + v) for v in pts]
    dual_lin, dual_rays = _dd(homog, (), n + 1)
    affine_eqs = subspace_canonical(dual_lin)

    facet_data = []
    for normal in dual_rays:
        c0, cvec = normal[0], normal[1:]
        tight = frozenset(
            i for i, v in enumerate(pts) if c0 + dot(cvec, v) == 0
        )
        if tight:
            facet_data.append((normal, tight))

    eq_parts = [e[1:] for e in affine_eqs]

    def is_vertex(i):
        normals = list(eq_parts)
        normals += [nm[1:] for nm, tight in facet_data if i in tight]
        return rank(normals) == n

    vert_ids_old = [i for i in range(len(pts)) if is_vertex(i)]
    vertices = tuple(sorted(pts[i] for i in vert_ids_old))
    new_id = {v: i for i, v in enumerate(vertices)}
    remap = {i: new_id[pts[i]] for i in vert_ids_old}

    facet_sets = []
    for _, tight in facet_data:
        facet_sets.append(frozenset(remap[i] for i in tight if i in remap))

    all_sets = {frozenset(range(len(vertices)))}
    frontier = [frozenset(range(len(vertices)))]
    for fs in facet_sets:
        if fs not in all_sets:
            all_sets.add(fs)
            frontier.append(fs)
    while frontier:
        cur = frontier.pop()
        for fs in facet_sets:
            meet = cur & fs
            if meet and meet not in all_sets:
                all_sets.add(meet)
                frontier.append(meet)

    faces = []
    for vs in all_sets:
        face_pts = [vertices[i] for i in sorted(vs)]
        eqs = _affine_eqs_of(face_pts, n)
        faces.append(Face(tuple(sorted(vs)), n - len(eqs), eqs))
    faces.sort(key=lambda f: (f.dim, f.vertex_ids))
    lookup = {frozenset(f.vertex_ids): i for i, f in enumerate(faces)}

    top_dim = faces[-1].dim
    facet_ids = tuple(
        i for i, f in enumerate(faces) if f.dim == top_dim - 1
    )
    for f in faces:
        if f.dim == 1:
            assert len(f.vertex_ids) == 2
    return Polytope(n, vertices, tuple(faces), facet_ids, affine_eqs, lookup)


def max_face(polytope, theta):
    """Face of the polytope where theta attains its maximum."""
    vals = [dot(theta, v) for v in polytope.vertices]
    best = max(vals)
    ids = frozenset(i for i, x in enumerate(vals) if x == best)
    return polytope.faces[polytope.face_id(ids)]


def normal_cone(polytope, face):
    """Cone of linear functionals maximized exactly on the given face."""
    vs = face.vertex_ids
    v0 = polytope.vertices[vs[0]]
    eqs = [
        tuple(a - b for a, b in zip(v0, polytope.vertices[w])) for w in vs[1:]
    ]
    rest = [i for i in range(len(polytope.vertices)) if i not in set(vs)]
    ineqs = [
        tuple(a - b for a, b in zip(v0, polytope.vertices[u])) for u in rest
    ]
    cone = cone_from_hrep(polytope.n, [primitive(e) for e in eqs],
                          [primitive(a) for a in ineqs])
    assert cone.dim == polytope.n - face.dim
    return cone


@dataclass(frozen=True)
class GeneralizedFan:
    """A finite collection of canonical cones in a common ambient space."""

    n: int
    cones: tuple[Cone, ...]

    def __len__(self):
        return len(self.cones)

    def maximal_indices(self):
        return tuple(i for i, c in enumerate(self.cones) if c.dim == self.n)


@dataclass(frozen=True)
class NormalFan:
    """Normal fan of a polytope.

    cones[i] is the normal cone of polytope.faces[i]; the shared index is
    the order-reversing bijection between the face lattice and the fan
    (faces of cones[i] are exactly the cones of faces containing face i).
    """

    polytope: Polytope
    fan: GeneralizedFan

    @property
    def cones(self):
        return self.fan.cones

    def cone_of_face(self, fid):
        return self.fan.cones[fid]

    def face_of_cone(self, cid):
        return self.polytope.faces[cid]

    def cone_index(self, cone):
        for i, c in enumerate(self.fan.cones):
            if c == cone:
                return i
        raise KeyError("cone does not belong to the fan")


def normal_fan(polytope):
    cones = tuple(normal_cone(polytope, f) for f in polytope.faces)
    assert len(set(cones)) == len(cones)
    return NormalFan(polytope, GeneralizedFan(polytope.n, cones))


def locate_index(nfan, theta):
    """Index of the unique cone whose relative interior contains theta."""
    vals = [dot(theta, v) for v in nfan.polytope.vertices]
    best = max(vals)
    ids = frozenset(i for i, x in enumerate(vals) if x == best)
    fid = nfan.polytope.face_id(ids)
    assert nfan.cones[fid].contains_relint(theta)
    return fid


def locate_cone(nfan, theta):
    return nfan.cones[locate_index(nfan, theta)]


def minkowski_sum(p, q):
    """Convex hull of pairwise sums of two polytopes in the same space."""
    if p.n != q.n:
        raise ValueError("polytopes in different ambient dimensions")
    sums = [
        tuple(a + b for a, b in zip(u, v))
        for u in p.vertices
        for v in q.vertices
    ]
    return convex_hull(sums, p.n)


# ---------------------------------------------------------------------------
# fan validation


@dataclass(frozen=True)
class FanValidationReport:
    face_closure_violations: tuple[str, ...]
    intersection_violations: tuple[str, ...]
    completeness_violations: tuple[str, ...]

    @property
    def ok(self):
        return not (
            self.face_closure_violations
            or self.intersection_violations
            or self.completeness_violations
        )


def _sample_grid(n, bound=2):
    if n == 0:
        return ((),)
    pts = [()]
    for _ in range(n):
        pts = [t + (v,) for t in pts for v in range(-bound, bound + 1)]
    return tuple(pts)


def validate_generalized_fan(fan, check_completeness=True):
    """Check the generalized-fan axioms for a set of cones.

    Face closure: every face of every cone belongs to the set.  Pairwise:
    the intersection of two cones is a face of both.  Completeness
    (optional): sampled integer points are covered, and every facet of every
    full-dimensional cone is shared with exactly one other full-dimensional
    cone.
    """
    if isinstance(fan, NormalFan):
        fan = fan.fan
    cones = tuple(fan.cones)
    n = fan.n
    cone_set = set(cones)
    face_violations = []
    face_cache = {}
    for i, c in enumerate(cones):
        face_cache[i] = c.faces()
        for f in face_cache[i]:
            if f not in cone_set:
                face_violations.append(
                    f"cone {i}: face of dim {f.dim} is missing from the fan"
                )
    inter_violations = []
    for i in range(len(cones)):
        for j in range(i + 1, len(cones)):
            meet = cone_intersection(cones[i], cones[j])
            if meet not in face_cache[i] or meet not in face_cache[j]:
                inter_violations.append(
                    f"cones {i} and {j}: intersection of dim {meet.dim} "
                    "is not a common face"
                )
    comp_violations = []
    if check_completeness:
        maximal = [i for i, c in enumerate(cones) if c.dim == n]
        if not maximal:
            comp_violations.append("no full-dimensional cone")
        for pt in _sample_grid(n):
            if not any(c.contains(pt) for c in cones):
                comp_violations.append(f"point {pt} is not covered")
        for i in maximal:
            for facet in cones[i].facet_cones():
                owners = [
                    j
                    for j in maximal
                    if j != i and facet.is_face_of(cones[j])
                ]
                if len(owners) != 1:
                    comp_violations.append(
                        f"cone {i}: facet shared with {len(owners)} "
                        "other maximal cones instead of 1"
                    )
    return FanValidationReport(
        tuple(face_violations), tuple(inter_violations), tuple(comp_violations)
    )
