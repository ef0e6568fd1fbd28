"""Brute-force verification of a decorated fan against direct stability
computations.

Every sample functional is classified twice: by locating it in the fan and
by recomputing filtration, support and t-set from scratch.  Pairs of samples
check the equivalence and closure predicates against the cone combinatorics.
"""
from __future__ import annotations

import os
import random
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction

from .exact import dot, rank
from .polyhedra import locate_index
from .stability import (
    as_theta,
    canonical_sequences,
    evaluate,
    in_class_closure,
    is_m_tf_equivalent,
    m_tf_equivalent_by_filtration,
    supp_factors,
    t_set,
    wall_membership,
)
from .sublattice import enumerate_submodules

DEFAULT_GRID_BOUND = 3


@dataclass(frozen=True)
class SampleSet:
    """Deterministic battery of sample functionals for one fan."""

    seed: int
    bound: int
    thetas: tuple[tuple[Fraction, ...], ...]

    def __len__(self):
        return len(self.thetas)


def build_sample_set(mtf, bound=DEFAULT_GRID_BOUND, seed=2024, extra=8):
    """Integer grid [-bound, bound]^n plus interior and boundary witnesses
    of every cone, plus a few seeded random integer points."""
    n = mtf.n
    pts = [()]
    for _ in range(n):
        pts = [t + (v,) for t in pts for v in range(-bound, bound + 1)]
    samples = list(pts)
    for cone in mtf.cones:
        samples.append(cone.relint_point())
        proper = [f for f in cone.faces() if f != cone]
        if proper:
            samples.append(proper[-1].relint_point())
    rng = random.Random(seed)
    for _ in range(extra):
        samples.append(tuple(rng.randint(-3 * bound, 3 * bound) for _ in range(n)))
    uniq = []
    seen = set()
    for s in samples:
        t = as_theta(s, n)
        if t not in seen:
            seen.add(t)
            uniq.append(t)
    return SampleSet(seed, bound, tuple(uniq))


@dataclass(frozen=True)
class PointReport:
    theta: tuple
    cone_index: int
    failures: tuple[str, ...]

    @property
    def ok(self):
        return not self.failures


@dataclass(frozen=True)
class OracleReport:
    checks: int
    failures: tuple[str, ...]

    @property
    def ok(self):
        return not self.failures


def verify_point(mtf, theta):
    """Compare the located cone's class data with a from-scratch computation
    at theta, and check the polytope-side characterizations."""
    module = mtf.module
    theta = as_theta(theta, mtf.n)
    idx = locate_index(mtf.normal, theta)
    data = mtf.classes[idx]
    fails = []

    cs = canonical_sequences(theta, module)
    if cs.t != data.filtration.t or cs.tbar != data.filtration.tbar:
        fails.append("canonical filtration differs from the cone's")
    supp = tuple(sorted(d for _, d in supp_factors(theta, cs.w)))
    if supp != data.supp_dims:
        fails.append(f"support {supp} != cone support {data.supp_dims}")
    ts = t_set(theta, module)
    if ts != data.t_set:
        fails.append("t-set differs from the cone's")

    # the t-set is exactly the set of submodules landing on the max face
    subs = enumerate_submodules(module)
    maxval = max(evaluate(theta, v) for v in subs.submodules)
    for L in subs.submodules:
        if (evaluate(theta, L) == maxval) != (L in ts):
            fails.append(f"t-set mismatch at submodule of class {L.dims}")
            break

    # min and max of the located Newton face
    face = mtf.newton.faces[idx]
    vecs = [tuple(map(int, mtf.newton.vertices[v])) for v in face.vertex_ids]
    if tuple(cs.t.dims) != tuple(map(min, zip(*vecs))) or tuple(
        cs.tbar.dims
    ) != tuple(map(max, zip(*vecs))):
        fails.append("t/tbar are not the min/max of the located face")

    if not module.is_zero():
        from .fan import wall_cone

        on_wall = wall_membership(theta, module)
        if on_wall != wall_cone(mtf).contains(theta):
            fails.append("wall membership disagrees with the wall cone")
    return PointReport(theta, idx, tuple(fails))


def _thread_count():
    raw = os.environ.get("MTFAN_THREADS", "1")
    try:
        k = int(raw)
    except ValueError as exc:
        raise ValueError(f"MTFAN_THREADS must be an integer, got {raw!r}") from exc
    if k < 1:
        raise ValueError("MTFAN_THREADS must be >= 1")
    return k


def verify_fan(mtf, samples=None, reps_per_cone=3):
    """Run verify_point over a sample set and check pairwise predicates.

    Same located cone must mean equivalent (both routes), different cones
    not equivalent; closure membership must match the face relation of the
    located cones.  Pair checks run on up to reps_per_cone representatives
    per cone so the budget stays quadratic in the fan, not in the samples.
    """
    if samples is None:
        samples = build_sample_set(mtf)
    module = mtf.module
    failures = []
    checks = 0

    threads = _thread_count()
    if threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            reports = list(pool.map(lambda t: verify_point(mtf, t), samples.thetas))
    else:
        reports = [verify_point(mtf, t) for t in samples.thetas]
    by_cone = {}
    for rep in reports:
        checks += 1
        failures.extend(f"theta {rep.theta}: {m}" for m in rep.failures)
        by_cone.setdefault(rep.cone_index, []).append(rep.theta)

    observed = set(by_cone)
    if observed != set(range(len(mtf.cones))):
        missing = sorted(set(range(len(mtf.cones))) - observed)
        failures.append(f"cones never sampled: {missing}")

    reps = {i: ts[:reps_per_cone] for i, ts in sorted(by_cone.items())}
    for i, ts in reps.items():
        for j, us in reps.items():
            if j < i:
                continue
            for a in ts:
                for b in us:
                    if a == b:
                        continue
                    checks += 1
                    same = i == j
                    eq = is_m_tf_equivalent(a, b, module)
                    eq2 = m_tf_equivalent_by_filtration(a, b, module)
                    if eq != eq2:
                        failures.append(
                            f"equivalence routes disagree at {a} vs {b}"
                        )
                    if eq != same:
                        failures.append(
                            f"equivalence({a}, {b}) = {eq}, located cones "
                            f"{'agree' if same else 'differ'}"
                        )
                    closure = in_class_closure(a, b, module)
                    face_rel = mtf.cones[i].is_face_of(mtf.cones[j])
                    if closure != face_rel:
                        failures.append(
                            f"closure({a}, {b}) = {closure} but face "
                            f"relation is {face_rel}"
                        )
    return OracleReport(checks, tuple(failures))


def verify_dim_formula(mtf):
    """Dimension bookkeeping across the fan.

    For every cone, dim(cone) + rank(support classes) = n.  Every face of
    the wall belongs to the fan and is cut out of the wall by the span of
    its own support classes.
    """
    failures = []
    checks = 0
    n = mtf.n
    for data in mtf.classes:
        checks += 1
        cone = mtf.cones[data.cone_index]
        if cone.dim + rank(data.supp_dims) != n:
            failures.append(
                f"cone {data.cone_index}: dim {cone.dim} + rank(supp) "
                f"{rank(data.supp_dims)} != {n}"
            )
    if not mtf.module.is_zero():
        from .fan import wall_cone
        from .polyhedra import cone_from_hrep

        wall = wall_cone(mtf)
        cone_index = {c: i for i, c in enumerate(mtf.cones)}
        for face in wall.faces():
            checks += 1
            if face not in cone_index:
                failures.append(
                    f"wall face of dim {face.dim} is missing from the fan"
                )
                continue
            data = mtf.classes[cone_index[face]]
            cut = cone_from_hrep(
                n, wall.eqs + tuple(tuple(d) for d in data.supp_dims), wall.ineqs
            )
            if cut != face:
                failures.append(
                    f"wall face of dim {face.dim} is not the wall cut by "
                    "its support span"
                )
    return OracleReport(checks, tuple(failures))
