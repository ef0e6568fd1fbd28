"""Complete submodule lattices and Newton polytopes of modules.

Enumeration walks every cyclic submodule and closes under sums.  A cyclic
submodule splits into the cyclic submodules of its vertex components (a
graded subspace contains a vector iff it contains each component), so
single-vertex generators already reach every cyclic submodule and the sum
closure yields the full lattice.
"""
from __future__ import annotations

from dataclasses import dataclass

from .errors import ResourceLimitError
from .fplinalg import all_vectors
from .quiver import (
    Module,
    Submodule,
    generated_submodule,
    submodule_full,
    submodule_sum,
    submodule_zero,
)

DEFAULT_DIM_BOUND = 14
DEFAULT_MAX_SUBMODULES = 20000


@dataclass(frozen=True)
class SubmoduleSet:
    """All submodules of a module, canonically sorted."""

    module: Module
    submodules: tuple[Submodule, ...]

    def __len__(self):
        return len(self.submodules)

    def __iter__(self):
        return iter(self.submodules)


_cache: dict[Module, SubmoduleSet] = {}


def enumerate_submodules(
    module, dim_bound=DEFAULT_DIM_BOUND, max_count=DEFAULT_MAX_SUBMODULES
):
    """Every submodule of the module, sorted by flattened basis data.

    Results are memoized per module (enumeration is deterministic, so
    concurrent readers always observe the same value).

    Raises:
        ResourceLimitError: total dimension above dim_bound, or more than
            max_count submodules encountered; the p^dim vector sweep and the
            lattice itself blow up quickly, so failing loudly beats hanging.
    """
    cached = _cache.get(module)
    if cached is not None:
        return cached
    p = module.algebra.p
    total = module.total_dim
    if total > dim_bound:
        raise ResourceLimitError(
            f"total dimension {total} exceeds the enumeration bound {dim_bound} "
            f"(p={p}: the sweep touches p^dim vectors); raise dim_bound only "
            "if you accept the cost"
        )

    def too_many():
        return ResourceLimitError(
            f"more than {max_count} submodules; the lattice is too large "
            "to enumerate"
        )

    found = {submodule_zero(module), submodule_full(module)}
    for u, d in enumerate(module.dims):
        for vec in all_vectors(d, p):
            if any(vec):
                found.add(generated_submodule(module, {u: [vec]}))
                if len(found) > max_count:
                    raise too_many()

    frontier = list(found)
    while frontier:
        fresh = []
        for a in frontier:
            for b in list(found):
                s = submodule_sum(a, b)
                if s not in found:
                    found.add(s)
                    fresh.append(s)
                    if len(found) > max_count:
                        raise too_many()
        frontier = fresh

    result = SubmoduleSet(module, tuple(sorted(found, key=Submodule.sort_key)))
    _cache[module] = result
    return result


def submodule_dim_vectors(module, **kw):
    """Sorted distinct dimension vectors of all submodules."""
    subs = enumerate_submodules(module, **kw)
    return tuple(sorted({s.dims for s in subs}))


def newton_polytope(module, **kw):
    """Convex hull of the submodule dimension vectors in R^n."""
    from .polyhedra import convex_hull

    pts = submodule_dim_vectors(module, **kw)
    return convex_hull(pts, module.algebra.n)
