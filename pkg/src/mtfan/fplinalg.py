"""Dense linear algebra over a prime field F_p.

Matrices are tuples of row tuples with entries in [0, p); a matrix with no
rows is (), so column counts are always passed where they cannot be inferred.
"""
from __future__ import annotations


def rref_fp(rows, p):
    """Reduced row echelon form over F_p: (rows, pivot_columns)."""
    work = [[x % p for x in r] for r in rows]
    ncols = len(work[0]) if work else 0
    pivots = []
    r = 0
    for c in range(ncols):
        pr = next((i for i in range(r, len(work)) if work[i][c]), None)
        if pr is None:
            continue
        work[r], work[pr] = work[pr], work[r]
        inv = pow(work[r][c], -1, p)
        work[r] = [(x * inv) % p for x in work[r]]
        for i in range(len(work)):
            if i != r and work[i][c]:
                f = work[i][c]
                work[i] = [(a - f * b) % p for a, b in zip(work[i], work[r])]
        pivots.append(c)
        r += 1
        if r == len(work):
            break
    return tuple(tuple(row) for row in work[:r]), tuple(pivots)


def rank_fp(rows, p):
    return len(rref_fp(rows, p)[0])


def reduce_vec(rrows, pivots, vec, p):
    """Residue of vec after elimination against an RREF basis."""
    v = [x % p for x in vec]
    for row, c in zip(rrows, pivots):
        if v[c]:
            f = v[c]
            v = [(a - f * b) % p for a, b in zip(v, row)]
    return tuple(v)


def in_span(rrows, pivots, vec, p):
    return not any(reduce_vec(rrows, pivots, vec, p))


def span_fp(rows, p):
    """RREF basis of the row span (zero rows dropped)."""
    return rref_fp(rows, p)[0]


def sum_spaces(a_rows, b_rows, p):
    return span_fp(tuple(a_rows) + tuple(b_rows), p)


def intersect_spaces(a_rows, b_rows, ncols, p):
    """Basis of rowspace(a) intersect rowspace(b) by the Zassenhaus trick."""
    block = [tuple(r) + tuple(r) for r in a_rows]
    block += [tuple(r) + (0,) * ncols for r in b_rows]
    red, _ = rref_fp(block, p)
    out = [row[ncols:] for row in red if not any(row[:ncols])]
    return span_fp(out, p)


def nullspace_fp(rows, ncols, p):
    red, pivots = rref_fp(rows, p)
    pivset = set(pivots)
    basis = []
    for f in range(ncols):
        if f in pivset:
            continue
        v = [0] * ncols
        v[f] = 1
        for i, c in enumerate(pivots):
            v[c] = (-red[i][f]) % p
        basis.append(tuple(v))
    return tuple(basis)


def mat_vec(rows, vec, p):
    return tuple(sum(a * b for a, b in zip(row, vec)) % p for row in rows)


def mat_mul(a_rows, b_rows, b_ncols, p):
    """Matrix product a @ b.

    b has b_ncols columns; when the inner dimension is zero the product is
    the zero matrix with len(a_rows) rows.
    """
    out = []
    for row in a_rows:
        if len(row) != len(b_rows):
            raise ValueError("matrix shape mismatch in mat_mul")
        acc = [0] * b_ncols
        for coef, brow in zip(row, b_rows):
            if coef:
                for j, x in enumerate(brow):
                    acc[j] = (acc[j] + coef * x) % p
        out.append(tuple(acc))
    return tuple(out)


def all_vectors(dim, p):
    """All vectors of F_p^dim in lexicographic order."""
    if dim == 0:
        return ((),)
    smaller = all_vectors(dim - 1, p)
    return tuple((x,) + v for x in range(p) for v in smaller)
