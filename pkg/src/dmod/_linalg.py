"""Exact Gaussian elimination over Q(i)."""

from __future__ import annotations

from typing import Hashable, Mapping, Sequence

from .scalar import ZERO, Scalar


def solve_in_span(columns: Sequence[Mapping[Hashable, Scalar]], target: Mapping[Hashable, Scalar]):
    """Find coefficients ``c`` with ``sum(c[g] * columns[g]) == target``.

    Vectors are sparse maps from coordinate labels to scalars. Returns the
    coefficient list (free variables set to zero) or ``None`` when ``target``
    is outside the span.
    """
    labels = set(target)
    for col in columns:
        labels.update(col)
    rows = sorted(labels, key=repr)
    ncols = len(columns)
    # augmented matrix, one dense row per coordinate
    mat = [[col.get(r, ZERO) for col in columns] + [target.get(r, ZERO)] for r in rows]

    pivots: list[int] = []
    prow = 0
    for c in range(ncols):
        sel = next((r for r in range(prow, len(mat)) if mat[r][c]), None)
        if sel is None:
            continue
        mat[prow], mat[sel] = mat[sel], mat[prow]
        inv = mat[prow][c].inverse()
        mat[prow] = [v * inv for v in mat[prow]]
        for r in range(len(mat)):
            if r != prow and mat[r][c]:
                f = mat[r][c]
                mat[r] = [a - f * b for a, b in zip(mat[r], mat[prow])]
        pivots.append(c)
        prow += 1
        if prow == len(mat):
            break

    for r in range(prow, len(mat)):
        if mat[r][ncols]:
            return None
    coeffs = [ZERO] * ncols
    for r, c in enumerate(pivots):
        coeffs[c] = mat[r][ncols]
    return coeffs
