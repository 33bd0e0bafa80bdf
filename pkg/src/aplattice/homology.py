"""Reduced simplicial homology over the integers via boundary matrices and
Smith normal form.

Conventions:

* The chain complex is augmented: dimension -1 is the single empty face, and
  the 0th boundary matrix is the 1 x f0 all-ones map onto it, so every rank
  reported here is a *reduced* homology rank.
* Matrices are dense with exact integer entries.  Elimination picks a
  minimal-absolute-value pivot to limit growth.  While every entry provably
  fits, the work happens in an int64 numpy array (one elimination step on
  entries below 2**31 cannot leave 2**63); the moment an entry reaches the
  threshold the state is handed to a pure-Python big-integer path, so results
  are exact for any input.
* The rank reported with the divisors counts the nonzero elementary divisors.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd
from typing import NamedTuple

import numpy as np

from .complexes import SimplicialComplex, reduced_euler_characteristic

_INT64_LIMIT = 2**31


@dataclass(frozen=True)
class IntegerMatrix:
    rows: int
    cols: int
    entries: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if len(self.entries) != self.rows or any(
            len(r) != self.cols for r in self.entries
        ):
            raise ValueError("entry grid does not match the declared shape")


def multiply(a: IntegerMatrix, b: IntegerMatrix) -> IntegerMatrix:
    if a.cols != b.rows:
        raise ValueError("shape mismatch")
    bt = list(zip(*b.entries)) if b.entries else []
    out = tuple(
        tuple(sum(x * y for x, y in zip(row, col)) for col in bt) for row in a.entries
    )
    if not bt:
        out = tuple(() for _ in range(a.rows))
    return IntegerMatrix(a.rows, b.cols, out)


def boundary_matrix(complex: SimplicialComplex, d: int) -> IntegerMatrix:
    """The d-th boundary map: columns are d-faces, rows are (d-1)-faces, and
    removing the j-th vertex of a face contributes sign (-1)**j.

    d = 0 maps every vertex to the empty face (the augmentation row).
    """
    if d < 0 or d > complex.dim:
        raise ValueError(f"dimension {d} out of range 0..{complex.dim}")
    cols = complex.faces(d)
    if d == 0:
        return IntegerMatrix(1, len(cols), (tuple(1 for _ in cols),))
    rows = complex.faces(d - 1)
    row_index = {f: i for i, f in enumerate(rows)}
    grid = [[0] * len(cols) for _ in rows]
    for c, face in enumerate(cols):
        for j in range(len(face)):
            sub = face[:j] + face[j + 1 :]
            grid[row_index[sub]][c] = (-1) ** j
    return IntegerMatrix(len(rows), len(cols), tuple(tuple(r) for r in grid))


class SmithNormalForm(NamedTuple):
    diagonal: tuple[int, ...]  # positive, each dividing the next
    rank: int


def _diagonalize_python(a: list[list[int]], m: int, n: int, start: int) -> None:
    """Exact in-place diagonalisation from pivot position `start`."""
    t = start
    while t < min(m, n):
        best = None
        for i in range(t, m):
            row = a[i]
            for j in range(t, n):
                v = row[j]
                if v:
                    av = -v if v < 0 else v
                    if best is None or av < best[0]:
                        best = (av, i, j)
                        if av == 1:
                            break
            if best is not None and best[0] == 1:
                break
        if best is None:
            return
        _, bi, bj = best
        if bi != t:
            a[t], a[bi] = a[bi], a[t]
        if bj != t:
            for row in a:
                row[t], row[bj] = row[bj], row[t]
        p = a[t][t]
        dirty = False
        for i in range(t + 1, m):
            v = a[i][t]
            if v:
                q = v // p
                if q:
                    rt, ri = a[t], a[i]
                    for j in range(t, n):
                        ri[j] -= q * rt[j]
                if a[i][t]:
                    dirty = True
        if dirty:
            continue  # remainders left below the pivot; re-pick a smaller one
        rt = a[t]
        dirty = False
        for j in range(t + 1, n):
            v = rt[j]
            if v:
                # the column below the pivot is clear, so subtracting q times
                # column t from column j only changes row t
                rt[j] = v - (v // p) * p
                if rt[j]:
                    dirty = True
        if dirty:
            continue
        t += 1


def _diagonalize_int64(a: np.ndarray, limit: int) -> tuple[int, bool]:
    """Fast path over int64.  Returns (pivot reached, escalation needed).

    Entries are checked against `limit` after every update; a single update on
    entries below 2**31 cannot overflow int64, so staying under the limit
    keeps the arithmetic exact.
    """
    m, n = a.shape
    huge = np.iinfo(np.int64).max
    t = 0
    while t < min(m, n):
        if abs(int(a[t, t])) != 1:
            # a unit entry is always a globally minimal pivot; look for one
            # in the current column and row before scanning the whole block
            i = j = 0
            units = np.flatnonzero(np.abs(a[t:, t]) == 1)
            if units.size:
                i = int(units[0])
            else:
                units = np.flatnonzero(np.abs(a[t, t:]) == 1)
                if units.size:
                    j = int(units[0])
                else:
                    sub = np.abs(a[t:, t:])
                    masked = np.where(sub > 0, sub, huge)
                    flat = int(masked.argmin())
                    i, j = divmod(flat, n - t)
                    if masked[i, j] == huge:
                        return t, False
            if i:
                a[[t, t + i], :] = a[[t + i, t], :]
            if j:
                a[:, [t, t + j]] = a[:, [t + j, t]]
        p = int(a[t, t])
        col = a[t + 1 :, t]
        nz = np.flatnonzero(col)
        if nz.size:
            rows = nz + t + 1
            q = col[nz] // p
            a[rows, t:] -= q[:, None] * a[t, t:]
            if int(np.abs(a[rows, t:]).max()) >= limit:
                return t, True
            if np.any(a[t + 1 :, t]):
                continue
        row = a[t, t + 1 :]
        nzr = np.flatnonzero(row)
        if nzr.size:
            cols = nzr + t + 1
            q = row[nzr] // p
            a[t, cols] -= q * p
            if np.any(a[t, t + 1 :]):
                continue
        t += 1
    return t, False


def _divisor_chain(values: list[int]) -> tuple[int, ...]:
    ds = sorted(abs(v) for v in values if v)
    changed = True
    while changed:
        changed = False
        for i in range(len(ds)):
            for j in range(i + 1, len(ds)):
                if ds[j] % ds[i]:
                    g = gcd(ds[i], ds[j])
                    ds[i], ds[j] = g, ds[i] * ds[j] // g
                    changed = True
    ds.sort()
    for a, b in zip(ds, ds[1:]):
        assert b % a == 0
    return tuple(ds)


def smith_normal_form(
    mat: IntegerMatrix, *, int64_limit: int = _INT64_LIMIT
) -> SmithNormalForm:
    """Elementary divisors (positive, divisibility-chained) and rank.

    The transforming unimodular matrices are not kept; only the divisor
    multiset is needed downstream.  `int64_limit` exists for the tests; the
    default keeps the int64 window provably overflow-free.
    """
    m, n = mat.rows, mat.cols
    if m == 0 or n == 0:
        return SmithNormalForm((), 0)
    work = None
    start = 0
    peak = max((abs(v) for row in mat.entries for v in row), default=0)
    if peak < int64_limit:
        a = np.array(mat.entries, dtype=np.int64)
        start, escalate = _diagonalize_int64(a, int64_limit)
        if escalate:
            work = [[int(v) for v in row] for row in a]
        else:
            diag = [int(a[i, i]) for i in range(min(m, n))]
    else:
        work = [list(row) for row in mat.entries]
    if work is not None:
        _diagonalize_python(work, m, n, start)
        diag = [work[i][i] for i in range(min(m, n))]
    chain = _divisor_chain(diag)
    return SmithNormalForm(chain, len(chain))


@dataclass(frozen=True)
class HomologyResult:
    """Reduced integral homology: one free rank and one torsion tuple per
    dimension 0..dim.  The rank in dimension -1 is nonzero only for the
    complex with no vertices at all.
    """

    free_ranks: tuple[int, ...]
    torsion: tuple[tuple[int, ...], ...]
    rank_minus1: int = 0

    @property
    def dim(self) -> int:
        return len(self.free_ranks) - 1

    def is_trivial(self) -> bool:
        return (
            self.rank_minus1 == 0
            and all(r == 0 for r in self.free_ranks)
            and all(not t for t in self.torsion)
        )

    def nonzero(self) -> dict[int, tuple[int, tuple[int, ...]]]:
        """dimension -> (free rank, torsion) restricted to nontrivial groups."""
        out = {}
        if self.rank_minus1:
            out[-1] = (self.rank_minus1, ())
        for d, (r, t) in enumerate(zip(self.free_ranks, self.torsion)):
            if r or t:
                out[d] = (r, t)
        return out

    def as_dict(self) -> dict:
        return {
            str(d): {"free_rank": r, "torsion": list(t)}
            for d, (r, t) in enumerate(zip(self.free_ranks, self.torsion))
        }

    def __str__(self):
        nz = self.nonzero()
        if not nz:
            return "all reduced homology groups trivial"
        parts = []
        for d, (r, t) in sorted(nz.items()):
            pieces = []
            if r:
                pieces.append("Z" if r == 1 else f"Z^{r}")
            pieces.extend(f"Z/{v}" for v in t)
            parts.append(f"H~_{d} = " + " + ".join(pieces))
        return ", ".join(parts)


def reduced_homology(complex: SimplicialComplex) -> HomologyResult:
    """Free ranks and torsion of the reduced homology of a downward-closed
    complex, one boundary-matrix Smith form per dimension."""
    if complex.dim < 0:
        return HomologyResult((), (), rank_minus1=1)
    forms = [
        smith_normal_form(boundary_matrix(complex, d))
        for d in range(complex.dim + 1)
    ]
    ranks = [f.rank for f in forms] + [0]
    fvec = complex.f_vector()
    free = tuple(
        fvec[d] - ranks[d] - ranks[d + 1] for d in range(complex.dim + 1)
    )
    torsion = tuple(
        tuple(v for v in forms[d + 1].diagonal if v > 1)
        if d < complex.dim
        else ()
        for d in range(complex.dim + 1)
    )
    result = HomologyResult(free, torsion, rank_minus1=1 - ranks[0])
    euler = sum((-1) ** d * r for d, r in enumerate(free)) - result.rank_minus1
    assert euler == reduced_euler_characteristic(complex), (
        "free ranks disagree with the Euler characteristic"
    )
    return result
