"""Boundary matrices, integer Smith normal form, absolute and relative homology.

All arithmetic is exact over arbitrary-precision integers.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterator, Optional, Union

from .complexes import (InvalidArgument, Simplex, SimplicialComplex, canon,
                        faces_of)


@dataclass
class IntegerMatrix:
    """Dense integer matrix with simplex-labelled rows and columns."""
    rows: tuple            # row labels ((p-1)-simplices)
    cols: tuple            # column labels (p-simplices)
    entries: list          # list of rows of ints

    @property
    def shape(self) -> tuple[int, int]:
        return (len(self.rows), len(self.cols))

    def entry(self, row_label, col_label) -> int:
        return self.entries[self.rows.index(row_label)][self.cols.index(col_label)]


def boundary_matrix(complex: SimplicialComplex, p: int) -> IntegerMatrix:
    """The p-boundary matrix: one column per p-simplex, one row per
    (p-1)-simplex, entries +-1 by orientation agreement."""
    if not 1 <= p <= complex.dim:
        raise InvalidArgument(f"p={p} out of range for dim {complex.dim}")
    rows = tuple(complex.p_simplices(p - 1))
    cols = tuple(complex.p_simplices(p))
    rindex = {s: i for i, s in enumerate(rows)}
    entries = [[0] * len(cols) for _ in rows]
    for j, sigma in enumerate(cols):
        for k in range(len(sigma)):
            face = sigma[:k] + sigma[k + 1:]
            entries[rindex[face]][j] = 1 if k % 2 == 0 else -1
    return IntegerMatrix(rows=rows, cols=cols, entries=entries)


# -- Smith normal form ------------------------------------------------------

@dataclass
class SNFResult:
    """U @ A @ V = D with D diagonal, divisibility chain d1 | d2 | ... | dr."""
    diag: list       # positive invariant factors
    rank: int
    U: list          # m x m unimodular
    V: list          # n x n unimodular


def _identity(n: int) -> list:
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def smith_normal_form(entries: list) -> SNFResult:
    """Smith normal form by exact integer reduction, minimal-|pivot| pivoting."""
    A = [list(row) for row in entries]
    m = len(A)
    n = len(A[0]) if m else 0
    U = _identity(m)
    V = _identity(n)

    def swap_rows(i, j):
        A[i], A[j] = A[j], A[i]
        U[i], U[j] = U[j], U[i]

    def swap_cols(i, j):
        for row in A:
            row[i], row[j] = row[j], row[i]
        for row in V:
            row[i], row[j] = row[j], row[i]

    def add_row(dst, src, q):      # row_dst += q * row_src
        Ad, As = A[dst], A[src]
        for k in range(n):
            Ad[k] += q * As[k]
        Ud, Us = U[dst], U[src]
        for k in range(m):
            Ud[k] += q * Us[k]

    def add_col(dst, src, q):      # col_dst += q * col_src
        for row in A:
            row[dst] += q * row[src]
        for row in V:
            row[dst] += q * row[src]

    def negate_row(i):
        A[i] = [-x for x in A[i]]
        U[i] = [-x for x in U[i]]

    t = 0
    while t < min(m, n):
        # minimal absolute nonzero pivot in the trailing block
        pivot = None
        best = None
        for i in range(t, m):
            for j in range(t, n):
                v = abs(A[i][j])
                if v and (best is None or v < best):
                    best, pivot = v, (i, j)
        if pivot is None:
            break
        pi, pj = pivot
        if pi != t:
            swap_rows(t, pi)
        if pj != t:
            swap_cols(t, pj)
        # clear row t and column t; remainders may force re-pivoting
        while True:
            done = True
            for i in range(t + 1, m):
                if A[i][t]:
                    q = A[i][t] // A[t][t]
                    add_row(i, t, -q)
                    if A[i][t]:
                        swap_rows(t, i)
                        done = False
            for j in range(t + 1, n):
                if A[t][j]:
                    q = A[t][j] // A[t][t]
                    add_col(j, t, -q)
                    if A[t][j]:
                        swap_cols(t, j)
                        done = False
            if done:
                break
        # enforce divisibility of the trailing block by the pivot
        bad = None
        for i in range(t + 1, m):
            for j in range(t + 1, n):
                if A[i][j] % A[t][t]:
                    bad = i
                    break
            if bad is not None:
                break
        if bad is not None:
            add_row(t, bad, 1)
            continue
        if A[t][t] < 0:
            negate_row(t)
        t += 1

    diag = [A[i][i] for i in range(min(m, n)) if A[i][i]]
    return SNFResult(diag=diag, rank=len(diag), U=U, V=V)


def matrix_rank(entries: list) -> int:
    return smith_normal_form(entries).rank


@dataclass
class HomologyGroup:
    betti: int
    torsion_coeffs: list = field(default_factory=list)

    def as_pair(self) -> tuple:
        return (self.betti, tuple(self.torsion_coeffs))

    def to_json(self, p: int) -> dict:
        return {"p": p, "betti": self.betti, "torsion": list(self.torsion_coeffs)}


def homology_group(complex: SimplicialComplex, p: int) -> HomologyGroup:
    """H_p over the integers: betti number and torsion coefficients."""
    if not 0 <= p <= complex.dim:
        raise InvalidArgument(f"p={p} out of range for dim {complex.dim}")
    n_p = len(complex.p_simplices(p))
    rank_dp = 0
    if p >= 1:
        rank_dp = matrix_rank(boundary_matrix(complex, p).entries)
    if p + 1 <= complex.dim:
        snf = smith_normal_form(boundary_matrix(complex, p + 1).entries)
        rank_next, torsion = snf.rank, [d for d in snf.diag if d > 1]
    else:
        rank_next, torsion = 0, []
    return HomologyGroup(betti=n_p - rank_dp - rank_next, torsion_coeffs=torsion)


# -- relative homology on pure (p+1, p) pairs -------------------------------

def is_pure(complex: SimplicialComplex, dim: int) -> bool:
    """Every simplex is a face of a dim-dimensional simplex."""
    tops = complex.p_simplices(dim)
    if complex.dim != dim:
        return False
    covered = set()
    for s in tops:
        covered.update(faces_of(s))
    return covered == set(complex.simplices)


@dataclass(frozen=True)
class SubcomplexPair:
    """A pure (p+1)-dimensional L with a pure p-dimensional L0 inside it."""
    L: SimplicialComplex
    L0: SimplicialComplex
    p: int

    def __post_init__(self):
        if not is_pure(self.L, self.p + 1):
            raise InvalidArgument(f"L is not pure of dimension {self.p + 1}")
        if not is_pure(self.L0, self.p):
            raise InvalidArgument(f"L0 is not pure of dimension {self.p}")
        if not self.L0.simplices <= self.L.simplices:
            raise InvalidArgument("L0 is not a subcomplex of L")


def relative_boundary_matrix(pair: SubcomplexPair, q: Optional[int] = None
                             ) -> IntegerMatrix:
    """Boundary matrix of C_q(L, L0) -> C_{q-1}(L, L0): rows and columns are
    restricted to simplices of L not in L0.  Defaults to q = p + 1."""
    if q is None:
        q = pair.p + 1
    in_l0 = pair.L0.simplices
    cols = tuple(s for s in pair.L.p_simplices(q) if s not in in_l0)
    rows = tuple(s for s in pair.L.p_simplices(q - 1) if s not in in_l0)
    rindex = {s: i for i, s in enumerate(rows)}
    entries = [[0] * len(cols) for _ in rows]
    for j, sigma in enumerate(cols):
        for k in range(len(sigma)):
            face = sigma[:k] + sigma[k + 1:]
            if face in rindex:
                entries[rindex[face]][j] = 1 if k % 2 == 0 else -1
    return IntegerMatrix(rows=rows, cols=cols, entries=entries)


def relative_homology_group(pair: SubcomplexPair) -> HomologyGroup:
    """H_p(L, L0) at the pair's dimension p."""
    p = pair.p
    rel_p1 = relative_boundary_matrix(pair, p + 1)
    n_p = len(rel_p1.rows)
    snf = smith_normal_form(rel_p1.entries)
    torsion = [d for d in snf.diag if d > 1]
    rank_p = 0
    if p >= 1:
        rank_p = matrix_rank(relative_boundary_matrix(pair, p).entries)
    return HomologyGroup(betti=n_p - rank_p - snf.rank, torsion_coeffs=torsion)


class Truncated:
    """Marker yielded when a pair enumeration hits its budget."""

    def __repr__(self):
        return "Truncated()"


TRUNCATED = Truncated()


def _nonempty_subsets(items: list) -> Iterator[tuple]:
    for mask in range(1, 1 << len(items)):
        yield tuple(items[i] for i in range(len(items)) if mask >> i & 1)


def enumerate_pure_pairs(complex: SimplicialComplex, p: int,
                         budget: Optional[int] = None
                         ) -> Iterator[Union[SubcomplexPair, Truncated]]:
    """All pairs (L, L0): L spanned by a nonempty set of (p+1)-simplices of the
    complex, L0 by a nonempty subset of the p-simplices of L.  Deterministic
    order; yields TRUNCATED if the budget runs out."""
    if complex.dim <= p:
        raise InvalidArgument(f"complex dimension must exceed p={p}")
    count = 0
    tops = complex.p_simplices(p + 1)
    for top_subset in _nonempty_subsets(tops):
        L = SimplicialComplex.from_maximal(top_subset)
        p_faces = L.p_simplices(p)
        for face_subset in _nonempty_subsets(p_faces):
            if budget is not None and count >= budget:
                yield TRUNCATED
                return
            count += 1
            yield SubcomplexPair(L=L,
                                 L0=SimplicialComplex.from_maximal(face_subset),
                                 p=p)


@dataclass
class TorsionVerdict:
    status: Optional[bool]      # True / False / None (inconclusive)
    witness: Optional[SubcomplexPair] = None
    mode: str = "oracle"

    def __bool__(self):
        if self.status is None:
            raise ValueError("inconclusive verdict has no truth value")
        return self.status


def has_relative_torsion(complex: SimplicialComplex, p: int,
                         mode: str = "oracle",
                         budget: Optional[int] = None) -> TorsionVerdict:
    """Does some pure pair (L, L0) have torsion in H_p(L, L0)?

    mode="oracle" enumerates pairs exhaustively (first witness in enumeration
    order); mode="tu" delegates to the total-unimodularity test of the
    (p+1)-boundary matrix.
    """
    if mode == "tu":
        from .tugraph import is_totally_unimodular
        verdict = is_totally_unimodular(boundary_matrix(complex, p + 1),
                                        strategy="circuit", budget=budget)
        status = None if verdict.status is None else not verdict.status
        out = TorsionVerdict(status=status, mode="tu")
        out.tu_witness = verdict.witness
        return out
    if mode != "oracle":
        raise InvalidArgument(f"unknown mode {mode!r}")
    for pair in enumerate_pure_pairs(complex, p, budget=budget):
        if isinstance(pair, Truncated):
            return TorsionVerdict(status=None, mode="oracle")
        if relative_homology_group(pair).torsion_coeffs:
            return TorsionVerdict(status=True, witness=pair, mode="oracle")
    return TorsionVerdict(status=False, mode="oracle")
