"""Integer homology of the normalized chain complex via Smith normal form."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .simplicial import EdgePath, SimplicialError, SimplicialSet

__all__ = [
    "SNF",
    "smith_normal_form",
    "boundary_matrix",
    "Homology",
    "homology",
    "LoopClass",
    "loop_class",
]

# entries beyond this switch the elimination to Python integers
_SAFE = 1 << 30


@dataclass
class SNF:
    """``U @ A @ V == D`` with ``D`` diagonal, ``diag`` its nonzero entries."""

    diag: list[int]
    U: np.ndarray
    Uinv: np.ndarray
    V: np.ndarray
    Vinv: np.ndarray

    @property
    def rank(self) -> int:
        return len(self.diag)


def _eye(n: int, dtype) -> np.ndarray:
    return np.eye(n, dtype=dtype)


def smith_normal_form(A: np.ndarray) -> SNF:
    """Smith normal form with unimodular transforms and their inverses.

    Pivots are chosen by least absolute value; the diagonal satisfies
    ``d_1 | d_2 | ...`` with all ``d_i > 0``.
    """
    A = np.asarray(A)
    m, n = A.shape
    dtype = np.int64 if (A.size == 0 or np.abs(A).max() < _SAFE) else object
    try:
        return _snf(A.astype(dtype), dtype)
    except OverflowError:
        return _snf(A.astype(object), object)


def _snf(A: np.ndarray, dtype) -> SNF:
    m, n = A.shape
    A = A.copy()
    U, Uinv, V, Vinv = _eye(m, dtype), _eye(m, dtype), _eye(n, dtype), _eye(n, dtype)
    guard = dtype is not object

    def check() -> None:
        if guard and A.size and np.abs(A).max() >= _SAFE:
            raise OverflowError

    def swap_rows(i: int, j: int) -> None:
        if i != j:
            A[[i, j]] = A[[j, i]]
            U[[i, j]] = U[[j, i]]
            Uinv[:, [i, j]] = Uinv[:, [j, i]]

    def swap_cols(i: int, j: int) -> None:
        if i != j:
            A[:, [i, j]] = A[:, [j, i]]
            V[:, [i, j]] = V[:, [j, i]]
            Vinv[[i, j]] = Vinv[[j, i]]

    diag: list[int] = []
    t = 0
    while t < min(m, n):
        sub = A[t:, t:]
        nz = np.argwhere(sub != 0)
        if len(nz) == 0:
            break
        vals = np.abs(np.array([sub[i, j] for i, j in nz], dtype=object))
        i0, j0 = nz[int(np.argmin(vals))]
        swap_rows(t, t + int(i0))
        swap_cols(t, t + int(j0))
        while True:
            if A[t, t] < 0:
                A[t] = -A[t]
                U[t] = -U[t]
                Uinv[:, t] = -Uinv[:, t]
            p = A[t, t]
            # clear column t below the pivot
            q = A[t + 1 :, t] // p
            if np.any(q != 0):
                A[t + 1 :] -= q[:, None] * A[t]
                U[t + 1 :] -= q[:, None] * U[t]
                Uinv[:, t] += Uinv[:, t + 1 :] @ q
            # clear row t right of the pivot
            q = A[t, t + 1 :] // p
            if np.any(q != 0):
                A[:, t + 1 :] -= A[:, t][:, None] * q[None, :]
                V[:, t + 1 :] -= V[:, t][:, None] * q[None, :]
                Vinv[t] += q @ Vinv[t + 1 :]
            check()
            col_rest = np.nonzero(A[t + 1 :, t])[0]
            row_rest = np.nonzero(A[t, t + 1 :])[0]
            if len(col_rest):
                k = t + 1 + min(col_rest, key=lambda r: abs(A[t + 1 + r, t]))
                swap_rows(t, int(k))
                continue
            if len(row_rest):
                k = t + 1 + min(row_rest, key=lambda c: abs(A[t, t + 1 + c]))
                swap_cols(t, int(k))
                continue
            rest = A[t + 1 :, t + 1 :]
            bad = np.argwhere(rest % p != 0)
            if len(bad):
                r = t + 1 + int(bad[0][0])
                # row_t += row_r, then re-eliminate
                A[t] += A[r]
                U[t] += U[r]
                Uinv[:, r] -= Uinv[:, t]
                continue
            break
        diag.append(int(A[t, t]))
        t += 1
    return SNF(diag, U, Uinv, V, Vinv)


def _matmul(A: np.ndarray, B: np.ndarray) -> np.ndarray:
    """Exact integer product, in int64 when a magnitude bound allows it."""
    if A.size == 0 or B.size == 0:
        return np.zeros((A.shape[0], B.shape[1]), dtype=np.int64)
    a = max(abs(int(v)) for v in np.asarray(A).flat) if A.dtype == object else int(np.abs(A).max())
    b = max(abs(int(v)) for v in np.asarray(B).flat) if B.dtype == object else int(np.abs(B).max())
    if a * b * A.shape[1] < (1 << 62):
        return A.astype(np.int64) @ B.astype(np.int64)
    return A.astype(object) @ B.astype(object)


def _index(X: SimplicialSet, k: int) -> dict[str, int]:
    return {x: i for i, x in enumerate(X.nondeg(k))}


def boundary_matrix(X: SimplicialSet, k: int) -> np.ndarray:
    """``d_k : C_k -> C_{k-1}`` on normalized chains (rows: (k-1)-simplices)."""
    cols = X.nondeg(k)
    if k == 0:
        return np.zeros((0, len(cols)), dtype=np.int64)
    rows = _index(X, k - 1)
    M = np.zeros((len(rows), len(cols)), dtype=np.int64)
    for j, x in enumerate(cols):
        for i, (alpha, y) in enumerate(X.faces_of(x)):
            if alpha == tuple(range(len(alpha))):
                M[rows[y], j] += (-1) ** i
    return M


@dataclass
class Homology:
    degree: int
    rank: int
    torsion: list[int]
    generators: list[dict[str, int]]
    _basis: list[str]
    _snf1: SNF
    _r: int
    _snf2: SNF

    def coordinates(self, chain: dict[str, int]) -> tuple[tuple[int, ...], tuple[int, ...]]:
        """Free and torsion coordinates of the class of a cycle."""
        idx = {x: i for i, x in enumerate(self._basis)}
        c = np.zeros(len(self._basis), dtype=object)
        for x, v in chain.items():
            if x not in idx:
                raise SimplicialError(f"{x!r} is not a nondegenerate {self.degree}-simplex")
            c[idx[x]] += v
        w = _matmul(self._snf1.Vinv, c.reshape(-1, 1))[:, 0]
        if any(w[: self._r]):
            raise SimplicialError("chain is not a cycle")
        z = _matmul(self._snf2.U, w[self._r :].reshape(-1, 1))[:, 0]
        s = self._snf2.rank
        tors = tuple(int(z[i]) % d for i, d in enumerate(self._snf2.diag) if d > 1)
        return tuple(int(v) for v in z[s:]), tors

    def functionals(self) -> np.ndarray:
        """Integer matrix ``F`` with ``F @ c`` the free coordinates of a cycle ``c``."""
        r, s = self._r, self._snf2.rank
        return _matmul(self._snf2.U, self._snf1.Vinv[r:, :])[s:, :]

    @property
    def basis(self) -> list[str]:
        return list(self._basis)

    def descriptor(self) -> dict:
        return {"degree": self.degree, "rank": self.rank, "torsion": list(self.torsion)}


def homology(X: SimplicialSet, k: int) -> Homology:
    if k not in (0, 1, 2):
        raise SimplicialError("homology is supported in degrees 0, 1, 2")
    dk = boundary_matrix(X, k)
    dk1 = boundary_matrix(X, k + 1)
    n = dk.shape[1]
    s1 = smith_normal_form(dk)
    r = s1.rank
    M = _matmul(s1.Vinv, dk1)[r:, :] if n else np.zeros((0, dk1.shape[1]), dtype=np.int64)
    s2 = smith_normal_form(M)
    z = n - r
    rank = z - s2.rank
    torsion = [d for d in s2.diag if d > 1]
    basis = X.nondeg(k)
    G = _matmul(s1.V[:, r:], s2.Uinv[:, s2.rank :]) if z > s2.rank else np.zeros((n, 0), dtype=np.int64)
    gens = [{basis[j]: int(v) for j, v in enumerate(G[:, i]) if v} for i in range(G.shape[1])]
    return Homology(k, rank, torsion, gens, basis, s1, r, s2)


@dataclass(frozen=True)
class LoopClass:
    free: tuple[int, ...]
    torsion: tuple[int, ...]


def loop_class(X: SimplicialSet, loop: EdgePath, H: Homology | None = None) -> LoopClass:
    """Class of a closed edge path in ``H_1``."""
    if not loop.is_closed():
        raise SimplicialError("loop_class needs a closed path")
    H = H if H is not None else homology(X, 1)
    free, tors = H.coordinates(loop.chain())
    return LoopClass(free, tors)
