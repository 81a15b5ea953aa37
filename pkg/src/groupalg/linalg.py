"""Exact dense linear algebra over finite fields.

Matrices are numpy int64 grids of field-element encodings bundled with their
Field.  Elimination uses first-nonzero pivoting in column order, so every
result is deterministic; there is no floating point and no pivots are chosen
for numerical reasons.

The characteristic polynomial is computed by similarity reduction to upper
Hessenberg form (divisions only, valid over any field) followed by the
standard recurrence on leading principal minors of zI - H.  The symbolic
variant charpoly_xm evaluates at extension-field nodes and interpolates each
z-coefficient.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

from .errors import DomainError, SpecError
from .field import Field, embedding, make_field

_MATMUL_BLOCK = 1 << 22  # cap on temporary elements in extension matmul


class FMatrix:
    """A rows x cols matrix over a finite field."""

    __slots__ = ("field", "data")

    def __init__(self, field: Field, data, validate: bool = True):
        self.field = field
        arr = np.array(data, dtype=np.int64)
        if arr.ndim != 2:
            raise SpecError(f"matrix data must be 2-dimensional, got shape {arr.shape}")
        if validate:
            field.check_range(arr)
        self.data = arr

    @property
    def rows(self) -> int:
        return self.data.shape[0]

    @property
    def cols(self) -> int:
        return self.data.shape[1]

    @classmethod
    def zeros(cls, field: Field, rows: int, cols: int) -> "FMatrix":
        return cls(field, np.zeros((rows, cols), dtype=np.int64), validate=False)

    @classmethod
    def identity(cls, field: Field, n: int) -> "FMatrix":
        return cls(field, np.eye(n, dtype=np.int64), validate=False)

    @classmethod
    def from_rows(cls, field: Field, rows) -> "FMatrix":
        return cls(field, np.array([list(r) for r in rows], dtype=np.int64))

    def copy(self) -> "FMatrix":
        return FMatrix(self.field, self.data.copy(), validate=False)

    def transpose(self) -> "FMatrix":
        return FMatrix(self.field, self.data.T.copy(), validate=False)

    def __eq__(self, other):
        return (isinstance(other, FMatrix) and self.field == other.field
                and np.array_equal(self.data, other.data))

    def __matmul__(self, other):
        if not isinstance(other, FMatrix):
            return NotImplemented
        if self.field != other.field:
            raise DomainError("matrix product across different fields")
        if self.cols != other.rows:
            raise SpecError(
                f"matrix product shape mismatch: {self.data.shape} @ {other.data.shape}")
        f = self.field
        a, b = self.data, other.data
        if f.m == 1:
            if self.cols * (f.p - 1) ** 2 < (1 << 62):
                return FMatrix(f, (a @ b) % f.p, validate=False)
            prod = (a.astype(object) @ b.astype(object)) % f.p  # exact fallback
            return FMatrix(f, prod.astype(np.int64), validate=False)
        out = np.empty((self.rows, other.cols), dtype=np.int64)
        step = max(1, _MATMUL_BLOCK // max(1, self.cols * other.cols))
        for i0 in range(0, self.rows, step):
            i1 = min(self.rows, i0 + step)
            prod = f.mul(a[i0:i1, :, None], b[None, :, :])
            out[i0:i1] = f.sum(prod, axis=1)
        return FMatrix(f, out, validate=False)

    def __repr__(self):
        return f"FMatrix({self.field!r}, {self.rows}x{self.cols})"

    def to_text(self) -> str:
        f = self.field
        lines = [f"{self.rows} {self.cols}"]
        for row in self.data:
            lines.append(" ".join(f.format_value(v) for v in row))
        return "\n".join(lines) + "\n"

    @classmethod
    def from_text(cls, field: Field, text: str) -> "FMatrix":
        lines = [ln for ln in text.splitlines() if ln.strip()]
        if not lines:
            raise SpecError("empty matrix text")
        head = lines[0].split()
        if len(head) != 2:
            raise SpecError(f"bad matrix header {lines[0]!r}")
        try:
            rows, cols = int(head[0]), int(head[1])
        except ValueError:
            raise SpecError(f"bad matrix header {lines[0]!r}") from None
        if len(lines) - 1 != rows:
            raise SpecError(f"expected {rows} matrix rows, got {len(lines) - 1}")
        data = np.zeros((rows, cols), dtype=np.int64)
        for i, ln in enumerate(lines[1:]):
            entries = ln.split()
            if len(entries) != cols:
                raise SpecError(f"row {i + 1} has {len(entries)} entries, expected {cols}")
            for j, tok in enumerate(entries):
                data[i, j] = field.parse_value(tok)
        return cls(field, data)


def stack_matrices(mats) -> FMatrix:
    """Vertical stack of matrices over the same field."""
    mats = list(mats)
    if not mats:
        raise SpecError("cannot stack an empty matrix list")
    f = mats[0].field
    if any(m.field != f for m in mats):
        raise DomainError("stacking matrices over different fields")
    if any(m.cols != mats[0].cols for m in mats):
        raise SpecError("stacking matrices with different column counts")
    return FMatrix(f, np.vstack([m.data for m in mats]), validate=False)


def mat_vec(mat: FMatrix, v) -> np.ndarray:
    """Matrix times column vector, as a length-rows array."""
    v = np.asarray(v, dtype=np.int64)
    if v.shape != (mat.cols,):
        raise SpecError(f"vector length {v.shape} does not match {mat.cols} columns")
    f = mat.field
    return np.atleast_1d(f.sum(f.mul(mat.data, v[None, :]), axis=1))


def vec_mat(v, mat: FMatrix) -> np.ndarray:
    """Row vector times matrix, as a length-cols array."""
    v = np.asarray(v, dtype=np.int64)
    if v.shape != (mat.rows,):
        raise SpecError(f"vector length {v.shape} does not match {mat.rows} rows")
    f = mat.field
    return np.atleast_1d(f.sum(f.mul(mat.data, v[:, None]), axis=0))


# -- elimination --

class RrefResult(NamedTuple):
    matrix: FMatrix
    rank: int
    pivots: tuple


class SolveResult(NamedTuple):
    solution: np.ndarray
    kernel: list


def _eliminate(field: Field, a: np.ndarray, reduced: bool):
    """Row-reduce a in place (first-nonzero pivoting). Returns (rank, pivots)."""
    rows, cols = a.shape
    r = 0
    pivots = []
    for c in range(cols):
        if r == rows:
            break
        nz = np.nonzero(a[r:, c])[0]
        if nz.size == 0:
            continue
        pr = r + int(nz[0])
        if pr != r:
            a[[r, pr]] = a[[pr, r]]
        piv = int(a[r, c])
        if piv != 1:
            a[r] = field.mul(a[r], field.inv(piv))
        if reduced:
            others = np.nonzero(a[:, c])[0]
            others = others[others != r]
        else:
            others = r + 1 + np.nonzero(a[r + 1:, c])[0]
        if others.size:
            factors = a[others, c]
            a[others] = field.sub(a[others], field.mul(factors[:, None], a[r][None, :]))
        pivots.append(c)
        r += 1
    return r, tuple(pivots)


def rref(mat: FMatrix) -> RrefResult:
    """Reduced row-echelon form, rank, and pivot columns (deterministic)."""
    a = mat.data.copy()
    rank_, pivots = _eliminate(mat.field, a, reduced=True)
    return RrefResult(FMatrix(mat.field, a, validate=False), rank_, pivots)


def rank(mat: FMatrix) -> int:
    a = mat.data.copy()
    r, _ = _eliminate(mat.field, a, reduced=False)
    return r


def kernel_basis(mat: FMatrix) -> list:
    """Basis of the right null space {v : mat . v = 0}, one vector per free column."""
    res = rref(mat)
    f = mat.field
    pivset = set(res.pivots)
    out = []
    for free in range(mat.cols):
        if free in pivset:
            continue
        v = np.zeros(mat.cols, dtype=np.int64)
        v[free] = 1
        for i, pc in enumerate(res.pivots):
            v[pc] = f.neg(res.matrix.data[i, free])
        out.append(v)
    return out


def solve(a: FMatrix, b) -> SolveResult | None:
    """Solve a . x = b.

    Returns:
        SolveResult (particular solution, kernel basis of a) if consistent,
        otherwise None.
    """
    b = np.asarray(b, dtype=np.int64)
    if b.shape != (a.rows,):
        raise SpecError(f"right-hand side length {b.shape} does not match {a.rows} rows")
    f = a.field
    aug = FMatrix(f, np.hstack([a.data, b[:, None]]), validate=False)
    res = rref(aug)
    if a.cols in res.pivots:
        return None
    x = np.zeros(a.cols, dtype=np.int64)
    for i, pc in enumerate(res.pivots):
        x[pc] = res.matrix.data[i, a.cols]
    # the first cols columns of the augmented RREF are exactly rref(a)
    pivset = set(res.pivots)
    kern = []
    for free in range(a.cols):
        if free in pivset:
            continue
        v = np.zeros(a.cols, dtype=np.int64)
        v[free] = 1
        for i, pc in enumerate(res.pivots):
            v[pc] = f.neg(res.matrix.data[i, free])
        kern.append(v)
    return SolveResult(x, kern)


# -- polynomials --

class FPoly:
    """Dense univariate polynomial over a finite field.

    Coefficients are stored low-to-high with no trailing zeros; the zero
    polynomial has an empty coefficient tuple.
    """

    __slots__ = ("field", "coeffs")

    def __init__(self, field: Field, coeffs):
        self.field = field
        cs = [int(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        field.check_range(np.asarray(cs, dtype=np.int64))
        self.coeffs = tuple(cs)

    @classmethod
    def zero(cls, field: Field) -> "FPoly":
        return cls(field, ())

    @classmethod
    def const(cls, field: Field, c) -> "FPoly":
        return cls(field, (int(c),))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    def valuation(self):
        """Multiplicity of the root 0 (index of first nonzero coefficient);
        None for the zero polynomial."""
        for i, c in enumerate(self.coeffs):
            if c:
                return i
        return None

    def add(self, other: "FPoly") -> "FPoly":
        f = self._same_field(other)
        n = max(len(self.coeffs), len(other.coeffs))
        a = np.zeros(n, dtype=np.int64)
        b = np.zeros(n, dtype=np.int64)
        a[:len(self.coeffs)] = self.coeffs
        b[:len(other.coeffs)] = other.coeffs
        return FPoly(f, np.atleast_1d(f.add(a, b)))

    def sub(self, other: "FPoly") -> "FPoly":
        f = self._same_field(other)
        n = max(len(self.coeffs), len(other.coeffs))
        a = np.zeros(n, dtype=np.int64)
        b = np.zeros(n, dtype=np.int64)
        a[:len(self.coeffs)] = self.coeffs
        b[:len(other.coeffs)] = other.coeffs
        return FPoly(f, np.atleast_1d(f.sub(a, b)))

    def mul(self, other: "FPoly") -> "FPoly":
        f = self._same_field(other)
        if self.is_zero or other.is_zero:
            return FPoly.zero(f)
        out = np.zeros(len(self.coeffs) + len(other.coeffs) - 1, dtype=np.int64)
        b = np.asarray(other.coeffs, dtype=np.int64)
        for i, c in enumerate(self.coeffs):
            if c:
                seg = f.add(out[i:i + len(b)], f.mul(c, b))
                out[i:i + len(b)] = seg
        return FPoly(f, out)

    def scale(self, c) -> "FPoly":
        f = self.field
        if not self.coeffs:
            return self
        return FPoly(f, np.atleast_1d(f.mul(np.asarray(self.coeffs, np.int64), int(c))))

    def eval(self, x):
        """Horner evaluation; x may be a scalar or an array."""
        f = self.field
        x = np.asarray(x, dtype=np.int64)
        acc = np.zeros_like(x)
        for c in reversed(self.coeffs):
            acc = f.add(f.mul(acc, x), c)
        if isinstance(acc, int) or acc.ndim == 0:
            return int(acc)
        return acc

    def _same_field(self, other: "FPoly") -> Field:
        if self.field != other.field:
            raise DomainError("polynomial arithmetic across different fields")
        return self.field

    def __eq__(self, other):
        return (isinstance(other, FPoly) and self.field == other.field
                and self.coeffs == other.coeffs)

    def __hash__(self):
        return hash((self.field, self.coeffs))

    def __repr__(self):
        return f"FPoly({list(self.coeffs)})"

    def to_text(self) -> str:
        if not self.coeffs:
            return "0"
        return " ".join(self.field.format_value(c) for c in self.coeffs)

    @classmethod
    def from_text(cls, field: Field, text: str) -> "FPoly":
        toks = text.split()
        return cls(field, [field.parse_value(t) for t in toks])


# -- characteristic polynomials --

def _charpoly_data(field: Field, a: np.ndarray) -> np.ndarray:
    """Coefficients (low-to-high, length s+1) of det(zI - a)."""
    h = a.copy()
    s = h.shape[0]
    for j in range(s - 2):
        nz = np.nonzero(h[j + 1:, j])[0]
        if nz.size == 0:
            continue
        pr = j + 1 + int(nz[0])
        if pr != j + 1:
            h[[j + 1, pr]] = h[[pr, j + 1]]
            h[:, [j + 1, pr]] = h[:, [pr, j + 1]]
        pivinv = field.inv(int(h[j + 1, j]))
        lower = j + 2 + np.nonzero(h[j + 2:, j])[0]
        if lower.size:
            t = np.atleast_1d(field.mul(h[lower, j], pivinv))
            h[lower] = field.sub(h[lower], field.mul(t[:, None], h[j + 1][None, :]))
            # inverse similarity: column j+1 absorbs the same combination
            contrib = field.sum(field.mul(h[:, lower], t[None, :]), axis=1)
            h[:, j + 1] = field.add(h[:, j + 1], contrib)
    # leading principal minors D_k of (zI - h), by the Hessenberg recurrence
    P = np.zeros((s + 1, s + 1), dtype=np.int64)
    P[0, 0] = 1
    for k in range(1, s + 1):
        prev = P[k - 1, :k]
        pk = np.zeros(s + 1, dtype=np.int64)
        pk[1:k + 1] = prev
        hkk = int(h[k - 1, k - 1])
        if hkk:
            pk[:k] = field.sub(pk[:k], field.mul(hkk, prev))
        if k > 1:
            # subdiagonal products beta_{k-1}, beta_{k-1}beta_{k-2}, ...
            betas = h[np.arange(k - 1, 0, -1), np.arange(k - 2, -1, -1)]
            cum = field.cummul(betas)
            hcol = h[np.arange(k - 2, -1, -1), k - 1]
            w = np.atleast_1d(field.mul(hcol, cum))
            nzw = np.nonzero(w)[0]
            if nzw.size:
                rows_idx = (k - 2) - nzw
                terms = field.mul(w[nzw][:, None], P[rows_idx, :k])
                pk[:k] = field.sub(pk[:k], field.sum(terms, axis=0))
        P[k] = pk
    return P[s]


def charpoly(mat: FMatrix) -> FPoly:
    """Monic characteristic polynomial det(zI - mat), exact over the field."""
    if mat.rows != mat.cols:
        raise SpecError(f"charpoly needs a square matrix, got {mat.data.shape}")
    return FPoly(mat.field, _charpoly_data(mat.field, mat.data))


def _interp_many(field: Field, xs: np.ndarray, vals: np.ndarray) -> np.ndarray:
    """Interpolate several value rows sharing the nodes xs.

    Args:
        xs: distinct nodes, shape (n,).
        vals: values, shape (r, n); row i holds the values of polynomial i.

    Returns:
        Coefficient rows, shape (r, n), low-to-high (trailing zeros kept).
    """
    n = xs.size
    newton = np.empty_like(vals)
    newton[:, 0] = vals[:, 0]
    cur = vals
    for j in range(1, n):
        dinv = np.atleast_1d(field.inv(field.sub(xs[j:], xs[:n - j])))
        cur = field.mul(field.sub(cur[:, 1:], cur[:, :-1]), dinv[None, :])
        newton[:, j] = cur[:, 0]
    out = np.zeros_like(vals)
    out[:, 0] = newton[:, n - 1]
    for i in range(n - 2, -1, -1):
        # p <- p*(x - xs[i]) + c_i
        shifted = np.zeros_like(out)
        shifted[:, 1:] = out[:, :-1]
        out = np.atleast_2d(field.sub(shifted, field.mul(out, int(xs[i]))))
        out[:, 0] = field.add(out[:, 0], newton[:, i])
    return out


def lagrange_interpolate(field: Field, points) -> FPoly:
    """The unique polynomial of degree < len(points) through the given points.

    Args:
        field: coefficient field.
        points: iterable of (node, value) pairs with pairwise-distinct nodes.
    """
    pts = list(points)
    if not pts:
        raise SpecError("interpolation needs at least one point")
    xs = np.array([int(x) for x, _ in pts], dtype=np.int64)
    if len(set(xs.tolist())) != xs.size:
        raise SpecError("duplicate interpolation node")
    ys = np.array([[int(v) for _, v in pts]], dtype=np.int64)
    field.check_range(xs)
    field.check_range(ys)
    return FPoly(field, _interp_many(field, xs, ys)[0])


@dataclass(frozen=True)
class XCharPoly:
    """Characteristic polynomial of diag(1, x, ..., x^{s-1}) . M with x symbolic.

    zcoeffs[j] is the z^j coefficient as a polynomial in x over the extension
    field; k is the multiplicity of the factor z.
    """

    size: int
    k: int
    zcoeffs: tuple
    field: Field
    base: Field

    def specialize(self, x0) -> FPoly:
        """Substitute a concrete x value; returns a polynomial in z."""
        return FPoly(self.field, [zp.eval(x0) for zp in self.zcoeffs])

    def to_text(self) -> str:
        lines = []
        for j, zp in enumerate(self.zcoeffs):
            lines.append(f"z^{j}: {zp.to_text()}")
        lines.append(f"k={self.k}")
        return "\n".join(lines) + "\n"


def charpoly_xm(mat: FMatrix) -> XCharPoly:
    """Symbolic-x characteristic polynomial of X . mat, X = diag(1, x, ..., x^{s-1}).

    Every x-degree is bounded by D = s(s-1)/2, so the char poly is pinned by
    its values at D+1 distinct nodes; the nodes are the first D+1 elements of
    the smallest extension F_{q^t} with q^t >= D+2, and each z-coefficient is
    interpolated from the evaluations.
    """
    if mat.rows != mat.cols:
        raise SpecError(f"charpoly_xm needs a square matrix, got {mat.data.shape}")
    f = mat.field
    s = mat.rows
    D = s * (s - 1) // 2
    t = 1
    while f.q ** t < D + 2:
        t += 1
    ext = f if t == 1 else make_field(f.p, f.m * t)
    md = embedding(f, ext)(mat.data)
    xs = np.arange(D + 1, dtype=np.int64)
    vals = np.empty((D + 1, s + 1), dtype=np.int64)
    dpow = np.empty(s, dtype=np.int64)
    for idx in range(D + 1):
        xi = int(xs[idx])
        dpow[0] = 1
        if s > 1:
            dpow[1:] = ext.cummul(np.full(s - 1, xi, dtype=np.int64))
        xm = ext.mul(md, dpow[:, None])
        vals[idx] = _charpoly_data(ext, xm)
    coeff_rows = _interp_many(ext, xs, vals.T.copy())
    zc = tuple(FPoly(ext, row) for row in coeff_rows)
    if zc[-1].coeffs != (1,):
        raise AssertionError("charpoly_xm lost monicity; interpolation is broken")
    k = next(j for j, zp in enumerate(zc) if not zp.is_zero)
    return XCharPoly(size=s, k=k, zcoeffs=zc, field=ext, base=f)
