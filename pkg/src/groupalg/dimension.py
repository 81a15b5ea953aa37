"""Dimension computations for one-sided ideals of a group algebra.

The dimension of the ideal generated by f_1..f_r (left: sum A*f_j, right:
sum f_j*A) equals the rank of the stacked representation matrices of the
generators.  For a single generator f with representation matrix F and
characteristic polynomial z^k * g(z), g(0) != 0, the dimension lies in
[n - k, n - 1] when k >= 1 and equals n when k = 0; the lower bound is
attained whenever f is idempotent.

Two further routes avoid computing the rank directly: an exact one that
recovers rank(F) from the characteristic polynomial of X*M with
X = diag(1, x, ..., x^{s-1}) symbolic and M the symmetrized block matrix
[[0, F], [F^T, 0]] (the z-adic valuation of the result is s - 2*rank(F)),
and a randomized one that specializes x to random field values, where any
specialization can only raise the valuation, so the best of several trials
is a high-confidence lower bound that is exact with probability at least
1 - (D / q_ext)^trials.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

import numpy as np

from .algebra import AlgebraElem, _check_context
from .errors import DomainError, SpecError
from .field import embedding, make_field
from .linalg import FMatrix, FPoly, XCharPoly, charpoly, charpoly_xm, kernel_basis, rank, solve
from .representation import check_side, lambda_matrix, rho_matrix, stack

DEFAULT_SEED = 0
DEFAULT_TRIALS = 3


@dataclass(frozen=True)
class IdealSpec:
    """A one-sided ideal given by its side and a tuple of generators."""

    side: str
    generators: tuple

    def __post_init__(self):
        check_side(self.side)
        gens = tuple(self.generators)
        if not gens:
            raise SpecError("ideal needs at least one generator")
        for g in gens:
            if not isinstance(g, AlgebraElem):
                raise SpecError(f"generator {g!r} is not an algebra element")
        for g in gens[1:]:
            _check_context(gens[0], g)
        object.__setattr__(self, "generators", gens)

    @property
    def field(self):
        return self.generators[0].field

    @property
    def group(self):
        return self.generators[0].group


@dataclass(frozen=True)
class DimBound:
    """Charpoly-derived dimension bounds for a single-generator ideal."""

    lower: int
    upper: int
    exact: bool
    k: int
    charpoly: FPoly


def dim_ideal(spec: IdealSpec) -> int:
    """Dimension over F of the ideal: rank of the stacked generator matrices."""
    return rank(stack(spec.generators, spec.side))


def dim_bound_charpoly(f: AlgebraElem, side: str = "left") -> DimBound:
    """Bounds on dim of the one-sided ideal of f from its charpoly alone.

    With z^k the exact power of z dividing the characteristic polynomial of
    the representation matrix: k = 0 means the matrix is invertible and the
    ideal is all of A (dim n, exact); otherwise n - k <= dim <= n - 1, and
    the lower bound is the dimension whenever f is idempotent.
    """
    check_side(side)
    mat = rho_matrix(f) if side == "left" else lambda_matrix(f)
    cp = charpoly(mat)
    k = cp.valuation()
    n = f.group.n
    if k == 0:
        return DimBound(lower=n, upper=n, exact=True, k=0, charpoly=cp)
    exact = f.is_idempotent()
    return DimBound(lower=n - k, upper=n - 1, exact=exact, k=k, charpoly=cp)


def ideal_membership(h: AlgebraElem, spec: IdealSpec) -> bool:
    """Whether h lies in the ideal: stacking h must not raise the rank."""
    _check_context(h, spec.generators[0])
    base = stack(spec.generators, spec.side)
    aug = stack(list(spec.generators) + [h], spec.side)
    return rank(base) == rank(aug)


def annihilator_basis(f: AlgebraElem, side: str = "right") -> list:
    """Basis of the one-sided annihilator of f.

    side='right' is {a : f*a = 0}; its coefficient vectors are the starred
    kernel vectors of the right-regular matrix of f (v is in the kernel
    exactly when v* kills f from the right).  side='left' is {a : a*f = 0},
    the kernel of the right-regular matrix of f* taken directly.
    """
    check_side(side)
    target = f if side == "right" else f.star()
    vecs = kernel_basis(rho_matrix(target))
    out = []
    for v in vecs:
        elem = AlgebraElem(f.field, f.group, v, validate=False)
        out.append(elem.star() if side == "right" else elem)
    return out


def idempotent_generator(f: AlgebraElem, side: str = "left"):
    """Idempotent generator of the one-sided ideal of f, or None.

    Searches the ideal itself: for the left ideal A*f this solves
    f * (sum_i c_i g_i f) = f for the c_i.  Any solution e is automatically
    idempotent and generates the same ideal (both facts are verified before
    returning).  The solver picks the canonical solution with free variables
    zero, so the output is deterministic.  Returns None when the system is
    inconsistent, which only happens when the characteristic divides the
    group order; raises on the zero element, which generates the zero ideal.
    """
    check_side(side)
    if f.is_zero:
        raise DomainError("zero element: the zero ideal has no idempotent generator")
    r = rho_matrix(f)
    lam = lambda_matrix(f)
    # columns of `span` are the candidate generators g_i*f (resp. f*g_i)
    span = (r if side == "left" else lam).transpose()
    # applying f on the ideal side maps coefficient columns through this
    act = (lam if side == "left" else r).transpose()
    sol = solve(act @ span, f.coeffs)
    if sol is None:
        return None
    e = AlgebraElem(f.field, f.group,
                    (span @ FMatrix(f.field, sol.solution[:, None], validate=False)).data[:, 0],
                    validate=False)
    if not e.is_idempotent():
        raise AssertionError("solved generator is not idempotent")
    if rank(stack([e], side)) != rank(stack([f], side)):
        raise AssertionError("solved idempotent does not span the ideal")
    return e


def _mulmuley_matrix(f: AlgebraElem, side: str, symmetrize: bool) -> FMatrix:
    mat = rho_matrix(f) if side == "left" else lambda_matrix(f)
    if not symmetrize:
        return mat
    n = mat.rows
    data = np.zeros((2 * n, 2 * n), dtype=np.int64)
    data[:n, n:] = mat.data
    data[n:, :n] = mat.data.T
    return FMatrix(f.field, data, validate=False)


def mulmuley_charpoly(f: AlgebraElem, side: str = "left",
                      symmetrize: bool = True) -> XCharPoly:
    """Symbolic-x characteristic polynomial of X*M for the generator f."""
    check_side(side)
    return charpoly_xm(_mulmuley_matrix(f, side, symmetrize))


def dim_mulmuley_exact(f: AlgebraElem, side: str = "left",
                       shortcut: str = "auto") -> int:
    """Dimension of the one-sided ideal of f via the symbolic-x charpoly.

    shortcut='commutative' skips the symmetric doubling and reads the rank
    off the representation matrix itself (dim = s - k); it requires a
    commutative group.  'symmetrize' (and 'auto') uses the doubled matrix
    [[0, F], [F^T, 0]] of size s = 2n, where dim = (s - k) / 2.
    """
    check_side(side)
    if shortcut not in ("auto", "symmetrize", "commutative"):
        raise SpecError(f"shortcut must be auto, symmetrize, or commutative, got {shortcut!r}")
    if shortcut == "commutative" and not f.group.is_commutative:
        raise DomainError("commutative shortcut on a non-commutative group")
    direct = shortcut == "commutative"
    xc = mulmuley_charpoly(f, side, symmetrize=not direct)
    d = xc.size - xc.k
    if direct:
        return d
    if d % 2:
        raise AssertionError("symmetrized valuation has wrong parity")
    return d // 2


def dim_mulmuley_random(f: AlgebraElem, side: str = "left",
                        trials: int = DEFAULT_TRIALS, seed: int = DEFAULT_SEED) -> int:
    """Randomized dimension estimate: specialize x before the charpoly.

    Each trial draws x0 from an extension field with more than 2*D elements
    (D = s(s-1)/2) and computes the z-adic valuation of charpoly(X(x0)*M).
    Specializing can only raise the valuation, so every trial yields a lower
    bound on the dimension and the maximum over trials is reported.  Trials
    are seeded independently as `{seed}:{trial}`, so results are reproducible
    and adding trials never changes earlier draws.  Each trial is exact with
    probability at least 1 - D/q_ext, so the failure odds decay as
    (D/q_ext)^trials < 2^-trials.
    """
    check_side(side)
    if trials < 1:
        raise SpecError(f"trials must be >= 1, got {trials}")
    mat = _mulmuley_matrix(f, side, symmetrize=True)
    base = f.field
    s = mat.rows
    D = s * (s - 1) // 2
    t = 1
    while base.q ** t <= 2 * D:
        t += 1
    ext = base if t == 1 else make_field(base.p, base.m * t)
    md = embedding(base, ext)(mat.data)
    best = 0
    for trial in range(trials):
        rng = random.Random(f"{seed}:{trial}")
        x0 = rng.randrange(ext.q)
        dpow = np.empty(s, dtype=np.int64)
        dpow[0] = 1
        if s > 1:
            dpow[1:] = ext.cummul(np.full(s - 1, x0, dtype=np.int64))
        xm = FMatrix(ext, ext.mul(md, dpow[:, None]), validate=False)
        k = charpoly(xm).valuation()
        best = max(best, (s - k) // 2)
    return best
