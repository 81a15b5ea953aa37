"""Linear codes cut out by one-sided group algebra ideals.

Identifying F[G] with F^n through the coefficient map turns an ideal into a
linear [n, k] code over F.  The generator matrix is the reduced row echelon
basis of the stacked representation matrices, so equal ideals always yield
byte-identical exports, and the parity-check matrix rows span the kernel of
the generator matrix.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .dimension import IdealSpec
from .errors import BudgetExceededError, DomainError, SpecError
from .field import Field
from .linalg import FMatrix, kernel_basis, mat_vec, rref, vec_mat
from .representation import stack

DEFAULT_BUDGET = 1 << 20


@dataclass(frozen=True)
class GroupCode:
    """An [n, k] linear code arising from a group algebra ideal."""

    n: int
    k: int
    field: Field
    genmat: FMatrix
    paritymat: FMatrix
    source: IdealSpec


def build_code(spec: IdealSpec) -> GroupCode:
    """Code of the ideal; raises on the zero ideal (no code to build)."""
    res = rref(stack(spec.generators, spec.side))
    k = res.rank
    if k == 0:
        raise DomainError("zero ideal: all generators are zero, no code to build")
    field = spec.field
    n = spec.group.n
    genmat = FMatrix(field, res.matrix.data[:k].copy(), validate=False)
    kern = kernel_basis(genmat)
    pdata = np.array(kern, dtype=np.int64) if kern else np.zeros((0, n), dtype=np.int64)
    paritymat = FMatrix(field, pdata, validate=False)
    return GroupCode(n=n, k=k, field=field, genmat=genmat, paritymat=paritymat, source=spec)


def encode(code: GroupCode, message) -> np.ndarray:
    """Map a length-k message to its length-n codeword (message @ genmat)."""
    message = np.asarray(message, dtype=np.int64)
    if message.shape != (code.k,):
        raise SpecError(f"message length {message.size} does not match k = {code.k}")
    code.field.check_range(message)
    return vec_mat(message, code.genmat)


def is_codeword(code: GroupCode, word) -> bool:
    """Whether the word satisfies every parity check."""
    word = np.asarray(word, dtype=np.int64)
    if word.shape != (code.n,):
        raise SpecError(f"word length {word.size} does not match n = {code.n}")
    code.field.check_range(word)
    return not mat_vec(code.paritymat, word).any()


def min_distance(code: GroupCode, budget: int = DEFAULT_BUDGET) -> int:
    """Minimum Hamming weight over all nonzero codewords, by full enumeration.

    Refuses when q^k exceeds the budget; the caller can raise it explicitly
    for a deliberate long run.
    """
    f = code.field
    total = f.q ** code.k
    if total > budget:
        raise BudgetExceededError(
            f"q^k = {total} codewords exceeds the enumeration budget {budget}")
    # mixed-radix digits of 1..total-1 enumerate every nonzero message
    best = code.n
    block = 1 << 12
    powers = f.q ** np.arange(code.k, dtype=np.int64)
    for start in range(1, total, block):
        idx = np.arange(start, min(start + block, total), dtype=np.int64)
        msgs = (idx[:, None] // powers[None, :]) % f.q
        words = f.sum(f.mul(msgs[:, :, None], code.genmat.data[None, :, :]), axis=1)
        weights = np.count_nonzero(np.atleast_2d(words), axis=1)
        best = min(best, int(weights.min()))
    return best


def code_to_text(code: GroupCode) -> str:
    """Export format: header `n k q`, then generator rows, then parity rows."""
    lines = [f"{code.n} {code.k} {code.field.q}"]
    for row in code.genmat.data:
        lines.append(" ".join(code.field.format_value(v) for v in row))
    for row in code.paritymat.data:
        lines.append(" ".join(code.field.format_value(v) for v in row))
    return "\n".join(lines) + "\n"
