"""Linking matrices of framed links and the effect of integral surgery.

A framed link here is just its symmetric linking matrix over a label set
split into surgery components X' and residual components X''. Integrating out
the surgery block is the Schur complement; its signature pair normalizes the
associated invariants and its determinant counts first homology.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence

from . import matrices
from .errors import DomainError
from .matrices import Matrix


class FramedLinkMatrix:
    """Symmetric rational linking matrix over labels X' (surgery) + X''.

    Entries are stored with the surgery labels first, in the order given.
    Labels must be unique, non-empty, and must not start with the reserved
    dual marker "∂".
    """

    __slots__ = ("_surgery", "_residual", "_entries")

    def __init__(self, labels: Sequence[str], surgery: Iterable[str], entries):
        labels = tuple(str(x) for x in labels)
        surgery = tuple(str(x) for x in surgery)
        if len(set(labels)) != len(labels):
            raise DomainError("duplicate labels")
        for lab in labels:
            if not lab or lab.startswith("∂"):
                raise DomainError(f"invalid label {lab!r}")
        if len(set(surgery)) != len(surgery) or any(x not in labels for x in surgery):
            raise DomainError("surgery labels must be a subset of the labels")
        try:
            m = matrices.as_matrix(entries)
        except (TypeError, ValueError) as exc:
            raise DomainError(f"invalid linking matrix: {exc}") from None
        if not matrices.is_square(m) or len(m) != len(labels):
            raise DomainError("linking matrix shape does not match the labels")
        if not matrices.is_symmetric(m):
            raise DomainError("linking matrix must be symmetric")
        surgery_set = set(surgery)
        residual = tuple(x for x in labels if x not in surgery_set)
        order = [labels.index(x) for x in surgery + residual]
        self._surgery = surgery
        self._residual = residual
        self._entries = matrices.submatrix(m, order, order)

    @property
    def surgery_labels(self) -> tuple[str, ...]:
        return self._surgery

    @property
    def residual_labels(self) -> tuple[str, ...]:
        return self._residual

    @property
    def labels(self) -> tuple[str, ...]:
        return self._surgery + self._residual

    @property
    def entries(self) -> Matrix:
        return self._entries

    @property
    def size(self) -> int:
        return len(self._entries)

    @property
    def integral_surgery(self) -> bool:
        """True when every framing (diagonal entry on X') is an integer."""
        k = len(self._surgery)
        return all(self._entries[i][i].denominator == 1 for i in range(k))

    @property
    def surgery_block(self) -> Matrix:
        k = len(self._surgery)
        return matrices.submatrix(self._entries, range(k), range(k))

    @property
    def residual_block(self) -> Matrix:
        k, n = len(self._surgery), self.size
        return matrices.submatrix(self._entries, range(k, n), range(k, n))

    @property
    def mixed_block(self) -> Matrix:
        """The X'' x X' block of linking numbers."""
        k, n = len(self._surgery), self.size
        return matrices.submatrix(self._entries, range(k, n), range(k))

    def entry(self, a: str, b: str) -> Fraction:
        lab = self.labels
        return self._entries[lab.index(a)][lab.index(b)]

    def __eq__(self, other) -> bool:
        if not isinstance(other, FramedLinkMatrix):
            return NotImplemented
        return (
            self._surgery == other._surgery
            and self._residual == other._residual
            and self._entries == other._entries
        )

    __hash__ = None

    def __repr__(self) -> str:
        return (
            f"FramedLinkMatrix(surgery={self._surgery!r}, residual={self._residual!r})"
        )


def surgery_transform(m: FramedLinkMatrix) -> Matrix:
    """Linking matrix of the residual components after the surgery components
    are integrated out: the Schur complement of the X' block."""
    if not m.surgery_labels:
        return m.residual_block
    try:
        inv = matrices.inverse(m.surgery_block)
    except ValueError:
        labels = ", ".join(m.surgery_labels)
        raise DomainError(f"singular surgery block over labels ({labels})") from None
    b = m.mixed_block
    correction = matrices.matmul(matrices.matmul(b, inv), matrices.transpose(b))
    return matrices.sub(m.residual_block, correction)


def signature_pair(a) -> tuple[int, int]:
    """(number of positive, number of negative) eigenvalues of a symmetric
    rational matrix, computed by exact congruence diagonalization."""
    am = matrices.as_matrix(a)
    if not matrices.is_square(am) or not matrices.is_symmetric(am):
        raise DomainError("signature needs a symmetric square matrix")
    n = len(am)
    w = [list(row) for row in am]
    active = list(range(n))
    pos = neg = 0
    while active:
        piv = next((i for i in active if w[i][i] != 0), None)
        if piv is None:
            pair = next(
                ((i, j) for ai, i in enumerate(active) for j in active[ai + 1 :] if w[i][j] != 0),
                None,
            )
            if pair is None:
                break  # remaining block is zero
            i, j = pair
            # all diagonals vanish here, so afterwards w[i][i] = 2*w[i][j] != 0
            for k in range(n):
                w[i][k] += w[j][k]
            for k in range(n):
                w[k][i] += w[k][j]
            continue
        d = w[piv][piv]
        if d > 0:
            pos += 1
        else:
            neg += 1
        active.remove(piv)
        for r in active:
            if w[r][piv] != 0:
                f = w[r][piv] / d
                for k in range(n):
                    w[r][k] -= f * w[piv][k]
                for k in range(n):
                    w[k][r] -= f * w[k][piv]
    return pos, neg


def h1_order(a) -> int:
    """|det A| of an integral symmetric matrix: the order of first homology
    of the surgered manifold. DomainError when singular or non-integral."""
    am = matrices.as_matrix(a)
    if not matrices.is_square(am) or not matrices.is_symmetric(am):
        raise DomainError("homology order needs a symmetric square matrix")
    if not matrices.is_integral(am):
        raise DomainError("homology order needs an integer matrix")
    d = matrices.det(am)
    if d == 0:
        raise DomainError("matrix is singular; first homology is infinite")
    return abs(int(d))
