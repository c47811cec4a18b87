"""Strut algebra and formal Gaussian integration over surgery labels.

A strut is an edge with two labeled ends; struts over a fixed label set
generate a commutative polynomial algebra, with a monomial stored as a sorted
multiset of sorted label pairs. Exponentials of quadratic forms in struts
encode linking data. Pairing a strut polynomial with legs labeled in
X'' ∪ X' against a polynomial of dual (∂-labeled) struts glues every X' leg
to a ∂ leg of the same color in all possible ways; on exponentials of
quadratics this reproduces the Schur complement of the X' block. Both routes
are implemented so each can check the other.

Degrees count struts, matching the half-vertex grading of diagram algebras.
When truncating the left pairing factor, a mixed strut (one X'' leg, one X'
leg) weighs 1/2: gluing consumes mixed struts in pairs, each surviving output
strut eating two of them, so this weight makes truncated pairings agree
exactly with the truncated closed form.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import permutations, product
from typing import Iterable, Mapping, Sequence, Union

from . import matrices
from .errors import DomainError
from .matrices import Matrix
from .seifert import SeifertMatrix
from .surgery import FramedLinkMatrix, surgery_transform

Scalar = Union[int, Fraction]
Strut = tuple[str, str]
Term = tuple[Strut, ...]

DUAL_MARK = "∂"


def dual_label(label: str) -> str:
    """The ∂-label glued against ordinary legs of the same color."""
    return DUAL_MARK + label


def _strut(a: str, b: str) -> Strut:
    return (a, b) if a <= b else (b, a)


def _term(struts: Iterable[Strut]) -> Term:
    return tuple(sorted(_strut(a, b) for a, b in struts))


class StrutPolynomial:
    """A polynomial in commuting struts with rational coefficients."""

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[Term, Scalar] | None = None):
        out: dict[Term, Fraction] = {}
        if terms:
            for term, c in terms.items():
                f = Fraction(c)
                if f != 0:
                    key = _term(term)
                    out[key] = out.get(key, Fraction(0)) + f
        self._terms = {k: v for k, v in out.items() if v != 0}

    @classmethod
    def zero(cls) -> "StrutPolynomial":
        return cls()

    @classmethod
    def one(cls) -> "StrutPolynomial":
        return cls({(): Fraction(1)})

    @classmethod
    def strut(cls, a: str, b: str, coeff: Scalar = 1) -> "StrutPolynomial":
        return cls({(_strut(a, b),): Fraction(coeff)})

    @property
    def is_zero(self) -> bool:
        return not self._terms

    def coeff(self, term: Iterable[Strut]) -> Fraction:
        return self._terms.get(_term(term), Fraction(0))

    def items(self):
        return sorted(self._terms.items())

    def degree(self) -> int:
        """Largest strut count among the terms; -1 when zero."""
        return max((len(t) for t in self._terms), default=-1)

    def truncate(self, max_degree: int) -> "StrutPolynomial":
        return StrutPolynomial(
            {t: c for t, c in self._terms.items() if len(t) <= max_degree}
        )

    def __eq__(self, other) -> bool:
        if not isinstance(other, StrutPolynomial):
            return NotImplemented
        return self._terms == other._terms

    __hash__ = None

    def __add__(self, other) -> "StrutPolynomial":
        if not isinstance(other, StrutPolynomial):
            return NotImplemented
        out = dict(self._terms)
        for t, c in other._terms.items():
            out[t] = out.get(t, Fraction(0)) + c
        return StrutPolynomial(out)

    def __sub__(self, other) -> "StrutPolynomial":
        if not isinstance(other, StrutPolynomial):
            return NotImplemented
        return self + (-1) * other

    def __mul__(self, other) -> "StrutPolynomial":
        if isinstance(other, (int, Fraction)):
            return StrutPolynomial({t: c * other for t, c in self._terms.items()})
        if isinstance(other, StrutPolynomial):
            out: dict[Term, Fraction] = {}
            for t1, c1 in self._terms.items():
                for t2, c2 in other._terms.items():
                    key = tuple(sorted(t1 + t2))
                    out[key] = out.get(key, Fraction(0)) + c1 * c2
            return StrutPolynomial(out)
        return NotImplemented

    __rmul__ = __mul__

    def __str__(self) -> str:
        if self.is_zero:
            return "0"
        parts = []
        for term, c in self.items():
            mono = "*".join(f"s({a},{b})" for a, b in term) or None
            if mono is None:
                body = str(abs(c))
            elif abs(c) == 1:
                body = mono
            else:
                body = f"{abs(c)}*{mono}"
            if not parts:
                parts.append(f"-{body}" if c < 0 else body)
            else:
                parts.append(f" {'-' if c < 0 else '+'} {body}")
        return "".join(parts)

    def __repr__(self) -> str:
        return f"StrutPolynomial({self._terms!r})"


class StrutQuadratic:
    """exp((1/2) * sum_ij q_ij s(i,j)) presented by its symmetric matrix q."""

    __slots__ = ("_labels", "_q")

    def __init__(self, labels: Sequence[str], q):
        labels = tuple(str(x) for x in labels)
        if len(set(labels)) != len(labels):
            raise DomainError("duplicate labels")
        qm = matrices.as_matrix(q)
        if not matrices.is_square(qm) or len(qm) != len(labels):
            raise DomainError("quadratic form shape does not match the labels")
        if not matrices.is_symmetric(qm):
            raise DomainError("quadratic form must be symmetric")
        self._labels = labels
        self._q = qm

    @property
    def labels(self) -> tuple[str, ...]:
        return self._labels

    @property
    def matrix(self) -> Matrix:
        return self._q

    def __eq__(self, other) -> bool:
        if not isinstance(other, StrutQuadratic):
            return NotImplemented
        return self._labels == other._labels and self._q == other._q

    __hash__ = None

    def expand(self, max_degree: int) -> StrutPolynomial:
        """The exponential expanded as a strut polynomial of degree <= max_degree."""
        entries = []
        for i, a in enumerate(self._labels):
            for j in range(i, len(self._labels)):
                c = self._q[i][j] if i != j else self._q[i][i] / 2
                if c != 0:
                    entries.append((_strut(a, self._labels[j]), c, Fraction(1)))
        return _exp_linear(entries, Fraction(max_degree))

    def __repr__(self) -> str:
        return f"StrutQuadratic(labels={self._labels!r}, q={self._q!r})"


def _exp_linear(
    entries: Sequence[tuple[Strut, Fraction, Fraction]], bound: Fraction
) -> StrutPolynomial:
    """exp(sum of coeff*strut), keeping monomials of total weight <= bound.

    entries lists (strut, coefficient, weight); a monomial taking k_i copies
    of strut i weighs sum k_i * w_i and has coefficient prod c_i^k_i / k_i!.
    """
    acc: dict[Term, Fraction] = {}

    def rec(idx: int, struts: list[Strut], coeff: Fraction, budget: Fraction) -> None:
        if idx == len(entries):
            key = tuple(sorted(struts))
            acc[key] = acc.get(key, Fraction(0)) + coeff
            return
        s, c, w = entries[idx]
        k = 0
        f = coeff
        while k * w <= budget:
            if k > 0:
                f = f * c / k
            rec(idx + 1, struts + [s] * k, f, budget - k * w)
            k += 1

    rec(0, [], Fraction(1), bound)
    return StrutPolynomial(acc)


def tangle_strut_part(v: SeifertMatrix, labels: Sequence[str] | None = None) -> StrutQuadratic:
    """Strut exponent attached to a Seifert matrix: the symmetric part
    U = (V + V*)/2 as a quadratic form over one label per surface generator."""
    if labels is None:
        labels = tuple(str(i + 1) for i in range(v.size))
    return StrutQuadratic(labels, v.symmetric_part)


def strut_part_of_aarhus(m: FramedLinkMatrix) -> StrutQuadratic:
    """Strut exponent left after integrating out the surgery components,
    by the closed matrix route: exp((1/2) * Schur complement).

    Requires integral framings on the surgery components.
    """
    if not m.integral_surgery:
        raise DomainError("surgery framings must be integers")
    return StrutQuadratic(m.residual_labels, surgery_transform(m))


def left_pairing_factor(m: FramedLinkMatrix, max_degree: Scalar) -> StrutPolynomial:
    """Truncated exp of the residual-residual and mixed strut part of the
    linking data. Mixed struts weigh 1/2 toward the truncation bound."""
    e = m.entries
    k = len(m.surgery_labels)
    res = m.residual_labels
    entries = []
    for i, a in enumerate(res):
        for j in range(i, len(res)):
            c = e[k + i][k + j] if i != j else e[k + i][k + i] / 2
            if c != 0:
                entries.append((_strut(a, res[j]), c, Fraction(1)))
    for i, a in enumerate(res):
        for x, lab in enumerate(m.surgery_labels):
            c = e[k + i][x]
            if c != 0:
                entries.append((_strut(a, lab), c, Fraction(1, 2)))
    return _exp_linear(entries, Fraction(max_degree))


def right_pairing_factor(m: FramedLinkMatrix, max_degree: int) -> StrutPolynomial:
    """Truncated exp(-(1/2) * sum l^xy s(∂x,∂y)) over the inverse of the
    surgery block; this is the Gaussian weight glued against X' legs."""
    if not m.surgery_labels:
        return StrutPolynomial.one()
    try:
        inv = matrices.inverse(m.surgery_block)
    except ValueError:
        labels = ", ".join(m.surgery_labels)
        raise DomainError(f"singular surgery block over labels ({labels})") from None
    entries = []
    for i, a in enumerate(m.surgery_labels):
        for j in range(i, len(m.surgery_labels)):
            c = -inv[i][j] if i != j else -inv[i][i] / 2
            if c != 0:
                entries.append(
                    (_strut(dual_label(a), dual_label(m.surgery_labels[j])), c, Fraction(1))
                )
    return _exp_linear(entries, Fraction(max_degree))


def wick_pair(
    left: StrutPolynomial, right: StrutPolynomial, glue_labels: Sequence[str]
) -> StrutPolynomial:
    """Glue every x-labeled leg of ``left`` to a ∂x-labeled leg of ``right``.

    Monomial pairs whose leg counts disagree for some color contribute zero.
    Struts of ``left`` with both legs in the glue set would close up into
    circles and are rejected; ``right`` may contain ∂-labeled struts only.
    The result is bilinear in both arguments.
    """
    glue = tuple(dict.fromkeys(str(x) for x in glue_labels))
    gset = set(glue)
    dual_of = {dual_label(x): x for x in glue}

    acc: dict[Term, Fraction] = {}
    for lterm, lc in left.items():
        pure: list[Strut] = []
        legs: dict[str, list[str]] = {x: [] for x in glue}
        for a, b in lterm:
            if a.startswith(DUAL_MARK) or b.startswith(DUAL_MARK):
                raise DomainError("left factor must not contain ∂-labeled legs")
            a_glued, b_glued = a in gset, b in gset
            if a_glued and b_glued:
                raise DomainError(
                    f"left factor contains the strut ({a},{b}) with both legs "
                    "among the glue labels; gluing it would close a circle"
                )
            if a_glued:
                legs[a].append(b)
            elif b_glued:
                legs[b].append(a)
            else:
                pure.append((a, b))
        for rterm, rc in right.items():
            slots: dict[str, list[tuple[int, int]]] = {x: [] for x in glue}
            for idx, (a, b) in enumerate(rterm):
                if a not in dual_of or b not in dual_of:
                    raise DomainError(
                        f"right factor strut ({a},{b}) is not a ∂-labeled strut "
                        "over the glue labels"
                    )
                slots[dual_of[a]].append((idx, 0))
                slots[dual_of[b]].append((idx, 1))
            if any(len(legs[x]) != len(slots[x]) for x in glue):
                continue
            colors = [x for x in glue if legs[x]]
            weight = lc * rc
            for perms in product(*(permutations(range(len(legs[x]))) for x in colors)):
                partner: dict[tuple[int, int], str] = {}
                for x, perm in zip(colors, perms):
                    for leg_idx, slot_idx in enumerate(perm):
                        partner[slots[x][slot_idx]] = legs[x][leg_idx]
                glued = [
                    _strut(partner[(idx, 0)], partner[(idx, 1)])
                    for idx in range(len(rterm))
                ]
                key = tuple(sorted(pure + glued))
                acc[key] = acc.get(key, Fraction(0)) + weight
    return StrutPolynomial(acc)


def gaussian_pair(m: FramedLinkMatrix) -> StrutQuadratic:
    """Strut exponent after integrating out the surgery components, computed
    by enumerating gluings instead of the matrix identity.

    The pairing of the exponentials is again the exponential of a quadratic,
    so its degree-1 part determines the exponent; only the minimal truncation
    is needed to read it off.
    """
    left = left_pairing_factor(m, Fraction(1))
    right = right_pairing_factor(m, 1)
    paired = wick_pair(left, right, m.surgery_labels).truncate(1)
    res = m.residual_labels
    index = {lab: i for i, lab in enumerate(res)}
    n = len(res)
    q = [[Fraction(0)] * n for _ in range(n)]
    for term, c in paired.items():
        if not term:
            if c != 1:
                raise DomainError("pairing lost normalization; constant term != 1")
            continue
        (a, b), = term
        i, j = index[a], index[b]
        if i == j:
            q[i][i] = 2 * c
        else:
            q[i][j] = c
            q[j][i] = c
    return StrutQuadratic(res, q)
