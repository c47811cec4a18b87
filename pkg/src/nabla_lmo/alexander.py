"""The Conway-normalized Alexander polynomial from Seifert matrices.

For a Seifert matrix V of an ℓ-component link, the polynomial is
det(t^(1/2) V - t^(-1/2) V*), which always lies in z^(ℓ-1) · Q[z^2] for
z = t^(1/2) - t^(-1/2) and is fixed by t^(1/2) -> -t^(-1/2). The determinant
is computed by fraction-free (Bareiss) elimination over the Laurent ring,
which keeps every intermediate entry polynomial.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import DomainError
from .laurent import HalfLaurent, ZPoly, rewrite_in_z
from .seifert import SeifertMatrix


def _det_half_laurent(rows: list[list[HalfLaurent]]) -> HalfLaurent:
    """Bareiss fraction-free determinant; divisions are exact by construction."""
    n = len(rows)
    if n == 0:
        return HalfLaurent.one()
    m = [row[:] for row in rows]
    sign = 1
    prev = HalfLaurent.one()
    for k in range(n - 1):
        if m[k][k].is_zero:
            r = next((i for i in range(k + 1, n) if not m[i][k].is_zero), None)
            if r is None:
                return HalfLaurent.zero()
            m[k], m[r] = m[r], m[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                num = m[k][k] * m[i][j] - m[i][k] * m[k][j]
                m[i][j] = num.exact_div(prev)
            m[i][k] = HalfLaurent.zero()
        prev = m[k][k]
    d = m[n - 1][n - 1]
    return -d if sign < 0 else d


@dataclass(frozen=True)
class NablaResult:
    """A Conway-normalized polynomial with its z-form.

    ``z_form`` carries the prefactor z^(components-1); its expansion equals
    ``polynomial`` exactly.
    """

    polynomial: HalfLaurent
    z_form: ZPoly
    components: int

    @property
    def at_one(self) -> Fraction:
        """The value at t = 1 (equal to det(V - V*) when built from V)."""
        return self.polynomial.evaluate(1)

    def __str__(self) -> str:
        return str(self.z_form)


def nabla_from_seifert(v: SeifertMatrix, components: int = 1) -> NablaResult:
    """det(t^(1/2) V - t^(-1/2) V*) together with its z-form.

    DomainError when the size is incompatible with the component count
    (size = 2*genus + components - 1) or when the determinant fails to lie
    in z^(components-1) * Q[z^2].
    """
    if not isinstance(v, SeifertMatrix):
        v = SeifertMatrix(v)
    if components < 1:
        raise DomainError("a link has at least one component")
    rank = v.size - components + 1
    if rank < 0 or rank % 2 != 0:
        raise DomainError(
            f"size {v.size} is impossible for {components} components: "
            "need size = 2*genus + components - 1"
        )
    e = v.entries
    n = v.size
    rows = [
        [HalfLaurent({1: e[i][j], -1: -e[j][i]}) for j in range(n)]
        for i in range(n)
    ]
    d = _det_half_laurent(rows)
    try:
        z_form = rewrite_in_z(d, components - 1)
    except DomainError:
        raise DomainError(
            f"determinant {d} does not lie in z^{components - 1}*Q[z^2]; "
            f"input is not a valid Seifert matrix for a {components}-component link"
        ) from None
    return NablaResult(d, z_form, components)


def normalize_delta(delta: HalfLaurent, h1_order: int) -> NablaResult:
    """Recover the Conway normalization from an Alexander polynomial known
    only up to units +-t^(i/2).

    There is at most one integer i making t^(i/2)*delta invariant under
    t^(1/2) -> -t^(-1/2); the sign is fixed by requiring the value at t = 1
    to be +h1_order (the order of first homology of the ambient manifold).
    """
    if h1_order < 1:
        raise DomainError("h1_order must be a positive integer")
    if delta.is_zero:
        raise DomainError("zero polynomial cannot be normalized (knot case only)")
    support = delta.support
    lo, hi = support[0], support[-1]
    if (lo + hi) % 2 != 0:
        raise DomainError("no symmetrizing shift t^(i/2) with integer i exists")
    shift = -(lo + hi) // 2
    shifted = delta.shift(shift)
    if shifted.involution() != shifted:
        raise DomainError(
            "polynomial is not symmetric under t^(1/2) -> -t^(-1/2) after shifting"
        )
    value = shifted.evaluate(1)
    if value == h1_order:
        eps = 1
    elif value == -h1_order:
        eps = -1
    elif value == 0:
        raise DomainError("value at t = 1 vanishes: link case, not supported here")
    else:
        raise DomainError(
            f"value at t = 1 is {value}, not +-{h1_order}; inconsistent h1_order"
        )
    nabla = shifted * Fraction(eps, h1_order)
    return NablaResult(nabla, rewrite_in_z(nabla, 0), 1)


@dataclass(frozen=True)
class ManifoldNabla:
    """The polynomial of a closed rank-one manifold presented by 0-surgery on
    a null-homologous knot, with the torsion order of its first homology."""

    nabla: NablaResult
    torsion_order: int


def nabla_manifold(v: SeifertMatrix, h1_order_of_m: int) -> ManifoldNabla:
    """Polynomial of the manifold obtained by 0-framed surgery on the knot
    with Seifert matrix V inside a rational homology sphere M.

    The defining normalization forces the value 1 at t = 1; inputs violating
    it are rejected.
    """
    if h1_order_of_m < 1:
        raise DomainError("h1_order must be a positive integer")
    result = nabla_from_seifert(v, 1)
    if result.at_one != 1:
        raise DomainError(
            f"value at t = 1 is {result.at_one}, not 1; "
            "not the Seifert matrix of a null-homologous knot surface"
        )
    if result.polynomial.involution() != result.polynomial:
        raise DomainError("polynomial is not symmetric")  # unreachable for real input
    return ManifoldNabla(result, h1_order_of_m)
