"""Exact Laurent polynomials in t^(1/2) and their z-form.

Exponents count powers of t^(1/2) as plain integers, so t^k sits at exponent
2k and t^(1/2) at exponent 1; no fractional exponent arithmetic is needed.
Coefficients are `fractions.Fraction` throughout and nothing here ever
touches floating point. The variable z abbreviates t^(1/2) - t^(-1/2).

All values are immutable after construction and every operation is pure.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping, Union

from .errors import DomainError

Scalar = Union[int, Fraction]


class HalfLaurent:
    """A finite Laurent polynomial in t^(1/2) with rational coefficients."""

    __slots__ = ("_c",)

    def __init__(self, coeffs: Mapping[int, Scalar] | None = None):
        c: dict[int, Fraction] = {}
        if coeffs:
            for k, v in coeffs.items():
                f = Fraction(v)
                if f != 0:
                    c[int(k)] = f
        self._c = c

    @classmethod
    def zero(cls) -> "HalfLaurent":
        return cls()

    @classmethod
    def one(cls) -> "HalfLaurent":
        return cls({0: 1})

    @classmethod
    def constant(cls, c: Scalar) -> "HalfLaurent":
        return cls({0: Fraction(c)})

    @classmethod
    def monomial(cls, half_exponent: int, coeff: Scalar = 1) -> "HalfLaurent":
        """c * t^(half_exponent/2)."""
        return cls({half_exponent: Fraction(coeff)})

    @property
    def is_zero(self) -> bool:
        return not self._c

    @property
    def support(self) -> tuple[int, ...]:
        """Exponents (in halves) carrying a nonzero coefficient, ascending."""
        return tuple(sorted(self._c))

    def coeff(self, half_exponent: int) -> Fraction:
        return self._c.get(half_exponent, Fraction(0))

    def items(self):
        return sorted(self._c.items())

    def __eq__(self, other) -> bool:
        if not isinstance(other, HalfLaurent):
            return NotImplemented
        return self._c == other._c

    __hash__ = None

    def __neg__(self) -> "HalfLaurent":
        return HalfLaurent({k: -v for k, v in self._c.items()})

    def __add__(self, other) -> "HalfLaurent":
        other = _coerce(other)
        if other is None:
            return NotImplemented
        out = dict(self._c)
        for k, v in other._c.items():
            out[k] = out.get(k, Fraction(0)) + v
        return HalfLaurent(out)

    __radd__ = __add__

    def __sub__(self, other) -> "HalfLaurent":
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "HalfLaurent":
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other) -> "HalfLaurent":
        if isinstance(other, (int, Fraction)):
            return HalfLaurent({k: v * other for k, v in self._c.items()})
        if not isinstance(other, HalfLaurent):
            return NotImplemented
        out: dict[int, Fraction] = {}
        for k1, v1 in self._c.items():
            for k2, v2 in other._c.items():
                k = k1 + k2
                out[k] = out.get(k, Fraction(0)) + v1 * v2
        return HalfLaurent(out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "HalfLaurent":
        if n < 0:
            raise DomainError("negative powers of a polynomial are not defined")
        out = HalfLaurent.one()
        for _ in range(n):
            out = out * self
        return out

    def shift(self, half_exponent: int) -> "HalfLaurent":
        """Multiply by t^(half_exponent/2)."""
        return HalfLaurent({k + half_exponent: v for k, v in self._c.items()})

    def involution(self) -> "HalfLaurent":
        """The substitution t^(1/2) -> -t^(-1/2), i.e. t^(k/2) -> (-1)^k t^(-k/2)."""
        return HalfLaurent({-k: (v if k % 2 == 0 else -v) for k, v in self._c.items()})

    def evaluate(self, value: Scalar) -> Fraction:
        """Evaluate at t^(1/2) = value."""
        v = Fraction(value)
        if v == 0 and any(k < 0 for k in self._c):
            raise DomainError("cannot evaluate negative exponents at 0")
        total = Fraction(0)
        for k, c in self._c.items():
            total += c * v ** k
        return total

    def exact_div(self, other: "HalfLaurent") -> "HalfLaurent":
        """Exact ring division; DomainError when the quotient does not exist."""
        if other.is_zero:
            raise DomainError("division by zero")
        if self.is_zero:
            return HalfLaurent.zero()
        # Shift both operands to ordinary polynomials in u = t^(1/2) and run
        # dense long division from the top; the remainder must vanish.
        smin, omin = min(self._c), min(other._c)
        p = _dense(self, smin)
        q = _dense(other, omin)
        dq = len(q) - 1
        if len(p) - 1 < dq:
            raise DomainError("non-exact division")
        quot = [Fraction(0)] * (len(p) - dq)
        lead = q[-1]
        for i in range(len(quot) - 1, -1, -1):
            c = p[i + dq] / lead
            quot[i] = c
            if c != 0:
                for j, qc in enumerate(q):
                    p[i + j] -= c * qc
        if any(x != 0 for x in p):
            raise DomainError("non-exact division")
        base = smin - omin
        return HalfLaurent({base + i: c for i, c in enumerate(quot)})

    def __str__(self) -> str:
        if self.is_zero:
            return "0"
        parts = []
        for k, c in self.items():
            body = _term_text(abs(c), _t_monomial(k))
            if not parts:
                parts.append(f"-{body}" if c < 0 else body)
            else:
                parts.append(f" {'-' if c < 0 else '+'} {body}")
        return "".join(parts)

    def __repr__(self) -> str:
        return f"HalfLaurent({dict(self.items())!r})"


def _coerce(value) -> HalfLaurent | None:
    if isinstance(value, HalfLaurent):
        return value
    if isinstance(value, (int, Fraction)):
        return HalfLaurent.constant(value)
    return None


def _dense(p: HalfLaurent, base: int) -> list[Fraction]:
    top = max(p._c)
    out = [Fraction(0)] * (top - base + 1)
    for k, v in p._c.items():
        out[k - base] = v
    return out


def _t_monomial(half_exponent: int) -> str | None:
    if half_exponent == 0:
        return None
    if half_exponent % 2 == 0:
        k = half_exponent // 2
        return "t" if k == 1 else f"t^{k}"
    return f"t^({half_exponent}/2)"


def _term_text(coeff_abs: Fraction, monomial: str | None) -> str:
    if monomial is None:
        return str(coeff_abs)
    if coeff_abs == 1:
        return monomial
    return f"{coeff_abs}*{monomial}"


#: z = t^(1/2) - t^(-1/2)
Z = HalfLaurent({1: 1, -1: -1})


@dataclass(frozen=True)
class ZPoly:
    """z^s * (b_0 + b_1 z^2 + ... + b_m z^(2m)) with a fixed prefactor z^s.

    ``coeffs`` lists b_0..b_m; trailing zeros are stripped at construction,
    so the zero polynomial has empty coeffs. Equality is semantic: two values
    compare equal exactly when their expansions in t^(1/2) agree.
    """

    prefactor_exponent: int
    coeffs: tuple[Fraction, ...]

    def __init__(self, prefactor_exponent: int, coeffs=()):
        if prefactor_exponent < 0:
            raise DomainError("prefactor exponent must be non-negative")
        cs = [Fraction(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "prefactor_exponent", int(prefactor_exponent))
        object.__setattr__(self, "coeffs", tuple(cs))

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def z_degree(self) -> int:
        """Degree in z of the expansion; -1 for the zero polynomial."""
        if self.is_zero:
            return -1
        return self.prefactor_exponent + 2 * (len(self.coeffs) - 1)

    def value_at_z_zero(self) -> Fraction:
        """The value at z = 0, i.e. at t = 1."""
        if self.prefactor_exponent > 0 or self.is_zero:
            return Fraction(0)
        return self.coeffs[0]

    def expand(self) -> HalfLaurent:
        """Expand back into a Laurent polynomial via z = t^(1/2) - t^(-1/2)."""
        out = HalfLaurent.zero()
        power = Z ** self.prefactor_exponent
        z_sq = Z * Z
        for b in self.coeffs:
            if b != 0:
                out = out + power * b
            power = power * z_sq
        return out

    def __eq__(self, other) -> bool:
        if not isinstance(other, ZPoly):
            return NotImplemented
        if self.prefactor_exponent == other.prefactor_exponent:
            return self.coeffs == other.coeffs
        return self.expand() == other.expand()

    __hash__ = None

    def __str__(self) -> str:
        if self.is_zero:
            return "0"
        parts = []
        for k, b in enumerate(self.coeffs):
            if b == 0:
                continue
            e = self.prefactor_exponent + 2 * k
            mono = None if e == 0 else ("z" if e == 1 else f"z^{e}")
            body = _term_text(abs(b), mono)
            if not parts:
                parts.append(f"-{body}" if b < 0 else body)
            else:
                parts.append(f" {'-' if b < 0 else '+'} {body}")
        return "".join(parts)


def rewrite_in_z(p: HalfLaurent, prefactor_exponent: int) -> ZPoly:
    """Rewrite p as z^s * (polynomial in z^2), eliminating from the top.

    Each power z^n expands with leading coefficient 1 on t^(n/2), so the top
    term of the remainder determines one coefficient at a time. DomainError
    when p does not lie in z^s * Q[z^2].
    """
    s = int(prefactor_exponent)
    if s < 0:
        raise DomainError("prefactor exponent must be non-negative")
    if p.is_zero:
        return ZPoly(s, ())
    top = max(p.support)
    if top < s or (top - s) % 2 != 0:
        raise DomainError(f"polynomial does not lie in z^{s}*Q[z^2]")
    kmax = (top - s) // 2
    z_powers = [Z ** s]
    z_sq = Z * Z
    for _ in range(kmax):
        z_powers.append(z_powers[-1] * z_sq)
    b = [Fraction(0)] * (kmax + 1)
    r = p
    while not r.is_zero:
        m = max(r.support)
        if m < s or (m - s) % 2 != 0:
            raise DomainError(f"polynomial does not lie in z^{s}*Q[z^2]")
        k = (m - s) // 2
        c = r.coeff(m)
        b[k] = c
        r = r - z_powers[k] * c
    return ZPoly(s, b)
