"""Even wheels and the weight system sending the 2n-wheel to -2*h^(2n).

A wheel of even size 2n is written w2n. WheelSeries is an exponential
element exp(sum a_2n * w2n) stored by its exponent coefficients; odd wheels
do not exist here by construction, so the vanishing of odd terms is enforced
at the type level. WheelPolynomial is an honest polynomial in commuting
wheels, truncated by total degree (the sum of wheel sizes).
"""

from __future__ import annotations

from fractions import Fraction
from typing import Mapping, Union

from .errors import DomainError
from .hseries import HSeries

Scalar = Union[int, Fraction]
WheelTerm = tuple[int, ...]


def _check_index(index: int) -> int:
    index = int(index)
    if index < 2 or index % 2 != 0:
        raise DomainError(f"wheel size must be a positive even integer, got {index}")
    return index


class WheelSeries:
    """exp(sum a_2n * w2n), stored by the exponent coefficients a_2n."""

    __slots__ = ("_a",)

    def __init__(self, coefficients: Mapping[int, Scalar] | None = None):
        a: dict[int, Fraction] = {}
        if coefficients:
            for k, v in coefficients.items():
                f = Fraction(v)
                if f != 0:
                    a[_check_index(k)] = f
        self._a = a

    @property
    def coefficients(self) -> dict[int, Fraction]:
        return dict(sorted(self._a.items()))

    def coefficient(self, index: int) -> Fraction:
        return self._a.get(index, Fraction(0))

    @property
    def is_trivial(self) -> bool:
        return not self._a

    def disjoint_union(self, other: "WheelSeries") -> "WheelSeries":
        """Union of diagrams multiplies exponentials: exponents add."""
        out = dict(self._a)
        for k, v in other._a.items():
            out[k] = out.get(k, Fraction(0)) + v
        return WheelSeries(out)

    def __eq__(self, other) -> bool:
        if not isinstance(other, WheelSeries):
            return NotImplemented
        return self._a == other._a

    __hash__ = None

    def __str__(self) -> str:
        if not self._a:
            return "exp( 0 )"
        parts = []
        for k, c in sorted(self._a.items()):
            body = f"w{k}" if abs(c) == 1 else f"{abs(c)} w{k}"
            if not parts:
                parts.append(f"-{body}" if c < 0 else body)
            else:
                parts.append(f" {'-' if c < 0 else '+'} {body}")
        return f"exp( {''.join(parts)} )"

    def __repr__(self) -> str:
        return f"WheelSeries({self.coefficients!r})"


class WheelPolynomial:
    """A polynomial in commuting even wheels."""

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[WheelTerm, Scalar] | None = None):
        out: dict[WheelTerm, Fraction] = {}
        if terms:
            for term, c in terms.items():
                f = Fraction(c)
                if f != 0:
                    key = tuple(sorted(_check_index(k) for k in term))
                    out[key] = out.get(key, Fraction(0)) + f
        self._terms = {k: v for k, v in out.items() if v != 0}

    @classmethod
    def zero(cls) -> "WheelPolynomial":
        return cls()

    @classmethod
    def one(cls) -> "WheelPolynomial":
        return cls({(): 1})

    @classmethod
    def wheel(cls, index: int, coeff: Scalar = 1) -> "WheelPolynomial":
        return cls({(index,): coeff})

    @property
    def is_zero(self) -> bool:
        return not self._terms

    def coeff(self, term: WheelTerm) -> Fraction:
        return self._terms.get(tuple(sorted(term)), Fraction(0))

    def constant_term(self) -> Fraction:
        return self._terms.get((), Fraction(0))

    def items(self):
        return sorted(self._terms.items())

    def degree(self) -> int:
        return max((sum(t) for t in self._terms), default=-1)

    def truncate(self, order: int) -> "WheelPolynomial":
        return WheelPolynomial({t: c for t, c in self._terms.items() if sum(t) <= order})

    def __eq__(self, other) -> bool:
        if not isinstance(other, WheelPolynomial):
            return NotImplemented
        return self._terms == other._terms

    __hash__ = None

    def __add__(self, other) -> "WheelPolynomial":
        other = _coerce(other)
        if other is None:
            return NotImplemented
        out = dict(self._terms)
        for t, c in other._terms.items():
            out[t] = out.get(t, Fraction(0)) + c
        return WheelPolynomial(out)

    __radd__ = __add__

    def __sub__(self, other) -> "WheelPolynomial":
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return self + other * Fraction(-1)

    def __rsub__(self, other) -> "WheelPolynomial":
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return other + self * Fraction(-1)

    def __mul__(self, other) -> "WheelPolynomial":
        if isinstance(other, (int, Fraction)):
            return WheelPolynomial({t: c * other for t, c in self._terms.items()})
        if not isinstance(other, WheelPolynomial):
            return NotImplemented
        out: dict[WheelTerm, Fraction] = {}
        for t1, c1 in self._terms.items():
            for t2, c2 in other._terms.items():
                key = tuple(sorted(t1 + t2))
                out[key] = out.get(key, Fraction(0)) + c1 * c2
        return WheelPolynomial(out)

    __rmul__ = __mul__

    def __repr__(self) -> str:
        return f"WheelPolynomial({self._terms!r})"


def _coerce(value) -> WheelPolynomial | None:
    if isinstance(value, WheelPolynomial):
        return value
    if isinstance(value, (int, Fraction)):
        return WheelPolynomial({(): value})
    return None


def wheel_exp(p: WheelPolynomial, order: int) -> WheelPolynomial:
    """exp of a wheel polynomial without constant term, truncated by total degree."""
    if p.constant_term() != 0:
        raise DomainError("wheel exp needs a zero constant term")
    p = p.truncate(order)
    result = WheelPolynomial.one()
    term = WheelPolynomial.one()
    k = 1
    while True:
        term = (term * p).truncate(order) * Fraction(1, k)
        if term.is_zero:
            break
        result = result + term
        k += 1
    return result


def wheel_log(u: WheelPolynomial, order: int) -> WheelPolynomial:
    """log of a wheel polynomial with constant term 1, truncated by total degree."""
    if u.constant_term() != 1:
        raise DomainError("wheel log needs constant term 1")
    q = (u - 1).truncate(order)
    result = WheelPolynomial.zero()
    power = WheelPolynomial.one()
    k = 1
    while True:
        power = (power * q).truncate(order)
        if power.is_zero:
            break
        result = result + power * Fraction((-1) ** (k + 1), k)
        k += 1
    return result


def w_nabla(w: Union[WheelSeries, WheelPolynomial], order: int) -> HSeries:
    """The multiplicative weight system w2n -> -2*h^(2n), as an h-series.

    On a WheelSeries the image is exp(sum a_2n * (-2 h^(2n))); on a
    WheelPolynomial each monomial maps to the product of its wheel images.
    """
    if isinstance(w, WheelSeries):
        cs = [Fraction(0)] * (order + 1)
        for k, a in w.coefficients.items():
            if k <= order:
                cs[k] = -2 * a
        return HSeries(cs, order).exp()
    if isinstance(w, WheelPolynomial):
        cs = [Fraction(0)] * (order + 1)
        for term, c in w.items():
            deg = sum(term)
            if deg <= order:
                cs[deg] += c * Fraction(-2) ** len(term)
        return HSeries(cs, order)
    raise TypeError(f"expected WheelSeries or WheelPolynomial, got {type(w).__name__}")


def wheels_from_series(f: HSeries) -> WheelSeries:
    """Invert w_nabla on exponentials: a_2n = -(1/2) * [h^(2n)] log f.

    DomainError when f has constant term != 1 or log f has odd-order terms
    (which no wheel series can produce).
    """
    if f.coeff(0) != 1:
        raise DomainError("series must have constant term 1")
    lg = f.log()
    odd = next((m for m in range(1, lg.order + 1, 2) if lg.coeff(m) != 0), None)
    if odd is not None:
        raise DomainError(
            f"log of the series has a nonzero term at odd order {odd}; "
            "no even wheel series maps onto it"
        )
    return WheelSeries(
        {m: -lg.coeff(m) / 2 for m in range(2, lg.order + 1, 2) if lg.coeff(m) != 0}
    )


def rescale_degree(w: WheelSeries, r: Scalar) -> WheelSeries:
    """Multiply degree-2n data by r^(2n); used to pass between normalizations
    that differ by powers of the homology order per degree."""
    r = Fraction(r)
    if r <= 0:
        raise DomainError("rescale factor must be positive")
    return WheelSeries({k: a * r ** k for k, a in w.coefficients.items()})
