"""Exact coefficient arithmetic.

Three coefficient fields, all exact (no floating point anywhere):

* Q               -- stdlib ``fractions.Fraction``
* Q(xi_n)         -- ``Cyclotomic``: the cyclotomic field of order n, elements
                     reduced modulo the n-th cyclotomic polynomial
* Q(rho)          -- ``RatFunc``: rational functions in one indeterminate rho

plus the specialization maps that send a rational function to its exact value
(a limit, when the naive substitution is 0/0) at rho = xi_n or at a rational
point.  ``RhoSpec`` bundles the choice of specialization with its field.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import gcd
from typing import Optional, Union

RHO_SYMBOL = "ρ"  # the indeterminate of Q(rho) in canonical text


class FieldMismatchError(TypeError):
    """Raised when values of two different coefficient fields are combined."""


class PoleError(ArithmeticError):
    """Raised when a rational function is specialized at a pole."""


def _fr(x: Union[int, Fraction]) -> Fraction:
    return x if isinstance(x, Fraction) else Fraction(x)


# ---------------------------------------------------------------------------
# univariate polynomials over Q


class UniPoly:
    """Dense univariate polynomial over Q, indexed by power.

    Internally an integer coefficient vector with one common positive
    denominator, content-reduced; the public face is Fraction coefficients.
    Immutable and hashable.
    """

    __slots__ = ("_num", "_den")

    def __init__(self, num: tuple[int, ...], den: int):
        # assumes normalized input; use the constructors below
        self._num = num
        self._den = den

    @staticmethod
    def _make(num: list[int], den: int) -> "UniPoly":
        if den == 0:
            raise ZeroDivisionError("polynomial with zero denominator")
        while num and num[-1] == 0:
            num.pop()
        if not num:
            return _UP_ZERO if _UP_ZERO is not None else UniPoly((), 1)
        g = 0
        for c in num:
            g = gcd(g, c)
        g = gcd(g, den)
        if den < 0:
            g = -g
        if g != 1:
            num = [c // g for c in num]
            den //= g
        return UniPoly(tuple(num), den)

    @staticmethod
    def from_ints(coeffs, den: int = 1) -> "UniPoly":
        return UniPoly._make(list(coeffs), den)

    @staticmethod
    def from_fractions(coeffs) -> "UniPoly":
        coeffs = [_fr(c) for c in coeffs]
        den = 1
        for c in coeffs:
            den = den * c.denominator // gcd(den, c.denominator)
        return UniPoly._make([int(c * den) for c in coeffs], den)

    @staticmethod
    def constant(c: Union[int, Fraction]) -> "UniPoly":
        c = _fr(c)
        return UniPoly._make([c.numerator], c.denominator)

    @staticmethod
    def x_pow(e: int, c: Union[int, Fraction] = 1) -> "UniPoly":
        c = _fr(c)
        return UniPoly._make([0] * e + [c.numerator], c.denominator)

    # -- queries

    def is_zero(self) -> bool:
        return not self._num

    def is_one(self) -> bool:
        return self._num == (1,) and self._den == 1

    def __bool__(self) -> bool:
        return bool(self._num)

    @property
    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return len(self._num) - 1

    def coefficient(self, i: int) -> Fraction:
        if 0 <= i < len(self._num):
            return Fraction(self._num[i], self._den)
        return Fraction(0)

    @property
    def coefficients(self) -> tuple[Fraction, ...]:
        return tuple(Fraction(c, self._den) for c in self._num)

    def leading(self) -> Fraction:
        if not self._num:
            return Fraction(0)
        return Fraction(self._num[-1], self._den)

    def is_constant(self) -> bool:
        return len(self._num) <= 1

    def evaluate(self, x: Fraction) -> Fraction:
        acc = Fraction(0)
        for c in reversed(self._num):
            acc = acc * x + c
        return acc / self._den

    # -- arithmetic

    def __add__(self, other):
        other = _as_unipoly(other)
        if other is NotImplemented:
            return NotImplemented
        a, b = self, other
        if a._den == b._den:
            n = [x + y for x, y in zip(a._num, b._num)]
            longer = a._num if len(a._num) > len(b._num) else b._num
            n.extend(longer[len(n):])
            return UniPoly._make(n, a._den)
        L = a._den * b._den // gcd(a._den, b._den)
        fa, fb = L // a._den, L // b._den
        n = [x * fa for x in a._num]
        m = [y * fb for y in b._num]
        if len(n) < len(m):
            n, m = m, n
        for i, y in enumerate(m):
            n[i] += y
        return UniPoly._make(n, L)

    __radd__ = __add__

    def __neg__(self):
        return UniPoly(tuple(-c for c in self._num), self._den)

    def __sub__(self, other):
        other = _as_unipoly(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = _as_unipoly(other)
        if other is NotImplemented:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        other = _as_unipoly(other)
        if other is NotImplemented:
            return NotImplemented
        a, b = self._num, other._num
        if not a or not b:
            return _UP_ZERO
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    out[i + j] += x * y
        return UniPoly._make(out, self._den * other._den)

    __rmul__ = __mul__

    def __divmod__(self, other: "UniPoly"):
        other = _as_unipoly(other)
        if other is NotImplemented:
            return NotImplemented
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coefficients)
        div = other.coefficients
        dd = other.degree
        lead = div[-1]
        q = [Fraction(0)] * max(len(rem) - dd, 0)
        while len(rem) - 1 >= dd and any(rem):
            while rem and rem[-1] == 0:
                rem.pop()
            if len(rem) - 1 < dd:
                break
            k = len(rem) - 1 - dd
            c = rem[-1] / lead
            q[k] = c
            for i in range(dd + 1):
                rem[k + i] -= c * div[i]
            rem.pop()
        return UniPoly.from_fractions(q), UniPoly.from_fractions(rem)

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def divexact(self, other: "UniPoly") -> "UniPoly":
        q, r = divmod(self, other)
        if not r.is_zero():
            raise ValueError("inexact polynomial division")
        return q

    def monic(self) -> "UniPoly":
        if self.is_zero():
            return self
        lead = self.leading()
        if lead == 1:
            return self
        return self * UniPoly.constant(1 / lead)

    def gcd(self, other: "UniPoly") -> "UniPoly":
        a, b = self, other
        while not b.is_zero():
            a, b = b, a % b
        return a.monic() if not a.is_zero() else a

    def xgcd(self, other: "UniPoly"):
        """Extended Euclid: returns (g, s, t) with s*self + t*other = g, g monic."""
        r0, r1 = self, other
        s0, s1 = _UP_ONE, _UP_ZERO
        t0, t1 = _UP_ZERO, _UP_ONE
        while not r1.is_zero():
            q, r = divmod(r0, r1)
            r0, r1 = r1, r
            s0, s1 = s1, s0 - q * s1
            t0, t1 = t1, t0 - q * t1
        if r0.is_zero():
            return r0, s0, t0
        scale = UniPoly.constant(1 / r0.leading())
        return r0 * scale, s0 * scale, t0 * scale

    def __pow__(self, e: int):
        if e < 0:
            raise ValueError("negative power of a polynomial")
        out = _UP_ONE
        base = self
        while e:
            if e & 1:
                out = out * base
            base = base * base
            e >>= 1
        return out

    # -- identity

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = UniPoly.constant(other)
        if not isinstance(other, UniPoly):
            return NotImplemented
        return self._num == other._num and self._den == other._den

    def __hash__(self):
        return hash((self._num, self._den))

    def __repr__(self):
        return f"UniPoly({self.to_text()})"

    # -- text (descending powers, canonical)

    def to_text(self, symbol: str = RHO_SYMBOL) -> str:
        if self.is_zero():
            return "0"
        parts = []
        for i in range(self.degree, -1, -1):
            c = self.coefficient(i)
            if c == 0:
                continue
            parts.append((c, i))
        out = []
        for idx, (c, i) in enumerate(parts):
            neg = c < 0
            mag = -c if neg else c
            if i == 0:
                body = str(mag)
            else:
                xs = symbol if i == 1 else f"{symbol}^{i}"
                body = xs if mag == 1 else f"{mag}*{xs}"
            if idx == 0:
                out.append(f"-{body}" if neg else body)
            else:
                out.append(f" - {body}" if neg else f" + {body}")
        return "".join(out)

    @staticmethod
    def parse(text: str, symbol: str = RHO_SYMBOL) -> "UniPoly":
        terms = _split_signed_terms(text)
        acc = _UP_ZERO
        for sign, tok in terms:
            coeff, power = _parse_power_term(tok, symbol)
            acc = acc + UniPoly.x_pow(power, sign * coeff)
        return acc

    def shift_mul_x(self, e: int) -> "UniPoly":
        if self.is_zero() or e == 0:
            return self
        return UniPoly((0,) * e + self._num, self._den)


def _as_unipoly(x):
    if isinstance(x, UniPoly):
        return x
    if isinstance(x, (int, Fraction)):
        return UniPoly.constant(x)
    if isinstance(x, (Cyclotomic, RatFunc)):
        raise FieldMismatchError("cannot mix UniPoly with other field values")
    return NotImplemented


_UP_ZERO: Optional[UniPoly] = None
_UP_ZERO = UniPoly((), 1)
_UP_ONE = UniPoly((1,), 1)
UNIPOLY_X = UniPoly((0, 1), 1)


def _split_signed_terms(text: str) -> list[tuple[int, str]]:
    text = text.strip()
    if not text:
        raise ValueError("empty expression")
    out = []
    # terms are joined canonically by " + " / " - "
    pieces = re.split(r" ([+-]) ", text)
    first = pieces[0]
    sign = 1
    if first.startswith("-"):
        sign, first = -1, first[1:]
    out.append((sign, first.strip()))
    for i in range(1, len(pieces), 2):
        s = 1 if pieces[i] == "+" else -1
        out.append((s, pieces[i + 1].strip()))
    return out


def _parse_power_term(tok: str, symbol: str) -> tuple[Fraction, int]:
    if "*" in tok:
        c_txt, p_txt = tok.split("*", 1)
        coeff = Fraction(c_txt)
    else:
        c_txt, p_txt = None, tok
        coeff = Fraction(1)
    if p_txt == symbol:
        return coeff, 1
    if p_txt.startswith(symbol + "^"):
        return coeff, int(p_txt[len(symbol) + 1:])
    if c_txt is None:
        return Fraction(p_txt), 0
    raise ValueError(f"cannot parse term {tok!r}")


# ---------------------------------------------------------------------------
# cyclotomic polynomials and fields


@lru_cache(maxsize=None)
def euler_phi(n: int) -> int:
    if n < 1:
        raise ValueError("euler_phi needs n >= 1")
    out = n
    m = n
    p = 2
    while p * p <= m:
        if m % p == 0:
            out -= out // p
            while m % p == 0:
                m //= p
        p += 1
    if m > 1:
        out -= out // m
    return out


@lru_cache(maxsize=None)
def cyclotomic_poly(n: int) -> UniPoly:
    """The n-th cyclotomic polynomial, by exact division of x^n - 1."""
    if n < 1:
        raise ValueError("cyclotomic_poly needs n >= 1")
    num = UniPoly.from_ints([-1] + [0] * (n - 1) + [1])
    for d in range(1, n):
        if n % d == 0:
            num = num.divexact(cyclotomic_poly(d))
    return num


@lru_cache(maxsize=None)
def _cyclo_tables(n: int):
    phi = euler_phi(n)
    Phi = cyclotomic_poly(n)
    # x^phi = -(Phi - x^phi) since Phi is monic of degree phi
    base = tuple(-Phi.coefficient(i) for i in range(phi))
    return phi, Phi, base


class Cyclotomic:
    """An element of Q(xi_n), coordinates in the power basis 1, z, ..., z^(phi-1)."""

    __slots__ = ("order", "coords")

    def __init__(self, order: int, coords: tuple[Fraction, ...]):
        self.order = order
        self.coords = coords

    @staticmethod
    def make(order: int, coords) -> "Cyclotomic":
        phi = euler_phi(order)
        cs = [_fr(c) for c in coords]
        if len(cs) < phi:
            cs.extend([Fraction(0)] * (phi - len(cs)))
        elif len(cs) > phi:
            cs = Cyclotomic._reduce(order, cs)
        return Cyclotomic(order, tuple(cs))

    @staticmethod
    def _reduce(order: int, cs: list[Fraction]) -> list[Fraction]:
        phi, _, base = _cyclo_tables(order)
        cs = list(cs) + [Fraction(0)] * max(0, phi - len(cs))
        for j in range(len(cs) - 1, phi - 1, -1):
            c = cs[j]
            if c:
                lo = j - phi
                for i in range(phi):
                    if base[i]:
                        cs[lo + i] += c * base[i]
        return cs[:phi]

    @staticmethod
    def constant(order: int, c: Union[int, Fraction]) -> "Cyclotomic":
        phi = euler_phi(order)
        return Cyclotomic(order, (_fr(c),) + (Fraction(0),) * (phi - 1))

    @staticmethod
    def generator(order: int) -> "Cyclotomic":
        """xi_n = z mod Phi_n."""
        return Cyclotomic.make(order, [Fraction(0), Fraction(1)])

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coords)

    def __bool__(self) -> bool:
        return not self.is_zero()

    def is_rational(self) -> bool:
        return all(c == 0 for c in self.coords[1:])

    def rational_value(self) -> Fraction:
        if not self.is_rational():
            raise ValueError("not a rational element")
        return self.coords[0]

    def _coerce(self, other):
        if isinstance(other, (int, Fraction)):
            return Cyclotomic.constant(self.order, other)
        if isinstance(other, Cyclotomic):
            if other.order != self.order:
                raise FieldMismatchError(
                    f"cyclotomic orders differ: {self.order} vs {other.order}")
            return other
        if isinstance(other, (UniPoly, RatFunc)):
            raise FieldMismatchError("cannot mix cyclotomic and rational-function values")
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return Cyclotomic(self.order, tuple(a + b for a, b in zip(self.coords, o.coords)))

    __radd__ = __add__

    def __neg__(self):
        return Cyclotomic(self.order, tuple(-a for a in self.coords))

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return Cyclotomic(self.order, tuple(a - b for a, b in zip(self.coords, o.coords)))

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o - self

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        a, b = self.coords, o.coords
        phi = len(a)
        conv = [Fraction(0)] * (2 * phi - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    if y:
                        conv[i + j] += x * y
        return Cyclotomic(self.order, tuple(Cyclotomic._reduce(self.order, conv)))

    __rmul__ = __mul__

    def inverse(self) -> "Cyclotomic":
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero cyclotomic element")
        phi, Phi, _ = _cyclo_tables(self.order)
        a = UniPoly.from_fractions(self.coords)
        g, s, _ = a.xgcd(Phi)
        if g.degree != 0:
            raise ZeroDivisionError("element not invertible (unexpected)")
        inv = s * UniPoly.constant(1 / g.coefficient(0))
        rem = inv % Phi
        return Cyclotomic.make(self.order, list(rem.coefficients))

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def __pow__(self, e: int):
        if e < 0:
            return self.inverse() ** (-e)
        out = Cyclotomic.constant(self.order, 1)
        base = self
        while e:
            if e & 1:
                out = out * base
            base = base * base
            e >>= 1
        return out

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.is_rational() and self.coords[0] == other
        if not isinstance(other, Cyclotomic):
            return NotImplemented
        return self.order == other.order and self.coords == other.coords

    def __hash__(self):
        return hash((self.order, self.coords))

    def __repr__(self):
        return f"Cyclotomic({self.order}, {self.to_text()})"

    def to_text(self) -> str:
        if self.is_zero():
            return "0"
        out = []
        for k, c in enumerate(self.coords):
            if c == 0:
                continue
            neg = c < 0
            mag = -c if neg else c
            if k == 0:
                body = str(mag)
            else:
                zs = "z" if k == 1 else f"z^{k}"
                body = f"{mag}*{zs}"
            if not out:
                out.append(f"-{body}" if neg else body)
            else:
                out.append(f" - {body}" if neg else f" + {body}")
        return "".join(out)

    @staticmethod
    def parse(order: int, text: str) -> "Cyclotomic":
        text = text.strip()
        if text == "0":
            return Cyclotomic.constant(order, 0)
        coords: dict[int, Fraction] = {}
        for sign, tok in _split_signed_terms(text):
            coeff, power = _parse_power_term(tok, "z")
            coords[power] = coords.get(power, Fraction(0)) + sign * coeff
        size = max(coords) + 1 if coords else 1
        return Cyclotomic.make(order, [coords.get(i, Fraction(0)) for i in range(size)])


# ---------------------------------------------------------------------------
# rational functions


class RatFunc:
    """A rational function num/den over Q, gcd-reduced with monic denominator."""

    __slots__ = ("num", "den")

    def __init__(self, num: UniPoly, den: UniPoly):
        # assumes already normalized; use make()
        self.num = num
        self.den = den

    @staticmethod
    def make(num: UniPoly, den: UniPoly) -> "RatFunc":
        if den.is_zero():
            raise ZeroDivisionError("rational function with zero denominator")
        if num.is_zero():
            return RatFunc(_UP_ZERO, _UP_ONE)
        if den.is_one():
            return RatFunc(num, den)
        g = num.gcd(den)
        if g.degree > 0:
            num = num.divexact(g)
            den = den.divexact(g)
        lead = den.leading()
        if lead != 1:
            inv = UniPoly.constant(1 / lead)
            num = num * inv
            den = den * inv
        return RatFunc(num, den)

    @staticmethod
    def from_poly(p: UniPoly) -> "RatFunc":
        return RatFunc(p, _UP_ONE)

    @staticmethod
    def constant(c: Union[int, Fraction]) -> "RatFunc":
        return RatFunc(UniPoly.constant(c), _UP_ONE)

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def __bool__(self) -> bool:
        return not self.num.is_zero()

    def is_constant(self) -> bool:
        return self.den.is_one() and self.num.is_constant()

    def rational_value(self) -> Fraction:
        if not self.is_constant():
            raise ValueError("not a constant rational function")
        return self.num.coefficient(0)

    def _coerce(self, other):
        if isinstance(other, (int, Fraction)):
            return RatFunc.constant(other)
        if isinstance(other, UniPoly):
            return RatFunc.from_poly(other)
        if isinstance(other, RatFunc):
            return other
        if isinstance(other, Cyclotomic):
            raise FieldMismatchError("cannot mix rational-function and cyclotomic values")
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if self.den.is_one() and o.den.is_one():
            return RatFunc(self.num + o.num, _UP_ONE)
        return RatFunc.make(self.num * o.den + o.num * self.den, self.den * o.den)

    __radd__ = __add__

    def __neg__(self):
        return RatFunc(-self.num, self.den)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if self.den.is_one() and o.den.is_one():
            return RatFunc(self.num * o.num, _UP_ONE)
        return RatFunc.make(self.num * o.num, self.den * o.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if o.is_zero():
            raise ZeroDivisionError("division by zero rational function")
        return RatFunc.make(self.num * o.den, self.den * o.num)

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o / self

    def __pow__(self, e: int):
        if e < 0:
            return (RatFunc.constant(1) / self) ** (-e)
        return RatFunc.make(self.num ** e, self.den ** e)

    def __eq__(self, other):
        if isinstance(other, (int, Fraction, UniPoly)):
            other = self._coerce(other)
        if not isinstance(other, RatFunc):
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        return hash((self.num, self.den))

    def __repr__(self):
        return f"RatFunc({self.to_text()})"

    def to_text(self) -> str:
        if self.is_zero():
            return "0"
        if self.is_constant():
            return str(self.num.coefficient(0))
        if self.den.is_one():
            return f"({self.num.to_text()})"
        return f"({self.num.to_text()})/({self.den.to_text()})"

    @staticmethod
    def parse(text: str) -> "RatFunc":
        text = text.strip()
        if not text.startswith("("):
            return RatFunc.constant(Fraction(text))
        if ")/(" in text:
            n_txt, d_txt = text.split(")/(", 1)
            num = UniPoly.parse(n_txt[1:])
            den = UniPoly.parse(d_txt[:-1])
            return RatFunc.make(num, den)
        return RatFunc.from_poly(UniPoly.parse(text[1:-1]))


RATFUNC_RHO = RatFunc.from_poly(UNIPOLY_X)


# ---------------------------------------------------------------------------
# specialization


def _as_ratfunc(f: Union[RatFunc, UniPoly]) -> RatFunc:
    if isinstance(f, UniPoly):
        return RatFunc.from_poly(f)
    return f


def specialize_at_root(f: Union[RatFunc, UniPoly], n: int) -> Cyclotomic:
    """Exact value (limit) of f at rho = xi_n; PoleError if infinite."""
    f = _as_ratfunc(f)
    Phi = cyclotomic_poly(n)
    num, den = f.num, f.den
    while True:
        nq, nr = divmod(num, Phi)
        dq, dr = divmod(den, Phi)
        if dr.is_zero():
            if nr.is_zero():
                num, den = nq, dq  # common factor Phi_n: cancel and retry
                continue
            raise PoleError(f"pole at xi_{n}")
        a = Cyclotomic.make(n, list(nr.coefficients))
        b = Cyclotomic.make(n, list(dr.coefficients))
        return a / b


def specialize_at_rational(f: Union[RatFunc, UniPoly], r: Union[int, Fraction]) -> Fraction:
    """Exact value (limit) of f at rho = r; PoleError if infinite."""
    f = _as_ratfunc(f)
    r = _fr(r)
    num, den = f.num, f.den
    linear = UniPoly.from_fractions([-r, Fraction(1)])
    while True:
        dv = den.evaluate(r)
        nv = num.evaluate(r)
        if dv != 0:
            return nv / dv
        if nv != 0:
            raise PoleError(f"pole at rho = {r}")
        num = num.divexact(linear)
        den = den.divexact(linear)


# ---------------------------------------------------------------------------
# coefficient fields (tags shared by polynomials, operators, combinations)


class RationalField:
    """Plain Q with Fraction values."""

    kind = "rational"
    key = ("Q",)
    name = "Q"

    zero = Fraction(0)
    one = Fraction(1)

    @staticmethod
    def from_fraction(c: Union[int, Fraction]) -> Fraction:
        return _fr(c)

    @staticmethod
    def value_text(v: Fraction) -> str:
        return str(v)

    @staticmethod
    def factor_text(v: Fraction) -> str:
        return str(v)

    @staticmethod
    def split_sign(v: Fraction):
        if v < 0:
            return -1, -v
        return 1, v

    @staticmethod
    def parse(text: str) -> Fraction:
        return Fraction(text)

    def __repr__(self):
        return "QQ"


class CyclotomicFieldTag:
    """Q(xi_n) with Cyclotomic values."""

    kind = "cyclotomic"

    def __init__(self, order: int):
        self.order = order
        self.key = ("Qxi", order)
        self.name = f"Q(xi_{order})"
        self.zero = Cyclotomic.constant(order, 0)
        self.one = Cyclotomic.constant(order, 1)

    def from_fraction(self, c: Union[int, Fraction]) -> Cyclotomic:
        return Cyclotomic.constant(self.order, c)

    @staticmethod
    def value_text(v: Cyclotomic) -> str:
        return v.to_text()

    @staticmethod
    def factor_text(v: Cyclotomic) -> str:
        if v.is_rational():
            return str(v.coords[0])
        return f"({v.to_text()})"

    @staticmethod
    def split_sign(v: Cyclotomic):
        if v.is_rational() and v.coords[0] < 0:
            return -1, -v
        return 1, v

    def parse(self, text: str) -> Cyclotomic:
        return Cyclotomic.parse(self.order, text)

    def __repr__(self):
        return f"QQxi({self.order})"


class GenericField:
    """Q(rho) with RatFunc values."""

    kind = "generic"
    key = ("Qrho",)
    name = "Q(rho)"

    zero = RatFunc.constant(0)
    one = RatFunc.constant(1)

    @staticmethod
    def from_fraction(c: Union[int, Fraction]) -> RatFunc:
        return RatFunc.constant(c)

    @staticmethod
    def value_text(v: RatFunc) -> str:
        return v.to_text()

    @staticmethod
    def factor_text(v: RatFunc) -> str:
        return v.to_text()

    @staticmethod
    def split_sign(v: RatFunc):
        if v.is_constant() and v.num.coefficient(0) < 0:
            return -1, -v
        return 1, v

    @staticmethod
    def parse(text: str) -> RatFunc:
        return RatFunc.parse(text)

    def __repr__(self):
        return "QQrho"


QQ = RationalField()
GENERIC = GenericField()


@lru_cache(maxsize=None)
def cyclotomic_field(n: int) -> CyclotomicFieldTag:
    return CyclotomicFieldTag(n)


# ---------------------------------------------------------------------------
# rho specification


@dataclass(frozen=True)
class RhoSpec:
    """Which rho we are working at: a rational value, a primitive root of
    unity xi_n, or the generic indeterminate."""

    kind: str  # "generic" | "rational" | "root"
    value: Optional[Fraction] = None
    order: Optional[int] = None

    @staticmethod
    def generic() -> "RhoSpec":
        return RhoSpec("generic")

    @staticmethod
    def rational(v: Union[int, Fraction]) -> "RhoSpec":
        return RhoSpec("rational", value=_fr(v))

    @staticmethod
    def root(n: int) -> "RhoSpec":
        if n < 2:
            raise ValueError("root of unity order must be >= 2")
        return RhoSpec("root", order=n)

    @staticmethod
    def parse(text: str) -> "RhoSpec":
        text = text.strip()
        if text == "generic":
            return RhoSpec.generic()
        if text.startswith("xi:"):
            return RhoSpec.root(int(text[3:]))
        return RhoSpec.rational(Fraction(text))

    @property
    def field(self):
        if self.kind == "generic":
            return GENERIC
        if self.kind == "rational":
            return QQ
        return cyclotomic_field(self.order)

    @property
    def key(self):
        if self.kind == "generic":
            return ("g",)
        if self.kind == "rational":
            return ("q", self.value)
        return ("x", self.order)

    def rho(self):
        if self.kind == "generic":
            return RATFUNC_RHO
        if self.kind == "rational":
            return self.value
        return Cyclotomic.generator(self.order)

    def rho_pow(self, k: int):
        """rho^k as a field value (k may be negative where defined)."""
        if self.kind == "root":
            return Cyclotomic.generator(self.order) ** (k % self.order)
        if self.kind == "rational":
            if k < 0 and self.value == 0:
                raise ZeroDivisionError("negative power of rho = 0")
            return self.value ** k
        if k >= 0:
            return RatFunc.from_poly(UniPoly.x_pow(k))
        return RatFunc.make(_UP_ONE, UniPoly.x_pow(-k))

    def one_minus_rho_pow(self, k: int):
        return _one_minus_rho_pow(self, k)

    def specialize(self, f: RatFunc):
        """Send a generic-field value into this rho's field (exact limit)."""
        if self.kind == "generic":
            return f
        if self.kind == "rational":
            return specialize_at_rational(f, self.value)
        return specialize_at_root(f, self.order)

    def to_text(self) -> str:
        if self.kind == "generic":
            return "generic"
        if self.kind == "rational":
            return str(self.value)
        return f"xi:{self.order}"


@lru_cache(maxsize=None)
def _one_minus_rho_pow(rho: RhoSpec, k: int):
    return rho.field.from_fraction(1) - rho.rho_pow(k)


RHO_GENERIC = RhoSpec.generic()
RHO_ZERO = RhoSpec.rational(0)
