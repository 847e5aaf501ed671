"""Integer Laurent polynomials in one variable ``t``."""

from __future__ import annotations

from typing import Mapping


class LaurentPolynomial:
    """Immutable element of Z[t, t^-1], stored as {exponent: coefficient}.

    Zero coefficients are never stored. Integers mix in freely, so
    ``1 - T + T**2`` works with ``T = LaurentPolynomial.t()``.
    """

    __slots__ = ("_c",)

    def __init__(self, coeffs: Mapping[int, int] | int = 0):
        if isinstance(coeffs, int):
            coeffs = {0: coeffs}
        self._c = {int(e): int(c) for e, c in coeffs.items() if c}

    @classmethod
    def t(cls) -> LaurentPolynomial:
        return cls({1: 1})

    @classmethod
    def monomial(cls, exp: int, coeff: int = 1) -> LaurentPolynomial:
        return cls({exp: coeff})

    @classmethod
    def from_list(cls, coeffs, lowest: int = 0) -> LaurentPolynomial:
        """``from_list([a0, a1, ...], lowest=k)`` is a0 t^k + a1 t^(k+1) + ..."""
        return cls({lowest + i: c for i, c in enumerate(coeffs)})

    @property
    def coeffs(self) -> dict[int, int]:
        return dict(self._c)

    def is_zero(self) -> bool:
        return not self._c

    @property
    def max_degree(self) -> int:
        return max(self._c) if self._c else 0

    @property
    def min_degree(self) -> int:
        return min(self._c) if self._c else 0

    @property
    def span(self) -> int:
        return self.max_degree - self.min_degree

    def to_list(self) -> list[int]:
        """Dense coefficients from ``min_degree`` up to ``max_degree``."""
        if not self._c:
            return []
        lo = self.min_degree
        return [self._c.get(lo + i, 0) for i in range(self.span + 1)]

    def shift(self, k: int) -> LaurentPolynomial:
        return LaurentPolynomial({e + k: c for e, c in self._c.items()})

    def __call__(self, x):
        total = 0
        for e, c in self._c.items():
            total += c * (x ** e)
        return total

    # -- ring operations

    @staticmethod
    def _lift(other) -> LaurentPolynomial | None:
        if isinstance(other, LaurentPolynomial):
            return other
        if isinstance(other, int):
            return LaurentPolynomial(other)
        return None

    def __add__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        out = dict(self._c)
        for e, c in o._c.items():
            out[e] = out.get(e, 0) + c
        return LaurentPolynomial(out)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPolynomial({e: -c for e, c in self._c.items()})

    def __sub__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        out: dict[int, int] = {}
        for e1, c1 in self._c.items():
            for e2, c2 in o._c.items():
                out[e1 + e2] = out.get(e1 + e2, 0) + c1 * c2
        return LaurentPolynomial(out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            if len(self._c) != 1 or abs(next(iter(self._c.values()))) != 1:
                raise ValueError("only unit monomials have inverses")
            (e, c), = self._c.items()
            return LaurentPolynomial({e * k: 1 if k % 2 == 0 else c})
        out = LaurentPolynomial(1)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def divide_exact(self, other) -> LaurentPolynomial:
        """Quotient ``self / other``; raises ``ArithmeticError`` unless it lies in Z[t, t^-1]."""
        o = self._lift(other)
        if o is None or o.is_zero():
            raise ZeroDivisionError("division by zero Laurent polynomial")
        if self.is_zero():
            return LaurentPolynomial()
        num = self.to_list()
        den = o.to_list()
        lead = den[-1]
        q = [0] * max(len(num) - len(den) + 1, 0)
        rem = num[:]
        for i in range(len(q) - 1, -1, -1):
            top = rem[i + len(den) - 1]
            if top % lead:
                raise ArithmeticError(f"{self} is not divisible by {o}")
            q[i] = top // lead
            if q[i]:
                for j, d in enumerate(den):
                    rem[i + j] -= q[i] * d
        if any(rem) or not q:
            raise ArithmeticError(f"{self} is not divisible by {o}")
        return LaurentPolynomial.from_list(q, self.min_degree - o.min_degree)

    def __eq__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return self._c == o._c

    def __hash__(self):
        return hash(frozenset(self._c.items()))

    # -- normalization

    def is_symmetric(self) -> bool:
        return all(self._c.get(-e) == c for e, c in self._c.items())

    def normalized(self) -> LaurentPolynomial:
        """Center the exponents around 0 and fix the overall sign.

        The sign makes the value at t = 1 positive, or the top coefficient
        when that value is 0. Odd spans cannot be centred; the lowest
        exponent then becomes ``-(span // 2)``.
        """
        if self.is_zero():
            return self
        p = self.shift(-self.min_degree - self.span // 2)
        at_one = sum(p._c.values())
        sign = at_one if at_one else p._c[p.max_degree]
        return -p if sign < 0 else p

    def __repr__(self):
        return f"LaurentPolynomial({self._c!r})"

    def __str__(self):
        if not self._c:
            return "0"
        out = []
        for e in sorted(self._c, reverse=True):
            c = self._c[e]
            mag = abs(c)
            if e == 0:
                body = str(mag)
            else:
                var = "t" if e == 1 else f"t^{e}"
                body = var if mag == 1 else f"{mag}*{var}"
            if not out:
                out.append(body if c > 0 else f"-{body}")
            else:
                out.append(("+ " if c > 0 else "- ") + body)
        return " ".join(out)
