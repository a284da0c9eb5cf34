"""Sparse multivariate polynomials with exact integer coefficients.

Coefficient ring for the truncated q-series: monomials in the auxiliary
symbols (a, b, z, alpha) map to Python integers.  A monomial is a tuple of
(symbol, exponent) pairs sorted by symbol, exponents positive; the empty
tuple is the constant monomial.  Zero coefficients are never stored.
"""

from __future__ import annotations

Monomial = tuple[tuple[str, int], ...]

CONST: Monomial = ()


def mono_mul(m1: Monomial, m2: Monomial) -> Monomial:
    if not m1:
        return m2
    if not m2:
        return m1
    d = dict(m1)
    for s, e in m2:
        d[s] = d.get(s, 0) + e
    return tuple(sorted(d.items()))


def mono_text(m: Monomial) -> str:
    return "*".join(s if e == 1 else f"{s}^{e}" for s, e in m)


class Poly:
    """Immutable-by-convention sparse polynomial; terms maps Monomial -> int."""

    __slots__ = ("terms",)

    def __init__(self, terms: dict[Monomial, int] | None = None):
        self.terms: dict[Monomial, int] = {}
        if terms:
            for m, c in terms.items():
                if c:
                    self.terms[m] = c

    @classmethod
    def const(cls, c: int) -> "Poly":
        return cls({CONST: c})

    @classmethod
    def symbol(cls, name: str, exp: int = 1, coeff: int = 1) -> "Poly":
        if exp < 0:
            raise ValueError("negative exponent")
        return cls({(((name, exp),) if exp else CONST): coeff})

    @staticmethod
    def wrap(value: "Poly | int") -> "Poly":
        return value if isinstance(value, Poly) else Poly.const(value)

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int):
            other = Poly.const(other)
        if not isinstance(other, Poly):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):  # dict-backed, mutable in principle
        raise TypeError("Poly is not hashable")

    def __add__(self, other: "Poly | int") -> "Poly":
        other = Poly.wrap(other)
        out = dict(self.terms)
        for m, c in other.terms.items():
            s = out.get(m, 0) + c
            if s:
                out[m] = s
            else:
                out.pop(m, None)
        return Poly(out)

    __radd__ = __add__

    def __neg__(self) -> "Poly":
        return Poly({m: -c for m, c in self.terms.items()})

    def __sub__(self, other: "Poly | int") -> "Poly":
        return self + (-Poly.wrap(other))

    def __mul__(self, other: "Poly | int") -> "Poly":
        other = Poly.wrap(other)
        out: dict[Monomial, int] = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = mono_mul(m1, m2)
                s = out.get(m, 0) + c1 * c2
                if s:
                    out[m] = s
                else:
                    del out[m]
        return Poly(out)

    __rmul__ = __mul__

    def constant_value(self) -> int | None:
        """The integer value if the polynomial is constant, else None."""
        if not self.terms:
            return 0
        if len(self.terms) == 1 and CONST in self.terms:
            return self.terms[CONST]
        return None

    def coeff_sum(self) -> int:
        """Value at all symbols = 1 (sum of integer coefficients)."""
        return sum(self.terms.values())

    def degree_of(self, name: str) -> int:
        deg = 0
        for m in self.terms:
            for s, e in m:
                if s == name and e > deg:
                    deg = e
        return deg

    def clipped(self, caps: dict[str, int]) -> "Poly":
        """Drop monomials whose degree in any capped symbol exceeds its cap."""
        out = {}
        for m, c in self.terms.items():
            if all(e <= caps.get(s, e) for s, e in m):
                out[m] = c
        return Poly(out)

    def __repr__(self) -> str:
        if not self.terms:
            return "Poly(0)"
        bits = []
        for m, c in sorted(self.terms.items()):
            t = mono_text(m)
            bits.append(f"{c}*{t}" if t else str(c))
        return "Poly(" + " + ".join(bits) + ")"
