"""Exact truncated power series in q and the four identity checks.

A TruncatedSeries keeps coefficients for q^0 .. q^N (N inclusive) as sparse
integer polynomials in the auxiliary symbols.  All arithmetic is exact; a
series may additionally carry per-symbol degree caps, in which case it lives
in the quotient ring with those symbol powers cut off as well.  Equality of
two sides of an identity in such a quotient follows from equality in the
full ring, so capping is sound for verification; it is required for the
two-parameter generalization whose inner sum contributes every power of z
already at q^0.

Identity builders (both sides built independently, then compared):

  lebesgue:  sum_k q^(k(k+1)/2) (-aq;q)_k / (q;q)_k
                 == (-aq^2;q^2)_inf (-q;q)_inf
  rv:        sum_m q^(m(m+1)/2) alpha^m (z;q)_m / (q;q)_m
                 == (z;q)_inf (-alpha*q;q)_inf
                    * sum_n z^n / ((q;q)_n (-alpha*q;q)_n)
  fu:        sum_n q^(n(n+1)/2) b^n (-aq;q)_n / (q;q)_n
                 == (-bq;q)_inf * sum_k (ab)^k q^(k(k+1)) / ((q;q)_k (-bq;q)_k)
  rowell:    sum_{n<=L} [L,n]_q (-aq;q)_n q^(n(n+1)/2)
                 == sum_{k<=L} [L,k]_{q^2} (-q;q)_{L-k} a^k q^(k(k+1))
"""

from __future__ import annotations

from dataclasses import dataclass

from .polynomial import CONST, Monomial, Poly, mono_text

DEFAULT_ORDER_CAP = 40

IDENTITY_NAMES = ("lebesgue", "rv", "fu", "rowell")

_A = Poly.symbol("a")
_B = Poly.symbol("b")
_Z = Poly.symbol("z")
_ALPHA = Poly.symbol("alpha")


class TruncatedSeries:
    """Formal power series in q kept exactly up to q^order (inclusive)."""

    __slots__ = ("order", "caps", "coeffs")

    def __init__(
        self,
        order: int,
        coeffs: dict[int, Poly] | None = None,
        caps: dict[str, int] | None = None,
    ):
        if order < 0:
            raise ValueError("truncation order must be non-negative")
        self.order = order
        self.caps = dict(caps) if caps else None
        self.coeffs: dict[int, Poly] = {}
        if coeffs:
            for e, p in coeffs.items():
                if 0 <= e <= order:
                    p = p.clipped(self.caps) if self.caps else p
                    if p:
                        self.coeffs[e] = p

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls, order: int, caps: dict[str, int] | None = None) -> "TruncatedSeries":
        return cls(order, None, caps)

    @classmethod
    def one(cls, order: int, caps: dict[str, int] | None = None) -> "TruncatedSeries":
        return cls(order, {0: Poly.const(1)}, caps)

    @classmethod
    def term(
        cls,
        coeff: Poly | int,
        q_exp: int,
        order: int,
        caps: dict[str, int] | None = None,
    ) -> "TruncatedSeries":
        """The single term coeff * q^q_exp (zero if q_exp exceeds the order)."""
        return cls(order, {q_exp: Poly.wrap(coeff)}, caps)

    # -- basics ------------------------------------------------------------

    def coefficient(self, e: int) -> Poly:
        return self.coeffs.get(e, Poly())

    def max_exponent(self) -> int | None:
        return max(self.coeffs) if self.coeffs else None

    def _check_compatible(self, other: "TruncatedSeries") -> None:
        if self.order != other.order:
            raise ValueError(
                f"mismatched truncation orders: {self.order} != {other.order}"
            )
        if self.caps != other.caps:
            raise ValueError(f"mismatched symbol caps: {self.caps} != {other.caps}")

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return (
            self.order == other.order
            and self.caps == other.caps
            and self.coeffs == other.coeffs
        )

    def __hash__(self):
        raise TypeError("TruncatedSeries is not hashable")

    # -- arithmetic ----------------------------------------------------------

    def __add__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        self._check_compatible(other)
        out = dict(self.coeffs)
        for e, p in other.coeffs.items():
            s = out.get(e)
            out[e] = p if s is None else s + p
        return TruncatedSeries(self.order, out, self.caps)

    def __neg__(self) -> "TruncatedSeries":
        return TruncatedSeries(self.order, {e: -p for e, p in self.coeffs.items()}, self.caps)

    def __sub__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        return self + (-other)

    def __mul__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        self._check_compatible(other)
        out: dict[int, Poly] = {}
        for e1, p1 in self.coeffs.items():
            for e2, p2 in other.coeffs.items():
                e = e1 + e2
                if e > self.order:
                    continue
                prod = p1 * p2
                s = out.get(e)
                out[e] = prod if s is None else s + prod
        return TruncatedSeries(self.order, out, self.caps)

    def scaled(self, coeff: Poly | int) -> "TruncatedSeries":
        c = Poly.wrap(coeff)
        return TruncatedSeries(
            self.order, {e: p * c for e, p in self.coeffs.items()}, self.caps
        )

    def shifted(self, q_exp: int) -> "TruncatedSeries":
        """Multiply by q^q_exp (terms pushed past the order fall off)."""
        return TruncatedSeries(
            self.order, {e + q_exp: p for e, p in self.coeffs.items()}, self.caps
        )

    def inverse(self) -> "TruncatedSeries":
        """Multiplicative inverse; requires constant term exactly 1 or -1."""
        c0 = self.coefficient(0).constant_value()
        if c0 not in (1, -1):
            raise ValueError(
                "series_inverse requires constant term 1 or -1, got "
                f"{self.coefficient(0)!r}"
            )
        inv: dict[int, Poly] = {0: Poly.const(c0)}
        for e in range(1, self.order + 1):
            acc = Poly()
            for j, p in self.coeffs.items():
                if 1 <= j <= e and (e - j) in inv:
                    acc = acc + p * inv[e - j]
            if acc:
                p = acc * (-c0)
                if self.caps:
                    p = p.clipped(self.caps)
                if p:
                    inv[e] = p
        return TruncatedSeries(self.order, inv, self.caps)

    # -- presentation --------------------------------------------------------

    def _flat_terms(self) -> list[tuple[int, Monomial, int]]:
        out = []
        for e in sorted(self.coeffs):
            for m, c in sorted(self.coeffs[e].terms.items()):
                out.append((e, m, c))
        return out

    def text(self) -> str:
        """Human form, terms sorted by q-exponent then monomial: "1 + q + a*q^2"."""
        terms = self._flat_terms()
        if not terms:
            return "0"
        rendered = []
        for e, m, c in terms:
            bits = []
            if abs(c) != 1 or (not m and e == 0):
                bits.append(str(abs(c)))
            mt = mono_text(m)
            if mt:
                bits.append(mt)
            if e == 1:
                bits.append("q")
            elif e > 1:
                bits.append(f"q^{e}")
            body = "*".join(bits) if bits else "1"
            rendered.append((c < 0, body))
        first_neg, first_body = rendered[0]
        s = ("-" if first_neg else "") + first_body
        for neg, body in rendered[1:]:
            s += (" - " if neg else " + ") + body
        return s

    __str__ = text

    def __repr__(self) -> str:
        return f"TruncatedSeries(order={self.order}, {self.text()})"

    def to_json_obj(self) -> dict:
        return {
            "order": self.order,
            "terms": [
                {"q": e, "monomial": {s: x for s, x in m}, "coeff": c}
                for e, m, c in self._flat_terms()
            ],
        }

    def first_difference(
        self, other: "TruncatedSeries"
    ) -> tuple[int, Monomial, int, int] | None:
        """Lowest (q-exponent, monomial) where the two series differ, or None."""
        self._check_compatible(other)
        for e in range(self.order + 1):
            p1, p2 = self.coefficient(e), other.coefficient(e)
            if p1 == p2:
                continue
            monos = sorted(set(p1.terms) | set(p2.terms))
            for m in monos:
                c1, c2 = p1.terms.get(m, 0), p2.terms.get(m, 0)
                if c1 != c2:
                    return (e, m, c1, c2)
        return None


def series_add(x: TruncatedSeries, y: TruncatedSeries) -> TruncatedSeries:
    return x + y


def series_mul(x: TruncatedSeries, y: TruncatedSeries) -> TruncatedSeries:
    return x * y


def series_inverse(x: TruncatedSeries) -> TruncatedSeries:
    return x.inverse()


def pochhammer(
    coeff: Poly | int,
    shift: int,
    order: int,
    *,
    step: int = 1,
    count: int | None = None,
    caps: dict[str, int] | None = None,
) -> TruncatedSeries:
    """Truncated product of (1 - coeff * q^(shift + k*step)) over k.

    count = None means the infinite product, which requires shift >= 1 so
    that factors beyond the truncation order are all 1; a finite count allows
    shift = 0 (e.g. the factor (1 - z) of (z;q)_m).
    """
    if step < 1:
        raise ValueError("step must be a positive integer")
    if count is None:
        if shift < 1:
            raise ValueError(
                "infinite product needs shift >= 1 (does not stabilize otherwise)"
            )
        count = max(0, (order - shift) // step + 1)
    elif count < 0:
        raise ValueError("count must be non-negative")

    c = Poly.wrap(coeff)
    out = TruncatedSeries.one(order, caps)
    for k in range(count):
        e = shift + k * step
        if e > order:
            break  # remaining factors are 1 modulo the truncation
        if e == 0:
            factor = TruncatedSeries(order, {0: Poly.const(1) - c}, caps)
        else:
            factor = TruncatedSeries(order, {0: Poly.const(1), e: -c}, caps)
        out = out * factor
    return out


def gaussian_binomial(
    L: int,
    n: int,
    order: int,
    *,
    step: int = 1,
    caps: dict[str, int] | None = None,
) -> TruncatedSeries:
    """The q^step-analog binomial [L, n]: a polynomial in q of degree step*n*(L-n).

    Computed as (Q;Q)_L / ((Q;Q)_n (Q;Q)_{L-n}) with Q = q^step, via series
    inversion; when the full degree fits under the truncation the division is
    checked to leave nothing above it.
    """
    if not 0 <= n <= L:
        raise ValueError(f"require 0 <= n <= L, got n={n}, L={L}")
    numer = pochhammer(1, step, order, step=step, count=L, caps=caps)
    denom = pochhammer(1, step, order, step=step, count=n, caps=caps) * pochhammer(
        1, step, order, step=step, count=L - n, caps=caps
    )
    result = numer * denom.inverse()
    degree = step * n * (L - n)
    if degree <= order:
        top = result.max_exponent()
        assert top is None or top <= degree, "inexact Gaussian binomial division"
    return result


# -- identity sides ----------------------------------------------------------


def lebesgue_lhs(order: int, caps: dict[str, int] | None = None) -> TruncatedSeries:
    """sum_k q^(k(k+1)/2) (-aq;q)_k / (q;q)_k, summed while the q-power fits."""
    total = TruncatedSeries.zero(order, caps)
    k = 0
    while k * (k + 1) // 2 <= order:
        numer = pochhammer(-_A, 1, order, count=k, caps=caps)
        denom_inv = pochhammer(1, 1, order, count=k, caps=caps).inverse()
        total = total + (numer * denom_inv).shifted(k * (k + 1) // 2)
        k += 1
    return total


def lebesgue_rhs(order: int, caps: dict[str, int] | None = None) -> TruncatedSeries:
    """(-aq^2;q^2)_inf * (-q;q)_inf."""
    even_side = pochhammer(-_A, 2, order, step=2, caps=caps)
    distinct_side = pochhammer(-1, 1, order, caps=caps)
    return even_side * distinct_side


def rv_lhs(order: int, caps: dict[str, int]) -> TruncatedSeries:
    total = TruncatedSeries.zero(order, caps)
    m = 0
    while m * (m + 1) // 2 <= order:
        numer = pochhammer(_Z, 0, order, count=m, caps=caps)
        denom_inv = pochhammer(1, 1, order, count=m, caps=caps).inverse()
        term = (numer * denom_inv).scaled(Poly.symbol("alpha", m))
        total = total + term.shifted(m * (m + 1) // 2)
        m += 1
    return total


def rv_rhs(order: int, caps: dict[str, int]) -> TruncatedSeries:
    if "z" not in caps:
        raise ValueError("the rv right side needs a degree cap on z")
    z_cap = caps["z"]
    # (z;q)_inf = (1 - z) * (zq;q)_inf; the shift-0 factor is explicit.
    one_minus_z = TruncatedSeries(order, {0: Poly.const(1) - _Z}, caps)
    prefactor = one_minus_z * pochhammer(_Z, 1, order, caps=caps)
    prefactor = prefactor * pochhammer(-_ALPHA, 1, order, caps=caps)
    inner = TruncatedSeries.zero(order, caps)
    for n in range(z_cap + 1):
        denom_inv = pochhammer(1, 1, order, count=n, caps=caps).inverse() * pochhammer(
            -_ALPHA, 1, order, count=n, caps=caps
        ).inverse()
        inner = inner + denom_inv.scaled(Poly.symbol("z", n))
    return prefactor * inner


def fu_lhs(order: int, caps: dict[str, int] | None = None) -> TruncatedSeries:
    total = TruncatedSeries.zero(order, caps)
    n = 0
    while n * (n + 1) // 2 <= order:
        numer = pochhammer(-_A, 1, order, count=n, caps=caps)
        denom_inv = pochhammer(1, 1, order, count=n, caps=caps).inverse()
        term = (numer * denom_inv).scaled(Poly.symbol("b", n))
        total = total + term.shifted(n * (n + 1) // 2)
        n += 1
    return total


def fu_rhs(order: int, caps: dict[str, int] | None = None) -> TruncatedSeries:
    prefactor = pochhammer(-_B, 1, order, caps=caps)
    total = TruncatedSeries.zero(order, caps)
    k = 0
    while k * (k + 1) <= order:
        denom_inv = pochhammer(1, 1, order, count=k, caps=caps).inverse() * pochhammer(
            -_B, 1, order, count=k, caps=caps
        ).inverse()
        term = denom_inv.scaled(Poly.symbol("a", k) * Poly.symbol("b", k))
        total = total + term.shifted(k * (k + 1))
        k += 1
    return prefactor * total


def rowell_lhs(order: int, L: int, caps: dict[str, int] | None = None) -> TruncatedSeries:
    total = TruncatedSeries.zero(order, caps)
    for n in range(L + 1):
        if n * (n + 1) // 2 > order:
            break
        term = gaussian_binomial(L, n, order, caps=caps) * pochhammer(
            -_A, 1, order, count=n, caps=caps
        )
        total = total + term.shifted(n * (n + 1) // 2)
    return total


def rowell_rhs(order: int, L: int, caps: dict[str, int] | None = None) -> TruncatedSeries:
    total = TruncatedSeries.zero(order, caps)
    for k in range(L + 1):
        if k * (k + 1) > order:
            break
        term = gaussian_binomial(L, k, order, step=2, caps=caps) * pochhammer(
            -1, 1, order, count=L - k, caps=caps
        )
        total = total + term.scaled(Poly.symbol("a", k)).shifted(k * (k + 1))
    return total


@dataclass(frozen=True)
class IdentityReport:
    """Outcome of one coefficientwise comparison."""

    name: str
    order: int
    L: int | None
    equal: bool
    first_difference: tuple[int, Monomial, int, int] | None

    def difference_text(self) -> str | None:
        if self.first_difference is None:
            return None
        e, m, c1, c2 = self.first_difference
        mono = mono_text(m) or "1"
        return f"q^{e}, monomial {mono}: lhs={c1}, rhs={c2}"


def verify_identity(
    name: str,
    order: int,
    L: int | None = None,
    *,
    max_order: int = DEFAULT_ORDER_CAP,
) -> IdentityReport:
    """Build both sides of the named identity at the given order and compare.

    For rowell, L is the finite-form parameter and is required; the other
    identities ignore it.
    """
    if name not in IDENTITY_NAMES:
        raise ValueError(f"unknown identity {name!r}; expected one of {IDENTITY_NAMES}")
    if order < 0:
        raise ValueError("order must be non-negative")
    if order > max_order:
        raise ValueError(f"order {order} exceeds the configured cap ({max_order})")

    if name == "lebesgue":
        lhs, rhs = lebesgue_lhs(order), lebesgue_rhs(order)
    elif name == "rv":
        caps = {"z": order}
        lhs, rhs = rv_lhs(order, caps), rv_rhs(order, caps)
    elif name == "fu":
        lhs, rhs = fu_lhs(order), fu_rhs(order)
    else:
        if L is None or L < 0:
            raise ValueError("rowell requires a non-negative L")
        lhs, rhs = rowell_lhs(order, L), rowell_rhs(order, L)

    diff = lhs.first_difference(rhs)
    return IdentityReport(name, order, L if name == "rowell" else None, diff is None, diff)
