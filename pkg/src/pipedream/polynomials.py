"""Exact integer polynomial arithmetic.

Two small value types cover everything this package needs:

* ``BetaPolynomial`` -- a univariate polynomial in the deformation
  parameter, stored densely as a coefficient tuple.
* ``MultivariatePolynomial`` -- a sparse polynomial in x_1..x_k whose
  coefficients are ``BetaPolynomial`` values.

All arithmetic is over Python integers, so it is exact at every size;
there is no overflow to guard against.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import zip_longest


def _trim(coeffs):
    coeffs = list(coeffs)
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return tuple(coeffs)


@dataclass(frozen=True)
class BetaPolynomial:
    """Polynomial in b with integer coefficients, ascending powers.

    The zero polynomial is the empty tuple.

    >>> p = BetaPolynomial.from_coeffs([3, 3, 1])
    >>> str(p)
    'b^2+3b+3'
    >>> p(1)
    7
    """

    coeffs: tuple[int, ...] = ()

    @classmethod
    def from_coeffs(cls, coeffs) -> "BetaPolynomial":
        return cls(_trim(coeffs))

    @classmethod
    def zero(cls) -> "BetaPolynomial":
        return cls(())

    @classmethod
    def one(cls) -> "BetaPolynomial":
        return cls((1,))

    @classmethod
    def const(cls, c: int) -> "BetaPolynomial":
        return cls((c,) if c else ())

    @classmethod
    def beta(cls) -> "BetaPolynomial":
        return cls((0, 1))

    @classmethod
    def monomial(cls, power: int, coeff: int = 1) -> "BetaPolynomial":
        if coeff == 0:
            return cls(())
        return cls((0,) * power + (coeff,))

    @classmethod
    def one_plus_beta_power(cls, k: int) -> "BetaPolynomial":
        """(1+b)^k, by binomial coefficients."""
        c = [1]
        for _ in range(k):
            c = [a + b for a, b in zip_longest([0] + c, c + [0], fillvalue=0)]
        return cls(tuple(c))

    # -- ring operations -------------------------------------------------

    def __add__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return BetaPolynomial(_trim(
            a + b for a, b in zip_longest(self.coeffs, other.coeffs, fillvalue=0)))

    __radd__ = __add__

    def __neg__(self):
        return BetaPolynomial(tuple(-a for a in self.coeffs))

    def __sub__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return other - self

    def __mul__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        if not self.coeffs or not other.coeffs:
            return BetaPolynomial(())
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return BetaPolynomial(_trim(out))

    __rmul__ = __mul__

    def __pow__(self, k: int):
        result = BetaPolynomial.one()
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __bool__(self):
        return bool(self.coeffs)

    def __call__(self, beta_value: int) -> int:
        acc = 0
        for a in reversed(self.coeffs):
            acc = acc * beta_value + a
        return acc

    # -- queries ----------------------------------------------------------

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def constant_term(self) -> int:
        return self.coeffs[0] if self.coeffs else 0

    def is_nonnegative(self) -> bool:
        return all(a >= 0 for a in self.coeffs)

    def shift_down(self, k: int) -> "BetaPolynomial":
        """Exact division by b^k; the low k coefficients must vanish."""
        if any(self.coeffs[:k]):
            raise ValueError(f"not divisible by b^{k}: {self}")
        return BetaPolynomial(self.coeffs[k:])

    def __str__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for power in range(len(self.coeffs) - 1, -1, -1):
            a = self.coeffs[power]
            if a == 0:
                continue
            sign = "-" if a < 0 else ("+" if parts else "")
            mag = abs(a)
            if power == 0:
                body = str(mag)
            else:
                var = "b" if power == 1 else f"b^{power}"
                body = var if mag == 1 else f"{mag}{var}"
            parts.append(sign + body)
        return "".join(parts)


def _coerce(value):
    """BetaPolynomial from an int, passthrough, or None if foreign."""
    if isinstance(value, BetaPolynomial):
        return value
    if isinstance(value, int):
        return BetaPolynomial.const(value)
    return None


def _coerce_strict(value) -> BetaPolynomial:
    coerced = _coerce(value)
    if coerced is None:
        raise TypeError(f"expected an integer or BetaPolynomial, got "
                        f"{type(value).__name__}")
    return coerced


ZERO = BetaPolynomial.zero()
ONE = BetaPolynomial.one()


class MultivariatePolynomial:
    """Sparse polynomial in x_1..x_k with ``BetaPolynomial`` coefficients.

    Terms map exponent tuples (length ``nvars``) to nonzero coefficients.
    """

    __slots__ = ("nvars", "terms")

    def __init__(self, nvars: int, terms=None):
        self.nvars = nvars
        self.terms: dict[tuple[int, ...], BetaPolynomial] = {}
        if terms:
            for expo, coeff in terms.items():
                if len(expo) != nvars:
                    raise ValueError("exponent arity mismatch")
                coeff = _coerce_strict(coeff)
                if coeff:
                    self.terms[expo] = coeff

    @classmethod
    def constant(cls, nvars: int, coeff) -> "MultivariatePolynomial":
        return cls(nvars, {(0,) * nvars: _coerce_strict(coeff)})

    @classmethod
    def variable(cls, nvars: int, index: int) -> "MultivariatePolynomial":
        """x_index, 1-based."""
        expo = tuple(1 if i == index - 1 else 0 for i in range(nvars))
        return cls(nvars, {expo: ONE})

    def _check(self, other):
        if self.nvars != other.nvars:
            raise ValueError("variable count mismatch")

    def __add__(self, other):
        self._check(other)
        out = dict(self.terms)
        for expo, coeff in other.terms.items():
            s = out.get(expo, ZERO) + coeff
            if s:
                out[expo] = s
            else:
                out.pop(expo, None)
        return MultivariatePolynomial(self.nvars, out)

    def __sub__(self, other):
        self._check(other)
        out = dict(self.terms)
        for expo, coeff in other.terms.items():
            s = out.get(expo, ZERO) - coeff
            if s:
                out[expo] = s
            else:
                out.pop(expo, None)
        return MultivariatePolynomial(self.nvars, out)

    def __mul__(self, other):
        if isinstance(other, (int, BetaPolynomial)):
            c = _coerce_strict(other)
            return MultivariatePolynomial(
                self.nvars, {e: k * c for e, k in self.terms.items()})
        self._check(other)
        out: dict[tuple[int, ...], BetaPolynomial] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                s = out.get(e, ZERO) + c1 * c2
                if s:
                    out[e] = s
                else:
                    out.pop(e, None)
        return MultivariatePolynomial(self.nvars, out)

    __rmul__ = __mul__

    def __eq__(self, other):
        return (isinstance(other, MultivariatePolynomial)
                and self.nvars == other.nvars and self.terms == other.terms)

    def __hash__(self):
        return hash((self.nvars, frozenset(self.terms.items())))

    def __bool__(self):
        return bool(self.terms)

    def beta_shift_down(self, k: int) -> "MultivariatePolynomial":
        return MultivariatePolynomial(
            self.nvars, {e: c.shift_down(k) for e, c in self.terms.items()})

    def at_beta(self, beta_value: int) -> "MultivariatePolynomial":
        return MultivariatePolynomial(
            self.nvars,
            {e: BetaPolynomial.const(c(beta_value)) for e, c in self.terms.items()})

    def all_ones(self) -> BetaPolynomial:
        """Substitute 1 for every x variable."""
        total = ZERO
        for coeff in self.terms.values():
            total = total + coeff
        return total

    def sorted_terms(self):
        """Graded order: total degree first, then x1 before x2 within a degree."""
        return sorted(self.terms.items(),
                      key=lambda item: (sum(item[0]), tuple(-e for e in item[0])))

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for expo, coeff in self.sorted_terms():
            factors = []
            for i, e in enumerate(expo):
                if e == 1:
                    factors.append(f"x{i + 1}")
                elif e > 1:
                    factors.append(f"x{i + 1}^{e}")
            ctext = str(coeff)
            if not factors:
                body = ctext
            elif ctext == "1":
                body = "*".join(factors)
            elif ctext == "-1":
                body = "-" + "*".join(factors)
            else:
                if len(coeff.coeffs) - coeff.coeffs.count(0) > 1 or ctext.startswith("-"):
                    ctext = f"({ctext})" if "+" in ctext or "-" in ctext[1:] else ctext
                body = "*".join([ctext] + factors)
            if parts and not body.startswith("-"):
                parts.append("+" + body)
            else:
                parts.append(body)
        return "".join(parts)

    def __repr__(self):
        return f"MultivariatePolynomial({self})"
