"""Exact integer polynomials in q and the q-analogues built from them.

Coefficients are Python ints, so arithmetic never overflows.  Everything
here is division-free: q-binomials come from the q-Pascal recurrence and
identities with ``((1-q)/(1+q))**e`` factors are compared after clearing
denominators (see :func:`rational_check`).
"""
from __future__ import annotations

from functools import lru_cache
from typing import Iterable, Mapping, Sequence


class IntPolynomial:
    """Dense univariate polynomial with exact integer coefficients.

    ``coeffs[i]`` is the coefficient of ``q**i``; trailing zeros are trimmed,
    so equal polynomials have equal coefficient tuples.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[int] = ()):
        cs = [int(x) for x in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name, value):
        raise AttributeError("IntPolynomial is immutable")

    def __reduce__(self):
        return (IntPolynomial, (self.coeffs,))

    @classmethod
    def constant(cls, a: int) -> "IntPolynomial":
        return cls([a])

    @classmethod
    def monomial(cls, exp: int, coeff: int = 1) -> "IntPolynomial":
        if exp < 0:
            raise ValueError("negative exponent")
        return cls([0] * exp + [coeff])

    @classmethod
    def from_terms(cls, terms: Mapping[int, int] | Iterable[tuple[int, int]]) -> "IntPolynomial":
        items = terms.items() if isinstance(terms, Mapping) else terms
        items = list(items)
        if not items:
            return cls()
        cs = [0] * (max(e for e, _ in items) + 1)
        for e, a in items:
            cs[e] += a
        return cls(cs)

    @property
    def degree(self) -> int | None:
        """Degree, or ``None`` for the zero polynomial."""
        return len(self.coeffs) - 1 if self.coeffs else None

    def is_zero(self) -> bool:
        return not self.coeffs

    def __getitem__(self, exp: int) -> int:
        return self.coeffs[exp] if 0 <= exp < len(self.coeffs) else 0

    def terms(self) -> list[tuple[int, int]]:
        return [(e, a) for e, a in enumerate(self.coeffs) if a]

    def __call__(self, x: int) -> int:
        acc = 0
        for a in reversed(self.coeffs):
            acc = acc * x + a
        return acc

    def __eq__(self, other):
        if isinstance(other, int):
            other = IntPolynomial([other])
        if not isinstance(other, IntPolynomial):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __add__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, x in enumerate(b):
            out[i] += x
        return IntPolynomial(out)

    __radd__ = __add__

    def __neg__(self):
        return IntPolynomial(-a for a in self.coeffs)

    def __sub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            return IntPolynomial(a * other for a in self.coeffs)
        if not isinstance(other, IntPolynomial):
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return IntPolynomial()
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    out[i + j] += x * y
        return IntPolynomial(out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative power")
        result = ONE
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def shift(self, k: int) -> "IntPolynomial":
        """Multiply by ``q**k``."""
        if not self.coeffs:
            return self
        return IntPolynomial([0] * k + list(self.coeffs))

    def compose_power(self, c: int) -> "IntPolynomial":
        """Substitute ``q -> q**c``."""
        if c < 1:
            raise ValueError("c must be positive")
        out = [0] * (c * (len(self.coeffs) - 1) + 1) if self.coeffs else []
        for e, a in enumerate(self.coeffs):
            out[c * e] = a
        return IntPolynomial(out)

    def __repr__(self):
        return f"IntPolynomial({format_poly(self)!r})"

    def __str__(self):
        return format_poly(self)


def _coerce(x):
    if isinstance(x, IntPolynomial):
        return x
    if isinstance(x, int):
        return IntPolynomial([x])
    return NotImplemented


ZERO = IntPolynomial()
ONE = IntPolynomial([1])
Q = IntPolynomial([0, 1])


MINUS = "\u2212"


def format_poly(p: IntPolynomial) -> str:
    """Text form with ascending exponents, e.g. ``"1 + q^2 − q^8 − q^10"``.

    Negative terms use the minus sign U+2212.
    """
    parts = []
    for e, a in p.terms():
        mag = abs(a)
        if e == 0:
            body = str(mag)
        else:
            mono = "q" if e == 1 else f"q^{e}"
            body = mono if mag == 1 else f"{mag}*{mono}"
        if not parts:
            parts.append(body if a > 0 else MINUS + body)
        else:
            parts.append(("+ " if a > 0 else MINUS + " ") + body)
    return " ".join(parts) if parts else "0"


def poly_to_json(p: IntPolynomial) -> list[list]:
    return [[e, str(a)] for e, a in p.terms()]


def poly_from_json(data: Sequence[Sequence]) -> IntPolynomial:
    return IntPolynomial.from_terms((int(e), int(a)) for e, a in data)


def q_integer(m: int) -> IntPolynomial:
    """``[m]_q = 1 + q + ... + q**(m-1)``."""
    if m < 1:
        raise ValueError(f"q-integer needs m >= 1, got {m}")
    return IntPolynomial([1] * m)


def substitute_neg(p: IntPolynomial) -> IntPolynomial:
    """``p(-q)``."""
    return IntPolynomial(-a if e % 2 else a for e, a in enumerate(p.coeffs))


def q_product(c: int, n: int, pattern: Sequence[int] | None = None) -> IntPolynomial:
    """``prod_{i=1..n} [ic]`` evaluated at ``pattern[i-1] * q``.

    ``pattern`` entries are +1 or -1; ``None`` means all +1.
    """
    if pattern is None:
        pattern = (1,) * n
    if len(pattern) != n:
        raise ValueError(f"sign pattern has length {len(pattern)}, expected {n}")
    result = ONE
    for i, eps in enumerate(pattern, start=1):
        if eps not in (1, -1):
            raise ValueError(f"sign must be +1 or -1, got {eps}")
        f = q_integer(i * c)
        result = result * (f if eps == 1 else substitute_neg(f))
    return result


def partial_product(c: int, lo: int, hi: int) -> IntPolynomial:
    """``prod_{i=lo..hi} [ci]_q`` (empty product is 1)."""
    result = ONE
    for i in range(lo, hi + 1):
        result = result * q_integer(c * i)
    return result


@lru_cache(maxsize=None)
def _binom_row(n: int) -> tuple[IntPolynomial, ...]:
    # [n k]_q = [n-1 k-1]_q + q^k [n-1 k]_q
    if n == 0:
        return (ONE,)
    prev = _binom_row(n - 1)
    row = [ONE]
    for k in range(1, n):
        row.append(prev[k - 1] + prev[k].shift(k))
    row.append(ONE)
    return tuple(row)


def q_binomial(n: int, k: int, c: int = 1) -> IntPolynomial:
    """Gaussian binomial ``[n k]`` in the variable ``q**c``."""
    if not 0 <= k <= n:
        raise ValueError(f"q-binomial needs 0 <= k <= n, got n={n}, k={k}")
    return _binom_row(n)[k].compose_power(c)


def binomial_transform(g: Sequence[IntPolynomial], c: int) -> list[IntPolynomial]:
    """``f_m = sum_k [m k]_{q^c} g_k`` for every m."""
    return [sum((q_binomial(m, k, c) * g[k] for k in range(m + 1)), ZERO)
            for m in range(len(g))]


def gauss_inversion(f: Sequence[IntPolynomial], c: int) -> list[IntPolynomial]:
    """Invert :func:`binomial_transform`.

    ``g_m = sum_k [m k]_{q^c} (-1)**(m-k) q**(c*C(m-k, 2)) f_k``.
    """
    out = []
    for m in range(len(f)):
        acc = ZERO
        for k in range(m + 1):
            d = m - k
            term = q_binomial(m, k, c) * f[k]
            term = term.shift(c * d * (d - 1) // 2)
            acc = acc - term if d % 2 else acc + term
        out.append(acc)
    return out


ONE_PLUS_Q = IntPolynomial([1, 1])
ONE_MINUS_Q = IntPolynomial([1, -1])


def cleared_sides(lhs: IntPolynomial,
                  terms: Sequence[tuple[int, IntPolynomial, int]],
                  E: int) -> tuple[IntPolynomial, IntPolynomial]:
    """Both sides of ``lhs == sum sign * core * ((1-q)/(1+q))**e`` times ``(1+q)**E``."""
    rhs = ZERO
    for sign, core, e in terms:
        if e > E:
            raise ValueError(f"exponent {e} exceeds clearing exponent {E}")
        if sign not in (1, -1):
            raise ValueError(f"sign must be +1 or -1, got {sign}")
        piece = core * ONE_MINUS_Q**e * ONE_PLUS_Q**(E - e)
        rhs = rhs + piece if sign == 1 else rhs - piece
    return lhs * ONE_PLUS_Q**E, rhs


def rational_check(lhs: IntPolynomial,
                   terms: Sequence[tuple[int, IntPolynomial, int]],
                   E: int) -> bool:
    """Check ``lhs == sum sign * core * ((1-q)/(1+q))**e`` exactly.

    Both sides are multiplied by ``(1+q)**E``; every ``e`` must be ``<= E``.
    """
    left, right = cleared_sides(lhs, terms, E)
    return left == right


class BivariateDistribution:
    """Sparse map ``(t_exp, q_exp) -> coefficient``, zero entries never stored."""

    __slots__ = ("_entries",)

    def __init__(self, entries: Mapping[tuple[int, int], int] | None = None):
        self._entries: dict[tuple[int, int], int] = {}
        if entries:
            for (a, b), v in entries.items():
                self.accumulate(a, b, v)

    def accumulate(self, t_exp: int, q_exp: int, coeff: int = 1) -> None:
        key = (t_exp, q_exp)
        v = self._entries.get(key, 0) + coeff
        if v:
            self._entries[key] = v
        else:
            self._entries.pop(key, None)

    def merge(self, other: "BivariateDistribution") -> None:
        for (a, b), v in other._entries.items():
            self.accumulate(a, b, v)

    def transpose(self) -> "BivariateDistribution":
        return BivariateDistribution({(b, a): v for (a, b), v in self._entries.items()})

    def items(self):
        return sorted(self._entries.items())

    def __getitem__(self, key: tuple[int, int]) -> int:
        return self._entries.get(key, 0)

    def __len__(self):
        return len(self._entries)

    def total(self) -> int:
        return sum(self._entries.values())

    def __eq__(self, other):
        if not isinstance(other, BivariateDistribution):
            return NotImplemented
        return self._entries == other._entries

    def __hash__(self):
        return hash(frozenset(self._entries.items()))

    def is_symmetric(self) -> bool:
        return self == self.transpose()

    def asymmetric_witness(self) -> tuple[int, int] | None:
        """First ``(a, b)`` in sorted order whose coefficient differs from ``(b, a)``."""
        for (a, b), v in self.items():
            if self[(b, a)] != v:
                return (a, b)
        return None

    def to_json(self) -> list[list]:
        return [[a, b, str(v)] for (a, b), v in self.items()]

    def __repr__(self):
        return f"BivariateDistribution({dict(self.items())!r})"


def equals(x: BivariateDistribution, y: BivariateDistribution) -> bool:
    return x == y


def transpose(dist: BivariateDistribution) -> BivariateDistribution:
    return dist.transpose()
