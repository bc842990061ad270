"""Exact polynomial and truncated power-series arithmetic over the integers."""

from __future__ import annotations

from dataclasses import dataclass, field
from math import gcd
from typing import Mapping, Sequence

Exponents = tuple[int, ...]


# -- truncated series --------------------------------------------------------

def series_mul(a: Sequence[int], b: Sequence[int], N: int) -> list[int]:
    """Product of two coefficient lists modulo x^(N+1)."""
    out = [0] * (N + 1)
    bn = [(j, c) for j, c in enumerate(b[: N + 1]) if c]
    for i, ca in enumerate(a[: N + 1]):
        if not ca:
            continue
        for j, cb in bn:
            if i + j > N:
                break
            out[i + j] += ca * cb
    return out


def series_prod(factors: Sequence[Sequence[int]], N: int) -> list[int]:
    out = [1] + [0] * N
    for f in factors:
        out = series_mul(out, f, N)
    return out


@dataclass(frozen=True)
class PowerSeries:
    """Coefficients av(0), av(1), ... indexed by leaf count."""

    coefficients: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "coefficients", tuple(int(c) for c in self.coefficients))

    @property
    def order(self) -> int:
        return len(self.coefficients) - 1

    def truncate(self, N: int) -> PowerSeries:
        return PowerSeries(self.coefficients[: N + 1])

    def __getitem__(self, n):
        return self.coefficients[n]

    def __len__(self) -> int:
        return len(self.coefficients)

    def __iter__(self):
        return iter(self.coefficients)

    def __str__(self) -> str:
        return ", ".join(str(c) for c in self.coefficients)


# -- multivariate -------------------------------------------------------------

@dataclass(frozen=True)
class MultiPoly:
    """Sparse polynomial with integer coefficients over named indeterminates."""

    variables: tuple[str, ...]
    terms: Mapping[Exponents, int] = field(default_factory=dict)

    def __post_init__(self):
        clean = {}
        for e, c in self.terms.items():
            if len(e) != len(self.variables):
                raise ValueError(f"exponent vector {e} does not match {len(self.variables)} variables")
            if c:
                clean[tuple(e)] = int(c)
        object.__setattr__(self, "terms", clean)

    @classmethod
    def var(cls, variables: tuple[str, ...], name: str) -> MultiPoly:
        e = tuple(int(v == name) for v in variables)
        return cls(variables, {e: 1})

    @classmethod
    def const(cls, variables: tuple[str, ...], c: int) -> MultiPoly:
        return cls(variables, {(0,) * len(variables): c})

    def _same(self, other: MultiPoly) -> None:
        if self.variables != other.variables:
            raise ValueError("polynomials live over different variable lists")

    def __add__(self, other: MultiPoly) -> MultiPoly:
        self._same(other)
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = out.get(e, 0) + c
        return MultiPoly(self.variables, out)

    def __neg__(self) -> MultiPoly:
        return MultiPoly(self.variables, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other: MultiPoly) -> MultiPoly:
        return self + (-other)

    def __mul__(self, other: MultiPoly) -> MultiPoly:
        self._same(other)
        out: dict[Exponents, int] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(i + j for i, j in zip(e1, e2))
                out[e] = out.get(e, 0) + c1 * c2
        return MultiPoly(self.variables, out)

    def __pow__(self, k: int) -> MultiPoly:
        out = MultiPoly.const(self.variables, 1)
        for _ in range(k):
            out = out * self
        return out

    def is_zero(self) -> bool:
        return not self.terms

    def degree(self, name: str) -> int:
        i = self.variables.index(name)
        return max((e[i] for e in self.terms), default=-1)

    def used(self) -> set[str]:
        return {v for i, v in enumerate(self.variables) if any(e[i] for e in self.terms)}

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for e in sorted(self.terms, reverse=True):
            parts.append(_term(self.terms[e], [(v, k) for v, k in zip(self.variables, e) if k]))
        return _join(parts)


def _term(c: int, powers: list[tuple[str, int]]) -> tuple[int, str]:
    mono = "*".join(v if k == 1 else f"{v}^{k}" for v, k in powers)
    mag = abs(c)
    if not mono:
        body = str(mag)
    elif mag == 1:
        body = mono
    else:
        body = f"{mag}*{mono}"
    return (-1 if c < 0 else 1), body


def _join(parts: list[tuple[int, str]]) -> str:
    out = ""
    for k, (sign, body) in enumerate(parts):
        if k == 0:
            out = ("-" if sign < 0 else "") + body
        else:
            out += (" - " if sign < 0 else " + ") + body
    return out


# -- bivariate in (x, a) ------------------------------------------------------

@dataclass(frozen=True)
class BivariatePoly:
    """Integer polynomial in x and a; keys are (x-degree, a-degree).

    Stored primitive and sign-normalised: the coefficient of ``a`` (x^0 a^1)
    is negative when present, otherwise the leading coefficient in graded-lex
    order is positive.
    """

    terms: Mapping[tuple[int, int], int]

    def __post_init__(self):
        clean = {(int(i), int(j)): int(c) for (i, j), c in self.terms.items() if c}
        if not clean:
            raise ValueError("the zero polynomial is not a functional equation")
        g = 0
        for c in clean.values():
            g = gcd(g, c)
        sign = 1
        if (0, 1) in clean:
            sign = -1 if clean[(0, 1)] > 0 else 1
        else:
            lead = max(clean, key=lambda e: (e[0] + e[1], e[1], e[0]))
            sign = 1 if clean[lead] > 0 else -1
        object.__setattr__(self, "terms", {e: sign * c // g for e, c in clean.items()})

    @property
    def deg_a(self) -> int:
        return max(j for _, j in self.terms)

    @property
    def deg_x(self) -> int:
        return max(i for i, _ in self.terms)

    def involves_a(self) -> bool:
        return self.deg_a > 0

    def evaluate_series(self, a: Sequence[int], N: int) -> list[int]:
        """Coefficients of P(x, a(x)) modulo x^(N+1)."""
        out = [0] * (N + 1)
        power = [1] + [0] * N
        for j in range(self.deg_a + 1):
            for (i, jj), c in self.terms.items():
                if jj != j:
                    continue
                for n in range(N + 1 - i):
                    out[n + i] += c * power[n]
            power = series_mul(power, a, N)
        return out

    def annihilates(self, a: Sequence[int], N: int) -> bool:
        return not any(self.evaluate_series(a, N))

    def __str__(self) -> str:
        order = sorted(self.terms, key=lambda e: (-e[1], -e[0]))
        parts = []
        for i, j in order:
            powers = [(v, k) for v, k in (("x", i), ("a", j)) if k]
            parts.append(_term(self.terms[(i, j)], powers))
        return _join(parts)
