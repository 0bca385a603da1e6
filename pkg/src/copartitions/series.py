"""Truncated formal power series over the integers and over GF(2).

Two coefficient representations back everything else:

* ``ExactSeries`` keeps one Python int per exponent, so coefficients never
  overflow no matter how fast a family grows.
* ``ParitySeries`` packs coefficient-mod-2 bits into a single int (bit n is
  the coefficient of q^n).  Multiplying packed bits by (1 + q^e) is one
  shift-XOR pass, and 1/(1 - q^e) factors as (1+q^e)(1+q^2e)(1+q^4e)...,
  so the deep parity scans (n around 32000) stay cheap.

The same binary-split factorization of 1/(1 - q^e) is valid over the
integers (every multiple of e has a unique binary decomposition), so the
exact expander uses it too; tests pin it against the one-coefficient-at-a-
time recurrence.

Truncation is explicit everywhere: a series knows the last exponent it is
valid through, operations refuse to mix truncations, and nothing is ever
extended silently.  Shortening is spelled ``truncate``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .params import CpParams

POCHHAMMER = "pochhammer"                    # (q^c; q^m)_oo
RECIPROCAL = "reciprocal"                    # 1 / (q^c; q^m)_oo
NEGATED_POCHHAMMER = "negated-pochhammer"    # (-q^c; q^m)_oo

_SIGNS = (POCHHAMMER, RECIPROCAL, NEGATED_POCHHAMMER)


@dataclass(frozen=True)
class FactorSpec:
    """One infinite-product family with term exponents c, c+m, c+2m, ..."""

    c: int
    m: int
    sign: str

    def __post_init__(self):
        if self.c < 1 or self.m < 1:
            raise ValueError(f"factor needs c >= 1 and m >= 1, got c={self.c}, m={self.m}")
        if self.sign not in _SIGNS:
            raise ValueError(f"unknown factor sign {self.sign!r}")


def pochhammer(c: int, m: int) -> FactorSpec:
    """(q^c; q^m)_oo."""
    return FactorSpec(c, m, POCHHAMMER)


def reciprocal(c: int, m: int) -> FactorSpec:
    """1 / (q^c; q^m)_oo."""
    return FactorSpec(c, m, RECIPROCAL)


def negated_pochhammer(c: int, m: int) -> FactorSpec:
    """(-q^c; q^m)_oo."""
    return FactorSpec(c, m, NEGATED_POCHHAMMER)


@dataclass(frozen=True)
class ExactSeries:
    """Integer power series known exactly on exponents 0..trunc."""

    trunc: int
    coeffs: tuple[int, ...]

    def __post_init__(self):
        if self.trunc < 0:
            raise ValueError("truncation must be >= 0")
        if len(self.coeffs) != self.trunc + 1:
            raise ValueError(f"need {self.trunc + 1} coefficients, got {len(self.coeffs)}")

    @classmethod
    def one(cls, trunc: int) -> "ExactSeries":
        return cls(trunc, (1,) + (0,) * trunc)

    def __getitem__(self, n: int) -> int:
        if not 0 <= n <= self.trunc:
            raise IndexError(f"exponent {n} outside the known range 0..{self.trunc}")
        return self.coeffs[n]

    def truncate(self, n: int) -> "ExactSeries":
        """Explicitly shorten to exponent n; extension is never allowed."""
        if n > self.trunc:
            raise ValueError(f"cannot extend a series truncated at {self.trunc} to {n}")
        return ExactSeries(n, self.coeffs[: n + 1])


@dataclass(frozen=True)
class ParitySeries:
    """GF(2) power series on exponents 0..trunc; bit n of ``bits`` is the
    coefficient of q^n reduced mod 2."""

    trunc: int
    bits: int

    def __post_init__(self):
        if self.trunc < 0:
            raise ValueError("truncation must be >= 0")
        if self.bits < 0 or self.bits >> (self.trunc + 1):
            raise ValueError("bits outside the exponent range 0..trunc")

    @classmethod
    def one(cls, trunc: int) -> "ParitySeries":
        return cls(trunc, 1)

    @classmethod
    def from_support(cls, exponents: Iterable[int], trunc: int) -> "ParitySeries":
        """Indicator series of a set of exponents."""
        bits = 0
        for e in exponents:
            if not 0 <= e <= trunc:
                raise ValueError(f"exponent {e} outside 0..{trunc}")
            bits |= 1 << e
        return cls(trunc, bits)

    def bit(self, n: int) -> int:
        if not 0 <= n <= self.trunc:
            raise IndexError(f"exponent {n} outside the known range 0..{self.trunc}")
        return (self.bits >> n) & 1

    def odd_exponents(self) -> list[int]:
        """Exponents with odd coefficient, increasing."""
        if self.bits == 0:
            return []
        low_first = bin(self.bits)[:1:-1]
        return [i for i, ch in enumerate(low_first) if ch == "1"]

    def count_odd(self, lo: int = 0, hi: int | None = None) -> int:
        """Number of odd coefficients with exponent in [lo, hi] inclusive."""
        if hi is None:
            hi = self.trunc
        if not 0 <= lo <= hi <= self.trunc:
            raise ValueError(f"bad exponent range [{lo}, {hi}] for truncation {self.trunc}")
        return ((self.bits >> lo) & ((1 << (hi - lo + 1)) - 1)).bit_count()

    def truncate(self, n: int) -> "ParitySeries":
        if n > self.trunc:
            raise ValueError(f"cannot extend a series truncated at {self.trunc} to {n}")
        return ParitySeries(n, self.bits & ((1 << (n + 1)) - 1))


def _scaled_add(coeffs: list, k: int, sign: int):
    # in place coeffs *= (1 + sign*q^k); reads are all pre-update values
    upper = len(coeffs)
    if sign > 0:
        coeffs[k:] = [t + h for t, h in zip(coeffs[k:], coeffs[: upper - k])]
    else:
        coeffs[k:] = [t - h for t, h in zip(coeffs[k:], coeffs[: upper - k])]


def expand_factors(factors: Sequence[FactorSpec], n: int) -> ExactSeries:
    """Expand a product of infinite-product factors through exponent n.

    Factors whose first exponent exceeds n contribute the identity.  Each
    Pochhammer term is one (1 -+ q^e) pass; each reciprocal term applies the
    binary-split geometric factorization of 1/(1 - q^e).
    """
    if n < 0:
        raise ValueError("truncation must be >= 0")
    coeffs = [0] * (n + 1)
    coeffs[0] = 1
    for f in factors:
        for e in range(f.c, n + 1, f.m):
            if f.sign == RECIPROCAL:
                k = e
                while k <= n:
                    _scaled_add(coeffs, k, +1)
                    k <<= 1
            elif f.sign == POCHHAMMER:
                _scaled_add(coeffs, e, -1)
            else:
                _scaled_add(coeffs, e, +1)
    return ExactSeries(n, tuple(coeffs))


def expand_factors_mod2(factors: Sequence[FactorSpec], n: int) -> ParitySeries:
    """Parity of ``expand_factors(factors, n)`` computed natively on packed bits.

    Mod 2 the sign of a Pochhammer factor is invisible, so (q^c;q^m) and
    (-q^c;q^m) run the same passes.
    """
    if n < 0:
        raise ValueError("truncation must be >= 0")
    mask = (1 << (n + 1)) - 1
    bits = 1
    for f in factors:
        for e in range(f.c, n + 1, f.m):
            if f.sign == RECIPROCAL:
                k = e
                while k <= n:
                    bits = (bits ^ (bits << k)) & mask
                    k <<= 1
            else:
                bits = (bits ^ (bits << e)) & mask
    return ParitySeries(n, bits)


def copartition_factors(params: CpParams) -> list[FactorSpec]:
    """The copartition generating product (q^(a+b);q^m) / ((q^b;q^m)(q^a;q^m))."""
    return [
        pochhammer(params.a + params.b, params.m),
        reciprocal(params.b, params.m),
        reciprocal(params.a, params.m),
    ]


def copartition_series(params: CpParams, n: int) -> ExactSeries:
    """Exact counting series of the (a, b, m) copartition family through n."""
    return expand_factors(copartition_factors(params), n)


def copartition_parity(params: CpParams, n: int) -> ParitySeries:
    """Counting series of the (a, b, m) family reduced mod 2, through n."""
    return expand_factors_mod2(copartition_factors(params), n)


def self_conjugate_series(a: int, m: int, n: int) -> ExactSeries:
    """Counts partitions into distinct parts that are >= m+2a and congruent
    to m+2a mod 2m; these are exactly the hook sizes of self-conjugate
    (a, a, m)-copartitions, so coefficient k also counts those."""
    if a < 1 or m < 1:
        raise ValueError("need a >= 1 and m >= 1")
    return expand_factors([negated_pochhammer(m + 2 * a, 2 * m)], n)


def self_conjugate_parity(a: int, m: int, n: int) -> ParitySeries:
    if a < 1 or m < 1:
        raise ValueError("need a >= 1 and m >= 1")
    return expand_factors_mod2([negated_pochhammer(m + 2 * a, 2 * m)], n)


def triple_product_theta(a: int, m: int, n: int) -> ExactSeries:
    """Signed theta expansion of (q^a;q^m)(q^(m-a);q^m)(q^m;q^m): the term for
    integer k sits at exponent a*k + m*k*(k-1)/2 with sign (-1)^k.

    Requires a <= m so that no exponent is negative.
    """
    if not 1 <= a <= m:
        raise ValueError(f"need 1 <= a <= m, got a={a}, m={m}")
    if n < 0:
        raise ValueError("truncation must be >= 0")
    coeffs = [0] * (n + 1)
    k = 0
    while True:
        e = a * k + m * k * (k - 1) // 2
        if e > n:
            break
        coeffs[e] += -1 if k & 1 else 1
        k += 1
    j = 1
    while True:
        e = -a * j + m * j * (j + 1) // 2
        if e > n:
            break
        coeffs[e] += -1 if j & 1 else 1
        j += 1
    return ExactSeries(n, tuple(coeffs))


def pentagonal_support(scale: int, n: int) -> set[int]:
    """{scale * k * (3k - 1) : k any integer} intersected with [0, n]."""
    if scale < 1:
        raise ValueError("scale must be >= 1")
    out = set()
    k = 0
    while scale * k * (3 * k - 1) <= n:
        out.add(scale * k * (3 * k - 1))
        k += 1
    j = 1
    while scale * j * (3 * j + 1) <= n:        # k = -j
        out.add(scale * j * (3 * j + 1))
        j += 1
    return out


def mul(x, y, n: int):
    """Truncated product of two series of the same kind and truncation.

    Both inputs must be known through n and carry the same truncation;
    mixing truncations is an error rather than an implicit minimum.
    """
    if type(x) is not type(y):
        raise TypeError("cannot multiply exact and parity series together")
    if x.trunc != y.trunc:
        raise ValueError(f"truncation mismatch: {x.trunc} != {y.trunc}")
    if not 0 <= n <= x.trunc:
        raise ValueError(f"product truncation {n} outside the inputs' range 0..{x.trunc}")
    if isinstance(x, ParitySeries):
        a, b = x.bits, y.bits
        if a.bit_count() > b.bit_count():
            a, b = b, a
        mask = (1 << (n + 1)) - 1
        acc = 0
        if a:
            for i, ch in enumerate(bin(a)[:1:-1]):
                if ch == "1":
                    if i > n:
                        break
                    acc ^= b << i
        return ParitySeries(n, acc & mask)
    out = [0] * (n + 1)
    sparse = [(i, c) for i, c in enumerate(x.coeffs[: n + 1]) if c]
    dense = y.coeffs
    for i, c in sparse:
        for j in range(n + 1 - i):
            d = dense[j]
            if d:
                out[i + j] += c * d
    return ExactSeries(n, tuple(out))


def reduce_mod2(x: ExactSeries) -> ParitySeries:
    """Coefficient-wise reduction mod 2 into packed bits."""
    word = "".join("1" if c & 1 else "0" for c in reversed(x.coeffs))
    return ParitySeries(x.trunc, int(word, 2))
