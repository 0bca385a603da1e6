"""Parity analysis of copartition families.

Everything here runs on the packed GF(2) path except where a value mod 5 or
an exact rational is genuinely needed (the mod-5 congruence check and the
density reports' exact proportions).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import isqrt
from typing import Iterable, Sequence

from .enumeration import crank_distribution
from .params import CpParams
from .series import (
    ParitySeries,
    copartition_parity,
    copartition_series,
    mul,
    pentagonal_support,
    reduce_mod2,
    triple_product_theta,
)

TWO_SQUARES = "two_squares"
X2_PLUS_3Y2 = "x2_3y2"


def is_prime(n: int) -> bool:
    """Deterministic trial division; fine at desk scale."""
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0 or n % 3 == 0:
        return False
    d = 5
    while d * d <= n:
        if n % d == 0 or n % (d + 2) == 0:
            return False
        d += 6
    return True


@dataclass(frozen=True)
class Factorization:
    """Complete prime factorization of n as (prime, exponent) pairs,
    primes strictly increasing."""

    n: int
    factors: tuple[tuple[int, int], ...]

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("factorizations are for n >= 1")
        prod, prev = 1, 1
        for p, e in self.factors:
            if p <= prev or e < 1 or not is_prime(p):
                raise ValueError(f"bad factor list for {self.n}: {self.factors}")
            prev = p
            prod *= p ** e
        if prod != self.n:
            raise ValueError(f"factors {self.factors} do not multiply to {self.n}")


def factorize(n: int) -> Factorization:
    """Prime factorization by trial division (2, 3, then 6k+-1)."""
    if n < 1:
        raise ValueError("factorize needs n >= 1")
    left = n
    out = []
    for p in (2, 3):
        e = 0
        while left % p == 0:
            left //= p
            e += 1
        if e:
            out.append((p, e))
    d = 5
    while d * d <= left:
        for p in (d, d + 2):
            e = 0
            while left % p == 0:
                left //= p
                e += 1
            if e:
                out.append((p, e))
        d += 6
    if left > 1:
        out.append((left, 1))
    return Factorization(n, tuple(out))


def is_sum_of_two_squares(n: int) -> bool:
    """Factorization criterion: n = A^2 + B^2 is solvable exactly when every
    prime congruent to 3 mod 4 divides n with an even exponent."""
    if n < 1:
        raise ValueError("needs n >= 1")
    return all(e % 2 == 0 for p, e in factorize(n).factors if p % 4 == 3)


def is_x2_plus_3y2(n: int) -> bool:
    """Factorization criterion used for n congruent to 1 mod 6: representable
    as A^2 + 3B^2 exactly when every prime congruent to 2 mod 3 divides n
    with an even exponent.  Defined for all n >= 1, but the representability
    reading is only claimed on the 1 mod 6 class."""
    if n < 1:
        raise ValueError("needs n >= 1")
    return all(e % 2 == 0 for p, e in factorize(n).factors if p % 3 == 2)


def brute_force_representable(n: int, form: str) -> bool:
    """Exhaustive search for n = A^2 + B^2 or n = A^2 + 3B^2 with A, B >= 0;
    the independent check on the two factorization predicates."""
    if n < 0:
        raise ValueError("needs n >= 0")
    if form == TWO_SQUARES:
        coef = 1
    elif form == X2_PLUS_3Y2:
        coef = 3
    else:
        raise ValueError(f"unknown form {form!r}")
    a = 0
    while a * a <= n:
        q, r = divmod(n - a * a, coef)
        if r == 0:
            b = isqrt(q)
            if b * b == q:
                return True
        a += 1
    return False


def form_equivalence_check(n: int) -> bool:
    """For n congruent to 1 mod 6: n = A^2 + 3B^2 is solvable exactly when
    4n = u^2 + 3v^2 is solvable with u and v both coprime to 6.  Both sides
    are decided by brute search; returns whether they agree."""
    if n < 1 or n % 6 != 1:
        raise ValueError("needs n >= 1 with n congruent to 1 mod 6")
    direct = brute_force_representable(n, X2_PLUS_3Y2)
    target = 4 * n
    restricted = False
    u = 1
    while u * u <= target:
        if u % 6 in (1, 5):
            q, r = divmod(target - u * u, 3)
            if r == 0:
                v = isqrt(q)
                if v * v == q and v % 6 in (1, 5):
                    restricted = True
                    break
        u += 1
    return direct == restricted


def even_guarantee_314(n: int) -> bool:
    """True when the (3,1,4) count at n is forced even: 24n+5 has some prime
    congruent to 3 mod 4 with odd exponent.  Sufficient only."""
    if n < 0:
        raise ValueError("needs n >= 0")
    return not is_sum_of_two_squares(24 * n + 5)


def even_guarantee_516(n: int) -> bool:
    """True when the (5,1,6) count at n is forced even: 6n+1 has some prime
    congruent to 2 mod 3 with odd exponent.  Sufficient only."""
    if n < 0:
        raise ValueError("needs n >= 0")
    return not is_x2_plus_3y2(6 * n + 1)


# family tag -> (unit to invert mod p^2, shift multiplying delta, parameters)
_FAMILIES = {
    "cp314": (24, 5, CpParams(3, 1, 4)),
    "cp516": (6, 1, CpParams(5, 1, 6)),
}


@dataclass(frozen=True)
class ProgressionFamily:
    """One prime's worth of guaranteed-even arithmetic progressions:
    residues r mod p^2 with the family count even on r, r+p^2, r+2p^2, ..."""

    family: str
    p: int
    modulus: int
    delta: int
    residues: tuple[int, ...]

    def __post_init__(self):
        if self.family not in _FAMILIES:
            raise ValueError(f"unknown family {self.family!r}")
        unit, _, _ = _FAMILIES[self.family]
        if self.modulus != self.p * self.p:
            raise ValueError("modulus must be p^2")
        if not 0 <= self.delta < self.modulus or (unit * self.delta) % self.modulus != 1:
            raise ValueError(f"delta must invert {unit} mod {self.modulus}")
        rs = self.residues
        if len(rs) != self.p - 1 or len(set(rs)) != len(rs):
            raise ValueError(f"expected {self.p - 1} distinct residues")
        if list(rs) != sorted(rs) or not all(0 <= r < self.modulus for r in rs):
            raise ValueError("residues must be sorted and reduced mod p^2")

    @property
    def params(self) -> CpParams:
        return _FAMILIES[self.family][2]


def progression_family(family: str, p: int) -> ProgressionFamily:
    """Residue classes mod p^2 on which the family's count is always even.

    cp314 takes primes p > 3 with p congruent to 3 mod 4; cp516 takes primes
    p > 2 with p congruent to 2 mod 3.  In both cases 24n+5 (resp. 6n+1) is
    then divisible by p exactly once on the emitted classes.
    """
    if family not in _FAMILIES:
        raise ValueError(f"unknown family {family!r}")
    unit, shift, _ = _FAMILIES[family]
    if family == "cp314" and (p <= 3 or p % 4 != 3 or not is_prime(p)):
        raise ValueError(f"cp314 needs a prime p > 3 with p = 3 mod 4, got {p}")
    if family == "cp516" and (p <= 2 or p % 3 != 2 or not is_prime(p)):
        raise ValueError(f"cp516 needs a prime p > 2 with p = 2 mod 3, got {p}")
    modulus = p * p
    delta = pow(unit, -1, modulus)
    residues = tuple(sorted((p * t - shift * delta) % modulus for t in range(1, p)))
    return ProgressionFamily(family, p, modulus, delta, residues)


@dataclass(frozen=True)
class ProgressionCheck:
    passed: bool
    vacuous: bool = False
    counterexample: int | None = None


def verify_even_progression(params: CpParams, modulus: int, residue: int, n: int,
                            parity: ParitySeries | None = None) -> ProgressionCheck:
    """Confirm the parity bit is 0 at every index congruent to ``residue``
    mod ``modulus`` up to n.  A range with no such index reports vacuous."""
    if not 0 <= residue < modulus:
        raise ValueError(f"residue {residue} outside 0..{modulus - 1}")
    if n < residue:
        return ProgressionCheck(passed=True, vacuous=True)
    if parity is None:
        parity = copartition_parity(params, n)
    elif parity.trunc < n:
        raise ValueError(f"supplied parity series stops at {parity.trunc} < {n}")
    for k in range(residue, n + 1, modulus):
        if parity.bit(k):
            return ProgressionCheck(passed=False, counterexample=k)
    return ProgressionCheck(passed=True)


def format_proportion(num: int, den: int, places: int = 3) -> str:
    """num/den >= 0 rounded half away from zero, printed with exactly
    ``places`` fractional digits."""
    if den <= 0 or num < 0:
        raise ValueError("needs num >= 0 and den > 0")
    scale = 10 ** places
    q = (2 * num * scale + den) // (2 * den)
    return f"{q // scale}.{q % scale:0{places}d}"


@dataclass(frozen=True)
class DensityReport:
    """Even-value proportions of one family at increasing checkpoints.

    even_counts[i] is #{1 <= k <= checkpoints[i] : count(k) even}; the
    proportions are exact and the rounding (3 decimals, half away from zero)
    is applied only for presentation.
    """

    params: CpParams
    checkpoints: tuple[int, ...]
    even_counts: tuple[int, ...]
    proportions: tuple[Fraction, ...]
    rounded: tuple[str, ...]

    def __post_init__(self):
        cs, es = self.checkpoints, self.even_counts
        if not cs or list(cs) != sorted(set(cs)) or cs[0] < 1:
            raise ValueError("checkpoints must be increasing and >= 1")
        if len(es) != len(cs) or len(self.proportions) != len(cs) or len(self.rounded) != len(cs):
            raise ValueError("per-checkpoint sequences must align")
        if any(e1 > e2 for e1, e2 in zip(es, es[1:])):
            raise ValueError("even counts cannot decrease")
        if any(not 0 <= e <= n for e, n in zip(es, cs)):
            raise ValueError("even counts must lie in [0, n]")


def density_report(params: CpParams, checkpoints: Sequence[int],
                   parity: ParitySeries | None = None) -> DensityReport:
    """Proportion of even counts among indices 1..n at each checkpoint n."""
    cs = tuple(checkpoints)
    if not cs or list(cs) != sorted(set(cs)) or cs[0] < 1:
        raise ValueError("checkpoints must be increasing and >= 1")
    top = cs[-1]
    if parity is None:
        parity = copartition_parity(params, top)
    elif parity.trunc < top:
        raise ValueError(f"supplied parity series stops at {parity.trunc} < {top}")
    evens, fracs, shown = [], [], []
    for n in cs:
        even = n - parity.count_odd(1, n)
        evens.append(even)
        fracs.append(Fraction(even, n))
        shown.append(format_proportion(even, n))
    return DensityReport(params, cs, tuple(evens), tuple(fracs), tuple(shown))


def lacunary_odd_support_check(a: int, n: int) -> bool:
    """For odd a: the odd values of the (a, a, 2a) family up to n sit exactly
    on {2a * k * (3k - 1)}, the pentagonal exponents scaled by 2a."""
    if a < 1 or a % 2 == 0:
        raise ValueError(f"needs odd a >= 1, got {a}")
    if n < 0:
        raise ValueError("needs n >= 0")
    observed = copartition_parity(CpParams(a, a, 2 * a), n)
    expected = ParitySeries.from_support(pentagonal_support(2 * a, n), n)
    return observed == expected


def theta_product_identity_check(a: int, m: int, n: int) -> bool:
    """Mod 2, the (a, m-a, m) counting series times the signed theta series
    of its denominator equals the indicator of {m * k * (3k - 1)} through n."""
    if not 1 <= a < m:
        raise ValueError(f"needs 1 <= a < m, got a={a}, m={m}")
    if n < 0:
        raise ValueError("needs n >= 0")
    counting = copartition_parity(CpParams(a, m - a, m), n)
    theta = reduce_mod2(triple_product_theta(a, m, n))
    left = mul(counting, theta, n)
    right = ParitySeries.from_support(pentagonal_support(m, n), n)
    return left == right


def _geometric_block(n: int, a: int, m: int) -> tuple[int, int]:
    # block n of the expanded theta/(1-q) series: a*(2n+1) consecutive
    # exponents starting at -a*n + m*n*(n+1)/2
    start = -a * n + m * n * (n + 1) // 2
    return start, a * (2 * n + 1)


def odd_term_count_check(a: int, m: int, n_max: int) -> bool:
    """Quantitative check on the theta series divided by (1 - q), mod 2.

    The quotient expands into non-overlapping blocks of consecutive odd
    exponents (block j has a*(2j+1) of them starting at -a*j + m*j*(j+1)/2).
    Verifies that expansion bit for bit against the series product, then
    checks that exponents 0..floor(m*N^2/2) hold exactly a*N^2 odd terms for
    every N <= n_max.  Requires 1 <= a <= m/2.
    """
    if not (1 <= a and 2 * a <= m):
        raise ValueError(f"needs 1 <= a <= m/2, got a={a}, m={m}")
    if n_max < 1:
        raise ValueError("needs n_max >= 1")
    top = m * n_max * n_max // 2
    blocks = 0
    prev_end = -1
    j = 0
    while True:
        start, length = _geometric_block(j, a, m)
        if start > top:
            break
        if start <= prev_end:
            return False
        prev_end = start + length - 1
        clipped = min(length, top - start + 1)
        blocks |= ((1 << clipped) - 1) << start
        j += 1
    theta = reduce_mod2(triple_product_theta(a, m, top))
    ones = ParitySeries(top, (1 << (top + 1)) - 1)
    quotient = mul(theta, ones, top)
    if quotient.bits != blocks:
        return False
    for n in range(1, n_max + 1):
        cutoff = m * n * n // 2
        if (blocks & ((1 << (cutoff + 1)) - 1)).bit_count() != a * n * n:
            return False
    return True


def both_parities_prefix_check(a: int, m: int, n: int, witness_min: int) -> bool:
    """Both parities occur at least ``witness_min`` times among the
    (a, m-a, m) counts at indices 0..n."""
    if not 1 <= a < m:
        raise ValueError(f"needs 1 <= a < m, got a={a}, m={m}")
    if witness_min < 0 or n < 0:
        raise ValueError("needs n >= 0 and witness_min >= 0")
    parity = copartition_parity(CpParams(a, m - a, m), n)
    odd = parity.bits.bit_count()
    even = (n + 1) - odd
    return odd >= witness_min and even >= witness_min


ENUMERABLE_CRANK_SIZES = (4, 9, 14, 19, 24)


def andrews_mod5_check(n: int, enum_sizes: Iterable[int] = (4, 9, 14)) -> bool:
    """The (1, 1, 2) count at 5k+4 is divisible by 5 for all 5k+4 <= n
    (checked on the exact path), and the crank is equidistributed mod 5 at
    each requested enumerable size."""
    sizes = tuple(enum_sizes)
    if not set(sizes) <= set(ENUMERABLE_CRANK_SIZES):
        raise ValueError(f"enumerable sizes are {ENUMERABLE_CRANK_SIZES}, got {sizes}")
    if n < 0:
        raise ValueError("needs n >= 0")
    series = copartition_series(CpParams(1, 1, 2), n)
    for k in range(4, n + 1, 5):
        if series[k] % 5:
            return False
    for s in sizes:
        dist = crank_distribution(CpParams(1, 1, 2), s, 5)
        if set(dist) != set(range(5)) or len(set(dist.values())) != 1:
            return False
    return True
