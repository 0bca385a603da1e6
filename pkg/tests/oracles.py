"""Brute-force oracles the tests check the library against.

Everything here enumerates real objects or applies one-coefficient-at-a-time
recurrences; none of it shares code with the expansion paths under test.
"""


def restricted_partitions(n, allowed, cap=None):
    """Yield weakly decreasing tuples of parts drawn from ``allowed`` (any
    multiplicity) summing to n."""
    if n == 0:
        yield ()
        return
    usable = sorted((p for p in allowed if p <= n if cap is None or p <= cap), reverse=True)
    for p in usable:
        for rest in restricted_partitions(n - p, allowed, cap=p):
            yield (p,) + rest


def count_restricted(n, allowed):
    return sum(1 for _ in restricted_partitions(n, allowed))


def distinct_restricted_partitions(n, allowed, cap=None):
    """Same as restricted_partitions but parts must be distinct."""
    if n == 0:
        yield ()
        return
    usable = sorted((p for p in allowed if p <= n if cap is None or p < cap), reverse=True)
    for p in usable:
        for rest in distinct_restricted_partitions(n - p, allowed, cap=p):
            yield (p,) + rest


def count_distinct_restricted(n, allowed):
    return sum(1 for _ in distinct_restricted_partitions(n, allowed))


def signed_product_coefficient(n, c, m):
    """Coefficient of q^n in (q^c; q^m)_oo, by signed enumeration of
    partitions into distinct parts from {c, c+m, ...}: each contributes
    (-1)^(number of parts)."""
    allowed = list(range(c, n + 1, m))
    total = 0
    for parts in distinct_restricted_partitions(n, allowed):
        total += -1 if len(parts) & 1 else 1
    return total


def progression(c, m, top):
    return list(range(c, top + 1, m))


def expand_factors_reference(factors, n):
    """The plain cumulative recurrence, one coefficient at a time: for each
    term exponent e, reciprocal factors add coeffs[j - e] upward and
    Pochhammer factors subtract (or add, negated) downward."""
    coeffs = [0] * (n + 1)
    coeffs[0] = 1
    for f in factors:
        for e in range(f.c, n + 1, f.m):
            if f.sign == "reciprocal":
                for j in range(e, n + 1):
                    coeffs[j] += coeffs[j - e]
            elif f.sign == "pochhammer":
                for j in range(n, e - 1, -1):
                    coeffs[j] -= coeffs[j - e]
            else:
                for j in range(n, e - 1, -1):
                    coeffs[j] += coeffs[j - e]
    return coeffs
