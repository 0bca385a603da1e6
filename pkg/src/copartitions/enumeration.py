"""Copartitions as explicit triples, with conjugation, hooks, and the crank.

A copartition for parameters (a, b, m) is a triple of partitions
(ground, rectangle, sky): ground parts are >= a and congruent to a mod m,
sky parts are >= b and congruent to b mod m, and the rectangle carries one
part of size m * (number of ground parts) for every sky part.  Zero-size
parts are never stored, so the rectangle is empty whenever the ground or
the sky is.  The size of a copartition is the total of all three.

The graphical picture drives the bijections below.  Rows of the rectangle
sit left of the sky rows (each sky part km+b drawn as a b-cell followed by
k m-cells); the ground hangs underneath the rectangle, transposed, with its
a-cells on top.  Conjugation reflects this diagram, swapping ground and sky
and transposing the rectangle.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Iterator

from .params import CpParams

Parts = tuple[int, ...]


def _check_partition(parts: Parts, label: str):
    if any(u < v for u, v in zip(parts, parts[1:])):
        raise ValueError(f"{label} parts must be weakly decreasing, got {parts}")
    if parts and parts[-1] < 1:
        raise ValueError(f"{label} parts must be positive, got {parts}")


@dataclass(frozen=True)
class Copartition:
    ground: Parts
    rectangle: Parts
    sky: Parts
    params: CpParams

    def __post_init__(self):
        a, b, m = self.params.a, self.params.b, self.params.m
        _check_partition(self.ground, "ground")
        _check_partition(self.sky, "sky")
        for p in self.ground:
            if p < a or (p - a) % m:
                raise ValueError(f"ground part {p} is not >= {a} and congruent to {a} mod {m}")
        for p in self.sky:
            if p < b or (p - b) % m:
                raise ValueError(f"sky part {p} is not >= {b} and congruent to {b} mod {m}")
        if self.rectangle != _forced_rectangle(self.params, self.ground, self.sky):
            raise ValueError(
                f"rectangle {self.rectangle} is not the forced "
                f"{_forced_rectangle(self.params, self.ground, self.sky)}"
            )

    @property
    def size(self) -> int:
        return sum(self.ground) + sum(self.rectangle) + sum(self.sky)

    def crank(self) -> int:
        """Number of ground parts minus number of sky parts."""
        return len(self.ground) - len(self.sky)

    def conjugate(self) -> "Copartition":
        """Reflect the diagram: (ground, rectangle, sky) of the (a, b, m)
        family maps to (sky, transposed rectangle, ground) of (b, a, m)."""
        swapped = self.params.swapped()
        return Copartition(self.sky, _forced_rectangle(swapped, self.sky, self.ground), self.ground, swapped)

    def is_self_conjugate(self) -> bool:
        return self.conjugate() == self


def _forced_rectangle(params: CpParams, ground: Parts, sky: Parts) -> Parts:
    return (params.m * len(ground),) * len(sky) if ground and sky else ()


def _make(params: CpParams, ground: Parts, sky: Parts) -> Copartition:
    return Copartition(ground, _forced_rectangle(params, ground, sky), sky, params)


def _progression_partitions(total: int, count: int, base: int, step: int,
                            cap: int | None = None) -> Iterator[Parts]:
    """Weakly decreasing count-tuples of parts from {base, base+step, ...}
    summing to total, first parts largest first."""
    if count == 0:
        if total == 0:
            yield ()
        return
    hi = total - base * (count - 1)
    if cap is not None:
        hi = min(hi, cap)
    if hi < base:
        return
    hi = base + (hi - base) // step * step
    for first in range(hi, base - 1, -step):
        for rest in _progression_partitions(total - first, count - 1, base, step, cap=first):
            yield (first,) + rest


def _raw_triples(params: CpParams, n: int) -> Iterator[tuple[Parts, Parts]]:
    # outer loop over the ground (by part count, then total), inner over the
    # sky; the rectangle cost m*g*s prunes the sky budget early
    a, b, m = params.a, params.b, params.m
    g = 0
    while a * g <= n:
        ground_totals = (0,) if g == 0 else range(a * g, n + 1, m)
        for gt in ground_totals:
            for ground in _progression_partitions(gt, g, a, m):
                rest = n - gt
                s = 0
                while s * (b + m * g) <= rest:
                    for sky in _progression_partitions(rest - m * g * s, s, b, m):
                        yield ground, sky
                    s += 1
        g += 1


def enumerate_copartitions(params: CpParams, n: int) -> list[Copartition]:
    """All copartitions of size exactly n, in descending lexicographic
    (ground, sky) order."""
    if n < 0:
        raise ValueError("size must be >= 0")
    triples = sorted(_raw_triples(params, n), reverse=True)
    return [_make(params, ground, sky) for ground, sky in triples]


def count_copartitions(params: CpParams, n: int) -> int:
    """Number of copartitions of size exactly n, by direct enumeration.

    This is the counting oracle the generating series is checked against;
    it never touches the series code.
    """
    if n < 0:
        raise ValueError("size must be >= 0")
    return sum(1 for _ in _raw_triples(params, n))


def crank_distribution(params: CpParams, n: int, modulus: int) -> dict[int, int]:
    """Histogram of crank values mod ``modulus`` over all copartitions of n.

    Residues that never occur are omitted.
    """
    if modulus < 1:
        raise ValueError("modulus must be >= 1")
    if n < 0:
        raise ValueError("size must be >= 0")
    counts = Counter((len(g) - len(s)) % modulus for g, s in _raw_triples(params, n))
    return dict(sorted(counts.items()))


def hooks_to_distinct_parts(cp: Copartition) -> Parts:
    """Diagonal hook sizes of a self-conjugate copartition, largest first.

    A self-conjugate copartition has ground == sky (s parts) and an s-by-s
    rectangle of m-cells.  The hook at diagonal cell i (0-based from the top
    left) takes that cell, the rectangle cells below and to the right of it,
    one full sky row, and one full ground column: an odd number of m-cells
    plus exactly two a-cells.  With sky part a + m*k_i in row i the hook size
    is m*(2*(s-1-i+k_i) + 1) + 2a, so the hooks are distinct and congruent
    to m+2a mod 2m, and they sum to the copartition's size.
    """
    if not cp.is_self_conjugate():
        raise ValueError("hook decomposition needs a self-conjugate copartition")
    a, m = cp.params.a, cp.params.m
    s = len(cp.sky)
    hooks = []
    for i, part in enumerate(cp.sky):
        k = (part - a) // m
        hooks.append(m * (2 * (s - 1 - i + k) + 1) + 2 * a)
    return tuple(hooks)


def distinct_parts_to_hooks(parts, a: int, m: int) -> Copartition:
    """Rebuild the self-conjugate (a, a, m)-copartition whose hooks are
    ``parts``; inverse of :func:`hooks_to_distinct_parts`.

    Parts must be distinct, each >= m+2a and congruent to m+2a mod 2m.
    """
    params = CpParams(a, a, m)
    ordered = tuple(sorted(parts, reverse=True))
    if len(set(ordered)) != len(ordered):
        raise ValueError("hook parts must be distinct")
    lo = m + 2 * a
    s = len(ordered)
    sky = []
    for i, d in enumerate(ordered):
        if d < lo or (d - lo) % (2 * m):
            raise ValueError(f"part {d} is not >= {lo} and congruent to {lo} mod {2 * m}")
        k = (d - lo) // (2 * m) - (s - 1 - i)
        # distinct sorted parts make k weakly decreasing and >= 0
        sky.append(a + m * k)
    return _make(params, tuple(sky), tuple(sky))
