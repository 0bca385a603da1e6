"""Family parameters shared by every module."""

from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class CpParams:
    """Parameters (a, b, m) naming a copartition family; all must be >= 1."""

    a: int
    b: int
    m: int

    def __post_init__(self):
        if min(self.a, self.b, self.m) < 1:
            raise ValueError(f"copartition parameters must be >= 1, got {(self.a, self.b, self.m)}")

    def swapped(self) -> "CpParams":
        """The parameters of the conjugate family (b, a, m)."""
        return CpParams(self.b, self.a, self.m)

    def label(self) -> str:
        return f"cp_{self.a}_{self.b}_{self.m}"
