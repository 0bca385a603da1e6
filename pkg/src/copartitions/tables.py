"""Density-table definitions and regeneration.

Three tables, regenerated from scratch on the packed parity path:

* table 1: families (3,3,4) and (1,1,6) at checkpoints 1000, 3000, ..., 15000;
* table 2: the m=14 complementary families at checkpoints 1000..32000,
  including both readings of the ambiguous first column, (1,11,14) as
  labelled and (1,13,14) as the a + b = m pattern dictates;
* table 3: families (1, m-1, m) for the printed m values, same checkpoints.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

from .cache import cached_copartition_parity
from .params import CpParams
from .parity import DensityReport, density_report

TABLE1_CHECKPOINTS = tuple(range(1000, 15001, 2000))
TABLE2_CHECKPOINTS = (1000, 2000, 4000, 8000, 16000, 32000)
TABLE3_CHECKPOINTS = TABLE2_CHECKPOINTS
TABLE3_MODULI = (3, 4, 5, 6, 7, 8, 9, 10, 12) + tuple(range(14, 33, 2))

TABLE1_FAMILIES = (CpParams(3, 3, 4), CpParams(1, 1, 6))
TABLE2_FAMILIES = (
    CpParams(1, 11, 14),   # as labelled
    CpParams(1, 13, 14),   # the a + b = m reading
    CpParams(3, 11, 14),
    CpParams(5, 9, 14),
)
TABLE3_FAMILIES = tuple(CpParams(1, m - 1, m) for m in TABLE3_MODULI)


@dataclass(frozen=True)
class TableData:
    which: int
    checkpoints: tuple[int, ...]
    reports: tuple[DensityReport, ...]

    @property
    def labels(self) -> tuple[str, ...]:
        return tuple(r.params.label() for r in self.reports)

    def column(self, label: str) -> DensityReport:
        for r in self.reports:
            if r.params.label() == label:
                return r
        raise KeyError(label)

    def cell(self, n: int, label: str) -> str:
        report = self.column(label)
        return report.rounded[report.checkpoints.index(n)]

    def rows(self) -> list[list]:
        return [[n] + [r.rounded[i] for r in self.reports]
                for i, n in enumerate(self.checkpoints)]


def _table_plan(which: int):
    if which == 1:
        return TABLE1_CHECKPOINTS, TABLE1_FAMILIES
    if which == 2:
        return TABLE2_CHECKPOINTS, TABLE2_FAMILIES
    if which == 3:
        return TABLE3_CHECKPOINTS, TABLE3_FAMILIES
    raise ValueError(f"no table {which}; choose 1, 2 or 3")


def _column_report(args) -> DensityReport:
    params, checkpoints, cache_dir = args
    parity = cached_copartition_parity(params, checkpoints[-1], cache_dir)
    return density_report(params, checkpoints, parity)


def generate_table(which: int, jobs: int = 1, cache_dir=None) -> TableData:
    """Regenerate one table from scratch; ``jobs`` parallelizes across the
    independent family columns."""
    checkpoints, families = _table_plan(which)
    work = [(params, checkpoints, cache_dir) for params in families]
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            reports = tuple(pool.map(_column_report, work))
    else:
        reports = tuple(_column_report(w) for w in work)
    return TableData(which, checkpoints, reports)
