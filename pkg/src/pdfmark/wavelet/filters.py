"""Orthogonal Daubechies and Symlet filter banks.

Coefficients come from ``_filter_table``, generated offline by
``tools/gen_filters.py`` (spectral factorization of the Daubechies
half-band polynomial in 80-digit arithmetic, minimum-phase roots for ``db``
and the most nearly linear-phase root set for ``sym``).
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from ..errors import UnsupportedWavelet
from . import _filter_table

ORDERS = {
    "db": range(1, 46),
    "sym": range(2, 21),
}

_NAME_RE = re.compile(r"^(db|sym)(\d+)$")


@dataclass(frozen=True)
class WaveletSpec:
    family: str
    order: int

    def __post_init__(self):
        if self.family not in ORDERS:
            raise UnsupportedWavelet(f"unknown wavelet family {self.family!r}")
        if self.order not in ORDERS[self.family]:
            r = ORDERS[self.family]
            raise UnsupportedWavelet(
                f"{self.family}{self.order} not supported "
                f"(orders {r.start}..{r.stop - 1})"
            )

    @classmethod
    def parse(cls, name: str | WaveletSpec) -> WaveletSpec:
        """Accept ``"db4"``, ``"sym8"``, ``"haar"`` or an existing spec."""
        if isinstance(name, WaveletSpec):
            return name
        name = name.strip().lower()
        if name == "haar":
            return cls("db", 1)
        m = _NAME_RE.match(name)
        if not m:
            raise UnsupportedWavelet(f"cannot parse wavelet name {name!r}")
        return cls(m.group(1), int(m.group(2)))

    @property
    def name(self) -> str:
        return f"{self.family}{self.order}"

    @property
    def filter_length(self) -> int:
        return 2 * self.order

    def __str__(self):
        return self.name


@dataclass(frozen=True)
class FilterBank:
    """Analysis (``dec_*``) and synthesis (``rec_*``) filters.

    Orientation follows the common convention where ``dec_lo`` is the
    time-reverse of ``rec_lo`` and ``rec_hi[i] = (-1)**i * rec_lo[L-1-i]``.
    """

    dec_lo: np.ndarray
    dec_hi: np.ndarray
    rec_lo: np.ndarray
    rec_hi: np.ndarray

    def __len__(self):
        return len(self.rec_lo)


@lru_cache(maxsize=None)
def build_filters(spec: WaveletSpec | str) -> FilterBank:
    spec = WaveletSpec.parse(spec)
    table = _filter_table.DB if spec.family == "db" else _filter_table.SYM
    rec_lo = np.array(table[spec.order], dtype=np.float64)
    signs = np.where(np.arange(len(rec_lo)) % 2 == 0, 1.0, -1.0)
    rec_hi = signs * rec_lo[::-1]
    bank = FilterBank(
        dec_lo=rec_lo[::-1].copy(),
        dec_hi=rec_hi[::-1].copy(),
        rec_lo=rec_lo,
        rec_hi=rec_hi,
    )
    for arr in (bank.dec_lo, bank.dec_hi, bank.rec_lo, bank.rec_hi):
        arr.setflags(write=False)
    return bank
