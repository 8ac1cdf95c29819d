"""Field-operation cost accounting with exact rational arithmetic.

Costs are tallied in the four classical formula-count units: field
multiplications (M), squarings (S), inversions (I), and field additions (A).
A CostVector counts them, CostRatios collapses a vector into M-equivalents,
and a CostLedger records what one scalar-multiplication run actually did.
Totals and percentages stay in fractions.Fraction throughout, so every
derived figure is exact and comparisons in tests need no tolerance.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

OP_KINDS = ("add", "dbl", "neg", "neg_add", "neg_dbl")

_COMPONENTS = ("mul", "sqr", "inv", "add_f")


@dataclass(frozen=True, slots=True)
class CostVector:
    """Nonnegative counts of field operations: M, S, I and A."""

    mul: int = 0
    sqr: int = 0
    inv: int = 0
    add_f: int = 0

    def __post_init__(self) -> None:
        for name in _COMPONENTS:
            value = getattr(self, name)
            if not isinstance(value, int) or isinstance(value, bool) or value < 0:
                raise ValueError(f"{name} count must be a nonnegative integer, got {value!r}")

    def __add__(self, other: CostVector) -> CostVector:
        if not isinstance(other, CostVector):
            return NotImplemented
        return CostVector(
            self.mul + other.mul,
            self.sqr + other.sqr,
            self.inv + other.inv,
            self.add_f + other.add_f,
        )

    def scaled(self, k: int) -> CostVector:
        """Componentwise k-fold multiple."""
        if k < 0:
            raise ValueError(f"scale factor must be nonnegative, got {k}")
        return CostVector(k * self.mul, k * self.sqr, k * self.inv, k * self.add_f)

    def __bool__(self) -> bool:
        return bool(self.mul or self.sqr or self.inv or self.add_f)


ZERO_COST = CostVector()


@dataclass(frozen=True)
class CostRatios:
    """Exact conversion weights into M-equivalents.

    Defaults: a squaring costs 2/3 of a multiplication, an inversion 10
    multiplications, and field additions are not priced.
    """

    sqr_per_mul: Fraction = Fraction(2, 3)
    inv_per_mul: Fraction = Fraction(10)
    addf_per_mul: Fraction = Fraction(0)

    def __post_init__(self) -> None:
        for name in ("sqr_per_mul", "inv_per_mul", "addf_per_mul"):
            ratio = Fraction(getattr(self, name))
            if ratio < 0:
                raise ValueError(f"{name} must be nonnegative, got {ratio}")
            object.__setattr__(self, name, ratio)


DEFAULT_RATIOS = CostRatios()


def weighted_total(cost: CostVector, ratios: CostRatios = DEFAULT_RATIOS) -> Fraction:
    """Collapse a cost vector into exact M-equivalents."""
    return (
        Fraction(cost.mul)
        + cost.sqr * ratios.sqr_per_mul
        + cost.inv * ratios.inv_per_mul
        + cost.add_f * ratios.addf_per_mul
    )


def savings_percent(base: Fraction | int, improved: Fraction | int) -> Fraction:
    """Exact percentage saved going from base to improved: (base - improved) / base * 100."""
    base = Fraction(base)
    if base <= 0:
        raise ValueError(f"base cost must be positive, got {base}")
    return (base - Fraction(improved)) / base * 100


class CostLedger:
    """Mutable per-run tally: how often each operation kind ran and what it cost.

    A ledger belongs to exactly one scalar-multiplication run; disjoint runs
    keep disjoint ledgers and may be merged afterwards, in any order.
    """

    __slots__ = ("_counts", "_sums")

    def __init__(self) -> None:
        self._counts = dict.fromkeys(OP_KINDS, 0)
        self._sums = {kind: [0, 0, 0, 0] for kind in OP_KINDS}

    def charge(self, kind: str, cost: CostVector) -> None:
        """Record one invocation of `kind` at the given cost."""
        try:
            self._counts[kind] += 1
        except KeyError:
            raise ValueError(f"unknown operation kind: {kind!r}") from None
        if cost:
            acc = self._sums[kind]
            acc[0] += cost.mul
            acc[1] += cost.sqr
            acc[2] += cost.inv
            acc[3] += cost.add_f

    def count(self, kind: str) -> int:
        if kind not in self._counts:
            raise ValueError(f"unknown operation kind: {kind!r}")
        return self._counts[kind]

    def counts(self) -> dict[str, int]:
        return dict(self._counts)

    def vector(self, kind: str) -> CostVector:
        if kind not in self._sums:
            raise ValueError(f"unknown operation kind: {kind!r}")
        return CostVector(*self._sums[kind])

    def total(self) -> CostVector:
        """Componentwise sum over all operation kinds."""
        mul = sqr = inv = add_f = 0
        for acc in self._sums.values():
            mul += acc[0]
            sqr += acc[1]
            inv += acc[2]
            add_f += acc[3]
        return CostVector(mul, sqr, inv, add_f)

    def total_weighted(self, ratios: CostRatios = DEFAULT_RATIOS) -> Fraction:
        return weighted_total(self.total(), ratios)

    def merge(self, other: CostLedger) -> None:
        """Fold another run's tallies into this ledger."""
        for kind in OP_KINDS:
            self._counts[kind] += other._counts[kind]
            acc, oacc = self._sums[kind], other._sums[kind]
            for j in range(4):
                acc[j] += oacc[j]

    def copy(self) -> CostLedger:
        dup = CostLedger()
        dup.merge(self)
        return dup

    def __add__(self, other: CostLedger) -> CostLedger:
        if not isinstance(other, CostLedger):
            return NotImplemented
        dup = self.copy()
        dup.merge(other)
        return dup

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, CostLedger):
            return NotImplemented
        return self._counts == other._counts and self._sums == other._sums

    def __repr__(self) -> str:
        parts = ", ".join(f"{kind}={self._counts[kind]}" for kind in OP_KINDS if self._counts[kind])
        return f"CostLedger({parts})"
