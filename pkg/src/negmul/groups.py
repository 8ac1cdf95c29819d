"""The group interface every scalar-multiplication driver runs against.

An implementation supplies add, dbl and neg over opaque, equality-comparable
elements, and may override the fused forms neg_add and neg_dbl when negating
inside the formula is cheaper than negating afterwards. The fused forms must
return exactly neg(add(a, b)) and neg(dbl(a)); only their advertised cost may
differ. All operations are required to be pure in their elements, so any
number of runs may share one group instance.
"""

from __future__ import annotations

from abc import ABC, abstractmethod
from typing import Any

from .costs import CostVector, ZERO_COST

Element = Any


class NegationAwareGroup(ABC):
    """Finite abelian group with (possibly cheaper) fused negated operations."""

    @property
    @abstractmethod
    def identity(self) -> Element:
        """The neutral element."""

    @abstractmethod
    def add(self, a: Element, b: Element) -> Element:
        """a + b."""

    @abstractmethod
    def dbl(self, a: Element) -> Element:
        """a + a."""

    @abstractmethod
    def neg(self, a: Element) -> Element:
        """-a."""

    def neg_add(self, a: Element, b: Element) -> Element:
        """-(a + b); override when the fused form is cheaper."""
        return self.neg(self.add(a, b))

    def neg_dbl(self, a: Element) -> Element:
        """-(a + a); override when the fused form is cheaper."""
        return self.neg(self.dbl(a))

    def cost_of(self, kind: str) -> CostVector:
        """Modeled field-operation cost of one invocation of `kind`.

        Zero unless a cost model is attached (see CostChargingGroup).
        """
        return ZERO_COST

    @property
    def order(self) -> int | None:
        """Group order when known, else None. The drivers never require it."""
        return None
