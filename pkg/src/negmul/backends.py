"""Concrete groups: the exact modular oracle and the cost-model wrapper."""

from __future__ import annotations

import json
import warnings
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path

from .costs import CostRatios, CostVector, weighted_total
from .groups import Element, NegationAwareGroup


class ModularGroup(NegationAwareGroup):
    """Additive group of residues modulo n.

    Products m * D are directly checkable with integer arithmetic, which
    makes this the correctness oracle for every driver. Elements are ints in
    [0, n); all operations cost zero.
    """

    __slots__ = ("n",)

    def __init__(self, n: int) -> None:
        if not isinstance(n, int) or isinstance(n, bool) or n < 1:
            raise ValueError(f"modulus must be a positive integer, got {n!r}")
        self.n = n

    @property
    def identity(self) -> int:
        return 0

    @property
    def order(self) -> int:
        return self.n

    def elements(self) -> range:
        """All residues, for exhaustive checks."""
        return range(self.n)

    def add(self, a: int, b: int) -> int:
        return (a + b) % self.n

    def dbl(self, a: int) -> int:
        return (a + a) % self.n

    def neg(self, a: int) -> int:
        return -a % self.n

    def neg_add(self, a: int, b: int) -> int:
        return -(a + b) % self.n

    def neg_dbl(self, a: int) -> int:
        return -(a + a) % self.n

    def __repr__(self) -> str:
        return f"ModularGroup({self.n})"


@dataclass(frozen=True)
class CostProfile:
    """Named per-operation cost vectors for one family of group arithmetic."""

    name: str
    add_cost: CostVector
    dbl_cost: CostVector
    neg_cost: CostVector
    neg_add_cost: CostVector
    neg_dbl_cost: CostVector

    def __post_init__(self) -> None:
        # Fusing the negation should never price above the two-step form; a
        # profile violating that is suspicious but still usable.
        for plain, fused, label in (
            (self.add_cost, self.neg_add_cost, "neg_add"),
            (self.dbl_cost, self.neg_dbl_cost, "neg_dbl"),
        ):
            if weighted_total(fused) > weighted_total(plain) + weighted_total(self.neg_cost):
                warnings.warn(
                    f"cost profile {self.name!r}: {label} is dearer than the unfused "
                    "operation plus a negation at the default ratios"
                )

    def cost_of(self, kind: str) -> CostVector:
        mapping = {
            "add": self.add_cost,
            "dbl": self.dbl_cost,
            "neg": self.neg_cost,
            "neg_add": self.neg_add_cost,
            "neg_dbl": self.neg_dbl_cost,
        }
        try:
            return mapping[kind]
        except KeyError:
            raise ValueError(f"unknown operation kind: {kind!r}") from None


# Generic-case divisor arithmetic on Picard curves. The geometric addition
# ends with a negation that the fused forms skip, which is what the cheaper
# neg_add/neg_dbl vectors price. A standalone negation is modeled as the
# difference add - neg_add, the best estimate available for this family.
PICARD_PROFILE = CostProfile(
    name="picard",
    add_cost=CostVector(mul=144, sqr=12, inv=2),
    dbl_cost=CostVector(mul=158, sqr=16, inv=2),
    neg_cost=CostVector(mul=11, sqr=3),
    neg_add_cost=CostVector(mul=133, sqr=9, inv=2),
    neg_dbl_cost=CostVector(mul=147, sqr=13, inv=2),
)

# Hyperelliptic Jacobians: negation is practically free, so fusing buys
# nothing. The add/dbl counts are illustrative ballpark figures only; the
# preset exists to demonstrate the near-zero saving, and any profile with
# the neg_* vectors equal to the plain ones shows the same.
HYPERELLIPTIC_PROFILE = CostProfile(
    name="hyperelliptic",
    add_cost=CostVector(mul=70, sqr=6, inv=1),
    dbl_cost=CostVector(mul=71, sqr=8, inv=1),
    neg_cost=CostVector(),
    neg_add_cost=CostVector(mul=70, sqr=6, inv=1),
    neg_dbl_cost=CostVector(mul=71, sqr=8, inv=1),
)

_PRESETS = {profile.name: profile for profile in (PICARD_PROFILE, HYPERELLIPTIC_PROFILE)}


def preset(name: str) -> CostProfile:
    """Look up a bundled cost profile by name."""
    try:
        return _PRESETS[name]
    except KeyError:
        raise ValueError(f"unknown preset {name!r}; available: {sorted(_PRESETS)}") from None


_VECTOR_KEYS = ("add", "dbl", "neg", "neg_add", "neg_dbl")
_COMPONENT_KEYS = ("M", "S", "I", "A")
_COMPONENT_FIELDS = ("mul", "sqr", "inv", "add_f")
_RATIO_KEYS = ("sqr_per_mul", "inv_per_mul", "addf_per_mul")


def load_profile(path: str | Path) -> tuple[CostProfile, CostRatios | None]:
    """Read a custom cost profile from a JSON file.

    Layout: one object per operation kind under the keys add, dbl, neg,
    neg_add and neg_dbl, each mapping M/S/I/A to nonnegative integer counts
    (omitted components default to 0), plus an optional ratios object whose
    values are exact fraction strings such as "2/3". Unknown keys anywhere
    are rejected.
    """
    path = Path(path)
    try:
        data = json.loads(path.read_text())
    except json.JSONDecodeError as exc:
        raise ValueError(f"{path}: not valid JSON: {exc}") from exc
    if not isinstance(data, dict):
        raise ValueError(f"{path}: top level must be a JSON object")
    unknown = sorted(set(data) - set(_VECTOR_KEYS) - {"ratios"})
    if unknown:
        raise ValueError(f"{path}: unknown keys {unknown}")
    missing = sorted(set(_VECTOR_KEYS) - set(data))
    if missing:
        raise ValueError(f"{path}: missing keys {missing}")
    vectors = {key: _parse_vector(path, key, data[key]) for key in _VECTOR_KEYS}
    ratios = _parse_ratios(path, data["ratios"]) if "ratios" in data else None
    profile = CostProfile(
        name=path.stem,
        add_cost=vectors["add"],
        dbl_cost=vectors["dbl"],
        neg_cost=vectors["neg"],
        neg_add_cost=vectors["neg_add"],
        neg_dbl_cost=vectors["neg_dbl"],
    )
    return profile, ratios


def _parse_vector(path: Path, key: str, obj: object) -> CostVector:
    if not isinstance(obj, dict):
        raise ValueError(f"{path}: {key} must be an object of M/S/I/A counts")
    unknown = sorted(set(obj) - set(_COMPONENT_KEYS))
    if unknown:
        raise ValueError(f"{path}: {key} has unknown components {unknown}")
    counts = {}
    for component, field in zip(_COMPONENT_KEYS, _COMPONENT_FIELDS):
        value = obj.get(component, 0)
        if not isinstance(value, int) or isinstance(value, bool) or value < 0:
            raise ValueError(
                f"{path}: {key}.{component} must be a nonnegative integer, got {value!r}"
            )
        counts[field] = value
    return CostVector(**counts)


def _parse_ratios(path: Path, obj: object) -> CostRatios:
    if not isinstance(obj, dict):
        raise ValueError(f"{path}: ratios must be a JSON object")
    unknown = sorted(set(obj) - set(_RATIO_KEYS))
    if unknown:
        raise ValueError(f"{path}: ratios has unknown keys {unknown}")
    kwargs = {}
    for key in _RATIO_KEYS:
        if key in obj:
            raw = obj[key]
            if not isinstance(raw, str):
                raise ValueError(f'{path}: ratios.{key} must be a fraction string like "2/3"')
            try:
                kwargs[key] = Fraction(raw)
            except (ValueError, ZeroDivisionError) as exc:
                raise ValueError(f"{path}: ratios.{key}: {exc}") from exc
    return CostRatios(**kwargs)


class CostChargingGroup(NegationAwareGroup):
    """Wraps another group: identical element math, costs priced by a profile.

    Results are exactly the inner group's; only cost_of changes, so ledgers
    recorded against this group carry the profile's field-operation counts.
    """

    __slots__ = ("inner", "profile")

    def __init__(self, inner: NegationAwareGroup, profile: CostProfile) -> None:
        self.inner = inner
        self.profile = profile

    @property
    def identity(self) -> Element:
        return self.inner.identity

    @property
    def order(self) -> int | None:
        return self.inner.order

    def add(self, a: Element, b: Element) -> Element:
        return self.inner.add(a, b)

    def dbl(self, a: Element) -> Element:
        return self.inner.dbl(a)

    def neg(self, a: Element) -> Element:
        return self.inner.neg(a)

    def neg_add(self, a: Element, b: Element) -> Element:
        return self.inner.neg_add(a, b)

    def neg_dbl(self, a: Element) -> Element:
        return self.inner.neg_dbl(a)

    def cost_of(self, kind: str) -> CostVector:
        return self.profile.cost_of(kind)

    def __repr__(self) -> str:
        return f"CostChargingGroup({self.inner!r}, profile={self.profile.name!r})"
