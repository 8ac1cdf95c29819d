"""Deterministic cost benchmarking: modeled field-operation totals, not wall time.

A bench run draws a seeded sample of fixed-bit-length scalars, runs every
driver the chosen recoding form feeds, and aggregates the per-run ledgers by
summation (order independent, so a fixed seed fully determines the report).
The report keeps every figure as an exact rational; rendering rounds only at
the very end, and only in table mode.
"""

from __future__ import annotations

import json
import math
import random
from dataclasses import dataclass
from fractions import Fraction

from .algorithms import (
    double_and_add,
    mixed_scalar_mul,
    neg_scalar_mul,
    neg_scalar_mul_online,
    windowed_neg_scalar_mul,
)
from .backends import CostChargingGroup, CostProfile, ModularGroup
from .costs import (
    DEFAULT_RATIOS,
    OP_KINDS,
    CostLedger,
    CostRatios,
    CostVector,
    savings_percent,
    weighted_total,
)
from .recoding import binary_expansion, naf, width_w_naf

# Element values never matter for costs; a Mersenne prime keeps them word sized.
BENCH_MODULUS = (1 << 61) - 1

MIN_BITS, MAX_BITS = 8, 4096

RECODING_FORMS = ("binary", "naf", "wnaf")


def sample_scalars(bits: int, count: int, seed: int) -> list[int]:
    """count scalars of exactly `bits` bits: top bit forced, the rest uniform.

    Drawn from random.Random(seed), i.e. the frozen MT19937 generator, so a
    seed pins the sample on every platform and Python version.
    """
    if not MIN_BITS <= bits <= MAX_BITS:
        raise ValueError(f"bits must be in [{MIN_BITS}, {MAX_BITS}], got {bits}")
    if count < 1:
        raise ValueError(f"sample count must be positive, got {count}")
    rng = random.Random(seed)
    top = 1 << (bits - 1)
    return [top | rng.getrandbits(bits - 1) for _ in range(count)]


def algorithms_for_form(form: str) -> tuple[str, ...]:
    """Drivers a bench run covers: the baseline plus every variant the form feeds.

    Wide digits fit only the table-based drivers, so form wnaf benches the
    windowed driver against the (equally tabled) baseline; binary and naf
    feed all the {-1, 0, 1} drivers.
    """
    if form == "wnaf":
        return ("baseline", "window")
    return ("baseline", "neg", "online", "neg-dbl-only", "neg-add-only")


@dataclass(frozen=True)
class StepCosts:
    """Weighted cost of one plain step against its fused counterpart."""

    plain: Fraction
    fused: Fraction
    savings: Fraction


@dataclass(frozen=True)
class AlgorithmEntry:
    """Aggregated accounting for one driver across the whole sample."""

    algo_id: str
    ledger: CostLedger
    total_weighted: Fraction
    mean_weighted: Fraction
    savings_vs_baseline: Fraction | None


@dataclass(frozen=True)
class BenchReport:
    """Everything a bench run measured, exact; renders to a table or JSON."""

    preset: str
    ratios: CostRatios
    bits: int
    samples: int
    form: str
    width: int | None
    seed: int
    per_step: dict[str, StepCosts]
    algorithms: tuple[AlgorithmEntry, ...]

    def to_dict(self) -> dict:
        algorithms = []
        for entry in self.algorithms:
            ops = {}
            for kind in OP_KINDS:
                vec = entry.ledger.vector(kind)
                ops[kind] = {
                    "count": entry.ledger.count(kind),
                    "mul": vec.mul,
                    "sqr": vec.sqr,
                    "inv": vec.inv,
                    "add_f": vec.add_f,
                }
            savings = entry.savings_vs_baseline
            algorithms.append(
                {
                    "id": entry.algo_id,
                    "ops": ops,
                    "total_weighted": str(entry.total_weighted),
                    "mean_weighted": str(entry.mean_weighted),
                    "savings_vs_baseline_percent": None if savings is None else str(savings),
                }
            )
        return {
            "preset": self.preset,
            "ratios": {
                "sqr_per_mul": str(self.ratios.sqr_per_mul),
                "inv_per_mul": str(self.ratios.inv_per_mul),
                "addf_per_mul": str(self.ratios.addf_per_mul),
            },
            "sample": {
                "bits": self.bits,
                "count": self.samples,
                "form": self.form,
                "width": self.width,
                "seed": self.seed,
            },
            "per_step": {
                name: {
                    "plain": str(step.plain),
                    "fused": str(step.fused),
                    "savings_percent": str(step.savings),
                }
                for name, step in self.per_step.items()
            },
            "algorithms": algorithms,
        }

    def to_json(self) -> str:
        """Canonical JSON: sorted keys, two-space indent; byte stable for a seed."""
        return json.dumps(self.to_dict(), sort_keys=True, indent=2)

    def render_table(self) -> str:
        r = self.ratios
        width_note = f", width={self.width}" if self.width is not None else ""
        lines = [
            f"preset: {self.preset}",
            f"ratios: sqr_per_mul={r.sqr_per_mul} inv_per_mul={r.inv_per_mul} "
            f"addf_per_mul={r.addf_per_mul}",
            f"sample: {self.samples} scalars of {self.bits} bits, "
            f"form={self.form}{width_note}, seed={self.seed}",
            "",
            "per-step cost (M-equivalents)",
            f"  {'step':<6} {'plain':>10} {'fused':>10} {'saving':>9}",
        ]
        for name in ("add", "dbl"):
            step = self.per_step[name]
            lines.append(
                f"  {name:<6} {_decimal(step.plain):>10} {_decimal(step.fused):>10} "
                f"{_decimal(step.savings):>8}%"
            )
        lines += [
            "",
            "whole-multiplication cost (M-equivalents)",
            f"  {'algorithm':<14} {'mean cost':>12} {'saving vs baseline':>20}",
        ]
        for entry in self.algorithms:
            if entry.savings_vs_baseline is None:
                saving = "-"
            else:
                saving = f"{_decimal(entry.savings_vs_baseline)}%"
            lines.append(f"  {entry.algo_id:<14} {_decimal(entry.mean_weighted):>12} {saving:>20}")
        return "\n".join(lines)


def run_bench(
    profile: CostProfile,
    *,
    bits: int,
    samples: int,
    form: str = "naf",
    width: int = 4,
    ratios: CostRatios = DEFAULT_RATIOS,
    seed: int = 0,
) -> BenchReport:
    """Run every applicable driver over a seeded sample and aggregate exact costs."""
    if form not in RECODING_FORMS:
        raise ValueError(f"unknown recoding form {form!r}; expected one of {RECODING_FORMS}")
    scalars = sample_scalars(bits, samples, seed)
    group = CostChargingGroup(ModularGroup(BENCH_MODULUS), profile)
    algo_ids = algorithms_for_form(form)
    totals = {algo: CostLedger() for algo in algo_ids}
    for m in scalars:
        if form == "binary":
            e = binary_expansion(m)
        elif form == "naf":
            e = naf(m)
        else:
            e = width_w_naf(m, width)
        for algo in algo_ids:
            totals[algo].merge(_drive(algo, e, group, width))
    base_total = weighted_total(totals["baseline"].total(), ratios)
    entries = []
    for algo in algo_ids:
        total = weighted_total(totals[algo].total(), ratios)
        savings = savings_percent(base_total, total) if base_total > 0 else None
        entries.append(AlgorithmEntry(algo, totals[algo], total, total / samples, savings))
    per_step = {
        "add": _step_costs(profile.add_cost, profile.neg_add_cost, ratios),
        "dbl": _step_costs(profile.dbl_cost, profile.neg_dbl_cost, ratios),
    }
    return BenchReport(
        preset=profile.name,
        ratios=ratios,
        bits=bits,
        samples=samples,
        form=form,
        width=width if form == "wnaf" else None,
        seed=seed,
        per_step=per_step,
        algorithms=tuple(entries),
    )


def _drive(algo: str, e, group, width: int) -> CostLedger:
    if algo == "baseline":
        return double_and_add(e, 1, group).ledger
    if algo == "neg":
        return neg_scalar_mul(e, 1, group).ledger
    if algo == "online":
        return neg_scalar_mul_online(e, 1, group).ledger
    if algo == "neg-dbl-only":
        return mixed_scalar_mul(e, 1, group, "neg_doubling_only").ledger
    if algo == "neg-add-only":
        return mixed_scalar_mul(e, 1, group, "neg_addition_only").ledger
    return windowed_neg_scalar_mul(e, 1, group, width).ledger


def _step_costs(plain_cost: CostVector, fused_cost: CostVector, ratios: CostRatios) -> StepCosts:
    plain = weighted_total(plain_cost, ratios)
    fused = weighted_total(fused_cost, ratios)
    savings = savings_percent(plain, fused) if plain > 0 else Fraction(0)
    return StepCosts(plain, fused, savings)


def _decimal(x: Fraction) -> str:
    """Render an exact rational to 4 significant decimal digits."""
    value = float(x)
    if value == 0:
        return "0"
    decimals = 3 - math.floor(math.log10(abs(value)))
    if decimals <= 0:
        return f"{round(value, decimals):.0f}"
    return f"{value:.{decimals}f}"
