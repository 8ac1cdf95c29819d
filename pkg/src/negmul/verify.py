"""Exhaustive agreement checking of every driver against modular arithmetic."""

from __future__ import annotations

from functools import lru_cache
from typing import Callable, Mapping, NamedTuple

from .algorithms import (
    double_and_add,
    mixed_scalar_mul,
    neg_scalar_mul,
    neg_scalar_mul_online,
    windowed_neg_scalar_mul,
)
from .backends import ModularGroup
from .groups import NegationAwareGroup
from .recoding import SignedExpansion, binary_expansion, naf, width_w_naf

VERIFY_PRIMES = (5, 7, 11, 31, 97)

MAX_VERIFY_N = 512

Driver = Callable[[int, int, NegationAwareGroup], int]


class Mismatch(NamedTuple):
    n: int
    D: int
    m: int
    algorithm: str
    got: int
    expected: int


def default_verify_algorithms(widths: tuple[int, ...] = (2, 3, 4)) -> dict[str, Driver]:
    """Drivers keyed by id, each mapping (m, D, group) to the computed product.

    Recodings are cached across calls, so exhaustive sweeps recode each
    scalar once per form no matter how many moduli and bases they cover.
    """
    bin_of = lru_cache(maxsize=None)(binary_expansion)
    naf_of = lru_cache(maxsize=None)(naf)
    wnaf_of = lru_cache(maxsize=None)(width_w_naf)

    def driver(recode: Callable[[int], SignedExpansion], compute) -> Driver:
        def run(m: int, D: int, group: NegationAwareGroup) -> int:
            if m == 0:
                return group.identity
            return compute(recode(m), D, group)

        return run

    algorithms: dict[str, Driver] = {
        "baseline": driver(bin_of, lambda e, D, g: double_and_add(e, D, g).element),
        "neg": driver(naf_of, lambda e, D, g: neg_scalar_mul(e, D, g).element),
        "online": driver(naf_of, lambda e, D, g: neg_scalar_mul_online(e, D, g).element),
        "neg-dbl-only": driver(
            naf_of, lambda e, D, g: mixed_scalar_mul(e, D, g, "neg_doubling_only").element
        ),
        "neg-add-only": driver(
            naf_of, lambda e, D, g: mixed_scalar_mul(e, D, g, "neg_addition_only").element
        ),
    }
    for w in widths:
        algorithms[f"window-w{w}"] = driver(
            lambda m, w=w: wnaf_of(m, w),
            lambda e, D, g, w=w: windowed_neg_scalar_mul(e, D, g, w).element,
        )
    return algorithms


def verify_universal_agreement(
    max_n: int = 97,
    multiplier: int = 4,
    algorithms: Mapping[str, Driver] | None = None,
    max_mismatches: int = 10,
) -> tuple[int, list[Mismatch]]:
    """Compare every driver against (m * D) mod n over the bundled prime moduli.

    Covers every prime n <= max_n from VERIFY_PRIMES, every base element D
    in Z/n, and every scalar m below multiplier * n. Returns the number of
    products checked and the mismatches found (capped at max_mismatches).
    """
    if not 1 <= max_n <= MAX_VERIFY_N:
        raise ValueError(f"max_n must be in [1, {MAX_VERIFY_N}], got {max_n}")
    if multiplier < 1:
        raise ValueError(f"multiplier must be positive, got {multiplier}")
    algs = dict(algorithms) if algorithms is not None else default_verify_algorithms()
    checked = 0
    mismatches: list[Mismatch] = []
    for n in (p for p in VERIFY_PRIMES if p <= max_n):
        group = ModularGroup(n)
        for m in range(multiplier * n):
            for D in range(n):
                expected = (m * D) % n
                for name, drive in algs.items():
                    got = drive(m, D, group)
                    checked += 1
                    if got != expected:
                        mismatches.append(Mismatch(n, D, m, name, got, expected))
                        if len(mismatches) >= max_mismatches:
                            return checked, mismatches
    return checked, mismatches
