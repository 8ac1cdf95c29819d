"""Tests for the group interface, the modular oracle and the cost backends."""

import json
from fractions import Fraction

import pytest

from negmul import (
    HYPERELLIPTIC_PROFILE,
    PICARD_PROFILE,
    CostChargingGroup,
    CostLedger,
    CostProfile,
    CostRatios,
    CostVector,
    ModularGroup,
    NegationAwareGroup,
    ZERO_COST,
    load_profile,
    preset,
    savings_percent,
    weighted_total,
)

SMALL_PRIMES = (5, 7, 11, 31, 97)


class PlainModular(NegationAwareGroup):
    """Supplies only the required operations; fused forms use the defaults."""

    def __init__(self, n):
        self.n = n

    @property
    def identity(self):
        return 0

    def add(self, a, b):
        return (a + b) % self.n

    def dbl(self, a):
        return (a + a) % self.n

    def neg(self, a):
        return -a % self.n


def test_modular_group_axioms_exhaustive():
    for n in SMALL_PRIMES:
        g = ModularGroup(n)
        for a in g.elements():
            assert g.add(a, g.identity) == a
            assert g.add(a, g.neg(a)) == g.identity
            assert g.neg(g.neg(a)) == a
            assert g.dbl(a) == g.add(a, a)
            assert g.neg_dbl(a) == g.neg(g.dbl(a))
            for b in g.elements():
                assert g.add(a, b) == g.add(b, a)
                assert g.neg_add(a, b) == g.neg(g.add(a, b))


def test_default_fused_implementations():
    g = PlainModular(13)
    reference = ModularGroup(13)
    for a in range(13):
        assert g.neg_dbl(a) == reference.neg_dbl(a)
        for b in range(13):
            assert g.neg_add(a, b) == reference.neg_add(a, b)
    assert g.cost_of("add") == ZERO_COST
    assert g.order is None


def test_modular_group_validation_and_metadata():
    with pytest.raises(ValueError, match="positive integer"):
        ModularGroup(0)
    with pytest.raises(ValueError, match="positive integer"):
        ModularGroup("7")
    g = ModularGroup(7)
    assert g.order == 7
    assert list(g.elements()) == list(range(7))
    assert repr(g) == "ModularGroup(7)"


def test_cost_charging_group_is_transparent():
    inner = ModularGroup(97)
    charged = CostChargingGroup(inner, PICARD_PROFILE)
    assert charged.identity == inner.identity
    assert charged.order == inner.order
    for a in inner.elements():
        assert charged.dbl(a) == inner.dbl(a)
        assert charged.neg(a) == inner.neg(a)
        assert charged.neg_dbl(a) == inner.neg_dbl(a)
        for b in inner.elements():
            assert charged.add(a, b) == inner.add(a, b)
            assert charged.neg_add(a, b) == inner.neg_add(a, b)


def test_charging_examples():
    g = CostChargingGroup(ModularGroup(7), PICARD_PROFILE)
    ledger = CostLedger()
    ledger.charge("neg_dbl", g.cost_of("neg_dbl"))
    assert ledger.vector("neg_dbl") == CostVector(147, 13, 2, 0)
    ledger = CostLedger()
    ledger.charge("add", g.cost_of("add"))
    ledger.charge("add", g.cost_of("add"))
    assert ledger.vector("add") == CostVector(288, 24, 4, 0)

    silent = CostProfile("silent", ZERO_COST, ZERO_COST, ZERO_COST, ZERO_COST, ZERO_COST)
    g0 = CostChargingGroup(ModularGroup(7), silent)
    ledger = CostLedger()
    for kind in ("add", "dbl", "neg", "neg_add", "neg_dbl"):
        ledger.charge(kind, g0.cost_of(kind))
    assert ledger.total() == ZERO_COST


def test_picard_preset_vectors():
    profile = preset("picard")
    assert profile is PICARD_PROFILE
    assert profile.add_cost == CostVector(144, 12, 2, 0)
    assert profile.dbl_cost == CostVector(158, 16, 2, 0)
    assert profile.neg_add_cost == CostVector(133, 9, 2, 0)
    assert profile.neg_dbl_cost == CostVector(147, 13, 2, 0)
    assert profile.neg_cost == CostVector(11, 3, 0, 0)
    # the modeled standalone negation is exactly the fused saving
    assert profile.add_cost == profile.neg_add_cost + profile.neg_cost
    assert profile.dbl_cost == profile.neg_dbl_cost + profile.neg_cost


def test_hyperelliptic_preset_vectors():
    profile = preset("hyperelliptic")
    assert profile is HYPERELLIPTIC_PROFILE
    assert profile.neg_cost == ZERO_COST
    assert profile.neg_add_cost == profile.add_cost
    assert profile.neg_dbl_cost == profile.dbl_cost


def test_unknown_preset():
    with pytest.raises(ValueError, match="unknown preset"):
        preset("edwards")


def test_picard_per_step_savings_exact():
    add_saving = savings_percent(
        weighted_total(PICARD_PROFILE.add_cost), weighted_total(PICARD_PROFILE.neg_add_cost)
    )
    dbl_saving = savings_percent(
        weighted_total(PICARD_PROFILE.dbl_cost), weighted_total(PICARD_PROFILE.neg_dbl_cost)
    )
    assert add_saving == Fraction(1300, 172)
    assert dbl_saving == Fraction(3900, 566)


def test_profile_cost_of_rejects_unknown_kind():
    with pytest.raises(ValueError, match="unknown operation kind"):
        PICARD_PROFILE.cost_of("triple")


def test_profile_warns_when_fused_is_dearer():
    with pytest.warns(UserWarning, match="dearer"):
        CostProfile(
            "odd",
            add_cost=CostVector(10),
            dbl_cost=CostVector(10),
            neg_cost=ZERO_COST,
            neg_add_cost=CostVector(11),
            neg_dbl_cost=CostVector(10),
        )


VALID_PROFILE = {
    "add": {"M": 144, "S": 12, "I": 2},
    "dbl": {"M": 158, "S": 16, "I": 2},
    "neg": {"M": 11, "S": 3},
    "neg_add": {"M": 133, "S": 9, "I": 2},
    "neg_dbl": {"M": 147, "S": 13, "I": 2},
}


def _write(tmp_path, data, name="genus3.json"):
    path = tmp_path / name
    path.write_text(json.dumps(data))
    return path


def test_load_profile_valid(tmp_path):
    data = dict(VALID_PROFILE)
    data["ratios"] = {"sqr_per_mul": "2/3", "inv_per_mul": "8"}
    profile, ratios = load_profile(_write(tmp_path, data))
    assert profile.name == "genus3"
    assert profile.add_cost == CostVector(144, 12, 2, 0)
    assert profile.neg_cost == CostVector(11, 3, 0, 0)
    assert ratios == CostRatios(Fraction(2, 3), Fraction(8), Fraction(0))


def test_load_profile_without_ratios(tmp_path):
    profile, ratios = load_profile(_write(tmp_path, VALID_PROFILE))
    assert ratios is None
    assert profile.neg_dbl_cost == CostVector(147, 13, 2, 0)


def test_load_profile_rejects_bad_input(tmp_path):
    with pytest.raises(ValueError, match="missing keys"):
        load_profile(_write(tmp_path, {k: v for k, v in VALID_PROFILE.items() if k != "neg"}))
    data = dict(VALID_PROFILE, extra={"M": 1})
    with pytest.raises(ValueError, match="unknown keys"):
        load_profile(_write(tmp_path, data))
    data = dict(VALID_PROFILE, add={"M": 1, "X": 2})
    with pytest.raises(ValueError, match="unknown components"):
        load_profile(_write(tmp_path, data))
    data = dict(VALID_PROFILE, add={"M": -1})
    with pytest.raises(ValueError, match="nonnegative integer"):
        load_profile(_write(tmp_path, data))
    data = dict(VALID_PROFILE, ratios={"inv_per_mul": 10})
    with pytest.raises(ValueError, match="fraction string"):
        load_profile(_write(tmp_path, data))
    data = dict(VALID_PROFILE, ratios={"inv_per_mul": "ten"})
    with pytest.raises(ValueError, match="inv_per_mul"):
        load_profile(_write(tmp_path, data))
    bad = tmp_path / "bad.json"
    bad.write_text("{not json")
    with pytest.raises(ValueError, match="not valid JSON"):
        load_profile(bad)
    array = tmp_path / "arr.json"
    array.write_text("[1, 2]")
    with pytest.raises(ValueError, match="top level"):
        load_profile(array)
