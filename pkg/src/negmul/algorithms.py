"""Scalar-multiplication drivers over a negation-aware group.

Every driver walks a signed-digit expansion most-significant digit first and
returns the product together with a ledger of the group operations it
performed. The negating drivers keep the intermediate result correct only up
to sign: a one-bit flag f counts negations mod 2 and maintains

    (-1)**f * E  ==  (value of the digits consumed so far) * D

after every step. Doublings become fused negate-doubles, digit additions
become fused negate-adds, and because the addend is picked from the stored
pair {D, -D} (or from the odd-multiples table and its negatives), the digit
value never multiplies anything; the bookkeeping is one integer flip per
group operation.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Literal, NamedTuple

from .costs import CostLedger, OP_KINDS
from .groups import Element, NegationAwareGroup
from .recoding import SignedExpansion, binary_expansion, naf, width_w_naf

MixedMode = Literal["neg_doubling_only", "neg_addition_only"]

MIXED_MODES = ("neg_doubling_only", "neg_addition_only")

ALGORITHM_IDS = ("baseline", "neg", "online", "neg-dbl-only", "neg-add-only", "window")


class TraceStep(NamedTuple):
    """One recorded step: the operation, then the flag and element after it."""

    kind: str
    f: int
    element: Element


@dataclass
class MulResult:
    """Product element plus the accounting for the run that produced it.

    table_ledger, when present, is the portion of ledger spent constructing
    the odd-multiples table (its charges are included in ledger as well).
    """

    element: Element
    ledger: CostLedger
    trace: list[TraceStep] | None = None
    table_ledger: CostLedger | None = None


class _Run:
    """Per-run recorder: forwards operations to the group and tallies them."""

    __slots__ = ("group", "ledger", "trace", "_price")

    def __init__(self, group: NegationAwareGroup, trace: bool) -> None:
        self.group = group
        self.ledger = CostLedger()
        self.trace: list[TraceStep] | None = [] if trace else None
        self._price = {kind: group.cost_of(kind) for kind in OP_KINDS}

    def add(self, a: Element, b: Element) -> Element:
        self.ledger.charge("add", self._price["add"])
        return self.group.add(a, b)

    def dbl(self, a: Element) -> Element:
        self.ledger.charge("dbl", self._price["dbl"])
        return self.group.dbl(a)

    def neg(self, a: Element) -> Element:
        self.ledger.charge("neg", self._price["neg"])
        return self.group.neg(a)

    def neg_add(self, a: Element, b: Element) -> Element:
        self.ledger.charge("neg_add", self._price["neg_add"])
        return self.group.neg_add(a, b)

    def neg_dbl(self, a: Element) -> Element:
        self.ledger.charge("neg_dbl", self._price["neg_dbl"])
        return self.group.neg_dbl(a)

    def note(self, kind: str, f: int, element: Element) -> None:
        if self.trace is not None:
            self.trace.append(TraceStep(kind, f, element))


def _require_nonempty(e: SignedExpansion) -> None:
    if e.length == 0:
        raise ValueError("empty expansion: map m = 0 to the identity before dispatching")


def _require_unit_digits(e: SignedExpansion) -> None:
    _require_nonempty(e)
    if e.digits[0] != 1:
        raise ValueError(f"leading digit must be +1, got {e.digits[0]}")
    if e.digit_bound > 1:
        for d in e.digits:
            if d not in (-1, 0, 1):
                raise ValueError(f"digits must lie in {{-1, 0, 1}}, got {d}")


def _odd_multiples(
    run: _Run, D: Element, bound: int
) -> tuple[dict[int, Element], dict[int, Element]]:
    """Tables r -> r*D and r -> -(r*D) for odd r in [1, bound].

    Chain: 2D once, then successive additions; one negation per entry.
    """
    positive = {1: D}
    if bound >= 3:
        two_d = run.dbl(D)
        current = D
        for r in range(3, bound + 1, 2):
            current = run.add(current, two_d)
            positive[r] = current
    negative = {r: run.neg(p) for r, p in positive.items()}
    return positive, negative


def double_and_add(
    e: SignedExpansion,
    D: Element,
    group: NegationAwareGroup,
    *,
    trace: bool = False,
) -> MulResult:
    """Classical left-to-right double-and-add; the costing baseline.

    Accepts any valid expansion. Digit sets beyond {-1, 0, 1} get the same
    odd-multiples table the windowed driver builds, so the two stay cost
    comparable; for signed binary digits only -D is precomputed, and only
    when a negative digit actually occurs.
    """
    run = _Run(group, trace)
    if e.length == 0:
        return MulResult(group.identity, run.ledger, run.trace)
    table_ledger = None
    if e.digit_bound == 1:
        positive = {1: D}
        negative = {1: run.neg(D)} if any(d < 0 for d in e.digits) else {}
    else:
        positive, negative = _odd_multiples(run, D, e.digit_bound)
        table_ledger = run.ledger.copy()
    E = positive[e.digits[0]]
    run.note("init", 0, E)
    for d in e.digits[1:]:
        E = run.dbl(E)
        run.note("dbl", 0, E)
        if d:
            E = run.add(E, positive[d] if d > 0 else negative[-d])
            run.note("add", 0, E)
    return MulResult(E, run.ledger, run.trace, table_ledger)


def _fused_digit_loop(
    run: _Run,
    e: SignedExpansion,
    plus_d: Element,
    minus_d: Element,
    E: Element,
    f: int,
) -> tuple[Element, int]:
    for d in e.digits[1:]:
        E = run.neg_dbl(E)
        f = 1 - f
        run.note("neg_dbl", f, E)
        if d:
            addend = plus_d if (d > 0) == (f == 0) else minus_d
            E = run.neg_add(E, addend)
            f = 1 - f
            run.note("neg_add", f, E)
    return E, f


def neg_scalar_mul(
    e: SignedExpansion,
    D: Element,
    group: NegationAwareGroup,
    *,
    trace: bool = False,
) -> MulResult:
    """Fully fused sign-tracking scalar multiplication.

    Starts from (-1)**f * D with f = (length + weight) mod 2; that initial
    parity absorbs the length + weight - 2 negations the loop introduces, so
    the flag always closes at 0 and the output needs no correction. The loop
    performs exactly length - 1 fused doubles and weight - 1 fused adds, on
    top of the single negation that stores -D.
    """
    _require_unit_digits(e)
    run = _Run(group, trace)
    minus_d = run.neg(D)
    f = (e.length + e.weight) % 2
    E = minus_d if f else D
    run.note("init", f, E)
    E, f = _fused_digit_loop(run, e, D, minus_d, E, f)
    return MulResult(E, run.ledger, run.trace)


def neg_scalar_mul_online(
    e: SignedExpansion,
    D: Element,
    group: NegationAwareGroup,
    *,
    trace: bool = False,
) -> MulResult:
    """Sign-tracking multiplication that needs no lookahead.

    Starts from E = D, f = 0 without consulting the expansion's length or
    weight (the digits may be consumed as a stream) and repairs the sign at
    the end with one extra negation whenever the flag closes at 1, which
    happens for about half of all scalars.
    """
    _require_unit_digits(e)
    run = _Run(group, trace)
    minus_d = run.neg(D)
    E, f = D, 0
    run.note("init", f, E)
    E, f = _fused_digit_loop(run, e, D, minus_d, E, f)
    if f:
        E = run.neg(E)
        f = 0
        run.note("final_neg", f, E)
    return MulResult(E, run.ledger, run.trace)


def mixed_scalar_mul(
    e: SignedExpansion,
    D: Element,
    group: NegationAwareGroup,
    mode: MixedMode,
    *,
    trace: bool = False,
) -> MulResult:
    """Sign tracking with only one of the two operations fused.

    neg_doubling_only: every doubling is a fused negate-double while digit
    additions stay plain adds of (-1)**f * d * D, so only doublings flip the
    flag; the starting parity (length - 1) mod 2 closes it at 0.

    neg_addition_only: doublings stay plain and every nonzero digit is a
    fused negate-add; the starting parity (weight - 1) mod 2 closes the flag
    at 0.
    """
    if mode not in MIXED_MODES:
        raise ValueError(f"unknown mode {mode!r}; expected one of {MIXED_MODES}")
    _require_unit_digits(e)
    run = _Run(group, trace)
    minus_d = run.neg(D)
    fuse_dbl = mode == "neg_doubling_only"
    f = (e.length - 1) % 2 if fuse_dbl else (e.weight - 1) % 2
    E = minus_d if f else D
    run.note("init", f, E)
    for d in e.digits[1:]:
        if fuse_dbl:
            E = run.neg_dbl(E)
            f = 1 - f
            run.note("neg_dbl", f, E)
        else:
            E = run.dbl(E)
            run.note("dbl", f, E)
        if d:
            addend = D if (d > 0) == (f == 0) else minus_d
            if fuse_dbl:
                E = run.add(E, addend)
                run.note("add", f, E)
            else:
                E = run.neg_add(E, addend)
                f = 1 - f
                run.note("neg_add", f, E)
    return MulResult(E, run.ledger, run.trace)


def windowed_neg_scalar_mul(
    e: SignedExpansion,
    D: Element,
    group: NegationAwareGroup,
    w: int,
    *,
    trace: bool = False,
) -> MulResult:
    """Sign-tracking multiplication over a width-w table of odd multiples.

    Precomputes r*D and -(r*D) for odd r below 2**(w-1); a nonzero digit
    then resolves (-1)**f * d * D by table lookup. The sign runs in the
    no-lookahead style: start at the leading digit's table entry with f = 0
    and negate once at the end if the flag closes at 1. Table construction
    is reported separately in table_ledger.
    """
    if not 2 <= w <= 16:
        raise ValueError(f"width must be in [2, 16], got {w}")
    _require_nonempty(e)
    bound = (1 << (w - 1)) - 1
    for d in e.digits:
        if d and (abs(d) > bound or d % 2 == 0):
            raise ValueError(f"digit {d} outside the width-{w} table range")
    run = _Run(group, trace)
    positive, negative = _odd_multiples(run, D, bound)
    table_ledger = run.ledger.copy()
    E, f = positive[e.digits[0]], 0
    run.note("init", f, E)
    for d in e.digits[1:]:
        E = run.neg_dbl(E)
        f = 1 - f
        run.note("neg_dbl", f, E)
        if d:
            s = d if f == 0 else -d
            E = run.neg_add(E, positive[s] if s > 0 else negative[-s])
            f = 1 - f
            run.note("neg_add", f, E)
    if f:
        E = run.neg(E)
        f = 0
        run.note("final_neg", f, E)
    return MulResult(E, run.ledger, run.trace, table_ledger)


def scalar_mul(
    m: int,
    D: Element,
    group: NegationAwareGroup,
    algo: str = "neg",
    *,
    form: str | None = None,
    width: int = 4,
    trace: bool = False,
) -> MulResult:
    """Recode m as the chosen driver requires and run it.

    Handles what the drivers refuse: m = 0 returns the identity, m = 1
    returns D, and a negative m negates the base first (one charged
    negation). `form` picks the recoding for the non-windowed drivers
    (binary for the baseline, naf for the negating ones, when unspecified);
    the windowed driver always uses the width-`width` NAF.
    """
    if algo not in ALGORITHM_IDS:
        raise ValueError(f"unknown algorithm {algo!r}; expected one of {ALGORITHM_IDS}")
    head: CostLedger | None = None
    if m < 0:
        head = CostLedger()
        head.charge("neg", group.cost_of("neg"))
        m, D = -m, group.neg(D)
    if m == 0:
        return MulResult(group.identity, head or CostLedger())
    if m == 1:
        return MulResult(D, head or CostLedger())
    e = _recode_for(m, algo, form, width)
    if algo == "baseline":
        result = double_and_add(e, D, group, trace=trace)
    elif algo == "neg":
        result = neg_scalar_mul(e, D, group, trace=trace)
    elif algo == "online":
        result = neg_scalar_mul_online(e, D, group, trace=trace)
    elif algo == "neg-dbl-only":
        result = mixed_scalar_mul(e, D, group, "neg_doubling_only", trace=trace)
    elif algo == "neg-add-only":
        result = mixed_scalar_mul(e, D, group, "neg_addition_only", trace=trace)
    else:
        result = windowed_neg_scalar_mul(e, D, group, width, trace=trace)
    if head is not None:
        head.merge(result.ledger)
        result.ledger = head
    return result


def _recode_for(m: int, algo: str, form: str | None, width: int) -> SignedExpansion:
    if algo == "window":
        return width_w_naf(m, width)
    if form is None:
        form = "binary" if algo == "baseline" else "naf"
    if form == "binary":
        return binary_expansion(m)
    if form == "naf":
        return naf(m)
    if form == "wnaf":
        return width_w_naf(m, width)
    raise ValueError(f"unknown recoding form {form!r}; expected binary, naf or wnaf")
