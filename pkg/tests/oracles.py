"""Independent brute-force references the library must agree with."""

from collections import defaultdict


def nonadjacent_expansions(max_len):
    """All digit strings over {-1, 0, 1} with leading digit +1, no two adjacent
    nonzero digits, and length <= max_len, grouped by value.

    Strings with a leading -1 denote negative integers only and can never
    collide with a nonnegative scalar, so they are omitted; the zero scalar
    is carried by the empty string.
    """
    by_value = defaultdict(list)
    by_value[0].append(())
    stack = [((1,), 1, True)]
    while stack:
        digits, value, last_nonzero = stack.pop()
        by_value[value].append(digits)
        if len(digits) == max_len:
            continue
        for d in (0,) if last_nonzero else (-1, 0, 1):
            stack.append((digits + (d,), 2 * value + d, d != 0))
    return by_value


def min_window_weight(m, w, max_len):
    """Minimum nonzero-digit count over every expansion of m whose nonzero
    digits are odd with magnitude below 2**(w-1) and where any w consecutive
    positions hold at most one nonzero digit, using up to max_len positions.
    None when no such expansion exists.
    """
    bound = (1 << (w - 1)) - 1
    odd_digits = [d for mag in range(1, bound + 1, 2) for d in (mag, -mag)]
    best = None

    def search(pos, value, cooldown, weight):
        nonlocal best
        if best is not None and weight >= best:
            return
        if value == m:
            best = weight  # remaining positions stay zero
        if pos == max_len:
            return
        # remaining positions can move the value by at most this much
        span = bound * ((1 << max_len) - (1 << pos))
        if abs(m - value) > span:
            return
        search(pos + 1, value, max(0, cooldown - 1), weight)
        if cooldown == 0:
            for d in odd_digits:
                search(pos + 1, value + (d << pos), w - 1, weight + 1)

    search(0, 0, 0, 0)
    return best


def walk_sign_invariant(e, D, n, trace):
    """Assert (-1)**f * E == (digit prefix) * D mod n at every traced step.

    Works for any driver's trace: init, then per digit position one doubling
    step and optionally one addition step, then an optional final negation.
    """
    assert trace, "empty trace"
    prefix = e.digits[0]
    steps = iter(trace)
    first = next(steps)
    assert first.kind == "init", first.kind
    assert _signed(first.element, first.f, n) == prefix * D % n, ("init", e.digits)
    for d in e.digits[1:]:
        step = next(steps)
        assert step.kind in ("dbl", "neg_dbl"), step.kind
        prefix *= 2
        assert _signed(step.element, step.f, n) == prefix * D % n, (step, e.digits)
        if d:
            step = next(steps)
            assert step.kind in ("add", "neg_add"), step.kind
            prefix += d
            assert _signed(step.element, step.f, n) == prefix * D % n, (step, e.digits)
    rest = list(steps)
    if rest:
        assert [s.kind for s in rest] == ["final_neg"], rest
        assert _signed(rest[0].element, rest[0].f, n) == prefix * D % n, (rest[0], e.digits)
    assert prefix == e.value


def _signed(element, f, n):
    return element if f == 0 else -element % n
