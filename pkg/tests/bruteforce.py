"""Naive reference implementations used as oracles by the test suite.

Everything here is written straight from the problem statement with no
shortcuts, so it is slow but easy to believe: greedy by repeated
subtraction, optimal counts by breadth-first search over amounts, and
representation questions answered by enumerating every representation.
Keep inputs small.
"""

from hypothesis import strategies as st


def ref_greedy_counts(values, v):
    """Greedy per-coin counts by literal repeated subtraction."""
    counts = [0] * len(values)
    rest = v
    for i in range(len(values) - 1, -1, -1):
        while values[i] <= rest:
            rest -= values[i]
            counts[i] += 1
    return tuple(counts)


def ref_greedy_count(values, v):
    return sum(ref_greedy_counts(values, v))


def ref_opt_count(values, v):
    """Fewest coins summing to v, by breadth-first search over amounts."""
    if v == 0:
        return 0
    seen = {0}
    frontier = [0]
    spent = 0
    while frontier:
        spent += 1
        nxt = []
        for base in frontier:
            for c in values:
                s = base + c
                if s == v:
                    return spent
                if s < v and s not in seen:
                    seen.add(s)
                    nxt.append(s)
        frontier = nxt
    raise AssertionError("unreachable: the unit coin always completes")


def ref_min_counterexample(values):
    """Smallest amount where greedy beats optimal, scanning the whole
    window below c(n-1) + cn; None when there is none."""
    if len(values) < 3:
        return None
    for v in range(1, values[-2] + values[-1]):
        if ref_greedy_count(values, v) > ref_opt_count(values, v):
            return v
    return None


def ref_is_orderly(values):
    return ref_min_counterexample(values) is None


def ref_pattern(values):
    return "".join(
        "+" if ref_is_orderly(values[:k]) else "-" for k in range(1, len(values) + 1)
    )


def ref_all_representations(values, v):
    """Every count vector representing v, largest coin chosen first."""
    out = []
    counts = [0] * len(values)

    def rec(i, rest):
        if i == 0:
            counts[0] = rest
            out.append(tuple(counts))
            counts[0] = 0
            return
        for k in range(rest // values[i], -1, -1):
            counts[i] = k
            rec(i - 1, rest - k * values[i])
        counts[i] = 0

    rec(len(values) - 1, v)
    return out


def ref_all_optimal(values, v):
    reps = ref_all_representations(values, v)
    best = min(sum(r) for r in reps)
    return [r for r in reps if sum(r) == best]


def ref_lex_smallest_optimal(values, v):
    return min(ref_all_optimal(values, v))


# ---------- hypothesis strategies ----------


def coin_values(max_n=5, max_value=40):
    """Strategy for coin value tuples (1, c2, ..., cn), 1 <= n <= max_n."""
    return st.sets(
        st.integers(min_value=2, max_value=max_value), min_size=0, max_size=max_n - 1
    ).map(lambda rest: (1, *sorted(rest)))


def coin_values_exact(n, max_value=40):
    """Strategy for coin value tuples with exactly n values."""
    return st.sets(
        st.integers(min_value=2, max_value=max_value), min_size=n - 1, max_size=n - 1
    ).map(lambda rest: (1, *sorted(rest)))
