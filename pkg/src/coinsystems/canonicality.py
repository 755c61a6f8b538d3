"""Deciding orderliness: oracle scan, candidate test, and structural checks.

A coin system is *orderly* when the greedy representation is optimal for
every amount.  The brute-force referee scans amounts directly; the smallest
counterexample of a non-orderly system always lies strictly between c3 and
c(n-1)+cn, so the scan is finite.  The fast test instead derives a small
candidate set from greedy representations of ck-1: the minimal counterexample
of a non-orderly system always appears among the candidates, so checking only
those decides the verdict in O(n^3) coin operations.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import (
    DEFAULT_VALUE_CAP,
    CoinSystem,
    Representation,
    ResourceLimitError,
    _greedy_count,
    _greedy_counts,
    _lex_smallest_counts,
    _opt_table,
    _suffix_opt_tables,
)


def _ceil_div(a: int, b: int) -> int:
    return (a + b - 1) // b


# ---------- brute-force referee ----------


def _min_counterexample(values: tuple[int, ...], cap: int = DEFAULT_VALUE_CAP) -> int | None:
    """Smallest amount where greedy beats optimal is impossible, or None.

    Scans every amount below c(n-1)+cn; no counterexample can be that large,
    so a clean sweep proves the system orderly.  Amounts at or below c3 are
    scanned as well even though none of them can fail, which keeps this
    routine a referee that assumes nothing about where failures live.
    """
    n = len(values)
    if n <= 2:
        return None
    hi = values[-2] + values[-1]
    if hi - 1 > cap:
        raise ResourceLimitError(f"scan bound {hi - 1} exceeds the DP table cap {cap}")
    coins = values[1:]
    dp = [0] * hi
    grd = [0] * hi
    ptr = 0
    top = n - 1
    for v in range(1, hi):
        if ptr < top and values[ptr + 1] <= v:
            ptr += 1
        g = grd[v - values[ptr]] + 1
        grd[v] = g
        best = dp[v - 1] + 1
        for c in coins:
            if c > v:
                break
            cand = dp[v - c] + 1
            if cand < best:
                best = cand
        dp[v] = best
        if g > best:
            return v
    return None


def min_counterexample_oracle(
    system: CoinSystem, *, cap: int = DEFAULT_VALUE_CAP
) -> int | None:
    """Smallest counterexample to greedy optimality, or None when orderly."""
    return _min_counterexample(system.values, cap)


# ---------- candidate test ----------


@dataclass(frozen=True)
class CounterexampleCandidate:
    """One candidate produced from the greedy vector of c(source_k) - 1.

    The first p entries of that vector are zeroed and the entry at 0-based
    index p is raised by one; the candidate is the amount the modified vector
    represents.  If the system has a counterexample at all, its smallest one
    shows up here.
    """

    source_k: int
    p: int
    value: int
    vector: Representation


def counterexample_candidates(system: CoinSystem) -> list[CounterexampleCandidate]:
    """All candidate amounts for the minimal counterexample."""
    values = system.values
    n = len(values)
    out: list[CounterexampleCandidate] = []
    for k in range(2, n + 1):
        base = _greedy_counts(values, values[k - 1] - 1)
        for p in range(1, k - 1):
            counts = [0] * p + base[p:]
            counts[p] += 1
            vector = Representation(system, tuple(counts))
            out.append(
                CounterexampleCandidate(
                    source_k=k, p=p, value=vector.value(), vector=vector
                )
            )
    return out


def _candidate_verdict(values: tuple[int, ...]) -> bool:
    """True iff orderly, checking greedy only at the candidate amounts.

    Each candidate vector represents its amount with `size` coins, so
    grd(w) > size proves a counterexample; and the minimal counterexample of
    a non-orderly system is itself a candidate whose vector is optimal, so
    that comparison cannot miss it.
    """
    n = len(values)
    if n <= 2:
        return True
    for k in range(3, n + 1):
        base = _greedy_counts(values, values[k - 1] - 1)
        w = values[k - 1] - 1
        size = sum(base)
        # running sums over the zeroed prefix
        for p in range(1, k - 1):
            w -= base[p - 1] * values[p - 1]
            size -= base[p - 1]
            if _greedy_count(values, w + values[p]) > size + 1:
                return False
    return True


# ---------- reports ----------


@dataclass(frozen=True)
class CounterexampleWitness:
    """A failing amount with its greedy and lex-smallest optimal forms."""

    value: int
    greedy: Representation
    optimal: Representation
    greedy_count: int
    opt_count: int


@dataclass(frozen=True)
class CanonicalityReport:
    orderly: bool
    witness: CounterexampleWitness | None


def _witness(system: CoinSystem, w: int) -> CounterexampleWitness:
    values = system.values
    greedy = Representation(system, tuple(_greedy_counts(values, w)))
    optimal = Representation(system, tuple(_lex_smallest_counts(values, w)))
    return CounterexampleWitness(
        value=w,
        greedy=greedy,
        optimal=optimal,
        greedy_count=greedy.size(),
        opt_count=optimal.size(),
    )


def is_orderly(system: CoinSystem, *, cap: int = DEFAULT_VALUE_CAP) -> CanonicalityReport:
    """Decide orderliness by the candidate test; witness the failure if any.

    The verdict comes from the candidate set alone.  For a non-orderly
    system the witness is located by the direct upward scan, so it is the
    true minimal counterexample.
    """
    if _candidate_verdict(system.values):
        return CanonicalityReport(orderly=True, witness=None)
    w = _min_counterexample(system.values, cap)
    if w is None:  # pragma: no cover - the two tests agree on all inputs
        raise AssertionError(f"candidate test and oracle disagree on {system}")
    return CanonicalityReport(orderly=False, witness=_witness(system, w))


# ---------- one-point extension check ----------


@dataclass(frozen=True)
class OnePointVerdict:
    """Outcome of the single greedy evaluation deciding an extension.

    For an orderly prefix ending in c(n-1) and a new largest coin cn, the
    extended system is orderly iff greedy spends at most m = ceil(cn/c(n-1))
    coins on the amount m*c(n-1).
    """

    m: int
    target: int
    greedy_count: int
    orderly: bool


def one_point_check(
    prefix: CoinSystem, c_new: int, *, verify_prefix: bool = True
) -> OnePointVerdict:
    """Decide whether appending c_new to an orderly prefix stays orderly.

    The prefix must be orderly for the verdict to mean anything; it is
    checked here unless the caller passes verify_prefix=False after
    establishing it on their own.
    """
    values = prefix.values
    if c_new <= values[-1]:
        raise ValueError(f"new coin {c_new} must exceed the current largest {values[-1]}")
    if verify_prefix and not _candidate_verdict(values):
        raise ValueError(f"prefix {prefix} is not orderly")
    extended = values + (c_new,)
    m = _ceil_div(c_new, values[-1])
    target = m * values[-1]
    g = _greedy_count(extended, target)
    return OnePointVerdict(m=m, target=target, greedy_count=g, orderly=g <= m)


# ---------- tightness and pairwise counterexamples ----------


def is_tight(system: CoinSystem, *, cap: int = DEFAULT_VALUE_CAP) -> bool:
    """True when no amount below cn is a counterexample.

    Orderly systems are vacuously tight; non-orderly ones are tight exactly
    when their minimal counterexample is at least cn.
    """
    values = system.values
    if len(values) <= 2:
        return True
    w = _min_counterexample(values, cap)
    return w is None or w >= values[-1]


def sum_pair_counterexample(system: CoinSystem) -> tuple[int, int] | None:
    """First pair of middle coin indices whose sum breaks greedy optimality.

    Scans pairs (i, j), 0-based with 1 <= i <= j <= n-2, whose coin sum
    exceeds cn, in ascending order; returns the first pair whose sum is a
    counterexample of the full system, else None.
    """
    values = system.values
    n = len(values)
    if n < 4:
        raise ValueError("need at least four coin values")
    limit = 2 * values[-2]
    if limit <= values[-1]:
        return None
    dp = _opt_table(values, limit)
    for i in range(1, n - 1):
        for j in range(i, n - 1):
            s = values[i] + values[j]
            if s > values[-1] and _greedy_count(values, s) > dp[s]:
                return (i, j)
    return None


# ---------- necessary-condition filters ----------


def gap_filter(system: CoinSystem) -> bool:
    """Necessary for orderliness: every gap is at least c2 - 1.

    A False verdict proves the system is not orderly; True says nothing.
    """
    values = system.values
    if len(values) < 2:
        return True
    floor = values[1] - 1
    return all(b - a >= floor for a, b in zip(values[1:], values[2:]))


def jump_filter(system: CoinSystem) -> bool:
    """Necessary for orderliness: gaps never shrink after two doublings.

    Whenever two consecutive coins each more than double their predecessor,
    every later gap must be at least as wide as the gap between those two.
    A False verdict proves the system is not orderly; True says nothing.
    """
    values = system.values
    n = len(values)
    for m in range(2, n):  # 0-based index of the second doubling coin
        if values[m - 1] > 2 * values[m - 2] and values[m] > 2 * values[m - 1]:
            width = values[m] - values[m - 1]
            for t in range(m, n - 1):
                if values[t + 1] - values[t] < width:
                    return False
    return True


# ---------- support disjointness at the minimal counterexample ----------


@dataclass(frozen=True)
class SupportCheck:
    """Whether greedy and every optimal form of the minimal counterexample
    use disjoint coin sets.  Status is 'vacuous' for orderly systems,
    otherwise 'holds' or 'violated' with the offending optimal form."""

    status: str
    value: int | None = None
    greedy: Representation | None = None
    conflicting: Representation | None = None


def _optimal_count_vectors(values: tuple[int, ...], v: int) -> list[tuple[int, ...]]:
    """Every representation of v that attains the minimal coin count."""
    tables = _suffix_opt_tables(values, v)
    n = len(values)
    out: list[tuple[int, ...]] = []
    stack: list[int] = []

    def rec(i: int, u: int, budget: int) -> None:
        if i == n:
            out.append(tuple(stack))
            return
        c = values[i]
        nxt = tables[i + 1]
        for t in range(u // c + 1):
            if nxt[u - t * c] == budget - t:
                stack.append(t)
                rec(i + 1, u - t * c, budget - t)
                stack.pop()

    rec(0, v, tables[0][v])
    return out


def disjoint_support_check(
    system: CoinSystem, *, cap: int = DEFAULT_VALUE_CAP
) -> SupportCheck:
    """At the minimal counterexample, greedy and optimal never share a coin.

    Verified against every optimal representation by exhaustive enumeration.
    """
    values = system.values
    w = _min_counterexample(values, cap) if len(values) > 2 else None
    if w is None:
        return SupportCheck(status="vacuous")
    greedy_counts = _greedy_counts(values, w)
    greedy = Representation(system, tuple(greedy_counts))
    for opt_counts in _optimal_count_vectors(values, w):
        if any(x and y for x, y in zip(greedy_counts, opt_counts)):
            return SupportCheck(
                status="violated",
                value=w,
                greedy=greedy,
                conflicting=Representation(system, opt_counts),
            )
    return SupportCheck(status="holds", value=w, greedy=greedy)
