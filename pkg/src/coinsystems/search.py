"""Exhaustive sweeps: enumeration, pattern census, and the conjecture scan.

Enumeration is lexicographic over (c2, ..., cn) drawn from 2..max_cn.  The
census walks the enumeration as a prefix tree so each prefix verdict is
computed once: an orderly prefix is extended by a single greedy evaluation,
and a non-orderly prefix with a known failing amount w stays non-orderly,
with the same w, under any new coin larger than w (no representation of an
amount below the new coin can use it).  Only extensions by a coin at or
below w need a fresh oracle scan.  A deterministic sample of verdicts is
re-checked against the oracle as the sweep runs.

The conjecture scan looks for systems whose pattern is (+++-...-+).  Inside
a subtree where every added coin exceeds the inherited failing amount w, all
leaves stay non-orderly, so no finding can appear and the subtree is
skipped; every emitted finding is re-verified per prefix by the oracle.
"""

from __future__ import annotations

import multiprocessing
from dataclasses import dataclass
from typing import Iterable, Iterator

from .canonicality import _candidate_verdict, _min_counterexample, gap_filter, jump_filter
from .core import CoinSystem, _greedy_count, _opt_table
from .families import FamilyParams, family_membership


class InternalDisagreementError(RuntimeError):
    """A fast verdict disagreed with the oracle during a sweep."""


@dataclass(frozen=True)
class EnumSpec:
    """Bounds of an enumeration: systems with n values, largest at most
    max_cn, optionally tagging systems the necessary-condition filters
    reject."""

    n: int
    max_cn: int
    use_gap_filter: bool = False
    use_jump_filter: bool = False

    def __post_init__(self) -> None:
        if self.n < 3:
            raise ValueError("need n >= 3")
        if self.max_cn < self.n:
            raise ValueError("max_cn must be at least n, otherwise no systems exist")


@dataclass(frozen=True)
class EnumeratedSystem:
    """One enumerated system; pre_rejected means an enabled filter proved it
    non-orderly without any scan."""

    system: CoinSystem
    pre_rejected: bool


def enumerate_systems(spec: EnumSpec) -> Iterator[EnumeratedSystem]:
    """All coin systems within the bounds, in lexicographic order.

    Systems failing an enabled filter are still yielded, tagged pre_rejected.
    """
    from itertools import combinations

    for combo in combinations(range(2, spec.max_cn + 1), spec.n - 1):
        system = CoinSystem((1,) + combo)
        rejected = (spec.use_gap_filter and not gap_filter(system)) or (
            spec.use_jump_filter and not jump_filter(system)
        )
        yield EnumeratedSystem(system=system, pre_rejected=rejected)


# ---------- shared tree machinery ----------


def _fingerprint(values: tuple[int, ...]) -> int:
    h = 2166136261
    for v in values:
        h = ((h ^ v) * 16777619) & 0xFFFFFFFF
    return h


def _extend_verdict(
    child: tuple[int, ...], parent_orderly: bool, parent_w: int | None
) -> tuple[bool, int | None]:
    """Orderliness of child = parent + one coin, with a failing amount.

    Returns (orderly, w) where w is some counterexample of child (not
    necessarily minimal) whenever child is not orderly.
    """
    if parent_orderly:
        last = child[-2]
        c_new = child[-1]
        m = (c_new + last - 1) // last
        target = m * last
        if _greedy_count(child, target) <= m:
            return True, None
        # greedy spends more than m coins on target, so target itself fails
        return False, target
    if child[-1] > parent_w:
        return False, parent_w
    w = _min_counterexample(child)
    return w is None, w


def _spot_check(values: tuple[int, ...], orderly: bool, w: int | None) -> None:
    oracle_w = _min_counterexample(values)
    if (oracle_w is None) != orderly:
        raise InternalDisagreementError(
            f"sweep verdict {'orderly' if orderly else 'not orderly'} "
            f"disagrees with the oracle on {values}"
        )
    if w is not None:
        if _greedy_count(values, w) <= _opt_table(values, w)[w]:
            raise InternalDisagreementError(
                f"sweep witness {w} is not a counterexample of {values}"
            )


def _sample_modulus(sample_rate: float) -> int:
    if not 0.0 <= sample_rate <= 1.0:
        raise ValueError("sample rate must be within [0, 1]")
    if sample_rate == 0.0:
        return 0
    return max(1, round(1.0 / sample_rate))


# ---------- pattern census ----------


def _census_partition(args: tuple[int, int, int, int]) -> dict[str, int]:
    n, max_cn, c2, sample_mod = args
    counts: dict[str, int] = {}

    def rec(values: tuple[int, ...], marks: str, orderly: bool, w: int | None) -> None:
        if len(values) == n:
            counts[marks] = counts.get(marks, 0) + 1
            return
        remaining = n - len(values) - 1
        for c in range(values[-1] + 1, max_cn - remaining + 1):
            child = values + (c,)
            o2, w2 = _extend_verdict(child, orderly, w)
            if sample_mod and _fingerprint(child) % sample_mod == 0:
                _spot_check(child, o2, w2)
            rec(child, marks + ("+" if o2 else "-"), o2, w2)

    rec((1, c2), "++", True, None)
    return counts


def pattern_census(
    spec: EnumSpec, *, jobs: int = 1, sample_rate: float = 0.01
) -> dict[str, int]:
    """Count enumerated systems by orderliness pattern.

    The result is identical for any job count; partitions are split by c2
    and merged in order.
    """
    mod = _sample_modulus(sample_rate)
    args = [(spec.n, spec.max_cn, c2, mod) for c2 in range(2, spec.max_cn - spec.n + 3)]
    partials = _run_partitions(_census_partition, args, jobs)
    total: dict[str, int] = {}
    for part in partials:
        for marks, count in part.items():
            total[marks] = total.get(marks, 0) + count
    return dict(sorted(total.items()))


def _run_partitions(worker, args: list, jobs: int) -> list:
    if jobs <= 1 or len(args) <= 1:
        return [worker(a) for a in args]
    with multiprocessing.Pool(processes=jobs) as pool:
        return pool.map(worker, args)


# ---------- conjecture scan ----------


@dataclass(frozen=True)
class ConjectureFinding:
    """A system whose pattern is (+++-...-+), oracle-verified, with its
    family identification when one exists."""

    system: CoinSystem
    pattern_ok: bool
    membership: FamilyParams | None


@dataclass(frozen=True)
class ConjectureSummary:
    total: int
    without_membership: tuple[ConjectureFinding, ...]
    forbidden_length: tuple[ConjectureFinding, ...]

    @property
    def ok(self) -> bool:
        return not self.without_membership and not self.forbidden_length


def summarize_findings(findings: Iterable[ConjectureFinding]) -> ConjectureSummary:
    """Tally conjecture violations: findings outside the known families, and
    findings with 3r+1 values for r >= 2."""
    findings = list(findings)
    missing = tuple(f for f in findings if f.membership is None)
    bad_len = tuple(
        f for f in findings if len(f.system) % 3 == 1 and len(f.system) >= 7
    )
    return ConjectureSummary(
        total=len(findings), without_membership=missing, forbidden_length=bad_len
    )


def _scan_partition(args: tuple[int, int, int, int]) -> list[tuple[int, ...]]:
    n, max_cn, c2, sample_mod = args
    found: list[tuple[int, ...]] = []

    def leaf_scan(values: tuple[int, ...], w: int) -> None:
        # a leaf needs '+': impossible once the new coin exceeds w
        for c in range(values[-1] + 1, min(w, max_cn) + 1):
            child = values + (c,)
            if _min_counterexample(child) is None:
                found.append(child)

    def rec(values: tuple[int, ...], w: int) -> None:
        # children in the middle range must be '-'; beyond w every leaf
        # below them stays '-' as well, so the subtree is skipped
        depth = len(values) + 1
        if depth == n:
            leaf_scan(values, w)
            return
        hi = min(w, max_cn - (n - depth))
        for c in range(values[-1] + 1, hi + 1):
            child = values + (c,)
            cw = _min_counterexample(child)
            if cw is not None:
                rec(child, cw)

    # the first three marks must be '+', the fourth '-'
    for c3 in range(c2 + 1, max_cn - (n - 3) + 1):
        three = (1, c2, c3)
        o3, w3 = _extend_verdict(three, True, None)
        if sample_mod and _fingerprint(three) % sample_mod == 0:
            _spot_check(three, o3, w3)
        if not o3:
            continue
        for c4 in range(c3 + 1, max_cn - (n - 4) + 1):
            four = three + (c4,)
            o4, w4 = _extend_verdict(four, True, None)
            if sample_mod and _fingerprint(four) % sample_mod == 0:
                _spot_check(four, o4, w4)
            if o4:
                continue
            if n == 5:
                leaf_scan(four, w4)
            else:
                rec(four, w4)
    return found


def _oracle_marks(values: tuple[int, ...]) -> str:
    marks = ["+"] * min(len(values), 2)
    for k in range(3, len(values) + 1):
        marks.append("+" if _min_counterexample(values[:k]) is None else "-")
    return "".join(marks)


def _target_marks(n: int) -> str:
    return "+++" + "-" * (n - 4) + "+"


def conjecture_scan(
    lengths: Iterable[int],
    max_cn: int,
    *,
    jobs: int = 1,
    sample_rate: float = 0.01,
) -> list[ConjectureFinding]:
    """Find every system with pattern (+++-...-+) within the bounds.

    Each finding is re-verified prefix by prefix against the oracle and
    looked up in the fixed-gap families; results are in lexicographic order
    within each requested length.
    """
    findings: list[ConjectureFinding] = []
    mod = _sample_modulus(sample_rate)
    for n in lengths:
        if n < 5:
            raise ValueError("the target pattern needs at least five values")
        if max_cn < n:
            continue
        args = [(n, max_cn, c2, mod) for c2 in range(2, max_cn - n + 3)]
        partials = _run_partitions(_scan_partition, args, jobs)
        for part in partials:
            for values in part:
                if _oracle_marks(values) != _target_marks(n):
                    raise InternalDisagreementError(
                        f"scan emitted {values} but the oracle rejects its pattern"
                    )
                system = CoinSystem(values)
                findings.append(
                    ConjectureFinding(
                        system=system,
                        pattern_ok=True,
                        membership=family_membership(system),
                    )
                )
    return findings


# ---------- verdict agreement sweep ----------


def _agreement_partition(args: tuple[int, int, int]) -> tuple[int, list[tuple[int, ...]]]:
    from itertools import combinations

    n, max_cn, c2 = args
    checked = 0
    disagreements: list[tuple[int, ...]] = []
    for combo in combinations(range(c2 + 1, max_cn + 1), n - 2):
        values = (1, c2) + combo
        checked += 1
        if _candidate_verdict(values) != (_min_counterexample(values) is None):
            disagreements.append(values)
    return checked, disagreements


def agreement_sweep(
    n: int, max_cn: int, *, jobs: int = 1
) -> tuple[int, list[tuple[int, ...]]]:
    """Compare the candidate test against the oracle on every system with n
    values bounded by max_cn.  Returns (systems checked, disagreements)."""
    if n < 3:
        raise ValueError("need n >= 3")
    args = [(n, max_cn, c2) for c2 in range(2, max_cn - n + 3)]
    partials = _run_partitions(_agreement_partition, args, jobs)
    checked = 0
    disagreements: list[tuple[int, ...]] = []
    for part_count, part_bad in partials:
        checked += part_count
        disagreements.extend(part_bad)
    return checked, disagreements
