"""Brute-force permutation signs used to cross-check the closed-form exponents.

Every sign here comes from counting inversions of an explicitly built
permutation; closed forms appear only in the ``*_closed_form`` helpers that
tests compare against.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Hashable, Sequence

from .sign_calculus import Sign


def _validate(p: Sequence[int]) -> list[int]:
    p = list(p)
    if sorted(p) != list(range(len(p))):
        raise ValueError(f"not a permutation of 0..{len(p) - 1}: {p}")
    return p


def inversions(p: Sequence[int]) -> int:
    p = _validate(p)
    return sum(1 for a in range(len(p)) for b in range(a + 1, len(p)) if p[a] > p[b])


def perm_sign(p: Sequence[int]) -> Sign:
    return Sign.from_parity(inversions(p))


def compose(p: Sequence[int], q: Sequence[int]) -> list[int]:
    """``(p o q)[j] = p[q[j]]``."""
    p, q = _validate(p), _validate(q)
    if len(p) != len(q):
        raise ValueError("permutations of different sizes")
    return [p[j] for j in q]


def relabel_sign(before: Sequence[Hashable], after: Sequence[Hashable]) -> Sign:
    """Sign of the permutation taking the ordered labels ``before`` to ``after``."""
    pos = {label: j for j, label in enumerate(before)}
    if len(pos) != len(before) or len(after) != len(before) or set(after) != set(pos):
        raise ValueError("after must be a reordering of before")
    return perm_sign([pos[label] for label in after])


def reversal_sign(k: int) -> Sign:
    """Sign of ``(z_0, ..., z_{k-1}) -> (z_0, z_{k-1}, ..., z_1)``."""
    if k < 1:
        raise ValueError("k must be at least 1")
    return perm_sign([0] + list(range(k - 1, 0, -1)))


def reversal_sign_closed_form(k: int) -> Sign:
    return Sign.from_parity((k - 1) * (k - 2) // 2)


def _rotate(seq: Sequence, shift: int) -> list:
    return list(seq[shift:]) + list(seq[:shift])


def split_reordering_factors(k: int, k1: int, k2: int, i: int) -> tuple[Sign, Sign]:
    """The two reorderings that move the attach point from marked point 1 to marked point ``i``.

    First the ``k`` boundary points of the broken disc are rotated so that
    point ``i - 1`` comes first.  After splitting, the ``k1 + 1`` points of
    the base disc (the gluing point ``*`` sits at position ``i``) are in the
    rotated order and must be rotated back.
    """
    if k1 < 0 or k2 < 0 or k1 + k2 != k:
        raise ValueError(f"need k1 + k2 = k with non-negative parts, got {k1} + {k2} != {k}")
    if not 1 <= i <= k1 + 1:
        raise ValueError(f"attach index {i} outside 1..{k1 + 1}")
    full = list(range(k))
    first = relabel_sign(full, _rotate(full, i - 1))
    # base disc in its own cyclic order: i points, the gluing point, the rest
    before = min(i, k1)
    base = [f"z{j}" for j in range(before)] + ["*"] + [f"w{j}" for j in range(k1 - before)]
    second = relabel_sign(_rotate(base, i - 1), base)
    return first, second


def split_reordering_sign(k: int, k1: int, k2: int, i: int) -> Sign:
    first, second = split_reordering_factors(k, k1, k2, i)
    return first * second


def split_reordering_closed_forms(k: int, k2: int, i: int) -> tuple[Sign, Sign, Sign]:
    """The two rotation exponents and their simplified product ``(i-1)(k2+1)``."""
    return (
        Sign.from_parity((i - k + 1) * (i - 1)),
        Sign.from_parity((i - 1) * (2 + k - i - k2 + 2)),
        Sign.from_parity((i - 1) * (k2 + 1)),
    )


def sigma_permutation(k: int, k2: int, i: int, *, include_next: bool = False) -> list[int]:
    """The relabelling of ``0..k-1`` induced by conjugating the bubble.

    The literal reading reverses the bubble's points ``i .. i+k2-1``; with
    ``include_next`` the run is taken to end at ``i + k2`` instead.
    """
    stop = i + k2 + (1 if include_next else 0)
    if i < 0 or stop > k:
        raise ValueError(f"block {i}..{stop - 1} does not fit in 0..{k - 1}")
    return list(range(i)) + list(range(stop - 1, i - 1, -1)) + list(range(stop, k))


def sigma2_permutation(k2: int) -> list[int]:
    """``(*, i, ..., i+k2-1) -> (*, i+k2-1, ..., i)`` with ``*`` at index 0."""
    return [0] + list(range(k2, 0, -1))


def sigma_pair_signs(k: int, k1: int, k2: int, i: int) -> tuple[Sign, Sign]:
    """Signs of sigma (literal reading) and sigma_2 for a bubble attached at position ``i``.

    ``i`` is the 0-based position of the bubble's first point among the
    ``k`` boundary points, so ``0 <= i <= k1``.
    """
    if k1 < 0 or k2 < 0 or k1 + k2 != k:
        raise ValueError(f"need k1 + k2 = k with non-negative parts, got {k1} + {k2} != {k}")
    if not 0 <= i <= k1:
        raise ValueError(f"bubble start {i} outside 0..{k1}")
    s = perm_sign(sigma_permutation(k, k2, i))
    s2 = perm_sign(sigma2_permutation(k2))
    if s2 is not reversal_sign(k2 + 1):
        raise AssertionError(f"sigma_2 sign disagrees with reversal of {k2 + 1} points")
    return s, s2


@dataclass(frozen=True)
class SigmaReadingComparison:
    k: int
    k2: int
    i: int
    literal: Sign
    extended: Sign | None  # None when the extended run does not fit

    @property
    def agree(self) -> bool | None:
        return None if self.extended is None else self.literal is self.extended


def compare_sigma_readings(k: int, k2: int, i: int) -> SigmaReadingComparison:
    literal = perm_sign(sigma_permutation(k, k2, i))
    extended = None
    if i + k2 + 1 <= k:
        extended = perm_sign(sigma_permutation(k, k2, i, include_next=True))
    return SigmaReadingComparison(k, k2, i, literal, extended)


@dataclass
class OracleReport:
    k_max: int
    checked: int = 0
    failures: list[str] = field(default_factory=list)
    reading_disagreements: list[SigmaReadingComparison] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures


def verify_all(k_max: int = 12, reversal_max: int = 40) -> OracleReport:
    """Run every closed-form sign against inversion counting.

    Disagreements between the two readings of sigma are collected but do not
    fail the report: they concern an ambiguous display, not a sign formula.
    """
    report = OracleReport(k_max)
    for k in range(1, max(reversal_max, k_max + 1) + 1):
        report.checked += 1
        if reversal_sign(k) is not reversal_sign_closed_form(k):
            report.failures.append(f"reversal_sign({k})")
    for k in range(k_max + 1):
        for k2 in range(k + 1):
            k1 = k - k2
            for i in range(1, k1 + 2):
                report.checked += 1
                first, second = split_reordering_factors(k, k1, k2, i)
                c_first, c_second, c_total = split_reordering_closed_forms(k, k2, i)
                if (first, second, first * second) != (c_first, c_second, c_total):
                    report.failures.append(f"split_reordering_sign(k={k}, k1={k1}, k2={k2}, i={i})")
            for i in range(k1 + 1):
                report.checked += 1
                s, s2 = sigma_pair_signs(k, k1, k2, i)
                if s is not s2:
                    report.failures.append(f"sigma vs sigma_2 (k={k}, k2={k2}, i={i})")
                cmp = compare_sigma_readings(k, k2, i)
                if cmp.agree is False:
                    report.reading_disagreements.append(cmp)
    return report
