"""Partitions, weak compositions, and the order/statistic primitives.

A partition is a tuple of weakly decreasing positive integers (no trailing
zeros); a composition is a tuple of nonnegative integers whose length is
significant.  Both are plain tuples so they can serve as dictionary keys
throughout the package.
"""

from __future__ import annotations

import os
from math import comb
from typing import Iterator, NamedTuple

Partition = tuple  # weakly decreasing positive parts
Composition = tuple  # fixed length, zeros allowed


class SizeMismatchError(ValueError):
    """Raised when an operation requires equal-size partitions."""


class ContainmentViolationError(ValueError):
    """Raised when a required diagram containment fails."""


ENUMERATION_GUARD_ENV = "DELTASPRINGER_MAX_ENUM"
DEFAULT_ENUMERATION_GUARD = 30


def enumeration_guard() -> int:
    return int(os.environ.get(ENUMERATION_GUARD_ENV, DEFAULT_ENUMERATION_GUARD))


def _check_guard(n: int, guard: int | None):
    limit = enumeration_guard() if guard is None else guard
    if n > limit:
        raise ValueError(
            f"enumeration size {n} exceeds guard {limit}; raise the limit "
            f"explicitly or via {ENUMERATION_GUARD_ENV} if you mean it"
        )


def as_partition(parts) -> Partition:
    """Validate and canonicalize: drop trailing zeros, check weak decrease."""
    p = tuple(int(x) for x in parts)
    while p and p[-1] == 0:
        p = p[:-1]
    for a, b in zip(p, p[1:]):
        if a < b:
            raise ValueError(f"parts not weakly decreasing: {parts}")
    if p and p[-1] < 0:
        raise ValueError(f"negative part in {parts}")
    return p


def is_partition(parts) -> bool:
    try:
        as_partition(parts)
        return True
    except ValueError:
        return False


def size(p) -> int:
    return sum(p)


def conjugate(p: Partition) -> Partition:
    """Transpose of the Young diagram."""
    if not p:
        return ()
    out = []
    for i in range(p[0]):
        out.append(sum(1 for part in p if part > i))
    return tuple(out)


def dominates_leq(mu: Partition, nu: Partition) -> bool:
    """True iff mu is dominated by nu (all prefix sums of mu are <=)."""
    if sum(mu) != sum(nu):
        raise SizeMismatchError(f"|{mu}| != |{nu}|")
    pm = pn = 0
    for i in range(max(len(mu), len(nu))):
        pm += mu[i] if i < len(mu) else 0
        pn += nu[i] if i < len(nu) else 0
        if pm > pn:
            return False
    return True


def contains(outer, inner) -> bool:
    """Diagram containment; the outer argument may be a weak composition."""
    if len(inner) > len(outer):
        if any(inner[len(outer):]):
            return False
    return all(outer[i] >= inner[i] for i in range(min(len(outer), len(inner))))


def n_stat(p: Partition) -> int:
    """The statistic sum_i (i-1) * p_i, the maximal cocharge for content p."""
    return sum(i * part for i, part in enumerate(p))


def coinv(a: Composition) -> int:
    """Number of pairs i < j with a_i < a_j."""
    return sum(
        1 for i in range(len(a)) for j in range(i + 1, len(a)) if a[i] < a[j]
    )


def sort_composition(a: Composition) -> Partition:
    return as_partition(sorted(a, reverse=True))


def skew_n_stat(a, lam: Partition) -> int:
    """sum_i binom(mu'_i - lam'_i, 2) for mu the decreasing sort of a."""
    mu = sort_composition(a)
    if not contains(mu, lam):
        raise ContainmentViolationError(f"sort({a}) does not contain {lam}")
    mu_c, lam_c = conjugate(mu), conjugate(lam)
    total = 0
    for i, m in enumerate(mu_c):
        l = lam_c[i] if i < len(lam_c) else 0
        total += comb(m - l, 2)
    return total


def is_horizontal_strip(outer: Partition, inner: Partition) -> bool:
    """True iff outer/inner has at most one box in each column."""
    if not contains(outer, inner):
        raise ContainmentViolationError(f"{outer} does not contain {inner}")
    for i in range(len(outer) - 1):
        nxt = outer[i + 1]
        inn = inner[i] if i < len(inner) else 0
        if nxt > inn:
            return False
    return True


class DeltaParams(NamedTuple):
    """Parameters (n, lambda, s) of a Delta-Springer module, with k = |lambda|."""

    n: int
    lam: Partition
    s: int

    @property
    def k(self) -> int:
        return sum(self.lam)

    def validate(self) -> "DeltaParams":
        lam = as_partition(self.lam)
        if self.n < 1 or self.s < 1:
            raise ValueError(f"n and s must be positive: {self}")
        if sum(lam) > self.n:
            raise ValueError(f"|lambda| exceeds n: {self}")
        if len(lam) > self.s:
            raise ValueError(f"lambda has more than s parts: {self}")
        return DeltaParams(self.n, lam, self.s)


def lambda_rect(params: DeltaParams) -> Partition:
    """The partition formed by an s x (n-k) rectangle glued left of lambda."""
    n, lam, s = params.validate()
    w = n - sum(lam)
    parts = tuple((lam[i] if i < len(lam) else 0) + w for i in range(s))
    return as_partition(parts)


def compositions_over(n: int, lam: Partition, s: int, guard: int | None = None) -> Iterator[Composition]:
    """Weak compositions of n with s parts containing lam, lexicographically decreasing."""
    _check_guard(n, guard)
    lam = as_partition(lam)
    if sum(lam) > n or len(lam) > s:
        return
    floors = tuple(lam[i] if i < len(lam) else 0 for i in range(s))

    def rec(i, remaining):
        if i == s - 1:
            if remaining >= floors[i]:
                yield (remaining,)
            return
        lo = floors[i]
        hi = remaining - sum(floors[i + 1:])
        for v in range(hi, lo - 1, -1):
            for rest in rec(i + 1, remaining - v):
                yield (v,) + rest

    yield from rec(0, n)


def enumerate_partitions(
    n: int, max_len: int | None = None, max_part: int | None = None,
    guard: int | None = None,
) -> Iterator[Partition]:
    """All partitions of n (length/part bounds optional), reverse-lexicographic."""
    _check_guard(n, guard)
    if max_len is None:
        max_len = n
    first = n if max_part is None else min(n, max_part)

    def rec(remaining, largest, slots):
        if remaining == 0:
            yield ()
            return
        if slots == 0:
            return
        for part in range(min(remaining, largest), 0, -1):
            for rest in rec(remaining - part, part, slots - 1):
                yield (part,) + rest

    yield from rec(n, first, max_len)


def partitions_containing(
    total: int, inner: Partition, max_len: int | None = None,
    guard: int | None = None,
) -> Iterator[Partition]:
    """Partitions of the given size whose diagram contains inner."""
    _check_guard(total, guard)
    inner = as_partition(inner)
    if sum(inner) > total:
        return
    if max_len is None:
        max_len = total

    def rec(i, remaining, prev):
        lo = inner[i] if i < len(inner) else 0
        if remaining == 0:
            if lo == 0:
                yield ()
            return
        if i >= max_len:
            return
        tail_floor = sum(inner[i + 1:]) if i + 1 < len(inner) else 0
        for part in range(min(remaining - tail_floor, prev), max(lo, 1) - 1, -1):
            for rest in rec(i + 1, remaining - part, part):
                yield (part,) + rest

    yield from rec(0, total, total)


def format_partition(p: Partition) -> str:
    """Text form: comma-separated parts in parentheses, e.g. (5,4,3,3)."""
    return "(" + ",".join(str(x) for x in p) + ")"


def parse_partition(text: str) -> Partition:
    """Parse '3,2,1', '(3,2,1)' or '()' into a partition."""
    text = text.strip()
    if text.startswith("(") and text.endswith(")"):
        text = text[1:-1]
    if not text:
        return ()
    return as_partition(int(x) for x in text.split(","))
