"""Transformed and modified Hall-Littlewood polynomials via charge statistics.

Both families are computed by enumerating semistandard tableaux of fixed
content and grading by charge (transformed, H) or cocharge (modified, H~).
A single enumeration pass feeds both statistics; results are cached per
content, which the route-agreement sweeps rely on heavily.
"""

from __future__ import annotations

import os
from functools import lru_cache

from .partitions import Partition, SizeMismatchError, as_partition, enumerate_partitions
from .qt_algebra import QTPoly
from .schur_ring import SchurPoly
from .tableaux import (
    _labelings,
    enumerate_ssyt_content,
    enumerate_ssyt_shape_content,
    reading_word,
    shape,
)

HL_GUARD_ENV = "DELTASPRINGER_MAX_HL"
DEFAULT_HL_GUARD = 24


def hl_guard() -> int:
    return int(os.environ.get(HL_GUARD_ENV, DEFAULT_HL_GUARD))


def _check_guard(mu, guard):
    limit = hl_guard() if guard is None else guard
    if sum(mu) > limit:
        raise ValueError(
            f"|mu| = {sum(mu)} exceeds the Hall-Littlewood guard {limit}; "
            f"tableau counts grow too fast past desk scale (override via "
            f"{HL_GUARD_ENV} or a shape-restricted computation)"
        )


@lru_cache(maxsize=None)
def _hl_pair(mu: Partition, guard=None):
    """(charge-graded, cocharge-graded) Schur expansions for content mu."""
    _check_guard(mu, guard)
    by_shape_ch: dict = {}
    by_shape_cc: dict = {}
    for t in enumerate_ssyt_content(mu):
        cc_labels, ch_labels, _ = _labelings(reading_word(t))
        sh = shape(t)
        ch = sum(ch_labels)
        cc = sum(cc_labels)
        by_shape_ch.setdefault(sh, {})
        by_shape_ch[sh][(ch, 0)] = by_shape_ch[sh].get((ch, 0), 0) + 1
        by_shape_cc.setdefault(sh, {})
        by_shape_cc[sh][(cc, 0)] = by_shape_cc[sh].get((cc, 0), 0) + 1
    transformed = SchurPoly({sh: QTPoly(d) for sh, d in by_shape_ch.items()})
    modified = SchurPoly({sh: QTPoly(d) for sh, d in by_shape_cc.items()})
    return transformed, modified


def hl_transformed(mu, guard=None) -> SchurPoly:
    """H_mu(x;q): Schur expansion graded by charge."""
    return _hl_pair(as_partition(mu), guard)[0]


def hl_modified(mu, guard=None) -> SchurPoly:
    """H~_mu(x;q): Schur expansion graded by cocharge."""
    return _hl_pair(as_partition(mu), guard)[1]


@lru_cache(maxsize=None)
def q_kostka(nu, mu, modified: bool = True) -> QTPoly:
    """Coefficient of the Schur function of nu in H~_mu (or H_mu).

    Computed shape-by-shape, so contents far beyond the full-expansion
    guard stay affordable when only a few shapes are needed.
    """
    nu, mu = as_partition(nu), as_partition(mu)
    if sum(nu) != sum(mu):
        raise SizeMismatchError(f"|{nu}| != |{mu}|")
    terms: dict = {}
    idx = 0 if not modified else 1
    for t in enumerate_ssyt_shape_content(nu, mu):
        cc_labels, ch_labels, _ = _labelings(reading_word(t))
        stat = sum(cc_labels) if modified else sum(ch_labels)
        terms[(stat, 0)] = terms.get((stat, 0), 0) + 1
    return QTPoly(terms)


def hl_modified_on_shapes(mu, shapes) -> SchurPoly:
    """H~_mu restricted to the given output shapes (exact on those keys)."""
    mu = as_partition(mu)
    return SchurPoly({nu: q_kostka(nu, mu, True) for nu in shapes})


def rect_kostka_lemma_check(a: int, b: int) -> bool:
    """Unique-filling property of rectangular q-Kostka coefficients.

    For every mu of size a*b fitting inside the (b+1) x a rectangle there
    is exactly one tableau of shape (a^b) and content mu, and its cocharge
    is a*binom(b,2).
    """
    if a < 1 or b < 1:
        raise ValueError("both rectangle sides must be positive")
    rect = (a,) * b
    expected = QTPoly.monomial(a * (b * (b - 1) // 2), 0)
    for mu in enumerate_partitions(a * b, max_len=b + 1, max_part=a):
        fillings = list(enumerate_ssyt_shape_content(rect, mu))
        if len(fillings) != 1:
            return False
        if q_kostka(rect, mu, True) != expected:
            return False
    return True
