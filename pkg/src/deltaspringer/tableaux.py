"""Semistandard Young tableaux in French convention and their statistics.

Tableaux are tuples of row tuples listed bottom-to-top, so rows weakly
increase left to right and columns strictly increase upward.  Words are
tuples of positive integers.  Charge and cocharge follow the cyclic
right-to-left subword extraction, with labels incremented on a leftward
step (cocharge) or on a wrap (charge).
"""

from __future__ import annotations

from bisect import bisect_left, bisect_right
from functools import lru_cache
from typing import Iterator, NamedTuple

from .partitions import (
    DeltaParams,
    Partition,
    SizeMismatchError,
    ContainmentViolationError,
    as_partition,
    contains,
    enumerate_partitions,
    is_horizontal_strip,
    lambda_rect,
)

Tableau = tuple  # rows bottom-to-top
Word = tuple


class NonPartitionContentError(ValueError):
    """Charge and cocharge are only defined for words of partition content."""


class NotHorizontalStripError(ValueError):
    """Raised when a shape difference is not a horizontal strip."""


def shape(t: Tableau) -> Partition:
    return tuple(len(row) for row in t)


def content(t_or_word, nletters: int | None = None) -> tuple:
    """Multiplicity vector of letters 1..max (or padded to nletters)."""
    if t_or_word and isinstance(t_or_word[0], tuple):
        letters = [x for row in t_or_word for x in row]
    else:
        letters = list(t_or_word)
    m = max(letters, default=0)
    if nletters is not None:
        m = max(m, nletters)
    out = [0] * m
    for x in letters:
        out[x - 1] += 1
    return tuple(out)


def is_ssyt(t: Tableau) -> bool:
    for i, row in enumerate(t):
        if any(a > b for a, b in zip(row, row[1:])):
            return False
        if i and len(row) > len(t[i - 1]):
            return False
        if i and any(t[i - 1][j] >= row[j] for j in range(len(row))):
            return False
        if any(x < 1 for x in row):
            return False
    return True


def reading_word(t) -> Word:
    """Rows concatenated top to bottom, each left to right."""
    if isinstance(t, SkewTableau):
        t = t.rows
    out = []
    for row in reversed(t):
        out.extend(row)
    return tuple(out)


class SkewTableau(NamedTuple):
    """Filling of outer/inner; rows hold only the cells beyond inner."""

    inner: Partition
    rows: tuple

    def outer(self) -> Partition:
        inner = self.inner
        return tuple(
            (inner[i] if i < len(inner) else 0) + len(row)
            for i, row in enumerate(self.rows)
        )

    def validate(self) -> "SkewTableau":
        inner = as_partition(self.inner)
        outer = self.outer()
        if not contains(as_partition(tuple(sorted(outer, reverse=True))), inner):
            pass  # outer validity is checked below via monotonicity
        for a, b in zip(outer, outer[1:]):
            if a < b:
                raise ValueError(f"outer shape not a partition: {outer}")
        if len(inner) > len(self.rows) and any(inner[len(self.rows):]):
            raise ValueError("inner sticks out above the filling")
        for i, row in enumerate(self.rows):
            if any(a > b for a, b in zip(row, row[1:])):
                raise ValueError(f"row {i} not weakly increasing")
        for i in range(len(self.rows) - 1):
            lo_off = inner[i] if i < len(inner) else 0
            hi_off = inner[i + 1] if i + 1 < len(inner) else 0
            for j, val in enumerate(self.rows[i + 1]):
                col = hi_off + j
                if col >= lo_off + len(self.rows[i]):
                    raise ValueError("cell hangs over the row below")
                if col >= lo_off and self.rows[i][col - lo_off] >= val:
                    raise ValueError("column not strictly increasing")
        return self


class BatteryTableau(NamedTuple):
    """Device/battery pair whose joint content is the padded partition."""

    device: Tableau
    battery: Tableau
    params: DeltaParams

    def word(self) -> Word:
        return reading_word(self.device) + reading_word(self.battery)

    def validate(self) -> "BatteryTableau":
        p = self.params.validate()
        nk = p.n - p.k
        want = ((nk,) * (p.s - 1)) if nk else ()
        if shape(self.battery) != tuple(x for x in want if x):
            raise ValueError(f"battery shape {shape(self.battery)} != {want}")
        if not is_ssyt(self.device) or not is_ssyt(self.battery):
            raise ValueError("device or battery not semistandard")
        lam = lambda_rect(p)
        if content(self.word(), len(lam)) != lam:
            raise ValueError("joint content differs from the padded partition")
        return self


def battery_skew(t: BatteryTableau) -> SkewTableau:
    """The battery placed down-and-right of the device, as one skew tableau."""
    if not t.battery:
        return SkewTableau((), t.device)
    w = len(t.device[0]) if t.device else 0
    inner = (w,) * len(t.battery)
    return SkewTableau(inner, tuple(t.battery) + tuple(t.device))


# -- charge and cocharge -----------------------------------------------------


def _labelings(word: Word):
    """Cocharge labels, charge labels, and subword index for each position.

    Subwords are extracted by scanning right to left, cyclically, always
    taking the first remaining copy of the next letter.  The cocharge label
    increments on a strictly-left step; the charge label increments on a
    wrap (a step to the right).
    """
    cont = content(word)
    if any(a < b for a, b in zip(cont, cont[1:])) or (cont and cont[-1] == 0):
        raise NonPartitionContentError(f"content {cont} is not a partition")
    maxletter = len(cont)
    positions = {v: [] for v in range(1, maxletter + 1)}
    for i, x in enumerate(word):
        positions[x].append(i)
    cc_labels = [0] * len(word)
    ch_labels = [0] * len(word)
    sub_ids = [0] * len(word)
    sub = 0
    consumed = 0
    while consumed < len(word):
        lst = positions[1]
        pos = lst.pop()
        consumed += 1
        sub_ids[pos] = sub
        cc = ch = 0
        for v in range(2, maxletter + 1):
            lst = positions[v]
            if not lst:
                break
            i = bisect_left(lst, pos) - 1
            if i >= 0:
                pos = lst.pop(i)
                cc += 1
            else:
                pos = lst.pop()
                ch += 1
            cc_labels[pos] = cc
            ch_labels[pos] = ch
            sub_ids[pos] = sub
            consumed += 1
        sub += 1
    return cc_labels, ch_labels, sub_ids


def cocharge(word: Word) -> int:
    cc, _, _ = _labelings(tuple(word))
    return sum(cc)


def charge(word: Word) -> int:
    _, ch, _ = _labelings(tuple(word))
    return sum(ch)


def cc_battery(t: BatteryTableau) -> int:
    return cocharge(t.word())


def ch_battery(t: BatteryTableau) -> int:
    return charge(t.word())


# -- RSK insertion and unbumping ---------------------------------------------


def rsk_insert_letter(t: Tableau, x: int):
    """Row-bump x into t; returns the new tableau and the new cell (row, col)."""
    rows = [list(row) for row in t]
    r = 0
    while True:
        if r == len(rows):
            rows.append([x])
            return tuple(tuple(row) for row in rows), (r, 0)
        row = rows[r]
        i = bisect_right(row, x)
        if i == len(row):
            row.append(x)
            return tuple(tuple(row) for row in rows), (r, i)
        x, row[i] = row[i], x
        r += 1


def rsk_insert_word(t: Tableau, word) -> Tableau:
    for x in word:
        t, _ = rsk_insert_letter(t, x)
    return t


def rsk_insert_tableau(d: Tableau, b: Tableau) -> Tableau:
    """The product tableau formed by inserting the reading word of b into d."""
    return rsk_insert_word(d, reading_word(b))


def _unbump_cell(rows, r: int) -> int:
    """Reverse-bump the last cell of row r out through the bottom; rows mutate."""
    y = rows[r].pop()
    for rr in range(r - 1, -1, -1):
        row = rows[rr]
        i = bisect_left(row, y) - 1
        y, row[i] = row[i], y
    return y


def unbump_horizontal_strip(s: Tableau, target_shape: Partition):
    """Remove shape(s)/target as a horizontal strip by unbumping right to left.

    Returns the shrunk tableau and the ejected letters as a weakly
    increasing word; inserting the word back reproduces s.
    """
    outer = shape(s)
    target = as_partition(target_shape)
    if not contains(outer, target) or not is_horizontal_strip(outer, target):
        raise NotHorizontalStripError(f"{outer}/{target} is not a horizontal strip")
    cells = []
    for r, length in enumerate(outer):
        t_len = target[r] if r < len(target) else 0
        cells.extend((r, c) for c in range(t_len, length))
    cells.sort(key=lambda rc: -rc[1])
    rows = [list(row) for row in s]
    ejected = []
    for r, _ in cells:
        ejected.append(_unbump_cell(rows, r))
    while rows and not rows[-1]:
        rows.pop()
    word = tuple(reversed(ejected))
    if any(a > b for a, b in zip(word, word[1:])):
        raise NotHorizontalStripError("unbumped letters were not monotone")
    return tuple(tuple(row) for row in rows), word


def jdt_rectify(st: SkewTableau) -> Tableau:
    """Jeu de taquin rectification to a straight-shape tableau."""
    st = SkewTableau(as_partition(st.inner), tuple(tuple(r) for r in st.rows))
    inner = list(st.inner) + [0] * (len(st.rows) - len(st.inner))
    grid = [[None] * inner[i] + list(row) for i, row in enumerate(st.rows)]
    while any(inner):
        r = max(i for i, v in enumerate(inner) if v)
        c = inner[r] - 1
        inner[r] -= 1
        while True:
            right = grid[r][c + 1] if c + 1 < len(grid[r]) else None
            above = None
            if r + 1 < len(grid) and c < len(grid[r + 1]):
                above = grid[r + 1][c]
            if above is None and right is None:
                grid[r].pop()
                break
            if right is None or (above is not None and above <= right):
                grid[r][c] = above
                r, c = r + 1, c
            else:
                grid[r][c] = right
                c += 1
            grid[r][c] = None
    rows = [tuple(row) for row in grid if row]
    return tuple(rows)


# -- enumerators --------------------------------------------------------------


def _ssyt_by_strips(content_vec, shape_cap=None) -> Iterator[Tableau]:
    """All SSYT whose letter-i cells form content_vec[i-1]-size strips."""
    nletters = len(content_vec)

    def rec(letter, cur, rows):
        if letter > nletters:
            yield tuple(tuple(r) for r in rows if r)
            return
        need = content_vec[letter - 1]
        max_rows = letter if shape_cap is None else min(letter, len(shape_cap))
        for adds in _strip_adds(cur, need, max_rows, shape_cap):
            new_rows = [list(r) for r in rows]
            while len(new_rows) < len(adds):
                new_rows.append([])
            new = []
            for i, a in enumerate(adds):
                new_rows[i].extend([letter] * a)
                new.append((cur[i] if i < len(cur) else 0) + a)
            yield from rec(letter + 1, tuple(new), new_rows)

    yield from rec(1, (), [])


def _strip_adds(cur, total, max_rows, cap):
    """Row-increment vectors adding a horizontal strip of the given size."""

    def rec(r, remaining):
        if r == max_rows:
            if remaining == 0:
                yield ()
            return
        cur_r = cur[r] if r < len(cur) else 0
        hi = remaining
        if r >= 1:
            cur_below = cur[r - 1] if r - 1 < len(cur) else 0
            hi = min(hi, cur_below - cur_r)
        if cap is not None:
            cap_r = cap[r] if r < len(cap) else 0
            hi = min(hi, cap_r - cur_r)
        for a in range(hi, -1, -1):
            for rest in rec(r + 1, remaining - a):
                yield (a,) + rest

    yield from rec(0, total)


def enumerate_ssyt_content(mu) -> Iterator[Tableau]:
    """All straight-shape SSYT with the given content (weak compositions allowed)."""
    yield from _ssyt_by_strips(tuple(mu))


def enumerate_ssyt_shape_content(nu: Partition, mu) -> Iterator[Tableau]:
    """All SSYT of shape nu and content mu; the count is the Kostka number."""
    nu = as_partition(nu)
    mu = tuple(mu)
    if sum(nu) != sum(mu):
        raise SizeMismatchError(f"|{nu}| != |{mu}|")
    for t in _ssyt_by_strips(mu, shape_cap=nu):
        if shape(t) == nu:
            yield t


@lru_cache(maxsize=None)
def kostka_number(nu: Partition, mu) -> int:
    return sum(1 for _ in enumerate_ssyt_shape_content(nu, mu))


def battery_shape(params: DeltaParams) -> Partition:
    p = params.validate()
    nk = p.n - p.k
    return ((nk,) * (p.s - 1)) if nk and p.s > 1 else ()


def _battery_contents(lam_rect, rect) -> Iterator[tuple]:
    """Content vectors (length s) for batteries compatible with the target."""
    s = len(lam_rect)
    total = sum(rect)

    def rec(i, remaining):
        if i == s:
            if remaining == 0:
                yield ()
            return
        for v in range(min(remaining, lam_rect[i]), -1, -1):
            for rest in rec(i + 1, remaining - v):
                yield (v,) + rest

    yield from rec(0, total)


def enumerate_battery_tableaux(params: DeltaParams) -> Iterator[BatteryTableau]:
    """All device/battery pairs with joint content the padded partition."""
    p = params.validate()
    lam = lambda_rect(p)
    rect = battery_shape(p)
    if not rect:
        for dev in _ssyt_by_strips(lam):
            yield BatteryTableau(dev, (), p)
        return
    for bcontent in _battery_contents(lam, rect):
        batteries = list(enumerate_ssyt_shape_content(rect, bcontent))
        if not batteries:
            continue
        dcontent = tuple(a - b for a, b in zip(lam, bcontent))
        for dev in _ssyt_by_strips(dcontent):
            for bat in batteries:
                yield BatteryTableau(dev, bat, p)


def enumerate_generalized_battery(rho: Partition, mu: Partition):
    """Device/battery pairs with battery shape rho and joint content mu."""
    rho = as_partition(rho)
    mu = as_partition(mu)

    def contents(i, remaining):
        if i == len(mu):
            if remaining == 0:
                yield ()
            return
        for v in range(min(remaining, mu[i]), -1, -1):
            for rest in contents(i + 1, remaining - v):
                yield (v,) + rest

    for bcontent in contents(0, sum(rho)):
        batteries = list(enumerate_ssyt_shape_content(rho, bcontent))
        if not batteries:
            continue
        dcontent = tuple(a - b for a, b in zip(mu, bcontent))
        for dev in _ssyt_by_strips(dcontent):
            for bat in batteries:
                yield dev, bat


def max_cocharge_tableaux(params: DeltaParams):
    """The unique maximal-cocharge pair for each admissible device shape."""
    p = params.validate()
    n, lam, s = p.n, p.lam, p.s
    nk = n - p.k
    rect = battery_shape(p)
    battery = tuple((i + 1,) * nk for i in range(len(rect)))
    for nu in enumerate_partitions(n, max_len=s):
        if not contains(nu, lam):
            continue
        if not is_horizontal_strip(nu, lam):
            continue
        device = []
        for i, part in enumerate(nu):
            base = lam[i] if i < len(lam) else 0
            device.append((i + 1,) * base + (s,) * (part - base))
        yield nu, BatteryTableau(tuple(device), battery, p)


# -- Littlewood-Richardson fillings -------------------------------------------


def _lr_fill(outer, inner, content_cap):
    """DFS over Yamanouchi skew fillings in reverse reading order.

    Yields (filling rows, content) where rows cover outer/inner bottom-to-top.
    content_cap of None enumerates every content.
    """
    outer = tuple(outer)
    inner = tuple(inner) + (0,) * (len(outer) - len(inner))
    cells = []
    for r in range(len(outer)):
        for c in range(outer[r] - 1, inner[r] - 1, -1):
            cells.append((r, c))
    grid = {}
    counts = {}

    def rec(idx):
        if idx == len(cells):
            rows = tuple(
                tuple(grid[(r, c)] for c in range(inner[r], outer[r]))
                for r in range(len(outer))
            )
            used = max((v for v, k in counts.items() if k), default=0)
            yield rows, tuple(counts.get(v, 0) for v in range(1, used + 1))
            return
        r, c = cells[idx]
        right = grid.get((r, c + 1))
        lo = 1
        if r and inner[r - 1] <= c:
            lo = grid[(r - 1, c)] + 1
        hi = r + 1 if content_cap is None else min(r + 1, len(content_cap))
        if right is not None:
            hi = min(hi, right)
        for v in range(lo, hi + 1):
            if v > 1 and counts.get(v - 1, 0) <= counts.get(v, 0):
                continue
            if content_cap is not None and counts.get(v, 0) >= content_cap[v - 1]:
                continue
            grid[(r, c)] = v
            counts[v] = counts.get(v, 0) + 1
            yield from rec(idx + 1)
            counts[v] -= 1
            del grid[(r, c)]

    yield from rec(0)


def enumerate_lr_tableaux(outer: Partition, inner: Partition, cont: Partition):
    """Yamanouchi skew fillings of outer/inner with the given content."""
    outer, inner, cont = as_partition(outer), as_partition(inner), as_partition(cont)
    if not contains(outer, inner):
        raise ContainmentViolationError(f"{outer} does not contain {inner}")
    if sum(outer) - sum(inner) != sum(cont):
        raise SizeMismatchError(f"|{outer}/{inner}| != |{cont}|")
    for rows, got in _lr_fill(outer, inner, cont):
        if got == cont:
            yield SkewTableau(inner, rows)


@lru_cache(maxsize=None)
def lr_coefficient(outer: Partition, inner: Partition, cont: Partition) -> int:
    """The Littlewood-Richardson coefficient c^outer_{inner, cont}."""
    return sum(1 for _ in enumerate_lr_tableaux(outer, inner, cont))


@lru_cache(maxsize=None)
def lr_expand_skew(outer: Partition, inner: Partition):
    """Contents of all Yamanouchi fillings of outer/inner, with multiplicity."""
    outer, inner = as_partition(outer), as_partition(inner)
    if not contains(outer, inner):
        raise ContainmentViolationError(f"{outer} does not contain {inner}")
    out = {}
    for _, got in _lr_fill(outer, inner, None):
        out[got] = out.get(got, 0) + 1
    return out
