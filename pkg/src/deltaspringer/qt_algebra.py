"""Exact sparse polynomial and rational-function arithmetic in q and t over Z.

A QTPoly is a sparse polynomial in two fixed indeterminates q, t with
arbitrary-precision integer coefficients, stored as a mapping

    (q_exponent, t_exponent) -> nonzero coefficient.

QTRational is the corresponding fraction field element in canonical reduced
form.  Everything here is immutable and pure, so values are safe to share
across threads and to use as cache keys.
"""

from __future__ import annotations

from functools import lru_cache
from math import gcd as int_gcd


class NonDivisibleError(ArithmeticError):
    """Raised when an exact division by a power of q is impossible."""


class SingularMatrixError(ArithmeticError):
    """Raised when a linear system over QTRational has no unique solution."""


def _clean(terms):
    return {e: c for e, c in terms.items() if c}


class QTPoly:
    """Sparse element of Z[q,t].

    Term order for serialization is lexicographic in (q_exp, t_exp).
    """

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        if terms is None:
            terms = {}
        object.__setattr__(self, "terms", _clean(dict(terms)))

    def __setattr__(self, name, value):
        raise AttributeError("QTPoly is immutable")

    # -- constructors ------------------------------------------------------

    @staticmethod
    def zero() -> "QTPoly":
        return QTPoly()

    @staticmethod
    def const(c: int) -> "QTPoly":
        return QTPoly({(0, 0): c})

    @staticmethod
    def monomial(qe: int, te: int, c: int = 1) -> "QTPoly":
        if qe < 0 or te < 0:
            raise ValueError("exponents must be nonnegative")
        return QTPoly({(qe, te): c})

    @staticmethod
    def q() -> "QTPoly":
        return QTPoly({(1, 0): 1})

    @staticmethod
    def t() -> "QTPoly":
        return QTPoly({(0, 1): 1})

    # -- ring structure ----------------------------------------------------

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if isinstance(other, int):
            other = QTPoly.const(other)
        if not isinstance(other, QTPoly):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __add__(self, other):
        if isinstance(other, int):
            other = QTPoly.const(other)
        if not isinstance(other, QTPoly):
            return NotImplemented
        out = dict(self.terms)
        for e, c in other.terms.items():
            nc = out.get(e, 0) + c
            if nc:
                out[e] = nc
            elif e in out:
                del out[e]
        res = QTPoly.__new__(QTPoly)
        object.__setattr__(res, "terms", out)
        return res

    __radd__ = __add__

    def __neg__(self):
        res = QTPoly.__new__(QTPoly)
        object.__setattr__(res, "terms", {e: -c for e, c in self.terms.items()})
        return res

    def __sub__(self, other):
        if isinstance(other, int):
            other = QTPoly.const(other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            if other == 0:
                return QTPoly.zero()
            res = QTPoly.__new__(QTPoly)
            object.__setattr__(
                res, "terms", {e: c * other for e, c in self.terms.items()}
            )
            return res
        if not isinstance(other, QTPoly):
            return NotImplemented
        out = {}
        for (qa, ta), ca in self.terms.items():
            for (qb, tb), cb in other.terms.items():
                e = (qa + qb, ta + tb)
                nc = out.get(e, 0) + ca * cb
                if nc:
                    out[e] = nc
                elif e in out:
                    del out[e]
        res = QTPoly.__new__(QTPoly)
        object.__setattr__(res, "terms", out)
        return res

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative power of a polynomial")
        out = QTPoly.const(1)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base if n > 1 else base
            n >>= 1
        return out

    # -- inspection --------------------------------------------------------

    def q_degree(self) -> int:
        """Maximal q exponent, 0 for the zero polynomial."""
        return max((qe for qe, _ in self.terms), default=0)

    def t_degree(self) -> int:
        return max((te for _, te in self.terms), default=0)

    def is_constant(self) -> bool:
        return all(e == (0, 0) for e in self.terms)

    def constant_value(self) -> int:
        if not self.is_constant():
            raise ValueError(f"not a constant: {self}")
        return self.terms.get((0, 0), 0)

    def coefficient(self, qe: int, te: int) -> int:
        return self.terms.get((qe, te), 0)

    def coefficient_of_t(self, j: int) -> "QTPoly":
        """Coefficient of t^j, as a polynomial in q alone."""
        return QTPoly({(qe, 0): c for (qe, te), c in self.terms.items() if te == j})

    def specialize_t0(self) -> "QTPoly":
        return QTPoly({e: c for e, c in self.terms.items() if e[1] == 0})

    def swap_qt(self) -> "QTPoly":
        return QTPoly({(te, qe): c for (qe, te), c in self.terms.items()})

    def eval_at_one(self) -> int:
        """Value at q = t = 1 (total coefficient sum)."""
        return sum(self.terms.values())

    def leading_term(self):
        """(exponent pair, coefficient) maximal in the canonical order."""
        e = max(self.terms)
        return e, self.terms[e]

    # -- serialization -----------------------------------------------------

    def triples(self):
        """Sorted [q_exp, t_exp, coeff-as-decimal-string] triples."""
        return [[qe, te, str(c)] for (qe, te), c in sorted(self.terms.items())]

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for (qe, te), c in sorted(self.terms.items()):
            vars_ = []
            if qe == 1:
                vars_.append("q")
            elif qe > 1:
                vars_.append(f"q^{qe}")
            if te == 1:
                vars_.append("t")
            elif te > 1:
                vars_.append(f"t^{te}")
            body = "*".join(vars_)
            if not body:
                mono = str(c)
            elif c == 1:
                mono = body
            elif c == -1:
                mono = "-" + body
            else:
                mono = f"{c}*{body}"
            parts.append(mono)
        out = parts[0]
        for p in parts[1:]:
            out += "-" + p[1:] if p.startswith("-") else "+" + p
        return out

    __repr__ = __str__


QT_ZERO = QTPoly.zero()
QT_ONE = QTPoly.const(1)


def rev_q(f: QTPoly, d: int | None = None) -> QTPoly:
    """q-reversal q^d * f(1/q, t); by default d is the q-degree of f."""
    if d is None:
        d = f.q_degree()
    if d < f.q_degree():
        raise ValueError(f"reversal degree {d} below q-degree {f.q_degree()}")
    return QTPoly({(d - qe, te): c for (qe, te), c in f.terms.items()})


def q_int(n: int) -> QTPoly:
    """[n]_q = 1 + q + ... + q^(n-1)."""
    return QTPoly({(j, 0): 1 for j in range(n)})


@lru_cache(maxsize=None)
def q_binomial(n: int, m: int) -> QTPoly:
    """Gaussian binomial coefficient [n choose m]_q; zero when m > n."""
    if m < 0 or m > n:
        return QT_ZERO
    if m == 0 or m == n:
        return QT_ONE
    # Pascal recurrence keeps everything in Z[q].
    return q_binomial(n - 1, m - 1) + QTPoly.monomial(m, 0) * q_binomial(n - 1, m)


def p_qt(p: int) -> QTPoly:
    """Two-parameter analogue sum_{j=0}^{p-1} q^j t^(p-1-j)."""
    return QTPoly({(j, p - 1 - j): 1 for j in range(p)})


def exact_div_q_power(f: QTPoly, m: int) -> QTPoly:
    """Divide by q^m, requiring every term to carry at least q^m."""
    if any(qe < m for qe, _ in f.terms):
        raise NonDivisibleError(f"term with q-exponent below {m} in {f}")
    return QTPoly({(qe - m, te): c for (qe, te), c in f.terms.items()})


def exact_div(f: QTPoly, g: QTPoly) -> QTPoly:
    """Exact division f / g in Z[q,t]; raises NonDivisibleError on residue."""
    if not g:
        raise ZeroDivisionError("division by zero polynomial")
    if not f:
        return QT_ZERO
    (gq, gt), gc = g.leading_term()
    rem = dict(f.terms)
    out = {}
    while rem:
        e = max(rem)
        c = rem[e]
        qe, te = e[0] - gq, e[1] - gt
        if qe < 0 or te < 0 or c % gc:
            raise NonDivisibleError(f"inexact division of {f} by {g}")
        k = c // gc
        out[(qe, te)] = k
        for (aq, at), ac in g.terms.items():
            ee = (aq + qe, at + te)
            nc = rem.get(ee, 0) - k * ac
            if nc:
                rem[ee] = nc
            elif ee in rem:
                del rem[ee]
    return QTPoly(out)


# -- polynomial gcd in Z[q,t] ----------------------------------------------
#
# Computed as an iterated univariate gcd: view Z[q,t] = (Z[t])[q] and run a
# primitive polynomial remainder sequence, with Z[t] gcds handled the same
# way one level down.  Univariate Z[t] polynomials are coefficient tuples,
# low degree first, with no trailing zeros.


def _t_normalize(a):
    i = len(a)
    while i and a[i - 1] == 0:
        i -= 1
    return tuple(a[:i])


def _t_content(a):
    g = 0
    for c in a:
        g = int_gcd(g, c)
    return g


def _t_primitive(a):
    g = _t_content(a)
    if g in (0, 1):
        return a
    return tuple(c // g for c in a)


def _t_mul(a, b):
    if not a or not b:
        return ()
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return _t_normalize(out)


def _t_scale(a, k):
    if k == 0:
        return ()
    return tuple(c * k for c in a)


def _t_sub(a, b):
    n = max(len(a), len(b))
    return _t_normalize(
        [(a[i] if i < len(a) else 0) - (b[i] if i < len(b) else 0) for i in range(n)]
    )


def _t_pseudo_rem(a, b):
    """Pseudo-remainder of a by b in Z[t] (b nonzero)."""
    db, lb = len(b) - 1, b[-1]
    r = a
    while r and len(r) - 1 >= db:
        shift = len(r) - 1 - db
        lead = r[-1]
        r = _t_sub(_t_scale(r, lb), _t_mul((0,) * shift + (lead,), b))
    return r


def _t_gcd(a, b):
    a, b = _t_normalize(a), _t_normalize(b)
    if not a:
        return b
    if not b:
        return a
    ca, cb = _t_content(a), _t_content(b)
    a, b = _t_primitive(a), _t_primitive(b)
    while b:
        r = _t_primitive(_t_pseudo_rem(a, b))
        a, b = b, r
    g = _t_scale(a, int_gcd(ca, cb))
    return g if g[-1] > 0 else _t_scale(g, -1)


def _to_qt_list(f: QTPoly):
    """QTPoly as a list over q of Z[t] coefficient tuples."""
    dq = f.q_degree()
    rows = [[0] * (f.t_degree() + 1) for _ in range(dq + 1)]
    for (qe, te), c in f.terms.items():
        rows[qe][te] = c
    out = [_t_normalize(r) for r in rows]
    while out and not out[-1]:
        out.pop()
    return out


def _from_qt_list(rows) -> QTPoly:
    terms = {}
    for qe, row in enumerate(rows):
        for te, c in enumerate(row):
            if c:
                terms[(qe, te)] = c
    return QTPoly(terms)


def _qt_content(rows):
    g = ()
    for r in rows:
        g = _t_gcd(g, r)
        if g == (1,):
            break
    return g


def _qt_primitive(rows, content):
    if content in ((), (1,)):
        return rows
    out = []
    for r in rows:
        out.append(_t_exact_div(r, content))
    return out


def _t_exact_div(a, b):
    """Exact division in Z[t]; caller guarantees divisibility."""
    if not a:
        return ()
    out = [0] * (len(a) - len(b) + 1)
    r = list(a)
    for i in range(len(out) - 1, -1, -1):
        c = r[i + len(b) - 1]
        k, rr = divmod(c, b[-1])
        if rr:
            raise NonDivisibleError("inexact Z[t] division")
        out[i] = k
        if k:
            for j, y in enumerate(b):
                r[i + j] -= k * y
    if any(r):
        raise NonDivisibleError("inexact Z[t] division")
    return _t_normalize(out)


def _qt_pseudo_rem(a, b):
    """Pseudo-remainder in (Z[t])[q] of a by b (b nonzero)."""
    db, lb = len(b) - 1, b[-1]
    r = list(a)
    while r and len(r) - 1 >= db:
        shift = len(r) - 1 - db
        lead = r[-1]
        r = [_t_mul(c, lb) for c in r]
        for j, bc in enumerate(b):
            r[shift + j] = _t_sub(r[shift + j], _t_mul(lead, bc))
        while r and not r[-1]:
            r.pop()
    return r


def qt_gcd(f: QTPoly, g: QTPoly) -> QTPoly:
    """Polynomial gcd in Z[q,t], normalized to positive leading coefficient."""
    if not f:
        return _positive_leading(g)
    if not g:
        return _positive_leading(f)
    a, b = _to_qt_list(f), _to_qt_list(g)
    ca, cb = _qt_content(a), _qt_content(b)
    a, b = _qt_primitive(a, ca), _qt_primitive(b, cb)
    if len(a) < len(b):
        a, b = b, a
    while b:
        r = _qt_pseudo_rem(a, b)
        if r:
            rc = _qt_content(r)
            r = _qt_primitive(r, rc)
        a, b = b, r
    content = _t_gcd(ca, cb)
    result = _from_qt_list(a) * _from_qt_list([content])
    return _positive_leading(result)


def _positive_leading(f: QTPoly) -> QTPoly:
    if f and f.leading_term()[1] < 0:
        return -f
    return f


class QTRational:
    """Element of the fraction field of Z[q,t] in reduced canonical form.

    The denominator is nonzero and its leading coefficient (lexicographic
    order on exponent pairs) is positive; numerator and denominator are
    coprime in Z[q,t].
    """

    __slots__ = ("num", "den")

    def __init__(self, num, den=None):
        if isinstance(num, int):
            num = QTPoly.const(num)
        if den is None:
            den = QT_ONE
        elif isinstance(den, int):
            den = QTPoly.const(den)
        if not den:
            raise ZeroDivisionError("zero denominator")
        if not num:
            num, den = QT_ZERO, QT_ONE
        else:
            g = qt_gcd(num, den)
            if g != QT_ONE:
                num, den = exact_div(num, g), exact_div(den, g)
            if den.leading_term()[1] < 0:
                num, den = -num, -den
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "den", den)

    def __setattr__(self, name, value):
        raise AttributeError("QTRational is immutable")

    @staticmethod
    def _coerce(x):
        if isinstance(x, QTRational):
            return x
        if isinstance(x, (int, QTPoly)):
            return QTRational(x)
        return None

    def __bool__(self):
        return bool(self.num)

    def __eq__(self, other):
        other = QTRational._coerce(other)
        if other is None:
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        return hash((self.num, self.den))

    def __add__(self, other):
        other = QTRational._coerce(other)
        if other is None:
            return NotImplemented
        return QTRational(
            self.num * other.den + other.num * self.den, self.den * other.den
        )

    __radd__ = __add__

    def __neg__(self):
        r = QTRational.__new__(QTRational)
        object.__setattr__(r, "num", -self.num)
        object.__setattr__(r, "den", self.den)
        return r

    def __sub__(self, other):
        other = QTRational._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = QTRational._coerce(other)
        if other is None:
            return NotImplemented
        return QTRational(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = QTRational._coerce(other)
        if other is None:
            return NotImplemented
        if not other.num:
            raise ZeroDivisionError("division by zero rational")
        return QTRational(self.num * other.den, self.den * other.num)

    def __rtruediv__(self, other):
        return QTRational._coerce(other) / self

    def is_polynomial(self) -> bool:
        return self.den == QT_ONE

    def as_poly(self) -> QTPoly:
        if not self.is_polynomial():
            raise NonDivisibleError(f"nontrivial denominator: {self.den}")
        return self.num

    def __str__(self):
        if self.is_polynomial():
            return str(self.num)
        return f"({self.num})/({self.den})"

    __repr__ = __str__


QTR_ZERO = QTRational(0)
QTR_ONE = QTRational(1)


def rational_solve(matrix, rhs):
    """Exact solution of matrix * x = rhs over the fraction field of Z[q,t].

    Uses fraction-free Bareiss elimination on cleared-denominator rows, so
    intermediate entries stay polynomial; divisions are exact.  Raises
    SingularMatrixError when the matrix is not invertible.
    """
    n = len(matrix)
    if any(len(row) != n for row in matrix) or len(rhs) != n:
        raise ValueError("matrix must be square and match the rhs length")
    rows = []
    for i in range(n):
        entries = [QTRational._coerce(x) for x in matrix[i]] + [
            QTRational._coerce(rhs[i])
        ]
        common = QT_ONE
        for e in entries:
            common = exact_div(common * e.den, qt_gcd(common, e.den))
        rows.append([e.num * exact_div(common, e.den) for e in entries])

    prev = QT_ONE
    for col in range(n):
        piv = next((r for r in range(col, n) if rows[r][col]), None)
        if piv is None:
            raise SingularMatrixError(f"no pivot in column {col}")
        if piv != col:
            rows[col], rows[piv] = rows[piv], rows[col]
        for r in range(col + 1, n):
            for c in range(col + 1, n + 1):
                rows[r][c] = exact_div(
                    rows[col][col] * rows[r][c] - rows[r][col] * rows[col][c], prev
                )
            rows[r][col] = QT_ZERO
        prev = rows[col][col]

    sol = [QTR_ZERO] * n
    for i in range(n - 1, -1, -1):
        acc = QTRational(rows[i][n])
        for j in range(i + 1, n):
            acc = acc - QTRational(rows[i][j]) * sol[j]
        sol[i] = acc / QTRational(rows[i][i])
    return sol
