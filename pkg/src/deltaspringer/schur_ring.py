"""Symmetric functions in the Schur basis with Z[q,t] coefficients.

A SchurPoly is a finite mapping from partitions to nonzero QTPoly
coefficients.  Products and skews go through explicit Littlewood-Richardson
tableau enumeration; serialization orders keys reverse-lexicographically.
"""

from __future__ import annotations

from functools import lru_cache

from .partitions import (
    Partition,
    as_partition,
    conjugate,
    contains,
    partitions_containing,
    enumerate_partitions,
)
from .qt_algebra import QTPoly, QT_ONE, rev_q
from .tableaux import kostka_number, lr_coefficient, lr_expand_skew


class InconsistentSystemError(ValueError):
    """Raised when a monomial-basis input is not actually symmetric."""


def _clean(terms):
    return {k: v for k, v in terms.items() if v}


class SchurPoly:
    """Finite Z[q,t]-linear combination of Schur functions."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        if terms is None:
            terms = {}
        fixed = {}
        for key, coeff in terms.items():
            if isinstance(coeff, int):
                coeff = QTPoly.const(coeff)
            if coeff:
                fixed[as_partition(key)] = coeff
        object.__setattr__(self, "terms", fixed)

    def __setattr__(self, name, value):
        raise AttributeError("SchurPoly is immutable")

    @staticmethod
    def zero() -> "SchurPoly":
        return SchurPoly()

    @staticmethod
    def one() -> "SchurPoly":
        return SchurPoly({(): QT_ONE})

    @staticmethod
    def schur(mu) -> "SchurPoly":
        return SchurPoly({as_partition(mu): QT_ONE})

    def coefficient(self, mu) -> QTPoly:
        return self.terms.get(as_partition(mu), QTPoly.zero())

    def support(self):
        return sorted(self.terms, reverse=True)

    def map_coefficients(self, fn) -> "SchurPoly":
        return SchurPoly({k: fn(v) for k, v in self.terms.items()})

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if not isinstance(other, SchurPoly):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __add__(self, other):
        if not isinstance(other, SchurPoly):
            return NotImplemented
        out = dict(self.terms)
        for k, v in other.terms.items():
            nv = out.get(k)
            nv = v if nv is None else nv + v
            if nv:
                out[k] = nv
            elif k in out:
                del out[k]
        res = SchurPoly.__new__(SchurPoly)
        object.__setattr__(res, "terms", out)
        return res

    def __neg__(self):
        return self.map_coefficients(lambda c: -c)

    def __sub__(self, other):
        if not isinstance(other, SchurPoly):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (int, QTPoly)):
            if isinstance(other, int):
                other = QTPoly.const(other)
            return SchurPoly({k: v * other for k, v in self.terms.items()})
        if isinstance(other, SchurPoly):
            return schur_mul(self, other)
        return NotImplemented

    __rmul__ = __mul__

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for key in self.support():
            coeff = self.terms[key]
            skey = "s[" + ",".join(str(x) for x in key) + "]"
            if coeff == QT_ONE:
                parts.append(skey)
            elif len(coeff.terms) == 1 and not str(coeff).startswith("-"):
                parts.append(f"{coeff}*{skey}")
            else:
                parts.append(f"({coeff})*{skey}")
        return " + ".join(parts)

    __repr__ = __str__

    def to_json_dict(self) -> dict:
        return {
            "basis": "schur",
            "terms": [
                {"partition": list(key), "coeff": self.terms[key].triples()}
                for key in self.support()
            ],
        }


def schur_mul(f: SchurPoly, g: SchurPoly) -> SchurPoly:
    """Product via the Littlewood-Richardson rule."""
    out = {}
    for eta, cf in f.terms.items():
        for rho, cg in g.terms.items():
            coeff = cf * cg
            # fewer LR fillings when the larger partition is the inner shape
            a, b = (eta, rho) if len(eta) >= len(rho) else (rho, eta)
            for nu in partitions_containing(sum(a) + sum(b), a):
                c = lr_coefficient(nu, a, b)
                if c:
                    prev = out.get(nu)
                    add = coeff * c
                    out[nu] = add if prev is None else prev + add
    return SchurPoly(_clean(out))


def skew(mu, f: SchurPoly) -> SchurPoly:
    """The adjoint of multiplication by the Schur function of mu."""
    mu = as_partition(mu)
    out = {}
    for nu, coeff in f.terms.items():
        if sum(nu) < sum(mu) or not contains(nu, mu):
            continue
        for eta, count in lr_expand_skew(nu, mu).items():
            prev = out.get(eta)
            add = coeff * count
            out[eta] = add if prev is None else prev + add
    return SchurPoly(_clean(out))


def omega(f: SchurPoly) -> SchurPoly:
    """The involution sending each Schur function to its conjugate."""
    return SchurPoly({conjugate(k): v for k, v in f.terms.items()})


def hall_inner(f: SchurPoly, g: SchurPoly) -> QTPoly:
    """Hall inner product; Schur functions are orthonormal."""
    out = QTPoly.zero()
    for k, v in f.terms.items():
        w = g.terms.get(k)
        if w is not None:
            out = out + v * w
    return out


def rev_q_schur(f: SchurPoly, d: int | None = None) -> SchurPoly:
    """q-reversal with one global degree across all Schur coefficients."""
    if d is None:
        d = max((c.q_degree() for c in f.terms.values()), default=0)
    return SchurPoly({k: rev_q(v, d) for k, v in f.terms.items()})


def e_n(n: int) -> SchurPoly:
    """Elementary symmetric function, the Schur function of a column."""
    if n < 0:
        raise ValueError("negative degree")
    return SchurPoly.schur((1,) * n)


def h_n(n: int) -> SchurPoly:
    """Complete homogeneous symmetric function, the Schur function of a row."""
    if n < 0:
        raise ValueError("negative degree")
    return SchurPoly.schur((n,) if n else ())


def specialize_t0(f: SchurPoly) -> SchurPoly:
    """Drop every term carrying a positive power of t."""
    return SchurPoly({k: v.specialize_t0() for k, v in f.terms.items()})


def t_coefficient(f: SchurPoly, j: int) -> SchurPoly:
    """The coefficient of t^j, as a SchurPoly over Z[q]."""
    return SchurPoly({k: v.coefficient_of_t(j) for k, v in f.terms.items()})


def swap_qt(f: SchurPoly) -> SchurPoly:
    return SchurPoly({k: v.swap_qt() for k, v in f.terms.items()})


def monomial_to_schur(coeffs: dict) -> SchurPoly:
    """Convert monomial-basis coefficients of a symmetric function to Schur.

    Inverts the unitriangular Kostka system along dominance order; raises
    InconsistentSystemError if a residue remains (the input was not the
    monomial expansion of an actual symmetric function).
    """
    residual = {}
    degree = None
    for key, coeff in coeffs.items():
        key = as_partition(key)
        if isinstance(coeff, int):
            coeff = QTPoly.const(coeff)
        if coeff:
            residual[key] = coeff
            if degree is None:
                degree = sum(key)
            elif degree != sum(key):
                raise InconsistentSystemError("mixed degrees in monomial input")
    if degree is None:
        return SchurPoly.zero()
    out = {}
    candidates = sorted(enumerate_partitions(degree), reverse=True)
    for nu in candidates:
        c = residual.pop(nu, None)
        if c is None or not c:
            continue
        out[nu] = c
        for mu in candidates:
            if mu >= nu:
                continue
            k = kostka_number(nu, mu)
            if k:
                prev = residual.get(mu, QTPoly.zero())
                residual[mu] = prev - c * k
    residual = {k: v for k, v in residual.items() if v}
    if residual:
        raise InconsistentSystemError(f"non-symmetric residue: {residual}")
    return SchurPoly(out)


def schur_to_monomial(f: SchurPoly) -> dict:
    """Monomial-basis coefficients of f, via Kostka counts."""
    out = {}
    for nu, coeff in f.terms.items():
        for mu in enumerate_partitions(sum(nu)):
            k = kostka_number(nu, mu)
            if k:
                prev = out.get(mu, QTPoly.zero())
                out[mu] = prev + coeff * k
    return {k: v for k, v in out.items() if v}
