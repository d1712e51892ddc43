"""Integer polynomial whose roots t give rho_{t-2}(v) = t + 2.

With u_0 = 0, u_1 = 1, u_{i+2} = t u_{i+1} - u_i each u_n is a monic integer
polynomial of degree n - 1, so clearing the denominators u_{v_i} + 1 leaves a
polynomial that is monic up to sign.  Its rational roots are therefore integers
and divide the constant term; every other real root is irrational.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import sympy

from .errors import EmptySequence, PropertyViolation
from .gvector import format_fraction
from .sepfunc import WeightSeq

T = sympy.Symbol("t")
ISOLATION_WIDTH = Fraction(1, 10**9)


def u_polynomials(n: int) -> list[sympy.Poly]:
    us = [sympy.Poly(0, T), sympy.Poly(1, T)]
    while len(us) <= n:
        us.append(T * us[-1] - us[-2])
    return us[: n + 1]


@dataclass(frozen=True)
class RealRoot:
    low: Fraction
    high: Fraction
    integer: int | None

    @property
    def irrational(self) -> bool:
        return self.integer is None

    def to_json(self) -> dict:
        return {"interval": [format_fraction(self.low), format_fraction(self.high)],
                "approx": float((self.low + self.high) / 2),
                "integer": self.integer, "irrational": self.irrational}


@dataclass(frozen=True)
class RationalityReport:
    seq: WeightSeq
    coefficients: tuple[int, ...]  # constant term first
    integer_roots: tuple[int, ...]
    real_roots_above_2: tuple[RealRoot, ...]

    @property
    def admissible_alphas(self) -> tuple[int, ...]:
        return tuple(t - 2 for t in self.integer_roots if t >= 2)

    @property
    def rational_alphas(self) -> tuple[int, ...]:
        """Every rational alpha >= 0 solving the equation; integers by monicity."""
        return self.admissible_alphas

    def to_json(self) -> dict:
        return {"sequence": self.seq.to_json(),
                "coefficients": list(self.coefficients),
                "integer_roots": list(self.integer_roots),
                "admissible_alpha": list(self.admissible_alphas),
                "real_roots_above_2": [r.to_json() for r in self.real_roots_above_2]}


def assemble(v) -> sympy.Poly:
    """sum_i (u_{v_i} + 1 + u_{v_i - 1}) prod_{j != i} (u_{v_j} + 1) - (t + 2) prod_j (u_{v_j} + 1)."""
    v = WeightSeq(v).require_finite()
    if not v:
        raise EmptySequence("rationality needs a nonempty sequence")
    us = u_polynomials(max(v))
    dens = [us[n] + 1 for n in v]
    total = sympy.Poly(0, T)
    for i, n in enumerate(v):
        term = dens[i] + us[n - 1]
        for j, d in enumerate(dens):
            if j != i:
                term = term * d
        total = total + term
    prod = sympy.Poly(1, T)
    for d in dens:
        prod = prod * d
    p = total - sympy.Poly(T + 2, T) * prod
    _, p = p.primitive()
    if p.LC() < 0:
        p = -p
    return p


def integer_roots(p: sympy.Poly) -> tuple[int, ...]:
    """Integer roots of a monic integer polynomial by divisors of the constant term."""
    if p.LC() != 1:
        raise PropertyViolation("monic", p.all_coeffs())
    roots = []
    q = p
    while q.degree() > 0 and q.eval(0) == 0:
        roots.append(0)
        q = sympy.Poly(sympy.quo(q.as_expr(), T), T)
    c = int(q.eval(0)) if q.degree() > 0 else 0
    if c:
        for d in sympy.divisors(abs(c)):
            for cand in (d, -d):
                if q.eval(cand) == 0:
                    roots.append(cand)
    return tuple(sorted(set(roots)))


def _sign(p: sympy.Poly, x) -> int:
    val = p.eval(sympy.Rational(x.numerator, x.denominator) if isinstance(x, Fraction) else x)
    return (val > 0) - (val < 0)


def rationality_polynomial(v) -> RationalityReport:
    v = WeightSeq(v)
    p = assemble(v)
    dens = [d + 1 for d in (u_polynomials(max(v))[n] for n in v)]
    # a root that zeroes some u_{v_i} + 1 came from clearing denominators
    ints = tuple(t for t in integer_roots(p) if all(d.eval(t) != 0 for d in dens))
    reals = []
    for (lo, hi), _mult in p.intervals(eps=sympy.Rational(ISOLATION_WIDTH.numerator,
                                                           ISOLATION_WIDTH.denominator)):
        lo, hi = Fraction(int(lo.p), int(lo.q)), Fraction(int(hi.p), int(hi.q))
        hit = [t for t in ints if lo <= t <= hi]
        if hit:
            if hit[0] > 2:
                reals.append(RealRoot(lo, hi, hit[0]))
        elif lo >= 2 or (hi > 2 and _sign(p, 2) != _sign(p, hi)):
            reals.append(RealRoot(lo, hi, None))
    coeffs = tuple(int(c) for c in reversed(p.all_coeffs()))
    return RationalityReport(v, coeffs, ints, tuple(reals))
