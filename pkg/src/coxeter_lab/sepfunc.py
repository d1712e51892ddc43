"""Separating functions rho_alpha and the solution sets K, K-hat and N.

``rho_alpha(n) = 1 + u_{n-1} / (u_n + 1)`` where ``u_0 = 0, u_1 = 1,
u_{i+2} = t u_{i+1} - u_i`` and ``t = alpha + 2``.  Everything is exact:
finite values are Fractions, the limit value at infinity is a :class:`Surd`.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Iterator

from .errors import InfiniteEntry, PropertyViolation
from .surd import Surd

INF = math.inf


class WeightSeq(tuple):
    """Nonincreasing sequence of positive integers (``math.inf`` allowed).

    Zeros are dropped and entries sorted on construction, so
    ``WeightSeq([1, 0, 3]) == (3, 1)``.
    """

    def __new__(cls, entries: Iterable = ()):
        vals = []
        for x in entries:
            if x in ("inf", "∞") or x == INF:
                vals.append(INF)
                continue
            if isinstance(x, float) or int(x) != x:
                raise ValueError(f"entries must be integers or inf, got {x!r}")
            x = int(x)
            if x < 0:
                raise ValueError(f"negative entry {x}")
            if x:
                vals.append(x)
        vals.sort(reverse=True)
        return super().__new__(cls, vals)

    @property
    def width(self) -> int:
        return len(self)

    @property
    def is_finite(self) -> bool:
        return INF not in self

    def require_finite(self) -> WeightSeq:
        if not self.is_finite:
            raise InfiniteEntry(f"{tuple(self)} has an infinite entry")
        return self

    def hat(self) -> WeightSeq:
        self.require_finite()
        if not self:
            return WeightSeq([1])
        return WeightSeq((self[0] + 1,) + self[1:])

    def widen(self, t: int) -> WeightSeq:
        """Prepend ``t`` copies of the leading entry."""
        self.require_finite()
        if not self:
            return self
        return WeightSeq((self[0],) * t + tuple(self))

    def leq(self, other: WeightSeq) -> bool:
        """Componentwise order on zero-padded sequences."""
        if len(self) > len(other):
            return False
        return all(a <= b for a, b in zip(self, other))

    def to_json(self) -> list:
        return ["inf" if x == INF else x for x in self]

    def __repr__(self):
        return "(" + ",".join("inf" if x == INF else str(x) for x in self) + ")"


def width(v) -> int:
    return WeightSeq(v).width


def hat(v) -> WeightSeq:
    return WeightSeq(v).hat()


def widen(v, t: int) -> WeightSeq:
    return WeightSeq(v).widen(t)


@dataclass(frozen=True)
class SepParam:
    """The parameter alpha >= 0 of rho_alpha; ``t = alpha + 2``."""

    alpha: Fraction
    _u: list = field(default_factory=lambda: [Fraction(0), Fraction(1)],
                     init=False, repr=False, compare=False)

    def __post_init__(self):
        a = Fraction(self.alpha)
        if a < 0:
            raise ValueError("alpha must be nonnegative")
        object.__setattr__(self, "alpha", a)

    @property
    def t(self) -> Fraction:
        return self.alpha + 2

    @property
    def is_integer(self) -> bool:
        return self.alpha.denominator == 1

    def u(self, n: int) -> Fraction:
        seq, t = self._u, self.t
        while len(seq) <= n:
            seq.append(t * seq[-1] - seq[-2])
        return seq[n]

    def __hash__(self):
        return hash(self.alpha)


def as_param(p) -> SepParam:
    return p if isinstance(p, SepParam) else SepParam(Fraction(p))


def rho_inf(p) -> Surd:
    """Limit 1 + 2 / (t + sqrt(t^2 - 4)) = 1 + (t - sqrt(t^2 - 4)) / 2."""
    p = as_param(p)
    t = p.t
    return Surd(1 + t / 2) - Surd.sqrt(t * t - 4) * Fraction(1, 2)


def rho(p, n):
    """Exact rho_alpha(n); a Fraction for finite n, a Surd for ``inf``."""
    p = as_param(p)
    if n == INF or n == "inf":
        return rho_inf(p)
    n = int(n)
    if n < 0:
        raise ValueError("rho is defined for n >= 0")
    if n == 0:
        return Fraction(0)
    return 1 + p.u(n - 1) / (p.u(n) + 1)


def rho_vec(p, v):
    """Sum of rho over the entries of ``v``; a Surd when v has infinite entries."""
    p = as_param(p)
    v = WeightSeq(v)
    total = Fraction(0)
    infinite = 0
    for x in v:
        if x == INF:
            infinite += 1
        else:
            total += rho(p, x)
    if infinite:
        return rho_inf(p) * infinite + total
    return total


def _cmp_inf(p: SepParam, value: Fraction, times: int) -> int:
    """Sign of ``value - times * rho(inf)``."""
    return (Surd(value) - rho_inf(p) * times).sign()


def invert_rho(p, r: Fraction, lo: int = 1) -> int | None:
    """The n >= lo with rho(n) == r, if any."""
    p = as_param(p)
    if r < rho(p, lo) or _cmp_inf(p, r, 1) >= 0:
        return None
    hi = max(lo, 1)
    while rho(p, hi) < r:
        hi *= 2
    while lo < hi:
        mid = (lo + hi) // 2
        if rho(p, mid) < r:
            lo = mid + 1
        else:
            hi = mid
    return lo if rho(p, lo) == r else None


# -- solution sets ---------------------------------------------------------

@dataclass(frozen=True)
class SolutionSet:
    tag: str  # "K" | "K^" | "N"
    members: tuple[WeightSeq, ...]

    def __post_init__(self):
        ms = sorted({WeightSeq(m) for m in self.members}, key=tuple, reverse=True)
        object.__setattr__(self, "members", tuple(ms))

    def __iter__(self) -> Iterator[WeightSeq]:
        return iter(self.members)

    def __len__(self):
        return len(self.members)

    def __contains__(self, v):
        return WeightSeq(v) in self.members

    def as_set(self) -> set[tuple]:
        return {tuple(m) for m in self.members}

    @property
    def width(self) -> int:
        return max((m.width for m in self.members), default=0)

    def to_json(self) -> list:
        return [m.to_json() for m in self.members]


def hat_set(xs: SolutionSet | Iterable) -> SolutionSet:
    members = [WeightSeq(x) for x in xs]
    w = max((m.width for m in members), default=0)
    return SolutionSet("K^", tuple(m.hat() for m in members) + (WeightSeq([1] * (w + 1)),))


def _fill_exact(p: SepParam, slots: int, r: Fraction, lo: int, prefix: list, out: list):
    """All nondecreasing completions of ``prefix`` by ``slots`` entries >= lo summing to r."""
    if slots == 1:
        n = invert_rho(p, r, lo)
        if n is not None:
            out.append(prefix + [n])
        return
    if _cmp_inf(p, r, slots) >= 0:
        return
    m = lo
    while rho(p, m) * slots <= r:
        _fill_exact(p, slots - 1, r - rho(p, m), m, prefix + [m], out)
        m += 1


def enumerate_K(p, target) -> SolutionSet:
    """Every v with rho_alpha(v) == target.

    Entries are chosen smallest first; with j slots left and residual r the
    next entry m needs rho(m) <= r / j, and r >= j * rho(inf) is infeasible.
    """
    p = as_param(p)
    target = Fraction(target)
    out: list = []
    # rho(1) = 1 is the least positive value, so the width is at most target
    for w in range(1, math.floor(target) + 1):
        _fill_exact(p, w, target, 1, [], out)
    return SolutionSet("K", tuple(WeightSeq(v) for v in out))


def _tails(p: SepParam, slots: int, r: Fraction, lo: int, prefix: list, out: list):
    """Candidate minimal overshoots: ``slots`` more entries (the last being the head).

    A minimal v with head h satisfies rho(tail) + rho(h - 1) <= target, which
    bounds every tail entry m by (slots - 1) rho(m) + rho(m - 1) <= r.
    """
    if slots == 1:
        if _cmp_inf(p, r, 1) >= 0:
            return
        h = lo
        if rho(p, h) <= r:
            # least h >= lo with rho(h) > r
            hi = max(h, 1)
            while rho(p, hi) <= r:
                hi *= 2
            while h < hi:
                mid = (h + hi) // 2
                if rho(p, mid) <= r:
                    h = mid + 1
                else:
                    hi = mid
        out.append(prefix + [h])
        return
    if _cmp_inf(p, r, slots) >= 0:
        return
    m = lo
    while (slots - 1) * rho(p, m) + rho(p, m - 1) <= r:
        _tails(p, slots - 1, r - rho(p, m), m, prefix + [m], out)
        m += 1


def is_minimal_overshoot(p, v, target) -> bool:
    """rho(v) > target while lowering any single entry by one gives <= target."""
    p = as_param(p)
    v = WeightSeq(v)
    total = rho_vec(p, v)
    if total <= target:
        return False
    for x in set(v):
        if total - rho(p, x) + rho(p, x - 1) > target:
            return False
    return True


def enumerate_N(p, target) -> SolutionSet:
    """The minimal solutions of rho_alpha(v) > target."""
    p = as_param(p)
    target = Fraction(target)
    max_width = math.floor(target) + 1
    if rho_vec(p, [1] * max_width) <= target:
        raise PropertyViolation("width bound", max_width)
    pool: list = []
    for w in range(1, max_width + 1):
        _tails(p, w, target, 1, [], pool)
    members = {WeightSeq(v) for v in pool}
    return SolutionSet("N", tuple(v for v in members if is_minimal_overshoot(p, v, target)))


@dataclass(frozen=True)
class SeparatingReport:
    separating: bool
    only_in_N: tuple[WeightSeq, ...] = ()
    only_in_hat_K: tuple[WeightSeq, ...] = ()

    def to_json(self) -> dict:
        return {
            "separating": self.separating,
            "only_in_N": [v.to_json() for v in self.only_in_N],
            "only_in_hat_K": [v.to_json() for v in self.only_in_hat_K],
        }


def is_separating(p, target) -> SeparatingReport:
    n_set = enumerate_N(p, target)
    k_hat = hat_set(enumerate_K(p, target))
    extra = SolutionSet("N", tuple(v for v in n_set if v not in k_hat))
    missing = SolutionSet("K^", tuple(v for v in k_hat if v not in n_set))
    return SeparatingReport(not extra.members and not missing.members,
                            extra.members, missing.members)


def dominated_exact_solution(p, target, w) -> WeightSeq | None:
    """Some v < w with rho(v) == target, searched over the exact solutions."""
    p = as_param(p)
    w = WeightSeq(w).require_finite()
    if rho_vec(p, w) <= target:
        return None
    for v in enumerate_K(p, target):
        if v != w and v.leq(w):
            return v
    return None


@dataclass(frozen=True)
class ShapeReport:
    alpha: Fraction
    horizon: int
    normalized: bool
    increasing: bool
    convex: bool
    tail_bound_checked: bool

    def to_json(self) -> dict:
        return {
            "alpha": str(self.alpha), "horizon": self.horizon,
            "normalized": self.normalized, "increasing": self.increasing,
            "convex": self.convex, "tail_bound_checked": self.tail_bound_checked,
        }


def check_convex_normalized(p, horizon: int) -> ShapeReport:
    """Check rho(1) = 1, strict increase, strictly decreasing increments and,
    for integer alpha = k, the bound rho_k(n) + k rho_k(inf) < (k+1) rho_k(n+1).

    Raises PropertyViolation with a witness on the first failure.
    """
    p = as_param(p)
    if horizon < 3:
        raise ValueError("horizon must be at least 3")
    if rho(p, 1) != 1:
        raise PropertyViolation("normalized", (1,))
    vals = [rho(p, n) for n in range(horizon + 2)]
    for n in range(horizon + 1):
        if not vals[n] < vals[n + 1]:
            raise PropertyViolation("increasing", (n, n + 1))
    # increments on N = {1, 2, ...} strictly decrease
    for n in range(2, horizon + 1):
        if not vals[n + 1] - vals[n] < vals[n] - vals[n - 1]:
            raise PropertyViolation("convex", (n, n - 1))
    limit = rho_inf(p)
    for n in range(horizon + 1):
        if not vals[n] < limit:
            raise PropertyViolation("below limit", (n,))
    tail_bound = p.is_integer
    if tail_bound:
        k = int(p.alpha)
        for n in range(horizon + 1):
            if not limit * k + vals[n] < (k + 1) * vals[n + 1]:
                raise PropertyViolation("tail bound", (n, n + 1))
    return ShapeReport(p.alpha, horizon, True, True, True, tail_bound)
