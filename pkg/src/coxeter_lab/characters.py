"""Standard characters and the (dimension, character) shadow of reflection functors.

A standard character is the min-normalized orbit of one bipartite half of the
primary vector: odd index m is c_{-m} applied to the odd half, even index m is
c_m applied to the even half.  Graphs in scope are the extended Dynkin graphs
(k = 0) and the stars with rho_k(arms) = k + 4.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .coxeter import (
    coxeter_partial,
    coxeter_t,
    defect_descent,
    singularity,
    word,
)
from .errors import (
    LeavesPositiveCone,
    NotApplicable,
    NotExtendedDynkin,
    NotInS0,
    NotSingular,
    UnknownVertex,
)
from .graph_core import (
    EVEN,
    ODD,
    Bipartition,
    as_context,
    classify,
    opposite,
    star_arms,
    star_center,
)
from .gvector import GVector
from .sepfunc import rho


# -- (d, f) pairs -------------------------------------------------------------

def support(d: GVector) -> set[str]:
    return {v for v, x in d.items() if x > 0}


def boundary(ctx: Bipartition, vertices: set[str]) -> set[str]:
    """M(X): vertices outside X adjacent to X."""
    adj = ctx.wood.adjacency
    return {h for g in vertices for h in adj[g]} - vertices


@dataclass(frozen=True)
class CharPair:
    d: GVector
    f: GVector

    @property
    def ctx(self) -> Bipartition:
        return self.d.ctx

    def _positive_on(self, vertices) -> bool:
        return all(self.f[g] > 0 for g in vertices)

    def in_s_prime(self) -> bool:
        """f > 0 on M(G^d)."""
        return self._positive_on(boundary(self.ctx, support(self.d)))

    def in_s_prime_parity(self, parity: str) -> bool:
        """Also f > 0 on G^d restricted to one parity class."""
        sup = support(self.d)
        return self.in_s_prime() and self._positive_on(
            g for g in sup if self.ctx.parity[g] == parity)

    def in_rep(self, parity: str) -> bool:
        """f > 0 on (M(G^d) ∪ G^d) ∩ (parity class)."""
        sup = support(self.d)
        region = sup | boundary(self.ctx, sup)
        return self._positive_on(g for g in region if self.ctx.parity[g] == parity)

    def to_json(self) -> dict:
        return {"d": self.d.to_json(), "f": self.f.to_json()}


def phi_shadow_step(pair: CharPair, parity: str) -> CharPair:
    """Dimension/character update of the reflection functor of one parity.

    d is reflected on ``parity`` vertices; f is reflected on the opposite
    vertices except where d (or the new d) vanishes next to its support.
    """
    ctx = pair.ctx
    d, f = pair.d, pair.f
    d_plus = coxeter_partial(d, parity)
    bad = [v for v, x in d_plus.items() if x < 0]
    if bad:
        raise LeavesPositiveCone(f"new dimension is negative at {bad[0]!r}")
    sup = support(d)
    region = sup | boundary(ctx, sup)
    for g in ctx.vertices_of(parity):
        if g in region and f[g] <= 0:
            raise NotApplicable(f"character vanishes at {g!r}, which the step needs positive")
    m_d = boundary(ctx, sup)
    m_dp = boundary(ctx, support(d_plus))
    adj = ctx.wood.adjacency
    new_f = dict(f.items())
    for g in ctx.vertices_of(opposite(parity)):
        if (d[g] == 0 and g in m_d) or (d_plus[g] == 0 and g in m_dp):
            continue
        new_f[g] = -f[g] + sum(f[h] for h in adj[g])
    return CharPair(d_plus, GVector.from_mapping(ctx, new_f))


# -- primary standard characters ------------------------------------------------

@dataclass(frozen=True)
class PrimaryData:
    family: str
    k: int
    odd: GVector   # supported on odd vertices, min nonzero entry 1
    even: GVector  # supported on even vertices, min nonzero entry 1
    lam_odd: Fraction  # sum of even-part over the neighbours of an odd vertex, per unit

    @property
    def ctx(self) -> Bipartition:
        return self.odd.ctx

    def primary(self, parity: str) -> GVector:
        return self.odd if parity == ODD else self.even


def _restrict(v: GVector, parity: str) -> GVector:
    ctx = v.ctx
    keep = ctx.positions_of(parity)
    return GVector(ctx, tuple(x if i in keep else Fraction(0) for i, x in enumerate(v.values)))


def _family_roles(k: int, arms: list[tuple[str, ...]], center: str):
    """Values of the two primary characters by vertex role on an S0 star.

    Returns (first, second) dicts; ``first`` holds the class containing the
    extremes of the longest arms.
    """
    lengths = tuple(len(a) for a in arms)
    first: dict[str, int] = {}
    second: dict[str, int] = {}

    if lengths == (1,) * (k + 4):
        family = "family1"
        for a in arms:
            first[a[0]] = 1
        second[center] = 1
    elif lengths == (2,) * (k + 3):
        family = "family2"
        for a in arms:
            first[a[1]] = 1
            second[a[0]] = 1
        first[center] = k + 3
    elif lengths == (3,) * (k + 2) + (1,):
        family = "family3"
        for a in arms[:-1]:
            first[a[2]] = 1
            first[a[0]] = k + 3
            second[a[1]] = 1
        first[arms[-1][0]] = k + 2
        second[center] = k + 2
    elif lengths == (5,) * (k + 1) + (2, 1):
        family = "family4"
        for a in arms[:-2]:
            first[a[4]] = 1
            first[a[2]] = k + 3
            first[a[0]] = k * k + 5 * k + 5
            second[a[3]] = 1
            second[a[1]] = k + 2
        two, one = arms[-2], arms[-1]
        first[two[0]] = k * k + 5 * k + 4
        second[two[1]] = k + 1
        first[one[0]] = k * k + 4 * k + 3
        second[center] = k * k + 4 * k + 3
    else:
        raise NotInS0(f"star {lengths} is not one of the k = {k} families")
    return family, first, second


def primary_standard(w) -> PrimaryData:
    """The two primary standard characters (odd half, even half) of ``w``."""
    ctx = as_context(w)
    cls = classify(ctx)
    if cls.tag == "ExtendedDynkin":
        u = cls.u
        odd = _restrict(u, ODD).min_normalized()
        even = _restrict(u, EVEN).min_normalized()
        family, k = cls.kind, 0
    elif cls.tag == "Other" and cls.s0_k is not None:
        k = cls.s0_k
        family, first, second = _family_roles(k, star_arms(ctx.wood), star_center(ctx.wood))
        some = next(iter(first))
        if ctx.parity[some] != ODD:
            first, second = second, first
        odd = GVector.from_mapping(ctx, first, default=0)
        even = GVector.from_mapping(ctx, second, default=0)
    else:
        raise NotInS0("graph is neither extended Dynkin nor an S0 star")
    lam = _eigen_ratio(odd, even, ODD)
    lam_even = _eigen_ratio(even, odd, EVEN)
    if lam * lam_even != k + 4:
        raise AssertionError(f"primary characters of {family} violate the k + 4 relation")
    return PrimaryData(family, k, odd, even, lam)


def _eigen_ratio(own: GVector, other: GVector, parity: str) -> Fraction:
    ctx = own.ctx
    adj = ctx.wood.adjacency
    ratios = {sum(other[h] for h in adj[g]) / own[g] for g in ctx.vertices_of(parity)}
    if len(ratios) != 1:
        raise AssertionError(f"{parity} half is not an eigenvector of the bipartite adjacency")
    return ratios.pop()


# -- standard characters ------------------------------------------------------

@dataclass(frozen=True)
class StandardCharacter:
    parity: str
    index: int
    vector: GVector
    family: str

    def to_json(self) -> dict:
        return {"family": self.family, "parity": self.parity,
                "index": self.index, "vector": self.vector.to_json()}


def _scale(k: int, parity: str, m: int) -> Fraction:
    """Ratio of the even block to the odd block when the odd block's
    neighbour sums are normalized to 1."""
    j, odd_index = divmod(m, 2)
    if parity == ODD:
        return rho(k, 2 * j) if not odd_index else k + 4 - rho(k, 2 * j)
    return k + 4 - rho(k, 2 * j - 1) if not odd_index else rho(k, 2 * j + 1)


def standard_character(w, parity: str, m: int) -> StandardCharacter:
    """Closed form in terms of rho_k."""
    if m < 0:
        raise ValueError("index must be nonnegative")
    data = primary_standard(w)
    if parity == EVEN and m == 0:
        vec = data.even
    else:
        vec = data.odd + data.even.scale(_scale(data.k, parity, m) / data.lam_odd)
    return StandardCharacter(parity, m, vec.min_normalized(), data.family)


def standard_character_iterative(w, parity: str, m: int) -> StandardCharacter:
    """Reference path: push the primary half through c_{+-m} and renormalize."""
    if m < 0:
        raise ValueError("index must be nonnegative")
    data = primary_standard(w)
    start = data.primary(parity)
    t = m if parity == EVEN else -m
    return StandardCharacter(parity, m, coxeter_t(start, t).min_normalized(), data.family)


# -- simplest objects and factorization ---------------------------------------

def simplest_object(w, g: str) -> CharPair:
    """(unit vector at g, character vanishing at g and positive on its neighbours)."""
    ctx = as_context(w)
    if g not in ctx.position:
        raise UnknownVertex(f"unknown vertex {g!r}")
    d = GVector.unit(ctx, g)
    try:
        f = primary_standard(ctx).primary(opposite(ctx.parity[g]))
    except NotInS0:
        f = GVector(ctx, tuple(Fraction(int(v != g)) for v in ctx.numeration))
    return CharPair(d, f)


@dataclass(frozen=True)
class Factorization:
    g: str
    m: int
    trajectory: tuple[CharPair, ...]

    def to_json(self) -> dict:
        return {"vertex": self.g, "m": self.m,
                "trajectory": [p.to_json() for p in self.trajectory]}


def _inverse_index(t: int) -> int:
    # c_t is an involution for odd t, c_t^{-1} = c_{-t} for even t
    return t if t % 2 else -t


def _trajectory(ctx: Bipartition, g: str, m: int) -> tuple[CharPair, ...]:
    """Standard objects along c_m: (c_j(unit g), standard character of index |j|).

    The character column is the standard character of the opposite parity to
    g, i.e. the image character up to a positive factor.
    """
    parity = opposite(ctx.parity[g])
    out = [simplest_object(ctx, g)]
    d = out[0].d
    for j, step in enumerate(word(m), start=1):
        d = coxeter_partial(d, step)
        out.append(CharPair(d, standard_character(ctx, parity, j).vector))
    return tuple(out)


def factor_singular(x: GVector) -> Factorization:
    """The unique (g, m) with c_m(unit g) = x, m >= 0 for even g, m <= 0 for odd g."""
    ctx = x.ctx
    cls = classify(ctx)
    if cls.tag != "ExtendedDynkin":
        raise NotExtendedDynkin("factorization by defect descent needs an extended Dynkin graph")
    verdict = singularity(x)
    if verdict.kind != "Singular":
        raise NotSingular(f"vector is {verdict.kind}")
    applied, y = defect_descent(x, cls.u, stop_at_simple=True)
    g = y.simple_vertex()
    if g is None:
        raise NotSingular("vector is singular but not a root")
    r = len(applied)
    # x = P_1 ... P_r (unit g); the last map undone is applied to g first
    m = 0 if r == 0 else (r if applied[-1] == ODD else -r)
    assert coxeter_t(GVector.unit(ctx, g), m) == x
    return Factorization(g, m, _trajectory(ctx, g, m))


def factor_by_search(x: GVector, bound: int = 200) -> Factorization:
    """Factor a singular root on any graph by walking c_t(x) to a simple vector."""
    ctx = x.ctx
    g = x.simple_vertex()
    if g is not None:
        return Factorization(g, 0, _trajectory(ctx, g, 0))
    for direction in (1, -1):
        y = x
        for r in range(1, bound + 1):
            t = direction * r
            y = coxeter_partial(y, word(t)[-1])
            if not y.is_positive():
                break
            g = y.simple_vertex()
            if g is not None:
                m = _inverse_index(t)
                if (m > 0) == (ctx.parity[g] == EVEN):
                    return Factorization(g, m, _trajectory(ctx, g, m))
    raise NotSingular(f"no simple vector within |t| <= {bound}")


def standard_object_for_root(x: GVector) -> CharPair:
    """(x, standard character of index |m|) for a singular root x = c_m(unit g)."""
    ctx = x.ctx
    data = primary_standard(ctx)
    if x.simple_vertex() is not None:
        fac = Factorization(x.simple_vertex(), 0, ())
    elif data.k == 0 and classify(ctx).tag == "ExtendedDynkin":
        fac = factor_singular(x)
    else:
        fac = factor_by_search(x)
    parity = opposite(ctx.parity[fac.g])
    char = standard_character(ctx, parity, abs(fac.m)).vector
    pair = CharPair(x, char)
    if not pair.in_s_prime():
        raise AssertionError("standard object fails the S' condition")
    return pair
