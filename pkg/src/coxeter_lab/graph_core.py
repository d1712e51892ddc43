"""Finite trees ("woods"): parsing, bipartition, star types and classification."""

from __future__ import annotations

import json
from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from math import gcd
from typing import Iterable, Mapping, Sequence

from .errors import (
    CyclicGraph,
    Disconnected,
    DuplicateEdge,
    InvalidGraph,
    InvalidParity,
    InvalidStarType,
    UnknownVertex,
)

ODD = "odd"
EVEN = "even"

S0_DEFAULT_BOUND = 64


def opposite(parity: str) -> str:
    if parity not in (ODD, EVEN):
        raise ValueError(f"parity must be 'odd' or 'even', got {parity!r}")
    return EVEN if parity == ODD else ODD


@dataclass(frozen=True)
class Wood:
    """A finite connected acyclic graph with vertices in declaration order."""

    vertices: tuple[str, ...]
    edges: tuple[tuple[str, str], ...]
    parity_hint: Mapping[str, str] | None = field(default=None, compare=False, repr=False)

    @cached_property
    def adjacency(self) -> dict[str, frozenset[str]]:
        adj: dict[str, set[str]] = {v: set() for v in self.vertices}
        for a, b in self.edges:
            adj[a].add(b)
            adj[b].add(a)
        return {v: frozenset(ns) for v, ns in adj.items()}

    @cached_property
    def index(self) -> dict[str, int]:
        return {v: i for i, v in enumerate(self.vertices)}

    def neighbors(self, g: str) -> frozenset[str]:
        try:
            return self.adjacency[g]
        except KeyError:
            raise UnknownVertex(f"unknown vertex {g!r}") from None

    def __len__(self) -> int:
        return len(self.vertices)

    def to_json(self) -> dict:
        return {"vertices": list(self.vertices), "edges": [list(e) for e in self.edges]}


def make_wood(vertices: Iterable[str], edges: Iterable[Sequence[str]],
              parity: Mapping[str, str] | None = None) -> Wood:
    """Validate a vertex/edge list and return a :class:`Wood`."""
    verts = tuple(str(v) for v in vertices)
    if not verts:
        raise InvalidGraph("graph has no vertices")
    seen_v: set[str] = set()
    for v in verts:
        if v in seen_v:
            raise InvalidGraph(f"vertex {v!r} declared twice")
        seen_v.add(v)

    # union-find; an edge joining one component to itself closes a cycle
    parent = {v: v for v in verts}

    def find(v):
        while parent[v] != v:
            parent[v] = parent[parent[v]]
            v = parent[v]
        return v

    clean: list[tuple[str, str]] = []
    seen_e: set[frozenset[str]] = set()
    for e in edges:
        if len(e) != 2:
            raise InvalidGraph(f"edge {list(e)!r} must have exactly two endpoints")
        a, b = str(e[0]), str(e[1])
        for x in (a, b):
            if x not in seen_v:
                raise UnknownVertex(f"edge [{a!r}, {b!r}] uses undeclared vertex {x!r}")
        if a == b:
            raise CyclicGraph(f"self-loop at vertex {a!r}")
        key = frozenset((a, b))
        if key in seen_e:
            raise DuplicateEdge(f"edge [{a!r}, {b!r}] listed more than once")
        seen_e.add(key)
        ra, rb = find(a), find(b)
        if ra == rb:
            raise CyclicGraph(f"edge [{a!r}, {b!r}] closes a cycle")
        parent[ra] = rb
        clean.append((a, b))

    root = find(verts[0])
    for v in verts:
        if find(v) != root:
            raise Disconnected(f"vertex {v!r} is not connected to {verts[0]!r}")

    hint = None
    if parity is not None:
        hint = {str(k): str(p) for k, p in parity.items()}
    w = Wood(verts, tuple(clean), hint)
    if hint is not None:
        _check_parity(w, hint)
    return w


def parse_wood(text: str | Mapping) -> Wood:
    """Parse the JSON graph document ``{"vertices": [...], "edges": [[a, b], ...]}``.

    An optional ``"parity"`` object pins the bipartition; it is validated here.
    """
    doc = json.loads(text) if isinstance(text, (str, bytes)) else text
    if not isinstance(doc, Mapping) or "vertices" not in doc:
        raise InvalidGraph("graph document must be an object with a 'vertices' list")
    return make_wood(doc["vertices"], doc.get("edges", []), doc.get("parity"))


def _check_parity(w: Wood, parity: Mapping[str, str]) -> None:
    for v in w.vertices:
        if v not in parity:
            raise InvalidParity(f"parity block misses vertex {v!r}")
        if parity[v] not in (ODD, EVEN):
            raise InvalidParity(f"vertex {v!r} has parity {parity[v]!r}")
    for v in parity:
        if v not in w.index:
            raise UnknownVertex(f"parity block names unknown vertex {v!r}")
    for a, b in w.edges:
        if parity[a] == parity[b]:
            raise InvalidParity(f"edge [{a!r}, {b!r}] joins two {parity[a]} vertices")


@dataclass(frozen=True)
class Bipartition:
    """A proper 2-colouring plus the numeration g_1..g_n (odd vertices first).

    Also serves as the context that vectors over the graph refer to.
    """

    wood: Wood
    parity: Mapping[str, str]
    numeration: tuple[str, ...]
    p: int

    @cached_property
    def position(self) -> dict[str, int]:
        return {v: i for i, v in enumerate(self.numeration)}

    @cached_property
    def neighbor_positions(self) -> tuple[tuple[int, ...], ...]:
        pos = self.position
        return tuple(
            tuple(sorted(pos[h] for h in self.wood.adjacency[g])) for g in self.numeration
        )

    @property
    def n(self) -> int:
        return len(self.numeration)

    def positions_of(self, parity: str) -> range:
        return range(self.p) if parity == ODD else range(self.p, self.n)

    def vertices_of(self, parity: str) -> tuple[str, ...]:
        return self.numeration[: self.p] if parity == ODD else self.numeration[self.p:]

    def flipped(self) -> Bipartition:
        return _from_parity(self.wood, {v: opposite(p) for v, p in self.parity.items()})


def bipartition(w: Wood, seed: tuple[str, str] | None = None) -> Bipartition:
    """2-colour ``w`` by BFS from ``seed`` (default: first vertex, odd).

    A parity block carried by the wood is used when no seed is given.
    """
    if seed is None and w.parity_hint is not None:
        parity = dict(w.parity_hint)
    else:
        start, start_parity = seed if seed is not None else (w.vertices[0], ODD)
        if start not in w.index:
            raise UnknownVertex(f"unknown seed vertex {start!r}")
        opposite(start_parity)
        parity = {start: start_parity}
        queue = deque([start])
        while queue:
            g = queue.popleft()
            for h in w.adjacency[g]:
                if h not in parity:
                    parity[h] = opposite(parity[g])
                    queue.append(h)
    return _from_parity(w, parity)


def _from_parity(w: Wood, parity: Mapping[str, str]) -> Bipartition:
    odd = tuple(v for v in w.vertices if parity[v] == ODD)
    even = tuple(v for v in w.vertices if parity[v] == EVEN)
    return Bipartition(w, {v: parity[v] for v in w.vertices}, odd + even, len(odd))


def as_context(obj: Wood | Bipartition) -> Bipartition:
    return obj if isinstance(obj, Bipartition) else bipartition(obj)


def multiplicity(w: Wood, g: str) -> int:
    return len(w.neighbors(g))


def branching_kind(w: Wood, g: str) -> str:
    """'none' for mu <= 2, 'weak' for mu == 3 with two leaf neighbours, else 'strong'."""
    mu = multiplicity(w, g)
    if mu <= 2:
        return "none"
    leaves = sum(1 for h in w.adjacency[g] if len(w.adjacency[h]) == 1)
    if mu == 3 and leaves >= 2:
        return "weak"
    return "strong"


# -- stars -----------------------------------------------------------------

@dataclass(frozen=True)
class StarType:
    arms: tuple[int, ...]

    def __post_init__(self):
        arms = tuple(sorted((int(a) for a in self.arms), reverse=True))
        if len(arms) < 2 or any(a < 1 for a in arms):
            raise InvalidStarType(f"star type needs s >= 2 positive arms, got {arms}")
        object.__setattr__(self, "arms", arms)

    @property
    def s(self) -> int:
        return len(self.arms)

    def __iter__(self):
        return iter(self.arms)


def build_star(arms: StarType | Sequence[int]) -> Wood:
    """Canonical star: ``center`` plus arm vertices ``arm_i_j`` (j = distance from center)."""
    st = arms if isinstance(arms, StarType) else StarType(tuple(arms))
    verts = ["center"]
    edges = []
    for i, length in enumerate(st.arms, start=1):
        prev = "center"
        for j in range(1, length + 1):
            v = f"arm_{i}_{j}"
            verts.append(v)
            edges.append((prev, v))
            prev = v
    return make_wood(verts, edges)


def star_center(w: Wood) -> str | None:
    branch = [v for v in w.vertices if len(w.adjacency[v]) > 2]
    return branch[0] if len(branch) == 1 else None


def star_arms(w: Wood) -> list[tuple[str, ...]] | None:
    """Arms of a star as vertex paths leading away from the center, longest first."""
    c = star_center(w)
    if c is None:
        return None
    arms = []
    for first in sorted(w.adjacency[c], key=w.index.__getitem__):
        path = [first]
        prev, cur = c, first
        while True:
            nxt = [h for h in w.adjacency[cur] if h != prev]
            if not nxt:
                break
            prev, cur = cur, nxt[0]
            path.append(cur)
        arms.append(tuple(path))
    arms.sort(key=len, reverse=True)
    return arms


def star_type(w: Wood) -> StarType | None:
    """Arm lengths when ``w`` has exactly one vertex of multiplicity > 2."""
    arms = star_arms(w)
    if arms is None:
        return None
    return StarType(tuple(len(a) for a in arms))


# -- linear algebra over Q ---------------------------------------------------

def cartan_matrix(ctx: Bipartition) -> list[list[Fraction]]:
    n = ctx.n
    m = [[Fraction(0)] * n for _ in range(n)]
    for i, nbrs in enumerate(ctx.neighbor_positions):
        m[i][i] = Fraction(2)
        for j in nbrs:
            m[i][j] = Fraction(-1)
    return m


def _nullspace(m: list[list[Fraction]]) -> list[list[Fraction]]:
    rows = [r[:] for r in m]
    n = len(rows[0]) if rows else 0
    pivots: list[int] = []
    r = 0
    for c in range(n):
        piv = next((i for i in range(r, len(rows)) if rows[i][c] != 0), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        inv = 1 / rows[r][c]
        rows[r] = [x * inv for x in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c] != 0:
                f = rows[i][c]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
    free = [c for c in range(n) if c not in pivots]
    basis = []
    for fc in free:
        vec = [Fraction(0)] * n
        vec[fc] = Fraction(1)
        for i, pc in enumerate(pivots):
            vec[pc] = -rows[i][fc]
        basis.append(vec)
    return basis


def tits_positive_definite(w: Wood | Bipartition) -> bool:
    """Exact test: all pivots of the Cartan matrix 2I - A are positive."""
    m = cartan_matrix(as_context(w))
    n = len(m)
    for k in range(n):
        if m[k][k] <= 0:
            return False
        for i in range(k + 1, n):
            if m[i][k] != 0:
                f = m[i][k] / m[k][k]
                for j in range(k, n):
                    m[i][j] -= f * m[k][j]
    return True


def imaginary_root(w: Wood | Bipartition):
    """Primitive positive integer u with 2u(g) = sum of u over neighbours, or None."""
    from .gvector import GVector

    ctx = as_context(w)
    basis = _nullspace(cartan_matrix(ctx))
    if len(basis) != 1:
        return None
    vec = basis[0]
    if all(x < 0 for x in vec):
        vec = [-x for x in vec]
    if not all(x > 0 for x in vec):
        return None
    den = 1
    for x in vec:
        den = den * x.denominator // gcd(den, x.denominator)
    ints = [int(x * den) for x in vec]
    g = 0
    for x in ints:
        g = gcd(g, x)
    return GVector(ctx, tuple(Fraction(x // g) for x in ints))


# -- classification -----------------------------------------------------------

@dataclass(frozen=True)
class GraphClass:
    tag: str  # "Dynkin" | "ExtendedDynkin" | "Other"
    kind: str | None = None
    rank: int | None = None
    u: object = None
    star: StarType | None = None
    s0_k: int | None = None

    def to_json(self) -> dict:
        out: dict = {"class": self.tag}
        if self.kind is not None:
            out["kind"] = self.kind
        if self.rank is not None:
            out["rank"] = self.rank
        if self.u is not None:
            out["u"] = self.u.to_json()
        if self.star is not None:
            out["star"] = list(self.star.arms)
        if self.tag == "Other":
            out["s0_k"] = self.s0_k
        return out


_EXTENDED_STARS = {(1, 1, 1, 1): "D4~", (2, 2, 2): "E6~", (3, 3, 1): "E7~", (5, 2, 1): "E8~"}
_E_STARS = {(2, 2, 1): 6, (3, 2, 1): 7, (4, 2, 1): 8}


def s0_parameter(arms: StarType | Sequence[int], bound: int = S0_DEFAULT_BOUND) -> int | None:
    """The k >= 0 with rho_k(arms) = k + 4, testing only the widths k + 2 .. k + 4."""
    from .sepfunc import SepParam, rho_vec

    st = arms if isinstance(arms, StarType) else StarType(tuple(arms))
    for k in (st.s - 4, st.s - 3, st.s - 2):
        if 0 <= k <= bound and rho_vec(SepParam(k), st.arms) == k + 4:
            return k
    return None


def _dynkin_kind(w: Wood) -> tuple[str, int]:
    n = len(w)
    st = star_type(w)
    if st is None:
        return "A", n
    if st.s == 3 and st.arms[1] == 1:
        return "D", n
    if st.s == 3 and st.arms in _E_STARS:
        return "E", _E_STARS[st.arms]
    raise AssertionError(f"positive definite form on unexpected tree {st}")


def _extended_kind(w: Wood) -> str:
    weak = [v for v in w.vertices if branching_kind(w, v) == "weak"]
    branch = [v for v in w.vertices if len(w.adjacency[v]) > 2]
    if len(branch) == 2 and len(weak) == 2:
        return f"D{len(w) - 1}~"
    st = star_type(w)
    if st is not None and st.arms in _EXTENDED_STARS:
        return _EXTENDED_STARS[st.arms]
    raise AssertionError(f"null vector on unexpected tree {w.vertices}")


def classify(w: Wood | Bipartition, s0_bound: int = S0_DEFAULT_BOUND) -> GraphClass:
    ctx = as_context(w)
    wood = ctx.wood
    if tits_positive_definite(ctx):
        kind, rank = _dynkin_kind(wood)
        return GraphClass("Dynkin", kind, rank)
    u = imaginary_root(ctx)
    if u is not None:
        return GraphClass("ExtendedDynkin", _extended_kind(wood), u=u)
    st = star_type(wood)
    k = s0_parameter(st, s0_bound) if st is not None else None
    return GraphClass("Other", star=st, s0_k=k)
