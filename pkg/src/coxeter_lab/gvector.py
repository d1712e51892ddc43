"""Exact rational vectors indexed by the vertices of a wood."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping

from .errors import UnknownVertex


def to_fraction(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, float):
        raise TypeError("floats are not accepted; pass ints, Fractions or 'p/q' strings")
    return Fraction(x)


def format_fraction(x: Fraction) -> str:
    """Reduced 'p/q', or plain 'p' for integers."""
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


@dataclass(frozen=True)
class GVector:
    """Immutable vector; ``values`` are stored in numeration order of ``ctx``."""

    ctx: "Bipartition"  # noqa: F821
    values: tuple[Fraction, ...]

    @classmethod
    def from_mapping(cls, ctx, data: Mapping[str, object], default=None) -> GVector:
        for v in data:
            if v not in ctx.position:
                raise UnknownVertex(f"vector names unknown vertex {v!r}")
        vals = []
        for v in ctx.numeration:
            if v in data:
                vals.append(to_fraction(data[v]))
            elif default is not None:
                vals.append(to_fraction(default))
            else:
                raise UnknownVertex(f"vector has no entry for vertex {v!r}")
        return cls(ctx, tuple(vals))

    @classmethod
    def from_list(cls, ctx, values: Iterable) -> GVector:
        """Values given in numeration order."""
        vals = tuple(to_fraction(x) for x in values)
        if len(vals) != ctx.n:
            raise ValueError(f"expected {ctx.n} entries, got {len(vals)}")
        return cls(ctx, vals)

    @classmethod
    def zero(cls, ctx) -> GVector:
        return cls(ctx, (Fraction(0),) * ctx.n)

    @classmethod
    def unit(cls, ctx, g: str) -> GVector:
        if g not in ctx.position:
            raise UnknownVertex(f"unknown vertex {g!r}")
        i = ctx.position[g]
        return cls(ctx, tuple(Fraction(int(j == i)) for j in range(ctx.n)))

    def __getitem__(self, g: str) -> Fraction:
        try:
            return self.values[self.ctx.position[g]]
        except KeyError:
            raise UnknownVertex(f"unknown vertex {g!r}") from None

    def __iter__(self):
        return iter(self.values)

    def __len__(self):
        return len(self.values)

    def items(self):
        return zip(self.ctx.numeration, self.values)

    def _check(self, other: GVector):
        if other.ctx is not self.ctx and other.ctx.numeration != self.ctx.numeration:
            raise ValueError("vectors live on different graphs")

    def __add__(self, other: GVector) -> GVector:
        self._check(other)
        return GVector(self.ctx, tuple(a + b for a, b in zip(self.values, other.values)))

    def __sub__(self, other: GVector) -> GVector:
        self._check(other)
        return GVector(self.ctx, tuple(a - b for a, b in zip(self.values, other.values)))

    def __neg__(self) -> GVector:
        return GVector(self.ctx, tuple(-a for a in self.values))

    def scale(self, c) -> GVector:
        c = to_fraction(c)
        return GVector(self.ctx, tuple(c * a for a in self.values))

    def __eq__(self, other):
        if not isinstance(other, GVector):
            return NotImplemented
        return self.ctx.numeration == other.ctx.numeration and self.values == other.values

    def __hash__(self):
        return hash((self.ctx.numeration, self.values))

    def is_positive(self) -> bool:
        """Member of V_G^+: nonnegative and nonzero."""
        return all(x >= 0 for x in self.values) and any(x != 0 for x in self.values)

    def is_integral(self) -> bool:
        return all(x.denominator == 1 for x in self.values)

    def support(self) -> frozenset[str]:
        return frozenset(v for v, x in self.items() if x != 0)

    def simple_vertex(self) -> str | None:
        """The vertex g when this is the unit vector at g."""
        nz = [(v, x) for v, x in self.items() if x != 0]
        if len(nz) == 1 and nz[0][1] == 1:
            return nz[0][0]
        return None

    def min_normalized(self) -> GVector:
        """Rescale so the smallest nonzero entry equals 1."""
        nz = [x for x in self.values if x != 0]
        if not nz:
            raise ValueError("cannot normalize the zero vector")
        m = min(nz)
        if m <= 0:
            raise ValueError("min-normalization needs a nonnegative vector")
        return self.scale(1 / m)

    def to_json(self) -> dict[str, str]:
        return {v: format_fraction(x) for v, x in self.items()}

    def __repr__(self):
        body = ", ".join(format_fraction(x) for x in self.values)
        return f"GVector({body})"
