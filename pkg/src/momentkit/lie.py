"""Root systems of type A and B with their Weyl groups as exact matrices.

Type A_l lives in the sum-zero hyperplane of R^{l+1}, so traceless diagonal
moment values are usable as coordinates without translation.  Type B_l
lives in R^l with the dominant chamber of B_2 equal to ``{0 <= y <= x}``.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Iterable, Sequence

from .geometry import Halfspace, Vector, add, dot, is_zero, neg, scale, sub, vector

WEYL_ORDER_BOUND = 10_000


class RootSystemError(ValueError):
    pass


def _unit(i: int, d: int) -> Vector:
    return tuple(Fraction(int(k == i)) for k in range(d))


def _lex_positive(v: Vector) -> bool:
    for c in v:
        if c:
            return c > 0
    return False


@dataclass(frozen=True)
class RootSystem:
    family: str
    rank: int
    ambient_dim: int
    roots: tuple
    positive_roots: tuple
    simple_roots: tuple

    @property
    def label(self) -> str:
        return f"{self.family}{self.rank}" if self.family in "AB" else "explicit"

    def pairing(self, v: Vector) -> list[Fraction]:
        return [dot(v, a) for a in self.simple_roots]

    def is_dominant(self, v: Vector) -> bool:
        return all(c >= 0 for c in self.pairing(vector(v)))

    def in_open_chamber(self, v: Vector) -> bool:
        return all(c > 0 for c in self.pairing(vector(v)))

    def walls_through(self, v: Vector) -> list[Vector]:
        """Positive roots whose reflecting hyperplane contains ``v``."""
        v = vector(v)
        return [a for a in self.positive_roots if dot(v, a) == 0]

    def chamber_halfspaces(self) -> list[Halfspace]:
        """Halfspaces cutting out the closed dominant chamber."""
        return [Halfspace(neg(a), 0) for a in self.simple_roots]


def _finish(family: str, rank: int, ambient: int, roots: Iterable[Vector]) -> RootSystem:
    roots = tuple(sorted(set(roots)))
    for r in roots:
        if is_zero(r):
            raise RootSystemError("zero root")
        if neg(r) not in roots:
            raise RootSystemError(f"root set not closed under negation at {r}")
    positive = tuple(r for r in roots if _lex_positive(r))
    sums = {add(a, b) for a, b in combinations(positive, 2)}
    simple = tuple(r for r in positive if r not in sums)
    return RootSystem(family, rank, ambient, roots, positive, simple)


def build_root_system(family: str, rank: int) -> RootSystem:
    family = family.upper()
    if family not in ("A", "B"):
        raise RootSystemError(f"unsupported root system family {family!r}")
    if not 1 <= rank <= 3:
        raise RootSystemError(f"rank {rank} unsupported (1..3)")
    if family == "A":
        d = rank + 1
        e = [_unit(i, d) for i in range(d)]
        roots = [sub(e[i], e[j]) for i in range(d) for j in range(d) if i != j]
        return _finish("A", rank, d, roots)
    d = rank
    e = [_unit(i, d) for i in range(d)]
    roots = [e[i] for i in range(d)] + [neg(e[i]) for i in range(d)]
    for i, j in combinations(range(d), 2):
        for si in (1, -1):
            for sj in (1, -1):
                roots.append(add(scale(si, e[i]), scale(sj, e[j])))
    return _finish("B", rank, d, roots)


def explicit_root_system(roots: Iterable) -> RootSystem:
    """Escape hatch for a finite reduced root list given in ambient coordinates."""
    roots = [vector(r) for r in roots]
    if not roots:
        raise RootSystemError("empty root list")
    d = len(roots[0])
    rs = _finish("explicit", 0, d, roots)
    return RootSystem("explicit", len(rs.simple_roots), d, rs.roots, rs.positive_roots,
                      rs.simple_roots)


def parse_group(label: str) -> RootSystem:
    """``"B2"`` -> build_root_system("B", 2)."""
    label = label.strip()
    try:
        return build_root_system(label[0], int(label[1:]))
    except (IndexError, ValueError) as exc:
        raise RootSystemError(f"cannot parse group label {label!r}: {exc}") from None


def reflection_matrix(alpha: Vector) -> tuple:
    n = len(alpha)
    aa = dot(alpha, alpha)
    return tuple(
        tuple(Fraction(int(i == j)) - 2 * alpha[i] * alpha[j] / aa for j in range(n))
        for i in range(n))


@dataclass(frozen=True)
class WeylElement:
    matrix: tuple

    def apply(self, v: Sequence) -> Vector:
        return tuple(sum((m * x for m, x in zip(row, v)), Fraction(0)) for row in self.matrix)

    __call__ = apply

    def __matmul__(self, other: "WeylElement") -> "WeylElement":
        cols = list(zip(*other.matrix))
        return WeylElement(tuple(
            tuple(sum((a * b for a, b in zip(row, col)), Fraction(0)) for col in cols)
            for row in self.matrix))

    def transpose(self) -> "WeylElement":
        return WeylElement(tuple(zip(*self.matrix)))

    inverse = transpose  # orthogonal

    def is_identity(self) -> bool:
        return all(self.matrix[i][j] == (i == j)
                   for i in range(len(self.matrix)) for j in range(len(self.matrix)))


def identity(d: int) -> WeylElement:
    return WeylElement(tuple(_unit(i, d) for i in range(d)))


@dataclass(frozen=True)
class WeylGroup:
    root_system: RootSystem
    elements: tuple
    generators: tuple = field(default=())

    @property
    def order(self) -> int:
        return len(self.elements)

    def __len__(self):
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def orbit(self, v) -> list[Vector]:
        v = vector(v)
        return sorted({w.apply(v) for w in self.elements})


def weyl_group(rs: RootSystem) -> WeylGroup:
    gens = tuple(WeylElement(reflection_matrix(a)) for a in rs.simple_roots)
    start = identity(rs.ambient_dim)
    seen = {start.matrix: start}
    frontier = [start]
    while frontier:
        nxt = []
        for w in frontier:
            for g in gens:
                h = g @ w
                if h.matrix not in seen:
                    seen[h.matrix] = h
                    nxt.append(h)
                    if len(seen) > WEYL_ORDER_BOUND:
                        raise RootSystemError("Weyl group closure exceeded safety bound")
        frontier = nxt
    elements = tuple(seen[m] for m in sorted(seen))
    # keep the identity first
    elements = (start,) + tuple(e for e in elements if e.matrix != start.matrix)
    return WeylGroup(rs, elements, gens)


def to_dominant(rs: RootSystem, v) -> tuple[WeylElement, Vector]:
    """Return ``(w, w v)`` with ``w v`` in the closed dominant chamber."""
    v = vector(v)
    w = identity(rs.ambient_dim)
    while True:
        for a in rs.simple_roots:
            if dot(v, a) < 0:
                s = WeylElement(reflection_matrix(a))
                v = s.apply(v)
                w = s @ w
                break
        else:
            return w, v


def stabilizer(group: WeylGroup, q) -> WeylGroup:
    q = vector(q)
    if len(q) != group.root_system.ambient_dim:
        raise RootSystemError("dimension mismatch")
    fixing = tuple(w for w in group.elements if w.apply(q) == q)
    return WeylGroup(group.root_system, fixing, fixing)


def walls(rs: RootSystem) -> list[Halfspace]:
    """One hyperplane ``<alpha, x> = 0`` per positive root, as a boundary halfspace."""
    return [Halfspace(a, 0) for a in rs.positive_roots]


def on_wall(rs: RootSystem, v) -> bool:
    return bool(rs.walls_through(v))
