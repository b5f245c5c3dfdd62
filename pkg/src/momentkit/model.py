"""Fixed-point models of Hamiltonian torus actions.

A model stores, for each isolated fixed point, its moment image and the
isotropy weights of the tangent representation.  From these we get Morse
indices for a generic direction, Betti numbers (the height function is
perfect), and the rays along index-one weights whose lengths serve as
coordinates on the space of invariant symplectic classes.
"""
from __future__ import annotations

import itertools
import math
import random
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Mapping

from .geometry import (GeometryError, Vector, contains, convex_hull, dot, is_zero, primitive,
                       squared_distance, sub, vector)
from .lie import RootSystem

GENERATOR_SEARCH_BOUND = 50


class ModelError(ValueError):
    """Structurally malformed model data."""


class InvalidGeneratorError(ValueError):
    pass


class ModelInconsistencyError(ValueError):
    """The data contradicts edge-ray closure (no fixed image along an index-one weight)."""


@dataclass(frozen=True)
class FixedPointDatum:
    id: str
    image: Vector
    weights: tuple
    targets: Mapping[int, str] | None = None

    def __post_init__(self):
        object.__setattr__(self, "image", vector(self.image))
        object.__setattr__(self, "weights", tuple(vector(w) for w in self.weights))
        if self.targets is not None:
            object.__setattr__(self, "targets", {int(k): str(v) for k, v in self.targets.items()})
        for w in self.weights:
            if is_zero(w):
                raise ModelError(f"fixed point {self.id!r} has a zero weight (not isolated)")


@dataclass(frozen=True)
class HamiltonianModel:
    torus_rank: int
    ambient_dim: int
    half_dim: int
    fixed_points: tuple
    root_system: RootSystem | None = None

    def __post_init__(self):
        object.__setattr__(self, "fixed_points", tuple(self.fixed_points))
        if not self.fixed_points:
            raise ModelError("a model needs at least one fixed point")
        ids = [p.id for p in self.fixed_points]
        if len(set(ids)) != len(ids):
            dup = [k for k, c in Counter(ids).items() if c > 1]
            raise ModelError(f"duplicate fixed point ids: {dup}")
        for p in self.fixed_points:
            if len(p.image) != self.ambient_dim:
                raise ModelError(f"image of {p.id!r} has dim {len(p.image)}, expected {self.ambient_dim}")
            for w in p.weights:
                if len(w) != self.ambient_dim:
                    raise ModelError(f"weight at {p.id!r} has wrong dimension")
        if self.root_system is not None and self.root_system.ambient_dim != self.ambient_dim:
            raise ModelError("root system ambient dimension does not match the model")

    @property
    def sum_zero(self) -> bool:
        """True when t lives as the sum-zero hyperplane of the ambient space (type A)."""
        return self.torus_rank == self.ambient_dim - 1

    def point(self, pid: str) -> FixedPointDatum:
        for p in self.fixed_points:
            if p.id == pid:
                return p
        raise KeyError(pid)

    def images(self) -> list[Vector]:
        return [p.image for p in self.fixed_points]

    def all_weights(self) -> list[Vector]:
        return [w for p in self.fixed_points for w in p.weights]

    def ids_at(self, q) -> list[str]:
        q = vector(q)
        return [p.id for p in self.fixed_points if p.image == q]


@dataclass(frozen=True)
class Generator:
    xi: Vector

    def __post_init__(self):
        object.__setattr__(self, "xi", vector(self.xi))

    def pairing(self, alpha: Vector) -> Fraction:
        return dot(alpha, self.xi)

    def is_valid_for(self, weights) -> bool:
        return all(self.pairing(w) != 0 for w in weights)


@dataclass(frozen=True)
class Violation:
    point: str
    weight: int | None
    kind: str
    message: str

    def __str__(self):
        where = self.point if self.weight is None else f"{self.point}[{self.weight}]"
        return f"{self.kind} at {where}: {self.message}"


def ray_parameter(origin: Vector, direction: Vector, target: Vector) -> Fraction | None:
    """``u`` with ``target == origin + u * direction``, or None if target is off the line."""
    d = sub(target, origin)
    k = next(i for i, c in enumerate(direction) if c)
    u = d[k] / direction[k]
    if all(d[i] == u * direction[i] for i in range(len(d))):
        return u
    return None


def ray_hits(m: HamiltonianModel, p: FixedPointDatum, alpha: Vector) -> list[tuple[Fraction, str]]:
    """All fixed points strictly beyond ``p`` on the ray ``image(p) + u alpha``, nearest first."""
    hits = []
    for other in m.fixed_points:
        if other.id == p.id:
            continue
        u = ray_parameter(p.image, alpha, other.image)
        if u is not None and u > 0:
            hits.append((u, other.id))
    hits.sort()
    return hits


def validate_model(m: HamiltonianModel) -> list[Violation]:
    out: list[Violation] = []
    ids = {p.id for p in m.fixed_points}
    for p in m.fixed_points:
        if len(p.weights) != m.half_dim:
            out.append(Violation(p.id, None, "weight-count",
                                 f"{len(p.weights)} weights, expected {m.half_dim}"))
        for j, alpha in enumerate(p.weights):
            hits = ray_hits(m, p, alpha)
            if not hits:
                out.append(Violation(p.id, j, "edge-ray",
                                     "no other fixed image on the ray along this weight"))
            if p.targets and j in p.targets:
                tid = p.targets[j]
                if tid not in ids:
                    out.append(Violation(p.id, j, "target", f"unknown target id {tid!r}"))
                elif tid not in {h[1] for h in hits}:
                    out.append(Violation(p.id, j, "target",
                                         f"target {tid!r} is not on the ray along this weight"))
    try:
        hull = convex_hull(m.images())
        for p in m.fixed_points:
            if not contains(hull, p.image):
                out.append(Violation(p.id, None, "convexity", "image outside conv(images)"))
    except GeometryError:
        pass
    return out


def _candidate_vectors(dim: int, sum_zero: bool, bound: int) -> Iterator[Vector]:
    """Integer vectors by increasing max-norm, descending lexicographic within a norm."""
    for k in range(1, bound + 1):
        for v in itertools.product(range(k, -k - 1, -1), repeat=dim):
            if max(abs(c) for c in v) != k:
                continue
            if sum_zero and sum(v) != 0:
                continue
            yield vector(v)


def generators(m: HamiltonianModel, count: int = 1, seed: int | None = None) -> list[Generator]:
    """``count`` distinct valid generators.

    With ``seed=None`` they are the first valid vectors of the deterministic
    enumeration; otherwise random integer vectors drawn from ``random.Random(seed)``.
    """
    weights = m.all_weights()
    out: list[Generator] = []
    if seed is None:
        for v in _candidate_vectors(m.ambient_dim, m.sum_zero, GENERATOR_SEARCH_BOUND):
            g = Generator(v)
            if g.is_valid_for(weights):
                out.append(g)
                if len(out) == count:
                    return out
        raise InvalidGeneratorError("generator search bound exceeded")
    rng = random.Random(seed)
    seen = set()
    for _ in range(100_000):
        v = [rng.randint(-GENERATOR_SEARCH_BOUND, GENERATOR_SEARCH_BOUND) for _ in range(m.ambient_dim)]
        if m.sum_zero:
            v[-1] = -sum(v[:-1])
        g = Generator(v)
        if g.xi in seen or is_zero(g.xi) or not g.is_valid_for(weights):
            continue
        seen.add(g.xi)
        out.append(g)
        if len(out) == count:
            return out
    raise InvalidGeneratorError("could not draw enough valid generators")


def choose_generator(m: HamiltonianModel) -> Generator:
    return generators(m, 1)[0]


def sigma(p: FixedPointDatum, xi: Generator) -> int:
    n = 0
    for w in p.weights:
        c = xi.pairing(w)
        if c == 0:
            raise InvalidGeneratorError(f"generator {xi.xi} pairs to zero with weight {w} at {p.id}")
        n += c < 0
    return n


@dataclass(frozen=True)
class MorseReport:
    xi: Generator
    sigma: dict
    betti: tuple
    warnings: tuple = ()

    def sigma_multiset(self) -> list[int]:
        return sorted(self.sigma.values())


def morse_report(m: HamiltonianModel, xi: Generator | None = None) -> MorseReport:
    xi = xi or choose_generator(m)
    sig = {p.id: sigma(p, xi) for p in m.fixed_points}
    counts = Counter(sig.values())
    betti = tuple(counts.get(k, 0) for k in range(m.half_dim + 1))
    warnings = []
    if betti and betti[0] != 1:
        warnings.append(f"b_0 = {betti[0]} != 1: disconnected manifold or bad data")
    if betti != betti[::-1]:
        warnings.append("Poincare duality fails: b_2k != b_2(n-k)")
    extra = sorted(k for k in counts if k > m.half_dim)
    if extra:
        warnings.append(f"indices {extra} exceed the half dimension")
    return MorseReport(xi, sig, betti, tuple(warnings))


@dataclass(frozen=True)
class BettiInvariance:
    holds: bool
    generators: tuple
    betti: tuple

    def __bool__(self):
        return self.holds


def betti_invariance(m: HamiltonianModel, trials: int = 10, seed: int | None = None) -> BettiInvariance:
    gens = tuple(generators(m, trials, seed))
    bettis = tuple(morse_report(m, g).betti for g in gens)
    return BettiInvariance(len(set(bettis)) == 1, gens, bettis)


@dataclass(frozen=True)
class DeformationRow:
    id: str
    image: Vector
    weight: Vector
    hits: tuple
    designated: str | None
    squared_distance: Fraction | None

    @property
    def distance(self) -> float | None:
        if self.squared_distance is None:
            return None
        return math.sqrt(self.squared_distance)


@dataclass(frozen=True)
class DeformationReport:
    xi: Generator
    rows: tuple

    def squared_distances(self) -> list[Fraction]:
        return [r.squared_distance for r in self.rows]


def deformation_report(m: HamiltonianModel, xi: Generator | None = None) -> DeformationReport:
    xi = xi or choose_generator(m)
    rows = []
    for p in m.fixed_points:
        if sigma(p, xi) != 1:
            continue
        j = next(k for k, w in enumerate(p.weights) if xi.pairing(w) < 0)
        alpha = p.weights[j]
        hits = ray_hits(m, p, alpha)
        if not hits:
            raise ModelInconsistencyError(
                f"index-one point {p.id!r}: no fixed image on the ray along {alpha}")
        designated = None
        sq = None
        if p.targets and j in p.targets:
            designated = p.targets[j]
            if designated not in {h[1] for h in hits}:
                raise ModelInconsistencyError(
                    f"annotated target {designated!r} of {p.id!r} is not on its ray")
            sq = squared_distance(p.image, m.point(designated).image)
        rows.append(DeformationRow(p.id, p.image, alpha, tuple(hits), designated, sq))
    return DeformationReport(xi, tuple(rows))


def difference_directions(report: DeformationReport, m: HamiltonianModel) -> set:
    """Primitive directions from each index-one image to its designated target."""
    out = set()
    for r in report.rows:
        if r.designated is not None:
            out.add(primitive(sub(m.point(r.designated).image, r.image)))
    return out
