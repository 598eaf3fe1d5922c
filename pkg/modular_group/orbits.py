"""
SL2(Z) orbits of torsion points on T^2_d and their cusp structure.

Orbits are stored as integer numerators over a common denominator N, so the
point (X/N, Y/N) lives in the grid (Z / dN)^2. Breadth-first closure runs on a
boolean occupancy grid with numpy, which keeps orbits of ~10^5 points cheap.
"""
import logging
import math
from fractions import Fraction
from typing import Dict, Iterator, List, Optional, Tuple

import numpy as np
from pydantic import BaseModel, ConfigDict, Field

from modular_group.torus_points import TorusPoint
from number_theory.arithmetic_functions import divisors, euler_phi, gcd3
from utils.errors import DomainError

logger = logging.getLogger(__name__)


class OrbitSet(BaseModel):
    """A finite SL2(Z)-invariant set of points of T^2_d, stored as numerators over `denominator`."""
    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    modulus: int = Field(..., ge=1, description="d of T^2_d")
    denominator: int = Field(..., ge=1, description="Common denominator N of all coordinates")
    seed: TorusPoint = Field(..., description="Point the set was generated from")
    numerators: np.ndarray = Field(..., description="int64 array of shape (k, 2), rows (X, Y) in [0, dN)")

    @classmethod
    def from_numerators(cls, modulus: int, denominator: int, numerators: np.ndarray,
                        seed: TorusPoint) -> 'OrbitSet':
        """Canonical form: smallest common denominator, rows sorted lexicographically."""
        numerators = np.asarray(numerators, dtype=np.int64).reshape(-1, 2)
        common = int(np.gcd.reduce(numerators.ravel())) if numerators.size else 0
        g = math.gcd(common, denominator)
        if g > 1:
            numerators = numerators // g
            denominator //= g
        order = np.lexsort((numerators[:, 1], numerators[:, 0]))
        return cls(modulus=modulus, denominator=denominator, seed=seed, numerators=numerators[order])

    def __len__(self) -> int:
        return int(self.numerators.shape[0])

    @property
    def size(self) -> int:
        return len(self)

    @property
    def grid_size(self) -> int:
        return self.modulus * self.denominator

    def points(self) -> Iterator[TorusPoint]:
        for X, Y in self.numerators.tolist():
            yield TorusPoint(x=Fraction(X, self.denominator), y=Fraction(Y, self.denominator),
                             modulus=self.modulus)

    def contains(self, point: TorusPoint) -> bool:
        if point.modulus != self.modulus:
            return False
        X, Y = point.x * self.denominator, point.y * self.denominator
        if X.denominator != 1 or Y.denominator != 1:
            return False
        hits = (self.numerators[:, 0] == int(X)) & (self.numerators[:, 1] == int(Y))
        return bool(hits.any())

    def same_points(self, other: 'OrbitSet') -> bool:
        return (self.modulus == other.modulus and self.denominator == other.denominator
                and np.array_equal(self.numerators, other.numerators))

    @property
    def has_lattice_points(self) -> bool:
        on_lattice = (self.numerators % self.denominator == 0).all(axis=1)
        return bool(on_lattice.any())


def _grid_closure(grid_size: int, start: Tuple[int, int]) -> np.ndarray:
    """Occupancy grid of the closure of `start` under S and T on (Z / grid_size)^2."""
    visited = np.zeros((grid_size, grid_size), dtype=bool)
    visited[start] = True
    frontier = np.array([start], dtype=np.int64)
    while frontier.size:
        x, y = frontier[:, 0], frontier[:, 1]
        image_s = np.stack([(-y) % grid_size, x], axis=1)
        image_t = np.stack([(x + y) % grid_size, y], axis=1)
        candidates = np.concatenate([image_s, image_t])
        candidates = candidates[~visited[candidates[:, 0], candidates[:, 1]]]
        if candidates.size == 0:
            break
        candidates = np.unique(candidates, axis=0)
        visited[candidates[:, 0], candidates[:, 1]] = True
        frontier = candidates
    return visited


def orbit_enumerate(seed: TorusPoint) -> OrbitSet:
    """
    Breadth-first closure of a rational point under S and T.

    Args:
        seed (TorusPoint): A point with rational coordinates. Floating-point
            seeds never reach this far: TorusPoint rejects them with
            InfiniteOrbitError.

    Returns:
        OrbitSet: The finite orbit.
    """
    denominator = seed.denominator
    grid_size = seed.modulus * denominator
    start = (int(seed.x * denominator), int(seed.y * denominator))
    visited = _grid_closure(grid_size, start)
    orbit = OrbitSet.from_numerators(seed.modulus, denominator, np.argwhere(visited), seed)
    logger.debug(f"Orbit of {seed} has {len(orbit)} points")
    return orbit


def torsion_points(d: int, n: int) -> OrbitSet:
    """
    All points of exact order n on T^2_d, i.e. (d/n)(a, b) with gcd(a, b, n) = 1.

    The set is one SL2(Z) orbit, seeded at (d/n, 0).
    """
    if d < 1 or n < 1:
        raise DomainError(f"d and n must be >= 1, got d={d}, n={n}")
    a, b = np.meshgrid(np.arange(n, dtype=np.int64), np.arange(n, dtype=np.int64), indexing='ij')
    a, b = a.ravel(), b.ravel()
    keep = np.gcd(np.gcd(a, b), n) == 1
    numerators = np.stack([d * a[keep], d * b[keep]], axis=1)
    seed = TorusPoint(x=Fraction(d, n), y=0, modulus=d)
    return OrbitSet.from_numerators(d, n, numerators, seed)


def kernel_points(d: int, m: int) -> List[Tuple[int, int]]:
    """Numerators (over denominator m) of T^2_d[m] = (d/m) Z^2 / d Z^2."""
    return [(d * a, d * b) for a in range(m) for b in range(m)]


def kernel_orbit_representatives(d: int, m: int) -> List[Tuple[TorusPoint, int, int]]:
    """
    Partition T^2_d[m] into SL2(Z) orbits.

    Returns:
        List[Tuple[TorusPoint, int, int]]: (representative, gcd(a, b, m) class, orbit size)
        per orbit, in order of first appearance.
    """
    if d < 1 or m < 1:
        raise DomainError(f"d and m must be >= 1, got d={d}, m={m}")
    grid_size = d * m
    seen = np.zeros((grid_size, grid_size), dtype=bool)
    result = []
    for X, Y in kernel_points(d, m):
        if seen[X, Y]:
            continue
        closure = _grid_closure(grid_size, (X, Y))
        seen |= closure
        representative = TorusPoint(x=Fraction(X, m), y=Fraction(Y, m), modulus=d)
        result.append((representative, gcd3(X // d, Y // d, m), int(closure.sum())))
    return result


def orbit_classes_on_kernel(d: int, m: int) -> int:
    """Number of SL2(Z) orbits on T^2_d[m], found by enumeration."""
    return len(kernel_orbit_representatives(d, m))


class CuspPart(BaseModel):
    model_config = ConfigDict(frozen=True)

    representative: TorusPoint
    width: int = Field(..., ge=1, description="Length of the <T>-orbit, counted in +/- pairs under sign identification")


class CuspDecomposition(BaseModel):
    model_config = ConfigDict(frozen=True)

    parts: List[CuspPart] = Field(default_factory=list)
    total: int = Field(..., ge=0)
    identify_sign: bool = False

    @property
    def widths(self) -> List[int]:
        return [part.width for part in self.parts]


def cusp_decomposition(orbit: OrbitSet, identify_sign: bool = False) -> CuspDecomposition:
    """
    Partition an orbit into <T>-orbits, T = [[1, 1], [0, 1]].

    With identify_sign the classes are those of <T, -id>; a class then has
    width equal to its number of {p, -p} pairs.
    """
    L = orbit.grid_size
    points = [tuple(row) for row in orbit.numerators.tolist()]
    assigned: Dict[Tuple[int, int], int] = {}
    parts: List[CuspPart] = []
    for start in points:
        if start in assigned:
            continue
        members = []
        queue = [start]
        assigned[start] = len(parts)
        while queue:
            x, y = queue.pop()
            members.append((x, y))
            neighbours = [((x + y) % L, y)]
            if identify_sign:
                neighbours.append(((-x) % L, (-y) % L))
            for nxt in neighbours:
                if nxt not in assigned:
                    assigned[nxt] = len(parts)
                    queue.append(nxt)
        if identify_sign:
            self_negative = sum(1 for x, y in members if (2 * x) % L == 0 and (2 * y) % L == 0)
            width = (len(members) + self_negative) // 2
        else:
            width = len(members)
        representative = TorusPoint(x=Fraction(start[0], orbit.denominator),
                                    y=Fraction(start[1], orbit.denominator), modulus=orbit.modulus)
        parts.append(CuspPart(representative=representative, width=width))
    return CuspDecomposition(parts=parts, total=len(parts), identify_sign=identify_sign)


def cusp_count_formula(n: int) -> Fraction:
    """1/2 sum_{l | n} phi(n/l) phi(l) for n >= 3, and 2 for n = 2."""
    if n < 2:
        raise DomainError(f"cusp count needs n >= 2, got {n}")
    if n == 2:
        return Fraction(2)
    return Fraction(unsigned_cusp_count(n), 2)


def unsigned_cusp_count(n: int) -> int:
    """Number of <T>-orbits on the order-n torsion points without sign identification."""
    return sum(euler_phi(n // l) * euler_phi(l) for l in divisors(n))


if __name__ == '__main__':
    for n in (2, 3, 4, 5, 12):
        orbit = torsion_points(1, n)
        signed = cusp_decomposition(orbit, identify_sign=True)
        print(f"n={n}: |orbit|={len(orbit)} cusps={signed.total} formula={cusp_count_formula(n)}")
