"""Affine toric log pairs over explicit lattices, with exact divisor tests.

All cone data lives in coordinates with respect to a chosen lattice basis: a
lattice point is an integer coordinate vector, a divisor functional is a
rational coordinate vector, and the pairing between the two is the plain dot
product of coordinate vectors. The ambient rational basis only matters when
identifying a sublattice (index-one covers) or converting external vectors.

The classification tests are linear algebra. A toric Weil divisor sum(n_i D_i)
is Q-Cartier exactly when some functional u has <u, v_i> = -n_i on every ray
v_i; the pair (X, D) is Kawamata log terminal when the functional representing
-(K+D) exists and is positive on the rays; and a cone whose canonical class is
Q-Cartier is canonical when that functional is >= 1 on the whole Hilbert basis
of the cone. Hilbert bases are enumerated from the bounding box of the
generator zonotope followed by an irreducibility filter, which is exact and
auditable at the intended desk scale (dimension <= 4, small coordinates).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations, product
from math import gcd, lcm
from typing import Optional

from . import linalg
from .errors import (
    LogCentreError,
    NonStandardBoundary,
    NotApplicable,
    ResourceLimit,
)
from .orders import standard_index

MAX_DIM = 4
MAX_RAY_COORD = 100
MAX_BOX_POINTS = 10**6


def primitive(v) -> tuple:
    """The integer vector v divided by the gcd of its coordinates."""
    return linalg.primitive_vector(v)


def pairing(u, v) -> Fraction:
    """Dot product of a dual functional and a lattice coordinate vector."""
    if len(u) != len(v):
        raise ValueError("dimension mismatch in pairing")
    return sum((Fraction(a) * b for a, b in zip(u, v)), Fraction(0))


def _require(condition: bool, message: str) -> None:
    # Internal mathematical postconditions: failing here means a bug, not bad input.
    if not condition:
        raise LogCentreError(f"internal invariant violated: {message}")


@dataclass(frozen=True)
class Lattice:
    """Finite-rank lattice given by its basis vectors in ambient coordinates.

    basis[i] is the i-th basis vector; lattice coordinates are taken with
    respect to this basis, so the standard lattice has the identity basis.
    """

    basis: tuple

    def __post_init__(self):
        rows = tuple(tuple(Fraction(x) for x in vec) for vec in self.basis)
        if not rows or any(len(vec) != len(rows) for vec in rows):
            raise ValueError("basis must be a nonempty square list of vectors")
        object.__setattr__(self, "basis", rows)
        # Column matrix of the basis; singularity check happens here.
        columns = [[rows[j][i] for j in range(len(rows))] for i in range(len(rows))]
        linalg.invert(columns)

    @classmethod
    def standard(cls, dim: int) -> "Lattice":
        return cls(tuple(tuple(Fraction(int(i == j)) for j in range(dim)) for i in range(dim)))

    @property
    def dim(self) -> int:
        return len(self.basis)

    def to_ambient(self, coords) -> tuple:
        if len(coords) != self.dim:
            raise ValueError("dimension mismatch")
        return tuple(
            sum((Fraction(c) * vec[i] for c, vec in zip(coords, self.basis)), Fraction(0))
            for i in range(self.dim)
        )

    def to_coords(self, ambient) -> tuple:
        """Exact rational coordinates of an ambient vector in this basis."""
        rows = [[vec[i] for vec in self.basis] for i in range(self.dim)]
        solution = linalg.solve_exact(rows, [Fraction(x) for x in ambient])
        _require(solution is not None, "lattice basis failed to span")
        return solution

    def coords_of(self, ambient) -> tuple:
        """Integer coordinates of a lattice member; ValueError if not in the lattice."""
        coords = self.to_coords(ambient)
        if any(c.denominator != 1 for c in coords):
            raise ValueError(f"{tuple(ambient)!r} is not a lattice point")
        return tuple(int(c) for c in coords)

    def dual(self) -> "Lattice":
        """Dual lattice; its coordinates pair with this lattice's coordinates."""
        columns = [[self.basis[j][i] for j in range(self.dim)] for i in range(self.dim)]
        inverse = linalg.invert(columns)
        return Lattice(tuple(tuple(row) for row in inverse))

    def same_lattice(self, other: "Lattice") -> bool:
        """True when both bases generate the same subgroup of the ambient space."""
        if self.dim != other.dim:
            return False
        try:
            for vec in other.basis:
                self.coords_of(vec)
            for vec in self.basis:
                other.coords_of(vec)
        except ValueError:
            return False
        return True


def _facet_normals(dim: int, rays) -> tuple:
    found = set()
    for subset in combinations(rays, dim - 1):
        if dim == 1:
            candidates = [(1,)]
        else:
            if linalg.rank(subset) != dim - 1:
                continue
            kernel = linalg.nullspace(subset)
            if len(kernel) != 1:
                continue
            candidates = [linalg.scale_to_primitive_integer(kernel[0])]
        for n in candidates:
            pairings = [sum(a * b for a, b in zip(n, v)) for v in rays]
            if all(p >= 0 for p in pairings):
                found.add(tuple(n))
            elif all(p <= 0 for p in pairings):
                found.add(tuple(-x for x in n))
    return tuple(sorted(found))


@dataclass(frozen=True)
class Cone:
    """Pointed, full-dimensional rational cone listed by primitive extreme rays.

    Facet inequalities are derived at construction and cached; membership is
    <facet, x> >= 0 for all facets.
    """

    lattice: Lattice
    rays: tuple
    facets: tuple = field(init=False, compare=False, repr=False)

    def __post_init__(self):
        rays = tuple(tuple(int(x) for x in ray) for ray in self.rays)
        if not rays:
            raise ValueError("cone needs at least one ray")
        dim = self.lattice.dim
        if dim > MAX_DIM:
            raise ResourceLimit(f"dimension {dim} exceeds the desk-scale limit {MAX_DIM}")
        for ray in rays:
            if len(ray) != dim:
                raise ValueError("ray dimension mismatch")
            if any(abs(x) > MAX_RAY_COORD for x in ray):
                raise ResourceLimit(
                    f"ray coordinate exceeds the desk-scale bound {MAX_RAY_COORD}"
                )
            if linalg.primitive_vector(ray) != ray:
                raise ValueError(f"ray {ray} is not primitive")
        if len(set(rays)) != len(rays):
            raise ValueError("rays must be pairwise distinct")
        if linalg.rank(rays) != dim:
            raise ValueError("cone is not full-dimensional")
        object.__setattr__(self, "rays", rays)
        facets = _facet_normals(dim, rays)
        if linalg.rank(facets) != dim:
            raise ValueError("cone is not pointed")
        for ray in rays:
            touching = [n for n in facets if sum(a * b for a, b in zip(n, ray)) == 0]
            if linalg.rank(touching) != dim - 1:
                raise ValueError(f"ray {ray} is not extreme")
        object.__setattr__(self, "facets", facets)

    @classmethod
    def from_rays(cls, rays, lattice: Optional[Lattice] = None) -> "Cone":
        rays = tuple(tuple(int(x) for x in ray) for ray in rays)
        if lattice is None:
            lattice = Lattice.standard(len(rays[0]))
        return cls(lattice, tuple(linalg.primitive_vector(r) for r in rays))

    @property
    def dim(self) -> int:
        return self.lattice.dim

    def contains(self, v) -> bool:
        return all(sum(a * b for a, b in zip(n, v)) >= 0 for n in self.facets)


@dataclass(frozen=True)
class ToricDivisor:
    """Rational coefficients, one per ray of the ambient cone."""

    coeffs: tuple

    def __post_init__(self):
        object.__setattr__(self, "coeffs", tuple(Fraction(c) for c in self.coeffs))


def canonical_divisor(cone: Cone) -> ToricDivisor:
    """Coefficient -1 on every ray divisor."""
    return ToricDivisor((Fraction(-1),) * len(cone.rays))


@dataclass(frozen=True)
class ConePair:
    """Affine toric log pair: a cone plus an effective boundary divisor.

    Coefficients live in [0, 1]; cover constructions additionally demand
    standard coefficients (e-1)/e, hence strictly below 1.
    """

    cone: Cone
    boundary: ToricDivisor

    def __post_init__(self):
        if len(self.boundary.coeffs) != len(self.cone.rays):
            raise ValueError("boundary needs one coefficient per ray")
        for c in self.boundary.coeffs:
            if not 0 <= c <= 1:
                raise ValueError(f"boundary coefficient {c} outside [0, 1]")


def q_cartier_functional(cone: Cone, divisor: ToricDivisor):
    """Functional u with <u, v_i> = -n_i on every ray, or None if none exists."""
    if len(divisor.coeffs) != len(cone.rays):
        raise ValueError("divisor needs one coefficient per ray")
    rows = [[Fraction(x) for x in ray] for ray in cone.rays]
    rhs = [-c for c in divisor.coeffs]
    return linalg.solve_exact(rows, rhs)


def cartier_index(u) -> int:
    """Least m >= 1 with m*u integral against every lattice basis vector."""
    fracs = [Fraction(x) for x in u]
    return lcm(*(f.denominator for f in fracs)) if fracs else 1


def pair_functional(pair: ConePair):
    """Functional representing -(K+D): <u, v_i> = 1 - d_i on every ray."""
    shifted = ToricDivisor(tuple(d - 1 for d in pair.boundary.coeffs))
    return q_cartier_functional(pair.cone, shifted)


@dataclass(frozen=True)
class KltResult:
    is_klt: bool
    functional: Optional[tuple]


def klt_check(pair: ConePair) -> KltResult:
    """Kawamata log terminal test: the -(K+D) functional exists and is
    positive on every ray (equivalently, every boundary coefficient is < 1)."""
    u = pair_functional(pair)
    if u is None:
        return KltResult(False, None)
    verdict = all(pairing(u, v) > 0 for v in pair.cone.rays)
    return KltResult(verdict, u)


def hilbert_basis(cone: Cone) -> tuple:
    """Minimal generating set of the semigroup of lattice points of the cone.

    Every irreducible element lies in the zonotope spanned by the ray
    generators, so enumerating the integer points of its bounding box that lie
    in the cone and discarding the reducible ones is exhaustive. Output is
    sorted lexicographically.
    """
    dim = cone.dim
    lo = [sum(min(0, ray[i]) for ray in cone.rays) for i in range(dim)]
    hi = [sum(max(0, ray[i]) for ray in cone.rays) for i in range(dim)]
    count = 1
    for a, b in zip(lo, hi):
        count *= b - a + 1
    if count > MAX_BOX_POINTS:
        raise ResourceLimit(
            f"zonotope bounding box holds {count} points, above the cap {MAX_BOX_POINTS}"
        )
    zero = (0,) * dim
    candidates = [
        p
        for p in product(*(range(a, b + 1) for a, b in zip(lo, hi)))
        if p != zero and cone.contains(p)
    ]
    basis = []
    for x in candidates:
        reducible = False
        for y in candidates:
            if y == x:
                continue
            z = tuple(a - b for a, b in zip(x, y))
            if cone.contains(z):
                reducible = True
                break
        if not reducible:
            basis.append(x)
    return tuple(sorted(basis))


def canonical_check(cone: Cone) -> bool:
    """Canonical-singularities test for the cone with empty boundary.

    Requires the canonical divisor to be Q-Cartier (otherwise NotApplicable)
    and then asks for <u, h> >= 1 on the whole Hilbert basis.
    """
    u = q_cartier_functional(cone, canonical_divisor(cone))
    if u is None:
        raise NotApplicable("canonical divisor is not Q-Cartier")
    return all(pairing(u, h) >= 1 for h in hilbert_basis(cone))


@dataclass(frozen=True)
class CoverResult:
    cover_lattice: Lattice
    cover_cone: Cone
    degree: int


def log_canonical_cover(pair: ConePair) -> CoverResult:
    """Index-one cover of a pair with standard coefficients.

    The cover lattice is the sublattice where the -(K+D) functional is
    integral; its index equals the Cartier index m of K+D, the functional
    becomes integral (Cartier canonical class) on the cover, pairs to exactly
    1 with every cover ray, and the rays are rescaled by the local indices e_i
    of the boundary. All of these are checked on every invocation.
    """
    u = pair_functional(pair)
    if u is None:
        raise NotApplicable("K+D is not Q-Cartier")
    indices = []
    for d in pair.boundary.coeffs:
        e = standard_index(d)
        if e is None:
            raise NonStandardBoundary(
                f"boundary coefficient {d} is not of the form (e-1)/e"
            )
        indices.append(e)
    dim = pair.cone.dim
    m = cartier_index(u)
    scaled = [int(x * m) for x in u]
    kernel = linalg.integer_kernel_of_row(scaled + [-m])
    columns = linalg.hermite_column_form([vec[:dim] for vec in kernel])
    _require(len(columns) == dim, "sublattice basis has wrong rank")
    _require(abs(linalg.det_int(columns)) == m, "sublattice index differs from the Cartier index")
    for col in columns:
        _require(pairing(u, col).denominator == 1, "functional is not integral on the sublattice")
    cover_rays = []
    for ray, e in zip(pair.cone.rays, indices):
        value = pairing(u, ray)
        _require(value.denominator == e, "ray rescaling differs from the boundary index")
        target = tuple(e * x for x in ray)
        coords = _solve_lower_triangular_int(columns, target)
        _require(gcd(*(abs(c) for c in coords)) == 1, "cover ray is not primitive")
        _require(pairing(u, target) == 1, "cover ray does not pair to one")
        cover_rays.append(coords)
    ambient_basis = tuple(pair.cone.lattice.to_ambient(col) for col in columns)
    cover_lattice = Lattice(ambient_basis)
    cover_cone = Cone(cover_lattice, tuple(cover_rays))
    return CoverResult(cover_lattice, cover_cone, m)


def _solve_lower_triangular_int(columns, target):
    """Solve sum x_j * col_j = target over the integers for a lower-triangular
    column basis; the target is required to lie in the lattice."""
    dim = len(columns)
    x = [0] * dim
    for row in range(dim):
        residue = target[row] - sum(columns[j][row] * x[j] for j in range(row))
        pivot = columns[row][row]
        _require(residue % pivot == 0, "vector lies outside the sublattice")
        x[row] = residue // pivot
    for row in range(dim):
        _require(sum(columns[j][row] * x[j] for j in range(dim)) == target[row],
                 "triangular solve failed")
    return tuple(x)


def dual_cone(cone: Cone) -> Cone:
    """Dual cone over the dual lattice; its rays are the facet normals."""
    return Cone(cone.lattice.dual(), cone.facets)


def dual_cone_generators(cone: Cone) -> tuple:
    """Hilbert basis of the dual cone: the minimal monomial generators of the
    coordinate ring of the affine toric variety."""
    return hilbert_basis(dual_cone(cone))


def cover_correspondence_check(pair: ConePair) -> bool:
    """True when the klt verdict of the pair matches the canonical verdict of
    its index-one cover; a mismatch signals an implementation bug."""
    result = klt_check(pair)
    if result.functional is None:
        raise NotApplicable("K+D is not Q-Cartier")
    cover = log_canonical_cover(pair)
    return result.is_klt == canonical_check(cover.cover_cone)
