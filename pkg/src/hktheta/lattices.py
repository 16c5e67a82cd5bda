"""Integral lattices carrying the degree-2 invariants of the two families.

Two built-in Gram lattices: the rank-7 lattice U^3 + <-2(n+1)> attached to
the generalized-Kummer family (basis e1,f1,e2,f2,e3,f3,delta) and the
rank-8 lattice U^3 + <-2> + <-2> attached to the OG6 family (basis
e1,...,f3,g1,g2), with U the hyperbolic plane [[0,1],[1,0]].

Vectors are plain integer tuples in basis order.  Everything here is exact
integer arithmetic: the pairing v^T.gram.w, the divisibility gcd, orbit
classification by (square, divisibility, mod-8 residue), and the
wall-divisor splitting of square -2(n+1), divisibility 2(n+1) classes into
a pair of isotropic vectors of an ambient U^4.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

from .arith import divisors
from .snf import integer_det

__all__ = [
    "GramLattice",
    "OG6Class",
    "OrbitInvariant",
    "hyperbolic_sum",
    "lambda_kum",
    "lambda_og6",
    "bbf_pair",
    "bbf_square",
    "divisibility",
    "is_primitive",
    "og6_class",
    "og6_same_orbit",
    "kum_orbit_split",
]

_U = ((0, 1), (1, 0))


@dataclass(frozen=True)
class GramLattice:
    """Free Z-module with a fixed basis and a nondegenerate symmetric Gram matrix."""

    name: str
    gram: tuple[tuple[int, ...], ...]
    basis: tuple[str, ...]

    def __post_init__(self):
        gram = tuple(tuple(int(x) for x in row) for row in self.gram)
        r = len(gram)
        if r == 0 or any(len(row) != r for row in gram):
            raise ValueError("gram matrix must be square and nonempty")
        if any(gram[i][j] != gram[j][i] for i in range(r) for j in range(r)):
            raise ValueError("gram matrix must be symmetric")
        if len(self.basis) != r:
            raise ValueError("basis labels must match the rank")
        if integer_det([list(row) for row in gram]) == 0:
            raise ValueError("gram matrix must be nondegenerate")
        object.__setattr__(self, "gram", gram)

    @property
    def rank(self) -> int:
        return len(self.gram)


def _block_diag(blocks):
    rank = sum(len(b) for b in blocks)
    gram = [[0] * rank for _ in range(rank)]
    at = 0
    for b in blocks:
        for i, row in enumerate(b):
            for j, x in enumerate(row):
                gram[at + i][at + j] = x
        at += len(b)
    return tuple(tuple(row) for row in gram)


def hyperbolic_sum(copies: int) -> GramLattice:
    """Orthogonal sum of `copies` hyperbolic planes U."""
    if copies < 1:
        raise ValueError("need at least one hyperbolic plane")
    basis = tuple(x for i in range(1, copies + 1) for x in (f"e{i}", f"f{i}"))
    return GramLattice(f"U^{copies}", _block_diag([_U] * copies), basis)


def lambda_kum(n: int) -> GramLattice:
    """U^3 + Z*delta with delta^2 = -2(n+1); basis (e1,f1,e2,f2,e3,f3,delta)."""
    if n < 2:
        raise ValueError("Kummer-type parameter n must be >= 2")
    gram = _block_diag([_U, _U, _U, ((-2 * (n + 1),),)])
    basis = ("e1", "f1", "e2", "f2", "e3", "f3", "delta")
    return GramLattice(f"kum:{n}", gram, basis)


def lambda_og6() -> GramLattice:
    """U^3 + <-2> + <-2>; basis (e1,f1,e2,f2,e3,f3,g1,g2)."""
    gram = _block_diag([_U, _U, _U, ((-2,),), ((-2,),)])
    basis = ("e1", "f1", "e2", "f2", "e3", "f3", "g1", "g2")
    return GramLattice("og6", gram, basis)


def _as_vector(lat: GramLattice, v) -> tuple[int, ...]:
    vec = tuple(int(x) for x in v)
    if len(vec) != lat.rank:
        raise ValueError(f"vector length {len(vec)} does not match rank {lat.rank}")
    return vec


def _gram_times(lat: GramLattice, v: tuple[int, ...]) -> tuple[int, ...]:
    return tuple(sum(row[j] * v[j] for j in range(lat.rank)) for row in lat.gram)


def bbf_pair(lat: GramLattice, v, w) -> int:
    """Symmetric bilinear pairing v^T.gram.w of two lattice vectors."""
    v = _as_vector(lat, v)
    w = _as_vector(lat, w)
    gw = _gram_times(lat, w)
    return sum(a * b for a, b in zip(v, gw))


def bbf_square(lat: GramLattice, v) -> int:
    """Square q(v) = bbf_pair(lat, v, v)."""
    return bbf_pair(lat, v, v)


def divisibility(lat: GramLattice, v) -> int:
    """Nonnegative generator of the ideal of pairings of v: gcd of gram.v (0 for v=0)."""
    v = _as_vector(lat, v)
    return math.gcd(*_gram_times(lat, v))


def is_primitive(lat: GramLattice, v) -> bool:
    """True iff the gcd of the coordinates is 1.  The zero vector is rejected."""
    v = _as_vector(lat, v)
    if not any(v):
        raise ValueError("primitivity is undefined for the zero vector")
    return math.gcd(*v) == 1


class OG6Class(Enum):
    I = "I"
    II = "II"
    III = "III"


_OG6 = lambda_og6()


def og6_class(v) -> OG6Class:
    """Orbit class of a primitive OG6-lattice vector.

    I when divisibility 1; for divisibility 2 the square is -2 or -4 mod 8,
    giving II and III respectively.  Any other combination is impossible for
    primitive vectors, hence an internal assertion failure.
    """
    v = _as_vector(_OG6, v)
    if not is_primitive(_OG6, v):
        raise ValueError("orbit class is defined for primitive vectors only")
    div = divisibility(_OG6, v)
    if div == 1:
        return OG6Class.I
    if div == 2:
        residue = bbf_square(_OG6, v) % 8
        if residue == 6:
            return OG6Class.II
        if residue == 4:
            return OG6Class.III
        raise AssertionError(f"divisibility 2 with square residue {residue} mod 8")
    raise AssertionError(f"primitive vector with divisibility {div}")


def og6_same_orbit(a, b) -> bool:
    """True iff a and b share both the square and the orbit class."""
    return bbf_square(_OG6, a) == bbf_square(_OG6, b) and og6_class(a) == og6_class(b)


@dataclass(frozen=True)
class OrbitInvariant:
    """Wall-divisor splitting data: alpha = 2(n+1)*beta + x0*delta = p*e + q*f.

    beta is the U^3 component (6 coordinates); e and f are the isotropic
    witnesses, written in the ambient U^4 basis (e1,f1,e2,f2,e3,f3,e4,f4)
    in which delta = e4 - (n+1)*f4.
    """

    x0: int
    p: int
    q: int
    beta: tuple[int, ...]
    e: tuple[int, ...]
    f: tuple[int, ...]


def kum_orbit_split(n: int, alpha) -> OrbitInvariant:
    """Split a square -2(n+1), divisibility 2(n+1) class as p*e + q*f.

    The input must be primitive with exactly that square and divisibility.
    Writing alpha = 2(n+1)*beta + x0*delta, the unique positive factorization
    n+1 = p*q with 2p | x0-1 and 2q | x0+1 yields integer isotropic vectors
    e, f of the ambient U^4 with alpha = p*e + q*f; existence and uniqueness
    are guaranteed for any actual lattice vector, so their failure is an
    internal assertion error, while bad input squares or divisibilities are
    ValueErrors.
    """
    lat = lambda_kum(n)
    v = _as_vector(lat, alpha)
    if not is_primitive(lat, v):
        raise ValueError("orbit splitting requires a primitive vector")
    two_n1 = 2 * (n + 1)
    sq = bbf_square(lat, v)
    if sq != -two_n1:
        raise ValueError(f"square must be {-two_n1}, got {sq}")
    div = divisibility(lat, v)
    if div != two_n1:
        raise ValueError(f"divisibility must be {two_n1}, got {div}")
    x0 = v[6]
    if any(c % two_n1 for c in v[:6]):
        raise AssertionError("U^3 part must be divisible by 2(n+1) at this divisibility")
    beta = tuple(c // two_n1 for c in v[:6])
    u3 = hyperbolic_sum(3)
    k = bbf_square(u3, beta)
    if two_n1 * k != x0 * x0 - 1:
        raise AssertionError("square bookkeeping 2(n+1)*beta^2 = x0^2 - 1 failed")
    candidates = [
        (p, (n + 1) // p)
        for p in divisors(n + 1)
        if (x0 - 1) % (2 * p) == 0 and (x0 + 1) % (2 * ((n + 1) // p)) == 0
    ]
    if len(candidates) != 1:
        raise AssertionError(
            f"expected exactly one splitting of {n + 1}, found {sorted(candidates)}"
        )
    p, q = candidates[0]
    a = (x0 - 1) // (2 * p)
    c = (x0 + 1) // (2 * q)
    e = tuple(q * b for b in beta) + (a, a * (n + 1) - q * x0)
    f = tuple(p * b for b in beta) + (c, c * (n + 1) - p * x0)
    ambient = hyperbolic_sum(4)
    if bbf_square(ambient, e) or bbf_square(ambient, f):
        raise AssertionError("splitting witnesses must be isotropic")
    alpha_ambient = v[:6] + (x0, -(n + 1) * x0)
    if tuple(p * ei + q * fi for ei, fi in zip(e, f)) != alpha_ambient:
        raise AssertionError("p*e + q*f must reconstruct the input class")
    return OrbitInvariant(x0=x0, p=p, q=q, beta=beta, e=e, f=f)
