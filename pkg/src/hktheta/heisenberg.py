"""Finite Heisenberg groups and their exact Schrodinger representation.

The Heisenberg group of type d = (d_1,...,d_g) is the central extension of
J x Jhat, J = prod Z/(d_i), by the roots of unity Q/Z, with product

    (t, x, f) * (s, y, g) = (t + s + <g, x>, x + y, f + g),

where <g, x> = sum g_i x_i / d_i is the character evaluation in Q/Z.

The Schrodinger representation acts on functions phi : J -> C by
(rho(t,x,f) phi)(y) = exp(2 pi i (t + <f,y>)) * phi(x + y).  On the basis of
delta functions this sends delta_y to the phase t + <f, y-x> times
delta_{y-x}; that convention (row y-x, phase evaluated at y-x) is the one
that makes rho a homomorphism, and it is pinned by exhaustive tests.
Matrices are kept exact as generalized permutation matrices: one
root-of-unity entry per column, stored as a Q/Z phase.

The Schur-test character norm is evaluated on the finite quotient
mu_N x J x Jhat with N the exponent of J.  Traces come from permutation
fixed points (an element with x != 0 has none and contributes the zero
polynomial), and |trace|^2 accumulates in Z[x]/(x^N - 1) before a final
exact reduction modulo the N-th cyclotomic polynomial.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .arith import divisors
from .finabgrp import FinAbGroup, GroupElement, Pairing, QmodZ

__all__ = [
    "HeisElem",
    "GenPermMatrix",
    "character_eval",
    "heis_elem",
    "h_identity",
    "h_mul",
    "h_inv",
    "h_commutator",
    "heis_pairing",
    "schrodinger_matrix",
    "gpm_identity",
    "gpm_mul",
    "gpm_inv",
    "gpm_scalar_phase",
    "character_norm",
    "schrodinger_multiplicity",
    "cyclotomic_poly",
]


@dataclass(frozen=True)
class HeisElem:
    """Element (scalar, x, f): central phase, translation part, character part."""

    scalar: QmodZ
    x: GroupElement
    f: GroupElement

    def __post_init__(self):
        if self.x.group != self.f.group:
            raise ValueError("translation and character parts must share the type d")

    @property
    def d(self) -> tuple[int, ...]:
        return self.x.group.orders


def character_eval(f: GroupElement, x: GroupElement) -> QmodZ:
    """<f, x> = sum f_i x_i / d_i in Q/Z: the character f evaluated at x."""
    if f.group != x.group:
        raise ValueError("character and argument must share the type d")
    total = Fraction(0)
    for fi, xi, di in zip(f.coords, x.coords, f.group.orders):
        if fi and xi:
            total += Fraction(fi * xi, di)
    return QmodZ(total.numerator, total.denominator)


def heis_elem(d, scalar: QmodZ, x, f) -> HeisElem:
    group = FinAbGroup(tuple(d))
    return HeisElem(scalar, group.element(x), group.element(f))


def h_identity(d) -> HeisElem:
    group = FinAbGroup(tuple(d))
    return HeisElem(QmodZ(0), group.zero(), group.zero())


def _check_same_type(a: HeisElem, b: HeisElem):
    if a.x.group != b.x.group:
        raise ValueError("elements have different types d")


def h_mul(a: HeisElem, b: HeisElem) -> HeisElem:
    """(t,x,f)(s,y,g) = (t + s + <g,x>, x+y, f+g)."""
    _check_same_type(a, b)
    scalar = a.scalar + b.scalar + character_eval(b.f, a.x)
    return HeisElem(scalar, a.x + b.x, a.f + b.f)


def h_inv(a: HeisElem) -> HeisElem:
    return HeisElem(-a.scalar + character_eval(a.f, a.x), -a.x, -a.f)


def h_commutator(a: HeisElem, b: HeisElem) -> QmodZ:
    """Central scalar of a b a^-1 b^-1, computed literally from the group law."""
    c = h_mul(h_mul(a, b), h_mul(h_inv(a), h_inv(b)))
    if not (c.x.is_zero() and c.f.is_zero()):
        raise AssertionError("commutator of lifts must be central")
    return c.scalar


def heis_pairing(d) -> Pairing:
    """Commutator pairing on J x Jhat, derived from the group law on lifts.

    Generators 0..g-1 are the J generators, g..2g-1 the Jhat generators; the
    matrix entries are h_commutator of the scalar-free lifts, with no closed
    form assumed.
    """
    d = tuple(int(di) for di in d)
    g = len(d)
    group = FinAbGroup(d + d)
    j = FinAbGroup(d)

    def lift(i: int) -> HeisElem:
        if i < g:
            return HeisElem(QmodZ(0), j.gen(i), j.zero())
        return HeisElem(QmodZ(0), j.zero(), j.gen(i - g))

    lifts = [lift(i) for i in range(2 * g)]
    matrix = tuple(
        tuple(h_commutator(lifts[i], lifts[j2]) for j2 in range(2 * g))
        for i in range(2 * g)
    )
    return Pairing(group, matrix)


@dataclass(frozen=True)
class GenPermMatrix:
    """Matrix with exactly one root-of-unity entry per column.

    Column y holds exp(2 pi i phases[y]) in row perm[y] and zeros elsewhere.
    """

    dim: int
    perm: tuple[int, ...]
    phases: tuple[QmodZ, ...]

    def __post_init__(self):
        if len(self.perm) != self.dim or len(self.phases) != self.dim:
            raise ValueError("perm and phases must have length dim")
        if sorted(self.perm) != list(range(self.dim)):
            raise ValueError("perm must be a bijection on 0..dim-1")


def gpm_identity(dim: int) -> GenPermMatrix:
    return GenPermMatrix(dim, tuple(range(dim)), (QmodZ(0),) * dim)


def gpm_mul(a: GenPermMatrix, b: GenPermMatrix) -> GenPermMatrix:
    """Exact matrix product A.B: compose permutations, add phases along paths."""
    if a.dim != b.dim:
        raise ValueError("dimension mismatch")
    perm = tuple(a.perm[b.perm[y]] for y in range(b.dim))
    phases = tuple(b.phases[y] + a.phases[b.perm[y]] for y in range(b.dim))
    return GenPermMatrix(a.dim, perm, phases)


def gpm_inv(a: GenPermMatrix) -> GenPermMatrix:
    iperm = [0] * a.dim
    for y, row in enumerate(a.perm):
        iperm[row] = y
    phases = tuple(-a.phases[iperm[y]] for y in range(a.dim))
    return GenPermMatrix(a.dim, tuple(iperm), phases)


def gpm_scalar_phase(a: GenPermMatrix) -> QmodZ:
    """Phase t of a scalar matrix exp(2 pi i t)*Id; ValueError if not scalar."""
    if a.perm != tuple(range(a.dim)) or len(set(a.phases)) != 1:
        raise ValueError("matrix is not scalar")
    return a.phases[0]


def _index_of(group: FinAbGroup, coords) -> int:
    idx = 0
    for c, o in zip(reversed(coords), reversed(group.orders)):
        idx = idx * o + c
    return idx


def _coords_of(group: FinAbGroup, idx: int) -> tuple[int, ...]:
    coords = []
    for o in group.orders:
        idx, c = divmod(idx, o)
        coords.append(c)
    return tuple(coords)


def schrodinger_matrix(a: HeisElem) -> GenPermMatrix:
    """Matrix of (t,x,f) on C[J], basis indexed by J in mixed radix, d_1 fastest.

    Column y maps to row y - x with phase t + <f, y-x>.
    """
    j = a.x.group
    dim = j.order
    perm = []
    phases = []
    for col in range(dim):
        w = j.element(_coords_of(j, col)) - a.x
        perm.append(_index_of(j, w.coords))
        phases.append(a.scalar + character_eval(a.f, w))
    return GenPermMatrix(dim, tuple(perm), tuple(phases))


def _poly_divmod(num: list[int], den: list[int]) -> tuple[list[int], list[int]]:
    # exact division in Z[x] by a monic polynomial
    if not den or den[-1] != 1:
        raise AssertionError("divisor must be monic")
    rem = list(num)
    quo = [0] * max(len(rem) - len(den) + 1, 0)
    for i in range(len(rem) - len(den), -1, -1):
        coeff = rem[i + len(den) - 1]
        if coeff:
            quo[i] = coeff
            for k, dk in enumerate(den):
                rem[i + k] -= coeff * dk
    while rem and rem[-1] == 0:
        rem.pop()
    return quo, rem


@lru_cache(maxsize=None)
def cyclotomic_poly(n: int) -> tuple[int, ...]:
    """Coefficients (ascending) of the n-th cyclotomic polynomial over Z."""
    if n < 1:
        raise ValueError("cyclotomic index must be positive")
    poly = [-1] + [0] * (n - 1) + [1]  # x^n - 1
    for d in divisors(n):
        if d < n:
            poly, rem = _poly_divmod(poly, list(cyclotomic_poly(d)))
            if rem:
                raise AssertionError("cyclotomic division must be exact")
    return tuple(poly)


DEFAULT_CHAR_NORM_BOUND = 64


def character_norm(d, bound: int = DEFAULT_CHAR_NORM_BOUND) -> Fraction:
    """(1/|Q|) sum |trace|^2 over the finite quotient Q = mu_N x J x Jhat.

    N is the exponent of J; traces are read off permutation fixed points and
    |trace|^2 is accumulated in Z[x]/(x^N - 1), with x standing for a
    primitive N-th root of unity.  The total is reduced modulo the N-th
    cyclotomic polynomial — the remainder must be an integer constant — and
    divided by |Q| = N * dim^2.  Equals 1 exactly when the representation
    is irreducible, which is the expected value for every type d.
    """
    j = FinAbGroup(tuple(d))
    dim = j.order
    if dim > bound:
        raise ValueError(f"type with dim {dim} exceeds the bound {bound}")
    n = j.exponent
    total = [0] * n
    # Elements with x != 0 permute the basis without fixed points: their
    # trace is the zero polynomial, so only (t, 0, f) contributes.
    for t in range(n):
        for f_coords in j.coord_tuples():
            elem = HeisElem(QmodZ(t, n), j.zero(), j.element(f_coords))
            mat = schrodinger_matrix(elem)
            trace = [0] * n
            hits = 0
            for y in range(dim):
                if mat.perm[y] == y:
                    ph = mat.phases[y]
                    if n % ph.den:
                        raise AssertionError("phase must be an N-th root of unity")
                    trace[ph.num * (n // ph.den) % n] += 1
                    hits += 1
            if hits != dim:
                raise AssertionError("x = 0 must fix every basis vector")
            for i in range(n):
                if trace[i]:
                    for k in range(n):
                        if trace[k]:
                            total[(i - k) % n] += trace[i] * trace[k]
    _, rem = _poly_divmod(total, list(cyclotomic_poly(n)))
    if len(rem) > 1:
        raise AssertionError("character norm must reduce to an integer constant")
    value = rem[0] if rem else 0
    return Fraction(value, n * dim * dim)


def schrodinger_multiplicity(dim_v: int, d) -> int:
    """Multiplicity of the Schrodinger representation in a dim_v-dimensional one.

    Any representation with the standard central character splits as copies
    of the Schrodinger representation, so the multiplicity is dim_v / prod(d);
    a non-integral ratio means no such representation exists.
    """
    if dim_v < 0:
        raise ValueError("dimension must be nonnegative")
    size = math.prod(tuple(int(di) for di in d))
    if dim_v % size:
        raise ValueError(f"dimension {dim_v} is not a multiple of {size}")
    return dim_v // size
