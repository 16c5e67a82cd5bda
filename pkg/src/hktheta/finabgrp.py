"""Finite abelian groups and skew pairings valued in Q/Z.

Groups are products of cyclic groups Z/(o_1) x ... x Z/(o_r).  Roots of
unity are modeled additively: the class t in Q/Z stands for exp(2*pi*i*t),
so a pairing "with values in roots of unity" is a skew biadditive map
e : G x G -> Q/Z, stored by its values on pairs of generators.

The induced homomorphism E : G -> Ghat sends a to the character e(a, -).
Its cokernel and kernel (the radical) are computed through exact Smith
normal form over Z, and independently by exhaustive enumeration
(`brute_cokernel`); the two routes share no code past the generator matrix,
so each serves as an oracle for the other.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from itertools import product

from .arith import divisors, factorint
from .snf import integer_kernel_basis, rational_solve, smith_normal_form

__all__ = [
    "QmodZ",
    "FinAbGroup",
    "GroupElement",
    "AbGroupStructure",
    "Pairing",
    "OG6PairingCase",
    "eval_pairing",
    "e_matrix",
    "pairing_cokernel",
    "pairing_radical",
    "is_nondegenerate",
    "brute_cokernel",
    "zero_pairing",
    "symplectic_pairing",
    "standard_kum_pairing",
    "standard_og6_pairing",
    "tensor_pairing",
    "symplectic_basis",
    "pairing_to_dict",
    "pairing_from_dict",
]


@dataclass(frozen=True)
class QmodZ:
    """Element of Q/Z as a reduced fraction num/den with 0 <= num < den."""

    num: int
    den: int = 1

    def __post_init__(self):
        num, den = int(self.num), int(self.den)
        if den == 0:
            raise ValueError("denominator must be nonzero")
        if den < 0:
            num, den = -num, -den
        num %= den
        g = math.gcd(num, den)
        object.__setattr__(self, "num", num // g)
        object.__setattr__(self, "den", den // g)

    @classmethod
    def parse(cls, text: str) -> "QmodZ":
        """Parse "a/b", or a bare integer "a" (which is zero mod 1)."""
        s = text.strip()
        if "/" in s:
            a, b = s.split("/", 1)
            return cls(int(a), int(b))
        return cls(int(s))

    @property
    def order(self) -> int:
        """Additive order: least k >= 1 with k * self == 0."""
        return self.den

    def is_zero(self) -> bool:
        return self.num == 0

    def as_fraction(self) -> Fraction:
        return Fraction(self.num, self.den)

    def __add__(self, other):
        if not isinstance(other, QmodZ):
            return NotImplemented
        return QmodZ(self.num * other.den + other.num * self.den, self.den * other.den)

    def __sub__(self, other):
        if not isinstance(other, QmodZ):
            return NotImplemented
        return QmodZ(self.num * other.den - other.num * self.den, self.den * other.den)

    def __neg__(self):
        return QmodZ(-self.num, self.den)

    def __mul__(self, k):
        if not isinstance(k, int):
            return NotImplemented
        return QmodZ(self.num * k, self.den)

    __rmul__ = __mul__

    def __str__(self):
        return f"{self.num}/{self.den}"


@dataclass(frozen=True)
class FinAbGroup:
    """Direct product of cyclic groups; orders[i] is the order of generator i."""

    orders: tuple[int, ...]

    def __post_init__(self):
        orders = tuple(int(o) for o in self.orders)
        if not orders:
            raise ValueError("at least one cyclic factor required")
        if any(o < 2 for o in orders):
            raise ValueError("cyclic factor orders must be >= 2")
        object.__setattr__(self, "orders", orders)

    @property
    def rank(self) -> int:
        return len(self.orders)

    @property
    def order(self) -> int:
        return math.prod(self.orders)

    @property
    def exponent(self) -> int:
        return math.lcm(*self.orders)

    def element(self, coords) -> "GroupElement":
        return GroupElement(self, tuple(int(c) for c in coords))

    def zero(self) -> "GroupElement":
        return self.element((0,) * self.rank)

    def gen(self, i: int) -> "GroupElement":
        return self.element(tuple(1 if j == i else 0 for j in range(self.rank)))

    def coord_tuples(self):
        return product(*(range(o) for o in self.orders))

    def elements(self):
        for coords in self.coord_tuples():
            yield self.element(coords)


@dataclass(frozen=True)
class GroupElement:
    group: FinAbGroup
    coords: tuple[int, ...]

    def __post_init__(self):
        if len(self.coords) != self.group.rank:
            raise ValueError("coordinate length must match the group rank")
        reduced = tuple(int(c) % o for c, o in zip(self.coords, self.group.orders))
        object.__setattr__(self, "coords", reduced)

    def _check(self, other):
        if self.group != other.group:
            raise ValueError("elements belong to different groups")

    def __add__(self, other):
        self._check(other)
        return GroupElement(self.group, tuple(a + b for a, b in zip(self.coords, other.coords)))

    def __sub__(self, other):
        self._check(other)
        return GroupElement(self.group, tuple(a - b for a, b in zip(self.coords, other.coords)))

    def __neg__(self):
        return GroupElement(self.group, tuple(-a for a in self.coords))

    def __mul__(self, k):
        if not isinstance(k, int):
            return NotImplemented
        return GroupElement(self.group, tuple(k * a for a in self.coords))

    __rmul__ = __mul__

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coords)


@dataclass(frozen=True)
class AbGroupStructure:
    """Invariant-factor form d_1 | d_2 | ... | d_k of a finite abelian group."""

    invariant_factors: tuple[int, ...] = ()

    def __post_init__(self):
        fac = tuple(int(d) for d in self.invariant_factors)
        if any(d < 2 for d in fac):
            raise ValueError("invariant factors must be >= 2")
        if any(fac[i + 1] % fac[i] for i in range(len(fac) - 1)):
            raise ValueError("invariant factors must form a divisor chain")
        object.__setattr__(self, "invariant_factors", fac)

    @classmethod
    def from_cyclic_orders(cls, orders) -> "AbGroupStructure":
        """Invariant factors of a direct sum of cyclic groups of the given orders."""
        per_prime: dict[int, list[int]] = {}
        for o in orders:
            o = int(o)
            if o < 1:
                raise ValueError("cyclic orders must be positive")
            if o == 1:
                continue
            for p, e in factorint(o).items():
                per_prime.setdefault(p, []).append(e)
        if not per_prime:
            return cls(())
        for exps in per_prime.values():
            exps.sort(reverse=True)
        width = max(len(v) for v in per_prime.values())
        desc = []
        for s in range(width):
            d = 1
            for p, exps in per_prime.items():
                if s < len(exps):
                    d *= p ** exps[s]
            desc.append(d)
        return cls(tuple(reversed(desc)))

    def is_trivial(self) -> bool:
        return not self.invariant_factors

    @property
    def order(self) -> int:
        return math.prod(self.invariant_factors)

    def __str__(self):
        if not self.invariant_factors:
            return "trivial"
        return " x ".join(f"Z/{d}" for d in self.invariant_factors)


@dataclass(frozen=True)
class Pairing:
    """Skew biadditive form on a finite abelian group, by values on generators.

    matrix[i][j] = e(gen_i, gen_j).  Skewness forces a zero diagonal, and
    biadditivity forces matrix[i][j].den | gcd(orders[i], orders[j]).
    """

    group: FinAbGroup
    matrix: tuple[tuple[QmodZ, ...], ...]

    def __post_init__(self):
        r = self.group.rank
        mat = tuple(tuple(row) for row in self.matrix)
        if len(mat) != r or any(len(row) != r for row in mat):
            raise ValueError("pairing matrix must be rank x rank")
        if any(not isinstance(q, QmodZ) for row in mat for q in row):
            raise ValueError("pairing entries must be QmodZ")
        o = self.group.orders
        for i in range(r):
            if not mat[i][i].is_zero():
                raise ValueError("pairing must vanish on the diagonal")
            for j in range(r):
                if mat[j][i] != -mat[i][j]:
                    raise ValueError("pairing matrix must be skew")
                if math.gcd(o[i], o[j]) % mat[i][j].den:
                    raise ValueError(
                        f"entry {mat[i][j]} at ({i},{j}) is incompatible with generator orders"
                    )
        object.__setattr__(self, "matrix", mat)


def eval_pairing(pairing: Pairing, a: GroupElement, b: GroupElement) -> QmodZ:
    """e(a, b) = sum_{i,j} a_i b_j e(gen_i, gen_j) in Q/Z."""
    if a.group != pairing.group or b.group != pairing.group:
        raise ValueError("elements do not belong to the pairing's group")
    total = Fraction(0)
    for i, ai in enumerate(a.coords):
        if ai == 0:
            continue
        for j, bj in enumerate(b.coords):
            if bj == 0:
                continue
            q = pairing.matrix[i][j]
            if q.num:
                total += Fraction(ai * bj * q.num, q.den)
    return QmodZ(total.numerator, total.denominator)


def e_matrix(pairing: Pairing) -> tuple[tuple[int, ...], ...]:
    """Integer matrix of E : G -> Ghat in generator/dual-generator coordinates.

    Column j is the character e(gen_j, -); row i is written in units of
    1/orders[i] and reduced mod orders[i], so Ghat = Z^r / diag(orders).
    """
    o = pairing.group.orders
    r = pairing.group.rank
    rows = []
    for i in range(r):
        row = []
        for j in range(r):
            q = pairing.matrix[j][i]
            row.append((o[i] // q.den) * q.num % o[i])
        rows.append(tuple(row))
    return tuple(rows)


def pairing_cokernel(pairing: Pairing) -> AbGroupStructure:
    """Invariant factors of Ghat / im(E), via Smith normal form.

    The cokernel is Z^r modulo the columns of e_matrix together with the
    relation columns orders[i] * (dual generator i); the diagonal of the
    Smith form of that augmented matrix gives the quotient.
    """
    m = e_matrix(pairing)
    o = pairing.group.orders
    r = pairing.group.rank
    aug = [list(m[i]) + [o[i] if j == i else 0 for j in range(r)] for i in range(r)]
    s, _, _ = smith_normal_form(aug)
    diag = [s[i][i] for i in range(r)]
    exp = pairing.group.exponent
    if any(d <= 0 or exp % d for d in diag):
        raise AssertionError("cokernel diagonal must consist of divisors of the exponent")
    return AbGroupStructure.from_cyclic_orders(d for d in diag if d > 1)


def pairing_radical(pairing: Pairing) -> AbGroupStructure:
    """Invariant factors of the radical ker(E) = {a : e(a, -) is identically 0}.

    a lies in the radical iff (e_matrix @ a) == 0 modulo diag(orders); the
    solutions form an integer lattice L with diag(orders) Z^r <= L <= Z^r and
    ker(E) = L / diag(orders) Z^r, whose structure is read off the Smith form
    of the matrix expressing diag(orders) in a basis of L.
    """
    m = e_matrix(pairing)
    o = pairing.group.orders
    r = pairing.group.rank
    amat = [list(m[i]) + [-o[i] if j == i else 0 for j in range(r)] for i in range(r)]
    kern = integer_kernel_basis(amat)
    if len(kern) != r:
        raise AssertionError("radical lattice must have full rank")
    basis = [[kern[j][i] for j in range(r)] for i in range(r)]
    rel = rational_solve(basis, [[o[i] if j == i else 0 for j in range(r)] for i in range(r)])
    cmat = []
    for row in rel:
        if any(f.denominator != 1 for f in row):
            raise AssertionError("diag(orders) must lie in the radical lattice")
        cmat.append([int(f) for f in row])
    s, _, _ = smith_normal_form(cmat)
    diag = [abs(s[i][i]) for i in range(r)]
    if any(d == 0 for d in diag):
        raise AssertionError("radical relation matrix must be nonsingular")
    return AbGroupStructure.from_cyclic_orders(d for d in diag if d > 1)


def is_nondegenerate(pairing: Pairing) -> bool:
    """True when E : G -> Ghat is an isomorphism (trivial cokernel)."""
    return pairing_cokernel(pairing).is_trivial()


def _divides_prime_power(k: int, p: int, j: int) -> bool:
    # k | p**j, i.e. k is a power of p with exponent <= j
    e = 0
    while k % p == 0:
        k //= p
        e += 1
    return k == 1 and e <= j


def _factors_from_order_counts(counts: dict[int, int]) -> tuple[int, ...]:
    """Invariant factors of a finite abelian group given its element-order counts."""
    total = sum(counts.values())
    if total == 1:
        return ()
    per_prime: dict[int, list[int]] = {}
    for p in factorint(total):
        tower = []  # tower[j-1] = number of invariant factors with p-exponent >= j
        n_prev = 1
        j = 1
        while True:
            nj = sum(c for k, c in counts.items() if _divides_prime_power(k, p, j))
            if nj % n_prev:
                raise AssertionError("element-order counts are inconsistent")
            ratio = nj // n_prev
            cj = 0
            while ratio % p == 0:
                ratio //= p
                cj += 1
            if ratio != 1:
                raise AssertionError("element-order counts are inconsistent")
            if cj == 0:
                break
            tower.append(cj)
            n_prev = nj
            j += 1
        if tower:
            per_prime[p] = [sum(1 for c in tower if c > idx) for idx in range(tower[0])]
    width = max(len(v) for v in per_prime.values())
    desc = [
        math.prod(p ** exps[s] for p, exps in per_prime.items() if s < len(exps))
        for s in range(width)
    ]
    factors = tuple(reversed(desc))
    if math.prod(factors) != total:
        raise AssertionError("reconstructed invariant factors have the wrong order")
    return factors


def brute_cokernel(pairing: Pairing, bound: int = 10**6) -> AbGroupStructure:
    """Cokernel by exhaustive enumeration; independent of the Smith-form route.

    Enumerates the image of E inside Ghat, then recovers the invariant
    factors of the quotient from the multiset of coset orders, prime by
    prime with the largest orders first.
    """
    g = pairing.group
    if g.order > bound:
        raise ValueError(f"group of order {g.order} exceeds the enumeration bound {bound}")
    o = g.orders
    r = g.rank
    m = e_matrix(pairing)
    image = set()
    for coords in g.coord_tuples():
        image.add(tuple(sum(m[i][j] * coords[j] for j in range(r)) % o[i] for i in range(r)))
    h = len(image)
    divs = divisors(g.exponent)
    counts: dict[int, int] = {}
    for ghat in g.coord_tuples():
        for k in divs:
            if tuple(k * ghat[i] % o[i] for i in range(r)) in image:
                counts[k] = counts.get(k, 0) + 1
                break
    if any(c % h for c in counts.values()):
        raise AssertionError("coset order counts must be multiples of the image size")
    counts = {k: c // h for k, c in counts.items()}
    return AbGroupStructure(_factors_from_order_counts(counts))


def zero_pairing(group: FinAbGroup) -> Pairing:
    r = group.rank
    zero = QmodZ(0)
    return Pairing(group, tuple(tuple(zero for _ in range(r)) for _ in range(r)))


def _pairing_from_pairs(group: FinAbGroup, pairs) -> Pairing:
    # pairs: iterable of (i, j, QmodZ value); skew completion is automatic
    r = group.rank
    mat = [[QmodZ(0) for _ in range(r)] for _ in range(r)]
    for i, j, val in pairs:
        mat[i][j] = val
        mat[j][i] = -val
    return Pairing(group, tuple(tuple(row) for row in mat))


def symplectic_pairing(m: int, npairs: int) -> Pairing:
    """Standard symplectic pairing on (Z/m)^(2*npairs): e(g_{2k}, g_{2k+1}) = 1/m."""
    if m < 2 or npairs < 1:
        raise ValueError("need modulus >= 2 and at least one hyperbolic pair")
    group = FinAbGroup((m,) * (2 * npairs))
    return _pairing_from_pairs(
        group, [(2 * k, 2 * k + 1, QmodZ(1, m)) for k in range(npairs)]
    )


def standard_kum_pairing(n: int, b1: int, b2: int) -> Pairing:
    """Model commutator pairing on (Z/(n+1))^4, generators (a1, b1, a2, b2).

    e(a_i, b_i) = b_i/(n+1) for the two hyperbolic pairs, zero across pairs.
    Both multipliers must divide n+1.
    """
    if n < 2:
        raise ValueError("Kummer-type parameter n must be >= 2")
    for b in (b1, b2):
        if b < 1 or (n + 1) % b:
            raise ValueError(f"multiplier {b} does not divide {n + 1}")
    group = FinAbGroup((n + 1,) * 4)
    return _pairing_from_pairs(
        group, [(0, 1, QmodZ(b1, n + 1)), (2, 3, QmodZ(b2, n + 1))]
    )


class OG6PairingCase(Enum):
    DIV1_NOT4 = "div1_not4"
    DIV1_DIV4 = "div1_div4"
    DIV2 = "div2"


def standard_og6_pairing(case: OG6PairingCase) -> Pairing:
    """Model commutator pairing on (Z/2)^8, two 4-generator blocks.

    Generators 0..3 span the first block, 4..7 the dual block.  The three
    cases: symplectic on both blocks, symplectic on the first block only
    (radical = dual block), and identically zero.
    """
    case = OG6PairingCase(case)
    group = FinAbGroup((2,) * 8)
    half = QmodZ(1, 2)
    first = [(0, 1, half), (2, 3, half)]
    second = [(4, 5, half), (6, 7, half)]
    if case is OG6PairingCase.DIV1_NOT4:
        return _pairing_from_pairs(group, first + second)
    if case is OG6PairingCase.DIV1_DIV4:
        return _pairing_from_pairs(group, first)
    return zero_pairing(group)


def tensor_pairing(p1: Pairing, p2: Pairing) -> Pairing:
    """Pointwise sum of two pairings on the same group (tensor of theta data)."""
    if p1.group != p2.group:
        raise ValueError("pairings live on different groups")
    r = p1.group.rank
    mat = tuple(
        tuple(p1.matrix[i][j] + p2.matrix[i][j] for j in range(r)) for i in range(r)
    )
    return Pairing(p1.group, mat)


def symplectic_basis(pairing: Pairing) -> list[tuple[GroupElement, GroupElement]]:
    """Hyperbolic basis (x_1, y_1), ..., (x_k, y_k) of a nondegenerate pairing.

    Requires uniform generator orders (all equal to the exponent m).  The
    returned pairs generate the group, cross-pairings vanish, and each
    e(x_i, y_i) = c_i/m with c_i a unit mod m.
    """
    g = pairing.group
    m = g.exponent
    if any(o != m for o in g.orders):
        raise ValueError("symplectic basis requires uniform generator orders")
    if not is_nondegenerate(pairing):
        raise ValueError("degenerate pairing has no symplectic basis")
    r = g.rank
    w = [[(m // q.den) * q.num % m for q in row] for row in pairing.matrix]

    def cval(x, y):
        # m * e(x, y) mod m
        return sum(x[i] * w[i][j] * y[j] for i in range(r) for j in range(r)) % m

    fac = factorint(m)
    crt = {}
    for p, a in fac.items():
        pk = p**a
        rest = m // pk
        crt[p] = (rest * pow(rest, -1, pk)) % m

    gens = [tuple(1 if j == i else 0 for j in range(r)) for i in range(r)]
    pairs: list[tuple[GroupElement, GroupElement]] = []
    while True:
        gens = [x for x in gens if any(x)]
        if not gens:
            break
        lam = [0] * len(gens)
        mu = [0] * len(gens)
        for p in fac:
            hit = next(
                (
                    (i, j)
                    for i in range(len(gens))
                    for j in range(len(gens))
                    if cval(gens[i], gens[j]) % p
                ),
                None,
            )
            if hit is None:
                raise AssertionError("nondegenerate pairing must admit a unit pair")
            lam[hit[0]] = (lam[hit[0]] + crt[p]) % m
            mu[hit[1]] = (mu[hit[1]] + crt[p]) % m
        u = tuple(sum(lam[i] * gens[i][k] for i in range(len(gens))) % m for k in range(r))
        v = tuple(sum(mu[i] * gens[i][k] for i in range(len(gens))) % m for k in range(r))
        c = cval(u, v)
        if math.gcd(c, m) != 1:
            raise AssertionError("combined hyperbolic pair is not unimodular")
        cinv = pow(c, -1, m)
        nxt = []
        for x in gens:
            tv = cval(x, v)
            tu = cval(x, u)
            nxt.append(
                tuple((x[k] - cinv * tv * u[k] + cinv * tu * v[k]) % m for k in range(r))
            )
        pairs.append((g.element(u), g.element(v)))
        gens = nxt
    return pairs


def pairing_to_dict(pairing: Pairing) -> dict:
    """Portable document form: generator orders plus a matrix of "num/den" strings."""
    return {
        "orders": list(pairing.group.orders),
        "matrix": [[str(q) for q in row] for row in pairing.matrix],
    }


def pairing_from_dict(obj) -> Pairing:
    """Inverse of pairing_to_dict; malformed documents raise ValueError."""
    try:
        orders = tuple(int(o) for o in obj["orders"])
        matrix = tuple(tuple(QmodZ.parse(s) for s in row) for row in obj["matrix"])
    except (KeyError, TypeError, AttributeError) as exc:
        raise ValueError(f"malformed pairing document: {exc!r}") from exc
    return Pairing(FinAbGroup(orders), matrix)
