"""Cokernel formulas, Heisenberg criteria, and section counts for line bundles.

Three families are covered, keyed by the translation group of the underlying
manifold: the generalized-Kummer family KUM (group (Z/(n+1))^4), the OG6
family (group (Z/2)^8), and the RANK4 family of modular sheaves on
Kummer-type fourfolds (Schrodinger type (3,3)).

For KUM the commutator-pairing cokernel is (Z/div0)^2 + (Z/m)^2, where div0
halves the divisibility exactly when the 2-adic valuation of div(L) exceeds
that of n+1, and m = gcd(n+1, q/(2*div0)).  For OG6 it is trivial, (Z/2)^4,
or (Z/2)^8 according to (div, q mod 4).  For RANK4 it is trivial or (Z/3)^2
according to 3 | e.  Each family also carries a closed-form Heisenberg
criterion; theta_report computes criterion and cokernel independently and
insists they agree.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

from .arith import ord2
from .finabgrp import AbGroupStructure
from .heisenberg import schrodinger_multiplicity

__all__ = [
    "Family",
    "LineBundleInvariants",
    "ThetaReport",
    "div0_kum",
    "m_kum",
    "kum_cokernel",
    "kum_is_heisenberg",
    "kum_cokernel_from_class",
    "kum_class_invariants",
    "og6_cokernel",
    "og6_is_heisenberg",
    "rank4_a",
    "rank4_cokernel",
    "rank4_is_heisenberg",
    "riemann_roch",
    "theta_report",
    "report_to_dict",
]


class Family(Enum):
    KUM = "kum"
    OG6 = "og6"
    RANK4 = "rank4"


@dataclass(frozen=True)
class LineBundleInvariants:
    """Numerical invariants (family, div, q, n?) of a primitive class."""

    family: Family
    div: int
    q: int
    n: int | None = None

    def __post_init__(self):
        if self.q % 2:
            raise ValueError("the square q is always even; odd input rejected")
        if self.div < 1:
            raise ValueError("divisibility must be positive")
        if self.family is Family.KUM:
            if self.n is None or self.n < 2:
                raise ValueError("KUM requires n >= 2")
            if (2 * (self.n + 1)) % self.div:
                raise ValueError(f"divisibility {self.div} must divide {2 * (self.n + 1)}")
        elif self.family is Family.OG6:
            if self.n is not None:
                raise ValueError("OG6 takes no parameter n")
            if self.div not in (1, 2):
                raise ValueError("OG6 divisibility must be 1 or 2")
            if self.div == 2 and self.q % 8 not in (4, 6):
                raise ValueError("OG6 divisibility 2 forces q = -2 or -4 mod 8")
        else:
            if self.n is not None:
                raise ValueError("RANK4 takes no parameter n")
            if self.div != 2:
                raise ValueError("RANK4 sheaves have divisibility 2")
            rank4_a(self.q)  # validates q > 0 and q = -6 mod 16


def div0_kum(n: int, div: int) -> int:
    """div when ord_2(n+1) >= ord_2(div), else div/2."""
    if n < 2:
        raise ValueError("need n >= 2")
    if div < 1 or (2 * (n + 1)) % div:
        raise ValueError(f"divisibility {div} must divide {2 * (n + 1)}")
    if ord2(n + 1) >= ord2(div):
        return div
    return div // 2


def m_kum(n: int, q: int, div0: int) -> int:
    """gcd(n+1, q/(2*div0)); gcd of absolute values, so any sign of q works."""
    if n < 2:
        raise ValueError("need n >= 2")
    if div0 < 1:
        raise ValueError("div0 must be positive")
    if q % (2 * div0):
        raise ValueError(f"2*div0 = {2 * div0} must divide q = {q}")
    return math.gcd(n + 1, q // (2 * div0))


def kum_cokernel(n: int, div: int, q: int) -> AbGroupStructure:
    """(Z/div0)^2 + (Z/m)^2 in divisor-chain form, trivial factors dropped."""
    if q % 2:
        raise ValueError("the square q is always even; odd input rejected")
    d0 = div0_kum(n, div)
    m = m_kum(n, q, d0)
    return AbGroupStructure.from_cyclic_orders((d0, d0, m, m))


def kum_is_heisenberg(n: int, div: int, q: int) -> bool:
    """Closed-form criterion: div in {1, 2 with n even} and gcd(n+1, q/2) = 1."""
    if q % 2:
        raise ValueError("the square q is always even; odd input rejected")
    div0_kum(n, div)  # input validation
    small_div = div == 1 or (div == 2 and n % 2 == 0)
    return small_div and math.gcd(n + 1, q // 2) == 1


def kum_class_invariants(n: int, a1: int, a2: int, x: int) -> LineBundleInvariants:
    """Invariants of the class with elementary divisors (a1, a2) and x along delta.

    Primitivity gcd(a1, x) = 1 pins div = gcd(2(n+1), a1); the square entering
    the cokernel formula is 2*a1*a2.
    """
    if n < 2:
        raise ValueError("need n >= 2")
    if a1 < 1 or a2 < 1 or a2 % a1:
        raise ValueError("need 1 <= a1 | a2")
    if math.gcd(a1, x) != 1:
        raise ValueError("primitivity requires gcd(a1, x) = 1")
    return LineBundleInvariants(
        family=Family.KUM, div=math.gcd(2 * (n + 1), a1), q=2 * a1 * a2, n=n
    )


def kum_cokernel_from_class(n: int, a1: int, a2: int, x: int) -> AbGroupStructure:
    """(Z/b1)^2 + (Z/b2)^2 with b_i = gcd(n+1, a_i), cross-checked against
    the (div, q) route evaluated at div = gcd(2(n+1), a1), q = 2*a1*a2."""
    inv = kum_class_invariants(n, a1, a2, x)
    b1 = math.gcd(n + 1, a1)
    b2 = math.gcd(n + 1, a2)
    result = AbGroupStructure.from_cyclic_orders((b1, b1, b2, b2))
    if result != kum_cokernel(n, inv.div, inv.q):
        raise AssertionError("class-route and (div,q)-route cokernels disagree")
    return result


def og6_cokernel(div: int, q: int) -> AbGroupStructure:
    """Trivial, (Z/2)^4, or (Z/2)^8 by (div, q mod 4)."""
    inv = LineBundleInvariants(family=Family.OG6, div=div, q=q)
    if inv.div == 1:
        if q % 4:
            return AbGroupStructure(())
        return AbGroupStructure.from_cyclic_orders((2,) * 4)
    return AbGroupStructure.from_cyclic_orders((2,) * 8)


def og6_is_heisenberg(div: int, q: int) -> bool:
    """Criterion: div = 1 and 4 does not divide q."""
    LineBundleInvariants(family=Family.OG6, div=div, q=q)
    return div == 1 and q % 4 != 0


def rank4_a(e: int) -> int:
    """The parameter a with e = 16a - 6 (so 2a is the square of the base polarization)."""
    if e <= 0 or e % 16 != 10:
        raise ValueError(f"need e > 0 with e = -6 mod 16, got {e}")
    return (e + 6) // 16


def rank4_cokernel(e: int) -> AbGroupStructure:
    """Trivial when 3 does not divide e, else (Z/3)^2."""
    a = rank4_a(e)
    if (e % 3 == 0) != (a % 3 == 0):
        raise AssertionError("3 | e and 3 | a must be equivalent under e = 16a - 6")
    if e % 3:
        return AbGroupStructure(())
    return AbGroupStructure.from_cyclic_orders((3, 3))


def rank4_is_heisenberg(e: int) -> bool:
    """Criterion: 3 does not divide e."""
    rank4_a(e)
    return e % 3 != 0


def riemann_roch(inv: LineBundleInvariants) -> int:
    """Section count h^0 for an ample primitive class with the given square.

    KUM: (n+1)*C(e+n, n) with e = q/2.  OG6: 4*C(e+3, 3).  RANK4: 3*C(a+2, 2).
    """
    if inv.q <= 0:
        raise ValueError("the section-count formulas require q > 0")
    if inv.family is Family.KUM:
        e = inv.q // 2
        return (inv.n + 1) * math.comb(e + inv.n, inv.n)
    if inv.family is Family.OG6:
        e = inv.q // 2
        return 4 * math.comb(e + 3, 3)
    a = rank4_a(inv.q)
    return 3 * math.comb(a + 2, 2)


@dataclass(frozen=True)
class ThetaReport:
    """Aggregate answer: cokernel, Heisenberg verdict, and section data."""

    invariants: LineBundleInvariants
    div0: int | None
    m: int | None
    cokernel: AbGroupStructure
    is_heisenberg: bool
    h0: int | None
    schrodinger_multiplicity: int | None


_REP_TYPE = {
    Family.OG6: (2, 2, 2, 2),
    Family.RANK4: (3, 3),
}


def theta_report(inv: LineBundleInvariants) -> ThetaReport:
    """Evaluate cokernel and criterion independently; they must agree.

    h0 is present only for q > 0; the multiplicity h0 / (Schrodinger dim) is
    present only when the theta group is Heisenberg and h0 is defined.
    """
    div0 = m = None
    if inv.family is Family.KUM:
        div0 = div0_kum(inv.n, inv.div)
        m = m_kum(inv.n, inv.q, div0)
        cokernel = kum_cokernel(inv.n, inv.div, inv.q)
        criterion = kum_is_heisenberg(inv.n, inv.div, inv.q)
        rep_type = (inv.n + 1, inv.n + 1)
    elif inv.family is Family.OG6:
        cokernel = og6_cokernel(inv.div, inv.q)
        criterion = og6_is_heisenberg(inv.div, inv.q)
        rep_type = _REP_TYPE[Family.OG6]
    else:
        cokernel = rank4_cokernel(inv.q)
        criterion = rank4_is_heisenberg(inv.q)
        rep_type = _REP_TYPE[Family.RANK4]
    if criterion != cokernel.is_trivial():
        raise AssertionError("Heisenberg criterion and cokernel triviality disagree")
    h0 = riemann_roch(inv) if inv.q > 0 else None
    multiplicity = None
    if criterion and h0 is not None:
        multiplicity = schrodinger_multiplicity(h0, rep_type)
    return ThetaReport(
        invariants=inv,
        div0=div0,
        m=m,
        cokernel=cokernel,
        is_heisenberg=criterion,
        h0=h0,
        schrodinger_multiplicity=multiplicity,
    )


def report_to_dict(report: ThetaReport) -> dict:
    """Flat serializable record; absent optionals are omitted, never null."""
    inv = report.invariants
    out: dict = {"family": inv.family.value}
    if inv.n is not None:
        out["n"] = inv.n
    out["div"] = inv.div
    out["q"] = inv.q
    if report.div0 is not None:
        out["div0"] = report.div0
    if report.m is not None:
        out["m"] = report.m
    out["cokernel"] = list(report.cokernel.invariant_factors)
    out["is_heisenberg"] = report.is_heisenberg
    if report.h0 is not None:
        out["h0"] = report.h0
    if report.schrodinger_multiplicity is not None:
        out["multiplicity"] = report.schrodinger_multiplicity
    return out
