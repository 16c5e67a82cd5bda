"""Heisenberg group law, commutators, and the exact matrix representation."""

import math
import random
from fractions import Fraction

import pytest

from hktheta.finabgrp import (
    FinAbGroup,
    QmodZ,
    brute_cokernel,
    is_nondegenerate,
    pairing_cokernel,
)
from hktheta.heisenberg import (
    GenPermMatrix,
    HeisElem,
    character_eval,
    character_norm,
    cyclotomic_poly,
    gpm_identity,
    gpm_inv,
    gpm_mul,
    gpm_scalar_phase,
    h_commutator,
    h_identity,
    h_inv,
    h_mul,
    heis_elem,
    heis_pairing,
    schrodinger_matrix,
    schrodinger_multiplicity,
)

TYPES = [(2,), (3,), (4,), (2, 2), (3, 3), (2, 2, 2, 2)]


def random_heis(rng, d, scalar_den=48):
    group = FinAbGroup(d)
    return HeisElem(
        QmodZ(rng.randrange(scalar_den), scalar_den),
        group.element([rng.randrange(o) for o in d]),
        group.element([rng.randrange(o) for o in d]),
    )


def quotient_elements(d):
    """All (t, x, f) with t in mu_N, N the exponent of J."""
    j = FinAbGroup(d)
    n = j.exponent
    return [
        HeisElem(QmodZ(t, n), j.element(x), j.element(f))
        for t in range(n)
        for x in j.coord_tuples()
        for f in j.coord_tuples()
    ]


# ---------------------------------------------------------------------------
# group law


def test_h_mul_golden():
    a = heis_elem((2,), QmodZ(0), (1,), (0,))
    b = heis_elem((2,), QmodZ(0), (0,), (1,))
    ab = h_mul(a, b)
    assert ab.scalar == QmodZ(1, 2)  # <g, x> = 1/2
    assert ab.x.coords == (1,) and ab.f.coords == (1,)
    ba = h_mul(b, a)
    assert ba.scalar == QmodZ(0)  # <0, 0> on the other side


def test_character_eval_golden():
    j = FinAbGroup((2, 4))
    assert character_eval(j.element((1, 1)), j.element((1, 2))) == QmodZ(0)
    assert character_eval(j.element((0, 1)), j.element((0, 1))) == QmodZ(1, 4)
    with pytest.raises(ValueError):
        character_eval(j.element((0, 0)), FinAbGroup((2,)).element((0,)))


def test_heis_elem_type_mismatch():
    with pytest.raises(ValueError):
        HeisElem(QmodZ(0), FinAbGroup((2,)).zero(), FinAbGroup((3,)).zero())
    with pytest.raises(ValueError):
        h_mul(h_identity((2,)), h_identity((3,)))


@pytest.mark.parametrize("d", TYPES, ids=str)
def test_group_axioms(d):
    rng = random.Random(f"20260821-{d}")
    e = h_identity(d)
    for _ in range(1000):
        a = random_heis(rng, d)
        b = random_heis(rng, d)
        c = random_heis(rng, d)
        assert h_mul(h_mul(a, b), c) == h_mul(a, h_mul(b, c))
        assert h_mul(e, a) == a == h_mul(a, e)
        assert h_mul(a, h_inv(a)) == e
        assert h_mul(h_inv(a), a) == e


# ---------------------------------------------------------------------------
# commutators


def test_commutator_golden():
    a = heis_elem((2,), QmodZ(0), (1,), (0,))
    b = heis_elem((2,), QmodZ(0), (0,), (1,))
    assert h_commutator(a, b) == QmodZ(1, 2)
    assert h_commutator(b, a) == QmodZ(1, 2)  # -1/2 = 1/2 in Q/Z
    assert h_commutator(a, a) == QmodZ(0)


def closed_form(a, b):
    # <g, x> - <f, y>; kept in the tests as a regression oracle only
    return character_eval(b.f, a.x) - character_eval(a.f, b.x)


@pytest.mark.parametrize("d", [(2,), (3,)], ids=str)
def test_commutator_closed_form_exhaustive(d):
    elems = quotient_elements(d)
    for a in elems:
        for b in elems:
            assert h_commutator(a, b) == closed_form(a, b)


@pytest.mark.parametrize("d", [(2, 2), (3, 3), (2, 4)], ids=str)
def test_commutator_closed_form_random(d):
    rng = random.Random(f"closed-form-{d}")
    for _ in range(300):
        a = random_heis(rng, d)
        b = random_heis(rng, d)
        assert h_commutator(a, b) == closed_form(a, b)


def test_commutator_ignores_scalars():
    rng = random.Random(7)
    d = (3, 3)
    for _ in range(100):
        a = random_heis(rng, d)
        b = random_heis(rng, d)
        a_shift = HeisElem(a.scalar + QmodZ(1, 9), a.x, a.f)
        b_shift = HeisElem(b.scalar + QmodZ(5, 7), b.x, b.f)
        assert h_commutator(a_shift, b_shift) == h_commutator(a, b)


def test_central_elements_commute():
    rng = random.Random(11)
    d = (2, 4)
    center = heis_elem(d, QmodZ(3, 8), (0, 0), (0, 0))
    for _ in range(50):
        a = random_heis(rng, d)
        assert h_commutator(center, a) == QmodZ(0)
        assert h_mul(center, a) == h_mul(a, center)


# ---------------------------------------------------------------------------
# commutator pairing


@pytest.mark.parametrize("d", [(2,), (3, 3), (2, 2, 2, 2)], ids=str)
def test_heis_pairing_nondegenerate(d):
    p = heis_pairing(d)
    assert p.group.orders == tuple(d) + tuple(d)
    assert is_nondegenerate(p)
    assert brute_cokernel(p).is_trivial()


def test_heis_pairing_mixed_orders():
    p = heis_pairing((2, 4))
    g = len((2, 4))
    for i, di in enumerate((2, 4)):
        assert p.matrix[i][g + i] == QmodZ(1, di)
        assert p.matrix[g + i][i] == QmodZ(-1, di)
    assert pairing_cokernel(p).is_trivial()


# ---------------------------------------------------------------------------
# generalized permutation matrices


def test_gpm_validation():
    with pytest.raises(ValueError):
        GenPermMatrix(2, (0, 0), (QmodZ(0), QmodZ(0)))
    with pytest.raises(ValueError):
        GenPermMatrix(2, (0, 1), (QmodZ(0),))
    with pytest.raises(ValueError):
        gpm_mul(gpm_identity(2), gpm_identity(3))


def test_gpm_algebra():
    rng = random.Random(23)
    for _ in range(200):
        dim = rng.randrange(1, 7)

        def rand_gpm():
            perm = list(range(dim))
            rng.shuffle(perm)
            phases = tuple(QmodZ(rng.randrange(12), 12) for _ in range(dim))
            return GenPermMatrix(dim, tuple(perm), phases)

        a, b, c = rand_gpm(), rand_gpm(), rand_gpm()
        ident = gpm_identity(dim)
        assert gpm_mul(a, ident) == a == gpm_mul(ident, a)
        assert gpm_mul(gpm_mul(a, b), c) == gpm_mul(a, gpm_mul(b, c))
        assert gpm_mul(a, gpm_inv(a)) == ident
        assert gpm_mul(gpm_inv(a), a) == ident


def test_gpm_scalar_phase():
    s = GenPermMatrix(3, (0, 1, 2), (QmodZ(1, 3),) * 3)
    assert gpm_scalar_phase(s) == QmodZ(1, 3)
    with pytest.raises(ValueError):
        gpm_scalar_phase(GenPermMatrix(2, (1, 0), (QmodZ(0), QmodZ(0))))
    with pytest.raises(ValueError):
        gpm_scalar_phase(GenPermMatrix(2, (0, 1), (QmodZ(0), QmodZ(1, 2))))


# ---------------------------------------------------------------------------
# the matrix representation


def test_schrodinger_identity_and_center():
    assert schrodinger_matrix(h_identity((2, 3))) == gpm_identity(6)
    central = heis_elem((3,), QmodZ(1, 3), (0,), (0,))
    mat = schrodinger_matrix(central)
    assert gpm_scalar_phase(mat) == QmodZ(1, 3)


def test_schrodinger_translation_golden():
    # pure translation by the first generator: a cyclic shift, no phases
    mat = schrodinger_matrix(heis_elem((3, 3), QmodZ(0), (1, 0), (0, 0)))
    assert mat.perm == (2, 0, 1, 5, 3, 4, 8, 6, 7)
    assert all(ph == QmodZ(0) for ph in mat.phases)
    mat2 = schrodinger_matrix(heis_elem((2, 3), QmodZ(0), (1, 0), (0, 0)))
    assert mat2.perm == (1, 0, 3, 2, 5, 4)


def test_schrodinger_character_golden():
    # pure character: diagonal with phases <f, y> = y/4
    mat = schrodinger_matrix(heis_elem((4,), QmodZ(0), (0,), (1,)))
    assert mat.perm == (0, 1, 2, 3)
    assert mat.phases == (QmodZ(0), QmodZ(1, 4), QmodZ(1, 2), QmodZ(3, 4))


def test_schrodinger_mixed_golden():
    mat = schrodinger_matrix(heis_elem((2,), QmodZ(1, 2), (1,), (1,)))
    assert mat.perm == (1, 0)
    assert mat.phases == (QmodZ(0), QmodZ(1, 2))


@pytest.mark.parametrize("d", [(2,), (3,), (2, 2)], ids=str)
def test_schrodinger_homomorphism_exhaustive(d):
    elems = quotient_elements(d)
    mats = {e: schrodinger_matrix(e) for e in elems}
    for a in elems:
        for b in elems:
            prod = h_mul(a, b)
            # scalars stay inside mu_N here, so the product is in the table
            assert gpm_mul(mats[a], mats[b]) == mats[prod]


@pytest.mark.parametrize("d", [(2,), (3,), (2, 2)], ids=str)
def test_matrix_commutator_is_scalar_with_commutator_phase(d):
    elems = quotient_elements(d)
    mats = {e: (schrodinger_matrix(e), gpm_inv(schrodinger_matrix(e))) for e in elems}
    for a in elems:
        for b in elems:
            m = gpm_mul(gpm_mul(mats[a][0], mats[b][0]), gpm_mul(mats[a][1], mats[b][1]))
            assert gpm_scalar_phase(m) == h_commutator(a, b)


@pytest.mark.parametrize("d", [(3, 3), (2, 4), (4,)], ids=str)
def test_schrodinger_homomorphism_random(d):
    rng = random.Random(f"matrix-hom-{d}")
    n = FinAbGroup(d).exponent
    for _ in range(300):
        a = random_heis(rng, d, scalar_den=n)
        b = random_heis(rng, d, scalar_den=n)
        ma, mb = schrodinger_matrix(a), schrodinger_matrix(b)
        assert gpm_mul(ma, mb) == schrodinger_matrix(h_mul(a, b))
        comm = gpm_mul(gpm_mul(ma, mb), gpm_mul(gpm_inv(ma), gpm_inv(mb)))
        assert gpm_scalar_phase(comm) == h_commutator(a, b)


def test_translations_have_no_fixed_points():
    j = FinAbGroup((2, 3))
    for x in j.coord_tuples():
        if not any(x):
            continue
        mat = schrodinger_matrix(heis_elem((2, 3), QmodZ(0), x, (0, 0)))
        assert all(mat.perm[y] != y for y in range(mat.dim))


# ---------------------------------------------------------------------------
# cyclotomic polynomials and the norm


def test_cyclotomic_golden():
    assert cyclotomic_poly(1) == (-1, 1)
    assert cyclotomic_poly(2) == (1, 1)
    assert cyclotomic_poly(3) == (1, 1, 1)
    assert cyclotomic_poly(4) == (1, 0, 1)
    assert cyclotomic_poly(6) == (1, -1, 1)
    assert cyclotomic_poly(12) == (1, 0, -1, 0, 1)
    with pytest.raises(ValueError):
        cyclotomic_poly(0)


def test_cyclotomic_degrees_sum():
    for n in (8, 12, 30):
        total = sum(len(cyclotomic_poly(d)) - 1 for d in range(1, n + 1) if n % d == 0)
        assert total == n


CHAIN_TYPES = (
    [(k,) for k in range(2, 17)]
    + [(2, 2), (2, 4), (2, 6), (2, 8), (3, 3), (4, 4), (2, 2, 2), (2, 2, 4), (2, 2, 2, 2)]
)


@pytest.mark.parametrize("d", CHAIN_TYPES, ids=str)
def test_character_norm_is_one(d):
    assert character_norm(d) == Fraction(1)


def test_character_norm_nonchain_type():
    # J need not be given in divisor-chain form
    assert character_norm((2, 3)) == Fraction(1)


def test_character_norm_bound():
    with pytest.raises(ValueError):
        character_norm((2,) * 7)  # dim 128 > default bound
    assert character_norm((2,) * 7, bound=128) == Fraction(1)


# ---------------------------------------------------------------------------
# multiplicity


def test_schrodinger_multiplicity():
    assert schrodinger_multiplicity(9, (3, 3)) == 1
    assert schrodinger_multiplicity(16, (2, 2, 2, 2)) == 1
    assert schrodinger_multiplicity(18, (3, 3)) == 2
    assert schrodinger_multiplicity(0, (2,)) == 0
    with pytest.raises(ValueError):
        schrodinger_multiplicity(10, (3, 3))
    with pytest.raises(ValueError):
        schrodinger_multiplicity(-9, (3, 3))
