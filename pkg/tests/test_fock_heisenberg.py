import itertools
from fractions import Fraction

import pytest

from qmckay.exact_ring import RSLaurent, rs_monomial, rs_substitute
from qmckay.fock_heisenberg import (
    FockSpace,
    FockVector,
    aprime_monomial,
    char_gen_as_class_combo,
    fock_form,
    heis_apply,
    heis_apply_class,
    heis_commutator_check,
)
from qmckay.group_data import builtin_group
from qmckay.mckay_form import mckay_weight, quantum_diagonal, trivial_weight
from qmckay.wreath_chars import (
    centralizer_order,
    enumerate_types,
    eta_weight_value,
    sigma_rho,
    wreath_form,
)

Z2 = builtin_group("cyclic", 2)
Z3 = builtin_group("cyclic", 3)


def space_for(table):
    return FockSpace(table, mckay_weight(table))


def test_annihilation_kills_vacuum():
    sp = space_for(Z2)
    vac = FockVector.vacuum(sp)
    assert heis_apply(sp, 3, 0, vac).is_zero()


def test_level_one_contraction_is_cartan_entry():
    sp = space_for(Z2)
    vac = FockVector.vacuum(sp)
    for i in range(2):
        for j in range(2):
            got = heis_apply(sp, 1, i, heis_apply(sp, -1, j, vac))
            assert got == vac.scale(sp.pairing[i][j])


def test_level_two_contraction_substitutes():
    # a_2(g_0) a_{-2}(g_0) vac = 2((r/s) + (s/r)) vac for the SU(2) weight
    sp = space_for(Z2)
    vac = FockVector.vacuum(sp)
    got = heis_apply(sp, 2, 0, heis_apply(sp, -2, 0, vac))
    want = (rs_monomial(2, 2, -2) + rs_monomial(2, -2, 2))
    assert got == vac.scale(want)
    assert sp.pairing_level(2)[0][0] == rs_substitute(quantum_diagonal(), 2)


def test_degree_bookkeeping():
    sp = space_for(Z3)
    vac = FockVector.vacuum(sp)
    v = heis_apply(sp, -3, 1, heis_apply(sp, -1, 0, vac))
    (key,) = v.terms
    assert sp.degree(key) == 4
    w = heis_apply(sp, 1, 0, v)
    assert all(sp.degree(k) == 3 for k in w.terms)


@pytest.mark.parametrize("table", [Z2, Z3], ids=lambda t: t.name)
def test_commutator_suite_small(table):
    sp = space_for(table)
    tags = [("char", i) for i in range(table.n_chars)] + [
        ("class", c) for c in range(table.n_classes)
    ]
    for m, n in [(1, -1), (2, -2), (1, -2), (2, 1), (-1, -2), (3, -3)]:
        for x in tags:
            for y in tags:
                ok, witness = heis_commutator_check(sp, m, n, x, y, 3)
                assert ok, (m, n, x, y, witness)


def test_class_commutator_value():
    # [a_m(c), a_n(c')] = m delta_{m,-n} delta_{c', c^{-1}} zeta_c xi^{(m)}(c)
    sp = space_for(Z3)
    vac = FockVector.vacuum(sp)
    m = 2
    for c in range(3):
        for cp in range(3):
            lhs = heis_apply_class(sp, m, c, heis_apply_class(sp, -m, cp, vac))
            if cp == Z3.inverse_class(c):
                want = vac.scale(sp.xi.value_level(c, m) * (m * Z3.centralizer(c)))
            else:
                want = FockVector(sp)
            assert lhs == want


def test_basis_change_round_trip():
    sp = space_for(Z3)
    vac = FockVector.vacuum(sp)
    seed = heis_apply(sp, -2, 1, heis_apply(sp, -1, 2, vac))
    for m in (1, 2, -1, -3):
        for i in range(3):
            # a_m(g_i) = sum_c zeta_c^{-1} g_i(c) a_m(c)
            direct = heis_apply(sp, m, i, seed)
            total = FockVector(sp)
            for c, w in char_gen_as_class_combo(Z3, i):
                total = total + heis_apply_class(sp, m, c, seed).scale(w)
            assert direct == total


def test_fock_form_basics():
    sp = space_for(Z2)
    vac = FockVector.vacuum(sp)
    assert fock_form(vac, vac) == RSLaurent.one()
    for i in range(2):
        for j in range(2):
            u = heis_apply(sp, -1, i, vac)
            v = heis_apply(sp, -1, j, vac)
            assert fock_form(u, v) == sp.pairing[i][j]
    # lattice part is diagonal
    e0 = FockVector.vacuum(sp, beta=(1, 0))
    e1 = FockVector.vacuum(sp, beta=(0, 1))
    assert fock_form(e0, e0) == RSLaurent.one()
    assert fock_form(e0, e1).is_zero()


def test_fock_form_adjoint_consistency():
    sp = space_for(Z3)
    vac = FockVector.vacuum(sp)
    u = heis_apply(sp, -1, 0, heis_apply(sp, -2, 1, vac)).scale(rs_monomial(1, 2, 0))
    v = heis_apply(sp, -1, 0, heis_apply(sp, -1, 1, heis_apply(sp, -1, 2, vac)))
    for n in (1, 2, 3):
        for i in range(3):
            lhs = fock_form(heis_apply(sp, n, i, u), v)
            rhs = fock_form(u, heis_apply(sp, -n, i, v))
            assert lhs == rhs


def test_second_slot_inverts_laurent_coefficients():
    sp = space_for(Z2)
    vac = FockVector.vacuum(sp)
    u = heis_apply(sp, -1, 0, vac)
    v = heis_apply(sp, -1, 0, vac).scale(rs_monomial(1, 2, -4))
    assert fock_form(u, v) == rs_monomial(1, -2, 4) * sp.pairing[0][0]
    assert fock_form(v, u) == rs_monomial(1, 2, -4) * sp.pairing[0][0]


@pytest.mark.parametrize("table", [Z2, Z3], ids=lambda t: t.name)
@pytest.mark.parametrize("n", [1, 2, 3])
def test_closed_inner_product_formula(table, n):
    """The normal-form evaluation reproduces the closed Gram formula
    <a'_{rho (x) r^m s^n}, a'_{rho-bar (x) r^k s^l}> =
      Z_rho r^{n(k-m)} s^{n(l-n)} prod xi-levels."""
    sp = space_for(table)
    xi = sp.xi
    twists = [(0, 0), (1, 0), (-1, 2)]
    for rho in enumerate_types(table, n):
        for (m1, n1), (k1, l1) in itertools.product(twists, twists):
            u = aprime_monomial(sp, rho, m1, n1)
            v = aprime_monomial(sp, rho.bar(table), k1, l1)
            got = fock_form(u, v)
            want = (
                eta_weight_value(table, xi, rho)
                * rs_monomial(
                    centralizer_order(table, rho),
                    2 * n * (k1 - m1),
                    2 * n * (l1 - n1),
                )
            )
            assert got == want


@pytest.mark.parametrize("table", [Z2, Z3], ids=lambda t: t.name)
def test_aprime_gram_orthogonality(table):
    sp = space_for(table)
    for rho in enumerate_types(table, 2):
        for sig in enumerate_types(table, 2):
            got = fock_form(aprime_monomial(sp, rho), aprime_monomial(sp, sig))
            if sig == rho.bar(table):
                assert not got.is_zero()
            else:
                assert got.is_zero()


@pytest.mark.parametrize("table", [Z2, Z3], ids=lambda t: t.name)
@pytest.mark.parametrize("n", [1, 2, 3])
def test_gram_matches_wreath_gram(table, n):
    """Isometry precursor: the a' Gram matrix equals the sigma Gram matrix."""
    sp = space_for(table)
    xi = sp.xi
    types = enumerate_types(table, n)
    for r1 in types:
        for r2 in types:
            fock = fock_form(aprime_monomial(sp, r1), aprime_monomial(sp, r2))
            wreath = wreath_form(sigma_rho(table, r1), sigma_rho(table, r2), xi)
            assert fock == wreath


def test_trivial_weight_gram_is_centralizer():
    sp = FockSpace(Z2, trivial_weight(Z2))
    for rho in enumerate_types(Z2, 3):
        got = fock_form(
            aprime_monomial(sp, rho), aprime_monomial(sp, rho.bar(Z2))
        )
        assert got == RSLaurent.monomial(centralizer_order(Z2, rho))


def test_affine_restriction_space():
    sp = FockSpace(Z3, mckay_weight(Z3), indices=(1, 2))
    monos = sp.heis_monomials(2)
    assert all(i in (1, 2) for mono in monos for _, i in mono)
    keys = sp.basis_keys(2, ball=1)
    assert all(beta[0] == 0 for _, beta in keys)


def test_vector_json_round_shape():
    sp = space_for(Z2)
    vac = FockVector.vacuum(sp)
    v = heis_apply(sp, -2, 1, heis_apply(sp, -1, 1, vac))
    js = v.to_json()
    assert js[0]["rho"] == {"1": [2, 1]}
    assert js[0]["beta"] == [0, 0]
