import itertools
import math
from fractions import Fraction

import pytest

from qmckay.exact_ring import RSLaurent, rs_monomial
from qmckay.group_data import ClassFunctionRS, builtin_group
from qmckay.mckay_form import mckay_weight, trivial_weight, weighted_form
from qmckay.wreath_chars import (
    WreathType,
    centralizer_order,
    enumerate_types,
    eps_value,
    eta_value,
    eta_weight_value,
    sigma_char,
    sigma_class,
    sigma_fn,
    sigma_rho,
    wreath_form,
    z_lambda,
)

Z1 = builtin_group("cyclic", 1)
Z2 = builtin_group("cyclic", 2)
Z3 = builtin_group("cyclic", 3)


# ---------------------------------------------------------------------------
# a tiny explicit wreath product (Z/2 wr S_n) used as a brute-force oracle


def wreath_elements(n):
    for colors in itertools.product((0, 1), repeat=n):
        for perm in itertools.permutations(range(n)):
            yield (colors, perm)


def wr_mul(a, b):
    (g, s), (h, t) = a, b
    # (g, s)(h, t) = (g * s(h), s t);  s acts by permuting coordinates
    sh = tuple(h[s.index(i)] for i in range(len(g)))
    moved = tuple((g[i] + sh[i]) % 2 for i in range(len(g)))
    st = tuple(s[t[i]] for i in range(len(g)))
    return (moved, st)


def wr_inv(a):
    g, s = a
    sinv = tuple(s.index(i) for i in range(len(g)))
    ginv = tuple((-g[sinv[i]]) % 2 for i in range(len(g)))
    return (ginv, sinv)


def wr_type(a):
    g, s = a
    n = len(g)
    seen = [False] * n
    parts = {0: [], 1: []}
    for start in range(n):
        if seen[start]:
            continue
        cyc = [start]
        seen[start] = True
        j = s[start]
        while j != start:
            seen[j] = True
            cyc.append(j)
            j = s[j]
        total = sum(g[i] for i in cyc) % 2
        parts[total].append(len(cyc))
    return WreathType.make(
        [(c, tuple(sorted(parts[c], reverse=True))) for c in (0, 1)]
    )


@pytest.mark.parametrize("n", [1, 2, 3])
def test_types_match_brute_force_conjugacy(n):
    elements = list(wreath_elements(n))
    order = len(elements)
    assert order == 2 ** n * math.factorial(n)
    # brute-force centralizer orders, grouped by type
    by_type = {}
    for x in elements:
        cent = sum(1 for y in elements if wr_mul(x, y) == wr_mul(y, x))
        by_type.setdefault(wr_type(x), set()).add(cent)
    types = enumerate_types(Z2, n)
    assert set(types) == set(by_type)
    for rho in types:
        assert by_type[rho] == {centralizer_order(Z2, rho)}
    # conjugation preserves the type
    for x in elements[:8]:
        for y in elements[:8]:
            assert wr_type(wr_mul(wr_mul(y, x), wr_inv(y))) == wr_type(x)


def test_enumerate_counts():
    assert len(enumerate_types(Z2, 0)) == 1
    assert len(enumerate_types(Z1, 3)) == 3
    assert len(enumerate_types(Z2, 2)) == 5
    # deterministic canonical order
    assert [t.parts for t in enumerate_types(Z2, 2)] == sorted(
        t.parts for t in enumerate_types(Z2, 2)
    )


def test_centralizer_examples():
    assert centralizer_order(Z1, WreathType.make([(0, (1, 1, 1))])) == 6
    rho = WreathType.make([(0, (1,)), (1, (1,))])
    assert centralizer_order(Z2, rho) == 4
    assert centralizer_order(Z2, WreathType.make([(0, (2,))])) == 4
    assert z_lambda((2, 1, 1)) == 4


@pytest.mark.parametrize(
    "table,n",
    [(Z1, 4), (Z2, 4), (Z3, 4), (builtin_group("binary_dihedral", 2), 3),
     (builtin_group("binary_tetrahedral"), 2)],
    ids=["triv4", "z2n4", "z3n4", "bd2n3", "2t2"],
)
def test_class_equation(table, n):
    order = table.order ** n * math.factorial(n)
    total = sum(
        Fraction(order, centralizer_order(table, rho))
        for rho in enumerate_types(table, n)
    )
    assert total == order


def brute_eta(gamma_idx, k, l, x, n, sign=False):
    """Trace of (g, s) on the n-th tensor power of the 1-dim rep gamma of Z/2,
    twisted by r^k s^l, via the explicit permutation action."""
    g, s = x
    # 1-dim: the operator is a scalar times the permutation matrix of s^{-1};
    # its trace counts fixed points of s, and each cycle contributes the
    # product of gamma over the cycle.  Compute honestly from the action.
    scalar = RSLaurent.one()
    for i in range(n):
        scalar = scalar * Z2.chars[gamma_idx][g[i]]
    fixed = RSLaurent.zero()
    # trace of v_{s^{-1}(1)} (x) ... over the 1-dim basis: the permutation
    # part is identity on the 1-dimensional tensor space
    fixed = scalar
    if sign:
        par = _perm_sign(s)
        fixed = fixed * par
    return fixed * rs_monomial(1, 2 * n * k, 2 * n * l)


def _perm_sign(s):
    seen = [False] * len(s)
    sign = 1
    for i in range(len(s)):
        if seen[i]:
            continue
        j, ln = s[i], 1
        seen[i] = True
        while j != i:
            seen[j] = True
            j = s[j]
            ln += 1
        if ln % 2 == 0:
            sign = -sign
    return sign


@pytest.mark.parametrize("n", [2, 3])
@pytest.mark.parametrize("k,l", [(0, 0), (1, 0), (-1, 2)])
def test_eta_eps_agree_with_tensor_traces(n, k, l):
    gamma = ClassFunctionRS.character(Z2, 1)
    for x in wreath_elements(n):
        rho = wr_type(x)
        assert eta_value(Z2, gamma, k, l, rho) == brute_eta(1, k, l, x, n)
        assert eps_value(Z2, gamma, k, l, rho) == brute_eta(1, k, l, x, n, sign=True)


def test_eps_of_trivial_is_permutation_sign():
    triv = ClassFunctionRS.character(Z1, 0)
    assert eps_value(Z1, triv, 0, 0, WreathType.make([(0, (1, 1))])) == RSLaurent.one()
    assert eps_value(Z1, triv, 0, 0, WreathType.make([(0, (2,))])) == RSLaurent.monomial(-1)


def test_eta_twist_factor():
    gamma = ClassFunctionRS.character(Z3, 1)
    rho = WreathType.make([(1, (2, 1))])
    base = eta_value(Z3, gamma, 0, 0, rho)
    assert eta_value(Z3, gamma, 2, -1, rho) == base * rs_monomial(1, 2 * 3 * 2, -2 * 3)


def test_eta_multiplicative_over_juxtaposition():
    gamma = ClassFunctionRS.character(Z2, 1)
    r1 = WreathType.make([(0, (2,)), (1, (1,))])
    r2 = WreathType.make([(1, (3, 1))])
    merged = WreathType.make([(0, (2,)), (1, (3, 1, 1))])
    lhs = eta_value(Z2, gamma, 0, 0, merged)
    assert lhs == eta_value(Z2, gamma, 0, 0, r1) * eta_value(Z2, gamma, 0, 0, r2)


def test_sigma_values():
    s1 = sigma_class(Z1, 0, 1)
    assert s1.value(WreathType.make([(0, (1,))])) == RSLaurent.one()
    rho = WreathType.make([(0, (2,)), (1, (1,))])
    srho = sigma_rho(Z2, rho)
    assert srho.value(rho) == RSLaurent.monomial(centralizer_order(Z2, rho))
    assert srho.value(WreathType.make([(0, (3,))])) == RSLaurent.zero()
    # sigma_2(c^1 (x) r) on Z/2: value 2*2*r^{-2} on the 2-cycle over c^1
    s2 = sigma_class(Z2, 1, 2, k=1, l=0)
    assert s2.value(WreathType.make([(1, (2,))])) == rs_monomial(4, -4, 0)
    with pytest.raises(ValueError):
        sigma_fn(Z2, ("class", 0), 0)


def test_wreath_form_reduces_to_weighted_form_at_n1():
    xi = mckay_weight(Z3)
    for i in range(3):
        for j in range(3):
            fw = WreathClassFn_from_char(Z3, i, 2, 1)
            gw = WreathClassFn_from_char(Z3, j, -1, 0)
            f1 = ClassFunctionRS.character(Z3, i, rs_monomial(1, 4, 2))
            g1 = ClassFunctionRS.character(Z3, j, rs_monomial(1, -2, 0))
            assert wreath_form(fw, gw, xi) == weighted_form(f1, g1, xi)


def WreathClassFn_from_char(table, i, k, l):
    from qmckay.wreath_chars import WreathClassFunction

    vals = {}
    for c in range(table.n_classes):
        v = rs_monomial(1, 2 * k, 2 * l) * table.chars[i][c]
        if v:
            vals[WreathType.make([(c, (1,))])] = v
    return WreathClassFunction(table, 1, vals)


@pytest.mark.parametrize("table", [Z1, Z2, Z3], ids=lambda t: t.name)
@pytest.mark.parametrize("n", [1, 2, 3])
def test_sigma_gram_matrix(table, n):
    """<sigma_rho, sigma_rho'> = delta_{rho', rho-bar} Z_rho eta_n(xi)(rho)."""
    xi = mckay_weight(table)
    types = enumerate_types(table, n)
    for r1 in types:
        for r2 in types:
            got = wreath_form(sigma_rho(table, r1), sigma_rho(table, r2), xi)
            if r2 == r1.bar(table):
                want = eta_weight_value(table, xi, r1) * centralizer_order(table, r1)
            else:
                want = RSLaurent.zero()
            assert got == want


def test_sigma_gram_trivial_weight_gives_centralizer():
    xi = trivial_weight(Z2)
    for rho in enumerate_types(Z2, 3):
        got = wreath_form(sigma_rho(Z2, rho), sigma_rho(Z2, rho.bar(Z2)), xi)
        assert got == RSLaurent.monomial(centralizer_order(Z2, rho))


def test_eta_weight_self_dual():
    xi = mckay_weight(Z3)
    for rho in enumerate_types(Z3, 3):
        lhs = eta_weight_value(Z3, xi, rho.bar(Z3)).invert_vars()
        assert lhs == eta_weight_value(Z3, xi, rho)
