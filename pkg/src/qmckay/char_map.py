"""The characteristic map between wreath class functions and the Fock space.

ch sends a weight-n class function f to sum_rho Z_rho^{-1} f(rho) a'_{-rho},
expanded from the class-indexed generator alphabet into the character
alphabet.  Its inverse reads coefficients back off the class alphabet, so
the wreath-ring product can be realized on the Fock side and pulled back.
The generating-function evaluations of the tensor-power and sign-twisted
characters land in the same space and are compared against the pointwise
values in the tests and in `verify_isometry` / `verify_hopf` reports.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .exact_ring import CycScalar, RSLaurent, rs_monomial
from .fock_heisenberg import (
    FockSpace,
    FockVector,
    aprime_monomial,
    fock_form,
    heis_apply,
)
from .group_data import ClassFunctionRS
from .mckay_form import WeightFunction, mckay_weight, trivial_weight
from .wreath_chars import (
    WreathClassFunction,
    WreathType,
    centralizer_order,
    enumerate_types,
    eta_value,
    eps_value,
    partitions,
    sigma_rho,
    wreath_form,
    z_lambda,
)


def ch(f: WreathClassFunction, space: FockSpace) -> FockVector:
    """ch(f) = sum_rho Z_rho^{-1} f(rho) a'_{-rho}."""
    if space.table is not f.table:
        raise ValueError("class function and space use different tables")
    acc = FockVector(space)
    for rho, val in f.values.items():
        z = centralizer_order(f.table, rho)
        acc = acc + aprime_monomial(space, rho).scale(val * Fraction(1, z))
    return acc


def _to_class_alphabet(space: FockSpace, vec: FockVector):
    """Rewrite a lattice-free vector in the class-indexed generator alphabet.

    Inverts a_{-n}(c) = sum_i g_i(c^{-1}) a_{-n}(g_i) using
    a_{-n}(g_i) = sum_c zeta_c^{-1} g_i(c) a_{-n}(c).
    """
    table = space.table
    out = {}
    for (mono, beta), coef in vec.terms.items():
        if any(beta):
            raise ValueError("class-alphabet conversion expects a trivial lattice part")
        expansions = [()]
        weights = [coef]
        for n, i in mono:
            new_exp, new_w = [], []
            for mono2, w in zip(expansions, weights):
                for c in range(table.n_classes):
                    cw = table.chars[i][c] * Fraction(1, table.centralizer(c))
                    new_exp.append(mono2 + ((n, c),))
                    new_w.append(w * cw)
            expansions, weights = new_exp, new_w
        for mono2, w in zip(expansions, weights):
            if not w:
                continue
            key = tuple(sorted(mono2))
            cur = out.get(key)
            tot = w if cur is None else cur + w
            if tot:
                out[key] = tot
            elif key in out:
                del out[key]
    return out


def _type_from_class_monomial(mono) -> WreathType:
    parts = {}
    for n, c in mono:
        parts.setdefault(c, []).append(n)
    return WreathType.make(
        (c, tuple(sorted(lams, reverse=True))) for c, lams in parts.items()
    )


def ch_inverse(space: FockSpace, vec: FockVector, n: int) -> WreathClassFunction:
    """Pull a weight-n lattice-free vector back to a wreath class function."""
    table = space.table
    values = {}
    for mono, coef in _to_class_alphabet(space, vec).items():
        if sum(m for m, _ in mono) != n:
            raise ValueError("vector is not homogeneous of the requested weight")
        rho = _type_from_class_monomial(mono)
        values[rho] = coef * centralizer_order(table, rho)
    return WreathClassFunction(table, n, values)


def fock_mul(u: FockVector, v: FockVector) -> FockVector:
    """Symmetric-algebra product on lattice-free vectors."""
    space = u.space
    out = FockVector(space)
    acc = {}
    for (m1, b1), c1 in u.terms.items():
        for (m2, b2), c2 in v.terms.items():
            if any(b1) or any(b2):
                raise ValueError("use the lattice layer for vectors with e^beta parts")
            key = (tuple(sorted(m1 + m2)), b1)
            w = c1 * c2
            cur = acc.get(key)
            tot = w if cur is None else cur + w
            if tot:
                acc[key] = tot
            elif key in acc:
                del acc[key]
    return FockVector(space, acc)


def wreath_product_via_fock(
    f: WreathClassFunction, g: WreathClassFunction, space: FockSpace
) -> WreathClassFunction:
    """The induction product realized on the Fock side and pulled back."""
    prod = fock_mul(ch(f, space), ch(g, space))
    return ch_inverse(space, prod, f.n + g.n)


# ---------------------------------------------------------------------------
# generating functions


def ch_eta(space: FockSpace, gamma: ClassFunctionRS, k: int, l: int, n: int) -> FockVector:
    """z^n coefficient of exp(sum_m a_{-m}(gamma) (r^{-k} s^{-l} z)^m / m)."""
    acc = FockVector(space)
    vac = FockVector.vacuum(space)
    for lam in partitions(n):
        term = vac
        for part in lam:
            term = heis_apply(space, -part, gamma, term)
        acc = acc + term.scale(Fraction(1, z_lambda(lam)))
    return acc.scale(rs_monomial(1, -2 * k * n, -2 * l * n))


def ch_eps(space: FockSpace, gamma: ClassFunctionRS, k: int, l: int, n: int) -> FockVector:
    """Same with alternating signs (-1)^{m-1} inside the exponential."""
    acc = FockVector(space)
    vac = FockVector.vacuum(space)
    for lam in partitions(n):
        term = vac
        for part in lam:
            term = heis_apply(space, -part, gamma, term)
        sign = (-1) ** (n - len(lam))
        acc = acc + term.scale(Fraction(sign, z_lambda(lam)))
    return acc.scale(rs_monomial(1, -2 * k * n, -2 * l * n))


def eta_class_function(
    table, gamma: ClassFunctionRS, k: int, l: int, n: int
) -> WreathClassFunction:
    """Pointwise eta_n(gamma (x) r^k s^l) as a wreath class function."""
    vals = {}
    for rho in enumerate_types(table, n):
        v = eta_value(table, gamma, k, l, rho)
        if v:
            vals[rho] = v
    return WreathClassFunction(table, n, vals)


def eps_class_function(
    table, gamma: ClassFunctionRS, k: int, l: int, n: int
) -> WreathClassFunction:
    vals = {}
    for rho in enumerate_types(table, n):
        v = eps_value(table, gamma, k, l, rho)
        if v:
            vals[rho] = v
    return WreathClassFunction(table, n, vals)


# ---------------------------------------------------------------------------
# reports


@dataclass(frozen=True)
class ChReport:
    group: str
    n: int
    statement: str
    passed: bool
    witness: str = ""

    def to_json(self):
        return {
            "group": self.group,
            "n": self.n,
            "identity": self.statement,
            "pass": self.passed,
            "witness": self.witness,
        }


def verify_isometry(table, xi: WeightFunction, n: int, twists=None) -> ChReport:
    """Wreath-side and Fock-side pairings of twisted sigma functions agree."""
    space = FockSpace(table, xi)
    if twists is None:
        twists = [(0, 0), (1, 0), (0, -1)]
    types = enumerate_types(table, n)
    for r1 in types:
        for r2 in types:
            for t1 in twists:
                for t2 in twists:
                    f = sigma_rho(table, r1, *t1)
                    g = sigma_rho(table, r2, *t2)
                    lhs = wreath_form(f, g, xi)
                    rhs = fock_form(ch(f, space), ch(g, space))
                    if lhs != rhs:
                        return ChReport(
                            table.name,
                            n,
                            "wreath and Fock pairings of sigma functions agree",
                            False,
                            f"rho={r1.label(table)} rho'={r2.label(table)} twists={t1},{t2}",
                        )
    return ChReport(
        table.name, n, "wreath and Fock pairings of sigma functions agree", True
    )


# -- Hopf structure on the Fock side -----------------------------------------


def _tensor_add(acc, key, val):
    cur = acc.get(key)
    tot = val if cur is None else cur + val
    if tot:
        acc[key] = tot
    elif key in acc:
        del acc[key]


def coproduct(space: FockSpace, vec: FockVector):
    """Delta on the symmetric algebra: generators are primitive over their
    Laurent twist, Laurent monomials are group-like.

    Returns a dict mapping key pairs to RSLaurent coefficients; a term
    c * m of a coefficient stands for the diagonal tensor c * (m (x) m),
    which is the only shape the group-like Laurent part can produce.
    """
    out = {}
    for (mono, beta), coef in vec.terms.items():
        for (a, b, k), scal in coef.t.items():
            monomial = RSLaurent.monomial(scal, a, b, k)
            splits = [((), ())]
            for f in mono:
                splits = [
                    (left + (f,), right) for left, right in splits
                ] + [(left, right + (f,)) for left, right in splits]
            for left, right in splits:
                key = (
                    (tuple(sorted(left)), beta),
                    (tuple(sorted(right)), beta),
                )
                _tensor_add(out, key, monomial)
    return out


def fock_antipode(space: FockSpace, vec: FockVector) -> FockVector:
    """S(a_{-n}(g (x) tw)) = -a_{-n}(g (x) tw^{-1}); S(e^beta) = e^{-beta}."""
    out = {}
    for (mono, beta), coef in vec.terms.items():
        sign = (-1) ** len(mono)
        key = (mono, tuple(-b for b in beta))
        _tensor_add(out, key, coef.invert_vars() * sign)
    return FockVector(space, out)


def fock_counit(space: FockSpace, vec: FockVector) -> CycScalar:
    """Counit: kills positive weight, sums the Laurent coefficients at 1."""
    acc = CycScalar.zero()
    for (mono, beta), coef in vec.terms.items():
        if mono or any(beta):
            continue
        for _, scal in coef.t.items():
            acc = acc + scal
    return acc


def verify_hopf(table, n: int) -> ChReport:
    """Coproduct/antipode/counit checks plus the pulled-back product.

    - primitive coproduct on twisted generators,
    - the antipode axiom m(S (x) id) Delta = unit . counit on one- and
      two-factor monomials,
    - the counit kills positive weight,
    - sigma functions multiply by type juxtaposition under the pullback.
    """
    xi = mckay_weight(table) if table.natural is not None else trivial_weight(table)
    space = FockSpace(table, xi)
    vac = FockVector.vacuum(space)

    # primitive coproduct on a twisted generator
    for i in range(min(2, table.n_chars)):
        gen = heis_apply(space, -2, i, vac).scale(rs_monomial(1, 2, -2))
        delta = coproduct(space, gen)
        vac_key = ((), space.zero_beta())
        gen_key = next(iter(heis_apply(space, -2, i, vac).terms))
        want = {
            (gen_key, vac_key): rs_monomial(1, 2, -2),
            (vac_key, gen_key): rs_monomial(1, 2, -2),
        }
        if delta != want:
            return ChReport(table.name, n, "primitive coproduct", False, f"generator {i}")

    # antipode axiom on small monomials
    samples = [heis_apply(space, -1, 0, vac).scale(rs_monomial(1, 2, 0))]
    if n >= 2:
        samples.append(
            heis_apply(space, -2, 0, heis_apply(space, -1, 0, vac)).scale(
                rs_monomial(1, 0, -2)
            )
        )
    for x in samples:
        acc = FockVector(space)
        for (k1, k2), diag in coproduct(space, x).items():
            for expo, scal in diag.t.items():
                mono = RSLaurent.monomial(1, *expo)
                left = fock_antipode(space, FockVector(space, {k1: mono}))
                right = FockVector(space, {k2: mono})
                acc = acc + fock_mul(left, right).scale(scal)
        expect = vac.scale(RSLaurent.monomial(fock_counit(space, x)))
        if acc != expect:
            return ChReport(table.name, n, "antipode axiom m(S x id)Delta = u eps", False)

    # counit kills positive weight
    if n >= 1:
        probe = ch(sigma_rho(table, enumerate_types(table, n)[0]), space)
        if not fock_counit(space, probe).is_zero():
            return ChReport(table.name, n, "counit kills positive weight", False)

    # group-like lattice coproduct
    e1 = FockVector.vacuum(space, beta=tuple([1] + [0] * (table.n_chars - 1)))
    delta = coproduct(space, e1)
    key = next(iter(e1.terms))
    if delta != {(key, key): RSLaurent.one()}:
        return ChReport(table.name, n, "group-like lattice coproduct", False)

    # product pullback: sigma_rho * sigma_rho' = sigma_{rho juxtaposed rho'}
    for n1 in range(1, n):
        n2 = n - n1
        for r1 in enumerate_types(table, n1)[:4]:
            for r2 in enumerate_types(table, n2)[:4]:
                merged_parts = {}
                for c, lam in r1.parts + r2.parts:
                    merged_parts.setdefault(c, []).extend(lam)
                merged = WreathType.make(
                    (c, tuple(sorted(v, reverse=True))) for c, v in merged_parts.items()
                )
                got = wreath_product_via_fock(
                    sigma_rho(table, r1), sigma_rho(table, r2), space
                )
                if got != sigma_rho(table, merged):
                    return ChReport(
                        table.name,
                        n,
                        "sigma product is type juxtaposition",
                        False,
                        f"{r1.label(table)} * {r2.label(table)}",
                    )

    return ChReport(table.name, n, "Hopf compatibility suite", True)
