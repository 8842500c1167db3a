"""The symmetric algebra on Heisenberg generators with its weighted action.

Vectors are finite linear combinations of keys (monomial, beta):

* monomial: a sorted tuple of (n, i) pairs, one per factor a_{-n}(g_i),
  n >= 1, in the irreducible-character alphabet;
* beta: an integer vector over character indices, the group-algebra part
  e^beta of the lattice extension (all zeros when unused).

Annihilation acts by contraction: a_m picks out factors a_{-m} with
coefficient m times the level-m weighted pairing of the two characters,
where level m substitutes r -> r^m, s -> s^m throughout the symbolic
level-1 pairing.  The central element acts as 1.

The bilinear form is computed in annihilation normal form (adjoint
a_n <-> a_{-n}, Laurent coefficients of the second slot inverted, lattice
part diagonal), so the closed product formula for the Gram matrix of the
class-indexed basis stays available as an independent oracle in the tests.
"""

from __future__ import annotations

import itertools
from fractions import Fraction

from .exact_ring import CycScalar, RSLaurent, rs_monomial
from .group_data import CharacterTable, ClassFunctionRS
from .mckay_form import WeightFunction, pair_characters


class FockSpace:
    """Carrier for basis bookkeeping, pairings and memo caches."""

    def __init__(self, table: CharacterTable, xi: WeightFunction, indices=None):
        if xi.table is not table:
            raise ValueError("weight defined over a different table")
        self.table = table
        self.xi = xi
        self.indices = tuple(indices) if indices is not None else tuple(range(table.n_chars))
        n = table.n_chars
        self.pairing = tuple(
            tuple(pair_characters(table, xi.base, i, j) for j in range(n))
            for i in range(n)
        )
        one = CycScalar.one()
        cart = []
        for i in range(n):
            row = []
            for j in range(n):
                v = self.pairing[i][j].specialize(
                    1, 1, sqrt1=one, sqrt2=one, kappa=one, sqrt_kappa=one
                )
                if not v.is_rational() or v.as_rational().denominator != 1:
                    raise ValueError("lattice pairing is not integral at r=s=1")
                row.append(int(v.as_rational()))
            cart.append(tuple(row))
        self.cartan1 = tuple(cart)
        self._levels = {1: self.pairing}
        self._gram = {((), ()): RSLaurent.one()}

    # -- pairings -------------------------------------------------------------

    def pairing_level(self, m: int):
        lv = self._levels.get(m)
        if lv is None:
            lv = tuple(
                tuple(e.substitute(m) for e in row) for row in self.pairing
            )
            self._levels[m] = lv
        return lv

    def lattice_pairing(self, alpha, beta) -> int:
        acc = 0
        for i, a in enumerate(alpha):
            if a:
                row = self.cartan1[i]
                for j, b in enumerate(beta):
                    if b:
                        acc += a * row[j] * b
        return acc

    def zero_beta(self):
        return (0,) * self.table.n_chars

    def degree(self, key) -> Fraction:
        heis, beta = key
        d = sum(n for n, _ in heis)
        return Fraction(d) + Fraction(self.lattice_pairing(beta, beta), 2)

    # -- basis enumeration ------------------------------------------------------

    def heis_monomials(self, max_weight: int):
        """All creation monomials of weight <= max_weight over the allowed
        character alphabet, canonical order."""
        singles = [(n, i) for n in range(1, max_weight + 1) for i in self.indices]
        out = [()]
        frontier = [((), 0)]
        while frontier:
            mono, w = frontier.pop()
            for f in singles:
                if mono and f < mono[-1]:
                    continue
                if w + f[0] > max_weight:
                    continue
                nxt = mono + (f,)
                out.append(nxt)
                frontier.append((nxt, w + f[0]))
        return sorted(set(out))

    def lattice_ball(self, radius: int):
        """Lattice vectors with 1-norm <= radius supported on allowed indices."""
        n = self.table.n_chars
        coords = []
        for vals in itertools.product(range(-radius, radius + 1), repeat=len(self.indices)):
            if sum(abs(v) for v in vals) <= radius:
                beta = [0] * n
                for idx, v in zip(self.indices, vals):
                    beta[idx] = v
                coords.append(tuple(beta))
        return sorted(coords)

    def basis_keys(self, max_degree: int, ball: int = 0):
        keys = []
        betas = self.lattice_ball(ball) if ball else [self.zero_beta()]
        for mono in self.heis_monomials(max_degree):
            w = sum(n for n, _ in mono)
            for beta in betas:
                if w + Fraction(self.lattice_pairing(beta, beta), 2) <= max_degree:
                    keys.append((mono, beta))
        return sorted(keys)

    # -- the Gram matrix of creation monomials ----------------------------------

    def gram(self, u, v) -> RSLaurent:
        """<prod a_{-n}(g_i) vac, prod a_{-m}(g_j) vac> by full contraction."""
        key = (u, v)
        got = self._gram.get(key)
        if got is not None:
            return got
        if len(u) != len(v):
            self._gram[key] = RSLaurent.zero()
            return self._gram[key]
        if not u:
            return RSLaurent.one()
        (n, i), rest = u[0], u[1:]
        acc = RSLaurent.zero()
        level = self.pairing_level(n)
        for p, (m, j) in enumerate(v):
            if m == n:
                sub = self.gram(rest, v[:p] + v[p + 1:])
                if sub:
                    acc = acc + level[i][j] * sub * n
        self._gram[key] = acc
        return acc


class FockVector:
    """Finite RSLaurent combination of basis keys."""

    __slots__ = ("space", "terms")

    def __init__(self, space: FockSpace, terms=None):
        self.space = space
        self.terms = {}
        if terms:
            for k, v in terms.items():
                if v:
                    self.terms[k] = v

    @staticmethod
    def vacuum(space, beta=None):
        b = tuple(beta) if beta is not None else space.zero_beta()
        return FockVector(space, {((), b): RSLaurent.one()})

    def __add__(self, other):
        assert self.space is other.space
        out = dict(self.terms)
        for k, v in other.terms.items():
            cur = out.get(k)
            w = v if cur is None else cur + v
            if w:
                out[k] = w
            elif k in out:
                del out[k]
        return FockVector(self.space, out)

    def __sub__(self, other):
        return self + other.scale(RSLaurent.monomial(-1))

    def scale(self, factor) -> "FockVector":
        if isinstance(factor, (int, Fraction, CycScalar)):
            factor = RSLaurent.monomial(factor)
        if not factor:
            return FockVector(self.space)
        return FockVector(
            self.space, {k: factor * v for k, v in self.terms.items()}
        )

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        return (
            isinstance(other, FockVector)
            and self.space is other.space
            and set(self.terms) == set(other.terms)
            and all(self.terms[k] == other.terms[k] for k in self.terms)
        )

    __hash__ = None

    def coefficient(self, key) -> RSLaurent:
        return self.terms.get(key, RSLaurent.zero())

    def max_degree(self):
        return max((self.space.degree(k) for k in self.terms), default=Fraction(0))

    def __repr__(self):
        bits = []
        for k in sorted(self.terms)[:6]:
            bits.append(f"{k}: {self.terms[k].to_text()}")
        more = "..." if len(self.terms) > 6 else ""
        return "FockVector{" + "; ".join(bits) + more + "}"

    def to_json(self):
        out = []
        for (mono, beta), coef in sorted(self.terms.items()):
            rho = {}
            for n, i in mono:
                rho.setdefault(str(i), []).append(n)
            rho = {i: sorted(parts, reverse=True) for i, parts in rho.items()}
            out.append({"rho": rho, "beta": list(beta), "coeff": coef.to_text()})
        return out


# ---------------------------------------------------------------------------
# generator action


def _insert_sorted(mono, factor):
    out = list(mono)
    for p, f in enumerate(out):
        if factor <= f:
            out.insert(p, factor)
            break
    else:
        out.append(factor)
    return tuple(out)


def apply_create(space, n: int, i: int, vec: FockVector, twist: RSLaurent | None = None) -> FockVector:
    """Multiplication by a_{-n}(g_i), n >= 1."""
    out = {}
    for (mono, beta), coef in vec.terms.items():
        key = (_insert_sorted(mono, (n, i)), beta)
        cur = out.get(key)
        w = coef if cur is None else cur + coef
        if w:
            out[key] = w
        elif key in out:
            del out[key]
    res = FockVector(space, out)
    return res.scale(twist) if twist is not None else res


def apply_annihilate(space, n: int, i: int, vec: FockVector) -> FockVector:
    """Contraction by a_n(g_i), n >= 1: factors a_{-n}(g_j) are removed with
    coefficient n times the level-n pairing <g_i, g_j>."""
    level = space.pairing_level(n)
    out = FockVector(space)
    acc = {}
    for (mono, beta), coef in vec.terms.items():
        seen = set()
        for p, (m, j) in enumerate(mono):
            if m != n or (m, j) in seen:
                continue
            seen.add((m, j))
            count = sum(1 for f in mono if f == (m, j))
            pairing = level[i][j]
            if not pairing:
                continue
            weight = coef * pairing * (n * count)
            key = (mono[:p] + mono[p + 1:], beta)
            cur = acc.get(key)
            w = weight if cur is None else cur + weight
            if w:
                acc[key] = w
            elif key in acc:
                del acc[key]
    out = FockVector(space, acc)
    return out


def heis_apply(space, n: int, gamma, vec: FockVector) -> FockVector:
    """Action of a_n(gamma); gamma is a character index or a ClassFunctionRS.

    Negative n creates, positive n annihilates, n = 0 is rejected.  For a
    general class function the Laurent coefficients are substituted at
    level n before weighting the plain-character generators.
    """
    if n == 0:
        raise ValueError("mode 0 is not a Heisenberg generator")
    if isinstance(gamma, int):
        weights = [(gamma, RSLaurent.one())]
    else:
        weights = [
            (i, c.substitute(n)) for i, c in enumerate(gamma.coeffs) if c
        ]
    acc = FockVector(space)
    for i, w in weights:
        if n < 0:
            acc = acc + apply_create(space, -n, i, vec, twist=w)
        else:
            acc = acc + apply_annihilate(space, n, i, vec).scale(w)
    return acc


def class_function_for_class(table: CharacterTable, c: int) -> ClassFunctionRS:
    """The class delta at c expanded over characters: a_m(c) expansion weights.

    a_m(c) = sum_i g_i(c^{-1}) a_m(g_i); the coefficients are level-independent
    because character values carry no Laurent part.
    """
    coeffs = [
        RSLaurent.monomial(table.chars[i][table.inverse_class(c)])
        for i in range(table.n_chars)
    ]
    return ClassFunctionRS(table, coeffs)


def heis_apply_class(space, n: int, c: int, vec: FockVector) -> FockVector:
    return heis_apply(space, n, class_function_for_class(space.table, c), vec)


def char_gen_as_class_combo(table, i: int) -> list:
    """a_m(g_i) = sum_c zeta_c^{-1} g_i(c) a_m(c): the inverse alphabet change."""
    return [
        (c, CycScalar.from_rational(Fraction(1, table.centralizer(c))) * table.chars[i][c])
        for c in range(table.n_classes)
    ]


def aprime_monomial(space, rho, k: int = 0, l: int = 0) -> FockVector:
    """a'_{-rho (x) r^k s^l} = r^{-k n} s^{-l n} prod_c a_{-rho(c)}(c) applied
    to the vacuum, expanded in the character alphabet."""
    n = rho.weight
    vec = FockVector.vacuum(space)
    for c, lam in rho.parts:
        for part in lam:
            vec = heis_apply_class(space, -part, c, vec)
    return vec.scale(rs_monomial(1, -2 * k * n, -2 * l * n))


def fock_form(u: FockVector, v: FockVector) -> RSLaurent:
    """<u, v>: adjoint-normal-form contraction; Laurent coefficients of the
    second slot are inverted, the lattice part pairs diagonally."""
    space = u.space
    assert v.space is space
    acc = RSLaurent.zero()
    for (mu, bu), cu in u.terms.items():
        for (mv, bv), cv in v.terms.items():
            if bu != bv:
                continue
            g = space.gram(mu, mv)
            if g:
                acc = acc + cu * cv.invert_vars() * g
    return acc


# ---------------------------------------------------------------------------
# relation reports


def heis_commutator_check(space, m: int, n: int, x, y, max_degree: int):
    """Verify [a_m(x), a_n(y)] = m delta_{m,-n} <pairing> on all Heisenberg
    basis vectors of degree <= max_degree.

    x, y are ('char', i) or ('class', c) tags.  Returns (passed, witness).
    """
    table = space.table

    def act(mode, tag, vec):
        kind, idx = tag
        if kind == "char":
            return heis_apply(space, mode, idx, vec)
        return heis_apply_class(space, mode, idx, vec)

    if m + n != 0:
        expected = RSLaurent.zero()
    else:
        kx, ix = x
        ky, iy = y
        if kx == "char" and ky == "char":
            expected = space.pairing_level(m)[ix][iy] * m
        elif kx == "class" and ky == "class":
            if table.inverse_class(ix) == iy:
                expected = space.xi.value_level(ix, m) * (m * table.centralizer(ix))
            else:
                expected = RSLaurent.zero()
        else:
            # mixed alphabets: expand the class side
            if kx == "class":
                f = class_function_for_class(table, ix)
                expected = RSLaurent.zero()
                for i, c in enumerate(f.coeffs):
                    if c:
                        expected = expected + c.substitute(m) * space.pairing_level(m)[i][iy] * m
            else:
                g = class_function_for_class(table, iy)
                expected = RSLaurent.zero()
                for j, c in enumerate(g.coeffs):
                    if c:
                        expected = expected + c.substitute(n) * space.pairing_level(m)[ix][j] * m

    for key in space.basis_keys(max_degree):
        vec = FockVector(space, {key: RSLaurent.one()})
        lhs = act(m, x, act(n, y, vec)) - act(n, y, act(m, x, vec))
        rhs = vec.scale(expected)
        if lhs != rhs:
            return False, key
    return True, None
