"""Partition-valued types for wreath products and their class functions.

Conjugacy classes of the wreath product of a finite group with S_n are
indexed by assignments of partitions to the conjugacy classes of the
base group, with total weight n.  This module enumerates those types,
computes centralizer orders, evaluates the tensor-power and sign-twisted
characters on them, builds the distinguished delta-type class functions,
and computes the weighted bilinear form on weight-n class functions.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .exact_ring import RSLaurent, rs_monomial
from .group_data import CharacterTable, ClassFunctionRS
from .mckay_form import WeightFunction


@lru_cache(maxsize=None)
def partitions(n: int):
    """All partitions of n as weakly decreasing tuples, reverse-lex order."""
    if n == 0:
        return ((),)
    out = []

    def rec(remaining, maxpart, prefix):
        if remaining == 0:
            out.append(tuple(prefix))
            return
        for p in range(min(remaining, maxpart), 0, -1):
            rec(remaining - p, p, prefix + [p])

    rec(n, n, [])
    return tuple(out)


def z_lambda(lam) -> int:
    """Centralizer order of a cycle type in the symmetric group."""
    mult = {}
    for part in lam:
        mult[part] = mult.get(part, 0) + 1
    z = 1
    for i, m in mult.items():
        z *= i ** m * math.factorial(m)
    return z


@dataclass(frozen=True)
class WreathType:
    """A partition-valued function on the classes of the base group.

    Only classes with a nonempty partition are stored; `parts` is sorted
    by class index so types are canonical and hashable.
    """

    parts: tuple  # ((class_idx, partition-tuple), ...)

    @staticmethod
    def make(assign) -> "WreathType":
        items = tuple(
            sorted((c, tuple(lam)) for c, lam in assign if len(tuple(lam)) > 0)
        )
        return WreathType(items)

    @property
    def weight(self) -> int:
        return sum(sum(lam) for _, lam in self.parts)

    def partition_at(self, c: int):
        for ci, lam in self.parts:
            if ci == c:
                return lam
        return ()

    def total_length(self) -> int:
        return sum(len(lam) for _, lam in self.parts)

    def multiplicities(self):
        """Iterate (class_idx, part_size, multiplicity)."""
        for c, lam in self.parts:
            mult = {}
            for p in lam:
                mult[p] = mult.get(p, 0) + 1
            for p, m in sorted(mult.items()):
                yield c, p, m

    def bar(self, table: CharacterTable) -> "WreathType":
        """Type of the inverse class: partition at c moves to c^{-1}."""
        return WreathType.make(
            (table.inverse_class(c), lam) for c, lam in self.parts
        )

    def sort_key(self):
        return self.parts

    def label(self, table: CharacterTable) -> str:
        if not self.parts:
            return "[]"
        return ";".join(
            f"{table.classes[c].id}:{list(lam)}" for c, lam in self.parts
        )


def enumerate_types(table: CharacterTable, n: int):
    """All weight-n types over the classes of the table, canonical order."""
    n_cls = table.n_classes
    out = []

    def rec(cidx, remaining, acc):
        if cidx == n_cls - 1:
            for lam in partitions(remaining):
                out.append(WreathType.make(acc + [(cidx, lam)]))
            return
        for w in range(remaining, -1, -1):
            for lam in partitions(w):
                rec(cidx + 1, remaining - w, acc + [(cidx, lam)])

    rec(0, n, [])
    return sorted(out, key=WreathType.sort_key)


def centralizer_order(table: CharacterTable, rho: WreathType) -> int:
    z = 1
    for c, lam in rho.parts:
        z *= z_lambda(lam) * table.centralizer(c) ** len(lam)
    return z


def eta_value(table, gamma: ClassFunctionRS, k: int, l: int, rho: WreathType) -> RSLaurent:
    """Tensor-power character value: prod_c gamma(c)^{l(rho(c))} r^{nk} s^{nl}."""
    n = rho.weight
    acc = rs_monomial(1, 2 * n * k, 2 * n * l)
    for c, lam in rho.parts:
        acc = acc * gamma.evaluate(c) ** len(lam)
    return acc


def eps_value(table, gamma: ClassFunctionRS, k: int, l: int, rho: WreathType) -> RSLaurent:
    """Sign-twisted tensor-power value: (-1)^n prod_c (-gamma(c))^{l(rho(c))} r^{nk} s^{nl}."""
    n = rho.weight
    sign = (-1) ** (n + rho.total_length())
    return eta_value(table, gamma, k, l, rho) * sign


def eta_weight_value(table, xi: WeightFunction, rho: WreathType) -> RSLaurent:
    """prod_c prod_i xi_{(r^i, s^i)}(c)^{m_i(rho(c))} (level-twisted weight)."""
    acc = RSLaurent.one()
    for c, p, m in rho.multiplicities():
        acc = acc * xi.value_level(c, p) ** m
    return acc


class WreathClassFunction:
    """Sparse weight-n class function on types, with Laurent values."""

    __slots__ = ("table", "n", "values")

    def __init__(self, table: CharacterTable, n: int, values=None):
        self.table = table
        self.n = n
        self.values = {}
        if values:
            for rho, v in values.items():
                if rho.weight != n:
                    raise ValueError("type weight does not match the component degree")
                if v:
                    self.values[rho] = v

    def value(self, rho: WreathType) -> RSLaurent:
        return self.values.get(rho, RSLaurent.zero())

    def antipode_value(self, rho: WreathType) -> RSLaurent:
        """S(f)(rho) = f(rho-bar) with inverted Laurent exponents."""
        return self.value(rho.bar(self.table)).invert_vars()

    def __add__(self, other):
        assert self.table is other.table and self.n == other.n
        vals = dict(self.values)
        for rho, v in other.values.items():
            w = vals.get(rho, RSLaurent.zero()) + v
            if w:
                vals[rho] = w
            elif rho in vals:
                del vals[rho]
        return WreathClassFunction(self.table, self.n, vals)

    def scale(self, factor: RSLaurent):
        return WreathClassFunction(
            self.table, self.n, {rho: factor * v for rho, v in self.values.items()}
        )

    def __eq__(self, other):
        return (
            isinstance(other, WreathClassFunction)
            and self.table is other.table
            and self.n == other.n
            and set(self.values) == set(other.values)
            and all(self.values[k] == other.values[k] for k in self.values)
        )

    __hash__ = None


def sigma_class(table, c: int, n: int, k: int = 0, l: int = 0) -> WreathClassFunction:
    """Class function supported on the n-cycle type over class c with value
    n * zeta_c * r^{-nk} s^{-nl}."""
    if n <= 0:
        raise ValueError("sigma_n needs n >= 1")
    rho = WreathType.make([(c, (n,))])
    val = rs_monomial(n * table.centralizer(c), -2 * n * k, -2 * n * l)
    return WreathClassFunction(table, n, {rho: val})


def sigma_char(table, i: int, n: int, k: int = 0, l: int = 0) -> WreathClassFunction:
    """Character version: value n * g_i(c) * r^{-nk} s^{-nl} on each n-cycle type."""
    if n <= 0:
        raise ValueError("sigma_n needs n >= 1")
    vals = {}
    for c in range(table.n_classes):
        v = rs_monomial(n, -2 * n * k, -2 * n * l) * table.chars[i][c]
        if v:
            vals[WreathType.make([(c, (n,))])] = v
    return WreathClassFunction(table, n, vals)


def sigma_rho(table, rho: WreathType, k: int = 0, l: int = 0) -> WreathClassFunction:
    """Product class function: value Z_rho r^{-nk} s^{-nl} at rho, 0 elsewhere."""
    n = rho.weight
    val = rs_monomial(centralizer_order(table, rho), -2 * n * k, -2 * n * l)
    return WreathClassFunction(table, n, {rho: val})


def sigma_fn(table, target, n: int, k: int = 0, l: int = 0) -> WreathClassFunction:
    """Dispatch on ('class', c) / ('char', i) targets."""
    kind, idx = target
    if kind == "class":
        return sigma_class(table, idx, n, k, l)
    if kind == "char":
        return sigma_char(table, idx, n, k, l)
    raise ValueError(f"unknown sigma target {target!r}")


def wreath_form(
    f: WreathClassFunction, g: WreathClassFunction, xi: WeightFunction
) -> RSLaurent:
    """<f, g>_{xi, n} = sum_rho Z_rho^{-1} eta_n(xi)(rho) f(rho) S(g)(rho)."""
    if f.table is not g.table or f.n != g.n:
        raise ValueError("mismatched wreath class functions")
    table = f.table
    acc = RSLaurent.zero()
    support = set(f.values) | {rho.bar(table) for rho in g.values}
    for rho in support:
        fv = f.value(rho)
        gv = g.antipode_value(rho)
        if not fv or not gv:
            continue
        weight = eta_weight_value(table, xi, rho)
        acc = acc + fv * gv * weight * Fraction(1, centralizer_order(table, rho))
    return acc
