"""Finite-group character tables and class functions with Laurent coefficients.

The catalogue covers the five families of finite subgroups of SU(2):
cyclic, binary dihedral, binary tetrahedral, binary octahedral and binary
icosahedral.  Tables are validated exactly (both orthogonality relations,
size bookkeeping, involutive inverse-class map) on construction, so a
typo in a catalogued table cannot survive `load_table`.

Character rows are ordered so that row 0 is the trivial character and the
McKay graph at r = s = 1 comes out in the standard affine ADE numbering
with node 0 the affine node.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction

from .exact_ring import CycScalar, RSLaurent


class TableError(ValueError):
    """A character-table document violates one of the defining identities."""


@dataclass(frozen=True)
class ClassData:
    id: str
    size: int
    centralizer: int
    inverse: int


class CharacterTable:
    """Conjugacy classes and irreducible characters of a finite group."""

    def __init__(self, name, order, classes, chars, trivial=0, natural=None):
        self.name = name
        self.order = order
        self.classes = tuple(classes)
        self.chars = tuple(tuple(row) for row in chars)
        self.trivial = trivial
        self.natural = natural
        self._validate()
        self.dims = tuple(int(row[0].as_rational()) for row in self.chars)
        self.dual = self._dual_permutation()

    # -- validation ----------------------------------------------------------

    def _validate(self):
        n_cls = len(self.classes)
        if len(self.chars) != n_cls:
            raise TableError(
                f"{self.name}: {len(self.chars)} characters for {n_cls} classes"
            )
        total = 0
        for k, cl in enumerate(self.classes):
            if cl.size * cl.centralizer != self.order:
                raise TableError(
                    f"{self.name}: class {cl.id}: size*centralizer = "
                    f"{cl.size * cl.centralizer} != |G| = {self.order}"
                )
            total += cl.size
        if total != self.order:
            raise TableError(f"{self.name}: class sizes sum to {total}, not {self.order}")
        for k, cl in enumerate(self.classes):
            if self.classes[cl.inverse].inverse != k:
                raise TableError(f"{self.name}: inverse-class map is not an involution at {cl.id}")
        if self.classes[0].size != 1 or self.classes[0].centralizer != self.order:
            raise TableError(f"{self.name}: class 0 is not the identity class")
        for c, val in enumerate(self.chars[self.trivial]):
            if val != CycScalar.one():
                raise TableError(f"{self.name}: trivial character is not 1 at class {c}")
        dims = []
        for i, row in enumerate(self.chars):
            d = row[0]
            if not (d.is_rational() and d.as_rational().denominator == 1 and d.as_rational() > 0):
                raise TableError(f"{self.name}: dimension of character {i} is not a positive integer")
            dims.append(int(d.as_rational()))
        if sum(d * d for d in dims) != self.order:
            raise TableError(f"{self.name}: sum of squared dimensions != |G|")
        # row orthogonality: sum_c zeta_c^{-1} g_i(c) g_j(c^{-1}) = delta_ij
        for i in range(len(self.chars)):
            for j in range(len(self.chars)):
                acc = CycScalar.zero()
                for c, cl in enumerate(self.classes):
                    acc = acc + Fraction(1, cl.centralizer) * (
                        self.chars[i][c] * self.chars[j][cl.inverse]
                    )
                want = CycScalar.one() if i == j else CycScalar.zero()
                if acc != want:
                    raise TableError(
                        f"{self.name}: row orthogonality fails at (i,j)=({i},{j})"
                    )
        # column orthogonality: sum_g g(c') g(c^{-1}) = delta_{c,c'} zeta_c
        for c in range(n_cls):
            for cp in range(n_cls):
                acc = CycScalar.zero()
                for row in self.chars:
                    acc = acc + row[cp] * row[self.classes[c].inverse]
                want = (
                    CycScalar.from_rational(self.classes[c].centralizer)
                    if c == cp
                    else CycScalar.zero()
                )
                if acc != want:
                    raise TableError(
                        f"{self.name}: column orthogonality fails at (c,c')=({c},{cp})"
                    )

    def _dual_permutation(self):
        perm = []
        for i, row in enumerate(self.chars):
            target = tuple(row[cl.inverse] for cl in self.classes)
            for j, other in enumerate(self.chars):
                if other == target:
                    perm.append(j)
                    break
            else:
                raise TableError(f"{self.name}: no dual character for row {i}")
        return tuple(perm)

    # -- accessors -----------------------------------------------------------

    @property
    def n_classes(self) -> int:
        return len(self.classes)

    @property
    def n_chars(self) -> int:
        return len(self.chars)

    def inverse_class(self, c: int) -> int:
        return self.classes[c].inverse

    def centralizer(self, c: int) -> int:
        return self.classes[c].centralizer

    def natural_values(self):
        """Class values of the SU(2) embedding character."""
        if self.natural is None:
            raise TableError(f"{self.name}: table has no natural (embedding) character")
        if isinstance(self.natural, int):
            return list(self.chars[self.natural])
        a, b = self.natural
        return [self.chars[a][c] + self.chars[b][c] for c in range(self.n_classes)]

    def __repr__(self):
        return f"CharacterTable({self.name}, order={self.order}, classes={self.n_classes})"

    # -- document form -------------------------------------------------------

    def to_doc(self) -> dict:
        return {
            "name": self.name,
            "order": self.order,
            "classes": [
                {"id": c.id, "size": c.size, "centralizer": c.centralizer, "inverse": c.inverse}
                for c in self.classes
            ],
            "characters": [[v.to_text() for v in row] for row in self.chars],
            "trivial": self.trivial,
            "natural": list(self.natural) if isinstance(self.natural, tuple) else self.natural,
        }


def load_table(doc) -> CharacterTable:
    """Build and validate a table from a JSON document (dict or text)."""
    if isinstance(doc, str):
        doc = json.loads(doc)
    classes = [
        ClassData(str(c["id"]), int(c["size"]), int(c["centralizer"]), int(c["inverse"]))
        for c in doc["classes"]
    ]
    chars = [[CycScalar.parse(v) for v in row] for row in doc["characters"]]
    natural = doc.get("natural")
    if isinstance(natural, list):
        natural = tuple(natural)
    return CharacterTable(
        doc["name"], int(doc["order"]), classes, chars, int(doc.get("trivial", 0)), natural
    )


# ---------------------------------------------------------------------------
# the catalogue


def _cyclic_table(n: int) -> CharacterTable:
    classes = [ClassData(f"c{j}", 1, n, (n - j) % n) for j in range(n)]
    chars = [[CycScalar.zeta(n, i * j) for j in range(n)] for i in range(n)]
    return CharacterTable(f"cyclic:{n}", n, classes, chars, 0, (1 % n, (n - 1) % n))


def _binary_dihedral_table(n: int) -> CharacterTable:
    order = 4 * n
    classes = [ClassData("e", 1, order, 0), ClassData("x^n", 1, order, 1)]
    for j in range(1, n):
        classes.append(ClassData(f"x^{j}", 2, 2 * n, 1 + j))
    y_inv = (n + 2, n + 1) if n % 2 else (n + 1, n + 2)
    classes.append(ClassData("y", n, 4, y_inv[0]))
    classes.append(ClassData("xy", n, 4, y_inv[1]))

    one = CycScalar.one()
    minus = CycScalar.from_rational(-1)
    delta = CycScalar.one() if n % 2 == 0 else CycScalar.zeta(4)

    def row_1dim(eps_x, dy):
        # character with x -> eps_x, y -> dy
        vals = [one, eps_x ** n]
        vals += [eps_x ** j for j in range(1, n)]
        vals += [dy, eps_x * dy]
        return vals

    def row_2dim(m):
        vals = [CycScalar.from_rational(2), CycScalar.zeta(2 * n, m * n) * 2]
        vals += [CycScalar.zeta(2 * n, m * j) + CycScalar.zeta(2 * n, -m * j) for j in range(1, n)]
        vals += [CycScalar.zero(), CycScalar.zero()]
        return vals

    chars = [row_1dim(one, one), row_1dim(one, minus)]
    chars += [row_2dim(m) for m in range(1, n)]
    chars += [row_1dim(minus, delta), row_1dim(minus, -delta)]
    return CharacterTable(f"binary_dihedral:{n}", order, classes, chars, 0, 2)


def _binary_tetrahedral_table() -> CharacterTable:
    w = CycScalar.zeta(3)
    w2 = w * w
    one = CycScalar.one()

    def cz(*vals):
        return [v if isinstance(v, CycScalar) else CycScalar.from_rational(v) for v in vals]

    classes = [
        ClassData("e", 1, 24, 0),
        ClassData("-e", 1, 24, 1),
        ClassData("4", 6, 4, 2),
        ClassData("3a", 4, 6, 4),
        ClassData("3b", 4, 6, 3),
        ClassData("6a", 4, 6, 6),
        ClassData("6b", 4, 6, 5),
    ]
    chars = [
        cz(1, 1, 1, 1, 1, 1, 1),
        cz(1, 1, 1, w, w2, w, w2),
        cz(1, 1, 1, w2, w, w2, w),
        cz(2, -2, 0, -1, -1, 1, 1),
        cz(2, -2, 0, -w, -w2, w, w2),
        cz(2, -2, 0, -w2, -w, w2, w),
        cz(3, 3, -1, 0, 0, 0, 0),
    ]
    # affine E6 ordering: legs 0-3-6, 1-4-6, 2-5-6
    return CharacterTable("binary_tetrahedral", 24, classes, chars, 0, 3)


def _binary_octahedral_table() -> CharacterTable:
    rt2 = CycScalar.zeta(8) - CycScalar.zeta(8, 3)

    def cz(*vals):
        return [v if isinstance(v, CycScalar) else CycScalar.from_rational(v) for v in vals]

    classes = [
        ClassData("e", 1, 48, 0),
        ClassData("-e", 1, 48, 1),
        ClassData("4a", 6, 8, 2),
        ClassData("8a", 6, 8, 3),
        ClassData("8b", 6, 8, 4),
        ClassData("4b", 12, 4, 5),
        ClassData("3", 8, 6, 6),
        ClassData("6", 8, 6, 7),
    ]
    # ordering: [triv, pi, 3-dim F, 4-dim G, 3-dim E, 2-dim pi', sign B, 2-dim C]
    chars = [
        cz(1, 1, 1, 1, 1, 1, 1, 1),
        cz(2, -2, 0, rt2, -rt2, 0, -1, 1),
        cz(3, 3, -1, 1, 1, -1, 0, 0),
        cz(4, -4, 0, 0, 0, 0, 1, -1),
        cz(3, 3, -1, -1, -1, 1, 0, 0),
        cz(2, -2, 0, -rt2, rt2, 0, -1, 1),
        cz(1, 1, 1, -1, -1, -1, 1, 1),
        cz(2, 2, 2, 0, 0, 0, -1, -1),
    ]
    return CharacterTable("binary_octahedral", 48, classes, chars, 0, 1)


def _binary_icosahedral_table() -> CharacterTable:
    z = CycScalar.zeta(5)
    gp = -(z ** 2) - z ** 3  # golden ratio (1+sqrt5)/2
    gm = -z - z ** 4         # (1-sqrt5)/2

    def cz(*vals):
        return [v if isinstance(v, CycScalar) else CycScalar.from_rational(v) for v in vals]

    classes = [
        ClassData("e", 1, 120, 0),
        ClassData("-e", 1, 120, 1),
        ClassData("4", 30, 4, 2),
        ClassData("6", 20, 6, 3),
        ClassData("3", 20, 6, 4),
        ClassData("10a", 12, 10, 5),
        ClassData("5a", 12, 10, 6),
        ClassData("10b", 12, 10, 7),
        ClassData("5b", 12, 10, 8),
    ]
    # affine E8 ordering: chain 0..7 with 8 attached to node 5
    chars = [
        cz(1, 1, 1, 1, 1, 1, 1, 1, 1),
        cz(2, -2, 0, 1, -1, gp, -gm, gm, -gp),
        cz(3, 3, -1, 0, 0, gp, gm, gm, gp),
        cz(4, -4, 0, -1, 1, 1, -1, 1, -1),
        cz(5, 5, 1, -1, -1, 0, 0, 0, 0),
        cz(6, -6, 0, 0, 0, -1, 1, -1, 1),
        cz(4, 4, 0, 1, 1, -1, -1, -1, -1),
        cz(2, -2, 0, 1, -1, gm, -gp, gp, -gm),
        cz(3, 3, -1, 0, 0, gm, gp, gp, gm),
    ]
    return CharacterTable("binary_icosahedral", 120, classes, chars, 0, 1)


BUILTIN_KINDS = (
    "cyclic",
    "binary_dihedral",
    "binary_tetrahedral",
    "binary_octahedral",
    "binary_icosahedral",
)


def builtin_group(kind: str, n: int | None = None) -> CharacterTable:
    """Catalogued character table of a finite subgroup of SU(2)."""
    if kind == "cyclic":
        if n is None or n < 1:
            raise ValueError("cyclic group needs a positive order n")
        return _cyclic_table(n)
    if kind == "binary_dihedral":
        if n is None or n < 2:
            raise ValueError("binary dihedral family needs n >= 2 (order 4n)")
        return _binary_dihedral_table(n)
    if kind == "binary_tetrahedral":
        return _binary_tetrahedral_table()
    if kind == "binary_octahedral":
        return _binary_octahedral_table()
    if kind == "binary_icosahedral":
        return _binary_icosahedral_table()
    raise ValueError(f"unknown group kind {kind!r}")


def parse_group_spec(spec: str) -> CharacterTable:
    """Parse CLI group names like 'cyclic:3' or 'binary_tetrahedral'."""
    if ":" in spec:
        kind, _, num = spec.partition(":")
        return builtin_group(kind, int(num))
    return builtin_group(spec)


# ---------------------------------------------------------------------------
# class functions with RSLaurent coefficients


class ClassFunctionRS:
    """Element of R(Gamma x C* x C*) in irreducible-character coordinates."""

    __slots__ = ("table", "coeffs")

    def __init__(self, table: CharacterTable, coeffs):
        self.table = table
        cs = []
        for c in coeffs:
            if isinstance(c, (int, Fraction, CycScalar)):
                c = RSLaurent.monomial(c)
            cs.append(c)
        if len(cs) != table.n_chars:
            raise ValueError("coefficient vector length must match the character count")
        self.coeffs = tuple(cs)

    @staticmethod
    def character(table, i, twist: RSLaurent | None = None):
        coeffs = [RSLaurent.zero()] * table.n_chars
        coeffs[i] = twist if twist is not None else RSLaurent.one()
        return ClassFunctionRS(table, coeffs)

    def evaluate(self, c: int) -> RSLaurent:
        acc = RSLaurent.zero()
        for i, coef in enumerate(self.coeffs):
            if coef:
                acc = acc + coef * self.table.chars[i][c]
        return acc

    def evaluate_twisted(self, c: int, m: int) -> RSLaurent:
        """Value with every Laurent coefficient substituted r->r^m, s->s^m."""
        acc = RSLaurent.zero()
        for i, coef in enumerate(self.coeffs):
            if coef:
                acc = acc + coef.substitute(m) * self.table.chars[i][c]
        return acc

    def antipode(self) -> "ClassFunctionRS":
        dual = self.table.dual
        coeffs = [RSLaurent.zero()] * self.table.n_chars
        for j in range(self.table.n_chars):
            coeffs[j] = self.coeffs[dual[j]].invert_vars()
        return ClassFunctionRS(self.table, coeffs)

    def __add__(self, other):
        assert self.table is other.table
        return ClassFunctionRS(
            self.table, [a + b for a, b in zip(self.coeffs, other.coeffs)]
        )

    def __sub__(self, other):
        assert self.table is other.table
        return ClassFunctionRS(
            self.table, [a - b for a, b in zip(self.coeffs, other.coeffs)]
        )

    def scale(self, factor: RSLaurent) -> "ClassFunctionRS":
        return ClassFunctionRS(self.table, [factor * c for c in self.coeffs])

    def __eq__(self, other):
        return (
            isinstance(other, ClassFunctionRS)
            and self.table is other.table
            and all(a == b for a, b in zip(self.coeffs, other.coeffs))
        )

    __hash__ = None

    def __repr__(self):
        bits = [
            f"g{i}*({c.to_text()})" for i, c in enumerate(self.coeffs) if c
        ]
        return "ClassFunctionRS(" + (" + ".join(bits) or "0") + ")"


def antipode(f: ClassFunctionRS) -> ClassFunctionRS:
    return f.antipode()


def pair_characters(table: CharacterTable, xi: ClassFunctionRS, i: int, j: int) -> RSLaurent:
    """Weighted pairing <g_i, g_j>_xi = sum_c zeta_c^{-1} xi(c) g_i(c) g_j(c^{-1})."""
    acc = RSLaurent.zero()
    for c, cl in enumerate(table.classes):
        term = xi.evaluate(c) * (table.chars[i][c] * table.chars[j][cl.inverse])
        acc = acc + term * Fraction(1, cl.centralizer)
    return acc


def tensor_multiplicities(table: CharacterTable, xi: ClassFunctionRS, i: int):
    """Row i of the multiplicity matrix of xi * g_i = sum_j a_ij g_j."""
    if xi.table is not table:
        raise ValueError("class function is defined over a different table")
    return [pair_characters(table, xi, i, j) for j in range(table.n_chars)]
