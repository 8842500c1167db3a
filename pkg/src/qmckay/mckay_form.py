"""Weighted bilinear forms, quantum Cartan matrices and McKay graphs.

The distinguished weight for a subgroup of SU(2) is

    xi = g_0 (x) ((r/s)^{1/2} + (s/r)^{1/2})  -  pi (x) 1,

whose weighted form on irreducible characters yields the two-parameter
quantum Cartan matrix; at r = s = 1 it degenerates to the affine ADE
Cartan matrix of the McKay correspondence.  The cyclic groups carry a
second, kappa-deformed weight.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .exact_ring import CycScalar, RSLaurent, rs_monomial
from .group_data import (
    CharacterTable,
    ClassFunctionRS,
    pair_characters,
)


@dataclass(frozen=True)
class WeightFunction:
    """A class function used to weight the bilinear form; self-duality is
    verified at construction, never assumed."""

    base: ClassFunctionRS
    self_dual: bool = field(init=False)

    def __post_init__(self):
        object.__setattr__(self, "self_dual", self.base.antipode() == self.base)

    @property
    def table(self) -> CharacterTable:
        return self.base.table

    def value(self, c: int) -> RSLaurent:
        return self.base.evaluate(c)

    def value_level(self, c: int, m: int) -> RSLaurent:
        """xi evaluated with (r, s) -> (r^m, s^m)."""
        return self.base.evaluate_twisted(c, m)


def quantum_diagonal() -> RSLaurent:
    """(r s^{-1})^{1/2} + (r^{-1} s)^{1/2}."""
    return rs_monomial(1, 1, -1) + rs_monomial(1, -1, 1)


def trivial_weight(table: CharacterTable) -> WeightFunction:
    """The weight given by the trivial character: the standard form."""
    return WeightFunction(ClassFunctionRS.character(table, table.trivial))


def mckay_weight(table: CharacterTable) -> WeightFunction:
    """g_0 (x) ((rs^{-1})^{1/2}+(r^{-1}s)^{1/2}) - pi (x) 1 for SU(2) tables."""
    if table.natural is None:
        raise ValueError(f"{table.name}: no embedding character recorded")
    coeffs = [RSLaurent.zero()] * table.n_chars
    coeffs[table.trivial] = quantum_diagonal()
    if isinstance(table.natural, int):
        coeffs[table.natural] = coeffs[table.natural] - RSLaurent.one()
    else:
        for idx in table.natural:
            coeffs[idx] = coeffs[idx] - RSLaurent.one()
    w = WeightFunction(ClassFunctionRS(table, coeffs))
    assert w.self_dual
    return w


def kappa_weight(table: CharacterTable, kappa: RSLaurent) -> WeightFunction:
    """g_0 (x) diag - (g_1 (x) kappa + g_N (x) kappa^{-1}) on a cyclic table."""
    n = table.n_chars
    if not table.name.startswith("cyclic:") or n < 2:
        raise ValueError("the kappa weight is defined for cyclic groups of order >= 2")
    coeffs = [RSLaurent.zero()] * n
    coeffs[0] = quantum_diagonal()
    coeffs[1] = coeffs[1] - kappa
    coeffs[n - 1] = coeffs[n - 1] - kappa.unit_inverse()
    return WeightFunction(ClassFunctionRS(table, coeffs))


def weighted_form(f: ClassFunctionRS, g: ClassFunctionRS, xi: WeightFunction) -> RSLaurent:
    """<f, g>_xi = sum_c zeta_c^{-1} xi(c) f^{r,s}(c) g^{1/r,1/s}(c^{-1})."""
    table = f.table
    if g.table is not table or xi.table is not table:
        raise ValueError("mismatched character tables in weighted form")
    acc = RSLaurent.zero()
    for c, cl in enumerate(table.classes):
        term = xi.value(c) * f.evaluate(c) * g.evaluate(cl.inverse).invert_vars()
        acc = acc + term * Fraction(1, cl.centralizer)
    return acc


class QuantumCartanMatrix:
    """Matrix of weighted pairings a_ij = <g_i, g_j>_xi."""

    def __init__(self, table: CharacterTable, xi: WeightFunction):
        self.table = table
        self.weight = xi
        n = table.n_chars
        self.entries = tuple(
            tuple(pair_characters(table, xi.base, i, j) for j in range(n))
            for i in range(n)
        )

    @property
    def size(self) -> int:
        return len(self.entries)

    def bar_symmetric(self) -> bool:
        n = self.size
        return all(
            self.entries[i][j] == self.entries[j][i].bar()
            for i in range(n)
            for j in range(n)
        )

    def specialize_integer(self):
        """Entries at (r, s) = (1, 1) as exact integers (the affine Cartan)."""
        out = []
        one = CycScalar.one()
        for row in self.entries:
            line = []
            for e in row:
                val = e.specialize(1, 1, sqrt1=one, sqrt2=one, kappa=one, sqrt_kappa=one)
                if not val.is_rational() or val.as_rational().denominator != 1:
                    raise ValueError(f"non-integer specialized Cartan entry {e.to_text()}")
                line.append(int(val.as_rational()))
            out.append(tuple(line))
        return tuple(out)


def quantum_cartan(table: CharacterTable, xi: WeightFunction) -> QuantumCartanMatrix:
    return QuantumCartanMatrix(table, xi)


@dataclass(frozen=True)
class EigenCheck:
    class_id: str
    eigenvalue: str
    passed: bool


@dataclass(frozen=True)
class EigenReport:
    group: str
    checks: tuple
    passed: bool

    def to_json(self):
        return {
            "group": self.group,
            "identity": "A^{r,s} v(c) = xi^{r,s}(c) v(c) with v(c) the character column at c",
            "checks": [
                {"class": c.class_id, "eigenvalue": c.eigenvalue, "pass": c.passed}
                for c in self.checks
            ],
            "pass": self.passed,
        }


def verify_eigenvectors(table: CharacterTable, xi: WeightFunction) -> EigenReport:
    """Each class column of the character table is an eigenvector of A^{r,s}."""
    A = quantum_cartan(table, xi)
    checks = []
    for c, cl in enumerate(table.classes):
        lam = xi.value(c)
        ok = True
        for i in range(table.n_chars):
            lhs = RSLaurent.zero()
            for k in range(table.n_chars):
                lhs = lhs + A.entries[i][k] * table.chars[k][c]
            rhs = lam * table.chars[i][c]
            if lhs != rhs:
                ok = False
                break
        checks.append(EigenCheck(cl.id, lam.to_text(), ok))
    return EigenReport(table.name, tuple(checks), all(c.passed for c in checks))


@dataclass(frozen=True)
class McKayGraph:
    group: str
    n_vertices: int
    edges: tuple  # (i, j, multiplicity) with i < j

    def degree_sequence(self):
        deg = [0] * self.n_vertices
        for i, j, m in self.edges:
            deg[i] += m
            deg[j] += m
        return tuple(deg)

    def to_dot(self) -> str:
        lines = [f'graph "{self.group}" {{']
        for v in range(self.n_vertices):
            lines.append(f"  v{v};")
        for i, j, m in self.edges:
            for _ in range(m):
                lines.append(f"  v{i} -- v{j};")
        lines.append("}")
        return "\n".join(lines)


def mckay_graph(table: CharacterTable, xi: WeightFunction) -> McKayGraph:
    ints = quantum_cartan(table, xi).specialize_integer()
    n = len(ints)
    edges = []
    for i in range(n):
        for j in range(i + 1, n):
            m = abs(ints[i][j])
            if m:
                edges.append((i, j, m))
    return McKayGraph(table.name, n, tuple(edges))


def _minor_dets(entries):
    """Leading principal minors by fraction-free cofactor expansion."""
    n = len(entries)
    dets = []
    for k in range(1, n + 1):
        sub = [row[:k] for row in entries[:k]]
        dets.append(_det(sub))
    return dets


def _det(m):
    n = len(m)
    if n == 1:
        return m[0][0]
    acc = CycScalar.zero()
    sign = 1
    for j in range(n):
        if not m[0][j].is_zero():
            minor = [row[:j] + row[j + 1:] for row in m[1:]]
            acc = acc + CycScalar.from_rational(sign) * m[0][j] * _det(minor)
        sign = -sign
    return acc


@dataclass(frozen=True)
class SpotCheck:
    sample: str
    determinant: str
    det_nonzero: bool
    minors_positive: bool
    note: str = ""


@dataclass(frozen=True)
class NondegeneracyReport:
    group: str
    checks: tuple
    passed: bool

    def to_json(self):
        return {
            "group": self.group,
            "identity": "det/minors of the weighted-form matrix at real samples",
            "checks": [
                {
                    "sample": c.sample,
                    "det": c.determinant,
                    "det_nonzero": c.det_nonzero,
                    "minors_positive": c.minors_positive,
                    "note": c.note,
                }
                for c in self.checks
            ],
            "pass": self.passed,
        }


def _eval_even_lattice(e: RSLaurent, t1: Fraction, t2: Fraction, root_prod: CycScalar):
    """Exact value of a Laurent element whose monomials all satisfy a = b (2).

    Uses u^a v^b = t1^{(a-b)/2} (t1 t2)^{b/2}; root_prod is a square root
    of t1*t2.  Returns None when a monomial falls outside the even lattice.
    """
    acc = CycScalar.zero()
    base = CycScalar.from_rational(t1)
    for (a, b, k), c in e.t.items():
        if (a - b) % 2 or k % 2:
            return None
        term = c * base ** ((a - b) // 2) * root_prod ** b
        if k:
            term = term * CycScalar.one()  # kappa = 1 at spot checks
        acc = acc + term
    return acc


def nondegeneracy_spot_check(table, xi, samples, tol=1e-9) -> NondegeneracyReport:
    """Evaluate det and leading minors of A at (t1, t2) samples.

    When t1*t2 is a perfect rational square the entries (which live in the
    even exponent lattice) are evaluated exactly over the cyclotomics; the
    minors are then decided exactly when rational and through the complex
    embedding with the given tolerance otherwise.  Other samples use the
    float embedding throughout.
    """
    A = quantum_cartan(table, xi)
    checks = []
    for (t1, t2) in samples:
        t1f, t2f = Fraction(t1), Fraction(t2)
        if t1f == 0 or t2f == 0:
            checks.append(SpotCheck(f"({t1},{t2})", "", False, False, "zero sample rejected"))
            continue
        root_prod = _exact_sqrt(t1f * t2f)
        vals = None
        if root_prod is not None:
            vals = [
                [_eval_even_lattice(e, t1f, t2f, root_prod) for e in row]
                for row in A.entries
            ]
            if any(v is None for row in vals for v in row):
                vals = None
        if vals is not None:
            minors = _minor_dets(vals)
            det = minors[-1]
            det_nonzero = not det.is_zero()
            if all(v.is_rational() for v in minors):
                minors_pos = all(v.as_rational() > 0 for v in minors)
                note = "exact"
                det_text = str(det.as_rational())
            else:
                embed = [v.to_complex() for v in minors]
                minors_pos = all(abs(d.imag) < tol and d.real > tol for d in embed)
                note = "exact det, numeric sign"
                det_text = f"{embed[-1].real:.6g}"
            checks.append(SpotCheck(f"({t1},{t2})", det_text, det_nonzero, minors_pos, note))
            continue
        fvals = [[e.to_complex(float(t1f), float(t2f)) for e in row] for row in A.entries]
        dets = [_cdet([r[:k] for r in fvals[:k]]) for k in range(1, len(fvals) + 1)]
        det = dets[-1]
        checks.append(
            SpotCheck(
                f"({t1},{t2})",
                f"{det.real:.6g}",
                abs(det) > tol,
                all(abs(d.imag) < tol and d.real > tol for d in dets),
                "numeric",
            )
        )
    return NondegeneracyReport(table.name, tuple(checks), all(c.det_nonzero for c in checks))


def _exact_sqrt(x: Fraction):
    num, den = x.numerator, x.denominator
    if num < 0:
        return None
    rn, rd = _isqrt_exact(num), _isqrt_exact(den)
    if rn is None or rd is None:
        return None
    return CycScalar.from_rational(Fraction(rn, rd))


def _isqrt_exact(n: int):
    r = int(n ** 0.5)
    for c in (r - 1, r, r + 1):
        if c >= 0 and c * c == n:
            return c
    return None


def _cdet(m):
    n = len(m)
    if n == 1:
        return m[0][0]
    acc = 0j
    sign = 1
    for j in range(n):
        minor = [row[:j] + row[j + 1:] for row in m[1:]]
        acc += sign * m[0][j] * _cdet(minor)
        sign = -sign
    return acc
