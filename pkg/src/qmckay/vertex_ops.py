"""Lattice layer and truncated vertex operators.

A vertex operator here is the composite

    X^+(g_i, a, b, z) = exp( sum a_{-m}(g_i) z^m / m )
                        exp( -sum a_m(g_i) r^{-am} s^{-bm} z^{-m} / m )
                        e^{g_i} z^{d_i},
    X^-(g_i, a, b, z) = exp( -sum a_{-m}(g_i) r^{am} s^{bm} z^m / m )
                        exp( sum a_m(g_i) z^{-m} / m )
                        e^{-g_i} z^{-d_i},

acting on the Fock space extended by the group algebra of the character
lattice, with a bimultiplicative 2-cocycle twisting the lattice shifts
and z^{d_i} reading off the integer pairing with the lattice part.  Mode
coefficients are extracted exactly: applied to a finite vector every mode
is a finite sum, so no truncation error enters; truncation parameters
only bound the spanning sets and coefficient windows of the reports.

Operator-product checks compare Y(z)Y(w) against the normal-ordered
product times the derived rational factor; pole factors are cleared by
multiplying the singular side, turning each branch into an identity of
Laurent-polynomial coefficient families.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .exact_ring import RSLaurent, rs_monomial
from .fock_heisenberg import FockSpace, FockVector, apply_annihilate, apply_create
from .wreath_chars import partitions, z_lambda


@dataclass(frozen=True)
class TruncationParams:
    """Finite windows for relation reports: spanning degree, free-mode
    range, lattice ball, and the output-degree cap of OPE windows."""

    degree: int = 3
    modes: int = 2
    ball: int = 1
    out_cap: int | None = None

    def output_cap(self) -> int:
        return self.out_cap if self.out_cap is not None else self.degree + 2

    def describe(self) -> str:
        return (
            f"degree<={self.degree}, modes<={self.modes}, "
            f"lattice ball<={self.ball}, output degree<={self.output_cap()}"
        )


class Cocycle:
    """Bimultiplicative 2-cocycle on the character lattice.

    Basis values: eps(i, i) = (rs)^{1/2}; eps(i, j) = 1 for i < j;
    eps(j, i) = (-1)^{<i,j>} for i < j.  The sign pattern is the unique
    one compatible with the operator-product relations; the cocycle
    conditions themselves are verified in the tests, not assumed.
    """

    def __init__(self, space: FockSpace):
        self.space = space
        n = space.table.n_chars
        diag = rs_monomial(1, 1, 1)
        self.basis = [[None] * n for _ in range(n)]
        for i in range(n):
            for j in range(n):
                if i == j:
                    self.basis[i][j] = diag
                elif i < j:
                    self.basis[i][j] = RSLaurent.one()
                else:
                    self.basis[i][j] = RSLaurent.monomial(
                        -1 if space.cartan1[i][j] % 2 else 1
                    )

    def eval(self, alpha, beta) -> RSLaurent:
        acc = RSLaurent.one()
        for i, a in enumerate(alpha):
            if not a:
                continue
            for j, b in enumerate(beta):
                if not b:
                    continue
                acc = acc * self.basis[i][j] ** (a * b)
        return acc

    def eval_unit(self, sign_i: int, i: int, beta) -> RSLaurent:
        alpha = [0] * self.space.table.n_chars
        alpha[i] = sign_i
        return self.eval(tuple(alpha), beta)


def lattice_shift(ctx, sign_i: int, i: int, vec: FockVector) -> FockVector:
    """e^{sign * g_i} with the cocycle twist."""
    space = ctx.space
    out = {}
    for (mono, beta), coef in vec.terms.items():
        coc = ctx.cocycle.eval_unit(sign_i, i, beta)
        nb = list(beta)
        nb[i] += sign_i
        key = (mono, tuple(nb))
        cur = out.get(key)
        w = coef * coc
        tot = w if cur is None else cur + w
        if tot:
            out[key] = tot
        elif key in out:
            del out[key]
    return FockVector(space, out)


def grading_exponent(space: FockSpace, i: int, beta) -> int:
    """<g_i, beta> at r = s = 1, the z-exponent of z^{d_i} on e^beta."""
    return sum(space.cartan1[i][j] * b for j, b in enumerate(beta) if b)


def kappa_diag_exponent(ctx, i: int, beta) -> int:
    """w-exponent (kappa^{1/2} units) of the modified grading operator:
    kappa^{-1/2 sum_j <g_i, m_j g_j> b_ij}."""
    b = ctx.skew
    return -sum(
        ctx.space.cartan1[i][j] * beta[j] * b[i][j]
        for j in range(len(beta))
        if beta[j] and b[i][j]
    )


class VertexContext:
    """Fock space plus lattice data shared by vertex operators."""

    def __init__(self, space: FockSpace, skew=None):
        self.space = space
        self.cocycle = Cocycle(space)
        self.skew = skew  # integer skew-symmetric matrix, kappa variant only


def _exp_poly_apply(space, i, weight, vec, create, alternating, twist):
    """Apply the z^{weight} coefficient of exp(+-sum a_{+-m}(g_i) t^m z^m / m).

    The coefficient is sum over partitions mu of `weight` of
    (sign) a_{mu}(g_i) twist^{weight} / z_mu.
    """
    if weight == 0:
        return vec
    acc = FockVector(space)
    for lam in partitions(weight):
        cur = vec
        for part in lam:
            cur = (
                apply_create(space, part, i, cur)
                if create
                else apply_annihilate(space, part, i, cur)
            )
            if cur.is_zero():
                break
        if cur.is_zero():
            continue
        factor = Fraction(1, z_lambda(lam))
        if alternating and len(lam) % 2:
            factor = -factor
        acc = acc + cur.scale(factor)
    if twist is not None:
        acc = acc.scale(twist ** weight)
    return acc


@dataclass(frozen=True)
class VertexOp:
    """One vertex operator: sign, character index, shift parameters (a, b)
    and twist (k, l), all in half-integer units doubled to integers."""

    sign: int
    i: int
    a2: int = 1
    b2: int = -1
    k2: int = 0
    l2: int = 0
    kappa: bool = False

    def annih_twist(self) -> RSLaurent | None:
        return rs_monomial(1, -self.a2, -self.b2) if self.sign > 0 else None

    def create_twist(self) -> RSLaurent | None:
        return rs_monomial(1, self.a2, self.b2) if self.sign < 0 else None


def vertex_mode_apply(ctx: VertexContext, op: VertexOp, n: int, vec: FockVector) -> FockVector:
    """The z^{-n-1} coefficient of the vertex operator applied exactly."""
    space = ctx.space
    if op.kappa and ctx.skew is None:
        raise ValueError("kappa-modified grading requested without a skew matrix")
    out = FockVector(space)
    arg_twist = None
    if op.k2 or op.l2:
        arg_twist = rs_monomial(1, -op.k2, -op.l2) ** (-n - 1)
    for (mono, beta), coef in vec.terms.items():
        e_lat = op.sign * grading_exponent(space, op.i, beta)
        extra = coef
        if op.kappa:
            w_exp = op.sign * kappa_diag_exponent(ctx, op.i, beta)
            extra = extra * rs_monomial(1, 0, 0, w_exp)
        if arg_twist is not None:
            extra = extra * arg_twist
        start = FockVector(space, {(mono, beta): extra})
        shifted = lattice_shift(ctx, op.sign, op.i, start)
        heis_weight = sum(m for m, _ in mono)
        for q in range(heis_weight + 1):
            p = q - n - 1 - e_lat
            if p < 0:
                continue
            mid = _exp_poly_apply(
                space, op.i, q, shifted, create=False,
                alternating=(op.sign > 0), twist=op.annih_twist(),
            )
            if mid.is_zero():
                continue
            res = _exp_poly_apply(
                space, op.i, p, mid, create=True,
                alternating=(op.sign < 0), twist=op.create_twist(),
            )
            out = out + res
    return out


class ModeOperator:
    """Memoized mode family of one vertex operator."""

    def __init__(self, ctx: VertexContext, op: VertexOp):
        self.ctx = ctx
        self.op = op
        self._memo = {}

    def apply(self, n: int, vec: FockVector) -> FockVector:
        out = FockVector(self.ctx.space)
        for key, coef in vec.terms.items():
            got = self._memo.get((n, key))
            if got is None:
                unit = FockVector(self.ctx.space, {key: RSLaurent.one()})
                got = vertex_mode_apply(self.ctx, self.op, n, unit)
                self._memo[(n, key)] = got
            out = out + got.scale(coef)
        return out


class NormalOrderedOperator:
    """Memoized (z, w)-coefficient family of a normal-ordered pair."""

    def __init__(self, ctx: VertexContext, opL: VertexOp, opR: VertexOp):
        self.ctx = ctx
        self.opL = opL
        self.opR = opR
        self._memo = {}

    def apply(self, mz: int, mw: int, vec: FockVector) -> FockVector:
        out = FockVector(self.ctx.space)
        for key, coef in vec.terms.items():
            got = self._memo.get((mz, mw, key))
            if got is None:
                unit = FockVector(self.ctx.space, {key: RSLaurent.one()})
                got = normal_ordered_apply(self.ctx, self.opL, self.opR, mz, mw, unit)
                self._memo[(mz, mw, key)] = got
            out = out + got.scale(coef)
        return out


def normal_ordered_apply(
    ctx: VertexContext,
    opL: VertexOp,
    opR: VertexOp,
    mz: int,
    mw: int,
    vec: FockVector,
) -> FockVector:
    """The z^{mz} w^{mw} coefficient of :Y^{sL}(z) Y^{sR}(w): applied to vec.

    All creation parts act left of all annihilation parts; the lattice
    shift is the combined e^{sL g_iL + sR g_iR} and both grading operators
    read the original lattice part.
    """
    space = ctx.space
    out = FockVector(space)
    for (mono, beta), coef in vec.terms.items():
        eL = opL.sign * grading_exponent(space, opL.i, beta)
        eR = opR.sign * grading_exponent(space, opR.i, beta)
        extra = coef
        if opL.kappa:
            extra = extra * rs_monomial(
                1, 0, 0, opL.sign * kappa_diag_exponent(ctx, opL.i, beta)
            )
        if opR.kappa:
            extra = extra * rs_monomial(
                1, 0, 0, opR.sign * kappa_diag_exponent(ctx, opR.i, beta)
            )
        alpha = [0] * space.table.n_chars
        alpha[opL.i] += opL.sign
        alpha[opR.i] += opR.sign
        coc = ctx.cocycle.eval(tuple(alpha), beta)
        nb = tuple(b + a for b, a in zip(beta, alpha))
        start = FockVector(space, {(mono, nb): extra * coc})
        heis_weight = sum(m for m, _ in mono)
        for qL in range(heis_weight + 1):
            pL = mz + qL - eL
            if pL < 0:
                continue
            midL = _exp_poly_apply(
                space, opL.i, qL, start, create=False,
                alternating=(opL.sign > 0), twist=opL.annih_twist(),
            )
            if midL.is_zero():
                continue
            for qR in range(heis_weight - qL + 1):
                pR = mw + qR - eR
                if pR < 0:
                    continue
                midR = _exp_poly_apply(
                    space, opR.i, qR, midL, create=False,
                    alternating=(opR.sign > 0), twist=opR.annih_twist(),
                )
                if midR.is_zero():
                    continue
                res = _exp_poly_apply(
                    space, opR.i, pR, midR, create=True,
                    alternating=(opR.sign < 0), twist=opR.create_twist(),
                )
                res = _exp_poly_apply(
                    space, opL.i, pL, res, create=True,
                    alternating=(opL.sign < 0), twist=opL.create_twist(),
                )
                out = out + res
    return out


# ---------------------------------------------------------------------------
# operator-product branch data


QUANTUM_ROOT_PLUS = rs_monomial(1, 1, -1)   # (r/s)^{1/2}
QUANTUM_ROOT_MINUS = rs_monomial(1, -1, 1)  # (s/r)^{1/2}


@dataclass(frozen=True)
class OpeBranch:
    """Everything needed to state one product row exactly."""

    s1: int
    s2: int
    zeta1: RSLaurent       # argument rescale of the left operator
    zeta2: RSLaurent       # argument rescale of the right operator
    roots: tuple           # linear factors (z - c w) in outer variables
    exponent: int          # +1: factors multiply the normal-ordered side
    constant: RSLaurent    # derived constant relating the two sides


def ope_branch(ctx, s1, s2, i, j, a2=1, b2=-1, kappa=False) -> OpeBranch:
    """Derive the rational factor and constant of Y^{s1}(g_i) Y^{s2}(g_j)."""
    space = ctx.space
    case = space.cartan1[i][j]
    zeta1 = rs_monomial(1, 0, -b2) if s1 > 0 else rs_monomial(1, -a2, 0)
    zeta2 = rs_monomial(1, 0, -b2) if s2 > 0 else rs_monomial(1, -a2, 0)
    phi = rs_monomial(1, -a2, -b2) if s1 > 0 else RSLaurent.one()
    psi = RSLaurent.one() if s2 > 0 else rs_monomial(1, a2, b2)
    scale = phi * psi * zeta2 * zeta1.unit_inverse()
    if case == 2 and i == j:
        roots = (QUANTUM_ROOT_PLUS * scale, QUANTUM_ROOT_MINUS * scale)
        eps_case = 1
    elif case == -1:
        root = scale
        if kappa:
            if ctx.skew is None:
                raise ValueError("kappa branch requested without a skew matrix")
            root = root * rs_monomial(1, 0, 0, 2 * ctx.skew[i][j])
        roots = (root,)
        eps_case = -1
    elif case == 0:
        roots = ()
        eps_case = 1
    else:
        raise ValueError(f"pairing case {case} has no catalogued branch")
    exponent = s1 * s2 * eps_case
    alpha = [0] * space.table.n_chars
    alpha[i] += s1
    beta = [0] * space.table.n_chars
    beta[j] += s2
    constant = ctx.cocycle.eval(tuple(alpha), tuple(beta))
    constant = constant * zeta1 ** (exponent * len(roots))
    if kappa and case == -1:
        constant = constant * rs_monomial(1, 0, 0, -s1 * s2 * case * ctx.skew[i][j])
    return OpeBranch(s1, s2, zeta1, zeta2, roots, exponent, constant)


def _poly_multiply_family(fn, roots):
    """Multiply a coefficient family by prod (z - c w)."""
    cur = fn
    for c in roots:
        def one_factor(mz, mw, vec, _inner=cur, _c=c):
            return _inner(mz - 1, mw, vec) - _inner(mz, mw - 1, vec).scale(_c)
        cur = one_factor
    return cur


@dataclass(frozen=True)
class OpeCheck:
    row: str
    window: str
    passed: bool
    witness: str = ""
    constant: str = ""


@dataclass(frozen=True)
class OpeReport:
    group: str
    i: int
    j: int
    case: int
    variant: str
    rows: tuple
    passed: bool

    def to_json(self):
        return {
            "group": self.group,
            "identity": "vertex operator products equal the normal-ordered "
            "product times the derived rational factor (poles cleared)",
            "i": self.i,
            "j": self.j,
            "case": self.case,
            "variant": self.variant,
            "rows": [
                {
                    "row": r.row,
                    "window": r.window,
                    "pass": r.passed,
                    "witness": r.witness,
                    "constant": r.constant,
                }
                for r in self.rows
            ],
            "pass": self.passed,
        }


def ope_check(
    ctx: VertexContext,
    i: int,
    j: int,
    case: int,
    trunc: TruncationParams,
    variant: str = "plain",
    a2: int = 1,
    b2: int = -1,
) -> OpeReport:
    """Verify the four product rows for the (i, j) pair at the stated case."""
    space = ctx.space
    if space.cartan1[i][j] != case:
        raise ValueError(
            f"declared case {case} does not match the lattice pairing "
            f"{space.cartan1[i][j]}"
        )
    kappa = variant == "kappa"
    spanning = space.basis_keys(trunc.degree, trunc.ball)
    rows = []
    for s1, s2 in ((1, 1), (1, -1), (-1, 1), (-1, -1)):
        branch = ope_branch(ctx, s1, s2, i, j, a2, b2, kappa)
        opL = VertexOp(s1, i, a2, b2, kappa=kappa)
        opR = VertexOp(s2, j, a2, b2, kappa=kappa)
        modeL = ModeOperator(ctx, opL)
        modeR = ModeOperator(ctx, opR)
        ordered = NormalOrderedOperator(ctx, opL, opR)
        pow_memo = {}

        def rescale(mz, mw, _b=branch, _memo=pow_memo):
            got = _memo.get((mz, mw))
            if got is None:
                got = _b.zeta1 ** mz * _b.zeta2 ** mw
                _memo[(mz, mw)] = got
            return got

        def lhs(mz, mw, vec, _mL=modeL, _mR=modeR):
            inner = _mR.apply(-mw - 1, vec)
            res = _mL.apply(-mz - 1, inner)
            return res.scale(rescale(mz, mw))

        def rhs(mz, mw, vec, _no=ordered, _b=branch):
            res = _no.apply(mz, mw, vec)
            return res.scale(_b.constant * rescale(mz, mw))

        if branch.exponent >= 0:
            left_fn = lhs
            right_fn = _poly_multiply_family(rhs, branch.roots)
        else:
            left_fn = _poly_multiply_family(lhs, branch.roots)
            right_fn = rhs

        passed, witness = True, ""
        W = trunc.modes + 2
        cap = trunc.output_cap()
        for key in spanning:
            vec = FockVector(space, {key: RSLaurent.one()})
            d = space.degree(key)
            for mz in range(-W, cap + 1):
                for mw in range(-W, cap + 1):
                    if d + mz + mw + 2 > cap:
                        continue
                    a = left_fn(mz, mw, vec)
                    b = right_fn(mz, mw, vec)
                    if a != b:
                        passed = False
                        witness = f"key={key} coeff=({mz},{mw})"
                        break
                if not passed:
                    break
            if not passed:
                break
        sign_name = {1: "+", -1: "-"}
        rows.append(
            OpeCheck(
                f"Y{sign_name[s1]}Y{sign_name[s2]}",
                f"|m| <= {W}, out degree <= {cap}, {len(spanning)} vectors",
                passed,
                witness,
                branch.constant.to_text(),
            )
        )
    return OpeReport(
        space.table.name,
        i,
        j,
        case,
        variant,
        tuple(rows),
        all(r.passed for r in rows),
    )
