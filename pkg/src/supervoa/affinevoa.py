"""Truncated vacuum modules over affine Lie superalgebras.

A :class:`TruncatedModule` holds the PBW bases of ``V^k(g)`` (or of a
quotient) grade by grade up to a cutoff ``N``; states are exact rational
combinations of PBW monomials.  All vertex-operator machinery reduces to
the normal-ordering core in :mod:`supervoa.pbw`: mode actions are exact,
``u_n v`` is computed through the iterate expansion recursing on PBW
length, and deeper leading modes are peeled off with the translation
operator.  Computations never truncate silently; only a final result
grade beyond the cutoff raises :class:`CutoffError`.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .liesuper import EVEN, LieSuperalgebra, dual_basis_pair, dual_coxeter
from .linalg import Echelon, ONE, SparseVec, ZERO, scalar_to_str
from .pbw import (
    FractionRing,
    ModeCalculus,
    Monomial,
    VACUUM,
    enumerate_monomials,
    monomial_parity,
    monomial_weight,
)
from .realizations import Realization


class CutoffError(ValueError):
    """A result (or required intermediate) grade exceeds the cutoff."""


class NoConformalStructure(ValueError):
    """Raised at the critical level k = -h_dual."""


@dataclass
class QuotientData:
    """Per-grade quotient description.

    ``relations[m]`` is the reduced echelon of the relation subspace in
    PBW coordinates; ``basis[m]`` lists the non-pivot monomials, which
    represent the quotient basis.  Certificate-only quotients know their
    dimensions but carry no relation echelons (``relations is None``),
    so they support dimension reports but not state arithmetic.
    """

    dims: list[int]
    relations: list[Echelon] | None
    basis: list[list[Monomial]] | None
    index: list[dict[Monomial, int]] | None
    note: str = ""
    # shallow projections of the relation grades (all-modes-(-1)
    # coordinates), which drive quotient-by-C2 dimensions
    shallow_ranks: list[int] | None = None
    shallow_dims: list[int] | None = None


class TruncatedModule:
    """Grade-by-grade PBW model of V^k(g) or one of its quotients."""

    def __init__(self, source: Realization | LieSuperalgebra, k: Fraction, N: int,
                 quotient: QuotientData | None = None, label: str = ""):
        if N < 0:
            raise ValueError("cutoff must be nonnegative")
        if isinstance(source, Realization):
            self.realization: Realization | None = source
            self.algebra = source.algebra
        else:
            self.realization = None
            self.algebra = source
        self.k = Fraction(k)
        self.N = N
        self.calculus = ModeCalculus(self.algebra, self.k, FractionRing)
        self.pbw_basis: list[list[Monomial]] = [
            enumerate_monomials(self.algebra.dim, self.algebra.parity, m)
            for m in range(N + 1)
        ]
        self.pbw_index: list[dict[Monomial, int]] = [
            {mono: i for i, mono in enumerate(basis)} for basis in self.pbw_basis
        ]
        self.quotient = quotient
        self.label = label or f"V^{k}({self.algebra.name})"

    # -- dimensions ----------------------------------------------------

    def pbw_dim(self, m: int) -> int:
        return len(self.pbw_basis[m])

    def dim(self, m: int) -> int:
        if self.quotient is not None:
            return self.quotient.dims[m]
        return self.pbw_dim(m)

    def grade_dims(self) -> list[int]:
        return [self.dim(m) for m in range(self.N + 1)]

    @property
    def is_quotient(self) -> bool:
        return self.quotient is not None

    @property
    def supports_states(self) -> bool:
        return self.quotient is None or self.quotient.relations is not None

    def grade_basis(self, m: int) -> list[Monomial]:
        if self.quotient is not None:
            if self.quotient.basis is None:
                raise ValueError("certificate-only quotient carries no state basis")
            return self.quotient.basis[m]
        return self.pbw_basis[m]

    # -- states ----------------------------------------------------------

    def reduce_terms(self, m: int, terms: dict[Monomial, Fraction]) -> dict[Monomial, Fraction]:
        """Canonical representative modulo the relations at grade m."""
        if self.quotient is None or not terms:
            return terms
        if self.quotient.relations is None:
            raise ValueError("certificate-only quotient does not support state arithmetic")
        rel = self.quotient.relations[m]
        idx = self.pbw_index[m]
        entries = {idx[mono]: c for mono, c in terms.items()}
        residue = rel.reduce(entries)
        basis = self.pbw_basis[m]
        return {basis[i]: c for i, c in residue.items()}

    def state(self, m: int, terms: dict[Monomial, Fraction]) -> "State":
        terms = {mono: Fraction(c) for mono, c in terms.items() if c}
        for mono in terms:
            if monomial_weight(mono) != m:
                raise ValueError(f"monomial {mono} does not have weight {m}")
        return State(self, m, self.reduce_terms(m, terms))

    def vacuum(self) -> "State":
        return State(self, 0, {VACUUM: ONE})

    def basis_state(self, m: int, i: int) -> "State":
        return State(self, m, {self.grade_basis(m)[i]: ONE})

    def monomial_state(self, mono: Monomial) -> "State":
        return self.state(monomial_weight(mono), {mono: ONE})

    def to_json(self) -> dict:
        data = {
            "algebra": self.algebra.name,
            "k": scalar_to_str(self.k),
            "N": self.N,
            "grade_dims": [self.pbw_dim(m) for m in range(self.N + 1)],
        }
        if self.quotient is not None:
            data["quotient_grade_dims"] = list(self.quotient.dims)
            if self.quotient.note:
                data["quotient_note"] = self.quotient.note
        return data


class State:
    """Exact vector in a fixed grade, stored over PBW monomials.

    In quotient modules the stored terms are always the canonical
    (echelon-reduced) representative.
    """

    __slots__ = ("module", "grade", "terms")

    def __init__(self, module: TruncatedModule, grade: int, terms: dict[Monomial, Fraction]):
        self.module = module
        self.grade = grade
        self.terms = terms

    def is_zero(self) -> bool:
        return not self.terms

    def scaled(self, c: Fraction) -> "State":
        if not c:
            return State(self.module, self.grade, {})
        return State(self.module, self.grade, {m: c * x for m, x in self.terms.items()})

    def plus(self, other: "State", coeff: Fraction = ONE) -> "State":
        if other.module is not self.module or (
            self.terms and other.terms and self.grade != other.grade
        ):
            raise ValueError("states live in different grades or modules")
        out = dict(self.terms)
        for m, x in other.terms.items():
            c = out.get(m, ZERO) + coeff * x
            if c:
                out[m] = c
            else:
                out.pop(m, None)
        grade = self.grade if self.terms else other.grade
        return State(self.module, grade, out)

    def parity(self) -> int:
        """Z2 parity; raises on inhomogeneous states."""
        parities = {monomial_parity(m, self.module.algebra.parity) for m in self.terms}
        if len(parities) > 1:
            raise ValueError("state is not Z2-homogeneous")
        return parities.pop() if parities else EVEN

    def coefficient(self, mono: Monomial) -> Fraction:
        return self.terms.get(mono, ZERO)

    def to_sparsevec(self) -> SparseVec:
        basis_index = (
            self.module.pbw_index[self.grade]
            if self.module.quotient is None
            else {m: i for i, m in enumerate(self.module.grade_basis(self.grade))}
        )
        v = SparseVec(len(basis_index) if self.module.quotient is not None
                      else self.module.pbw_dim(self.grade))
        v.entries = {basis_index[m]: c for m, c in self.terms.items()}
        return v

    def to_json(self) -> list:
        labels = self.module.algebra.labels
        items = sorted(self.terms.items())
        return [
            [[[labels[g], n] for n, g in mono], scalar_to_str(c)]
            for mono, c in items
        ]

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, State)
            and self.module is other.module
            and self.terms == other.terms
        )

    def __repr__(self):
        return f"State(grade={self.grade}, nterms={len(self.terms)})"


def build_vacuum(source: Realization | LieSuperalgebra, k: Fraction, N: int) -> TruncatedModule:
    """The vacuum module V^k(g) truncated at weight N.

    Built for any level; at the critical level k = -h_dual the module
    exists but :func:`conformal` refuses to produce Virasoro data.
    """
    return TruncatedModule(source, Fraction(k), N)


def _check_target(M: TruncatedModule, grade: int) -> None:
    if grade > M.N:
        raise CutoffError(f"result grade {grade} exceeds cutoff {M.N}")


def mode_action(M: TruncatedModule, x: int | SparseVec, n: int, s: State) -> State:
    """Exact action of x(n) on a state; K acts as the level."""
    target = s.grade - n
    if target < 0:
        return State(M, 0, {})
    _check_target(M, target)
    if isinstance(x, SparseVec):
        out = M.calculus.apply_vector_mode(dict(x.entries), n, s.terms)
    else:
        out = M.calculus.apply_mode(x, n, s.terms)
    return State(M, target, M.reduce_terms(target, out))


def _fc_terms(M: TruncatedModule, u_terms: dict[Monomial, Fraction], wt_u: int,
              n: int, v_terms: dict[Monomial, Fraction], wt_v: int) -> dict[Monomial, Fraction]:
    out: dict[Monomial, Fraction] = {}
    for mono, c in u_terms.items():
        part = _fc_mono(M, mono, n, v_terms, wt_v)
        for m2, c2 in part.items():
            val = out.get(m2, ZERO) + c * c2
            if val:
                out[m2] = val
            else:
                out.pop(m2, None)
    return out


def _fc_mono(M: TruncatedModule, mono: Monomial, n: int,
             v_terms: dict[Monomial, Fraction], wt_v: int) -> dict[Monomial, Fraction]:
    """Coefficient (mono)_n applied to a grade-homogeneous term dict."""
    if not mono:
        return dict(v_terms) if n == -1 else {}
    calc = M.calculus
    (n1, g1), rest = mono[0], mono[1:]
    wt_rest = monomial_weight(rest)
    if n1 == -1:
        # (x(-1)w)_n = sum_i x(-1-i) w_{n+i} + (-1)^{[x][w]} sum_i w_{n-1-i} x(i)
        out: dict[Monomial, Fraction] = {}
        imax = wt_rest + wt_v - n - 1
        for i in range(0, imax + 1):
            inner = _fc_mono(M, rest, n + i, v_terms, wt_v)
            if inner:
                for m2, c2 in calc.apply_mode(g1, -1 - i, inner).items():
                    val = out.get(m2, ZERO) + c2
                    if val:
                        out[m2] = val
                    else:
                        out.pop(m2, None)
        sign = (
            -ONE
            if (M.algebra.parity[g1] and monomial_parity(rest, M.algebra.parity))
            else ONE
        )
        for i in range(0, wt_v + 1):
            moved = calc.apply_mode(g1, i, v_terms)
            if moved:
                inner = _fc_mono(M, rest, n - 1 - i, moved, wt_v - i)
                for m2, c2 in inner.items():
                    val = out.get(m2, ZERO) + sign * c2
                    if val:
                        out[m2] = val
                    else:
                        out.pop(m2, None)
        return out
    # deep leading mode x(-m-1): peel with the translation operator,
    # x(-m-1)w = (1/m)(D(x(-m)w) - x(-m)Dw), (Ds)_n = -n s_{n-1}
    m_depth = -n1 - 1
    shallower = calc._insert(-m_depth, g1, rest)
    term1 = _fc_terms(M, shallower, monomial_weight(mono) - 1, n - 1, v_terms, wt_v)
    d_rest = calc.derivation({rest: ONE})
    deep = calc.apply_mode(g1, -m_depth, d_rest) if d_rest else {}
    term2 = _fc_terms(M, deep, monomial_weight(mono), n, v_terms, wt_v) if deep else {}
    inv = Fraction(1, m_depth)
    out = {}
    for m2, c2 in term1.items():
        val = inv * Fraction(-n) * c2
        if val:
            out[m2] = val
    for m2, c2 in term2.items():
        val = out.get(m2, ZERO) - inv * c2
        if val:
            out[m2] = val
        else:
            out.pop(m2, None)
    return out


def field_coeff(M: TruncatedModule, u: State, n: int, v: State) -> State:
    """The coefficient u_n v of the vertex operator Y(u, z)v.

    For grade-1 u = x(-1)|0> this agrees exactly with mode_action; the
    general case recurses on PBW length through the iterate expansion.
    """
    target = u.grade + v.grade - n - 1
    if target < 0:
        return State(M, 0, {})
    _check_target(M, target)
    out = _fc_terms(M, u.terms, u.grade, n, v.terms, v.grade)
    return State(M, target, M.reduce_terms(target, out))


@dataclass
class ConformalData:
    omega: State
    h_dual: Fraction
    central_charge: Fraction


def conformal(M: TruncatedModule) -> ConformalData:
    """Conformal vector, dual Coxeter number and central charge.

    omega = 1/(2(k+h)) sum_i a^i(-1) b^i(-1) |0> over dual bases of the
    form; the central charge is extracted from [L(2), L(-2)]|0> =
    (4 L(0) + c/2)|0> rather than assumed from a closed formula.
    """
    if M.N < 2:
        raise CutoffError("conformal data needs cutoff >= 2")
    h = dual_coxeter(M.algebra)
    if M.k == -h:
        raise NoConformalStructure(f"critical level k = -h_dual = {-h}")
    pair = dual_basis_pair(M.algebra)
    calc = M.calculus
    total: dict[Monomial, Fraction] = {}
    # the invariant tensor is sum_i b^i (x) a^i for (a^i|b^j) = delta_ij
    for a, b in zip(pair.a, pair.b):
        terms = calc.apply_vector_mode(dict(a.entries), -1, {VACUUM: ONE})
        terms = calc.apply_vector_mode(dict(b.entries), -1, terms)
        for mono, c in terms.items():
            val = total.get(mono, ZERO) + c
            if val:
                total[mono] = val
            else:
                total.pop(mono, None)
    scale = ONE / (2 * (M.k + h))
    omega = State(M, 2, {m: scale * c for m, c in total.items()})
    lm2 = field_coeff(M, omega, -1, M.vacuum())
    l2lm2 = field_coeff(M, omega, 3, lm2)
    c_charge = 2 * l2lm2.coefficient(VACUUM)
    return ConformalData(omega=omega, h_dual=h, central_charge=c_charge)


def virasoro_mode(M: TruncatedModule, conf: ConformalData, n: int, s: State) -> State:
    """L(n) s = (omega)_{n+1} s."""
    return field_coeff(M, conf.omega, n + 1, s)


def weight_one_bracket(M: TruncatedModule, u: State, v: State) -> State:
    if u.grade != 1 or v.grade != 1:
        raise ValueError("weight-one bracket requires grade-1 states")
    return field_coeff(M, u, 0, v)


def weight_one_form(M: TruncatedModule, u: State, v: State) -> Fraction:
    if u.grade != 1 or v.grade != 1:
        raise ValueError("weight-one form requires grade-1 states")
    return field_coeff(M, u, 1, v).coefficient(VACUUM)


def _binomial(m: int, i: int) -> Fraction:
    """C(m, i) for integer m of any sign and i >= 0."""
    num = ONE
    for j in range(i):
        num *= Fraction(m - j)
    for j in range(2, i + 1):
        num /= j
    return num


def commutator_identity_check(M: TruncatedModule, u: State, v: State, w: State,
                              m: int, n: int) -> bool:
    """Exact check of the mode-commutator identity

    u_m v_n w - (-1)^{[u][v]} v_m u_n w = sum_i C(m, i) (u_i v)_{m+n-i} w.
    """
    sign = -ONE if (u.parity() and v.parity()) else ONE
    lhs = field_coeff(M, u, m, field_coeff(M, v, n, w)).plus(
        field_coeff(M, v, m, field_coeff(M, u, n, w)), -sign
    )
    rhs = State(M, max(u.grade + v.grade + w.grade - m - n - 2, 0), {})
    for i in range(0, u.grade + v.grade):
        coeff = _binomial(m, i)
        if not coeff:
            continue
        uiv = field_coeff(M, u, i, v)
        if uiv.is_zero():
            continue
        rhs = rhs.plus(field_coeff(M, uiv, m + n - i, w), coeff)
    return lhs.plus(rhs, -ONE).is_zero()


def _raising_indices(M: TruncatedModule) -> list[int]:
    real = M.realization
    if real is None:
        raise ValueError("singular-vector test needs a realization (simple roots)")
    # highest-weight condition with respect to the even-part Borel: the
    # ideal generators e_theta(-1)^{k+1}|0> are highest for the even
    # subalgebra but not for the full super simple system (theta plus
    # the odd simple root is again a root)
    return real.even_simple_indices or real.raising_simple_indices


def is_singular(M: TruncatedModule, s: State) -> bool:
    """True iff s is annihilated by all strictly positive modes and by
    the raising zero-modes of the even-part simple roots."""
    raising = _raising_indices(M)
    if s.is_zero():
        return True
    for n in range(1, s.grade + 1):
        for g in range(M.algebra.dim):
            if not mode_action(M, g, n, s).is_zero():
                return False
    for g in raising:
        if not mode_action(M, g, 0, s).is_zero():
            return False
    return True


def singular_vectors(M: TruncatedModule, m: int) -> list[State]:
    """Basis of the space of singular states in grade m."""
    raising = _raising_indices(M)
    basis = M.grade_basis(m)
    dim = len(basis)
    if dim == 0 or m == 0:
        return []
    conditions: list[dict[int, Fraction]] = []

    def add_map(g: int, n: int):
        target = m - n
        images = []
        for mono in basis:
            st = mode_action(M, g, n, M.state(m, {mono: ONE}))
            images.append(st)
        tgt_index = {mo: i for i, mo in enumerate(M.grade_basis(target))}
        rows: dict[int, dict[int, Fraction]] = {}
        for col, st in enumerate(images):
            for mono, c in st.terms.items():
                rows.setdefault(tgt_index[mono], {})[col] = c
        conditions.extend(rows.values())

    for n in range(1, m + 1):
        for g in range(M.algebra.dim):
            add_map(g, n)
    for g in raising:
        add_map(g, 0)

    ech = Echelon(dim)
    for row in conditions:
        ech.insert(row)
    pivot_cols = set(ech.pivots)
    free_cols = [c for c in range(dim) if c not in pivot_cols]
    out = []
    for fc in free_cols:
        # rows are fully reduced, so the kernel vector reads off directly
        vec = {fc: ONE}
        for col, ridx in ech.pivots.items():
            c = ech.rows[ridx].get(fc)
            if c:
                vec[col] = -c
        out.append(M.state(m, {basis[i]: c for i, c in vec.items()}))
    return out


def zhu_circle(M: TruncatedModule, u: State, v: State) -> dict[int, State]:
    """u o v = sum_i C(wt u, i) u_{i-2} v, as a map grade -> component."""
    return _zhu_sum(M, u, v, -2)


def zhu_star(M: TruncatedModule, u: State, v: State) -> dict[int, State]:
    """u * v = sum_i C(wt u, i) u_{i-1} v, as a map grade -> component."""
    return _zhu_sum(M, u, v, -1)


def _zhu_sum(M: TruncatedModule, u: State, v: State, shift: int) -> dict[int, State]:
    top = u.grade + v.grade - shift - 1
    if top > M.N:
        raise CutoffError(f"top component grade {top} exceeds cutoff {M.N}")
    out: dict[int, State] = {}
    for i in range(0, u.grade + 1):
        coeff = _binomial(u.grade, i)
        if not coeff:
            continue
        comp = field_coeff(M, u, i + shift, v).scaled(coeff)
        if comp.is_zero():
            continue
        grade = u.grade + v.grade - (i + shift) - 1
        out[grade] = out.get(grade, State(M, grade, {})).plus(comp)
    return {g: s for g, s in out.items() if not s.is_zero()}
