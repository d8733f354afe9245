"""Generic finite-dimensional Lie superalgebras from structure constants.

The structure constants are the source of truth; the matrix realizations
in :mod:`supervoa.realizations` compile down to them.  Axiom checking,
invariant-form verification, root decompositions and the Casimir-derived
dual Coxeter number all run in exact rational arithmetic.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .linalg import (
    DimensionError,
    ONE,
    Scalar,
    SparseVec,
    ZERO,
    invert_dense,
    scalar_to_str,
)

EVEN, ODD = 0, 1


class LieSuperalgebra:
    """Z2-graded algebra given by basis, parity, brackets and a form.

    ``brackets`` maps ``(i, j)`` to the sparse expansion of ``[x_i, x_j]``
    in the basis; pairs with zero bracket are omitted.  ``form`` is the
    dense Gram matrix of the even supersymmetric invariant bilinear form.
    Instances are immutable after construction.
    """

    def __init__(self, dim: int, parity, brackets, form, labels=None, name: str = ""):
        self.dim = dim
        self.parity: tuple[int, ...] = tuple(parity)
        self.brackets: dict[tuple[int, int], dict[int, Fraction]] = {
            k: dict(v) for k, v in brackets.items() if v
        }
        self.form: list[list[Fraction]] = [list(map(Fraction, row)) for row in form]
        self.labels: list[str] = list(labels) if labels else [f"x{i}" for i in range(dim)]
        self.name = name

    def bracket_basis(self, i: int, j: int) -> dict[int, Fraction]:
        return self.brackets.get((i, j), {})

    def even_indices(self) -> list[int]:
        return [i for i in range(self.dim) if self.parity[i] == EVEN]

    def odd_indices(self) -> list[int]:
        return [i for i in range(self.dim) if self.parity[i] == ODD]

    def superdimension(self) -> int:
        return len(self.even_indices()) - len(self.odd_indices())

    def to_json(self) -> dict:
        return {
            "name": self.name,
            "dim": self.dim,
            "parity": ["even" if p == EVEN else "odd" for p in self.parity],
            "basis_labels": self.labels,
            "brackets": {
                f"{i},{j}": {str(l): scalar_to_str(c) for l, c in sorted(comps.items())}
                for (i, j), comps in sorted(self.brackets.items())
            },
            "form": [[scalar_to_str(c) for c in row] for row in self.form],
        }


def bracket(g: LieSuperalgebra, x: SparseVec, y: SparseVec) -> SparseVec:
    """Bilinear extension of the structure constants."""
    if x.dim != g.dim or y.dim != g.dim:
        raise DimensionError("vector dimension does not match the algebra")
    out: dict[int, Fraction] = {}
    for i, a in x.entries.items():
        for j, b in y.entries.items():
            comps = g.brackets.get((i, j))
            if not comps:
                continue
            ab = a * b
            for l, c in comps.items():
                v = out.get(l, ZERO) + ab * c
                if v:
                    out[l] = v
                else:
                    out.pop(l, None)
    res = SparseVec(g.dim)
    res.entries = out
    return res


def form_value(g: LieSuperalgebra, x: SparseVec, y: SparseVec) -> Fraction:
    val = ZERO
    for i, a in x.entries.items():
        row = g.form[i]
        for j, b in y.entries.items():
            val += a * b * row[j]
    return val


def basis_vec(g: LieSuperalgebra, i: int) -> SparseVec:
    return SparseVec(g.dim, {i: ONE})


@dataclass(frozen=True)
class Violation:
    kind: str
    where: tuple
    detail: str


@dataclass
class AxiomReport:
    violations: list[Violation] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations

    def add(self, kind: str, where: tuple, detail: str):
        self.violations.append(Violation(kind, where, detail))

    def to_json(self) -> dict:
        return {
            "ok": self.ok,
            "violations": [
                {"kind": v.kind, "where": list(v.where), "detail": v.detail}
                for v in self.violations
            ],
        }


def verify_axioms(g: LieSuperalgebra) -> AxiomReport:
    """Exhaustive axiom suite over all basis pairs and triples.

    Checks super-skew-symmetry, the graded Jacobi identity, and that the
    form is even, supersymmetric, invariant and nondegenerate.
    Violations are collected, not raised.
    """
    rep = AxiomReport()
    d = g.dim
    par = g.parity
    vecs = [basis_vec(g, i) for i in range(d)]
    brk: list[list[SparseVec]] = [
        [bracket(g, vecs[i], vecs[j]) for j in range(d)] for i in range(d)
    ]

    for i in range(d):
        for j in range(d):
            sign = -ONE if not (par[i] and par[j]) else ONE
            diff = brk[i][j].plus(brk[j][i], -sign)
            if not diff.is_zero():
                rep.add("super_skew", (i, j), f"[x{i},x{j}] + (-1)^pp [x{j},x{i}] != 0")
            # parity homogeneity of the bracket
            want = (par[i] + par[j]) & 1
            for l in brk[i][j].entries:
                if par[l] != want:
                    rep.add("parity", (i, j, l), "bracket not parity-homogeneous")

    for i in range(d):
        for j in range(d):
            for l in range(d):
                # [x_i,[x_j,x_l]] = [[x_i,x_j],x_l] + (-1)^{p_i p_j}[x_j,[x_i,x_l]]
                lhs = bracket(g, vecs[i], brk[j][l])
                t1 = bracket(g, brk[i][j], vecs[l])
                t2 = bracket(g, vecs[j], bracket(g, vecs[i], vecs[l]))
                sign = -ONE if (par[i] and par[j]) else ONE
                diff = lhs.plus(t1, -ONE).plus(t2, -sign)
                if not diff.is_zero():
                    rep.add("jacobi", (i, j, l), "graded Jacobi identity fails")

    for i in range(d):
        for j in range(d):
            fij = g.form[i][j]
            if par[i] != par[j] and fij:
                rep.add("form_even", (i, j), "form nonzero on opposite parities")
            sign = -ONE if (par[i] and par[j]) else ONE
            if fij != sign * g.form[j][i]:
                rep.add("form_supersym", (i, j), "form not supersymmetric")

    for i in range(d):
        for j in range(d):
            for l in range(d):
                # ([x_i,x_j]|x_l) = (x_i|[x_j,x_l])
                lhs = sum((c * g.form[m][l] for m, c in brk[i][j].entries.items()), ZERO)
                rhs = sum((g.form[i][m] * c for m, c in brk[j][l].entries.items()), ZERO)
                if lhs != rhs:
                    rep.add("form_invariant", (i, j, l), "([x,y]|z) != (x|[y,z])")

    if invert_dense(g.form) is None:
        rep.add("form_nondegenerate", (), "Gram matrix singular")
    return rep


@dataclass(frozen=True)
class DualBasisPair:
    """Two vector families with (a^i | b^j) = delta_ij."""

    a: tuple[SparseVec, ...]
    b: tuple[SparseVec, ...]


def dual_basis_pair(g: LieSuperalgebra, order: list[int] | None = None) -> DualBasisPair:
    """Dual bases via the exact Gram-matrix inverse.

    ``order`` permutes the b-side basis, which permutes/retargets the
    a-side accordingly; any order yields a valid dual pair.
    """
    idx = order if order is not None else list(range(g.dim))
    gram = [[g.form[i][j] for j in idx] for i in idx]
    inv = invert_dense(gram)
    if inv is None:
        raise ValueError("bilinear form is degenerate")
    b = tuple(basis_vec(g, i) for i in idx)
    a = tuple(
        SparseVec(g.dim, {idx[l]: inv[r][l] for l in range(g.dim) if inv[r][l]})
        for r in range(g.dim)
    )
    return DualBasisPair(a=a, b=b)


def casimir_adjoint(g: LieSuperalgebra, pair: DualBasisPair, x: SparseVec) -> SparseVec:
    """Casimir sum_i [b^i, [a^i, x]] acting in the adjoint representation.

    With the pair normalized as (a^i | b^j) = delta_ij, the invariant
    element of g (x) g is sum_i b^i (x) a^i; the supersymmetry of the
    form makes the opposite order fail to be invariant on the odd part.
    """
    out = SparseVec(g.dim)
    for ai, bi in zip(pair.a, pair.b):
        out = out.plus(bracket(g, bi, bracket(g, ai, x)))
    return out


def dual_coxeter(g: LieSuperalgebra, pair: DualBasisPair | None = None) -> Scalar:
    """Half the Casimir eigenvalue on the adjoint representation.

    Verifies that the Casimir acts as a scalar on every basis vector and
    raises otherwise (non-simple algebra, or a wrong form).
    """
    pair = pair or dual_basis_pair(g)
    eigen: Fraction | None = None
    for j in range(g.dim):
        img = casimir_adjoint(g, pair, basis_vec(g, j))
        lam = img.get(j)
        residue = img.plus(basis_vec(g, j), -lam)
        if not residue.is_zero():
            raise ValueError("Casimir does not act as a scalar: not simple or wrong form")
        if eigen is None:
            eigen = lam
        elif eigen != lam:
            raise ValueError("Casimir eigenvalue not constant: not simple or wrong form")
    assert eigen is not None
    return eigen / 2


@dataclass(frozen=True)
class Root:
    functional: tuple[Fraction, ...]  # values on the Cartan basis elements
    parity: int
    vector_index: int


@dataclass
class RootDatum:
    """Cartan subalgebra, roots with parities, and selected data.

    ``coordinates`` optionally names presentation functionals (eps/alpha
    conventions) as tuples of values on the Cartan basis, used by the
    JSON export and the paper-table tests.
    """

    cartan_indices: tuple[int, ...]
    roots: list[Root]
    simple_root_indices: list[int] = field(default_factory=list)  # indices into roots
    highest_root_index: int | None = None
    coordinates: dict[str, tuple[Fraction, ...]] = field(default_factory=dict)

    def root_by_vector(self, vector_index: int) -> Root:
        for r in self.roots:
            if r.vector_index == vector_index:
                return r
        raise KeyError(vector_index)

    def even_roots(self) -> list[Root]:
        return [r for r in self.roots if r.parity == EVEN]

    def odd_roots(self) -> list[Root]:
        return [r for r in self.roots if r.parity == ODD]

    def to_json(self, g: LieSuperalgebra) -> dict:
        return {
            "cartan": [g.labels[i] for i in self.cartan_indices],
            "roots": [
                {
                    "functional": [scalar_to_str(c) for c in r.functional],
                    "parity": "even" if r.parity == EVEN else "odd",
                    "vector": g.labels[r.vector_index],
                }
                for r in self.roots
            ],
            "simple_roots": [
                [scalar_to_str(c) for c in self.roots[i].functional]
                for i in self.simple_root_indices
            ],
            "highest_root": None
            if self.highest_root_index is None
            else [scalar_to_str(c) for c in self.roots[self.highest_root_index].functional],
        }


class UnsupportedCartanError(ValueError):
    """The selected Cartan does not act diagonally on the chosen basis."""


def root_decomposition(g: LieSuperalgebra, cartan: list[int]) -> RootDatum:
    """Decompose g into ad-eigenspaces of the selected Cartan indices.

    Requires every non-Cartan basis vector to be a simultaneous
    eigenvector (exact rational eigenvalues), which holds for every
    realization shipped with this package.
    """
    cartan = list(cartan)
    cset = set(cartan)
    for a in cartan:
        for b in cartan:
            if g.brackets.get((a, b)):
                raise UnsupportedCartanError("selected indices do not span an abelian subalgebra")
    roots: list[Root] = []
    for j in range(g.dim):
        if j in cset:
            continue
        values = []
        for h in cartan:
            img = g.brackets.get((h, j), {})
            lam = img.get(j, ZERO)
            rest = {l: c for l, c in img.items() if l != j}
            if rest:
                raise UnsupportedCartanError(
                    f"basis vector {j} is not an ad-eigenvector of Cartan element {h}"
                )
            values.append(lam)
        functional = tuple(values)
        if all(v == 0 for v in functional):
            raise UnsupportedCartanError(f"non-Cartan basis vector {j} has zero weight")
        roots.append(Root(functional=functional, parity=g.parity[j], vector_index=j))
    return RootDatum(cartan_indices=tuple(cartan), roots=roots)


def root_inner_products(
    d: RootDatum, form: list[list[Fraction]]
) -> dict[tuple[int, int], Fraction]:
    """Inner products of all root functionals under the induced form.

    The form on the dual is induced by inverting the Cartan Gram matrix.
    """
    gram = [[form[a][b] for b in d.cartan_indices] for a in d.cartan_indices]
    inv = invert_dense(gram)
    if inv is None:
        raise ValueError("form restricted to the Cartan subalgebra is degenerate")
    out: dict[tuple[int, int], Fraction] = {}
    n = len(d.cartan_indices)
    for i, r in enumerate(d.roots):
        for j, s in enumerate(d.roots):
            val = ZERO
            for a in range(n):
                if not r.functional[a]:
                    continue
                for b in range(n):
                    if s.functional[b]:
                        val += r.functional[a] * inv[a][b] * s.functional[b]
            out[(i, j)] = val
    return out


def functional_inner_product(
    d: RootDatum,
    form: list[list[Fraction]],
    f1: tuple[Fraction, ...],
    f2: tuple[Fraction, ...],
) -> Fraction:
    """Induced inner product of two arbitrary Cartan functionals."""
    gram = [[form[a][b] for b in d.cartan_indices] for a in d.cartan_indices]
    inv = invert_dense(gram)
    if inv is None:
        raise ValueError("form restricted to the Cartan subalgebra is degenerate")
    n = len(d.cartan_indices)
    val = ZERO
    for a in range(n):
        if not f1[a]:
            continue
        for b in range(n):
            if f2[b]:
                val += f1[a] * inv[a][b] * f2[b]
    return val
