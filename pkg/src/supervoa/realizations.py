"""Concrete matrix realizations of the shipped superalgebras.

Each constructor builds an explicit block-supermatrix basis, compiles it
down to structure constants (the generic engine in
:mod:`supervoa.liesuper` only ever sees those), and assembles the root
datum with the eps-coordinate presentation used by the JSON exports.

Basis ordering convention, fixed once for reproducibility: Cartan
elements first, then even root vectors sorted lexicographically by root
functional, then odd root vectors in the same order.  Root vectors are
realized with matrix entries in {0, +-1}.

Form conventions: the super families carry (X|Y) = -Str(XY); for
sl(1|n) and osp(2|2n) this is the normalization of the source tables,
and for osp(1|2n) it restricts to the normalized invariant form on the
even part sp(2n) (long roots have squared length 2), which pins the odd
part by invariance.  The purely even helpers sl(n) and sp(2n) use the
defining trace form, which is already normalized.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .liesuper import (
    EVEN,
    ODD,
    LieSuperalgebra,
    Root,
    RootDatum,
    root_decomposition,
)
from .linalg import ONE, ZERO, scalar_to_str

Matrix = list[list[Fraction]]


def _zeros(size: int) -> Matrix:
    return [[ZERO] * size for _ in range(size)]


def _elem(size: int, i: int, j: int, c: Fraction = ONE) -> Matrix:
    m = _zeros(size)
    m[i][j] = Fraction(c)
    return m


def _madd(a: Matrix, b: Matrix, coeff: Fraction = ONE) -> Matrix:
    return [[x + coeff * y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def _mmul(a: Matrix, b: Matrix) -> Matrix:
    size = len(a)
    out = _zeros(size)
    for i in range(size):
        ra = a[i]
        for k in range(size):
            c = ra[k]
            if c:
                rb = b[k]
                ro = out[i]
                for j in range(size):
                    if rb[j]:
                        ro[j] += c * rb[j]
    return out


def _is_zero(a: Matrix) -> bool:
    return all(not x for row in a for x in row)


@dataclass(frozen=True)
class SuperMatrix:
    """Block supermatrix with sizes (m|n); parity read off block position."""

    m: int
    n: int
    rows: tuple[tuple[Fraction, ...], ...]

    @property
    def size(self) -> int:
        return self.m + self.n

    def supertrace(self) -> Fraction:
        return sum((self.rows[i][i] for i in range(self.m)), ZERO) - sum(
            (self.rows[i][i] for i in range(self.m, self.size)), ZERO
        )

    def supertranspose(self) -> "SuperMatrix":
        s, m = self.size, self.m
        rows = tuple(
            tuple(
                -self.rows[j][i] if (i >= m and j < m) else self.rows[j][i]
                for j in range(s)
            )
            for i in range(s)
        )
        return SuperMatrix(self.m, self.n, rows)


def _supermatrix(m: int, n: int, mat: Matrix) -> SuperMatrix:
    return SuperMatrix(m, n, tuple(tuple(row) for row in mat))


def supertrace_product(m: int, a: Matrix, b: Matrix) -> Fraction:
    """Str(ab) for block sizes (m | size-m), without forming the product."""
    size = len(a)
    val = ZERO
    for i in range(size):
        s = ZERO
        for k in range(size):
            if a[i][k] and b[k][i]:
                s += a[i][k] * b[k][i]
        val += s if i < m else -s
    return val


class _CoordSolver:
    """Expresses matrices in a fixed basis by exact elimination."""

    def __init__(self, basis: list[Matrix]):
        self.size = len(basis[0])
        self.rows: list[tuple[dict[int, Fraction], dict[int, Fraction]]] = []
        self.pivots: dict[int, int] = {}
        for idx, mat in enumerate(basis):
            vec = self._flatten(mat)
            work, coords = self._reduce(vec)
            if not work:
                raise ValueError("basis matrices are linearly dependent")
            lead = min(work)
            inv = ONE / work[lead]
            row = {j: inv * c for j, c in work.items()}
            track = {j: inv * c for j, c in coords.items()}
            track[idx] = track.get(idx, ZERO) + inv
            self.pivots[lead] = len(self.rows)
            self.rows.append((row, track))

    def _flatten(self, mat: Matrix) -> dict[int, Fraction]:
        s = self.size
        return {i * s + j: mat[i][j] for i in range(s) for j in range(s) if mat[i][j]}

    def _reduce(self, vec: dict[int, Fraction]):
        work = dict(vec)
        coords: dict[int, Fraction] = {}
        processed = -1
        while True:
            col = min(
                (j for j in work if j > processed and j in self.pivots), default=None
            )
            if col is None:
                return work, coords
            row, track = self.rows[self.pivots[col]]
            f = work[col]
            for j, c in row.items():
                x = work.get(j, ZERO) - f * c
                if x:
                    work[j] = x
                else:
                    work.pop(j, None)
            for j, c in track.items():
                x = coords.get(j, ZERO) - f * c
                if x:
                    coords[j] = x
                else:
                    coords.pop(j, None)
            processed = col

    def express(self, mat: Matrix) -> dict[int, Fraction]:
        work, coords = self._reduce(self._flatten(mat))
        if work:
            raise ValueError("matrix does not lie in the span of the basis")
        return {j: -c for j, c in coords.items()}


def _eps_string(coords: tuple[Fraction, ...], names: list[str]) -> str:
    parts = []
    for c, nm in zip(coords, names):
        if not c:
            continue
        sign = "-" if c < 0 else ("+" if parts else "")
        mag = -c if c < 0 else c
        parts.append(f"{sign}{'' if mag == 1 else mag}{nm}")
    return "".join(parts) or "0"


@dataclass
class Realization:
    """A compiled algebra together with its root presentation."""

    family: str
    n: int
    algebra: LieSuperalgebra
    roots: RootDatum
    eps_names: list[str]
    eps: dict[str, tuple[Fraction, ...]]  # functionals on the Cartan basis
    root_eps: dict[int, tuple[Fraction, ...]]  # vector index -> eps coordinates
    theta_index: int  # basis index of the highest even root vector
    raising_simple_indices: list[int]  # basis indices of simple-root vectors
    even_simple_indices: list[int] | None = None  # simple roots of the even part
    t_values: dict[int, Fraction] = field(default_factory=dict)
    supertranspose_map: dict[int, dict[int, Fraction]] = field(default_factory=dict)

    def to_json(self) -> dict:
        data = self.algebra.to_json()
        data["family"] = self.family
        data["rank_parameter"] = self.n
        data["roots"] = [
            {
                "eps_coords": [scalar_to_str(c) for c in self.root_eps[r.vector_index]],
                "label": _eps_string(self.root_eps[r.vector_index], self.eps_names),
                "parity": "even" if r.parity == EVEN else "odd",
                "vector": self.algebra.labels[r.vector_index],
            }
            for r in self.roots.roots
        ]
        data["simple_roots"] = [
            _eps_string(self.root_eps[i], self.eps_names)
            for i in self.raising_simple_indices
        ]
        data["highest_even_root"] = _eps_string(
            self.root_eps[self.theta_index], self.eps_names
        )
        return data


def _assemble(
    family: str,
    n_param: int,
    name: str,
    msize: int,
    nsize: int,
    cartan: list[tuple[str, Matrix]],
    even_vectors: list[tuple[tuple[Fraction, ...], Matrix]],
    odd_vectors: list[tuple[tuple[Fraction, ...], Matrix]],
    eps_names: list[str],
    eps_diag_pos: list[int],
    simple_eps: list[tuple[Fraction, ...]],
    theta_eps: tuple[Fraction, ...],
    trace_form: bool = False,
    even_simple_eps: list[tuple[Fraction, ...]] | None = None,
) -> Realization:
    even_vectors = sorted(even_vectors, key=lambda t: t[0])
    odd_vectors = sorted(odd_vectors, key=lambda t: t[0])
    mats = [m for _, m in cartan] + [m for _, m in even_vectors] + [m for _, m in odd_vectors]
    ncartan = len(cartan)
    parity = [EVEN] * (ncartan + len(even_vectors)) + [ODD] * len(odd_vectors)
    labels = [nm for nm, _ in cartan]
    labels += [f"e[{_eps_string(c, eps_names)}]" for c, _ in even_vectors]
    labels += [f"f[{_eps_string(c, eps_names)}]" for c, _ in odd_vectors]
    root_eps_list = [c for c, _ in even_vectors] + [c for c, _ in odd_vectors]

    solver = _CoordSolver(mats)
    dim = len(mats)
    brackets: dict[tuple[int, int], dict[int, Fraction]] = {}
    for i in range(dim):
        for j in range(dim):
            sign = -ONE if not (parity[i] and parity[j]) else ONE
            br = _madd(_mmul(mats[i], mats[j]), _mmul(mats[j], mats[i]), sign)
            if _is_zero(br):
                continue
            brackets[(i, j)] = solver.express(br)
    form = [
        [
            supertrace_product(msize, mats[i], mats[j])
            * (ONE if trace_form else -ONE)
            for j in range(dim)
        ]
        for i in range(dim)
    ]
    if trace_form and msize and not nsize:
        # purely even: defining trace form, Str = tr
        pass
    alg = LieSuperalgebra(dim, parity, brackets, form, labels, name)

    cartan_indices = list(range(ncartan))
    datum = root_decomposition(alg, cartan_indices)
    eps = {
        nm: tuple(cartan[c][1][pos][pos] for c in range(ncartan))
        for nm, pos in zip(eps_names, eps_diag_pos)
    }
    root_eps = {}
    for offset, coords in enumerate(root_eps_list):
        root_eps[ncartan + offset] = coords
    # cross-check: symbolic eps coordinates reproduce the ad-eigenvalues
    for r in datum.roots:
        coords = root_eps[r.vector_index]
        computed = tuple(
            sum((c * eps[nm][h] for c, nm in zip(coords, eps_names)), ZERO)
            for h in range(ncartan)
        )
        if computed != r.functional:
            raise AssertionError(
                f"eps presentation mismatch for basis vector {r.vector_index}"
            )
    datum.coordinates = {nm: eps[nm] for nm in eps_names}

    def _find(coords: tuple[Fraction, ...]) -> int:
        for idx, c in root_eps.items():
            if c == coords:
                return idx
        raise KeyError(f"no root vector with eps coordinates {coords}")

    simple_vec = [_find(c) for c in simple_eps]
    even_simple_vec = [_find(c) for c in (even_simple_eps or simple_eps)]
    theta_vec = _find(theta_eps)
    datum.simple_root_indices = [
        next(k for k, r in enumerate(datum.roots) if r.vector_index == v)
        for v in simple_vec
    ]
    datum.highest_root_index = next(
        k for k, r in enumerate(datum.roots) if r.vector_index == theta_vec
    )

    st_map = {i: solver.express(_st(msize, mats[i])) for i in range(dim)}

    return Realization(
        family=family,
        n=n_param,
        algebra=alg,
        roots=datum,
        eps_names=eps_names,
        eps=eps,
        root_eps=root_eps,
        theta_index=theta_vec,
        raising_simple_indices=simple_vec,
        even_simple_indices=even_simple_vec,
        supertranspose_map=st_map,
    )


def _st(m: int, mat: Matrix) -> Matrix:
    size = len(mat)
    return [
        [
            -mat[j][i] if (i >= m and j < m) else mat[j][i]
            for j in range(size)
        ]
        for i in range(size)
    ]


def make_sl1n(n: int) -> Realization:
    """sl(1|n): supertraceless block matrices on C^{1|n}, form -Str.

    Even part sl_n + C h with h = diag(1, (1/n)I); odd part of dimension
    2n with roots +-(eps0 - eps_i).
    """
    if n < 2:
        raise ValueError("sl(1|n) requires n >= 2")
    size = n + 1
    eps_names = [f"eps{i}" for i in range(n + 1)]

    h = _zeros(size)
    h[0][0] = ONE
    for i in range(1, size):
        h[i][i] = Fraction(1, n)
    cartan = [("h", h)]
    for i in range(1, n):
        m = _zeros(size)
        m[i][i] = ONE
        m[i + 1][i + 1] = -ONE
        cartan.append((f"h{i}", m))

    def coord(*pairs) -> tuple[Fraction, ...]:
        c = [ZERO] * (n + 1)
        for idx, val in pairs:
            c[idx] = Fraction(val)
        return tuple(c)

    even = [
        (coord((i, 1), (j, -1)), _elem(size, i, j))
        for i in range(1, size)
        for j in range(1, size)
        if i != j
    ]
    odd = [(coord((0, 1), (j, -1)), _elem(size, 0, j)) for j in range(1, size)]
    odd += [(coord((0, -1), (j, 1)), _elem(size, j, 0)) for j in range(1, size)]

    simple = [coord((0, 1), (1, -1))] + [
        coord((i, 1), (i + 1, -1)) for i in range(1, n)
    ]
    even_simple = [coord((i, 1), (i + 1, -1)) for i in range(1, n)]
    theta = coord((1, 1), (n, -1))
    return _assemble(
        "sl1n", n, f"sl(1|{n})", 1, n, cartan, even, odd,
        eps_names, list(range(n + 1)), simple, theta,
        even_simple_eps=even_simple,
    )


def make_osp2_2n(n: int) -> Realization:
    """osp(2|2n): the displayed four-block form on C^{2|2n}, form -Str.

    Even part sp(2n) + C h; odd part of dimension 4n with roots
    +-eps1 +- eps_i (3 <= i <= n+2).
    """
    if n < 1:
        raise ValueError("osp(2|2n) requires n >= 1")
    size = 2 + 2 * n
    eps_names = ["eps1"] + [f"eps{i + 3}" for i in range(n)]

    h = _zeros(size)
    h[0][0] = ONE
    h[1][1] = -ONE
    cartan = [("h", h)]
    for i in range(n):
        m = _zeros(size)
        m[2 + i][2 + i] = ONE
        m[2 + n + i][2 + n + i] = -ONE
        cartan.append((f"d{i + 1}", m))

    def coord(*pairs) -> tuple[Fraction, ...]:
        c = [ZERO] * (n + 1)
        for idx, val in pairs:
            c[idx] = Fraction(val)
        return tuple(c)

    even = []
    for i in range(n):
        for j in range(n):
            if i != j:
                m = _madd(_elem(size, 2 + i, 2 + j), _elem(size, 2 + n + j, 2 + n + i), -ONE)
                even.append((coord((1 + i, 1), (1 + j, -1)), m))
    for i in range(n):
        for j in range(i, n):
            if i == j:
                even.append((coord((1 + i, 2)), _elem(size, 2 + i, 2 + n + i)))
                even.append((coord((1 + i, -2)), _elem(size, 2 + n + i, 2 + i)))
            else:
                e = _madd(_elem(size, 2 + i, 2 + n + j), _elem(size, 2 + j, 2 + n + i))
                f = _madd(_elem(size, 2 + n + i, 2 + j), _elem(size, 2 + n + j, 2 + i))
                even.append((coord((1 + i, 1), (1 + j, 1)), e))
                even.append((coord((1 + i, -1), (1 + j, -1)), f))

    odd = []
    for i in range(n):
        y = _madd(_elem(size, 0, 2 + i), _elem(size, 2 + n + i, 1))
        z = _madd(_elem(size, 1, 2 + i), _elem(size, 2 + n + i, 0))
        y1 = _madd(_elem(size, 0, 2 + n + i), _elem(size, 2 + i, 1), -ONE)
        z1 = _madd(_elem(size, 1, 2 + n + i), _elem(size, 2 + i, 0), -ONE)
        odd.append((coord((0, 1), (1 + i, -1)), y))
        odd.append((coord((0, -1), (1 + i, -1)), z))
        odd.append((coord((0, 1), (1 + i, 1)), y1))
        odd.append((coord((0, -1), (1 + i, 1)), z1))

    simple = [coord((0, 1), (1, -1))]
    simple += [coord((1 + i, 1), (2 + i, -1)) for i in range(n - 1)]
    simple += [coord((n, 2))]
    even_simple = simple[1:]
    theta = coord((1, 2))
    return _assemble(
        "osp22n", n, f"osp(2|{2 * n})", 2, 2 * n, cartan, even, odd,
        eps_names, [0] + [2 + i for i in range(n)], simple, theta,
        even_simple_eps=even_simple,
    )


def make_osp1_2n(n: int) -> Realization:
    """osp(1|2n): supermatrices preserving the even supersymmetric form
    on C^{1|2n} with Gram matrix diag(1, J), J the standard symplectic
    form on the odd part.

    Even part sp(2n) with the normalized form (long roots of squared
    length 2); odd part of dimension 2n with roots +-eps_i.  Each even
    root carries t = 2/(alpha|alpha): 1 for long, 2 for short roots.
    """
    if n < 1:
        raise ValueError("osp(1|2n) requires n >= 1")
    size = 1 + 2 * n
    eps_names = [f"eps{i + 1}" for i in range(n)]

    cartan = []
    for i in range(n):
        m = _zeros(size)
        m[1 + i][1 + i] = ONE
        m[1 + n + i][1 + n + i] = -ONE
        cartan.append((f"d{i + 1}", m))

    def coord(*pairs) -> tuple[Fraction, ...]:
        c = [ZERO] * n
        for idx, val in pairs:
            c[idx] = Fraction(val)
        return tuple(c)

    even = []
    for i in range(n):
        for j in range(n):
            if i != j:
                m = _madd(_elem(size, 1 + i, 1 + j), _elem(size, 1 + n + j, 1 + n + i), -ONE)
                even.append((coord((i, 1), (j, -1)), m))
    for i in range(n):
        for j in range(i, n):
            if i == j:
                even.append((coord((i, 2)), _elem(size, 1 + i, 1 + n + i)))
                even.append((coord((i, -2)), _elem(size, 1 + n + i, 1 + i)))
            else:
                e = _madd(_elem(size, 1 + i, 1 + n + j), _elem(size, 1 + j, 1 + n + i))
                f = _madd(_elem(size, 1 + n + i, 1 + j), _elem(size, 1 + n + j, 1 + i))
                even.append((coord((i, 1), (j, 1)), e))
                even.append((coord((i, -1), (j, -1)), f))

    odd = []
    for i in range(n):
        v = _madd(_elem(size, 1 + i, 0), _elem(size, 0, 1 + n + i), -ONE)
        w = _madd(_elem(size, 0, 1 + i), _elem(size, 1 + n + i, 0))
        odd.append((coord((i, 1)), v))
        odd.append((coord((i, -1)), w))

    simple = [coord((i, 1), (i + 1, -1)) for i in range(n - 1)] + [coord((n - 1, 1))]
    even_simple = [coord((i, 1), (i + 1, -1)) for i in range(n - 1)] + [coord((n - 1, 2))]
    theta = coord((0, 2))
    real = _assemble(
        "osp12n", n, f"osp(1|{2 * n})", 1, 2 * n, cartan, even, odd,
        eps_names, [1 + i for i in range(n)], simple, theta,
        even_simple_eps=even_simple,
    )
    # t-values for the even roots: 2/(alpha|alpha)
    from .liesuper import root_inner_products

    prods = root_inner_products(real.roots, real.algebra.form)
    for idx, r in enumerate(real.roots.roots):
        if r.parity == EVEN:
            norm = prods[(idx, idx)]
            real.t_values[r.vector_index] = Fraction(2) / norm
    return real


def make_sl(n: int) -> Realization:
    """sl(n) with the defining trace form ((theta|theta) = 2)."""
    if n < 2:
        raise ValueError("sl(n) requires n >= 2")
    eps_names = [f"eps{i + 1}" for i in range(n)]
    cartan = []
    for i in range(n - 1):
        m = _zeros(n)
        m[i][i] = ONE
        m[i + 1][i + 1] = -ONE
        cartan.append((f"h{i + 1}", m))

    def coord(*pairs) -> tuple[Fraction, ...]:
        c = [ZERO] * n
        for idx, val in pairs:
            c[idx] = Fraction(val)
        return tuple(c)

    even = [
        (coord((i, 1), (j, -1)), _elem(n, i, j))
        for i in range(n)
        for j in range(n)
        if i != j
    ]
    simple = [coord((i, 1), (i + 1, -1)) for i in range(n - 1)]
    theta = coord((0, 1), (n - 1, -1))
    return _assemble(
        "sl", n, f"sl({n})", n, 0, cartan, even, [],
        eps_names, list(range(n)), simple, theta, trace_form=True,
    )


def make_sp(two_n: int) -> Realization:
    """sp(2n) with the defining trace form ((theta|theta) = 2)."""
    if two_n < 2 or two_n % 2:
        raise ValueError("sp(2n) requires an even argument >= 2")
    n = two_n // 2
    size = 2 * n
    eps_names = [f"eps{i + 1}" for i in range(n)]
    cartan = []
    for i in range(n):
        m = _zeros(size)
        m[i][i] = ONE
        m[n + i][n + i] = -ONE
        cartan.append((f"d{i + 1}", m))

    def coord(*pairs) -> tuple[Fraction, ...]:
        c = [ZERO] * n
        for idx, val in pairs:
            c[idx] = Fraction(val)
        return tuple(c)

    even = []
    for i in range(n):
        for j in range(n):
            if i != j:
                m = _madd(_elem(size, i, j), _elem(size, n + j, n + i), -ONE)
                even.append((coord((i, 1), (j, -1)), m))
    for i in range(n):
        for j in range(i, n):
            if i == j:
                even.append((coord((i, 2)), _elem(size, i, n + i)))
                even.append((coord((i, -2)), _elem(size, n + i, i)))
            else:
                e = _madd(_elem(size, i, n + j), _elem(size, j, n + i))
                f = _madd(_elem(size, n + i, j), _elem(size, n + j, i))
                even.append((coord((i, 1), (j, 1)), e))
                even.append((coord((i, -1), (j, -1)), f))
    simple = [coord((i, 1), (i + 1, -1)) for i in range(n - 1)] + [coord((n - 1, 2))]
    theta = coord((0, 2))
    return _assemble(
        "sp", n, f"sp({size})", size, 0, cartan, even, [],
        eps_names, list(range(n)), simple, theta, trace_form=True,
    )


Vec3 = tuple[Fraction, Fraction, Fraction]


def _v3(a, b, c) -> Vec3:
    return (Fraction(a), Fraction(b), Fraction(c))


@dataclass(frozen=True)
class G3RootData:
    """Root and weight data of G(3) in (alpha0, alpha1, alpha2) coordinates."""

    simple_roots: tuple[tuple[Vec3, int], ...]
    pos_even: tuple[Vec3, ...]
    pos_odd: tuple[Vec3, ...]
    gram: tuple[tuple[Fraction, ...], ...]
    weights_v: tuple[Vec3, ...]   # 7-dim module of the G2 factor
    weights_v1: tuple[Vec3, ...]  # 2-dim module of the sl2 factor

    def inner(self, u: Vec3, v: Vec3) -> Fraction:
        return sum(
            (u[i] * self.gram[i][j] * v[j] for i in range(3) for j in range(3)),
            ZERO,
        )

    @property
    def theta2(self) -> Vec3:
        return _v3(0, 2, 3)

    def to_json(self) -> dict:
        def vec(v: Vec3) -> list[str]:
            return [scalar_to_str(c) for c in v]

        return {
            "coordinates": ["alpha0", "alpha1", "alpha2"],
            "simple_roots": [
                {"coords": vec(v), "parity": "even" if p == EVEN else "odd"}
                for v, p in self.simple_roots
            ],
            "positive_even": [vec(v) for v in self.pos_even],
            "positive_odd": [vec(v) for v in self.pos_odd],
            "gram": [[scalar_to_str(c) for c in row] for row in self.gram],
            "weights_V": [vec(v) for v in self.weights_v],
            "weights_V1": [vec(v) for v in self.weights_v1],
            "theta2": vec(self.theta2),
            "theta2_norm": scalar_to_str(self.inner(self.theta2, self.theta2)),
        }


def g3_root_data() -> G3RootData:
    """Exact G(3) root/weight tables.

    G(3) itself is shipped as root data only; structure constants for
    the odd part would need invariant-tensor machinery that nothing in
    this package consumes.
    """
    half = Fraction(1, 2)
    return G3RootData(
        simple_roots=(
            (_v3(half, -1, -2), ODD),
            (_v3(0, 0, 1), EVEN),
            (_v3(0, 1, 0), EVEN),
        ),
        pos_even=(
            _v3(1, 0, 0),
            _v3(0, 1, 0),
            _v3(0, 0, 1),
            _v3(0, 1, 1),
            _v3(0, 1, 2),
            _v3(0, 1, 3),
            _v3(0, 2, 3),
        ),
        pos_odd=(
            _v3(half, 0, 0),
            _v3(half, 0, 1),
            _v3(half, 0, -1),
            _v3(half, 1, 2),
            _v3(half, -1, -2),
            _v3(half, 1, 1),
            _v3(half, -1, -1),
        ),
        gram=(
            (Fraction(-8, 3), ZERO, ZERO),
            (ZERO, Fraction(2), Fraction(-1)),
            (ZERO, Fraction(-1), Fraction(2, 3)),
        ),
        weights_v=(
            _v3(0, 1, 2),
            _v3(0, 1, 1),
            _v3(0, 0, 1),
            _v3(0, 0, 0),
            _v3(0, 0, -1),
            _v3(0, -1, -1),
            _v3(0, -1, -2),
        ),
        weights_v1=(_v3(half, 0, 0), _v3(-half, 0, 0)),
    )
