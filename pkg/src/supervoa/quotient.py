"""Submodule closures and simple quotients of vacuum modules.

Two equivalent routes produce the vacuum ideal generated by the
singular vector e_theta(-1)^{k+1}|0>:

* :func:`ideal_closure` is the literal worklist saturation under all
  modes x(n), n in Z, staying within the cutoff window.  It is the
  reference algorithm and feasible at small truncations.

* The production route factors the ideal as U(negative modes) applied
  to the finite zero-mode module W generated by the singular vector
  (positive modes annihilate a singular vector, so the PBW filtration
  collapses the closure to negative modes only).  Grades are then
  filled in one ascending pass.  For grades whose PBW dimension makes
  exact elimination unreasonable, dimensions are obtained from a mod-p
  echelon squeezed against an exact pairing certificate; see
  :mod:`supervoa.modp` for why the resulting dimensions are exact, not
  probabilistic.

The pairing used for certificates sends states u to the vacuum
coefficient of w(u) where w runs over reversed supertransposed positive
-mode words; its per-grade kernel is the maximal proper submodule, so a
nonsingular q x q Gram minor proves that q chosen monomial classes stay
independent in the simple quotient.
"""

from __future__ import annotations

import warnings
from fractions import Fraction

from .affinevoa import (
    QuotientData,
    State,
    TruncatedModule,
    build_vacuum,
    is_singular,
    singular_vectors,
)
from .linalg import Echelon, ONE, Subspace, SparseVec, ZERO
from .pbw import ModeCalculus, Monomial, PrimeField, VACUUM, is_shallow, monomial_weight
from .realizations import Realization

# Largest top-grade PBW dimension handled by the exact relation echelon.
EXACT_DIM_LIMIT = 1200

TermDict = dict[Monomial, Fraction]


class QuotientNotSimpleWarning(UserWarning):
    """A nonzero singular vector survived in the quotient at this cutoff."""

    def __init__(self, message: str, state: State):
        super().__init__(message)
        self.state = state


def _terms_to_entries(M: TruncatedModule, grade: int, terms: TermDict) -> dict[int, Fraction]:
    idx = M.pbw_index[grade]
    return {idx[mono]: c for mono, c in terms.items()}


def _entries_to_terms(M: TruncatedModule, grade: int, entries: dict[int, Fraction]) -> TermDict:
    basis = M.pbw_basis[grade]
    return {basis[i]: c for i, c in entries.items()}


def zero_mode_closure(M: TruncatedModule, s: State) -> list[TermDict]:
    """Echelon rows spanning the zero-mode submodule generated by s."""
    grade = s.grade
    ech = Echelon(M.pbw_dim(grade))
    rows: list[TermDict] = []
    queue: list[TermDict] = [dict(s.terms)]
    while queue:
        terms = queue.pop()
        if not terms:
            continue
        red = ech.insert_get(_terms_to_entries(M, grade, terms))
        if red is None:
            continue
        red_terms = _entries_to_terms(M, grade, red)
        rows.append(red_terms)
        for g in range(M.algebra.dim):
            queue.append(M.calculus.apply_mode(g, 0, red_terms))
    return rows


def ideal_closure(M: TruncatedModule, generators: list[State], N: int | None = None) -> list[Subspace]:
    """Smallest per-grade family containing the generators and closed
    under every mode action staying within grades [0, N].

    Worklist saturation with echelon deduplication; exact and faithful,
    intended for moderate truncations.
    """
    if N is None:
        N = M.N
    if N > M.N:
        raise ValueError("closure window exceeds the module cutoff")
    echelons = [Echelon(M.pbw_dim(m)) for m in range(N + 1)]
    queue: list[tuple[int, TermDict]] = []
    for s in generators:
        if s.grade > N:
            raise ValueError("generator grade exceeds the closure window")
        red = echelons[s.grade].insert_get(_terms_to_entries(M, s.grade, s.terms))
        if red is not None:
            queue.append((s.grade, _entries_to_terms(M, s.grade, red)))
    while queue:
        grade, terms = queue.pop()
        for n in range(grade - N, grade + 1):
            for g in range(M.algebra.dim):
                image = M.calculus.apply_mode(g, n, terms)
                if not image:
                    continue
                target = grade - n
                red = echelons[target].insert_get(_terms_to_entries(M, target, image))
                if red is not None:
                    queue.append((target, _entries_to_terms(M, target, red)))
    out = []
    for m, ech in enumerate(echelons):
        basis = []
        for row in ech.sorted_rows():
            v = SparseVec(M.pbw_dim(m))
            v.entries = dict(row)
            basis.append(v)
        out.append(Subspace(M.pbw_dim(m), basis))
    return out


def negative_mode_closure(M: TruncatedModule, w_rows: list[TermDict], g0: int,
                          N: int) -> list[Echelon]:
    """Per-grade relation echelons of U(neg modes) . W, grades 0..N."""
    echelons = [Echelon(M.pbw_dim(m)) for m in range(N + 1)]
    if g0 <= N:
        for row in w_rows:
            echelons[g0].insert(_terms_to_entries(M, g0, row))
    for m in range(g0 + 1, N + 1):
        ech = echelons[m]
        for n in range(1, m - g0 + 1):
            src = echelons[m - n]
            for row in src.sorted_rows():
                terms = _entries_to_terms(M, m - n, row)
                for g in range(M.algebra.dim):
                    image = M.calculus.apply_mode(g, -n, terms)
                    if image:
                        ech.insert(_terms_to_entries(M, m, image))
    return echelons


# -- shallow projection ---------------------------------------------------
#
# Monomials with every mode equal to -1 are "shallow".  Applying x(-n)
# with n >= 2 to anything, or x(-1) to a state supported on non-shallow
# monomials, produces only non-shallow monomials (mode merges only go
# deeper), so the shallow projection of the relation grades satisfies a
# self-contained recursion driven by x(-1) alone.  These projections are
# what quotient-by-C2 dimensions reduce to.


def shallow_basis(M: TruncatedModule, m: int) -> list[Monomial]:
    return [mono for mono in M.pbw_basis[m] if is_shallow(mono)]


def shallow_relation_echelons(M: TruncatedModule, w_rows: list[TermDict], g0: int,
                              N: int) -> list[Echelon]:
    """Echelons of the shallow projections of the ideal grades."""
    bases = [shallow_basis(M, m) for m in range(N + 1)]
    indexes = [{mono: i for i, mono in enumerate(b)} for b in bases]
    echelons = [Echelon(len(b)) for b in bases]

    def project(grade: int, terms: TermDict) -> dict[int, Fraction]:
        idx = indexes[grade]
        return {idx[mono]: c for mono, c in terms.items() if mono in idx}

    if g0 <= N:
        for row in w_rows:
            echelons[g0].insert(project(g0, row))
    for m in range(g0 + 1, N + 1):
        prev = echelons[m - 1]
        basis_prev = bases[m - 1]
        for row in prev.sorted_rows():
            lifted = {basis_prev[i]: c for i, c in row.items()}
            for g in range(M.algebra.dim):
                image = M.calculus.apply_mode(g, -1, lifted)
                if image:
                    echelons[m].insert(project(m, image))
    return echelons


# -- pairing certificates ---------------------------------------------------


def _pairing_rows(calc: ModeCalculus, st_map: dict[int, dict[int, Fraction]],
                  cand: Monomial, words: list[Monomial], ring) -> list:
    """Vacuum coefficients of st-words applied to one candidate monomial.

    ``words`` must be sorted; shared prefixes are evaluated once.
    """
    out = [0] * len(words)

    def rec(lo: int, hi: int, depth: int, state):
        if not state:
            return
        i = lo
        while i < hi:
            w = words[i]
            if len(w) == depth:
                out[i] = state.get(VACUUM, 0)
                i += 1
                continue
            mode = w[depth]
            j = i
            while j < hi and len(words[j]) > depth and words[j][depth] == mode:
                j += 1
            n_, g_ = mode
            new_state = calc.apply_vector_mode(st_map[g_], -n_, state)
            rec(i, j, depth + 1, new_state)
            i = j

    rec(0, len(words), 0, {cand: ring.one})
    return out


def _gram_certificate(M: TruncatedModule, real: Realization, candidates: list[Monomial],
                      calc_p: ModeCalculus, p: int) -> bool:
    """True when the mod-p pairing Gram on the candidates is nonsingular.

    Nonsingular mod p implies the exact Gram is nonsingular, which
    proves the candidate classes are linearly independent in the simple
    quotient: the pairing kernel per grade is the maximal submodule.
    """
    from .modp import nonsingular_mod_p

    words = sorted(candidates)
    order = {w: i for i, w in enumerate(words)}
    matrix = []
    for candidate in candidates:
        row = _pairing_rows(calc_p, real.supertranspose_map, candidate, words, calc_p.ring)
        matrix.append([row[order[w]] for w in words])
    return nonsingular_mod_p(matrix, p)


class _RetryPrime(Exception):
    pass


def certified_quotient_dims(M: TruncatedModule, real: Realization,
                            w_rows: list[TermDict], g0: int, N: int) -> tuple[list[int], str]:
    """Exact quotient dimensions for grades 0..N via the mod-p squeeze.

    Returns the dimensions and a note naming the certifying prime.
    Raises ArithmeticError when no prime in the fixed list certifies
    (which would indicate the ideal is not maximal at this truncation).
    """
    from .modp import ModPEchelon, PRIMES

    last_error: Exception | None = None
    for p in PRIMES:
        try:
            dims = _certified_attempt(M, real, w_rows, g0, N, p, ModPEchelon)
            return dims, f"certified mod p={p}"
        except (_RetryPrime, ZeroDivisionError) as exc:
            last_error = exc
            continue
    raise ArithmeticError(
        f"quotient dimensions could not be certified with primes {PRIMES}: {last_error}"
    )


def _certified_attempt(M, real, w_rows, g0, N, p, ModPEchelon) -> list[int]:
    ring = PrimeField(p)
    calc = ModeCalculus(M.algebra, M.k, ring)
    dims = [M.pbw_dim(m) for m in range(min(g0, N + 1))]
    accepted: dict[int, list[dict]] = {}
    if g0 > N:
        return dims

    def embed_terms(terms: TermDict) -> dict:
        return {mono: ring.embed(c) for mono, c in terms.items()}

    stall_limit = 3 * M.algebra.dim

    for m in range(g0, N + 1):
        dim_m = M.pbw_dim(m)
        idx = M.pbw_index[m]
        ech = ModPEchelon(dim_m, p)
        kept: list[dict] = []

        def rows_for_grade():
            if m == g0:
                for row in w_rows:
                    yield embed_terms(row)
                return
            for n in range(m - g0, 1, -1):
                for src in accepted[m - n]:
                    for g in range(M.algebra.dim):
                        image = calc.apply_mode(g, -n, src)
                        if image:
                            yield image
            for src in accepted[m - 1]:
                for g in range(M.algebra.dim):
                    image = calc.apply_mode(g, -1, src)
                    if image:
                        yield image

        certified = False
        stall = 0
        limit = stall_limit
        pending = rows_for_grade()
        exhausted = False
        while not certified:
            for row in pending:
                if ech.insert_sparse({idx[mono]: c for mono, c in row.items()}):
                    kept.append(row)
                    stall = 0
                else:
                    stall += 1
                if stall >= limit:
                    stall = 0
                    break
            else:
                exhausted = True
            candidates = [M.pbw_basis[m][c] for c in ech.nonpivot_cols()]
            if _gram_certificate(M, real, candidates, calc, p):
                dims.append(len(candidates))
                certified = True
            elif exhausted:
                raise _RetryPrime(f"grade {m} not certified with p={p}")
            else:
                limit *= 2
        accepted[m] = kept
    return dims


# -- the simple quotient ----------------------------------------------------


def simple_quotient(real: Realization, k: int, N: int, method: str = "auto") -> TruncatedModule:
    """Quotient of V^k(g) by the ideal generated by e_theta(-1)^{k+1}|0>.

    ``method`` selects the relation backend: "exact" (full rational
    echelons, supports state arithmetic), "certified" (dimensions only,
    for large truncations) or "auto".  Requires a positive integer
    level; the generator is checked to be singular before anything is
    quotiented.
    """
    if not isinstance(k, int) or isinstance(k, bool) or k <= 0:
        raise ValueError("simple quotient is supported for positive integer levels only")
    if method not in ("auto", "exact", "certified"):
        raise ValueError(f"unknown method {method!r}")
    M = build_vacuum(real, Fraction(k), N)
    g0 = k + 1
    label = f"L_{{{real.algebra.name}}}({k},0)"

    shallow_dims = [len(shallow_basis(M, m)) for m in range(N + 1)]

    if g0 > N:
        qd = QuotientData(
            dims=[M.pbw_dim(m) for m in range(N + 1)],
            relations=[Echelon(M.pbw_dim(m)) for m in range(N + 1)],
            basis=[list(M.pbw_basis[m]) for m in range(N + 1)],
            index=[dict(M.pbw_index[m]) for m in range(N + 1)],
            note="ideal generator beyond cutoff",
            shallow_ranks=[0] * (N + 1),
            shallow_dims=shallow_dims,
        )
        return TruncatedModule(real, Fraction(k), N, quotient=qd, label=label)

    generator = M.monomial_state(((-1, real.theta_index),) * g0)
    if not is_singular(M, generator):
        raise ValueError("ideal generator failed the singular-vector test")
    w_rows = zero_mode_closure(M, generator)
    shallow_ranks = [e.rank for e in shallow_relation_echelons(M, w_rows, g0, N)]

    if method == "exact" or (method == "auto" and M.pbw_dim(N) <= EXACT_DIM_LIMIT):
        relations = negative_mode_closure(M, w_rows, g0, N)
        basis, index, dims = [], [], []
        for m in range(N + 1):
            pivots = set(relations[m].pivots)
            monos = [mo for i, mo in enumerate(M.pbw_basis[m]) if i not in pivots]
            basis.append(monos)
            index.append({mo: i for i, mo in enumerate(monos)})
            dims.append(len(monos))
        qd = QuotientData(dims=dims, relations=relations, basis=basis, index=index,
                          note="exact relation echelons",
                          shallow_ranks=shallow_ranks, shallow_dims=shallow_dims)
        Q = TruncatedModule(real, Fraction(k), N, quotient=qd, label=label)
        _post_check_simple(Q)
    else:
        dims, note = certified_quotient_dims(M, real, w_rows, g0, N)
        qd = QuotientData(dims=dims, relations=None, basis=None, index=None, note=note,
                          shallow_ranks=shallow_ranks, shallow_dims=shallow_dims)
        Q = TruncatedModule(real, Fraction(k), N, quotient=qd, label=label)
        # the certificate already proves the ideal equals the maximal
        # submodule at every computed grade, so no singular vector can
        # survive; the explicit scan is redundant here.
    return Q


def _post_check_simple(Q: TruncatedModule) -> None:
    for m in range(1, Q.N + 1):
        for s in singular_vectors(Q, m):
            if not s.is_zero():
                warnings.warn(
                    QuotientNotSimpleWarning(
                        f"quotient not simple at this cutoff: singular vector in grade {m}",
                        s,
                    )
                )
                return
