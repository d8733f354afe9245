"""PBW monomials for affine vacuum modules and the exact mode calculus.

A monomial is a tuple of modes ``((n1, g1), (n2, g2), ...)`` applied to
the vacuum, where each ``n`` is a negative mode number and ``g`` indexes
a generator of the underlying superalgebra.  The canonical order is mode
number ascending, then generator index ascending; odd modes appear at
most once per ``(n, g)`` since a repeated odd mode reduces through
``a(n)a(n) = (1/2)[a,a](2n)``.

Sign convention
---------------
All Koszul signs live in exactly one place: the swap branch of
``ModeCalculus._insert``, which moves ``x(n)`` past ``y(m)`` using

    x(n) y(m) = (-1)^{[x][y]} y(m) x(n) + [x,y](n+m) + n (x|y) delta_{n+m,0} K.

Everything else in the package is sign-agnostic and routes reordering
through that branch.
"""

from __future__ import annotations

from fractions import Fraction

from .linalg import ZERO

Mode = tuple[int, int]  # (mode number n, generator index g)
Monomial = tuple[Mode, ...]

VACUUM: Monomial = ()


def monomial_weight(mono: Monomial) -> int:
    return -sum(n for n, _ in mono)


def monomial_parity(mono: Monomial, parity: tuple[int, ...]) -> int:
    return sum(parity[g] for _, g in mono) & 1


class FractionRing:
    """Exact rational coefficient arithmetic."""

    one = Fraction(1)
    half = Fraction(1, 2)

    @staticmethod
    def embed(x: Fraction) -> Fraction:
        return x

    @staticmethod
    def add(a, b):
        return a + b

    @staticmethod
    def mul(a, b):
        return a * b

    @staticmethod
    def neg(a):
        return -a

    @staticmethod
    def is_zero(a) -> bool:
        return not a


class PrimeField:
    """Arithmetic modulo a prime, for certified rank computations.

    ``embed`` inverts denominators mod p and raises when a denominator is
    divisible by p (use a different prime in that case).
    """

    def __init__(self, p: int):
        self.p = p
        self.one = 1
        self.half = pow(2, p - 2, p)

    def embed(self, x: Fraction) -> int:
        den = x.denominator % self.p
        if den == 0:
            raise ZeroDivisionError(f"denominator divisible by p={self.p}")
        return x.numerator * pow(den, self.p - 2, self.p) % self.p

    def add(self, a, b):
        return (a + b) % self.p

    def mul(self, a, b):
        return a * b % self.p

    def neg(self, a):
        return -a % self.p

    @staticmethod
    def is_zero(a) -> bool:
        return a == 0


class ModeCalculus:
    """Normal ordering of affine modes acting on PBW monomials.

    Instances are bound to one superalgebra, one level and one
    coefficient ring; results of single-mode insertions are memoized.
    """

    def __init__(self, algebra, level: Fraction, ring=FractionRing):
        self.algebra = algebra
        self.ring = ring
        self.level = ring.embed(Fraction(level))
        self.parity = algebra.parity
        # bracket and form tables embedded into the ring once
        self._bracket = {}
        for (i, j), comps in algebra.brackets.items():
            self._bracket[(i, j)] = {l: ring.embed(c) for l, c in comps.items()}
        self._form = [[ring.embed(c) for c in row] for row in algebra.form]
        self._memo: dict[tuple[int, int, Monomial], dict[Monomial, object]] = {}

    def _insert(self, n: int, g: int, mono: Monomial) -> dict[Monomial, object]:
        """Normal-order x_g(n) * mono * vacuum."""
        key = (n, g, mono)
        hit = self._memo.get(key)
        if hit is not None:
            return hit
        ring = self.ring
        one = ring.one
        if not mono:
            out = {((n, g),): one} if n < 0 else {}
            self._memo[key] = out
            return out
        head = mono[0]
        hn, hg = head
        rest = mono[1:]
        if (n, g) < head:
            # n < 0 is automatic here since hn < 0 <= any non-negative n
            out = {((n, g),) + mono: one}
            self._memo[key] = out
            return out
        if (n, g) == head:
            if self.parity[g]:
                # odd square: a(n)a(n) = (1/2)[a,a](2n)
                out: dict[Monomial, object] = {}
                comps = self._bracket.get((g, g), {})
                for l, c in comps.items():
                    c = ring.mul(ring.half, c)
                    for m2, c2 in self._insert(2 * n, l, rest).items():
                        _acc(out, m2, ring.mul(c, c2), ring)
                self._memo[key] = out
                return out
            out = {((n, g), (n, g)) + rest: one}
            self._memo[key] = out
            return out
        # (n, g) > head: move x(n) past the head mode
        out = {}
        swap_sign = self.parity[g] & self.parity[hg]
        tail = self._insert(n, g, rest)
        for m2, c2 in tail.items():
            if swap_sign:
                c2 = ring.neg(c2)
            for m3, c3 in self._insert(hn, hg, m2).items():
                _acc(out, m3, ring.mul(c2, c3), ring)
        comps = self._bracket.get((g, hg))
        if comps:
            for l, c in comps.items():
                for m2, c2 in self._insert(n + hn, l, rest).items():
                    _acc(out, m2, ring.mul(c, c2), ring)
        if n + hn == 0:
            central = ring.mul(ring.embed(Fraction(n)),
                               ring.mul(self._form[g][hg], self.level))
            if not ring.is_zero(central):
                _acc(out, rest, central, ring)
        self._memo[key] = out
        return out

    def apply_mode(self, g: int, n: int, terms: dict[Monomial, object]) -> dict[Monomial, object]:
        """x_g(n) applied to a linear combination of monomials."""
        ring = self.ring
        out: dict[Monomial, object] = {}
        for mono, c in terms.items():
            if ring.is_zero(c):
                continue
            for m2, c2 in self._insert(n, g, mono).items():
                _acc(out, m2, ring.mul(c, c2), ring)
        return out

    def apply_vector_mode(self, comps: dict[int, Fraction], n: int,
                          terms: dict[Monomial, object]) -> dict[Monomial, object]:
        """(sum_g comps[g] x_g)(n) applied to a combination."""
        ring = self.ring
        out: dict[Monomial, object] = {}
        for g, coeff in comps.items():
            c0 = ring.embed(coeff)
            if ring.is_zero(c0):
                continue
            for mono, c in self.apply_mode(g, n, terms).items():
                _acc(out, mono, ring.mul(c0, c), ring)
        return out

    def derivation(self, terms: dict[Monomial, object]) -> dict[Monomial, object]:
        """Translation operator D: deepens one mode at a time.

        D(x(n) M) = -n x(n-1) M + x(n) D(M), D(vacuum) = 0.
        """
        ring = self.ring
        out: dict[Monomial, object] = {}
        for mono, c in terms.items():
            if ring.is_zero(c):
                continue
            for m2, c2 in self._derive(mono).items():
                _acc(out, m2, ring.mul(c, c2), ring)
        return out

    def _derive(self, mono: Monomial) -> dict[Monomial, object]:
        ring = self.ring
        if not mono:
            return {}
        (n, g), rest = mono[0], mono[1:]
        out: dict[Monomial, object] = {}
        deep = ring.embed(Fraction(-n))
        for m2, c2 in self._insert(n - 1, g, rest).items():
            _acc(out, m2, ring.mul(deep, c2), ring)
        for m2, c2 in self._derive(rest).items():
            for m3, c3 in self._insert(n, g, m2).items():
                _acc(out, m3, ring.mul(c2, c3), ring)
        return out


def _acc(out: dict, key, val, ring) -> None:
    cur = out.get(key)
    if cur is None:
        if not ring.is_zero(val):
            out[key] = val
    else:
        s = ring.add(cur, val)
        if ring.is_zero(s):
            del out[key]
        else:
            out[key] = s


def enumerate_monomials(dim: int, parity: tuple[int, ...], weight: int) -> list[Monomial]:
    """All canonical PBW monomials of the given weight, in canonical order.

    Letters (n, g) are taken in ascending order; even letters may repeat,
    odd letters may not.
    """
    if weight == 0:
        return [VACUUM]
    letters = [(-n, g) for n in range(weight, 0, -1) for g in range(dim)]
    out: list[Monomial] = []

    def rec(start: int, remaining: int, acc: list[Mode]):
        if remaining == 0:
            out.append(tuple(acc))
            return
        for idx in range(start, len(letters)):
            n, g = letters[idx]
            if -n > remaining:
                continue
            acc.append((n, g))
            nxt = idx if not parity[g] else idx + 1
            rec(nxt, remaining + n, acc)
            acc.pop()

    rec(0, weight, [])
    out.sort()
    return out


def graded_dims_series(dim_even: int, dim_odd: int, upto: int) -> list[int]:
    """Coefficients of prod_n (1+q^n)^{dim_odd} / (1-q^n)^{dim_even}.

    Independent generating-function oracle for PBW grade dimensions.
    """
    coeffs = [1] + [0] * upto
    for n in range(1, upto + 1):
        for _ in range(dim_odd):  # multiply by (1 + q^n)
            for k in range(upto, n - 1, -1):
                coeffs[k] += coeffs[k - n]
        for _ in range(dim_even):  # multiply by 1/(1 - q^n)
            for k in range(n, upto + 1):
                coeffs[k] += coeffs[k - n]
    return coeffs


def first_mode_depth(mono: Monomial) -> int:
    """Depth of the deepest mode: 0 for the vacuum, else -n1 >= 1."""
    return -mono[0][0] if mono else 0


def is_shallow(mono: Monomial) -> bool:
    """True when every mode equals -1 (the vacuum counts as shallow)."""
    return all(n == -1 for n, _ in mono)
