"""Integrable highest-weight classification at positive integer level.

Weights are labeled by their pairings with the affine simple-root
systems: tuples (b_0, b_1, b_2..b_n) for the sl(1|n) family and
(b_0, b_1, b_4..b_{n+2}, b_{n+3}) for osp(2|2n) (the paper-facing
indices skip 2 and 3); the disconnected pair of indices subject only to
"b_0 + b_1 a positive integer, or both zero" is what makes the solution
set infinite at every level.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction

from .linalg import ZERO, scalar_to_str
from .realizations import G3RootData, g3_root_data

FAMILIES = ("sl1n", "osp22n")


@dataclass(frozen=True)
class WeightLabels:
    family: str
    n: int
    labels: tuple[Fraction, ...]

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise ValueError(f"unknown family {self.family!r}")
        if len(self.labels) != label_count(self.family, self.n):
            raise ValueError(
                f"{self.family} rank {self.n} takes {label_count(self.family, self.n)} labels"
            )

    def label_names(self) -> list[str]:
        return label_names(self.family, self.n)

    def to_json(self) -> list[str]:
        return [scalar_to_str(c) for c in self.labels]


def label_count(family: str, n: int) -> int:
    if family == "sl1n":
        return n + 1  # b_0 .. b_n
    return n + 2  # b_0, b_1, b_4 .. b_{n+2}, b_{n+3}


def label_names(family: str, n: int) -> list[str]:
    if family == "sl1n":
        return [f"b{i}" for i in range(n + 1)]
    return ["b0", "b1"] + [f"b{i}" for i in range(4, n + 3)] + [f"b{n + 3}"]


def _is_nonneg_int(x: Fraction) -> bool:
    return x.denominator == 1 and x >= 0


def _is_pos_int(x: Fraction) -> bool:
    return x.denominator == 1 and x > 0


def check_sl1n(k: int, w: WeightLabels) -> bool:
    """Integrability of an sl(1|n) affine weight at positive integer level:
    b_i nonnegative integers for i >= 2, b_0 + b_1 a positive integer or
    b_0 = b_1 = 0, and all labels summing to k."""
    if w.family != "sl1n":
        raise ValueError("expected sl1n labels")
    _require_level(k)
    b = w.labels
    if any(not _is_nonneg_int(x) for x in b[2:]):
        return False
    if not (b[0] == 0 and b[1] == 0) and not _is_pos_int(b[0] + b[1]):
        return False
    return sum(b, ZERO) == k


def check_osp22n(k: int, w: WeightLabels) -> bool:
    """Same shape of conditions for osp(2|2n): integrality from b_4 on,
    the b_0 + b_1 dichotomy, and the level sum."""
    if w.family != "osp22n":
        raise ValueError("expected osp22n labels")
    _require_level(k)
    b = w.labels
    if any(not _is_nonneg_int(x) for x in b[2:]):
        return False
    if not (b[0] == 0 and b[1] == 0) and not _is_pos_int(b[0] + b[1]):
        return False
    return sum(b, ZERO) == k


def _require_level(k: int) -> None:
    if not isinstance(k, int) or isinstance(k, bool) or k <= 0:
        raise ValueError("level must be a positive integer")


def checker(family: str):
    return check_sl1n if family == "sl1n" else check_osp22n


@dataclass(frozen=True)
class ContinuousFamily:
    """One-parameter family b_0 = t, b_1 = m - t with fixed integer data."""

    free: str
    constraint: str
    m: int
    fixed: dict[str, Fraction]

    def specialize(self, family: str, n: int, t: Fraction) -> WeightLabels:
        names = label_names(family, n)
        values = [Fraction(t), Fraction(self.m) - t]
        values += [self.fixed[nm] for nm in names[2:]]
        return WeightLabels(family, n, tuple(values))

    def to_json(self) -> dict:
        return {
            "free": self.free,
            "constraint": self.constraint,
            "m": self.m,
            "fixed": {nm: scalar_to_str(c) for nm, c in self.fixed.items()},
        }


@dataclass
class FamilyCertificate:
    family: str
    n: int
    k: int
    discrete: list[WeightLabels] = field(default_factory=list)
    families: list[ContinuousFamily] = field(default_factory=list)

    @property
    def infinite(self) -> bool:
        return bool(self.families)

    def to_json(self) -> dict:
        return {
            "family": self.family,
            "n": self.n,
            "k": self.k,
            "label_names": label_names(self.family, self.n),
            "discrete": [w.to_json() for w in self.discrete],
            "families": [f.to_json() for f in self.families],
            "infinite": self.infinite,
        }


def _compositions(total: int, parts: int) -> list[tuple[int, ...]]:
    if parts == 0:
        return [()] if total == 0 else []
    out = []
    for split in itertools.combinations(range(total + parts - 1), parts - 1):
        prev = -1
        comp = []
        for s in split:
            comp.append(s - prev - 1)
            prev = s
        comp.append(total + parts - 2 - prev)
        out.append(tuple(comp))
    return out


def enumerate_weights(family: str, n: int, k: int) -> FamilyCertificate:
    """All integrable weights of level k, split into the finite list with
    b_0 = b_1 = 0 and the one-parameter families b_0 = t, b_1 = m - t.

    Every level admits at least one family, so the certificate always
    reports infinitely many integrable weights.
    """
    if family not in FAMILIES:
        raise ValueError(f"unknown family {family!r}")
    _require_level(k)
    names = label_names(family, n)
    tail = len(names) - 2
    cert = FamilyCertificate(family=family, n=n, k=k)
    for comp in _compositions(k, tail):
        labels = (ZERO, ZERO) + tuple(Fraction(c) for c in comp)
        cert.discrete.append(WeightLabels(family, n, labels))
    for m in range(1, k + 1):
        for comp in _compositions(k - m, tail):
            fixed = {nm: Fraction(c) for nm, c in zip(names[2:], comp)}
            cert.families.append(
                ContinuousFamily(free="b0", constraint="b0+b1=m", m=m, fixed=fixed)
            )
    return cert


@dataclass
class G3ValidationReport:
    mismatches: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.mismatches

    def to_json(self) -> dict:
        return {"ok": self.ok, "mismatches": self.mismatches}


def validate_g3_data(d: G3RootData) -> G3ValidationReport:
    """Check shipped G(3) data against the hard-coded reference tables."""
    rep = G3ValidationReport()
    ref = g3_root_data()
    if d.gram != ref.gram:
        rep.mismatches.append("Gram matrix of (alpha0, alpha1, alpha2)")
    if set(d.pos_even) != set(ref.pos_even):
        rep.mismatches.append("positive even roots")
    if set(d.pos_odd) != set(ref.pos_odd):
        rep.mismatches.append("positive odd roots")
    if len(d.pos_even) != 7:
        rep.mismatches.append("positive even root count != 7")
    if len(d.pos_odd) != 7:
        rep.mismatches.append("positive odd root count != 7")
    if set(d.weights_v) != set(ref.weights_v) or len(d.weights_v) != 7:
        rep.mismatches.append("weight set of the 7-dimensional module")
    neg_closed = {tuple(-c for c in wv) for wv in d.weights_v}
    if neg_closed != set(d.weights_v):
        rep.mismatches.append("weight set of the 7-dimensional module not negation-symmetric")
    if set(d.weights_v1) != set(ref.weights_v1) or len(d.weights_v1) != 2:
        rep.mismatches.append("weight set of the 2-dimensional module")
    if d.inner(d.theta2, d.theta2) != Fraction(2):
        rep.mismatches.append("(theta2 | theta2) != 2")
    for root, _parity in d.simple_roots:
        combos = _nonneg_combos(d.simple_roots, root)
        if not combos:
            rep.mismatches.append(f"simple root {root} not positive")
    # every positive root must be a nonnegative combination of the simple ones
    for root in tuple(d.pos_even) + tuple(d.pos_odd):
        if not _nonneg_combos(d.simple_roots, root):
            rep.mismatches.append(f"positive root {root} not generated by the simple system")
    return rep


def _nonneg_combos(simple_roots, target) -> bool:
    """Solve target = sum c_i s_i with c_i nonnegative rationals (3x3 exact)."""
    from .linalg import solve_dense

    mat = [[simple_roots[j][0][i] for j in range(3)] for i in range(3)]
    sol = solve_dense(mat, list(target))
    if sol is None:
        return False
    return all(c >= 0 for c in sol)
