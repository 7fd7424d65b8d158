"""The standard pinning of SL_d and words in its one-parameter factors.

Generators, all size d:

* ``gen_x(d, i, m)``: identity plus ``m`` in entry (i, i+1);
* ``gen_y(d, i, t)``: identity plus ``t`` in entry (i+1, i);
* ``gen_sdot(d, i)``: identity with the 2x2 block ((0, -1), (1, 0)) in rows
  and columns i, i+1, the fixed lift of the simple reflection s_i;
* ``gen_acheck(d, i, t)``: the coweight torus element diag(..., t, 1/t, ...)
  with t in slot i.

Products of lifts over different reduced words of the same permutation
agree, so every permutation has a well-defined lift, computed here from a
closed-form sign rule.

A ``GroupWord`` is a sequence of factors of three kinds: ``y`` with a
parameter, bare ``s``, and ``xsinv`` which abbreviates x_i(m) followed by
the inverse lift of s_i.  One factor per step keeps positions aligned with
the steps of a subexpression trace.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .errors import InputError
from .linalg import RatMatrix, rational_from_json, rational_to_json
from .weyl import Permutation, evaluate_word

__all__ = [
    "FACTOR_Y",
    "FACTOR_S",
    "FACTOR_XSINV",
    "GroupFactor",
    "GroupWord",
    "gen_x",
    "gen_y",
    "gen_sdot",
    "gen_sdot_inv",
    "gen_acheck",
    "factor_matrix",
    "evaluate",
    "partial",
    "perm_matrix",
    "gmin",
    "reduce_flag",
    "group_word_to_json",
    "group_word_from_json",
]

FACTOR_Y = "y"
FACTOR_S = "s"
FACTOR_XSINV = "xsinv"


def _check_gen_index(d: int, i: int) -> None:
    if not 1 <= i <= d - 1:
        raise InputError(f"generator index {i} out of range 1..{d - 1}")


def _elementary(d: int, r: int, c: int, value: Fraction) -> RatMatrix:
    rows = [
        [Fraction(1 if a == b else 0) for b in range(d)] for a in range(d)
    ]
    rows[r - 1][c - 1] = Fraction(value)
    return RatMatrix(tuple(tuple(row) for row in rows))


def gen_x(d: int, i: int, m) -> RatMatrix:
    _check_gen_index(d, i)
    return _elementary(d, i, i + 1, Fraction(m))


def gen_y(d: int, i: int, t) -> RatMatrix:
    _check_gen_index(d, i)
    return _elementary(d, i + 1, i, Fraction(t))


def gen_sdot(d: int, i: int) -> RatMatrix:
    _check_gen_index(d, i)
    rows = [
        [Fraction(1 if a == b else 0) for b in range(d)] for a in range(d)
    ]
    rows[i - 1][i - 1] = Fraction(0)
    rows[i][i] = Fraction(0)
    rows[i - 1][i] = Fraction(-1)
    rows[i][i - 1] = Fraction(1)
    return RatMatrix(tuple(tuple(row) for row in rows))


def gen_sdot_inv(d: int, i: int) -> RatMatrix:
    """The inverse lift, equal to gen_acheck(d, i, -1) * gen_sdot(d, i)."""
    _check_gen_index(d, i)
    rows = [
        [Fraction(1 if a == b else 0) for b in range(d)] for a in range(d)
    ]
    rows[i - 1][i - 1] = Fraction(0)
    rows[i][i] = Fraction(0)
    rows[i - 1][i] = Fraction(1)
    rows[i][i - 1] = Fraction(-1)
    return RatMatrix(tuple(tuple(row) for row in rows))


def gen_acheck(d: int, i: int, t) -> RatMatrix:
    _check_gen_index(d, i)
    t = Fraction(t)
    if t == 0:
        raise InputError("torus parameter must be nonzero")
    rows = [
        [Fraction(1 if a == b else 0) for b in range(d)] for a in range(d)
    ]
    rows[i - 1][i - 1] = t
    rows[i][i] = 1 / t
    return RatMatrix(tuple(tuple(row) for row in rows))


@dataclass(frozen=True)
class GroupFactor:
    """One factor of a group word: y_i(t), the lift of s_i, or x_i(m) s_i^{-1}."""

    kind: str
    index: int
    param: Fraction | None = None

    def __post_init__(self) -> None:
        if self.kind not in (FACTOR_Y, FACTOR_S, FACTOR_XSINV):
            raise InputError(f"unknown factor kind {self.kind!r}")
        if self.kind == FACTOR_S:
            if self.param is not None:
                raise InputError("a bare reflection factor carries no parameter")
        elif self.param is None:
            raise InputError(f"factor kind {self.kind!r} needs a parameter")


@dataclass(frozen=True)
class GroupWord:
    """A product of pinned factors inside SL_d, one factor per trace step."""

    d: int
    factors: tuple[GroupFactor, ...]

    def __post_init__(self) -> None:
        for f in self.factors:
            _check_gen_index(self.d, f.index)

    def __len__(self) -> int:
        return len(self.factors)


def factor_matrix(d: int, factor: GroupFactor) -> RatMatrix:
    if factor.kind == FACTOR_Y:
        return gen_y(d, factor.index, factor.param)
    if factor.kind == FACTOR_S:
        return gen_sdot(d, factor.index)
    return gen_x(d, factor.index, factor.param) * gen_sdot_inv(d, factor.index)


def evaluate(gw: GroupWord) -> RatMatrix:
    out = RatMatrix.identity(gw.d)
    for f in gw.factors:
        out = out * factor_matrix(gw.d, f)
    return out


def partial(gw: GroupWord, k: int) -> RatMatrix:
    """The product of the first k factors."""
    if not 0 <= k <= len(gw.factors):
        raise InputError(f"partial index {k} out of range 0..{len(gw.factors)}")
    return evaluate(GroupWord(gw.d, gw.factors[:k]))


def perm_matrix(w: Permutation) -> RatMatrix:
    """The pinned lift of w: entry (w(j), j) is -1 to the inversions above j.

    Agrees with the product of gen_sdot factors over any reduced word.
    """
    d = w.d
    rows = [[Fraction(0)] * d for _ in range(d)]
    for j in range(1, d + 1):
        sign = (-1) ** sum(1 for k in range(1, j) if w(k) > w(j))
        rows[w(j) - 1][j - 1] = Fraction(sign)
    return RatMatrix(tuple(tuple(row) for row in rows))


def gmin(g: RatMatrix, v: Permutation, w: Permutation, i: int) -> Fraction:
    """Generalized minor: rows v{1..i} and columns w{1..i}, both sorted.

    No sign adjustment is applied; for the pinning above this is the plain
    minor on those index sets.
    """
    if v.d != g.d or w.d != g.d:
        raise InputError("degree mismatch in generalized minor")
    if not 0 <= i <= g.d:
        raise InputError(f"minor size {i} out of range 0..{g.d}")
    return g.minor(v.prefix_set(i), w.prefix_set(i))


def reduce_flag(z: RatMatrix, word: Sequence[int], k: int) -> RatMatrix:
    """Representative of the flag z times the lift of the k-letter prefix."""
    if not 0 <= k <= len(word):
        raise InputError(f"prefix length {k} out of range 0..{len(word)}")
    prefix = evaluate_word(z.d, tuple(word[:k]))
    return z * perm_matrix(prefix)


def group_word_to_json(gw: GroupWord) -> list[dict]:
    out: list[dict] = []
    for f in gw.factors:
        if f.kind == FACTOR_S:
            out.append({FACTOR_S: [f.index]})
        else:
            out.append({f.kind: [f.index, rational_to_json(f.param)]})
    return out


def group_word_from_json(d: int, data: list) -> GroupWord:
    factors: list[GroupFactor] = []
    if not isinstance(data, list):
        raise InputError("group word JSON must be a list")
    for item in data:
        if not isinstance(item, dict) or len(item) != 1:
            raise InputError(f"malformed group word factor: {item!r}")
        kind, payload = next(iter(item.items()))
        if kind == FACTOR_S:
            if len(payload) != 1:
                raise InputError(f"malformed reflection factor: {item!r}")
            factors.append(GroupFactor(FACTOR_S, int(payload[0])))
        elif kind in (FACTOR_Y, FACTOR_XSINV):
            if len(payload) != 2:
                raise InputError(f"malformed parametrized factor: {item!r}")
            factors.append(
                GroupFactor(kind, int(payload[0]), rational_from_json(payload[1]))
            )
        else:
            raise InputError(f"unknown factor kind {kind!r}")
    return GroupWord(d, tuple(factors))
