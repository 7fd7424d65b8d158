"""Subexpressions of a reduced word, distinguished traces, and R-polynomials.

Fix a reduced word (i_1, ..., i_n).  A subexpression is recorded as its trace:
the partial products v_(0) = e, v_(1), ..., v_(n), where each step either
keeps v_(k-1) or multiplies it by s_{i_k} on the right.  Every step carries a
mark: "+" when the length goes up, "o" when the value is kept, "-" when the
length goes down.

A trace is distinguished when every forced descent is taken: whenever
v_(k-1) s_{i_k} is shorter than v_(k-1), the step must move down.  It is
positive when it is distinguished and never moves down; for each v below the
word's product there is exactly one positive trace, found by a right-to-left
greedy descent.

The R-polynomial of a pair v <= w counts, weighted by marks, the
distinguished traces ending at v: each trace contributes
(q - 1)^{#stays} * q^{#descents}.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import DomainError, InputError
from .weyl import (
    Permutation,
    Word,
    bruhat_leq,
    evaluate_word,
    identity_perm,
)

__all__ = [
    "MARK_UP",
    "MARK_STAY",
    "MARK_DOWN",
    "SubexpressionTrace",
    "RPolynomial",
    "positive_subexpression",
    "is_distinguished",
    "enumerate_distinguished",
    "r_polynomial",
    "trace_to_json",
    "trace_from_json",
]

MARK_UP = "+"
MARK_STAY = "o"
MARK_DOWN = "-"

ENUMERATION_GUARD = 6


@dataclass(frozen=True)
class SubexpressionTrace:
    """Partial products and marks of a subexpression of a fixed word."""

    word: Word
    values: tuple[Permutation, ...]
    marks: tuple[str, ...]

    def __post_init__(self) -> None:
        n = len(self.word)
        if len(self.values) != n + 1 or len(self.marks) != n:
            raise InputError("trace shape does not match its word")
        if not self.values[0].is_identity():
            raise InputError("trace must start at the identity")
        d = self.values[0].d
        for k in range(1, n + 1):
            i = self.word[k - 1]
            if not 1 <= i <= d - 1:
                raise InputError(f"letter {i} out of range 1..{d - 1}")
            prev, cur, mark = self.values[k - 1], self.values[k], self.marks[k - 1]
            if mark == MARK_STAY:
                ok = cur == prev
            elif mark == MARK_UP:
                ok = cur == prev.times_s(i) and not prev.right_descent(i)
            elif mark == MARK_DOWN:
                ok = cur == prev.times_s(i) and prev.right_descent(i)
            else:
                raise InputError(f"unknown mark {mark!r}")
            if not ok:
                raise InputError(f"step {k} of trace is inconsistent with its mark")

    @property
    def d(self) -> int:
        return self.values[0].d

    @property
    def endpoint(self) -> Permutation:
        return self.values[-1]

    def positions(self, mark: str) -> tuple[int, ...]:
        """1-based step indices carrying the given mark."""
        return tuple(k for k, m in enumerate(self.marks, start=1) if m == mark)

    @property
    def stay_count(self) -> int:
        return self.marks.count(MARK_STAY)

    @property
    def down_count(self) -> int:
        return self.marks.count(MARK_DOWN)

    def is_positive(self) -> bool:
        return MARK_DOWN not in self.marks and is_distinguished(self)


def _trace_from_moves(word: Word, d: int, moves: Sequence[bool]) -> SubexpressionTrace:
    """Build a trace from a word and a keep/multiply decision per step."""
    values = [identity_perm(d)]
    marks: list[str] = []
    for k, i in enumerate(word):
        prev = values[-1]
        if moves[k]:
            marks.append(MARK_DOWN if prev.right_descent(i) else MARK_UP)
            values.append(prev.times_s(i))
        else:
            marks.append(MARK_STAY)
            values.append(prev)
    return SubexpressionTrace(word, tuple(values), tuple(marks))


def _check_word(d: int, word: Sequence[int]) -> tuple[Word, Permutation]:
    word = tuple(word)
    for i in word:
        if not 1 <= i <= d - 1:
            raise InputError(f"letter {i} out of range 1..{d - 1}")
    w = evaluate_word(d, word)
    if w.length() != len(word):
        raise InputError(f"word {word!r} is not reduced")
    return word, w


def positive_subexpression(v: Permutation, word: Sequence[int]) -> SubexpressionTrace:
    """The unique distinguished trace for v with no descents.

    Built right to left: starting from v_(n) = v, each step takes the
    available descent, v_(j-1) = v_(j) s_{i_j} when that is shorter, and
    keeps v_(j) otherwise.  Exists exactly when v is below the word's
    product in Bruhat order.

    >>> from .weyl import Permutation
    >>> t = positive_subexpression(Permutation((1, 3, 2, 4)), (3, 2, 1, 3, 2, 3))
    >>> t.marks
    ('o', 'o', 'o', 'o', '+', 'o')
    """
    word, w = _check_word(v.d, word)
    if not bruhat_leq(v, w):
        raise DomainError("no subexpression: endpoint is not below the word's product")
    values = [v]
    for i in reversed(word):
        cur = values[-1]
        values.append(cur.times_s(i) if cur.right_descent(i) else cur)
    values.reverse()
    if not values[0].is_identity():
        raise DomainError("no subexpression: endpoint is not below the word's product")
    marks = []
    for k, i in enumerate(word):
        marks.append(MARK_STAY if values[k + 1] == values[k] else MARK_UP)
    return SubexpressionTrace(word, tuple(values), tuple(marks))


def is_distinguished(trace: SubexpressionTrace) -> bool:
    """Every forced descent is taken: v_(k) <= v_(k-1) s_{i_k} at each step."""
    for k, i in enumerate(trace.word):
        prev = trace.values[k]
        if prev.right_descent(i) and trace.marks[k] != MARK_DOWN:
            return False
    return True


def enumerate_distinguished(
    v: Permutation, word: Sequence[int]
) -> list[SubexpressionTrace]:
    """All distinguished traces of the word ending at v.

    Depth-first branching at each free step, forced steps descend.  The
    result is sorted by the mark sequence, so the order is deterministic.
    Degree is guarded because the search is exhaustive.
    """
    if v.d > ENUMERATION_GUARD:
        raise DomainError(
            f"distinguished enumeration is limited to degree {ENUMERATION_GUARD}"
        )
    word, _ = _check_word(v.d, word)
    n = len(word)
    target_len = v.length()
    found: list[list[bool]] = []
    moves: list[bool] = []

    def rec(k: int, cur: Permutation, cur_len: int) -> None:
        if abs(cur_len - target_len) > n - k:
            return
        if k == n:
            if cur == v:
                found.append(list(moves))
            return
        i = word[k]
        if cur.right_descent(i):
            moves.append(True)
            rec(k + 1, cur.times_s(i), cur_len - 1)
            moves.pop()
            return
        moves.append(False)
        rec(k + 1, cur, cur_len)
        moves[-1] = True
        rec(k + 1, cur.times_s(i), cur_len + 1)
        moves.pop()

    rec(0, identity_perm(v.d), 0)
    traces = [_trace_from_moves(word, v.d, m) for m in found]
    traces.sort(key=lambda t: "".join(t.marks))
    return traces


@dataclass(frozen=True)
class RPolynomial:
    """A polynomial in q with integer coefficients, stored low degree first."""

    coeffs: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.coeffs and self.coeffs[-1] == 0:
            raise InputError("coefficient tuple has trailing zeros")

    @staticmethod
    def from_coeffs(coeffs: Iterable[int]) -> "RPolynomial":
        cs = list(coeffs)
        while cs and cs[-1] == 0:
            cs.pop()
        return RPolynomial(tuple(cs))

    @staticmethod
    def zero() -> "RPolynomial":
        return RPolynomial(())

    @staticmethod
    def one() -> "RPolynomial":
        return RPolynomial((1,))

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def degree(self) -> int:
        """Degree, with the zero polynomial at -1."""
        return len(self.coeffs) - 1

    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == 1

    def __add__(self, other: "RPolynomial") -> "RPolynomial":
        n = max(len(self.coeffs), len(other.coeffs))
        return RPolynomial.from_coeffs(
            (self.coeffs[k] if k < len(self.coeffs) else 0)
            + (other.coeffs[k] if k < len(other.coeffs) else 0)
            for k in range(n)
        )

    def __mul__(self, other: "RPolynomial") -> "RPolynomial":
        if self.is_zero or other.is_zero:
            return RPolynomial.zero()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for a, ca in enumerate(self.coeffs):
            for b, cb in enumerate(other.coeffs):
                out[a + b] += ca * cb
        return RPolynomial.from_coeffs(out)

    def __call__(self, q) -> object:
        out = 0
        for c in reversed(self.coeffs):
            out = out * q + c
        return out

    def pretty(self) -> str:
        """Human-readable form, highest power first.

        >>> RPolynomial((1, -2, 1)).pretty()
        'q^2 - 2q + 1'
        """
        if self.is_zero:
            return "0"
        parts: list[str] = []
        for k in range(self.degree, -1, -1):
            c = self.coeffs[k]
            if c == 0:
                continue
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            if k == 0:
                body = str(mag)
            else:
                var = "q" if k == 1 else f"q^{k}"
                body = var if mag == 1 else f"{mag}{var}"
            if not parts:
                parts.append(body if c > 0 else f"-{body}")
            else:
                parts.append(f" {sign} {body}")
        return "".join(parts)

    def __str__(self) -> str:
        return self.pretty()


def _power(base: RPolynomial, k: int) -> RPolynomial:
    out = RPolynomial.one()
    for _ in range(k):
        out = out * base
    return out


def r_polynomial(v: Permutation, w: Permutation, word: Sequence[int]) -> RPolynomial:
    """Sum of (q-1)^{#stays} q^{#descents} over distinguished traces ending at v.

    The word must be a reduced word for w; the value does not depend on
    which one is chosen.  Pairs with v not below w give the zero polynomial.
    """
    word, prod = _check_word(v.d, word)
    if prod != w:
        raise InputError("word does not multiply out to w")
    if not bruhat_leq(v, w):
        return RPolynomial.zero()
    q = RPolynomial((0, 1))
    q_minus_1 = RPolynomial((-1, 1))
    total = RPolynomial.zero()
    for trace in enumerate_distinguished(v, word):
        total = total + _power(q_minus_1, trace.stay_count) * _power(
            q, trace.down_count
        )
    return total


def trace_to_json(trace: SubexpressionTrace) -> dict:
    return {
        "word": list(trace.word),
        "values": [list(p.images) for p in trace.values],
        "marks": list(trace.marks),
    }


def trace_from_json(data: dict) -> SubexpressionTrace:
    try:
        word = tuple(int(i) for i in data["word"])
        values = tuple(Permutation(tuple(int(x) for x in im)) for im in data["values"])
        marks = tuple(str(m) for m in data["marks"])
    except (KeyError, TypeError) as exc:
        raise InputError(f"malformed trace object: {exc}") from exc
    return SubexpressionTrace(word, values, marks)


if __name__ == "__main__":
    import doctest

    doctest.testmod()
