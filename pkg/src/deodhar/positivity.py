"""Totally nonnegative flags and their component criterion.

A flag in the cell of a reduced word is totally nonnegative exactly when it
lies in the component of the positive trace of its endpoint and the standard
chamber minors at the stay steps are all strictly positive.  That check
needs one inequality per stay step and nothing else; the ascent-step
equalities come along for free with the classification, and are reported in
the certificate.

Sampling the positive part of a component is direct: choose positive
parameters for the stay steps of the positive trace and multiply the
factors out.  Products of y factors can be rewritten by the rational braid
move y_i(a) y_j(b) y_i(c) = y_j(bc/(a+c)) y_i(a+c) y_j(ab/(a+c)) for
adjacent i, j.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping, Sequence

from .components import ComponentDescriptor, _prefix_perms, build_element, classify
from .errors import DomainError, InputError
from .linalg import RatMatrix, rational_to_json
from .pinning import GroupWord, gmin
from .subexpr import MARK_DOWN, MARK_UP, positive_subexpression
from .weyl import Permutation

__all__ = [
    "PositiveSample",
    "MinorRecord",
    "TnnCertificate",
    "sample_positive",
    "random_positive_sample",
    "is_totally_nonnegative",
    "braid_move_y",
]


@dataclass(frozen=True)
class PositiveSample:
    """A point of the positive part of a component, with its parameters."""

    descriptor: ComponentDescriptor
    t_params: dict
    group_word: GroupWord

    def to_json(self) -> dict:
        from .pinning import group_word_to_json

        return {
            "trace": self.descriptor.to_json(),
            "t": {str(k): rational_to_json(x) for k, x in self.t_params.items()},
            "group_word": group_word_to_json(self.group_word),
        }


def sample_positive(
    v: Permutation, word: Sequence[int], t_params: Sequence | Mapping
) -> PositiveSample:
    """A point of the totally positive part over v inside the word's cell.

    The positive trace of v has one free parameter per stay step; they can
    be passed as a sequence in step order or keyed by step, and must all be
    positive.
    """
    desc = ComponentDescriptor(positive_subexpression(v, word))
    stays = desc.stay_positions
    if isinstance(t_params, Mapping):
        params = {int(k): Fraction(x) for k, x in t_params.items()}
    else:
        values = [Fraction(x) for x in t_params]
        if len(values) != len(stays):
            raise InputError(
                f"expected {len(stays)} parameters, got {len(values)}"
            )
        params = dict(zip(stays, values))
    if set(params) != set(stays):
        raise InputError(f"t parameters must be keyed by {list(stays)}")
    for k, t in params.items():
        if t <= 0:
            raise DomainError(f"parameter at step {k} must be positive")
    gw = build_element(desc, params, {})
    return PositiveSample(desc, params, gw)


def random_positive_sample(
    v: Permutation, word: Sequence[int], seed: int
) -> PositiveSample:
    """A reproducible positive sample with small random parameters."""
    rng = random.Random(seed)
    desc = ComponentDescriptor(positive_subexpression(v, word))
    params = {
        k: Fraction(rng.randint(1, 9), rng.randint(1, 9))
        for k in desc.stay_positions
    }
    return sample_positive(v, word, params)


@dataclass(frozen=True)
class MinorRecord:
    """One checked minor: its step, index sets, value, and required relation."""

    k: int
    rows: tuple[int, ...]
    cols: tuple[int, ...]
    value: Fraction
    relation: str
    ok: bool

    def to_json(self) -> dict:
        return {
            "k": self.k,
            "rows": list(self.rows),
            "cols": list(self.cols),
            "value": rational_to_json(self.value),
            "relation": self.relation,
        }


@dataclass(frozen=True)
class TnnCertificate:
    """Outcome of the nonnegativity test with the minors that decided it."""

    nonnegative: bool
    endpoint: Permutation
    descriptor: ComponentDescriptor
    reason: str
    descent_steps: tuple[int, ...]
    equalities: tuple[MinorRecord, ...]
    inequalities: tuple[MinorRecord, ...]
    violated: tuple[int, ...]

    def __bool__(self) -> bool:
        return self.nonnegative

    def to_json(self) -> dict:
        return {
            "totally_nonnegative": self.nonnegative,
            "v": list(self.endpoint.images),
            "reason": self.reason,
            "descent_steps": list(self.descent_steps),
            "equalities": [r.to_json() for r in self.equalities],
            "inequalities": [r.to_json() for r in self.inequalities],
            "violated": list(self.violated),
        }


def is_totally_nonnegative(z: RatMatrix, word: Sequence[int]) -> TnnCertificate:
    """Test whether the flag z w B+ is totally nonnegative.

    Classifies the flag, requires the trace to be the positive one for its
    endpoint, then checks strict positivity of the stay-step chamber
    minors.  The certificate carries one equality record per ascent step
    and one inequality record per stay step.
    """
    desc = classify(z, word)
    tr = desc.trace
    v = desc.endpoint
    w = _prefix_perms(desc)
    equalities = []
    inequalities = []
    violated = []
    for k, i in enumerate(tr.word, start=1):
        mark = tr.marks[k - 1]
        if mark == MARK_DOWN:
            continue
        if mark == MARK_UP:
            rows = tr.values[k - 1].prefix_set(i)
            cols = w[k].prefix_set(i)
            equalities.append(
                MinorRecord(k, rows, cols, Fraction(0), "=", True)
            )
        else:
            rows = tr.values[k].prefix_set(i)
            cols = w[k].prefix_set(i)
            value = gmin(z, tr.values[k], w[k], i)
            ok = value > 0
            if not ok:
                violated.append(k)
            inequalities.append(MinorRecord(k, rows, cols, value, ">", ok))
    descents = desc.descent_positions
    if descents:
        return TnnCertificate(
            False,
            v,
            desc,
            f"trace has length-decreasing steps at {list(descents)}, "
            "so it is not the positive trace of its endpoint",
            descents,
            tuple(equalities),
            tuple(inequalities),
            tuple(violated),
        )
    if violated:
        return TnnCertificate(
            False,
            v,
            desc,
            f"chamber minors at steps {violated} are not positive",
            (),
            tuple(equalities),
            tuple(inequalities),
            tuple(violated),
        )
    return TnnCertificate(
        True,
        v,
        desc,
        "flag lies in the totally nonnegative part",
        (),
        tuple(equalities),
        tuple(inequalities),
        (),
    )


def braid_move_y(a, b, c) -> tuple[Fraction, Fraction, Fraction]:
    """Parameters (b', a', c') with y_i(a) y_j(b) y_i(c) = y_j(b') y_i(a') y_j(c').

    Valid for adjacent indices i, j; needs a + c nonzero.

    >>> braid_move_y(1, 1, 1)
    (Fraction(1, 2), Fraction(2, 1), Fraction(1, 2))
    """
    a, b, c = Fraction(a), Fraction(b), Fraction(c)
    if a + c == 0:
        raise DomainError("braid move undefined: a + c = 0")
    return (b * c / (a + c), a + c, a * b / (a + c))


if __name__ == "__main__":
    import doctest

    doctest.testmod()
