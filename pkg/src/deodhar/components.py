"""Deodhar components of a flag variety cell and the Chamber Ansatz.

Fix a reduced word for w and an upper-unipotent z, so that z w B+ is a flag
in the Bruhat cell of w.  Sweeping the word letter by letter classifies the
flag into the component of a unique distinguished trace: at a free step the
minor of z on rows v_(k-1){1..i_k} and columns w_(k){1..i_k} decides whether
the trace keeps its value (nonzero minor) or moves up (zero minor), while a
forced descent consumes a letter without probing.

Each component is cut out by explicit minor equations: the probe minors
vanish at the ascent steps and the standard chamber minors are nonzero at
the stay steps.  An element of the component factors as a product with one
factor per step,

    stay k    ->  y_{i_k}(t_k),        t_k nonzero,
    ascent k  ->  the lift of s_{i_k},
    descent k ->  x_{i_k}(m_k) times the inverse lift of s_{i_k},

and the parameters are recovered from z by ratios of generalized minors.
The t parameters come from the four chamber minors around the crossing; the
m parameters need one extra correction term evaluated on the partial
product built so far, which has no closed form in terms of z alone.

The stay minors together with the descent probe minors form a coordinate
system on the component; both directions of that correspondence are
implemented.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping, Sequence

from .errors import DomainError, InputError, InternalCheckError, NotInComponentError
from .linalg import RatMatrix, flag_equal, rational_to_json
from .pinning import (
    FACTOR_S,
    FACTOR_XSINV,
    FACTOR_Y,
    GroupFactor,
    GroupWord,
    evaluate,
    factor_matrix,
    gmin,
    perm_matrix,
)
from .subexpr import (
    MARK_DOWN,
    MARK_STAY,
    MARK_UP,
    SubexpressionTrace,
    is_distinguished,
    trace_from_json,
    trace_to_json,
)
from .weyl import Permutation, Word, identity_perm, simple_reflection

__all__ = [
    "ComponentDescriptor",
    "ClassifyStep",
    "ComponentConditions",
    "FactorizationResult",
    "classify",
    "classify_steps",
    "component_conditions",
    "minor_polynomial",
    "build_element",
    "chamber_t",
    "chamber_m",
    "factorize",
    "chamber_coordinates",
    "element_from_coordinates",
]


@dataclass(frozen=True)
class ComponentDescriptor:
    """A Deodhar component, named by its distinguished trace."""

    trace: SubexpressionTrace

    def __post_init__(self) -> None:
        if not is_distinguished(self.trace):
            raise InputError("component descriptor needs a distinguished trace")

    @property
    def word(self) -> Word:
        return self.trace.word

    @property
    def d(self) -> int:
        return self.trace.d

    @property
    def endpoint(self) -> Permutation:
        return self.trace.endpoint

    @property
    def stay_positions(self) -> tuple[int, ...]:
        return self.trace.positions(MARK_STAY)

    @property
    def ascent_positions(self) -> tuple[int, ...]:
        return self.trace.positions(MARK_UP)

    @property
    def descent_positions(self) -> tuple[int, ...]:
        return self.trace.positions(MARK_DOWN)

    def to_json(self) -> dict:
        return trace_to_json(self.trace)

    @staticmethod
    def from_json(data: dict) -> "ComponentDescriptor":
        return ComponentDescriptor(trace_from_json(data))


@dataclass(frozen=True)
class ClassifyStep:
    """One step of the classifying sweep.

    ``case`` is "stay", "ascend", or "forced"; the probe minor and its index
    sets are absent on forced steps.
    """

    k: int
    letter: int
    case: str
    rows: tuple[int, ...] | None
    cols: tuple[int, ...] | None
    probe: Fraction | None
    value_after: Permutation


def _check_unipotent(z: RatMatrix) -> None:
    if not z.is_upper_unipotent():
        raise InputError("flag representative must be upper unipotent")


def _check_word_for(z: RatMatrix, word: Sequence[int]) -> Word:
    word = tuple(word)
    from .weyl import evaluate_word

    for i in word:
        if not 1 <= i <= z.d - 1:
            raise InputError(f"letter {i} out of range 1..{z.d - 1}")
    if evaluate_word(z.d, word).length() != len(word):
        raise InputError(f"word {word!r} is not reduced")
    return word


def classify_steps(z: RatMatrix, word: Sequence[int]) -> list[ClassifyStep]:
    """The classifying sweep with its probe minors, step by step."""
    _check_unipotent(z)
    word = _check_word_for(z, word)
    d = z.d
    v = identity_perm(d)
    w_prefix = identity_perm(d)
    steps: list[ClassifyStep] = []
    for k, i in enumerate(word, start=1):
        w_prefix = w_prefix.times_s(i)
        if v.right_descent(i):
            v = v.times_s(i)
            steps.append(ClassifyStep(k, i, "forced", None, None, None, v))
            continue
        rows = v.prefix_set(i)
        cols = w_prefix.prefix_set(i)
        probe = z.minor(rows, cols)
        if probe != 0:
            steps.append(ClassifyStep(k, i, "stay", rows, cols, probe, v))
        else:
            v = v.times_s(i)
            steps.append(ClassifyStep(k, i, "ascend", rows, cols, probe, v))
    return steps


_CASE_MARK = {"stay": MARK_STAY, "ascend": MARK_UP, "forced": MARK_DOWN}


def classify(z: RatMatrix, word: Sequence[int]) -> ComponentDescriptor:
    """The Deodhar component of the flag z w B+ inside the cell of the word."""
    steps = classify_steps(z, word)
    values = [identity_perm(z.d)] + [s.value_after for s in steps]
    marks = tuple(_CASE_MARK[s.case] for s in steps)
    trace = SubexpressionTrace(tuple(word), tuple(values), marks)
    return ComponentDescriptor(trace)


@dataclass(frozen=True)
class ComponentConditions:
    """Minor equations cutting out a component inside its Bruhat cell.

    ``zero_minors`` must vanish (one per ascent step), ``nonzero_minors``
    must not (one per stay step).  Each record is (k, rows, cols).
    """

    zero_minors: tuple[tuple[int, tuple[int, ...], tuple[int, ...]], ...]
    nonzero_minors: tuple[tuple[int, tuple[int, ...], tuple[int, ...]], ...]

    def to_json(self, d: int | None = None) -> dict:
        def fmt(items, d):
            out = []
            for k, rows, cols in items:
                rec = {"k": k, "rows": list(rows), "cols": list(cols)}
                if d is not None and len(rows) <= POLY_EXPANSION_GUARD:
                    rec["poly"] = minor_polynomial(rows, cols, d)
                out.append(rec)
            return out

        return {
            "zero": fmt(self.zero_minors, d),
            "nonzero": fmt(self.nonzero_minors, d),
        }


def component_conditions(desc: ComponentDescriptor) -> ComponentConditions:
    zero = []
    nonzero = []
    tr = desc.trace
    w_prefix = identity_perm(desc.d)
    for k, i in enumerate(tr.word, start=1):
        w_prefix = w_prefix.times_s(i)
        mark = tr.marks[k - 1]
        if mark == MARK_UP:
            zero.append((k, tr.values[k - 1].prefix_set(i), w_prefix.prefix_set(i)))
        elif mark == MARK_STAY:
            nonzero.append((k, tr.values[k].prefix_set(i), w_prefix.prefix_set(i)))
    return ComponentConditions(tuple(zero), tuple(nonzero))


POLY_EXPANSION_GUARD = 6


def minor_polynomial(rows: Sequence[int], cols: Sequence[int], d: int) -> str:
    """The minor of a generic upper-unipotent matrix, expanded as a string.

    Entries above the diagonal are symbols ``a{i}{j}``; guard keeps the
    permanent-style expansion small.
    """
    rows = tuple(rows)
    cols = tuple(cols)
    if len(rows) != len(cols):
        raise InputError("minor needs equally many rows and columns")
    if len(rows) > POLY_EXPANSION_GUARD:
        raise DomainError(
            f"symbolic expansion is limited to size {POLY_EXPANSION_GUARD}"
        )
    if d > 9:
        raise DomainError("symbolic entry names need single-digit indices")
    n = len(rows)
    terms: dict[tuple[str, ...], int] = {}
    for perm in itertools.permutations(range(n)):
        sign = 1
        for a in range(n):
            for b in range(a + 1, n):
                if perm[a] > perm[b]:
                    sign = -sign
        names: list[str] = []
        dead = False
        for a in range(n):
            r, c = rows[a], cols[perm[a]]
            if r == c:
                continue
            if r > c:
                dead = True
                break
            names.append(f"a{r}{c}")
        if dead:
            continue
        key = tuple(sorted(names))
        terms[key] = terms.get(key, 0) + sign
    terms = {k: c for k, c in terms.items() if c != 0}
    if not terms:
        return "0"
    parts: list[str] = []
    for key in sorted(terms, key=lambda k: (len(k), k)):
        c = terms[key]
        body = "*".join(key) if key else "1"
        mag = abs(c)
        if mag != 1 or not key:
            body = f"{mag}*{body}" if key else str(mag)
        if not parts:
            parts.append(body if c > 0 else f"-{body}")
        else:
            parts.append(f" + {body}" if c > 0 else f" - {body}")
    return "".join(parts)


def build_element(
    desc: ComponentDescriptor,
    t_params: Mapping[int, object],
    m_params: Mapping[int, object],
) -> GroupWord:
    """The group word of a component element with the given parameters.

    ``t_params`` is keyed by the stay positions and must be nonzero,
    ``m_params`` by the descent positions; ascent steps take no parameter.
    """
    tr = desc.trace
    stays = set(desc.stay_positions)
    downs = set(desc.descent_positions)
    if set(t_params) != stays:
        raise InputError(f"t parameters must be keyed by {sorted(stays)}")
    if set(m_params) != downs:
        raise InputError(f"m parameters must be keyed by {sorted(downs)}")
    factors: list[GroupFactor] = []
    for k, i in enumerate(tr.word, start=1):
        mark = tr.marks[k - 1]
        if mark == MARK_STAY:
            t = Fraction(t_params[k])
            if t == 0:
                raise DomainError(f"t parameter at step {k} must be nonzero")
            factors.append(GroupFactor(FACTOR_Y, i, t))
        elif mark == MARK_UP:
            factors.append(GroupFactor(FACTOR_S, i))
        else:
            factors.append(GroupFactor(FACTOR_XSINV, i, Fraction(m_params[k])))
    return GroupWord(desc.d, tuple(factors))


def _neighbor_indices(i: int, d: int) -> tuple[int, ...]:
    return tuple(j for j in (i - 1, i + 1) if 1 <= j <= d - 1)


def _stay_minor_product(
    z: RatMatrix, v_k: Permutation, w_k: Permutation, i: int
) -> Fraction:
    """Product of the neighboring standard chamber minors at step k.

    These are the minors whose exponent in the parameter formulas is the
    negated off-diagonal Cartan entry, so only the indices adjacent to i
    contribute.
    """
    out = Fraction(1)
    for j in _neighbor_indices(i, z.d):
        factor = gmin(z, v_k, w_k, j)
        if factor == 0:
            raise NotInComponentError(
                f"standard chamber minor with weight index {j} vanishes"
            )
        out *= factor
    return out


def _prefix_perms(desc: ComponentDescriptor) -> list[Permutation]:
    out = [identity_perm(desc.d)]
    for i in desc.word:
        out.append(out[-1].times_s(i))
    return out


def chamber_t(z: RatMatrix, desc: ComponentDescriptor, k: int) -> Fraction:
    """The y parameter at stay step k, as a ratio of chamber minors of z."""
    tr = desc.trace
    if not 1 <= k <= len(tr.word) or tr.marks[k - 1] != MARK_STAY:
        raise InputError(f"step {k} is not a stay step of the trace")
    i = tr.word[k - 1]
    w = _prefix_perms(desc)
    num = _stay_minor_product(z, tr.values[k], w[k], i)
    den1 = gmin(z, tr.values[k], w[k], i)
    den2 = gmin(z, tr.values[k - 1], w[k - 1], i)
    if den1 == 0 or den2 == 0:
        raise NotInComponentError("standard chamber minor vanishes")
    return num / (den1 * den2)


def chamber_m(
    z: RatMatrix, desc: ComponentDescriptor, k: int, g_prefix: RatMatrix
) -> Fraction:
    """The x parameter at descent step k.

    ``g_prefix`` must be the product of the first k-1 factors of the
    element being rebuilt; the correction term is a minor of it against the
    columns of the bare reflection.
    """
    tr = desc.trace
    if not 1 <= k <= len(tr.word) or tr.marks[k - 1] != MARK_DOWN:
        raise InputError(f"step {k} is not a descent step of the trace")
    i = tr.word[k - 1]
    w = _prefix_perms(desc)
    prev_std = gmin(z, tr.values[k - 1], w[k - 1], i)
    if prev_std == 0:
        raise NotInComponentError("standard chamber minor vanishes")
    num = gmin(z, tr.values[k - 1], w[k], i) * prev_std
    den = _stay_minor_product(z, tr.values[k], w[k], i)
    correction = gmin(g_prefix, tr.values[k - 1], simple_reflection(z.d, i), i)
    return num / den - correction


@dataclass(frozen=True)
class FactorizationResult:
    """Parameters of a component element, with the verified group word."""

    descriptor: ComponentDescriptor
    t_params: dict
    m_params: dict
    corrections: dict
    group_word: GroupWord

    def to_json(self) -> dict:
        from .pinning import group_word_to_json

        return {
            "trace": self.descriptor.to_json(),
            "t": {str(k): rational_to_json(x) for k, x in self.t_params.items()},
            "m": {str(k): rational_to_json(x) for k, x in self.m_params.items()},
            "group_word": group_word_to_json(self.group_word),
            "verified": True,
        }


def factorize(z: RatMatrix, word: Sequence[int]) -> FactorizationResult:
    """Recover the factor parameters of the flag z w B+ from minors of z.

    Cross-checks every descent parameter against an independent minor ratio
    and verifies the final flag identity; failures of either check raise,
    they are never reported as a value.
    """
    desc = classify(z, word)
    tr = desc.trace
    d = z.d
    w = _prefix_perms(desc)
    g = RatMatrix.identity(d)
    t_params: dict[int, Fraction] = {}
    m_params: dict[int, Fraction] = {}
    corrections: dict[int, Fraction] = {}
    factors: list[GroupFactor] = []
    for k, i in enumerate(tr.word, start=1):
        mark = tr.marks[k - 1]
        if mark == MARK_STAY:
            t = chamber_t(z, desc, k)
            t_params[k] = t
            factors.append(GroupFactor(FACTOR_Y, i, t))
        elif mark == MARK_UP:
            factors.append(GroupFactor(FACTOR_S, i))
        else:
            correction = gmin(g, tr.values[k - 1], simple_reflection(d, i), i)
            m = chamber_m(z, desc, k, g)
            probe = gmin(z, tr.values[k - 1], w[k], i)
            standard = gmin(z, tr.values[k], w[k], i)
            if standard == 0:
                raise NotInComponentError("standard chamber minor vanishes")
            alt = -probe / standard - correction
            if m != alt:
                raise InternalCheckError(
                    f"descent parameter mismatch at step {k}: {m} vs {alt}"
                )
            m_params[k] = m
            corrections[k] = correction
            factors.append(GroupFactor(FACTOR_XSINV, i, m))
        g = g * factor_matrix(d, factors[-1])
    gw = GroupWord(d, tuple(factors))
    if not flag_equal(evaluate(gw), z * perm_matrix(w[-1])):
        raise InternalCheckError("rebuilt element does not match the input flag")
    return FactorizationResult(desc, t_params, m_params, corrections, gw)


def chamber_coordinates(z: RatMatrix, desc: ComponentDescriptor) -> dict:
    """The coordinate system of the component, evaluated at z.

    Stay steps contribute their standard chamber minor, descent steps their
    probe minor; together these determine the element.
    """
    tr = desc.trace
    w = _prefix_perms(desc)
    out: dict[int, Fraction] = {}
    for k, i in enumerate(tr.word, start=1):
        mark = tr.marks[k - 1]
        if mark == MARK_STAY:
            value = gmin(z, tr.values[k], w[k], i)
            if value == 0:
                raise NotInComponentError("standard chamber minor vanishes")
            out[k] = value
        elif mark == MARK_DOWN:
            out[k] = gmin(z, tr.values[k - 1], w[k], i)
    return out


def element_from_coordinates(
    desc: ComponentDescriptor, coords: Mapping[int, object]
) -> FactorizationResult:
    """The component element whose chamber coordinates are prescribed.

    Solves for the parameters step by step: minors of the partial product
    convert each coordinate into the next t or m, using that those minors
    do not depend on the parameter still being solved for.
    """
    tr = desc.trace
    d = desc.d
    expected = set(desc.stay_positions) | set(desc.descent_positions)
    if set(coords) != expected:
        raise InputError(f"coordinates must be keyed by {sorted(expected)}")
    coords = {k: Fraction(x) for k, x in coords.items()}
    for k in desc.stay_positions:
        if coords[k] == 0:
            raise DomainError(f"stay coordinate at step {k} must be nonzero")
    w = _prefix_perms(desc)
    e = identity_perm(d)
    g = RatMatrix.identity(d)
    t_params: dict[int, Fraction] = {}
    m_params: dict[int, Fraction] = {}
    corrections: dict[int, Fraction] = {}
    factors: list[GroupFactor] = []
    for k, i in enumerate(tr.word, start=1):
        mark = tr.marks[k - 1]
        if mark == MARK_UP:
            factors.append(GroupFactor(FACTOR_S, i))
        else:
            nb_product = Fraction(1)
            placeholder = (
                GroupFactor(FACTOR_Y, i, Fraction(1))
                if mark == MARK_STAY
                else GroupFactor(FACTOR_XSINV, i, Fraction(0))
            )
            g_star = g * factor_matrix(d, placeholder)
            for j in _neighbor_indices(i, d):
                factor = gmin(g_star, w[k], e, j)
                if factor == 0:
                    raise InternalCheckError("partial-product minor vanished")
                nb_product *= factor
            prev_minor = gmin(g, w[k - 1], e, i)
            if prev_minor == 0:
                raise InternalCheckError("partial-product minor vanished")
            if mark == MARK_STAY:
                t = prev_minor / (nb_product * coords[k])
                t_params[k] = t
                factors.append(GroupFactor(FACTOR_Y, i, t))
            else:
                correction = gmin(g, tr.values[k - 1], simple_reflection(d, i), i)
                m = (nb_product / prev_minor) * coords[k] - correction
                m_params[k] = m
                corrections[k] = correction
                factors.append(GroupFactor(FACTOR_XSINV, i, m))
        g = g * factor_matrix(d, factors[-1])
    gw = GroupWord(d, tuple(factors))
    return FactorizationResult(desc, t_params, m_params, corrections, gw)
