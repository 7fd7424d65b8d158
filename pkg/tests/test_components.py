"""Tests for component classification, conditions, and parameter recovery."""

import random
from fractions import Fraction

import pytest

from deodhar.components import (
    ComponentDescriptor,
    build_element,
    chamber_coordinates,
    chamber_m,
    chamber_t,
    classify,
    classify_steps,
    component_conditions,
    element_from_coordinates,
    factorize,
    minor_polynomial,
)
from deodhar.errors import DomainError, InputError, NotInComponentError
from deodhar.linalg import RatMatrix, flag_equal, unipotent_representative
from deodhar.pinning import evaluate, partial, perm_matrix, reduce_flag
from deodhar.subexpr import enumerate_distinguished
from deodhar.weyl import Permutation, evaluate_word

from support import (
    S102_WORD,
    random_distinguished,
    random_nonzero,
    random_perm,
    random_rational,
    random_reduced_word,
    s102_matrix,
)


def test_classify_golden():
    desc = classify(s102_matrix(), S102_WORD)
    assert "".join(desc.trace.marks) == "+oo-+"
    assert desc.endpoint == Permutation((1, 3, 2, 4))
    assert desc.stay_positions == (2, 3)
    assert desc.ascent_positions == (1, 5)
    assert desc.descent_positions == (4,)
    assert desc.word == S102_WORD
    assert desc.d == 4


def test_classify_steps_golden():
    steps = classify_steps(s102_matrix(), S102_WORD)
    assert [s.case for s in steps] == ["ascend", "stay", "stay", "forced", "ascend"]
    assert [s.probe for s in steps] == [0, Fraction(2), Fraction(1), None, 0]
    assert steps[0].rows == (1, 2, 3) and steps[0].cols == (1, 2, 4)
    assert steps[1].rows == (1, 2) and steps[1].cols == (1, 4)
    assert steps[2].rows == (1,) and steps[2].cols == (4,)
    assert steps[3].rows is None and steps[3].cols is None
    assert steps[4].rows == (1, 2) and steps[4].cols == (3, 4)
    assert steps[-1].value_after == Permutation((1, 3, 2, 4))


def test_classify_validation():
    z = s102_matrix()
    with pytest.raises(InputError):
        classify(z, (3, 3))
    with pytest.raises(InputError):
        classify(z, (4,))
    bad = RatMatrix(
        tuple(
            tuple(Fraction(x) for x in row)
            for row in [[1, 0, 0, 0], [1, 1, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1]]
        )
    )
    with pytest.raises(InputError):
        classify(bad, S102_WORD)


def test_descriptor_json_round_trip():
    desc = classify(s102_matrix(), S102_WORD)
    data = desc.to_json()
    assert ComponentDescriptor.from_json(data) == desc


def test_component_conditions_golden():
    desc = classify(s102_matrix(), S102_WORD)
    cond = component_conditions(desc)
    assert cond.zero_minors == (
        (1, (1, 2, 3), (1, 2, 4)),
        (5, (1, 2), (3, 4)),
    )
    assert cond.nonzero_minors == (
        (2, (1, 2), (1, 4)),
        (3, (1,), (4,)),
    )
    data = cond.to_json(4)
    assert [rec["k"] for rec in data["zero"]] == [1, 5]
    assert [rec["k"] for rec in data["nonzero"]] == [2, 3]
    assert data["nonzero"][1]["poly"] == "a14"


def test_minor_polynomial_strings():
    assert minor_polynomial((1,), (2,), 4) == "a12"
    assert minor_polynomial((1,), (1,), 4) == "1"
    assert minor_polynomial((2,), (1,), 4) == "0"
    assert minor_polynomial((1, 2), (3, 4), 4) == "a13*a24 - a14*a23"
    with pytest.raises(InputError):
        minor_polynomial((1, 2), (3,), 4)
    with pytest.raises(DomainError):
        minor_polynomial(tuple(range(1, 8)), tuple(range(1, 8)), 9)
    with pytest.raises(DomainError):
        minor_polynomial((1,), (2,), 10)


def test_minor_polynomial_matches_numeric_minor():
    rng = random.Random(5)
    for _ in range(10):
        d = rng.choice([3, 4])
        from support import random_unipotent

        z = random_unipotent(rng, d)
        size = rng.randrange(1, d)
        rows = tuple(sorted(rng.sample(range(1, d + 1), size)))
        cols = tuple(sorted(rng.sample(range(1, d + 1), size)))
        expr = minor_polynomial(rows, cols, d)
        env = {
            f"a{i}{j}": z.entry(i, j)
            for i in range(1, d + 1)
            for j in range(i + 1, d + 1)
        }
        assert eval(expr, {"__builtins__": {}}, env) == z.minor(rows, cols)


def test_factorize_golden():
    res = factorize(s102_matrix(), S102_WORD)
    assert res.t_params == {2: Fraction(1, 2), 3: Fraction(2)}
    assert res.m_params == {4: Fraction(2)}
    assert res.corrections == {4: Fraction(0)}
    kinds = [(f.kind, f.index) for f in res.group_word.factors]
    assert kinds == [("s", 3), ("y", 2), ("y", 1), ("xsinv", 3), ("s", 2)]
    w = evaluate_word(4, S102_WORD)
    assert flag_equal(evaluate(res.group_word), s102_matrix() * perm_matrix(w))


def test_factorize_json_shape():
    data = factorize(s102_matrix(), S102_WORD).to_json()
    assert data["t"] == {"2": "1/2", "3": "2"}
    assert data["m"] == {"4": "2"}
    assert data["verified"] is True
    assert data["trace"]["marks"] == ["+", "o", "o", "-", "+"]


def test_chamber_parameters_match_factorize():
    z = s102_matrix()
    desc = classify(z, S102_WORD)
    assert chamber_t(z, desc, 2) == Fraction(1, 2)
    assert chamber_t(z, desc, 3) == Fraction(2)
    res = factorize(z, S102_WORD)
    g3 = partial(res.group_word, 3)
    assert chamber_m(z, desc, 4, g3) == Fraction(2)
    with pytest.raises(InputError):
        chamber_t(z, desc, 4)
    with pytest.raises(InputError):
        chamber_m(z, desc, 2, g3)


def test_chamber_coordinates_golden():
    z = s102_matrix()
    desc = classify(z, S102_WORD)
    assert chamber_coordinates(z, desc) == {
        2: Fraction(2),
        3: Fraction(1),
        4: Fraction(4),
    }


def test_element_from_coordinates_round_trip():
    z = s102_matrix()
    desc = classify(z, S102_WORD)
    res = element_from_coordinates(desc, {2: 2, 3: 1, 4: 4})
    ref = factorize(z, S102_WORD)
    assert res.t_params == ref.t_params
    assert res.m_params == ref.m_params
    assert res.corrections == ref.corrections
    assert res.group_word == ref.group_word


def test_element_from_coordinates_validation():
    desc = classify(s102_matrix(), S102_WORD)
    with pytest.raises(InputError):
        element_from_coordinates(desc, {2: 2, 3: 1})
    with pytest.raises(DomainError):
        element_from_coordinates(desc, {2: 0, 3: 1, 4: 4})


def test_coordinates_round_trip_random():
    rng = random.Random(23)
    done = 0
    while done < 15:
        d = rng.choice([3, 4])
        word = random_reduced_word(rng, random_perm(rng, d))
        if not word:
            continue
        trace = random_distinguished(rng, d, word)
        desc = ComponentDescriptor(trace)
        t_params = {k: random_nonzero(rng) for k in desc.stay_positions}
        m_params = {k: random_rational(rng) for k in desc.descent_positions}
        gw = build_element(desc, t_params, m_params)
        z, _ = unipotent_representative(evaluate(gw))
        coords = chamber_coordinates(z, desc)
        rebuilt = element_from_coordinates(desc, coords)
        assert rebuilt.t_params == t_params
        assert rebuilt.m_params == m_params
        done += 1


def test_build_classify_factorize_round_trip():
    rng = random.Random(17)
    done = 0
    while done < 25:
        d = rng.choice([3, 4])
        word = random_reduced_word(rng, random_perm(rng, d))
        if not word:
            continue
        trace = random_distinguished(rng, d, word)
        desc = ComponentDescriptor(trace)
        t_params = {k: random_nonzero(rng) for k in desc.stay_positions}
        m_params = {k: random_rational(rng) for k in desc.descent_positions}
        gw = build_element(desc, t_params, m_params)
        z, w_pos = unipotent_representative(evaluate(gw))
        assert w_pos == evaluate_word(d, word)
        assert classify(z, word).trace == trace
        res = factorize(z, word)
        assert res.t_params == t_params
        assert res.m_params == m_params
        done += 1


def test_build_element_validation():
    desc = classify(s102_matrix(), S102_WORD)
    with pytest.raises(InputError):
        build_element(desc, {2: 1}, {4: 0})
    with pytest.raises(InputError):
        build_element(desc, {2: 1, 3: 1}, {})
    with pytest.raises(DomainError):
        build_element(desc, {2: 0, 3: 1}, {4: 0})


def test_prefix_flags_match_partial_products():
    z = s102_matrix()
    res = factorize(z, S102_WORD)
    for k in range(len(S102_WORD) + 1):
        assert flag_equal(partial(res.group_word, k), reduce_flag(z, S102_WORD, k))


def test_wrong_component_parameters_raise():
    desc = classify(s102_matrix(), S102_WORD)
    with pytest.raises(NotInComponentError):
        chamber_t(RatMatrix.identity(4), desc, 2)


def test_conditions_characterize_component():
    # A flag satisfies exactly the minor conditions of its own component.
    z = s102_matrix()
    desc = classify(z, S102_WORD)
    own = component_conditions(desc)
    for _, rows, cols in own.zero_minors:
        assert z.minor(rows, cols) == 0
    for _, rows, cols in own.nonzero_minors:
        assert z.minor(rows, cols) != 0
    w = evaluate_word(4, S102_WORD)
    for trace in enumerate_distinguished_all(w, S102_WORD):
        other = ComponentDescriptor(trace)
        if other == desc:
            continue
        cond = component_conditions(other)
        holds = all(z.minor(r, c) == 0 for _, r, c in cond.zero_minors) and all(
            z.minor(r, c) != 0 for _, r, c in cond.nonzero_minors
        )
        assert not holds


def enumerate_distinguished_all(w, word):
    from deodhar.weyl import all_permutations, bruhat_leq

    out = []
    for v in all_permutations(w.d):
        if bruhat_leq(v, w):
            out.extend(enumerate_distinguished(v, word))
    return out
