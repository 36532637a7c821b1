import random

import pytest

from helpers import random_element, random_word
from wittkit import (ElementaryProduct, evaluate, Matrix, RingPresentation, RowWithSection, UnimodularRow, act_left,
                     act_right, check_unimodular, find_elementary_reduction, power_last, section,
                     standard_column, standard_row, verify_elementary_reduction)
from wittkit.matrices import E, MatrixError
from wittkit.umrows import NotUnimodularError, check_unimodular_column


def test_check_unimodular_examples(sphere):
    x, y, z = sphere.gens
    row = check_unimodular([x, y, z])
    assert row is not None and list(row.cofactors) == [x, y, z]
    plane = RingPresentation("x y")
    assert check_unimodular(plane.gens) is None
    pi1 = check_unimodular([1, 0, 0, 0], sphere)
    assert list(pi1.cofactors) == [1, 0, 0, 0]


def test_certificate_checked_on_construction(sphere):
    x, y, z = sphere.gens
    with pytest.raises(NotUnimodularError):
        UnimodularRow(sphere, [x, y, z], [x, y, 0])


def test_standard_rows(sphere):
    assert list(standard_row(4, 4, sphere)) == [0, 0, 0, 1]
    e4 = standard_column(4, 4, sphere)
    assert list(e4) == [0, 0, 0, 1] and type(e4).__name__ == "UnimodularColumn"
    with pytest.raises(IndexError):
        standard_row(5, 4, sphere)
    x = sphere.gen("x")
    rs = RowWithSection.from_lists(sphere, [1, 0, 0], [1, x, x * x])
    assert list(rs.v) == [1, 0, 0]


def test_section_pairing(sphere):
    rs = section(sphere.gens)
    total = sum((a * b for a, b in zip(rs.v, rs.w)), sphere.zero())
    assert total == 1
    with pytest.raises(NotUnimodularError):
        RowWithSection.from_lists(sphere, sphere.gens, [0, 0, 0])


def test_act_right_examples(sphere):
    x, y, z = sphere.gens
    v = check_unimodular([x, y, z])
    assert act_right(v, Matrix.identity(sphere, 3)) == v
    moved = act_right(v, E(3, 1, 1, 3, sphere))
    assert list(moved) == [x + z, y, z]
    pi1 = standard_row(1, 4, sphere)
    g = ElementaryProduct(sphere, 4, [E(1, 2, x, 4), E(2, 3, y, 4), E(4, 1, z, 4)])
    assert list(act_right(pi1, g)) == list(evaluate(g).row(0))


def test_act_left_examples(sphere):
    x, y, z = sphere.gens
    w = check_unimodular_column([x, y, z])
    assert act_left(w, Matrix.identity(sphere, 3)) == w
    g = ElementaryProduct(sphere, 4, [E(4, 2, x, 4), E(1, 4, y * z, 4)])
    e4 = standard_column(4, 4, sphere)
    assert list(act_left(e4, g)) == list(evaluate(g).col(3))


def test_act_needs_invertible(sphere):
    x = sphere.gen("x")
    v = standard_row(1, 2, sphere)
    with pytest.raises(MatrixError):
        act_right(v, Matrix(sphere, [[x, 0], [0, 1]]))
    with pytest.raises(MatrixError):
        act_right(v, Matrix.identity(sphere, 3))
    # a unit-determinant matrix with a supplied inverse
    g = Matrix(sphere, [[2, 0], [0, 1]])
    assert list(act_right(v, g, inverse=Matrix(sphere, [["1/2", 0], [0, 1]]))) == [2, 0]


def _coeff(ring):
    return lambda rng: random_element(rng, ring, 2, 1)


def test_action_compatibility_and_transpose(sphere):
    rng = random.Random(21)
    v = check_unimodular(sphere.gens)
    for _ in range(10):
        g = random_word(rng, sphere, 3, 3, coeff=_coeff(sphere))
        h = random_word(rng, sphere, 3, 3, coeff=_coeff(sphere))
        assert act_right(act_right(v, g), h) == act_right(v, g * h)
        vg = act_right(v, g)
        # still unimodular, certificate transported
        assert sum((a * c for a, c in zip(vg, vg.cofactors)), sphere.zero()) == 1
        gt = evaluate(g).T
        assert list(act_left(v.transpose(), gt, inverse=evaluate(g.inverse()).T)) == list(vg)


def test_power_last(sphere):
    x, y, z = sphere.gens
    rs = section([x, y, z])
    one = power_last(rs, 1)
    assert list(one.v) == [x, y, z]
    sq = power_last(rs, 2)
    assert list(sq.v) == [x, y, z * z]
    assert sum((a * b for a, b in zip(sq.v, sq.w)), sphere.zero()) == 1
    pi3 = section([0, 0, 1], sphere)
    assert list(power_last(pi3, 5).v) == [0, 0, 1]
    with pytest.raises(ValueError):
        power_last(rs, 0)


def test_power_last_high_exponent(generic3):
    rs = section(generic3.gens[:3])
    out = power_last(rs, 4)
    assert sum((a * b for a, b in zip(out.v, out.w)), generic3.zero()) == 1


def test_verify_elementary_reduction(sphere):
    x, y, z = sphere.gens
    v = check_unimodular([x, y, z])
    assert verify_elementary_reduction(v, ElementaryProduct(sphere, 3), v)
    w = check_unimodular([x + z, y, z])
    assert verify_elementary_reduction(w, ElementaryProduct(sphere, 3, [E(3, 1, -1, 3, sphere)]), v)
    assert not verify_elementary_reduction(w, ElementaryProduct(sphere, 3), v)


def test_best_effort_reduction(sphere):
    row = check_unimodular([1 + sphere.gen("x"), sphere.gen("x"), sphere.gen("y")])
    found = find_elementary_reduction(row, 3, best_effort=True)
    assert found is not None
    word, target = found
    assert target.entries[-1] == 1
    assert verify_elementary_reduction(row, word, target)
    with pytest.raises(ValueError):
        find_elementary_reduction(row, 3, best_effort=False)
