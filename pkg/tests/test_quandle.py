import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import brute_iso_classes, brute_is_quandle, brute_isomorphic, exhaust_quandles
from symquandle.finite_group import cyclic_group, symmetric_group
from symquandle.quandle import (AxiomViolation, FormatError, LimitExceeded, NotClosed,
                                Permutation, conjugation_quandle, dihedral_quandle,
                                enumerate_quandles, inner_translation, is_connected,
                                is_involutive, orbits, relabel, trivial_quandle,
                                validate_quandle)


def test_validate_dihedral3():
    q = validate_quandle([[(2 * y - x) % 3 for y in range(3)] for x in range(3)])
    assert q.size == 3


def test_validate_idempotence_failure():
    with pytest.raises(AxiomViolation) as exc:
        validate_quandle([[1, 0], [0, 1]])
    assert exc.value.axiom == 1
    assert exc.value.witness == (0,)


def test_validate_right_invertibility_failure():
    with pytest.raises(AxiomViolation) as exc:
        validate_quandle([[0, 0], [0, 1]])
    assert exc.value.axiom == 2
    assert exc.value.witness == (0,)


@pytest.mark.parametrize("table", [[[0, 3], [1, 1]], [[0, 1]], [], [[0, "a"], [1, 1]], [[0, True], [1, 1]]])
def test_format_errors_are_not_axiom_violations(table):
    with pytest.raises(FormatError):
        validate_quandle(table)


def test_trivial_quandle():
    assert trivial_quandle(1).table == ((0,),)
    assert trivial_quandle(2).table == ((0, 0), (1, 1))
    assert all(len(set(row)) == 1 for row in trivial_quandle(3).table)


def test_dihedral_quandle():
    assert dihedral_quandle(3).table == ((0, 2, 1), (2, 1, 0), (1, 0, 2))
    assert dihedral_quandle(1).table == ((0,),)
    q4 = dihedral_quandle(4)
    assert brute_is_quandle(q4.table)
    assert is_involutive(q4)


def test_conjugation_quandle_abelian_is_trivial():
    q = conjugation_quandle(cyclic_group(3), range(3))
    assert q.table == trivial_quandle(3).table


def test_conjugation_quandle_s3_transpositions():
    s3, elems = symmetric_group(3)
    transpositions = [i for i, p in enumerate(elems)
                      if sum(1 for k in range(3) if p[k] != k) == 2]
    q = conjugation_quandle(s3, transpositions)
    assert brute_isomorphic(q.table, dihedral_quandle(3).table)


def test_conjugation_quandle_not_closed():
    s3, elems = symmetric_group(3)
    t = elems.index((1, 0, 2))
    c = elems.index((1, 2, 0))
    with pytest.raises(NotClosed):
        conjugation_quandle(s3, [t, c])


def test_inner_translation():
    assert inner_translation(trivial_quandle(3), 1).is_identity()
    assert inner_translation(dihedral_quandle(3), 0) == Permutation((0, 2, 1))
    assert inner_translation(dihedral_quandle(4), 1) == Permutation((2, 1, 0, 3))


def test_inner_translation_inverse():
    q = dihedral_quandle(5)
    s = inner_translation(q, 2)
    assert (s * s.inverse()).is_identity()


def test_orbits():
    assert orbits(trivial_quandle(2)) == [(0,), (1,)]
    assert orbits(dihedral_quandle(3)) == [(0, 1, 2)]
    assert orbits(dihedral_quandle(4)) == [(0, 2), (1, 3)]


def test_is_involutive():
    assert is_involutive(dihedral_quandle(5))
    assert is_involutive(trivial_quandle(3))
    s3, _ = symmetric_group(3)
    conj = conjugation_quandle(s3, range(6))
    t = conj.table
    # oracle: literal scan of the table for some (x*y)*y != x
    assert any(t[t[x][y]][y] != x for x in range(6) for y in range(6))
    assert not is_involutive(conj)


@pytest.mark.parametrize("n", range(1, 10))
def test_dihedral_connected_iff_odd(n):
    assert is_connected(dihedral_quandle(n)) == (n % 2 == 1)


def test_enumerate_small_orders_against_full_exhaustion():
    # n <= 3: every table in n^(n^2), no structural shortcut
    for n in (1, 2, 3):
        tables = [
            [list(vals[i * n:(i + 1) * n]) for i in range(n)]
            for vals in itertools.product(range(n), repeat=n * n)
        ]
        classes = brute_iso_classes([t for t in tables if brute_is_quandle(t)])
        assert len(enumerate_quandles(n)) == len(classes) == [1, 1, 3][n - 1]


def test_enumerate_order4_against_column_exhaustion():
    classes = brute_iso_classes(exhaust_quandles(4))
    got = enumerate_quandles(4)
    assert len(got) == len(classes) == 7
    for t in classes:
        assert sum(brute_isomorphic(t, q.table) for q in got) == 1


def test_enumerate_contains_trivial_and_dihedral():
    for n in range(1, 6):
        qs = enumerate_quandles(n)
        assert any(brute_isomorphic(q.table, trivial_quandle(n).table) for q in qs)
        if n >= 3:
            assert any(brute_isomorphic(q.table, dihedral_quandle(n).table) for q in qs)


def test_enumerate_limit():
    with pytest.raises(LimitExceeded):
        enumerate_quandles(6)


def test_enumerate_outputs_are_valid_and_sorted():
    qs = enumerate_quandles(4)
    assert all(brute_is_quandle(q.table) for q in qs)
    assert [q.table for q in qs] == sorted(q.table for q in qs)


@st.composite
def quandle_and_perm(draw):
    qs = [q for n in range(1, 5) for q in enumerate_quandles(n)]
    q = draw(st.sampled_from(qs))
    perm = draw(st.permutations(range(q.size)))
    return q, tuple(perm)


@settings(max_examples=60, deadline=None)
@given(quandle_and_perm())
def test_orbit_partition_properties(qp):
    q, perm = qp
    blocks = orbits(q)
    assert sorted(x for b in blocks for x in b) == list(range(q.size))
    where = {x: i for i, b in enumerate(blocks) for x in b}
    assert all(where[x] == where[q.table[x][y]] for x in range(q.size) for y in range(q.size))
    # relabeling preserves the quandle and the orbit sizes
    r = relabel(q, perm)
    assert brute_is_quandle(r.table)
    assert sorted(map(len, orbits(r))) == sorted(map(len, blocks))
