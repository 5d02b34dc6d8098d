from fractions import Fraction

import pytest

import jset


def test_shift_and_jumpsets():
    s = jset.Shift.rho_ep(3, 6)
    assert s(1) == 3 and s(4) == 10
    assert s.e_star == 9
    js = jset.JumpSet(s, [(1, 2), (4, 1)])
    assert js.is_admissible()
    assert repr(js) == "({1,4},(2,1))"
    assert jset.jumpset_from_json(js.to_json()) == js
    with pytest.raises(jset.DomainError):
        jset.JumpSet(s, [(3, 1)])


def test_enumerate_and_exact_masses():
    s = jset.Shift.rho_ep(2, 2)
    sets = jset.enumerate(s, admissible_only=True)
    assert [repr(x) for x in sets] == ["({1},(2))", "({1,3},(2,1))", "({1,4},(2,1))"]
    d = jset.exact_distribution(s, p=2, q=2)
    assert sum(Fraction(v) for v in d.values()) == 1
    assert d["({1,3},(2,1))"] == "1/2"


def test_field_oracle_and_tame():
    # x^2 + 2x + 2 over Q_2
    js = jset.field_jump_set([[[0, 1]], [[0, 1]]], p=2)
    assert repr(js) == "({1},(2))"
    with pytest.raises(jset.PrecisionError) as err:
        jset.field_jump_set([[[0, 1]], [[0, 1]]], p=2, precision=2)
    assert err.value.required > 2
    t = jset.tame_transform(jset.JumpSet(jset.Shift.rho_ep(3, 6), [(1, 2), (4, 1)]), 2)
    assert repr(t) == "({2,8},(2,1))"


def test_realize_round_trip():
    target = jset.JumpSet(jset.Shift.rho_ep(3, 6), [(1, 2), (4, 1)])
    poly = jset.realize(target)
    assert jset.field_jump_set(poly["g"], p=3, precision=poly["precision"]) == target
