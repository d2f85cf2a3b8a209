import json
import random
from fractions import Fraction as F

import pytest
from hypothesis import given

from hnstrata.isodata import (NewtonData, hodge_from_tuple, instance_from_dict, instance_to_dict,
                              load_instance, newton_from_slopes, newton_from_tuple, random_instance,
                              ss_nonempty, stab_mu, stab_nu, wa_nonempty)
from hnstrata.numvec import MalformedInstance, rtuple, shift, total

from conftest import instances


def test_newton_from_slopes_examples():
    n = newton_from_slopes(["1/2", "0"])
    assert (n.l, n.block_sizes, n.d) == (2, (2, 1), 3)
    assert n.nu_tuple == rtuple(["1/2", "1/2", "0"])
    n = newton_from_slopes([0] * 5)
    assert (n.l, n.d, n.block_sizes) == (5, 5, (1,) * 5)
    n = newton_from_slopes(["1/3"])
    assert (n.l, n.block_sizes, n.d, n.nu_tuple) == (1, (3,), 3, (F(1, 3),) * 3)


def test_newton_from_slopes_errors():
    with pytest.raises(MalformedInstance):
        newton_from_slopes([])
    with pytest.raises(MalformedInstance):
        newton_from_slopes(["0", "1/2"])


def test_newton_from_tuple_examples():
    n = newton_from_tuple(["1/2", "1/2", "0"])
    assert n.l == 2 and n.simple_slopes == rtuple(["1/2", "0"])
    with pytest.raises(MalformedInstance, match="not a Newton vector"):
        newton_from_tuple(["1/2", "1/2", "1/2"])
    n = newton_from_tuple([0, 0])
    assert n.l == 2 and n.simple_slopes == (0, 0)
    with pytest.raises(MalformedInstance):
        newton_from_tuple([0, 1])


def test_derived_classes():
    n = newton_from_slopes(["1/2", "1/2", "0"])
    assert n.distinct_values == rtuple(["1/2", "0"])
    assert n.class_mults == (2, 1)
    assert n.entry_mults == (4, 1)


def test_hodge_from_tuple_examples():
    h = hodge_from_tuple([4, 1, 0])
    assert h.distinct_values == rtuple([4, 1, 0]) and h.value_mults == (1, 1, 1)
    h = hodge_from_tuple([1, 1, 0])
    assert h.distinct_values == rtuple([1, 0]) and h.value_mults == (2, 1)
    assert hodge_from_tuple([0, 1]).mu_tuple == rtuple([1, 0])
    with pytest.raises(MalformedInstance):
        hodge_from_tuple([])


def test_stabilizers():
    assert stab_mu(hodge_from_tuple([4, 1, 0])) == (1, 1, 1)
    assert stab_mu(hodge_from_tuple([1, 1, 0])) == (2, 1)
    assert stab_mu(hodge_from_tuple(["2/7"] * 4)) == (4,)
    assert stab_nu(newton_from_slopes(["1/2", "0"])) == (1, 1)
    assert stab_nu(newton_from_slopes([0] * 5)) == (5,)
    assert stab_nu(newton_from_slopes(["1/2", "1/2", "0"])) == (2, 1)


def test_nonemptiness_examples():
    n2 = newton_from_tuple(["1/2", "1/2"])
    assert wa_nonempty(hodge_from_tuple([1, 0]), n2)
    n3 = newton_from_slopes(["1/2", "0"])
    assert wa_nonempty(hodge_from_tuple(n3.nu_tuple), n3)
    assert not wa_nonempty(hodge_from_tuple([4, 1, 0]), n3)
    assert ss_nonempty(hodge_from_tuple([4, 1, 0]), n3)
    assert ss_nonempty(hodge_from_tuple(n3.nu_tuple), n3)
    assert not ss_nonempty(hodge_from_tuple([0, 0]), newton_from_slopes([1, -1]))
    with pytest.raises(MalformedInstance):
        ss_nonempty(hodge_from_tuple([1, 0]), n3)


@given(instances(max_d=10))
def test_round_trip_and_identities(inst):
    n, h = inst
    assert newton_from_tuple(n.nu_tuple) == n
    assert sum(stab_mu(h)) == h.d and sum(stab_nu(n)) == n.l
    for v, m, hh in zip(n.distinct_values, n.class_mults, n.entry_mults):
        assert hh == v.denominator * m
    assert sum(n.entry_mults) == n.d


@given(instances(max_d=8, rational_mu=True))
def test_ss_is_wa_after_shift(inst):
    n, h = inst
    alpha = (total(n.nu_tuple) - total(h.mu_tuple)) / n.d
    assert ss_nonempty(h, n) == wa_nonempty(hodge_from_tuple(shift(h.mu_tuple, alpha)), n)


def test_instance_json(tmp_path):
    data = {"newton": {"slopes": ["1/2", "0"]}, "hodge": ["4", "1", "0"]}
    n, h = instance_from_dict(data)
    assert instance_to_dict(n, h) == data
    n2, _ = instance_from_dict({"newton": {"tuple": ["1/2", "1/2", "0"]}, "hodge": ["0", "4", "1"]})
    assert n2 == n
    path = tmp_path / "inst.json"
    path.write_text(json.dumps(data))
    assert load_instance(path) == (n, h)
    for bad in ({"hodge": ["1"]}, {"newton": {"slopes": ["0"], "tuple": ["0"]}, "hodge": ["1"]},
                {"newton": {"slopes": ["0"]}, "hodge": ["1", "0"]}):
        with pytest.raises(MalformedInstance):
            instance_from_dict(bad)
    path.write_text("{not json")
    with pytest.raises(MalformedInstance):
        load_instance(path)


def test_random_instance_generator():
    rng = random.Random(3)
    for _ in range(200):
        n, h = random_instance(rng, 6)
        assert 1 <= n.d <= 6 and n.d == h.d
        assert all(abs(q.numerator) <= 3 and q.denominator <= 3 for q in n.simple_slopes)
        assert all(q.denominator == 1 and -5 <= q <= 5 for q in h.mu_tuple)
    a = [random_instance(random.Random(11), 6) for _ in range(2)]
    assert a[0] == a[1]
