# coding: utf-8
import pytest

from netreserve.policies import POLICIES
from netreserve.policies import make_policy
from netreserve.policies.base_policy import BasePolicy
from netreserve.simplex import Distribution

from tests.networks import TWO_SERVER


@pytest.mark.parametrize("name", ["saddle", "lazy", "naive", "lagrangian"])
def test_make_policy(name):
    policy = make_policy(name, TWO_SERVER)
    assert isinstance(policy, POLICIES[name])
    assert policy.name == name
    assert policy.initial_index == 0


def test_make_policy__unknown():
    with pytest.raises(KeyError):
        make_policy("greedy", TWO_SERVER)


def test_base_policy():
    policy = BasePolicy(TWO_SERVER, initial_request=(2, 3))
    assert policy.initial_index == 10
    assert policy.initial_distribution == Distribution.point_mass(56, 10)
    assert policy.lambda_ == 0.0
    assert policy.options == {"initial_request": (2, 3)}
    with pytest.raises(NotImplementedError):
        policy.decide((1, 1), None)


def test_base_policy__invalid_initial_request():
    with pytest.raises(ValueError):
        BasePolicy(TWO_SERVER, initial_request=(9, 9))
