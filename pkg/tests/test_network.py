# coding: utf-8
import json

import pytest
from hypothesis import given
from hypothesis import strategies as st

from netreserve.errors import CapacityError
from netreserve.errors import ConfigError
from netreserve.network import NetworkConfig
from netreserve.network import Server
from netreserve.network import enumerate_reservations
from netreserve.network import index_of
from netreserve.network import reservation_at
from netreserve.network import reservation_cost
from netreserve.network import validate
from netreserve.reservation import Reservation

from tests.networks import TWO_SERVER


def test_enumerate_reservations__two_server():
    reservations = enumerate_reservations(TWO_SERVER)
    assert len(reservations) == 56
    assert reservations[0] == Reservation(1, 1)
    assert reservations[-1] == Reservation(7, 8)
    assert len(set(reservations)) == 56


def test_enumerate_reservations__singleton():
    config = NetworkConfig.uniform([1, 1])
    assert enumerate_reservations(config) == [Reservation(1, 1)]
    assert config.size == 1


def test_index_of():
    config = NetworkConfig.uniform([2, 3])
    assert index_of(config, (2, 1)) == 3
    for index, a in enumerate(enumerate_reservations(config)):
        assert index_of(config, a) == index
        assert reservation_at(config, index) == a


@pytest.mark.parametrize(
    "capacities",
    [
        pytest.param([7, 8], id="two-server"),
        pytest.param([1], id="singleton"),
        pytest.param([3, 1, 4, 2], id="four-server"),
    ],
)
def test_index_of__round_trip(capacities):
    config = NetworkConfig.uniform(capacities)
    reservations = enumerate_reservations(config)
    assert len(reservations) == config.size
    for index in range(config.size):
        a = reservation_at(config, index)
        assert index_of(config, a) == index
        assert a == reservations[index]


@given(st.lists(st.integers(min_value=1, max_value=9), min_size=1, max_size=4), st.data())
def test_reservation_at__round_trip(capacities, data):
    config = NetworkConfig.uniform(capacities)
    a = tuple(data.draw(st.integers(min_value=1, max_value=capacity)) for capacity in capacities)
    assert reservation_at(config, index_of(config, a)) == Reservation(*a)
    index = data.draw(st.integers(min_value=0, max_value=config.size - 1))
    assert index_of(config, reservation_at(config, index)) == index


def test_reservation_at__out_of_range():
    with pytest.raises(IndexError):
        reservation_at(TWO_SERVER, 56)
    with pytest.raises(IndexError):
        reservation_at(TWO_SERVER, -1)


@pytest.mark.parametrize(
    "a",
    [
        pytest.param((0, 1), id="below"),
        pytest.param((8, 1), id="above"),
        pytest.param((1, 1, 1), id="length"),
    ],
)
def test_validate__invalid(a):
    with pytest.raises(ValueError):
        validate(TWO_SERVER, a)


@pytest.mark.parametrize(
    "a, expected",
    [
        pytest.param((3, 2), 3.5, id="(3, 2)"),
        pytest.param((7, 8), 65.9, id="(7, 8)"),
        pytest.param((1, 1), 0.4, id="(1, 1)"),
    ],
)
def test_reservation_cost(a, expected):
    assert reservation_cost(TWO_SERVER, a) == pytest.approx(expected)


def test_reservation_cost__zero():
    config = NetworkConfig.uniform([3, 4])
    assert reservation_cost(config, (2, 3)) == 0.0


@given(st.integers(min_value=1, max_value=7), st.integers(min_value=1, max_value=8), st.sampled_from([0, 1]))
def test_reservation_cost__monotone(a_1, a_2, n):
    a = [a_1, a_2]
    cost = reservation_cost(TWO_SERVER, a)
    if a[n] < TWO_SERVER.capacities[n]:
        a[n] += 1
        assert reservation_cost(TWO_SERVER, a) >= cost


def test_reservation_costs():
    costs = TWO_SERVER.reservation_costs()
    assert costs.shape == (56,)
    assert not costs.flags.writeable
    assert costs[index_of(TWO_SERVER, (3, 2))] == pytest.approx(3.5)
    assert TWO_SERVER.reservation_costs() is costs


def test_network_config():
    assert TWO_SERVER.N == 2
    assert TWO_SERVER.capacities == (7, 8)
    assert TWO_SERVER.v == 2.0
    assert TWO_SERVER.strides == (8, 1)
    assert TWO_SERVER.full_reservation() == Reservation(7, 8)
    assert TWO_SERVER.minimal_reservation() == Reservation(1, 1)
    assert repr(TWO_SERVER) == "<NetworkConfig(capacities=(7, 8), v=2.0)>"


def test_with_threshold():
    config = TWO_SERVER.with_threshold(0.0)
    assert config.v == 0.0
    assert config.servers == TWO_SERVER.servers


def test_with_threshold__max_size():
    # the copy keeps a ceiling above the default one
    value = {"servers": [{"capacity": 1000}, {"capacity": 1001}], "v": 1}
    config = NetworkConfig.from_value(value, max_size=2 * 10 ** 6)
    other = config.with_threshold(2.0)
    assert other.v == 2.0
    assert other.size == 1001000


def test_to_value():
    value = TWO_SERVER.to_value()
    assert value["v"] == 2.0
    assert [server["capacity"] for server in value["servers"]] == [7, 8]
    config = NetworkConfig.from_value(json.loads(json.dumps(value)))
    assert config.servers == TWO_SERVER.servers


def test_server_from_value__defaults():
    server = Server.from_value({"capacity": 3})
    assert server.capacity == 3
    assert server.f_R(3) == 0.0


@pytest.mark.parametrize(
    "value",
    [
        pytest.param([], id="not-a-mapping"),
        pytest.param({"v": 1}, id="no-servers"),
        pytest.param({"servers": [], "v": 1}, id="empty-servers"),
        pytest.param({"servers": [{"capacity": 0}], "v": 1}, id="null-capacity"),
        pytest.param({"servers": [{"capacity": 2.5}], "v": 1}, id="float-capacity"),
        pytest.param({"servers": [{}], "v": 1}, id="missing-capacity"),
        pytest.param({"servers": [{"capacity": 2}], "v": -1}, id="negative-threshold"),
        pytest.param({"servers": [{"capacity": 2, "f_R": {"kind": "cubic"}}], "v": 1}, id="bad-cost"),
        pytest.param(
            {"servers": [{"capacity": 3, "f_V": {"kind": "table", "params": {"values": [1, 2]}}}], "v": 1},
            id="short-table",
        ),
    ],
)
def test_from_value__invalid(value):
    with pytest.raises(ConfigError):
        NetworkConfig.from_value(value)


def test_capacity_ceiling():
    with pytest.raises(CapacityError):
        NetworkConfig.from_value({"servers": [{"capacity": 100}, {"capacity": 100}], "v": 1}, max_size=1000)


def test_from_json(tmpdir):
    path = tmpdir.join("network.json")
    path.write(json.dumps({"servers": [{"capacity": 2}, {"capacity": 3}], "v": 0.5}))
    config = NetworkConfig.from_json(str(path))
    assert config.capacities == (2, 3)
    assert config.v == 0.5


def test_from_json__invalid(tmpdir):
    path = tmpdir.join("network.json")
    path.write("{not json")
    with pytest.raises(ConfigError):
        NetworkConfig.from_json(str(path))
