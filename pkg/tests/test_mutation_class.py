import json

import pytest

from quivercount.canonical import canonical_key
from quivercount.mutation_class import (
    CapExceeded,
    class_to_json,
    enumerate_class,
    seed_cycle,
    seed_dynkin_d,
    write_class_dir,
    write_class_json,
)
from quivercount.quiver import ExchangeQuiver, max_multiplicity, mutate, read_quiver


def test_seed_cycle_shapes():
    double = seed_cycle(1, 1)
    assert double == ExchangeQuiver.from_arrows(2, [(0, 1, 2)])
    four = seed_cycle(2, 2)
    assert four == ExchangeQuiver.from_arrows(4, [(0, 1), (1, 2), (3, 2), (0, 3)])
    oriented = seed_cycle(0, 5)
    assert all(oriented.b[(i + 1) % 5][i] == 1 for i in range(5))


def test_seed_cycle_rejections():
    with pytest.raises(ValueError):
        seed_cycle(0, 1)
    with pytest.raises(ValueError):
        seed_cycle(0, 2)
    with pytest.raises(ValueError):
        seed_cycle(2, 0)


def test_seed_dynkin_d_shape():
    q = seed_dynkin_d(4)
    degrees = sorted(
        sum(1 for j in range(4) if q.b[i][j]) for i in range(4)
    )
    assert degrees == [1, 1, 1, 3]
    with pytest.raises(ValueError):
        seed_dynkin_d(3)


def test_single_vertex_class():
    q = ExchangeQuiver.from_matrix([[0]])
    assert enumerate_class(q).size == 1


def test_four_cycle_balanced_class_has_four_members(cycle_class):
    assert cycle_class(2, 2).size == 4


def test_four_cycle_lopsided_class_has_five_members(cycle_class):
    assert cycle_class(1, 3).size == 5


def test_dynkin_d_sizes(dynkin_class):
    assert dynkin_class(4).size == 6
    assert dynkin_class(5).size == 26


def test_class_is_closed_under_mutation(cycle_class):
    mc = cycle_class(1, 3)
    for q in mc.representatives():
        for k in range(q.n):
            assert mutate(q, k) in mc


def test_seed_independence(cycle_class):
    mc = cycle_class(2, 2)
    for q in mc.representatives():
        again = enumerate_class(q)
        assert set(again.members) == set(mc.members)


def test_swapped_seed_gives_equal_key_sets(cycle_class):
    forward = cycle_class(1, 3)
    backward = enumerate_class(seed_cycle(3, 1))
    assert set(forward.members) == set(backward.members)


def test_each_member_keyed_by_its_canonical_key(cycle_class):
    mc = cycle_class(2, 3)
    for key, q in mc.members.items():
        assert canonical_key(q) == key
    assert max(max_multiplicity(q) for q in mc.representatives()) == 2


def test_enumeration_is_deterministic():
    a = enumerate_class(seed_cycle(2, 3))
    b = enumerate_class(seed_cycle(2, 3))
    assert a.members == b.members
    assert a.depths == b.depths


def test_cap_exceeded_on_wild_seed():
    kronecker3 = ExchangeQuiver.from_arrows(2, [(0, 1, 3)])
    with pytest.raises(CapExceeded):
        enumerate_class(kronecker3)


def test_cap_exceeded_during_walk():
    # acyclic triangle with double arrows blows up under mutation
    q = ExchangeQuiver.from_arrows(3, [(0, 1, 2), (1, 2, 2), (0, 2, 2)])
    with pytest.raises(CapExceeded):
        enumerate_class(q)


def test_disconnected_seed_rejected():
    with pytest.raises(ValueError):
        enumerate_class(ExchangeQuiver.from_arrows(2, []))


def test_json_dump_is_sorted_and_complete(cycle_class, tmp_path):
    mc = cycle_class(2, 2)
    entries = class_to_json(mc)
    assert [e["key"] for e in entries] == [k.hex() for k in mc.keys()]
    assert {e["depth"] for e in entries} <= {0, 1, 2, 3}
    assert min(e["depth"] for e in entries) == 0
    path = tmp_path / "class.json"
    write_class_json(mc, path)
    assert json.loads(path.read_text()) == entries


def test_class_dir_dump_roundtrips(cycle_class, tmp_path):
    mc = cycle_class(1, 3)
    out = tmp_path / "members"
    write_class_dir(mc, out)
    files = sorted(out.iterdir())
    assert len(files) == mc.size
    keys = {canonical_key(read_quiver(f)) for f in files}
    assert keys == set(mc.members)
