import pytest

from immersion_census.encodings.y_method import UUniverse
from immersion_census.encodings.z_method import ZPrimeUniverse
from immersion_census.grouporbits.group_spec import GroupName, make_group
from immersion_census.grouporbits.orbit_of import OrbitClosureError
from immersion_census.grouporbits.transversal_sweep import count_shard, transversal_sweep
from immersion_census.grouporbits.universe import ExplicitUniverse


def test_z_sweep_counts_oo_immersions():
    summaries = transversal_sweep(ZPrimeUniverse(3), make_group(GroupName.C_RHO_PRIME, 3), 64)
    assert len(summaries) == 22
    assert sum(s.length for s in summaries) == ZPrimeUniverse(3).size
    assert [s.canonical for s in summaries] == sorted(s.canonical for s in summaries)


def test_sharded_sweep_matches_sequential(tmp_path):
    universe = UUniverse(3)
    group = make_group(GroupName.D_N, 3)
    sequential = transversal_sweep(universe, group, 64)
    sharded = transversal_sweep(universe, group, 64, jobs=2, cache_dir=tmp_path)
    assert sharded == sequential
    shards = sorted(tmp_path.glob("U_n3_D_n_shard*.json"))
    assert shards
    # resumed from the shard files
    assert transversal_sweep(universe, group, 64, jobs=2, cache_dir=tmp_path) == sequential


def test_count_shard_tallies_canonical_forms():
    universe = ZPrimeUniverse(2)
    group = make_group(GroupName.C_RHO_PRIME, 2)
    tally = count_shard(universe, group, 0, universe.size)
    assert sum(tally.values()) == 6
    assert len(tally) == 4


def test_universe_not_closed_under_the_action():
    universe = ExplicitUniverse("broken", 4, ((2, 3, 1, 0),))
    with pytest.raises(OrbitClosureError):
        transversal_sweep(universe, make_group(GroupName.C_RHO_PRIME, 2), 64)
