import pytest
from hypothesis import given, strategies as st

from cutgroups.catalog import abelian, build_group, catalog, cyclic, default_catalog
from cutgroups.errors import NotNormal, SubgroupNotInParent
from cutgroups.groups import direct_product, normal_subgroups, subgroup, whole
from cutgroups.rs import (
    class_data,
    is_cut,
    is_rs_element,
    is_rs_subgroup,
    pi_primes,
    q_classes,
    r_classes,
    rank_central_units,
    rank_preserved,
)

from oracles import abelian_rank, cyclic_rank, is_cut_brute, rs_element_brute


def test_rs_element_examples():
    S3 = catalog("symmetric", 3)
    assert all(is_rs_element(S3, x) for x in range(S3.order))
    C5 = cyclic(5)
    v = is_rs_element(C5, C5.generator_indices[0])
    assert v.outcome is False
    w = v.witness
    # the witness replays: x^j is neither x nor x^-1
    g = C5.generator_indices[0]
    assert C5.power(g, w["exponent"]) == w["power"]
    assert w["power"] not in (g, int(C5.inv[g]))
    assert is_rs_element(C5, 0)


def test_rs_subgroup_examples():
    C8 = cyclic(8)
    g = C8.generator_indices[0]
    assert not is_rs_subgroup(C8, whole(C8))
    # <g^2> has order 4, exponent 4: RS
    assert is_rs_subgroup(C8, subgroup(C8, [C8.power(g, 2)]))
    with pytest.raises(SubgroupNotInParent):
        is_rs_subgroup(cyclic(4), whole(C8))


@pytest.mark.parametrize("name,params,expected", [
    ("symmetric", (3,), True), ("symmetric", (4,), True), ("alternating", (4,), True),
    ("quaternion", (8,), True), ("dihedral", (4,), True), ("cyclic", (4,), True),
    ("cyclic", (6,), True), ("cyclic", (5,), False), ("cyclic", (7,), False),
    ("cyclic", (9,), False), ("alternating", (5,), False), ("symmetric", (5,), True),
])
def test_cut_spot_facts(name, params, expected):
    G = catalog(name, *params)
    assert bool(is_cut(G)) is expected
    assert is_cut_brute(G) is expected


def test_c2_x_c9_not_cut():
    G = direct_product(cyclic(2), cyclic(9))
    assert not is_cut(G) and not is_cut_brute(G)


@pytest.mark.parametrize("n", range(1, 61))
def test_cyclic_rank_oracle(n):
    assert rank_central_units(cyclic(n)) == cyclic_rank(n)


@given(st.lists(st.integers(1, 8), min_size=1, max_size=3).filter(lambda xs: 1 < __import__("math").prod(xs) <= 64))
def test_abelian_rank_oracle(orders):
    assert rank_central_units(abelian(orders)) == abelian_rank(orders)


@pytest.mark.parametrize("spec", default_catalog(32), ids=lambda s: str(s.get("name", "prod")))
def test_cut_iff_rank_zero_iff_brute(spec):
    G = build_group(spec)
    cut = bool(is_cut(G))
    assert cut == (rank_central_units(G) == 0)
    assert cut == all(rs_element_brute(G, x) for x in G.elements)


def test_class_partitions():
    S3 = catalog("symmetric", 3)
    assert sorted(len(c) for c in q_classes(S3)) == [1, 2, 3]
    C5 = cyclic(5)
    assert sorted(len(c) for c in q_classes(C5)) == [1, 4]
    assert sorted(len(c) for c in r_classes(C5)) == [1, 2, 2]
    cd = class_data(C5)
    assert len(cd.reps) == 5


@given(st.integers(1, 40))
def test_q_classes_refine_nothing_r(n):
    # every R-class lies inside a Q-class (inversion is a coprime power)
    G = cyclic(n)
    q = {x: i for i, c in enumerate(q_classes(G)) for x in c}
    for c in r_classes(G):
        assert len({q[x] for x in c}) == 1


def test_rank_preserved_examples():
    C5 = cyclic(5)
    v = rank_preserved(C5, whole(C5))
    assert v.outcome is False and v.witness == {"rank_group": 1, "rank_quotient": 0}
    S3 = catalog("symmetric", 3)
    A3 = next(N for N in normal_subgroups(S3) if N.order == 3)
    assert rank_preserved(S3, A3)
    with pytest.raises(NotNormal):
        rank_preserved(S3, subgroup(S3, [1]) if not subgroup(S3, [1]).is_normal() else subgroup(S3, [2]))


@pytest.mark.parametrize("spec", default_catalog(24), ids=lambda s: str(s.get("name", "prod")))
def test_rank_monotone_under_quotients(spec):
    G = build_group(spec)
    for N in normal_subgroups(G):
        assert rank_preserved(G, N).witness["rank_quotient"] <= rank_central_units(G)


def test_pi_primes():
    assert pi_primes(cyclic(12)) == {2, 3}
    assert pi_primes(catalog("alternating", 5)) == {2, 3, 5}
    assert pi_primes(cyclic(1)) == set()
    G = cyclic(30)
    assert pi_primes(subgroup(G, [G.power(G.generator_indices[0], 6)])) == {5}
