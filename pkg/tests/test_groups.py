import numpy as np
import pytest
from hypothesis import assume, given, strategies as st

from cutgroups.catalog import catalog, cyclic, default_catalog, build_group
from cutgroups.errors import (
    ClosureCapExceeded,
    InvalidPermutation,
    NotAnAction,
    NotNilpotent,
    NotNormal,
    SubgroupNotInParent,
)
from cutgroups.groups import (
    GroupHom,
    Permutation,
    Subgroup,
    center,
    centralizer,
    conjugacy_classes,
    conjugation_quotient,
    direct_product,
    group_from_generators,
    is_nilpotent,
    is_solvable,
    normal_subgroups,
    quotient,
    semidirect,
    semidirect_base,
    subgroup,
    sylow_part,
    whole,
)

from oracles import all_subgroups, is_normal_brute


def perm_strategy(degree):
    return st.permutations(list(range(degree))).map(Permutation)


@st.composite
def small_groups(draw, max_degree=6, max_order=120):
    d = draw(st.integers(2, max_degree))
    gens = draw(st.lists(perm_strategy(d), min_size=1, max_size=3))
    G = group_from_generators(d, gens)
    assume(G.order <= max_order)
    return G


# -- permutations -------------------------------------------------------------


def test_permutation_product_convention():
    x = Permutation.from_cycles(3, [[0, 1]])
    y = Permutation.from_cycles(3, [[1, 2]])
    # (xy)(p) = x(y(p))
    assert all((x * y)(p) == x(y(p)) for p in range(3))


def test_permutation_invalid():
    with pytest.raises(InvalidPermutation):
        Permutation([0, 0, 1])
    with pytest.raises(InvalidPermutation):
        Permutation.from_cycles(3, [[0, 3]])
    with pytest.raises(InvalidPermutation):
        Permutation.from_cycles(4, [[0, 1], [1, 2]])


@given(perm_strategy(7), st.integers(-20, 20))
def test_permutation_power_order(p, k):
    o = p.order()
    assert (p ** o).is_identity()
    assert p ** k == p ** (k % o)
    assert p * p.inverse() == Permutation.identity(7)
    assert Permutation.from_cycles(7, p.cycles()) == p


# -- construction ------------------------------------------------------------------


def test_orbit_closure_orders():
    assert catalog("symmetric", 4).order == 24
    assert catalog("alternating", 5).order == 60
    assert catalog("dihedral", 4).order == 8
    assert catalog("quaternion", 16).order == 16
    assert catalog("dicyclic", 3).order == 12
    assert catalog("metacyclic", 7, 3, 2).order == 21
    assert catalog("heisenberg", 3).order == 27


def test_closure_cap():
    with pytest.raises(ClosureCapExceeded):
        group_from_generators(6, [Permutation.from_cycles(6, [[0, 1]]),
                                  Permutation.from_cycles(6, [[0, 1, 2, 3, 4, 5]])], cap=100)


def test_identity_is_index_zero():
    G = catalog("symmetric", 4)
    assert G.element(0).is_identity()
    assert G.index_of(G.element(7)) == 7


@given(small_groups())
def test_group_axioms(G):
    t, inv = G.table, G.inv
    n = G.order
    assert (t[0] == np.arange(n)).all() and (t[:, 0] == np.arange(n)).all()
    assert (t[np.arange(n), inv] == 0).all()
    rng = np.random.default_rng(0)
    a, b, c = rng.integers(0, n, size=(3, 50))
    assert (t[t[a, b], c] == t[a, t[b, c]]).all()
    # table agrees with permutation composition
    for x, y in zip(a[:10], b[:10]):
        assert G.element(int(t[x, y])) == G.element(int(x)) * G.element(int(y))


@given(small_groups())
def test_class_equation_and_lagrange(G):
    classes = conjugacy_classes(G)
    assert sum(len(c) for c in classes) == G.order
    for c in classes:
        assert G.order % len(c) == 0
    Z = center(G)
    assert sum(1 for c in classes if len(c) == 1) == Z.order
    for N in normal_subgroups(G):
        assert G.order % N.order == 0


@given(small_groups(max_degree=5, max_order=24))
def test_normal_subgroups_match_brute_force(G):
    expected = sorted(sorted(H) for H in all_subgroups(G) if is_normal_brute(G, H))
    assert sorted(list(N.members) for N in normal_subgroups(G)) == expected


@pytest.mark.parametrize("spec", [s for s in default_catalog(24)], ids=lambda s: str(s.get("name", "prod")))
def test_normal_subgroups_catalog_brute(spec):
    G = build_group(spec)
    expected = sorted(sorted(H) for H in all_subgroups(G) if is_normal_brute(G, H))
    assert sorted(list(N.members) for N in normal_subgroups(G)) == expected


def test_subgroup_errors():
    G = catalog("symmetric", 3)
    H = catalog("cyclic", 3)
    with pytest.raises(SubgroupNotInParent):
        Subgroup(G, [0, 9])
    with pytest.raises(SubgroupNotInParent):
        G.index_of(Permutation.from_cycles(4, [[0, 3]]))
    with pytest.raises(NotNormal):
        quotient(G, subgroup(G, [G.index_of(Permutation.from_cycles(3, [[0, 1]]))]))
    with pytest.raises(SubgroupNotInParent):
        quotient(G, whole(H))


def test_centralizer_definition():
    G = catalog("dihedral", 6)
    for N in normal_subgroups(G):
        C = centralizer(G, N)
        expect = [g for g in range(G.order)
                  if all(G.table[g, a] == G.table[a, g] for a in N.members)]
        assert list(C.members) == expect


@given(small_groups())
def test_quotient_hom(G):
    for N in normal_subgroups(G):
        Q, pi = quotient(G, N)
        assert Q.order * N.order == G.order
        assert pi.is_homomorphism() and pi.is_surjective()
        assert pi.kernel() == N


def test_quotient_examples():
    S3 = catalog("symmetric", 3)
    A3 = next(N for N in normal_subgroups(S3) if N.order == 3)
    Q, _ = quotient(S3, A3)
    assert Q.order == 2
    Q8 = catalog("quaternion", 8)
    V, _ = quotient(Q8, center(Q8))
    assert V.order == 4 and V.exponent() == 2


def test_semidirect_dihedral():
    C5, C2 = cyclic(5), cyclic(2)
    inv = C5.inv
    H = semidirect(C5, C2, [inv])
    assert H.order == 10 and not H.is_abelian()
    assert sorted(len(c) for c in conjugacy_classes(H)) == [1, 2, 2, 5]
    A = semidirect_base(H)
    assert A.order == 5 and A.is_normal()


def test_semidirect_rejects_non_action():
    C5, C3 = cyclic(5), cyclic(3)
    with pytest.raises(NotAnAction):
        semidirect(C5, C3, [C5.inv])  # order 2 automorphism from an order 3 generator
    with pytest.raises(NotAnAction):
        semidirect(C5, C3, [np.zeros(5, dtype=np.int64)])


def test_conjugation_quotient_examples():
    S3 = catalog("symmetric", 3)
    A3 = next(N for N in normal_subgroups(S3) if N.order == 3)
    H = conjugation_quotient(S3, A3)
    assert H.order == 6 and sorted(H.order_census().items()) == [(1, 1), (2, 3), (3, 2)]
    C6 = cyclic(6)
    H = conjugation_quotient(C6, whole(C6))
    assert H.order == 6 and H.is_abelian()


def test_nilpotency():
    assert is_nilpotent(catalog("quaternion", 8))
    assert is_nilpotent(direct_product(cyclic(4), cyclic(9)))
    assert not is_nilpotent(catalog("symmetric", 3))
    assert is_solvable(catalog("symmetric", 4))
    assert not is_solvable(catalog("alternating", 5))
    G = direct_product(catalog("quaternion", 8), cyclic(3))
    assert sylow_part(G, 2).order == 8 and sylow_part(G, 3).order == 3
    with pytest.raises(NotNilpotent):
        sylow_part(catalog("symmetric", 3), 2)


def test_hom_from_generator_images():
    C6, C3 = cyclic(6), cyclic(3)
    hom = GroupHom.from_generator_images(C6, C3, [C3.generator_indices[0]])
    assert hom.kernel().order == 2
    with pytest.raises(ValueError):
        GroupHom.from_generator_images(C3, C6, [C6.generator_indices[0]])
