"""Acceptance gate: one test per criterion, each printing a PASS/FAIL line.

Run alone with ``pytest tests/test_acceptance.py -v -s``; the per-criterion
summary also appears at the end of any pytest run.
"""
import math
import time

import pytest

from cutgroups.catalog import abelian, build_group, catalog, cyclic, default_catalog, spec_label
from cutgroups.errors import AbelianCase
from cutgroups.families import CASE_I_ORDERS, MetacyclicParams, metacyclic_is_cut
from cutgroups.groups import direct_product
from cutgroups.rs import is_cut, rank_central_units
from cutgroups.verify import (
    suite_c0,
    suite_L0,
    suite_nilpotent,
    suite_P0,
    suite_P1,
    suite_pgroup,
    suite_T3,
)

from oracles import abelian_rank, cyclic_rank, is_cut_brute, is_cut_table

pytestmark = pytest.mark.slow


def line(n, ok, detail, t0):
    print(f"criterion {n:2d}: {'PASS' if ok else 'FAIL'}  {detail}  [{time.perf_counter() - t0:.1f}s]")


def _prime_power_partitions(limit):
    """Every abelian group of order <= limit as a list of prime-power cyclic orders."""
    primes = [p for p in range(2, limit + 1) if all(p % d for d in range(2, math.isqrt(p) + 1))]

    def partitions(k, largest):
        if k == 0:
            yield []
            return
        for part in range(min(k, largest), 0, -1):
            for rest in partitions(k - part, part):
                yield [part] + rest

    groups = [[]]
    for p in primes:
        extended = []
        for g in groups:
            order = math.prod(g) if g else 1
            extended.append(g)
            k = 1
            while order * p ** k <= limit:
                for parts in partitions(k, k):
                    extended.append(g + [p ** e for e in parts])
                k += 1
        groups = extended
    return [g for g in groups if g]


@pytest.mark.criterion(1, "rank oracle: cyclic n <= 100, abelian order <= 64")
def test_criterion_1_rank_oracle():
    t0 = time.perf_counter()
    bad = [n for n in range(1, 101) if rank_central_units(cyclic(n)) != cyclic_rank(n)]
    shapes = _prime_power_partitions(64)
    bad += [tuple(s) for s in shapes if rank_central_units(abelian(s)) != abelian_rank(s)]
    line(1, not bad, f"100 cyclic + {len(shapes)} abelian groups, mismatches={bad[:5]}", t0)
    assert len(shapes) > 100
    assert not bad


@pytest.mark.criterion(2, "is_cut <=> rank 0 <=> elementwise RS, catalog to order 200")
def test_criterion_2_equivalence():
    t0 = time.perf_counter()
    specs = default_catalog(200)
    bad = []
    for spec in specs:
        G = build_group(spec)
        cut = bool(is_cut(G))
        if not (cut == (rank_central_units(G) == 0) == is_cut_table(G)):
            bad.append(spec_label(spec))
    line(2, not bad, f"{len(specs)} groups, mismatches={bad[:5]}", t0)
    assert not bad


@pytest.mark.criterion(3, "suite_P0 and suite_P1, cap 100")
def test_criterion_3_quotient_suites():
    t0 = time.perf_counter()
    p0 = suite_P0(max_order=100)
    p1 = suite_P1(max_order=100)
    ok = p0.passed and p1.passed
    line(3, ok, f"P0 checks={p0.checks} failures={len(p0.failures)}; "
                f"P1 checks={p1.checks} failures={len(p1.failures)}", t0)
    assert ok


@pytest.mark.criterion(4, "suite_pgroup, 2-groups to 64 and 3-groups to 81")
def test_criterion_4_pgroups():
    t0 = time.perf_counter()
    rep = suite_pgroup(max_order=81)
    census = rep.notes["cut_groups_by_prime"]
    ok = rep.passed and set(census) <= {"2", "3"} and rep.groups > 0
    line(4, ok, f"{rep.groups} p-groups, cut by prime {census}, failures={len(rep.failures)}", t0)
    assert ok


@pytest.mark.criterion(5, "suite_nilpotent, nilpotent catalog members to 144")
def test_criterion_5_nilpotent():
    t0 = time.perf_counter()
    rep = suite_nilpotent(max_order=144)
    first = [f["group"] for f in rep.failures[:5]]
    line(5, rep.passed, f"{rep.groups} groups, failures={len(rep.failures)} first={first}", t0)
    assert rep.passed, rep.failures[:3]


@pytest.mark.criterion(6, "suite_L0, rank monotonicity and trivial-unit lattice check to 48")
def test_criterion_6_l0():
    t0 = time.perf_counter()
    rep = suite_L0(max_order=48)
    first = [f["group"] for f in rep.failures[:5]]
    line(6, rep.passed, f"{rep.groups} groups, checks={rep.checks}, failures={len(rep.failures)} "
                        f"first={first}", t0)
    assert rep.passed, rep.failures[:3]


@pytest.mark.criterion(7, "suite_c0, solvable catalog members to 100")
def test_criterion_7_c0():
    t0 = time.perf_counter()
    rep = suite_c0(max_order=100)
    line(7, rep.passed, f"{rep.groups} groups, hypotheses satisfied "
                        f"{rep.notes['hypotheses_satisfied']} times, failures={len(rep.failures)}", t0)
    assert rep.passed


@pytest.mark.criterion(8, "suite_T3, trivial units to 48 and Bass units on C_n, n <= 30")
def test_criterion_8_t3():
    t0 = time.perf_counter()
    rep = suite_T3(max_order=48, bass_max_order=30)
    line(8, rep.passed, f"{rep.checks} checks, {rep.notes['bass_units']} Bass units, "
                        f"failures={len(rep.failures)}", t0)
    assert rep.passed


def _generated(m, r):
    out, x = set(), 1
    for _ in range(m):
        out |= {x % m, (-x) % m}
        x = x * r % m
    return out


@pytest.mark.criterion(9, "metacyclic agreement, m <= 200 and Case I list")
def test_criterion_9_metacyclic():
    t0 = time.perf_counter()
    bad = []
    count = 0
    for m in range(3, 201):
        units = {j for j in range(1, m) if math.gcd(j, m) == 1}
        for r in sorted(units):
            count += 1
            if r == 1:
                try:
                    metacyclic_is_cut(MetacyclicParams(m, 0, r))
                    bad.append((m, r, "no AbelianCase"))
                except AbelianCase:
                    pass
                continue
            if metacyclic_is_cut(MetacyclicParams(m, 0, r)).outcome != (_generated(m, r) == units):
                bad.append((m, r))
    for n in range(0, 201, 2):
        if metacyclic_is_cut(MetacyclicParams(0, n, -1)).outcome != (n in CASE_I_ORDERS):
            bad.append((0, n, -1))
    line(9, not bad, f"{count} (m, r) pairs and 101 Case I orders, mismatches={bad[:5]}", t0)
    assert not bad


@pytest.mark.criterion(10, "spot facts by definitional brute force")
def test_criterion_10_spot_facts():
    t0 = time.perf_counter()
    cut = [catalog("symmetric", 3), catalog("symmetric", 4), catalog("alternating", 4),
           catalog("quaternion", 8), catalog("dihedral", 4), cyclic(4), cyclic(6)]
    not_cut = [cyclic(5), cyclic(7), cyclic(9), direct_product(cyclic(2), cyclic(9))]
    bad = [G.name for G in cut if not (is_cut(G) and is_cut_brute(G))]
    bad += [G.name or "C2xC9" for G in not_cut if is_cut(G) or is_cut_brute(G)]
    line(10, not bad, f"{len(cut)} cut, {len(not_cut)} non-cut, mismatches={bad}", t0)
    assert not bad
