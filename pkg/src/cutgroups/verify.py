"""Theorem suites: each result becomes a quantified check over a group catalog.

A suite never assumes the statement it checks; a failure carries a witness
that the base operations reproduce in isolation.
"""
from __future__ import annotations

import json
import math
import random
import time
from collections.abc import Iterable
from dataclasses import dataclass, field
from typing import Any

from .catalog import build_group, default_catalog, emit_spec, spec_label, spec_order
from .errors import InternalInvariantViolation, LatticeCapExceeded, NotCentralUnit, NotNilpotent
from .groups import (
    FiniteGroup,
    center,
    centralizer,
    conjugation_quotient,
    is_nilpotent,
    is_solvable,
    normal_subgroups,
    quotient,
    semidirect_base,
    sylow_part,
)
from .ring import (
    GroupRingElement,
    bass_unit,
    delta_product_membership,
    is_central,
    is_symmetric,
    theta,
    unit_order,
)
from .rs import class_data, is_cut, is_rs_subgroup, pi_primes, rank_central_units, rank_preserved

SUITES = ("P0", "P1", "pgroup", "nilpotent", "L0", "c0", "T3")

DEFAULT_MAX_ORDER = {
    "P0": 100,
    "P1": 100,
    "pgroup": 81,
    "nilpotent": 144,
    "L0": 48,
    "c0": 100,
    "T3": 48,
}


@dataclass
class SuiteReport:
    suite: str
    groups: int = 0
    max_order: int = 0
    checks: int = 0
    failures: list[dict] = field(default_factory=list)
    skips: list[dict] = field(default_factory=list)
    notes: dict[str, Any] = field(default_factory=dict)
    elapsed: float = 0.0

    @property
    def passed(self) -> bool:
        return not self.failures

    def fail(self, group: str, **witness):
        self.failures.append({"group": group, "witness": witness})

    def to_dict(self, timing: bool = False) -> dict:
        d = {
            "suite": self.suite,
            "passed": self.passed,
            "census": {"count": self.groups, "max_order": self.max_order},
            "checks": self.checks,
            "failures": self.failures,
            "skips": self.skips,
            "notes": self.notes,
        }
        if timing:
            d["elapsed"] = round(self.elapsed, 3)
        return d

    def to_json(self, timing: bool = False) -> str:
        return json.dumps(self.to_dict(timing), sort_keys=True)

    def summary(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        return (f"{self.suite}: {status} groups={self.groups} max_order={self.max_order} "
                f"checks={self.checks} failures={len(self.failures)} skips={len(self.skips)} "
                f"({self.elapsed:.1f}s)")


Catalog = Iterable[dict]


def _groups(catalog: Catalog | None, max_order: int):
    specs = default_catalog(max_order) if catalog is None else list(catalog)
    for spec in sorted(specs, key=lambda s: (spec_order(s), spec_label(s), emit_spec(s))):
        if spec_order(spec) <= max_order:
            yield spec_label(spec), build_group(spec)


def _census(report: SuiteReport, G: FiniteGroup):
    report.groups += 1
    report.max_order = max(report.max_order, G.order)


def _conj(cd, x: int, y: int) -> bool:
    return cd.class_of[x] == cd.class_of[y]


# -- quotient closure --------------------------------------------------------


def suite_P1(catalog: Catalog | None = None, max_order: int = 100) -> SuiteReport:
    """RS-subgroups pass to quotients: A RS in G, N <= A finite normal => A/N RS in G/N."""
    t0 = time.perf_counter()
    rep = SuiteReport("P1")
    for label, G in _groups(catalog, max_order):
        _census(rep, G)
        normals = normal_subgroups(G)
        rs_normals = [A for A in normals if is_rs_subgroup(G, A)]
        for N in normals:
            Q, pi = quotient(G, N)
            for A in rs_normals:
                if not N.issubset(A):
                    continue
                rep.checks += 1
                image = pi.image_of_subgroup(A)
                v = is_rs_subgroup(Q, image)
                if not v:
                    rep.fail(label, A=list(A.members), N=list(N.members), quotient_witness=v.witness)
    rep.elapsed = time.perf_counter() - t0
    return rep


def suite_P0(catalog: Catalog | None = None, max_order: int = 100) -> SuiteReport:
    """Quotients of cut groups by finite normal subgroups are cut."""
    t0 = time.perf_counter()
    rep = SuiteReport("P0")
    for label, G in _groups(catalog, max_order):
        _census(rep, G)
        if not is_cut(G):
            rep.skips.append({"group": label, "reason": "not cut"})
            continue
        for N in normal_subgroups(G):
            rep.checks += 1
            Q, _ = quotient(G, N)
            v = is_cut(Q)
            if not v:
                rep.fail(label, N=list(N.members), quotient_witness=v.witness)
    rep.elapsed = time.perf_counter() - t0
    return rep


# -- p-groups and nilpotent groups ---------------------------------------------


def _prime_power(n: int) -> int | None:
    if n < 2:
        return None
    p = next(d for d in range(2, n + 1) if n % d == 0)
    while n % p == 0:
        n //= p
    return p if n == 1 else None


def _two_condition(G: FiniteGroup, elements) -> int | None:
    """First element ``a`` with ``a^3`` conjugate to neither ``a`` nor ``a^-1``."""
    cd = class_data(G)
    for a in elements:
        a3 = G.power(a, 3)
        if not (_conj(cd, a3, a) or _conj(cd, a3, int(G.inv[a]))):
            return a
    return None


def _three_condition(G: FiniteGroup, elements) -> int | None:
    """First element ``a`` with ``a^2`` not conjugate to ``a^-1``."""
    cd = class_data(G)
    for a in elements:
        if not _conj(cd, G.power(a, 2), int(G.inv[a])):
            return a
    return None


def suite_pgroup(catalog: Catalog | None = None, max_order: int = 81) -> SuiteReport:
    """Finite p-groups: cut iff (p=2, a^3 ~ a^±1 for all a) or (p=3, a^2 ~ a^-1 for all a)."""
    t0 = time.perf_counter()
    rep = SuiteReport("pgroup")
    cut_primes: dict[int, int] = {}
    for label, G in _groups(catalog, max_order):
        p = _prime_power(G.order)
        if p is None:
            continue
        if (p == 2 and G.order > 64) or (p == 3 and G.order > 81):
            continue
        _census(rep, G)
        rep.checks += 1
        cut = is_cut(G).outcome
        everyone = range(G.order)
        if p == 2:
            bad = _two_condition(G, everyone)
        elif p == 3:
            bad = _three_condition(G, everyone)
        else:
            bad = 1
        cond = bad is None
        if cut != cond:
            rep.fail(label, p=p, is_cut=cut, condition=cond, element=bad)
        if cut:
            cut_primes[p] = cut_primes.get(p, 0) + 1
            if p not in (2, 3):
                rep.fail(label, p=p, reason="cut p-group for p outside {2, 3}")
        if p == 3:
            # no nontrivial a with a^2 ~ a
            cd = class_data(G)
            rep.checks += 1
            for a in range(1, G.order):
                if _conj(cd, G.power(a, 2), a):
                    rep.fail(label, p=3, reason="a^2 conjugate to a", element=a)
                    break
    rep.notes["cut_groups_by_prime"] = {str(k): v for k, v in sorted(cut_primes.items())}
    rep.elapsed = time.perf_counter() - t0
    return rep


def suite_nilpotent(catalog: Catalog | None = None, max_order: int = 144) -> SuiteReport:
    """Finite nilpotent G: cut iff π(G) ⊆ {2,3}, 2-elements satisfy a^3 ~ a^±1 and
    3-elements satisfy a^2 ~ a^-1. Also: normal RS-subgroups have π(A) ⊆ {2,3}."""
    t0 = time.perf_counter()
    rep = SuiteReport("nilpotent")
    for label, G in _groups(catalog, max_order):
        if not is_nilpotent(G):
            rep.skips.append({"group": label, "reason": "NotNilpotent"})
            continue
        _census(rep, G)
        rep.checks += 1
        primes = pi_primes(G)
        cond = primes <= {2, 3}
        bad = None
        try:
            if cond and 2 in primes:
                bad = _two_condition(G, sylow_part(G, 2).members)
            if cond and bad is None and 3 in primes:
                bad = _three_condition(G, sylow_part(G, 3).members)
        except NotNilpotent as exc:
            rep.fail(label, reason=f"Sylow part not a subgroup: {exc}")
            continue
        cond = cond and bad is None
        cut = is_cut(G).outcome
        if cut != cond:
            rep.fail(label, is_cut=cut, condition=cond, primes=sorted(primes), element=bad)
        for A in normal_subgroups(G):
            if is_rs_subgroup(G, A):
                rep.checks += 1
                if not pi_primes(A) <= {2, 3}:
                    rep.fail(label, reason="normal RS-subgroup with a prime outside {2,3}",
                             A=list(A.members))
    rep.elapsed = time.perf_counter() - t0
    return rep


# -- rank and the augmentation lattice ------------------------------------------


def suite_L0(catalog: Catalog | None = None, max_order: int = 48) -> SuiteReport:
    """(a) rank(G/A) <= rank(G); (b) with equal ranks, no z in ±Z(G), z != 1,
    has z - 1 in Δ(G)Δ(A)."""
    t0 = time.perf_counter()
    rep = SuiteReport("L0")
    equal = differ = 0
    for label, G in _groups(catalog, max_order):
        _census(rep, G)
        Z = center(G)
        for A in normal_subgroups(G):
            rep.checks += 1
            try:
                v = rank_preserved(G, A)
            except InternalInvariantViolation as exc:
                rep.fail(label, A=list(A.members), reason=str(exc))
                continue
            if not v:
                differ += 1
                continue
            equal += 1
            for z in Z.members:
                for sign in (1, -1):
                    if z == 0 and sign == 1:
                        continue
                    u = GroupRingElement.basis(G, z, sign)
                    rep.checks += 1
                    try:
                        inside = delta_product_membership(G, A, u - 1)
                    except LatticeCapExceeded:
                        rep.skips.append({"group": label, "A": list(A.members), "reason": "LatticeCapExceeded"})
                        break
                    if inside:
                        rep.fail(label, A=list(A.members), z=z, sign=sign,
                                 reason="trivial central unit z != 1 in 1 + Δ(G)Δ(A) with equal ranks",
                                 ranks=v.witness)
    rep.notes["pairs_equal_rank"] = equal
    rep.notes["pairs_rank_drop"] = differ
    rep.elapsed = time.perf_counter() - t0
    return rep


def suite_c0(catalog: Catalog | None = None, max_order: int = 100) -> SuiteReport:
    """H = A ⋊ G/C_G(A): rank(H) = rank(H/A) and H/A cut imply π(A) ⊆ {2,3,5,7}."""
    t0 = time.perf_counter()
    rep = SuiteReport("c0")
    satisfied = 0
    for label, G in _groups(catalog, max_order):
        if not is_solvable(G):
            rep.skips.append({"group": label, "reason": "not solvable"})
            continue
        _census(rep, G)
        for A in normal_subgroups(G):
            rep.checks += 1
            Q, _ = quotient(G, centralizer(G, A))
            if not is_cut(Q):
                continue  # H/A ≅ G/C_G(A) is not cut: hypotheses fail
            H = conjugation_quotient(G, A)
            AH = semidirect_base(H)
            HA, _ = quotient(H, AH)
            if bool(is_cut(HA)) != bool(is_cut(Q)):
                rep.fail(label, A=list(A.members), reason="H/A and G/C_G(A) disagree on cut")
                continue
            if H.order != A.order * Q.order or AH.order != A.order:
                rep.fail(label, A=list(A.members), reason="wrong order for A ⋊ G/C_G(A)")
                continue
            if not rank_preserved(H, AH):
                continue
            satisfied += 1
            primes = pi_primes(A)
            if not primes <= {2, 3, 5, 7}:
                rep.fail(label, A=list(A.members), primes=sorted(primes))
    rep.notes["hypotheses_satisfied"] = satisfied
    rep.elapsed = time.perf_counter() - t0
    return rep


# -- symmetric central units -----------------------------------------------------


def _t3_check(rep: SuiteReport, label: str, u: GroupRingElement, info: dict):
    G = u.group
    rep.checks += 1
    try:
        th = theta(u)
    except NotCentralUnit:
        rep.fail(label, unit=u.to_json(), reason="not a central unit", **info)
        return None
    if not (is_symmetric(th) and is_central(th)):
        rep.fail(label, unit=u.to_json(), reason="theta(u) not symmetric and central", **info)
        return th
    order = unit_order(th)
    if order is not None and th != GroupRingElement.one(G):
        rep.fail(label, unit=u.to_json(), reason="theta(u) has finite order but is not 1", **info)
    u2 = (u * u).coeffs
    t = G.table
    found = None
    for z in center(G).members:
        if {int(t[z, g]): c for g, c in th.coeffs.items()} == u2:
            found = z
            break
    if found is None:
        rep.fail(label, unit=u.to_json(), reason="no central z with u^2 = z theta(u)", **info)
    # theta is trivial exactly on ±Z(G)
    if (th == GroupRingElement.one(G)) != (len(u.coeffs) == 1):
        rep.fail(label, unit=u.to_json(), reason="kernel of theta is not ±Z(G)", **info)
    return th


def suite_T3(catalog: Catalog | None = None, max_order: int = 48, bass_max_order: int = 30,
             seed: int = 0, products: int = 3) -> SuiteReport:
    """For sampled central units u: theta(u) = u u* is symmetric, finite order
    forces theta(u) = 1, and u^2 = z theta(u) for some central z.

    Samples: ±z for z central on the catalog; Bass units on C_n, n <= bass_max_order,
    for every g of order >= 2 and k in U(o(g)), k < o(g); plus ``products``
    seeded products of two Bass units per cyclic group (checks theta(uv) = theta(u)theta(v)).
    """
    from .catalog import cyclic

    t0 = time.perf_counter()
    rep = SuiteReport("T3")
    rng = random.Random(seed)
    for label, G in _groups(catalog, max_order):
        _census(rep, G)
        for z in center(G).members:
            for sign in (1, -1):
                _t3_check(rep, label, GroupRingElement.basis(G, z, sign), {"z": z, "sign": sign})
    bass_count = 0
    for n in range(2, bass_max_order + 1):
        G = cyclic(n)
        label = f"C{n}"
        _census(rep, G)
        units = []
        for g in range(1, n):
            o = int(G.orders[g])
            for k in range(1, o):
                if math.gcd(k, o) != 1:
                    continue
                u = bass_unit(G, g, k)
                if _t3_check(rep, label, u, {"g": g, "k": k}) is not None:
                    units.append((g, k, u))
                bass_count += 1
        for _ in range(products if len(units) >= 2 else 0):
            (g1, k1, u), (g2, k2, v) = rng.sample(units, 2)
            rep.checks += 1
            if theta(u * v) != theta(u) * theta(v):
                rep.fail(label, g=[g1, g2], k=[k1, k2], reason="theta not multiplicative")
            _t3_check(rep, label, u * v, {"g": [g1, g2], "k": [k1, k2]})
    rep.notes["bass_units"] = bass_count
    rep.notes["seed"] = seed
    rep.elapsed = time.perf_counter() - t0
    return rep


SUITE_FUNCS = {
    "P0": suite_P0,
    "P1": suite_P1,
    "pgroup": suite_pgroup,
    "nilpotent": suite_nilpotent,
    "L0": suite_L0,
    "c0": suite_c0,
    "T3": suite_T3,
}


def run_suite(name: str, max_order: int | None = None, seed: int = 0,
              catalog: Catalog | None = None) -> SuiteReport:
    fn = SUITE_FUNCS[name]
    if max_order is None:
        max_order = DEFAULT_MAX_ORDER[name]
    if name == "T3":
        return fn(catalog, max_order=max_order, bass_max_order=min(30, max_order), seed=seed)
    return fn(catalog, max_order=max_order)
