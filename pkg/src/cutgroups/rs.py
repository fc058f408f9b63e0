"""RS-elements, RS-subgroups, the cut-property and the central unit rank.

An element ``x`` of finite order is an RS-element of ``G`` when ``x^j`` is
conjugate to ``x`` or ``x^-1`` for every ``j`` coprime to ``o(x)``. A finite
group is cut exactly when all its elements are RS-elements. The rank of the
central units of ``Z[G]`` is computed as (#real classes) - (#rational classes).
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import InternalInvariantViolation, SubgroupNotInParent
from .groups import FiniteGroup, Subgroup, conjugacy_classes, quotient, whole, _require_normal
from .verdict import Verdict


def _coprime_exponents(n: int) -> list[int]:
    return [j for j in range(1, n + 1) if math.gcd(j, n) == 1]


def _union_find_blocks(n: int, pairs) -> list[list[int]]:
    parent = list(range(n))

    def find(a):
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    for a, b in pairs:
        ra, rb = find(a), find(b)
        if ra != rb:
            parent[max(ra, rb)] = min(ra, rb)
    blocks: dict[int, list[int]] = {}
    for i in range(n):
        blocks.setdefault(find(i), []).append(i)
    return sorted(blocks.values())


@dataclass(frozen=True)
class ClassData:
    """Conjugacy classes with the coprime-power (Q) and inversion (R) orbits.

    ``q_blocks`` and ``r_blocks`` partition class indices.
    """

    group: FiniteGroup
    classes: list[list[int]]
    class_of: np.ndarray
    q_blocks: list[list[int]]
    r_blocks: list[list[int]]

    @property
    def reps(self) -> list[int]:
        return [c[0] for c in self.classes]

    def power_map(self, c: int, j: int) -> int:
        """Class of ``x^j`` for ``x`` in class ``c``."""
        x = self.classes[c][0]
        return int(self.class_of[self.group.power(x, j)])

    def _elements(self, blocks) -> list[list[int]]:
        return [sorted(e for c in b for e in self.classes[c]) for b in blocks]

    def q_classes(self) -> list[list[int]]:
        return self._elements(self.q_blocks)

    def r_classes(self) -> list[list[int]]:
        return self._elements(self.r_blocks)


def class_data(G: FiniteGroup) -> ClassData:
    def compute():
        classes = conjugacy_classes(G)
        class_of = G.class_labels
        q_pairs, r_pairs = [], []
        for c, cls in enumerate(classes):
            x = cls[0]
            pw = G.powers(x)
            o = len(pw)
            for j in _coprime_exponents(o):
                q_pairs.append((c, int(class_of[pw[j % o]])))
            r_pairs.append((c, int(class_of[G.inv[x]])))
        n = len(classes)
        return ClassData(G, classes, class_of,
                         _union_find_blocks(n, q_pairs), _union_find_blocks(n, r_pairs))
    return G.cached("class_data", compute)


def q_classes(G: FiniteGroup) -> list[list[int]]:
    """Rational classes as element partitions."""
    return class_data(G).q_classes()


def r_classes(G: FiniteGroup) -> list[list[int]]:
    """Real classes (classes merged with their inverse class)."""
    return class_data(G).r_classes()


def is_rs_element(G: FiniteGroup, x: int) -> Verdict:
    cd = class_data(G)
    pw = G.powers(x)
    o = len(pw)
    allowed = {int(cd.class_of[x]), int(cd.class_of[G.inv[x]])}
    for j in _coprime_exponents(o):
        y = pw[j % o]
        if int(cd.class_of[y]) not in allowed:
            return Verdict(False, {"element": int(x), "exponent": j, "power": int(y)})
    return Verdict(True)


def rs_flags(G: FiniteGroup) -> np.ndarray:
    """Boolean array: is element ``i`` an RS-element (decided once per class)."""
    def compute():
        cd = class_data(G)
        per_class = np.array([is_rs_element(G, c[0]).outcome for c in cd.classes], dtype=bool)
        out = per_class[cd.class_of]
        out.setflags(write=False)
        return out
    return G.cached("rs_flags", compute)


def is_rs_subgroup(G: FiniteGroup, A: Subgroup) -> Verdict:
    if A.parent is not G:
        raise SubgroupNotInParent("subgroup belongs to a different group")
    flags = rs_flags(G)
    bad = [a for a in A.members if not flags[a]]
    if bad:
        return is_rs_element(G, bad[0])
    return Verdict(True)


def is_cut(G: FiniteGroup) -> Verdict:
    return is_rs_subgroup(G, whole(G))


def rank_central_units(G: FiniteGroup) -> int:
    cd = class_data(G)
    return len(cd.r_blocks) - len(cd.q_blocks)


def rank_preserved(G: FiniteGroup, A: Subgroup) -> Verdict:
    _require_normal(G, A)
    Q, _ = quotient(G, A)
    rg, rq = rank_central_units(G), rank_central_units(Q)
    if rq > rg:
        raise InternalInvariantViolation(f"rank of quotient {rq} exceeds rank of group {rg}")
    return Verdict(rg == rq, {"rank_group": rg, "rank_quotient": rq})


def pi_primes(X: FiniteGroup | Subgroup) -> set[int]:
    """Primes ``p`` such that ``X`` has an element of order ``p``."""
    if isinstance(X, Subgroup):
        orders = {int(X.parent.orders[m]) for m in X.members}
    else:
        orders = {int(o) for o in np.unique(X.orders)}
    return {o for o in orders if o > 1 and all(o % d for d in range(2, math.isqrt(o) + 1))}
