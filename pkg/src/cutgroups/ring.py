"""Exact arithmetic in the integral group ring Z[G] of a finite group."""
from __future__ import annotations

import math
from collections.abc import Iterable, Mapping

import numpy as np

from . import kernels
from .errors import (
    ClosureCapExceeded,
    GroupMismatch,
    LatticeCapExceeded,
    NotCentralUnit,
    NotCoprime,
    TrivialOrder,
)
from .groups import FiniteGroup, Subgroup, _require_normal, center
from .linalg import IntegerLattice, determinant, solve

DETERMINANT_CAP = 200
LATTICE_CAP = 20_000
ORDER_BOUND_FACTOR = 12


class GroupRingElement:
    """A finitely supported integer combination of group elements.

    ``coeffs`` maps element index to a nonzero integer; zeros are never stored.
    """

    __slots__ = ("group", "coeffs")

    def __init__(self, group: FiniteGroup, coeffs: Mapping[int, int] | None = None):
        self.group = group
        clean = {}
        for g, c in (coeffs or {}).items():
            g, c = int(g), int(c)
            if not 0 <= g < group.order:
                raise ValueError(f"element index {g} outside group of order {group.order}")
            if c:
                clean[g] = clean.get(g, 0) + c
        self.coeffs = {g: c for g, c in clean.items() if c}

    # constructors

    @classmethod
    def zero(cls, G: FiniteGroup) -> GroupRingElement:
        return cls(G)

    @classmethod
    def one(cls, G: FiniteGroup) -> GroupRingElement:
        return cls(G, {0: 1})

    @classmethod
    def basis(cls, G: FiniteGroup, g: int, coeff: int = 1) -> GroupRingElement:
        return cls(G, {g: coeff})

    @classmethod
    def sum_of(cls, G: FiniteGroup, elements: Iterable[int]) -> GroupRingElement:
        out: dict[int, int] = {}
        for g in elements:
            out[int(g)] = out.get(int(g), 0) + 1
        return cls(G, out)

    @classmethod
    def from_json(cls, G: FiniteGroup, data: list[dict]) -> GroupRingElement:
        out: dict[int, int] = {}
        for term in data:
            e = int(term["elem"])
            out[e] = out.get(e, 0) + int(term["coeff"])
        return cls(G, out)

    def to_json(self) -> list[dict]:
        return [{"elem": g, "coeff": c} for g, c in sorted(self.coeffs.items())]

    # arithmetic

    def _check(self, other: GroupRingElement):
        if other.group is not self.group:
            raise GroupMismatch("elements live in different group rings")

    def __add__(self, other):
        if isinstance(other, int):
            other = GroupRingElement(self.group, {0: other})
        self._check(other)
        out = dict(self.coeffs)
        for g, c in other.coeffs.items():
            out[g] = out.get(g, 0) + c
        return GroupRingElement(self.group, out)

    __radd__ = __add__

    def __neg__(self):
        return GroupRingElement(self.group, {g: -c for g, c in self.coeffs.items()})

    def __sub__(self, other):
        if isinstance(other, int):
            other = GroupRingElement(self.group, {0: other})
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            return GroupRingElement(self.group, {g: c * other for g, c in self.coeffs.items()})
        self._check(other)
        return GroupRingElement(self.group, kernels.convolve(self.group.table, self.coeffs, other.coeffs))

    def __rmul__(self, other):
        if isinstance(other, int):
            return self * other
        return NotImplemented

    def __pow__(self, k: int):
        if k < 0:
            inv = inverse(self)
            if inv is None:
                raise ValueError("negative power of a non-unit")
            return inv ** (-k)
        result = GroupRingElement.one(self.group)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, int):
            other = GroupRingElement(self.group, {0: other})
        return (isinstance(other, GroupRingElement) and other.group is self.group
                and other.coeffs == self.coeffs)

    def __hash__(self):
        return hash((id(self.group), frozenset(self.coeffs.items())))

    def __repr__(self):
        if not self.coeffs:
            return "0"
        return " + ".join(f"{c}*g{g}" for g, c in sorted(self.coeffs.items()))

    def coefficient(self, g: int) -> int:
        return self.coeffs.get(int(g), 0)

    def vector(self) -> list[int]:
        v = [0] * self.group.order
        for g, c in self.coeffs.items():
            v[g] = c
        return v

    def norm2(self) -> int:
        """Sum of squared coefficients."""
        return sum(c * c for c in self.coeffs.values())


def add(u: GroupRingElement, v: GroupRingElement) -> GroupRingElement:
    return u + v


def mul(u: GroupRingElement, v: GroupRingElement) -> GroupRingElement:
    return u * v


def neg(u: GroupRingElement) -> GroupRingElement:
    return -u


def augmentation(u: GroupRingElement) -> int:
    return sum(u.coeffs.values())


def star(u: GroupRingElement) -> GroupRingElement:
    """The involution ``sum u_g g -> sum u_g g^-1``."""
    inv = u.group.inv
    return GroupRingElement(u.group, {int(inv[g]): c for g, c in u.coeffs.items()})


def is_symmetric(u: GroupRingElement) -> bool:
    return star(u) == u


def is_central(u: GroupRingElement) -> bool:
    G = u.group
    for s in G.generator_indices:
        conj = {G.conjugate(s, g): c for g, c in u.coeffs.items()}
        if conj != u.coeffs:
            return False
    return True


def is_trivial_unit(u: GroupRingElement) -> bool:
    """``u = ±z`` with ``z`` central in ``G``."""
    if len(u.coeffs) != 1:
        return False
    (g, c), = u.coeffs.items()
    return abs(c) == 1 and g in center(u.group)


def regular_matrix(u: GroupRingElement) -> list[list[int]]:
    """Matrix of ``x -> u x`` on the basis of group elements."""
    G = u.group
    n = G.order
    m = [[0] * n for _ in range(n)]
    t = G.table
    for g, c in u.coeffs.items():
        row = t[g]
        for h in range(n):
            m[int(row[h])][h] += c
    return m


def _det_cap(u: GroupRingElement, cap: int):
    if u.group.order > cap:
        raise ClosureCapExceeded(f"|G| = {u.group.order} exceeds determinant cap {cap}")


def is_unit(u: GroupRingElement, cap: int = DETERMINANT_CAP) -> bool:
    """Unit test via ``det`` of the left-regular matrix being ±1."""
    _det_cap(u, cap)
    if augmentation(u) not in (1, -1):
        return False
    return determinant(regular_matrix(u)) in (1, -1)


def inverse(u: GroupRingElement, cap: int = DETERMINANT_CAP) -> GroupRingElement | None:
    """Two-sided inverse in Z[G], or None when ``u`` is not a unit."""
    _det_cap(u, cap)
    G = u.group
    rhs = [0] * G.order
    rhs[0] = 1
    x = solve(regular_matrix(u), rhs)
    if x is None or any(v.denominator != 1 for v in x):
        return None
    v = GroupRingElement(G, {i: int(c) for i, c in enumerate(x)})
    one = GroupRingElement.one(G)
    if u * v != one or v * u != one:
        return None
    return v


def unit_order(u: GroupRingElement, bound: int | None = None) -> int | None:
    """Order of ``u`` if it is finite and at most ``bound`` (default 12|G|).

    For central ``u`` the search stops as soon as a power has coefficient
    square sum above 1: a central unit of finite order acts unitarily in the
    regular representation, which forces all its powers to be ``±g``.
    """
    G = u.group
    if bound is None:
        bound = ORDER_BOUND_FACTOR * G.order
    central = is_central(u)
    one = GroupRingElement.one(G)
    p = u
    for k in range(1, bound + 1):
        if p == one:
            return k
        if central and p.norm2() > 1:
            return None
        p = p * u
    return None


def multiplicative_order(k: int, n: int) -> int:
    if math.gcd(k, n) != 1:
        raise NotCoprime(f"gcd({k}, {n}) != 1")
    if n == 1:
        return 1
    m, x = 1, k % n
    while x != 1:
        x = (x * k) % n
        m += 1
    return m


def bass_unit(G: FiniteGroup, g: int, k: int) -> GroupRingElement:
    """``(1 + g + ... + g^(k-1))^m + ((1 - k^m)/n) * (1 + g + ... + g^(n-1))``

    with ``n = o(g)`` and ``m`` the multiplicative order of ``k`` mod ``n``.
    """
    n = int(G.orders[g])
    if n <= 1:
        raise TrivialOrder("Bass units need an element of order >= 2")
    if k < 1 or math.gcd(k, n) != 1:
        raise NotCoprime(f"k={k} must be a positive integer coprime to {n}")
    m = multiplicative_order(k, n)
    pw = G.powers(g)
    partial_coeffs: dict[int, int] = {}
    for i in range(k):
        e = pw[i % n]
        partial_coeffs[e] = partial_coeffs.get(e, 0) + 1
    partial = GroupRingElement(G, partial_coeffs)
    hat = GroupRingElement.sum_of(G, pw)
    return partial ** m + hat * ((1 - k ** m) // n)


def theta(u: GroupRingElement, cap: int = DETERMINANT_CAP) -> GroupRingElement:
    """``u -> u u*`` on central units."""
    if not is_central(u) or not is_unit(u, cap):
        raise NotCentralUnit("theta is defined on central units only")
    return u * star(u)


class AugmentationLattice:
    """The additive group ``Δ(G)Δ(A)`` inside ``Z[G] = Z^|G|``.

    Spanned by ``(g - 1)(a - 1) = ga - g - a + 1``.
    """

    def __init__(self, G: FiniteGroup, A: Subgroup, cap: int = LATTICE_CAP):
        _require_normal(G, A)
        if G.order * A.order > cap:
            raise LatticeCapExceeded(f"|G||A| = {G.order * A.order} exceeds lattice cap {cap}")
        self.group = G
        self.subgroup = A
        t = G.table
        rows = set()
        for a in A.members:
            if a == 0:
                continue
            for g in range(1, G.order):
                v = [0] * G.order
                v[int(t[g, a])] += 1
                v[g] -= 1
                v[a] -= 1
                v[0] += 1
                if any(v):
                    rows.add(tuple(v))
        self.rows = sorted(rows)
        self.lattice = IntegerLattice(self.rows, G.order)

    @property
    def basis_matrix(self) -> list[list[int]]:
        return self.lattice.basis

    def __contains__(self, u) -> bool:
        vec = u.vector() if isinstance(u, GroupRingElement) else list(u)
        return vec in self.lattice


def augmentation_lattice(G: FiniteGroup, A: Subgroup, cap: int = LATTICE_CAP) -> AugmentationLattice:
    if G.order * A.order > cap:
        raise LatticeCapExceeded(f"|G||A| = {G.order * A.order} exceeds lattice cap {cap}")
    return G.cached(("delta_lattice", A.members), lambda: AugmentationLattice(G, A, cap))


def delta_product_membership(G: FiniteGroup, A: Subgroup, v: GroupRingElement,
                             cap: int = LATTICE_CAP) -> bool:
    """Is ``v`` in the Z-span of ``{(g-1)(a-1) : g in G, a in A}``?"""
    if v.group is not G:
        raise GroupMismatch("element does not belong to Z[G]")
    _require_normal(G, A)
    return v in augmentation_lattice(G, A, cap)


def image_in_quotient(v: GroupRingElement, labels: np.ndarray) -> dict[int, int]:
    """Coefficients of the image of ``v`` under ``Z[G] -> Z[G/N]`` (by coset label)."""
    out: dict[int, int] = {}
    for g, c in v.coeffs.items():
        q = int(labels[g])
        out[q] = out.get(q, 0) + c
    return {q: c for q, c in out.items() if c}
