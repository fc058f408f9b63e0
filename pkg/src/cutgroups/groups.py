"""Finite permutation groups with full element enumeration.

Elements are stored as rows of an int64 array ``perms``; the product
convention is composition of functions, ``(x * y)[p] = x[y[p]]`` (apply
``y`` first). Element 0 is always the identity.
"""
from __future__ import annotations

import math
import threading
from collections.abc import Callable, Iterable, Sequence
from dataclasses import dataclass
from functools import reduce

import numpy as np

from . import kernels
from .errors import (
    ClosureCapExceeded,
    InvalidPermutation,
    NotAnAction,
    NotNilpotent,
    NotNormal,
    SubgroupNotInParent,
)

DEFAULT_CAP = 10_000


class Permutation:
    """A bijection of ``{0, ..., degree-1}`` given by its image list."""

    __slots__ = ("images",)

    def __init__(self, images: Iterable[int]):
        images = tuple(int(i) for i in images)
        if sorted(images) != list(range(len(images))):
            raise InvalidPermutation(f"not a bijection of 0..{len(images) - 1}: {images}")
        self.images = images

    @classmethod
    def identity(cls, degree: int) -> Permutation:
        return cls(range(degree))

    @classmethod
    def from_cycles(cls, degree: int, cycles: Iterable[Sequence[int]]) -> Permutation:
        images = list(range(degree))
        seen: set[int] = set()
        for cyc in cycles:
            cyc = [int(p) for p in cyc]
            for p in cyc:
                if not 0 <= p < degree:
                    raise InvalidPermutation(f"point {p} outside 0..{degree - 1}")
                if p in seen:
                    raise InvalidPermutation(f"point {p} repeated in cycles")
                seen.add(p)
            for a, b in zip(cyc, cyc[1:] + cyc[:1]):
                images[a] = b
        return cls(images)

    @property
    def degree(self) -> int:
        return len(self.images)

    def __mul__(self, other: Permutation) -> Permutation:
        if self.degree != other.degree:
            raise InvalidPermutation("degree mismatch")
        img = self.images
        return Permutation(img[p] for p in other.images)

    def __pow__(self, k: int) -> Permutation:
        if k < 0:
            return self.inverse() ** (-k)
        result = Permutation.identity(self.degree)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __call__(self, p: int) -> int:
        return self.images[p]

    def inverse(self) -> Permutation:
        inv = [0] * self.degree
        for i, j in enumerate(self.images):
            inv[j] = i
        return Permutation(inv)

    def cycles(self) -> list[list[int]]:
        seen = set()
        out = []
        for start in range(self.degree):
            if start in seen or self.images[start] == start:
                continue
            cyc = [start]
            seen.add(start)
            p = self.images[start]
            while p != start:
                cyc.append(p)
                seen.add(p)
                p = self.images[p]
            out.append(cyc)
        return out

    def order(self) -> int:
        return reduce(math.lcm, (len(c) for c in self.cycles()), 1)

    def is_identity(self) -> bool:
        return all(i == p for i, p in enumerate(self.images))

    def __eq__(self, other):
        return isinstance(other, Permutation) and self.images == other.images

    def __hash__(self):
        return hash(self.images)

    def __repr__(self):
        cyc = self.cycles()
        if not cyc:
            return "()"
        return "".join("(" + " ".join(map(str, c)) + ")" for c in cyc)


def _as_perm(g, degree: int) -> Permutation:
    if isinstance(g, Permutation):
        p = g
    else:
        p = Permutation(g)
    if p.degree != degree:
        raise InvalidPermutation(f"generator of degree {p.degree}, expected {degree}")
    return p


class FiniteGroup:
    """A fully enumerated permutation group.

    Immutable after construction; derived data (multiplication table,
    inverses, orders, conjugacy labels) is computed lazily and cached
    behind a lock.
    """

    def __init__(self, degree: int, perms: np.ndarray, generator_indices: Sequence[int],
                 name: str | None = None):
        self.degree = int(degree)
        self.perms = np.ascontiguousarray(perms, dtype=np.int64)
        self.perms.setflags(write=False)
        self.generator_indices = tuple(int(i) for i in generator_indices)
        self.name = name
        self.order = int(self.perms.shape[0])
        self._lock = threading.RLock()
        self._cache: dict = {}
        self._build_lookup()

    def __repr__(self):
        label = self.name or "group"
        return f"<FiniteGroup {label} order={self.order} degree={self.degree}>"

    def __len__(self):
        return self.order

    # -- element lookup -----------------------------------------------------

    def _build_lookup(self):
        n, d = self.perms.shape
        base: list[int] = []
        keys = np.zeros(n, dtype=np.int64)
        weight = 1
        weights: list[int] = []
        if n > 1:
            for p in range(d):
                trial = keys + self.perms[:, p] * weight
                if len(np.unique(trial)) > len(np.unique(keys)):
                    base.append(p)
                    weights.append(weight)
                    keys = trial
                    weight *= max(d, 1)
                    if weight >= (1 << 62) // max(d, 1):
                        break
                    if len(np.unique(keys)) == n:
                        break
        self._base = np.array(base, dtype=np.int64)
        self._weights = np.array(weights, dtype=np.int64)
        if len(np.unique(keys)) != n:
            # key space exhausted before separating all elements
            self._key_order = None
            self._dict = {row.tobytes(): i for i, row in enumerate(self.perms)}
            return
        order = np.argsort(keys, kind="stable")
        self._sorted_keys = keys[order]
        self._key_order = order.astype(np.int64)
        self._dict = None

    def indices_of(self, perm_rows: np.ndarray) -> np.ndarray:
        """Element indices of the permutations in ``perm_rows`` (-1 if absent)."""
        rows = np.asarray(perm_rows, dtype=np.int64).reshape(-1, self.degree)
        if self._key_order is None:
            return np.array([self._dict.get(r.tobytes(), -1) for r in rows], dtype=np.int64)
        keys = rows[:, self._base] @ self._weights if len(self._base) else np.zeros(len(rows), dtype=np.int64)
        pos = np.searchsorted(self._sorted_keys, keys)
        pos = np.minimum(pos, self.order - 1)
        idx = self._key_order[pos]
        ok = (self._sorted_keys[pos] == keys) & np.all(self.perms[idx] == rows, axis=1)
        return np.where(ok, idx, -1)

    def index_of(self, perm) -> int:
        p = perm.images if isinstance(perm, Permutation) else perm
        if len(p) != self.degree:
            raise SubgroupNotInParent(f"{perm!r} has degree {len(p)}, expected {self.degree}")
        i = int(self.indices_of(np.asarray(p))[0])
        if i < 0:
            raise SubgroupNotInParent(f"{perm!r} is not an element of {self!r}")
        return i

    def element(self, i: int) -> Permutation:
        return Permutation(self.perms[i].tolist())

    @property
    def elements(self) -> list[Permutation]:
        return [self.element(i) for i in range(self.order)]

    @property
    def generators(self) -> list[Permutation]:
        return [self.element(i) for i in self.generator_indices]

    # -- cached derived data --------------------------------------------------

    def cached(self, key, fn: Callable):
        with self._lock:
            if key not in self._cache:
                self._cache[key] = fn()
            return self._cache[key]

    @property
    def table(self) -> np.ndarray:
        return self.cached("table", self._compute_table)

    def _compute_table(self):
        if self._key_order is None:
            n = self.order
            t = np.empty((n, n), dtype=np.int32)
            for i in range(n):
                t[i] = self.indices_of(self.perms[i][self.perms])
        else:
            t = kernels.mult_table(self.perms, self._base, self._weights,
                                   self._sorted_keys, self._key_order)
        t.setflags(write=False)
        return t

    @property
    def inv(self) -> np.ndarray:
        def compute():
            inverse = np.argsort(self.perms, axis=1)
            out = self.indices_of(inverse)
            out.setflags(write=False)
            return out
        return self.cached("inv", compute)

    @property
    def orders(self) -> np.ndarray:
        def compute():
            n = self.order
            t = self.table
            idx = np.arange(n)
            pw = idx.copy()
            out = np.zeros(n, dtype=np.int64)
            k = 1
            while True:
                fresh = (pw == 0) & (out == 0)
                out[fresh] = k
                if (out > 0).all():
                    break
                pw = t[pw, idx]
                k += 1
            out.setflags(write=False)
            return out
        return self.cached("orders", compute)

    def mul(self, x: int, y: int) -> int:
        return int(self.table[x, y])

    def power(self, x: int, k: int) -> int:
        k %= int(self.orders[x])
        t = self.table
        result, base = 0, x
        while k:
            if k & 1:
                result = int(t[result, base])
            base = int(t[base, base])
            k >>= 1
        return result

    def powers(self, x: int) -> list[int]:
        """``[x^0, x^1, ..., x^(o(x)-1)]``."""
        out = [0]
        t = self.table
        cur = x
        while cur != 0:
            out.append(cur)
            cur = int(t[cur, x])
        return out

    def conjugate(self, g: int, x: int) -> int:
        """``g x g^-1``."""
        return int(self.table[self.table[g, x], self.inv[g]])

    @property
    def class_labels(self) -> np.ndarray:
        def compute():
            labels = kernels.class_labels(self.table, self.inv)
            labels.setflags(write=False)
            return labels
        return self.cached("class_labels", compute)

    def is_abelian(self) -> bool:
        t = self.table
        return bool(np.array_equal(t, t.T))

    def exponent(self) -> int:
        return reduce(math.lcm, (int(o) for o in np.unique(self.orders)), 1)

    def order_census(self) -> dict[int, int]:
        vals, counts = np.unique(self.orders, return_counts=True)
        return {int(v): int(c) for v, c in zip(vals, counts)}


# -- construction ------------------------------------------------------------


def group_from_generators(degree: int, gens: Sequence, cap: int = DEFAULT_CAP,
                          name: str | None = None) -> FiniteGroup:
    """Breadth-first closure of ``gens`` inside ``Sym(degree)``."""
    perms = [_as_perm(g, degree).images for g in gens]
    # level-synchronous BFS; candidates are visited x-major, generator-minor,
    # which reproduces the element order of a plain queue
    S = np.array(perms, dtype=np.int32).reshape(len(perms), degree)
    identity = np.arange(degree, dtype=np.int32)
    width = max(degree, 1) * 4
    index = {identity.tobytes(): 0}
    blocks = [identity[None, :]]
    frontier = identity[None, :]
    count = 1
    while len(frontier):
        cand = np.ascontiguousarray(frontier[:, S].reshape(-1, degree))
        keys = cand.view(f"V{width}").ravel().tolist() if degree else [b""] * len(cand)
        fresh = []
        for row, k in enumerate(keys):
            if k not in index:
                if count >= cap:
                    raise ClosureCapExceeded(f"closure exceeds cap of {cap} elements")
                index[k] = count
                count += 1
                fresh.append(row)
        frontier = cand[fresh]
        blocks.append(frontier)
    elements = np.concatenate(blocks)
    arr = elements.astype(np.int64)
    gen_idx = [index[row.tobytes()] for row in S]
    return FiniteGroup(degree, arr, gen_idx, name=name)


def group_from_multiplication(labels: Sequence, mul: Callable, gens: Sequence,
                              cap: int = DEFAULT_CAP, name: str | None = None) -> FiniteGroup:
    """Left-regular permutation representation of an abstractly given group.

    ``labels`` lists every element (hashable), ``mul(x, y)`` multiplies
    labels, ``gens`` are labels of generators.
    """
    pos = {x: i for i, x in enumerate(labels)}
    n = len(labels)
    perm_gens = []
    for s in gens:
        perm_gens.append([pos[mul(s, x)] for x in labels])
    if not perm_gens:
        perm_gens = [list(range(n))]
    return group_from_generators(n, perm_gens, cap=cap, name=name)


def direct_product(A: FiniteGroup, B: FiniteGroup, name: str | None = None) -> FiniteGroup:
    """Direct product on the disjoint union of the two point sets."""
    da, db = A.degree, B.degree
    gens = []
    for g in A.generator_indices:
        gens.append(list(A.perms[g]) + list(range(da, da + db)))
    for g in B.generator_indices:
        gens.append(list(range(da)) + [da + int(p) for p in B.perms[g]])
    if not gens:
        gens = [list(range(da + db))]
    return group_from_generators(da + db, gens, name=name)


# -- subgroups ----------------------------------------------------------------


class Subgroup:
    """A subgroup of ``parent`` given by its sorted member indices."""

    __slots__ = ("parent", "members", "_mask")

    def __init__(self, parent: FiniteGroup, members: Iterable[int]):
        self.parent = parent
        self.members = tuple(sorted({int(m) for m in members}))
        if self.members and (self.members[0] < 0 or self.members[-1] >= parent.order):
            raise SubgroupNotInParent("member index out of range")
        self._mask = None

    @property
    def order(self) -> int:
        return len(self.members)

    def __len__(self):
        return len(self.members)

    def __iter__(self):
        return iter(self.members)

    def __contains__(self, x):
        return (self.mask >> int(x)) & 1 == 1

    @property
    def mask(self) -> int:
        if self._mask is None:
            m = 0
            for i in self.members:
                m |= 1 << i
            self._mask = m
        return self._mask

    def issubset(self, other: Subgroup) -> bool:
        return self.mask & ~other.mask == 0

    def __eq__(self, other):
        return (isinstance(other, Subgroup) and other.parent is self.parent
                and other.members == self.members)

    def __hash__(self):
        return hash((id(self.parent), self.members))

    def __repr__(self):
        return f"Subgroup(order={self.order}, members={list(self.members)[:12]}{'...' if self.order > 12 else ''})"

    def as_array(self) -> np.ndarray:
        return np.array(self.members, dtype=np.int64)

    def is_closed(self) -> bool:
        if not self.members or self.members[0] != 0:
            return False
        arr = self.as_array()
        prods = self.parent.table[np.ix_(arr, arr)]
        return bool(np.isin(prods, arr).all())

    def is_normal(self) -> bool:
        G = self.parent
        arr = self.as_array()
        conj = G.table[G.table[:, arr], G.inv[:, None]]
        return bool(np.isin(conj, arr).all())


def _closure_members(G: FiniteGroup, gens: Iterable[int]) -> np.ndarray:
    gens = np.unique(np.array([int(g) for g in gens] + [0], dtype=np.int64))
    members = np.array([0], dtype=np.int64)
    t = G.table
    frontier = members
    have = np.zeros(G.order, dtype=bool)
    have[0] = True
    while len(frontier):
        cand = np.unique(t[np.ix_(frontier, gens)].ravel())
        new = cand[~have[cand]]
        have[new] = True
        frontier = new
    return np.nonzero(have)[0]


def subgroup(G: FiniteGroup, gens: Iterable[int]) -> Subgroup:
    """Subgroup generated by the given element indices."""
    gens = list(gens)
    for g in gens:
        if not 0 <= int(g) < G.order:
            raise SubgroupNotInParent(f"element index {g} not in group of order {G.order}")
    return Subgroup(G, _closure_members(G, gens).tolist())


def trivial_subgroup(G: FiniteGroup) -> Subgroup:
    return Subgroup(G, [0])


def whole(G: FiniteGroup) -> Subgroup:
    return Subgroup(G, range(G.order))


def _check_parent(G: FiniteGroup, A: Subgroup):
    if A.parent is not G:
        raise SubgroupNotInParent("subgroup belongs to a different group")


def _require_normal(G: FiniteGroup, N: Subgroup):
    _check_parent(G, N)
    if not N.is_normal():
        raise NotNormal(f"subgroup of order {N.order} is not normal")


def generating_set(G: FiniteGroup, members: Iterable[int]) -> list[int]:
    """A small generating set for the subgroup with these members (greedy)."""
    members = sorted(int(m) for m in members)
    target = len(members)
    gens: list[int] = []
    have = np.zeros(G.order, dtype=bool)
    have[0] = True
    # prefer elements of large order
    for x in sorted(members, key=lambda m: (-int(G.orders[m]), m)):
        if have[x]:
            continue
        gens.append(x)
        have[:] = False
        have[_closure_members(G, gens)] = True
        if have.sum() == target:
            break
    return gens


def subgroup_as_group(A: Subgroup, name: str | None = None) -> tuple[FiniteGroup, np.ndarray]:
    """Realize ``A`` as a FiniteGroup; returns ``(K, embed)`` with
    ``embed[k]`` the parent index of element ``k`` of ``K``."""
    G = A.parent
    gens = generating_set(G, A.members)
    K = group_from_generators(G.degree, [G.perms[g] for g in gens] or [G.perms[0]], name=name)
    embed = G.indices_of(K.perms)
    return K, embed


# -- homomorphisms -----------------------------------------------------------


@dataclass(eq=False)
class GroupHom:
    """A homomorphism given by the image index of every source element."""

    source: FiniteGroup
    target: FiniteGroup
    images: np.ndarray

    @classmethod
    def from_generator_images(cls, source: FiniteGroup, target: FiniteGroup,
                              gen_images: Sequence[int]) -> GroupHom:
        images = _extend_along_words(source, list(gen_images),
                                     lambda u, v: int(target.table[u, v]), 0)
        hom = cls(source, target, np.array(images, dtype=np.int64))
        if not hom.is_homomorphism():
            raise ValueError("generator images do not extend to a homomorphism")
        return hom

    def __call__(self, x: int) -> int:
        return int(self.images[x])

    def is_homomorphism(self) -> bool:
        im = self.images
        lhs = im[self.source.table]
        rhs = self.target.table[im[:, None], im[None, :]]
        return bool(np.array_equal(lhs, rhs))

    def kernel(self) -> Subgroup:
        return Subgroup(self.source, np.nonzero(self.images == 0)[0].tolist())

    def image(self) -> Subgroup:
        return Subgroup(self.target, np.unique(self.images).tolist())

    def image_of_subgroup(self, A: Subgroup) -> Subgroup:
        _check_parent(self.source, A)
        return Subgroup(self.target, np.unique(self.images[A.as_array()]).tolist())

    def is_surjective(self) -> bool:
        return len(np.unique(self.images)) == self.target.order


def _extend_along_words(G: FiniteGroup, gen_values: list, combine: Callable, identity_value):
    """Value at every element of ``G`` of the extension ``v(x*s) = v(x) . v(s)``
    along a breadth-first spanning tree of right multiplication by generators."""
    values = [None] * G.order
    values[0] = identity_value
    t = G.table
    queue = [0]
    gens = list(zip(G.generator_indices, gen_values))
    i = 0
    while i < len(queue):
        x = queue[i]
        i += 1
        for s, vs in gens:
            y = int(t[x, s])
            if values[y] is None:
                values[y] = combine(values[x], vs)
                queue.append(y)
    return values


# -- structural operations -----------------------------------------------------


def element_order(G: FiniteGroup, x: int) -> int:
    return int(G.orders[x])


def conjugacy_classes(G: FiniteGroup) -> list[list[int]]:
    labels = G.class_labels
    nclasses = int(labels.max()) + 1
    blocks: list[list[int]] = [[] for _ in range(nclasses)]
    for i, c in enumerate(labels.tolist()):
        blocks[c].append(i)
    return blocks


def centralizer(G: FiniteGroup, A: Subgroup) -> Subgroup:
    _check_parent(G, A)
    arr = A.as_array()
    t = G.table
    commutes = (t[:, arr] == t[arr, :].T).all(axis=1)
    return Subgroup(G, np.nonzero(commutes)[0].tolist())


def center(G: FiniteGroup) -> Subgroup:
    return G.cached("center", lambda: centralizer(G, whole(G)))


def normal_subgroups(G: FiniteGroup) -> list[Subgroup]:
    """All normal subgroups, as joins of normal closures of conjugacy classes.

    Sorted by (order, members).
    """
    def compute():
        t = G.table
        closures: dict[int, np.ndarray] = {}
        for cls in conjugacy_classes(G)[1:]:
            members = _closure_members(G, cls)
            m = _mask_of(members)
            closures.setdefault(m, members)
        found: dict[int, np.ndarray] = {1: np.array([0], dtype=np.int64)}
        queue = [1]
        while queue:
            smask = queue.pop()
            S = found[smask]
            for cmask, C in closures.items():
                if cmask & ~smask == 0:
                    continue
                prod = np.unique(t[np.ix_(S, C)].ravel())
                pmask = _mask_of(prod)
                if pmask not in found:
                    found[pmask] = prod
                    queue.append(pmask)
        subs = [Subgroup(G, m.tolist()) for m in found.values()]
        subs.sort(key=lambda s: (s.order, s.members))
        return subs
    return G.cached("normal_subgroups", compute)


def _mask_of(members) -> int:
    m = 0
    for i in members:
        m |= 1 << int(i)
    return m


def quotient(G: FiniteGroup, N: Subgroup) -> tuple[FiniteGroup, GroupHom]:
    """``G/N`` acting on the left cosets of ``N``, with the canonical epimorphism."""
    _require_normal(G, N)

    def compute():
        t = G.table
        narr = N.as_array()
        label = np.full(G.order, -1, dtype=np.int64)
        reps = []
        for g in range(G.order):
            if label[g] < 0:
                label[t[g, narr]] = len(reps)
                reps.append(g)
        reps_arr = np.array(reps, dtype=np.int64)
        action = label[t[:, reps_arr]]  # action[g, c] = coset of g * rep_c
        index = len(reps)
        gens = [action[g] for g in G.generator_indices] or [np.arange(index)]
        base = G.name or "G"
        Q = group_from_generators(index, gens, name=f"{base}/N{N.order}")
        hom = GroupHom(G, Q, Q.indices_of(action))
        return Q, hom
    return G.cached(("quotient", N.members), compute)


def _automorphism_ok(A: FiniteGroup, aut: np.ndarray) -> bool:
    if sorted(aut.tolist()) != list(range(A.order)):
        return False
    t = A.table
    return bool(np.array_equal(aut[t], t[aut[:, None], aut[None, :]]))


def semidirect(A: FiniteGroup, Q: FiniteGroup, action, name: str | None = None) -> FiniteGroup:
    """``A ⋊ Q`` on pairs ``(a, q)``, ``(a1,q1)(a2,q2) = (a1 . act(q1)(a2), q1 q2)``.

    ``action`` is either a sequence of automorphisms of ``A`` (each an array
    ``aut[i]`` = index of the image of element ``i``), one per generator of
    ``Q`` in ``Q.generator_indices`` order, or a callable ``q -> aut`` over all
    elements of ``Q``. The result is realized as the left-regular
    representation on the ``|A||Q|`` pairs, pair ``(a, q)`` at point
    ``a*|Q| + q``.
    """
    nA, nQ = A.order, Q.order
    if callable(action):
        auts = [np.asarray(action(q), dtype=np.int64) for q in range(nQ)]
    else:
        gen_auts = [np.asarray(a, dtype=np.int64) for a in action]
        if len(gen_auts) != len(Q.generator_indices):
            raise NotAnAction(f"expected {len(Q.generator_indices)} generator automorphisms, got {len(gen_auts)}")
        for aut in gen_auts:
            if aut.shape != (nA,) or not _automorphism_ok(A, aut):
                raise NotAnAction("generator image is not an automorphism of A")
        auts = _extend_along_words(Q, gen_auts, lambda f, g: f[g], np.arange(nA))
    stack = np.array(auts, dtype=np.int64).reshape(nQ, nA)
    if not np.array_equal(stack[0], np.arange(nA)):
        raise NotAnAction("identity of Q does not act trivially")
    # phi(q1 q2) == phi(q1) o phi(q2)
    composed = stack[np.arange(nQ)[:, None, None], stack[None, :, :]]  # [q1, q2, a] = phi_q1[phi_q2[a]]
    if not np.array_equal(stack[Q.table], composed):
        raise NotAnAction("action is not a homomorphism Q -> Aut(A)")
    if callable(action):
        for q in Q.generator_indices:
            if not _automorphism_ok(A, stack[q]):
                raise NotAnAction("image is not an automorphism of A")

    pts = np.arange(nA * nQ)
    a2, q2 = pts // nQ, pts % nQ

    def left_mult(a1: int, q1: int):
        na = A.table[a1, stack[q1][a2]]
        nq = Q.table[q1, q2]
        return (na * nQ + nq).tolist()

    gens = [left_mult(a, 0) for a in A.generator_indices]
    gens += [left_mult(0, q) for q in Q.generator_indices]
    H = group_from_generators(nA * nQ, gens or [pts.tolist()], name=name)
    H.semidirect_shape = (nA, nQ)
    return H


def semidirect_base(H: FiniteGroup) -> Subgroup:
    """The normal copy ``{(a, 1)}`` of the first factor inside a semidirect product."""
    nA, nQ = H.semidirect_shape
    pair = H.perms[:, 0]  # image of the identity pair is the element's own pair
    return Subgroup(H, np.nonzero(pair % nQ == 0)[0].tolist())


def conjugation_quotient(G: FiniteGroup, A: Subgroup) -> FiniteGroup:
    """``A ⋊ G/C_G(A)`` with cosets of the centralizer acting by conjugation."""
    _require_normal(G, A)
    C = centralizer(G, A)
    Q, pi = quotient(G, C)
    K, embed = subgroup_as_group(A)
    back = np.full(G.order, -1, dtype=np.int64)
    back[embed] = np.arange(K.order)
    rep = {}
    for g in range(G.order):
        rep.setdefault(int(pi.images[g]), g)

    def act(q):
        g = rep[q]
        return back[G.table[G.table[g, embed], G.inv[g]]]

    base = G.name or "G"
    return semidirect(K, Q, act, name=f"A{A.order}x|{base}/C")


def commutator_subgroup(G: FiniteGroup, X: Subgroup, Y: Subgroup) -> Subgroup:
    """``[X, Y]``, generated by ``x y x^-1 y^-1``."""
    t, inv = G.table, G.inv
    x = X.as_array()[:, None]
    y = Y.as_array()[None, :]
    comms = t[t[t[x, y], inv[x]], inv[y]]
    return subgroup(G, np.unique(comms).tolist())


def lower_central_series(G: FiniteGroup) -> list[Subgroup]:
    series = [whole(G)]
    while True:
        nxt = commutator_subgroup(G, series[-1], series[0])
        if nxt == series[-1]:
            return series
        series.append(nxt)
        if nxt.order == 1:
            return series


def derived_series(G: FiniteGroup) -> list[Subgroup]:
    series = [whole(G)]
    while True:
        nxt = commutator_subgroup(G, series[-1], series[-1])
        if nxt == series[-1]:
            return series
        series.append(nxt)
        if nxt.order == 1:
            return series


def is_nilpotent(G: FiniteGroup) -> bool:
    return G.cached("nilpotent", lambda: lower_central_series(G)[-1].order == 1)


def is_solvable(G: FiniteGroup) -> bool:
    return G.cached("solvable", lambda: derived_series(G)[-1].order == 1)


def _is_prime_power_of(n: int, p: int) -> bool:
    while n % p == 0:
        n //= p
    return n == 1


def sylow_part(G: FiniteGroup, p: int) -> Subgroup:
    """The ``p``-elements of ``G``; a subgroup exactly when ``G`` is nilpotent
    (checked by closure)."""
    members = [i for i, o in enumerate(G.orders.tolist()) if _is_prime_power_of(o, p)]
    S = Subgroup(G, members)
    if not S.is_closed():
        raise NotNilpotent(f"the {p}-elements do not form a subgroup")
    return S
