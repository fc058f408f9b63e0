"""Named finite groups and the JSON group-spec format.

Catalog families and their permutation representations:

====================  ==========  ==================================================
name                  params      representation / generators
====================  ==========  ==================================================
``trivial``           --          degree 1
``cyclic``            n           n-cycle ``(0 1 ... n-1)`` on n points
``dihedral``          n (>=2)     order 2n; rotation and reflection of an n-gon
                                  (n = 2: Klein four on 4 points)
``quaternion``        n           generalized quaternion of order n = 2^k >= 8,
                                  left-regular; generators a (order n/2), b
``dicyclic``          n (>=2)     order 4n, ``<a, b | a^2n, b^2 = a^n, bab^-1 = a^-1>``
``symmetric``         n           ``(0 1)``, ``(0 1 ... n-1)``
``alternating``       n (>=3)     3-cycles ``(0 1 i)``
``elementary_abelian`` p, k       k disjoint p-cycles
``abelian``           n1..nk      disjoint cycles of lengths n1..nk
``metacyclic``        m, n, r     ``C_m ⋊ C_n`` with ``b a b^-1 = a^r``; needs
                                  ``r^n = 1 (mod m)``; left-regular; gens a, b
``heisenberg``        p           unitriangular 3x3 over F_p, left-regular
====================  ==========  ==================================================

Group-spec documents (``"schema": 1``)::

    {"kind": "permutation", "degree": 3, "generators": [[[0, 1]], [[0, 1, 2]]]}
    {"kind": "catalog", "name": "symmetric", "params": [4]}
    {"kind": "semidirect", "a": <spec>, "q": <spec>,
     "action": [[<image of a-generator 0 as cycles>, ...], ...]}   # one list per q-generator
    {"kind": "product", "factors": [<spec>, <spec>, ...]}
"""
from __future__ import annotations

import json
import math
from itertools import combinations

import numpy as np

from .errors import InvalidParams, SpecError, UnknownCatalogName
from .groups import (
    FiniteGroup,
    GroupHom,
    Permutation,
    direct_product,
    group_from_generators,
    group_from_multiplication,
    semidirect,
)

SCHEMA_VERSION = 1


def _is_prime(p: int) -> bool:
    return p >= 2 and all(p % d for d in range(2, math.isqrt(p) + 1))


def _need(params, count, name):
    if len(params) != count:
        raise InvalidParams(f"{name} takes {count} parameter(s), got {len(params)}")
    return [int(x) for x in params]


def cyclic(n: int) -> FiniteGroup:
    if n < 1:
        raise InvalidParams("cyclic order must be >= 1")
    return group_from_generators(n, [list(range(1, n)) + [0]], name=f"C{n}")


def dihedral(n: int) -> FiniteGroup:
    if n < 2:
        raise InvalidParams("dihedral needs n >= 2")
    if n == 2:
        return group_from_generators(4, [[1, 0, 3, 2], [2, 3, 0, 1]], name="D2")
    rot = [(i + 1) % n for i in range(n)]
    ref = [(-i) % n for i in range(n)]
    return group_from_generators(n, [rot, ref], name=f"D{n}")


def dicyclic(n: int, name: str | None = None) -> FiniteGroup:
    """``<a, b | a^(2n) = 1, b^2 = a^n, b a b^-1 = a^-1>``, order 4n."""
    if n < 2:
        raise InvalidParams("dicyclic needs n >= 2")
    m = 2 * n
    labels = [(i, j) for j in range(2) for i in range(m)]

    def mul(x, y):
        (i, j), (k, l) = x, y
        if j == 0:
            return ((i + k) % m, l)
        # a^i b a^k b^l = a^(i-k) b^(1+l)
        if l == 0:
            return ((i - k) % m, 1)
        return ((i - k + n) % m, 0)

    return group_from_multiplication(labels, mul, [(1, 0), (0, 1)], name=name or f"Dic{n}")


def quaternion(order: int) -> FiniteGroup:
    k = order.bit_length() - 1
    if order < 8 or order != 1 << k:
        raise InvalidParams("generalized quaternion order must be a power of 2, >= 8")
    return dicyclic(order // 4, name=f"Q{order}")


def symmetric(n: int) -> FiniteGroup:
    if n < 1:
        raise InvalidParams("symmetric needs n >= 1")
    if n == 1:
        return group_from_generators(1, [[0]], name="S1")
    swap = [1, 0] + list(range(2, n))
    cyc = list(range(1, n)) + [0]
    return group_from_generators(n, [swap, cyc], name=f"S{n}")


def alternating(n: int) -> FiniteGroup:
    if n < 3:
        raise InvalidParams("alternating needs n >= 3")
    gens = [Permutation.from_cycles(n, [[0, 1, i]]) for i in range(2, n)]
    return group_from_generators(n, gens, name=f"A{n}")


def abelian(orders) -> FiniteGroup:
    orders = [int(o) for o in orders]
    if not orders or any(o < 1 for o in orders):
        raise InvalidParams("abelian needs positive cyclic orders")
    degree = sum(orders)
    gens = []
    start = 0
    for o in orders:
        img = list(range(degree))
        for i in range(o):
            img[start + i] = start + (i + 1) % o
        gens.append(img)
        start += o
    label = "x".join(f"C{o}" for o in orders)
    return group_from_generators(degree, gens, name=label)


def elementary_abelian(p: int, k: int) -> FiniteGroup:
    if not _is_prime(p) or k < 1:
        raise InvalidParams("elementary_abelian needs prime p and k >= 1")
    G = abelian([p] * k)
    G.name = f"C{p}^{k}" if k > 1 else f"C{p}"
    return G


def metacyclic(m: int, n: int, r: int) -> FiniteGroup:
    """``C_m ⋊ C_n`` with the generator of ``C_n`` acting by ``a -> a^r``."""
    if m < 1 or n < 1:
        raise InvalidParams("metacyclic needs m, n >= 1")
    r %= m
    if math.gcd(r, m) != 1 or pow(r, n, m) != 1 % m:
        raise InvalidParams(f"r={r} does not define an action of C{n} on C{m}")
    A, Q = cyclic(m), cyclic(n)
    # element i of cyclic(m) is not a^i in general; map via powers of the generator
    g = A.generator_indices[0]
    pw = A.powers(g)
    exp_of = {e: i for i, e in enumerate(pw)}
    aut = np.array([pw[(exp_of[e] * r) % m] for e in range(m)], dtype=np.int64)
    return semidirect(A, Q, [aut], name=f"M({m},{n},{r})")


def heisenberg(p: int) -> FiniteGroup:
    if not _is_prime(p):
        raise InvalidParams("heisenberg needs a prime")
    labels = [(x, y, z) for x in range(p) for y in range(p) for z in range(p)]

    def mul(u, v):
        return ((u[0] + v[0]) % p, (u[1] + v[1]) % p, (u[2] + v[2] + u[0] * v[1]) % p)

    return group_from_multiplication(labels, mul, [(1, 0, 0), (0, 1, 0)], name=f"Heis({p})")


_CATALOG = {
    "trivial": lambda ps: (_need(ps, 0, "trivial"), group_from_generators(1, [[0]], name="C1"))[1],
    "cyclic": lambda ps: cyclic(*_need(ps, 1, "cyclic")),
    "dihedral": lambda ps: dihedral(*_need(ps, 1, "dihedral")),
    "quaternion": lambda ps: quaternion(*_need(ps, 1, "quaternion")),
    "dicyclic": lambda ps: dicyclic(*_need(ps, 1, "dicyclic")),
    "symmetric": lambda ps: symmetric(*_need(ps, 1, "symmetric")),
    "alternating": lambda ps: alternating(*_need(ps, 1, "alternating")),
    "elementary_abelian": lambda ps: elementary_abelian(*_need(ps, 2, "elementary_abelian")),
    "abelian": lambda ps: abelian(ps),
    "metacyclic": lambda ps: metacyclic(*_need(ps, 3, "metacyclic")),
    "heisenberg": lambda ps: heisenberg(*_need(ps, 1, "heisenberg")),
}

CATALOG_NAMES = tuple(_CATALOG)


def catalog(name: str, *params: int) -> FiniteGroup:
    """Build a named group, e.g. ``catalog("symmetric", 4)``."""
    if len(params) == 1 and isinstance(params[0], (list, tuple)):
        params = tuple(params[0])
    try:
        builder = _CATALOG[name]
    except KeyError:
        raise UnknownCatalogName(f"unknown catalog group {name!r}; known: {', '.join(CATALOG_NAMES)}") from None
    return builder(list(params))


# -- group specs ------------------------------------------------------------


def normalize_spec(spec: dict) -> dict:
    """Canonical form of a group-spec document (idempotent)."""
    if not isinstance(spec, dict):
        raise SpecError("group spec must be a JSON object")
    version = spec.get("schema", SCHEMA_VERSION)
    if version != SCHEMA_VERSION:
        raise SpecError(f"unsupported schema version {version}")
    kind = spec.get("kind")
    if kind == "catalog":
        name = spec.get("name")
        if name not in _CATALOG:
            raise UnknownCatalogName(f"unknown catalog group {name!r}")
        return {"schema": SCHEMA_VERSION, "kind": "catalog", "name": name,
                "params": [int(p) for p in spec.get("params", [])]}
    if kind == "permutation":
        degree = int(spec["degree"])
        gens = [Permutation.from_cycles(degree, g).cycles() for g in spec.get("generators", [])]
        return {"schema": SCHEMA_VERSION, "kind": "permutation", "degree": degree, "generators": gens}
    if kind == "semidirect":
        a = normalize_spec(spec["a"])
        q = normalize_spec(spec["q"])
        action = [[[list(map(int, c)) for c in img] for img in entry] for entry in spec.get("action", [])]
        return {"schema": SCHEMA_VERSION, "kind": "semidirect", "a": a, "q": q, "action": action}
    if kind == "product":
        factors = [normalize_spec(f) for f in spec.get("factors", [])]
        if not factors:
            raise SpecError("product needs at least one factor")
        return {"schema": SCHEMA_VERSION, "kind": "product", "factors": factors}
    raise SpecError(f"unknown spec kind {kind!r}")


def parse_spec(text: str) -> dict:
    try:
        return normalize_spec(json.loads(text))
    except (KeyError, TypeError, ValueError) as exc:
        if isinstance(exc, SpecError):
            raise
        raise SpecError(f"malformed group spec: {exc}") from exc


def emit_spec(spec: dict) -> str:
    return json.dumps(normalize_spec(spec), sort_keys=True, separators=(",", ":"))


def catalog_spec(name: str, *params: int) -> dict:
    return normalize_spec({"kind": "catalog", "name": name, "params": list(params)})


def product_spec(*factors: dict) -> dict:
    return normalize_spec({"kind": "product", "factors": list(factors)})


_LABELS = {
    "trivial": lambda ps: "C1",
    "cyclic": lambda ps: f"C{ps[0]}",
    "dihedral": lambda ps: f"D{ps[0]}",
    "quaternion": lambda ps: f"Q{ps[0]}",
    "dicyclic": lambda ps: f"Dic{ps[0]}",
    "symmetric": lambda ps: f"S{ps[0]}",
    "alternating": lambda ps: f"A{ps[0]}",
    "elementary_abelian": lambda ps: f"C{ps[0]}^{ps[1]}" if ps[1] > 1 else f"C{ps[0]}",
    "abelian": lambda ps: "x".join(f"C{o}" for o in ps),
    "metacyclic": lambda ps: f"M({ps[0]},{ps[1]},{ps[2]})",
    "heisenberg": lambda ps: f"Heis({ps[0]})",
}


def spec_label(spec: dict) -> str:
    spec = normalize_spec(spec)
    kind = spec["kind"]
    if kind == "catalog":
        return _LABELS[spec["name"]](spec["params"])
    if kind == "product":
        return "x".join(spec_label(f) for f in spec["factors"])
    if kind == "semidirect":
        return f"({spec_label(spec['a'])})x|({spec_label(spec['q'])})"
    return f"Perm{spec['degree']}"


def build_group(spec: dict) -> FiniteGroup:
    spec = normalize_spec(spec)
    kind = spec["kind"]
    if kind == "catalog":
        G = catalog(spec["name"], *spec["params"])
    elif kind == "permutation":
        degree = spec["degree"]
        gens = [Permutation.from_cycles(degree, g) for g in spec["generators"]] or [Permutation.identity(degree)]
        G = group_from_generators(degree, gens)
    elif kind == "product":
        groups = [build_group(f) for f in spec["factors"]]
        G = groups[0]
        for H in groups[1:]:
            G = direct_product(G, H)
    else:
        A = build_group(spec["a"])
        Q = build_group(spec["q"])
        if len(spec["action"]) != len(Q.generator_indices):
            raise SpecError("action needs one entry per generator of q")
        auts = []
        for entry in spec["action"]:
            if len(entry) != len(A.generator_indices):
                raise SpecError("each action entry needs one image per generator of a")
            imgs = [A.index_of(Permutation.from_cycles(A.degree, cyc)) for cyc in entry]
            try:
                hom = GroupHom.from_generator_images(A, A, imgs)
            except ValueError as exc:
                raise SpecError(f"action entry is not an endomorphism of a: {exc}") from exc
            auts.append(hom.images)
        G = semidirect(A, Q, auts)
    G.name = spec_label(spec)
    return G


# -- default catalog -----------------------------------------------------------


def _basic_specs(max_order: int) -> list[dict]:
    out = []

    def add(name, *params, order):
        if order <= max_order:
            out.append(catalog_spec(name, *params))

    for n in range(2, 49):
        add("cyclic", n, order=n)
    for n in range(3, 25):
        add("dihedral", n, order=2 * n)
    for order in (8, 16, 32):
        add("quaternion", order, order=order)
    for n in (3, 5, 6, 7, 9, 10, 12):
        add("dicyclic", n, order=4 * n)
    add("symmetric", 3, order=6)
    add("symmetric", 4, order=24)
    add("symmetric", 5, order=120)
    add("alternating", 4, order=12)
    add("alternating", 5, order=60)
    for k in (2, 3, 4):
        add("elementary_abelian", 2, k, order=2 ** k)
    for k in (2, 3):
        add("elementary_abelian", 3, k, order=3 ** k)
    add("heisenberg", 3, order=27)
    for m, n, r in [(9, 3, 4), (5, 4, 2), (7, 3, 2), (7, 6, 3), (11, 10, 2),
                    (9, 6, 2), (13, 3, 3), (8, 2, 3), (8, 2, 5), (16, 2, 7)]:
        add("metacyclic", m, n, r, order=m * n)
    return out


def _elementary_prime(spec: dict) -> int | None:
    if spec["kind"] != "catalog":
        return None
    name, ps = spec["name"], spec["params"]
    if name == "elementary_abelian":
        return ps[0]
    if name == "cyclic" and _is_prime(ps[0]):
        return ps[0]
    return None


def default_catalog(max_order: int = 100) -> list[dict]:
    """Specs of the default catalog, sorted by (order, label).

    Basic families plus all pairwise direct products within ``max_order``;
    products of two elementary abelian p-groups for the same p are skipped
    (they are again elementary abelian).
    """
    basic = _basic_specs(max_order)
    orders = {emit_spec(s): spec_order(s) for s in basic}
    specs = list(basic)
    for s, t in combinations(basic, 2):
        if orders[emit_spec(s)] * orders[emit_spec(t)] > max_order:
            continue
        ps, pt = _elementary_prime(s), _elementary_prime(t)
        if ps is not None and ps == pt:
            continue
        specs.append(product_spec(s, t))
    # squares of small groups (X x X)
    for s in basic:
        o = orders[emit_spec(s)]
        if o * o <= max_order and _elementary_prime(s) is None:
            specs.append(product_spec(s, s))
    specs.sort(key=lambda s: (spec_order(s), spec_label(s)))
    return specs


def spec_order(spec: dict) -> int:
    spec = normalize_spec(spec)
    if spec["kind"] == "product":
        return math.prod(spec_order(f) for f in spec["factors"])
    if spec["kind"] != "catalog":
        return build_group(spec).order
    name, ps = spec["name"], spec["params"]
    return {
        "trivial": lambda: 1,
        "cyclic": lambda: ps[0],
        "dihedral": lambda: 2 * ps[0],
        "quaternion": lambda: ps[0],
        "dicyclic": lambda: 4 * ps[0],
        "symmetric": lambda: math.factorial(ps[0]),
        "alternating": lambda: math.factorial(ps[0]) // 2,
        "elementary_abelian": lambda: ps[0] ** ps[1],
        "abelian": lambda: math.prod(ps),
        "metacyclic": lambda: ps[0] * ps[1],
        "heisenberg": lambda: ps[0] ** 3,
    }[name]()


