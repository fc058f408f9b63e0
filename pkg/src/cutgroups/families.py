"""Cut decisions for infinite families, by arithmetic on their parameters.

Infinite groups are never enumerated. Every verdict records the facts it
used in ``Verdict.derivation``.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import (
    AbelianCase,
    IncompatibleExponent,
    MissingFlags,
    NotCoprime,
    NotInfinite,
    NotMetacyclicAction,
    UnsupportedCase,
    ZeroParameter,
)
from .verdict import Verdict

CASE_I_ORDERS = frozenset({0, 2, 4, 6, 8, 12})

_P5 = "cut iff the torsion FC-elements are RS-elements"
_P2_I_A = "extension: quotient cut and G ∩ Φ⁺(Π) = 1 => cut"
_P2_I_B = "extension: Φ⁺(Q) = 1 and Φ⁺(G) RS in Π => cut"
_P2_II = "amalgam G *_A G' with A RS in a factor, A proper in both => cut"
_P2_II_FREE = "free product of nontrivial groups => cut"
_P2_III = "HNN extension with an associated subgroup RS in the base => cut"
_CENTRAL_4_6 = "central torsion is RS iff its order divides 4 or 6"


@dataclass(frozen=True)
class MetacyclicParams:
    """``<a, b | a^m = 1, b^n = 1, b a = a^r b>``; 0 means infinite order."""

    m: int
    n: int
    r: int

    def __post_init__(self):
        if self.m < 0 or self.n < 0:
            raise NotMetacyclicAction("m and n must be non-negative")
        if self.m > 0:
            object.__setattr__(self, "r", self.r % self.m)
            if math.gcd(self.r, self.m) != 1:
                raise NotMetacyclicAction(f"r={self.r} is not a unit mod {self.m}")
        elif self.r not in (1, -1):
            raise NotMetacyclicAction("an infinite cyclic group only has automorphisms ±1")

    @property
    def infinite(self) -> bool:
        return self.m == 0 or self.n == 0

    @property
    def abelian(self) -> bool:
        return self.r == 1 % self.m if self.m else self.r == 1


def unit_group_generated(m: int, r: int) -> tuple[list[int], bool]:
    """Closure of ``{-1, r}`` in ``U(m)``; returns (sorted residues, is_full)."""
    if m < 3:
        raise NotCoprime("m must be at least 3")
    if math.gcd(r, m) != 1:
        raise NotCoprime(f"gcd({r}, {m}) != 1")
    gens = {(m - 1) % m, r % m}
    seen = {1}
    frontier = [1]
    while frontier:
        nxt = []
        for x in frontier:
            for g in gens:
                y = (x * g) % m
                if y not in seen:
                    seen.add(y)
                    nxt.append(y)
        frontier = nxt
    phi = sum(1 for j in range(1, m + 1) if math.gcd(j, m) == 1)
    return sorted(seen), len(seen) == phi


def metacyclic_is_cut(p: MetacyclicParams) -> Verdict:
    if not p.infinite:
        raise NotInfinite("finite metacyclic group: build it with catalog('metacyclic', m, n, r)")
    if p.abelian:
        raise AbelianCase("r = 1 gives an abelian group; it is cut iff its torsion has "
                          "exponent dividing 4 or 6")
    if p.m == 0:
        # r = -1 here
        if p.n % 2 == 1:
            raise NotMetacyclicAction("b^n = 1 with b inverting a forces n even (or 0)")
        chain = ["infinite metacyclic, a of infinite order: G = <a, b | b^n, ba = a^-1 b>"]
        if p.n == 0:
            chain.append("Φ⁺(G) = 1 (torsion-free FC-part)")
            chain.append(_P2_I_A)
            return Verdict(True, {"case": "I", "n": 0}, chain)
        fc = metacyclic_fc_torsion(p)
        chain.append(f"Φ⁺(G) = Φ⁺(Z(G)) = <b^2>, cyclic of order {fc['order']}")
        chain.append(_CENTRAL_4_6)
        ok = p.n in CASE_I_ORDERS
        chain.append(f"n = {p.n} {'in' if ok else 'not in'} {{0, 2, 4, 6, 8, 12}}")
        return Verdict(ok, {"case": "I", "n": p.n, "fc_torsion_order": fc["order"]}, chain)
    if p.m < 3:
        raise AbelianCase("m < 3 admits only r = 1")
    residues, full = unit_group_generated(p.m, p.r)
    chain = [
        "infinite metacyclic, b of infinite order: G = <a, b | a^m, ba = a^r b>",
        _P2_I_B + " (Q = <b> infinite cyclic)",
        "a is RS iff U(m) = <-1, r>",
        f"|<-1, r>| = {len(residues)}" + (" = φ(m)" if full else " < φ(m)"),
    ]
    witness: dict = {"case": "II", "m": p.m, "r": p.r, "generated": residues}
    if not full:
        missing = next(j for j in range(1, p.m) if math.gcd(j, p.m) == 1 and j not in set(residues))
        witness["exponent"] = missing
    return Verdict(full, witness, chain)


def metacyclic_fc_torsion(p: MetacyclicParams) -> dict:
    """Descriptor of ``Φ⁺(G) = <b^2>`` for ``<a, b | b^n, ba = a^-1 b>``."""
    if p.m != 0 or p.r != -1:
        raise UnsupportedCase("only the case m = 0, r = -1 is described")
    if p.n == 0:
        return {"kind": "trivial", "generator": None, "order": 1}
    order = p.n // math.gcd(p.n, 2)
    if order == 1:
        return {"kind": "trivial", "generator": "b^2", "order": 1}
    return {"kind": "cyclic", "generator": "b^2", "order": order}


def baumslag_solitar_is_cut(m: int, n: int) -> Verdict:
    if m == 0 or n == 0:
        raise ZeroParameter("BS(m, n) needs nonzero m and n")
    chain = [
        f"BS({m}, {n}) = <a, t | t^-1 a^{m} t = a^{n}> is an HNN extension of <a> ≅ Z",
        "associated subgroups <a^m>, <a^n> are torsion-free, hence RS",
        _P2_III,
    ]
    return Verdict(True, {"m": m, "n": n}, chain)


@dataclass
class ExtensionShape:
    """Structural facts about Π, supplied by the caller (never inferred).

    kind: ``free_product``, ``amalgam``, ``hnn`` or ``extension``.
    """

    kind: str
    factors_nontrivial: bool | None = None
    amalgam_rs_in_factor: bool | None = None
    amalgam_indices: tuple[int, int] | None = None
    hnn_associated_rs: bool | None = None
    quotient_is_cut: bool | None = None
    normal_meets_fc_trivially: bool | None = None
    quotient_fc_trivial: bool | None = None
    normal_fc_rs_in_total: bool | None = None
    name: str | None = None


def extension_is_cut(shape: ExtensionShape) -> Verdict:
    """Apply the sufficient conditions; ``outcome=None`` when none fires."""
    kind = shape.kind
    label = [shape.name] if shape.name else []
    if kind == "free_product":
        if shape.factors_nontrivial is None:
            raise MissingFlags("free_product needs factors_nontrivial")
        if shape.factors_nontrivial:
            return Verdict(True, None, label + [_P2_II_FREE])
        return Verdict(None, None, label + ["a trivial factor: no clause applies"])
    if kind == "amalgam":
        if shape.amalgam_indices is None:
            raise MissingFlags("amalgam needs amalgam_indices")
        i, j = shape.amalgam_indices
        if i == 1 or j == 1:
            return Verdict(None, {"indices": [i, j]}, label + ["amalgamated subgroup is a whole factor"])
        if shape.amalgam_rs_in_factor:
            return Verdict(True, {"indices": [i, j]}, label + [_P2_II])
        return Verdict(None, {"indices": [i, j]}, label + ["amalgamated subgroup not known to be RS"])
    if kind == "hnn":
        if shape.hnn_associated_rs:
            return Verdict(True, None, label + [_P2_III])
        return Verdict(None, None, label + ["associated subgroups not known to be RS"])
    if kind == "extension":
        a_flags = (shape.quotient_is_cut, shape.normal_meets_fc_trivially)
        b_flags = (shape.quotient_fc_trivial, shape.normal_fc_rs_in_total)
        if all(f is None for f in a_flags + b_flags):
            raise MissingFlags("extension needs the flags of at least one clause")
        if all(a_flags):
            return Verdict(True, None, label + [_P2_I_A])
        if all(b_flags):
            return Verdict(True, None, label + [_P2_I_B])
        return Verdict(None, None, label + ["no sufficient condition holds"])
    raise MissingFlags(f"unknown extension kind {kind!r}")


def _rs_in(big: str, big_order: int, small_order: int) -> bool:
    """Is the subgroup of order ``small_order`` of a cyclic group RS in it (finite check)."""
    from .catalog import cyclic
    from .groups import subgroup
    from .rs import is_rs_subgroup

    G = cyclic(big_order)
    g = G.generator_indices[0]
    A = subgroup(G, [G.power(g, big_order // small_order)])
    return bool(is_rs_subgroup(G, A))


def preset(name: str) -> ExtensionShape:
    """``psl2z`` = C2 * C3, ``sl2z`` = C4 *_{C2} C6."""
    if name == "psl2z":
        return ExtensionShape("free_product", factors_nontrivial=True, name="PSL(2,Z) ≅ C2 * C3")
    if name == "sl2z":
        rs = _rs_in("C4", 4, 2) or _rs_in("C6", 6, 2)
        return ExtensionShape("amalgam", amalgam_rs_in_factor=rs, amalgam_indices=(2, 3),
                              name="SL(2,Z) ≅ C4 *_C2 C6")
    raise KeyError(f"unknown preset {name!r}")


def truncation_consistency(p: MetacyclicParams, k: int) -> Verdict:
    """Compare the symbolic verdict with the finite group ``<a, b | a^m, b^k, ba = a^r b>``.

    Exploratory: the finite group is a different group, so agreement is
    recorded, never enforced.
    """
    if p.n != 0 or p.m == 0:
        raise UnsupportedCase("truncation applies to the case n = 0, m > 0")
    if k < 1 or pow(p.r, k, p.m) != 1 % p.m:
        raise IncompatibleExponent(f"r^k = {pow(p.r, k, p.m)} != 1 (mod {p.m})")
    from .catalog import metacyclic
    from .groups import subgroup
    from .rs import is_rs_subgroup

    H = metacyclic(p.m, k, p.r)
    a = H.generator_indices[0]
    A = subgroup(H, [a])
    finite_rs = is_rs_subgroup(H, A)
    symbolic = metacyclic_is_cut(p)
    witness = {
        "finite_order": H.order,
        "finite_a_rs": finite_rs.outcome,
        "symbolic": symbolic.outcome,
        "agree": finite_rs.outcome == symbolic.outcome,
    }
    return Verdict(finite_rs.outcome, witness, [f"finite shadow of order {H.order}"] + symbolic.derivation)
