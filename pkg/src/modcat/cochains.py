"""Normalized n-cochains with values in Q/Z.

A cochain assigns a QZ value to every n-tuple of group elements and vanishes
whenever an argument is the identity.  Only nonzero values on identity-free
tuples are stored; lookups of anything else return zero, so the stored dict
is a canonical form and equality is structural.

The multiplicative conventions of twisted group algebras translate to
additive Q/Z throughout: a product of cochain values becomes a QZ sum, an
inverse becomes a negation.
"""

from __future__ import annotations

from itertools import product
from typing import Mapping, Optional, Tuple

from .errors import DegreeMismatch, GroupMismatch, NotASubgroup, ParseError
from .groups import Group, Subgroup, builtin_group, group_from_json, group_to_json
from .qz import QZ, ZERO, qz

__all__ = [
    "Cochain",
    "zero_cochain",
    "nonidentity_tuples",
    "coboundary",
    "combine",
    "restrict",
    "conjugate_cochain",
    "is_cocycle",
    "cyclic_3cocycle",
    "cochain_to_json",
    "cochain_from_json",
]


class Cochain:
    """A normalized n-cochain on a group, n >= 0.

    ``values`` maps identity-free index tuples to nonzero QZ values; every
    other tuple is implicitly zero.
    """

    __slots__ = ("group", "degree", "values")

    def __init__(self, group: Group, degree: int,
                 values: Optional[Mapping[tuple, QZ]] = None):
        if degree < 0:
            raise DegreeMismatch("cochain degree must be >= 0")
        clean = {}
        e = group.identity
        for args, v in (values or {}).items():
            args = tuple(args)
            if len(args) != degree:
                raise DegreeMismatch(
                    f"value tuple {args} has length {len(args)}, degree is {degree}")
            if any(a < 0 or a >= group.order for a in args):
                raise ParseError(f"argument tuple {args} out of range")
            if not isinstance(v, QZ):
                v = qz(v)
            if e in args:
                if v:
                    raise ParseError(
                        f"nonzero value at identity-containing tuple {args}")
                continue
            if v:
                clean[args] = v
        object.__setattr__(self, "group", group)
        object.__setattr__(self, "degree", degree)
        object.__setattr__(self, "values", clean)

    def __setattr__(self, name, value):
        raise AttributeError("Cochain objects are immutable")

    def value(self, args: tuple) -> QZ:
        return self.values.get(tuple(args), ZERO)

    def __call__(self, *args) -> QZ:
        return self.values.get(args, ZERO)

    def is_zero(self) -> bool:
        return not self.values

    def items(self):
        """Nonzero (args, value) pairs in lexicographic argument order."""
        return sorted(self.values.items())

    def value_sequence(self):
        """All values on identity-free tuples in lexicographic order."""
        return tuple(self.value(t) for t in nonidentity_tuples(self.group, self.degree))

    def __eq__(self, other):
        if not isinstance(other, Cochain):
            return NotImplemented
        return (self.degree == other.degree and self.group == other.group
                and self.values == other.values)

    def __hash__(self):
        return hash((self.degree, frozenset(self.values.items())))

    def __repr__(self):
        return f"<Cochain deg {self.degree} on order-{self.group.order} group, {len(self.values)} nonzero>"


def zero_cochain(group: Group, degree: int) -> Cochain:
    return Cochain(group, degree, {})


def nonidentity_tuples(group: Group, n: int):
    """All n-tuples of non-identity element indices, lexicographically."""
    elems = [x for x in group.elements() if x != group.identity]
    return product(elems, repeat=n)


def coboundary(f: Cochain) -> Cochain:
    """The degree n+1 coboundary, for the trivial action on coefficients.

    (df)(g_1, ..., g_{n+1}) = f(g_2, ..., g_{n+1})
                              + sum_i (-1)^i f(g_1, ..., g_i g_{i+1}, ..., g_{n+1})
                              + (-1)^{n+1} f(g_1, ..., g_n)
    """
    G, n = f.group, f.degree
    table = G.table
    get = f.values.get
    out = {}
    for args in nonidentity_tuples(G, n + 1):
        v = get(args[1:], ZERO)
        sign = 1
        for i in range(n):
            sign = -sign
            merged = args[:i] + (table[args[i]][args[i + 1]],) + args[i + 2:]
            if G.identity not in merged:
                term = get(merged, ZERO)
                if term:
                    v = v + term if sign > 0 else v - term
        if sign > 0:  # (-1)^{n+1} where sign currently holds (-1)^n
            v = v - get(args[:n], ZERO)
        else:
            v = v + get(args[:n], ZERO)
        if v:
            out[args] = v
    return Cochain(G, n + 1, out)


def combine(f: Cochain, g: Cochain, signs: Tuple[int, int]) -> Cochain:
    """Pointwise signs[0]*f + signs[1]*g."""
    if f.degree != g.degree:
        raise DegreeMismatch(f"degree {f.degree} vs {g.degree}")
    if f.group != g.group:
        raise GroupMismatch("cochains live on different groups")
    s0, s1 = signs
    out = {}
    for args in set(f.values) | set(g.values):
        v = s0 * f.values.get(args, ZERO) + s1 * g.values.get(args, ZERO)
        if v:
            out[args] = v
    return Cochain(f.group, f.degree, out)


def restrict(f: Cochain, H: Subgroup) -> Cochain:
    """Restriction to a subgroup, reindexed to H's own element indices."""
    if H.parent != f.group:
        raise NotASubgroup("subgroup does not live in the cochain's group")
    view = H.as_group()
    memset = frozenset(H.members)
    pos = {p: i for i, p in enumerate(H.members)}
    out = {}
    for args, v in f.values.items():
        if all(a in memset for a in args):
            out[tuple(pos[a] for a in args)] = v
    return Cochain(view, f.degree, out)


def _embedding(group: Group):
    """(parent, members) for a subgroup view; a full group embeds in itself."""
    if group.parent is None:
        return group, tuple(range(group.order))
    return group.parent, group.members


def conjugate_cochain(f: Cochain, g: int) -> Cochain:
    """The conjugate cochain on g^{-1} H g: args are conjugated by g, then f applied.

    For f on a subgroup H of G and any g in G, the result lives on the
    subgroup view of g^{-1} H g (on G itself when f does).
    """
    P, members = _embedding(f.group)
    ginv = P.inverse[g]
    if f.group.parent is None:
        target = f.group
        tpos = None
    else:
        tmembers = tuple(sorted(P.conj(ginv, h) for h in members))
        target = Subgroup(P, tmembers, _checked=True).as_group()
        tpos = {p: i for i, p in enumerate(tmembers)}
    out = {}
    for args, v in f.values.items():
        parent_args = (members[a] for a in args)
        moved = tuple(P.conj(ginv, h) for h in parent_args)
        out[moved if tpos is None else tuple(tpos[m] for m in moved)] = v
    return Cochain(target, f.degree, out)


def is_cocycle(f: Cochain) -> bool:
    return coboundary(f).is_zero()


def cyclic_3cocycle(G: Group, q: int) -> Cochain:
    """The standard 3-cocycle on the builtin cyclic group of order n.

    Value q * i * floor((j+k)/n) / n at (a^i, a^j, a^k).  Requires the
    additive index law table[i][j] == (i+j) mod n; self-checked on creation.
    """
    n = G.order
    if any(G.table[i][j] != (i + j) % n for i in range(n) for j in range(n)):
        raise ParseError("cyclic 3-cocycle needs the builtin cyclic group layout")
    vals = {}
    for i, j, k in nonidentity_tuples(G, 3):
        vals[(i, j, k)] = QZ(q * i * ((j + k) // n), n)
    c = Cochain(G, 3, vals)
    if not is_cocycle(c):
        raise ParseError("cyclic 3-cocycle failed its self-check")
    return c


def cochain_to_json(f: Cochain, group_field=None) -> dict:
    """Serialize; ``group_field`` overrides the embedded group (e.g. a spec string)."""
    if group_field is None:
        group_field = group_to_json(f.group)
    return {
        "group": group_field,
        "degree": f.degree,
        "values": [{"args": list(args), "val": str(v)} for args, v in f.items()],
    }


def cochain_from_json(data, group: Optional[Group] = None,
                      expect_degree: Optional[int] = None) -> Cochain:
    """Parse the cochain JSON format.

    Omitted tuples are zero; identity-containing tuples must be absent or
    have value zero; values must be exact "p/q" strings (floats rejected).
    ``group`` overrides the embedded group reference when supplied.
    """
    if not isinstance(data, dict):
        raise ParseError("cochain JSON must be an object")
    if group is None:
        ref = data.get("group")
        if ref is None:
            raise ParseError("cochain JSON has no group and none was supplied")
        group = builtin_group(ref) if isinstance(ref, str) else group_from_json(ref)
    else:
        ref = data.get("group")
        if isinstance(ref, dict) and int(ref.get("order", group.order)) != group.order:
            raise ParseError("cochain JSON group order does not match")
    try:
        degree = int(data["degree"])
    except (KeyError, TypeError, ValueError) as exc:
        raise ParseError(f"cochain JSON degree missing or malformed: {exc}") from exc
    if expect_degree is not None and degree != expect_degree:
        raise DegreeMismatch(f"expected degree {expect_degree}, file has {degree}")
    vals = {}
    for entry in data.get("values", []):
        if not isinstance(entry, dict) or "args" not in entry or "val" not in entry:
            raise ParseError(f"malformed value entry {entry!r}")
        args = tuple(int(a) for a in entry["args"])
        if args in vals:
            raise ParseError(f"duplicate value entry for {args}")
        vals[args] = qz(entry["val"])
    return Cochain(group, degree, vals)
