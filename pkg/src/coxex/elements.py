"""Group elements as signed permutations of positive roots.

All group arithmetic is table composition on tuples; inversion sets fall out
for free (an index is inverted exactly when its table entry is negative).
"""

from __future__ import annotations

import os

from .linalg import fixed_vector_basis
from .rootsystem import RootSystem

DEFAULT_GUARD = 10_000_000
GUARD_ENV = "COXEX_GUARD"


class GuardExceeded(RuntimeError):
    """An exhaustive computation was refused because the group is too large."""


def effective_guard(guard: int | None) -> int:
    if guard is not None:
        return guard
    env = os.environ.get(GUARD_ENV)
    return int(env) if env else DEFAULT_GUARD


def apply_table(table, signed_index: int) -> int:
    """Image of a signed root index under a root permutation table."""
    if signed_index > 0:
        return table[signed_index - 1]
    return -table[-signed_index - 1]


def compose_tables(p, q):
    """Table of "p then q" (the group product pq under right actions)."""
    return tuple(q[v - 1] if v > 0 else -q[-v - 1] for v in p)


def invert_table(p):
    out = [0] * len(p)
    for i, v in enumerate(p):
        if v > 0:
            out[v - 1] = i + 1
        else:
            out[-v - 1] = -(i + 1)
    return tuple(out)


def identity_table(n: int):
    return tuple(range(1, n + 1))


def is_involution_table(p) -> bool:
    """True for self-inverse tables, the identity included."""
    for i, v in enumerate(p):
        img = p[v - 1] if v > 0 else -p[-v - 1]
        if img != i + 1:
            return False
    return True


def bits_of_table(p) -> int:
    bits = 0
    for i, v in enumerate(p):
        if v < 0:
            bits |= 1 << i
    return bits


class GroupElement:
    """An element of a finite Coxeter group, pinned to its root system."""

    __slots__ = ("system", "perm")

    def __init__(self, system: RootSystem, perm):
        self.system = system
        self.perm = tuple(perm)

    def __mul__(self, other: "GroupElement") -> "GroupElement":
        if self.system is not other.system:
            raise ValueError("cannot compose elements of different root systems")
        return GroupElement(self.system, compose_tables(self.perm, other.perm))

    def inverse(self) -> "GroupElement":
        return GroupElement(self.system, invert_table(self.perm))

    def conjugated_by(self, x: "GroupElement") -> "GroupElement":
        return x.inverse() * self * x

    def is_identity(self) -> bool:
        return all(v == i + 1 for i, v in enumerate(self.perm))

    def is_involution(self) -> bool:
        """x^2 == 1, which admits the identity."""
        return is_involution_table(self.perm)

    def act(self, signed_index: int) -> int:
        return apply_table(self.perm, signed_index)

    def inversions(self) -> int:
        """Bitset of positive roots sent negative."""
        return bits_of_table(self.perm)

    def length(self) -> int:
        return bits_of_table(self.perm).bit_count()

    def matrix(self):
        """Action on the span of the simple roots, rows indexed by generators."""
        rs = self.system
        rows = []
        for si in rs.simple_indices:
            v = self.perm[si]
            c = rs.coeffs[abs(v) - 1]
            rows.append(c if v > 0 else tuple(-x for x in c))
        return tuple(rows)

    def fixed_space_basis(self):
        return fixed_vector_basis(self.matrix(), self.system.exact)

    def fixed_space_dim(self) -> int:
        return len(self.fixed_space_basis())

    def reflection_length(self) -> int:
        """Essential rank minus fixed-space dimension."""
        return self.system.rank - self.fixed_space_dim()

    def is_cuspidal(self) -> bool:
        if not self.system.is_irreducible:
            raise ValueError("cuspidality is defined for irreducible systems only")
        return self.fixed_space_dim() == 0

    def __eq__(self, other):
        return (isinstance(other, GroupElement)
                and self.system is other.system and self.perm == other.perm)

    def __hash__(self):
        return hash(self.perm)

    def __repr__(self):
        return f"GroupElement({self.system.name}, len={self.length()})"


def identity_element(rs: RootSystem) -> GroupElement:
    return GroupElement(rs, identity_table(rs.num_positive))


def generator(rs: RootSystem, r: int) -> GroupElement:
    return GroupElement(rs, rs.gen_tables[r])


def reflection(rs: RootSystem, root_index: int) -> GroupElement:
    return GroupElement(rs, rs.reflection_table(root_index))


def element_from_word(rs: RootSystem, word) -> GroupElement:
    """Product of generators, applied left to right; indices are 0-based."""
    p = identity_table(rs.num_positive)
    for r in word:
        p = compose_tables(p, rs.gen_tables[r])
    return GroupElement(rs, p)


# spec-style functional mirrors of the element methods
def compose(a: GroupElement, b: GroupElement) -> GroupElement:
    return a * b


def invert(a: GroupElement) -> GroupElement:
    return a.inverse()


def is_involution(a: GroupElement) -> bool:
    return a.is_involution()


def act(rs: RootSystem, signed_index: int, w: GroupElement) -> int:
    if not 1 <= abs(signed_index) <= rs.num_positive:
        raise ValueError(f"root index {signed_index} out of range")
    return apply_table(w.perm, signed_index)


def inversion_set(w: GroupElement) -> int:
    return w.inversions()


def inversion_set_of_set(elements) -> int:
    bits = 0
    for w in elements:
        bits |= w.inversions()
    return bits


def length(w: GroupElement) -> int:
    return w.length()


def bfs_tables(rs: RootSystem, guard: int | None = None, gens: tuple[int, ...] | None = None):
    """Enumerate by breadth-first closure under right multiplication.

    Returns (perms, words, index) with perms in discovery order and one
    reduced word (0-based generator indices) per element.  Results for the
    full generating set are cached on the root system.
    """
    full = gens is None
    if full and rs._bfs is not None:
        return rs._bfs
    limit = effective_guard(guard)
    if full and rs.order() > limit:
        raise GuardExceeded(f"|W({rs.name})| = {rs.order()} exceeds guard {limit}")
    tables = rs.gen_tables if full else [rs.gen_tables[r] for r in gens]
    names = range(rs.rank) if full else gens
    ident = identity_table(rs.num_positive)
    perms = [ident]
    words = [()]
    index = {ident: 0}
    i = 0
    while i < len(perms):
        p = perms[i]
        w = words[i]
        for r, t in zip(names, tables):
            q = compose_tables(p, t)
            if q not in index:
                index[q] = len(perms)
                perms.append(q)
                words.append(w + (r,))
                if len(perms) > limit:
                    raise GuardExceeded(f"enumeration exceeded guard {limit}")
        i += 1
    result = (perms, words, index)
    if full:
        rs._bfs = result
    return result


def enumerate_group(rs: RootSystem, guard: int | None = None):
    """Yield every group element exactly once, in BFS order."""
    perms, _, _ = bfs_tables(rs, guard)
    for p in perms:
        yield GroupElement(rs, p)


def group_elements(rs: RootSystem, guard: int | None = None) -> list[GroupElement]:
    return list(enumerate_group(rs, guard))


def reduced_words(rs: RootSystem, guard: int | None = None) -> dict:
    perms, words, _ = bfs_tables(rs, guard)
    return {p: w for p, w in zip(perms, words)}


def conjugacy_classes(rs: RootSystem, guard: int | None = None) -> list[list[GroupElement]]:
    """Orbits under conjugation, each sorted by table for determinism."""
    perms, _, index = bfs_tables(rs, guard)
    gens = rs.gen_tables
    seen = [False] * len(perms)
    classes = []
    for start, p in enumerate(perms):
        if seen[start]:
            continue
        orbit = [p]
        seen[start] = True
        q = 0
        while q < len(orbit):
            cur = orbit[q]
            for g in gens:
                # generators are involutions, so g * cur * g conjugates
                conj = compose_tables(compose_tables(g, cur), g)
                ci = index[conj]
                if not seen[ci]:
                    seen[ci] = True
                    orbit.append(conj)
            q += 1
        orbit.sort()
        classes.append([GroupElement(rs, t) for t in orbit])
    return classes
