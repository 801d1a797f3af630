"""Standard parabolic subgroups via embedded root subsystems.

Membership in W_J is decided by a single primitive: N(w) must lie inside
Phi_J, the positive roots supported on the simple roots indexed by J.
"""

from __future__ import annotations

from dataclasses import dataclass

from .elements import GroupElement
from .rootsystem import RootSystem


@dataclass(frozen=True)
class ParabolicContext:
    """A generator subset J with its embedded root subsystem Phi_J."""

    system: RootSystem
    J: tuple[int, ...]          # 0-based generator indices, sorted
    indices: tuple[int, ...]    # positive-root indices lying in Phi_J
    mask: int                   # the same indices as a bitset

    def contains(self, w: GroupElement) -> bool:
        return (w.inversions() & ~self.mask) == 0

    def contains_table(self, bits: int) -> bool:
        return (bits & ~self.mask) == 0

    @property
    def J_display(self) -> tuple[int, ...]:
        """1-based generator numbers, as used in reports."""
        return tuple(j + 1 for j in self.J)

    def __repr__(self):
        return f"ParabolicContext({self.system.name}, J={list(self.J_display)})"


def parabolic_context(rs: RootSystem, J) -> ParabolicContext:
    Jset = frozenset(J)
    if not all(0 <= j < rs.rank for j in Jset):
        raise ValueError(f"generator subset {sorted(Jset)} out of range for rank {rs.rank}")
    idxs = []
    mask = 0
    for i in range(rs.num_positive):
        if set(rs.coeff_support(i)) <= Jset:
            idxs.append(i)
            mask |= 1 << i
    return ParabolicContext(rs, tuple(sorted(Jset)), tuple(idxs), mask)


def all_generator_subsets(rs: RootSystem) -> list[tuple[int, ...]]:
    rank = rs.rank
    out = []
    for bits in range(1 << rank):
        out.append(tuple(j for j in range(rank) if bits >> j & 1))
    return out


def maximal_generator_subsets(rs: RootSystem) -> list[tuple[int, ...]]:
    rank = rs.rank
    return [tuple(j for j in range(rank) if j != omit) for omit in range(rank)]


def split_values(rs: RootSystem) -> list[int]:
    """The m for which Sym(1..m) x W(m+1..n) is a maximal standard parabolic."""
    fam = rs.family
    if fam == "A":
        return list(range(1, rs.rank + 1))
    if fam == "B":
        return list(range(1, rs.rank + 1))
    if fam == "D":
        n = rs.rank
        return list(range(1, n - 1)) + [n]
    raise ValueError("split parabolics are defined for families A, B, D")


def split_context(rs: RootSystem, m: int) -> ParabolicContext:
    """Maximal parabolic of the form Sym(1..m) x W(m+1..n): drop generator m."""
    if m not in split_values(rs):
        raise ValueError(f"no split parabolic at m={m} for {rs.name}")
    J = tuple(j for j in range(rs.rank) if j != m - 1)
    return parabolic_context(rs, J)
