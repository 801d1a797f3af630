"""Theorem verification suites over desk-scale groups.

Each registered check is a (hypothesis filter, conclusion predicate) pair
run exhaustively over one group; results are deterministic for a fixed
configuration, independent of the worker count.
"""

from __future__ import annotations

import json
import random
import time
from dataclasses import dataclass, field

from .descriptors import CoxeterDescriptor
from .elements import (GuardExceeded, apply_table, bfs_tables, bits_of_table,
                       compose_tables, effective_guard, identity_table,
                       invert_table)
from .excess import (DnCondition, GroupData, dn_condition_check,
                     inverting_signed_involutions, overlap_check,
                     spartan_support_check, swapcycle_check)
from .parabolic import (all_generator_subsets, maximal_generator_subsets,
                        parabolic_context, split_context, split_values)
from .rootsystem import RootSystem, build_root_system

MAX_COUNTEREXAMPLES = 100


@dataclass(frozen=True)
class SuiteConfig:
    """What to verify: groups, checks, parabolic selection, limits."""

    descriptors: tuple[tuple[CoxeterDescriptor, ...], ...]
    theorems: tuple[str, ...] = ("all",)
    parabolic: str | tuple[int, ...] = "all"  # "all" | "maximal" | 0-based subset
    guard: int | None = None
    workers: int = 1
    strategy: str = "direct"  # "direct" | "maximal-reduction"
    sample_pairs: int = 10000
    seed: int = 20260809

    def __post_init__(self):
        if effective_guard(self.guard) < 1:
            raise ValueError("guard must be at least 1")
        if self.strategy not in ("direct", "maximal-reduction"):
            raise ValueError(f"unknown strategy {self.strategy!r}")
        for name in self.theorems:
            if name != "all" and name not in THEOREMS:
                known = ", ".join(THEOREMS)
                raise ValueError(f"unknown theorem {name!r}; known: all, {known}")


def make_config(descriptors, **kw) -> SuiteConfig:
    groups = []
    for d in descriptors:
        groups.append((d,) if isinstance(d, CoxeterDescriptor) else tuple(d))
    return SuiteConfig(descriptors=tuple(groups), **kw)


@dataclass(frozen=True)
class Counterexample:
    element: str
    J: str
    observed: str
    expected: str

    def to_dict(self):
        return {"element": self.element, "J": self.J,
                "observed": self.observed, "expected": self.expected}


@dataclass
class CheckResult:
    theorem: str
    descriptor: str
    status: str  # "pass" | "fail" | "skip"
    passes: int = 0
    counterexamples: list[Counterexample] = field(default_factory=list)
    reason: str = ""
    notes: dict = field(default_factory=dict)

    @property
    def failures(self) -> int:
        return len(self.counterexamples)

    def to_dict(self):
        out = {"theorem": self.theorem, "descriptor": self.descriptor,
               "status": self.status, "passes": self.passes,
               "failures": self.failures,
               "counterexamples": [c.to_dict() for c in self.counterexamples]}
        if self.reason:
            out["reason"] = self.reason
        if self.notes:
            out["notes"] = {k: self.notes[k] for k in sorted(self.notes)}
        return out


@dataclass
class SuiteResult:
    config: dict
    checks: list[CheckResult]
    wall_clock_s: float

    @property
    def failures_total(self) -> int:
        return sum(c.failures for c in self.checks)

    def to_payload(self) -> dict:
        return {"config": self.config,
                "checks": [c.to_dict() for c in self.checks],
                "failures_total": self.failures_total}

    def to_json(self) -> str:
        doc = {"schema": "coxex.suite/1", "payload": self.to_payload(),
               "wall_clock_s": round(self.wall_clock_s, 3)}
        return json.dumps(doc, indent=1, sort_keys=True)

    def csv_rows(self) -> list[list[str]]:
        rows = [["theorem", "descriptor", "status", "passes", "failures",
                 "element", "J", "observed", "expected"]]
        for c in self.checks:
            if not c.counterexamples:
                rows.append([c.theorem, c.descriptor, c.status, str(c.passes),
                             "0", "", "", "", ""])
            for ce in c.counterexamples:
                rows.append([c.theorem, c.descriptor, c.status, str(c.passes),
                             str(c.failures), ce.element, ce.J,
                             ce.observed, ce.expected])
        return rows


class _Tally:
    def __init__(self):
        self.passes = 0
        self.bad: list[Counterexample] = []

    def check(self, ok: bool, element: str, J: str, observed, expected):
        if ok:
            self.passes += 1
        elif len(self.bad) < MAX_COUNTEREXAMPLES:
            self.bad.append(Counterexample(element, J, str(observed), str(expected)))
        else:
            self.bad.append(Counterexample(element, J, "...", "truncated"))


def _subsets_for(gd: GroupData, config: SuiteConfig):
    if config.parabolic == "all":
        return all_generator_subsets(gd.rs)
    if config.parabolic == "maximal":
        return maximal_generator_subsets(gd.rs)
    return [tuple(sorted(config.parabolic))]


def _members(gd: GroupData, mask: int):
    return [i for i, b in enumerate(gd.bits) if b & ~mask == 0]


# --------------------------------------------------------------- runners ---

def _run_parabolic_reflection_excess(gd, config, notes):
    t = _Tally()
    for J in _subsets_for(gd, config):
        ctx = parabolic_context(gd.rs, J)
        jd = " ".join(str(j) for j in ctx.J_display) or "-"
        for wi in _members(gd, ctx.mask):
            ej = gd.refl_excess_in(wi, J, ctx.mask)
            e = gd.refl_excess_of(wi)
            t.check(ej == e, gd.display(wi), jd, f"E_J={ej}", f"E={e}")
    return t


def _run_parabolic_excess_direct(gd, config, notes):
    t = _Tally()
    for J in _subsets_for(gd, config):
        ctx = parabolic_context(gd.rs, J)
        jd = " ".join(str(j) for j in ctx.J_display) or "-"
        for wi in _members(gd, ctx.mask):
            ej = gd.excess_in(wi, ctx.mask)
            e = gd.excess_of(wi)
            t.check(ej == e, gd.display(wi), jd, f"e_J={ej}", f"e={e}")
    return t


def _run_parabolic_excess_dn(gd, config, notes):
    """Type D: the equality is only claimed under the split hypotheses."""
    notes["mode"] = "dn-conditional"
    gaps = 0
    t = _Tally()
    for m in split_values(gd.rs):
        ctx = split_context(gd.rs, m)
        for wi in _members(gd, ctx.mask):
            cond = dn_condition_check(gd.signed_perm(wi), m)
            ej = gd.excess_in(wi, ctx.mask)
            e = gd.excess_of(wi)
            if ej != e:
                gaps += 1
            if cond is DnCondition.NONE:
                continue
            t.check(ej == e, gd.display(wi), f"m={m}",
                    f"e_J={ej} ({cond.value})", f"e={e}")
    notes["unconditional_gaps_observed"] = gaps
    return t


def _run_parabolic_excess_reduction(gd, config, notes):
    """Maximal-parabolic reduction: verify the claim inside each maximal W_J
    for all of its parabolics, then e_J = e on the maximal layer itself."""
    notes["mode"] = "maximal-reduction"
    t = _Tally()
    for J in maximal_generator_subsets(gd.rs):
        sub = GroupData(gd.rs, gens=J)
        jd = " ".join(str(j + 1) for j in J)
        for kbits in range(1 << len(J)):
            K = tuple(J[i] for i in range(len(J)) if kbits >> i & 1)
            maskK = parabolic_context(gd.rs, K).mask
            for si in range(len(sub)):
                if sub.bits[si] & ~maskK:
                    continue
                ek = sub.excess_in(si, maskK)
                ej = sub.excess_of(si)
                t.check(ek == ej, sub.display(si),
                        f"K={' '.join(str(k + 1) for k in K) or '-'} in J={jd}",
                        f"e_K={ek}", f"e_J={ej}")
        for si in range(len(sub)):
            wi = gd.index[sub.perms[si]]
            ej = sub.excess_of(si)
            e = gd.excess_of(wi)
            t.check(ej == e, sub.display(si), f"J={jd}", f"e_J={ej}", f"e={e}")
    return t


def _run_parabolic_excess(gd, config, notes):
    if gd.rs.family == "D":
        return _run_parabolic_excess_dn(gd, config, notes)
    if config.strategy == "maximal-reduction":
        return _run_parabolic_excess_reduction(gd, config, notes)
    return _run_parabolic_excess_direct(gd, config, notes)


def _run_nw_subset_niw(gd, config, notes):
    t = _Tally()
    for wi in range(len(gd)):
        niw = gd.niw_bits(wi)
        missing = gd.bits[wi] & ~niw
        t.check(missing == 0, gd.display(wi), "-",
                f"N(w) \\ N(I_w) has {missing.bit_count()} roots", "empty")
    return t


def _run_cuspidal_full(gd, config, notes):
    full = gd.rs.full_mask()
    t = _Tally()
    cuspidal = 0
    for wi in range(len(gd)):
        if gd.kernel(wi):
            continue
        cuspidal += 1
        t.check(gd.niw_bits(wi) == full, gd.display(wi), "-",
                f"|N(I_w)|={gd.niw_bits(wi).bit_count()}",
                f"all {gd.rs.num_positive}")
    notes["cuspidal_elements"] = cuspidal
    return t


def _run_centre_full(gd, config, notes):
    minus_one = tuple(-(i + 1) for i in range(gd.rs.num_positive))
    if minus_one not in gd.index:
        raise RuntimeError("central inversion expected but not found")
    full = gd.rs.full_mask()
    t = _Tally()
    for wi in range(len(gd)):
        t.check(gd.niw_bits(wi) == full, gd.display(wi), "-",
                f"|N(I_w)|={gd.niw_bits(wi).bit_count()}",
                f"all {gd.rs.num_positive}")
    return t


def _run_spartan_support(gd, config, notes):
    fam = gd.rs.family
    t = _Tally()
    for wi in range(len(gd)):
        w_sp = gd.signed_perm(wi)
        for xi, yi in gd.spartan_of(wi):
            ok = spartan_support_check(gd.signed_perm(xi), gd.signed_perm(yi),
                                       w_sp, fam)
            t.check(ok, gd.display(wi), "-",
                    f"pair ({gd.display(xi)}, {gd.display(yi)})",
                    "support rule holds")
    return t


def _run_spartan_overlap(gd, config, notes):
    t = _Tally()
    for m in split_values(gd.rs):
        ctx = split_context(gd.rs, m)
        for wi in _members(gd, ctx.mask):
            for xi, yi in gd.spartan_of(wi):
                ok = overlap_check(gd.signed_perm(xi), gd.signed_perm(yi), m)
                t.check(ok, gd.display(wi), f"m={m}",
                        f"pair ({gd.display(xi)}, {gd.display(yi)})",
                        "2-cycles respect the split")
    return t


def _run_spartan_swapcycle(gd, config, notes):
    t = _Tally()
    for wi in range(len(gd)):
        w_sp = gd.signed_perm(wi)
        for xi, yi in gd.spartan_of(wi):
            ok = swapcycle_check(gd.signed_perm(xi), gd.signed_perm(yi), w_sp)
            t.check(ok, gd.display(wi), "-",
                    f"pair ({gd.display(xi)}, {gd.display(yi)})",
                    "swapped cycles overlap")
    return t


def _run_excess_even_symmetric(gd, config, notes):
    t = _Tally()
    for wi in range(len(gd)):
        e = gd.excess_of(wi)
        einv = gd.excess_of(gd.inverse[wi])
        E = gd.refl_excess_of(wi)
        ok = e >= 0 and e % 2 == 0 and einv == e and E >= e
        t.check(ok, gd.display(wi), "-",
                f"e={e} e(w^-1)={einv} E={E}", "e even, symmetric, E >= e")
    return t


def _run_excess_additivity(gd, config, notes):
    rs = gd.rs
    blocks = []
    offset = 0
    for d in rs.components:
        blocks.append(tuple(range(offset, offset + d.rank)))
        offset += d.rank
    ctxs = [parabolic_context(rs, J) for J in blocks]
    t = _Tally()
    for wi in range(len(gd)):
        p = gd.perms[wi]
        e_sum = 0
        E_sum = 0
        for ctx in ctxs:
            proj = list(identity_table(rs.num_positive))
            for i in ctx.indices:
                proj[i] = p[i]
            pi = gd.index[tuple(proj)]
            e_sum += gd.excess_in(pi, ctx.mask)
            E_sum += gd.refl_excess_in(pi, ctx.J, ctx.mask)
        ok = gd.excess_of(wi) == e_sum and gd.refl_excess_of(wi) == E_sum
        t.check(ok, gd.display(wi), "-",
                f"e={gd.excess_of(wi)} sum={e_sum}; E={gd.refl_excess_of(wi)} sum={E_sum}",
                "additive over direct factors")
    return t


def _run_jset_equivalence(gd, config, notes):
    t = _Tally()
    for wi in range(len(gd)):
        via_fix = {x for x, _ in gd.jset_of(wi)}
        Lw = gd.reflection_length(wi)
        via_len = {x for x, y in gd.pairs[wi]
                   if Lw == gd.reflection_length(x) + gd.reflection_length(y)}
        t.check(via_fix == via_len, gd.display(wi), "-",
                f"|fixed-space filter|={len(via_fix)}",
                f"|length-additive filter|={len(via_len)}")
    return t


def _run_structured_iw(gd, config, notes):
    fam = gd.rs.family
    t = _Tally()
    for wi in range(len(gd)):
        exhaustive = {gd.signed_perm(xi).images for xi, _ in gd.pairs[wi]}
        structured = {x.images for x in
                      inverting_signed_involutions(gd.signed_perm(wi), fam)}
        t.check(exhaustive == structured, gd.display(wi), "-",
                f"|structured|={len(structured)}", f"|exhaustive|={len(exhaustive)}")
    return t


def _run_reflection_length_oracle(gd, config, notes):
    rs = gd.rs
    tables = [rs.reflection_table(i) for i in range(rs.num_positive)]
    dist = {identity_table(rs.num_positive): 0}
    frontier = [identity_table(rs.num_positive)]
    while frontier:
        nxt = []
        for p in frontier:
            for tb in tables:
                q = compose_tables(p, tb)
                if q not in dist:
                    dist[q] = dist[p] + 1
                    nxt.append(q)
        frontier = nxt
    t = _Tally()
    for wi in range(len(gd)):
        bfs = dist[gd.perms[wi]]
        carter = gd.reflection_length(wi)
        t.check(bfs == carter, gd.display(wi), "-",
                f"rank-fix={carter}", f"bfs={bfs}")
    return t


def _lemma22_holds(g, h) -> bool:
    gh = compose_tables(g, h)
    g_inv = invert_table(g)
    bg, bh, bgh = bits_of_table(g), bits_of_table(h), bits_of_table(gh)
    bginv = bits_of_table(g_inv)
    removed = 0
    i = 0
    b = bh
    while b:
        if b & 1:
            s = apply_table(g_inv, -(i + 1))
            if s > 0:
                removed |= 1 << (s - 1)
        b >>= 1
        i += 1
    added = 0
    i = 0
    b = bh & ~bginv
    while b:
        if b & 1:
            s = apply_table(g_inv, i + 1)
            if s < 0:
                return False  # image must stay positive here
            added |= 1 << (s - 1)
        b >>= 1
        i += 1
    if bgh != (bg & ~removed) | added:
        return False
    lg, lh, lgh = bg.bit_count(), bh.bit_count(), bgh.bit_count()
    return lgh == lg + lh - 2 * (bginv & bh).bit_count()


def _involution_reversal_holds(p) -> bool:
    bits = bits_of_table(p)
    image = 0
    i = 0
    b = bits
    while b:
        if b & 1:
            s = apply_table(p, -(i + 1))
            if s < 0:
                return False
            image |= 1 << (s - 1)
        b >>= 1
        i += 1
    return image == bits


def _run_inversion_identity(gd, config, notes):
    rng = random.Random(f"{config.seed}:{gd.rs.name}")
    n = len(gd)
    t = _Tally()
    for _ in range(config.sample_pairs):
        gi = rng.randrange(n)
        hi = rng.randrange(n)
        ok = _lemma22_holds(gd.perms[gi], gd.perms[hi])
        t.check(ok, f"({gd.display(gi)}, {gd.display(hi)})", "-",
                "set identity violated", "N(gh) decomposition")
    for xi in gd.involutions:
        t.check(_involution_reversal_holds(gd.perms[xi]), gd.display(xi), "-",
                "N(x) != -N(x)x", "N(x) = -N(x)x")
    notes["sampled_pairs"] = config.sample_pairs
    return t


def _run_zero_excess_classes(gd, config, notes):
    from .elements import conjugacy_classes
    classes = conjugacy_classes(gd.rs)
    t = _Tally()
    for cls in classes:
        best = min(gd.excess_of(gd.index[w.perm]) for w in cls)
        rep = gd.index[cls[0].perm]
        t.check(best == 0, gd.display(rep), "-",
                f"class min excess = {best}", "0")
    notes["classes"] = len(classes)
    return t


def _run_length_reduced_word(gd, config, notes):
    t = _Tally()
    for wi in range(len(gd)):
        t.check(gd.lengths[wi] == len(gd.words[wi]), gd.display(wi), "-",
                f"|N(w)|={gd.lengths[wi]}", f"word length {len(gd.words[wi])}")
    return t


def _run_parabolic_length(gd, config, notes):
    t = _Tally()
    for J in _subsets_for(gd, config):
        if not J:
            continue
        ctx = parabolic_context(gd.rs, J)
        perms, words, _ = bfs_tables(gd.rs, gens=tuple(J))
        jd = " ".join(str(j) for j in ctx.J_display)
        for p, wrd in zip(perms, words):
            wi = gd.index[p]
            ok = ctx.contains_table(gd.bits[wi]) and gd.lengths[wi] == len(wrd)
            t.check(ok, gd.display(wi), jd,
                    f"ambient length {gd.lengths[wi]}",
                    f"subgroup word length {len(wrd)}")
    return t


# -------------------------------------------------------------- registry ---

def _needs_signed(components):
    if len(components) != 1 or components[0].family not in ("A", "B", "D"):
        return "needs a signed-permutation family (A, B or D)"
    return None


def _needs_bd(components):
    if len(components) != 1 or components[0].family not in ("B", "D"):
        return "needs an irreducible type B or D group"
    return None


@dataclass(frozen=True)
class TheoremSpec:
    name: str
    title: str
    runner: object
    applicable: object = None  # components -> skip reason or None


THEOREMS: dict[str, TheoremSpec] = {}


def _register(name, title, runner, applicable=None):
    THEOREMS[name] = TheoremSpec(name, title, runner, applicable)


_register("parabolic-reflection-excess",
          "reflection excess is insensitive to standard parabolic restriction",
          _run_parabolic_reflection_excess)
_register("parabolic-excess",
          "excess is insensitive to standard parabolic restriction "
          "(conditional on splits for type D)",
          _run_parabolic_excess)
_register("nw-subset-niw",
          "N(w) is covered by the inversions of the inverting involutions",
          _run_nw_subset_niw)
_register("cuspidal-full-inversions",
          "cuspidal elements have N(I_w) equal to all positive roots",
          _run_cuspidal_full,
          lambda comps: None if len(comps) == 1 else "needs an irreducible group")
_register("centre-full-inversions",
          "with a central inversion, N(I_w) is everything for every w",
          _run_centre_full,
          lambda comps: None if all(d.has_central_inversion() for d in comps)
          else "group has no central inversion")
_register("spartan-support",
          "spartan pairs stay inside the support of w (one-point slack in D)",
          _run_spartan_support, _needs_signed)
_register("spartan-overlap",
          "2-cycles of spartan pairs do not straddle maximal splits",
          _run_spartan_overlap, _needs_signed)
_register("spartan-swapcycle",
          "cycles swapped by a spartan involution must interleave",
          _run_spartan_swapcycle, _needs_signed)
_register("excess-even-symmetric",
          "excess is even, inversion-symmetric, and bounded by reflection excess",
          _run_excess_even_symmetric)
_register("excess-additivity",
          "excess and reflection excess add over direct factors",
          _run_excess_additivity,
          lambda comps: None if len(comps) > 1 else "needs a reducible group")
_register("jset-equivalence",
          "fixed-space filter equals the reflection-length-additive filter",
          _run_jset_equivalence)
_register("structured-iw-oracle",
          "centralizer-coset enumeration of I_w matches the exhaustive filter",
          _run_structured_iw, _needs_bd)
_register("reflection-length-oracle",
          "rank minus fixed-space dimension matches BFS reflection factorization",
          _run_reflection_length_oracle)
_register("inversion-set-identity",
          "inversion sets compose correctly on random pairs; involutions reverse",
          _run_inversion_identity)
_register("zero-excess-classes",
          "every conjugacy class contains an element of excess zero",
          _run_zero_excess_classes)
_register("length-reduced-word",
          "inversion count equals reduced word length",
          _run_length_reduced_word)
_register("parabolic-length",
          "length inside a standard parabolic agrees with ambient length",
          _run_parabolic_length)


def theorem_names() -> list[str]:
    return list(THEOREMS)


def run_suite(config: SuiteConfig) -> SuiteResult:
    t0 = time.monotonic()
    limit = effective_guard(config.guard)
    systems: list[RootSystem] = []
    for comps in config.descriptors:
        rs = build_root_system(comps)
        if rs.order() > limit:
            raise GuardExceeded(
                f"|W({rs.name})| = {rs.order()} exceeds guard {limit}")
        systems.append(rs)
    selected = (list(THEOREMS) if "all" in config.theorems
                else [n for n in THEOREMS if n in config.theorems])
    checks: list[CheckResult] = []
    for rs in systems:
        gd = None
        for name in selected:
            thm = THEOREMS[name]
            reason = thm.applicable(rs.components) if thm.applicable else None
            if reason is not None:
                checks.append(CheckResult(name, rs.name, "skip", reason=reason))
                continue
            if gd is None:
                gd = GroupData(rs, guard=limit, workers=config.workers)
            notes: dict = {}
            tally = thm.runner(gd, config, notes)
            status = "pass" if not tally.bad else "fail"
            checks.append(CheckResult(name, rs.name, status, tally.passes,
                                      tally.bad, "", notes))
    cfg_payload = {
        "descriptors": ["x".join(d.name for d in comps) for comps in config.descriptors],
        "theorems": list(selected),
        "parabolic": (config.parabolic if isinstance(config.parabolic, str)
                      else list(config.parabolic)),
        "guard": limit,
        "strategy": config.strategy,
        "sample_pairs": config.sample_pairs,
        "seed": config.seed,
    }
    return SuiteResult(cfg_payload, checks, time.monotonic() - t0)
