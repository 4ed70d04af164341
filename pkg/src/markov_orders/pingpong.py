"""Free-subgroup certificates for the commutator generators.

The two length-four words ``abaB`` and ``aBab`` play table tennis on
four target sets: the depth-two cells ``[ab]`` and ``[aB]`` and the
depth-one cells ``[b]`` and ``[B]``.  Two certificate layers are
computed, both exact:

* the strict inclusion layer on the union of the four targets, with
  every boundary point of the receiving set attained;
* open collar neighborhoods of the four targets such that each word
  maps the complement of its source collar inside its target collar —
  the quantitative hypothesis that survives perturbation.

Collars are searched over dyadic fractions of the flanking gap
lengths, widest first; a failed search is reported as such, never as a
disproof.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .arcs import ArcSet
from .plmap import PLCircleMap
from .realization import Realization

GEN_ONE = "abaB"
GEN_TWO = "aBab"

# Source/target cells per generator word: applying the word maps the
# complement of omega[inverse] into omega[word].
OMEGA_WORDS = {
    GEN_ONE: "ab",
    GEN_TWO: "aB",
    "inv:" + GEN_ONE: "b",
    "inv:" + GEN_TWO: "B",
}

DEFAULT_FRACTIONS = tuple(
    Fraction(n, d)
    for n, d in (
        (31, 64),
        (15, 32),
        (7, 16),
        (13, 32),
        (3, 8),
        (5, 16),
        (1, 4),
        (3, 16),
        (1, 8),
        (1, 16),
        (1, 32),
        (1, 64),
        (1, 128),
    )
)


@dataclass(frozen=True)
class PingPongData:
    omega_one: ArcSet  # target of the first generator
    omega_two: ArcSet  # target of the second
    omega_one_inv: ArcSet
    omega_two_inv: ArcSet
    y_set: ArcSet

    def omegas(self) -> list[tuple[str, ArcSet]]:
        return [
            (GEN_ONE, self.omega_one),
            (GEN_TWO, self.omega_two),
            ("inv:" + GEN_ONE, self.omega_one_inv),
            ("inv:" + GEN_TWO, self.omega_two_inv),
        ]


@dataclass
class InclusionReport:
    ok: bool
    details: list[dict]
    witness: Optional[str] = None  # exact point as "p/q" when refused

    def to_json(self) -> dict:
        doc = {"ok": self.ok, "inclusions": self.details}
        if self.witness is not None:
            doc["witness"] = self.witness
        return doc


@dataclass(frozen=True)
class NeighborhoodCertificate:
    strategy: str  # "uniform" (one dyadic fraction) or "adaptive"
    fraction: Optional[Fraction]
    collars: dict  # name -> ArcSet (open arcs)
    margin: Fraction
    x0: Fraction

    def to_json(self) -> dict:
        return {
            "h1": GEN_ONE,
            "h2": GEN_TWO,
            "strategy": self.strategy,
            "fraction": None if self.fraction is None else str(self.fraction),
            "margin": str(self.margin),
            "x0": str(self.x0),
            "collars": {k: v.to_json() for k, v in self.collars.items()},
        }


def omega_sets(real: Realization) -> PingPongData:
    parts = {name: real.cell(w) for name, w in OMEGA_WORDS.items()}
    y = ArcSet.empty()
    for s in parts.values():
        y = y.union(s)
    data = PingPongData(
        parts[GEN_ONE],
        parts[GEN_TWO],
        parts["inv:" + GEN_ONE],
        parts["inv:" + GEN_TWO],
        y,
    )
    sets = [s for _, s in data.omegas()]
    total = sum(s.component_count() for s in sets)
    assert y.component_count() == total, "target sets must be disjoint"
    return data


def check_strict_inclusions(
    real: Realization, data: Optional[PingPongData] = None
) -> InclusionReport:
    """The four exact inclusions on the target union, each precise."""
    data = data or omega_sets(real)
    details = []
    ok = True
    witness = None
    for word, source_inv, target in (
        (GEN_ONE, data.omega_one_inv, data.omega_one),
        (GEN_TWO, data.omega_two_inv, data.omega_two),
    ):
        fwd = real.word_map(word)
        for label, mapping, src, dst in (
            (word, fwd, source_inv, target),
            (word + "^-1", fwd.inverse(), target, source_inv),
        ):
            domain = data.y_set.difference(src)
            image = domain.image(mapping)
            contained = image.issubset(dst)
            precise = all(
                image.contains_point(p) for p in dst.boundary_points()
            )
            details.append(
                {
                    "word": label,
                    "contained": contained,
                    "precise": precise,
                }
            )
            if not (contained and precise):
                ok = False
                if witness is None and not contained:
                    spill = image.difference(dst)
                    if not spill.is_empty:
                        s, e = spill.arcs[0]
                        witness = str((s + e) / 2)
    return InclusionReport(ok, details, witness)


def inclusion_chain(real: Realization) -> bool:
    """Step-by-step version of the first inclusion, every stage exact."""
    b_inv = real.letter_map("B")
    a = real.letter_map("a")
    b = real.letter_map("b")
    stage = real.cell("a").union(real.cell("B"))
    stage = stage.image(b_inv)
    if stage != real.cell("B").union(real.cell("b")):
        return False
    stage = stage.image(a)
    if stage != real.cell("aB").union(real.cell("ab")):
        return False
    stage = stage.image(b)
    if not stage.issubset(real.cell("b")):
        return False
    stage = stage.image(a)
    return stage.issubset(real.cell("ab"))


def _collars(data: PingPongData, t: Fraction) -> Optional[dict]:
    """Expand every target component into its flanking gaps by the
    fraction ``t`` of each gap's length; None when closures collide."""
    gap_arcs = data.y_set.complement().arcs
    collars = {}
    all_arcs = []
    for name, omega in data.omegas():
        arcs = []
        for s, e in omega.arcs:
            before = None
            after = None
            for gs, ge in gap_arcs:
                for off in (-1, 0, 1):
                    if ge + off == s:
                        before = ge - gs
                    if gs + off == e:
                        after = ge - gs
            assert before is not None and after is not None
            arcs.append((s - t * before, e + t * after))
        collars[name] = ArcSet.from_arcs(arcs)
        all_arcs.extend(collars[name].arcs)
    expected = sum(c.component_count() for c in collars.values())
    union = ArcSet.from_arcs(all_arcs)
    if union.component_count() != expected:
        return None  # closures touch or overlap
    return collars


def certificate_margin(
    h1: PLCircleMap,
    h2: PLCircleMap,
    collars: dict,
    x0: Optional[Fraction] = None,
) -> Optional[Fraction]:
    """Least slack of the collar inclusions under the two given maps;
    None if any inclusion fails.  Separated from the search so the same
    verification can run against perturbed maps."""
    margin: Optional[Fraction] = None
    for word, fwd in ((GEN_ONE, h1), (GEN_TWO, h2)):
        plus = collars[word]
        minus = collars["inv:" + word]
        for mapping, src, dst in ((fwd, minus, plus), (fwd.inverse(), plus, minus)):
            domain = src.complement()
            image = domain.image(mapping)
            slack = image.containment_margin(dst)
            if slack is None:
                return None
            if margin is None or slack < margin:
                margin = slack
    if x0 is not None:
        for c in collars.values():
            if c.contains_point(x0):
                return None
    return margin


def find_neighborhoods(
    real: Realization,
    data: Optional[PingPongData] = None,
    fractions: tuple[Fraction, ...] = DEFAULT_FRACTIONS,
    rounds: int = 300,
) -> Optional[NeighborhoodCertificate]:
    """Search for certificate collars; None means the budget ran out,
    not a disproof.

    Two strategies run in order.  First the uniform scan: one dyadic
    fraction of every flanking gap, widest first.  A single fraction
    only suffices when every four-letter transit between gaps passes
    the contracting collar of the start gap (multiplicity one); with
    equal gap lengths the other transits are rigid, so for larger
    systems the widths are grown adaptively instead: each collar cut is
    driven outward, monotonically and exactly, until the image of every
    complement arc fits inside its receiving collar.
    """
    data = data or omega_sets(real)
    h1 = real.word_map(GEN_ONE)
    h2 = real.word_map(GEN_TWO)
    for t in fractions:
        collars = _collars(data, t)
        if collars is None:
            continue
        margin = certificate_margin(h1, h2, collars, real.x0)
        if margin is not None and margin > 0:
            return NeighborhoodCertificate("uniform", t, collars, margin, real.x0)
    collars = _adaptive_collars(real, data, h1, h2, rounds)
    if collars is not None:
        margin = certificate_margin(h1, h2, collars, real.x0)
        if margin is not None and margin > 0:
            return NeighborhoodCertificate("adaptive", None, collars, margin, real.x0)
    return None


class _CutState:
    """Per-gap collar depths; each gap donates a left-end collar to the
    component it follows and a right-end collar to the one it precedes."""

    def __init__(self, data: PingPongData, x0: Fraction):
        from .plmap import mod1

        self.gaps = data.y_set.complement().arcs
        self.x0 = x0
        self.depth_l: list[Fraction] = []
        self.depth_r: list[Fraction] = []
        for s, e in self.gaps:
            # Start hair-thin: the iteration climbs from below, and the
            # feasible profile can pair a nearly full cut with a tiny one.
            sliver = (e - s) / 1024
            self.depth_l.append(sliver)
            self.depth_r.append(sliver)
        # Indexes: the gap whose right end is a given circle point, and
        # the gap whose left end is one.
        self.gap_ending_at = {mod1(e): gi for gi, (s, e) in enumerate(self.gaps)}
        self.gap_starting_at = {mod1(s): gi for gi, (s, e) in enumerate(self.gaps)}

    def _cap(self, gi: int, side: str) -> Fraction:
        s, e = self.gaps[gi]
        other = self.depth_r[gi] if side == "l" else self.depth_l[gi]
        cap = (e - s) - other
        for off in (0, 1):
            if s < self.x0 + off < e:
                anchor = s if side == "l" else e
                cap = min(cap, abs(self.x0 + off - anchor))
        return cap

    def deepen(self, gi: int, side: str, required: Fraction) -> bool:
        """Push a cut strictly past ``required``; False when capped.

        The step stays close to what was asked: overshooting would eat
        the partner cut's headroom for no benefit.
        """
        depths = self.depth_l if side == "l" else self.depth_r
        if depths[gi] > required:
            return True
        cap = self._cap(gi, side)
        if required >= cap:
            return False
        depths[gi] = required + (cap - required) / 16
        return True

    def gap_of_point(self, pos: Fraction) -> Optional[int]:
        from .plmap import mod1

        p = mod1(pos)
        for gi, (s, e) in enumerate(self.gaps):
            for off in (0, 1):
                if s < p + off < e:
                    return gi
        return None

    def collar_sets(self, data: PingPongData) -> Optional[dict]:
        from .plmap import mod1

        collars = {}
        for name, omega in data.omegas():
            arcs = []
            for s, e in omega.arcs:
                gl = self.gap_ending_at.get(mod1(s))
                gr = self.gap_starting_at.get(mod1(e))
                if gl is None or gr is None:
                    return None
                arcs.append((s - self.depth_r[gl], e + self.depth_l[gr]))
            collars[name] = ArcSet.from_arcs(arcs)
        total = sum(c.component_count() for c in collars.values())
        union = ArcSet.from_arcs(a for c in collars.values() for a in c.arcs)
        if union.component_count() != total:
            return None  # some closures met: a cut crossed its partner
        return collars


def _adaptive_collars(
    real: Realization,
    data: PingPongData,
    h1: PLCircleMap,
    h2: PLCircleMap,
    rounds: int,
) -> Optional[dict]:
    """Solve for collar widths via the constraint permutation.

    Every collar cut receives exactly one image tail (the constraints
    pair targets with sources bijectively), so the dependency graph is
    a permutation of the cuts and splits into short cycles.  Each cycle
    is one-dimensional: fixing the depth of one cut forces lower bounds
    all the way around, and a seed is feasible when the forced chain
    comes back strictly below the seed and under every ceiling.  Seeds
    are scanned exactly over a dyadic grid per cycle; the remaining
    freedom is used to keep each gap's two cuts inside its length.
    """
    state = _CutState(data, real.x0)
    plans = []
    for word, fwd in ((GEN_ONE, h1), (GEN_TWO, h2)):
        src_fwd = {GEN_ONE: data.omega_one_inv, GEN_TWO: data.omega_two_inv}[word]
        dst_fwd = {GEN_ONE: data.omega_one, GEN_TWO: data.omega_two}[word]
        plans.append(_arc_plan(data, state, fwd, src_fwd, dst_fwd))
        plans.append(_arc_plan(data, state, fwd.inverse(), dst_fwd, src_fwd))
    if any(plan is None for plan in plans):
        return None
    constraints = [c for plan in plans for c in plan]
    lengths = [e - s for s, e in state.gaps]
    n = len(state.gaps)

    by_src = {}
    seen_dst = set()
    for c in constraints:
        skey = (c.src_gap, c.src_side)
        dkey = (c.dst_gap, c.dst_side)
        if skey in by_src or dkey in seen_dst:
            return None  # not a permutation; out of this solver's scope
        by_src[skey] = c
        seen_dst.add(dkey)

    def ceiling(gi: int, side: str) -> Fraction:
        cap = lengths[gi] * Fraction(63, 64)
        s, e = state.gaps[gi]
        for off in (0, 1):
            if s < real.x0 + off < e:
                anchor = s if side == "l" else e
                cap = min(cap, abs(real.x0 + off - anchor) * Fraction(15, 16))
        return cap

    ceilings = {(gi, sd): ceiling(gi, sd) for gi in range(n) for sd in ("l", "r")}

    # Decompose into cycles of the permutation src -> dst (deterministic
    # start at the least unvisited cut).
    cycles = []
    unvisited = set(by_src)
    while unvisited:
        key = min(unvisited)
        cycle = []
        while key in unvisited:
            unvisited.remove(key)
            c = by_src[key]
            cycle.append(c)
            key = (c.dst_gap, c.dst_side)
        if key != (cycle[0].src_gap, cycle[0].src_side):
            return None
        cycles.append(cycle)

    def chain(cycle, seed: Fraction):
        """Forced depths around a cycle; None when a ceiling breaks or
        the wrap fails to close strictly."""
        depths = [seed]
        key0 = (cycle[0].src_gap, cycle[0].src_side)
        if seed >= ceilings[key0] or seed <= 0:
            return None
        for c in cycle:
            r = c.transfer(state, depths[-1])
            dkey = (c.dst_gap, c.dst_side)
            d = r + lengths[c.dst_gap] / 8192
            if d >= ceilings[dkey]:
                return None
            depths.append(d)
        if depths[-1] > seed:
            return None  # wrap requirement exceeds the seed
        return depths[:-1]

    grid = [Fraction(i, 128) for i in range(1, 128)]
    grid += [1 - Fraction(1, 2**j) for j in range(7, 14)]
    grid += [Fraction(1, 2**j) for j in range(7, 14)]
    grid.sort()

    options = []
    for cycle in cycles:
        feasible = []
        # Sample seeds from every rotation of the cycle: the windows sit
        # at different spots depending on which cut carries the seed.
        for rot in range(len(cycle)):
            rotated = cycle[rot:] + cycle[:rot]
            key0 = (rotated[0].src_gap, rotated[0].src_side)
            cap0 = ceilings[key0]
            keys = [(c.src_gap, c.src_side) for c in rotated]
            for frac in grid:
                got = chain(rotated, cap0 * frac)
                if got is not None:
                    feasible.append(dict(zip(keys, got)))
        if not feasible:
            return None
        options.append(feasible)

    # Allocate: each gap's cuts come from at most two cycles, so prune
    # options by arc consistency against the gap budgets, then assign
    # cycles by walking the coupling graph (neighbours share a gap, so
    # conflicts surface immediately) with cheap incremental bounds.
    budgets = [length * Fraction(31, 32) for length in lengths]

    def load_table(option):
        table: dict[int, Fraction] = {}
        for (g, _), d in option.items():
            table[g] = table.get(g, Fraction(0)) + d
        return table

    loads = [[load_table(o) for o in opts] for opts in options]
    gap_cycles: dict[int, set[int]] = {}
    for ci, opts in enumerate(options):
        for g in loads[ci][0]:
            gap_cycles.setdefault(g, set()).add(ci)

    allowed = [list(range(len(opts))) for opts in options]
    changed = True
    while changed:
        changed = False
        for gi, users in gap_cycles.items():
            for ci in sorted(users):
                if not allowed[ci]:
                    return None
                floor_rest = sum(
                    min(loads[cj][oj].get(gi, 0) for oj in allowed[cj])
                    for cj in users
                    if cj != ci and allowed[cj]
                )
                keep = [
                    oi for oi in allowed[ci]
                    if loads[ci][oi].get(gi, 0) + floor_rest < budgets[gi]
                ]
                if len(keep) != len(allowed[ci]):
                    allowed[ci] = keep
                    changed = True
                    if not keep:
                        return None

    min_load = [
        {
            g: min(loads[ci][oi].get(g, 0) for oi in allowed[ci])
            for g in loads[ci][0]
        }
        for ci in range(len(options))
    ]

    # Order: breadth-first over the coupling graph.
    neighbours: dict[int, set[int]] = {ci: set() for ci in range(len(options))}
    for users in gap_cycles.values():
        for ci in users:
            neighbours[ci] |= users - {ci}
    order = []
    seen: set[int] = set()
    for root in sorted(range(len(options)), key=lambda ci: len(allowed[ci])):
        if root in seen:
            continue
        queue = [root]
        seen.add(root)
        while queue:
            ci = queue.pop(0)
            order.append(ci)
            for cj in sorted(neighbours[ci]):
                if cj not in seen:
                    seen.add(cj)
                    queue.append(cj)

    # remaining[g] = budget minus assigned loads minus floors of the
    # still-unassigned users; an assignment is viable while it stays
    # positive everywhere it touches.
    base_remaining = {
        g: budgets[g] - sum(min_load[ci][g] for ci in users)
        for g, users in gap_cycles.items()
    }
    if any(r <= 0 for r in base_remaining.values()):
        return None
    chosen: list = [None] * len(options)

    def attempt(order_used, node_budget: int) -> bool:
        remaining = dict(base_remaining)
        budget_nodes = [node_budget]

        def assign(pos: int) -> bool:
            if pos == len(order_used):
                return True
            if budget_nodes[0] <= 0:
                return False
            ci = order_used[pos]

            # Best fit first: prefer options that eat the least of what
            # the touched gaps still have to spare.
            def squeeze(oi):
                worst = Fraction(0)
                for g, d in loads[ci][oi].items():
                    extra = d - min_load[ci][g]
                    ratio = (
                        extra / remaining[g] if remaining[g] > 0 else Fraction(10)
                    )
                    if ratio > worst:
                        worst = ratio
                return worst

            for oi in sorted(allowed[ci], key=squeeze):
                budget_nodes[0] -= 1
                if budget_nodes[0] <= 0:
                    return False
                deltas = {
                    g: loads[ci][oi][g] - min_load[ci][g]
                    for g in loads[ci][oi]
                }
                if any(remaining[g] - d <= 0 for g, d in deltas.items()):
                    continue
                for g, d in deltas.items():
                    remaining[g] -= d
                chosen[ci] = options[ci][oi]
                if assign(pos + 1):
                    return True
                chosen[ci] = None
                for g, d in deltas.items():
                    remaining[g] += d
            return False

        for i in range(len(chosen)):
            chosen[i] = None
        return assign(0)

    import random as _random

    solved = False
    for trial in range(10):
        order_used = list(order)
        if trial == 1:
            order_used.reverse()
        elif trial >= 2:
            _random.Random(trial).shuffle(order_used)
        if attempt(order_used, 500000):
            solved = True
            break
    if not solved:
        return None

    for option in chosen:
        for (gi, side), d in option.items():
            (state.depth_l if side == "l" else state.depth_r)[gi] = d
    for gi in range(n):
        if state.depth_l[gi] + state.depth_r[gi] >= lengths[gi]:
            return None
    return state.collar_sets(data)


class _TailConstraint:
    """One image tail: the map's value at a source cut must land within
    the receiving cut's depth of the target component's endpoint."""

    def __init__(self, mapping, src_gap, src_side, src_anchor, dst_gap, dst_side, dst_anchor):
        self.mapping = mapping
        self.src_gap = src_gap
        self.src_side = src_side
        self.src_anchor = src_anchor  # gap endpoint the source depth is measured from
        self.dst_gap = dst_gap
        self.dst_side = dst_side
        self.dst_anchor = dst_anchor  # target component endpoint
        self.sign = 1 if src_side == "l" else -1

    def required_at(self, state: "_CutState", profile: dict) -> Fraction:
        """Depth the receiving cut must exceed, given source cuts from
        ``profile``; negative when the image already sits inside the
        target component."""
        from .plmap import mod1

        p = self.src_anchor + self.sign * profile[(self.src_gap, self.src_side)]
        q = self.mapping.lift(p)
        if self.dst_side == "r":  # receiving gap lies left of the target
            r = mod1(self.dst_anchor - q)
        else:
            r = mod1(q - self.dst_anchor)
        if r > Fraction(1, 2):
            r -= 1
        return r

    def transfer(self, state: "_CutState", src_depth: Fraction) -> Fraction:
        """Required depth at the receiving cut for a given source depth."""
        from .plmap import mod1

        p = self.src_anchor + self.sign * src_depth
        q = self.mapping.lift(p)
        if self.dst_side == "r":
            r = mod1(self.dst_anchor - q)
        else:
            r = mod1(q - self.dst_anchor)
        if r > Fraction(1, 2):
            r -= 1
        return r

    def source_depth_for(self, image_depth: Fraction):
        """Source depth at which the image tail retreats to the given
        depth; None when the preimage falls outside the source gap."""
        from .plmap import mod1

        if self.dst_side == "r":
            q = self.dst_anchor - image_depth
        else:
            q = self.dst_anchor + image_depth
        pos = self.mapping.inverse().lift(q)
        d = mod1(self.sign * (pos - self.src_anchor))
        if d >= Fraction(1, 2):
            return None
        return d


def _arc_plan(
    data: PingPongData,
    state: "_CutState",
    mapping: PLCircleMap,
    src_class: ArcSet,
    dst_class: ArcSet,
):
    """Static description of every complement arc for one mapping: the
    two source cuts and the target component.  The target does not
    depend on the collar widths, because the material between two
    consecutive source components is fixed."""
    from .plmap import mod1

    y_comps = data.y_set.arcs
    n = len(y_comps)
    src_idx = [
        j
        for j, (s, e) in enumerate(y_comps)
        if ArcSet.of((s, e)).issubset(src_class)
    ]
    constraints = []
    for pos, j in enumerate(src_idx):
        j_next = src_idx[(pos + 1) % len(src_idx)]
        between = []
        t = (j + 1) % n
        while t != j_next:
            between.append(y_comps[t])
            t = (t + 1) % n
        if not between:
            return None
        images = ArcSet.from_arcs(
            (mapping.lift(s), mapping.lift(e)) for s, e in between
        )
        hits = [
            (ts, te)
            for ts, te in dst_class.arcs
            if not images.intersection(ArcSet.of((ts, te))).is_empty
        ]
        if len(hits) != 1 or not images.issubset(ArcSet.of(hits[0])):
            return None  # material straddles targets: no interval collar works
        ts, te = hits[0]
        gap_after = state.gap_starting_at.get(mod1(y_comps[j][1]))
        gap_before = state.gap_ending_at.get(mod1(y_comps[j_next][0]))
        dst_gap_left = state.gap_ending_at.get(mod1(ts))
        dst_gap_right = state.gap_starting_at.get(mod1(te))
        if None in (gap_after, gap_before, dst_gap_left, dst_gap_right):
            return None
        constraints.append(
            _TailConstraint(
                mapping, gap_after, "l", state.gaps[gap_after][0],
                dst_gap_left, "r", ts,
            )
        )
        constraints.append(
            _TailConstraint(
                mapping, gap_before, "r", state.gaps[gap_before][1],
                dst_gap_right, "l", te,
            )
        )
    return constraints


def orbit_freeness(real: Realization, syllables: int) -> int:
    """Number of nonempty reduced words in the two generators (syllable
    length up to the bound) verified to move the base point."""
    from .orders import FreenessError
    from .words import inverse, multiply

    gens = {
        "p1": GEN_ONE,
        "m1": inverse(GEN_ONE),
        "p2": GEN_TWO,
        "m2": inverse(GEN_TWO),
    }
    blocked = {"p1": "m1", "m1": "p1", "p2": "m2", "m2": "p2"}
    count = 0
    frontier = [(k, gens[k]) for k in gens]
    for _ in range(syllables):
        nxt = []
        for last, word in frontier:
            if real.orbit_point(word) == real.x0:
                raise FreenessError(f"word {word!r} fixes the base point")
            count += 1
            for k, g in gens.items():
                if k != blocked[last]:
                    nxt.append((k, multiply(word, g)))
        frontier = nxt
    return count
