"""Shortest-distance projections onto peripheral members and the three
axioms the projection family has to satisfy.

project() returns the full argmin set (the coarse nearest-point map is only
well defined up to bounded error, so no single point is singled out);
downstream consumers pick the id-minimal element when they need one vertex.
"""

from __future__ import annotations

from dataclasses import asdict, dataclass, field
from itertools import combinations

import numpy as np

from .electrify import SubgraphFamily
from .graphs import MetricGraph


def project(g: MetricGraph, H, x: int) -> tuple:
    """All vertices of H at minimal distance from x, as a sorted tuple."""
    hs = sorted(set(H))
    if not hs:
        raise ValueError("cannot project onto an empty vertex set")
    if not g.is_connected_subset(hs):
        raise ValueError("projection target does not induce a connected subgraph")
    return _project_fast(g, hs, x)


def _project_fast(g: MetricGraph, hs: list, x: int) -> tuple:
    row = g.distances_from(x)
    arr = np.asarray(hs)
    dist = row[arr]
    return tuple(int(v) for v in arr[dist == dist.min()])


def set_diameter(g: MetricGraph, vertices) -> int:
    """Diameter of a vertex set in the ambient graph metric."""
    vs = sorted(set(vertices))
    if not vs:
        raise ValueError("diameter of an empty set")
    arr = np.asarray(vs)
    return max(int(g.distances_from(v)[arr].max()) for v in vs)


def hausdorff_distance(g: MetricGraph, A, B) -> int:
    """Hausdorff distance between two vertex sets in the ambient metric."""
    a = sorted(set(A))
    b = np.asarray(sorted(set(B)))
    if not a or b.size == 0:
        raise ValueError("Hausdorff distance of an empty set")
    d_ab = max(int(g.distances_from(x)[b].min()) for x in a)
    a_arr = np.asarray(a)
    d_ba = max(int(g.distances_from(int(y))[a_arr].min()) for y in b)
    return max(d_ab, d_ba)


def _proj_set(g: MetricGraph, target: list, source) -> tuple:
    out = set()
    for x in source:
        out.update(_project_fast(g, target, x))
    return tuple(sorted(out))


def proj_set_diameter(g: MetricGraph, H_c, H_d) -> int:
    """Diameter of the projection of H_d onto H_c (every vertex projected)."""
    hc = sorted(set(H_c))
    hd = sorted(set(H_d))
    if hc == hd:
        raise ValueError("self-projection diameter is excluded (identical members)")
    if not hc or not hd:
        raise ValueError("family members must be nonempty")
    if not g.is_connected_subset(hc):
        raise ValueError("projection target does not induce a connected subgraph")
    return set_diameter(g, _proj_set(g, hc, hd))


def triple_distance(g: MetricGraph, fam: SubgraphFamily, a: int, b: int, c: int) -> int:
    """Diameter of the union of the projections of members b and c into member
    a; symmetric in (b, c)."""
    if len({a, b, c}) != 3:
        raise ValueError("triple distance needs three distinct member indices")
    ha = list(fam[a])
    pab = _proj_set(g, ha, fam[b])
    pac = _proj_set(g, ha, fam[c])
    return set_diameter(g, set(pab) | set(pac))


@dataclass
class AxiomReport:
    R_measured: int
    theta: float
    theta_mode: str
    triples_checked: int
    triples_exhaustive: bool
    axiom2_violations: list
    axiom3_pairs: list
    axiom3_counts: list
    axiom3_max: int
    seed: int | None
    note: str = field(
        default="auto theta is the heuristic 3 * (max projection diameter) + 3, a measured quantity"
    )

    def to_obj(self) -> dict:
        return asdict(self)


def axiom_check(
    g: MetricGraph,
    fam: SubgraphFamily,
    theta="auto",
    triple_budget: int = 5000,
    seed: int | None = 0,
    axiom3_budget: int = 200,
) -> AxiomReport:
    """Verify the projection axioms on a family.

    Axiom 1: every pairwise projection has diameter <= R (R_measured is the
    exact max over all ordered pairs).  Axiom 2: for each triple of members,
    at most one of the three triple distances exceeds theta (exhaustive when
    the triple count fits the budget, sampled otherwise).  Axiom 3: for
    sampled member pairs (a, b), the number of members c with d_c(a,b) > theta
    (always finite here; the count distribution is the signal).
    """
    fam.validate_against(g)
    m = len(fam)
    if m < 2:
        raise ValueError("axiom check needs at least two family members")
    if not isinstance(triple_budget, int) or triple_budget < 1:
        raise ValueError("triple_budget must be >= 1")

    members = [list(mem) for mem in fam.members]
    proj = {}
    for c in range(m):
        for d in range(m):
            if c != d:
                proj[c, d] = _proj_set(g, members[c], members[d])
    R_measured = max(set_diameter(g, proj[cd]) for cd in proj)

    if theta == "auto":
        theta_val = 3 * R_measured + 3
        theta_mode = "auto"
    else:
        theta_val = float(theta)
        theta_mode = "given"
        if theta_val <= 0:
            raise ValueError(f"theta must be positive, got {theta}")

    triple_cache = {}

    def d_triple(a, b, c):
        key = (a, b, c) if b < c else (a, c, b)
        val = triple_cache.get(key)
        if val is None:
            val = set_diameter(g, set(proj[a, key[1]]) | set(proj[a, key[2]]))
            triple_cache[key] = val
        return val

    total_triples = m * (m - 1) * (m - 2) // 6
    exhaustive = total_triples <= triple_budget
    if exhaustive:
        triples = list(combinations(range(m), 3))
    else:
        rng = np.random.default_rng(seed)
        triples = [
            tuple(int(v) for v in sorted(rng.choice(m, size=3, replace=False)))
            for _ in range(triple_budget)
        ]
    violations = []
    for a, b, c in triples:
        nums = (d_triple(a, b, c), d_triple(b, a, c), d_triple(c, a, b))
        if sum(1 for x in nums if x > theta_val) >= 2:
            violations.append({"triple": [a, b, c], "values": list(nums)})

    total_pairs = m * (m - 1) // 2
    if total_pairs <= axiom3_budget:
        pairs = list(combinations(range(m), 2))
    else:
        rng3 = np.random.default_rng(None if seed is None else seed + 1)
        pairs = [
            tuple(int(v) for v in sorted(rng3.choice(m, size=2, replace=False)))
            for _ in range(axiom3_budget)
        ]
    counts = []
    for a, b in pairs:
        counts.append(sum(1 for c in range(m) if c not in (a, b) and d_triple(c, a, b) > theta_val))

    return AxiomReport(
        R_measured=int(R_measured),
        theta=float(theta_val),
        theta_mode=theta_mode,
        triples_checked=len(triples),
        triples_exhaustive=exhaustive,
        axiom2_violations=violations,
        axiom3_pairs=[list(p) for p in pairs],
        axiom3_counts=counts,
        axiom3_max=max(counts) if counts else 0,
        seed=seed,
    )
