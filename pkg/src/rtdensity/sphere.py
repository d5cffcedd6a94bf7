"""Geometric realization: sphere-point graphs and the weighted-to-simple
graph construction.

A weighted graph with edge weights in {0, 1/2, 1} turns into a concrete
simple graph: parts of points on a unit sphere, complete bipartite joins for
weight-1 pairs, empty joins for weight 0, and randomly rotated sphere-cap
joins for weight-1/2 pairs. Near-antipodal points are joined inside a part.
The construction preserves weighted t-clique freeness as K_t-freeness, which
the stats report checks exactly at desk scale.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .graphs import (
    SimpleGraph,
    greedy_clique_cover,
    greedy_independent_set,
    has_clique,
    max_clique,
)
from .weighted import HALF, ONE, WeightedGraph, round_edges_up, validate

GUARD_BAND = 1e-9  # squared-distance slack around thresholds; inside it we resample
_MAX_RESAMPLE = 100


@dataclass(frozen=True)
class BEConfig:
    """Parameters of the sphere construction; mu = epsilon / sqrt(h)."""

    epsilon: float
    h: int
    seed: int = 0

    def __post_init__(self):
        if not 0 < self.epsilon < 1:
            raise ValueError("epsilon must lie in (0, 1)")
        if self.h < 16:
            raise ValueError("h must be at least 16")

    @property
    def mu(self) -> float:
        return self.epsilon / math.sqrt(self.h)


def _rng(seed: int, *key: int) -> np.random.Generator:
    return np.random.default_rng(np.random.SeedSequence([seed, *key]))


def _unit_rows(rng: np.random.Generator, n: int, h: int) -> np.ndarray:
    pts = rng.standard_normal((n, h))
    norms = np.linalg.norm(pts, axis=1)
    while np.any(norms < 1e-12):
        bad = norms < 1e-12
        pts[bad] = rng.standard_normal((int(bad.sum()), h))
        norms = np.linalg.norm(pts, axis=1)
    return pts / norms[:, None]


def sample_sphere(n: int, h: int, seed: int) -> np.ndarray:
    """n independent uniform points on the unit sphere in R^h, (n, h) array.

    Deterministic per seed.
    """
    if n < 1:
        raise ValueError("n must be at least 1")
    if h < 2:
        raise ValueError("h must be at least 2")
    return _unit_rows(_rng(seed), n, h)


def random_rotation(h: int, rng: np.random.Generator) -> np.ndarray:
    """Uniformly random rotation (orthogonal, determinant +1)."""
    m = rng.standard_normal((h, h))
    q, r = np.linalg.qr(m)
    q = q * np.sign(np.diag(r))
    if np.linalg.det(q) < 0:
        q[:, 0] = -q[:, 0]
    return q


def _sq_dists(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    na = np.sum(a * a, axis=1)
    nb = np.sum(b * b, axis=1)
    return np.maximum(na[:, None] + nb[None, :] - 2.0 * (a @ b.T), 0.0)


def be_graph(x: np.ndarray, y: np.ndarray, mu: float) -> SimpleGraph:
    """Sphere-cap graph on X then Y: cross pairs join below distance
    sqrt(2) - mu, same-side pairs join above distance 2 - mu (strictly)."""
    if x.ndim != 2 or y.ndim != 2 or x.shape[1] != y.shape[1]:
        raise ValueError("point sets must share one ambient dimension")
    nx, ny = len(x), len(y)
    cross_thr = (math.sqrt(2.0) - mu) ** 2
    near_thr = (2.0 - mu) ** 2
    rows = [0] * (nx + ny)

    def add(u, v):
        rows[u] |= 1 << v
        rows[v] |= 1 << u

    dxx = _sq_dists(x, x)
    for i in range(nx):
        for j in range(i + 1, nx):
            if dxx[i, j] > near_thr:
                add(i, j)
    dyy = _sq_dists(y, y)
    for i in range(ny):
        for j in range(i + 1, ny):
            if dyy[i, j] > near_thr:
                add(nx + i, nx + j)
    dxy = _sq_dists(x, y)
    for i in range(nx):
        for j in range(ny):
            if dxy[i, j] < cross_thr:
                add(i, nx + j)
    return SimpleGraph(nx + ny, tuple(rows))


def _guard_hit(d2: np.ndarray, thr2: float, upper_only: bool = False) -> bool:
    mask = np.abs(d2 - thr2) <= GUARD_BAND
    if upper_only:
        mask = np.triu(mask, 1)
    return bool(np.any(mask))


@dataclass(frozen=True)
class RealizedGraph:
    part_sizes: tuple[int, ...]
    offsets: tuple[int, ...]
    graph: SimpleGraph
    provenance: tuple[tuple[str, ...], ...]  # per-pair rule, diag = within-part
    config: BEConfig
    source: WeightedGraph  # edge weights already rounded up to halves

    @property
    def n(self) -> int:
        return self.graph.n

    def parts(self) -> list[range]:
        return [
            range(off, off + size)
            for off, size in zip(self.offsets, self.part_sizes)
        ]

    def to_edge_text(self) -> str:
        sizes = ",".join(str(x) for x in self.part_sizes)
        lines = [f"{self.n} parts=[{sizes}]"]
        lines += [f"{u} {v}" for u, v in self.graph.edges()]
        return "\n".join(lines) + "\n"


def _part_sizes(weights, n_total: int) -> list[int]:
    # exact floors, remainder to the largest fractional parts (ties by index)
    targets = [w * n_total for w in weights]
    sizes = [math.floor(x) for x in targets]
    remainder = n_total - sum(sizes)
    order = sorted(
        range(len(weights)), key=lambda i: (sizes[i] - targets[i], i)
    )
    for k in range(remainder):
        sizes[order[k % len(sizes)]] += 1
    return sizes


def realize(r: WeightedGraph, n_total: int, cfg: BEConfig) -> RealizedGraph:
    """Concrete simple graph on n_total vertices realizing the weighted graph.

    Edge weights are first rounded up to the next multiple of 1/2 (which
    preserves weighted-clique freeness). Each part gets at least
    floor(weight * N) vertices; every half-weight pair uses an independent
    uniformly random rotation, re-sampled if any squared distance falls
    within the guard band of a threshold, so edge membership is stable.
    """
    report = validate(r)
    if not report.ok:
        raise ValueError("invalid weighted graph: " + "; ".join(report.errors))
    if n_total < r.n:
        raise ValueError("N must be at least the number of parts")
    rounded = round_edges_up(r)
    nparts = rounded.n
    sizes = _part_sizes(rounded.vertex_weights, n_total)
    offsets = []
    acc = 0
    for sz in sizes:
        offsets.append(acc)
        acc += sz
    mu = cfg.mu
    near_thr = (2.0 - mu) ** 2
    cross_thr = (math.sqrt(2.0) - mu) ** 2

    points: list[np.ndarray] = []
    for i, sz in enumerate(sizes):
        gen = _rng(cfg.seed, 0, i)
        pts = np.zeros((0, cfg.h))
        for _ in range(_MAX_RESAMPLE):
            pts = _unit_rows(gen, max(sz, 1), cfg.h)[:sz]
            if sz < 2 or not _guard_hit(_sq_dists(pts, pts), near_thr, upper_only=True):
                break
        else:
            raise RuntimeError("could not sample part points outside the guard band")
        points.append(pts)

    rows = [0] * n_total

    def add(u, v):
        rows[u] |= 1 << v
        rows[v] |= 1 << u

    provenance = [["" for _ in range(nparts)] for _ in range(nparts)]
    for i in range(nparts):
        provenance[i][i] = "within-part"
        pts = points[i]
        if sizes[i] >= 2:
            d2 = _sq_dists(pts, pts)
            for a in range(sizes[i]):
                for b in range(a + 1, sizes[i]):
                    if d2[a, b] > near_thr:
                        add(offsets[i] + a, offsets[i] + b)

    for i in range(nparts):
        for j in range(i + 1, nparts):
            w = rounded.edge_weights[i][j]
            if w == ONE:
                provenance[i][j] = provenance[j][i] = "complete"
                for a in range(sizes[i]):
                    for b in range(sizes[j]):
                        add(offsets[i] + a, offsets[j] + b)
            elif w == HALF:
                provenance[i][j] = provenance[j][i] = "BE-rotated"
                if sizes[i] == 0 or sizes[j] == 0:
                    continue
                gen = _rng(cfg.seed, 1, i, j)
                for _ in range(_MAX_RESAMPLE):
                    rot = random_rotation(cfg.h, gen)
                    d2 = _sq_dists(points[i] @ rot.T, points[j])
                    if not _guard_hit(d2, cross_thr):
                        break
                else:
                    raise RuntimeError("could not rotate outside the guard band")
                for a in range(sizes[i]):
                    for b in range(sizes[j]):
                        if d2[a, b] < cross_thr:
                            add(offsets[i] + a, offsets[j] + b)
            else:
                provenance[i][j] = provenance[j][i] = "empty"

    return RealizedGraph(
        tuple(sizes),
        tuple(offsets),
        SimpleGraph(n_total, tuple(rows)),
        tuple(tuple(row) for row in provenance),
        cfg,
        rounded,
    )


def graph_stats(
    rg: RealizedGraph,
    s: int,
    t: int,
    clique_budget: int = 100,
    samples: int = 20000,
    seed: int = 0,
) -> dict:
    """Measured properties of a realized graph.

    Clique and independence numbers are exact below the vertex budget and
    greedy bounds above it (flagged). The K_t test is always exact. The
    K_s-density estimate is a seeded sample over distinct vertex tuples.
    """
    g = rg.graph
    n = g.n
    exact = n <= clique_budget
    if exact:
        omega, _ = max_clique(g.adj)
    else:
        omega = _greedy_clique(g)
    contains_kt = has_clique(g.adj, t)
    ind_lower = len(greedy_independent_set(g))
    ind_upper = greedy_clique_cover(g)
    alpha_exact = None
    if exact:
        alpha_exact, _ = max_clique(g.complement().adj)

    pair_rows = []
    nparts = len(rg.part_sizes)
    for i in range(nparts):
        for j in range(i, nparts):
            edges = _count_between(g, rg, i, j)
            if i == j:
                possible = rg.part_sizes[i] * (rg.part_sizes[i] - 1) // 2
            else:
                possible = rg.part_sizes[i] * rg.part_sizes[j]
            pair_rows.append(
                {
                    "i": i,
                    "j": j,
                    "rule": rg.provenance[i][j],
                    "edges": edges,
                    "possible": possible,
                    "density": edges / possible if possible else 0.0,
                }
            )

    rng = np.random.default_rng(np.random.SeedSequence([seed, 2]))
    hits = 0
    if s <= n and samples > 0:
        for _ in range(samples):
            chosen = rng.choice(n, size=s, replace=False)
            ok = True
            for a in range(s):
                for b in range(a + 1, s):
                    if not g.has_edge(int(chosen[a]), int(chosen[b])):
                        ok = False
                        break
                if not ok:
                    break
            hits += ok
    return {
        "n": n,
        "part_sizes": list(rg.part_sizes),
        "omega": {"value": omega, "exact": exact},
        "contains_kt": {"t": t, "value": bool(contains_kt), "exact": True},
        "alpha": {
            "exact": alpha_exact,
            "greedy_lower": ind_lower,
            "clique_cover_upper": ind_upper,
        },
        "pair_densities": pair_rows,
        "ks_estimate": {
            "s": s,
            "samples": samples,
            "estimate": hits / samples if samples else 0.0,
        },
    }


def _greedy_clique(g: SimpleGraph) -> int:
    best = 0
    order = sorted(range(g.n), key=lambda v: -g.adj[v].bit_count())
    for start in order[: min(g.n, 40)]:
        mask = 1 << start
        cand = g.adj[start]
        while cand:
            pick = -1
            pick_deg = -1
            m = cand
            while m:
                low = m & -m
                v = low.bit_length() - 1
                m ^= low
                deg = (g.adj[v] & cand).bit_count()
                if deg > pick_deg:
                    pick, pick_deg = v, deg
            mask |= 1 << pick
            cand &= g.adj[pick]
        best = max(best, mask.bit_count())
    return best


def _count_between(g: SimpleGraph, rg: RealizedGraph, i: int, j: int) -> int:
    pi = list(rg.parts()[i])
    pj = list(rg.parts()[j])
    if i == j:
        return sum(
            1
            for a_idx, a in enumerate(pi)
            for b in pi[a_idx + 1 :]
            if g.has_edge(a, b)
        )
    mask_j = 0
    for b in pj:
        mask_j |= 1 << b
    return sum((g.adj[a] & mask_j).bit_count() for a in pi)
