"""Independent oracles: brute-force extremal search, structural predicates,
two-part decomposition identities, and symmetric-function inequalities.

Everything here cross-checks the partition model and optimizer from a
different direction, at desk scale and in exact arithmetic.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations, permutations, product
from math import comb, factorial, perm

from .freeness import score_from_masks
from .partitions import parts_density
from .rationals import RationalLike, as_fraction, format_fraction
from .weighted import HALF, ONE, ZERO, WeightedGraph, ks_density

SEARCH_SPACE_LIMIT = 10**8
CANONICAL_MAX_N = 6  # permutation canonicalization is factorial; keep it tiny


class SearchSpaceError(RuntimeError):
    """The requested brute-force search exceeds the documented budget."""

    def __init__(self, size: int):
        super().__init__(
            f"search space of {size} states exceeds the limit of {SEARCH_SPACE_LIMIT}"
        )
        self.size = size


@dataclass(frozen=True)
class SearchConfig:
    n: int
    weight_denominator: int
    edge_alphabet: tuple[Fraction, ...]
    s: int
    t: int

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("n must be at least 1")
        if self.weight_denominator < self.n:
            raise ValueError("weight denominator must be at least n")
        if not self.edge_alphabet:
            raise ValueError("edge alphabet must be nonempty")
        for w in self.edge_alphabet:
            if w < 0 or w > 1:
                raise ValueError("edge alphabet values must lie in [0,1]")


def default_search_config(
    n: int, s: int, t: int, weight_denominator: int | None = None,
    edge_alphabet: tuple[RationalLike, ...] = (Fraction(1, 2), ONE),
) -> SearchConfig:
    """Alphabet defaults to {1/2, 1}; the {0, 1/2, 1} mode exists to test
    whether the binary-weight structure emerges from the search itself."""
    d = weight_denominator if weight_denominator is not None else 2 * n * (t - 1)
    return SearchConfig(n, d, tuple(as_fraction(w) for w in edge_alphabet), s, t)


def search_space_size(cfg: SearchConfig) -> int:
    compositions = comb(cfg.weight_denominator - 1, cfg.n - 1)
    return compositions * len(cfg.edge_alphabet) ** comb(cfg.n, 2)


@dataclass(frozen=True)
class BruteForceResult:
    best: WeightedGraph
    density: Fraction
    maximizers: tuple[WeightedGraph, ...]  # non-isomorphic optimum graphs
    searched: int  # (edge assignment, weight composition) pairs evaluated


def _compositions(total: int, parts: int):
    """Positive integer compositions of total into `parts` parts."""
    if parts == 1:
        yield (total,)
        return
    for first in range(1, total - parts + 2):
        for rest in _compositions(total - first, parts - 1):
            yield (first,) + rest


def _canonical_edges(n: int, edges: tuple[Fraction, ...]) -> tuple[Fraction, ...]:
    pair_index = {
        (u, v): i for i, (u, v) in enumerate((u, v) for u in range(n) for v in range(u + 1, n))
    }
    best = None
    for p in permutations(range(n)):
        key = tuple(
            edges[pair_index[(min(p[u], p[v]), max(p[u], p[v]))]]
            for u in range(n)
            for v in range(u + 1, n)
        )
        if best is None or key < best:
            best = key
    return best


def _canonical_graph(
    n: int, weights: tuple[Fraction, ...], edges: tuple[Fraction, ...]
) -> tuple[tuple[Fraction, ...], tuple[Fraction, ...]]:
    pair_index = {
        (u, v): i for i, (u, v) in enumerate((u, v) for u in range(n) for v in range(u + 1, n))
    }
    best = None
    for p in permutations(range(n)):
        wkey = tuple(weights[p[v]] for v in range(n))
        ekey = tuple(
            edges[pair_index[(min(p[u], p[v]), max(p[u], p[v]))]]
            for u in range(n)
            for v in range(u + 1, n)
        )
        if best is None or (wkey, ekey) < best:
            best = (wkey, ekey)
    return best


def _graph_from_tuples(
    n: int, weights: tuple[Fraction, ...], edges: tuple[Fraction, ...]
) -> WeightedGraph:
    triples = []
    i = 0
    for u in range(n):
        for v in range(u + 1, n):
            if edges[i] != 0:
                triples.append((u, v, edges[i]))
            i += 1
    return WeightedGraph.build(weights, triples)


def brute_force_extremal(cfg: SearchConfig) -> BruteForceResult:
    """Exact discrete maximizer of the K_s-density over t-free graphs.

    Vertex weights are positive multiples of 1/D summing to 1; edge weights
    come from the alphabet. Freeness depends only on the edge assignment, so
    it is checked once per assignment; edge assignments are deduplicated up
    to vertex permutation for n <= CANONICAL_MAX_N.
    """
    size = search_space_size(cfg)
    if size > SEARCH_SPACE_LIMIT:
        raise SearchSpaceError(size)
    n, d, s, t = cfg.n, cfg.weight_denominator, cfg.s, cfg.t
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    weight_tuples = [
        tuple(Fraction(k, d) for k in compo) for compo in _compositions(d, n)
    ]
    subsets = list(combinations(range(n), s)) if s <= n else []

    best_density = None
    best_canon = None
    maximizer_canons: set = set()
    searched = 0
    seen_edges: set = set()

    for edge_tuple in product(cfg.edge_alphabet, repeat=len(pairs)):
        if n <= CANONICAL_MAX_N:
            canon_e = _canonical_edges(n, edge_tuple)
            if canon_e in seen_edges:
                continue
            seen_edges.add(canon_e)
        # freeness is weight-independent
        pos_adj = [0] * n
        half_adj = [0] * n
        for (u, v), w in zip(pairs, edge_tuple):
            if w > 0:
                pos_adj[u] |= 1 << v
                pos_adj[v] |= 1 << u
            if w > HALF:
                half_adj[u] |= 1 << v
                half_adj[v] |= 1 << u
        score, _ = score_from_masks(tuple(pos_adj), tuple(half_adj))
        if score >= t:
            searched += len(weight_tuples)
            continue
        # per-subset edge products, weight independent
        edge_at = {}
        for (u, v), w in zip(pairs, edge_tuple):
            edge_at[(u, v)] = w
        subset_products = []
        for sub in subsets:
            prod = ONE
            for i in range(len(sub)):
                for j in range(i + 1, len(sub)):
                    prod *= edge_at[(sub[i], sub[j])]
                    if prod == 0:
                        break
                if prod == 0:
                    break
            if prod != 0:
                subset_products.append((sub, prod))
        sfact = factorial(s)
        for weights in weight_tuples:
            searched += 1
            density = ZERO
            for sub, prod in subset_products:
                wprod = prod
                for v in sub:
                    wprod *= weights[v]
                density += wprod
            density *= sfact
            if best_density is None or density > best_density:
                best_density = density
                if n <= CANONICAL_MAX_N:
                    best_canon = _canonical_graph(n, weights, edge_tuple)
                else:
                    best_canon = (weights, edge_tuple)
                maximizer_canons = {best_canon}
            elif density == best_density:
                canon = (
                    _canonical_graph(n, weights, edge_tuple)
                    if n <= CANONICAL_MAX_N
                    else (weights, edge_tuple)
                )
                maximizer_canons.add(canon)
                if canon < best_canon:
                    best_canon = canon

    if best_density is None:
        raise RuntimeError("no t-free graph in the search space")
    maximizers = tuple(
        _graph_from_tuples(n, w, e) for w, e in sorted(maximizer_canons)
    )
    best = _graph_from_tuples(n, best_canon[0], best_canon[1])
    return BruteForceResult(best, best_density, maximizers, searched)


# ---------------------------------------------------------------------------
# structural predicates
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class StructureReport:
    """Structural predicates A1-A5 for candidate extremal graphs.

    A1: off-diagonal edge weights all lie in {1/2, 1}.
    A2: vertices split into parts with equal weights inside a part, edge
        weight 1/2 inside and 1 across, b >= s and a + b = t - 1.
    A3: part sizes differ by at most 1.
    A4: larger parts carry per-vertex weights no larger than smaller parts.
    A5: one part of size exactly s, or >= 2 parts all of size <= s - 1.

    A3-A5 are None when no A2 partition exists.
    """

    a1: bool
    a2: bool
    a3: bool | None
    a4: bool | None
    a5: bool | None
    partition: tuple[tuple[int, ...], ...] | None
    details: tuple[str, ...]

    @property
    def all_hold(self) -> bool:
        return bool(self.a1 and self.a2 and self.a3 and self.a4 and self.a5)


def check_structure(g: WeightedGraph, s: int, t: int) -> StructureReport:
    details: list[str] = []
    n = g.n
    a1 = True
    for u in range(n):
        for v in range(u + 1, n):
            w = g.edge_weights[u][v]
            if w != HALF and w != ONE:
                a1 = False
                details.append(
                    f"A1: w({u},{v}) = {format_fraction(w)} not in {{1/2, 1}}"
                )
    partition = None
    a2 = a1  # any off-binary edge weight also rules the partition out
    if a1 and n >= 1:
        # parts = connected components of the half-weight relation
        part_id = [-1] * n
        parts: list[list[int]] = []
        for v in range(n):
            if part_id[v] != -1:
                continue
            stack = [v]
            part_id[v] = len(parts)
            members = []
            while stack:
                x = stack.pop()
                members.append(x)
                for y in range(n):
                    if y != x and part_id[y] == -1 and g.edge_weights[x][y] == HALF:
                        part_id[y] = len(parts)
                        stack.append(y)
            parts.append(sorted(members))
        for members in parts:
            for i in range(len(members)):
                for j in range(i + 1, len(members)):
                    if g.edge_weights[members[i]][members[j]] != HALF:
                        a2 = False
                        details.append(
                            f"A2: vertices {members[i]},{members[j]} share a part "
                            "but are not joined by weight 1/2"
                        )
            first_w = g.vertex_weights[members[0]]
            for v in members[1:]:
                if g.vertex_weights[v] != first_w:
                    a2 = False
                    details.append(
                        f"A2: unequal vertex weights inside part {tuple(members)}"
                    )
                    break
        a = len(parts)
        b = n
        if b < s:
            a2 = False
            details.append(f"A2: b = {b} < s = {s}")
        if a + b != t - 1:
            a2 = False
            details.append(f"A2: a + b = {a + b} != t - 1 = {t - 1}")
        if a2:
            partition = tuple(
                tuple(members)
                for members in sorted(parts, key=lambda m: (-len(m), m))
            )
    a3 = a4 = a5 = None
    if a2 and partition is not None:
        sizes = [len(p) for p in partition]
        a3 = max(sizes) - min(sizes) <= 1
        if not a3:
            details.append(f"A3: part sizes {sizes} differ by more than 1")
        a4 = True
        for pi in partition:
            for pj in partition:
                if len(pi) >= len(pj) and g.vertex_weights[pi[0]] > g.vertex_weights[pj[0]]:
                    a4 = False
                    details.append(
                        "A4: a larger part carries a larger per-vertex weight"
                    )
                    break
            if not a4:
                break
        a = len(partition)
        a5 = (a == 1 and sizes[0] == s) or (a >= 2 and max(sizes) <= s - 1)
        if not a5:
            details.append(f"A5: sizes {sizes} violate the size alternative for s={s}")
    elif not a2:
        details.append("A3-A5 not evaluated: no A2 partition")
    return StructureReport(a1, a2, a3, a4, a5, partition, tuple(details))


# ---------------------------------------------------------------------------
# two-part decomposition machinery
# ---------------------------------------------------------------------------


def two_part_graph(p: RationalLike, P: int, q: RationalLike, Q: int) -> WeightedGraph:
    """Two parts of sizes P and Q with per-vertex weights p and q."""
    pf, qf = as_fraction(p), as_fraction(q)
    if pf * P + qf * Q != ONE:
        raise ValueError("pP + qQ must equal 1")
    weights = [pf] * P + [qf] * Q
    n = P + Q
    mat = tuple(
        tuple(
            ZERO
            if u == v
            else (HALF if (u < P) == (v < P) else ONE)
            for v in range(n)
        )
        for u in range(n)
    )
    return WeightedGraph(tuple(weights), mat)


def two_part_basis(
    m: int, r: int, p: RationalLike, P: int, q: RationalLike, Q: int
) -> Fraction:
    """Basis quantity for two-part K_m-densities: ordered K_m copies with r
    labelled vertices in each part.

    Equals sum over x + y = m, x,y >= r of
    C(P,x) p^x C(Q,y) q^y * x!y! / ((x-r)! (y-r)!).
    """
    if r < 0 or 2 * r > m:
        raise ValueError("need 0 <= r <= m/2")
    if P < 1 or Q < 1:
        raise ValueError("P and Q must be positive")
    pf, qf = as_fraction(p), as_fraction(q)
    total = ZERO
    for x in range(r, m - r + 1):
        y = m - x
        cx = comb(P, x)
        cy = comb(Q, y)
        if cx == 0 or cy == 0:
            continue
        total += cx * pf**x * cy * qf**y * perm(x, r) * perm(y, r)
    return total


def basis_coefficients(m: int) -> list[Fraction]:
    """Positive coefficients expressing the two-part K_m-density in the basis.

    Solved by forward substitution from
    (m! / 2^C(m,2)) * 2^(r(m-r)) = sum_{i<=r} r!(m-r)!/((r-i)!(m-r-i)!) c_i.
    """
    if m < 1:
        raise ValueError("m must be at least 1")
    target = Fraction(factorial(m), 2 ** comb(m, 2))
    cs: list[Fraction] = []
    for r in range(m // 2 + 1):
        lhs = target * 2 ** (r * (m - r))
        acc = ZERO
        for i in range(r):
            acc += Fraction(factorial(r) * factorial(m - r), factorial(r - i) * factorial(m - r - i)) * cs[i]
        diag = Fraction(factorial(r) * factorial(m - r), factorial(m - 2 * r))
        cs.append((lhs - acc) / diag)
    return cs


def verify_two_part_decomposition(
    m: int, p: RationalLike, P: int, q: RationalLike, Q: int
) -> bool:
    """Exact identity: two-part K_m-density == sum_r c_r * basis term r."""
    pf, qf = as_fraction(p), as_fraction(q)
    if pf * P + qf * Q != ONE:
        raise ValueError("pP + qQ must equal 1")
    lhs = parts_density([(P, pf), (Q, qf)], m)
    cs = basis_coefficients(m)
    rhs = sum(
        (c * two_part_basis(m, r, pf, P, qf, Q) for r, c in enumerate(cs)), ZERO
    )
    return lhs == rhs


def maclaurin_gap(xs: list[RationalLike], k: int) -> Fraction:
    """C(n,k) * mean^k minus the k-th elementary symmetric polynomial.

    Nonnegative for positive entries, zero exactly on constant vectors.
    """
    vals = [as_fraction(x) for x in xs]
    n = len(vals)
    if not 1 <= k <= n:
        raise ValueError("need 1 <= k <= len(xs)")
    for x in vals:
        if x <= 0:
            raise ValueError("entries must be positive")
    mean = sum(vals, ZERO) / n
    # elementary symmetric polynomial via prod (1 + x_i z), truncated at z^k
    coeffs = [ONE] + [ZERO] * k
    for x in vals:
        for j in range(min(k, len(coeffs) - 1), 0, -1):
            coeffs[j] += coeffs[j - 1] * x
    return comb(n, k) * mean**k - coeffs[k]


# ---------------------------------------------------------------------------
# strict density-improvement comparisons for unbalanced two-part graphs
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class LemmaComparison:
    m: int
    base: Fraction
    improved: Fraction

    @property
    def strict(self) -> bool:
        return self.base < self.improved


@dataclass(frozen=True)
class LemmaSuiteReport:
    hypothesis: str | None  # unbalanced-heavy | unbalanced-light | balanced-unequal
    transformation: str | None  # edge-flip | part-rebalance | weight-average
    comparisons: tuple[LemmaComparison, ...]

    @property
    def applicable(self) -> bool:
        return self.hypothesis is not None

    @property
    def all_strict(self) -> bool:
        return self.applicable and all(c.strict for c in self.comparisons)


def _flip_heavy_vertex(g: WeightedGraph, u: int) -> WeightedGraph:
    """Swap u's edge weights between 1/2 and 1 (w -> 3/2 - w)."""
    n = g.n
    mat = [list(row) for row in g.edge_weights]
    for v in range(n):
        if v != u:
            w = Fraction(3, 2) - mat[u][v]
            mat[u][v] = mat[v][u] = w
    return WeightedGraph(g.vertex_weights, tuple(tuple(row) for row in mat))


def _average_cross_pair(g: WeightedGraph, u: int, v: int) -> WeightedGraph:
    """Replace the weights of u and v by their average; edges unchanged."""
    avg = (g.vertex_weights[u] + g.vertex_weights[v]) / 2
    weights = list(g.vertex_weights)
    weights[u] = avg
    weights[v] = avg
    return WeightedGraph(tuple(weights), g.edge_weights)


def lemma_inequality_suite(
    P: int, Q: int, p: RationalLike, q: RationalLike, m_max: int
) -> LemmaSuiteReport:
    """Check the strict density improvements for an unbalanced or
    unevenly-weighted two-part graph, in exact arithmetic.

    Hypotheses (at most one applies):
      unbalanced-heavy:  P >= Q+1 and (P-1)p > Qq
      unbalanced-light:  P >= Q+2 and (P-1)p <= Qq
      balanced-unequal:  P == Q and p != q

    Constructions: the heavy case flips one heavy vertex's edges between 1/2
    and 1 when P >= Q+2. When P = Q+1 the flip leaves the half-edge count,
    and hence the full-vertex density, unchanged, so that case instead
    averages one vertex weight from each part (the same move as the balanced
    case); the averaged pair strictly gains at every order because the
    joint-weight product rises while no edge changes. The light case moves a
    vertex between parts, rescaling class weights so class totals persist.
    The improved graph must have strictly larger K_m-density for every
    2 <= m <= min(m_max, P+Q) whenever a hypothesis holds.
    """
    pf, qf = as_fraction(p), as_fraction(q)
    if pf * P + qf * Q != ONE:
        raise ValueError("pP + qQ must equal 1")
    base = two_part_graph(pf, P, qf, Q)
    improved: WeightedGraph | None = None
    hypothesis: str | None = None
    transformation: str | None = None
    if P >= Q + 1 and (P - 1) * pf > Q * qf:
        hypothesis = "unbalanced-heavy"
        if P >= Q + 2:
            transformation = "edge-flip"
            improved = _flip_heavy_vertex(base, 0)
        else:
            transformation = "weight-average"
            improved = _average_cross_pair(base, 0, P)
    elif P >= Q + 2 and (P - 1) * pf <= Q * qf:
        hypothesis = "unbalanced-light"
        transformation = "part-rebalance"
        p2 = P * pf / (P - 1)
        q2 = Q * qf / (Q + 1)
        improved = two_part_graph(p2, P - 1, q2, Q + 1)
    elif P == Q and pf != qf:
        hypothesis = "balanced-unequal"
        transformation = "weight-average"
        improved = _average_cross_pair(base, 0, P)
    if improved is None:
        return LemmaSuiteReport(None, None, ())
    comparisons = tuple(
        LemmaComparison(m, ks_density(base, m), ks_density(improved, m))
        for m in range(2, min(m_max, P + Q) + 1)
    )
    return LemmaSuiteReport(hypothesis, transformation, comparisons)
