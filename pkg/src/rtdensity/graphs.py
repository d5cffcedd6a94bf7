"""Simple graphs on 0..n-1 with bitmask adjacency, plus exact clique search.

All searches are deterministic: vertices are explored in index order, so
witnesses are reproducible across runs.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence


def bits(mask: int) -> Iterator[int]:
    """Yield set bit positions of mask in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


@dataclass(frozen=True)
class SimpleGraph:
    """Undirected simple graph; adj[v] is the neighbour bitmask of v."""

    n: int
    adj: tuple[int, ...]

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "SimpleGraph":
        rows = [0] * n
        for u, v in edges:
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u},{v}) out of range for n={n}")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return cls(n, tuple(rows))

    @classmethod
    def complete(cls, n: int) -> "SimpleGraph":
        full = (1 << n) - 1
        return cls(n, tuple((full ^ (1 << v)) for v in range(n)))

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in bits(self.adj[u]) if u < v]

    def edge_count(self) -> int:
        return sum(row.bit_count() for row in self.adj) // 2

    def complement(self) -> "SimpleGraph":
        full = (1 << self.n) - 1
        return SimpleGraph(
            self.n, tuple((full ^ self.adj[v]) & ~(1 << v) for v in range(self.n))
        )


def max_clique(
    adj: Sequence[int],
    candidates: int | None = None,
    stop_at: int | None = None,
) -> tuple[int, int]:
    """Exact maximum clique within a candidate mask: (size, vertex mask).

    Branch and bound with a greedy colouring bound. If stop_at is given the
    search may return early once a clique of that size has been found
    (useful as a pure existence test). Exponential worst case; intended for
    the desk-scale instances this engine works with.
    """
    n = len(adj)
    if candidates is None:
        candidates = (1 << n) - 1
    best_size = 0
    best_mask = 0

    def color_order(p: int) -> list[tuple[int, int]]:
        # Greedy colouring; a clique inside p has at most max-colour vertices.
        order: list[tuple[int, int]] = []
        color = 0
        rest = p
        while rest:
            color += 1
            avail = rest
            while avail:
                low = avail & -avail
                v = low.bit_length() - 1
                avail &= ~adj[v] & ~low
                rest ^= low
                order.append((v, color))
        return order

    def expand(r_mask: int, r_size: int, p: int) -> None:
        nonlocal best_size, best_mask
        if p == 0:
            if r_size > best_size:
                best_size, best_mask = r_size, r_mask
            return
        order = color_order(p)
        for v, bound in reversed(order):
            if stop_at is not None and best_size >= stop_at:
                return
            if r_size + bound <= best_size:
                return
            vbit = 1 << v
            expand(r_mask | vbit, r_size + 1, p & adj[v])
            p &= ~vbit

    expand(0, 0, candidates)
    return best_size, best_mask


def clique_number(g: SimpleGraph) -> int:
    """Exact clique number; 0 on the empty vertex set.

    Practical up to n of about 64 at full density; much larger sparse
    graphs are fine because of the colouring bound.
    """
    if g.n == 0:
        return 0
    return max_clique(g.adj)[0]


def has_clique(adj: Sequence[int], k: int, candidates: int | None = None) -> bool:
    """Exact test for a clique of size k inside the candidate mask."""
    if k <= 0:
        return True
    size, _ = max_clique(adj, candidates, stop_at=k)
    return size >= k


def maximal_cliques(adj: Sequence[int], candidates: int | None = None) -> list[int]:
    """All maximal cliques (as vertex masks), Bron-Kerbosch with pivoting.

    Output order is deterministic (depth-first, ascending vertex index).
    """
    n = len(adj)
    if candidates is None:
        candidates = (1 << n) - 1
    out: list[int] = []

    def bk(r: int, p: int, x: int) -> None:
        if p == 0 and x == 0:
            out.append(r)
            return
        # pivot = vertex of p|x with most neighbours in p (smallest index wins ties)
        pivot = -1
        pivot_deg = -1
        for v in bits(p | x):
            deg = (p & adj[v]).bit_count()
            if deg > pivot_deg:
                pivot, pivot_deg = v, deg
        for v in bits(p & ~adj[pivot]):
            vbit = 1 << v
            bk(r | vbit, p & adj[v], x & adj[v])
            p &= ~vbit
            x |= vbit

    bk(0, candidates, 0)
    return out


def greedy_independent_set(g: SimpleGraph) -> tuple[int, ...]:
    """Greedy independent set (min-remaining-degree rule); a lower-bound witness."""
    alive = (1 << g.n) - 1
    chosen: list[int] = []
    while alive:
        best_v = -1
        best_deg = g.n + 1
        for v in bits(alive):
            deg = (g.adj[v] & alive).bit_count()
            if deg < best_deg:
                best_v, best_deg = v, deg
        chosen.append(best_v)
        alive &= ~(1 << best_v)
        alive &= ~g.adj[best_v]
    return tuple(sorted(chosen))


def greedy_clique_cover(g: SimpleGraph) -> int:
    """Greedy partition of the vertices into cliques; its size bounds alpha above."""
    cliques: list[tuple[int, int]] = []  # (mask, common neighbourhood mask)
    for v in range(g.n):
        placed = False
        for i, (mask, common) in enumerate(cliques):
            if common >> v & 1:
                cliques[i] = (mask | 1 << v, common & g.adj[v])
                placed = True
                break
        if not placed:
            cliques.append((1 << v, g.adj[v]))
    return len(cliques)


def independence_number(g: SimpleGraph) -> int:
    """Exact independence number via the complement's clique number."""
    return clique_number(g.complement())
