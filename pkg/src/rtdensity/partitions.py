"""Balanced-partition candidate graphs and their closed-form clique density.

A (b, a)-partition graph has b vertices split into a nonempty parts with
near-equal sizes; edges weigh 1/2 inside a part and 1 across parts, and
vertices of equal-size parts share a weight. With a + b = t - 1 such graphs
never contain a weighted t-clique, which makes them the natural candidates
when maximizing K_s-density under that constraint.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb, factorial
from typing import Mapping, Sequence

from .rationals import RationalLike, as_fraction, format_fraction
from .weighted import HALF, ONE, ZERO, WeightedGraph


@dataclass(frozen=True)
class PartitionSpec:
    """Skeleton of a (b, a)-partition candidate for given (s, t)."""

    s: int
    t: int
    b: int
    a: int
    part_sizes: tuple[int, ...]  # descending

    def size_classes(self) -> tuple[tuple[int, int], ...]:
        """Distinct part sizes with multiplicities, largest size first."""
        out: list[tuple[int, int]] = []
        for size in self.part_sizes:
            if out and out[-1][0] == size:
                out[-1] = (size, out[-1][1] + 1)
            else:
                out.append((size, 1))
        return tuple(out)


@dataclass(frozen=True)
class WeightAssignment:
    """Per-vertex weight for each part-size class."""

    class_weight: tuple[tuple[int, Fraction], ...]  # (part size, weight), size desc

    @classmethod
    def from_mapping(cls, mapping: Mapping[int, RationalLike]) -> "WeightAssignment":
        items = sorted(((int(k), as_fraction(v)) for k, v in mapping.items()), reverse=True)
        return cls(tuple(items))

    def weight_for(self, size: int) -> Fraction:
        for k, w in self.class_weight:
            if k == size:
                return w
        raise KeyError(f"no weight for part size {size}")

    def as_dict(self) -> dict[int, Fraction]:
        return dict(self.class_weight)


def balanced_sizes(b: int, a: int) -> tuple[int, ...]:
    """b split into a parts whose sizes differ by at most one, descending."""
    big, rem = divmod(b, a)
    return tuple([big + 1] * rem + [big] * (a - rem))


def enumerate_specs(s: int, t: int) -> list[PartitionSpec]:
    """All admissible (b, a) skeletons for (s, t), ordered by increasing b.

    b runs from max(s, ceil((t-1)/2)) to t-2 with a = t-1-b. For s >= 3 the
    size filter applies: either a single part of size exactly s, or every
    part of size at most s-1. For s = 2 that filter is dropped (the s = 2
    extremal structure uses a size-2 part even when a = 1 would forbid it).
    """
    if s < 2:
        raise ValueError("s must be at least 2")
    if t < s + 2:
        raise ValueError(f"t must be at least s+2 = {s + 2}")
    specs: list[PartitionSpec] = []
    b_min = max(s, t // 2)  # t//2 == ceil((t-1)/2)
    for b in range(b_min, t - 1):
        a = t - 1 - b
        sizes = balanced_sizes(b, a)
        if s >= 3:
            if a == 1 and b != s:
                continue
            if a >= 2 and sizes[0] > s - 1:
                continue
        specs.append(PartitionSpec(s, t, b, a, sizes))
    return specs


def uniform_assignment(spec: PartitionSpec) -> WeightAssignment:
    w = Fraction(1, spec.b)
    return WeightAssignment(tuple((size, w) for size, _ in spec.size_classes()))


def check_assignment(spec: PartitionSpec, w: WeightAssignment) -> None:
    total = ZERO
    for size, count in spec.size_classes():
        weight = w.weight_for(size)
        if weight <= 0:
            raise ValueError(f"class weight for size {size} must be positive")
        total += count * size * weight
    if total != ONE:
        raise ValueError(
            f"weights sum to {format_fraction(total)} over the partition, expected 1"
        )


def realize_spec(spec: PartitionSpec, w: WeightAssignment) -> WeightedGraph:
    """Concrete weighted graph for a spec: 1/2 inside parts, 1 across."""
    check_assignment(spec, w)
    weights: list[Fraction] = []
    part_of: list[int] = []
    for idx, size in enumerate(spec.part_sizes):
        cw = w.weight_for(size)
        weights.extend([cw] * size)
        part_of.extend([idx] * size)
    n = spec.b
    mat = tuple(
        tuple(
            ZERO if u == v else (HALF if part_of[u] == part_of[v] else ONE)
            for v in range(n)
        )
        for u in range(n)
    )
    return WeightedGraph(tuple(weights), mat)


def parts_density(parts: Sequence[tuple[int, Fraction]], s: int) -> Fraction:
    """Exact K_s-density of a parts graph (1/2 inside parts, 1 across).

    parts lists (size, per-vertex weight) for each part. Computed as
    s! * [z^s] of the product over parts of
    sum_m C(size, m) * weight^m * 2^(-C(m,2)) * z^m.
    """
    if s < 0:
        raise ValueError("s must be nonnegative")
    if s == 0:
        return ONE
    coeffs = [ONE] + [ZERO] * s
    for size, weight in parts:
        wfrac = as_fraction(weight)
        top = min(size, s)
        poly = [
            comb(size, m) * wfrac**m / 2 ** comb(m, 2) for m in range(top + 1)
        ]
        nxt = [ZERO] * (s + 1)
        for j, c in enumerate(coeffs):
            if c == 0:
                continue
            for m, pm in enumerate(poly):
                if j + m > s:
                    break
                nxt[j + m] += c * pm
        coeffs = nxt
    return factorial(s) * coeffs[s]


def spec_parts(spec: PartitionSpec, w: WeightAssignment) -> list[tuple[int, Fraction]]:
    return [(size, w.weight_for(size)) for size in spec.part_sizes]


def spec_density(spec: PartitionSpec, w: WeightAssignment, s: int) -> Fraction:
    """Closed-form K_s-density of the realized spec; equals the graph density."""
    check_assignment(spec, w)
    return parts_density(spec_parts(spec, w), s)


def complete_balanced(r: int) -> WeightedGraph:
    """r vertices of weight 1/r, every edge weight 1."""
    if r < 1:
        raise ValueError("r must be at least 1")
    w = Fraction(1, r)
    mat = tuple(
        tuple(ZERO if u == v else ONE for v in range(r)) for u in range(r)
    )
    return WeightedGraph(tuple([w] * r), mat)


def spec_to_dict(spec: PartitionSpec) -> dict:
    return {
        "s": spec.s,
        "t": spec.t,
        "b": spec.b,
        "a": spec.a,
        "part_sizes": list(spec.part_sizes),
    }


def spec_from_dict(data: Mapping) -> PartitionSpec:
    sizes = tuple(int(x) for x in data["part_sizes"])
    spec = PartitionSpec(
        int(data["s"]), int(data["t"]), int(data["b"]), int(data["a"]), sizes
    )
    if sum(sizes) != spec.b or len(sizes) != spec.a:
        raise ValueError("part_sizes inconsistent with (b, a)")
    return spec


def assignment_to_dict(w: WeightAssignment) -> dict:
    return {str(size): format_fraction(weight) for size, weight in w.class_weight}


def assignment_from_dict(data: Mapping[str, RationalLike]) -> WeightAssignment:
    return WeightAssignment.from_mapping({int(k): as_fraction(v) for k, v in data.items()})
