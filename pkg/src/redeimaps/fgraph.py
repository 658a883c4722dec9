"""Functional graphs of self-maps of finite sets and their canonical forms.

Each component of a functional graph is a cycle with rooted trees hanging off
its nodes.  Trees are encoded AHU-style (a node is ``(`` + sorted child codes
+ ``)``) and each cycle by the lexicographically least rotation of its node
codes, so two graphs are isomorphic iff their canonical forms are equal.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Callable, Sequence

from .ffield import Extension

CanonicalForm = tuple  # sorted tuple of (cycle length, rotation of tree codes)


@dataclass(frozen=True)
class FunctionalGraph:
    succ: tuple[int, ...]
    labels: tuple[str, ...] | None = None

    def __post_init__(self):
        n = len(self.succ)
        if any(not 0 <= s < n for s in self.succ):
            raise ValueError("successor index out of range")
        if self.labels is not None and len(self.labels) != n:
            raise ValueError("one label per node required")

    @property
    def size(self) -> int:
        return len(self.succ)

    def relabel(self, perm: Sequence[int]) -> FunctionalGraph:
        """Graph with node i renamed perm[i]."""
        succ = [0] * self.size
        for i, s in enumerate(self.succ):
            succ[perm[i]] = perm[s]
        return FunctionalGraph(tuple(succ))


def build_graph(f: Callable, domain: Sequence, label: Callable | None = None) -> FunctionalGraph:
    domain = list(domain)
    index = {x: i for i, x in enumerate(domain)}
    succ = []
    for x in domain:
        y = f(x)
        if y not in index:
            raise ValueError(f"map sends {x!r} to {y!r}, outside the domain")
        succ.append(index[y])
    labels = tuple(label(x) for x in domain) if label else None
    return FunctionalGraph(tuple(succ), labels)


def power_map_graph(ext: Extension, n: int) -> FunctionalGraph:
    """u -> u^n on mu_{q+1}."""
    if n < 1:
        raise ValueError("n must be positive")
    K = ext.field
    return build_graph(lambda u: K.pow(u, n), ext.mu_elements(), K.encode)


def cycle_nodes(g: FunctionalGraph) -> list[list[int]]:
    """The cycles of g, each listed in successor order."""
    state = [0] * g.size  # 0 unseen, 1 on current path, 2 done
    cycles = []
    for start in range(g.size):
        path = []
        x = start
        while state[x] == 0:
            state[x] = 1
            path.append(x)
            x = g.succ[x]
        if state[x] == 1:
            cyc = path[path.index(x):]
            cycles.append(cyc)
        for y in path:
            state[y] = 2
    return cycles


def _tree_codes(g: FunctionalGraph, on_cycle: list[bool]) -> list[str]:
    children: list[list[int]] = [[] for _ in range(g.size)]
    for x, y in enumerate(g.succ):
        if not on_cycle[x]:
            children[y].append(x)
    codes = [""] * g.size
    # iterative post-order so long tails do not hit the recursion limit
    for root in (x for x in range(g.size) if on_cycle[x]):
        stack = [(root, False)]
        while stack:
            x, expanded = stack.pop()
            if expanded:
                codes[x] = "(" + "".join(sorted(codes[c] for c in children[x])) + ")"
            else:
                stack.append((x, True))
                stack.extend((c, False) for c in children[x])
    return codes


def _least_rotation(seq: list[str]) -> tuple[str, ...]:
    return min(tuple(seq[i:] + seq[:i]) for i in range(len(seq)))


def canonical_form(g: FunctionalGraph) -> CanonicalForm:
    cycles = cycle_nodes(g)
    on_cycle = [False] * g.size
    for cyc in cycles:
        for x in cyc:
            on_cycle[x] = True
    codes = _tree_codes(g, on_cycle)
    comps = [(len(cyc), _least_rotation([codes[x] for x in cyc])) for cyc in cycles]
    return tuple(sorted(comps))


def iso_check(g1: FunctionalGraph, g2: FunctionalGraph) -> bool:
    return g1.size == g2.size and canonical_form(g1) == canonical_form(g2)


def is_permutation(g: FunctionalGraph) -> bool:
    return sum(len(c) for c in cycle_nodes(g)) == g.size


def tail_depths(g: FunctionalGraph) -> list[int]:
    """Distance from each node to its cycle."""
    on_cycle = [False] * g.size
    for cyc in cycle_nodes(g):
        for x in cyc:
            on_cycle[x] = True
    depth = [-1] * g.size
    for start in range(g.size):
        path = []
        x = start
        while depth[x] < 0 and not on_cycle[x]:
            path.append(x)
            x = g.succ[x]
        d = 0 if on_cycle[x] else depth[x]
        if on_cycle[x]:
            depth[x] = 0
        for y in reversed(path):
            d += 1
            depth[y] = d
    return depth


def cycle_stats(g: FunctionalGraph) -> str:
    """``cycles: 1×2, 2×2; tails: 0:4, 1:2`` (cycle length × count; depth:node count)."""
    lengths = Counter(len(c) for c in cycle_nodes(g))
    depths = Counter(tail_depths(g))
    cyc = ", ".join(f"{n}×{c}" for n, c in sorted(lengths.items()))
    tails = ", ".join(f"{d}:{c}" for d, c in sorted(depths.items()))
    return f"cycles: {cyc}; tails: {tails}"


def to_dot(g: FunctionalGraph, name: str = "G") -> str:
    labels = g.labels or tuple(str(i) for i in range(g.size))
    lines = [f"digraph {name} {{"]
    for i, lab in enumerate(labels):
        lines.append(f'  n{i} [label="{lab}"];')
    for i, s in enumerate(g.succ):
        lines.append(f"  n{i} -> n{s};")
    lines.append("}")
    return "\n".join(lines)
