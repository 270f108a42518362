"""Crystal operators on p-restricted p-strict partitions and the
block-reduced crystal graph.

Nodes are (row, column) pairs, both 1-indexed.  Every i-removable and
i-addable node carries its own sign in the i-signature, including the two
nodes of a residue-0 domino; e_i and f_i remove or add exactly one node.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Optional, Sequence

from .abacus import pbar_core
from .errors import BudgetExceeded, InvalidIndex, UnknownBlock
from .partitions import Partition, check_modulus, half, is_p_strict, node_residue, p_strict_partition

Node = tuple[int, int]


def _check_residue(i: int, p: int) -> None:
    if not 0 <= i <= half(p):
        raise InvalidIndex(f"residue must lie in 0..{half(p)}, got {i}")


def _change_row(parts: Sequence[int], row: int, delta: int) -> Optional[Partition]:
    """Add delta boxes to a row (1-indexed); None if the shape breaks."""
    rows = list(parts)
    if row == len(rows) + 1:
        rows.append(0)
    elif row > len(rows) + 1:
        return None
    rows[row - 1] += delta
    if rows[row - 1] < 0:
        return None
    while rows and rows[-1] == 0:
        rows.pop()
    if any(a < b for a, b in zip(rows, rows[1:])) or any(x == 0 for x in rows):
        return None
    return tuple(rows)


def _rim_key(node: Node) -> tuple[int, int]:
    # bottom-left to top-right
    return (-node[0], node[1])


def i_removable_nodes(parts: Sequence[int], i: int, p: int) -> list[Node]:
    parts = p_strict_partition(parts, p)
    _check_residue(i, p)
    found = []
    for r, length in enumerate(parts, start=1):
        # the last box of the row, removed on its own
        if node_residue(length, p) == i:
            smaller = _change_row(parts, r, -1)
            if smaller is not None and is_p_strict(smaller, p):
                found.append((r, length))
        # the box left of the last one, as the left half of a residue-i domino
        s = length - 1
        if s >= 1 and node_residue(s, p) == i and node_residue(length, p) == i:
            one = _change_row(parts, r, -1)
            two = _change_row(parts, r, -2)
            if one is not None and two is not None and is_p_strict(one, p) and is_p_strict(two, p):
                found.append((r, s))
    return sorted(set(found), key=_rim_key)


def i_addable_nodes(parts: Sequence[int], i: int, p: int) -> list[Node]:
    parts = p_strict_partition(parts, p)
    _check_residue(i, p)
    found = []
    for r in range(1, len(parts) + 2):
        length = parts[r - 1] if r <= len(parts) else 0
        s = length + 1
        if node_residue(s, p) == i:
            bigger = _change_row(parts, r, 1)
            if bigger is not None and is_p_strict(bigger, p):
                found.append((r, s))
        # right half of a residue-i domino whose left half is also missing
        s2 = length + 2
        if node_residue(s2, p) == i and node_residue(s, p) == i:
            one = _change_row(parts, r, 1)
            two = _change_row(parts, r, 2)
            if one is not None and two is not None and is_p_strict(one, p) and is_p_strict(two, p):
                found.append((r, s2))
    return sorted(set(found), key=_rim_key)


def i_signature(parts: Sequence[int], i: int, p: int) -> list[tuple[str, Node]]:
    signs = [("-", n) for n in i_removable_nodes(parts, i, p)]
    signs += [("+", n) for n in i_addable_nodes(parts, i, p)]
    signs.sort(key=lambda sn: _rim_key(sn[1]))
    return signs


def reduced_signature(parts: Sequence[int], i: int, p: int) -> tuple[list[Node], list[Node]]:
    """(i-normal nodes, i-conormal nodes), each in rim order.

    Cancelling adjacent "+-" pairs repeatedly is the same as matching each
    "-" with the nearest unmatched "+" to its left.
    """
    normals: list[Node] = []
    pluses: list[Node] = []
    for sign, node in i_signature(parts, i, p):
        if sign == "+":
            pluses.append(node)
        elif pluses:
            pluses.pop()
        else:
            normals.append(node)
    return normals, pluses


def good_node(parts, i, p) -> Optional[Node]:
    normals, _ = reduced_signature(parts, i, p)
    return normals[-1] if normals else None


def cogood_node(parts, i, p) -> Optional[Node]:
    _, conormals = reduced_signature(parts, i, p)
    return conormals[0] if conormals else None


def apply_e(parts: Sequence[int], i: int, p: int) -> Optional[Partition]:
    """Remove the i-good node, or None if there is none."""
    node = good_node(parts, i, p)
    if node is None:
        return None
    return _change_row(parts, node[0], -1)


def apply_f(parts: Sequence[int], i: int, p: int) -> Optional[Partition]:
    """Add the i-cogood node, or None if there is none."""
    node = cogood_node(parts, i, p)
    if node is None:
        return None
    return _change_row(parts, node[0], 1)


@dataclass(frozen=True, order=True)
class BlockLabel:
    """The block core^weight."""

    core: Partition
    weight: int

    def rank(self, p: int) -> int:
        return sum(self.core) + p * self.weight

    def __str__(self) -> str:
        return f"({','.join(map(str, self.core))})^{self.weight}"


def block_of(parts: Sequence[int], p: int) -> BlockLabel:
    core, w = pbar_core(parts, p)
    return BlockLabel(core, w)


@dataclass
class BlockGraph:
    """Blocks of rank <= max_rank in the crystal generated from the empty
    partition, with an (lower, upper, i) edge wherever some member of the
    lower block maps to a member of the upper block under f_i."""

    p: int
    max_rank: int
    vertices: list[BlockLabel]
    edges: list[tuple[BlockLabel, BlockLabel, int]]
    members: dict[BlockLabel, list[Partition]] = field(repr=False, default_factory=dict)

    def __post_init__(self):
        self._up: dict[tuple[BlockLabel, int], BlockLabel] = {}
        self._down: dict[tuple[BlockLabel, int], BlockLabel] = {}
        for u, v, i in self.edges:
            self._up[(u, i)] = v
            self._down[(v, i)] = u

    def rank(self, b: BlockLabel) -> int:
        return b.rank(self.p)

    def up(self, b: BlockLabel, i: int) -> Optional[BlockLabel]:
        return self._up.get((b, i))

    def down(self, b: BlockLabel, i: int) -> Optional[BlockLabel]:
        return self._down.get((b, i))

    def __contains__(self, b: BlockLabel) -> bool:
        return b in self.members

    def to_json(self) -> dict:
        return {
            "p": self.p,
            "max_rank": self.max_rank,
            "vertices": [
                {"core": list(b.core), "weight": b.weight, "rank": self.rank(b)} for b in self.vertices
            ],
            "edges": [[str(u), str(v), i] for u, v, i in self.edges],
        }

    def to_dot(self) -> str:
        lines = [f"digraph block_reduced_p{self.p} {{"]
        ids = {b: f"b{k}" for k, b in enumerate(self.vertices)}
        for b in self.vertices:
            lines.append(f'  {ids[b]} [label="{b}\\nrank {self.rank(b)}"];')
        for u, v, i in self.edges:
            lines.append(f'  {ids[u]} -> {ids[v]} [label="{i}"];')
        lines.append("}")
        return "\n".join(lines) + "\n"


def restricted_crystal(p: int, max_rank: int, budget: int = 200_000) -> dict[Partition, dict[int, Partition]]:
    """All vertices of rank <= max_rank reachable from () under the f_i,
    mapped to their f_i images (only images of rank <= max_rank)."""
    check_modulus(p)
    t = half(p)
    arrows: dict[Partition, dict[int, Partition]] = {(): {}}
    queue = deque([()])
    while queue:
        lam = queue.popleft()
        if sum(lam) >= max_rank:
            continue
        for i in range(t + 1):
            mu = apply_f(lam, i, p)
            if mu is None:
                continue
            arrows[lam][i] = mu
            if mu not in arrows:
                if len(arrows) >= budget:
                    raise BudgetExceeded(f"crystal exceeds {budget} vertices below rank {max_rank}")
                arrows[mu] = {}
                queue.append(mu)
    return arrows


def block_reduced_graph(p: int, max_rank: int, budget: int = 200_000) -> BlockGraph:
    arrows = restricted_crystal(p, max_rank, budget)
    members: dict[BlockLabel, list[Partition]] = {}
    label = {}
    for lam in arrows:
        b = block_of(lam, p)
        label[lam] = b
        members.setdefault(b, []).append(lam)
    edges = set()
    for lam, out in arrows.items():
        for i, mu in out.items():
            edges.add((label[lam], label[mu], i))
    for b in members:
        members[b].sort(reverse=True)
    order = lambda b: (b.rank(p), b.weight, b.core)  # noqa: E731
    vertices = sorted(members, key=order)
    edge_list = sorted(edges, key=lambda e: (order(e[0]), order(e[1]), e[2]))
    return BlockGraph(p, max_rank, vertices, edge_list, members)


@dataclass(frozen=True)
class IString:
    blocks: tuple[BlockLabel, ...]
    residue: int
    # False when the top block sits at max_rank, so the string may continue
    top_known: bool

    def is_end(self, b: BlockLabel) -> bool:
        return b == self.blocks[0] or (self.top_known and b == self.blocks[-1])


def maximal_i_string(b: BlockLabel, i: int, g: BlockGraph) -> IString:
    if b not in g:
        raise UnknownBlock(f"block {b} is not in the graph")
    _check_residue(i, g.p)
    bottom = b
    while (lower := g.down(bottom, i)) is not None:
        bottom = lower
    chain = [bottom]
    while (upper := g.up(chain[-1], i)) is not None:
        chain.append(upper)
    return IString(tuple(chain), i, g.rank(chain[-1]) < g.max_rank)


def is_extremal(b: BlockLabel, i: int, g: BlockGraph) -> bool:
    """b has no i-neighbour below or none above.  Only decided when b is
    below the rank cut-off, since its upper neighbour may lie past it."""
    if b not in g:
        raise UnknownBlock(f"block {b} is not in the graph")
    if g.rank(b) >= g.max_rank:
        raise UnknownBlock(f"block {b} sits at the rank cut-off; its i-string is truncated")
    return g.down(b, i) is None or g.up(b, i) is None
