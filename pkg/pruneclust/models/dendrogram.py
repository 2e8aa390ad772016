from dataclasses import dataclass
from typing import Iterator, Sequence, Tuple

import numpy as np

from pruneclust.errors import StructuralError
from pruneclust.schemas.dendrogram import LinkageKind

# Negative id -i is leaf i (1-based), positive id m is the cluster formed at merge step m.
NodeRef = int


def is_leaf(node: NodeRef) -> bool:
    return node < 0


def leaf_row(node: NodeRef) -> int:
    """0-based data row of a leaf node."""
    return -node - 1


@dataclass(frozen=True)
class Dendrogram:
    n_leaves: int
    merges: Tuple[Tuple[int, int], ...]
    heights: Tuple[float, ...]
    linkage: LinkageKind = LinkageKind.AVERAGE

    def __post_init__(self):
        merges = tuple((int(a), int(b)) for a, b in self.merges)
        heights = tuple(float(h) for h in self.heights)
        object.__setattr__(self, "merges", merges)
        object.__setattr__(self, "heights", heights)
        object.__setattr__(self, "linkage", LinkageKind(self.linkage))
        self._validate()
        step_sizes = np.zeros(len(merges) + 1, dtype=int)
        for step, (a, b) in enumerate(merges, start=1):
            step_sizes[step] = self._size(a, step_sizes) + self._size(b, step_sizes)
        step_sizes.setflags(write=False)
        object.__setattr__(self, "_step_sizes", step_sizes)

    @staticmethod
    def _size(node: NodeRef, step_sizes: np.ndarray) -> int:
        return 1 if node < 0 else int(step_sizes[node])

    def _validate(self) -> None:
        n = self.n_leaves
        if n < 1:
            raise StructuralError(f"a dendrogram needs at least one leaf, got n_leaves={n}")
        if len(self.merges) != n - 1:
            raise StructuralError(f"{len(self.merges)} merges for {n} leaves, expected {n - 1}")
        if len(self.heights) != n - 1:
            raise StructuralError(f"{len(self.heights)} heights for {n} leaves, expected {n - 1}")
        seen_leaves = set()
        used_steps = set()
        for step, pair in enumerate(self.merges, start=1):
            for node in pair:
                if node == 0:
                    raise StructuralError(f"merge {step} references node 0; ids are 1-based")
                if node < 0:
                    if -node > n:
                        raise StructuralError(f"merge {step} references leaf {-node} beyond n_leaves={n}")
                    if node in seen_leaves:
                        raise StructuralError(f"leaf {-node} is merged more than once (merge {step})")
                    seen_leaves.add(node)
                else:
                    if node >= step:
                        raise StructuralError(f"merge {step} references step {node}, which is not yet formed")
                    if node in used_steps:
                        raise StructuralError(f"step {node} is merged more than once (merge {step})")
                    used_steps.add(node)
            if pair[0] == pair[1]:
                raise StructuralError(f"merge {step} joins a node with itself")
        for h in self.heights:
            if not np.isfinite(h) or h < 0:
                raise StructuralError(f"merge heights must be finite and nonnegative, got {h}")

    @property
    def root(self) -> NodeRef:
        return self.n_leaves - 1 if self.n_leaves > 1 else -1

    @property
    def n_merges(self) -> int:
        return len(self.merges)

    def children(self, node: NodeRef) -> Tuple[NodeRef, NodeRef]:
        if node < 0:
            raise StructuralError(f"leaf {-node} has no children")
        self.check_node(node)
        return self.merges[node - 1]

    def size(self, node: NodeRef) -> int:
        self.check_node(node)
        return 1 if node < 0 else int(self._step_sizes[node])

    def check_node(self, node: NodeRef) -> None:
        if node == 0 or (node < 0 and -node > self.n_leaves) or node > self.n_merges:
            raise StructuralError(f"node {node} is not part of this dendrogram")

    def leaves(self) -> Iterator[NodeRef]:
        return iter(range(-1, -self.n_leaves - 1, -1))

    def internal_nodes(self) -> Iterator[NodeRef]:
        """Internal nodes bottom-up (children always precede parents)."""
        return iter(range(1, self.n_merges + 1))

    def parents(self) -> dict:
        """Parent of every non-root node."""
        parent = {}
        for step, (a, b) in enumerate(self.merges, start=1):
            parent[a] = step
            parent[b] = step
        return parent

    def heights_monotone(self) -> bool:
        return all(b >= a for a, b in zip(self.heights, self.heights[1:]))

    def as_lists(self) -> Tuple[Sequence[Sequence[int]], Sequence[float]]:
        return [list(pair) for pair in self.merges], list(self.heights)
