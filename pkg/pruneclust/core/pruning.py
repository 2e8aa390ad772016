"""
Turning a dendrogram into a partition.

Three cutters share the frontier representation (the set of nodes that
become terminal): the horizontal cut, weakest-link cost-complexity
pruning, and the exact optimal-per-size dynamic program.
"""

import logging
from typing import Dict, Iterable, List, Optional, Set, Tuple

import numpy as np

from pruneclust.config import settings
from pruneclust.core.loss import frontier_loss, tree_loss, validate_frontier
from pruneclust.errors import DomainError, NonMonotoneHeightsError
from pruneclust.models.dendrogram import Dendrogram, NodeRef
from pruneclust.models.loss import LossTable
from pruneclust.schemas.pruning import Partition, PruneSequence, PruneStep, SizePolicy

logger = logging.getLogger(__name__)


def _check_k(k: int, n: int) -> None:
    if not 1 <= k <= n:
        raise DomainError(f"k must lie in [1, {n}], got {k}")


def partition_of(tree: Dendrogram, frontier: Iterable[NodeRef]) -> Partition:
    """Label each observation by its frontier node, renumbered by first appearance."""
    frontier = sorted(frontier)
    validate_frontier(tree, frontier)
    owner = np.zeros(tree.n_leaves, dtype=int)
    for node in frontier:
        stack = [node]
        while stack:
            current = stack.pop()
            if current < 0:
                owner[-current - 1] = node
            else:
                stack.extend(tree.merges[current - 1])
    return Partition.from_labels(owner.tolist())


# Horizontal cut
def horizontal_frontier(tree: Dendrogram, k: int) -> List[NodeRef]:
    """Terminal nodes left after performing the first n - k merges."""
    _check_k(k, tree.n_leaves)
    frontier: Set[NodeRef] = set(tree.leaves())
    for step, (a, b) in enumerate(tree.merges[: tree.n_leaves - k], start=1):
        frontier.discard(a)
        frontier.discard(b)
        frontier.add(step)
    return sorted(frontier)


def horizontal_cut_by_k(tree: Dendrogram, k: int) -> Partition:
    return partition_of(tree, horizontal_frontier(tree, k))


def horizontal_cut_by_height(tree: Dendrogram, h: float) -> Partition:
    """Components after performing every merge at height <= h."""
    if h < 0:
        raise DomainError(f"cut height must be nonnegative, got {h}")
    if not tree.heights_monotone():
        raise NonMonotoneHeightsError("merge heights decrease somewhere; a cut by height is ill-defined")
    performed = int(np.searchsorted(np.asarray(tree.heights), h, side="right"))
    return horizontal_cut_by_k(tree, tree.n_leaves - performed)


def horizontal_sequence(tree: Dendrogram, table: LossTable) -> List[Tuple[int, float]]:
    """(k, R(T)) of the horizontal cut for every k from n down to 1."""
    frontier: Set[NodeRef] = set(tree.leaves())
    curve = [(tree.n_leaves, frontier_loss(table, frontier))]
    for step, (a, b) in enumerate(tree.merges, start=1):
        frontier.discard(a)
        frontier.discard(b)
        frontier.add(step)
        curve.append((tree.n_leaves - step, frontier_loss(table, frontier)))
    return curve


# Weakest-link pruning
def _descendants(tree: Dendrogram, node: NodeRef) -> List[NodeRef]:
    """Every node strictly below `node`."""
    found, stack = [], list(tree.merges[node - 1])
    while stack:
        current = stack.pop()
        found.append(current)
        if current > 0:
            stack.extend(tree.merges[current - 1])
    return found


def weakest_link_sequence(tree: Dendrogram, table: LossTable, tie_rtol: Optional[float] = None) -> PruneSequence:
    """Nested minimal cost-complexity subtrees from the full tree to the root.

    Each round computes, for every internal node t of the current subtree,
    g(t) = (R(t) - R(T_t)) / (|leaves of T_t| - 1) and collapses all nodes
    attaining the minimum. The minimum becomes the alpha of the new step.
    """
    tie_rtol = settings.TIE_RTOL if tie_rtol is None else tie_rtol
    n = tree.n_leaves
    frontier: Set[NodeRef] = set(tree.leaves())
    steps = [PruneStep(n_leaves=n, loss_r=frontier_loss(table, frontier), alpha=0.0, frontier=sorted(frontier))]
    if n == 1:
        return PruneSequence(steps=steps)

    losses = np.array([0.0] + [table.loss(step) for step in tree.internal_nodes()])
    rounding = np.finfo(float).eps * n
    active = np.ones(n, dtype=bool)
    active[0] = False
    collapsed = np.zeros(n, dtype=bool)
    n_terminal = np.zeros(n, dtype=int)
    branch_loss = np.zeros(n)

    while len(frontier) > 1:
        g = np.full(n, np.inf)
        # rounding error of a rise scales with R(t) / (|T_t| - 1)
        error = np.zeros(n)
        for step in tree.internal_nodes():
            if not active[step]:
                continue
            terminals, loss = 0, 0.0
            for child in tree.merges[step - 1]:
                if child < 0:
                    terminals += 1
                elif collapsed[child]:
                    terminals += 1
                    loss += losses[child]
                else:
                    terminals += n_terminal[child]
                    loss += branch_loss[child]
            n_terminal[step] = terminals
            branch_loss[step] = loss
            g[step] = (losses[step] - loss) / (terminals - 1)
            error[step] = rounding * losses[step] / (terminals - 1)

        weakest = int(np.argmin(g))
        g_min = float(g[weakest])
        tied = np.flatnonzero(g <= g_min + tie_rtol * abs(g_min) + error + error[weakest])
        # ancestors carry larger step numbers; collapsing them first subsumes tied descendants
        for step in sorted(tied.tolist(), reverse=True):
            if not active[step]:
                continue
            below = _descendants(tree, step)
            frontier.difference_update(below)
            frontier.add(step)
            collapsed[step] = True
            active[step] = False
            for node in below:
                if node > 0:
                    active[node] = False
                    collapsed[node] = False

        alpha = max(max(g_min, 0.0), steps[-1].alpha)
        steps.append(
            PruneStep(
                n_leaves=len(frontier),
                loss_r=frontier_loss(table, frontier),
                alpha=alpha,
                frontier=sorted(frontier),
            )
        )
        logger.debug("collapsed %d node(s) at alpha=%.6g, %d terminal nodes remain", tied.size, alpha, len(frontier))

    return PruneSequence(steps=steps)


def select_for_k(seq: PruneSequence, k: int, policy: SizePolicy = SizePolicy.NEAREST_UP) -> Optional[PruneStep]:
    """Subtree with exactly k leaves, or per policy the next larger one / None."""
    _check_k(k, seq.steps[0].n_leaves)
    exact = seq.step_for_size(k)
    if exact is not None or SizePolicy(policy) == SizePolicy.SKIP:
        return exact
    larger = [step for step in seq.steps if step.n_leaves > k]
    return min(larger, key=lambda step: step.n_leaves)


def select_for_alpha(seq: PruneSequence, alpha: float) -> PruneStep:
    """Smallest minimizing subtree: the step whose [alpha_i, alpha_i+1) holds alpha."""
    if alpha < 0:
        raise DomainError(f"alpha must be nonnegative, got {alpha}")
    chosen = seq.steps[0]
    for step in seq.steps:
        if step.alpha <= alpha:
            chosen = step
        else:
            break
    return chosen


# Dynamic-programming oracle
class _DPTables:
    """best[node][j]: least loss of a j-leaf pruning of the branch under node."""

    def __init__(self, tree: Dendrogram, table: LossTable):
        self.tree = tree
        self.best: Dict[NodeRef, np.ndarray] = {}
        self.left_count: Dict[NodeRef, np.ndarray] = {}
        for leaf in tree.leaves():
            self.best[leaf] = np.array([np.inf, 0.0])
        for step, (a, b) in enumerate(tree.merges, start=1):
            best_a, best_b = self.best[a], self.best[b]
            size_a, size_b = best_a.size - 1, best_b.size - 1
            best = np.full(size_a + size_b + 1, np.inf)
            best[1] = table.loss(step)
            left = np.zeros(size_a + size_b + 1, dtype=int)
            for j_left in range(1, size_a + 1):
                candidate = best_a[j_left] + best_b[1:]
                targets = np.arange(j_left + 1, j_left + size_b + 1)
                better = candidate < best[targets]
                best[targets[better]] = candidate[better]
                left[targets[better]] = j_left
            self.best[step] = best
            self.left_count[step] = left

    def frontier(self, node: NodeRef, j: int) -> List[NodeRef]:
        out, stack = [], [(node, j)]
        while stack:
            current, count = stack.pop()
            if count == 1:
                out.append(current)
                continue
            a, b = self.tree.merges[current - 1]
            j_left = int(self.left_count[current][count])
            stack.append((a, j_left))
            stack.append((b, count - j_left))
        return sorted(out)


def dp_optimal(tree: Dendrogram, table: LossTable, k: int) -> Tuple[List[NodeRef], float]:
    """Least-loss pruning with exactly k terminal nodes, over all prunings.

    opt(t, 1) = R(t); opt(t, j) = min over j_l + j_r = j of opt(l, j_l) + opt(r, j_r),
    ties toward the smaller j_l. Optimal for each k but not nested across k.
    """
    _check_k(k, tree.n_leaves)
    frontier = _DPTables(tree, table).frontier(tree.root, k)
    return frontier, tree_loss(table, frontier)


def dp_losses(tree: Dendrogram, table: LossTable) -> Dict[int, Tuple[List[NodeRef], float]]:
    """dp_optimal for every k in one pass over the tree."""
    tables = _DPTables(tree, table)
    curve = {}
    for k in range(1, tree.n_leaves + 1):
        frontier = tables.frontier(tree.root, k)
        curve[k] = (frontier, frontier_loss(table, frontier))
    return curve
