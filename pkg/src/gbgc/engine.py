"""Granular-ball coarsening engine.

A granular-ball is a node subset scored by quality = average induced degree
plus induced transitivity. Coarsening first grows coarse initial balls by
degree-ranked BFS, then refines each ball by binary splitting around its two
highest-degree members, keeping a split only when the children's combined
quality strictly beats the parent's.

All tie-breaks resolve to the lowest node index, so results are fully
deterministic with no random seed.
"""

from __future__ import annotations

import heapq
import math
from dataclasses import dataclass
from typing import Iterable, Literal, Sequence

from .errors import GraphValidationError
from .graph import Graph

Ablation = Literal["none", "no_split", "no_init"]


@dataclass(frozen=True)
class GranularBall:
    """A node subset with cached quality and internal edge count."""

    members: tuple[int, ...]  # sorted ascending, global indices
    quality: float
    internal_edge_count: int

    @property
    def size(self) -> int:
        return len(self.members)


@dataclass
class Partition:
    """Disjoint complete cover of the original nodes by granular-balls."""

    balls: list[GranularBall]
    assignment: list[int]  # node index -> ball index

    @property
    def ball_count(self) -> int:
        return len(self.balls)

    @classmethod
    def from_balls(cls, n: int, balls: Sequence[GranularBall]) -> "Partition":
        assignment = [-1] * n
        for idx, ball in enumerate(balls):
            for v in ball.members:
                if not (0 <= v < n):
                    raise GraphValidationError(f"ball member {v} out of range for n={n}")
                if assignment[v] != -1:
                    raise GraphValidationError(f"node {v} assigned to two balls")
                assignment[v] = idx
        missing = assignment.count(-1)
        if missing:
            raise GraphValidationError(f"{missing} nodes not covered by any ball")
        return cls(balls=list(balls), assignment=assignment)

    @classmethod
    def from_member_groups(cls, g: Graph, groups: Iterable[Iterable[int]]) -> "Partition":
        return cls.from_balls(g.n, [make_ball(g, members) for members in groups])


@dataclass
class CoarsenConfig:
    """Knobs for the coarsening run.

    mode "adaptive" refines until the quality gate rejects every further
    split; mode "ratio" splits greedily toward a target ball count
    ceil(ratio * N). init_ball_target defaults to ceil(sqrt(N)) per graph.
    """

    mode: Literal["adaptive", "ratio"] = "adaptive"
    ratio: float | None = None
    ablation: Ablation = "none"
    init_ball_target: int | None = None

    def __post_init__(self):
        if self.mode not in ("adaptive", "ratio"):
            raise GraphValidationError(f"unknown mode {self.mode!r}")
        if self.ablation not in ("none", "no_split", "no_init"):
            raise GraphValidationError(f"unknown ablation {self.ablation!r}")
        if self.mode == "ratio":
            if self.ratio is None or not (0.0 < self.ratio < 1.0):
                raise GraphValidationError("ratio mode requires ratio in (0, 1)")
        if self.init_ball_target is not None and self.init_ball_target < 1:
            raise GraphValidationError("init_ball_target must be >= 1")


@dataclass(frozen=True)
class SplitDecision:
    """One tentative binary split and whether the quality gate accepted it."""

    parent_size: int
    parent_quality: float
    child_a_quality: float
    child_b_quality: float
    accepted: bool


def default_init_target(n: int) -> int:
    """ceil(sqrt(n)) computed exactly in integers."""
    r = math.isqrt(n)
    return r if r * r == n else r + 1


def _ball_stats(g: Graph, member_set: frozenset[int]) -> tuple[int, float]:
    """(internal edge count, quality) of the subgraph induced by member_set.

    Quality = E/N + ordered_triangles/ordered_wedges on the induced
    subgraph, with the second term 0 when no wedges exist.
    """
    degree_total = 0
    wedges = 0
    closed = 0  # per-edge common-neighbor counts; sums to 3 * triangles
    for v in member_set:
        inside = g.neighbor_set(v) & member_set
        d = len(inside)
        degree_total += d
        wedges += d * (d - 1)
        for w in inside:
            if w > v:
                closed += len(inside & g.neighbor_set(w))
    edges = degree_total // 2
    quality = edges / len(member_set)
    if wedges:
        quality += (2 * closed) / wedges
    return edges, quality


def ball_quality(g: Graph, members: Iterable[int]) -> float:
    """Quality of the ball induced by `members` (must be nonempty)."""
    member_set = frozenset(members)
    if not member_set:
        raise GraphValidationError("ball members must be nonempty")
    return _ball_stats(g, member_set)[1]


def make_ball(g: Graph, members: Iterable[int]) -> GranularBall:
    member_tuple = tuple(sorted(set(members)))
    if not member_tuple:
        raise GraphValidationError("ball members must be nonempty")
    edges, quality = _ball_stats(g, frozenset(member_tuple))
    return GranularBall(members=member_tuple, quality=quality, internal_edge_count=edges)


def init_balls(g: Graph, target: int, stats: dict | None = None) -> Partition:
    """Coarse initial partition by degree-ranked BFS growth.

    Repeatedly takes the highest-degree remaining node (lowest index on
    ties) as a center and grows BFS layers over the remaining nodes,
    stopping after the first layer whose size exceeds `target` (that layer
    is included) or when the reachable remainder runs out. Every ball
    therefore induces a connected subgraph.
    """
    if g.n == 0:
        raise GraphValidationError("cannot initialize balls on an empty graph")
    if target < 1:
        raise GraphValidationError("target must be >= 1")
    remaining = bytearray([1]) * g.n
    remaining_count = g.n
    by_degree = sorted(range(g.n), key=lambda v: (-len(g.adj[v]), v))
    cursor = 0
    nodes_visited = 0
    edge_traversals = 0
    groups: list[list[int]] = []
    while remaining_count:
        while not remaining[by_degree[cursor]]:
            cursor += 1
        center = by_degree[cursor]
        remaining[center] = 0
        ball = [center]
        nodes_visited += 1
        frontier = [center]
        while frontier:
            nxt: list[int] = []
            for v in frontier:
                for w in g.adj[v]:
                    edge_traversals += 1
                    if remaining[w]:
                        remaining[w] = 0
                        nxt.append(w)
            if not nxt:
                break
            nxt.sort()
            ball.extend(nxt)
            nodes_visited += len(nxt)
            frontier = nxt
            if len(nxt) > target:
                break
        remaining_count -= len(ball)
        groups.append(sorted(ball))
    if stats is not None:
        stats["nodes_visited"] = nodes_visited
        stats["edge_traversals"] = edge_traversals
    return Partition.from_member_groups(g, groups)


def split_ball(g: Graph, ball: GranularBall) -> tuple[GranularBall, GranularBall]:
    """Binary split around the ball's two highest-induced-degree members.

    Ownership is by BFS distance inside the ball: strictly closer center
    wins; ties (including nodes unreachable from both) go to the first
    center's child. Both children are nonempty and partition the parent.
    """
    if ball.size < 2:
        raise GraphValidationError("cannot split a singleton ball")
    member_set = frozenset(ball.members)
    induced_degree = {v: len(g.neighbor_set(v) & member_set) for v in ball.members}

    def argmax_degree(exclude: int | None) -> int:
        best, best_d = -1, -1
        for v in ball.members:  # ascending, so ties keep the lowest index
            if v == exclude:
                continue
            d = induced_degree[v]
            if d > best_d:
                best, best_d = v, d
        return best

    v_a = argmax_degree(None)
    v_b = argmax_degree(v_a)
    dist_a = _bfs_distances(g, v_a, member_set)
    dist_b = _bfs_distances(g, v_b, member_set)
    inf = float("inf")
    group_a, group_b = [], []
    for v in ball.members:
        if dist_b.get(v, inf) < dist_a.get(v, inf):
            group_b.append(v)
        else:
            group_a.append(v)
    return make_ball(g, group_a), make_ball(g, group_b)


def _bfs_distances(g: Graph, source: int, allowed: frozenset[int]) -> dict[int, int]:
    dist = {source: 0}
    frontier = [source]
    d = 0
    while frontier:
        d += 1
        nxt = []
        for v in frontier:
            for w in g.adj[v]:
                if w in allowed and w not in dist:
                    dist[w] = d
                    nxt.append(w)
        frontier = nxt
    return dist


def _refine(
    g: Graph,
    start: Sequence[GranularBall],
    decisions: list[SplitDecision] | None,
) -> list[GranularBall]:
    """Recursive quality-gated splitting; returns final balls in preorder."""
    final: list[GranularBall] = []
    stack = list(reversed(start))
    while stack:
        ball = stack.pop()
        if ball.size < 2:
            final.append(ball)
            continue
        child_a, child_b = split_ball(g, ball)
        accepted = child_a.quality + child_b.quality > ball.quality
        if decisions is not None:
            decisions.append(
                SplitDecision(
                    parent_size=ball.size,
                    parent_quality=ball.quality,
                    child_a_quality=child_a.quality,
                    child_b_quality=child_b.quality,
                    accepted=accepted,
                )
            )
        if accepted:
            stack.append(child_b)
            stack.append(child_a)
        else:
            final.append(ball)
    return final


def adaptive_coarsen(
    g: Graph,
    cfg: CoarsenConfig | None = None,
    decisions: list[SplitDecision] | None = None,
) -> Partition:
    """Full adaptive pipeline: initialization then gated binary splitting.

    Ablations: "no_split" returns the initial partition as-is; "no_init"
    starts the splitting recursion from a single whole-graph ball.
    """
    cfg = cfg or CoarsenConfig()
    if g.n == 0:
        raise GraphValidationError("cannot coarsen an empty graph")
    if cfg.ablation == "no_init":
        start = [make_ball(g, range(g.n))]
    else:
        target = cfg.init_ball_target or default_init_target(g.n)
        start = init_balls(g, target).balls
        if cfg.ablation == "no_split":
            return Partition.from_balls(g.n, start)
    return Partition.from_balls(g.n, _refine(g, start, decisions))


def ratio_coarsen(g: Graph, r: float) -> Partition:
    """Non-adaptive variant: split greedily until the ball count reaches
    max(1, ceil(r * N)).

    Starts from the usual initialization; if that already has enough balls
    it is returned unchanged. Otherwise the splittable ball with the
    largest quality gain goes first (ties: larger ball, then lowest
    smallest member), with no acceptance gate.
    """
    if g.n == 0:
        raise GraphValidationError("cannot coarsen an empty graph")
    if not (0.0 < r < 1.0):
        raise GraphValidationError(f"ratio must be in (0, 1), got {r}")
    k = max(1, math.ceil(r * g.n))
    part = init_balls(g, default_init_target(g.n))
    count = part.ball_count
    if count >= k:
        return part

    heap: list[tuple] = []

    def push(ball: GranularBall):
        if ball.size < 2:
            return
        child_a, child_b = split_ball(g, ball)
        gain = child_a.quality + child_b.quality - ball.quality
        # min member is unique across live balls, making the key total
        heapq.heappush(heap, (-gain, -ball.size, ball.members[0], ball, child_a, child_b))

    for ball in part.balls:
        push(ball)
    children: dict[int, tuple[GranularBall, GranularBall]] = {}
    while count < k and heap:
        _, _, _, parent, child_a, child_b = heapq.heappop(heap)
        children[id(parent)] = (child_a, child_b)
        count += 1
        push(child_a)
        push(child_b)

    final: list[GranularBall] = []
    stack = list(reversed(part.balls))
    while stack:
        ball = stack.pop()
        split = children.get(id(ball))
        if split is None:
            final.append(ball)
        else:
            stack.append(split[1])
            stack.append(split[0])
    return Partition.from_balls(g.n, final)


def coarsen(
    g: Graph,
    cfg: CoarsenConfig,
    decisions: list[SplitDecision] | None = None,
) -> Partition:
    """Dispatch on cfg.mode."""
    if cfg.mode == "ratio":
        return ratio_coarsen(g, cfg.ratio)
    return adaptive_coarsen(g, cfg, decisions)


def achieved_ratio(p: Partition, n: int) -> float:
    """Achieved coarsening ratio: ball count over original node count."""
    if n <= 0:
        raise GraphValidationError("original node count must be positive")
    return p.ball_count / n
