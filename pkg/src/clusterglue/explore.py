"""Exchange-graph enumeration and the counting checks built on it.

Clusters are identified by the multiset of their variable values in
canonical form, so relabelings of the same cluster collapse to one node.
Enumeration is a breadth-first closure under mutation with two mandatory
bounds (node count and depth); infinite types terminate with a truncated
status instead of hanging. The frontier is processed in sorted key order,
which makes traversal traces reproducible and lets a multi-worker run
produce bit-identical results to a single-threaded one.
"""

from __future__ import annotations

import itertools
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Callable, Iterable, Iterator, Union

from .gluing import GluedSeed, make_glue_pair
from .laurent import LaurentPoly, Var
from .reports import Report, Witness
from .seeds import Seed, mutate_seed

ClusterKey = tuple


class CountsUndefinedError(ValueError):
    """Counts were requested on a truncated enumeration."""


def cluster_key(seed: Seed) -> ClusterKey:
    """Canonical form of the cluster: its sorted multiset of values."""
    return tuple(sorted(sv.value.canonical_key() for sv in seed.variables))


def strict_cluster_key(seed: Seed) -> ClusterKey:
    """Cross-checking key that also canonicalizes the exchange matrix up to
    a simultaneous permutation of rows/columns (ties between equal values
    are resolved by minimizing the permuted matrix)."""
    order = sorted(range(len(seed.variables)), key=lambda i: seed.variables[i].value.canonical_key())
    groups: list[list[int]] = []
    for i in order:
        if groups and (
            seed.variables[groups[-1][-1]].value == seed.variables[i].value
        ):
            groups[-1].append(i)
        else:
            groups.append([i])

    def matrix_tuple(perm: list[int]) -> tuple:
        pos = {p: i for i, p in enumerate(perm)}
        cols = sorted(
            (i for i, sv in enumerate(seed.variables) if not sv.frozen),
            key=lambda i: pos[i],
        )
        col_of = [seed.matrix.cols.index(seed.variables[i].var) for i in cols]
        return tuple(
            tuple(seed.matrix.entries[row][c] for c in col_of) for row in perm
        )

    best = None
    for combo in itertools.product(*(itertools.permutations(g) for g in groups)):
        perm = [i for g in combo for i in g]
        cand = matrix_tuple(perm)
        if best is None or cand < best:
            best = cand
    values = tuple(seed.variables[i].value.canonical_key() for i in order)
    flags = tuple(seed.variables[i].frozen for i in order)
    return (values, flags, best)


@dataclass
class ExchangeGraph:
    """Visited clusters, the mutations between them, and the stop status."""

    root: Seed
    nodes: dict[ClusterKey, Seed]
    edges: set[tuple[ClusterKey, int, ClusterKey]]
    status: str  # "exhausted" | "truncated"
    max_nodes: int
    max_depth: int
    depth_reached: int = 0

    @property
    def exhausted(self) -> bool:
        return self.status == "exhausted"

    def cluster_count(self) -> int:
        """K: the number of clusters. Only defined when exhausted."""
        if not self.exhausted:
            raise CountsUndefinedError("cluster count is undefined on a truncated graph")
        return len(self.nodes)

    def variable_count(self) -> int:
        """kappa: distinct variable values over all nodes, frozens included."""
        if not self.exhausted:
            raise CountsUndefinedError("variable count is undefined on a truncated graph")
        return len(self.value_keys())

    def value_keys(self) -> set:
        seen = set()
        for seed in self.nodes.values():
            for sv in seed.variables:
                seen.add(sv.value.canonical_key())
        return seen


def enumerate_graph(
    seed: Union[Seed, GluedSeed],
    max_nodes: int,
    max_depth: int,
    *,
    workers: int = 1,
    strict: bool = False,
) -> ExchangeGraph:
    """Breadth-first closure of a seed under mutation, deduplicated by
    cluster key. Results are identical for any worker count."""
    if isinstance(seed, GluedSeed):
        seed = seed.seed
    if max_nodes < 1 or max_depth < 0:
        raise ValueError("bounds must be positive")
    key_fn: Callable[[Seed], ClusterKey] = strict_cluster_key if strict else cluster_key
    root_key = key_fn(seed)
    nodes: dict[ClusterKey, Seed] = {root_key: seed}
    edges: set[tuple[ClusterKey, int, ClusterKey]] = set()
    frontier: list[tuple[ClusterKey, Seed]] = [(root_key, seed)]
    truncated = False
    depth = 0

    def expand(item: tuple[ClusterKey, Seed]) -> list[tuple[ClusterKey, int, Seed]]:
        parent_key, s = item
        out = []
        for k in s.mutable_vars():
            out.append((parent_key, k.uid, mutate_seed(s, k)))
        return out

    while frontier and not truncated:
        if depth >= max_depth:
            truncated = True
            break
        depth += 1
        frontier.sort(key=lambda kv: kv[0])
        if workers > 1:
            with ThreadPoolExecutor(max_workers=workers) as pool:
                batches: Iterable[list] = list(pool.map(expand, frontier))
        else:
            batches = (expand(item) for item in frontier)
        next_frontier: list[tuple[ClusterKey, Seed]] = []
        for batch in batches:
            for parent_key, slot_uid, child in batch:
                child_key = key_fn(child)
                a, b = sorted((parent_key, child_key))
                edges.add((a, slot_uid, b))
                if child_key not in nodes:
                    if len(nodes) >= max_nodes:
                        truncated = True
                        break
                    nodes[child_key] = child
                    next_frontier.append((child_key, child))
            if truncated:
                break
        frontier = next_frontier
    return ExchangeGraph(
        root=seed,
        nodes=nodes,
        edges=edges,
        status="truncated" if truncated else "exhausted",
        max_nodes=max_nodes,
        max_depth=max_depth,
        depth_reached=depth,
    )


def kappa(graph: ExchangeGraph) -> int:
    return graph.variable_count()


def cluster_count(graph: ExchangeGraph) -> int:
    return graph.cluster_count()


# -- gluing-specific checks ------------------------------------------------------


def _lifted_value_keys(graph: ExchangeGraph, lift) -> set:
    out = set()
    for seed in graph.nodes.values():
        for sv in seed.variables:
            out.add(lift(sv.value).canonical_key())
    return out


def _glued_cluster_key_from_pair(
    glued: GluedSeed, c1: Seed, c2: Seed, x: Var, y: Var
) -> ClusterKey:
    values = [glued.seed.universe.gen(glued.proxy).canonical_key()]
    for sv in c1.variables:
        if sv.var.uid != x.uid:
            values.append(glued.lift_left(sv.value).canonical_key())
    for sv in c2.variables:
        if sv.var.uid != y.uid:
            values.append(glued.lift_right(sv.value).canonical_key())
    return tuple(sorted(values))


def verify_correspondence(
    s1: Seed,
    x: Union[str, Var],
    s2: Seed,
    y: Union[str, Var],
    max_nodes: int,
    max_depth: int,
) -> Report:
    """Check that glued cluster variables are exactly the factor cluster
    variables plus the proxy, and that pairs of factor clusters biject onto
    glued clusters by gluing."""
    pair = make_glue_pair(s1, x, s2, y)
    g_left = enumerate_graph(s1, max_nodes, max_depth)
    g_right = enumerate_graph(s2, max_nodes, max_depth)
    g_glued = enumerate_graph(pair.glued.seed, max_nodes, max_depth)
    return correspondence_report(pair.glued, g_left, g_right, g_glued)


def correspondence_report(
    glued: GluedSeed,
    g_left: ExchangeGraph,
    g_right: ExchangeGraph,
    g_glued: ExchangeGraph,
) -> Report:
    bounds = {"max_nodes": g_glued.max_nodes, "max_depth": g_glued.max_depth}
    extra = {
        "left_status": g_left.status,
        "right_status": g_right.status,
        "glued_status": g_glued.status,
    }
    if not (g_left.exhausted and g_right.exhausted and g_glued.exhausted):
        return Report(status="bounded", bounds=bounds, extra=extra)

    witnesses: list[Witness] = []
    x, y = glued.left_glued, glued.right_glued
    z_key = glued.seed.universe.gen(glued.proxy).canonical_key()
    left_keys = _lifted_value_keys(g_left, glued.lift_left)
    right_keys = _lifted_value_keys(g_right, glued.lift_right)
    glued_keys = g_glued.value_keys()

    for seed in sorted(g_glued.nodes):
        for sv in g_glued.nodes[seed].variables:
            key = sv.value.canonical_key()
            if key == z_key:
                continue
            in_left = key in left_keys
            in_right = key in right_keys
            if in_left == in_right:
                witnesses.append(
                    Witness(
                        sequence=(),
                        slot=sv.var.name,
                        expected="exactly one factor graph",
                        actual="both" if in_left else "neither",
                        detail=f"glued variable {sv.value.render()}",
                    )
                )

    mapped = {}
    collision = False
    for k1, c1 in sorted(g_left.nodes.items()):
        for k2, c2 in sorted(g_right.nodes.items()):
            gk = _glued_cluster_key_from_pair(glued, c1, c2, x, y)
            if gk in mapped:
                collision = True
                witnesses.append(
                    Witness(
                        sequence=(),
                        slot="",
                        expected="injective gluing of cluster pairs",
                        actual="two pairs glued to the same cluster",
                    )
                )
            mapped[gk] = (k1, k2)
    missing = set(mapped) - set(g_glued.nodes)
    extra_clusters = set(g_glued.nodes) - set(mapped)
    if missing:
        witnesses.append(
            Witness(
                sequence=(),
                slot="",
                expected="every glued pair is a reachable glued cluster",
                actual=f"{len(missing)} glued pairs unreachable",
            )
        )
    if extra_clusters:
        witnesses.append(
            Witness(
                sequence=(),
                slot="",
                expected="every glued cluster comes from a pair",
                actual=f"{len(extra_clusters)} clusters not of glued-pair form",
            )
        )
    bijection = not (collision or missing or extra_clusters)
    extra.update(
        {
            "pairs": len(g_left.nodes) * len(g_right.nodes),
            "glued_clusters": len(g_glued.nodes),
            "bijection": bijection,
        }
    )
    return Report(
        status="ok" if not witnesses else "mismatch",
        witnesses=witnesses,
        bounds=bounds,
        kappa=len(glued_keys),
        K=len(g_glued.nodes),
        checked=len(glued_keys) + len(mapped),
        extra=extra,
    )


def verify_counts(
    s1: Seed,
    x: Union[str, Var],
    s2: Seed,
    y: Union[str, Var],
    max_nodes: int,
    max_depth: int,
) -> Report:
    """Check the count identities on an exhausted enumeration:
    kappa(glued) = kappa1 + kappa2 - 1 and K(glued) = K1 * K2.
    Any truncated side makes the outcome inconclusive."""
    pair = make_glue_pair(s1, x, s2, y)
    g_left = enumerate_graph(s1, max_nodes, max_depth)
    g_right = enumerate_graph(s2, max_nodes, max_depth)
    g_glued = enumerate_graph(pair.glued.seed, max_nodes, max_depth)
    bounds = {"max_nodes": max_nodes, "max_depth": max_depth}
    extra = {
        "left_status": g_left.status,
        "right_status": g_right.status,
        "glued_status": g_glued.status,
    }
    if not (g_left.exhausted and g_right.exhausted and g_glued.exhausted):
        return Report(status="inconclusive", bounds=bounds, extra=extra)
    k1, k2, kg = (
        g_left.variable_count(),
        g_right.variable_count(),
        g_glued.variable_count(),
    )
    K1, K2, Kg = (
        g_left.cluster_count(),
        g_right.cluster_count(),
        g_glued.cluster_count(),
    )
    witnesses = []
    if kg != k1 + k2 - 1:
        witnesses.append(
            Witness(
                sequence=(),
                slot="kappa",
                expected=f"{k1} + {k2} - 1 = {k1 + k2 - 1}",
                actual=str(kg),
            )
        )
    if Kg != K1 * K2:
        witnesses.append(
            Witness(
                sequence=(),
                slot="K",
                expected=f"{K1} * {K2} = {K1 * K2}",
                actual=str(Kg),
            )
        )
    extra.update(
        {"kappa_left": k1, "kappa_right": k2, "K_left": K1, "K_right": K2}
    )
    return Report(
        status="ok" if not witnesses else "mismatch",
        witnesses=witnesses,
        bounds=bounds,
        kappa=kg,
        K=Kg,
        checked=2,
        extra=extra,
    )
