"""
Instance Feature Extraction - MST, distance and nearest-neighbor-graph statistics

Both the node cloud (prefix tsp_) and the (weight, profit) cloud (prefix kp_)
get the same feature block; scalar instance features are appended.
"""
from typing import Dict, List, Tuple

import numpy as np
from scipy.sparse import csr_matrix
from scipy.sparse.csgraph import breadth_first_order, connected_components, minimum_spanning_tree
from scipy.spatial.distance import cdist

from shared.config.constants import FEATURE_SENTINEL, KNN_SIZES
from shared.models.results import FeatureVector
from shared.models.ttp_models import TtpInstance
from shared.utils.logger import get_logger

logger = get_logger(__name__)

# Keeps zero-length edges between duplicate points in the sparse graph
_ZERO_EDGE_OFFSET = 1e-9

DISTANCE_STATS = ("dist_min", "dist_max", "dist_mean", "dist_median", "dist_sd")
MST_STATS = ("mst_min", "mst_max", "mst_mean", "mst_median", "mst_sd", "mst_sum", "mst_depth")
NNG_STATS = tuple(
    f"nng_{k}_{kind}" for k in KNN_SIZES for kind in ("weak", "strong")
)
CLOUD_FEATURES = DISTANCE_STATS + MST_STATS + NNG_STATS
SCALAR_FEATURES = ("renting_rate", "capacity", "capacity_ratio", "n_items", "n_nodes", "ipn")
CLOUD_PREFIXES = ("tsp_", "kp_")

FEATURE_SCHEMA: Tuple[str, ...] = tuple(
    prefix + name for prefix in CLOUD_PREFIXES for name in CLOUD_FEATURES
) + SCALAR_FEATURES


def _summary(values: np.ndarray) -> Tuple[float, float, float, float, float]:
    return (
        float(values.min()),
        float(values.max()),
        float(values.mean()),
        float(np.median(values)),
        float(values.std()),
    )


def mst_edge_weights(distances: np.ndarray) -> Tuple[np.ndarray, np.ndarray]:
    """MST edge weights and the (row, col) edge list of a dense distance matrix"""
    n = len(distances)
    graph = distances + _ZERO_EDGE_OFFSET * (1.0 - np.eye(n))
    tree = minimum_spanning_tree(graph).tocoo()
    edges = np.column_stack([tree.row, tree.col])
    return distances[tree.row, tree.col], edges


def tree_depth(edges: np.ndarray, n: int, root: int = 0) -> int:
    """Largest hop count from the root in a spanning tree"""
    adjacency = csr_matrix(
        (np.ones(len(edges)), (edges[:, 0], edges[:, 1])), shape=(n, n)
    )
    order, predecessors = breadth_first_order(
        adjacency, root, directed=False, return_predecessors=True
    )
    depth = np.zeros(n, dtype=int)
    for node in order[1:]:
        depth[node] = depth[predecessors[node]] + 1
    return int(depth.max())


def nng_components(euclidean: np.ndarray, k: int) -> Tuple[int, int]:
    """Weak and strong component counts of the directed k-nearest-neighbor graph"""
    n = len(euclidean)
    k_eff = min(k, n - 1)
    masked = euclidean + np.diag(np.full(n, np.inf))
    neighbors = np.argsort(masked, axis=1, kind="stable")[:, :k_eff]
    rows = np.repeat(np.arange(n), k_eff)
    graph = csr_matrix((np.ones(n * k_eff), (rows, neighbors.ravel())), shape=(n, n))
    weak, _ = connected_components(graph, directed=True, connection="weak")
    strong, _ = connected_components(graph, directed=True, connection="strong")
    return int(weak), int(strong)


def cloud_features(points: np.ndarray) -> Tuple[Dict[str, float], bool]:
    """Feature block of one point cloud; second value marks a degenerate cloud"""
    points = np.asarray(points, dtype=float)
    n = len(points)
    degenerate = n < 2 or bool(np.all(points == points[0]))

    if degenerate:
        values = {name: 0.0 for name in DISTANCE_STATS + MST_STATS}
        values.update({name: 1.0 for name in NNG_STATS})
        return values, True

    euclidean = cdist(points, points)
    distances = np.ceil(euclidean)
    upper = distances[np.triu_indices(n, k=1)]

    values: Dict[str, float] = dict(zip(DISTANCE_STATS, _summary(upper)))

    weights, edges = mst_edge_weights(distances)
    mst_min, mst_max, mst_mean, mst_median, mst_sd = _summary(weights)
    values.update({
        "mst_min": mst_min,
        "mst_max": mst_max,
        "mst_mean": mst_mean,
        "mst_median": mst_median,
        "mst_sd": mst_sd,
        "mst_sum": float(weights.sum()),
        "mst_depth": float(tree_depth(edges, n)),
    })

    for k in KNN_SIZES:
        weak, strong = nng_components(euclidean, k)
        values[f"nng_{k}_weak"] = float(weak)
        values[f"nng_{k}_strong"] = float(strong)

    return values, False


def compute_features(instance: TtpInstance) -> FeatureVector:
    """Fixed-schema feature vector of an instance"""
    values: Dict[str, float] = {}
    flagged: List[str] = []

    for prefix, cloud in zip(CLOUD_PREFIXES, (instance.coord_array(), instance.item_cloud())):
        block, degenerate = cloud_features(cloud)
        for name in CLOUD_FEATURES:
            values[prefix + name] = block[name]
        if degenerate:
            flagged.extend(prefix + name for name in CLOUD_FEATURES)
            logger.warning(f"Degenerate {prefix.rstrip('_')} cloud in instance {instance.name}")

    total_weight = sum(instance.weights)
    values.update({
        "renting_rate": float(instance.renting_rate),
        "capacity": float(instance.capacity),
        "capacity_ratio": float(instance.capacity / total_weight),
        "n_items": float(instance.n_items),
        "n_nodes": float(instance.n_nodes),
        "ipn": float(instance.items_per_node),
    })

    for name in FEATURE_SCHEMA:
        if not np.isfinite(values[name]):
            values[name] = FEATURE_SENTINEL
            if name not in flagged:
                flagged.append(name)

    return FeatureVector(values={name: values[name] for name in FEATURE_SCHEMA}, flagged=flagged)
