"""Instance features package"""
from ttp_engine.features.feature_extractor import (
    FEATURE_SCHEMA,
    cloud_features,
    compute_features,
    mst_edge_weights
)

__all__ = ['FEATURE_SCHEMA', 'cloud_features', 'compute_features', 'mst_edge_weights']
