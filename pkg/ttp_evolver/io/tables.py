"""
CSV Tables - profiles, feature vectors and point-cloud exports as pandas frames
"""
from pathlib import Path
from typing import Sequence, Tuple, Union

import pandas as pd

from shared.models.results import FeatureVector, PerformanceProfile
from shared.models.ttp_models import TtpInstance
from ttp_engine.features.feature_extractor import FEATURE_SCHEMA


def profile_frame(profile: PerformanceProfile) -> pd.DataFrame:
    """One row per solver: run_1..run_k scores and the aggregate"""
    columns = [f"run_{run}" for run in range(1, profile.k + 1)]
    frame = pd.DataFrame(profile.scores, columns=columns)
    frame.insert(0, "solver", profile.solvers)
    frame["median"] = profile.medians
    return frame


def features_frame(named_vectors: Sequence[Tuple[str, FeatureVector]]) -> pd.DataFrame:
    """Header = instance, feature schema, flagged; one row per instance"""
    rows = []
    for name, vector in named_vectors:
        row = {"instance": name}
        row.update({feature: vector.values[feature] for feature in FEATURE_SCHEMA})
        row["flagged"] = ";".join(vector.flagged)
        rows.append(row)
    return pd.DataFrame(rows, columns=["instance", *FEATURE_SCHEMA, "flagged"])


def node_frame(instance: TtpInstance) -> pd.DataFrame:
    frame = pd.DataFrame(instance.coords, columns=["x", "y"])
    frame.insert(0, "node", range(1, instance.n_nodes + 1))
    return frame


def item_frame(instance: TtpInstance) -> pd.DataFrame:
    return pd.DataFrame({
        "item": range(1, instance.n_items + 1),
        "profit": instance.profits,
        "weight": instance.weights,
        "node": [node + 1 for node in instance.availability],
    })


def write_csv(frame: pd.DataFrame, path: Union[str, Path]) -> Path:
    output = Path(path)
    output.parent.mkdir(parents=True, exist_ok=True)
    frame.to_csv(output, index=False)
    return output
