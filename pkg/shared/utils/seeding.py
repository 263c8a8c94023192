"""
Positional seed derivation
"""
import numpy as np


def derive_seed(base: int, *keys: int) -> int:
    """Derive a child seed from a base seed and a path of integer keys.

    The result depends only on the values, never on call order, so parallel
    workers reproduce the sequential stream exactly.
    """
    sequence = np.random.SeedSequence([int(base), *(int(k) for k in keys)])
    return int(sequence.generate_state(1, dtype=np.uint32)[0])

