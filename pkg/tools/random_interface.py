"""
Module
------

    random_interface.py

Description
-----------

    This module fans a single root seed out to independent,
    reproducible per-stage random number generators.

Functions
---------

    stage_rng(root_seed, stage)

        This function returns a numpy Generator for the named stage.

    stage_seed(root_seed, stage)

        This function derives a 32-bit seed for the named stage.

Author(s)
---------

    vtrigger developers; 19 October 2026

"""

# ----

import hashlib

import numpy

# ----

# Define all available module properties.
__all__ = ["stage_rng", "stage_seed"]

# ----


def stage_seed(root_seed: int, stage: str) -> int:
    """
    Description
    -----------

    This function derives a 32-bit seed for the named stage from the
    root seed; the derivation is a hash so that stages do not share
    streams.

    Parameters
    ----------

    root_seed: ``int``

        A Python integer specifying the root seed.

    stage: ``str``

        A Python string specifying the stage name (e.g., `synth`,
        `augment`, `train.baseline`).

    Returns
    -------

    seed: ``int``

        A Python integer containing the stage seed.

    """

    digest = hashlib.sha256(f"{int(root_seed)}:{stage}".encode("utf-8")).digest()
    seed = int.from_bytes(digest[:4], "little")

    return seed


# ----


def stage_rng(root_seed: int, stage: str) -> numpy.random.Generator:
    """
    Description
    -----------

    This function returns a numpy Generator seeded for the named
    stage.

    """

    return numpy.random.default_rng(stage_seed(root_seed=root_seed, stage=stage))
