"""
Module
------

    featurize_interface.py

Description
-----------

    This module contains the manifest featurization: the log-mel
    features of every audio utterance of a manifest are computed and
    written to feature files.

Functions
---------

    featurize_manifest(entries, cfg, out_dir, workers=1)

        This function featurizes the audio utterances of a manifest.

Author(s)
---------

    vtrigger developers; 19 October 2026

"""

# ----

import os
from concurrent.futures import ThreadPoolExecutor
from typing import List, Sequence

from frontend.mel_interface import FrontendConfig, compute_features
from ioapps.audio_interface import read_audio
from ioapps.features_interface import write_features
from ioapps.manifest_interface import ManifestEntry
from tools.fileio_interface import makedirs
from utils.exceptions_interface import Error
from utils.logger_interface import Logger

# ----

# Define all available module properties.
__all__ = ["featurize_manifest"]

# ----

logger = Logger(caller_name=__name__)

# ----


def _featurize(entry: ManifestEntry, cfg: FrontendConfig, out_dir: str) -> ManifestEntry:
    if entry.audio_path is None:
        logger.debug(msg=f"Utterance {entry.id} has no audio; its feature file {entry.feature_path} is kept.")
        return entry
    try:
        feats = compute_features(clip=read_audio(path=entry.audio_path), cfg=cfg)
    except Error as errmsg:
        errmsg.msg = f"utterance {entry.id}: {errmsg.msg}"
        raise
    path = os.path.join(out_dir, f"{entry.id}.vtf")
    write_features(path=path, feats=feats)

    return entry.replace(feature_path=path)


def featurize_manifest(
    entries: Sequence[ManifestEntry], cfg: FrontendConfig, out_dir: str, workers: int = 1
) -> List[ManifestEntry]:
    """
    Description
    -----------

    This function computes the features of every audio utterance,
    writes them to `<out_dir>/<id>.vtf` and returns the entries with
    `feature_path` set; utterances without audio are returned
    unchanged.

    Parameters
    ----------

    entries: ``Sequence[ManifestEntry]``

        The manifest utterances.

    cfg: ``FrontendConfig``

        A Python FrontendConfig object.

    out_dir: ``str``

        A Python string specifying the feature file directory.

    Keywords
    --------

    workers: ``int``, optional

        A Python integer specifying the number of featurization
        threads; the output order is the input order.

    Returns
    -------

    featurized: ``List[ManifestEntry]``

        The featurized manifest utterances.

    """

    makedirs(path=out_dir)
    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as executor:
            featurized = list(executor.map(lambda entry: _featurize(entry, cfg, out_dir), entries))
    else:
        featurized = [_featurize(entry=entry, cfg=cfg, out_dir=out_dir) for entry in entries]
    logger.info(msg=f"Featurized {len(featurized)} utterances into {out_dir}.")

    return featurized
