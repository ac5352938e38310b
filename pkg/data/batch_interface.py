"""
Module
------

    batch_interface.py

Description
-----------

    This module contains the batching of manifest utterances: model
    input loading (from feature files or audio), seeded epoch
    permutations with optional length bucketing, and zero-padded
    batches with explicit length vectors.

Classes
-------

    Batch(entries, inputs, lengths, targets)

        This is the base-class object for a zero-padded batch.

    UtteranceSet(entries, frontend_cfg)

        This is the base-class object for a manifest whose model
        inputs are loaded once and held in memory.

Functions
---------

    batch_iterator(entries, batch_size, seed, epoch=0, bucketing=False,
                   lengths=None, pool_batches=20)

        This function yields the batches of one epoch.

    load_batch(entries, frontend_cfg, inputs=None)

        This function builds a zero-padded batch.

    load_model_input(entry, frontend_cfg)

        This function loads the stacked and sub-sampled model input
        of an utterance.

    utterance_target(entry)

        This function returns the CTC target of an utterance.

Requirements
------------

- numpy; https://numpy.org/

Author(s)
---------

    vtrigger developers; 19 October 2026

"""

# ----

# pylint: disable=too-many-arguments

# ----

from dataclasses import dataclass
from typing import Dict, Iterator, List, Optional, Sequence

import numpy

from ctc.ctc_interface import LabelSequence
from frontend.mel_interface import FrontendConfig, ModelInput, compute_features, stack_and_subsample
from ioapps.audio_interface import read_audio
from ioapps.features_interface import read_features
from ioapps.manifest_interface import ManifestEntry
from utils.exceptions_interface import ConfigError, DataInterfaceError, EmptyInputError
from utils.logger_interface import Logger

# ----

# Define all available module properties.
__all__ = [
    "Batch",
    "UtteranceSet",
    "batch_iterator",
    "load_batch",
    "load_model_input",
    "utterance_target",
]

# ----

logger = Logger(caller_name=__name__)

# Discriminative alphabet index of the trigger-phrase symbol.
TRIGGER_SYMBOL = 1

# ----


@dataclass
class Batch:
    """
    Description
    -----------

    This is the base-class object for a zero-padded batch; `inputs`
    is (B x T' x D'), `lengths` (B,) and `targets` holds the CTC
    target of each utterance.

    """

    entries: List[ManifestEntry]
    inputs: numpy.ndarray
    lengths: numpy.ndarray
    targets: List[LabelSequence]

    def __len__(self) -> int:
        return len(self.entries)

    @property
    def ids(self) -> List[str]:
        return [entry.id for entry in self.entries]


# ----


def utterance_target(entry: ManifestEntry) -> LabelSequence:
    """
    Description
    -----------

    This function returns the CTC target of an utterance: the phone
    transcript for phonetic utterances, the single trigger-phrase
    symbol for positive utterances and the empty sequence for
    negative utterances.

    """

    if entry.transcript is not None:
        return LabelSequence(symbols=tuple(entry.transcript))
    return LabelSequence(symbols=(TRIGGER_SYMBOL,) if entry.is_positive else ())


def load_model_input(entry: ManifestEntry, frontend_cfg: FrontendConfig) -> ModelInput:
    """
    Description
    -----------

    This function loads the stacked and sub-sampled model input of an
    utterance; the feature file is used when present, otherwise the
    features are computed from the audio.

    Raises
    ------

    DataInterfaceError:

        - raised if the feature dimension does not match the frontend
          configuration.

    """

    if entry.feature_path is not None:
        feats = read_features(path=entry.feature_path)
    else:
        feats = compute_features(clip=read_audio(path=entry.audio_path), cfg=frontend_cfg)
    if feats.dim != frontend_cfg.n_mels:
        msg = (
            f"Utterance {entry.id} has {feats.dim}-dimensional features; the frontend "
            f"declares {frontend_cfg.n_mels}. Aborting!!!"
        )
        raise DataInterfaceError(msg=msg)

    return stack_and_subsample(feats=feats, context=frontend_cfg.context, factor=frontend_cfg.subsample)


def load_batch(
    entries: Sequence[ManifestEntry],
    frontend_cfg: FrontendConfig,
    inputs: Optional[Dict[str, ModelInput]] = None,
) -> Batch:
    """
    Description
    -----------

    This function builds a zero-padded batch.

    Parameters
    ----------

    entries: ``Sequence[ManifestEntry]``

        The batch utterances.

    frontend_cfg: ``FrontendConfig``

        A Python FrontendConfig object.

    Keywords
    --------

    inputs: ``Dict[str, ModelInput]``, optional

        A Python dictionary of pre-loaded model inputs keyed by
        utterance id; utterances absent from it are loaded.

    Returns
    -------

    batch: ``Batch``

        A Python Batch object.

    Raises
    ------

    EmptyInputError:

        - raised if no entries are specified.

    """

    if not entries:
        msg = "Cannot build a batch from zero utterances. Aborting!!!"
        raise EmptyInputError(msg=msg)
    inputs = inputs or {}
    windows = [
        (inputs[entry.id] if entry.id in inputs else load_model_input(entry, frontend_cfg)).windows
        for entry in entries
    ]
    lengths = numpy.array([window.shape[0] for window in windows], dtype=numpy.int64)
    padded = numpy.zeros((len(windows), int(lengths.max()), windows[0].shape[1]), dtype=numpy.float32)
    for (idx, window) in enumerate(windows):
        padded[idx, : window.shape[0]] = window

    return Batch(
        entries=list(entries),
        inputs=padded,
        lengths=lengths,
        targets=[utterance_target(entry) for entry in entries],
    )


# ----


def batch_iterator(
    entries: Sequence[ManifestEntry],
    batch_size: int,
    seed: int,
    epoch: int = 0,
    bucketing: bool = False,
    lengths: Optional[Sequence[int]] = None,
    pool_batches: int = 20,
) -> Iterator[List[ManifestEntry]]:
    """
    Description
    -----------

    This function yields the batches of one epoch; the epoch order is
    a permutation drawn from (`seed`, `epoch`), so every utterance is
    visited exactly once and the final batch may be short. With
    bucketing, the permuted utterances are split into pools of
    `pool_batches` batches, each pool is sorted by length and cut
    into batches, and the batch order is shuffled.

    Parameters
    ----------

    entries: ``Sequence[ManifestEntry]``

        The manifest utterances.

    batch_size: ``int``

        A Python integer specifying the batch size.

    seed: ``int``

        A Python integer specifying the seed.

    Keywords
    --------

    epoch: ``int``, optional

        A Python integer specifying the epoch index.

    bucketing: ``bool``, optional

        A Python boolean valued variable specifying whether to bucket
        the utterances by length.

    lengths: ``Sequence[int]``, optional

        The length of each utterance; required for bucketing.

    pool_batches: ``int``, optional

        A Python integer specifying the number of batches per sorting
        pool.

    Raises
    ------

    ConfigError:

        - raised if the batch size is not positive or bucketing is
          requested without lengths.

    EmptyInputError:

        - raised if the manifest is empty.

    """

    if batch_size < 1:
        msg = f"The batch size {batch_size} must be positive. Aborting!!!"
        raise ConfigError(msg=msg)
    if not entries:
        msg = "Cannot iterate over an empty manifest. Aborting!!!"
        raise EmptyInputError(msg=msg)
    if bucketing and (lengths is None or len(lengths) != len(entries)):
        msg = "Length bucketing requires the length of every utterance. Aborting!!!"
        raise ConfigError(msg=msg)
    rng = numpy.random.default_rng([int(seed), int(epoch)])
    order = rng.permutation(len(entries))
    if not bucketing:
        batches = [order[start : start + batch_size] for start in range(0, len(order), batch_size)]
    else:
        lengths = numpy.asarray(lengths)
        pool_size = batch_size * pool_batches
        batches = []
        for start in range(0, len(order), pool_size):
            pool = order[start : start + pool_size]
            pool = pool[numpy.argsort(lengths[pool], kind="stable")]
            batches += [pool[idx : idx + batch_size] for idx in range(0, len(pool), batch_size)]
        batches = [batches[idx] for idx in rng.permutation(len(batches))]
    for batch in batches:
        yield [entries[idx] for idx in batch]


# ----


class UtteranceSet:
    """
    Description
    -----------

    This is the base-class object for a manifest whose model inputs
    are loaded once and held in memory.

    Parameters
    ----------

    entries: ``Sequence[ManifestEntry]``

        The manifest utterances.

    frontend_cfg: ``FrontendConfig``

        A Python FrontendConfig object.

    """

    def __init__(self, entries: Sequence[ManifestEntry], frontend_cfg: FrontendConfig):
        """
        Description
        -----------

        Creates a new UtteranceSet object.

        """

        # Define the base-class attributes.
        self.entries = list(entries)
        self.frontend_cfg = frontend_cfg
        self.inputs = {entry.id: load_model_input(entry, frontend_cfg) for entry in self.entries}
        self.lengths = numpy.array([self.inputs[entry.id].num_frames for entry in self.entries])
        logger.debug(msg=f"Loaded the model inputs of {len(self.entries)} utterances.")

    def __len__(self) -> int:
        return len(self.entries)

    def batch(self, entries: Sequence[ManifestEntry]) -> Batch:
        return load_batch(entries=entries, frontend_cfg=self.frontend_cfg, inputs=self.inputs)

    def batches(
        self, batch_size: int, seed: int, epoch: int = 0, bucketing: bool = False
    ) -> Iterator[Batch]:
        """
        Description
        -----------

        This method yields the padded batches of one epoch; see
        `batch_iterator`.

        """

        for entries in batch_iterator(
            self.entries, batch_size, seed, epoch=epoch, bucketing=bucketing, lengths=self.lengths
        ):
            yield self.batch(entries=entries)
