"""
Module
------

    manifest_interface.py

Description
-----------

    This module contains the dataset manifest; a manifest is a
    JSON-lines file holding one utterance per line:

        {"id": ..., "audio_path": ..., "feature_path": ...,
         "transcript": [phone indices] | "binary_label": "positive"|"negative",
         "variant": "clean"|"reverb"|"reverb_echo"|<condition>,
         "provenance": {"rir_id": ..., "residual_id": ..., "snr_db": ...,
                        "phones": [...], ...},
         "duration_s": ...}

    Exactly one of `transcript` and `binary_label` is present and at
    least one of `audio_path` and `feature_path` is present; relative
    paths are resolved against the manifest directory.

Classes
-------

    ManifestEntry(...)

        This is the base-class object for a single manifest
        utterance.

Functions
---------

    read_manifest(path)

        This function reads and validates a manifest file.

    write_manifest(path, entries)

        This function writes a manifest file.

Author(s)
---------

    vtrigger developers; 19 October 2026

"""

# ----

# pylint: disable=too-many-instance-attributes

# ----

import copy
import os
from dataclasses import dataclass, field
from typing import Dict, List, Optional

from confs.json_interface import read_jsonl, write_jsonl
from tools import fileio_interface
from utils.exceptions_interface import EmptyInputError, JSONInterfaceError, ManifestInterfaceError
from utils.logger_interface import Logger

# ----

# Define all available module properties.
__all__ = ["BINARY_LABELS", "ManifestEntry", "read_manifest", "write_manifest"]

# ----

logger = Logger(caller_name=__name__)

BINARY_LABELS = ("positive", "negative")

# ----


@dataclass
class ManifestEntry:
    """
    Description
    -----------

    This is the base-class object for a single manifest utterance.

    """

    id: str
    audio_path: Optional[str] = None
    feature_path: Optional[str] = None
    transcript: Optional[List[int]] = None
    binary_label: Optional[str] = None
    variant: str = "clean"
    provenance: Dict = field(default_factory=dict)
    duration_s: Optional[float] = None

    def __post_init__(self) -> None:
        if (self.transcript is None) == (self.binary_label is None):
            msg = f"Utterance {self.id} must carry exactly one of transcript and binary_label. Aborting!!!"
            raise ManifestInterfaceError(msg=msg)
        if self.binary_label is not None and self.binary_label not in BINARY_LABELS:
            msg = f"Utterance {self.id} has an unknown binary label {self.binary_label}. Aborting!!!"
            raise ManifestInterfaceError(msg=msg)
        if self.audio_path is None and self.feature_path is None:
            msg = f"Utterance {self.id} references neither audio nor features. Aborting!!!"
            raise ManifestInterfaceError(msg=msg)
        if self.transcript is not None:
            self.transcript = [int(symbol) for symbol in self.transcript]

    @property
    def is_positive(self) -> bool:
        return self.binary_label == "positive"

    def replace(self, **kwargs) -> "ManifestEntry":
        """
        Description
        -----------

        This method returns a copy of the entry with the specified
        attributes replaced; the provenance is deep-copied.

        """

        attrs = copy.deepcopy(self.to_dict())
        attrs.update(kwargs)
        return ManifestEntry(**attrs)

    def to_dict(self) -> Dict:
        record = {"id": self.id}
        for key in ("audio_path", "feature_path", "transcript", "binary_label"):
            if getattr(self, key) is not None:
                record[key] = getattr(self, key)
        record["variant"] = self.variant
        record["provenance"] = self.provenance
        if self.duration_s is not None:
            record["duration_s"] = self.duration_s
        return record

    @classmethod
    def from_dict(cls, record: Dict) -> "ManifestEntry":
        try:
            return cls(**record)
        except TypeError as errmsg:
            msg = f"Invalid manifest record {record}: {errmsg}. Aborting!!!"
            raise ManifestInterfaceError(msg=msg) from errmsg


# ----


def _resolve(path: Optional[str], root: str) -> Optional[str]:
    if path is None or os.path.isabs(path):
        return path
    return os.path.normpath(os.path.join(root, path))


def read_manifest(path: str, allow_empty: bool = False) -> List[ManifestEntry]:
    """
    Description
    -----------

    This function reads and validates a manifest file; relative audio
    and feature paths are resolved against the directory containing
    the manifest.

    Parameters
    ----------

    path: ``str``

        A Python string specifying the path to the manifest file.

    Keywords
    --------

    allow_empty: ``bool``, optional

        A Python boolean valued variable specifying whether an empty
        manifest is accepted.

    Returns
    -------

    entries: ``List[ManifestEntry]``

        A Python list of ManifestEntry objects in file order.

    Raises
    ------

    EmptyInputError:

        - raised if the manifest contains no entries and
          `allow_empty` is False.

    ManifestInterfaceError:

        - raised if the file cannot be read, an entry is invalid or
          an utterance id is repeated.

    """

    if not fileio_interface.fileexist(path=path):
        msg = f"The manifest {path} does not exist. Aborting!!!"
        raise ManifestInterfaceError(msg=msg)
    try:
        records = read_jsonl(jsonl_file=path)
    except JSONInterfaceError as errmsg:
        msg = f"Reading manifest {path} failed with error {errmsg}. Aborting!!!"
        raise ManifestInterfaceError(msg=msg) from errmsg
    root = os.path.dirname(os.path.abspath(path))
    entries = []
    seen = set()
    for record in records:
        entry = ManifestEntry.from_dict(record=record)
        if entry.id in seen:
            msg = f"The utterance id {entry.id} is repeated within {path}. Aborting!!!"
            raise ManifestInterfaceError(msg=msg)
        seen.add(entry.id)
        entry.audio_path = _resolve(entry.audio_path, root)
        entry.feature_path = _resolve(entry.feature_path, root)
        entries.append(entry)
    if not entries and not allow_empty:
        msg = f"The manifest {path} contains no entries. Aborting!!!"
        raise EmptyInputError(msg=msg)
    logger.debug(msg=f"Read {len(entries)} entries from manifest {path}.")

    return entries


# ----


def write_manifest(path: str, entries: List[ManifestEntry]) -> None:
    """
    Description
    -----------

    This function writes a manifest file; audio and feature paths
    located beneath the manifest directory are written relative to
    it.

    """

    root = os.path.dirname(os.path.abspath(path))
    fileio_interface.makedirs(path=root)
    records = []
    for entry in entries:
        record = entry.to_dict()
        for key in ("audio_path", "feature_path"):
            if key in record and os.path.isabs(record[key]):
                relpath = os.path.relpath(record[key], root)
                if not relpath.startswith(os.pardir):
                    record[key] = relpath
        records.append(record)
    write_jsonl(jsonl_file=path, records=records)
    logger.debug(msg=f"Wrote {len(records)} entries to manifest {path}.")
