"""
Module
------

    features_interface.py

Description
-----------

    This module contains functions to read and write feature sequence
    files; the layout is a 16-byte little-endian header

        offset  size  type      value
        0       4     bytes     magic b"VTFS"
        4       4     uint32    T (number of frames)
        8       4     uint32    D (frame dimension)
        12      4     float32   frame rate (frames-per-second)

    followed by T x D float32 little-endian values in row-major
    (frame-major) order.

Functions
---------

    read_features(path)

        This function reads a feature sequence file.

    write_features(path, feats)

        This function writes a feature sequence file.

Requirements
------------

- numpy; https://numpy.org/

Author(s)
---------

    vtrigger developers; 19 October 2026

"""

# ----

import os
import struct

import numpy

from frontend.mel_interface import FeatureSequence
from tools import fileio_interface
from utils.exceptions_interface import FeaturesInterfaceError
from utils.logger_interface import Logger

# ----

# Define all available module properties.
__all__ = ["FEATURES_MAGIC", "read_features", "write_features"]

# ----

logger = Logger(caller_name=__name__)

FEATURES_MAGIC = b"VTFS"
HEADER = struct.Struct("<4sIIf")

# ----


def read_features(path: str) -> FeatureSequence:
    """
    Description
    -----------

    This function reads a feature sequence file.

    Parameters
    ----------

    path: ``str``

        A Python string specifying the path to the feature file.

    Returns
    -------

    feats: ``FeatureSequence``

        A Python FeatureSequence object; the frames are float32.

    Raises
    ------

    FeaturesInterfaceError:

        - raised if the file cannot be read, the magic does not match
          or the payload size is inconsistent with the header.

    """

    try:
        with open(path, "rb") as stream:
            header = stream.read(HEADER.size)
            payload = stream.read()
    except OSError as errmsg:
        msg = f"Reading feature file {path} failed with error {errmsg}. Aborting!!!"
        raise FeaturesInterfaceError(msg=msg) from errmsg
    if len(header) != HEADER.size:
        msg = f"The feature file {path} is truncated. Aborting!!!"
        raise FeaturesInterfaceError(msg=msg)
    (magic, nframes, dim, fps) = HEADER.unpack(header)
    if magic != FEATURES_MAGIC:
        msg = f"The feature file {path} has magic {magic!r}; expected {FEATURES_MAGIC!r}. Aborting!!!"
        raise FeaturesInterfaceError(msg=msg)
    if len(payload) != 4 * nframes * dim:
        msg = (
            f"The feature file {path} holds {len(payload)} payload bytes; the header "
            f"declares {nframes} x {dim} float32 values. Aborting!!!"
        )
        raise FeaturesInterfaceError(msg=msg)
    frames = numpy.frombuffer(payload, dtype="<f4").reshape(nframes, dim).astype(numpy.float32)

    return FeatureSequence(frames=frames, frame_rate_fps=float(fps))


# ----


def write_features(path: str, feats: FeatureSequence) -> None:
    """
    Description
    -----------

    This function writes a feature sequence file; the frames are
    stored as float32.

    Raises
    ------

    FeaturesInterfaceError:

        - raised if the frames are not a 2-D array or the file cannot
          be written.

    """

    frames = numpy.asarray(feats.frames)
    if frames.ndim != 2:
        msg = f"The feature frames must be a 2-D array; received shape {frames.shape}. Aborting!!!"
        raise FeaturesInterfaceError(msg=msg)
    fileio_interface.makedirs(path=os.path.dirname(os.path.abspath(path)))
    try:
        with open(path, "wb") as stream:
            stream.write(HEADER.pack(FEATURES_MAGIC, frames.shape[0], frames.shape[1], feats.frame_rate_fps))
            stream.write(numpy.ascontiguousarray(frames, dtype="<f4").tobytes())
    except OSError as errmsg:
        msg = f"Writing feature file {path} failed with error {errmsg}. Aborting!!!"
        raise FeaturesInterfaceError(msg=msg) from errmsg
    logger.debug(msg=f"Wrote {frames.shape[0]} x {frames.shape[1]} features to {path}.")
