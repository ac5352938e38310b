"""
Module
------

    audio_interface.py

Description
-----------

    This module contains functions to read and write mono audio clips;
    16-bit PCM WAV files are handled by the soundfile library and raw
    little-endian float32 files carry their sample rate in a JSON
    sidecar file (`<path>.json`).

Functions
---------

    read_audio(path)

        This function reads an audio clip from a WAV or raw float32
        file.

    write_raw(path, clip)

        This function writes a raw float32 audio file and its JSON
        sidecar.

    write_wav(path, clip)

        This function writes a 16-bit PCM mono WAV file.

Requirements
------------

- numpy; https://numpy.org/

- soundfile; https://github.com/bastibe/python-soundfile

Author(s)
---------

    vtrigger developers; 19 October 2026

"""

# ----

import os

import numpy
import soundfile

from confs.json_interface import read_json, write_json
from frontend.mel_interface import AudioClip
from tools import fileio_interface
from utils.exceptions_interface import AudioInterfaceError, EmptyInputError, JSONInterfaceError
from utils.logger_interface import Logger

# ----

# Define all available module properties.
__all__ = ["read_audio", "write_raw", "write_wav"]

# ----

logger = Logger(caller_name=__name__)

RAW_SUFFIXES = (".raw", ".f32")

# ----


def _sidecar(path: str) -> str:
    return f"{path}.json"


def read_audio(path: str) -> AudioClip:
    """
    Description
    -----------

    This function reads an audio clip; files with the suffix `.raw`
    or `.f32` are parsed as headerless little-endian float32 samples
    whose sample rate is read from the `<path>.json` sidecar
    (`{"sample_rate_hz": ...}`); all other files are read with
    soundfile and must be mono.

    Parameters
    ----------

    path: ``str``

        A Python string specifying the path to the audio file.

    Returns
    -------

    clip: ``AudioClip``

        A Python AudioClip object.

    Raises
    ------

    AudioInterfaceError:

        - raised if the file (or sidecar) cannot be read or the audio
          is not mono.

    EmptyInputError:

        - raised if the file contains no samples.

    """

    if not fileio_interface.fileexist(path=path):
        msg = f"The audio file {path} does not exist. Aborting!!!"
        raise AudioInterfaceError(msg=msg)
    logger.debug(msg=f"Reading audio file {path}.")
    if path.lower().endswith(RAW_SUFFIXES):
        try:
            sample_rate_hz = int(read_json(json_file=_sidecar(path))["sample_rate_hz"])
        except (JSONInterfaceError, KeyError, TypeError, ValueError) as errmsg:
            msg = f"The sample-rate sidecar for {path} is missing or invalid. Aborting!!!"
            raise AudioInterfaceError(msg=msg) from errmsg
        samples = numpy.fromfile(path, dtype="<f4").astype(numpy.float64)
    else:
        try:
            (samples, sample_rate_hz) = soundfile.read(path, dtype="float64", always_2d=False)
        except RuntimeError as errmsg:
            msg = f"Reading audio file {path} failed with error {errmsg}. Aborting!!!"
            raise AudioInterfaceError(msg=msg) from errmsg
        if samples.ndim != 1:
            msg = f"The audio file {path} has {samples.shape[1]} channels; mono is required. Aborting!!!"
            raise AudioInterfaceError(msg=msg)
    if samples.shape[0] == 0:
        msg = f"The audio file {path} contains no samples. Aborting!!!"
        raise EmptyInputError(msg=msg)

    return AudioClip(samples=samples, sample_rate_hz=int(sample_rate_hz))


# ----


def write_raw(path: str, clip: AudioClip) -> None:
    """
    Description
    -----------

    This function writes the clip samples as little-endian float32
    values and the sample rate to the `<path>.json` sidecar.

    """

    fileio_interface.makedirs(path=os.path.dirname(os.path.abspath(path)))
    numpy.asarray(clip.samples, dtype="<f4").tofile(path)
    write_json(json_file=_sidecar(path), in_dict={"sample_rate_hz": int(clip.sample_rate_hz)})


def write_wav(path: str, clip: AudioClip) -> None:
    """
    Description
    -----------

    This function writes a 16-bit PCM mono WAV file; samples outside
    [-1, 1] are clipped.

    Parameters
    ----------

    path: ``str``

        A Python string specifying the path to the WAV file.

    clip: ``AudioClip``

        A Python AudioClip object.

    Raises
    ------

    AudioInterfaceError:

        - raised if the file cannot be written.

    """

    fileio_interface.makedirs(path=os.path.dirname(os.path.abspath(path)))
    samples = numpy.clip(numpy.asarray(clip.samples, dtype=numpy.float64), -1.0, 1.0)
    try:
        soundfile.write(path, samples, int(clip.sample_rate_hz), subtype="PCM_16")
    except (RuntimeError, TypeError) as errmsg:
        msg = f"Writing WAV file {path} failed with error {errmsg}. Aborting!!!"
        raise AudioInterfaceError(msg=msg) from errmsg
