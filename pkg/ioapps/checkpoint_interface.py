"""
Module
------

    checkpoint_interface.py

Description
-----------

    This module contains functions to read and write model
    checkpoints; the layout (all integers little-endian) is

        offset  size  type      value
        0       4     bytes     magic b"VTCK"
        4       4     uint32    format version (1)
        8       4     uint32    N, the header length in bytes
        12      N     utf-8     JSON header
        12 + N  ...   float32   parameter blobs, little-endian,
                                row-major, in header order

    The JSON header holds the caller attributes (model configuration,
    alphabets, head presence flags) and the list `params` of
    `{"name": ..., "shape": [...]}` records declaring the blob order.

Functions
---------

    read_checkpoint(path)

        This function reads a checkpoint and returns the header and
        the parameters.

    write_checkpoint(path, header, params)

        This function writes a checkpoint.

Requirements
------------

- numpy; https://numpy.org/

Author(s)
---------

    vtrigger developers; 19 October 2026

"""

# ----

import json
import os
import struct
from collections import OrderedDict
from typing import Dict, Tuple

import numpy

from tools import fileio_interface
from utils.exceptions_interface import CheckpointInterfaceError
from utils.logger_interface import Logger

# ----

# Define all available module properties.
__all__ = ["CHECKPOINT_MAGIC", "CHECKPOINT_VERSION", "read_checkpoint", "write_checkpoint"]

# ----

logger = Logger(caller_name=__name__)

CHECKPOINT_MAGIC = b"VTCK"
CHECKPOINT_VERSION = 1
PREAMBLE = struct.Struct("<4sII")

# ----


def read_checkpoint(path: str) -> Tuple[Dict, "OrderedDict[str, numpy.ndarray]"]:
    """
    Description
    -----------

    This function reads a checkpoint.

    Parameters
    ----------

    path: ``str``

        A Python string specifying the path to the checkpoint.

    Returns
    -------

    header: ``Dict``

        A Python dictionary containing the JSON header.

    params: ``OrderedDict[str, numpy.ndarray]``

        The float32 parameters in declared order.

    Raises
    ------

    CheckpointInterfaceError:

        - raised if the file cannot be read, the magic or version does
          not match, or the blobs are inconsistent with the header.

    """

    try:
        with open(path, "rb") as stream:
            content = stream.read()
    except OSError as errmsg:
        msg = f"Reading checkpoint {path} failed with error {errmsg}. Aborting!!!"
        raise CheckpointInterfaceError(msg=msg) from errmsg
    if len(content) < PREAMBLE.size:
        msg = f"The checkpoint {path} is truncated. Aborting!!!"
        raise CheckpointInterfaceError(msg=msg)
    (magic, version, header_len) = PREAMBLE.unpack_from(content)
    if magic != CHECKPOINT_MAGIC or version != CHECKPOINT_VERSION:
        msg = (
            f"The checkpoint {path} has magic {magic!r} version {version}; expected "
            f"{CHECKPOINT_MAGIC!r} version {CHECKPOINT_VERSION}. Aborting!!!"
        )
        raise CheckpointInterfaceError(msg=msg)
    try:
        header = json.loads(content[PREAMBLE.size : PREAMBLE.size + header_len].decode("utf-8"))
    except (UnicodeDecodeError, ValueError) as errmsg:
        msg = f"The checkpoint {path} header is not valid JSON. Aborting!!!"
        raise CheckpointInterfaceError(msg=msg) from errmsg
    offset = PREAMBLE.size + header_len
    params = OrderedDict()
    for record in header.get("params", []):
        count = int(numpy.prod(record["shape"], dtype=numpy.int64))
        if offset + 4 * count > len(content):
            msg = f"The checkpoint {path} is truncated at parameter {record['name']}. Aborting!!!"
            raise CheckpointInterfaceError(msg=msg)
        blob = numpy.frombuffer(content, dtype="<f4", count=count, offset=offset)
        params[record["name"]] = blob.reshape(record["shape"]).astype(numpy.float32)
        offset += 4 * count
    if offset != len(content):
        msg = f"The checkpoint {path} holds {len(content) - offset} unexpected trailing bytes. Aborting!!!"
        raise CheckpointInterfaceError(msg=msg)

    return (header, params)


# ----


def write_checkpoint(path: str, header: Dict, params: "OrderedDict[str, numpy.ndarray]") -> None:
    """
    Description
    -----------

    This function writes a checkpoint; the `params` declaration of the
    header is derived from `params` and any existing `params` key of
    `header` is replaced.

    Raises
    ------

    CheckpointInterfaceError:

        - raised if the header is not JSON serializable or the file
          cannot be written.

    """

    header = dict(header)
    header["params"] = [{"name": name, "shape": list(value.shape)} for (name, value) in params.items()]
    try:
        header_bytes = json.dumps(header).encode("utf-8")
    except TypeError as errmsg:
        msg = f"The checkpoint header is not JSON serializable ({errmsg}). Aborting!!!"
        raise CheckpointInterfaceError(msg=msg) from errmsg
    fileio_interface.makedirs(path=os.path.dirname(os.path.abspath(path)))
    try:
        with open(path, "wb") as stream:
            stream.write(PREAMBLE.pack(CHECKPOINT_MAGIC, CHECKPOINT_VERSION, len(header_bytes)))
            stream.write(header_bytes)
            for value in params.values():
                stream.write(numpy.ascontiguousarray(value, dtype="<f4").tobytes())
    except OSError as errmsg:
        msg = f"Writing checkpoint {path} failed with error {errmsg}. Aborting!!!"
        raise CheckpointInterfaceError(msg=msg) from errmsg
    logger.debug(msg=f"Wrote checkpoint {path} ({len(params)} tensors).")
