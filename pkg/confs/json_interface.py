"""
Module
------

    json_interface.py

Description
-----------

    This module contains functions to read and write JavaScript Object
    Notation (JSON) formatted files, including the JSON-lines layout
    (one object per line) used by the dataset manifests.

Functions
---------

    read_json(json_file)

        This function ingests a JSON-formatted file and returns a
        Python dictionary.

    read_jsonl(jsonl_file)

        This function ingests a JSON-lines formatted file and returns
        a Python list of dictionaries.

    write_json(json_file, in_dict, indent=4)

        This function writes a JSON-formatted file.

    write_jsonl(jsonl_file, records)

        This function writes a JSON-lines formatted file.

Author(s)
---------

    Henry R. Winterbottom; 27 December 2022

History
-------

    2022-12-27: Henry Winterbottom -- Initial implementation.

    2026-10-19: vtrigger developers -- Added the JSON-lines read
    and write functions.

"""

# ----

import json
from typing import Dict, Iterable, List

from utils.exceptions_interface import JSONInterfaceError
from utils.logger_interface import Logger

# ----

# Define all available module properties.
__all__ = ["read_json", "read_jsonl", "write_json", "write_jsonl"]

# ----

logger = Logger(caller_name=__name__)

# ----


def read_json(json_file: str) -> Dict:
    """
    Description
    -----------

    This function ingests a JSON-formatted file and returns a Python
    dictionary containing all attributes of the file.

    Parameters
    ----------

    json_file: ``str``

        A Python string containing the full-path to the JSON file to
        be parsed.

    Returns
    -------

    json_dict: ``Dict``

        A Python dictionary containing all attributes contained within
        the ingested JSON file.

    Raises
    ------

    JSONInterfaceError:

        - raised is an exception is encountered while reading from the
          JSON-formatted file specified upon entry.

    """

    msg = f"Reading from JSON-formatted file {json_file}."
    logger.debug(msg=msg)
    try:
        with open(json_file, "r", encoding="utf-8") as stream:
            json_dict = json.load(stream)
    except (OSError, ValueError) as errmsg:
        msg = f"Reading JSON-formatted file {json_file} failed with error {errmsg}. Aborting!!!"
        raise JSONInterfaceError(msg=msg) from errmsg

    return json_dict


# ----


def read_jsonl(jsonl_file: str) -> List[Dict]:
    """
    Description
    -----------

    This function ingests a JSON-lines formatted file; blank lines are
    ignored.

    Parameters
    ----------

    jsonl_file: ``str``

        A Python string containing the full-path to the JSON-lines
        file to be parsed.

    Returns
    -------

    records: ``List[Dict]``

        A Python list containing one dictionary per (non-blank) line.

    Raises
    ------

    JSONInterfaceError:

        - raised if the file cannot be read or a line is not a valid
          JSON object.

    """

    records = []
    try:
        with open(jsonl_file, "r", encoding="utf-8") as stream:
            for (lineno, line) in enumerate(stream, start=1):
                if not line.strip():
                    continue
                try:
                    records.append(json.loads(line))
                except ValueError as errmsg:
                    msg = (
                        f"Line {lineno} of {jsonl_file} is not a valid JSON object "
                        f"({errmsg}). Aborting!!!"
                    )
                    raise JSONInterfaceError(msg=msg) from errmsg
    except OSError as errmsg:
        msg = f"Reading JSON-lines file {jsonl_file} failed with error {errmsg}. Aborting!!!"
        raise JSONInterfaceError(msg=msg) from errmsg

    return records


# ----


def write_json(json_file: str, in_dict: Dict, indent: int = 4) -> None:
    """
    Description
    -----------

    This function writes a JSON-formatted file using the specified
    Python dictionary.

    Parameters
    ----------

    json_file: ``str``

        A Python string containing the full-path to the JSON file to
        be written.

    in_dict: ``Dict``

        A Python dictionary containing the attributes to be written to
        the JSON file.

    Keywords
    --------

    indent: ``int``, optional

        A Python integer defining the indentation level for the
        attributes within the JSON-formatted file.

    Raises
    ------

    JSONInterfaceError:

        - raised is an exception is encountered while writing to the
          JSON-formatted file specified upon entry.

    """

    msg = f"Writing to JSON-formatted file {json_file}."
    logger.debug(msg=msg)
    try:
        with open(json_file, "w", encoding="utf-8") as file:
            json.dump(in_dict, file, indent=indent)
    except (OSError, TypeError) as errmsg:
        msg = f"Writing JSON-formatted file {json_file} failed with error {errmsg}. Aborting!!!"
        raise JSONInterfaceError(msg=msg) from errmsg


# ----


def write_jsonl(jsonl_file: str, records: Iterable[Dict]) -> None:
    """
    Description
    -----------

    This function writes a JSON-lines formatted file; keys are
    written in insertion order and each object occupies one line.

    Parameters
    ----------

    jsonl_file: ``str``

        A Python string containing the full-path to the JSON-lines
        file to be written.

    records: ``Iterable[Dict]``

        The dictionaries to be written.

    Raises
    ------

    JSONInterfaceError:

        - raised is an exception is encountered while writing.

    """

    try:
        with open(jsonl_file, "w", encoding="utf-8") as file:
            for record in records:
                file.write(json.dumps(record) + "\n")
    except (OSError, TypeError) as errmsg:
        msg = f"Writing JSON-lines file {jsonl_file} failed with error {errmsg}. Aborting!!!"
        raise JSONInterfaceError(msg=msg) from errmsg
