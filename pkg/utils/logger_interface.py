"""
Module
------

    logger_interface.py

Description
-----------

    This module contains the logger object used by all vtrigger
    packages; it is a thin wrapper around the Python logging package
    providing colored level formats, a custom STATUS level, and an
    optional run-directory log file.

Classes
-------

    Logger(caller_name=None)

        This is the base-class for all Python logging instances.

Author(s)
---------

    Henry R. Winterbottom; 09 February 2022

History
-------

    2023-02-09: Henry Winterbottom -- Initial implementation.

    2026-10-19: vtrigger developers -- Replaced the per-message
    logging reload with named loggers and shared handlers; added the
    STATUS level, the `VTRIGGER_LOGLEVEL` threshold and log files.

"""

# ----

# pylint: disable=missing-function-docstring

# ----

import logging
import os
import sys
from typing import Dict, Generic

# ----

# Define all available module properties.
__all__ = ["Logger"]

# ----

STATUS = 25
logging.addLevelName(STATUS, "STATUS")

LOG_FORMAT = "%(asctime)s :: %(levelname)s :: %(message)s"
DATE_FORMAT = "%Y-%m-%d %H:%M:%S"

COLORS_DICT = {
    "CRITICAL": "\x1b[1;41m",
    "DEBUG": "\x1b[38;5;46m",
    "INFO": "\x1b[37;21m",
    "ERROR": "\x1b[1;41m",
    "WARNING": "\x1b[38;5;226m",
    "STATUS": "\033[1;36m",
    "RESET": "\x1b[0m",
}

# Handlers are shared across all Logger instances; a file path is
# attached at most once.
_FILE_HANDLERS: Dict[str, logging.Handler] = {}

# ----


class _ColorFormatter(logging.Formatter):
    """
    Description
    -----------

    This is the base-class object for the colored stdout format; the
    color is selected by the level name of each record.

    """

    def format(self: logging.Formatter, record: logging.LogRecord) -> str:
        color = COLORS_DICT.get(record.levelname, COLORS_DICT["INFO"])
        return color + super().format(record) + COLORS_DICT["RESET"]


def _root() -> logging.Logger:
    root = logging.getLogger("vtrigger")
    if not root.handlers:
        handler = logging.StreamHandler(stream=sys.stdout)
        handler.setFormatter(_ColorFormatter(fmt=LOG_FORMAT, datefmt=DATE_FORMAT))
        root.addHandler(handler)
        root.propagate = False
    loglev = os.environ.get("VTRIGGER_LOGLEVEL", "INFO").upper()
    root.setLevel(logging.getLevelName(loglev) if loglev in COLORS_DICT else logging.INFO)
    return root


# ----


class Logger:
    """
    Description
    -----------

    This is the base-class object for all logger-type messages.

    Keywords
    --------

    caller_name: ``str``

        A Python string usually designating the caller instance name
        to be prepended to the message string (`msg`); if NoneType
        upon entry the `msg` is not modified.

    """

    def __init__(self: Generic, caller_name: str = None):
        """
        Description
        -----------

        Creates a new Logger object.

        """

        # Define the base-class attributes.
        self.caller_name = caller_name
        suffix = caller_name if caller_name is not None else "main"
        self.log = _root().getChild(suffix)

    @staticmethod
    def add_file(path: str) -> None:
        """
        Description
        -----------

        This method attaches a plain-text log file (no colors) to all
        vtrigger loggers; repeated calls with the same path are
        ignored.

        Parameters
        ----------

        path: ``str``

            A Python string specifying the path of the log file.

        """

        path = os.path.abspath(path)
        if path in _FILE_HANDLERS:
            return
        handler = logging.FileHandler(path, encoding="utf-8")
        handler.setFormatter(logging.Formatter(fmt=LOG_FORMAT, datefmt=DATE_FORMAT))
        _root().addHandler(handler)
        _FILE_HANDLERS[path] = handler

    @staticmethod
    def remove_file(path: str) -> None:
        handler = _FILE_HANDLERS.pop(os.path.abspath(path), None)
        if handler is not None:
            _root().removeHandler(handler)
            handler.close()

    def write(self: Generic, level: int, msg: str) -> None:
        """
        Description
        -----------

        This method writes the logger message in accordance with the
        logging level specified upon entry.

        Parameters
        ----------

        level: ``int``

            A Python integer defining the logging level.

        msg: ``str``

            A Python string containing a message to accompany the
            logging level.

        """

        if self.caller_name is not None:
            msg = f"{self.caller_name}: " + msg
        self.log.log(level, msg)

    def critical(self: Generic, msg: str) -> None:
        self.write(level=logging.CRITICAL, msg=msg)

    def debug(self: Generic, msg: str) -> None:
        self.write(level=logging.DEBUG, msg=msg)

    def error(self: Generic, msg: str) -> None:
        self.write(level=logging.ERROR, msg=msg)

    def info(self: Generic, msg: str) -> None:
        self.write(level=logging.INFO, msg=msg)

    def status(self: Generic, msg: str) -> None:
        self.write(level=STATUS, msg=msg)

    def warn(self: Generic, msg: str) -> None:
        self.write(level=logging.WARNING, msg=msg)
