"""
Module
------

    __main__.py

Description
-----------

    This module contains the command-line entry point of the
    voice-trigger rescoring toolkit (`python -m cli <command>`); the
    sub-commands are `synth`, `augment`, `featurize`, `train`,
    `score`, `eval-det` and `demo`.

    A failing command logs a stage-tagged diagnostic and exits with
    the exit code of the exception category: 2 (configuration), 3
    (data), 4 (numerical), 5 (state) or 1 (other).

Functions
---------

    main(argv=None)

        This function runs a sub-command and returns the exit code.

Author(s)
---------

    vtrigger developers; 19 October 2026

"""

# ----

import os
import sys
from types import SimpleNamespace
from typing import List

from cli.commands_interface import COMMANDS
from cli.config_interface import load_config
from utils.decorator_interface import cli_wrapper, script_wrapper, stage_wrapper
from utils.error_interface import Error
from utils.logger_interface import Logger

# ----

# Define all available module properties.
__all__ = ["main"]

# ----

logger = Logger(caller_name=__name__)

SCHEMA_FILE = os.path.join(os.path.dirname(os.path.abspath(__file__)), "schema", "cli.yaml")

DESCRIPTION = "Second-pass voice-trigger rescoring: synthetic data, augmentation, training, scoring and DET evaluation."

# ----


@cli_wrapper(description=DESCRIPTION, schema_file=SCHEMA_FILE, prog="vtrigger")
def _run(options_obj: SimpleNamespace) -> int:
    config = stage_wrapper(stage="config")(load_config)(path=options_obj.config, overrides=options_obj.set)
    command = script_wrapper(script_name=f"vtrigger {options_obj.command}")(COMMANDS[options_obj.command])

    return command(options_obj, config)


def main(argv: List[str] = None) -> int:
    """
    Description
    -----------

    This function parses the command-line arguments, runs the
    selected sub-command and returns its exit code.

    Keywords
    --------

    argv: ``List[str]``, optional

        A Python list of argument strings; if NoneType upon entry the
        process arguments are parsed.

    Returns
    -------

    exit_code: ``int``

        A Python integer containing the exit code.

    """

    try:
        return _run(argv)
    except Error as errmsg:
        stage = getattr(errmsg, "stage", None) or "cli"
        logger.critical(msg=f"The {stage} stage failed ({errmsg.__class__.__name__}): {errmsg.msg}")
        return errmsg.exit_code


# ----


if __name__ == "__main__":
    sys.exit(main())
