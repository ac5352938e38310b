"""
Module
------

    cli_interface.py

Description
-----------

    This module contains functions to be used for any command line
    interface (CLI) argument collection(s); the parser and its
    sub-commands are built from a YAML-formatted schema file.

Classes
-------

   CLIParser(schema_file)

       This is the base-class object for the command-line interface
       (CLI) argument schema; valid argument keys can be found at
       https://tinyurl.com/argparse-objects.

Functions
---------

    init(cli_obj, description = None, prog = None, epilog = None,
         formatter_class=RichHelpFormatter)

        This function initializes a Python ArgumentParser object (and
        sub-command parsers) in accordance with the CLI schema.

    options(parser, argv=None)

        This function defines a Python SimpleNamespace object
        containing the parsed CLI arguments.

Requirements
------------

- rich_argparse; https://github.com/hamdanal/rich-argparse

Author(s)
---------

    Henry R. Winterbottom; 04 June 2023

History
-------

    2023-06-04: Henry Winterbottom -- Initial implementation.

    2026-10-19: vtrigger developers -- Sub-commands are built from
    the YAML-formatted schema; parsing errors raise CLIInterfaceError.

"""

# ----

# pylint: disable=too-few-public-methods

# ----

import copy
from argparse import ArgumentParser
from pydoc import locate
from types import SimpleNamespace
from typing import Any, Dict, Generic, List

from rich_argparse import RichHelpFormatter

from confs.yaml_interface import YAML
from tools import fileio_interface
from utils.exceptions_interface import CLIInterfaceError

# ----

# Define all available module properties.
__all__ = ["CLIParser", "init", "options"]

# ----

# Set the default ArgumentParser formatter class attributes.
RichHelpFormatter.styles["argparse.args"] = "green"
RichHelpFormatter.styles["argparse.metavar"] = "cyan"
RichHelpFormatter.styles["argparse.text"] = "default"
RichHelpFormatter.styles["argparse.help"] = "blue_violet"

# Schema keys passed through to ArgumentParser.add_argument.
PASSTHROUGH_KEYS = ["action", "choices", "default", "help", "metavar", "nargs", "required"]

# ----


class CLIParser:
    """
    Description
    -----------

    This is the base-class object for the command-line interface (CLI)
    argument schema; the YAML-formatted schema holds a `common`
    mapping of arguments shared by every sub-command and a
    `subcommands` mapping of `{help, arguments}` blocks.

    Parameters
    ----------

    schema_file: ``str``

        A Python string specifying the path to the YAML-formatted CLI
        schema.

    Raises
    ------

    CLIInterfaceError:

        - raised if the CLI schema file does not exist or does not
          define any sub-commands.

    """

    def __init__(self: Generic, schema_file: str):
        """
        Description
        -----------

        Creates a new CLIParser object.

        """

        # Define the base-class attributes.
        if not fileio_interface.fileexist(path=schema_file):
            msg = f"The CLI schema file {schema_file} does not exist. Aborting!!!"
            raise CLIInterfaceError(msg=msg)
        self.cli_dict = YAML().read_yaml(yaml_file=schema_file)
        if not self.cli_dict.get("subcommands"):
            msg = f"The CLI schema file {schema_file} does not define any subcommands. Aborting!!!"
            raise CLIInterfaceError(msg=msg)

    def build(self: Generic) -> SimpleNamespace:
        """
        Description
        -----------

        This method merges the common arguments into each sub-command
        and returns the CLI attributes.

        Returns
        -------

        cli_obj: ``SimpleNamespace``

            A Python SimpleNamespace object with the attribute
            `subcommands`; a Python dictionary mapping each
            sub-command name to its `help` string and `arguments`
            dictionary.

        """

        common = self.cli_dict.get("common") or {}
        subcommands = {}
        for (name, sub_dict) in self.cli_dict["subcommands"].items():
            sub_dict = sub_dict or {}
            arguments = copy.deepcopy(common)
            arguments.update(sub_dict.get("arguments") or {})
            subcommands[name] = {"help": sub_dict.get("help"), "arguments": arguments}

        return SimpleNamespace(subcommands=subcommands)


# ----


def _add_argument(parser: ArgumentParser, arg_key: str, arg_dict: Dict) -> None:
    arg_kwargs = {key: value for (key, value) in arg_dict.items() if key in PASSTHROUGH_KEYS}
    if "type" in arg_dict:
        dtype = locate(str(arg_dict["type"]))
        if dtype is None:
            msg = f"The argument type {arg_dict['type']} for {arg_key} cannot be located. Aborting!!!"
            raise CLIInterfaceError(msg=msg)
        arg_kwargs["type"] = dtype
    flags = [f"--{arg_dict.get('longname', arg_key)}"]
    if arg_dict.get("shortname") is not None:
        flags.append(f"-{arg_dict['shortname']}")
    try:
        parser.add_argument(*flags, **arg_kwargs)
    except (TypeError, ValueError) as errmsg:
        msg = f"Defining the parser attributes for {arg_key} failed with error {errmsg}. Aborting!!!"
        raise CLIInterfaceError(msg=msg) from errmsg


def init(
    cli_obj: SimpleNamespace,
    description: str = None,
    prog: str = None,
    epilog: str = None,
    formatter_class: Any = RichHelpFormatter,
) -> ArgumentParser:
    """
    Description
    -----------

    This function initializes a Python ArgumentParser object and one
    sub-command parser per schema sub-command; the selected
    sub-command is stored as the attribute `command`.

    Parameters
    ----------

    cli_obj: ``SimpleNamespace``

        A Python SimpleNamespace object returned by `CLIParser.build`.

    Keywords
    --------

    description: ``str``, optional

        A Python string defining the purpose of the respective
        application/program.

    prog: ``str``, optional

        A Python string specifying the program name.

    epilog: ``str``, optional

        A Python string specifying text to be provided at the bottom
        of a `help` type message.

    formatter_class: ``Any``, optional

        A Python Argparse customizing class.

    Returns
    -------

    parser: ``ArgumentParser``

        A Python ArgumentParser object.

    Raises
    ------

    CLIInterfaceError:

        - raised if an argument attribute cannot be defined.

    """

    # Initialize the CLI.
    parser = ArgumentParser(
        prog=prog,
        description=description,
        epilog=epilog,
        formatter_class=formatter_class,
    )
    subparsers = parser.add_subparsers(dest="command", metavar="COMMAND")
    subparsers.required = True
    for (name, sub_dict) in cli_obj.subcommands.items():
        subparser = subparsers.add_parser(
            name, help=sub_dict["help"], description=sub_dict["help"], formatter_class=formatter_class
        )
        for (arg_key, arg_dict) in sub_dict["arguments"].items():
            _add_argument(parser=subparser, arg_key=arg_key, arg_dict=arg_dict or {})

    return parser


# ----


def options(parser: ArgumentParser, argv: List[str] = None) -> SimpleNamespace:
    """
    Description
    -----------

    This function defines a Python SimpleNamespace object containing
    the parsed CLI arguments.

    Parameters
    ----------

    parser: ``ArgumentParser``

        A Python ArgumentParser object containing the CLI arguments.

    Keywords
    --------

    argv: ``List[str]``, optional

        A Python list of argument strings; if NoneType upon entry the
        process arguments are parsed.

    Returns
    -------

    options_obj: ``SimpleNamespace``

        A Python SimpleNamespace object containing the parsed
        arguments.

    Raises
    ------

    CLIInterfaceError:

        - raised if the arguments cannot be parsed.

    """

    try:
        args_obj = parser.parse_args(args=argv)
    except SystemExit as errmsg:
        if errmsg.code in (0, None):
            raise
        msg = f"Parsing the command-line arguments {argv} failed. Aborting!!!"
        raise CLIInterfaceError(msg=msg) from errmsg

    return SimpleNamespace(**vars(args_obj))
