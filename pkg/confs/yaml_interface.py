"""
Module
------

    yaml_interface.py

Description
-----------

    This module contains the interfaces to read and write the
    YAML-formatted experiment configuration files and the command-line
    schema files.

Classes
-------

    YAML()

        This is the base-class object for YAML-formatted file reading
        and writing.

    YAMLLoader()

        This is the base-class object for all YAML file parsing
        interfaces; it is a sub-class of SafeLoader; `${VAR}` strings
        are expanded from the run-time environment and `!INC path`
        includes another YAML-formatted file.

Author(s)
---------

    Henry R. Winterbottom; 29 November 2022

History
-------

    2022-11-29: Henry Winterbottom -- Initial implementation.

    2026-10-19: vtrigger developers -- Errors are raised as
    YAMLInterfaceError (a ConfigError).

"""

# ----

# pylint: disable=too-many-ancestors

# ----

import os
import re
from typing import Any, Dict, Generic

import yaml
from utils.exceptions_interface import YAMLInterfaceError
from utils.logger_interface import Logger
from yaml import SafeLoader, ScalarNode

# ----

# Define all available module properties.
__all__ = ["YAML"]

# ----


class YAMLLoader(SafeLoader):
    """
    Description
    -----------

    This is the base-class object for all YAML file parsing
    interfaces; it is a sub-class of SafeLoader.

    """

    # This follows from the discussion found at
    # https://tinyurl.com/yamlenvparse
    envvar_matcher = re.compile(r".*\$\{([^}^{]+)\}.*")

    def envvar_constructor(self: SafeLoader, node: ScalarNode) -> Any:
        """
        Description
        -----------

        This method is the environment variable template constructor.

        """

        return os.path.expandvars(node.value)

    def include_constructor(self: SafeLoader, node: ScalarNode) -> Any:
        """
        Description
        -----------

        This method is the file inclusion template constructor.

        """

        filename = self.construct_scalar(node)
        with open(filename, "r", encoding="utf-8") as file:
            return yaml.load(file, YAMLLoader)


YAMLLoader.add_implicit_resolver("!ENV", YAMLLoader.envvar_matcher, None)
YAMLLoader.add_constructor("!ENV", YAMLLoader.envvar_constructor)
YAMLLoader.add_constructor("!INC", YAMLLoader.include_constructor)

# ----


class YAML:
    """
    Description
    -----------

    This is the base-class object for YAML-formatted file reading and
    writing.

    """

    def __init__(self: Generic):
        """
        Description
        -----------

        Creates a new YAML object.

        """

        # Define the base-class attributes.
        self.logger = Logger(caller_name=f"{__name__}.{self.__class__.__name__}")

    def read_yaml(self: Generic, yaml_file: str) -> Dict:
        """
        Description
        -----------

        This method ingests a YAML-formatted file and returns a Python
        dictionary containing all attributes of the file.

        Parameters
        ----------

        yaml_file: ``str``

            A Python string containing the full-path to the YAML file
            to be parsed.

        Returns
        -------

        yaml_dict: ``Dict``

            A Python dictionary containing all attributes ingested
            from the YAML-formatted file; an empty file yields an
            empty dictionary.

        Raises
        ------

        YAMLInterfaceError:

            - raised if the file cannot be read or parsed, or if its
              top level is not a mapping.

        """

        # Open and read the contents of the specified YAML-formatted
        # file path.
        msg = f"Reading from YAML-formatted file {yaml_file}."
        self.logger.debug(msg=msg)
        try:
            with open(yaml_file, "r", encoding="utf-8") as stream:
                yaml_dict = yaml.load(stream, Loader=YAMLLoader)
        except (OSError, yaml.YAMLError) as errmsg:
            msg = f"Reading YAML-formatted file {yaml_file} failed with error {errmsg}. Aborting!!!"
            raise YAMLInterfaceError(msg=msg) from errmsg
        if yaml_dict is None:
            yaml_dict = {}
        if not isinstance(yaml_dict, dict):
            msg = f"The YAML-formatted file {yaml_file} does not contain a mapping. Aborting!!!"
            raise YAMLInterfaceError(msg=msg)

        return yaml_dict

    def write_yaml(self: Generic, yaml_file: str, in_dict: Dict) -> None:
        """
        Description
        -----------

        This method writes a YAML-formatted file using the specified
        Python dictionary; keys retain their insertion order.

        Parameters
        ----------

        yaml_file: ``str``

            A Python string containing the full-path to the YAML file
            to be written.

        in_dict: ``Dict``

            A Python dictionary containing the attributes to be
            written to the YAML file.

        """

        with open(yaml_file, "w", encoding="utf-8") as file:
            yaml.safe_dump(in_dict, file, default_flow_style=False, sort_keys=False)
