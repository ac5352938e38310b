"""
Module
------

    parser_interface.py

Description
-----------

    This module contains functions to perform various tasks which
    involve the parsing of dictionaries and the command-line
    overrides of the experiment configurations.

Functions
---------

    dict_set_dotted(in_dict, dotted_key, value)

        This function assigns a value within a nested Python
        dictionary using a dotted key path (e.g., `train.seed`).

    parse_override(override)

        This function splits a `section.key=value` override string
        and parses the value as YAML.

Author(s)
---------

    Henry R. Winterbottom; 21 August 2022

History
-------

    2022-08-21: Henry Winterbottom -- Initial implementation.

    2026-10-19: vtrigger developers -- Replaced the dictionary and
    environment helpers with the dotted override parsing.

"""

# ----

import copy
from typing import Any, Dict, Tuple

import yaml
from utils.exceptions_interface import ConfigError

# ----

# Define all available module properties.
__all__ = [
    "dict_set_dotted",
    "parse_override",
]

# ----


def dict_set_dotted(in_dict: Dict, dotted_key: str, value: Any) -> Dict:
    """
    Description
    -----------

    This function assigns a value within a nested Python dictionary
    using a dotted key path; intermediate dictionaries are created as
    required.

    Parameters
    ----------

    in_dict: ``Dict``

        A Python dictionary to be updated.

    dotted_key: ``str``

        A Python string specifying the dotted key path (e.g.,
        `train.learning_rate`).

    value: ``Any``

        The value to be assigned.

    Returns
    -------

    out_dict: ``Dict``

        A Python dictionary containing the updated attributes.

    Raises
    ------

    ConfigError:

        - raised if an intermediate key path refers to a non-dictionary
          value.

    """

    # Walk the dotted key path and assign the value.
    out_dict = copy.deepcopy(in_dict)
    keys = dotted_key.split(".")
    node = out_dict
    for key in keys[:-1]:
        node = node.setdefault(key, {})
        if not isinstance(node, dict):
            msg = (
                f"The override key {dotted_key} traverses the non-mapping value "
                f"{key}. Aborting!!!"
            )
            raise ConfigError(msg=msg)
    node[keys[-1]] = value

    return out_dict


# ----


def parse_override(override: str) -> Tuple[str, Any]:
    """
    Description
    -----------

    This function splits a `section.key=value` override string and
    parses the value as YAML (e.g., `3` is an integer, `[1, 2]` a
    list, `true` a boolean).

    Parameters
    ----------

    override: ``str``

        A Python string containing the override.

    Returns
    -------

    dotted_key: ``str``

        A Python string containing the dotted key path.

    value: ``Any``

        The parsed override value.

    Raises
    ------

    ConfigError:

        - raised if the override is not of the form `key=value`.

    """

    # Split and parse the override.
    if "=" not in override:
        msg = f"The override {override} is not of the form key=value. Aborting!!!"
        raise ConfigError(msg=msg)
    (dotted_key, raw) = override.split("=", 1)
    try:
        value = yaml.safe_load(raw)
    except yaml.YAMLError as errmsg:
        msg = f"The override value {raw} could not be parsed: {errmsg}. Aborting!!!"
        raise ConfigError(msg=msg) from errmsg

    return (dotted_key.strip(), value)
