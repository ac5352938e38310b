"""
Module
------

    schema_interface.py

Description
-----------

    This module contains functions to validate configuration sections
    and command-line attributes against schema-library definitions.

Functions
---------

    __buildtbl__(cls_opts, defaults, logger_method)

        This function compiles and writes a table of the validated
        attributes using the defined logger method.

    validate_schema(cls_schema, cls_opts, ignore_extra_keys=False,
                    write_table=False, logger_method="info",
                    section=None)

        This function validates the specified options against the
        specified schema; schema optional values (denoted as
        `Optional` instances) are assigned default values when the
        options do not define a corresponding value.

    positive(dtype)

        This function returns a schema which coerces a value to the
        specified type and requires it to be strictly positive.

Requirements
------------

- schema; https://github.com/keleshev/schema

Author(s)
---------

    Henry R. Winterbottom; 27 December 2022

History
-------

    2022-12-27: Henry Winterbottom -- Initial implementation.

    2026-10-19: vtrigger developers -- Defaults are deep-copied and
    coerced values returned; removed `build_schema`.

"""

# ----

# pylint: disable=too-many-arguments

# ----

import copy
from typing import Any, Dict, List

from schema import And, Optional, Schema, SchemaError, Use

from utils.exceptions_interface import SchemaInterfaceError
from utils.logger_interface import Logger
from utils.table_interface import compose, init_table

# ----

# Define all available module properties.
__all__ = ["positive", "validate_schema"]

# ----

logger = Logger(caller_name=__name__)

# ----


def __buildtbl__(cls_opts: Dict, defaults: List, logger_method: str) -> None:
    """
    Description
    -----------

    This function compiles and writes a table using the defined logger
    method for the validated attributes.

    Parameters
    ----------

    cls_opts: ``Dict``

        A Python dictionary containing the validated attributes.

    defaults: ``List``

        A Python list of the attribute names assigned schema default
        values.

    logger_method: ``str``

        A Python string specifying the logger method to be used to
        write the table.

    Raises
    ------

    SchemaInterfaceError:

        - raised if the logger method defined by `logger_method` upon
          entry is not supported.

    """

    # Define the table attributes.
    table_obj = init_table()
    table_obj.header = ["Variable", "Type", "Default", "Value"]
    table_obj.disable_numparse = True
    table_obj.table = [
        [key, type(value).__name__, key in defaults, str(value)]
        for (key, value) in cls_opts.items()
    ]
    table_obj.colalign = ["left", "center", "center", "left"]
    logmethod = getattr(logger, logger_method.lower(), None)
    if logmethod is None:
        msg = f"Logger method {logger_method} is not supported. Aborting!!!"
        raise SchemaInterfaceError(msg=msg)
    logmethod(msg="\n\n" + compose(table_obj=table_obj) + "\n\n")


# ----


def validate_schema(
    cls_schema: Dict,
    cls_opts: Dict,
    ignore_extra_keys: bool = False,
    write_table: bool = False,
    logger_method: str = "info",
    section: str = None,
) -> Dict:
    """
    Description
    -----------

    This function validates the specified options against the
    specified schema; schema optional values (denoted as `Optional`
    instances) are assigned default values when the options do not
    define a corresponding value; value coercions declared within the
    schema (e.g., `Use(float)`) are applied to the returned values.

    Parameters
    ----------

    cls_schema: ``Dict``

        A Python dictionary containing the schema.

    cls_opts: ``Dict``

        A Python dictionary containing the options to be validated;
        it is not modified.

    Keywords
    --------

    ignore_extra_keys: ``bool``, optional

        A Python boolean valued variable specifying whether to ignore
        keys of `cls_opts` that are not defined by the schema.

    write_table: ``bool``, optional

        A Python boolean valued variable specifying whether to write
        the validated attributes table using the specified logger
        method.

    logger_method: ``str``, optional

        A Python string specifying the logger method to be used to
        write the attributes table.

    section: ``str``, optional

        A Python string naming the configuration section; used only
        within messages.

    Returns
    -------

    out_opts: ``Dict``

        A Python dictionary containing the validated options and any
        default key and value pairs.

    Raises
    ------

    SchemaInterfaceError:

        - raised if the options do not satisfy the schema.

    """

    # Assign the schema defaults for any unspecified optional
    # attributes.
    name = section if section is not None else "options"
    out_opts = copy.deepcopy(dict(cls_opts))
    defaults = []
    for cls_key in cls_schema:
        if isinstance(cls_key, Optional) and cls_key.key not in out_opts:
            out_opts[cls_key.key] = copy.deepcopy(cls_key.default)
            defaults.append(cls_key.key)
    if defaults:
        msg = f"Schema defaults assigned for {name}: {', '.join(defaults)}."
        logger.debug(msg=msg)

    # Validate the schema.
    schema = Schema(cls_schema, ignore_extra_keys=ignore_extra_keys)
    try:
        out_opts = schema.validate(out_opts)
    except SchemaError as errmsg:
        msg = f"Schema validation for {name} failed with error {errmsg}. Aborting!!!"
        raise SchemaInterfaceError(msg=msg) from errmsg
    if write_table:
        __buildtbl__(cls_opts=out_opts, defaults=defaults, logger_method=logger_method)

    return out_opts


# ----


def positive(dtype: Any) -> Any:
    """
    Description
    -----------

    This function returns a schema which coerces a value to `dtype`
    and requires it to be strictly positive.

    """

    return And(Use(dtype), lambda value: value > 0, error=f"must be a positive {dtype.__name__}")

