"""
Module
------

    table_interface.py

Description
-----------

    This module provides functions to compose tables using the Python
    `tabulate` library; it is used for the schema attribute tables and
    the false-reject comparison tables of the evaluation reports.

Functions
---------

    compose(table_obj)

        This method composes the specified table in accordance with
        the attributes specified within the `table_obj`
        SimpleNamespace object upon entry.

    init_table()

        This function initializes a SimpleNamespace object to be used
        for defining a table.

Requirements
------------

- tabulate; https://github.com/gregbanks/python-tabulate

Author(s)
---------

    Henry R. Winterbottom; 18 May 2023

"""

# ----

from types import SimpleNamespace

from tabulate import tabulate

# ----

# Define all available module properties.
__all__ = ["compose", "init_table"]

# ----


def compose(table_obj: SimpleNamespace) -> str:
    """
    Description
    -----------

    This method composes the specified table; unspecified layout
    attributes (`tablefmt`, `numalign`, `colalign`,
    `disable_numparse`, `floatfmt`) assume the default values.

    Parameters
    ----------

    table_obj: ``SimpleNamespace``

        A Python SimpleNamespace object containing the table
        attributes; `header` and `table` are mandatory.

    Returns
    -------

    table: ``str``

        A Python string containing the composed table.

    """

    # Build the table accordingly.
    ncols = len(table_obj.header) if table_obj.header else (
        len(table_obj.table[0]) if table_obj.table else 0
    )
    table = tabulate(
        table_obj.table,
        table_obj.header,
        tablefmt=getattr(table_obj, "tablefmt", "outline"),
        numalign=getattr(table_obj, "numalign", "decimal"),
        colalign=getattr(table_obj, "colalign", None) or ncols * ["center"],
        disable_numparse=getattr(table_obj, "disable_numparse", False),
        floatfmt=getattr(table_obj, "floatfmt", ".4f"),
    )

    return table


# ----


def init_table() -> SimpleNamespace:
    """
    Description
    -----------

    This function initializes a SimpleNamespace object to be used for
    defining a table.

    Returns
    -------

    table_obj: ``SimpleNamespace``

        A Python SimpleNamespace object with empty `header` and
        `table` attributes.

    """

    return SimpleNamespace(header=[], table=[])
