#!/usr/bin/env python3

"""
Script
------

    test_schema_interface.py

Description
-----------

    This script is the driver script for the `utils.schema_interface`
    module unit-tests.

Classes
-------

    TestSchemaInterface()

        This the base-class object for all `schema_interface` module
        unit-tests; it is a sub-class of TestCase.

Requirements
------------

- schema; https://github.com/keleshev/schema

Author(s)
---------

    vtrigger developers; 19 October 2026

"""

# ----

import unittest
from unittest import TestCase

from schema import Optional

from utils.exceptions_interface import ConfigError, SchemaInterfaceError
from utils.schema_interface import positive, validate_schema

# ----


class TestSchemaInterface(TestCase):
    """
    Description
    -----------

    This the base-class object for all `schema_interface` module
    unit-tests; it is a sub-class of TestCase.

    """

    def setUp(self: TestCase) -> None:
        self.cls_schema = {
            "name": str,
            Optional("epochs", default=10): positive(int),
            Optional("learning_rate", default=0.0032): positive(float),
            Optional("seeds", default=[0, 1, 2]): [int],
        }

    def test_defaults(self: TestCase) -> None:
        """
        Description
        -----------

        This method checks that the schema defaults are assigned and
        that the options upon entry are not modified.

        """

        # Execute the unit-test.
        cls_opts = {"name": "mtl"}
        out_opts = validate_schema(cls_schema=self.cls_schema, cls_opts=cls_opts, write_table=True)
        self.assertEqual(out_opts, {"name": "mtl", "epochs": 10, "learning_rate": 0.0032, "seeds": [0, 1, 2]})
        self.assertEqual(cls_opts, {"name": "mtl"})
        out_opts["seeds"].append(3)
        out_opts = validate_schema(cls_schema=self.cls_schema, cls_opts=cls_opts)
        self.assertEqual(out_opts["seeds"], [0, 1, 2])

    def test_coercion(self: TestCase) -> None:
        """
        Description
        -----------

        This method checks the `positive` coercions.

        """

        # Execute the unit-test.
        out_opts = validate_schema(
            cls_schema=self.cls_schema, cls_opts={"name": "mtl", "epochs": "3", "learning_rate": 1}
        )
        self.assertEqual(out_opts["epochs"], 3)
        self.assertIsInstance(out_opts["learning_rate"], float)
        for value in (0, -2):
            with self.assertRaises(SchemaInterfaceError):
                validate_schema(cls_schema=self.cls_schema, cls_opts={"name": "mtl", "epochs": value})

    def test_errors(self: TestCase) -> None:
        """
        Description
        -----------

        This method checks the missing key, extra key and logger
        method errors.

        """

        # Execute the unit-test.
        with self.assertRaises(SchemaInterfaceError):
            validate_schema(cls_schema=self.cls_schema, cls_opts={})
        with self.assertRaises(ConfigError):
            validate_schema(cls_schema=self.cls_schema, cls_opts={"name": "mtl", "lr": 1.0}, section="train")
        out_opts = validate_schema(
            cls_schema=self.cls_schema, cls_opts={"name": "mtl", "lr": 1.0}, ignore_extra_keys=True
        )
        self.assertEqual(out_opts["name"], "mtl")
        with self.assertRaises(SchemaInterfaceError):
            validate_schema(
                cls_schema=self.cls_schema, cls_opts={"name": "mtl"}, write_table=True, logger_method="shout"
            )


# ----


if __name__ == "__main__":
    unittest.main()
