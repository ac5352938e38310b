#!/usr/bin/env python3

"""
Script
------

    test_decorator_interface.py

Description
-----------

    This script is the driver script for the
    `utils.decorator_interface` module unit-tests.

Classes
-------

    TestDecoratorInterface()

        This the base-class object for all `decorator_interface`
        module unit-tests; it is a sub-class of TestCase.

Author(s)
---------

    Henry R. Winterbottom; 14 October 2023

"""

# ----

# pylint: disable=unused-argument

# ----

import os
import unittest
from types import SimpleNamespace
from unittest import TestCase

from utils.decorator_interface import cli_wrapper, script_wrapper, stage_wrapper
from utils.exceptions_interface import CLIInterfaceError, ManifestInterfaceError

# ----

SCHEMA_FILE = os.path.join(os.path.dirname(os.path.dirname(os.path.abspath(__file__))), "cli", "schema", "cli.yaml")

# ----


class TestDecoratorInterface(TestCase):
    """
    Description
    -----------

    This the base-class object for all `decorator_interface` module
    unit-tests; it is a sub-class of TestCase.

    """

    def test_cli_wrapper(self: TestCase) -> None:
        """
        Description
        -----------

        This method provides a unit-test for the `decorator_interface`
        `cli_wrapper` method.

        """

        # Execute the unit-test.
        @cli_wrapper(description="Description", schema_file=SCHEMA_FILE, prog="vtrigger")
        def sample_function(options_obj: SimpleNamespace, scale: int = 1) -> tuple:
            return (options_obj.command, options_obj.out_dir, scale)

        self.assertEqual(sample_function(["synth", "--out-dir", "corpus"], scale=3), ("synth", "corpus", 3))
        with self.assertRaises(CLIInterfaceError):
            sample_function(["synth"])

    def test_script_wrapper(self: TestCase) -> None:
        """
        Description
        -----------

        This method provides a unit-test for the `decorator_interface`
        `script_wrapper` method.

        """

        # Execute the unit-test.
        @script_wrapper(script_name="vtrigger unit-test")
        def sample_function(value: int) -> int:
            return 2 * value

        self.assertEqual(sample_function(value=21), 42)
        self.assertEqual(sample_function.__name__, "sample_function")

    def test_stage_wrapper(self: TestCase) -> None:
        """
        Description
        -----------

        This method checks that an error raised by a stage is tagged
        with the stage name once and keeps its class.

        """

        # Execute the unit-test.
        @stage_wrapper(stage="featurize")
        def failing_stage() -> None:
            raise ManifestInterfaceError(msg="The manifest is empty. Aborting!!!")

        with self.assertRaises(ManifestInterfaceError) as context:
            failing_stage()
        self.assertEqual(context.exception.stage, "featurize")
        self.assertEqual(str(context.exception), "[featurize] The manifest is empty. Aborting!!!")
        self.assertEqual(context.exception.exit_code, 3)

        outer = stage_wrapper(stage="demo")(failing_stage)
        with self.assertRaises(ManifestInterfaceError) as context:
            outer()
        self.assertEqual(context.exception.stage, "featurize")
        self.assertEqual(str(context.exception), "[featurize] The manifest is empty. Aborting!!!")

        @stage_wrapper(stage="score")
        def passing_stage(value: int) -> int:
            return value + 1

        self.assertEqual(passing_stage(value=1), 2)

        @stage_wrapper(stage="score")
        def foreign_stage() -> None:
            raise KeyError("x")

        with self.assertRaises(KeyError) as context:
            foreign_stage()
        self.assertFalse(hasattr(context.exception, "stage"))


# ----


if __name__ == "__main__":
    unittest.main()
