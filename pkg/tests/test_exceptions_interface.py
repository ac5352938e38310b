#!/usr/bin/env python3

"""
Script
------

    test_exceptions_interface.py

Description
-----------

    This script is the driver script for the
    `utils.exceptions_interface` module unit-tests.

Classes
-------

    TestExceptionsInterface()

        This is the base-class object for all `exceptions_interface`
        Error sub-class unit-tests; it is a sub-class of TestCase.

Functions
---------

    generate_error_class_tests(error_class, base_class, exit_code)

        This is a wrapper function from which a unit-test will be
        executed for the respective Error class.

Author(s)
---------

    Henry R. Winterbottom; 14 October 2023

"""

# ----

# pylint: disable=redefined-outer-name

# ----

import unittest
from unittest import TestCase

from utils.error_interface import Error
from utils.exceptions_interface import (
    AudioInterfaceError,
    AugmentInterfaceError,
    CheckpointInterfaceError,
    CLIInterfaceError,
    ConfigError,
    CTCInterfaceError,
    DataError,
    DataInterfaceError,
    DemoInterfaceError,
    EmptyInputError,
    EvalInterfaceError,
    FeaturesInterfaceError,
    FrontendInterfaceError,
    InfeasibleTargetError,
    JSONInterfaceError,
    ManifestInterfaceError,
    NnetInterfaceError,
    NumericError,
    SchemaInterfaceError,
    ScorerInterfaceError,
    ShapeError,
    StateError,
    TrainerInterfaceError,
    YAMLInterfaceError,
)

# ----


def generate_error_class_tests(error_class: type, base_class: type, exit_code: int) -> type:
    """
    Description
    -----------

    This is a wrapper function from which a unit-test will be executed
    for the respective Error sub-class.

    """

    class TestExceptionsInterface(TestCase):
        """
        Description
        -----------

        This is the base-class object for all `exceptions_interface`
        Error sub-class unit-tests; it is a sub-class of TestCase.

        """

        def test_error_instance(self: TestCase) -> None:
            """
            Description
            -----------

            This is a wrapped function for the respective Error class
            unit-tests; the class, message and process exit code are
            checked.

            """

            # Execute the unit-test.
            error = error_class(msg="An error occurred. Aborting!!!")
            self.assertIsInstance(error, Error)
            self.assertIsInstance(error, base_class)
            self.assertEqual(str(error), "An error occurred. Aborting!!!")
            self.assertEqual(error.exit_code, exit_code)

    return TestExceptionsInterface


# ----


# Define the parent class and exit code of each error class.
error_classes = [
    (ConfigError, Error, 2),
    (DataError, Error, 3),
    (NumericError, Error, 4),
    (StateError, Error, 5),
    (EmptyInputError, DataError, 3),
    (ShapeError, NumericError, 4),
    (InfeasibleTargetError, NumericError, 4),
    (AudioInterfaceError, DataError, 3),
    (AugmentInterfaceError, Error, 1),
    (CheckpointInterfaceError, DataError, 3),
    (CLIInterfaceError, ConfigError, 2),
    (CTCInterfaceError, Error, 1),
    (DataInterfaceError, DataError, 3),
    (DemoInterfaceError, Error, 1),
    (EvalInterfaceError, Error, 1),
    (FeaturesInterfaceError, DataError, 3),
    (FrontendInterfaceError, Error, 1),
    (JSONInterfaceError, DataError, 3),
    (ManifestInterfaceError, DataError, 3),
    (NnetInterfaceError, Error, 1),
    (SchemaInterfaceError, ConfigError, 2),
    (ScorerInterfaceError, Error, 1),
    (TrainerInterfaceError, Error, 1),
    (YAMLInterfaceError, ConfigError, 2),
]

# For each error class execute the respective unit-test.
for (error_class, base_class, exit_code) in error_classes:
    TestErrorClass = generate_error_class_tests(error_class, base_class, exit_code)
    globals()[f"Test{error_class.__name__}"] = TestErrorClass
del TestErrorClass

# ----

if __name__ == "__main__":
    unittest.main()
