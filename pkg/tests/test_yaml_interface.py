#!/usr/bin/env python3

"""
Script
------

    test_yaml_interface.py

Description
-----------

    This module provides unit-tests for the respective yaml_interface
    module functions.

Classes
-------

    TestYAMLMethods()

        This is the base-class object for all yaml_interface
        unit-tests; it is a sub-class of TestCase.

Requirements
------------

- pytest; https://docs.pytest.org/en/7.2.x/

Author(s)
---------

    Henry R. Winterbottom; 08 December 2022

History
-------

    2022-12-08: Henry Winterbottom -- Initial implementation.

"""

# ----

import os
import tempfile
import unittest
from unittest import TestCase

from confs import yaml_interface
from tools import fileio_interface
from utils.exceptions_interface import ConfigError, YAMLInterfaceError

# ----


class TestYAMLMethods(TestCase):
    """
    Description
    -----------

    This is the base-class object for all yaml_interface unit-tests;
    it is a sub-class of TestCase.

    """

    def setUp(self: TestCase) -> None:
        """
        Description
        -----------

        This method defines the base-class attributes for all
        yaml_interface unit-tests.

        """

        # Define the base-class attributes.
        self.tmpdir = tempfile.mkdtemp(prefix="vtrigger_yaml_")
        self.yaml = yaml_interface.YAML()
        self.yaml_test_dict = {
            "train": {"epochs": 2, "learning_rate": 0.001, "sub_batch_sizes": [12, 4]},
            "keyword": {"phones": ["p01", "p03", "p05", "p07"]},
            "seeds": [0, 1, 2],
        }

        # Define the message to accompany any unit-test failures.
        self.unit_test_msg = "The unit-test for yaml_interface failed."

    def tearDown(self: TestCase) -> None:
        fileio_interface.rmdir(path=self.tmpdir)

    def _write_text(self: TestCase, name: str, text: str) -> str:
        path = os.path.join(self.tmpdir, name)
        with open(path, "w", encoding="utf-8") as stream:
            stream.write(text)
        return path

    def test_yaml(self: TestCase) -> None:
        """
        Description
        -----------

        This method checks that a written file is read back with its
        attributes and key order.

        """

        # Execute the unit-test.
        path = os.path.join(self.tmpdir, "experiment.yaml")
        self.yaml.write_yaml(yaml_file=path, in_dict=self.yaml_test_dict)
        yaml_dict = self.yaml.read_yaml(yaml_file=path)
        self.assertEqual(yaml_dict, self.yaml_test_dict, msg=self.unit_test_msg)
        self.assertEqual(list(yaml_dict), ["train", "keyword", "seeds"])
        self.assertEqual(self.yaml.read_yaml(yaml_file=self._write_text("empty.yaml", "")), {})

    def test_constructors(self: TestCase) -> None:
        """
        Description
        -----------

        This method checks the environment variable expansion and the
        file inclusion constructors.

        """

        # Execute the unit-test.
        os.environ["VTRIGGER_YAML_TEST_DIR"] = self.tmpdir
        try:
            included = self._write_text("frontend.yaml", "num_mels: 40\ncontext: 3\n")
            path = self._write_text(
                "main.yaml",
                "paths:\n  out_dir: ${VTRIGGER_YAML_TEST_DIR}/run\n" f"frontend: !INC {included}\n",
            )
            yaml_dict = self.yaml.read_yaml(yaml_file=path)
        finally:
            del os.environ["VTRIGGER_YAML_TEST_DIR"]
        self.assertEqual(yaml_dict["paths"]["out_dir"], f"{self.tmpdir}/run")
        self.assertEqual(yaml_dict["frontend"], {"num_mels": 40, "context": 3})

    def test_errors(self: TestCase) -> None:
        """
        Description
        -----------

        This method checks the missing file, malformed file and
        non-mapping errors.

        """

        # Execute the unit-test.
        paths = (
            os.path.join(self.tmpdir, "missing.yaml"),
            self._write_text("bad.yaml", "train: [1, 2\n"),
            self._write_text("list.yaml", "- 1\n- 2\n"),
        )
        for path in paths:
            with self.assertRaises(YAMLInterfaceError):
                self.yaml.read_yaml(yaml_file=path)
        self.assertTrue(issubclass(YAMLInterfaceError, ConfigError))


# ----

if __name__ == "__main__":
    unittest.main()
