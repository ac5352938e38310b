#!/usr/bin/env python3

"""
Script
------

    test_features_interface.py

Description
-----------

    This script is the driver script for the
    `ioapps.features_interface` and `ioapps.checkpoint_interface`
    module unit-tests.

Classes
-------

    TestFeaturesMethods()

        This is the base-class object for all `features_interface`
        module unit-tests; it is a sub-class of TestCase.

    TestCheckpointMethods()

        This is the base-class object for all `checkpoint_interface`
        module unit-tests; it is a sub-class of TestCase.

Author(s)
---------

    vtrigger developers; 19 October 2026

"""

# ----

import os
import struct
import tempfile
import unittest
from collections import OrderedDict
from unittest import TestCase

import numpy

from frontend.mel_interface import FeatureSequence
from ioapps.checkpoint_interface import read_checkpoint, write_checkpoint
from ioapps.features_interface import read_features, write_features
from tools import fileio_interface
from utils.exceptions_interface import CheckpointInterfaceError, FeaturesInterfaceError

# ----


class TestFeaturesMethods(TestCase):
    """
    Description
    -----------

    This is the base-class object for all `features_interface`
    module unit-tests; it is a sub-class of TestCase.

    """

    def setUp(self: TestCase) -> None:
        self.tmpdir = tempfile.mkdtemp(prefix="vtrigger_features_")

    def tearDown(self: TestCase) -> None:
        fileio_interface.rmdir(path=self.tmpdir)

    def test_layout(self: TestCase) -> None:
        """
        Description
        -----------

        This method checks the header fields and payload size of a
        written feature file and that reading it returns the float32
        frames.

        """

        # Execute the unit-test.
        frames = numpy.arange(12, dtype=numpy.float64).reshape(3, 4) / 7.0
        path = os.path.join(self.tmpdir, "utt.vtf")
        write_features(path=path, feats=FeatureSequence(frames=frames, frame_rate_fps=100.0))
        with open(path, "rb") as stream:
            content = stream.read()
        self.assertEqual(struct.unpack("<4sIIf", content[:16]), (b"VTFS", 3, 4, 100.0))
        self.assertEqual(len(content), 16 + 4 * 12)
        feats = read_features(path=path)
        self.assertEqual(feats.frames.dtype, numpy.float32)
        numpy.testing.assert_array_equal(feats.frames, frames.astype(numpy.float32))
        self.assertEqual(feats.frame_rate_fps, 100.0)

    def test_errors(self: TestCase) -> None:
        """
        Description
        -----------

        This method checks the magic, truncation and shape errors.

        """

        # Execute the unit-test.
        path = os.path.join(self.tmpdir, "bad.vtf")
        with open(path, "wb") as stream:
            stream.write(struct.pack("<4sIIf", b"XXXX", 1, 1, 100.0) + b"\x00" * 4)
        with self.assertRaises(FeaturesInterfaceError):
            read_features(path=path)
        with open(path, "wb") as stream:
            stream.write(struct.pack("<4sIIf", b"VTFS", 2, 2, 100.0) + b"\x00" * 4)
        with self.assertRaises(FeaturesInterfaceError):
            read_features(path=path)
        with self.assertRaises(FeaturesInterfaceError):
            read_features(path=os.path.join(self.tmpdir, "missing.vtf"))
        with self.assertRaises(FeaturesInterfaceError):
            write_features(path=path, feats=FeatureSequence(frames=numpy.zeros(3), frame_rate_fps=100.0))


class TestCheckpointMethods(TestCase):
    """
    Description
    -----------

    This is the base-class object for all `checkpoint_interface`
    module unit-tests; it is a sub-class of TestCase.

    """

    def setUp(self: TestCase) -> None:
        self.tmpdir = tempfile.mkdtemp(prefix="vtrigger_checkpoint_")
        self.params = OrderedDict(
            [("w", numpy.arange(6, dtype=numpy.float32).reshape(2, 3)), ("b", numpy.ones(3, dtype=numpy.float32))]
        )

    def tearDown(self: TestCase) -> None:
        fileio_interface.rmdir(path=self.tmpdir)

    def test_checkpoint(self: TestCase) -> None:
        """
        Description
        -----------

        This method checks that the header attributes and the
        parameter order, shapes and values are preserved.

        """

        # Execute the unit-test.
        path = os.path.join(self.tmpdir, "model.vtck")
        write_checkpoint(path=path, header={"hidden_dim": 3}, params=self.params)
        (header, params) = read_checkpoint(path=path)
        self.assertEqual(header["hidden_dim"], 3)
        self.assertEqual(list(params), ["w", "b"])
        for name in self.params:
            numpy.testing.assert_array_equal(params[name], self.params[name])

    def test_errors(self: TestCase) -> None:
        """
        Description
        -----------

        This method checks the truncation, trailing byte and magic
        errors.

        """

        # Execute the unit-test.
        path = os.path.join(self.tmpdir, "model.vtck")
        write_checkpoint(path=path, header={}, params=self.params)
        with open(path, "rb") as stream:
            content = stream.read()
        for (name, payload) in (("short", content[:-4]), ("long", content + b"\x00" * 4), ("magic", b"XXXX" + content[4:])):
            bad = os.path.join(self.tmpdir, f"{name}.vtck")
            with open(bad, "wb") as stream:
                stream.write(payload)
            with self.assertRaises(CheckpointInterfaceError):
                read_checkpoint(path=bad)
        with self.assertRaises(CheckpointInterfaceError):
            write_checkpoint(path=path, header={"bad": object()}, params=self.params)


# ----


if __name__ == "__main__":
    unittest.main()
