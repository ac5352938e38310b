#!/usr/bin/env python3

"""
Script
------

    test_audio_interface.py

Description
-----------

    This script is the driver script for the `ioapps.audio_interface`
    module unit-tests.

Classes
-------

    TestAudioMethods()

        This is the base-class object for all `audio_interface`
        module unit-tests; it is a sub-class of TestCase.

Author(s)
---------

    vtrigger developers; 19 October 2026

"""

# ----

import os
import tempfile
import unittest
from unittest import TestCase

import numpy

from frontend.mel_interface import AudioClip
from ioapps.audio_interface import read_audio, write_raw, write_wav
from tools import fileio_interface
from utils.exceptions_interface import AudioInterfaceError, EmptyInputError

# ----


class TestAudioMethods(TestCase):
    """
    Description
    -----------

    This is the base-class object for all `audio_interface` module
    unit-tests; it is a sub-class of TestCase.

    """

    def setUp(self: TestCase) -> None:
        """
        Description
        -----------

        This method defines the base-class attributes for all
        `audio_interface` unit-tests.

        """

        # Define the base-class attributes.
        self.tmpdir = tempfile.mkdtemp(prefix="vtrigger_audio_")
        rng = numpy.random.default_rng(3)
        self.clip = AudioClip(samples=numpy.clip(0.3 * rng.standard_normal(1600), -1.0, 1.0), sample_rate_hz=16000)

    def tearDown(self: TestCase) -> None:
        fileio_interface.rmdir(path=self.tmpdir)

    def test_wav(self: TestCase) -> None:
        """
        Description
        -----------

        This method checks that a 16-bit PCM WAV file preserves the
        samples to within one quantization step.

        """

        # Execute the unit-test.
        path = os.path.join(self.tmpdir, "clip.wav")
        write_wav(path=path, clip=self.clip)
        clip = read_audio(path=path)
        self.assertEqual(clip.sample_rate_hz, 16000)
        self.assertEqual(clip.num_samples, 1600)
        self.assertLess(float(numpy.max(numpy.abs(clip.samples - self.clip.samples))), 2.0 / 32768.0)

    def test_raw(self: TestCase) -> None:
        """
        Description
        -----------

        This method checks that a raw float32 file and its sidecar
        preserve the float32 samples and sample rate.

        """

        # Execute the unit-test.
        path = os.path.join(self.tmpdir, "clip.f32")
        write_raw(path=path, clip=self.clip)
        self.assertTrue(fileio_interface.fileexist(path=f"{path}.json"))
        clip = read_audio(path=path)
        self.assertEqual(clip.sample_rate_hz, 16000)
        numpy.testing.assert_array_equal(clip.samples, self.clip.samples.astype(numpy.float32))

    def test_errors(self: TestCase) -> None:
        """
        Description
        -----------

        This method checks the missing file, missing sidecar and empty
        file errors.

        """

        # Execute the unit-test.
        with self.assertRaises(AudioInterfaceError):
            read_audio(path=os.path.join(self.tmpdir, "missing.wav"))
        path = os.path.join(self.tmpdir, "nosidecar.f32")
        numpy.zeros(10, dtype="<f4").tofile(path)
        with self.assertRaises(AudioInterfaceError):
            read_audio(path=path)
        path = os.path.join(self.tmpdir, "empty.f32")
        write_raw(path=path, clip=AudioClip(samples=numpy.zeros(0), sample_rate_hz=16000))
        with self.assertRaises(EmptyInputError):
            read_audio(path=path)


# ----


if __name__ == "__main__":
    unittest.main()
