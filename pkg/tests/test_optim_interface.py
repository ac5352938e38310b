#!/usr/bin/env python3

"""
Script
------

    test_optim_interface.py

Description
-----------

    This script is the driver script for the
    `trainer.optim_interface` module unit-tests.

Classes
-------

    TestOptimMethods()

        This is the base-class object for all `optim_interface`
        module unit-tests; it is a sub-class of TestCase.

Author(s)
---------

    vtrigger developers; 19 October 2026

"""

# ----

import unittest
from collections import OrderedDict
from unittest import TestCase

import numpy

from trainer.optim_interface import AdamState, adam_step, clip_gradient, global_norm, is_frozen
from utils.exceptions_interface import ConfigError, ShapeError

# ----


class TestOptimMethods(TestCase):
    """
    Description
    -----------

    This is the base-class object for all `optim_interface` module
    unit-tests; it is a sub-class of TestCase.

    """

    def setUp(self: TestCase) -> None:
        self.params = OrderedDict(
            [
                ("trunk.0.fwd.b", numpy.array([0.5, -0.5, 1.0])),
                ("phonetic.w", numpy.array([[1.0, 2.0], [3.0, 4.0]], dtype=numpy.float32)),
            ]
        )

    def test_clip_gradient(self: TestCase) -> None:
        """
        Description
        -----------

        This method checks that a gradient of norm 10 is rescaled to
        norm 5 and that a gradient within the bound is unchanged.

        """

        # Execute the unit-test.
        grads = OrderedDict([("a", numpy.array([6.0, 0.0])), ("b", numpy.array([[0.0], [8.0]]))])
        self.assertAlmostEqual(global_norm(grads=grads), 10.0, places=12)
        clipped = clip_gradient(grads=grads, max_norm=5.0)
        self.assertAlmostEqual(global_norm(grads=clipped), 5.0, places=12)
        numpy.testing.assert_allclose(clipped["a"], [3.0, 0.0])
        numpy.testing.assert_allclose(clipped["b"], [[0.0], [4.0]])
        unchanged = clip_gradient(grads=grads, max_norm=10.0)
        self.assertIs(unchanged["a"], grads["a"])
        with self.assertRaises(ConfigError):
            clip_gradient(grads=grads, max_norm=0.0)

    def test_adam_step(self: TestCase) -> None:
        """
        Description
        -----------

        This method checks that the first Adam step moves each entry
        by the learning rate against the sign of its gradient and
        that a zero gradient leaves the parameters unchanged.

        """

        # Execute the unit-test.
        grads = OrderedDict(
            [("trunk.0.fwd.b", numpy.array([0.1, -3.0, 0.0])), ("phonetic.w", numpy.zeros((2, 2)))]
        )
        (params, state) = adam_step(params=self.params, grads=grads, state=AdamState(), lr=0.01)
        self.assertEqual(state.step, 1)
        expected = self.params["trunk.0.fwd.b"] - 0.01 * grads["trunk.0.fwd.b"] / (
            numpy.abs(grads["trunk.0.fwd.b"]) + 1.0e-8
        )
        numpy.testing.assert_allclose(params["trunk.0.fwd.b"], expected, rtol=0.0, atol=1.0e-12)
        numpy.testing.assert_array_equal(params["phonetic.w"], self.params["phonetic.w"])
        self.assertEqual(params["phonetic.w"].dtype, numpy.float32)
        numpy.testing.assert_array_equal(self.params["trunk.0.fwd.b"], [0.5, -0.5, 1.0])

    def test_frozen(self: TestCase) -> None:
        """
        Description
        -----------

        This method checks that frozen parameters and parameters
        without a gradient are neither updated nor given moments.

        """

        # Execute the unit-test.
        self.assertTrue(is_frozen(name="trunk.0.fwd.b", frozen=["trunk"]))
        self.assertTrue(is_frozen(name="trunk.0.fwd.b", frozen=["trunk."]))
        self.assertFalse(is_frozen(name="trunkx.b", frozen=["trunk"]))
        self.assertFalse(is_frozen(name="phonetic.w", frozen=[]))
        grads = OrderedDict(
            [("trunk.0.fwd.b", numpy.ones(3)), ("phonetic.w", numpy.ones((2, 2)))]
        )
        (params, state) = adam_step(params=self.params, grads=grads, state=AdamState(), lr=0.1, frozen=("trunk",))
        self.assertIs(params["trunk.0.fwd.b"], self.params["trunk.0.fwd.b"])
        self.assertNotIn("trunk.0.fwd.b", state.m)
        numpy.testing.assert_allclose(params["phonetic.w"], self.params["phonetic.w"] - 0.1, rtol=1.0e-6)
        (params, state) = adam_step(params=self.params, grads={"phonetic.w": numpy.ones((2, 2))}, state=state, lr=0.1)
        self.assertIs(params["trunk.0.fwd.b"], self.params["trunk.0.fwd.b"])
        self.assertEqual(state.step, 2)

    def test_shape_error(self: TestCase) -> None:
        """
        Description
        -----------

        This method checks that a gradient of the wrong shape raises
        an exception.

        """

        # Execute the unit-test.
        with self.assertRaises(ShapeError):
            adam_step(params=self.params, grads={"phonetic.w": numpy.ones(4)}, state=AdamState(), lr=0.1)


# ----


if __name__ == "__main__":
    unittest.main()
