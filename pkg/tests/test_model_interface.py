#!/usr/bin/env python3

"""
Script
------

    test_model_interface.py

Description
-----------

    This script is the driver script for the `nnet` package
    (`lstm_interface`, `head_interface` and `model_interface`)
    unit-tests; gradients are checked against central finite
    differences on tiny float64 models.

Classes
-------

    TestModelMethods()

        This is the base-class object for all `nnet` package
        unit-tests; it is a sub-class of TestCase.

Requirements
------------

- pytest; https://docs.pytest.org/en/7.2.x/

Author(s)
---------

    vtrigger developers; 19 October 2026

"""

# ----

# pylint: disable=too-many-locals

# ----

import math
import os
import tempfile
import unittest
from unittest import TestCase

import numpy
from scipy.special import expit

from frontend.mel_interface import ModelInput
from nnet.head_interface import HeadParams, head_forward
from nnet.lstm_interface import LstmLayerParams
from nnet.model_interface import (
    ModelConfig,
    MtlModel,
    Tape,
    bilstm_forward,
    count_parameters,
    phonetic_alphabet,
)
from tools import fileio_interface
from utils.exceptions_interface import NnetInterfaceError, ShapeError, StateError

# ----


def _lstm_cell(x: numpy.ndarray, params: dict, direction: str) -> numpy.ndarray:
    # A first step; the previous cell and hidden states are zero.
    (z_i, _, z_g, z_o) = numpy.split(params[f"{direction}.w_x"] @ x + params[f"{direction}.b"], 4)
    return expit(z_o) * numpy.tanh(expit(z_i) * numpy.tanh(z_g))


class TestModelMethods(TestCase):
    """
    Description
    -----------

    This is the base-class object for all `nnet` package unit-tests;
    it is a sub-class of TestCase.

    """

    def setUp(self: TestCase) -> None:
        """
        Description
        -----------

        This method defines the base-class attributes for all `nnet`
        unit-tests.

        """

        # Define the base-class attributes.
        self.rng = numpy.random.default_rng(5)
        self.config = ModelConfig(
            input_dim=4, hidden_dim=3, num_layers=2, phonetic_alphabet=phonetic_alphabet(2), dtype="float64"
        )
        self.model = MtlModel.init(config=self.config, rng=numpy.random.default_rng(1))
        self.inputs = self.rng.standard_normal((3, 5, 4))
        self.lengths = numpy.array([5, 3, 1])
        self.inputs[1, 3:] = 0.0
        self.inputs[2, 1:] = 0.0
        self.weights = {
            "phonetic": self.rng.standard_normal((2, 5, 3)),
            "discriminative": self.rng.standard_normal((1, 5, 2)),
        }
        self.rows = {"phonetic": slice(0, 2), "discriminative": slice(2, 3)}

    def _loss(self: TestCase, heads: tuple = ("phonetic", "discriminative"), inputs: numpy.ndarray = None) -> float:
        hidden = self.model.trunk_forward(inputs=self.inputs if inputs is None else inputs, lengths=self.lengths)
        return float(
            sum(
                (self.model.head_forward(name=name, hidden=hidden, rows=self.rows[name]) * self.weights[name]).sum()
                for name in heads
            )
        )

    def _grads(self: TestCase, heads: tuple = ("phonetic", "discriminative")) -> tuple:
        tape = Tape()
        hidden = self.model.trunk_forward(inputs=self.inputs, lengths=self.lengths, tape=tape)
        for name in heads:
            self.model.head_forward(name=name, hidden=hidden, rows=self.rows[name], tape=tape)
        grads = self.model.backward(tape=tape, d_logits={name: self.weights[name] for name in heads})
        return (grads, tape.d_inputs)

    def test_parameter_gradients(self: TestCase) -> None:
        """
        Description
        -----------

        This method compares every parameter gradient to central
        finite differences (step 1e-5).

        """

        # Execute the unit-test.
        (grads, _) = self._grads()
        step = 1.0e-5
        for (name, value) in self.model.parameters().items():
            numeric = numpy.zeros_like(value)
            for idx in numpy.ndindex(value.shape):
                saved = value[idx]
                value[idx] = saved + step
                upper = self._loss()
                value[idx] = saved - step
                lower = self._loss()
                value[idx] = saved
                numeric[idx] = (upper - lower) / (2.0 * step)
            numpy.testing.assert_allclose(grads[name], numeric, rtol=1.0e-4, atol=1.0e-7, err_msg=name)

    def test_input_gradients(self: TestCase) -> None:
        """
        Description
        -----------

        This method compares the gradient with respect to the trunk
        inputs to central finite differences; padded positions have
        zero gradient.

        """

        # Execute the unit-test.
        (_, d_inputs) = self._grads()
        step = 1.0e-5
        numeric = numpy.zeros_like(self.inputs)
        for idx in numpy.ndindex(self.inputs.shape):
            shifted = self.inputs.copy()
            shifted[idx] += step
            upper = self._loss(inputs=shifted)
            shifted[idx] -= 2.0 * step
            lower = self._loss(inputs=shifted)
            numeric[idx] = (upper - lower) / (2.0 * step)
        numpy.testing.assert_allclose(d_inputs, numeric, rtol=1.0e-4, atol=1.0e-7)
        self.assertTrue(numpy.all(d_inputs[1, 3:] == 0.0))

    def test_tied_trunk_additivity(self: TestCase) -> None:
        """
        Description
        -----------

        This method checks that the trunk gradient of the joint loss
        is the sum of the per-head trunk gradients and that a head
        not attached to the loss has zero gradient.

        """

        # Execute the unit-test.
        (joint, _) = self._grads()
        (phonetic, _) = self._grads(heads=("phonetic",))
        (discriminative, _) = self._grads(heads=("discriminative",))
        for name in joint:
            if name.startswith("trunk."):
                numpy.testing.assert_allclose(joint[name], phonetic[name] + discriminative[name], rtol=0.0, atol=1.0e-10)
        self.assertTrue(numpy.all(phonetic["discriminative.w"] == 0.0))
        self.assertTrue(numpy.all(discriminative["phonetic.b"] == 0.0))

    def test_padding(self: TestCase) -> None:
        """
        Description
        -----------

        This method checks that a padded utterance yields the outputs
        of the same utterance evaluated alone and zero outputs at the
        padded positions.

        """

        # Execute the unit-test.
        hidden = self.model.trunk_forward(inputs=self.inputs, lengths=self.lengths)
        for (row, length) in enumerate(self.lengths):
            alone = bilstm_forward(model_input=self.inputs[row, :length], trunk=self.model.trunk)
            numpy.testing.assert_allclose(hidden[row, :length], alone, rtol=0.0, atol=1.0e-12)
            self.assertTrue(numpy.all(hidden[row, length:] == 0.0))

    def test_bilstm_forward(self: TestCase) -> None:
        """
        Description
        -----------

        This method checks the output shape, the zero-parameter case
        and a single frame against a hand-evaluated LSTM cell.

        """

        # Execute the unit-test.
        layer = LstmLayerParams.init(input_dim=6, hidden_dim=8, rng=self.rng, dtype="float64")
        windows = self.rng.standard_normal((5, 6))
        self.assertEqual(bilstm_forward(model_input=ModelInput(windows=windows, frame_rate_fps=100.0 / 3.0), trunk=[layer]).shape, (5, 16))
        zeros = LstmLayerParams(6, 8, {key: numpy.zeros_like(value) for (key, value) in layer.params.items()})
        self.assertTrue(numpy.all(bilstm_forward(model_input=windows, trunk=[zeros]) == 0.0))
        frame = windows[:1]
        output = bilstm_forward(model_input=frame, trunk=[layer])[0]
        expected = numpy.concatenate(
            [_lstm_cell(frame[0], layer.params, "fwd"), _lstm_cell(frame[0], layer.params, "bwd")]
        )
        numpy.testing.assert_allclose(output, expected, rtol=1.0e-12, atol=1.0e-14)
        with self.assertRaises(ShapeError):
            bilstm_forward(model_input=self.rng.standard_normal((5, 7)), trunk=[layer])

    def test_head_forward(self: TestCase) -> None:
        """
        Description
        -----------

        This method checks the softmax arithmetic of an output head.

        """

        # Execute the unit-test.
        head = HeadParams.init(input_dim=3, alphabet=["<blank>", "a", "b", "c"], rng=self.rng, dtype="float64")
        head.params["w"][:] = 0.0
        posteriors = head_forward(hidden=self.rng.standard_normal((4, 3)), head=head)
        numpy.testing.assert_allclose(posteriors.probs, 0.25, rtol=1.0e-12)
        head = HeadParams.init(input_dim=3, alphabet=["<blank>", "a"], rng=self.rng, dtype="float64")
        head.params["w"][:] = 0.0
        head.params["b"][:] = [1.0, 1.0 + math.log(3.0)]
        numpy.testing.assert_allclose(head_forward(hidden=numpy.ones((2, 3)), head=head).probs, [[0.25, 0.75]] * 2)
        head = HeadParams.init(input_dim=3, alphabet=["<blank>", "a", "b"], rng=self.rng, dtype="float64")
        posteriors = head_forward(hidden=10.0 * self.rng.standard_normal((6, 3)), head=head)
        numpy.testing.assert_allclose(posteriors.probs.sum(axis=1), 1.0, atol=1.0e-6)
        with self.assertRaises(ShapeError):
            head_forward(hidden=numpy.ones((2, 4)), head=head)

    def test_count_parameters(self: TestCase) -> None:
        """
        Description
        -----------

        This method checks the parameter counts of an affine head,
        a layer and the full-size configuration.

        """

        # Execute the unit-test.
        head = HeadParams.init(input_dim=16, alphabet=list("abcd"), rng=self.rng)
        self.assertEqual(count_parameters(head), 68)
        small = LstmLayerParams.init(input_dim=10, hidden_dim=8, rng=self.rng)
        large = LstmLayerParams.init(input_dim=10, hidden_dim=16, rng=self.rng)
        self.assertEqual(large.params["fwd.w_h"].size, 4 * small.params["fwd.w_h"].size)
        self.assertEqual(count_parameters(small), 2 * 4 * 8 * (10 + 8 + 1))
        model = MtlModel.init(config=ModelConfig.full_size(), rng=numpy.random.default_rng(0), heads=("phonetic",))
        count = count_parameters(model)
        self.assertEqual(count, 5851701)
        self.assertTrue(4.5e6 <= count <= 6.5e6)

    def test_state_errors(self: TestCase) -> None:
        """
        Description
        -----------

        This method checks that backward requires a recorded forward
        pass and that a head is recorded at most once per tape.

        """

        # Execute the unit-test.
        with self.assertRaises(StateError):
            self.model.backward(tape=Tape(), d_logits={})
        tape = Tape()
        hidden = self.model.trunk_forward(inputs=self.inputs, lengths=self.lengths, tape=tape)
        self.model.head_forward(name="phonetic", hidden=hidden, tape=tape)
        with self.assertRaises(StateError):
            self.model.head_forward(name="phonetic", hidden=hidden, tape=tape)
        with self.assertRaises(StateError):
            self.model.backward(tape=tape, d_logits={"discriminative": numpy.zeros((3, 5, 2))})
        with self.assertRaises(ShapeError):
            self.model.trunk_forward(inputs=self.inputs, lengths=numpy.array([6, 1, 1]))

    def test_checkpoint(self: TestCase) -> None:
        """
        Description
        -----------

        This method checks that a saved model is restored with its
        heads and parameters and that a head can be added to a
        single-head model.

        """

        # Execute the unit-test.
        tmpdir = tempfile.mkdtemp(prefix="vtrigger_model_")
        try:
            model = MtlModel.init(
                config=ModelConfig(input_dim=4, hidden_dim=3, num_layers=1), rng=self.rng, heads=("phonetic",)
            )
            path = os.path.join(tmpdir, "model.vtck")
            model.save(path=path)
            loaded = MtlModel.load(path=path)
            self.assertEqual(list(loaded.heads), ["phonetic"])
            for (name, value) in model.parameters().items():
                numpy.testing.assert_array_equal(loaded.parameters()[name], value)
            loaded.add_head(name="discriminative", rng=self.rng)
            self.assertEqual(list(loaded.heads), ["phonetic", "discriminative"])
            with self.assertRaises(NnetInterfaceError):
                loaded.add_head(name="discriminative", rng=self.rng)
            self.assertEqual(loaded.copy(dtype="float64").parameters()["phonetic.w"].dtype, numpy.float64)
        finally:
            fileio_interface.rmdir(path=tmpdir)

    def test_determinism(self: TestCase) -> None:
        """
        Description
        -----------

        This method checks that a seed yields identical parameters
        and that the trunk does not depend on the head selection.

        """

        # Execute the unit-test.
        first = MtlModel.init(config=self.config, rng=numpy.random.default_rng(9))
        second = MtlModel.init(config=self.config, rng=numpy.random.default_rng(9), heads=("discriminative",))
        for (name, value) in first.parameters().items():
            if name.startswith("trunk."):
                numpy.testing.assert_array_equal(second.parameters()[name], value)


# ----


if __name__ == "__main__":
    unittest.main()
