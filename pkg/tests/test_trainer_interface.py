#!/usr/bin/env python3

"""
Script
------

    test_trainer_interface.py

Description
-----------

    This script is the driver script for the
    `trainer.trainer_interface` module unit-tests; the tests train
    tiny float64 models on random feature files.

Classes
-------

    TestTrainerMethods()

        This is the base-class object for all `trainer_interface`
        module unit-tests; it is a sub-class of TestCase.

Requirements
------------

- pytest; https://docs.pytest.org/en/7.2.x/

Author(s)
---------

    vtrigger developers; 19 October 2026

"""

# ----

# pylint: disable=too-many-instance-attributes

# ----

import csv
import os
import tempfile
import unittest
from concurrent.futures import ThreadPoolExecutor
from unittest import TestCase

import numpy
import pytest

from data.batch_interface import load_batch
from data.synth_interface import SynthSpec, generate_synthetic_corpus
from frontend.mel_interface import FeatureSequence, FrontendConfig
from ioapps.features_interface import write_features
from ioapps.manifest_interface import ManifestEntry
from nnet.model_interface import ModelConfig, MtlModel, phonetic_alphabet
from tools import fileio_interface
from trainer.optim_interface import AdamState
from trainer.trainer_interface import MtlLoss, TrainConfig, compute_gradients, mtl_step, train
from utils.exceptions_interface import ConfigError, NumericError, SchemaInterfaceError

# ----


class TestTrainerMethods(TestCase):
    """
    Description
    -----------

    This is the base-class object for all `trainer_interface` module
    unit-tests; it is a sub-class of TestCase.

    """

    def setUp(self: TestCase) -> None:
        """
        Description
        -----------

        This method defines the base-class attributes for all
        `trainer_interface` unit-tests.

        """

        # Define the base-class attributes.
        self.tmpdir = tempfile.mkdtemp(prefix="vtrigger_trainer_")
        self.rng = numpy.random.default_rng(29)
        self.frontend_cfg = FrontendConfig()
        self.model_cfg = ModelConfig(hidden_dim=4, num_layers=1, phonetic_alphabet=phonetic_alphabet(3), dtype="float64")
        self.phonetic = [
            self._entry(uid=f"p{idx}", transcript=[int(s) for s in self.rng.integers(1, 4, 3)]) for idx in range(6)
        ]
        self.discriminative = [
            self._entry(uid=f"d{idx}", binary_label="positive" if idx % 2 == 0 else "negative") for idx in range(4)
        ]

    def tearDown(self: TestCase) -> None:
        fileio_interface.rmdir(path=self.tmpdir)

    def _entry(self: TestCase, uid: str, nframes: int = None, **kwargs) -> ManifestEntry:
        nframes = int(self.rng.integers(30, 48)) if nframes is None else nframes
        path = os.path.join(self.tmpdir, "features", f"{uid}.vtf")
        feats = FeatureSequence(frames=self.rng.standard_normal((nframes, 40)), frame_rate_fps=100.0)
        write_features(path=path, feats=feats)
        return ManifestEntry(id=uid, feature_path=path, **kwargs)

    def _model(self: TestCase) -> MtlModel:
        return MtlModel.init(config=self.model_cfg, rng=numpy.random.default_rng(3))

    def test_loss_additivity(self: TestCase) -> None:
        """
        Description
        -----------

        This method checks that the joint loss is the sum of the task
        losses.

        """

        # Execute the unit-test.
        loss = MtlLoss.combine(c_p=1.2345678901, c_d=0.9876543210)
        self.assertLessEqual(abs(loss.c_mtl - (loss.c_p + loss.c_d)), 1.0e-12)
        self.assertFalse(loss.skipped)

    def test_worker_equivalence(self: TestCase) -> None:
        """
        Description
        -----------

        This method checks that partitioning a step over two workers
        yields the single-worker losses and gradients.

        """

        # Execute the unit-test.
        model = self._model()
        phonetic = load_batch(entries=self.phonetic[:4], frontend_cfg=self.frontend_cfg)
        discriminative = load_batch(entries=self.discriminative, frontend_cfg=self.frontend_cfg)
        (grads, c_p, c_d) = compute_gradients(
            model=model, phonetic_batch=phonetic, discriminative_batch=discriminative, cfg=TrainConfig()
        )
        with ThreadPoolExecutor(max_workers=2) as executor:
            (split_grads, split_c_p, split_c_d) = compute_gradients(
                model=model,
                phonetic_batch=phonetic,
                discriminative_batch=discriminative,
                cfg=TrainConfig(workers=2, batch_size_per_worker=2),
                executor=executor,
            )
        self.assertAlmostEqual(c_p, split_c_p, places=10)
        self.assertAlmostEqual(c_d, split_c_d, places=10)
        for name in grads:
            numpy.testing.assert_allclose(split_grads[name], grads[name], rtol=0.0, atol=1.0e-10, err_msg=name)

    def test_task_additivity(self: TestCase) -> None:
        """
        Description
        -----------

        This method checks that the joint trunk gradient is the sum of
        the phonetic and discriminative trunk gradients.

        """

        # Execute the unit-test.
        model = self._model()
        phonetic = load_batch(entries=self.phonetic[:3], frontend_cfg=self.frontend_cfg)
        discriminative = load_batch(entries=self.discriminative[:2], frontend_cfg=self.frontend_cfg)
        cfg = TrainConfig()
        (joint, c_p, c_d) = compute_gradients(
            model=model, phonetic_batch=phonetic, discriminative_batch=discriminative, cfg=cfg
        )
        (phonetic_grads, c_p_alone, _) = compute_gradients(
            model=model, phonetic_batch=phonetic, discriminative_batch=None, cfg=cfg
        )
        (discriminative_grads, _, c_d_alone) = compute_gradients(
            model=model, phonetic_batch=None, discriminative_batch=discriminative, cfg=cfg
        )
        self.assertAlmostEqual(c_p, c_p_alone, places=10)
        self.assertAlmostEqual(c_d, c_d_alone, places=10)
        for name in joint:
            if name.startswith("trunk."):
                numpy.testing.assert_allclose(
                    joint[name], phonetic_grads[name] + discriminative_grads[name], rtol=0.0, atol=1.0e-10
                )
        with self.assertRaises(ConfigError):
            compute_gradients(model=model, phonetic_batch=None, discriminative_batch=None, cfg=cfg)

    def test_mtl_step(self: TestCase) -> None:
        """
        Description
        -----------

        This method checks that a step updates the trainable
        parameters only and that a step without a feasible target is
        skipped.

        """

        # Execute the unit-test.
        model = self._model()
        before = {name: value.copy() for (name, value) in model.parameters().items()}
        phonetic = load_batch(entries=self.phonetic[:2], frontend_cfg=self.frontend_cfg)
        discriminative = load_batch(entries=self.discriminative[:2], frontend_cfg=self.frontend_cfg)
        state = AdamState()
        loss = mtl_step(
            model=model,
            phonetic_batch=phonetic,
            discriminative_batch=discriminative,
            cfg=TrainConfig(frozen=("trunk",)),
            state=state,
        )
        self.assertTrue(numpy.isfinite(loss.c_mtl))
        self.assertGreater(loss.grad_norm, 0.0)
        self.assertEqual(state.step, 1)
        for (name, value) in model.parameters().items():
            if name.startswith("trunk."):
                numpy.testing.assert_array_equal(value, before[name])
        self.assertFalse(numpy.array_equal(model.parameters()["phonetic.w"], before["phonetic.w"]))
        long_target = self._entry(uid="long", nframes=30, transcript=[1, 2, 3] * 6)
        loss = mtl_step(
            model=model,
            phonetic_batch=load_batch(entries=[long_target], frontend_cfg=self.frontend_cfg),
            discriminative_batch=None,
            cfg=TrainConfig(),
            state=state,
        )
        self.assertTrue(loss.skipped)
        self.assertEqual(state.step, 1)

    def test_train(self: TestCase) -> None:
        """
        Description
        -----------

        This method checks that identical seeds yield identical loss
        logs and that the epoch checkpoints and the final model are
        written.

        """

        # Execute the unit-test.
        cfg = TrainConfig(batch_size_per_worker=4, epochs=2, seed=5, bucketing=True)
        logs = []
        for run in ("first", "second"):
            out_dir = os.path.join(self.tmpdir, run)
            result = train(
                mode="mtl",
                cfg=cfg,
                model_cfg=self.model_cfg,
                frontend_cfg=self.frontend_cfg,
                out_dir=out_dir,
                phonetic_entries=self.phonetic,
                discriminative_entries=self.discriminative,
            )
            self.assertEqual(len(result.checkpoints), 2)
            self.assertEqual(len(result.epoch_losses), 2)
            self.assertTrue(fileio_interface.fileexist(path=os.path.join(out_dir, "model.vtck")))
            with open(result.loss_log, "r", encoding="utf-8") as stream:
                logs.append(stream.read())
        self.assertEqual(logs[0], logs[1])
        self.assertEqual(logs[0].splitlines()[0], "step,epoch,c_p,c_d,c_mtl,grad_norm,lr")
        self.assertEqual(len(logs[0].splitlines()), 1 + 2 * 2)
        baseline = os.path.join(self.tmpdir, "baseline.vtck")
        MtlModel.init(config=self.model_cfg, rng=self.rng, heads=("phonetic",)).save(path=baseline)
        result = train(
            mode="finetune",
            cfg=TrainConfig(batch_size_per_worker=2, epochs=1),
            model_cfg=self.model_cfg,
            frontend_cfg=self.frontend_cfg,
            out_dir=os.path.join(self.tmpdir, "finetune"),
            discriminative_entries=self.discriminative,
            init_checkpoint=baseline,
        )
        self.assertEqual(list(result.model.heads), ["phonetic", "discriminative"])
        numpy.testing.assert_array_equal(
            result.model.parameters()["phonetic.w"], MtlModel.load(path=baseline).parameters()["phonetic.w"]
        )

    def test_train_errors(self: TestCase) -> None:
        """
        Description
        -----------

        This method checks that invalid training inputs are rejected
        before any output is written.

        """

        # Execute the unit-test.
        out_dir = os.path.join(self.tmpdir, "errors")
        kwargs = {"model_cfg": self.model_cfg, "frontend_cfg": self.frontend_cfg, "out_dir": out_dir}
        with self.assertRaises(ConfigError):
            train(mode="joint", cfg=TrainConfig(), phonetic_entries=self.phonetic, **kwargs)
        with self.assertRaises(ConfigError):
            train(mode="phrase", cfg=TrainConfig(), phonetic_entries=self.phonetic, **kwargs)
        with self.assertRaises(ConfigError):
            train(mode="finetune", cfg=TrainConfig(), discriminative_entries=self.discriminative, **kwargs)
        with self.assertRaises(ConfigError):
            train(
                mode="mtl",
                cfg=TrainConfig(mtl_mix=1.0),
                phonetic_entries=self.phonetic,
                discriminative_entries=self.discriminative,
                **kwargs,
            )
        with self.assertRaises(ConfigError):
            train(mode="mtl", cfg=TrainConfig(), phonetic_entries=self.phonetic, discriminative_entries=[], **kwargs)
        self.assertFalse(os.path.exists(out_dir))

    def test_worker_update_equivalence(self: TestCase) -> None:
        """
        Description
        -----------

        This method checks that a step partitioned over two workers
        applies the single-worker parameter update.

        """

        # Execute the unit-test.
        phonetic = load_batch(entries=self.phonetic[:4], frontend_cfg=self.frontend_cfg)
        discriminative = load_batch(entries=self.discriminative, frontend_cfg=self.frontend_cfg)
        before = self._model().parameters()
        single = self._model()
        mtl_step(
            model=single,
            phonetic_batch=phonetic,
            discriminative_batch=discriminative,
            cfg=TrainConfig(),
            state=AdamState(),
        )
        split = self._model()
        with ThreadPoolExecutor(max_workers=2) as executor:
            mtl_step(
                model=split,
                phonetic_batch=phonetic,
                discriminative_batch=discriminative,
                cfg=TrainConfig(workers=2, batch_size_per_worker=8),
                state=AdamState(),
                executor=executor,
            )
        for (name, value) in single.parameters().items():
            update = value - before[name]
            self.assertTrue(numpy.any(update != 0.0), msg=name)
            numpy.testing.assert_allclose(
                split.parameters()[name] - before[name], update, rtol=1.0e-6, atol=1.0e-12, err_msg=name
            )

    def test_non_finite_step(self: TestCase) -> None:
        """
        Description
        -----------

        This method checks that non-finite features abort a step and
        a training run before the parameters or any checkpoint are
        updated.

        """

        # Execute the unit-test.
        path = os.path.join(self.tmpdir, "features", "nan.vtf")
        write_features(path=path, feats=FeatureSequence(frames=numpy.full((36, 40), numpy.nan), frame_rate_fps=100.0))
        entry = ManifestEntry(id="nan", feature_path=path, transcript=[1, 2])
        model = self._model()
        before = {name: value.copy() for (name, value) in model.parameters().items()}
        state = AdamState()
        with self.assertRaises(NumericError):
            mtl_step(
                model=model,
                phonetic_batch=load_batch(entries=[entry], frontend_cfg=self.frontend_cfg),
                discriminative_batch=None,
                cfg=TrainConfig(),
                state=state,
            )
        self.assertEqual(state.step, 0)
        for (name, value) in model.parameters().items():
            numpy.testing.assert_array_equal(value, before[name])
        out_dir = os.path.join(self.tmpdir, "nan")
        with self.assertRaises(NumericError):
            train(
                mode="baseline",
                cfg=TrainConfig(epochs=2),
                model_cfg=self.model_cfg,
                frontend_cfg=self.frontend_cfg,
                out_dir=out_dir,
                phonetic_entries=self.phonetic + [entry],
            )
        self.assertFalse(fileio_interface.fileexist(path=os.path.join(out_dir, "model.vtck")))
        self.assertEqual(os.listdir(os.path.join(out_dir, "checkpoints")), [])

    def test_halve_on_plateau(self: TestCase) -> None:
        """
        Description
        -----------

        This method checks that the learning rate is halved after an
        epoch whose mean loss does not improve; every parameter is
        frozen so that the epoch losses are equal.

        """

        # Execute the unit-test.
        rates = {}
        for halve in (False, True):
            out_dir = os.path.join(self.tmpdir, f"plateau_{halve}")
            result = train(
                mode="baseline",
                cfg=TrainConfig(epochs=3, frozen=("trunk", "phonetic"), halve_on_plateau=halve),
                model_cfg=self.model_cfg,
                frontend_cfg=self.frontend_cfg,
                out_dir=out_dir,
                phonetic_entries=self.phonetic[:1],
            )
            self.assertEqual(len(set(result.epoch_losses)), 1)
            with open(result.loss_log, "r", encoding="utf-8", newline="") as stream:
                rates[halve] = [float(row["lr"]) for row in csv.DictReader(stream)]
        self.assertEqual(rates[False], [0.0032, 0.0032, 0.0032])
        self.assertEqual(rates[True], [0.0032, 0.0032, 0.0016])

    @pytest.mark.skipif(not os.environ.get("VTRIGGER_LONG_TESTS"), reason="set VTRIGGER_LONG_TESTS to run")
    def test_baseline_convergence(self: TestCase) -> None:
        """
        Description
        -----------

        This method trains the desk-scale baseline on 200 synthetic
        utterances for 30 epochs and checks that the final epoch loss
        is below half of the first.

        """

        # Execute the unit-test.
        frontend_cfg = FrontendConfig()
        corpus = generate_synthetic_corpus(
            spec=SynthSpec(num_phonetic=200, num_positive=1, num_negative=1, num_test_positive=1, num_test_negative=1),
            frontend_cfg=frontend_cfg,
            out_dir=os.path.join(self.tmpdir, "corpus"),
        )
        result = train(
            mode="baseline",
            cfg=TrainConfig(epochs=30),
            model_cfg=ModelConfig(),
            frontend_cfg=frontend_cfg,
            out_dir=os.path.join(self.tmpdir, "baseline"),
            phonetic_entries=corpus.phonetic,
        )
        self.assertEqual(len(result.epoch_losses), 30)
        self.assertLess(result.epoch_losses[-1], 0.5 * result.epoch_losses[0])

    def test_config(self: TestCase) -> None:
        """
        Description
        -----------

        This method checks the configuration defaults, the sub-batch
        sizes of each mode and the schema errors.

        """

        # Execute the unit-test.
        cfg = TrainConfig.from_dict(opts={})
        self.assertEqual(cfg, TrainConfig())
        self.assertEqual(TrainConfig.from_dict(opts=cfg.to_dict()), cfg)
        self.assertEqual(cfg.sub_batch_sizes(mode="mtl"), (12, 4))
        self.assertEqual(TrainConfig(mtl_mix=0.0).sub_batch_sizes(mode="mtl"), (15, 1))
        self.assertEqual(cfg.sub_batch_sizes(mode="baseline"), (16, 0))
        self.assertEqual(cfg.sub_batch_sizes(mode="phrase"), (0, 16))
        for opts in ({"learning_rate": -1.0}, {"mtl_mix": 1.5}, {"betas": [0.9]}, {"epochs": 0}):
            with self.assertRaises(SchemaInterfaceError):
                TrainConfig.from_dict(opts=opts)


# ----


if __name__ == "__main__":
    unittest.main()
