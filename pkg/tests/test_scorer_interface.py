#!/usr/bin/env python3

"""
Script
------

    test_scorer_interface.py

Description
-----------

    This script is the driver script for the `scorer.scorer_interface`
    module unit-tests.

Classes
-------

    TestScorerMethods()

        This is the base-class object for all `scorer_interface`
        module unit-tests; it is a sub-class of TestCase.

Requirements
------------

- pytest; https://docs.pytest.org/en/7.2.x/

Author(s)
---------

    vtrigger developers; 19 October 2026

"""

# ----

import itertools
import math
import os
import tempfile
import unittest
from unittest import TestCase

import numpy
from scipy.special import log_softmax

from ctc.ctc_interface import LabelSequence, ctc_loss
from frontend.mel_interface import FeatureSequence, FrontendConfig
from ioapps.features_interface import write_features
from ioapps.manifest_interface import ManifestEntry
from nnet.head_interface import PosteriorGram
from nnet.model_interface import ModelConfig, MtlModel, phonetic_alphabet
from scorer.scorer_interface import KeywordSpec, score_discriminative, score_keyword, score_manifest
from tools import fileio_interface
from utils.exceptions_interface import EmptyInputError, ScorerInterfaceError

# ----


class TestScorerMethods(TestCase):
    """
    Description
    -----------

    This is the base-class object for all `scorer_interface` module
    unit-tests; it is a sub-class of TestCase.

    """

    def setUp(self: TestCase) -> None:
        self.rng = numpy.random.default_rng(23)
        self.alphabet = phonetic_alphabet(4)

    def _posteriors(self: TestCase, nframes: int, nsymbols: int) -> PosteriorGram:
        log_probs = log_softmax(2.0 * self.rng.standard_normal((nframes, nsymbols)), axis=1)
        return PosteriorGram.from_log_probs(log_probs=log_probs, alphabet=self.alphabet[:nsymbols])

    def test_examples(self: TestCase) -> None:
        """
        Description
        -----------

        This method checks the two-frame uniform example and the score
        of a segment too short for the keyword.

        """

        # Execute the unit-test.
        keyword = KeywordSpec(name="a", phone_sequence=LabelSequence((1,)))
        posteriors = PosteriorGram(probs=numpy.full((2, 2), 0.5), alphabet=["<blank>", "a"])
        score = score_keyword(posteriors=posteriors, keyword=keyword)
        self.assertAlmostEqual(score.log_prob, math.log(0.75), places=12)
        self.assertAlmostEqual(score.length_normalized, math.log(0.75) / 2.0, places=12)
        self.assertAlmostEqual(score_discriminative(posteriors=posteriors).log_prob, math.log(0.75), places=12)
        keyword = KeywordSpec(name="aa", phone_sequence=LabelSequence((1, 1)))
        self.assertEqual(score_keyword(posteriors=posteriors, keyword=keyword).log_prob, -math.inf)

    def test_ctc_identity(self: TestCase) -> None:
        """
        Description
        -----------

        This method checks that the keyword score is the negative CTC
        loss of the keyword phone sequence.

        """

        # Execute the unit-test.
        for _ in range(100):
            nsymbols = int(self.rng.integers(2, 6))
            posteriors = self._posteriors(nframes=int(self.rng.integers(1, 12)), nsymbols=nsymbols)
            symbols = tuple(int(s) for s in self.rng.integers(1, nsymbols, int(self.rng.integers(1, 4))))
            keyword = KeywordSpec(name="kw", phone_sequence=LabelSequence(symbols))
            score = score_keyword(posteriors=posteriors, keyword=keyword)
            expected = -ctc_loss(log_probs=posteriors.log_probs(), target=symbols).loss
            if math.isinf(expected):
                self.assertEqual(score.log_prob, -math.inf)
            else:
                self.assertLessEqual(abs(score.log_prob - expected), 1.0e-12)

    def test_total_probability(self: TestCase) -> None:
        """
        Description
        -----------

        This method checks that the probabilities of every collapsed
        label sequence sum to one.

        """

        # Execute the unit-test.
        for nframes in range(1, 6):
            posteriors = self._posteriors(nframes=nframes, nsymbols=3)
            total = 0.0
            for length in range(nframes + 1):
                for symbols in itertools.product((1, 2), repeat=length):
                    loss = ctc_loss(log_probs=posteriors.log_probs(), target=symbols).loss
                    total += math.exp(-loss)
            self.assertAlmostEqual(total, 1.0, delta=1.0e-8)

    def test_keyword_spec(self: TestCase) -> None:
        """
        Description
        -----------

        This method checks the keyword construction from symbol names
        or indices and its validation.

        """

        # Execute the unit-test.
        keyword = KeywordSpec.from_dict(opts={"name": "Hey", "phones": ["p00", "p02", "3"]}, alphabet=self.alphabet)
        self.assertEqual(keyword.name, "Hey")
        self.assertEqual(keyword.phone_sequence.symbols, (1, 3, 3))
        for phones in ([], ["zz"], ["<blank>"], [7]):
            with self.assertRaises(ScorerInterfaceError):
                KeywordSpec.from_dict(opts={"phones": phones}, alphabet=self.alphabet)

    def test_errors(self: TestCase) -> None:
        """
        Description
        -----------

        This method checks the empty posteriorgram, alphabet mismatch
        and discriminative shape errors.

        """

        # Execute the unit-test.
        keyword = KeywordSpec(name="kw", phone_sequence=LabelSequence((4,)))
        with self.assertRaises(ScorerInterfaceError):
            score_keyword(posteriors=self._posteriors(nframes=3, nsymbols=3), keyword=keyword)
        with self.assertRaises(EmptyInputError):
            score_keyword(posteriors=self._posteriors(nframes=0, nsymbols=5), keyword=keyword)
        with self.assertRaises(ScorerInterfaceError):
            score_discriminative(posteriors=self._posteriors(nframes=3, nsymbols=3))

    def test_score_manifest(self: TestCase) -> None:
        """
        Description
        -----------

        This method checks that batched manifest scoring matches the
        scores of each utterance evaluated alone.

        """

        # Execute the unit-test.
        tmpdir = tempfile.mkdtemp(prefix="vtrigger_scorer_")
        try:
            cfg = FrontendConfig()
            model = MtlModel.init(
                config=ModelConfig(hidden_dim=4, num_layers=1, phonetic_alphabet=self.alphabet, dtype="float64"),
                rng=self.rng,
            )
            entries = []
            for (idx, nframes) in enumerate((30, 18, 45)):
                path = os.path.join(tmpdir, f"u{idx}.vtf")
                write_features(path=path, feats=FeatureSequence(frames=self.rng.standard_normal((nframes, 40)), frame_rate_fps=100.0))
                label = "positive" if idx % 2 == 0 else "negative"
                entries.append(ManifestEntry(id=f"u{idx}", feature_path=path, binary_label=label))
            keyword = KeywordSpec(name="kw", phone_sequence=LabelSequence((1, 2)))
            with self.assertRaises(ScorerInterfaceError):
                score_manifest(model=model, entries=entries, frontend_cfg=cfg, head="phonetic")
            for head in ("phonetic", "discriminative"):
                batched = score_manifest(
                    model=model, entries=entries, frontend_cfg=cfg, head=head, keyword=keyword, batch_size=2
                )
                self.assertEqual([entry.id for (entry, _) in batched], ["u0", "u1", "u2"])
                for (entry, score) in batched:
                    (alone,) = score_manifest(model=model, entries=[entry], frontend_cfg=cfg, head=head, keyword=keyword)
                    self.assertAlmostEqual(score.log_prob, alone[1].log_prob, places=9)
                    self.assertLessEqual(score.log_prob, 0.0)
        finally:
            fileio_interface.rmdir(path=tmpdir)


# ----


if __name__ == "__main__":
    unittest.main()
