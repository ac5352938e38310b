"""
Module
------

    demo_interface.py

Description
-----------

    This module contains the five-model comparison run on the
    synthetic corpus: for every seed a corpus is generated, a
    baseline phonetic model, a phrase-specific model trained from
    scratch, a phrase-specific model fine-tuned from the baseline and
    a multi-task model are trained, the shared test set is scored by
    the baseline phonetic scorer, both phrase-specific models and
    both multi-task heads and one DET curve per scorer is computed.
    The report holds the median false-reject rate of each scorer at
    each false-accept operating point and the directional check: the
    multi-task discriminative head is at least as good as the
    baseline and better than the phrase-specific model trained from
    scratch.

Classes
-------

    DemoReport(labels, fa_targets, per_seed, median, checks, table)

        This is the base-class object for the comparison report.

Functions
---------

    run_demo(config, out_dir)

        This function runs the five-model comparison.

Author(s)
---------

    vtrigger developers; 19 October 2026

"""

# ----

import os
from dataclasses import dataclass, field, replace
from typing import Callable, Dict, List

import numpy

from cli.config_interface import ExperimentConfig
from confs.json_interface import write_json
from data.synth_interface import generate_synthetic_corpus
from evaluation.det_interface import (
    DetCurve,
    det_curve,
    fr_at_fa,
    plot_det,
    to_segments,
    write_curve_csv,
    write_scores_csv,
)
from frontend.featurize_interface import featurize_manifest
from ioapps.manifest_interface import ManifestEntry
from scorer.scorer_interface import score_manifest
from tools.fileio_interface import makedirs
from trainer.trainer_interface import TrainResult, train
from utils import table_interface
from utils.decorator_interface import stage_wrapper
from utils.logger_interface import Logger

# ----

# Define all available module properties.
__all__ = ["DEMO_SCORERS", "DemoReport", "run_demo"]

# ----

logger = Logger(caller_name=__name__)

# The scorers of the comparison: (label, training mode, head).
DEMO_SCORERS = (
    ("baseline_phonetic", "baseline", "phonetic"),
    ("phrase_specific", "phrase", "discriminative"),
    ("phrase_finetuned", "finetune", "discriminative"),
    ("mtl_phonetic", "mtl", "phonetic"),
    ("mtl_discriminative", "mtl", "discriminative"),
)

# ----


@dataclass
class DemoReport:
    """
    Description
    -----------

    This is the base-class object for the comparison report;
    `per_seed` maps each seed to the false-reject rates of each
    scorer at the operating points and `median` holds the medians
    over the seeds.

    """

    labels: List[str]
    fa_targets: List[float]
    per_seed: Dict[int, Dict[str, List[float]]]
    median: Dict[str, List[float]]
    checks: Dict[str, bool]
    table: str = ""
    curves: Dict[int, Dict[str, DetCurve]] = field(default_factory=dict)

    def to_dict(self) -> Dict:
        return {
            "labels": self.labels,
            "fa_targets": self.fa_targets,
            "per_seed": {str(seed): frs for (seed, frs) in self.per_seed.items()},
            "median": self.median,
            "checks": self.checks,
        }


# ----


def _staged(stage: str, func: Callable, **kwargs) -> object:
    return stage_wrapper(stage=stage)(func)(**kwargs)


def _featurized(entries: List[ManifestEntry], config: ExperimentConfig, out_dir: str) -> List[ManifestEntry]:
    if all(entry.feature_path is not None for entry in entries):
        return entries
    return featurize_manifest(entries=entries, cfg=config.frontend, out_dir=out_dir, workers=config.train.workers)


def _run_seed(config: ExperimentConfig, seed: int, out_dir: str) -> Dict[str, DetCurve]:
    """
    Description
    -----------

    This function runs the comparison for a single seed and returns
    the DET curve of each scorer.

    """

    seed_dir = os.path.join(out_dir, f"seed_{seed}")
    corpus = _staged(
        stage=f"demo.seed_{seed}.synth",
        func=generate_synthetic_corpus,
        spec=replace(config.synth, seed=seed),
        frontend_cfg=config.frontend,
        out_dir=os.path.join(seed_dir, "corpus"),
    )
    feature_dir = os.path.join(seed_dir, "corpus", "mel")
    (phonetic, discriminative, test) = (
        _featurized(entries=entries, config=config, out_dir=feature_dir)
        for entries in (corpus.phonetic, corpus.discriminative, corpus.test)
    )

    results: Dict[str, TrainResult] = {}
    for mode in ("baseline", "phrase", "finetune", "mtl"):
        init_checkpoint = os.path.join(seed_dir, "baseline", "model.vtck") if mode == "finetune" else None
        results[mode] = _staged(
            stage=f"demo.seed_{seed}.train.{mode}",
            func=train,
            mode=mode,
            cfg=replace(config.train, seed=seed, epochs=config.demo.epochs[mode]),
            model_cfg=config.model,
            frontend_cfg=config.frontend,
            out_dir=os.path.join(seed_dir, mode),
            phonetic_entries=phonetic if mode in ("baseline", "mtl") else None,
            discriminative_entries=discriminative if mode != "baseline" else None,
            init_checkpoint=init_checkpoint,
        )

    curves = {}
    for (label, mode, head) in DEMO_SCORERS:
        scores = _staged(
            stage=f"demo.seed_{seed}.score.{label}",
            func=score_manifest,
            model=results[mode].model,
            entries=test,
            frontend_cfg=config.frontend,
            head=head,
            keyword=config.keyword if head == "phonetic" else None,
        )
        segments = to_segments(scores=scores, score_field=config.evaluation.score_field)
        curves[label] = _staged(stage=f"demo.seed_{seed}.eval.{label}", func=det_curve, segments=segments, label=label)
        write_scores_csv(path=os.path.join(seed_dir, "scores", f"{label}.csv"), segments=segments)
        write_curve_csv(path=os.path.join(seed_dir, "curves", f"{label}.csv"), curve=curves[label])
    if config.evaluation.plot:
        plot_det(curves=curves, path=os.path.join(seed_dir, "det.svg"), fa_targets=config.evaluation.fa_targets)

    return curves


def _compose(report: DemoReport) -> str:
    table_obj = table_interface.init_table()
    table_obj.header = ["model"] + [f"median FR @ {target:g} FA/h" for target in report.fa_targets]
    for label in report.labels:
        table_obj.table.append([label] + report.median[label])
    table = table_interface.compose(table_obj=table_obj)
    checks = "\n".join(f"{name}: {'pass' if passed else 'FAIL'}" for (name, passed) in report.checks.items())

    return f"{table}\n{checks}"


def run_demo(config: ExperimentConfig, out_dir: str) -> DemoReport:
    """
    Description
    -----------

    This function runs the five-model comparison for every seed of
    the `demo` configuration section and writes, beneath `out_dir`,
    one directory per seed (corpus, models, scores, curves and DET
    plot), `report.json` and `report.txt`.

    Parameters
    ----------

    config: ``ExperimentConfig``

        A Python ExperimentConfig object.

    out_dir: ``str``

        A Python string specifying the output directory.

    Returns
    -------

    report: ``DemoReport``

        A Python DemoReport object.

    Raises
    ------

    Error:

        - raised (tagged with the failing stage) if any stage fails.

    """

    fa_targets = [float(target) for target in config.evaluation.fa_targets]
    if config.demo.fa_target not in fa_targets:
        fa_targets.append(float(config.demo.fa_target))
    makedirs(path=out_dir)
    config.write(path=os.path.join(out_dir, "config.yaml"))
    labels = [label for (label, _, _) in DEMO_SCORERS]
    (per_seed, all_curves) = ({}, {})
    for seed in config.demo.seeds:
        logger.status(msg=f"Running the model comparison for seed {seed}.")
        curves = _run_seed(config=config, seed=seed, out_dir=out_dir)
        all_curves[seed] = curves
        per_seed[seed] = {
            label: [fr_at_fa(curve=curves[label], fa_target=target) for target in fa_targets] for label in labels
        }
    median = {
        label: [float(value) for value in numpy.median([per_seed[seed][label] for seed in per_seed], axis=0)]
        for label in labels
    }
    at_target = {label: median[label][fa_targets.index(float(config.demo.fa_target))] for label in labels}
    checks = {
        "mtl_discriminative_not_worse_than_baseline": at_target["mtl_discriminative"] <= at_target["baseline_phonetic"],
        "phrase_specific_worse_than_mtl": at_target["phrase_specific"] > at_target["mtl_discriminative"],
    }
    report = DemoReport(
        labels=labels, fa_targets=fa_targets, per_seed=per_seed, median=median, checks=checks, curves=all_curves
    )
    report.table = _compose(report=report)
    write_json(json_file=os.path.join(out_dir, "report.json"), in_dict=report.to_dict())
    with open(os.path.join(out_dir, "report.txt"), "w", encoding="utf-8") as stream:
        stream.write(report.table + "\n")
    logger.info(msg=f"Model comparison over seeds {list(config.demo.seeds)}:\n{report.table}")
    for (name, passed) in checks.items():
        if not passed:
            logger.warn(msg=f"The directional check {name} failed at {config.demo.fa_target:g} FA/h.")

    return report

