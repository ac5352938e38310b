"""
Module
------

    commands_interface.py

Description
-----------

    This module contains the sub-command drivers of the command-line
    interface; each driver validates its inputs before writing any
    output and is tagged with its stage name so that failures are
    reported as `[<stage>] <message>`.

Functions
---------

    synth(options_obj, config)

        This function generates the synthetic corpus.

    augment(options_obj, config)

        This function builds the augmented (or evaluation-condition)
        variants of an audio manifest.

    featurize(options_obj, config)

        This function featurizes an audio manifest.

    train_model(options_obj, config)

        This function trains a model.

    score(options_obj, config)

        This function scores the segments of a manifest.

    eval_det(options_obj, config)

        This function computes DET curves from a scored-segment file.

    demo(options_obj, config)

        This function runs the five-model comparison.

Author(s)
---------

    vtrigger developers; 19 October 2026

"""

# ----

import os
from types import SimpleNamespace
from typing import Callable, Dict

from augment.augment_interface import (
    build_augmented_set,
    build_condition_set,
    load_residual_pool,
    load_rir_pool,
    synth_residual_pool,
    synth_rir_pool,
)
from cli.config_interface import ExperimentConfig
from cli.demo_interface import run_demo
from data.synth_interface import generate_synthetic_corpus
from evaluation.det_interface import (
    det_by_group,
    det_curve,
    fr_table,
    plot_det,
    read_scores_csv,
    to_segments,
    write_curve_csv,
    write_scores_csv,
)
from frontend.featurize_interface import featurize_manifest
from ioapps.manifest_interface import read_manifest, write_manifest
from nnet.model_interface import MtlModel
from scorer.scorer_interface import score_manifest
from tools.fileio_interface import makedirs, require_files
from tools.random_interface import stage_seed
from trainer.trainer_interface import train
from utils.decorator_interface import stage_wrapper
from utils.exceptions_interface import ConfigError, DemoInterfaceError
from utils.logger_interface import Logger

# ----

# Define all available module properties.
__all__ = ["COMMANDS", "augment", "demo", "eval_det", "featurize", "score", "synth", "train_model"]

# ----

logger = Logger(caller_name=__name__)

# ----


@stage_wrapper(stage="synth")
def synth(options_obj: SimpleNamespace, config: ExperimentConfig) -> int:
    """
    Description
    -----------

    This function generates the synthetic corpus beneath `--out-dir`
    and records the resolved configuration as `config.yaml`.

    """

    corpus = generate_synthetic_corpus(spec=config.synth, frontend_cfg=config.frontend, out_dir=options_obj.out_dir)
    config.write(path=os.path.join(options_obj.out_dir, "config.yaml"))
    for (name, path) in corpus.manifests.items():
        logger.info(msg=f"Wrote the {name} manifest {path}.")

    return 0


@stage_wrapper(stage="augment")
def augment(options_obj: SimpleNamespace, config: ExperimentConfig) -> int:
    """
    Description
    -----------

    This function builds the reverberated and echo-residual variants
    of every utterance of `--manifest` (or, with `--conditions`, the
    evaluation-condition variants); impulse responses, residuals and
    noises are read from the listed files or synthesized from the
    root seed when none are listed.

    """

    rir_files = options_obj.rir or list(config.paths.rir_files)
    residual_files = options_obj.residual or list(config.paths.residual_files)
    noise_files = options_obj.noise or list(config.paths.noise_files)
    require_files(paths=[options_obj.manifest] + rir_files + residual_files + noise_files, err_cls=ConfigError)
    entries = read_manifest(path=options_obj.manifest)
    sample_rate_hz = config.frontend.sample_rate_hz
    audio_dir = options_obj.audio_dir or os.path.join(os.path.dirname(os.path.abspath(options_obj.out_manifest)), "audio")

    if residual_files:
        residual_pool = load_residual_pool(paths=residual_files)
    else:
        residual_pool = synth_residual_pool(
            seed=stage_seed(root_seed=config.seed, stage="augment.residuals"),
            cfg=config.augment,
            sample_rate_hz=sample_rate_hz,
        )
    if options_obj.conditions:
        if noise_files:
            noise_pool = load_residual_pool(paths=noise_files)
        else:
            noise_pool = synth_residual_pool(
                seed=stage_seed(root_seed=config.seed, stage="augment.noise"),
                cfg=config.augment,
                sample_rate_hz=sample_rate_hz,
                modulation_depth=0.0,
                prefix="noise",
            )
        augmented = build_condition_set(
            entries=entries,
            residual_pool=residual_pool,
            noise_pool=noise_pool,
            seed=stage_seed(root_seed=config.seed, stage="augment.conditions"),
            out_dir=audio_dir,
            workers=config.augment.workers,
        )
    else:
        if rir_files:
            rir_pool = load_rir_pool(paths=rir_files)
        else:
            rir_pool = synth_rir_pool(
                seed=stage_seed(root_seed=config.seed, stage="augment.rirs"),
                cfg=config.augment,
                sample_rate_hz=sample_rate_hz,
            )
        augmented = build_augmented_set(
            entries=entries,
            rir_pool=rir_pool,
            residual_pool=residual_pool,
            seed=stage_seed(root_seed=config.seed, stage="augment"),
            out_dir=audio_dir,
            snr_range=config.augment.snr_range_db,
            workers=config.augment.workers,
        )
    write_manifest(path=options_obj.out_manifest, entries=augmented)

    return 0


@stage_wrapper(stage="featurize")
def featurize(options_obj: SimpleNamespace, config: ExperimentConfig) -> int:
    """
    Description
    -----------

    This function computes the features of every audio utterance of
    `--manifest` and writes the manifest with the feature paths set.

    """

    if options_obj.workers < 1:
        msg = f"The number of workers {options_obj.workers} must be positive. Aborting!!!"
        raise ConfigError(msg=msg)
    require_files(paths=[options_obj.manifest], err_cls=ConfigError)
    entries = read_manifest(path=options_obj.manifest)
    feature_dir = options_obj.feature_dir or os.path.join(
        os.path.dirname(os.path.abspath(options_obj.out_manifest)), "features"
    )
    featurized = featurize_manifest(
        entries=entries, cfg=config.frontend, out_dir=feature_dir, workers=options_obj.workers
    )
    write_manifest(path=options_obj.out_manifest, entries=featurized)

    return 0


@stage_wrapper(stage="train")
def train_model(options_obj: SimpleNamespace, config: ExperimentConfig) -> int:
    """
    Description
    -----------

    This function trains a model in the `--mode` training mode; the
    manifests and the initial checkpoint are checked before the
    output directory is created.

    """

    require_files(
        paths=[options_obj.phonetic_manifest, options_obj.disc_manifest, options_obj.init_checkpoint],
        err_cls=ConfigError,
    )
    phonetic = read_manifest(path=options_obj.phonetic_manifest) if options_obj.phonetic_manifest else None
    discriminative = read_manifest(path=options_obj.disc_manifest) if options_obj.disc_manifest else None
    result = train(
        mode=options_obj.mode,
        cfg=config.train,
        model_cfg=config.model,
        frontend_cfg=config.frontend,
        out_dir=options_obj.out_dir,
        phonetic_entries=phonetic,
        discriminative_entries=discriminative,
        init_checkpoint=options_obj.init_checkpoint,
    )
    config.write(path=os.path.join(options_obj.out_dir, "config.yaml"))
    logger.info(msg=f"Wrote {len(result.checkpoints)} checkpoints and the loss log {result.loss_log}.")

    return 0


@stage_wrapper(stage="score")
def score(options_obj: SimpleNamespace, config: ExperimentConfig) -> int:
    """
    Description
    -----------

    This function scores every segment of `--manifest` and writes one
    tab-separated line per segment (`id`, `log_prob`, `normalized`);
    with `--scores-csv` the scored-segment CSV is also written.

    """

    require_files(paths=[options_obj.model, options_obj.manifest], err_cls=ConfigError)
    model = MtlModel.load(path=options_obj.model)
    if options_obj.head not in model.heads:
        msg = f"The model {options_obj.model} has no {options_obj.head} head. Aborting!!!"
        raise ConfigError(msg=msg)
    entries = read_manifest(path=options_obj.manifest)
    scores = score_manifest(
        model=model,
        entries=entries,
        frontend_cfg=config.frontend,
        head=options_obj.head,
        keyword=config.keyword if options_obj.head == "phonetic" else None,
    )
    segments = (
        to_segments(scores=scores, score_field=config.evaluation.score_field) if options_obj.scores_csv else None
    )
    makedirs(path=os.path.dirname(os.path.abspath(options_obj.out)))
    with open(options_obj.out, "w", encoding="utf-8") as stream:
        for (entry, detection) in scores:
            stream.write(f"{entry.id}\t{detection.log_prob!r}\t{detection.length_normalized!r}\n")
    if segments is not None:
        write_scores_csv(path=options_obj.scores_csv, segments=segments)
    logger.info(msg=f"Scored {len(scores)} segments with the {options_obj.head} head.")

    return 0


@stage_wrapper(stage="eval-det")
def eval_det(options_obj: SimpleNamespace, config: ExperimentConfig) -> int:
    """
    Description
    -----------

    This function computes the DET curve of `--scores` (or one curve
    per group with `--group-by`), writes one curve CSV per curve, the
    SVG plot and the false-reject table at the operating points.

    """

    fa_targets = options_obj.fa_targets or list(config.evaluation.fa_targets)
    if any(target < 0.0 for target in fa_targets):
        msg = f"The false-accept targets {fa_targets} must be non-negative. Aborting!!!"
        raise ConfigError(msg=msg)
    segments = read_scores_csv(path=options_obj.scores)
    if options_obj.group_by:
        curves = det_by_group(segments=segments, key=options_obj.group_by)
    else:
        curves = {options_obj.label: det_curve(segments=segments, label=options_obj.label)}
    for (label, curve) in curves.items():
        write_curve_csv(path=os.path.join(options_obj.out_dir, f"det_{label}.csv"), curve=curve)
    if config.evaluation.plot:
        plot_det(curves=curves, path=os.path.join(options_obj.out_dir, "det.svg"), fa_targets=fa_targets)
    table = fr_table(curves=curves, fa_targets=fa_targets)
    with open(os.path.join(options_obj.out_dir, "fr_table.txt"), "w", encoding="utf-8") as stream:
        stream.write(table + "\n")
    logger.info(msg=f"False-reject rates at the operating points:\n{table}")

    return 0


@stage_wrapper(stage="demo")
def demo(options_obj: SimpleNamespace, config: ExperimentConfig) -> int:
    """
    Description
    -----------

    This function runs the five-model comparison beneath `--out-dir`;
    the report is written before the directional checks are enforced.

    Raises
    ------

    DemoInterfaceError:

        - raised if a directional check of the report fails.

    """

    report = run_demo(config=config, out_dir=options_obj.out_dir)
    failed = [name for (name, passed) in report.checks.items() if not passed]
    if failed:
        msg = (
            f"The directional check(s) {failed} failed at {config.demo.fa_target:g} FA/h; "
            f"see {os.path.join(options_obj.out_dir, 'report.txt')}. Aborting!!!"
        )
        raise DemoInterfaceError(msg=msg)

    return 0


# ----

# Sub-command name to driver.
COMMANDS: Dict[str, Callable[[SimpleNamespace, ExperimentConfig], int]] = {
    "synth": synth,
    "augment": augment,
    "featurize": featurize,
    "train": train_model,
    "score": score,
    "eval-det": eval_det,
    "demo": demo,
}
