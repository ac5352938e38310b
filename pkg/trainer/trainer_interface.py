"""
Module
------

    trainer_interface.py

Description
-----------

    This module contains the training of the phonetic, the
    phrase-specific and the multi-task (MTL) models: the joint
    objective is the sum of the phonetic-head CTC loss over a
    phonetic sub-batch and the discriminative-head CTC loss over a
    discriminative sub-batch, both evaluated through a single trunk
    forward pass; the gradient is reduced over synchronous in-process
    workers, clipped and applied with Adam.

Classes
-------

    MtlLoss(c_p, c_d, c_mtl, grad_norm=0.0, skipped=False)

        This is the base-class object for the losses of a training
        step.

    TrainConfig()

        This is the base-class object for the training attributes.

    TrainResult(model, checkpoints, loss_log, epoch_losses)

        This is the base-class object for the outputs of a training
        run.

Functions
---------

    compute_gradients(model, phonetic_batch, discriminative_batch, cfg,
                      executor=None)

        This function computes the reduced gradient and the losses
        of a training step without updating the model.

    mtl_step(model, phonetic_batch, discriminative_batch, cfg, state,
             executor=None, lr=None)

        This function performs one training step.

    train(mode, cfg, model_cfg, frontend_cfg, out_dir,
          phonetic_entries=None, discriminative_entries=None,
          init_checkpoint=None)

        This function trains a model and writes the per-epoch
        checkpoints and the loss log.

Requirements
------------

- alive_progress; https://github.com/rsalmei/alive-progress

- numpy; https://numpy.org/

- schema; https://github.com/keleshev/schema

- scipy; https://scipy.org/

Author(s)
---------

    vtrigger developers; 19 October 2026

"""

# ----

# pylint: disable=too-many-arguments
# pylint: disable=too-many-locals
# pylint: disable=too-many-statements

# ----

import csv
import os
from collections import OrderedDict
from concurrent.futures import Executor, ThreadPoolExecutor
from dataclasses import asdict, dataclass, field
from typing import Dict, Iterator, List, Optional as TOptional, Sequence, Tuple

import numpy
from alive_progress import alive_bar
from schema import And, Optional, Use
from scipy.special import log_softmax

from ctc.ctc_interface import batch_ctc, min_alignment_length
from data.batch_interface import Batch, UtteranceSet, batch_iterator
from frontend.mel_interface import FrontendConfig
from ioapps.manifest_interface import ManifestEntry
from nnet.model_interface import ModelConfig, MtlModel, Tape, count_parameters
from tools.fileio_interface import fileexist, makedirs
from tools.random_interface import stage_rng, stage_seed
from trainer.optim_interface import AdamState, adam_step, clip_gradient, global_norm
from utils.exceptions_interface import ConfigError, EmptyInputError, NumericError, TrainerInterfaceError
from utils.logger_interface import Logger
from utils.schema_interface import positive, validate_schema

# ----

# Define all available module properties.
__all__ = [
    "MODES",
    "MtlLoss",
    "TrainConfig",
    "TrainResult",
    "compute_gradients",
    "mtl_step",
    "train",
]

# ----

logger = Logger(caller_name=__name__)

# Training modes and the heads each one trains.
MODES = {
    "baseline": ("phonetic",),
    "phrase": ("discriminative",),
    "finetune": ("discriminative",),
    "mtl": ("phonetic", "discriminative"),
}

LOSS_LOG_COLUMNS = ["step", "epoch", "c_p", "c_d", "c_mtl", "grad_norm", "lr"]

# ----


def _unit_interval(value: float) -> bool:
    return 0.0 <= value <= 1.0


@dataclass(frozen=True)
class TrainConfig:
    """
    Description
    -----------

    This is the base-class object for the training attributes; the
    effective batch of a step holds `batch_size_per_worker` x
    `workers` utterances, of which the fraction `mtl_mix` is drawn
    from the discriminative set in `mtl` mode.

    """

    learning_rate: float = 0.0032
    batch_size_per_worker: int = 16
    workers: int = 1
    grad_clip_norm: float = 5.0
    betas: Tuple[float, float] = (0.9, 0.999)
    eps: float = 1.0e-8
    mtl_mix: float = 0.25
    seed: int = 0
    epochs: int = 10
    loss_weights: Tuple[float, float] = (1.0, 1.0)
    frozen: Tuple[str, ...] = ()
    halve_on_plateau: bool = False
    bucketing: bool = False

    @property
    def batch_size(self) -> int:
        return self.batch_size_per_worker * self.workers

    def sub_batch_sizes(self, mode: str) -> Tuple[int, int]:
        """
        Description
        -----------

        This method returns the (phonetic, discriminative) number of
        utterances per step for the specified mode.

        Raises
        ------

        ConfigError:

            - raised if `mtl_mix` leaves no phonetic utterances in
              `mtl` mode; at least one discriminative utterance is
              always drawn.

        """

        if mode != "mtl":
            return (self.batch_size, 0) if "phonetic" in MODES[mode] else (0, self.batch_size)
        ndisc = max(1, int(round(self.mtl_mix * self.batch_size)))
        if ndisc >= self.batch_size:
            msg = f"The MTL mix {self.mtl_mix} leaves no phonetic utterances per step. Aborting!!!"
            raise ConfigError(msg=msg)

        return (self.batch_size - ndisc, ndisc)

    def to_dict(self) -> Dict:
        attrs = asdict(self)
        for key in ("betas", "loss_weights", "frozen"):
            attrs[key] = list(attrs[key])
        return attrs

    @classmethod
    def from_dict(cls, opts: Dict) -> "TrainConfig":
        """
        Description
        -----------

        This method validates the `train` configuration section and
        returns the corresponding TrainConfig object.

        Raises
        ------

        SchemaInterfaceError:

            - raised if the attributes do not satisfy the schema.

        """

        cls_schema = {
            Optional("learning_rate", default=0.0032): positive(float),
            Optional("batch_size_per_worker", default=16): positive(int),
            Optional("workers", default=1): positive(int),
            Optional("grad_clip_norm", default=5.0): positive(float),
            Optional("betas", default=[0.9, 0.999]): And(
                [Use(float)], lambda x: len(x) == 2 and all(0.0 <= beta < 1.0 for beta in x)
            ),
            Optional("eps", default=1.0e-8): positive(float),
            Optional("mtl_mix", default=0.25): And(Use(float), _unit_interval),
            Optional("seed", default=0): And(Use(int), lambda x: x >= 0),
            Optional("epochs", default=10): positive(int),
            Optional("loss_weights", default=[1.0, 1.0]): And(
                [Use(float)], lambda x: len(x) == 2 and min(x) >= 0.0
            ),
            Optional("frozen", default=[]): [str],
            Optional("halve_on_plateau", default=False): bool,
            Optional("bucketing", default=False): bool,
        }
        attrs = validate_schema(cls_schema=cls_schema, cls_opts=opts, section="train")
        for key in ("betas", "loss_weights", "frozen"):
            attrs[key] = tuple(attrs[key])

        return cls(**attrs)


@dataclass(frozen=True)
class MtlLoss:
    """
    Description
    -----------

    This is the base-class object for the losses of a training step;
    `c_p` and `c_d` are the weighted mean CTC losses of the phonetic
    and discriminative sub-batches and `c_mtl` is their sum;
    `grad_norm` is the global gradient norm before clipping.

    """

    c_p: float
    c_d: float
    c_mtl: float
    grad_norm: float = 0.0
    skipped: bool = False

    @classmethod
    def combine(cls, c_p: float, c_d: float, grad_norm: float = 0.0, skipped: bool = False) -> "MtlLoss":
        (c_p, c_d) = (float(c_p), float(c_d))
        return cls(c_p=c_p, c_d=c_d, c_mtl=c_p + c_d, grad_norm=float(grad_norm), skipped=skipped)


@dataclass
class TrainResult:
    """
    Description
    -----------

    This is the base-class object for the outputs of a training run;
    `epoch_losses` holds the mean `c_mtl` of each epoch.

    """

    model: MtlModel
    checkpoints: List[str]
    loss_log: str
    epoch_losses: List[float] = field(default_factory=list)


# ----


def _split(batch: TOptional[Batch], parts: int) -> List[TOptional[Batch]]:
    """
    Description
    -----------

    This function partitions a batch into `parts` contiguous worker
    sub-batches (NoneType where a worker receives no utterances).

    """

    if batch is None:
        return [None] * parts
    chunks = []
    for rows in numpy.array_split(numpy.arange(len(batch)), parts):
        if rows.size == 0:
            chunks.append(None)
            continue
        width = int(batch.lengths[rows].max())
        chunks.append(
            Batch(
                entries=[batch.entries[idx] for idx in rows],
                inputs=batch.inputs[rows, :width],
                lengths=batch.lengths[rows],
                targets=[batch.targets[idx] for idx in rows],
            )
        )

    return chunks


def _stack(batches: Sequence[Batch]) -> Tuple[numpy.ndarray, numpy.ndarray, List[slice]]:
    """
    Description
    -----------

    This function concatenates batches along the batch axis, padding
    to the longest utterance, and returns the rows of each batch.

    """

    width = max(batch.inputs.shape[1] for batch in batches)
    nrows = sum(len(batch) for batch in batches)
    inputs = numpy.zeros((nrows, width, batches[0].inputs.shape[2]), dtype=batches[0].inputs.dtype)
    (lengths, rows, start) = ([], [], 0)
    for batch in batches:
        inputs[start : start + len(batch), : batch.inputs.shape[1]] = batch.inputs
        lengths.append(batch.lengths)
        rows.append(slice(start, start + len(batch)))
        start += len(batch)

    return (inputs, numpy.concatenate(lengths), rows)


def _feasible_count(batch: TOptional[Batch]) -> int:
    if batch is None:
        return 0
    return int(
        sum(int(length) >= min_alignment_length(target) for (length, target) in zip(batch.lengths, batch.targets))
    )


def _worker(
    model: MtlModel, tasks: Dict[str, Tuple[Batch, float]]
) -> Tuple[TOptional["OrderedDict[str, numpy.ndarray]"], Dict[str, float]]:
    """
    Description
    -----------

    This function evaluates the weighted losses and the parameter
    gradient of one worker: a single trunk forward over the
    concatenated task sub-batches, one head per task and a single
    backward pass.

    Parameters
    ----------

    model: ``MtlModel``

        A Python MtlModel object; read only.

    tasks: ``Dict[str, Tuple[Batch, float]]``

        A Python dictionary mapping head names to the worker
        sub-batch and the per-utterance loss weight.

    Returns
    -------

    grads: ``OrderedDict[str, numpy.ndarray]``

        The weighted parameter gradients; NoneType if the worker
        received no utterances.

    losses: ``Dict[str, float]``

        The weighted loss sums keyed by head name.

    """

    tasks = OrderedDict((name, task) for (name, task) in tasks.items() if task[0] is not None)
    if not tasks:
        return (None, {})
    tape = Tape()
    (inputs, lengths, rows) = _stack([batch for (batch, _) in tasks.values()])
    hidden = model.trunk_forward(inputs=inputs, lengths=lengths, tape=tape)
    (d_logits, losses) = ({}, {})
    for ((name, (batch, weight)), row) in zip(tasks.items(), rows):
        logits = model.head_forward(name=name, hidden=hidden, rows=row, tape=tape)
        (loss, grad, feasible) = batch_ctc(
            log_probs=log_softmax(logits.astype(numpy.float64), axis=-1),
            lengths=batch.lengths,
            targets=batch.targets,
            weights=numpy.full(len(batch), weight),
            ids=batch.ids,
        )
        losses[name] = weight * float(loss[feasible].sum())
        d_logits[name] = grad

    return (model.backward(tape=tape, d_logits=d_logits), losses)


# ----


def compute_gradients(
    model: MtlModel,
    phonetic_batch: TOptional[Batch],
    discriminative_batch: TOptional[Batch],
    cfg: TrainConfig,
    executor: TOptional[Executor] = None,
) -> Tuple[TOptional["OrderedDict[str, numpy.ndarray]"], float, float]:
    """
    Description
    -----------

    This function computes the reduced gradient and the losses of a
    training step without updating the model. Each loss is the mean
    over the feasible utterances of its sub-batch, scaled by its loss
    weight; the sub-batches are partitioned over `cfg.workers`
    workers and the worker gradients are summed in worker order.

    Parameters
    ----------

    model: ``MtlModel``

        A Python MtlModel object.

    phonetic_batch: ``Batch``

        A Python Batch object of phonetic utterances; NoneType if the
        step has no phonetic task.

    discriminative_batch: ``Batch``

        A Python Batch object of discriminative utterances; NoneType
        if the step has no discriminative task.

    cfg: ``TrainConfig``

        A Python TrainConfig object.

    Keywords
    --------

    executor: ``Executor``, optional

        A Python concurrent.futures Executor for the workers; when
        NoneType the workers run serially.

    Returns
    -------

    grads: ``OrderedDict[str, numpy.ndarray]``

        The float64 parameter gradients; NoneType if no utterance is
        feasible.

    c_p: ``float``

        The weighted phonetic loss.

    c_d: ``float``

        The weighted discriminative loss.

    Raises
    ------

    ConfigError:

        - raised if neither batch is specified.

    """

    if phonetic_batch is None and discriminative_batch is None:
        msg = "A training step requires a phonetic or a discriminative batch. Aborting!!!"
        raise ConfigError(msg=msg)
    weights = {}
    for (name, batch, weight) in (
        ("phonetic", phonetic_batch, cfg.loss_weights[0]),
        ("discriminative", discriminative_batch, cfg.loss_weights[1]),
    ):
        if batch is None:
            continue
        count = _feasible_count(batch=batch)
        if count == 0:
            logger.warn(msg=f"Every {name} target of the step is infeasible; the {name} loss is skipped.")
            continue
        weights[name] = (batch, weight / count)
    if not weights:
        return (None, 0.0, 0.0)
    splits = {name: _split(batch=batch, parts=cfg.workers) for (name, (batch, _)) in weights.items()}
    jobs = [
        {name: (splits[name][idx], weight) for (name, (_, weight)) in weights.items()}
        for idx in range(cfg.workers)
    ]
    if executor is None or cfg.workers == 1:
        results = [_worker(model, tasks) for tasks in jobs]
    else:
        results = list(executor.map(_worker, [model] * len(jobs), jobs))

    # Reduce the worker contributions in worker order.
    (grads, losses) = (None, {"phonetic": 0.0, "discriminative": 0.0})
    for (worker_grads, worker_losses) in results:
        for (name, value) in worker_losses.items():
            losses[name] += value
        if worker_grads is None:
            continue
        if grads is None:
            grads = OrderedDict((key, value.astype(numpy.float64)) for (key, value) in worker_grads.items())
        else:
            for (key, value) in worker_grads.items():
                grads[key] += value

    return (grads, losses["phonetic"], losses["discriminative"])


def mtl_step(
    model: MtlModel,
    phonetic_batch: TOptional[Batch],
    discriminative_batch: TOptional[Batch],
    cfg: TrainConfig,
    state: AdamState,
    executor: TOptional[Executor] = None,
    lr: TOptional[float] = None,
) -> MtlLoss:
    """
    Description
    -----------

    This function performs one training step: the joint objective
    c_mtl = c_p + c_d is evaluated, its gradient is clipped to
    `cfg.grad_clip_norm` and the non-frozen parameters are updated
    with Adam. Steps without a feasible target are skipped.

    Parameters
    ----------

    model: ``MtlModel``

        A Python MtlModel object; updated in place.

    phonetic_batch: ``Batch``

        A Python Batch object of phonetic utterances or NoneType.

    discriminative_batch: ``Batch``

        A Python Batch object of discriminative utterances or
        NoneType.

    cfg: ``TrainConfig``

        A Python TrainConfig object.

    state: ``AdamState``

        A Python AdamState object; updated in place.

    Keywords
    --------

    executor: ``Executor``, optional

        A Python concurrent.futures Executor for the workers.

    lr: ``float``, optional

        A Python float specifying the learning rate; defaults to
        `cfg.learning_rate`.

    Returns
    -------

    loss: ``MtlLoss``

        A Python MtlLoss object.

    Raises
    ------

    NumericError:

        - raised if the loss or the gradient is not finite.

    """

    (grads, c_p, c_d) = compute_gradients(
        model=model,
        phonetic_batch=phonetic_batch,
        discriminative_batch=discriminative_batch,
        cfg=cfg,
        executor=executor,
    )
    if grads is None:
        logger.warn(msg="No utterance of the step has a feasible target; the step is skipped.")
        return MtlLoss.combine(c_p=0.0, c_d=0.0, skipped=True)
    norm = global_norm(grads=grads)
    if not (numpy.isfinite(c_p) and numpy.isfinite(c_d) and numpy.isfinite(norm)):
        msg = (
            f"Non-finite training step (c_p = {c_p}, c_d = {c_d}, gradient norm = {norm}) "
            f"at optimizer step {state.step + 1}. Aborting!!!"
        )
        raise NumericError(msg=msg)
    grads = clip_gradient(grads=grads, max_norm=cfg.grad_clip_norm)
    (params, state) = adam_step(
        params=model.parameters(),
        grads=grads,
        state=state,
        lr=cfg.learning_rate if lr is None else lr,
        betas=cfg.betas,
        eps=cfg.eps,
        frozen=cfg.frozen,
    )
    model.set_parameters(params=params)

    return MtlLoss.combine(c_p=c_p, c_d=c_d, grad_norm=norm)


# ----


def _cycle(uset: UtteranceSet, batch_size: int, seed: int, bucketing: bool) -> Iterator[Batch]:
    epoch = 0
    while True:
        yield from uset.batches(batch_size=batch_size, seed=seed, epoch=epoch, bucketing=bucketing)
        epoch += 1


def _check_inputs(
    mode: str,
    cfg: TrainConfig,
    model_cfg: ModelConfig,
    frontend_cfg: FrontendConfig,
    phonetic_entries: TOptional[Sequence[ManifestEntry]],
    discriminative_entries: TOptional[Sequence[ManifestEntry]],
    init_checkpoint: TOptional[str],
) -> None:
    """
    Description
    -----------

    This function validates the training inputs before any output is
    written.

    Raises
    ------

    ConfigError:

        - raised if the mode is unknown, a dataset required by the
          mode is missing or empty, the model input dimension does
          not match the frontend or the initial checkpoint is
          missing.

    """

    if mode not in MODES:
        msg = f"The training mode {mode} is not one of {sorted(MODES)}. Aborting!!!"
        raise ConfigError(msg=msg)
    if "phonetic" in MODES[mode] and not phonetic_entries:
        msg = f"Training mode {mode} requires a non-empty phonetic dataset. Aborting!!!"
        raise ConfigError(msg=msg)
    if "discriminative" in MODES[mode] and not discriminative_entries:
        msg = f"Training mode {mode} requires a non-empty discriminative dataset. Aborting!!!"
        raise ConfigError(msg=msg)
    if model_cfg.input_dim != frontend_cfg.model_input_dim:
        msg = (
            f"The model input dimension {model_cfg.input_dim} does not match the frontend "
            f"output dimension {frontend_cfg.model_input_dim}. Aborting!!!"
        )
        raise ConfigError(msg=msg)
    if mode == "finetune" and init_checkpoint is None:
        msg = "Training mode finetune requires an initial checkpoint. Aborting!!!"
        raise ConfigError(msg=msg)
    if init_checkpoint is not None and not fileexist(path=init_checkpoint):
        msg = f"The initial checkpoint {init_checkpoint} does not exist. Aborting!!!"
        raise ConfigError(msg=msg)
    cfg.sub_batch_sizes(mode=mode)


def _init_model(mode: str, cfg: TrainConfig, model_cfg: ModelConfig, init_checkpoint: TOptional[str]) -> MtlModel:
    rng = stage_rng(root_seed=cfg.seed, stage=f"train.{mode}.init")
    if init_checkpoint is None:
        return MtlModel.init(config=model_cfg, rng=rng, heads=MODES[mode])
    model = MtlModel.load(path=init_checkpoint, dtype=model_cfg.dtype)
    for name in MODES[mode]:
        if name not in model.heads:
            model.add_head(name=name, rng=rng)
            logger.info(msg=f"Added a freshly initialised {name} head to the model of {init_checkpoint}.")
    missing = [name for name in MODES[mode] if name not in model.heads]
    if missing:
        msg = f"The model lacks the head(s) {missing} required by mode {mode}. Aborting!!!"
        raise TrainerInterfaceError(msg=msg)

    return model


def train(
    mode: str,
    cfg: TrainConfig,
    model_cfg: ModelConfig,
    frontend_cfg: FrontendConfig,
    out_dir: str,
    phonetic_entries: TOptional[Sequence[ManifestEntry]] = None,
    discriminative_entries: TOptional[Sequence[ManifestEntry]] = None,
    init_checkpoint: TOptional[str] = None,
) -> TrainResult:
    """
    Description
    -----------

    This function trains a model. The modes are `baseline` (phonetic
    head on the phonetic set), `phrase` (discriminative head on the
    discriminative set from random initialisation), `finetune`
    (discriminative head added to a baseline checkpoint and trained
    on the discriminative set) and `mtl` (both heads, each step
    drawing a phonetic and a discriminative sub-batch). An epoch is
    one pass over the phonetic set (`baseline`, `mtl`) or the
    discriminative set (`phrase`, `finetune`); in `mtl` mode the
    discriminative set is cycled. A checkpoint is written after each
    epoch together with one loss log row per step.

    Parameters
    ----------

    mode: ``str``

        A Python string specifying the training mode.

    cfg: ``TrainConfig``

        A Python TrainConfig object.

    model_cfg: ``ModelConfig``

        A Python ModelConfig object; ignored for the architecture of
        an initial checkpoint.

    frontend_cfg: ``FrontendConfig``

        A Python FrontendConfig object.

    out_dir: ``str``

        A Python string specifying the output directory.

    Keywords
    --------

    phonetic_entries: ``Sequence[ManifestEntry]``, optional

        The phonetic manifest utterances.

    discriminative_entries: ``Sequence[ManifestEntry]``, optional

        The discriminative manifest utterances.

    init_checkpoint: ``str``, optional

        A Python string specifying the checkpoint to start from.

    Returns
    -------

    result: ``TrainResult``

        A Python TrainResult object.

    Raises
    ------

    ConfigError:

        - raised if the training inputs are not valid.

    NumericError:

        - raised if a step produces a non-finite loss or gradient.

    """

    _check_inputs(
        mode=mode,
        cfg=cfg,
        model_cfg=model_cfg,
        frontend_cfg=frontend_cfg,
        phonetic_entries=phonetic_entries,
        discriminative_entries=discriminative_entries,
        init_checkpoint=init_checkpoint,
    )
    (nphone, ndisc) = cfg.sub_batch_sizes(mode=mode)
    makedirs(path=os.path.join(out_dir, "checkpoints"))
    run_log = os.path.join(out_dir, "run.log")
    Logger.add_file(path=run_log)
    try:
        phonetic = UtteranceSet(phonetic_entries, frontend_cfg) if nphone > 0 else None
        discriminative = (
            UtteranceSet(discriminative_entries, frontend_cfg) if ndisc > 0 or mode == "mtl" else None
        )
        if discriminative is not None and not len(discriminative):
            msg = "The discriminative dataset is empty. Aborting!!!"
            raise EmptyInputError(msg=msg)
        model = _init_model(mode=mode, cfg=cfg, model_cfg=model_cfg, init_checkpoint=init_checkpoint)
        (driver, driver_size) = (phonetic, nphone) if nphone > 0 else (discriminative, ndisc)
        driver_seed = stage_seed(root_seed=cfg.seed, stage=f"train.{mode}.batches")
        side = None
        if mode == "mtl" and ndisc > 0:
            side = _cycle(
                uset=discriminative,
                batch_size=ndisc,
                seed=stage_seed(root_seed=cfg.seed, stage=f"train.{mode}.batches.discriminative"),
                bucketing=cfg.bucketing,
            )
        elif mode == "mtl":
            logger.warn(msg="The MTL mix yields no discriminative utterances; only the phonetic loss is trained.")
        logger.info(
            msg=(
                f"Training mode {mode}: {count_parameters(model)} parameters, {cfg.epochs} epochs, "
                f"{nphone} phonetic and {ndisc} discriminative utterances per step over "
                f"{cfg.workers} worker(s)."
            )
        )
        result = _run_epochs(
            mode=mode,
            cfg=cfg,
            model=model,
            driver=driver,
            driver_size=driver_size,
            driver_seed=driver_seed,
            side=side,
            out_dir=out_dir,
        )
    finally:
        Logger.remove_file(path=run_log)

    return result


def _run_epochs(
    mode: str,
    cfg: TrainConfig,
    model: MtlModel,
    driver: UtteranceSet,
    driver_size: int,
    driver_seed: int,
    side: TOptional[Iterator[Batch]],
    out_dir: str,
) -> TrainResult:
    """
    Description
    -----------

    This function runs the epochs of a training run; see `train`.

    """

    driver_head = "phonetic" if mode in ("baseline", "mtl") else "discriminative"
    (state, lr, best) = (AdamState(), cfg.learning_rate, numpy.inf)
    (checkpoints, epoch_losses, step) = ([], [], 0)
    loss_log = os.path.join(out_dir, "losses.csv")
    executor = ThreadPoolExecutor(max_workers=cfg.workers) if cfg.workers > 1 else None
    try:
        with open(loss_log, "w", encoding="utf-8", newline="") as stream:
            writer = csv.writer(stream)
            writer.writerow(LOSS_LOG_COLUMNS)
            for epoch in range(cfg.epochs):
                groups = list(
                    batch_iterator(
                        driver.entries,
                        driver_size,
                        driver_seed,
                        epoch=epoch,
                        bucketing=cfg.bucketing,
                        lengths=driver.lengths,
                    )
                )
                totals = []
                with alive_bar(len(groups), title=f"{mode} epoch {epoch + 1}/{cfg.epochs}", enrich_print=False) as bar:
                    for entries in groups:
                        batches = {driver_head: driver.batch(entries=entries)}
                        if side is not None:
                            batches["discriminative"] = next(side)
                        loss = mtl_step(
                            model=model,
                            phonetic_batch=batches.get("phonetic"),
                            discriminative_batch=batches.get("discriminative"),
                            cfg=cfg,
                            state=state,
                            executor=executor,
                            lr=lr,
                        )
                        step += 1
                        writer.writerow(
                            [step, epoch + 1, repr(loss.c_p), repr(loss.c_d), repr(loss.c_mtl), repr(loss.grad_norm), repr(float(lr))]
                        )
                        if not loss.skipped:
                            totals.append(loss.c_mtl)
                        bar()
                stream.flush()
                mean = float(numpy.mean(totals)) if totals else float("nan")
                epoch_losses.append(mean)
                path = os.path.join(out_dir, "checkpoints", f"epoch_{epoch + 1:03d}.vtck")
                model.save(path=path)
                checkpoints.append(path)
                logger.info(msg=f"Epoch {epoch + 1}: mean c_mtl = {mean:.6f}, learning rate = {lr:g}.")
                if cfg.halve_on_plateau and totals:
                    if mean >= best:
                        lr /= 2.0
                        logger.info(msg=f"The epoch loss did not improve; the learning rate is halved to {lr:g}.")
                    best = min(best, mean)
    finally:
        if executor is not None:
            executor.shutdown(wait=True)
    model.save(path=os.path.join(out_dir, "model.vtck"))

    return TrainResult(model=model, checkpoints=checkpoints, loss_log=loss_log, epoch_losses=epoch_losses)
