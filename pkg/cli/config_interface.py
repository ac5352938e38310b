"""
Module
------

    config_interface.py

Description
-----------

    This module contains the experiment configuration: a single
    YAML-formatted (or JSON) file whose sections (`paths`, `synth`,
    `augment`, `frontend`, `model`, `train`, `keyword`, `eval`,
    `demo`) are merged with the command-line `--set section.key=value`
    overrides and validated before any work starts.

Classes
-------

    DemoConfig()

        This is the base-class object for the model comparison
        attributes.

    ExperimentConfig(seed, paths, frontend, model, train, synth,
                     augment, keyword, evaluation, demo)

        This is the base-class object for the validated experiment
        configuration.

    PathsConfig()

        This is the base-class object for the path attributes.

Functions
---------

    load_config(path=None, overrides=None)

        This function reads, overrides and validates an experiment
        configuration.

Requirements
------------

- schema; https://github.com/keleshev/schema

Author(s)
---------

    vtrigger developers; 19 October 2026

"""

# ----

# pylint: disable=too-many-instance-attributes

# ----

import os
from dataclasses import asdict, dataclass, field
from typing import Dict, List, Sequence, Tuple

from schema import And, Optional, Use

from augment.augment_interface import AugmentConfig
from confs.json_interface import read_json
from confs.yaml_interface import YAML
from data.synth_interface import SynthSpec
from evaluation.det_interface import EvalConfig
from frontend.mel_interface import FrontendConfig
from nnet.model_interface import ModelConfig
from scorer.scorer_interface import KeywordSpec
from tools.fileio_interface import fileexist
from tools.parser_interface import dict_set_dotted, parse_override
from trainer.trainer_interface import TrainConfig
from utils.exceptions_interface import ConfigError, ScorerInterfaceError
from utils.logger_interface import Logger
from utils.schema_interface import positive, validate_schema

# ----

# Define all available module properties.
__all__ = ["DemoConfig", "ExperimentConfig", "PathsConfig", "SECTIONS", "load_config"]

# ----

logger = Logger(caller_name=__name__)

SECTIONS = ("seed", "paths", "synth", "augment", "frontend", "model", "train", "keyword", "eval", "demo")

DEMO_MODELS = ("baseline", "phrase", "finetune", "mtl")

DEFAULT_KEYWORD = {"name": "TriggerPhrase", "phones": ["p00", "p02", "p04", "p06"]}

# ----


@dataclass(frozen=True)
class PathsConfig:
    """
    Description
    -----------

    This is the base-class object for the path attributes; the pool
    file lists replace the synthetic impulse response, echo residual
    and noise pools when not empty.

    """

    work_dir: str = "vtrigger_work"
    rir_files: Tuple[str, ...] = ()
    residual_files: Tuple[str, ...] = ()
    noise_files: Tuple[str, ...] = ()

    def to_dict(self) -> Dict:
        return {key: list(value) if isinstance(value, tuple) else value for (key, value) in asdict(self).items()}

    @classmethod
    def from_dict(cls, opts: Dict) -> "PathsConfig":
        cls_schema = {
            Optional("work_dir", default="vtrigger_work"): str,
            Optional("rir_files", default=[]): [str],
            Optional("residual_files", default=[]): [str],
            Optional("noise_files", default=[]): [str],
        }
        attrs = validate_schema(cls_schema=cls_schema, cls_opts=opts, section="paths")
        return cls(**{key: tuple(value) if isinstance(value, list) else value for (key, value) in attrs.items()})

    def check(self) -> None:
        """
        Description
        -----------

        This method checks that every listed pool file exists.

        Raises
        ------

        ConfigError:

            - raised if a listed pool file does not exist.

        """

        missing = [path for path in self.rir_files + self.residual_files + self.noise_files if not fileexist(path=path)]
        if missing:
            msg = f"The pool file(s) {missing} do not exist. Aborting!!!"
            raise ConfigError(msg=msg)


@dataclass(frozen=True)
class DemoConfig:
    """
    Description
    -----------

    This is the base-class object for the model comparison
    attributes: the seeds over which the comparison is repeated, the
    training epochs of each model and the false-accept operating
    point of the directional check.

    """

    seeds: Tuple[int, ...] = (0, 1, 2)
    epochs: Dict[str, int] = field(
        default_factory=lambda: {"baseline": 10, "phrase": 30, "finetune": 20, "mtl": 10}
    )
    fa_target: float = 1.0

    def to_dict(self) -> Dict:
        return {"seeds": list(self.seeds), "epochs": dict(self.epochs), "fa_target": self.fa_target}

    @classmethod
    def from_dict(cls, opts: Dict) -> "DemoConfig":
        """
        Description
        -----------

        This method validates the `demo` configuration section;
        unspecified model epochs assume the defaults.

        Raises
        ------

        SchemaInterfaceError:

            - raised if the attributes do not satisfy the schema.

        """

        defaults = cls().epochs
        cls_schema = {
            Optional("seeds", default=[0, 1, 2]): And([Use(int)], lambda x: len(x) > 0),
            Optional("epochs", default=dict(defaults)): {Optional(And(str, lambda x: x in DEMO_MODELS)): positive(int)},
            Optional("fa_target", default=1.0): And(Use(float), lambda x: x >= 0.0),
        }
        attrs = validate_schema(cls_schema=cls_schema, cls_opts=opts, section="demo")
        attrs["seeds"] = tuple(attrs["seeds"])
        attrs["epochs"] = dict(defaults, **attrs["epochs"])

        return cls(**attrs)


@dataclass(frozen=True)
class ExperimentConfig:
    """
    Description
    -----------

    This is the base-class object for the validated experiment
    configuration.

    """

    seed: int
    paths: PathsConfig
    frontend: FrontendConfig
    model: ModelConfig
    train: TrainConfig
    synth: SynthSpec
    augment: AugmentConfig
    keyword: KeywordSpec
    evaluation: EvalConfig
    demo: DemoConfig

    def to_dict(self) -> Dict:
        alphabet = self.model.phonetic_alphabet
        return {
            "seed": self.seed,
            "paths": self.paths.to_dict(),
            "synth": self.synth.to_dict(),
            "augment": self.augment.to_dict(),
            "frontend": self.frontend.to_dict(),
            "model": self.model.to_dict(),
            "train": self.train.to_dict(),
            "keyword": {
                "name": self.keyword.name,
                "phones": [alphabet[symbol] for symbol in self.keyword.phone_sequence.symbols],
            },
            "eval": self.evaluation.to_dict(),
            "demo": self.demo.to_dict(),
        }

    def write(self, path: str) -> None:
        YAML().write_yaml(yaml_file=path, in_dict=self.to_dict())


# ----


def _read(path: str) -> Dict:
    if not fileexist(path=path):
        msg = f"The experiment configuration file {path} does not exist. Aborting!!!"
        raise ConfigError(msg=msg)
    suffix = os.path.splitext(path)[1].lower()
    if suffix in (".yaml", ".yml"):
        return YAML().read_yaml(yaml_file=path)
    if suffix == ".json":
        return read_json(json_file=path)
    msg = f"The experiment configuration file {path} must be YAML (.yaml, .yml) or JSON (.json). Aborting!!!"
    raise ConfigError(msg=msg)


def load_config(path: str = None, overrides: Sequence[str] = None) -> ExperimentConfig:
    """
    Description
    -----------

    This function reads an experiment configuration, applies the
    `section.key=value` overrides (values are parsed as YAML) and
    validates every section; unspecified attributes assume the
    desk-scale defaults. The `synth` and `train` seeds default to the
    root `seed`.

    Parameters
    ----------

    Keywords
    --------

    path: ``str``, optional

        A Python string specifying the YAML-formatted or JSON
        configuration file; the defaults are used if NoneType.

    overrides: ``Sequence[str]``, optional

        The `section.key=value` override strings.

    Returns
    -------

    config: ``ExperimentConfig``

        A Python ExperimentConfig object.

    Raises
    ------

    ConfigError:

        - raised if the file cannot be read, a section is unknown or
          invalid or the sections are inconsistent.

    """

    raw = {} if path is None else _read(path=path)
    for override in overrides or []:
        (dotted_key, value) = parse_override(override=override)
        raw = dict_set_dotted(in_dict=raw, dotted_key=dotted_key, value=value)
    unknown = sorted(set(raw) - set(SECTIONS))
    if unknown:
        msg = f"Unknown configuration section(s) {unknown}; valid sections are {list(SECTIONS)}. Aborting!!!"
        raise ConfigError(msg=msg)
    sections = {name: raw.get(name) or {} for name in SECTIONS if name != "seed"}
    for (name, section) in sections.items():
        if not isinstance(section, dict):
            msg = f"The configuration section {name} must be a mapping. Aborting!!!"
            raise ConfigError(msg=msg)
    seed = raw.get("seed", 0)
    if not isinstance(seed, int) or seed < 0:
        msg = f"The root seed {seed} must be a non-negative integer. Aborting!!!"
        raise ConfigError(msg=msg)
    for name in ("synth", "train"):
        sections[name].setdefault("seed", seed)

    frontend = FrontendConfig.from_dict(opts=sections["frontend"])
    model = ModelConfig.from_dict(opts=sections["model"])
    try:
        keyword = KeywordSpec.from_dict(opts=sections["keyword"] or DEFAULT_KEYWORD, alphabet=model.phonetic_alphabet)
    except ScorerInterfaceError as errmsg:
        msg = f"Invalid keyword section: {errmsg.msg}"
        raise ConfigError(msg=msg) from errmsg
    config = ExperimentConfig(
        seed=seed,
        paths=PathsConfig.from_dict(opts=sections["paths"]),
        frontend=frontend,
        model=model,
        train=TrainConfig.from_dict(opts=sections["train"]),
        synth=SynthSpec.from_dict(opts=sections["synth"], keyword=keyword.phone_sequence.symbols),
        augment=AugmentConfig.from_dict(opts=sections["augment"]),
        keyword=keyword,
        evaluation=EvalConfig.from_dict(opts=sections["eval"]),
        demo=DemoConfig.from_dict(opts=sections["demo"]),
    )
    _check(config=config)
    logger.debug(msg=f"Validated the experiment configuration ({path or 'defaults'}).")

    return config


def _check(config: ExperimentConfig) -> None:
    errors: List[str] = []
    if config.model.input_dim != config.frontend.model_input_dim:
        errors.append(
            f"model.input_dim {config.model.input_dim} differs from the frontend output dimension "
            f"{config.frontend.model_input_dim}"
        )
    if config.synth.n_phones >= len(config.model.phonetic_alphabet):
        errors.append(
            f"synth.n_phones {config.synth.n_phones} exceeds the {len(config.model.phonetic_alphabet) - 1} "
            "non-blank phonetic symbols"
        )
    if errors:
        msg = f"Inconsistent configuration: {'; '.join(errors)}. Aborting!!!"
        raise ConfigError(msg=msg)
    config.paths.check()
