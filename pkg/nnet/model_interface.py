"""
Module
------

    model_interface.py

Description
-----------

    This module contains the multi-task acoustic model: a trunk of
    bidirectional LSTM layers shared (tied) between a phonetic output
    head and a two-symbol trigger-phrase discriminative head; either
    head may be absent.

    A forward pass optionally records its intermediates on a Tape;
    `MtlModel.backward` consumes the recorded intermediates and the
    gradients of the loss with respect to the head logits and returns
    the gradient of every model parameter.

Classes
-------

    ModelConfig(...)

        This is the base-class object for the model attributes.

    MtlModel(config, trunk, heads)

        This is the base-class object for the tied-trunk model.

    Tape()

        This is the base-class object recording the intermediates of
        a forward pass.

Functions
---------

    bilstm_forward(model_input, trunk)

        This function evaluates the bidirectional LSTM trunk for a
        single utterance.

    count_parameters(model)

        This function returns the number of scalar model parameters.

    phonetic_alphabet(num_phones, boundaries=False)

        This function builds a phonetic output alphabet.

Requirements
------------

- numpy; https://numpy.org/

- scipy; https://scipy.org/

Author(s)
---------

    vtrigger developers; 19 October 2026

"""

# ----

# pylint: disable=too-many-arguments

# ----

from collections import OrderedDict
from dataclasses import asdict, dataclass, field
from types import SimpleNamespace
from typing import Dict, List, Optional as TOptional, Tuple, Union

import numpy
from schema import And, Optional, Or, Use
from scipy.special import log_softmax

from frontend.mel_interface import ModelInput
from ioapps.checkpoint_interface import read_checkpoint, write_checkpoint
from nnet.head_interface import HeadParams, head_backward, head_logits
from nnet.lstm_interface import LstmLayerParams, bilstm_layer_backward, bilstm_layer_forward
from utils.exceptions_interface import NnetInterfaceError, ShapeError, StateError
from utils.logger_interface import Logger
from utils.schema_interface import positive, validate_schema

# ----

# Define all available module properties.
__all__ = [
    "BLANK",
    "DISCRIMINATIVE_ALPHABET",
    "HEAD_NAMES",
    "ModelConfig",
    "MtlModel",
    "Tape",
    "bilstm_forward",
    "count_parameters",
    "phonetic_alphabet",
]

# ----

logger = Logger(caller_name=__name__)

BLANK = "<blank>"
DISCRIMINATIVE_ALPHABET = (BLANK, "TriggerPhrase")
HEAD_NAMES = ("phonetic", "discriminative")

# ----


def phonetic_alphabet(num_phones: int, boundaries: bool = False) -> Tuple[str, ...]:
    """
    Description
    -----------

    This function builds a phonetic output alphabet: the blank
    (index 0), the phones `p00`, `p01`, ... (indices 1 to
    num_phones) and, if `boundaries` is True, the word and sentence
    boundary symbols `<wb>` and `<sb>`.

    """

    symbols = [BLANK] + [f"p{idx:02d}" for idx in range(num_phones)]
    if boundaries:
        symbols += ["<wb>", "<sb>"]
    return tuple(symbols)


@dataclass(frozen=True)
class ModelConfig:
    """
    Description
    -----------

    This is the base-class object for the model attributes; the
    defaults are the desk-scale configuration (2 layers of 32 units
    per direction) and `ModelConfig.full_size` returns the full-size
    configuration (280-dimensional input, 4 layers of 256 units, 53
    phonetic output symbols).

    """

    input_dim: int = 280
    hidden_dim: int = 32
    num_layers: int = 2
    phonetic_alphabet: Tuple[str, ...] = field(default_factory=lambda: phonetic_alphabet(10))
    discriminative_alphabet: Tuple[str, ...] = DISCRIMINATIVE_ALPHABET
    dtype: str = "float32"

    @classmethod
    def full_size(cls) -> "ModelConfig":
        return cls(
            input_dim=280,
            hidden_dim=256,
            num_layers=4,
            phonetic_alphabet=phonetic_alphabet(50, boundaries=True),
        )

    @property
    def trunk_output_dim(self) -> int:
        return 2 * self.hidden_dim

    def to_dict(self) -> Dict:
        attrs = asdict(self)
        attrs["phonetic_alphabet"] = list(self.phonetic_alphabet)
        attrs["discriminative_alphabet"] = list(self.discriminative_alphabet)
        return attrs

    @classmethod
    def from_dict(cls, opts: Dict) -> "ModelConfig":
        """
        Description
        -----------

        This method validates the `model` configuration section; the
        phonetic alphabet is either listed explicitly
        (`phonetic_alphabet`) or built from `num_phones` and
        `boundaries`.

        Raises
        ------

        SchemaInterfaceError:

            - raised if the attributes do not satisfy the schema.

        """

        cls_schema = {
            Optional("input_dim", default=280): positive(int),
            Optional("hidden_dim", default=32): positive(int),
            Optional("num_layers", default=2): positive(int),
            Optional("num_phones", default=10): positive(int),
            Optional("boundaries", default=False): bool,
            Optional("phonetic_alphabet", default=None): Or(None, And([str], lambda x: len(x) > 1)),
            Optional("discriminative_alphabet", default=list(DISCRIMINATIVE_ALPHABET)): And(
                [str], lambda x: len(x) == 2
            ),
            Optional("dtype", default="float32"): And(Use(str), lambda x: x in ("float32", "float64")),
        }
        attrs = validate_schema(cls_schema=cls_schema, cls_opts=opts, section="model")
        alphabet = attrs.pop("phonetic_alphabet")
        (num_phones, boundaries) = (attrs.pop("num_phones"), attrs.pop("boundaries"))
        if alphabet is None:
            alphabet = phonetic_alphabet(num_phones=num_phones, boundaries=boundaries)
        attrs["discriminative_alphabet"] = tuple(attrs["discriminative_alphabet"])

        return cls(phonetic_alphabet=tuple(alphabet), **attrs)

    def alphabet(self, head: str) -> Tuple[str, ...]:
        return self.phonetic_alphabet if head == "phonetic" else self.discriminative_alphabet


# ----


class Tape:
    """
    Description
    -----------

    This is the base-class object recording the intermediates of a
    forward pass; each concurrent worker uses its own Tape. After
    `MtlModel.backward`, the gradient with respect to the trunk
    inputs is available as `d_inputs`.

    """

    def __init__(self) -> None:
        self.trunk: List[SimpleNamespace] = []
        self.heads: List[Tuple[str, slice, SimpleNamespace]] = []
        self.hidden_shape = None
        self.d_inputs = None

    @property
    def empty(self) -> bool:
        return not self.trunk

    def clear(self) -> None:
        self.__init__()


# ----


class MtlModel:
    """
    Description
    -----------

    This is the base-class object for the tied-trunk model.

    Parameters
    ----------

    config: ``ModelConfig``

        A Python ModelConfig object.

    trunk: ``List[LstmLayerParams]``

        A Python list of the bidirectional LSTM layers.

    heads: ``Dict[str, HeadParams]``

        A Python dictionary of the present output heads keyed by
        `phonetic` and/or `discriminative`.

    """

    def __init__(self, config: ModelConfig, trunk: List[LstmLayerParams], heads: Dict[str, HeadParams]):
        """
        Description
        -----------

        Creates a new MtlModel object.

        """

        # Define the base-class attributes.
        self.config = config
        self.trunk = list(trunk)
        self.heads = OrderedDict((name, heads[name]) for name in HEAD_NAMES if name in heads)

    @classmethod
    def init(
        cls, config: ModelConfig, rng: numpy.random.Generator, heads: Tuple[str, ...] = HEAD_NAMES
    ) -> "MtlModel":
        """
        Description
        -----------

        This method initializes a model with the specified heads; the
        trunk layers are drawn first and the heads afterwards, in
        `HEAD_NAMES` order, so a given seed yields identical trunk
        weights for every head selection.

        """

        trunk = []
        input_dim = config.input_dim
        for _ in range(config.num_layers):
            trunk.append(LstmLayerParams.init(input_dim, config.hidden_dim, rng=rng, dtype=config.dtype))
            input_dim = 2 * config.hidden_dim
        model = cls(config=config, trunk=trunk, heads={})
        for name in HEAD_NAMES:
            if name in heads:
                model.add_head(name=name, rng=rng)

        return model

    def add_head(self, name: str, rng: numpy.random.Generator) -> None:
        """
        Description
        -----------

        This method adds a freshly initialized output head (e.g., a
        discriminative head onto a baseline phonetic model prior to
        fine-tuning).

        Raises
        ------

        NnetInterfaceError:

            - raised if the head name is not known or the head is
              already present.

        """

        if name not in HEAD_NAMES or name in self.heads:
            msg = f"Cannot add output head {name}; present heads are {list(self.heads)}. Aborting!!!"
            raise NnetInterfaceError(msg=msg)
        head = HeadParams.init(
            self.config.trunk_output_dim, self.config.alphabet(name), rng=rng, dtype=self.config.dtype
        )
        self.heads[name] = head
        self.heads = OrderedDict((key, self.heads[key]) for key in HEAD_NAMES if key in self.heads)

    def head(self, name: str) -> HeadParams:
        if name not in self.heads:
            msg = f"The model has no {name} head; present heads are {list(self.heads)}. Aborting!!!"
            raise NnetInterfaceError(msg=msg)
        return self.heads[name]

    # ----

    def parameters(self) -> "OrderedDict[str, numpy.ndarray]":
        """
        Description
        -----------

        This method returns the model parameters keyed by name (e.g.,
        `trunk.0.fwd.w_x`, `phonetic.w`); the arrays are the model
        arrays themselves.

        """

        params = OrderedDict()
        for (idx, layer) in enumerate(self.trunk):
            for (key, value) in layer.params.items():
                params[f"trunk.{idx}.{key}"] = value
        for (name, head) in self.heads.items():
            for (key, value) in head.params.items():
                params[f"{name}.{key}"] = value
        return params

    def set_parameters(self, params: Dict[str, numpy.ndarray]) -> None:
        """
        Description
        -----------

        This method replaces the named parameters; names not present
        in `params` are unchanged.

        Raises
        ------

        ShapeError:

            - raised if a replacement does not match the parameter
              shape.

        NnetInterfaceError:

            - raised if a name is not a model parameter.

        """

        current = self.parameters()
        for (name, value) in params.items():
            if name not in current:
                msg = f"{name} is not a model parameter. Aborting!!!"
                raise NnetInterfaceError(msg=msg)
            if value.shape != current[name].shape:
                msg = f"Parameter {name} has shape {current[name].shape}; received {value.shape}. Aborting!!!"
                raise ShapeError(msg=msg)
            (owner, key) = self._owner(name)
            owner.params[key] = numpy.asarray(value, dtype=self.config.dtype)

    def _owner(self, name: str) -> Tuple[Union[LstmLayerParams, HeadParams], str]:
        parts = name.split(".")
        if parts[0] == "trunk":
            return (self.trunk[int(parts[1])], ".".join(parts[2:]))
        return (self.heads[parts[0]], ".".join(parts[1:]))

    def copy(self, dtype: str = None) -> "MtlModel":
        """
        Description
        -----------

        This method returns a deep copy of the model, optionally cast
        to `dtype`.

        """

        dtype = self.config.dtype if dtype is None else dtype
        attrs = self.config.to_dict()
        attrs.update(
            phonetic_alphabet=tuple(attrs["phonetic_alphabet"]),
            discriminative_alphabet=tuple(attrs["discriminative_alphabet"]),
            dtype=dtype,
        )
        config = ModelConfig(**attrs)
        trunk = [
            LstmLayerParams(
                layer.input_dim,
                layer.hidden_dim,
                OrderedDict((key, value.astype(dtype)) for (key, value) in layer.params.items()),
            )
            for layer in self.trunk
        ]
        heads = {
            name: HeadParams(
                head.input_dim,
                list(head.alphabet),
                OrderedDict((key, value.astype(dtype)) for (key, value) in head.params.items()),
            )
            for (name, head) in self.heads.items()
        }
        return MtlModel(config=config, trunk=trunk, heads=heads)

    # ----

    def trunk_forward(
        self, inputs: numpy.ndarray, lengths: numpy.ndarray, tape: TOptional[Tape] = None
    ) -> numpy.ndarray:
        """
        Description
        -----------

        This method evaluates the trunk over a padded batch.

        Parameters
        ----------

        inputs: ``numpy.ndarray``

            A (B x T' x D') array of zero-padded model inputs.

        lengths: ``numpy.ndarray``

            A (B,) array of valid utterance lengths.

        Keywords
        --------

        tape: ``Tape``, optional

            A Python Tape object; if specified, any previous record is
            cleared and the intermediates are recorded.

        Returns
        -------

        hidden: ``numpy.ndarray``

            A (B x T' x 2H) array of trunk outputs; padded positions
            are zero.

        Raises
        ------

        ShapeError:

            - raised if the inputs are not a 3-D array or the lengths
              are not consistent with the inputs.

        """

        inputs = numpy.asarray(inputs, dtype=self.config.dtype)
        lengths = numpy.asarray(lengths, dtype=numpy.int64)
        if inputs.ndim != 3 or lengths.shape != (inputs.shape[0],) or numpy.any(lengths > inputs.shape[1]):
            msg = (
                f"Inconsistent model inputs: shape {inputs.shape} with lengths "
                f"{lengths.tolist()}. Aborting!!!"
            )
            raise ShapeError(msg=msg)
        if tape is not None:
            tape.clear()
        hidden = inputs
        for layer in self.trunk:
            (hidden, cache) = bilstm_layer_forward(inputs=hidden, lengths=lengths, layer=layer)
            if tape is not None:
                tape.trunk.append(cache)
        if tape is not None:
            tape.hidden_shape = hidden.shape

        return hidden

    def head_forward(
        self, name: str, hidden: numpy.ndarray, rows: slice = slice(None), tape: TOptional[Tape] = None
    ) -> numpy.ndarray:
        """
        Description
        -----------

        This method evaluates the logits of the named head for the
        batch rows `rows` of the trunk outputs; each head may be
        recorded at most once per Tape.

        Raises
        ------

        StateError:

            - raised if the head was already recorded on the Tape.

        """

        head = self.head(name=name)
        selected = hidden[rows]
        if tape is not None:
            if any(record[0] == name for record in tape.heads):
                msg = f"The {name} head is already recorded on this tape. Aborting!!!"
                raise StateError(msg=msg)
            tape.heads.append((name, rows, SimpleNamespace(head=head, hidden=selected)))

        return head_logits(hidden=selected, head=head)

    def log_posteriors(self, name: str, inputs: numpy.ndarray, lengths: numpy.ndarray) -> numpy.ndarray:
        """
        Description
        -----------

        This method returns the (B x T' x V) log-posteriors of the
        named head; values at padded positions are not meaningful.

        """

        hidden = self.trunk_forward(inputs=inputs, lengths=lengths)
        return log_softmax(self.head_forward(name=name, hidden=hidden).astype(numpy.float64), axis=-1)

    def backward(self, tape: Tape, d_logits: Dict[str, numpy.ndarray]) -> "OrderedDict[str, numpy.ndarray]":
        """
        Description
        -----------

        This method computes the gradient of every model parameter;
        the trunk gradient accumulates the contributions of every
        head present in `d_logits`. The Tape is not modified (apart
        from `d_inputs`) so that it may be reused.

        Parameters
        ----------

        tape: ``Tape``

            A Python Tape object recorded by `trunk_forward` and
            `head_forward`.

        d_logits: ``Dict[str, numpy.ndarray]``

            A Python dictionary mapping head names to the gradient of
            the loss with respect to the logits of the rows recorded
            for that head.

        Returns
        -------

        grads: ``OrderedDict[str, numpy.ndarray]``

            The parameter gradients keyed as `parameters()`;
            parameters which do not influence the loss have zero
            gradient.

        Raises
        ------

        StateError:

            - raised if the Tape holds no forward pass or a head in
              `d_logits` was not recorded.

        """

        if tape is None or tape.empty:
            msg = "Backward requires a recorded forward pass. Aborting!!!"
            raise StateError(msg=msg)
        recorded = {record[0] for record in tape.heads}
        missing = sorted(set(d_logits) - recorded)
        if missing:
            msg = f"No forward pass is recorded for head(s) {missing}. Aborting!!!"
            raise StateError(msg=msg)
        grads = OrderedDict((name, numpy.zeros_like(value)) for (name, value) in self.parameters().items())
        d_hidden = numpy.zeros(tape.hidden_shape, dtype=numpy.result_type(self.config.dtype))
        for (name, rows, cache) in tape.heads:
            if name not in d_logits:
                continue
            (d_selected, head_grads) = head_backward(
                d_logits=numpy.asarray(d_logits[name], dtype=self.config.dtype), cache=cache
            )
            d_hidden[rows] += d_selected
            for (key, value) in head_grads.items():
                grads[f"{name}.{key}"] += value
        for idx in reversed(range(len(tape.trunk))):
            (d_hidden, layer_grads) = bilstm_layer_backward(d_outputs=d_hidden, cache=tape.trunk[idx])
            for (key, value) in layer_grads.items():
                grads[f"trunk.{idx}.{key}"] += value
        tape.d_inputs = d_hidden

        return grads

    # ----

    def save(self, path: str) -> None:
        """
        Description
        -----------

        This method writes the model checkpoint.

        """

        header = {
            "config": self.config.to_dict(),
            "alphabets": {name: list(self.config.alphabet(name)) for name in HEAD_NAMES},
            "heads": {name: name in self.heads for name in HEAD_NAMES},
        }
        write_checkpoint(path=path, header=header, params=self.parameters())
        logger.info(msg=f"Saved model checkpoint {path}.")

    @classmethod
    def load(cls, path: str, dtype: str = None) -> "MtlModel":
        """
        Description
        -----------

        This method reads a model checkpoint.

        Raises
        ------

        CheckpointInterfaceError:

            - raised if the checkpoint cannot be read.

        NnetInterfaceError:

            - raised if the parameters are inconsistent with the
              configuration.

        """

        (header, params) = read_checkpoint(path=path)
        attrs = dict(header["config"])
        attrs["phonetic_alphabet"] = tuple(attrs["phonetic_alphabet"])
        attrs["discriminative_alphabet"] = tuple(attrs["discriminative_alphabet"])
        if dtype is not None:
            attrs["dtype"] = dtype
        config = ModelConfig(**attrs)
        heads = tuple(name for name in HEAD_NAMES if header["heads"].get(name, False))
        model = cls.init(config=config, rng=numpy.random.default_rng(0), heads=heads)
        expected = model.parameters()
        if list(expected) != list(params):
            msg = f"The checkpoint {path} parameters do not match its configuration. Aborting!!!"
            raise NnetInterfaceError(msg=msg)
        model.set_parameters(params=params)

        return model


# ----


def bilstm_forward(model_input: Union[ModelInput, numpy.ndarray], trunk: List[LstmLayerParams]) -> numpy.ndarray:
    """
    Description
    -----------

    This function evaluates the bidirectional LSTM trunk for a single
    utterance.

    Parameters
    ----------

    model_input: ``Union[ModelInput, numpy.ndarray]``

        A Python ModelInput object or a (T' x D') array.

    trunk: ``List[LstmLayerParams]``

        A Python list of the bidirectional LSTM layers.

    Returns
    -------

    hidden: ``numpy.ndarray``

        A (T' x 2H) array; each row is the forward hidden state
        followed by the backward hidden state.

    Raises
    ------

    ShapeError:

        - raised if the input width does not match the first layer.

    """

    windows = model_input.windows if isinstance(model_input, ModelInput) else numpy.asarray(model_input)
    if windows.ndim != 2:
        msg = f"The model input must be a 2-D array; received shape {windows.shape}. Aborting!!!"
        raise ShapeError(msg=msg)
    hidden = windows[None, :, :]
    lengths = numpy.array([windows.shape[0]])
    for layer in trunk:
        hidden = bilstm_layer_forward(inputs=hidden, lengths=lengths, layer=layer)[0]

    return hidden[0]


def count_parameters(model: Union[MtlModel, HeadParams, LstmLayerParams]) -> int:
    """
    Description
    -----------

    This function returns the number of scalar parameters; a layer
    of H units per direction over I inputs holds 2 x 4H(I + H + 1)
    and a head of V outputs over H inputs holds V(H + 1).

    """

    if isinstance(model, MtlModel):
        return int(sum(value.size for value in model.parameters().values()))
    return model.num_parameters()
