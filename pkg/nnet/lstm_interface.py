"""
Module
------

    lstm_interface.py

Description
-----------

    This module contains the bidirectional LSTM kernels: a standard
    LSTM cell (no peepholes, gate order input, forget, cell, output)
    run over zero-padded batches with per-utterance lengths, and the
    corresponding reverse-mode gradients.

    The backward direction of each utterance runs over its valid span
    only (t = L - 1, ..., 0); outputs at padded positions are zero and
    contribute no gradient.

Classes
-------

    LstmLayerParams(input_dim, hidden_dim, params)

        This is the base-class object for the parameters of a single
        bidirectional LSTM layer.

Functions
---------

    bilstm_layer_backward(d_out, cache)

        This function computes the input and parameter gradients of a
        bidirectional LSTM layer.

    bilstm_layer_forward(inputs, lengths, layer)

        This function evaluates a bidirectional LSTM layer over a
        padded batch.

    length_mask(lengths, num_frames)

        This function returns the (B x T) validity mask of a padded
        batch.

Requirements
------------

- numpy; https://numpy.org/

- scipy; https://scipy.org/

Author(s)
---------

    vtrigger developers; 19 October 2026

"""

# ----

# pylint: disable=too-many-locals

# ----

from collections import OrderedDict
from dataclasses import dataclass
from types import SimpleNamespace
from typing import Dict, Tuple

import numpy
from scipy.special import expit

from utils.exceptions_interface import ShapeError

# ----

# Define all available module properties.
__all__ = [
    "DIRECTIONS",
    "LstmLayerParams",
    "bilstm_layer_backward",
    "bilstm_layer_forward",
    "length_mask",
]

# ----

DIRECTIONS = ("fwd", "bwd")
TENSORS = ("w_x", "w_h", "b")

# ----


@dataclass
class LstmLayerParams:
    """
    Description
    -----------

    This is the base-class object for the parameters of a single
    bidirectional LSTM layer; `params` maps `<direction>.<tensor>`
    (e.g., `fwd.w_x`) to the input weights (4H x I), the recurrent
    weights (4H x H) and the biases (4H) of each direction, the rows
    being ordered by gate (input, forget, cell, output).

    """

    input_dim: int
    hidden_dim: int
    params: Dict[str, numpy.ndarray]

    @classmethod
    def init(
        cls, input_dim: int, hidden_dim: int, rng: numpy.random.Generator, dtype: str = "float32"
    ) -> "LstmLayerParams":
        """
        Description
        -----------

        This method initializes a layer; weights are drawn uniformly
        from +/- 1/sqrt(fan_in), where fan_in = input_dim +
        hidden_dim, the biases are zero except for the forget gate
        biases which are one.

        """

        bound = 1.0 / numpy.sqrt(input_dim + hidden_dim)
        params = OrderedDict()
        for direction in DIRECTIONS:
            params[f"{direction}.w_x"] = rng.uniform(-bound, bound, (4 * hidden_dim, input_dim))
            params[f"{direction}.w_h"] = rng.uniform(-bound, bound, (4 * hidden_dim, hidden_dim))
            bias = numpy.zeros(4 * hidden_dim)
            bias[hidden_dim : 2 * hidden_dim] = 1.0
            params[f"{direction}.b"] = bias
        params = OrderedDict((key, value.astype(dtype)) for (key, value) in params.items())

        return cls(input_dim=input_dim, hidden_dim=hidden_dim, params=params)

    @property
    def output_dim(self) -> int:
        return 2 * self.hidden_dim

    def num_parameters(self) -> int:
        return int(sum(value.size for value in self.params.values()))


# ----


def length_mask(lengths: numpy.ndarray, num_frames: int) -> numpy.ndarray:
    """
    Description
    -----------

    This function returns the (B x T) boolean mask which is True at
    the valid (unpadded) positions of each utterance.

    """

    return numpy.arange(num_frames)[None, :] < numpy.asarray(lengths)[:, None]


def _reverse_index(lengths: numpy.ndarray, num_frames: int) -> numpy.ndarray:
    # Reverses each valid span in place; padded positions map to
    # themselves, so the index is its own inverse.
    steps = numpy.arange(num_frames)[None, :]
    lengths = numpy.asarray(lengths)[:, None]
    return numpy.where(steps < lengths, lengths - 1 - steps, steps)


def _gather(values: numpy.ndarray, index: numpy.ndarray) -> numpy.ndarray:
    return numpy.take_along_axis(values, index[:, :, None], axis=1)


# ----


def _direction_forward(
    inputs: numpy.ndarray, w_x: numpy.ndarray, w_h: numpy.ndarray, bias: numpy.ndarray
) -> Tuple[numpy.ndarray, SimpleNamespace]:
    (nbatch, nframes, _) = inputs.shape
    hidden_dim = w_h.shape[1]
    x_proj = inputs @ w_x.T + bias
    gates = numpy.zeros((nbatch, nframes, 4 * hidden_dim), dtype=inputs.dtype)
    cells = numpy.zeros((nbatch, nframes, hidden_dim), dtype=inputs.dtype)
    hiddens = numpy.zeros((nbatch, nframes, hidden_dim), dtype=inputs.dtype)
    h_prev = numpy.zeros((nbatch, hidden_dim), dtype=inputs.dtype)
    c_prev = numpy.zeros((nbatch, hidden_dim), dtype=inputs.dtype)
    for step in range(nframes):
        z = x_proj[:, step] + h_prev @ w_h.T
        act = numpy.concatenate(
            [
                expit(z[:, : 2 * hidden_dim]),
                numpy.tanh(z[:, 2 * hidden_dim : 3 * hidden_dim]),
                expit(z[:, 3 * hidden_dim :]),
            ],
            axis=1,
        )
        (i_gate, f_gate, g_gate, o_gate) = numpy.split(act, 4, axis=1)
        c_prev = f_gate * c_prev + i_gate * g_gate
        h_prev = o_gate * numpy.tanh(c_prev)
        (gates[:, step], cells[:, step], hiddens[:, step]) = (act, c_prev, h_prev)
    cache = SimpleNamespace(inputs=inputs, gates=gates, cells=cells, hiddens=hiddens, w_x=w_x, w_h=w_h)

    return (hiddens, cache)


def _direction_backward(
    d_hiddens: numpy.ndarray, cache: SimpleNamespace
) -> Tuple[numpy.ndarray, numpy.ndarray, numpy.ndarray, numpy.ndarray]:
    (nbatch, nframes, hidden_dim) = cache.hiddens.shape
    d_z = numpy.zeros_like(cache.gates)
    dh_next = numpy.zeros((nbatch, hidden_dim), dtype=d_hiddens.dtype)
    dc_next = numpy.zeros((nbatch, hidden_dim), dtype=d_hiddens.dtype)
    for step in reversed(range(nframes)):
        (i_gate, f_gate, g_gate, o_gate) = numpy.split(cache.gates[:, step], 4, axis=1)
        c_prev = cache.cells[:, step - 1] if step > 0 else numpy.zeros_like(dc_next)
        tanh_c = numpy.tanh(cache.cells[:, step])
        d_h = d_hiddens[:, step] + dh_next
        d_c = d_h * o_gate * (1.0 - tanh_c**2) + dc_next
        d_z[:, step] = numpy.concatenate(
            [
                d_c * g_gate * i_gate * (1.0 - i_gate),
                d_c * c_prev * f_gate * (1.0 - f_gate),
                d_c * i_gate * (1.0 - g_gate**2),
                d_h * tanh_c * o_gate * (1.0 - o_gate),
            ],
            axis=1,
        )
        dc_next = d_c * f_gate
        dh_next = d_z[:, step] @ cache.w_h
    h_prev = numpy.concatenate([numpy.zeros_like(cache.hiddens[:, :1]), cache.hiddens[:, :-1]], axis=1)
    d_w_x = numpy.einsum("btg,bti->gi", d_z, cache.inputs)
    d_w_h = numpy.einsum("btg,bth->gh", d_z, h_prev)
    d_bias = d_z.sum(axis=(0, 1))
    d_inputs = d_z @ cache.w_x

    return (d_inputs, d_w_x, d_w_h, d_bias)


# ----


def bilstm_layer_forward(
    inputs: numpy.ndarray, lengths: numpy.ndarray, layer: LstmLayerParams
) -> Tuple[numpy.ndarray, SimpleNamespace]:
    """
    Description
    -----------

    This function evaluates a bidirectional LSTM layer over a padded
    batch; the forward direction processes t = 0, ..., L - 1 and the
    backward direction t = L - 1, ..., 0 of each utterance and the
    two hidden states are concatenated (forward first) per frame.

    Parameters
    ----------

    inputs: ``numpy.ndarray``

        A (B x T x I) array of zero-padded inputs.

    lengths: ``numpy.ndarray``

        A (B,) array of valid utterance lengths.

    layer: ``LstmLayerParams``

        A Python LstmLayerParams object.

    Returns
    -------

    outputs: ``numpy.ndarray``

        A (B x T x 2H) array; padded positions are zero.

    cache: ``SimpleNamespace``

        A Python SimpleNamespace object holding the intermediates
        required by `bilstm_layer_backward`.

    Raises
    ------

    ShapeError:

        - raised if the input dimension does not match the layer.

    """

    if inputs.ndim != 3 or inputs.shape[2] != layer.input_dim:
        msg = (
            f"The LSTM layer expects inputs of dimension {layer.input_dim}; "
            f"received shape {inputs.shape}. Aborting!!!"
        )
        raise ShapeError(msg=msg)
    nframes = inputs.shape[1]
    mask = length_mask(lengths=lengths, num_frames=nframes)[:, :, None].astype(inputs.dtype)
    rev_index = _reverse_index(lengths=lengths, num_frames=nframes)
    (h_fwd, fwd_cache) = _direction_forward(
        inputs, layer.params["fwd.w_x"], layer.params["fwd.w_h"], layer.params["fwd.b"]
    )
    (h_bwd_rev, bwd_cache) = _direction_forward(
        _gather(inputs, rev_index), layer.params["bwd.w_x"], layer.params["bwd.w_h"], layer.params["bwd.b"]
    )
    h_bwd = _gather(h_bwd_rev, rev_index)
    outputs = numpy.concatenate([h_fwd, h_bwd], axis=2) * mask
    cache = SimpleNamespace(mask=mask, rev_index=rev_index, fwd=fwd_cache, bwd=bwd_cache, layer=layer)

    return (outputs, cache)


def bilstm_layer_backward(
    d_outputs: numpy.ndarray, cache: SimpleNamespace
) -> Tuple[numpy.ndarray, Dict[str, numpy.ndarray]]:
    """
    Description
    -----------

    This function computes the input and parameter gradients of a
    bidirectional LSTM layer given the gradient of the loss with
    respect to the layer outputs.

    Parameters
    ----------

    d_outputs: ``numpy.ndarray``

        A (B x T x 2H) array of upstream gradients; values at padded
        positions are ignored.

    cache: ``SimpleNamespace``

        A Python SimpleNamespace object returned by
        `bilstm_layer_forward`.

    Returns
    -------

    d_inputs: ``numpy.ndarray``

        A (B x T x I) array of input gradients.

    grads: ``Dict[str, numpy.ndarray]``

        A Python dictionary of parameter gradients keyed as
        `LstmLayerParams.params`.

    """

    hidden_dim = cache.layer.hidden_dim
    d_outputs = d_outputs * cache.mask
    (dx_fwd, dwx_fwd, dwh_fwd, db_fwd) = _direction_backward(d_outputs[:, :, :hidden_dim], cache.fwd)
    (dx_bwd_rev, dwx_bwd, dwh_bwd, db_bwd) = _direction_backward(
        _gather(d_outputs[:, :, hidden_dim:], cache.rev_index), cache.bwd
    )
    d_inputs = dx_fwd + _gather(dx_bwd_rev, cache.rev_index)
    grads = OrderedDict(
        [
            ("fwd.w_x", dwx_fwd),
            ("fwd.w_h", dwh_fwd),
            ("fwd.b", db_fwd),
            ("bwd.w_x", dwx_bwd),
            ("bwd.w_h", dwh_bwd),
            ("bwd.b", db_bwd),
        ]
    )

    return (d_inputs, grads)
