"""
Module
------

    ctc_interface.py

Description
-----------

    This module contains the Connectionist Temporal Classification
    (CTC) loss and its gradient; both are computed by the
    forward-backward algorithm over the blank-interleaved state
    lattice (blank, l_1, blank, l_2, ..., l_L, blank) in log space.

    The empty target degenerates to the single all-blank path; its
    loss is the frame-wise blank cross-entropy.

Classes
-------

    CtcResult(loss, grad_logits=None, feasible=True)

        This is the base-class object for the result of a CTC loss
        evaluation.

    LabelSequence(symbols)

        This is the base-class object for a CTC target sequence.

Functions
---------

    batch_ctc(log_probs, lengths, targets, weights=None, blank=0)

        This function evaluates the CTC loss and gradient of a padded
        batch.

    blank_only_loss(log_probs, blank=0)

        This function returns the loss of the empty target.

    ctc_grad(log_probs, target, blank=0)

        This function returns the gradient of the CTC loss with
        respect to the logits.

    ctc_loss(log_probs, target, blank=0, compute_grad=False)

        This function evaluates the CTC loss.

    min_alignment_length(target)

        This function returns the minimum number of frames required
        to align a target.

Requirements
------------

- numpy; https://numpy.org/

Author(s)
---------

    vtrigger developers; 19 October 2026

"""

# ----

# pylint: disable=too-many-locals

# ----

from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple, Union

import numpy

from utils.exceptions_interface import CTCInterfaceError, EmptyInputError, InfeasibleTargetError, ShapeError
from utils.logger_interface import Logger

# ----

# Define all available module properties.
__all__ = [
    "CtcResult",
    "LabelSequence",
    "batch_ctc",
    "blank_only_loss",
    "ctc_grad",
    "ctc_loss",
    "min_alignment_length",
]

# ----

logger = Logger(caller_name=__name__)

# ----


@dataclass(frozen=True)
class LabelSequence:
    """
    Description
    -----------

    This is the base-class object for a CTC target sequence; the
    symbols are non-blank alphabet indices and the sequence may be
    empty.

    """

    symbols: Tuple[int, ...] = ()

    def __post_init__(self) -> None:
        object.__setattr__(self, "symbols", tuple(int(symbol) for symbol in self.symbols))

    def __len__(self) -> int:
        return len(self.symbols)


@dataclass
class CtcResult:
    """
    Description
    -----------

    This is the base-class object for the result of a CTC loss
    evaluation; `loss` is the negative log-probability (nats) of the
    target and is +inf when the target cannot be aligned (`feasible`
    is then False and `grad_logits` is NoneType).

    """

    loss: float
    grad_logits: Optional[numpy.ndarray] = None
    feasible: bool = True


TargetLike = Union[LabelSequence, Sequence[int]]

# ----


def _symbols(target: TargetLike) -> Tuple[int, ...]:
    return target.symbols if isinstance(target, LabelSequence) else tuple(int(s) for s in target)


def min_alignment_length(target: TargetLike) -> int:
    """
    Description
    -----------

    This function returns the minimum number of frames required to
    align a target: its length plus the number of adjacent repeated
    labels (each repeat requires a separating blank).

    """

    symbols = _symbols(target)
    repeats = sum(1 for (prev, curr) in zip(symbols[:-1], symbols[1:]) if prev == curr)
    return len(symbols) + repeats


def _check(log_probs: numpy.ndarray, symbols: Tuple[int, ...], blank: int) -> numpy.ndarray:
    log_probs = numpy.asarray(log_probs, dtype=numpy.float64)
    if log_probs.ndim != 2:
        msg = f"The log-posteriors must be a 2-D array; received shape {log_probs.shape}. Aborting!!!"
        raise ShapeError(msg=msg)
    if log_probs.shape[0] == 0:
        msg = "The log-posteriors contain no frames. Aborting!!!"
        raise EmptyInputError(msg=msg)
    nsymbols = log_probs.shape[1]
    if not 0 <= blank < nsymbols:
        msg = f"The blank index {blank} is not valid for {nsymbols} symbols. Aborting!!!"
        raise CTCInterfaceError(msg=msg)
    for symbol in symbols:
        if symbol == blank or not 0 <= symbol < nsymbols:
            msg = f"The target symbol {symbol} is blank or outside the alphabet of {nsymbols}. Aborting!!!"
            raise CTCInterfaceError(msg=msg)
    return log_probs


def _lattice(symbols: Tuple[int, ...], blank: int) -> Tuple[numpy.ndarray, numpy.ndarray]:
    ext = numpy.full(2 * len(symbols) + 1, blank, dtype=numpy.int64)
    ext[1::2] = symbols
    # A state may be entered from two states back when it is a label
    # differing from the previous label.
    skip = numpy.zeros(ext.shape[0], dtype=bool)
    skip[2:] = (ext[2:] != blank) & (ext[2:] != ext[:-2])
    return (ext, skip)


def _forward(emit: numpy.ndarray, skip: numpy.ndarray) -> numpy.ndarray:
    (nframes, nstates) = emit.shape
    alpha = numpy.full((nframes, nstates), -numpy.inf)
    alpha[0, : min(2, nstates)] = emit[0, : min(2, nstates)]
    for step in range(1, nframes):
        prev = alpha[step - 1]
        acc = prev.copy()
        acc[1:] = numpy.logaddexp(acc[1:], prev[:-1])
        acc[2:] = numpy.where(skip[2:], numpy.logaddexp(acc[2:], prev[:-2]), acc[2:])
        alpha[step] = acc + emit[step]
    return alpha


def _backward(emit: numpy.ndarray, skip: numpy.ndarray) -> numpy.ndarray:
    # beta[t, s] excludes the emission at frame t.
    (nframes, nstates) = emit.shape
    beta = numpy.full((nframes, nstates), -numpy.inf)
    beta[-1, max(0, nstates - 2) :] = 0.0
    for step in range(nframes - 2, -1, -1):
        nxt = beta[step + 1] + emit[step + 1]
        acc = nxt.copy()
        acc[:-1] = numpy.logaddexp(acc[:-1], nxt[1:])
        acc[:-2] = numpy.where(skip[2:], numpy.logaddexp(acc[:-2], nxt[2:]), acc[:-2])
        beta[step] = acc
    return beta


# ----


def ctc_loss(
    log_probs: numpy.ndarray, target: TargetLike, blank: int = 0, compute_grad: bool = False
) -> CtcResult:
    """
    Description
    -----------

    This function evaluates the CTC loss, the negative log of the sum
    over all frame-level paths collapsing (repeats merged, blanks
    removed) to the target of the path probabilities.

    Parameters
    ----------

    log_probs: ``numpy.ndarray``

        A (T' x V) array of log-posteriors (log-softmax of the
        logits).

    target: ``TargetLike``

        A Python LabelSequence object or sequence of non-blank symbol
        indices.

    Keywords
    --------

    blank: ``int``, optional

        A Python integer specifying the blank index.

    compute_grad: ``bool``, optional

        A Python boolean valued variable specifying whether to compute
        the gradient with respect to the logits.

    Returns
    -------

    result: ``CtcResult``

        A Python CtcResult object; infeasible targets yield an
        infinite loss and non-finite log-posteriors a NaN loss.

    Raises
    ------

    CTCInterfaceError:

        - raised if a target symbol is blank or outside the alphabet.

    EmptyInputError:

        - raised if the log-posteriors contain no frames.

    ShapeError:

        - raised if the log-posteriors are not a 2-D array.

    """

    symbols = _symbols(target)
    log_probs = _check(log_probs=log_probs, symbols=symbols, blank=blank)
    if min_alignment_length(symbols) > log_probs.shape[0]:
        return CtcResult(loss=numpy.inf, grad_logits=None, feasible=False)
    (ext, skip) = _lattice(symbols=symbols, blank=blank)
    emit = log_probs[:, ext]
    alpha = _forward(emit=emit, skip=skip)
    if ext.shape[0] > 1:
        log_z = numpy.logaddexp(alpha[-1, -1], alpha[-1, -2])
    else:
        log_z = alpha[-1, -1]
    if log_z == -numpy.inf:
        return CtcResult(loss=numpy.inf, grad_logits=None, feasible=False)
    grad = None
    if compute_grad:
        beta = _backward(emit=emit, skip=skip)
        occupancy = numpy.zeros_like(log_probs)
        numpy.add.at(occupancy, (slice(None), ext), numpy.exp(alpha + beta - log_z))
        grad = numpy.exp(log_probs) - occupancy

    return CtcResult(loss=float(-log_z), grad_logits=grad, feasible=True)


def blank_only_loss(log_probs: numpy.ndarray, blank: int = 0) -> float:
    """
    Description
    -----------

    This function returns the loss of the empty target, the frame-wise
    blank cross-entropy -sum_t log p(blank | t); the frames are
    accumulated sequentially, as by the lattice recursion.

    """

    log_probs = _check(log_probs=log_probs, symbols=(), blank=blank)
    return float(-numpy.cumsum(log_probs[:, blank])[-1])


def ctc_grad(log_probs: numpy.ndarray, target: TargetLike, blank: int = 0) -> numpy.ndarray:
    """
    Description
    -----------

    This function returns the (T' x V) gradient of the CTC loss with
    respect to the logits: the softmax posteriors minus the expected
    symbol occupancy under the posterior over alignments.

    Raises
    ------

    InfeasibleTargetError:

        - raised if the target cannot be aligned to the frames.

    """

    result = ctc_loss(log_probs=log_probs, target=target, blank=blank, compute_grad=True)
    if not result.feasible:
        msg = (
            f"The target of length {len(_symbols(target))} cannot be aligned to "
            f"{numpy.shape(log_probs)[0]} frames. Aborting!!!"
        )
        raise InfeasibleTargetError(msg=msg)
    return result.grad_logits


# ----


def batch_ctc(
    log_probs: numpy.ndarray,
    lengths: Sequence[int],
    targets: List[TargetLike],
    weights: Optional[Sequence[float]] = None,
    blank: int = 0,
    ids: Optional[Sequence[str]] = None,
) -> Tuple[numpy.ndarray, numpy.ndarray, numpy.ndarray]:
    """
    Description
    -----------

    This function evaluates the CTC loss and gradient of each
    utterance of a padded batch; infeasible utterances are logged
    and receive an infinite loss and zero gradient.

    Parameters
    ----------

    log_probs: ``numpy.ndarray``

        A (B x T' x V) array of log-posteriors.

    lengths: ``Sequence[int]``

        The valid length of each utterance.

    targets: ``List[TargetLike]``

        The target of each utterance.

    Keywords
    --------

    weights: ``Sequence[float]``, optional

        Per-utterance gradient weights; unit weights if NoneType.

    blank: ``int``, optional

        A Python integer specifying the blank index.

    ids: ``Sequence[str]``, optional

        Utterance ids used within the log messages.

    Returns
    -------

    losses: ``numpy.ndarray``

        A (B,) array of (unweighted) losses.

    grads: ``numpy.ndarray``

        A (B x T' x V) array of weighted logit gradients; zero at
        padded positions.

    feasible: ``numpy.ndarray``

        A (B,) boolean array.

    """

    log_probs = numpy.asarray(log_probs, dtype=numpy.float64)
    nbatch = log_probs.shape[0]
    if len(lengths) != nbatch or len(targets) != nbatch:
        msg = f"Batch of {nbatch} utterances with {len(lengths)} lengths and {len(targets)} targets. Aborting!!!"
        raise ShapeError(msg=msg)
    weights = numpy.ones(nbatch) if weights is None else numpy.asarray(weights, dtype=numpy.float64)
    losses = numpy.full(nbatch, numpy.inf)
    grads = numpy.zeros_like(log_probs)
    feasible = numpy.zeros(nbatch, dtype=bool)
    for idx in range(nbatch):
        length = int(lengths[idx])
        result = ctc_loss(log_probs[idx, :length], targets[idx], blank=blank, compute_grad=True)
        if not result.feasible:
            name = ids[idx] if ids is not None else idx
            msg = (
                f"Skipping utterance {name}: its target of length {len(_symbols(targets[idx]))} "
                f"cannot be aligned to {length} frames."
            )
            logger.warn(msg=msg)
            continue
        losses[idx] = result.loss
        grads[idx, :length] = weights[idx] * result.grad_logits
        feasible[idx] = True

    return (losses, grads, feasible)
