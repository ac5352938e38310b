"""
Module
------

    optim_interface.py

Description
-----------

    This module contains the optimizer kernels: global-norm gradient
    clipping and the Adam update with bias correction.

Classes
-------

    AdamState(step=0, m={}, v={})

        This is the base-class object for the Adam moment estimates.

Functions
---------

    adam_step(params, grads, state, lr, betas=(0.9, 0.999), eps=1e-8,
              frozen=())

        This function applies one Adam update.

    clip_gradient(grads, max_norm)

        This function rescales the gradients so that their global L2
        norm does not exceed `max_norm`.

    global_norm(grads)

        This function returns the global L2 norm of the gradients.

Requirements
------------

- numpy; https://numpy.org/

Author(s)
---------

    vtrigger developers; 19 October 2026

"""

# ----

# pylint: disable=too-many-arguments

# ----

from collections import OrderedDict
from dataclasses import dataclass, field
from typing import Dict, Sequence, Tuple

import numpy

from utils.exceptions_interface import ConfigError, ShapeError

# ----

# Define all available module properties.
__all__ = ["AdamState", "adam_step", "clip_gradient", "global_norm", "is_frozen"]

# ----


@dataclass
class AdamState:
    """
    Description
    -----------

    This is the base-class object for the Adam first (`m`) and second
    (`v`) moment estimates, keyed by parameter name, and the step
    counter.

    """

    step: int = 0
    m: Dict[str, numpy.ndarray] = field(default_factory=dict)
    v: Dict[str, numpy.ndarray] = field(default_factory=dict)


# ----


def global_norm(grads: Dict[str, numpy.ndarray]) -> float:
    """
    Description
    -----------

    This function returns the global L2 norm over all gradient
    tensors, accumulated in float64 in key order.

    """

    total = 0.0
    for value in grads.values():
        flat = numpy.asarray(value, dtype=numpy.float64).ravel()
        total += float(flat @ flat)
    return float(numpy.sqrt(total))


def clip_gradient(grads: Dict[str, numpy.ndarray], max_norm: float) -> "OrderedDict[str, numpy.ndarray]":
    """
    Description
    -----------

    This function rescales the gradients: if their global L2 norm g
    exceeds `max_norm`, every tensor is multiplied by max_norm / g;
    otherwise the gradients are returned unchanged.

    Parameters
    ----------

    grads: ``Dict[str, numpy.ndarray]``

        A Python dictionary of gradient tensors.

    max_norm: ``float``

        A Python float specifying the maximum global norm.

    Returns
    -------

    grads: ``OrderedDict[str, numpy.ndarray]``

        The (possibly rescaled) gradients.

    Raises
    ------

    ConfigError:

        - raised if `max_norm` is not positive.

    """

    if max_norm <= 0.0:
        msg = f"The gradient clipping norm {max_norm} must be positive. Aborting!!!"
        raise ConfigError(msg=msg)
    norm = global_norm(grads=grads)
    if norm <= max_norm:
        return OrderedDict(grads)
    scale = max_norm / norm

    return OrderedDict((name, (value * scale).astype(value.dtype)) for (name, value) in grads.items())


# ----


def is_frozen(name: str, frozen: Sequence[str]) -> bool:
    """
    Description
    -----------

    This function returns whether a parameter name matches one of the
    frozen prefixes (e.g., `trunk.` or `phonetic.`).

    """

    return any(name == prefix or name.startswith(prefix.rstrip(".") + ".") for prefix in frozen)


def adam_step(
    params: Dict[str, numpy.ndarray],
    grads: Dict[str, numpy.ndarray],
    state: AdamState,
    lr: float,
    betas: Tuple[float, float] = (0.9, 0.999),
    eps: float = 1.0e-8,
    frozen: Sequence[str] = (),
) -> Tuple["OrderedDict[str, numpy.ndarray]", AdamState]:
    """
    Description
    -----------

    This function applies one Adam update with bias correction:

        m <- b1 m + (1 - b1) g
        v <- b2 v + (1 - b2) g^2
        p <- p - lr (m / (1 - b1^t)) / (sqrt(v / (1 - b2^t)) + eps)

    Parameters matching a `frozen` prefix, or without a gradient, are
    returned unchanged and their moments are not updated.

    Parameters
    ----------

    params: ``Dict[str, numpy.ndarray]``

        A Python dictionary of parameter tensors; not modified.

    grads: ``Dict[str, numpy.ndarray]``

        A Python dictionary of gradient tensors.

    state: ``AdamState``

        A Python AdamState object; updated in place.

    lr: ``float``

        A Python float specifying the learning rate.

    Keywords
    --------

    betas: ``Tuple[float, float]``, optional

        The moment decay rates.

    eps: ``float``, optional

        A Python float specifying the denominator offset.

    frozen: ``Sequence[str]``, optional

        The frozen parameter name prefixes.

    Returns
    -------

    params: ``OrderedDict[str, numpy.ndarray]``

        The updated parameters.

    state: ``AdamState``

        The updated AdamState object.

    Raises
    ------

    ShapeError:

        - raised if a gradient or moment does not match its
          parameter shape.

    """

    (beta1, beta2) = betas
    state.step += 1
    (corr1, corr2) = (1.0 - beta1**state.step, 1.0 - beta2**state.step)
    updated = OrderedDict()
    for (name, value) in params.items():
        if name not in grads or is_frozen(name=name, frozen=frozen):
            updated[name] = value
            continue
        grad = numpy.asarray(grads[name], dtype=numpy.float64)
        moment1 = state.m.get(name, numpy.zeros(value.shape))
        moment2 = state.v.get(name, numpy.zeros(value.shape))
        if grad.shape != value.shape or moment1.shape != value.shape:
            msg = (
                f"Parameter {name} has shape {value.shape}; its gradient has shape "
                f"{grad.shape} and its moments {moment1.shape}. Aborting!!!"
            )
            raise ShapeError(msg=msg)
        moment1 = beta1 * moment1 + (1.0 - beta1) * grad
        moment2 = beta2 * moment2 + (1.0 - beta2) * grad**2
        (state.m[name], state.v[name]) = (moment1, moment2)
        step = lr * (moment1 / corr1) / (numpy.sqrt(moment2 / corr2) + eps)
        updated[name] = (value - step).astype(value.dtype)

    return (updated, state)
