"""
Module
------

    head_interface.py

Description
-----------

    This module contains the output heads: an affine transformation
    followed by a softmax over an output alphabet whose first symbol
    is the CTC blank.

Classes
-------

    HeadParams(input_dim, alphabet, params)

        This is the base-class object for the parameters of an
        affine + softmax output head.

    PosteriorGram(probs, alphabet, blank=0)

        This is the base-class object for a per-frame posterior
        distribution over an output alphabet.

Functions
---------

    head_backward(d_logits, cache)

        This function computes the input and parameter gradients of
        an output head.

    head_forward(hidden, head)

        This function evaluates an output head for a single utterance
        and returns the posteriorgram.

    head_logits(hidden, head)

        This function evaluates the affine part of an output head.

Requirements
------------

- numpy; https://numpy.org/

- scipy; https://scipy.org/

Author(s)
---------

    vtrigger developers; 19 October 2026

"""

# ----

from collections import OrderedDict
from dataclasses import dataclass
from types import SimpleNamespace
from typing import Dict, List, Tuple

import numpy
from scipy.special import log_softmax

from utils.exceptions_interface import ShapeError

# ----

# Define all available module properties.
__all__ = ["HeadParams", "PosteriorGram", "head_backward", "head_forward", "head_logits"]

# ----

# Posterior floor applied before the logarithm.
POSTERIOR_FLOOR = 1.0e-30

# ----


@dataclass
class HeadParams:
    """
    Description
    -----------

    This is the base-class object for the parameters of an affine +
    softmax output head; `params` holds the weights `w` (V x H) and
    the biases `b` (V), V being the alphabet size.

    """

    input_dim: int
    alphabet: List[str]
    params: Dict[str, numpy.ndarray]

    @classmethod
    def init(
        cls, input_dim: int, alphabet: List[str], rng: numpy.random.Generator, dtype: str = "float32"
    ) -> "HeadParams":
        bound = 1.0 / numpy.sqrt(input_dim)
        params = OrderedDict(
            [
                ("w", rng.uniform(-bound, bound, (len(alphabet), input_dim)).astype(dtype)),
                ("b", numpy.zeros(len(alphabet), dtype=dtype)),
            ]
        )
        return cls(input_dim=input_dim, alphabet=list(alphabet), params=params)

    @property
    def output_dim(self) -> int:
        return len(self.alphabet)

    def num_parameters(self) -> int:
        return int(sum(value.size for value in self.params.values()))


@dataclass
class PosteriorGram:
    """
    Description
    -----------

    This is the base-class object for a (T' x V) per-frame posterior
    distribution over `alphabet`; `blank` is the index of the CTC
    blank symbol.

    """

    probs: numpy.ndarray
    alphabet: List[str]
    blank: int = 0

    @classmethod
    def from_log_probs(cls, log_probs: numpy.ndarray, alphabet: List[str], blank: int = 0) -> "PosteriorGram":
        return cls(probs=numpy.exp(log_probs), alphabet=list(alphabet), blank=blank)

    @property
    def num_frames(self) -> int:
        return int(self.probs.shape[0])

    def log_probs(self) -> numpy.ndarray:
        """
        Description
        -----------

        This method returns the natural logarithm of the posteriors,
        floored at 1e-30.

        """

        return numpy.log(numpy.maximum(numpy.asarray(self.probs, dtype=numpy.float64), POSTERIOR_FLOOR))


# ----


def head_logits(hidden: numpy.ndarray, head: HeadParams) -> numpy.ndarray:
    """
    Description
    -----------

    This function evaluates the affine part of an output head for
    hidden states of shape (..., H).

    Raises
    ------

    ShapeError:

        - raised if the hidden dimension does not match the head.

    """

    if hidden.shape[-1] != head.input_dim:
        msg = (
            f"The output head expects inputs of dimension {head.input_dim}; "
            f"received shape {hidden.shape}. Aborting!!!"
        )
        raise ShapeError(msg=msg)

    return hidden @ head.params["w"].T + head.params["b"]


def head_forward(hidden: numpy.ndarray, head: HeadParams) -> PosteriorGram:
    """
    Description
    -----------

    This function evaluates an output head for a single utterance;
    the softmax is computed with max-subtraction.

    Parameters
    ----------

    hidden: ``numpy.ndarray``

        A (T' x H) array of trunk outputs.

    head: ``HeadParams``

        A Python HeadParams object.

    Returns
    -------

    posteriors: ``PosteriorGram``

        A Python PosteriorGram object whose rows sum to one.

    Raises
    ------

    ShapeError:

        - raised if the hidden states are not 2-D or their dimension
          does not match the head.

    """

    if hidden.ndim != 2:
        msg = f"The hidden states must be a 2-D array; received shape {hidden.shape}. Aborting!!!"
        raise ShapeError(msg=msg)
    log_probs = log_softmax(head_logits(hidden=hidden, head=head), axis=-1)

    return PosteriorGram.from_log_probs(log_probs=log_probs, alphabet=head.alphabet)


def head_backward(
    d_logits: numpy.ndarray, cache: SimpleNamespace
) -> Tuple[numpy.ndarray, Dict[str, numpy.ndarray]]:
    """
    Description
    -----------

    This function computes the gradients of an output head given the
    gradient of the loss with respect to the logits; `cache` holds
    the head (`head`) and its input hidden states (`hidden`).

    """

    hidden = cache.hidden
    flat_h = hidden.reshape(-1, hidden.shape[-1])
    flat_d = d_logits.reshape(-1, d_logits.shape[-1])
    grads = OrderedDict([("w", flat_d.T @ flat_h), ("b", flat_d.sum(axis=0))])
    d_hidden = d_logits @ cache.head.params["w"]

    return (d_hidden, grads)
