"""
Module
------

    mel_interface.py

Description
-----------

    This module contains the acoustic frontend: framing, windowing and
    the triangular Mel filterbank producing 40-dimensional log-Mel
    features at 100 frames-per-second, and the symmetric stacking and
    sub-sampling of those features into model input windows.

Classes
-------

    AudioClip(samples, sample_rate_hz)

        A mono audio clip with amplitudes in [-1, 1].

    FeatureSequence(frames, frame_rate_fps)

        A time-major (T x D) matrix of log-Mel frames.

    FrontendConfig(...)

        The frontend attributes; see `FrontendConfig.from_dict` for
        the schema.

    ModelInput(windows, frame_rate_fps)

        The stacked and sub-sampled (T' x D') model input windows.

Functions
---------

    compute_features(clip, cfg)

        This function computes the log-Mel features of an audio clip.

    hz_to_mel(freq) / mel_to_hz(mel)

        HTK Mel-scale conversions.

    mel_center_frequencies(cfg)

        This function returns the center frequency (Hz) of each Mel
        channel.

    mel_filterbank(cfg)

        This function builds the area-normalized triangular Mel
        filterbank.

    stack_and_subsample(feats, context=3, factor=3)

        This function stacks symmetric context windows and
        sub-samples the window sequence.

Requirements
------------

- numpy; https://numpy.org/

- scipy; https://scipy.org/

Author(s)
---------

    vtrigger developers; 19 October 2026

"""

# ----

# pylint: disable=too-many-instance-attributes

# ----

from dataclasses import asdict, dataclass
from typing import Dict, Optional as TOptional

import numpy
from numpy.lib.stride_tricks import sliding_window_view
from schema import And, Optional, Or, Use
from scipy import signal

from utils.exceptions_interface import ConfigError, EmptyInputError, ShapeError
from utils.schema_interface import positive, validate_schema

# ----

# Define all available module properties.
__all__ = [
    "AudioClip",
    "FeatureSequence",
    "FrontendConfig",
    "ModelInput",
    "compute_features",
    "hz_to_mel",
    "mel_center_frequencies",
    "mel_filterbank",
    "mel_to_hz",
    "stack_and_subsample",
]

# ----


@dataclass
class AudioClip:
    """
    Description
    -----------

    A mono audio clip; `samples` is a 1-D array of amplitudes in
    [-1, 1].

    """

    samples: numpy.ndarray
    sample_rate_hz: int

    @property
    def num_samples(self) -> int:
        return int(self.samples.shape[0])

    @property
    def duration_s(self) -> float:
        return self.num_samples / float(self.sample_rate_hz)


@dataclass
class FeatureSequence:
    """
    Description
    -----------

    A time-major (T x D) matrix of log-Mel frames.

    """

    frames: numpy.ndarray
    frame_rate_fps: float

    @property
    def num_frames(self) -> int:
        return int(self.frames.shape[0])

    @property
    def dim(self) -> int:
        return int(self.frames.shape[1])


@dataclass
class ModelInput:
    """
    Description
    -----------

    The stacked and sub-sampled (T' x D') model input windows.

    """

    windows: numpy.ndarray
    frame_rate_fps: float

    @property
    def num_frames(self) -> int:
        return int(self.windows.shape[0])

    @property
    def dim(self) -> int:
        return int(self.windows.shape[1])


# ----


@dataclass(frozen=True)
class FrontendConfig:
    """
    Description
    -----------

    The frontend attributes; the defaults (16 kHz, 25 ms Hann window,
    10 ms shift, 512-point FFT, 40 channels, 7-frame windows
    sub-sampled by 3) yield 100 frames-per-second features and 280
    dimensional model inputs at 33.3 frames-per-second.

    """

    sample_rate_hz: int = 16000
    frame_length_ms: float = 25.0
    frame_shift_ms: float = 10.0
    n_fft: int = 512
    n_mels: int = 40
    f_min_hz: float = 0.0
    f_max_hz: TOptional[float] = None
    log_floor: float = 1.0e-10
    window: str = "hann"
    context: int = 3
    subsample: int = 3

    @property
    def frame_length(self) -> int:
        return int(round(self.sample_rate_hz * self.frame_length_ms / 1000.0))

    @property
    def frame_shift(self) -> int:
        return int(round(self.sample_rate_hz * self.frame_shift_ms / 1000.0))

    @property
    def frame_rate_fps(self) -> float:
        return self.sample_rate_hz / float(self.frame_shift)

    @property
    def nyquist_hz(self) -> float:
        return self.sample_rate_hz / 2.0

    @property
    def model_input_dim(self) -> int:
        return (2 * self.context + 1) * self.n_mels

    def to_dict(self) -> Dict:
        return asdict(self)

    @classmethod
    def from_dict(cls, opts: Dict) -> "FrontendConfig":
        """
        Description
        -----------

        This method validates the `frontend` configuration section
        and returns the corresponding FrontendConfig object.

        Raises
        ------

        SchemaInterfaceError:

            - raised if the attributes do not satisfy the schema.

        """

        cls_schema = {
            Optional("sample_rate_hz", default=16000): positive(int),
            Optional("frame_length_ms", default=25.0): positive(float),
            Optional("frame_shift_ms", default=10.0): positive(float),
            Optional("n_fft", default=512): positive(int),
            Optional("n_mels", default=40): positive(int),
            Optional("f_min_hz", default=0.0): And(Use(float), lambda x: x >= 0.0),
            Optional("f_max_hz", default=None): Or(None, positive(float)),
            Optional("log_floor", default=1.0e-10): positive(float),
            Optional("window", default="hann"): str,
            Optional("context", default=3): And(Use(int), lambda x: x >= 0),
            Optional("subsample", default=3): positive(int),
        }
        return cls(**validate_schema(cls_schema=cls_schema, cls_opts=opts, section="frontend"))


# ----


def hz_to_mel(freq: numpy.ndarray) -> numpy.ndarray:
    """
    Description
    -----------

    This function converts frequencies (Hz) to the HTK Mel scale.

    """

    return 2595.0 * numpy.log10(1.0 + numpy.asarray(freq, dtype=numpy.float64) / 700.0)


def mel_to_hz(mel: numpy.ndarray) -> numpy.ndarray:
    """
    Description
    -----------

    This function converts HTK Mel-scale values to frequencies (Hz).

    """

    return 700.0 * (10.0 ** (numpy.asarray(mel, dtype=numpy.float64) / 2595.0) - 1.0)


# ----


def _check_config(cfg: FrontendConfig) -> None:
    if cfg.sample_rate_hz <= 0:
        msg = f"The sample rate {cfg.sample_rate_hz} Hz must be positive. Aborting!!!"
        raise ConfigError(msg=msg)
    if cfg.n_mels < 1:
        msg = f"The number of Mel channels {cfg.n_mels} must be positive. Aborting!!!"
        raise ConfigError(msg=msg)
    if cfg.frame_shift < 1 or cfg.frame_length < 1:
        msg = (
            f"The frame length ({cfg.frame_length}) and shift ({cfg.frame_shift}) "
            "must each span at least one sample. Aborting!!!"
        )
        raise ConfigError(msg=msg)
    if cfg.n_fft < cfg.frame_length:
        msg = (
            f"The FFT length {cfg.n_fft} is shorter than the frame length "
            f"{cfg.frame_length}. Aborting!!!"
        )
        raise ConfigError(msg=msg)


def _band_edges(cfg: FrontendConfig) -> numpy.ndarray:
    f_max = cfg.nyquist_hz if cfg.f_max_hz is None else min(cfg.f_max_hz, cfg.nyquist_hz)
    return mel_to_hz(numpy.linspace(hz_to_mel(cfg.f_min_hz), hz_to_mel(f_max), cfg.n_mels + 2))


def mel_center_frequencies(cfg: FrontendConfig) -> numpy.ndarray:
    """
    Description
    -----------

    This function returns the center frequency (Hz) of each Mel
    channel.

    Parameters
    ----------

    cfg: ``FrontendConfig``

        A Python FrontendConfig object.

    Returns
    -------

    centers: ``numpy.ndarray``

        A (n_mels,) array of channel center frequencies.

    """

    return _band_edges(cfg=cfg)[1:-1]


def mel_filterbank(cfg: FrontendConfig) -> numpy.ndarray:
    """
    Description
    -----------

    This function builds the triangular Mel filterbank over the
    one-sided FFT bins between `f_min_hz` and the Nyquist frequency
    (or `f_max_hz`); each filter is normalized to unit area (its
    weights sum to one).

    Parameters
    ----------

    cfg: ``FrontendConfig``

        A Python FrontendConfig object.

    Returns
    -------

    fbank: ``numpy.ndarray``

        A (n_mels x n_fft/2+1) array of filter weights.

    Raises
    ------

    ConfigError:

        - raised if the configuration is not valid.

    """

    _check_config(cfg=cfg)
    edges = _band_edges(cfg=cfg)
    bin_freqs = numpy.arange(cfg.n_fft // 2 + 1) * cfg.sample_rate_hz / float(cfg.n_fft)
    (left, center, right) = (edges[:-2, None], edges[1:-1, None], edges[2:, None])
    rising = (bin_freqs[None, :] - left) / (center - left)
    falling = (right - bin_freqs[None, :]) / (right - center)
    fbank = numpy.maximum(0.0, numpy.minimum(rising, falling))

    # Filters narrower than one bin fall between bins; these take the
    # bin nearest to their center.
    for chan in numpy.flatnonzero(fbank.sum(axis=1) <= 0.0):
        fbank[chan, int(numpy.argmin(numpy.abs(bin_freqs - center[chan, 0])))] = 1.0
    fbank /= fbank.sum(axis=1, keepdims=True)

    return fbank


# ----


def compute_features(clip: AudioClip, cfg: FrontendConfig) -> FeatureSequence:
    """
    Description
    -----------

    This function computes the log-Mel features of an audio clip: the
    clip is divided into T = floor((N - frame_length)/frame_shift) + 1
    windowed frames, the power spectrum of each frame is projected
    onto the Mel filterbank and the natural logarithm of the energies
    plus `log_floor` is returned.

    Parameters
    ----------

    clip: ``AudioClip``

        A Python AudioClip object.

    cfg: ``FrontendConfig``

        A Python FrontendConfig object.

    Returns
    -------

    feats: ``FeatureSequence``

        A Python FeatureSequence object containing the (T x n_mels)
        features.

    Raises
    ------

    ConfigError:

        - raised if the clip sample rate is not positive or does not
          match the configured sample rate.

    EmptyInputError:

        - raised if the clip is shorter than one frame.

    """

    if clip.sample_rate_hz <= 0:
        msg = f"The clip sample rate {clip.sample_rate_hz} Hz must be positive. Aborting!!!"
        raise ConfigError(msg=msg)
    if clip.sample_rate_hz != cfg.sample_rate_hz:
        msg = (
            f"The clip sample rate {clip.sample_rate_hz} Hz does not match the "
            f"frontend sample rate {cfg.sample_rate_hz} Hz. Aborting!!!"
        )
        raise ConfigError(msg=msg)
    fbank = mel_filterbank(cfg=cfg)
    samples = numpy.asarray(clip.samples, dtype=numpy.float64).reshape(-1)
    if samples.shape[0] < cfg.frame_length:
        msg = (
            f"The clip contains {samples.shape[0]} samples, fewer than one frame "
            f"({cfg.frame_length} samples). Aborting!!!"
        )
        raise EmptyInputError(msg=msg)

    # Frame, window and transform.
    frames = sliding_window_view(samples, cfg.frame_length)[:: cfg.frame_shift]
    window = signal.get_window(cfg.window, cfg.frame_length, fftbins=True)
    power = numpy.abs(numpy.fft.rfft(frames * window, n=cfg.n_fft, axis=1)) ** 2
    log_mel = numpy.log(power @ fbank.T + cfg.log_floor)

    return FeatureSequence(frames=log_mel, frame_rate_fps=cfg.frame_rate_fps)


# ----


def stack_and_subsample(
    feats: FeatureSequence, context: int = 3, factor: int = 3
) -> ModelInput:
    """
    Description
    -----------

    This function stacks symmetric windows of 2 * context + 1 frames
    and sub-samples the window sequence; the window at output index i
    is the concatenation of frames [factor*i - context, ...,
    factor*i + context], the first and last frames being repeated
    beyond the sequence boundaries.

    Parameters
    ----------

    feats: ``FeatureSequence``

        A Python FeatureSequence object containing T frames of D
        dimensions.

    Keywords
    --------

    context: ``int``, optional

        A Python integer specifying the number of frames on either
        side of the center frame.

    factor: ``int``, optional

        A Python integer specifying the sub-sampling factor; indices
        0, factor, 2*factor, ... are retained.

    Returns
    -------

    model_input: ``ModelInput``

        A Python ModelInput object containing ceil(T / factor) windows
        of (2 * context + 1) * D dimensions.

    Raises
    ------

    ConfigError:

        - raised if `context` < 0 or `factor` < 1.

    EmptyInputError:

        - raised if the feature sequence contains no frames.

    ShapeError:

        - raised if the frames are not a 2-D array.

    """

    if context < 0 or factor < 1:
        msg = f"Invalid stacking context {context} or factor {factor}. Aborting!!!"
        raise ConfigError(msg=msg)
    frames = numpy.asarray(feats.frames)
    if frames.ndim != 2:
        msg = f"The feature frames must be a 2-D array; received shape {frames.shape}. Aborting!!!"
        raise ShapeError(msg=msg)
    if frames.shape[0] == 0:
        msg = "The feature sequence contains no frames. Aborting!!!"
        raise EmptyInputError(msg=msg)
    dim = frames.shape[1]
    width = 2 * context + 1
    padded = numpy.pad(frames, ((context, context), (0, 0)), mode="edge")

    # (T, D, width) -> (T, width, D) so each window is frame-major.
    stacked = sliding_window_view(padded, width, axis=0).transpose(0, 2, 1)
    windows = numpy.ascontiguousarray(stacked[::factor].reshape(-1, width * dim))

    return ModelInput(windows=windows, frame_rate_fps=feats.frame_rate_fps / factor)
