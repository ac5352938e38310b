"""
Module
------

    augment_interface.py

Description
-----------

    This module contains the training and evaluation data
    augmentation: room impulse response (RIR) convolution, echo
    residual (device playback) mixing at a specified signal-to-noise
    ratio, the synthetic RIR and residual pools and the assembly of
    the augmented manifests.

Classes
-------

    AugmentConfig()

        This is the base-class object for the augmentation
        attributes.

    ImpulseResponse(taps, sample_rate_hz, id)

        This is the base-class object for a room impulse response.

    ResidualClip(clip, id)

        This is the base-class object for an echo residual (or
        external noise) clip.

Functions
---------

    build_augmented_set(entries, rir_pool, residual_pool, seed, out_dir,
                        snr_range=(-5.0, 20.0), workers=1)

        This function returns the clean, reverberated and
        reverberated-with-echo-residual variants of a manifest.

    build_condition_set(entries, residual_pool, noise_pool, seed,
                        out_dir, workers=1)

        This function returns the evaluation-condition variants of a
        manifest.

    convolve_rir(clip, rir, fft_threshold=FFT_THRESHOLD)

        This function convolves a clip with a room impulse response.

    load_residual_pool(paths)

        This function reads a pool of residual clips.

    load_rir_pool(paths)

        This function reads a pool of room impulse responses.

    mix_residual(clip, residual, snr_db, allow_silent_residual=False,
                 offset=0)

        This function mixes a residual clip into a clip at a
        specified signal-to-noise ratio.

    synth_residual(rng, sample_rate_hz, num_samples, residual_id,
                   modulation_depth=0.5)

        This function synthesizes a band-limited amplitude-modulated
        noise clip.

    synth_residual_pool(seed, cfg, sample_rate_hz, modulation_depth=0.5,
                        prefix="residual")

        This function synthesizes a pool of residual clips.

    synth_rir(rng, sample_rate_hz, rt60_s, rir_id, length_s=None)

        This function synthesizes an exponentially decaying noise
        impulse response.

    synth_rir_pool(seed, cfg, sample_rate_hz)

        This function synthesizes a pool of impulse responses.

Requirements
------------

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

# ----

import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import asdict, dataclass
from typing import Dict, List, Sequence, Tuple

import numpy
from schema import And, Optional, Use
from scipy.signal import butter, fftconvolve, sosfilt

from frontend.mel_interface import AudioClip
from ioapps.audio_interface import read_audio, write_raw
from ioapps.manifest_interface import ManifestEntry
from tools.fileio_interface import makedirs
from tools.random_interface import stage_rng
from utils.exceptions_interface import AugmentInterfaceError, ConfigError
from utils.logger_interface import Logger
from utils.schema_interface import positive, validate_schema

# ----

# Define all available module properties.
__all__ = [
    "AugmentConfig",
    "CONDITIONS",
    "ImpulseResponse",
    "ResidualClip",
    "build_augmented_set",
    "build_condition_set",
    "convolve_rir",
    "load_residual_pool",
    "load_rir_pool",
    "mix_residual",
    "synth_residual",
    "synth_residual_pool",
    "synth_rir",
    "synth_rir_pool",
]

# ----

logger = Logger(caller_name=__name__)

# Kernels longer than this many taps are convolved in the frequency
# domain.
FFT_THRESHOLD = 64

# Evaluation conditions: (variant, pool, SNR dB).
CONDITIONS = (
    ("quiet", None, None),
    ("noise", "noise", 10.0),
    ("playback_medium", "residual", 5.0),
    ("playback_loud", "residual", -5.0),
)

# ----


@dataclass(frozen=True)
class AugmentConfig:
    """
    Description
    -----------

    This is the base-class object for the augmentation attributes;
    the RIR and residual pools are synthesized from `rir_count` and
    `residual_count` when no pool files are specified.

    """

    rir_count: int = 20
    rt60_range_s: Tuple[float, float] = (0.2, 0.8)
    residual_count: int = 20
    residual_s: float = 2.0
    snr_range_db: Tuple[float, float] = (-5.0, 20.0)
    workers: int = 1

    def to_dict(self) -> Dict:
        attrs = asdict(self)
        attrs["rt60_range_s"] = list(self.rt60_range_s)
        attrs["snr_range_db"] = list(self.snr_range_db)
        return attrs

    @classmethod
    def from_dict(cls, opts: Dict) -> "AugmentConfig":
        """
        Description
        -----------

        This method validates the `augment` configuration section.

        Raises
        ------

        SchemaInterfaceError:

            - raised if the attributes do not satisfy the schema.

        """

        def _range(lower_bound: float) -> And:
            return And([Use(float)], lambda x: len(x) == 2 and lower_bound <= x[0] <= x[1])

        cls_schema = {
            Optional("rir_count", default=20): positive(int),
            Optional("rt60_range_s", default=[0.2, 0.8]): _range(lower_bound=1.0e-3),
            Optional("residual_count", default=20): positive(int),
            Optional("residual_s", default=2.0): positive(float),
            Optional("snr_range_db", default=[-5.0, 20.0]): _range(lower_bound=-numpy.inf),
            Optional("workers", default=1): positive(int),
        }
        attrs = validate_schema(cls_schema=cls_schema, cls_opts=opts, section="augment")
        attrs["rt60_range_s"] = tuple(attrs["rt60_range_s"])
        attrs["snr_range_db"] = tuple(attrs["snr_range_db"])

        return cls(**attrs)


@dataclass(frozen=True)
class ImpulseResponse:
    """
    Description
    -----------

    This is the base-class object for a room impulse response.

    """

    taps: numpy.ndarray
    sample_rate_hz: int
    id: str


@dataclass(frozen=True)
class ResidualClip:
    """
    Description
    -----------

    This is the base-class object for an echo residual clip; external
    noise clips use the same type.

    """

    clip: AudioClip
    id: str


# ----


def _check_rates(clip: AudioClip, other_rate: int, what: str) -> None:
    if clip.sample_rate_hz != other_rate:
        msg = (
            f"The {what} sample rate {other_rate} Hz does not match the clip sample "
            f"rate {clip.sample_rate_hz} Hz. Aborting!!!"
        )
        raise AugmentInterfaceError(msg=msg)


def convolve_rir(clip: AudioClip, rir: ImpulseResponse, fft_threshold: int = FFT_THRESHOLD) -> AudioClip:
    """
    Description
    -----------

    This function convolves a clip with a room impulse response; the
    full linear convolution is truncated to the clip length and
    rescaled so that its peak equals the clip peak. Kernels of at
    most `fft_threshold` taps are convolved directly and longer
    kernels in the frequency domain.

    Parameters
    ----------

    clip: ``AudioClip``

        A Python AudioClip object.

    rir: ``ImpulseResponse``

        A Python ImpulseResponse object.

    Keywords
    --------

    fft_threshold: ``int``, optional

        A Python integer specifying the largest kernel convolved
        directly.

    Returns
    -------

    reverb: ``AudioClip``

        A Python AudioClip object of the clip length.

    Raises
    ------

    AugmentInterfaceError:

        - raised if the sample rates differ or the impulse response
          is empty.

    """

    _check_rates(clip=clip, other_rate=rir.sample_rate_hz, what=f"impulse response {rir.id}")
    taps = numpy.asarray(rir.taps, dtype=numpy.float64)
    if taps.size == 0:
        msg = f"The impulse response {rir.id} has no taps. Aborting!!!"
        raise AugmentInterfaceError(msg=msg)
    samples = numpy.asarray(clip.samples, dtype=numpy.float64)
    if taps.size <= fft_threshold:
        reverb = numpy.convolve(samples, taps)[: samples.size]
    else:
        reverb = fftconvolve(samples, taps, mode="full")[: samples.size]
    (peak_in, peak_out) = (numpy.abs(samples).max(), numpy.abs(reverb).max())
    if peak_out > 0.0:
        reverb = reverb * (peak_in / peak_out)

    return AudioClip(samples=reverb, sample_rate_hz=clip.sample_rate_hz)


def mix_residual(
    clip: AudioClip,
    residual: ResidualClip,
    snr_db: float,
    allow_silent_residual: bool = False,
    offset: int = 0,
) -> AudioClip:
    """
    Description
    -----------

    This function mixes a residual clip into a clip; the residual is
    tiled (or cut, starting at `offset`) to the clip length and
    scaled so that 10 log10(E_clip / E_residual) equals `snr_db`; a
    mixture whose peak exceeds 1 is rescaled to a unit peak, which
    leaves the ratio unchanged.

    Parameters
    ----------

    clip: ``AudioClip``

        A Python AudioClip object.

    residual: ``ResidualClip``

        A Python ResidualClip object.

    snr_db: ``float``

        A Python float specifying the signal-to-noise ratio (dB).

    Keywords
    --------

    allow_silent_residual: ``bool``, optional

        A Python boolean valued variable specifying whether a silent
        residual passes the clip through unchanged rather than
        raising.

    offset: ``int``, optional

        A Python integer specifying the first residual sample used.

    Returns
    -------

    mixed: ``AudioClip``

        A Python AudioClip object.

    Raises
    ------

    AugmentInterfaceError:

        - raised if the sample rates differ, the clip is silent (the
          ratio is undefined) or the residual is silent and
          `allow_silent_residual` is False.

    """

    _check_rates(clip=clip, other_rate=residual.clip.sample_rate_hz, what=f"residual {residual.id}")
    samples = numpy.asarray(clip.samples, dtype=numpy.float64)
    energy = float(samples @ samples)
    if energy == 0.0:
        msg = "Cannot mix a residual into a silent clip; the signal-to-noise ratio is undefined. Aborting!!!"
        raise AugmentInterfaceError(msg=msg)
    noise = numpy.asarray(residual.clip.samples, dtype=numpy.float64)
    noise = numpy.resize(numpy.roll(noise, -offset), samples.size)
    noise_energy = float(noise @ noise)
    if noise_energy == 0.0:
        if allow_silent_residual:
            logger.debug(msg=f"The residual {residual.id} is silent; the clip is passed through.")
            return AudioClip(samples=samples.copy(), sample_rate_hz=clip.sample_rate_hz)
        msg = f"The residual {residual.id} is silent. Aborting!!!"
        raise AugmentInterfaceError(msg=msg)
    scale = numpy.sqrt(energy / (noise_energy * 10.0 ** (snr_db / 10.0)))
    mixed = samples + scale * noise
    peak = numpy.abs(mixed).max()
    if peak > 1.0:
        mixed = mixed / peak

    return AudioClip(samples=mixed, sample_rate_hz=clip.sample_rate_hz)


# ----


def synth_rir(
    rng: numpy.random.Generator, sample_rate_hz: int, rt60_s: float, rir_id: str, length_s: float = None
) -> ImpulseResponse:
    """
    Description
    -----------

    This function synthesizes an impulse response: a unit direct path
    followed, after a short pre-delay, by a Gaussian noise tail whose
    envelope decays by 60 dB over `rt60_s`.

    """

    length = int(round(sample_rate_hz * (rt60_s if length_s is None else length_s)))
    if length < 2:
        msg = f"The impulse response {rir_id} must hold at least 2 taps. Aborting!!!"
        raise AugmentInterfaceError(msg=msg)
    time = numpy.arange(length) / float(sample_rate_hz)
    taps = 0.5 * rng.standard_normal(length) * numpy.exp(-numpy.log(1000.0) * time / rt60_s)
    predelay = min(length - 1, int(rng.integers(int(0.002 * sample_rate_hz), int(0.01 * sample_rate_hz) + 1)))
    taps[:predelay] = 0.0
    taps[0] = 1.0

    return ImpulseResponse(taps=taps, sample_rate_hz=sample_rate_hz, id=rir_id)


def synth_residual(
    rng: numpy.random.Generator,
    sample_rate_hz: int,
    num_samples: int,
    residual_id: str,
    modulation_depth: float = 0.5,
) -> ResidualClip:
    """
    Description
    -----------

    This function synthesizes a residual clip: white noise band-pass
    filtered to a random band within the speech range and amplitude
    modulated at a random syllabic rate; a zero `modulation_depth`
    yields stationary band-limited noise.

    """

    low = rng.uniform(150.0, 600.0)
    high = min(rng.uniform(2000.0, 5000.0), 0.45 * sample_rate_hz)
    sos = butter(4, [low, high], btype="bandpass", fs=sample_rate_hz, output="sos")
    samples = sosfilt(sos, rng.standard_normal(num_samples))
    rate = rng.uniform(2.0, 8.0)
    time = numpy.arange(num_samples) / float(sample_rate_hz)
    samples *= 1.0 + modulation_depth * numpy.sin(2.0 * numpy.pi * rate * time + rng.uniform(0.0, 2.0 * numpy.pi))
    samples *= 0.5 / max(numpy.abs(samples).max(), 1.0e-12)

    return ResidualClip(clip=AudioClip(samples=samples, sample_rate_hz=sample_rate_hz), id=residual_id)


def synth_rir_pool(seed: int, cfg: AugmentConfig, sample_rate_hz: int) -> List[ImpulseResponse]:
    rng = stage_rng(root_seed=seed, stage="augment.rir_pool")
    return [
        synth_rir(rng=rng, sample_rate_hz=sample_rate_hz, rt60_s=rng.uniform(*cfg.rt60_range_s), rir_id=f"rir{idx:04d}")
        for idx in range(cfg.rir_count)
    ]


def synth_residual_pool(
    seed: int, cfg: AugmentConfig, sample_rate_hz: int, modulation_depth: float = 0.5, prefix: str = "residual"
) -> List[ResidualClip]:
    rng = stage_rng(root_seed=seed, stage=f"augment.{prefix}_pool")
    num_samples = int(round(cfg.residual_s * sample_rate_hz))
    return [
        synth_residual(
            rng=rng,
            sample_rate_hz=sample_rate_hz,
            num_samples=num_samples,
            residual_id=f"{prefix}{idx:04d}",
            modulation_depth=modulation_depth,
        )
        for idx in range(cfg.residual_count)
    ]


def load_rir_pool(paths: Sequence[str]) -> List[ImpulseResponse]:
    pool = []
    for path in paths:
        clip = read_audio(path=path)
        rir_id = os.path.splitext(os.path.basename(path))[0]
        pool.append(ImpulseResponse(taps=clip.samples, sample_rate_hz=clip.sample_rate_hz, id=rir_id))
    return pool


def load_residual_pool(paths: Sequence[str]) -> List[ResidualClip]:
    return [ResidualClip(clip=read_audio(path=path), id=os.path.splitext(os.path.basename(path))[0]) for path in paths]


# ----


def _check_inputs(entries: Sequence[ManifestEntry], pools: Dict[str, Sequence]) -> None:
    for (name, pool) in pools.items():
        if not pool:
            msg = f"The {name} pool is empty. Aborting!!!"
            raise ConfigError(msg=msg)
    missing = [entry.id for entry in entries if entry.audio_path is None]
    if missing:
        msg = f"Augmentation requires audio; the utterances {missing[:5]} reference none. Aborting!!!"
        raise AugmentInterfaceError(msg=msg)


def _render(job: Tuple) -> List[ManifestEntry]:
    """
    Description
    -----------

    This function renders the variants of one utterance; each job
    holds the entry, the output directory and a list of (variant,
    impulse response, residual, SNR, provenance) tuples.

    """

    (entry, out_dir, variants) = job
    clean = read_audio(path=entry.audio_path)
    outputs = []
    for (variant, rir, residual, snr_db, provenance) in variants:
        clip = clean if rir is None else convolve_rir(clip=clean, rir=rir)
        if residual is not None:
            clip = mix_residual(clip=clip, residual=residual, snr_db=snr_db)
        path = os.path.join(out_dir, f"{entry.id}__{variant}.f32")
        write_raw(path=path, clip=clip)
        outputs.append(
            entry.replace(
                id=f"{entry.id}__{variant}",
                audio_path=path,
                feature_path=None,
                variant=variant,
                provenance=dict(entry.provenance, source_id=entry.id, **provenance),
            )
        )

    return outputs


def _run(jobs: List[Tuple], workers: int) -> List[List[ManifestEntry]]:
    if workers == 1:
        return [_render(job) for job in jobs]
    with ThreadPoolExecutor(max_workers=workers) as executor:
        return list(executor.map(_render, jobs))


def build_augmented_set(
    entries: Sequence[ManifestEntry],
    rir_pool: Sequence[ImpulseResponse],
    residual_pool: Sequence[ResidualClip],
    seed: int,
    out_dir: str,
    snr_range: Tuple[float, float] = (-5.0, 20.0),
    workers: int = 1,
) -> List[ManifestEntry]:
    """
    Description
    -----------

    This function returns, for each input utterance, the clean
    utterance, a reverberated variant (`reverb`) and a reverberated
    variant mixed with an echo residual (`reverb_echo`); both
    variants use the same randomly selected impulse response and the
    residual SNR is drawn uniformly from `snr_range`. All selections
    are drawn serially from `seed` before rendering so the result
    does not depend on `workers`.

    Parameters
    ----------

    entries: ``Sequence[ManifestEntry]``

        The manifest utterances; each must reference audio.

    rir_pool: ``Sequence[ImpulseResponse]``

        The impulse response pool.

    residual_pool: ``Sequence[ResidualClip]``

        The echo residual pool.

    seed: ``int``

        A Python integer specifying the selection seed.

    out_dir: ``str``

        A Python string specifying the directory for the rendered
        audio.

    Keywords
    --------

    snr_range: ``Tuple[float, float]``, optional

        The residual SNR range (dB).

    workers: ``int``, optional

        A Python integer specifying the number of rendering threads.

    Returns
    -------

    augmented: ``List[ManifestEntry]``

        The 3N output utterances; the variants of an utterance are
        consecutive and carry its labels unchanged.

    Raises
    ------

    ConfigError:

        - raised if a pool is empty.

    AugmentInterfaceError:

        - raised if an utterance references no audio.

    """

    _check_inputs(entries=entries, pools={"impulse response": rir_pool, "echo residual": residual_pool})
    rng = numpy.random.default_rng(seed)
    makedirs(path=out_dir)
    jobs = []
    for entry in entries:
        rir = rir_pool[int(rng.integers(len(rir_pool)))]
        residual = residual_pool[int(rng.integers(len(residual_pool)))]
        snr_db = float(rng.uniform(*snr_range))
        variants = [
            ("reverb", rir, None, None, {"rir_id": rir.id}),
            ("reverb_echo", rir, residual, snr_db, {"rir_id": rir.id, "residual_id": residual.id, "snr_db": snr_db}),
        ]
        jobs.append((entry, out_dir, variants))
    augmented = []
    for (entry, rendered) in zip(entries, _run(jobs=jobs, workers=workers)):
        augmented += [entry.replace(variant="clean")] + rendered
    logger.info(msg=f"Augmented {len(entries)} utterances into {len(augmented)}.")

    return augmented


def build_condition_set(
    entries: Sequence[ManifestEntry],
    residual_pool: Sequence[ResidualClip],
    noise_pool: Sequence[ResidualClip],
    seed: int,
    out_dir: str,
    workers: int = 1,
) -> List[ManifestEntry]:
    """
    Description
    -----------

    This function returns the evaluation-condition variants of each
    utterance: `quiet` (unchanged), `noise` (external noise at 10 dB
    SNR), `playback_medium` (echo residual at 5 dB) and
    `playback_loud` (echo residual at -5 dB).

    Returns
    -------

    conditions: ``List[ManifestEntry]``

        The 4N output utterances with labels and durations unchanged.

    Raises
    ------

    ConfigError:

        - raised if a pool is empty.

    """

    _check_inputs(entries=entries, pools={"echo residual": residual_pool, "noise": noise_pool})
    rng = numpy.random.default_rng(seed)
    pools = {"residual": residual_pool, "noise": noise_pool}
    makedirs(path=out_dir)
    jobs = []
    for entry in entries:
        variants = []
        for (variant, pool_name, snr_db) in CONDITIONS[1:]:
            pool = pools[pool_name]
            residual = pool[int(rng.integers(len(pool)))]
            variants.append((variant, None, residual, snr_db, {f"{pool_name}_id": residual.id, "snr_db": snr_db}))
        jobs.append((entry, out_dir, variants))
    conditions = []
    for (entry, rendered) in zip(entries, _run(jobs=jobs, workers=workers)):
        conditions += [entry.replace(variant="quiet")] + rendered
    logger.info(msg=f"Built {len(conditions)} evaluation-condition utterances from {len(entries)}.")

    return conditions
