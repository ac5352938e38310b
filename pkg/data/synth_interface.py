"""
Module
------

    synth_interface.py

Description
-----------

    This module contains the synthetic corpus generator: desk-scale
    stand-ins for the large phonetic (transcribed) dataset, the small
    trigger-phrase discriminative dataset and a labelled test set of
    positive segments and confusable or random negative segments.

    Each phone is rendered either as a noisy template feature vector
    (`features`) or as a noisy harmonic tone pair (`audio`) held for
    3-8 frames; phones are generated in partner pairs whose templates
    (tones) are close, so that a negative one substitution away from
    the keyword is acoustically confusable with it.

Classes
-------

    SynthSpec()

        This is the base-class object for the corpus attributes.

    SyntheticCorpus(phonetic, discriminative, test, manifests)

        This is the base-class object for the generated manifests.

Functions
---------

    confusable(rng, keyword, n_phones, distance, partner_bias=0.7)

        This function returns a phone sequence at a given edit
        distance from the keyword.

    contains(phones, keyword)

        This function returns whether a phone sequence holds the
        keyword as a contiguous subsequence.

    edit_distance(first, second)

        This function returns the Levenshtein distance between two
        phone sequences.

    generate_synthetic_corpus(spec, frontend_cfg, out_dir)

        This function generates and writes the three corpus
        manifests.

    partner(phone, n_phones)

        This function returns the acoustically close partner of a
        phone.

Requirements
------------

- numpy; https://numpy.org/

- schema; https://github.com/keleshev/schema

Author(s)
---------

    vtrigger developers; 19 October 2026

"""

# ----

# pylint: disable=too-many-arguments
# pylint: disable=too-many-instance-attributes
# pylint: disable=too-many-locals

# ----

import os
from dataclasses import asdict, dataclass
from typing import Dict, List, Sequence, Tuple

import numpy
from schema import And, Optional, Use

from frontend.mel_interface import AudioClip, FeatureSequence, FrontendConfig
from ioapps.audio_interface import write_wav
from ioapps.features_interface import write_features
from ioapps.manifest_interface import ManifestEntry, write_manifest
from tools.fileio_interface import makedirs
from tools.random_interface import stage_rng
from utils.exceptions_interface import ConfigError, DataInterfaceError
from utils.logger_interface import Logger
from utils.schema_interface import positive, validate_schema

# ----

# Define all available module properties.
__all__ = [
    "RENDER_MODES",
    "SynthSpec",
    "SyntheticCorpus",
    "confusable",
    "contains",
    "edit_distance",
    "generate_synthetic_corpus",
    "partner",
]

# ----

logger = Logger(caller_name=__name__)

RENDER_MODES = ("features", "audio")

# Minimum phonetic-to-discriminative size ratio.
MIN_SIZE_RATIO = 20

MAX_DRAWS = 1000

# ----


@dataclass(frozen=True)
class SynthSpec:
    """
    Description
    -----------

    This is the base-class object for the corpus attributes; phone
    indices run from 1 to `n_phones` (index 0 is the CTC blank) and
    the keyword is a sequence of phone indices.

    """

    n_phones: int = 10
    keyword: Tuple[int, ...] = (1, 3, 5, 7)
    num_phonetic: int = 2000
    num_positive: int = 50
    num_negative: int = 50
    num_test_positive: int = 100
    num_test_negative: int = 200
    confusable_fraction: float = 0.5
    phones_per_utterance: Tuple[int, int] = (3, 8)
    phone_frames: Tuple[int, int] = (3, 8)
    context_phones: int = 1
    noise: float = 0.5
    partner_distance: float = 0.6
    render: str = "features"
    seed: int = 0

    @property
    def num_discriminative(self) -> int:
        return self.num_positive + self.num_negative

    def to_dict(self) -> Dict:
        attrs = asdict(self)
        for key in ("keyword", "phones_per_utterance", "phone_frames"):
            attrs[key] = list(attrs[key])
        return attrs

    def validate(self) -> None:
        """
        Description
        -----------

        This method checks the corpus attributes.

        Raises
        ------

        ConfigError:

            - raised if the keyword is not expressible with the phone
              inventory, contains adjacent repeated phones or the
              discriminative set is not at least 20 times smaller
              than the phonetic set.

        """

        if not self.keyword or any(not 1 <= phone <= self.n_phones for phone in self.keyword):
            msg = (
                f"The keyword {list(self.keyword)} is not expressible with the phone "
                f"indices 1 to {self.n_phones}. Aborting!!!"
            )
            raise ConfigError(msg=msg)
        if any(first == second for (first, second) in zip(self.keyword, self.keyword[1:])):
            msg = f"The keyword {list(self.keyword)} contains adjacent repeated phones. Aborting!!!"
            raise ConfigError(msg=msg)
        if self.num_phonetic < MIN_SIZE_RATIO * self.num_discriminative:
            msg = (
                f"The discriminative set ({self.num_discriminative} utterances) must be at least "
                f"{MIN_SIZE_RATIO} times smaller than the phonetic set ({self.num_phonetic}). Aborting!!!"
            )
            raise ConfigError(msg=msg)
        if self.render not in RENDER_MODES:
            msg = f"The render mode {self.render} is not one of {RENDER_MODES}. Aborting!!!"
            raise ConfigError(msg=msg)

    @classmethod
    def from_dict(cls, opts: Dict, keyword: Sequence[int] = None) -> "SynthSpec":
        """
        Description
        -----------

        This method validates the `synth` configuration section; a
        `keyword` specified upon entry (e.g., from the `keyword`
        section) replaces the section value.

        Raises
        ------

        ConfigError:

            - raised if the attributes are not consistent; see
              `validate`.

        SchemaInterfaceError:

            - raised if the attributes do not satisfy the schema.

        """

        def _span(lower_bound: int) -> And:
            return And([Use(int)], lambda x: len(x) == 2 and lower_bound <= x[0] <= x[1])

        cls_schema = {
            Optional("n_phones", default=10): And(Use(int), lambda x: x >= 2),
            Optional("keyword", default=[1, 3, 5, 7]): [Use(int)],
            Optional("num_phonetic", default=2000): positive(int),
            Optional("num_positive", default=50): positive(int),
            Optional("num_negative", default=50): positive(int),
            Optional("num_test_positive", default=100): positive(int),
            Optional("num_test_negative", default=200): positive(int),
            Optional("confusable_fraction", default=0.5): And(Use(float), lambda x: 0.0 <= x <= 1.0),
            Optional("phones_per_utterance", default=[3, 8]): _span(lower_bound=1),
            Optional("phone_frames", default=[3, 8]): _span(lower_bound=1),
            Optional("context_phones", default=1): And(Use(int), lambda x: x >= 0),
            Optional("noise", default=0.5): And(Use(float), lambda x: x >= 0.0),
            Optional("partner_distance", default=0.6): And(Use(float), lambda x: x >= 0.0),
            Optional("render", default="features"): And(str, lambda x: x in RENDER_MODES),
            Optional("seed", default=0): And(Use(int), lambda x: x >= 0),
        }
        attrs = validate_schema(cls_schema=cls_schema, cls_opts=opts, section="synth")
        if keyword is not None:
            attrs["keyword"] = list(keyword)
        for key in ("keyword", "phones_per_utterance", "phone_frames"):
            attrs[key] = tuple(attrs[key])
        spec = cls(**attrs)
        spec.validate()

        return spec


@dataclass
class SyntheticCorpus:
    """
    Description
    -----------

    This is the base-class object for the generated manifests;
    `manifests` maps `phonetic`, `discriminative` and `test` to the
    written manifest paths.

    """

    phonetic: List[ManifestEntry]
    discriminative: List[ManifestEntry]
    test: List[ManifestEntry]
    manifests: Dict[str, str]


# ----


def edit_distance(first: Sequence[int], second: Sequence[int]) -> int:
    """
    Description
    -----------

    This function returns the Levenshtein (insertion, deletion and
    substitution) distance between two phone sequences.

    """

    row = numpy.arange(len(second) + 1)
    for (idx, phone) in enumerate(first, start=1):
        prev = row.copy()
        row[0] = idx
        for (jdx, other) in enumerate(second, start=1):
            row[jdx] = min(prev[jdx] + 1, row[jdx - 1] + 1, prev[jdx - 1] + (phone != other))
    return int(row[-1])


def contains(phones: Sequence[int], keyword: Sequence[int]) -> bool:
    width = len(keyword)
    return any(tuple(phones[idx : idx + width]) == tuple(keyword) for idx in range(len(phones) - width + 1))


def partner(phone: int, n_phones: int) -> int:
    """
    Description
    -----------

    This function returns the partner of a phone: phones are paired
    as (1, 2), (3, 4), ...; an unpaired last phone is its own
    partner.

    """

    mate = phone + 1 if phone % 2 == 1 else phone - 1
    return mate if mate <= n_phones else phone


def _repeats(phones: Sequence[int]) -> bool:
    return any(first == second for (first, second) in zip(phones, phones[1:]))


def _random_phones(rng: numpy.random.Generator, n_phones: int, length: int, previous: int = 0) -> List[int]:
    phones = []
    for _ in range(length):
        choices = [phone for phone in range(1, n_phones + 1) if phone != (phones[-1] if phones else previous)]
        phones.append(int(rng.choice(choices)))
    return phones


def confusable(
    rng: numpy.random.Generator,
    keyword: Sequence[int],
    n_phones: int,
    distance: int,
    partner_bias: float = 0.7,
) -> List[int]:
    """
    Description
    -----------

    This function returns a phone sequence at exactly `distance`
    edits from the keyword, without adjacent repeated phones;
    substitutions favour the partner phone (probability
    `partner_bias`) so that the result is acoustically close.

    Raises
    ------

    DataInterfaceError:

        - raised if no such sequence is found.

    """

    for _ in range(MAX_DRAWS):
        phones = list(keyword)
        for _ in range(distance):
            edit = rng.choice(["substitute", "insert", "delete"], p=[0.6, 0.2, 0.2])
            if edit == "delete" and len(phones) > 1:
                del phones[int(rng.integers(len(phones)))]
            elif edit == "insert":
                phones.insert(int(rng.integers(len(phones) + 1)), int(rng.integers(1, n_phones + 1)))
            else:
                idx = int(rng.integers(len(phones)))
                mate = partner(phones[idx], n_phones)
                if mate != phones[idx] and rng.uniform() < partner_bias:
                    phones[idx] = mate
                else:
                    phones[idx] = int(rng.integers(1, n_phones + 1))
        if not _repeats(phones) and edit_distance(phones, keyword) == distance:
            return phones
    msg = f"Unable to draw a phone sequence {distance} edits from the keyword {list(keyword)}. Aborting!!!"
    raise DataInterfaceError(msg=msg)


def _with_context(rng: numpy.random.Generator, phones: List[int], spec: SynthSpec) -> List[int]:
    """
    Description
    -----------

    This function surrounds a phone sequence with up to
    `spec.context_phones` random phones on each side.

    """

    left = _random_phones(rng, spec.n_phones, int(rng.integers(spec.context_phones + 1)))
    right = _random_phones(rng, spec.n_phones, int(rng.integers(spec.context_phones + 1)), previous=phones[-1])
    if left and left[-1] == phones[0]:
        left = left[:-1]
    return left + list(phones) + right


def _negative(rng: numpy.random.Generator, spec: SynthSpec) -> Tuple[List[int], Dict]:
    """
    Description
    -----------

    This function draws a negative phone sequence (a confusable with
    probability `spec.confusable_fraction`, otherwise a random
    sequence at least 3 edits from the keyword) and its provenance.

    """

    for _ in range(MAX_DRAWS):
        if rng.uniform() < spec.confusable_fraction:
            distance = int(rng.integers(1, 3))
            core = confusable(rng=rng, keyword=spec.keyword, n_phones=spec.n_phones, distance=distance)
            kind = "confusable"
        else:
            length = max(1, len(spec.keyword) + int(rng.integers(-1, 2)))
            core = _random_phones(rng, spec.n_phones, length)
            (distance, kind) = (edit_distance(core, spec.keyword), "random")
            if distance < 3:
                continue
        phones = _with_context(rng=rng, phones=core, spec=spec)
        if not contains(phones, spec.keyword):
            return (phones, {"kind": kind, "edit_distance": distance, "phones": phones})
    msg = "Unable to draw a negative phone sequence without the keyword. Aborting!!!"
    raise DataInterfaceError(msg=msg)


# ----


class _Renderer:
    """
    Description
    -----------

    This is the base-class object for the phone renderer; it holds
    the phone templates (features) or tone frequencies (audio).

    """

    def __init__(self, spec: SynthSpec, frontend_cfg: FrontendConfig, out_dir: str):
        """
        Description
        -----------

        Creates a new _Renderer object.

        """

        # Define the base-class attributes.
        self.spec = spec
        self.frontend_cfg = frontend_cfg
        self.out_dir = out_dir
        rng = stage_rng(root_seed=spec.seed, stage="synth.templates")
        dim = frontend_cfg.n_mels
        templates = numpy.zeros((spec.n_phones + 1, dim))
        tones = numpy.zeros((spec.n_phones + 1, 2))
        for phone in range(1, spec.n_phones + 1, 2):
            base = rng.standard_normal(dim)
            (low, high) = (rng.uniform(200.0, 1000.0), rng.uniform(1200.0, 3000.0))
            for mate in sorted({phone, partner(phone, spec.n_phones)}):
                templates[mate] = base + spec.partner_distance * rng.standard_normal(dim)
                tones[mate] = (low, high) + spec.partner_distance * 100.0 * rng.standard_normal(2)
        # Row 0 holds the silence template.
        templates[0] = -2.0
        self.templates = templates
        self.tones = tones

    def durations(self, rng: numpy.random.Generator, phones: Sequence[int]) -> List[int]:
        (low, high) = self.spec.phone_frames
        return [int(rng.integers(low, high + 1)) for _ in phones]

    def render(self, rng: numpy.random.Generator, uid: str, phones: Sequence[int]) -> Tuple[Dict, float]:
        """
        Description
        -----------

        This method renders an utterance (1-3 silence frames on each
        side of the phones) and returns the manifest path attributes
        and the duration in seconds.

        """

        segments = [(0, int(rng.integers(1, 4)))]
        segments += list(zip(phones, self.durations(rng=rng, phones=phones)))
        segments += [(0, int(rng.integers(1, 4)))]
        nframes = sum(frames for (_, frames) in segments)
        fps = self.frontend_cfg.frame_rate_fps
        if self.spec.render == "features":
            frames = numpy.concatenate([numpy.repeat(self.templates[phone][None], count, 0) for (phone, count) in segments])
            frames = frames + self.spec.noise * rng.standard_normal(frames.shape)
            path = os.path.join(self.out_dir, "features", f"{uid}.vtf")
            write_features(path=path, feats=FeatureSequence(frames=frames.astype(numpy.float32), frame_rate_fps=fps))
            return ({"feature_path": path}, nframes / fps)
        rate = self.frontend_cfg.sample_rate_hz
        shift = self.frontend_cfg.frame_shift
        pieces = []
        for (phone, count) in segments:
            time = numpy.arange(count * shift) / float(rate)
            if phone == 0:
                pieces.append(numpy.zeros(time.size))
                continue
            (low, high) = self.tones[phone]
            pieces.append(0.3 * numpy.sin(2.0 * numpy.pi * low * time) + 0.15 * numpy.sin(2.0 * numpy.pi * high * time))
        tail = numpy.zeros(self.frontend_cfg.frame_length - shift)
        samples = numpy.concatenate(pieces + [tail])
        samples = samples + 0.05 * self.spec.noise * rng.standard_normal(samples.size)
        path = os.path.join(self.out_dir, "audio", f"{uid}.wav")
        write_wav(path=path, clip=AudioClip(samples=samples, sample_rate_hz=rate))

        return ({"audio_path": path}, samples.size / float(rate))


def _phonetic_set(rng: numpy.random.Generator, spec: SynthSpec, renderer: _Renderer) -> List[ManifestEntry]:
    (low, high) = spec.phones_per_utterance
    entries = []
    for idx in range(spec.num_phonetic):
        uid = f"phn-{idx:06d}"
        phones = _random_phones(rng, spec.n_phones, int(rng.integers(low, high + 1)))
        (paths, duration) = renderer.render(rng=rng, uid=uid, phones=phones)
        entries.append(ManifestEntry(id=uid, transcript=phones, duration_s=duration, **paths))
    return entries


def _labelled_set(
    rng: numpy.random.Generator,
    spec: SynthSpec,
    renderer: _Renderer,
    prefix: str,
    num_positive: int,
    num_negative: int,
) -> List[ManifestEntry]:
    labels = ["positive"] * num_positive + ["negative"] * num_negative
    entries = []
    for (idx, label) in enumerate(labels):
        uid = f"{prefix}-{idx:06d}"
        if label == "positive":
            phones = _with_context(rng=rng, phones=list(spec.keyword), spec=spec)
            provenance = {"kind": "keyword", "edit_distance": 0, "phones": phones}
        else:
            (phones, provenance) = _negative(rng=rng, spec=spec)
        (paths, duration) = renderer.render(rng=rng, uid=uid, phones=phones)
        entries.append(
            ManifestEntry(id=uid, binary_label=label, provenance=provenance, duration_s=duration, **paths)
        )
    return entries


def generate_synthetic_corpus(spec: SynthSpec, frontend_cfg: FrontendConfig, out_dir: str) -> SyntheticCorpus:
    """
    Description
    -----------

    This function generates the synthetic corpus: a phonetic set of
    random phone strings with phone transcripts, a discriminative
    set of positives (the keyword with optional context phones) and
    negatives (confusables 1-2 edits from the keyword or random
    strings) with binary labels, and a test set drawn like the
    discriminative set whose entries carry their durations. The
    three sets have disjoint ids and the manifests are written to
    `out_dir` as `phonetic.jsonl`, `discriminative.jsonl` and
    `test.jsonl`.

    Parameters
    ----------

    spec: ``SynthSpec``

        A Python SynthSpec object.

    frontend_cfg: ``FrontendConfig``

        A Python FrontendConfig object; defines the feature
        dimension, frame rate and sample rate.

    out_dir: ``str``

        A Python string specifying the output directory.

    Returns
    -------

    corpus: ``SyntheticCorpus``

        A Python SyntheticCorpus object.

    Raises
    ------

    ConfigError:

        - raised if the corpus attributes are not valid.

    """

    spec.validate()
    makedirs(path=out_dir)
    renderer = _Renderer(spec=spec, frontend_cfg=frontend_cfg, out_dir=out_dir)
    phonetic = _phonetic_set(rng=stage_rng(spec.seed, "synth.phonetic"), spec=spec, renderer=renderer)
    discriminative = _labelled_set(
        rng=stage_rng(spec.seed, "synth.discriminative"),
        spec=spec,
        renderer=renderer,
        prefix="dsc",
        num_positive=spec.num_positive,
        num_negative=spec.num_negative,
    )
    test = _labelled_set(
        rng=stage_rng(spec.seed, "synth.test"),
        spec=spec,
        renderer=renderer,
        prefix="tst",
        num_positive=spec.num_test_positive,
        num_negative=spec.num_test_negative,
    )
    manifests = {}
    for (name, entries) in (("phonetic", phonetic), ("discriminative", discriminative), ("test", test)):
        manifests[name] = os.path.join(out_dir, f"{name}.jsonl")
        write_manifest(path=manifests[name], entries=entries)
    logger.info(
        msg=(
            f"Generated {len(phonetic)} phonetic, {len(discriminative)} discriminative and "
            f"{len(test)} test utterances ({spec.render}) under {out_dir}."
        )
    )

    return SyntheticCorpus(phonetic=phonetic, discriminative=discriminative, test=test, manifests=manifests)
