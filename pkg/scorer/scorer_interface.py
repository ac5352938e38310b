"""
Module
------

    scorer_interface.py

Description
-----------

    This module contains the trigger-phrase detection scores: the
    probability of the keyword phone sequence given a segment,
    computed by the forward pass of the left-to-right keyword HMM
    (the blank-interleaved CTC lattice) over a phonetic
    posteriorgram, and the probability of the single trigger-phrase
    symbol under the discriminative head.

Classes
-------

    DetectionScore(log_prob, length_normalized)

        This is the base-class object for a detection score.

    KeywordSpec(name, phone_sequence)

        This is the base-class object for a trigger phrase.

Functions
---------

    score_discriminative(posteriors)

        This function scores a discriminative posteriorgram.

    score_keyword(posteriors, keyword)

        This function scores a phonetic posteriorgram against a
        keyword.

    score_manifest(model, entries, frontend_cfg, head, keyword=None,
                   batch_size=32)

        This function scores every utterance of a manifest.

Author(s)
---------

    vtrigger developers; 19 October 2026

"""

# ----

from dataclasses import dataclass
from typing import Dict, List, Optional as TOptional, Sequence, Tuple

from ctc.ctc_interface import LabelSequence, ctc_loss
from data.batch_interface import load_batch
from frontend.mel_interface import FrontendConfig
from ioapps.manifest_interface import ManifestEntry
from nnet.head_interface import PosteriorGram
from nnet.model_interface import MtlModel
from utils.exceptions_interface import EmptyInputError, ScorerInterfaceError
from utils.logger_interface import Logger

# ----

# Define all available module properties.
__all__ = [
    "DetectionScore",
    "KeywordSpec",
    "score_discriminative",
    "score_keyword",
    "score_manifest",
]

# ----

logger = Logger(caller_name=__name__)

# ----


@dataclass(frozen=True)
class KeywordSpec:
    """
    Description
    -----------

    This is the base-class object for a trigger phrase; the phone
    sequence holds phonetic alphabet indices.

    """

    name: str
    phone_sequence: LabelSequence

    @classmethod
    def from_dict(cls, opts: Dict, alphabet: Sequence[str]) -> "KeywordSpec":
        """
        Description
        -----------

        This method builds a KeywordSpec from the `keyword`
        configuration section (`name` and `phones`); phones are given
        either as alphabet symbols (e.g., `p03`) or as indices.

        Raises
        ------

        ScorerInterfaceError:

            - raised if the phone sequence is empty or a phone is not
              a non-blank member of the alphabet.

        """

        phones = list(opts.get("phones") or [])
        if not phones:
            msg = "The keyword phone sequence is empty. Aborting!!!"
            raise ScorerInterfaceError(msg=msg)
        symbols = []
        for phone in phones:
            if isinstance(phone, str) and not phone.isdigit():
                if phone not in alphabet:
                    msg = f"The keyword phone {phone} is not in the phonetic alphabet. Aborting!!!"
                    raise ScorerInterfaceError(msg=msg)
                symbols.append(list(alphabet).index(phone))
            else:
                symbols.append(int(phone))
        keyword = cls(name=str(opts.get("name", "TriggerPhrase")), phone_sequence=LabelSequence(tuple(symbols)))
        keyword.validate(alphabet_size=len(alphabet))

        return keyword

    def validate(self, alphabet_size: int, blank: int = 0) -> None:
        if not self.phone_sequence.symbols:
            msg = f"The keyword {self.name} has an empty phone sequence. Aborting!!!"
            raise ScorerInterfaceError(msg=msg)
        for symbol in self.phone_sequence.symbols:
            if symbol == blank or not 0 <= symbol < alphabet_size:
                msg = f"The keyword {self.name} symbol {symbol} is not a non-blank alphabet index. Aborting!!!"
                raise ScorerInterfaceError(msg=msg)


@dataclass(frozen=True)
class DetectionScore:
    """
    Description
    -----------

    This is the base-class object for a detection score; `log_prob`
    is the log-probability of the trigger phrase and
    `length_normalized` is `log_prob` divided by the number of frames.

    """

    log_prob: float
    length_normalized: float


# ----


def _score(posteriors: PosteriorGram, symbols: Tuple[int, ...]) -> DetectionScore:
    if posteriors.num_frames == 0:
        msg = "Cannot score a posteriorgram without frames. Aborting!!!"
        raise EmptyInputError(msg=msg)
    result = ctc_loss(log_probs=posteriors.log_probs(), target=symbols, blank=posteriors.blank)
    log_prob = -float(result.loss)

    return DetectionScore(log_prob=log_prob, length_normalized=log_prob / posteriors.num_frames)


def score_keyword(posteriors: PosteriorGram, keyword: KeywordSpec) -> DetectionScore:
    """
    Description
    -----------

    This function scores a phonetic posteriorgram against a keyword;
    the log-probability is the negative CTC loss of the keyword phone
    sequence over the floored posteriors, and -inf when the segment
    is too short for the keyword.

    Parameters
    ----------

    posteriors: ``PosteriorGram``

        A Python PosteriorGram object over the phonetic alphabet.

    keyword: ``KeywordSpec``

        A Python KeywordSpec object.

    Returns
    -------

    score: ``DetectionScore``

        A Python DetectionScore object.

    Raises
    ------

    EmptyInputError:

        - raised if the posteriorgram has no frames.

    ScorerInterfaceError:

        - raised if the keyword is not valid for the alphabet.

    """

    keyword.validate(alphabet_size=posteriors.probs.shape[1], blank=posteriors.blank)
    return _score(posteriors=posteriors, symbols=keyword.phone_sequence.symbols)


def score_discriminative(posteriors: PosteriorGram) -> DetectionScore:
    """
    Description
    -----------

    This function scores a two-symbol discriminative posteriorgram:
    the log-probability of the single-label target (the trigger-phrase
    symbol bracketed by blanks).

    Raises
    ------

    EmptyInputError:

        - raised if the posteriorgram has no frames.

    ScorerInterfaceError:

        - raised if the posteriorgram does not hold exactly two
          symbols.

    """

    if posteriors.probs.ndim != 2 or posteriors.probs.shape[1] != 2:
        msg = f"The discriminative posteriorgram must hold two symbols; received shape {posteriors.probs.shape}. Aborting!!!"
        raise ScorerInterfaceError(msg=msg)
    trigger = 1 - posteriors.blank
    return _score(posteriors=posteriors, symbols=(trigger,))


# ----


def score_manifest(
    model: MtlModel,
    entries: Sequence[ManifestEntry],
    frontend_cfg: FrontendConfig,
    head: str,
    keyword: TOptional[KeywordSpec] = None,
    batch_size: int = 32,
) -> List[Tuple[ManifestEntry, DetectionScore]]:
    """
    Description
    -----------

    This function scores every utterance of a manifest with the named
    head; the phonetic head requires a keyword.

    Parameters
    ----------

    model: ``MtlModel``

        A Python MtlModel object.

    entries: ``Sequence[ManifestEntry]``

        The manifest utterances (segments).

    frontend_cfg: ``FrontendConfig``

        A Python FrontendConfig object.

    head: ``str``

        A Python string specifying the head (`phonetic` or
        `discriminative`).

    Keywords
    --------

    keyword: ``KeywordSpec``, optional

        A Python KeywordSpec object; required for the phonetic head.

    batch_size: ``int``, optional

        A Python integer specifying the number of utterances per
        forward pass.

    Returns
    -------

    scores: ``List[Tuple[ManifestEntry, DetectionScore]]``

        The score of each utterance in manifest order.

    Raises
    ------

    ScorerInterfaceError:

        - raised if the phonetic head is requested without a keyword.

    """

    if head == "phonetic" and keyword is None:
        msg = "Scoring with the phonetic head requires a keyword. Aborting!!!"
        raise ScorerInterfaceError(msg=msg)
    alphabet = model.head(name=head).alphabet
    scores = []
    for start in range(0, len(entries), batch_size):
        batch = load_batch(entries=entries[start : start + batch_size], frontend_cfg=frontend_cfg)
        log_probs = model.log_posteriors(name=head, inputs=batch.inputs, lengths=batch.lengths)
        for (idx, entry) in enumerate(batch.entries):
            posteriors = PosteriorGram.from_log_probs(log_probs[idx, : batch.lengths[idx]], alphabet)
            if head == "phonetic":
                score = score_keyword(posteriors=posteriors, keyword=keyword)
            else:
                score = score_discriminative(posteriors=posteriors)
            scores.append((entry, score))
    logger.info(msg=f"Scored {len(scores)} segments with the {head} head.")

    return scores
