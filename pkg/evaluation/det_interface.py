"""
Module
------

    det_interface.py

Description
-----------

    This module contains the detection error trade-off (DET)
    evaluation: the false-reject proportion and the false accepts
    per hour of negative audio as the detection threshold sweeps
    over every distinct segment score, the false-reject rate at
    fixed false-accept operating points, and the scored-segment and
    curve file formats, plots and tables.

Classes
-------

    DetCurve(thresholds, fa_per_hour, fr, total_negative_hours,
             label="")

        This is the base-class object for a DET curve.

    EvalConfig()

        This is the base-class object for the evaluation attributes.

    ScoredSegment(id, score, label, duration_s=0.0, variant="clean")

        This is the base-class object for a scored segment.

Functions
---------

    det_by_group(segments, key="variant", negative_hours=None)

        This function computes one DET curve per segment group.

    det_curve(segments, negative_hours=None, label="")

        This function computes the DET curve of scored segments.

    fr_at_fa(curve, fa_target)

        This function returns the false-reject rate at a
        false-accept operating point.

    fr_table(curves, fa_targets)

        This function tabulates the false-reject rates of curves at
        false-accept operating points.

    plot_det(curves, path, fa_targets=None)

        This function writes the DET curves as an SVG plot.

    read_scores_csv(path)

        This function reads a scored-segment CSV file.

    to_segments(scores, score_field="normalized")

        This function converts manifest scores to scored segments.

    write_curve_csv(path, curve)

        This function writes a DET curve CSV file.

    write_scores_csv(path, segments)

        This function writes a scored-segment CSV file.

Requirements
------------

- matplotlib; https://matplotlib.org/

- numpy; https://numpy.org/

- schema; https://github.com/keleshev/schema

Author(s)
---------

    vtrigger developers; 19 October 2026

"""

# ----

# pylint: disable=too-many-locals

# ----

import csv
import os
from collections import OrderedDict
from dataclasses import asdict, dataclass
from typing import Dict, List, Optional as TOptional, Sequence, Tuple

import matplotlib
import numpy
from schema import And, Optional, Use

from ioapps.manifest_interface import BINARY_LABELS, ManifestEntry
from scorer.scorer_interface import DetectionScore
from tools.fileio_interface import fileexist, makedirs
from utils import table_interface
from utils.exceptions_interface import EvalInterfaceError
from utils.logger_interface import Logger
from utils.schema_interface import validate_schema

matplotlib.use("Agg")

import matplotlib.pyplot as plt  # pylint: disable=wrong-import-position

# ----

# Define all available module properties.
__all__ = [
    "DetCurve",
    "EvalConfig",
    "ScoredSegment",
    "det_by_group",
    "det_curve",
    "fr_at_fa",
    "fr_table",
    "plot_det",
    "read_scores_csv",
    "to_segments",
    "write_curve_csv",
    "write_scores_csv",
]

# ----

logger = Logger(caller_name=__name__)

SCORE_COLUMNS = ["id", "score", "label", "duration_s", "variant"]
CURVE_COLUMNS = ["threshold", "fa_per_hour", "fr"]
SCORE_FIELDS = ("normalized", "log_prob")

# ----


@dataclass(frozen=True)
class EvalConfig:
    """
    Description
    -----------

    This is the base-class object for the evaluation attributes;
    `score_field` selects the thresholded score (the
    length-normalized or the raw log-probability).

    """

    fa_targets: Tuple[float, ...] = (1.0, 10.0, 100.0)
    score_field: str = "normalized"
    plot: bool = True

    def to_dict(self) -> Dict:
        attrs = asdict(self)
        attrs["fa_targets"] = list(self.fa_targets)
        return attrs

    @classmethod
    def from_dict(cls, opts: Dict) -> "EvalConfig":
        """
        Description
        -----------

        This method validates the `eval` configuration section.

        Raises
        ------

        SchemaInterfaceError:

            - raised if the attributes do not satisfy the schema.

        """

        cls_schema = {
            Optional("fa_targets", default=[1.0, 10.0, 100.0]): And(
                [Use(float)], lambda x: len(x) > 0 and min(x) >= 0.0
            ),
            Optional("score_field", default="normalized"): And(str, lambda x: x in SCORE_FIELDS),
            Optional("plot", default=True): bool,
        }
        attrs = validate_schema(cls_schema=cls_schema, cls_opts=opts, section="eval")
        attrs["fa_targets"] = tuple(attrs["fa_targets"])

        return cls(**attrs)


@dataclass(frozen=True)
class ScoredSegment:
    """
    Description
    -----------

    This is the base-class object for a scored segment; negative
    segment durations add up to the negative audio hours.

    """

    id: str
    score: float
    label: str
    duration_s: float = 0.0
    variant: str = "clean"

    @property
    def is_positive(self) -> bool:
        return self.label == "positive"


@dataclass(frozen=True)
class DetCurve:
    """
    Description
    -----------

    This is the base-class object for a DET curve; the thresholds
    decrease strictly from +inf to -inf, along which the
    false-reject proportion is non-increasing and the false accepts
    per hour are non-decreasing.

    """

    thresholds: numpy.ndarray
    fa_per_hour: numpy.ndarray
    fr: numpy.ndarray
    total_negative_hours: float
    label: str = ""

    @property
    def points(self) -> List[Tuple[float, float, float]]:
        return [
            (float(threshold), float(fa), float(fr))
            for (threshold, fa, fr) in zip(self.thresholds, self.fa_per_hour, self.fr)
        ]


# ----


def _check_segments(segments: Sequence[ScoredSegment]) -> None:
    for segment in segments:
        if segment.label not in BINARY_LABELS:
            msg = f"Segment {segment.id} has an unknown label {segment.label}. Aborting!!!"
            raise EvalInterfaceError(msg=msg)
        if numpy.isnan(segment.score) or segment.score == numpy.inf:
            msg = f"Segment {segment.id} has the invalid score {segment.score}. Aborting!!!"
            raise EvalInterfaceError(msg=msg)
        if segment.duration_s < 0.0:
            msg = f"Segment {segment.id} has the negative duration {segment.duration_s}. Aborting!!!"
            raise EvalInterfaceError(msg=msg)


def det_curve(
    segments: Sequence[ScoredSegment], negative_hours: TOptional[float] = None, label: str = ""
) -> DetCurve:
    """
    Description
    -----------

    This function computes the DET curve of scored segments; a
    segment is accepted iff its score is at least the threshold, so
    that at threshold t the false-reject proportion is the fraction
    of positives scoring below t and the false accepts per hour are
    the number of negatives scoring at least t divided by the
    negative hours. The thresholds are +inf, every distinct score in
    decreasing order and -inf.

    Parameters
    ----------

    segments: ``Sequence[ScoredSegment]``

        The scored segments.

    Keywords
    --------

    negative_hours: ``float``, optional

        A Python float specifying the hours of negative audio; the
        sum of the negative segment durations if NoneType.

    label: ``str``, optional

        A Python string specifying the curve label.

    Returns
    -------

    curve: ``DetCurve``

        A Python DetCurve object.

    Raises
    ------

    EvalInterfaceError:

        - raised if there are no positive or no negative segments,
          a segment is invalid or the negative hours are not
          positive.

    """

    _check_segments(segments=segments)
    positives = numpy.sort([segment.score for segment in segments if segment.is_positive])
    negatives = numpy.sort([segment.score for segment in segments if not segment.is_positive])
    if positives.size == 0 or negatives.size == 0:
        msg = (
            f"A DET curve requires positive and negative segments; received {positives.size} "
            f"positive and {negatives.size} negative. Aborting!!!"
        )
        raise EvalInterfaceError(msg=msg)
    if negative_hours is None:
        negative_hours = sum(segment.duration_s for segment in segments if not segment.is_positive) / 3600.0
    if not negative_hours > 0.0:
        msg = f"The negative audio duration {negative_hours} h must be positive. Aborting!!!"
        raise EvalInterfaceError(msg=msg)
    distinct = numpy.unique(numpy.concatenate([positives, negatives]))[::-1]
    thresholds = numpy.concatenate([[numpy.inf], distinct])
    if thresholds[-1] != -numpy.inf:
        thresholds = numpy.append(thresholds, -numpy.inf)
    fr = numpy.searchsorted(positives, thresholds, side="left") / float(positives.size)
    fa_count = negatives.size - numpy.searchsorted(negatives, thresholds, side="left")

    return DetCurve(
        thresholds=thresholds,
        fa_per_hour=fa_count / negative_hours,
        fr=fr,
        total_negative_hours=float(negative_hours),
        label=label,
    )


def fr_at_fa(curve: DetCurve, fa_target: float) -> float:
    """
    Description
    -----------

    This function returns the smallest false-reject proportion among
    the curve points whose false accepts per hour do not exceed
    `fa_target` (+inf if there is none); no interpolation between
    points is performed.

    Raises
    ------

    EvalInterfaceError:

        - raised if `fa_target` is negative.

    """

    if fa_target < 0.0:
        msg = f"The false-accept target {fa_target} must be non-negative. Aborting!!!"
        raise EvalInterfaceError(msg=msg)
    mask = curve.fa_per_hour <= fa_target
    if not numpy.any(mask):
        return float("inf")

    return float(curve.fr[mask].min())


def det_by_group(
    segments: Sequence[ScoredSegment], key: str = "variant", negative_hours: TOptional[float] = None
) -> "OrderedDict[str, DetCurve]":
    """
    Description
    -----------

    This function computes one DET curve per value of the segment
    attribute `key` (e.g., the evaluation condition), in order of
    first appearance.

    """

    groups = OrderedDict()
    for segment in segments:
        groups.setdefault(str(getattr(segment, key)), []).append(segment)

    return OrderedDict(
        (name, det_curve(segments=group, negative_hours=negative_hours, label=name)) for (name, group) in groups.items()
    )


# ----


def to_segments(
    scores: Sequence[Tuple[ManifestEntry, DetectionScore]], score_field: str = "normalized"
) -> List[ScoredSegment]:
    """
    Description
    -----------

    This function converts manifest scores to scored segments.

    Raises
    ------

    EvalInterfaceError:

        - raised if an utterance carries no binary label.

    """

    segments = []
    for (entry, score) in scores:
        if entry.binary_label is None:
            msg = f"Utterance {entry.id} carries no binary label. Aborting!!!"
            raise EvalInterfaceError(msg=msg)
        value = score.length_normalized if score_field == "normalized" else score.log_prob
        segments.append(
            ScoredSegment(
                id=entry.id,
                score=float(value),
                label=entry.binary_label,
                duration_s=float(entry.duration_s or 0.0),
                variant=entry.variant,
            )
        )
    return segments


def write_scores_csv(path: str, segments: Sequence[ScoredSegment]) -> None:
    makedirs(path=os.path.dirname(os.path.abspath(path)))
    with open(path, "w", encoding="utf-8", newline="") as stream:
        writer = csv.writer(stream)
        writer.writerow(SCORE_COLUMNS)
        for segment in segments:
            writer.writerow(
                [segment.id, repr(float(segment.score)), segment.label, repr(float(segment.duration_s)), segment.variant]
            )


def read_scores_csv(path: str) -> List[ScoredSegment]:
    """
    Description
    -----------

    This function reads a scored-segment CSV file with the columns
    `id`, `score`, `label`, `duration_s` and the optional `variant`.

    Raises
    ------

    EvalInterfaceError:

        - raised if the file does not exist or a row is malformed.

    """

    if not fileexist(path=path):
        msg = f"The scored-segment file {path} does not exist. Aborting!!!"
        raise EvalInterfaceError(msg=msg)
    segments = []
    with open(path, "r", encoding="utf-8", newline="") as stream:
        reader = csv.DictReader(stream)
        missing = set(SCORE_COLUMNS[:4]) - set(reader.fieldnames or [])
        if missing:
            msg = f"The scored-segment file {path} lacks the column(s) {sorted(missing)}. Aborting!!!"
            raise EvalInterfaceError(msg=msg)
        for (lineno, row) in enumerate(reader, start=2):
            try:
                segments.append(
                    ScoredSegment(
                        id=row["id"],
                        score=float(row["score"]),
                        label=row["label"],
                        duration_s=float(row["duration_s"] or 0.0),
                        variant=row.get("variant") or "clean",
                    )
                )
            except (TypeError, ValueError) as errmsg:
                msg = f"Malformed row {lineno} of {path}: {errmsg}. Aborting!!!"
                raise EvalInterfaceError(msg=msg) from errmsg
    _check_segments(segments=segments)

    return segments


def write_curve_csv(path: str, curve: DetCurve) -> None:
    makedirs(path=os.path.dirname(os.path.abspath(path)))
    with open(path, "w", encoding="utf-8", newline="") as stream:
        writer = csv.writer(stream)
        writer.writerow(CURVE_COLUMNS)
        for (threshold, fa, fr) in curve.points:
            writer.writerow([repr(threshold), repr(fa), repr(fr)])


# ----


def plot_det(curves: Dict[str, DetCurve], path: str, fa_targets: Sequence[float] = None) -> None:
    """
    Description
    -----------

    This function writes the DET curves (false-reject proportion
    against false accepts per hour on a logarithmic axis) as an SVG
    plot; zero false-accept rates are drawn at the left edge of the
    axis and the operating points, if specified, as vertical lines.

    """

    rates = numpy.concatenate([curve.fa_per_hour for curve in curves.values()])
    positive = rates[rates > 0.0]
    floor = positive.min() / 2.0 if positive.size else 1.0e-2
    (fig, ax) = plt.subplots(figsize=(6.4, 4.8), constrained_layout=True)
    for (label, curve) in curves.items():
        ax.step(numpy.maximum(curve.fa_per_hour, floor), curve.fr, where="post", label=label)
    for target in fa_targets or []:
        if target > 0.0:
            ax.axvline(target, color="0.6", linestyle=":", linewidth=1.0)
    ax.set_xscale("log")
    ax.set_xlabel("False accepts per hour")
    ax.set_ylabel("False-reject proportion")
    ax.set_ylim(0.0, 1.0)
    ax.grid(True, which="both", alpha=0.3)
    ax.legend(loc="best", fontsize=8)
    makedirs(path=os.path.dirname(os.path.abspath(path)))
    fig.savefig(path, format="svg")
    plt.close(fig)
    logger.info(msg=f"Wrote DET plot {path}.")


def fr_table(curves: Dict[str, DetCurve], fa_targets: Sequence[float]) -> str:
    """
    Description
    -----------

    This function tabulates, for each curve, the false-reject
    proportion at each false-accept operating point.

    """

    table_obj = table_interface.init_table()
    table_obj.header = ["model"] + [f"FR @ {target:g} FA/h" for target in fa_targets]
    for (label, curve) in curves.items():
        table_obj.table.append([label] + [fr_at_fa(curve=curve, fa_target=target) for target in fa_targets])

    return table_interface.compose(table_obj=table_obj)
