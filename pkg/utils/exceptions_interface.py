"""
Module
------

    exceptions_interface.py

Description
-----------

    This module loads the exceptions package; the category classes
    (ConfigError, DataError, NumericError, StateError) define the
    exit codes of the command-line drivers while the module classes
    identify the package in which a failure occurred.

Classes
-------

    ConfigError(msg)

        Invalid configuration or option values; exit code 2.

    DataError(msg)

        Unreadable, empty or inconsistent input data; exit code 3.

    EmptyInputError(msg)

        An operation received an empty input; a sub-class of
        DataError.

    NumericError(msg)

        Numerical failures (NaN losses, shape mismatches); exit code
        4.

    ShapeError(msg)

        Array dimension mismatch; a sub-class of NumericError.

    InfeasibleTargetError(msg)

        A CTC target that no alignment of the available frames can
        produce; a sub-class of NumericError.

    StateError(msg)

        An operation invoked out of order (e.g., backward before
        forward); exit code 5.

    AudioInterfaceError, AugmentInterfaceError,
    CheckpointInterfaceError, CLIInterfaceError, CTCInterfaceError,
    DataInterfaceError, DemoInterfaceError, EvalInterfaceError,
    FeaturesInterfaceError, FrontendInterfaceError, JSONInterfaceError,
    ManifestInterfaceError, NnetInterfaceError, ScorerInterfaceError,
    SchemaInterfaceError, TrainerInterfaceError, YAMLInterfaceError

        The base-classes for exceptions encountered within the
        respective modules; sub-classes of Error.

Author(s)
---------

    Henry R. Winterbottom; 28 December 2022

History
-------

    2022-12-28: Henry Winterbottom -- Initial implementation.

    2026-10-19: vtrigger developers -- Added the exit-code category
    classes and the toolkit module classes.

"""

# ----

from utils.error_interface import Error

# ----

# Define all available module properties.
__all__ = [
    "AudioInterfaceError",
    "AugmentInterfaceError",
    "CheckpointInterfaceError",
    "CLIInterfaceError",
    "ConfigError",
    "CTCInterfaceError",
    "DataError",
    "DataInterfaceError",
    "DemoInterfaceError",
    "EmptyInputError",
    "EvalInterfaceError",
    "FeaturesInterfaceError",
    "FrontendInterfaceError",
    "InfeasibleTargetError",
    "JSONInterfaceError",
    "ManifestInterfaceError",
    "NnetInterfaceError",
    "NumericError",
    "SchemaInterfaceError",
    "ScorerInterfaceError",
    "ShapeError",
    "StateError",
    "TrainerInterfaceError",
    "YAMLInterfaceError",
]

# ----


class ConfigError(Error):
    """
    Description
    -----------

    This is the base-class for invalid configuration or option
    values; it is a sub-class of Error.

    """

    exit_code = 2


# ----


class DataError(Error):
    """
    Description
    -----------

    This is the base-class for unreadable, empty or inconsistent
    input data; it is a sub-class of Error.

    """

    exit_code = 3


# ----


class EmptyInputError(DataError):
    """
    Description
    -----------

    This is the base-class for operations receiving an empty input;
    it is a sub-class of DataError.

    """


# ----


class NumericError(Error):
    """
    Description
    -----------

    This is the base-class for numerical failures; it is a sub-class
    of Error.

    """

    exit_code = 4


# ----


class ShapeError(NumericError):
    """
    Description
    -----------

    This is the base-class for array dimension mismatches; it is a
    sub-class of NumericError.

    """


# ----


class InfeasibleTargetError(NumericError):
    """
    Description
    -----------

    This is the base-class for CTC targets which cannot be aligned to
    the available frames; it is a sub-class of NumericError.

    """


# ----


class StateError(Error):
    """
    Description
    -----------

    This is the base-class for operations invoked out of order; it is
    a sub-class of Error.

    """

    exit_code = 5


# ----


class AudioInterfaceError(DataError):
    """
    Description
    -----------

    This is the base-class for exceptions encountered within the
    ioapps/audio_interface module; it is a sub-class of DataError.

    """


# ----


class AugmentInterfaceError(Error):
    """
    Description
    -----------

    This is the base-class for exceptions encountered within the
    augment/augment_interface module; it is a sub-class of Error.

    """


# ----


class CheckpointInterfaceError(DataError):
    """
    Description
    -----------

    This is the base-class for exceptions encountered within the
    ioapps/checkpoint_interface module; it is a sub-class of
    DataError.

    """


# ----


class CLIInterfaceError(ConfigError):
    """
    Description
    -----------

    This is the base-class for exceptions encountered within the
    utils/cli_interface and cli modules; it is a sub-class of
    ConfigError.

    """


# ----


class CTCInterfaceError(Error):
    """
    Description
    -----------

    This is the base-class for exceptions encountered within the
    ctc/ctc_interface module; it is a sub-class of Error.

    """


# ----


class DataInterfaceError(DataError):
    """
    Description
    -----------

    This is the base-class for exceptions encountered within the data
    package; it is a sub-class of DataError.

    """


# ----


class DemoInterfaceError(Error):
    """
    Description
    -----------

    This is the base-class for exceptions encountered within the
    cli/demo_interface module and the `demo` sub-command (e.g., a
    failed directional check); it is a sub-class of Error.

    """


# ----


class EvalInterfaceError(Error):
    """
    Description
    -----------

    This is the base-class for exceptions encountered within the
    evaluation/det_interface module; it is a sub-class of Error.

    """


# ----


class FeaturesInterfaceError(DataError):
    """
    Description
    -----------

    This is the base-class for exceptions encountered within the
    ioapps/features_interface module; it is a sub-class of
    DataError.

    """


# ----


class FrontendInterfaceError(Error):
    """
    Description
    -----------

    This is the base-class for exceptions encountered within the
    frontend package; it is a sub-class of Error.

    """


# ----


class JSONInterfaceError(DataError):
    """
    Description
    -----------

    This is the base-class for exceptions encountered within the
    confs/json_interface module; it is a sub-class of DataError.

    """


# ----


class ManifestInterfaceError(DataError):
    """
    Description
    -----------

    This is the base-class for exceptions encountered within the
    ioapps/manifest_interface module; it is a sub-class of
    DataError.

    """


# ----


class NnetInterfaceError(Error):
    """
    Description
    -----------

    This is the base-class for exceptions encountered within the nnet
    package; it is a sub-class of Error.

    """


# ----


class SchemaInterfaceError(ConfigError):
    """
    Description
    -----------

    This is the base-class for exceptions encountered within the
    utils/schema_interface module; it is a sub-class of ConfigError.

    """


# ----


class ScorerInterfaceError(Error):
    """
    Description
    -----------

    This is the base-class for exceptions encountered within the
    scorer/scorer_interface module; it is a sub-class of Error.

    """


# ----


class TrainerInterfaceError(Error):
    """
    Description
    -----------

    This is the base-class for exceptions encountered within the
    trainer package; it is a sub-class of Error.

    """


# ----


class YAMLInterfaceError(ConfigError):
    """
    Description
    -----------

    This is the base-class for exceptions encountered within the
    confs/yaml_interface module; it is a sub-class of ConfigError.

    """
