# This file is part of aerovln.stmr.
#
# SPDX-License-Identifier: GPL-3.0-or-later

"""Module for aerovln specific exceptions."""

import typing

__all__ = (
    "CannotParseError",
    "InvalidIntrinsicsError",
    "InvalidDepthError",
    "PixelOutOfBoundsError",
    "ImageShapeError",
    "NonFinitePoseError",
    "InvalidActionError",
    "DocumentParseError",
    "SceneParseError",
    "EpisodeParseError",
    "PoseOutOfBoundsError",
    "UnregisteredLabelError",
    "EmptyInstructionError",
    "UndefinedSimilarityError",
    "PerceptionBackendError",
    "PlanningBackendError",
    "WindowShapeError",
    "MatrixFormatError",
    "TemplateError",
    "ActionParseError",
    "UnparseableResponseError",
    "BackendError",
    "BackendTimeoutError",
    "BackendTransportError",
    "BackendRateLimitError",
    "BackendUnavailableError",
    "ScriptExhaustedError",
    "EmptyResultSetError",
    "RunConfigError",
    "TraceError",
)


class CannotParseError(NotImplementedError):
    def __init__(self, o, parse_type):
        super().__init__(f"Can't parse '{o}' of type '{type(o)}' to '{parse_type}'!")


class InvalidIntrinsicsError(ValueError):
    def __init__(self, fx, fy, cx, cy, width, height):
        super().__init__(
            f"Invalid camera intrinsics (fx = {fx}, fy = {fy}, cx = {cx}, "
            f"cy = {cy}, width = {width}, height = {height}). Focal lengths "
            "have to be positive and the principal point has to lie inside "
            "the image."
        )


class InvalidDepthError(ValueError):
    def __init__(self, depth):
        super().__init__(
            f"Invalid depth '{depth}': a back-projected pixel needs a finite "
            "depth > 0."
        )


class PixelOutOfBoundsError(IndexError):
    def __init__(self, u, v, width, height):
        super().__init__(
            f"Pixel (u = {u}, v = {v}) lies outside of the image with "
            f"width = {width} and height = {height}."
        )


class ImageShapeError(ValueError):
    def __init__(self, expected_shape, *found_shape_tuple):
        super().__init__(
            f"Expected images of shape {expected_shape}, but found "
            f"{', '.join(map(str, found_shape_tuple))}."
        )


class NonFinitePoseError(ValueError):
    def __init__(self, value_tuple):
        super().__init__(
            f"Found non-finite value in pose {value_tuple}. Positions and "
            "attitudes have to be finite numbers."
        )


class InvalidActionError(ValueError):
    def __init__(self, verb, degree, distance):
        super().__init__(
            f"Invalid action (verb = '{verb}', degree = {degree}, "
            f"distance = {distance}). Degree and distance have to lie inside "
            "the configured action ranges."
        )


class DocumentParseError(ValueError):
    document_name = "document"

    def __init__(
        self,
        message: str,
        line_number: typing.Optional[int] = None,
        field: typing.Optional[str] = None,
    ):
        self.message = message
        self.line_number = line_number
        self.field = field
        location_list = []
        if line_number is not None:
            location_list.append(f"line {line_number}")
        if field is not None:
            location_list.append(f"field '{field}'")
        location = f" ({', '.join(location_list)})" if location_list else ""
        super().__init__(f"Invalid {self.document_name}{location}: {message}")


class SceneParseError(DocumentParseError):
    document_name = "scene document"


class EpisodeParseError(DocumentParseError):
    document_name = "episode document"


class PoseOutOfBoundsError(ValueError):
    def __init__(self, pose, bounds):
        super().__init__(
            f"Pose '{pose}' lies outside of the scene bounds {bounds} or "
            "below the terrain."
        )


class UnregisteredLabelError(ValueError):
    def __init__(self, label, registered_label_tuple):
        super().__init__(
            f"Label '{label}' isn't registered. Known labels are "
            f"{registered_label_tuple}."
        )


class EmptyInstructionError(ValueError):
    def __init__(self):
        super().__init__("Can't process an empty instruction!")


class UndefinedSimilarityError(ValueError):
    def __init__(self, text):
        super().__init__(
            f"Similarity is undefined for text '{text}': it doesn't contain "
            "any token."
        )


class PerceptionBackendError(RuntimeError):
    def __init__(self, message: str, raw_response: typing.Optional[str] = None):
        self.raw_response = raw_response
        super().__init__(
            f"Perception backend failed: {message}"
            + (f" (raw response: '{raw_response}')" if raw_response else "")
        )


class PlanningBackendError(RuntimeError):
    def __init__(self, message: str, raw_response: typing.Optional[str] = None):
        self.raw_response = raw_response
        super().__init__(
            f"Planning backend failed: {message}"
            + (f" (raw response: '{raw_response}')" if raw_response else "")
        )


class WindowShapeError(ValueError):
    def __init__(self, shape, matrix_size):
        super().__init__(
            f"Can't pool window of shape {shape} to a {matrix_size}x"
            f"{matrix_size} matrix: the window side has to be a multiple "
            "of the matrix size."
        )


class MatrixFormatError(ValueError):
    def __init__(self, message: str):
        super().__init__(f"Invalid matrix text: {message}")


class TemplateError(KeyError):
    def __init__(self, template_name, missing_tuple, unknown_tuple=tuple([])):
        super().__init__(
            f"Template '{template_name}' doesn't match its placeholders: "
            f"missing = {missing_tuple}, unknown = {unknown_tuple}."
        )


class ActionParseError(ValueError):
    def __init__(self, text):
        super().__init__(
            f"Can't parse action from '{str(text)[:80]}': no known verb found."
        )


class UnparseableResponseError(ValueError):
    def __init__(self, raw):
        self.raw = raw
        super().__init__(
            f"Response '{str(raw)[:80]}...' doesn't contain an 'Action' block."
        )


class BackendError(RuntimeError):
    def __init__(
        self,
        message: str,
        attempt: typing.Optional[int] = None,
        max_attempts: typing.Optional[int] = None,
    ):
        self.attempt = attempt
        self.max_attempts = max_attempts
        retry_info = (
            f" (attempt {attempt}/{max_attempts})" if attempt is not None else ""
        )
        super().__init__(f"{message}{retry_info}")


class BackendTimeoutError(BackendError):
    pass


class BackendTransportError(BackendError):
    pass


class BackendRateLimitError(BackendError):
    pass


class BackendUnavailableError(BackendError):
    def __init__(self, endpoint, max_attempts, last_error=None):
        self.last_error = last_error
        super().__init__(
            f"Backend '{endpoint}' is unavailable, giving up after "
            f"{max_attempts} attempts. Last error: {last_error}",
        )
        self.max_attempts = max_attempts


class ScriptExhaustedError(BackendError):
    def __init__(self, step, script_length):
        super().__init__(
            f"Scripted backend has no response for step {step} "
            f"(script has {script_length} responses)."
        )


class EmptyResultSetError(ValueError):
    def __init__(self):
        super().__init__("Can't aggregate an empty set of episode results!")


class RunConfigError(ValueError):
    def __init__(self, key, value, reason):
        self.key = key
        super().__init__(f"Invalid value '{value}' for '{key}': {reason}")


class TraceError(IndexError):
    def __init__(self, message: str):
        super().__init__(message)
