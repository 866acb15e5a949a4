"""Exception taxonomy shared across the package.

Everything raised on purpose derives from SightlinesError so callers can
catch one base class at the CLI boundary. Errors that carry structured
payloads (validation reports, edge diffs) expose them as attributes.
"""

from __future__ import annotations


class SightlinesError(Exception):
    """Base class for all errors raised by this package."""


class SceneFormatError(SightlinesError):
    """Scene JSON is malformed: bad shape, bad kind, float coordinates."""


class GraphFormatError(SightlinesError):
    """Graph text input is malformed."""


class DrawingFormatError(SightlinesError):
    """Drawing JSON is malformed."""


class InvalidSceneError(SightlinesError):
    """A scene failed validation. Carries the full violation report."""

    def __init__(self, report):
        self.report = list(report)
        lines = "; ".join(str(v) for v in self.report[:4])
        more = "" if len(self.report) <= 4 else f" (+{len(self.report) - 4} more)"
        super().__init__(f"invalid scene: {lines}{more}")


class DrawingError(SightlinesError):
    """A plane drawing failed validation. Carries the violation report."""

    def __init__(self, report):
        self.report = list(report)
        lines = "; ".join(str(v) for v in self.report[:4])
        more = "" if len(self.report) <= 4 else f" (+{len(self.report) - 4} more)"
        super().__init__(f"invalid drawing: {lines}{more}")


class VerificationFailed(SightlinesError):
    """A constructed scene's visibility graph differs from the target.

    spurious: edges present in the scene but absent from the target graph.
    missing:  edges required by the target graph but absent from the scene.
    """

    def __init__(self, spurious, missing, context=""):
        self.spurious = sorted(spurious)
        self.missing = sorted(missing)
        parts = []
        if self.spurious:
            parts.append("spurious=" + ",".join(f"{a}-{b}" for a, b in self.spurious))
        if self.missing:
            parts.append("missing=" + ",".join(f"{a}-{b}" for a, b in self.missing))
        msg = "constructed scene does not realize the target graph: " + " ".join(parts)
        if context:
            msg += f" [{context}]"
        super().__init__(msg)


class GenerationExhausted(SightlinesError):
    """Random scene generation ran out of rejection-sampling budget."""


class UnsupportedGraphError(SightlinesError):
    """The requested construction does not apply to this graph."""


class NotATreeError(UnsupportedGraphError):
    """Input graph is not a tree."""


class DisconnectedInputError(UnsupportedGraphError):
    """Operation requires a connected graph."""


class NameMismatchError(SightlinesError):
    """Scene region names and graph vertex names disagree."""


class UnknownRegionError(SightlinesError):
    """A named region does not exist in the scene."""


class EndpointNotInRegionError(SightlinesError):
    """A claimed witness endpoint lies outside its region."""
