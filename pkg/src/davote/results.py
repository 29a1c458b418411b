"""Shared result record for all recognition routines."""

from __future__ import annotations

from dataclasses import dataclass

from .core import Labeling, PlaneLabeling

__all__ = ["RecognitionResult", "ACCEPTED", "REJECTED", "UNDECIDED", "METHODS"]

ACCEPTED = "accepted"
REJECTED = "rejected"
UNDECIDED = "undecided"

# How a verdict was reached.  "signature-matching" covers correspondence
# recognition, "lu-counting" the large-beta form regime, "plurality" the
# single-card case, "counting-intervals" the two-card case,
# "two-candidate" the p=2 reduction and "oracle" exhaustive search.
METHODS = (
    "signature-matching",
    "lu-counting",
    "plurality",
    "counting-intervals",
    "two-candidate",
    "oracle",
)


@dataclass
class RecognitionResult:
    """Outcome of a recognition attempt.

    verdict is "accepted", "rejected" or "undecided".  An accepted
    result always carries a labeling that regenerates the input exactly
    (cell equality for correspondences, cell membership for forms).  A
    rejected result carries a witness describing one reason for the
    failure; "undecided" marks inputs outside every implemented regime
    that are too large for the exhaustive oracle.
    """

    verdict: str
    method: str
    labeling: Labeling | PlaneLabeling | None = None
    witness: object | None = None

    @property
    def accepted(self) -> bool:
        return self.verdict == ACCEPTED
