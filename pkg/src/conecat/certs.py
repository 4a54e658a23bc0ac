"""Machine-checkable verdict objects emitted by the certification routines."""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum


class Verdict(str, Enum):
    CAT_CONFIRMED = "CAT_CONFIRMED"
    NOT_CAT = "NOT_CAT"
    UNDETERMINED = "UNDETERMINED"


@dataclass
class Certificate:
    """Outcome of one certification criterion.

    A NOT_CAT verdict always carries a witness describing the offending
    object (vertex, triangle, geodesic, ...); margins record how far the
    decisive quantities sit from their thresholds.
    """

    verdict: Verdict
    criterion: str
    margins: dict = field(default_factory=dict)
    witnesses: dict = field(default_factory=dict)
    notes: list = field(default_factory=list)
    subject: str = ""

    def __post_init__(self):
        if self.verdict == Verdict.NOT_CAT and not self.witnesses:
            raise ValueError("NOT_CAT certificates must carry a witness")

    @property
    def confirmed(self) -> bool:
        return self.verdict == Verdict.CAT_CONFIRMED

    def to_dict(self) -> dict:
        return {
            "verdict": self.verdict.value,
            "criterion": self.criterion,
            "margins": dict(self.margins),
            "witnesses": dict(self.witnesses),
            "notes": list(self.notes),
            "subject": self.subject,
        }
