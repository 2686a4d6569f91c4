"""Verdict type shared by the structural checks and the claim suite."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any

HOLDS = "holds"
VACUOUS = "vacuous"
COUNTEREXAMPLE = "counterexample"


@dataclass(frozen=True)
class ClaimVerdict:
    """Outcome of checking one claim on one instance.

    ``status`` is "holds" when hypothesis and conclusion both held,
    "vacuous" when the hypothesis failed, and "counterexample" when the
    hypothesis held but the conclusion did not.  A counterexample carries a
    ``witness`` dict with enough concrete data to re-verify the violation
    without rerunning the search.
    """

    claim_id: str
    instance: dict[str, Any]
    status: str
    witness: dict[str, Any] | None = None

    def to_json(self) -> dict[str, Any]:
        out: dict[str, Any] = {
            "claim": self.claim_id,
            "instance": self.instance,
            "status": self.status,
        }
        if self.witness is not None:
            out["witness"] = self.witness
        return out
