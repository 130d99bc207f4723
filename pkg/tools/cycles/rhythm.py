"""Tool: cycles.rhythm

Verifies the composite-parcel rhythm 3-5-1-5-3-1-3-1 and the candidate
rhythm 1-2-1-2-2 over blocks 0..blocks.

Category: query
Risk Level: none
Side Effects: none
"""

from typing import Any, Dict

from core.cyclicity import CANONICAL_GROUPS, CANONICAL_PARCELS, build_block, verify_rhythm
from ..base import Tool


class VerifyRhythm(Tool):
    """Check the cycle-block rhythms"""

    @property
    def name(self) -> str:
        return "cycles.rhythm"

    @property
    def description(self) -> str:
        return "Checks blocks 50+30b for the 3-5-1-5-3-1-3-1 and 1-2-1-2-2 rhythms"

    @property
    def schema(self) -> Dict[str, Any]:
        return {
            "type": "object",
            "properties": {
                "blocks": {
                    "type": "integer",
                    "minimum": 0,
                    "description": "Last block index to check (inclusive)"
                }
            },
            "required": []
        }

    def execute(self, args: Dict[str, Any]) -> Dict[str, Any]:
        max_block = args.get("blocks", 1000)
        report = verify_rhythm(max_block)
        first = build_block(0)

        violation = None
        if report.first_violation is not None:
            violation = {
                "block_index": report.first_violation.block_index,
                "parcels": list(report.first_violation.parcels),
                "candidate_groups": list(report.first_violation.candidate_groups),
            }

        return {
            "status": "success" if report.ok else "violation",
            "canonical_parcels": list(CANONICAL_PARCELS),
            "canonical_groups": list(CANONICAL_GROUPS),
            "example_block": {
                "start": first.start,
                "end": first.end,
                "candidates": list(first.candidates),
            },
            "blocks_checked": report.blocks_checked,
            "first_violation": violation,
        }
