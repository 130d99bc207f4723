"""Tool: twins.list

Lists twin-candidate positions p = 30n + 50 + k (k = 9, 21, 27) up to max,
flags the realized twin primes, and checks that no twin prime pair falls
outside the formula.

Category: query
Risk Level: none
Side Effects: none
"""

from typing import Any, Dict

from core.oracle import prime_set_covering
from core.twins import realized_twins, twin_slots_per_block, verify_twin_necessity
from ..base import Tool


class ListTwins(Tool):
    """List twin-candidate positions"""

    @property
    def name(self) -> str:
        return "twins.list"

    @property
    def description(self) -> str:
        return "Lists twin-candidate positions and flags realized twin primes"

    @property
    def schema(self) -> Dict[str, Any]:
        return {
            "type": "object",
            "properties": {
                "max": {
                    "type": "integer",
                    "minimum": 1,
                    "description": "Largest lower member p"
                }
            },
            "required": []
        }

    def execute(self, args: Dict[str, Any]) -> Dict[str, Any]:
        max_p = args.get("max", 1000)
        oracle = prime_set_covering(max_p + 2)

        positions = [
            {"p": tc.p, "n": tc.n, "k": tc.k, "realized": realized}
            for tc, realized in realized_twins(max_p, oracle)
        ]
        necessity = verify_twin_necessity(max_p, oracle)

        return {
            "status": "success" if necessity.ok else "violation",
            "max": max_p,
            "slots_per_block": twin_slots_per_block(),
            "positions": positions,
            "realized": sum(1 for p in positions if p["realized"]),
            "pairs_checked": necessity.pairs_checked,
            "covered": necessity.covered,
            "exceptions": [[pair.p, pair.q] for pair in necessity.exceptions],
            "violations": [[pair.p, pair.q] for pair in necessity.violations],
            "uncovered": [[pair.p, pair.q] for pair in necessity.uncovered],
        }
