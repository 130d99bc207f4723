"""Tool: bench.sieves

Times the odd-only sieve, the wheel-30 sieve and the bare candidate filter
over [1, limit] and reports the positions each one examines.

Category: query
Risk Level: none
Side Effects: none
"""

from typing import Any, Dict

from core.bench import WHEEL_FRACTION_BOUND, run_bench
from core.settings import Settings
from ..base import Tool


class BenchSieves(Tool):
    """Compare sieve work and timing"""

    @property
    def name(self) -> str:
        return "bench.sieves"

    @property
    def description(self) -> str:
        return "Benchmarks plain sieve, wheel sieve and candidate filter"

    @property
    def schema(self) -> Dict[str, Any]:
        return {
            "type": "object",
            "properties": {
                "limit": {
                    "type": "integer",
                    "minimum": 2,
                    "description": "Upper bound (inclusive)"
                }
            },
            "required": []
        }

    def execute(self, args: Dict[str, Any]) -> Dict[str, Any]:
        limit = args.get("limit", Settings.get().cli.default_bench_limit)
        report = run_bench(limit)

        return {
            "status": "success" if report.sieves_agree else "violation",
            "limit": limit,
            "rows": [row.to_dict() for row in report.rows],
            "sieves_agree": report.sieves_agree,
            "wheel_fraction_bound": WHEEL_FRACTION_BOUND,
            "wheel_within_bound": report.wheel_within_bound,
        }
