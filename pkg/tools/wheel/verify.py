"""Tool: wheel.verify

Checks necessity, sufficiency, 30-window density and 96-ray coverage
against the sieve oracle up to max.

Category: query
Risk Level: none
Side Effects: none
"""

from typing import Any, Dict

from core.settings import Settings
from core.verification import verify_conclusions
from ..base import Tool


class VerifyConclusions(Tool):
    """Verify the wheel claims against the oracle"""

    @property
    def name(self) -> str:
        return "wheel.verify"

    @property
    def description(self) -> str:
        return "Verifies every prime > 5 is a candidate and every non-candidate > 5 is composite"

    @property
    def failure_class(self) -> str:
        return "environmental"  # only the sieve cap can fail here

    @property
    def schema(self) -> Dict[str, Any]:
        return {
            "type": "object",
            "properties": {
                "max": {
                    "type": "integer",
                    "minimum": 2,
                    "description": "Upper bound (inclusive)"
                }
            },
            "required": []
        }

    def execute(self, args: Dict[str, Any]) -> Dict[str, Any]:
        max_n = args.get("max", Settings.get().cli.default_verify_max)
        report = verify_conclusions(max_n)

        return {
            "status": "success" if report.ok else "violation",
            "max": max_n,
            "primes_checked": report.primes_checked,
            "necessity_violations": report.necessity_violations,
            "sufficiency_violations": report.sufficiency_violations,
            "windows_checked": report.windows_checked,
            "density_violations": report.density_violations,
            "rays_observed": report.rays_observed,
            "rays_complete": report.rays_complete,
            "missing_rays": report.missing_rays,
            "unexpected_rays": report.unexpected_rays,
            "examples": report.examples,
        }
