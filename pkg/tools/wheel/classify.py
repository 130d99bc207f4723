"""Tool: wheel.classify

Classifies one natural number: wheel verdict, decomposition, polar
placement, ray kind and oracle primality.

Category: query
Risk Level: none
Side Effects: none
"""

from typing import Any, Dict

from core.oracle import is_prime
from core.rays import polar_coordinates, ray_kind
from core.wheel import Candidate, CertainComposite, SpecialPrime, classify
from ..base import Tool


class ClassifyNumber(Tool):
    """Classify a number against the mod-30 wheel"""

    @property
    def name(self) -> str:
        return "wheel.classify"

    @property
    def description(self) -> str:
        return "Classifies a number as special prime, wheel candidate or certain composite"

    @property
    def schema(self) -> Dict[str, Any]:
        return {
            "type": "object",
            "properties": {
                "n": {
                    "type": "integer",
                    "description": "Natural number to classify (1 <= n < 2**64)"
                }
            },
            "required": ["n"]
        }

    def execute(self, args: Dict[str, Any]) -> Dict[str, Any]:
        n = args["n"]
        verdict = classify(n)
        point = polar_coordinates(n)
        prime = is_prime(n)

        result: Dict[str, Any] = {
            "status": "success",
            "n": n,
            "wheel_class": {"kind": verdict.kind},
            "decomposition": None,
            "polar": {"x": point.x, "y": point.y, "ray_degree": point.ray_degree},
            "ray_kind": ray_kind(n).value,
            "is_prime": prime,
        }

        if isinstance(verdict, Candidate):
            result["wheel_class"].update(pn0=verdict.pn0, multiplier=verdict.n)
            result["decomposition"] = f"({n} - {verdict.pn0}) / 30 = {verdict.n}"
            if n == 1:
                result["verdict"] = "wheel candidate; 1 is neither prime nor composite"
            elif prime:
                result["verdict"] = "wheel candidate; prime per oracle"
            else:
                result["verdict"] = "wheel candidate; composite per oracle (the wheel test is necessary, not sufficient)"
        elif isinstance(verdict, SpecialPrime):
            result["verdict"] = "special prime; 2, 3 and 5 lie off the wheel"
        elif isinstance(verdict, CertainComposite):
            result["verdict"] = (
                f"{n} - pn0 is not divisible by 30 for any base residue pn0: "
                f"definitely a composite number"
            )

        return result
