"""Tool: spectrum.analyze

Builds the prime/composite indicator over successive wheel candidates,
computes its power spectrum and searches it for an exact period. The
candidate gap sequence runs through the same period search as a control.

Category: query
Risk Level: low
Side Effects: writes a CSV when output is given
"""

import logging
from typing import Any, Dict, List

from core.oracle import prime_set_covering
from core.settings import Settings
from core.spectrum import (
    aperiodicity_check,
    candidate_gaps,
    dominance_ratio,
    dominant_bin,
    indicator,
    parseval_residual,
    power_spectrum,
    write_spectrum_csv,
)
from ..base import Tool


class AnalyzeSpectrum(Tool):
    """Chaoticity proxies for primes among candidates"""

    @property
    def name(self) -> str:
        return "spectrum.analyze"

    @property
    def description(self) -> str:
        return "Power spectrum and period search of the candidate primality indicator"

    @property
    def risk_level(self) -> str:
        return "low"

    @property
    def side_effects(self) -> List[str]:
        return ["writes_file"]

    @property
    def capability_class(self) -> str:
        return "actuate"

    @property
    def schema(self) -> Dict[str, Any]:
        return {
            "type": "object",
            "properties": {
                "start": {
                    "type": "integer",
                    "minimum": 1,
                    "description": "First number to scan for candidates"
                },
                "count": {
                    "type": "integer",
                    "minimum": 3,
                    "description": "Number of candidates in the indicator (3 is the least with a period to test)"
                },
                "max_period": {
                    "type": "integer",
                    "minimum": 1,
                    "description": "Largest period to test (must stay below count / 2)"
                },
                "output": {
                    "type": "string",
                    "description": "Optional CSV path for frequency_index,power rows"
                }
            },
            "required": []
        }

    def execute(self, args: Dict[str, Any]) -> Dict[str, Any]:
        cfg = Settings.get().spectrum
        start = args.get("start", 50)
        count = args.get("count", cfg.default_count)
        max_period = args.get("max_period", min(cfg.default_max_period, (count - 1) // 2))

        # count candidates span at most count // 8 + 2 whole blocks
        bound = start + 30 * (count // 8 + 2)
        oracle = None
        if bound <= Settings.get().oracle.sieve_cap:
            oracle = prime_set_covering(bound)
        else:
            logging.info(f"Indicator bound {bound} above sieve cap; using Miller-Rabin")

        seq = indicator(start, count, oracle)
        bins = power_spectrum(seq)
        residual = parseval_residual(seq, bins)
        period = aperiodicity_check(seq, max_period)
        peak = dominant_bin(bins)

        gaps = candidate_gaps(start, count)
        gap_period = aperiodicity_check(gaps, max_period) if max_period >= 8 else None

        result: Dict[str, Any] = {
            "status": "success",
            "start": start,
            "count": count,
            "max_period": max_period,
            "primes": sum(seq.values),
            "composites": len(seq) - sum(seq.values),
            "first_candidate": seq.candidates[0],
            "last_candidate": seq.candidates[-1],
            "parseval_residual": residual,
            "parseval_ok": residual <= cfg.parseval_tolerance,
            "dominance_ratio": dominance_ratio(bins),
            "dominant_frequency": peak.frequency_index if peak else None,
            "period": period,
            "aperiodic": period is None,
            "gap_control_period": gap_period,
        }

        if "output" in args:
            result["rows_written"] = write_spectrum_csv(bins, args["output"])
            result["output"] = args["output"]

        if not result["parseval_ok"]:
            result["status"] = "violation"
        return result
