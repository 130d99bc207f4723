"""Tool: plot.render

Renders one figure to an explicit destination:
- rays: every n <= max on its polar placement (SVG)
- cycle: number strip from start with wheel verdict markers (SVG)
- primes: the same strip keeping only primes, twins linked (SVG)
- points: n,x,y,ray_degree,kind rows for start..max (CSV)

Category: actuate
Risk Level: low
Side Effects: writes_file
"""

from typing import Any, Dict, List

from core.oracle import prime_set_covering
from core.plotting import PlotConfig, render_cycle_strip, render_rays, write_points_csv, write_svg
from ..base import Tool

KINDS = ["rays", "cycle", "primes", "points"]


class RenderPlot(Tool):
    """Write a wheel figure"""

    @property
    def name(self) -> str:
        return "plot.render"

    @property
    def description(self) -> str:
        return "Renders the ray, cycle-strip or primes-strip SVG, or dumps polar points as CSV"

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
    def failure_class(self) -> str:
        return "environmental"

    @property
    def schema(self) -> Dict[str, Any]:
        return {
            "type": "object",
            "properties": {
                "kind": {
                    "type": "string",
                    "enum": KINDS,
                    "description": "Figure to produce"
                },
                "max": {
                    "type": "integer",
                    "minimum": 1,
                    "description": "Largest n (rays, points)"
                },
                "start": {
                    "type": "integer",
                    "minimum": 1,
                    "description": "First n (cycle, primes, points)"
                },
                "count": {
                    "type": "integer",
                    "minimum": 1,
                    "description": "Numbers on the strip (cycle, primes)"
                },
                "width": {
                    "type": "integer",
                    "description": "Viewport width in px (rays)"
                },
                "height": {
                    "type": "integer",
                    "description": "Viewport height in px (rays)"
                },
                "output": {
                    "type": "string",
                    "description": "Destination file"
                }
            },
            "required": ["kind", "output"]
        }

    def execute(self, args: Dict[str, Any]) -> Dict[str, Any]:
        kind = args["kind"]
        output = args["output"]

        if kind == "points":
            start = args.get("start", 1)
            max_n = args.get("max", 360)
            rows = write_points_csv(max_n, output, start=start)
            return {"status": "success", "kind": kind, "output": output, "rows_written": rows}

        if kind == "rays":
            max_n = args.get("max", 3600)
            config = PlotConfig.from_settings(max_n, args.get("width"), args.get("height"))
            document = render_rays(config, prime_set_covering(max_n))
            write_svg(document, output)
            return {
                "status": "success",
                "kind": kind,
                "output": output,
                "points": max_n,
                "width": config.width_px,
                "height": config.height_px,
            }

        start = args.get("start", 50)
        count = args.get("count", 60)
        last = start + count - 1
        config = PlotConfig.from_settings(last)
        document = render_cycle_strip(
            start, count, prime_set_covering(last + 2), config, primes_only=(kind == "primes")
        )
        write_svg(document, output)
        return {
            "status": "success",
            "kind": kind,
            "output": output,
            "start": start,
            "count": count,
        }
