"""Tool Executor - Executes tools deterministically

NO retries. NO recursion. Just execution.

Every outcome is a dict with a "status" key. Core exceptions never escape:
they are classified into failure_class the same way file tools classify
OSError (environmental vs logical).
"""

import logging
import time
from typing import Any, Dict

from core.exceptions import OutputWriteError, ResourceRefusedError, WheelError
from tools.registry import get_registry


class ToolExecutor:
    """Executes one tool per call."""

    def __init__(self):
        self.registry = get_registry()
        logging.debug("ToolExecutor initialized")

    def execute_tool(self, tool_name: str, args: Dict[str, Any]) -> Dict[str, Any]:
        """Validate args, run the tool, classify failures.

        Args:
            tool_name: Name of tool
            args: Tool arguments

        Returns:
            Tool result dict, or {"status": "error", "error": ..., "failure_class": ...}
        """
        tool = self.registry.get(tool_name)
        if not tool:
            return {
                "status": "error",
                "error": f"Tool '{tool_name}' not found",
                "failure_class": "logical",
            }

        # Work on a shallow copy to preserve immutability of caller-provided dicts.
        local_args = dict(args)

        if not tool.validate_args(local_args):
            return {
                "status": "error",
                "error": f"Invalid arguments for tool '{tool_name}': {sorted(local_args)}",
                "failure_class": "logical",
            }

        logging.info(f"Executing {tool_name} with {local_args}")
        started = time.perf_counter()
        try:
            result = tool.execute(local_args)
        except (OutputWriteError, ResourceRefusedError) as e:
            logging.error(f"{tool_name} failed: {e}")
            return {"status": "error", "error": str(e), "failure_class": "environmental"}
        except WheelError as e:
            logging.error(f"{tool_name} rejected input: {e}")
            return {"status": "error", "error": str(e), "failure_class": "logical"}
        except OSError as e:
            logging.error(f"{tool_name} failed: {e}")
            return {"status": "error", "error": str(e), "failure_class": "environmental"}

        elapsed = time.perf_counter() - started
        logging.info(f"{tool_name} finished in {elapsed:.3f}s with status={result.get('status')}")

        if "status" not in result:
            logging.error(f"{tool_name} returned a result without status")
            return {"status": "error", "error": f"{tool_name} returned no status", "failure_class": "unknown"}
        return result
