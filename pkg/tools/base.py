"""Tool base class - ALL tools must inherit from this

CRITICAL: Tools are thin, deterministic adapters over core/. No arithmetic
lives here; tools validate, call the core, and shape a result dict.
"""

from abc import ABC, abstractmethod
from typing import Any, Dict


class Tool(ABC):
    """Base class for all tools

    Tools:
    - Have a name and description
    - Define their input schema (JSON Schema subset)
    - Execute deterministically
    - Return structured results with a "status" key:
      "success", "violation" (a verified claim failed) or "error"
    """

    @property
    @abstractmethod
    def name(self) -> str:
        """Tool name (must be unique)"""
        raise NotImplementedError

    @property
    @abstractmethod
    def description(self) -> str:
        """One-line description shown in the tools reference"""
        raise NotImplementedError

    @property
    @abstractmethod
    def schema(self) -> Dict[str, Any]:
        """JSON Schema for tool arguments

        Example:
        {
            "type": "object",
            "properties": {
                "n": {"type": "integer", "minimum": 1}
            },
            "required": ["n"]
        }
        """
        raise NotImplementedError

    @property
    def risk_level(self) -> str:
        """Risk level: 'none', 'low', 'medium'"""
        return "none"

    @property
    def side_effects(self) -> list[str]:
        """List of side effects (e.g., 'writes_file')"""
        return []

    @property
    def capability_class(self) -> str:
        """Semantic classification of what this tool does.

        MUST be one of: "actuate", "query"
        - actuate: writes output files
        - query: pure computation (default)
        """
        return "query"

    @property
    def failure_class(self) -> str:
        """Default classification of this tool's failure mode.

        MUST be one of: "environmental", "logical", "unknown"
        - environmental: filesystem or resource limits
        - logical: invalid input (NOT retryable)
        - unknown: unclassified failures

        Tools may override this per-execution by including "failure_class"
        in their result dictionary.
        """
        return "logical"

    @abstractmethod
    def execute(self, args: Dict[str, Any]) -> Dict[str, Any]:
        """Execute the tool with given arguments

        Args:
            args: Arguments matching the schema

        Returns:
            Dict with execution result. Must include "status" key.

        Raises:
            WheelError subclasses for invalid input; ToolExecutor converts them.
        """
        raise NotImplementedError

    def validate_args(self, args: Dict[str, Any]) -> bool:
        """Validate arguments against schema (basic validation)"""
        if not isinstance(args, dict):
            return False

        required = self.schema.get("required", [])
        for field in required:
            if field not in args:
                return False

        properties = self.schema.get("properties", {})
        for key, value in args.items():
            if key not in properties:
                return False
            prop = properties[key]
            expected_type = prop.get("type")
            if expected_type == "string" and not isinstance(value, str):
                return False
            elif expected_type == "integer" and (isinstance(value, bool) or not isinstance(value, int)):
                return False
            elif expected_type == "boolean" and not isinstance(value, bool):
                return False
            if "enum" in prop and value not in prop["enum"]:
                return False
            if "minimum" in prop and isinstance(value, int) and value < prop["minimum"]:
                return False

        return True

    def to_dict(self) -> Dict[str, Any]:
        """Export tool metadata"""
        return {
            "name": self.name,
            "description": self.description,
            "schema": self.schema,
            "risk_level": self.risk_level,
            "side_effects": self.side_effects,
            "capability_class": self.capability_class,
            "failure_class": self.failure_class,
        }
