"""Tool Auto-Discovery Loader

Recursively scans tools/ and registers every Tool subclass it finds, so a new
subcommand only needs a new module under tools/.
"""

import importlib
import inspect
import logging
from pathlib import Path
from typing import Dict, List, Optional

from .base import Tool
from .registry import get_registry


class ToolLoader:
    """Automatically discovers and registers tools from the tools/ directory"""

    EXCLUDED = {"__init__.py", "base.py", "registry.py", "loader.py"}

    def __init__(self, tools_root: Optional[Path] = None):
        """Initialize loader

        Args:
            tools_root: Root directory for tools (default: tools/ relative to this file)
        """
        if tools_root is None:
            tools_root = Path(__file__).parent
        self.tools_root = tools_root.resolve()
        self.registry = get_registry()
        logging.debug(f"ToolLoader initialized with root: {self.tools_root}")

    def discover_all(self) -> Dict[str, Tool]:
        """Discover and register all tools

        Returns:
            Dict mapping tool names to Tool instances

        Raises:
            ValueError: If duplicate tool names are found
        """
        discovered_tools: Dict[str, Tool] = {}

        tool_files = sorted(
            f for f in self.tools_root.rglob("*.py")
            if f.name not in self.EXCLUDED and not f.name.startswith("_")
        )
        logging.debug(f"Scanning {len(tool_files)} potential tool files...")

        for tool_file in tool_files:
            for tool in self._load_tools_from_file(tool_file):
                if tool.name in discovered_tools:
                    raise ValueError(
                        f"Duplicate tool name '{tool.name}' found:\n"
                        f"  - {discovered_tools[tool.name].__class__.__module__}\n"
                        f"  - {tool.__class__.__module__}"
                    )
                discovered_tools[tool.name] = tool

        for tool_name, tool in discovered_tools.items():
            if self.registry.has(tool_name):
                continue
            self.registry.register(tool)
            logging.debug(f"Registered tool: {tool_name}")

        logging.info(f"Auto-discovery complete: {len(discovered_tools)} tools")
        return discovered_tools

    def _load_tools_from_file(self, file_path: Path) -> List[Tool]:
        """Load all Tool subclasses from a Python file

        e.g. tools/wheel/classify.py -> tools.wheel.classify
        """
        tools: List[Tool] = []

        relative_path = file_path.relative_to(self.tools_root)
        module_parts = list(self.tools_root.parts[-1:]) + list(relative_path.with_suffix("").parts)
        module_name = ".".join(module_parts)

        try:
            module = importlib.import_module(module_name)
        except Exception as e:
            logging.error(f"Failed to import {module_name}: {e}")
            return tools

        for name, obj in inspect.getmembers(module, inspect.isclass):
            if not issubclass(obj, Tool) or obj is Tool or inspect.isabstract(obj):
                continue
            # Skip if imported from elsewhere
            if obj.__module__ != module_name:
                continue
            try:
                tools.append(obj())
            except Exception as e:
                logging.warning(f"Failed to instantiate {name} from {module_name}: {e}")

        return tools


def load_all_tools() -> Dict[str, Tool]:
    """Convenience function to discover and register all tools"""
    return ToolLoader().discover_all()
