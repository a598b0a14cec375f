"""
Orchestrator Module
Command-line front end, command dispatch, result formatting and corpus batch runs
"""

from src.orchestrator.batch_orchestrator import BatchOrchestrator
from src.orchestrator.command_runner import CommandRunner, run

__all__ = ["BatchOrchestrator", "CommandRunner", "run"]
