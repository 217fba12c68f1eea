"""Olson solving engines and their factory."""
from nullsolve.apps.olson.engines.base import OlsonEngine, StepObserver
from nullsolve.core.exceptions import EngineUnsupported

ENGINES = ("brute", "ppa")


class OlsonEngineFactory:
    """Factory for creating the engine named on the command line."""

    @staticmethod
    def create_engine(name: str) -> OlsonEngine:
        """Create an engine by name."""
        if name == "brute":
            from nullsolve.apps.olson.engines.brute import BruteForceEngine
            return BruteForceEngine()
        elif name == "ppa":
            from nullsolve.apps.olson.engines.ppa import PathFollowingEngine
            return PathFollowingEngine()
        raise EngineUnsupported(f"unknown engine '{name}', expected one of {', '.join(ENGINES)}")


__all__ = [
    'ENGINES',
    'OlsonEngine',
    'OlsonEngineFactory',
    'StepObserver',
]
