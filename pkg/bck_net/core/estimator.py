from abc import ABC, abstractmethod
from typing import Any

__all__: list[str] = ["Estimator"]


class Estimator(ABC):
    """Abstract base class for the replicated Monte Carlo experiments.

    Each estimator is exposed as one CLI subcommand. Subclasses declare the
    run-configuration fields they read through get_default_parameters(), so
    the command line only offers flags that have an effect.
    """

    def __init__(self, name: str):
        """
        Args:
            name: Subcommand name (e.g., "density", "survival")
        """
        self.name = name

    @classmethod
    @abstractmethod
    def get_name(cls) -> str:
        """Get subcommand name"""
        pass

    @classmethod
    def get_description(cls) -> str:
        """One-line description used as CLI help."""
        doc = (cls.__doc__ or "").strip()
        return doc.splitlines()[0] if doc else cls.get_name()

    @classmethod
    def get_default_parameters(cls) -> dict[str, dict[str, Any]]:
        """Get metadata for the run-configuration fields this estimator reads.

        Returns:
            Dictionary mapping RunConfig field names to their metadata:
            {
                "field_name": {
                    "type": "float" | "int" | "float_list" | "int_list",
                    "label": "Help text",
                    "min": min_value (optional),
                }
            }
        """
        return {}

    @abstractmethod
    def run(self, config: Any, runner: Any) -> list[Any]:
        """Execute the experiment.

        Args:
            config: RunConfig with all parameters resolved
            runner: ReplicateRunner used to fan out replicates

        Returns:
            List of Estimate results, one per reported quantity
        """
        pass

    def __repr__(self) -> str:
        return f"{self.__class__.__name__}(name={self.name})"
