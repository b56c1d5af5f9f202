from abc import ABC, abstractmethod
from typing import Dict, Any
from rich.console import Console

# diagnostics never go to stdout, reports do
stderr = Console(stderr=True, highlight=False)


class Error(Exception, ABC):
    #: process exit code the CLI uses for this family of errors
    exit_code: int = 1

    def __init__(self, **kwargs):
        self._context = kwargs
        super().__init__(self.message())

    @property
    def context(self) -> Dict[str, Any]:
        return self._context

    @abstractmethod
    def message(self) -> str:
        """One-line description of the error."""
        ...

    def display_error(self) -> None:
        """Print error to terminal."""
        stderr.print(f"[bold red]{type(self).__name__}:[/bold red] {self.message()}")


class InputError(Error):
    """Invalid input: a literal, a group, a parameter. Usage error."""
    exit_code = 2


class AlarmError(Error):
    """A mathematical guarantee did not hold. Always a bug or a bad input model."""
    exit_code = 1
