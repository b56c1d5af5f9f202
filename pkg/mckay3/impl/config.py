import os
from enum import Enum
from pathlib import Path
from typing import Optional
import yaml
from pydantic import BaseModel, Field, ValidationError, Extra, validator
from mckay3.impl.types.validators import GroupLiteral
from mckay3.utils.errors import InputError

CONFIG_ENV = "MCKAY3_CONFIG"
THREADS_ENV = "MCKAY3_THREADS"

DEFAULT_CONFIG = """\
# defaults for every subcommand; command-line flags take precedence
format: text
seed: 0
samples: 100
solver:
  tol: 1.0e-10
  max_iter: 500
  divergence_bound: 50.0
  backtrack: 0.5
"""


class ConfigError(InputError):
    def message(self) -> str:
        return f"invalid configuration ({self.context['source']}): {self.context['reason']}"


def _first_error(e: ValidationError) -> str:
    first = e.errors()[0]
    return ".".join(str(p) for p in first["loc"]) + ": " + first["msg"]


class OutputFormat(str, Enum):
    json = "json"
    csv = "csv"
    text = "text"


class SolverConfig(BaseModel):
    tol: float = 1e-10
    max_iter: int = 500
    divergence_bound: float = 50.0
    backtrack: float = 0.5
    armijo: float = 1e-4
    record_history: bool = False

    @validator("tol", "divergence_bound")
    def positive(cls, v, field):
        if not v > 0:
            raise ValueError(f"{field.name} must be positive")
        return v

    @validator("max_iter")
    def at_least_one_iteration(cls, v):
        if v < 1:
            raise ValueError("max_iter must be at least 1")
        return v

    @validator("backtrack", "armijo")
    def unit_interval(cls, v, field):
        if not 0 < v < 1:
            raise ValueError(f"{field.name} must lie strictly between 0 and 1")
        return v

    class Config:
        extra = Extra.forbid


class RunConfig(BaseModel):
    """One invocation: what to run, on which group, and how to report it.

    Every field is optional so that a config file can hold partial defaults.
    """
    group: Optional[GroupLiteral] = None
    command: Optional[str] = None
    theta: Optional[str] = None
    seed: int = 0
    format: OutputFormat = OutputFormat.text
    solver: SolverConfig = Field(default_factory=SolverConfig)
    zero: Optional[str] = None
    samples: int = 100

    @validator("seed")
    def unsigned_seed(cls, v):
        if v < 0:
            raise ValueError("seed must be non-negative")
        return v

    @validator("samples")
    def positive_samples(cls, v):
        if v < 1:
            raise ValueError("samples must be at least 1")
        return v

    def merged(self, **overrides) -> "RunConfig":
        """Copy with every override that is not None applied; `solver` overrides merge key-wise."""
        data = self.dict()
        for key, value in overrides.items():
            if value is None:
                continue
            if key == "solver":
                data["solver"] = {**data["solver"], **{k: v for k, v in value.items() if v is not None}}
            else:
                data[key] = value
        try:
            return RunConfig(**data)
        except ValidationError as e:
            raise ConfigError(source="command line", reason=_first_error(e))

    def to_yaml(self) -> str:
        data = self.dict(exclude_none=True)
        data["format"] = self.format.value
        return yaml.safe_dump(data, sort_keys=True)

    @staticmethod
    def from_yaml(text: str, source: str = "<string>") -> "RunConfig":
        try:
            data = yaml.safe_load(text) or {}
        except yaml.YAMLError as e:
            raise ConfigError(source=source, reason=str(e).splitlines()[0])
        if not isinstance(data, dict):
            raise ConfigError(source=source, reason="expected a mapping at the top level")
        try:
            return RunConfig(**data)
        except ValidationError as e:
            raise ConfigError(source=source, reason=_first_error(e))

    class Config:
        extra = Extra.forbid


state = {
}


def load_config(path: Optional[Path] = None) -> RunConfig:
    """Load the process-wide defaults from `path`, $MCKAY3_CONFIG, or the built-in defaults."""
    if "config" in state:
        raise RuntimeError("cannot reload config")
    if path is None and os.environ.get(CONFIG_ENV):
        path = Path(os.environ[CONFIG_ENV])

    if path is None:
        state["config"] = RunConfig.from_yaml(DEFAULT_CONFIG, source="defaults")
    elif not path.exists():
        raise ConfigError(source=str(path), reason="no such file")
    else:
        state["config"] = RunConfig.from_yaml(path.read_text(), source=str(path))
    return state["config"]


def get_config() -> RunConfig:
    c = state.get("config", None)
    if not c:
        raise RuntimeError("no config loaded, should be impossible")
    return c


def reset_config() -> None:
    """Forget the loaded config; the CLI calls this once per invocation."""
    state.pop("config", None)


def get_threads() -> int:
    raw = os.environ.get(THREADS_ENV)
    if raw is None:
        return 1
    try:
        threads = int(raw)
    except ValueError:
        threads = 0
    if threads < 1:
        raise ConfigError(source=THREADS_ENV, reason=f"expected an integer >= 1, got {raw!r}")
    return threads
