import logging
from dataclasses import asdict, dataclass, field, fields
from pathlib import Path
from typing import Any

from bck_net.core import ConfigurationError, FieldMode
from bck_net.field.constants import SEED_LIMIT
from bck_net.walkers import ScaledConfig

__all__: list[str] = ["RunConfig", "load_config_file", "parse_value", "FIELD_KINDS"]

logger = logging.getLogger(__name__)

OUTPUT_FORMATS: tuple[str, ...] = ("csv", "json")

# Fields left out of result rows: they do not affect the numbers
NON_FINGERPRINT_FIELDS: tuple[str, ...] = (
    "command",
    "out",
    "threads",
    "corrupt_rotation",
)

# Value kind of every RunConfig field, used to parse config files and flags
FIELD_KINDS: dict[str, str] = {
    "command": "str",
    "mode": "str",
    "b": "float",
    "k": "float",
    "beta": "float",
    "resample": "bool",
    "t": "float",
    "L": "float",
    "eps": "float",
    "m": "float",
    "n": "float",
    "k_grid": "float_list",
    "L_grid": "float_list",
    "eps_grid": "float_list",
    "v": "float_list",
    "b_grid": "float_list",
    "starts": "int_list",
    "horizon": "int",
    "steps": "int",
    "b_site": "float",
    "width": "int",
    "height": "int",
    "reps": "int",
    "seed": "int",
    "threads": "int",
    "format": "str",
    "out": "str",
    "corrupt_rotation": "bool",
}


@dataclass
class RunConfig:
    """Configuration of one CLI run.

    Every field has a default; the parsed config is echoed into the output
    so a result row carries the full parameter fingerprint.
    """

    command: str = "density"

    # Model (macroscopic unless beta = 0)
    mode: str = FieldMode.LAYERED.value
    b: float = 1.0
    k: float = 0.0
    beta: float = 0.0
    resample: bool = False

    # Geometry in macroscopic units
    t: float = 1.0
    L: float = 1.0
    eps: float = 1.0
    m: float = 1.0
    n: float = 1.0

    # Sweeps
    k_grid: list[float] = field(default_factory=list)
    L_grid: list[float] = field(default_factory=list)
    eps_grid: list[float] = field(default_factory=list)
    v: list[float] = field(default_factory=list)
    b_grid: list[float] = field(default_factory=lambda: [0.0, 0.3, 1.0])

    # Lattice-level settings
    starts: list[int] = field(default_factory=list)
    horizon: int = 200
    steps: int = 200
    b_site: float = 0.1
    width: int = 40
    height: int = 40

    # Run control
    reps: int = 100
    seed: int = 0
    threads: int = 1
    format: str = "csv"
    out: str | None = None

    # Oracle negative control; not exposed as a flag
    corrupt_rotation: bool = False

    @property
    def scaled(self) -> ScaledConfig:
        mode = FieldMode(self.mode)
        return ScaledConfig(mode, self.b, self.k, self.beta, self.resample)

    def validate(self) -> "RunConfig":
        """Check every invariant; the message names the one violated.

        Raises:
            ConfigurationError: invalid value or combination
        """
        try:
            FieldMode(self.mode)
        except ValueError:
            raise ConfigurationError(
                f"mode must be joint or layered, got {self.mode!r}"
            ) from None
        if self.reps < 1:
            raise ConfigurationError(f"reps must be >= 1, got {self.reps}")
        if self.threads < 1:
            raise ConfigurationError(f"threads must be >= 1, got {self.threads}")
        if not 0 <= self.seed < SEED_LIMIT:
            raise ConfigurationError(
                f"seed must be a 64-bit unsigned integer, got {self.seed}"
            )
        if self.format not in OUTPUT_FORMATS:
            raise ConfigurationError(
                f"format must be one of {OUTPUT_FORMATS}, got {self.format!r}"
            )
        for name in ("t", "L", "eps", "m", "n", "horizon", "steps", "width", "height"):
            value = getattr(self, name)
            if value < 0:
                raise ConfigurationError(f"{name} must be >= 0, got {value}")
        if not 0.0 <= self.b_site <= 1.0:
            raise ConfigurationError(f"b_site must lie in [0, 1], got {self.b_site}")
        # ScaledConfig checks b e^-beta <= 1, k e^-2beta <= 1 and the joint b + k <= 1
        scaled = self.scaled
        for k in self.k_grid:
            scaled.with_k(k)
        return self

    def to_dict(self) -> dict[str, Any]:
        return asdict(self)

    def echo(self) -> dict[str, Any]:
        """Config echo for JSON output; fields that cannot change results are left
        out so the data stream is identical for any thread count."""
        return {
            name: value
            for name, value in self.to_dict().items()
            if name not in ("threads", "out")
        }

    def fingerprint(self) -> dict[str, str]:
        """Flat string rendering of every field for tabular output."""
        out = {}
        for name, value in self.to_dict().items():
            if name in NON_FINGERPRINT_FIELDS:
                continue
            if isinstance(value, list):
                out[name] = ";".join(str(v) for v in value)
            elif value is None:
                out[name] = ""
            else:
                out[name] = str(value)
        return out

    @classmethod
    def from_file(cls, path: str | Path, **overrides) -> "RunConfig":
        """Config from a key=value file; `overrides` take precedence over the file."""
        values = load_config_file(path)
        values.update(overrides)
        return cls(**values)


def parse_value(name: str, raw: str) -> Any:
    """Convert the text of a config entry to the field's type."""
    kind = FIELD_KINDS.get(name)
    if kind is None:
        raise ConfigurationError(f"unknown configuration key {name!r}")
    text = raw.strip()
    try:
        if kind == "str":
            return text
        if kind == "float":
            return float(text)
        if kind == "int":
            return int(text)
        if kind == "bool":
            lowered = text.lower()
            if lowered in ("1", "true", "yes", "on"):
                return True
            if lowered in ("0", "false", "no", "off"):
                return False
            raise ValueError(text)
        items = [s for s in text.replace(",", " ").split() if s]
        if kind == "float_list":
            return [float(s) for s in items]
        return [int(s) for s in items]
    except ValueError:
        raise ConfigurationError(
            f"invalid value for {name}: {raw!r} (expected {kind})"
        ) from None


def load_config_file(path: str | Path) -> dict[str, Any]:
    """Read a flat key=value file; '#' starts a comment, blank lines are skipped.

    Raises:
        ConfigurationError: unreadable file, malformed line or unknown key
    """
    path = Path(path)
    try:
        text = path.read_text()
    except OSError as exc:
        raise ConfigurationError(f"cannot read config file {path}: {exc}") from None

    values: dict[str, Any] = {}
    known = {f.name for f in fields(RunConfig)}
    for lineno, line in enumerate(text.splitlines(), start=1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise ConfigurationError(
                f"{path}:{lineno}: expected key=value, got {line!r}"
            )
        key, raw = (part.strip() for part in line.split("=", 1))
        key = key.replace("-", "_")
        if key not in known:
            raise ConfigurationError(
                f"{path}:{lineno}: unknown configuration key {key!r}"
            )
        values[key] = parse_value(key, raw)
    logger.debug(f"Loaded {len(values)} settings from {path}")
    return values
