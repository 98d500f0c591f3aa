"""
Options shared by the CLI commands, validated before any series is computed.
"""

from dataclasses import dataclass
from pathlib import Path
from typing import Optional, Tuple

from ..core.errors import ConfigError
from ..core.multisection import prime_context

FORMATS = ("json", "text")
COMMANDS = ("expand", "table", "verify", "theta", "partitions")


def parse_primes(value: Optional[str]) -> Tuple[int, ...]:
    """Parse a comma-separated list such as ``"5,7,11"``.

    Raises:
        ConfigError: If an entry is not an integer
    """
    if value is None or not value.strip():
        return ()
    primes = []
    for item in value.split(","):
        item = item.strip()
        try:
            primes.append(int(item))
        except ValueError:
            raise ConfigError(f"--n entry {item!r} is not an integer") from None
    return tuple(primes)


@dataclass
class CliConfig:
    command: str
    primes: Tuple[int, ...] = ()
    order: Optional[int] = None
    residue: Optional[int] = None
    filter: Optional[str] = None
    output_format: str = "text"
    out: Optional[Path] = None

    @property
    def is_json(self) -> bool:
        return self.output_format == "json"

    def validate(self) -> "CliConfig":
        """Check the options for the selected command.

        Returns:
            The config itself, so calls can be chained

        Raises:
            ConfigError: For an unusable order, format, residue or N
            NotPrime: If an N that must be prime is not
            UnsupportedPrime: For N = 2 or 3
        """
        if self.command not in COMMANDS:
            raise ConfigError(f"unknown command {self.command!r}")
        if self.output_format not in FORMATS:
            raise ConfigError(
                f"format must be one of {', '.join(FORMATS)}, got {self.output_format!r}"
            )
        if self.order is not None and self.order < 1:
            raise ConfigError(f"order must be at least 1, got {self.order}")

        if self.command == "partitions":
            self._validate_partitions()
            return self

        if self.command in ("expand", "table", "theta") and not self.primes:
            raise ConfigError(f"{self.command} needs --n")
        for N in self.primes:
            prime_context(N)
        if self.residue is not None:
            for N in self.primes:
                if not 0 <= self.residue < N:
                    raise ConfigError(f"residue {self.residue} outside 0..{N - 1} for N={N}")
        return self

    def _validate_partitions(self) -> None:
        if len(self.primes) > 1:
            raise ConfigError("partitions takes a single --n")
        if self.primes and self.primes[0] < 1:
            raise ConfigError(f"--n must be positive, got {self.primes[0]}")
        if (self.residue is None) != (not self.primes):
            raise ConfigError("--n and --residue must be given together")
        if self.primes and not 0 <= self.residue < self.primes[0]:
            raise ConfigError(
                f"residue {self.residue} outside 0..{self.primes[0] - 1}"
            )
