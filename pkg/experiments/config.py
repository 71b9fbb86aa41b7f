"""Experiment configuration: defaults, .env / environment, key=value files, CLI overrides."""
from __future__ import annotations

import logging
import os
from dataclasses import asdict, dataclass, replace

from dotenv import dotenv_values, load_dotenv

from immunization.seasons import STRATEGY_IDS
from network.generators import generate_ba
from network.graph import giant_component, load_edge_list
from utils.errors import ConfigError

load_dotenv()

logger = logging.getLogger(__name__)

# BA graph with <k> near 20, where beta = 0.1 spreads
DESK_NETWORK = "ba:n=1000,m=10,seed=1"

TRUE_WORDS = {"1", "true", "yes", "on"}
FALSE_WORDS = {"0", "false", "no", "off"}


def _parse_bool(text):
    word = str(text).strip().lower()
    if word in TRUE_WORDS:
        return True
    if word in FALSE_WORDS:
        return False
    raise ValueError(f"not a boolean: {text!r}")


def _parse_optional_float(text):
    text = str(text).strip()
    return None if text.lower() in ("", "none") else float(text)


PARSERS = {
    "network": str,
    "strategy": str,
    "beta": float,
    "v": float,
    "seasons": int,
    "replicas": int,
    "seed": int,
    "out": str,
    "workers": int,
    "profile": _parse_bool,
    "i0": _parse_optional_float,
}


@dataclass(frozen=True)
class ExperimentConfig:
    network: str = DESK_NETWORK
    strategy: str = "dynamical"
    beta: float = 0.1
    v: float = 0.1
    seasons: int = 10
    replicas: int = 100
    seed: int = 0
    out: str = "results/run.csv"
    workers: int = 1
    profile: bool = False
    i0: float | None = None

    def validate(self):
        if self.strategy not in STRATEGY_IDS:
            raise ConfigError(f"strategy must be one of {', '.join(STRATEGY_IDS)}, got {self.strategy!r}")
        if not 0.0 <= self.beta <= 1.0:
            raise ConfigError(f"beta must lie in [0, 1], got {self.beta}")
        if not 0.0 <= self.v < 1.0:
            raise ConfigError(f"v must lie in [0, 1), got {self.v}")
        if self.seasons < 1:
            raise ConfigError(f"seasons must be >= 1, got {self.seasons}")
        if self.replicas < 1:
            raise ConfigError(f"replicas must be >= 1, got {self.replicas}")
        if self.workers < 1:
            raise ConfigError(f"workers must be >= 1, got {self.workers}")
        if self.i0 is not None and not 0.0 < self.i0 < 1.0:
            raise ConfigError(f"i0 must lie in (0, 1), got {self.i0}")
        return self

    @classmethod
    def from_env(cls):
        """Defaults plus whatever the environment (or .env) sets."""
        workers = os.getenv("IMMUNIZE_WORKERS")
        if workers is None:
            return cls()
        return cls().with_overrides(workers=_convert("workers", workers, "IMMUNIZE_WORKERS"))

    @classmethod
    def from_file(cls, path, base=None):
        """Read a flat key=value file on top of ``base`` (environment defaults if omitted)."""
        if not os.path.isfile(path):
            raise FileNotFoundError(f"config file not found: {path}")
        base = base or cls.from_env()
        values = {}
        for key, value in dotenv_values(path, interpolate=False, encoding="utf-8").items():
            if value is None:
                raise ConfigError(f"{path}: expected key=value, got {key!r}")
            values[key] = _convert(key, value, str(path))
        return base.with_overrides(**values)

    def with_overrides(self, **overrides):
        """New config with every non-None override applied."""
        unknown = set(overrides) - set(PARSERS)
        if unknown:
            raise ConfigError(f"unknown config keys: {', '.join(sorted(unknown))}")
        changes = {key: value for key, value in overrides.items() if value is not None}
        return replace(self, **changes)

    def as_dict(self):
        return asdict(self)


def _convert(key, value, where):
    if key not in PARSERS:
        raise ConfigError(f"{where}: unknown config key {key!r}")
    try:
        return PARSERS[key](value)
    except ValueError as exc:
        raise ConfigError(f"{where}: bad value for {key}: {exc}") from None


def parse_generator_spec(source):
    """``ba:n=1000,m=2,seed=1`` -> ("ba", {"n": 1000, "m": 2, "seed": 1})."""
    kind, _, params = source.partition(":")
    options = {}
    for item in filter(None, params.split(",")):
        key, sep, value = item.partition("=")
        if not sep:
            raise ConfigError(f"generator option {item!r} is not key=value")
        try:
            options[key.strip()] = int(value)
        except ValueError:
            raise ConfigError(f"generator option {key.strip()} must be an integer, got {value!r}") from None
    return kind, options


def load_network(source):
    """Giant component of an edge-list file or of a ``ba:`` generator spec."""
    if source.startswith("ba:"):
        _, options = parse_generator_spec(source)
        missing = {"n", "m"} - set(options)
        extra = set(options) - {"n", "m", "seed"}
        if extra:
            raise ConfigError(f"generator spec {source!r} has unknown options {', '.join(sorted(extra))}")
        if missing:
            raise ConfigError(f"generator spec {source!r} lacks {', '.join(sorted(missing))}")
        net = generate_ba(options["n"], options["m"], options.get("seed", 0))
    else:
        net = load_edge_list(source)
    giant = giant_component(net)
    logger.info("Loaded %s: N=%d, E=%d (giant component of %d nodes)",
                source, giant.node_count, giant.edge_count, net.node_count)
    return giant
