"""Run manifests: flat KEY=value documents checked against a fixed schema"""
import io
import logging
import os
from typing import Literal

from dotenv.parser import parse_stream
from pydantic import BaseModel, ConfigDict, Field, ValidationError, field_validator

import config
from analysis import SCENARIOS

logger = logging.getLogger(__name__)

# Document key -> (model field, description). Keys are case-sensitive.
MANIFEST_SCHEMA = {
    'scenario': ('scenario', "preset name: fixed, site1_osc, site4_osc, antiphase, inphase"),
    'config': ('configuration', "A (all couplings positive) or B (J34 negative)"),
    'gamma': ('gamma', "dephasing rate on sites 2 and 3"),
    'Gamma': ('sink_rate', "sink rate"),
    'a': ('amplitude', "relative oscillation amplitude, 0 <= a < 0.5"),
    'omega0': ('omega0', "oscillation angular frequency"),
    'phase1': ('phase1', "phase of the (1,2)/(1,3) pair, radians"),
    'phase2': ('phase2', "phase of the (2,4)/(3,4) pair, radians (preset default if absent)"),
    'omega': ('omega', "common site frequency"),
    'tmax': ('t_max', "final simulation time"),
    'h': ('step', "RK4 step"),
    'Teval': ('t_eval', "evaluation time of the sweep efficiency"),
    'gamma_min': ('gamma_min', "lower end of the gamma sweep"),
    'gamma_max': ('gamma_max', "upper end of the gamma sweep"),
    'n_points': ('n_points', "number of gamma grid points"),
    'scenarios': ('scenarios', "comma-separated scenario list for compare"),
    'reoptimize_gamma': ('reoptimize_gamma', "true: sweep gamma per scenario, false: use 1.05"),
    'out': ('out', "output directory"),
}
KEY_BY_FIELD = {field: key for key, (field, _) in MANIFEST_SCHEMA.items()}


class ManifestError(ValueError):
    """Malformed or invalid run manifest, located by line and key"""

    def __init__(self, message: str, line: int | None = None, field: str | None = None):
        self.line = line
        self.field = field
        location = []
        if line is not None:
            location.append(f"line {line}")
        if field is not None:
            location.append(f"field '{field}'")
        prefix = f"{', '.join(location)}: " if location else ""
        super().__init__(f"{prefix}{message}")


def _check_scenario_name(name: str) -> str:
    if name not in SCENARIOS:
        raise ValueError(f"unknown scenario {name!r}, expected one of {', '.join(SCENARIOS)}")
    return name


class RunManifest(BaseModel):
    """Everything needed to reproduce a run"""
    model_config = ConfigDict(frozen=True, extra='forbid', validate_by_name=True, validate_by_alias=True)

    scenario: str = 'fixed'
    configuration: Literal['A', 'B'] = Field(default='B', alias='config')
    gamma: float = Field(default=config.GAMMA_OPT, ge=0.0)
    sink_rate: float = Field(default=config.DEFAULT_SINK_RATE, ge=0.0, alias='Gamma')
    amplitude: float = Field(default=config.DEFAULT_AMPLITUDE, ge=0.0, lt=0.5, alias='a')
    omega0: float = Field(default=config.DEFAULT_OMEGA0, ge=0.0)
    phase1: float = 0.0
    phase2: float | None = None
    omega: float = 0.0
    t_max: float = Field(default=config.DEFAULT_T_MAX, ge=0.0, alias='tmax')
    step: float = Field(default=config.DEFAULT_STEP, gt=0.0, alias='h')
    t_eval: float = Field(default=config.DEFAULT_T_EVAL, gt=0.0, alias='Teval')
    gamma_min: float = Field(default=config.SWEEP_GAMMA_MIN, ge=0.0)
    gamma_max: float = Field(default=config.SWEEP_GAMMA_MAX, gt=0.0)
    n_points: int = config.SWEEP_POINTS
    scenarios: tuple[str, ...] = ()
    reoptimize_gamma: bool = True
    out: str = config.OUTPUT_DIR

    @field_validator('scenario')
    @classmethod
    def _known_scenario(cls, value: str) -> str:
        return _check_scenario_name(value.strip())

    @field_validator('scenarios', mode='before')
    @classmethod
    def _split_scenarios(cls, value):
        if isinstance(value, str):
            value = [part.strip() for part in value.split(',')]
            value = [part for part in value if part]
        return tuple(_check_scenario_name(name) for name in value)

    def deformation_overrides(self) -> dict:
        """Keyword overrides for the analysis scenario presets"""
        return {
            'amplitude': self.amplitude,
            'omega0': self.omega0,
            'phase1': self.phase1,
            'phase2': self.phase2,
        }

    def echo(self) -> dict:
        """Parameters keyed by document keys, in schema order"""
        return {key: getattr(self, field) for key, (field, _) in MANIFEST_SCHEMA.items()
                if key not in ('scenarios', 'out')}


def _key_line(original) -> int:
    """Line holding the key; the parser counts from the leading blank lines"""
    text = original.string
    leading = text[:len(text) - len(text.lstrip())]
    return original.line + leading.count("\n")


def parse_manifest_text(text: str) -> tuple[dict[str, str], dict[str, int]]:
    """Parse a KEY=value document

    Returns:
        (values by key, line number by key)

    Raises:
        ManifestError: On malformed lines, missing values, unknown or repeated keys
    """
    values, lines = {}, {}
    for binding in parse_stream(io.StringIO(text)):
        line = _key_line(binding.original)
        if binding.error:
            raise ManifestError(f"cannot parse {binding.original.string.strip()!r}", line=line)
        if binding.key is None:
            continue  # blank line or comment
        key = binding.key
        if binding.value is None:
            raise ManifestError("expected KEY=value", line=line, field=key)
        if key not in MANIFEST_SCHEMA:
            raise ManifestError(f"unknown key, expected one of {', '.join(MANIFEST_SCHEMA)}", line=line, field=key)
        if key in values:
            raise ManifestError(f"duplicate key (first set on line {lines[key]})", line=line, field=key)
        values[key] = binding.value
        lines[key] = line
    return values, lines


def load_manifest(path: str) -> tuple[dict[str, str], dict[str, int]]:
    """Read and parse a manifest document from disk"""
    if not os.path.isfile(path):
        raise ManifestError(f"manifest not found: {path}")
    with open(path, 'r', encoding='utf-8') as f:
        text = f.read()
    values, lines = parse_manifest_text(text)
    logger.debug(f"Loaded {len(values)} manifest keys from {path}")
    return values, lines


def resolve_manifest(path: str | None = None, overrides: dict | None = None) -> RunManifest:
    """Merge a manifest document with command-line overrides (flags win)

    Args:
        path: Optional manifest document
        overrides: Field-name keyed values; None entries are ignored

    Raises:
        ManifestError: On parse or validation failure
    """
    values, lines = load_manifest(path) if path else ({}, {})
    data = {MANIFEST_SCHEMA[key][0]: value for key, value in values.items()}
    line_by_field = {MANIFEST_SCHEMA[key][0]: line for key, line in lines.items()}

    for field, value in (overrides or {}).items():
        if value is None:
            continue
        data[field] = value
        line_by_field.pop(field, None)

    try:
        return RunManifest.model_validate(data)
    except ValidationError as e:
        error = e.errors()[0]
        loc = error.get('loc') or ()
        field = loc[0] if loc else None
        if field in MANIFEST_SCHEMA:
            field = MANIFEST_SCHEMA[field][0]
        raise ManifestError(
            error.get('msg', str(e)),
            line=line_by_field.get(field),
            field=KEY_BY_FIELD.get(field, field),
        ) from e
