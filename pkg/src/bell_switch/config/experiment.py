"""Strict experiment configuration files."""

from __future__ import annotations

import math
import os
import re
import tomllib
from importlib import resources
from pathlib import Path
from typing import Annotated, Any, Literal

import yaml
from pydantic import BaseModel, BeforeValidator, ConfigDict, Field, PrivateAttr, ValidationError, model_validator

from bell_switch.analysis.config import AnalysisConfig
from bell_switch.analysis.verdict import TransferClass
from bell_switch.dynamics.config import IntegratorConfig
from bell_switch.errors import ConfigurationError
from bell_switch.model.eigensystem import Label
from bell_switch.model.parameters import ParameterName
from bell_switch.spectrum.grid import GridSpec
from bell_switch.trajectory.custom import load_custom_loop
from bell_switch.trajectory.loops import (
    Direction,
    Loop,
    make_chiral_modulated_loop,
    make_constant_dissipation_loop,
    make_symmetric_loop,
)

#: Experiments shipped with the package.
BUNDLED_EXPERIMENTS = ("fig1", "fig2", "fig3", "fig4", "fig5", "fig6", "fig6-slow")

_PI_PATTERN = re.compile(
    r"^\s*(?P<sign>[+-]?)\s*(?P<coef>\d+(?:\.\d*)?(?:[eE][+-]?\d+)?)?\s*\*?\s*pi\s*(?:/\s*(?P<den>\d+(?:\.\d*)?))?\s*$"
)


def parse_angle(value: Any) -> Any:
    """Turn strings such as ``"pi"``, ``"-pi/2"``, ``"2*pi"`` or ``"0.5pi"`` into floats.

    Anything else is passed through for normal float validation.
    """
    if not isinstance(value, str):
        return value
    match = _PI_PATTERN.match(value)
    if match is None:
        return value
    result = float(match["coef"] or 1.0) * math.pi
    if match["den"]:
        result /= float(match["den"])
    return -result if match["sign"] == "-" else result


Angle = Annotated[float, BeforeValidator(parse_angle)]


class ModelBlock(BaseModel):
    """Model constants shared by every loop of the experiment.

    Attributes:
        omega_a: Atomic frequency, the energy unit.
        alpha: Ratio κ/γ; ``None`` keeps κ at zero.
    """

    model_config = ConfigDict(extra="forbid")

    omega_a: float = Field(default=1.0, gt=0, description="Atomic frequency")
    alpha: float | None = Field(default=-1.0, description="Ratio kappa/gamma")


RunDirections = Literal["both", "cw", "ccw"]


class _LoopBlock(BaseModel):
    model_config = ConfigDict(extra="forbid")

    omega: Angle = Field(description="Angular frequency; its sign is set per direction")
    directions: RunDirections = Field(default="both", description="Directions to run")

    def _omega(self, direction: Direction) -> float:
        return abs(self.omega) if direction is Direction.CCW else -abs(self.omega)


class SymmetricLoopBlock(_LoopBlock):
    """Constants of the symmetric loop."""

    kind: Literal["symmetric"]
    g0: float
    G0: float
    Gamma0: float

    def build(self, model: ModelBlock, direction: Direction, base_dir: Path) -> Loop:
        return make_symmetric_loop(
            self.g0, self.G0, self.Gamma0, model.alpha, self._omega(direction), omega_a=model.omega_a
        )


class ChiralModulatedLoopBlock(_LoopBlock):
    """Constants of the loop with modulated dissipation and detuning."""

    kind: Literal["chiral_modulated"]
    g0: float
    Delta0: float
    Gamma0: float

    def build(self, model: ModelBlock, direction: Direction, base_dir: Path) -> Loop:
        return make_chiral_modulated_loop(
            self.g0, self.Delta0, self.Gamma0, model.alpha, self._omega(direction), omega_a=model.omega_a
        )


class ConstantDissipationLoopBlock(_LoopBlock):
    """Constants of the loop with constant dissipation."""

    kind: Literal["constant_dissipation"]
    g0: float
    G0: float
    Delta0: float
    gamma0: float

    def build(self, model: ModelBlock, direction: Direction, base_dir: Path) -> Loop:
        return make_constant_dissipation_loop(
            self.g0,
            self.G0,
            self.Delta0,
            self.gamma0,
            model.alpha,
            self._omega(direction),
            omega_a=model.omega_a,
        )


class CustomLoopBlock(BaseModel):
    """A tabulated loop read from CSV.

    Attributes:
        path: CSV file, relative to the experiment file.
        fixed: Values of parameters missing from the table.
        traversal: Direction of the tabulated order.
        directions: Directions to run.
    """

    model_config = ConfigDict(extra="forbid")

    kind: Literal["custom"]
    path: Path
    fixed: dict[ParameterName, float] = Field(default_factory=dict)
    traversal: Literal["cw", "ccw"] = "ccw"
    directions: RunDirections = "both"

    def build(self, model: ModelBlock, direction: Direction, base_dir: Path) -> Loop:
        path = self.path if self.path.is_absolute() else base_dir / self.path
        loop = load_custom_loop(
            path,
            fixed=self.fixed,
            alpha=model.alpha,
            omega_a=model.omega_a,
            direction=Direction(self.traversal),
        )
        return loop if loop.direction is direction else loop.reversed()


LoopBlock = Annotated[
    SymmetricLoopBlock | ChiralModulatedLoopBlock | ConstantDissipationLoopBlock | CustomLoopBlock,
    Field(discriminator="kind"),
]

_LOOP_KINDS = frozenset(("symmetric", "chiral_modulated", "constant_dissipation", "custom"))


class EvolveBlock(BaseModel):
    """Initial states of evolve runs.

    Attributes:
        start: ``"eigenstate"`` starts on the labelled eigenvector at t = 0;
            ``"bell"`` on the Bell state of the same sign.
        labels: Initial labels to run.
    """

    model_config = ConfigDict(extra="forbid")

    start: Literal["eigenstate", "bell"] = "eigenstate"
    labels: list[Label] = Field(default_factory=lambda: ["plus", "minus"], min_length=1)


class EncirclementBlock(BaseModel):
    """Reference point for the winding diagnostic.

    Attributes:
        plane: The two parameters spanning the projection plane.
        reference: Coordinates of the reference point in that plane.
    """

    model_config = ConfigDict(extra="forbid")

    plane: tuple[ParameterName, ParameterName]
    reference: tuple[float, float]


class SweepBlock(BaseModel):
    """One loop constant, or ``threshold``, and the values it takes.

    Attributes:
        parameter: Loop constant name (``omega``, ``Gamma0``, ...) or ``threshold``.
        values: Values to run.
    """

    model_config = ConfigDict(extra="forbid")

    parameter: str
    values: list[Angle] = Field(min_length=1)


OutputFormat = Literal["csv", "json", "grid", "script"]


class OutputBlock(BaseModel):
    """Where and what to write.

    Attributes:
        directory: Root directory for this experiment's artifacts.
        formats: Artifact kinds to write.
    """

    model_config = ConfigDict(extra="forbid")

    directory: Path | None = None
    formats: list[OutputFormat] = Field(default_factory=lambda: ["csv", "json", "grid", "script"])


class ExpectBlock(BaseModel):
    """Expected outcomes checked by ``classify`` and ``spectrum``.

    Attributes:
        transfer_class: Class every initial label must produce.
        is_ep: Expected EP verdict per grid name.
        note: Free-text remark copied into the report.
    """

    model_config = ConfigDict(extra="forbid")

    transfer_class: TransferClass | None = None
    is_ep: dict[str, bool] = Field(default_factory=dict)
    note: str = ""


class ExperimentConfig(BaseModel):
    """A complete experiment description.

    Attributes:
        name: Experiment name, used for the output sub-directory.
        description: Free text.
        model: Model constants.
        loop: Loop kind and constants.
        evolve: Initial states.
        integrator: Time integration settings.
        grids: Spectrum slices.
        analysis: Classification settings.
        encirclement: Optional winding diagnostic.
        sweep: Optional parameter sweep.
        output: Output directory and formats.
        expect: Expected outcomes.
    """

    model_config = ConfigDict(extra="forbid")

    name: str
    description: str = ""
    model: ModelBlock = Field(default_factory=ModelBlock)
    loop: LoopBlock | None = None
    evolve: EvolveBlock = Field(default_factory=EvolveBlock)
    integrator: IntegratorConfig = Field(default_factory=IntegratorConfig)
    grids: list[GridSpec] = Field(default_factory=list)
    analysis: AnalysisConfig = Field(default_factory=AnalysisConfig)
    encirclement: EncirclementBlock | None = None
    sweep: SweepBlock | None = None
    output: OutputBlock = Field(default_factory=OutputBlock)
    expect: ExpectBlock = Field(default_factory=ExpectBlock)

    _base_dir: Path = PrivateAttr(default_factory=Path.cwd)

    @model_validator(mode="after")
    def _check_names(self) -> ExperimentConfig:
        names = [g.name for g in self.grids]
        if len(set(names)) != len(names):
            raise ValueError(f"grid names must be unique, got {names}")
        unknown = set(self.expect.is_ep) - set(names)
        if unknown:
            raise ValueError(f"expect.is_ep names unknown grid(s): {', '.join(sorted(unknown))}")
        return self

    @property
    def base_dir(self) -> Path:
        """Directory relative paths in the experiment resolve against."""
        return self._base_dir

    def with_base_dir(self, base_dir: Path) -> ExperimentConfig:
        """Return a copy resolving relative paths against *base_dir*."""
        copy = self.model_copy()
        copy._base_dir = base_dir
        return copy

    def directions(self) -> list[Direction]:
        """Directions requested by the loop block, cw first."""
        if self.loop is None:
            return []
        chosen = self.loop.directions
        return [d for d in (Direction.CW, Direction.CCW) if chosen in ("both", str(d))]

    def build_loop(self, direction: Direction) -> Loop:
        """Construct the loop traversed in *direction*.

        Raises:
            ConfigurationError: If the experiment has no loop block.
        """
        if self.loop is None:
            raise ConfigurationError("Experiment has no loop block", config_key="loop")
        return self.loop.build(self.model, direction, self._base_dir)


def _key_path(loc: tuple[int | str, ...]) -> str:
    parts = [str(p) for p in loc]
    if len(parts) > 2 and parts[0] == "loop" and parts[1] in _LOOP_KINDS:
        del parts[1]
    return ".".join(parts)


def _validation_message(error: ValidationError, source: str) -> tuple[str, str | None]:
    lines = []
    first_key = None
    for item in error.errors():
        key = _key_path(item["loc"])
        first_key = first_key or key
        lines.append(f"{key}: {item['msg']}" if key else item["msg"])
    return f"Invalid experiment {source}: " + "; ".join(lines), first_key


def experiment_from_mapping(data: dict[str, Any], *, source: str = "<memory>", base_dir: Path | None = None) -> ExperimentConfig:
    """Validate a parsed experiment.

    Raises:
        ConfigurationError: On unknown keys or invalid values; the message
            names the offending key path.
    """
    try:
        config = ExperimentConfig.model_validate(data)
    except ValidationError as e:
        message, key = _validation_message(e, source)
        raise ConfigurationError(message, cause=e, config_key=key, source=source) from e
    return config.with_base_dir(base_dir or Path.cwd())


def _parse(text: str, suffix: str, source: str) -> dict[str, Any]:
    try:
        if suffix == ".toml":
            return tomllib.loads(text)
        if suffix in (".yaml", ".yml"):
            data = yaml.safe_load(text)
            if not isinstance(data, dict):
                raise ConfigurationError(f"Experiment {source} must contain a mapping", source=source)
            return data
    except (tomllib.TOMLDecodeError, yaml.YAMLError) as e:
        raise ConfigurationError(f"Cannot parse experiment {source}: {e}", cause=e, source=source) from e
    raise ConfigurationError(f"Unsupported experiment format: {suffix or '<none>'}", source=source)


def load_experiment(source: str | Path) -> ExperimentConfig:
    """Load an experiment file or a bundled experiment by name.

    Args:
        source: Path to a ``.toml``/``.yaml`` file, or one of
            :data:`BUNDLED_EXPERIMENTS`.

    Raises:
        ConfigurationError: If the source is unknown, unreadable or invalid.
    """
    path = Path(source)
    if path.is_file():
        text = path.read_text(encoding="utf-8")
        data = _parse(text, path.suffix.lower(), str(path))
        return experiment_from_mapping(data, source=str(path), base_dir=path.parent.resolve())

    name = str(source)
    if name in BUNDLED_EXPERIMENTS:
        resource = resources.files("bell_switch.experiments").joinpath(f"{name}.toml")
        data = _parse(resource.read_text(encoding="utf-8"), ".toml", name)
        return experiment_from_mapping(data, source=name)

    bundled = ", ".join(BUNDLED_EXPERIMENTS)
    raise ConfigurationError(
        f"Experiment {name!r} is neither a file nor a bundled experiment ({bundled})",
        source=name,
    )


def resolve_output_dir(cli_out: Path | None, config: ExperimentConfig, default: Path) -> Path:
    """Output directory: ``--out``, then ``BELLSWITCH_OUTPUT_DIR``, then the
    experiment's ``output.directory``, then *default*."""
    if cli_out is not None:
        return cli_out
    env = os.environ.get("BELLSWITCH_OUTPUT_DIR")
    if env:
        return Path(env)
    if config.output.directory is not None:
        return config.output.directory
    return default
