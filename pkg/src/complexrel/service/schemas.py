"""Request and response models for the HTTP service.

Complex numbers travel as {"re": ..., "im": ...}; bare JSON numbers are
accepted on input and widened to a zero imaginary part.  Unknown keys are
rejected everywhere so malformed payloads fail loudly at validation time.
"""

from __future__ import annotations

from typing import Annotated, Literal, Optional

from pydantic import BaseModel, BeforeValidator, ConfigDict, Field, model_validator

from ..core import constants_for
from ..kinematics import Boost, BoostMode, Event


class StrictModel(BaseModel):
    model_config = ConfigDict(extra="forbid")


class ComplexNumber(StrictModel):
    re: float = Field(0.0, allow_inf_nan=False)
    im: float = Field(0.0, allow_inf_nan=False)

    def to_complex(self) -> complex:
        return complex(self.re, self.im)

    @classmethod
    def from_complex(cls, z: complex) -> "ComplexNumber":
        z = complex(z)
        return cls(re=z.real, im=z.imag)


def _widen_real(value):
    if isinstance(value, bool):
        return value
    if isinstance(value, (int, float)):
        return {"re": float(value), "im": 0.0}
    if isinstance(value, complex):
        return {"re": value.real, "im": value.imag}
    return value


ComplexIn = Annotated[ComplexNumber, BeforeValidator(_widen_real)]

ONE = ComplexNumber(re=1.0, im=0.0)

ModeName = Literal["option1", "option2", "general"]
UnitsName = Literal["natural", "si"]


class BoostParams(StrictModel):
    v: ComplexIn
    mode: ModeName = "option1"
    gauge_s: ComplexIn = ONE
    c: Optional[ComplexIn] = None
    units: UnitsName = "natural"

    def to_boost(self) -> Boost:
        return Boost(
            v=self.v.to_complex(),
            mode=BoostMode(self.mode),
            gauge_s=self.gauge_s.to_complex(),
            c=None if self.c is None else self.c.to_complex(),
            constants=constants_for(self.units),
        )


class EventModel(StrictModel):
    z: ComplexIn
    t: ComplexIn

    def to_event(self) -> Event:
        return Event(z=self.z.to_complex(), t=self.t.to_complex())

    @classmethod
    def from_event(cls, e: Event) -> "EventModel":
        return cls(
            z=ComplexNumber.from_complex(e.z), t=ComplexNumber.from_complex(e.t)
        )


class FourMomentumModel(StrictModel):
    E: ComplexIn
    p: ComplexIn


class WaveFourVectorModel(StrictModel):
    omega: ComplexIn
    k: ComplexIn


class SubjectPayload(StrictModel):
    """Exactly one of the three transformable objects."""

    event: Optional[EventModel] = None
    fourmomentum: Optional[FourMomentumModel] = None
    wavefourvector: Optional[WaveFourVectorModel] = None

    def _provided(self) -> list[str]:
        return [
            name
            for name in ("event", "fourmomentum", "wavefourvector")
            if getattr(self, name) is not None
        ]


class BoostRequest(SubjectPayload):
    boost: BoostParams
    inverse: bool = False

    @model_validator(mode="after")
    def _exactly_one_subject(self):
        provided = self._provided()
        if len(provided) != 1:
            raise ValueError(
                "provide exactly one of event, fourmomentum, wavefourvector"
            )
        return self


class BoostMetadata(StrictModel):
    mode: ModeName
    units: UnitsName
    c_squared: ComplexNumber
    radicand: ComplexNumber
    root: ComplexNumber
    gamma_gamma_bar: ComplexNumber
    near_branch_cut: bool
    superluminal: bool


class BoostResponse(StrictModel):
    boost: BoostParams
    inverse: bool
    subject: Literal["event", "fourmomentum", "wavefourvector"]
    input: SubjectPayload
    output: SubjectPayload
    metadata: BoostMetadata


class AddVelocitiesRequest(StrictModel):
    boost: BoostParams
    u: ComplexIn
    inverse: bool = False


class AddVelocitiesResponse(StrictModel):
    boost: BoostParams
    inverse: bool
    u: ComplexNumber
    result: ComplexNumber
    metadata: BoostMetadata


class MomentumRequest(StrictModel):
    boost: BoostParams
    m0: ComplexIn


class MomentumResponse(StrictModel):
    boost: BoostParams
    m0: ComplexNumber
    fourmomentum: FourMomentumModel
    invariant_mass_sq: ComplexNumber
    metadata: BoostMetadata


class DispersionRequest(StrictModel):
    """Either (k, m0) for the frequency branches or a four-momentum for
    mass extraction."""

    k: Optional[ComplexIn] = None
    m0: Optional[ComplexIn] = None
    fourmomentum: Optional[FourMomentumModel] = None
    gauge_s: ComplexIn = ONE
    c: Optional[ComplexIn] = None
    units: UnitsName = "natural"

    @model_validator(mode="after")
    def _one_form(self):
        roots_form = self.k is not None and self.m0 is not None
        invariant_form = self.fourmomentum is not None
        if roots_form == invariant_form:
            raise ValueError(
                "provide either k and m0 (frequency branches) or a "
                "fourmomentum (mass extraction), not both"
            )
        if not roots_form and (self.k is not None or self.m0 is not None):
            raise ValueError("k and m0 must be given together")
        return self


class DispersionRootsResponse(StrictModel):
    form: Literal["roots"] = "roots"
    k: ComplexNumber
    m0: ComplexNumber
    gauge_s: ComplexNumber
    units: UnitsName
    omega_plus: ComplexNumber
    omega_minus: ComplexNumber
    energy_retarded: ComplexNumber
    nonrel_expansion: Optional[ComplexNumber] = None
    near_branch_cut: bool = False


class DispersionInvariantResponse(StrictModel):
    form: Literal["invariant"] = "invariant"
    fourmomentum: FourMomentumModel
    gauge_s: ComplexNumber
    units: UnitsName
    invariant_mass_sq: ComplexNumber
    rest_mass: ComplexNumber


class GridSpec(StrictModel):
    z0: ComplexIn = ComplexNumber()
    theta: float = Field(0.0, allow_inf_nan=False)
    n: int = Field(64, ge=8)
    ds: float = Field(0.05, gt=0, allow_inf_nan=False)


class WaveCheckRequest(StrictModel):
    omega: ComplexIn
    k: ComplexIn
    amp: ComplexIn = ONE
    z: ComplexIn = ComplexNumber()
    t: ComplexIn = ComplexNumber()
    h: float = Field(1e-5, gt=0, allow_inf_nan=False)
    m0: Optional[ComplexIn] = None
    gauge_s: ComplexIn = ONE
    units: UnitsName = "natural"
    grid: Optional[GridSpec] = None
    dt: float = Field(0.01, gt=0, allow_inf_nan=False)
    equation: Literal["kgf", "dirac"] = "kgf"
    branch: Literal["retarded", "advanced"] = "retarded"

    @model_validator(mode="after")
    def _grid_needs_mass(self):
        if self.grid is not None and self.m0 is None:
            raise ValueError("grid residuals need m0")
        return self


class WaveCheckPointResponse(StrictModel):
    form: Literal["point"] = "point"
    value: ComplexNumber
    extracted: WaveFourVectorModel
    extraction_deviation: float
    extraction_error: float
    qhjt: FourMomentumModel
    kgf_residual: Optional[ComplexNumber] = None


class WaveCheckGridResponse(StrictModel):
    form: Literal["grid"] = "grid"
    equation: Literal["kgf", "dirac"]
    omega: ComplexNumber
    k: ComplexNumber
    max_residual: float
    rows: list[dict]


class CheckRequest(StrictModel):
    suite: str = "all"
    seed: int = 42
    samples: Optional[int] = Field(None, ge=1)
    units: UnitsName = "natural"


class IdentityResultModel(StrictModel):
    name: str
    samples: int
    max_deviation: float
    tolerance: float
    passed: bool


class CheckReportModel(StrictModel):
    suite: str
    seed: int
    passed: bool
    results: list[IdentityResultModel]
    notes: list[str]


class CheckResponse(StrictModel):
    passed: bool
    reports: list[CheckReportModel]


class TableRequest(StrictModel):
    curve: Literal["worldline-time", "dispersion", "nonrel-error"]
    start: Optional[float] = Field(None, allow_inf_nan=False)
    stop: Optional[float] = Field(None, allow_inf_nan=False)
    n: Optional[int] = Field(None, ge=1)
    m0: ComplexIn = ONE
    gauge_s: ComplexIn = ONE
    mode: ModeName = "option2"
    phase: float = Field(0.0, allow_inf_nan=False)
    units: UnitsName = "natural"


class TableResponse(StrictModel):
    curve: str
    rows: list[dict]


class ConstantsResponse(StrictModel):
    units: UnitsName
    c_mag: float
    hbar: float


class ErrorBody(StrictModel):
    code: str
    message: str
