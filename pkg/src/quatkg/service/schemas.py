"""Pydantic request/response models shared by the HTTP service and the CLI."""

from __future__ import annotations

from typing import Annotated, Literal, Optional, Union

from pydantic import BaseModel, Field

Vec4 = Annotated[list[float], Field(min_length=4, max_length=4)]
Vec3 = Annotated[list[float], Field(min_length=3, max_length=3)]
Sign = Literal[1, -1]

ZERO4: list[float] = [0.0, 0.0, 0.0, 0.0]


class FreeSolveRequest(BaseModel):
    kind: Literal["free"] = "free"
    m: float = Field(ge=0)
    theta: Vec4 = Field(default_factory=lambda: list(ZERO4))
    theta0: float = 0.0
    k0_spatial: Vec3
    k1_spatial: Vec3
    sign0: Sign = 1
    sign1: Sign = 1
    phi0: float = 0.0
    tol: float = Field(default=1e-10, gt=0)


class ElectricSolveRequest(BaseModel):
    kind: Literal["electric"]
    m: float = Field(ge=0)
    a0: float
    theta: Vec4 = Field(default_factory=lambda: list(ZERO4))
    theta0: float = 0.0
    k0_spatial: Vec3
    k1_spatial: Vec3
    sign0: Sign = 1
    sign1: Sign = 1
    phi0: float = 0.0
    tol: float = Field(default=1e-10, gt=0)


class ConstantSolveRequest(BaseModel):
    kind: Literal["constant_quaternionic"]
    variant: Literal["simple", "conjugate_pair", "temporal"]
    m: float = Field(ge=0)
    b_re: Vec4
    b_im: Vec4 = Field(default_factory=lambda: list(ZERO4))
    theta: Vec4 = Field(default_factory=lambda: list(ZERO4))
    theta0: float = 0.0
    k0_spatial: Optional[Vec3] = None
    k1_spatial: Optional[Vec3] = None
    k_spatial: Optional[Vec3] = None
    sign0: Sign = 1
    sign1: Sign = 1
    phi0: float = 0.0
    tol: float = Field(default=1e-10, gt=0)


class OscillatingSolveRequest(BaseModel):
    kind: Literal["oscillating"]
    m: float = Field(ge=0)
    beta: Vec4
    theta: Vec4 = Field(default_factory=lambda: list(ZERO4))
    theta0: float = 0.0
    k_spatial: Vec3
    sign: Sign = 1
    tol: float = Field(default=1e-10, gt=0)


SolveRequest = Annotated[
    Union[FreeSolveRequest, ElectricSolveRequest, ConstantSolveRequest,
          OscillatingSolveRequest],
    Field(discriminator="kind"),
]


class PotentialDocument(BaseModel):
    a: Vec4 = Field(default_factory=lambda: list(ZERO4))
    b_re: Vec4 = Field(default_factory=lambda: list(ZERO4))
    b_im: Vec4 = Field(default_factory=lambda: list(ZERO4))
    beta: Optional[Vec4] = None
    kref: Optional[Vec4] = None


class SolutionDocument(BaseModel):
    """Serialized solution; re-ingested by verify/current/lightcone without loss."""

    scenario: str = "free"
    m: float
    theta: Vec4
    theta0: float
    k0: Vec4
    k1: Vec4
    phi0: float
    potential: Optional[PotentialDocument] = None


class SolveResponse(BaseModel):
    solution: SolutionDocument
    diagnostics: dict[str, float] = Field(default_factory=dict)
    massive_light_cone: bool = False


class CurrentRequest(BaseModel):
    solution: SolutionDocument
    n: int = Field(default=50, gt=0)
    seed: int = 0
    box: float = Field(default=1.0, gt=0)
    unnormalized: bool = False


class CurrentResponse(BaseModel):
    csv: str
    max_continuity_residual: float


class ScatterRequest(BaseModel):
    n: int = Field(default=0, ge=0)
    seed: int = 0
    beta: Optional[float] = None
    phiT: Optional[float] = None
    delta: Optional[float] = None
    beta_min: float = -0.99
    beta_max: float = 5.0
    tol: float = Field(default=1e-12, gt=0)


class ScatterResponse(BaseModel):
    csv: str
    max_unitarity_residual: float
    max_phase_residual: float
    unitary: bool


class VerifyRequest(BaseModel):
    solution: SolutionDocument
    hs: list[float] = Field(default_factory=lambda: [0.1, 0.05, 0.025])
    n_points: int = Field(default=20, gt=0)
    seed: int = 0
    box: float = Field(default=0.5, gt=0)
    expected_order: float = 2.0
    slack: float = 0.2


class VerifyResponse(BaseModel):
    order: Optional[float]
    machine_precision: bool
    passed: bool
    csv: str


class LightconeRequest(BaseModel):
    solution: SolutionDocument
    tol: float = Field(default=1e-10, gt=0)


class LightconeResponse(BaseModel):
    k0_null: bool
    k1_null: bool
    cross_null: bool
    light_cone: bool
    massive_light_cone: bool


class ErrorDetail(BaseModel):
    error: str
    message: str
    which: Optional[str] = None
    residual: Optional[float] = None
