"""Pydantic models for command run reports."""

from __future__ import annotations

from pydantic import BaseModel, ConfigDict, Field


class Verdicts(BaseModel):
    """Outcome of each requested verification; None means not requested."""

    model_config = ConfigDict(extra="forbid")

    marking_certificate: bool | None = Field(
        default=None, description="A strictly separating weight vector was found"
    )
    certificate_weights: list[str] | None = Field(
        default=None, description="The certificate as rationals p/q, one per presentation variable"
    )
    members_in_ideal: bool | None = Field(
        default=None, description="Every basis element lies in the toric ideal"
    )
    s_pairs_reduce_to_zero: bool | None = Field(
        default=None, description="Every S-pair of the basis reduces to zero modulo the basis"
    )
    oracle_agreement: bool | None = Field(
        default=None, description="Every oracle generator reduces to zero modulo the basis"
    )
    matches_oracle_basis: bool | None = Field(
        default=None,
        description="Buchberger under the certified order returns the identical marked set",
    )
    squarefree_initial_ideal: bool | None = Field(
        default=None, description="All minimal initial ideal generators are squarefree"
    )
    fiber_preserved: bool | None = Field(
        default=None, description="Every visited walk state stayed in the starting fiber"
    )

    def requested(self) -> dict[str, bool]:
        """Verdicts that were actually computed."""
        return {
            name: value
            for name, value in self.model_dump(exclude={"certificate_weights"}).items()
            if value is not None
        }

    @property
    def passed(self) -> bool:
        return all(self.requested().values())


class RunReport(BaseModel):
    """Summary of one command invocation."""

    model_config = ConfigDict(extra="forbid")

    command: list[str] = Field(description="Command line arguments as given")
    input_digests: dict[str, str] = Field(
        default_factory=dict, description="SHA-256 digest per input file"
    )
    mode: str | None = Field(default=None, description="Construction mode for nested runs")
    order: str | None = Field(default=None, description="Monomial order used for the output")
    basis_size: int | None = Field(default=None, ge=0, description="Number of output binomials")
    max_degree: int | None = Field(default=None, ge=0, description="Largest binomial degree")
    configuration_size: int | None = Field(
        default=None, ge=0, description="Number of configuration members"
    )
    steps: int | None = Field(default=None, ge=0, description="Fiber walk steps")
    seed: int | None = Field(default=None, ge=0, description="Random seed")
    verdicts: Verdicts = Field(default_factory=Verdicts)
    wall_time_seconds: float = Field(default=0.0, ge=0, description="Elapsed wall time")
