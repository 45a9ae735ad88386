"""Request/response models shared by the HTTP service and the CLI.

Every response is an OutputRecord-style envelope: the command name, an
echo of the validated inputs, the result payload, an optional method tag
("closed-form" when a formula produced the number, "brute-force" when an
enumeration did), and elapsed seconds.  Witness partitions travel as
non-increasing parts lists, e.g. [7, 2, 1].
"""

from __future__ import annotations

from typing import Literal, Optional

from pydantic import BaseModel, ConfigDict, Field

MethodTag = Literal["closed-form", "brute-force"]


class _Strict(BaseModel):
    model_config = ConfigDict(extra="forbid")


class McountRequest(_Strict):
    m: int = Field(ge=1)
    n: int = Field(ge=1)
    k: int = Field(ge=1)
    witnesses: bool = False
    method: Literal["auto", "closed", "brute"] = "auto"


class McountResult(BaseModel):
    count: int
    witnesses: Optional[list[list[int]]] = None


class McountResponse(BaseModel):
    command: Literal["mcount"] = "mcount"
    inputs: McountRequest
    method: MethodTag
    result: McountResult
    elapsed: float


class FineRequest(_Strict):
    n_max: int = Field(ge=1)


class FineResult(BaseModel):
    ok: bool
    pairs_checked: int
    first_failure: Optional[tuple[int, int]] = None


class FineResponse(BaseModel):
    command: Literal["fine"] = "fine"
    inputs: FineRequest
    result: FineResult
    elapsed: float


class VerifyRequest(_Strict):
    mode: Literal["gcd-conjecture", "lemma1"]
    n_max: int = Field(ge=4)
    n_min: int = Field(default=4, ge=4)
    workers: int = Field(default=1, ge=1)
    checkpoint: Optional[str] = None
    checkpoint_interval: int = Field(default=500, ge=1)
    resume: bool = False


class VerifyResult(BaseModel):
    verified_up_to: int
    counterexamples: list[tuple[int, int]]
    pairs_checked: int
    fast_path_hits: int
    checkpoint_error: Optional[str] = None


class VerifyResponse(BaseModel):
    command: Literal["verify"] = "verify"
    inputs: VerifyRequest
    result: VerifyResult
    elapsed: float


class TableRequest(_Strict):
    m: int = Field(ge=1)
    n_max: int = Field(ge=1)


class TableRow(BaseModel):
    n: int
    k: int
    count: int
    method: MethodTag


class TableResult(BaseModel):
    rows: list[TableRow]


class TableResponse(BaseModel):
    command: Literal["table"] = "table"
    inputs: TableRequest
    result: TableResult
    elapsed: float
