"""Endpoint handlers: thin orchestration over the library functions."""

from __future__ import annotations

import time

from fastapi import APIRouter, HTTPException

from ..conjecture import CorruptCheckpointError, SearchConfig, SearchMode, search
from ..mcount import (
    MResult,
    fine_check,
    m_closed,
    m_count_bruteforce,
    m_count_pruned,
)
from ..partitions import to_parts
from .schemas import (
    FineRequest,
    FineResponse,
    FineResult,
    McountRequest,
    McountResponse,
    McountResult,
    TableRequest,
    TableResponse,
    TableResult,
    TableRow,
    VerifyRequest,
    VerifyResponse,
    VerifyResult,
)

router = APIRouter()

_WIRE_MODES = {
    "gcd-conjecture": SearchMode.GCD_CONJECTURE,
    "lemma1": SearchMode.LEMMA1,
}


@router.get("/")
def index() -> dict:
    return {
        "service": "multicount",
        "endpoints": ["/mcount", "/fine", "/verify", "/table"],
    }


def _witness_wire(res: MResult) -> list[list[int]]:
    assert res.witnesses is not None
    return [list(to_parts(v)) for v in res.witnesses]


@router.post("/mcount", response_model=McountResponse)
def mcount_endpoint(req: McountRequest) -> McountResponse:
    t0 = time.perf_counter()
    closed = m_closed(req.m, req.n, req.k)
    if req.method == "closed":
        if req.witnesses:
            raise HTTPException(
                status_code=422,
                detail="closed forms count without enumerating; witnesses need "
                "method 'brute' or 'auto'",
            )
        if closed is None:
            raise HTTPException(
                status_code=422,
                detail=f"no closed form applies to m={req.m}",
            )
        result = McountResult(count=closed)
        method = "closed-form"
    elif req.method == "brute":
        res = m_count_bruteforce(req.m, req.n, req.k, witnesses=req.witnesses)
        result = McountResult(
            count=res.count,
            witnesses=_witness_wire(res) if req.witnesses else None,
        )
        method = "brute-force"
    else:  # auto: prefer the formula, enumerate otherwise
        if closed is not None and not req.witnesses:
            result = McountResult(count=closed)
            method = "closed-form"
        else:
            res = m_count_pruned(req.m, req.n, req.k, witnesses=req.witnesses)
            result = McountResult(
                count=res.count,
                witnesses=_witness_wire(res) if req.witnesses else None,
            )
            method = "brute-force"
    return McountResponse(
        inputs=req, method=method, result=result, elapsed=time.perf_counter() - t0
    )


@router.post("/fine", response_model=FineResponse)
def fine_endpoint(req: FineRequest) -> FineResponse:
    t0 = time.perf_counter()
    pairs = 0
    failure = None
    for n in range(1, req.n_max + 1):
        for k in range(1, n + 1):
            pairs += 1
            if not fine_check(n, k):
                failure = (n, k)
                break
        if failure:
            break
    return FineResponse(
        inputs=req,
        result=FineResult(ok=failure is None, pairs_checked=pairs, first_failure=failure),
        elapsed=time.perf_counter() - t0,
    )


@router.post("/verify", response_model=VerifyResponse)
def verify_endpoint(req: VerifyRequest) -> VerifyResponse:
    t0 = time.perf_counter()
    try:
        config = SearchConfig(
            mode=_WIRE_MODES[req.mode],
            n_max=req.n_max,
            n_min=req.n_min,
            workers=req.workers,
            checkpoint_path=req.checkpoint,
            checkpoint_interval=req.checkpoint_interval,
        )
        report = search(config, resume=req.resume)
    except CorruptCheckpointError as exc:
        raise HTTPException(
            status_code=409,
            detail={"code": "corrupt-checkpoint", "message": str(exc)},
        ) from exc
    except FileNotFoundError as exc:
        raise HTTPException(
            status_code=422, detail=f"checkpoint file not found: {exc.filename}"
        ) from exc
    except ValueError as exc:
        raise HTTPException(status_code=422, detail=str(exc)) from exc
    return VerifyResponse(
        inputs=req,
        result=VerifyResult(
            verified_up_to=report.verified_up_to,
            counterexamples=list(report.counterexamples),
            pairs_checked=report.pairs_checked,
            fast_path_hits=report.fast_path_hits,
            checkpoint_error=report.checkpoint_error,
        ),
        elapsed=time.perf_counter() - t0,
    )


@router.post("/table", response_model=TableResponse)
def table_endpoint(req: TableRequest) -> TableResponse:
    t0 = time.perf_counter()
    rows: list[TableRow] = []
    for n in range(1, req.n_max + 1):
        for k in range(1, n + 1):
            closed = m_closed(req.m, n, k)
            if closed is not None:
                count, method = closed, "closed-form"
            else:
                count, method = m_count_pruned(req.m, n, k).count, "brute-force"
            if count > 0:
                rows.append(TableRow(n=n, k=k, count=count, method=method))
    return TableResponse(
        inputs=req,
        result=TableResult(rows=rows),
        elapsed=time.perf_counter() - t0,
    )
