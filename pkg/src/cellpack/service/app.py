"""HTTP facade over the solver library.

Every endpoint is stateless: the instance travels with the request and the
response carries the full result, so any number of clients can share one
deployment.  Run with ``uvicorn cellpack.service.app:app`` or via the CLI's
``serve`` command.
"""

from __future__ import annotations

import time

from fastapi import FastAPI, HTTPException, Response

from .. import __version__
from ..approx import fptas
from ..core import Instance, InstanceError, LayoutError, RCSequence, eval_rc_sequence
from ..exact import brute_force_oracle, solve_dp, solve_dp_low_memory
from ..formulations import check_assignment, emit_model
from ..instgen import PartitionInput, gen_uniform, reduce_partition
from ..multidim import KInstance, solve_kdim_dp
from ..render import render_packing_svg
from . import schemas


def _instance(payload: schemas.InstanceIn) -> Instance:
    try:
        return Instance.from_lengths(payload.lengths, payload.strip_width)
    except InstanceError as exc:
        raise HTTPException(status_code=400, detail=str(exc)) from exc


def _instance_out(inst: Instance) -> schemas.InstanceOut:
    return schemas.InstanceOut(
        n=inst.n, strip_width=inst.strip_width, lengths=list(inst.original_lengths())
    )


def create_app() -> FastAPI:
    app = FastAPI(
        title="cellpack",
        version=__version__,
        description=(
            "Exact, approximate and model-emission solvers for packing squares "
            "into independent partition cells of a bounded-width strip."
        ),
    )

    @app.get("/health", response_model=schemas.HealthResponse)
    def health() -> schemas.HealthResponse:
        return schemas.HealthResponse(status="ok", version=__version__)

    @app.post("/instances/generate", response_model=schemas.GenerateResponse)
    def generate(req: schemas.GenerateRequest) -> schemas.GenerateResponse:
        items = []
        for offset in range(req.count):
            seed = req.seed + offset
            inst = gen_uniform(req.n, seed)
            items.append(schemas.GeneratedInstance(seed=seed, instance=_instance_out(inst)))
        return schemas.GenerateResponse(instances=items)

    @app.post("/instances/partition", response_model=schemas.PartitionResponse)
    def partition(req: schemas.PartitionRequest) -> schemas.PartitionResponse:
        try:
            inst, lam = reduce_partition(PartitionInput(tuple(req.values)))
        except InstanceError as exc:
            raise HTTPException(status_code=400, detail=str(exc)) from exc
        return schemas.PartitionResponse(instance=_instance_out(inst), lam=lam)

    @app.post("/solve", response_model=schemas.SolveResponse)
    def solve(req: schemas.SolveRequest) -> schemas.SolveResponse:
        inst = _instance(req.instance)
        started = time.perf_counter()
        try:
            if req.algo == "dp":
                sol = solve_dp(inst)
            elif req.algo == "oracle":
                sol = brute_force_oracle(inst)
            elif req.algo == "fptas":
                if req.eps is None:
                    raise HTTPException(status_code=400, detail="fptas requires eps")
                try:
                    sol = fptas(inst, req.eps)
                except (ValueError, TypeError, ZeroDivisionError) as exc:
                    raise HTTPException(status_code=400, detail=f"bad eps: {exc}") from exc
            elif req.algo == "dp-lowmem":
                height = solve_dp_low_memory(inst)
                elapsed = (time.perf_counter() - started) * 1000.0
                return schemas.SolveResponse(algo=req.algo, height=height, elapsed_ms=elapsed)
            else:  # kdim
                budgets = req.budgets or [inst.strip_width]
                try:
                    kinst = KInstance.from_lengths(inst.lengths, budgets)
                except InstanceError as exc:
                    raise HTTPException(status_code=400, detail=str(exc)) from exc
                height = solve_kdim_dp(kinst)
                elapsed = (time.perf_counter() - started) * 1000.0
                return schemas.SolveResponse(algo=req.algo, height=height, elapsed_ms=elapsed)
        except ValueError as exc:
            # e.g. the oracle size guard
            raise HTTPException(status_code=400, detail=str(exc)) from exc
        elapsed = (time.perf_counter() - started) * 1000.0
        return schemas.SolveResponse(
            algo=req.algo,
            height=sol.objective,
            width=sol.budget_used,
            shape=sol.shape,
            sequence=str(sol.rc_sequence),
            feasible=sol.budget_used <= inst.strip_width,
            elapsed_ms=elapsed,
        )

    @app.post("/models/emit", response_model=schemas.EmitResponse)
    def emit(req: schemas.EmitRequest) -> schemas.EmitResponse:
        inst = _instance(req.instance)
        doc = emit_model(inst, req.kind, req.variant)
        return schemas.EmitResponse(
            kind=req.kind,
            variant=req.variant,
            text=doc.text,
            variable_count=doc.variable_count,
            constraint_count=doc.constraint_count,
        )

    @app.post("/verify/sequence", response_model=schemas.VerifySequenceResponse)
    def verify_sequence(req: schemas.VerifySequenceRequest) -> schemas.VerifySequenceResponse:
        inst = _instance(req.instance)
        try:
            seq = RCSequence.from_string(req.sequence)
        except LayoutError as exc:
            raise HTTPException(status_code=400, detail=str(exc)) from exc
        width, height = eval_rc_sequence(seq, inst)
        return schemas.VerifySequenceResponse(
            width=width,
            height=height,
            strip_width=inst.strip_width,
            feasible=width <= inst.strip_width,
        )

    @app.post("/verify/assignment", response_model=schemas.VerifyAssignmentResponse)
    def verify_assignment(req: schemas.VerifyAssignmentRequest) -> schemas.VerifyAssignmentResponse:
        inst = _instance(req.instance)
        doc = emit_model(inst, req.kind, req.variant)
        try:
            feasible, objective, violated = check_assignment(doc, inst, req.assignment)
        except ValueError as exc:
            raise HTTPException(status_code=400, detail=str(exc)) from exc
        return schemas.VerifyAssignmentResponse(
            feasible=feasible, objective=objective, violated=violated
        )

    @app.post("/render")
    def render(req: schemas.RenderRequest) -> Response:
        inst = _instance(req.instance)
        try:
            seq = RCSequence.from_string(req.sequence)
        except LayoutError as exc:
            raise HTTPException(status_code=400, detail=str(exc)) from exc
        svg = render_packing_svg(inst, seq, scale=req.scale)
        return Response(content=svg, media_type="image/svg+xml")

    return app


app = create_app()
