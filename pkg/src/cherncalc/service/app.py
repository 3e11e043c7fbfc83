"""HTTP compute service: one endpoint per calculator operation.

All computation is synchronous and CPU-bound; the service exists to give
the CLI (and scripts) a stable JSON interface.  Domain failures raise
CalculusError subclasses and map to 400 responses; malformed payloads are
rejected by the request models with 422.
"""

from __future__ import annotations

import math

from fastapi import FastAPI, Request
from fastapi.responses import JSONResponse

from .. import __version__
from ..chern_roots import (
    dual,
    lambda_k,
    schur_op,
    tensor,
    total_chern,
    universal_tensor_poly,
)
from ..errors import CalculusError, DomainError
from ..gamma import filtration_degree, gamma_series
from ..grassmann import boxed_rank, verify_presentation
from ..grr import run_verification
from ..partitions import lr_coefficient
from .schemas import (
    ChernTotalRequest,
    CoefficientResponse,
    DualRequest,
    FiltrationDegreeResponse,
    GammaDegreeRequest,
    GammaSeriesRequest,
    GrassmannianRequest,
    GrrVerifyRequest,
    HealthResponse,
    KClassModel,
    LambdaRequest,
    LrRequest,
    PolyModel,
    PresentationResponse,
    RankResponse,
    ReportModel,
    SchurRequest,
    SeriesModel,
    TensorRequest,
    UniversalPolyRequest,
)


def create_app() -> FastAPI:
    app = FastAPI(
        title="cherncalc",
        version=__version__,
        description="Exact Chern-class calculus on split virtual bundles.",
    )

    @app.exception_handler(CalculusError)
    async def _calculus_error(_request: Request, exc: CalculusError) -> JSONResponse:
        return JSONResponse(status_code=400, content={"detail": str(exc)})

    @app.get("/healthz", response_model=HealthResponse)
    def healthz() -> HealthResponse:
        return HealthResponse(status="ok")

    @app.post("/chern/total", response_model=SeriesModel)
    def chern_total(req: ChernTotalRequest) -> SeriesModel:
        series = total_chern(req.x.to_kclass(), trunc=req.degree, roots=req.roots)
        return SeriesModel.model_validate(series.to_json())

    @app.post("/chern/tensor", response_model=KClassModel)
    def chern_tensor(req: TensorRequest) -> KClassModel:
        return KClassModel.from_kclass(tensor(req.x.to_kclass(), req.y.to_kclass()))

    @app.post("/chern/lambda", response_model=KClassModel)
    def chern_lambda(req: LambdaRequest) -> KClassModel:
        return KClassModel.from_kclass(lambda_k(req.k, req.x.to_kclass()))

    @app.post("/chern/dual", response_model=KClassModel)
    def chern_dual(req: DualRequest) -> KClassModel:
        return KClassModel.from_kclass(dual(req.x.to_kclass()))

    @app.post("/schur", response_model=KClassModel)
    def schur(req: SchurRequest) -> KClassModel:
        return KClassModel.from_kclass(schur_op(tuple(req.mu), req.x.to_kclass()))

    @app.post("/universal-poly", response_model=PolyModel)
    def universal_poly(req: UniversalPolyRequest) -> PolyModel:
        poly = universal_tensor_poly(req.n, req.m, req.i)
        return PolyModel.model_validate(poly.to_json())

    @app.post("/lr", response_model=CoefficientResponse)
    def lr(req: LrRequest) -> CoefficientResponse:
        c = lr_coefficient(tuple(req.mu), tuple(req.eps), tuple(req.nu))
        return CoefficientResponse(coefficient=c)

    @app.post("/gamma/degree", response_model=FiltrationDegreeResponse)
    def gamma_degree(req: GammaDegreeRequest) -> FiltrationDegreeResponse:
        d = filtration_degree(req.x.to_kclass(), trunc=req.degree, roots=req.roots)
        return FiltrationDegreeResponse(degree="inf" if math.isinf(d) else int(d))

    @app.post("/gamma/series", response_model=SeriesModel)
    def gamma_series_coefficients(req: GammaSeriesRequest) -> SeriesModel:
        series = gamma_series(req.x.to_kclass(), trunc=req.degree, roots=req.roots)
        return SeriesModel.model_validate(series.to_json())

    @app.post("/grass/present", response_model=PresentationResponse)
    def grass_present(req: GrassmannianRequest) -> PresentationResponse:
        if req.n > 10:
            raise DomainError("presentation verification is limited to n <= 10")
        return PresentationResponse.model_validate(verify_presentation(req.m, req.n))

    @app.post("/grass/rank", response_model=RankResponse)
    def grass_rank(req: GrassmannianRequest) -> RankResponse:
        return RankResponse(rank=boxed_rank(req.m, req.n))

    @app.post("/grr/verify", response_model=list[ReportModel])
    def grr_verify(req: GrrVerifyRequest) -> list[ReportModel]:
        reports = run_verification(max_i=req.max_i, trunc=req.degree, seed=req.seed)
        return [ReportModel.model_validate(r.to_json()) for r in reports]

    return app


app = create_app()
