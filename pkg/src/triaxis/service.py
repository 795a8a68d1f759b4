"""Stateless HTTP facade over the engine.

Every POST endpoint accepts a full scenario document, or a partial one when
the service was started with a default scenario (the partial is merged over
the default shallowly, per top-level key). Responses always carry the
envelope ``{"ok": bool, "result": ...}`` or ``{"ok": false, "error":
{"category", "message", "field_path", "detail"}}`` and are serialized
canonically, so identical requests produce byte-identical bodies. Handlers
share only immutable state; nothing mutates between requests.
"""

from __future__ import annotations

import json
from typing import Any, Callable

from fastapi import FastAPI, Request, Response
from fastapi.exceptions import RequestValidationError
from fastapi.middleware.cors import CORSMiddleware
from starlette.exceptions import HTTPException as StarletteHTTPException

from . import reports
from .canonical import canonical_dumps
from .errors import InfeasibleError, TriaxisError, ValidationError
from .scenario import Scenario, scenario_from_dict

LOCAL_ORIGIN_REGEX = r"^https?://(localhost|127\.0\.0\.1)(:\d+)?$"


def _json_response(payload: dict, status_code: int = 200) -> Response:
    return Response(
        content=canonical_dumps(payload),
        status_code=status_code,
        media_type="application/json",
    )


def _ok(result: Any) -> Response:
    return _json_response({"ok": True, "result": result})


def _error(
    status_code: int,
    category: str,
    message: str,
    field_path: str | None = None,
    detail: Any = None,
) -> Response:
    return _json_response(
        {
            "ok": False,
            "error": {
                "category": category,
                "message": message,
                "field_path": field_path,
                "detail": detail,
            },
        },
        status_code=status_code,
    )


def create_app(
    default_document: dict | None = None,
    cors_origins: list[str] | None = None,
) -> FastAPI:
    """Build the service app, optionally around a default scenario document."""
    if default_document is not None:
        scenario_from_dict(default_document)  # fail fast on a bad default

    app = FastAPI(title="triaxis", docs_url=None, redoc_url=None, openapi_url=None)
    if cors_origins is not None:
        app.add_middleware(CORSMiddleware, allow_origins=cors_origins, allow_methods=["*"], allow_headers=["*"])
    else:
        app.add_middleware(
            CORSMiddleware,
            allow_origin_regex=LOCAL_ORIGIN_REGEX,
            allow_methods=["*"],
            allow_headers=["*"],
        )

    async def _scenario_from_request(request: Request) -> Scenario:
        content_type = request.headers.get("content-type", "")
        if not content_type.split(";")[0].strip() == "application/json":
            raise ValidationError(
                f"Content-Type must be application/json, got {content_type or 'none'}"
            )
        body = await request.body()
        try:
            document = json.loads(body.decode("utf-8"))
        except (UnicodeDecodeError, json.JSONDecodeError) as exc:
            raise ValidationError(f"request body is not valid JSON: {exc}") from None
        if not isinstance(document, dict):
            raise ValidationError("request body must be a JSON object")
        if default_document is not None:
            document = {**default_document, **document}
        return scenario_from_dict(document)

    @app.exception_handler(TriaxisError)
    async def _triaxis_error(request: Request, exc: TriaxisError) -> Response:
        status = {"validation": 400, "infeasible": 422}.get(exc.category, 500)
        return _error(status, exc.category, exc.message, exc.field_path)

    @app.exception_handler(StarletteHTTPException)
    async def _http_error(request: Request, exc: StarletteHTTPException) -> Response:
        category = "not_found" if exc.status_code in (404, 405) else "internal"
        return _error(exc.status_code, category, str(exc.detail))

    @app.exception_handler(RequestValidationError)
    async def _request_error(request: Request, exc: RequestValidationError) -> Response:
        return _error(400, "validation", "invalid request", None)

    @app.exception_handler(Exception)
    async def _unhandled(request: Request, exc: Exception) -> Response:
        # Never leak stack traces; the envelope carries only the class name.
        return _error(500, "internal", f"internal error: {type(exc).__name__}")

    @app.get("/health")
    async def health() -> Response:
        return _json_response({"ok": True})

    @app.get("/v1/archetypes")
    async def get_archetypes() -> Response:
        return _ok(reports.archetypes_report())

    @app.post("/v1/score")
    async def post_score(request: Request) -> Response:
        return _ok(reports.score_report(await _scenario_from_request(request)))

    @app.post("/v1/frontier")
    async def post_frontier(request: Request) -> Response:
        return _ok(reports.frontier_report(await _scenario_from_request(request)))

    @app.post("/v1/simulate")
    async def post_simulate(request: Request, plan: str | None = None) -> Response:
        scenario = await _scenario_from_request(request)
        if plan is None:
            if len(scenario.plans) == 1:
                plan = next(iter(scenario.plans))
            else:
                raise ValidationError(
                    "pass ?plan=NAME (the scenario defines "
                    f"{len(scenario.plans)} plans)",
                    field_path="plans",
                )
        return _ok(reports.simulate_report(scenario, plan))

    @app.post("/v1/satisfice")
    async def post_satisfice(request: Request) -> Response:
        report = reports.satisfice_report(await _scenario_from_request(request))
        if not report["feasible"]:
            return _error(
                422,
                "infeasible",
                "no option meets every threshold",
                field_path="thresholds",
                detail=report,
            )
        return _ok(report)

    @app.post("/v1/strategy")
    async def post_strategy(request: Request) -> Response:
        return _ok(reports.strategy_report(await _scenario_from_request(request)))

    @app.post("/v1/options")
    async def post_options(
        request: Request, specialized: str | None = None, generalized: str | None = None
    ) -> Response:
        scenario = await _scenario_from_request(request)
        if not specialized or not generalized:
            raise ValidationError(
                "pass ?specialized=NAME&generalized=NAME plan names", field_path="plans"
            )
        return _ok(reports.options_report(scenario, specialized, generalized))

    @app.post("/v1/household")
    async def post_household(request: Request) -> Response:
        return _ok(reports.household_report(await _scenario_from_request(request)))

    return app


def serve(
    host: str = "127.0.0.1",
    port: int = 8787,
    scenario_path: str | None = None,
    cors_origins: list[str] | None = None,
) -> None:
    """Run the service with uvicorn, optionally loading a default scenario."""
    import uvicorn

    default_document = None
    if scenario_path:
        with open(scenario_path, encoding="utf-8") as fh:
            default_document = json.load(fh)
    app = create_app(default_document=default_document, cors_origins=cors_origins)
    uvicorn.run(app, host=host, port=port, log_level="warning")
