"""
HTTP/JSON API over the store and summary engine.

All error responses, whatever the path, share one body shape:

    {"status": int, "code": str, "message": str, "details": [...]?}

Mutations are serialized through a single writer lock; reads operate on
a consistent in-memory snapshot.
"""

from __future__ import annotations

import threading
from datetime import date
from pathlib import Path

from fastapi import FastAPI, Request
from fastapi.exceptions import RequestValidationError
from fastapi.middleware.cors import CORSMiddleware
from fastapi.responses import JSONResponse, Response
from fastapi.staticfiles import StaticFiles
from starlette.exceptions import HTTPException as StarletteHTTPException

from . import store as store_mod
from . import summary as summary_mod
from .config import ServerConfig
from .model import ValidationError
from .store import EventStore
from .summary import Period, SummaryQuery, catchup, summarize, summary_to_dict


class ApiError(Exception):
    def __init__(self, status: int, code: str, message: str, details: list | None = None):
        super().__init__(message)
        self.status = status
        self.code = code
        self.message = message
        self.details = details

    def to_response(self) -> JSONResponse:
        body = {"status": self.status, "code": self.code, "message": self.message}
        if self.details is not None:
            body["details"] = self.details
        return JSONResponse(body, status_code=self.status)


def _parse_date(value: str, name: str) -> date:
    try:
        return date.fromisoformat(value)
    except ValueError:
        raise ApiError(400, "invalid_date", f"{name} is not a valid YYYY-MM-DD date: {value!r}")


def _require_param(request: Request, name: str) -> str:
    value = request.query_params.get(name)
    if value is None:
        raise ApiError(400, "missing_parameter", f"query parameter {name!r} is required")
    return value


def _parse_bool(value: str, name: str) -> bool:
    lowered = value.lower()
    if lowered in ("true", "1"):
        return True
    if lowered in ("false", "0"):
        return False
    raise ApiError(400, "invalid_parameter", f"{name} must be true or false, got {value!r}")


async def _json_body(request: Request) -> dict:
    try:
        body = await request.json()
    except Exception:
        raise ApiError(400, "invalid_json", "request body is not valid JSON")
    if not isinstance(body, dict):
        raise ApiError(400, "invalid_json", "request body must be a JSON object")
    return body


def create_app(store: EventStore, config: ServerConfig, ui_dir: str | Path | None = None) -> FastAPI:
    app = FastAPI(title="happening", docs_url=None, redoc_url=None)
    write_lock = threading.Lock()

    app.add_middleware(
        CORSMiddleware,
        allow_origins=config.cors_origins,
        allow_methods=["*"],
        allow_headers=["*"],
    )

    @app.middleware("http")
    async def check_auth(request: Request, call_next):
        path = request.url.path
        if (
            config.auth_token
            and path.startswith("/api")
            and path != "/api/health"
            and request.method != "OPTIONS"
        ):
            header = request.headers.get("authorization", "")
            if header != f"Bearer {config.auth_token}":
                return ApiError(401, "unauthorized", "missing or invalid bearer token").to_response()
        return await call_next(request)

    @app.exception_handler(ApiError)
    async def handle_api_error(request: Request, exc: ApiError):
        return exc.to_response()

    @app.exception_handler(StarletteHTTPException)
    async def handle_http_exception(request: Request, exc: StarletteHTTPException):
        return ApiError(exc.status_code, "http_error", str(exc.detail)).to_response()

    @app.exception_handler(RequestValidationError)
    async def handle_request_validation(request: Request, exc: RequestValidationError):
        return ApiError(400, "invalid_request", "malformed request").to_response()

    # ------------------------------------------------------------------
    # Events
    # ------------------------------------------------------------------

    @app.post("/api/events", status_code=201)
    async def create_event(request: Request):
        body = await _json_body(request)
        author = body.get("author")
        if not isinstance(author, str) or author not in store.members:
            raise ApiError(404, "unknown_author", f"unknown author: {author!r}")
        try:
            with write_lock:
                event = store.append_event(
                    author=author,
                    description=body.get("description", ""),
                    priority_level=body.get("priority"),
                    event_date=body.get("event_date", ""),
                )
        except ValidationError as exc:
            raise ApiError(400, "validation_failed", "event input is invalid", details=exc.violations)
        return JSONResponse(event.to_payload(), status_code=201)

    @app.delete("/api/events/{event_id}", status_code=204)
    async def delete_event(event_id: int, request: Request):
        requester = request.headers.get("x-member-id", "")
        try:
            with write_lock:
                store.delete_event(event_id, requester)
        except store_mod.NotFound:
            raise ApiError(404, "not_found", f"no live event with id {event_id}")
        except store_mod.Forbidden:
            raise ApiError(403, "forbidden", "only the author may delete an event")
        return Response(status_code=204)

    # ------------------------------------------------------------------
    # Summaries
    # ------------------------------------------------------------------

    @app.get("/api/summary")
    async def get_summary(request: Request):
        start = _parse_date(_require_param(request, "from"), "from")
        end = _parse_date(_require_param(request, "to"), "to")
        if start > end:
            raise ApiError(400, "invalid_range", f"from {start} is after to {end}")
        hide_stale = True
        if "hide_stale" in request.query_params:
            hide_stale = _parse_bool(request.query_params["hide_stale"], "hide_stale")
        as_of = config.today()
        if "as_of" in request.query_params:
            as_of = _parse_date(request.query_params["as_of"], "as_of")
        query = SummaryQuery(period=Period(start, end), hide_stale=hide_stale, as_of=as_of)
        result = summarize(store.scan_events(), store.members, query, config.policy)
        return JSONResponse(summary_to_dict(result))

    @app.get("/api/catchup")
    async def get_catchup(request: Request):
        member = _require_param(request, "member")
        since = _parse_date(_require_param(request, "since"), "since")
        hide_stale = True
        if "hide_stale" in request.query_params:
            hide_stale = _parse_bool(request.query_params["hide_stale"], "hide_stale")
        as_of = config.today()
        if "as_of" in request.query_params:
            as_of = _parse_date(request.query_params["as_of"], "as_of")
        try:
            result = catchup(
                store.scan_events(),
                store.members,
                member=member,
                since=since,
                as_of=as_of,
                policy=config.policy,
                hide_stale=hide_stale,
            )
        except summary_mod.UnknownMember:
            raise ApiError(404, "unknown_member", f"unknown member: {member!r}")
        except summary_mod.InvalidRange:
            raise ApiError(400, "invalid_range", f"since {since} is after as_of {as_of}")
        return JSONResponse(summary_to_dict(result))

    # ------------------------------------------------------------------
    # Members
    # ------------------------------------------------------------------

    @app.get("/api/members")
    async def list_members(request: Request):
        members = sorted(store.members.values(), key=lambda m: m.id)
        return JSONResponse([{"id": m.id, "display_name": m.display_name} for m in members])

    @app.post("/api/members", status_code=201)
    async def create_member(request: Request):
        body = await _json_body(request)
        member_id = body.get("id")
        display_name = body.get("display_name")
        if not isinstance(member_id, str) or not isinstance(display_name, str):
            raise ApiError(400, "validation_failed", "id and display_name must be strings")
        try:
            with write_lock:
                member = store.add_member(member_id, display_name)
        except store_mod.DuplicateMember:
            raise ApiError(409, "duplicate_member", f"member {member_id!r} already exists")
        except ValueError as exc:
            raise ApiError(400, "validation_failed", str(exc))
        return JSONResponse({"id": member.id, "display_name": member.display_name}, status_code=201)

    # ------------------------------------------------------------------
    # Misc
    # ------------------------------------------------------------------

    @app.get("/api/health")
    async def health(request: Request):
        return JSONResponse({"status": "ok", "events": store.live_count})

    if ui_dir is not None and Path(ui_dir).is_dir():
        app.mount("/", StaticFiles(directory=str(ui_dir), html=True), name="ui")

    return app
