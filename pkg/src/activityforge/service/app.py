"""HTTP+JSON API over the activity service.

Teacher endpoints require a bearer token mapped to the "teacher" role in
the config; student play and answer submission are anonymous (children do
not register, and nothing about them is stored).
"""

from __future__ import annotations

from fastapi import Depends, FastAPI, Header, Query, Request
from fastapi.responses import JSONResponse
from pydantic import BaseModel, Field

from ..errors import (
    ActivityError,
    AuthError,
    EditRejected,
    ExpansionError,
    ForgeError,
    GenerationTimeout,
    InsufficientVocabularyError,
    LifecycleError,
    NotFoundError,
    ReviewError,
)
from .activities import ActivityService
from .config import ServiceConfig


class FromVocabularyBody(BaseModel):
    kind: str
    tags: list[str] = Field(min_length=1)
    params: dict = Field(default_factory=dict)
    seed: int = 0


class FromTextBody(BaseModel):
    kind: str
    text: str
    params: dict = Field(default_factory=dict)
    seed: int = 0


class EditPatchBody(BaseModel):
    edits: dict


class AnswerBody(BaseModel):
    answer: dict


class ExpandBody(BaseModel):
    category: str
    params: dict = Field(default_factory=dict)


class ReviewBody(BaseModel):
    word: str
    decision: str
    definitions: list[str] | None = None
    category: str | None = None


def create_app(config: ServiceConfig, service: ActivityService | None = None) -> FastAPI:
    app = FastAPI(title="activityforge", version="0.1.0")
    svc = service if service is not None else ActivityService(config)
    app.state.service = svc

    def require_teacher(authorization: str | None = Header(default=None)) -> str:
        token = None
        if authorization and authorization.lower().startswith("bearer "):
            token = authorization[7:].strip()
        role = config.role_for(token)
        if role is None:
            raise AuthError("missing or unknown bearer token")
        if role != "teacher":
            raise AuthError(f"role {role!r} may not manage activities")
        return role

    @app.exception_handler(ForgeError)
    async def forge_error_handler(_request: Request, exc: ForgeError):
        if isinstance(exc, NotFoundError):
            status = 404
        elif isinstance(exc, AuthError):
            status = 401
        elif isinstance(exc, LifecycleError):
            status = 409
        elif isinstance(exc, EditRejected):
            return JSONResponse(status_code=422,
                                content={"error": str(exc), "violations": exc.violations})
        elif isinstance(exc, GenerationTimeout):
            return JSONResponse(status_code=504,
                                content={"error": str(exc), "stage": exc.stage})
        elif isinstance(exc, (InsufficientVocabularyError, ActivityError, ExpansionError,
                              ReviewError)):
            status = 422
        else:
            status = 400
        return JSONResponse(status_code=status, content={"error": str(exc)})

    @app.get("/healthz")
    def healthz():
        return {"status": "ok"}

    @app.post("/activities/from-vocabulary", status_code=201)
    def from_vocabulary(body: FromVocabularyBody):
        activity = svc.create_from_vocabulary(body.kind, body.tags, body.params, body.seed)
        return activity.to_record()

    @app.post("/activities/from-text", status_code=201)
    def from_text(body: FromTextBody, _role: str = Depends(require_teacher)):
        activity = svc.create_from_text(body.kind, body.text, body.params, body.seed)
        return activity.to_record()

    @app.patch("/activities/{activity_id}")
    def patch_activity(activity_id: str, body: EditPatchBody,
                       _role: str = Depends(require_teacher)):
        return svc.apply_edit(activity_id, body.edits).to_record()

    @app.post("/activities/{activity_id}/publish")
    def publish(activity_id: str, _role: str = Depends(require_teacher)):
        return svc.publish(activity_id).to_record()

    @app.get("/activities/{activity_id}/playable")
    def playable(activity_id: str):
        return svc.playable(activity_id)

    @app.post("/activities/{activity_id}/answers")
    def answers(activity_id: str, body: AnswerBody):
        return svc.submit_answer(activity_id, body.answer)

    @app.get("/activities/{activity_id}")
    def get_activity(activity_id: str, _role: str = Depends(require_teacher)):
        return svc.get(activity_id).to_record()

    @app.get("/activities")
    def list_activities(state: str | None = Query(default=None),
                        kind: str | None = Query(default=None)):
        return {"activities": svc.list(state, kind)}

    @app.get("/vocabulary")
    def vocabulary(tags: str = Query(...), mode: str = Query(default="any"),
                   difficulty: str | None = Query(default=None),
                   _role: str = Depends(require_teacher)):
        tag_list = [t for t in (s.strip() for s in tags.split(",")) if t]
        entries = svc.query_vocabulary(tag_list, mode, difficulty)
        return {"entries": [e.to_record() for e in entries]}

    @app.post("/vocabulary/expand")
    def vocab_expand(body: ExpandBody, _role: str = Depends(require_teacher)):
        candidates = svc.expand_vocabulary(body.category, body.params)
        return {
            "candidates": [
                {
                    "word": c.word,
                    "category": c.category,
                    "similarity": c.similarity,
                    "frequency_rank": c.frequency_rank,
                    "status": c.status,
                }
                for c in candidates
            ]
        }

    @app.post("/vocabulary/review")
    def vocab_review(body: ReviewBody, _role: str = Depends(require_teacher)):
        reviewed = svc.review_vocabulary(body.word, body.decision, body.definitions, body.category)
        return {"word": reviewed.word, "category": reviewed.category, "status": reviewed.status}

    # optional static mounts: image assets and the built webapp
    if config.asset_dir is not None and config.asset_dir.is_dir():
        from fastapi.staticfiles import StaticFiles

        app.mount("/assets", StaticFiles(directory=config.asset_dir), name="assets")
    if config.webapp_dir is not None and config.webapp_dir.is_dir():
        from fastapi.staticfiles import StaticFiles

        app.mount("/app", StaticFiles(directory=config.webapp_dir, html=True), name="webapp")

    return app
