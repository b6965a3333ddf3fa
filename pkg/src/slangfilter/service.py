"""HTTP review API consumed by the moderation UI and by scripts.

All mutations funnel through one lock and are persisted to the store
directory before the response goes out. The static moderation UI can be
mounted at the web root so the API stays same-origin.
"""
from __future__ import annotations

import threading
from pathlib import Path
from typing import Literal

from fastapi import FastAPI, HTTPException
from fastapi.middleware.cors import CORSMiddleware
from fastapi.staticfiles import StaticFiles
from pydantic import BaseModel

from .pipeline import PipelineConfig, apply_review, make_decision, process, report_to_dict
from .store import (
    append_audit,
    concept_to_json,
    load_store,
    persist_store,
    read_audit,
    slang_to_json,
    suspicious_to_json,
)


class FilterRequest(BaseModel):
    text: str


class DecisionRequest(BaseModel):
    action: Literal["confirm", "dismiss"]


def create_app(
    store_dir: str | Path,
    config: PipelineConfig = PipelineConfig(),
    ui_dir: str | Path | None = None,
) -> FastAPI:
    store_dir = Path(store_dir)
    bundle = load_store(store_dir)
    lock = threading.Lock()

    app = FastAPI(title="slangfilter review service")
    app.add_middleware(
        CORSMiddleware,
        allow_origins=["*"],
        allow_methods=["*"],
        allow_headers=["*"],
    )

    @app.get("/api/suspicious")
    def get_suspicious() -> list[dict]:
        with lock:
            return [suspicious_to_json(r) for r in bundle.suspicious]

    @app.get("/api/lexicon/slang")
    def get_slang() -> list[dict]:
        with lock:
            return [slang_to_json(e) for e in bundle.slang]

    @app.get("/api/concepts")
    def get_concepts() -> list[dict]:
        with lock:
            return [concept_to_json(e) for e in bundle.concepts]

    @app.get("/api/config")
    def get_config() -> dict:
        return {
            "mode": config.mode.value,
            "window_length": config.window.length,
            "threshold": config.learner.threshold,
            "default_weight": config.learner.default_weight,
            "soundalike_fallback": config.soundalike_fallback,
        }

    @app.get("/api/audit")
    def get_audit() -> list[dict]:
        with lock:
            return read_audit(store_dir)

    @app.post("/api/filter")
    def post_filter(request: FilterRequest) -> dict:
        with lock:
            report = process(request.text, bundle, config)
            if report.suspicion_hits or report.promotions:
                persist_store(bundle, store_dir)
            return report_to_dict(report)

    @app.post("/api/suspicious/{word}/decision")
    def post_decision(word: str, request: DecisionRequest) -> dict:
        with lock:
            decision = make_decision(word, request.action)
            try:
                apply_review(bundle, decision)
            except KeyError:
                raise HTTPException(
                    status_code=404, detail=f"no suspicious record for {word!r}"
                )
            persist_store(bundle, store_dir)
            append_audit(store_dir, decision.to_json())
            return decision.to_json()

    if ui_dir is not None:
        app.mount("/", StaticFiles(directory=ui_dir, html=True), name="ui")

    return app
