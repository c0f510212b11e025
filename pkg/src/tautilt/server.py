"""HTTP session service for interactive exchange-graph exploration.

Each session owns one algebra and the subgraph visited so far.  Mutation
requests within a session are serialized with a per-session lock; sessions
are otherwise independent and kept in memory only.
"""

from __future__ import annotations

import threading
import uuid

from fastapi import Body, FastAPI, HTTPException

from . import fileio, modules, mutation, pairs
from .errors import TauTiltError


class Session:
    def __init__(self, algebra):
        self.id = uuid.uuid4().hex[:12]
        self.algebra = algebra
        self.lock = threading.Lock()
        root = pairs.regular_pair(algebra)
        self.root_key = fileio.key_to_str(root.key())
        self.pairs = {self.root_key: root}
        self.arrows = []  # (from key str, to key str, position index)


def pair_summary(pair):
    key = fileio.key_to_str(pair.key())
    positions = []
    for i, pos in enumerate(pair.positions()):
        direction = mutation.position_direction(pair, pos)
        if pos[0] == "module":
            label = pairs.module_label(pair.summands[pos[1]])
        else:
            label = f"e{pair.algebra.vertex_names[pos[1]]}"
        positions.append(
            {
                "index": i,
                "kind": pos[0],
                "direction": direction,
                "label": label,
            }
        )
    return {
        "key": key,
        "label": pair.label(),
        "summands": [
            {
                "dims": list(m.dims),
                "gvector": list(modules.g_vector(m)),
                "label": pairs.module_label(m),
            }
            for m in pair.summands
        ],
        "support": pair.support_names(),
        "positions": positions,
    }


def create_app():
    app = FastAPI(title="tautilt session service")
    sessions = {}
    registry_lock = threading.Lock()

    def get_session(session_id):
        s = sessions.get(session_id)
        if s is None:
            raise HTTPException(status_code=404, detail="unknown session")
        return s

    @app.post("/session")
    def new_session(algebra_file: dict = Body(...)):
        try:
            algebra = fileio.load_algebra(algebra_file)
            session = Session(algebra)
        except TauTiltError as exc:
            raise HTTPException(status_code=400, detail=str(exc))
        with registry_lock:
            sessions[session.id] = session
        return {
            "sessionId": session.id,
            "rootKey": session.root_key,
            "pair": pair_summary(session.pairs[session.root_key]),
        }

    @app.get("/session/{session_id}/pair/{key}")
    def get_pair(session_id: str, key: str):
        session = get_session(session_id)
        pair = session.pairs.get(key)
        if pair is None:
            raise HTTPException(status_code=404, detail="unknown pair key")
        return pair_summary(pair)

    @app.post("/session/{session_id}/pair/{key}/mutate")
    def mutate_pair(session_id: str, key: str, body: dict = Body(...)):
        session = get_session(session_id)
        if "position" not in body:
            raise HTTPException(status_code=400, detail="position required")
        position = int(body["position"])
        with session.lock:
            pair = session.pairs.get(key)
            if pair is None:
                raise HTTPException(status_code=404, detail="unknown pair key")
            if not 0 <= position < len(pair.positions()):
                raise HTTPException(
                    status_code=400, detail="position out of range"
                )
            try:
                result, direction, _ = mutation.mutate(
                    pair, position, verify=False
                )
            except TauTiltError as exc:
                raise HTTPException(status_code=400, detail=str(exc))
            new_key = fileio.key_to_str(result.key())
            session.pairs.setdefault(new_key, result)
            arrow = (
                (key, new_key, position)
                if direction == "left"
                else (new_key, key, position)
            )
            if direction == "right":
                # store the arrow in left-mutation direction at the position
                # the target pair mutates back from
                back = next(
                    i
                    for i, pos in enumerate(result.positions())
                    if mutation.position_direction(result, pos) == "left"
                    and fileio.key_to_str(
                        mutation.mutate(result, pos, verify=False)[0].key()
                    )
                    == key
                )
                arrow = (new_key, key, back)
            if arrow not in session.arrows:
                session.arrows.append(arrow)
        return {
            "newKey": new_key,
            "direction": direction,
            "pair": pair_summary(result),
        }

    @app.get("/session/{session_id}/graph")
    def get_graph(session_id: str):
        session = get_session(session_id)
        with session.lock:
            vertices = {
                fileio.str_to_key(k): p for k, p in session.pairs.items()
            }
            arrows = [
                (fileio.str_to_key(a), fileio.str_to_key(b), pos)
                for a, b, pos in session.arrows
            ]
        graph = mutation.ExchangeGraph(
            session.algebra, vertices, sorted(arrows), complete=False
        )
        return fileio.graph_to_json(graph)

    @app.get("/session/{session_id}/order")
    def get_order(session_id: str, a: str, b: str):
        session = get_session(session_id)
        pa = session.pairs.get(a)
        pb = session.pairs.get(b)
        if pa is None or pb is None:
            raise HTTPException(status_code=404, detail="unknown pair key")
        return {"leq": pairs.leq(pa, pb), "geq": pairs.leq(pb, pa)}

    return app
