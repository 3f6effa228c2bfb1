"""HTTP+JSON service over the engine, for scripts and the game frontend.

Endpoints:

    POST   /api/analyze          {"expr": ...}        -> analysis report
    POST   /api/equiv            {"a": ..., "b": ...} -> {"equivalent": bool}
    POST   /api/dance            {"target": "p/q"}    -> session state
    GET    /api/dance/<id>                            -> session state
    POST   /api/dance/<id>/move  {"move": "T"|"A"}    -> session state
    GET    /api/dance/<id>/hint                       -> {"move": "T"|"A"}
    DELETE /api/dance/<id>

Errors: 400 syntax/validation, 404 unknown session, 409 hint on a solved
game, 422 non-rational input. Analysis endpoints are pure; session moves
are serialized per session id by the store.
"""

from __future__ import annotations

import json
import os
import re
from http.server import BaseHTTPRequestHandler, ThreadingHTTPServer

from .cf import expand_fraction
from .coloring import closure_determinant, color_tangle
from .dance import Move, hint
from .errors import (
    AlreadySolved,
    NotRational,
    ParseError,
    SessionNotFound,
    TangleError,
)
from .fraction import Fraction
from .sessions import Session, SessionStore
from .tangle import INFINITY_TANGLE, canonical_form, equivalent, fraction_of, is_rational
from .textio import parse_fraction, parse_tangle

DEFAULT_PORT = 8642


def default_port() -> int:
    return int(os.environ.get("TANGLEKIT_PORT", DEFAULT_PORT))


def canonical_payload(x: Fraction) -> list[int]:
    """Canonical vector as JSON: the empty list marks the infinite tangle."""
    if x.is_infinite:
        return []
    return list(expand_fraction(x))


def state_payload(session: Session) -> dict:
    state = session.state
    return {
        "sessionId": session.id,
        "current": str(state.current),
        "target": str(state.target),
        "canonical": canonical_payload(state.current),
        "history": "".join(m.value for m in state.history),
        "solved": state.solved,
    }


def analysis_payload(text: str) -> dict:
    expr = parse_tangle(text)
    if not is_rational(expr):
        raise NotRational("expression is algebraic but not rational")
    x = fraction_of(expr)
    form = canonical_form(expr)
    if form is INFINITY_TANGLE:
        # the infinite tangle: no crossings; its closure is the unknot
        return {
            "expr": text,
            "fraction": "inf",
            "rational": True,
            "canonical": "infinity",
            "crossings": 0,
            "colorMatrix": {"nw": 0, "ne": 1, "sw": 0, "se": 1},
            "det": 1,
        }
    colored = color_tangle(form, 1, 0)
    return {
        "expr": text,
        "fraction": str(x),
        "rational": True,
        "canonical": list(form),
        "crossings": sum(abs(a) for a in form),
        "colorMatrix": colored.matrix.to_json(),
        "det": closure_determinant(colored),
    }


_SESSION_RE = re.compile(r"^/api/dance/([A-Za-z0-9_-]+)$")
_MOVE_RE = re.compile(r"^/api/dance/([A-Za-z0-9_-]+)/move$")
_HINT_RE = re.compile(r"^/api/dance/([A-Za-z0-9_-]+)/hint$")


class TangleRequestHandler(BaseHTTPRequestHandler):
    protocol_version = "HTTP/1.1"

    @property
    def store(self) -> SessionStore:
        return self.server.store  # type: ignore[attr-defined]

    def log_message(self, fmt, *args):  # quiet by default
        if getattr(self.server, "verbose", False):
            super().log_message(fmt, *args)

    # --- plumbing ---

    def _send_json(self, code: int, payload: dict) -> None:
        body = json.dumps(payload).encode("utf-8")
        self.send_response(code)
        self.send_header("Content-Type", "application/json")
        self.send_header("Content-Length", str(len(body)))
        self.send_header("Access-Control-Allow-Origin", "*")
        self.end_headers()
        self.wfile.write(body)

    def _read_json(self) -> dict:
        length = int(self.headers.get("Content-Length") or 0)
        raw = self.rfile.read(length) if length else b""
        try:
            payload = json.loads(raw.decode("utf-8")) if raw else {}
        except (ValueError, UnicodeDecodeError):
            raise _HttpError(400, "request body is not valid JSON") from None
        if not isinstance(payload, dict):
            raise _HttpError(400, "request body must be a JSON object")
        return payload

    def _field(self, payload: dict, name: str) -> str:
        value = payload.get(name)
        if not isinstance(value, str):
            raise _HttpError(400, f"missing string field {name!r}")
        return value

    def _handle(self, fn) -> None:
        try:
            code, payload = fn()
        except _HttpError as exc:
            self._send_json(exc.code, {"error": exc.message})
        except ParseError as exc:
            self._send_json(400, {"error": str(exc)})
        except NotRational as exc:
            self._send_json(422, {"error": str(exc)})
        except SessionNotFound as exc:
            self._send_json(404, {"error": str(exc)})
        except AlreadySolved as exc:
            self._send_json(409, {"error": str(exc)})
        except TangleError as exc:
            self._send_json(400, {"error": str(exc)})
        else:
            self._send_json(code, payload)

    # --- verbs ---

    def do_OPTIONS(self):
        self.send_response(204)
        self.send_header("Access-Control-Allow-Origin", "*")
        self.send_header("Access-Control-Allow-Methods", "GET, POST, DELETE, OPTIONS")
        self.send_header("Access-Control-Allow-Headers", "Content-Type")
        self.send_header("Content-Length", "0")
        self.end_headers()

    def do_POST(self):
        self._handle(self._post)

    def do_GET(self):
        self._handle(self._get)

    def do_DELETE(self):
        self._handle(self._delete)

    def _post(self) -> tuple[int, dict]:
        if self.path == "/api/analyze":
            payload = self._read_json()
            return 200, analysis_payload(self._field(payload, "expr"))
        if self.path == "/api/equiv":
            payload = self._read_json()
            a = parse_tangle(self._field(payload, "a"))
            b = parse_tangle(self._field(payload, "b"))
            return 200, {"equivalent": equivalent(a, b)}
        if self.path == "/api/dance":
            payload = self._read_json()
            target = parse_fraction(self._field(payload, "target"))
            session = self.store.create(target)
            return 201, state_payload(session)
        m = _MOVE_RE.match(self.path)
        if m:
            payload = self._read_json()
            text = self._field(payload, "move")
            try:
                move = Move(text)
            except ValueError:
                raise _HttpError(400, "move must be 'T' or 'A'") from None
            session = self.store.apply(m.group(1), move)
            return 200, state_payload(session)
        raise _HttpError(404, f"no such endpoint: POST {self.path}")

    def _get(self) -> tuple[int, dict]:
        m = _HINT_RE.match(self.path)
        if m:
            session = self.store.get(m.group(1))
            return 200, {"move": hint(session.state).value}
        m = _SESSION_RE.match(self.path)
        if m:
            return 200, state_payload(self.store.get(m.group(1)))
        raise _HttpError(404, f"no such endpoint: GET {self.path}")

    def _delete(self) -> tuple[int, dict]:
        m = _SESSION_RE.match(self.path)
        if m:
            self.store.delete(m.group(1))
            return 200, {"deleted": m.group(1)}
        raise _HttpError(404, f"no such endpoint: DELETE {self.path}")


class _HttpError(Exception):
    def __init__(self, code: int, message: str):
        super().__init__(message)
        self.code = code
        self.message = message


def make_server(port: int, store: SessionStore, verbose: bool = False) -> ThreadingHTTPServer:
    server = ThreadingHTTPServer(("127.0.0.1", port), TangleRequestHandler)
    server.store = store  # type: ignore[attr-defined]
    server.verbose = verbose  # type: ignore[attr-defined]
    return server


def serve(port: int | None = None, state_file: str | None = None) -> None:
    """Run the service until interrupted."""
    chosen = default_port() if port is None else port
    server = make_server(chosen, SessionStore(state_file), verbose=True)
    print(f"tanglekit API listening on http://127.0.0.1:{chosen}")
    try:
        server.serve_forever()
    except KeyboardInterrupt:
        pass
    finally:
        server.server_close()
