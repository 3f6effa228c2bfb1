"""Game session store: in-memory, with an optional append-only snapshot.

Only the target and the move word are persisted — the rest of the state is
derivable by replaying the word from 0. Mutations are serialized per
session id; distinct sessions proceed in parallel.
"""

from __future__ import annotations

import json
import secrets
import threading
import time
from dataclasses import dataclass

from .dance import DanceState, Move, apply_move, replay, word_from_text, word_to_text
from .errors import ParseError, SessionNotFound, SnapshotCorrupt
from .fraction import Fraction, ZERO
from .textio import parse_fraction


@dataclass
class Session:
    id: str
    state: DanceState
    created_at: float
    updated_at: float


def _check_replay(state: DanceState) -> None:
    if replay(state.history) != state.current:
        raise SnapshotCorrupt("history does not replay to the recorded state")


class SessionStore:
    def __init__(self, snapshot_path: str | None = None):
        self._sessions: dict[str, Session] = {}
        self._locks: dict[str, threading.Lock] = {}
        self._registry_lock = threading.Lock()
        self._snapshot_path = snapshot_path
        self._snapshot_lock = threading.Lock()
        if snapshot_path is not None:
            self._load_snapshot(snapshot_path)

    def create(self, target: Fraction) -> Session:
        session_id = secrets.token_urlsafe(16)
        now = time.time()
        session = Session(session_id, DanceState(ZERO, target), now, now)
        with self._registry_lock:
            self._sessions[session_id] = session
            self._locks[session_id] = threading.Lock()
        self._persist(session)
        return session

    def get(self, session_id: str) -> Session:
        with self._registry_lock:
            session = self._sessions.get(session_id)
        if session is None:
            raise SessionNotFound(f"no session {session_id!r}")
        return session

    def apply(self, session_id: str, move: Move) -> Session:
        lock = self._lock_for(session_id)
        with lock:
            session = self.get(session_id)
            session.state = apply_move(session.state, move)
            _check_replay(session.state)
            session.updated_at = time.time()
            self._persist(session)
            return session

    def delete(self, session_id: str) -> None:
        with self._registry_lock:
            if session_id not in self._sessions:
                raise SessionNotFound(f"no session {session_id!r}")
            del self._sessions[session_id]
            del self._locks[session_id]
        self._append_line({"id": session_id, "deleted": True})

    def _lock_for(self, session_id: str) -> threading.Lock:
        with self._registry_lock:
            lock = self._locks.get(session_id)
        if lock is None:
            raise SessionNotFound(f"no session {session_id!r}")
        return lock

    # --- snapshotting ---

    def _persist(self, session: Session) -> None:
        self._append_line(
            {
                "id": session.id,
                "target": str(session.state.target),
                "history": word_to_text(session.state.history),
            }
        )

    def _append_line(self, record: dict) -> None:
        if self._snapshot_path is None:
            return
        line = json.dumps(record, separators=(",", ":"))
        with self._snapshot_lock:
            with open(self._snapshot_path, "a", encoding="utf-8") as fh:
                fh.write(line + "\n")

    def _load_snapshot(self, path: str) -> None:
        try:
            with open(path, "r", encoding="utf-8") as fh:
                lines = fh.read().splitlines()
        except FileNotFoundError:
            return
        latest: dict[str, dict | None] = {}
        for lineno, line in enumerate(lines, start=1):
            if not line.strip():
                continue
            try:
                record = json.loads(line)
                session_id = record["id"]
                if record.get("deleted"):
                    latest[session_id] = None
                else:
                    # validate eagerly so a corrupt line names itself
                    parse_fraction(record["target"])
                    word_from_text(record["history"])
                    latest[session_id] = record
            except (ValueError, KeyError, TypeError, ParseError) as exc:
                raise SnapshotCorrupt(f"{path}:{lineno}: unreadable session record ({exc})") from exc
        now = time.time()
        for session_id, record in latest.items():
            if record is None:
                continue
            word = word_from_text(record["history"])
            state = DanceState(replay(word), parse_fraction(record["target"]), word)
            _check_replay(state)
            self._sessions[session_id] = Session(session_id, state, now, now)
            self._locks[session_id] = threading.Lock()
