"""Session store: lifecycle, replay invariant, snapshot persistence."""

import threading

import pytest

from tanglekit.dance import ADD, TURN
from tanglekit.errors import SessionNotFound, SnapshotCorrupt
from tanglekit.fraction import Fraction
from tanglekit.sessions import SessionStore


def fr(p, q=1):
    return Fraction(p, q)


class TestLifecycle:
    def test_create_then_get(self):
        store = SessionStore()
        session = store.create(fr(3, 2))
        assert store.get(session.id) is session
        assert session.state.current == fr(0)
        assert session.state.target == fr(3, 2)

    def test_ids_are_unguessable_tokens(self):
        store = SessionStore()
        ids = {store.create(fr(1)).id for _ in range(64)}
        assert len(ids) == 64
        assert all(len(i) >= 16 for i in ids)

    def test_update_bumps_timestamp(self):
        store = SessionStore()
        session = store.create(fr(1))
        before = session.updated_at
        store.apply(session.id, ADD)
        assert session.updated_at >= before
        assert session.state.current == fr(1)
        assert session.state.solved

    def test_delete_then_get(self):
        store = SessionStore()
        session = store.create(fr(1))
        store.delete(session.id)
        with pytest.raises(SessionNotFound):
            store.get(session.id)
        with pytest.raises(SessionNotFound):
            store.delete(session.id)

    def test_unknown_id(self):
        with pytest.raises(SessionNotFound):
            SessionStore().get("nope")
        with pytest.raises(SessionNotFound):
            SessionStore().apply("nope", ADD)


class TestConcurrency:
    def test_parallel_moves_on_one_session_lose_nothing(self):
        store = SessionStore()
        session = store.create(fr(10**9))
        threads = [
            threading.Thread(target=lambda: [store.apply(session.id, ADD) for _ in range(25)])
            for _ in range(8)
        ]
        for t in threads:
            t.start()
        for t in threads:
            t.join()
        assert len(session.state.history) == 200
        assert session.state.current == fr(200)


class TestSnapshot:
    def test_round_trip_through_file(self, tmp_path):
        path = str(tmp_path / "sessions.jsonl")
        store = SessionStore(path)
        session = store.create(fr(3, 2))
        for move in (ADD, ADD, TURN):
            store.apply(session.id, move)
        reloaded = SessionStore(path)
        copy = reloaded.get(session.id)
        assert copy.state.current == fr(-1, 2)
        assert copy.state.target == fr(3, 2)
        assert copy.state.history == (ADD, ADD, TURN)

    def test_deletion_survives_reload(self, tmp_path):
        path = str(tmp_path / "sessions.jsonl")
        store = SessionStore(path)
        keep = store.create(fr(1))
        drop = store.create(fr(2))
        store.delete(drop.id)
        reloaded = SessionStore(path)
        assert reloaded.get(keep.id).state.target == fr(1)
        with pytest.raises(SessionNotFound):
            reloaded.get(drop.id)

    def test_missing_file_is_an_empty_store(self, tmp_path):
        store = SessionStore(str(tmp_path / "absent.jsonl"))
        assert store.create(fr(1)).state.current == fr(0)

    @pytest.mark.parametrize(
        "line",
        [
            "not json",
            '{"id": "x", "history": "AA"}',
            '{"id": "x", "target": "3/2", "history": "AXT"}',
            '{"id": "x", "target": "wat", "history": "A"}',
        ],
    )
    def test_corrupt_lines_rejected_with_location(self, tmp_path, line):
        path = tmp_path / "sessions.jsonl"
        path.write_text(line + "\n")
        with pytest.raises(SnapshotCorrupt) as err:
            SessionStore(str(path))
        assert ":1:" in str(err.value)
