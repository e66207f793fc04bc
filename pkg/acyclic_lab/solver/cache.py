import sqlite3
import threading
import time
from typing import Callable, Dict, Optional

from acyclic_lab import config
from acyclic_lab.graph.core import Graph
from acyclic_lab.graph.dimacs import graph_hash
from acyclic_lab.solver.search import NumberResult

_lock = threading.Lock()
_conns: Dict[str, sqlite3.Connection] = {}


def _connect(path):
    conn = sqlite3.connect(path, check_same_thread=False)
    conn.execute("""
        CREATE TABLE IF NOT EXISTS numbers (
            hash TEXT NOT NULL,
            kind TEXT NOT NULL,
            value INTEGER NOT NULL,
            created_at REAL,
            PRIMARY KEY (hash, kind)
        )
    """)
    return conn


def _conn_for(path):
    # caller holds _lock
    if path not in _conns:
        _conns[path] = _connect(path)
    return _conns[path]


def get_number(h, kind, path=None):
    path = path or config.SOLVE_CACHE_DB
    if not path:
        return None
    with _lock:
        cur = _conn_for(path).execute(
            "SELECT value FROM numbers WHERE hash=? AND kind=?", (h, kind)
        )
        row = cur.fetchone()
        return row[0] if row else None


def save_number(h, kind, value, path=None, max_items=None):
    path = path or config.SOLVE_CACHE_DB
    if not path:
        return
    max_items = max_items or config.SOLVE_CACHE_MAX_ITEMS
    ts = time.time()

    with _lock:
        conn = _conn_for(path)
        conn.execute(
            "REPLACE INTO numbers (hash, kind, value, created_at) VALUES (?, ?, ?, ?)",
            (h, kind, int(value), ts)
        )
        conn.commit()

        # Enforce LRU eviction
        count = conn.execute("SELECT COUNT(*) FROM numbers").fetchone()[0]
        if count > max_items:
            conn.execute(
                """
                DELETE FROM numbers WHERE rowid IN (
                    SELECT rowid FROM numbers
                    ORDER BY created_at ASC
                    LIMIT ?
                )
                """,
                (count - max_items,)
            )
            conn.commit()


def cached_number(g: Graph, kind: str, compute: Callable[[], NumberResult],
                  path: Optional[str] = None) -> NumberResult:
    """Look up an exact chromatic-type number; only definitive values are stored."""
    h = graph_hash(g)
    hit = get_number(h, kind, path)
    if hit is not None:
        return NumberResult(hit)
    result = compute()
    if result.value is not None:
        save_number(h, kind, result.value, path)
    return result
