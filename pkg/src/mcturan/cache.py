"""Append-only JSONL cache of solver results.

Records are keyed by (n, k, sha256 of the pattern's canonical multiplicity
tuple).  Exact records win over bounded ones and are never superseded.
"""

from __future__ import annotations

import hashlib
import json
import os
import time
from pathlib import Path

from .graphs import MultiGraph
from .solver import ExkResult

CACHE_ENV = "MCTURAN_CACHE_DIR"
CACHE_FILE = "results.jsonl"


def pattern_hash(H: MultiGraph) -> str:
    body = f"{H.n}:" + ",".join(map(str, H.canonical_form()))
    return hashlib.sha256(body.encode()).hexdigest()


def default_cache_dir() -> Path | None:
    d = os.environ.get(CACHE_ENV)
    return Path(d) if d else None


class ResultCache:
    def __init__(self, directory: str | Path):
        self.dir = Path(directory)
        self.path = self.dir / CACHE_FILE

    def _records(self):
        if not self.path.exists():
            return
        with self.path.open() as fh:
            for line in fh:
                line = line.strip()
                if line:
                    yield json.loads(line)

    def lookup(self, n: int, k: int, H: MultiGraph) -> dict | None:
        """The exact record for this instance if one exists, else the newest bounded one."""
        key = pattern_hash(H)
        exact = bounded = None
        for rec in self._records():
            if rec["n"] != n or rec["k"] != k or rec["pattern"] != key:
                continue
            if rec["status"] == "exact":
                exact = exact or rec
            else:
                bounded = rec
        return exact or bounded

    def put(self, H: MultiGraph, result: ExkResult, version: str = "") -> bool:
        """Append a record; returns False when an exact record already covers the instance."""
        prev = self.lookup(result.n, result.k, H)
        if prev is not None and prev["status"] == "exact":
            return False
        rec = result.to_dict()
        rec.update(pattern=pattern_hash(H), pattern_mult=list(H.mult),
                   timestamp=time.strftime("%Y-%m-%dT%H:%M:%S%z"), version=version)
        self.dir.mkdir(parents=True, exist_ok=True)
        with self.path.open("a") as fh:
            fh.write(json.dumps(rec, sort_keys=True) + "\n")
        return True


def result_from_record(rec: dict) -> ExkResult:
    return ExkResult(
        n=rec["n"], k=rec["k"], h=rec["h"], r=rec["r"], value=rec["value"],
        optima=[tuple(w) for w in rec["optima"]], candidate_i=rec["candidate_i"],
        candidate_ii=rec["candidate_ii"], classification=rec["classification"],
        status=rec["status"], lower=rec["lower"], upper=rec["upper"], nodes=rec["nodes"],
        elapsed=rec["elapsed"], method=rec["method"], optima_truncated=rec["optima_truncated"],
    )
