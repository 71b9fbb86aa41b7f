import json
import logging
import os
import uuid
from datetime import datetime

logger = logging.getLogger(__name__)

DEFAULT_RUN_LOG = "memory/runs.json"


class RunStore:
    """JSON ledger of experiment runs: what was run, with which config, and where it went."""

    def __init__(self, storage_path=None):
        self.storage_path = storage_path or os.getenv("IMMUNIZE_RUN_LOG", DEFAULT_RUN_LOG)
        self.runs = self.load_runs()

    def _ensure_dir(self):
        directory = os.path.dirname(self.storage_path)
        if directory:
            os.makedirs(directory, exist_ok=True)

    def load_runs(self):
        """Load the ledger from disk; a missing or corrupt file yields an empty ledger"""
        if not os.path.exists(self.storage_path):
            logger.debug("No run ledger at %s yet", self.storage_path)
            return []
        try:
            with open(self.storage_path, "r", encoding="utf-8") as f:
                data = json.load(f)
        except json.JSONDecodeError:
            logger.warning("Corrupted run ledger %s, starting fresh", self.storage_path)
            return []
        if not isinstance(data, list):
            logger.warning("Run ledger %s is not a list, starting fresh", self.storage_path)
            return []
        logger.debug("Loaded %d runs from %s", len(data), self.storage_path)
        return data

    def save_runs(self):
        self._ensure_dir()
        with open(self.storage_path, "w", encoding="utf-8") as f:
            json.dump(self.runs, f, indent=2, ensure_ascii=False)
        logger.debug("Saved %d runs to %s", len(self.runs), self.storage_path)

    def record_run(self, data):
        """Append one run record and persist; returns its id"""
        run = {
            "id": str(uuid.uuid4()),
            "timestamp": datetime.now().isoformat(timespec="seconds"),
            "command": data.get("command"),
            "config": data.get("config", {}),
            "outputs": data.get("outputs", []),
            "summary": data.get("summary", {}),
        }
        self.runs.append(run)
        self.save_runs()
        logger.info("Recorded run %s (%s)", run["id"][:8], run["command"])
        return run["id"]

    def find_runs(self, **filters):
        """Runs whose config matches every given key/value, newest first"""
        matches = [
            run for run in self.runs
            if all(run.get("config", {}).get(key) == value for key, value in filters.items())
        ]
        return sorted(matches, key=lambda run: run.get("timestamp", ""), reverse=True)

    def get_all_runs(self):
        return self.runs

    def clear_runs(self):
        self.runs = []
        self.save_runs()
        logger.info("Run ledger cleared")
