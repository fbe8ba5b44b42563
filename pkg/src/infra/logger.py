from __future__ import annotations

import logging
import os
import sys
from datetime import datetime
from logging.handlers import RotatingFileHandler
from pathlib import Path

ROOT_DIR = Path(__file__).resolve().parents[2]
LOG_FILE_NAME = "workbench.log"


def default_log_dir() -> Path:
    return ROOT_DIR / os.getenv("RLWB_LOG_DIR", "logs")


def ensure_log_dirs(log_dir: Path | None = None) -> Path:
    target = Path(log_dir) if log_dir else default_log_dir()
    target.mkdir(parents=True, exist_ok=True)
    (target / "sweeps").mkdir(parents=True, exist_ok=True)
    return target


def setup_logging(debug: bool = False, log_dir: Path | None = None) -> None:
    """Configura logging com rotação em arquivo + console em stderr (idempotente).

    O stdout fica reservado para os relatórios da CLI.
    """
    target = ensure_log_dirs(log_dir)
    root = logging.getLogger()
    if getattr(root, "_rl_workbench_logger_ready", False):
        if debug:
            root.setLevel(logging.DEBUG)
        return

    root.setLevel(logging.DEBUG if debug else logging.INFO)
    fmt = logging.Formatter(
        "%(asctime)s | %(levelname)-7s | %(threadName)s | %(name)s | %(message)s",
        datefmt="%Y-%m-%d %H:%M:%S",
    )
    file_handler = RotatingFileHandler(
        target / LOG_FILE_NAME,
        maxBytes=1_500_000,
        backupCount=5,
        encoding="utf-8",
    )
    file_handler.setLevel(logging.DEBUG)
    file_handler.setFormatter(fmt)
    console = logging.StreamHandler(sys.stderr)
    console.setLevel(logging.DEBUG if debug else logging.WARNING)
    console.setFormatter(fmt)

    root.handlers.clear()
    root.addHandler(file_handler)
    root.addHandler(console)
    root._rl_workbench_logger_ready = True  # type: ignore[attr-defined]


def make_sweep_artifact_path(prefix: str, suffix: str = ".csv") -> Path:
    """Caminho com timestamp para salvar uma varredura quando o usuario nao informa um."""
    sweeps = ensure_log_dirs() / "sweeps"
    stamp = datetime.now().strftime("%Y%m%d_%H%M%S")
    safe = "".join(ch if ch.isalnum() or ch in "-_" else "_" for ch in prefix)[:48]
    return sweeps / f"{stamp}_{safe}{suffix}"
