from __future__ import annotations

import csv
import io
import json
import logging
import os
from collections.abc import Sequence
from pathlib import Path
from typing import Any, TextIO

from .. import __version__
from .code import LinearCode
from .errors import WorkbenchError
from .gf import FieldSpec, field_from_dict, field_to_dict
from .matrix import MatrixGF
from .models import TripleSummary

logger = logging.getLogger(__name__)

ROOT_DIR = Path(__file__).resolve().parents[2]
FIXTURES_PATH_DEFAULT = "data/fixtures/reference_examples.json"

CODE_SCHEMA = "rl-workbench/code@1"
REPORT_SCHEMA = "rl-workbench/report@1"
SWEEP_CSV_SCHEMA = "rl-workbench/sweep-csv@1"
FIXTURES_SCHEMA = "rl-workbench/fixtures@1"

SWEEP_CSV_COLUMNS = (
    "delta",
    "tau",
    "pi",
    "cond1",
    "cond2",
    "cond3",
    "cond4",
    "verdict",
    "d",
    "d_dual",
    "schema",
)


def default_fixtures_path() -> Path:
    return ROOT_DIR / os.getenv("RLWB_FIXTURES_PATH", FIXTURES_PATH_DEFAULT)


def save_json(path: str | Path, data: object) -> Path:
    target = Path(path)
    target.parent.mkdir(parents=True, exist_ok=True)
    target.write_text(dumps(data) + "\n", encoding="utf-8")
    return target


def load_json(path: str | Path) -> object:
    return json.loads(Path(path).read_text(encoding="utf-8"))


def dumps(data: object) -> str:
    """JSON estavel: chaves ordenadas, UTF-8 legivel."""
    return json.dumps(data, ensure_ascii=False, indent=2, sort_keys=True)


def element_json(field: FieldSpec, value: int) -> dict[str, Any]:
    return {"int": int(value), "pow": field.label(int(value))}


def envelope(kind: str, payload: dict[str, Any], warnings: Sequence[str] = ()) -> dict[str, Any]:
    return {
        "schema": REPORT_SCHEMA,
        "kind": kind,
        "tool_version": __version__,
        "warnings": list(warnings),
        "report": payload,
    }


def code_to_dict(C: LinearCode) -> dict[str, Any]:
    return {
        "schema": CODE_SCHEMA,
        "field": field_to_dict(C.field),
        "n": C.n,
        "k": C.k,
        "generator": C.generator.to_lists(),
    }


def code_from_dict(data: dict[str, Any], bound: int | None = None) -> LinearCode:
    schema = data.get("schema")
    if schema != CODE_SCHEMA:
        raise WorkbenchError(f"JSON de codigo invalido: schema {schema!r}, esperado {CODE_SCHEMA}")
    if not isinstance(data.get("generator"), list) or not isinstance(data.get("field"), dict):
        raise WorkbenchError("JSON de codigo invalido: esperado 'field' e 'generator'")
    field = field_from_dict(data["field"], bound=bound)
    try:
        n = int(data.get("n", len(data["generator"][0]) if data["generator"] else 0))
        code = LinearCode(MatrixGF.from_rows(field, data["generator"], n))
    except WorkbenchError:
        raise
    except (TypeError, ValueError) as exc:
        raise WorkbenchError(f"JSON de codigo invalido: gerador malformado ({exc})") from exc
    if "k" in data and int(data["k"]) != code.k:
        logger.warning("k declarado (%s) difere do posto do gerador (%d)", data["k"], code.k)
    return code


def save_code(C: LinearCode, path: str | Path) -> Path:
    logger.info("Salvando codigo [%d,%d] em %s", C.n, C.k, path)
    return save_json(path, code_to_dict(C))


def load_code(path: str | Path, bound: int | None = None) -> LinearCode:
    target = Path(path)
    if not target.exists():
        raise FileNotFoundError(f"Arquivo de codigo nao encontrado: {target}")
    raw = load_json(target)
    if not isinstance(raw, dict):
        raise WorkbenchError("JSON de codigo invalido: esperado objeto")
    return code_from_dict(raw, bound=bound)


def write_sweep_csv(triples: Sequence[TripleSummary], stream: TextIO) -> None:
    writer = csv.writer(stream, lineterminator="\n")
    writer.writerow(SWEEP_CSV_COLUMNS)
    for t in sorted(triples, key=lambda t: t.triple):
        writer.writerow(
            [
                t.delta,
                t.tau,
                t.pi,
                int(t.cond1),
                int(t.cond2),
                int(t.cond3),
                int(t.cond4),
                t.verdict.value,
                t.d,
                t.d_dual,
                SWEEP_CSV_SCHEMA,
            ]
        )


def sweep_csv_text(triples: Sequence[TripleSummary]) -> str:
    buf = io.StringIO()
    write_sweep_csv(triples, buf)
    return buf.getvalue()


def save_sweep_csv(triples: Sequence[TripleSummary], path: str | Path) -> Path:
    target = Path(path)
    target.parent.mkdir(parents=True, exist_ok=True)
    with target.open("w", encoding="utf-8", newline="") as fh:
        write_sweep_csv(triples, fh)
    logger.info("Varredura salva em %s (%d triplas)", target, len(triples))
    return target
