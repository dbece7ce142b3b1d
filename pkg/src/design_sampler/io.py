"""JSON reading and writing with byte-stable output."""
from __future__ import annotations

import json
from pathlib import Path

from .designs import BlockSet
from .graphs import LabeledGraph
from .sampler import EmbeddingMap, SamplingMap


class SchemaError(ValueError):
    pass


def dumps(obj) -> str:
    if hasattr(obj, "to_json"):
        obj = obj.to_json()
    return json.dumps(obj, sort_keys=True, separators=(",", ":")) + "\n"


def write(obj, path: str | Path) -> None:
    Path(path).write_text(dumps(obj))


def read(path: str | Path) -> dict:
    try:
        return json.loads(Path(path).read_text())
    except json.JSONDecodeError as exc:
        raise SchemaError(f"{path}: malformed JSON ({exc})") from exc


def _require(data, keys, what):
    if not isinstance(data, dict):
        raise SchemaError(f"{what} must be a JSON object")
    missing = [k for k in keys if k not in data]
    if missing:
        raise SchemaError(f"{what} is missing {missing}")


def graph_from(data) -> LabeledGraph:
    _require(data, ["n", "edges"], "LabeledGraph")
    try:
        return LabeledGraph.from_json(data)
    except (TypeError, ValueError) as exc:
        raise SchemaError(f"bad LabeledGraph: {exc}") from exc


def block_set_from(data) -> BlockSet:
    _require(data, ["host", "multiplicity", "blocks"], "BlockSet")
    try:
        return BlockSet(graph_from(data["host"]), int(data["multiplicity"]),
                        tuple(graph_from(b) for b in data["blocks"]))
    except SchemaError:
        raise
    except (TypeError, ValueError) as exc:
        raise SchemaError(f"bad BlockSet: {exc}") from exc


def sampling_from(data) -> SamplingMap:
    _require(data, ["source", "target", "assignment"], "SamplingMap")
    try:
        return SamplingMap(block_set_from(data["source"]), block_set_from(data["target"]),
                           tuple(int(a) for a in data["assignment"]))
    except SchemaError:
        raise
    except (TypeError, ValueError) as exc:
        raise SchemaError(f"bad SamplingMap: {exc}") from exc


def embedding_from(data) -> EmbeddingMap:
    _require(data, ["source", "target", "assignment"], "EmbeddingMap")
    return EmbeddingMap(block_set_from(data["source"]), block_set_from(data["target"]),
                        tuple(int(a) for a in data["assignment"]))
