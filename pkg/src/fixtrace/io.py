"""JSON file formats for complexes, maps, embeddings, groups and group-ring matrices.

Vertex and element labels are read as strings; rationals are written as
strings (``"3/4"``) so no value passes through a float.
"""

from __future__ import annotations

import json
from fractions import Fraction
from pathlib import Path

from .errors import FixtraceError, InvalidMapError, MalformedInputError
from .groupring import parse_group_ring
from .groups import FiniteGroupTable
from .grmatrix import GRMatrix
from .invariants.index import EmbeddingData
from .simplicial import SimplicialComplex, SimplicialMap, close_complex, require_valid


def load_json(path) -> dict:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise MalformedInputError(f"cannot read {path}: {exc.strerror}") from None
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise MalformedInputError(f"{path}: line {exc.lineno}, column {exc.colno}: {exc.msg}") from None
    if not isinstance(data, dict):
        raise MalformedInputError(f"{path}: top level must be an object")
    return data


def _field(data: dict, key: str, kind, where: str):
    if key not in data:
        raise MalformedInputError(f"{where}: missing field {key!r}")
    value = data[key]
    if not isinstance(value, kind):
        raise MalformedInputError(f"{where}: field {key!r} has the wrong type")
    return value


def complex_from_dict(data: dict, where: str = "complex") -> SimplicialComplex:
    vertices = [str(v) for v in _field(data, "vertices", list, where)]
    maximal = _field(data, "maximal", list, where)
    simplices = []
    for i, s in enumerate(maximal):
        if not isinstance(s, list) or not s:
            raise MalformedInputError(f"{where}: maximal[{i}] must be a non-empty list")
        simplices.append([str(v) for v in s])
    return close_complex(simplices, vertices=vertices)


def complex_to_dict(K: SimplicialComplex) -> dict:
    return {"vertices": [str(v) for v in K.vertices],
            "maximal": [[str(v) for v in K.labels(s)] for s in sorted(K.maximal_simplices(), key=lambda s: (len(s), s))]}


def parse_complex(path) -> SimplicialComplex:
    return complex_from_dict(load_json(path), str(path))


def serialize_complex(K: SimplicialComplex) -> str:
    return json.dumps(complex_to_dict(K), indent=2)


def map_from_dict(data: dict, K: SimplicialComplex, where: str = "map") -> SimplicialMap:
    vm = _field(data, "vertex_map", dict, where)
    mapping = {str(k): str(v) for k, v in vm.items()}
    unknown = sorted(set(mapping) - set(K.vertices))
    if unknown:
        raise InvalidMapError(f"{where}: vertex {unknown[0]!r} is not in the complex")
    f = SimplicialMap.from_labels(K, K, mapping)
    require_valid(f)
    return f


def parse_map(path, K: SimplicialComplex) -> SimplicialMap:
    return map_from_dict(load_json(path), K, str(path))


def map_to_dict(f: SimplicialMap) -> dict:
    V = f.source.vertices
    return {"vertex_map": {V[i]: f.target.vertices[f(i)] for i in range(len(V))}}


def parse_rational(x, where: str) -> Fraction:
    if isinstance(x, bool) or not isinstance(x, (int, str)):
        raise MalformedInputError(f"{where}: {x!r} is not an integer or rational string")
    try:
        return Fraction(x)
    except (ValueError, ZeroDivisionError):
        raise MalformedInputError(f"{where}: {x!r} is not a rational number") from None


def embedding_from_dict(data: dict, K: SimplicialComplex, where: str = "embedding") -> EmbeddingData:
    dim = _field(data, "dimension", int, where)
    coords = _field(data, "coordinates", dict, where)
    coords = {str(k): v for k, v in coords.items()}
    missing = [v for v in K.vertices if v not in coords]
    if missing:
        raise MalformedInputError(f"{where}: no coordinates for vertex {missing[0]!r}")
    values = []
    for v in K.vertices:
        c = coords[v]
        if not isinstance(c, list):
            raise MalformedInputError(f"{where}: coordinates of {v!r} must be a list")
        values.append([parse_rational(x, f"{where}: vertex {v!r}") for x in c])
    return EmbeddingData.from_values(dim, values, data.get("retraction", "nearest-star"))


def parse_embedding(path, K: SimplicialComplex) -> EmbeddingData:
    return embedding_from_dict(load_json(path), K, str(path))


def embedding_to_dict(E: EmbeddingData, K: SimplicialComplex) -> dict:
    return {"dimension": E.dimension,
            "coordinates": {v: [str(x) for x in E.coordinates[i]] for i, v in enumerate(K.vertices)},
            "retraction": E.retraction}


def group_from_dict(data: dict, where: str = "group") -> FiniteGroupTable:
    labels = [str(x) for x in _field(data, "elements", list, where)]
    table = _field(data, "table", list, where)
    for i, row in enumerate(table):
        if not isinstance(row, list) or any(isinstance(x, bool) or not isinstance(x, int) for x in row):
            raise MalformedInputError(f"{where}: table row {i} must be a list of integers")
    return FiniteGroupTable(table, labels)


def parse_group(path) -> FiniteGroupTable:
    return group_from_dict(load_json(path), str(path))


def group_to_dict(G: FiniteGroupTable) -> dict:
    return {"elements": list(G.labels), "table": [list(r) for r in G.product]}


def matrix_from_dict(data: dict, G: FiniteGroupTable, where: str = "matrix") -> GRMatrix:
    rows = _field(data, "matrix", list, where)
    out = []
    for i, r in enumerate(rows):
        if not isinstance(r, list):
            raise MalformedInputError(f"{where}: row {i} must be a list")
        out.append([parse_group_ring(str(x), G) for x in r])
    width = {len(r) for r in out}
    if len(width) > 1:
        raise MalformedInputError(f"{where}: rows have different lengths")
    return GRMatrix(G, len(out), width.pop() if out else 0, out)


def parse_matrix(path, G: FiniteGroupTable) -> GRMatrix:
    return matrix_from_dict(load_json(path), G, str(path))


def matrix_to_dict(M: GRMatrix) -> dict:
    return {"matrix": [[x.format() for x in r] for r in M.entries]}


def twist_from_dict(data: dict, G: FiniteGroupTable, where: str = "twist") -> tuple[int, ...]:
    """An endomorphism file: ``{"endomorphism": {label: label, ...}}``."""
    m = _field(data, "endomorphism", dict, where)
    m = {str(k): str(v) for k, v in m.items()}
    missing = [x for x in G.labels if x not in m]
    if missing:
        raise MalformedInputError(f"{where}: no image for element {missing[0]!r}")
    return G.check_endomorphism([G.element(m[x]) for x in G.labels])


def parse_twist(path, G: FiniteGroupTable) -> tuple[int, ...]:
    return twist_from_dict(load_json(path), G, str(path))


def error_report(exc: FixtraceError) -> dict:
    return {"error": exc.to_dict()}

