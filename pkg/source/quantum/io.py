"""
JSON interchange for matrices and states: {"dim": n, "re": [...], "im": [...]}
with row-major real and imaginary parts (n*n entries for a matrix, n for a
state).
"""
import json
from pathlib import Path
import numpy as np
from .errors import SpecError
from .linalg import State


def matrix_to_json(matrix) -> dict:
    m = np.asarray(getattr(matrix, 'entries', matrix), dtype=complex)
    return {"dim": int(m.shape[0]), "re": m.real.ravel().tolist(), "im": m.imag.ravel().tolist()}


def state_to_json(psi: State) -> dict:
    z = psi.amplitudes
    return {"dim": int(z.size), "re": z.real.tolist(), "im": z.imag.tolist()}


def _parts(obj, field: str, count_of_dim):
    if not isinstance(obj, dict):
        raise SpecError(field, "expected a JSON object with keys dim, re, im")
    for key in ("dim", "re", "im"):
        if key not in obj:
            raise SpecError(f"{field}.{key}", "missing")
    dim = obj["dim"]
    if isinstance(dim, bool) or not isinstance(dim, int) or dim < 1:
        raise SpecError(f"{field}.dim", f"must be a positive integer, got {dim!r}")
    expected = count_of_dim(dim)
    parts = []
    for key in ("re", "im"):
        values = obj[key]
        if not isinstance(values, list) or len(values) != expected:
            raise SpecError(f"{field}.{key}", f"must be a list of {expected} numbers")
        try:
            parts.append(np.array(values, dtype=float))
        except (TypeError, ValueError):
            raise SpecError(f"{field}.{key}", "entries must be numbers") from None
    return parts[0] + 1j * parts[1], dim


def matrix_from_json(obj, field: str = "matrix") -> np.ndarray:
    values, dim = _parts(obj, field, lambda n: n * n)
    return values.reshape(dim, dim)


def state_from_json(obj, field: str = "state") -> State:
    values, _ = _parts(obj, field, lambda n: n)
    return State(values)


def read_json(path, field: str):
    try:
        with open(Path(path), "r") as f:
            return json.load(f)
    except OSError as e:
        raise SpecError(field, f"cannot read {path}: {e}") from None
    except json.JSONDecodeError as e:
        raise SpecError(field, f"{path} is not valid JSON: {e}") from None


def write_json(path, obj):
    with open(Path(path), "w") as f:
        json.dump(obj, f, indent=2)
