import math
from pathlib import Path
import numpy as np
from source.quantum.errors import SpecError, QuantumError
from source.quantum.io import read_json, matrix_from_json, state_from_json
from source.quantum.linalg import State, HermitianOperator, Projector, random_hermitian, random_state
from source.quantum.qubit import QubitHamiltonian, BlochPoint, PAULI_X, PAULI_Y, PAULI_Z, NORTH_POLE, bloch_map
from source.quantum.zeno import make_projector, random_projector

PAULI_PRESETS = {"sigma_x": PAULI_X, "sigma_y": PAULI_Y, "sigma_z": PAULI_Z}

BLOCH_PRESETS = {
    "north": NORTH_POLE,
    "south": BlochPoint(1.0, 0.0, 0.0, -1.0),
    "equator": BlochPoint(1.0, 1.0, 0.0, 0.0),
}


class SpecParser:
    """
    Turns --hamiltonian/--projector/--state/--start values into value types.
    A spec is either a named preset or a path to a JSON file in the
    {"dim", "re", "im"} format. Random presets draw from the command's rng.
    """
    __slots__ = []

    @staticmethod
    def _floats(field, text, count):
        parts = [s for s in text.split(",") if s.strip()]
        if len(parts) != count:
            raise SpecError(field, f"expected {count} comma-separated numbers, got '{text}'")
        try:
            values = [float(s) for s in parts]
        except ValueError:
            raise SpecError(field, f"'{text}' contains a non-number") from None
        if not all(math.isfinite(v) for v in values):
            raise SpecError(field, f"'{text}' contains a non-finite number")
        return values

    @staticmethod
    def _ints(field, text, count):
        values = SpecParser._floats(field, text, count)
        if any(v != int(v) or v < 1 for v in values):
            raise SpecError(field, f"'{text}' must hold positive integers")
        return [int(v) for v in values]

    @staticmethod
    def _basis_index(field, spec, dim):
        try:
            k = int(spec[1:])
        except ValueError:
            return None
        if not 1 <= k <= dim:
            raise SpecError(field, f"basis index {k} outside 1..{dim}")
        return k

    @staticmethod
    def _require_dim(field, value, dim):
        if value.dim != dim:
            raise SpecError(field, f"has dimension {value.dim}, the Hamiltonian has dimension {dim}")
        return value

    @staticmethod
    def _load(field, spec, builder):
        if not Path(spec).is_file():
            raise SpecError(field, f"unknown preset or missing file '{spec}'")
        try:
            return builder(read_json(spec, field), field)
        except SpecError:
            raise
        except QuantumError as e:
            raise SpecError(field, str(e)) from None

    @staticmethod
    def hamiltonian(spec: str, rng: np.random.Generator) -> HermitianOperator:
        field = "hamiltonian"
        if spec in PAULI_PRESETS:
            return PAULI_PRESETS[spec]
        name, _, arg = spec.partition(":")
        if name == "qubit":
            h0, hx, hy, hz = SpecParser._floats(field, arg, 4)
            return QubitHamiltonian(h0, (hx, hy, hz)).matrix()
        if name == "identity":
            (n,) = SpecParser._ints(field, arg or "2", 1)
            return HermitianOperator.identity(n)
        if name == "random":
            (n,) = SpecParser._ints(field, arg, 1)
            return random_hermitian(rng, n)
        return SpecParser._load(field, spec, lambda obj, f: HermitianOperator(matrix_from_json(obj, f)))

    @staticmethod
    def projector(spec: str, rng: np.random.Generator, dim: int) -> Projector:
        field = "projector"
        if spec == "identity":
            return Projector.identity(dim)
        if spec == "north":
            spec = "e1"
        if spec.startswith("e"):
            k = SpecParser._basis_index(field, spec, dim)
            if k is not None:
                return make_projector(basis=State.basis(k, dim).amplitudes)
        name, _, arg = spec.partition(":")
        if name == "rank":
            (r,) = SpecParser._ints(field, arg, 1)
            if r > dim:
                raise SpecError(field, f"rank {r} exceeds dimension {dim}")
            return make_projector(basis=np.eye(dim, dtype=complex)[:r])
        if name == "random":
            n, r = SpecParser._ints(field, arg, 2)
            if n != dim or r > n:
                raise SpecError(field, f"random:{n},{r} does not fit dimension {dim}")
            return random_projector(rng, n, r)
        projector = SpecParser._load(field, spec, lambda obj, f: Projector(matrix_from_json(obj, f)))
        return SpecParser._require_dim(field, projector, dim)

    @staticmethod
    def state(spec: str, rng: np.random.Generator, dim: int) -> State:
        field = "state"
        if spec in ("plus", "minus"):
            if dim != 2:
                raise SpecError(field, f"'{spec}' is a qubit state, dimension is {dim}")
            sign = 1.0 if spec == "plus" else -1.0
            return State(np.array([1.0, sign]) / math.sqrt(2))
        if spec == "random":
            return random_state(rng, dim)
        if spec.startswith("e"):
            k = SpecParser._basis_index(field, spec, dim)
            if k is not None:
                return State.basis(k, dim)
        return SpecParser._require_dim(field, SpecParser._load(field, spec, state_from_json), dim)

    @staticmethod
    def start(spec: str, rng: np.random.Generator) -> BlochPoint:
        """Flow start: north/south/equator, bloch:u,x,y,z, or any qubit state spec."""
        field = "start"
        if spec in BLOCH_PRESETS:
            return BLOCH_PRESETS[spec]
        name, _, arg = spec.partition(":")
        if name == "bloch":
            return BlochPoint(*SpecParser._floats(field, arg, 4))
        return bloch_map(SpecParser.state(spec, rng, 2))
