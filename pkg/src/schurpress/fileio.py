"""Text file formats for states and CG matrices, and the on-disk CG matrix cache.

Both formats are JSON documents.  Complex numbers are ``[re, im]`` pairs written with
17 significant digits, which round-trips binary64 exactly.  Amplitude order is part
of the format:

* ``occupation`` basis: occupation vectors ``(c_1, ..., c_d)`` of weight ``n`` in
  lexicographically descending order, so ``(n, 0, ..., 0)`` is entry 0.
* ``computational`` basis: ``|i_1 ... i_n>`` with ``i_1`` the most significant digit.

Matrix entries are row-major.  Isometry rows are occupations of weight ``k + 1``;
columns are ``(occupation of weight k, letter)`` pairs at ``index * d + letter - 1``.
"""

from __future__ import annotations

import json
import os
import tempfile
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from .cg import build_cg_symmetric, complete_to_unitary
from .combinatorics import dim_symmetric
from .states import CompressedState, DenseState

STATE_FORMAT = "schurpress-state"
MATRIX_FORMAT = "schurpress-matrix"
FORMAT_VERSION = 1
STATE_NORM_TOL = 1e-6
MATRIX_CHECK_TOL = 1e-8
CACHE_ENV = "SCHURPRESS_CACHE_DIR"


class FormatError(ValueError):
    """A state or matrix file is malformed or fails its consistency checks."""


def _pairs_text(values: np.ndarray, indent: str = "    ") -> str:
    values = np.asarray(values, dtype=np.complex128).reshape(-1)
    if not np.all(np.isfinite(values)):
        raise ValueError("cannot serialize non-finite amplitudes")
    body = ",\n".join(f"{indent}[{z.real:.17g}, {z.imag:.17g}]" for z in values)
    return "[\n" + body + "\n  ]" if body else "[]"


def _document(header: dict, key: str, values: np.ndarray) -> str:
    head = json.dumps(header, indent=2)
    return head[:-2] + f',\n  "{key}": ' + _pairs_text(values) + "\n}\n"


def _parse_pairs(raw, expected: int, what: str) -> np.ndarray:
    if not isinstance(raw, list) or len(raw) != expected:
        got = len(raw) if isinstance(raw, list) else type(raw).__name__
        raise FormatError(f"{what}: expected {expected} entries, got {got}")
    out = np.empty(expected, dtype=np.complex128)
    for i, pair in enumerate(raw):
        if (not isinstance(pair, list) or len(pair) != 2
                or not all(isinstance(x, (int, float)) and not isinstance(x, bool) for x in pair)):
            raise FormatError(f"{what}: entry {i} is not an [re, im] pair")
        out[i] = complex(pair[0], pair[1])
    return out


def _load_json(text: str) -> dict:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise FormatError(f"not valid JSON: {exc}") from None
    if not isinstance(doc, dict):
        raise FormatError("top level must be an object")
    return doc


def _int_field(doc: dict, key: str, minimum: int) -> int:
    value = doc.get(key)
    if not isinstance(value, int) or isinstance(value, bool) or value < minimum:
        raise FormatError(f"field {key!r} must be an integer >= {minimum}")
    return value


def dumps_state(state: CompressedState | DenseState) -> str:
    basis = "occupation" if isinstance(state, CompressedState) else "computational"
    header = {"format": STATE_FORMAT, "version": FORMAT_VERSION, "d": state.d, "n": state.n,
              "basis": basis}
    return _document(header, "amplitudes", state.amplitudes)


def loads_state(text: str) -> CompressedState | DenseState:
    doc = _load_json(text)
    if doc.get("format") != STATE_FORMAT:
        raise FormatError(f"format must be {STATE_FORMAT!r}")
    d = _int_field(doc, "d", 1)
    n = _int_field(doc, "n", 0)
    basis = doc.get("basis")
    if basis == "occupation":
        size = dim_symmetric(n, d)
    elif basis == "computational":
        size = d**n
    else:
        raise FormatError("basis must be 'occupation' or 'computational'")
    amps = _parse_pairs(doc.get("amplitudes"), size, "amplitudes")
    norm = np.linalg.norm(amps)
    if abs(norm - 1.0) > STATE_NORM_TOL:
        raise FormatError(f"state norm {norm:.9g} is not within {STATE_NORM_TOL} of 1")
    cls = CompressedState if basis == "occupation" else DenseState
    return cls(d, n, amps)


def write_state(path, state) -> None:
    atomic_write(Path(path), dumps_state(state))


def read_state(path) -> CompressedState | DenseState:
    return loads_state(Path(path).read_text())


@dataclass(frozen=True, eq=False)
class MatrixFile:
    d: int
    k: int
    kind: str
    matrix: np.ndarray


def dumps_matrix(mf: MatrixFile) -> str:
    rows, cols = mf.matrix.shape
    header = {"format": MATRIX_FORMAT, "version": FORMAT_VERSION, "d": mf.d, "k": mf.k,
              "kind": mf.kind, "rows": rows, "cols": cols}
    return _document(header, "entries", mf.matrix)


def check_matrix(mf: MatrixFile, tol: float = MATRIX_CHECK_TOL) -> float:
    """Max deviation from orthonormal rows (isometry) or from unitarity."""
    m = mf.matrix
    rows, cols = m.shape
    if mf.kind == "unitary" and rows != cols:
        raise FormatError(f"unitary must be square, got {rows}x{cols}")
    err = float(np.abs(m @ m.conj().T - np.eye(rows)).max(initial=0.0))
    if mf.kind == "unitary":
        err = max(err, float(np.abs(m.conj().T @ m - np.eye(cols)).max(initial=0.0)))
    if err > tol:
        raise FormatError(f"{mf.kind} check failed: deviation {err:.3g} > {tol}")
    return err


def loads_matrix(text: str) -> MatrixFile:
    doc = _load_json(text)
    if doc.get("format") != MATRIX_FORMAT:
        raise FormatError(f"format must be {MATRIX_FORMAT!r}")
    d = _int_field(doc, "d", 1)
    k = _int_field(doc, "k", 0)
    kind = doc.get("kind")
    if kind not in ("isometry", "unitary"):
        raise FormatError("kind must be 'isometry' or 'unitary'")
    rows = _int_field(doc, "rows", 1)
    cols = _int_field(doc, "cols", 1)
    expected_cols = dim_symmetric(k, d) * d
    expected_rows = dim_symmetric(k + 1, d) if kind == "isometry" else expected_cols
    if (rows, cols) != (expected_rows, expected_cols):
        raise FormatError(f"shape {rows}x{cols} does not match d={d}, k={k}, kind={kind}")
    entries = _parse_pairs(doc.get("entries"), rows * cols, "entries")
    mf = MatrixFile(d, k, kind, entries.reshape(rows, cols))
    check_matrix(mf)
    return mf


def build_matrix(d: int, k: int, kind: str) -> MatrixFile:
    w = build_cg_symmetric(d, k)
    if kind == "isometry":
        return MatrixFile(d, k, kind, w.matrix)
    if kind == "unitary":
        return MatrixFile(d, k, kind, np.array(complete_to_unitary(w).matrix))
    raise ValueError(f"unknown kind {kind!r}")


def atomic_write(path: Path, text: str) -> None:
    """Write via a temporary file in the same directory and rename over ``path``."""
    path.parent.mkdir(parents=True, exist_ok=True)
    fd, tmp = tempfile.mkstemp(dir=path.parent, prefix=f".{path.name}.", suffix=".tmp")
    try:
        with os.fdopen(fd, "w") as fh:
            fh.write(text)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def default_cache_dir() -> Path:
    env = os.environ.get(CACHE_ENV)
    if env:
        return Path(env)
    base = os.environ.get("XDG_CACHE_HOME") or Path.home() / ".cache"
    return Path(base) / "schurpress"


class CgCache:
    """CG matrices on disk keyed by ``(d, k, kind)``; entries are re-verified on load."""

    def __init__(self, directory=None):
        self.directory = Path(directory) if directory is not None else default_cache_dir()

    def path_for(self, d: int, k: int, kind: str) -> Path:
        return self.directory / f"cg-d{d}-k{k}-{kind}.json"

    def get(self, d: int, k: int, kind: str) -> MatrixFile:
        path = self.path_for(d, k, kind)
        if path.exists():
            mf = loads_matrix(path.read_text())
            if (mf.d, mf.k, mf.kind) != (d, k, kind):
                raise FormatError(f"cache entry {path} holds d={mf.d}, k={mf.k}, kind={mf.kind}")
            return mf
        mf = build_matrix(d, k, kind)
        atomic_write(path, dumps_matrix(mf))
        return mf
