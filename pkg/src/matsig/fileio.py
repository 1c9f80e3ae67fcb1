"""JSON file formats for signal families and sampled data.

Two desk-scale schemas, both versioned "1":

* signal files hold exact basis coefficients; save -> load round-trips
  bit-exactly because entries are written as [re, im] float pairs through
  Python's shortest-round-trip float repr;
* sampled files hold grid samples f(t_m) of a signal measured in time, plus a
  quadrature rule.  Ingestion maps samples to coefficients c_m = sqrt(w_m)
  f(t_m), so coefficient inner products equal the quadrature approximation of
  the defining integral.  This is the single approximation layer of the
  package; everything downstream of ingestion is exact.

Unknown top-level keys are ignored on load, so report-bearing files written by
the CLI remain valid signal files.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

import numpy as np
from numpy.polynomial import legendre

from .core import MatrixSignal, SignalFamily
from .errors import SchemaError

__all__ = [
    "SCHEMA_VERSION",
    "SampledSignals",
    "save_family",
    "load_family",
    "family_to_doc",
    "family_from_doc",
    "save_sampled",
    "load_sampled",
    "ingest_sampled",
    "quadrature_weights",
]

SCHEMA_VERSION = "1"


def _entry(value) -> list[float]:
    z = complex(value)
    return [float(z.real), float(z.imag)]


def _matrix_to_doc(matrix: np.ndarray) -> list:
    return [[_entry(matrix[i, j]) for j in range(matrix.shape[1])] for i in range(matrix.shape[0])]


def _require(doc: dict, key: str, path: str):
    if key not in doc:
        raise SchemaError(f"{path}.{key}" if path else key, "missing required field")
    return doc[key]


def _int_field(doc: dict, key: str, path: str) -> int:
    value = _require(doc, key, path)
    if not isinstance(value, int) or isinstance(value, bool) or value < 1:
        raise SchemaError(f"{path}.{key}" if path else key, f"expected a positive integer, got {value!r}")
    return value


def _parse_matrix(doc, n: int, path: str) -> np.ndarray:
    if not isinstance(doc, list) or len(doc) != n:
        raise SchemaError(path, f"expected {n} rows")
    out = np.empty((n, n), dtype=np.complex128)
    for i, row in enumerate(doc):
        if not isinstance(row, list) or len(row) != n:
            raise SchemaError(f"{path}[{i}]", f"expected {n} entries")
        for j, entry in enumerate(row):
            if (
                not isinstance(entry, list)
                or len(entry) != 2
                or not all(isinstance(part, (int, float)) and not isinstance(part, bool) for part in entry)
            ):
                raise SchemaError(f"{path}[{i}][{j}]", "expected an [re, im] number pair")
            out[i, j] = complex(entry[0], entry[1])
    return out


def family_to_doc(family: SignalFamily, metadata: dict | None = None) -> dict:
    doc = {
        "schema_version": SCHEMA_VERSION,
        "n": family.n,
        "m": family.m,
        "k": family.k,
        "field": family.field,
        "signals": [
            [_matrix_to_doc(np.asarray(sig.coeffs[m], dtype=np.complex128)) for m in range(family.m)]
            for sig in family
        ],
    }
    if metadata is not None:
        doc["metadata"] = metadata
    return doc


def family_from_doc(doc) -> tuple[SignalFamily, dict]:
    if not isinstance(doc, dict):
        raise SchemaError("", "top-level document must be an object")
    version = _require(doc, "schema_version", "")
    if version != SCHEMA_VERSION:
        raise SchemaError("schema_version", f"unsupported version {version!r}")
    n = _int_field(doc, "n", "")
    m = _int_field(doc, "m", "")
    k = _int_field(doc, "k", "")
    field = _require(doc, "field", "")
    if field not in ("real", "complex"):
        raise SchemaError("field", f"expected 'real' or 'complex', got {field!r}")
    signals_doc = _require(doc, "signals", "")
    if not isinstance(signals_doc, list) or len(signals_doc) != k:
        raise SchemaError("signals", f"expected {k} signals")
    signals = []
    for idx, sig_doc in enumerate(signals_doc):
        if not isinstance(sig_doc, list) or len(sig_doc) != m:
            raise SchemaError(f"signals[{idx}]", f"expected {m} coefficient matrices")
        coeffs = np.stack(
            [_parse_matrix(sig_doc[mm], n, f"signals[{idx}][{mm}]") for mm in range(m)]
        )
        if field == "real" and np.any(coeffs.imag):
            raise SchemaError(f"signals[{idx}]", "real file has nonzero imaginary parts")
        signals.append(MatrixSignal(coeffs, field=field))
    metadata = doc.get("metadata", {})
    if not isinstance(metadata, dict):
        raise SchemaError("metadata", "must be an object when present")
    return SignalFamily(tuple(signals)), metadata


def save_family(path, family: SignalFamily, metadata: dict | None = None) -> None:
    with open(path, "w") as handle:
        json.dump(family_to_doc(family, metadata), handle, indent=1)
        handle.write("\n")


def load_family(path) -> tuple[SignalFamily, dict]:
    with open(path) as handle:
        try:
            doc = json.load(handle)
        except json.JSONDecodeError as exc:
            raise SchemaError("", f"invalid JSON: {exc}") from exc
    return family_from_doc(doc)


@dataclass(frozen=True, eq=False)
class SampledSignals:
    """Grid samples of K signals plus the quadrature rule to ingest them with."""

    grid: np.ndarray
    samples: np.ndarray
    rule: str
    interval: tuple[float, float] | None = None

    def __post_init__(self):
        grid = np.asarray(self.grid, dtype=np.float64)
        samples = np.asarray(self.samples)
        if grid.ndim != 1 or grid.size < 2:
            raise SchemaError("grid", "need at least two sample times")
        if np.any(np.diff(grid) <= 0):
            raise SchemaError("grid", "sample times must be strictly increasing")
        if samples.ndim != 4 or samples.shape[1] != grid.size or samples.shape[2] != samples.shape[3]:
            raise SchemaError(
                "samples", f"expected shape (K, {grid.size}, N, N), got {samples.shape}"
            )
        if self.rule not in ("trapezoid", "gauss-legendre"):
            raise SchemaError("rule", f"expected 'trapezoid' or 'gauss-legendre', got {self.rule!r}")
        if self.rule == "gauss-legendre" and self.interval is None:
            raise SchemaError("interval", "gauss-legendre ingestion requires the interval")
        grid.setflags(write=False)
        object.__setattr__(self, "grid", grid)
        object.__setattr__(self, "samples", samples)


def quadrature_weights(sampled: SampledSignals) -> np.ndarray:
    """Weights w_m of the file's quadrature rule on its grid."""
    grid = sampled.grid
    if sampled.rule == "trapezoid":
        w = np.empty_like(grid)
        w[0] = (grid[1] - grid[0]) / 2.0
        w[-1] = (grid[-1] - grid[-2]) / 2.0
        w[1:-1] = (grid[2:] - grid[:-2]) / 2.0
        return w
    a, b = sampled.interval
    nodes, weights = legendre.leggauss(grid.size)
    mapped_nodes = (b - a) / 2.0 * nodes + (a + b) / 2.0
    if np.max(np.abs(mapped_nodes - grid)) > 1e-9 * max(1.0, abs(b - a)):
        raise SchemaError("grid", "grid does not match the Gauss-Legendre nodes for the interval")
    return (b - a) / 2.0 * weights


def ingest_sampled(sampled: SampledSignals) -> SignalFamily:
    """Map samples to coefficients c_m = sqrt(w_m) f(t_m).

    The coefficient-space inner product of the result equals the quadrature
    approximation of the time-domain inner product under the file's rule.
    """
    weights = quadrature_weights(sampled)
    scaled = np.sqrt(weights)[None, :, None, None] * sampled.samples
    return SignalFamily.from_coeffs(scaled)


def save_sampled(path, sampled: SampledSignals) -> None:
    doc = {
        "schema_version": SCHEMA_VERSION,
        "n": int(sampled.samples.shape[2]),
        "k": int(sampled.samples.shape[0]),
        "rule": sampled.rule,
        "grid": [float(t) for t in sampled.grid],
        "samples": [
            [_matrix_to_doc(np.asarray(sampled.samples[k, m], dtype=np.complex128)) for m in range(sampled.grid.size)]
            for k in range(sampled.samples.shape[0])
        ],
    }
    if sampled.interval is not None:
        doc["interval"] = [float(sampled.interval[0]), float(sampled.interval[1])]
    with open(path, "w") as handle:
        json.dump(doc, handle, indent=1)
        handle.write("\n")


def load_sampled(path) -> SampledSignals:
    with open(path) as handle:
        try:
            doc = json.load(handle)
        except json.JSONDecodeError as exc:
            raise SchemaError("", f"invalid JSON: {exc}") from exc
    if not isinstance(doc, dict):
        raise SchemaError("", "top-level document must be an object")
    version = _require(doc, "schema_version", "")
    if version != SCHEMA_VERSION:
        raise SchemaError("schema_version", f"unsupported version {version!r}")
    n = _int_field(doc, "n", "")
    k = _int_field(doc, "k", "")
    rule = _require(doc, "rule", "")
    grid_doc = _require(doc, "grid", "")
    if not isinstance(grid_doc, list) or not all(
        isinstance(t, (int, float)) and not isinstance(t, bool) for t in grid_doc
    ):
        raise SchemaError("grid", "expected a list of numbers")
    grid = np.asarray(grid_doc, dtype=np.float64)
    samples_doc = _require(doc, "samples", "")
    if not isinstance(samples_doc, list) or len(samples_doc) != k:
        raise SchemaError("samples", f"expected {k} signals")
    samples = np.empty((k, grid.size, n, n), dtype=np.complex128)
    for idx, sig_doc in enumerate(samples_doc):
        if not isinstance(sig_doc, list) or len(sig_doc) != grid.size:
            raise SchemaError(f"samples[{idx}]", f"expected {grid.size} matrices")
        for mm in range(grid.size):
            samples[idx, mm] = _parse_matrix(sig_doc[mm], n, f"samples[{idx}][{mm}]")
    interval = None
    if "interval" in doc:
        iv = doc["interval"]
        if (
            not isinstance(iv, list)
            or len(iv) != 2
            or not all(isinstance(x, (int, float)) and not isinstance(x, bool) for x in iv)
            or not iv[0] < iv[1]
        ):
            raise SchemaError("interval", "expected [a, b] with a < b")
        interval = (float(iv[0]), float(iv[1]))
    return SampledSignals(grid=grid, samples=samples, rule=rule, interval=interval)
