from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path

import numpy as np

from ._typing import FloatArray
from .diagnostics import TimeSeries
from .field import Field, Grid2D

SNAPSHOT_MAGIC = b"TFCH"
SNAPSHOT_VERSION = 1
_HEADER_BYTES = 4 + 3 * 4 + 3 * 8

CSV_COLUMNS = ("step", "t", "energy", "mass", "length_sf", "length_energy")
# CSV column -> TimeSeries column; "energy" is the energy per unit area.
_CSV_SOURCE = {
    "step": "step",
    "t": "t",
    "energy": "energy_per_area",
    "mass": "mass",
    "length_sf": "length_sf",
    "length_energy": "length_energy",
}


@dataclass(frozen=True)
class Snapshot:
    """
    Field snapshot in the TFCH binary layout.

    Layout: magic ``TFCH``; little-endian u32 version, nx, ny; f64 alpha,
    epsilon, t; then nx*ny f64 values, row-major with x fastest.
    """

    values: FloatArray
    alpha: float
    epsilon: float
    t: float

    def __post_init__(self) -> None:
        arr = np.asarray(self.values, dtype=np.float64)
        if arr.ndim != 2:
            raise ValueError(f"snapshot values must be 2D (ny, nx); got shape {arr.shape}.")
        object.__setattr__(self, "values", arr)

    @classmethod
    def from_field(cls, u: Field, *, alpha: float, epsilon: float, t: float) -> Snapshot:
        return cls(values=u.values, alpha=float(alpha), epsilon=float(epsilon), t=float(t))

    @property
    def nx(self) -> int:
        return int(self.values.shape[1])

    @property
    def ny(self) -> int:
        return int(self.values.shape[0])

    def to_field(self, lx: float = 1.0, ly: float = 1.0) -> Field:
        return Field(grid=Grid2D(nx=self.nx, ny=self.ny, lx=lx, ly=ly), values=self.values)

    def to_bytes(self) -> bytes:
        head = np.array([SNAPSHOT_VERSION, self.nx, self.ny], dtype="<u4").tobytes()
        meta = np.array([self.alpha, self.epsilon, self.t], dtype="<f8").tobytes()
        return SNAPSHOT_MAGIC + head + meta + self.values.astype("<f8").tobytes(order="C")

    @classmethod
    def from_bytes(cls, data: bytes) -> Snapshot:
        if len(data) < _HEADER_BYTES or data[:4] != SNAPSHOT_MAGIC:
            raise ValueError("not a TFCH snapshot (bad magic or truncated header).")
        version, nx, ny = (int(v) for v in np.frombuffer(data, dtype="<u4", count=3, offset=4))
        if version != SNAPSHOT_VERSION:
            raise ValueError(f"unsupported snapshot version {version}.")
        alpha, epsilon, t = (float(v) for v in np.frombuffer(data, dtype="<f8", count=3, offset=16))
        expected = _HEADER_BYTES + 8 * nx * ny
        if len(data) != expected:
            raise ValueError(f"snapshot size {len(data)} does not match {nx}x{ny} ({expected} bytes).")
        values = np.frombuffer(data, dtype="<f8", count=nx * ny, offset=_HEADER_BYTES)
        return cls(
            values=values.astype(np.float64).reshape(ny, nx), alpha=alpha, epsilon=epsilon, t=t
        )


def write_snapshot(path: str | Path, snap: Snapshot) -> Path:
    p = Path(path)
    p.write_bytes(snap.to_bytes())
    return p


def read_snapshot(path: str | Path) -> Snapshot:
    return Snapshot.from_bytes(Path(path).read_bytes())


def pgm_pixels(values: FloatArray) -> np.ndarray:
    """Map u in [-1, 1] to 0..255 by floor((u + 1) / 2 * 255 + 0.5), clamped."""
    scaled = np.floor((np.asarray(values, dtype=np.float64) + 1.0) * 0.5 * 255.0 + 0.5)
    return np.clip(scaled, 0.0, 255.0).astype(np.uint8)


def write_pgm(path: str | Path, values: FloatArray) -> Path:
    """8-bit binary PGM (P5); image row j is grid row y_j."""
    pix = pgm_pixels(values)
    if pix.ndim != 2:
        raise ValueError(f"PGM needs a 2D array; got shape {pix.shape}.")
    ny, nx = pix.shape
    p = Path(path)
    p.write_bytes(f"P5\n{nx} {ny}\n255\n".encode("ascii") + pix.tobytes(order="C"))
    return p


def read_pgm(path: str | Path) -> np.ndarray:
    data = Path(path).read_bytes()
    parts = data.split(maxsplit=4)
    if len(parts) < 5 or parts[0] != b"P5":
        raise ValueError(f"{path}: not a binary PGM.")
    nx, ny, maxval = int(parts[1]), int(parts[2]), int(parts[3])
    if maxval != 255:
        raise ValueError(f"{path}: only 8-bit PGM is supported.")
    pix = np.frombuffer(data[len(data) - nx * ny :], dtype=np.uint8)
    return pix.reshape(ny, nx)


def write_series_csv(path: str | Path, series: TimeSeries) -> Path:
    """Series CSV with header ``step,t,energy,mass,length_sf,length_energy``."""
    cols = [series.column(_CSV_SOURCE[c]) for c in CSV_COLUMNS]
    table = np.column_stack(cols) if len(series) else np.empty((0, len(CSV_COLUMNS)))
    p = Path(path)
    np.savetxt(
        p,
        table,
        delimiter=",",
        header=",".join(CSV_COLUMNS),
        comments="",
        fmt=["%d"] + ["%.17g"] * (len(CSV_COLUMNS) - 1),
    )
    return p


def read_series_csv(path: str | Path) -> dict[str, FloatArray]:
    """Columns of a series CSV keyed by header name."""
    p = Path(path)
    lines = p.read_text(encoding="utf-8").splitlines()
    if not lines or not lines[0].strip():
        raise ValueError(f"{p}: empty CSV.")
    names = [h.strip() for h in lines[0].split(",")]
    body = [ln for ln in lines[1:] if ln.strip()]
    if not body:
        return {n: np.empty(0) for n in names}
    table = np.loadtxt(body, delimiter=",", ndmin=2, dtype=np.float64)
    if table.shape[1] != len(names):
        raise ValueError(f"{p}: rows have {table.shape[1]} fields, header has {len(names)}.")
    return {n: table[:, j] for j, n in enumerate(names)}


__all__ = [
    "CSV_COLUMNS",
    "SNAPSHOT_MAGIC",
    "SNAPSHOT_VERSION",
    "Snapshot",
    "pgm_pixels",
    "read_pgm",
    "read_series_csv",
    "read_snapshot",
    "write_pgm",
    "write_series_csv",
    "write_snapshot",
]
