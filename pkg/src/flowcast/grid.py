"""Shared grid types: grayscale frames, dense flow fields, and sampling."""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np


class GridMismatchError(ValueError):
    """Two grids that must share dimensions do not."""


@dataclass(frozen=True)
class Vec2:
    x: float
    y: float

    def __post_init__(self):
        if not (np.isfinite(self.x) and np.isfinite(self.y)):
            raise ValueError(f"Vec2 components must be finite, got ({self.x}, {self.y})")

    def as_array(self) -> np.ndarray:
        return np.array([self.x, self.y], dtype=np.float64)


class GrayFrame:
    """H x W intensity grid, row-major, every value in [0, 1].

    (x, y) indexes (column, row); origin top-left, y grows downward.
    The pixel array is frozen after construction.
    """

    __slots__ = ("pixels",)

    def __init__(self, pixels: np.ndarray):
        arr = np.asarray(pixels, dtype=np.float64)
        if arr.ndim != 2 or arr.shape[0] < 1 or arr.shape[1] < 1:
            raise ValueError(f"GrayFrame needs a 2-D (H, W) array, got shape {arr.shape}")
        if not np.all(np.isfinite(arr)):
            raise ValueError("GrayFrame intensities must be finite")
        if arr.min() < 0.0 or arr.max() > 1.0:
            raise ValueError(
                f"GrayFrame intensities must lie in [0, 1], got range [{arr.min()}, {arr.max()}]"
            )
        arr = arr.copy()
        arr.setflags(write=False)
        object.__setattr__(self, "pixels", arr)

    def __setattr__(self, name, value):
        raise AttributeError("GrayFrame is immutable")

    @property
    def height(self) -> int:
        return self.pixels.shape[0]

    @property
    def width(self) -> int:
        return self.pixels.shape[1]


class FlowField:
    """H x W grid of 2-D displacement vectors (u, v), in pixels per frame."""

    __slots__ = ("vectors",)

    def __init__(self, vectors: np.ndarray):
        arr = np.asarray(vectors, dtype=np.float64)
        if arr.ndim != 3 or arr.shape[2] != 2 or arr.shape[0] < 1 or arr.shape[1] < 1:
            raise ValueError(f"FlowField needs an (H, W, 2) array, got shape {arr.shape}")
        if not np.all(np.isfinite(arr)):
            raise ValueError("FlowField components must be finite")
        arr = arr.copy()
        arr.setflags(write=False)
        object.__setattr__(self, "vectors", arr)

    def __setattr__(self, name, value):
        raise AttributeError("FlowField is immutable")

    @property
    def height(self) -> int:
        return self.vectors.shape[0]

    @property
    def width(self) -> int:
        return self.vectors.shape[1]

    @staticmethod
    def zeros(height: int, width: int) -> "FlowField":
        return FlowField(np.zeros((height, width, 2)))

    @staticmethod
    def uniform(height: int, width: int, u: float, v: float) -> "FlowField":
        arr = np.empty((height, width, 2))
        arr[..., 0] = u
        arr[..., 1] = v
        return FlowField(arr)


def bilinear_sample(field: FlowField, p: Vec2) -> Vec2:
    """Bilinearly interpolate the flow at a (possibly fractional) position.

    Coordinates outside [0, width-1] x [0, height-1] are clamped to the
    border, so sampling is total. Exact at integer grid points.
    """
    w, h = field.width, field.height
    px = min(max(p.x, 0.0), float(w - 1))
    py = min(max(p.y, 0.0), float(h - 1))
    x0 = int(np.floor(px))
    y0 = int(np.floor(py))
    x1 = min(x0 + 1, w - 1)
    y1 = min(y0 + 1, h - 1)
    fx = px - x0
    fy = py - y0
    v = field.vectors
    top = (1.0 - fx) * v[y0, x0] + fx * v[y0, x1]
    bot = (1.0 - fx) * v[y1, x0] + fx * v[y1, x1]
    out = (1.0 - fy) * top + fy * bot
    return Vec2(float(out[0]), float(out[1]))


def endpoint_error(a: FlowField, b: FlowField) -> float:
    """Mean Euclidean distance between corresponding vectors of two fields."""
    if a.height != b.height or a.width != b.width:
        raise GridMismatchError(
            f"flow fields have incompatible grids: {a.width}x{a.height} vs {b.width}x{b.height}"
        )
    diff = a.vectors - b.vectors
    return float(np.mean(np.sqrt(diff[..., 0] ** 2 + diff[..., 1] ** 2)))
