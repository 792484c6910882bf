"""Synthetic 2-D shapes on a 64 x 64 grid (``a[x, y]`` indexing)."""

import numpy as np

N = 64
_g = np.arange(N) + 0.5
X, Y = np.meshgrid(_g, _g, indexing="ij")


def disk(cx=24, cy=30, rad=12):
    return (X - cx) ** 2 + (Y - cy) ** 2 <= rad**2


def ellipse(cx=26, cy=28, ax=14, ay=8):
    return ((X - cx) / ax) ** 2 + ((Y - cy) / ay) ** 2 <= 1


def bar(x0=10, x1=40, y0=20, y1=28):
    return (X >= x0) & (X < x1) & (Y >= y0) & (Y < y1)


def ell(x0=10, y0=10):
    return ((X >= x0) & (X < x0 + 28) & (Y >= y0) & (Y < y0 + 8)) | (
        (X >= x0) & (X < x0 + 8) & (Y >= y0) & (Y < y0 + 32)
    )


def triangle(x0=8, y0=8, size=34):
    return (X >= x0) & (Y >= y0) & ((X - x0) + 0.6 * (Y - y0) <= size)


def half_disk(cx=28, cy=16, rad=16):
    return disk(cx, cy, rad) & (Y >= cy)


SHAPES = {
    "disk": disk,
    "bar": bar,
    "ell": ell,
    "triangle": triangle,
    "half_disk": half_disk,
}


def rotate_translate(a, quarters, dx, dy):
    """Cell-exact rotation by quarter turns, then translation by whole cells."""
    b = np.rot90(a, quarters)
    out = np.zeros_like(b)
    xs, ys = np.nonzero(b)
    xs, ys = xs + dx, ys + dy
    if xs.min() < 0 or ys.min() < 0 or xs.max() >= a.shape[0] or ys.max() >= a.shape[1]:
        raise ValueError("translated shape leaves the grid")
    out[xs, ys] = True
    return out
