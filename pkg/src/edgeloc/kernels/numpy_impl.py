"""Pure-numpy implementations of the pixel-domain kernels.

These are the fallback path used when numba is unavailable or disabled via
``EDGELOC_DISABLE_NUMBA=1``. The numba twins in ``numba_impl`` follow the
same tap ordering so float results agree bit-for-bit wherever the
accumulation order is shared (blur, sobel, nms, hysteresis, edt).
"""

import numpy as np
import scipy.ndimage as ndi

# tan(pi/8), tan(3pi/8): gradient-direction bin boundaries for NMS
T1 = 0.4142135623730951
T2 = 2.414213562373095


def gaussian_kernel1d(sigma: float) -> np.ndarray:
    """Normalized 1-D Gaussian taps, radius ceil(3*sigma)."""
    radius = int(np.ceil(3.0 * sigma))
    x = np.arange(-radius, radius + 1, dtype=np.float64)
    k = np.exp(-(x * x) / (2.0 * sigma * sigma))
    return k / k.sum()


def _reflect_pad(a: np.ndarray, r: int, axis: int) -> np.ndarray:
    pads = [(0, 0), (0, 0)]
    pads[axis] = (r, r)
    return np.pad(a, pads, mode="reflect")


def gaussian_blur(gray: np.ndarray, sigma: float) -> np.ndarray:
    """Separable Gaussian blur with reflect boundary."""
    k = gaussian_kernel1d(sigma)
    r = len(k) // 2
    h, w = gray.shape
    padded = _reflect_pad(gray.astype(np.float64), r, axis=1)
    tmp = np.zeros((h, w), dtype=np.float64)
    for t in range(len(k)):
        tmp += k[t] * padded[:, t : t + w]
    padded = _reflect_pad(tmp, r, axis=0)
    out = np.zeros((h, w), dtype=np.float64)
    for t in range(len(k)):
        out += k[t] * padded[t : t + h, :]
    return out


def sobel(gray: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """3x3 Sobel derivatives (gx along columns, gy along rows), reflect boundary."""
    a = gray.astype(np.float64)
    h, w = a.shape
    p = np.pad(a, 1, mode="reflect")
    gx = np.zeros((h, w), dtype=np.float64)
    gy = np.zeros((h, w), dtype=np.float64)
    # row-major tap order matches the numba loop exactly
    kx = ((-1.0, 0.0, 1.0), (-2.0, 0.0, 2.0), (-1.0, 0.0, 1.0))
    ky = ((-1.0, -2.0, -1.0), (0.0, 0.0, 0.0), (1.0, 2.0, 1.0))
    for di in range(3):
        for dj in range(3):
            view = p[di : di + h, dj : dj + w]
            if kx[di][dj] != 0.0:
                gx += kx[di][dj] * view
            if ky[di][dj] != 0.0:
                gy += ky[di][dj] * view
    return gx, gy


def nonmax_suppress(mag: np.ndarray, gx: np.ndarray, gy: np.ndarray) -> np.ndarray:
    """Directional non-maximum suppression.

    Keeps a pixel when its magnitude strictly exceeds the forward neighbour
    and is >= the backward neighbour along the quantized gradient direction;
    border pixels are never kept.
    """
    h, w = mag.shape
    out = np.zeros((h, w), dtype=bool)
    if h < 3 or w < 3:
        return out
    fgx = np.where((gy < 0) | ((gy == 0) & (gx < 0)), -gx, gx)
    fgy = np.where((gy < 0) | ((gy == 0) & (gx < 0)), -gy, gy)
    horiz = fgy <= T1 * fgx
    vert = ~horiz & (fgy >= T2 * np.abs(fgx))
    diag1 = ~horiz & ~vert & (fgx > 0)
    diag2 = ~horiz & ~vert & ~diag1
    for sel, (di, dj) in ((horiz, (0, 1)), (vert, (1, 0)), (diag1, (1, 1)), (diag2, (1, -1))):
        fwd = np.full((h, w), np.inf)
        bwd = np.full((h, w), np.inf)
        fwd[1:-1, 1:-1] = mag[1 + di : h - 1 + di, 1 + dj : w - 1 + dj]
        bwd[1:-1, 1:-1] = mag[1 - di : h - 1 - di, 1 - dj : w - 1 - dj]
        keep = sel & (mag > fwd) & (mag >= bwd)
        out |= keep
    out[0, :] = out[-1, :] = False
    out[:, 0] = out[:, -1] = False
    return out


def hysteresis(nms: np.ndarray, mag: np.ndarray, low: float, high: float) -> np.ndarray:
    """Double threshold + 8-connected hysteresis linking."""
    weak = nms & (mag >= low)
    strong = nms & (mag >= high)
    if not strong.any():
        return np.zeros_like(weak)
    labels, n = ndi.label(weak, structure=np.ones((3, 3), dtype=int))
    keep_ids = np.unique(labels[strong])
    keep_ids = keep_ids[keep_ids > 0]
    return np.isin(labels, keep_ids)


def euclidean_edt(edges: np.ndarray) -> np.ndarray:
    """Exact Euclidean distance to the nearest edge pixel.

    Returns +inf everywhere when there are no edges.
    """
    if not edges.any():
        return np.full(edges.shape, np.inf, dtype=np.float64)
    return ndi.distance_transform_edt(~edges).astype(np.float64)


def local_variance(gray: np.ndarray, win: int) -> np.ndarray:
    """Windowed variance with border-clipped windows (integral-image based)."""
    a = gray.astype(np.float64)
    h, w = a.shape
    r = win // 2
    s1 = np.zeros((h + 1, w + 1), dtype=np.float64)
    s2 = np.zeros((h + 1, w + 1), dtype=np.float64)
    np.cumsum(np.cumsum(a, axis=0), axis=1, out=s1[1:, 1:])
    np.cumsum(np.cumsum(a * a, axis=0), axis=1, out=s2[1:, 1:])
    i = np.arange(h)[:, None]
    j = np.arange(w)[None, :]
    i0 = np.maximum(i - r, 0)
    i1 = np.minimum(i + r + 1, h)
    j0 = np.maximum(j - r, 0)
    j1 = np.minimum(j + r + 1, w)
    i0b, i1b = np.broadcast_to(i0, (h, w)), np.broadcast_to(i1, (h, w))
    j0b, j1b = np.broadcast_to(j0, (h, w)), np.broadcast_to(j1, (h, w))
    cnt = ((i1b - i0b) * (j1b - j0b)).astype(np.float64)
    box1 = s1[i1b, j1b] - s1[i0b, j1b] - s1[i1b, j0b] + s1[i0b, j0b]
    box2 = s2[i1b, j1b] - s2[i0b, j1b] - s2[i1b, j0b] + s2[i0b, j0b]
    mean = box1 / cnt
    var = box2 / cnt - mean * mean
    return np.maximum(var, 0.0)
