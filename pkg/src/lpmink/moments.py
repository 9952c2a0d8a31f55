"""Exact integrals of positive powers of linear forms over simplices.

The integral of max(0, <x,u>)^p over a full-dimensional simplex reduces to a
confluent divided difference of t^(p+n) at the vertex values <v_i, u>: the
simplex is split at the zero set of the form, and on each piece with
nonnegative vertex values

    integral = |det of edge matrix| * (1 / prod_{k=1..n} (p+k)) * [b_0,...,b_n] t^(p+n).

A seeded rejection-sampling Monte Carlo estimate serves as an independent
oracle for the exact path.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .geometry import Body, Simplex, _as_vector, _split_simplex, affine_rank, membership_mask

# Nodes closer than this (relative to the largest node) are merged and the
# derivative rule is used; naive divided differences lose half the mantissa
# when nodes nearly coincide.
NODE_CLUSTER_TOL = 1e-7


def check_exponent(p: float) -> float:
    p = float(p)
    if not p > 1.0:
        raise ValueError("the exponent p must be greater than 1")
    return p


def pochhammer_reciprocal(p: float, n: int) -> float:
    """1 / ((p+1)(p+2)...(p+n)), the moment normalization constant.

    Computed as a telescoping product, never through a Gamma approximation.
    """
    if n < 0:
        raise ValueError("need n >= 0")
    if p <= -1.0:
        raise ValueError("need p > -1")
    out = 1.0
    for k in range(1, n + 1):
        out /= p + k
    return out


def divided_difference_power(nodes, q: float) -> float:
    """Divided difference of t -> t^q over nonnegative nodes.

    Nearly coincident nodes are clustered and handled by the confluent rule
    with the derivatives q(q-1)...(q-k+1) t^(q-k).  Requires q > len(nodes)-1
    so that every derivative used vanishes at t = 0.
    """
    b = np.sort(np.asarray(nodes, dtype=float))
    m = b.size - 1
    if m < 0:
        raise ValueError("need at least one node")
    scale = float(b[-1])
    if b[0] < -NODE_CLUSTER_TOL * max(scale, 0.0):
        raise ValueError("nodes must be nonnegative")
    if not q > m:
        raise ValueError("exponent too small for the confluency order")
    b = np.maximum(b, 0.0)
    # cluster nodes, replacing each cluster by its mean
    z = np.empty(m + 1)
    start = 0
    for i in range(1, m + 2):
        if i == m + 1 or b[i] - b[start] > NODE_CLUSTER_TOL * scale:
            z[start:i] = b[start:i].mean()
            start = i
    # confluent Newton table
    col = np.power(z, q)
    for w in range(1, m + 1):
        nxt = np.empty(m + 1 - w)
        for i in range(m + 1 - w):
            if z[i + w] == z[i]:
                nxt[i] = _power_derivative(z[i], q, w) / _factorial(w)
            else:
                nxt[i] = (col[i + 1] - col[i]) / (z[i + w] - z[i])
        col = nxt
    return float(col[0])


def _power_derivative(t: float, q: float, w: int) -> float:
    coef = 1.0
    for r in range(w):
        coef *= q - r
    return coef * float(np.power(t, q - w))


def _factorial(w: int) -> float:
    out = 1.0
    for i in range(2, w + 1):
        out *= i
    return out


def _nonnegative_piece_moment(verts: np.ndarray, values: np.ndarray, p: float) -> float:
    """Moment over one simplex whose vertex values are all >= 0."""
    n = verts.shape[1]
    det = float(np.linalg.det(verts[1:] - verts[0]))
    if det == 0.0:
        return 0.0
    dd = divided_difference_power(np.maximum(values, 0.0), p + n)
    return abs(det) * pochhammer_reciprocal(p, n) * dd


def _simplex_positive_moment(verts: np.ndarray, u: np.ndarray, p: float) -> float:
    values = verts @ u
    top = float(np.abs(values).max())
    tol = 1e-12 * top
    if values.min() >= -tol:
        return _nonnegative_piece_moment(verts, values, p)
    if values.max() <= tol:
        return 0.0
    plus, _ = _split_simplex(verts, values, tol)
    return sum(_nonnegative_piece_moment(pv, pd, p) for pv, pd in plus)


def simplex_positive_moment(simplex, u, p: float) -> float:
    """integral over the simplex of max(0, <x,u>)^p dx, exactly.

    The simplex must be full-dimensional (k = n and nondegenerate).  The
    result is nonnegative and p-homogeneous in u.
    """
    p = check_exponent(p)
    verts = simplex.vertices if isinstance(simplex, Simplex) else np.asarray(simplex, dtype=float)
    n = verts.shape[1]
    if verts.shape[0] != n + 1:
        raise ValueError("simplex must have n+1 vertices in R^n")
    if affine_rank(verts) < n:
        raise ValueError("degenerate simplex claimed as full-dimensional")
    return _simplex_positive_moment(verts, _as_vector(u, n), p)


def body_positive_moment(body: Body, u, p: float) -> float:
    """integral over the body of max(0, <x,u>)^p dx.

    Sums the triangulation simplices with k = n; lower-dimensional bodies
    give exactly 0.  Additive over interior-disjoint decompositions.
    """
    p = check_exponent(p)
    body._require_triangulation()
    if body.is_empty:
        return 0.0
    vec = _as_vector(u, body.n)
    return sum(
        _simplex_positive_moment(verts, vec, p) for verts in body.full_dim_simplex_vertices()
    )


@dataclass(frozen=True)
class McEstimate:
    """Monte Carlo estimate with its standard error; deterministic per seed."""

    value: float
    stderr: float
    samples: int
    seed: int


def monte_carlo_positive_moment(body: Body, u, p: float, samples: int, seed: int) -> McEstimate:
    """Rejection-sampling estimate of the positive moment over a body.

    Samples uniformly from the axis-aligned bounding box; the integrand is
    the indicator of the body times max(0, <x,u>)^p, so the estimate is the
    box volume times the sample mean.
    """
    p = check_exponent(p)
    if samples < 1000:
        raise ValueError("need at least 1000 samples")
    body._require_triangulation()
    vec = _as_vector(u, body.n)
    if body.is_empty or not body.full_dim_simplex_vertices():
        return McEstimate(0.0, 0.0, samples, seed)
    lo, hi = body.bounding_box()
    box_volume = float(np.prod(hi - lo))
    if box_volume == 0.0:
        return McEstimate(0.0, 0.0, samples, seed)
    rng = np.random.default_rng(seed)
    points = rng.uniform(lo, hi, (samples, body.n))
    inside = membership_mask(body, points)
    vals = np.zeros(samples)
    vals[inside] = np.maximum(points[inside] @ vec, 0.0) ** p
    value = box_volume * float(vals.mean())
    stderr = box_volume * float(vals.std(ddof=1)) / float(np.sqrt(samples))
    return McEstimate(value, stderr, samples, seed)
