"""Convex polytopes in vertex representation and the linear maps acting on them.

A body is a convex polytope given by an explicit vertex list plus an optional
simplicial triangulation stored as vertex-index tuples.  The vertex list is
the authority for support queries; the triangulation is the authority for
volume, membership and integration.  Vertex lists may contain redundant
(non-extreme) points; support queries are unaffected by them.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass
from typing import Iterator, Sequence

import numpy as np

# Relative tolerance for rank / affine-independence decisions.
RANK_TOL = 1e-10
# Relative tolerance for classifying a point as lying on a hyperplane.
ON_PLANE_TOL = 1e-12
# Barycentric-coordinate tolerance for membership tests.
MEMBERSHIP_TOL = 1e-10
# The exact hull construction is brute force and restricted to desk scale.
HULL_MAX_DIM = 4
HULL_MAX_POINTS = 25


def _as_matrix(points, n=None) -> np.ndarray:
    pts = np.asarray(points, dtype=float)
    if pts.ndim == 1:
        pts = pts.reshape(1, -1)
    if pts.ndim != 2:
        raise ValueError("expected a 2-d array of points")
    if n is not None and pts.shape[1] != n:
        raise ValueError(f"points have dimension {pts.shape[1]}, expected {n}")
    return pts


def _as_vector(u, n) -> np.ndarray:
    v = np.asarray(u, dtype=float).reshape(-1)
    if v.shape[0] != n:
        raise ValueError(f"vector has dimension {v.shape[0]}, expected {n}")
    return v


def _coord_scale(points: np.ndarray) -> float:
    """Largest vertex norm; the reference scale for relative tolerances."""
    if points.size == 0:
        return 0.0
    return float(np.linalg.norm(points, axis=1).max())


def affine_rank(points, tol: float = RANK_TOL) -> int:
    """Dimension of the affine hull of the given points."""
    pts = _as_matrix(points)
    if pts.shape[0] <= 1:
        return 0
    diffs = pts[1:] - pts[0]
    sv = np.linalg.svd(diffs, compute_uv=False)
    scale = _coord_scale(pts)
    if scale == 0.0:
        return 0
    return int(np.sum(sv > tol * scale))


@dataclass(frozen=True, eq=False)
class LinearMap:
    """An n-by-n real matrix with its determinant cached at construction."""

    matrix: np.ndarray
    det: float

    def __init__(self, matrix):
        m = np.array(matrix, dtype=float)
        if m.ndim != 2 or m.shape[0] != m.shape[1]:
            raise ValueError("linear map must be a square matrix")
        m.setflags(write=False)
        object.__setattr__(self, "matrix", m)
        object.__setattr__(self, "det", float(np.linalg.det(m)))

    @property
    def n(self) -> int:
        return self.matrix.shape[0]

    @classmethod
    def identity(cls, n: int) -> "LinearMap":
        return cls(np.eye(n))

    def transpose(self) -> "LinearMap":
        return LinearMap(self.matrix.T)

    def __matmul__(self, other: "LinearMap") -> "LinearMap":
        return LinearMap(self.matrix @ other.matrix)

    def apply(self, u) -> np.ndarray:
        return self.matrix @ _as_vector(u, self.n)

    def apply_transpose(self, u) -> np.ndarray:
        return self.matrix.T @ _as_vector(u, self.n)

    def to_dict(self) -> dict:
        return {"n": self.n, "entries": self.matrix.tolist()}

    @classmethod
    def from_dict(cls, data: dict) -> "LinearMap":
        m = np.asarray(data["entries"], dtype=float)
        if m.shape != (data["n"], data["n"]):
            raise ValueError("matrix entries do not match declared dimension")
        return cls(m)


@dataclass(frozen=True, eq=False)
class Hyperplane:
    """Points x with <x, normal> = offset."""

    normal: np.ndarray
    offset: float

    def __init__(self, normal, offset: float = 0.0):
        nrm = np.array(normal, dtype=float).reshape(-1)
        if not np.linalg.norm(nrm) > 0.0:
            raise ValueError("hyperplane normal must be nonzero")
        nrm.setflags(write=False)
        object.__setattr__(self, "normal", nrm)
        object.__setattr__(self, "offset", float(offset))

    @property
    def n(self) -> int:
        return self.normal.shape[0]

    def signed_distances(self, points) -> np.ndarray:
        """Distances with the normal scaled to unit length."""
        pts = _as_matrix(points, self.n)
        length = np.linalg.norm(self.normal)
        return (pts @ self.normal - self.offset) / length


@dataclass(frozen=True, eq=False)
class Simplex:
    """k+1 vertices in R^n; the atomic integration domain."""

    vertices: np.ndarray

    def __init__(self, vertices):
        v = np.array(_as_matrix(vertices))
        v.setflags(write=False)
        object.__setattr__(self, "vertices", v)

    @property
    def n(self) -> int:
        return self.vertices.shape[1]

    @property
    def k(self) -> int:
        return self.vertices.shape[0] - 1

    def affine_rank(self) -> int:
        return affine_rank(self.vertices)

    def measure(self) -> float:
        """k-dimensional volume; 0.0 for degenerate simplices, 1.0 for a point."""
        return _simplex_measure(self.vertices)


def _simplex_measure(verts: np.ndarray) -> float:
    k = verts.shape[0] - 1
    if k == 0:
        return 1.0
    d = verts[1:] - verts[0]
    if k == verts.shape[1]:
        return abs(float(np.linalg.det(d))) / _factorial(k)
    gram = d @ d.T
    g = float(np.linalg.det(gram))
    return float(np.sqrt(max(g, 0.0))) / _factorial(k)


def _factorial(k: int) -> float:
    out = 1.0
    for i in range(2, k + 1):
        out *= i
    return out


@dataclass(frozen=True, eq=False)
class Body:
    """Convex polytope: ambient dimension, vertex list, optional triangulation.

    ``simplices`` holds index tuples into ``vertices``.  ``None`` means no
    triangulation is attached (support queries still work); an empty body has
    an empty vertex array.
    """

    n: int
    vertices: np.ndarray
    simplices: tuple[tuple[int, ...], ...] | None

    def __init__(self, n: int, vertices, simplices=None):
        if n < 1:
            raise ValueError("ambient dimension must be at least 1")
        verts = np.array(vertices, dtype=float).reshape(-1, n)
        verts.setflags(write=False)
        tri = None
        if simplices is not None:
            tri = tuple(tuple(int(i) for i in s) for s in simplices)
            for s in tri:
                if not s or min(s) < 0 or max(s) >= verts.shape[0]:
                    raise ValueError("triangulation index out of range")
        object.__setattr__(self, "n", int(n))
        object.__setattr__(self, "vertices", verts)
        object.__setattr__(self, "simplices", tri)

    @classmethod
    def empty(cls, n: int) -> "Body":
        return cls(n, np.zeros((0, n)), ())

    @classmethod
    def from_simplex(cls, vertices) -> "Body":
        verts = _as_matrix(vertices)
        return cls(verts.shape[1], verts, (tuple(range(verts.shape[0])),))

    @property
    def is_empty(self) -> bool:
        return self.vertices.shape[0] == 0

    @property
    def num_vertices(self) -> int:
        return self.vertices.shape[0]

    def support(self, u) -> float:
        """max over vertices of <v, u>."""
        if self.is_empty:
            raise ValueError("support function of an empty body")
        return float(np.max(self.vertices @ _as_vector(u, self.n)))

    def support_many(self, dirs) -> np.ndarray:
        if self.is_empty:
            raise ValueError("support function of an empty body")
        return np.max(_as_matrix(dirs, self.n) @ self.vertices.T, axis=1)

    def dimension(self) -> int:
        if self.is_empty:
            raise ValueError("dimension of an empty body")
        return affine_rank(self.vertices)

    def simplex(self, i: int) -> Simplex:
        self._require_triangulation()
        return Simplex(self.vertices[list(self.simplices[i])])

    def iter_simplex_vertices(self) -> Iterator[np.ndarray]:
        self._require_triangulation()
        for s in self.simplices:
            yield self.vertices[list(s)]

    def full_dim_simplex_vertices(self) -> list[np.ndarray]:
        """Vertex arrays of the triangulation simplices with k = n."""
        self._require_triangulation()
        return [self.vertices[list(s)] for s in self.simplices if len(s) == self.n + 1]

    def volume(self) -> float:
        """Measure of the body in the dimension of its affine hull."""
        self._require_triangulation()
        if self.is_empty:
            return 0.0
        d = self.dimension()
        if d == 0:
            return 0.0
        total = 0.0
        for s in self.simplices:
            if len(s) - 1 == d:
                total += _simplex_measure(self.vertices[list(s)])
        return total

    def contains_origin(self) -> bool:
        self._require_triangulation()
        if self.is_empty:
            return False
        return bool(membership_mask(self, np.zeros((1, self.n)))[0])

    def bounding_box(self) -> tuple[np.ndarray, np.ndarray]:
        if self.is_empty:
            raise ValueError("bounding box of an empty body")
        return self.vertices.min(axis=0), self.vertices.max(axis=0)

    def _require_triangulation(self):
        if self.simplices is None:
            raise ValueError("operation requires a triangulated body")

    def to_dict(self) -> dict:
        data = {"n": self.n, "vertices": self.vertices.tolist()}
        if self.simplices is not None:
            data["simplices"] = [list(s) for s in self.simplices]
        return data

    @classmethod
    def from_dict(cls, data: dict) -> "Body":
        return cls(data["n"], data["vertices"], data.get("simplices"))


def save_body(body: Body, path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(body.to_dict(), fh)


def load_body(path) -> Body:
    with open(path, "r", encoding="utf-8") as fh:
        return Body.from_dict(json.load(fh))


def membership_mask(body: Body, points) -> np.ndarray:
    """Boolean mask: which points lie in some triangulation simplex.

    Uses barycentric coordinates per simplex; works for simplices of any
    dimension (least-squares coordinates plus a residual check).
    """
    body._require_triangulation()
    pts = _as_matrix(points, body.n)
    out = np.zeros(pts.shape[0], dtype=bool)
    if body.is_empty:
        return out
    scale = max(_coord_scale(body.vertices), _coord_scale(pts))
    tol = MEMBERSHIP_TOL * max(scale, 1.0)
    for s in body.simplices:
        verts = body.vertices[list(s)]
        k = verts.shape[0] - 1
        rest = ~out
        if not rest.any():
            break
        x = pts[rest] - verts[0]
        if k == 0:
            inside = np.linalg.norm(x, axis=1) <= tol
        else:
            d = (verts[1:] - verts[0]).T  # n x k
            sol, *_ = np.linalg.lstsq(d, x.T, rcond=None)
            lam = sol.T  # m x k
            resid = np.linalg.norm(d @ sol - x.T, axis=0)
            inside = (
                (resid <= tol)
                & np.all(lam >= -MEMBERSHIP_TOL, axis=1)
                & (lam.sum(axis=1) <= 1.0 + MEMBERSHIP_TOL)
            )
        idx = np.flatnonzero(rest)
        out[idx[inside]] = True
    return out


# ---------------------------------------------------------------------------
# reference bodies


def standard_simplex(n: int) -> Body:
    """conv{o, e_1, ..., e_n} as a single n-simplex."""
    verts = np.vstack([np.zeros(n), np.eye(n)])
    return Body(n, verts, (tuple(range(n + 1)),))


def probability_simplex(n: int) -> Body:
    """conv{e_1, ..., e_n}, an (n-1)-dimensional simplex."""
    if n < 1:
        raise ValueError("need n >= 1")
    return Body(n, np.eye(n), (tuple(range(n)),))


def unit_segment(n: int) -> Body:
    """The segment from the origin to e_1 in R^n."""
    verts = np.zeros((2, n))
    verts[1, 0] = 1.0
    return Body(n, verts, ((0, 1),))


def offset_segment(n: int) -> Body:
    """The segment from e_1 to 2 e_1 in R^n."""
    verts = np.zeros((2, n))
    verts[0, 0] = 1.0
    verts[1, 0] = 2.0
    return Body(n, verts, ((0, 1),))


def upper_right_triangle(n: int = 2) -> Body:
    """conv{e_1, e_2, e_1 + e_2}: the upper-right half of the unit square."""
    if n < 2:
        raise ValueError("need n >= 2")
    verts = np.zeros((3, n))
    verts[0, 0] = 1.0
    verts[1, 1] = 1.0
    verts[2, 0] = verts[2, 1] = 1.0
    return Body(n, verts, ((0, 1, 2),))


def unit_box(extents: Sequence[float] = (1.0, 1.0)) -> Body:
    """Axis-aligned rectangle [0, a] x [0, b], triangulated into two triangles."""
    a, b = float(extents[0]), float(extents[1])
    if a <= 0 or b <= 0:
        raise ValueError("box extents must be positive")
    verts = np.array([[0.0, 0.0], [a, 0.0], [a, b], [0.0, b]])
    return Body(2, verts, ((0, 1, 2), (0, 2, 3)))


_REFERENCE_BUILDERS = {
    "standard_simplex": lambda n, params: standard_simplex(n),
    "probability_simplex": lambda n, params: probability_simplex(n),
    "unit_segment": lambda n, params: unit_segment(n),
    "offset_segment": lambda n, params: offset_segment(n),
    "upper_right_triangle": lambda n, params: upper_right_triangle(n),
    "box": lambda n, params: _box_checked(n, params),
}


def _box_checked(n, params):
    if n != 2:
        raise ValueError("box is only available in dimension 2")
    return unit_box(params if params else (1.0, 1.0))


def reference_body(name: str, n: int, params: Sequence[float] = ()) -> Body:
    """Build a named reference body; see _REFERENCE_BUILDERS for the names."""
    if n < 1:
        raise ValueError("need n >= 1")
    try:
        builder = _REFERENCE_BUILDERS[name]
    except KeyError:
        raise ValueError(f"unknown reference body {name!r}") from None
    return builder(n, tuple(params))


# ---------------------------------------------------------------------------
# linear images, sums, embeddings


def transform(body: Body, phi: LinearMap) -> Body:
    """Image of a body under a linear map.

    The triangulation transfers only when the map is invertible; for a
    singular map the vertex image is still correct for support queries.
    """
    if phi.n != body.n:
        raise ValueError("dimension mismatch between body and map")
    verts = body.vertices @ phi.matrix.T
    tri = body.simplices if abs(phi.det) > 1e-12 else None
    return Body(body.n, verts, tri)


def reflect(body: Body) -> Body:
    """The reflection -K at the origin."""
    return Body(body.n, -body.vertices, body.simplices)


def translate(body: Body, shift) -> Body:
    t = _as_vector(shift, body.n)
    return Body(body.n, body.vertices + t, body.simplices)


def dilate(body: Body, s: float) -> Body:
    """sK for s >= 0."""
    if s < 0:
        raise ValueError("dilation factor must be nonnegative")
    return Body(body.n, body.vertices * s, body.simplices)


def minkowski_sum(a: Body, b: Body) -> Body:
    """Vertex sums of two bodies; redundant points allowed, no triangulation."""
    if a.n != b.n:
        raise ValueError("dimension mismatch")
    if a.is_empty or b.is_empty:
        raise ValueError("minkowski sum of an empty body")
    sums = (a.vertices[:, None, :] + b.vertices[None, :, :]).reshape(-1, a.n)
    return Body(a.n, sums, None)


def embed(body: Body, n_target: int) -> Body:
    """Pad coordinates with zeros up to the target dimension."""
    if n_target < body.n:
        raise ValueError("target dimension below body dimension")
    if n_target == body.n:
        return body
    verts = np.zeros((body.num_vertices, n_target))
    verts[:, : body.n] = body.vertices
    return Body(n_target, verts, body.simplices)


def hausdorff_lower_bound(a: Body, b: Body, dirs) -> float:
    """max over the given unit directions of |h(A,u) - h(B,u)|.

    A lower bound of the Hausdorff distance, exact as the directions become
    dense in the unit sphere.  Non-unit directions are rejected.
    """
    d = _as_matrix(dirs, a.n)
    if d.shape[0] == 0:
        raise ValueError("need at least one direction")
    norms = np.linalg.norm(d, axis=1)
    if np.any(np.abs(norms - 1.0) > 1e-9):
        raise ValueError("directions must be unit vectors")
    return float(np.max(np.abs(a.support_many(d) - b.support_many(d))))


# ---------------------------------------------------------------------------
# shears and random unimodular maps


def shear_pair(lam: float, n: int) -> tuple[LinearMap, LinearMap]:
    """The two shear maps splitting the standard simplex at parameter lam.

    The first fixes e_1 and sends e_2 to (1-lam) e_1 + lam e_2 (determinant
    lam); the second sends e_1 to (1-lam) e_1 + lam e_2 and fixes e_2
    (determinant 1-lam).  All other basis vectors are fixed.
    """
    if not 0.0 < lam < 1.0:
        raise ValueError("shear parameter must lie strictly between 0 and 1")
    if n < 2:
        raise ValueError("need n >= 2")
    first = np.eye(n)
    first[0, 1] = 1.0 - lam
    first[1, 1] = lam
    second = np.eye(n)
    second[0, 0] = 1.0 - lam
    second[1, 0] = lam
    return LinearMap(first), LinearMap(second)


def random_unimodular(n: int, shears: int, seed: int) -> LinearMap:
    """Product of seeded elementary shear matrices; determinant 1."""
    if n < 2:
        raise ValueError("need n >= 2")
    if shears < 0:
        raise ValueError("need shears >= 0")
    rng = np.random.default_rng(seed)
    m = np.eye(n)
    for _ in range(shears):
        i = int(rng.integers(n))
        j = int(rng.integers(n - 1))
        if j >= i:
            j += 1
        e = np.eye(n)
        e[i, j] = rng.uniform(-2.0, 2.0)
        m = m @ e
    return LinearMap(m)


# ---------------------------------------------------------------------------
# clipping


def _split_simplex(verts: np.ndarray, dists: np.ndarray, tol: float):
    """Split one simplex at the zero set of the tracked distances.

    Vertices are replaced by edge intersections between the extreme pair
    (most negative, most positive) and the two halves are split recursively;
    inserted vertices carry distance exactly 0.  Returns two lists of
    (vertices, distances) pairs: nonnegative side first.
    """
    neg = np.flatnonzero(dists < -tol)
    pos = np.flatnonzero(dists > tol)
    if neg.size == 0:
        return [(verts, dists)], []
    if pos.size == 0:
        return [], [(verts, dists)]
    i = neg[np.argmin(dists[neg])]
    j = pos[np.argmax(dists[pos])]
    t = dists[i] / (dists[i] - dists[j])
    cut = verts[i] + t * (verts[j] - verts[i])
    va, da = verts.copy(), dists.copy()
    va[i], da[i] = cut, 0.0
    vb, db = verts.copy(), dists.copy()
    vb[j], db[j] = cut, 0.0
    plus_a, minus_a = _split_simplex(va, da, tol)
    plus_b, minus_b = _split_simplex(vb, db, tol)
    return plus_a + plus_b, minus_a + minus_b


def _body_from_pieces(n: int, pieces: list[tuple[np.ndarray, np.ndarray]]) -> Body:
    if not pieces:
        return Body.empty(n)
    index: dict[bytes, int] = {}
    verts: list[np.ndarray] = []
    tri = []
    for piece_verts, _ in pieces:
        idx = []
        for row in piece_verts:
            key = row.tobytes()
            at = index.get(key)
            if at is None:
                at = len(verts)
                verts.append(row)
                index[key] = at
            idx.append(at)
        tri.append(tuple(idx))
    return Body(n, np.array(verts), tuple(tri))


def clip(body: Body, plane: Hyperplane) -> tuple[Body, Body, Body]:
    """Split a triangulated body at a hyperplane.

    Returns (plus, minus, cut): the intersections with the two closed
    halfspaces and with the hyperplane itself.  Every piece vertex is either
    an original vertex or an edge-hyperplane intersection; the two sides
    partition the body up to the measure-zero cut.
    """
    body._require_triangulation()
    if plane.n != body.n:
        raise ValueError("dimension mismatch between body and hyperplane")
    if body.is_empty:
        e = Body.empty(body.n)
        return e, e, e
    all_dists = plane.signed_distances(body.vertices)
    tol = ON_PLANE_TOL * max(float(np.abs(all_dists).max()), 0.0)
    plus: list[tuple[np.ndarray, np.ndarray]] = []
    minus: list[tuple[np.ndarray, np.ndarray]] = []
    faces: list[np.ndarray] = []
    for s in body.simplices:
        idx = list(s)
        verts = np.array(body.vertices[idx])
        dists = np.array(all_dists[idx])
        side_p, side_m = _split_simplex(verts, dists, tol)
        plus.extend(side_p)
        minus.extend(side_m)
        for piece_verts, piece_dists in itertools.chain(side_p, side_m):
            on = np.abs(piece_dists) <= tol
            if on.any():
                faces.append(piece_verts[on])
    return (
        _body_from_pieces(body.n, plus),
        _body_from_pieces(body.n, minus),
        _cut_body(body.n, faces),
    )


def _cut_body(n: int, faces: list[np.ndarray]) -> Body:
    """Assemble the cut from the on-plane faces of the clip pieces."""
    if not faces:
        return Body.empty(n)
    ranks = [affine_rank(f) for f in faces]
    top = max(ranks)
    seen: set[frozenset[bytes]] = set()
    keep: list[tuple[np.ndarray, np.ndarray]] = []
    for f, r in zip(faces, ranks):
        if r != top or f.shape[0] != r + 1:
            continue
        key = frozenset(row.tobytes() for row in f)
        if key in seen:
            continue
        seen.add(key)
        keep.append((f, np.zeros(f.shape[0])))
    if not keep:
        # isolated touch points / degenerate faces only
        for f in faces:
            key = frozenset(row.tobytes() for row in f)
            if key not in seen:
                seen.add(key)
                keep.append((f, np.zeros(f.shape[0])))
    return _body_from_pieces(n, keep)


# ---------------------------------------------------------------------------
# brute-force hull triangulation (desk scale: dimension <= 4, few vertices)


def _dedup_points(pts: np.ndarray) -> list[int]:
    """Indices of pairwise-distinct representatives (tolerance 1e-12 relative)."""
    scale = max(_coord_scale(pts), 1.0)
    reps: list[int] = []
    for i in range(pts.shape[0]):
        for j in reps:
            if np.linalg.norm(pts[i] - pts[j]) <= 1e-12 * scale:
                break
        else:
            reps.append(i)
    return reps


def _hull_facets(y: np.ndarray, tol: float) -> list[tuple[int, ...]]:
    """Supporting-hyperplane facets of full-dimensional points in R^d."""
    m, d = y.shape
    facets: dict[frozenset[int], tuple[int, ...]] = {}
    for subset in itertools.combinations(range(m), d):
        base = y[subset[0]]
        diffs = y[list(subset[1:])] - base
        _, sv, vt = np.linalg.svd(diffs)
        if np.sum(sv > tol) < d - 1:
            continue  # degenerate subset, spans less than a hyperplane
        normal = vt[-1]
        g = y @ normal - normal @ base
        if g.max() <= tol:
            members = np.flatnonzero(g >= -tol)
        elif g.min() >= -tol:
            members = np.flatnonzero(g <= tol)
        else:
            continue
        key = frozenset(int(i) for i in members)
        if key not in facets:
            facets[key] = tuple(sorted(key))
    return list(facets.values())


def _triangulate_full(y: np.ndarray, labels: list[int], apex: int | None) -> list[tuple[int, ...]]:
    """Triangulate the hull of full-dimensional points; labels name the output."""
    m, d = y.shape
    if d == 0 or m == 1:
        return [(labels[0],)]
    scale = max(float(np.abs(y).max()), 1.0)
    tol = RANK_TOL * scale
    if d == 1:
        lo = int(np.argmin(y[:, 0]))
        hi = int(np.argmax(y[:, 0]))
        return [(labels[lo], labels[hi])]
    if apex is None:
        order = np.lexsort(y.T[::-1])
        apex = int(order[0])
    tris: list[tuple[int, ...]] = []
    for facet in _hull_facets(y, tol):
        if apex in facet:
            continue
        sub = list(facet)
        fy = y[sub]
        diffs = fy - fy[0]
        _, _, vt = np.linalg.svd(diffs, full_matrices=False)
        coords = diffs @ vt[: d - 1].T
        sub_labels = [labels[i] for i in sub]
        for t in _triangulate_full(coords, sub_labels, None):
            tris.append((labels[apex],) + t)
    return tris


def triangulate_convex_points(points, apex_index: int | None = None) -> list[tuple[int, ...]]:
    """Exact triangulation of the convex hull of a small point set.

    Brute-force facet enumeration: every candidate vertex subset is tested
    for a supporting hyperplane, facets are triangulated recursively, and the
    triangulation is the cone from one extreme point over the facets avoiding
    it.  Returns index tuples into the input.  Limited to affine dimension
    <= HULL_MAX_DIM and <= HULL_MAX_POINTS distinct points.
    """
    pts = _as_matrix(points)
    reps = _dedup_points(pts)
    upts = pts[reps]
    d = affine_rank(upts)
    if d > HULL_MAX_DIM:
        raise ValueError(f"exact hull limited to dimension {HULL_MAX_DIM}")
    if len(reps) > HULL_MAX_POINTS:
        raise ValueError(f"exact hull limited to {HULL_MAX_POINTS} distinct points")
    if d == 0:
        return [(reps[0],)]
    base = upts[0]
    diffs = upts - base
    _, _, vt = np.linalg.svd(diffs, full_matrices=False)
    coords = diffs @ vt[:d].T
    apex = None
    if apex_index is not None:
        apex = reps.index(apex_index) if apex_index in reps else None
    return _triangulate_full(coords, reps, apex)


def convex_body_from_points(points) -> Body:
    """Body with hull triangulation over the given points (kept verbatim)."""
    pts = _as_matrix(points)
    tri = triangulate_convex_points(pts)
    return Body(pts.shape[1], pts, tuple(tri))


def hull_with_origin(body: Body) -> Body:
    """Convex hull of a body and the origin, exactly triangulated.

    If the origin already belongs to the body, the body is returned
    unchanged.  Otherwise the origin is appended to the vertex list and the
    hull is triangulated as the cone from the origin (which is then an
    extreme point) over the facets avoiding it.
    """
    body._require_triangulation()
    if body.is_empty:
        raise ValueError("hull with origin of an empty body")
    if body.contains_origin():
        return body
    pts = np.vstack([body.vertices, np.zeros(body.n)])
    origin_index = pts.shape[0] - 1
    tri = triangulate_convex_points(pts, apex_index=origin_index)
    return Body(body.n, pts, tuple(tri))
