"""The valuation operators, evaluated as p-homogeneous functions of a direction.

Six families, each with a plus and a minus version (the minus version of an
operator at K equals the plus version at -K):

  support          max over the body of the positive part of <x,u>, to the p
  support_min      min over the body of the positive part of <x,u>, to the p
  moment           integral over the body of max(0, <x,u>)^p
  moment_gap       the same integral over hull_with_origin(K) minus K
  origin_face      (dimension 2) half the sum, over the faces lying in lines
                   through the origin, of the max of <x,u>_+^p on the face
  origin_face_min  as origin_face with min in place of max

All values live in h^p scale; p-th roots are taken only at presentation
boundaries.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

import numpy as np

from .geometry import Body, _as_vector, affine_rank, hull_with_origin
from .moments import body_positive_moment, check_exponent

FAMILIES = ("support", "support_min", "moment", "moment_gap", "origin_face", "origin_face_min")
SIGNS = ("plus", "minus")

# |h(K,v)| below this times the diameter counts as zero support for the
# origin-face operators; the condition h(K,v) = 0 is fragile in floating point.
ZERO_SUPPORT_TOL = 1e-9
# Round-off below this magnitude is clamped in the gap moment, which is
# nonnegative by construction.
GAP_CLAMP_TOL = 1e-12


@dataclass(frozen=True)
class OperatorKind:
    family: str
    sign: str

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise ValueError(f"unknown operator family {self.family!r}")
        if self.sign not in SIGNS:
            raise ValueError(f"unknown sign {self.sign!r}")

    @property
    def id(self) -> str:
        return self.family + ("+" if self.sign == "plus" else "-")

    @classmethod
    def parse(cls, name: str) -> "OperatorKind":
        name = name.strip()
        if name.endswith("+"):
            return cls(name[:-1], "plus")
        if name.endswith("-"):
            return cls(name[:-1], "minus")
        raise ValueError(f"operator id must end in '+' or '-': {name!r}")


ALL_KINDS = tuple(OperatorKind(f, s) for f in FAMILIES for s in SIGNS)


@dataclass(frozen=True, eq=False)
class PHomFunction:
    """A p-homogeneous evaluable function on R^n."""

    n: int
    p: float
    rule: Callable[[np.ndarray], float]

    def __call__(self, u) -> float:
        return float(self.rule(_as_vector(u, self.n)))

    @classmethod
    def zero(cls, n: int, p: float) -> "PHomFunction":
        return cls(n, p, lambda u: 0.0)


def _signed(u: np.ndarray, sign: str) -> np.ndarray:
    return u if sign == "plus" else -u


def eval_support(sign: str, body: Body, u, p: float) -> float:
    """Positive part of the support function, to the power p."""
    p = check_exponent(p)
    vec = _signed(_as_vector(u, body.n), sign)
    return max(0.0, body.support(vec)) ** p


def eval_support_min(sign: str, body: Body, u, p: float) -> float:
    """Minimum over the body of <x,u>_+^p; zero whenever the origin is inside.

    The minimum of the positive part equals the positive part of the minimum,
    and the minimum of <x,u> over the body is -h(K,-u).
    """
    p = check_exponent(p)
    vec = _signed(_as_vector(u, body.n), sign)
    return max(0.0, -body.support(-vec)) ** p


def eval_moment(sign: str, body: Body, u, p: float) -> float:
    """Moment integral; simple (exactly zero on lower-dimensional bodies)."""
    vec = _signed(_as_vector(u, body.n), sign)
    return body_positive_moment(body, vec, p)


def eval_moment_gap(sign: str, body: Body, u, p: float) -> float:
    """Moment over hull_with_origin(K) minus moment over K.

    Nonnegative since K is contained in its hull with the origin; tiny
    negative round-off is clamped, anything worse is an error.
    """
    hull = hull_with_origin(body)
    return _gap_value(
        eval_moment(sign, hull, u, p),
        eval_moment(sign, body, u, p),
    )


def _gap_value(hull_value: float, body_value: float) -> float:
    gap = hull_value - body_value
    if gap < 0.0:
        if gap < -GAP_CLAMP_TOL * max(1.0, abs(hull_value)):
            raise ValueError("gap moment came out negative beyond tolerance")
        gap = 0.0
    return gap


def eval_origin_face(sign: str, body: Body, u, p: float) -> float:
    p = check_exponent(p)
    vec = _signed(_as_vector(u, body.n), sign)
    return _origin_face_sum(_origin_faces(body), vec, p, minimum=False)


def eval_origin_face_min(sign: str, body: Body, u, p: float) -> float:
    p = check_exponent(p)
    vec = _signed(_as_vector(u, body.n), sign)
    return _origin_face_sum(_origin_faces(body), vec, p, minimum=True)


def _origin_face_sum(faces: list[np.ndarray], u: np.ndarray, p: float, minimum: bool) -> float:
    total = 0.0
    for face in faces:
        vals = np.maximum(face @ u, 0.0) ** p
        total += float(vals.min() if minimum else vals.max())
    return 0.5 * total


def _perp(v: np.ndarray) -> np.ndarray:
    return np.array([-v[1], v[0]])


def _hull_order_2d(points: np.ndarray) -> list[int]:
    """Monotone-chain hull of 2-d points, counterclockwise vertex indices."""
    order = sorted(range(points.shape[0]), key=lambda i: (points[i, 0], points[i, 1]))

    def cross(o, a, b):
        return (points[a, 0] - points[o, 0]) * (points[b, 1] - points[o, 1]) - (
            points[a, 1] - points[o, 1]
        ) * (points[b, 0] - points[o, 0])

    lower: list[int] = []
    for i in order:
        while len(lower) >= 2 and cross(lower[-2], lower[-1], i) <= 0:
            lower.pop()
        lower.append(i)
    upper: list[int] = []
    for i in reversed(order):
        while len(upper) >= 2 and cross(upper[-2], upper[-1], i) <= 0:
            upper.pop()
        upper.append(i)
    return lower[:-1] + upper[:-1]


def _origin_faces(body: Body) -> list[np.ndarray]:
    """Faces of a polygon lying in lines through the origin.

    Candidate directions are the (hull) edge normals together with the
    directions orthogonal to each nonzero hull vertex; every direction with
    vanishing support contributes the face attaining it.  Faces equal to the
    origin alone are dropped (their contribution vanishes identically).
    """
    if body.n != 2:
        raise ValueError("origin-face operators require dimension 2")
    if body.is_empty:
        raise ValueError("origin-face operators need a nonempty body")
    pts = body.vertices
    norms = np.linalg.norm(pts, axis=1)
    diam = 0.0
    for i in range(pts.shape[0]):
        diam = max(diam, float(np.linalg.norm(pts - pts[i], axis=1).max()))
    scale = max(diam, float(norms.max()))
    if scale == 0.0:
        return []  # the body is the origin
    tol = ZERO_SUPPORT_TOL * scale

    rank = affine_rank(pts)
    if rank == 2:
        hull = _hull_order_2d(pts)
        hull_pts = pts[hull]
        edges = [(i, (i + 1) % len(hull)) for i in range(len(hull))]
    else:
        # segment or repeated points: the extreme pair along the spread direction
        diffs = pts - pts[0]
        _, _, vt = np.linalg.svd(diffs)
        t = diffs @ vt[0]
        hull_pts = pts[[int(np.argmin(t)), int(np.argmax(t))]]
        edges = [(0, 1)] if np.linalg.norm(hull_pts[1] - hull_pts[0]) > tol else []

    candidates: list[np.ndarray] = []

    def add(v: np.ndarray):
        length = np.linalg.norm(v)
        if length == 0.0:
            return
        v = v / length
        for w in candidates:
            if np.linalg.norm(v - w) <= 1e-9:
                return
        candidates.append(v)

    for a, b in edges:
        normal = _perp(hull_pts[b] - hull_pts[a])
        add(normal)
        add(-normal)
    for x in hull_pts:
        if np.linalg.norm(x) > tol:
            q = _perp(x)
            add(q)
            add(-q)

    faces = []
    for v in candidates:
        h = body.support(v)
        if abs(h) > tol:
            continue
        vals = pts @ v
        attain = pts[vals >= h - tol]
        if float(np.linalg.norm(attain, axis=1).max()) <= tol:
            continue  # the face is the origin alone
        faces.append(attain)
    return faces


_EVALUATORS = {
    "support": eval_support,
    "support_min": eval_support_min,
    "moment": eval_moment,
    "moment_gap": eval_moment_gap,
    "origin_face": eval_origin_face,
    "origin_face_min": eval_origin_face_min,
}


def evaluate(kind: OperatorKind | str, body: Body, u, p: float) -> float:
    if isinstance(kind, str):
        kind = OperatorKind.parse(kind)
    return _EVALUATORS[kind.family](kind.sign, body, u, p)


def valuation_function(kind: OperatorKind | str, body: Body, p: float) -> PHomFunction:
    """The operator applied to a body, as a reusable p-homogeneous function.

    Precomputes whatever does not depend on the direction (the hull for the
    gap moment, the zero-support faces for the origin-face operators).  Empty
    bodies map to the zero function.
    """
    p = check_exponent(p)
    if isinstance(kind, str):
        kind = OperatorKind.parse(kind)
    n = body.n
    if body.is_empty:
        return PHomFunction.zero(n, p)
    sign = kind.sign

    if kind.family == "moment_gap":
        hull = hull_with_origin(body)
        body_fn = valuation_function(OperatorKind("moment", sign), body, p)
        hull_fn = valuation_function(OperatorKind("moment", sign), hull, p)
        return PHomFunction(n, p, lambda u: _gap_value(hull_fn.rule(u), body_fn.rule(u)))

    if kind.family in ("origin_face", "origin_face_min"):
        faces = _origin_faces(body)
        minimum = kind.family == "origin_face_min"
        return PHomFunction(
            n, p, lambda u: _origin_face_sum(faces, _signed(u, sign), p, minimum)
        )

    if kind.family == "moment":
        simplices = body.full_dim_simplex_vertices()
        from .moments import _simplex_positive_moment

        def rule(u, _simplices=simplices):
            vec = _signed(u, sign)
            return sum(_simplex_positive_moment(v, vec, p) for v in _simplices)

        return PHomFunction(n, p, rule)

    evaluator = _EVALUATORS[kind.family]
    return PHomFunction(n, p, lambda u: evaluator(sign, body, u, p))


def lp_combine(terms) -> PHomFunction:
    """Pointwise sum of coef^p times each function, in h^p scale.

    Realizes the p-sum of scaled bodies when the inputs are support-power
    functions.  All terms must share the ambient dimension and the exponent,
    and the coefficients must be nonnegative.
    """
    terms = [(float(c), f) for c, f in terms]
    if not terms:
        raise ValueError("need at least one term")
    n, p = terms[0][1].n, terms[0][1].p
    for c, f in terms:
        if c < 0.0:
            raise ValueError("coefficients must be nonnegative")
        if f.n != n or f.p != p:
            raise ValueError("all terms must share dimension and exponent")
    weights = [c**p for c, _ in terms]
    rules = [f.rule for _, f in terms]
    return PHomFunction(n, p, lambda u: sum(w * r(u) for w, r in zip(weights, rules)))
