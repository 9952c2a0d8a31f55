"""Numerical checks of the identities the operators are supposed to satisfy.

Every check evaluates a black-box valuation (in h^p scale) on constructed
inputs and reports the worst deviation.  Deviations are measured relative to
max(1, magnitude of the compared terms), so the stated tolerances behave as
relative tolerances at desk scale and as absolute ones near zero.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Sequence

import numpy as np

from . import geometry as geo
from .geometry import Body, Hyperplane, LinearMap
from .moments import check_exponent
from .operators import ALL_KINDS, OperatorKind, PHomFunction, valuation_function

DOMAIN_WITH_ORIGIN = "Kno"  # bodies containing the origin
DOMAIN_ALL = "Kn"  # all bodies

# Least-squares rank tolerance, relative to the largest singular value.
FIT_RANK_TOL = 1e-10


@dataclass(frozen=True)
class CheckReport:
    name: str
    cases: int
    max_abs_deviation: float
    max_rel_deviation: float
    passed: bool
    worst_case: dict

    def to_dict(self) -> dict:
        return {
            "name": self.name,
            "cases": self.cases,
            "max_abs_deviation": self.max_abs_deviation,
            "max_rel_deviation": self.max_rel_deviation,
            "passed": self.passed,
            "worst_case": self.worst_case,
        }


@dataclass(frozen=True)
class FitResult:
    """Recovered h^p-scale coefficients over an operator basis."""

    domain: str
    coefficients: tuple[float, ...]
    body_scale_coefficients: tuple[float, ...]
    residual: float

    def to_dict(self) -> dict:
        return {
            "domain": self.domain,
            "coefficients": list(self.coefficients),
            "body_scale_coefficients": list(self.body_scale_coefficients),
            "residual": self.residual,
        }


@dataclass(frozen=True, eq=False)
class BlackBoxValuation:
    """A valuation Body -> (direction -> value in h^p scale) under test."""

    name: str
    domain: str
    n: int
    p: float
    prepare: Callable[[Body], PHomFunction]

    def __call__(self, body: Body, u) -> float:
        return self.prepare(body)(u)


def basis_kinds(domain: str, include_min_support: bool = False) -> tuple[OperatorKind, ...]:
    """Operator basis used in coefficient fits for the given domain."""
    if domain == DOMAIN_WITH_ORIGIN:
        kinds = [
            OperatorKind("moment", "plus"),
            OperatorKind("moment", "minus"),
            OperatorKind("support", "plus"),
            OperatorKind("support", "minus"),
        ]
        if include_min_support:
            raise ValueError("min-support terms vanish identically on this domain")
    elif domain == DOMAIN_ALL:
        kinds = [
            OperatorKind("moment", "plus"),
            OperatorKind("moment", "minus"),
            OperatorKind("moment_gap", "plus"),
            OperatorKind("moment_gap", "minus"),
            OperatorKind("support", "plus"),
            OperatorKind("support", "minus"),
        ]
        if include_min_support:
            kinds += [OperatorKind("support_min", "plus"), OperatorKind("support_min", "minus")]
    else:
        raise ValueError(f"unknown domain {domain!r}")
    return tuple(kinds)


def builtin_valuation(kind: OperatorKind | str, n: int, p: float) -> BlackBoxValuation:
    if isinstance(kind, str):
        kind = OperatorKind.parse(kind)
    p = check_exponent(p)
    return BlackBoxValuation(
        name=kind.id,
        domain=DOMAIN_ALL,
        n=n,
        p=p,
        prepare=lambda body: valuation_function(kind, body, p),
    )


def combination_valuation(
    coefficients: Sequence[float],
    domain: str,
    n: int,
    p: float,
    include_min_support: bool = False,
    name: str | None = None,
) -> BlackBoxValuation:
    """Linear combination of the domain basis, with h^p-scale coefficients."""
    p = check_exponent(p)
    kinds = basis_kinds(domain, include_min_support)
    coeffs = tuple(float(c) for c in coefficients)
    if len(coeffs) != len(kinds):
        raise ValueError(f"expected {len(kinds)} coefficients, got {len(coeffs)}")

    def prepare(body: Body) -> PHomFunction:
        fns = [valuation_function(k, body, p) for k in kinds]
        return PHomFunction(
            n, p, lambda u: sum(c * f.rule(u) for c, f in zip(coeffs, fns) if c != 0.0)
        )

    return BlackBoxValuation(name or f"combination{coeffs}", domain, n, p, prepare)


def zero_valuation(n: int, p: float) -> BlackBoxValuation:
    return BlackBoxValuation(
        "zero", DOMAIN_ALL, n, p, lambda body: PHomFunction.zero(n, check_exponent(p))
    )


def applicable_kinds(n: int) -> tuple[OperatorKind, ...]:
    """All built-in operator kinds available in dimension n."""
    if n == 2:
        return ALL_KINDS
    return tuple(k for k in ALL_KINDS if not k.family.startswith("origin_face"))


# ---------------------------------------------------------------------------
# seeded inputs


def random_directions(n: int, count: int, rng: np.random.Generator) -> np.ndarray:
    """Seeded standard-normal directions normalized to unit length."""
    dirs = np.empty((count, n))
    made = 0
    while made < count:
        v = rng.standard_normal(n)
        length = np.linalg.norm(v)
        if length > 1e-8:
            dirs[made] = v / length
            made += 1
    return dirs


def random_simplex_body(n: int, rng: np.random.Generator, low=-1.0, high=1.0) -> Body:
    while True:
        verts = rng.uniform(low, high, (n + 1, n))
        if geo.affine_rank(verts) == n:
            return Body(n, verts, (tuple(range(n + 1)),))


def random_polytope_body(n: int, num_points: int, rng: np.random.Generator) -> Body:
    while True:
        pts = rng.uniform(-1.0, 1.0, (num_points, n))
        if geo.affine_rank(pts) == n:
            return geo.convex_body_from_points(pts)


def random_body_with_origin(n: int, rng: np.random.Generator) -> Body:
    """Seeded simplex translated so a strictly interior point sits at the origin."""
    body = random_simplex_body(n, rng)
    weights = rng.uniform(0.05, 1.0, n + 1)
    weights /= weights.sum()
    return geo.translate(body, -(weights @ body.vertices))


def random_lower_dim_body(n: int, rng: np.random.Generator) -> Body:
    """Seeded k-simplex (k < n) whose affine hull passes through the origin."""
    k = int(rng.integers(1, n))
    frame = rng.standard_normal((n, k))
    while np.linalg.matrix_rank(frame) < k:
        frame = rng.standard_normal((n, k))
    coords = rng.uniform(-1.0, 1.0, (k, k))
    while geo.affine_rank(np.vstack([np.zeros(k), coords])) < k:
        coords = rng.uniform(-1.0, 1.0, (k, k))
    verts = np.vstack([np.zeros(n), coords @ frame.T])
    return Body(n, verts, (tuple(range(k + 1)),))


def random_cut_plane(
    body: Body, rng: np.random.Generator, through_origin: bool = False
) -> Hyperplane:
    """Seeded hyperplane passing through a strictly interior point of the body."""
    normal = random_directions(body.n, 1, rng)[0]
    if through_origin:
        return Hyperplane(normal, 0.0)
    weights = rng.uniform(0.05, 1.0, body.num_vertices)
    weights /= weights.sum()
    inner = weights @ body.vertices
    return Hyperplane(normal, float(normal @ inner))


def random_positive_det_map(n: int, rng: np.random.Generator) -> LinearMap:
    while True:
        m = rng.uniform(-1.5, 1.5, (n, n))
        det = np.linalg.det(m)
        if abs(det) < 0.05:
            continue
        if det < 0:
            m[:, 0] = -m[:, 0]
        return LinearMap(m)


# ---------------------------------------------------------------------------
# checks


def _report(name: str, tol: float, rows, worst_extra: dict | None = None) -> CheckReport:
    max_abs = 0.0
    max_rel = 0.0
    worst: dict = {}
    cases = 0
    for payload, lhs, rhs, scale in rows:
        cases += 1
        dev = abs(lhs - rhs)
        rel = dev / max(1.0, scale)
        if rel >= max_rel:
            max_rel = rel
            worst = dict(payload)
            worst["lhs"] = lhs
            worst["rhs"] = rhs
        max_abs = max(max_abs, dev)
    if worst_extra:
        worst.update(worst_extra)
    return CheckReport(name, cases, max_abs, max_rel, max_rel <= tol, worst)


def _dirs_payload(u: np.ndarray) -> list[float]:
    return [float(x) for x in u]


def check_valuation_split(
    phi: BlackBoxValuation,
    body: Body,
    plane: Hyperplane,
    dirs: np.ndarray,
    tol: float = 1e-8,
    meta: dict | None = None,
) -> CheckReport:
    """Phi(K) + Phi(K cut) = Phi(K plus) + Phi(K minus) at every direction."""
    name = f"valuation_split[{phi.name}]"
    plus, minus, cut = geo.clip(body, plane)
    if plus.is_empty or minus.is_empty or plus.volume() == 0.0 or minus.volume() == 0.0:
        worst = {"trivial": "hyperplane misses the interior", **(meta or {})}
        return CheckReport(name, 0, 0.0, 0.0, True, worst)
    f_body = phi.prepare(body)
    f_plus = phi.prepare(plus)
    f_minus = phi.prepare(minus)
    f_cut = phi.prepare(cut) if not cut.is_empty else PHomFunction.zero(body.n, phi.p)

    def rows():
        for u in dirs:
            terms = (f_body(u), f_cut(u), f_plus(u), f_minus(u))
            lhs = terms[0] + terms[1]
            rhs = terms[2] + terms[3]
            yield {"direction": _dirs_payload(u)}, lhs, rhs, max(abs(t) for t in terms)

    return _report(name, tol, rows(), meta)


def check_inclusion_exclusion(
    phi: BlackBoxValuation,
    parent: Body,
    planes: Sequence[Hyperplane],
    dirs: np.ndarray,
    tol: float = 1e-8,
    meta: dict | None = None,
) -> CheckReport:
    """Three-piece inclusion-exclusion over cells cut from a parent body.

    The pieces are parent&H1+, parent&H1-&H2+, parent&H1-&H2-; all the
    pairwise and triple intersections are derived by repeated clipping.
    With a single plane this reduces to the two-piece valuation identity.
    """
    if len(planes) == 1:
        return check_valuation_split(phi, parent, planes[0], dirs, tol, meta)
    if len(planes) != 2:
        raise ValueError("inclusion-exclusion check uses one or two planes")
    name = f"inclusion_exclusion[{phi.name}]"
    piece1, rest, cut1 = geo.clip(parent, planes[0])
    piece2, piece3, cut23 = geo.clip(rest, planes[1])
    bad = any(b.is_empty or b.volume() == 0.0 for b in (piece1, piece2, piece3))
    if bad:
        worst = {"trivial": "degenerate cell decomposition", **(meta or {})}
        return CheckReport(name, 0, 0.0, 0.0, True, worst)
    cut12, cut13, cut123 = geo.clip(cut1, planes[1])

    def fn(b: Body) -> PHomFunction:
        if b.is_empty:
            return PHomFunction.zero(parent.n, phi.p)
        return phi.prepare(b)

    f_parent = fn(parent)
    singles = [fn(piece1), fn(piece2), fn(piece3)]
    pairs = [fn(cut12), fn(cut13), fn(cut23)]
    triple = fn(cut123)

    def rows():
        for u in dirs:
            lhs = f_parent(u)
            s1 = sum(f(u) for f in singles)
            s2 = sum(f(u) for f in pairs)
            s3 = triple(u)
            rhs = s1 - s2 + s3
            yield {"direction": _dirs_payload(u)}, lhs, rhs, max(abs(lhs), s1, abs(s2), abs(s3))

    return _report(name, tol, rows(), meta)


def check_sl_covariance(
    phi: BlackBoxValuation,
    body: Body,
    lin: LinearMap,
    dirs: np.ndarray,
    tol: float = 1e-8,
    meta: dict | None = None,
) -> CheckReport:
    """Phi(phi K)(u) = Phi(K)(phi^t u) for a unimodular map."""
    if abs(lin.det - 1.0) > 1e-10:
        raise ValueError("covariance check requires a unimodular map")
    f_image = phi.prepare(geo.transform(body, lin))
    f_body = phi.prepare(body)

    def rows():
        for u in dirs:
            lhs = f_image(u)
            rhs = f_body(lin.apply_transpose(u))
            yield {"direction": _dirs_payload(u)}, lhs, rhs, max(abs(lhs), abs(rhs))

    return _report(f"sl_covariance[{phi.name}]", tol, rows(), meta)


def check_gl_scaling(
    phi: BlackBoxValuation,
    body: Body,
    lin: LinearMap,
    dirs: np.ndarray,
    tol: float = 1e-8,
    meta: dict | None = None,
) -> CheckReport:
    """Phi(phi K)(x) = det^(-p/n) Phi(det^(1/n) K)(phi^t x) for det > 0."""
    if not lin.det > 1e-12:
        raise ValueError("scaling check requires a positive determinant")
    n, p = phi.n, phi.p
    factor = lin.det ** (-p / n)
    f_image = phi.prepare(geo.transform(body, lin))
    f_scaled = phi.prepare(geo.dilate(body, lin.det ** (1.0 / n)))

    def rows():
        for u in dirs:
            lhs = f_image(u)
            rhs = factor * f_scaled(lin.apply_transpose(u))
            yield {"direction": _dirs_payload(u)}, lhs, rhs, max(abs(lhs), abs(rhs))

    return _report(f"gl_scaling[{phi.name}]", tol, rows(), meta)


def check_homogeneity(
    phi: BlackBoxValuation,
    body: Body,
    scales: Sequence[float],
    expected_degree: float,
    dirs: np.ndarray,
    tol: float = 1e-8,
    meta: dict | None = None,
) -> CheckReport:
    """Phi(sK)(u) = s^degree Phi(K)(u) in h^p scale."""
    f_body = phi.prepare(body)

    def rows():
        for s in scales:
            if not s > 0:
                raise ValueError("scales must be positive")
            f_scaled = phi.prepare(geo.dilate(body, s))
            for u in dirs:
                lhs = f_scaled(u)
                rhs = s**expected_degree * f_body(u)
                payload = {"scale": float(s), "direction": _dirs_payload(u)}
                yield payload, lhs, rhs, max(abs(lhs), abs(rhs))

    return _report(f"homogeneity[{phi.name}]", tol, rows(), meta)


def check_functional_equation(
    phi: BlackBoxValuation,
    n: int,
    lam: float,
    s: float,
    xs: np.ndarray,
    tol: float = 1e-8,
    meta: dict | None = None,
) -> CheckReport:
    """The shear split of the scaled standard simplex, in h^p scale.

    Phi(sT)(x) = lam^(-p/n) Phi(lam^(1/n) sT)(phi_lam^t x)
               + (1-lam)^(-p/n) Phi((1-lam)^(1/n) sT)(psi_lam^t x).
    """
    if not 0.0 < lam < 1.0:
        raise ValueError("lambda must lie strictly between 0 and 1")
    if not s > 0:
        raise ValueError("s must be positive")
    p = phi.p
    first, second = geo.shear_pair(lam, n)
    simplex = geo.dilate(geo.standard_simplex(n), s)
    f_whole = phi.prepare(simplex)
    f_first = phi.prepare(geo.dilate(simplex, lam ** (1.0 / n)))
    f_second = phi.prepare(geo.dilate(simplex, (1.0 - lam) ** (1.0 / n)))
    w_first = lam ** (-p / n)
    w_second = (1.0 - lam) ** (-p / n)

    def rows():
        for x in xs:
            lhs = f_whole(x)
            rhs = w_first * f_first(first.apply_transpose(x)) + w_second * f_second(
                second.apply_transpose(x)
            )
            payload = {"lambda": lam, "s": s, "direction": _dirs_payload(x)}
            yield payload, lhs, rhs, max(abs(lhs), abs(rhs))

    return _report(f"functional_equation[{phi.name}]", tol, rows(), meta)


def check_span_projection(
    phi: BlackBoxValuation,
    body: Body,
    dirs: np.ndarray,
    tol: float = 1e-10,
    meta: dict | None = None,
) -> CheckReport:
    """Phi(P)(x) = Phi(P)(projection of x onto the linear span of P).

    Requires dim P < n and that the affine hull of P passes through the
    origin, so the linear span of the vertices equals that affine hull's
    direction space extended through o.
    """
    n = body.n
    if body.dimension() >= n:
        raise ValueError("projection check needs a lower-dimensional body")
    verts = body.vertices
    scale = max(float(np.linalg.norm(verts, axis=1).max()), 1.0)
    diffs = (verts[1:] - verts[0]).T
    if diffs.size:
        sol, *_ = np.linalg.lstsq(diffs, -verts[0], rcond=None)
        gap = float(np.linalg.norm(diffs @ sol + verts[0]))
    else:
        gap = float(np.linalg.norm(verts[0]))
    if gap > 1e-9 * scale:
        raise ValueError("affine hull of the body does not pass through the origin")
    d = geo.affine_rank(verts)
    if d == 0:
        projector = np.zeros((n, n))
    else:
        _, _, vt = np.linalg.svd(verts, full_matrices=False)
        q = vt[:d].T
        projector = q @ q.T
    f_body = phi.prepare(body)

    def rows():
        for u in dirs:
            lhs = f_body(u)
            rhs = f_body(projector @ u)
            yield {"direction": _dirs_payload(u)}, lhs, rhs, max(abs(lhs), abs(rhs))

    return _report(f"span_projection[{phi.name}]", tol, rows(), meta)


# ---------------------------------------------------------------------------
# coefficient recovery


def fit_coefficients(
    phi: BlackBoxValuation,
    bodies: Sequence[Body],
    dirs: np.ndarray,
    domain: str,
    include_min_support: bool = False,
) -> FitResult:
    """Least-squares coefficients of the black box over the domain basis.

    Raises on a rank-deficient design matrix (singular values below
    FIT_RANK_TOL times the largest); deficiency signals inadequate sample
    bodies and is never silently regularized.
    """
    kinds = basis_kinds(domain, include_min_support)
    p = phi.p
    if domain == DOMAIN_WITH_ORIGIN:
        for body in bodies:
            if not body.contains_origin():
                raise ValueError("domain requires every sample body to contain the origin")
    rows = len(bodies) * len(dirs)
    if rows < len(kinds):
        raise ValueError("not enough samples for the basis size")
    design = np.empty((rows, len(kinds)))
    target = np.empty(rows)
    r = 0
    for body in bodies:
        basis_fns = [valuation_function(k, body, p) for k in kinds]
        f_phi = phi.prepare(body)
        for u in dirs:
            design[r] = [f(u) for f in basis_fns]
            target[r] = f_phi(u)
            r += 1
    singular = np.linalg.svd(design, compute_uv=False)
    if singular[-1] <= FIT_RANK_TOL * singular[0]:
        raise ValueError(
            "rank-deficient design matrix: the sample bodies do not separate the basis"
        )
    coeffs, *_ = np.linalg.lstsq(design, target, rcond=None)
    residual = float(np.sqrt(np.mean((design @ coeffs - target) ** 2)))
    roots = tuple(float(np.sign(c) * abs(c) ** (1.0 / p)) for c in coeffs)
    return FitResult(domain, tuple(float(c) for c in coeffs), roots, residual)


# ---------------------------------------------------------------------------
# discontinuity witness


def discontinuity_witness(p: float, epsilons: Sequence[float], sweep: int = 360) -> dict:
    """Values of (support+ minus origin_face+) at e1 along a collapsing family.

    The family is the sum of the segments [-eps e1, e1] and [-eps e2, eps e2];
    it converges to the segment [o, e1] in Hausdorff distance, yet the
    operator value stays at 1 while the limit body gives 0.
    """
    p = check_exponent(p)
    eps = [float(e) for e in epsilons]
    if any(e <= 0 for e in eps):
        raise ValueError("epsilons must be positive")
    angles = np.linspace(0.0, 2.0 * np.pi, sweep, endpoint=False)
    circle = np.column_stack([np.cos(angles), np.sin(angles)])
    limit_body = geo.unit_segment(2)
    e1 = np.array([1.0, 0.0])

    def value(body: Body) -> float:
        return valuation_function("support+", body, p)(e1) - valuation_function(
            "origin_face+", body, p
        )(e1)

    rows = []
    for e in eps:
        horizontal = Body(2, [[-e, 0.0], [1.0, 0.0]], ((0, 1),))
        vertical = Body(2, [[0.0, -e], [0.0, e]], ((0, 1),))
        family = geo.minkowski_sum(horizontal, vertical)
        rows.append(
            {
                "epsilon": e,
                "value": value(family),
                "hausdorff": geo.hausdorff_lower_bound(family, limit_body, circle),
            }
        )
    return {"rows": rows, "limit_value": value(limit_body)}


# ---------------------------------------------------------------------------
# suites


def run_suite(
    suite: str,
    n: int,
    p: float,
    seed: int,
    tol: float = 1e-8,
    dir_count: int = 8,
) -> list[CheckReport]:
    """Run a named verification suite over the built-in operators."""
    p = check_exponent(p)
    if n < 2:
        raise ValueError("suites need n >= 2")
    runners = {
        "valuation": _suite_valuation,
        "covariance": _suite_covariance,
        "scaling": _suite_scaling,
        "functional": _suite_functional,
        "projection": _suite_projection,
    }
    if suite == "all":
        reports = []
        for name in ("valuation", "covariance", "scaling", "functional", "projection"):
            reports.extend(runners[name](n, p, seed, tol, dir_count))
        return reports
    if suite not in runners:
        raise ValueError(f"unknown suite {suite!r}")
    return runners[suite](n, p, seed, tol, dir_count)


def _suite_valuation(n, p, seed, tol, dir_count, split_cases=50, ie_cases=10) -> list[CheckReport]:
    rng = np.random.default_rng(seed)
    kinds = applicable_kinds(n)
    reports = []
    for case in range(split_cases):
        body = random_simplex_body(n, rng)
        plane = random_cut_plane(body, rng)
        dirs = random_directions(n, dir_count, rng)
        kind = kinds[case % len(kinds)]
        phi = builtin_valuation(kind, n, p)
        reports.append(
            check_valuation_split(phi, body, plane, dirs, tol, {"seed": seed, "case": case})
        )
    for case in range(ie_cases):
        body = random_simplex_body(n, rng)
        planes = [random_cut_plane(body, rng), random_cut_plane(body, rng)]
        dirs = random_directions(n, dir_count, rng)
        kind = kinds[case % len(kinds)]
        phi = builtin_valuation(kind, n, p)
        reports.append(
            check_inclusion_exclusion(phi, body, planes, dirs, tol, {"seed": seed, "case": case})
        )
    return reports


def _suite_covariance(n, p, seed, tol, dir_count, cases=30) -> list[CheckReport]:
    rng = np.random.default_rng(seed)
    reports = []
    for case in range(cases):
        body = random_simplex_body(n, rng)
        lin = geo.random_unimodular(n, 6, int(rng.integers(2**31)))
        dirs = random_directions(n, dir_count, rng)
        for kind in applicable_kinds(n):
            phi = builtin_valuation(kind, n, p)
            reports.append(
                check_sl_covariance(phi, body, lin, dirs, tol, {"seed": seed, "case": case})
            )
    return reports


def _suite_scaling(n, p, seed, tol, dir_count, cases=10) -> list[CheckReport]:
    rng = np.random.default_rng(seed)
    diag = np.eye(n)
    diag[0, 0] = 2.0
    maps = [LinearMap(diag)] + [random_positive_det_map(n, rng) for _ in range(cases)]
    reports = []
    for case, lin in enumerate(maps):
        body = random_simplex_body(n, rng)
        dirs = random_directions(n, dir_count, rng)
        for kind in applicable_kinds(n):
            phi = builtin_valuation(kind, n, p)
            reports.append(
                check_gl_scaling(phi, body, lin, dirs, tol, {"seed": seed, "case": case})
            )
    return reports


def _suite_functional(n, p, seed, tol, dir_count, xs_count=20) -> list[CheckReport]:
    rng = np.random.default_rng(seed)
    xs = random_directions(n, xs_count, rng)
    combo = combination_valuation(
        (1.0, 1.0, 0.0, 0.0), DOMAIN_WITH_ORIGIN, n, p, name="moment+ plus moment-"
    )
    valuations = [
        builtin_valuation("moment+", n, p),
        builtin_valuation("moment-", n, p),
        combo,
    ]
    reports = []
    for phi in valuations:
        for lam in (0.25, 0.5, 0.75):
            for s in (0.7, 1.0, 1.3):
                reports.append(
                    check_functional_equation(phi, n, lam, s, xs, tol, {"seed": seed})
                )
    return reports


def _suite_projection(n, p, seed, tol, dir_count, cases=20) -> list[CheckReport]:
    rng = np.random.default_rng(seed)
    reports = []
    dirs = random_directions(n, 50, rng)
    segment = geo.unit_segment(n)
    reports.append(
        check_span_projection(builtin_valuation("support+", n, p), segment, dirs, tol)
    )
    point = Body(n, np.zeros((1, n)), ((0,),))
    reports.append(
        check_span_projection(builtin_valuation("support+", n, p), point, dirs, tol)
    )
    for case in range(cases):
        body = random_lower_dim_body(n, rng)
        dirs = random_directions(n, dir_count, rng)
        phi = builtin_valuation("moment+", n, p)
        reports.append(
            check_span_projection(phi, body, dirs, tol, {"seed": seed, "case": case})
        )
    return reports
