"""Dimension of Hadamard products of secant varieties, and generic ranks.

For factors r = (r_1, ..., r_m) the product sigma_{r_1}(X) * ... *
sigma_{r_m}(X) is parametrized by one shared torus point y_0 plus r_k - 1
points per factor, R = sum(r_k - 1) + 1 points in total.  The Jacobian again
factors as eta (x) A (Khatri-Rao), with eta built from the coefficient sums
below, so the probe is the same certified rank computation as for secants.

Dimension chain used throughout:

    dim sigma_R(X)  <=  dim sigma_r(X)  <=  expected_dim_hadamard
                    <=  expected_dim of sigma_R(X),

where expected_dim_hadamard = min(sum_i dim sigma_{r_i}(X) - (m-1) dim X, N)
is evaluated with computed per-factor dimensions.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from . import kernels
from .config import DEFAULT_CONFIG, RunConfig
from .exponent import HadamardSpec, VarietyDescriptor
from .probing import probe_max_rank
from .secantdim import expected_secant_dim, secant_dimension

STATUS_EXPECTED = "expected dimension"
STATUS_HDEFECTIVE = "Hadamard-defective (probabilistic)"
STATUS_FOUND = "found"
STATUS_INFINITE = "infinite (toric idempotent)"
STATUS_NOT_FILLED = "not filled (probabilistic)"


def _vec_mul(u, v, p):
    return [(a * b) % p for a, b in zip(u, v)]


def eta_hadamard(mat, spec, points, prime: int) -> list[list[int]]:
    """Coefficient matrix of the Hadamard-product Jacobian factorization.

    With v = phi(y_0), w_{k,j} = phi(y_{k,j}) and S_k = 1 + sum_j w_{k,j},
    multiplicativity of the monomial map collapses the lattice sums to

        row 0      = v * S_1 * ... * S_m
        row (k,j)  = v * w_{k,j} * prod_{h != k} S_h

    which equals the sum of phi(y_0 * y_{1,j_1} * ... * y_{m,j_m}) over all
    index tuples (resp. over tuples with j_k = j), term by term.  Rows are
    ordered row 0 first, then (k, j) factor-major, matching the point order
    (y_0 | y_{1,1} ... y_{1,r_1-1} | y_{2,1} ...).
    """
    rows = mat.row_lists() if hasattr(mat, "row_lists") else [list(r) for r in mat]
    pts = points.points if hasattr(points, "points") else points
    spec = spec if isinstance(spec, HadamardSpec) else HadamardSpec(tuple(spec))
    if len(pts) != spec.total_points:
        raise ValueError(
            f"need {spec.total_points} points for factors {spec.r}, got {len(pts)}"
        )
    n_cols = len(rows[0])
    v0 = kernels.eval_columns_mod(rows, list(pts[0]), prime)
    factor_vals = []
    offset = 1
    for rp in spec.r_prime:
        factor_vals.append(
            [kernels.eval_columns_mod(rows, list(pts[offset + j]), prime) for j in range(rp)]
        )
        offset += rp
    sums = []
    for vals in factor_vals:
        s = [1] * n_cols
        for v in vals:
            s = [(a + b) % prime for a, b in zip(s, v)]
        sums.append(s)
    m = spec.m
    prefix = [[1] * n_cols]
    for s in sums:
        prefix.append(_vec_mul(prefix[-1], s, prime))
    suffix = [[1] * n_cols for _ in range(m + 1)]
    for k in range(m - 1, -1, -1):
        suffix[k] = _vec_mul(sums[k], suffix[k + 1], prime)
    out = [_vec_mul(v0, prefix[m], prime)]
    for k in range(m):
        base = _vec_mul(v0, _vec_mul(prefix[k], suffix[k + 1], prime), prime)
        for w in factor_vals[k]:
            out.append(_vec_mul(base, w, prime))
    return out


@dataclass(frozen=True)
class HadamardDimensionReport:
    descriptor: str
    r: tuple[int, ...]
    R: int
    computed_dim: int
    expected_dim_hadamard: int
    expected_dim_R: int
    lower_bound_dim_R: int
    hadamard_defect_flag: bool
    fills_ambient: bool
    status: str
    ambient_dim: int
    variety_dim: int
    factor_dims: tuple[int, ...]
    parameter_count: int
    exceeds_ambient: bool
    trials: int
    prime: int
    seed: int

    def to_dict(self) -> dict:
        return {
            "descriptor": self.descriptor,
            "r": list(self.r),
            "R": self.R,
            "computed_dim": self.computed_dim,
            "expected_dim_hadamard": self.expected_dim_hadamard,
            "expected_dim_R": self.expected_dim_R,
            "lower_bound_dim_R": self.lower_bound_dim_R,
            "hadamard_defect_flag": self.hadamard_defect_flag,
            "fills_ambient": self.fills_ambient,
            "status": self.status,
            "ambient_dim": self.ambient_dim,
            "variety_dim": self.variety_dim,
            "factor_dims": list(self.factor_dims),
            "parameter_count": self.parameter_count,
            "exceeds_ambient": self.exceeds_ambient,
            "trials": self.trials,
            "prime": self.prime,
            "seed": self.seed,
        }


def hadamard_dimension(
    descriptor: VarietyDescriptor, r, config: RunConfig = DEFAULT_CONFIG
) -> HadamardDimensionReport:
    """Probe the projective dimension of sigma_{r_1}(X) * ... * sigma_{r_m}(X)."""
    spec = r if isinstance(r, HadamardSpec) else HadamardSpec(tuple(r))
    return _hadamard_dimension_cached(descriptor, spec, config)


@lru_cache(maxsize=None)
def _hadamard_dimension_cached(
    descriptor: VarietyDescriptor, spec: HadamardSpec, config: RunConfig
) -> HadamardDimensionReport:
    mat = descriptor.matrix()
    ambient = mat.ambient_dim
    dim_x = mat.rank() - 1
    factor_dims = tuple(
        secant_dimension(descriptor, rk, config).computed_dim for rk in spec.r
    )
    R = spec.total_points
    lower = secant_dimension(descriptor, R, config).computed_dim
    parameter_count = sum(factor_dims) - (spec.m - 1) * dim_x
    expected_h = min(parameter_count, ambient)
    expected_big = expected_secant_dim(ambient, dim_x, R)
    rows = mat.row_lists()

    def rank_at(pts, prime):
        eta = eta_hadamard(rows, spec, pts, prime)
        return kernels.kr_rank_mod(eta, rows, prime)

    probe = probe_max_rank(rank_at, R, mat.n_rows, config, expected_h + 1)
    computed = probe.rank - 1
    defect = computed < expected_h
    return HadamardDimensionReport(
        descriptor=str(descriptor),
        r=spec.r,
        R=R,
        computed_dim=computed,
        expected_dim_hadamard=expected_h,
        expected_dim_R=expected_big,
        lower_bound_dim_R=lower,
        hadamard_defect_flag=defect,
        fills_ambient=computed == ambient,
        status=STATUS_HDEFECTIVE if defect else STATUS_EXPECTED,
        ambient_dim=ambient,
        variety_dim=dim_x,
        factor_dims=factor_dims,
        parameter_count=parameter_count,
        exceeds_ambient=parameter_count > ambient,
        trials=config.trials,
        prime=probe.prime,
        seed=config.seed,
    )


# --- generic Hadamard rank ----------------------------------------------------


def expected_generic_hrank(ambient_dim: int, variety_dim: int, r: int) -> int:
    """ceil((N - dim X) / ((r-1)(dim X + 1))); 0 when X already fills P^N."""
    if r < 2:
        raise ValueError("generic Hadamard rank formula needs r >= 2")
    if not 0 <= variety_dim <= ambient_dim:
        raise ValueError("need 0 <= variety_dim <= ambient_dim")
    if ambient_dim == variety_dim:
        return 0
    q = (r - 1) * (variety_dim + 1)
    return -((variety_dim - ambient_dim) // q)


@dataclass(frozen=True)
class GenericHrankReport:
    descriptor: str
    r: int
    found_m: int | None
    status: str
    expected_m: int | None
    trace: tuple[tuple[int, int], ...]  # (m, computed_dim) per tried power
    ambient_dim: int
    variety_dim: int

    def to_dict(self) -> dict:
        return {
            "descriptor": self.descriptor,
            "r": self.r,
            "found_m": self.found_m,
            "status": self.status,
            "expected_m": self.expected_m,
            "trace": [list(t) for t in self.trace],
            "ambient_dim": self.ambient_dim,
            "variety_dim": self.variety_dim,
        }


def generic_hrank(
    descriptor: VarietyDescriptor,
    r: int,
    config: RunConfig = DEFAULT_CONFIG,
    *,
    margin: int = 3,
) -> GenericHrankReport:
    """Smallest m such that sigma_r(X)^(*m) fills P^N, probed dimension-wise.

    For r = 1 Hadamard powers never grow (X * X = X for toric X), so unless
    X is already dense the rank is reported as infinite.  The search reuses
    one seed family across m and stops `margin` steps past the expected m.
    """
    mat = descriptor.matrix()
    ambient = mat.ambient_dim
    dim_x = mat.rank() - 1
    if r < 1:
        raise ValueError("r must be >= 1")
    if r == 1:
        if dim_x == ambient:
            return GenericHrankReport(
                str(descriptor), r, 1, STATUS_FOUND, None, ((1, ambient),),
                ambient, dim_x,
            )
        return GenericHrankReport(
            str(descriptor), r, None, STATUS_INFINITE, None, (), ambient, dim_x
        )
    expected_m = expected_generic_hrank(ambient, dim_x, r)
    trace = []
    for m in range(1, max(expected_m, 1) + margin + 1):
        rep = hadamard_dimension(descriptor, (r,) * m, config)
        trace.append((m, rep.computed_dim))
        if rep.fills_ambient:
            return GenericHrankReport(
                str(descriptor), r, m, STATUS_FOUND, expected_m, tuple(trace),
                ambient, dim_x,
            )
    return GenericHrankReport(
        str(descriptor), r, None, STATUS_NOT_FILLED, expected_m, tuple(trace),
        ambient, dim_x,
    )


def sv_generic_bound(degrees, dims) -> tuple[int, int]:
    """Non-defectivity / filling thresholds for secant Hadamard products of
    Segre-Veronese varieties.

    Returns (nondefective_below, fills_above): the product is not
    Hadamard-defective whenever R <= prod C(n_i+d_i, d_i)/sum(n) - sum(n)
    (floor of the right side), and fills the ambient space whenever
    R >= prod C(n_i+d_i, d_i)/sum(n) + sum(n) (ceiling).  Both thresholds
    are independent of the individual factor indices.
    """
    degrees = tuple(int(d) for d in degrees)
    dims = tuple(int(n) for n in dims)
    if len(degrees) != len(dims) or not degrees:
        raise ValueError("degrees and dims must be equal-length, non-empty")
    if any(d < 1 for d in degrees) or any(n < 1 for n in dims):
        raise ValueError("degrees and dims must all be >= 1")
    prod_c = math.prod(math.comb(n + d, d) for d, n in zip(degrees, dims))
    s = sum(dims)
    lower = Fraction(prod_c, s) - s
    upper = Fraction(prod_c, s) + s
    return (math.floor(lower), math.ceil(upper))
