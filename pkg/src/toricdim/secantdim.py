"""Dimension of secant varieties of embedded toric varieties.

The affine cone of the R-th secant variety is parametrized by a torus
monomial map whose Jacobian at a parameter matrix Y, after row scaling by Y,
factors as the Khatri-Rao product of an R x (N+1) coefficient matrix
(`eta_secant`) with the exponent matrix.  The projective dimension is the
generic rank of that product minus one; ranks are probed over a large prime
field, which certifies lower bounds, while the parameter count gives the
upper bound

    expected_dim = min(N, R * (dim X + 1) - 1).

Equality of the two certifies non-defectivity; a persistent shortfall across
reseeds and alternate primes is reported as "defective (probabilistic)".
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from . import kernels
from .config import DEFAULT_CONFIG, RunConfig
from .exponent import VarietyDescriptor
from .probing import probe_max_rank

STATUS_NONDEFECTIVE = "nondefective"
STATUS_DEFECTIVE = "defective (probabilistic)"


def expected_secant_dim(ambient_dim: int, variety_dim: int, R: int) -> int:
    """Parameter-count upper bound min(N, R*(dim X + 1) - 1)."""
    if R < 1:
        raise ValueError("R must be >= 1")
    return min(ambient_dim, R * (variety_dim + 1) - 1)


def eta_secant(mat, points, prime: int) -> list[list[int]]:
    """Coefficient matrix of the secant Jacobian factorization, R rows.

    Row 1 is phi(y_1) + sum_{j >= 2} phi(y_1 * y_j); row j (j >= 2) is
    phi(y_1 * y_j), with phi the affine monomial map of `mat` and * the
    coordinatewise product.  Multiplicativity phi(x * y) = phi(x) * phi(y)
    turns every row into products of single-point evaluations.
    """
    rows = mat.row_lists() if hasattr(mat, "row_lists") else [list(r) for r in mat]
    pts = points.points if hasattr(points, "points") else points
    if not pts:
        raise ValueError("need at least one point")
    vals = [kernels.eval_columns_mod(rows, list(pt), prime) for pt in pts]
    v1 = vals[0]
    tail = [[(a * b) % prime for a, b in zip(v1, vj)] for vj in vals[1:]]
    first = list(v1)
    for trow in tail:
        first = [(a + b) % prime for a, b in zip(first, trow)]
    return [first] + tail


@dataclass(frozen=True)
class SecantDimensionReport:
    descriptor: str
    R: int
    computed_dim: int
    expected_dim: int
    defect_flag: bool
    status: str
    ambient_dim: int
    variety_dim: int
    trials: int
    prime: int
    seed: int

    def to_dict(self) -> dict:
        return {
            "descriptor": self.descriptor,
            "R": self.R,
            "computed_dim": self.computed_dim,
            "expected_dim": self.expected_dim,
            "defect_flag": self.defect_flag,
            "status": self.status,
            "ambient_dim": self.ambient_dim,
            "variety_dim": self.variety_dim,
            "trials": self.trials,
            "prime": self.prime,
            "seed": self.seed,
        }


def secant_dimension(
    descriptor: VarietyDescriptor, R: int, config: RunConfig = DEFAULT_CONFIG
) -> SecantDimensionReport:
    """Probe the projective dimension of the R-th secant variety."""
    if R < 1:
        raise ValueError("R must be >= 1")
    return _secant_dimension_cached(descriptor, R, config)


@lru_cache(maxsize=None)
def _secant_dimension_cached(
    descriptor: VarietyDescriptor, R: int, config: RunConfig
) -> SecantDimensionReport:
    mat = descriptor.matrix()
    ambient = mat.ambient_dim
    dim_x = mat.rank() - 1
    expected = expected_secant_dim(ambient, dim_x, R)
    rows = mat.row_lists()

    def rank_at(pts, prime):
        eta = eta_secant(rows, pts, prime)
        return kernels.kr_rank_mod(eta, rows, prime)

    probe = probe_max_rank(rank_at, R, mat.n_rows, config, expected + 1)
    computed = probe.rank - 1
    defect = computed < expected
    return SecantDimensionReport(
        descriptor=str(descriptor),
        R=R,
        computed_dim=computed,
        expected_dim=expected,
        defect_flag=defect,
        status=STATUS_DEFECTIVE if defect else STATUS_NONDEFECTIVE,
        ambient_dim=ambient,
        variety_dim=dim_x,
        trials=config.trials,
        prime=probe.prime,
        seed=config.seed,
    )
