"""Integer exponent matrices of projective monomial embeddings.

A monomial embedding of a torus into P^N is recorded as an integer matrix
with one row per parameter coordinate and one column per ambient coordinate;
column h is the exponent vector of the h-th monomial.  This module provides

  * the matrix container (`ExponentMatrix`) plus CSV import/export,
  * builders for the Segre-Veronese family and the unit-chart Segre matrix,
  * `normalize`, which rewrites any matrix whose rational row span contains
    the all-ones vector into the chart form (all-ones first row, first
    column (1, 0, ..., 0)),
  * structural operations `kron` and `stack`,
  * the `VarietyDescriptor` / `HadamardSpec` value types used by the
    dimension engines and the CLI.

Column order contract: builders emit columns in descending lexicographic
order of the concatenated exponent vectors.  For Segre factors this is
ascending lexicographic order of the index tuples (0,...,0), (0,...,1), ...
"""

from __future__ import annotations

import csv
import itertools
import math
from dataclasses import dataclass
from functools import lru_cache

from ._rational import SpanBasis, rational_rank

# Builders refuse to materialize matrices wider than this unless overridden.
DEFAULT_COLUMN_CAP = 10_000_000


class MatrixSizeError(ValueError):
    """Requested matrix exceeds the configured column cap."""


class HomogeneityError(ValueError):
    """Matrix is not projectively homogeneous (no all-ones vector in row span)."""


def _validated_rows(rows) -> tuple[tuple[int, ...], ...]:
    out = []
    width = None
    for row in rows:
        t = tuple(row)
        for x in t:
            if not isinstance(x, int) or isinstance(x, bool):
                raise TypeError(f"matrix entries must be integers, got {x!r}")
        if width is None:
            width = len(t)
        elif len(t) != width:
            raise ValueError("ragged rows: all rows must have equal length")
        out.append(t)
    return tuple(out)


@dataclass(frozen=True)
class ExponentMatrix:
    """Immutable integer matrix with optional per-column exponent labels.

    Entries may be negative (chart forms produced by `normalize`); the
    builders only emit non-negative entries.
    """

    entries: tuple[tuple[int, ...], ...]
    column_labels: tuple[tuple[int, ...], ...] | None = None

    def __post_init__(self):
        rows = _validated_rows(self.entries)
        object.__setattr__(self, "entries", rows)
        if not rows or not rows[0]:
            raise ValueError("matrix must have at least one row and one column")
        if self.column_labels is not None:
            labels = tuple(tuple(l) for l in self.column_labels)
            if len(labels) != len(rows[0]):
                raise ValueError("one column label per column required")
            object.__setattr__(self, "column_labels", labels)

    @property
    def n_rows(self) -> int:
        return len(self.entries)

    @property
    def n_cols(self) -> int:
        return len(self.entries[0])

    @property
    def ambient_dim(self) -> int:
        """Projective ambient dimension N (columns minus one)."""
        return self.n_cols - 1

    def column(self, h: int) -> tuple[int, ...]:
        return tuple(row[h] for row in self.entries)

    def columns(self):
        return zip(*self.entries)

    def row_lists(self) -> list[list[int]]:
        """Mutable copy used at the kernel boundary."""
        return [list(row) for row in self.entries]

    def is_homogeneous(self) -> bool:
        """True when all column sums agree (degree-homogeneous monomials)."""
        sums = {sum(col) for col in self.columns()}
        return len(sums) == 1

    def rank(self) -> int:
        return _cached_rank(self.entries)

    def validate_variety(self) -> None:
        """Check the non-degeneracy contract for matrices used as varieties.

        Requires at least two pairwise-distinct columns and projective
        homogeneity: either all column sums equal, or (for pre-normalized
        input) the all-ones vector lies in the rational row span.
        """
        if self.n_cols < 2:
            raise ValueError("a variety matrix needs at least two columns")
        cols = list(self.columns())
        if len(set(cols)) != len(cols):
            raise ValueError("degenerate matrix: duplicate columns")
        if self.is_homogeneous():
            return
        basis = SpanBasis(self.n_cols)
        for row in self.entries:
            basis.add(row)
        if not basis.contains([1] * self.n_cols):
            raise HomogeneityError("not projectively homogeneous")


@lru_cache(maxsize=None)
def _cached_rank(entries: tuple[tuple[int, ...], ...]) -> int:
    return rational_rank(entries)


# --- builders ---------------------------------------------------------------


def homogeneous_exponents(degree: int, length: int):
    """Yield all exponent vectors of the given total degree, descending lex."""
    if degree < 0 or length < 1:
        raise ValueError("degree must be >= 0 and length >= 1")
    if length == 1:
        yield (degree,)
        return
    for first in range(degree, -1, -1):
        for rest in homogeneous_exponents(degree - first, length - 1):
            yield (first,) + rest


def segre_veronese(degrees, dims, *, column_cap: int = DEFAULT_COLUMN_CAP) -> ExponentMatrix:
    """Exponent matrix of the Segre-Veronese embedding of P^n1 x ... x P^nk.

    `degrees[i]` is the Veronese degree on the i-th factor, `dims[i]` its
    projective dimension.  Rows are grouped by factor (n_i + 1 rows each);
    columns are the concatenated exponent vectors in descending lex order.
    """
    degrees = tuple(int(d) for d in degrees)
    dims = tuple(int(n) for n in dims)
    if len(degrees) != len(dims) or not degrees:
        raise ValueError("degrees and dims must be equal-length, non-empty")
    if any(d < 1 for d in degrees) or any(n < 1 for n in dims):
        raise ValueError("degrees and dims must all be >= 1")
    n_cols = math.prod(math.comb(n + d, d) for d, n in zip(degrees, dims))
    if n_cols > column_cap:
        raise MatrixSizeError(f"{n_cols} columns exceeds cap {column_cap}")
    per_factor = [list(homogeneous_exponents(d, n + 1)) for d, n in zip(degrees, dims)]
    labels = []
    columns = []
    for combo in itertools.product(*per_factor):
        concat = tuple(itertools.chain.from_iterable(combo))
        labels.append(concat)
        columns.append(concat)
    entries = tuple(zip(*columns))
    return ExponentMatrix(entries, tuple(labels))


def rational_normal_curve(degree: int, *, column_cap: int = DEFAULT_COLUMN_CAP) -> ExponentMatrix:
    """Degree-d rational normal curve in P^d (the n=1 Veronese)."""
    return segre_veronese((degree,), (1,), column_cap=column_cap)


def normalized_segre(factor_sizes, *, column_cap: int = DEFAULT_COLUMN_CAP) -> ExponentMatrix:
    """Unit-chart Segre matrix: all-ones first row plus indicator rows.

    For factor sizes (r'_1, ..., r'_m) the columns are indexed by tuples
    (i_1, ..., i_m) with 0 <= i_k <= r'_k in ascending lex order; the row
    labelled (k, j) has a 1 exactly where i_k == j.  The column order agrees
    with segre_veronese((1,)*m, factor_sizes).
    """
    sizes = tuple(int(r) for r in factor_sizes)
    if not sizes or any(r < 0 for r in sizes):
        raise ValueError("factor sizes must be non-negative, at least one factor")
    n_cols = math.prod(r + 1 for r in sizes)
    if n_cols < 2:
        raise ValueError("at least one factor size must be >= 1")
    if n_cols > column_cap:
        raise MatrixSizeError(f"{n_cols} columns exceeds cap {column_cap}")
    labels = list(itertools.product(*(range(r + 1) for r in sizes)))
    rows = [tuple(1 for _ in labels)]
    for k, r in enumerate(sizes):
        for j in range(1, r + 1):
            rows.append(tuple(1 if idx[k] == j else 0 for idx in labels))
    return ExponentMatrix(tuple(rows), tuple(labels))


def normalize(mat: ExponentMatrix) -> ExponentMatrix:
    """Chart form: same rational row span, all-ones first row, first column e_1.

    The output has rank(mat) rows: the all-ones vector followed by a maximal
    independent set of span vectors with first entry zero.  Rows of the input
    that already vanish at the first coordinate are preferred verbatim; the
    rest are reduced by subtracting (first entry) * (all-ones).  Idempotent
    on matrices already in chart form.

    Raises HomogeneityError when the all-ones vector is not in the row span.
    """
    ncols = mat.n_cols
    ones = (1,) * ncols
    basis = SpanBasis(ncols)
    for row in mat.entries:
        basis.add(row)
    if not basis.contains(ones):
        raise HomogeneityError("not projectively homogeneous")
    target_rank = basis.rank
    picked: list[tuple[int, ...]] = [ones]
    out = SpanBasis(ncols)
    out.add(ones)
    candidates = [row for row in mat.entries if row[0] == 0]
    candidates += [
        tuple(x - row[0] for x in row) for row in mat.entries if row[0] != 0
    ]
    for cand in candidates:
        if out.rank == target_rank:
            break
        if out.add(cand):
            picked.append(cand)
    return ExponentMatrix(tuple(picked))


# --- structural operations --------------------------------------------------


def _as_rows(obj) -> list[tuple[int, ...]]:
    if obj is None:
        return []
    if isinstance(obj, ExponentMatrix):
        return list(obj.entries)
    return list(_validated_rows(obj))


def kron(a, b, *, column_cap: int = DEFAULT_COLUMN_CAP) -> ExponentMatrix:
    """Kronecker product, blocks in row-major order of the first argument.

    Accepts ExponentMatrix or plain row lists, so [[1]] acts as identity.
    """
    arows, brows = _as_rows(a), _as_rows(b)
    if not arows or not brows:
        raise ValueError("kron requires two non-empty matrices")
    n_cols = len(arows[0]) * len(brows[0])
    if n_cols > column_cap:
        raise MatrixSizeError(f"{n_cols} columns exceeds cap {column_cap}")
    out = []
    for ra in arows:
        for rb in brows:
            out.append(tuple(x * y for x in ra for y in rb))
    return ExponentMatrix(tuple(out))


def stack(a, b) -> ExponentMatrix:
    """Vertical concatenation; the combined rows act on disjoint parameter
    blocks of one shared column set.  Either argument may be empty/None."""
    arows, brows = _as_rows(a), _as_rows(b)
    if not arows and not brows:
        raise ValueError("stack of two empty matrices")
    if arows and brows and len(arows[0]) != len(brows[0]):
        raise ValueError("stack requires equal column counts")
    return ExponentMatrix(tuple(arows + brows))


# --- CSV --------------------------------------------------------------------


def read_matrix_csv(path) -> ExponentMatrix:
    """Load a matrix from CSV: one row per line, comma-separated integers."""
    rows = []
    with open(path, newline="") as fh:
        for lineno, record in enumerate(csv.reader(fh), start=1):
            if not record or all(not cell.strip() for cell in record):
                continue
            try:
                rows.append([int(cell) for cell in record])
            except ValueError as exc:
                raise ValueError(f"{path}:{lineno}: non-integer entry") from exc
    if not rows:
        raise ValueError(f"{path}: empty matrix")
    return ExponentMatrix(tuple(tuple(r) for r in rows))


def write_matrix_csv(mat: ExponentMatrix, path) -> None:
    with open(path, "w", newline="") as fh:
        writer = csv.writer(fh)
        for row in mat.entries:
            writer.writerow(row)


# --- descriptors ------------------------------------------------------------


@dataclass(frozen=True)
class VarietyDescriptor:
    """Hashable recipe for an embedded toric variety.

    kind is one of "veronese", "segre", "segre_veronese", "rnc", "custom";
    `label` round-trips through the CLI descriptor grammar.
    """

    kind: str
    degrees: tuple[int, ...] = ()
    dims: tuple[int, ...] = ()
    matrix_entries: tuple[tuple[int, ...], ...] | None = None
    label: str = ""

    @staticmethod
    def veronese(d: int, n: int) -> "VarietyDescriptor":
        return VarietyDescriptor("veronese", (d,), (n,), None, f"veronese:d={d},n={n}")

    @staticmethod
    def segre(dims) -> "VarietyDescriptor":
        dims = tuple(int(n) for n in dims)
        return VarietyDescriptor(
            "segre", (1,) * len(dims), dims, None,
            "segre:n=" + ",".join(map(str, dims)),
        )

    @staticmethod
    def segre_veronese(degrees, dims) -> "VarietyDescriptor":
        degrees = tuple(int(d) for d in degrees)
        dims = tuple(int(n) for n in dims)
        return VarietyDescriptor(
            "segre_veronese", degrees, dims, None,
            "sv:d=" + ",".join(map(str, degrees)) + ";n=" + ",".join(map(str, dims)),
        )

    @staticmethod
    def rnc(degree: int) -> "VarietyDescriptor":
        return VarietyDescriptor("rnc", (degree,), (1,), None, f"rnc:{degree}")

    @staticmethod
    def custom(mat: ExponentMatrix, label: str = "") -> "VarietyDescriptor":
        mat.validate_variety()
        return VarietyDescriptor(
            "custom", (), (), mat.entries, label or "matrix:<inline>"
        )

    def matrix(self) -> ExponentMatrix:
        return _descriptor_matrix(self)

    @property
    def ambient_dim(self) -> int:
        """Projective ambient dimension N."""
        return self.matrix().ambient_dim

    @property
    def variety_dim(self) -> int:
        """Projective dimension of the variety itself: rank of the matrix - 1."""
        return self.matrix().rank() - 1

    def __str__(self) -> str:
        return self.label


@lru_cache(maxsize=None)
def _descriptor_matrix(desc: VarietyDescriptor) -> ExponentMatrix:
    if desc.kind == "custom":
        return ExponentMatrix(desc.matrix_entries)
    return segre_veronese(desc.degrees, desc.dims)


@dataclass(frozen=True)
class HadamardSpec:
    """Factor list (r_1, ..., r_m) of a Hadamard product of secant varieties."""

    r: tuple[int, ...]

    def __post_init__(self):
        r = tuple(int(x) for x in self.r)
        if not r or any(x < 1 for x in r):
            raise ValueError("every factor index r_k must be >= 1")
        object.__setattr__(self, "r", r)

    @property
    def m(self) -> int:
        return len(self.r)

    @property
    def r_prime(self) -> tuple[int, ...]:
        return tuple(x - 1 for x in self.r)

    @property
    def total_points(self) -> int:
        """Number of parameter points: one shared point plus sum of (r_k - 1)."""
        return sum(self.r) - self.m + 1

    def secant_index(self) -> int:
        """R with sigma_R contained in the Hadamard product (chain lower end)."""
        return self.total_points

    def block_labels(self) -> list[tuple[int, int]]:
        """(k, j) labels of the non-shared points, factor-major order."""
        return [(k, j) for k in range(1, self.m + 1) for j in range(1, self.r[k - 1])]

    def __str__(self) -> str:
        return "(" + ",".join(map(str, self.r)) + ")"
