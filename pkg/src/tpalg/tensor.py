"""Exact rational scalars and the dense tensor substrate.

Every tensor in tpalg is a read-only numpy array of ``dtype=object`` whose
entries are ``gmpy2.mpq`` rationals.  Products follow one axis convention
throughout: for a product ``c``, ``c[i, j, k]`` is the coefficient of ``e_k``
in ``e_i * e_j``.  Linear maps store images as columns, so ``m[k, j]`` is
the coefficient of ``e_k`` in the image of ``e_j``.
"""

from __future__ import annotations

import re
from collections.abc import Iterable, Sequence
from dataclasses import dataclass
from numbers import Rational

import gmpy2
import numpy as np

from .errors import ArgumentError, DimensionError

Scalar = gmpy2.mpq
Tensor = np.ndarray

ZERO = Scalar(0)
ONE = Scalar(1)

#: Axis permutation of the flip ``x (x) y -> y (x) x``.
FLIP = (1, 0)
#: Axis permutation of the cycle ``x (x) y (x) z -> y (x) z (x) x``.
CYCLE = (1, 2, 0)

_SCALAR_TEXT = re.compile(r"^\s*([+-]?\d+)\s*(?:/\s*([+-]?\d+)\s*)?$")


def scalar(value) -> Scalar:
    """Convert ``value`` to an exact rational.

    Accepts integers, ``Fraction``/``mpq`` rationals and strings of the form
    ``"p"`` or ``"p/q"``.  Floats are refused because they are not exact.
    """
    if isinstance(value, Scalar):
        return value
    if isinstance(value, bool):
        raise ArgumentError("booleans are not scalars")
    if isinstance(value, (int, Rational)):
        return Scalar(value.numerator, value.denominator)
    if isinstance(value, str):
        return parse_scalar(value)
    if isinstance(value, np.integer):
        return Scalar(int(value))
    raise ArgumentError(f"cannot use {value!r} ({type(value).__name__}) as an exact scalar")


def parse_scalar(text: str) -> Scalar:
    """Parse ``"p"`` or ``"p/q"`` into a reduced rational."""
    match = _SCALAR_TEXT.match(text)
    if match is None:
        raise ArgumentError(f"not an exact rational literal: {text!r}")
    num = int(match.group(1))
    den = int(match.group(2)) if match.group(2) is not None else 1
    if den == 0:
        raise ArgumentError(f"zero denominator in {text!r}")
    return Scalar(num, den)


def format_scalar(value) -> str:
    """Render a scalar as ``"p"`` or ``"p/q"`` in lowest terms."""
    q = scalar(value)
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def _freeze(arr: np.ndarray) -> np.ndarray:
    arr.flags.writeable = False
    return arr


def as_tensor(data, shape: Sequence[int] | None = None) -> Tensor:
    """Build a read-only exact tensor from nested sequences or an array."""
    src = np.asarray(data, dtype=object)
    out = np.empty(src.shape, dtype=object)
    for idx in np.ndindex(src.shape):
        out[idx] = scalar(src[idx])
    if shape is not None and tuple(out.shape) != tuple(shape):
        raise DimensionError(f"expected shape {tuple(shape)}, got {out.shape}")
    return _freeze(out)


def frozen(arr: np.ndarray) -> Tensor:
    """Mark an array that already holds exact scalars as read-only.

    Entries that arithmetic left as plain integers (numpy seeds object sums
    with ``0``) are normalised to ``mpq``.
    """
    arr = np.array(arr, dtype=object, copy=True)
    for idx in np.ndindex(arr.shape):
        if not isinstance(arr[idx], Scalar):
            arr[idx] = scalar(arr[idx])
    return _freeze(arr)


def zeros(shape: Sequence[int] | int) -> Tensor:
    """An exact zero tensor of the given shape."""
    arr = np.empty(shape, dtype=object)
    arr.fill(ZERO)
    return _freeze(arr)


def identity(n: int) -> Tensor:
    """The exact ``n x n`` identity matrix."""
    arr = np.empty((n, n), dtype=object)
    arr.fill(ZERO)
    for i in range(n):
        arr[i, i] = ONE
    return _freeze(arr)


def basis_vector(n: int, i: int) -> Tensor:
    """The ``i``-th standard basis vector of an ``n``-dimensional space."""
    arr = np.empty(n, dtype=object)
    arr.fill(ZERO)
    arr[i] = ONE
    return _freeze(arr)


def is_zero(arr: np.ndarray) -> bool:
    """True when every entry vanishes exactly."""
    return not np.any(arr != 0)


def first_nonzero(arr: np.ndarray) -> tuple[int, ...] | None:
    """Lexicographically first multi-index with a nonzero entry, or None."""
    hits = np.argwhere(arr != 0)
    if len(hits) == 0:
        return None
    return tuple(int(i) for i in hits[0])


def tensor_contract(a: Tensor, b: Tensor, axis_pairs: Iterable[tuple[int, int]]) -> Tensor:
    """Sum over paired axes of ``a`` and ``b``.

    The free axes of ``a`` come first, then the free axes of ``b``, each in
    their original order.
    """
    pairs = list(axis_pairs)
    a_axes = [p[0] for p in pairs]
    b_axes = [p[1] for p in pairs]
    for i, j in pairs:
        if not (0 <= i < a.ndim and 0 <= j < b.ndim):
            raise ArgumentError(f"axis pair {(i, j)} out of range for ranks {a.ndim}, {b.ndim}")
        if a.shape[i] != b.shape[j]:
            raise DimensionError(f"cannot contract axis {i} (extent {a.shape[i]}) with axis {j} (extent {b.shape[j]})")
    if len(set(a_axes)) != len(a_axes) or len(set(b_axes)) != len(b_axes):
        raise ArgumentError("an axis may be contracted only once")
    return frozen(np.tensordot(a, b, axes=(a_axes, b_axes)))


def _check_permutation(perm: Sequence[int], rank: int) -> tuple[int, ...]:
    perm = tuple(int(p) for p in perm)
    if len(perm) != rank or sorted(perm) != list(range(rank)):
        raise ArgumentError(f"{perm} is not a permutation of {rank} axes")
    return perm


def permute_tensor(a: Tensor, perm: Sequence[int]) -> Tensor:
    """Rearrange tensor factors: output factor ``m`` is input factor ``perm[m]``.

    With ``perm = FLIP`` this is ``x (x) y -> y (x) x`` and with
    ``perm = CYCLE`` it is ``x (x) y (x) z -> y (x) z (x) x``.
    """
    perm = _check_permutation(perm, a.ndim)
    return _freeze(np.transpose(a, perm).copy())


def compose_permutations(outer: Sequence[int], inner: Sequence[int]) -> tuple[int, ...]:
    """The permutation equal to applying ``inner`` first and then ``outer``."""
    outer = _check_permutation(outer, len(outer))
    inner = _check_permutation(inner, len(outer))
    return tuple(inner[m] for m in outer)


def row_reduce(m: Tensor) -> tuple[Tensor, tuple[int, ...]]:
    """Reduced row echelon form and pivot columns, by exact elimination."""
    work = np.array(m, dtype=object, copy=True)
    if work.ndim != 2:
        raise DimensionError("row reduction needs a matrix")
    rows, cols = work.shape
    pivots: list[int] = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        pivot = next((i for i in range(r, rows) if work[i, c] != 0), None)
        if pivot is None:
            continue
        if pivot != r:
            work[[r, pivot]] = work[[pivot, r]]
        work[r] = work[r] / work[r, c]
        for i in range(rows):
            if i != r and work[i, c] != 0:
                work[i] = work[i] - work[i, c] * work[r]
        pivots.append(c)
        r += 1
    return frozen(work), tuple(pivots)


def matrix_rank_and_inverse(m: Tensor) -> tuple[int, Tensor | None]:
    """Exact rank of ``m`` and its inverse when ``m`` is square and invertible."""
    m = np.asarray(m, dtype=object)
    if m.ndim != 2:
        raise DimensionError("rank is defined for matrices only")
    _, pivots = row_reduce(m)
    rank = len(pivots)
    rows, cols = m.shape
    if rows != cols or rank < rows:
        return rank, None
    augmented = np.concatenate([m, identity(rows)], axis=1)
    reduced, _ = row_reduce(augmented)
    return rank, frozen(reduced[:, rows:])


def nullspace(m: Tensor) -> list[Tensor]:
    """A basis of ``{v : m v = 0}``, one exact vector per free column."""
    m = np.asarray(m, dtype=object)
    reduced, pivots = row_reduce(m)
    cols = m.shape[1]
    free = [c for c in range(cols) if c not in pivots]
    basis = []
    for f in free:
        v = np.empty(cols, dtype=object)
        v.fill(ZERO)
        v[f] = ONE
        for row, p in enumerate(pivots):
            v[p] = -reduced[row, f]
        basis.append(_freeze(v))
    return basis


def solve(m: Tensor, rhs: Tensor) -> Tensor | None:
    """One exact solution ``x`` of ``m x = rhs``, or None if inconsistent."""
    m = np.asarray(m, dtype=object)
    rhs = np.asarray(rhs, dtype=object).reshape(m.shape[0], 1)
    reduced, pivots = row_reduce(np.concatenate([m, rhs], axis=1))
    cols = m.shape[1]
    if cols in pivots:
        return None
    x = np.empty(cols, dtype=object)
    x.fill(ZERO)
    for row, p in enumerate(pivots):
        x[p] = reduced[row, cols]
    return _freeze(x)


@dataclass(frozen=True, eq=False)
class LinearMap:
    """A linear map between coordinate spaces; column ``j`` is the image of ``e_j``."""

    matrix: Tensor

    def __post_init__(self):
        mat = as_tensor(self.matrix)
        if mat.ndim != 2:
            raise DimensionError("a linear map needs a matrix")
        object.__setattr__(self, "matrix", mat)

    @property
    def domain_dim(self) -> int:
        return self.matrix.shape[1]

    @property
    def codomain_dim(self) -> int:
        return self.matrix.shape[0]

    def __call__(self, v) -> Tensor:
        v = np.asarray(v, dtype=object)
        if v.shape != (self.domain_dim,):
            raise DimensionError(f"expected a vector of length {self.domain_dim}")
        return frozen(self.matrix.dot(v))

    def __eq__(self, other):
        return isinstance(other, LinearMap) and np.array_equal(self.matrix, other.matrix)

    __hash__ = None

    @classmethod
    def from_images(cls, images: Sequence[Sequence]) -> LinearMap:
        """Build from the list of images of the basis vectors."""
        return cls(np.asarray(images, dtype=object).T)

    @classmethod
    def zero(cls, codomain_dim: int, domain_dim: int | None = None) -> LinearMap:
        return cls(zeros((codomain_dim, codomain_dim if domain_dim is None else domain_dim)))

    @classmethod
    def identity(cls, n: int) -> LinearMap:
        return cls(identity(n))
