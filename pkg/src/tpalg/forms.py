"""Bilinear forms, induced anti-pre-Lie products and Manin triple checks.

A form ``B`` is stored as its Gram matrix ``B[i, j] = B(e_i, e_j)``.  Inside
identities it is an operation into a one-dimensional space, so every form
predicate runs through the same evaluation engine (with witnesses and
independent re-evaluation) as the algebra identities.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

import numpy as np

from .algebra import AlgebraClass, AlgebraPresentation, check_class
from .errors import ArgumentError, ConfigurationError, DimensionError, PreconditionError
from .identities import Identity, IdentityReport, op, report_from_field, variables
from .tensor import (
    Tensor,
    as_tensor,
    frozen,
    identity,
    nullspace,
    row_reduce,
    solve,
    zeros,
)


@dataclass(frozen=True, eq=False)
class BilinearForm:
    """A bilinear form on a ``dim``-dimensional space given by its Gram matrix."""

    matrix: Tensor

    def __post_init__(self):
        m = as_tensor(self.matrix)
        if m.ndim != 2 or m.shape[0] != m.shape[1]:
            raise DimensionError(f"a bilinear form needs a square matrix, got shape {m.shape}")
        object.__setattr__(self, "matrix", m)

    @property
    def dim(self) -> int:
        return self.matrix.shape[0]

    @property
    def is_symmetric(self) -> bool:
        return bool(np.array_equal(self.matrix, self.matrix.T))

    def __call__(self, u, v):
        return np.asarray(u, dtype=object).dot(self.matrix).dot(np.asarray(v, dtype=object))

    def as_operation(self) -> Tensor:
        """The form as a bilinear map into a one-dimensional space."""
        return frozen(self.matrix.reshape(self.dim, self.dim, 1))


class FormPredicate(str, enum.Enum):
    INVARIANT_DOT = "invariant_dot"
    INVARIANT_BRACKET = "invariant_bracket"
    COMM_2_COCYCLE = "comm_2_cocycle"
    COMPATIBLE_CIRC = "compatible_circ"
    NONDEGENERATE = "nondegenerate"
    SYMMETRIC = "symmetric"


_B, _dot, _br, _circ = op("B"), op("dot"), op("bracket"), op("circ")
_x, _y, _z = variables("x y z")

_FORM_IDENTITIES = {
    # B(x.y, z) = B(x, y.z)
    FormPredicate.INVARIANT_DOT: (("dot",), Identity("form.invariant_dot", _B(_dot(_x, _y), _z) - _B(_x, _dot(_y, _z)))),
    # B([x,y], z) = B(x, [y,z])
    FormPredicate.INVARIANT_BRACKET: (
        ("bracket",),
        Identity("form.invariant_bracket", _B(_br(_x, _y), _z) - _B(_x, _br(_y, _z))),
    ),
    # B([x,y], z) + B([y,z], x) + B([z,x], y) = 0
    FormPredicate.COMM_2_COCYCLE: (
        ("bracket",),
        Identity(
            "form.comm_2_cocycle",
            _B(_br(_x, _y), _z) + _B(_br(_y, _z), _x) + _B(_br(_z, _x), _y),
            ("x", "y", "z"),
        ),
    ),
    # B(x o y, z) = B(y, [x,z])
    FormPredicate.COMPATIBLE_CIRC: (
        ("circ", "bracket"),
        Identity("form.compatible_circ", _B(_circ(_x, _y), _z) - _B(_y, _br(_x, _z)), ("x", "y", "z")),
    ),
    FormPredicate.SYMMETRIC: ((), Identity("form.symmetric", _B(_x, _y) - _B(_y, _x), ("x", "y"))),
}


def _check_dims(a: AlgebraPresentation, B: BilinearForm) -> None:
    if a.dim != B.dim:
        raise DimensionError(f"form of dimension {B.dim} on an algebra of dimension {a.dim}")


def _nondegeneracy_report(B: BilinearForm) -> IdentityReport:
    """Fails with witness ``(f,)`` for the first free column ``f`` of the Gram matrix.

    The defect is the kernel vector with a one in position ``f``; the probe
    recomputes it by solving ``B[:, pivots] c = -B[:, f]`` directly.
    """
    m = B.matrix
    kernel = nullspace(m)
    _, pivots = row_reduce(m)
    free = [c for c in range(B.dim) if c not in pivots]

    def probe(witness):
        (f,) = witness
        cols = list(pivots)
        coeffs = solve(m[:, cols], -m[:, f]) if cols else np.empty(0, dtype=object)
        if coeffs is None:
            raise ArgumentError(f"column {f} is not dependent on the pivot columns")
        v = np.array(zeros(B.dim))
        v[f] = 1
        for c, val in zip(cols, coeffs):
            v[c] = val
        return tuple(frozen(v))

    if not kernel:
        return IdentityReport("form.nondegenerate", True, variables=("f",), probe=probe)
    return IdentityReport("form.nondegenerate", False, (free[0],), tuple(kernel[0]), ("f",), probe=probe)


def check_form(a: AlgebraPresentation, B: BilinearForm, predicate) -> IdentityReport:
    """Evaluate one form predicate on all basis tuples (rank for nondegeneracy)."""
    predicate = FormPredicate(predicate)
    _check_dims(a, B)
    if predicate is FormPredicate.NONDEGENERATE:
        return _nondegeneracy_report(B)
    needs, ident = _FORM_IDENTITIES[predicate]
    for name in needs:
        a.require(name)
    return ident.check(a.environment(B=B.as_operation()))


def form_holds(a: AlgebraPresentation, B: BilinearForm, *predicates) -> bool:
    return all(check_form(a, B, p).holds for p in predicates)


def induce_anti_pre_lie(lie: AlgebraPresentation, B: BilinearForm) -> AlgebraPresentation:
    """The unique ``circ`` with ``B(x o y, z) = B(y, [x, z])``.

    One linear system per basis pair: the Gram matrix transpose times the
    coordinates of ``e_i o e_j`` equals the covector ``z -> B(e_j, [e_i, z])``.
    Requires ``B`` symmetric, nondegenerate and a commutative 2-cocycle.
    """
    _check_dims(lie, B)
    br = lie.product("bracket")
    pre = [check_form(lie, B, p) for p in (FormPredicate.SYMMETRIC, FormPredicate.NONDEGENERATE, FormPredicate.COMM_2_COCYCLE)]
    bad = [r for r in pre if not r.holds]
    if bad:
        raise PreconditionError("the form must be symmetric, nondegenerate and a commutative 2-cocycle", bad)
    n = lie.dim
    gram_t = B.matrix.T
    circ = np.array(zeros((n, n, n)))
    for i in range(n):
        for j in range(n):
            rhs = np.einsum("zm,m->z", br[i], B.matrix[j])
            circ[i, j] = solve(gram_t, rhs)
    return lie.with_products(circ=frozen(circ))


def standard_form(dim_a: int) -> BilinearForm:
    """The pairing ``B_d(x + a*, y + b*) = <x, b*> + <a*, y>`` on ``A + A*``."""
    if dim_a < 1:
        raise ConfigurationError("dimension must be positive")
    n = dim_a
    m = np.array(zeros((2 * n, 2 * n)))
    m[:n, n:] = identity(n)
    m[n:, :n] = identity(n)
    return BilinearForm(frozen(m))


class ManinKind(str, enum.Enum):
    LIE_2COCYCLE = "lie_2cocycle"
    TPA = "tpa"


def closure_report(double: AlgebraPresentation, name: str, indices, label: str) -> IdentityReport:
    """Products of two basis vectors from ``indices`` have no component outside them."""
    t = double.product(name)
    inside = list(indices)
    outside = [k for k in range(double.dim) if k not in inside]
    values = t[np.ix_(inside, inside, outside)]

    def probe(w):
        i, j = inside[w[0]], inside[w[1]]
        e = np.eye(double.dim, dtype=object)
        prod = double.multiply(name, e[i], e[j])
        return tuple(frozen(np.asarray(prod)[outside]))

    return report_from_field(f"closure.{label}.{name}", values, ("x", "y"), probe)


def check_manin_triple(double: AlgebraPresentation, split: tuple[int, int], kind) -> list[IdentityReport]:
    """Class axioms of the double, closure of both halves and the ``B_d`` predicates."""
    kind = ManinKind(kind)
    dim_a, dim_b = split
    if dim_a != dim_b or dim_a + dim_b != double.dim:
        raise ArgumentError(f"split {split} does not describe A + A* of dimension {double.dim}")
    Bd = standard_form(dim_a)
    halves = (("A", range(dim_a)), ("A*", range(dim_a, double.dim)))
    if kind is ManinKind.LIE_2COCYCLE:
        reports = check_class(double.only("bracket"), AlgebraClass.LIE)
        names = ("bracket",)
        preds = (FormPredicate.COMM_2_COCYCLE,)
    else:
        reports = check_class(double.only("dot", "bracket"), AlgebraClass.TRANSPOSED_POISSON)
        names = ("dot", "bracket")
        preds = (FormPredicate.INVARIANT_DOT, FormPredicate.COMM_2_COCYCLE)
    for label, idx in halves:
        for name in names:
            reports.append(closure_report(double, name, idx, label))
    reports += [check_form(double, Bd, p) for p in preds]
    return reports


def check_tpa_both_invariant_triviality(a: AlgebraPresentation, B: BilinearForm) -> IdentityReport:
    """For a form invariant on both products, the bracket times dot vanishes identically.

    The preconditions (transposed Poisson, nondegenerate, invariant on both
    products) raise :class:`PreconditionError` when unmet; under them a
    failing report would indicate a defect in the kernel.
    """
    _check_dims(a, B)
    tpa = a.only("dot", "bracket")
    pre = check_class(tpa, AlgebraClass.TRANSPOSED_POISSON) + [
        check_form(a, B, p)
        for p in (FormPredicate.NONDEGENERATE, FormPredicate.INVARIANT_DOT, FormPredicate.INVARIANT_BRACKET)
    ]
    bad = [r for r in pre if not r.holds]
    if bad:
        raise PreconditionError("needs a transposed Poisson algebra with a nondegenerate form invariant on both products", bad)
    reports = check_class(tpa, AlgebraClass.POISSON_TRIVIALITY)
    for r in reports:
        if not r.holds:
            return r
    return IdentityReport("trivial", True)
