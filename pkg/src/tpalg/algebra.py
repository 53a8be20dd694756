"""Algebras given by structure constants and the registry of algebra classes.

An :class:`AlgebraPresentation` is a vector space with basis ``e_0..e_{n-1}``
and one or more named bilinear products.  Product names are fixed:

``dot``      commutative associative product
``bracket``  Lie bracket
``circ``     anti-pre-Lie product
``star``     Zinbiel product
``succ``, ``prec``  the two halves of a pre-anti-pre-Lie splitting

Each class in :data:`CLASSES` is a list of identities written with the
expression DSL of :mod:`tpalg.identities`; :func:`check_class` evaluates
them on every basis tuple.
"""

from __future__ import annotations

from collections.abc import Callable, Mapping, Sequence
from dataclasses import dataclass, field
from enum import Enum
from types import MappingProxyType

import numpy as np

from .errors import ArgumentError, ConfigurationError, DimensionError
from .identities import Environment, Identity, IdentityReport, MapApply, op, variables
from .tensor import LinearMap, Tensor, as_tensor, frozen, zeros

PRODUCT_NAMES = ("dot", "bracket", "circ", "star", "succ", "prec")


@dataclass(frozen=True, eq=False)
class AlgebraPresentation:
    """A finite-dimensional algebra with named products as rank-3 tensors."""

    dim: int
    products: Mapping[str, Tensor] = field(default_factory=dict)
    basis_labels: tuple[str, ...] = ()

    def __post_init__(self):
        if not isinstance(self.dim, int) or self.dim < 1:
            raise ConfigurationError(f"dimension must be a positive integer, got {self.dim!r}")
        prods = {}
        for name, tensor in self.products.items():
            if name not in PRODUCT_NAMES:
                raise ConfigurationError(f"unknown product {name!r}; expected one of {PRODUCT_NAMES}")
            t = tensor if _is_exact(tensor) else as_tensor(tensor)
            if t.shape != (self.dim,) * 3:
                raise DimensionError(f"product {name!r} has shape {t.shape}, expected {(self.dim,) * 3}")
            prods[name] = t
        object.__setattr__(self, "products", MappingProxyType(prods))
        labels = tuple(self.basis_labels) or tuple(f"e{i}" for i in range(self.dim))
        if len(labels) != self.dim:
            raise DimensionError(f"{len(labels)} basis labels for dimension {self.dim}")
        object.__setattr__(self, "basis_labels", labels)

    def __getitem__(self, name: str) -> Tensor:
        return self.product(name)

    def product(self, name: str) -> Tensor:
        try:
            return self.products[name]
        except KeyError:
            raise ConfigurationError(f"the algebra has no {name!r} product") from None

    def has(self, *names: str) -> bool:
        return all(n in self.products for n in names)

    def require(self, *names: str) -> None:
        for n in names:
            self.product(n)

    def with_products(self, **products: Tensor) -> AlgebraPresentation:
        merged = dict(self.products)
        merged.update(products)
        return AlgebraPresentation(self.dim, merged, self.basis_labels)

    def only(self, *names: str) -> AlgebraPresentation:
        """A presentation keeping just the named products."""
        return AlgebraPresentation(self.dim, {n: self.product(n) for n in names}, self.basis_labels)

    def environment(self, **extra) -> Environment:
        return Environment({"A": self.dim}, {**self.products, **extra})

    def multiply(self, name: str, x, y) -> Tensor:
        """Product of two coordinate vectors."""
        return frozen(np.einsum("i,j,ijk->k", np.asarray(x, dtype=object), np.asarray(y, dtype=object), self.product(name)))

    def same_as(self, other: AlgebraPresentation) -> bool:
        """Equal dimension and equal products, entry by entry."""
        return (
            self.dim == other.dim
            and set(self.products) == set(other.products)
            and all(np.array_equal(self.products[n], other.products[n]) for n in self.products)
        )


def _is_exact(t) -> bool:
    return isinstance(t, np.ndarray) and t.dtype == object and not t.flags.writeable


def zero_algebra(dim: int, *names: str) -> AlgebraPresentation:
    """All listed products identically zero."""
    return AlgebraPresentation(dim, {n: zeros((dim,) * 3) for n in names})


def product_from_rule(dim: int, rule: Callable[[int, int], Mapping[int, object]]) -> Tensor:
    """Structure constants from ``rule(i, j) -> {k: coefficient}``."""
    c = np.array(zeros((dim,) * 3))
    for i in range(dim):
        for j in range(dim):
            for k, v in rule(i, j).items():
                c[i, j, k] = v
    return as_tensor(c)


# ---------------------------------------------------------------------------
# the class registry


class AlgebraClass(str, Enum):
    COMM_ASSOC = "COMM_ASSOC"
    LIE = "LIE"
    TRANSPOSED_POISSON = "TRANSPOSED_POISSON"
    ANTI_PRE_LIE = "ANTI_PRE_LIE"
    ANTI_PRE_LIE_ALT = "ANTI_PRE_LIE_ALT"
    ANTI_PRE_LIE_POISSON = "ANTI_PRE_LIE_POISSON"
    ZINBIEL = "ZINBIEL"
    PRE_APL = "PRE_APL"
    PRE_APLP = "PRE_APLP"
    POISSON_TRIVIALITY = "POISSON_TRIVIALITY"


x, y, z = variables("x y z")
dot, bracket, circ = op("dot"), op("bracket"), op("circ")
star, succ, prec = op("star"), op("succ"), op("prec")


def _commutator(u, v):
    return circ(u, v) - circ(v, u)


def _sum(u, v):
    """``u > v + u < v``, the anti-pre-Lie product of a splitting."""
    return succ(u, v) + prec(u, v)


COMM_ASSOC_IDENTITIES = (
    Identity("comm_assoc.commutativity", dot(x, y) - dot(y, x), ("x", "y")),
    Identity("comm_assoc.associativity", dot(dot(x, y), z) - dot(x, dot(y, z)), ("x", "y", "z")),
)

LIE_IDENTITIES = (
    Identity("lie.antisymmetry", bracket(x, y) + bracket(y, x), ("x", "y")),
    Identity(
        "lie.jacobi",
        bracket(x, bracket(y, z)) + bracket(y, bracket(z, x)) + bracket(z, bracket(x, y)),
        ("x", "y", "z"),
    ),
)

TPA_IDENTITIES = (
    Identity(
        "tpa.compatibility",
        2 * dot(z, bracket(x, y)) - bracket(dot(z, x), y) - bracket(x, dot(z, y)),
        ("x", "y", "z"),
        "2 z.[x,y] = [z.x, y] + [x, z.y]",
    ),
)

APL_LEFT = Identity(
    "apl.left",
    circ(x, circ(y, z)) - circ(y, circ(x, z)) - circ(_commutator(y, x), z),
    ("x", "y", "z"),
    "x o (y o z) - y o (x o z) = [y,x] o z",
)
APL_CYCLIC = Identity(
    "apl.cyclic",
    circ(_commutator(x, y), z) + circ(_commutator(y, z), x) + circ(_commutator(z, x), y),
    ("x", "y", "z"),
    "[x,y] o z + [y,z] o x + [z,x] o y = 0",
)
APL_CYCLIC_ALT = Identity(
    "apl.cyclic_alt",
    circ(x, _commutator(y, z)) + circ(y, _commutator(z, x)) + circ(z, _commutator(x, y)),
    ("x", "y", "z"),
    "x o [y,z] + y o [z,x] + z o [x,y] = 0",
)

APLP_IDENTITIES = (
    Identity(
        "aplp.bracket_dot",
        2 * dot(circ(x, y), z) - 2 * dot(circ(y, x), z) - dot(y, circ(x, z)) + dot(x, circ(y, z)),
        ("x", "y", "z"),
        "2(x o y).z - 2(y o x).z = y.(x o z) - x.(y o z)",
    ),
    Identity(
        "aplp.circ_dot",
        2 * circ(x, dot(y, z)) - circ(dot(z, x), y) - dot(z, circ(x, y)),
        ("x", "y", "z"),
        "2 x o (y.z) = (z.x) o y + z.(x o y)",
    ),
)

ZINBIEL_IDENTITIES = (
    Identity(
        "zinbiel",
        star(x, star(y, z)) - star(star(y, x), z) - star(star(x, y), z),
        ("x", "y", "z"),
        "x*(y*z) = (y*x)*z + (x*y)*z",
    ),
)

PRE_APL_IDENTITIES = (
    Identity(
        "pre_apl.left",
        succ(_sum(y, x), z) - succ(_sum(x, y), z) - succ(x, succ(y, z)) + succ(y, succ(x, z)),
        ("x", "y", "z"),
    ),
    Identity(
        "pre_apl.right",
        prec(z, _sum(x, y)) - succ(x, prec(z, y)) - prec(succ(x, z), y) + prec(prec(z, x), y),
        ("x", "y", "z"),
    ),
    Identity(
        "pre_apl.mixed",
        succ(_sum(y, x), z)
        - succ(_sum(x, y), z)
        - prec(succ(y, z), x)
        + prec(succ(x, z), y)
        + prec(prec(z, y), x)
        - prec(prec(z, x), y),
        ("x", "y", "z"),
    ),
)

PRE_APLP_IDENTITIES = (
    Identity(
        "pre_aplp.star_succ_prec",
        2 * star(y, succ(x, z)) - 2 * star(y, prec(z, x)) - star(_sum(x, y), z) + star(x, prec(z, y)),
        ("x", "y", "z"),
    ),
    Identity(
        "pre_aplp.sum_star",
        2 * star(_sum(x, y), z) - 2 * star(_sum(y, x), z) - star(y, succ(x, z)) + star(x, succ(y, z)),
        ("x", "y", "z"),
    ),
    Identity(
        "pre_aplp.prec_sym",
        2 * prec(z, star(x, y) + star(y, x)) - prec(star(x, z), y) - star(x, prec(z, y)),
        ("x", "y", "z"),
    ),
    Identity(
        "pre_aplp.succ_sym",
        2 * succ(x, star(y, z)) - succ(star(x, y) + star(y, x), z) - star(y, succ(x, z)),
        ("x", "y", "z"),
    ),
    Identity(
        "pre_aplp.succ_prec",
        2 * succ(x, star(y, z)) - prec(star(x, z), y) - star(_sum(x, y), z),
        ("x", "y", "z"),
    ),
)

POISSON_TRIVIALITY_IDENTITIES = (
    Identity("trivial.bracket_times_dot", dot(bracket(x, y), z), ("x", "y", "z"), "[x,y].z = 0"),
    Identity("trivial.bracket_of_dot", bracket(dot(x, y), z), ("x", "y", "z"), "[x.y, z] = 0"),
)

CLASSES: dict[AlgebraClass, tuple[tuple[str, ...], tuple[Identity, ...]]] = {
    AlgebraClass.COMM_ASSOC: (("dot",), COMM_ASSOC_IDENTITIES),
    AlgebraClass.LIE: (("bracket",), LIE_IDENTITIES),
    AlgebraClass.TRANSPOSED_POISSON: (("dot", "bracket"), COMM_ASSOC_IDENTITIES + LIE_IDENTITIES + TPA_IDENTITIES),
    AlgebraClass.ANTI_PRE_LIE: (("circ",), (APL_LEFT, APL_CYCLIC)),
    AlgebraClass.ANTI_PRE_LIE_ALT: (("circ",), (APL_LEFT, APL_CYCLIC_ALT)),
    AlgebraClass.ANTI_PRE_LIE_POISSON: (
        ("dot", "circ"),
        COMM_ASSOC_IDENTITIES + (APL_LEFT, APL_CYCLIC) + APLP_IDENTITIES,
    ),
    AlgebraClass.ZINBIEL: (("star",), ZINBIEL_IDENTITIES),
    AlgebraClass.PRE_APL: (("succ", "prec"), PRE_APL_IDENTITIES),
    AlgebraClass.PRE_APLP: (
        ("star", "succ", "prec"),
        ZINBIEL_IDENTITIES + PRE_APL_IDENTITIES + PRE_APLP_IDENTITIES,
    ),
    AlgebraClass.POISSON_TRIVIALITY: (("dot", "bracket"), POISSON_TRIVIALITY_IDENTITIES),
}


def class_identities(class_id) -> tuple[Identity, ...]:
    return CLASSES[AlgebraClass(class_id)][1]


def check_class(a: AlgebraPresentation, class_id) -> list[IdentityReport]:
    """Evaluate every defining identity of ``class_id`` on all basis tuples."""
    try:
        cls = AlgebraClass(class_id)
    except ValueError:
        raise ConfigurationError(f"unknown algebra class {class_id!r}") from None
    needed, identities = CLASSES[cls]
    a.require(*needed)
    env = a.environment()
    return [ident.check(env) for ident in identities]


def passes(a: AlgebraPresentation, class_id) -> bool:
    return all(r.holds for r in check_class(a, class_id))


# ---------------------------------------------------------------------------
# constructions between classes


def commutator(a: AlgebraPresentation) -> AlgebraPresentation:
    """Add ``bracket[x, y] = x o y - y o x`` computed from ``circ``."""
    c = a.product("circ")
    return a.with_products(bracket=frozen(c - c.transpose(1, 0, 2)))


def pre_apl_sum(a: AlgebraPresentation) -> AlgebraPresentation:
    """Add ``circ = succ + prec``."""
    return a.with_products(circ=frozen(a.product("succ") + a.product("prec")))


def zinbiel_symmetrization(a: AlgebraPresentation) -> AlgebraPresentation:
    """Add ``dot = x*y + y*x`` computed from ``star``."""
    s = a.product("star")
    return a.with_products(dot=frozen(s + s.transpose(1, 0, 2)))


_P = "P"
LEIBNIZ = {
    name: Identity(
        f"derivation.{name}",
        MapApply(_P, op(name)(x, y)) - op(name)(MapApply(_P, x), y) - op(name)(x, MapApply(_P, y)),
        ("x", "y"),
        f"P(x {name} y) = P(x) {name} y + x {name} P(y)",
    )
    for name in PRODUCT_NAMES
}


def as_linear_map(p) -> LinearMap:
    return p if isinstance(p, LinearMap) else LinearMap(p)


def check_derivation(a: AlgebraPresentation, product_name: str, P) -> IdentityReport:
    """Leibniz rule for ``P`` with respect to one product."""
    P = as_linear_map(P)
    a.require(product_name)
    if P.matrix.shape != (a.dim, a.dim):
        raise ArgumentError(f"P has shape {P.matrix.shape}, expected {(a.dim, a.dim)}")
    return LEIBNIZ[product_name].check(a.environment(P=P.matrix))


def block_restriction(a: AlgebraPresentation, indices: Sequence[int]) -> AlgebraPresentation:
    """The products restricted to a span of basis vectors, projected back onto it."""
    idx = list(indices)
    return AlgebraPresentation(
        len(idx),
        {n: frozen(t[np.ix_(idx, idx, idx)]) for n, t in a.products.items()},
        tuple(a.basis_labels[i] for i in idx),
    )
