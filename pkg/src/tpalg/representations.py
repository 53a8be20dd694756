"""Representations of the five algebra classes, duals and semi-direct products.

A representation assigns to each basis element ``e_i`` of the base algebra
one square matrix per family.  Families by kind:

=============  ====================  =====================
kind           families              base products used
=============  ====================  =====================
LIE            rho                   bracket
COMM_ASSOC     mu                    dot
APL            l, r                  circ
TPA            mu, rho               dot, bracket
APLP           mu, l, r              dot, circ
=============  ====================  =====================

Dual maps use the dual basis of ``V*``, so ``f*(x) = -f(x)^T``.
"""

from __future__ import annotations

from collections.abc import Mapping
from dataclasses import dataclass, field
from enum import Enum
from types import MappingProxyType

import numpy as np

from .algebra import AlgebraClass, AlgebraPresentation, check_class, commutator
from .errors import ArgumentError, ConfigurationError, DimensionError, PreconditionError
from .identities import Environment, Identity, IdentityReport, Var, op
from .tensor import Tensor, as_tensor, frozen, zeros


class RepKind(str, Enum):
    LIE = "LIE"
    COMM_ASSOC = "COMM_ASSOC"
    APL = "APL"
    TPA = "TPA"
    APLP = "APLP"


FAMILIES = {
    RepKind.LIE: ("rho",),
    RepKind.COMM_ASSOC: ("mu",),
    RepKind.APL: ("l", "r"),
    RepKind.TPA: ("mu", "rho"),
    RepKind.APLP: ("mu", "l", "r"),
}

BASE_PRODUCTS = {
    RepKind.LIE: ("bracket",),
    RepKind.COMM_ASSOC: ("dot",),
    RepKind.APL: ("circ",),
    RepKind.TPA: ("dot", "bracket"),
    RepKind.APLP: ("dot", "circ"),
}

BASE_CLASS = {
    RepKind.LIE: AlgebraClass.LIE,
    RepKind.COMM_ASSOC: AlgebraClass.COMM_ASSOC,
    RepKind.APL: AlgebraClass.ANTI_PRE_LIE,
    RepKind.TPA: AlgebraClass.TRANSPOSED_POISSON,
    RepKind.APLP: AlgebraClass.ANTI_PRE_LIE_POISSON,
}


@dataclass(frozen=True, eq=False)
class Representation:
    """Linear map families ``A -> End(V)``; ``maps[f][i]`` is the matrix of ``f(e_i)``."""

    kind: RepKind
    base: AlgebraPresentation
    space_dim: int
    maps: Mapping[str, Tensor] = field(default_factory=dict)

    def __post_init__(self):
        kind = RepKind(self.kind)
        object.__setattr__(self, "kind", kind)
        expected = FAMILIES[kind]
        if set(self.maps) != set(expected):
            raise ConfigurationError(f"{kind.value} representation needs families {expected}, got {tuple(self.maps)}")
        shape = (self.base.dim, self.space_dim, self.space_dim)
        fixed = {}
        for name in expected:
            m = as_tensor(self.maps[name])
            if m.shape != shape:
                raise DimensionError(f"family {name!r} has shape {m.shape}, expected {shape}")
            fixed[name] = m
        object.__setattr__(self, "maps", MappingProxyType(fixed))

    def matrix(self, family: str, i: int) -> Tensor:
        return self.maps[family][i]

    def action(self, family: str) -> Tensor:
        """Family as a bilinear map ``A x V -> V``: ``act[i, j, k]`` = coefficient of ``v_k`` in ``f(e_i) v_j``."""
        return frozen(self.maps[family].transpose(0, 2, 1))

    def environment(self) -> Environment:
        tensors = dict(self.base.products)
        tensors.update({f: self.action(f) for f in self.maps})
        return Environment({"A": self.base.dim, "V": self.space_dim}, tensors)

    def same_as(self, other: Representation) -> bool:
        return (
            self.kind == other.kind
            and self.space_dim == other.space_dim
            and self.base.same_as(other.base)
            and all(np.array_equal(self.maps[f], other.maps[f]) for f in self.maps)
        )


def maps_from_action(act: Tensor) -> Tensor:
    """Inverse of :meth:`Representation.action`."""
    return frozen(np.asarray(act, dtype=object).transpose(0, 2, 1))


def left_mult(product: Tensor) -> Tensor:
    """Matrices of ``L(x) y = x * y``."""
    return maps_from_action(product)


def right_mult(product: Tensor) -> Tensor:
    """Matrices of ``R(x) y = y * x``."""
    return maps_from_action(np.asarray(product).transpose(1, 0, 2))


def dual_maps(maps: Tensor) -> Tensor:
    """``f*(x) = -f(x)^T`` on the dual space, for every basis element ``x``."""
    return frozen(-np.asarray(maps, dtype=object).transpose(0, 2, 1))


def adjoint(a: AlgebraPresentation, kind) -> Representation:
    """The adjoint representation of ``a`` on itself."""
    kind = RepKind(kind)
    a.require(*BASE_PRODUCTS[kind])
    if kind is RepKind.LIE:
        maps = {"rho": left_mult(a["bracket"])}
    elif kind is RepKind.COMM_ASSOC:
        maps = {"mu": left_mult(a["dot"])}
    elif kind is RepKind.APL:
        maps = {"l": left_mult(a["circ"]), "r": right_mult(a["circ"])}
    elif kind is RepKind.TPA:
        maps = {"mu": left_mult(a["dot"]), "rho": left_mult(a["bracket"])}
    else:
        maps = {"mu": left_mult(a["dot"]), "l": left_mult(a["circ"]), "r": right_mult(a["circ"])}
    return Representation(kind, a.only(*BASE_PRODUCTS[kind]), a.dim, maps)


def zero_representation(a: AlgebraPresentation, kind, space_dim: int) -> Representation:
    kind = RepKind(kind)
    return Representation(
        kind, a.only(*BASE_PRODUCTS[kind]), space_dim, {f: zeros((a.dim, space_dim, space_dim)) for f in FAMILIES[kind]}
    )


# ---------------------------------------------------------------------------
# defining identities

x, y = Var("x", "A"), Var("y", "A")
v = Var("v", "V")
dot, bracket, circ = op("dot"), op("bracket"), op("circ")


# each family acts as a bilinear map A x V -> V
mu, rho, l, r = op("mu"), op("rho"), op("l"), op("r")

_ORDER = ("x", "y", "v")

LIE_REP = (
    Identity("lie_rep.homomorphism", rho(bracket(x, y), v) - rho(x, rho(y, v)) + rho(y, rho(x, v)), _ORDER,
             "rho([x,y]) = rho(x)rho(y) - rho(y)rho(x)"),
)

CA_REP = (
    Identity("ca_rep.homomorphism", mu(dot(x, y), v) - mu(x, mu(y, v)), _ORDER, "mu(x.y) = mu(x)mu(y)"),
)

APL_REP = (
    Identity(
        "apl_rep.left",
        l(circ(y, x), v) - l(circ(x, y), v) - l(x, l(y, v)) + l(y, l(x, v)),
        _ORDER,
        "l(y o x) - l(x o y) = l(x)l(y) - l(y)l(x)",
    ),
    Identity(
        "apl_rep.right",
        r(circ(x, y), v) - l(x, r(y, v)) - r(y, l(x, v)) + r(y, r(x, v)),
        _ORDER,
        "r(x o y) = l(x)r(y) + r(y)l(x) - r(y)r(x)",
    ),
    Identity(
        "apl_rep.mixed",
        l(circ(y, x), v) - l(circ(x, y), v) - r(x, l(y, v)) + r(y, l(x, v)) + r(x, r(y, v)) - r(y, r(x, v)),
        _ORDER,
        "l(y o x) - l(x o y) = r(x)l(y) - r(y)l(x) - r(x)r(y) + r(y)r(x)",
    ),
)

TPA_REP = CA_REP + LIE_REP + (
    Identity(
        "tpa_rep.dot_bracket",
        2 * mu(x, rho(y, v)) - rho(dot(x, y), v) - rho(y, mu(x, v)),
        _ORDER,
        "2 mu(x)rho(y) = rho(x.y) + rho(y)mu(x)",
    ),
    Identity(
        "tpa_rep.bracket_dot",
        2 * mu(bracket(x, y), v) - rho(x, mu(y, v)) + rho(y, mu(x, v)),
        _ORDER,
        "2 mu([x,y]) = rho(x)mu(y) - rho(y)mu(x)",
    ),
)

APLP_REP = CA_REP + APL_REP + (
    Identity(
        "aplp_rep.first",
        2 * mu(y, l(x, v)) - 2 * mu(y, r(x, v)) - mu(circ(x, y), v) + mu(x, r(y, v)),
        _ORDER,
        "2 mu(y)l(x) - 2 mu(y)r(x) = mu(x o y) - mu(x)r(y)",
    ),
    Identity(
        "aplp_rep.second",
        2 * mu(circ(x, y), v) - 2 * mu(circ(y, x), v) - mu(y, l(x, v)) + mu(x, l(y, v)),
        _ORDER,
        "2 mu(x o y) - 2 mu(y o x) = mu(y)l(x) - mu(x)l(y)",
    ),
    Identity(
        "aplp_rep.third",
        2 * r(dot(x, y), v) - r(y, mu(x, v)) - mu(x, r(y, v)),
        _ORDER,
        "2 r(x.y) = r(y)mu(x) + mu(x)r(y)",
    ),
    Identity(
        "aplp_rep.fourth",
        2 * l(x, mu(y, v)) - l(dot(x, y), v) - mu(y, l(x, v)),
        _ORDER,
        "2 l(x)mu(y) = l(x.y) + mu(y)l(x)",
    ),
    Identity(
        "aplp_rep.fifth",
        2 * l(x, mu(y, v)) - r(y, mu(x, v)) - mu(circ(x, y), v),
        _ORDER,
        "2 l(x)mu(y) = r(y)mu(x) + mu(x o y)",
    ),
)

REP_IDENTITIES = {
    RepKind.LIE: LIE_REP,
    RepKind.COMM_ASSOC: CA_REP,
    RepKind.APL: APL_REP,
    RepKind.TPA: TPA_REP,
    RepKind.APLP: APLP_REP,
}

TPA_DUAL_CONDITION = (
    Identity("tpa_dual.mu_of_bracket", mu(bracket(x, y), v), _ORDER, "mu([x,y]) = 0"),
    Identity("tpa_dual.rho_of_dot", rho(dot(x, y), v) - mu(x, rho(y, v)), _ORDER, "rho(x.y) = mu(x)rho(y)"),
)


def _require_base(rep: Representation, check_base: bool) -> None:
    rep.base.require(*BASE_PRODUCTS[rep.kind])
    if check_base:
        bad = [r for r in check_class(rep.base, BASE_CLASS[rep.kind]) if not r.holds]
        if bad:
            raise PreconditionError(f"the base algebra is not {BASE_CLASS[rep.kind].value}", bad)


def check_representation(rep: Representation, check_base: bool = True) -> list[IdentityReport]:
    """One report per defining equation, evaluated on all ``(x, y, v)`` basis triples."""
    _require_base(rep, check_base)
    env = rep.environment()
    return [ident.check(env) for ident in REP_IDENTITIES[rep.kind]]


def is_representation(rep: Representation, check_base: bool = True) -> bool:
    return all(r.holds for r in check_representation(rep, check_base))


def dualize(rep: Representation) -> Representation:
    """The dual representation on ``V*`` with the sign conventions of each kind.

    LIE: ``rho*``; COMM_ASSOC: ``-mu*``; APL: ``(r* - l*, r*)``;
    APLP: ``(-mu*, r* - l*, r*)``.  TPA has no dual in general; use
    :func:`check_tpa_dual_condition` and :func:`tpa_dual`.
    """
    m = rep.maps
    if rep.kind is RepKind.LIE:
        maps = {"rho": dual_maps(m["rho"])}
    elif rep.kind is RepKind.COMM_ASSOC:
        maps = {"mu": frozen(-dual_maps(m["mu"]))}
    elif rep.kind is RepKind.APL:
        maps = {"l": frozen(dual_maps(m["r"]) - dual_maps(m["l"])), "r": dual_maps(m["r"])}
    elif rep.kind is RepKind.APLP:
        maps = {
            "mu": frozen(-dual_maps(m["mu"])),
            "l": frozen(dual_maps(m["r"]) - dual_maps(m["l"])),
            "r": dual_maps(m["r"]),
        }
    else:
        raise ArgumentError("a transposed Poisson representation has no dual in general; use check_tpa_dual_condition")
    return Representation(rep.kind, rep.base, rep.space_dim, maps)


def check_tpa_dual_condition(rep: Representation) -> IdentityReport:
    """Whether ``(-mu*, rho*)`` is again a representation: ``mu([x,y]) = 0`` and ``rho(x.y) = mu(x)rho(y)``."""
    if rep.kind is not RepKind.TPA:
        raise ArgumentError("the dual condition concerns transposed Poisson representations")
    env = rep.environment()
    for ident in TPA_DUAL_CONDITION:
        report = ident.check(env)
        if not report.holds:
            return report
    return IdentityReport("tpa_dual", True, variables=_ORDER)


def tpa_dual(rep: Representation) -> Representation:
    """``(-mu*, rho*, V*)``, refused unless the dual condition holds."""
    report = check_tpa_dual_condition(rep)
    if not report.holds:
        raise PreconditionError("(-mu*, rho*) is not a representation", [report])
    maps = {"mu": frozen(-dual_maps(rep.maps["mu"])), "rho": dual_maps(rep.maps["rho"])}
    return Representation(RepKind.TPA, rep.base, rep.space_dim, maps)


def _embed(n: int, m: int, base: Tensor | None, left: Tensor | None, right: Tensor | None) -> Tensor:
    """Block product on ``A + V``: base on ``A x A``, ``left(x)v`` on ``A x V`` and ``right(y)u`` on ``V x A``."""
    big = np.array(zeros((n + m,) * 3))
    if base is not None:
        big[:n, :n, :n] = base
    if left is not None:
        big[:n, n:, n:] = left
    if right is not None:
        big[n:, :n, n:] = np.asarray(right).transpose(1, 0, 2)
    return frozen(big)


def semidirect_product(rep: Representation, unchecked: bool = False) -> AlgebraPresentation:
    """The algebra on ``A + V`` whose products extend the base by the representation."""
    if not unchecked:
        bad = [r for r in check_representation(rep) if not r.holds]
        if bad:
            raise PreconditionError("not a representation", bad)
    n, m = rep.base.dim, rep.space_dim
    b = rep.base.products
    act = rep.action
    products = {}
    if rep.kind in (RepKind.LIE, RepKind.TPA):
        products["bracket"] = _embed(n, m, b["bracket"], act("rho"), frozen(-act("rho")))
    if rep.kind in (RepKind.COMM_ASSOC, RepKind.TPA, RepKind.APLP):
        products["dot"] = _embed(n, m, b["dot"], act("mu"), act("mu"))
    if rep.kind in (RepKind.APL, RepKind.APLP):
        products["circ"] = _embed(n, m, b["circ"], act("l"), act("r"))
    labels = rep.base.basis_labels + tuple(f"v{j}" for j in range(m))
    return AlgebraPresentation(n + m, products, labels)


def lie_reps_from_apl(rep: Representation) -> tuple[Representation, Representation]:
    """``(-l, V)`` and ``(l - r, V)`` as representations of the commutator Lie algebra."""
    if rep.kind is not RepKind.APL:
        raise ArgumentError("expected an APL representation")
    lie = commutator(rep.base).only("bracket")
    minus_l = Representation(RepKind.LIE, lie, rep.space_dim, {"rho": frozen(-rep.maps["l"])})
    l_minus_r = Representation(RepKind.LIE, lie, rep.space_dim, {"rho": frozen(rep.maps["l"] - rep.maps["r"])})
    return minus_l, l_minus_r


def tpa_rep_from_aplp(rep: Representation) -> Representation:
    """``(mu, l - r, V)`` as a representation of the sub-adjacent transposed Poisson algebra."""
    if rep.kind is not RepKind.APLP:
        raise ArgumentError("expected an APLP representation")
    tpa = commutator(rep.base).only("dot", "bracket")
    return Representation(
        RepKind.TPA, tpa, rep.space_dim, {"mu": rep.maps["mu"], "rho": frozen(rep.maps["l"] - rep.maps["r"])}
    )
