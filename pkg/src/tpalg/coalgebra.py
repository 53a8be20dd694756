"""Coproducts, coalgebra axioms, 1-cocycles and bialgebra compatibilities.

A coproduct tensor ``D`` has ``D[k, i, j]`` = coefficient of ``e_i (x) e_j``
in ``delta(e_k)``.  The product it induces on the dual space has structure
constants ``c[i, j, k] = D[k, i, j]``, so dualization is a transpose.

Coalgebra and bialgebra conditions are written as identities in the
expression engine: ``co(x)`` is ``delta(x)`` with two slots, ``co(u, 1)``
applies ``delta`` to slot 1 of ``u``, ``Permute`` reorders tensor factors.
In the environment the anti-pre-Lie coproduct is named ``delta`` and the
cocommutative one ``Delta``.
"""

from __future__ import annotations

import enum
from collections.abc import Mapping
from dataclasses import dataclass

import numpy as np

from .algebra import AlgebraClass, AlgebraPresentation, check_class, commutator
from .errors import ArgumentError, ConfigurationError, DimensionError, PreconditionError
from .identities import (
    CoApply,
    Environment,
    Identity,
    IdentityReport,
    Permute,
    op,
    variables,
)
from .tensor import CYCLE, FLIP, Tensor, as_tensor, frozen, permute_tensor


@dataclass(frozen=True, eq=False)
class Coproduct:
    """A linear map ``A -> A (x) A`` stored as ``tensor[k, i, j]``."""

    tensor: Tensor

    def __post_init__(self):
        t = as_tensor(self.tensor)
        if t.ndim != 3 or len(set(t.shape)) != 1:
            raise DimensionError(f"a coproduct needs a cubic rank-3 tensor, got shape {t.shape}")
        object.__setattr__(self, "tensor", t)

    @property
    def dim(self) -> int:
        return self.tensor.shape[0]

    def __call__(self, v) -> Tensor:
        """Image of a coordinate vector as a matrix ``[i, j]``."""
        return frozen(np.einsum("k,kij->ij", np.asarray(v, dtype=object), self.tensor))

    def __eq__(self, other):
        return isinstance(other, Coproduct) and np.array_equal(self.tensor, other.tensor)

    __hash__ = None

    @classmethod
    def zero(cls, dim: int) -> Coproduct:
        return cls(np.zeros((dim,) * 3, dtype=int))


def dualize_product_coproduct(x):
    """Product tensor to the coproduct of the dual space and back.

    ``<a* o b*, x> = <a* (x) b*, delta(x)>`` in coordinates is the transpose
    ``delta[k, i, j] = c[i, j, k]``.  Applying it twice is the identity.
    """
    if isinstance(x, Coproduct):
        return permute_tensor(x.tensor, (1, 2, 0))
    t = as_tensor(x)
    if t.ndim != 3:
        raise DimensionError("expected a rank-3 product tensor or a Coproduct")
    return Coproduct(permute_tensor(t, (2, 0, 1)))


def dual_algebra(coproducts: Mapping[str, Coproduct]) -> AlgebraPresentation:
    """The algebra on the dual space: ``delta`` gives ``circ``, ``Delta`` gives ``dot``."""
    names = {"delta": "circ", "Delta": "dot"}
    products = {names[k]: dualize_product_coproduct(v) for k, v in coproducts.items()}
    dims = {c.dim for c in coproducts.values()}
    if len(dims) != 1:
        raise DimensionError("coproducts disagree on dimension")
    return AlgebraPresentation(dims.pop(), products)


def coproducts_from_dual(a_star: AlgebraPresentation) -> dict[str, Coproduct]:
    """Coproducts on ``A`` dual to the products of ``A*``."""
    names = {"circ": "delta", "dot": "Delta"}
    return {names[k]: dualize_product_coproduct(v) for k, v in a_star.products.items() if k in names}


# ---------------------------------------------------------------------------
# identities

(_x,) = variables("x")
_y = variables("y")[0]
_circ, _dot, _br = op("circ"), op("dot"), op("bracket")
CYCLE2 = (2, 0, 1)
_T12 = (1, 0, 2)
_T23 = (0, 2, 1)


def _co(name, arg, slot=0):
    return CoApply(name, arg, slot)


def _p(e, perm):
    return Permute(e, tuple(perm))


def _cyclic_sum(e):
    return e + _p(e, CYCLE) + _p(e, CYCLE2)


_d_x = _co("delta", _x)
_D_x = _co("Delta", _x)
_id_d_d = _co("delta", _d_x, 1)  # (id (x) delta) delta
_d_id_d = _co("delta", _d_x, 0)  # (delta (x) id) delta

APL_COALG_1 = Identity(
    "apl_coalg.first",
    _id_d_d - _p(_id_d_d, _T12) - _p(_d_id_d, _T12) + _d_id_d,
    description="(id - tau (x) id)(id (x) delta)delta = (tau (x) id - id)(delta (x) id)delta",
)
APL_COALG_2 = Identity(
    "apl_coalg.second",
    _cyclic_sum(_p(_d_id_d, _T12) - _d_id_d),
    description="(id + xi + xi^2)(tau (x) id - id)(delta (x) id)delta = 0",
)
APL_COALG_ALT = Identity(
    "apl_coalg.second_alt",
    _cyclic_sum(_p(_id_d_d, _T12) - _id_d_d),
    description="(id + xi + xi^2)(tau (x) id - id)(id (x) delta)delta = 0",
)

COCOMM = Identity("cocomm.cocommutative", _D_x - _p(_D_x, FLIP))
COASSOC = Identity("cocomm.coassociative", _co("Delta", _D_x, 1) - _co("Delta", _D_x, 0))

_d_id_D = _co("delta", _D_x, 0)  # (delta (x) id) Delta
_id_d_D = _co("delta", _D_x, 1)  # (id (x) delta) Delta
_id_D_d = _co("Delta", _d_x, 1)  # (id (x) Delta) delta
_D_id_d = _co("Delta", _d_x, 0)  # (Delta (x) id) delta

APLP_COALG_1 = Identity(
    "aplp_coalg.first",
    2 * _d_id_D - 2 * _p(_d_id_D, _T12) - _p(_id_d_D, _T12) + _id_d_D,
    description="2(delta (x) id)Delta - 2(tau (x) id)(delta (x) id)Delta = (tau (x) id)(id (x) delta)Delta - (id (x) delta)Delta",
)
APLP_COALG_2 = Identity(
    "aplp_coalg.second",
    2 * _id_D_d - _p(_D_id_d, _T23) - _d_id_D,
    description="2(id (x) Delta)delta = (id (x) tau)(Delta (x) id)delta + (delta (x) id)Delta",
)


class CoalgebraClass(str, enum.Enum):
    APL_COALG = "apl_coalg"
    COCOMM_COASSOC = "cocomm_coassoc"
    APLP_COALG = "aplp_coalg"


_COALG = {
    CoalgebraClass.APL_COALG: (("delta",), (APL_COALG_1, APL_COALG_2)),
    CoalgebraClass.COCOMM_COASSOC: (("Delta",), (COCOMM, COASSOC)),
    CoalgebraClass.APLP_COALG: (
        ("delta", "Delta"),
        (COCOMM, COASSOC, APL_COALG_1, APL_COALG_2, APLP_COALG_1, APLP_COALG_2),
    ),
}

#: The algebra class each coalgebra class dualizes to.
DUAL_CLASS = {
    CoalgebraClass.APL_COALG: AlgebraClass.ANTI_PRE_LIE,
    CoalgebraClass.COCOMM_COASSOC: AlgebraClass.COMM_ASSOC,
    CoalgebraClass.APLP_COALG: AlgebraClass.ANTI_PRE_LIE_POISSON,
}


def _as_coproducts(coproducts) -> dict[str, Coproduct]:
    if isinstance(coproducts, Coproduct):
        return {"delta": coproducts}
    out = {}
    for k, v in coproducts.items():
        if k not in ("delta", "Delta"):
            raise ConfigurationError(f"unknown coproduct name {k!r}; use 'delta' or 'Delta'")
        out[k] = v if isinstance(v, Coproduct) else Coproduct(v)
    return out


def _coalgebra_env(coproducts: dict[str, Coproduct], extra=None) -> Environment:
    dims = {c.dim for c in coproducts.values()}
    if len(dims) != 1:
        raise DimensionError("coproducts disagree on dimension")
    tensors = {k: v.tensor for k, v in coproducts.items()}
    tensors.update(extra or {})
    return Environment({"A": dims.pop()}, tensors)


def check_coalgebra(coproducts, class_id, alternate: bool = False) -> list[IdentityReport]:
    """Coalgebra axioms evaluated on every basis vector.

    ``coproducts`` is a :class:`Coproduct` (taken as ``delta``) or a mapping
    with keys ``delta`` and/or ``Delta``.  With ``alternate=True`` the second
    anti-pre-Lie axiom is replaced by its cyclic form on ``(id (x) delta)delta``.
    """
    class_id = CoalgebraClass(class_id)
    cop = _as_coproducts(coproducts)
    needs, idents = _COALG[class_id]
    for n in needs:
        if n not in cop:
            raise ConfigurationError(f"{class_id.value} needs the coproduct {n!r}")
    if alternate:
        idents = tuple(APL_COALG_ALT if i is APL_COALG_2 else i for i in idents)
    env = _coalgebra_env(cop)
    return [i.check(env) for i in idents]


# 1-cocycle of g(A) with values in A (x) A for -L o (x) id + id (x) ad:
# delta([x,y]) = (id (x) ad(x) - L(x) (x) id)delta(y) - (id (x) ad(y) - L(y) (x) id)delta(x)
_d_y = _co("delta", _y)
_D_y = _co("Delta", _y)


def _act(x, t):
    """(id (x) ad(x) - L_o(x) (x) id) t for a two-slot value ``t``."""
    return _br(x, t, right_slot=1) - _circ(x, t, right_slot=0)


ONE_COCYCLE = Identity(
    "one_cocycle",
    _co("delta", _br(_x, _y)) - _act(_x, _d_y) + _act(_y, _d_x),
    ("x", "y"),
    description="delta([x,y]) = (id (x) ad(x) - L(x) (x) id)delta(y) - (id (x) ad(y) - L(y) (x) id)delta(x)",
)

_inner = (
    _co("delta", _circ(_x, _y))
    - _circ(_x, _d_y, right_slot=0)
    - _circ(_x, _d_y, right_slot=1)
    + _circ(_d_x, _y, left_slot=1, host="left")
)
APL_BIALG_1 = Identity(
    "apl_bialg.first",
    _inner - _p(_inner, FLIP),
    ("x", "y"),
    description="(id - tau)(delta(x o y) - (L(x) (x) id)delta(y) - (id (x) L(x))delta(y) + (id (x) R(y))delta(x)) = 0",
)
APL_BIALG_2 = Identity("apl_bialg.second", ONE_COCYCLE.expr, ("x", "y"), ONE_COCYCLE.description)

CCI_BIALG = Identity(
    "cci_bialg.compatibility",
    _co("Delta", _dot(_x, _y)) - _dot(_x, _D_y, right_slot=0) - _dot(_D_x, _y, left_slot=1, host="left"),
    ("x", "y"),
    description="Delta(x.y) = (L(x) (x) id)Delta(y) + (id (x) L(y))Delta(x)",
)


def _left(opn, x, t, slot):
    """``L(x)`` applied to factor ``slot`` of ``t``."""
    return opn(x, t, right_slot=slot)


def _right(opn, t, y, slot):
    """``R(y)`` applied to factor ``slot`` of ``t``."""
    return opn(t, y, left_slot=slot, host="left")


APLP_BIALG_1 = Identity(
    "aplp_bialg.first",
    2 * _left(_circ, _x, _D_y, 0)
    - 2 * _left(_dot, _y, _d_x, 1)
    + _co("delta", _dot(_x, _y))
    + _left(_dot, _y, _d_x, 0)
    - _left(_br, _x, _D_y, 1),
    ("x", "y"),
    description="2(L(x) (x) id)Delta(y) - 2(id (x) L.(y))delta(x) + delta(x.y) + (L.(y) (x) id)delta(x) - (id (x) ad(x))Delta(y) = 0",
)
APLP_BIALG_2 = Identity(
    "aplp_bialg.second",
    2 * _co("Delta", _br(_x, _y))
    + _left(_br, _y, _D_x, 1)
    - _left(_dot, _x, _d_y, 0)
    - _left(_br, _x, _D_y, 1)
    + _left(_dot, _y, _d_x, 0),
    ("x", "y"),
    description="2Delta([x,y]) + (id (x) ad(y))Delta(x) - (L.(x) (x) id)delta(y) - (id (x) ad(x))Delta(y) + (L.(y) (x) id)delta(x) = 0",
)
APLP_BIALG_3 = Identity(
    "aplp_bialg.third",
    2 * _left(_dot, _y, _d_x, 1)
    - 2 * _left(_circ, _x, _D_y, 0)
    + _co("Delta", _circ(_x, _y))
    + _right(_circ, _D_x, _y, 0)
    + _p(_left(_dot, _x, _d_y, 0), FLIP)
    - _left(_dot, _x, _d_y, 1),
    ("x", "y"),
    description="2(id (x) L.(y))delta(x) - 2(L(x) (x) id)Delta(y) + Delta(x o y) + (R(y) (x) id)Delta(x) + tau(L.(x) (x) id)delta(y) - (id (x) L.(x))delta(y) = 0",
)
_inner4 = (
    2 * _co("delta", _dot(_x, _y))
    - _left(_dot, _x, _d_y, 0)
    - _left(_dot, _x, _d_y, 1)
    - _right(_circ, _D_x, _y, 1)
)
APLP_BIALG_4 = Identity(
    "aplp_bialg.fourth",
    _p(_inner4, FLIP) - _inner4,
    ("x", "y"),
    description="(tau - id)(2delta(x.y) - (L.(x) (x) id)delta(y) - (id (x) L.(x))delta(y) - (id (x) R(y))Delta(x)) = 0",
)


class BialgebraKind(str, enum.Enum):
    APL = "apl"
    COMM_COCOMM_INF = "comm_cocomm_inf"
    APLP = "aplp"


_BIALG = {
    BialgebraKind.APL: (("circ",), AlgebraClass.ANTI_PRE_LIE, CoalgebraClass.APL_COALG, (APL_BIALG_1, APL_BIALG_2)),
    BialgebraKind.COMM_COCOMM_INF: (("dot",), AlgebraClass.COMM_ASSOC, CoalgebraClass.COCOMM_COASSOC, (CCI_BIALG,)),
    BialgebraKind.APLP: (
        ("dot", "circ"),
        AlgebraClass.ANTI_PRE_LIE_POISSON,
        CoalgebraClass.APLP_COALG,
        (CCI_BIALG, APL_BIALG_1, APL_BIALG_2, APLP_BIALG_1, APLP_BIALG_2, APLP_BIALG_3, APLP_BIALG_4),
    ),
}


def _algebra_env(a: AlgebraPresentation, cop: dict[str, Coproduct]) -> Environment:
    for c in cop.values():
        if c.dim != a.dim:
            raise DimensionError(f"coproduct of dimension {c.dim} on an algebra of dimension {a.dim}")
    if a.has("circ"):
        a = commutator(a)
    return a.environment(**{k: v.tensor for k, v in cop.items()})


def check_one_cocycle(a: AlgebraPresentation, delta: Coproduct) -> IdentityReport:
    """Is ``delta`` a 1-cocycle of the sub-adjacent Lie algebra with values in
    ``A (x) A`` under ``-L_o (x) id + id (x) ad``?"""
    circ = a.product("circ")
    if a.has("bracket") and not np.array_equal(a.product("bracket"), commutator(a.only("circ")).product("bracket")):
        raise ConfigurationError("the bracket is not the commutator of circ")
    delta = delta if isinstance(delta, Coproduct) else Coproduct(delta)
    env = _algebra_env(AlgebraPresentation(a.dim, {"circ": circ}), {"delta": delta})
    return ONE_COCYCLE.check(env)


def dual_coproduct_on_dual(a: AlgebraPresentation) -> Coproduct:
    """``beta``: the coproduct on ``A*`` dual to ``circ`` of ``A`` (dual basis)."""
    return dualize_product_coproduct(a.product("circ"))


def check_bialgebra(a: AlgebraPresentation, coproducts, kind, preconditions: str = "enforce") -> list[IdentityReport]:
    """One report per compatibility equation of the chosen bialgebra kind.

    ``preconditions`` works as in matched pair checks: ``"enforce"`` raises
    when the algebra or coalgebra axioms fail, ``"report"`` prepends those
    reports, ``"skip"`` checks only the compatibilities.
    """
    kind = BialgebraKind(kind)
    if preconditions not in ("enforce", "report", "skip"):
        raise ArgumentError(f"unknown precondition mode {preconditions!r}")
    needs, alg_class, coalg_class, idents = _BIALG[kind]
    cop = _as_coproducts(coproducts)
    for n in needs:
        a.require(n)
    sub = a.only(*needs)
    pre = []
    if preconditions != "skip":
        pre = check_class(sub, alg_class) + check_coalgebra(cop, coalg_class)
        if preconditions == "enforce":
            bad = [r for r in pre if not r.holds]
            if bad:
                raise PreconditionError(f"{kind.value} bialgebra hypotheses fail", bad)
            pre = []
    env = _algebra_env(sub, cop)
    return pre + [i.check(env) for i in idents]
