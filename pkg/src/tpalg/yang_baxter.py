"""Two-tensors, the Yang-Baxter tensors T(r) and A(r), coboundary coproducts
and the conditions under which they give bialgebras.

A two-tensor is stored as a matrix: ``r = sum r[p, q] e_p (x) e_q``.  Writing
``r = sum_j a_j (x) b_j``, the three placements of ``T(r)`` are

=====================  ======================================================
``r12 o r13``          ``sum a_i o a_j (x) b_i (x) b_j``
``r12 o r23``          ``sum a_i (x) b_i o a_j (x) b_j``
``[r13, r23]``         ``sum a_i (x) a_j (x) [b_i, b_j]``
=====================  ======================================================

and ``A(r) = r12.r13 - r23.r12 + r13.r23`` with
``r23.r12 = sum a_j (x) a_i.b_j (x) b_i``.  In index form, with ``c`` the
structure constants, ``(r12 o r13)[k, q, w] = sum_{p,u} r[p,q] r[u,w] c[p,u,k]``.

As a map ``A* -> A``, ``r(e_p*) = sum_q r[p, q] e_q``, so its matrix (images in
columns) is the transpose of ``r``.

The coboundary conditions are written with the expression engine.  The
constants ``r``, ``s = r + tau(r)``, ``T`` and ``Ar`` (the tensor ``A(r)``) enter
as fixed tensors, and every ``sum_j`` over the factors of ``r`` becomes a
tensor product with ``r`` followed by a ``Merge`` that feeds one factor of
``r`` into an operation.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

import numpy as np

from .algebra import AlgebraPresentation, commutator
from .coalgebra import Coproduct
from .errors import ConfigurationError, DimensionError, PreconditionError
from .identities import (
    Const,
    Environment,
    Identity,
    IdentityReport,
    MapApply,
    Merge,
    Outer,
    Permute,
    evaluate_at,
    op,
    report_from_field,
    variables,
)
from .representations import dual_maps, left_mult, right_mult
from .tensor import CYCLE, LinearMap, Tensor, as_tensor, frozen, is_zero


@dataclass(frozen=True, eq=False)
class TwoTensor:
    """``r = sum r[p, q] e_p (x) e_q``."""

    matrix: Tensor

    def __post_init__(self):
        m = as_tensor(self.matrix)
        if m.ndim != 2 or m.shape[0] != m.shape[1]:
            raise DimensionError(f"a two-tensor needs a square matrix, got shape {m.shape}")
        object.__setattr__(self, "matrix", m)

    @property
    def dim(self) -> int:
        return self.matrix.shape[0]

    @property
    def is_skew(self) -> bool:
        return bool(np.array_equal(self.matrix, -self.matrix.T))

    @property
    def is_symmetric(self) -> bool:
        return bool(np.array_equal(self.matrix, self.matrix.T))

    def flip(self) -> TwoTensor:
        """``tau(r)``."""
        return TwoTensor(frozen(self.matrix.T))

    def symmetric_part(self) -> Tensor:
        """``r + tau(r)`` as a matrix."""
        return frozen(self.matrix + self.matrix.T)

    def as_map(self) -> LinearMap:
        """``r`` as a map ``A* -> A`` in dual-basis coordinates."""
        return LinearMap(frozen(self.matrix.T))

    @classmethod
    def from_map(cls, m: LinearMap) -> TwoTensor:
        """Inverse of :meth:`as_map`."""
        return cls(frozen(m.matrix.T))

    def __eq__(self, other):
        return isinstance(other, TwoTensor) and np.array_equal(self.matrix, other.matrix)

    __hash__ = None


def _as_two_tensor(a: AlgebraPresentation, r) -> TwoTensor:
    r = r if isinstance(r, TwoTensor) else TwoTensor(r)
    if r.dim != a.dim:
        raise DimensionError(f"two-tensor of dimension {r.dim} on an algebra of dimension {a.dim}")
    return r


def _placements(product: Tensor, r: Tensor) -> tuple[Tensor, Tensor, Tensor]:
    """``r12*r13``, ``r12*r23`` and ``r13*r23`` for one product ``*``."""
    # contract one factor of r at a time; a three-operand einsum on object arrays is quintic
    by_second = np.tensordot(product, r, axes=([1], [0]))  # [p, k, w] = sum_u product[p, u, k] r[u, w]
    first = np.tensordot(r, by_second, axes=([0], [0])).transpose(1, 0, 2)
    middle = np.tensordot(r, by_second, axes=([1], [0]))
    by_flip = np.tensordot(product, r, axes=([1], [1]))  # [q, k, u] = sum_w product[q, w, k] r[u, w]
    last = np.tensordot(r, by_flip, axes=([1], [0])).transpose(0, 2, 1)
    return first, middle, last


def compute_T(a: AlgebraPresentation, r) -> Tensor:
    """``T(r) = r12 o r13 + r12 o r23 - [r13, r23]``, the bracket being the commutator of ``circ``."""
    r = _as_two_tensor(a, r)
    circ = a.product("circ")
    bracket = commutator(a.only("circ")).product("bracket")
    first, middle, _ = _placements(circ, r.matrix)
    _, _, last = _placements(bracket, r.matrix)
    return frozen(first + middle - last)


def compute_A(a: AlgebraPresentation, r) -> Tensor:
    """``A(r) = r12.r13 - r23.r12 + r13.r23`` by the index formulas above."""
    r = _as_two_tensor(a, r)
    dot = a.product("dot")
    first, _, last = _placements(dot, r.matrix)
    by_flip = np.tensordot(dot, r.matrix, axes=([1], [1]))  # [p, k, u]
    r23_r12 = np.tensordot(r.matrix, by_flip, axes=([0], [0])).transpose(2, 1, 0)
    return frozen(first - r23_r12 + last)


def coboundary_coproducts(a: AlgebraPresentation, r) -> tuple[Coproduct | None, Coproduct | None]:
    """``delta_r(x) = (-L_o(x) (x) id + id (x) ad(x)) r`` and ``Delta_r(x) = (L.(x) (x) id - id (x) L.(x)) r``.

    With this sign of ``Delta_r`` the first two mixed anti-pre-Lie Poisson
    compatibilities hold for every ``r``; with the opposite sign they fail
    in general.  An entry is None when the algebra lacks the product it needs.
    """
    r = _as_two_tensor(a, r).matrix
    delta = Delta = None
    if a.has("circ"):
        circ = a.product("circ")
        br = commutator(a.only("circ")).product("bracket")
        delta = Coproduct(frozen(-np.einsum("pj,xpi->xij", r, circ) + np.einsum("iq,xqj->xij", r, br)))
    if a.has("dot"):
        dot = a.product("dot")
        Delta = Coproduct(frozen(np.einsum("pj,xpi->xij", r, dot) - np.einsum("iq,xqj->xij", r, dot)))
    if delta is None and Delta is None:
        raise ConfigurationError("coboundary coproducts need a circ or a dot product")
    return delta, Delta


def is_solution(a: AlgebraPresentation, r, kind: str = "apl") -> bool:
    """``T(r) = 0`` (``apl``), ``A(r) = 0`` (``aybe``) or both (``aplp``)."""
    if kind not in ("apl", "aybe", "aplp"):
        raise ConfigurationError(f"unknown Yang-Baxter kind {kind!r}")
    ok = True
    if kind in ("apl", "aplp"):
        ok = ok and is_zero(compute_T(a, r))
    if kind in ("aybe", "aplp"):
        ok = ok and is_zero(compute_A(a, r))
    return ok


# ---------------------------------------------------------------------------
# coboundary conditions

_x, _y = variables("x y")
_circ, _dot, _br = op("circ"), op("dot"), op("bracket")
_r, _s, _T, _Ar = Const("r"), Const("s"), Const("T"), Const("Ar")
_T12, _T23, _CYCLE2 = (1, 0, 2), (0, 2, 1), (2, 0, 1)

# s (x) b_j with a_j exposed: slots (s1, s2, a, b)
_s_r = Outer(_s, _r)
# a_j (x) s with b_j exposed: slots (a, b, s1, s2)
_r_s = Outer(_r, _s)


def _on(opn, x, t, slot):
    """``L(x)`` on factor ``slot`` of ``t``."""
    return opn(x, t, right_slot=slot)


def _feed(name, t, left_slot, right_slot, host="right"):
    return Merge(name, t, left_slot, right_slot, host)


def _p(e, perm):
    return Permute(e, tuple(perm))


# (L(x) (x) id (x) id - (tau (x) id)(L(x) (x) id (x) id) - id (x) id (x) ad(x)) T(r)
#  + sum_j (id (x) L(a_j) (x) ad(x) - ad(a_j) (x) id (x) ad(x)) (s (x) b_j)
#  + (id - tau (x) id) sum_j (L(x o a_j) (x) id (x) id - L(x)R(a_j) (x) id (x) id) (s (x) b_j)
_cc1_T = _on(_circ, _x, _T, 0) - _p(_on(_circ, _x, _T, 0), _T12) - _on(_br, _x, _T, 2)
_cc1_ad = _on(_br, _x, _feed("circ", _s_r, 2, 1), 2) - _on(_br, _x, _feed("bracket", _s_r, 2, 0), 2)
_cc1_inner = _feed("circ", _on(_circ, _x, _s_r, 2), 2, 0) - _on(_circ, _x, _feed("circ", _s_r, 0, 2, "left"), 0)
COB_APL_COALG_1 = Identity(
    "coboundary.apl_coalg_first",
    _cc1_T + _cc1_ad + _cc1_inner - _p(_cc1_inner, _T12),
    ("x",),
    "coboundary form of the first anti-pre-Lie coalgebra axiom",
)

# (id + xi + xi^2)( -(id (x) id (x) L(x)) T(r)
#   + sum_j (id (x) id (x) L([x, b_j]))(id - tau (x) id)(a_j (x) s)
#   + sum_j (id (x) ad(b_j) (x) L(x))(a_j (x) s)
#   - sum_j (id (x) R(a_j) (x) L(x))(b_j (x) s) + sum_j (id (x) L(a_j) (x) L(x))(s (x) b_j)
#   + sum_j (L(a_j) (x) id (x) L(x))(tau (x) id)(b_j (x) s) + sum_j (ad(b_j) (x) id (x) L(x))(s (x) a_j) )
# This is the cyclic sum of (id - tau (x) id)(id (x) delta)delta, the second
# axiom in its (id (x) delta)delta form.
_cc2_xb = _feed("circ", _on(_br, _x, _r_s, 1), 1, 3)
_cc2_body = (
    -_on(_circ, _x, _T, 2)
    + _cc2_xb
    - _p(_cc2_xb, _T12)
    + _on(_circ, _x, _feed("bracket", _r_s, 1, 2), 2)
    - _on(_circ, _x, _feed("circ", _r_s, 2, 0, "left"), 2)
    + _on(_circ, _x, _feed("circ", _s_r, 2, 1), 2)
    + _on(_circ, _x, _p(_feed("circ", _r_s, 0, 2), _T12), 2)
    + _on(_circ, _x, _feed("bracket", _s_r, 3, 0), 2)
)
COB_APL_COALG_2 = Identity(
    "coboundary.apl_coalg_second",
    _cc2_body + _p(_cc2_body, CYCLE) + _p(_cc2_body, _CYCLE2),
    ("x",),
    "coboundary form of the second anti-pre-Lie coalgebra axiom",
)

# (id (x) L(x o y) - id (x) L(x)L(y) + L(x)L(y) (x) id - L(x o y) (x) id + L(y) (x) L(x) - L(x) (x) L(y)) s
_xy = _circ(_x, _y)
COB_APL_BIALG_1 = Identity(
    "coboundary.apl_bialg_first",
    _on(_circ, _xy, _s, 1)
    - _on(_circ, _x, _on(_circ, _y, _s, 1), 1)
    + _on(_circ, _x, _on(_circ, _y, _s, 0), 0)
    - _on(_circ, _xy, _s, 0)
    + _on(_circ, _y, _on(_circ, _x, _s, 1), 0)
    - _on(_circ, _x, _on(_circ, _y, _s, 1), 0),
    ("x", "y"),
    "coboundary form of the first anti-pre-Lie bialgebra compatibility",
)

# (id (x) L.(x) - L.(x) (x) id) s
COB_AYBE_COCOMM = Identity(
    "coboundary.aybe_cocomm",
    _on(_dot, _x, _s, 1) - _on(_dot, _x, _s, 0),
    ("x",),
    "cocommutativity of Delta_r",
)
# (id (x) id (x) L.(x) - L.(x) (x) id (x) id) A(r)
COB_AYBE_COASSOC = Identity(
    "coboundary.aybe_coassoc",
    _on(_dot, _x, _Ar, 2) - _on(_dot, _x, _Ar, 0),
    ("x",),
    "coassociativity of Delta_r",
)

# (2 id (x) id (x) L.(x) - L.(x) (x) id (x) id - id (x) L.(x) (x) id) T(r)
#  + sum_j ( 2(ad(a_j) (x) id (x) L.(x) - id (x) L(a_j) (x) L.(x) - ad(x.a_j) (x) id (x) id + id (x) L(x.a_j) (x) id)
#            + R(a_j) (x) L.(x) (x) id - R(a_j)L.(x) (x) id (x) id ) (s (x) b_j)
_xa = _on(_dot, _x, _s_r, 2)
COB_APLP_COALG_1 = Identity(
    "coboundary.aplp_coalg_first",
    2 * _on(_dot, _x, _T, 2)
    - _on(_dot, _x, _T, 0)
    - _on(_dot, _x, _T, 1)
    + 2 * _on(_dot, _x, _feed("bracket", _s_r, 2, 0), 2)
    - 2 * _on(_dot, _x, _feed("circ", _s_r, 2, 1), 2)
    - 2 * _feed("bracket", _xa, 2, 0)
    + 2 * _feed("circ", _xa, 2, 1)
    + _on(_dot, _x, _feed("circ", _s_r, 0, 2, "left"), 1)
    - _feed("circ", _on(_dot, _x, _s_r, 0), 0, 2, "left"),
    ("x",),
    "coboundary form of the first anti-pre-Lie Poisson coalgebra axiom",
)

# (2 L(x) (x) id (x) id - id (x) ad(x) (x) id) A(r) - (id (x) id (x) L.(x))(id (x) tau) T(r)
#  + sum_j (id (x) ad(x) (x) L.(b_j) + id (x) id (x) L.(x)L(b_j) - id (x) id (x) L.(b_j)L(x)
#           - id (x) ad(b_j) (x) L.(x)) (a_j (x) s)
COB_APLP_COALG_2 = Identity(
    "coboundary.aplp_coalg_second",
    2 * _on(_circ, _x, _Ar, 0)
    - _on(_br, _x, _Ar, 1)
    - _on(_dot, _x, _p(_T, _T23), 2)
    + _feed("dot", _on(_br, _x, _r_s, 2), 1, 3)
    + _on(_dot, _x, _feed("circ", _r_s, 1, 3), 2)
    - _feed("dot", _on(_circ, _x, _r_s, 3), 1, 3)
    - _on(_dot, _x, _feed("bracket", _r_s, 1, 2), 2),
    ("x",),
    "coboundary form of the second anti-pre-Lie Poisson coalgebra axiom",
)

# (ad(y) (x) L.(x) - id (x) L.(x)L(y)) s
COB_APLP_BIALG_3 = Identity(
    "coboundary.aplp_bialg_third",
    _on(_br, _y, _on(_dot, _x, _s, 1), 0) - _on(_dot, _x, _on(_circ, _y, _s, 1), 1),
    ("x", "y"),
    "coboundary form of the third anti-pre-Lie Poisson bialgebra compatibility",
)

# (L.(x) (x) L(y) - L(y) (x) L.(x) + 2 L(x.y) (x) id - 2 id (x) L(x.y)
#  + id (x) L.(x)L(y) - L.(x)L(y) (x) id) s
_x_dot_y = _dot(_x, _y)
COB_APLP_BIALG_4 = Identity(
    "coboundary.aplp_bialg_fourth",
    _on(_dot, _x, _on(_circ, _y, _s, 1), 0)
    - _on(_circ, _y, _on(_dot, _x, _s, 1), 0)
    + 2 * _on(_circ, _x_dot_y, _s, 0)
    - 2 * _on(_circ, _x_dot_y, _s, 1)
    + _on(_dot, _x, _on(_circ, _y, _s, 1), 1)
    - _on(_dot, _x, _on(_circ, _y, _s, 0), 0),
    ("x", "y"),
    "coboundary form of the fourth anti-pre-Lie Poisson bialgebra compatibility",
)


class CoboundaryKind(str, enum.Enum):
    APL = "apl"
    APLP = "aplp"


COBOUNDARY_CONDITIONS = {
    CoboundaryKind.APL: (COB_APL_COALG_1, COB_APL_COALG_2, COB_APL_BIALG_1),
    CoboundaryKind.APLP: (
        COB_APL_COALG_1,
        COB_APL_COALG_2,
        COB_APL_BIALG_1,
        COB_AYBE_COCOMM,
        COB_AYBE_COASSOC,
        COB_APLP_COALG_1,
        COB_APLP_COALG_2,
        COB_APLP_BIALG_3,
        COB_APLP_BIALG_4,
    ),
}

#: The report of the direct coalgebra or bialgebra check on the coboundary
#: coproducts that each condition is equivalent to.
DIRECT_COUNTERPART = {
    "coboundary.apl_coalg_first": "apl_coalg.first",
    "coboundary.apl_coalg_second": "apl_coalg.second_alt",
    "coboundary.apl_bialg_first": "apl_bialg.first",
    "coboundary.aybe_cocomm": "cocomm.cocommutative",
    "coboundary.aybe_coassoc": "cocomm.coassociative",
    "coboundary.aplp_coalg_first": "aplp_coalg.first",
    "coboundary.aplp_coalg_second": "aplp_coalg.second",
    "coboundary.aplp_bialg_third": "aplp_bialg.third",
    "coboundary.aplp_bialg_fourth": "aplp_bialg.fourth",
}


def coboundary_environment(a: AlgebraPresentation, r) -> Environment:
    """Products of ``a`` (with the commutator bracket) plus ``r``, ``s``, ``T`` and ``Ar``."""
    r = _as_two_tensor(a, r)
    base = commutator(a) if a.has("circ") else a
    extra = {"r": r.matrix, "s": r.symmetric_part()}
    if a.has("circ"):
        extra["T"] = compute_T(a, r)
    if a.has("dot"):
        extra["Ar"] = compute_A(a, r)
    return base.environment(**extra)


def check_coboundary_conditions(a: AlgebraPresentation, r, kind) -> list[IdentityReport]:
    """One report per coboundary condition; all hold iff ``(delta_r, Delta_r)`` is a bialgebra of ``kind``.

    The algebra axioms are not checked here; the equivalence assumes them.
    """
    kind = CoboundaryKind(kind)
    a.require("circ")
    if kind is CoboundaryKind.APLP:
        a.require("dot")
    env = coboundary_environment(a, r)
    return [ident.check(env) for ident in COBOUNDARY_CONDITIONS[kind]]


# ---------------------------------------------------------------------------
# T(r) and A(r) as expressions: the second route used to re-evaluate witnesses

_rr = Outer(_r, _r)  # slots (a_i, b_i, a_j, b_j)
T_EXPR = _feed("circ", _rr, 0, 2, "left") + _feed("circ", _rr, 1, 2, "left") - _feed("bracket", _rr, 1, 3)
A_EXPR = _feed("dot", _rr, 0, 2, "left") - _p(_feed("dot", _rr, 0, 3, "left"), (2, 0, 1)) + _feed("dot", _rr, 1, 3)


def yang_baxter_report(a: AlgebraPresentation, r, tensor: str = "T") -> IdentityReport:
    """Whether ``T(r)`` (or ``A(r)``) vanishes; the witness is the first nonzero multi-index.

    The tensor comes from the index formulas; ``reevaluate`` recomputes the
    entry at the witness from the expression form of the three placements.
    """
    if tensor not in ("T", "A"):
        raise ConfigurationError(f"unknown Yang-Baxter tensor {tensor!r}; use 'T' or 'A'")
    r = _as_two_tensor(a, r)
    values = compute_T(a, r) if tensor == "T" else compute_A(a, r)
    base = commutator(a) if tensor == "T" else a
    env = base.environment(r=r.matrix)
    expr = T_EXPR if tensor == "T" else A_EXPR

    def probe(witness):
        return (evaluate_at(expr, env, {})[tuple(witness)],)

    ident = "ybe.apl" if tensor == "T" else "ybe.aybe"
    return report_from_field(ident, values, ("i", "j", "k"), probe, f"{tensor}(r) = 0")


# ---------------------------------------------------------------------------
# O-operator forms of the Yang-Baxter equations

_u, _w = variables("a b", space="D")
_ru, _rw = MapApply("rmap", _u), MapApply("rmap", _w)
_ad_dual, _rcirc_dual, _lcirc_dual, _ldot_dual = op("ad_dual"), op("rcirc_dual"), op("lcirc_dual"), op("ldot_dual")

# r(a) o r(b) + r(ad*(r(a)) b) - r(R*(r(b)) a)
O_FORM_APL = Identity(
    "o_form.apl",
    _circ(_ru, _rw) + MapApply("rmap", _ad_dual(_ru, _w)) - MapApply("rmap", _rcirc_dual(_rw, _u)),
    ("a", "b"),
    "r(a) o r(b) + r(ad*(r(a))b) - r(R*(r(b))a) = 0",
)
# [r(a), r(b)] + r(L*(r(a)) b) - r(L*(r(b)) a)
O_FORM_LIE = Identity(
    "o_form.lie",
    _br(_ru, _rw) + MapApply("rmap", _lcirc_dual(_ru, _w)) - MapApply("rmap", _lcirc_dual(_rw, _u)),
    ("a", "b"),
    "[r(a), r(b)] + r(L*(r(a))b) - r(L*(r(b))a) = 0",
)
# r(a).r(b) = r(mu(r(a)) b + mu(r(b)) a) with mu = -L.*
O_FORM_DOT = Identity(
    "o_form.dot",
    _dot(_ru, _rw) + MapApply("rmap", _ldot_dual(_ru, _w)) + MapApply("rmap", _ldot_dual(_rw, _u)),
    ("a", "b"),
    "r(a).r(b) + r(L.*(r(a))b) + r(L.*(r(b))a) = 0",
)


def _dual_action(maps: Tensor) -> Tensor:
    """Dual maps as a bilinear action ``A x A* -> A*``."""
    return frozen(dual_maps(maps).transpose(0, 2, 1))


def check_o_operator_forms(a: AlgebraPresentation, r) -> list[IdentityReport]:
    """The O-operator forms of ``T(r) = 0`` (and of ``A(r) = 0`` when ``dot`` is present).

    Each form is evaluated on all pairs of dual basis vectors through ``r``
    as a map ``A* -> A``.  Only meaningful for skew ``r``; a non-skew ``r``
    raises :class:`PreconditionError`.
    """
    r = _as_two_tensor(a, r)
    if not r.is_skew:
        raise PreconditionError("the O-operator forms characterize the Yang-Baxter equations only for skew r")
    reports = []
    tensors = {"rmap": r.as_map().matrix}
    if a.has("circ"):
        lie = commutator(a.only("circ"))
        circ, br = lie.product("circ"), lie.product("bracket")
        tensors.update(
            circ=circ,
            bracket=br,
            ad_dual=_dual_action(left_mult(br)),
            rcirc_dual=_dual_action(right_mult(circ)),
            lcirc_dual=_dual_action(left_mult(circ)),
        )
    if a.has("dot"):
        tensors.update(dot=a.product("dot"), ldot_dual=_dual_action(left_mult(a.product("dot"))))
    env = Environment({"A": a.dim, "D": a.dim}, tensors)
    if a.has("circ"):
        reports += [O_FORM_APL.check(env), O_FORM_LIE.check(env)]
    if a.has("dot"):
        reports.append(O_FORM_DOT.check(env))
    if not reports:
        raise ConfigurationError("the O-operator forms need a circ or a dot product")
    return reports
