"""O-operators, induced pre-structures, canonical Yang-Baxter solutions and derivation factories.

An O-operator problem is a representation ``(V, maps)`` of a base algebra
``A`` together with a linear map ``T: V -> A``.  ``T`` is stored like every
:class:`LinearMap`: column ``i`` is ``T(v_i)``.

Index bookkeeping for the canonical solution: the ambient algebra is the
semi-direct product on ``A + V*`` with the base block first, so ``e_k`` is
index ``k`` and ``v_i*`` is index ``n + i``.  ``T`` viewed as a two-tensor
``sum_i T(v_i) (x) v_i*`` has ``R[k, n + i] = T[k, i]`` and the solution is
``r = R - R^T``.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .algebra import (
    AlgebraClass,
    AlgebraPresentation,
    as_linear_map,
    check_class,
    check_derivation,
    pre_apl_sum,
    zinbiel_symmetrization,
)
from .errors import ArgumentError, PreconditionError
from .identities import Environment, Identity, IdentityReport, MapApply, Var, op
from .representations import (
    RepKind,
    Representation,
    check_representation,
    dualize,
    left_mult,
    right_mult,
    semidirect_product,
)
from .tensor import LinearMap, frozen, zeros
from .yang_baxter import TwoTensor, compute_A, yang_baxter_report


@dataclass(frozen=True, eq=False)
class OOperatorProblem:
    """A representation of ``base`` and a map ``T`` from the representation space to ``base``."""

    rep: Representation
    T: LinearMap

    def __post_init__(self):
        T = as_linear_map(self.T)
        expected = (self.rep.base.dim, self.rep.space_dim)
        if T.matrix.shape != expected:
            raise ArgumentError(f"T has shape {T.matrix.shape}, expected {expected} (base dim x space dim)")
        object.__setattr__(self, "T", T)

    @property
    def base(self) -> AlgebraPresentation:
        return self.rep.base

    @property
    def kind(self) -> RepKind:
        return self.rep.kind


_u, _v = Var("u", "V"), Var("v", "V")
_dot, _br, _circ = op("dot"), op("bracket"), op("circ")
_mu, _rho, _l, _r = op("mu"), op("rho"), op("l"), op("r")


def _T(e):
    return MapApply("T", e)


O_LIE = Identity(
    "o_operator.lie",
    _br(_T(_u), _T(_v)) - _T(_rho(_T(_u), _v)) + _T(_rho(_T(_v), _u)),
    ("u", "v"),
    "[Tu, Tv] = T(rho(Tu)v - rho(Tv)u)",
)
O_COMM_ASSOC = Identity(
    "o_operator.comm_assoc",
    _dot(_T(_u), _T(_v)) - _T(_mu(_T(_u), _v)) - _T(_mu(_T(_v), _u)),
    ("u", "v"),
    "Tu . Tv = T(mu(Tu)v + mu(Tv)u)",
)
O_APL = Identity(
    "o_operator.apl",
    _circ(_T(_u), _T(_v)) - _T(_l(_T(_u), _v)) - _T(_r(_T(_v), _u)),
    ("u", "v"),
    "Tu o Tv = T(l(Tu)v + r(Tv)u)",
)

O_OPERATOR_IDENTITIES = {
    RepKind.LIE: (O_LIE,),
    RepKind.COMM_ASSOC: (O_COMM_ASSOC,),
    RepKind.APL: (O_APL,),
    RepKind.TPA: (O_COMM_ASSOC, O_LIE),
    RepKind.APLP: (O_COMM_ASSOC, O_APL),
}


def o_operator_reports(p: OOperatorProblem) -> list[IdentityReport]:
    """One report per defining equation; the representation must pass its own check."""
    bad = [r for r in check_representation(p.rep) if not r.holds]
    if bad:
        raise PreconditionError(f"not a {p.kind.value} representation", bad)
    env = p.rep.environment()
    env = Environment(env.spaces, {**env.tensors, "T": p.T.matrix})
    return [ident.check(env) for ident in O_OPERATOR_IDENTITIES[p.kind]]


def check_o_operator(p: OOperatorProblem) -> IdentityReport:
    """The first failing defining equation, or a passing report when all hold."""
    reports = o_operator_reports(p)
    for report in reports:
        if not report.holds:
            return report
    return IdentityReport(f"o_operator.{p.kind.value.lower()}", True, variables=("u", "v"))


def _require_o_operator(p: OOperatorProblem) -> None:
    report = check_o_operator(p)
    if not report.holds:
        raise PreconditionError("T is not an O-operator", [report])


def induce_pre_structure(p: OOperatorProblem) -> AlgebraPresentation:
    """``u > v = l(Tu)v``, ``u < v = r(Tv)u`` and, for APLP, ``u * v = mu(Tu)v`` on the space.

    The result passes PRE_APL (resp. PRE_APLP) whenever ``T`` is an O-operator.
    """
    if p.kind not in (RepKind.APL, RepKind.APLP):
        raise ArgumentError("induced pre-structures come from APL or APLP representations")
    _require_o_operator(p)
    T = p.T.matrix
    act_l, act_r = p.rep.action("l"), p.rep.action("r")
    products = {
        "succ": frozen(np.einsum("iu,ivk->uvk", T, act_l)),
        "prec": frozen(np.einsum("iv,iuk->uvk", T, act_r)),
    }
    if p.kind is RepKind.APLP:
        products["star"] = frozen(np.einsum("iu,ivk->uvk", T, p.rep.action("mu")))
    return AlgebraPresentation(p.rep.space_dim, products)


# ---------------------------------------------------------------------------
# canonical solutions


def _embed_T(T, n: int, m: int) -> TwoTensor:
    big = np.array(zeros((n + m, n + m)))
    big[:n, n:] = T
    return TwoTensor(frozen(big - big.T))


def canonical_r_from_T(p: OOperatorProblem, unchecked: bool = False) -> tuple[AlgebraPresentation, TwoTensor]:
    """``r = T - tau(T)`` in the semi-direct product of the base with the dual representation.

    With ``unchecked`` the O-operator test is skipped so that a failing ``T``
    can be embedded and its nonzero ``T(r)`` observed.
    """
    if p.kind not in (RepKind.APL, RepKind.APLP):
        raise ArgumentError("canonical solutions are built from APL or APLP representations")
    if not unchecked:
        _require_o_operator(p)
    ambient = semidirect_product(dualize(p.rep), unchecked=unchecked)
    labels = p.base.basis_labels + tuple(f"v{j}*" for j in range(p.rep.space_dim))
    ambient = AlgebraPresentation(ambient.dim, ambient.products, labels)
    return ambient, _embed_T(p.T.matrix, p.base.dim, p.rep.space_dim)


def _require_class(a: AlgebraPresentation, class_id) -> None:
    bad = [r for r in check_class(a, class_id) if not r.holds]
    if bad:
        raise PreconditionError(f"the source is not {AlgebraClass(class_id).value}", bad)


def _relabel_dual(ambient: AlgebraPresentation, base: AlgebraPresentation) -> AlgebraPresentation:
    labels = base.basis_labels + tuple(f"{b}*" for b in base.basis_labels)
    return AlgebraPresentation(ambient.dim, ambient.products, labels)


def splitting_representation(pre: AlgebraPresentation) -> OOperatorProblem:
    """The identity map against ``(L>, R<)`` on the sum algebra, or ``(L*, L>, R<)`` with a star product."""
    n = pre.dim
    succ, prec = pre.product("succ"), pre.product("prec")
    if pre.has("star"):
        base = pre_apl_sum(zinbiel_symmetrization(pre.only("star", "succ", "prec"))).only("dot", "circ")
        maps = {"mu": left_mult(pre["star"]), "l": left_mult(succ), "r": right_mult(prec)}
        rep = Representation(RepKind.APLP, base, n, maps)
    else:
        base = pre_apl_sum(pre.only("succ", "prec")).only("circ")
        rep = Representation(RepKind.APL, base, n, {"l": left_mult(succ), "r": right_mult(prec)})
    return OOperatorProblem(rep, LinearMap.identity(n))


def canonical_r_from_pre_apl(pre: AlgebraPresentation) -> tuple[AlgebraPresentation, TwoTensor]:
    """``r = sum_i (e_i (x) e_i* - e_i* (x) e_i)`` in ``A + A*`` with the dual of ``(L>, R<)``."""
    _require_class(pre.only("succ", "prec"), AlgebraClass.PRE_APL)
    ambient, r = canonical_r_from_T(splitting_representation(pre.only("succ", "prec")))
    return _relabel_dual(ambient, pre), r


def canonical_r_from_pre_aplp(pre: AlgebraPresentation) -> tuple[AlgebraPresentation, TwoTensor]:
    """The same ``r`` in ``A + A*`` with the dual of ``(L*, L>, R<)``."""
    _require_class(pre.only("star", "succ", "prec"), AlgebraClass.PRE_APLP)
    ambient, r = canonical_r_from_T(splitting_representation(pre.only("star", "succ", "prec")))
    return _relabel_dual(ambient, pre), r


def canonical_r(source) -> tuple[AlgebraPresentation, TwoTensor]:
    """Dispatch on the source: an O-operator problem, a pre-APLP or a pre-APL algebra."""
    if isinstance(source, OOperatorProblem):
        return canonical_r_from_T(source)
    if isinstance(source, AlgebraPresentation):
        if source.has("star", "succ", "prec"):
            return canonical_r_from_pre_aplp(source)
        if source.has("succ", "prec"):
            return canonical_r_from_pre_apl(source)
    raise ArgumentError("canonical_r needs an OOperatorProblem or an algebra with succ/prec products")


# ---------------------------------------------------------------------------
# derivation factories


def _require_derivation(a: AlgebraPresentation, name: str, P) -> np.ndarray:
    P = as_linear_map(P)
    report = check_derivation(a, name, P)
    if not report.holds:
        raise PreconditionError(f"P is not a derivation of {name!r}", [report])
    return P.matrix


def _P_left(P, prod):
    """``P(e_i) * e_j``."""
    return np.einsum("pi,pjk->ijk", P, prod)


def _P_right(P, prod):
    """``e_i * P(e_j)``."""
    return np.einsum("pj,ipk->ijk", P, prod)


def _P_after(P, prod):
    """``P(e_i * e_j)``."""
    return np.einsum("kl,ijl->ijk", P, prod)


def witt_lie(a: AlgebraPresentation, P) -> AlgebraPresentation:
    """``[x, y] = P(x).y - x.P(y)``, added next to ``dot``."""
    P = _require_derivation(a, "dot", P)
    dot = a["dot"]
    return a.only("dot").with_products(bracket=frozen(_P_left(P, dot) - _P_right(P, dot)))


def apl_from_derivation(a: AlgebraPresentation, P) -> AlgebraPresentation:
    """``x o y = P(x.y) + P(x).y``, added next to ``dot``."""
    P = _require_derivation(a, "dot", P)
    dot = a["dot"]
    return a.only("dot").with_products(circ=frozen(_P_after(P, dot) + _P_left(P, dot)))


def _zinbiel_splitting(z: AlgebraPresentation, P) -> dict:
    P = _require_derivation(z, "star", P)
    star = z["star"]
    succ = _P_after(P, star) + _P_left(P, star)
    # x < y = P(y * x) + y * P(x)
    prec = _P_after(P, star).transpose(1, 0, 2) + _P_right(P, star).transpose(1, 0, 2)
    return {"succ": frozen(succ), "prec": frozen(prec)}


def pre_apl_from_zinbiel(z: AlgebraPresentation, P) -> AlgebraPresentation:
    """``x > y = P(x*y) + P(x)*y`` and ``x < y = P(y*x) + y*P(x)``."""
    return AlgebraPresentation(z.dim, _zinbiel_splitting(z, P), z.basis_labels)


def pre_aplp_from_zinbiel(z: AlgebraPresentation, P) -> AlgebraPresentation:
    """The Zinbiel product together with the splitting of :func:`pre_apl_from_zinbiel`."""
    return z.only("star").with_products(**_zinbiel_splitting(z, P))


def aybe_derivation_solution_check(a: AlgebraPresentation, P, r) -> IdentityReport:
    """``T(r) = 0`` in the derived APL algebra for an AYBE solution killed by ``id (x) P + P (x) id``.

    The implication is a theorem, so a failing report means a defect in the
    kernel rather than in the input.
    """
    P = _require_derivation(a, "dot", P)
    r = r if isinstance(r, TwoTensor) else TwoTensor(r)
    if r.dim != a.dim:
        raise ArgumentError(f"r has dimension {r.dim}, the algebra {a.dim}")
    a_field = compute_A(a, r)
    if np.any(a_field != 0):
        raise PreconditionError("r does not solve the associative Yang-Baxter equation", [yang_baxter_report(a, r, "A")])
    killed = P.dot(r.matrix) + r.matrix.dot(P.T)
    if np.any(killed != 0):
        raise PreconditionError("(id (x) P + P (x) id) r is not zero")
    return yang_baxter_report(apl_from_derivation(a, P), r, "T").named("aybe_derivation.apl_solution")
