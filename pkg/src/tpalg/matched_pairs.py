"""Matched pairs of algebras and their double (bowtie) algebras.

A matched pair couples algebras ``A`` and ``B`` with families of maps
``A -> End(B)`` and ``B -> End(A)``.  The compatibility equations of each
system are stored as identities over variables ``x, y`` in ``A`` and
``a, b`` in ``B``.  The equations of the second half of every system are
the first half with the roles of ``A`` and ``B`` exchanged, so they are
generated from one template by :func:`_swap_roles`.

Tensor names in the evaluation environment carry the side as a suffix:
``circ_A`` is the product of ``A``, ``l_A`` the family ``A -> End(B)``
seen as a bilinear map ``A x B -> B``, ``l_B`` the family ``B -> End(A)``.
"""

from __future__ import annotations

from collections.abc import Callable, Mapping
from dataclasses import dataclass, field
from types import MappingProxyType

import numpy as np

from .algebra import AlgebraPresentation, block_restriction, check_class, commutator
from .errors import ArgumentError, ConfigurationError, DimensionError, PreconditionError
from .identities import Environment, Identity, IdentityReport, Var, op
from .representations import (
    BASE_CLASS,
    BASE_PRODUCTS,
    FAMILIES,
    RepKind,
    Representation,
    adjoint,
    check_representation,
    dual_maps,
    dualize,
    left_mult,
)
from .tensor import Tensor, as_tensor, frozen, zeros


@dataclass(frozen=True, eq=False)
class MatchedPairData:
    """Two algebras with cross actions; families as in :data:`representations.FAMILIES`."""

    kind: RepKind
    algebra_a: AlgebraPresentation
    algebra_b: AlgebraPresentation
    maps_a_on_b: Mapping[str, Tensor] = field(default_factory=dict)
    maps_b_on_a: Mapping[str, Tensor] = field(default_factory=dict)

    def __post_init__(self):
        kind = RepKind(self.kind)
        object.__setattr__(self, "kind", kind)
        fams = FAMILIES[kind]
        for label, maps, own, other in (
            ("maps_a_on_b", self.maps_a_on_b, self.algebra_a, self.algebra_b),
            ("maps_b_on_a", self.maps_b_on_a, self.algebra_b, self.algebra_a),
        ):
            if set(maps) != set(fams):
                raise ConfigurationError(f"{kind.value} matched pair needs {label} families {fams}, got {tuple(maps)}")
            fixed = {}
            for f in fams:
                m = as_tensor(maps[f])
                if m.shape != (own.dim, other.dim, other.dim):
                    raise DimensionError(f"{label}[{f!r}] has shape {m.shape}, expected {(own.dim, other.dim, other.dim)}")
                fixed[f] = m
            object.__setattr__(self, label, MappingProxyType(fixed))

    def rep_a(self) -> Representation:
        """``A`` acting on ``B``."""
        return Representation(self.kind, self.algebra_a.only(*BASE_PRODUCTS[self.kind]), self.algebra_b.dim, self.maps_a_on_b)

    def rep_b(self) -> Representation:
        """``B`` acting on ``A``."""
        return Representation(self.kind, self.algebra_b.only(*BASE_PRODUCTS[self.kind]), self.algebra_a.dim, self.maps_b_on_a)

    def environment(self) -> Environment:
        tensors = {}
        for side, alg in (("A", self.algebra_a), ("B", self.algebra_b)):
            if alg.has("circ") and not alg.has("bracket"):
                alg = commutator(alg)
            for name, t in alg.products.items():
                tensors[f"{name}_{side}"] = t
        for f, m in self.maps_a_on_b.items():
            tensors[f"{f}_A"] = frozen(m.transpose(0, 2, 1))
        for f, m in self.maps_b_on_a.items():
            tensors[f"{f}_B"] = frozen(m.transpose(0, 2, 1))
        return Environment({"A": self.algebra_a.dim, "B": self.algebra_b.dim}, tensors)


# ---------------------------------------------------------------------------
# equation templates
#
# A template is a function of (own, other, u, w, s) where ``own`` and
# ``other`` are side suffixes, ``u, w`` range over the own algebra and ``s``
# over the other one.  Instantiating with ("A", "B", x, y, a) gives the
# first half of a system; ("B", "A", a, b, x) gives the mirrored half.


def _ops(side: str, *names: str) -> list[Callable]:
    return [op(f"{n}_{side}") for n in names]


def _lie_template(own, other, u, w, s):
    # rho_other(s)[u,w] - [rho_other(s)u, w] - [u, rho_other(s)w] + rho_other(rho_own(u)s)w - rho_other(rho_own(w)s)u
    (br,) = _ops(own, "bracket")
    (rho_own,) = _ops(own, "rho")
    (rho_other,) = _ops(other, "rho")
    return (
        rho_other(s, br(u, w))
        - br(rho_other(s, u), w)
        - br(u, rho_other(s, w))
        + rho_other(rho_own(u, s), w)
        - rho_other(rho_own(w, s), u)
    )


def _ca_template(own, other, u, w, s):
    # mu_other(s)(u.w) - (mu_other(s)u).w - mu_other(mu_own(u)s)w
    (dt,) = _ops(own, "dot")
    (mu_own,) = _ops(own, "mu")
    (mu_other,) = _ops(other, "mu")
    return mu_other(s, dt(u, w)) - dt(mu_other(s, u), w) - mu_other(mu_own(u, s), w)


def _apl_templates(own, other, u, w, s):
    """The three anti-pre-Lie equations with ``u, w`` in the own algebra.

    With own = A they read, for x, y in A and a in B,

    r_B(l_A(y)a)x + x o r_B(a)y - r_B(l_A(x)a)y - y o r_B(a)x = r_B(a)[y,x]
    x o l_B(a)y + r_B(r_A(y)a)x - l_B(a)(x o y) = ((l_B - r_B)(a)x) o y + l_B((r_A - l_A)(x)a)y
    r_B(a)[x,y] = ((l_B - r_B)(a)y) o x + ((r_B - l_B)(a)x) o y
                  + l_B((r_A - l_A)(y)a)x + l_B((l_A - r_A)(x)a)y
    """
    ci, br = _ops(own, "circ", "bracket")
    l_own, r_own = _ops(own, "l", "r")
    l_oth, r_oth = _ops(other, "l", "r")

    def diff_other(t, e):
        return l_oth(t, e) - r_oth(t, e)

    def diff_own(e, t):
        return l_own(e, t) - r_own(e, t)

    first = (
        r_oth(l_own(w, s), u)
        + ci(u, r_oth(s, w))
        - r_oth(l_own(u, s), w)
        - ci(w, r_oth(s, u))
        - r_oth(s, br(w, u))
    )
    second = (
        ci(u, l_oth(s, w))
        + r_oth(r_own(w, s), u)
        - l_oth(s, ci(u, w))
        - ci(diff_other(s, u), w)
        + l_oth(diff_own(u, s), w)
    )
    third = (
        r_oth(s, br(u, w))
        - ci(diff_other(s, w), u)
        + ci(diff_other(s, u), w)
        + l_oth(diff_own(w, s), u)
        - l_oth(diff_own(u, s), w)
    )
    return first, second, third


def _tpa_templates(own, other, u, w, s):
    """The two transposed Poisson equations with ``u, w`` in the own algebra.

    With own = A:
    2 mu_B(rho_A(y)a)x - 2 x.rho_B(a)y = -rho_B(a)(x.y) - rho_B(mu_A(x)a)y + [y, mu_B(a)x]
    2 mu_B(a)[x,y] = [mu_B(a)x, y] + rho_B(mu_A(x)a)y + [x, mu_B(a)y] - rho_B(mu_A(y)a)x
    """
    dt, br = _ops(own, "dot", "bracket")
    mu_own, rho_own = _ops(own, "mu", "rho")
    mu_oth, rho_oth = _ops(other, "mu", "rho")
    first = (
        2 * mu_oth(rho_own(w, s), u)
        - 2 * dt(u, rho_oth(s, w))
        + rho_oth(s, dt(u, w))
        + rho_oth(mu_own(u, s), w)
        - br(w, mu_oth(s, u))
    )
    second = (
        2 * mu_oth(s, br(u, w))
        - br(mu_oth(s, u), w)
        - rho_oth(mu_own(u, s), w)
        - br(u, mu_oth(s, w))
        + rho_oth(mu_own(w, s), u)
    )
    return first, second


def _aplp_templates(own, other, u, w, s):
    """The five anti-pre-Lie Poisson equations with ``u, w`` in the own algebra.

    With own = A (x = u, y = w, a = s):
    2 mu_B(a)(x o y) - 2 mu_B(a)(y o x) = mu_B(l_A(x)a)y + y.r_B(a)x - mu_B(l_A(y)a)x - x.r_B(a)y
    2 mu_B((l_A - r_A)(x)a)y - 2((l_B - r_B)(a)x).y = mu_B(a)(x o y) - x.l_B(a)y - mu_B(r_A(y)a)x
    2 r_B(mu_A(y)a)x + 2 x o mu_B(a)y = (mu_B(a)x) o y + l_B(mu_A(x)a)y + mu_B(a)(x o y)
    2 r_B(mu_A(y)a)x + 2 x o mu_B(a)y = r_B(a)(x.y) + mu_B(l_A(x)a)y + y.r_B(a)x
    2 l_B(a)(x.y) = l_B(mu_A(y)a)x + (mu_B(a)y) o x + y.l_B(a)x + mu_B(r_A(x)a)y
    """
    dt, ci = _ops(own, "dot", "circ")
    mu_own, l_own, r_own = _ops(own, "mu", "l", "r")
    mu_oth, l_oth, r_oth = _ops(other, "mu", "l", "r")
    e1 = (
        2 * mu_oth(s, ci(u, w))
        - 2 * mu_oth(s, ci(w, u))
        - mu_oth(l_own(u, s), w)
        - dt(w, r_oth(s, u))
        + mu_oth(l_own(w, s), u)
        + dt(u, r_oth(s, w))
    )
    e2 = (
        2 * mu_oth(l_own(u, s) - r_own(u, s), w)
        - 2 * dt(l_oth(s, u) - r_oth(s, u), w)
        - mu_oth(s, ci(u, w))
        + dt(u, l_oth(s, w))
        + mu_oth(r_own(w, s), u)
    )
    e3 = (
        2 * r_oth(mu_own(w, s), u)
        + 2 * ci(u, mu_oth(s, w))
        - ci(mu_oth(s, u), w)
        - l_oth(mu_own(u, s), w)
        - mu_oth(s, ci(u, w))
    )
    e4 = (
        2 * r_oth(mu_own(w, s), u)
        + 2 * ci(u, mu_oth(s, w))
        - r_oth(s, dt(u, w))
        - mu_oth(l_own(u, s), w)
        - dt(w, r_oth(s, u))
    )
    e5 = (
        2 * l_oth(s, dt(u, w))
        - l_oth(mu_own(w, s), u)
        - ci(mu_oth(s, w), u)
        - dt(w, l_oth(s, u))
        - mu_oth(r_own(u, s), w)
    )
    return e1, e2, e3, e4, e5


x, y = Var("x", "A"), Var("y", "A")
a, b = Var("a", "B"), Var("b", "B")


def _both_sides(prefix: str, template, names: tuple[str, ...]) -> tuple[Identity, ...]:
    """Instantiate a template for both roles; A-side equations first."""
    out = []
    for side, args, order in (("A", ("A", "B", x, y, a), ("x", "y", "a")), ("B", ("B", "A", a, b, x), ("a", "b", "x"))):
        exprs = template(*args)
        if not isinstance(exprs, tuple):
            exprs = (exprs,)
        for name, e in zip(names, exprs):
            out.append(Identity(f"{prefix}.{name}_{side}", e, order))
    return tuple(out)


LIE_MP = _both_sides("lie_mp", _lie_template, ("action",))
CA_MP = _both_sides("ca_mp", _ca_template, ("action",))
APL_MP = _both_sides("apl_mp", _apl_templates, ("first", "second", "third"))
TPA_MP = CA_MP + LIE_MP + _both_sides("tpa_mp", _tpa_templates, ("first", "second"))
APLP_MP = CA_MP + APL_MP + _both_sides("aplp_mp", _aplp_templates, ("first", "second", "third", "fourth", "fifth"))

MP_IDENTITIES = {
    RepKind.LIE: LIE_MP,
    RepKind.COMM_ASSOC: CA_MP,
    RepKind.APL: APL_MP,
    RepKind.TPA: TPA_MP,
    RepKind.APLP: APLP_MP,
}


def _sub_algebra(mp: MatchedPairData, alg: AlgebraPresentation) -> AlgebraPresentation:
    return alg.only(*BASE_PRODUCTS[mp.kind])


def precondition_reports(mp: MatchedPairData) -> list[IdentityReport]:
    """Class checks of both algebras and representation checks of both actions."""
    reports = []
    for alg in (mp.algebra_a, mp.algebra_b):
        reports += check_class(_sub_algebra(mp, alg), BASE_CLASS[mp.kind])
    for rep in (mp.rep_a(), mp.rep_b()):
        reports += check_representation(rep, check_base=False)
    return reports


def check_matched_pair(mp: MatchedPairData, preconditions: str = "enforce") -> list[IdentityReport]:
    """One report per compatibility equation over all mixed basis tuples.

    ``preconditions`` selects how the class and representation hypotheses are
    treated: ``"enforce"`` raises :class:`PreconditionError` when they fail,
    ``"report"`` prepends their reports to the result and ``"skip"`` checks
    the compatibility equations alone.
    """
    if preconditions not in ("enforce", "report", "skip"):
        raise ArgumentError(f"unknown precondition mode {preconditions!r}")
    pre = [] if preconditions == "skip" else precondition_reports(mp)
    if preconditions == "enforce":
        bad = [r for r in pre if not r.holds]
        if bad:
            raise PreconditionError("matched pair hypotheses fail", bad)
        pre = []
    env = mp.environment()
    return pre + [ident.check(env) for ident in MP_IDENTITIES[mp.kind]]


def _bowtie(n: int, m: int, own_a: Tensor, own_b: Tensor, a_b: tuple, b_a: tuple) -> Tensor:
    """Product on ``A + B`` from the two algebras and the mixed products.

    ``a_b = (to_a, to_b)`` gives the ``A`` and ``B`` components of ``x * b``
    indexed ``[i, j, k]`` for ``x = e_i`` and ``b = f_j``; ``b_a`` likewise
    for ``a * y`` indexed ``[j, i, k]`` with ``a = f_j`` and ``y = e_i``.
    """
    big = np.array(zeros((n + m,) * 3))
    big[:n, :n, :n] = own_a
    big[n:, n:, n:] = own_b
    big[:n, n:, :n], big[:n, n:, n:] = a_b
    big[n:, :n, :n], big[n:, :n, n:] = b_a
    return frozen(big)


def build_double(mp: MatchedPairData, unchecked: bool = False) -> AlgebraPresentation:
    """The algebra on ``A + B`` assembled from the bowtie formulas.

    With ``unchecked=True`` the products are assembled even when the matched
    pair equations fail, which helps to locate the failing block.
    """
    if not unchecked:
        bad = [r for r in check_matched_pair(mp) if not r.holds]
        if bad:
            raise PreconditionError("not a matched pair", bad)
    n, m = mp.algebra_a.dim, mp.algebra_b.dim
    env = mp.environment().tensors
    A, B = mp.algebra_a, mp.algebra_b
    products = {}

    def t(name):  # B x A -> A action re-indexed as [i (in A), j (in B), k]
        return env[name].transpose(1, 0, 2)

    if mp.kind in (RepKind.COMM_ASSOC, RepKind.TPA, RepKind.APLP):
        # x.b = mu_B(b)x + mu_A(x)b and a.y = mu_B(a)y + mu_A(y)a
        products["dot"] = _bowtie(n, m, A["dot"], B["dot"], (t("mu_B"), env["mu_A"]),
                                  (env["mu_B"], env["mu_A"].transpose(1, 0, 2)))
    if mp.kind in (RepKind.LIE, RepKind.TPA):
        # [x,b] = -rho_B(b)x + rho_A(x)b and [a,y] = rho_B(a)y - rho_A(y)a
        products["bracket"] = _bowtie(n, m, A["bracket"], B["bracket"], (-t("rho_B"), env["rho_A"]),
                                      (env["rho_B"], -env["rho_A"].transpose(1, 0, 2)))
    if mp.kind in (RepKind.APL, RepKind.APLP):
        # x o b = r_B(b)x + l_A(x)b and a o y = l_B(a)y + r_A(y)a
        products["circ"] = _bowtie(n, m, A["circ"], B["circ"], (t("r_B"), env["l_A"]),
                                   (env["l_B"], env["r_A"].transpose(1, 0, 2)))
    labels = tuple(f"a.{s}" for s in A.basis_labels) + tuple(f"b.{s}" for s in B.basis_labels)
    return AlgebraPresentation(n + m, products, labels)


def restrict_to_factors(double: AlgebraPresentation, dim_a: int) -> tuple[AlgebraPresentation, AlgebraPresentation]:
    """The products of the double restricted to each summand."""
    n = double.dim
    return block_restriction(double, range(dim_a)), block_restriction(double, range(dim_a, n))


def lie_pair_from_apl(mp: MatchedPairData) -> MatchedPairData:
    """``(g(A), g(B), l_A - r_A, l_B - r_B)`` from an anti-pre-Lie matched pair."""
    if mp.kind is not RepKind.APL:
        raise ArgumentError("expected an APL matched pair")
    return MatchedPairData(
        RepKind.LIE,
        commutator(mp.algebra_a).only("bracket"),
        commutator(mp.algebra_b).only("bracket"),
        {"rho": frozen(mp.maps_a_on_b["l"] - mp.maps_a_on_b["r"])},
        {"rho": frozen(mp.maps_b_on_a["l"] - mp.maps_b_on_a["r"])},
    )


def tpa_pair_from_aplp(mp: MatchedPairData) -> MatchedPairData:
    """``(mu_A, l_A - r_A, mu_B, l_B - r_B)`` from an anti-pre-Lie Poisson matched pair."""
    if mp.kind is not RepKind.APLP:
        raise ArgumentError("expected an APLP matched pair")
    return MatchedPairData(
        RepKind.TPA,
        commutator(mp.algebra_a).only("dot", "bracket"),
        commutator(mp.algebra_b).only("dot", "bracket"),
        {"mu": mp.maps_a_on_b["mu"], "rho": frozen(mp.maps_a_on_b["l"] - mp.maps_a_on_b["r"])},
        {"mu": mp.maps_b_on_a["mu"], "rho": frozen(mp.maps_b_on_a["l"] - mp.maps_b_on_a["r"])},
    )


def standard_pair_from_dual(a: AlgebraPresentation, a_star: AlgebraPresentation, kind) -> MatchedPairData:
    """The matched pair of ``A`` and ``A*`` built from coadjoint actions.

    ``a`` and ``a_star`` carry ``circ`` (plus ``dot`` for the Poisson kinds)
    and ``a_star`` is written in the dual basis.  Maps on both sides:

    APL  ``(-ad*, R*)``; LIE ``-L*`` of the anti-pre-Lie product on the
    commutator algebras; TPA ``(-L.*, -L*)`` on the sub-adjacent transposed
    Poisson algebras; APLP ``(-L.*, -ad*, R*)``.
    """
    kind = RepKind(kind)
    if a.dim != a_star.dim:
        raise ArgumentError(f"dimensions differ: {a.dim} and {a_star.dim}")
    if kind is RepKind.APL:
        ra, rb = dualize(adjoint(a, kind)), dualize(adjoint(a_star, kind))
        return MatchedPairData(kind, a.only("circ"), a_star.only("circ"), ra.maps, rb.maps)
    if kind is RepKind.APLP:
        ra, rb = dualize(adjoint(a, kind)), dualize(adjoint(a_star, kind))
        return MatchedPairData(kind, a.only("dot", "circ"), a_star.only("dot", "circ"), ra.maps, rb.maps)
    if kind is RepKind.LIE:
        return MatchedPairData(
            kind,
            commutator(a).only("bracket"),
            commutator(a_star).only("bracket"),
            {"rho": frozen(-dual_maps(left_mult(a["circ"])))},
            {"rho": frozen(-dual_maps(left_mult(a_star["circ"])))},
        )
    if kind is RepKind.TPA:
        maps = []
        for alg in (a, a_star):
            maps.append({"mu": frozen(-dual_maps(left_mult(alg["dot"]))), "rho": frozen(-dual_maps(left_mult(alg["circ"])))})
        return MatchedPairData(
            kind, commutator(a).only("dot", "bracket"), commutator(a_star).only("dot", "bracket"), maps[0], maps[1]
        )
    raise ArgumentError(f"no standard dual pair for kind {kind.value}")
