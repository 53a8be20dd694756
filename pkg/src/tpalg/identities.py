"""Multilinear identities as expression trees, evaluated exactly on basis tuples.

An identity is a linear combination of terms built from variables, bilinear
operations, linear maps, coproducts and constant tensors.  Each value carries
*slots*: tensor factors of the output.  A product output has one slot, a
coproduct output two, the Yang-Baxter tensors three.

``Merge`` applies an operation to two slots of one value and ``Outer``
forms tensor products; together with constants they express sums such as
``sum_j L(a_j) (x) b_j`` for a two-tensor ``r = sum_j a_j (x) b_j``.

Two evaluation routes exist:

* ``evaluate_field`` contracts the structure tensors once for every basis
  tuple at the same time and returns an array indexed by
  ``(*variables, *slots)``;
* ``evaluate_at`` substitutes concrete basis vectors and evaluates the tree
  on vectors.  Reports use it to re-check witnesses independently.

Operation tensors follow the kernel convention ``op[i, j, k]`` = coefficient
of the ``k``-th basis vector of the output space in ``op(e_i, e_j)``.
Linear maps are matrices with images in columns, coproducts are
``delta[k, i, j]`` = coefficient of ``e_i (x) e_j`` in ``delta(e_k)``.
"""

from __future__ import annotations

import string
from collections.abc import Callable, Mapping, Sequence
from dataclasses import dataclass, field

import numpy as np

from .errors import ConfigurationError, DimensionError
from .tensor import ONE, Scalar, basis_vector, identity, scalar

_LETTERS = string.ascii_letters


# ---------------------------------------------------------------------------
# expression nodes


class Expr:
    """Base class of expression nodes; supports ``+``, ``-`` and scalar ``*``."""

    def terms(self) -> tuple[tuple[Scalar, Expr], ...]:
        return ((ONE, self),)

    def __add__(self, other: Expr) -> Combo:
        return Combo(self.terms() + other.terms())

    def __sub__(self, other: Expr) -> Combo:
        return self + (-1) * other

    def __neg__(self) -> Combo:
        return (-1) * self

    def __rmul__(self, coef) -> Combo:
        c = scalar(coef)
        return Combo(tuple((c * k, t) for k, t in self.terms()))

    def variables(self) -> tuple[str, ...]:
        raise NotImplementedError


@dataclass(frozen=True)
class Var(Expr):
    """A variable ranging over the basis of the named space."""

    name: str
    space: str = "A"

    def variables(self):
        return (self.name,)


@dataclass(frozen=True)
class Const(Expr):
    """A fixed tensor looked up in the environment (for instance a two-tensor r)."""

    name: str

    def variables(self):
        return ()


@dataclass(frozen=True)
class Apply(Expr):
    """A bilinear operation applied to one slot of ``left`` and one of ``right``.

    The result keeps every other slot.  With ``host="left"`` the output takes
    the place of ``left``'s slot and ``right``'s remaining slots follow; with
    ``host="right"`` ``left``'s remaining slots come first and the output
    takes the place of ``right``'s slot.
    """

    op: str
    left: Expr
    right: Expr
    left_slot: int = 0
    right_slot: int = 0
    host: str = "right"

    def variables(self):
        return self.left.variables() + self.right.variables()


@dataclass(frozen=True)
class MapApply(Expr):
    """A linear map applied to one slot."""

    map: str
    arg: Expr
    slot: int = 0

    def variables(self):
        return self.arg.variables()


@dataclass(frozen=True)
class CoApply(Expr):
    """A coproduct applied to one slot, which splits into two adjacent slots."""

    coproduct: str
    arg: Expr
    slot: int = 0

    def variables(self):
        return self.arg.variables()


@dataclass(frozen=True)
class Merge(Expr):
    """A bilinear operation applied to two slots of the same value.

    The output takes the place of ``left_slot`` (``host="left"``) or of
    ``right_slot`` (``host="right"``); the other slot disappears.
    """

    op: str
    arg: Expr
    left_slot: int
    right_slot: int
    host: str = "right"

    def variables(self):
        return self.arg.variables()


@dataclass(frozen=True)
class Outer(Expr):
    """Tensor product: the slots of ``left`` followed by those of ``right``."""

    left: Expr
    right: Expr

    def variables(self):
        return self.left.variables() + self.right.variables()


@dataclass(frozen=True)
class Permute(Expr):
    """Reorder slots: output slot ``m`` is input slot ``perm[m]``."""

    arg: Expr
    perm: tuple[int, ...]

    def variables(self):
        return self.arg.variables()


@dataclass(frozen=True)
class Combo(Expr):
    """A rational linear combination of terms with equal variables and slots."""

    items: tuple[tuple[Scalar, Expr], ...]

    def terms(self):
        return self.items

    def variables(self):
        return self.items[0][1].variables() if self.items else ()


def op(name: str) -> Callable[..., Apply]:
    """Return a helper so identities read ``circ(x, circ(y, z))``."""

    def apply(left: Expr, right: Expr, left_slot: int = 0, right_slot: int = 0, host: str = "right") -> Apply:
        return Apply(name, left, right, left_slot, right_slot, host)

    apply.__name__ = name
    return apply


def variables(names: str, space: str = "A") -> tuple[Var, ...]:
    """``variables("x y z")`` returns three variables over ``space``."""
    return tuple(Var(n, space) for n in names.split())


# ---------------------------------------------------------------------------
# environment and evaluation


@dataclass(frozen=True)
class Environment:
    """Named tensors plus the dimension of every space variables may range over."""

    spaces: Mapping[str, int]
    tensors: Mapping[str, np.ndarray]

    def get(self, name: str) -> np.ndarray:
        try:
            return self.tensors[name]
        except KeyError:
            raise ConfigurationError(f"no tensor named {name!r} is available") from None

    def dim(self, space: str) -> int:
        try:
            return self.spaces[space]
        except KeyError:
            raise ConfigurationError(f"no space named {space!r} is available") from None


@dataclass
class _Val:
    arr: np.ndarray
    vars: tuple[str, ...]
    is_basis: bool = False  # arr is the identity matrix of a lone variable

    @property
    def slots(self) -> int:
        return self.arr.ndim - len(self.vars)


class _Letters:
    def __init__(self):
        self._i = 0

    def take(self, n: int) -> list[str]:
        out = list(_LETTERS[self._i:self._i + n])
        self._i += n
        if len(out) < n:
            raise ConfigurationError("expression too large for einsum subscripts")
        return out


def _check_extent(a: int, b: int, what: str) -> None:
    if a != b:
        raise DimensionError(f"{what}: extent {a} does not match {b}")


class _Evaluator:
    """Evaluates nodes either on all basis tuples or at one assignment."""

    def __init__(self, env: Environment, assignment: Mapping[str, int] | None = None):
        self.env = env
        self.assignment = assignment
        self.cache: dict[Expr, _Val] = {}

    def __call__(self, e: Expr) -> _Val:
        if e in self.cache:
            return self.cache[e]
        val = getattr(self, "_" + type(e).__name__)(e)
        self.cache[e] = val
        return val

    def _Var(self, e: Var) -> _Val:
        n = self.env.dim(e.space)
        if self.assignment is None:
            return _Val(identity(n), (e.name,), is_basis=True)
        return _Val(basis_vector(n, self.assignment[e.name]), ())

    def _Const(self, e: Const) -> _Val:
        return _Val(np.asarray(self.env.get(e.name), dtype=object), ())

    def _Apply(self, e: Apply) -> _Val:
        o = self.env.get(e.op)
        L, R = self(e.left), self(e.right)
        if set(L.vars) & set(R.vars):
            raise ConfigurationError(f"variables {set(L.vars) & set(R.vars)} repeat inside one term")
        _check_extent(L.arr.shape[len(L.vars) + e.left_slot], o.shape[0], f"left argument of {e.op}")
        _check_extent(R.arr.shape[len(R.vars) + e.right_slot], o.shape[1], f"right argument of {e.op}")
        lt = _Letters()
        lv, ls = lt.take(len(L.vars)), lt.take(L.slots)
        rv, rs = lt.take(len(R.vars)), lt.take(R.slots)
        (out,) = lt.take(1)
        a, b = ls[e.left_slot], rs[e.right_slot]
        if e.host == "left":
            slots = [out if s == a else s for s in ls] + [s for s in rs if s != b]
        else:
            slots = [s for s in ls if s != a] + [out if s == b else s for s in rs]
        result = "".join(lv + rv + slots)
        # first contract the left operand into the operation tensor
        if L.is_basis:
            t, t_sub = o, lv[0] + b + out
        else:
            t_sub = "".join(lv + [s for s in ls if s != a]) + b + out
            t = np.einsum(f"{''.join(lv + ls)},{a}{b}{out}->{t_sub}", L.arr, o)
        if R.is_basis:
            arr = np.einsum(f"{t_sub.replace(b, rv[0])}->{result}", t)
        else:
            arr = np.einsum(f"{t_sub},{''.join(rv + rs)}->{result}", t, R.arr)
        return _Val(arr, tuple(L.vars + R.vars))

    def _MapApply(self, e: MapApply) -> _Val:
        m = self.env.get(e.map)
        v = self(e.arg)
        _check_extent(v.arr.shape[len(v.vars) + e.slot], m.shape[1], f"argument of {e.map}")
        lt = _Letters()
        vs, ss = lt.take(len(v.vars)), lt.take(v.slots)
        (k,) = lt.take(1)
        out = [k if i == e.slot else s for i, s in enumerate(ss)]
        arr = np.einsum(f"{''.join(vs + ss)},{k}{ss[e.slot]}->{''.join(vs + out)}", v.arr, m)
        return _Val(arr, v.vars)

    def _CoApply(self, e: CoApply) -> _Val:
        d = self.env.get(e.coproduct)
        v = self(e.arg)
        _check_extent(v.arr.shape[len(v.vars) + e.slot], d.shape[0], f"argument of {e.coproduct}")
        lt = _Letters()
        vs, ss = lt.take(len(v.vars)), lt.take(v.slots)
        i, j = lt.take(2)
        out = ss[:e.slot] + [i, j] + ss[e.slot + 1:]
        arr = np.einsum(f"{''.join(vs + ss)},{ss[e.slot]}{i}{j}->{''.join(vs + out)}", v.arr, d)
        return _Val(arr, v.vars)

    def _Merge(self, e: Merge) -> _Val:
        o = self.env.get(e.op)
        v = self(e.arg)
        if e.left_slot == e.right_slot or not (0 <= e.left_slot < v.slots and 0 <= e.right_slot < v.slots):
            raise ConfigurationError(f"cannot merge slots {e.left_slot} and {e.right_slot} of {v.slots}")
        nv = len(v.vars)
        _check_extent(v.arr.shape[nv + e.left_slot], o.shape[0], f"left argument of {e.op}")
        _check_extent(v.arr.shape[nv + e.right_slot], o.shape[1], f"right argument of {e.op}")
        lt = _Letters()
        vs, ss = lt.take(nv), lt.take(v.slots)
        (out,) = lt.take(1)
        a, b = ss[e.left_slot], ss[e.right_slot]
        keep, drop = (a, b) if e.host == "left" else (b, a)
        slots = [out if s == keep else s for s in ss if s != drop]
        arr = np.einsum(f"{''.join(vs + ss)},{a}{b}{out}->{''.join(vs + slots)}", v.arr, o)
        return _Val(arr, v.vars)

    def _Outer(self, e: Outer) -> _Val:
        L, R = self(e.left), self(e.right)
        if set(L.vars) & set(R.vars):
            raise ConfigurationError(f"variables {set(L.vars) & set(R.vars)} repeat inside one term")
        lt = _Letters()
        lv, ls = lt.take(len(L.vars)), lt.take(L.slots)
        rv, rs = lt.take(len(R.vars)), lt.take(R.slots)
        arr = np.einsum(f"{''.join(lv + ls)},{''.join(rv + rs)}->{''.join(lv + rv + ls + rs)}", L.arr, R.arr)
        return _Val(arr, tuple(L.vars + R.vars))

    def _Permute(self, e: Permute) -> _Val:
        v = self(e.arg)
        nv = len(v.vars)
        if sorted(e.perm) != list(range(v.slots)):
            raise ConfigurationError(f"{e.perm} does not permute {v.slots} slots")
        axes = list(range(nv)) + [nv + p for p in e.perm]
        return _Val(np.transpose(v.arr, axes), v.vars)

    def _Combo(self, e: Combo) -> _Val:
        if not e.items:
            raise ConfigurationError("empty linear combination")
        total = None
        order: tuple[str, ...] = ()
        for coef, term in e.items:
            v = self(term)
            if total is None:
                order = v.vars
            elif set(v.vars) != set(order):
                raise ConfigurationError(f"terms disagree on variables: {v.vars} vs {order}")
            axes = [v.vars.index(n) for n in order] + list(range(len(order), v.arr.ndim))
            arr = np.transpose(v.arr, axes)
            if total is not None and arr.shape != total.shape:
                raise DimensionError(f"terms disagree on shape: {arr.shape} vs {total.shape}")
            total = coef * arr if total is None else total + coef * arr
        return _Val(total, order)


def evaluate_field(expr: Expr, env: Environment, order: Sequence[str] | None = None) -> np.ndarray:
    """All values of ``expr`` on basis tuples, axes ``(*order, *slots)``."""
    v = _Evaluator(env)(expr)
    order = tuple(order) if order is not None else v.vars
    if set(order) != set(v.vars):
        raise ConfigurationError(f"declared variables {order} do not match {v.vars}")
    axes = [v.vars.index(n) for n in order] + list(range(len(order), v.arr.ndim))
    return np.transpose(v.arr, axes)


def evaluate_at(expr: Expr, env: Environment, assignment: Mapping[str, int]) -> np.ndarray:
    """The value of ``expr`` with each variable replaced by a basis vector."""
    return _Evaluator(env, assignment)(expr).arr


# ---------------------------------------------------------------------------
# identities and reports


@dataclass(frozen=True)
class IdentityReport:
    """Outcome of one identity check.

    ``witness`` is the first basis tuple (in the identity's variable order)
    where the identity fails and ``defect`` the flattened nonzero value
    there.  ``reevaluate`` recomputes the defect at the witness through an
    independent route.
    """

    identity_id: str
    holds: bool
    witness: tuple[int, ...] | None = None
    defect: tuple[Scalar, ...] | None = None
    variables: tuple[str, ...] = ()
    description: str = ""
    probe: Callable[[tuple[int, ...]], tuple[Scalar, ...]] | None = field(default=None, compare=False, repr=False)

    def reevaluate(self) -> tuple[Scalar, ...]:
        if self.witness is None or self.probe is None:
            raise ValueError(f"{self.identity_id}: nothing to re-evaluate")
        return self.probe(self.witness)

    def named(self, identity_id: str) -> IdentityReport:
        """The same report under another identifier."""
        return IdentityReport(identity_id, self.holds, self.witness, self.defect, self.variables, self.description, self.probe)

    def __bool__(self) -> bool:
        return self.holds


def _flat(arr) -> tuple[Scalar, ...]:
    return tuple(scalar(v) for v in np.asarray(arr, dtype=object).reshape(-1))


def report_from_field(
    identity_id: str,
    values: np.ndarray,
    var_names: Sequence[str],
    probe: Callable[[tuple[int, ...]], tuple[Scalar, ...]] | None,
    description: str = "",
) -> IdentityReport:
    """Turn a field of values on basis tuples into a report."""
    nv = len(var_names)
    values = np.asarray(values, dtype=object)
    nonzero = values != 0
    if nv and values.size == 0:
        nonzero = np.zeros(values.shape[:nv], dtype=bool)
    elif nv:
        nonzero = nonzero.reshape(values.shape[:nv] + (-1,)).any(axis=-1)
    hits = np.argwhere(nonzero)
    if len(hits) == 0:
        return IdentityReport(identity_id, True, variables=tuple(var_names), description=description, probe=probe)
    witness = tuple(int(i) for i in hits[0]) if nv else ()
    defect = _flat(values[witness])
    return IdentityReport(identity_id, False, witness, defect, tuple(var_names), description, probe)


@dataclass(frozen=True)
class Identity:
    """A named multilinear identity ``expr = 0``."""

    identity_id: str
    expr: Expr
    order: tuple[str, ...] = ()
    description: str = ""

    def __post_init__(self):
        if not self.order:
            object.__setattr__(self, "order", tuple(sorted(set(self.expr.variables()))))

    def field(self, env: Environment) -> np.ndarray:
        return evaluate_field(self.expr, env, self.order)

    def at(self, env: Environment, witness: Sequence[int]) -> tuple[Scalar, ...]:
        return _flat(evaluate_at(self.expr, env, dict(zip(self.order, witness))))

    def check(self, env: Environment) -> IdentityReport:
        return report_from_field(
            self.identity_id, self.field(env), self.order, lambda w: self.at(env, w), self.description
        )


def check_all(identities: Sequence[Identity], env: Environment) -> list[IdentityReport]:
    return [ident.check(env) for ident in identities]


def all_hold(reports: Sequence[IdentityReport]) -> bool:
    return all(r.holds for r in reports)


def failing(reports: Sequence[IdentityReport]) -> list[IdentityReport]:
    return [r for r in reports if not r.holds]
